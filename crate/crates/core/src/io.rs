//! JSON interchange for matroids. Elements are 1-based; circuit and basis
//! lists are written sorted by (size, lex).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{parse_rational, Matrix, QuadExt, QuadExtJson};
use crate::matroid::{Backing, Matroid, VectorConfig};
use crate::subset::{sort_size_lex, ElementSet};

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    name: String,
    n: usize,
    backing: BackingJson,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum BackingJson {
    Circuits(Vec<Vec<usize>>),
    Bases(Vec<Vec<usize>>),
    Vectors(VectorsJson),
}

#[derive(Serialize, Deserialize)]
struct VectorsJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

fn sets_to_json(sets: &[ElementSet]) -> Vec<Vec<usize>> {
    let mut sorted = sets.to_vec();
    sort_size_lex(&mut sorted);
    sorted.into_iter().map(|s| s.labels()).collect()
}

fn sets_from_json(n: usize, sets: &[Vec<usize>]) -> Result<Vec<ElementSet>> {
    sets.iter()
        .map(|s| {
            if let Some(&bad) = s.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::Parse(format!("element {bad} outside 1..={n}")));
            }
            let set = ElementSet::from_labels(s);
            if set.len() != s.len() {
                return Err(Error::Parse(format!("repeated element in {s:?}")));
            }
            Ok(set)
        })
        .collect()
}

pub fn matroid_to_json(m: &Matroid) -> String {
    let backing = match m.backing() {
        Backing::Circuits(c) => BackingJson::Circuits(sets_to_json(c)),
        Backing::Bases(b) => BackingJson::Bases(sets_to_json(b)),
        Backing::Vectors(VectorConfig::Rational(a)) => BackingJson::Vectors(VectorsJson {
            rows: a.rows(),
            cols: a.cols(),
            entries: (0..a.rows()).map(|i| a.row(i).iter().map(|x| Value::String(x.to_string())).collect()).collect(),
        }),
        Backing::Vectors(VectorConfig::Quadratic(a)) => BackingJson::Vectors(VectorsJson {
            rows: a.rows(),
            cols: a.cols(),
            entries: (0..a.rows())
                .map(|i| {
                    a.row(i).iter().map(|x| serde_json::to_value(QuadExtJson::from(x)).expect("serializable")).collect()
                })
                .collect(),
        }),
    };
    let j = MatroidJson { name: m.name().to_string(), n: m.n(), backing };
    serde_json::to_string_pretty(&j).expect("serializable")
}

pub fn matroid_from_json(text: &str) -> Result<Matroid> {
    let j: MatroidJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match j.backing {
        BackingJson::Circuits(c) => {
            let circuits = sets_from_json(j.n, &c)?;
            if j.n == 0 {
                return Ok(Matroid::empty().with_name(j.name));
            }
            Matroid::from_circuits(j.name, j.n, circuits)
        }
        BackingJson::Bases(b) => Matroid::from_bases(j.name, j.n, sets_from_json(j.n, &b)?),
        BackingJson::Vectors(v) => {
            if v.cols != j.n {
                return Err(Error::Parse(format!("vector configuration has {} columns but n = {}", v.cols, j.n)));
            }
            if v.entries.len() != v.rows || v.entries.iter().any(|r| r.len() != v.cols) {
                return Err(Error::Parse("vector entries do not match rows x cols".into()));
            }
            let quadratic = v.entries.iter().flatten().any(Value::is_object);
            let config = if quadratic {
                let rows = v
                    .entries
                    .iter()
                    .map(|r| r.iter().map(parse_quad).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                VectorConfig::Quadratic(Matrix::from_rows_dims(v.rows, v.cols, rows)?)
            } else {
                let rows = v
                    .entries
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| match x {
                                Value::String(s) => parse_rational(s),
                                Value::Number(n) => parse_rational(&n.to_string()),
                                other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                VectorConfig::Rational(Matrix::from_rows_dims(v.rows, v.cols, rows)?)
            };
            Matroid::from_vectors(j.name, config)
        }
    }
}

fn parse_quad(x: &Value) -> Result<QuadExt> {
    match x {
        Value::String(s) => Ok(QuadExt::rational(parse_rational(s)?)),
        Value::Object(_) => {
            let q: QuadExtJson = serde_json::from_value(x.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            QuadExt::try_from(&q)
        }
        other => Err(Error::Parse(format!("bad matrix entry {other}"))),
    }
}
