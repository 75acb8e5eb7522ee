use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use osmat::coloration::{exists_regular, search_regular_with, SearchOptions};
use osmat::field::parse_rational;
use osmat::io::{matroid_from_json, matroid_to_json};
use osmat::os::{extend_iso_to_free_ext, search_iso, DEFAULT_SEARCH_BUDGET};
use osmat::poly::format_series;
use osmat::realization::{m1, m2};
use osmat::resonance::{coloration_candidate_space, ResonanceContext};
use osmat::{
    char_poly, generate, hilbert_series, is_regular, local_components, max_regular_k, tutte, verify_free_ext_ideal_eq,
    verify_graded_map, BivariatePoly, Coloration, ElementSet, FamilySpec, LambdaVector, Matroid,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "osmat",
    version,
    about = "Tutte polynomials, Orlik-Solomon algebras, resonance and regular colorations"
)]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named matroid as JSON.
    Gen {
        /// u:R,N | p5 | m1 | m2 | ngon:K | a112 | ag:Q
        #[arg(long)]
        family: FamilySpec,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Tutte polynomial, or its value at (X, Y).
    Tutte {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        eval: Option<Vec<String>>,
    },
    /// Characteristic polynomial.
    Charpoly { file: PathBuf },
    /// Hilbert series of the Orlik-Solomon algebra.
    OsHilbert { file: PathBuf },
    /// Cohomology of the Aomoto complex and first resonance.
    Resonance(ResonanceArgs),
    /// Regular colorations.
    Color(ColorArgs),
    /// Self-checking reports: counterexample pair, free extension ideals, coloration bound.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Args)]
struct ResonanceArgs {
    file: PathBuf,
    #[command(flatten)]
    mode: ResonanceMode,
    /// Degree of the cohomology group.
    #[arg(long, default_value_t = 1, requires = "lambda")]
    p: usize,
    /// Seed for the random combination in the candidate check.
    #[arg(long, default_value_t = 1, requires = "coloration")]
    seed: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ResonanceMode {
    /// Comma-separated rationals, e.g. 1,-1,0,2/3.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// List the components coming from lines with at least three points.
    #[arg(long)]
    local: bool,
    /// Coloration JSON whose candidate space should be checked.
    #[arg(long, value_name = "CFILE")]
    coloration: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    file: PathBuf,
    #[command(flatten)]
    mode: ColorMode,
    /// Stop after this many colorations.
    #[arg(long, requires = "enumerate")]
    limit: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ColorMode {
    /// List all regular colorations with exactly K classes.
    #[arg(long, value_name = "K")]
    enumerate: Option<usize>,
    /// Largest K >= 3 admitting a regular coloration (1 if none).
    #[arg(long)]
    max_k: bool,
    /// Check whether the coloration in CFILE is regular.
    #[arg(long, value_name = "CFILE")]
    check: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verify {
    /// Rebuild M1 and M2 and check the pair's invariants.
    Counterexample {
        /// Candidate budget for the isomorphism search on the deletions.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Ideal of the free extension against the ideal built from I(M).
    FreeExt { file: PathBuf },
    /// No regular coloration with four or more classes.
    Sylvester {
        #[arg(long)]
        family: FamilySpec,
    },
}

/// Outcome of a command that printed its report: whether every check held.
struct Outcome {
    ok: bool,
}

impl Outcome {
    fn pass() -> Self {
        Outcome { ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { ok: true }) => ExitCode::SUCCESS,
        Ok(Outcome { ok: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let out = Printer { json: cli.json };
    match &cli.command {
        Command::Gen { family, output } => gen(&out, *family, output),
        Command::Tutte { file, eval } => tutte_cmd(&out, file, eval.as_deref()),
        Command::Charpoly { file } => {
            let m = load(file)?;
            let chi = char_poly(&m)?;
            out.emit(&chi.to_string(), json!({ "char_poly": chi.to_string(), "coeffs": int_list(chi.coeffs()) }));
            Ok(Outcome::pass())
        }
        Command::OsHilbert { file } => {
            let m = load(file)?;
            let h = hilbert_series(&m)?;
            out.emit(&format_series(&h), json!({ "dims": h }));
            Ok(Outcome::pass())
        }
        Command::Resonance(args) => resonance(&out, args),
        Command::Color(args) => color(&out, args),
        Command::Verify(Verify::Counterexample { budget }) => counterexample(&out, *budget),
        Command::Verify(Verify::FreeExt { file }) => free_ext(&out, file),
        Command::Verify(Verify::Sylvester { family }) => sylvester(&out, *family),
    }
}

struct Printer {
    json: bool,
}

impl Printer {
    /// A closed stdout (e.g. piped into `head`) is not an error worth reporting.
    fn emit(&self, text: &str, value: Value) {
        let body =
            if self.json { serde_json::to_string_pretty(&value).expect("values serialize") } else { text.into() };
        let _ = writeln!(std::io::stdout().lock(), "{body}");
    }
}

fn load(path: &Path) -> Result<Matroid> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    matroid_from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_coloration(path: &Path, n: usize) -> Result<Coloration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Coloration::from_json(n, &text).with_context(|| format!("parsing {}", path.display()))
}

fn int_list(c: &[i128]) -> Vec<Value> {
    c.iter().map(|&x| i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)).collect()
}

fn poly_json(t: &BivariatePoly) -> Value {
    let terms: Vec<Value> = t.terms().map(|(i, j, c)| json!([i, j, int_list(&[c])[0]])).collect();
    json!({ "text": t.to_string(), "terms": terms })
}

fn sets_json(sets: &[ElementSet]) -> Value {
    sets.iter().map(|s| s.labels()).collect()
}

fn gen(out: &Printer, family: FamilySpec, output: &Path) -> Result<Outcome> {
    let g = generate(family)?;
    let m = match g.realization {
        Some(v) => Matroid::from_vectors(g.matroid.name(), v)?,
        None => g.matroid,
    };
    fs::write(output, matroid_to_json(&m) + "\n").with_context(|| format!("writing {}", output.display()))?;
    out.emit(
        &format!("wrote {} ({family}: n={} r={})", output.display(), m.n(), m.rank()),
        json!({ "file": output.display().to_string(), "family": family.to_string(), "n": m.n(), "rank": m.rank() }),
    );
    Ok(Outcome::pass())
}

fn tutte_cmd(out: &Printer, file: &Path, eval: Option<&[String]>) -> Result<Outcome> {
    let m = load(file)?;
    let t = tutte(&m)?;
    match eval {
        Some([x, y]) => {
            let v = t.eval(&parse_rational(x)?, &parse_rational(y)?);
            out.emit(&v.to_string(), json!({ "x": x, "y": y, "value": v.to_string() }));
        }
        Some(_) => bail!("--eval takes two values"),
        None => out.emit(&t.to_string(), json!({ "tutte": poly_json(&t) })),
    }
    Ok(Outcome::pass())
}

fn resonance(out: &Printer, args: &ResonanceArgs) -> Result<Outcome> {
    let m = load(&args.file)?;
    if let Some(csv) = &args.mode.lambda {
        let lambda: LambdaVector = csv.parse()?;
        let r = ResonanceContext::new(&m)?.hp_dim(&lambda, args.p)?;
        out.emit(
            &format!("p={} kernel={} image={} H={} member={}", r.p, r.kernel, r.image, r.h, r.member()),
            json!({ "p": r.p, "kernel": r.kernel, "image": r.image, "h": r.h, "member": r.member() }),
        );
    } else if args.mode.local {
        let comps = local_components(&m);
        let text: Vec<String> = comps
            .iter()
            .map(|c| {
                let basis: Vec<String> = c.basis.iter().map(|b| b.to_string()).collect();
                format!("flat {} dim {} basis {}", c.flat, c.dim(), basis.join(" ; "))
            })
            .chain(std::iter::once(format!("{} local components", comps.len())))
            .collect();
        let value: Vec<Value> = comps
            .iter()
            .map(|c| {
                let basis: Vec<String> = c.basis.iter().map(|b| b.to_string()).collect();
                json!({ "flat": c.flat.labels(), "dim": c.dim(), "basis": basis })
            })
            .collect();
        out.emit(&text.join("\n"), json!({ "components": value }));
    } else if let Some(path) = &args.mode.coloration {
        let pi = load_coloration(path, m.n())?;
        let report = coloration_candidate_space(&m, &pi, args.seed)?;
        let mut text = vec![format!("coloration {pi} candidate space dim {}", report.dim())];
        for b in &report.basis {
            text.push(format!("basis {b}"));
        }
        for c in &report.checks {
            text.push(format!("{} lambda={} H1={} member={}", c.label, c.lambda, c.h1, c.h1 > 0));
        }
        text.push(if report.all_members() { "ALL SAMPLES RESONANT" } else { "SOME SAMPLES NOT RESONANT" }.into());
        let none_resonant = report.checks.iter().all(|c| c.h1 == 0);
        if none_resonant {
            text.push(
                "note: no full-support candidate is resonant; colorations of submatroids are not searched".into(),
            );
        }
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "label": c.label, "lambda": c.lambda.to_string(), "h1": c.h1 }))
            .collect();
        let basis: Vec<String> = report.basis.iter().map(|b| b.to_string()).collect();
        out.emit(
            &text.join("\n"),
            json!({
                "dim": report.dim(),
                "basis": basis,
                "checks": checks,
                "all_members": report.all_members(),
                "none_resonant": none_resonant,
            }),
        );
    }
    Ok(Outcome::pass())
}

fn color(out: &Printer, args: &ColorArgs) -> Result<Outcome> {
    let m = load(&args.file)?;
    if let Some(k) = args.mode.enumerate {
        let found = search_regular_with(&m, k, SearchOptions { limit: args.limit, ..SearchOptions::default() })?;
        let mut text: Vec<String> = found.iter().map(|c| c.to_string()).collect();
        text.push(format!("{} regular colorations with {k} classes", found.len()));
        let value: Vec<Value> = found.iter().map(|c| sets_json(c.classes())).collect();
        out.emit(&text.join("\n"), json!({ "k": k, "count": found.len(), "colorations": value }));
        Ok(Outcome::pass())
    } else if args.mode.max_k {
        let k = max_regular_k(&m)?;
        out.emit(&format!("max_k={k}"), json!({ "max_k": k }));
        Ok(Outcome::pass())
    } else if let Some(path) = &args.mode.check {
        let pi = load_coloration(path, m.n())?;
        let ok = is_regular(&m, &pi)?;
        out.emit(
            &format!("{pi} {}", if ok { "REGULAR" } else { "NOT REGULAR" }),
            json!({ "coloration": sets_json(pi.classes()), "regular": ok }),
        );
        Ok(Outcome { ok })
    } else {
        unreachable!("clap requires one mode")
    }
}

fn counterexample(out: &Printer, budget: u64) -> Result<Outcome> {
    let (a, b) = (m1()?, m2()?);
    let (ta, tb) = (tutte(&a)?, tutte(&b)?);
    let (ba, bb) = (a.bases_count()?, b.bases_count()?);
    let (va, vb) = (ta.eval_int(1, 1), tb.eval_int(1, 1));
    let (ha, hb) = (hilbert_series(&a)?, hilbert_series(&b)?);
    let counts_ok = ba == 27 && bb == 26 && va == 27.into() && vb == 26.into();
    let differ = ta != tb;
    let hilbert_equal = ha == hb;

    let seven = 6;
    let lines = |m: &Matroid| m.long_lines();
    let (la, lb) = (lines(&a), lines(&b));
    let free_ok = la.iter().chain(&lb).all(|l| !l.contains(seven));
    let union_rank = |l: &[ElementSet]| l.iter().fold(ElementSet::default(), |u, x| u.union(*x));
    let (ra, rb) = (a.rank_of(union_rank(&la)), b.rank_of(union_rank(&lb)));
    let shape_ok = la.len() == 2 && lb.len() == 2 && ra == 4 && rb == 3;
    let dims = |m: &Matroid| {
        let mut d: Vec<usize> = local_components(m).iter().map(|c| c.dim()).collect();
        d.sort_unstable();
        d
    };
    let local_ok = dims(&a) == dims(&b);

    let (da, db) = (a.delete(ElementSet::singleton(seven))?, b.delete(ElementSet::singleton(seven))?);
    let search = search_iso(&da, &db, budget)?;
    let iso = match &search.map {
        Some(phi) if verify_graded_map(&da, &db, phi)? => {
            let ext = extend_iso_to_free_ext(&da, &db, phi)?;
            verify_graded_map(&a, &b, &ext)?.then_some((phi.clone(), ext))
        }
        _ => None,
    };

    let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
    let mut text = vec![format!(
        "T_M1(1,1)={va}  T_M2(1,1)={vb}  TUTTE {}  HILBERT {}",
        if differ { "DIFFER" } else { "EQUAL" },
        if hilbert_equal { "EQUAL" } else { "DIFFER" }
    )];
    text.push(format!("bases M1={ba} M2={bb} {}", verdict(counts_ok)));
    text.push(format!("T_M1 = {ta}"));
    text.push(format!("T_M2 = {tb}"));
    text.push(format!("hilbert M1: {}", format_series(&ha)));
    text.push(format!("hilbert M2: {}", format_series(&hb)));
    let show = |l: &[ElementSet]| l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    text.push(format!(
        "long lines M1: {} (union rank {ra})  M2: {} (union rank {rb})  element 7 on none: {} {}",
        show(&la),
        show(&lb),
        free_ok,
        verdict(shape_ok && free_ok)
    ));
    text.push(format!("local components M1 dims {:?}  M2 dims {:?} {}", dims(&a), dims(&b), verdict(local_ok)));
    match &iso {
        Some(_) => text.push(format!(
            "OS ISOMORPHISM FOUND after {} candidates: OS(M1\\7) ~ OS(M2\\7) extends to OS(M1) ~ OS(M2) (verified)",
            search.candidates
        )),
        None => text.push(format!(
            "OS isomorphism not found after {} candidates{}; necessary conditions {}",
            search.candidates,
            if search.exhausted { " (family exhausted)" } else { "" },
            if hilbert_equal && local_ok { "all passed" } else { "FAILED" }
        )),
    }
    let ok = counts_ok && differ && hilbert_equal && free_ok && shape_ok && local_ok;
    text.push(if ok { "COUNTEREXAMPLE VERIFIED".into() } else { "COUNTEREXAMPLE NOT VERIFIED".to_string() });
    out.emit(
        &text.join("\n"),
        json!({
            "bases": [ba, bb],
            "t11": [va.to_string(), vb.to_string()],
            "tutte": [poly_json(&ta), poly_json(&tb)],
            "tutte_differ": differ,
            "hilbert": [ha, hb],
            "hilbert_equal": hilbert_equal,
            "long_lines": [sets_json(&la), sets_json(&lb)],
            "union_ranks": [ra, rb],
            "free_element_on_no_line": free_ok,
            "local_dims_match": local_ok,
            "os_isomorphism": iso.as_ref().map(|(phi, ext)| json!({
                "deletion_map": serde_json::from_str::<Value>(&phi.to_json()).expect("valid JSON"),
                "extended_map": serde_json::from_str::<Value>(&ext.to_json()).expect("valid JSON"),
            })),
            "search_candidates": search.candidates,
            "verified": ok,
        }),
    );
    Ok(Outcome { ok })
}

fn free_ext(out: &Printer, file: &Path) -> Result<Outcome> {
    let m = load(file)?;
    let report = verify_free_ext_ideal_eq(&m)?;
    let mut text: Vec<String> = report
        .degrees
        .iter()
        .map(|d| {
            format!(
                "p={} free_ext={} generated={} sum={} {}",
                d.p,
                d.lhs,
                d.rhs,
                d.sum,
                if d.equal() { "ok" } else { "DIFFER" }
            )
        })
        .collect();
    text.push(if report.equal() { "IDEALS EQUAL".into() } else { "IDEALS DIFFER".to_string() });
    let degrees: Vec<Value> = report
        .degrees
        .iter()
        .map(|d| json!({ "p": d.p, "free_ext": d.lhs, "generated": d.rhs, "sum": d.sum, "equal": d.equal() }))
        .collect();
    out.emit(&text.join("\n"), json!({ "degrees": degrees, "equal": report.equal() }));
    Ok(Outcome { ok: report.equal() })
}

fn sylvester(out: &Printer, family: FamilySpec) -> Result<Outcome> {
    let g = generate(family)?;
    let m = &g.matroid;
    if m.rank() != 3 {
        bail!("{family} has rank {}, the coloration bound concerns rank 3", m.rank());
    }
    let mut text = Vec::new();
    let mut violations = Vec::new();
    for k in 4..=m.n() {
        let found = exists_regular(m, k)?;
        if found {
            violations.push(k);
        }
        text.push(format!("k={k} {}", if found { "REGULAR COLORATION EXISTS" } else { "none" }));
    }
    let real = g.realization.is_some();
    if !real {
        text.push(format!("note: no real realization is known for {family}"));
    }
    let ok = violations.is_empty();
    text.push(if ok {
        "NO REGULAR COLORATION WITH k >= 4".into()
    } else {
        format!("REGULAR COLORATIONS FOR k = {violations:?}")
    });
    out.emit(
        &text.join("\n"),
        json!({ "family": family.to_string(), "violations": violations, "real": real, "ok": ok }),
    );
    Ok(Outcome { ok })
}
