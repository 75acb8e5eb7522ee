//! Canonical keys and explicit isomorphisms.
//!
//! For `n <= EXACT_KEY_LIMIT` the key is the lexicographically least rank
//! table over all relabellings that list elements in non-decreasing invariant
//! order, so key equality is exactly isomorphism. Beyond that the key is an
//! invariant-refinement hash and is flagged as inexact.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::Matroid;
use crate::error::{check_capacity, Result};
use crate::subset::ElementSet;

pub const EXACT_KEY_LIMIT: usize = 9;
const KEY_LIMIT: usize = 64;
const ISO_LIMIT: usize = 10;

/// `perm[i]` is the image of element `i` (0-based).
pub type Permutation = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    pub exact: bool,
    bytes: Vec<u8>,
}

impl CanonicalKey {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// Per-element invariant: number of circuits of each size through the element.
fn element_invariants(m: &Matroid) -> Vec<Vec<u32>> {
    let n = m.n();
    let mut inv = vec![vec![0u32; n + 2]; n];
    for c in m.circuits() {
        for e in c.iter() {
            inv[e][c.len()] += 1;
        }
    }
    inv
}

pub fn canonical_key(m: &Matroid) -> Result<CanonicalKey> {
    check_capacity("canonical_key", KEY_LIMIT, m.n())?;
    if m.n() <= EXACT_KEY_LIMIT {
        Ok(exact_key(m))
    } else {
        Ok(refinement_key(m))
    }
}

fn exact_key(m: &Matroid) -> CanonicalKey {
    let n = m.n();
    let t = m.table().expect("rank table for small n");
    let inv = element_invariants(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut sorted_inv: Vec<&Vec<u32>> = order.iter().map(|&e| &inv[e]).collect();
    sorted_inv.dedup();

    // (x y) is an automorphism iff the table is invariant under the swap.
    let swap_auto = |x: usize, y: usize| {
        (0..t.len()).all(|s| {
            let bx = s >> x & 1;
            let by = s >> y & 1;
            let sw = if bx == by { s } else { s ^ (1 << x) ^ (1 << y) };
            t[s] == t[sw]
        })
    };
    let mut twin = vec![usize::MAX; n];
    for x in 0..n {
        if twin[x] == usize::MAX {
            twin[x] = x;
            for y in x + 1..n {
                if twin[y] == usize::MAX && inv[x] == inv[y] && swap_auto(x, y) {
                    twin[y] = x;
                }
            }
        }
    }

    let mut search = KeySearch { t, inv: &inv, twin: &twin, n, best: None };
    let mut cur = vec![t[0]];
    search.descend(&mut Vec::new(), &mut cur);

    let mut bytes = vec![n as u8, m.rank() as u8];
    for i in &sorted_inv {
        let count = inv.iter().filter(|v| v == i).count();
        bytes.push(count as u8);
        bytes.extend(i.iter().flat_map(|c| c.to_le_bytes()));
    }
    bytes.extend(search.best.unwrap_or_else(|| vec![t[0]]));
    CanonicalKey { exact: true, bytes }
}

struct KeySearch<'a> {
    t: &'a [u8],
    inv: &'a [Vec<u32>],
    twin: &'a [usize],
    n: usize,
    best: Option<Vec<u8>>,
}

impl KeySearch<'_> {
    /// `assigned[j]` is the original element receiving new label `j`; `cur`
    /// holds the rank table over new labels for all masks below `2^k`.
    fn descend(&mut self, assigned: &mut Vec<usize>, cur: &mut Vec<u8>) {
        let k = assigned.len();
        if let Some(best) = &self.best {
            match cur[..].cmp(&best[..cur.len()]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less if k == self.n => {
                    self.best = Some(cur.clone());
                    return;
                }
                _ => {}
            }
        }
        if k == self.n {
            if self.best.is_none() {
                self.best = Some(cur.clone());
            }
            return;
        }
        let used: ElementSet = ElementSet::from_indices(assigned.iter().copied());
        let min_inv = (0..self.n).filter(|&e| !used.contains(e)).map(|e| &self.inv[e]).min().unwrap();
        let mut tried_twins = Vec::new();
        for x in 0..self.n {
            if used.contains(x) || &self.inv[x] != min_inv || tried_twins.contains(&self.twin[x]) {
                continue;
            }
            tried_twins.push(self.twin[x]);
            let base = cur.len();
            assigned.push(x);
            // New masks have bit k set; map each to original elements.
            for low in 0..base {
                let orig = assigned[..k]
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| low >> j & 1 == 1)
                    .fold(1usize << x, |acc, (_, &e)| acc | 1 << e);
                cur.push(self.t[orig]);
            }
            self.descend(assigned, cur);
            cur.truncate(base);
            assigned.pop();
        }
    }
}

fn refinement_key(m: &Matroid) -> CanonicalKey {
    let n = m.n();
    let hash = |x: &dyn Fn(&mut DefaultHasher)| {
        let mut h = DefaultHasher::new();
        x(&mut h);
        h.finish()
    };
    let mut colors: Vec<u64> = element_invariants(m).iter().map(|v| hash(&|h| v.hash(h))).collect();
    for _ in 0..3 {
        let mut contexts: Vec<Vec<(usize, Vec<u64>)>> = vec![Vec::new(); n];
        for c in m.circuits() {
            let mut cs: Vec<u64> = c.iter().map(|e| colors[e]).collect();
            cs.sort_unstable();
            for e in c.iter() {
                contexts[e].push((c.len(), cs.clone()));
            }
        }
        colors = (0..n)
            .map(|e| {
                let mut ctx = std::mem::take(&mut contexts[e]);
                ctx.sort_unstable();
                let own = colors[e];
                hash(&|h| {
                    own.hash(h);
                    ctx.hash(h);
                })
            })
            .collect();
    }
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    let mut by_size: HashMap<usize, u64> = HashMap::new();
    for c in m.circuits() {
        *by_size.entry(c.len()).or_default() += 1;
    }
    let mut sizes: Vec<_> = by_size.into_iter().collect();
    sizes.sort_unstable();
    let mut bytes = vec![n as u8, m.rank() as u8];
    for (s, c) in sizes {
        bytes.push(s as u8);
        bytes.extend(c.to_le_bytes());
    }
    for c in sorted {
        bytes.extend(c.to_le_bytes());
    }
    CanonicalKey { exact: false, bytes }
}

/// A bijection carrying the circuits of `m1` onto those of `m2`, if any.
pub fn find_isomorphism(m1: &Matroid, m2: &Matroid) -> Result<Option<Permutation>> {
    check_capacity("find_isomorphism", ISO_LIMIT, m1.n().max(m2.n()))?;
    if m1.n() != m2.n() || m1.rank() != m2.rank() || m1.circuits().len() != m2.circuits().len() {
        return Ok(None);
    }
    let n = m1.n();
    let (t1, t2) = (m1.table().unwrap(), m2.table().unwrap());
    let (inv1, inv2) = (element_invariants(m1), element_invariants(m2));
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn extend(
        t1: &[u8],
        t2: &[u8],
        inv1: &[Vec<u32>],
        inv2: &[Vec<u32>],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = image.len();
        if k == inv1.len() {
            return true;
        }
        for y in 0..inv2.len() {
            if used[y] || inv1[k] != inv2[y] {
                continue;
            }
            image.push(y);
            // Every subset containing the new element must keep its rank.
            let consistent = (0..1usize << k).all(|low| {
                let (mut a, mut b) = (1usize << k, 1usize << y);
                for (j, &img) in image[..k].iter().enumerate() {
                    if low >> j & 1 == 1 {
                        a |= 1 << j;
                        b |= 1 << img;
                    }
                }
                t1[a] == t2[b]
            });
            if consistent {
                used[y] = true;
                if extend(t1, t2, inv1, inv2, image, used) {
                    return true;
                }
                used[y] = false;
            }
            image.pop();
        }
        false
    }

    Ok(extend(t1, t2, &inv1, &inv2, &mut image, &mut used).then_some(image))
}
