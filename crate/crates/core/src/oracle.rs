//! Brute-force ground truth for the formula-based modules.
//!
//! Nothing here calls into the closed-form paths it is compared against:
//! faces are enumerated from the facets, generators are found by exhaustive
//! search over independent pairs, and posets are generated by raw relation
//! enumeration with canonical-form deduplication.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::dual_ideal::{
    dual_facets, generators_oracle, is_independent_pair, support_set, theorem_generators,
    DualComplex, Family, PairMonomial,
};
use crate::error::{Error, Result};
use crate::level::{binomial, h_vector, s_complex, standard_monomials, HVector};
use crate::par;
use crate::poset::Poset;
use crate::semilattice::{MeetSemilattice, SetFamily};
use crate::subset::Subset;

/// Largest `|P|` for which faces of the dual are enumerated.
pub const FACE_MAX_RANK: usize = 14;

/// f-vector `f_{-1} .. f_{n-1}` of the dual by collecting every subset of
/// every facet.
pub fn enumerate_faces(d: &DualComplex) -> Result<Vec<u64>> {
    let n = d.rank;
    if n > FACE_MAX_RANK {
        return Err(Error::TooLarge {
            what: "dual complex rank",
            size: n,
            limit: FACE_MAX_RANK,
        });
    }
    let mut faces: HashSet<u64> = HashSet::new();
    for &(x, y) in &d.facets {
        let packed = Subset::from_bits(x.bits() | y.bits() << n);
        faces.extend(packed.subsets().map(Subset::bits));
    }
    let mut f = vec![0u64; n + 1];
    for face in faces {
        f[face.count_ones() as usize] += 1;
    }
    Ok(f)
}

/// Inverse of the f-from-h transform:
/// `h_k = sum_{i <= k} (-1)^(k-i) C(d - i, k - i) f_{i-1}`.
pub fn f_to_h(f: &[i64], d: usize) -> Vec<i64> {
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial((d - i) as u64, (k - i) as u64) as i64
                        * f.get(i).copied().unwrap_or(0)
                })
                .sum()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub counterexample: Option<Value>,
    /// Set when the comparison does not apply to this input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl CheckResult {
    fn verdict(name: &'static str, counterexample: Option<Value>) -> Self {
        CheckResult {
            name,
            pass: counterexample.is_none(),
            counterexample,
            skipped: None,
        }
    }

    fn skip(name: &'static str, why: String) -> Self {
        CheckResult {
            name,
            pass: true,
            counterexample: None,
            skipped: Some(why),
        }
    }

    fn failed(name: &'static str, err: Error) -> Self {
        Self::verdict(name, Some(json!({ "error": err.to_string() })))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CrossCheckReport {
    pub checks: Vec<CheckResult>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_H_VECTOR: &str = "h_formula_vs_face_enumeration";
pub const CHECK_GENERATORS: &str = "theorem_vs_oracle_generators";
pub const CHECK_STANDARD: &str = "standard_monomials_vs_s_sets";
pub const CHECK_DETECTORS: &str = "meet_distributivity_detectors";
pub const CHECK_MEMBERSHIP: &str = "generator_membership";

fn not_md(l: &MeetSemilattice, w: usize) -> String {
    format!("not meet-distributive (witness `{}`)", l.id(w))
}

fn monomial_list(v: impl IntoIterator<Item = (Subset, Subset)>, l: &MeetSemilattice) -> Value {
    let mut names: Vec<String> = v
        .into_iter()
        .map(|(x, y)| PairMonomial::classify(l, x, y).to_string())
        .collect();
    names.sort();
    json!(names)
}

/// Run all five comparisons on one input.
pub fn cross_check(l: &MeetSemilattice) -> CrossCheckReport {
    let md = l.is_meet_distributive();
    let embed = l.embedding_check();
    let dual = dual_facets(l);
    let mut checks = Vec::with_capacity(5);

    checks.push(match md.witness {
        Some(w) => CheckResult::skip(CHECK_H_VECTOR, not_md(l, w)),
        None => match (h_vector(l), enumerate_faces(&dual)) {
            (Ok(h), Ok(f)) => {
                let f: Vec<i64> = f.iter().map(|&v| v as i64).collect();
                let from_faces = f_to_h(&f, l.rank());
                let formula: Vec<i64> = h.as_slice().iter().map(|&v| v as i64).collect();
                CheckResult::verdict(
                    CHECK_H_VECTOR,
                    (formula != from_faces)
                        .then(|| json!({ "formula": formula, "face_enumeration": from_faces })),
                )
            }
            (Err(e), _) | (_, Err(e)) => CheckResult::failed(CHECK_H_VECTOR, e),
        },
    });

    let thm = theorem_generators(l);
    checks.push(match generators_oracle(l) {
        Ok(oracle) => {
            let a = support_set(&thm);
            let b = support_set(&oracle);
            CheckResult::verdict(
                CHECK_GENERATORS,
                (a != b).then(|| {
                    json!({
                        "theorem_only": monomial_list(a.difference(&b).copied(), l),
                        "oracle_only": monomial_list(b.difference(&a).copied(), l),
                    })
                }),
            )
        }
        Err(e) => CheckResult::failed(CHECK_GENERATORS, e),
    });

    checks.push(match md.witness {
        Some(w) => CheckResult::skip(CHECK_STANDARD, not_md(l, w)),
        None => match (standard_monomials(l), s_complex(l)) {
            (Ok(sm), Ok(s)) => {
                let sm: BTreeSet<Subset> = sm.into_iter().collect();
                let faces: BTreeSet<Subset> = s.faces.iter().copied().collect();
                let injective = faces.len() == s.faces.len();
                CheckResult::verdict(
                    CHECK_STANDARD,
                    (sm != faces || !injective).then(|| {
                        let show = |v: &BTreeSet<Subset>| -> Vec<Vec<usize>> {
                            v.iter()
                                .map(|t| t.iter().map(|i| i + 1).collect())
                                .collect()
                        };
                        json!({
                            "standard_only": show(&sm.difference(&faces).copied().collect()),
                            "s_only": show(&faces.difference(&sm).copied().collect()),
                            "s_injective": injective,
                        })
                    }),
                )
            }
            (Err(e), _) | (_, Err(e)) => CheckResult::failed(CHECK_STANDARD, e),
        },
    });

    checks.push(CheckResult::verdict(
        CHECK_DETECTORS,
        (md.holds != embed).then(|| {
            json!({
                "interval_test": md.holds,
                "embedding_test": embed,
                "witness": md.witness.map(|w| l.id(w).to_string()),
            })
        }),
    ));

    let bad = thm.iter().find(|g| {
        let in_ideal = match g.family {
            Family::Diagonal => true,
            _ => is_independent_pair(l, g.x, g.y).unwrap_or(false),
        };
        !in_ideal || dual.contains_face(g.x, g.y)
    });
    checks.push(CheckResult::verdict(
        CHECK_MEMBERSHIP,
        bad.map(|g| json!(g.to_string())),
    ));

    CrossCheckReport { checks }
}

/// Cross-check many inputs; report order follows input order.
pub fn cross_check_all(inputs: &[MeetSemilattice]) -> Vec<CrossCheckReport> {
    par::map(inputs, cross_check)
}

/// Largest poset size accepted by [`unlabeled_posets`].
pub const SCAN_MAX: usize = 5;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Bit `i * n + j` set when `i < j`.
fn relabel(rel: u32, n: usize, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for i in 0..n {
        for j in 0..n {
            if rel >> (i * n + j) & 1 == 1 {
                out |= 1 << (perm[i] * n + perm[j]);
            }
        }
    }
    out
}

/// One representative per isomorphism class of posets on `n` elements.
///
/// Every poset has a natural labelling, so strict relations contained in
/// `i < j` index pairs reach every class; the canonical form is the
/// smallest relation matrix over all relabellings.
pub fn unlabeled_posets(n: usize) -> Result<Vec<Poset>> {
    if n > SCAN_MAX {
        return Err(Error::TooLarge {
            what: "poset scan",
            size: n,
            limit: SCAN_MAX,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let rel: u32 = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .fold(0, |acc, (_, &(i, j))| acc | 1 << (i * n + j));
        let has = |i: usize, j: usize| rel >> (i * n + j) & 1 == 1;
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(has(i, j) && has(j, k)) || has(i, k))));
        if !transitive {
            continue;
        }
        let canon = perms.iter().map(|p| relabel(rel, n, p)).min().unwrap();
        if seen.insert(canon) {
            let ids = (1..=n).map(|i| i.to_string()).collect();
            let relation: Vec<(usize, usize)> =
                pairs.iter().copied().filter(|&(i, j)| has(i, j)).collect();
            out.push(Poset::from_relation(ids, &relation)?);
        }
    }
    Ok(out)
}

/// `J(P)` as a validated semilattice, built straight from the ideal list.
pub fn ideal_lattice(p: &Poset) -> Result<MeetSemilattice> {
    MeetSemilattice::from_set_family(&SetFamily {
        ground: p.ids().to_vec(),
        sets: p.poset_ideals().collect(),
    })
}

/// Distinct h-vectors of duals of `J(P)` over all posets `P` with `n` elements.
pub fn realizability_scan(n: usize) -> Result<BTreeSet<HVector>> {
    let posets = unlabeled_posets(n)?;
    par::map(&posets, |p| h_vector(&ideal_lattice(p)?))
        .into_iter()
        .collect()
}
