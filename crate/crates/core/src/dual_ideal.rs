//! The Alexander dual of a meet-semilattice and its Stanley–Reisner ideal.
//!
//! Variables are `x_p` and `y_p` for every join-irreducible `p`. A squarefree
//! monomial `x_A * y_B` is stored as the pair of supports `(A, B)`, both
//! subsets of `P`. Positions in `P` are rendered 1-based.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::semilattice::MeetSemilattice;
use crate::subset::Subset;

/// Which generator family a monomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `x_p * y_p`
    #[serde(rename = "diag")]
    Diagonal,
    /// `x_p * y_q` with `p < q`.
    #[serde(rename = "i")]
    Comparable,
    /// `y_B` for an antichain `B` whose ideal lies in no `ell(a)`.
    #[serde(rename = "ii")]
    Uncovered,
    /// `x_p * y_B` where `<B>` is contained in some `ell(a)` but equals none,
    /// and `p` lies in the meet of all such `a` but outside `<B>`.
    #[serde(rename = "iii")]
    Covered,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Diagonal => "diag",
            Family::Comparable => "i",
            Family::Uncovered => "ii",
            Family::Covered => "iii",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairMonomial {
    pub x: Subset,
    pub y: Subset,
    pub family: Family,
}

impl PairMonomial {
    pub fn degree(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn divides(&self, other: &PairMonomial) -> bool {
        self.x.is_subset(other.x) && self.y.is_subset(other.y)
    }

    pub fn support(&self) -> (Subset, Subset) {
        (self.x, self.y)
    }

    /// Tag a support pair by shape.
    pub fn classify(l: &MeetSemilattice, x: Subset, y: Subset) -> Self {
        let p = l.join_irreducible_poset();
        let family = if x == y && x.len() == 1 {
            Family::Diagonal
        } else if x.len() == 1 && y.len() == 1 && p.lt(x.first().unwrap(), y.first().unwrap()) {
            Family::Comparable
        } else if x.is_empty() {
            Family::Uncovered
        } else {
            Family::Covered
        };
        PairMonomial { x, y, family }
    }

    /// Total degree first, then lexicographic on `(x, y)`.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
    }

    pub fn to_json(&self) -> GeneratorJson {
        GeneratorJson {
            family: self.family,
            x: self.x.iter().map(|i| i + 1).collect(),
            y: self.y.iter().map(|i| i + 1).collect(),
        }
    }
}

impl fmt::Display for PairMonomial {
    /// Plain-text product such as `x_2*y_1*y_3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .x
            .iter()
            .map(|i| format!("x_{}", i + 1))
            .chain(self.y.iter().map(|i| format!("y_{}", i + 1)))
            .collect();
        if vars.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&vars.join("*"))
        }
    }
}

/// Wire form of one generator.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeneratorJson {
    pub family: Family,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// Facets of the Alexander dual, one per semilattice element.
///
/// Facet `a` is `{ x_q : q ∉ ell(a) } ∪ { y_q : q ∈ ell(a) }`, stored as its
/// x-part and y-part.
#[derive(Clone, Debug)]
pub struct DualComplex {
    pub rank: usize,
    pub facets: Vec<(Subset, Subset)>,
}

impl DualComplex {
    /// Whether `x_A * y_B` is a face, i.e. fits inside some facet.
    pub fn contains_face(&self, a: Subset, b: Subset) -> bool {
        self.facets
            .iter()
            .any(|&(fx, fy)| a.is_subset(fx) && b.is_subset(fy))
    }
}

pub fn dual_facets(l: &MeetSemilattice) -> DualComplex {
    let all = Subset::full(l.rank());
    DualComplex {
        rank: l.rank(),
        facets: (0..l.len())
            .map(|a| (all.difference(l.ell(a)), l.ell(a)))
            .collect(),
    }
}

/// `(A, B)` is independent when every `a` with `B ⊆ ell(a)` meets `A`.
/// Independence is exactly membership of `x_A * y_B` in the ideal.
pub fn is_independent_pair(l: &MeetSemilattice, a: Subset, b: Subset) -> Result<bool> {
    if !a.is_disjoint(b) {
        return Err(Error::Overlap);
    }
    Ok((0..l.len()).all(|g| {
        let e = l.ell(g);
        !b.is_subset(e) || !a.is_disjoint(e)
    }))
}

/// Drop duplicates and every monomial strictly divisible by another, then
/// sort canonically.
pub fn minimalize(mut gens: Vec<PairMonomial>) -> Vec<PairMonomial> {
    gens.sort_by(|a, b| a.canonical_cmp(b).then(a.family.cmp(&b.family)));
    gens.dedup_by_key(|g| g.support());
    let mut kept: Vec<PairMonomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Minimal generators built family by family from antichains of `P`.
pub fn theorem_generators(l: &MeetSemilattice) -> Vec<PairMonomial> {
    let p = l.join_irreducible_poset();
    let n = l.rank();
    let mut gens = Vec::new();
    for q in 0..n {
        gens.push(PairMonomial {
            x: Subset::singleton(q),
            y: Subset::singleton(q),
            family: Family::Diagonal,
        });
        for r in p.up_set(q).without(q).iter() {
            gens.push(PairMonomial {
                x: Subset::singleton(q),
                y: Subset::singleton(r),
                family: Family::Comparable,
            });
        }
    }

    let antichains: Vec<Subset> = p.antichains().collect();
    gens.extend(par::flat_map(&antichains, |&b| {
        let ideal = p.generated_ideal(b);
        if l.element_with_ell(ideal).is_some() {
            return Vec::new();
        }
        let above: Subset = (0..l.len())
            .filter(|&g| ideal.is_subset(l.ell(g)))
            .collect();
        match l.meet_all(above) {
            None => vec![PairMonomial {
                x: Subset::empty(),
                y: b,
                family: Family::Uncovered,
            }],
            Some(m) => l
                .ell(m)
                .difference(ideal)
                .iter()
                .map(|q| PairMonomial {
                    x: Subset::singleton(q),
                    y: b,
                    family: Family::Covered,
                })
                .collect(),
        }
    }));
    minimalize(gens)
}

/// Largest `|P|` the exhaustive generator search accepts.
pub const ORACLE_MAX_RANK: usize = 20;

/// Minimal generators by exhaustive search: the diagonal squares together
/// with every minimal independent pair `(A, B)` with `B` an antichain.
pub fn generators_oracle(l: &MeetSemilattice) -> Result<Vec<PairMonomial>> {
    let n = l.rank();
    if n > ORACLE_MAX_RANK {
        return Err(Error::TooLarge {
            what: "join-irreducible poset",
            size: n,
            limit: ORACLE_MAX_RANK,
        });
    }
    let p = l.join_irreducible_poset();
    let all = Subset::full(n);
    let ells: Vec<Subset> = (0..l.len()).map(|g| l.ell(g)).collect();
    let independent =
        |a: Subset, b: Subset| ells.iter().all(|&e| !b.is_subset(e) || !a.is_disjoint(e));

    let antichains: Vec<Subset> =
        par::filter_range(1u64 << n, |bits| p.is_antichain(Subset::from_bits(bits)))
            .into_iter()
            .map(Subset::from_bits)
            .collect();

    let mut gens: Vec<PairMonomial> = par::flat_map(&antichains, |&b| {
        all.difference(b)
            .subsets()
            .filter(|&a| {
                independent(a, b)
                    && a.iter().all(|q| !independent(a.without(q), b))
                    && b.iter().all(|q| !independent(a, b.without(q)))
            })
            .map(|a| PairMonomial::classify(l, a, b))
            .collect()
    });
    // x_p * y_p is a nonface: no facet holds both x_p and y_p.
    gens.extend(
        (0..n).map(|q| PairMonomial::classify(l, Subset::singleton(q), Subset::singleton(q))),
    );
    Ok(minimalize(gens))
}

/// Supports of a generator list, for set comparisons.
pub fn support_set(gens: &[PairMonomial]) -> HashSet<(Subset, Subset)> {
    gens.iter().map(PairMonomial::support).collect()
}
