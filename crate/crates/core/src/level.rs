//! h-vector, S-complex and levelness of the Alexander dual.
//!
//! For a meet-distributive semilattice the h-vector of the dual counts
//! elements by their number of lower neighbors, and the dual is level exactly
//! when the complex of sets `S(a) = ell(a) \ ell(a')` is pure, where `a'` is
//! the meet of the lower neighbors of `a`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::dual_ideal::theorem_generators;
use crate::error::{Error, Result};
use crate::par;
use crate::semilattice::MeetSemilattice;
use crate::subset::Subset;

/// `h_0 .. h_n`, padded with trailing zeros to length `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<u64>);

impl HVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Entries up to the last nonzero one.
    pub fn trimmed(&self) -> &[u64] {
        let end = self.0.iter().rposition(|&h| h != 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    /// Largest index with a nonzero entry.
    pub fn degree(&self) -> usize {
        self.trimmed().len().saturating_sub(1)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(self.trimmed()))
    }
}

pub(crate) fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn widest_neighborhood(l: &MeetSemilattice) -> usize {
    (0..l.len())
        .map(|a| l.lower_neighbors(a).len())
        .max()
        .unwrap_or(0)
}

fn require_meet_distributive(l: &MeetSemilattice) -> Result<()> {
    match l.is_meet_distributive().witness {
        None => Ok(()),
        Some(w) => Err(Error::NotMeetDistributive {
            witness: l.id(w).to_string(),
        }),
    }
}

/// Count of elements by number of lower neighbors, without checking
/// meet-distributivity. Only certified as an h-vector when the input is
/// meet-distributive.
pub fn neighbor_census(l: &MeetSemilattice) -> HVector {
    let mut h = vec![0u64; l.rank().max(widest_neighborhood(l)) + 1];
    for a in 0..l.len() {
        h[l.lower_neighbors(a).len()] += 1;
    }
    HVector(h)
}

pub fn h_vector(l: &MeetSemilattice) -> Result<HVector> {
    require_meet_distributive(l)?;
    Ok(neighbor_census(l))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `f_{-1} .. f_{n-1}` from `h_0 .. h_n` through
/// `f_j = sum_{i <= j+1} C(n - i, n - j - 1) h_i`.
pub fn f_from_h(h: &[i64], n: usize) -> Vec<i64> {
    (0..=n)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    binomial((n - i) as u64, (n - k) as u64) as i64 * h.get(i).copied().unwrap_or(0)
                })
                .sum()
        })
        .collect()
}

/// f-vector of the dual computed from the neighbor counts.
pub fn f_vector_dual(l: &MeetSemilattice) -> Result<Vec<u64>> {
    let h = h_vector(l)?;
    let h: Vec<i64> = h.0.iter().map(|&v| v as i64).collect();
    Ok(f_from_h(&h, l.rank())
        .into_iter()
        .map(|v| v as u64)
        .collect())
}

/// `max |N(a)| - |P|`, never positive.
pub fn a_invariant(l: &MeetSemilattice) -> Result<i64> {
    require_meet_distributive(l)?;
    Ok(widest_neighborhood(l) as i64 - l.rank() as i64)
}

/// The sets `S(a)` for every element, with the maximal ones as facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SComplex {
    /// `faces[a] = S(a)`
    pub faces: Vec<Subset>,
    /// Maximal faces, sorted lexicographically.
    pub facets: Vec<Subset>,
}

impl SComplex {
    pub fn is_pure(&self) -> bool {
        is_pure(&self.facets)
    }

    /// Face counts by cardinality.
    pub fn census(&self, rank: usize) -> Vec<u64> {
        let mut c = vec![0u64; rank + 1];
        for f in &self.faces {
            c[f.len()] += 1;
        }
        c
    }
}

pub fn is_pure(facets: &[Subset]) -> bool {
    facets.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Maximal members of a family of sets, sorted.
pub fn maximal_sets(sets: &[Subset]) -> Vec<Subset> {
    let mut out: Vec<Subset> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| s != t && s.is_subset(t)))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn s_complex(l: &MeetSemilattice) -> Result<SComplex> {
    require_meet_distributive(l)?;
    s_complex_unchecked(l)
}

/// [`s_complex`] without the meet-distributivity gate. Still fails if the
/// sets do not form a simplicial complex.
pub fn s_complex_unchecked(l: &MeetSemilattice) -> Result<SComplex> {
    let faces: Vec<Subset> = (0..l.len())
        .map(|a| l.ell(a).difference(l.ell(l.neighbor_meet(a))))
        .collect();
    let present: HashSet<Subset> = faces.iter().copied().collect();
    for f in &faces {
        if let Some(q) = f.iter().find(|&q| !present.contains(&f.without(q))) {
            return Err(Error::NotSimplicial(format!(
                "{:?} is a face but {:?} is not",
                f.iter().map(|i| i + 1).collect::<Vec<_>>(),
                f.without(q).iter().map(|i| i + 1).collect::<Vec<_>>()
            )));
        }
    }
    Ok(SComplex {
        facets: maximal_sets(&faces),
        faces,
    })
}

/// Everything needed to decide levelness, in wire form. Positions in `P`
/// inside `s_facets` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub h: HVector,
    pub f_dual: Vec<u64>,
    pub a_invariant: i64,
    pub s_facets: Vec<Vec<usize>>,
    pub is_level: bool,
}

pub fn level_report(l: &MeetSemilattice) -> Result<LevelReport> {
    require_meet_distributive(l)?;
    level_report_unchecked(l)
}

/// Same numbers as [`level_report`] for any input; they carry no meaning
/// as invariants of the dual unless the input is meet-distributive.
pub fn level_report_unchecked(l: &MeetSemilattice) -> Result<LevelReport> {
    let s = s_complex_unchecked(l)?;
    let h = neighbor_census(l);
    let hi: Vec<i64> = h.0.iter().map(|&v| v as i64).collect();
    Ok(LevelReport {
        f_dual: f_from_h(&hi, l.rank())
            .into_iter()
            .map(|v| v as u64)
            .collect(),
        a_invariant: widest_neighborhood(l) as i64 - l.rank() as i64,
        h,
        s_facets: s
            .facets
            .iter()
            .map(|f| f.iter().map(|i| i + 1).collect())
            .collect(),
        is_level: s.is_pure(),
    })
}

/// A monomial in the `x` variables only, by exponent vector over `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XMonomial {
    pub exponents: Vec<u8>,
}

impl XMonomial {
    pub fn degree(&self) -> u32 {
        self.exponents.iter().map(|&e| e as u32).sum()
    }

    pub fn divides(&self, other: &XMonomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> Subset {
        self.exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    fn sort_key(&self) -> (u32, Vec<(usize, std::cmp::Reverse<u8>)>) {
        let terms = self
            .exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| (i, std::cmp::Reverse(e)))
            .collect();
        (self.degree(), terms)
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("x_{}", i + 1),
                _ => format!("x_{}^{}", i + 1, e),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Generators of the Artinian reduction: the dual's generators under the
/// substitution `y_p -> x_p`, minimalized.
pub fn j_ideal(l: &MeetSemilattice) -> Result<Vec<XMonomial>> {
    require_meet_distributive(l)?;
    let n = l.rank();
    let mut gens: Vec<XMonomial> = theorem_generators(l)
        .iter()
        .map(|g| {
            let mut exponents = vec![0u8; n];
            for q in g.x.iter().chain(g.y.iter()) {
                exponents[q] += 1;
            }
            XMonomial { exponents }
        })
        .collect();
    gens.sort_by_key(XMonomial::sort_key);
    gens.dedup();
    let mut kept: Vec<XMonomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// Largest `|P|` the standard-monomial sweep accepts.
pub const SWEEP_MAX_RANK: usize = 20;

/// Squarefree supports `T` such that `x_T` lies outside the reduced ideal.
/// Squares are always in the ideal, so these span the quotient.
pub fn standard_monomials(l: &MeetSemilattice) -> Result<Vec<Subset>> {
    let n = l.rank();
    if n > SWEEP_MAX_RANK {
        return Err(Error::TooLarge {
            what: "join-irreducible poset",
            size: n,
            limit: SWEEP_MAX_RANK,
        });
    }
    let blockers: Vec<Subset> = j_ideal(l)?
        .iter()
        .filter(|g| g.is_squarefree())
        .map(XMonomial::support)
        .collect();
    let mut out: Vec<Subset> = par::filter_range(1u64 << n, |bits| {
        let t = Subset::from_bits(bits);
        !blockers.iter().any(|b| b.is_subset(t))
    })
    .into_iter()
    .map(Subset::from_bits)
    .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn lists(v: &[Subset]) -> Vec<Vec<usize>> {
        v.iter()
            .map(|s| s.iter().map(|i| i + 1).collect())
            .collect()
    }

    #[test]
    fn h_vectors_of_worked_examples() {
        assert_eq!(h_vector(&corpus::l1()).unwrap().trimmed(), &[1, 5, 4]);
        assert_eq!(
            h_vector(&corpus::l1()).unwrap().as_slice(),
            &[1, 5, 4, 0, 0, 0]
        );
        assert_eq!(h_vector(&corpus::l2()).unwrap().trimmed(), &[1, 4, 6, 2]);
        assert_eq!(
            h_vector(&corpus::b3_minus_13()).unwrap().trimmed(),
            &[1, 3, 3]
        );
    }

    #[test]
    fn non_meet_distributive_is_an_error() {
        let n5 = corpus::n5();
        assert!(matches!(
            h_vector(&n5),
            Err(Error::NotMeetDistributive { .. })
        ));
        assert!(matches!(
            s_complex(&n5),
            Err(Error::NotMeetDistributive { .. })
        ));
        assert!(level_report(&n5).is_err());
        // census still runs
        assert_eq!(neighbor_census(&n5).sum(), 5);
    }

    #[test]
    fn f_vectors() {
        let single = corpus::boolean(0);
        assert_eq!(f_vector_dual(&single).unwrap(), vec![1]);
        let l1 = corpus::l1();
        let f = f_vector_dual(&l1).unwrap();
        assert_eq!(f[0], 1);
        assert_eq!(*f.last().unwrap(), l1.len() as u64);
        let l2 = corpus::l2();
        assert_eq!(*f_vector_dual(&l2).unwrap().last().unwrap(), 13);
    }

    #[test]
    fn a_invariants() {
        assert_eq!(a_invariant(&corpus::boolean(3)).unwrap(), 0);
        assert_eq!(a_invariant(&corpus::l1()).unwrap(), -3);
        assert_eq!(a_invariant(&corpus::l2()).unwrap(), -1);
    }

    #[test]
    fn s_complexes() {
        let s1 = s_complex(&corpus::l1()).unwrap();
        assert_eq!(
            lists(&s1.facets),
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![4, 5]]
        );
        assert!(s1.is_pure());
        let s2 = s_complex(&corpus::l2()).unwrap();
        assert_eq!(
            lists(&s2.facets),
            vec![vec![1, 2], vec![1, 3, 4], vec![2, 3, 4]]
        );
        assert!(!s2.is_pure());
        let s0 = s_complex(&corpus::boolean(0)).unwrap();
        assert_eq!(s0.faces, vec![Subset::empty()]);
        assert_eq!(s0.facets, vec![Subset::empty()]);
    }

    #[test]
    fn level_verdicts() {
        let r1 = level_report(&corpus::l1()).unwrap();
        assert!(r1.is_level);
        let r2 = level_report(&corpus::l2()).unwrap();
        assert!(!r2.is_level);
        assert_eq!(r2.s_facets, vec![vec![1, 2], vec![1, 3, 4], vec![2, 3, 4]]);
        for n in 1..=4 {
            let r = level_report(&corpus::boolean(n)).unwrap();
            assert!(r.is_level);
            assert_eq!(r.s_facets, vec![(1..=n).collect::<Vec<_>>()]);
        }
        let json = serde_json::to_value(&r2).unwrap();
        assert_eq!(json["h"], serde_json::json!([1, 4, 6, 2, 0]));
        assert_eq!(json["a_invariant"], serde_json::json!(-1));
    }

    #[test]
    fn reduced_ideals() {
        let names = |v: Vec<XMonomial>| {
            let mut s: Vec<String> = v.iter().map(|m| m.to_string()).collect();
            s.sort();
            s
        };
        assert_eq!(names(j_ideal(&corpus::boolean(1)).unwrap()), vec!["x_1^2"]);
        assert!(j_ideal(&corpus::boolean(0)).unwrap().is_empty());
        let mut want: Vec<String> = [
            "x_1^2",
            "x_2^2",
            "x_3^2",
            "x_4^2",
            "x_5^2",
            "x_2*x_4",
            "x_2*x_5",
            "x_3*x_4",
            "x_3*x_5",
            "x_1*x_4",
            "x_1*x_5",
            "x_1*x_2*x_3",
        ]
        .map(String::from)
        .to_vec();
        want.sort();
        assert_eq!(names(j_ideal(&corpus::l1()).unwrap()), want);
    }

    #[test]
    fn standard_monomials_match_s_sets() {
        let l1 = corpus::l1();
        let sm = standard_monomials(&l1).unwrap();
        assert_eq!(sm.len(), 10);
        assert!(sm.contains(&Subset::from_indices([0, 2])));
        assert!(sm.contains(&Subset::from_indices([3, 4])));
        let mut faces = s_complex(&l1).unwrap().faces;
        faces.sort();
        assert_eq!(sm, faces);

        let l2 = corpus::l2();
        let sm2 = standard_monomials(&l2).unwrap();
        assert_eq!(sm2.len(), 13);
        let mut census = vec![0u64; 5];
        for t in &sm2 {
            census[t.len()] += 1;
        }
        assert_eq!(census, vec![1, 4, 6, 2, 0]);

        assert_eq!(
            standard_monomials(&corpus::boolean(0)).unwrap(),
            vec![Subset::empty()]
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(20, 10), 184756);
    }
}
