//! Seeded random inputs for property checks and the corpus.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::Rng;

use crate::level::maximal_sets;
use crate::poset::Poset;
use crate::semilattice::SetFamily;
use crate::subset::Subset;

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Poset on a random number of elements from `size`, with each pair
/// `i < j` related with probability `density` before closure.
pub fn random_poset<R: Rng>(rng: &mut R, size: RangeInclusive<usize>, density: f64) -> Poset {
    let n = rng.gen_range(size);
    let mut relation = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                relation.push((i, j));
            }
        }
    }
    Poset::from_relation(numbered(n), &relation).expect("forward edges are acyclic")
}

/// Close a collection of sets under pairwise intersection.
pub fn intersection_closure(sets: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut all: BTreeSet<Subset> = sets.into_iter().collect();
    loop {
        let v: Vec<Subset> = all.iter().copied().collect();
        let before = all.len();
        for (i, &a) in v.iter().enumerate() {
            for &b in &v[i + 1..] {
                all.insert(a.intersection(b));
            }
        }
        if all.len() == before {
            return all.into_iter().collect();
        }
    }
}

/// Intersection closure of `count` random subsets of a `ground`-point set.
pub fn random_family<R: Rng>(rng: &mut R, ground: usize, count: usize) -> SetFamily {
    let raw: Vec<Subset> = (0..count)
        .map(|_| (0..ground).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SetFamily {
        ground: numbered(ground),
        sets: intersection_closure(raw),
    }
}

/// Down-closure inside `J(P)` of a few random ideals: a poset ideal of a
/// distributive lattice, hence meet-distributive.
pub fn random_ideal_family<R: Rng>(rng: &mut R, p: &Poset, picks: usize) -> SetFamily {
    let ideals: Vec<Subset> = p.poset_ideals().collect();
    let tops: Vec<Subset> = (0..picks.max(1))
        .map(|_| ideals[rng.gen_range(0..ideals.len())])
        .collect();
    SetFamily {
        ground: p.ids().to_vec(),
        sets: ideals
            .into_iter()
            .filter(|i| tops.iter().any(|t| i.is_subset(*t)))
            .collect(),
    }
}

/// All subsets of the given facets.
pub fn complex_from_facets(n: usize, facets: &[Subset]) -> SetFamily {
    let faces: BTreeSet<Subset> = facets.iter().flat_map(|f| f.subsets()).collect();
    SetFamily {
        ground: numbered(n),
        sets: faces.into_iter().collect(),
    }
}

fn random_k_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> Subset {
    let mut s = Subset::empty();
    while s.len() < k {
        s.insert(rng.gen_range(0..n));
    }
    s
}

/// Facets of a random simplicial complex on `n` vertices using every vertex.
/// With `pure` all facets share one size; otherwise at least two sizes occur.
/// Non-pure complexes need `n >= 3`: on two vertices every antichain
/// covering both is pure.
pub fn random_complex_facets<R: Rng>(rng: &mut R, n: usize, pure: bool) -> Vec<Subset> {
    assert!(n >= 1 && (pure || n >= 3));
    loop {
        let mut facets = Vec::new();
        let mut covered = Subset::empty();
        let size = rng.gen_range(1..=n);
        let extra = rng.gen_range(0..3);
        let mut rounds = 0;
        while covered != Subset::full(n) || rounds < extra {
            let k = if pure { size } else { rng.gen_range(1..=n) };
            let f = random_k_subset(rng, n, k);
            covered = covered.union(f);
            facets.push(f);
            if covered == Subset::full(n) {
                rounds += 1;
            }
        }
        let facets = maximal_sets(&facets);
        let sizes: BTreeSet<usize> = facets.iter().map(|f| f.len()).collect();
        if pure == (sizes.len() == 1) {
            return facets;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::MeetSemilattice;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn families_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let f = random_family(&mut rng, 4, 5);
            MeetSemilattice::from_set_family(&f).unwrap();
            let p = random_poset(&mut rng, 2..=5, 0.4);
            let g = random_ideal_family(&mut rng, &p, 2);
            let l = MeetSemilattice::from_set_family(&g).unwrap();
            assert!(l.is_meet_distributive().holds);
        }
    }

    #[test]
    fn complexes_have_requested_purity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..=6 {
            for pure in [true, false] {
                if !pure && n < 3 {
                    continue;
                }
                let facets = random_complex_facets(&mut rng, n, pure);
                assert_eq!(crate::level::is_pure(&facets), pure);
                let all = facets.iter().fold(Subset::empty(), |a, &f| a.union(f));
                assert_eq!(all, Subset::full(n));
            }
        }
    }
}
