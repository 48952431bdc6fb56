//! Finite meet-semilattices and their representation by join-irreducibles.
//!
//! Every element `a` is encoded by `ell(a)`, the set of join-irreducible
//! elements below it. The encoding is injective and turns meets into
//! intersections, so most downstream work happens on [`Subset`]s of the
//! join-irreducible poset rather than on the semilattice itself.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;

/// A validated finite meet-semilattice.
#[derive(Clone, Debug)]
pub struct MeetSemilattice {
    order: Poset,
    bottom: usize,
    joinirr: Vec<usize>,
    joinirr_order: Poset,
    ell: Vec<Subset>,
    by_ell: HashMap<Subset, usize>,
    neighbors: Vec<Subset>,
    meets: Vec<usize>,
}

/// Outcome of the interval test for meet-distributivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeetDistributivity {
    pub holds: bool,
    /// First element (in index order) whose lower interval is not boolean.
    pub witness: Option<usize>,
}

impl MeetSemilattice {
    /// Check that every pair has a greatest lower bound, then compute the
    /// meet table, join-irreducibles and the `ell` encoding.
    pub fn validate(order: Poset) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }

        let mut meets = vec![0usize; n * n];
        for a in 0..n {
            for b in a..n {
                let common = order.down_set(a).intersection(order.down_set(b));
                let glb = order.maximal_elements(common);
                if glb.len() != 1 {
                    return Err(Error::NotMeetSemilattice {
                        a: order.id(a).to_string(),
                        b: order.id(b).to_string(),
                        maximal_lower_bounds: glb.len(),
                    });
                }
                let m = glb.first().unwrap();
                meets[a * n + b] = m;
                meets[b * n + a] = m;
            }
        }
        // All pairwise meets exist, so the meet of everything is the bottom.
        let bottom = (0..n).fold(0, |acc, x| meets[acc * n + x]);

        let neighbors: Vec<Subset> = (0..n).map(|a| order.lower_neighbors(a)).collect();
        let joinirr: Vec<usize> = (0..n).filter(|&a| neighbors[a].len() == 1).collect();
        let joinirr_order = order.induced(joinirr.iter().copied().collect());

        let ell: Vec<Subset> = (0..n)
            .map(|a| {
                joinirr
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| order.leq(p, a))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let by_ell: HashMap<Subset, usize> = ell.iter().enumerate().map(|(a, &s)| (s, a)).collect();
        debug_assert_eq!(by_ell.len(), n, "ell must be injective");

        Ok(MeetSemilattice {
            order,
            bottom,
            joinirr,
            joinirr_order,
            ell,
            by_ell,
            neighbors,
            meets,
        })
    }

    /// Order by inclusion on an intersection-closed family of sets.
    pub fn from_set_family(family: &SetFamily) -> Result<Self> {
        let sets = &family.sets;
        if sets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let labels: Vec<String> = sets.iter().map(|&s| family.label(s)).collect();
        let mut seen = HashSet::with_capacity(sets.len());
        for (s, label) in sets.iter().zip(&labels) {
            if !seen.insert(*s) {
                return Err(Error::DuplicateSet(label.clone()));
            }
        }
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate().skip(i + 1) {
                if !seen.contains(&a.intersection(b)) {
                    return Err(Error::NotIntersectionClosed {
                        a: labels[i].clone(),
                        b: labels[j].clone(),
                    });
                }
            }
        }

        let mut relation = Vec::new();
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    relation.push((i, j));
                }
            }
        }
        let lattice = Self::validate(Poset::from_relation(labels, &relation)?)?;

        for i in 0..sets.len() {
            for j in 0..sets.len() {
                assert_eq!(
                    lattice.ell[i].is_subset(lattice.ell[j]),
                    sets[i].is_subset(sets[j]),
                    "join-irreducible encoding disagrees with inclusion"
                );
            }
        }
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn id(&self, a: usize) -> &str {
        self.order.id(a)
    }

    /// Number of join-irreducible elements, i.e. `|P|`.
    pub fn rank(&self) -> usize {
        self.joinirr.len()
    }

    /// Join-irreducible elements as indices into the semilattice, in input order.
    pub fn join_irreducibles(&self) -> &[usize] {
        &self.joinirr
    }

    /// The induced order on the join-irreducibles. Index `j` here is the
    /// `j`-th entry of [`MeetSemilattice::join_irreducibles`].
    pub fn join_irreducible_poset(&self) -> &Poset {
        &self.joinirr_order
    }

    /// `ell(a)`: join-irreducibles below `a`, as positions in `P`.
    #[inline]
    pub fn ell(&self, a: usize) -> Subset {
        self.ell[a]
    }

    /// The element `b` with `ell(b) == s`, if there is one.
    pub fn element_with_ell(&self, s: Subset) -> Option<usize> {
        self.by_ell.get(&s).copied()
    }

    #[inline]
    pub fn lower_neighbors(&self, a: usize) -> Subset {
        self.neighbors[a]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meets[a * self.len() + b]
    }

    /// Meet of all members of `s`, folded in index order; `None` for the empty set.
    pub fn meet_all(&self, s: Subset) -> Option<usize> {
        let mut it = s.iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, x| self.meet(acc, x)))
    }

    /// Meet of the lower neighbors of `a`, or `a` itself when it has none.
    pub fn neighbor_meet(&self, a: usize) -> usize {
        self.meet_all(self.neighbors[a]).unwrap_or(a)
    }

    /// For every `b` with lower neighbors `N(b)` and `a = meet N(b)`, the map
    /// `T ⊆ N(b) ↦ meet T` must be a bijection onto `[a, b]`.
    pub fn is_meet_distributive(&self) -> MeetDistributivity {
        for b in 0..self.len() {
            let nb = self.neighbors[b];
            if nb.is_empty() {
                continue;
            }
            let a = self.neighbor_meet(b);
            let interval = self.order.up_set(a).intersection(self.order.down_set(b));
            let k = nb.len();
            let boolean = k < usize::BITS as usize && interval.len() == 1 << k && {
                let image: HashSet<usize> = nb
                    .subsets()
                    .map(|t| self.meet_all(t).unwrap_or(b))
                    .collect();
                image.len() == 1 << k && image.iter().all(|&g| interval.contains(g))
            };
            if !boolean {
                return MeetDistributivity {
                    holds: false,
                    witness: Some(b),
                };
            }
        }
        MeetDistributivity {
            holds: true,
            witness: None,
        }
    }

    /// Whether `ell` embeds this semilattice into the lattice of ideals of
    /// `P` as a meet-subsemilattice with covers sent to covers, i.e. each
    /// cover step adds exactly one join-irreducible.
    pub fn embedding_check(&self) -> bool {
        let n = self.len();
        if self.by_ell.len() != n {
            return false;
        }
        for a in 0..n {
            if !self.joinirr_order.is_ideal(self.ell[a]) {
                return false;
            }
            for b in 0..n {
                let both = self.ell[a].intersection(self.ell[b]);
                if self.ell[self.meet(a, b)] != both || !self.by_ell.contains_key(&both) {
                    return false;
                }
            }
            if self.neighbors[a]
                .iter()
                .any(|c| self.ell[a].difference(self.ell[c]).len() != 1)
            {
                return false;
            }
        }
        true
    }

    /// The lattice `J(P)` of all ideals of the join-irreducible poset.
    pub fn distributive_closure(&self) -> Result<DistributiveClosure> {
        let p = &self.joinirr_order;
        let ideals: Vec<Subset> = p.poset_ideals().collect();
        if ideals.len() > Subset::CAPACITY {
            return Err(Error::TooLarge {
                what: "distributive closure",
                size: ideals.len(),
                limit: Subset::CAPACITY,
            });
        }
        let family = SetFamily {
            ground: p.ids().to_vec(),
            sets: ideals.clone(),
        };
        Ok(DistributiveClosure {
            lattice: MeetSemilattice::from_set_family(&family)?,
            ideals,
        })
    }

    pub fn report(&self) -> ValidationReport {
        let md = self.is_meet_distributive();
        ValidationReport {
            valid: true,
            join_irreducibles: self
                .joinirr
                .iter()
                .map(|&a| self.id(a).to_string())
                .collect(),
            meet_distributive: md.holds,
            witness: md.witness.map(|w| self.id(w).to_string()),
        }
    }
}

/// `J(P)` together with the ideal each of its elements stands for.
#[derive(Clone, Debug)]
pub struct DistributiveClosure {
    pub lattice: MeetSemilattice,
    /// `ideals[i]` is the ideal of `P` represented by element `i` of `lattice`.
    pub ideals: Vec<Subset>,
}

impl DistributiveClosure {
    /// Position of `ell(a)` inside the closure for every `a` of `source`, or
    /// `None` if some image is missing or meets are not preserved.
    pub fn embed(&self, source: &MeetSemilattice) -> Option<Vec<usize>> {
        let pos: HashMap<Subset, usize> = self
            .ideals
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i))
            .collect();
        let image: Vec<usize> = (0..source.len())
            .map(|a| pos.get(&source.ell(a)).copied())
            .collect::<Option<_>>()?;
        for a in 0..source.len() {
            for b in 0..source.len() {
                if image[source.meet(a, b)] != self.lattice.meet(image[a], image[b]) {
                    return None;
                }
            }
        }
        Some(image)
    }

    /// Whether `ell` is an order isomorphism from `source` onto the closure.
    pub fn is_isomorphic_to(&self, source: &MeetSemilattice) -> bool {
        source.len() == self.lattice.len() && self.embed(source).is_some()
    }
}

/// An intersection-closed family of subsets of a named ground set.
#[derive(Clone, Debug)]
pub struct SetFamily {
    pub ground: Vec<String>,
    pub sets: Vec<Subset>,
}

impl SetFamily {
    /// Parse a family given by ground ids.
    pub fn from_ids<S: AsRef<str>>(ground: Vec<String>, sets: &[Vec<S>]) -> Result<Self> {
        if ground.len() > Subset::CAPACITY {
            return Err(Error::TooLarge {
                what: "ground set",
                size: ground.len(),
                limit: Subset::CAPACITY,
            });
        }
        let mut index = HashMap::new();
        for (i, g) in ground.iter().enumerate() {
            if index.insert(g.as_str(), i).is_some() {
                return Err(Error::DuplicateElement(g.clone()));
            }
        }
        let sets = sets
            .iter()
            .map(|members| {
                members
                    .iter()
                    .map(|m| {
                        index
                            .get(m.as_ref())
                            .copied()
                            .ok_or_else(|| Error::UnknownElement(m.as_ref().to_string()))
                    })
                    .collect::<Result<Subset>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if sets.len() > Subset::CAPACITY {
            return Err(Error::TooLarge {
                what: "set family",
                size: sets.len(),
                limit: Subset::CAPACITY,
            });
        }
        Ok(SetFamily { ground, sets })
    }

    /// Element name for a member set: concatenated ids when every ground id
    /// is a single character (`"123"`), braces otherwise (`"{a,bc}"`).
    pub fn label(&self, s: Subset) -> String {
        if s.is_empty() {
            return "{}".to_string();
        }
        let names = s.iter().map(|i| self.ground[i].as_str());
        if self.ground.iter().all(|g| g.chars().count() == 1) {
            names.collect()
        } else {
            format!("{{{}}}", names.collect::<Vec<_>>().join(","))
        }
    }
}

/// JSON shape of the `validate` report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub join_irreducibles: Vec<String>,
    pub meet_distributive: bool,
    pub witness: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn idx(l: &MeetSemilattice, id: &str) -> usize {
        l.order().index_of(id).unwrap()
    }

    fn singleton() -> MeetSemilattice {
        MeetSemilattice::validate(Poset::from_covers::<&str>(vec!["0".into()], &[]).unwrap())
            .unwrap()
    }

    #[test]
    fn singleton_is_valid() {
        let l = singleton();
        assert_eq!(l.rank(), 0);
        assert_eq!(l.ell(0), Subset::empty());
        assert!(l.is_meet_distributive().holds);
        assert!(l.embedding_check());
        assert_eq!(l.distributive_closure().unwrap().lattice.len(), 1);
    }

    #[test]
    fn vee_is_a_meet_semilattice() {
        let p = Poset::from_covers(
            vec!["0".into(), "a".into(), "b".into()],
            &[("0", "a"), ("0", "b")],
        )
        .unwrap();
        let l = MeetSemilattice::validate(p).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn two_minima_rejected() {
        let p = Poset::from_covers::<&str>(vec!["a".into(), "b".into()], &[]).unwrap();
        let err = MeetSemilattice::validate(p).unwrap_err();
        assert!(matches!(
            err,
            Error::NotMeetSemilattice {
                maximal_lower_bounds: 0,
                ..
            }
        ));
    }

    #[test]
    fn two_maximal_lower_bounds_rejected() {
        // a, b both below c and d: c ∧ d is ambiguous.
        let p = Poset::from_covers(
            ["0", "a", "b", "c", "d"].map(String::from).to_vec(),
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("b", "c"),
                ("a", "d"),
                ("b", "d"),
            ],
        )
        .unwrap();
        let err = MeetSemilattice::validate(p).unwrap_err();
        assert!(matches!(
            err,
            Error::NotMeetSemilattice {
                maximal_lower_bounds: 2,
                ..
            }
        ));
    }

    #[test]
    fn first_example_join_irreducibles() {
        let l = corpus::l1();
        let ji: Vec<&str> = l.join_irreducibles().iter().map(|&a| l.id(a)).collect();
        assert_eq!(ji, ["1", "2", "3", "234", "235"]);
        assert_eq!(l.meet(idx(&l, "234"), idx(&l, "235")), idx(&l, "23"));
        let n123 = l.lower_neighbors(idx(&l, "123"));
        assert_eq!(n123, Subset::from_indices([idx(&l, "12"), idx(&l, "23")]));
        assert_eq!(l.lower_neighbors(l.bottom()), Subset::empty());
        assert!(l.is_meet_distributive().holds);
        assert!(l.embedding_check());
    }

    #[test]
    fn second_example_meets() {
        let l = corpus::l2();
        let top = idx(&l, "1234");
        assert_eq!(
            l.lower_neighbors(top),
            Subset::from_indices([idx(&l, "134"), idx(&l, "234")])
        );
        assert_eq!(l.meet(idx(&l, "134"), idx(&l, "234")), idx(&l, "34"));
        assert!(l.is_meet_distributive().holds);
    }

    #[test]
    fn pentagon_is_not_meet_distributive() {
        let l = corpus::n5();
        let md = l.is_meet_distributive();
        assert!(!md.holds);
        assert_eq!(md.witness.map(|w| l.id(w)), Some("1"));
        assert!(!l.embedding_check());
        let a = idx(&l, "a");
        assert_eq!(l.meet(a, l.bottom()), l.bottom());
    }

    #[test]
    fn set_family_round_trip_of_first_example() {
        let l = corpus::l1_family();
        assert_eq!(l.len(), 10);
        let labels: Vec<&str> = l.join_irreducibles().iter().map(|&a| l.id(a)).collect();
        assert_eq!(labels, ["1", "2", "3", "234", "235"]);
    }

    #[test]
    fn family_errors() {
        let g: Vec<String> = ["1", "2", "3"].map(String::from).to_vec();
        let f = SetFamily::from_ids(g.clone(), &[vec!["1", "2"], vec!["1", "3"]]).unwrap();
        assert!(matches!(
            MeetSemilattice::from_set_family(&f),
            Err(Error::NotIntersectionClosed { .. })
        ));
        let f = SetFamily::from_ids(g.clone(), &[vec!["1"], vec!["1"]]).unwrap();
        assert!(matches!(
            MeetSemilattice::from_set_family(&f),
            Err(Error::DuplicateSet(_))
        ));
        let empty: &[Vec<&str>] = &[];
        let f = SetFamily::from_ids(g.clone(), empty).unwrap();
        assert!(matches!(
            MeetSemilattice::from_set_family(&f),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            SetFamily::from_ids(g, &[vec!["9"]]),
            Err(Error::UnknownElement(_))
        ));
        let f = SetFamily::from_ids(vec![], &[Vec::<&str>::new()]).unwrap();
        assert_eq!(MeetSemilattice::from_set_family(&f).unwrap().len(), 1);
    }

    #[test]
    fn closures() {
        assert_eq!(
            corpus::l1().distributive_closure().unwrap().lattice.len(),
            14
        );
        let b3 = corpus::boolean(3);
        let j = b3.distributive_closure().unwrap();
        assert_eq!(j.lattice.len(), 8);
        assert!(j.is_isomorphic_to(&b3));
        let l1 = corpus::l1();
        let j1 = l1.distributive_closure().unwrap();
        assert!(j1.embed(&l1).is_some());
        assert!(!j1.is_isomorphic_to(&l1));
    }
}
