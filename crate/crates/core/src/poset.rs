//! Finite posets with bitmask down-sets and up-sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A finite partial order on at most [`Subset::CAPACITY`] elements.
///
/// Elements carry opaque string ids externally and dense indices internally.
/// Comparability is a single mask test.
#[derive(Clone, Debug)]
pub struct Poset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    down: Vec<Subset>,
    up: Vec<Subset>,
}

impl Poset {
    /// Build from a relation given by dense indices. Any relation whose
    /// reflexive-transitive closure is antisymmetric is accepted, so both
    /// cover lists and full order relations work.
    pub fn from_relation(ids: Vec<String>, relation: &[(usize, usize)]) -> Result<Self> {
        let n = ids.len();
        if n > Subset::CAPACITY {
            return Err(Error::TooLarge {
                what: "poset",
                size: n,
                limit: Subset::CAPACITY,
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateElement(id.clone()));
            }
        }

        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(lo, hi) in relation {
            debug_assert!(lo < n && hi < n);
            down[hi].insert(lo);
        }
        // Warshall on rows: if k <= i then everything below k is below i.
        for k in 0..n {
            let below_k = down[k];
            for row in down.iter_mut() {
                if row.contains(k) {
                    *row = row.union(below_k);
                }
            }
        }

        let mut up = vec![Subset::empty(); n];
        for (hi, row) in down.iter().enumerate() {
            for lo in row.iter() {
                up[lo].insert(hi);
            }
        }
        for a in 0..n {
            if let Some(b) = down[a].intersection(up[a]).without(a).first() {
                return Err(Error::Cycle(ids[a].clone(), ids[b].clone()));
            }
        }

        Ok(Poset {
            ids,
            index,
            down,
            up,
        })
    }

    /// Build from id pairs `(lo, hi)` meaning `lo <= hi`.
    pub fn from_covers<S: AsRef<str>>(ids: Vec<String>, pairs: &[(S, S)]) -> Result<Self> {
        let lookup: HashMap<&str, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let find = |s: &str| {
            lookup
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let relation = pairs
            .iter()
            .map(|(lo, hi)| Ok((find(lo.as_ref())?, find(hi.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_relation(ids, &relation)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    /// Every element.
    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{ b : b <= a }`
    #[inline]
    pub fn down_set(&self, a: usize) -> Subset {
        self.down[a]
    }

    /// `{ b : a <= b }`
    #[inline]
    pub fn up_set(&self, a: usize) -> Subset {
        self.up[a]
    }

    /// Elements covered by `a`.
    pub fn lower_neighbors(&self, a: usize) -> Subset {
        let strict = self.down[a].without(a);
        self.maximal_elements(strict)
    }

    /// Lower neighbors looked up by id.
    pub fn lower_neighbors_of(&self, id: &str) -> Result<Subset> {
        Ok(self.lower_neighbors(self.index_of(id)?))
    }

    /// The cover relation as `(lo, hi)` index pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|hi| self.lower_neighbors(hi).iter().map(move |lo| (lo, hi)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_antichain(&self, b: Subset) -> bool {
        b.iter()
            .all(|x| self.down[x].union(self.up[x]).intersection(b) == Subset::singleton(x))
    }

    /// `<B>`: every element below some member of `b`.
    pub fn generated_ideal(&self, b: Subset) -> Subset {
        b.iter()
            .fold(Subset::empty(), |acc, x| acc.union(self.down[x]))
    }

    pub fn is_ideal(&self, s: Subset) -> bool {
        self.generated_ideal(s) == s
    }

    /// `M(B)`, the maximal members of `b`.
    pub fn maximal_elements(&self, b: Subset) -> Subset {
        b.iter()
            .filter(|&x| self.up[x].intersection(b) == Subset::singleton(x))
            .collect()
    }

    pub fn minimal_elements(&self, b: Subset) -> Subset {
        b.iter()
            .filter(|&x| self.down[x].intersection(b) == Subset::singleton(x))
            .collect()
    }

    /// All antichains, including the empty one, in lexicographic order of
    /// their member lists.
    pub fn antichains(&self) -> Antichains<'_> {
        Antichains {
            poset: self,
            stack: Vec::new(),
            started: false,
        }
    }

    /// All down-closed subsets. Each ideal is generated by the antichain of
    /// its maximal elements, so this walks [`Poset::antichains`].
    pub fn poset_ideals(&self) -> impl Iterator<Item = Subset> + '_ {
        self.antichains().map(|a| self.generated_ideal(a))
    }

    /// The subposet on `members`, keeping their relative index order.
    pub fn induced(&self, members: Subset) -> Poset {
        let keep: Vec<usize> = members.to_vec();
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let mut relation = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if i != j && self.leq(i, j) {
                    relation.push((a, b));
                }
            }
        }
        // Restriction of a partial order is a partial order.
        Poset::from_relation(ids, &relation).expect("induced order is acyclic")
    }
}

struct Frame {
    set: Subset,
    blocked: Subset,
    next: usize,
}

/// Depth-first antichain enumeration that only extends by elements
/// incomparable to everything chosen so far.
pub struct Antichains<'a> {
    poset: &'a Poset,
    stack: Vec<Frame>,
    started: bool,
}

impl Iterator for Antichains<'_> {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if !self.started {
            self.started = true;
            self.stack.push(Frame {
                set: Subset::empty(),
                blocked: Subset::empty(),
                next: 0,
            });
            return Some(Subset::empty());
        }
        let n = self.poset.len();
        loop {
            let top = self.stack.last_mut()?;
            let mut i = top.next;
            while i < n && top.blocked.contains(i) {
                i += 1;
            }
            if i >= n {
                self.stack.pop();
                continue;
            }
            top.next = i + 1;
            let set = top.set.with(i);
            let blocked = top
                .blocked
                .union(self.poset.down[i])
                .union(self.poset.up[i]);
            self.stack.push(Frame {
                set,
                blocked,
                next: i + 1,
            });
            return Some(set);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Join-irreducibles of the first worked example: 1 isolated, and 2, 3
    /// both below 4 and 5.
    fn p1() -> Poset {
        Poset::from_covers(
            ids(&["1", "2", "3", "4", "5"]),
            &[("2", "4"), ("2", "5"), ("3", "4"), ("3", "5")],
        )
        .unwrap()
    }

    fn set(p: &Poset, members: &[&str]) -> Subset {
        members.iter().map(|m| p.index_of(m).unwrap()).collect()
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::from_covers::<&str>(ids(&["a"]), &[]).unwrap();
        assert!(p.leq(0, 0));
        assert_eq!(p.lower_neighbors(0), Subset::empty());
        assert_eq!(p.antichains().count(), 2);
    }

    #[test]
    fn two_cycle_rejected() {
        let err = Poset::from_covers(ids(&["a", "b"]), &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(..)));
    }

    #[test]
    fn unknown_and_duplicate() {
        let err = Poset::from_covers(ids(&["a"]), &[("a", "z")]).unwrap_err();
        assert!(matches!(err, Error::UnknownElement(ref s) if s == "z"));
        let err = Poset::from_covers::<&str>(ids(&["a", "a"]), &[]).unwrap_err();
        assert!(matches!(err, Error::DuplicateElement(_)));
    }

    #[test]
    fn closure_is_transitive() {
        let p = Poset::from_covers(ids(&["a", "b", "c"]), &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn p1_antichain_queries() {
        let p = p1();
        assert!(p.is_antichain(Subset::empty()));
        assert!(p.is_antichain(set(&p, &["1", "4"])));
        assert!(!p.is_antichain(set(&p, &["2", "4"])));
        assert!(p.is_antichain(set(&p, &["1", "3"])));
    }

    #[test]
    fn p1_ideals_and_maxima() {
        let p = p1();
        assert_eq!(p.generated_ideal(Subset::empty()), Subset::empty());
        assert_eq!(
            p.generated_ideal(set(&p, &["4", "5"])),
            set(&p, &["2", "3", "4", "5"])
        );
        assert_eq!(
            p.generated_ideal(set(&p, &["1", "3"])),
            set(&p, &["1", "3"])
        );
        assert_eq!(
            p.maximal_elements(set(&p, &["2", "3", "4"])),
            set(&p, &["4"])
        );
        assert_eq!(p.maximal_elements(Subset::empty()), Subset::empty());
        let ac = set(&p, &["1", "4"]);
        assert_eq!(p.maximal_elements(ac), ac);
    }

    #[test]
    fn p1_antichain_list() {
        let p = p1();
        let mut got: Vec<Vec<String>> = p
            .antichains()
            .map(|a| a.iter().map(|i| p.id(i).to_string()).collect())
            .collect();
        got.sort();
        let mut want: Vec<Vec<String>> = [
            vec![],
            vec!["1"],
            vec!["2"],
            vec!["3"],
            vec!["4"],
            vec!["5"],
            vec!["1", "2"],
            vec!["1", "3"],
            vec!["1", "2", "3"],
            vec!["1", "4", "5"],
            vec!["2", "3"],
            vec!["1", "4"],
            vec!["1", "5"],
            vec!["4", "5"],
        ]
        .into_iter()
        .map(|v| v.into_iter().map(String::from).collect())
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn antichains_are_lexicographic() {
        let p = p1();
        let v: Vec<Subset> = p.antichains().collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ideal_counts() {
        // 1 is isolated: 2 choices times the 7 down-sets of the bowtie.
        assert_eq!(p1().poset_ideals().count(), 14);
        let chain = Poset::from_covers(
            ids(&["a", "b", "c", "d"]),
            &[("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap();
        assert_eq!(chain.poset_ideals().count(), 5);
        assert_eq!(chain.antichains().count(), 5);
        let anti = Poset::from_covers::<&str>(ids(&["a", "b", "c"]), &[]).unwrap();
        assert_eq!(anti.poset_ideals().count(), 8);
        assert_eq!(anti.antichains().count(), 8);
    }

    #[test]
    fn induced_subposet() {
        let p = p1();
        let q = p.induced(set(&p, &["2", "4", "5"]));
        assert_eq!(q.ids(), &["2", "4", "5"]);
        assert!(q.lt(0, 1) && q.lt(0, 2) && !q.comparable(1, 2));
    }
}
