use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of `0..n` with constant-time membership.
///
/// Iteration is always ascending. Sets over the same universe compare
/// lexicographically by their ascending member sequences, which is the
/// canonical tie-break used for solver witnesses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set, rejecting out-of-range members.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(
        universe: usize,
        vertices: I,
    ) -> Result<Self> {
        let mut s = Self::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        let mut s = Self::new(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`; panics when `v` is outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let was = self.contains(v);
        self.words[v / 64] |= 1 << (v % 64);
        !was
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let was = self.contains(v);
        if was {
            self.words[v / 64] &= !(1 << (v % 64));
        }
        was
    }

    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let universe = self.universe.max(other.universe);
        let mut s = VertexSet::new(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0);
        }
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = VertexSet::new(self.universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            *w = self.words[i] & other.words.get(i).copied().unwrap_or(0);
        }
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        for (i, w) in s.words.iter_mut().enumerate() {
            *w &= !other.words.get(i).copied().unwrap_or(0);
        }
        s
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending comma-separated ids, e.g. `0,3,7`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the `0,3,7` form; an empty string is the empty set.
pub fn parse_id_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad vertex id `{t}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::new(130);
        assert!(s.is_empty());
        assert!(s.insert(129));
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert_eq!(s.to_vec(), vec![3, 129]);
        assert_eq!(s.len(), 2);
        assert!(s.remove(129));
        assert!(!s.contains(129));
        assert_eq!(s.to_string(), "3");
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(VertexSet::from_vertices(3, [0, 3]).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_vertices(6, [0, 1, 5]).unwrap();
        let b = VertexSet::from_vertices(6, [0, 2]).unwrap();
        assert!(a < b);
    }

    #[test]
    fn parse_ids() {
        assert_eq!(parse_id_list("0, 2,5").unwrap(), vec![0, 2, 5]);
        assert!(parse_id_list("").unwrap().is_empty());
        assert!(parse_id_list("1,x").is_err());
    }

    proptest! {
        #[test]
        fn iteration_ascending_and_counted(members in proptest::collection::btree_set(0usize..200, 0..40)) {
            let s = VertexSet::from_vertices(200, members.iter().copied()).unwrap();
            prop_assert_eq!(s.len(), members.len());
            prop_assert_eq!(s.to_vec(), members.into_iter().collect::<Vec<_>>());
        }
    }
}
