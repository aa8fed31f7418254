use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Marker stored for pairs in different components.
///
/// It never takes part in arithmetic: [`DistanceMatrix::get`] maps it to
/// `None`, and every sum in this crate goes through that accessor.
pub const UNREACHABLE: usize = usize::MAX;

/// Hop distances from `src`; `UNREACHABLE` where no path exists.
pub fn bfs_distances(g: &Graph, src: usize) -> Result<Vec<usize>> {
    g.check_vertex(src)?;
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// All-pairs geodesic distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<usize>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut data = Vec::with_capacity(n * n);
        for v in 0..n {
            data.extend(bfs_distances(g, v).expect("vertex in range"));
        }
        DistanceMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance, or `None` for pairs in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.data[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw entry, `UNREACHABLE` for disconnected pairs.
    pub fn raw(&self, u: usize, v: usize) -> usize {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Option<usize> {
        self.data.iter().try_fold(0, |acc, &d| {
            if d == UNREACHABLE {
                None
            } else {
                Some(acc.max(d))
            }
        })
    }

    /// `I(u, v) = { w : d(u,w) + d(w,v) = d(u,v) }`.
    pub fn interval(&self, u: usize, v: usize) -> Result<VertexSet> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        let duv = self.get(u, v).ok_or(Error::DisconnectedPair(u, v))?;
        let mut s = VertexSet::new(self.n);
        for w in 0..self.n {
            if let (Some(a), Some(b)) = (self.get(u, w), self.get(w, v)) {
                if a + b == duv {
                    s.insert(w);
                }
            }
        }
        Ok(s)
    }
}

/// Convenience wrapper matching [`DistanceMatrix::new`].
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

impl Graph {
    pub fn distance_matrix(&self) -> DistanceMatrix {
        distance_matrix(self)
    }
}
