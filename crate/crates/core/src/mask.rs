//! 64-bit bitmask visibility kernel used by the exact searches.

use crate::error::{Error, Result};
use crate::visibility::{InvariantKind, VisibilityContext};

pub(crate) const MAX_MASK_VERTICES: usize = 64;

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[inline]
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

pub(crate) struct MaskKernel {
    n: usize,
    adj: Vec<u64>,
    /// `layers[s][k]`: vertices at distance exactly `k` from `s`.
    layers: Vec<Vec<u64>>,
    /// Interval `I(u, v)` at `u * n + v`.
    intervals: Vec<u64>,
}

impl MaskKernel {
    pub fn new(ctx: &VisibilityContext) -> Result<Self> {
        let n = ctx.n();
        if n > MAX_MASK_VERTICES {
            return Err(Error::InstanceTooLarge(format!(
                "exact search supports at most {MAX_MASK_VERTICES} vertices, got {n}"
            )));
        }
        let g = ctx.graph();
        let d = ctx.distances();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let layers = (0..n)
            .map(|s| {
                let mut layer = Vec::new();
                for v in 0..n {
                    if let Some(k) = d.get(s, v) {
                        if layer.len() <= k {
                            layer.resize(k + 1, 0u64);
                        }
                        layer[k] |= 1 << v;
                    }
                }
                layer
            })
            .collect();
        let mut intervals = vec![0u64; n * n];
        for u in 0..n {
            for v in 0..n {
                if let Some(duv) = d.get(u, v) {
                    for w in 0..n {
                        if let (Some(a), Some(b)) = (d.get(u, w), d.get(w, v)) {
                            if a + b == duv {
                                intervals[u * n + v] |= 1 << w;
                            }
                        }
                    }
                }
            }
        }
        Ok(MaskKernel {
            n,
            adj,
            layers,
            intervals,
        })
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    fn expand(&self, frontier: u64) -> u64 {
        bits(frontier).fold(0, |m, v| m | self.adj[v])
    }

    /// Checks that every vertex of `targets` is reached from `src` at its
    /// true distance by paths whose internal vertices avoid `blocked`.
    #[inline]
    fn visible_from(&self, src: usize, blocked: u64, targets: u64) -> bool {
        let layers = &self.layers[src];
        let mut pending = targets & !(1u64 << src);
        let mut reached = 1u64 << src;
        let mut frontier = 1u64 << src;
        let mut k = 0;
        while pending != 0 {
            let open = if k == 0 {
                frontier
            } else {
                frontier & !blocked
            };
            let next = self.expand(open) & !reached;
            k += 1;
            let Some(&layer) = layers.get(k) else {
                return false;
            };
            let need = layer & pending;
            if need & !next != 0 {
                return false;
            }
            pending &= !need;
            if next == 0 {
                return pending == 0;
            }
            reached |= next;
            frontier = next;
        }
        true
    }

    pub fn valid_mv(&self, x: u64) -> bool {
        bits(x).all(|a| self.visible_from(a, x, x & above(a)))
    }

    pub fn valid_tmv(&self, x: u64) -> bool {
        if x == 0 {
            return true;
        }
        let all = self.all();
        (0..self.n).all(|a| self.visible_from(a, x, all & above(a)))
    }

    pub fn valid_gp(&self, x: u64) -> bool {
        bits(x).all(|u| {
            bits(x & above(u)).all(|v| self.intervals[u * self.n + v] & x == (1 << u) | (1 << v))
        })
    }

    #[inline]
    pub fn valid(&self, kind: InvariantKind, x: u64) -> bool {
        match kind {
            InvariantKind::Mv => self.valid_mv(x),
            InvariantKind::Tmv => self.valid_tmv(x),
            InvariantKind::Gp => self.valid_gp(x),
        }
    }

    /// `x` (assumed valid) admits no extension by a vertex of `pool`.
    pub fn maximal_within(&self, kind: InvariantKind, x: u64, pool: u64) -> bool {
        bits(pool & !x).all(|w| !self.valid(kind, x | 1 << w))
    }

    pub fn tmv_candidates(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.valid_tmv(1 << v))
            .fold(0, |m, v| m | 1 << v)
    }
}
