use super::Graph;
use crate::error::{Error, Result};

/// Cartesian product `g □ h`.
///
/// Vertex `(a, b)` is encoded row-major as `a * h.n() + b`. Under this
/// encoding the product is associative: `(g □ h) □ k` and `g □ (h □ k)` give
/// the same graph, with `(a, b, c)` at `(a * h.n() + b) * k.n() + c`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    let n = gn
        .checked_mul(hn)
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or_else(|| Error::InstanceTooLarge(format!("product of {gn} and {hn} vertices")))?;
    let id = |a: usize, b: usize| a * hn + b;
    let mut edges = Vec::with_capacity(gn * h.edge_count() + hn * g.edge_count());
    for a in 0..gn {
        for (b, b2) in h.edges().iter() {
            edges.push((id(a, b), id(a, b2)));
        }
    }
    for (a, a2) in g.edges().iter() {
        for b in 0..hn {
            edges.push((id(a, b), id(a2, b)));
        }
    }
    Ok(Graph::from_edges_dedup(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, path};

    #[test]
    fn small_products() {
        let k2 = complete(2);
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.neighbors(0).len() == 2 && c4.min_degree() == 2);
        assert_eq!(c4.girth(), Some(4));

        let grid = cartesian_product(&path(2), &path(3)).unwrap();
        assert_eq!((grid.n(), grid.edge_count()), (6, 7));

        let q3 = cartesian_product(&c4, &k2).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));
    }

    #[test]
    fn associative_under_encoding() {
        let (a, b, c) = (path(2), path(3), complete(3));
        let left = cartesian_product(&cartesian_product(&a, &b).unwrap(), &c).unwrap();
        let right = cartesian_product(&a, &cartesian_product(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn clique_product_counts() {
        for m in 1..5 {
            for n in 1..5 {
                let g = cartesian_product(&complete(m), &complete(n)).unwrap();
                assert_eq!(g.n(), m * n);
                assert_eq!(g.edge_count(), m * n * (n - 1) / 2 + n * m * (m - 1) / 2);
            }
        }
    }
}
