//! Dynkin and extended Dynkin graphs, with the vertex predicates used by the
//! structure checks (terminal vertices, ramification points, simple chains).

use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

use crate::cartan::SymmetrizedForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid argument: vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("invalid argument: path is empty")]
    EmptyPath,
}

/// An undirected edge. For multiplicity > 1, `long` and `short` give the arrow
/// direction (from long to short).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: i64,
    pub arrow: Option<(usize, usize)>,
}

/// Graph on root-space vectors joined when their inner product is negative.
///
/// Vertices `0..rank` are the simple roots. An extended graph carries one more
/// vertex, index `rank`, for the affine node `-θ`.
#[derive(Debug, Clone)]
pub struct DynkinGraph {
    vertices: Vec<Vec<i64>>,
    adjacency: Vec<Vec<(usize, i64)>>,
    edges: Vec<Edge>,
    affine: Option<usize>,
}

impl DynkinGraph {
    /// Dynkin graph of the simple roots.
    pub fn new(form: &SymmetrizedForm) -> Self {
        let n = form.d().len();
        Self::from_vertices(form, unit_vectors(n), None)
    }

    /// Extended Dynkin graph: the simple roots plus `-θ` for the given highest
    /// root coefficients.
    pub fn extended(form: &SymmetrizedForm, highest: &[i64]) -> Self {
        let n = form.d().len();
        let mut vertices = unit_vectors(n);
        vertices.push(highest.iter().map(|c| -c).collect());
        Self::from_vertices(form, vertices, Some(n))
    }

    fn from_vertices(form: &SymmetrizedForm, vertices: Vec<Vec<i64>>, affine: Option<usize>) -> Self {
        let k = vertices.len();
        let norms: Vec<Rational64> = vertices.iter().map(|v| form.norm_sq(v)).collect();
        let mut adjacency = vec![Vec::new(); k];
        let mut edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let ip = form.inner(&vertices[a], &vertices[b]);
                if ip >= Rational64::zero() {
                    continue;
                }
                let two = Rational64::from_integer(2);
                let pab = two * ip / norms[b];
                let pba = two * ip / norms[a];
                let mult = (pab * pba).to_integer();
                let arrow = match norms[a].cmp(&norms[b]) {
                    std::cmp::Ordering::Greater => Some((a, b)),
                    std::cmp::Ordering::Less => Some((b, a)),
                    std::cmp::Ordering::Equal => None,
                };
                adjacency[a].push((b, mult));
                adjacency[b].push((a, mult));
                edges.push(Edge { a, b, multiplicity: mult, arrow });
            }
        }
        Self { vertices, adjacency, edges, affine }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: usize) -> &[i64] {
        &self.vertices[v]
    }

    pub fn affine_vertex(&self) -> Option<usize> {
        self.affine
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v` with edge multiplicities.
    pub fn adjacency(&self, v: usize) -> &[(usize, i64)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edge multiplicity between `a` and `b`, or 0 when not adjacent.
    pub fn multiplicity(&self, a: usize, b: usize) -> i64 {
        self.adjacency[a]
            .iter()
            .find(|(w, _)| *w == b)
            .map_or(0, |&(_, m)| m)
    }

    pub fn terminal_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) <= 1).collect()
    }

    pub fn ramification_points(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) >= 3).collect()
    }

    pub fn is_tree(&self) -> bool {
        let k = self.vertex_count();
        if self.edges.len() + 1 != k {
            return false;
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether `path` is a simple chain (a type-A subgraph: distinct vertices,
    /// consecutive ones joined by single edges, others non-adjacent) whose only
    /// connection to the rest of the graph is at `attach`.
    pub fn is_simple_chain(&self, path: &[usize], attach: usize) -> Result<bool, GraphError> {
        if path.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        for &v in path.iter().chain(std::iter::once(&attach)) {
            if v >= self.vertex_count() {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        for (i, &u) in path.iter().enumerate() {
            for (j, &v) in path.iter().enumerate().skip(i + 1) {
                let mult = self.multiplicity(u, v);
                let ok = if u == v {
                    false
                } else if j == i + 1 {
                    mult == 1
                } else {
                    mult == 0
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        for &v in path {
            if v == attach {
                continue;
            }
            if self.adjacency[v].iter().any(|(w, _)| !path.contains(w)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn unit_vectors(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_cartan, symmetrizer};
    use crate::roots::RootSystem;

    fn graphs(name: &str) -> (DynkinGraph, DynkinGraph) {
        let c = build_cartan(name.parse().unwrap());
        let rs = RootSystem::enumerate(&c).unwrap();
        let form = symmetrizer(&c);
        (
            DynkinGraph::new(&form),
            DynkinGraph::extended(&form, rs.highest_root().coeffs()),
        )
    }

    #[test]
    fn d4_has_one_ramification_point() {
        let (g, _) = graphs("D4");
        assert_eq!(g.ramification_points(), vec![1]);
    }

    #[test]
    fn a5_chain() {
        let (g, _) = graphs("A5");
        assert_eq!(g.terminal_vertices(), vec![0, 4]);
        assert!(g.ramification_points().is_empty());
        assert!(g.is_simple_chain(&[0, 1, 2, 3, 4], 4).unwrap());
    }

    #[test]
    fn g2_extended_chain() {
        let (g, ext) = graphs("G2");
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.edges()[0].arrow, Some((1, 0)));
        let affine = ext.affine_vertex().unwrap();
        assert_eq!(ext.adjacency(affine), &[(1, 1)]);
        assert!(ext.is_simple_chain(&[affine, 1], 1).unwrap());
        // attached at the affine end would leak through α2's triple edge
        assert!(!ext.is_simple_chain(&[affine, 1], affine).unwrap());
        assert!(!ext.is_simple_chain(&[1, 0], 0).unwrap());
    }

    #[test]
    fn unknown_vertex_rejected() {
        let (g, _) = graphs("A2");
        assert_eq!(g.is_simple_chain(&[0, 7], 0), Err(GraphError::UnknownVertex(7)));
        assert_eq!(g.is_simple_chain(&[], 0), Err(GraphError::EmptyPath));
    }

    #[test]
    fn multiplicities_match_cartan_products() {
        for t in crate::cartan::RankedType::all_up_to(9) {
            let c = build_cartan(t);
            let g = DynkinGraph::new(&symmetrizer(&c));
            assert!(g.is_tree(), "{t}");
            for e in g.edges() {
                assert_eq!(e.multiplicity, c.bond(e.a, e.b), "{t}");
            }
        }
    }

    #[test]
    fn extended_graphs_are_trees_except_affine_a() {
        for t in crate::cartan::RankedType::all_up_to(9) {
            let (_, ext) = graphs(&t.to_string());
            // affine A_n (n >= 2) is a cycle
            let cyclic = t.family() == crate::cartan::Family::A && t.rank() >= 2;
            assert_eq!(ext.is_tree(), !cyclic, "{t}");
        }
    }
}
