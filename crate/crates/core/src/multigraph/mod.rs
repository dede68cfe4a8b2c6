//! Multigraphs with loops and parallel edges.
//!
//! Every edge owns two darts (edge-ends). Dart `2e` is end 0 of edge `e` and
//! dart `2e + 1` is end 1, so the twin involution is a single bit flip. A loop
//! is an edge whose two darts sit at the same vertex; it contributes 2 to the
//! degree of that vertex.

mod canon;
mod euler;
mod text;

pub use canon::{CanonicalCode, DEFAULT_CANON_VERTEX_LIMIT};
pub use text::{format_graph, parse_graph};

use crate::error::{Error, Result};
use std::fmt;

/// One end of an edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(u32);

impl Dart {
    #[inline]
    pub fn new(edge: usize, end: usize) -> Self {
        debug_assert!(end < 2);
        Dart((edge as u32) << 1 | end as u32)
    }

    #[inline]
    pub fn from_index(index: usize) -> Self {
        Dart(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn edge(self) -> usize {
        (self.0 >> 1) as usize
    }

    #[inline]
    pub fn end(self) -> usize {
        (self.0 & 1) as usize
    }

    #[inline]
    pub fn twin(self) -> Self {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.edge(), if self.end() == 0 { "a" } else { "b" })
    }
}

/// An undirected multigraph on dense vertex ids `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    dart_home: Vec<u32>,
    // darts at each vertex, ascending
    incident: Vec<Vec<Dart>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("vertices", &self.vertex_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Multigraph {
    /// Builds a graph with one edge per listed pair; `(u, u)` is a loop.
    pub fn build(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut dart_home = Vec::with_capacity(2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Input(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            dart_home.push(u as u32);
            dart_home.push(v as u32);
        }
        Ok(Self::from_dart_homes(vertex_count, dart_home))
    }

    pub(crate) fn from_dart_homes(vertex_count: usize, dart_home: Vec<u32>) -> Self {
        let mut incident = vec![Vec::new(); vertex_count];
        for (d, &v) in dart_home.iter().enumerate() {
            incident[v as usize].push(Dart::from_index(d));
        }
        Multigraph {
            vertex_count,
            dart_home,
            incident,
        }
    }

    /// The graph with no vertices and no edges.
    pub fn empty() -> Self {
        Self::from_dart_homes(0, Vec::new())
    }

    /// A single vertex carrying `loops` loops.
    pub fn bouquet(loops: usize) -> Self {
        Self::from_dart_homes(1, vec![0; 2 * loops])
    }

    /// Two vertices joined by `edges` parallel edges.
    pub fn dipole(edges: usize) -> Self {
        Self::from_dart_homes(2, [0u32, 1].repeat(edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.dart_home.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.dart_home.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.dart_home.len()).map(Dart::from_index)
    }

    /// Vertex the dart is attached to.
    #[inline]
    pub fn home(&self, dart: Dart) -> usize {
        self.dart_home[dart.index()] as usize
    }

    /// Darts attached to `v`, in ascending order.
    #[inline]
    pub fn darts_at(&self, v: usize) -> &[Dart] {
        &self.incident[v]
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        (
            self.dart_home[2 * edge] as usize,
            self.dart_home[2 * edge + 1] as usize,
        )
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.edge_count()).map(|e| self.endpoints(e))
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (u, v) = self.endpoints(edge);
        u == v
    }

    /// Non-loop incidences plus twice the loop incidences.
    ///
    /// Panics if `v` is not a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incident.iter().map(Vec::len).collect()
    }

    pub fn loop_count_at(&self, v: usize) -> usize {
        self.incident[v]
            .iter()
            .filter(|d| d.end() == 0 && self.is_loop(d.edge()))
            .count()
    }

    /// Loops sitting alone on a degree-2 vertex.
    pub fn isolated_loops(&self) -> Vec<usize> {
        (0..self.edge_count())
            .filter(|&e| {
                let (u, v) = self.endpoints(e);
                u == v && self.degree(u) == 2
            })
            .collect()
    }

    /// The graph with every isolated loop removed together with its vertex.
    pub fn remove_isolated_loops(&self) -> Multigraph {
        let isolated: Vec<usize> = self
            .isolated_loops()
            .into_iter()
            .map(|e| self.endpoints(e).0)
            .collect();
        let keep: Vec<usize> = (0..self.vertex_count)
            .filter(|v| !isolated.contains(v))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    ///
    /// Edges keep their relative order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Multigraph {
        let mut new_id = vec![u32::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i as u32;
        }
        let mut homes = Vec::new();
        for (u, v) in self.edges() {
            if new_id[u] != u32::MAX && new_id[v] != u32::MAX {
                homes.push(new_id[u]);
                homes.push(new_id[v]);
            }
        }
        Self::from_dart_homes(vertices.len(), homes)
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &d in &self.incident[v] {
                    let w = self.home(d.twin());
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// The components as standalone graphs.
    pub fn components(&self) -> Vec<Multigraph> {
        self.connected_components()
            .iter()
            .map(|c| self.induced_subgraph(c))
            .collect()
    }

    /// Every degree is positive and even, and every degree-2 vertex carries an
    /// isolated loop (so no vertex can be smoothed away).
    pub fn is_admissible(&self) -> bool {
        (0..self.vertex_count).all(|v| {
            let deg = self.degree(v);
            deg > 0 && deg % 2 == 0 && (deg != 2 || self.loop_count_at(v) == 1)
        })
    }

    /// All degrees positive and even; the condition for finite least genus.
    pub fn has_positive_even_degrees(&self) -> bool {
        self.incident.iter().all(|ds| !ds.is_empty() && ds.len() % 2 == 0)
    }

    /// Vertices and edges of `other` appended after those of `self`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count as u32;
        let mut homes = self.dart_home.clone();
        homes.extend(other.dart_home.iter().map(|&v| v + shift));
        Self::from_dart_homes(self.vertex_count + other.vertex_count, homes)
    }

    /// Relabels vertex `v` as `perm[v]`; edge ids are unchanged.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Multigraph> {
        let mut seen = vec![false; self.vertex_count];
        if perm.len() != self.vertex_count
            || perm.iter().any(|&p| p >= self.vertex_count || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Input(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.vertex_count
            )));
        }
        let homes = self.dart_home.iter().map(|&v| perm[v as usize] as u32).collect();
        Ok(Self::from_dart_homes(self.vertex_count, homes))
    }

    /// Loop counts on the diagonal, edge multiplicities off it.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0u32; n]; n];
        for (u, v) in self.edges() {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_eight() -> Multigraph {
        Multigraph::build(1, &[(0, 0), (0, 0)]).unwrap()
    }

    #[test]
    fn build_examples() {
        let single = Multigraph::build(1, &[(0, 0)]).unwrap();
        assert_eq!(single.degree(0), 2);
        assert_eq!(figure_eight().degree(0), 4);
        let dipole = Multigraph::build(2, &[(0, 1); 4]).unwrap();
        assert_eq!(dipole.degrees(), vec![4, 4]);
        assert_eq!(dipole, Multigraph::dipole(4));
        assert_eq!(Multigraph::bouquet(3).degree(0), 6);
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert!(matches!(
            Multigraph::build(2, &[(0, 2)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn dart_twin_and_ends() {
        let d = Dart::new(5, 1);
        assert_eq!(d.edge(), 5);
        assert_eq!(d.end(), 1);
        assert_eq!(d.twin(), Dart::new(5, 0));
        assert_eq!(d.twin().twin(), d);
    }

    #[test]
    fn isolated_loops_examples() {
        let three = Multigraph::build(3, &[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(three.isolated_loops().len(), 3);
        assert!(three.remove_isolated_loops().vertex_count() == 0);
        assert!(figure_eight().isolated_loops().is_empty());
        // loop at a degree-6 vertex: two more loops plus a dipole edge pair
        let g = Multigraph::build(2, &[(0, 0), (0, 1), (0, 1), (0, 0), (1, 1)]).unwrap();
        assert_eq!(g.degree(0), 6);
        assert!(g.isolated_loops().is_empty());
    }

    #[test]
    fn remove_isolated_loops_keeps_the_rest() {
        let g = Multigraph::bouquet(2).disjoint_union(&Multigraph::bouquet(1));
        let rest = g.remove_isolated_loops();
        assert_eq!(rest, Multigraph::bouquet(2));
    }

    #[test]
    fn components_examples() {
        let two_loops = Multigraph::bouquet(1).disjoint_union(&Multigraph::bouquet(1));
        assert_eq!(two_loops.connected_components().len(), 2);
        assert_eq!(Multigraph::dipole(4).connected_components().len(), 1);
        assert_eq!(Multigraph::build(2, &[]).unwrap().connected_components().len(), 2);
    }

    #[test]
    fn admissibility_examples() {
        assert!(figure_eight().is_admissible());
        assert!(Multigraph::bouquet(1).is_admissible());
        assert!(!Multigraph::build(2, &[(0, 1)]).unwrap().is_admissible());
        // the 2-cycle: both vertices have degree 2 and can be smoothed
        assert!(!Multigraph::dipole(2).is_admissible());
        assert!(Multigraph::dipole(2).has_positive_even_degrees());
        assert!(!Multigraph::build(1, &[]).unwrap().is_admissible());
    }

    #[test]
    fn disjoint_union_examples() {
        let l = Multigraph::bouquet(1);
        let u = l.disjoint_union(&l);
        assert_eq!(u, Multigraph::build(2, &[(0, 0), (1, 1)]).unwrap());
        assert_eq!(figure_eight().disjoint_union(&Multigraph::empty()), figure_eight());
        let fl = figure_eight().disjoint_union(&l);
        assert_eq!(fl.connected_components().len(), 2);
        assert_eq!(fl.edge_count(), 3);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Multigraph::build(3, &[(0, 0), (0, 1), (1, 2), (2, 2), (2, 0)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = Multigraph::dipole(2);
        assert!(g.relabel_vertices(&[0, 0]).is_err());
        assert_eq!(g.relabel_vertices(&[1, 0]).unwrap().degrees(), vec![2, 2]);
    }
}
