//! Rotation systems and the cellular embeddings they induce.
//!
//! A rotation system fixes, at every vertex, a cyclic order of the darts
//! attached there. Face tracing follows `phi(d) = succ(twin(d))`: leave along
//! `d`, arrive at the far end, and turn to the next dart in the rotation at
//! that vertex. The orbits of `phi` are the boundary walks.

mod enumerate;
mod euler;
mod text;

pub use enumerate::{
    enumerate_rotation_systems, EnumerationOptions, RotationCursor, RotationIter,
};
pub use euler::rotation_from_euler;
pub use text::{format_rotation_table, parse_rotation_for, parse_rotation_table};

use crate::error::{Error, Result};
use crate::multigraph::{Dart, Multigraph};
use std::collections::BTreeSet;

/// Cyclic order of darts at each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    orders: Vec<Vec<Dart>>,
}

impl RotationSystem {
    /// Checks that `orders[v]` is a permutation of the darts at `v`.
    pub fn new(g: &Multigraph, orders: Vec<Vec<Dart>>) -> Result<Self> {
        if orders.len() != g.vertex_count() {
            return Err(Error::Input(format!(
                "rotation lists {} vertices, graph has {}",
                orders.len(),
                g.vertex_count()
            )));
        }
        let mut seen = vec![false; g.dart_count()];
        for (v, list) in orders.iter().enumerate() {
            if list.len() != g.degree(v) {
                return Err(Error::Input(format!(
                    "vertex {v} lists {} darts but has degree {}",
                    list.len(),
                    g.degree(v)
                )));
            }
            for &d in list {
                if d.index() >= g.dart_count() || g.home(d) != v {
                    return Err(Error::Input(format!("dart {d:?} is not attached to vertex {v}")));
                }
                if std::mem::replace(&mut seen[d.index()], true) {
                    return Err(Error::Input(format!("dart {d:?} appears twice")));
                }
            }
        }
        Ok(RotationSystem { orders })
    }

    pub(crate) fn from_orders_unchecked(orders: Vec<Vec<Dart>>) -> Self {
        RotationSystem { orders }
    }

    pub fn orders(&self) -> &[Vec<Dart>] {
        &self.orders
    }

    pub fn at(&self, v: usize) -> &[Dart] {
        &self.orders[v]
    }

    /// Same cyclic orders, each list rotated to start at its smallest dart.
    pub fn canonical(&self) -> RotationSystem {
        let orders = self
            .orders
            .iter()
            .map(|list| {
                let mut list = list.clone();
                if let Some(k) = list.iter().enumerate().min_by_key(|(_, d)| **d).map(|(k, _)| k) {
                    list.rotate_left(k);
                }
                list
            })
            .collect();
        RotationSystem { orders }
    }

    /// Every vertex list reversed (the orientation-reversed embedding).
    pub fn mirrored(&self) -> RotationSystem {
        let orders = self
            .orders
            .iter()
            .map(|l| l.iter().rev().copied().collect())
            .collect();
        RotationSystem { orders }.canonical()
    }

    /// Whether both describe the same cyclic orders.
    pub fn same_class(&self, other: &RotationSystem) -> bool {
        self.canonical() == other.canonical()
    }

    /// `succ[d]` is the dart following `d` in the rotation at `home(d)`.
    pub fn successor_table(&self, dart_count: usize) -> Vec<u32> {
        let mut succ = vec![0u32; dart_count];
        for list in &self.orders {
            for (k, d) in list.iter().enumerate() {
                succ[d.index()] = list[(k + 1) % list.len()].index() as u32;
            }
        }
        succ
    }

    /// Edge labels around each vertex, as printed in rotation tables.
    pub fn edge_labels(&self) -> Vec<Vec<usize>> {
        self.orders
            .iter()
            .map(|l| l.iter().map(|d| d.edge()).collect())
            .collect()
    }
}

/// Boundary walks of a cellular embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDecomposition {
    walks: Vec<Vec<Dart>>,
    face_of: Vec<u32>,
}

impl FaceDecomposition {
    /// Walks ordered by smallest dart, each starting at its smallest dart.
    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    /// Index of the walk containing `dart`.
    pub fn face_of(&self, dart: Dart) -> usize {
        self.face_of[dart.index()] as usize
    }

    /// The set of edges traversed by walk `i`.
    pub fn edge_set(&self, i: usize) -> BTreeSet<usize> {
        self.walks[i].iter().map(|d| d.edge()).collect()
    }

    /// The two walks holding the two occurrences of `edge` (possibly equal).
    pub fn sides_of_edge(&self, edge: usize) -> (usize, usize) {
        (
            self.face_of(Dart::new(edge, 0)),
            self.face_of(Dart::new(edge, 1)),
        )
    }

    /// Edge ids along walk `i`.
    pub fn edge_sequence(&self, i: usize) -> Vec<usize> {
        self.walks[i].iter().map(|d| d.edge()).collect()
    }
}

/// Traces the orbits of `phi(d) = succ[twin(d)]` into `face_of`, returning the
/// number of faces. Orbits are numbered in order of their smallest dart.
#[inline]
pub(crate) fn trace_into(succ: &[u32], face_of: &mut [u32]) -> u32 {
    const UNSET: u32 = u32::MAX;
    face_of.fill(UNSET);
    let mut faces = 0;
    for start in 0..succ.len() {
        if face_of[start] != UNSET {
            continue;
        }
        let mut d = start;
        loop {
            face_of[d] = faces;
            d = succ[d ^ 1] as usize;
            if d == start {
                break;
            }
        }
        faces += 1;
    }
    faces
}

pub fn trace_faces(g: &Multigraph, rs: &RotationSystem) -> Result<FaceDecomposition> {
    RotationSystem::new(g, rs.orders.clone())?;
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    Ok(trace_faces_unchecked(g, rs))
}

pub(crate) fn trace_faces_unchecked(g: &Multigraph, rs: &RotationSystem) -> FaceDecomposition {
    let succ = rs.successor_table(g.dart_count());
    let mut face_of = vec![0u32; g.dart_count()];
    let faces = trace_into(&succ, &mut face_of);
    let mut walks = vec![Vec::new(); faces as usize];
    let mut done = vec![false; g.dart_count()];
    for start in 0..succ.len() {
        if done[start] {
            continue;
        }
        let f = face_of[start] as usize;
        let mut d = start;
        loop {
            done[d] = true;
            walks[f].push(Dart::from_index(d));
            d = succ[d ^ 1] as usize;
            if d == start {
                break;
            }
        }
    }
    FaceDecomposition { walks, face_of }
}

/// Genus of the closed surface obtained by capping every boundary walk with
/// a disc: `(2 - |V| + |E| - F) / 2`.
pub fn cellular_genus(g: &Multigraph, rs: &RotationSystem) -> Result<u32> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "cellular genus is defined here for connected graphs only".into(),
        ));
    }
    let faces = trace_faces(g, rs)?.len() as i64;
    Ok(genus_from_faces(g.vertex_count(), g.edge_count(), faces as usize))
}

/// Euler relation for a connected graph; the parity always works out.
pub(crate) fn genus_from_faces(vertices: usize, edges: usize, faces: usize) -> u32 {
    let twice = 2 - vertices as i64 + edges as i64 - faces as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0, "V={vertices} E={edges} F={faces}");
    (twice / 2) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation_from_labels(g: &Multigraph, labels: &[&[usize]]) -> RotationSystem {
        // first occurrence of a label at a vertex takes end 0 when both ends are there
        let mut taken = vec![false; g.dart_count()];
        let orders = labels
            .iter()
            .enumerate()
            .map(|(v, row)| {
                row.iter()
                    .map(|&e| {
                        let d = [Dart::new(e, 0), Dart::new(e, 1)]
                            .into_iter()
                            .find(|&d| g.home(d) == v && !taken[d.index()])
                            .unwrap();
                        taken[d.index()] = true;
                        d
                    })
                    .collect()
            })
            .collect();
        RotationSystem::new(g, orders).unwrap()
    }

    #[test]
    fn single_loop_has_two_walks() {
        let g = Multigraph::bouquet(1);
        let rs = rotation_from_labels(&g, &[&[0, 0]]);
        let faces = trace_faces(&g, &rs).unwrap();
        assert_eq!(faces.len(), 2);
        for i in 0..2 {
            assert_eq!(faces.edge_sequence(i), vec![0]);
        }
        assert_eq!(cellular_genus(&g, &rs).unwrap(), 0);
    }

    #[test]
    fn figure_eight_planar_rotation() {
        let g = Multigraph::bouquet(2);
        let rs = rotation_from_labels(&g, &[&[0, 0, 1, 1]]);
        let faces = trace_faces(&g, &rs).unwrap();
        assert_eq!(faces.len(), 3);
        let mut sets: Vec<BTreeSet<usize>> = (0..3).map(|i| faces.edge_set(i)).collect();
        sets.sort();
        let expect: Vec<BTreeSet<usize>> =
            vec![[0].into(), [0, 1].into(), [1].into()];
        assert_eq!(sets, expect);
        assert_eq!(cellular_genus(&g, &rs).unwrap(), 0);
    }

    #[test]
    fn figure_eight_torus_rotation() {
        let g = Multigraph::bouquet(2);
        let rs = rotation_from_labels(&g, &[&[0, 1, 0, 1]]);
        let faces = trace_faces(&g, &rs).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.walks()[0].len(), 4);
        assert_eq!(cellular_genus(&g, &rs).unwrap(), 1);
    }

    #[test]
    fn malformed_rotations_are_rejected() {
        let g = Multigraph::bouquet(2);
        let dup = vec![vec![Dart::new(0, 0), Dart::new(0, 0), Dart::new(1, 0), Dart::new(1, 1)]];
        assert!(matches!(RotationSystem::new(&g, dup), Err(Error::Input(_))));
        let short = vec![vec![Dart::new(0, 0), Dart::new(0, 1)]];
        assert!(RotationSystem::new(&g, short).is_err());
        let bad = RotationSystem::from_orders_unchecked(vec![vec![Dart::new(0, 0); 4]]);
        assert!(trace_faces(&g, &bad).is_err());
    }

    #[test]
    fn disconnected_cellular_genus_is_refused() {
        let g = Multigraph::bouquet(1).disjoint_union(&Multigraph::bouquet(1));
        let rs = rotation_from_labels(&g, &[&[0, 0], &[1, 1]]);
        assert!(matches!(cellular_genus(&g, &rs), Err(Error::Precondition(_))));
        assert_eq!(trace_faces(&g, &rs).unwrap().len(), 4);
    }

    #[test]
    fn canonical_and_mirror() {
        let g = Multigraph::bouquet(2);
        let rs = RotationSystem::new(
            &g,
            vec![vec![Dart::new(1, 0), Dart::new(0, 1), Dart::new(0, 0), Dart::new(1, 1)]],
        )
        .unwrap();
        assert_eq!(rs.canonical().at(0)[0], Dart::new(0, 0));
        assert!(rs.same_class(&rs.canonical()));
        assert_eq!(rs.mirrored().mirrored(), rs.canonical());
    }
}
