//! Two-sidedness, separating genus and the extremal genera of a graph.
//!
//! A rotation system is two-sided when its boundary walks can be coloured
//! with two colours so that the two occurrences of every edge land on walks
//! of different colours. The surface then splits along the graph into two
//! regions, one per colour, and the graph is a minimal separating set. For a
//! two-sided rotation with `F = n1 + n2` walks the irreducible separating
//! genus is `(|E| - |V| + F) / 2 - 1`.

mod search;

pub use search::{
    cellular_genus_range, cellular_genus_range_with, genus_bounds, genus_bounds_with,
    largest_irreducible_genus, largest_irreducible_genus_with, least_separated_genus,
    least_separated_genus_direct, least_separated_genus_with, witness, witness_with,
    GenusProfile, SearchConfig, Searched, DEFAULT_BUDGET,
};
pub(crate) use search::ParityUnionFind;

use crate::embedding::FaceDecomposition;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use serde::{Serialize, Serializer};
use std::fmt;

/// Genus value that may be infinite (no minimal separating embedding).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeparatedGenus {
    Finite(u32),
    Infinite,
}

impl SeparatedGenus {
    pub fn finite(self) -> Option<u32> {
        match self {
            SeparatedGenus::Finite(g) => Some(g),
            SeparatedGenus::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, SeparatedGenus::Finite(_))
    }
}

impl fmt::Display for SeparatedGenus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeparatedGenus::Finite(g) => write!(f, "{g}"),
            SeparatedGenus::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for SeparatedGenus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SeparatedGenus::Finite(g) => s.serialize_u32(*g),
            SeparatedGenus::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A two-colouring of the boundary walks witnessing two-sidedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSidedCertificate {
    /// `sides[i]` is 0 when walk `i` is in `B1`, 1 when in `B2`.
    pub sides: Vec<u8>,
    pub n1: usize,
    pub n2: usize,
    /// Every unordered `(n1, n2)` reachable by flipping constraint components.
    pub achievable_splits: Vec<(usize, usize)>,
    pub separating_genus: u32,
    #[serde(skip)]
    walk_vertex: Vec<u32>,
}

impl TwoSidedCertificate {
    pub fn face_count(&self) -> usize {
        self.sides.len()
    }

    /// Whether the unordered split `{a, b}` is achievable.
    pub fn admits_split(&self, a: usize, b: usize) -> bool {
        self.achievable_splits.contains(&(a.min(b), a.max(b)))
    }
}

/// Certifies two-sidedness of the embedding behind `faces`, or returns `None`.
///
/// Each edge forces its two walks onto opposite sides; the forced relations
/// form a graph on walks that must be bipartite. Every connected piece of
/// that graph can be flipped independently. The reported colouring puts as
/// few walks as possible in `B1`, breaking ties towards the lexicographically
/// smallest side vector.
pub fn check_two_sided(faces: &FaceDecomposition, g: &Multigraph) -> Option<TwoSidedCertificate> {
    let f = faces.len();
    if f == 0 {
        return None;
    }
    let mut uf = ParityUnionFind::new(f);
    for e in 0..g.edge_count() {
        let (a, b) = faces.sides_of_edge(e);
        if a == b || !uf.union_opposite(a as u32, b as u32) {
            return None;
        }
    }

    // relative parity of every walk against the smallest walk of its piece
    let mut root_first = vec![usize::MAX; f];
    let mut pieces: Vec<(usize, [usize; 2])> = Vec::new();
    let mut piece_of = vec![0usize; f];
    let mut rel = vec![0u8; f];
    for w in 0..f {
        let (root, par) = uf.find(w as u32);
        let root = root as usize;
        if root_first[root] == usize::MAX {
            root_first[root] = pieces.len();
            pieces.push((w, [0, 0]));
        }
        let p = root_first[root];
        piece_of[w] = p;
        rel[w] = par;
    }
    // normalise parity so the piece's smallest walk has parity 0
    let first_par: Vec<u8> = pieces.iter().map(|&(w, _)| rel[w]).collect();
    for w in 0..f {
        rel[w] ^= first_par[piece_of[w]];
        pieces[piece_of[w]].1[rel[w] as usize] += 1;
    }

    // flip[p] = 0 puts the parity-0 walks of piece p in B1
    let flip: Vec<u8> = pieces
        .iter()
        .map(|&(_, [zero, one])| u8::from(one < zero))
        .collect();
    let sides: Vec<u8> = (0..f).map(|w| rel[w] ^ flip[piece_of[w]]).collect();
    let n1 = sides.iter().filter(|&&s| s == 0).count();
    let n2 = f - n1;

    let mut reach = vec![false; f + 1];
    reach[0] = true;
    for &(_, [zero, one]) in &pieces {
        let mut next = vec![false; f + 1];
        for (k, _) in reach.iter().enumerate().filter(|(_, r)| **r) {
            next[k + zero] = true;
            next[k + one] = true;
        }
        reach = next;
    }
    let achievable_splits = (0..=f / 2)
        .filter(|&k| reach[k])
        .map(|k| (k, f - k))
        .collect();

    let twice = g.edge_count() as i64 - g.vertex_count() as i64 + f as i64;
    let separating_genus = (twice / 2 - 1).max(0) as u32;
    let walk_vertex = faces
        .walks()
        .iter()
        .map(|w| g.home(w[0]) as u32)
        .collect();
    Some(TwoSidedCertificate {
        sides,
        n1,
        n2,
        achievable_splits,
        separating_genus,
        walk_vertex,
    })
}

/// `(|E| - |V| + n1 + n2) / 2 - 1`, checked against the cellular genera of
/// the components: the two must agree with `|E| - |V| - sum(g_C) + (c - 1)`.
pub fn separating_genus(g: &Multigraph, cert: &TwoSidedCertificate) -> Result<u32> {
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let f = (cert.n1 + cert.n2) as i64;
    if f != cert.sides.len() as i64 || cert.walk_vertex.len() != cert.sides.len() {
        return Err(Error::Consistency("certificate walk counts disagree".into()));
    }
    if (e - v + f) % 2 != 0 {
        return Err(Error::Consistency(format!(
            "|E| - |V| + F = {} is odd",
            e - v + f
        )));
    }
    let direct = (e - v + f) / 2 - 1;

    let components = g.connected_components();
    let mut comp_of = vec![0usize; g.vertex_count()];
    for (c, vs) in components.iter().enumerate() {
        for &x in vs {
            comp_of[x] = c;
        }
    }
    let mut faces_in = vec![0i64; components.len()];
    for &w in &cert.walk_vertex {
        faces_in[comp_of[w as usize]] += 1;
    }
    let mut edges_in = vec![0i64; components.len()];
    for (a, _) in g.edges() {
        edges_in[comp_of[a]] += 1;
    }
    let mut cellular_sum = 0;
    for (c, vs) in components.iter().enumerate() {
        let twice = 2 - vs.len() as i64 + edges_in[c] - faces_in[c];
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Consistency(format!(
                "component {c} has non-integral cellular genus ({twice}/2)"
            )));
        }
        cellular_sum += twice / 2;
    }
    let cross = e - v - cellular_sum + components.len() as i64 - 1;
    if direct != cross || direct < 0 {
        return Err(Error::Consistency(format!(
            "separating genus {direct} disagrees with cellular route {cross}"
        )));
    }
    Ok(direct as u32)
}
