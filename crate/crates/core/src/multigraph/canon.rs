use super::Multigraph;
use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

/// Vertex count up to which [`Multigraph::canonical_form`] is available.
pub const DEFAULT_CANON_VERTEX_LIMIT: usize = 8;

/// Isomorphism-invariant encoding of a multigraph.
///
/// Byte 0 is the vertex count. The rest is the upper triangle of the
/// (loop count, multiplicity) matrix read column by column, i.e. entries
/// `(0,0), (0,1), (1,1), (0,2), (1,2), (2,2), ...`, minimised over all vertex
/// relabelings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds a representative graph from the code.
    pub fn to_graph(&self) -> Multigraph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        let mut k = 1;
        for j in 0..n {
            for i in 0..=j {
                for _ in 0..self.0[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Multigraph::build(n, &edges).expect("canonical code is well formed")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Multigraph {
    pub fn canonical_form(&self) -> Result<CanonicalCode> {
        self.canonical_form_bounded(DEFAULT_CANON_VERTEX_LIMIT)
    }

    /// Minimum code over all vertex orders, by depth-first search over partial
    /// orders with prefix comparison.
    pub fn canonical_form_bounded(&self, vertex_limit: usize) -> Result<CanonicalCode> {
        let n = self.vertex_count();
        if n > vertex_limit || n > u8::MAX as usize {
            return Err(Error::Capacity {
                what: "vertex count",
                requested: n,
                limit: vertex_limit.min(u8::MAX as usize),
            });
        }
        let matrix = self.multiplicity_matrix();
        let mut m = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = u8::try_from(matrix[i][j]).map_err(|_| Error::Capacity {
                    what: "edge multiplicity",
                    requested: matrix[i][j] as usize,
                    limit: u8::MAX as usize,
                })?;
            }
        }
        let mut search = Search {
            m: &m,
            n,
            order: Vec::with_capacity(n),
            used: vec![false; n],
            current: Vec::with_capacity(n * (n + 1) / 2),
            best: None,
        };
        search.descend();
        let mut code = Vec::with_capacity(1 + n * (n + 1) / 2);
        code.push(n as u8);
        code.extend(search.best.unwrap_or_default());
        Ok(CanonicalCode(code))
    }
}

struct Search<'a> {
    m: &'a [Vec<u8>],
    n: usize,
    order: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self) {
        let k = self.order.len();
        if k == self.n {
            if self.best.as_ref().map_or(true, |b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let start = self.current.len();
            self.order.push(v);
            for i in 0..=k {
                let entry = self.m[self.order[i]][v];
                self.current.push(entry);
            }
            // `best` may have changed under a sibling, so compare the whole prefix
            let prune = self
                .best
                .as_ref()
                .is_some_and(|b| self.current[..] > b[..self.current.len()]);
            if !prune {
                self.used[v] = true;
                self.descend();
                self.used[v] = false;
            }
            self.current.truncate(start);
            self.order.pop();
        }
    }
}
