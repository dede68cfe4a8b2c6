use crate::error::{Error, Result};
use crate::multigraph::{CanonicalCode, Multigraph};
use std::collections::BTreeMap;

/// Highest genus [`generate_candidates`] accepts unless told otherwise.
pub const DEFAULT_GENUS_CAPACITY: u32 = 4;

/// Connected candidate graphs for one genus, up to isomorphism, ordered by
/// vertex count, then edge count, then canonical code.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    pub genus: u32,
    pub graphs: Vec<(CanonicalCode, Multigraph)>,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.graphs.iter().any(|(c, _)| c == code)
    }
}

pub fn generate_candidates(genus: u32) -> Result<CandidateSet> {
    generate_candidates_bounded(genus, DEFAULT_GENUS_CAPACITY)
}

/// Every connected multigraph that can be a minimal separating graph of the
/// genus-`genus` surface and is not ruled out by the counting bounds:
///
/// - the single loop, or
/// - all degrees even and at least 4, `|V| <= 2g`, `2|V| <= |E| <= 2g + |V|`,
///   and at most `g` vertices carrying a loop (loops at distinct vertices
///   are pairwise disjoint).
pub fn generate_candidates_bounded(genus: u32, capacity: u32) -> Result<CandidateSet> {
    if genus > capacity {
        return Err(Error::Capacity {
            what: "genus",
            requested: genus as usize,
            limit: capacity as usize,
        });
    }
    let g = genus as usize;
    let mut found: BTreeMap<(usize, usize, CanonicalCode), Multigraph> = BTreeMap::new();
    let lp = Multigraph::bouquet(1);
    found.insert((1, 1, lp.canonical_form()?), lp);

    for v in 1..=2 * g {
        for e in 2 * v..=2 * g + v {
            for degrees in degree_sequences(v, e) {
                let mut fill = Fill {
                    degrees: &degrees,
                    rest: degrees.clone(),
                    m: vec![vec![0; v]; v],
                    max_loop_vertices: g,
                    out: Vec::new(),
                };
                fill.cell(0, 1);
                for m in fill.out {
                    let graph = from_matrix(&m);
                    if !graph.is_connected() {
                        continue;
                    }
                    let code = graph.canonical_form()?;
                    found.entry((v, e, code)).or_insert(graph);
                }
            }
        }
    }
    let graphs = found
        .into_iter()
        .map(|((_, _, code), graph)| (code, graph))
        .collect();
    Ok(CandidateSet { genus, graphs })
}

/// Non-increasing sequences of `n` even numbers, each at least 4, summing to `2e`.
fn degree_sequences(n: usize, e: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, sum: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut d = cap.min(sum.saturating_sub(4 * (left - 1)));
        d -= d % 2;
        while d >= 4 {
            cur.push(d);
            rec(left - 1, sum - d, d, cur, out);
            cur.pop();
            d -= 2;
        }
    }
    let mut out = Vec::new();
    rec(n, 2 * e, 2 * e, &mut Vec::new(), &mut out);
    out
}

// Symmetric multiplicity matrices with the loop count on the diagonal.
struct Fill<'a> {
    degrees: &'a [usize],
    rest: Vec<usize>,
    m: Vec<Vec<usize>>,
    max_loop_vertices: usize,
    out: Vec<Vec<Vec<usize>>>,
}

impl Fill<'_> {
    // choose m[i][j] for j > i, then the loops at i take the remainder
    fn cell(&mut self, i: usize, j: usize) {
        let n = self.degrees.len();
        if i == n {
            self.out.push(self.m.clone());
            return;
        }
        if j == n {
            let r = self.rest[i];
            if r % 2 != 0 {
                return;
            }
            self.m[i][i] = r / 2;
            let loop_vertices = (0..=i).filter(|&k| self.m[k][k] > 0).count();
            if loop_vertices <= self.max_loop_vertices {
                self.rest[i] = 0;
                self.cell(i + 1, i + 2);
                self.rest[i] = r;
            }
            self.m[i][i] = 0;
            return;
        }
        let top = self.rest[i].min(self.rest[j]);
        for k in 0..=top {
            self.m[i][j] = k;
            self.m[j][i] = k;
            self.rest[i] -= k;
            self.rest[j] -= k;
            self.cell(i, j + 1);
            self.rest[i] += k;
            self.rest[j] += k;
        }
        self.m[i][j] = 0;
        self.m[j][i] = 0;
    }
}

fn from_matrix(m: &[Vec<usize>]) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..m.len() {
        for j in i..m.len() {
            for _ in 0..m[i][j] {
                edges.push((i, j));
            }
        }
    }
    Multigraph::build(m.len(), &edges).expect("endpoints are in range")
}
