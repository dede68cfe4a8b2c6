//! Test-side oracles. Nothing here calls the library's face tracer, two-sided
//! check or canonical form.
#![allow(dead_code)]

use minsep::{Dart, Multigraph, RotationSystem};
use proptest::prelude::*;

/// Face index of every dart, by following d -> succ(twin(d)) directly.
pub fn oracle_faces(g: &Multigraph, rs: &RotationSystem) -> (Vec<usize>, usize) {
    let darts = g.dart_count();
    let mut succ = vec![0usize; darts];
    for v in 0..g.vertex_count() {
        let list = rs.at(v);
        for k in 0..list.len() {
            succ[list[k].index()] = list[(k + 1) % list.len()].index();
        }
    }
    let mut face = vec![usize::MAX; darts];
    let mut count = 0;
    for start in 0..darts {
        if face[start] != usize::MAX {
            continue;
        }
        let mut d = start;
        while face[d] == usize::MAX {
            face[d] = count;
            d = succ[d ^ 1];
        }
        count += 1;
    }
    (face, count)
}

/// Side colouring of the faces when every edge borders two differently
/// coloured faces; `None` otherwise.
pub fn oracle_two_sided(g: &Multigraph, rs: &RotationSystem) -> Option<Vec<u8>> {
    let (face, count) = oracle_faces(g, rs);
    let mut adj = vec![Vec::new(); count];
    for e in 0..g.edge_count() {
        let (a, b) = (face[2 * e], face[2 * e + 1]);
        if a == b {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour = vec![u8::MAX; count];
    for s in 0..count {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for &h in &adj[f] {
                if colour[h] == u8::MAX {
                    colour[h] = 1 - colour[f];
                    stack.push(h);
                } else if colour[h] == colour[f] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

/// Genus of the closed surface cut into two punctured spheres by the
/// embedding: chi = (V - E) + (2 - n1) + (2 - n2).
pub fn oracle_separating_genus(g: &Multigraph, faces: usize) -> i64 {
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + 4 - faces as i64;
    (2 - chi) / 2
}

/// Smallest upper-triangle code over every vertex order.
pub fn brute_canonical(g: &Multigraph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u8; n]; n];
    for (a, b) in g.edges() {
        m[a][b] += 1;
        if a != b {
            m[b][a] += 1;
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut code = vec![n as u8];
        for j in 0..n {
            for i in 0..=j {
                code.push(m[p[i]][p[j]]);
            }
        }
        if best.as_ref().map_or(true, |b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_else(|| vec![0])
}

pub fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Every connected graph on at most `max_v` vertices with at most `max_e`
/// edges, all degrees even and at least 4, one per multiplicity matrix.
pub fn small_graphs(max_v: usize, max_e: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_v {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..=j).map(move |i| (i, j))).collect();
        let mut counts = vec![0usize; cells.len()];
        fill(&cells, 0, max_e, &mut counts, &mut |counts| {
            let mut edges = Vec::new();
            for (k, &c) in counts.iter().enumerate() {
                edges.extend(std::iter::repeat(cells[k]).take(c));
            }
            let g = Multigraph::build(n, &edges).unwrap();
            if g.edge_count() > 0
                && g.is_connected()
                && g.degrees().iter().all(|&d| d >= 4 && d % 2 == 0)
            {
                out.push(g);
            }
        });
    }
    out
}

fn fill(cells: &[(usize, usize)], k: usize, left: usize, counts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if k == cells.len() {
        f(counts);
        return;
    }
    for c in 0..=left {
        counts[k] = c;
        fill(cells, k + 1, left - c, counts, f);
    }
    counts[k] = 0;
}

/// A graph on 1..=max_v vertices with 1..=max_e random edges, every vertex
/// touched by at least one edge.
pub fn arb_graph(max_v: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_v).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 1..=max_e).prop_map(move |mut edges| {
            for v in 0..n {
                if !edges.iter().any(|&(a, b)| a == v || b == v) {
                    edges.push((v, v));
                }
            }
            Multigraph::build(n, &edges).unwrap()
        })
    })
}

/// Same, with every degree made even by pairing up odd vertices.
pub fn arb_even_graph(max_v: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
    arb_graph(max_v, max_e).prop_map(|g| {
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        let odd: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) % 2 == 1).collect();
        for pair in odd.chunks(2) {
            edges.push((pair[0], pair[1]));
        }
        Multigraph::build(g.vertex_count(), &edges).unwrap()
    })
}

/// A graph with a rotation system drawn by sorting the darts at each vertex
/// by random keys.
pub fn with_rotation(
    graphs: impl Strategy<Value = Multigraph>,
) -> impl Strategy<Value = (Multigraph, RotationSystem)> {
    graphs.prop_flat_map(|g| {
        let darts = g.dart_count();
        (Just(g), proptest::collection::vec(any::<u32>(), darts)).prop_map(|(g, keys)| {
            let orders = (0..g.vertex_count())
                .map(|v| {
                    let mut list: Vec<Dart> = g.darts_at(v).to_vec();
                    list.sort_by_key(|d| (keys[d.index()], d.index()));
                    list
                })
                .collect();
            let rs = RotationSystem::new(&g, orders).unwrap();
            (g, rs)
        })
    })
}
