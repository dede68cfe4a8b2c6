//! Rotation tables in the layout of the published witness listings:
//!
//! ```text
//! v0 : 0, 0, 1, 1
//! v_1 : 2 3 2 3
//! ```
//!
//! Commas and whitespace both separate labels, `#` starts a comment. Vertex
//! ids are renumbered densely in increasing order and edge labels are mapped
//! to `0..E` in increasing order. Every label must occur exactly twice; the
//! first occurrence in reading order becomes end 0 of the edge.

use super::RotationSystem;
use crate::error::{Error, Result};
use crate::multigraph::{Dart, Multigraph};
use std::collections::BTreeMap;
use std::fmt::Write;

pub fn parse_rotation_table(text: &str) -> Result<(Multigraph, RotationSystem)> {
    let mut rows: BTreeMap<u64, (usize, Vec<u64>)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Format {
            line: line_no,
            message,
        };
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `v<i> : labels`, found `{line}`")))?;
        let id = head
            .trim()
            .strip_prefix('v')
            .map(|s| s.strip_prefix('_').unwrap_or(s))
            .and_then(|s| s.trim().parse::<u64>().ok())
            .ok_or_else(|| err(format!("bad vertex name `{}`", head.trim())))?;
        let labels = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| err(format!("bad edge label `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.insert(id, (line_no, labels)).is_some() {
            return Err(err(format!("vertex v{id} listed twice")));
        }
    }

    let mut seen: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for (line, labels) in rows.values() {
        for &l in labels {
            seen.entry(l).or_insert((0, *line)).0 += 1;
        }
    }
    if let Some((l, (count, line))) = seen.iter().find(|(_, (c, _))| *c != 2) {
        return Err(Error::Format {
            line: *line,
            message: format!("edge label {l} occurs {count} times, expected 2"),
        });
    }
    let edge_of: BTreeMap<u64, usize> = seen.keys().enumerate().map(|(e, &l)| (l, e)).collect();

    let mut dart_home = vec![0u32; 2 * edge_of.len()];
    let mut next_end = vec![0usize; edge_of.len()];
    let mut orders = Vec::with_capacity(rows.len());
    for (v, (_, labels)) in rows.values().enumerate() {
        let mut order = Vec::with_capacity(labels.len());
        for l in labels {
            let e = edge_of[l];
            let d = Dart::new(e, next_end[e]);
            next_end[e] += 1;
            dart_home[d.index()] = v as u32;
            order.push(d);
        }
        orders.push(order);
    }
    let g = Multigraph::from_dart_homes(rows.len(), dart_home);
    let rs = RotationSystem::new(&g, orders)?;
    Ok((g, rs))
}

/// Reads a rotation table whose labels are edge ids of `g` and whose vertex
/// names are the vertex ids of `g`. At a vertex carrying both ends of a loop
/// the first occurrence takes end 0.
pub fn parse_rotation_for(g: &Multigraph, text: &str) -> Result<RotationSystem> {
    let mut orders = vec![Vec::new(); g.vertex_count()];
    let mut listed = vec![false; g.vertex_count()];
    let mut taken = vec![false; g.dart_count()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Format {
            line: i + 1,
            message,
        };
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `v<i> : labels`, found `{line}`")))?;
        let v = head
            .trim()
            .strip_prefix('v')
            .map(|s| s.strip_prefix('_').unwrap_or(s))
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&v| v < g.vertex_count())
            .ok_or_else(|| err(format!("`{}` is not a vertex of the graph", head.trim())))?;
        if std::mem::replace(&mut listed[v], true) {
            return Err(err(format!("vertex v{v} listed twice")));
        }
        for t in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let e = t
                .parse::<usize>()
                .ok()
                .filter(|&e| e < g.edge_count())
                .ok_or_else(|| err(format!("`{t}` is not an edge of the graph")))?;
            let d = [Dart::new(e, 0), Dart::new(e, 1)]
                .into_iter()
                .find(|&d| g.home(d) == v && !taken[d.index()])
                .ok_or_else(|| err(format!("edge {e} has no free end at v{v}")))?;
            taken[d.index()] = true;
            orders[v].push(d);
        }
    }
    RotationSystem::new(g, orders)
}

/// One `v<i> : labels` line per vertex, labels being edge ids.
pub fn format_rotation_table(rs: &RotationSystem) -> String {
    let mut out = String::new();
    for (v, labels) in rs.edge_labels().iter().enumerate() {
        let list: Vec<String> = labels.iter().map(|e| e.to_string()).collect();
        writeln!(out, "v{v} : {}", list.join(", ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::trace_faces;

    #[test]
    fn figure_eight() {
        let (g, rs) = parse_rotation_table("v0 : 0, 0, 1, 1").unwrap();
        assert_eq!(g, Multigraph::bouquet(2));
        assert_eq!(rs.edge_labels(), vec![vec![0, 0, 1, 1]]);
        assert_eq!(trace_faces(&g, &rs).unwrap().len(), 3);
    }

    #[test]
    fn two_disjoint_loops() {
        let (g, _) = parse_rotation_table("v0: 0,0\nv1: 1,1\n").unwrap();
        assert_eq!(g.connected_components().len(), 2);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn tolerant_layout_and_sparse_ids() {
        let (g, rs) = parse_rotation_table("# k\nv_3 :7 9\nv_5: 9 ,7\n").unwrap();
        assert_eq!(g, Multigraph::dipole(2));
        assert_eq!(rs.edge_labels(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn label_counts_are_checked() {
        for bad in ["v0 : 0, 0, 1", "v0 : 0, 0, 0, 0", "v0 : 0, x", "w0 : 0, 0", "v0 0 0"] {
            assert!(matches!(parse_rotation_table(bad), Err(Error::Format { .. })), "{bad}");
        }
        assert!(parse_rotation_table("v0: 0,0\nv0: 1,1").is_err());
    }

    #[test]
    fn rotation_against_a_given_graph() {
        let g = Multigraph::build(2, &[(1, 0), (0, 0), (0, 1)]).unwrap();
        let rs = parse_rotation_for(&g, "v0 : 0, 1, 1, 2\nv1 : 2, 0").unwrap();
        assert_eq!(rs.edge_labels(), vec![vec![0, 1, 1, 2], vec![2, 0]]);
        assert!(parse_rotation_for(&g, "v0 : 0, 1, 1, 2\nv1 : 2, 1").is_err());
        assert!(parse_rotation_for(&g, "v0 : 0, 1, 1, 2").is_err());
        assert!(parse_rotation_for(&g, "v2 : 0").is_err());
    }

    #[test]
    fn format_round_trip() {
        let text = "v0 : 0, 1, 2, 3\nv1 : 0, 2, 1, 3\n";
        let (g, rs) = parse_rotation_table(text).unwrap();
        assert_eq!(format_rotation_table(&rs), text);
        let (g2, rs2) = parse_rotation_table(&format_rotation_table(&rs)).unwrap();
        assert_eq!((g, rs), (g2, rs2));
    }
}
