//! Classification of minimal separating graphs by least separated genus.
//!
//! - `I_g`: connected graphs whose least separated genus is `g`.
//! - `L_g`: all graphs (possibly disconnected) whose least separated genus is `g`.
//! - `G_g`: all graphs that are minimal separating in genus `g`, the union
//!   of `L_0, ..., L_g`.
//!
//! A disjoint union of graphs with least genera `g_1, ..., g_k` has least
//! genus `g_1 + ... + g_k + k - 1`, so `L_g` is assembled from the `I_i`
//! over the partitions of `g + 1`.

mod candidates;

pub use candidates::{
    generate_candidates, generate_candidates_bounded, CandidateSet, DEFAULT_GENUS_CAPACITY,
};

use crate::embedding::trace_faces;
use crate::error::{Error, Result};
use crate::multigraph::{CanonicalCode, Multigraph};
use crate::separation::{
    check_two_sided, least_separated_genus_direct, least_separated_genus_with, separating_genus,
    witness_with, SearchConfig, SeparatedGenus,
};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

/// How `L_g` is assembled from the connected counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    /// One product of `I` counts per partition of `g + 1`, as in the printed
    /// formula; a repeated part counts ordered tuples.
    Paper,
    /// Unordered multisets of components: a part repeated `m` times with
    /// `I` choices contributes `C(I + m - 1, m)`.
    Multiset,
}

impl std::str::FromStr for CountMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "paper-formula" => Ok(CountMode::Paper),
            "multiset" => Ok(CountMode::Multiset),
            other => Err(Error::Input(format!(
                "unknown count mode `{other}` (expected paper or multiset)"
            ))),
        }
    }
}

/// `|L_genus|` from `i_counts[k] = |I_k|` for `k <= genus`.
pub fn count_l(i_counts: &[u64], genus: u32, mode: CountMode) -> Result<u64> {
    let g = genus as usize;
    if i_counts.len() <= g {
        return Err(Error::Precondition(format!(
            "need I counts up to genus {genus}, have {}",
            i_counts.len()
        )));
    }
    let mut total = 0u64;
    for parts in partitions(g + 1) {
        let mut term = 1u64;
        let mut k = 0;
        while k < parts.len() {
            let p = parts[k];
            let m = parts[k..].iter().take_while(|&&q| q == p).count();
            let choices = i_counts[p - 1];
            term *= match mode {
                CountMode::Paper => choices.pow(m as u32),
                CountMode::Multiset => multichoose(choices, m as u64),
            };
            k += m;
        }
        total += term;
    }
    Ok(total)
}

/// `|G_genus| = |L_0| + ... + |L_genus|`.
pub fn count_g(i_counts: &[u64], genus: u32, mode: CountMode) -> Result<u64> {
    (0..=genus).map(|k| count_l(i_counts, k, mode)).sum()
}

/// Partitions of `n` as non-increasing part lists.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=cap.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn multichoose(n: u64, k: u64) -> u64 {
    // C(n + k - 1, k)
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n + i) / (i + 1);
    }
    r
}

/// Whether `g` is minimal separating in genus `genus`, i.e. `gamma_- <= genus`.
pub fn in_g(g: &Multigraph, genus: u32, cfg: &SearchConfig) -> Result<bool> {
    Ok(least_separated_genus_with(g, cfg)?.value <= SeparatedGenus::Finite(genus))
}

/// One connected graph of `I_g` with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub code: CanonicalCode,
    pub vertices: usize,
    pub edges: usize,
    pub gamma_minus: SeparatedGenus,
    /// Rotation table of the first two-sided rotation at genus `gamma_minus`.
    pub witness_rotation: Vec<Vec<usize>>,
    /// Unordered `(n1, n2)` splits of the witness.
    pub splits: Vec<(usize, usize)>,
}

/// A candidate whose search ran out of budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundedRecord {
    pub code: CanonicalCode,
    pub visited: u64,
    /// Smallest genus seen before the budget ran out.
    pub best_genus: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct Counts {
    pub I: u64,
    pub L_paper: u64,
    pub L_multiset: u64,
    /// Cumulative count under the selected mode.
    pub G: u64,
    /// `|I_k|` for `k = 0..=genus`.
    pub I_by_genus: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub candidates: usize,
    pub rotations_visited: u64,
    pub budget_per_graph: u64,
    /// Whether every candidate was decided within budget.
    pub authoritative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub genus: u32,
    pub mode: CountMode,
    pub counts: Counts,
    /// Remarks on the counts, e.g. when the two `L` modes disagree.
    pub notes: Vec<String>,
    pub graphs: Vec<GraphRecord>,
    pub bounded: Vec<BoundedRecord>,
    pub stats: Stats,
}

impl ClassificationReport {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// `I_genus` with witnesses, plus the search effort spent.
#[derive(Clone, Debug)]
pub struct ClassifiedI {
    pub genus: u32,
    pub candidates: usize,
    pub graphs: Vec<GraphRecord>,
    pub bounded: Vec<BoundedRecord>,
    pub visited: u64,
}

enum Outcome {
    Member(GraphRecord, u64),
    Other(u64),
    Bounded(BoundedRecord),
}

/// The candidates of genus `genus` whose least separated genus is exactly
/// `genus`, each with a re-verified witness rotation.
#[allow(non_snake_case)]
pub fn classify_I(genus: u32, cfg: &SearchConfig) -> Result<ClassifiedI> {
    let cands = generate_candidates(genus)?;
    let inner = SearchConfig { jobs: 1, ..*cfg };
    let outcomes: Vec<Result<Outcome>> = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::Input(format!("cannot start {} workers: {e}", cfg.jobs)))?;
        // graph-level parallelism; big graphs are also split into chunks
        let inner_par = SearchConfig { jobs: cfg.jobs, ..*cfg };
        pool.install(|| {
            cands
                .graphs
                .par_iter()
                .map(|c| {
                    if c.1.vertex_count() == 1 && c.1.edge_count() >= 6 {
                        decide(c, &inner_par, genus)
                    } else {
                        decide(c, &inner, genus)
                    }
                })
                .collect()
        })
    } else {
        cands.graphs.iter().map(|c| decide(c, &inner, genus)).collect()
    };

    let mut out = ClassifiedI {
        genus,
        candidates: cands.len(),
        graphs: Vec::new(),
        bounded: Vec::new(),
        visited: 0,
    };
    for o in outcomes {
        match o? {
            Outcome::Member(r, v) => {
                out.visited += v;
                out.graphs.push(r);
            }
            Outcome::Other(v) => out.visited += v,
            Outcome::Bounded(b) => {
                out.visited += b.visited;
                out.bounded.push(b);
            }
        }
    }
    Ok(out)
}

// Least genus of one candidate and, for members, a witness checked from scratch.
fn decide(
    c: &(CanonicalCode, Multigraph),
    cfg: &SearchConfig,
    genus: u32,
) -> Result<Outcome> {
    let (code, g) = c;
    let least = match least_separated_genus_with(g, cfg) {
        Ok(r) => r,
        Err(Error::Budget { visited, best, .. }) => {
            return Ok(Outcome::Bounded(BoundedRecord {
                code: code.clone(),
                visited,
                best_genus: best.map(|f| {
                    ((g.edge_count() as i64 - g.vertex_count() as i64 + f as i64) / 2 - 1) as u32
                }),
            }))
        }
        Err(e) => return Err(e),
    };
    if least.value != SeparatedGenus::Finite(genus) {
        return Ok(Outcome::Other(least.visited));
    }
    let found = witness_with(g, genus, cfg)?;
    let (rs, _) = found
        .value
        .ok_or_else(|| Error::Consistency(format!("no witness at genus {genus} for {code}")))?;
    let faces = trace_faces(g, &rs)?;
    let cert = check_two_sided(&faces, g)
        .ok_or_else(|| Error::Consistency(format!("witness for {code} is not two-sided")))?;
    if separating_genus(g, &cert)? != genus {
        return Err(Error::Consistency(format!("witness for {code} has the wrong genus")));
    }
    Ok(Outcome::Member(
        GraphRecord {
            code: code.clone(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            gamma_minus: least.value,
            witness_rotation: rs.edge_labels(),
            splits: cert.achievable_splits.clone(),
        },
        least.visited + found.visited,
    ))
}

/// Remarks on the roll-up of `i_counts` at `genus`: empty unless the two
/// counting conventions give different `L` values.
pub fn roll_up_notes(i_counts: &[u64], genus: u32) -> Result<Vec<String>> {
    let l_paper = count_l(i_counts, genus, CountMode::Paper)?;
    let l_multiset = count_l(i_counts, genus, CountMode::Multiset)?;
    if l_paper == l_multiset {
        return Ok(Vec::new());
    }
    Ok(vec![format!(
        "L count depends on the convention: {l_paper} when a repeated component genus \
         counts ordered tuples, {l_multiset} as unordered multisets of components"
    )])
}

/// Full report for `genus`: `I_k` is computed for every `k <= genus`, the
/// per-graph records are those of `I_genus`.
pub fn classify(genus: u32, mode: CountMode, cfg: &SearchConfig) -> Result<ClassificationReport> {
    let mut i_by_genus = Vec::new();
    let mut candidates = 0;
    let mut visited = 0;
    let mut bounded = Vec::new();
    let mut top = None;
    for k in 0..=genus {
        let part = classify_I(k, cfg)?;
        i_by_genus.push(part.graphs.len() as u64);
        candidates += part.candidates;
        visited += part.visited;
        bounded.extend(part.bounded.iter().cloned());
        if k == genus {
            top = Some(part);
        }
    }
    let top = top.expect("loop runs at least once");
    let l_paper = count_l(&i_by_genus, genus, CountMode::Paper)?;
    let l_multiset = count_l(&i_by_genus, genus, CountMode::Multiset)?;
    let mut notes = roll_up_notes(&i_by_genus, genus)?;
    let authoritative = bounded.is_empty();
    if !authoritative {
        notes.push(format!(
            "{} candidate(s) exceeded the rotation budget; counts are lower bounds",
            bounded.len()
        ));
    }
    Ok(ClassificationReport {
        genus,
        mode,
        counts: Counts {
            I: top.graphs.len() as u64,
            L_paper: l_paper,
            L_multiset: l_multiset,
            G: count_g(&i_by_genus, genus, mode)?,
            I_by_genus: i_by_genus,
        },
        notes,
        graphs: top.graphs,
        bounded,
        stats: Stats {
            candidates,
            rotations_visited: visited,
            budget_per_graph: cfg.budget,
            authoritative,
        },
    })
}

/// Connected graphs with least separated genus at most `max_genus`, with
/// that genus, in candidate order.
pub fn catalog(max_genus: u32, cfg: &SearchConfig) -> Result<Vec<(Multigraph, u32)>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for k in 0..=max_genus {
        for (code, g) in generate_candidates(k)?.graphs {
            if !seen.insert(code) {
                continue;
            }
            if let SeparatedGenus::Finite(least) = least_separated_genus_with(&g, cfg)?.value {
                if least <= max_genus {
                    out.push((g, least));
                }
            }
        }
    }
    out.sort_by_key(|(_, least)| *least);
    Ok(out)
}

/// `L_genus` computed directly: every disjoint union of catalog graphs that
/// could land at `genus` or one above is built and its least separated genus
/// is found by scanning the rotations of the union as a whole.
#[allow(non_snake_case)]
pub fn classify_direct_L(genus: u32, cfg: &SearchConfig) -> Result<Vec<CanonicalCode>> {
    if genus > 2 {
        return Err(Error::Capacity {
            what: "genus for direct L classification",
            requested: genus as usize,
            limit: 2,
        });
    }
    let pool = catalog(genus, cfg)?;
    let mut members = BTreeSet::new();
    let mut chosen = Vec::new();
    // least genera must satisfy sum(g_i + 1) <= genus + 2
    fn rec(
        pool: &[(Multigraph, u32)],
        from: usize,
        room: u32,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if !chosen.is_empty() {
            visit(chosen)?;
        }
        for i in from..pool.len() {
            let cost = pool[i].1 + 1;
            if cost <= room {
                chosen.push(i);
                rec(pool, i, room - cost, chosen, visit)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    rec(&pool, 0, genus + 2, &mut chosen, &mut |picks| {
        let mut g = Multigraph::empty();
        for &i in picks {
            g = g.disjoint_union(&pool[i].0);
        }
        if least_separated_genus_direct(&g, cfg)?.value == SeparatedGenus::Finite(genus) {
            members.insert(g.canonical_form()?);
        }
        Ok(())
    })?;
    Ok(members.into_iter().collect())
}

/// The report as plain text, for terminals.
pub fn summarize(report: &ClassificationReport) -> String {
    let c = &report.counts;
    let mut s = format!(
        "genus {}: I={} L={} (ordered {}, multiset {}) G={}\n",
        report.genus,
        c.I,
        if report.mode == CountMode::Paper { c.L_paper } else { c.L_multiset },
        c.L_paper,
        c.L_multiset,
        c.G
    );
    for n in &report.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    for r in &report.graphs {
        let rows: Vec<String> = r
            .witness_rotation
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        s.push_str(&format!(
            "  {} V={} E={} splits={:?} rotation {}\n",
            r.code,
            r.vertices,
            r.edges,
            r.splits,
            rows.join(" / ")
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_roll_ups() {
        let i = [1u64, 3, 17, 161];
        assert_eq!(count_l(&i, 0, CountMode::Paper).unwrap(), 1);
        assert_eq!(count_l(&i, 1, CountMode::Paper).unwrap(), 4);
        assert_eq!(count_l(&i, 2, CountMode::Paper).unwrap(), 21);
        assert_eq!(count_l(&i, 3, CountMode::Paper).unwrap(), 191);
        assert_eq!(count_l(&i, 3, CountMode::Multiset).unwrap(), 188);
        assert_eq!(count_g(&i, 1, CountMode::Paper).unwrap(), 5);
        assert_eq!(count_g(&i, 2, CountMode::Paper).unwrap(), 26);
        assert_eq!(count_g(&i, 3, CountMode::Paper).unwrap(), 217);
        assert_eq!(count_g(&i, 3, CountMode::Multiset).unwrap(), 214);
        assert!(count_l(&i[..2], 2, CountMode::Paper).is_err());
    }

    #[test]
    fn partitions_of_small_numbers() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(multichoose(3, 2), 6);
        assert_eq!(multichoose(1, 4), 1);
    }

    #[test]
    fn low_genus_classification() {
        let cfg = SearchConfig::default();
        assert_eq!(classify_I(0, &cfg).unwrap().graphs.len(), 1);
        let one = classify_I(1, &cfg).unwrap();
        assert_eq!(one.graphs.len(), 3);
        assert!(one.bounded.is_empty());
        let r = classify(1, CountMode::Paper, &cfg).unwrap();
        assert_eq!((r.counts.I, r.counts.L_paper, r.counts.G), (3, 4, 5));
        assert!(r.notes.is_empty());
    }

    #[test]
    fn direct_l_low_genus() {
        let cfg = SearchConfig::default();
        assert_eq!(classify_direct_L(0, &cfg).unwrap().len(), 1);
        assert_eq!(classify_direct_L(1, &cfg).unwrap().len(), 4);
    }

    #[test]
    fn membership_in_g() {
        let cfg = SearchConfig::default();
        assert!(in_g(&Multigraph::bouquet(2), 1, &cfg).unwrap());
        assert!(in_g(&Multigraph::bouquet(2), 2, &cfg).unwrap());
        assert!(!in_g(&Multigraph::bouquet(2), 0, &cfg).unwrap());
    }

    #[test]
    fn report_is_deterministic() {
        let seq = SearchConfig::default();
        let par = SearchConfig { jobs: 3, ..seq };
        let a = classify(1, CountMode::Paper, &seq).unwrap().to_json().unwrap();
        let b = classify(1, CountMode::Paper, &par).unwrap().to_json().unwrap();
        assert_eq!(a, b);
    }
}
