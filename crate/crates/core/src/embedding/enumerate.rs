use super::RotationSystem;
use crate::error::{Error, Result};
use crate::multigraph::{Dart, Multigraph};

/// Largest vertex degree the enumerator handles.
pub const MAX_ENUMERATION_DEGREE: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Skip rotations where the two darts of some loop are separated by an
    /// odd number of darts. Such rotations are never two-sided.
    pub prune_loop_parity: bool,
    /// Keep only the lexicographically smaller member of each mirror pair.
    pub quotient_reflection: bool,
}

impl EnumerationOptions {
    pub const ALL: Self = EnumerationOptions {
        prune_loop_parity: false,
        quotient_reflection: false,
    };
    pub const PRUNED: Self = EnumerationOptions {
        prune_loop_parity: true,
        quotient_reflection: false,
    };
}

/// Depth-first walk over rotation systems, one representative per class of
/// cyclic shifts: every vertex list starts with its smallest dart and the
/// remaining positions run through permutations in lexicographic order.
/// Vertex 0 varies slowest.
///
/// The cursor keeps the successor table of the current rotation up to date,
/// so consumers can trace faces without rebuilding it. A prefix of slot
/// choices can be pinned to split the space between workers.
pub struct RotationCursor<'g> {
    g: &'g Multigraph,
    opts: EnumerationOptions,
    // (vertex, position) for every free slot, position >= 1
    slots: Vec<(u32, u32)>,
    // local index of the loop partner of each dart at a vertex
    partner: Vec<Vec<Option<u8>>>,
    order: Vec<Vec<u8>>,
    pos_of: Vec<Vec<u8>>,
    used: Vec<u64>,
    choice: Vec<u8>,
    next_try: Vec<u8>,
    succ: Vec<u32>,
    depth: usize,
    base: usize,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    AtLeaf,
    Done,
}

impl<'g> RotationCursor<'g> {
    pub fn new(g: &'g Multigraph, opts: EnumerationOptions) -> Result<Self> {
        let n = g.vertex_count();
        let mut slots = Vec::new();
        let mut partner = Vec::with_capacity(n);
        let mut order = Vec::with_capacity(n);
        let mut pos_of = Vec::with_capacity(n);
        let mut used = vec![0u64; n];
        let mut succ = vec![0u32; g.dart_count()];
        for v in 0..n {
            let darts = g.darts_at(v);
            if darts.len() > MAX_ENUMERATION_DEGREE {
                return Err(Error::Capacity {
                    what: "vertex degree",
                    requested: darts.len(),
                    limit: MAX_ENUMERATION_DEGREE,
                });
            }
            partner.push(
                darts
                    .iter()
                    .map(|d| darts.iter().position(|&t| t == d.twin()).map(|p| p as u8))
                    .collect(),
            );
            for pos in 1..darts.len() {
                slots.push((v as u32, pos as u32));
            }
            let mut o = vec![0u8; darts.len()];
            let mut p = vec![0u8; darts.len()];
            if !darts.is_empty() {
                o[0] = 0;
                p[0] = 0;
                used[v] = 1;
                // a lone dart closes on itself
                succ[darts[0].index()] = darts[0].index() as u32;
            }
            order.push(o);
            pos_of.push(p);
        }
        let total = slots.len();
        Ok(RotationCursor {
            g,
            opts,
            slots,
            partner,
            order,
            pos_of,
            used,
            choice: vec![0; total],
            next_try: vec![0; total],
            succ,
            depth: 0,
            base: 0,
            state: State::Fresh,
        })
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.g
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    /// Successor table of the current rotation.
    #[inline]
    pub fn successors(&self) -> &[u32] {
        &self.succ
    }

    pub fn rotation_system(&self) -> RotationSystem {
        let orders = self
            .order
            .iter()
            .enumerate()
            .map(|(v, o)| {
                let darts = self.g.darts_at(v);
                o.iter().map(|&l| darts[l as usize]).collect::<Vec<Dart>>()
            })
            .collect();
        RotationSystem::from_orders_unchecked(orders)
    }

    /// Local choices at the first `depth` slots of the current state.
    pub fn prefix(&self, depth: usize) -> Vec<u8> {
        self.choice[..depth].to_vec()
    }

    /// All valid prefixes of length `depth`, in enumeration order.
    pub fn prefixes(g: &Multigraph, opts: EnumerationOptions, depth: usize) -> Result<Vec<Vec<u8>>> {
        let mut cursor = RotationCursor::new(g, opts)?;
        let depth = depth.min(cursor.slots.len());
        let mut out = Vec::new();
        cursor.search_to(depth, &mut |c| out.push(c.prefix(depth)));
        Ok(out)
    }

    /// Restricts the cursor to rotations extending `prefix`.
    pub fn pin_prefix(&mut self, prefix: &[u8]) -> Result<()> {
        if self.state != State::Fresh || prefix.len() > self.slots.len() {
            return Err(Error::Input("prefix does not fit this cursor".into()));
        }
        for &c in prefix {
            if !self.can_place(self.depth, c) {
                return Err(Error::Input(format!("prefix {prefix:?} is not valid")));
            }
            self.place(self.depth, c);
            self.depth += 1;
        }
        self.base = prefix.len();
        if self.base < self.next_try.len() {
            self.next_try[self.base] = 0;
        }
        Ok(())
    }

    #[inline]
    fn can_place(&self, k: usize, c: u8) -> bool {
        let (v, pos) = self.slots[k];
        let v = v as usize;
        if (c as usize) >= self.order[v].len() || self.used[v] >> c & 1 == 1 {
            return false;
        }
        if self.opts.prune_loop_parity {
            if let Some(t) = self.partner[v][c as usize] {
                if self.used[v] >> t & 1 == 1 {
                    let gap = pos as i32 - self.pos_of[v][t as usize] as i32 - 1;
                    if gap % 2 != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[inline]
    fn place(&mut self, k: usize, c: u8) {
        let (v, pos) = self.slots[k];
        let (v, pos) = (v as usize, pos as usize);
        self.order[v][pos] = c;
        self.pos_of[v][c as usize] = pos as u8;
        self.used[v] |= 1 << c;
        self.choice[k] = c;
        let darts = self.g.darts_at(v);
        let prev = darts[self.order[v][pos - 1] as usize].index();
        let here = darts[c as usize].index();
        self.succ[prev] = here as u32;
        if pos + 1 == darts.len() {
            self.succ[here] = darts[0].index() as u32;
        }
    }

    #[inline]
    fn unplace(&mut self, k: usize) {
        let v = self.slots[k].0 as usize;
        self.used[v] &= !(1u64 << self.choice[k]);
    }

    /// Moves to the next rotation; `false` once the space is exhausted.
    pub fn advance(&mut self) -> bool {
        let total = self.slots.len();
        match self.state {
            State::Done => return false,
            State::Fresh => {
                if self.base < total {
                    self.next_try[self.base] = 0;
                }
            }
            State::AtLeaf => {
                // back out of the leaf and resume at the deepest slot
                if self.depth == self.base {
                    self.state = State::Done;
                    return false;
                }
                self.depth -= 1;
                self.unplace(self.depth);
                self.next_try[self.depth] = self.choice[self.depth] + 1;
            }
        }
        loop {
            if self.depth == total {
                if self.opts.quotient_reflection && !self.is_mirror_minimal() {
                    if self.depth == self.base {
                        self.state = State::Done;
                        return false;
                    }
                    self.depth -= 1;
                    self.unplace(self.depth);
                    self.next_try[self.depth] = self.choice[self.depth] + 1;
                    continue;
                }
                self.state = State::AtLeaf;
                return true;
            }
            let k = self.depth;
            let width = self.order[self.slots[k].0 as usize].len() as u8;
            let mut c = self.next_try[k];
            while c < width && !self.can_place(k, c) {
                c += 1;
            }
            if c < width {
                self.place(k, c);
                self.depth += 1;
                if self.depth < total {
                    self.next_try[self.depth] = 0;
                }
            } else {
                if k == self.base {
                    self.state = State::Done;
                    return false;
                }
                self.depth -= 1;
                self.unplace(self.depth);
                self.next_try[self.depth] = self.choice[self.depth] + 1;
            }
        }
    }

    /// Current orders compared with their reversal, vertex by vertex.
    fn is_mirror_minimal(&self) -> bool {
        for o in &self.order {
            let tail = &o[1..];
            for (a, b) in tail.iter().zip(tail.iter().rev()) {
                match a.cmp(b) {
                    std::cmp::Ordering::Less => return true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }

    // Plain recursive walk down to `depth`, used for prefix listing.
    fn search_to(&mut self, depth: usize, f: &mut dyn FnMut(&Self)) {
        if self.depth == depth {
            f(self);
            return;
        }
        let k = self.depth;
        let width = self.order[self.slots[k].0 as usize].len() as u8;
        for c in 0..width {
            if self.can_place(k, c) {
                self.place(k, c);
                self.depth += 1;
                self.search_to(depth, f);
                self.depth -= 1;
                self.unplace(k);
            }
        }
    }
}

/// Owning iterator over [`RotationSystem`] values.
pub struct RotationIter<'g> {
    cursor: RotationCursor<'g>,
}

impl Iterator for RotationIter<'_> {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        self.cursor
            .advance()
            .then(|| self.cursor.rotation_system())
    }
}

/// Every rotation system of `g` up to cyclic shifts at each vertex.
pub fn enumerate_rotation_systems(
    g: &Multigraph,
    prune_loop_parity: bool,
    quotient_reflection: bool,
) -> Result<RotationIter<'_>> {
    let cursor = RotationCursor::new(
        g,
        EnumerationOptions {
            prune_loop_parity,
            quotient_reflection,
        },
    )?;
    Ok(RotationIter { cursor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn counts_match_product_of_factorials() {
        for (g, expected) in [
            (Multigraph::bouquet(2), factorial(3)),
            (Multigraph::bouquet(3), factorial(5)),
            (Multigraph::dipole(4), factorial(3) * factorial(3)),
            (Multigraph::bouquet(1), 1),
        ] {
            let n = enumerate_rotation_systems(&g, false, false).unwrap().count();
            assert_eq!(n, expected, "{g:?}");
        }
    }

    #[test]
    fn figure_eight_label_patterns() {
        let g = Multigraph::bouquet(2);
        let all: BTreeSet<Vec<usize>> = enumerate_rotation_systems(&g, false, false)
            .unwrap()
            .map(|r| r.edge_labels()[0].clone())
            .collect();
        let expect: BTreeSet<Vec<usize>> =
            [vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![0, 1, 1, 0]].into();
        assert_eq!(all, expect);
        let pruned: BTreeSet<Vec<usize>> = enumerate_rotation_systems(&g, true, false)
            .unwrap()
            .map(|r| r.edge_labels()[0].clone())
            .collect();
        assert_eq!(pruned, [vec![0, 0, 1, 1], vec![0, 1, 1, 0]].into());
    }

    #[test]
    fn representatives_are_distinct_and_valid() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1), (0, 0), (1, 1)]).unwrap();
        let all: Vec<RotationSystem> = enumerate_rotation_systems(&g, false, false)
            .unwrap()
            .collect();
        let distinct: BTreeSet<_> = all.iter().map(|r| format!("{:?}", r.canonical())).collect();
        assert_eq!(distinct.len(), all.len());
        for r in &all {
            RotationSystem::new(&g, r.orders().to_vec()).unwrap();
            assert_eq!(r, &r.canonical());
        }
    }

    #[test]
    fn first_rotation_is_identity_order() {
        let g = Multigraph::bouquet(2);
        let first = enumerate_rotation_systems(&g, true, false).unwrap().next().unwrap();
        assert_eq!(first.edge_labels()[0], vec![0, 0, 1, 1]);
    }

    #[test]
    fn reflection_quotient_keeps_one_per_pair() {
        let g = Multigraph::bouquet(3);
        let all: Vec<RotationSystem> = enumerate_rotation_systems(&g, false, false).unwrap().collect();
        let kept: Vec<RotationSystem> = enumerate_rotation_systems(&g, false, true).unwrap().collect();
        let classes: BTreeSet<String> = all
            .iter()
            .map(|r| {
                let m = r.mirrored();
                let (a, b) = (format!("{:?}", r), format!("{:?}", m));
                if a <= b { a } else { b }
            })
            .collect();
        assert_eq!(kept.len(), classes.len());
        assert!(kept.len() < all.len());
    }

    #[test]
    fn prefixes_partition_the_space() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1), (0, 0), (1, 1), (0, 1), (0, 1)]).unwrap();
        for opts in [EnumerationOptions::ALL, EnumerationOptions::PRUNED] {
            let mut whole = RotationCursor::new(&g, opts).unwrap();
            let mut sequential = Vec::new();
            while whole.advance() {
                sequential.push(whole.successors().to_vec());
            }
            let mut pieces = Vec::new();
            for p in RotationCursor::prefixes(&g, opts, 3).unwrap() {
                let mut c = RotationCursor::new(&g, opts).unwrap();
                c.pin_prefix(&p).unwrap();
                while c.advance() {
                    pieces.push(c.successors().to_vec());
                }
            }
            assert_eq!(sequential, pieces);
        }
    }

    #[test]
    fn successor_table_tracks_rotation() {
        let g = Multigraph::build(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]).unwrap();
        let mut c = RotationCursor::new(&g, EnumerationOptions::ALL).unwrap();
        while c.advance() {
            let rs = c.rotation_system();
            assert_eq!(c.successors(), &rs.successor_table(g.dart_count())[..]);
        }
    }
}
