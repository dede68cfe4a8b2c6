use super::{Dart, Multigraph};
use crate::error::{Error, Result};

impl Multigraph {
    /// An Eulerian circuit as a cyclic sequence of darts.
    ///
    /// Dart `d_k` leaves `home(d_k)` along its edge and arrives at
    /// `home(twin(d_k))`, which is `home(d_{k+1})`. Construction is
    /// Hierholzer's algorithm starting from the home of dart 0, always taking
    /// the smallest unused dart, so the output is deterministic.
    pub fn eulerian_circuit(&self) -> Result<Vec<Dart>> {
        if self.edge_count() == 0 || !self.is_connected() {
            return Err(Error::Precondition(
                "Eulerian circuit needs a connected graph with at least one edge".into(),
            ));
        }
        if let Some(v) = (0..self.vertex_count()).find(|&v| self.degree(v) % 2 == 1) {
            return Err(Error::Precondition(format!(
                "vertex {v} has odd degree {}",
                self.degree(v)
            )));
        }
        let mut used = vec![false; self.edge_count()];
        let mut cursor = vec![0usize; self.vertex_count()];
        let start = self.home(Dart::from_index(0));
        let mut stack: Vec<(usize, Option<Dart>)> = vec![(start, None)];
        let mut circuit = Vec::with_capacity(self.edge_count());
        while let Some(&(v, arrived_by)) = stack.last() {
            let darts = self.darts_at(v);
            while cursor[v] < darts.len() && used[darts[cursor[v]].edge()] {
                cursor[v] += 1;
            }
            if let Some(&d) = darts.get(cursor[v]) {
                used[d.edge()] = true;
                stack.push((self.home(d.twin()), Some(d)));
            } else {
                stack.pop();
                if let Some(d) = arrived_by {
                    circuit.push(d);
                }
            }
        }
        circuit.reverse();
        debug_assert!(self.is_eulerian_circuit(&circuit));
        Ok(circuit)
    }

    /// Every edge used once and consecutive darts meet at a common vertex,
    /// including the wrap-around.
    pub fn is_eulerian_circuit(&self, circuit: &[Dart]) -> bool {
        if circuit.len() != self.edge_count() || circuit.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.edge_count()];
        for (k, &d) in circuit.iter().enumerate() {
            if d.index() >= self.dart_count() || std::mem::replace(&mut seen[d.edge()], true) {
                return false;
            }
            let next = circuit[(k + 1) % circuit.len()];
            if next.index() >= self.dart_count() || self.home(d.twin()) != self.home(next) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_loop() {
        let c = Multigraph::bouquet(1).eulerian_circuit().unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn figure_eight() {
        let g = Multigraph::bouquet(2);
        let c = g.eulerian_circuit().unwrap();
        assert_eq!(c.len(), 2);
        assert!(g.is_eulerian_circuit(&c));
    }

    #[test]
    fn k5_covers_all_edges() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = Multigraph::build(5, &edges).unwrap();
        let c = k5.eulerian_circuit().unwrap();
        assert_eq!(c.len(), 10);
        assert!(k5.is_eulerian_circuit(&c));
    }

    #[test]
    fn rejects_odd_or_disconnected() {
        let path = Multigraph::build(2, &[(0, 1)]).unwrap();
        assert!(matches!(path.eulerian_circuit(), Err(Error::Precondition(_))));
        let two = Multigraph::bouquet(1).disjoint_union(&Multigraph::bouquet(1));
        assert!(matches!(two.eulerian_circuit(), Err(Error::Precondition(_))));
    }
}
