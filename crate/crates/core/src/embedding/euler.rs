use super::RotationSystem;
use crate::error::{Error, Result};
use crate::multigraph::{Dart, Multigraph};

impl RotationSystem {
    /// Rotation in which the Eulerian circuit `d_1 .. d_n` is one boundary walk.
    ///
    /// At the vertex between consecutive darts the arriving dart
    /// `twin(d_{k-1})` is immediately followed by the leaving dart `d_k`
    /// (wrapping from `d_n` to `d_1`). The (in, out) pairs at a vertex are
    /// concatenated by smallest dart, then the list is rotated to start at
    /// its smallest dart.
    pub fn from_euler_circuit(g: &Multigraph, circuit: &[Dart]) -> Result<RotationSystem> {
        if !g.is_eulerian_circuit(circuit) {
            return Err(Error::Input("not an Eulerian circuit of this graph".into()));
        }
        let n = circuit.len();
        let mut pairs: Vec<Vec<[Dart; 2]>> = vec![Vec::new(); g.vertex_count()];
        for k in 0..n {
            let arrive = circuit[(k + n - 1) % n].twin();
            let leave = circuit[k];
            pairs[g.home(leave)].push([arrive, leave]);
        }
        let orders = pairs
            .into_iter()
            .map(|mut ps| {
                ps.sort_by_key(|p| p[0].min(p[1]));
                ps.into_iter().flatten().collect()
            })
            .collect();
        Ok(RotationSystem::new(g, orders)?.canonical())
    }
}

/// Free-function form of [`RotationSystem::from_euler_circuit`].
pub fn rotation_from_euler(g: &Multigraph, circuit: &[Dart]) -> Result<RotationSystem> {
    RotationSystem::from_euler_circuit(g, circuit)
}
