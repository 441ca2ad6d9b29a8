use super::{ControlError, DiscreteSystem};

/// Vertex-level reachability `x ⇝ y` within `1..=steps` steps of
/// `x ↦ g(x, u)` over input vertices `u`. Only a necessary condition for
/// controllability: interior points of simplices are not tracked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    pub steps: usize,
    /// State vertex indices, ascending; rows and columns follow this order.
    pub vertices: Vec<usize>,
    pub matrix: Vec<Vec<bool>>,
}

impl Reachability {
    pub fn reaches(&self, x: usize, y: usize) -> bool {
        let (Some(i), Some(j)) = (
            self.vertices.iter().position(|&v| v == x),
            self.vertices.iter().position(|&v| v == y),
        ) else {
            return false;
        };
        self.matrix[i][j]
    }

    pub fn is_complete(&self) -> bool {
        self.matrix.iter().all(|row| row.iter().all(|&b| b))
    }
}

impl DiscreteSystem {
    pub fn reachability_oracle(&self, steps: usize) -> Result<Reachability, ControlError> {
        if self.is_refined() {
            return Err(ControlError::RefinedUnsupported);
        }
        let vertices = self.state().pair().total().vertices();
        let inputs = self.input().vertices();
        let position = |v: usize| vertices.binary_search(&v).expect("state vertex");
        let one_step: Vec<Vec<usize>> = vertices
            .iter()
            .map(|&x| {
                let mut next: Vec<usize> = inputs
                    .iter()
                    .map(|&u| position(self.map().image_vertex(self.product().vertex(x, u))))
                    .collect();
                next.sort_unstable();
                next.dedup();
                next
            })
            .collect();
        let size = vertices.len();
        let mut matrix = vec![vec![false; size]; size];
        for (start, row) in matrix.iter_mut().enumerate() {
            let mut current = vec![false; size];
            current[start] = true;
            for _ in 0..steps {
                let mut next = vec![false; size];
                for (i, _) in current.iter().enumerate().filter(|(_, &on)| on) {
                    for &j in &one_step[i] {
                        next[j] = true;
                    }
                }
                for (r, &n) in row.iter_mut().zip(&next) {
                    *r |= n;
                }
                current = next;
            }
        }
        Ok(Reachability {
            steps,
            vertices,
            matrix,
        })
    }
}
