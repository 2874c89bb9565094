//! Local complementation and pivoting performed bag by bag.

use crate::error::{Error, Result};

use super::{Bag, Node, SplitDecomposition};

impl SplitDecomposition {
    fn check_unmarked(&self, x: usize) -> Result<(usize, usize)> {
        self.locate_vertex(x).ok_or(Error::NotUnmarked(x))
    }

    /// Nodes representing the unmarked vertex `x`, one per bag at most,
    /// starting with `x` itself.
    pub fn representatives(&self, x: usize) -> Result<Vec<(usize, usize)>> {
        let start = self.check_unmarked(x)?;
        let mut out = vec![start];
        let mut i = 0;
        while i < out.len() {
            let (b, local) = out[i];
            let bag = &self.bags()[b];
            for w in bag.graph.neighbors(local).iter() {
                if let Node::Marker(id) = bag.nodes[w] {
                    out.push(self.partner(id));
                }
            }
            i += 1;
        }
        Ok(out)
    }

    /// The alternating path between unmarked `x` and `y`, as one unmarked
    /// bag edge `(bag, v, w)` per bag it crosses, walking from `x` to `y`.
    pub fn alternating_path(&self, x: usize, y: usize) -> Result<Vec<(usize, usize, usize)>> {
        let start = self.check_unmarked(x)?;
        let target = self.check_unmarked(y)?;
        if x == y {
            return Err(Error::NotLinked { x, y });
        }
        // Depth-first over (bag, entry node); the bag tree makes paths unique.
        let mut stack: Vec<(usize, usize)> = vec![start];
        let mut trail: Vec<(usize, usize, usize)> = Vec::new();
        let mut pending: Vec<Vec<usize>> = Vec::new();
        let neighbours = |(b, v): (usize, usize)| -> Vec<usize> {
            self.bags()[b].graph.neighbors(v).iter().collect()
        };
        pending.push(neighbours(start));
        while let Some(&(b, v)) = stack.last() {
            let Some(w) = pending.last_mut().unwrap().pop() else {
                stack.pop();
                pending.pop();
                trail.pop();
                continue;
            };
            if (b, w) == target {
                trail.push((b, v, w));
                return Ok(trail);
            }
            if let Node::Marker(id) = self.bags()[b].nodes[w] {
                let next = self.partner(id);
                trail.push((b, v, w));
                stack.push(next);
                pending.push(neighbours(next));
            }
        }
        Err(Error::NotLinked { x, y })
    }

    /// `D * x`: local complementation in every bag at the representative of `x`.
    pub fn local_complement(&self, x: usize) -> Result<SplitDecomposition> {
        let reps = self.representatives(x)?;
        let mut bags: Vec<Bag> = self.bags().to_vec();
        for (b, w) in reps {
            bags[b].graph = bags[b].graph.local_complement(w)?;
        }
        SplitDecomposition::normalized(self.vertex_count(), bags)
    }

    /// `D ∧ xy`: pivots every bag on its edge of the alternating path.
    pub fn pivot(&self, x: usize, y: usize) -> Result<SplitDecomposition> {
        let path = self.alternating_path(x, y)?;
        let mut bags: Vec<Bag> = self.bags().to_vec();
        for (b, v, w) in path {
            bags[b].graph = bags[b].graph.pivot(v, w)?;
        }
        SplitDecomposition::normalized(self.vertex_count(), bags)
    }
}
