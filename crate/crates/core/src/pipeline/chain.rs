//! Width-1 orderings of bipartite chain graphs.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::constructions::named;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::is_h_free;
use crate::width::WidthCertificate;

use super::{certify, on_components};

/// Blocks `A_1..A_m` (twin classes of one side, neighbourhoods strictly
/// increasing) and `B_i = N(A_i) - N(A_{i-1})` of one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainBlocks {
    pub a: Vec<VertexSet>,
    pub b: Vec<VertexSet>,
}

impl ChainBlocks {
    /// `B_1, A_1, B_2, A_2, ...`, each block in increasing vertex order.
    pub fn ordering(&self) -> Vec<usize> {
        self.b
            .iter()
            .zip(&self.a)
            .flat_map(|(b, a)| b.iter().chain(a.iter()))
            .collect()
    }
}

/// Chain blocks of a connected bipartite `2P2`-free graph.
pub(crate) fn chain_blocks(g: &Graph) -> Result<ChainBlocks> {
    if g.n() == 1 {
        return Ok(ChainBlocks {
            a: vec![VertexSet::singleton(0)],
            b: vec![VertexSet::empty()],
        });
    }
    let (side_a, side_b) = g
        .bipartition()
        .ok_or_else(|| Error::precondition("graph is not bipartite"))?;
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in side_a.iter() {
        match classes
            .iter_mut()
            .find(|c| g.neighbors(c.first().unwrap()) == g.neighbors(v))
        {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes.sort_by_key(|c| (g.degree(c.first().unwrap()), c.first()));
    let nb = |c: &VertexSet| g.neighbors(c.first().unwrap());
    let mut b = Vec::with_capacity(classes.len());
    let mut prev = VertexSet::empty();
    for c in &classes {
        let cur = nb(c);
        if !prev.is_subset(&cur) || prev == cur {
            return Err(Error::structure(
                "neighbourhoods of the twin classes are not a strict chain",
            ));
        }
        b.push(cur.difference(&prev));
        prev = cur;
    }
    if prev != side_b {
        return Err(Error::structure("chain blocks do not cover the other side"));
    }
    Ok(ChainBlocks { a: classes, b })
}

pub(crate) fn check_bipartite(g: &Graph) -> Result<()> {
    if g.is_bipartite() {
        Ok(())
    } else {
        Err(Error::precondition("graph is not bipartite"))
    }
}

/// A certificate of width at most 1 for a bipartite graph whose components
/// are `2P2`-free, with the chain blocks of each component in original
/// vertex numbers.
pub fn chain_ordering_with_blocks(g: &Graph) -> Result<(WidthCertificate, Vec<ChainBlocks>)> {
    check_bipartite(g)?;
    let (ordering, blocks) = on_components(g, |c, map| {
        if !is_h_free(c, &[named::two_p2()]) {
            return Err(Error::precondition("a component contains an induced 2P2"));
        }
        let local = chain_blocks(c)?;
        let relabel = |s: &VertexSet| s.iter().map(|v| map.new_to_old[v]).collect::<VertexSet>();
        let blocks = ChainBlocks {
            a: local.a.iter().map(relabel).collect(),
            b: local.b.iter().map(relabel).collect(),
        };
        Ok((local.ordering(), blocks))
    })?;
    Ok((certify(g, &ordering, 1, "chain ordering")?, blocks))
}

pub fn chain_ordering(g: &Graph) -> Result<WidthCertificate> {
    Ok(chain_ordering_with_blocks(g)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::exact_lrw;

    fn half_graph(k: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..=i {
                edges.push((i, k + j));
            }
        }
        Graph::from_edges(2 * k, &edges).unwrap()
    }

    #[test]
    fn examples() {
        let k = named::complete_bipartite(3, 4);
        assert!(chain_ordering(&k).unwrap().width <= 1);
        let h = half_graph(4);
        assert_eq!(chain_ordering(&h).unwrap().width, 1);
        assert_eq!(exact_lrw(&h).unwrap().0, 1);
        assert_eq!(chain_ordering(&named::path(4)).unwrap().width, 1);
        assert!(chain_ordering(&named::cycle(6).unwrap()).is_err());
        assert_eq!(chain_ordering(&named::two_p2()).unwrap().width, 1);
        assert!(chain_ordering(&named::complete(3)).is_err());
        let (_, blocks) = chain_ordering_with_blocks(&h).unwrap();
        for w in blocks[0].a.windows(2) {
            let n0 = h.neighborhood_of_set(&w[0]);
            let n1 = h.neighborhood_of_set(&w[1]);
            assert!(n0.is_subset(&n1) && n0 != n1);
        }
    }
}
