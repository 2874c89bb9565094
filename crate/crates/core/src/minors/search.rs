//! Pivot-minor and vertex-minor containment with replayable witnesses.
//!
//! The search removes one vertex at a time. If `H` is a pivot-minor of `G`
//! and `v` is not kept, then `H` is a pivot-minor of `G - v` or of
//! `G ∧ vw - v` for any fixed neighbour `w` of `v`; for vertex-minors
//! `G * v - v` is a third option. So every level holds graphs one vertex
//! smaller, deduplicated by canonical form, until `|V(H)|` is reached. A
//! graph of that size contains `H` exactly when it is pivot (or locally)
//! equivalent to `H`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, find_isomorphism, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

use super::induced::find_induced;

/// One rewriting step; vertex numbers refer to the graph at that moment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    Pivot {
        u: usize,
        v: usize,
    },
    LocalComp {
        u: usize,
    },
    /// Survivors keep their relative order.
    Delete {
        v: usize,
    },
}

impl Step {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            Step::Pivot { u, v } => g.pivot(u, v),
            Step::LocalComp { u } => g.local_complement(u),
            Step::Delete { v } => g.delete_vertex(v),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PivotSequence {
    pub steps: Vec<Step>,
}

impl PivotSequence {
    pub fn new(steps: Vec<Step>) -> PivotSequence {
        PivotSequence { steps }
    }

    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        self.steps.iter().try_fold(g.clone(), |h, s| s.apply(&h))
    }

    /// The same rewriting with each pivot written as `* u * v * u`.
    pub fn expand_pivots(&self) -> PivotSequence {
        let steps = self
            .steps
            .iter()
            .flat_map(|s| match *s {
                Step::Pivot { u, v } => vec![
                    Step::LocalComp { u },
                    Step::LocalComp { u: v },
                    Step::LocalComp { u },
                ],
                other => vec![other],
            })
            .collect();
        PivotSequence { steps }
    }

    pub fn uses_local_complementation(&self) -> bool {
        self.steps
            .iter()
            .any(|s| matches!(s, Step::LocalComp { .. }))
    }

    /// Deletes every vertex outside `keep`, highest first, so that earlier
    /// deletions do not renumber later ones.
    pub fn delete_all_but(n: usize, keep: &crate::VertexSet) -> Vec<Step> {
        (0..n)
            .rev()
            .filter(|&v| !keep.contains(v))
            .map(|v| Step::Delete { v })
            .collect()
    }
}

/// Certificate that `pattern` is a pivot-minor (or vertex-minor) of a
/// source graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentWitness {
    pub sequence: PivotSequence,
    /// `iso[v]` is the pattern vertex matched to vertex `v` of the replay.
    pub iso: Vec<usize>,
}

impl ContainmentWitness {
    pub fn verify(&self, source: &Graph, pattern: &Graph) -> bool {
        let Ok(result) = self.sequence.replay(source) else {
            return false;
        };
        let n = result.n();
        if n != pattern.n() || !crate::graph::is_permutation(&self.iso, n) {
            return false;
        }
        (0..n).all(|a| {
            (a + 1..n).all(|b| result.has_edge(a, b) == pattern.has_edge(self.iso[a], self.iso[b]))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorKind {
    Pivot,
    Vertex,
}

pub const DEFAULT_MINOR_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorOptions {
    pub cap: usize,
    pub exec: Exec,
}

impl Default for MinorOptions {
    fn default() -> Self {
        MinorOptions {
            cap: DEFAULT_MINOR_CAP,
            exec: Exec::default(),
        }
    }
}

pub fn contains_pivot_minor(g: &Graph, h: &Graph) -> Result<Option<ContainmentWitness>> {
    contains_minor_with(g, h, MinorKind::Pivot, MinorOptions::default())
}

pub fn contains_vertex_minor(g: &Graph, h: &Graph) -> Result<Option<ContainmentWitness>> {
    contains_minor_with(g, h, MinorKind::Vertex, MinorOptions::default())
}

/// Rewrites allowed without deleting anything.
fn moves(g: &Graph, kind: MinorKind) -> Vec<Step> {
    match kind {
        MinorKind::Pivot => g
            .edges()
            .into_iter()
            .map(|(u, v)| Step::Pivot { u, v })
            .collect(),
        MinorKind::Vertex => (0..g.n()).map(|u| Step::LocalComp { u }).collect(),
    }
}

/// Ways to remove vertex `v`, deletion first.
fn removals(g: &Graph, v: usize, kind: MinorKind) -> Vec<Vec<Step>> {
    let mut out = vec![vec![Step::Delete { v }]];
    if let Some(w) = g.neighbors(v).first() {
        if kind == MinorKind::Vertex {
            out.push(vec![Step::LocalComp { u: v }, Step::Delete { v }]);
        }
        out.push(vec![Step::Pivot { u: v, v: w }, Step::Delete { v }]);
    }
    out
}

/// The class of `h` under pivots (or local complementations), as one
/// representative graph per isomorphism class.
pub fn equivalence_class(h: &Graph, kind: MinorKind) -> Vec<Graph> {
    let mut seen = HashSet::from([canonical_form(h)]);
    let mut out = vec![h.clone()];
    let mut i = 0;
    while i < out.len() {
        let g = out[i].clone();
        for m in moves(&g, kind) {
            let next = m.apply(&g).expect("moves are valid");
            if seen.insert(canonical_form(&next)) {
                out.push(next);
            }
        }
        i += 1;
    }
    out
}

/// Steps turning `start` into a graph isomorphic to `goal` without
/// deletions, by breadth-first search, with the final isomorphism.
fn connect(start: &Graph, goal: &Graph, kind: MinorKind) -> Option<(Vec<Step>, Vec<usize>)> {
    let mut seen = HashSet::from([canonical_form(start)]);
    let mut queue = VecDeque::from([(start.clone(), Vec::<Step>::new())]);
    while let Some((g, trail)) = queue.pop_front() {
        if let Some(iso) = find_isomorphism(&g, goal) {
            return Some((trail, iso));
        }
        for m in moves(&g, kind) {
            let next = m.apply(&g).expect("moves are valid");
            if seen.insert(canonical_form(&next)) {
                let mut t = trail.clone();
                t.push(m);
                queue.push_back((next, t));
            }
        }
    }
    None
}

fn induced_witness(g: &Graph, h: &Graph) -> Option<ContainmentWitness> {
    let emb = find_induced(g, h)?;
    let keep: crate::VertexSet = emb.iter().collect();
    let steps = PivotSequence::delete_all_but(g.n(), &keep);
    // Survivors are the kept vertices in increasing order.
    let survivors = keep.to_vec();
    let iso = survivors
        .iter()
        .map(|&v| emb.iter().position(|&e| e == v).unwrap())
        .collect();
    Some(ContainmentWitness {
        sequence: PivotSequence::new(steps),
        iso,
    })
}

struct State {
    graph: Graph,
    trail: Vec<Step>,
}

/// Whether `h` is isomorphic to a pivot-minor (or vertex-minor) of `g`.
///
/// Levels are explored in order, children in vertex order with deletion
/// first, so the witness is deterministic and independent of `exec`.
pub fn contains_minor_with(
    g: &Graph,
    h: &Graph,
    kind: MinorKind,
    opts: MinorOptions,
) -> Result<Option<ContainmentWitness>> {
    if g.n() > opts.cap {
        return Err(Error::SizeCap {
            what: "minor search",
            size: g.n(),
            cap: opts.cap,
        });
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    if let Some(w) = induced_witness(g, h) {
        return Ok(Some(w));
    }
    let class = equivalence_class(h, kind);
    let targets: HashSet<CanonicalForm> = class.iter().map(canonical_form).collect();
    let mut seen = HashSet::from([canonical_form(g)]);
    let mut level = vec![State {
        graph: g.clone(),
        trail: Vec::new(),
    }];
    let finish = |s: &State| -> Option<ContainmentWitness> {
        if s.graph.n() == h.n() {
            if !targets.contains(&canonical_form(&s.graph)) {
                return None;
            }
            let (more, iso) =
                connect(&s.graph, h, kind).expect("class members are connected by moves");
            let mut steps = s.trail.clone();
            steps.extend(more);
            return Some(ContainmentWitness {
                sequence: PivotSequence::new(steps),
                iso,
            });
        }
        // Deleting down to an induced copy of a class member also works.
        class.iter().find_map(|member| {
            let w = induced_witness(&s.graph, member)?;
            let reduced = w.sequence.replay(&s.graph).ok()?;
            let (more, iso) = connect(&reduced, h, kind)?;
            let mut steps = s.trail.clone();
            steps.extend(w.sequence.steps);
            steps.extend(more);
            Some(ContainmentWitness {
                sequence: PivotSequence::new(steps),
                iso,
            })
        })
    };
    loop {
        let found = opts.exec.map(&level, |s| finish(s));
        if let Some(w) = found.into_iter().flatten().next() {
            debug_assert!(w.verify(g, h));
            return Ok(Some(w));
        }
        if level.is_empty() || level[0].graph.n() == h.n() {
            return Ok(None);
        }
        let children: Vec<Vec<(CanonicalForm, State)>> = opts.exec.map(&level, |s| {
            (0..s.graph.n())
                .flat_map(|v| removals(&s.graph, v, kind))
                .map(|steps| {
                    let graph = steps
                        .iter()
                        .try_fold(s.graph.clone(), |x, st| st.apply(&x))
                        .expect("valid removal");
                    let mut trail = s.trail.clone();
                    trail.extend(steps);
                    (canonical_form(&graph), State { graph, trail })
                })
                .collect()
        });
        level = Vec::new();
        for (form, state) in children.into_iter().flatten() {
            if seen.insert(form) {
                level.push(state);
            }
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::constructions::named;

    /// Every pivot-minor (or vertex-minor) of `g` up to isomorphism, by
    /// closing under all moves and all deletions.
    pub(crate) fn closure(g: &Graph, kind: MinorKind) -> HashSet<CanonicalForm> {
        let mut seen = HashSet::from([canonical_form(g)]);
        let mut queue = vec![g.clone()];
        while let Some(x) = queue.pop() {
            let mut next: Vec<Graph> = moves(&x, kind)
                .iter()
                .map(|m| m.apply(&x).unwrap())
                .collect();
            next.extend((0..x.n()).map(|v| x.delete_vertex(v).unwrap()));
            for y in next {
                if seen.insert(canonical_form(&y)) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn spec_examples() {
        let w = contains_pivot_minor(&named::path(4), &named::path(3))
            .unwrap()
            .unwrap();
        assert!(w
            .sequence
            .steps
            .iter()
            .all(|s| matches!(s, Step::Delete { .. })));
        assert!(w.verify(&named::path(4), &named::path(3)));
        let c4 = named::cycle(4).unwrap();
        let k3 = named::complete(3);
        assert!(contains_pivot_minor(&c4, &k3).unwrap().is_none());
        let w = contains_vertex_minor(&c4, &k3).unwrap().unwrap();
        assert!(w.verify(&c4, &k3));
        let c5 = named::cycle(5).unwrap();
        assert!(contains_pivot_minor(&c5, &named::path(4))
            .unwrap()
            .unwrap()
            .verify(&c5, &named::path(4)));
        assert!(contains_pivot_minor(&Graph::empty(13), &k3).is_err());
    }

    #[test]
    fn tree_in_its_subdivision() {
        let t = named::spider(1, 2, 2);
        let s = crate::constructions::trees::subdivide(&t);
        let w = contains_vertex_minor(&s, &t).unwrap().unwrap();
        assert!(w.verify(&s, &t));
    }

    #[test]
    fn expanded_pivots_replay_identically() {
        let g = named::wheel(5).unwrap();
        let w = contains_pivot_minor(&g, &named::cycle(4).unwrap()).unwrap();
        if let Some(w) = w {
            let expanded = ContainmentWitness {
                sequence: w.sequence.expand_pivots(),
                iso: w.iso.clone(),
            };
            assert!(expanded.verify(&g, &named::cycle(4).unwrap()));
        }
    }

    #[test]
    fn matches_exhaustive_closure() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let patterns: Vec<Graph> = (1..=5)
            .flat_map(|n| crate::constructions::enumerate::all_graphs(n).unwrap())
            .collect();
        for round in 0..24 {
            let n = 3 + round % 4;
            let g = crate::constructions::random::gnp(&mut rng, n, 0.5);
            for kind in [MinorKind::Pivot, MinorKind::Vertex] {
                let all = closure(&g, kind);
                for h in patterns.iter().filter(|h| h.n() <= n) {
                    let opts = MinorOptions {
                        cap: 12,
                        exec: Exec::Sequential,
                    };
                    let got = contains_minor_with(&g, h, kind, opts).unwrap();
                    assert_eq!(
                        got.is_some(),
                        all.contains(&canonical_form(h)),
                        "{g:?} {h:?} {kind:?}"
                    );
                    if let Some(w) = got {
                        assert!(w.verify(&g, h));
                        if kind == MinorKind::Pivot {
                            assert!(!w.sequence.uses_local_complementation());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let g = crate::constructions::random::random_dh(3, 10);
        let h = named::spider(1, 2, 2);
        let run = |exec| {
            contains_minor_with(&g, &h, MinorKind::Pivot, MinorOptions { cap: 12, exec }).unwrap()
        };
        assert_eq!(run(Exec::Sequential), run(Exec::Parallel));
    }
}
