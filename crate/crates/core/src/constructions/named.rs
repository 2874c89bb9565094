//! Named graphs with fixed vertex numberings.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("fixed construction is valid")
}

/// `P_n`: vertices `0..n` in path order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// `C_n` for `n >= 3`: vertices `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition("a cycle needs at least three vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// `K_{m,n}`: one side is `0..m`, the other `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges: Vec<_> = (0..m)
        .flat_map(|a| (m..m + n).map(move |b| (a, b)))
        .collect();
    build(m + n, &edges)
}

/// `W_n` for `n >= 3`: hub 0 and rim `1..=n` in cyclic order.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition(
            "a wheel needs a rim of at least three vertices",
        ));
    }
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i % n + 1)));
    Ok(build(n + 1, &edges))
}

/// Triangle `0 1 2` with pendants 3 at 0 and 4 at 2.
pub fn bull() -> Graph {
    build(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 2)])
}

/// `K_4` minus the edge `01`, with pendant 4 at vertex 2.
pub fn dart() -> Graph {
    build(5, &[(0, 3), (3, 1), (1, 2), (2, 0), (2, 3), (4, 2)])
}

/// Triangles `a1 a2 a3 = 0 1 2` and `b1 b2 b3 = 3 4 5`, matching `a_i b_i`,
/// and `b4 = 6` adjacent to `b1, b2, b3`.
pub fn bw3() -> Graph {
    build(
        7,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
            (6, 3),
            (6, 4),
            (6, 5),
        ],
    )
}

/// `S_{i,j,k}`: centre 0, then the three legs in turn, each numbered
/// outwards from the centre.
pub fn spider(i: usize, j: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [i, j, k] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(next, &edges)
}

pub fn claw() -> Graph {
    spider(1, 1, 1)
}

/// Isolated vertex 0 and edges `12`, `34`.
pub fn p1_plus_2p2() -> Graph {
    build(5, &[(1, 2), (3, 4)])
}

/// Edges `01` and `23`.
pub fn two_p2() -> Graph {
    build(4, &[(0, 1), (2, 3)])
}

/// `k` isolated vertices.
pub fn independent(k: usize) -> Graph {
    Graph::empty(k)
}

/// `rows x cols` grid; vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    build(rows * cols, &edges)
}

/// Complete binary tree of height `h` (`2^(h+1) - 1` vertices) in heap
/// order: the children of `v` are `2v + 1` and `2v + 2`.
pub fn complete_binary_tree(h: usize) -> Graph {
    let n = (1usize << (h + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    build(n, &edges)
}

fn numbers(s: &str, digits: bool) -> Option<Vec<usize>> {
    let s = s.trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}' || c == '_');
    if s.is_empty() {
        return Some(Vec::new());
    }
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse().ok()).collect()
    } else if digits {
        // `S122` style: one digit per parameter.
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect()
    } else {
        s.parse().ok().map(|v| vec![v])
    }
}

/// Looks up a graph by name.
///
/// Accepted: `P5`, `C5`, `K4`, `K3,3` (or `K_{3,3}`), `W4`, `bull`, `dart`,
/// `bw3`, `claw`, `S1,2,2` (or `S122`, `S_{1,2,2}`), `P1+2P2`, `2P2`,
/// `3P1`, `grid(3,4)` and `cbt(3)` (or `complete_binary_tree(3)`).
pub fn named(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownFamily(name.to_string());
    let key = name.trim();
    match key.to_ascii_lowercase().as_str() {
        "bull" => return Ok(bull()),
        "dart" => return Ok(dart()),
        "bw3" | "bw_3" => return Ok(bw3()),
        "claw" => return Ok(claw()),
        "p1+2p2" => return Ok(p1_plus_2p2()),
        "2p2" => return Ok(two_p2()),
        "3p1" => return Ok(independent(3)),
        _ => {}
    }
    let lower = key.to_ascii_lowercase();
    for (prefix, arity) in [("complete_binary_tree", 1), ("cbt", 1), ("grid", 2)] {
        if let Some(rest) = lower.strip_prefix(prefix) {
            let p = numbers(rest, false)
                .filter(|p| p.len() == arity)
                .ok_or_else(unknown)?;
            return Ok(if arity == 1 {
                complete_binary_tree(p[0])
            } else {
                grid(p[0], p[1])
            });
        }
    }
    let mut chars = key.chars();
    let head = chars.next().ok_or_else(unknown)?;
    let p = numbers(chars.as_str(), head == 'S').ok_or_else(unknown)?;
    match (head, p.as_slice()) {
        ('P', &[n]) => Ok(path(n)),
        ('C', &[n]) => cycle(n),
        ('K', &[n]) => Ok(complete(n)),
        ('K', &[m, n]) => Ok(complete_bipartite(m, n)),
        ('W', &[n]) => wheel(n),
        ('S', &[i, j, k]) => Ok(spider(i, j, k)),
        _ => Err(unknown()),
    }
}
