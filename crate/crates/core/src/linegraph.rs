//! The directed line-graph operator, iterated line digraphs, path counting,
//! and the classical graph families.
//!
//! Conventions: the vertices of `line G` are the edge ids of `G` verbatim,
//! and a line-graph edge `(e1, e2)` gets the id `e1|e2`. Iterated line
//! graphs label a vertex by its defining edge path joined with `|`, so the
//! ids of `line^1 G` coincide with those of `line G`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_traits::One;

use crate::digraph::DirectedMultigraph;
use crate::error::{Error, Result};

/// A directed path written as the sequence of edge ids it traverses.
pub type PathVertexLabel = Vec<String>;

/// `line G` together with the correspondence between its vertices and the
/// edges of `G`.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: DirectedMultigraph,
    /// line-graph vertex id -> original edge id (the identity by our
    /// labelling convention, recorded for explicitness).
    pub vertex_edge: BTreeMap<String, String>,
    /// line-graph edge id -> the ordered pair of original edge ids.
    pub edge_pair: BTreeMap<String, (String, String)>,
}

/// Builds the directed line graph: one vertex per edge of `g`, and an edge
/// `(e1, e2)` whenever `t(e1) = s(e2)`.
pub fn line_graph(g: &DirectedMultigraph) -> LineGraph {
    let mut lg = DirectedMultigraph::new();
    let mut vertex_edge = BTreeMap::new();
    for e in g.edges() {
        lg.add_vertex(&e.id).expect("edge ids are unique");
        vertex_edge.insert(e.id.clone(), e.id.clone());
    }
    let mut edge_pair = BTreeMap::new();
    for e1 in g.edges() {
        for e2 in g.edges() {
            if e1.target == e2.source {
                let id = format!("{}|{}", e1.id, e2.id);
                lg.add_edge(&id, &e1.id, &e2.id)
                    .expect("pair ids are unique");
                edge_pair.insert(id, (e1.id.clone(), e2.id.clone()));
            }
        }
    }
    LineGraph {
        graph: lg,
        vertex_edge,
        edge_pair,
    }
}

/// `line^n G` with its path labels.
#[derive(Debug, Clone)]
pub struct IteratedLineGraph {
    pub graph: DirectedMultigraph,
    /// vertex id -> the n-edge path it stands for (empty for n = 0).
    pub vertex_paths: BTreeMap<String, PathVertexLabel>,
    /// edge id -> the (n+1)-edge path it stands for.
    pub edge_paths: BTreeMap<String, PathVertexLabel>,
}

fn join_path(path: &[String]) -> String {
    path.join("|")
}

/// All directed paths of exactly `n` edges, in lexicographic-by-construction
/// order. `n = 0` is not handled here (those are the vertices themselves).
fn edge_paths(g: &DirectedMultigraph, n: usize) -> Vec<Vec<usize>> {
    debug_assert!(n >= 1);
    let edges = g.edges();
    let mut paths: Vec<Vec<usize>> = (0..edges.len()).map(|i| vec![i]).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &paths {
            let tail = &edges[*p.last().unwrap()].target;
            for (i, e) in edges.iter().enumerate() {
                if &e.source == tail {
                    let mut q = p.clone();
                    q.push(i);
                    next.push(q);
                }
            }
        }
        paths = next;
    }
    paths
}

/// Builds the iterated line digraph `line^n G`: vertices are the directed
/// `n`-edge paths of `g`, edges the `(n+1)`-edge paths, with source and
/// target the leading and trailing `n`-edge subpaths. `line^0 G = G`.
pub fn iterated_line_graph(g: &DirectedMultigraph, n: usize) -> IteratedLineGraph {
    if n == 0 {
        let mut vertex_paths = BTreeMap::new();
        for v in g.vertices() {
            vertex_paths.insert(v.clone(), Vec::new());
        }
        let mut edge_paths_map = BTreeMap::new();
        for e in g.edges() {
            edge_paths_map.insert(e.id.clone(), vec![e.id.clone()]);
        }
        return IteratedLineGraph {
            graph: g.clone(),
            vertex_paths,
            edge_paths: edge_paths_map,
        };
    }
    let edges = g.edges();
    let ids = |p: &[usize]| -> Vec<String> { p.iter().map(|&i| edges[i].id.clone()).collect() };

    let mut lg = DirectedMultigraph::new();
    let mut vertex_paths = BTreeMap::new();
    for p in edge_paths(g, n) {
        let label = ids(&p);
        let id = join_path(&label);
        lg.add_vertex(&id).expect("paths are distinct");
        vertex_paths.insert(id, label);
    }
    let mut edge_paths_map = BTreeMap::new();
    for p in edge_paths(g, n + 1) {
        let label = ids(&p);
        let id = join_path(&label);
        let source = join_path(&label[..n]);
        let target = join_path(&label[1..]);
        lg.add_edge(&id, &source, &target).expect("paths are distinct");
        edge_paths_map.insert(id, label);
    }
    IteratedLineGraph {
        graph: lg,
        vertex_paths,
        edge_paths: edge_paths_map,
    }
}

/// `p(n, v)`: the number of directed `n`-edge paths ending at each vertex.
/// Satisfies `p(0, v) = 1` and `p(n+1, v) = Σ_{t(e)=v} p(n, s(e))`.
pub fn path_count(g: &DirectedMultigraph, n: usize) -> BTreeMap<String, BigInt> {
    let verts = g.vertices();
    let mut counts: Vec<BigInt> = vec![BigInt::one(); verts.len()];
    for _ in 0..n {
        let mut next = vec![BigInt::from(0); verts.len()];
        for e in g.edges() {
            let s = g.vertex_position(&e.source).unwrap();
            let t = g.vertex_position(&e.target).unwrap();
            next[t] += &counts[s];
        }
        counts = next;
    }
    verts.iter().cloned().zip(counts).collect()
}

/// Vertex id used for the empty binary word (the single vertex of `DB_0`).
pub const EMPTY_WORD: &str = "-";

fn word_id(w: &str) -> String {
    if w.is_empty() {
        EMPTY_WORD.to_string()
    } else {
        w.to_string()
    }
}

/// The de Bruijn graph `DB_n`: vertices are binary words of length `n`,
/// with an edge `b -> b'` (id: the (n+1)-letter word `b · b'_n`) whenever
/// `b'` is `b` shifted left by one letter. `DB_0` is one vertex with two
/// loops `0` and `1`.
pub fn de_bruijn(n: u32) -> Result<DirectedMultigraph> {
    if n > 16 {
        return Err(Error::InvalidParameter(format!(
            "de Bruijn order {n} is beyond desk scale"
        )));
    }
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| ["0", "1"].map(|c| format!("{w}{c}")))
            .collect();
    }
    let mut g = DirectedMultigraph::new();
    for w in &words {
        g.add_vertex(&word_id(w))?;
    }
    for w in &words {
        for c in ["0", "1"] {
            let edge_word = format!("{w}{c}");
            let target = &edge_word[1..];
            g.add_edge(&edge_word, &word_id(w), &word_id(target))?;
        }
    }
    Ok(g)
}

/// The Kautz graph `Kautz_n`: vertices are words of length `n` over
/// `{1,2,3}` with no two equal consecutive letters; edges extend a word by
/// one letter and drop the first.
pub fn kautz(n: u32) -> Result<DirectedMultigraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "Kautz graphs start at n = 1".to_string(),
        ));
    }
    if n > 16 {
        return Err(Error::InvalidParameter(format!(
            "Kautz order {n} is beyond desk scale"
        )));
    }
    let mut words: Vec<String> = ["1", "2", "3"].map(String::from).to_vec();
    for _ in 1..n {
        words = words
            .iter()
            .flat_map(|w| {
                ["1", "2", "3"]
                    .into_iter()
                    .filter(|c| !w.ends_with(c))
                    .map(move |c| format!("{w}{c}"))
            })
            .collect();
    }
    let mut g = DirectedMultigraph::new();
    for w in &words {
        g.add_vertex(w)?;
    }
    for w in &words {
        for c in ["1", "2", "3"] {
            if w.ends_with(c) {
                continue;
            }
            let edge_word = format!("{w}{c}");
            let target = &edge_word[1..];
            g.add_edge(&edge_word, w, target)?;
        }
    }
    Ok(g)
}

/// Complete directed graph on `n` vertices, with a loop at each vertex.
pub fn complete_directed(n: u32) -> Result<DirectedMultigraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete directed graph needs n >= 1".to_string(),
        ));
    }
    let mut g = DirectedMultigraph::new();
    for i in 1..=n {
        g.add_vertex(&i.to_string())?;
    }
    for i in 1..=n {
        for j in 1..=n {
            g.add_edge(&format!("{i}>{j}"), &i.to_string(), &j.to_string())?;
        }
    }
    Ok(g)
}

/// Bidirected complete bipartite graph on parts `x1..xm` and `y1..yn`.
pub fn bidirected_complete_bipartite(m: u32, n: u32) -> Result<DirectedMultigraph> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter(
            "bipartite parts must be nonempty".to_string(),
        ));
    }
    let mut g = DirectedMultigraph::new();
    for i in 1..=m {
        g.add_vertex(&format!("x{i}"))?;
    }
    for j in 1..=n {
        g.add_vertex(&format!("y{j}"))?;
    }
    for i in 1..=m {
        for j in 1..=n {
            g.add_edge(&format!("x{i}>y{j}"), &format!("x{i}"), &format!("y{j}"))?;
            g.add_edge(&format!("y{j}>x{i}"), &format!("y{j}"), &format!("x{i}"))?;
        }
    }
    Ok(g)
}

/// The two-vertex graph whose iterated line graphs are labelled by binary
/// words with no two consecutive 1s; vertex counts follow the Fibonacci
/// numbers.
pub fn fibonacci_graph() -> DirectedMultigraph {
    let mut g = DirectedMultigraph::new();
    g.add_edge("00", "0", "0").unwrap();
    g.add_edge("01", "0", "1").unwrap();
    g.add_edge("10", "1", "0").unwrap();
    g
}

/// One vertex carrying `k` loops named `0..k`; its line graph is the
/// complete directed graph on `k` vertices.
pub fn single_vertex_with_loops(k: u32) -> DirectedMultigraph {
    let mut g = DirectedMultigraph::new();
    g.add_vertex(EMPTY_WORD).unwrap();
    for i in 0..k {
        g.add_edge(&i.to_string(), EMPTY_WORD, EMPTY_WORD).unwrap();
    }
    g
}

/// Flattens a word-model path label into the word it spells: the first
/// edge word followed by the last letter of each subsequent edge word.
pub fn path_to_word(path: &[String]) -> String {
    let mut w = String::new();
    for (i, part) in path.iter().enumerate() {
        let part = if part == EMPTY_WORD { "" } else { part };
        if i == 0 {
            w.push_str(part);
        } else if let Some(c) = part.chars().last() {
            w.push(c);
        }
    }
    w
}
