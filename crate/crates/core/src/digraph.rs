//! Directed multigraphs with opaque string ids.
//!
//! Loops and parallel edges are allowed. Vertices and edges keep their
//! insertion order, so matrix row/column indexing derived from a graph is
//! reproducible across runs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::{Error, Result};

/// One directed edge, from `source` to `target`. Loops (`source == target`)
/// are legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: String,
    pub source: String,
    pub target: String,
}

impl EdgeRecord {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite directed multigraph. Immutable once built; construction goes
/// through [`DirectedMultigraph::add_vertex`] / [`DirectedMultigraph::add_edge`].
#[derive(Debug, Clone, Default)]
pub struct DirectedMultigraph {
    vertices: Vec<String>,
    edges: Vec<EdgeRecord>,
    vertex_index: BTreeMap<String, usize>,
    edge_index: BTreeMap<String, usize>,
}

impl DirectedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex. Errors on a duplicate id.
    pub fn add_vertex(&mut self, id: &str) -> Result<()> {
        if self.vertex_index.contains_key(id) {
            return Err(Error::DuplicateVertex(id.to_string()));
        }
        self.vertex_index.insert(id.to_string(), self.vertices.len());
        self.vertices.push(id.to_string());
        Ok(())
    }

    fn ensure_vertex(&mut self, id: &str) {
        if !self.vertex_index.contains_key(id) {
            self.vertex_index.insert(id.to_string(), self.vertices.len());
            self.vertices.push(id.to_string());
        }
    }

    /// Adds an edge, declaring its endpoints if they are new. Errors on a
    /// duplicate edge id.
    pub fn add_edge(&mut self, id: &str, source: &str, target: &str) -> Result<()> {
        if self.edge_index.contains_key(id) {
            return Err(Error::DuplicateEdge(id.to_string()));
        }
        self.ensure_vertex(source);
        self.ensure_vertex(target);
        self.edge_index.insert(id.to_string(), self.edges.len());
        self.edges.push(EdgeRecord {
            id: id.to_string(),
            source: source.to_string(),
            target: target.to_string(),
        });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertex_index.contains_key(id)
    }

    pub fn edge(&self, id: &str) -> Option<&EdgeRecord> {
        self.edge_index.get(id).map(|&i| &self.edges[i])
    }

    /// Position of a vertex in the insertion order; this is its row/column
    /// index in every matrix derived from the graph.
    pub fn vertex_position(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn out_edges<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a EdgeRecord> {
        self.edges.iter().filter(move |e| e.source == v)
    }

    pub fn in_edges<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a EdgeRecord> {
        self.edges.iter().filter(move |e| e.target == v)
    }

    /// Number of edges with target `v`; a loop counts once.
    pub fn indegree(&self, v: &str) -> Result<usize> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(self.in_edges(v).count())
    }

    /// Number of edges with source `v`; a loop counts once.
    pub fn outdegree(&self, v: &str) -> Result<usize> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(self.out_edges(v).count())
    }

    /// Vertices with indegree zero, in insertion order.
    pub fn sources(&self) -> Vec<String> {
        let mut has_in = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_in[self.vertex_index[&e.target]] = true;
        }
        self.vertices
            .iter()
            .zip(&has_in)
            .filter(|(_, h)| !**h)
            .map(|(v, _)| v.clone())
            .collect()
    }

    pub fn has_source(&self) -> bool {
        !self.sources().is_empty()
    }

    /// True iff every vertex can reach every other by directed paths. A
    /// single vertex with no edges is strongly connected; so is the empty
    /// graph.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertices.len();
        if n <= 1 {
            return true;
        }
        let mut fwd = vec![Vec::new(); n];
        let mut bwd = vec![Vec::new(); n];
        for e in &self.edges {
            let s = self.vertex_index[&e.source];
            let t = self.vertex_index[&e.target];
            fwd[s].push(t);
            bwd[t].push(s);
        }
        let reach_all = |adj: &[Vec<usize>]| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == n
        };
        reach_all(&fwd) && reach_all(&bwd)
    }

    /// True iff indegree equals outdegree at every vertex.
    pub fn is_eulerian(&self) -> bool {
        let (ins, outs) = self.degree_vectors();
        ins == outs
    }

    /// Returns `Some(k)` when every vertex has indegree and outdegree `k`.
    pub fn is_balanced_k_regular(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            return None;
        }
        let (ins, outs) = self.degree_vectors();
        let k = ins[0];
        if ins.iter().all(|&d| d == k) && outs.iter().all(|&d| d == k) {
            Some(k)
        } else {
            None
        }
    }

    fn degree_vectors(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.vertices.len();
        let mut ins = vec![0usize; n];
        let mut outs = vec![0usize; n];
        for e in &self.edges {
            ins[self.vertex_index[&e.target]] += 1;
            outs[self.vertex_index[&e.source]] += 1;
        }
        (ins, outs)
    }

    /// The graph with edge `id` removed; vertices unchanged.
    pub fn delete_edge(&self, id: &str) -> Result<DirectedMultigraph> {
        if !self.edge_index.contains_key(id) {
            return Err(Error::UnknownEdge(id.to_string()));
        }
        let mut g = DirectedMultigraph::new();
        for v in &self.vertices {
            g.add_vertex(v)?;
        }
        for e in &self.edges {
            if e.id != id {
                g.add_edge(&e.id, &e.source, &e.target)?;
            }
        }
        Ok(g)
    }

    /// Contracts the non-loop edge `id`: first deletes every edge `f` with
    /// `s(f) = s(id)` (including `id` itself and its parallel copies), then
    /// identifies `s(id)` and `t(id)` into a vertex named by the contracted
    /// edge's id. Remaining incidences are relabelled through the merge.
    pub fn contract_edge(&self, id: &str) -> Result<DirectedMultigraph> {
        let e = self
            .edge(id)
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))?
            .clone();
        if e.is_loop() {
            return Err(Error::ContractLoop(id.to_string()));
        }
        let merge = |v: &str| -> String {
            if v == e.source || v == e.target {
                e.id.clone()
            } else {
                v.to_string()
            }
        };
        let mut g = DirectedMultigraph::new();
        let mut merged_done = false;
        for v in &self.vertices {
            if v == &e.source || v == &e.target {
                if !merged_done {
                    g.add_vertex(&e.id)?;
                    merged_done = true;
                }
            } else {
                g.add_vertex(v)?;
            }
        }
        for f in &self.edges {
            if f.source == e.source {
                continue;
            }
            g.add_edge(&f.id, &merge(&f.source), &merge(&f.target))?;
        }
        Ok(g)
    }

    /// Renames vertices through `map` (must cover every vertex injectively);
    /// edge ids are kept.
    pub fn relabel_vertices(&self, map: &BTreeMap<String, String>) -> Result<DirectedMultigraph> {
        let mut seen = BTreeSet::new();
        let mut g = DirectedMultigraph::new();
        for v in &self.vertices {
            let new = map
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            if !seen.insert(new.clone()) {
                return Err(Error::DuplicateVertex(new.clone()));
            }
            g.add_vertex(new)?;
        }
        for e in &self.edges {
            g.add_edge(&e.id, &map[&e.source], &map[&e.target])?;
        }
        Ok(g)
    }

    /// Canonical serialization including edge ids: vertices sorted, then
    /// edges sorted by id. Two graphs are identical up to insertion order
    /// iff their canonical forms are equal.
    pub fn canonical_form(&self) -> String {
        let mut vs: Vec<&String> = self.vertices.iter().collect();
        vs.sort();
        let mut es: Vec<&EdgeRecord> = self.edges.iter().collect();
        es.sort_by(|a, b| a.id.cmp(&b.id));
        let mut out = String::new();
        for v in vs {
            out.push_str(&format!("vertex {v}\n"));
        }
        for e in es {
            out.push_str(&format!("{} {} {}\n", e.id, e.source, e.target));
        }
        out
    }

    /// Like [`canonical_form`](Self::canonical_form) but ignoring edge ids:
    /// vertices sorted, then the sorted multiset of (source, target) pairs.
    /// Equality means the labelled graphs are isomorphic by the identity
    /// map on vertices.
    pub fn structure_signature(&self) -> String {
        let mut vs: Vec<&String> = self.vertices.iter().collect();
        vs.sort();
        let mut es: Vec<(&String, &String)> =
            self.edges.iter().map(|e| (&e.source, &e.target)).collect();
        es.sort();
        let mut out = String::new();
        for v in vs {
            out.push_str(&format!("vertex {v}\n"));
        }
        for (s, t) in es {
            out.push_str(&format!("{s} -> {t}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linegraph;

    fn path_ab() -> DirectedMultigraph {
        let mut g = DirectedMultigraph::new();
        g.add_edge("e", "a", "b").unwrap();
        g
    }

    fn two_cycle() -> DirectedMultigraph {
        let mut g = DirectedMultigraph::new();
        g.add_edge("ab", "a", "b").unwrap();
        g.add_edge("ba", "b", "a").unwrap();
        g
    }

    fn triangle() -> DirectedMultigraph {
        let mut g = DirectedMultigraph::new();
        g.add_edge("ab", "a", "b").unwrap();
        g.add_edge("bc", "b", "c").unwrap();
        g.add_edge("ca", "c", "a").unwrap();
        g
    }

    #[test]
    fn degrees_on_families() {
        let db0 = linegraph::de_bruijn(0).unwrap();
        let v = db0.vertices()[0].clone();
        assert_eq!(db0.indegree(&v).unwrap(), 2);
        assert_eq!(db0.outdegree(&v).unwrap(), 2);

        let kautz1 = linegraph::kautz(1).unwrap();
        assert_eq!(kautz1.indegree("1").unwrap(), 2);
        assert_eq!(kautz1.outdegree("3").unwrap(), 2);

        let mut iso = DirectedMultigraph::new();
        iso.add_vertex("x").unwrap();
        assert_eq!(iso.indegree("x").unwrap(), 0);
        assert_eq!(iso.outdegree("x").unwrap(), 0);
        assert!(iso.indegree("y").is_err());
    }

    #[test]
    fn degree_sums_equal_edge_count() {
        for g in [two_cycle(), triangle(), linegraph::de_bruijn(3).unwrap()] {
            let ins: usize = g.vertices().iter().map(|v| g.indegree(v).unwrap()).sum();
            let outs: usize = g.vertices().iter().map(|v| g.outdegree(v).unwrap()).sum();
            assert_eq!(ins, g.edge_count());
            assert_eq!(outs, g.edge_count());
        }
    }

    #[test]
    fn sources() {
        assert!(!linegraph::de_bruijn(2).unwrap().has_source());
        let mut lone = DirectedMultigraph::new();
        lone.add_vertex("v").unwrap();
        assert!(lone.has_source());
        let g = path_ab();
        assert!(g.has_source());
        assert_eq!(g.sources(), ["a"]);
    }

    #[test]
    fn strong_connectivity() {
        assert!(triangle().is_strongly_connected());
        assert!(!path_ab().is_strongly_connected());
        assert!(linegraph::de_bruijn(3).unwrap().is_strongly_connected());
        let mut lone = DirectedMultigraph::new();
        lone.add_vertex("v").unwrap();
        assert!(lone.is_strongly_connected());
    }

    /// All-pairs reachability by transitive closure, as an independent check.
    fn strongly_connected_brute(g: &DirectedMultigraph) -> bool {
        let n = g.vertex_count();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for e in g.edges() {
            let s = g.vertex_position(&e.source).unwrap();
            let t = g.vertex_position(&e.target).unwrap();
            reach[s][t] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        reach.iter().all(|row| row.iter().all(|&r| r))
    }

    #[test]
    fn strong_connectivity_matches_transitive_closure() {
        let mut graphs = vec![path_ab(), two_cycle(), triangle()];
        graphs.push(linegraph::de_bruijn(3).unwrap());
        for seed in 0..30u64 {
            graphs.push(crate::randgraph::random_source_free(seed, 8, 12));
        }
        for g in &graphs {
            assert!(g.vertex_count() <= 8);
            assert_eq!(g.is_strongly_connected(), strongly_connected_brute(g));
        }
    }

    #[test]
    fn eulerian_and_regular() {
        let db2 = linegraph::de_bruijn(2).unwrap();
        assert!(db2.is_eulerian());
        assert_eq!(db2.is_balanced_k_regular(), Some(2));

        let fib = linegraph::fibonacci_graph();
        assert_eq!(fib.is_balanced_k_regular(), None);

        let k23 = linegraph::bidirected_complete_bipartite(2, 3).unwrap();
        assert!(k23.is_eulerian());
        assert_eq!(k23.is_balanced_k_regular(), None);
    }

    #[test]
    fn delete() {
        let g = triangle().delete_edge("bc").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.delete_edge("bc").is_err());

        let db1 = linegraph::de_bruijn(1).unwrap();
        let g = db1.delete_edge("00").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn delete_then_readd_is_canonical_identity() {
        let g = triangle();
        let mut h = g.delete_edge("ab").unwrap();
        h.add_edge("ab", "a", "b").unwrap();
        assert_eq!(g.canonical_form(), h.canonical_form());
    }

    #[test]
    fn contract_two_cycle() {
        let g = two_cycle().contract_edge("ab").unwrap();
        assert_eq!(g.vertices(), ["ab"]);
        assert_eq!(g.edge_count(), 1);
        assert!(g.edges()[0].is_loop());
    }

    #[test]
    fn contract_triangle() {
        let g = triangle().contract_edge("ab").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_vertex("ab"));
        assert!(g.has_vertex("c"));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edge("bc").unwrap().source, "ab");
        assert_eq!(g.edge("bc").unwrap().target, "c");
        assert_eq!(g.edge("ca").unwrap().source, "c");
        assert_eq!(g.edge("ca").unwrap().target, "ab");
    }

    #[test]
    fn contract_loop_is_an_error() {
        let mut g = DirectedMultigraph::new();
        g.add_edge("l", "a", "a").unwrap();
        assert!(matches!(g.contract_edge("l"), Err(Error::ContractLoop(_))));
        assert!(matches!(g.contract_edge("z"), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let mut g = DirectedMultigraph::new();
        g.add_vertex("a").unwrap();
        assert!(g.add_vertex("a").is_err());
        g.add_edge("e", "a", "b").unwrap();
        assert!(g.add_edge("e", "b", "a").is_err());
    }
}
