//! Brute-force ground truth: exhaustive enumeration of oriented spanning
//! trees and unicycles on small graphs.
//!
//! Every candidate is an out-edge choice function, so the enumeration size
//! is the product of outdegrees, not a function of the vertex count alone;
//! the caps reflect that.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_traits::One;

use crate::digraph::DirectedMultigraph;
use crate::error::{Error, Result};
use crate::multipoly::SparsePoly;

/// Hard cap on the number of out-edge choice functions examined.
pub const PRODUCT_CAP: u64 = 10_000_000;
/// Default cap on vertex count for tree enumeration.
pub const VERTEX_CAP: usize = 9;

/// An oriented spanning tree: the root has no out-edge, every other vertex
/// exactly one, and following the choices never cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedTree {
    pub root: String,
    /// vertex id -> chosen out-edge id, for every non-root vertex.
    pub edge_choice: BTreeMap<String, String>,
}

/// A spanning subgraph with every vertex of outdegree 1 and exactly one
/// directed cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unicycle {
    /// vertex id -> chosen out-edge id, for every vertex.
    pub edge_choice: BTreeMap<String, String>,
}

/// Trees rooted at one vertex, with both weighted enumerators accumulated
/// term by term.
#[derive(Debug, Clone)]
pub struct TreeEnumeration {
    pub trees: Vec<OrientedTree>,
    pub count: BigInt,
    pub kappa_edge: SparsePoly,
    pub kappa_vertex: SparsePoly,
}

/// All unicycles through one vertex, with the edge-weighted sum
/// `Σ_U Π_{e∈U} x_e`.
#[derive(Debug, Clone)]
pub struct UnicycleEnumeration {
    pub unicycles: Vec<Unicycle>,
    pub weight: SparsePoly,
}

fn check_product_cap(g: &DirectedMultigraph, skip: Option<&str>) -> Result<()> {
    let mut product: u64 = 1;
    for v in g.vertices() {
        if Some(v.as_str()) == skip {
            continue;
        }
        let d = g.outdegree(v)? as u64;
        if d == 0 {
            return Ok(()); // zero candidates, trivially within cap
        }
        product = product.saturating_mul(d);
        if product > PRODUCT_CAP {
            return Err(Error::CapExceeded(format!(
                "product of outdegrees exceeds {PRODUCT_CAP}; use the matrix-tree path"
            )));
        }
    }
    Ok(())
}

/// Iterates every out-edge choice over `choosers` (an odometer over the
/// per-vertex out-edge lists), invoking `visit` with vertex-indexed edge
/// picks.
fn for_each_choice<F: FnMut(&[usize])>(out_lists: &[Vec<usize>], mut visit: F) {
    if out_lists.iter().any(Vec::is_empty) {
        return;
    }
    let mut pick = vec![0usize; out_lists.len()];
    loop {
        visit(&pick);
        let mut i = 0;
        loop {
            if i == pick.len() {
                return;
            }
            pick[i] += 1;
            if pick[i] < out_lists[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Enumerates all oriented spanning trees of `g` rooted at `root` by
/// exhausting out-edge choice functions on the non-root vertices and
/// keeping the acyclic ones.
pub fn enumerate_trees(g: &DirectedMultigraph, root: &str) -> Result<TreeEnumeration> {
    enumerate_trees_capped(g, root, VERTEX_CAP)
}

pub fn enumerate_trees_capped(
    g: &DirectedMultigraph,
    root: &str,
    vertex_cap: usize,
) -> Result<TreeEnumeration> {
    let root_pos = g
        .vertex_position(root)
        .ok_or_else(|| Error::UnknownVertex(root.to_string()))?;
    if g.vertex_count() > vertex_cap {
        return Err(Error::CapExceeded(format!(
            "{} vertices exceeds cap {vertex_cap}",
            g.vertex_count()
        )));
    }
    check_product_cap(g, Some(root))?;

    let verts = g.vertices();
    let n = verts.len();
    // out_lists[i]: indices into g.edges() leaving verts[i]; empty for root.
    let mut out_lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, e) in g.edges().iter().enumerate() {
        let s = g.vertex_position(&e.source).unwrap();
        if s != root_pos {
            out_lists[s].push(idx);
        }
    }

    // non-root vertices choose; root's slot is given one dummy entry
    let chooser_lists: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            if i == root_pos {
                vec![usize::MAX]
            } else {
                out_lists[i].clone()
            }
        })
        .collect();

    let mut trees = Vec::new();
    let mut kappa_edge = SparsePoly::zero();
    let mut kappa_vertex = SparsePoly::zero();

    for_each_choice(&chooser_lists, |pick| {
        // next[i]: vertex index the chosen edge of verts[i] points to
        let mut next = vec![usize::MAX; n];
        for i in 0..n {
            if i == root_pos {
                continue;
            }
            let e = &g.edges()[chooser_lists[i][pick[i]]];
            next[i] = g.vertex_position(&e.target).unwrap();
        }
        // acyclic iff every walk reaches the root without revisiting
        let mut ok = true;
        for start in 0..n {
            let mut seen = vec![false; n];
            let mut v = start;
            while v != root_pos {
                if seen[v] {
                    ok = false;
                    break;
                }
                seen[v] = true;
                v = next[v];
            }
            if !ok {
                break;
            }
        }
        if !ok {
            return;
        }
        let mut edge_choice = BTreeMap::new();
        let mut edge_vars: Vec<&str> = Vec::new();
        let mut vertex_vars: Vec<&str> = Vec::new();
        for i in 0..n {
            if i == root_pos {
                continue;
            }
            let e = &g.edges()[chooser_lists[i][pick[i]]];
            edge_choice.insert(verts[i].clone(), e.id.clone());
            edge_vars.push(&e.id);
            vertex_vars.push(&e.target);
        }
        kappa_edge = kappa_edge.add(&SparsePoly::monomial(BigInt::one(), &edge_vars));
        kappa_vertex = kappa_vertex.add(&SparsePoly::monomial(BigInt::one(), &vertex_vars));
        trees.push(OrientedTree {
            root: root.to_string(),
            edge_choice,
        });
    });

    let count = BigInt::from(trees.len());
    Ok(TreeEnumeration {
        trees,
        count,
        kappa_edge,
        kappa_vertex,
    })
}

/// Enumerates all unicycles through `pivot`: out-edge choice functions on
/// every vertex whose functional graph has exactly one cycle, with `pivot`
/// on it.
pub fn enumerate_unicycles(g: &DirectedMultigraph, pivot: &str) -> Result<UnicycleEnumeration> {
    let pivot_pos = g
        .vertex_position(pivot)
        .ok_or_else(|| Error::UnknownVertex(pivot.to_string()))?;
    check_product_cap(g, None)?;

    let verts = g.vertices();
    let n = verts.len();
    let mut out_lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, e) in g.edges().iter().enumerate() {
        let s = g.vertex_position(&e.source).unwrap();
        out_lists[s].push(idx);
    }

    let mut unicycles = Vec::new();
    let mut weight = SparsePoly::zero();

    for_each_choice(&out_lists, |pick| {
        let mut next = vec![0usize; n];
        for i in 0..n {
            let e = &g.edges()[out_lists[i][pick[i]]];
            next[i] = g.vertex_position(&e.target).unwrap();
        }
        // the cycle reached from pivot
        let mut order = vec![usize::MAX; n];
        let mut v = pivot_pos;
        let mut steps = 0usize;
        while order[v] == usize::MAX {
            order[v] = steps;
            steps += 1;
            v = next[v];
        }
        // v is the first repeated vertex; pivot lies on the cycle iff the
        // repeat closes back at or before it
        if order[v] > order[pivot_pos] {
            return;
        }
        let mut on_cycle = vec![false; n];
        let mut w = v;
        loop {
            on_cycle[w] = true;
            w = next[w];
            if w == v {
                break;
            }
        }
        // every other vertex must flow into this cycle (else a second
        // cycle exists)
        for start in 0..n {
            let mut u = start;
            for _ in 0..n {
                if on_cycle[u] {
                    break;
                }
                u = next[u];
            }
            if !on_cycle[u] {
                return;
            }
        }
        let mut edge_choice = BTreeMap::new();
        let mut edge_vars: Vec<&str> = Vec::new();
        for i in 0..n {
            let e = &g.edges()[out_lists[i][pick[i]]];
            edge_choice.insert(verts[i].clone(), e.id.clone());
            edge_vars.push(&e.id);
        }
        weight = weight.add(&SparsePoly::monomial(BigInt::one(), &edge_vars));
        unicycles.push(Unicycle { edge_choice });
    });

    Ok(UnicycleEnumeration { unicycles, weight })
}
