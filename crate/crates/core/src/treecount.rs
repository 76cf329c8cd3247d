//! Weighted Laplacians, spanning-tree counts and enumerator polynomials,
//! and checkers for the identities tying a graph's tree enumerators to
//! those of its directed line graph.
//!
//! Matrix convention: the Laplacian is the `V x V` matrix whose column for
//! vertex `v` is `Δ_v = Σ_{s(e)=v} w(e) (t(e) - v)`, with weight `x_e`
//! (edge-weighted), `x_{t(e)}` (vertex-weighted), or `1` (integer). Rooted
//! counts are determinants of the negated matrix with the root's row and
//! column removed. Loops cancel inside `Δ_v` but still count in degrees.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::digraph::DirectedMultigraph;
use crate::error::{Error, Result};
use crate::exactalg::{binomial, div_exact, IntMatrix};
use crate::linegraph::{self, line_graph};
use crate::multipoly::{PolyMatrix, SparsePoly};
use crate::oracle;
use crate::report::VerifyReport;

/// Which indeterminates weight the Laplacian entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedLaplacianKind {
    /// weight `x_e` per edge
    EdgeWeighted,
    /// weight `x_{t(e)}` per edge
    VertexWeighted,
}

/// The weighted Laplacian of `g` as a polynomial matrix (columns are `Δ_v`).
pub fn laplacian(g: &DirectedMultigraph, kind: WeightedLaplacianKind) -> PolyMatrix {
    let n = g.vertex_count();
    let mut m = PolyMatrix::zero(n);
    for e in g.edges() {
        let s = g.vertex_position(&e.source).unwrap();
        let t = g.vertex_position(&e.target).unwrap();
        let w = match kind {
            WeightedLaplacianKind::EdgeWeighted => SparsePoly::var(&e.id),
            WeightedLaplacianKind::VertexWeighted => SparsePoly::var(&e.target),
        };
        m.set(t, s, m.get(t, s).add(&w));
        m.set(s, s, m.get(s, s).sub(&w));
    }
    m
}

/// The integer Laplacian (all weights 1).
pub fn integer_laplacian(g: &DirectedMultigraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zero(n, n);
    for e in g.edges() {
        let s = g.vertex_position(&e.source).unwrap();
        let t = g.vertex_position(&e.target).unwrap();
        let cur = m.get(t, s) + 1;
        m.set(t, s, cur);
        let cur = m.get(s, s) - 1;
        m.set(s, s, cur);
    }
    m
}

/// `Σ_{s(e)=v} x_e`.
pub fn out_edge_sum(g: &DirectedMultigraph, v: &str) -> SparsePoly {
    g.out_edges(v)
        .fold(SparsePoly::zero(), |acc, e| acc.add(&SparsePoly::var(&e.id)))
}

/// Number of oriented spanning trees rooted at `root`, by the rooted
/// matrix-tree determinant. Graphs with no such tree yield 0.
pub fn kappa_rooted(g: &DirectedMultigraph, root: &str) -> Result<BigInt> {
    let r = g
        .vertex_position(root)
        .ok_or_else(|| Error::UnknownVertex(root.to_string()))?;
    integer_laplacian(g).minor(r, r).neg().determinant()
}

/// Total number of oriented spanning trees, summed over all roots.
pub fn kappa_total(g: &DirectedMultigraph) -> BigInt {
    g.vertices()
        .iter()
        .map(|v| kappa_rooted(g, v).expect("vertex is present"))
        .sum()
}

/// Enumerator polynomial of trees rooted at `root`.
pub fn kappa_poly_rooted(
    g: &DirectedMultigraph,
    root: &str,
    kind: WeightedLaplacianKind,
) -> Result<SparsePoly> {
    let r = g
        .vertex_position(root)
        .ok_or_else(|| Error::UnknownVertex(root.to_string()))?;
    Ok(laplacian(g, kind).minor(r, r).neg().determinant())
}

/// Enumerator polynomial over all roots.
pub fn kappa_poly(g: &DirectedMultigraph, kind: WeightedLaplacianKind) -> SparsePoly {
    g.vertices().iter().fold(SparsePoly::zero(), |acc, v| {
        acc.add(&kappa_poly_rooted(g, v, kind).expect("vertex is present"))
    })
}

/// `π(G) = Π_v outdeg(v)^{indeg(v)-1}`. Requires no sources.
pub fn pi_correction(g: &DirectedMultigraph) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for v in g.vertices() {
        let indeg = g.indegree(v)?;
        if indeg == 0 {
            return Err(Error::Hypothesis(format!("vertex {v} is a source")));
        }
        acc *= BigInt::from(g.outdegree(v)?).pow((indeg - 1) as u64);
    }
    Ok(acc)
}

fn require_no_sources(g: &DirectedMultigraph) -> Result<()> {
    let sources = g.sources();
    if let Some(v) = sources.first() {
        return Err(Error::Hypothesis(format!(
            "graph has a source (indeg 0) at vertex {v}"
        )));
    }
    Ok(())
}

/// Checks the weighted line-graph tree enumerator identity
/// `κ^vertex(line G, x) = κ^edge(G, x) Π_v (Σ_{s(e)=v} x_e)^{indeg(v)-1}`,
/// both sides as polynomials in the edge variables of `g`.
pub fn verify_theorem1(g: &DirectedMultigraph) -> Result<VerifyReport> {
    require_no_sources(g)?;
    let mut report = VerifyReport::new("line-graph tree enumerator identity");
    let lg = line_graph(g).graph;
    let lhs = kappa_poly(&lg, WeightedLaplacianKind::VertexWeighted);
    let mut rhs = kappa_poly(g, WeightedLaplacianKind::EdgeWeighted);
    for v in g.vertices() {
        let indeg = g.indegree(v)?;
        rhs = rhs.mul(&out_edge_sum(g, v).pow((indeg - 1) as u64));
    }
    report.record(
        "polynomial_identity",
        lhs == rhs,
        format!("{} terms on each side", lhs.term_count()),
    );
    let lhs_ones = lhs.sum_of_coefficients();
    let rhs_ones = kappa_total(g) * pi_correction(g)?;
    report.record(
        "all_ones_product_formula",
        lhs_ones == rhs_ones && lhs_ones == kappa_total(&lg),
        format!("kappa(line G) = {lhs_ones}"),
    );
    Ok(report)
}

fn rooted_hypotheses(g: &DirectedMultigraph, base_edge: &str) -> Result<(String, String)> {
    let e = g
        .edge(base_edge)
        .ok_or_else(|| Error::UnknownEdge(base_edge.to_string()))?;
    let (w_star, v_star) = (e.source.clone(), e.target.clone());
    require_no_sources(g)?;
    if g.indegree(&v_star)? < 2 {
        return Err(Error::Hypothesis(format!(
            "indeg({v_star}) must be at least 2 at the base edge's target"
        )));
    }
    Ok((w_star, v_star))
}

/// Checks the rooted variant: with `e* = (w*, v*)`,
/// `κ^vertex(line G, e*, x) = x_{e*} κ^edge(G, w*, x)
///   (Σ_{s(e)=v*} x_e)^{indeg(v*)-2} Π_{v≠v*} (Σ_{s(e)=v} x_e)^{indeg(v)-1}`,
/// plus its all-ones form `κ(line G, e*) = κ(G, w*) π(G) / outdeg(v*)` and
/// the divisibility `κ(G, w*) | κ(line G, e*)`.
pub fn verify_rooted_theorem(g: &DirectedMultigraph, base_edge: &str) -> Result<VerifyReport> {
    let (w_star, v_star) = rooted_hypotheses(g, base_edge)?;
    let mut report = VerifyReport::new(format!("rooted line-graph enumerator at {base_edge}"));

    let lg = line_graph(g).graph;
    let lhs = kappa_poly_rooted(&lg, base_edge, WeightedLaplacianKind::VertexWeighted)?;

    let mut rhs = SparsePoly::var(base_edge)
        .mul(&kappa_poly_rooted(g, &w_star, WeightedLaplacianKind::EdgeWeighted)?);
    for v in g.vertices() {
        let indeg = g.indegree(v)? as u64;
        let exp = if v == &v_star { indeg - 2 } else { indeg - 1 };
        rhs = rhs.mul(&out_edge_sum(g, v).pow(exp));
    }
    report.record(
        "rooted_polynomial_identity",
        lhs == rhs,
        format!("{} terms on each side", lhs.term_count()),
    );

    let kappa_line = kappa_rooted(&lg, base_edge)?;
    let numer = kappa_rooted(g, &w_star)? * pi_correction(g)?;
    let outdeg_v = BigInt::from(g.outdegree(&v_star)?);
    let (q, r) = numer.div_rem(&outdeg_v);
    report.record(
        "all_ones_rooted_formula",
        r.is_zero() && q == kappa_line && lhs.sum_of_coefficients() == kappa_line,
        format!("kappa(line G, {base_edge}) = {kappa_line}"),
    );

    let kappa_w = kappa_rooted(g, &w_star)?;
    let divisible = kappa_w.is_zero() || (&kappa_line % &kappa_w).is_zero();
    report.record(
        "kappa_divisibility",
        divisible || kappa_line.is_zero(),
        format!("{kappa_w} divides {kappa_line}"),
    );
    Ok(report)
}

/// Checks Knuth's form of the rooted count:
/// `κ(line G, e*) = (κ(G, v*) - (1/outdeg(v*)) Σ_{t(e)=v*, e≠e*} κ(G, s(e))) π(G)`,
/// with the division performed exactly.
pub fn verify_knuth(g: &DirectedMultigraph, base_edge: &str) -> Result<VerifyReport> {
    let (_, v_star) = rooted_hypotheses(g, base_edge)?;
    let mut report = VerifyReport::new(format!("Knuth rooted count at {base_edge}"));

    let lg = line_graph(g).graph;
    let kappa_line = kappa_rooted(&lg, base_edge)?;

    let outdeg_v = BigInt::from(g.outdegree(&v_star)?);
    let mut incoming_sum = BigInt::zero();
    for e in g.in_edges(&v_star) {
        if e.id != base_edge {
            incoming_sum += kappa_rooted(g, &e.source)?;
        }
    }
    // fold the 1/outdeg into one exact division at the end; the unicycle
    // identity guarantees exactness of the whole expression
    let numer = (kappa_rooted(g, &v_star)? * &outdeg_v - incoming_sum) * pi_correction(g)?;
    let (rhs, rem) = numer.div_rem(&outdeg_v);
    report.record(
        "division_exact",
        rem.is_zero(),
        format!("denominator outdeg({v_star}) = {outdeg_v}"),
    );
    report.record(
        "knuth_formula",
        rhs == kappa_line,
        format!("kappa(line G, {base_edge}) = {kappa_line}, formula gives {rhs}"),
    );
    Ok(report)
}

/// Checks the unicycle identity at `pivot`:
/// `κ^edge(G, v*, x) Σ_{s(e)=v*} x_e = Σ_{t(e)=v*} κ^edge(G, s(e), x) x_e`,
/// its all-ones corollary, and (within enumeration caps) that both sides
/// equal the edge-weighted sum over unicycles through `pivot`.
pub fn verify_unicycle_lemma(g: &DirectedMultigraph, pivot: &str) -> Result<VerifyReport> {
    if !g.has_vertex(pivot) {
        return Err(Error::UnknownVertex(pivot.to_string()));
    }
    let mut report = VerifyReport::new(format!("unicycle identity at {pivot}"));

    let lhs = kappa_poly_rooted(g, pivot, WeightedLaplacianKind::EdgeWeighted)?
        .mul(&out_edge_sum(g, pivot));
    let mut rhs = SparsePoly::zero();
    for e in g.in_edges(pivot) {
        rhs = rhs.add(
            &kappa_poly_rooted(g, &e.source, WeightedLaplacianKind::EdgeWeighted)?
                .mul(&SparsePoly::var(&e.id)),
        );
    }
    report.record(
        "polynomial_identity",
        lhs == rhs,
        format!("{} terms on each side", lhs.term_count()),
    );

    let count_lhs = kappa_rooted(g, pivot)? * BigInt::from(g.outdegree(pivot)?);
    let mut count_rhs = BigInt::zero();
    for e in g.in_edges(pivot) {
        count_rhs += kappa_rooted(g, &e.source)?;
    }
    report.record(
        "all_ones_corollary",
        count_lhs == count_rhs,
        format!("kappa(G,{pivot}) * outdeg = {count_lhs}"),
    );

    match oracle::enumerate_unicycles(g, pivot) {
        Ok(unis) => {
            report.record(
                "oracle_unicycle_sum",
                unis.weight == lhs && unis.weight == rhs,
                format!("{} unicycles through {pivot}", unis.unicycles.len()),
            );
        }
        Err(Error::CapExceeded(detail)) => {
            report.record("oracle_unicycle_sum", true, format!("skipped: {detail}"));
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Checks the deletion-contraction recurrence
/// `κ^edge(G, x) = κ^edge(G\e, x) + x_e κ^edge(G/e, x)` for a non-loop `e`.
pub fn verify_deletion_contraction(g: &DirectedMultigraph, edge: &str) -> Result<VerifyReport> {
    let e = g
        .edge(edge)
        .ok_or_else(|| Error::UnknownEdge(edge.to_string()))?;
    if e.is_loop() {
        return Err(Error::ContractLoop(edge.to_string()));
    }
    let mut report = VerifyReport::new(format!("deletion-contraction at {edge}"));
    let whole = kappa_poly(g, WeightedLaplacianKind::EdgeWeighted);
    let deleted = kappa_poly(&g.delete_edge(edge)?, WeightedLaplacianKind::EdgeWeighted);
    let contracted = kappa_poly(&g.contract_edge(edge)?, WeightedLaplacianKind::EdgeWeighted);
    let rhs = deleted.add(&SparsePoly::var(edge).mul(&contracted));
    report.record(
        "recurrence",
        whole == rhs,
        format!("{} terms on each side", whole.term_count()),
    );
    Ok(report)
}

/// Number of oriented spanning trees of `line G` whose indegree at the
/// vertex `e` equals `level`, by the binomial expression
/// `Π_{w≠v} outdeg(w)^{indeg(w)-1} (C(k-1,ℓ) κ(G\e) (m-1)^{k-1-ℓ}
///  + C(k-1,ℓ-1) κ(G/e) (m-1)^{k-ℓ})` with `v = s(e)`, `k = indeg(v)`,
/// `m = outdeg(v)`.
pub fn count_trees_with_line_indegree(
    g: &DirectedMultigraph,
    edge: &str,
    level: u64,
) -> Result<BigInt> {
    let e = g
        .edge(edge)
        .ok_or_else(|| Error::UnknownEdge(edge.to_string()))?
        .clone();
    if e.is_loop() {
        return Err(Error::Hypothesis(format!("edge {edge} is a loop")));
    }
    require_no_sources(g)?;
    let v = e.source.clone();
    let k = g.indegree(&v)? as u64;
    let m = g.outdegree(&v)? as u64;

    let mut prefix = BigInt::one();
    for w in g.vertices() {
        if w == &v {
            continue;
        }
        prefix *= BigInt::from(g.outdegree(w)?).pow((g.indegree(w)? - 1) as u64);
    }

    let m1 = BigInt::from(m - 1);
    let mut inner = BigInt::zero();
    if level <= k - 1 {
        inner += binomial(k - 1, level)
            * kappa_total(&g.delete_edge(edge)?)
            * m1.clone().pow(k - 1 - level);
    }
    if level >= 1 && level - 1 <= k - 1 {
        inner += binomial(k - 1, level - 1)
            * kappa_total(&g.contract_edge(edge)?)
            * m1.pow(k - level);
    }
    Ok(prefix * inner)
}

/// Checks the iterated line-graph count
/// `κ(line^n G) = κ(G) Π_v outdeg(v)^{p(n,v)-1}` and, for balanced
/// `k`-regular graphs, the specialization `κ(G) k^{(k^n - 1) |V|}`.
pub fn verify_theorem5(g: &DirectedMultigraph, n: usize) -> Result<VerifyReport> {
    require_no_sources(g)?;
    let mut report = VerifyReport::new(format!("iterated line-graph count at n = {n}"));

    let iterated = linegraph::iterated_line_graph(g, n);
    let actual = kappa_total(&iterated.graph);

    let counts = linegraph::path_count(g, n);
    let mut closed = kappa_total(g);
    for v in g.vertices() {
        let p = counts[v]
            .to_biguint()
            .and_then(|b| u64::try_from(b).ok())
            .ok_or_else(|| Error::InvalidParameter("path count overflows u64".to_string()))?;
        closed *= BigInt::from(g.outdegree(v)?).pow(p - 1);
    }
    report.record(
        "closed_form_count",
        closed == actual,
        format!("kappa(line^{n} G) = {actual}"),
    );

    if let Some(k) = g.is_balanced_k_regular() {
        let exponent = BigInt::from(k).pow(n as u64) - 1u8;
        let exponent = exponent
            .to_biguint()
            .and_then(|b| u64::try_from(b).ok())
            .ok_or_else(|| Error::InvalidParameter("exponent overflows u64".to_string()))?;
        let special =
            kappa_total(g) * BigInt::from(k).pow(exponent * g.vertex_count() as u64);
        report.record(
            "regular_specialization",
            special == actual,
            format!("kappa(G) k^((k^n - 1)|V|) = {special}"),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linegraph::{
        bidirected_complete_bipartite, complete_directed, de_bruijn, fibonacci_graph, kautz,
        single_vertex_with_loops,
    };

    fn two_cycle() -> DirectedMultigraph {
        let mut g = DirectedMultigraph::new();
        g.add_edge("ab", "a", "b").unwrap();
        g.add_edge("ba", "b", "a").unwrap();
        g
    }

    #[test]
    fn laplacian_shapes() {
        // loops contribute nothing to the matrix
        let db0 = de_bruijn(0).unwrap();
        let l = integer_laplacian(&db0);
        assert!(l.get(0, 0).is_zero());

        let l = integer_laplacian(&two_cycle());
        assert_eq!(*l.get(0, 0), BigInt::from(-1));
        assert_eq!(*l.get(1, 0), BigInt::one());
        assert_eq!(*l.get(0, 1), BigInt::one());
        assert_eq!(*l.get(1, 1), BigInt::from(-1));
    }

    #[test]
    fn laplacian_columns_sum_to_zero() {
        for g in [two_cycle(), de_bruijn(2).unwrap(), fibonacci_graph()] {
            let l = integer_laplacian(&g);
            for j in 0..g.vertex_count() {
                let sum: BigInt = (0..g.vertex_count()).map(|i| l.get(i, j).clone()).sum();
                assert!(sum.is_zero());
            }
        }
    }

    #[test]
    fn kappa_rooted_values() {
        // 2^{2^n - n - 1} for de Bruijn graphs
        let db3 = de_bruijn(3).unwrap();
        for v in db3.vertices() {
            assert_eq!(kappa_rooted(&db3, v).unwrap(), BigInt::from(16));
        }
        let c3 = complete_directed(3).unwrap();
        assert_eq!(kappa_rooted(&c3, "1").unwrap(), BigInt::from(3));

        let mut lone = DirectedMultigraph::new();
        lone.add_vertex("v").unwrap();
        assert_eq!(kappa_rooted(&lone, "v").unwrap(), BigInt::one());
        assert!(kappa_rooted(&lone, "w").is_err());
    }

    #[test]
    fn kappa_total_values() {
        assert_eq!(kappa_total(&de_bruijn(2).unwrap()), BigInt::from(8));
        // (m+n) m^{n-1} n^{m-1} on the bidirected complete bipartite graph
        assert_eq!(
            kappa_total(&bidirected_complete_bipartite(2, 2).unwrap()),
            BigInt::from(16)
        );
        // Cayley: n^{n-1}
        assert_eq!(
            kappa_total(&complete_directed(3).unwrap()),
            BigInt::from(9)
        );
    }

    #[test]
    fn kappa_poly_vertex_weighted_db2() {
        // (x00 + x01)(x10 + x11)(x01 + x10)
        let db2 = de_bruijn(2).unwrap();
        let got = kappa_poly(&db2, WeightedLaplacianKind::VertexWeighted);
        let expect = SparsePoly::var("00")
            .add(&SparsePoly::var("01"))
            .mul(&SparsePoly::var("10").add(&SparsePoly::var("11")))
            .mul(&SparsePoly::var("01").add(&SparsePoly::var("10")));
        assert_eq!(got, expect);
    }

    #[test]
    fn kappa_poly_complete_directed() {
        // (x_1 + ... + x_n)^{n-1}
        for n in 1..=4u32 {
            let g = complete_directed(n).unwrap();
            let got = kappa_poly(&g, WeightedLaplacianKind::VertexWeighted);
            let sum = (1..=n).fold(SparsePoly::zero(), |acc, i| {
                acc.add(&SparsePoly::var(&i.to_string()))
            });
            assert_eq!(got, sum.pow((n - 1) as u64));
        }
    }

    #[test]
    fn no_tree_means_zero_polynomial() {
        // two disjoint 2-cycles: no spanning trees at all
        let mut g = two_cycle();
        g.add_edge("cd", "c", "d").unwrap();
        g.add_edge("dc", "d", "c").unwrap();
        assert!(kappa_poly(&g, WeightedLaplacianKind::EdgeWeighted).is_zero());
        assert_eq!(kappa_total(&g), BigInt::zero());
    }

    #[test]
    fn eulerian_graphs_have_root_independent_counts() {
        for g in [de_bruijn(3).unwrap(), kautz(2).unwrap()] {
            let counts: Vec<BigInt> = g
                .vertices()
                .iter()
                .map(|v| kappa_rooted(&g, v).unwrap())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn theorem1_on_small_families() {
        for g in [
            de_bruijn(1).unwrap(),
            kautz(1).unwrap(),
            complete_directed(3).unwrap(),
            bidirected_complete_bipartite(2, 2).unwrap(),
        ] {
            let report = verify_theorem1(&g).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn theorem1_rejects_sources() {
        let mut g = DirectedMultigraph::new();
        g.add_edge("ab", "a", "b").unwrap();
        g.add_edge("bb", "b", "b").unwrap();
        assert!(matches!(verify_theorem1(&g), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn rooted_theorem_db1() {
        let db1 = de_bruijn(1).unwrap();
        let report = verify_rooted_theorem(&db1, "01").unwrap();
        assert!(report.passed(), "{report}");
        // the count on DB_2 at the base edge is 2
        let lg = line_graph(&db1).graph;
        assert_eq!(kappa_rooted(&lg, "01").unwrap(), BigInt::from(2));
    }

    #[test]
    fn rooted_theorem_kautz1() {
        let k1 = kautz(1).unwrap();
        let report = verify_rooted_theorem(&k1, "12").unwrap();
        assert!(report.passed(), "{report}");
        let lg = line_graph(&k1).graph;
        assert_eq!(kappa_rooted(&lg, "12").unwrap(), BigInt::from(12));
    }

    #[test]
    fn rooted_theorem_hypothesis_check() {
        // indeg(target) = 1 violates the hypothesis
        let mut g = DirectedMultigraph::new();
        g.add_edge("ab", "a", "b").unwrap();
        g.add_edge("ba", "b", "a").unwrap();
        g.add_edge("aa", "a", "a").unwrap();
        // target of "ab" is b with indegree 1
        assert!(matches!(
            verify_rooted_theorem(&g, "ab"),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn knuth_matches_direct_count() {
        for (g, e) in [
            (de_bruijn(1).unwrap(), "01"),
            (de_bruijn(1).unwrap(), "10"),
            (kautz(1).unwrap(), "12"),
            (kautz(1).unwrap(), "31"),
        ] {
            let report = verify_knuth(&g, e).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn unicycle_lemma_cases() {
        let mut g = DirectedMultigraph::new();
        g.add_edge("ab", "a", "b").unwrap();
        g.add_edge("bc", "b", "c").unwrap();
        g.add_edge("ca", "c", "a").unwrap();
        let report = verify_unicycle_lemma(&g, "a").unwrap();
        assert!(report.passed(), "{report}");

        for v in ["0", "1"] {
            let report = verify_unicycle_lemma(&de_bruijn(1).unwrap(), v).unwrap();
            assert!(report.passed(), "{report}");
        }
        let report = verify_unicycle_lemma(&de_bruijn(2).unwrap(), "01").unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn deletion_contraction_cases() {
        for (g, e) in [
            (two_cycle(), "ab"),
            (de_bruijn(1).unwrap(), "01"),
            (kautz(1).unwrap(), "23"),
        ] {
            let report = verify_deletion_contraction(&g, e).unwrap();
            assert!(report.passed(), "{report}");
        }
        let mut g = DirectedMultigraph::new();
        g.add_edge("aa", "a", "a").unwrap();
        assert!(verify_deletion_contraction(&g, "aa").is_err());
    }

    #[test]
    fn line_indegree_counts_db1() {
        let db1 = de_bruijn(1).unwrap();
        // k = m = 2, kappa(G\e) = kappa(G/e) = 1, prefix = outdeg(1)^1 = 2:
        // levels 0,1,2 count 2,4,2 and sum to kappa(DB_2) = 8
        assert_eq!(
            count_trees_with_line_indegree(&db1, "01", 0).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            count_trees_with_line_indegree(&db1, "01", 1).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            count_trees_with_line_indegree(&db1, "01", 2).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            count_trees_with_line_indegree(&db1, "01", 3).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn line_indegree_counts_match_oracle() {
        for (g, edge) in [
            (de_bruijn(1).unwrap(), "01"),
            (kautz(1).unwrap(), "12"),
            (fibonacci_graph(), "01"),
        ] {
            let lg = line_graph(&g).graph;
            let mut by_level: BTreeMap<u64, BigInt> = BTreeMap::new();
            for root in lg.vertices() {
                for t in oracle::enumerate_trees_capped(&lg, root, 12).unwrap().trees {
                    let level = t
                        .edge_choice
                        .values()
                        .filter(|eid| lg.edge(eid).unwrap().target == edge)
                        .count() as u64;
                    *by_level.entry(level).or_default() += 1;
                }
            }
            let k = g.indegree(&g.edge(edge).unwrap().source).unwrap() as u64;
            let mut total = BigInt::zero();
            for level in 0..=k {
                let formula = count_trees_with_line_indegree(&g, edge, level).unwrap();
                let counted = by_level.get(&level).cloned().unwrap_or_default();
                assert_eq!(formula, counted, "level {level}");
                total += formula;
            }
            assert_eq!(total, kappa_total(&lg));
        }
    }

    #[test]
    fn theorem5_families() {
        // Fibonacci: kappa(line^n G) = 2^{F_{n+2}}
        let fib = fibonacci_graph();
        let f = [1u32, 2, 3, 5, 8];
        for (n, fexp) in f.iter().enumerate() {
            let report = verify_theorem5(&fib, n).unwrap();
            assert!(report.passed(), "{report}");
            let count = kappa_total(&linegraph::iterated_line_graph(&fib, n).graph);
            assert_eq!(count, BigInt::from(2u8).pow(*fexp as u64));
        }
        // DB_0: kappa(line^n G) = 2^{2^n - 1}
        let db0 = single_vertex_with_loops(2);
        for n in 0..=4usize {
            let report = verify_theorem5(&db0, n).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn unrooted_kappa_poly_matches_char_poly_coefficient() {
        // kappa^edge(G, x) = [t] det(t Id - Δ^edge), with t a fresh variable
        for g in [two_cycle(), de_bruijn(1).unwrap(), fibonacci_graph()] {
            let n = g.vertex_count();
            let lap = laplacian(&g, WeightedLaplacianKind::EdgeWeighted);
            let mut m = PolyMatrix::zero(n);
            let t = SparsePoly::var("#t");
            for i in 0..n {
                for j in 0..n {
                    let entry = lap.get(i, j).neg();
                    m.set(i, j, if i == j { entry.add(&t) } else { entry });
                }
            }
            let char_poly = m.determinant();
            // extract the coefficient of t^1
            let direct = kappa_poly(&g, WeightedLaplacianKind::EdgeWeighted);
            let t_coeff = char_poly
                .sub(&direct.mul(&t))
                .div_exact(&t.mul(&t))
                .map(|_| true)
                .unwrap_or(false);
            assert!(
                t_coeff,
                "char poly minus [t] coefficient times t is not divisible by t^2"
            );
        }
    }
}
