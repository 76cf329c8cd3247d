//! Sparse multivariate polynomials over the integers, and determinants of
//! polynomial matrices.
//!
//! A polynomial carries its own variable universe (sorted vertex or edge
//! ids); exponent vectors are stored densely over that universe. Binary
//! operations union the universes automatically. Terms never store a zero
//! coefficient, and serialization orders terms by graded lexicographic
//! comparison so output is canonical.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse multivariate polynomial with `BigInt` coefficients.
#[derive(Debug, Clone, Default)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        SparsePoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], BigInt::one());
        SparsePoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Monomial `c * Π vars`, with repeated names raising the exponent.
    pub fn monomial(c: BigInt, var_names: &[&str]) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut vars: Vec<String> = var_names.iter().map(|s| s.to_string()).collect();
        vars.sort();
        vars.dedup();
        let mut exps = vec![0u32; vars.len()];
        for name in var_names {
            let idx = vars.binary_search(&name.to_string()).unwrap();
            exps[idx] += 1;
        }
        let mut terms = BTreeMap::new();
        terms.insert(exps, c);
        SparsePoly { vars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients — the evaluation with every variable set to 1.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn extended_to(&self, vars: &[String]) -> SparsePoly {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("universe extension"))
            .collect();
        let mut terms = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &x) in exp.iter().enumerate() {
                e[map[i]] = x;
            }
            terms.insert(e, c.clone());
        }
        SparsePoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn unified(&self, other: &SparsePoly) -> (SparsePoly, SparsePoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        vars.sort();
        vars.dedup();
        (self.extended_to(&vars), other.extended_to(&vars))
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        use alloc::collections::btree_map::Entry;
        let (mut a, b) = self.unified(other);
        for (exp, c) in b.terms {
            match a.terms.entry(exp) {
                Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(c);
                }
            }
        }
        a
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let (a, b) = self.unified(other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(exp).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePoly {
            vars: a.vars,
            terms,
        }
    }

    pub fn pow(&self, mut n: u64) -> SparsePoly {
        let mut acc = SparsePoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes integers for variables. Every variable that occurs with a
    /// positive exponent must be assigned.
    pub fn evaluate(&self, assignment: &BTreeMap<String, BigInt>) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = assignment
                    .get(&self.vars[i])
                    .ok_or_else(|| Error::MissingAssignment(self.vars[i].clone()))?;
                term *= num_traits::pow::Pow::pow(v, e);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Renames variables through `map`; names absent from the map are kept.
    pub fn rename_vars(&self, map: &BTreeMap<String, String>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (exp, c) in &self.terms {
            let names: Vec<String> = exp
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| {
                    let name = map.get(&self.vars[i]).unwrap_or(&self.vars[i]).clone();
                    core::iter::repeat_n(name, e as usize)
                })
                .collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            out = out.add(&SparsePoly::monomial(c.clone(), &refs));
        }
        out
    }

    /// Term list with zero-exponent variables dropped: the universe-free
    /// canonical form used for equality.
    fn normalized_terms(&self) -> BTreeMap<Vec<(String, u32)>, BigInt> {
        self.terms
            .iter()
            .map(|(exp, c)| {
                let key: Vec<(String, u32)> = exp
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (self.vars[i].clone(), e))
                    .collect();
                (key, c.clone())
            })
            .collect()
    }

    /// Graded-lex maximal term, as (exponents, coefficient).
    fn lead_term(&self) -> Option<(Vec<u32>, BigInt)> {
        self.terms
            .iter()
            .max_by(|(ea, _), (eb, _)| grlex(ea, eb))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Exact division: `Some(q)` with `self = q * divisor` when such a
    /// quotient exists over the integer polynomial ring.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (mut rem, div) = self.unified(divisor);
        let (dl_exp, dl_coef) = div.lead_term()?;
        let mut quot = SparsePoly {
            vars: rem.vars.clone(),
            terms: BTreeMap::new(),
        };
        while !rem.is_zero() {
            let (rl_exp, rl_coef) = rem.lead_term().unwrap();
            if rl_exp.iter().zip(&dl_exp).any(|(r, d)| r < d) {
                return None;
            }
            let (q, r) = rl_coef.div_rem(&dl_coef);
            if !r.is_zero() {
                return None;
            }
            let exp: Vec<u32> = rl_exp.iter().zip(&dl_exp).map(|(r, d)| r - d).collect();
            let mut t = BTreeMap::new();
            t.insert(exp, q);
            let term = SparsePoly {
                vars: rem.vars.clone(),
                terms: t,
            };
            rem = rem.sub(&term.mul(&div));
            quot = quot.add(&term);
        }
        Some(quot)
    }
}

/// Graded lexicographic comparison of exponent vectors over one universe.
fn grlex(a: &[u32], b: &[u32]) -> core::cmp::Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.normalized_terms() == other.normalized_terms()
    }
}

impl Eq for SparsePoly {}

impl core::fmt::Display for SparsePoly {
    /// Canonical text form: terms sorted by graded-lex, highest first, each
    /// as `coef*x_a^k*x_b`.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        for (idx, exp) in keys.iter().enumerate() {
            let c = &self.terms[**exp];
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || exp.iter().all(|&e| e == 0) {
                pieces.push(mag.to_string());
            }
            for (i, &e) in exp.iter().enumerate() {
                if e == 1 {
                    pieces.push(format!("x_{}", self.vars[i]));
                } else if e > 1 {
                    pieces.push(format!("x_{}^{}", self.vars[i], e));
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Square matrix of polynomials.
#[derive(Debug, Clone)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<SparsePoly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![SparsePoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, SparsePoly::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: SparsePoly) {
        self.entries[i * self.n + j] = p;
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(SparsePoly::neg).collect(),
        }
    }

    /// Removes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.n - 1);
        for r in 0..self.n {
            if r == i {
                continue;
            }
            for c in 0..self.n {
                if c == j {
                    continue;
                }
                let rr = if r < i { r } else { r - 1 };
                let cc = if c < j { c } else { c - 1 };
                out.set(rr, cc, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn evaluate(&self, assignment: &BTreeMap<String, BigInt>) -> Result<crate::IntMatrix> {
        let mut m = crate::IntMatrix::zero(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j).evaluate(assignment)?);
            }
        }
        Ok(m)
    }

    /// Exact determinant over the polynomial ring: cofactor expansion for
    /// dimension at most 4, fraction-free Bareiss elimination above that
    /// (the ring is an integral domain, so the interior divisions are exact).
    pub fn determinant(&self) -> SparsePoly {
        if self.n <= 4 {
            return self.det_cofactor();
        }
        let n = self.n;
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = SparsePoly::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(r, j).clone();
                            m.set(k, j, b);
                            m.set(r, j, a);
                        }
                        sign = -sign;
                    }
                    None => return SparsePoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m
                        .get(k, k)
                        .mul(m.get(i, j))
                        .sub(&m.get(i, k).mul(m.get(k, j)));
                    let q = num
                        .div_exact(&prev)
                        .expect("inexact division in polynomial Bareiss");
                    m.set(i, j, q);
                }
                m.set(i, k, SparsePoly::zero());
            }
            prev = m.get(k, k).clone();
        }
        let det = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            det.neg()
        } else {
            det
        }
    }

    fn det_cofactor(&self) -> SparsePoly {
        let n = self.n;
        if n == 0 {
            return SparsePoly::one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = SparsePoly::zero();
        for j in 0..n {
            if self.get(0, j).is_zero() {
                continue;
            }
            let term = self.get(0, j).mul(&self.minor(0, j).determinant());
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> SparsePoly {
        SparsePoly::var("x")
    }

    fn y() -> SparsePoly {
        SparsePoly::var("y")
    }

    #[test]
    fn ring_basics() {
        let p = x().add(&y()).mul(&x().sub(&y()));
        let expect = x().mul(&x()).sub(&y().mul(&y()));
        assert_eq!(p, expect);
        assert_eq!(p.term_count(), 2);

        let s = SparsePoly::var("01").add(&SparsePoly::var("10"));
        let ones: BTreeMap<String, BigInt> =
            [("01", 1), ("10", 1)].map(|(k, v)| (k.to_string(), BigInt::from(v))).into();
        assert_eq!(s.evaluate(&ones).unwrap(), BigInt::from(2));

        let mut missing = BTreeMap::new();
        missing.insert("01".to_string(), BigInt::one());
        assert!(matches!(
            s.evaluate(&missing),
            Err(Error::MissingAssignment(_))
        ));
    }

    #[test]
    fn multinomial_term_count() {
        // (x1 + x2 + x3)^2 has C(4,2) = 6 monomials
        let s = SparsePoly::var("x1")
            .add(&SparsePoly::var("x2"))
            .add(&SparsePoly::var("x3"));
        assert_eq!(s.pow(2).term_count(), 6);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = x().sub(&x());
        assert!(p.is_zero());
        assert_eq!(p, SparsePoly::zero());
    }

    #[test]
    fn display_canonical() {
        let p = SparsePoly::constant(BigInt::from(2))
            .mul(&x())
            .mul(&x())
            .sub(&y())
            .add(&SparsePoly::constant(BigInt::from(3)));
        assert_eq!(format!("{p}"), "2*x_x^2 - x_y + 3");
        assert_eq!(format!("{}", SparsePoly::zero()), "0");
    }

    #[test]
    fn exact_division() {
        let num = x().add(&y()).mul(&x().sub(&y()));
        let q = num.div_exact(&x().add(&y())).unwrap();
        assert_eq!(q, x().sub(&y()));
        assert!(num.div_exact(&x().add(&SparsePoly::one())).is_none());
    }

    #[test]
    fn poly_determinants() {
        assert_eq!(PolyMatrix::identity(3).determinant(), SparsePoly::one());
        let mut m = PolyMatrix::zero(2);
        m.set(0, 0, x());
        m.set(0, 1, y());
        m.set(1, 0, y());
        m.set(1, 1, x());
        assert_eq!(m.determinant(), x().mul(&x()).sub(&y().mul(&y())));
    }

    #[test]
    fn row_swap_flips_sign() {
        let mut m = PolyMatrix::zero(2);
        m.set(0, 0, x());
        m.set(0, 1, y());
        m.set(1, 0, SparsePoly::one());
        m.set(1, 1, y());
        let mut swapped = PolyMatrix::zero(2);
        swapped.set(0, 0, SparsePoly::one());
        swapped.set(0, 1, y());
        swapped.set(1, 0, x());
        swapped.set(1, 1, y());
        assert_eq!(m.determinant(), swapped.determinant().neg());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        const NAMES: [&str; 4] = ["a", "b", "c", "d"];

        fn poly_strategy() -> impl Strategy<Value = SparsePoly> {
            proptest::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..4).prop_map(
                |terms| {
                    let mut p = SparsePoly::zero();
                    for (v1, v2, c) in terms {
                        p = p.add(&SparsePoly::monomial(
                            BigInt::from(c),
                            &[NAMES[v1], NAMES[v2]],
                        ));
                    }
                    p
                },
            )
        }

        proptest! {
            // det(evaluate(M)) == evaluate(det(M)) links the polynomial and
            // integer elimination paths.
            #[test]
            fn determinant_commutes_with_evaluation(
                entries in proptest::collection::vec(poly_strategy(), 16),
                vals in proptest::collection::vec(-4i64..=4, 4),
            ) {
                let mut m = PolyMatrix::zero(4);
                for (idx, p) in entries.into_iter().enumerate() {
                    m.set(idx / 4, idx % 4, p);
                }
                let assignment: BTreeMap<String, BigInt> = NAMES
                    .iter()
                    .zip(&vals)
                    .map(|(n, &v)| (n.to_string(), BigInt::from(v)))
                    .collect();
                let lhs = m.determinant().evaluate(&assignment).unwrap();
                let rhs = m.evaluate(&assignment).unwrap().determinant().unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn bareiss_matches_cofactor_5x5(
                entries in proptest::collection::vec(poly_strategy(), 25),
            ) {
                let mut m = PolyMatrix::zero(5);
                for (idx, p) in entries.into_iter().enumerate() {
                    m.set(idx / 5, idx % 5, p);
                }
                prop_assert_eq!(m.determinant(), m.det_cofactor());
            }
        }
    }
}
