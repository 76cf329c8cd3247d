//! Dense arbitrary-precision integer matrices: fraction-free determinants
//! and Smith normal form with unimodular certificates.
//!
//! Target sizes are desk scale (at most a couple hundred rows), so a dense
//! representation wins on simplicity; entry growth dominates the cost
//! anyway and `BigInt` absorbs it.

use alloc::string::ToString;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".to_string()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Removes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows - 1, self.cols - 1);
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            for c in 0..self.cols {
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

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hconcat {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += c * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(a, j) + c * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// col[a] += c * col[b]
    fn add_col_multiple(&mut self, a: usize, b: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, a) + c * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination. The interior
    /// divisions are exact over the integers and are asserted to be so.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(k, k) * m.get(i, j) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, div_exact(&num, &prev));
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Smith normal form with full certificates: returns `(U, S, W)` with
    /// `U * self * W = S`, `U` and `W` unimodular, and the diagonal of `S`
    /// nonnegative with each entry dividing the next. Inverses of `U` and
    /// `W` are tracked alongside so callers can change coordinates both ways.
    pub fn smith_normal_form(&self) -> SnfDecomposition {
        let (rows, cols) = (self.rows, self.cols);
        let mut s = self.clone();
        let mut u = IntMatrix::identity(rows);
        let mut u_inv = IntMatrix::identity(rows);
        let mut w = IntMatrix::identity(cols);
        let mut w_inv = IntMatrix::identity(cols);

        // Elementary operations, mirrored into the certificates. Row ops act
        // on the left (U), column ops on the right (W).
        macro_rules! row_swap {
            ($a:expr, $b:expr) => {{
                s.swap_rows($a, $b);
                u.swap_rows($a, $b);
                u_inv.swap_cols($a, $b);
            }};
        }
        macro_rules! col_swap {
            ($a:expr, $b:expr) => {{
                s.swap_cols($a, $b);
                w.swap_cols($a, $b);
                w_inv.swap_rows($a, $b);
            }};
        }
        macro_rules! row_add {
            ($a:expr, $b:expr, $c:expr) => {{
                let c: BigInt = $c;
                s.add_row_multiple($a, $b, &c);
                u.add_row_multiple($a, $b, &c);
                u_inv.add_col_multiple($b, $a, &(-&c));
            }};
        }
        macro_rules! col_add {
            ($a:expr, $b:expr, $c:expr) => {{
                let c: BigInt = $c;
                s.add_col_multiple($a, $b, &c);
                w.add_col_multiple($a, $b, &c);
                w_inv.add_row_multiple($b, $a, &(-&c));
            }};
        }

        let dim = rows.min(cols);
        for t in 0..dim {
            loop {
                // Pivot: minimal nonzero absolute value in the live block.
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..rows {
                    for j in t..cols {
                        if !s.get(i, j).is_zero()
                            && pivot.is_none_or(|(pi, pj)| {
                                s.get(i, j).abs() < s.get(pi, pj).abs()
                            })
                        {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else {
                    break;
                };
                row_swap!(t, pi);
                col_swap!(t, pj);

                let mut clean = true;
                for i in t + 1..rows {
                    if !s.get(i, t).is_zero() {
                        let q = s.get(i, t) / s.get(t, t);
                        if !q.is_zero() {
                            row_add!(i, t, -q);
                        }
                        if !s.get(i, t).is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..cols {
                    if !s.get(t, j).is_zero() {
                        let q = s.get(t, j) / s.get(t, t);
                        if !q.is_zero() {
                            col_add!(j, t, -q);
                        }
                        if !s.get(t, j).is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    // Residues smaller than the pivot appeared; re-pick.
                    continue;
                }
                // Row and column are clear. Enforce the divisibility chain:
                // fold any entry the pivot does not divide into row t.
                let mut offender = None;
                'find: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if !(s.get(i, j) % s.get(t, t)).is_zero() {
                            offender = Some(i);
                            break 'find;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        row_add!(t, i, BigInt::one());
                    }
                    None => break,
                }
            }
        }
        for t in 0..dim {
            if s.get(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
                u_inv.negate_col(t);
            }
        }
        SnfDecomposition {
            u,
            u_inv,
            s,
            w,
            w_inv,
        }
    }
}

/// `a / b`, asserting the division is exact.
pub fn div_exact(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

/// `base^exp` with a 64-bit exponent (`0^0 = 1`).
pub fn big_pow(base: &BigInt, exp: u64) -> BigInt {
    num_traits::pow::Pow::pow(base, exp)
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = div_exact(&(acc * BigInt::from(n - i)), &BigInt::from(i + 1));
    }
    acc
}

/// Certificate triple `U * M * W = S` for the Smith normal form of `M`,
/// with both change-of-basis inverses retained.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub s: IntMatrix,
    pub w: IntMatrix,
    pub w_inv: IntMatrix,
}

impl SnfDecomposition {
    /// Diagonal of `S` (length `min(rows, cols)`), nonnegative, each entry
    /// dividing the next.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }

    /// Solves `M x = b` over the integers using the stored certificates.
    /// Returns `None` when `b` is not in the column lattice of `M`.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if b.len() != self.u.cols() {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} for {} rows",
                b.len(),
                self.u.cols()
            )));
        }
        let c = self.u.mul_vec(b)?;
        let diag = self.diagonal();
        let mut y = vec![BigInt::zero(); self.w.rows()];
        for (i, ci) in c.iter().enumerate() {
            if i < diag.len() && !diag[i].is_zero() {
                let (q, r) = ci.div_rem(&diag[i]);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            } else if !ci.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(self.w.mul_vec(&y)?))
    }
}

/// Integer solution of `m x = b` when one exists, via a fresh Smith normal
/// form of `m`.
pub fn solve_in_lattice(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "rhs length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    m.smith_normal_form().solve(b)
}
