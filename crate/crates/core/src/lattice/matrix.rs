//! Dense big-integer matrices and Smith normal form.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Row-major integer matrix. Zero rows or columns are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// From rows of machine integers; every row must have `cols` entries.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, x) in r.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(*x);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column of wrong length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    /// `P e_i = e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[j * n + i] = BigInt::one();
        }
        m
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        let mut m = Self::identity(n);
        for x in &mut m.data {
            *x *= c;
        }
        m
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

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Columns `range` as a new matrix.
    pub fn column_block(&self, range: std::ops::Range<usize>) -> Self {
        let cols: Vec<Vec<BigInt>> = range.map(|j| self.column(j)).collect();
        Self::from_columns(self.rows, &cols)
    }

    /// Rows `range` as a new matrix.
    pub fn row_block(&self, range: std::ops::Range<usize>) -> Self {
        let n = range.len();
        let data = self.data[range.start * self.cols..range.end * self.cols].to_vec();
        IntMatrix { rows: n, cols: self.cols, data }
    }

    /// `[A | B | …]`; all blocks must have the same number of rows.
    pub fn hstack(rows: usize, blocks: &[&IntMatrix]) -> Self {
        let mut cols = Vec::new();
        for b in blocks {
            assert_eq!(b.rows, rows, "shape mismatch");
            cols.extend(b.columns());
        }
        Self::from_columns(rows, &cols)
    }

    /// Blocks stacked vertically; all must have the same number of columns.
    pub fn vstack(cols: usize, blocks: &[&IntMatrix]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "shape mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        IntMatrix { rows, cols, data }
    }

    pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Entries as machine integers, when they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row_i += k · row_j`
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for c in 0..self.cols {
            let t = &self.data[j * self.cols + c] * k;
            self.data[i * self.cols + c] += t;
        }
    }

    /// `col_j += k · col_i`
    fn add_col(&mut self, j: usize, i: usize, k: &BigInt) {
        for r in 0..self.rows {
            let t = &self.data[r * self.cols + i] * k;
            self.data[r * self.cols + j] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + c]);
            self.data[i * self.cols + c] = -x;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let x = std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = -x;
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut m = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.get(k, j);
                    m.data[i * rhs.cols + j] += t;
                }
            }
        }
        m
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, "] ({}×{})", self.rows, self.cols)
    }
}

impl Serialize for IntMatrix {
    /// Rows of integers; entries beyond 64 bits become decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Value>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(bigint_json).collect())
            .collect();
        rows.serialize(s)
    }
}

pub(crate) fn bigint_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, each nonzero
/// diagonal entry positive and dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// The nonzero diagonal entries `d₁ | d₂ | ⋯`.
    pub diag: Vec<BigInt>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// The diagonal matrix `D`.
    pub fn d(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.u.rows, self.v.rows);
        for (i, d) in self.diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith(a: &IntMatrix) -> Smith {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);
    // Row operation E on D: U ← E·U, U⁻¹ ← U⁻¹·E⁻¹. Column operation F:
    // V ← V·F, V⁻¹ ← F⁻¹·V⁻¹.
    macro_rules! swap_rows {
        ($a:expr, $b:expr) => {{
            d.swap_rows($a, $b);
            u.swap_rows($a, $b);
            u_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! swap_cols {
        ($a:expr, $b:expr) => {{
            d.swap_cols($a, $b);
            v.swap_cols($a, $b);
            v_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! add_row {
        ($i:expr, $j:expr, $k:expr) => {{
            let k: BigInt = $k;
            d.add_row($i, $j, &k);
            u.add_row($i, $j, &k);
            u_inv.add_col($j, $i, &-k);
        }};
    }
    macro_rules! add_col {
        ($j:expr, $i:expr, $k:expr) => {{
            let k: BigInt = $k;
            d.add_col($j, $i, &k);
            v.add_col($j, $i, &k);
            v_inv.add_row($i, $j, &-k);
        }};
    }

    let mut diag = Vec::new();
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else { break };
        swap_rows!(t, pi);
        swap_cols!(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !d.get(i, t).is_zero() {
                    let q = d.get(i, t).div_floor(d.get(t, t));
                    add_row!(i, t, -q);
                    if !d.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !d.get(t, j).is_zero() {
                    let q = d.get(t, j).div_floor(d.get(t, t));
                    add_col!(j, t, -q);
                    if !d.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // enforce divisibility of the remaining block
                let p = d.get(t, t).clone();
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        add_row!(t, i, BigInt::one());
                        continue;
                    }
                    None => break,
                }
            }
            // move a smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t + 1..r {
                let x = d.get(i, t);
                if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..c {
                let x = d.get(t, j);
                if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            swap_rows!(t, best.0);
            swap_cols!(t, best.1);
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        diag.push(d.get(t, t).clone());
        t += 1;
    }
    Smith { u, u_inv, v, v_inv, diag }
}

/// A ℤ-basis of the column span of `a`, as columns.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith(a);
    let cols: Vec<Vec<BigInt>> = s
        .diag
        .iter()
        .enumerate()
        .map(|(i, d)| s.u_inv.column(i).into_iter().map(|x| x * d).collect())
        .collect();
    IntMatrix::from_columns(a.rows, &cols)
}

/// A ℤ-basis of `{x : a x = 0}`, as columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith(a);
    s.v.column_block(s.rank()..a.cols)
}

/// Some integer `x` with `a x = b`.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    solve_with(&smith(a), a.cols, b)
}

pub(crate) fn solve_with(s: &Smith, cols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ub = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); cols];
    for (i, x) in ub.iter().enumerate() {
        if i < s.rank() {
            let (q, rem) = x.div_rem(&s.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !x.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// `X` with `a X = b`, column by column.
pub fn solve_matrix(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let s = smith(a);
    let cols = b
        .columns()
        .iter()
        .map(|c| solve_with(&s, a.cols, c))
        .collect::<Option<Vec<_>>>()?;
    Some(IntMatrix::from_columns(a.cols, &cols))
}

/// Determinant by fraction-free elimination (square matrices only).
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                Some(i) => {
                    m.swap_rows(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                m.set(i, j, x);
            }
        }
        prev = m.get(k, k).clone();
    }
    sign * m.get(n - 1, n - 1)
}
