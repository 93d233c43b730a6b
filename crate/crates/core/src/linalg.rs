//! Dense exact linear algebra over the rationals.
//!
//! Elimination always picks the first nonzero entry of the current column
//! (scanning rows top to bottom), so echelon forms, kernel bases and image
//! bases are reproducible.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Parse "p", "-p" or "p/q".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn fmt_vec(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scale a vector to the smallest integer vector whose first nonzero entry is positive.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &scaled {
        g = g.gcd(x);
    }
    let lead_neg = scaled.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    if lead_neg {
        g = -g;
    }
    scaled.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Build from row vectors. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| ints(r)).collect())
    }

    pub fn from_columns(cols: Vec<Vec<Rational>>) -> Self {
        Matrix::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        let mut m = Matrix::from_rows(rows);
        m.cols = self.cols + other.cols;
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form restricted to the first `limit` columns.
    /// Row operations are applied to the full width.
    fn reduce(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in 0..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in 0..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &f * &self[(r, j)];
                    self[(i, j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.reduce(self.cols);
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel { x : M x = 0 }, one vector per free column,
    /// with that free variable set to 1 and the others to 0.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    x[p] = -e.matrix[(r, f)].clone();
                }
                x
            })
            .collect()
    }

    /// Indices of a maximal independent set of columns, chosen greedily left to right.
    pub fn image_basis(&self) -> Vec<usize> {
        self.rref().pivots
    }

    pub fn image_columns(&self) -> Vec<Vec<Rational>> {
        self.image_basis().into_iter().map(|j| self.column(j)).collect()
    }

    pub fn solve(&self, rhs: &[Rational]) -> Result<Solution, Error> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension { expected: self.rows, found: rhs.len() });
        }
        // [M | b | I] reduced on the M block only; the I block records the row operations.
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + 1 + self.rows);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = rhs[i].clone();
            aug[(i, n + 1 + i)] = Rational::one();
        }
        let pivots = aug.reduce(n);
        for i in pivots.len()..self.rows {
            if !aug[(i, n)].is_zero() {
                let y = (0..self.rows).map(|k| aug[(i, n + 1 + k)].clone()).collect();
                return Ok(Solution::NoSolution(Certificate { multipliers: y }));
            }
        }
        let mut x = vec![Rational::zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, n)].clone();
        }
        Ok(Solution::Consistent { particular: x, kernel: self.kernel() })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", fmt_vec(self.row(i)))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// The nonzero rows.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        (0..self.pivots.len()).map(|i| self.matrix.row(i).to_vec()).collect()
    }
}

/// A row combination y with yᵀM = 0 and yᵀb ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub multipliers: Vec<Rational>,
}

impl Certificate {
    pub fn verify(&self, m: &Matrix, rhs: &[Rational]) -> bool {
        if self.multipliers.len() != m.rows() || rhs.len() != m.rows() {
            return false;
        }
        let combo = m.transpose().mul_vec(&self.multipliers);
        is_zero_vec(&combo) && !dot(&self.multipliers, rhs).is_zero()
    }

    /// The nonzero value the combination produces on the right-hand side.
    pub fn residual(&self, rhs: &[Rational]) -> Rational {
        dot(&self.multipliers, rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Consistent { particular: Vec<Rational>, kernel: Vec<Vec<Rational>> },
    NoSolution(Certificate),
}

impl Solution {
    pub fn particular(&self) -> Option<&[Rational]> {
        match self {
            Solution::Consistent { particular, .. } => Some(particular),
            Solution::NoSolution(_) => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, Solution::Consistent { .. })
    }
}

/// Canonical (reduced echelon) basis of the span of some vectors of length `width`.
pub fn span_basis(vectors: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    assert!(vectors.iter().all(|v| v.len() == width));
    Matrix::from_rows(vectors.to_vec()).rref().basis()
}

pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if is_zero_vec(v) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let mut rows = basis.to_vec();
    let r0 = Matrix::from_rows(rows.clone()).rank();
    rows.push(v.to_vec());
    Matrix::from_rows(rows).rank() == r0
}
