//! Dense matrices over `k[x, y]`, exact determinants and symmetric powers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<Poly>>) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape(format!("column length differs from {rows}")));
        }
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            for (i, p) in col.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    /// Integer matrix, row-major.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Poly::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Poly> {
        self.entries.iter()
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        self.map(|p| p * c)
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Exact determinant by Laplace expansion along rows, memoized over
    /// column subsets (`O(2^n n)` polynomial products).
    pub fn det(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        // minors[mask] = det of rows 0..popcount(mask) on the columns in mask
        let mut minors: Vec<Poly> = vec![Poly::zero(); 1 << n];
        minors[0] = Poly::one();
        let mut masks: Vec<usize> = (1..1usize << n).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = mask.count_ones() as usize - 1;
            let mut acc = Poly::zero();
            for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
                let entry = self.get(row, col);
                let rest = &minors[mask & !(1 << col)];
                if entry.is_zero() || rest.is_zero() {
                    continue;
                }
                let term = entry * rest;
                // expanding along the last row of a (row+1)x(row+1) minor
                if (row + pos).is_multiple_of(2) {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            minors[mask] = acc;
        }
        Ok(minors.pop().expect("nonempty"))
    }

    /// Substitute `x := a u + b v`, `y := c u + d v` in every entry.
    pub fn substitute(&self, q: &PolyMatrix) -> Result<PolyMatrix> {
        let (x, y) = coordinate_images(q)?;
        Ok(self.map(|p| substitute_with(p, &x, &y)))
    }
}

impl fmt::Display for PolyMatrix {
    /// Bracketed rows with column-aligned entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| cells[i * self.cols + j].len())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                write!(f, " {:>w$}", cells[i * self.cols + j], w = widths[j])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// The images of `x` and `y` under `[x y] = [u v] Q`, written in the same
/// two variables (now read as `u`, `v`).
fn coordinate_images(q: &PolyMatrix) -> Result<(Poly, Poly)> {
    if q.rows() != 2 || q.cols() != 2 {
        return Err(Error::Shape("coordinate change must be 2x2".into()));
    }
    let (u, v) = (Poly::x(), Poly::y());
    let x = &(q.get(0, 0) * &u) + &(q.get(1, 0) * &v);
    let y = &(q.get(0, 1) * &u) + &(q.get(1, 1) * &v);
    Ok((x, y))
}

fn substitute_with(p: &Poly, x: &Poly, y: &Poly) -> Poly {
    let max_a = p.monomials().map(|m| m.a).max().unwrap_or(0);
    let max_b = p.monomials().map(|m| m.b).max().unwrap_or(0);
    let xs = powers(x, max_a);
    let ys = powers(y, max_b);
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let t = (&xs[m.a as usize] * &ys[m.b as usize]).scale(c);
        out = &out + &t;
    }
    out
}

fn powers(p: &Poly, up_to: u32) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    for k in 1..=up_to as usize {
        out.push(&out[k - 1] * p);
    }
    out
}

/// `p` with `x := a u + b v`, `y := c u + d v` where `Q = [[a, c], [b, d]]`.
pub fn substitute(p: &Poly, q: &PolyMatrix) -> Result<Poly> {
    let (x, y) = coordinate_images(q)?;
    Ok(substitute_with(p, &x, &y))
}

/// `Sym^k(Q)`: column `j` holds the coefficients of `U^k, U^{k-1}V, ..., V^k`
/// in `X^{k-j} Y^j`, where `X = aU + bV` and `Y = cU + dV` are read off the
/// columns of `Q`.
pub fn sym_power(q: &PolyMatrix, k: usize) -> Result<PolyMatrix> {
    if q.rows() != 2 || q.cols() != 2 {
        return Err(Error::Shape("sym_power needs a 2x2 matrix".into()));
    }
    let (a, b, c, d) = (q.get(0, 0), q.get(1, 0), q.get(0, 1), q.get(1, 1));
    let mut out = PolyMatrix::zeros(k + 1, k + 1);
    for j in 0..=k {
        let x_part = binary_form_power(a, b, k - j);
        let y_part = binary_form_power(c, d, j);
        // product of two binary forms, indexed by the power of V
        for (s, ps) in x_part.iter().enumerate() {
            for (t, pt) in y_part.iter().enumerate() {
                let cur = out.get(s + t, j).clone();
                out.set(s + t, j, &cur + &(ps * pt));
            }
        }
    }
    Ok(out)
}

/// Coefficients of `(pU + qV)^n`, indexed by the power of `V`.
fn binary_form_power(p: &Poly, q: &Poly, n: usize) -> Vec<Poly> {
    let ps = powers(p, n as u32);
    let qs = powers(q, n as u32);
    (0..=n)
        .map(|s| {
            let c = Coeff::from_integer(binomial(BigInt::from(n), BigInt::from(s)));
            (&ps[n - s] * &qs[s]).scale(&c)
        })
        .collect()
}

/// The `r x (r-1)` relation matrix with `y` on the diagonal and `-x` just
/// below it: its columns span the relations among `x^{r-1}, ..., y^{r-1}`.
pub fn relation_matrix(r: usize, x: &Poly, y: &Poly) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(r, r.saturating_sub(1));
    for j in 0..r.saturating_sub(1) {
        m.set(j, j, y.clone());
        m.set(j + 1, j, -x);
    }
    m
}

/// Whether `det(q)` is a unit of the local ring.
pub fn is_local_unimodular(q: &PolyMatrix) -> Result<bool> {
    let d = q.det()?;
    Ok(!d.constant_term().is_zero())
}
