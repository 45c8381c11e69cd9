//! Torsion-free modules `M ⊆ F = R^r` presented by the columns of a matrix,
//! and the distinguished module `M_r(I)` of an integrally closed ideal `I`.
//!
//! `M_r(I)` is generated by one column per minimal generator of `I`, which
//! writes the generator as a combination of `x^{r-1}, x^{r-2}y, ..., y^{r-1}`,
//! followed by the `r - 1` columns of the relation matrix (`y` on the
//! diagonal, `-x` below). Pairing with that monomial row gives the map
//! `φ(v) = Σ v_i x^{r-i} y^{i-1}` from `F` onto `m^{r-1}`, and
//! `M_r(I) = φ^{-1}(I)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::local::{monomials_below, LocalIdeal, TruncationSpace};
use crate::matrix::{relation_matrix, sym_power, PolyMatrix};
use crate::poly::{Monomial, Poly};

/// How a presentation of `M_r(I)` was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub ideal: MonomialIdeal,
    /// Row (0-based) holding the coefficient of each generator, in the order
    /// of `ideal.generators()`.
    pub rows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    matrix: PolyMatrix,
    provenance: Option<Provenance>,
}

/// An element of `F = R^r`, as a column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeVector(pub Vec<Poly>);

impl FreeVector {
    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![Poly::zero(); r];
        v[i] = Poly::one();
        FreeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, p: &Poly) -> FreeVector {
        FreeVector(self.0.iter().map(|e| e * p).collect())
    }
}

impl ModulePresentation {
    pub fn new(matrix: PolyMatrix) -> Result<Self> {
        if matrix.rows() == 0 {
            return Err(Error::Shape("a presentation needs at least one row".into()));
        }
        Ok(Self {
            matrix,
            provenance: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// All entries lie in `m`, as for a module without free summands.
    pub fn entries_in_maximal(&self) -> bool {
        self.matrix
            .entries()
            .all(|p| p.constant_term() == Default::default())
    }

    /// `I_k(M)`: the ideal of `k x k` minors, zero minors dropped.
    pub fn fitting_ideal(&self, k: usize) -> Result<LocalIdeal> {
        if k == 0 || k > self.rank() || k > self.matrix.cols() {
            return Err(Error::Shape(format!(
                "minors of size {k} of a {}x{} matrix",
                self.rank(),
                self.matrix.cols()
            )));
        }
        let mut seen = HashSet::new();
        let mut minors = Vec::new();
        for rows in combinations(self.rank(), k) {
            for cols in combinations(self.matrix.cols(), k) {
                let d = self.matrix.submatrix(&rows, &cols).det()?;
                if !d.is_zero() && seen.insert(d.clone()) {
                    minors.push(d);
                }
            }
        }
        LocalIdeal::new(minors)
    }

    /// Image of the column span in `F / m^n F`.
    pub fn truncated_span(&self, n: u32) -> TruncationSpace {
        let cols: Vec<Vec<Poly>> = (0..self.matrix.cols())
            .map(|j| self.matrix.column(j))
            .collect();
        TruncationSpace::module_span(n, self.rank(), &cols)
    }

    /// Whether `m^n0 F ⊆ M`, by Nakayama from the image in `F / m^(n0+1) F`.
    pub fn contains_mpower_free(&self, n0: u32) -> bool {
        self.truncated_span(n0 + 1).contains_all_of_degree(n0)
    }

    /// `λ(F/M)` by linear algebra on the presentation alone: find the least
    /// `N <= cap` with `m^N F ⊆ M` and count the codimension modulo `m^N F`.
    pub fn cofree_colength_by_truncation(&self, cap: u32) -> Result<u64> {
        let n = (0..=cap)
            .find(|&n| self.contains_mpower_free(n))
            .ok_or(Error::TruncationCap { cap })?;
        Ok(self.truncated_span(n).codim() as u64)
    }

    /// Membership of `v` in `M + m^n F`; equal to membership in `M` whenever
    /// `m^n F ⊆ M`.
    pub fn contains_mod_mpower(&self, v: &FreeVector, n: u32) -> Result<bool> {
        if v.len() != self.rank() {
            return Err(Error::Shape(format!(
                "vector of length {} in a module of rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(self.truncated_span(n).contains(&v.0))
    }

    /// Presentation of the same module in coordinates `u, v` with
    /// `[x y] = [u v] Q`: `Sym^{r-1}(Q)` times the substituted matrix.
    pub fn change_coords(&self, q: &PolyMatrix) -> Result<ModulePresentation> {
        if q.rows() != 2 || q.cols() != 2 {
            return Err(Error::Shape("coordinate change must be 2x2".into()));
        }
        if !q.det()?.is_local_unit() {
            return Err(Error::NotUnimodular);
        }
        let sym = sym_power(q, self.rank() - 1)?;
        let matrix = sym.mul(&self.matrix.substitute(q)?)?;
        Ok(ModulePresentation {
            matrix,
            provenance: None,
        })
    }
}

/// Row used for the generator `x^a y^b`: the largest index `i <= r - 1` with
/// `y^i | x^a y^b`, leaving the coefficient `x^{a-(r-1-i)} y^{b-i}`.
pub fn generator_row(m: Monomial, r: usize) -> usize {
    (m.b as usize).min(r - 1)
}

fn check_mr(i: &MonomialIdeal, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    if !i.is_integrally_closed() {
        return Err(Error::NotIntegrallyClosed(i.to_string()));
    }
    if (i.order() as usize) < r {
        return Err(Error::OrderTooSmall {
            order: i.order(),
            rank: r,
        });
    }
    Ok(())
}

/// `M_r(I)` for an integrally closed m-primary `I` of order at least `r`.
pub fn build_mr(i: &MonomialIdeal, r: usize) -> Result<ModulePresentation> {
    check_mr(i, r)?;
    let gens = i.generators();
    let n = gens.len();
    let mut matrix = PolyMatrix::zeros(r, n + r - 1);
    let mut rows = Vec::with_capacity(n);
    for (j, &g) in gens.iter().enumerate() {
        let row = generator_row(g, r);
        let basis = Monomial::new((r - 1 - row) as u32, row as u32);
        let coeff = basis
            .quotient(g)
            .ok_or_else(|| Error::Verification(format!("{basis} does not divide {g}")))?;
        matrix.set(row, j, Poly::monomial(coeff));
        rows.push(row);
    }
    let rel = relation_matrix(r, &Poly::x(), &Poly::y());
    for j in 0..r - 1 {
        for row in 0..r {
            matrix.set(row, n + j, rel.get(row, j).clone());
        }
    }
    let m = ModulePresentation {
        matrix,
        provenance: Some(Provenance {
            ideal: i.clone(),
            rows,
        }),
    };
    if !m.entries_in_maximal() {
        return Err(Error::Verification("an entry of M_r(I) is a unit".into()));
    }
    Ok(m)
}

/// `φ(v) = Σ v_i x^{r-i} y^{i-1}` (1-based `i`).
pub fn phi(v: &FreeVector, r: usize) -> Result<Poly> {
    if v.len() != r {
        return Err(Error::Shape(format!(
            "vector of length {} for rank {r}",
            v.len()
        )));
    }
    let mut out = Poly::zero();
    for (i, e) in v.0.iter().enumerate() {
        let basis = Monomial::new((r - 1 - i) as u32, i as u32);
        out = &out + &e.shift(basis);
    }
    Ok(out)
}

/// `v ∈ M_r(I)` iff every term of `φ(v)` lies in `I`.
pub fn member_mr(v: &FreeVector, i: &MonomialIdeal, r: usize) -> Result<bool> {
    check_mr(i, r)?;
    Ok(phi(v, r)?.monomials().all(|m| i.contains(m)))
}

/// `λ(F / M_r(I)) = λ(R/I) - λ(R/m^{r-1})`.
pub fn cofree_colength(i: &MonomialIdeal, r: usize) -> Result<u64> {
    check_mr(i, r)?;
    Ok(i.colength() - monomials_below(r as u32 - 1) as u64)
}

/// Buchsbaum–Rim multiplicity `e(M_r(I)) = e(I) - r(r-1)/2`.
pub fn buchsbaum_rim(i: &MonomialIdeal, r: usize) -> Result<u64> {
    check_mr(i, r)?;
    Ok(i.multiplicity() - monomials_below(r as u32 - 1) as u64)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
