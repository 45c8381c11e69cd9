//! Ideals of the local ring `k[x, y]_(x, y)` generated by polynomials, compared
//! through their images modulo `m^N`.
//!
//! If `m^N ⊆ J` then `J` is the preimage of its image in `R / m^N`, so
//! equality and colength reduce to finite linear algebra. `m^N ⊆ J` itself is
//! certified by Nakayama: it suffices that `m^N ⊆ J + m^(N+1)`.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::poly::{Coeff, Monomial, Poly};

pub const DEFAULT_TRUNCATION_CAP: u32 = 64;

type SparseVec = BTreeMap<usize, Coeff>;

/// Number of monomials of degree `< n`.
pub fn monomials_below(n: u32) -> usize {
    let n = n as usize;
    n * (n + 1) / 2
}

/// Coordinates of `F / m^N F` for `F = R^components`, ordered by degree
/// first so that pivots sit on the lowest-degree term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Layout {
    bound: u32,
    components: usize,
}

impl Layout {
    fn ambient_dim(self) -> usize {
        monomials_below(self.bound) * self.components
    }

    fn index(self, comp: usize, m: Monomial) -> Option<usize> {
        let d = m.degree();
        (d < self.bound).then(|| (monomials_below(d) + m.b as usize) * self.components + comp)
    }

    fn decode(self, idx: usize) -> (usize, Monomial) {
        let comp = idx % self.components;
        let pos = idx / self.components;
        // largest d with d(d+1)/2 <= pos
        let mut d = 0usize;
        while monomials_below(d as u32 + 1) <= pos {
            d += 1;
        }
        let b = (pos - monomials_below(d as u32)) as u32;
        (comp, Monomial::new(d as u32 - b, b))
    }

    fn encode(self, v: &[Poly]) -> SparseVec {
        let mut out = SparseVec::new();
        for (comp, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                if let Some(i) = self.index(comp, *m) {
                    out.insert(i, c.clone());
                }
            }
        }
        out
    }

    fn shift(self, v: &SparseVec, by: Monomial) -> SparseVec {
        v.iter()
            .filter_map(|(&i, c)| {
                let (comp, m) = self.decode(i);
                self.index(comp, m * by).map(|j| (j, c.clone()))
            })
            .collect()
    }
}

/// The image of a submodule of `R^c` in `R^c / m^N R^c`, kept in reduced
/// row-echelon form (pivot entries equal to one, zero above and below).
#[derive(Clone, Debug)]
pub struct TruncationSpace {
    layout: Layout,
    rows: BTreeMap<usize, SparseVec>,
}

impl TruncationSpace {
    fn empty(layout: Layout) -> Self {
        Self {
            layout,
            rows: BTreeMap::new(),
        }
    }

    /// The span of `{ u * g : g in gens, u monomial }` modulo `m^bound`,
    /// where each `g` is a vector with `components` entries.
    ///
    /// Rather than enumerating all multipliers, every newly added basis vector
    /// is queued again times `x` and times `y`; the result is the smallest
    /// subspace containing the generators and closed under both shifts.
    pub fn module_span(bound: u32, components: usize, gens: &[Vec<Poly>]) -> Self {
        let layout = Layout { bound, components };
        let mut space = Self::empty(layout);
        let mut queue: VecDeque<SparseVec> = gens.iter().map(|g| layout.encode(g)).collect();
        let (x, y) = (Monomial::new(1, 0), Monomial::new(0, 1));
        while let Some(v) = queue.pop_front() {
            if let Some(w) = space.insert(v) {
                queue.push_back(layout.shift(&w, x));
                queue.push_back(layout.shift(&w, y));
            }
        }
        space
    }

    pub fn ideal_span(bound: u32, gens: &[Poly]) -> Self {
        let gens: Vec<Vec<Poly>> = gens.iter().map(|g| vec![g.clone()]).collect();
        Self::module_span(bound, 1, &gens)
    }

    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let hits: Vec<(usize, Coeff)> = v
            .iter()
            .filter(|(i, _)| self.rows.contains_key(i))
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        for (pivot, c) in hits {
            for (j, r) in &self.rows[&pivot] {
                let slot = v.entry(*j).or_insert_with(Coeff::zero);
                *slot -= &c * r;
                if slot.is_zero() {
                    v.remove(j);
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns the new basis vector if `v` was
    /// independent.
    fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let mut w = self.reduce(v);
        let (&pivot, lead) = w.iter().next()?;
        let inv = Coeff::one() / lead;
        for c in w.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(f) = row.get(&pivot).cloned() {
                for (j, c) in &w {
                    let slot = row.entry(*j).or_insert_with(Coeff::zero);
                    *slot -= &f * c;
                    if slot.is_zero() {
                        row.remove(j);
                    }
                }
            }
        }
        self.rows.insert(pivot, w.clone());
        Some(w)
    }

    pub fn bound(&self) -> u32 {
        self.layout.bound
    }

    pub fn components(&self) -> usize {
        self.layout.components
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.layout.ambient_dim()
    }

    /// `dim (R^c / (M + m^N R^c))`.
    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    /// Whether the truncation of `v` lies in the span.
    pub fn contains(&self, v: &[Poly]) -> bool {
        assert_eq!(v.len(), self.layout.components, "vector length");
        self.reduce(self.layout.encode(v)).is_empty()
    }

    pub fn contains_poly(&self, p: &Poly) -> bool {
        self.contains(std::slice::from_ref(p))
    }

    pub fn same_span(&self, other: &TruncationSpace) -> bool {
        self.layout == other.layout
            && self.rows.len() == other.rows.len()
            && other
                .rows
                .values()
                .all(|r| self.reduce(r.clone()).is_empty())
    }

    /// Every `e_i * w` with `deg w = n` lies in the span.
    pub fn contains_all_of_degree(&self, n: u32) -> bool {
        (0..self.layout.components).all(|comp| {
            Monomial::of_degree(n).all(|m| match self.layout.index(comp, m) {
                Some(i) => self.reduce(SparseVec::from([(i, Coeff::one())])).is_empty(),
                None => true,
            })
        })
    }

    /// Basis rows as polynomial vectors, ordered by pivot.
    pub fn basis(&self) -> Vec<Vec<Poly>> {
        self.rows
            .values()
            .map(|row| {
                let mut v = vec![Poly::zero(); self.layout.components];
                for (&i, c) in row {
                    let (comp, m) = self.layout.decode(i);
                    v[comp] = &v[comp] + &Poly::term(c.clone(), m);
                }
                v
            })
            .collect()
    }
}

/// An ideal of the local ring given by polynomial generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdeal {
    gens: Vec<Poly>,
}

impl LocalIdeal {
    /// Zero generators are dropped; an all-zero list is rejected.
    pub fn new(gens: impl IntoIterator<Item = Poly>) -> Result<Self> {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Ok(Self { gens })
    }

    pub fn from_monomial(i: &MonomialIdeal) -> Self {
        Self {
            gens: i.generators().iter().map(|&m| Poly::monomial(m)).collect(),
        }
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn truncated_image(&self, n: u32) -> TruncationSpace {
        TruncationSpace::ideal_span(n, &self.gens)
    }

    /// Whether `m^n0 ⊆ J`, decided from the image modulo `m^(n0+1)`.
    pub fn contains_mpower(&self, n0: u32) -> bool {
        self.truncated_image(n0 + 1).contains_all_of_degree(n0)
    }

    /// Least `N <= cap` with `m^N ⊆ J`.
    pub fn mprimary_index(&self, cap: u32) -> Result<u32> {
        (0..=cap)
            .find(|&n| self.contains_mpower(n))
            .ok_or(Error::TruncationCap { cap })
    }

    /// Exact equality with a monomial ideal in the local ring.
    pub fn equals_monomial(&self, i: &MonomialIdeal) -> bool {
        let n0 = i.mem_index();
        self.contains_mpower(n0)
            && self
                .truncated_image(n0)
                .same_span(&LocalIdeal::from_monomial(i).truncated_image(n0))
    }

    /// Exact equality of two local ideals, provided one of them contains a
    /// power of `m` with exponent at most `cap`.
    pub fn equals(&self, other: &LocalIdeal, cap: u32) -> Result<bool> {
        let n0 = self.mprimary_index(cap)?;
        Ok(other.contains_mpower(n0)
            && self
                .truncated_image(n0)
                .same_span(&other.truncated_image(n0)))
    }

    /// `λ(R/J)`.
    pub fn local_colength(&self, cap: u32) -> Result<u64> {
        let n = self.mprimary_index(cap)?;
        Ok(self.truncated_image(n).codim() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn local(gens: &[&str]) -> LocalIdeal {
        LocalIdeal::new(gens.iter().map(|s| p(s))).unwrap()
    }

    /// Independent route: all multipliers up to degree n-1, dense elimination.
    fn naive_rank(gens: &[Poly], n: u32) -> usize {
        let monos: Vec<Monomial> = (0..n).flat_map(Monomial::of_degree).collect();
        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        for g in gens {
            for u in &monos {
                let t = g.shift(*u).truncate(n);
                rows.push(monos.iter().map(|m| t.coeff(*m)).collect());
            }
        }
        let mut rank = 0;
        for col in 0..monos.len() {
            let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pr);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = &row[col] / &pivot[col];
                    for (c, v) in row.iter_mut().enumerate() {
                        *v -= &f * &pivot[c];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn truncated_image_examples() {
        let t = local(&["x"]).truncated_image(2);
        assert_eq!(t.dim(), 1);
        assert!(t.contains_poly(&p("x")));
        assert!(!t.contains_poly(&p("y")));

        let t = local(&["x + y^2", "y^3"]).truncated_image(3);
        assert_eq!(t.dim(), 3);
        for q in ["x + y^2", "x*y", "x^2"] {
            assert!(t.contains_poly(&p(q)), "{q}");
        }
        assert!(!t.contains_poly(&p("x")));
        assert_eq!(LocalIdeal::new([Poly::zero()]), Err(Error::EmptyIdeal));
    }

    #[test]
    fn closure_route_matches_naive_rank() {
        let cases: &[&[&str]] = &[
            &["x + y^2", "y^3"],
            &["x^2 - y^3", "y^2"],
            &["x^2 + 3xy", "x y^2 - y^3", "x^4"],
            &["y", "x^3 + y"],
            &["x^2 + y^3", "y^4"],
        ];
        for gens in cases {
            let gens: Vec<Poly> = gens.iter().map(|s| p(s)).collect();
            for n in 1..8 {
                assert_eq!(
                    TruncationSpace::ideal_span(n, &gens).dim(),
                    naive_rank(&gens, n),
                    "{gens:?} at {n}"
                );
            }
        }
    }

    #[test]
    fn contains_mpower_examples() {
        assert!(local(&["x^2", "xy", "y^2"]).contains_mpower(2));
        // (x^2 - y^3, y^2) = (x^2, y^2) misses xy
        assert!(!local(&["x^2 - y^3", "y^2"]).contains_mpower(2));
        assert!(local(&["x^2 - y^3", "y^2"]).contains_mpower(3));
        assert!(!local(&["x^3"]).contains_mpower(2));
        assert!(!local(&["x^2", "y^2"]).contains_mpower(2));
        assert!(local(&["x^2", "y^2"]).contains_mpower(3));
        assert!(local(&["1 + x"]).contains_mpower(0));
    }

    #[test]
    fn equals_monomial_examples() {
        let m2 = MonomialIdeal::mpower(2);
        assert!(!local(&["x^2", "y^2"]).equals_monomial(&m2));
        assert!(local(&["x^2 - xy", "xy - y^2", "xy"]).equals_monomial(&m2));
        // units are invertible locally
        assert!(local(&["x^2 + x^3", "xy", "y^2 + x*y^2"]).equals_monomial(&m2));
        assert!(local(&["x - y^2", "y"]).equals_monomial(&MonomialIdeal::maximal()));
        assert!(local(&["2 + x"]).equals_monomial(&MonomialIdeal::unit()));
    }

    #[test]
    fn local_colength_examples() {
        assert_eq!(local(&["x", "y"]).local_colength(64), Ok(1));
        assert_eq!(local(&["y", "x^3 + y"]).local_colength(64), Ok(3));
        // (x^2 + y^3, y^4): a complete intersection of multiplicity 2 * 4
        assert_eq!(local(&["x^2 + y^3", "y^4"]).local_colength(64), Ok(8));
        assert_eq!(
            local(&["x^2 + y^3", "y^4"]).truncated_image(6).codim(),
            monomials_below(6) - naive_rank(&[p("x^2 + y^3"), p("y^4")], 6)
        );
        assert_eq!(
            local(&["x^2"]).local_colength(10),
            Err(Error::TruncationCap { cap: 10 })
        );
    }

    #[test]
    fn equals_between_local_ideals() {
        let a = local(&["x^2 + y^3", "y^4"]);
        let b = local(&["x^2 + y^3 + x^2*y", "y^4 - x^2*y^2"]);
        assert_eq!(a.equals(&b, 64), Ok(true));
        let c = local(&["x^2", "y^4"]);
        assert_eq!(a.equals(&c, 64), Ok(false));
    }

    #[test]
    fn layout_round_trips() {
        let l = Layout {
            bound: 7,
            components: 3,
        };
        for i in 0..l.ambient_dim() {
            let (c, m) = l.decode(i);
            assert_eq!(l.index(c, m), Some(i));
        }
    }
}
