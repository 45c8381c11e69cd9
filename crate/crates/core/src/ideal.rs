//! m-primary monomial ideals of `k[x, y]_(x, y)` described by their staircase.
//!
//! Integral closure, multiplicity and the factorization into simple complete
//! ideals are all read off the Newton polygon: the lower convex hull of the
//! generator exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Minimal generators of a monomial ideal, sorted by decreasing x-exponent.
///
/// Every value is m-primary (contains a pure power of `x` and of `y`); the
/// unit ideal `(1)` is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn from_generators(ms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let ms: Vec<Monomial> = ms.into_iter().collect();
        if ms.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let gens = minimalize(ms);
        let has_x = gens.iter().any(|m| m.b == 0);
        let has_y = gens.iter().any(|m| m.a == 0);
        if !(has_x && has_y) {
            return Err(Error::NotMPrimary);
        }
        Ok(Self { gens })
    }

    /// Callers guarantee m-primariness.
    fn from_primary(ms: Vec<Monomial>) -> Self {
        let gens = minimalize(ms);
        debug_assert!(gens.first().is_some_and(|m| m.b == 0));
        debug_assert!(gens.last().is_some_and(|m| m.a == 0));
        Self { gens }
    }

    pub fn unit() -> Self {
        Self {
            gens: vec![Monomial::ONE],
        }
    }

    /// `m^k`, all monomials of degree `k`.
    pub fn mpower(k: u32) -> Self {
        Self::from_primary(Monomial::of_degree(k).collect())
    }

    pub fn maximal() -> Self {
        Self::mpower(1)
    }

    /// `(x^c, y^d)`.
    pub fn pure_powers(c: u32, d: u32) -> Self {
        Self::from_primary(vec![Monomial::new(c, 0), Monomial::new(0, d)])
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [Monomial::ONE]
    }

    pub fn x_power(&self) -> u32 {
        self.gens[0].a
    }

    pub fn y_power(&self) -> u32 {
        self.gens[self.gens.len() - 1].b
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let ms = self
            .gens
            .iter()
            .flat_map(|&g| other.gens.iter().map(move |&h| g * h))
            .collect();
        Self::from_primary(ms)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::from_primary(self.gens.iter().chain(&other.gens).copied().collect())
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        (0..k).fold(Self::unit(), |acc, _| acc.product(self))
    }

    /// `(I : m^k) = { u : u m^k ⊆ I }`.
    ///
    /// `u m^k ⊆ I` is tested on the staircase corners: a monomial `u` qualifies
    /// iff every `u x^{k-j} y^j` lies in `I`.
    pub fn colon_mpow(&self, k: u32) -> MonomialIdeal {
        let in_colon = |u: Monomial| Monomial::of_degree(k).all(|w| self.contains(u * w));
        // The colon contains I, so its staircase lies inside I's box.
        let (ax, by) = (self.x_power(), self.y_power());
        let mut ms = Vec::new();
        for a in 0..=ax {
            if let Some(b) = (0..=by).find(|&b| in_colon(Monomial::new(a, b))) {
                ms.push(Monomial::new(a, b));
            }
        }
        Self::from_primary(ms)
    }

    pub fn order(&self) -> u32 {
        self.gens.iter().map(|m| m.degree()).min().unwrap_or(0)
    }

    /// `λ(R/I)`: number of monomials outside the staircase.
    pub fn colength(&self) -> u64 {
        self.gens
            .windows(2)
            .map(|w| u64::from(w[0].a) * u64::from(w[1].b - w[0].b))
            .sum()
    }

    /// Least `N` with `m^N ⊆ I`.
    pub fn mem_index(&self) -> u32 {
        self.gens
            .windows(2)
            .map(|w| w[0].a + w[1].b - 1)
            .max()
            .unwrap_or(0)
    }

    /// Number of minimal generators of degree `ord(I)`; the dimension of the
    /// image of `I` in `m^ord / m^(ord+1)`.
    pub fn initial_degree_dim(&self) -> usize {
        let ord = self.order();
        self.gens.iter().filter(|m| m.degree() == ord).count()
    }

    /// Vertices of the Newton polygon, from `(0, y_power)` to `(x_power, 0)`.
    pub fn newton_vertices(&self) -> Vec<Monomial> {
        let mut pts: Vec<Monomial> = self.gens.clone();
        pts.reverse(); // ascending x-exponent
        let mut hull: Vec<Monomial> = Vec::with_capacity(pts.len());
        for p in pts {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull
    }

    pub fn integral_closure(&self) -> MonomialIdeal {
        let hull = self.newton_vertices();
        if hull.len() < 2 {
            return self.clone();
        }
        let mut ms = Vec::new();
        for e in hull.windows(2) {
            let (p, q) = (e[0], e[1]);
            for a in p.a..q.a {
                ms.push(Monomial::new(a, min_height(p, q, a)));
            }
        }
        ms.push(*hull.last().expect("nonempty"));
        Self::from_primary(ms)
    }

    pub fn is_integrally_closed(&self) -> bool {
        self.integral_closure() == *self
    }

    /// Hilbert–Samuel multiplicity `e(I)`: twice the area cut off by the
    /// Newton polygon.
    pub fn multiplicity(&self) -> u64 {
        self.newton_vertices()
            .windows(2)
            .map(|w| u64::from(w[1].a - w[0].a) * u64::from(w[0].b + w[1].b))
            .sum()
    }

    /// Unique factorization into simple complete ideals, steepest slope first.
    ///
    /// Each Newton polygon edge with direction `(g c, -g d)`, `gcd(c, d) = 1`,
    /// contributes `g` copies of `IC(x^c, y^d)`. The product of the factors is
    /// recomputed and compared against `self`.
    pub fn zariski_factor(&self) -> Result<Vec<SimpleFactor>> {
        if !self.is_integrally_closed() {
            return Err(Error::NotIntegrallyClosed(self.to_string()));
        }
        let mut factors = Vec::new();
        for e in self.newton_vertices().windows(2) {
            let (dx, dy) = (e[1].a - e[0].a, e[0].b - e[1].b);
            let g = dx.gcd(&dy);
            for _ in 0..g {
                factors.push(SimpleFactor {
                    c: dx / g,
                    d: dy / g,
                });
            }
        }
        let recomposed = SimpleFactor::product_of(&factors);
        if recomposed != *self {
            return Err(Error::Verification(format!(
                "factors of {self} multiply to {recomposed}"
            )));
        }
        Ok(factors)
    }

    /// A sort key that orders ideals by colength, then generators.
    pub fn canonical_key(&self) -> (u64, Vec<(u32, u32)>) {
        (
            self.colength(),
            self.gens.iter().map(|m| (m.a, m.b)).collect(),
        )
    }
}

/// Divisibility-minimal antichain sorted by decreasing x-exponent.
fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|p, q| q.a.cmp(&p.a).then(q.b.cmp(&p.b)));
    ms.dedup();
    // in increasing a, a monomial is minimal iff its b is below every b so far
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for &m in ms.iter().rev() {
        if out.last().is_none_or(|last: &Monomial| m.b < last.b) {
            out.push(m);
        }
    }
    out.reverse();
    out
}

fn cross(o: Monomial, p: Monomial, q: Monomial) -> i64 {
    let (ox, oy) = (i64::from(o.a), i64::from(o.b));
    (i64::from(p.a) - ox) * (i64::from(q.b) - oy) - (i64::from(p.b) - oy) * (i64::from(q.a) - ox)
}

/// Smallest integer height at abscissa `a` on or above the segment `p q`.
fn min_height(p: Monomial, q: Monomial, a: u32) -> u32 {
    // b >= p.b - (p.b - q.b)(a - p.a)/(q.a - p.a)
    let num = u64::from(p.b) * u64::from(q.a - p.a) - u64::from(p.b - q.b) * u64::from(a - p.a);
    num.div_ceil(u64::from(q.a - p.a)) as u32
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The simple complete ideal `IC(x^c, y^d)` with `gcd(c, d) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleFactor {
    pub c: u32,
    pub d: u32,
}

impl SimpleFactor {
    pub fn new(c: u32, d: u32) -> Option<Self> {
        (c > 0 && d > 0 && c.gcd(&d) == 1).then_some(Self { c, d })
    }

    pub fn order(self) -> u32 {
        self.c.min(self.d)
    }

    pub fn ideal(self) -> MonomialIdeal {
        MonomialIdeal::pure_powers(self.c, self.d).integral_closure()
    }

    pub fn product_of(factors: &[SimpleFactor]) -> MonomialIdeal {
        factors
            .iter()
            .fold(MonomialIdeal::unit(), |acc, f| acc.product(&f.ideal()))
    }
}

impl Ord for SimpleFactor {
    /// Steepest slope `d/c` first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (u64::from(other.d) * u64::from(self.c)).cmp(&(u64::from(self.d) * u64::from(other.c)))
    }
}

impl PartialOrd for SimpleFactor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pw = |v: char, e: u32| {
            if e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        };
        if self.c == 1 || self.d == 1 {
            write!(f, "({}, {})", pw('x', self.c), pw('y', self.d))
        } else {
            write!(f, "IC({}, {})", pw('x', self.c), pw('y', self.d))
        }
    }
}

/// Independent integrality test: `x^v` is integral over `I` iff
/// `(x^v)^n ∈ I^n` for some `n`. Searching `n <= x_power(I)` suffices, since
/// any point of the Newton region is a convex combination of two generators
/// whose x-exponents differ by at most `x_power(I)`.
pub struct ClosureOracle {
    powers: Vec<MonomialIdeal>,
}

impl ClosureOracle {
    pub fn new(i: &MonomialIdeal) -> Self {
        let bound = i.x_power().max(1);
        let mut powers = vec![i.clone()];
        for _ in 1..bound {
            let next = powers.last().expect("nonempty").product(i);
            powers.push(next);
        }
        Self { powers }
    }

    /// The least `n` with `(x^v)^n ∈ I^n`, if any.
    pub fn witness(&self, v: Monomial) -> Option<u32> {
        self.powers
            .iter()
            .zip(1u32..)
            .find(|(p, n)| p.contains(v.pow(*n)))
            .map(|(_, n)| n)
    }

    pub fn is_integral(&self, v: Monomial) -> bool {
        self.witness(v).is_some()
    }
}

pub fn closure_membership_oracle(v: Monomial, i: &MonomialIdeal) -> bool {
    ClosureOracle::new(i).is_integral(v)
}

/// Group equal factors: `{factor: multiplicity}` in steepest-first order.
pub fn factor_multiset(factors: &[SimpleFactor]) -> BTreeMap<SimpleFactor, usize> {
    let mut out = BTreeMap::new();
    for f in factors {
        *out.entry(*f).or_insert(0) += 1;
    }
    out
}
