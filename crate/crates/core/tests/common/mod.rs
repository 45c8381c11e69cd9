#![allow(dead_code)]

use proptest::prelude::*;
use zlab::{Monomial, MonomialIdeal, Poly, PolyMatrix, SimpleFactor};

/// Integrally closed ideals as products of one to `max_factors` simple ideals.
pub fn closed_ideal(max_factors: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec((1..=max_exp, 1..=max_exp), 1..=max_factors).prop_map(|pairs| {
        let factors: Vec<SimpleFactor> = pairs
            .into_iter()
            .map(|(c, d)| SimpleFactor::new(c, d).unwrap_or(SimpleFactor::new(1, 1).unwrap()))
            .collect();
        SimpleFactor::product_of(&factors)
    })
}

/// Closed ideals of order at least `order`.
pub fn closed_ideal_of_order(order: u32) -> impl Strategy<Value = MonomialIdeal> {
    (closed_ideal(3, 4), 0..=order).prop_map(move |(i, extra)| {
        let mut i = i;
        while i.order() < order {
            i = i.product(&SimpleFactor::new(1, extra.max(1)).unwrap().ideal());
        }
        i
    })
}

/// Arbitrary m-primary monomial ideals.
pub fn monomial_ideal(max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (
        1..=max_exp,
        1..=max_exp,
        prop::collection::vec((0..max_exp, 0..max_exp), 0..5),
    )
        .prop_map(|(c, d, rest)| {
            let gens = [Monomial::new(c, 0), Monomial::new(0, d)]
                .into_iter()
                .chain(rest.into_iter().map(|(a, b)| Monomial::new(a, b)));
            MonomialIdeal::from_generators(gens).unwrap()
        })
}

/// Polynomials with small integer coefficients and degree below `deg`.
pub fn poly(deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..deg, 0..deg, -3i64..=3), 0..=max_terms).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (a, b, c)| {
            &acc + &Poly::from_int(c).shift(Monomial::new(a, b))
        })
    })
}

/// Integer 2x2 matrices with determinant +1 or -1.
pub fn unimodular() -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec((0usize..4, -3i64..=3), 1..5).prop_map(|ops| {
        let mut m = [[1i64, 0], [0, 1]];
        for (op, t) in ops {
            m = match op {
                0 => [[m[0][0] + t * m[1][0], m[0][1] + t * m[1][1]], m[1]],
                1 => [m[0], [m[1][0] + t * m[0][0], m[1][1] + t * m[0][1]]],
                2 => [m[1], m[0]],
                _ => [[-m[0][0], -m[0][1]], m[1]],
            };
        }
        PolyMatrix::from_ints(&[&m[0], &m[1]]).unwrap()
    })
}

pub fn int_matrix() -> impl Strategy<Value = PolyMatrix> {
    prop::array::uniform4(-4i64..=4)
        .prop_map(|[a, b, c, d]| PolyMatrix::from_ints(&[&[a, b], &[c, d]]).unwrap())
}

/// Monomials of total degree at most `d`.
pub fn monomials_up_to(d: u32) -> impl Iterator<Item = Monomial> {
    (0..=d).flat_map(Monomial::of_degree)
}
