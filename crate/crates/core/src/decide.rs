//! Whether an integrally closed monomial ideal is the ideal of maximal minors
//! of an indecomposable integrally closed module of a given rank.
//!
//! For order `n` and rank `r`:
//! * `n < r`: no (a module without free summands has `I(M) ⊆ m^r`);
//! * `n > r`: yes, `M_r(I)` is indecomposable;
//! * `n = r`: `M_r(I)` is indecomposable unless `I = I1 I2` with complete
//!   `I1`, `I2` of orders `r1 + r2 = r` such that
//!   (a) `λ(R/I1 I2) = λ(R/I1) + λ(R/I2) + r1 r2` and
//!   (b) `m^{r-1} = m^{r2-1} I1 + m^{r1-1} I2`.
//!
//! In ranks 2 and 3 a split satisfying (a) and (b) rules existence out; in
//! higher rank it only leaves the question open.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{factor_multiset, MonomialIdeal, SimpleFactor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[allow(non_camel_case_types)]
pub enum Verdict {
    EXISTS,
    NOT_EXISTS,
    UNKNOWN,
    INVALID,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    OrderGreaterThanRank,
    OrderLessThanRank,
    NoQualifyingSplit,
    QualifyingSplit,
    RankAbove3Inconclusive,
    NotIntegrallyClosed,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of testing conditions (a) and (b) on a pair `(J, K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    #[serde(rename = "condA")]
    pub cond_a: bool,
    #[serde(rename = "condB")]
    pub cond_b: bool,
    /// `[λ(R/JK), λ(R/J), λ(R/K), ord(J) ord(K)]`.
    pub lengths: [u64; 4],
}

impl PairCheck {
    pub fn qualifies(&self) -> bool {
        self.cond_a && self.cond_b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCandidate {
    #[serde(rename = "J")]
    pub j: MonomialIdeal,
    #[serde(rename = "K")]
    pub k: MonomialIdeal,
    pub r1: u32,
    pub r2: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitEvidence {
    #[serde(flatten)]
    pub split: SplitCandidate,
    #[serde(flatten)]
    pub check: PairCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub input: MonomialIdeal,
    pub rank: usize,
    pub order: u32,
    pub colength: u64,
    pub verdict: Verdict,
    pub reason: Reason,
    pub splits: Vec<SplitEvidence>,
    pub notes: Vec<String>,
}

impl Decision {
    /// The first split satisfying both conditions.
    pub fn witness(&self) -> Option<&SplitEvidence> {
        self.splits.iter().find(|s| s.check.qualifies())
    }

    /// Decision for an input that is not integrally closed.
    pub fn invalid(input: &MonomialIdeal, rank: usize) -> Decision {
        Decision {
            input: input.clone(),
            rank,
            order: input.order(),
            colength: input.colength(),
            verdict: Verdict::INVALID,
            reason: Reason::NotIntegrallyClosed,
            splits: Vec::new(),
            notes: vec![format!("integral closure is {}", input.integral_closure())],
        }
    }
}

fn require_closed(i: &MonomialIdeal) -> Result<()> {
    if i.is_integrally_closed() {
        Ok(())
    } else {
        Err(Error::NotIntegrallyClosed(i.to_string()))
    }
}

/// Conditions (a) and (b) for `J`, `K` with `r1 = ord(J)`, `r2 = ord(K)`.
pub fn check_pair(j: &MonomialIdeal, k: &MonomialIdeal) -> Result<PairCheck> {
    require_closed(j)?;
    require_closed(k)?;
    let (r1, r2) = (j.order(), k.order());
    let jk = j.product(k);
    let lengths = [
        jk.colength(),
        j.colength(),
        k.colength(),
        u64::from(r1) * u64::from(r2),
    ];
    let cond_a = lengths[0] == lengths[1] + lengths[2] + lengths[3];
    let lhs = MonomialIdeal::mpower((r1 + r2).saturating_sub(1));
    let rhs = MonomialIdeal::mpower(r2.saturating_sub(1))
        .product(j)
        .sum(&MonomialIdeal::mpower(r1.saturating_sub(1)).product(k));
    Ok(PairCheck {
        cond_a,
        cond_b: lhs == rhs,
        lengths,
    })
}

/// Every factorization `I = J K` into complete ideals with `ord(J) = r1`,
/// `ord(K) = r2`, obtained by distributing the simple factors of `I`.
/// When `r1 = r2` the unordered pair is reported once, with `J <= K`.
pub fn enumerate_splits(i: &MonomialIdeal, r1: u32, r2: u32) -> Result<Vec<SplitCandidate>> {
    let factors = i.zariski_factor()?;
    if r1 == 0 || r2 == 0 || i.order() != r1 + r2 {
        return Err(Error::SplitOrders {
            order: i.order(),
            r1,
            r2,
        });
    }
    let groups: Vec<(SimpleFactor, usize)> = factor_multiset(&factors).into_iter().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut take = vec![0usize; groups.len()];
    loop {
        let ord_j: u32 = groups
            .iter()
            .zip(&take)
            .map(|((f, _), &t)| f.order() * t as u32)
            .sum();
        if ord_j == r1 {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for ((f, count), &t) in groups.iter().zip(&take) {
                left.extend(std::iter::repeat_n(*f, t));
                right.extend(std::iter::repeat_n(*f, count - t));
            }
            let mut j = SimpleFactor::product_of(&left);
            let mut k = SimpleFactor::product_of(&right);
            if j.product(&k) != *i || j.order() != r1 || k.order() != r2 {
                return Err(Error::Verification(format!(
                    "split {j} * {k} does not recompose {i}"
                )));
            }
            if r1 == r2 && k < j {
                std::mem::swap(&mut j, &mut k);
            }
            if seen.insert((j.clone(), k.clone())) {
                out.push(SplitCandidate { j, k, r1, r2 });
            }
        }
        // odometer over 0..=count for each group
        let mut pos = 0;
        loop {
            if pos == groups.len() {
                out.sort_by(|a, b| (&a.j, &a.k).cmp(&(&b.j, &b.k)));
                return Ok(out);
            }
            if take[pos] < groups[pos].1 {
                take[pos] += 1;
                break;
            }
            take[pos] = 0;
            pos += 1;
        }
    }
}

fn factor_note(i: &MonomialIdeal) -> Result<String> {
    let factors: Vec<String> = i.zariski_factor()?.iter().map(|f| f.to_string()).collect();
    Ok(format!(
        "complete factorizations of a monomial ideal regroup its simple factors {}; all regroupings were checked",
        factors.join(" * ")
    ))
}

fn order_notes(i: &MonomialIdeal, r: usize) -> Vec<String> {
    let mut notes = Vec::new();
    if *i == MonomialIdeal::mpower(r as u32) {
        notes.push(format!(
            "m^{r} is not the ideal of maximal minors of any indecomposable integrally closed module of rank {r}: such a module would contain mF and hence equal m^(+{r})"
        ));
    }
    let dim = i.initial_degree_dim();
    if dim >= 2 {
        notes.push(format!(
            "the image of I in m^{r}/m^{} has dimension {dim}: m is a direct summand of every integrally closed rank-{r} module without free summands having these minors",
            r + 1
        ));
    }
    notes
}

fn decide_with_splits(i: &MonomialIdeal, r: usize, orders: &[(u32, u32)]) -> Result<Decision> {
    require_closed(i)?;
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    let order = i.order();
    let mut d = Decision {
        input: i.clone(),
        rank: r,
        order,
        colength: i.colength(),
        verdict: Verdict::EXISTS,
        reason: Reason::OrderGreaterThanRank,
        splits: Vec::new(),
        notes: Vec::new(),
    };
    if (order as usize) > r {
        d.notes.push(format!(
            "M_{r}(I) is indecomposable since ord(I) = {order} > {r}"
        ));
        return Ok(d);
    }
    if (order as usize) < r {
        d.verdict = Verdict::NOT_EXISTS;
        d.reason = Reason::OrderLessThanRank;
        d.notes.push(format!(
            "a rank-{r} module without free summands has minors in m^{r}, but ord(I) = {order}"
        ));
        return Ok(d);
    }
    for &(r1, r2) in orders {
        for split in enumerate_splits(i, r1, r2)? {
            let check = check_pair(&split.j, &split.k)?;
            d.splits.push(SplitEvidence { split, check });
        }
    }
    d.notes.push(factor_note(i)?);
    if d.witness().is_none() {
        d.reason = Reason::NoQualifyingSplit;
        d.notes.push(format!(
            "no split satisfies both conditions; M_{r}(I) is indecomposable"
        ));
    } else if r <= 3 {
        d.verdict = Verdict::NOT_EXISTS;
        d.reason = Reason::QualifyingSplit;
    } else {
        d.verdict = Verdict::UNKNOWN;
        d.reason = Reason::RankAbove3Inconclusive;
        d.notes.push(format!(
            "a split satisfies both conditions, so M_{r}(I) may decompose; the converse is not established in rank {r}"
        ));
    }
    d.notes.extend(order_notes(i, r));
    Ok(d)
}

/// Rank-3 characterization: splits into orders `(1, 2)`.
pub fn decide_rank3(i: &MonomialIdeal) -> Result<Decision> {
    decide_with_splits(i, 3, &[(1, 2)])
}

/// General rank: EXISTS is certified by the sufficient criterion; a
/// qualifying split gives NOT_EXISTS in ranks 2 and 3 and UNKNOWN above.
pub fn exists_rank_r(i: &MonomialIdeal, r: usize) -> Result<Decision> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    let orders: Vec<(u32, u32)> = (1..=r as u32 / 2).map(|r1| (r1, r as u32 - r1)).collect();
    decide_with_splits(i, r, &orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn ideal(gens: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::from_generators(gens.iter().map(|&(a, b)| Monomial::new(a, b))).unwrap()
    }

    fn xm_y(m: u32) -> MonomialIdeal {
        MonomialIdeal::pure_powers(m, 1)
    }

    fn x_yp(p: u32) -> MonomialIdeal {
        MonomialIdeal::pure_powers(1, p)
    }

    fn ic(c: u32, d: u32) -> MonomialIdeal {
        MonomialIdeal::pure_powers(c, d).integral_closure()
    }

    #[test]
    fn check_pair_examples() {
        let c = check_pair(&xm_y(2), &ic(2, 3)).unwrap();
        assert_eq!(c.lengths, [9, 2, 5, 2]);
        assert!(c.cond_a && c.cond_b);

        let c = check_pair(&xm_y(2), &ic(3, 2)).unwrap();
        assert_eq!(c.lengths, [10, 2, 5, 2]);
        assert!(!c.cond_a);

        let c = check_pair(&MonomialIdeal::maximal(), &MonomialIdeal::mpower(2)).unwrap();
        assert_eq!(c.lengths, [6, 1, 3, 2]);
        assert!(c.cond_a && c.cond_b);

        assert!(check_pair(&MonomialIdeal::pure_powers(3, 2), &xm_y(1)).is_err());
    }

    #[test]
    fn enumerate_splits_examples() {
        let s = enumerate_splits(&MonomialIdeal::mpower(3), 1, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(
            (s[0].j.clone(), s[0].k.clone()),
            (MonomialIdeal::maximal(), MonomialIdeal::mpower(2))
        );

        let i = xm_y(3).product(&x_yp(2)).product(&x_yp(4));
        let s = enumerate_splits(&i, 1, 2).unwrap();
        let js: BTreeSet<MonomialIdeal> = s.iter().map(|c| c.j.clone()).collect();
        assert_eq!(js, BTreeSet::from([xm_y(3), x_yp(2), x_yp(4)]));
        let i = xm_y(3).product(&x_yp(2)).product(&x_yp(2));
        assert_eq!(enumerate_splits(&i, 1, 2).unwrap().len(), 2);

        let i = xm_y(2).product(&ic(3, 2));
        let s = enumerate_splits(&i, 1, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].j.clone(), s[0].k.clone()), (xm_y(2), ic(3, 2)));

        let s = enumerate_splits(&MonomialIdeal::mpower(4), 2, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert!(enumerate_splits(&MonomialIdeal::mpower(4), 1, 2).is_err());
    }

    #[test]
    fn rank3_examples() {
        let d = decide_rank3(&xm_y(2).product(&ic(3, 2))).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::EXISTS, Reason::NoQualifyingSplit)
        );
        assert_eq!(d.splits.len(), 1);

        let d = decide_rank3(&xm_y(2).product(&ic(2, 3))).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::NOT_EXISTS, Reason::QualifyingSplit)
        );
        let w = d.witness().unwrap();
        assert_eq!((&w.split.j, &w.split.k), (&xm_y(2), &ic(2, 3)));

        let d = decide_rank3(&MonomialIdeal::mpower(3)).unwrap();
        assert_eq!(d.verdict, Verdict::NOT_EXISTS);
        assert!(d.notes.iter().any(|n| n.contains("contain mF")));

        let d = decide_rank3(&MonomialIdeal::mpower(2)).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::NOT_EXISTS, Reason::OrderLessThanRank)
        );
        let d = decide_rank3(&ideal(&[(5, 0), (4, 1), (3, 2), (2, 3), (1, 4), (0, 5)])).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::EXISTS, Reason::OrderGreaterThanRank)
        );
    }

    #[test]
    fn rank_r_examples() {
        let i = x_yp(2).product(&x_yp(3)).product(&x_yp(4));
        let d = exists_rank_r(&i, 3).unwrap();
        assert_eq!(d.verdict, Verdict::EXISTS);
        assert!(d.splits.iter().all(|s| !s.check.cond_b));

        let d = exists_rank_r(&MonomialIdeal::mpower(4), 4).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::UNKNOWN, Reason::RankAbove3Inconclusive)
        );
        assert_eq!(d.splits.len(), 2);
        assert!(d.splits.iter().all(|s| s.check.qualifies()));
        assert!(d.notes.iter().any(|n| n.starts_with("m^4 is not")));

        assert_eq!(
            exists_rank_r(&MonomialIdeal::mpower(2), 2).unwrap().verdict,
            Verdict::NOT_EXISTS
        );
        assert_eq!(
            exists_rank_r(&MonomialIdeal::mpower(2), 1),
            Err(Error::RankTooSmall(1))
        );
        assert!(matches!(
            exists_rank_r(&MonomialIdeal::pure_powers(3, 2), 2),
            Err(Error::NotIntegrallyClosed(_))
        ));
    }

    #[test]
    fn invalid_decision_records_closure() {
        let d = Decision::invalid(&MonomialIdeal::pure_powers(3, 2), 3);
        assert_eq!(d.verdict, Verdict::INVALID);
        assert_eq!(
            d.notes,
            vec!["integral closure is (x^3, x^2*y, y^2)".to_string()]
        );
    }
}
