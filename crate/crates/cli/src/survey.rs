//! Decisions for every integrally closed monomial ideal of bounded colength.
//!
//! Such an ideal is a product of simple ideals `IC(x^c, y^d)`, `gcd(c, d) = 1`,
//! in exactly one way, and colength grows strictly along products, so the
//! ideals are enumerated as multisets of simple factors with a running bound.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use zlab::{decide_rank3, exists_rank_r, MonomialIdeal, Reason, Result, SimpleFactor, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub ideal: String,
    pub order: u32,
    pub colength: u64,
    pub verdict: Verdict,
    pub reason: Reason,
    #[serde(rename = "witnessJ")]
    pub witness_j: String,
    #[serde(rename = "witnessK")]
    pub witness_k: String,
}

/// Simple ideals of colength at most `bound`, in a fixed order.
pub fn simple_factors(bound: u64) -> Vec<(SimpleFactor, MonomialIdeal)> {
    let mut out = Vec::new();
    let n = bound as u32;
    for c in 1..=n {
        for d in 1..=n {
            if let Some(f) = SimpleFactor::new(c, d) {
                let i = f.ideal();
                if i.colength() <= bound {
                    out.push((f, i));
                }
            }
        }
    }
    out.sort_by_key(|a| a.0);
    out
}

/// All integrally closed m-primary monomial ideals `I != R` with
/// `λ(R/I) <= bound`, sorted by their canonical key.
pub fn complete_ideals(bound: u64) -> Vec<MonomialIdeal> {
    fn extend(
        factors: &[(SimpleFactor, MonomialIdeal)],
        start: usize,
        current: &MonomialIdeal,
        bound: u64,
        out: &mut Vec<MonomialIdeal>,
    ) {
        for (idx, (_, f)) in factors.iter().enumerate().skip(start) {
            let next = current.product(f);
            if next.colength() <= bound {
                out.push(next.clone());
                extend(factors, idx, &next, bound, out);
            }
        }
    }
    let factors = simple_factors(bound);
    let mut out = Vec::new();
    extend(&factors, 0, &MonomialIdeal::unit(), bound, &mut out);
    out.sort_by_cached_key(|i| i.canonical_key());
    out.dedup();
    out
}

fn decide(i: &MonomialIdeal, rank: usize) -> Result<SurveyRow> {
    let d = if rank == 3 {
        decide_rank3(i)?
    } else {
        exists_rank_r(i, rank)?
    };
    let (witness_j, witness_k) = match d.witness() {
        Some(w) if d.verdict != Verdict::EXISTS => (w.split.j.to_string(), w.split.k.to_string()),
        _ => (String::new(), String::new()),
    };
    Ok(SurveyRow {
        ideal: i.to_string(),
        order: d.order,
        colength: d.colength,
        verdict: d.verdict,
        reason: d.reason,
        witness_j,
        witness_k,
    })
}

pub fn survey(bound: u64, rank: usize) -> Result<Vec<SurveyRow>> {
    complete_ideals(bound)
        .par_iter()
        .map(|i| decide(i, rank))
        .collect()
}

pub fn write_csv(w: impl Write, rows: &[SurveyRow]) -> std::io::Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for r in rows {
        wr.serialize(r).map_err(std::io::Error::other)?;
    }
    wr.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bound_lists_every_ideal() {
        let got: Vec<String> = complete_ideals(3).iter().map(|i| i.to_string()).collect();
        assert_eq!(
            got,
            [
                "(x, y)",
                "(x, y^2)",
                "(x^2, y)",
                "(x, y^3)",
                "(x^2, x*y, y^2)",
                "(x^3, y)"
            ]
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // every staircase with colength <= 7, filtered by closedness
        fn staircases(bound: u64) -> Vec<MonomialIdeal> {
            let mut out = Vec::new();
            // partitions: column heights h_0 >= h_1 >= ... > 0 with sum <= bound
            fn rec(heights: &mut Vec<u32>, max: u32, left: u64, out: &mut Vec<MonomialIdeal>) {
                if !heights.is_empty() {
                    let mut gens = vec![zlab::Monomial::new(heights.len() as u32, 0)];
                    for (a, &h) in heights.iter().enumerate() {
                        gens.push(zlab::Monomial::new(a as u32, h));
                    }
                    out.push(MonomialIdeal::from_generators(gens).unwrap());
                }
                for h in 1..=max.min(left as u32) {
                    heights.push(h);
                    rec(heights, h, left - u64::from(h), out);
                    heights.pop();
                }
            }
            rec(&mut Vec::new(), bound as u32, bound, &mut out);
            out
        }
        let mut brute: Vec<MonomialIdeal> = staircases(7)
            .into_iter()
            .filter(|i| i.is_integrally_closed())
            .collect();
        brute.sort_by_cached_key(|i| i.canonical_key());
        assert_eq!(complete_ideals(7), brute);
    }

    #[test]
    fn csv_layout() {
        let rows = survey(3, 3).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("ideal,order,colength,verdict,reason,witnessJ,witnessK")
        );
        assert_eq!(
            lines.next(),
            Some("\"(x, y)\",1,1,NOT_EXISTS,OrderLessThanRank,,")
        );
        assert_eq!(text.lines().count(), 7);
    }
}
