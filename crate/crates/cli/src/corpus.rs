//! Worked examples of the theory, each checked against the library.

use zlab::{
    build_mr, check_pair, cofree_colength, decide_rank3, exists_rank_r, member_mr, FreeVector,
    IdealExpr, LocalIdeal, ModulePresentation, MonomialIdeal, Poly, PolyMatrix, Reason, Verdict,
    DEFAULT_TRUNCATION_CAP,
};

/// A hand-written presentation matrix of `M_r(I)`.
pub struct DisplayedMatrix {
    pub ideal: &'static str,
    pub rank: usize,
    /// 1 or 2: the two presentations shown side by side.
    pub variant: u8,
    pub rows: &'static [&'static [&'static str]],
}

pub const EXAMPLE_A: &str = "(x^2,y)*IC(x^3,y^2)";
pub const EXAMPLE_B: &str = "(x^2,y)*IC(x^2,y^3)";

pub const DISPLAYED_MATRICES: &[DisplayedMatrix] = &[
    DisplayedMatrix {
        ideal: EXAMPLE_A,
        rank: 2,
        variant: 1,
        rows: &[
            &["x^4", "x^2y", "xy^2", "0", "y"],
            &["0", "0", "0", "y^2", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_A,
        rank: 2,
        variant: 2,
        rows: &[
            &["x^4", "x^2y", "0", "0", "y"],
            &["0", "0", "x^2y", "y^2", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_A,
        rank: 3,
        variant: 1,
        rows: &[
            &["x^3", "xy", "0", "0", "y", "0"],
            &["0", "0", "xy", "0", "-x", "y"],
            &["0", "0", "0", "y", "0", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_A,
        rank: 3,
        variant: 2,
        rows: &[
            &["x^3", "0", "0", "0", "y", "0"],
            &["0", "x^2", "0", "0", "-x", "y"],
            &["0", "0", "x^2", "y", "0", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_B,
        rank: 2,
        variant: 1,
        rows: &[
            &["x^3", "xy", "y^3", "0", "y"],
            &["0", "0", "0", "y^3", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_B,
        rank: 2,
        variant: 2,
        rows: &[
            &["x^3", "0", "0", "0", "y"],
            &["0", "x^2", "xy^2", "y^3", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_B,
        rank: 3,
        variant: 1,
        rows: &[
            &["x^2", "y", "0", "0", "y", "0"],
            &["0", "0", "y^2", "0", "-x", "y"],
            &["0", "0", "0", "y^2", "0", "-x"],
        ],
    },
    DisplayedMatrix {
        ideal: EXAMPLE_B,
        rank: 3,
        variant: 2,
        rows: &[
            &["x^2", "0", "0", "0", "y", "0"],
            &["0", "x", "0", "0", "-x", "y"],
            &["0", "0", "xy", "y^2", "0", "-x"],
        ],
    },
];

impl DisplayedMatrix {
    pub fn matrix(&self) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<Poly>().expect("corpus entry parses"))
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows).expect("corpus matrix is rectangular")
    }

    pub fn ideal(&self) -> MonomialIdeal {
        IdealExpr::parse(self.ideal).unwrap().evaluate().unwrap()
    }
}

pub struct ExampleResult {
    pub name: String,
    pub outcome: Result<(), String>,
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ideal(text: &str) -> MonomialIdeal {
    IdealExpr::parse(text).unwrap().evaluate().unwrap()
}

fn err(e: zlab::Error) -> String {
    e.to_string()
}

/// `P` generates `M_r(I)`: every column lies in `M_r(I)` and the two
/// quotients of `F` have the same length.
pub fn generates_mr(p: &PolyMatrix, i: &MonomialIdeal, r: usize) -> Check {
    for j in 0..p.cols() {
        let v = FreeVector(p.column(j));
        ensure(member_mr(&v, i, r).map_err(err)?, || {
            format!("column {} is not in M_{r}(I)", j + 1)
        })?;
    }
    let pres = ModulePresentation::new(p.clone()).map_err(err)?;
    let got = pres
        .cofree_colength_by_truncation(DEFAULT_TRUNCATION_CAP)
        .map_err(err)?;
    let want = cofree_colength(i, r).map_err(err)?;
    ensure(got == want, || format!("λ(F/M) is {got}, expected {want}"))
}

fn check_product(text: &str, expected: &str) -> Check {
    let got = ideal(text).to_string();
    ensure(got == expected, || format!("{text} normalizes to {got}"))
}

fn check_fitting(i: &MonomialIdeal, r: usize) -> Check {
    let m = build_mr(i, r).map_err(err)?;
    for k in 1..=r {
        let fit = m.fitting_ideal(k).map_err(err)?;
        let target = if k < r {
            MonomialIdeal::mpower(k as u32)
        } else {
            i.clone()
        };
        let eq = fit
            .equals(&LocalIdeal::from_monomial(&target), DEFAULT_TRUNCATION_CAP)
            .map_err(err)?;
        ensure(eq, || format!("I_{k}(M_{r}(I)) differs from {target}"))?;
    }
    Ok(())
}

fn check_extremal(i: &MonomialIdeal, r: usize) -> Check {
    let m = build_mr(i, r).map_err(err)?;
    let lf = m
        .cofree_colength_by_truncation(DEFAULT_TRUNCATION_CAP)
        .map_err(err)?;
    let gap = i.colength() - lf;
    let want = (r * (r - 1) / 2) as u64;
    ensure(gap == want, || {
        format!("λ(R/I) - λ(F/M) = {gap}, expected {want}")
    })
}

fn verdict(i: &MonomialIdeal, r: usize) -> Result<zlab::Decision, String> {
    if r == 3 {
        decide_rank3(i).map_err(err)
    } else {
        exists_rank_r(i, r).map_err(err)
    }
}

fn check_chain_of_lines() -> Check {
    for m1 in 2..=4 {
        for m2 in m1..=4 {
            for m3 in m2..=5 {
                let i = ideal(&format!("(x,y^{m1})*(x,y^{m2})*(x,y^{m3})"));
                let d = verdict(&i, 3)?;
                ensure(d.verdict == Verdict::EXISTS, || {
                    format!("{i}: {}", d.verdict)
                })?;
                ensure(d.splits.iter().all(|s| !s.check.cond_b), || {
                    format!("{i}: a split satisfies condition (b)")
                })?;
            }
        }
    }
    let i = ideal("(x,y^2)*(x,y^2)*(x,y^3)*(x,y^5)");
    let d = verdict(&i, 4)?;
    ensure(d.verdict == Verdict::EXISTS, || {
        format!("{i}: {}", d.verdict)
    })
}

fn check_maximal_factor() -> Check {
    for (m2, m3) in [(1, 1), (1, 4), (2, 3), (3, 3)] {
        let i = ideal(&format!("m*(x,y^{m2})*(x,y^{m3})"));
        ensure(i.initial_degree_dim() >= 2, || {
            format!("{i}: initial form space is 1-dimensional")
        })?;
        let d = verdict(&i, 3)?;
        ensure(d.verdict == Verdict::NOT_EXISTS, || {
            format!("{i}: {}", d.verdict)
        })?;
    }
    Ok(())
}

fn check_three_lines() -> Check {
    for m in 1..=3 {
        for p in 1..=3 {
            for q in 1..=3 {
                let j = ideal(&format!("(x^{m},y)"));
                let k = ideal(&format!("(x,y^{p})*(x,y^{q})"));
                let i = j.product(&k);
                let c = check_pair(&j, &k).map_err(err)?;
                ensure(c.qualifies(), || format!("({j}, {k}) fails a condition"))?;
                let d = verdict(&i, 3)?;
                ensure(d.verdict == Verdict::NOT_EXISTS, || {
                    format!("{i}: {}", d.verdict)
                })?;
            }
        }
    }
    Ok(())
}

fn check_steep_closure() -> Check {
    for m in 2..=6u64 {
        for p in 2..=4 {
            let i = ideal(&format!("(x^{m},y)*IC(x^{},y^{p})", p + 1));
            let d = verdict(&i, 3)?;
            ensure(d.verdict == Verdict::EXISTS, || {
                format!("{i}: {}", d.verdict)
            })?;
            if p >= 3 {
                ensure(d.reason == Reason::OrderGreaterThanRank, || {
                    format!("{i}: {}", d.reason)
                })?;
                continue;
            }
            ensure(d.splits.len() == 1, || {
                format!("{i}: {} splits", d.splits.len())
            })?;
            let [l, lj, lk, rr] = d.splits[0].check.lengths;
            ensure(l == m + 8 && lj + lk + rr == m + 7, || {
                format!("{i}: lengths {l} and {}", lj + lk + rr)
            })?;
        }
    }
    Ok(())
}

fn check_flat_closure() -> Check {
    for m in 2..=6 {
        let i = ideal(&format!("(x^{m},y)*IC(x^2,y^3)"));
        let d = verdict(&i, 3)?;
        ensure(d.verdict == Verdict::NOT_EXISTS, || {
            format!("{i}: {}", d.verdict)
        })?;
        let w = d.witness().ok_or_else(|| format!("{i}: no witness"))?;
        ensure(
            w.split.j == ideal(&format!("(x^{m},y)")) && w.split.k == ideal("IC(x^2,y^3)"),
            || format!("{i}: witness ({}, {})", w.split.j, w.split.k),
        )?;
    }
    Ok(())
}

fn check_maximal_power() -> Check {
    let d = verdict(&MonomialIdeal::mpower(3), 3)?;
    ensure(d.verdict == Verdict::NOT_EXISTS, || {
        format!("m^3: {}", d.verdict)
    })?;
    for r in 2..=5 {
        let i = MonomialIdeal::mpower(r as u32);
        for c in 0..r {
            for var in [Poly::x(), Poly::y()] {
                let v = FreeVector::unit(r, c).scale(&var);
                ensure(member_mr(&v, &i, r).map_err(err)?, || {
                    format!("{var}*e{} not in M_{r}(m^{r})", c + 1)
                })?;
            }
        }
    }
    Ok(())
}

fn check_minimal_generators() -> Check {
    for text in [
        EXAMPLE_A,
        EXAMPLE_B,
        "(x,y^2)*(x,y^3)*(x,y^4)",
        "(x^3,y)*IC(x^3,y^2)",
    ] {
        let i = ideal(text);
        ensure(i.num_generators() as u32 == i.order() + 1, || {
            format!(
                "{i}: {} generators, order {}",
                i.num_generators(),
                i.order()
            )
        })?;
    }
    Ok(())
}

/// Runs every example; never panics on a failing check.
pub fn run_all() -> Vec<ExampleResult> {
    let mut out = Vec::new();
    let mut push = |name: String, outcome: Check| out.push(ExampleResult { name, outcome });

    push(
        format!("{EXAMPLE_A} normalizes"),
        check_product(EXAMPLE_A, "(x^5, x^3*y, x^2*y^2, y^3)"),
    );
    push(
        format!("{EXAMPLE_B} normalizes"),
        check_product(EXAMPLE_B, "(x^4, x^2*y, x*y^3, y^4)"),
    );
    for pm in DISPLAYED_MATRICES {
        push(
            format!("{} presentation {} of M_{}", pm.ideal, pm.variant, pm.rank),
            generates_mr(&pm.matrix(), &pm.ideal(), pm.rank),
        );
    }
    for text in [EXAMPLE_A, EXAMPLE_B] {
        for r in 2..=3 {
            push(
                format!("{text} Fitting ideals of M_{r}"),
                check_fitting(&ideal(text), r),
            );
            push(
                format!("{text} M_{r} is extremal"),
                check_extremal(&ideal(text), r),
            );
        }
    }
    push(
        "minimal generators of complete ideals".into(),
        check_minimal_generators(),
    );
    push(
        "(x,y^m1)(x,y^m2)(x,y^m3) exists".into(),
        check_chain_of_lines(),
    );
    push(
        "m(x,y^m2)(x,y^m3) does not exist".into(),
        check_maximal_factor(),
    );
    push(
        "(x^m,y)(x,y^p)(x,y^q) does not exist".into(),
        check_three_lines(),
    );
    push(
        "(x^m,y)IC(x^(p+1),y^p) exists".into(),
        check_steep_closure(),
    );
    push(
        "(x^m,y)IC(x^2,y^3) does not exist".into(),
        check_flat_closure(),
    );
    push("powers of m".into(), check_maximal_power());
    out
}
