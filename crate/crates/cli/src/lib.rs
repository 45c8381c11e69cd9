//! Command-line front end: argument definitions, subcommand dispatch, the
//! built-in example corpus and the survey.

pub mod corpus;
pub mod survey;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use zlab::{
    build_mr, exists_rank_r, member_mr, phi, Decision, Error, FreeVector, IdealExpr, LocalIdeal,
    MonomialIdeal, ParseError, Poly, DEFAULT_TRUNCATION_CAP,
};

pub const CAP_VAR: &str = "ZLAB_TRUNCATION_CAP";

/// Integrally closed monomial ideals in k[[x,y]] and the modules M_r(I).
///
/// Ideals are written like `(x^5, x^3y, x^2y^2, y^3)`, `IC(x^3,y^2)`, `m^3`,
/// combined with `*` and `^`. Only monomial ideals are supported.
#[derive(Debug, Parser)]
#[command(name = "zlab", version)]
pub struct Cli {
    /// Replace the input ideal by its integral closure instead of rejecting it
    #[arg(long, global = true)]
    pub close_first: bool,

    /// Also print echelon bases used by the local-ideal engine
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal expression
    pub ideal: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print minimal monomial generators
    Normalize(IdealArg),
    /// Print the integral closure
    Closure(IdealArg),
    /// Print the Zariski factorization into simple ideals
    Factor(IdealArg),
    /// Print λ(R/I)
    Colength(IdealArg),
    /// Print ord(I)
    Order(IdealArg),
    /// Print the multiplicity e(I)
    Mult(IdealArg),
    /// Print the presentation matrix of M_r(I), as a table and as JSON
    Matrix {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        rank: usize,
    },
    /// Print the k-by-k minors of M_r(I) and compare I_k with m^k or I
    Fitting {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        k: usize,
    },
    /// Test whether a vector lies in M_r(I)
    Member {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        rank: usize,
        /// Entries separated by `;`, e.g. "x^3;0;0"
        #[arg(long)]
        vector: String,
    },
    /// Decide whether I is I(M) for an indecomposable integrally closed M of rank r
    Decide {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        rank: usize,
    },
    /// Check every worked example of the theory against the library
    VerifyExamples,
    /// Tabulate decisions for all integrally closed monomial ideals of bounded colength
    Survey {
        #[arg(long, default_value_t = 20)]
        max_colength: u64,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum Failure {
    Parse(ParseError),
    Precondition(String),
    Verification(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Verification(_) => 4,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Precondition(m) => write!(f, "precondition violated: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p),
            Error::Verification(m) => Failure::Verification(m),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

/// The truncation cap, from `ZLAB_TRUNCATION_CAP` when set.
pub fn truncation_cap() -> CliResult<u32> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Precondition(format!("{CAP_VAR}={v} is not a non-negative integer"))
        }),
        Err(_) => Ok(DEFAULT_TRUNCATION_CAP),
    }
}

pub fn parse_ideal(text: &str) -> CliResult<MonomialIdeal> {
    Ok(IdealExpr::parse(text)?.evaluate()?)
}

fn closed_ideal(text: &str, close_first: bool) -> CliResult<MonomialIdeal> {
    let i = parse_ideal(text)?;
    if close_first {
        Ok(i.integral_closure())
    } else if i.is_integrally_closed() {
        Ok(i)
    } else {
        Err(Error::NotIntegrallyClosed(i.to_string()).into())
    }
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    ideal: String,
    rank: usize,
    matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<&'a [usize]>,
}

#[derive(Serialize)]
struct DecisionJson<'a> {
    input: &'a str,
    normalized: String,
    rank: usize,
    order: u32,
    colength: u64,
    verdict: zlab::Verdict,
    reason: zlab::Reason,
    splits: &'a [zlab::SplitEvidence],
    notes: &'a [String],
}

pub fn decision_json(input: &str, d: &Decision) -> String {
    let j = DecisionJson {
        input,
        normalized: d.input.to_string(),
        rank: d.rank,
        order: d.order,
        colength: d.colength,
        verdict: d.verdict,
        reason: d.reason,
        splits: &d.splits,
        notes: &d.notes,
    };
    serde_json::to_string_pretty(&j).expect("decision serializes")
}

fn dump_basis(out: &mut dyn Write, title: &str, basis: &[Vec<Poly>]) -> CliResult<()> {
    writeln!(out, "{title} ({} vectors)", basis.len())?;
    for v in basis {
        let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        writeln!(out, "  ({})", parts.join(", "))?;
    }
    Ok(())
}

/// Runs a parsed command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let close = cli.close_first;
    match &cli.command {
        Command::Normalize(a) => writeln!(out, "{}", parse_ideal(&a.ideal)?)?,
        Command::Closure(a) => writeln!(out, "{}", parse_ideal(&a.ideal)?.integral_closure())?,
        Command::Factor(a) => {
            let i = closed_ideal(&a.ideal, close)?;
            let fs: Vec<String> = i.zariski_factor()?.iter().map(|f| f.to_string()).collect();
            writeln!(
                out,
                "{}",
                if fs.is_empty() {
                    "1".to_string()
                } else {
                    fs.join(" * ")
                }
            )?;
        }
        Command::Colength(a) => writeln!(out, "{}", parse_ideal(&a.ideal)?.colength())?,
        Command::Order(a) => writeln!(out, "{}", parse_ideal(&a.ideal)?.order())?,
        Command::Mult(a) => writeln!(out, "{}", parse_ideal(&a.ideal)?.multiplicity())?,
        Command::Matrix { ideal, rank } => {
            let i = closed_ideal(&ideal.ideal, close)?;
            let m = build_mr(&i, *rank)?;
            write!(out, "{}", m.matrix())?;
            let json = MatrixJson {
                ideal: i.to_string(),
                rank: *rank,
                matrix: (0..m.matrix().rows())
                    .map(|r| m.matrix().row(r).iter().map(|p| p.to_string()).collect())
                    .collect(),
                provenance: m.provenance().map(|p| p.rows.as_slice()),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&json).expect("matrix serializes")
            )?;
            if cli.verbose {
                let n = i.mem_index() + 1;
                dump_basis(
                    out,
                    &format!("echelon basis of M mod m^{n}F"),
                    &m.truncated_span(n).basis(),
                )?;
            }
        }
        Command::Fitting { ideal, rank, k } => {
            let i = closed_ideal(&ideal.ideal, close)?;
            let cap = truncation_cap()?;
            let m = build_mr(&i, *rank)?;
            if *k == 0 || *k > *rank {
                return Err(Failure::Precondition(format!("k must lie in 1..={rank}")));
            }
            let fit = m.fitting_ideal(*k)?;
            writeln!(out, "{} minors of size {k}:", fit.generators().len())?;
            for g in fit.generators() {
                writeln!(out, "  {g}")?;
            }
            let (target, name) = if k < rank {
                (MonomialIdeal::mpower(*k as u32), format!("m^{k}"))
            } else {
                (i.clone(), "I".to_string())
            };
            let equal = fit.equals(&LocalIdeal::from_monomial(&target), cap)?;
            writeln!(out, "I_{k}(M) = {name} = {target}: {equal}")?;
            writeln!(out, "colength of I_{k}(M): {}", fit.local_colength(cap)?)?;
            if cli.verbose {
                let n = fit.mprimary_index(cap)? + 1;
                dump_basis(
                    out,
                    &format!("echelon basis of I_{k}(M) mod m^{n}"),
                    &fit.truncated_image(n).basis(),
                )?;
            }
        }
        Command::Member {
            ideal,
            rank,
            vector,
        } => {
            let i = closed_ideal(&ideal.ideal, close)?;
            let entries = vector
                .split(';')
                .map(|s| s.trim().parse::<Poly>())
                .collect::<Result<Vec<_>, _>>()?;
            let v = FreeVector(entries);
            let member = member_mr(&v, &i, *rank)?;
            writeln!(out, "phi(v) = {}", phi(&v, *rank)?)?;
            writeln!(out, "{member}")?;
        }
        Command::Decide { ideal, rank } => {
            let i = parse_ideal(&ideal.ideal)?;
            if !close && !i.is_integrally_closed() {
                writeln!(
                    out,
                    "{}",
                    decision_json(&ideal.ideal, &Decision::invalid(&i, *rank))
                )?;
                return Err(Error::NotIntegrallyClosed(i.to_string()).into());
            }
            let mut d = exists_rank_r(&i.integral_closure(), *rank)?;
            if !i.is_integrally_closed() {
                d.notes
                    .insert(0, format!("input {i} was replaced by its integral closure"));
            }
            writeln!(out, "{}", decision_json(&ideal.ideal, &d))?;
        }
        Command::VerifyExamples => {
            let results = corpus::run_all();
            let mut failed = 0;
            for r in &results {
                match &r.outcome {
                    Ok(()) => writeln!(out, "PASS {}", r.name)?,
                    Err(e) => {
                        failed += 1;
                        writeln!(out, "FAIL {}: {e}", r.name)?;
                    }
                }
            }
            writeln!(
                out,
                "{} of {} examples passed",
                results.len() - failed,
                results.len()
            )?;
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} examples failed")));
            }
        }
        Command::Survey {
            max_colength,
            rank,
            output,
        } => {
            if *rank < 2 {
                return Err(Error::RankTooSmall(*rank).into());
            }
            let rows = survey::survey(*max_colength, *rank)?;
            match output {
                Some(path) => survey::write_csv(std::fs::File::create(path)?, &rows)?,
                None => survey::write_csv(&mut *out, &rows)?,
            }
        }
    }
    Ok(())
}
