//! Command-line front end. `run` returns the process exit code.
//!
//! Exit codes: 0 success, 1 domain error, 2 verification mismatch, 64 usage.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chain::Normality;
use crate::corpus::{replay, Corpus};
use crate::halfint::HalfInt;
use crate::orbit::Orbit;
use crate::params::b_module_factors;
use crate::spectra::{
    char_formula_table, induced_spectrum, pairs_spectrum, r_closure_spectrum, r_orbit_spectrum,
    sum_distinguished_spectrum, CharFormulaSpec, KtypeRequest, MultiplicityTable,
};
use crate::verify::{
    char_formula_orbits, exhaustive_oracle_cases, random_oracle_cases, verify_char_formula, verify_closure_bound,
    verify_normality, verify_oracle, verify_sum_identity, Report,
};
use crate::weights::{
    branch_to_levi, constant_term, dimension, oracle_budget, LeviShape, RootSystem, RootType, Weight,
};
use crate::{Error, InducedForm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "orbitnorm", version, about = "Symplectic nilpotent orbit closures and their K-type spectra")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Debug)]
struct OrbitArg {
    /// Group kind: C (symplectic), B or D (orthogonal).
    kind: String,
    /// Columns, comma separated, e.g. 8,6,6,4,4,2,2,0.
    columns: String,
}

impl OrbitArg {
    fn orbit(&self) -> crate::Result<Orbit> {
        Orbit::parse_with_kind(&self.kind, &self.columns)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form and basic invariants.
    Validate(OrbitArg),
    /// Chain decomposition.
    Chains(OrbitArg),
    /// Normality of the closure from the chain criterion.
    Normal(OrbitArg),
    /// Orbits reachable by fundamental degenerations, by co-rank.
    NormSet {
        /// Columns of a generic symplectic orbit.
        columns: String,
    },
    /// Parameters attached to the members of the norm set.
    Params {
        columns: String,
        /// Restrict to one member.
        #[arg(long)]
        member: Option<String>,
        /// Only the distinguished parameter of each member.
        #[arg(long)]
        distinguished: bool,
    },
    /// Composition factors of the model of the closure, for any symplectic orbit.
    Factors { columns: String },
    /// K-type spectrum of one of the modules attached to an orbit.
    Spectrum {
        #[arg(long)]
        orbit: String,
        #[arg(long, value_enum, default_value_t = Which::Closure)]
        which: Which,
        /// `diminutive` or `height=H`.
        #[arg(long, default_value = "diminutive")]
        ktypes: String,
    },
    /// Batch verification; exits 2 on any mismatch.
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Largest orbit size `2n` enumerated.
        #[arg(long, default_value_t = 16)]
        max_size: u32,
        /// Exhaustive oracle comparison up to this rank.
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Random oracle cases at rank `max_rank + 1`.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Replay the example corpus.
    Corpus {
        /// Corpus file; defaults to the bundled one.
        #[arg(long)]
        file: Option<String>,
    },
    /// Weight and branching utilities.
    #[command(subcommand)]
    Ktype(KtypeCommand),
}

#[derive(Subcommand, Debug)]
enum KtypeCommand {
    /// Dimension of an irreducible module, e.g. `dim C 2,1,0`.
    Dim {
        /// A, B, C or D.
        root_type: String,
        /// Highest weight, entries may be half integers like 3/2.
        weight: String,
    },
    /// Multiplicity of a block K-type in the restriction of an `Sp(n)` module.
    Branch {
        /// Dominant weight of `Sp(n)`.
        weight: String,
        /// Block sizes, e.g. 2,1.
        #[arg(long)]
        blocks: String,
        /// Block highest weights separated by `;`; trivial when omitted.
        #[arg(long)]
        targets: Option<String>,
        /// Also evaluate with the constant-term oracle.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Regular functions on the orbit.
    Orbit,
    /// Regular functions on the closure, through the normal bound.
    Closure,
    /// Induced from the column pairs.
    Pairs,
    /// Sum of the distinguished modules.
    #[value(name = "distinguished-sum", alias = "distinguished")]
    DistinguishedSum,
    /// The alternating-sum character formula.
    CharFormula,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Distinguished sum against the column-pair induced module.
    SumIdentity,
    /// Distinguished sum against the closure spectrum.
    ClosureBound,
    /// Spectral normality against the chain criterion.
    Normality,
    /// Character formula against the distinguished sum.
    CharFormula,
    /// Fast branching against the constant-term oracle.
    Oracle,
}

enum Failure {
    Domain(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> crate::Result<Vec<T>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} entry {s:?}"))))
        .collect()
}

fn symplectic(columns: &str) -> crate::Result<Orbit> {
    Orbit::parse_with_kind("C", columns)
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json output")
}

fn validate(o: &Orbit, format: Format) -> Outcome {
    let special = if o.kind_letter() == "C" { Some(o.is_special()?) } else { None };
    Ok(match format {
        Format::Json => pretty(json!({
            "orbit": o.to_json(),
            "size": o.size(),
            "rank": o.rank(),
            "special": special,
        })),
        Format::Table => {
            let mut s = format!("{} {o}\nsize {}  rank {}", o.kind_letter(), o.size(), o.rank());
            if let Some(sp) = special {
                s.push_str(if sp { "\nspecial" } else { "\nnot special" });
            }
            s
        }
    })
}

fn chains(o: &Orbit, format: Format) -> Outcome {
    let dec = o.chain_decompose();
    Ok(match format {
        Format::Json => pretty(json!({
            "orbit": o.to_json(),
            "chains": dec.chains().iter().map(|c| c.entries().to_vec()).collect::<Vec<_>>(),
            "generic": o.is_generic(),
        })),
        Format::Table => {
            let mut lines: Vec<String> = dec.chains().iter().map(|c| c.to_string()).collect();
            lines.push(format!("{} chains, {}", dec.len(), if o.is_generic() { "generic" } else { "not generic" }));
            lines.join("\n")
        }
    })
}

fn normal(o: &Orbit, format: Format) -> Outcome {
    let n = o.kp_normality()?;
    let chains = o.chain_decompose();
    Ok(match (format, n) {
        (Format::Json, Normality::Normal) => pretty(json!({"normal": true})),
        (Format::Json, Normality::NonNormal { chain, i, j }) => {
            pretty(json!({"normal": false, "chain": chains.chains()[chain].to_string(), "i": i, "j": j}))
        }
        (Format::Table, Normality::Normal) => "normal".to_string(),
        (Format::Table, Normality::NonNormal { chain, i, j }) => {
            format!("non-normal, witness chain {} at i={i},j={j}", chains.chains()[chain])
        }
    })
}

fn norm_set(o: &Orbit, format: Format) -> Outcome {
    let set = o.norm_set()?;
    Ok(match format {
        Format::Json => pretty(json!({
            "origin": o.to_json(),
            "members": set.members().iter().map(|m| json!({
                "orbit": m.orbit().to_json(),
                "chains": m.orbit().chain_decompose().to_string(),
                "co_rank": m.co_rank(),
            })).collect::<Vec<_>>(),
            "edges": set.edges().iter().map(|(s, _, t)| [*s, *t]).collect::<Vec<_>>(),
        })),
        Format::Table => set
            .by_co_rank()
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let items: Vec<String> = row.iter().map(|m| m.orbit().chain_decompose().to_string()).collect();
                format!("{r}: {}", items.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn params(o: &Orbit, member: Option<&str>, distinguished: bool, format: Format) -> Outcome {
    let set = o.norm_set()?;
    let members: Vec<_> = match member {
        Some(cols) => vec![set.member_or_err(&symplectic(cols)?)?],
        None => set.members().iter().collect(),
    };
    let rows: Vec<(String, Vec<crate::AttachedParameter>)> = members
        .iter()
        .map(|m| {
            let ps = if distinguished { vec![set.distinguished(m)] } else { set.attached_parameters(m) };
            (m.orbit().chain_decompose().to_string(), ps)
        })
        .collect();
    Ok(match format {
        Format::Json => pretty(json!(rows
            .iter()
            .map(|(chains, ps)| json!({
                "member": chains,
                "parameters": ps.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())),
        Format::Table => {
            let mut lines = Vec::new();
            for (chains, ps) in &rows {
                lines.push(chains.clone());
                lines.extend(ps.iter().map(|p| format!("  {p}    {}", p.expanded_notation())));
            }
            let total: usize = rows.iter().map(|r| r.1.len()).sum();
            lines.push(format!("{total} parameters"));
            lines.join("\n")
        }
    })
}

fn factors(o: &Orbit, format: Format) -> Outcome {
    let fs = b_module_factors(o)?;
    Ok(match format {
        Format::Json => pretty(json!(fs
            .iter()
            .map(|f| json!({
                "wrappers": f.wrappers,
                "parameter": f.parameter.to_json(),
                "blocks": f.to_induced_form().blocks.iter().map(|b| b.size).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())),
        Format::Table => fs.iter().map(|f| format!("{f}\n  {}", f.to_induced_form())).collect::<Vec<_>>().join("\n"),
    })
}

fn spectrum(o: &Orbit, which: Which, ktypes: &str, format: Format) -> Outcome {
    let req: KtypeRequest = ktypes.parse()?;
    let table: MultiplicityTable = match which {
        Which::Orbit => r_orbit_spectrum(o, &req)?,
        Which::Closure => r_closure_spectrum(o, &req)?,
        Which::Pairs => pairs_spectrum(o, &req)?,
        Which::DistinguishedSum => sum_distinguished_spectrum(o, &req)?,
        Which::CharFormula => char_formula_table(&CharFormulaSpec::new(o)?, &req)?,
    };
    let name = which.to_possible_value().expect("named").get_name().to_string();
    Ok(match format {
        Format::Json => pretty(json!({"orbit": o.to_json(), "which": name, "table": table.to_json()})),
        Format::Table => format!("{name} spectrum of {o}\n{}", table.to_string().trim_end()),
    })
}

fn verify(check: Check, max_size: u32, max_rank: usize, random: usize, seed: u64, format: Format) -> Outcome {
    let r: Report = match check {
        Check::SumIdentity => verify_sum_identity(max_size)?,
        Check::ClosureBound => verify_closure_bound(max_size)?,
        Check::Normality => verify_normality(max_size)?,
        Check::CharFormula => verify_char_formula(char_formula_orbits(max_size), &KtypeRequest::Diminutive)?,
        Check::Oracle => {
            let budget = oracle_budget();
            let mut cases = exhaustive_oracle_cases(max_rank);
            cases.extend(random_oracle_cases(max_rank + 1, random, 2, seed));
            verify_oracle(cases, budget)?
        }
    };
    let text = match format {
        Format::Json => pretty(json!({
            "check": r.name,
            "passed": r.passed(),
            "checked": r.checked,
            "mismatches": r.mismatches,
            "elapsed_ms": r.elapsed.as_millis() as u64,
        })),
        Format::Table => r.to_string(),
    };
    if r.passed() {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn corpus(file: Option<&str>, format: Format) -> Outcome {
    let corpus = match file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            Corpus::parse(&text)?
        }
        None => Corpus::bundled(),
    };
    let outcomes = replay(&corpus);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let text = match format {
        Format::Json => pretty(json!({
            "checks": outcomes.len(),
            "mismatches": failed,
            "outcomes": outcomes
                .iter()
                .map(|o| json!({"entry": o.entry, "what": o.what, "passed": o.passed, "detail": o.detail}))
                .collect::<Vec<_>>(),
        })),
        Format::Table => {
            let mut lines: Vec<String> = outcomes.iter().map(ToString::to_string).collect();
            lines.push(format!("{} checks, {failed} mismatches", outcomes.len()));
            lines.join("\n")
        }
    };
    if failed == 0 {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn root_type(letter: &str) -> crate::Result<RootType> {
    match letter.trim() {
        "A" | "a" => Ok(RootType::A),
        "B" | "b" => Ok(RootType::B),
        "C" | "c" => Ok(RootType::C),
        "D" | "d" => Ok(RootType::D),
        other => Err(Error::Parse(format!("unknown root type {other:?}"))),
    }
}

fn ktype(cmd: &KtypeCommand, format: Format) -> Outcome {
    match cmd {
        KtypeCommand::Dim { root_type: ty, weight } => {
            let w: Vec<HalfInt> = parse_list(weight, "weight")?;
            let sys = RootSystem::new(root_type(ty)?, w.len());
            let d = dimension(&sys, &Weight::from_halfints(&w))?;
            Ok(match format {
                Format::Json => pretty(json!({"dimension": d})),
                Format::Table => d.to_string(),
            })
        }
        KtypeCommand::Branch { weight, blocks, targets, oracle } => {
            let mu: Vec<i64> = parse_list(weight, "weight")?;
            let sizes: Vec<usize> = parse_list(blocks, "block")?;
            let targets: Vec<Vec<i64>> = match targets {
                Some(t) => t.split(';').map(|b| parse_list(b, "target")).collect::<crate::Result<_>>()?,
                None => sizes.iter().map(|&s| vec![0; s]).collect(),
            };
            let shape = LeviShape::new(sizes, targets)?;
            let sys = RootSystem::new(RootType::C, mu.len());
            let m = branch_to_levi(&sys, &mu, &shape)?;
            let check = if *oracle { Some(constant_term(&sys, &mu, &shape)?) } else { None };
            if let Some(c) = check {
                if c != m {
                    return Err(Failure::Mismatch(format!("branching {m} but oracle {c}")));
                }
            }
            Ok(match format {
                Format::Json => pretty(json!({"multiplicity": m, "oracle": check})),
                Format::Table => match check {
                    Some(c) => format!("{m} (oracle {c})"),
                    None => m.to_string(),
                },
            })
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Validate(o) => validate(&o.orbit()?, f),
        Command::Chains(o) => chains(&o.orbit()?, f),
        Command::Normal(o) => normal(&o.orbit()?, f),
        Command::NormSet { columns } => norm_set(&symplectic(columns)?, f),
        Command::Params { columns, member, distinguished } => {
            params(&symplectic(columns)?, member.as_deref(), *distinguished, f)
        }
        Command::Factors { columns } => factors(&symplectic(columns)?, f),
        Command::Spectrum { orbit, which, ktypes } => spectrum(&symplectic(orbit)?, *which, ktypes, f),
        Command::Verify { check, max_size, max_rank, random, seed } => {
            verify(*check, *max_size, *max_rank, *random, *seed, f)
        }
        Command::Corpus { file } => corpus(file.as_deref(), f),
        Command::Ktype(k) => ktype(k, f),
    }
}

/// Parse `args` (including the program name), run, and write the report to
/// `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Mismatch(text)) => {
            let _ = writeln!(out, "{text}");
            EXIT_MISMATCH
        }
    }
}

/// Build an induced form from `size:k,k,...` block descriptions; used by
/// the examples.
pub fn parse_induced_form(text: &str) -> crate::Result<InducedForm> {
    let blocks = text
        .split_whitespace()
        .map(|b| {
            let (size, ktype) = b.split_once(':').unwrap_or((b, ""));
            let size: usize = size.parse().map_err(|_| Error::Parse(format!("bad block size in {b:?}")))?;
            let ktype: Vec<i64> = if ktype.is_empty() { vec![0; size] } else { parse_list(ktype, "block K-type")? };
            if ktype.len() != size {
                return Err(Error::ShapeMismatch(format!("block {b:?} has {} entries", ktype.len())));
            }
            Ok(crate::Block { size, ktype })
        })
        .collect::<crate::Result<_>>()?;
    Ok(InducedForm { blocks })
}

/// Spectrum of an induced form given as text.
pub fn induced_spectrum_of(text: &str, ktypes: &str) -> crate::Result<MultiplicityTable> {
    induced_spectrum(&parse_induced_form(text)?, &ktypes.parse()?)
}
