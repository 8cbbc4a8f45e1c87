//! `weylzeta` command-line front end.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use weylzeta::efficiency::{compare, eff_bruteforce, eff_formula, Comparison};
use weylzeta::gassmann::{default_trace, default_twist, verify_gassmann};
use weylzeta::repdegrees::{
    dim_irrep, zeta_coefficients, zeta_star_coefficients, DegreeTable, GroupSpec, Variant,
};
use weylzeta::rootsys::{classify_subsystem, FamilyRank, RootSystem, Subsystem, Weight};
use weylzeta::verify;
use weylzeta::weylpoly::{check_conditions, explicit_pair, weyl_polynomial};

const CACHE_ENV: &str = "WEYLZETA_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "weylzeta",
    version,
    about = "Representation degrees of compact Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Root counts, Cartan matrix, efficiency and level of a type.
    Info {
        #[arg(long = "type")]
        ty: FamilyRank,
    },
    /// Dimension of the irreducible representation with a given highest weight.
    Dims {
        #[arg(long = "type")]
        ty: FamilyRank,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Counts of irreducible representations by dimension.
    Zeta(TableArgs),
    /// Counts of allowable irreducible representations by dimension.
    ZetaStar(TableArgs),
    /// The polynomial n ↦ dim V(nμ + ν).
    Weylpoly {
        #[arg(long = "type")]
        ty: FamilyRank,
        /// Use the built-in pair for this type (the default).
        #[arg(long, conflicts_with_all = ["mu", "nu"])]
        explicit: bool,
        #[arg(long, requires = "nu", allow_hyphen_values = true)]
        mu: Option<Weight>,
        #[arg(long, requires = "mu", allow_hyphen_values = true)]
        nu: Option<Weight>,
        /// Comma-separated points to evaluate at.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        eval: Vec<i64>,
    },
    /// Efficiency and level, optionally by exhaustive subsystem search.
    Efficiency {
        #[arg(long = "type")]
        ty: FamilyRank,
        #[arg(long)]
        brute_force: bool,
    },
    /// Compare two types by (efficiency, level).
    Compare { s: FamilyRank, t: FamilyRank },
    /// Build two quotients of SU(2)^n with equal zeta coefficients.
    Gassmann {
        /// The n = 128 construction (the only built-in one).
        #[arg(long)]
        n128: bool,
        /// Trace function values on F2^3, in place of the built-in one.
        #[arg(
            long,
            value_delimiter = ',',
            num_args = 8,
            conflicts_with = "n128",
            allow_hyphen_values = true
        )]
        trace: Option<Vec<i64>>,
        /// Permutation of F2^3 used as the twist.
        #[arg(long, value_delimiter = ',', num_args = 8)]
        twist: Option<Vec<u8>>,
        #[arg(long)]
        max_degree: u64,
    },
    /// Run every acceptance check and print one line per check.
    VerifyPaper {
        /// Skip the long enumeration and the F4 brute force.
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    group: GroupSpec,
    #[arg(long)]
    max_dim: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
}

/// Errors after argument parsing: rejected input exits 2, anything else 1.
enum Failure {
    Usage(String),
    Fail(String),
}

impl From<weylzeta::Error> for Failure {
    fn from(e: weylzeta::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Fail(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Info { ty } => info(ty),
        Command::Dims { ty, weight } => {
            let r = RootSystem::shared(ty);
            println!("{}", dim_irrep(&r, &weight)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Zeta(args) => table(args, Variant::Zeta),
        Command::ZetaStar(args) => table(args, Variant::ZetaStar),
        Command::Weylpoly {
            ty, mu, nu, eval, ..
        } => weylpoly(ty, mu.zip(nu), &eval),
        Command::Efficiency { ty, brute_force } => efficiency(ty, brute_force),
        Command::Compare { s, t } => {
            let sym = match compare(s, t) {
                Comparison::Greater => ">",
                Comparison::Less => "<",
                Comparison::Equivalent => "~",
            };
            println!("{s} {sym} {t}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gassmann {
            trace,
            twist,
            max_degree,
            ..
        } => gassmann(trace, twist, max_degree),
        Command::VerifyPaper { fast } => {
            let outcomes = verify::run_with(fast, |o| println!("{}", o.line()));
            let unexpected = outcomes.iter().filter(|o| o.unexpected_failure()).count();
            let xfail = outcomes.iter().filter(|o| o.erratum.is_some()).count();
            let passed = outcomes.iter().filter(|o| o.passed).count();
            println!("{passed} passed, {xfail} documented errata, {unexpected} failed");
            Ok(if unexpected == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn info(ty: FamilyRank) -> Outcome {
    let r = RootSystem::shared(ty);
    let e = eff_formula(ty);
    println!("type\t{ty}");
    println!("rank\t{}", r.rank());
    println!("roots\t{}", r.num_roots());
    println!("positive roots\t{}", r.num_positive());
    println!("eff\t{}", e.eff);
    println!("lev\t{}", e.lev);
    println!("cartan");
    for row in r.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("\t{}", cells.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cache_path(dir: &Path, group: &str, variant: Variant) -> PathBuf {
    let stem: String = group
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    dir.join(format!("{stem}.{variant}.tsv"))
}

/// A cached table for `group` and `variant` computed to at least `bound`.
fn from_cache(path: &Path, group: &str, variant: Variant, bound: u64) -> Option<DegreeTable> {
    let file = fs::File::open(path).ok()?;
    let t = DegreeTable::read_from(BufReader::new(file)).ok()?;
    if t.group != group || t.variant != variant {
        return None;
    }
    t.truncated(bound)
}

fn table(args: TableArgs, variant: Variant) -> Outcome {
    let group = args.group.to_string();
    let path = args
        .cache
        .as_deref()
        .map(|d| cache_path(d, &group, variant));
    let cached = path
        .as_deref()
        .and_then(|p| from_cache(p, &group, variant, args.max_dim));
    let t = match cached {
        Some(t) => t,
        None => {
            let t = match variant {
                Variant::Zeta => zeta_coefficients(&args.group, args.max_dim),
                Variant::ZetaStar => zeta_star_coefficients(&args.group, args.max_dim),
            };
            if let (Some(dir), Some(p)) = (args.cache.as_deref(), path.as_deref()) {
                fs::create_dir_all(dir)?;
                let tmp = p.with_extension("tsv.tmp");
                fs::write(&tmp, t.to_tsv())?;
                fs::rename(&tmp, p)?;
            }
            t
        }
    };
    match args.out {
        Some(out) => fs::write(out, t.to_tsv())?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            t.write_to(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn weylpoly(ty: FamilyRank, pair: Option<(Weight, Weight)>, points: &[i64]) -> Outcome {
    let r = RootSystem::shared(ty);
    let p = match &pair {
        Some((mu, nu)) => weyl_polynomial(&r, mu, nu)?,
        None => explicit_pair(ty).polynomial(),
    };
    println!("type\t{ty}");
    println!("mu\t{}", p.mu());
    println!("nu\t{}", p.nu());
    println!("coefficients\t{}", p.poly());
    match (p.ord_at_zero(), p.degree()) {
        (Ok(ord), Ok(deg)) => {
            println!("ord\t{ord}");
            println!("deg\t{deg}");
        }
        _ => println!("ord\tundefined\ndeg\tundefined"),
    }
    if pair.is_some() {
        println!("conditions\t{}", check_conditions(&r, p.mu(), p.nu())?);
    }
    for &n in points {
        println!("P({n})\t{}", p.evaluate(n));
    }
    Ok(ExitCode::SUCCESS)
}

fn type_name(r: &RootSystem, s: Subsystem) -> Result<String, Failure> {
    let parts = classify_subsystem(r, s)?;
    if parts.is_empty() {
        return Ok("0".into());
    }
    Ok(parts
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join("x"))
}

fn efficiency(ty: FamilyRank, brute_force: bool) -> Outcome {
    let r = RootSystem::shared(ty);
    let b = if brute_force {
        Some(eff_bruteforce(&r)?)
    } else {
        None
    };
    let e = eff_formula(ty);
    println!("eff\t{}", e.eff);
    println!("lev\t{}", e.lev);
    let Some(b) = b else {
        return Ok(ExitCode::SUCCESS);
    };
    println!("brute-force eff\t{}", b.eff);
    println!("brute-force lev\t{}", b.lev);
    if let Some((r1, r2)) = b.witness {
        println!("witness R'\t{}", type_name(&r, r1)?);
        println!("witness R''\t{}", type_name(&r, r2)?);
    }
    let agree = b.eff == e.eff && b.lev == e.lev;
    println!("agree\t{agree}");
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn gassmann(trace: Option<Vec<i64>>, twist: Option<Vec<u8>>, bound: u64) -> Outcome {
    let values: [i64; 8] = match trace {
        Some(v) => v
            .try_into()
            .map_err(|_| Failure::Usage("--trace takes 8 values".into()))?,
        None => *default_trace().values(),
    };
    let pi: [u8; 8] = match twist {
        Some(v) => v
            .try_into()
            .map_err(|_| Failure::Usage("--twist takes 8 values".into()))?,
        None => default_twist(),
    };
    let report = verify_gassmann(values, &pi, bound)?;
    let (t1, t2) = &report.tables;
    println!("n\t{}", report.n);
    println!("group 1\t{}", t1.group);
    println!("group 2\t{}", t2.group);
    println!("max degree\t{bound}");
    println!("irreps 1\t{}", t1.total());
    println!("irreps 2\t{}", t2.total());
    let top = t1.counts.keys().next_back().and_then(|d| d.to_u64());
    if let Some(d) = top {
        println!("largest degree\t{d}");
    }
    println!("zeta equal\t{}", report.zeta_equal);
    println!("permutation-equivalent\t{}", report.perm_equivalent);
    Ok(if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
