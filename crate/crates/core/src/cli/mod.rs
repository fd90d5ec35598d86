//! The `mckay` command line. Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::glgu::{enumerate_3prime_labels, fields_orbits, full_bijection, Epsilon, GroupParams};
use crate::mckay_sym::{enumerate_3prime_sn, phi};
use crate::oracle::{build_group, cap_from_env, character_table, mckay_check, GroupSpec};
use crate::partition::Partition;
use verify::SuiteReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mckay", version, about = "Canonical McKay bijections at p = 3")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Largest group order the oracle will enumerate (default: MCKAY_ORACLE_CAP or 20000).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
}

impl RunConfig {
    fn cap(&self) -> usize {
        self.cap.unwrap_or_else(cap_from_env)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// 3'-characters of S_n and their normalizer labels.
    Sym {
        #[arg(long)]
        n: usize,
        /// A single partition as a JSON array, e.g. [4,2].
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Character table of S_n by the Murnaghan-Nakayama rule.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// 3'-characters of GL_n(q) (epsilon +) or GU_n(q) (epsilon -) and their images.
    Glgu {
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Epsilon,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        /// Check bijectivity and equivariance.
        #[arg(long)]
        verify: bool,
        /// Print the Galois orbit and stabilizer report.
        #[arg(long)]
        orbits: bool,
    },
    /// Brute-force computations on a concrete group: sym:N, gl:N:Q, gu:N:Q, wreath:R:M.
    Oracle {
        #[arg(long)]
        group: String,
        /// Write the character table as CSV.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Compare 3'-characters of G and of a Sylow 3-normalizer.
        #[arg(long)]
        mckay_check: bool,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "tensor-powers", alias = "lem1")]
    TensorPowers,
    #[value(name = "star-map", alias = "thmB")]
    StarMap,
    Psi,
    Hooks23k,
    #[value(name = "closed-form", alias = "c3precise")]
    ClosedForm,
    #[value(name = "phi-bijection", alias = "thmA")]
    PhiBijection,
    Compatibility,
    GlguEquivariance,
    GlguOrbits,
    MckayCounts,
    OracleCrosscheck,
    NegativeControl,
    Properties,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, required_unless_present = "all")]
    pub suite: Option<Suite>,
    /// Run every suite at acceptance parameters.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Upper bound on n.
    #[arg(long)]
    pub n: Option<usize>,
    /// Values of q for the GL/GU suites, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub q: Option<Vec<u64>>,
    /// Groups for the oracle suites, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub group: Option<Vec<String>>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = Result<bool, CliError>;

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(threads) = cli.config.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_FAIL
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> CliResult {
    let config = &cli.config;
    match &cli.command {
        Command::Sym { n, lambda } => cmd_sym(config, *n, lambda.as_deref(), out),
        Command::Table { n } => {
            let table = crate::sym::character_table(*n).map_err(usage)?;
            table.write_csv(out)?;
            Ok(true)
        }
        Command::Glgu { epsilon, q, n, verify, orbits } => cmd_glgu(config, *epsilon, *q, *n, *verify, *orbits, out),
        Command::Oracle { group, table, mckay_check } => cmd_oracle(config, group, table.as_ref(), *mckay_check, out),
        Command::Verify(args) => cmd_verify(config, args, out),
    }
}

fn cmd_sym(config: &RunConfig, n: usize, lambda: Option<&str>, out: &mut impl Write) -> CliResult {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    if let Some(text) = lambda {
        let lambda: Partition = serde_json::from_str(text).map_err(usage)?;
        if lambda.size() != n {
            return Err(usage(format!("{lambda} is not a partition of {n}")));
        }
        let label = phi(&lambda).map_err(usage)?;
        writeln!(out, "{}", json!({ "lambda": lambda, "blocks": label.blocks }))?;
        return Ok(true);
    }
    let rows: Vec<(Partition, String)> = enumerate_3prime_sn(n)
        .into_iter()
        .map(|l| {
            let label = phi(&l).map_err(usage)?;
            Ok((l, serde_json::to_string(&label.blocks).expect("serializable")))
        })
        .collect::<Result<_, CliError>>()?;
    match config.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(l, b)| json!({ "lambda": l, "blocks": serde_json::from_str::<serde_json::Value>(b).expect("json") }))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items).expect("json"))?;
        }
        Format::Csv => {
            writeln!(out, "# mckay sym v1 n={n} count={}", rows.len())?;
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["lambda", "blocks"])?;
            for (l, b) in &rows {
                w.write_record([serde_json::to_string(l).expect("json"), b.clone()])?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

fn cmd_glgu(
    config: &RunConfig,
    epsilon: Epsilon,
    q: u64,
    n: usize,
    verify: bool,
    orbits: bool,
    out: &mut impl Write,
) -> CliResult {
    let params = GroupParams::new(epsilon, q).map_err(usage)?;
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let labels = enumerate_3prime_labels(params, n);
    let images = labels
        .iter()
        .map(full_bijection)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Io(io::Error::other(e)))?;
    match config.format {
        Format::Json => {
            let items: Vec<_> = labels.iter().zip(&images).map(|(l, i)| json!({ "label": l, "image": i })).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items).expect("json"))?;
        }
        Format::Csv => {
            writeln!(out, "# mckay glgu v1 epsilon={epsilon} q={q} n={n} count={}", labels.len())?;
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["label", "image"])?;
            for (l, i) in labels.iter().zip(&images) {
                w.write_record([l.to_string(), serde_json::to_string(i).expect("json")])?;
            }
            w.flush()?;
        }
    }
    let mut ok = true;
    if verify {
        let report = verify::glgu_equivariance(&[(params, n)]);
        ok &= report.pass();
        writeln!(out, "# {}", report.summary())?;
    }
    if orbits {
        let report = fields_orbits(params, n).map_err(|e| CliError::Io(io::Error::other(e)))?;
        ok &= report.pass();
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
    }
    Ok(ok)
}

fn cmd_oracle(
    config: &RunConfig,
    group: &str,
    table_path: Option<&PathBuf>,
    check: bool,
    out: &mut impl Write,
) -> CliResult {
    let spec: GroupSpec = group.parse().map_err(usage)?;
    let g = build_group(spec, config.cap()).map_err(usage)?;
    let table = character_table(&g).map_err(|e| CliError::Io(io::Error::other(e)))?;
    if let Some(path) = table_path {
        table.write_csv(File::create(path)?)?;
    }
    let mut summary = json!({
        "group": spec.to_string(),
        "order": g.order(),
        "classes": table.classes.reps.len(),
        "degrees": table.degrees(),
        "count_3prime": table.count_3prime(),
        "orthogonality": table.check_orthogonality(),
    });
    let mut ok = table.check_orthogonality();
    if check {
        let (report, _, _) = mckay_check(&g).map_err(|e| CliError::Io(io::Error::other(e)))?;
        ok &= report.counts_match();
        summary["mckay"] = serde_json::to_value(&report).expect("json");
        if let Some((labels, normalizer)) = verify::label_counts(spec) {
            ok &= labels == report.group_3prime as u128 && normalizer == labels;
            summary["label_count"] = json!(labels);
            summary["normalizer_label_count"] = json!(normalizer);
        }
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&summary).expect("json"))?;
    Ok(ok)
}

fn parse_groups(args: &VerifyArgs) -> Result<Option<Vec<GroupSpec>>, CliError> {
    args.group
        .as_ref()
        .map(|gs| gs.iter().map(|g| g.parse::<GroupSpec>().map_err(usage)).collect())
        .transpose()
}

/// The suite at the given parameters, or at acceptance parameters where omitted.
fn suite_reports(config: &RunConfig, suite: Suite, args: &VerifyArgs) -> Result<Vec<SuiteReport>, CliError> {
    let cap = config.cap();
    let groups = parse_groups(args)?;
    let qs = args.q.clone().unwrap_or_else(|| vec![2, 4, 5, 7, 8]);
    let grid = verify::glgu_grid(&qs, args.n.unwrap_or(4));
    let pk: Vec<(usize, u32)> = match (args.p, args.k) {
        (Some(p), Some(k)) => vec![(p, k)],
        (None, Some(k)) => vec![(3, k)],
        (Some(p), None) => vec![(p, 1)],
        (None, None) => vec![(3, 1), (3, 2), (5, 1)],
    };
    if pk.iter().any(|&(p, k)| p < 2 || k < 1) {
        return Err(usage("need p >= 2 and k >= 1"));
    }
    let ks: Vec<u32> = args.k.map(|k| vec![k]).unwrap_or_else(|| vec![1, 2]);
    Ok(match suite {
        Suite::TensorPowers => pk.iter().map(|&(p, k)| verify::tensor_power_multiplicities(p, k)).collect(),
        Suite::StarMap => pk.iter().map(|&(p, k)| verify::star_map_bijection(p, k)).collect(),
        Suite::Psi => ks.iter().map(|&k| verify::psi(k)).collect(),
        Suite::Hooks23k => ks.iter().map(|&k| verify::hooks23k(k)).collect(),
        Suite::ClosedForm => ks.iter().map(|&k| verify::closed_form_star_map(k)).collect(),
        Suite::PhiBijection => vec![verify::phi_bijection(args.n.unwrap_or(100))],
        Suite::Compatibility => vec![verify::constituent_compatibility(args.n.unwrap_or(13))],
        Suite::GlguEquivariance => vec![verify::glgu_equivariance(&grid)],
        Suite::GlguOrbits => vec![verify::glgu_orbits(&grid)],
        Suite::MckayCounts => vec![verify::mckay_counts(&groups.unwrap_or_else(verify::mckay_count_groups), cap)],
        Suite::OracleCrosscheck => vec![verify::oracle_crosscheck(
            &groups.unwrap_or_else(|| vec![GroupSpec::Gl(2, 2), GroupSpec::Gu(2, 2)]),
            cap,
        )],
        Suite::NegativeControl => vec![verify::negative_control(cap)],
        Suite::Properties => vec![verify::properties(config.seed)],
    })
}

fn cmd_verify(config: &RunConfig, args: &VerifyArgs, out: &mut impl Write) -> CliResult {
    let suites: Vec<Suite> = if args.all {
        Suite::value_variants().to_vec()
    } else {
        vec![args.suite.expect("required unless --all")]
    };
    let mut ok = true;
    for suite in suites {
        for report in suite_reports(config, suite, args)? {
            ok &= report.pass();
            match config.format {
                Format::Csv => report.write_csv(&mut *out)?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?,
            }
            eprintln!("{} {}", if report.pass() { "PASS" } else { "FAIL" }, report.summary());
        }
    }
    Ok(ok)
}
