//! Command-line driver. Subcommands map one-to-one onto the library's sweep
//! entry points; this file only parses flags, merges the optional key=value
//! config file, and routes errors to exit codes.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 numerical failure,
//! 4 count-identity violation in the Fock oracle.

use clap::{Args, Parser, Subcommand};
use modent::fock::FockError;
use modent::sweep::{self, ScanSettings};
use modent::twoboson::Coupling;
use modent::{modes, Error};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const DEFAULT_G_LIST: &str = "0,2,5,10,inf";
const DEFAULT_T_LIST: &str = "0,0.25,0.5,0.75,1,1.25,1.5,1.75,2,2.25,2.5";
const DEFAULT_TRIMODE_G_LIST: &str = "0,0.5,1,2,5,10,20,inf";
const DEFAULT_LB_LIST: &str = "4,2.8,1.4";
const DEFAULT_MODES: &str = "-3:-1.5,-1.5:0,0:1.5,1.5:3";
const DEFAULT_QUAD_TOL: f64 = 1e-8;
const DEFAULT_TAIL_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "modent",
    version,
    about = "Spatial-mode entanglement of a trapped interacting boson pair",
    long_about = "Computes finite-temperature one-body density kernels of two \
harmonically trapped bosons with a contact interaction, evaluates mode-coherence \
entanglement witnesses over spatial regions, and cross-checks the beamsplitter \
count identity in Fock space. All quantities are in oscillator units."
)]
struct Cli {
    /// Plain key=value defaults file; explicit flags win
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Relative-motion energy levels with equation residuals
    Energies(EnergiesArgs),
    /// Witness between mirror half-intervals over a (g, T) grid
    BimodeSweep(BimodeArgs),
    /// Ground-state witness among left/center/right modes vs central length
    TrimodeSweep(TrimodeArgs),
    /// Exhaustive bipartition verdict over a list of intervals
    MultimodeScan(MultimodeArgs),
    /// Fock-space check of the count identity on random and separable states
    Oracle(OracleArgs),
}

#[derive(Args)]
struct EnergiesArgs {
    /// Contact coupling; `inf` selects the impenetrable branch
    #[arg(long)]
    g: Option<String>,
    /// Number of levels to print
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args)]
struct BimodeArgs {
    /// Comma-separated couplings
    #[arg(long = "g-list")]
    g_list: Option<String>,
    /// Comma-separated temperatures
    #[arg(long = "T-list")]
    t_list: Option<String>,
    /// Half-length: the modes are [-L, 0] and [0, L]
    #[arg(long = "L")]
    l: Option<f64>,
    /// Absolute tolerance of the witness quadrature
    #[arg(long)]
    tol: Option<f64>,
    /// Thermal weight allowed outside the level cutoff
    #[arg(long = "tail-tol")]
    tail_tol: Option<f64>,
}

#[derive(Args)]
struct TrimodeArgs {
    /// Comma-separated couplings
    #[arg(long = "g-list")]
    g_list: Option<String>,
    /// Comma-separated central mode lengths
    #[arg(long = "Lb-list")]
    lb_list: Option<String>,
    /// Absolute tolerance of the witness quadrature
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct MultimodeArgs {
    /// Contact coupling; `inf` selects the impenetrable branch
    #[arg(long)]
    g: Option<String>,
    /// Temperature
    #[arg(long = "T")]
    t: Option<f64>,
    /// Comma-separated intervals lo:hi with uniform weights
    #[arg(long)]
    modes: Option<String>,
    /// Certification threshold on the bipartition witness
    #[arg(long)]
    threshold: Option<f64>,
    /// Absolute tolerance of the witness quadrature
    #[arg(long)]
    tol: Option<f64>,
    /// Thermal weight allowed outside the level cutoff
    #[arg(long = "tail-tol")]
    tail_tol: Option<f64>,
}

#[derive(Args)]
struct OracleArgs {
    /// Random pure states to draw
    #[arg(long)]
    trials: Option<usize>,
    /// Largest total particle number
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// RNG seed; fixed seed reproduces the report byte for byte
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Config(String),
    Numerical(String),
    Oracle(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Numerical(_) => 3,
            Failure::Oracle(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Numerical(m) | Failure::Oracle(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if let Error::Fock(FockError::IdentityViolation { .. }) = &e {
            return Failure::Oracle(e.to_string());
        }
        if e.is_config() {
            Failure::Config(e.to_string())
        } else {
            Failure::Numerical(e.to_string())
        }
    }
}

impl From<FockError> for Failure {
    fn from(e: FockError) -> Self {
        Failure::from(Error::from(e))
    }
}

/// Defaults from `--config`: blank lines and `#` comments skipped, one
/// `key = value` per line, keys named like the long flags.
struct FileConfig(HashMap<String, String>);

impl FileConfig {
    fn load(path: Option<&Path>) -> Result<Self, Failure> {
        let mut map = HashMap::new();
        let Some(path) = path else {
            return Ok(FileConfig(map));
        };
        let text = std::fs::read_to_string(path).map_err(|e| {
            Failure::Config(format!("cannot read config {}: {e}", path.display()))
        })?;
        const KNOWN: &[&str] = &[
            "g", "g-list", "T-list", "L", "Lb-list", "modes", "threshold", "tol",
            "tail-tol", "seed", "trials", "n-max", "count", "T", "out",
        ];
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Failure::Config(format!(
                    "config line {}: expected key = value, got {raw:?}",
                    lineno + 1
                )));
            };
            let key = key.trim();
            if !KNOWN.contains(&key) {
                return Err(Failure::Config(format!(
                    "config line {}: unknown key {key:?}",
                    lineno + 1
                )));
            }
            map.insert(key.to_string(), value.trim().to_string());
        }
        Ok(FileConfig(map))
    }

    fn string(&self, key: &str) -> Option<String> {
        self.0.get(key).cloned()
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<T>().map(Some).map_err(|_| {
                Failure::Config(format!("config key {key}: cannot parse {v:?}"))
            }),
        }
    }
}

fn parse_coupling(s: &str) -> Result<Coupling, Failure> {
    s.parse::<Coupling>()
        .map_err(|e| Failure::Config(e.to_string()))
}

fn parse_coupling_list(s: &str) -> Result<Vec<Coupling>, Failure> {
    split_list(s).map(parse_coupling).collect()
}

fn parse_f64_list(what: &str, s: &str) -> Result<Vec<f64>, Failure> {
    split_list(s)
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| Failure::Config(format!("bad {what} entry {tok:?}")))
        })
        .collect()
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split([',', ' ']).filter(|t| !t.is_empty())
}

/// `lo:hi` intervals, comma separated; `inf`/`-inf` accepted as endpoints.
fn parse_modes(s: &str) -> Result<modes::ModeSet, Failure> {
    let mut list = Vec::new();
    for tok in split_list(s) {
        let Some((lo, hi)) = tok.split_once(':') else {
            return Err(Failure::Config(format!(
                "bad mode {tok:?}: expected lo:hi"
            )));
        };
        let lo: f64 = lo
            .trim()
            .parse()
            .map_err(|_| Failure::Config(format!("bad mode endpoint {lo:?}")))?;
        let hi: f64 = hi
            .trim()
            .parse()
            .map_err(|_| Failure::Config(format!("bad mode endpoint {hi:?}")))?;
        list.push(modes::SpatialMode::uniform(lo, hi).map_err(Error::from)?);
    }
    modes::ModeSet::new(list)
        .map_err(|e| Failure::from(Error::from(e)))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Failure::Config(format!("cannot write {}: {e}", path.display()))
        }),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let file = FileConfig::load(cli.config.as_deref())?;
    let out = cli
        .out
        .or_else(|| file.string("out").map(PathBuf::from));
    let text = match cli.cmd {
        Cmd::Energies(a) => {
            let g = a
                .g
                .or_else(|| file.string("g"))
                .ok_or_else(|| Failure::Config("energies needs --g".into()))?;
            let g = parse_coupling(&g)?;
            let count = match a.count {
                Some(c) => c,
                None => file.parse::<usize>("count")?.unwrap_or(5),
            };
            let rows = sweep::energies_table(g, count)?;
            sweep::energies_text(g, &rows)
        }
        Cmd::BimodeSweep(a) => {
            let gs = a.g_list.or_else(|| file.string("g-list"));
            let gs = parse_coupling_list(gs.as_deref().unwrap_or(DEFAULT_G_LIST))?;
            let ts = a.t_list.or_else(|| file.string("T-list"));
            let ts =
                parse_f64_list("temperature", ts.as_deref().unwrap_or(DEFAULT_T_LIST))?;
            let l = match a.l {
                Some(l) => l,
                None => file
                    .parse::<f64>("L")?
                    .unwrap_or(sweep::DEFAULT_HALF_LENGTH),
            };
            let tol = match a.tol {
                Some(t) => t,
                None => file.parse::<f64>("tol")?.unwrap_or(DEFAULT_QUAD_TOL),
            };
            let tail = match a.tail_tol {
                Some(t) => t,
                None => file.parse::<f64>("tail-tol")?.unwrap_or(DEFAULT_TAIL_TOL),
            };
            let rows = sweep::bimode_sweep(&gs, &ts, l, tail, tol)?;
            sweep::bimode_csv(&rows, &gs, &ts, l, tail, tol)
        }
        Cmd::TrimodeSweep(a) => {
            let gs = a.g_list.or_else(|| file.string("g-list"));
            let gs =
                parse_coupling_list(gs.as_deref().unwrap_or(DEFAULT_TRIMODE_G_LIST))?;
            let lbs = a.lb_list.or_else(|| file.string("Lb-list"));
            let lbs = parse_f64_list(
                "central length",
                lbs.as_deref().unwrap_or(DEFAULT_LB_LIST),
            )?;
            let tol = match a.tol {
                Some(t) => t,
                None => file.parse::<f64>("tol")?.unwrap_or(DEFAULT_QUAD_TOL),
            };
            let rows = sweep::trimode_sweep(&lbs, &gs, tol)?;
            sweep::trimode_csv(&rows, &lbs, &gs, tol)
        }
        Cmd::MultimodeScan(a) => {
            let g = a.g.or_else(|| file.string("g"));
            let g = parse_coupling(g.as_deref().unwrap_or("1"))?;
            let t = match a.t {
                Some(t) => t,
                None => file.parse::<f64>("T")?.unwrap_or(0.0),
            };
            let spec = a.modes.or_else(|| file.string("modes"));
            let set = parse_modes(spec.as_deref().unwrap_or(DEFAULT_MODES))?;
            let threshold = match a.threshold {
                Some(t) => t,
                None => file
                    .parse::<f64>("threshold")?
                    .unwrap_or(modes::DEFAULT_THRESHOLD),
            };
            let tol = match a.tol {
                Some(t) => t,
                None => file.parse::<f64>("tol")?.unwrap_or(DEFAULT_QUAD_TOL),
            };
            let tail = match a.tail_tol {
                Some(t) => t,
                None => file.parse::<f64>("tail-tol")?.unwrap_or(DEFAULT_TAIL_TOL),
            };
            let settings = ScanSettings {
                coupling: g,
                temperature: t,
                tail_tol: tail,
                threshold,
                quad_tol: tol,
            };
            let report = sweep::multimode_scan(&set, settings)?;
            sweep::multimode_csv(&report, &set, settings)
        }
        Cmd::Oracle(a) => {
            let trials = match a.trials {
                Some(t) => t,
                None => file
                    .parse::<usize>("trials")?
                    .unwrap_or(sweep::DEFAULT_ORACLE_TRIALS),
            };
            let n_max = match a.n_max {
                Some(n) => n,
                None => file
                    .parse::<usize>("n-max")?
                    .unwrap_or(sweep::DEFAULT_ORACLE_N_MAX),
            };
            let seed = match a.seed {
                Some(s) => s,
                None => file.parse::<u64>("seed")?.unwrap_or(sweep::DEFAULT_SEED),
            };
            let report = sweep::oracle_run(trials, n_max, seed)?;
            sweep::oracle_text(&report)
        }
    };
    emit(out.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
