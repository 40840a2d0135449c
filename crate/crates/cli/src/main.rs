//! `arith-theta`: degree tables, Green functions, star-product heights,
//! classification and the verification suites.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use arith_theta_core::arith::format_rational;
use arith_theta_core::config::{OutputFormat, RunConfig};
use arith_theta_core::greens::big_xi::big_xi;
use arith_theta_core::greens::star::{lambda_star, PairConfig};
use arith_theta_core::greens::zhat::{z_hat_with_root, SquareRoot};
use arith_theta_core::identities::{arithmetic_degree_archimedean, classify, degree_series, XiIntegrand};
use arith_theta_core::lattice::hurwitz::hurwitz_class_number;
use arith_theta_core::lattice::pairs::TMatrix;
use arith_theta_core::linalg::{is_positive_definite2, sqrt_spd2, Mat2};
use arith_theta_core::suites::{run_suite, SuiteContext};
use arith_theta_core::{Error, LatticeVector, Order, TraceZeroLattice, UHPoint};

use output::Printer;

#[derive(Parser, Debug)]
#[command(name = "arith-theta", version, about = "Arithmetic theta series for Shimura curves at desk scale")]
struct Cli {
    /// TOML run configuration (overrides ARITHTHETA_CONFIG).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Order file (JSON); defaults to the bundled split order.
    #[arg(long, global = true)]
    order: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    out: Option<Format>,
    /// Seed for the randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads; 1 gives byte-identical output across runs.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Root {
    Symmetric,
    Triangular,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree series coefficients for 0 <= t <= N (those with t < 0 vanish).
    ThetaDeg {
        #[arg(long, default_value_t = 1.0)]
        v: f64,
        #[arg(long)]
        max_t: u64,
    },
    /// Xi(t, v)(z) with its truncation bound.
    Green {
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, default_value_t = 1.0)]
        v: f64,
        /// "u,y" with y > 0.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Λ(x a) for lattice vectors x1, x2 and v = a a^T.
    Lambda {
        #[arg(long, allow_hyphen_values = true)]
        x1: String,
        #[arg(long, allow_hyphen_values = true)]
        x2: String,
        /// "v11,v12,v22"; identity when omitted.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// Ẑ(T, v) summed over orbit representatives.
    ZHat {
        /// "t1,m,t2" with m = (x1, x2).
        #[arg(long = "T", allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, value_enum, default_value = "symmetric")]
        root: Root,
    },
    /// ½ ∫ Xi(t, v) over the fundamental domain.
    DegArch {
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, default_value_t = 1.0)]
        v: f64,
    },
    /// Fundamental prime and regularity of positive definite T.
    Classify {
        #[arg(long = "T", allow_hyphen_values = true)]
        t: String,
        #[arg(long = "D")]
        d: u64,
    },
    /// Hurwitz class number H(n).
    Hurwitz { n: u64 },
    /// Run a verification suite, or `full`.
    Check { suite: String },
}

/// Failure with its exit code: 2 for usage and input files, 1 otherwise.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Io { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn parse_ints<const N: usize>(s: &str, what: &str) -> Result<[i64; N], Failure> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("{what} must be {N} comma-separated integers, got {s:?}")))?;
    parts.try_into().map_err(|_| usage(format!("{what} must be {N} comma-separated integers, got {s:?}")))
}

fn parse_reals<const N: usize>(s: &str, what: &str) -> Result<[f64; N], Failure> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("{what} must be {N} comma-separated reals, got {s:?}")))?;
    parts.try_into().map_err(|_| usage(format!("{what} must be {N} comma-separated reals, got {s:?}")))
}

fn parse_v(v: &Option<String>) -> Result<Mat2, Failure> {
    let Some(s) = v else { return Ok([[1.0, 0.0], [0.0, 1.0]]) };
    let [a, b, c] = parse_reals::<3>(s, "v")?;
    let m = [[a, b], [b, c]];
    if !is_positive_definite2(&m) {
        return Err(usage(format!("v = {s} is not positive definite")));
    }
    Ok(m)
}

fn load_config(cli: &Cli) -> Result<RunConfig, Failure> {
    let path = cli.config.clone().or_else(|| std::env::var_os("ARITHTHETA_CONFIG").map(PathBuf::from));
    let mut cfg = match path {
        Some(p) => RunConfig::from_path(&p).map_err(|e| usage(format!("config {}: {e}", p.display())))?,
        None => RunConfig::default(),
    };
    if let Some(o) = &cli.order {
        cfg.order = Some(o.clone());
    }
    if let Some(f) = cli.out {
        cfg.out = match f {
            Format::Table => OutputFormat::Table,
            Format::Json => OutputFormat::Json,
        };
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        cfg.threads = t;
    }
    Ok(cfg)
}

fn load_lattice(cfg: &RunConfig) -> Result<TraceZeroLattice, Failure> {
    let order = match &cfg.order {
        None => Order::split(),
        Some(p) => {
            if !p.exists() {
                return Err(usage(format!("order file not found: {}", p.display())));
            }
            Order::from_path(p).map_err(|e| usage(format!("order file {}: {e}", p.display())))?
        }
    };
    Ok(TraceZeroLattice::new(order)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = load_config(&cli)?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build_global()
        .map_err(|e| Failure { code: 1, message: e.to_string() })?;
    let mut out = Printer::new(cfg.out);
    let spec = &cfg.quadrature;
    match &cli.command {
        Command::ThetaDeg { v, max_t } => {
            let l = load_lattice(&cfg)?;
            out.header(&["t", "coefficient"]);
            if *max_t == 0 {
                let c = -cfg.identities.hodge_degree()?;
                out.exact("theta-deg", json!({ "t": 0, "v": v }), &["0".into()], &format_rational(&c));
            } else {
                let s = degree_series(&l, *v, *max_t, &cfg.identities)?;
                for t in 0..=*max_t as i64 {
                    let c = s.coefficient(t);
                    out.exact("theta-deg", json!({ "t": t, "v": v }), &[t.to_string()], &format_rational(&c));
                }
            }
        }
        Command::Green { t, v, z } => {
            let l = load_lattice(&cfg)?;
            let [u, y] = parse_reals::<2>(z, "z")?;
            let point = UHPoint::new(u, y).map_err(|_| usage(format!("z = {z} is not in the upper half-plane")))?;
            let s = big_xi(&l, *t, *v, point, spec)?;
            out.numeric("green", json!({ "t": t, "v": v, "z": [u, y] }), s.value, s.tail_bound);
        }
        Command::Lambda { x1, x2, v } => {
            let l = load_lattice(&cfg)?;
            let a = sqrt_spd2(&parse_v(v)?);
            let x1 = LatticeVector::new(parse_ints::<3>(x1, "x1")?);
            let x2 = LatticeVector::new(parse_ints::<3>(x2, "x2")?);
            let pair = PairConfig::from_lattice(&l, &x1, &x2)?.transform(&a);
            let e = lambda_star(&pair, spec)?;
            out.numeric("lambda", json!({ "x1": x1.coords, "x2": x2.coords }), e.value, e.error);
        }
        Command::ZHat { t, v, root } => {
            let l = load_lattice(&cfg)?;
            let tm: TMatrix = t.parse().map_err(|e: Error| usage(e.to_string()))?;
            let root = match root {
                Root::Symmetric => SquareRoot::Symmetric,
                Root::Triangular => SquareRoot::Triangular,
            };
            let z = z_hat_with_root(&l, &tm, &parse_v(v)?, root, spec)?;
            out.numeric("z-hat", json!({ "T": t, "orbits": z.orbits }), z.value.value, z.value.error);
        }
        Command::DegArch { t, v } => {
            let l = load_lattice(&cfg)?;
            let g = XiIntegrand::new(&l, *t, *v, spec)?;
            let e = arithmetic_degree_archimedean(&g, spec)?;
            out.numeric("deg-arch", json!({ "t": t, "v": v }), e.value, e.error);
        }
        Command::Classify { t, d } => {
            let tm: TMatrix = t.parse().map_err(|e: Error| usage(e.to_string()))?;
            let c = classify(&tm, *d)?;
            let show = |o: Option<String>| o.unwrap_or_else(|| "none".into());
            out.header(&["T", "D", "fundamental_prime", "regular", "supersingular"]);
            out.record(
                "classify",
                json!({ "T": t, "D": d }),
                &[tm.to_string(), d.to_string()],
                json!({
                    "fundamental_prime": c.fundamental_prime,
                    "regular": c.regular,
                    "supersingular_support": c.supersingular_support,
                }),
                &[
                    show(c.fundamental_prime.map(|p| p.to_string())),
                    show(c.regular.map(|r| r.to_string())),
                    c.supersingular_support.to_string(),
                ],
            );
        }
        Command::Hurwitz { n } => {
            out.exact("hurwitz", json!({ "n": n }), &[], &format_rational(&hurwitz_class_number(*n)));
        }
        Command::Check { suite } => {
            let ctx = SuiteContext { seed: cfg.seed, spec: *spec, identities: cfg.identities.clone() };
            let reports = run_suite(suite, &ctx)?;
            let mut failed = Vec::new();
            for rep in &reports {
                out.suite(rep);
                if !rep.passed() {
                    failed.push(rep.name.clone());
                }
            }
            out.flush();
            if !failed.is_empty() {
                let first = reports.iter().flat_map(|r| r.failures()).next();
                let echo = first.map(|c| format!(": first failure {} ({})", c.label, c.detail)).unwrap_or_default();
                return Err(Failure { code: 1, message: format!("suites failed: {}{echo}", failed.join(", ")) });
            }
        }
    }
    out.flush();
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
