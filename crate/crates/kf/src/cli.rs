//! Command-line surface: polynomial computation, graph export, verification
//! sweeps. Exit code 0 on success, 1 on usage errors, 2 when a mathematical
//! contract is falsified or a verification check finds a counterexample.

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::Error;
use crate::kostant::{kf_alternating, LaurentFreePoly};
use crate::oracles::kf_charge;
use crate::phi_graph::{build_graph, kf_admissible, kf_positive, to_dot, to_json};
use crate::root_system::WeightVector;
use crate::verify::{
    check_braid, check_cayley, check_conj_hexagon_bd, check_conj_propagation, check_stembridge,
    dominant_pairs, methods_for_instance, sweep_consistency, CheckReport, Instance,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FALSIFIED: i32 = 2;

#[derive(Parser)]
#[command(
    name = "kf",
    about = "Kostka-Foulkes polynomials via Kostant partitions: compute, export graphs, verify",
    disable_help_flag = false
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Method {
    /// Alternating Weyl-group sum over the t-analogue partition function.
    Alternating,
    /// Fixed points of the sign-reversing involution on the phi graph.
    Involution,
    /// Admissibility scan over partitions of lambda - mu.
    Admissible,
    /// Charge generating function over semistandard tableaux.
    Charge,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum VerifyTarget {
    /// Stembridge axioms with exception classification.
    Axioms,
    /// Braid relations and broken hexagons for the phi operators.
    Braid,
    /// The two conjecture monitors (hexagon-path BD, brokenness propagation).
    Conjectures,
    /// Component structure: sources, weak-order closure, parabolic subgraphs.
    Cayley,
    /// Everything, plus the method-agreement sweep.
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute K_{lambda,mu}(t) by one of the four methods.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Method::Involution)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export the phi graph with the psi pairing.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run a verification battery; counterexamples exit with code 2.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Bound on |lambda| for instance sweeps.
        #[arg(long, default_value_t = 6)]
        max_size: u32,
        /// Bound on partition parts for the axiom battery.
        #[arg(long, default_value_t = 5)]
        max_parts: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Random spot-check: keep this many instances.
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Method-agreement table over all dominant pairs in range.
    Sweep {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_size: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Runs the CLI on `args` (without the binary name); returns the exit code
/// and the full output text.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut argv: Vec<String> = vec!["kf".to_string()];
    argv.extend(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    match cli.command {
        Command::Compute {
            n,
            lambda,
            mu,
            method,
            format,
        } => compute(n, &lambda, &mu, method, format),
        Command::Graph {
            n,
            lambda,
            mu,
            format,
        } => graph(n, &lambda, &mu, format),
        Command::Verify {
            target,
            n,
            max_size,
            max_parts,
            format,
            sample,
            seed,
        } => verify(target, n, max_size, max_parts, format, sample, seed),
        Command::Sweep {
            n,
            max_size,
            format,
        } => sweep(n, max_size, format),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Falsified(_) => EXIT_FALSIFIED,
        _ => EXIT_USAGE,
    }
}

fn parse_instance(
    n: usize,
    lambda: &str,
    mu: &str,
) -> Result<(WeightVector, WeightVector, Vec<i64>, Vec<i64>), Error> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let raw_lambda: Vec<i64> = lambda
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::ParseWeight(lambda.to_string()))?;
    let raw_mu: Vec<i64> = mu
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::ParseWeight(mu.to_string()))?;
    if raw_lambda.len() != n || raw_mu.len() != n {
        return Err(Error::LengthMismatch(format!(
            "lambda has {} entries and mu has {}, expected n={n}",
            raw_lambda.len(),
            raw_mu.len()
        )));
    }
    let lam = WeightVector::new(raw_lambda.clone());
    let m = WeightVector::new(raw_mu.clone());
    if !lam.is_dominant() {
        return Err(Error::NonDominant(lam.to_string()));
    }
    Ok((lam, m, raw_lambda, raw_mu))
}

/// Shape/content view for the charge oracle: lambda's canonical coordinates
/// are the shape; mu is shifted so that its size matches |lambda|.
fn shape_content(
    lam: &WeightVector,
    mu: &WeightVector,
    n: usize,
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let shape: Vec<usize> = lam
        .coords()
        .iter()
        .map(|&c| usize::try_from(c).map_err(|_| Error::NonPartitionContent(lam.to_string())))
        .collect::<Result<_, _>>()?;
    let total: i64 = lam.coords().iter().sum();
    let mu_sum: i64 = mu.coords().iter().sum();
    let diff = total - mu_sum;
    if diff.rem_euclid(n as i64) != 0 {
        return Err(Error::SizeMismatch(total, mu_sum));
    }
    let shift = diff / n as i64;
    let content: Vec<usize> = mu
        .coords()
        .iter()
        .map(|&c| {
            usize::try_from(c + shift).map_err(|_| Error::NonPartitionContent(mu.to_string()))
        })
        .collect::<Result<_, _>>()?;
    Ok((shape, content))
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    lambda: &'a [i64],
    mu: &'a [i64],
    n: usize,
    method: &'a str,
    coeffs: &'a [i64],
}

fn compute(n: usize, lambda: &str, mu: &str, method: Method, format: Format) -> (i32, String) {
    let (lam, m, raw_lambda, raw_mu) = match parse_instance(n, lambda, mu) {
        Ok(x) => x,
        Err(e) => return (exit_code_for(&e), format!("error: {e}\n")),
    };
    let poly: Result<LaurentFreePoly, Error> = match method {
        Method::Alternating => kf_alternating(&lam, &m, n),
        Method::Involution => kf_positive(&lam, &m, n),
        Method::Admissible => kf_admissible(&lam, &m, n),
        Method::Charge => {
            shape_content(&lam, &m, n).and_then(|(shape, content)| kf_charge(&shape, &content))
        }
    };
    match poly {
        Ok(poly) => {
            let out = match format {
                Format::Json => {
                    let method_name = match method {
                        Method::Alternating => "alternating",
                        Method::Involution => "involution",
                        Method::Admissible => "admissible",
                        Method::Charge => "charge",
                    };
                    let payload = ComputeOutput {
                        lambda: &raw_lambda,
                        mu: &raw_mu,
                        n,
                        method: method_name,
                        coeffs: poly.coeffs(),
                    };
                    format!(
                        "{}\n",
                        serde_json::to_string(&payload).expect("serialization cannot fail")
                    )
                }
                _ => format!("{poly}\n"),
            };
            (EXIT_OK, out)
        }
        Err(e) => (exit_code_for(&e), format!("error: {e}\n")),
    }
}

fn graph(n: usize, lambda: &str, mu: &str, format: Format) -> (i32, String) {
    let (lam, m, _, _) = match parse_instance(n, lambda, mu) {
        Ok(x) => x,
        Err(e) => return (exit_code_for(&e), format!("error: {e}\n")),
    };
    let g = match build_graph(&lam, &m, n) {
        Ok(g) => g,
        Err(e) => return (exit_code_for(&e), format!("error: {e}\n")),
    };
    let rendered = match format {
        Format::Json => to_json(&g),
        _ => to_dot(&g),
    };
    match rendered {
        Ok(text) => (EXIT_OK, format!("{text}\n")),
        Err(e) => (exit_code_for(&e), format!("error: {e}\n")),
    }
}

fn sample_instances(instances: Vec<Instance>, sample: Option<usize>, seed: u64) -> Vec<Instance> {
    match sample {
        Some(k) if k < instances.len() => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut indices: Vec<usize> = (0..instances.len()).collect();
            indices.shuffle(&mut rng);
            let mut keep: Vec<usize> = indices.into_iter().take(k).collect();
            keep.sort_unstable();
            keep.into_iter().map(|i| instances[i].clone()).collect()
        }
        _ => instances,
    }
}

fn verify(
    target: VerifyTarget,
    n: usize,
    max_size: u32,
    max_parts: u32,
    format: Format,
    sample: Option<usize>,
    seed: u64,
) -> (i32, String) {
    if n < 2 {
        let e = Error::InvalidRank(n);
        return (EXIT_USAGE, format!("error: {e}\n"));
    }
    let mut reports: Vec<CheckReport> = Vec::new();
    let instances = || sample_instances(dominant_pairs(n, max_size), sample, seed);
    if matches!(target, VerifyTarget::Axioms | VerifyTarget::All) {
        reports.push(check_stembridge(n, max_parts));
    }
    if matches!(target, VerifyTarget::Braid | VerifyTarget::All) {
        for inst in instances() {
            reports.push(check_braid(&inst.lambda, &inst.mu, n));
        }
    }
    if matches!(target, VerifyTarget::Conjectures | VerifyTarget::All) {
        for inst in instances() {
            reports.push(check_conj_hexagon_bd(&inst.lambda, &inst.mu, n));
            reports.push(check_conj_propagation(&inst.lambda, &inst.mu, n));
        }
    }
    if matches!(target, VerifyTarget::Cayley | VerifyTarget::All) {
        for inst in instances() {
            match build_graph(&inst.lambda, &inst.mu, n) {
                Ok(g) => reports.push(check_cayley(&g)),
                Err(e) => return (exit_code_for(&e), format!("error: {e}\n")),
            }
        }
    }
    if matches!(target, VerifyTarget::All) {
        reports.push(sweep_consistency(n, max_size));
    }
    render_reports(&reports, format)
}

fn render_reports(reports: &[CheckReport], format: Format) -> (i32, String) {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in reports {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
        }
        _ => {
            for r in reports {
                out.push_str(&r.summary_line());
                out.push('\n');
            }
            let ce: u64 = reports.iter().map(|r| r.counterexamples).sum();
            out.push_str(&format!(
                "{} checks, {} counterexamples\n",
                reports.len(),
                ce
            ));
        }
    }
    let failed = reports.iter().any(|r| r.is_counterexample());
    (if failed { EXIT_FALSIFIED } else { EXIT_OK }, out)
}

#[derive(Serialize)]
struct SweepRow<'a> {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    poly: String,
    coeffs: &'a [i64],
    agree: bool,
}

fn tuple_string(coords: &[i64]) -> String {
    let body: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", body.join(","))
}

fn sweep(n: usize, max_size: u32, format: Format) -> (i32, String) {
    if n < 2 {
        let e = Error::InvalidRank(n);
        return (EXIT_USAGE, format!("error: {e}\n"));
    }
    let mut out = String::new();
    let mut all_agree = true;
    for inst in dominant_pairs(n, max_size) {
        match methods_for_instance(&inst, n) {
            Ok((poly, agree)) => {
                all_agree &= agree;
                match format {
                    Format::Json => {
                        let row = SweepRow {
                            lambda: inst.lambda_padded(n),
                            mu: inst.mu_padded(n),
                            poly: poly.to_string(),
                            coeffs: poly.coeffs(),
                            agree,
                        };
                        out.push_str(
                            &serde_json::to_string(&row).expect("serialization cannot fail"),
                        );
                        out.push('\n');
                    }
                    _ => {
                        out.push_str(&format!(
                            "{:<18} {:<18} {:<28} {}\n",
                            tuple_string(&inst.lambda_padded(n)),
                            tuple_string(&inst.mu_padded(n)),
                            poly.to_string(),
                            if agree { "agree" } else { "MISMATCH" }
                        ));
                    }
                }
            }
            Err(e) => {
                all_agree = false;
                out.push_str(&format!("{} error: {e}\n", inst.label()));
            }
        }
    }
    if format != Format::Json {
        out.push_str(if all_agree {
            "all methods agree\n"
        } else {
            "METHOD DISAGREEMENT DETECTED\n"
        });
    }
    (if all_agree { EXIT_OK } else { EXIT_FALSIFIED }, out)
}
