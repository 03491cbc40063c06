use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use shuffle_core::bijection::ShuffleBijection;
use shuffle_core::{
    canonical_labeling, decompose, enumerate_shuffles, mis, shuffle_statistics, Error, Letter, PartitionPair,
    Permutation, QPoly, SpaceKind,
};
use shuffle_cli::render;
use shuffle_cli::sweep::{run_suite, SUITE_CAP};
use shuffle_cli::verify::{verify_garsia_gessel, verify_insertion_lemma, verify_macmahon, verify_stanley, MACMAHON_CAP};
use shuffle_cli::{all_passed, VerificationReport};

/// Descents, major indices and shuffles of permutations.
#[derive(Debug, Parser)]
#[command(name = "shuffle", version)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print step-by-step tables where available.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Descent set, descent number and major index.
    Stats {
        #[arg(long)]
        perm: String,
    },
    /// List the shuffles of two disjoint permutations, or their generating functions.
    Shuffles {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        pi: String,
        /// Keep only shuffles with this many descents.
        #[arg(long)]
        k: Option<usize>,
        /// Print the major-index generating function instead of the shuffles.
        #[arg(long)]
        gf: bool,
    },
    /// Map a shuffle to its pair of partitions.
    Phi {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        alpha: String,
    },
    /// Rebuild a shuffle from a pair of partitions. Short parts lists are padded with zeros.
    Psi {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
    },
    /// Space kinds and canonical labels for inserting a letter.
    Labeling {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        letter: Letter,
    },
    /// Major-index increments for inserting a letter at each space.
    Mis {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        letter: Letter,
    },
    /// Check an identity and report pass or fail.
    Verify {
        #[arg(value_enum)]
        what: Check,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        pi: Option<String>,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long)]
        letter: Option<Letter>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper limit for `--n` or `--max-len`.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    Stanley,
    GarsiaGessel,
    Macmahon,
    Insertion,
    Suite,
}

/// How a command ended, mapped onto the process exit status.
enum Failure {
    Verification,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            eprintln!("error: {e}");
            Failure::Verification
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn perm(text: &str) -> Result<Permutation, Failure> {
    Ok(text.parse::<Permutation>()?)
}

fn parts(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| tok.parse().map_err(|e| Failure::Input(format!("cannot parse part {tok:?}: {e}"))))
        .collect()
}

fn required<'a, T>(value: &'a Option<T>, flag: &str, check: &str) -> Result<&'a T, Failure> {
    value.as_ref().ok_or_else(|| Failure::Input(format!("verify {check} needs --{flag}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Stats { perm: p } => {
            let p = perm(p)?;
            let profile = p.descent_profile();
            if cli.json {
                print_json(&json!({
                    "perm": p.letters(),
                    "descent_set": profile.descent_set,
                    "des": profile.des,
                    "maj": profile.maj,
                }));
            } else {
                let set: Vec<String> = profile.descent_set.iter().map(ToString::to_string).collect();
                println!("perm: {p}\ndescent set: {{{}}}\ndes: {}\nmaj: {}", set.join(", "), profile.des, profile.maj);
            }
            Ok(())
        }
        Command::Shuffles { sigma, pi, k, gf } => shuffles(cli, &perm(sigma)?, &perm(pi)?, *k, *gf),
        Command::Phi { sigma, pi, alpha } => {
            let decomp = decompose(&perm(sigma)?, &perm(pi)?, &perm(alpha)?)?;
            let pair = decomp.pair();
            if cli.json {
                print_json(&pair_json(&pair));
            } else {
                if cli.trace {
                    print!("{}", render::phi_table(&decomp));
                    println!();
                }
                println!("lambda: {:?}\nmu: {:?}\nk: {}", pair.lambda, pair.mu, pair.k);
            }
            Ok(())
        }
        Command::Psi { sigma, pi, k, lambda, mu } => {
            let (sigma, pi) = (perm(sigma)?, perm(pi)?);
            let mut bijection = ShuffleBijection::new(&sigma, &pi)?;
            let (_, n, r, _) = bijection.parameters();
            let mut lambda = parts(lambda)?;
            let mut mu = parts(mu)?;
            if let Some(len) = k.checked_sub(r) {
                if lambda.len() < len {
                    lambda.resize(len, 0);
                }
                if let Some(len) = (n + r).checked_sub(*k) {
                    if mu.len() < len {
                        mu.resize(len, 0);
                    }
                }
            }
            let pair = PartitionPair::new(lambda, mu, *k);
            let (alpha, trace) = bijection.psi_traced(*k, &pair)?;
            if cli.json {
                print_json(&json!({ "alpha": alpha.letters(), "positions": trace.positions() }));
            } else {
                if cli.trace {
                    print!("{}", render::psi_table(&pi, &trace, &alpha));
                    println!();
                }
                println!("alpha: {alpha}");
            }
            Ok(())
        }
        Command::Labeling { perm: p, letter } => {
            let p = perm(p)?;
            let labeling = canonical_labeling(&p, *letter)?;
            if cli.json {
                let kinds: Vec<String> = labeling.kinds.iter().map(ToString::to_string).collect();
                print_json(&json!({
                    "perm": p.letters(),
                    "letter": letter,
                    "kinds": kinds,
                    "labels": labeling.labels,
                    "rl_count": labeling.rl_count,
                }));
            } else {
                println!("{}", render::labeling_line(&p, &labeling));
                let list = |kind| {
                    labeling.spaces_of_kind(kind).iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                };
                println!("RL spaces: {}", list(SpaceKind::RightToLeft));
                println!("LR spaces: {}", list(SpaceKind::LeftToRight));
            }
            Ok(())
        }
        Command::Mis { perm: p, letter } => {
            let p = perm(p)?;
            let sequence = mis(&p, *letter)?;
            if cli.json {
                print_json(&json!({ "perm": p.letters(), "letter": letter, "increments": sequence.increments }));
            } else {
                if cli.trace {
                    print!("{}", render::mis_table(&p, *letter, &sequence));
                    println!();
                }
                let items: Vec<String> = sequence.increments.iter().map(ToString::to_string).collect();
                println!("MIS: ({})", items.join(","));
            }
            Ok(())
        }
        Command::Verify { what, sigma, pi, perm: p, letter, n, max_len, seed, cap } => {
            let name = format!("{what:?}").to_lowercase();
            let reports: Vec<VerificationReport> = match what {
                Check::Stanley => {
                    verify_stanley(&perm(required(sigma, "sigma", &name)?)?, &perm(required(pi, "pi", &name)?)?)?
                }
                Check::GarsiaGessel => vec![verify_garsia_gessel(
                    &perm(required(sigma, "sigma", &name)?)?,
                    &perm(required(pi, "pi", &name)?)?,
                )?],
                Check::Macmahon => vec![verify_macmahon(*required(n, "n", &name)?, cap.unwrap_or(MACMAHON_CAP))?],
                Check::Insertion => {
                    vec![verify_insertion_lemma(&perm(required(p, "perm", &name)?)?, *required(letter, "letter", &name)?)?]
                }
                Check::Suite => run_suite(*max_len, *seed, cap.unwrap_or(SUITE_CAP))?,
            };
            if cli.json {
                print_json(&reports);
            } else {
                for report in &reports {
                    println!("{report}");
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                println!("{passed}/{} reports passed", reports.len());
            }
            if all_passed(&reports) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

#[derive(Serialize)]
struct PairJson<'a> {
    lambda: &'a [usize],
    mu: &'a [usize],
    k: usize,
}

fn pair_json(pair: &PartitionPair) -> PairJson<'_> {
    PairJson { lambda: &pair.lambda, mu: &pair.mu, k: pair.k }
}

fn shuffles(cli: &Cli, sigma: &Permutation, pi: &Permutation, k: Option<usize>, gf: bool) -> Outcome {
    if gf {
        let stats = shuffle_statistics(sigma, pi)?;
        let selected: Vec<(usize, _)> = match k {
            Some(k) => vec![(k, stats.get(k).cloned().unwrap_or_else(QPoly::zero))],
            None => stats.into_iter().enumerate().collect(),
        };
        if cli.json {
            let rows: Vec<_> = selected
                .iter()
                .map(|(k, poly)| {
                    let coefficients: Vec<String> = poly.coefficients().iter().map(ToString::to_string).collect();
                    json!({ "k": k, "coefficients": coefficients })
                })
                .collect();
            print_json(&rows);
        } else {
            for (k, poly) in &selected {
                println!("k = {k}: {poly}");
            }
        }
        return Ok(());
    }
    let listed: Vec<Permutation> =
        enumerate_shuffles(sigma, pi)?.filter(|alpha| k.map_or(true, |k| alpha.des() == k)).collect();
    if cli.json {
        let rows: Vec<_> = listed
            .iter()
            .map(|alpha| json!({ "alpha": alpha.letters(), "des": alpha.des(), "maj": alpha.maj() }))
            .collect();
        print_json(&rows);
    } else {
        for alpha in &listed {
            println!("{alpha}  des={} maj={}", alpha.des(), alpha.maj());
        }
    }
    Ok(())
}
