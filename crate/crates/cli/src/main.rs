use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use altcoh::alt_chain::alt_chain_complex;
use altcoh::cochain::{alt_cup, cup, is_alternative, nonlinear_residual, RationalCochain};
use altcoh::complex::enumerate_generators;
use altcoh::corpus::default_corpus;
use altcoh::homology::{
    alternative_coboundaries, betti_rational, cohomology_rational, full_coboundaries,
    homology_free, homology_presented, ordered_boundaries, simplicial_boundaries,
};
use altcoh::linalg::AbelianGroup;
use altcoh::verify::{run_verification, VerifyConfig};
use altcoh::{Error, Limits, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "altcoh",
    version,
    about = "Alternative cochains, chains and their (co)homology on finite simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coeff {
    #[value(name = "Z")]
    Z,
    #[value(name = "Q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Ordered,
    Alternative,
    Simplicial,
}

#[derive(Clone, Copy, ValueEnum)]
enum CochainVariant {
    Full,
    Alternative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Homology groups in degrees 0..=max-dim
    Homology {
        complex: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, value_enum, default_value = "Z")]
        coeff: Coeff,
        #[arg(long, value_enum, default_value = "alternative")]
        variant: Variant,
    },
    /// Rational cohomology ranks in degrees 0..=max-dim
    Cohomology {
        complex: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, value_enum, default_value = "alternative")]
        variant: CochainVariant,
    },
    /// Run every registered property suite
    Verify {
        /// Complex files; the bundled corpus when omitted
        complexes: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 4)]
        degree_cap: usize,
        #[arg(long, default_value_t = 3)]
        homology_cap: usize,
        /// Format printed on stdout
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Cup product of two cochains
    Cup {
        complex: PathBuf,
        alpha: PathBuf,
        beta: PathBuf,
        /// Apply the alternative-maker to the product
        #[arg(long)]
        alternative: bool,
        #[arg(long, default_value_t = 4)]
        degree_cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The residual α ⌣_A δα with a zero/nonzero verdict
    Residual {
        complex: PathBuf,
        alpha: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree_cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the presentation of the alternative chain complex
    ExportPresentation {
        complex: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit statuses beyond success.
const VERIFY_FAILED: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let budget = err
                .chain()
                .any(|e| e.downcast_ref::<Error>().is_some_and(Error::is_budget));
            ExitCode::from(if budget { BUDGET } else { USAGE })
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_complex(path: &Path) -> anyhow::Result<SimplicialComplex> {
    let k = SimplicialComplex::load_complex(&read(path)?)
        .with_context(|| format!("parsing complex {}", path.display()))?;
    Ok(match k.name() {
        Some(_) => k,
        None => {
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            k.with_name(stem.unwrap_or_else(|| "complex".into()))
        }
    })
}

fn load_cochain(path: &Path, complex: &SimplicialComplex) -> anyhow::Result<RationalCochain> {
    RationalCochain::from_json(&read(path)?, complex)
        .with_context(|| format!("parsing cochain {}", path.display()))
}

fn limits(cap: usize) -> anyhow::Result<Limits> {
    Ok(Limits::from_env()?.with_degree_cap(cap))
}

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn rational_group(rank: usize) -> String {
    match rank {
        0 => "0".into(),
        1 => "Q".into(),
        r => format!("Q^{r}"),
    }
}

fn table(prefix: &str, entries: &[String]) -> String {
    entries
        .iter()
        .enumerate()
        .map(|(n, g)| format!("{prefix}{n}={g}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn homology(
    complex: &SimplicialComplex,
    max_dim: usize,
    coeff: Coeff,
    variant: Variant,
) -> anyhow::Result<String> {
    let limits = limits(max_dim + 1)?;
    let groups: Vec<String> = match (variant, coeff) {
        (Variant::Ordered, Coeff::Z) => {
            to_strings(&homology_free(&ordered_boundaries(complex, &limits)?.1)?)
        }
        (Variant::Ordered, Coeff::Q) => betti_rational(&ordered_boundaries(complex, &limits)?.1)?
            .into_iter()
            .map(rational_group)
            .collect(),
        (Variant::Simplicial, Coeff::Z) => to_strings(&homology_free(&simplicial_boundaries(
            complex,
            max_dim + 1,
        ))?),
        (Variant::Simplicial, Coeff::Q) => {
            betti_rational(&simplicial_boundaries(complex, max_dim + 1))?
                .into_iter()
                .map(rational_group)
                .collect()
        }
        (Variant::Alternative, coeff) => {
            let groups = homology_presented(&alt_chain_complex(complex, &limits)?)?;
            match coeff {
                Coeff::Z => to_strings(&groups),
                Coeff::Q => groups.iter().map(|g| rational_group(g.free_rank)).collect(),
            }
        }
    };
    Ok(table("H_", &groups[..=max_dim]))
}

fn to_strings(groups: &[AbelianGroup]) -> Vec<String> {
    groups.iter().map(ToString::to_string).collect()
}

fn cohomology(
    complex: &SimplicialComplex,
    max_dim: usize,
    variant: CochainVariant,
) -> anyhow::Result<String> {
    let limits = limits(max_dim + 1)?;
    let coboundaries = match variant {
        CochainVariant::Full => {
            let index = enumerate_generators(complex, max_dim + 1, limits.generator_budget)?;
            full_coboundaries(complex, &index, &limits)?
        }
        CochainVariant::Alternative => alternative_coboundaries(complex, max_dim + 1, &limits)?,
    };
    let ranks = cohomology_rational(&coboundaries)?;
    let groups: Vec<String> = ranks
        .into_iter()
        .take(max_dim + 1)
        .map(rational_group)
        .collect();
    Ok(table("H^", &groups))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Homology {
            complex,
            max_dim,
            coeff,
            variant,
        } => {
            let k = load_complex(&complex)?;
            println!("{}", homology(&k, max_dim, coeff, variant)?);
        }
        Command::Cohomology {
            complex,
            max_dim,
            variant,
        } => {
            let k = load_complex(&complex)?;
            println!("{}", cohomology(&k, max_dim, variant)?);
        }
        Command::Verify {
            complexes,
            seed,
            cases,
            degree_cap,
            homology_cap,
            format,
            report,
        } => {
            let ks = if complexes.is_empty() {
                default_corpus()
            } else {
                complexes
                    .iter()
                    .map(|p| load_complex(p))
                    .collect::<anyhow::Result<_>>()?
            };
            let config = VerifyConfig {
                seed,
                cases,
                limits: limits(degree_cap)?,
                homology_degree_cap: homology_cap,
                ..VerifyConfig::default()
            };
            let r = run_verification(&ks, &config)?;
            let json = r.to_json();
            if let Some(path) = &report {
                emit(&json, Some(path))?;
            }
            match format {
                Format::Text => print!("{}", r.to_text()),
                Format::Json => println!("{json}"),
            }
            if let Some(e) = r.first_failure() {
                let witness = e
                    .counterexample
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default();
                eprintln!("{} failed: {witness}", e.id);
                return Ok(ExitCode::from(VERIFY_FAILED));
            }
        }
        Command::Cup {
            complex,
            alpha,
            beta,
            alternative,
            degree_cap,
            output,
        } => {
            let k = load_complex(&complex)?;
            let a = load_cochain(&alpha, &k)?;
            let b = load_cochain(&beta, &k)?;
            let limits = limits(degree_cap)?;
            let product = if alternative {
                alt_cup(&k, &a, &b, &limits)?
            } else {
                cup(&k, &a, &b, &limits)?
            };
            emit(&product.to_json(), output.as_deref())?;
        }
        Command::Residual {
            complex,
            alpha,
            degree_cap,
            output,
        } => {
            let k = load_complex(&complex)?;
            let a = load_cochain(&alpha, &k)?;
            let limits = limits(degree_cap)?;
            if !is_alternative(&a, &limits)? {
                eprintln!("warning: {} is not alternative", alpha.display());
            }
            let r = nonlinear_residual(&k, &a, &limits)?;
            if let Some(path) = &output {
                emit(&r.to_json(), Some(path))?;
            }
            let first = r.iter().next().map(|(g, v)| (g.clone(), v.clone()));
            match first {
                None => println!("residual: zero (degree {})", r.degree()),
                Some((g, v)) => println!(
                    "residual: nonzero (degree {}, support {}, max |numerator| {}, witness {:?} = {})",
                    r.degree(),
                    r.support_len(),
                    r.max_abs_numerator(),
                    g.vertices(),
                    altcoh::cochain::format_rational(&v)
                ),
            }
        }
        Command::ExportPresentation {
            complex,
            max_dim,
            output,
        } => {
            let k = load_complex(&complex)?;
            let p = alt_chain_complex(&k, &limits(max_dim + 1)?)?;
            emit(&p.to_json(), output.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
