use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use okamoto_algebra::{parse, Exec, RuleSet};
use okamoto_assoc::{export as assoc_export, FlipGraph};
use okamoto_cli::export::{self, chart_text, matrix_text, Kind};
use okamoto_cli::{read_file, run_suite, CliError, Options, Suite, SuiteReport};
use okamoto_cluster::json::SeedJson;
use okamoto_cluster::reference::{reference_x_seed, seed_ring};
use okamoto_cluster::Word;
use okamoto_convolution::json::{CompletionJson, TupleJson};
use okamoto_convolution::{middle_convolution_add, middle_convolution_mult, McOptions};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "okamoto", version, about = "Exact checks of the w2 symmetry: charts, mutations, convolutions and flips")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 1 on the first failing check.
    Verify(VerifyArgs),
    /// Apply a mutation word to a seed and print the resulting chart.
    Mutate(MutateArgs),
    /// Middle convolution of a matrix tuple.
    Convolve(ConvolveArgs),
    /// Flip graph of colored hexagon triangulations.
    Assoc(AssocArgs),
    /// Stokes matrices from the monodromy chart.
    Stokes(StokesArgs),
    /// Write a deterministic artifact to stdout or a file.
    Export(ExportArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// List passing checks too.
    #[arg(long, short)]
    verbose: bool,
    /// Leave out wall times, for byte-stable output.
    #[arg(long)]
    no_time: bool,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
    /// Perturb the w2 completion corner; the suite must then fail.
    #[arg(long, hide = true)]
    perturb_corner: bool,
}

#[derive(Args)]
struct MutateArgs {
    /// Seed JSON file; defaults to the reference X-seed.
    #[arg(long)]
    seed: Option<String>,
    /// Comma-separated steps, leftmost applied first: vertex labels or
    /// color letters for mutations, sigma_<color> for swaps. Internally
    /// this is reversed into composition order.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    /// Print the seed as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConvolveArgs {
    /// Tuple JSON file.
    #[arg(long)]
    tuple: String,
    /// Convolution parameter, an expression in the tuple's variables.
    #[arg(long, allow_hyphen_values = true)]
    param: String,
    /// Completion JSON file; by default a greedy completion is used.
    #[arg(long)]
    completion: Option<String>,
    /// Additive convolution of residue matrices.
    #[arg(long)]
    additive: bool,
    /// Quotient by K only.
    #[arg(long)]
    k_only: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct AssocArgs {
    #[arg(long, value_enum, required_unless_present = "stats")]
    emit: Option<GraphFormat>,
    /// Print the census.
    #[arg(long, conflicts_with = "emit")]
    stats: bool,
    /// Census as JSON.
    #[arg(long, requires = "stats")]
    json: bool,
}

#[derive(Args)]
struct StokesArgs {
    /// Print S1, S2 and M0; without it, run the Stokes checks.
    #[arg(long)]
    emit: bool,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str) -> Result<ExitCode, CliError> {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = out.write_all(text.as_bytes());
    Ok(ExitCode::SUCCESS)
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Verify(a) => verify(a),
        Command::Mutate(a) => mutate(a),
        Command::Convolve(a) => convolve(a),
        Command::Assoc(a) => {
            let g = FlipGraph::enumerate();
            if a.stats {
                if a.json {
                    return emit(&assoc_export::census_json(&g));
                }
                let c = g.census();
                let text = serde_json::to_value(&c)?
                    .as_object()
                    .map(|m| m.iter().map(|(k, v)| format!("{k}: {v}\n")).collect::<String>())
                    .unwrap_or_default();
                return emit(&text);
            }
            match a.emit {
                Some(GraphFormat::Dot) => emit(&assoc_export::to_dot(&g)),
                Some(GraphFormat::Json) => emit(&assoc_export::to_json(&g)),
                None => Err(CliError::Input("nothing to do".into())),
            }
        }
        Command::Stokes(a) => {
            if a.emit {
                return emit(&export::stokes_text()?);
            }
            let checks = okamoto_cli::suites::painleve_checks(Options::default()).stokes;
            let report = SuiteReport::new("stokes", &checks, Default::default()).untimed();
            finish(&[report], false, true)
        }
        Command::Export(a) => {
            let text = export::render(a.kind)?;
            match a.out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
                    Ok(ExitCode::SUCCESS)
                }
                None => emit(&text),
            }
        }
    }
}

fn verify(a: VerifyArgs) -> Result<ExitCode, CliError> {
    let opts = Options {
        exec: if a.sequential { Exec::Sequential } else { Exec::Parallel },
        perturb_corner: a.perturb_corner,
    };
    let mut reports = run_suite(a.suite, opts);
    if a.no_time {
        reports = reports.into_iter().map(SuiteReport::untimed).collect();
    }
    finish(&reports, a.json, a.verbose)
}

fn finish(reports: &[SuiteReport], as_json: bool, verbose: bool) -> Result<ExitCode, CliError> {
    if as_json {
        emit(&json(&reports)?)?;
    } else {
        emit(&reports.iter().map(|r| r.to_text(verbose)).collect::<String>())?;
    }
    match reports.iter().find_map(|r| r.first_failure().map(|c| (r, c))) {
        None => Ok(ExitCode::SUCCESS),
        Some((r, c)) => {
            eprintln!("{}: {} failed: {}", r.suite, c.id, c.witness.as_deref().unwrap_or("no witness"));
            Ok(ExitCode::from(1))
        }
    }
}

fn mutate(a: MutateArgs) -> Result<ExitCode, CliError> {
    let (seed, ring) = match &a.seed {
        Some(path) => serde_json::from_str::<SeedJson>(&read_file(path)?)?.to_seed()?,
        None => {
            let ring = seed_ring("Z");
            (reference_x_seed(&ring), ring)
        }
    };
    let w = Word::parse_list(&a.word, &seed.quiver)?;
    let out = w.apply(&seed);
    if a.json {
        emit(&json(&SeedJson::from_seed(&out, &ring))?)
    } else {
        emit(&chart_text(&out, &ring))
    }
}

#[derive(Serialize)]
struct ConvolveJson {
    dim_k: usize,
    dim_l: usize,
    quotient_dim: usize,
    direct: bool,
    output: TupleJson,
}

fn convolve(a: ConvolveArgs) -> Result<ExitCode, CliError> {
    let tj: TupleJson = serde_json::from_str(&read_file(&a.tuple)?)?;
    let (t, ring) = tj.to_tuple()?;
    let param = parse(&a.param, &ring).map_err(|e| CliError::Input(format!("--param: {e}")))?;
    let mut opts = McOptions { k_only: a.k_only, ..McOptions::default() };
    if let Some(path) = &a.completion {
        let cj: CompletionJson = serde_json::from_str(&read_file(path)?)?;
        opts.completion = Some(cj.to_matrix(&ring)?);
    }
    let rules = RuleSet::empty();
    let r = if a.additive {
        middle_convolution_add(&t, &param, &opts, &rules)?
    } else {
        middle_convolution_mult(&t, &param, &opts, &rules)?
    };
    if a.json {
        return emit(&json(&ConvolveJson {
            dim_k: r.subspaces.dim_k(),
            dim_l: r.subspaces.dim_l(),
            quotient_dim: r.quotient_dim,
            direct: r.direct,
            output: TupleJson::from_tuple(&r.output, &ring),
        })?);
    }
    let mut s = format!(
        "dim K = {}, dim L = {}, quotient {} ({}), output size {}\n",
        r.subspaces.dim_k(),
        r.subspaces.dim_l(),
        r.quotient_dim,
        if r.direct { "direct" } else { "not direct" },
        r.output.size()
    );
    for (k, m) in r.output.matrices().iter().enumerate() {
        s.push_str(&matrix_text(&format!("{}{}", if a.additive { "B" } else { "N" }, k + 1), m, &ring));
    }
    emit(&s)
}
