//! Command-line front end: `run`, `table`, `list-functions` and `optimize`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::benchmarks::{manifest, Benchmark, BoundsMode, Category, FunctionId};
use crate::error::{Error, Result};
use crate::harness::{
    read_records, render_table, run_algorithm, run_experiment, summarize, summarize_inferred,
    write_records, write_summary, Algorithm, ExperimentConfig, OutputFormat, PaperReference,
    ParamOverrides, RunRecord, TableFormat,
};

#[derive(Debug, Parser)]
#[command(
    name = "gsabc",
    version,
    about = "Gravitational search / bee colony optimizers and benchmark harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every (algorithm, function, run) cell and summarize.
    Run(RunArgs),
    /// Render a comparison table from a records file.
    Table(TableArgs),
    /// List the benchmark functions.
    ListFunctions(ListArgs),
    /// Optimize one benchmark once and print the result.
    Optimize(OptimizeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Gsa,
    Abc,
    Gsabc,
    All,
}

impl AlgoChoice {
    fn expand(self) -> Vec<Algorithm> {
        match self {
            AlgoChoice::Gsa => vec![Algorithm::Gsa],
            AlgoChoice::Abc => vec![Algorithm::Abc],
            AlgoChoice::Gsabc => vec![Algorithm::Gsabc],
            AlgoChoice::All => Algorithm::ALL.to_vec(),
        }
    }
}

/// `f3`, `all`, `unimodal`, `multimodal`, `fixed`, or a comma list of those.
#[derive(Debug, Clone, PartialEq)]
struct FunctionSelection(Vec<FunctionId>);

impl FromStr for FunctionSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut ids = Vec::new();
        for part in s.split(',').map(str::trim) {
            match part {
                "all" => ids.extend(FunctionId::all()),
                "unimodal" => ids.extend(Category::Unimodal.ids()),
                "multimodal" => ids.extend(Category::Multimodal.ids()),
                "fixed" => ids.extend(Category::FixedMultimodal.ids()),
                id => ids.push(id.parse()?),
            }
        }
        ids.sort();
        ids.dedup();
        Ok(Self(ids))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Csv,
    Json,
}

impl From<FormatChoice> for OutputFormat {
    fn from(f: FormatChoice) -> Self {
        match f {
            FormatChoice::Csv => OutputFormat::Csv,
            FormatChoice::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableChoice {
    Md,
    Csv,
}

#[derive(Debug, Args)]
struct Overrides {
    /// Initial gravitational constant.
    #[arg(long)]
    g0: Option<f64>,
    /// Gravity decay exponent.
    #[arg(long)]
    alpha: Option<f64>,
    /// Scout trigger (failed trials before a source is abandoned).
    #[arg(long)]
    limit: Option<usize>,
    /// Population size (colony size for ABC).
    #[arg(long)]
    pop: Option<usize>,
    /// Enable or disable scout bees.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    scouts: Option<bool>,
    /// Use the literally printed ranges for f14 and f19.
    #[arg(long)]
    literal_bounds: bool,
}

impl Overrides {
    fn params(&self) -> ParamOverrides {
        ParamOverrides {
            population: self.pop,
            g0: self.g0,
            alpha: self.alpha,
            limit: self.limit,
            scouts: self.scouts,
        }
    }

    fn bounds(&self) -> BoundsMode {
        if self.literal_bounds {
            BoundsMode::Literal
        } else {
            BoundsMode::Canonical
        }
    }
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "all")]
    algo: AlgoChoice,
    #[arg(long, default_value = "all")]
    function: FunctionSelection,
    #[arg(long, default_value_t = 25)]
    runs: usize,
    #[arg(long, default_value_t = 50_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Records file; the summary goes next to it as `<stem>.summary.<ext>`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format (defaults to the extension of --out, else csv).
    #[arg(long, value_enum)]
    format: Option<FormatChoice>,
    /// JSON experiment config; its keys override the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Records file (csv or json, by extension).
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "md")]
    format: TableChoice,
}

#[derive(Debug, Args)]
struct ListArgs {
    /// Emit the JSON manifest instead of the text listing.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    literal_bounds: bool,
}

#[derive(Debug, Args)]
struct OptimizeArgs {
    #[arg(long, value_enum, default_value = "gsabc")]
    algo: AlgoChoice,
    #[arg(long)]
    function: FunctionId,
    #[arg(long, default_value_t = 50_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the full result, including the trace, as JSON.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    overrides: Overrides,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 on success, 1 on runtime failure,
/// 2 on bad flags.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(a, out, err),
        Command::Table(a) => cmd_table(a, out),
        Command::ListFunctions(a) => cmd_list_functions(a, out),
        Command::Optimize(a) => cmd_optimize(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn merge_json(base: &mut serde_json::Value, overlay: serde_json::Value) {
    match (base, overlay) {
        (serde_json::Value::Object(b), serde_json::Value::Object(o)) => {
            for (k, v) in o {
                merge_json(b.entry(k).or_insert(serde_json::Value::Null), v);
            }
        }
        (b, o) => *b = o,
    }
}

fn experiment_config(args: &RunArgs) -> Result<ExperimentConfig> {
    let config = ExperimentConfig {
        algorithms: args.algo.expand(),
        function_ids: args.function.0.clone(),
        runs: args.runs,
        max_evaluations: args.budget,
        base_seed: args.seed,
        overrides: args.overrides.params(),
        bounds: args.overrides.bounds(),
    };
    let Some(path) = &args.config else {
        return Ok(config);
    };
    let overlay: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let mut merged = serde_json::to_value(&config)?;
    merge_json(&mut merged, overlay);
    Ok(serde_json::from_value(merged)?)
}

fn summary_path(out: &Path, format: OutputFormat) -> PathBuf {
    let stem = out
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("records");
    out.with_file_name(format!("{stem}.summary.{}", format.extension()))
}

fn cmd_run(args: RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let config = experiment_config(&args)?;
    let output = run_experiment(&config)?;
    for f in &output.failures {
        writeln!(
            err,
            "cell {}/{}/run {} failed: {}",
            f.algorithm, f.function, f.run, f.message
        )?;
    }
    let complete: Vec<RunRecord> = output
        .records
        .iter()
        .filter(|r| {
            !output
                .failures
                .iter()
                .any(|f| f.algorithm == r.algorithm && f.function == r.function)
        })
        .cloned()
        .collect();
    let refs = PaperReference::embedded();
    let summary = summarize(&complete, &refs, config.runs)?;

    if let Some(path) = &args.out {
        let format = args
            .format
            .map(OutputFormat::from)
            .unwrap_or_else(|| OutputFormat::from_path(path));
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        write_records(path, format, &output.records)?;
        write_summary(&summary_path(path, format), format, &summary)?;
    }
    write!(out, "{}", render_table(&summary, &refs, TableFormat::Md))?;
    Ok(if output.failures.is_empty() { 0 } else { 1 })
}

fn cmd_table(args: TableArgs, out: &mut dyn Write) -> Result<i32> {
    let records = read_records(&args.input, OutputFormat::from_path(&args.input))
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", args.input.display())))?;
    let refs = PaperReference::embedded();
    let summary = summarize_inferred(&records, &refs)?;
    let format = match args.format {
        TableChoice::Md => TableFormat::Md,
        TableChoice::Csv => TableFormat::Csv,
    };
    write!(out, "{}", render_table(&summary, &refs, format))?;
    Ok(0)
}

fn cmd_list_functions(args: ListArgs, out: &mut dyn Write) -> Result<i32> {
    let mode = if args.literal_bounds {
        BoundsMode::Literal
    } else {
        BoundsMode::Canonical
    };
    let specs: Vec<_> = if args.literal_bounds {
        FunctionId::all()
            .map(|id| Benchmark::with_bounds(id, mode).spec())
            .collect()
    } else {
        manifest()
    };
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &specs)?;
        writeln!(out)?;
        return Ok(0);
    }
    for s in &specs {
        let range = format!("[{}, {}]", s.lower, s.upper);
        writeln!(
            out,
            "{:<4} {:<22} {:>3}  {:<18} {:>9}  {}",
            s.id.to_string(),
            s.name,
            s.dimension,
            range,
            s.f_min,
            s.category
        )?;
    }
    Ok(0)
}

fn cmd_optimize(args: OptimizeArgs, out: &mut dyn Write) -> Result<i32> {
    let algorithms = args.algo.expand();
    let function = Benchmark::with_bounds(args.function, args.overrides.bounds());
    let params = args.overrides.params();
    for algorithm in algorithms {
        let result = run_algorithm(algorithm, &function, &params, args.budget, args.seed)?;
        if args.json {
            serde_json::to_writer_pretty(&mut *out, &result)?;
            writeln!(out)?;
        } else {
            writeln!(out, "algorithm: {algorithm}")?;
            writeln!(out, "function: {}", args.function)?;
            writeln!(out, "best_objective: {:e}", result.best_objective)?;
            writeln!(out, "evaluations: {}", result.evaluations_used)?;
            let position: Vec<String> = result
                .best_position
                .iter()
                .map(|v| format!("{v:e}"))
                .collect();
            writeln!(out, "best_position: [{}]", position.join(", "))?;
        }
    }
    Ok(0)
}
