//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a replayed fixture or a route comparison
//! disagrees with its expectation, 2 on input, budget and genericity errors.

pub mod manifest;
mod render;
pub mod scheme;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use crate::algebra::field::{FieldSpec, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::gin::{gin, is_lex_segment};
use crate::groebner::Budget;
use crate::hilbert::hilbert_function;
use crate::report::{GinSummary, OutputFormat, Report, RunConfig, WitnessSummary};
use crate::seed;
use crate::unexpected::{
    av_sequence, certify_no_unexpected, ci_vdim_closed_form, detect, persistence_table, sylvester_witness, Route,
};

pub use manifest::{fixtures_manifest, CheckSettings, Expectation, ManifestEntry};
pub use scheme::{load_scheme, LoadedScheme, SchemeSource};

#[derive(Debug, Parser)]
#[command(name = "avkit", version, about = "Unexpected hypersurfaces, AV sequences and generic initial ideals")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Coefficient field: `fp` (default prime), `fp:<p>` or `rationals`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// General points sampled per query.
    #[arg(long, global = true, default_value_t = crate::unexpected::DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub output: OutputFormat,
    #[arg(long, global = true, env = "AVKIT_PAIR_CAP")]
    pub pair_cap: Option<usize>,
    #[arg(long, global = true, env = "AVKIT_BIT_CAP")]
    pub bit_cap: Option<u64>,
    #[arg(long, global = true, env = "AVKIT_TIME_CAP_MS")]
    pub time_cap_ms: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct SchemeArgs {
    /// Named configuration, see `fixtures manifest`.
    #[arg(long, conflicts_with_all = ["points", "ideal"])]
    pub fixture: Option<String>,
    /// Rank for the root-system fixtures.
    #[arg(long)]
    pub n: Option<usize>,
    /// File with one point per line.
    #[arg(long, conflicts_with = "ideal")]
    pub points: Option<std::path::PathBuf>,
    /// File with a `ring: n=<nvars> [field=...]` header and one generator per line.
    #[arg(long)]
    pub ideal: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of R/I.
    Hilbert {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = 10)]
        tmax: usize,
    },
    /// Generic initial ideal (lex) through a degree cap.
    Gin {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// AV_{X,j}(m) for m = 1..mmax.
    Av {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, default_value_t = 8)]
        mmax: usize,
        /// direct, gin_colon or both
        #[arg(long, default_value = "both")]
        route: String,
    },
    /// adim, vdim, edim and the verdict at (t, m).
    Detect {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
    },
    /// Persistence table min(adim, AV) over 1 <= m <= t.
    Table {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = 8)]
        tmax: usize,
        #[arg(long, default_value_t = 8)]
        mmax: usize,
    },
    /// Certificate that no unexpected hypersurface exists, from AV_{X,0}(alpha).
    Certify {
        #[command(flatten)]
        scheme: SchemeArgs,
    },
    /// Hypersurface with a point of multiplicity (a-j)(b-j) on a general CI(a, b).
    CiWitness {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        /// Dimension of the ambient projective space.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// The fixture catalog.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    /// Replays stored expectations: `all` or one fixture name.
    Run {
        #[arg(default_value = "all")]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        /// Include the expensive tier.
        #[arg(long)]
        deep: bool,
    },
    /// Prints the catalog with recipes and expectations as JSON.
    Manifest,
    /// Lists fixture names.
    List,
}

/// What a command produced: the report and the exit code it implies.
pub struct Finished {
    pub report: Report,
    pub exit_code: i32,
}

impl GlobalOpts {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            pair_cap: self.pair_cap.unwrap_or(d.pair_cap),
            bit_cap: self.bit_cap.unwrap_or(d.bit_cap),
            time_cap_ms: self.time_cap_ms.or(d.time_cap_ms),
        }
    }
}

fn field_override(global: &GlobalOpts) -> Result<Option<FieldSpec>> {
    let Some(text) = &global.field else { return Ok(None) };
    let spec: FieldSpec = text.parse()?;
    spec.validate(FieldSpec::DEFAULT_PRIME_FLOOR)?;
    Ok(Some(spec))
}

fn config(global: &GlobalOpts, field_mode: FieldSpec) -> RunConfig {
    RunConfig {
        field_mode,
        seed: global.seed,
        trials: global.trials,
        budgets: global.budget(),
        output: global.output,
    }
}

fn scheme_source(s: &SchemeArgs) -> Result<SchemeSource> {
    match (&s.fixture, &s.points, &s.ideal) {
        (Some(f), None, None) => Ok(SchemeSource::Fixture(f.clone(), s.n)),
        (None, Some(p), None) => Ok(SchemeSource::Points(p.clone())),
        (None, None, Some(i)) => Ok(SchemeSource::Ideal(i.clone())),
        _ => Err(Error::invalid("give exactly one of --fixture, --points or --ideal")),
    }
}

macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $f = &Rationals;
                $body
            }
            FieldSpec::PrimeField { p } => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn run_scheme_command(global: &GlobalOpts, command: &Command, scheme_args: &SchemeArgs) -> Result<Finished> {
    let source = scheme_source(scheme_args)?;
    let explicit = field_override(global)?;
    let field_mode = match (&explicit, &source) {
        (Some(f), _) => *f,
        (None, SchemeSource::Ideal(path)) => scheme::ideal_file_field(path)?,
        _ => FieldSpec::default(),
    };
    let cfg = config(global, field_mode);
    with_field!(field_mode, |field| {
        let loaded = load_scheme(field, &source, &cfg)?;
        let ideal = &loaded.ideal;
        let mut report = Report::new(command_name(command), &cfg);
        report.scheme = Some(loaded.info.clone());
        report.notices = loaded.notices.clone();
        let (seed, trials) = (cfg.seed, cfg.trials);
        let mut exit_code = 0;
        match command {
            Command::Hilbert { tmax, .. } => {
                report.hilbert = Some(hilbert_function(ideal, *tmax)?);
            }
            Command::Gin { cap, .. } => {
                let g = gin(ideal, trials.max(2), seed::derive(seed, "gin", 0), *cap)?;
                report.seeds = g.seeds_used.clone();
                report.gin = Some(GinSummary {
                    degree_cap: g.degree_cap,
                    generators: g.ideal().generator_strings(),
                    borel_certified: g.borel_certified,
                    probabilistic: g.probabilistic,
                    lex_segment_through_cap: (1..=*cap).all(|t| is_lex_segment(g.ideal(), t)),
                });
            }
            Command::Av { j, mmax, route, .. } => {
                let route: Route = route.parse()?;
                let r = match av_sequence(ideal, *j, *mmax, route, trials, seed) {
                    Err(e @ Error::RouteMismatch { .. }) => {
                        report.notices.push(e.to_string());
                        return Ok(Finished { report, exit_code: 1 });
                    }
                    other => other?,
                };
                report.seeds = r.seeds.clone();
                report.av = Some((&r).into());
            }
            Command::Detect { t, m, .. } => {
                let v = detect(ideal, *t, *m, trials, seed)?;
                report.seeds = v.seeds.clone();
                report.triples.push((&v).into());
            }
            Command::Table { tmax, mmax, .. } => {
                let tab = match persistence_table(ideal, *tmax, *mmax, trials, seed) {
                    Err(e @ Error::RouteMismatch { .. }) => {
                        report.notices.push(e.to_string());
                        return Ok(Finished { report, exit_code: 1 });
                    }
                    other => other?,
                };
                report.seeds = tab.seeds.clone();
                report.table = Some(tab);
            }
            Command::Certify { .. } => {
                let c = match certify_no_unexpected(ideal, trials, seed) {
                    Err(e @ Error::RouteMismatch { .. }) => {
                        report.notices.push(e.to_string());
                        exit_code = 1;
                        None
                    }
                    other => Some(other?),
                };
                if let Some(c) = c {
                    report.seeds = match &c {
                        crate::unexpected::Certification::Certificate { seeds, .. }
                        | crate::unexpected::Certification::Refusal { seeds, .. } => seeds.clone(),
                    };
                    report.certificates.push(c);
                }
            }
            _ => unreachable!("not a scheme command"),
        }
        Ok(Finished { report, exit_code })
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hilbert { .. } => "hilbert",
        Command::Gin { .. } => "gin",
        Command::Av { .. } => "av",
        Command::Detect { .. } => "detect",
        Command::Table { .. } => "table",
        Command::Certify { .. } => "certify",
        Command::CiWitness { .. } => "ci-witness",
        Command::Fixtures { .. } => "fixtures",
    }
}

fn run_ci_witness(global: &GlobalOpts, a: usize, b: usize, j: usize, n: usize) -> Result<Finished> {
    let field_mode = field_override(global)?.unwrap_or_default();
    let cfg = config(global, field_mode);
    with_field!(field_mode, |field| {
        let w = sylvester_witness(field, a, b, j, n + 1, cfg.seed)?;
        let mut report = Report::new("ci-witness", &cfg);
        report.seeds = vec![w.seed];
        report.witness = Some(WitnessSummary {
            a,
            b,
            j,
            nvars: n + 1,
            t: w.t,
            m: w.m,
            f: w.f.to_string(),
            g: w.g.to_string(),
            matrix_det: w.matrix_det.to_string(),
            witness_form: w.witness_form.to_string(),
            vdim: ci_vdim_closed_form(a, b, n, w.t, w.m),
        });
        Ok(Finished { report, exit_code: 0 })
    })
}

fn run_fixtures(global: &GlobalOpts, name: &str, n: Option<usize>, deep: bool) -> Result<Finished> {
    let field_mode = field_override(global)?.unwrap_or_default();
    let cfg = config(global, field_mode);
    let fixtures = manifest::select_fixtures(name, n, deep)?;
    let settings = CheckSettings {
        construction_seed: cfg.seed,
        seed: seed::derive(cfg.seed, "fixtures", 0),
        trials: cfg.trials,
        budget: cfg.budgets,
    };
    with_field!(field_mode, |field| {
        let outcomes = manifest::run_fixtures(field, &fixtures, &settings);
        let mut report = Report::new("fixtures run", &cfg);
        let failed = outcomes.iter().any(|o| !o.passed);
        // evaluation errors caused by budgets or bad luck map to exit code 2
        let errored = outcomes.iter().any(|o| o.error.is_some());
        report.fixtures = outcomes;
        let exit_code = if errored {
            2
        } else if failed {
            1
        } else {
            0
        };
        Ok(Finished { report, exit_code })
    })
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Finished> {
    let g = &cli.global;
    match &cli.command {
        Command::Hilbert { scheme, .. }
        | Command::Gin { scheme, .. }
        | Command::Av { scheme, .. }
        | Command::Detect { scheme, .. }
        | Command::Table { scheme, .. }
        | Command::Certify { scheme } => run_scheme_command(g, &cli.command, scheme),
        Command::CiWitness { a, b, j, n } => run_ci_witness(g, *a, *b, *j, *n),
        Command::Fixtures { action } => match action {
            FixturesAction::Run { name, n, deep } => run_fixtures(g, name, *n, *deep),
            FixturesAction::Manifest | FixturesAction::List => {
                unreachable!("handled without a report")
            }
        },
    }
}

// a closed pipe (`avkit ... | head`) is not an error
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

/// Entry point used by the binary: parses `argv`, prints the output and returns the exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Command::Fixtures { action } = &cli.command {
        match action {
            FixturesAction::Manifest => {
                let m = fixtures_manifest(cli.global.seed);
                emit(&format!("{}\n", serde_json::to_string_pretty(&m).expect("manifest serializes")));
                return 0;
            }
            FixturesAction::List => {
                let mut out = String::new();
                for e in fixtures_manifest(cli.global.seed) {
                    let tier = if e.deep { " [deep]" } else { "" };
                    out.push_str(&format!("{:<24} {}{}\n", e.fixture, e.description, tier));
                }
                emit(&out);
                return 0;
            }
            FixturesAction::Run { .. } => {}
        }
    }
    match execute(&cli) {
        Ok(done) => {
            match cli.global.output {
                OutputFormat::Json => emit(&format!("{}\n", done.report.to_json())),
                OutputFormat::Table => emit(&render::render(&done.report)),
            }
            done.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::RouteMismatch { .. } => 1,
                _ => 2,
            }
        }
    }
}
