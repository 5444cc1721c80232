use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use altpoly::census::{self, CensusConfig, Status};
use altpoly::family::{self, REGISTRY};
use altpoly::{classify, CprGraph, EngineConfig, Sggi, VerificationReport, Verifier};
use clap::{Parser, Subcommand, ValueEnum};

const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "altpoly", version, about = "Build and certify string C-groups from permutation representation graphs")]
struct Cli {
    /// Intersections of groups this small are done by listing elements.
    #[arg(long, global = true, env = "ALTPOLY_ENUM_THRESHOLD", default_value_t = EngineConfig::default().enum_threshold)]
    enum_threshold: u64,
    /// Coset nodes an intersection may visit before the verdict becomes undecided.
    #[arg(long, global = true, env = "ALTPOLY_BACKTRACK_BUDGET", default_value_t = EngineConfig::default().backtrack_budget)]
    backtrack_budget: u64,
    /// Smallest rank accepted for Sh (3 also yields string C-groups).
    #[arg(long, global = true, env = "ALTPOLY_SH_MIN_RANK", default_value_t = 4)]
    sh_min_rank: usize,
    #[arg(long, global = true, env = "ALTPOLY_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph of a family member, e.g. `build S 7 2` or `build seed 4 1 --t 3`.
    Build {
        /// Family name, or `seed`.
        family: String,
        /// Rank, or the seed rank.
        a: usize,
        /// k, or the seed family number.
        b: Option<usize>,
        /// Tail length for seeds; without it the listed base is written.
        #[arg(long)]
        t: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify the string C-group property; exit 0 certified, 1 refuted, 2 undecided.
    Verify {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the recognized group type.
    Classify { graph: PathBuf },
    /// Print the graph in DOT.
    ExportDot { graph: PathBuf },
    /// Cover every (n, r) with 12 <= n <= n-max by a certified construction or a citation.
    Census {
        #[arg(long, env = "ALTPOLY_N_MAX", default_value_t = 20)]
        n_max: usize,
        #[arg(long, env = "ALTPOLY_N_MIN", default_value_t = 12)]
        n_min: usize,
        #[arg(long, env = "ALTPOLY_N_CAP", default_value_t = census::DEFAULT_N_CAP)]
        n_cap: usize,
        /// Cells verified in parallel; 0 uses every core.
        #[arg(long, env = "ALTPOLY_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Directory that receives the graph of every verified cell.
        #[arg(long)]
        graphs: Option<PathBuf>,
    },
    /// Family registry.
    Registry {
        #[command(subcommand)]
        action: RegistryAction,
    },
}

#[derive(Subcommand)]
enum RegistryAction {
    Dump,
}

struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(INPUT_ERROR, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let engine = EngineConfig {
        enum_threshold: cli.enum_threshold,
        backtrack_budget: cli.backtrack_budget,
    };
    match cli.command {
        Command::Build { family, a, b, t, output } => {
            let options = family::BuildOptions { sh_min_rank: cli.sh_min_rank };
            let s = build(&family, a, b, t, &options)?;
            emit(output.as_deref(), &s.to_graph()?.to_json())?;
            Ok(0)
        }
        Command::Verify { graph, output } => {
            let s = load(&graph)?;
            let report = Verifier::new(engine).verify(&s);
            let text = match cli.format {
                Format::Text => report_text(&report),
                Format::Structured => report.to_json(),
            };
            emit(output.as_deref(), &text)?;
            Ok(report.verdict.exit_code() as u8)
        }
        Command::Classify { graph } => {
            let t = classify(&load(&graph)?.group());
            match cli.format {
                Format::Text => println!("{t}"),
                Format::Structured => println!("{}", serde_json::json!({ "classification": t })),
            }
            Ok(0)
        }
        Command::ExportDot { graph } => {
            let s = load(&graph)?;
            print!("{}", s.to_graph()?.to_dot());
            Ok(0)
        }
        Command::Census { n_max, n_min, n_cap, jobs, output, graphs } => {
            let config = CensusConfig {
                n_min,
                n_max,
                n_cap,
                jobs,
                engine,
            };
            let result = census::run(&config)?;
            if let Some(dir) = graphs {
                fs::create_dir_all(&dir)?;
                for c in result.cells.iter().filter(|c| c.status == Status::Verified) {
                    if let Some(g) = &c.graph {
                        fs::write(dir.join(format!("n{}_r{}.json", c.n, c.r)), g.to_json())?;
                    }
                }
            }
            let text = match cli.format {
                Format::Text => result.to_text(),
                Format::Structured => result.to_json(),
            };
            emit(output.as_deref(), &text)?;
            let gaps: Vec<String> = result.gaps().map(|c| format!("({}, {})", c.n, c.r)).collect();
            if gaps.is_empty() {
                Ok(0)
            } else {
                Err(Failure(1, format!("uncovered cells {}", gaps.join(" "))))
            }
        }
        Command::Registry { action: RegistryAction::Dump } => {
            match cli.format {
                Format::Structured => print!("{}", family::dump()),
                Format::Text => print!("{}", registry_text()),
            }
            Ok(0)
        }
    }
}

fn build(
    name: &str,
    a: usize,
    b: Option<usize>,
    t: Option<usize>,
    options: &family::BuildOptions,
) -> Result<Sggi, Failure> {
    if name.eq_ignore_ascii_case("seed") {
        let fam = b.ok_or_else(|| Failure(INPUT_ERROR, "seed needs a rank and a family number".into()))?;
        return Ok(match t {
            Some(t) => family::seed_extended(a, fam, t)?,
            None => family::seed_base(a, fam)?,
        });
    }
    Ok(family::build_with(name, a, b.unwrap_or(0), options)?)
}

fn load(path: &Path) -> Result<Sggi, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(INPUT_ERROR, format!("{}: {e}", path.display())))?;
    Ok(Sggi::from_graph(&CprGraph::from_json(&text)?)?)
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report_text(r: &VerificationReport) -> String {
    let schlafli: Vec<String> = r.schlafli.iter().map(ToString::to_string).collect();
    let mut lines = vec![
        format!("verdict: {}", format!("{:?}", r.verdict).to_lowercase()),
        format!("rank: {}", r.rank),
        format!("degree: {}", r.degree),
        format!("order: {}", r.order),
        format!("schlafli: {{{}}}", schlafli.join(",")),
        format!("classification: {}", r.classification),
    ];
    let sc = &r.string_condition;
    if !sc.not_involutions.is_empty() {
        lines.push(format!("not involutions: {:?}", sc.not_involutions));
    }
    if !sc.trivial.is_empty() {
        lines.push(format!("trivial generators: {:?}", sc.trivial));
    }
    for v in &sc.violations {
        lines.push(format!("rho_{} rho_{} has order {}", v.i, v.j, v.order));
    }
    if let Some(i) = &r.intersection {
        let got = i.intersection_order.as_deref().unwrap_or("?");
        lines.push(format!("intersection: {got} (section {})", i.section_order));
    }
    for (name, sub) in [("facet", &r.facet), ("vertex figure", &r.vertex_figure)] {
        if let Some(sub) = sub {
            lines.push(format!("{name}: {}", format!("{:?}", sub.verdict).to_lowercase()));
        }
    }
    lines.join("\n") + "\n"
}

fn registry_text() -> String {
    let mut out = String::new();
    for f in REGISTRY {
        out.push_str(&format!(
            "{:<3} r >= {:<2} {:<12} degree {:<8} {:<34} {}\n",
            f.name,
            f.min_rank,
            f.k_rule.describe(),
            f.degree_formula,
            f.group_formula,
            f.route
        ));
    }
    for s in family::SEEDS {
        out.push_str(&format!(
            "seed rank {} family {}: m = {}, Gamma^({}+4j) = Alt({}+4j)\n",
            s.rank,
            s.family,
            s.m(),
            s.t0,
            s.n0
        ));
    }
    out
}
