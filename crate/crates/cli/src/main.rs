use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kmsph::cartan::SimpleRootSubset;
use kmsph::characters::Character;
use kmsph::datum::{FiniteTypeOptions, Registry, ValidationOptions};
use kmsph::localize::{localize_at_simple_roots, localize_at_spherical_roots};
use kmsph::rational::{format_vec, parse_rational};
use kmsph::shell::{self, emit_diagram, DatumFile, DiagramFormat, Loaded};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "kmsph", version, about = "Check and transform homogeneous spherical data over Kac-Moody root systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FiniteTypeFlags {
    /// Do not allow roots of type 2a in S2
    #[arg(long)]
    exclude_doubled_s2: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check Luna's axioms and the finite-type condition
    Validate {
        path: PathBuf,
        /// Treat unconfirmed compatibility as a failure
        #[arg(long)]
        strict_compat: bool,
        /// Only check the value-1 clause of A1
        #[arg(long)]
        lenient_a1: bool,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        /// Extra compatibility registry file
        #[arg(long)]
        registry: Option<PathBuf>,
        #[command(flatten)]
        ft: FiniteTypeFlags,
    },
    /// Ask whether a subset of simple roots is of finite type
    Classify {
        path: PathBuf,
        /// Comma-separated labels or indices; defaults to all simple roots
        #[arg(long)]
        subset: Option<String>,
    },
    /// Search for a finite-type witness
    FiniteType {
        path: PathBuf,
        #[command(flatten)]
        ft: FiniteTypeFlags,
    },
    /// Localize at simple roots or at a set of spherical roots
    Localize {
        path: PathBuf,
        #[arg(long, conflicts_with = "spherical_roots", required_unless_present = "spherical_roots")]
        simple_roots: Option<String>,
        /// Comma-separated indices into Sigma
        #[arg(long)]
        spherical_roots: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the derived colors
    Colors { path: PathBuf },
    /// Render the decorated Dynkin diagram
    Diagram {
        path: PathBuf,
        #[arg(long, default_value = "ascii")]
        format: DiagramFormat,
    },
    /// Apply a word of simple reflections, last letter first
    Reflect {
        path: PathBuf,
        #[arg(long)]
        word: String,
        /// Ambient coordinates, comma-separated
        #[arg(long)]
        target: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, message: message.to_string() }
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    shell::load(path).map_err(input_error)
}

fn finite_type_options(flags: &FiniteTypeFlags) -> Result<FiniteTypeOptions, Failure> {
    Ok(FiniteTypeOptions {
        include_doubled_in_s2: !flags.exclude_doubled_s2,
        max_subsets: shell::max_subsets_from_env().map_err(input_error)?,
    })
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Failure> {
    split_list(s)
        .map(|t| t.parse::<usize>().map_err(|_| input_error(format!("{t:?} is not an index"))))
        .collect()
}

fn parse_subset(loaded: &Loaded, s: &str) -> Result<SimpleRootSubset, Failure> {
    loaded.gcm().parse_subset(s).map_err(input_error)
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Validate { path, strict_compat, lenient_a1, json, registry, ft } => {
            let loaded = load(&path)?;
            let mut reg = loaded.registry.clone();
            if let Some(p) = registry {
                let extra: Registry = shell::load_registry(&p, loaded.gcm()).map_err(input_error)?;
                reg = reg.merged(&extra);
            }
            let options = ValidationOptions { strict_compat, lenient_a1, finite_type: finite_type_options(&ft)? };
            let report = loaded.datum.validate(&loaded.name, &reg, &options).map_err(input_error)?;
            if json {
                print!("{}", report.to_json_string());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.pass() { 0 } else { EXIT_FAIL })
        }
        Command::Classify { path, subset } => {
            let loaded = load(&path)?;
            let g = loaded.gcm();
            let s = match subset {
                Some(s) => parse_subset(&loaded, &s)?,
                None => g.full_set(),
            };
            let finite = g.is_finite_type(&s);
            for c in g.connected_components(&s) {
                let kind = if g.is_finite_type(&c) { "finite" } else { "not finite" };
                println!("component {{{}}}: {kind}", g.subset_labels(&c).join(","));
            }
            println!("finite type: {}", if finite { "yes" } else { "no" });
            Ok(if finite { 0 } else { EXIT_FAIL })
        }
        Command::FiniteType { path, ft } => {
            let loaded = load(&path)?;
            let d = &loaded.datum;
            match d.check_finite_type(&finite_type_options(&ft)?).map_err(input_error)? {
                Some(w) => {
                    let a1: Vec<&str> = w.a1.iter().map(|&k| d.a()[k].name.as_str()).collect();
                    println!("finite-type: FOUND");
                    println!("A1: {{{}}}", a1.join(","));
                    println!("S1: {{{}}}", d.space().gcm().subset_labels(&w.s1).join(","));
                    println!("S2: {{{}}}", d.space().gcm().subset_labels(&w.s2).join(","));
                    println!("coefficients: {}", format_vec(&w.coefficients));
                    println!("eta: {}", format_vec(w.eta.values()));
                    println!("eta on Sigma: {}", format_vec(&w.eta_on_sigma));
                    Ok(0)
                }
                None => {
                    println!("finite-type: ABSENT");
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Localize { path, simple_roots, spherical_roots, out } => {
            let loaded = load(&path)?;
            let result = match (simple_roots, spherical_roots) {
                (Some(s), _) => localize_at_simple_roots(&loaded.datum, &parse_subset(&loaded, &s)?),
                (None, Some(s)) => localize_at_spherical_roots(&loaded.datum, &parse_indices(&s)?),
                (None, None) => unreachable!("clap requires one of the targets"),
            }
            .map_err(input_error)?;
            let name = format!("{}_localized", loaded.name);
            let file = DatumFile::from_datum(&name, &result.datum, &Registry::empty(), Some(result.color_map));
            match out {
                Some(p) => shell::save(&p, &file).map_err(|e| input_error(format!("cannot write {}: {e}", p.display())))?,
                None => print!("{}", file.to_json_string()),
            }
            eprintln!("rank drop: {}", result.rank_drop);
            Ok(0)
        }
        Command::Colors { path } => {
            let loaded = load(&path)?;
            let d = &loaded.datum;
            let colors = d.derive_colors().map_err(|e| Failure { code: EXIT_FAIL, message: e.to_string() })?;
            for c in colors {
                let movers: Vec<&str> = c.movers.iter().map(|i| d.label(i)).collect();
                println!("{} [{}] moved by {{{}}} rho = {}", c.id, c.kind, movers.join(","), c.functional);
            }
            Ok(0)
        }
        Command::Diagram { path, format } => {
            let loaded = load(&path)?;
            print!("{}", emit_diagram(&loaded.datum, format).text);
            Ok(0)
        }
        Command::Reflect { path, word, target } => {
            let loaded = load(&path)?;
            let space = loaded.datum.space();
            let g = space.gcm();
            let letters: Vec<usize> = split_list(&word)
                .map(|t| {
                    g.index_of(t)
                        .or_else(|| t.parse::<usize>().ok().filter(|&i| i < g.rank()))
                        .ok_or_else(|| input_error(format!("unknown simple root {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            let coords = split_list(&target)
                .map(|t| parse_rational(t).map_err(input_error))
                .collect::<Result<Vec<_>, _>>()?;
            let x = Character::new(coords);
            let y = space.apply_word(&letters, &x).map_err(input_error)?;
            println!("{}", y);
            if let Ok(c) = space.root_coordinates(&y) {
                println!("in simple roots: {}", format_vec(&c));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
