//! Command surface of the `lefcon` tool: argument definitions, command
//! execution against a parsed workspace, and report rendering.

pub mod report;
pub mod workspace;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{parse_rational, Rational};
use crate::control::{removability_precondition, surjectivity_certificate, DiscreteSystem};
use crate::lefschetz::{
    coincidence_oracle, lefschetz_number_refined, lefschetz_number_self, CoincidenceSetup, OracleOutcome,
};
use crate::products::{degree, OrientedManifold};
use crate::simplicial::{Homology, HomologyClass, SimplicialComplex, SimplicialMap};
use report::{Outcome, Report};
pub use workspace::{parse_workspace, ParseError, Workspace, WorkspaceDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "lefcon",
    version,
    about = "Exact Lefschetz coincidence and control certificates on simplicial complexes"
)]
pub struct Cli {
    /// Workspace file (`.lef`).
    #[arg(long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Both)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Betti numbers of a pair or complex.
    Betti { target: String },
    /// Euler characteristic of a pair or complex.
    Euler { target: String },
    /// Orients a pair as a manifold with boundary and checks duality.
    Orient { target: String },
    /// Degree of a map between oriented manifolds of equal dimension.
    Degree { map: String },
    /// Lefschetz number of a self-map, of a map given on a subdivision, or of a pair of maps.
    LefschetzNumber {
        map: String,
        /// Second map `g`; reports the coincidence number of `(map, g)`.
        #[arg(long = "with", conflicts_with = "refinement")]
        with: Option<String>,
        /// Subdivision map `s`; `map` is read as a self-map through `s`.
        #[arg(long)]
        refinement: Option<String>,
        #[arg(long)]
        oracle: bool,
    },
    /// Lefschetz class of the graded endomorphism `h^z` of a pair of maps.
    LefschetzClass {
        f: String,
        g: String,
        /// Class `z` as `DEGREE:c1,c2,...` in the basis of the source homology
        /// (default: the source fundamental class).
        #[arg(long)]
        class: Option<String>,
    },
    /// Coincidence certificate: sweeps the Lefschetz homomorphism over a basis.
    Coincidence {
        f: String,
        g: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Equilibrium certificate of a system.
    Equilibrium {
        system: String,
        #[arg(long)]
        oracle: bool,
    },
    /// The two sphere conditions for a system on a homology sphere.
    SphereCheck { system: String },
    /// Surjectivity certificate of a map into an oriented manifold.
    Surjectivity {
        map: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Controllability chain search from a subcomplex of the state space.
    Controllability {
        system: String,
        /// Start complex, matched into the state complex by vertex label.
        #[arg(long)]
        from: String,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Removability preconditions for a coincidence set of declared homology.
    Removability {
        /// Betti numbers of the coincidence set, comma separated.
        #[arg(long = "F-homology", alias = "f-homology", value_delimiter = ',', required = true)]
        f_homology: Vec<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Local map between surrogate pairs whose degree-`n` map must vanish.
        #[arg(long)]
        local: Option<String>,
    },
    /// Vertex-level reachability under the system map.
    Reachability {
        system: String,
        #[arg(long)]
        steps: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read workspace {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("{path}: {error}")]
    Workspace { path: String, error: ParseError },
    #[error("no {kind} named `{name}` in the workspace")]
    UnknownName { kind: &'static str, name: String },
    #[error("{0}")]
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn engine(e: impl std::fmt::Display) -> CliError {
    CliError::Engine(e.to_string())
}

fn unknown(kind: &'static str, name: &str) -> CliError {
    CliError::UnknownName {
        kind,
        name: name.to_string(),
    }
}

/// Everything a process invocation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (including the program name), loads the workspace and
/// runs the command.
pub fn run_args<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Invocation {
                exit_code,
                stdout,
                stderr,
            };
        }
    };
    match load(&cli).and_then(|ws| execute(&ws, &cli.command)) {
        Ok(report) => Invocation {
            exit_code: report.outcome.exit_code(),
            stdout: render(&report, cli.format),
            stderr: String::new(),
        },
        Err(e) => Invocation {
            exit_code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(cli: &Cli) -> Result<Workspace, CliError> {
    let path = cli
        .workspace
        .as_ref()
        .ok_or_else(|| CliError::Usage("--workspace <FILE> is required".into()))?;
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        reason: e.to_string(),
    })?;
    parse_workspace(&text).map_err(|error| CliError::Workspace { path: shown, error })
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => report.to_text(),
        Format::Both => format!("{}\n\n{}", report.to_json(), report.to_text()),
    }
}

/// Runs one command against a parsed workspace.
pub fn execute(ws: &Workspace, command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Betti { target } => betti(ws, target),
        Command::Euler { target } => euler(ws, target),
        Command::Orient { target } => orient(ws, target),
        Command::Degree { map } => map_degree(ws, map),
        Command::LefschetzNumber {
            map,
            with,
            refinement,
            oracle,
        } => lefschetz_number(ws, map, with.as_deref(), refinement.as_deref(), *oracle),
        Command::LefschetzClass { f, g, class } => lefschetz_class(ws, f, g, class.as_deref()),
        Command::Coincidence { f, g, oracle } => coincidence(ws, f, g, *oracle),
        Command::Equilibrium { system, oracle } => equilibrium(ws, system, *oracle),
        Command::SphereCheck { system } => sphere_check(ws, system),
        Command::Surjectivity { map, oracle } => surjectivity(ws, map, *oracle),
        Command::Controllability {
            system,
            from,
            max_steps,
        } => controllability(ws, system, from, *max_steps),
        Command::Removability {
            f_homology,
            n,
            m,
            local,
        } => removability(ws, f_homology, *n, *m, local.as_deref()),
        Command::Reachability { system, steps } => reachability(ws, system, *steps),
    }
}

fn pair_homology(ws: &Workspace, name: &str) -> Result<Homology, CliError> {
    let entry = ws.pair(name).ok_or_else(|| unknown("pair or complex", name))?;
    Ok(Homology::compute(&entry.pair))
}

fn manifold(ws: &Workspace, name: &str) -> Result<OrientedManifold, CliError> {
    ws.manifold(name)
        .ok_or_else(|| unknown("pair or complex", name))?
        .map_err(|e| CliError::Engine(format!("`{name}` is not an oriented manifold: {e}")))
}

fn map_entry<'w>(ws: &'w Workspace, name: &str) -> Result<&'w workspace::MapEntry, CliError> {
    ws.map(name).ok_or_else(|| unknown("map", name))
}

fn system<'w>(ws: &'w Workspace, name: &str) -> Result<&'w DiscreteSystem, CliError> {
    ws.system(name).ok_or_else(|| unknown("system", name))
}

fn betti(ws: &Workspace, target: &str) -> Result<Report, CliError> {
    let h = pair_homology(ws, target)?;
    let mut r = Report::new("betti");
    r.input("target", target);
    r.set("betti", h.betti_numbers());
    r.set("euler_characteristic", h.euler_characteristic());
    r.line(format!("betti numbers {:?}", h.betti_numbers()));
    Ok(r)
}

fn euler(ws: &Workspace, target: &str) -> Result<Report, CliError> {
    let entry = ws.pair(target).ok_or_else(|| unknown("pair or complex", target))?;
    let h = Homology::compute(&entry.pair);
    let counts = entry.pair.total().euler_characteristic() - entry.pair.sub().euler_characteristic();
    if counts != h.euler_characteristic() {
        return Err(CliError::Engine(
            "simplex count and homology disagree on the Euler characteristic".into(),
        ));
    }
    let mut r = Report::new("euler");
    r.input("target", target);
    r.set("value", h.euler_characteristic());
    r.line(format!("Euler characteristic {}", h.euler_characteristic()));
    Ok(r)
}

fn orient(ws: &Workspace, target: &str) -> Result<Report, CliError> {
    let entry = ws.pair(target).ok_or_else(|| unknown("pair or complex", target))?;
    let mut r = Report::new("orient");
    r.input("target", target);
    match OrientedManifold::orient(&entry.pair, entry.seed.as_ref()) {
        Ok(m) => {
            let total = m.pair().total();
            r.set("orientable", true);
            r.set("dimension", m.dim());
            r.set("seed", report::simplex(total, m.fundamental().seed()));
            r.set("fundamental_cycle", report::chain(total, m.fundamental().cycle()));
            let ranks: Vec<Value> = (0..=m.dim())
                .map(|k| {
                    let d = m.duality_matrix(k).expect("degree in range");
                    json!({ "degree": k, "rows": d.rows(), "cols": d.cols(), "rank": d.rank() })
                })
                .collect();
            r.set("duality", ranks);
            r.set("duality_bijective", m.duality_is_bijective());
            r.outcome = Outcome::from_flag(m.duality_is_bijective());
            r.line(format!(
                "oriented {}-manifold, {} top simplices, duality bijective: {}",
                m.dim(),
                m.fundamental().cycle().terms().count(),
                m.duality_is_bijective()
            ));
        }
        Err(e) => {
            r.set("orientable", false);
            r.set("error", e.to_string());
            r.outcome = Outcome::NotCertified;
            r.line(format!("not an oriented manifold: {e}"));
        }
    }
    Ok(r)
}

fn map_degree(ws: &Workspace, name: &str) -> Result<Report, CliError> {
    let entry = map_entry(ws, name)?;
    let source = manifold(ws, &entry.source)?;
    let target = manifold(ws, &entry.target)?;
    let d = degree(&entry.map, &source, &target).map_err(engine)?;
    let mut r = Report::new("degree");
    r.input("map", name);
    r.set("degree", report::rational(&d));
    r.line(format!("degree {}", crate::algebra::format_rational(&d)));
    Ok(r)
}

fn lefschetz_number(
    ws: &Workspace,
    name: &str,
    with: Option<&str>,
    refinement: Option<&str>,
    run_oracle: bool,
) -> Result<Report, CliError> {
    let entry = map_entry(ws, name)?;
    let f = &entry.map;
    let mut r = Report::new("lefschetz-number");
    r.input("map", name);
    let (value, partner): (Rational, SimplicialMap) = match (with, refinement) {
        (Some(g_name), _) => {
            r.input("with", g_name);
            let g = &map_entry(ws, g_name)?.map;
            let source = manifold(ws, &entry.source)?;
            let target = manifold(ws, &entry.target)?;
            let setup = CoincidenceSetup::new(f.clone(), g.clone(), target).map_err(engine)?;
            (setup.classical_number(&source).map_err(engine)?, g.clone())
        }
        (None, Some(s_name)) => {
            r.input("refinement", s_name);
            let s = &map_entry(ws, s_name)?.map;
            (lefschetz_number_refined(f, s).map_err(engine)?, s.clone())
        }
        (None, None) => (
            lefschetz_number_self(f).map_err(engine)?,
            SimplicialMap::identity(f.source().clone()),
        ),
    };
    r.set("value", report::rational(&value));
    r.line(format!("Lefschetz number {}", crate::algebra::format_rational(&value)));
    let nonzero = !num_traits::Zero::is_zero(&value);
    let oracle = if run_oracle {
        match coincidence_oracle(f, &partner) {
            Some(w) => OracleOutcome::Confirmed(Some(w)),
            None => OracleOutcome::Refuted,
        }
    } else {
        OracleOutcome::Skipped
    };
    r.set(
        "oracle",
        report::oracle(&oracle, f.source().total(), f.target().total()),
    );
    r.line(format!(
        "oracle: {}",
        match &oracle {
            OracleOutcome::Skipped => "skipped",
            OracleOutcome::Refuted => "no coincidence",
            OracleOutcome::Confirmed(_) => "coincidence found",
        }
    ));
    r.outcome = if nonzero && oracle == OracleOutcome::Refuted {
        Outcome::SoundnessViolation
    } else {
        Outcome::from_flag(nonzero)
    };
    Ok(r)
}

/// Parses `DEGREE:c1,c2,...`; an empty coordinate list is allowed.
pub fn parse_class(text: &str) -> Result<HomologyClass, CliError> {
    let bad = || CliError::Usage(format!("class `{text}` is not of the form DEGREE:c1,c2,..."));
    let (deg, coords) = text.split_once(':').ok_or_else(bad)?;
    let degree: usize = deg.trim().parse().map_err(|_| bad())?;
    let coords = if coords.trim().is_empty() {
        Vec::new()
    } else {
        coords
            .split(',')
            .map(|c| parse_rational(c).ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(HomologyClass::new(degree, coords))
}

fn setup(ws: &Workspace, f_name: &str, g_name: &str) -> Result<CoincidenceSetup, CliError> {
    let f = map_entry(ws, f_name)?;
    let g = map_entry(ws, g_name)?;
    let target = manifold(ws, &f.target)?;
    CoincidenceSetup::new(f.map.clone(), g.map.clone(), target).map_err(engine)
}

fn lefschetz_class(ws: &Workspace, f_name: &str, g_name: &str, class: Option<&str>) -> Result<Report, CliError> {
    let setup = setup(ws, f_name, g_name)?;
    let z = match class {
        Some(text) => parse_class(text)?,
        None => manifold(ws, &map_entry(ws, f_name)?.source)?.fundamental_class(),
    };
    let h = setup.endomorphism(&z).map_err(engine)?;
    let value = setup.homomorphism(&z).map_err(engine)?;
    let mut r = Report::new("lefschetz-class");
    r.input("f", f_name)
        .input("g", g_name)
        .input("class", report::class(&z));
    r.set("shift", h.shift());
    r.set("blocks", h.blocks().iter().map(report::matrix).collect::<Vec<_>>());
    r.set("value", value.as_ref().map_or(Value::Null, report::class));
    let nonzero = value.as_ref().is_some_and(|v| !v.is_zero());
    r.outcome = Outcome::from_flag(nonzero);
    r.line(format!("graded endomorphism of degree {}", h.shift()));
    r.line(match &value {
        Some(v) => format!("Lefschetz class {}", report::class_text(v)),
        None => "negative degree: the class vanishes".to_string(),
    });
    Ok(r)
}

fn coincidence(ws: &Workspace, f_name: &str, g_name: &str, run_oracle: bool) -> Result<Report, CliError> {
    let setup = setup(ws, f_name, g_name)?;
    let verdict = setup.certificate(None, run_oracle).map_err(engine)?;
    let mut r = Report::new("coincidence");
    r.input("f", f_name).input("g", g_name).input("oracle", run_oracle);
    let source_name = &map_entry(ws, f_name)?.source;
    if let Ok(source) = manifold(ws, source_name) {
        if source.dim() == setup.target().dim() {
            let number = setup.classical_number(&source).map_err(engine)?;
            r.set("coincidence_number", report::rational(&number));
            r.line(format!(
                "coincidence number {}",
                crate::algebra::format_rational(&number)
            ));
        }
    }
    report::verdict(&mut r, &verdict, setup.f().source().total(), setup.f().target().total());
    Ok(r)
}

fn equilibrium(ws: &Workspace, name: &str, run_oracle: bool) -> Result<Report, CliError> {
    let sys = system(ws, name)?;
    let verdict = sys.equilibrium_certificate(run_oracle).map_err(engine)?;
    let mut r = Report::new("equilibrium");
    r.input("system", name).input("oracle", run_oracle);
    report::verdict(&mut r, &verdict, sys.product().total(), sys.state().pair().total());
    Ok(r)
}

fn sphere_check(ws: &Workspace, name: &str) -> Result<Report, CliError> {
    let sys = system(ws, name)?;
    let v = sys.sphere_criteria().map_err(engine)?;
    let mut r = Report::new("sphere-check");
    r.input("system", name);
    r.set("dimension", v.dimension);
    r.set("slice_degrees", report::rationals(&v.slice_degrees));
    r.set("excluded_degree", report::rational(&v.excluded_degree));
    r.set("condition_one", v.condition_one);
    r.set("top_images", v.top_images.iter().map(report::class).collect::<Vec<_>>());
    r.set("condition_two", v.condition_two);
    r.outcome = Outcome::from_flag(v.certified());
    r.line(format!(
        "slice degrees [{}], excluded {}: condition (1) {}",
        v.slice_degrees
            .iter()
            .map(crate::algebra::format_rational)
            .collect::<Vec<_>>()
            .join(", "),
        crate::algebra::format_rational(&v.excluded_degree),
        v.condition_one
    ));
    r.line(format!("condition (2) {}", v.condition_two));
    Ok(r)
}

fn surjectivity(ws: &Workspace, name: &str, run_oracle: bool) -> Result<Report, CliError> {
    let entry = map_entry(ws, name)?;
    let target = manifold(ws, &entry.target)?;
    let verdict = surjectivity_certificate(&entry.map, &target, run_oracle).map_err(engine)?;
    let mut r = Report::new("surjectivity");
    r.input("map", name).input("oracle", run_oracle);
    report::verdict(&mut r, &verdict, entry.map.source().total(), entry.map.target().total());
    Ok(r)
}

fn controllability(ws: &Workspace, name: &str, from: &str, max_steps: Option<usize>) -> Result<Report, CliError> {
    let sys = system(ws, name)?;
    let start_entry = ws.pair(from).ok_or_else(|| unknown("complex", from))?;
    let start = workspace::embed(start_entry.pair.total(), sys.state().pair().total())
        .map_err(|e| CliError::Engine(format!("start complex `{from}`: {e}")))?;
    let search = sys.controllability_chain_search(&start, max_steps).map_err(engine)?;
    let mut r = Report::new("controllability");
    r.input("system", name)
        .input("from", from)
        .input("max_steps", search.max_steps);
    let input_labels = sys.input();
    r.set(
        "boundary_inputs",
        input_labels
            .all_simplices()
            .filter(|s| search.boundary_inputs.contains(s))
            .map(|s| report::simplex(input_labels, s))
            .collect::<Vec<_>>(),
    );
    r.set("explored", search.explored);
    match &search.chain {
        Some(chain) => {
            let composed = sys.composed_map_check(&start, chain.steps()).map_err(engine)?;
            r.set(
                "chain",
                json!({
                    "start_class": report::class(&chain.start_class),
                    "inputs": chain.inputs.iter().map(report::class).collect::<Vec<_>>(),
                    "classes": chain.classes.iter().map(report::class).collect::<Vec<_>>(),
                    "degrees": chain.degrees(),
                    "steps": chain.steps(),
                }),
            );
            r.set(
                "composed_map",
                json!({
                    "method": match composed.method {
                        crate::control::CompositionMethod::ComposedMap => "composed-map",
                        crate::control::CompositionMethod::ImageIteration => "image-iteration",
                    },
                    "steps": composed.steps,
                    "onto": composed.onto,
                }),
            );
            r.outcome = if composed.onto {
                Outcome::Certified
            } else {
                Outcome::SoundnessViolation
            };
            r.line(format!(
                "chain of {} steps: start {}, inputs {}",
                chain.steps(),
                report::class_text(&chain.start_class),
                chain
                    .inputs
                    .iter()
                    .map(report::class_text)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            r.line(format!("composed map onto: {}", composed.onto));
        }
        None => {
            r.set("chain", Value::Null);
            r.outcome = Outcome::NotCertified;
            r.line(format!("no chain within {} steps", search.max_steps));
        }
    }
    Ok(r)
}

fn removability(ws: &Workspace, dims: &[usize], n: usize, m: usize, local: Option<&str>) -> Result<Report, CliError> {
    let local_map = local.map(|name| map_entry(ws, name).map(|e| &e.map)).transpose()?;
    let rep = removability_precondition(dims, n, m, local_map).map_err(engine)?;
    let mut r = Report::new("removability");
    r.input("F_homology", dims.to_vec()).input("n", n).input("m", m);
    r.input("local", local.map_or(Value::Null, Value::from));
    r.set("clauses", rep.clauses.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    r.set("condition_holds", rep.condition_holds);
    r.set(
        "local_matrix",
        rep.local_matrix.as_ref().map_or(Value::Null, report::matrix),
    );
    r.set("local_zero", rep.local_zero.map_or(Value::Null, Value::from));
    r.set("conclusion", rep.conclusion);
    r.outcome = Outcome::from_flag(rep.conclusion);
    r.line(format!(
        "clauses [{}]; local map zero: {}",
        rep.clauses.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
        rep.local_zero.map_or("not supplied".to_string(), |z| z.to_string())
    ));
    Ok(r)
}

fn reachability(ws: &Workspace, name: &str, steps: usize) -> Result<Report, CliError> {
    let sys = system(ws, name)?;
    let reach = sys.reachability_oracle(steps).map_err(engine)?;
    let labels: &SimplicialComplex = sys.state().pair().total();
    let mut relation = serde_json::Map::new();
    for (i, &x) in reach.vertices.iter().enumerate() {
        let targets: Vec<Value> = reach
            .vertices
            .iter()
            .zip(&reach.matrix[i])
            .filter(|(_, &on)| on)
            .map(|(&y, _)| Value::from(labels.label(y)))
            .collect();
        relation.insert(labels.label(x).to_string(), Value::Array(targets));
    }
    let mut r = Report::new("reachability");
    r.input("system", name).input("steps", steps);
    r.set("relation", Value::Object(relation));
    r.set("complete", reach.is_complete());
    r.line(format!(
        "{} state vertices; all pairs reachable: {}",
        reach.vertices.len(),
        reach.is_complete()
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rational};

    fn workspace() -> Workspace {
        parse_workspace(
            "complex tri\n  vertices 0 1 2\n  facet 0 1\n  facet 1 2\n  facet 0 2\nend\n\
             map rot : tri -> tri\n  0 -> 1\n  1 -> 2\n  2 -> 0\nend\n",
        )
        .unwrap()
    }

    #[test]
    fn classes_parse() {
        let c = parse_class("1:2,-1/2").unwrap();
        assert_eq!(c.degree, 1);
        assert_eq!(c.coords, vec![int(2), rational(-1, 2)]);
        assert!(parse_class("0:").unwrap().coords.is_empty());
        assert!(matches!(parse_class("x:1"), Err(CliError::Usage(_))));
        assert!(parse_class("1").is_err());
    }

    #[test]
    fn execute_against_a_parsed_workspace() {
        let ws = workspace();
        let r = execute(&ws, &Command::Euler { target: "tri".into() }).unwrap();
        assert_eq!(r.result["value"], 0);
        let r = execute(
            &ws,
            &Command::LefschetzNumber {
                map: "rot".into(),
                with: None,
                refinement: None,
                oracle: true,
            },
        )
        .unwrap();
        assert_eq!(r.outcome, Outcome::NotCertified);
        let err = execute(&ws, &Command::Betti { target: "nope".into() }).unwrap_err();
        assert!(matches!(err, CliError::UnknownName { .. }));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn formats() {
        let mut r = Report::new("euler");
        r.set("value", 2).line("chi 2");
        assert!(render(&r, Format::Json).starts_with('{'));
        assert_eq!(render(&r, Format::Text), "euler: computed\n  chi 2\n");
        let both = render(&r, Format::Both);
        let (json, text) = both.split_once("\n\n").unwrap();
        assert_eq!(format!("{json}\n"), render(&r, Format::Json));
        assert_eq!(text, render(&r, Format::Text));
    }

    #[test]
    fn missing_workspace_is_a_usage_error() {
        let run = run_args(["lefcon", "betti", "tri"]);
        assert_eq!(run.exit_code, 2);
        assert!(run.stderr.contains("--workspace"));
    }
}
