//! Command-line interface of the `rainbow` binary.
//!
//! Every command returns a [`CommandOutput`] instead of printing, so the
//! binary stays a thin wrapper and the commands can be driven from tests.
//!
//! Exit codes: 0 success, 1 contract violation, 2 target missed (or a
//! counterexample, or a rejected assignment), 3 input error.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rainbow_core::extremal::{drisko_plus_even_family, sharpness_paths, two_matchings_family};
use rainbow_core::gallai_edmonds::{check_decomposition, ge_decompose};
use rainbow_core::matching::maximum_matching;
use rainbow_core::rainbow::{
    grow_rainbow, guarantee_floor, max_rainbow_matching, ColoredPathFamily,
};
use rainbow_core::reach::{
    find_kf_augmenting_path, reach_from, reach_global, Parity, ReachConfig, ReachSets,
};
use rainbow_core::{verify_rainbow, ColoredFamily, Edge, Error, RainbowMatching};
use serde::Serialize;

use crate::format::{
    parse_assignment, parse_edge_list, parse_family, parse_graph, parse_matching_list,
    serialize_assignment, serialize_family, serialize_path_family,
};
use crate::sweep::{conjecture_colors, run_sweep, Mode, SweepConfig, SweepError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRACT: i32 = 1;
pub const EXIT_TARGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow matchings in families of matchings"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find a rainbow matching of size n in a family file.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        /// Also compute the exact maximum and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the engine or the exact oracle over many instances.
    Sweep(SweepArgs),
    /// Write one of the extremal constructions.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Gallai-Edmonds decomposition of a graph.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// A maximum matching to decompose against; computed when omitted.
        #[arg(long)]
        matching_edges: Option<String>,
    },
    /// Alternating reachability for a matching F and edge set K.
    Reach {
        /// Graph file; its edges outside F form K unless --k-edges is given.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        matching_edges: String,
        #[arg(long)]
        k_edges: Option<String>,
        /// Report reachability from this vertex instead of globally.
        #[arg(long)]
        source: Option<usize>,
    },
    /// Check a rainbow assignment against a family.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    /// Number of matchings; fixed by n in conjecture mode.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Vertices available to the generator; defaults to 2n.
    #[arg(long)]
    pub vertex_budget: Option<usize>,
    /// Search for counterexamples with m = 2n (n even) or 2n - 1 (n odd).
    #[arg(long)]
    pub conjecture: bool,
    /// Enumerate families instead of sampling them.
    #[arg(long)]
    pub exhaustive: bool,
    /// Compare every result with the exact maximum.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Subcommand, Debug)]
pub enum GenerateKind {
    /// 2n - 2 matchings of size n with no rainbow matching of size n.
    TwoMatchings {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 2n - 1 matchings of size n (n even) with no rainbow matching of size n.
    DriskoPlusEven {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 2k augmenting paths with no multicolored augmenting path.
    Sharpness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

enum Failure {
    Input(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ContractViolation(_) => Failure::Contract(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<CommandOutput, Failure>;

pub fn run(cli: Cli) -> CommandOutput {
    let json = cli.json;
    let result = match cli.command {
        Command::Solve { input, n, oracle } => solve(&input, n, oracle, json),
        Command::Sweep(args) => sweep(&args, json),
        Command::Generate { kind } => generate(&kind, json),
        Command::Decompose {
            input,
            matching_edges,
        } => decompose(&input, matching_edges.as_deref(), json),
        Command::Reach {
            input,
            matching_edges,
            k_edges,
            source,
        } => reach(&input, &matching_edges, k_edges.as_deref(), source, json),
        Command::Verify { input, assignment } => verify(&input, &assignment, json),
    };
    result.unwrap_or_else(|f| {
        let (code, msg) = match f {
            Failure::Input(m) => (EXIT_INPUT, m),
            Failure::Contract(m) => (EXIT_CONTRACT, format!("contract violation: {m}")),
        };
        CommandOutput {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_family(path: &Path) -> Result<ColoredFamily, Failure> {
    parse_family(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn pairs<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> Vec<[usize; 2]> {
    edges.into_iter().map(|e| [e.lo(), e.hi()]).collect()
}

fn set_text(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(" "))
}

#[derive(Serialize)]
struct AssignedEdge {
    color: usize,
    edge: [usize; 2],
}

fn assigned(rm: &RainbowMatching) -> Vec<AssignedEdge> {
    rm.assignment()
        .iter()
        .map(|(&color, e)| AssignedEdge {
            color,
            edge: [e.lo(), e.hi()],
        })
        .collect()
}

#[derive(Serialize)]
struct SolveReport {
    colors: usize,
    target: usize,
    guarantee: usize,
    size: usize,
    greedy_size: usize,
    augmentations: usize,
    oracle_maximum: Option<usize>,
    assignment: Vec<AssignedEdge>,
}

fn solve(input: &Path, n: usize, oracle: bool, json: bool) -> Outcome {
    let family = read_family(input)?;
    let run = grow_rainbow(&family, n)?;
    if !verify_rainbow(&family, &run.matching) {
        return Err(Failure::Contract(
            "engine returned an invalid assignment".into(),
        ));
    }
    let size = run.matching.len();
    let floor = guarantee_floor(family.len(), n);
    let oracle_maximum = if oracle {
        Some(max_rainbow_matching(&family)?.len())
    } else {
        None
    };
    let report = SolveReport {
        colors: family.len(),
        target: n,
        guarantee: floor,
        size,
        greedy_size: run.greedy_size,
        augmentations: run.steps.len(),
        oracle_maximum,
        assignment: assigned(&run.matching),
    };
    let stdout = if json {
        to_json(&report)
    } else {
        let mut out = String::new();
        writeln!(out, "# colors: {}", report.colors).unwrap();
        writeln!(out, "# target: {n}").unwrap();
        writeln!(out, "# guarantee: {floor}").unwrap();
        writeln!(out, "# size: {size}").unwrap();
        writeln!(
            out,
            "# greedy start: {}, augmentations: {}",
            run.greedy_size,
            run.steps.len()
        )
        .unwrap();
        if let Some(best) = oracle_maximum {
            writeln!(out, "# oracle maximum: {best}").unwrap();
        }
        out.push_str(&serialize_assignment(&run.matching));
        out
    };
    let mut result = CommandOutput::ok(stdout);
    if let Some(best) = oracle_maximum {
        if size > best || (floor == n && best < n) {
            result.code = EXIT_CONTRACT;
            result.stderr =
                format!("error: engine size {size} disagrees with oracle maximum {best}\n");
            return Ok(result);
        }
    }
    if size < n {
        result.code = EXIT_TARGET;
        result.stderr = format!("rainbow matching of size {size} is below the target {n}\n");
    }
    Ok(result)
}

fn sweep(args: &SweepArgs, json: bool) -> Outcome {
    let m = match (args.conjecture, args.m) {
        (true, Some(m)) if args.n > 0 && m != conjecture_colors(args.n) => {
            return Err(Failure::Input(format!(
                "conjecture mode fixes m = {} for n = {}",
                conjecture_colors(args.n),
                args.n
            )))
        }
        (true, _) if args.n > 0 => conjecture_colors(args.n),
        (_, Some(m)) => m,
        (false, None) => {
            return Err(Failure::Input(
                "--m is required outside conjecture mode".into(),
            ))
        }
        (true, None) => 0,
    };
    let cfg = SweepConfig {
        n: args.n,
        m,
        vertex_budget: args.vertex_budget.unwrap_or(2 * args.n),
        trials: args.trials,
        seed: args.seed,
        mode: if args.exhaustive {
            Mode::Exhaustive
        } else {
            Mode::Random
        },
        conjecture: args.conjecture,
        oracle: args.oracle,
    };
    let report = run_sweep(&cfg).map_err(|e| match e {
        SweepError::Config(_) | SweepError::OracleBound(_) => Failure::Input(e.to_string()),
    })?;
    let stdout = if json {
        to_json(&report)
    } else {
        report.to_text()
    };
    Ok(CommandOutput {
        code: report.exit_code(),
        stdout,
        stderr: format!("wall time: {:.3}s\n", report.wall_time.as_secs_f64()),
    })
}

#[derive(Serialize)]
struct FamilyJson {
    vertices: usize,
    matchings: Vec<Vec<[usize; 2]>>,
}

#[derive(Serialize)]
struct PathJson {
    color: usize,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct PathFamilyJson {
    vertices: usize,
    base: Vec<[usize; 2]>,
    paths: Vec<PathJson>,
}

fn family_json(fam: &ColoredFamily) -> String {
    to_json(&FamilyJson {
        vertices: fam.vertex_count(),
        matchings: fam.matchings().iter().map(|m| pairs(m.edges())).collect(),
    })
}

fn path_family_json(fam: &ColoredPathFamily) -> String {
    to_json(&PathFamilyJson {
        vertices: fam.vertex_count(),
        base: pairs(fam.f().edges()),
        paths: fam
            .paths()
            .iter()
            .map(|(color, p)| PathJson {
                color: *color,
                vertices: p.vertices().to_vec(),
            })
            .collect(),
    })
}

fn generate(kind: &GenerateKind, json: bool) -> Outcome {
    let (text, rendered, out) = match kind {
        GenerateKind::TwoMatchings { n, out } => {
            let fam = two_matchings_family(*n)?;
            (serialize_family(&fam), family_json(&fam), out)
        }
        GenerateKind::DriskoPlusEven { n, out } => {
            let fam = drisko_plus_even_family(*n)?;
            (serialize_family(&fam), family_json(&fam), out)
        }
        GenerateKind::Sharpness { k, out } => {
            let fam = sharpness_paths(*k)?;
            (serialize_path_family(&fam), path_family_json(&fam), out)
        }
    };
    match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(CommandOutput::ok(if json {
                rendered
            } else {
                String::new()
            }))
        }
        None => Ok(CommandOutput::ok(if json { rendered } else { text })),
    }
}

#[derive(Serialize)]
struct ComponentJson {
    vertices: Vec<usize>,
    root: usize,
    /// `D` for an exposed root, `J` for a root matched into `S`.
    kind: &'static str,
    partner: Option<usize>,
}

#[derive(Serialize)]
struct DecompositionJson {
    matching: Vec<[usize; 2]>,
    q: Vec<usize>,
    s: Vec<usize>,
    components: Vec<ComponentJson>,
    valid: bool,
    violations: Vec<String>,
}

fn decompose(input: &Path, matching: Option<&str>, json: bool) -> Outcome {
    let g = parse_graph(&read(input)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
    let f = match matching {
        Some(text) => parse_matching_list(text, g.vertex_count())
            .map_err(|e| Failure::Input(format!("--matching-edges: {}", e.message)))?,
        None => maximum_matching(&g),
    };
    let dec = ge_decompose(&g, &f)?;
    let report = check_decomposition(&g, &f, &dec);
    let components: Vec<ComponentJson> = dec
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| ComponentJson {
            vertices: c.vertices.iter().copied().collect(),
            root: c.root,
            kind: if dec.d_indices.contains(&i) { "D" } else { "J" },
            partner: dec.s_of.get(&i).copied(),
        })
        .collect();
    let stdout = if json {
        to_json(&DecompositionJson {
            matching: pairs(f.edges()),
            q: dec.q_set.iter().copied().collect(),
            s: dec.s_set.iter().copied().collect(),
            components,
            valid: report.is_valid(),
            violations: report.violations.clone(),
        })
    } else {
        let mut out = String::new();
        writeln!(out, "matching: {f}").unwrap();
        writeln!(out, "Q: {}", set_text(&dec.q_set)).unwrap();
        writeln!(out, "S: {}", set_text(&dec.s_set)).unwrap();
        for (i, c) in components.iter().enumerate() {
            let vs: BTreeSet<usize> = c.vertices.iter().copied().collect();
            write!(
                out,
                "component {i}: {} root {} ({}",
                set_text(&vs),
                c.root,
                c.kind
            )
            .unwrap();
            if let Some(s) = c.partner {
                write!(out, ", matched to {s}").unwrap();
            }
            out.push_str(")\n");
        }
        writeln!(
            out,
            "verified: {}",
            if report.is_valid() { "yes" } else { "no" }
        )
        .unwrap();
        for v in &report.violations {
            writeln!(out, "violation: {v}").unwrap();
        }
        out
    };
    let mut result = CommandOutput::ok(stdout);
    if !report.is_valid() {
        result.code = EXIT_CONTRACT;
        result.stderr = "error: decomposition failed verification\n".into();
    }
    Ok(result)
}

#[derive(Serialize)]
struct WitnessJson {
    vertex: usize,
    parity: &'static str,
    path: Vec<usize>,
}

#[derive(Serialize)]
struct ReachJson {
    source: Option<usize>,
    or: Vec<usize>,
    er: Vec<usize>,
    dr: Vec<usize>,
    augmenting_path: Option<Vec<usize>>,
    witnesses: Vec<WitnessJson>,
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Odd => "odd",
        Parity::Even => "even",
    }
}

fn reach(
    input: &Path,
    matching: &str,
    k_edges: Option<&str>,
    source: Option<usize>,
    json: bool,
) -> Outcome {
    let g = parse_graph(&read(input)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
    let n = g.vertex_count();
    let f = parse_matching_list(matching, n)
        .map_err(|e| Failure::Input(format!("--matching-edges: {}", e.message)))?;
    let k: BTreeSet<Edge> = match k_edges {
        Some(text) => parse_edge_list(text, n)
            .map_err(|e| Failure::Input(format!("--k-edges: {}", e.message)))?
            .into_iter()
            .collect(),
        None => g.edges_outside(&f),
    };
    let cfg = ReachConfig::new(n, f, k)?;
    let sets: ReachSets = match source {
        Some(a) => reach_from(a, &cfg)?,
        None => reach_global(&cfg)?,
    };
    let path = find_kf_augmenting_path(&cfg)?;
    let witnesses: Vec<WitnessJson> = sets
        .witnesses()
        .iter()
        .map(|(&(v, p), w)| WitnessJson {
            vertex: v,
            parity: parity_name(p),
            path: w.vertices().to_vec(),
        })
        .collect();
    let stdout = if json {
        to_json(&ReachJson {
            source,
            or: sets.or_set().iter().copied().collect(),
            er: sets.er_set().iter().copied().collect(),
            dr: sets.dr_set().iter().copied().collect(),
            augmenting_path: path.as_ref().map(|p| p.vertices().to_vec()),
            witnesses,
        })
    } else {
        let mut out = String::new();
        match source {
            Some(a) => writeln!(out, "source: {a}").unwrap(),
            None => out.push_str("source: all exposed vertices\n"),
        }
        writeln!(out, "OR: {}", set_text(sets.or_set())).unwrap();
        writeln!(out, "ER: {}", set_text(sets.er_set())).unwrap();
        writeln!(out, "DR: {}", set_text(sets.dr_set())).unwrap();
        match &path {
            Some(p) => writeln!(out, "augmenting path: {p}").unwrap(),
            None => out.push_str("augmenting path: none\n"),
        }
        for ((v, p), w) in sets.witnesses() {
            writeln!(out, "witness {} {v}: {w}", parity_name(*p)).unwrap();
        }
        out
    };
    Ok(CommandOutput::ok(stdout))
}

/// Why an assignment is not a rainbow matching of `family`, if it is not.
pub fn assignment_problem(family: &ColoredFamily, rm: &RainbowMatching) -> Option<String> {
    let mut used = BTreeSet::new();
    for (&color, &e) in rm.assignment() {
        let Some(m) = family.get(color) else {
            return Some(format!(
                "color {color} out of range for {} matchings",
                family.len()
            ));
        };
        if !m.contains(e) {
            return Some(format!("edge {e} is not in matching {color}"));
        }
        for v in [e.lo(), e.hi()] {
            if !used.insert(v) {
                return Some(format!("vertex {v} is covered twice"));
            }
        }
    }
    if verify_rainbow(family, rm) {
        None
    } else {
        Some("rejected by the verifier".into())
    }
}

#[derive(Serialize)]
struct VerifyJson {
    valid: bool,
    size: usize,
    reason: Option<String>,
}

fn verify(input: &Path, assignment: &Path, json: bool) -> Outcome {
    let family = read_family(input)?;
    let rm = parse_assignment(&read(assignment)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", assignment.display())))?;
    let reason = assignment_problem(&family, &rm);
    let stdout = if json {
        to_json(&VerifyJson {
            valid: reason.is_none(),
            size: rm.len(),
            reason: reason.clone(),
        })
    } else {
        match &reason {
            None => format!("valid rainbow matching of size {}\n", rm.len()),
            Some(r) => format!("invalid: {r}\n"),
        }
    };
    let mut result = CommandOutput::ok(stdout);
    if reason.is_some() {
        result.code = EXIT_TARGET;
    }
    Ok(result)
}
