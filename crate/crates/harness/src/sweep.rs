//! Randomized and exhaustive sweeps over rainbow-matching instances.
//!
//! Theorem mode runs the growth engine on every instance (and, with the
//! oracle enabled, checks it against the exact maximum). Conjecture mode fixes
//! `m = 2n` for even `n` and `m = 2n - 1` for odd `n` and asks the exact
//! oracle for a rainbow matching of size `n`; an instance without one is a
//! counterexample, serialized and re-checked from its serialization.
//!
//! Instances are evaluated in parallel and merged by index, so a report
//! depends only on the configuration.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rainbow_core::enumerate::matchings_of_size;
use rainbow_core::graph::edge;
use rainbow_core::rainbow::{
    brute_force_rainbow, guarantee_floor, max_rainbow_matching, rainbow_matching, OracleLimits,
};
use rainbow_core::{verify_rainbow, ColoredFamily, Error, Matching};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::{parse_family, serialize_family};
use crate::random::{instance_rng, instance_seed, random_family};

/// Largest `n` swept over every family of size-`n` matchings on the budget.
pub const EXHAUSTIVE_MAX_N: usize = 2;
/// Largest vertex budget swept over every family.
pub const EXHAUSTIVE_MAX_BUDGET: usize = 6;
/// Largest number of instances an exhaustive sweep will enumerate.
pub const EXHAUSTIVE_MAX_INSTANCES: usize = 250_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Random,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub n: usize,
    pub m: usize,
    pub vertex_budget: usize,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    pub conjecture: bool,
    /// In theorem mode, also compute the exact maximum per instance.
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("sweep exceeds oracle bounds: {0}")]
    OracleBound(String),
}

/// Family size used in conjecture mode.
pub fn conjecture_colors(n: usize) -> usize {
    if n % 2 == 0 {
        2 * n
    } else {
        2 * n - 1
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: String| Err(SweepError::Config(msg));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.m == 0 {
            return bad("m must be positive".into());
        }
        if self.vertex_budget < 2 * self.n {
            return bad(format!(
                "vertex budget {} is below 2n = {}",
                self.vertex_budget,
                2 * self.n
            ));
        }
        if self.conjecture && self.m != conjecture_colors(self.n) {
            return bad(format!(
                "conjecture mode needs m = {} for n = {}",
                conjecture_colors(self.n),
                self.n
            ));
        }
        if self.conjecture || self.oracle {
            let limits = OracleLimits::default();
            if self.m > limits.max_colors || self.m * self.n > limits.max_total_edges {
                return Err(SweepError::OracleBound(format!(
                    "{} matchings of size {}, limits are {} matchings and {} edges",
                    self.m, self.n, limits.max_colors, limits.max_total_edges
                )));
            }
        }
        Ok(())
    }

    fn floor(&self) -> usize {
        guarantee_floor(self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// A proved guarantee failed or the engine returned an invalid result.
    ContractViolation,
    /// The engine stopped below `n` on a family without the guarantee.
    BelowTarget,
    /// No rainbow matching of size `n` exists (conjecture mode).
    Counterexample,
    /// Engine and exact oracle are inconsistent.
    OracleDisagreement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub index: usize,
    pub seed: Option<u64>,
    pub kind: FailureKind,
    pub detail: String,
    /// The family in the instance file format.
    pub instance: String,
    /// For counterexamples: whether re-parsing the serialized instance and
    /// rerunning the oracle confirmed it.
    pub reverified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    /// How exhaustive instances were chosen; `None` for random sweeps.
    pub scope: Option<String>,
    pub instances_run: usize,
    pub successes: usize,
    pub failures: Vec<FailureRecord>,
    pub oracle_disagreements: Vec<FailureRecord>,
    pub instance_seeds: Vec<u64>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn has_kind(&self, kind: FailureKind) -> bool {
        self.failures
            .iter()
            .chain(&self.oracle_disagreements)
            .any(|f| f.kind == kind)
    }

    /// 0 clean, 1 on contract violations or oracle disagreements, 2 when
    /// only targets were missed or counterexamples found.
    pub fn exit_code(&self) -> i32 {
        if self.has_kind(FailureKind::ContractViolation) || !self.oracle_disagreements.is_empty() {
            1
        } else if self.failures.is_empty() {
            0
        } else {
            2
        }
    }

    /// The report as text. Wall time is left out so reports are
    /// reproducible byte for byte.
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let mode = if c.conjecture {
            "conjecture"
        } else {
            "theorem"
        };
        let kind = match c.mode {
            Mode::Random => "random",
            Mode::Exhaustive => "exhaustive",
        };
        writeln!(
            out,
            "sweep: {mode} mode, {kind}, n={} m={} vertex_budget={} trials={} seed={} oracle={}",
            c.n, c.m, c.vertex_budget, c.trials, c.seed, c.oracle
        )
        .unwrap();
        if let Some(scope) = &self.scope {
            writeln!(out, "scope: {scope}").unwrap();
        }
        writeln!(out, "instances: {}", self.instances_run).unwrap();
        writeln!(out, "successes: {}", self.successes).unwrap();
        writeln!(out, "failures: {}", self.failures.len()).unwrap();
        writeln!(
            out,
            "oracle disagreements: {}",
            self.oracle_disagreements.len()
        )
        .unwrap();
        for (label, list) in [
            ("failure", &self.failures),
            ("disagreement", &self.oracle_disagreements),
        ] {
            for f in list {
                write!(out, "{label} at instance {}", f.index).unwrap();
                if let Some(seed) = f.seed {
                    write!(out, " (seed {seed:#018x})").unwrap();
                }
                writeln!(out, ": {:?}: {}", f.kind, f.detail).unwrap();
                if let Some(ok) = f.reverified {
                    writeln!(out, "  reverified: {}", if ok { "yes" } else { "no" }).unwrap();
                }
                for line in f.instance.lines() {
                    writeln!(out, "  {line}").unwrap();
                }
            }
        }
        if !self.instance_seeds.is_empty() {
            out.push_str("instance seeds:");
            for s in &self.instance_seeds {
                write!(out, " {s:016x}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Result of one instance: `None` on success.
struct Evaluation {
    failure: Option<(FailureKind, String, Option<bool>)>,
    disagreement: Option<String>,
}

fn evaluate(cfg: &SweepConfig, family: &ColoredFamily) -> Evaluation {
    let n = cfg.n;
    let floor = cfg.floor();
    let mut eval = Evaluation {
        failure: None,
        disagreement: None,
    };
    let engine = match rainbow_matching(family, n) {
        Ok(rm) if verify_rainbow(family, &rm) => rm,
        Ok(rm) => {
            eval.failure = Some((
                FailureKind::ContractViolation,
                format!(
                    "engine returned an invalid assignment {:?}",
                    rm.assignment()
                ),
                None,
            ));
            return eval;
        }
        Err(e) => {
            eval.failure = Some((FailureKind::ContractViolation, e.to_string(), None));
            return eval;
        }
    };

    if cfg.conjecture {
        match brute_force_rainbow(family, n) {
            Ok(Some(_)) => {}
            Ok(None) => {
                let text = serialize_family(family);
                let reverified = parse_family(&text)
                    .ok()
                    .and_then(|f| brute_force_rainbow(&f, n).ok())
                    .is_some_and(|r| r.is_none());
                eval.failure = Some((
                    FailureKind::Counterexample,
                    format!(
                        "no rainbow matching of size {n} among {} matchings",
                        family.len()
                    ),
                    Some(reverified),
                ));
            }
            Err(e) => eval.disagreement = Some(e.to_string()),
        }
        if engine.len() < floor {
            eval.disagreement = Some(format!(
                "engine size {} below guarantee {floor}",
                engine.len()
            ));
        }
        return eval;
    }

    if engine.len() < n {
        let kind = if engine.len() < floor {
            FailureKind::ContractViolation
        } else {
            FailureKind::BelowTarget
        };
        eval.failure = Some((
            kind,
            format!(
                "rainbow matching of size {} (target {n}, guarantee {floor})",
                engine.len()
            ),
            None,
        ));
    }
    if cfg.oracle {
        match max_rainbow_matching(family) {
            Ok(best) if engine.len() > best.len() || (floor == n && best.len() < n) => {
                eval.disagreement = Some(format!(
                    "engine size {} versus oracle maximum {}",
                    engine.len(),
                    best.len()
                ));
            }
            Ok(_) => {}
            Err(e) => eval.disagreement = Some(e.to_string()),
        }
    }
    eval
}

fn pinned_matching(n: usize) -> Matching {
    Matching::from_edges((0..n).map(|i| edge(2 * i, 2 * i + 1))).expect("disjoint edges")
}

/// Non-decreasing index sequences of length `len` over `0..pool`.
fn multisets(pool: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(
        pool: usize,
        len: usize,
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for i in from..pool {
            current.push(i);
            rec(pool, len, i, current, out);
            current.pop();
        }
    }
    rec(pool, len, 0, &mut current, &mut out);
    out
}

fn multiset_count(pool: usize, len: usize) -> Option<usize> {
    // C(pool + len - 1, len), computed incrementally.
    let mut c: usize = 1;
    for i in 0..len {
        c = c.checked_mul(pool + i)? / (i + 1);
    }
    Some(c)
}

/// The families an exhaustive sweep visits, with a description of the scope.
///
/// Up to [`EXHAUSTIVE_MAX_N`] and [`EXHAUSTIVE_MAX_BUDGET`] every family of
/// `m` size-`n` matchings on the budget is covered up to relabelling and
/// color order: color 0 is pinned to `{0-1, 2-3, …}` and the remaining
/// colors range over all multisets. Beyond the caps the pool shrinks to the
/// perfect matchings of `K_2n`.
pub fn exhaustive_families(cfg: &SweepConfig) -> Result<(String, Vec<ColoredFamily>), SweepError> {
    let full = cfg.n <= EXHAUSTIVE_MAX_N && cfg.vertex_budget <= EXHAUSTIVE_MAX_BUDGET;
    let (vertex_count, scope) = if full {
        (
            cfg.vertex_budget,
            format!(
                "all families of size-{} matchings on {} vertices",
                cfg.n, cfg.vertex_budget
            ),
        )
    } else {
        (
            2 * cfg.n,
            format!("families of perfect matchings of K_{}", 2 * cfg.n),
        )
    };
    let pool = matchings_of_size(vertex_count, cfg.n);
    let count = multiset_count(pool.len(), cfg.m - 1).filter(|&c| c <= EXHAUSTIVE_MAX_INSTANCES);
    let Some(_) = count else {
        return Err(SweepError::Config(format!(
            "exhaustive sweep over {} matchings with {} free colors exceeds {EXHAUSTIVE_MAX_INSTANCES} instances",
            pool.len(),
            cfg.m - 1
        )));
    };
    let pinned = pinned_matching(cfg.n);
    let families = multisets(pool.len(), cfg.m - 1)
        .into_iter()
        .map(|rest| {
            let mut ms = vec![pinned.clone()];
            ms.extend(rest.into_iter().map(|i| pool[i].clone()));
            ColoredFamily::new(vertex_count, ms).expect("pool matchings fit the vertex count")
        })
        .collect();
    Ok((scope, families))
}

/// The family of random instance `index`.
pub fn random_instance(cfg: &SweepConfig, index: usize) -> ColoredFamily {
    random_family(
        &mut instance_rng(cfg.seed, index as u64),
        cfg.n,
        cfg.m,
        cfg.vertex_budget,
    )
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, SweepError> {
    cfg.validate()?;
    let start = Instant::now();
    let (scope, instances, seeds): (Option<String>, Vec<ColoredFamily>, Vec<u64>) = match cfg.mode {
        Mode::Random => {
            let seeds = (0..cfg.trials as u64)
                .map(|i| instance_seed(cfg.seed, i))
                .collect();
            let families = (0..cfg.trials)
                .into_par_iter()
                .map(|i| random_instance(cfg, i))
                .collect();
            (None, families, seeds)
        }
        Mode::Exhaustive => {
            let (scope, families) = exhaustive_families(cfg)?;
            (Some(scope), families, Vec::new())
        }
    };

    let evaluations: Vec<Evaluation> = instances.par_iter().map(|f| evaluate(cfg, f)).collect();

    let mut report = SweepReport {
        config: cfg.clone(),
        scope,
        instances_run: instances.len(),
        successes: 0,
        failures: Vec::new(),
        oracle_disagreements: Vec::new(),
        instance_seeds: seeds,
        wall_time: Duration::ZERO,
    };
    for (index, (eval, family)) in evaluations.into_iter().zip(&instances).enumerate() {
        let seed = report.instance_seeds.get(index).copied();
        let record = |kind, detail, reverified| FailureRecord {
            index,
            seed,
            kind,
            detail,
            instance: serialize_family(family),
            reverified,
        };
        match eval.failure {
            None => report.successes += 1,
            Some((kind, detail, reverified)) => {
                report.failures.push(record(kind, detail, reverified))
            }
        }
        if let Some(detail) = eval.disagreement {
            report
                .oracle_disagreements
                .push(record(FailureKind::OracleDisagreement, detail, None));
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Reruns the check behind a counterexample on a standalone serialized
/// family: `Ok(true)` iff no rainbow matching of size `n` exists.
pub fn reverify_counterexample(instance: &str, n: usize) -> Result<bool, String> {
    let family = parse_family(instance).map_err(|e| e.to_string())?;
    match brute_force_rainbow(&family, n) {
        Ok(found) => Ok(found.is_none()),
        Err(Error::OracleBound(msg)) => Err(msg),
        Err(e) => Err(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: usize, m: usize) -> SweepConfig {
        SweepConfig {
            n,
            m,
            vertex_budget: 2 * n + 2,
            trials: 20,
            seed: 11,
            mode: Mode::Random,
            conjecture: false,
            oracle: true,
        }
    }

    #[test]
    fn validation() {
        assert!(config(2, 4).validate().is_ok());
        assert!(SweepConfig {
            trials: 0,
            ..config(2, 4)
        }
        .validate()
        .is_err());
        assert!(SweepConfig {
            vertex_budget: 3,
            ..config(2, 4)
        }
        .validate()
        .is_err());
        assert!(SweepConfig {
            conjecture: true,
            ..config(3, 6)
        }
        .validate()
        .is_err());
        assert!(SweepConfig {
            conjecture: true,
            ..config(3, 5)
        }
        .validate()
        .is_ok());
        assert!(matches!(
            config(20, 40).validate(),
            Err(SweepError::OracleBound(_))
        ));
    }

    #[test]
    fn conjecture_sizes() {
        assert_eq!(conjecture_colors(2), 4);
        assert_eq!(conjecture_colors(3), 5);
    }

    #[test]
    fn theorem_sweep_is_clean_and_deterministic() {
        let cfg = config(3, 7);
        let a = run_sweep(&cfg).unwrap();
        assert_eq!(a.instances_run, 20);
        assert_eq!(a.successes, 20);
        assert_eq!(a.exit_code(), 0);
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn below_target_is_reported() {
        // Two perfect matchings on four vertices, both edges overlapping.
        let cfg = SweepConfig {
            vertex_budget: 4,
            ..config(2, 2)
        };
        let report = run_sweep(&cfg).unwrap();
        assert_eq!(
            report.successes + report.failures.len(),
            report.instances_run
        );
        assert!(report.oracle_disagreements.is_empty());
        assert!(report
            .failures
            .iter()
            .all(|f| f.kind == FailureKind::BelowTarget));
    }

    #[test]
    fn exhaustive_counts() {
        let cfg = SweepConfig {
            mode: Mode::Exhaustive,
            ..config(2, 4)
        };
        let cfg = SweepConfig {
            vertex_budget: 4,
            ..cfg
        };
        let (_, families) = exhaustive_families(&cfg).unwrap();
        // Three perfect matchings of K_4, three free colors: C(5, 3).
        assert_eq!(families.len(), 10);
        assert_eq!(multiset_count(45, 3), Some(16215));
        assert_eq!(multisets(45, 3).len(), 16215);
    }

    #[test]
    fn counterexamples_are_reverified() {
        let text = "vertices 4\nmatching 0: 0-1 2-3\nmatching 1: 0-3 1-2\n";
        assert_eq!(reverify_counterexample(text, 2), Ok(true));
        let text = "vertices 4\nmatching 0: 0-1 2-3\nmatching 1: 0-1 2-3\n";
        assert_eq!(reverify_counterexample(text, 2), Ok(false));
    }
}
