use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::{registry, shrink, Counterexample, Ctx, Kind, Law};
use crate::exec::Execution;
use crate::relcore::{Carrier, Relation};

/// Largest per-size-combination instance count that is enumerated in full.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u64 = 10_000_000;

/// Carriers above this size would need pools of more than `2^16` relations.
pub const MAX_SIZE: usize = 4;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_size: usize,
    /// Instances drawn for each size combination that is too large to enumerate.
    pub samples: u64,
    pub seed: u64,
    /// Glob over law ids.
    pub filter: String,
    pub exhaustive_limit: u64,
    pub execution: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 2,
            samples: 0,
            seed: 0,
            filter: "*".into(),
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub id: &'static str,
    pub statement: &'static str,
    /// `Sampled` as soon as one size combination was sampled.
    pub mode: Mode,
    pub instances: u64,
    pub failures: u64,
    /// First failure in size order, shrunk.
    pub counterexample: Option<Counterexample>,
    pub seed: u64,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("max size must be between 1 and {MAX_SIZE}, got {0}")]
    MaxSize(usize),
    #[error("invalid filter pattern {pattern:?}: {message}")]
    Pattern { pattern: String, message: String },
    #[error("no law id matches {0:?}")]
    UnknownLaw(String),
}

/// Runs every registered law whose id matches `cfg.filter`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<LawReport>, SuiteError> {
    let pattern = glob::Pattern::new(&cfg.filter).map_err(|e| SuiteError::Pattern {
        pattern: cfg.filter.clone(),
        message: e.msg.to_string(),
    })?;
    let laws: Vec<Law> = registry().into_iter().filter(|l| pattern.matches(l.id)).collect();
    if laws.is_empty() {
        return Err(SuiteError::UnknownLaw(cfg.filter.clone()));
    }
    run_laws(&laws, cfg)
}

type PoolKey = (Kind, usize, usize);

/// Relation indexes (see [`Relation::from_index`]) of each kind and shape.
struct Pools(HashMap<PoolKey, Vec<u64>>);

impl Pools {
    fn build(keys: impl IntoIterator<Item = PoolKey>) -> Self {
        let mut map = HashMap::new();
        for key in keys {
            map.entry(key).or_insert_with(|| pool(key));
        }
        Pools(map)
    }

    fn get(&self, key: PoolKey) -> &[u64] {
        &self.0[&key]
    }
}

fn pool((kind, n, m): PoolKey) -> Vec<u64> {
    let a = Carrier::indexed("A", n);
    let b = if kind.homogeneous() { a.clone() } else { Carrier::indexed("B", m) };
    match kind {
        Kind::Any => (0..1u64 << (n * m)).collect(),
        Kind::Point => (0..n).map(|i| 1u64 << (i * n + i)).collect(),
        Kind::Coreflexive => (0..1u64 << n)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).map(|i| 1u64 << (i * n + i)).sum())
            .collect(),
        _ => (0..1u64 << (n * m))
            .filter(|&k| kind.admits(&Relation::from_index(&a, &b, k)))
            .collect(),
    }
}

/// Slot sizes in `1..=max`, smallest total first.
fn size_combos(slots: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|c| {
                (1..=max).map(move |s| {
                    let mut c = c.clone();
                    c.push(s);
                    c
                })
            })
            .collect();
    }
    out.sort_by_key(|c| (c.iter().sum::<usize>(), c.clone()));
    out
}

fn law_seed(seed: u64, id: &str) -> u64 {
    // FNV-1a, so the stream of a law does not depend on registry order.
    let h = id
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    seed ^ h
}

struct ComboResult {
    sampled: bool,
    instances: u64,
    failures: u64,
    first: Option<Ctx>,
}

fn run_combo(law: &Law, sizes: &[usize], combo: usize, pools: &Pools, cfg: &SuiteConfig) -> ComboResult {
    let carriers = law.carriers(sizes);
    let var_pools: Vec<&[u64]> = law
        .vars
        .iter()
        .map(|v| pools.get((v.kind, sizes[v.src], sizes[v.dst])))
        .collect();
    let total = var_pools
        .iter()
        .try_fold(1u64, |acc, p| acc.checked_mul(p.len() as u64))
        .unwrap_or(u64::MAX);
    let mut res = ComboResult {
        sampled: total > cfg.exhaustive_limit,
        instances: 0,
        failures: 0,
        first: None,
    };
    if total == 0 {
        return res;
    }
    let build = |choice: &[usize]| Ctx {
        carriers: carriers.clone(),
        vars: law
            .vars
            .iter()
            .zip(choice)
            .zip(&var_pools)
            .map(|((v, &i), p)| Relation::from_index(&carriers[v.src], &carriers[v.dst], p[i]))
            .collect(),
    };
    let mut visit = |choice: &[usize]| {
        let ctx = build(choice);
        res.instances += 1;
        if law.fails(&ctx) {
            res.failures += 1;
            if res.first.is_none() {
                res.first = Some(ctx);
            }
        }
    };
    let mut choice = vec![0usize; var_pools.len()];
    if total <= cfg.exhaustive_limit {
        'outer: loop {
            visit(&choice);
            for (c, p) in choice.iter_mut().zip(&var_pools) {
                *c += 1;
                if *c < p.len() {
                    continue 'outer;
                }
                *c = 0;
            }
            break;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(law_seed(cfg.seed, law.id));
        rng.set_stream(combo as u64);
        for _ in 0..cfg.samples {
            for (c, p) in choice.iter_mut().zip(&var_pools) {
                *c = rng.gen_range(0..p.len());
            }
            visit(&choice);
        }
    }
    ComboResult {
        sampled: total > cfg.exhaustive_limit,
        ..res
    }
}

/// Runs `laws` under `cfg`, ignoring `cfg.filter`. Reports follow `laws` order.
pub fn run_laws(laws: &[Law], cfg: &SuiteConfig) -> Result<Vec<LawReport>, SuiteError> {
    if cfg.max_size == 0 || cfg.max_size > MAX_SIZE {
        return Err(SuiteError::MaxSize(cfg.max_size));
    }
    let combos: Vec<Vec<Vec<usize>>> = laws.iter().map(|l| size_combos(l.slots.len(), cfg.max_size)).collect();
    let pools = Pools::build(laws.iter().zip(&combos).flat_map(|(l, cs)| {
        cs.iter()
            .flat_map(move |s| l.vars.iter().map(move |v| (v.kind, s[v.src], s[v.dst])))
    }));
    let tasks: Vec<(usize, usize)> = combos
        .iter()
        .enumerate()
        .flat_map(|(i, cs)| (0..cs.len()).map(move |k| (i, k)))
        .collect();
    let results = cfg
        .execution
        .map(tasks.clone(), |(i, k)| run_combo(&laws[i], &combos[i][k], k, &pools, cfg));

    let mut reports: Vec<LawReport> = laws
        .iter()
        .map(|l| LawReport {
            id: l.id,
            statement: l.statement,
            mode: Mode::Exhaustive,
            instances: 0,
            failures: 0,
            counterexample: None,
            seed: cfg.seed,
        })
        .collect();
    let mut firsts: Vec<Option<Ctx>> = vec![None; laws.len()];
    for ((i, _), r) in tasks.into_iter().zip(results) {
        let rep = &mut reports[i];
        if r.sampled {
            rep.mode = Mode::Sampled;
        }
        rep.instances += r.instances;
        rep.failures += r.failures;
        if firsts[i].is_none() {
            firsts[i] = r.first;
        }
    }
    let shrunk = cfg.execution.map(firsts.into_iter().enumerate().collect(), |(i, first)| {
        first.map(|ctx| Counterexample::from_ctx(&laws[i], &shrink(&laws[i], ctx)))
    });
    for (rep, cx) in reports.iter_mut().zip(shrunk) {
        rep.counterexample = cx;
    }
    Ok(reports)
}
