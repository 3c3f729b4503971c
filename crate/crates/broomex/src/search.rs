//! Exhaustive extremal search over broom-free graphs, with closed-form
//! comparison, uniqueness tracking and agreement sweeps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form_with_cap, canonical_graph, CanonicalForm};
use crate::detect::is_broom_free;
use crate::enumerate::{accepted_children, Enumerator, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::families::{closed_form_value, predicted_extremal, BroomSpec, FamilyId};
use crate::graph::{binomial, checked_pow, Graph, Objective};
use crate::graph6::{graph6_decode, graph6_encode};

/// Outcome of one exhaustive search at fixed `(spec, n, r, objective)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub spec: BroomSpec,
    pub n: u32,
    pub r: u32,
    pub objective: Objective,
    /// Exact maximum of the objective over all broom-free graphs on n vertices.
    pub optimum: u64,
    /// Closed-form value of the predicted family at these parameters.
    pub predicted_value: u64,
    pub predicted_family: FamilyId,
    /// optimum == predicted_value.
    pub agrees: bool,
    /// The predicted family is the one and only maximizer.
    pub unique_and_matches: bool,
    /// Every maximizer, as canonical graph6, sorted.
    pub optimizers: Vec<String>,
}

/// Knobs for [`extremal_search_opts`]. The defaults match
/// [`extremal_search`]: sequential, with the upper-bound prune on.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub threads: usize,
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 1,
            prune: true,
        }
    }
}

/// Exact `max` of the objective over broom-free graphs on `n` vertices, with
/// the full maximizer set and the closed-form comparison.
pub fn extremal_search(
    spec: &BroomSpec,
    n: u32,
    r: u32,
    objective: Objective,
) -> Result<ExtremalReport> {
    extremal_search_opts(spec, n, r, objective, &SearchOptions::default())
}

pub fn extremal_search_opts(
    spec: &BroomSpec,
    n: u32,
    r: u32,
    objective: Objective,
    opts: &SearchOptions,
) -> Result<ExtremalReport> {
    if r < objective.min_r() {
        return Err(Error::InvalidParameter(format!(
            "objective {objective} requires r >= {}",
            objective.min_r()
        )));
    }
    let (family, predicted) = predicted_extremal(spec, n)?;
    let predicted_value = closed_form_value(spec, n, r, objective)?;

    // The construction is always a candidate, so its value seeds the prune
    // bound whenever it is admissible.
    let seed = if is_broom_free(&predicted, spec) {
        objective.evaluate(&predicted, r)?
    } else {
        0
    };

    let state = if opts.threads <= 1 {
        run_sequential(spec, n as usize, r, objective, opts.prune, seed)?
    } else {
        run_parallel(spec, n as usize, r, objective, opts, seed)?
    };

    let BestSet {
        value: optimum,
        graphs,
    } = state;
    let mut optimizers: Vec<String> = graphs.iter().map(graph6_encode).collect::<Result<_>>()?;
    optimizers.sort();

    // Recheck outside the search loop: every reported maximizer must be
    // admissible and must actually attain the optimum.
    for text in &optimizers {
        let g = graph6_decode(text)?;
        assert!(
            is_broom_free(&g, spec),
            "optimizer fails the filter: {text}"
        );
        assert_eq!(
            objective.evaluate(&g, r)?,
            optimum,
            "optimizer does not attain the optimum: {text}"
        );
    }

    let predicted_g6 = graph6_encode(&canonical_graph(&predicted)?)?;
    let agrees = optimum == predicted_value;
    let unique_and_matches = optimizers.len() == 1 && optimizers[0] == predicted_g6;

    Ok(ExtremalReport {
        spec: *spec,
        n,
        r,
        objective,
        optimum,
        predicted_value,
        predicted_family: family,
        agrees,
        unique_and_matches,
        optimizers,
    })
}

/// Running maximum plus every graph attaining it.
struct BestSet {
    value: u64,
    graphs: Vec<Graph>,
}

impl BestSet {
    fn new(seed: u64) -> Self {
        BestSet {
            value: seed,
            graphs: Vec::new(),
        }
    }

    fn offer(&mut self, g: &Graph, value: u64) {
        if value > self.value {
            self.value = value;
            self.graphs.clear();
        }
        if value == self.value {
            self.graphs.push(g.clone());
        }
    }

    fn merge(mut self, other: BestSet) -> BestSet {
        use std::cmp::Ordering;
        match other.value.cmp(&self.value) {
            Ordering::Greater => other,
            Ordering::Equal => {
                self.graphs.extend(other.graphs);
                self
            }
            Ordering::Less => self,
        }
    }
}

fn run_sequential(
    spec: &BroomSpec,
    n: usize,
    r: u32,
    objective: Objective,
    prune: bool,
    seed: u64,
) -> Result<BestSet> {
    let best_value = std::cell::Cell::new(seed);
    let mut graphs: Vec<Graph> = Vec::new();
    let mut err: Option<Error> = None;
    Enumerator::new(n).filter(*spec).for_each_pruned(
        |partial| prune && upper_bound(partial, n, r, objective) < best_value.get(),
        |g| {
            if err.is_some() {
                return;
            }
            match objective.evaluate(g, r) {
                Ok(value) => {
                    if value > best_value.get() {
                        best_value.set(value);
                        graphs.clear();
                    }
                    if value == best_value.get() {
                        graphs.push(g.clone());
                    }
                }
                Err(e) => err = Some(e),
            }
        },
    )?;
    match err {
        Some(e) => Err(e),
        None => Ok(BestSet {
            value: best_value.get(),
            graphs,
        }),
    }
}

/// Splits the augmentation tree at a shallow level and searches the subtrees
/// in parallel with per-worker best sets. Merging takes the maximum value and
/// the union of maximizers, which is associative and order-independent, so
/// the final report is identical to the sequential one.
fn run_parallel(
    spec: &BroomSpec,
    n: usize,
    r: u32,
    objective: Objective,
    opts: &SearchOptions,
    seed: u64,
) -> Result<BestSet> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;

    // Frontier at a fixed shallow depth; each entry owns a disjoint subtree.
    let root = Graph::empty(1)?;
    let root_form = canonical_form_with_cap(&root, DEFAULT_ENUM_CAP)?;
    let mut frontier: Vec<(Graph, CanonicalForm)> = vec![(root, root_form)];
    let split_level = n.saturating_sub(3).clamp(1, 5);
    let mut emitted = BestSet::new(seed);
    while frontier
        .first()
        .is_some_and(|(g, _)| g.vertex_count() < split_level)
    {
        let mut next = Vec::new();
        for (g, form) in &frontier {
            for (child, child_form) in accepted_children(g, form, Some(spec), DEFAULT_ENUM_CAP)? {
                if child.vertex_count() == n {
                    let value = objective.evaluate(&child, r)?;
                    emitted.offer(&child, value);
                } else {
                    next.push((child, child_form));
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            return Ok(emitted);
        }
    }

    let results: Vec<Result<BestSet>> = pool.install(|| {
        frontier
            .par_iter()
            .map(|(g, form)| {
                let mut local = BestSet::new(seed);
                subtree_search(spec, n, r, objective, opts.prune, g, form, &mut local)?;
                Ok(local)
            })
            .collect()
    });
    let mut best = emitted;
    for res in results {
        best = best.merge(res?);
    }
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn subtree_search(
    spec: &BroomSpec,
    n: usize,
    r: u32,
    objective: Objective,
    prune: bool,
    cur: &Graph,
    cur_form: &CanonicalForm,
    state: &mut BestSet,
) -> Result<()> {
    for (child, form) in accepted_children(cur, cur_form, Some(spec), DEFAULT_ENUM_CAP)? {
        if child.vertex_count() == n {
            let value = objective.evaluate(&child, r)?;
            state.offer(&child, value);
        } else if !prune || upper_bound(&child, n, r, objective) >= state.value {
            subtree_search(spec, n, r, objective, prune, &child, &form, state)?;
        }
    }
    Ok(())
}

/// Upper bound on the objective over every n-vertex descendant of `partial`.
///
/// Conservative because augmentation only appends vertices: edges among the
/// existing m vertices never change, so an existing degree d can rise to at
/// most d + (n - m), a future vertex has degree at most n - 1, and both d^r
/// and C(d, r) are nondecreasing in d. On overflow the bound is u64::MAX,
/// which never prunes.
fn upper_bound(partial: &Graph, n: usize, r: u32, objective: Objective) -> u64 {
    let m = partial.vertex_count();
    debug_assert!(m <= n);
    let growth = (n - m) as u64;
    let f = |d: u64| -> Option<u64> {
        match objective {
            Objective::Er => checked_pow(d, r, "bound").ok(),
            Objective::Stars => u64::try_from(binomial(d, r as u64)).ok(),
        }
    };
    let mut total: u64 = 0;
    for v in 0..m {
        let Some(term) = f(partial.degree(v) as u64 + growth) else {
            return u64::MAX;
        };
        let Some(next) = total.checked_add(term) else {
            return u64::MAX;
        };
        total = next;
    }
    let Some(newcomer) = f(n as u64 - 1) else {
        return u64::MAX;
    };
    newcomer
        .checked_mul(growth)
        .and_then(|extra| total.checked_add(extra))
        .unwrap_or(u64::MAX)
}

/// One search per `n` in `n_min..=n_max`, plus the least `n0` from which
/// `agrees` and `unique_and_matches` both hold through the end of the range.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepResult {
    pub reports: Vec<ExtremalReport>,
    pub threshold: Option<u32>,
}

pub fn agreement_sweep(
    spec: &BroomSpec,
    r: u32,
    objective: Objective,
    n_min: u32,
    n_max: u32,
) -> Result<SweepResult> {
    agreement_sweep_opts(spec, r, objective, n_min, n_max, &SearchOptions::default())
}

pub fn agreement_sweep_opts(
    spec: &BroomSpec,
    r: u32,
    objective: Objective,
    n_min: u32,
    n_max: u32,
    opts: &SearchOptions,
) -> Result<SweepResult> {
    let mut reports = Vec::new();
    let mut n = n_min;
    while n <= n_max {
        reports.push(extremal_search_opts(spec, n, r, objective, opts)?);
        n += 1;
    }
    let threshold = empirical_threshold(&reports, true);
    Ok(SweepResult { reports, threshold })
}

/// Least starting point of an all-good suffix of the sweep. With
/// `require_unique` the per-n condition is `agrees && unique_and_matches`,
/// otherwise `agrees` alone.
pub fn empirical_threshold(reports: &[ExtremalReport], require_unique: bool) -> Option<u32> {
    let good = |rep: &ExtremalReport| rep.agrees && (!require_unique || rep.unique_and_matches);
    if reports.is_empty() || !good(reports.last().unwrap()) {
        return None;
    }
    let mut threshold = reports.last().unwrap().n;
    for rep in reports.iter().rev().skip(1) {
        if good(rep) {
            threshold = rep.n;
        } else {
            break;
        }
    }
    Some(threshold)
}

/// Is the predicted family claimed to be the one and only maximizer at this
/// objective? For star counting with `ell = 5, s > 0` the matching edges can
/// be star-neutral (`C(2, r) = 0` once `r >= 3`), so uniqueness is not
/// claimed there; everywhere else it is.
pub fn uniqueness_claimed(spec: &BroomSpec, objective: Objective) -> bool {
    match objective {
        Objective::Er => true,
        Objective::Stars => !(spec.ell() == 5 && spec.s() > 0),
    }
}

/// Both objectives swept over one range, with per-objective thresholds that
/// honor exactly the claimed uniqueness cases.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifySummary {
    pub spec: BroomSpec,
    pub r: u32,
    pub n_min: u32,
    pub n_max: u32,
    pub sweeps: Vec<ObjectiveSweep>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObjectiveSweep {
    pub objective: Objective,
    pub uniqueness_claimed: bool,
    pub threshold: Option<u32>,
    pub reports: Vec<ExtremalReport>,
}

pub fn verify_predictions(
    spec: &BroomSpec,
    r: u32,
    n_min: u32,
    n_max: u32,
) -> Result<VerifySummary> {
    verify_predictions_opts(spec, r, n_min, n_max, &SearchOptions::default())
}

pub fn verify_predictions_opts(
    spec: &BroomSpec,
    r: u32,
    n_min: u32,
    n_max: u32,
    opts: &SearchOptions,
) -> Result<VerifySummary> {
    let mut sweeps = Vec::new();
    for objective in [Objective::Er, Objective::Stars] {
        let sweep = agreement_sweep_opts(spec, r, objective, n_min, n_max, opts)?;
        let claimed = uniqueness_claimed(spec, objective);
        let threshold = empirical_threshold(&sweep.reports, claimed);
        sweeps.push(ObjectiveSweep {
            objective,
            uniqueness_claimed: claimed,
            threshold,
            reports: sweep.reports,
        });
    }
    Ok(VerifySummary {
        spec: *spec,
        r,
        n_min,
        n_max,
        sweeps,
    })
}
