//! Bound-checking campaigns: sweep random forests over an (n, k) grid,
//! solve each instance exactly, and compare against the bound's ceiling.
//! A completed campaign must observe zero violations; any violation would be
//! an implementation bug, and the offending instance is reported for replay.

use serde::Serialize;

use bkpvc::{
    gen_directed_extremal, gen_random, gen_undirected_extremal, lower_bound, solve, Error, Forest,
    ForestKind,
};

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub kind: ForestKind,
    pub n_min: usize,
    pub n_max: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub trials_per_cell: usize,
    pub seed: u64,
    pub component_bias: f64,
    pub include_extremal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    pub kind: &'static str,
    pub source: &'static str,
    pub n: usize,
    pub k: usize,
    pub psi_b: usize,
    pub bound_ceiling: usize,
    /// psi_b − ceiling; negative only on a violation.
    pub gap: i64,
}

/// An exact rational gap psi_b − numerator/denominator.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct ExactGap {
    pub numerator: i64,
    pub denominator: i64,
}

impl ExactGap {
    fn new(psi_b: usize, bound: bkpvc::BoundValue) -> Self {
        Self {
            numerator: psi_b as i64 * bound.denominator as i64 - bound.numerator as i64,
            denominator: bound.denominator as i64,
        }
    }

    fn lt(&self, other: &ExactGap) -> bool {
        self.numerator * other.denominator < other.numerator * self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub trials: usize,
    pub violations: usize,
    /// Smallest observed psi_b − exact bound, as an exact rational.
    pub min_gap: ExactGap,
}

#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub records: Vec<TrialRecord>,
    pub summary: CampaignSummary,
}

/// A trial that could not run; carries everything needed to replay it.
#[derive(Debug)]
pub struct CampaignError {
    pub trial_seed: u64,
    pub forest_json: Option<String>,
    pub source: Error,
}

impl std::fmt::Display for CampaignError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "campaign trial failed (seed {}): {}",
            self.trial_seed, self.source
        )?;
        if let Some(json) = &self.forest_json {
            write!(f, "; reproducer forest: {json}")?;
        }
        Ok(())
    }
}

impl std::error::Error for CampaignError {}

fn mix(parts: &[u64]) -> u64 {
    let mut h = 0x9e37_79b9_7f4a_7c15u64;
    for &p in parts {
        let mut z = h ^ p.wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        h = z ^ (z >> 31);
    }
    h
}

fn kind_name(kind: ForestKind) -> &'static str {
    match kind {
        ForestKind::Directed => "directed",
        ForestKind::Undirected => "undirected",
    }
}

/// Runs the configured sweep. Deterministic: the same config produces the
/// same report, record for record.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, CampaignError> {
    validate(config).map_err(|source| CampaignError {
        trial_seed: config.seed,
        forest_json: None,
        source,
    })?;
    let mut records = Vec::new();
    let mut violations = 0usize;
    let mut min_gap: Option<ExactGap> = None;
    let kind_tag = match config.kind {
        ForestKind::Directed => 1u64,
        ForestKind::Undirected => 2u64,
    };

    let mut push = |records: &mut Vec<TrialRecord>,
                    source: &'static str,
                    forest: &Forest,
                    k: usize,
                    trial_seed: u64|
     -> Result<(), CampaignError> {
        let fail = |source: Error, forest: Option<&Forest>| CampaignError {
            trial_seed,
            forest_json: forest.map(Forest::to_json_string),
            source,
        };
        let psi_b = solve(forest, k).map_err(|e| fail(e, Some(forest)))?.value;
        let bound = lower_bound(config.kind, forest.n(), k).map_err(|e| fail(e, Some(forest)))?;
        if !bound.holds_for(psi_b) {
            violations += 1;
            eprintln!(
                "violation reproducer: seed {trial_seed}, k {k}, forest {}",
                forest.to_json_string()
            );
        }
        let exact = ExactGap::new(psi_b, bound);
        if min_gap.is_none_or(|current| exact.lt(&current)) {
            min_gap = Some(exact);
        }
        records.push(TrialRecord {
            kind: kind_name(config.kind),
            source,
            n: forest.n(),
            k,
            psi_b,
            bound_ceiling: bound.ceiling,
            gap: psi_b as i64 - bound.ceiling as i64,
        });
        Ok(())
    };

    for n in config.n_min..=config.n_max {
        for k in config.k_min..=config.k_max {
            for trial in 0..config.trials_per_cell {
                let trial_seed = mix(&[config.seed, kind_tag, n as u64, k as u64, trial as u64]);
                let forest = gen_random(config.kind, n, trial_seed, config.component_bias)
                    .map_err(|source| CampaignError {
                        trial_seed,
                        forest_json: None,
                        source,
                    })?;
                push(&mut records, "random", &forest, k, trial_seed)?;
            }
        }
    }

    if config.include_extremal {
        for k in config.k_min..=config.k_max {
            for i in 1.. {
                let n = match config.kind {
                    ForestKind::Directed => k * (2 * i - 1),
                    ForestKind::Undirected => k * (2 * i - 1) + 1,
                };
                if n > config.n_max {
                    break;
                }
                if n < config.n_min {
                    continue;
                }
                let forest = match config.kind {
                    ForestKind::Directed => {
                        Forest::Directed(gen_directed_extremal(i, k).map_err(|source| {
                            CampaignError {
                                trial_seed: config.seed,
                                forest_json: None,
                                source,
                            }
                        })?)
                    }
                    ForestKind::Undirected => {
                        Forest::Undirected(gen_undirected_extremal(i, k).map_err(|source| {
                            CampaignError {
                                trial_seed: config.seed,
                                forest_json: None,
                                source,
                            }
                        })?)
                    }
                };
                push(&mut records, "extremal", &forest, k, config.seed)?;
            }
        }
    }

    let summary = CampaignSummary {
        trials: records.len(),
        violations,
        min_gap: min_gap.expect("a campaign runs at least one trial"),
    };
    Ok(CampaignReport { records, summary })
}

fn validate(config: &CampaignConfig) -> Result<(), Error> {
    if config.k_min < 2 {
        return Err(Error::InvalidK { k: config.k_min });
    }
    if config.n_min > config.n_max || config.k_min > config.k_max {
        return Err(Error::InvalidParams("empty n or k range".into()));
    }
    if config.trials_per_cell == 0 {
        return Err(Error::InvalidParams(
            "trials per cell must be positive".into(),
        ));
    }
    let domain_min = match config.kind {
        ForestKind::Directed => 1,
        ForestKind::Undirected => 2,
    };
    if config.n_min < domain_min {
        return Err(Error::InvalidParams(format!(
            "{} campaigns need n ≥ {domain_min}",
            kind_name(config.kind)
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(kind: ForestKind) -> CampaignConfig {
        CampaignConfig {
            kind,
            n_min: if kind == ForestKind::Directed { 1 } else { 2 },
            n_max: 20,
            k_min: 2,
            k_max: 3,
            trials_per_cell: 5,
            seed: 11,
            component_bias: 0.2,
            include_extremal: true,
        }
    }

    #[test]
    fn campaigns_are_deterministic_and_clean() {
        for kind in [ForestKind::Directed, ForestKind::Undirected] {
            let config = small_config(kind);
            let a = run_campaign(&config).unwrap();
            let b = run_campaign(&config).unwrap();
            assert_eq!(a.summary.violations, 0);
            assert_eq!(a.records.len(), b.records.len());
            let lines_a: Vec<String> = a
                .records
                .iter()
                .map(|r| serde_json::to_string(r).unwrap())
                .collect();
            let lines_b: Vec<String> = b
                .records
                .iter()
                .map(|r| serde_json::to_string(r).unwrap())
                .collect();
            assert_eq!(lines_a, lines_b);
        }
    }

    #[test]
    fn extremal_pool_drives_min_gap_to_zero() {
        let report = run_campaign(&small_config(ForestKind::Directed)).unwrap();
        assert!(report.summary.min_gap.is_zero());
        assert!(report
            .records
            .iter()
            .any(|r| r.source == "extremal" && r.gap == 0));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut config = small_config(ForestKind::Undirected);
        config.n_min = 1; // below the undirected domain
        assert!(run_campaign(&config).is_err());

        let mut config = small_config(ForestKind::Directed);
        config.k_min = 1;
        assert!(run_campaign(&config).is_err());

        let mut config = small_config(ForestKind::Directed);
        config.n_min = 30;
        config.n_max = 10;
        assert!(run_campaign(&config).is_err());
    }

    #[test]
    fn gap_is_nonnegative_and_ceiling_consistent() {
        let report = run_campaign(&small_config(ForestKind::Undirected)).unwrap();
        for record in &report.records {
            assert!(record.gap >= 0);
            assert_eq!(
                record.gap,
                record.psi_b as i64 - record.bound_ceiling as i64
            );
        }
    }

    #[test]
    fn full_grid_campaigns_have_zero_violations() {
        // 100 trials per cell over n up to 60 and k from 2 to 5, both kinds.
        for kind in [ForestKind::Directed, ForestKind::Undirected] {
            let config = CampaignConfig {
                kind,
                n_min: if kind == ForestKind::Directed { 1 } else { 2 },
                n_max: 60,
                k_min: 2,
                k_max: 5,
                trials_per_cell: 100,
                seed: 3,
                component_bias: 0.2,
                include_extremal: false,
            };
            let report = run_campaign(&config).unwrap();
            assert_eq!(report.summary.violations, 0);
        }
    }
}
