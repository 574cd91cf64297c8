//! Enumeration driver: runs the full case analysis over (n, c1, c2) with
//! c1 normalized to {0, -1}, assembling one audited record per candidate.
//!
//! Branching follows the discriminant c1^2 - 4c2. Nonnegative discriminant
//! routes through Bogomolov instability and the splitting criterion on
//! E(n-1); negative discriminant walks the filter chain (nef c2 bound, then
//! the Q^6 Segre obstruction, then Riemann-Roch integrality, then the
//! (-1, 1) endgame), and n >= 12 is handled wholesale by the certified sin
//! bound. Candidate evaluation is pure, so the driver fans out with rayon
//! and keeps the fixed lexicographic order.

use crate::bundle::ChernData;
use crate::error::{Error, Result};
use crate::filters::{
    gg_c2_upper, nef_c2_bound, nef_c2_bound_exact, rr_integrality, segre_nef_obstruction,
    sin_incompatibility, splitting_criterion, statements, FilterStatus, FilterVerdict,
};
use crate::rational::{rat, rat_string};
use crate::report::ReportFormat;
use crate::riemann_roch::{chi_q5, ChiFormula};
use log::trace;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

/// Which chi closed form the `chi` front end reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FormulaMode {
    Printed,
    Hrr,
    #[default]
    Both,
}

/// Run parameters for the classifier and the replay.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_min: u32,
    pub n_max: u32,
    /// Safety cap on |c2| in the enumeration.
    pub c2_max: i64,
    pub format: ReportFormat,
    /// Decimal digits for the certified sin filter.
    pub precision: u32,
    pub formula_mode: FormulaMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n_min: 5,
            n_max: 11,
            c2_max: 10,
            format: ReportFormat::Json,
            precision: 40,
            formula_mode: FormulaMode::Both,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 5 {
            return Err(Error::InvalidConfig(format!(
                "n_min must be at least 5, got {}",
                self.n_min
            )));
        }
        if self.n_max < self.n_min {
            return Err(Error::InvalidConfig(format!(
                "n_max ({}) must not be below n_min ({})",
                self.n_max, self.n_min
            )));
        }
        if self.c2_max < 3 {
            return Err(Error::InvalidConfig(format!(
                "c2_max must be at least 3, got {}",
                self.c2_max
            )));
        }
        Ok(())
    }
}

/// Discriminant branch of a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    DiscriminantNonneg,
    DiscriminantNeg,
}

/// Final status of one (n, c1, c2) candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Split,
    Cayley,
    Excluded,
    NonexistentDimension,
}

/// Audit record for one candidate: the ordered verdicts and the statements
/// they invoke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub n: u32,
    pub c1: i64,
    pub c2: i64,
    pub branch: Branch,
    pub outcome: Outcome,
    pub verdicts: Vec<FilterVerdict>,
    pub citations: Vec<String>,
}

fn citations_for(filter_id: &str) -> &'static [&'static str] {
    match filter_id {
        "bogomolov" => &[statements::BOGOMOLOV],
        "splitting_criterion" => &[
            statements::GLOBAL_GENERATION,
            statements::SPLITTING_CRITERION,
            statements::UNSTABLE_SPLITS,
        ],
        "nef_c2_bound" => &[
            statements::NEF_TWIST,
            statements::NEF_C2_BOUND,
            statements::LOW_DIMENSION_CASES,
        ],
        "segre_nef_obstruction" => &[
            statements::NEF_TWIST,
            statements::SEGRE_Q6,
            statements::LOW_DIMENSION_CASES,
        ],
        "rr_integrality" => &[statements::CHI_Q5, statements::LOW_DIMENSION_CASES],
        "cayley_endgame" => &[
            statements::CAYLEY_DEF,
            statements::SPLITTING_CRITERION,
            statements::LOW_DIMENSION_CASES,
        ],
        "gg_c2_upper" => &[
            statements::GLOBAL_GENERATION,
            statements::HIGH_DIMENSION_EMPTY,
        ],
        "sin_incompatibility" => &[statements::SIN_BOUND, statements::HIGH_DIMENSION_EMPTY],
        _ => &[],
    }
}

fn collect_citations(verdicts: &[FilterVerdict], extra: &[&str]) -> Vec<String> {
    let mut seen = Vec::new();
    for v in verdicts {
        for c in citations_for(&v.filter_id) {
            if !seen.iter().any(|s| s == c) {
                seen.push((*c).to_string());
            }
        }
    }
    for c in extra {
        if !seen.iter().any(|s| s == c) {
            seen.push((*c).to_string());
        }
    }
    seen
}

/// All candidates in lexicographic (n, c1, c2) order. Within 5 <= n <= 11
/// the positive range stops at the nef c2 bound; at n >= 12 only the safety
/// cap applies.
fn candidates(config: &RunConfig) -> Result<Vec<(u32, i64, i64)>> {
    let mut out = Vec::new();
    for n in config.n_min..=config.n_max {
        for c1 in [-1i64, 0] {
            let upper = if n <= 11 {
                nef_c2_bound(n, c1)?.min(config.c2_max)
            } else {
                config.c2_max
            };
            for c2 in -config.c2_max..=upper {
                out.push((n, c1, c2));
            }
        }
    }
    Ok(out)
}

fn push_traced(
    verdicts: &mut Vec<FilterVerdict>,
    n: u32,
    c1: i64,
    c2: i64,
    verdict: FilterVerdict,
) {
    trace!(
        "candidate=({n},{c1},{c2}) filter={} status={} witnesses={:?}",
        verdict.filter_id,
        verdict.status,
        verdict.witnesses
    );
    verdicts.push(verdict);
}

fn evaluate(n: u32, c1: i64, c2: i64, config: &RunConfig) -> Result<ClassificationRecord> {
    let d = ChernData::from_integers(c1, c2);
    let mut verdicts = Vec::new();

    if !d.discriminant().is_negative() {
        // Unstable branch: Bogomolov rules out semistability, global
        // generation of E(n-1) feeds the splitting criterion.
        let bogomolov = FilterVerdict::new(
            "bogomolov",
            FilterStatus::Pass,
            format!(
                "c1^2 >= 4c2: no semistable bundle carries this datum ({}); unstable branch",
                statements::BOGOMOLOV
            ),
        )
        .with_witness("c1_sq", (c1 * c1).to_string())
        .with_witness("four_c2", (4 * c2).to_string())
        .with_witness("discriminant", rat_string(&d.discriminant()));
        push_traced(&mut verdicts, n, c1, c2, bogomolov);

        let f = d.twist(&rat(n as i64 - 1));
        let split = splitting_criterion(n, &f);
        let forced = split.status == FilterStatus::SplitForced;
        push_traced(&mut verdicts, n, c1, c2, split);
        if !forced {
            // Cannot happen for normalized data with c2 <= c1^2/4; guard the
            // soundness claim rather than mislabel.
            return Err(Error::UnexpectedSurvivor { n, c1, c2 });
        }
        return Ok(ClassificationRecord {
            n,
            c1,
            c2,
            branch: Branch::DiscriminantNonneg,
            outcome: Outcome::Split,
            citations: collect_citations(&verdicts, &[]),
            verdicts,
        });
    }

    if n >= 12 {
        let gg = gg_c2_upper(n, &d);
        push_traced(&mut verdicts, n, c1, c2, gg);
        let sin = sin_incompatibility(n, config.precision);
        let excluded = sin.status == FilterStatus::Excluded;
        push_traced(&mut verdicts, n, c1, c2, sin);
        if !excluded {
            return Err(Error::UnexpectedSurvivor { n, c1, c2 });
        }
        return Ok(ClassificationRecord {
            n,
            c1,
            c2,
            branch: Branch::DiscriminantNeg,
            outcome: Outcome::NonexistentDimension,
            citations: collect_citations(&verdicts, &[]),
            verdicts,
        });
    }

    // 5 <= n <= 11, c1^2 < 4c2: the enumeration already kept c2 at or below
    // the nef bound; record that step with its exact witnesses.
    let bound = nef_c2_bound(n, c1)?;
    let alpha = crate::filters::alpha_for(n).expect("tabulated range");
    let bound_verdict = FilterVerdict::new(
        "nef_c2_bound",
        FilterStatus::Pass,
        format!(
            "c2 <= {bound}: within the nef bound n^2 >= alpha (c2 - c1^2/4 + n^2/4) ({}, {})",
            statements::NEF_TWIST,
            statements::NEF_C2_BOUND
        ),
    )
    .with_witness("alpha", alpha.to_string())
    .with_witness("c2", c2.to_string())
    .with_witness("c2_bound", bound.to_string())
    .with_witness("c2_bound_exact", nef_c2_bound_exact(n, c1)?.to_string());
    push_traced(&mut verdicts, n, c1, c2, bound_verdict);

    let mut outcome = None;

    if n == 6 {
        let segre = segre_nef_obstruction(n, &d)?;
        let excluded = segre.status == FilterStatus::Excluded;
        push_traced(&mut verdicts, n, c1, c2, segre);
        if excluded {
            outcome = Some(Outcome::Excluded);
        }
    }

    if outcome.is_none() {
        let rr = rr_integrality(&d)?;
        let excluded = rr.status == FilterStatus::Excluded;
        push_traced(&mut verdicts, n, c1, c2, rr);
        if excluded {
            outcome = Some(Outcome::Excluded);
        }
    }

    if outcome.is_none() {
        if (c1, c2) != (-1, 1) {
            return Err(Error::UnexpectedSurvivor { n, c1, c2 });
        }
        let chi = chi_q5(&d, ChiFormula::Hrr);
        if n == 5 {
            let endgame = FilterVerdict::new(
                "cayley_endgame",
                FilterStatus::Pass,
                format!(
                    "(c1, c2) = (-1, 1) on Q^5: if stable, this is the Cayley datum ({}); if unstable, the splitting criterion ({}) forces a split bundle, which would contradict c1^2 < 4c2 - inference gap flagged",
                    statements::CAYLEY_DEF,
                    statements::SPLITTING_CRITERION
                ),
            )
            .with_witness("chi_hrr", rat_string(&chi))
            .with_witness("discriminant", rat_string(&d.discriminant()));
            push_traced(&mut verdicts, n, c1, c2, endgame);
            outcome = Some(Outcome::Cayley);
        } else {
            let endgame = FilterVerdict::new(
                "cayley_endgame",
                FilterStatus::Excluded,
                format!(
                    "(c1, c2) = (-1, 1) at n = {n} > 5: a stable candidate restricts to the Cayley bundle on Q^5, and no Cayley bundle extends to Q^6; an unstable one splits by {} and contradicts c1^2 < 4c2 - inference gap flagged",
                    statements::SPLITTING_CRITERION
                ),
            )
            .with_witness("restricted_c1", c1.to_string())
            .with_witness("restricted_c2", c2.to_string())
            .with_witness("chi_hrr", rat_string(&chi));
            push_traced(&mut verdicts, n, c1, c2, endgame);
            outcome = Some(Outcome::Excluded);
        }
    }

    let outcome = outcome.expect("outcome decided above");
    let extra: &[&str] = if outcome == Outcome::Cayley {
        &[statements::MAIN_THEOREM]
    } else {
        &[]
    };
    Ok(ClassificationRecord {
        n,
        c1,
        c2,
        branch: Branch::DiscriminantNeg,
        outcome,
        citations: collect_citations(&verdicts, extra),
        verdicts,
    })
}

fn finish(mut records: Vec<ClassificationRecord>) -> Vec<ClassificationRecord> {
    records.sort_by_key(|r| (r.n, r.c1, r.c2));
    records
}

/// Run the full case analysis, evaluating candidates in parallel and merging
/// the results back into lexicographic (n, c1, c2) order.
pub fn classify(config: &RunConfig) -> Result<Vec<ClassificationRecord>> {
    config.validate()?;
    let cands = candidates(config)?;
    let records = cands
        .par_iter()
        .map(|&(n, c1, c2)| evaluate(n, c1, c2, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(records))
}

/// Serial reference run; must produce exactly the record set of `classify`.
pub fn classify_serial(config: &RunConfig) -> Result<Vec<ClassificationRecord>> {
    config.validate()?;
    let records = candidates(config)?
        .into_iter()
        .map(|(n, c1, c2)| evaluate(n, c1, c2, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_has_exactly_one_cayley_record() {
        let records = classify(&RunConfig::default()).unwrap();
        let survivors: Vec<_> = records
            .iter()
            .filter(|r| !matches!(r.outcome, Outcome::Split | Outcome::Excluded))
            .collect();
        assert_eq!(survivors.len(), 1);
        let cayley = survivors[0];
        assert_eq!(
            (cayley.n, cayley.c1, cayley.c2, cayley.outcome),
            (5, -1, 1, Outcome::Cayley)
        );
    }

    #[test]
    fn q6_c2_3_is_excluded_by_segre() {
        let records = classify(&RunConfig::default()).unwrap();
        let r = records
            .iter()
            .find(|r| (r.n, r.c1, r.c2) == (6, 0, 3))
            .unwrap();
        assert_eq!(r.outcome, Outcome::Excluded);
        let segre = r
            .verdicts
            .iter()
            .find(|v| v.filter_id == "segre_nef_obstruction")
            .unwrap();
        assert_eq!(segre.status, FilterStatus::Excluded);
        assert_eq!(segre.witnesses["s_6_normalized"], "-3456");
    }

    #[test]
    fn dimension_twelve_is_wholesale_nonexistent() {
        let config = RunConfig {
            n_min: 12,
            n_max: 12,
            ..RunConfig::default()
        };
        let records = classify(&config).unwrap();
        assert!(!records.is_empty());
        for r in records {
            match r.branch {
                Branch::DiscriminantNeg => {
                    assert_eq!(r.outcome, Outcome::NonexistentDimension, "{r:?}")
                }
                Branch::DiscriminantNonneg => assert_eq!(r.outcome, Outcome::Split),
            }
        }
    }

    #[test]
    fn split_records_carry_split_forced_verdicts() {
        let records = classify(&RunConfig::default()).unwrap();
        for r in records.iter().filter(|r| r.outcome == Outcome::Split) {
            assert_eq!(r.branch, Branch::DiscriminantNonneg);
            assert!(r
                .verdicts
                .iter()
                .any(|v| v.status == FilterStatus::SplitForced));
        }
    }

    #[test]
    fn excluded_records_cite_required_statements() {
        let required = [
            statements::BOGOMOLOV,
            statements::SPLITTING_CRITERION,
            statements::SIN_BOUND,
            statements::SEGRE_Q6,
            statements::CHI_Q5,
            statements::HIGH_DIMENSION_EMPTY,
            statements::LOW_DIMENSION_CASES,
        ];
        let config = RunConfig {
            n_max: 13,
            ..RunConfig::default()
        };
        for r in classify(&config).unwrap() {
            if r.outcome == Outcome::Excluded {
                assert!(
                    r.citations.iter().any(|c| required.contains(&c.as_str())),
                    "missing required citation: {r:?}"
                );
                assert!(r
                    .verdicts
                    .iter()
                    .any(|v| v.status == FilterStatus::Excluded));
            }
        }
    }

    #[test]
    fn deciding_verdicts_always_carry_witnesses() {
        let config = RunConfig {
            n_max: 13,
            ..RunConfig::default()
        };
        for r in classify(&config).unwrap() {
            for v in &r.verdicts {
                v.check_witness_invariant();
            }
        }
    }

    #[test]
    fn high_dimension_records_chain_gg_then_sin() {
        let config = RunConfig {
            n_min: 12,
            n_max: 12,
            ..RunConfig::default()
        };
        let records = classify(&config).unwrap();
        let r = records
            .iter()
            .find(|r| r.branch == Branch::DiscriminantNeg)
            .unwrap();
        let ids: Vec<&str> = r.verdicts.iter().map(|v| v.filter_id.as_str()).collect();
        assert_eq!(ids, ["gg_c2_upper", "sin_incompatibility"]);
        assert!(r.citations.iter().any(|c| c == statements::SIN_BOUND));
    }

    #[test]
    fn parallel_and_serial_runs_agree() {
        let config = RunConfig {
            n_max: 12,
            ..RunConfig::default()
        };
        assert_eq!(
            classify(&config).unwrap(),
            classify_serial(&config).unwrap()
        );
    }

    #[test]
    fn config_validation() {
        let bad = RunConfig {
            n_min: 4,
            ..RunConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
        let bad = RunConfig {
            c2_max: 2,
            ..RunConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
        let bad = RunConfig {
            n_min: 8,
            n_max: 7,
            ..RunConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn enumeration_respects_bounds() {
        let records = classify(&RunConfig::default()).unwrap();
        for r in &records {
            assert!(r.c2 <= if r.n == 6 { 3 } else { 2 });
            assert!(r.c2 >= -10);
            assert!(matches!(r.c1, 0 | -1));
        }
        // The n = 6 chain includes c2 = 3 for both c1 values.
        assert!(records.iter().any(|r| (r.n, r.c1, r.c2) == (6, 0, 3)));
        assert!(records.iter().any(|r| (r.n, r.c1, r.c2) == (6, -1, 3)));
    }
}
