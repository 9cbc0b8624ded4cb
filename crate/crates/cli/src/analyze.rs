//! Input resolution and the full analysis pipeline behind `analyze`.

use std::fs;

use orbit_rank_core::coadjoint::{
    estimate_open_orbit_components, has_open_orbits, p_polynomial, pfaffian_polynomial,
};
use orbit_rank_core::inference::{derive_group_filtration, infer, Interval};
use orbit_rank_core::invariants::{
    projection_verdict_with, real_rank, rr_upper_bound_nonsimply_connected, stable_rank,
    GroupFlags, Refusal,
};
use orbit_rank_core::lie::{
    catalog, direct_sum, exponentiality_check, structure_report, ExponentialityStatus, LieError,
};
use orbit_rank_core::LieAlgebra;
use thiserror::Error;

use crate::lie_file::{parse_algebra, render_bracket, render_combination, LieFileError};
use crate::report::{
    AlgebraSection, AnalysisReport, CoadjointSection, EstimateSection, ExponentialitySection,
    InferenceSection, InvariantsSection, ProjectionsSection, RefusalSection, StructureSection,
};

pub const CATALOG_PREFIX: &str = "catalog:";

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: LieFileError,
    },
    #[error("{0}")]
    Catalog(#[from] LieError),
}

/// Builds the algebra named by a catalog spec such as `heisenberg:2`,
/// `grelaud:-1/2` or `axb+axb` (a direct sum).
pub fn catalog_algebra(spec: &str) -> Result<LieAlgebra, LieError> {
    let mut result: Option<LieAlgebra> = None;
    for summand in spec.split('+') {
        let mut parts = summand.split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let l = catalog(name, &params)?;
        result = Some(match result {
            None => l,
            Some(acc) => direct_sum(&acc, &l)?,
        });
    }
    Ok(result.expect("split yields at least one summand"))
}

/// Reads a `.lie` file, or builds a catalog algebra for `catalog:<spec>`.
pub fn load_algebra(input: &str) -> Result<LieAlgebra, InputError> {
    if let Some(spec) = input.strip_prefix(CATALOG_PREFIX) {
        return Ok(catalog_algebra(spec)?);
    }
    let text = fs::read_to_string(input).map_err(|source| InputError::Io {
        path: input.to_string(),
        source,
    })?;
    parse_algebra(&text).map_err(|source| InputError::Parse {
        path: input.to_string(),
        source,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub samples: usize,
    pub seed: u64,
    pub trials: usize,
    pub assume_exponential: bool,
    pub simply_connected: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            samples: 200,
            seed: 0,
            trials: 50,
            assume_exponential: false,
            simply_connected: true,
        }
    }
}

const REAL_LINE_NOTE: &str = "stable rank 1 is reported exactly for dim g = 1, the group R";

fn refusal_section(l: &LieAlgebra, refusal: &Refusal) -> RefusalSection {
    RefusalSection {
        reason: refusal.code(),
        message: refusal.to_string(),
        witness: match refusal {
            Refusal::NotExponential { witness } => Some(render_combination(l.names(), witness)),
            _ => None,
        },
    }
}

/// Runs every stage on `l`. Stages that need the closed-form hypotheses are
/// replaced by a refusal when those fail.
pub fn analyze(l: &LieAlgebra, options: &AnalyzeOptions) -> AnalysisReport {
    let names = l.names();
    let algebra = AlgebraSection {
        dim: l.dim(),
        basis: names.to_vec(),
        brackets: l
            .brackets()
            .iter()
            .map(|(&(j, k), v)| render_bracket(l, j, k, v))
            .collect(),
    };

    let s = structure_report(l);
    let structure = StructureSection {
        derived_series_dims: s.derived_series_dims,
        lower_central_series_dims: s.lower_central_series_dims,
        solvable: s.solvable,
        nilpotent: s.nilpotent,
        abelianization_dim: s.abelianization_dim,
        center_dim: s.center_dim,
    };

    let mut verdict = exponentiality_check(l, options.seed, options.trials);
    if options.assume_exponential && verdict.status == ExponentialityStatus::HeuristicYes {
        verdict.status = ExponentialityStatus::Asserted;
    }
    let exponentiality = ExponentialitySection {
        status: verdict.status.as_str(),
        witness: verdict.witness.as_ref().map(|w| render_combination(names, w)),
        witness_coordinates: verdict
            .witness
            .as_ref()
            .map(|w| w.iter().map(ToString::to_string).collect()),
        candidates_checked: verdict.candidates_checked,
        trials: options.trials,
        seed: options.seed,
    };

    let dual_names: Vec<String> = names.iter().map(|n| format!("xi_{n}")).collect();
    let open = has_open_orbits(l);
    let estimate = open.then(|| {
        let e = estimate_open_orbit_components(l, options.samples, options.seed);
        EstimateSection {
            component_count: e.component_count,
            samples: e.sample_count,
            seed: e.seed,
            rejected: e.rejected,
            certificate_edges: e.certificates.len(),
        }
    });
    let coadjoint = CoadjointSection {
        pfaffian: pfaffian_polynomial(l).render(&dual_names),
        p_polynomial: p_polynomial(l).render(&dual_names),
        open_orbits: open,
        component_estimate: estimate.clone(),
    };

    let mut flags = GroupFlags::new(verdict.clone());
    flags.simply_connected = options.simply_connected;

    let mut report = AnalysisReport {
        algebra,
        structure,
        exponentiality,
        invariants: None,
        coadjoint,
        projections: None,
        inference: None,
        refused: None,
    };

    let closed = real_rank(l, &flags).and_then(|rr| Ok((rr, stable_rank(l, &flags)?)));
    let (rr, tsr) = match closed {
        Ok(v) => v,
        Err(refusal) => {
            if refusal == Refusal::NotSimplyConnected {
                if let Ok(bound) = rr_upper_bound_nonsimply_connected(l, &verdict) {
                    report.invariants = Some(InvariantsSection {
                        banner: flags.hypothesis_banner(),
                        simply_connected: false,
                        real_rank: None,
                        stable_rank: None,
                        real_rank_upper_bound: Some(bound.value),
                        possibly_strict: Some(bound.possibly_strict),
                        notes: vec!["the bound assumes the universal cover is exponential"],
                    });
                }
            }
            report.refused = Some(refusal_section(l, &refusal));
            return report;
        }
    };
    report.invariants = Some(InvariantsSection {
        banner: flags.hypothesis_banner(),
        simply_connected: true,
        real_rank: Some(rr),
        stable_rank: Some(tsr),
        real_rank_upper_bound: None,
        possibly_strict: None,
        notes: vec![REAL_LINE_NOTE],
    });

    let counted = estimate.map(|e| e.component_count);
    let p = projection_verdict_with(l, &flags, || counted.expect("estimated when orbits are open"))
        .expect("hypotheses already checked");
    let estimated = p.open_orbit_count_estimate.is_some();
    report.projections = Some(ProjectionsSection {
        verdict: p.verdict.as_str(),
        gr_equals_j0: p.gr_equals_j0,
        j0_proper: p.j0_proper,
        open_orbit_count_estimate: p.open_orbit_count_estimate,
        samples: estimated.then_some(options.samples),
        seed: estimated.then_some(options.seed),
    });

    let doc = derive_group_filtration(l, &flags).expect("hypotheses already checked");
    let table = infer(&doc).expect("derived filtrations are consistent");
    let total = table.total();
    let agreement = total.rr == Interval::exactly(rr as u32) && total.tsr == Interval::exactly(tsr as u32);
    let mut external: Vec<&'static str> = table
        .trace()
        .iter()
        .filter(|e| e.rule.is_external_fact())
        .map(|e| e.rule.as_str())
        .collect();
    external.sort_unstable();
    external.dedup();
    report.inference = Some(InferenceSection {
        rr: total.rr.into(),
        tsr: total.tsr.into(),
        gr: total.gr.as_str(),
        agreement,
        trace_length: table.trace().len(),
        external_facts_used: external,
        nodes: table.names().to_vec(),
        notes: doc.notes().to_vec(),
    });
    report
}
