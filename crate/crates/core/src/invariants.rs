//! Closed-form C*-invariants of `C*(G)` for an exponential Lie group `G`:
//! real rank `r = dim g/[g,g]`, stable rank `1 + max(⌊r/2⌋, 1)` (or `1` for
//! `G = ℝ`), the upper bound for quotients of an exponential universal cover,
//! and the projection verdict.

use alloc::vec::Vec;

use thiserror::Error;

use crate::coadjoint::{estimate_open_orbit_components, has_open_orbits};
use crate::lie::{
    abelianization_dim, is_nilpotent, is_solvable, ExponentialityStatus, ExponentialityVerdict,
    LieAlgebra,
};
use crate::linalg::Rat;

/// Why a closed-form theorem does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Refusal {
    #[error("the algebra is not solvable, so the group is not exponential")]
    NotSolvable,
    #[error("the group is not exponential: ad(X) has a nonzero purely imaginary eigenvalue")]
    NotExponential { witness: Vec<Rat> },
    #[error("the group is not simply connected; only the upper bound for the real rank applies")]
    NotSimplyConnected,
    #[error("the zero-dimensional algebra is outside the scope of the rank formulas")]
    TrivialAlgebra,
}

impl Refusal {
    pub fn code(&self) -> &'static str {
        match self {
            Self::NotSolvable => "NotSolvable",
            Self::NotExponential { .. } => "NotExponential",
            Self::NotSimplyConnected => "NotSimplyConnected",
            Self::TrivialAlgebra => "TrivialAlgebra",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFlags {
    pub simply_connected: bool,
    pub exponentiality: ExponentialityVerdict,
}

impl GroupFlags {
    pub fn new(exponentiality: ExponentialityVerdict) -> Self {
        Self {
            simply_connected: true,
            exponentiality,
        }
    }

    /// The banner every closed-form result carries, stating how the
    /// exponentiality hypothesis was established.
    pub fn hypothesis_banner(&self) -> &'static str {
        match self.exponentiality.status {
            ExponentialityStatus::HeuristicYes => "hypothesis: exponential (heuristic)",
            ExponentialityStatus::Asserted => "hypothesis: exponential (asserted)",
            ExponentialityStatus::CertifiedNo => "hypothesis: refuted",
        }
    }
}

fn check_exponential(l: &LieAlgebra, verdict: &ExponentialityVerdict) -> Result<(), Refusal> {
    if !is_solvable(l) {
        return Err(Refusal::NotSolvable);
    }
    if l.dim() == 0 {
        return Err(Refusal::TrivialAlgebra);
    }
    if verdict.is_refuted() {
        return Err(Refusal::NotExponential {
            witness: verdict.witness.clone().unwrap_or_default(),
        });
    }
    Ok(())
}

pub(crate) fn check(l: &LieAlgebra, flags: &GroupFlags) -> Result<(), Refusal> {
    check_exponential(l, &flags.exponentiality)?;
    if !flags.simply_connected {
        return Err(Refusal::NotSimplyConnected);
    }
    Ok(())
}

/// `RR(C*(G)) = dim g/[g,g]`.
pub fn real_rank(l: &LieAlgebra, flags: &GroupFlags) -> Result<usize, Refusal> {
    check(l, flags)?;
    Ok(abelianization_dim(l))
}

/// `tsr(C*(G)) = 1` when `G = ℝ` (read as `dim g = 1`), otherwise
/// `1 + max(⌊r/2⌋, 1)`.
pub fn stable_rank(l: &LieAlgebra, flags: &GroupFlags) -> Result<usize, Refusal> {
    check(l, flags)?;
    if l.dim() == 1 {
        return Ok(1);
    }
    Ok(1 + (abelianization_dim(l) / 2).max(1))
}

/// Upper bound on the real rank of a connected group whose universal cover is
/// exponential. The bound can be strict (the circle group has real rank 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealRankBound {
    pub value: usize,
    pub possibly_strict: bool,
}

pub fn rr_upper_bound_nonsimply_connected(
    l: &LieAlgebra,
    cover_exponentiality: &ExponentialityVerdict,
) -> Result<RealRankBound, Refusal> {
    check_exponential(l, cover_exponentiality)?;
    Ok(RealRankBound {
        value: abelianization_dim(l),
        possibly_strict: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionStatus {
    /// Nilpotent: `C*(G)` has no nonzero projections.
    NoneNilpotent,
    /// Open coadjoint orbits exist, each contributing a copy of the compacts
    /// to the ideal generated by projections.
    ExistsOpenOrbits,
    Unknown,
}

impl ProjectionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NoneNilpotent => "none_nilpotent",
            Self::ExistsOpenOrbits => "exists_open_orbits",
            Self::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionVerdict {
    pub verdict: ProjectionStatus,
    /// Every projection lies in the ideal `J_0`, the intersection of the
    /// kernels of all characters.
    pub gr_equals_j0: bool,
    /// `J_0 ≠ C*(G)`; holds whenever `dim g > 0`.
    pub j0_proper: bool,
    pub open_orbit_count_estimate: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EstimatorParams {
    pub samples: usize,
    pub seed: u64,
}

impl Default for EstimatorParams {
    fn default() -> Self {
        Self {
            samples: 200,
            seed: 0,
        }
    }
}

pub fn projection_verdict(
    l: &LieAlgebra,
    flags: &GroupFlags,
    params: EstimatorParams,
) -> Result<ProjectionVerdict, Refusal> {
    projection_verdict_with(l, flags, || {
        estimate_open_orbit_components(l, params.samples, params.seed).component_count
    })
}

/// [`projection_verdict`] with the open-orbit count supplied by the caller,
/// who may already hold an estimate. `count` is only called when open orbits
/// exist.
pub fn projection_verdict_with(
    l: &LieAlgebra,
    flags: &GroupFlags,
    count: impl FnOnce() -> usize,
) -> Result<ProjectionVerdict, Refusal> {
    check(l, flags)?;
    let (verdict, estimate) = if is_nilpotent(l) {
        (ProjectionStatus::NoneNilpotent, None)
    } else if has_open_orbits(l) {
        (ProjectionStatus::ExistsOpenOrbits, Some(count()))
    } else {
        (ProjectionStatus::Unknown, None)
    };
    Ok(ProjectionVerdict {
        verdict,
        gr_equals_j0: true,
        j0_proper: l.dim() > 0,
        open_orbit_count_estimate: estimate,
    })
}
