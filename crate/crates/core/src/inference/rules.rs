use alloc::vec::Vec;

use super::facts::{Bound, FactTable, Facts, GrFact, Interval, Target};
use super::{FiberDim, FiltrationDoc, NodeAnnotation, NodeKind};

/// The rules of the rank calculus. Each rule only adds information: it
/// proposes facts that are met with the current ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// A one-layer filtration is the algebra itself.
    R0,
    /// `RR(C(X)) = dim X` for compact `X`.
    R1,
    /// Separable, continuous trace, infinite-dimensional irreps and a
    /// finite-dimensional spectrum: `RR ≤ 1`.
    R2,
    /// Extension by an `R2`-type ideal: `RR(A) = max(RR(J), RR(A/J))`.
    R3,
    /// Filtration whose layers below the top are `R2`-type:
    /// `RR(A) = max_j RR(J_j/J_{j−1})`.
    R4,
    /// A locally closed subset of a metric space has dimension at most that
    /// of the space.
    R5,
    /// `RR(A) ≥ dim Γ*` for a commutative top quotient `C_0(Γ)`.
    R6,
    /// `tsr(C(X)) = 1 + ⌊dim X / 2⌋`.
    R7,
    /// Stable algebras: `tsr ≤ 2`.
    R8,
    /// `tsr(A) ≥ max(tsr(J), tsr(A/J))`, along the whole filtration.
    R9,
    /// Extension by an `R2`-type ideal: `tsr(A) ≤ max(2, tsr(A/J))`.
    R10,
    /// Filtration version of `R10`: `tsr(A) ≤ max(2, tsr(A/J_{n−1}))`.
    R11,
    /// Hausdorff spectrum without compact components: no projections.
    R12,
    /// `Gr(A/J) = 0 ⇒ Gr(A) = Gr(J)`.
    R13,
    /// Chain version of `R13`: `Gr(A) = Gr(J_1)`.
    R14,
    /// Liminary with a special solving series (fibers infinite except the top
    /// one, which is 1-dimensional): `RR(A) = dim Γ_n`.
    R15,
    /// No projections in a nonzero algebra: `RR ≥ 1`.
    R16,
    /// The compacts: `RR(K) = 0`, `tsr(K) = 1`. Standard, not derived here.
    R17,
    /// `C*(G)` with `G ≠ ℝ`: `tsr ≥ 2`.
    R18,
}

impl RuleId {
    pub const ALL: [RuleId; 19] = [
        Self::R0,
        Self::R1,
        Self::R2,
        Self::R3,
        Self::R4,
        Self::R5,
        Self::R6,
        Self::R7,
        Self::R8,
        Self::R9,
        Self::R10,
        Self::R11,
        Self::R12,
        Self::R13,
        Self::R14,
        Self::R15,
        Self::R16,
        Self::R17,
        Self::R18,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::R0 => "R0",
            Self::R1 => "R1",
            Self::R2 => "R2",
            Self::R3 => "R3",
            Self::R4 => "R4",
            Self::R5 => "R5",
            Self::R6 => "R6",
            Self::R7 => "R7",
            Self::R8 => "R8",
            Self::R9 => "R9",
            Self::R10 => "R10",
            Self::R11 => "R11",
            Self::R12 => "R12",
            Self::R13 => "R13",
            Self::R14 => "R14",
            Self::R15 => "R15",
            Self::R16 => "R16",
            Self::R17 => "R17",
            Self::R18 => "R18",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Self::R0 => "single layer: the algebra is its only subquotient",
            Self::R1 => "commutative, compact(ified) spectrum of dimension d: RR = d",
            Self::R2 => "separable continuous-trace, infinite-dimensional irreps, finite-dimensional spectrum: RR <= 1",
            Self::R3 => "extension by such an ideal: RR(A) = max(RR(J), RR(A/J))",
            Self::R4 => "filtration with such lower layers: RR(A) = max over layers",
            Self::R5 => "locally closed in a metric space of dimension m: dim spectrum <= m",
            Self::R6 => "commutative top quotient C_0(G): RR(A) >= dim of its compactification",
            Self::R7 => "commutative, compact(ified) spectrum of dimension d: tsr = 1 + floor(d/2)",
            Self::R8 => "stable or elementary: tsr <= 2",
            Self::R9 => "ideals and quotients: tsr(A) >= tsr of every layer",
            Self::R10 => "extension by an R2-type ideal: tsr(A) <= max(2, tsr(A/J))",
            Self::R11 => "filtration with R2-type lower layers: tsr(A) <= max(2, tsr(top))",
            Self::R12 => "Hausdorff spectrum with no compact component: no projections",
            Self::R13 => "quotient without projections: Gr(A) = Gr(J)",
            Self::R14 => "layers above the first without projections: Gr(A) = Gr(J_1)",
            Self::R15 => "liminary special solving series: RR(A) = dim of the top spectrum",
            Self::R16 => "nonzero algebra without projections: RR >= 1",
            Self::R17 => "compact operators: RR = 0, tsr = 1 (standard fact, not derived here)",
            Self::R18 => "group algebra of a group other than R: tsr >= 2",
        }
    }

    /// Rules that encode facts from outside the rank calculus proper.
    pub fn is_external_fact(self) -> bool {
        self == Self::R17
    }

    pub(crate) fn apply(self, doc: &FiltrationDoc, t: &FactTable, out: &mut Vec<(Target, Facts)>) {
        let nodes = doc.nodes();
        let n = nodes.len();
        let ann = |i: usize| &nodes[i].annotation;
        let top = n - 1;
        let lower_r2 = (0..top).all(|i| r2_type(ann(i), t.get(Target::Node(i))));
        match self {
            Self::R0 => {
                if n == 1 {
                    let node = *t.get(Target::Node(0));
                    let total = *t.get(Target::Total);
                    out.push((Target::Total, without_spectrum(node)));
                    out.push((Target::Node(0), without_spectrum(total)));
                }
            }
            Self::R1 | Self::R7 => {
                for i in 0..n {
                    if let Some(d) = compactified_dim(ann(i)) {
                        let facts = if self == Self::R1 {
                            Facts::with_rr(Interval::exactly(d))
                        } else {
                            Facts::with_tsr(Interval::exactly(1 + d / 2))
                        };
                        out.push((Target::Node(i), facts));
                    }
                }
            }
            Self::R2 => {
                for i in 0..n {
                    if r2_type(ann(i), t.get(Target::Node(i))) {
                        out.push((Target::Node(i), Facts::with_rr(Interval::between(0, 1))));
                    }
                }
            }
            Self::R3 | Self::R4 => {
                let applies = if self == Self::R3 { n == 2 } else { n >= 3 };
                if applies && lower_r2 {
                    out.push((Target::Total, Facts::with_rr(max_of(t, n, |f| f.rr))));
                }
            }
            Self::R5 => {
                for i in 0..n {
                    if let Some(m) = ann(i).ambient_dim {
                        let facts = Facts {
                            spectrum_dim_bound: Some(m),
                            ..Facts::TOP
                        };
                        out.push((Target::Node(i), facts));
                    }
                }
            }
            Self::R6 => {
                if let Some(d) = compactified_dim(ann(top)) {
                    out.push((Target::Total, Facts::with_rr(Interval::at_least(d))));
                }
            }
            Self::R8 => {
                for i in 0..n {
                    let a = ann(i);
                    if a.kind == NodeKind::Elementary
                        || a.stable == Some(true)
                        || r2_type(a, t.get(Target::Node(i)))
                    {
                        out.push((Target::Node(i), Facts::with_tsr(Interval::between(1, 2))));
                    }
                }
            }
            Self::R9 => {
                if n >= 2 {
                    let lo = (0..n).map(|i| t.get(Target::Node(i)).tsr.lo).max().unwrap_or(1);
                    out.push((Target::Total, Facts::with_tsr(Interval::at_least(lo))));
                }
            }
            Self::R10 | Self::R11 => {
                let applies = if self == Self::R10 { n == 2 } else { n >= 3 };
                if applies && lower_r2 {
                    if let Bound::Finite(h) = t.get(Target::Node(top)).tsr.hi {
                        let facts = Facts::with_tsr(Interval::between(1, h.max(2)));
                        out.push((Target::Total, facts));
                    }
                }
            }
            Self::R12 => {
                for i in 0..n {
                    let a = ann(i);
                    if a.hausdorff_spectrum == Some(true)
                        && a.no_compact_spectrum_component == Some(true)
                    {
                        out.push((Target::Node(i), Facts::with_gr(GrFact::Zero)));
                    }
                }
            }
            Self::R13 | Self::R14 => {
                let applies = if self == Self::R13 { n == 2 } else { n >= 3 };
                let upper_zero = (1..n).all(|i| t.get(Target::Node(i)).gr == GrFact::Zero);
                if applies && upper_zero {
                    let gr = if t.get(Target::Node(0)).gr == GrFact::Zero {
                        GrFact::Zero
                    } else {
                        GrFact::EqualsFirstIdeal
                    };
                    out.push((Target::Total, Facts::with_gr(gr)));
                }
            }
            Self::R15 => {
                let fibers_ok = (0..top).all(|i| ann(i).fiber_dim == Some(FiberDim::Infinite))
                    && ann(top).fiber_dim == Some(FiberDim::Finite(1));
                if doc.flags().liminary == Some(true) && fibers_ok {
                    if let Some(d) = ann(top).spectrum_dim {
                        out.push((Target::Total, Facts::with_rr(Interval::exactly(d))));
                    }
                }
            }
            Self::R16 => {
                for target in (0..n).map(Target::Node).chain([Target::Total]) {
                    if t.get(target).gr == GrFact::Zero {
                        out.push((target, Facts::with_rr(Interval::at_least(1))));
                    }
                }
            }
            Self::R17 => {
                for i in 0..n {
                    if ann(i).kind == NodeKind::Elementary {
                        let facts = Facts {
                            rr: Interval::exactly(0),
                            tsr: Interval::exactly(1),
                            ..Facts::TOP
                        };
                        out.push((Target::Node(i), facts));
                    }
                }
            }
            Self::R18 => {
                let flags = doc.flags();
                if flags.group_derived && !flags.real_line {
                    out.push((Target::Total, Facts::with_tsr(Interval::at_least(2))));
                }
            }
        }
    }
}

fn without_spectrum(f: Facts) -> Facts {
    Facts {
        spectrum_dim_bound: None,
        ..f
    }
}

/// Hypotheses of `R2`. Finiteness of the spectrum dimension may come from the
/// annotation or from an `R5` bound.
fn r2_type(a: &NodeAnnotation, facts: &Facts) -> bool {
    matches!(a.kind, NodeKind::ContinuousTrace | NodeKind::Elementary)
        && a.separable == Some(true)
        && a.irreps_infinite_dim == Some(true)
        && (a.spectrum_dim.is_some() || facts.spectrum_dim_bound.is_some())
}

/// Covering dimension of the (one-point compactified) spectrum of a
/// commutative node, when known.
fn compactified_dim(a: &NodeAnnotation) -> Option<u32> {
    if a.kind != NodeKind::Commutative {
        return None;
    }
    match a.spectrum_compact {
        Some(true) => a.spectrum_dim,
        _ => a.compactification_dim,
    }
}

/// `max` of intervals: lower ends combine by max; the upper end is the max of
/// the upper ends and stays unbounded if any of them is.
fn max_of(t: &FactTable, n: usize, pick: impl Fn(&Facts) -> Interval) -> Interval {
    let intervals: Vec<Interval> = (0..n).map(|i| pick(t.get(Target::Node(i)))).collect();
    let lo = intervals.iter().map(|i| i.lo).max().unwrap_or(0);
    let hi = intervals
        .iter()
        .map(|i| i.hi)
        .max()
        .unwrap_or(Bound::Unbounded);
    Interval { lo, hi }
}
