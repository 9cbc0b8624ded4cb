use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::rules::RuleId;
use super::{FiltrationDoc, InferenceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    Finite(u32),
    Unbounded,
}

impl Bound {
    pub fn finite(self) -> Option<u32> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Unbounded => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(v) => write!(f, "{v}"),
            Self::Unbounded => write!(f, "inf"),
        }
    }
}

/// `[lo, hi]` over the naturals; `hi` may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: u32,
    pub hi: Bound,
}

impl Interval {
    pub const fn at_least(lo: u32) -> Self {
        Self {
            lo,
            hi: Bound::Unbounded,
        }
    }

    pub const fn exactly(v: u32) -> Self {
        Self {
            lo: v,
            hi: Bound::Finite(v),
        }
    }

    pub const fn between(lo: u32, hi: u32) -> Self {
        Self {
            lo,
            hi: Bound::Finite(hi),
        }
    }

    pub fn singleton(&self) -> Option<u32> {
        (self.hi == Bound::Finite(self.lo)).then_some(self.lo)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.hi, Bound::Finite(h) if h < self.lo)
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn width_bound(&self) -> u32 {
        match self.hi {
            Bound::Finite(h) => h.saturating_sub(self.lo),
            Bound::Unbounded => super::MAX_FINITE + 1,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// What is known about the projections `Gr(·)`. Ordered by information:
/// knowing `Gr(A) = {0}` refines knowing `Gr(A) = Gr(J_1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrFact {
    Unknown,
    EqualsFirstIdeal,
    Zero,
}

impl GrFact {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Unknown => "unknown",
            Self::EqualsFirstIdeal => "equals_first_ideal",
            Self::Zero => "zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Facts {
    pub rr: Interval,
    pub tsr: Interval,
    pub gr: GrFact,
    /// Upper bound on the covering dimension of the spectrum.
    pub spectrum_dim_bound: Option<u32>,
}

impl Facts {
    /// No information: `RR ∈ [0, ∞]`, `tsr ∈ [1, ∞]`.
    pub const TOP: Facts = Facts {
        rr: Interval::at_least(0),
        tsr: Interval::at_least(1),
        gr: GrFact::Unknown,
        spectrum_dim_bound: None,
    };

    /// Combines two pieces of information about the same algebra.
    pub fn meet(&self, other: &Facts) -> Facts {
        Facts {
            rr: self.rr.intersect(&other.rr),
            tsr: self.tsr.intersect(&other.tsr),
            gr: self.gr.max(other.gr),
            spectrum_dim_bound: match (self.spectrum_dim_bound, other.spectrum_dim_bound) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }

    pub fn with_rr(rr: Interval) -> Facts {
        Facts { rr, ..Facts::TOP }
    }

    pub fn with_tsr(tsr: Interval) -> Facts {
        Facts { tsr, ..Facts::TOP }
    }

    pub fn with_gr(gr: GrFact) -> Facts {
        Facts { gr, ..Facts::TOP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Node(usize),
    Total,
}

/// One rule firing that changed the facts of `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: RuleId,
    pub target: Target,
    pub before: Facts,
    pub after: Facts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactTable {
    pub(crate) names: Vec<String>,
    pub(crate) nodes: Vec<Facts>,
    pub(crate) total: Facts,
    pub(crate) trace: Vec<TraceEntry>,
}

impl FactTable {
    /// Facts implied by the document's seed annotations alone.
    pub fn initial(doc: &FiltrationDoc) -> Result<FactTable, InferenceError> {
        let mut nodes = Vec::with_capacity(doc.nodes().len());
        for node in doc.nodes() {
            let a = &node.annotation;
            let rr = Interval {
                lo: a.seed_rr_lo.unwrap_or(0),
                hi: a.seed_rr_hi.map_or(Bound::Unbounded, Bound::Finite),
            };
            let tsr = Interval {
                lo: a.seed_tsr_lo.unwrap_or(1).max(1),
                hi: a.seed_tsr_hi.map_or(Bound::Unbounded, Bound::Finite),
            };
            for i in [rr, tsr] {
                if i.is_empty() {
                    return Err(InferenceError::Contradiction {
                        target: node.name.clone(),
                        rule: String::from("seed"),
                        lo: i.lo,
                        hi: i.hi.finite().unwrap_or(0),
                    });
                }
            }
            nodes.push(Facts {
                rr,
                tsr,
                gr: GrFact::Unknown,
                spectrum_dim_bound: a.spectrum_dim,
            });
        }
        Ok(FactTable {
            names: doc.nodes().iter().map(|n| n.name.clone()).collect(),
            nodes,
            total: Facts::TOP,
            trace: Vec::new(),
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nodes(&self) -> &[Facts] {
        &self.nodes
    }

    pub fn total(&self) -> &Facts {
        &self.total
    }

    pub fn trace(&self) -> &[TraceEntry] {
        &self.trace
    }

    pub fn get(&self, target: Target) -> &Facts {
        match target {
            Target::Node(i) => &self.nodes[i],
            Target::Total => &self.total,
        }
    }

    pub(crate) fn set(&mut self, target: Target, facts: Facts) {
        match target {
            Target::Node(i) => self.nodes[i] = facts,
            Target::Total => self.total = facts,
        }
    }

    pub fn target_name(&self, target: Target) -> String {
        match target {
            Target::Node(i) => self.names[i].clone(),
            Target::Total => String::from("total"),
        }
    }

    /// Re-applies the trace to the initial table of `doc`, checking that each
    /// entry starts from the facts it recorded. Returns the replayed table
    /// (without trace).
    pub fn replay(&self, doc: &FiltrationDoc) -> Result<FactTable, ReplayMismatch> {
        let mut table = FactTable::initial(doc).map_err(|_| ReplayMismatch { step: 0 })?;
        for (step, entry) in self.trace.iter().enumerate() {
            if *table.get(entry.target) != entry.before {
                return Err(ReplayMismatch { step });
            }
            table.set(entry.target, entry.after);
        }
        Ok(table)
    }

    /// Same facts, ignoring the trace.
    pub fn same_facts(&self, other: &FactTable) -> bool {
        self.nodes == other.nodes && self.total == other.total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplayMismatch {
    pub step: usize,
}
