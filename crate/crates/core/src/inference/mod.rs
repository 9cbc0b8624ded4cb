//! Forward-chaining inference of real rank, stable rank and projection facts
//! over annotated ideal filtrations `{0} = J_0 ⊆ J_1 ⊆ … ⊆ J_n = A`.
//!
//! A [`FiltrationDoc`] lists the subquotients `J_j/J_{j−1}` bottom-up with
//! their known attributes. [`infer`] applies the rule set of [`RuleId`] until
//! nothing changes and returns a [`FactTable`] holding an interval for the
//! real and stable rank of every node and of `A`, projection facts, and the
//! full rule trace.

mod derive;
mod engine;
mod facts;
mod rules;

pub use derive::{derive_group_filtration, CHARACTERS_NODE, ORBIT_LAYERS_NODE};
pub use engine::{infer, infer_with, InferOptions};
pub use facts::{Bound, FactTable, Facts, GrFact, Interval, ReplayMismatch, Target, TraceEntry};
pub use rules::RuleId;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

/// Largest finite value any dimension attribute or rank bound may take.
pub const MAX_FINITE: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    ContinuousTrace,
    Commutative,
    /// The compact operators on a separable infinite-dimensional space.
    Elementary,
    Generic,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ContinuousTrace => "continuous_trace",
            Self::Commutative => "commutative",
            Self::Elementary => "elementary",
            Self::Generic => "generic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "continuous_trace" => Self::ContinuousTrace,
            "commutative" => Self::Commutative,
            "elementary" => Self::Elementary,
            "generic" => Self::Generic,
            _ => return None,
        })
    }
}

/// Dimension of the Hilbert-space fibers of a `C_0(Γ, K(H))` layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberDim {
    Finite(u32),
    Infinite,
}

/// Attributes of one subquotient. `None` means unknown; unknown attributes
/// never enable a rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeAnnotation {
    pub kind: NodeKind,
    pub spectrum_dim: Option<u32>,
    pub spectrum_compact: Option<bool>,
    /// Covering dimension of the one-point compactification of the spectrum.
    pub compactification_dim: Option<u32>,
    /// Dimension of a metric space in which the spectrum sits as a locally
    /// closed subset.
    pub ambient_dim: Option<u32>,
    pub irreps_infinite_dim: Option<bool>,
    pub hausdorff_spectrum: Option<bool>,
    pub no_compact_spectrum_component: Option<bool>,
    pub separable: Option<bool>,
    /// `A ≅ A ⊗ K`.
    pub stable: Option<bool>,
    pub fiber_dim: Option<FiberDim>,
    pub seed_rr_lo: Option<u32>,
    pub seed_rr_hi: Option<u32>,
    pub seed_tsr_lo: Option<u32>,
    pub seed_tsr_hi: Option<u32>,
}

impl NodeAnnotation {
    pub fn new(kind: NodeKind) -> Self {
        Self {
            kind,
            spectrum_dim: None,
            spectrum_compact: None,
            compactification_dim: None,
            ambient_dim: None,
            irreps_infinite_dim: None,
            hausdorff_spectrum: None,
            no_compact_spectrum_component: None,
            separable: None,
            stable: None,
            fiber_dim: None,
            seed_rr_lo: None,
            seed_rr_hi: None,
            seed_tsr_lo: None,
            seed_tsr_hi: None,
        }
    }

    /// Fills attributes implied by the kind; fails on an explicit conflict.
    fn normalize(&mut self) -> Result<(), &'static str> {
        fn imply<T: PartialEq + Copy>(slot: &mut Option<T>, v: T) -> Result<(), ()> {
            match slot {
                Some(x) if *x != v => Err(()),
                _ => {
                    *slot = Some(v);
                    Ok(())
                }
            }
        }
        match self.kind {
            NodeKind::Commutative => {
                imply(&mut self.irreps_infinite_dim, false)
                    .map_err(|_| "commutative node with infinite-dimensional irreps")?;
                imply(&mut self.fiber_dim, FiberDim::Finite(1))
                    .map_err(|_| "commutative node with fiber dimension other than 1")?;
            }
            NodeKind::Elementary => {
                imply(&mut self.irreps_infinite_dim, true)
                    .map_err(|_| "elementary node with finite-dimensional irreps")?;
                imply(&mut self.spectrum_dim, 0)
                    .map_err(|_| "elementary node with positive spectrum dimension")?;
                imply(&mut self.fiber_dim, FiberDim::Infinite)
                    .map_err(|_| "elementary node with finite fiber dimension")?;
            }
            NodeKind::ContinuousTrace | NodeKind::Generic => {}
        }
        Ok(())
    }

    fn largest_value(&self) -> u32 {
        let fiber = match self.fiber_dim {
            Some(FiberDim::Finite(d)) => Some(d),
            _ => None,
        };
        [
            self.spectrum_dim,
            self.compactification_dim,
            self.ambient_dim,
            fiber,
            self.seed_rr_lo,
            self.seed_rr_hi,
            self.seed_tsr_lo,
            self.seed_tsr_hi,
        ]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiltrationNode {
    pub name: String,
    pub annotation: NodeAnnotation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AlgebraFlags {
    pub liminary: Option<bool>,
    /// The document describes `C*(G)` for a connected Lie group `G`.
    pub group_derived: bool,
    /// `G = ℝ`.
    pub real_line: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("filtration has no nodes")]
    Empty,
    #[error("duplicate node name `{0}`")]
    DuplicateNode(String),
    #[error("node `{node}`: {reason}")]
    KindConflict { node: String, reason: &'static str },
    #[error("node `{node}`: value {value} exceeds the supported maximum {MAX_FINITE}")]
    ValueTooLarge { node: String, value: u32 },
}

/// A structurally valid filtration diagram, nodes ordered bottom-up
/// (`J_1/J_0` first, `A/J_{n−1}` last).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiltrationDoc {
    nodes: Vec<FiltrationNode>,
    flags: AlgebraFlags,
    notes: Vec<String>,
}

impl FiltrationDoc {
    pub fn new(nodes: Vec<FiltrationNode>, flags: AlgebraFlags) -> Result<Self, DocError> {
        if nodes.is_empty() {
            return Err(DocError::Empty);
        }
        let mut seen = BTreeSet::new();
        let mut nodes = nodes;
        for node in &mut nodes {
            if !seen.insert(node.name.clone()) {
                return Err(DocError::DuplicateNode(node.name.clone()));
            }
            node.annotation
                .normalize()
                .map_err(|reason| DocError::KindConflict {
                    node: node.name.clone(),
                    reason,
                })?;
            let value = node.annotation.largest_value();
            if value > MAX_FINITE {
                return Err(DocError::ValueTooLarge {
                    node: node.name.clone(),
                    value,
                });
            }
        }
        Ok(Self {
            nodes,
            flags,
            notes: Vec::new(),
        })
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn nodes(&self) -> &[FiltrationNode] {
        &self.nodes
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InferenceError {
    #[error("contradiction at {target} after {rule}: interval [{lo}, {hi}] is empty")]
    Contradiction {
        target: String,
        rule: String,
        lo: u32,
        hi: u32,
    },
    #[error("no fixpoint within {0} passes")]
    NoFixpoint(usize),
}
