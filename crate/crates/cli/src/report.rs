//! The analysis report and its two renderings: pretty JSON with a fixed key
//! order, and plain text.

use std::fmt::Write as _;

use orbit_rank_core::inference::{Bound, FactTable, Facts, Interval};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub algebra: AlgebraSection,
    pub structure: StructureSection,
    pub exponentiality: ExponentialitySection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    pub coadjoint: CoadjointSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projections: Option<ProjectionsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inference: Option<InferenceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refused: Option<RefusalSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSection {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSection {
    pub derived_series_dims: Vec<usize>,
    pub lower_central_series_dims: Vec<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub abelianization_dim: usize,
    pub center_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentialitySection {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_coordinates: Option<Vec<String>>,
    pub candidates_checked: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsSection {
    pub banner: &'static str,
    pub simply_connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_rank_upper_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub possibly_strict: Option<bool>,
    pub notes: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoadjointSection {
    pub pfaffian: String,
    pub p_polynomial: String,
    pub open_orbits: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component_estimate: Option<EstimateSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EstimateSection {
    pub component_count: usize,
    pub samples: usize,
    pub seed: u64,
    pub rejected: usize,
    pub certificate_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionsSection {
    pub verdict: &'static str,
    pub gr_equals_j0: bool,
    pub j0_proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub open_orbit_count_estimate: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InferenceSection {
    pub rr: IntervalJson,
    pub tsr: IntervalJson,
    pub gr: &'static str,
    pub agreement: bool,
    pub trace_length: usize,
    pub external_facts_used: Vec<&'static str>,
    pub nodes: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefusalSection {
    pub reason: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// `hi` is `null` when unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalJson {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl From<Interval> for IntervalJson {
    fn from(i: Interval) -> Self {
        Self {
            lo: i.lo,
            hi: match i.hi {
                Bound::Finite(h) => Some(h),
                Bound::Unbounded => None,
            },
        }
    }
}

impl IntervalJson {
    fn text(&self) -> String {
        match self.hi {
            Some(h) => format!("[{}, {h}]", self.lo),
            None => format!("[{}, inf]", self.lo),
        }
    }
}

/// Pretty JSON followed by a newline. Key order follows field order, so the
/// output is a function of the value alone.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let a = &self.algebra;
        let _ = writeln!(out, "algebra: dim {}, basis {}", a.dim, join(&a.basis));
        for b in &a.brackets {
            let _ = writeln!(out, "  {b}");
        }
        let s = &self.structure;
        let _ = writeln!(
            out,
            "structure: derived series {}; lower central series {}; solvable {}; nilpotent {}; abelianization {}; center {}",
            join(&s.derived_series_dims),
            join(&s.lower_central_series_dims),
            yes_no(s.solvable),
            yes_no(s.nilpotent),
            s.abelianization_dim,
            s.center_dim
        );
        let e = &self.exponentiality;
        let _ = write!(
            out,
            "exponentiality: {} (candidates checked {}, trials {}, seed {})",
            e.status, e.candidates_checked, e.trials, e.seed
        );
        if let Some(w) = &e.witness {
            let _ = write!(out, "; witness {w}");
        }
        out.push('\n');
        if let Some(inv) = &self.invariants {
            let _ = writeln!(out, "{}", inv.banner);
            if let Some(rr) = inv.real_rank {
                let _ = writeln!(out, "real rank: {rr}");
            }
            if let Some(tsr) = inv.stable_rank {
                let _ = writeln!(out, "stable rank: {tsr}");
            }
            if let Some(bound) = inv.real_rank_upper_bound {
                let strict = if inv.possibly_strict == Some(true) {
                    " (possibly strict)"
                } else {
                    ""
                };
                let _ = writeln!(out, "real rank upper bound: {bound}{strict}");
            }
            for note in &inv.notes {
                let _ = writeln!(out, "note: {note}");
            }
        }
        let c = &self.coadjoint;
        let _ = writeln!(out, "P(xi) = {}", c.p_polynomial);
        let _ = write!(out, "open coadjoint orbits: {}", yes_no(c.open_orbits));
        if let Some(est) = &c.component_estimate {
            let _ = write!(
                out,
                " (estimated components {}, samples {}, seed {}, rejected {})",
                est.component_count, est.samples, est.seed, est.rejected
            );
        }
        out.push('\n');
        if let Some(p) = &self.projections {
            let _ = write!(
                out,
                "projections: {}; Gr = Gr(J0): {}; J0 proper: {}",
                p.verdict,
                yes_no(p.gr_equals_j0),
                yes_no(p.j0_proper)
            );
            if let Some(n) = p.open_orbit_count_estimate {
                let _ = write!(out, "; open orbits counted {n}");
            }
            out.push('\n');
        }
        if let Some(i) = &self.inference {
            let _ = writeln!(
                out,
                "inference: rr {}, tsr {}, gr {}; {} closed forms; {} trace steps",
                i.rr.text(),
                i.tsr.text(),
                i.gr,
                if i.agreement { "agrees with" } else { "does not match" },
                i.trace_length
            );
            if !i.external_facts_used.is_empty() {
                let _ = writeln!(out, "  external facts used: {}", i.external_facts_used.join(" "));
            }
            for note in &i.notes {
                let _ = writeln!(out, "  note: {note}");
            }
        }
        if let Some(r) = &self.refused {
            let _ = write!(out, "refused: {}: {}", r.reason, r.message);
            if let Some(w) = &r.witness {
                let _ = write!(out, " (witness {w})");
            }
            out.push('\n');
        }
        out
    }
}

/// JSON form of a fact table: per-node facts, the total and the trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InferenceReport {
    pub nodes: Vec<NodeFactsJson>,
    pub total: FactsJson,
    pub trace: Vec<TraceJson>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeFactsJson {
    pub name: String,
    #[serde(flatten)]
    pub facts: FactsJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactsJson {
    pub rr: IntervalJson,
    pub tsr: IntervalJson,
    pub gr: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum_dim_bound: Option<u32>,
}

impl From<&Facts> for FactsJson {
    fn from(f: &Facts) -> Self {
        Self {
            rr: f.rr.into(),
            tsr: f.tsr.into(),
            gr: f.gr.as_str(),
            spectrum_dim_bound: f.spectrum_dim_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub step: usize,
    pub rule: &'static str,
    pub target: String,
    pub before: FactsJson,
    pub after: FactsJson,
    pub external_fact: bool,
}

/// The components of a fact that a rule changed, as `rr [0, inf] -> [0, 1]`.
fn changes(before: &FactsJson, after: &FactsJson) -> String {
    let mut parts = Vec::new();
    for (name, b, a) in [("rr", before.rr, after.rr), ("tsr", before.tsr, after.tsr)] {
        if a != b {
            parts.push(format!("{name} {} -> {}", b.text(), a.text()));
        }
    }
    if after.gr != before.gr {
        parts.push(format!("gr {} -> {}", before.gr, after.gr));
    }
    if after.spectrum_dim_bound != before.spectrum_dim_bound {
        let show = |b: Option<u32>| b.map_or("none".to_string(), |v| v.to_string());
        parts.push(format!(
            "spectrum dim bound {} -> {}",
            show(before.spectrum_dim_bound),
            show(after.spectrum_dim_bound)
        ));
    }
    parts.join(", ")
}

impl InferenceReport {
    pub fn new(table: &FactTable, notes: &[String]) -> Self {
        Self {
            nodes: table
                .names()
                .iter()
                .zip(table.nodes())
                .map(|(name, f)| NodeFactsJson {
                    name: name.clone(),
                    facts: f.into(),
                })
                .collect(),
            total: table.total().into(),
            trace: table
                .trace()
                .iter()
                .enumerate()
                .map(|(i, e)| TraceJson {
                    step: i + 1,
                    rule: e.rule.as_str(),
                    target: table.target_name(e.target),
                    before: (&e.before).into(),
                    after: (&e.after).into(),
                    external_fact: e.rule.is_external_fact(),
                })
                .collect(),
            notes: notes.to_vec(),
        }
    }

    pub fn render_text(&self) -> String {
        fn facts(f: &FactsJson) -> String {
            let mut s = format!("rr {}, tsr {}, gr {}", f.rr.text(), f.tsr.text(), f.gr);
            if let Some(b) = f.spectrum_dim_bound {
                let _ = write!(s, ", spectrum dim <= {b}");
            }
            s
        }
        let mut out = String::new();
        for n in &self.nodes {
            let _ = writeln!(out, "node {}: {}", n.name, facts(&n.facts));
        }
        let _ = writeln!(out, "total: {}", facts(&self.total));
        let _ = writeln!(out, "trace:");
        for t in &self.trace {
            let _ = write!(out, "  {}. {} on {}: {}", t.step, t.rule, t.target, changes(&t.before, &t.after));
            if t.external_fact {
                out.push_str(" [external fact]");
            }
            out.push('\n');
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}
