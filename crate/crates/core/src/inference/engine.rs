use alloc::vec::Vec;

use super::facts::{FactTable, TraceEntry};
use super::rules::RuleId;
use super::{FiltrationDoc, InferenceError, MAX_FINITE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InferOptions {
    /// Rules in application order. Each pass runs them in this order.
    pub rules: Vec<RuleId>,
}

impl Default for InferOptions {
    fn default() -> Self {
        Self {
            rules: RuleId::ALL.to_vec(),
        }
    }
}

impl InferOptions {
    /// Excludes the standard facts about the compacts.
    pub fn without_compacts_facts(mut self) -> Self {
        self.rules.retain(|&r| r != RuleId::R17);
        self
    }

    pub fn reversed(mut self) -> Self {
        self.rules.reverse();
        self
    }
}

pub fn infer(doc: &FiltrationDoc) -> Result<FactTable, InferenceError> {
    infer_with(doc, &InferOptions::default())
}

/// Runs the rules to a fixpoint. Every change is logged in the trace; a rule
/// that would empty an interval yields [`InferenceError::Contradiction`].
pub fn infer_with(doc: &FiltrationDoc, options: &InferOptions) -> Result<FactTable, InferenceError> {
    let mut table = FactTable::initial(doc)?;
    // Each pass either changes something or stops; every interval can shrink
    // at most MAX_FINITE + 2 times and the remaining facts a bounded number.
    let max_passes = (doc.nodes().len() + 1) * (MAX_FINITE as usize + 4);
    let mut proposals = Vec::new();
    for _ in 0..max_passes {
        let mut changed = false;
        for &rule in &options.rules {
            proposals.clear();
            rule.apply(doc, &table, &mut proposals);
            for &(target, proposal) in &proposals {
                let before = *table.get(target);
                let after = before.meet(&proposal);
                for interval in [after.rr, after.tsr] {
                    if interval.is_empty() {
                        return Err(InferenceError::Contradiction {
                            target: table.target_name(target),
                            rule: rule.as_str().into(),
                            lo: interval.lo,
                            hi: interval.hi.finite().unwrap_or(0),
                        });
                    }
                }
                if after != before {
                    table.set(target, after);
                    table.trace.push(TraceEntry {
                        rule,
                        target,
                        before,
                        after,
                    });
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(table);
        }
    }
    Err(InferenceError::NoFixpoint(max_passes))
}
