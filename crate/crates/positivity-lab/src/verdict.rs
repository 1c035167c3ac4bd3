use std::fmt;

use exact_series::SegreValue;

/// One named hypothesis of a positivity criterion, with its truth value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub name: &'static str,
    pub holds: bool,
}

impl Flag {
    pub fn new(name: &'static str, holds: bool) -> Self {
        Self { name, holds }
    }
}

/// What a criterion concludes about the tautological bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    /// Every hypothesis holds, so the criterion predicts a big and nef bundle.
    BigNefPredicted,
    /// At least one hypothesis fails; the criterion is silent.
    NotCovered,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::BigNefPredicted => "big_nef_predicted",
            Conclusion::NotCovered => "not_covered",
        })
    }
}

/// Outcome of one criterion check: hypothesis flags, the exact Segre value,
/// and the conclusion the flags support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub flags: Vec<Flag>,
    pub segre: SegreValue,
    pub conclusion: Conclusion,
}

impl CriterionVerdict {
    /// Assembles the verdict; the conclusion is positive exactly when every
    /// flag holds.
    pub fn new(flags: Vec<Flag>, segre: SegreValue) -> Self {
        let conclusion = if flags.iter().all(|f| f.holds) {
            Conclusion::BigNefPredicted
        } else {
            Conclusion::NotCovered
        };
        Self {
            flags,
            segre,
            conclusion,
        }
    }

    pub fn all_flags_hold(&self) -> bool {
        self.conclusion == Conclusion::BigNefPredicted
    }

    /// Truth value of the named flag, if the criterion carries it.
    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|f| f.name == name).map(|f| f.holds)
    }
}
