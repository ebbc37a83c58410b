//! A deterministic Buchberger engine with sugar selection and Gebauer–Möller pair
//! elimination, Hilbert-series dimension/degree data computed from reduced bases, and
//! the ideal operations built on top of them: intersection, colon quotient,
//! saturation, elimination, and rational-point extraction.
//!
//! Everything is budgeted: a computation that exceeds its reduction-step budget stops
//! with an explicit error instead of spinning. Bases are returned reduced and monic
//! with generators sorted by leading monomial, so equal ideals (over the same order)
//! produce byte-identical bases.

mod buchberger;
mod hilbert;
mod ops;

pub use buchberger::{groebner, is_groebner_basis, normal_form, GroebnerBasis, Stats};
pub use hilbert::{hilbert_data, HilbertData};
pub use ops::{
    eliminate, extract_rational_point, ideal_contains, intersection, quotient, saturation,
    saturation_localized, SaturationResult,
};

use std::fmt;

/// Why a Gröbner computation stopped early.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerError {
    /// The reduction-step budget ran out; `steps` is the configured limit.
    BudgetExceeded { steps: u64 },
    /// An operation needed one more variable than the monomial arena supports.
    TooManyVariables { needed: usize },
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::BudgetExceeded { steps } => {
                write!(
                    f,
                    "reduction budget of {steps} steps exceeded; raise --budget to continue"
                )
            }
            GroebnerError::TooManyVariables { needed } => {
                write!(f, "operation needs {needed} variables, more than the supported maximum")
            }
        }
    }
}

impl std::error::Error for GroebnerError {}

/// A mutable step allowance threaded through every reduction loop.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// The default allowance: ten million leading-term cancellations.
    pub fn default_limit() -> u64 {
        10_000_000
    }

    pub fn charge(&mut self, n: u64) -> Result<(), GroebnerError> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(GroebnerError::BudgetExceeded { steps: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::default_limit())
    }
}
