//! Enumeration caps.
//!
//! Bell numbers and coloured partition counts grow super-exponentially, so
//! every enumerating operation checks its size against a [`Limits`] value.
//! The process-wide limits are read once from the `FDB_MAX_GRADE`
//! environment variable; when set, it replaces every grade cap (the colour
//! count cap is not a grade and is left alone).

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const MAX_GRADE_ENV: &str = "FDB_MAX_GRADE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for plain set-partition enumeration.
    pub partitions: usize,
    /// Largest `n` for the partition-lattice coproduct.
    pub incidence: usize,
    /// Largest `n` for `Δa_n`.
    pub coproduct: usize,
    /// Largest degree handled by the primitive-space solver.
    pub primitive_degree: usize,
    /// Largest `n` for `Δδ_n`, by either route.
    pub delta: usize,
    /// Largest `n` for `Γ_n`.
    pub gamma: usize,
    /// Largest grade on which dual functionals are evaluated.
    pub dual_grade: usize,
    /// Largest total weight `|n̄|` for coloured partitions.
    pub colour_weight: usize,
    /// Largest number of colours (variables).
    pub colours: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            partitions: 12,
            incidence: 9,
            coproduct: 24,
            primitive_degree: 6,
            delta: 8,
            gamma: 10,
            dual_grade: 12,
            colour_weight: 8,
            colours: 3,
        }
    }
}

impl Limits {
    /// Every grade cap set to `grade`.
    pub fn with_max_grade(grade: usize) -> Self {
        Limits {
            partitions: grade,
            incidence: grade,
            coproduct: grade,
            primitive_degree: grade,
            delta: grade,
            gamma: grade,
            dual_grade: grade,
            colour_weight: grade,
            ..Limits::default()
        }
    }

    pub fn from_env() -> Self {
        match std::env::var(MAX_GRADE_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(grade) => Limits::with_max_grade(grade),
            None => Limits::default(),
        }
    }

    /// The process-wide limits, initialized from the environment on first use.
    pub fn global() -> &'static Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        GLOBAL.get_or_init(Limits::from_env)
    }
}

pub(crate) fn check(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::LimitExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
