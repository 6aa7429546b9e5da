//! Named verification checks behind a common trait, so front ends can
//! select them at runtime. Each check wraps one scan from [`crate::bounds`]
//! and validates its own parameter requirements.

use crate::bounds::{self, ScanOpts, VerificationReport};
use crate::error::{Error, Result};

/// Parameters a check may consume; each check validates what it needs.
#[derive(Default, Clone)]
pub struct CheckParams {
    pub k: Option<usize>,
    pub colength: Option<usize>,
    pub k_max: Option<usize>,
    pub scan: ScanOpts,
}

impl CheckParams {
    fn require_k(&self, check: &'static str) -> Result<usize> {
        self.k.ok_or(Error::Domain {
            op: check,
            msg: "requires --k".into(),
        })
    }

    fn require_colength(&self, check: &'static str) -> Result<usize> {
        self.colength.ok_or(Error::Domain {
            op: check,
            msg: "requires --colength".into(),
        })
    }
}

/// One runtime-selectable verification strategy.
pub trait Check: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, params: &CheckParams) -> Result<VerificationReport>;
}

struct BoundCheck;

impl Check for BoundCheck {
    fn name(&self) -> &'static str {
        "bound"
    }
    fn summary(&self) -> &'static str {
        "T(I) <= psi(m1) and the chain T <= b1 <= b2 <= b3 over all Borel-fixed ideals of a colength"
    }
    fn run(&self, params: &CheckParams) -> Result<VerificationReport> {
        bounds::upper_bound_check(params.require_colength("bound")?, &params.scan)
    }
}

struct ConjectureCheck;

impl Check for ConjectureCheck {
    fn name(&self) -> &'static str {
        "conjecture"
    }
    fn summary(&self) -> &'static str {
        "unique maximum singularity at the power of the maximal ideal for tetrahedral colength"
    }
    fn run(&self, params: &CheckParams) -> Result<VerificationReport> {
        bounds::conjecture_check(params.require_k("conjecture")?, &params.scan)
    }
}

struct NecessaryCheck;

impl Check for NecessaryCheck {
    fn name(&self) -> &'static str {
        "necessary"
    }
    fn summary(&self) -> &'static str {
        "every tangent maximizer at tetrahedral colength has smallest pure exponent k"
    }
    fn run(&self, params: &CheckParams) -> Result<VerificationReport> {
        bounds::necessary_condition_check(params.require_k("necessary")?, &params.scan)
    }
}

struct MonotonicityCheck;

impl Check for MonotonicityCheck {
    fn name(&self) -> &'static str {
        "monotonicity"
    }
    fn summary(&self) -> &'static str {
        "psi is strictly increasing in m1 for every colength up to k-max"
    }
    fn run(&self, params: &CheckParams) -> Result<VerificationReport> {
        let k_max = params.k_max.or(params.k).ok_or(Error::Domain {
            op: "monotonicity",
            msg: "requires --k-max".into(),
        })?;
        bounds::psi_monotonicity_check(k_max)
    }
}

struct MinPureExponentCheck;

impl Check for MinPureExponentCheck {
    fn name(&self) -> &'static str {
        "m1-bound"
    }
    fn summary(&self) -> &'static str {
        "m1 <= k for every Borel-fixed ideal of a colength"
    }
    fn run(&self, params: &CheckParams) -> Result<VerificationReport> {
        bounds::min_pure_exponent_check(params.require_colength("m1-bound")?, &params.scan)
    }
}

static REGISTRY: &[&dyn Check] = &[
    &BoundCheck,
    &ConjectureCheck,
    &NecessaryCheck,
    &MonotonicityCheck,
    &MinPureExponentCheck,
];

/// All registered checks.
pub fn registry() -> &'static [&'static dyn Check] {
    REGISTRY
}

/// Looks a check up by its registered name.
pub fn find(name: &str) -> Option<&'static dyn Check> {
    REGISTRY.iter().copied().find(|c| c.name() == name)
}
