//! The bound function `psi`, its monotonicity, and exhaustive verification
//! scans: the tangent upper bound, the maximum-singularity statement at
//! tetrahedral colengths, the necessary condition on the smallest pure
//! exponent, and the bound `m1 <= k`.

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cache::TangentCache;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::lattice::Staircase3;
use crate::num::{binom, checked_mul, checked_sub};
use crate::tangent3d::{
    bound_chain_values, tangent_dimension, tangent_dimension_cached, BoundChain,
};

/// A colength written against the tetrahedral scale:
/// `l = binom(k+2,3) + delta` with `0 <= delta <= binom(k+2,2) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsiContext {
    pub l: i64,
    pub k: i64,
    pub delta: i64,
}

impl PsiContext {
    pub fn for_colength(l: i64) -> Result<PsiContext> {
        if l < 1 {
            return Err(Error::Domain {
                op: "PsiContext",
                msg: format!("colength must be positive, got {l}"),
            });
        }
        let mut k = 1;
        while binom(k + 3, 3) <= l {
            k += 1;
        }
        let delta = l - binom(k + 2, 3);
        debug_assert!((0..=binom(k + 2, 2) - 1).contains(&delta));
        Ok(PsiContext { l, k, delta })
    }

    pub fn is_tetrahedral(&self) -> bool {
        self.delta == 0
    }
}

/// `psi(m1) = (2 m1 + 1) l - 2 binom(m1+2, 4)`, defined for `m1 >= 1` with
/// `binom(m1+2, 3) <= l`. Exact integer arithmetic throughout.
pub fn psi(ctx: &PsiContext, m1: i64) -> Result<i64> {
    if m1 < 1 || binom(m1 + 2, 3) > ctx.l {
        return Err(Error::Domain {
            op: "psi",
            msg: format!(
                "m1={} outside [1, ...] with binom(m1+2,3) <= l={}",
                m1, ctx.l
            ),
        });
    }
    Ok(checked_sub(
        checked_mul(2 * m1 + 1, ctx.l, "psi"),
        2 * binom(m1 + 2, 4),
        "psi",
    ))
}

/// One broken expectation discovered by a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub ideal: String,
    pub message: String,
}

/// Structured outcome of one verification scan. `violations` is empty
/// exactly when the checked statement held over the whole scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colength: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub ideals_scanned: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_tangent: Option<i64>,
    pub maximizers: Vec<String>,
    pub violations: Vec<Violation>,
    #[serde(default)]
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn new(check: &str) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            colength: None,
            k: None,
            ideals_scanned: 0,
            max_tangent: None,
            maximizers: Vec::new(),
            violations: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Merges shard reports of the same check: scan counts add, the maximum and
/// its maximizer set are recomputed globally, violations concatenate.
pub fn merge_reports(reports: &[VerificationReport]) -> Result<VerificationReport> {
    let Some(first) = reports.first() else {
        return Err(Error::Domain {
            op: "merge_reports",
            msg: "no reports to merge".into(),
        });
    };
    let mut merged = first.clone();
    for r in &reports[1..] {
        if r.check != merged.check || r.colength != merged.colength || r.k != merged.k {
            return Err(Error::Domain {
                op: "merge_reports",
                msg: format!(
                    "cannot merge report for {} (colength {:?}, k {:?}) with {} ({:?}, {:?})",
                    r.check, r.colength, r.k, merged.check, merged.colength, merged.k
                ),
            });
        }
        merged.ideals_scanned += r.ideals_scanned;
        match (merged.max_tangent, r.max_tangent) {
            (Some(a), Some(b)) if b > a => {
                merged.max_tangent = Some(b);
                merged.maximizers = r.maximizers.clone();
            }
            (Some(a), Some(b)) if b == a => {
                merged.maximizers.extend(r.maximizers.iter().cloned());
            }
            (None, Some(b)) => {
                merged.max_tangent = Some(b);
                merged.maximizers = r.maximizers.clone();
            }
            _ => {}
        }
        merged.violations.extend(r.violations.iter().cloned());
        merged.elapsed_ms += r.elapsed_ms;
    }
    merged.maximizers.sort();
    merged.maximizers.dedup();
    Ok(merged)
}

/// Scan configuration shared by the enumeration-backed checks.
#[derive(Default, Clone)]
pub struct ScanOpts {
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    /// `(index, count)`: restrict to one shard of the search tree.
    pub shard: Option<(u64, u64)>,
    pub cache: Option<Arc<TangentCache>>,
}

/// Everything the scans (and the CLI) want to know about one ideal.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealRecord {
    pub ideal: String,
    pub l: i64,
    pub m1: i64,
    pub m2: i64,
    pub m3: i64,
    #[serde(rename = "T")]
    pub tangent: i64,
    /// `psi(m1)`; absent when `m1` is outside the domain.
    pub psi: Option<i64>,
    /// `[b1, b2, b3]`; absent for non-Borel input where no contract holds.
    pub bound_chain: Option<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Computes the record for an arbitrary finite staircase.
pub fn ideal_record(ideal: &Staircase3, cache: Option<&TangentCache>) -> IdealRecord {
    let (m1, m2, m3) = ideal.pure_exponents();
    let l = ideal.colength() as i64;
    let chain = bound_chain_values(ideal, cache);
    let psi_value = PsiContext::for_colength(l)
        .ok()
        .and_then(|ctx| psi(&ctx, m1 as i64).ok());
    IdealRecord {
        ideal: ideal.render(),
        l,
        m1: m1 as i64,
        m2: m2 as i64,
        m3: m3 as i64,
        tangent: chain.tangent,
        psi: psi_value,
        bound_chain: ideal.is_borel().then_some([chain.b1, chain.b2, chain.b3]),
        elapsed_ms: None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ScanWork {
    /// Tangent dimension only; maxima and maximizers still tracked.
    TangentOnly,
    /// Tangent plus the full bound chain.
    FullChain,
}

struct ScanRow {
    canonical: String,
    tangent: i64,
    chain: Option<BoundChain>,
}

fn run_scan<F>(
    check: &str,
    l: usize,
    opts: &ScanOpts,
    work: ScanWork,
    mut assess: F,
) -> VerificationReport
where
    F: FnMut(&Staircase3, &ScanRow, &mut Vec<Violation>),
{
    let start = Instant::now();
    let mut report = VerificationReport::new(check);
    report.colength = Some(l as i64);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("failed to build worker pool");

    let mut stream: Box<dyn Iterator<Item = Staircase3>> = match opts.shard {
        Some((index, count)) => Box::new(enumerate::stream_borel3_sharded(l, index, count)),
        None => Box::new(enumerate::stream_borel3(l)),
    };

    const BATCH: usize = 256;
    loop {
        let batch: Vec<Staircase3> = stream.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let cache = opts.cache.clone();
        let results: Vec<ScanRow> = pool.install(|| {
            use rayon::prelude::*;
            batch
                .par_iter()
                .map(|ideal| {
                    let canonical = ideal.render();
                    match work {
                        ScanWork::TangentOnly => {
                            let tangent = match cache.as_deref() {
                                Some(c) => tangent_dimension_cached(ideal, c),
                                None => tangent_dimension(ideal),
                            };
                            ScanRow {
                                canonical,
                                tangent,
                                chain: None,
                            }
                        }
                        ScanWork::FullChain => {
                            let chain = bound_chain_values(ideal, cache.as_deref());
                            ScanRow {
                                canonical,
                                tangent: chain.tangent,
                                chain: Some(chain),
                            }
                        }
                    }
                })
                .collect()
        });
        for (ideal, row) in batch.iter().zip(&results) {
            report.ideals_scanned += 1;
            match report.max_tangent {
                Some(best) if row.tangent < best => {}
                Some(best) if row.tangent == best => report.maximizers.push(row.canonical.clone()),
                _ => {
                    report.max_tangent = Some(row.tangent);
                    report.maximizers = vec![row.canonical.clone()];
                }
            }
            assess(ideal, row, &mut report.violations);
        }
    }

    report.maximizers.sort();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// For every Borel-fixed ideal of colength `l`: `T <= psi(m1)` and the full
/// chain `T <= b1 <= b2 <= b3` hold. Any breach is recorded per ideal.
pub fn upper_bound_check(l: usize, opts: &ScanOpts) -> Result<VerificationReport> {
    let ctx = PsiContext::for_colength(l as i64)?;
    let report = run_scan(
        "bound",
        l,
        opts,
        ScanWork::FullChain,
        |ideal, row, violations| {
            let chain = row.chain.as_ref().expect("bound scan computes chains");
            let m1 = ideal.m1() as i64;
            let bound = match psi(&ctx, m1) {
                Ok(value) => value,
                Err(e) => {
                    violations.push(Violation {
                        ideal: ideal.render(),
                        message: format!("psi undefined for m1={m1}: {e}"),
                    });
                    return;
                }
            };
            debug_assert_eq!(bound, chain.b3);
            if chain.tangent > bound {
                violations.push(Violation {
                    ideal: ideal.render(),
                    message: format!("T={} exceeds psi(m1)={}", chain.tangent, bound),
                });
            }
            if !chain.holds() {
                violations.push(Violation {
                    ideal: ideal.render(),
                    message: format!(
                        "bound chain broken: T={} b1={} b2={} b3={}",
                        chain.tangent, chain.b1, chain.b2, chain.b3
                    ),
                });
            }
        },
    );
    Ok(report)
}

/// At the tetrahedral colength `binom(k+2,3)`, the unique tangent maximizer
/// must be the k-th power of the maximal ideal, with the closed-form value.
pub fn conjecture_check(k: usize, opts: &ScanOpts) -> Result<VerificationReport> {
    let ki = k as i64;
    if k < 1 {
        return Err(Error::Domain {
            op: "conjecture_check",
            msg: "k must be at least 1".into(),
        });
    }
    let l = binom(ki + 2, 3) as usize;
    let expected_ideal = Staircase3::power_ideal(k).expect("k >= 1").render();
    let expected_t = checked_mul(binom(ki + 2, 2), binom(ki + 1, 2), "conjecture_check");
    let mut report = run_scan("conjecture", l, opts, ScanWork::TangentOnly, |_, _, _| {});
    report.k = Some(ki);
    finish_maximizer_report(&mut report, expected_t, &[expected_ideal]);
    Ok(report)
}

fn finish_maximizer_report(
    report: &mut VerificationReport,
    expected_t: i64,
    expected_maximizers: &[String],
) {
    if report.max_tangent != Some(expected_t) {
        report.violations.push(Violation {
            ideal: report.maximizers.join(";"),
            message: format!(
                "maximum T is {:?}, expected {expected_t}",
                report.max_tangent
            ),
        });
    }
    if report.maximizers != expected_maximizers {
        report.violations.push(Violation {
            ideal: report.maximizers.join(";"),
            message: format!("maximizer set differs from {expected_maximizers:?}"),
        });
    }
}

/// At tetrahedral colength, every tangent maximizer has `m1 = k`.
pub fn necessary_condition_check(k: usize, opts: &ScanOpts) -> Result<VerificationReport> {
    if k < 1 {
        return Err(Error::Domain {
            op: "necessary_condition_check",
            msg: "k must be at least 1".into(),
        });
    }
    let l = binom(k as i64 + 2, 3) as usize;
    let mut report = run_scan("necessary", l, opts, ScanWork::TangentOnly, |_, _, _| {});
    report.k = Some(k as i64);
    for maximizer in report.maximizers.clone() {
        let parsed = crate::lattice::parse_ideal(&maximizer)
            .expect("canonical strings parse")
            .to_staircase3()
            .expect("canonical strings are finite colength");
        if parsed.m1() != k {
            report.violations.push(Violation {
                ideal: maximizer,
                message: format!("maximizer has m1={} but k={k}", parsed.m1()),
            });
        }
    }
    Ok(report)
}

/// Every Borel-fixed ideal of colength `l` has `m1 <= k` where
/// `binom(k+2,3) <= l < binom(k+3,3)`.
pub fn min_pure_exponent_check(l: usize, opts: &ScanOpts) -> Result<VerificationReport> {
    let ctx = PsiContext::for_colength(l as i64)?;
    let mut report = run_scan(
        "m1-bound",
        l,
        opts,
        ScanWork::TangentOnly,
        |ideal, _, violations| {
            if ideal.m1() as i64 > ctx.k {
                violations.push(Violation {
                    ideal: ideal.render(),
                    message: format!("m1={} exceeds k={}", ideal.m1(), ctx.k),
                });
            }
        },
    );
    report.k = Some(ctx.k);
    Ok(report)
}

/// `psi` is strictly increasing in `m1` for every colength with `k <=
/// k_max`, checked against every `delta`; additionally the sign of the
/// discrete derivative polynomial `2k^3+6k^2+4k-2m^3-3m^2+m+1+12delta`
/// must be positive over the same range.
pub fn psi_monotonicity_check(k_max: usize) -> Result<VerificationReport> {
    if k_max < 1 {
        return Err(Error::Domain {
            op: "psi_monotonicity_check",
            msg: "k_max must be at least 1".into(),
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("monotonicity");
    report.k = Some(k_max as i64);
    for k in 1..=k_max as i64 {
        for delta in 0..=binom(k + 2, 2) - 1 {
            let l = binom(k + 2, 3) + delta;
            let ctx = PsiContext { l, k, delta };
            report.ideals_scanned += 1;
            for m1 in 1..k {
                let lo = psi(&ctx, m1)?;
                let hi = psi(&ctx, m1 + 1)?;
                if lo >= hi {
                    report.violations.push(Violation {
                        ideal: format!("k={k} delta={delta}"),
                        message: format!("psi({m1})={lo} >= psi({})={hi}", m1 + 1),
                    });
                }
            }
            for m1 in 1..=k {
                let derivative = 2 * k * k * k + 6 * k * k + 4 * k - 2 * m1 * m1 * m1 - 3 * m1 * m1
                    + m1
                    + 1
                    + 12 * delta;
                if derivative <= 0 {
                    report.violations.push(Violation {
                        ideal: format!("k={k} delta={delta}"),
                        message: format!("derivative polynomial not positive at m1={m1}"),
                    });
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
