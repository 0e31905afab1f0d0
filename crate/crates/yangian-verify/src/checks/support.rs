//! Shared helpers for check bodies.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yangian::series::first_difference;
use yangian::{Context, Element, Series, SignSequence};

use crate::{CheckParams, Outcome};

/// Ok = pass; Err carries the witness text.
pub(crate) type CheckResult = Result<(), String>;

pub(crate) fn finish(r: CheckResult) -> Outcome {
    match r {
        Ok(()) => Outcome::Pass,
        Err(w) => Outcome::Fail(w),
    }
}

/// Like `finish`, for grid checks that count what they ran: an empty
/// selection is an invalid invocation, not a pass.
pub(crate) fn finish_counted(r: Result<usize, String>, empty_msg: &str) -> Outcome {
    match r {
        Err(w) => Outcome::Fail(w),
        Ok(0) => Outcome::Error(empty_msg.to_string()),
        Ok(_) => Outcome::Pass,
    }
}

pub(crate) fn ctx(seq: &SignSequence, order: usize) -> Result<Context, String> {
    Context::from_seq(seq.clone(), order).map_err(|e| e.to_string())
}

pub(crate) fn ctx_str(seq: &str, order: usize) -> Context {
    Context::from_seq(seq.parse().expect("valid digits"), order).expect("valid context")
}

/// Exact series comparison with a first-differing-order witness.
pub(crate) fn series_eq(label: &str, lhs: &Series, rhs: &Series) -> CheckResult {
    match first_difference(lhs, rhs) {
        Ok(None) => Ok(()),
        Ok(Some((k, diff))) => Err(format!(
            "{label}: first differing order u^-{k}; difference = {diff}"
        )),
        Err(e) => Err(format!("{label}: {e}")),
    }
}

pub(crate) fn element_eq(label: &str, lhs: &Element, rhs: &Element) -> CheckResult {
    let diff = lhs.sub(rhs).map_err(|e| format!("{label}: {e}"))?;
    if diff.is_zero() {
        Ok(())
    } else {
        Err(format!("{label}: difference = {diff}"))
    }
}

pub(crate) fn element_zero(label: &str, e: &Element) -> CheckResult {
    if e.is_zero() {
        Ok(())
    } else {
        Err(format!("{label}: nonzero value = {e}"))
    }
}

pub(crate) fn ensure(cond: bool, label: &str) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(label.to_string())
    }
}

pub(crate) fn rng_for(params: &CheckParams, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(params.seed ^ salt)
}

/// Uniform generator pick with 1-based indices.
pub(crate) fn random_generator(rng: &mut ChaCha8Rng, c: &Context, max_level: usize) -> Element {
    let i = rng.gen_range(1..=c.size());
    let j = rng.gen_range(1..=c.size());
    let r = rng.gen_range(1..=max_level);
    c.generator(i, j, r).expect("indices in range")
}

/// A check that only makes sense for one pinned sequence: accept no --seq or
/// the pinned one, reject anything else.
pub(crate) fn require_pinned_seq(params: &CheckParams, pinned: &str) -> Result<(), Outcome> {
    if let Some(seq) = &params.seq {
        if seq.to_string() != pinned {
            return Err(Outcome::Error(format!(
                "this check is pinned to the sequence {pinned}"
            )));
        }
    }
    Ok(())
}
