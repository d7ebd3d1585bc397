//! Basis conversion between harmonious orderings.
//!
//! The walk takes initials with respect to the shared first ordering
//! function (the degree), computes a basis of the initials under the target
//! ordering with logging on, and lifts each element by substituting the full
//! source polynomials for their initials.

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{mora, reduce_basis, reduce_basis_logged, GroebnerOptions, LoggedRepresentation, Status};
use crate::involutive::{involutive_basis, InvolutiveOptions};
use crate::orderings::{initial, MonomialOrdering, OrderingFunction};

#[derive(Clone, Debug)]
pub struct WalkResult {
    /// The converted basis under the target ordering.
    pub basis: Vec<Polynomial>,
    /// Initials of the input under the source ordering, re-tagged to the target.
    pub initials: Vec<Polynomial>,
    /// Basis of the initials under the target ordering.
    pub intermediate: Vec<Polynomial>,
    /// Per intermediate element, its representation over `initials`; the same
    /// combination over the input gives the lifted element.
    pub lifts: Vec<LoggedRepresentation>,
    pub status: Status,
}

fn prepare(input: &[Polynomial], target: MonomialOrdering, nvars: usize) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    let source = input.first().map(|p| p.ordering()).unwrap_or(target);
    if input.iter().any(|p| p.ordering() != source) {
        return Err(Error::Argument("input polynomials carry different ordering tags".into()));
    }
    if !source.harmonious_with(target) {
        return Err(Error::NotHarmonious(source.to_string(), target.to_string()));
    }
    let nonzero: Vec<Polynomial> = input.iter().filter(|p| !p.is_zero()).cloned().collect();
    let lifted_inputs: Vec<Polynomial> = nonzero.iter().map(|g| g.with_ordering(target)).collect();
    let initials = nonzero
        .iter()
        .map(|g| initial(g, OrderingFunction::Degree, nvars).map(|p| p.with_ordering(target)))
        .collect::<Result<Vec<_>>>()?;
    Ok((initials, lifted_inputs))
}

/// Converts a Gröbner basis under its tagged ordering into the reduced
/// Gröbner basis under `target`.
pub fn groebner_walk(input: &[Polynomial], target: MonomialOrdering, nvars: usize, opts: &GroebnerOptions) -> Result<WalkResult> {
    let (initials, full) = prepare(input, target, nvars)?;
    let inner = mora(&initials, &GroebnerOptions { logging: true, ..*opts })?;
    let (intermediate, lifts) = if inner.status == Status::Complete {
        let (h, l) = reduce_basis_logged(&inner.basis, inner.logs.as_deref());
        (h, l.expect("logging on"))
    } else {
        (inner.basis, inner.logs.expect("logging on"))
    };
    let lifted: Vec<Polynomial> = lifts.iter().map(|l| l.expand(&full, target)).collect();
    let basis = if inner.status == Status::Complete { reduce_basis(&lifted) } else { lifted };
    Ok(WalkResult { basis, initials, intermediate, lifts, status: inner.status })
}

/// Converts an involutive basis under its tagged ordering into an involutive
/// basis under `target` for the same division. No final reduction is applied.
pub fn involutive_walk(input: &[Polynomial], target: MonomialOrdering, nvars: usize, opts: &InvolutiveOptions) -> Result<WalkResult> {
    let (initials, full) = prepare(input, target, nvars)?;
    let inner = involutive_basis(&initials, nvars, &InvolutiveOptions { logging: true, ..*opts })?;
    let lifts = inner.logs.expect("logging on");
    let basis = lifts.iter().map(|l| l.expand(&full, target)).collect();
    Ok(WalkResult { basis, initials, intermediate: inner.basis, lifts, status: inner.status })
}
