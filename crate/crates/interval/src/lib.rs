//! One-dimensional forcing engine.
//!
//! Piecewise-linear maps with exact rational breakpoints, covering graphs
//! (edge I -> J iff f(closure I) contains closure J), and exact periodic
//! points located from itineraries by backward interval pullback. All
//! arithmetic is over arbitrary-precision rationals, so certificates are
//! equalities, not approximations.

mod forced;
mod itinerary;
mod plmap;

pub use forced::{forced_minimal_periods, MAX_FORCED_PERIOD};
pub use itinerary::{point_from_itinerary, PeriodicPoint};
pub use plmap::{build_covering_graph, ClosedInterval, CoveringGraph, IntervalPartition, PLMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Rat = BigRational;

/// Parse a rational from a string like "3/4", "-2", or "1.25".
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let n: BigInt = int_part.parse().ok()?;
        let digits = frac_part.len() as u32;
        let f: BigInt = frac_part.parse().ok()?;
        let den = BigInt::from(10u32).pow(digits);
        let frac = Rat::new(f, den);
        let whole = Rat::from(n);
        return Some(if neg { whole - frac } else { whole + frac });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from(n))
}

pub fn rational_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum IntervalError {
    #[error("need at least two breakpoints")]
    TooFewBreakpoints,
    #[error("breakpoint x-coordinates must be strictly increasing at index {0}")]
    BreakpointsNotIncreasing(usize),
    #[error("partition endpoints must be strictly increasing at index {0}")]
    PartitionNotIncreasing(usize),
    #[error("need at least two partition endpoints")]
    TooFewEndpoints,
    #[error("interval [{lo}, {hi}] not contained in map domain [{dom_lo}, {dom_hi}]")]
    OutsideDomain { lo: String, hi: String, dom_lo: String, dom_hi: String },
    #[error("itinerary is not an admissible cycle in the covering graph (pair {from} -> {to})")]
    NotAdmissible { from: usize, to: usize },
    #[error("itinerary symbol {symbol} out of range for partition with {count} intervals")]
    SymbolOutOfRange { symbol: usize, count: usize },
    #[error("period {p} exceeds the cycle-enumeration guard ({max}); refusing")]
    PeriodTooLarge { p: usize, max: usize },
    #[error("internal: pullback failed to realize covering for edge {from} -> {to}")]
    PullbackFailed { from: usize, to: usize },
    #[error("internal: no fixed point found in pulled-back interval")]
    NoFixedPoint,
    #[error(transparent)]
    Symbolic(#[from] forcing_symbolic::SymbolicError),
}
