use std::collections::BTreeMap;

use forcing_symbolic::periodic_words;

use crate::itinerary::{point_from_itinerary, PeriodicPoint};
use crate::plmap::{CoveringGraph, PLMap};
use crate::IntervalError;

/// Exhaustive cycle enumeration guard for forced-period certification.
pub const MAX_FORCED_PERIOD: usize = 20;

/// Certify exact minimal periods forced by the covering graph.
///
/// For each T up to `max_t`, every admissible cycle word of length T that is
/// not a power of a shorter word is realized by an exact periodic point; T is
/// reported iff some realized orbit has minimal period exactly T (verified a
/// posteriori on the exact orbit, not assumed from the word). The first
/// witness in canonical word order is kept.
pub fn forced_minimal_periods(
    graph: &CoveringGraph,
    f: &PLMap,
    max_t: usize,
) -> Result<BTreeMap<usize, PeriodicPoint>, IntervalError> {
    if max_t > MAX_FORCED_PERIOD {
        return Err(IntervalError::PeriodTooLarge { p: max_t, max: MAX_FORCED_PERIOD });
    }
    let adjacency = graph.adjacency_matrix();
    let mut out = BTreeMap::new();
    for t in 1..=max_t {
        for word in periodic_words(&adjacency, t)? {
            if word.minimal_period() != t {
                continue;
            }
            let pp = point_from_itinerary(f, graph, &word)?;
            if pp.minimal_period == t {
                out.insert(t, pp);
                break;
            }
        }
    }
    Ok(out)
}
