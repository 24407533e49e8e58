use num_traits::One;

use forcing_symbolic::CycleWord;

use crate::plmap::{ClosedInterval, CoveringGraph, PLMap};
use crate::{IntervalError, Rat};

/// An exactly certified periodic point: f^T(point) = point in rational
/// arithmetic, with the full orbit and the verified minimal period.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicPoint {
    pub point: Rat,
    /// Orbit point, f(point), ..., f^(T-1)(point).
    pub orbit: Vec<Rat>,
    /// Smallest j >= 1 with f^j(point) = point; divides the word length.
    pub minimal_period: usize,
    /// True when the orbit touches a partition endpoint (the itinerary is
    /// determined only up to the usual endpoint ambiguity there).
    pub boundary: bool,
    pub itinerary: CycleWord,
}

/// Locate a periodic point realizing an admissible cycle itinerary.
///
/// Backward pullback: starting from the closure of the first interval, pull
/// the target back through f step by step, choosing preimage endpoints so the
/// image of each pulled-back interval is exactly the previous target. The
/// composition f^T restricted to the resulting interval maps it onto the
/// first interval's closure, so the linear fixed-point equation on each
/// composite piece has an exact rational solution.
pub fn point_from_itinerary(
    f: &PLMap,
    graph: &CoveringGraph,
    word: &CycleWord,
) -> Result<PeriodicPoint, IntervalError> {
    let partition = graph.partition();
    let n = partition.len();
    for &s in word.symbols() {
        if s >= n {
            return Err(IntervalError::SymbolOutOfRange { symbol: s, count: n });
        }
    }
    let symbols = word.symbols();
    let t = symbols.len();
    for i in 0..t {
        let from = symbols[i];
        let to = symbols[(i + 1) % t];
        if !graph.has_edge(from, to) {
            return Err(IntervalError::NotAdmissible { from, to });
        }
    }

    // backward pullback
    let mut target = partition.closed(symbols[0]);
    for j in (0..t).rev() {
        let domain = partition.closed(symbols[j]);
        target = pullback_step(f, &domain, &target)
            .ok_or(IntervalError::PullbackFailed { from: symbols[j], to: symbols[(j + 1) % t] })?;
    }
    let base = target; // f^t maps this onto closure(I_{w_0}) which contains it

    // composite f^t restricted to base, as an explicit PL map
    let mut composite = PLMap::from_points(vec![
        (base.lo.clone(), base.lo.clone()),
        (base.hi.clone(), base.hi.clone()),
    ])?;
    for _ in 0..t {
        composite = composite.compose_after(f, &base)?;
    }

    // exact fixed points of the composite on base; take the smallest
    let x = smallest_fixed_point(&composite).ok_or(IntervalError::NoFixedPoint)?;

    // exact orbit and a-posteriori verification
    let mut orbit = Vec::with_capacity(t);
    let mut cur = x.clone();
    for (j, &s) in symbols.iter().enumerate() {
        let iv = partition.closed(s);
        if !iv.contains(&cur) {
            return Err(IntervalError::PullbackFailed { from: s, to: symbols[(j + 1) % t] });
        }
        orbit.push(cur.clone());
        cur = f.eval(&cur)?;
    }
    if cur != x {
        return Err(IntervalError::NoFixedPoint);
    }
    let minimal_period = (1..=t).find(|&j| j < t && orbit[j] == orbit[0]).unwrap_or(t);
    let boundary = orbit.iter().any(|p| partition.is_endpoint(p));

    Ok(PeriodicPoint { point: x, orbit, minimal_period, boundary, itinerary: word.clone() })
}

/// Find a closed K inside `domain` with f(K) exactly equal to `target`.
/// Candidates are preimages of the target endpoints; the pair is validated
/// by an exact image computation. Deterministic: first valid pair in sorted
/// order.
fn pullback_step(f: &PLMap, domain: &ClosedInterval, target: &ClosedInterval) -> Option<ClosedInterval> {
    let pre_lo = f.preimages(&target.lo, domain);
    let pre_hi = f.preimages(&target.hi, domain);
    let mut candidates: Vec<ClosedInterval> = Vec::new();
    for p in &pre_lo {
        for q in &pre_hi {
            let (a, b) = if p <= q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
            candidates.push(ClosedInterval::new(a, b));
        }
    }
    candidates.sort_by(|a, b| (&a.lo, &a.hi).cmp(&(&b.lo, &b.hi)));
    candidates
        .into_iter()
        .find(|k| !k.is_point() && f.image_bounds(k).map(|im| &im == target).unwrap_or(false))
}

/// All exact solutions of g(x) = x over g's domain would be overkill here:
/// the smallest suffices and keeps results deterministic.
fn smallest_fixed_point(g: &PLMap) -> Option<Rat> {
    let pts = g.breakpoints();
    let one = Rat::one();
    let mut best: Option<Rat> = None;
    let mut consider = |x: Rat| {
        if best.as_ref().map(|b| &x < b).unwrap_or(true) {
            best = Some(x);
        }
    };
    for w in pts.windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        let m = (y1 - y0) / (x1 - x0);
        if m == one {
            if y0 == x0 {
                // the whole piece is fixed; its left endpoint is smallest
                consider(x0.clone());
            }
            continue;
        }
        // y0 + m (x - x0) = x  =>  x = (y0 - m x0) / (1 - m)
        let x_star = (y0 - &m * x0) / (&one - &m);
        if &x_star >= x0 && &x_star <= x1 {
            consider(x_star);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plmap::{build_covering_graph, IntervalPartition};
    use forcing_symbolic::CycleWord;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn three_cycle() -> (PLMap, CoveringGraph) {
        let f = PLMap::from_integer_points(&[(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = IntervalPartition::from_map_breakpoints(&f);
        let g = build_covering_graph(&f, &p).unwrap();
        (f, g)
    }

    #[test]
    fn fixed_point_of_self_loop() {
        let (f, g) = three_cycle();
        let pp = point_from_itinerary(&f, &g, &CycleWord::from_digits("1").unwrap()).unwrap();
        assert_eq!(pp.point, rat(4, 3));
        assert_eq!(pp.minimal_period, 1);
        assert!(!pp.boundary);
    }

    #[test]
    fn period_two_orbit() {
        let (f, g) = three_cycle();
        let pp = point_from_itinerary(&f, &g, &CycleWord::from_digits("01").unwrap()).unwrap();
        assert_eq!(pp.point, rat(2, 3));
        assert_eq!(pp.orbit, vec![rat(2, 3), rat(5, 3)]);
        assert_eq!(pp.minimal_period, 2);
        assert!(!pp.boundary);
    }

    #[test]
    fn period_three_collapses_to_boundary_orbit() {
        let (f, g) = three_cycle();
        let pp = point_from_itinerary(&f, &g, &CycleWord::from_digits("011").unwrap()).unwrap();
        assert_eq!(pp.point, rat(0, 1));
        assert!(pp.boundary);
        assert_eq!(pp.minimal_period, 3);
        assert_eq!(pp.orbit, vec![rat(0, 1), rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn inadmissible_cycle_is_rejected() {
        let (f, g) = three_cycle();
        let err = point_from_itinerary(&f, &g, &CycleWord::from_digits("0").unwrap()).unwrap_err();
        assert_eq!(err, IntervalError::NotAdmissible { from: 0, to: 0 });
    }

    #[test]
    fn period_four_orbit_is_exact() {
        let (f, g) = three_cycle();
        let pp = point_from_itinerary(&f, &g, &CycleWord::from_digits("0111").unwrap()).unwrap();
        assert_eq!(pp.point, rat(4, 9));
        assert_eq!(pp.minimal_period, 4);
        // exact return
        let mut x = pp.point.clone();
        for _ in 0..4 {
            x = f.eval(&x).unwrap();
        }
        assert_eq!(x, pp.point);
    }
}
