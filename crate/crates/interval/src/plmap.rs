use num_traits::Zero;

use forcing_symbolic::TransitionMatrix;

use crate::{rational_to_string, IntervalError, Rat};

/// Closed interval with rational endpoints, lo <= hi (possibly a point).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl ClosedInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        ClosedInterval { lo, hi }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &ClosedInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

impl std::fmt::Display for ClosedInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", rational_to_string(&self.lo), rational_to_string(&self.hi))
    }
}

/// Continuous piecewise-linear map given by breakpoints with strictly
/// increasing x; linear interpolation between consecutive breakpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct PLMap {
    points: Vec<(Rat, Rat)>,
}

impl PLMap {
    pub fn from_points(points: Vec<(Rat, Rat)>) -> Result<Self, IntervalError> {
        if points.len() < 2 {
            return Err(IntervalError::TooFewBreakpoints);
        }
        for i in 1..points.len() {
            if points[i - 1].0 >= points[i].0 {
                return Err(IntervalError::BreakpointsNotIncreasing(i));
            }
        }
        Ok(PLMap { points })
    }

    /// Convenience: breakpoints from integer pairs.
    pub fn from_integer_points(points: &[(i64, i64)]) -> Result<Self, IntervalError> {
        PLMap::from_points(
            points.iter().map(|&(x, y)| (Rat::from_integer(x.into()), Rat::from_integer(y.into()))).collect(),
        )
    }

    pub fn breakpoints(&self) -> &[(Rat, Rat)] {
        &self.points
    }

    pub fn domain(&self) -> ClosedInterval {
        ClosedInterval::new(self.points[0].0.clone(), self.points.last().unwrap().0.clone())
    }

    fn check_domain(&self, iv: &ClosedInterval) -> Result<(), IntervalError> {
        let dom = self.domain();
        if !dom.contains_interval(iv) {
            return Err(IntervalError::OutsideDomain {
                lo: rational_to_string(&iv.lo),
                hi: rational_to_string(&iv.hi),
                dom_lo: rational_to_string(&dom.lo),
                dom_hi: rational_to_string(&dom.hi),
            });
        }
        Ok(())
    }

    /// Exact evaluation. x must be inside the breakpoint hull.
    pub fn eval(&self, x: &Rat) -> Result<Rat, IntervalError> {
        self.check_domain(&ClosedInterval::new(x.clone(), x.clone()))?;
        let i = match self.points.iter().position(|(bx, _)| bx >= x) {
            Some(0) => 0,
            Some(i) => i - 1,
            None => self.points.len() - 2,
        };
        let (x0, y0) = &self.points[i];
        let (x1, y1) = &self.points[i + 1];
        if x == x0 {
            return Ok(y0.clone());
        }
        let t = (x - x0) / (x1 - x0);
        Ok(y0 + (y1 - y0) * t)
    }

    /// Exact [min, max] of f over the closed interval: the image, by
    /// continuity. Computed from the endpoint values and the interior
    /// breakpoints.
    pub fn image_bounds(&self, iv: &ClosedInterval) -> Result<ClosedInterval, IntervalError> {
        self.check_domain(iv)?;
        let mut lo = self.eval(&iv.lo)?;
        let mut hi = lo.clone();
        let mut push = |v: Rat| {
            if v < lo {
                lo = v;
            } else if v > hi {
                hi = v;
            }
        };
        push(self.eval(&iv.hi)?);
        for (bx, by) in &self.points {
            if bx > &iv.lo && bx < &iv.hi {
                push(by.clone());
            }
        }
        Ok(ClosedInterval::new(lo, hi))
    }

    /// All x in `within` with f(x) = y, plus degenerate flat pieces reported
    /// by their endpoints. Candidates for the pullback construction.
    pub(crate) fn preimages(&self, y: &Rat, within: &ClosedInterval) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::new();
        let mut push = |x: Rat| {
            if within.contains(&x) && !out.contains(&x) {
                out.push(x);
            }
        };
        for w in self.points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            let dy = y1 - y0;
            if dy.is_zero() {
                if y0 == y {
                    push(x0.clone());
                    push(x1.clone());
                }
                continue;
            }
            let t = (y - y0) / &dy;
            if t >= Rat::zero() && t <= Rat::from_integer(1.into()) {
                push(x0 + (x1 - x0) * t);
            }
        }
        out.sort();
        out
    }

    /// Restriction refined so that `other` composed after self is linear on
    /// each returned piece: subdivides [lo, hi] at points where self hits a
    /// breakpoint x-coordinate of `other`.
    pub(crate) fn compose_after(&self, outer: &PLMap, on: &ClosedInterval) -> Result<PLMap, IntervalError> {
        // self restricted to `on`, then outer applied to the values
        let mut xs: Vec<Rat> = vec![on.lo.clone(), on.hi.clone()];
        for (bx, _) in &self.points {
            if bx > &on.lo && bx < &on.hi {
                xs.push(bx.clone());
            }
        }
        // preimages (under self) of outer's breakpoints
        for (ox, _) in &outer.points {
            for x in self.preimages(ox, on) {
                xs.push(x);
            }
        }
        xs.sort();
        xs.dedup();
        let mut pts = Vec::with_capacity(xs.len());
        for x in xs {
            let mid = self.eval(&x)?;
            let y = outer.eval(&mid)?;
            pts.push((x, y));
        }
        PLMap::from_points(pts)
    }
}

/// Ordered rational endpoints a_0 < a_1 < ... < a_k defining open intervals
/// I_j = (a_j, a_{j+1}).
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalPartition {
    endpoints: Vec<Rat>,
}

impl IntervalPartition {
    pub fn new(endpoints: Vec<Rat>) -> Result<Self, IntervalError> {
        if endpoints.len() < 2 {
            return Err(IntervalError::TooFewEndpoints);
        }
        for i in 1..endpoints.len() {
            if endpoints[i - 1] >= endpoints[i] {
                return Err(IntervalError::PartitionNotIncreasing(i));
            }
        }
        Ok(IntervalPartition { endpoints })
    }

    /// Partition at the breakpoint x-coordinates of a map.
    pub fn from_map_breakpoints(f: &PLMap) -> Self {
        IntervalPartition {
            endpoints: f.breakpoints().iter().map(|(x, _)| x.clone()).collect(),
        }
    }

    pub fn endpoints(&self) -> &[Rat] {
        &self.endpoints
    }

    pub fn len(&self) -> usize {
        self.endpoints.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Closure of the j-th interval.
    pub fn closed(&self, j: usize) -> ClosedInterval {
        ClosedInterval::new(self.endpoints[j].clone(), self.endpoints[j + 1].clone())
    }

    pub fn is_endpoint(&self, x: &Rat) -> bool {
        self.endpoints.contains(x)
    }

    pub fn hull(&self) -> ClosedInterval {
        ClosedInterval::new(self.endpoints[0].clone(), self.endpoints.last().unwrap().clone())
    }
}

/// Covering graph: nodes are partition intervals, edge (I, J) present iff
/// f(closure I) contains closure J.
#[derive(Debug, Clone)]
pub struct CoveringGraph {
    partition: IntervalPartition,
    edges: Vec<Vec<bool>>,
}

impl CoveringGraph {
    pub fn partition(&self) -> &IntervalPartition {
        &self.partition
    }

    pub fn node_count(&self) -> usize {
        self.partition.len()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges[from][to]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.node_count();
        (0..n)
            .flat_map(|i| (0..n).filter_map(move |j| if self.edges[i][j] { Some((i, j)) } else { None }))
            .collect()
    }

    /// Adjacency matrix for the symbolic layer.
    pub fn adjacency_matrix(&self) -> TransitionMatrix {
        let rows: Vec<Vec<u64>> = self
            .edges
            .iter()
            .map(|row| row.iter().map(|&b| if b { 1 } else { 0 }).collect())
            .collect();
        TransitionMatrix::from_rows(rows).expect("covering graph is nonempty")
    }
}

/// Build the covering graph of f over the partition.
pub fn build_covering_graph(
    f: &PLMap,
    partition: &IntervalPartition,
) -> Result<CoveringGraph, IntervalError> {
    let n = partition.len();
    let mut edges = vec![vec![false; n]; n];
    for i in 0..n {
        let image = f.image_bounds(&partition.closed(i))?;
        for j in 0..n {
            edges[i][j] = image.contains_interval(&partition.closed(j));
        }
    }
    Ok(CoveringGraph { partition: partition.clone(), edges })
}
