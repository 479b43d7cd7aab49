//! Dyadic piecewise-linear homeomorphisms of `[0, 1]`.
//!
//! Every map is stored in canonical form: breakpoints start at `(0,0)`, end
//! at `(1,1)`, increase strictly in both coordinates, every segment has slope
//! `2^k`, and the slope changes at every interior breakpoint. Two maps are
//! equal as functions exactly when their breakpoint lists are equal.

use std::fmt::Write as _;

use thiserror::Error;

use crate::dyadic::Dyadic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("point {0} lies outside [0, 1]")]
    OutOfDomain(Dyadic),
    #[error("breakpoints must start at (0,0) and end at (1,1)")]
    BadEndpoints,
    #[error("breakpoint {0} is not strictly increasing")]
    NotIncreasing(usize),
    #[error("segment {0} has a slope that is not a power of two")]
    BadSlope(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlMap {
    points: Vec<(Dyadic, Dyadic)>,
    /// log2 of the slope of segment `i`, between `points[i]` and `points[i+1]`.
    slopes: Vec<i64>,
}

fn slope_log2(a: &(Dyadic, Dyadic), b: &(Dyadic, Dyadic)) -> Option<i64> {
    (&b.1 - &a.1).checked_div(&(&b.0 - &a.0))?.log2_exact()
}

impl PlMap {
    pub fn identity() -> PlMap {
        PlMap {
            points: vec![(Dyadic::zero(), Dyadic::zero()), (Dyadic::one(), Dyadic::one())],
            slopes: vec![0],
        }
    }

    /// Validates and canonicalizes a breakpoint list.
    pub fn from_breakpoints(points: Vec<(Dyadic, Dyadic)>) -> Result<PlMap, PlError> {
        let (first, last) = match (points.first(), points.last()) {
            (Some(f), Some(l)) if points.len() >= 2 => (f, l),
            _ => return Err(PlError::BadEndpoints),
        };
        if !first.0.is_zero() || !first.1.is_zero() || last.0 != Dyadic::one() || last.1 != Dyadic::one() {
            return Err(PlError::BadEndpoints);
        }
        let mut slopes = Vec::with_capacity(points.len() - 1);
        for (i, pair) in points.windows(2).enumerate() {
            if pair[1].0 <= pair[0].0 || pair[1].1 <= pair[0].1 {
                return Err(PlError::NotIncreasing(i + 1));
            }
            slopes.push(slope_log2(&pair[0], &pair[1]).ok_or(PlError::BadSlope(i))?);
        }
        Ok(PlMap::pruned(points, slopes))
    }

    /// Builds a map from points already known to be valid (strictly
    /// increasing, power-of-two slopes) and removes redundant breakpoints.
    fn from_valid_points(points: Vec<(Dyadic, Dyadic)>) -> PlMap {
        let slopes = points
            .windows(2)
            .map(|p| slope_log2(&p[0], &p[1]).expect("composite slope is a power of two"))
            .collect();
        PlMap::pruned(points, slopes)
    }

    fn pruned(points: Vec<(Dyadic, Dyadic)>, slopes: Vec<i64>) -> PlMap {
        let n = points.len();
        let mut kept_points = Vec::with_capacity(n);
        let mut kept_slopes: Vec<i64> = Vec::with_capacity(slopes.len());
        for (i, p) in points.into_iter().enumerate() {
            if i > 0 && i < n - 1 && slopes[i - 1] == slopes[i] {
                continue;
            }
            if i > 0 {
                kept_slopes.push(slopes[i - 1]);
            }
            kept_points.push(p);
        }
        PlMap {
            points: kept_points,
            slopes: kept_slopes,
        }
    }

    /// The generator `A_n`: for `n = 0` the map with breakpoints `(0,0)`,
    /// `(1/2,1/4)`, `(3/4,1/2)`, `(1,1)`; for `n >= 1` the identity on
    /// `[0, 1 - 2^-n]` followed by a copy of `A_0` rescaled onto
    /// `[1 - 2^-n, 1]`.
    pub fn generator(n: u64) -> PlMap {
        let n = u32::try_from(n).expect("generator index too large for the PL model");
        let base = Dyadic::one_minus_pow2(n);
        let at = |num: i64, den_log: u32| &base + &Dyadic::new(num, den_log + n);
        let mut points = vec![(Dyadic::zero(), Dyadic::zero())];
        if n > 0 {
            points.push((base.clone(), base.clone()));
        }
        points.push((at(1, 1), at(1, 2)));
        points.push((at(3, 2), at(1, 1)));
        points.push((Dyadic::one(), Dyadic::one()));
        PlMap::from_valid_points(points)
    }

    pub fn breakpoints(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    /// log2 slopes, one per segment.
    pub fn slopes(&self) -> &[i64] {
        &self.slopes
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 2
    }

    /// Largest denominator exponent over all breakpoint coordinates.
    pub fn max_exponent(&self) -> u32 {
        self.points
            .iter()
            .map(|(x, y)| x.exponent().max(y.exponent()))
            .max()
            .unwrap_or(0)
    }

    fn check_domain(t: &Dyadic) -> Result<(), PlError> {
        if t.is_negative() || *t > Dyadic::one() {
            Err(PlError::OutOfDomain(t.clone()))
        } else {
            Ok(())
        }
    }

    fn segment_by_input(&self, t: &Dyadic) -> usize {
        // last breakpoint with x <= t, capped so a segment exists
        let idx = self.points.partition_point(|(x, _)| x <= t);
        idx.saturating_sub(1).min(self.slopes.len() - 1)
    }

    fn segment_by_output(&self, t: &Dyadic) -> usize {
        let idx = self.points.partition_point(|(_, y)| y <= t);
        idx.saturating_sub(1).min(self.slopes.len() - 1)
    }

    pub fn eval(&self, t: &Dyadic) -> Result<Dyadic, PlError> {
        PlMap::check_domain(t)?;
        Ok(self.eval_unchecked(t))
    }

    fn eval_unchecked(&self, t: &Dyadic) -> Dyadic {
        let j = self.segment_by_input(t);
        let (x, y) = &self.points[j];
        y + &(t - x).mul_pow2(self.slopes[j])
    }

    fn preimage_unchecked(&self, t: &Dyadic) -> Dyadic {
        let j = self.segment_by_output(t);
        let (x, y) = &self.points[j];
        x + &(t - y).mul_pow2(-self.slopes[j])
    }

    /// `self ∘ inner`, i.e. `t ↦ self(inner(t))`.
    pub fn compose(&self, inner: &PlMap) -> PlMap {
        let pulled: Vec<Dyadic> = self
            .points
            .iter()
            .map(|(x, _)| inner.preimage_unchecked(x))
            .collect();
        let mut xs: Vec<&Dyadic> = Vec::with_capacity(inner.points.len() + pulled.len());
        let (mut i, mut j) = (0, 0);
        while i < inner.points.len() || j < pulled.len() {
            let next = match (inner.points.get(i), pulled.get(j)) {
                (Some((a, _)), Some(b)) => {
                    if a <= b {
                        if a == b {
                            j += 1;
                        }
                        i += 1;
                        a
                    } else {
                        j += 1;
                        b
                    }
                }
                (Some((a, _)), None) => {
                    i += 1;
                    a
                }
                (None, Some(b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            if xs.last() != Some(&next) {
                xs.push(next);
            }
        }
        let points = xs
            .into_iter()
            .map(|x| {
                let y = self.eval_unchecked(&inner.eval_unchecked(x));
                (x.clone(), y)
            })
            .collect();
        PlMap::from_valid_points(points)
    }

    pub fn inverse(&self) -> PlMap {
        PlMap {
            points: self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
            slopes: self.slopes.iter().map(|s| -s).collect(),
        }
    }

    /// One breakpoint per line, `<num>/2^<exp> -> <num>/2^<exp>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (x, y) in &self.points {
            let _ = writeln!(out, "{x} -> {y}");
        }
        out
    }
}

impl std::fmt::Debug for PlMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries(self.points.iter().map(|(x, y)| format!("{x} -> {y}")))
            .finish()
    }
}
