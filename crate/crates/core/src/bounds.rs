//! Asymptotic bound calculus for q a power of two: the q-ary entropy, the
//! Gilbert–Varshamov and Tsfasman–Vlăduţ-type rate functions, the
//! genus-to-points constant λ_q of the two towers, the admissible rate
//! windows for LCD algebraic geometry codes, and the δ-intervals where those
//! codes beat the GV bound.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<u64>;

/// Default number of δ grid points.
pub const DEFAULT_GRID: usize = 10_000;
/// Default bisection precision for crossover endpoints.
pub const DEFAULT_PRECISION: f64 = 1e-6;

fn exponent_of(q: u64) -> Result<u32> {
    if q.is_power_of_two() && q >= 4 {
        Ok(q.trailing_zeros())
    } else {
        Err(Error::UnsupportedQ(q))
    }
}

fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// q-ary entropy H_q(x) with every logarithm taken to base q, so that
/// H_q(1 - 1/q) = 1. Defined on [0, 1 - 1/q] with H_q(0) = 0.
pub fn entropy_q(q: u64, x: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::UnsupportedQ(q));
    }
    let qf = q as f64;
    let top = 1.0 - 1.0 / qf;
    if !(0.0..=top + 1e-12).contains(&x) || x.is_nan() {
        return Err(Error::Domain(format!("entropy argument {x} outside [0, {top}]")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let ln_q = qf.ln();
    let xlogx = |t: f64| if t <= 0.0 { 0.0 } else { t * t.ln() };
    Ok((x * (qf - 1.0).ln() - xlogx(x) - xlogx(1.0 - x)) / ln_q)
}

/// λ_q = 1/(2^r - 1) for q = 2^{2r}, and
/// (3(2^r - 1) + 1) / (2 (2^{r+1} - 1)(2^r - 1)) for q = 2^{2r+1}.
pub fn lambda_q(q: u64) -> Result<Rational> {
    let e = exponent_of(q)?;
    let r = e / 2;
    let p = (1u64 << r) - 1;
    Ok(if e % 2 == 0 {
        Rational::new(1, p)
    } else {
        Rational::new(3 * p + 1, 2 * ((1u64 << (r + 1)) - 1) * p)
    })
}

fn check_delta(q: u64, delta: f64) -> Result<()> {
    let top = 1.0 - 1.0 / q as f64;
    if delta > 0.0 && delta < top {
        Ok(())
    } else {
        Err(Error::Domain(format!("relative distance {delta} outside (0, {top})")))
    }
}

/// 1 - H_q(δ).
pub fn gv_rate(q: u64, delta: f64) -> Result<f64> {
    check_delta(q, delta)?;
    Ok(1.0 - entropy_q(q, delta)?)
}

/// 1 - λ_q - δ.
pub fn tv_rate(q: u64, delta: f64) -> Result<f64> {
    check_delta(q, delta)?;
    Ok(1.0 - ratio_to_f64(lambda_q(q)?) - delta)
}

/// An open interval (lo, hi); empty when lo >= hi.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateWindows {
    pub b1: f64,
    pub b2: f64,
    pub window1: Interval,
    pub window2: Interval,
}

/// The two rate windows: (2λ_q, min(b1, b2)) and (1 - min(b1, b2), 1 - 2λ_q), with
/// b1 = (1 - λ_q - 2/log₂q)/2 and
/// b2 = (log₂(q-1) - (1 + log₂(q-1))λ_q - 3) / log₂(q(q-1)).
pub fn rate_windows(q: u64) -> Result<RateWindows> {
    let lambda = ratio_to_f64(lambda_q(q)?);
    let log_q = exponent_of(q)? as f64;
    let log_qm1 = ((q - 1) as f64).log2();
    let b1 = 0.5 * (1.0 - lambda - 2.0 / log_q);
    let b2 = (log_qm1 - (1.0 + log_qm1) * lambda - 3.0) / (log_q + log_qm1);
    let upper = b1.min(b2);
    Ok(RateWindows {
        b1,
        b2,
        window1: Interval {
            lo: 2.0 * lambda,
            hi: upper,
        },
        window2: Interval {
            lo: 1.0 - upper,
            hi: 1.0 - 2.0 * lambda,
        },
    })
}

/// Left-hand sides of (1 - 2R - λ)log₂q - 2 > 0 and
/// δ log₂(q-1) - R log₂q - 3 - 2λ > 0.
pub fn check_3_1a(q: u64, rate: f64, delta: f64, lambda: f64) -> (f64, f64) {
    let log_q = (q as f64).log2();
    let log_qm1 = ((q - 1) as f64).log2();
    (
        (1.0 - 2.0 * rate - lambda) * log_q - 2.0,
        delta * log_qm1 - rate * log_q - 3.0 - 2.0 * lambda,
    )
}

/// Which rate window a crossover interval belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    First,
    Second,
}

/// check_3_1a for the code realising rate R = 1 - λ_q - δ. In the second
/// window the inequalities apply to the dual code, of rate 1 - R.
pub fn window_margins(q: u64, delta: f64, window: Window) -> Result<(f64, f64)> {
    let lambda = ratio_to_f64(lambda_q(q)?);
    let rate = 1.0 - lambda - delta;
    Ok(match window {
        Window::First => check_3_1a(q, rate, delta, lambda),
        Window::Second => {
            let dual_rate = 1.0 - rate;
            check_3_1a(q, dual_rate, 1.0 - lambda - dual_rate, lambda)
        }
    })
}

/// One δ sample of a bound profile.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridPoint {
    pub delta: f64,
    pub gv_rate: f64,
    pub tv_rate: f64,
    pub in_window_1: bool,
    pub in_window_2: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundProfile {
    pub q: u64,
    pub lambda_q: Rational,
    pub windows: RateWindows,
    pub grid: Vec<GridPoint>,
    pub crossover_1: Option<Interval>,
    pub crossover_2: Option<Interval>,
}

/// `points` equally spaced δ strictly inside (0, 1 - 1/q).
pub fn bound_grid(q: u64, points: usize) -> Result<Vec<GridPoint>> {
    let windows = rate_windows(q)?;
    let top = 1.0 - 1.0 / q as f64;
    (1..=points)
        .map(|i| {
            let delta = top * i as f64 / (points + 1) as f64;
            let tv = tv_rate(q, delta)?;
            Ok(GridPoint {
                delta,
                gv_rate: gv_rate(q, delta)?,
                tv_rate: tv,
                in_window_1: windows.window1.contains(tv),
                in_window_2: windows.window2.contains(tv),
            })
        })
        .collect()
}

/// TV minus GV rate at δ.
pub fn tv_minus_gv(q: u64, delta: f64) -> Result<f64> {
    Ok(tv_rate(q, delta)? - gv_rate(q, delta)?)
}

/// δ beats GV with a rate inside `window` and satisfies both inequalities
/// of the counting lemma for the corresponding code.
fn in_crossover(q: u64, windows: &RateWindows, window: Window, delta: f64) -> bool {
    let top = 1.0 - 1.0 / q as f64;
    if !(delta > 0.0 && delta < top) {
        return false;
    }
    let (Ok(tv), Ok(gv), Ok((m1, m2))) = (tv_rate(q, delta), gv_rate(q, delta), window_margins(q, delta, window))
    else {
        return false;
    };
    let w = match window {
        Window::First => windows.window1,
        Window::Second => windows.window2,
    };
    tv > gv && w.contains(tv) && m1 > 0.0 && m2 > 0.0
}

/// Boundary between a point where `pred` is `inside` and one where it is
/// not, to within `precision`.
fn bisect(mut inside: f64, mut outside: f64, precision: f64, pred: impl Fn(f64) -> bool) -> f64 {
    while (inside - outside).abs() > precision {
        let mid = 0.5 * (inside + outside);
        if pred(mid) {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// The first maximal run of grid points satisfying the crossover predicate,
/// with endpoints refined by bisection.
fn crossover_for(q: u64, windows: &RateWindows, window: Window, grid: usize, precision: f64) -> Option<Interval> {
    let top = 1.0 - 1.0 / q as f64;
    let pred = |d: f64| in_crossover(q, windows, window, d);
    let at = |i: usize| top * i as f64 / (grid + 1) as f64;
    let first = (1..=grid).find(|&i| pred(at(i)))?;
    let last = (first..=grid).take_while(|&i| pred(at(i))).last()?;
    Some(Interval {
        lo: bisect(at(first), at(first - 1), precision, pred),
        hi: bisect(at(last), at(last + 1), precision, pred),
    })
}

/// Grid profile plus the δ-intervals in which LCD AG codes of rate
/// 1 - λ_q - δ in window 1 (resp. window 2) exceed the GV bound.
pub fn crossover_intervals(q: u64, precision: f64, grid: usize) -> Result<BoundProfile> {
    if !precision.is_finite() || precision <= 0.0 || grid == 0 {
        return Err(Error::Domain("precision must be positive and the grid nonempty".into()));
    }
    let windows = rate_windows(q)?;
    Ok(BoundProfile {
        q,
        lambda_q: lambda_q(q)?,
        windows,
        grid: bound_grid(q, grid)?,
        crossover_1: crossover_for(q, &windows, Window::First, grid, precision),
        crossover_2: crossover_for(q, &windows, Window::Second, grid, precision),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tower {
    /// q = r², N(F) ≥ r^{t-1}(q-1) + 1.
    First,
    /// q = 2^{2m+1}, lim N(F)/(g(F) - 1) ≥ 2(2^{m+1}-1)(2^m-1)/(3(2^m-1)+1).
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerParams {
    pub tower: Tower,
    pub q: u64,
    /// r for the first tower, m for the second.
    pub parameter: u64,
    pub level: Option<u32>,
    /// Lower bound on the number of rational places at `level`.
    pub n_lower: Option<u128>,
    /// Limiting ratio of rational places to genus.
    pub ratio_limit: Rational,
}

pub fn tower_params(tower: Tower, q: u64, level: Option<u32>) -> Result<TowerParams> {
    let e = if q == 2 { 1 } else { exponent_of(q)? };
    match tower {
        Tower::First => {
            if e % 2 != 0 {
                return Err(Error::Domain(format!("first tower needs q = r^2, got q = {q}")));
            }
            let r = 1u64 << (e / 2);
            let n_lower = match level {
                Some(0) => return Err(Error::Domain("tower level starts at t = 1".into())),
                Some(t) => Some(
                    (r as u128)
                        .checked_pow(t - 1)
                        .and_then(|p| p.checked_mul(q as u128 - 1))
                        .and_then(|p| p.checked_add(1))
                        .ok_or(Error::Overflow("N(F) lower bound"))?,
                ),
                None => None,
            };
            Ok(TowerParams {
                tower,
                q,
                parameter: r,
                level,
                n_lower,
                ratio_limit: Rational::from_integer(r - 1),
            })
        }
        Tower::Second => {
            if e % 2 != 1 || e < 3 {
                return Err(Error::Domain(format!(
                    "second tower needs q = 2^(2m+1), m >= 1, got q = {q}"
                )));
            }
            let m = (e - 1) / 2;
            let a = (1u64 << m) - 1;
            let b = (1u64 << (m + 1)) - 1;
            Ok(TowerParams {
                tower,
                q,
                parameter: m as u64,
                level,
                n_lower: None,
                ratio_limit: Rational::new(2 * b * a, 3 * a + 1),
            })
        }
    }
}
