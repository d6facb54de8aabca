//! Turning a linear code into an equivalent LCD code by coordinatewise
//! scaling, together with the counting sets used to bound how many scaling
//! vectors can fail.
//!
//! For a code C and a nonzero codeword u with support I = supp(u):
//!
//! - `S_I(C)` is the set of codewords whose support is exactly I;
//! - `T_u(C)` is the set of all-nonzero vectors v with v² * u in C^⊥;
//! - `R_u(C) = {v² * u : v in T_u(C)}` is a subset of `S_I(C^⊥)`.
//!
//! A vector a outside every `T_u(C)` makes `a * C` LCD. In characteristic two
//! every element has exactly one square root, so each word of `S_I(C^⊥)` is
//! reached from exactly one restriction of v to I and
//! `|T_u(C)| = (q-1)^(n-w) |R_u(C)|` with `|R_u(C)| = |S_I(C^⊥)|`.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{checked_qpow, support, IndexSet, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};

/// Default number of index sets examined by [`check_condition_3_4`].
pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 20;
/// Seed of the stratified index-set sample used beyond the subset budget.
pub const SUBSET_SAMPLE_SEED: u64 = 0x0005_eed0_f1cd;
/// Largest |I| for which inclusion–exclusion over subsets of I is used.
const MAX_INCLUSION_EXCLUSION: usize = 22;
/// Word budget when counting S_I by enumerating a shortened subcode.
const SUBCODE_WORD_BUDGET: u128 = 1 << 22;
/// Sign decisions closer to zero than this are reported as indeterminate.
pub const SIGN_TOLERANCE: f64 = 1e-9;

/// Ratio type used for the genus-to-length constant λ.
pub type Lambda = Ratio<u64>;

fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("fits in 64 bits") as f64;
    top.log2() + shift as f64
}

fn log2_positive_rational(x: &BigRational) -> f64 {
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    log2_biguint(num) - log2_biguint(den)
}

fn to_rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

fn q_exponent(field: &Field) -> u64 {
    field.m() as u64
}

// ---------------------------------------------------------------------------
// S_I

/// |S_I(C)| by inclusion–exclusion over the subsets J of I:
/// Σ_J (-1)^{|I \ J|} |{c in C : supp(c) ⊆ J}|.
pub fn count_s_i(code: &LinearCode, set: IndexSet) -> Result<BigUint> {
    if set.is_empty() {
        return Err(Error::Domain("S_I needs a nonempty index set".into()));
    }
    if set.len() > MAX_INCLUSION_EXCLUSION {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << set.len(),
            budget: 1u128 << MAX_INCLUSION_EXCLUSION,
        });
    }
    let q = BigInt::from(code.field().order());
    let mut total = BigInt::zero();
    for sub in set.subsets() {
        let term = q.pow(code.support_subset_dim(sub)? as u32);
        if (set.len() - sub.len()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total.to_biguint().expect("a count is nonnegative"))
}

/// Codewords of C whose support is exactly I, listed from the shortened
/// subcode; bounded by a word budget.
pub fn words_with_support(code: &LinearCode, set: IndexSet, budget: u128) -> Result<Vec<Vec<Gf>>> {
    let sub = code.shortened_to(set)?;
    Ok(sub
        .codewords(budget)?
        .into_iter()
        .filter(|w| support(w) == set)
        .collect())
}

/// |S_I(C)| by whichever exact method is affordable.
fn count_s_i_any(code: &LinearCode, set: IndexSet) -> Result<BigUint> {
    if set.len() <= MAX_INCLUSION_EXCLUSION {
        count_s_i(code, set)
    } else {
        Ok(BigUint::from(words_with_support(code, set, SUBCODE_WORD_BUDGET)?.len()))
    }
}

/// |S_I(C)| for every I ⊆ {0..n-1} at once, via the Möbius transform of the
/// subset-support counts. Returns `None` when the values might overflow.
fn all_support_counts(code: &LinearCode) -> Result<Option<Vec<i128>>> {
    let n = code.n();
    if n > 24 {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << n.min(127),
            budget: 1 << 24,
        });
    }
    match checked_qpow(code.field().order(), code.k()) {
        Some(s) if s.checked_shl(n as u32 + 1).is_some_and(|v| v < i128::MAX as u128) => {}
        _ => return Ok(None),
    }
    let q = code.field().order() as i128;
    let mut counts: Vec<i128> = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| code.support_subset_dim(IndexSet(mask)).map(|d| q.pow(d as u32)))
        .collect::<Result<_>>()?;
    for bit in 0..n {
        let b = 1usize << bit;
        for mask in 0..counts.len() {
            if mask & b != 0 {
                counts[mask] -= counts[mask ^ b];
            }
        }
    }
    Ok(Some(counts))
}

// ---------------------------------------------------------------------------
// T_u and R_u

/// Sizes of R_u(C) and T_u(C) for one codeword u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TCount {
    pub support: IndexSet,
    pub w: usize,
    pub r_count: u128,
    pub t_count: BigUint,
}

/// The restriction to I of the unique v with v² * u = c on I, where
/// supp(c) = supp(u) = I.
fn root_ratio(field: &Field, u: &[Gf], c: &[Gf], set: IndexSet) -> Vec<(usize, Gf)> {
    set.iter()
        .map(|i| {
            (
                i,
                field.sqrt(field.div(c[i], u[i]).expect("u is nonzero on its support")),
            )
        })
        .collect()
}

/// R_u(C) as a list of dual words: members of S_I(C^⊥) of the form v² * u.
pub fn r_set(code: &LinearCode, dual: &LinearCode, u: &[Gf]) -> Result<Vec<Vec<Gf>>> {
    let f = code.field();
    let set = support(u);
    let mut out = Vec::new();
    for c in words_with_support(dual, set, SUBCODE_WORD_BUDGET)? {
        let roots = root_ratio(f, u, &c, set);
        if roots.iter().all(|&(i, v)| f.mul(f.square(v), u[i]) == c[i]) {
            out.push(c);
        }
    }
    Ok(out)
}

/// |T_u(C)| computed through R_u(C).
pub fn count_t_u(code: &LinearCode, u: &[Gf]) -> Result<TCount> {
    if u.len() != code.n() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: code.n(),
        });
    }
    if u.iter().all(|x| x.is_zero()) || !code.contains(u) {
        return Err(Error::NotACodeword);
    }
    let dual = code.dual();
    let r_count = r_set(code, &dual, u)?.len() as u128;
    let set = support(u);
    let w = set.len();
    let free = BigUint::from(code.field().order() - 1).pow((code.n() - w) as u32);
    Ok(TCount {
        support: set,
        w,
        r_count,
        t_count: free * r_count,
    })
}

// ---------------------------------------------------------------------------
// γ_q(n) and the counting condition on S_I

/// log₂ γ_q(n) for γ_q(n) = 2 (2 q^λ)^n, i.e. 1 + n (1 + λ log₂ q).
pub fn gamma_log2(n: u64, log2_q: f64, lambda: f64) -> f64 {
    1.0 + n as f64 * (1.0 + lambda * log2_q)
}

/// γ_q(n) as an integer when λ n log₂ q is an integer.
fn gamma_exact(n: u64, e: u64, lambda: Lambda) -> Option<BigUint> {
    let num = (*lambda.numer() as u128) * n as u128 * e as u128;
    let den = *lambda.denom() as u128;
    num.is_multiple_of(den)
        .then(|| BigUint::one() << (1 + n as u128 + num / den) as usize)
}

/// Is `count <= main + γ`? Exact when γ is an integer, log-domain otherwise.
fn within_bound(count: &BigUint, main: &BigRational, gamma: Option<&BigUint>, gamma_log2: f64) -> bool {
    let excess = to_rational(count) - main;
    if !excess.is_positive() {
        return true;
    }
    match gamma {
        Some(g) => excess <= to_rational(g),
        None => log2_positive_rational(&excess) <= gamma_log2,
    }
}

/// Counts and bounds for one index set I.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub set: IndexSet,
    pub w: usize,
    /// |S_I(C)|.
    pub s_count: BigUint,
    /// |S_I(C^⊥)|.
    pub s_dual_count: BigUint,
    /// q^{-(n-k)} (q-1)^w.
    pub bound_main: BigRational,
    /// q^{-k} (q-1)^w.
    pub bound_main_dual: BigRational,
    pub gamma_log2: f64,
    pub primal_ok: bool,
    pub dual_ok: bool,
}

impl CountReport {
    pub fn bound_ok(&self) -> bool {
        self.primal_ok && self.dual_ok
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Condition34Report {
    pub reports: Vec<CountReport>,
    /// True when every nonempty index set was examined.
    pub exhaustive: bool,
    pub pass: bool,
}

/// Index sets to examine: all of them within budget, otherwise every set of
/// weight <= 3 plus a fixed-seed sample per larger weight class.
fn index_sets(n: usize, budget: u64) -> Vec<IndexSet> {
    let all = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    if all <= budget {
        return (1..=all).map(IndexSet).collect();
    }
    let mut chosen = BTreeSet::new();
    for a in 0..n {
        chosen.insert(IndexSet::from_indices([a]));
        for b in a + 1..n {
            chosen.insert(IndexSet::from_indices([a, b]));
            for c in b + 1..n {
                chosen.insert(IndexSet::from_indices([a, b, c]));
            }
        }
    }
    let classes = n.saturating_sub(3).max(1) as u64;
    let per_class = (budget.saturating_sub(chosen.len() as u64) / classes).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(SUBSET_SAMPLE_SEED);
    for w in 4..=n {
        for _ in 0..per_class {
            chosen.insert(IndexSet::from_indices(sample(&mut rng, n, w)));
        }
    }
    chosen.into_iter().collect()
}

/// Evaluates |S_I(C)| <= q^{-(n-k)}(q-1)^w + γ_q(n) and
/// |S_I(C^⊥)| <= q^{-k}(q-1)^w + γ_q(n) for the index sets I.
pub fn check_condition_3_4(code: &LinearCode, lambda: Lambda, budget: u64) -> Result<Condition34Report> {
    let n = code.n();
    if n > 64 {
        return Err(Error::TooLongForIndexSet(n));
    }
    if *lambda.numer() == 0 {
        return Err(Error::Domain("lambda must be positive".into()));
    }
    let field = *code.field();
    let e = q_exponent(&field);
    let q = BigInt::from(field.order());
    let dual = code.dual();
    let k = code.k();
    let lambda_f = *lambda.numer() as f64 / *lambda.denom() as f64;
    let g_log2 = gamma_log2(n as u64, e as f64, lambda_f);
    let gamma = gamma_exact(n as u64, e, lambda);

    let sets = index_sets(n, budget);
    let exhaustive = sets.len() as u128 == (1u128 << n) - 1;
    let tables = if exhaustive && n <= 24 {
        match (all_support_counts(code)?, all_support_counts(&dual)?) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    } else {
        None
    };

    let reports = sets
        .par_iter()
        .map(|&set| {
            let w = set.len();
            let (s_count, s_dual_count) = match &tables {
                Some((a, b)) => (
                    BigUint::from(a[set.0 as usize] as u128),
                    BigUint::from(b[set.0 as usize] as u128),
                ),
                None => (count_s_i_any(code, set)?, count_s_i_any(&dual, set)?),
            };
            let qm1w = BigInt::from(field.order() - 1).pow(w as u32);
            let bound_main = BigRational::new(qm1w.clone(), q.pow((n - k) as u32));
            let bound_main_dual = BigRational::new(qm1w, q.pow(k as u32));
            let primal_ok = within_bound(&s_count, &bound_main, gamma.as_ref(), g_log2);
            let dual_ok = within_bound(&s_dual_count, &bound_main_dual, gamma.as_ref(), g_log2);
            Ok(CountReport {
                set,
                w,
                s_count,
                s_dual_count,
                bound_main,
                bound_main_dual,
                gamma_log2: g_log2,
                primal_ok,
                dual_ok,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = reports.iter().all(CountReport::bound_ok);
    Ok(Condition34Report {
        reports,
        exhaustive,
        pass,
    })
}

// ---------------------------------------------------------------------------
// The main inequality

/// Three-valued outcome of a sign decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Indeterminate,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

/// Evaluation of
/// q^{-k}(q-1)^n − (n−d) γ 2^n q^{k−n}(q−1)^n − (n−d) 2^n γ² (q−1)^{n−d} > 0,
/// rewritten as 1 − 1/A − 1/B > 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Condition33 {
    /// log₂ A; infinite when n = d.
    pub log2_a: f64,
    /// log₂ B; infinite when n = d.
    pub log2_b: f64,
    /// min(log₂ A, log₂ B).
    pub margin: f64,
    pub log_domain: Verdict,
    /// Exact big-integer verdict, computed for n <= 64.
    pub exact: Option<Verdict>,
}

impl Condition33 {
    /// The exact verdict when available, otherwise the log-domain one.
    pub fn verdict(&self) -> Verdict {
        self.exact.unwrap_or(self.log_domain)
    }
}

/// `q` must be a power of two; `lambda` is the genus-to-length constant.
pub fn check_condition_3_3(n: u64, k: u64, d: u64, q: u64, lambda: Lambda) -> Result<Condition33> {
    if d < 1 || d > n || k > n {
        return Err(Error::Domain(format!(
            "need 1 <= d <= n and k <= n, got n={n} k={k} d={d}"
        )));
    }
    if !q.is_power_of_two() || q < 2 {
        return Err(Error::UnsupportedQ(q));
    }
    let e = q.trailing_zeros() as f64;
    let lambda_f = *lambda.numer() as f64 / *lambda.denom() as f64;
    let gl = gamma_log2(n, e, lambda_f);
    let (nf, kf, df) = (n as f64, k as f64, d as f64);
    let (log2_a, log2_b, log_domain) = if n == d {
        (f64::INFINITY, f64::INFINITY, Verdict::Holds)
    } else {
        let log_nd = ((n - d) as f64).log2();
        let a = -kf * e - log_nd - gl - nf - (kf - nf) * e;
        let b = -kf * e + df * ((q - 1) as f64).log2() - log_nd - nf - 2.0 * gl;
        let s = (-a).exp2() + (-b).exp2();
        let v = if (1.0 - s).abs() < SIGN_TOLERANCE {
            Verdict::Indeterminate
        } else if s < 1.0 {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        (a, b, v)
    };
    let exact = (n <= 64).then(|| exact_condition_3_3(n, k, d, q, lambda));
    Ok(Condition33 {
        log2_a,
        log2_b,
        margin: log2_a.min(log2_b),
        log_domain,
        exact,
    })
}

/// Exact sign of the inequality after multiplying through by q^n:
/// X − Y γ − Z γ² with X = q^{n−k}(q−1)^n, Y = (n−d)2^n q^k (q−1)^n,
/// Z = (n−d) 2^n q^n (q−1)^{n−d} and γ = 2^{1+n} t, t = 2^{λ n log₂ q}.
/// When t is irrational it is bracketed by dyadic rationals until the sign
/// of the (decreasing) quadratic is settled.
fn exact_condition_3_3(n: u64, k: u64, d: u64, q: u64, lambda: Lambda) -> Verdict {
    let big = |v: u64| BigInt::from(v);
    let pow = |b: u64, e: u64| big(b).pow(e as u32);
    let x = pow(q, n - k) * pow(q - 1, n);
    let nd = big(n - d);
    let y = &nd * pow(2, n) * pow(q, k) * pow(q - 1, n) * pow(2, n + 1);
    let z = &nd * pow(2, n) * pow(q, n) * pow(q - 1, n - d) * pow(2, 2 * n + 2);
    let f = |t: &BigRational| -> BigRational {
        BigRational::from_integer(x.clone())
            - BigRational::from_integer(y.clone()) * t
            - BigRational::from_integer(z.clone()) * t * t
    };
    let sign = |v: &BigRational| {
        if v.is_positive() {
            Verdict::Holds
        } else if v.is_negative() {
            Verdict::Fails
        } else {
            Verdict::Indeterminate
        }
    };
    let e = q.trailing_zeros() as u64;
    let exponent = Ratio::new(*lambda.numer() as u128 * n as u128 * e as u128, *lambda.denom() as u128);
    let (p, s) = (*exponent.numer(), *exponent.denom());
    if s == 1 {
        return sign(&f(&BigRational::from_integer(BigInt::one() << p as usize)));
    }
    // lo^s < 2^p < hi^s; 2^{p/s} is irrational since gcd(p, s) = 1 and s > 1
    let target = BigRational::from_integer(BigInt::one() << p as usize);
    let floor = (p / s) as usize;
    let mut lo = BigRational::from_integer(BigInt::one() << floor);
    let mut hi = BigRational::from_integer(BigInt::one() << (floor + 1));
    let two = BigRational::from_integer(big(2));
    for _ in 0..512 {
        let f_hi = f(&hi);
        if f_hi.is_positive() {
            return Verdict::Holds;
        }
        let f_lo = f(&lo);
        if f_lo.is_negative() || (f_lo.is_zero() && f_hi.is_zero()) {
            return Verdict::Fails;
        }
        let mid = (&lo + &hi) / &two;
        if num_traits::pow(mid.clone(), s as usize) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Verdict::Indeterminate
}

// ---------------------------------------------------------------------------
// Scaling search

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Lexicographic scan of (F_q^*)^n, first coordinate most significant.
    Exhaustive,
    /// Uniform draws from (F_q^*)^n with a fixed seed.
    Randomized { seed: u64 },
}

impl SearchMode {
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Randomized { .. } => "random",
        }
    }
}

/// A scaling vector a with a * C LCD.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingCertificate {
    pub a: Vec<Gf>,
    pub mode: SearchMode,
    /// Candidates examined, including the successful one.
    pub iterations: u64,
    /// `is_lcd(a * C)` re-checked on the canonical scaled code.
    pub verified: bool,
}

/// Fast LCD test for a * C: the Gram matrix G diag(a²) Gᵀ is nonsingular.
fn scaled_is_lcd(code: &LinearCode, a: &[Gf]) -> bool {
    let f = code.field();
    let g = code.generator();
    let k = code.k();
    let sq: Vec<Gf> = f.square_vec(a);
    let rows: Vec<Vec<Gf>> = (0..k).map(|i| f.schur(g.row(i), &sq).expect("length n")).collect();
    let mut gram = crate::matrix::Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = f.dot(&rows[i], g.row(j));
            gram[(i, j)] = v;
            gram[(j, i)] = v;
        }
    }
    gram.rank(f) == k
}

/// The candidate with lexicographic index `idx` (first coordinate most significant).
fn decode_candidate(idx: u64, n: usize, q: u32) -> Vec<Gf> {
    let base = (q - 1) as u64;
    let mut a = vec![Gf::ONE; n];
    let mut rest = idx;
    for slot in a.iter_mut().rev() {
        *slot = Gf((rest % base + 1) as u16);
        rest /= base;
    }
    a
}

/// Number of all-nonzero vectors, (q-1)^n, if it fits.
fn candidate_count(code: &LinearCode) -> Option<u128> {
    checked_qpow(code.field().order() - 1, code.n())
}

/// Searches for a scaling vector a with a * C LCD.
///
/// Exhaustive mode returns the lexicographically first success regardless of
/// the number of worker threads, or [`Error::NoLcdScaling`] once every
/// candidate is ruled out. Both modes give up with
/// [`Error::SearchInconclusive`] after `max_iters` candidates.
pub fn find_lcd_scaling(code: &LinearCode, mode: SearchMode, max_iters: u64) -> Result<ScalingCertificate> {
    let n = code.n();
    let q = code.field().order();
    let (a, iterations) = match mode {
        SearchMode::Exhaustive => {
            let total = candidate_count(code);
            let limit = total.map_or(max_iters, |t| t.min(max_iters as u128) as u64);
            let hit = (0..limit)
                .into_par_iter()
                .find_first(|&idx| scaled_is_lcd(code, &decode_candidate(idx, n, q)));
            match hit {
                Some(idx) => (decode_candidate(idx, n, q), idx + 1),
                None if total.is_some_and(|t| t <= limit as u128) => {
                    return Err(Error::NoLcdScaling {
                        candidates: limit as u128,
                    })
                }
                None => return Err(Error::SearchInconclusive { iterations: limit }),
            }
        }
        SearchMode::Randomized { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            for it in 1..=max_iters {
                let a: Vec<Gf> = (0..n).map(|_| Gf(rng.gen_range(1..q) as u16)).collect();
                if scaled_is_lcd(code, &a) {
                    found = Some((a, it));
                    break;
                }
            }
            found.ok_or(Error::SearchInconclusive { iterations: max_iters })?
        }
    };
    let verified = code.scale(&a)?.is_lcd();
    assert!(verified, "Gram test and canonical LCD test disagree");
    Ok(ScalingCertificate {
        a,
        mode,
        iterations,
        verified,
    })
}

// ---------------------------------------------------------------------------
// Union audit

/// Exact sizes behind the union bound |∪ T_u(C)| < (q-1)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionAudit {
    /// |∪_{u ≠ 0} T_u(C)|.
    pub union: u128,
    /// Σ_{u ≠ 0} |T_u(C)|, the union bound's upper estimate.
    pub sum_t: u128,
    /// (q-1)^n.
    pub total: u128,
}

impl UnionAudit {
    /// Strict inequality union < (q-1)^n.
    pub fn holds(&self) -> bool {
        self.union < self.total
    }

    pub fn slack(&self) -> u128 {
        self.total - self.union
    }
}

/// Marks every member of every T_u(C) on a bitmap of (F_q^*)^n.
pub fn union_bound_audit(code: &LinearCode) -> Result<UnionAudit> {
    const CANDIDATE_BUDGET: u128 = 1 << 20;
    const WORD_BUDGET: u128 = 1 << 16;
    let n = code.n();
    let total = candidate_count(code)
        .filter(|&t| t <= CANDIDATE_BUDGET)
        .ok_or(Error::BudgetExceeded {
            needed: candidate_count(code).unwrap_or(u128::MAX),
            budget: CANDIDATE_BUDGET,
        })?;
    let words = code.codewords(WORD_BUDGET)?;
    let f = *code.field();
    let base = (f.order() - 1) as u128;
    let dual = code.dual();

    let mut r_cache: HashMap<IndexSet, Vec<Vec<Gf>>> = HashMap::new();
    let mut marked = vec![false; total as usize];
    let mut sum_t = 0u128;
    for u in words.iter().filter(|u| u.iter().any(|x| !x.is_zero())) {
        let set = support(u);
        let dual_words = match r_cache.entry(set) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(words_with_support(&dual, set, WORD_BUDGET)?),
        };
        let free: Vec<usize> = set.complement(n).iter().collect();
        let completions = base.pow(free.len() as u32);
        sum_t += completions * dual_words.len() as u128;
        // T_{λu} = T_u, so marking one representative per projective class suffices
        let lead = u.iter().find(|x| !x.is_zero()).expect("nonzero word");
        if *lead != Gf::ONE {
            continue;
        }
        for c in dual_words {
            let mut v = vec![Gf::ONE; n];
            for (i, root) in root_ratio(&f, u, c, set) {
                v[i] = root;
            }
            for j in 0..completions {
                let mut rest = j;
                for &i in free.iter().rev() {
                    v[i] = Gf((rest % base + 1) as u16);
                    rest /= base;
                }
                let idx = v.iter().fold(0u128, |acc, x| acc * base + (x.0 as u128 - 1));
                marked[idx as usize] = true;
            }
        }
    }
    let union = marked.iter().filter(|&&b| b).count() as u128;
    Ok(UnionAudit { union, sum_t, total })
}
