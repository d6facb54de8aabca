//! Linear codes over GF(2^m): duals, hulls, LCD testing, exact minimum
//! distance, Schur scaling and support-restricted subcodes.

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::matrix::Matrix;

/// Default cap on the number of codewords `min_distance` will enumerate.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 1 << 24;

/// A subset of coordinate indices `{0, .., n-1}`, n <= 64, as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(pub u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn full(n: usize) -> IndexSet {
        assert!(n <= 64, "index sets hold at most 64 coordinates");
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> IndexSet {
        IndexSet(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(IndexSet(cur))
        })
    }

    /// Complement within `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> IndexSet {
        IndexSet(!self.0 & IndexSet::full(n).0)
    }
}

impl fmt::LowerHex for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Support of a vector as an index set; the vector must have length <= 64.
pub fn support(v: &[Gf]) -> IndexSet {
    assert!(v.len() <= 64, "index sets hold at most 64 coordinates");
    IndexSet::from_indices(v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i))
}

pub fn weight(v: &[Gf]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// q^e as a `u128`, or `None` on overflow.
pub(crate) fn checked_qpow(q: u32, e: usize) -> Option<u128> {
    (q as u128).checked_pow(u32::try_from(e).ok()?)
}

/// A linear [n, k] code, stored by its generator matrix in reduced row
/// echelon form so that equality of codes is equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Matrix,
}

impl LinearCode {
    /// Builds a code from a full-row-rank generator matrix.
    pub fn new(field: Field, gen: Matrix) -> Result<Self> {
        let rows = gen.rows();
        let code = LinearCode::span(field, gen);
        if code.k() != rows {
            return Err(Error::RankDeficient { rows, rank: code.k() });
        }
        Ok(code)
    }

    /// The code spanned by the rows of `gen`, whatever its rank.
    pub fn span(field: Field, gen: Matrix) -> Self {
        debug_assert!(gen.data().iter().all(|&x| field.contains(x)));
        let n = gen.cols();
        LinearCode {
            field,
            n,
            gen: gen.row_space_basis(&field),
        }
    }

    pub fn from_rows<R: AsRef<[Gf]>>(field: Field, n: usize, rows: &[R]) -> Result<Self> {
        LinearCode::new(field, Matrix::from_rows(n, rows))
    }

    pub fn zero(field: Field, n: usize) -> Self {
        LinearCode {
            field,
            n,
            gen: Matrix::zeros(0, n),
        }
    }

    pub fn full(field: Field, n: usize) -> Self {
        LinearCode {
            field,
            n,
            gen: Matrix::identity(n),
        }
    }

    /// A uniformly random spanning set of `k` rows; the result may have
    /// dimension below `k` when the draw is dependent.
    pub fn random<R: Rng + ?Sized>(field: Field, n: usize, k: usize, rng: &mut R) -> Self {
        let q = field.order();
        let data = (0..n * k).map(|_| Gf(rng.gen_range(0..q) as u16)).collect();
        LinearCode::span(field, Matrix::new(k, n, data))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Message times generator.
    pub fn encode(&self, msg: &[Gf]) -> Vec<Gf> {
        assert_eq!(msg.len(), self.k(), "message length");
        let f = &self.field;
        let mut out = vec![Gf::ZERO; self.n];
        for (row, &c) in self.gen.iter_rows().zip(msg) {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    /// True iff `v` is orthogonal to every generator row, i.e. `v` lies in the dual.
    pub fn dual_contains(&self, v: &[Gf]) -> bool {
        v.len() == self.n && self.gen.iter_rows().all(|row| self.field.dot(row, v).is_zero())
    }

    pub fn contains(&self, v: &[Gf]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let extended = self.gen.stack(&Matrix::from_rows(self.n, &[v]));
        extended.rank(&self.field) == self.k()
    }

    /// Number of codewords q^k, if it fits.
    pub fn size(&self) -> Option<u128> {
        checked_qpow(self.field.order(), self.k())
    }

    /// Every codeword in message order (first message symbol most
    /// significant), subject to an enumeration budget.
    pub fn codewords(&self, budget: u128) -> Result<Vec<Vec<Gf>>> {
        let total = self.size().filter(|&s| s <= budget).ok_or(Error::BudgetExceeded {
            needed: self.size().unwrap_or(u128::MAX),
            budget,
        })?;
        let q = self.field.order() as u128;
        let k = self.k();
        Ok((0..total)
            .map(|idx| {
                let mut msg = vec![Gf::ZERO; k];
                let mut rest = idx;
                for slot in msg.iter_mut().rev() {
                    *slot = Gf((rest % q) as u16);
                    rest /= q;
                }
                self.encode(&msg)
            })
            .collect())
    }

    /// The Euclidean dual, computed as the right kernel of the generator.
    pub fn dual(&self) -> LinearCode {
        let kernel = self.gen.right_kernel(&self.field);
        LinearCode::span(self.field, kernel)
    }

    /// dim(C ∩ C^⊥) via the Gram matrix: k - rank(G Gᵀ).
    pub fn hull_dimension_gram(&self) -> usize {
        let gram = self.gen.mul(&self.field, &self.gen.transpose());
        self.k() - gram.rank(&self.field)
    }

    /// dim(C ∩ C^⊥) from the ranks of C, C^⊥ and their sum: n - rank([G; H]).
    pub fn hull_dimension_intersection(&self) -> usize {
        let h = self.dual();
        self.n - self.gen.stack(h.generator()).rank(&self.field)
    }

    pub fn hull_dimension(&self) -> usize {
        let fast = self.hull_dimension_gram();
        debug_assert_eq!(fast, self.hull_dimension_intersection(), "hull cross-check");
        fast
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    /// Exact minimum distance by enumerating one message per projective
    /// class (leading nonzero symbol equal to one).
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_budget(DEFAULT_DISTANCE_BUDGET)
    }

    pub fn min_distance_with_budget(&self, budget: u128) -> Result<usize> {
        let k = self.k();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        let needed = self.size().unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let q = self.field.order();
        // One task per (leading position, next symbol) pair keeps workers busy
        // without changing the result.
        let tasks: Vec<(usize, Option<u16>)> = (0..k)
            .flat_map(|lead| {
                if lead + 1 < k {
                    (0..q).map(|s| (lead, Some(s as u16))).collect::<Vec<_>>()
                } else {
                    vec![(lead, None)]
                }
            })
            .collect();
        let best = tasks
            .par_iter()
            .map(|&(lead, next)| self.min_weight_in_block(lead, next))
            .min()
            .expect("k >= 1 gives at least one task");
        Ok(best)
    }

    /// Minimum weight over messages with zeros before `lead`, a one at
    /// `lead`, `next` at `lead + 1` (if given) and anything afterwards.
    fn min_weight_in_block(&self, lead: usize, next: Option<u16>) -> usize {
        let f = &self.field;
        let q = f.order() as u16;
        let add_row = |word: &mut [Gf], row: usize, c: Gf| {
            if c.is_zero() {
                return;
            }
            for (w, &g) in word.iter_mut().zip(self.gen.row(row)) {
                *w = f.add(*w, f.mul(c, g));
            }
        };
        let mut word = self.gen.row(lead).to_vec();
        let mut start = lead + 1;
        if let Some(s) = next {
            add_row(&mut word, lead + 1, Gf(s));
            start += 1;
        }
        let free: Vec<usize> = (start..self.k()).collect();
        let mut digits = vec![0u16; free.len()];
        let mut best = weight(&word);
        // odometer over the free symbols, last position fastest
        'outer: loop {
            let mut pos = free.len();
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                let old = digits[pos];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[pos] = new;
                add_row(&mut word, free[pos], Gf(old ^ new));
                if new != 0 {
                    break;
                }
            }
            best = best.min(weight(&word));
        }
        best
    }

    /// The code a * C = {a * c : c in C}; `a` must be all-nonzero.
    pub fn scale(&self, a: &[Gf]) -> Result<LinearCode> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: self.n,
            });
        }
        if let Some(i) = a.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroCoordinate(i));
        }
        let rows: Vec<Vec<Gf>> = self
            .gen
            .iter_rows()
            .map(|row| self.field.schur(a, row).expect("lengths checked"))
            .collect();
        Ok(LinearCode::span(self.field, Matrix::from_rows(self.n, &rows)))
    }

    /// Restriction to the listed coordinates (the dimension may drop).
    pub fn puncture(&self, keep: &[usize]) -> Result<LinearCode> {
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        Ok(LinearCode::span(self.field, self.gen.select_columns(keep)))
    }

    fn check_index_set(&self, set: IndexSet) -> Result<()> {
        if self.n > 64 {
            return Err(Error::TooLongForIndexSet(self.n));
        }
        match set.iter().find(|&i| i >= self.n) {
            Some(index) => Err(Error::IndexOutOfRange { index, n: self.n }),
            None => Ok(()),
        }
    }

    /// Dimension of the subcode {c in C : supp(c) ⊆ I}:
    /// k minus the rank of the generator restricted to columns outside I.
    pub fn support_subset_dim(&self, set: IndexSet) -> Result<usize> {
        self.check_index_set(set)?;
        let outside: Vec<usize> = set.complement(self.n).iter().collect();
        Ok(self.k() - self.gen.select_columns(&outside).rank(&self.field))
    }

    /// |{c in C : supp(c) ⊆ I}| = q^(support_subset_dim).
    pub fn support_subset_count(&self, set: IndexSet) -> Result<BigUint> {
        let d = self.support_subset_dim(set)?;
        Ok(BigUint::from(self.field.order()).pow(d as u32))
    }

    /// The subcode of codewords vanishing outside I, as a code of length n.
    pub fn shortened_to(&self, set: IndexSet) -> Result<LinearCode> {
        self.check_index_set(set)?;
        let outside: Vec<usize> = set.complement(self.n).iter().collect();
        // messages x with x G restricted to `outside` equal to zero
        let restricted = self.gen.select_columns(&outside);
        let msgs = restricted.transpose().right_kernel(&self.field);
        Ok(LinearCode::span(self.field, msgs.mul(&self.field, &self.gen)))
    }
}
