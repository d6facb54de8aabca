//! One-point algebraic geometry codes C_L(D, m P∞) on the projective line
//! (Reed–Solomon codes) and on Hermitian curves y^r + y = x^(r+1) over GF(r²).
//!
//! The Riemann–Roch space L(m P∞) is spanned by the monomials x^i y^j
//! (j < r on the Hermitian curve) whose pole order at infinity,
//! i·r + j·(r+1), is at most m.

use std::collections::HashSet;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveFamily {
    /// The projective line; genus 0.
    Rational,
    /// y^r + y = x^(r+1) over GF(r²); genus r(r-1)/2.
    Hermitian { r: u32 },
}

/// A curve over a fixed field together with its Weierstrass semigroup at P∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    family: CurveFamily,
    field: Field,
}

/// A rational place. Affine places carry coordinates; `Infinity` is P∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Line { x: Gf },
    Hermitian { x: Gf, y: Gf },
    Infinity,
}

/// The function x^i y^j with its pole order at P∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub pole_order: usize,
}

impl Curve {
    pub fn rational(field: Field) -> Curve {
        Curve {
            family: CurveFamily::Rational,
            field,
        }
    }

    /// The Hermitian curve over GF(r²); r must be a power of two.
    pub fn hermitian(r: u32, field: Field) -> Result<Curve> {
        if r < 2 || !r.is_power_of_two() {
            return Err(Error::HermitianOddCharacteristic(r));
        }
        if field.order() as u64 != r as u64 * r as u64 {
            return Err(Error::HermitianFieldMismatch { q: field.order(), r });
        }
        Ok(Curve {
            family: CurveFamily::Hermitian { r },
            field,
        })
    }

    /// The Hermitian curve over GF(r²) with the default modulus.
    pub fn hermitian_default(r: u32) -> Result<Curve> {
        if r < 2 || !r.is_power_of_two() || r > 256 {
            return Err(Error::HermitianOddCharacteristic(r));
        }
        Curve::hermitian(r, Field::with_order(r * r)?)
    }

    pub fn family(&self) -> CurveFamily {
        self.family
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn genus(&self) -> usize {
        match self.family {
            CurveFamily::Rational => 0,
            CurveFamily::Hermitian { r } => (r * (r - 1) / 2) as usize,
        }
    }

    /// Generators of the Weierstrass semigroup at P∞.
    pub fn semigroup_generators(&self) -> Vec<usize> {
        match self.family {
            CurveFamily::Rational => vec![1],
            CurveFamily::Hermitian { r } => vec![r as usize, r as usize + 1],
        }
    }

    /// Whether some function regular away from P∞ has exactly this pole order.
    pub fn is_pole_order(&self, s: usize) -> bool {
        match self.family {
            CurveFamily::Rational => true,
            CurveFamily::Hermitian { r } => {
                let r = r as usize;
                // s = i r + j (r+1) with 0 <= j < r is unique; j ≡ s (mod r)
                let j = s % r;
                j * (r + 1) <= s
            }
        }
    }

    /// Positive integers that are not pole orders.
    pub fn gaps(&self) -> Vec<usize> {
        let g = self.genus();
        (1..2 * g.max(1)).filter(|&s| !self.is_pole_order(s)).collect()
    }

    /// Every affine rational place, ordered by (x, y).
    pub fn places(&self) -> Vec<Place> {
        let f = &self.field;
        match self.family {
            CurveFamily::Rational => f.elements().map(|x| Place::Line { x }).collect(),
            CurveFamily::Hermitian { r } => {
                let mut out = Vec::with_capacity((r * r * r) as usize);
                for x in f.elements() {
                    let rhs = f.pow(x, r as u64 + 1);
                    for y in f.elements() {
                        if f.add(f.pow(y, r as u64), y) == rhs {
                            out.push(Place::Hermitian { x, y });
                        }
                    }
                }
                out
            }
        }
    }

    fn on_curve(&self, p: &Place) -> bool {
        let f = &self.field;
        match (self.family, *p) {
            (CurveFamily::Rational, Place::Line { x }) => f.contains(x),
            (CurveFamily::Hermitian { r }, Place::Hermitian { x, y }) => {
                f.contains(x) && f.contains(y) && f.add(f.pow(y, r as u64), y) == f.pow(x, r as u64 + 1)
            }
            _ => false,
        }
    }

    /// ℓ(m P∞): the number of pole orders in 0..=m.
    pub fn rr_dimension(&self, m: usize) -> usize {
        (0..=m).filter(|&s| self.is_pole_order(s)).count()
    }

    /// Monomial basis of L(m P∞), sorted by pole order.
    pub fn rr_basis(&self, m: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        match self.family {
            CurveFamily::Rational => {
                out.extend((0..=m).map(|i| Monomial {
                    i: i as u32,
                    j: 0,
                    pole_order: i,
                }));
            }
            CurveFamily::Hermitian { r } => {
                let r = r as usize;
                for j in 0..r {
                    let mut i = 0;
                    while i * r + j * (r + 1) <= m {
                        out.push(Monomial {
                            i: i as u32,
                            j: j as u32,
                            pole_order: i * r + j * (r + 1),
                        });
                        i += 1;
                    }
                }
            }
        }
        out.sort_by_key(|mono| mono.pole_order);
        out
    }

    fn evaluate(&self, mono: &Monomial, p: &Place) -> Gf {
        let f = &self.field;
        match *p {
            Place::Line { x } => f.pow(x, mono.i as u64),
            Place::Hermitian { x, y } => f.mul(f.pow(x, mono.i as u64), f.pow(y, mono.j as u64)),
            Place::Infinity => unreachable!("P∞ is rejected before evaluation"),
        }
    }

    /// C_L(D, m P∞) for D the sum of the given places; requires m < n.
    pub fn build_code(&self, places: &[Place], m: usize) -> Result<LinearCode> {
        let n = places.len();
        if m >= n {
            return Err(Error::DegreeTooLarge { m, n });
        }
        let mut seen = HashSet::with_capacity(n);
        for (idx, p) in places.iter().enumerate() {
            if *p == Place::Infinity {
                return Err(Error::PlaceAtInfinity);
            }
            if !self.on_curve(p) {
                return Err(Error::NotOnCurve(idx));
            }
            if !seen.insert(*p) {
                return Err(Error::DuplicatePlace(idx));
            }
        }
        let basis = self.rr_basis(m);
        let rows: Vec<Vec<Gf>> = basis
            .iter()
            .map(|mono| places.iter().map(|p| self.evaluate(mono, p)).collect())
            .collect();
        LinearCode::new(self.field, Matrix::from_rows(n, &rows))
    }
}

/// Hermitian code over GF(r²) on all r³ affine places.
pub fn hermitian_code(r: u32, m: usize) -> Result<LinearCode> {
    let curve = Curve::hermitian_default(r)?;
    curve.build_code(&curve.places(), m)
}

/// Reed–Solomon code over GF(q) evaluating at the first `n` elements in bit order.
pub fn reed_solomon(q: u32, n: usize, m: usize) -> Result<LinearCode> {
    let curve = Curve::rational(Field::with_order(q)?);
    let places = curve.places();
    if n > places.len() {
        return Err(Error::NotEnoughPlaces {
            needed: n,
            available: places.len(),
        });
    }
    curve.build_code(&places[..n], m)
}

/// Dimension and distance predictions for C_L(D, m P∞) and its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignedParameters {
    pub k: usize,
    pub d_lower: usize,
    pub k_dual: usize,
    pub d_dual_lower: usize,
}

/// k = m - g + 1, d ≥ n - m, k⊥ = n - m + g - 1, d⊥ ≥ m - (2g - 2), valid
/// for 2g - 2 < m < n.
pub fn designed_parameters(n: usize, m: usize, g: usize) -> Result<DesignedParameters> {
    if m + 2 <= 2 * g {
        return Err(Error::Hypothesis(format!(
            "2g-2 < m fails: 2g-2 = {} >= m = {m}",
            2 * g as i64 - 2
        )));
    }
    if m >= n {
        return Err(Error::Hypothesis(format!("m < n fails: m = {m} >= n = {n}")));
    }
    Ok(DesignedParameters {
        k: m + 1 - g,
        d_lower: n - m,
        k_dual: n + g - m - 1,
        d_dual_lower: m + 2 - 2 * g,
    })
}
