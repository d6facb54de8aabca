//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the counting or search routines it is used to check.

#![allow(dead_code)]

use lcdag_core::code::support;
use lcdag_core::{Field, Gf, IndexSet, LinearCode, Matrix};

/// Every vector of (F_q^*)^n, first coordinate most significant.
pub fn nonzero_vectors(field: &Field, n: usize) -> Vec<Vec<Gf>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                field.nonzero().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every vector of F_q^n.
pub fn all_vectors(field: &Field, n: usize) -> Vec<Vec<Gf>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                field.elements().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every k-dimensional code of length n, one per reduced echelon generator.
pub fn all_codes(field: &Field, n: usize, k: usize) -> Vec<LinearCode> {
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let p = pivots.clone();
                (pivots[i] + 1..n).filter(move |j| !p.contains(j)).map(move |j| (i, j))
            })
            .collect();
        for fill in all_vectors(field, free.len()) {
            let mut g = Matrix::zeros(k, n);
            for (i, &p) in pivots.iter().enumerate() {
                g[(i, p)] = Gf::ONE;
            }
            for (&(i, j), &x) in free.iter().zip(&fill) {
                g[(i, j)] = x;
            }
            out.push(LinearCode::new(*field, g).expect("echelon form has full rank"));
        }
    }
    out
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

pub fn is_zero(v: &[Gf]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// |S_I(C)| by listing codewords.
pub fn direct_s_i(words: &[Vec<Gf>], set: IndexSet) -> u128 {
    words.iter().filter(|w| support(w) == set).count() as u128
}

/// v² * u in C^⊥ checked against every generator row.
fn in_t_u(code: &LinearCode, u: &[Gf], v: &[Gf]) -> bool {
    let f = code.field();
    let x: Vec<Gf> = v.iter().zip(u).map(|(&a, &b)| f.mul(f.mul(a, a), b)).collect();
    code.generator().iter_rows().all(|row| {
        row.iter()
            .zip(&x)
            .fold(Gf::ZERO, |acc, (&g, &y)| f.add(acc, f.mul(g, y)))
            .is_zero()
    })
}

/// |T_u(C)| by scanning (F_q^*)^n.
pub fn direct_t_u(code: &LinearCode, candidates: &[Vec<Gf>], u: &[Gf]) -> u128 {
    candidates.iter().filter(|v| in_t_u(code, u, v)).count() as u128
}

/// |∪_{u ≠ 0} T_u(C)| by scanning (F_q^*)^n against every nonzero codeword.
pub fn direct_union(code: &LinearCode) -> u128 {
    let words = code.codewords(1 << 16).unwrap();
    let candidates = nonzero_vectors(code.field(), code.n());
    candidates
        .iter()
        .filter(|v| words.iter().any(|u| !is_zero(u) && in_t_u(code, u, v)))
        .count() as u128
}
