use lcdag_core::gf::default_modulus;
use lcdag_core::{Field, Gf};
use proptest::prelude::*;

/// Schoolbook multiply-then-reduce, independent of the library's loop.
fn slow_mul(m: u32, modulus: u32, a: u16, b: u16) -> u16 {
    let mut prod: u64 = 0;
    for i in 0..m {
        if (b >> i) & 1 == 1 {
            prod ^= (a as u64) << i;
        }
    }
    for bit in (m..2 * m).rev() {
        if (prod >> bit) & 1 == 1 {
            prod ^= (modulus as u64) << (bit - m);
        }
    }
    prod as u16
}

fn field_and_triple() -> impl Strategy<Value = (Field, Gf, Gf, Gf)> {
    (1u32..=16).prop_flat_map(|m| {
        let f = Field::with_degree(m).unwrap();
        let q = f.order();
        let el = move || (0..q).prop_map(|x| Gf(x as u16));
        (Just(f), el(), el(), el())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms((f, a, b, c) in field_and_triple()) {
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, b).0, slow_mul(f.m(), f.modulus(), a.0, b.0));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Gf::ONE);
            prop_assert_eq!(f.mul(f.div(b, a).unwrap(), a), b);
        }
    }

    #[test]
    fn trace_is_linear_and_binary((f, a, b, _) in field_and_triple()) {
        let m = f.m();
        let t = |x| f.trace(x, m).unwrap();
        prop_assert!(t(a) == Gf::ZERO || t(a) == Gf::ONE);
        prop_assert_eq!(t(f.add(a, b)), f.add(t(a), t(b)));
        for j in 1..=m {
            prop_assert_eq!(f.trace(f.add(a, b), j).unwrap(), f.add(f.trace(a, j).unwrap(), f.trace(b, j).unwrap()));
        }
    }
}

#[test]
fn frobenius_and_roots_exhaustive() {
    for m in 1..=8 {
        let f = Field::with_degree(m).unwrap();
        for a in f.elements() {
            assert_eq!(f.sqrt(f.square(a)), a);
            assert_eq!(f.square(f.sqrt(a)), a);
            assert_eq!(f.pow(a, f.order() as u64), a);
            for b in f.elements() {
                assert_eq!(f.square(f.add(a, b)), f.add(f.square(a), f.square(b)));
            }
        }
    }
}

#[test]
fn nonzero_elements_form_a_cyclic_group() {
    for m in 1..=10 {
        let f = Field::with_degree(m).unwrap();
        let order = f.order() as u64 - 1;
        let has_generator = f
            .nonzero()
            .any(|g| (1..order).all(|e| !order.is_multiple_of(e) || f.pow(g, e) != Gf::ONE));
        assert!(has_generator, "GF(2^{m})");
    }
}

#[test]
fn default_moduli_are_the_smallest_irreducibles() {
    // Trial division by every polynomial of degree 1..=deg/2.
    fn divides(d: u32, p: u32) -> bool {
        let dd = 31 - d.leading_zeros();
        let mut r = p;
        while r != 0 && 31 - r.leading_zeros() >= dd {
            r ^= d << (31 - r.leading_zeros() - dd);
        }
        r == 0
    }
    fn irreducible(p: u32) -> bool {
        let deg = 31 - p.leading_zeros();
        (2u32..1 << (deg / 2 + 1))
            .filter(|d| 31 - d.leading_zeros() >= 1)
            .all(|d| !divides(d, p))
    }
    for m in 1..=16u32 {
        let expected = ((1u32 << m)..(1 << (m + 1)))
            .find(|&p| p & 1 == 1 && irreducible(p))
            .unwrap();
        assert_eq!(default_modulus(m).unwrap(), expected, "m={m}");
    }
}
