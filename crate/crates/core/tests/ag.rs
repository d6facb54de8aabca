use lcdag_core::ag::{designed_parameters, hermitian_code, reed_solomon, Curve, Place};
use lcdag_core::{Error, Field, Gf};

/// Pole orders below `bound` reachable as a·r + b·(r+1), found by brute force.
fn semigroup(r: usize, bound: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..bound)
        .flat_map(|a| (0..bound).map(move |b| a * r + b * (r + 1)))
        .filter(|&s| s < bound)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn hermitian_curves_have_the_expected_invariants() {
    for r in [2u32, 4] {
        let curve = Curve::hermitian_default(r).unwrap();
        let f = *curve.field();
        let places = curve.places();
        assert_eq!(places.len(), (r * r * r) as usize);
        for p in &places {
            let Place::Hermitian { x, y } = *p else {
                panic!("affine place expected")
            };
            assert_eq!(f.add(f.pow(y, r as u64), y), f.pow(x, r as u64 + 1));
        }
        let g = curve.genus();
        assert_eq!(g, (r * (r - 1) / 2) as usize);
        assert_eq!(curve.gaps().len(), g);
        let reachable = semigroup(r as usize, places.len());
        for s in 0..places.len() {
            assert_eq!(curve.is_pole_order(s), reachable.contains(&s), "r={r} s={s}");
        }
        for m in 0..places.len() {
            let basis = curve.rr_basis(m);
            assert_eq!(basis.len(), curve.rr_dimension(m));
            assert_eq!(basis.len(), reachable.iter().filter(|&&s| s <= m).count());
            if m > 2 * g - 1 || g == 0 {
                assert_eq!(curve.rr_dimension(m), m + 1 - g);
            }
        }
    }
}

#[test]
fn hermitian_sweep_over_gf4() {
    for m in 1..=7 {
        let code = hermitian_code(2, m).unwrap();
        let dual = code.dual();
        assert_eq!((code.n(), code.k(), dual.k()), (8, m, 8 - m));
        let designed = designed_parameters(8, m, 1).unwrap();
        assert_eq!(designed.k, code.k());
        assert_eq!(designed.k_dual, dual.k());
        assert!(code.min_distance().unwrap() >= designed.d_lower);
        assert!(dual.min_distance().unwrap() >= designed.d_dual_lower);
    }
    assert_eq!(hermitian_code(2, 3).unwrap().min_distance().unwrap(), 5);
}

#[test]
fn hermitian_over_gf16_has_designed_dimension() {
    for m in [11, 20, 40, 57] {
        let code = hermitian_code(4, m).unwrap();
        assert_eq!(code.n(), 64);
        assert_eq!(code.k(), m + 1 - 6);
        assert_eq!(code.dual().k(), 64 - code.k());
    }
}

#[test]
fn reed_solomon_codes_are_mds() {
    let f = Field::with_order(8).unwrap();
    for n in 2..=8 {
        for m in 0..n {
            let code = reed_solomon(8, n, m).unwrap();
            assert_eq!(code.k(), m + 1);
            assert_eq!(code.min_distance().unwrap(), n - m);
            let dual = code.dual();
            if dual.k() > 0 {
                assert_eq!(dual.min_distance().unwrap(), m + 2);
            }
        }
    }
    // x² + 1 evaluated at the first seven elements is a codeword of RS[7, 3].
    let rs = reed_solomon(8, 7, 2).unwrap();
    let word: Vec<Gf> = (0..7u16).map(|p| f.add(f.square(Gf(p)), Gf::ONE)).collect();
    assert!(rs.contains(&word));
}

#[test]
fn construction_errors() {
    let curve = Curve::hermitian_default(2).unwrap();
    let places = curve.places();
    assert_eq!(curve.build_code(&places, 8), Err(Error::DegreeTooLarge { m: 8, n: 8 }));
    let dup = [places[0], places[1], places[0]];
    assert_eq!(curve.build_code(&dup, 1), Err(Error::DuplicatePlace(2)));
    assert_eq!(
        curve.build_code(&[places[0], Place::Infinity], 1),
        Err(Error::PlaceAtInfinity)
    );
    let off = Place::Hermitian { x: Gf(1), y: Gf(1) };
    assert_eq!(curve.build_code(&[places[0], off], 1), Err(Error::NotOnCurve(1)));
    assert!(reed_solomon(8, 9, 2).is_err());
    assert!(Curve::hermitian(3, Field::with_order(8).unwrap()).is_err());
    assert!(designed_parameters(8, 0, 1).is_err());
}
