use super::*;
use proptest::prelude::*;

fn z(p: u64, e: u32) -> RingSpec {
    RingSpec::new(p, e).unwrap()
}

fn poly(spec: RingSpec, c: &[i64]) -> RPoly {
    RPoly::from_signed(spec, c)
}

/// Every cyclic code of length `n`: one level per basic irreducible factor.
fn all_codes(spec: RingSpec, n: usize) -> Vec<CyclicCode> {
    let factors = basic_irreducible_factors(n, spec).unwrap();
    let e = spec.e();
    let mut levels = vec![0u32; factors.len()];
    let mut out = Vec::new();
    loop {
        out.push(CyclicCode::from_levels(spec, n, &factors, &levels));
        let mut k = 0;
        loop {
            if k == levels.len() {
                return out;
            }
            levels[k] += 1;
            if levels[k] <= e {
                break;
            }
            levels[k] = 0;
            k += 1;
        }
    }
}

fn inner(spec: RingSpec, v: &[u64], w: &[u64]) -> u64 {
    v.iter().zip(w).fold(0, |acc, (&a, &b)| spec.add(acc, spec.mul(a, b)))
}

fn ex58() -> (RPoly, RPoly) {
    let s = z(3, 2);
    (poly(s, &[8, 2, 1, 8, 3, 1]), poly(s, &[8, 6, 1, 8, 7, 1]))
}

fn e1_ex58() -> CyclicCode {
    let s = z(3, 2);
    let (g1, g2) = ex58();
    let x1 = poly(s, &[-1, 1]);
    CyclicCode::from_two_stage(&x1.mul(&g1), &g1.mul(&g2), 1, 11).unwrap()
}

#[test]
fn canonical_family_is_validated() {
    let s = z(3, 2);
    let one = RPoly::one(s);
    assert!(CyclicCode::new(s, 2, vec![poly(s, &[-1, 1]), poly(s, &[1, 1]), one.clone()]).is_ok());
    assert!(CyclicCode::new(s, 2, vec![poly(s, &[-1, 1]), one.clone(), one.clone()]).is_err());
    assert!(CyclicCode::new(s, 2, vec![poly(s, &[-1, 1]), poly(s, &[1, 1])]).is_err());
    assert!(CyclicCode::new(s, 3, vec![RPoly::xn_minus_one(s, 3), one.clone(), one]).is_err());
}

#[test]
fn two_stage_family_of_self_dual_example() {
    let s = z(3, 2);
    let (g1, g2) = ex58();
    let c = e1_ex58();
    assert_eq!(c.family(), &[g1, g2, poly(s, &[-1, 1])]);
    assert_eq!(c.cardinality_log(), 11);
    assert!(c.is_self_dual());
}

#[test]
fn two_stage_rejects_nilpotent_torsion_and_degenerates_to_free() {
    let s = z(3, 2);
    let g = poly(s, &[-1, 1]);
    assert!(CyclicCode::from_two_stage(&g, &g, 2, 2).is_err());
    assert_eq!(CyclicCode::from_two_stage(&g, &g, 1, 2).unwrap(), CyclicCode::from_generator(&g, 2).unwrap());
}

#[test]
fn whole_and_zero_codes_are_dual() {
    let s = z(2, 2);
    let whole = CyclicCode::whole_space(s, 5).unwrap();
    let zero = CyclicCode::zero_code(s, 5).unwrap();
    assert_eq!(whole.dual(), zero);
    assert_eq!(zero.family()[0], RPoly::xn_minus_one(s, 5));
    assert_eq!(zero.cardinality_log(), 0);
    assert_eq!(whole.cardinality_log(), 10);
    assert!(!whole.is_self_dual());
    assert!(whole.certify_isodual().is_none());
}

#[test]
fn free_dual_is_generated_by_reciprocal_cofactor() {
    let s = z(3, 2);
    let (g1, g2) = ex58();
    let x1 = poly(s, &[-1, 1]);
    let c = CyclicCode::from_generator(&g1, 11).unwrap();
    let h = x1.mul(&g2);
    assert_eq!(c.dual(), CyclicCode::from_generator(&h.reciprocal().unwrap(), 11).unwrap());
}

#[test]
fn generator_matrix_rows() {
    let s = z(3, 2);
    let c = CyclicCode::from_generator(&poly(s, &[-1, 1]), 2).unwrap();
    assert_eq!(c.generator_matrix().rows(), &[vec![8, 1]]);
    let e1 = e1_ex58().generator_matrix();
    assert!(e1.rows().contains(&vec![3; 11]));
    assert_eq!(e1.row_space_log_cardinality(), 11);
}

#[test]
fn row_space_matches_cardinality_for_all_small_codes() {
    for (p, e, n) in [(2, 2, 3), (2, 2, 7), (3, 2, 4), (3, 2, 8), (2, 3, 5)] {
        for c in all_codes(z(p, e), n) {
            assert_eq!(c.generator_matrix().row_space_log_cardinality(), c.cardinality_log());
        }
    }
}

#[test]
fn membership_examples() {
    let s = z(3, 2);
    let (g1, g2) = ex58();
    let x1 = poly(s, &[-1, 1]);
    let d1 = CyclicCode::from_generator(&g1, 11).unwrap();
    let c1 = CyclicCode::from_generator(&x1.mul(&g1), 11).unwrap();
    assert!(d1.contains(&Codeword::new(s, vec![1; 11])).unwrap());
    assert!(!c1.contains(&Codeword::new(s, vec![3; 11])).unwrap());
    assert!(e1_ex58().contains(&Codeword::new(s, vec![3; 11])).unwrap());
    for row in d1.generator_matrix().rows() {
        assert!(d1.contains(&Codeword::new(s, row.clone())).unwrap());
    }
    assert!(d1.contains(&Codeword::new(s, vec![1; 10])).is_err());
    let _ = g2;
}

#[test]
fn membership_agrees_with_enumeration() {
    for (p, e, n) in [(2, 2, 3), (3, 2, 2), (3, 2, 4)] {
        let spec = z(p, e);
        let space: Vec<Codeword> = CyclicCode::whole_space(spec, n).unwrap().enumerate(u128::MAX).unwrap();
        for c in all_codes(spec, n) {
            let words: std::collections::HashSet<Vec<u64>> =
                c.enumerate(u128::MAX).unwrap().into_iter().map(|w| w.entries).collect();
            assert_eq!(words.len() as u128, c.size());
            for w in &space {
                assert_eq!(c.contains(w).unwrap(), words.contains(&w.entries));
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    let s = z(3, 2);
    let c = CyclicCode::from_generator(&poly(s, &[-1, 1]), 2).unwrap();
    let words = c.enumerate(100).unwrap();
    assert_eq!(words.len(), 9);
    assert!(words.iter().all(|w| s.add(w.entries[0], w.entries[1]) == 0));
    let zero = CyclicCode::zero_code(s, 4).unwrap();
    assert_eq!(zero.enumerate(1).unwrap(), vec![Codeword::new(s, vec![0; 4])]);
    assert!(matches!(c.enumerate(8), Err(Error::TooLarge { .. })));
    assert!(matches!(zero.min_hamming_weight(), Err(Error::ZeroCode)));
}

#[test]
fn dual_matches_brute_force_annihilator() {
    for (p, e, n) in [(2, 2, 3), (2, 2, 5), (3, 2, 2), (3, 2, 4)] {
        let spec = z(p, e);
        let space = CyclicCode::whole_space(spec, n).unwrap().enumerate(u128::MAX).unwrap();
        for c in all_codes(spec, n) {
            let rows = c.generator_matrix();
            let dual = c.dual();
            for w in &space {
                let orth = rows.rows().iter().all(|r| inner(spec, r, &w.entries) == 0);
                assert_eq!(orth, dual.contains(w).unwrap(), "{c:?}");
            }
        }
    }
}

#[test]
fn dual_involution_and_cardinality_pairing() {
    for (p, e, n) in [(2, 2, 7), (3, 2, 8), (2, 3, 7), (5, 2, 6), (3, 3, 4)] {
        for c in all_codes(z(p, e), n) {
            let d = c.dual();
            assert_eq!(d.dual(), c);
            assert_eq!(c.cardinality_log() + d.cardinality_log(), e as u64 * n as u64);
        }
    }
}

#[test]
fn multiplier_minus_one_gives_reciprocal_generator() {
    let s = z(3, 2);
    let (g1, g2) = ex58();
    let c = CyclicCode::from_generator(&g1, 11).unwrap();
    assert_eq!(c.apply_multiplier(-1).unwrap(), CyclicCode::from_generator(&g1.reciprocal().unwrap(), 11).unwrap());
    assert_eq!(g1.reciprocal().unwrap(), g2);
    assert_eq!(c.apply_multiplier(1).unwrap(), c);
    assert!(c.apply_multiplier(11).is_err());
    let _ = s;
}

#[test]
fn multiplier_and_scaling_invert() {
    let spec = z(5, 2);
    let n = 8;
    let roots = nth_roots_of_unity(n as u64, spec);
    assert_eq!(roots.len(), 4);
    for c in all_codes(spec, n).into_iter().step_by(5) {
        assert_eq!(c.apply_multiplier(3).unwrap().apply_multiplier(3).unwrap(), c);
        for l in &roots {
            let back = l.inverse().unwrap().value();
            assert_eq!(c.apply_scaling(l.value()).unwrap().apply_scaling(back).unwrap(), c);
        }
        assert_eq!(c.apply_scaling(1).unwrap(), c);
    }
    let c = CyclicCode::whole_space(spec, n).unwrap();
    assert!(c.apply_scaling(2).is_err());
    assert!(c.apply_scaling(5).is_err());
}

#[test]
fn scaling_matches_coordinatewise_map() {
    let spec = z(3, 2);
    let n = 4;
    for c in all_codes(spec, n) {
        for l in nth_roots_of_unity(n as u64, spec) {
            let lam = l.value();
            let image = c.apply_scaling(lam).unwrap();
            for w in c.enumerate(u128::MAX).unwrap() {
                let moved: Vec<u64> =
                    w.entries.iter().enumerate().map(|(i, &v)| spec.mul(v, spec.pow(lam, i as u64))).collect();
                assert!(image.contains(&Codeword::new(spec, moved)).unwrap());
            }
        }
    }
}

#[test]
fn maps_preserve_minimum_weight() {
    for (p, e, n) in [(2, 2, 7), (3, 2, 4), (5, 2, 4)] {
        let spec = z(p, e);
        let roots = nth_roots_of_unity(n as u64, spec);
        for c in all_codes(spec, n).into_iter().filter(|c| !c.is_zero()) {
            let w = c.min_weight_direct(u128::MAX).unwrap().weight;
            assert_eq!(c.apply_multiplier(-1).unwrap().min_weight_direct(u128::MAX).unwrap().weight, w);
            for l in &roots {
                assert_eq!(c.apply_scaling(l.value()).unwrap().min_weight_direct(u128::MAX).unwrap().weight, w);
            }
        }
    }
}

#[test]
fn residue_and_direct_strategies_agree_on_free_codes() {
    for (p, e, n) in [(2, 2, 7), (2, 2, 9), (3, 2, 8), (2, 3, 7), (5, 2, 6)] {
        for c in all_codes(z(p, e), n).into_iter().filter(|c| c.is_free() && !c.is_zero() && c.size() <= 1_000_000) {
            let a = c.min_weight_direct(1_000_000).unwrap();
            let b = c.min_weight_residue().unwrap();
            assert_eq!(a.weight, b.weight, "{c:?}");
        }
    }
}

#[test]
fn weight_of_small_code_and_upper_bound() {
    let s = z(3, 2);
    let c = CyclicCode::from_generator(&RPoly::xn_plus_c(s, 5, -1), 10).unwrap();
    let r = c.min_hamming_weight().unwrap();
    assert_eq!(r.weight, 2);
    assert_eq!(r.strategy, super::Strategy::Direct);
    assert_eq!(r.enumerated, 9u128.pow(5));
    assert!(c.weight_upper_bound(100).unwrap() >= 2);
    let t = CyclicCode::from_two_stage(&poly(s, &[-1, 1]), &RPoly::one(s), 1, 4).unwrap();
    assert!(t.min_weight_residue().is_err());
    assert!(matches!(t.min_hamming_weight_with(None, 2), Err(Error::TooLarge { .. })));
}

#[test]
fn isodual_certificate_of_small_example() {
    let s = z(3, 2);
    let g1 = poly(s, &[8, 2, 7, 2, 7, 1]);
    let c = CyclicCode::from_generator(&g1, 10).unwrap();
    let cert = c.certify_isodual().unwrap();
    assert_eq!(cert, Certificate { multiplier: -1, scaling: 8 });
    assert_eq!(c.apply(cert).unwrap(), c.dual());
    assert_eq!(e1_ex58().certify_isodual(), Some(Certificate { multiplier: 1, scaling: 1 }));
}

#[test]
fn serde_round_trip_and_validation() {
    let c = e1_ex58();
    let text = serde_json::to_string(&c).unwrap();
    assert!(text.starts_with("{\"ring\":{\"p\":3,\"e\":2},\"n\":11,\"F\":["));
    let back: CyclicCode = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    let bad = text.replace("\"n\":11", "\"n\":12");
    assert!(serde_json::from_str::<CyclicCode>(&bad).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn from_generators_round_trips_generators(seed in 0usize..10_000) {
        let spec = z(2, 3);
        let codes = all_codes(spec, 7);
        let c = &codes[seed % codes.len()];
        prop_assert_eq!(&CyclicCode::from_generators(spec, 7, &c.generators()).unwrap(), c);
    }

    #[test]
    fn certificates_are_sound(seed in 0usize..10_000) {
        let spec = z(5, 2);
        let codes = all_codes(spec, 4);
        let c = &codes[seed % codes.len()];
        if let Some(cert) = c.certify_isodual() {
            prop_assert_eq!(c.apply(cert).unwrap(), c.dual());
        }
    }
}
