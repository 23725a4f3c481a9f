//! Fixtures shared by the benchmarks in `benches/`.

use isodual_core::constructions::{duadic_lift, thm42_isodual};
use isodual_core::{find_splittings, CyclicCode, RPoly, RingSpec};

pub fn ring(p: u64, e: u32) -> RingSpec {
    RingSpec::new(p, e).expect("valid ring")
}

/// The free code `<x^5 + 7x^4 + 2x^3 + 7x^2 + 2x + 8>` of length 10 over `Z/9`.
pub fn cyclotomic_code() -> CyclicCode {
    thm42_isodual(5, 1, ring(3, 2)).expect("construction applies").codes.remove(0).code
}

/// A free isodual code of length 22 over `Z/9` with weight 7.
pub fn length_22_code() -> CyclicCode {
    let s = ring(3, 2);
    let g = RPoly::from_signed(s, &[8, 6, 0, 8, 6, 3, 4, 5, 0, 1, 5, 8]).monic().expect("unit leading term");
    CyclicCode::from_generator(&g, 22).expect("divides x^22 - 1")
}

/// The self-dual torsion code of length 31 over `Z/4`.
pub fn self_dual_length_31() -> CyclicCode {
    let s = ring(2, 2);
    let split = find_splittings(31, 2).expect("splittings exist").into_iter().find(|sp| sp.given_by_mu_minus1());
    let r = duadic_lift(31, s, &split.expect("one is given by mu_-1")).expect("construction applies");
    r.code("E1").expect("even e").code.clone()
}
