mod common;

use gldim_core::linalg::q;
use gldim_core::rational::{
    a_invariant_hypersurface, flenner_is_rational, hilbert_series_hypersurface, watanabe_is_rational,
    WeightedHypersurface,
};
use gldim_core::NumericalSemigroup;
use num_integer::Integer;
use proptest::prelude::*;

#[test]
fn plane_monomial_curves() {
    for p in 2..=12i64 {
        for qq in p + 1..=12 {
            if p.gcd(&qq) != 1 {
                continue;
            }
            let h = WeightedHypersurface::new(vec![p, qq], vec![p * qq]).unwrap();
            let s = NumericalSemigroup::from_generators(&[p, qq]).unwrap();
            // Frobenius number by enumeration
            let member = common::brute_members(&[p, qq], p * qq);
            let frob = (0..=p * qq).rev().find(|&d| !member[d as usize]).unwrap();
            assert_eq!(a_invariant_hypersurface(&h), frob, "<{p},{qq}>");
            assert_eq!(s.frobenius(), frob);
            assert_eq!(frob, p * qq - p - qq);

            let series = hilbert_series_hypersurface(&h).expand(0, (2 * p * qq) as usize);
            for (d, c) in series.iter().enumerate() {
                assert_eq!(*c, q(i64::from(s.contains(d as i64))), "<{p},{qq}> degree {d}");
            }
        }
    }
}

#[test]
fn free_divisor_and_quintic() {
    for n in 1..=8 {
        let h = WeightedHypersurface::new(vec![1; n], vec![n as i64]).unwrap();
        assert_eq!(a_invariant_hypersurface(&h), 0);
        assert!(!watanabe_is_rational(0));
    }
    let quintic = WeightedHypersurface::new(vec![1, 1, 1], vec![5]).unwrap();
    assert_eq!(a_invariant_hypersurface(&quintic), 2);
    assert!(!watanabe_is_rational(a_invariant_hypersurface(&quintic)));
}

fn record() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (prop::collection::vec(1i64..8, 1..6), prop::collection::vec(1i64..12, 0..3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn criteria_agree((weights, degrees) in record()) {
        let h = WeightedHypersurface::new(weights.clone(), degrees.clone()).unwrap();
        let a = a_invariant_hypersurface(&h);
        prop_assert_eq!(flenner_is_rational(&h), watanabe_is_rational(a));
        prop_assert_eq!(a, degrees.iter().sum::<i64>() - weights.iter().sum::<i64>());
        prop_assert_eq!(hilbert_series_hypersurface(&h).degree(), Some(a));
    }
}
