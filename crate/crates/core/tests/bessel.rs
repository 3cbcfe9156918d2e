mod support;

use std::f64::consts::PI;

use arago::specfun::{bessel_j0, j0};
use proptest::prelude::*;
use support::{bisect, j0_series_oracle, J0_REFERENCE};

#[test]
fn matches_series_oracle_on_dense_grid() {
    let mut worst = (0.0, 0.0);
    for i in 0..1000 {
        let x = 20.0 * i as f64 / 999.0;
        let err = (j0(x) - j0_series_oracle(x)).abs();
        if err > worst.1 {
            worst = (x, err);
        }
    }
    assert!(
        worst.1 <= 1e-12,
        "max error {:e} at x = {}",
        worst.1,
        worst.0
    );
}

#[test]
fn oracle_sanity() {
    assert_eq!(j0_series_oracle(0.0), 1.0);
    // A&S 9.1: J0(1) = 0.7651976865579666.
    assert!((j0_series_oracle(1.0) - 0.765_197_686_557_966_6).abs() < 1e-16);
}

#[test]
fn first_zero() {
    let oracle_root = bisect(j0_series_oracle, 2.0, 3.0);
    assert!(
        (oracle_root - 2.404_825_557_695_773).abs() < 1e-12,
        "{oracle_root}"
    );
    let root = bisect(j0, 2.0, 3.0);
    assert!((root - 2.404_825_557_695_773).abs() < 1e-10, "{root}");
    assert!(bessel_j0(2.404_825_557_695_773).unwrap().abs() < 1e-12);
}

#[test]
fn large_arguments_relative_to_envelope() {
    for (x, want) in J0_REFERENCE {
        let envelope = (2.0 / (PI * x)).sqrt();
        let err = (j0(x) - want).abs() / envelope;
        assert!(err <= 1e-10, "x = {x}: error {err:e} of the envelope");
    }
}

proptest! {
    #[test]
    fn even(x in -1e6f64..1e6) {
        prop_assert_eq!(j0(x), j0(-x));
    }

    #[test]
    fn bounded(x in -1e6f64..1e6) {
        prop_assert!(j0(x).abs() <= 1.0);
    }

    #[test]
    fn envelope_decay(x in 5.0f64..1e6) {
        prop_assert!(j0(x).abs() <= (2.0 / (PI * x)).sqrt() * 1.05);
    }
}
