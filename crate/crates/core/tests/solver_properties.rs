// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_PI_2;

use gion::geometry::{metrics, SegmentConfig};
use gion::solver::{
    p_of_config, q_of_theta, solve_pq, solve_theta, SolverOptions, Q_INFIMUM, Q_SUPREMUM,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn roots_are_refined(q in 2.49f64..2.63) {
        for root in solve_theta(q, &SolverOptions::default()).unwrap() {
            prop_assert!((q_of_theta(root.theta).unwrap() - q).abs() < 1e-11);
            prop_assert!(root.theta > 0.0 && root.theta < FRAC_PI_2);
        }
    }

    #[test]
    fn q_stays_in_open_range(theta in 1e-6f64..(FRAC_PI_2 - 1e-6)) {
        let q = q_of_theta(theta).unwrap();
        prop_assert!(q > Q_INFIMUM && q < 2.62133);
        prop_assert!(q < Q_SUPREMUM);
    }

    #[test]
    fn q_is_scale_invariant(k in 0.01f64..1000.0, theta in 0.01f64..(FRAC_PI_2 - 0.01)) {
        let unit = metrics(&SegmentConfig::new(1.0, theta).unwrap()).q();
        let scaled = metrics(&SegmentConfig::new(k, theta).unwrap()).q();
        prop_assert!((unit - scaled).abs() < 1e-15);
    }

    #[test]
    fn every_solution_satisfies_both_constraints(p in 0.1f64..50.0, q in 2.5f64..2.6213) {
        for sol in solve_pq(p, q, &SolverOptions::default()).unwrap() {
            prop_assert!((sol.p_check - p).abs() <= 1e-9 * p);
            prop_assert!((sol.q_check - q).abs() <= 1e-9);
            let cfg = sol.config().unwrap();
            prop_assert!((p_of_config(&cfg) - p).abs() <= 1e-9 * p);
        }
    }

    #[test]
    fn results_are_sorted_and_distinct(q in 2.52f64..2.545) {
        let roots = solve_theta(q, &SolverOptions::default()).unwrap();
        prop_assert!(roots.windows(2).all(|w| w[0].theta < w[1].theta));
    }
}
