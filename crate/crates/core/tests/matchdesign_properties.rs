use proptest::prelude::*;
use taperswarm::matchdesign::{
    cascade_fitness, cascade_mismatch, check_ordering, design, eq4_fitness, eq4_mismatch, ordering_penalty,
    DesignProblem, SweepSettings,
};

const F0: f64 = 5e9;

fn impedance() -> impl Strategy<Value = f64> {
    10.0f64..120.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // Pick z1, z2 and solve for z3 on the matching surface.
    #[test]
    fn manifold_points_score_zero(z1 in impedance(), z2 in impedance()) {
        let p = DesignProblem::default();
        let z3 = p.single_section_impedance() * z2 / z1;
        let m = eq4_mismatch(&[z1, z2, z3], &p).unwrap();
        prop_assert!(m <= 1e-9 * p.z_target, "{}", m);
    }

    #[test]
    fn off_manifold_points_score_positive(z1 in impedance(), z2 in impedance(), scale in 0.5f64..2.0) {
        prop_assume!((scale - 1.0).abs() > 1e-3);
        let p = DesignProblem::default();
        let z3 = scale * p.single_section_impedance() * z2 / z1;
        let expected = (scale * scale - 1.0).abs() * p.z_target;
        let m = eq4_mismatch(&[z1, z2, z3], &p).unwrap();
        prop_assert!(m > 0.0);
        prop_assert!((m - expected).abs() <= 1e-9 * expected.max(1.0));
    }

    #[test]
    fn penalty_vanishes_exactly_on_strictly_decreasing(z in proptest::collection::vec(impedance(), 1..6)) {
        let pen = ordering_penalty(&z, 1000.0);
        if check_ordering(&z) {
            prop_assert_eq!(pen, 0.0);
        } else {
            prop_assert!(pen > 0.0);
        }
    }

    #[test]
    fn ties_and_rises_are_penalized(a in impedance(), b in impedance(), rise in 0.0f64..5.0) {
        let z = [a, a + rise, b];
        prop_assert!(ordering_penalty(&z, 1000.0) > 0.0);
        prop_assert!(!check_ordering(&z));
    }

    #[test]
    fn routes_agree_off_the_matching_surface(z1 in impedance(), z2 in impedance(), z3 in impedance()) {
        let p = DesignProblem::default();
        let closed = eq4_fitness(&[z1, z2, z3], &p).unwrap();
        let cascaded = cascade_fitness(&[z1, z2, z3], &p, F0).unwrap();
        prop_assert!((closed - cascaded).abs() <= 1e-9 * closed.abs().max(cascaded.abs()));
    }
}

#[test]
fn two_section_cascade_equals_its_closed_form() {
    // Two inversions: Zin = (z2/z1)²·ZL.
    let p = DesignProblem { n_sections: 2, ..Default::default() };
    for (z1, z2) in [(100.0, 70.0), (30.0, 12.0), (119.0, 118.0)] {
        let expected = ((z2 / z1) * (z2 / z1) * p.z_load - p.z_target).abs();
        let got = cascade_mismatch(&[z1, z2], &p, F0).unwrap();
        assert!((got - expected).abs() <= 1e-9 * expected);
    }
}

#[test]
fn published_table_rows_sit_on_the_matching_surface() {
    let rows = [
        [83.828, 79.787, 67.302],
        [86.427, 55.545, 45.444],
        [76.604, 65.646, 60.595],
        [95.949, 76.757, 56.567],
        [78.77, 67.66, 60.73],
        [90.012, 14.131, 11.101],
        [98.979, 28.264, 20.191],
        [96.435, 30.292, 22.212],
        [80.797, 36.922, 32.313],
    ];
    let p = DesignProblem::default();
    for z in rows {
        assert!(check_ordering(&z), "{z:?}");
        assert!((z[0] * z[2] / z[1] - 70.711).abs() <= 0.1, "{z:?}");
        assert!(eq4_fitness(&z, &p).unwrap() < 0.2, "{z:?}");
    }
}

#[test]
fn unordered_problem_reports_violation_flag() {
    // With the constraint off nothing steers the swarm toward ordering; the
    // flag stays false because ordering was not required.
    let p = DesignProblem { ordering_required: false, ..Default::default() };
    let swarm = taperswarm::SwarmConfig { max_iterations: 300, seed: 5, ..p.swarm_config() };
    let r = design(&p, &swarm, &SweepSettings::default()).unwrap();
    assert!(!r.constraint_violated);
    assert_eq!(r.ordering_ok, check_ordering(&r.impedances));
    assert!(r.fitness <= 1e-2);
}

#[test]
fn zero_penalty_can_leave_ordering_violated() {
    // Without penalty pressure the flag must surface any unordered winner
    // instead of hiding it.
    let p = DesignProblem { penalty_weight: 0.0, ..Default::default() };
    let mut violated = 0;
    for seed in 0..10 {
        let swarm = taperswarm::SwarmConfig { max_iterations: 200, seed, ..p.swarm_config() };
        let r = design(&p, &swarm, &SweepSettings::default()).unwrap();
        assert_eq!(r.constraint_violated, !check_ordering(&r.impedances));
        violated += r.constraint_violated as usize;
    }
    assert!(violated > 0);
}
