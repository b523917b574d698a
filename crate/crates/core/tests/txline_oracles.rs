use num_complex::Complex64;
use proptest::prelude::*;
use taperswarm::txline::{self, LineSection};

const F0: f64 = 5e9;

/// Three quarter-wave inversions applied by hand, load side first.
fn closed_form_zin(z: [f64; 3], z_load: f64) -> f64 {
    let after1 = z[0] * z[0] / z_load;
    let after2 = z[1] * z[1] / after1;
    z[2] * z[2] / after2
}

fn cascade_zin(z: [f64; 3], z_load: f64, f: f64) -> Complex64 {
    let ports: Vec<_> = txline::quarter_wave_cascade(&z)
        .iter()
        .map(|s| txline::line_two_port(s, f, F0).unwrap())
        .collect();
    txline::input_impedance(&txline::cascade(&ports), Complex64::new(z_load, 0.0)).unwrap()
}

fn impedance() -> impl Strategy<Value = f64> {
    10.0f64..120.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn cascade_matches_composed_quarter_wave_transforms(
        z1 in impedance(), z2 in impedance(), z3 in impedance(), zl in 1.0f64..500.0
    ) {
        let z = [z1, z2, z3];
        let zin = cascade_zin(z, zl, F0);
        let expected = closed_form_zin(z, zl);
        prop_assert!((zin.re - expected).abs() <= 1e-9 * expected);
        prop_assert!(zin.im.abs() <= 1e-9 * expected);
        // Algebraic rearrangement of the same product.
        let packed = (z1 * z3 / z2).powi(2) / zl;
        prop_assert!((zin.re - packed).abs() <= 1e-9 * packed);
    }

    #[test]
    fn lossless_cascades_have_unit_determinant(
        z in proptest::collection::vec(impedance(), 1..6),
        f in 0.0f64..2e10,
    ) {
        let sections = txline::quarter_wave_cascade(&z);
        let ports: Vec<_> = sections.iter().map(|s| txline::line_two_port(s, f, F0).unwrap()).collect();
        let det = txline::cascade(&ports).determinant();
        prop_assert!((det - Complex64::new(1.0, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn passive_loads_never_reflect_more_than_incident(
        z in proptest::collection::vec(impedance(), 1..5),
        zl in 1.0f64..1000.0,
        zref in 1.0f64..200.0,
    ) {
        let sections = txline::quarter_wave_cascade(&z);
        let grid = txline::linear_grid(1e7, 2e10, 101);
        let res = txline::sweep(&sections, zl, zref, F0, &grid).unwrap();
        for p in &res.points {
            let r = p.response.as_ref().unwrap();
            prop_assert!(r.gamma.norm() <= 1.0 + 1e-9);
            let expected_db = (20.0 * r.gamma.norm().log10()).max(txline::DB_FLOOR);
            prop_assert_eq!(r.magnitude_db, expected_db);
        }
    }

    #[test]
    fn response_is_symmetric_about_f0(
        z1 in impedance(), z2 in impedance(), z3 in impedance(),
        frac in 0.0f64..1.0,
    ) {
        let delta = frac * F0;
        let sections = txline::quarter_wave_cascade(&[z1, z2, z3]);
        // The 1 Hz inset keeps the lower point positive.
        let grid = [F0 - delta + 1.0, F0 + delta - 1.0];
        let res = txline::sweep(&sections, 100.0, 50.0, F0, &grid).unwrap();
        let lo = res.points[0].response.as_ref().unwrap().gamma.norm();
        let hi = res.points[1].response.as_ref().unwrap().gamma.norm();
        prop_assert!((lo - hi).abs() <= 1e-9);
    }
}

#[test]
fn published_trial_two_presents_fifty_ohms() {
    let zin = cascade_zin([86.427, 55.545, 45.444], 100.0, F0);
    assert!((zin.re - 50.0).abs() < 0.05, "{zin}");
    assert!(zin.im.abs() < 1e-9);
}

#[test]
fn published_trials_reflect_below_minus_forty_db() {
    for z in [[86.427, 55.545, 45.444], [76.604, 65.646, 60.595]] {
        let res = txline::sweep(&txline::quarter_wave_cascade(&z), 100.0, 50.0, F0, &[F0]).unwrap();
        let db = res.points[0].response.as_ref().unwrap().magnitude_db;
        assert!(db <= -40.0, "{z:?}: {db} dB");
    }
}

#[test]
fn exact_single_section_equivalent_hits_floor() {
    let z = [100.0, 100.0, 5000f64.sqrt()];
    let res = txline::sweep(&txline::quarter_wave_cascade(&z), 100.0, 50.0, F0, &[F0]).unwrap();
    assert_eq!(res.points[0].response.as_ref().unwrap().magnitude_db, txline::DB_FLOOR);
}

#[test]
fn electrical_length_scales_with_frequency() {
    // 45° section at f0 is 90° at 2·f0.
    let s = LineSection::new(60.0, 45.0);
    let p = txline::line_two_port(&s, 2.0 * F0, F0).unwrap();
    let q = txline::line_two_port(&LineSection::quarter_wave(60.0), F0, F0).unwrap();
    assert_eq!(p, q);
}
