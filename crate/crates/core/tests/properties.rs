use std::f64::consts::PI;

use proptest::prelude::*;

use helicity::algebra::{helicity_matrix_half, helicity_matrix_one, vector, ComplexMatrix};
use helicity::field_eq::{
    fields_from_bivector, fields_from_blocks, proca_residuals, spherical_to_cartesian,
};
use helicity::report::{run_suite, sample_kinematics, SuiteConfig, VerificationReport};
use helicity::{spin_half, spin_one, Complex64, Kinematics};

fn kin() -> impl Strategy<Value = Kinematics> {
    (-1.0f64..1.0, 0.0f64..10.0, 0.0..=PI, -20.0f64..20.0)
        .prop_map(|(lm, p, t, f)| Kinematics::new(10f64.powf(lm), p, t, f).unwrap())
}

fn c64() -> impl Strategy<Value = Complex64> {
    (-5.0f64..5.0, -5.0f64..5.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn block() -> impl Strategy<Value = [Complex64; 3]> {
    [c64(), c64(), c64()]
}

fn matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(c64(), n * n).prop_map(move |d| ComplexMatrix::new(n, n, d).unwrap())
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

proptest! {
    #[test]
    fn kinematics_on_shell(k in kin()) {
        let m2 = k.mass().powi(2);
        prop_assert!((k.energy_plus_p() * k.energy_minus_p() - m2).abs() <= 1e-12 * k.energy().powi(2));
        prop_assert!((k.invariant_mass_sq() - m2).abs() <= 1e-12 * k.energy().powi(2));
        let n = k.unit_momentum();
        prop_assert!((n.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_and_three_spinors_are_helicity_eigenstates(k in kin()) {
        let h2 = helicity_matrix_half(&k);
        for h in spin_half::Helicity::BOTH {
            let phi = spin_half::two_spinor(h, &k).entries;
            let r = vector::distance(&h2.mul_vec(&phi), &vector::scale(&phi, re(2.0 * h.value())));
            prop_assert!(r < 1e-12);
        }
        let h3 = helicity_matrix_one(&k);
        for h in spin_one::Helicity::ALL {
            let chi = spin_one::three_spinor(h, &k).entries;
            let r = vector::distance(&h3.mul_vec(&chi), &vector::scale(&chi, re(h.value())));
            prop_assert!(r < 1e-12);
        }
    }

    #[test]
    fn dirac_spinors_solve_and_normalize(k in kin()) {
        for s in spin_half::helicity_states(&k).iter().chain(spin_half::parity_states(&k).iter()) {
            prop_assert!(spin_half::dirac_residual(s) / k.energy() < 1e-11);
            prop_assert!((s.bar_norm() - s.kind.sign()).abs() < 1e-12);
        }
    }

    #[test]
    fn bivectors_normalize_and_solve_weinberg(k in kin()) {
        let g = spin_one::weinberg_matrix(&k);
        let flipped = spin_one::mass_flipped_operator(&k);
        let e2 = k.energy().powi(2);
        for b in spin_one::helicity_states(&k) {
            prop_assert!((b.bar_norm() - b.kind.sign()).abs() < 1e-12);
            let op = if b.kind == spin_half::Kind::U { &g } else { &flipped };
            prop_assert!(spin_one::residual(op, &b) / e2 < 1e-10);
        }
    }

    #[test]
    fn parity_is_an_involution(k in kin()) {
        for s in spin_half::helicity_states(&k) {
            let twice = spin_half::parity(&spin_half::parity(&s.entries));
            prop_assert!(vector::distance(&twice, &s.entries) < 1e-15);
        }
        for b in spin_one::helicity_states(&k) {
            let twice = spin_one::parity(&spin_one::parity(&b.entries));
            prop_assert!(vector::distance(&twice, &b.entries) < 1e-15);
        }
    }

    #[test]
    fn cp_and_pc_anticommute_on_spin_half(k in kin()) {
        prop_assert!(spin_half::cp_pc_anticommutator(&k) < 1e-11);
    }

    #[test]
    fn spin_half_table_is_kinematics_independent(k in kin()) {
        let rows = spin_half::symmetry_table_half(&k).unwrap();
        let (wrong, phase_err) = helicity::phase::compare(&rows, &spin_half::expected_table());
        prop_assert_eq!(wrong, 0);
        prop_assert_eq!(phase_err, 0.0);
    }

    #[test]
    fn spin_one_table_tracks_alpha(k in kin(), alpha in -PI..PI) {
        let rows = spin_one::symmetry_table_one(&k, alpha).unwrap();
        let (wrong, phase_err) = helicity::phase::compare(&rows, &spin_one::expected_table(alpha));
        prop_assert_eq!(wrong, 0);
        prop_assert!(phase_err < 1e-12);
    }

    #[test]
    fn field_blocks_round_trip(k in kin(), chi in block(), psi in block()) {
        let f = fields_from_blocks(&chi, &psi, &k);
        let back = f.to_bivector_blocks();
        let orig = [chi[0], chi[1], chi[2], psi[0], psi[1], psi[2]];
        prop_assert!(vector::distance(&back, &orig) < 1e-13);
        let t = spherical_to_cartesian();
        prop_assert!(vector::distance(&f.chi(), &t.mul_vec(&chi)) < 1e-13);
        prop_assert!(vector::distance(&f.psi(), &t.mul_vec(&psi)) < 1e-13);
    }

    #[test]
    fn fields_are_linear_in_blocks(k in kin(), a in block(), b in block(), c in block(), d in block(), s in c64()) {
        let sum = |x: &[Complex64; 3], y: &[Complex64; 3]| std::array::from_fn(|i| x[i] + s * y[i]);
        let lhs = fields_from_blocks(&sum(&a, &c), &sum(&b, &d), &k);
        let (f1, f2) = (fields_from_blocks(&a, &b, &k), fields_from_blocks(&c, &d, &k));
        let scale = 1.0 + s.norm();
        for (l, (x, y)) in [
            (lhs.e_field, (f1.e_field, f2.e_field)),
            (lhs.b_field, (f1.b_field, f2.b_field)),
            (lhs.xi, (f1.xi, f2.xi)),
        ] {
            let rhs: [Complex64; 3] = std::array::from_fn(|i| x[i] + s * y[i]);
            let tol = 1e-12 * scale * (1.0 + vector::norm(&rhs));
            prop_assert!(vector::distance(&l, &rhs) < tol);
        }
        let phi = f1.phi_aux + s * f2.phi_aux;
        prop_assert!((lhs.phi_aux - phi).norm() < 1e-12 * scale * (1.0 + phi.norm()));
    }

    #[test]
    fn physical_fields_obey_proca(k in kin()) {
        let e2 = k.energy().powi(2);
        for b in spin_one::helicity_states(&k).iter().filter(|b| b.kind == spin_half::Kind::U) {
            let f = fields_from_bivector(b);
            let r = proca_residuals(&f);
            prop_assert!(r.first / e2 < 1e-10 && r.second / e2 < 1e-10);
            prop_assert!(f.lorenz().norm() / e2 < 1e-10);
        }
    }

    #[test]
    fn adjoint_reverses_products(a in matrix(4), b in matrix(4)) {
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
        prop_assert!((&a.conj().transpose() - &a.adjoint()).max_abs() == 0.0);
    }

    #[test]
    fn solve_inverts_diagonally_dominant(a in matrix(6), b in matrix(6)) {
        let shift = ComplexMatrix::identity(6).scale(re(40.0));
        let a = &a + &shift;
        let x = a.solve(&b).unwrap();
        prop_assert!((&(&a * &x) - &b).max_abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sampling_is_reproducible_and_in_range(seed in any::<u64>(), n in 1usize..50) {
        let config = SuiteConfig { seed, samples: n, ..SuiteConfig::default() };
        let a = sample_kinematics(&config).unwrap();
        prop_assert_eq!(&a, &sample_kinematics(&config).unwrap());
        prop_assert_eq!(a.len(), n);
        for k in a {
            prop_assert!((0.1..=10.0).contains(&k.mass()));
            prop_assert!((0.0..=10.0).contains(&k.pmag()));
            prop_assert!((0.0..2.0 * PI).contains(&k.phi()));
        }
    }

    #[test]
    fn report_json_round_trips(seed in any::<u64>(), n in 1usize..4, alpha in -PI..PI) {
        let config = SuiteConfig { seed, samples: n, alpha, ..SuiteConfig::default() };
        let report = run_suite(&config).unwrap();
        let json = report.to_json();
        let back = VerificationReport::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
        prop_assert_eq!(back.summary.checks, report.checks.len());
    }
}
