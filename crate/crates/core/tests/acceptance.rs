//! Acceptance criteria. Each test writes one `PASS`/`FAIL` line straight to
//! stdout (bypassing libtest capture) and then asserts.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::Path;
use std::process::Command;

use helicity::algebra::{helicity_matrix_half, helicity_matrix_one, vector};
use helicity::field_eq::{fields_from_bivector, first_order_residuals, proca_residuals};
use helicity::phase::{self, Operation};
use helicity::report::{sample_kinematics, SuiteConfig};
use helicity::spin_half::{self, Kind};
use helicity::{spin_one, Complex64, Kinematics};

fn samples(n: usize) -> Vec<Kinematics> {
    sample_kinematics(&SuiteConfig {
        samples: n,
        ..SuiteConfig::default()
    })
    .unwrap()
}

fn line(name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance {verdict}  {name:<34} {detail}");
    let _ = out.flush();
}

fn conclude(name: &str, pass: bool, detail: String) {
    line(name, pass, &detail);
    assert!(pass, "{name}: {detail}");
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn helicity_eigenstates() {
    let mut worst: f64 = 0.0;
    for k in samples(1000) {
        let h2 = helicity_matrix_half(&k);
        for h in spin_half::Helicity::BOTH {
            let phi = spin_half::two_spinor(h, &k).entries;
            let r = vector::distance(&h2.mul_vec(&phi), &vector::scale(&phi, re(2.0 * h.value())));
            worst = worst.max(r);
        }
        let h3 = helicity_matrix_one(&k);
        for h in spin_one::Helicity::ALL {
            let chi = spin_one::three_spinor(h, &k).entries;
            let r = vector::distance(&h3.mul_vec(&chi), &vector::scale(&chi, re(h.value())));
            worst = worst.max(r);
        }
    }
    conclude(
        "helicity eigenstates",
        worst < 1e-12,
        format!("max residual {worst:.2e} (tol 1e-12, 1000 samples)"),
    );
}

#[test]
fn dirac_solutions() {
    let mut worst: f64 = 0.0;
    for k in samples(1000) {
        for s in spin_half::helicity_states(&k)
            .iter()
            .chain(spin_half::parity_states(&k).iter())
        {
            worst = worst.max(spin_half::dirac_residual(s) / k.energy());
        }
    }
    conclude(
        "Dirac solutions",
        worst < 1e-11,
        format!("max residual/E {worst:.2e} (tol 1e-11)"),
    );
}

#[test]
fn normalizations() {
    let (mut bar, mut chi): (f64, f64) = (0.0, 0.0);
    for k in samples(1000) {
        for s in spin_half::helicity_states(&k)
            .iter()
            .chain(spin_half::parity_states(&k).iter())
        {
            bar = bar.max((s.bar_norm() - s.kind.sign()).abs());
        }
        for b in spin_one::helicity_states(&k) {
            bar = bar.max((b.bar_norm() - b.kind.sign()).abs());
        }
        for h in spin_one::Helicity::ALL {
            let c = spin_one::three_spinor(h, &k).entries;
            chi = chi.max((vector::norm(&c).powi(2) - 1.0).abs());
        }
    }
    conclude(
        "normalizations",
        bar < 1e-12 && chi < 1e-13,
        format!("bar norms {bar:.2e} (tol 1e-12), χ†χ {chi:.2e} (tol 1e-13)"),
    );
}

#[test]
fn basis_change_identity() {
    let mut worst: f64 = 0.0;
    for k in samples(1000) {
        worst = worst.max(spin_half::basis_change(&k).unwrap().unitarity_defect());
    }
    let reference = Kinematics::new(1.0, 0.75, 0.0, 0.0).unwrap();
    let a_alone = spin_half::basis_change(&reference)
        .unwrap()
        .a_unitarity_defect();
    conclude(
        "basis-change identity",
        worst < 1e-12 && a_alone > 1e-6,
        format!(
            "max |A†A+B†B−I| {worst:.3e} (tol 1e-12); |A†A−I| at m=1,p=0.75 {a_alone:.3e} (> 1e-6)"
        ),
    );
}

#[test]
fn expansion_oracle() {
    let (mut recon, mut coeff): (f64, f64) = (0.0, 0.0);
    for k in samples(100) {
        let ex = spin_half::expansion(&k).unwrap();
        recon = recon.max(ex.reconstruction_error);
        coeff = coeff
            .max(ex.magnitude_mismatch)
            .max(ex.row_phase_distance[0])
            .max(ex.row_phase_distance[1]);
    }
    conclude(
        "expansion oracle",
        recon < 1e-11 && coeff < 1e-10,
        format!(
            "reconstruction {recon:.2e} (tol 1e-11); |oracle| vs |A, B| {coeff:.3e} (tol 1e-10)"
        ),
    );
}

#[test]
fn spin_half_symmetry_table() {
    let ops = [Operation::P, Operation::C, Operation::CP, Operation::PC];
    let expected: Vec<_> = spin_half::expected_table()
        .into_iter()
        .filter(|e| ops.contains(&e.operation))
        .collect();
    let (mut wrong, mut snap, mut anti) = (0usize, 0.0f64, 0.0f64);
    let mut rows_checked = 0;
    for k in samples(1000) {
        match spin_half::symmetry_rows(&k, &ops, 1e-11) {
            Ok(rows) => {
                let (w, phase_err) = phase::compare(&rows, &expected);
                wrong += w + usize::from(phase_err != 0.0);
                rows_checked = rows.len();
                snap = rows.iter().map(|r| r.snap_error).fold(snap, f64::max);
            }
            Err(_) => wrong += 1,
        }
        anti = anti.max(spin_half::cp_pc_anticommutator(&k));
    }
    conclude(
        "spin-1/2 symmetry table",
        wrong == 0 && snap < 1e-11 && anti < 1e-11 && rows_checked == 16,
        format!("{rows_checked} rows, mismatches {wrong}, snap {snap:.2e} (tol 1e-11), |CP+PC| {anti:.2e}"),
    );
}

#[test]
fn spin_one_symmetry_table() {
    let ops = [Operation::P, Operation::C, Operation::CP];
    let (mut wrong, mut snap) = (0usize, 0.0f64);
    let kins = samples(1000);
    for alpha in [0.0, FRAC_PI_2, 1.3] {
        let expected: Vec<_> = spin_one::expected_table(alpha)
            .into_iter()
            .filter(|e| ops.contains(&e.operation))
            .collect();
        for k in &kins {
            match spin_one::symmetry_rows(k, alpha, &ops, 1e-11) {
                Ok(rows) => {
                    let (w, phase_err) = phase::compare(&rows, &expected);
                    wrong += w + usize::from(phase_err > 1e-15);
                    snap = rows.iter().map(|r| r.snap_error).fold(snap, f64::max);
                }
                Err(_) => wrong += 1,
            }
        }
    }
    conclude(
        "spin-1 symmetry table",
        wrong == 0 && snap < 1e-11,
        format!("18 rows × 3 phases, mismatches {wrong}, snap {snap:.2e} (tol 1e-11)"),
    );
}

#[test]
fn equation_chain() {
    let (mut th_bmw, mut g_th, mut g_u, mut v_flip): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for k in samples(1000) {
        let th = spin_one::tucker_hammer_matrix(&k);
        let g = spin_one::weinberg_matrix(&k);
        let e2 = k.energy().powi(2);
        th_bmw = th_bmw.max((&th - &spin_one::tucker_hammer_from_bmw(&k)).max_abs());
        g_th = g_th.max((&g - &th).max_abs() / k.mass().powi(2));
        let flipped = spin_one::mass_flipped_operator(&k);
        for b in spin_one::helicity_states(&k) {
            match b.kind {
                Kind::U => g_u = g_u.max(spin_one::residual(&g, &b) / e2),
                Kind::V => v_flip = v_flip.max(spin_one::residual(&flipped, &b) / e2),
            }
        }
    }
    conclude(
        "equation-chain equivalence",
        th_bmw <= 1e-13 && g_th < 1e-12 && g_u < 1e-10 && v_flip < 1e-10,
        format!(
            "TH−BMW {th_bmw:.2e} (1e-13), Γ−TH {g_th:.2e}·m² (1e-12), Γu {g_u:.2e}·E², (γpp+m²)v {v_flip:.2e}·E² (1e-10)"
        ),
    );
}

#[test]
fn proca_chain() {
    let mut first = [0.0f64; 4];
    let mut proca = [0.0f64; 2];
    for k in samples(200) {
        let e2 = k.energy().powi(2);
        for b in spin_one::helicity_states(&k)
            .iter()
            .filter(|b| b.kind == Kind::U)
        {
            let f = fields_from_bivector(b);
            for (w, r) in first
                .iter_mut()
                .zip(first_order_residuals(&f, b).as_array())
            {
                *w = w.max(r / e2);
            }
            let p = proca_residuals(&f);
            proca[0] = proca[0].max(p.first / e2);
            proca[1] = proca[1].max(p.second / e2);
        }
    }
    let worst = first
        .iter()
        .chain(proca.iter())
        .fold(0.0f64, |a, &b| a.max(b));
    conclude(
        "Proca chain",
        worst < 1e-10,
        format!(
            "first-order {:.1e} {:.1e} {:.1e} {:.1e}, Proca {:.1e} {:.1e} (×E², tol 1e-10)",
            first[0], first[1], first[2], first[3], proca[0], proca[1]
        ),
    );
}

#[test]
fn determinism_and_interface() {
    let bin = env!("CARGO_BIN_EXE_helicity");
    let run = || {
        Command::new(bin)
            .args(["verify", "--seed", "7", "--samples", "100"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let golden_path =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verify_seed7_samples100.json");
    let golden = std::fs::read(&golden_path).unwrap_or_default();
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap_or_default();
    let all_pass = report["checks"]
        .as_array()
        .is_some_and(|c| !c.is_empty() && c.iter().all(|r| r["pass"] == true));
    let exit_ok = a.status.code() == Some(0) && b.status.code() == Some(0);
    let identical = a.stdout == b.stdout;
    let golden_match = a.stdout == golden;
    conclude(
        "determinism and interface",
        exit_ok && identical && golden_match && all_pass,
        format!("exit 0: {exit_ok}, byte-identical: {identical}, golden match: {golden_match}, all pass: {all_pass}"),
    );
}
