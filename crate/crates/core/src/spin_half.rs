//! Spin-1/2: helicity 2-spinors, helicity and parity-basis Dirac spinors,
//! the parity-to-helicity basis change and the `P`, `C`, `CP` tables.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    dirac_gamma, dirac_slash, pauli, re, sigma_dot, vector, wigner_theta_half, ComplexMatrix, C64,
    I, ONE, ZERO,
};
use crate::error::{Error, Result};
use crate::kinematics::Kinematics;
use crate::phase::{self, ExpectedRow, Operation, TableRow};

/// Particle (`u`, positive energy) or antiparticle (`v`) solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    U,
    V,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::U => "u",
            Kind::V => "v",
        }
    }

    /// `+1` for `u`, `−1` for `v`.
    pub fn sign(self) -> f64 {
        match self {
            Kind::U => 1.0,
            Kind::V => -1.0,
        }
    }
}

/// Helicity `±1/2` (or `S₃` projection for the parity basis).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity {
    Up,
    Down,
}

impl Helicity {
    pub const BOTH: [Helicity; 2] = [Helicity::Up, Helicity::Down];

    pub fn value(self) -> f64 {
        match self {
            Helicity::Up => 0.5,
            Helicity::Down => -0.5,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Up => Helicity::Down,
            Helicity::Down => Helicity::Up,
        }
    }

    pub fn arrow(self) -> &'static str {
        match self {
            Helicity::Up => "↑",
            Helicity::Down => "↓",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinBasis {
    Helicity,
    Parity,
}

/// Eigenvector of `σ·p̂` with eigenvalue `2h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinor {
    pub entries: [C64; 2],
    pub helicity: Helicity,
}

/// Helicity 2-spinor evaluated with the unreduced azimuth:
/// `φ↑ = (cos(θ/2) e^{−iφ/2}, sin(θ/2) e^{iφ/2})`,
/// `φ↓ = (sin(θ/2) e^{−iφ/2}, −cos(θ/2) e^{iφ/2})`.
pub fn two_spinor(h: Helicity, kin: &Kinematics) -> TwoSpinor {
    let (s, c) = (kin.theta() / 2.0).sin_cos();
    let lo = C64::from_polar(1.0, -kin.phi() / 2.0);
    let hi = C64::from_polar(1.0, kin.phi() / 2.0);
    let entries = match h {
        Helicity::Up => [lo * c, hi * s],
        Helicity::Down => [lo * s, -hi * c],
    };
    TwoSpinor {
        entries,
        helicity: h,
    }
}

/// Dirac 4-spinor in the spinorial representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourSpinor {
    pub entries: [C64; 4],
    pub kind: Kind,
    pub helicity: Helicity,
    pub basis: SpinBasis,
    pub kin: Kinematics,
}

impl FourSpinor {
    /// `ψ̄ψ = ψ†γ⁰ψ`.
    pub fn bar_norm(&self) -> f64 {
        bar_product(&self.entries, &self.entries).re
    }

    pub fn label(&self) -> String {
        state_label(self.kind, self.helicity, self.basis)
    }
}

impl fmt::Display for FourSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = (", self.label())?;
        for (i, z) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.12}{:+.12}i", z.re, z.im)?;
        }
        write!(f, ")")
    }
}

pub fn state_label(kind: Kind, h: Helicity, basis: SpinBasis) -> String {
    match basis {
        SpinBasis::Helicity => format!("{}{}", kind.as_str(), h.arrow()),
        SpinBasis::Parity => {
            let s = if h == Helicity::Up { "+" } else { "-" };
            format!("{}{}", kind.as_str(), s)
        }
    }
}

/// `a†γ⁰b`.
pub fn bar_product(a: &[C64; 4], b: &[C64; 4]) -> C64 {
    a[0].conj() * b[2] + a[1].conj() * b[3] + a[2].conj() * b[0] + a[3].conj() * b[1]
}

/// Helicity-basis `u` and `v` spinors normalized to `ūu = 1`, `v̄v = −1`:
/// `u↑ = (√((E+p)/m) φ↑, √(m/(E+p)) φ↑)/√2`,
/// `u↓ = (√(m/(E+p)) φ↓, √((E+p)/m) φ↓)/√2`; `v` negates the lower block.
pub fn four_spinor(kind: Kind, h: Helicity, kin: &Kinematics) -> FourSpinor {
    let phi = two_spinor(h, kin).entries;
    let big = (kin.energy_plus_p() / kin.mass()).sqrt() * FRAC_1_SQRT_2;
    let small = (kin.mass() / kin.energy_plus_p()).sqrt() * FRAC_1_SQRT_2;
    let (upper, lower) = match h {
        Helicity::Up => (big, small),
        Helicity::Down => (small, big),
    };
    let lower = lower * kind.sign();
    FourSpinor {
        entries: [
            phi[0] * upper,
            phi[1] * upper,
            phi[0] * lower,
            phi[1] * lower,
        ],
        kind,
        helicity: h,
        basis: SpinBasis::Helicity,
        kin: *kin,
    }
}

/// `u↑, u↓, v↑, v↓` at `kin`.
pub fn helicity_states(kin: &Kinematics) -> [FourSpinor; 4] {
    [
        four_spinor(Kind::U, Helicity::Up, kin),
        four_spinor(Kind::U, Helicity::Down, kin),
        four_spinor(Kind::V, Helicity::Up, kin),
        four_spinor(Kind::V, Helicity::Down, kin),
    ]
}

/// Standard-basis spinor obtained by boosting the rest spinors
/// `ξ₊ = (1, 0)`, `ξ₋ = (0, 1)` with `Λ_{R,L} = (E + m ± σ·p)/√(2m(E+m))`:
/// `u = (Λ_R ξ, Λ_L ξ)/√2`, `v = (Λ_R ξ, −Λ_L ξ)/√2`.
pub fn parity_basis_spinor(kind: Kind, sigma: Helicity, kin: &Kinematics) -> FourSpinor {
    let m = kin.mass();
    let e_plus_m = kin.energy() + m;
    let norm = (2.0 * m * e_plus_m).sqrt();
    let sp = sigma_dot(kin.momentum());
    let col = match sigma {
        Helicity::Up => 0,
        Helicity::Down => 1,
    };
    // column `col` of (E + m) ± σ·p
    let base = |i: usize| if i == col { re(e_plus_m) } else { ZERO };
    let right: Vec<C64> = (0..2).map(|i| (base(i) + sp.get(i, col)) / norm).collect();
    let left: Vec<C64> = (0..2).map(|i| (base(i) - sp.get(i, col)) / norm).collect();
    let s = kind.sign() * FRAC_1_SQRT_2;
    FourSpinor {
        entries: [
            right[0] * FRAC_1_SQRT_2,
            right[1] * FRAC_1_SQRT_2,
            left[0] * s,
            left[1] * s,
        ],
        kind,
        helicity: sigma,
        basis: SpinBasis::Parity,
        kin: *kin,
    }
}

/// `u₊, u₋, v₊, v₋` at `kin`.
pub fn parity_states(kin: &Kinematics) -> [FourSpinor; 4] {
    [
        parity_basis_spinor(Kind::U, Helicity::Up, kin),
        parity_basis_spinor(Kind::U, Helicity::Down, kin),
        parity_basis_spinor(Kind::V, Helicity::Up, kin),
        parity_basis_spinor(Kind::V, Helicity::Down, kin),
    ]
}

/// `‖(γ^μp_μ − m)u‖` or `‖(γ^μp_μ + m)v‖`.
pub fn dirac_residual(s: &FourSpinor) -> f64 {
    let slash = dirac_slash(&s.kin);
    let lhs = slash.mul_vec(&s.entries);
    let m = s.kin.mass() * s.kind.sign();
    let r: Vec<C64> = lhs.iter().zip(&s.entries).map(|(a, b)| a - b * m).collect();
    vector::norm(&r)
}

/// Coefficients of the parity-to-helicity basis change.
///
/// `a_matrix`, `b_matrix` are the closed forms
/// `A = (a₊₊ + a₊₋)(σ·a) + (−a₋₊ + a₋₋)(σ·a)σ₃`,
/// `B = (−a₊₊ + a₊₋)(σ·a) + (a₋₊ + a₋₋)(σ·a)σ₃` with `σ·a = a⁰I + a^kσ^k`.
/// The `v`-expansion blocks `c_matrix`, `d_matrix` have no closed form and
/// come from the linear-solve oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisChange {
    /// `(a⁰, a¹, a², a³)`; `a⁰` is imaginary, the rest real.
    pub a: [C64; 4],
    pub app: f64,
    pub apm: f64,
    pub amp: f64,
    pub amm: f64,
    pub a_matrix: ComplexMatrix,
    pub b_matrix: ComplexMatrix,
    pub c_matrix: ComplexMatrix,
    pub d_matrix: ComplexMatrix,
    /// `((A, B), (C, D))`.
    pub u_matrix: ComplexMatrix,
}

impl BasisChange {
    /// `a⁰I + a^kσ^k`.
    pub fn sigma_a(&self) -> ComplexMatrix {
        sigma_contract(&self.a)
    }

    /// `‖A†A + B†B − I‖` (largest entry).
    pub fn unitarity_defect(&self) -> f64 {
        let a = &self.a_matrix;
        let b = &self.b_matrix;
        (&(&(&a.adjoint() * a) + &(&b.adjoint() * b)) - &ComplexMatrix::identity(2)).max_abs()
    }

    /// `‖A†A − B†B − I‖`, the indefinite-metric counterpart.
    pub fn pseudo_unitarity_defect(&self) -> f64 {
        let a = &self.a_matrix;
        let b = &self.b_matrix;
        (&(&(&a.adjoint() * a) - &(&b.adjoint() * b)) - &ComplexMatrix::identity(2)).max_abs()
    }

    /// `‖A†A − I‖`.
    pub fn a_unitarity_defect(&self) -> f64 {
        let a = &self.a_matrix;
        (&(&a.adjoint() * a) - &ComplexMatrix::identity(2)).max_abs()
    }

    /// `‖U†U − I‖`.
    pub fn u_unitarity_defect(&self) -> f64 {
        let u = &self.u_matrix;
        (&(&u.adjoint() * u) - &ComplexMatrix::identity(4)).max_abs()
    }
}

fn sigma_contract(a: &[C64; 4]) -> ComplexMatrix {
    (1..=3).fold(ComplexMatrix::identity(2).scale(a[0]), |acc, k| {
        &acc + &pauli(k).unwrap().scale(a[k])
    })
}

/// Half-angle coefficients `a^μ` and boost coefficients `a_{±±}`.
pub fn expansion_coefficients(kin: &Kinematics) -> ([C64; 4], [f64; 4]) {
    let (st, ct) = (kin.theta() / 2.0).sin_cos();
    let (sp, cp) = (kin.phi() / 2.0).sin_cos();
    let a = [
        C64::new(0.0, -ct * sp),
        re(st * cp),
        re(st * sp),
        re(ct * cp),
    ];
    let (e, m, p) = (kin.energy(), kin.mass(), kin.pmag());
    let d = 2.0 * std::f64::consts::SQRT_2 * m;
    // E − m = p²/(E + m) keeps precision near rest.
    let e_minus_m = p * p / (e + m);
    let coeffs = [
        ((e + m) * kin.energy_plus_p()).sqrt() / d,
        ((e + m) * kin.energy_minus_p()).sqrt() / d,
        (e_minus_m * kin.energy_plus_p()).sqrt() / d,
        (e_minus_m * kin.energy_minus_p()).sqrt() / d,
    ];
    (a, coeffs)
}

/// Closed-form `A`, `B` together with oracle `C`, `D`.
pub fn basis_change(kin: &Kinematics) -> Result<BasisChange> {
    let (a, [app, apm, amp, amm]) = expansion_coefficients(kin);
    let s = sigma_contract(&a);
    let s3 = &s * &pauli(3)?;
    let a_matrix = &s.scale(re(app + apm)) + &s3.scale(re(-amp + amm));
    let b_matrix = &s.scale(re(-app + apm)) + &s3.scale(re(amp + amm));
    let oracle = expansion(kin)?;
    let c_matrix = oracle.coefficients.block(2, 0, 2, 2);
    let d_matrix = oracle.coefficients.block(2, 2, 2, 2);
    let u_matrix = ComplexMatrix::block2x2(&a_matrix, &b_matrix, &c_matrix, &d_matrix)?;
    Ok(BasisChange {
        a,
        app,
        apm,
        amp,
        amm,
        a_matrix,
        b_matrix,
        c_matrix,
        d_matrix,
        u_matrix,
    })
}

/// Outcome of expressing the parity-basis spinors in the helicity basis by
/// an exact linear solve.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    /// Rows `u₊, u₋, v₊, v₋`; columns `u↑, u↓, v↑, v↓`.
    pub coefficients: ComplexMatrix,
    /// Largest `‖Σ_λ Ĉ_{σλ} w_λ − w_σ‖` over the four parity states.
    pub reconstruction_error: f64,
    /// `max | |Ĉ_{σλ}| − |closed_{σλ}| |` over the `u`-rows `(A, B)`.
    pub magnitude_mismatch: f64,
    /// Per `u`-row distance after the best global phase is removed.
    pub row_phase_distance: [f64; 2],
    /// `‖Ĉ†Ĉ − I‖` for the full oracle matrix.
    pub oracle_unitarity_defect: f64,
}

/// Linear-solve oracle for the expansion `u_σ = Â_{σλ}u_λ + B̂_{σλ}v_λ`,
/// `v_σ = Ĉ_{σλ}u_λ + D̂_{σλ}v_λ`.
pub fn expansion(kin: &Kinematics) -> Result<Expansion> {
    let hel = ComplexMatrix::from_columns(&helicity_states(kin).map(|s| s.entries.to_vec()))?;
    let par = ComplexMatrix::from_columns(&parity_states(kin).map(|s| s.entries.to_vec()))?;
    let x = hel.solve(&par)?;
    let reconstruction_error = (&(&hel * &x) - &par).max_abs();
    let coefficients = x.transpose();

    let (a, [app, apm, amp, amm]) = expansion_coefficients(kin);
    let s = sigma_contract(&a);
    let s3 = &s * &pauli(3)?;
    let closed_a = &s.scale(re(app + apm)) + &s3.scale(re(-amp + amm));
    let closed_b = &s.scale(re(-app + apm)) + &s3.scale(re(amp + amm));
    let closed = ComplexMatrix::from_fn(2, 4, |i, j| {
        if j < 2 {
            closed_a.get(i, j)
        } else {
            closed_b.get(i, j - 2)
        }
    });
    let mut magnitude_mismatch: f64 = 0.0;
    let mut row_phase_distance = [0.0; 2];
    for (r, dist) in row_phase_distance.iter_mut().enumerate() {
        let oracle_row = coefficients.row(r);
        let closed_row = closed.row(r);
        for (o, c) in oracle_row.iter().zip(&closed_row) {
            magnitude_mismatch = magnitude_mismatch.max((o.norm() - c.norm()).abs());
        }
        let overlap = vector::inner(&closed_row, &oracle_row);
        let align = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            ONE
        };
        *dist = vector::distance(&oracle_row, &vector::scale(&closed_row, align));
    }
    let oracle_unitarity_defect =
        (&(&coefficients.adjoint() * &coefficients) - &ComplexMatrix::identity(4)).max_abs();
    Ok(Expansion {
        coefficients,
        reconstruction_error,
        magnitude_mismatch,
        row_phase_distance,
        oracle_unitarity_defect,
    })
}

/// Reconstruction error of the expansion oracle.
pub fn expansion_residual(kin: &Kinematics) -> Result<f64> {
    Ok(expansion(kin)?.reconstruction_error)
}

/// `γ⁰ψ` on a raw 4-vector.
pub fn parity(v: &[C64; 4]) -> [C64; 4] {
    [v[2], v[3], v[0], v[1]]
}

/// `((0, Θ), (−Θ, 0)) ψ*` on a raw 4-vector.
pub fn charge_conjugate(v: &[C64; 4]) -> [C64; 4] {
    let theta = wigner_theta_half();
    let lower = theta.mul_vec(&[v[2].conj(), v[3].conj()]);
    let upper = theta.mul_vec(&[v[0].conj(), v[1].conj()]);
    [lower[0], lower[1], -upper[0], -upper[1]]
}

/// `γ⁰ s`; `s` should be built at `kin.parity_flip()`.
pub fn apply_parity(s: &FourSpinor) -> [C64; 4] {
    parity(&s.entries)
}

pub fn apply_charge_conj(s: &FourSpinor) -> [C64; 4] {
    charge_conjugate(&s.entries)
}

fn transform(op: Operation, kind: Kind, h: Helicity, kin: &Kinematics) -> [C64; 4] {
    let flipped = kin.parity_flip();
    match op {
        Operation::P => parity(&four_spinor(kind, h, &flipped).entries),
        Operation::C => charge_conjugate(&four_spinor(kind, h, kin).entries),
        Operation::CP => charge_conjugate(&parity(&four_spinor(kind, h, &flipped).entries)),
        Operation::PC => parity(&charge_conjugate(&four_spinor(kind, h, &flipped).entries)),
        Operation::PP => parity(&parity(
            &four_spinor(kind, h, &flipped.parity_flip()).entries,
        )),
        Operation::CC => charge_conjugate(&charge_conjugate(&four_spinor(kind, h, kin).entries)),
    }
}

/// Identified `(out_state, phase)` for every operation in `ops` on the
/// four helicity states, matched against states at `kin`.
pub fn symmetry_rows(kin: &Kinematics, ops: &[Operation], tol: f64) -> Result<Vec<TableRow>> {
    let targets: Vec<(String, Vec<C64>)> = helicity_states(kin)
        .iter()
        .map(|s| (s.label(), s.entries.to_vec()))
        .collect();
    let allowed = phase::quarter_phases(0.0);
    let mut rows = Vec::with_capacity(ops.len() * 4);
    for &op in ops {
        for kind in [Kind::U, Kind::V] {
            for h in Helicity::BOTH {
                let out = transform(op, kind, h, kin);
                let label = state_label(kind, h, SpinBasis::Helicity);
                rows.push(phase::identify(op, &label, &out, &targets, &allowed, tol)?);
            }
        }
    }
    Ok(rows)
}

/// Default phase-match tolerance for the symmetry tables.
pub const TABLE_TOLERANCE: f64 = 1e-11;

/// Full `{P, C, CP, PC, PP, CC}` table, checked against [`expected_table`].
pub fn symmetry_table_half(kin: &Kinematics) -> Result<Vec<TableRow>> {
    let rows = symmetry_rows(kin, &Operation::ALL, TABLE_TOLERANCE)?;
    let (wrong, worst) = phase::compare(&rows, &expected_table());
    if wrong > 0 || worst > 0.0 {
        return Err(Error::NoMatch {
            input: format!("spin-1/2 table deviates in {wrong} rows (phase error {worst:e})"),
        });
    }
    Ok(rows)
}

/// Expected spin-1/2 table. `PP` and `CC` follow from composing rows.
pub fn expected_table() -> Vec<ExpectedRow> {
    use Operation::*;
    let row = |operation, in_state, out_state, phase| ExpectedRow {
        operation,
        in_state,
        out_state,
        phase,
    };
    vec![
        row(P, "u↑", "u↓", -I),
        row(P, "u↓", "u↑", -I),
        row(P, "v↑", "v↓", I),
        row(P, "v↓", "v↑", I),
        row(C, "u↑", "v↓", -ONE),
        row(C, "u↓", "v↑", ONE),
        row(C, "v↑", "u↓", ONE),
        row(C, "v↓", "u↑", -ONE),
        row(CP, "u↑", "v↑", I),
        row(CP, "u↓", "v↓", -I),
        row(CP, "v↑", "u↑", I),
        row(CP, "v↓", "u↓", -I),
        row(PC, "u↑", "v↑", -I),
        row(PC, "u↓", "v↓", I),
        row(PC, "v↑", "u↑", -I),
        row(PC, "v↓", "u↓", I),
        row(PP, "u↑", "u↑", -ONE),
        row(PP, "u↓", "u↓", -ONE),
        row(PP, "v↑", "v↑", -ONE),
        row(PP, "v↓", "v↓", -ONE),
        row(CC, "u↑", "u↑", ONE),
        row(CC, "u↓", "u↓", ONE),
        row(CC, "v↑", "v↑", ONE),
        row(CC, "v↓", "v↓", ONE),
    ]
}

/// `max ‖CP s + PC s‖` over the four states.
pub fn cp_pc_anticommutator(kin: &Kinematics) -> f64 {
    let mut worst: f64 = 0.0;
    for kind in [Kind::U, Kind::V] {
        for h in Helicity::BOTH {
            let cp = transform(Operation::CP, kind, h, kin);
            let pc = transform(Operation::PC, kind, h, kin);
            worst = worst.max(vector::norm(&vector::add(&cp, &pc)));
        }
    }
    worst
}

/// `γ⁰` as a matrix, for callers that want the operator itself.
pub fn parity_matrix() -> ComplexMatrix {
    dirac_gamma(0).expect("γ⁰ exists")
}
