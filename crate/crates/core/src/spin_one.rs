//! Spin-1 in the `(1,0)⊕(0,1)` representation: helicity 3-spinors,
//! bivectors, the Tucker-Hammer and Weinberg operators, and the `P`, `C`,
//! `CP` tables.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::algebra::{bmw_gamma, re, spin1_dot, vector, wigner_theta_one, ComplexMatrix, C64, ONE};
use crate::error::{Error, Result};
use crate::kinematics::Kinematics;
use crate::phase::{self, ExpectedRow, Operation, TableRow};
use crate::spin_half::Kind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity {
    Up,
    Zero,
    Down,
}

impl Helicity {
    pub const ALL: [Helicity; 3] = [Helicity::Up, Helicity::Zero, Helicity::Down];

    pub fn value(self) -> f64 {
        match self {
            Helicity::Up => 1.0,
            Helicity::Zero => 0.0,
            Helicity::Down => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Up => Helicity::Down,
            Helicity::Zero => Helicity::Zero,
            Helicity::Down => Helicity::Up,
        }
    }

    pub fn arrow(self) -> &'static str {
        match self {
            Helicity::Up => "↑",
            Helicity::Zero => "→",
            Helicity::Down => "↓",
        }
    }
}

/// Eigenvector of `S·p̂` in the weight basis, `χ†χ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeSpinor {
    pub entries: [C64; 3],
    pub helicity: Helicity,
}

pub fn three_spinor(h: Helicity, kin: &Kinematics) -> ThreeSpinor {
    let (s, c) = kin.theta().sin_cos();
    let em = C64::from_polar(1.0, -kin.phi());
    let ep = C64::from_polar(1.0, kin.phi());
    let r = FRAC_1_SQRT_2;
    let entries = match h {
        Helicity::Up => [em * ((1.0 + c) / 2.0), re(s * r), ep * ((1.0 - c) / 2.0)],
        Helicity::Zero => [em * (-s * r), re(c), ep * (s * r)],
        Helicity::Down => [em * ((1.0 - c) / 2.0), re(-s * r), ep * ((1.0 + c) / 2.0)],
    };
    ThreeSpinor {
        entries,
        helicity: h,
    }
}

/// Six-component bivector ordered `(χ-block, ψ-block)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bivector {
    pub entries: [C64; 6],
    pub kind: Kind,
    pub helicity: Helicity,
    pub kin: Kinematics,
}

impl Bivector {
    pub fn chi_block(&self) -> [C64; 3] {
        [self.entries[0], self.entries[1], self.entries[2]]
    }

    pub fn psi_block(&self) -> [C64; 3] {
        [self.entries[3], self.entries[4], self.entries[5]]
    }

    /// `b†γ^{00}b = 2 Re(χ†ψ)`.
    pub fn bar_norm(&self) -> f64 {
        2.0 * vector::inner(&self.chi_block(), &self.psi_block()).re
    }

    pub fn label(&self) -> String {
        state_label(self.kind, self.helicity)
    }
}

pub fn state_label(kind: Kind, h: Helicity) -> String {
    format!("{}{}", kind.as_str(), h.arrow())
}

/// `u_{1,h}` / `v_{1,h}` with boost weights `(E+p)/m`, `1`, `m/(E+p)`
/// for `h = ↑, →, ↓` on the `χ`-block and the reciprocal on the `ψ`-block;
/// `v` negates the `ψ`-block.
pub fn bivector(kind: Kind, h: Helicity, kin: &Kinematics) -> Bivector {
    let chi = three_spinor(h, kin).entries;
    let boost = kin.energy_plus_p() / kin.mass();
    let inverse = kin.mass() / kin.energy_plus_p();
    let (top, bottom) = match h {
        Helicity::Up => (boost, inverse),
        Helicity::Zero => (1.0, 1.0),
        Helicity::Down => (inverse, boost),
    };
    let top = top * FRAC_1_SQRT_2;
    let bottom = bottom * FRAC_1_SQRT_2 * kind.sign();
    Bivector {
        entries: [
            chi[0] * top,
            chi[1] * top,
            chi[2] * top,
            chi[0] * bottom,
            chi[1] * bottom,
            chi[2] * bottom,
        ],
        kind,
        helicity: h,
        kin: *kin,
    }
}

/// Bivectors in the order `u↑, u→, u↓, v↑, v→, v↓`.
pub fn helicity_states(kin: &Kinematics) -> Vec<Bivector> {
    [Kind::U, Kind::V]
        .into_iter()
        .flat_map(|k| Helicity::ALL.into_iter().map(move |h| bivector(k, h, kin)))
        .collect()
}

/// `shift + 2(S·p)² ± 2E S·p`, each entry summed with exact products and
/// compensation.
fn off_diagonal_blocks(kin: &Kinematics, diag_shift: f64) -> (ComplexMatrix, ComplexMatrix) {
    let sp = spin1_dot(kin.momentum());
    let e = kin.energy();
    let block = |sign: f64| {
        ComplexMatrix::from_fn(3, 3, |j, k| {
            let (mut sr, mut si) = (Neumaier::default(), Neumaier::default());
            if j == k {
                sr.add(diag_shift);
            }
            for l in 0..3 {
                let (a, b) = (sp.get(j, l), sp.get(l, k));
                sr.add_product(2.0 * a.re, b.re);
                sr.add_product(-2.0 * a.im, b.im);
                si.add_product(2.0 * a.re, b.im);
                si.add_product(2.0 * a.im, b.re);
            }
            let c = sp.get(j, k);
            sr.add_product(sign * 2.0 * e, c.re);
            si.add_product(sign * 2.0 * e, c.im);
            C64::new(sr.value(), si.value())
        })
    };
    (block(1.0), block(-1.0))
}

/// Tucker-Hammer operator
/// `((E²−p²−2m², E²−p²+2E S·p+2(S·p)²), (E²−p²−2E S·p+2(S·p)², E²−p²−2m²))`.
pub fn tucker_hammer_matrix(kin: &Kinematics) -> ComplexMatrix {
    let pp = kin.invariant_mass_sq();
    let m2 = kin.mass() * kin.mass();
    let diag = ComplexMatrix::identity(3).scale(re(pp - 2.0 * m2));
    let (upper, lower) = off_diagonal_blocks(kin, pp);
    ComplexMatrix::block2x2(&diag, &upper, &lower, &diag).expect("3x3 blocks")
}

/// Weinberg operator `Γ`: diagonal `−m²`, off-diagonal `m² ± 2E S·p + 2(S·p)²`.
pub fn weinberg_matrix(kin: &Kinematics) -> ComplexMatrix {
    let m2 = kin.mass() * kin.mass();
    let diag = ComplexMatrix::identity(3).scale(re(-m2));
    let (upper, lower) = off_diagonal_blocks(kin, m2);
    ComplexMatrix::block2x2(&diag, &upper, &lower, &diag).expect("3x3 blocks")
}

/// `γ^{μν} p_μ p_ν` assembled from the Barut-Muzinich-Williams matrices.
///
/// Each entry is a compensated sum over `(μ, ν)`, with `p_μ p_ν` split
/// exactly into a head and a tail.
pub fn bmw_contraction(kin: &Kinematics) -> ComplexMatrix {
    let p = kin.covariant_momentum();
    let gammas: Vec<(usize, usize, ComplexMatrix)> = (0..4)
        .flat_map(|mu| (0..4).map(move |nu| (mu, nu)))
        .map(|(mu, nu)| (mu, nu, bmw_gamma(mu, nu).expect("valid indices")))
        .collect();
    ComplexMatrix::from_fn(6, 6, |j, k| {
        let (mut sr, mut si) = (Neumaier::default(), Neumaier::default());
        for (mu, nu, g) in &gammas {
            let z = g.get(j, k);
            let hi = p[*mu] * p[*nu];
            let lo = p[*mu].mul_add(p[*nu], -hi);
            for (acc, c) in [(&mut sr, z.re), (&mut si, z.im)] {
                if c != 0.0 {
                    acc.add_product(hi, c);
                    acc.add_product(lo, c);
                }
            }
        }
        C64::new(sr.value(), si.value())
    })
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Adds `a·b` exactly (head plus fused-multiply-add tail).
    fn add_product(&mut self, a: f64, b: f64) {
        let hi = a * b;
        self.add(hi);
        self.add(a.mul_add(b, -hi));
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `γ^{μν}p_μp_ν + p^μp_μ − 2m²`, with `p^μp_μ = η_{μν}p^μp^ν` summed directly.
pub fn tucker_hammer_from_bmw(kin: &Kinematics) -> ComplexMatrix {
    let p = kin.four_momentum();
    let pp = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
    let m2 = kin.mass() * kin.mass();
    &bmw_contraction(kin) + &ComplexMatrix::identity(6).scale(re(pp - 2.0 * m2))
}

/// `γ^{μν}p_μp_ν + m²`, the operator annihilating the `v`-bivectors.
pub fn mass_flipped_operator(kin: &Kinematics) -> ComplexMatrix {
    let m2 = kin.mass() * kin.mass();
    &bmw_contraction(kin) + &ComplexMatrix::identity(6).scale(re(m2))
}

/// `‖op · b‖`.
pub fn residual(op: &ComplexMatrix, b: &Bivector) -> f64 {
    vector::norm(&op.mul_vec(&b.entries))
}

/// `γ^{00}b`; `b` should be built at `kin.parity_flip()`.
pub fn apply_parity_one(b: &Bivector) -> [C64; 6] {
    parity(&b.entries)
}

pub fn apply_charge_conj_one(b: &Bivector, alpha: f64) -> [C64; 6] {
    charge_conjugate(&b.entries, alpha)
}

pub fn parity(v: &[C64; 6]) -> [C64; 6] {
    [v[3], v[4], v[5], v[0], v[1], v[2]]
}

/// `e^{iα} ((0, Θ), (−Θ, 0)) b*`.
pub fn charge_conjugate(v: &[C64; 6], alpha: f64) -> [C64; 6] {
    let theta = wigner_theta_one();
    let phase = C64::from_polar(1.0, alpha);
    let upper = theta.mul_vec(&[v[3].conj(), v[4].conj(), v[5].conj()]);
    let lower = theta.mul_vec(&[v[0].conj(), v[1].conj(), v[2].conj()]);
    [
        upper[0] * phase,
        upper[1] * phase,
        upper[2] * phase,
        -lower[0] * phase,
        -lower[1] * phase,
        -lower[2] * phase,
    ]
}

fn transform(op: Operation, kind: Kind, h: Helicity, kin: &Kinematics, alpha: f64) -> [C64; 6] {
    let flipped = kin.parity_flip();
    let at = |k: &Kinematics| bivector(kind, h, k).entries;
    match op {
        Operation::P => parity(&at(&flipped)),
        Operation::C => charge_conjugate(&at(kin), alpha),
        Operation::CP => charge_conjugate(&parity(&at(&flipped)), alpha),
        Operation::PC => parity(&charge_conjugate(&at(&flipped), alpha)),
        Operation::PP => parity(&parity(&at(&flipped.parity_flip()))),
        Operation::CC => charge_conjugate(&charge_conjugate(&at(kin), alpha), alpha),
    }
}

fn allowed_phases(op: Operation, alpha: f64) -> [C64; 4] {
    match op {
        Operation::C | Operation::CP | Operation::PC => phase::quarter_phases(alpha),
        Operation::P | Operation::PP | Operation::CC => phase::quarter_phases(0.0),
    }
}

pub fn symmetry_rows(
    kin: &Kinematics,
    alpha: f64,
    ops: &[Operation],
    tol: f64,
) -> Result<Vec<TableRow>> {
    let targets: Vec<(String, Vec<C64>)> = helicity_states(kin)
        .iter()
        .map(|b| (b.label(), b.entries.to_vec()))
        .collect();
    let mut rows = Vec::with_capacity(ops.len() * 6);
    for &op in ops {
        let allowed = allowed_phases(op, alpha);
        for kind in [Kind::U, Kind::V] {
            for h in Helicity::ALL {
                let out = transform(op, kind, h, kin, alpha);
                let label = state_label(kind, h);
                rows.push(phase::identify(op, &label, &out, &targets, &allowed, tol)?);
            }
        }
    }
    Ok(rows)
}

/// Full `{P, C, CP, PC, PP, CC}` table at charge-conjugation phase `alpha`,
/// checked against [`expected_table`].
pub fn symmetry_table_one(kin: &Kinematics, alpha: f64) -> Result<Vec<TableRow>> {
    let rows = symmetry_rows(
        kin,
        alpha,
        &Operation::ALL,
        crate::spin_half::TABLE_TOLERANCE,
    )?;
    let (wrong, worst) = phase::compare(&rows, &expected_table(alpha));
    if wrong > 0 || worst > 1e-12 {
        return Err(Error::NoMatch {
            input: format!("spin-1 table deviates in {wrong} rows (phase error {worst:e})"),
        });
    }
    Ok(rows)
}

/// Expected spin-1 table; `PC`, `PP`, `CC` follow from composing rows.
pub fn expected_table(alpha: f64) -> Vec<ExpectedRow> {
    use Operation::*;
    let e = C64::from_polar(1.0, alpha);
    let row = |operation, in_state, out_state, phase| ExpectedRow {
        operation,
        in_state,
        out_state,
        phase,
    };
    vec![
        row(P, "u↑", "u↓", -ONE),
        row(P, "u→", "u→", -ONE),
        row(P, "u↓", "u↑", -ONE),
        row(P, "v↑", "v↓", ONE),
        row(P, "v→", "v→", ONE),
        row(P, "v↓", "v↑", ONE),
        row(C, "u↑", "v↓", e),
        row(C, "u→", "v→", -e),
        row(C, "u↓", "v↑", e),
        row(C, "v↑", "u↓", -e),
        row(C, "v→", "u→", e),
        row(C, "v↓", "u↑", -e),
        row(CP, "u↑", "v↑", -e),
        row(CP, "v↑", "u↑", -e),
        row(CP, "u↓", "v↓", -e),
        row(CP, "v↓", "u↓", -e),
        row(CP, "u→", "v→", e),
        row(CP, "v→", "u→", e),
        row(PC, "u↑", "v↑", e),
        row(PC, "v↑", "u↑", e),
        row(PC, "u↓", "v↓", e),
        row(PC, "v↓", "u↓", e),
        row(PC, "u→", "v→", -e),
        row(PC, "v→", "u→", -e),
        row(PP, "u↑", "u↑", ONE),
        row(PP, "u→", "u→", ONE),
        row(PP, "u↓", "u↓", ONE),
        row(PP, "v↑", "v↑", ONE),
        row(PP, "v→", "v→", ONE),
        row(PP, "v↓", "v↓", ONE),
        row(CC, "u↑", "u↑", -ONE),
        row(CC, "u→", "u→", -ONE),
        row(CC, "u↓", "u↓", -ONE),
        row(CC, "v↑", "v↑", -ONE),
        row(CC, "v→", "v→", -ONE),
        row(CC, "v↓", "v↓", -ONE),
    ]
}

/// `max ‖CP b + PC b‖` over the six states.
pub fn cp_pc_anticommutator(kin: &Kinematics, alpha: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for kind in [Kind::U, Kind::V] {
        for h in Helicity::ALL {
            let cp = transform(Operation::CP, kind, h, kin, alpha);
            let pc = transform(Operation::PC, kind, h, kin, alpha);
            worst = worst.max(vector::norm(&vector::add(&cp, &pc)));
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{helicity_matrix_one, ZERO};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn kin(m: f64, p: f64, t: f64, f: f64) -> Kinematics {
        Kinematics::new(m, p, t, f).unwrap()
    }

    fn close(a: &[C64], b: &[C64], tol: f64) {
        let d = vector::distance(a, b);
        assert!(d <= tol, "distance {d}: {a:?} vs {b:?}");
    }

    #[test]
    fn three_spinor_pole_values() {
        let k = kin(1.0, 0.0, 0.0, 0.0);
        close(
            &three_spinor(Helicity::Up, &k).entries,
            &[ONE, ZERO, ZERO],
            0.0,
        );
        close(
            &three_spinor(Helicity::Zero, &k).entries,
            &[ZERO, ONE, ZERO],
            0.0,
        );
        close(
            &three_spinor(Helicity::Down, &k).entries,
            &[ZERO, ZERO, ONE],
            0.0,
        );
    }

    #[test]
    fn three_spinors_form_orthonormal_eigenbasis() {
        let k = kin(1.0, 2.0, 1.1, 4.0);
        let sp = helicity_matrix_one(&k);
        let chis: Vec<_> = Helicity::ALL.iter().map(|&h| three_spinor(h, &k)).collect();
        let mut completeness = ComplexMatrix::zeros(3, 3);
        for a in &chis {
            close(
                &sp.mul_vec(&a.entries),
                &vector::scale(&a.entries, re(a.helicity.value())),
                1e-15,
            );
            for b in &chis {
                let expect = if a.helicity == b.helicity { ONE } else { ZERO };
                assert!((vector::inner(&a.entries, &b.entries) - expect).norm() < 1e-15);
            }
            let col = ComplexMatrix::from_fn(3, 3, |i, j| a.entries[i] * a.entries[j].conj());
            completeness = &completeness + &col;
        }
        assert!((&completeness - &ComplexMatrix::identity(3)).max_abs() < 1e-15);
    }

    #[test]
    fn bivector_examples() {
        let r = FRAC_1_SQRT_2;
        let rest = kin(1.0, 0.0, 0.5, 0.5);
        let u = bivector(Kind::U, Helicity::Up, &rest);
        let chi = three_spinor(Helicity::Up, &rest).entries;
        close(&u.chi_block(), &vector::scale(&chi, re(r)), 1e-16);
        close(&u.psi_block(), &vector::scale(&chi, re(r)), 1e-16);

        let k = kin(1.0, 0.75, 0.5, 0.5);
        let u = bivector(Kind::U, Helicity::Up, &k);
        let chi = three_spinor(Helicity::Up, &k).entries;
        close(&u.chi_block(), &vector::scale(&chi, re(2.0 * r)), 1e-15);
        close(&u.psi_block(), &vector::scale(&chi, re(0.5 * r)), 1e-15);
        assert!(residual(&tucker_hammer_matrix(&k), &u) < 1e-14);

        let v = bivector(Kind::V, Helicity::Zero, &k);
        let chi = three_spinor(Helicity::Zero, &k).entries;
        close(&v.chi_block(), &vector::scale(&chi, re(r)), 1e-16);
        close(&v.psi_block(), &vector::scale(&chi, re(-r)), 1e-16);
    }

    #[test]
    fn bivector_bar_norms() {
        let k = kin(0.1, 10.0, 2.0, 3.0);
        for b in helicity_states(&k) {
            assert!(
                (b.bar_norm() - b.kind.sign()).abs() < 1e-13,
                "{}",
                b.label()
            );
        }
    }

    #[test]
    fn tucker_hammer_at_rest() {
        let k = kin(2.0, 0.0, 0.0, 0.0);
        let th = tucker_hammer_matrix(&k);
        let m2 = ComplexMatrix::identity(3).scale(re(4.0));
        assert!((&th.block(0, 3, 3, 3) - &m2).max_abs() < 1e-15);
        assert!((&th.block(3, 0, 3, 3) - &m2).max_abs() < 1e-15);
        assert!((&th.block(0, 0, 3, 3) + &m2).max_abs() < 1e-15);
        for b in helicity_states(&k).iter().filter(|b| b.kind == Kind::U) {
            assert!(residual(&th, b) < 1e-15);
        }
    }

    #[test]
    fn operator_routes_agree() {
        let k = kin(1.3, 3.3, 0.8, 2.1);
        let th = tucker_hammer_matrix(&k);
        assert!((&th - &tucker_hammer_from_bmw(&k)).max_abs() < 1e-13);
        assert!((&th - &weinberg_matrix(&k)).max_abs() < 1e-12 * k.mass().powi(2));
        let g = weinberg_matrix(&k);
        let flipped = mass_flipped_operator(&k);
        let scale = k.energy().powi(2);
        for b in helicity_states(&k) {
            match b.kind {
                Kind::U => assert!(residual(&g, &b) < 1e-12 * scale),
                Kind::V => {
                    assert!(residual(&flipped, &b) < 1e-12 * scale);
                    if b.helicity != Helicity::Zero || k.pmag() > 0.0 {
                        assert!(residual(&g, &b) > 1e-3);
                    }
                }
            }
        }
    }

    #[test]
    fn three_spinors_flip_under_parity() {
        let k = kin(1.0, 1.0, 0.9, 2.4);
        let f = k.parity_flip();
        for h in Helicity::ALL {
            let flipped = three_spinor(h, &f).entries;
            let target = three_spinor(h.flipped(), &k).entries;
            close(&flipped, &vector::scale(&target, -ONE), 1e-15);
        }
    }

    #[test]
    fn wigner_relations_on_three_spinors() {
        let k = kin(1.0, 1.0, 1.9, 0.4);
        let t = wigner_theta_one();
        let c = |h| vector::conj(&three_spinor(h, &k).entries);
        let s = |h| three_spinor(h, &k).entries;
        close(&t.mul_vec(&c(Helicity::Up)), &s(Helicity::Down), 1e-15);
        close(&t.mul_vec(&c(Helicity::Down)), &s(Helicity::Up), 1e-15);
        close(
            &t.mul_vec(&c(Helicity::Zero)),
            &vector::scale(&s(Helicity::Zero), -ONE),
            1e-15,
        );
    }

    #[test]
    fn parity_and_charge_rows() {
        let k = kin(1.0, 0.75, 1.0, 2.0);
        let f = k.parity_flip();
        let out = apply_parity_one(&bivector(Kind::U, Helicity::Up, &f));
        close(
            &out,
            &vector::scale(&bivector(Kind::U, Helicity::Down, &k).entries, -ONE),
            1e-14,
        );
        let out = apply_parity_one(&bivector(Kind::V, Helicity::Zero, &f));
        close(&out, &bivector(Kind::V, Helicity::Zero, &k).entries, 1e-14);

        let out = apply_charge_conj_one(&bivector(Kind::U, Helicity::Up, &k), 0.0);
        close(&out, &bivector(Kind::V, Helicity::Down, &k).entries, 1e-14);
        let out = apply_charge_conj_one(&bivector(Kind::U, Helicity::Down, &k), FRAC_PI_2);
        let target = vector::scale(
            &bivector(Kind::V, Helicity::Up, &k).entries,
            C64::new(0.0, 1.0),
        );
        close(&out, &target, 1e-14);
    }

    #[test]
    fn tables_for_several_alphas() {
        let k = kin(0.7, 1.9, 2.5, 5.0);
        for alpha in [0.0, FRAC_PI_2, 1.3, PI] {
            let rows = symmetry_table_one(&k, alpha).unwrap();
            assert_eq!(rows.len(), 36);
            let r = rows
                .iter()
                .find(|r| r.operation == Operation::CP && r.in_state == "u→")
                .unwrap();
            assert_eq!(r.out_state, "v→");
            assert!((r.phase() - C64::from_polar(1.0, alpha)).norm() < 1e-15);
            for r in rows.iter().filter(|r| r.operation == Operation::CP) {
                assert_eq!(r.in_state.chars().last(), r.out_state.chars().last());
            }
            assert!(cp_pc_anticommutator(&k, alpha) < 1e-12);
        }
    }
}
