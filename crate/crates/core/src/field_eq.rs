//! Field strengths and potentials carried by the spin-1 bivectors.
//!
//! A bivector `(χ, ψ)` is read as `ψ = E − iB`, `χ = E + iB`. The auxiliary
//! quantities of the first-order system are
//! `mξ = (E + S·p)ψ`, `mφ = p·ψ`, and the potentials are `A^μ = (φ, ξ)/(im)`.
//! Plane waves are `e^{−ip·x}`, so `∂_μ → −ip_μ`.
//!
//! All 3-vectors here are Cartesian. Blocks of a [`Bivector`] live in the
//! `S₃` weight basis and are mapped with [`spherical_to_cartesian`], under
//! which `S·p` becomes the curl operator `v ↦ i p × v`.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::algebra::{levi_civita, re, vector, ComplexMatrix, C64, I, ZERO};
use crate::kinematics::Kinematics;
use crate::spin_one::Bivector;

/// Columns are the Cartesian components of `e₊₁ = −(x̂ + iŷ)/√2`, `e₀ = ẑ`,
/// `e₋₁ = (x̂ − iŷ)/√2`. Unitary, and `T S^i_weight T† = (−iε_{ijk})`.
pub fn spherical_to_cartesian() -> ComplexMatrix {
    let r = FRAC_1_SQRT_2;
    ComplexMatrix::from_rows([
        [re(-r), ZERO, re(r)],
        [C64::new(0.0, -r), ZERO, C64::new(0.0, -r)],
        [ZERO, re(1.0), ZERO],
    ])
}

/// Cartesian `S·p`: `(S·p) v = i p × v`.
pub fn curl_operator(p: [f64; 3]) -> ComplexMatrix {
    ComplexMatrix::from_fn(3, 3, |j, k| {
        let s: f64 = (0..3).map(|i| levi_civita(i, j, k) * p[i]).sum();
        C64::new(0.0, -s)
    })
}

fn to_cartesian(block: &[C64; 3]) -> [C64; 3] {
    let v = spherical_to_cartesian().mul_vec(block);
    [v[0], v[1], v[2]]
}

fn to_weight(v: &[C64; 3]) -> [C64; 3] {
    let w = spherical_to_cartesian().adjoint().mul_vec(v);
    [w[0], w[1], w[2]]
}

/// Field strengths, auxiliary fields and potentials of one plane-wave mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSet {
    pub e_field: [C64; 3],
    pub b_field: [C64; 3],
    pub xi: [C64; 3],
    pub phi_aux: C64,
    /// `A^μ = (φ_pot, A)` with `ξ = imA`, `φ_aux = imφ_pot`.
    pub a_potential: [C64; 4],
    pub kin: Kinematics,
}

impl FieldSet {
    /// `E − iB`.
    pub fn psi(&self) -> [C64; 3] {
        std::array::from_fn(|i| self.e_field[i] - I * self.b_field[i])
    }

    /// `E + iB`.
    pub fn chi(&self) -> [C64; 3] {
        std::array::from_fn(|i| self.e_field[i] + I * self.b_field[i])
    }

    /// `(χ, ψ)` mapped back to the weight basis.
    pub fn to_bivector_blocks(&self) -> [C64; 6] {
        let c = to_weight(&self.chi());
        let p = to_weight(&self.psi());
        [c[0], c[1], c[2], p[0], p[1], p[2]]
    }

    /// `p_μ A^μ`.
    pub fn lorenz(&self) -> C64 {
        let p = self.kin.covariant_momentum();
        (0..4).map(|mu| self.a_potential[mu] * p[mu]).sum()
    }

    /// `F^{μν} = −i(p^μA^ν − p^νA^μ)`.
    pub fn field_tensor(&self) -> [[C64; 4]; 4] {
        let p = self.kin.four_momentum();
        let a = &self.a_potential;
        std::array::from_fn(|mu| std::array::from_fn(|nu| -I * (a[nu] * p[mu] - a[mu] * p[nu])))
    }
}

/// Extracts `E`, `B`, `ξ`, `φ` and `A^μ` from a bivector.
///
/// At `|p| = 0` the relation `p(p·ψ) = mpφ` is vacuous and `φ` is 0.
pub fn fields_from_bivector(b: &Bivector) -> FieldSet {
    fields_from_blocks(&b.chi_block(), &b.psi_block(), &b.kin)
}

/// Same as [`fields_from_bivector`] for arbitrary weight-basis blocks.
pub fn fields_from_blocks(chi: &[C64; 3], psi: &[C64; 3], kin: &Kinematics) -> FieldSet {
    let chi = to_cartesian(chi);
    let psi = to_cartesian(psi);
    let m = kin.mass();
    let p = kin.momentum();
    let e_field = std::array::from_fn(|i| (chi[i] + psi[i]) / 2.0);
    let b_field = std::array::from_fn(|i| (chi[i] - psi[i]) / (2.0 * I));
    let sp_psi = curl_operator(p).mul_vec(&psi);
    let xi: [C64; 3] = std::array::from_fn(|i| (psi[i] * kin.energy() + sp_psi[i]) / m);
    let phi_aux = if kin.pmag() > 0.0 {
        vector::real_dot(&p, &psi) / m
    } else {
        ZERO
    };
    let im = I * m;
    let a_potential = [phi_aux / im, xi[0] / im, xi[1] / im, xi[2] / im];
    FieldSet {
        e_field,
        b_field,
        xi,
        phi_aux,
        a_potential,
        kin: *kin,
    }
}

/// Sign of `m` in the complex-conjugate branch of the first-order system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjugateBranch {
    /// `(E−S·p)χ = −mξ`, `p(p·χ) = −mpφ`, `(E+S·p)ξ − pφ = −mχ`.
    Printed,
    /// The same relations with `m → −m`.
    MassFlipped,
}

/// Norms of the four first-order relations, each zero when satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstOrderResiduals {
    /// `(E−S·p)ξ − pφ − mψ`.
    pub psi_closure: f64,
    /// `(E−S·p)χ ± mξ`.
    pub chi_curl: f64,
    /// `p(p·χ) ± mpφ`.
    pub chi_longitudinal: f64,
    /// `(E+S·p)ξ − pφ ± mχ`.
    pub chi_closure: f64,
}

impl FirstOrderResiduals {
    pub fn max(&self) -> f64 {
        self.psi_closure
            .max(self.chi_curl)
            .max(self.chi_longitudinal)
            .max(self.chi_closure)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [
            self.psi_closure,
            self.chi_curl,
            self.chi_longitudinal,
            self.chi_closure,
        ]
    }
}

/// First-order residuals with the conjugate branch as printed.
pub fn first_order_residuals(f: &FieldSet, b: &Bivector) -> FirstOrderResiduals {
    first_order_residuals_with(f, b, ConjugateBranch::Printed)
}

/// `ξ`, `φ` are taken from `f`; `χ`, `ψ` from `b`.
pub fn first_order_residuals_with(
    f: &FieldSet,
    b: &Bivector,
    branch: ConjugateBranch,
) -> FirstOrderResiduals {
    let kin = &f.kin;
    let (e, m) = (kin.energy(), kin.mass());
    let p = kin.momentum();
    let sp = curl_operator(p);
    let chi = to_cartesian(&b.chi_block());
    let psi = to_cartesian(&b.psi_block());
    let s = match branch {
        ConjugateBranch::Printed => m,
        ConjugateBranch::MassFlipped => -m,
    };
    let sp_xi = sp.mul_vec(&f.xi);
    let sp_chi = sp.mul_vec(&chi);
    let p_chi = vector::real_dot(&p, &chi);

    let psi_closure: Vec<C64> = (0..3)
        .map(|i| f.xi[i] * e - sp_xi[i] - f.phi_aux * p[i] - psi[i] * m)
        .collect();
    let chi_curl: Vec<C64> = (0..3)
        .map(|i| chi[i] * e - sp_chi[i] + f.xi[i] * s)
        .collect();
    let chi_longitudinal: Vec<C64> = (0..3)
        .map(|i| p_chi * p[i] + f.phi_aux * (s * p[i]))
        .collect();
    let chi_closure: Vec<C64> = (0..3)
        .map(|i| f.xi[i] * e + sp_xi[i] - f.phi_aux * p[i] + chi[i] * s)
        .collect();
    FirstOrderResiduals {
        psi_closure: vector::norm(&psi_closure),
        chi_curl: vector::norm(&chi_curl),
        chi_longitudinal: vector::norm(&chi_longitudinal),
        chi_closure: vector::norm(&chi_closure),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProcaResiduals {
    /// `max_ν |∂_μF^{μν} + m²A^ν|`.
    pub first: f64,
    /// Largest deviation of `(F^{i0}, −½ε^{ijk}F^{jk})` from `(E, B)`.
    pub second: f64,
}

pub fn proca_residuals(f: &FieldSet) -> ProcaResiduals {
    let t = f.field_tensor();
    let pcov = f.kin.covariant_momentum();
    let m2 = f.kin.mass() * f.kin.mass();
    let first = (0..4)
        .map(|nu| {
            let div: C64 = (0..4).map(|mu| t[mu][nu] * pcov[mu]).sum();
            (-I * div + f.a_potential[nu] * m2).norm()
        })
        .fold(0.0, f64::max);
    let mut second: f64 = 0.0;
    for i in 0..3 {
        let e = t[i + 1][0];
        let mut b = ZERO;
        for j in 0..3 {
            for k in 0..3 {
                b -= t[j + 1][k + 1] * (0.5 * levi_civita(i, j, k));
            }
        }
        second = second
            .max((e - f.e_field[i]).norm())
            .max((b - f.b_field[i]).norm());
    }
    ProcaResiduals { first, second }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spin1;
    use crate::spin_half::Kind;
    use crate::spin_one::{bivector, Helicity};

    fn kin(m: f64, p: f64, t: f64, f: f64) -> Kinematics {
        Kinematics::new(m, p, t, f).unwrap()
    }

    #[test]
    fn cartesian_map_intertwines_generators() {
        let t = spherical_to_cartesian();
        assert!((&(&t.adjoint() * &t) - &ComplexMatrix::identity(3)).max_abs() < 1e-15);
        let axes = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        for (i, axis) in axes.into_iter().enumerate() {
            let conj = &(&t * &spin1(i + 1).unwrap()) * &t.adjoint();
            assert!((&conj - &curl_operator(axis)).max_abs() < 1e-15);
        }
    }

    #[test]
    fn curl_operator_is_i_cross() {
        let p = [0.3, -1.0, 2.0];
        let v = [C64::new(1.0, 0.5), C64::new(-0.2, 0.0), C64::new(0.0, 1.0)];
        let cross = [
            v[2] * p[1] - v[1] * p[2],
            v[0] * p[2] - v[2] * p[0],
            v[1] * p[0] - v[0] * p[1],
        ];
        let got = curl_operator(p).mul_vec(&v);
        for i in 0..3 {
            assert!((got[i] - I * cross[i]).norm() < 1e-15);
        }
    }

    #[test]
    fn rest_frame_fields() {
        let k = kin(1.0, 0.0, 0.3, 0.2);
        let b = bivector(Kind::U, Helicity::Up, &k);
        let f = fields_from_bivector(&b);
        assert_eq!(f.phi_aux, ZERO);
        let chi = to_cartesian(&crate::spin_one::three_spinor(Helicity::Up, &k).entries);
        for ((xi, c), b) in f.xi.iter().zip(chi).zip(f.b_field) {
            assert!((xi - c * FRAC_1_SQRT_2).norm() < 1e-15);
            assert!(b.norm() < 1e-16);
        }
        let pr = proca_residuals(&f);
        assert!(pr.first < 1e-12 && pr.second < 1e-12);
    }

    #[test]
    fn transverse_modes_have_no_scalar_potential() {
        let k = kin(1.0, 0.75, 1.2, 0.4);
        for h in [Helicity::Up, Helicity::Down] {
            let f = fields_from_bivector(&bivector(Kind::U, h, &k));
            assert!(f.phi_aux.norm() < 1e-15);
        }
    }

    #[test]
    fn longitudinal_scalar_potential() {
        // T χ→ = p̂, ψ = χ→/√2, so φ = p/(√2 m) = 0.75/√2 at m = 1.
        let k = kin(1.0, 0.75, 1.2, 0.4);
        let f = fields_from_bivector(&bivector(Kind::U, Helicity::Zero, &k));
        assert!((f.phi_aux - re(0.75 * FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((f.phi_aux - re(0.530_330_085_889_910_6)).norm() < 1e-15);
    }

    #[test]
    fn u_modes_satisfy_closure_proca_and_mass_flipped_branch() {
        let k = kin(1.0, 0.75, 0.9, 2.0);
        for h in Helicity::ALL {
            let b = bivector(Kind::U, h, &k);
            let f = fields_from_bivector(&b);
            let printed = first_order_residuals(&f, &b);
            assert!(printed.psi_closure < 1e-14);
            assert!(printed.chi_curl > 0.1 && printed.chi_closure > 0.1);
            let flipped = first_order_residuals_with(&f, &b, ConjugateBranch::MassFlipped);
            assert!(flipped.max() < 1e-14, "{h:?} {flipped:?}");
            let pr = proca_residuals(&f);
            assert!(pr.first < 1e-14 && pr.second < 1e-14, "{h:?} {pr:?}");
            assert!(f.lorenz().norm() < 1e-15);
        }
    }

    #[test]
    fn v_modes_satisfy_printed_branch() {
        let k = kin(1.0, 0.75, 0.9, 2.0);
        for h in Helicity::ALL {
            let b = bivector(Kind::V, h, &k);
            let f = fields_from_bivector(&b);
            assert!(first_order_residuals(&f, &b).max() < 1e-14);
            assert!(proca_residuals(&f).first < 1e-14);
            assert!(proca_residuals(&f).second > 0.1);
        }
    }

    #[test]
    fn zero_bivector_has_zero_residuals() {
        let k = kin(1.0, 0.75, 0.9, 2.0);
        let mut b = bivector(Kind::U, Helicity::Up, &k);
        b.entries = [ZERO; 6];
        let f = fields_from_bivector(&b);
        assert_eq!(first_order_residuals(&f, &b).max(), 0.0);
    }

    #[test]
    fn zeroed_psi_block_breaks_closure() {
        let k = kin(1.0, 0.75, 0.9, 2.0);
        let b = bivector(Kind::U, Helicity::Up, &k);
        let f = fields_from_bivector(&b);
        let mut z = b;
        for e in &mut z.entries[3..] {
            *e = ZERO;
        }
        let r = first_order_residuals(&f, &z);
        let expected = k.mass() * vector::norm(&b.psi_block());
        assert!((r.psi_closure - expected).abs() < 1e-14);
    }

    #[test]
    fn scaled_potential_breaks_second_proca() {
        let k = kin(1.0, 0.75, 0.9, 2.0);
        let mut f = fields_from_bivector(&bivector(Kind::U, Helicity::Up, &k));
        for a in &mut f.a_potential {
            *a *= 2.0;
        }
        assert!(proca_residuals(&f).second > 0.1);
    }

    #[test]
    fn blocks_round_trip() {
        let k = kin(0.4, 3.0, 2.0, 1.0);
        for b in crate::spin_one::helicity_states(&k) {
            let back = fields_from_bivector(&b).to_bivector_blocks();
            assert!(vector::distance(&back, &b.entries) < 1e-13);
        }
    }
}
