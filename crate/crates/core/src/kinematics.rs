//! On-shell momentum parametrization `(m, |p|, θ, φ)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// On-shell kinematics of a massive particle.
///
/// `phi` is stored as given. Half-angle phases `e^{±iφ/2}` change sign under
/// `φ → φ + 2π`, so reducing the azimuth would flip spinor signs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Kinematics {
    mass: f64,
    pmag: f64,
    theta: f64,
    phi: f64,
    energy: f64,
}

impl Kinematics {
    pub fn new(mass: f64, pmag: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        if !(pmag.is_finite() && pmag >= 0.0) {
            return Err(Error::NegativeMomentum(pmag));
        }
        if !(theta.is_finite() && (0.0..=PI).contains(&theta)) {
            return Err(Error::ThetaOutOfRange(theta));
        }
        if !phi.is_finite() {
            return Err(Error::NonFiniteAzimuth(phi));
        }
        Ok(Self {
            mass,
            pmag,
            theta,
            phi,
            energy: mass.hypot(pmag),
        })
    }

    /// Rest frame with the quantization axis along `(θ, φ)`.
    pub fn at_rest(mass: f64, theta: f64, phi: f64) -> Result<Self> {
        Self::new(mass, 0.0, theta, phi)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn pmag(&self) -> f64 {
        self.pmag
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// `p̂ = (sinθ cosφ, sinθ sinφ, cosθ)`.
    ///
    /// At `|p| = 0` the direction is still the one named by the angles, so
    /// the rest-frame helicity states stay eigenstates of `σ·p̂`.
    pub fn unit_momentum(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// Contravariant 3-momentum `p^i`.
    pub fn momentum(&self) -> [f64; 3] {
        self.unit_momentum().map(|n| n * self.pmag)
    }

    /// Contravariant 4-momentum `p^μ = (E, p)`.
    pub fn four_momentum(&self) -> [f64; 4] {
        let p = self.momentum();
        [self.energy, p[0], p[1], p[2]]
    }

    /// Covariant 4-momentum `p_μ = (E, −p)`.
    pub fn covariant_momentum(&self) -> [f64; 4] {
        let p = self.momentum();
        [self.energy, -p[0], -p[1], -p[2]]
    }

    /// `E + |p|`, the boost weight appearing in every helicity solution.
    pub fn energy_plus_p(&self) -> f64 {
        self.energy + self.pmag
    }

    /// `E − |p|` evaluated as `m²/(E + |p|)` so it keeps full relative
    /// precision when `|p| ≫ m`.
    pub fn energy_minus_p(&self) -> f64 {
        self.mass * self.mass / self.energy_plus_p()
    }

    /// `p^μ p_μ = (E − |p|)(E + |p|)`, which equals `m²` on shell.
    pub fn invariant_mass_sq(&self) -> f64 {
        self.energy_minus_p() * self.energy_plus_p()
    }

    /// `p → −p`: `θ → π − θ`, `φ → φ + π` (not reduced).
    pub fn parity_flip(&self) -> Self {
        Self {
            theta: PI - self.theta,
            phi: self.phi + PI,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    #[test]
    fn energy_examples() {
        assert_eq!(Kinematics::new(1.0, 0.0, 0.0, 0.0).unwrap().energy(), 1.0);
        assert_eq!(
            Kinematics::new(1.0, 0.75, FRAC_PI_2, 0.0).unwrap().energy(),
            1.25
        );
        assert_eq!(Kinematics::new(2.0, 1.5, 1.0, 2.0).unwrap().energy(), 2.5);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Kinematics::new(0.0, 1.0, 0.0, 0.0),
            Err(Error::NonPositiveMass(0.0))
        );
        assert!(matches!(
            Kinematics::new(-1.0, 1.0, 0.0, 0.0),
            Err(Error::NonPositiveMass(_))
        ));
        assert!(matches!(
            Kinematics::new(1.0, -0.1, 0.0, 0.0),
            Err(Error::NegativeMomentum(_))
        ));
        assert!(matches!(
            Kinematics::new(1.0, 1.0, -0.01, 0.0),
            Err(Error::ThetaOutOfRange(_))
        ));
        assert!(matches!(
            Kinematics::new(1.0, 1.0, PI + 1e-9, 0.0),
            Err(Error::ThetaOutOfRange(_))
        ));
        assert!(matches!(
            Kinematics::new(1.0, 1.0, 0.5, f64::NAN),
            Err(Error::NonFiniteAzimuth(_))
        ));
    }

    #[test]
    fn parity_flip_examples() {
        let k = Kinematics::new(1.0, 0.5, 0.0, 0.0).unwrap().parity_flip();
        assert_eq!((k.theta(), k.phi()), (PI, PI));
        assert!((k.unit_momentum()[2] + 1.0).abs() < 1e-15);

        let k = Kinematics::new(1.0, 0.5, FRAC_PI_3, FRAC_PI_2)
            .unwrap()
            .parity_flip();
        assert!((k.theta() - 2.0 * FRAC_PI_3).abs() < 1e-15);
        assert!((k.phi() - 3.0 * FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn double_flip_keeps_direction_and_winds_azimuth() {
        let k = Kinematics::new(1.3, 2.0, 0.4, 5.9).unwrap();
        let kk = k.parity_flip().parity_flip();
        assert!((kk.phi() - (k.phi() + 2.0 * PI)).abs() < 1e-14);
        for (a, b) in kk.unit_momentum().iter().zip(k.unit_momentum()) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn invariant_mass_is_accurate_for_ultrarelativistic_momenta() {
        let k = Kinematics::new(0.1, 10.0, 1.0, 1.0).unwrap();
        let m2 = 0.1f64 * 0.1;
        assert!((k.invariant_mass_sq() - m2).abs() < 1e-16 * 4.0);
    }
}
