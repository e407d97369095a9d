//! Seeded batch verification over random kinematics.
//!
//! Kinematics are drawn as: mass log-uniform in `mass_range`, `|p|` uniform
//! in `pmag_range`, `cos θ` uniform in `[−1, 1]`, `φ` uniform in `[0, 2π)`,
//! all from a ChaCha8 stream seeded with `seed`. The report is a pure
//! function of the config, so identical configs give byte-identical JSON.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    bmw_gamma, dirac_gamma, dirac_slash, helicity_matrix_half, helicity_matrix_one, levi_civita,
    metric, pauli, re, spin1, vector, wigner_theta_half, wigner_theta_one, ComplexMatrix, C64, I,
};
use crate::error::{Error, Result};
use crate::field_eq::{
    fields_from_bivector, fields_from_blocks, first_order_residuals, first_order_residuals_with,
    proca_residuals, ConjugateBranch,
};
use crate::kinematics::Kinematics;
use crate::phase::{self, Operation, TableRow};
use crate::spin_half::{self, Kind};
use crate::spin_one;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol_linear: f64,
    /// Applied to residuals divided by their quadratic scale (`E²`, `m²`).
    pub tol_quadratic: f64,
    pub mass_range: [f64; 2],
    pub pmag_range: [f64; 2],
    /// Spin-1 charge-conjugation phase.
    pub alpha: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 1000,
            tol_linear: 1e-11,
            tol_quadratic: 1e-10,
            mass_range: [0.1, 10.0],
            pmag_range: [0.0, 10.0],
            alpha: 0.0,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.samples == 0 {
            return bad("samples must be positive".into());
        }
        let [m0, m1] = self.mass_range;
        if !(m0 > 0.0 && m0 <= m1 && m1.is_finite()) {
            return bad(format!(
                "mass_range [{m0}, {m1}] must satisfy 0 < lo <= hi < ∞"
            ));
        }
        let [p0, p1] = self.pmag_range;
        if !(p0 >= 0.0 && p0 <= p1 && p1.is_finite()) {
            return bad(format!(
                "pmag_range [{p0}, {p1}] must satisfy 0 <= lo <= hi < ∞"
            ));
        }
        if !(self.tol_linear > 0.0 && self.tol_quadratic > 0.0) {
            return bad("tolerances must be positive".into());
        }
        if !self.alpha.is_finite() {
            return bad("alpha must be finite".into());
        }
        Ok(())
    }
}

/// The sample stream used by [`run_suite`].
pub fn sample_kinematics(config: &SuiteConfig) -> Result<Vec<Kinematics>> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let [m0, m1] = config.mass_range;
    let [p0, p1] = config.pmag_range;
    (0..config.samples)
        .map(|_| {
            let m = rng.gen_range(m0.ln()..=m1.ln()).exp().clamp(m0, m1);
            let p = rng.gen_range(p0..=p1);
            let cos_theta: f64 = rng.gen_range(-1.0..=1.0);
            let phi = rng.gen_range(0.0..TAU);
            Kinematics::new(m, p, cos_theta.acos(), phi)
        })
        .collect()
}

/// Where a relation comes from: stated in closed form, or established by
/// the numerical oracles in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    DerivedOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tol {
    Linear,
    Quadratic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scale {
    One,
    Energy,
    EnergySq,
    MassSq,
    EnergyOverMass,
}

impl Scale {
    fn label(self) -> &'static str {
        match self {
            Scale::One => "1",
            Scale::Energy => "E",
            Scale::EnergySq => "E^2",
            Scale::MassSq => "m^2",
            Scale::EnergyOverMass => "E/m",
        }
    }

    fn of(self, k: &Kinematics) -> f64 {
        match self {
            Scale::One => 1.0,
            Scale::Energy => k.energy(),
            Scale::EnergySq => k.energy() * k.energy(),
            Scale::MassSq => k.mass() * k.mass(),
            Scale::EnergyOverMass => k.energy() / k.mass(),
        }
    }
}

type Eval = fn(&Kinematics, f64) -> f64;

struct Def {
    id: &'static str,
    relation: &'static str,
    source: Source,
    tol: Tol,
    scale: Scale,
    sampled: bool,
    eval: Eval,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub relation: String,
    pub source: Source,
    pub samples: usize,
    /// Largest residual divided by `scale`.
    pub max_residual: f64,
    pub scale: String,
    pub tolerance: f64,
    pub pass: bool,
}

/// A relation taken as stated and measured, whether or not it holds.
/// Findings do not affect the pass/fail status of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub finding_id: String,
    pub relation: String,
    pub samples: usize,
    pub max_deviation: f64,
    pub scale: String,
    pub tolerance: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tables {
    pub kinematics: Kinematics,
    pub alpha: f64,
    pub spin_half: Vec<TableRow>,
    pub spin_one: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub findings_holding: usize,
    pub all_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: SuiteConfig,
    pub checks: Vec<CheckRecord>,
    pub findings: Vec<Finding>,
    pub tables: Tables,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn finding(&self, id: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.finding_id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Markdown summary; `wall_time` is shown when given.
    pub fn to_markdown(&self, wall_time: Option<Duration>) -> String {
        let mut s = String::new();
        let c = &self.config;
        let _ = writeln!(s, "# Verification report\n");
        let _ = writeln!(
            s,
            "tool {} · schema {} · seed {} · samples {} · α = {}",
            self.tool_version, self.schema_version, c.seed, c.samples, c.alpha
        );
        if let Some(t) = wall_time {
            let _ = writeln!(s, "\nwall time: {:.3} s", t.as_secs_f64());
        }
        let _ = writeln!(
            s,
            "\n**{} / {} checks pass**, {} of {} findings hold.\n",
            self.summary.passed,
            self.summary.checks,
            self.summary.findings_holding,
            self.findings.len()
        );
        let _ = writeln!(s, "## Checks\n");
        let _ = writeln!(
            s,
            "| check | relation | source | samples | max residual / scale | tol | pass |"
        );
        let _ = writeln!(s, "|---|---|---|---|---|---|---|");
        for r in &self.checks {
            let _ = writeln!(
                s,
                "| `{}` | {} | {} | {} | {:.3e} / {} | {:.0e} | {} |",
                r.check_id,
                md_escape(&r.relation),
                source_tag(r.source),
                r.samples,
                r.max_residual,
                r.scale,
                r.tolerance,
                if r.pass { "yes" } else { "**NO**" }
            );
        }
        let _ = writeln!(s, "\n## Findings\n");
        let _ = writeln!(
            s,
            "| finding | relation | samples | max deviation / scale | holds |"
        );
        let _ = writeln!(s, "|---|---|---|---|---|");
        for f in &self.findings {
            let _ = writeln!(
                s,
                "| `{}` | {} | {} | {:.3e} / {} | {} |",
                f.finding_id,
                md_escape(&f.relation),
                f.samples,
                f.max_deviation,
                f.scale,
                if f.holds { "yes" } else { "no" }
            );
        }
        let k = &self.tables.kinematics;
        let _ = writeln!(
            s,
            "\n## Symmetry tables\n\nm = {}, |p| = {}, θ = {:.6}, φ = {:.6}, α = {}\n",
            k.mass(),
            k.pmag(),
            k.theta(),
            k.phi(),
            self.tables.alpha
        );
        for (name, rows) in [
            ("spin 1/2", &self.tables.spin_half),
            ("spin 1", &self.tables.spin_one),
        ] {
            let _ = writeln!(s, "### {name}\n");
            let _ = writeln!(s, "| op | in | out | phase | snap error |");
            let _ = writeln!(s, "|---|---|---|---|---|");
            for r in rows.iter() {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {:.1e} |",
                    r.operation,
                    r.in_state,
                    r.out_state,
                    format_phase(r.phase()),
                    r.snap_error
                );
            }
            s.push('\n');
        }
        s
    }
}

fn source_tag(s: Source) -> &'static str {
    match s {
        Source::ClosedForm => "closed-form",
        Source::DerivedOracle => "derived-oracle",
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Renders a snapped phase as `1`, `-i`, `0.5+0.8i`, ...
pub fn format_phase(c: C64) -> String {
    let clean = |x: f64| if x.abs() < 1e-15 { 0.0 } else { x };
    let (a, b) = (clean(c.re), clean(c.im));
    match (a == 0.0, b == 0.0) {
        (true, true) => "0".into(),
        (false, true) => format!("{a}"),
        (true, false) if b == 1.0 => "i".into(),
        (true, false) if b == -1.0 => "-i".into(),
        (true, false) => format!("{b}i"),
        (false, false) => format!("{a:.6}{:+.6}i", b),
    }
}

/// Kinematics at which the report's symmetry tables are printed.
pub fn reference_kinematics() -> Kinematics {
    Kinematics::new(1.0, 0.75, PI / 3.0, PI / 5.0).expect("valid reference kinematics")
}

pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let samples = sample_kinematics(config)?;
    let checks: Vec<CheckRecord> = check_defs()
        .iter()
        .map(|d| {
            let (n, worst) = evaluate(d, &samples, config.alpha);
            let tolerance = tolerance(d.tol, config);
            CheckRecord {
                check_id: d.id.into(),
                relation: d.relation.into(),
                source: d.source,
                samples: n,
                max_residual: worst,
                scale: d.scale.label().into(),
                tolerance,
                pass: worst < tolerance,
            }
        })
        .collect();
    let findings: Vec<Finding> = finding_defs()
        .iter()
        .map(|d| {
            let (n, worst) = evaluate(d, &samples, config.alpha);
            let tolerance = tolerance(d.tol, config);
            Finding {
                finding_id: d.id.into(),
                relation: d.relation.into(),
                samples: n,
                max_deviation: worst,
                scale: d.scale.label().into(),
                tolerance,
                holds: worst < tolerance,
            }
        })
        .collect();
    let reference = reference_kinematics();
    let tables = Tables {
        kinematics: reference,
        alpha: config.alpha,
        spin_half: spin_half::symmetry_rows(
            &reference,
            &Operation::ALL,
            spin_half::TABLE_TOLERANCE,
        )
        .unwrap_or_default(),
        spin_one: spin_one::symmetry_rows(
            &reference,
            config.alpha,
            &Operation::ALL,
            spin_half::TABLE_TOLERANCE,
        )
        .unwrap_or_default(),
    };
    let passed = checks.iter().filter(|c| c.pass).count();
    let summary = Summary {
        checks: checks.len(),
        passed,
        failed: checks.len() - passed,
        findings_holding: findings.iter().filter(|f| f.holds).count(),
        all_pass: passed == checks.len(),
    };
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        checks,
        findings,
        tables,
        summary,
    })
}

fn tolerance(t: Tol, config: &SuiteConfig) -> f64 {
    match t {
        Tol::Linear => config.tol_linear,
        Tol::Quadratic => config.tol_quadratic,
    }
}

/// Non-finite residuals are reported as `f64::MAX` so the JSON stays
/// numeric and the check fails.
fn evaluate(d: &Def, samples: &[Kinematics], alpha: f64) -> (usize, f64) {
    let used = if d.sampled { samples } else { &samples[..1] };
    let worst = used.iter().fold(0.0_f64, |acc, k| {
        let r = (d.eval)(k, alpha) / d.scale.of(k);
        if r.is_finite() {
            acc.max(r)
        } else {
            f64::MAX
        }
    });
    (used.len(), worst)
}

fn def(
    id: &'static str,
    relation: &'static str,
    source: Source,
    tol: Tol,
    scale: Scale,
    sampled: bool,
    eval: Eval,
) -> Def {
    Def {
        id,
        relation,
        source,
        tol,
        scale,
        sampled,
        eval,
    }
}

fn check_defs() -> Vec<Def> {
    use Scale::*;
    use Source::*;
    use Tol::*;
    vec![
        // kinematics
        def(
            "kin.on_shell",
            "E² − p² = m²",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                let (e, p, m) = (k.energy(), k.pmag(), k.mass());
                (e * e - p * p - m * m).abs()
            },
        ),
        def(
            "kin.invariant_mass",
            "p^μ p_μ = m²",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                let p = k.four_momentum();
                let pc = k.covariant_momentum();
                let pp: f64 = (0..4).map(|mu| p[mu] * pc[mu]).sum();
                (pp - k.mass() * k.mass()).abs()
            },
        ),
        def(
            "kin.direction",
            "p = |p| p̂, |p̂| = 1",
            ClosedForm,
            Linear,
            Energy,
            true,
            |k, _| {
                let n = k.unit_momentum();
                let p = k.momentum();
                let unit = (n.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs();
                let along = (0..3)
                    .map(|i| (p[i] - k.pmag() * n[i]).abs())
                    .fold(0.0, f64::max);
                unit * k.energy() + along
            },
        ),
        def(
            "kin.parity_flip",
            "P: p → −p, E → E",
            ClosedForm,
            Linear,
            Energy,
            true,
            |k, _| {
                let f = k.parity_flip();
                let (a, b) = (k.momentum(), f.momentum());
                let mom = (0..3).map(|i| (a[i] + b[i]).abs()).fold(0.0, f64::max);
                mom + (f.energy() - k.energy()).abs()
            },
        ),
        // algebra
        def(
            "algebra.pauli_anticommutator",
            "{σ^i, σ^j} = 2δ^{ij}",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                pairs(|i, j| {
                    let d = if i == j { 2.0 } else { 0.0 };
                    (&pauli(i).unwrap().anticommutator(&pauli(j).unwrap())
                        - &ComplexMatrix::identity(2).scale(re(d)))
                        .max_abs()
                })
            },
        ),
        def(
            "algebra.pauli_commutator",
            "[σ^i, σ^j] = 2iε^{ijk}σ^k",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                pairs(|i, j| {
                    let rhs = levi_sum(i, j, |k| pauli(k).unwrap().scale(2.0 * I));
                    (&pauli(i).unwrap().commutator(&pauli(j).unwrap()) - &rhs).max_abs()
                })
            },
        ),
        def(
            "algebra.spin1_commutator",
            "[S^i, S^j] = iε^{ijk}S^k",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                pairs(|i, j| {
                    let rhs = levi_sum(i, j, |k| spin1(k).unwrap().scale(I));
                    (&spin1(i).unwrap().commutator(&spin1(j).unwrap()) - &rhs).max_abs()
                })
            },
        ),
        def(
            "algebra.spin1_casimir",
            "S·S = 2",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let sum = (1..=3).fold(ComplexMatrix::zeros(3, 3), |acc, i| {
                    let s = spin1(i).unwrap();
                    &acc + &(&s * &s)
                });
                (&sum - &ComplexMatrix::identity(3).scale(re(2.0))).max_abs()
            },
        ),
        def(
            "algebra.spin_hermitian",
            "σ^i, S^i Hermitian, S^3 = diag(1, 0, −1)",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let herm = (1..=3)
                    .map(|i| {
                        pauli(i)
                            .unwrap()
                            .hermiticity_defect()
                            .max(spin1(i).unwrap().hermiticity_defect())
                    })
                    .fold(0.0, f64::max);
                let s3 = ComplexMatrix::diagonal(&[re(1.0), re(0.0), re(-1.0)]);
                herm.max((&spin1(3).unwrap() - &s3).max_abs())
            },
        ),
        def(
            "algebra.clifford",
            "{γ^μ, γ^ν} = 2η^{μν}",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let mut worst: f64 = 0.0;
                for mu in 0..4 {
                    for nu in 0..4 {
                        let d = if mu == nu { 2.0 * metric(mu) } else { 0.0 };
                        let ac = dirac_gamma(mu)
                            .unwrap()
                            .anticommutator(&dirac_gamma(nu).unwrap());
                        worst =
                            worst.max((&ac - &ComplexMatrix::identity(4).scale(re(d))).max_abs());
                    }
                }
                worst
            },
        ),
        def(
            "algebra.gamma_adjoint",
            "γ⁰γ^μγ⁰ = γ^μ†",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let g0 = dirac_gamma(0).unwrap();
                (0..4)
                    .map(|mu| {
                        let g = dirac_gamma(mu).unwrap();
                        (&(&(&g0 * &g) * &g0) - &g.adjoint()).max_abs()
                    })
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "algebra.wigner_theta_half",
            "Θ σ Θ⁻¹ = −σ*",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let t = wigner_theta_half();
                (1..=3)
                    .map(|i| {
                        let s = pauli(i).unwrap();
                        (&(&(&t * &s) * &t.adjoint()) + &s.conj()).max_abs()
                    })
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "algebra.wigner_theta_one",
            "Θ S Θ⁻¹ = −S*",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let t = wigner_theta_one();
                (1..=3)
                    .map(|i| {
                        let s = spin1(i).unwrap();
                        (&(&(&t * &s) * &t.adjoint()) + &s.conj()).max_abs()
                    })
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "algebra.bmw_symmetric",
            "γ^{μν} = γ^{νμ}, γ^{00} = ((0, I), (I, 0))",
            ClosedForm,
            Linear,
            One,
            false,
            |_, _| {
                let mut worst: f64 = 0.0;
                for mu in 0..4 {
                    for nu in 0..4 {
                        let d = &bmw_gamma(mu, nu).unwrap() - &bmw_gamma(nu, mu).unwrap();
                        worst = worst.max(d.max_abs());
                    }
                }
                let z = ComplexMatrix::zeros(3, 3);
                let one = ComplexMatrix::identity(3);
                let g00 = ComplexMatrix::block2x2(&z, &one, &one, &z).unwrap();
                worst.max((&bmw_gamma(0, 0).unwrap() - &g00).max_abs())
            },
        ),
        def(
            "algebra.slash_square",
            "(γ^μ p_μ)² = p^μ p_μ",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                let s = dirac_slash(k);
                (&(&s * &s) - &ComplexMatrix::identity(4).scale(re(k.invariant_mass_sq())))
                    .max_abs()
            },
        ),
        def(
            "algebra.helicity_operators",
            "(σ·p̂)² = 1, (S·p̂)³ = S·p̂",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                let h = helicity_matrix_half(k);
                let s = helicity_matrix_one(k);
                let a = (&(&h * &h) - &ComplexMatrix::identity(2)).max_abs();
                let b = (&(&(&s * &s) * &s) - &s).max_abs();
                a.max(b)
                    .max(h.hermiticity_defect())
                    .max(s.hermiticity_defect())
            },
        ),
        def(
            "algebra.bmw_contraction_pseudo_hermitian",
            "γ^{00}(γ^{μν}p_μp_ν)†γ^{00} = γ^{μν}p_μp_ν",
            DerivedOracle,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                let g00 = bmw_gamma(0, 0).unwrap();
                let m = spin_one::bmw_contraction(k);
                (&(&(&g00 * &m.adjoint()) * &g00) - &m).max_abs()
            },
        ),
        // spin 1/2
        def(
            "half.helicity_eigen",
            "σ·p̂ φ_h = 2h φ_h",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                let m = helicity_matrix_half(k);
                spin_half::Helicity::BOTH
                    .into_iter()
                    .map(|h| {
                        let phi = spin_half::two_spinor(h, k).entries;
                        vector::distance(
                            &m.mul_vec(&phi),
                            &vector::scale(&phi, re(2.0 * h.value())),
                        )
                    })
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "half.two_spinor_orthonormal",
            "φ_h†φ_h' = δ_{hh'}",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                let v: Vec<Vec<C64>> = spin_half::Helicity::BOTH
                    .into_iter()
                    .map(|h| spin_half::two_spinor(h, k).entries.to_vec())
                    .collect();
                gram_defect(&v, &[1.0, 1.0], vector::inner)
            },
        ),
        def(
            "half.dirac_u",
            "(γ^μp_μ − m) u_h = 0",
            ClosedForm,
            Linear,
            Energy,
            true,
            |k, _| dirac_max(k, Kind::U, false),
        ),
        def(
            "half.dirac_v",
            "(γ^μp_μ + m) v_h = 0",
            ClosedForm,
            Linear,
            Energy,
            true,
            |k, _| dirac_max(k, Kind::V, false),
        ),
        def(
            "half.dirac_parity_basis",
            "(γ^μp_μ ∓ m) w_σ = 0 for parity-basis u_σ, v_σ",
            ClosedForm,
            Linear,
            Energy,
            true,
            |k, _| dirac_max(k, Kind::U, true).max(dirac_max(k, Kind::V, true)),
        ),
        def(
            "half.bar_norms",
            "ūu = 1, v̄v = −1",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                spin_half::helicity_states(k)
                    .iter()
                    .chain(spin_half::parity_states(k).iter())
                    .map(|s| (s.bar_norm() - s.kind.sign()).abs())
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "half.bar_orthogonality",
            "ψ̄_a ψ_b = ±δ_{ab} over u↑, u↓, v↑, v↓",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| {
                let v: Vec<Vec<C64>> = spin_half::helicity_states(k)
                    .iter()
                    .map(|s| s.entries.to_vec())
                    .collect();
                gram_defect(&v, &[1.0, 1.0, -1.0, -1.0], |a, b| {
                    spin_half::bar_product(&a.try_into().unwrap(), &b.try_into().unwrap())
                })
            },
        ),
        def(
            "half.closed_form_factorization",
            "A = (σ·a) diag(1, E/m), B = (σ·a) diag(0, −p/m)",
            DerivedOracle,
            Linear,
            EnergyOverMass,
            true,
            |k, _| {
                let bc = spin_half::basis_change(k).unwrap();
                let s = bc.sigma_a();
                let (e, m, p) = (k.energy(), k.mass(), k.pmag());
                let a = &s * &ComplexMatrix::diagonal(&[re(1.0), re(e / m)]);
                let b = &s * &ComplexMatrix::diagonal(&[re(0.0), re(-p / m)]);
                (&a - &bc.a_matrix)
                    .max_abs()
                    .max((&b - &bc.b_matrix).max_abs())
            },
        ),
        def(
            "half.pseudo_unitarity",
            "A†A − B†B = I",
            DerivedOracle,
            Linear,
            EnergyOverMass,
            true,
            |k, _| {
                spin_half::basis_change(k)
                    .unwrap()
                    .pseudo_unitarity_defect()
            },
        ),
        def(
            "half.expansion_reconstruction",
            "Σ_λ Ĉ_{σλ} w_λ = w_σ (linear solve)",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| spin_half::expansion(k).unwrap().reconstruction_error,
        ),
        def(
            "half.expansion_oracle_form",
            "Ĉ = diag(conj(σ·a), conj(σ·a))",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| {
                let ex = spin_half::expansion(k).unwrap();
                let s = spin_half::basis_change(k).unwrap().sigma_a().conj();
                let z = ComplexMatrix::zeros(2, 2);
                let expected = ComplexMatrix::block2x2(&s, &z, &z, &s).unwrap();
                (&ex.coefficients - &expected).max_abs()
            },
        ),
        def(
            "half.expansion_oracle_unitary",
            "Ĉ†Ĉ = I",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| spin_half::expansion(k).unwrap().oracle_unitarity_defect,
        ),
        def(
            "half.table_P",
            "P: u↑ → −i u↓, u↓ → −i u↑, v↑ → i v↓, v↓ → i v↑",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| table_half(k, Operation::P),
        ),
        def(
            "half.table_C",
            "C: u↑ → −v↓, u↓ → v↑, v↑ → u↓, v↓ → −u↑",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| table_half(k, Operation::C),
        ),
        def(
            "half.table_CP",
            "CP: u↑ → i v↑, u↓ → −i v↓, v↑ → i u↑, v↓ → −i u↓",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| table_half(k, Operation::CP),
        ),
        def(
            "half.table_PC",
            "PC = −CP on every state",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| table_half(k, Operation::PC),
        ),
        def(
            "half.table_PP",
            "P² = −1 (azimuth wound by 2π)",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| table_half(k, Operation::PP),
        ),
        def(
            "half.table_CC",
            "C² = +1",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| table_half(k, Operation::CC),
        ),
        def(
            "half.cp_pc_anticommute",
            "CP s + PC s = 0",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| spin_half::cp_pc_anticommutator(k),
        ),
        // spin 1
        def(
            "one.helicity_eigen",
            "S·p̂ χ_h = h χ_h",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                let m = helicity_matrix_one(k);
                spin_one::Helicity::ALL
                    .into_iter()
                    .map(|h| {
                        let chi = spin_one::three_spinor(h, k).entries;
                        vector::distance(&m.mul_vec(&chi), &vector::scale(&chi, re(h.value())))
                    })
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "one.chi_orthonormal",
            "χ_h†χ_h' = δ_{hh'}",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                let v: Vec<Vec<C64>> = spin_one::Helicity::ALL
                    .into_iter()
                    .map(|h| spin_one::three_spinor(h, k).entries.to_vec())
                    .collect();
                gram_defect(&v, &[1.0; 3], vector::inner)
            },
        ),
        def(
            "one.bar_norms",
            "ū_1 u_1 = 1, v̄_1 v_1 = −1 (γ^{00} norm)",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                spin_one::helicity_states(k)
                    .iter()
                    .map(|b| (b.bar_norm() - b.kind.sign()).abs())
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "one.bar_orthogonality",
            "b̄_a b_b = ±δ_{ab} over the six bivectors",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, _| {
                let g00 = bmw_gamma(0, 0).unwrap();
                let v: Vec<Vec<C64>> = spin_one::helicity_states(k)
                    .iter()
                    .map(|b| b.entries.to_vec())
                    .collect();
                gram_defect(&v, &[1.0, 1.0, 1.0, -1.0, -1.0, -1.0], |a, b| {
                    vector::inner(a, &g00.mul_vec(b))
                })
            },
        ),
        def(
            "one.tucker_hammer_u",
            "(γ^{μν}p_μp_ν + p² − 2m²) u_{1,h} = 0",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| bivector_max(&spin_one::tucker_hammer_matrix(k), k, Kind::U),
        ),
        def(
            "one.weinberg_u",
            "Γ u_{1,h} = 0",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| bivector_max(&spin_one::weinberg_matrix(k), k, Kind::U),
        ),
        def(
            "one.mass_flipped_v",
            "(γ^{μν}p_μp_ν + m²) v_{1,h} = 0",
            DerivedOracle,
            Quadratic,
            EnergySq,
            true,
            |k, _| bivector_max(&spin_one::mass_flipped_operator(k), k, Kind::V),
        ),
        def(
            "one.tucker_hammer_equals_bmw",
            "closed-form TH = γ^{μν}p_μp_ν + p² − 2m² (entrywise)",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                (&spin_one::tucker_hammer_matrix(k) - &spin_one::tucker_hammer_from_bmw(k))
                    .max_abs()
            },
        ),
        def(
            "one.weinberg_equals_tucker_hammer",
            "Γ = TH on shell",
            ClosedForm,
            Quadratic,
            MassSq,
            true,
            |k, _| (&spin_one::weinberg_matrix(k) - &spin_one::tucker_hammer_matrix(k)).max_abs(),
        ),
        def(
            "one.table_P",
            "P: u_h → −u_{−h}, v_h → v_{−h}",
            ClosedForm,
            Linear,
            One,
            true,
            |k, a| table_one(k, a, Operation::P),
        ),
        def(
            "one.table_C",
            "C: u↑ → e^{iα}v↓, u→ → −e^{iα}v→, u↓ → e^{iα}v↑ and inverse rows",
            ClosedForm,
            Linear,
            One,
            true,
            |k, a| table_one(k, a, Operation::C),
        ),
        def(
            "one.table_CP",
            "CP: ↑, ↓ rows −e^{iα}, → rows +e^{iα}",
            ClosedForm,
            Linear,
            One,
            true,
            |k, a| table_one(k, a, Operation::CP),
        ),
        def(
            "one.table_PC",
            "PC = −CP on every state",
            ClosedForm,
            Linear,
            One,
            true,
            |k, a| table_one(k, a, Operation::PC),
        ),
        def(
            "one.table_PP",
            "P² = +1",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, a| table_one(k, a, Operation::PP),
        ),
        def(
            "one.table_CC",
            "C² = −1",
            DerivedOracle,
            Linear,
            One,
            true,
            |k, a| table_one(k, a, Operation::CC),
        ),
        def(
            "one.cp_pc_anticommute",
            "CP b + PC b = 0",
            ClosedForm,
            Linear,
            One,
            true,
            spin_one::cp_pc_anticommutator,
        ),
        // field equations
        def(
            "fields.block_reconstruction",
            "E ± iB reproduce the χ- and ψ-blocks",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                spin_one::helicity_states(k)
                    .iter()
                    .map(|b| {
                        vector::distance(&fields_from_bivector(b).to_bivector_blocks(), &b.entries)
                    })
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "fields.linearity",
            "fields(αb₁ + βb₂) = α fields(b₁) + β fields(b₂)",
            ClosedForm,
            Linear,
            EnergySq,
            true,
            |k, _| {
                let (al, be) = (C64::new(0.6, -1.1), C64::new(-0.3, 0.4));
                let b1 = spin_one::bivector(Kind::U, spin_one::Helicity::Up, k);
                let b2 = spin_one::bivector(Kind::V, spin_one::Helicity::Zero, k);
                let mix = |x: [C64; 3], y: [C64; 3]| -> [C64; 3] {
                    std::array::from_fn(|i| x[i] * al + y[i] * be)
                };
                let f = fields_from_blocks(
                    &mix(b1.chi_block(), b2.chi_block()),
                    &mix(b1.psi_block(), b2.psi_block()),
                    k,
                );
                let (f1, f2) = (fields_from_bivector(&b1), fields_from_bivector(&b2));
                let mut worst = (f.phi_aux - (f1.phi_aux * al + f2.phi_aux * be)).norm();
                for i in 0..3 {
                    for (x, y, z) in [
                        (f.e_field, f1.e_field, f2.e_field),
                        (f.b_field, f1.b_field, f2.b_field),
                        (f.xi, f1.xi, f2.xi),
                    ] {
                        worst = worst.max((x[i] - (y[i] * al + z[i] * be)).norm());
                    }
                }
                for mu in 0..4 {
                    worst = worst.max(
                        (f.a_potential[mu] - (f1.a_potential[mu] * al + f2.a_potential[mu] * be))
                            .norm(),
                    );
                }
                worst
            },
        ),
        def(
            "fields.psi_closure_u",
            "(E − S·p)ξ − pφ = mψ for u-type",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| u_fields(k, |f, b| first_order_residuals(f, b).psi_closure),
        ),
        def(
            "fields.conjugate_branch_mass_flipped_u",
            "(E−S·p)χ = mξ, p(p·χ) = mpφ, (E+S·p)ξ − pφ = mχ for u-type",
            DerivedOracle,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                u_fields(k, |f, b| {
                    first_order_residuals_with(f, b, ConjugateBranch::MassFlipped).max()
                })
            },
        ),
        def(
            "fields.proca_first_u",
            "∂_μF^{μν} + m²A^ν = 0 for u-type",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| u_fields(k, |f, _| proca_residuals(f).first),
        ),
        def(
            "fields.proca_second_u",
            "F^{μν} = ∂^μA^ν − ∂^νA^μ reproduces (E, B) for u-type",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| u_fields(k, |f, _| proca_residuals(f).second),
        ),
        def(
            "fields.lorenz",
            "p_μA^μ = 0 for all six modes",
            DerivedOracle,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                spin_one::helicity_states(k)
                    .iter()
                    .map(|b| fields_from_bivector(b).lorenz().norm())
                    .fold(0.0, f64::max)
            },
        ),
        def(
            "fields.transverse_scalar",
            "φ = 0 for h = ±1",
            ClosedForm,
            Linear,
            Energy,
            true,
            |k, _| {
                spin_one::helicity_states(k)
                    .iter()
                    .filter(|b| b.helicity != spin_one::Helicity::Zero)
                    .map(|b| fields_from_bivector(b).phi_aux.norm())
                    .fold(0.0, f64::max)
            },
        ),
    ]
}

fn finding_defs() -> Vec<Def> {
    use Scale::*;
    use Source::*;
    use Tol::*;
    vec![
        def(
            "half.basis_change_unitary",
            "A†A + B†B = I",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| spin_half::basis_change(k).unwrap().unitarity_defect(),
        ),
        def(
            "half.expansion_matches_closed_form",
            "|oracle Â, B̂| = |closed-form A, B| (row-phase aligned)",
            ClosedForm,
            Linear,
            One,
            true,
            |k, _| {
                let ex = spin_half::expansion(k).unwrap();
                ex.magnitude_mismatch
                    .max(ex.row_phase_distance[0])
                    .max(ex.row_phase_distance[1])
            },
        ),
        def(
            "fields.conjugate_branch_u",
            "(E−S·p)χ = −mξ, p(p·χ) = −mpφ, (E+S·p)ξ − pφ = −mχ for u-type",
            ClosedForm,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                u_fields(k, |f, b| {
                    let r = first_order_residuals(f, b);
                    r.chi_curl.max(r.chi_longitudinal).max(r.chi_closure)
                })
            },
        ),
        def(
            "fields.conjugate_branch_v",
            "(E−S·p)χ = −mξ, p(p·χ) = −mpφ, (E+S·p)ξ − pφ = −mχ for v-type",
            DerivedOracle,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                typed_fields(k, Kind::V, |f, b| {
                    let r = first_order_residuals(f, b);
                    r.chi_curl.max(r.chi_longitudinal).max(r.chi_closure)
                })
            },
        ),
        def(
            "fields.proca_v",
            "both Proca equations for v-type",
            DerivedOracle,
            Quadratic,
            EnergySq,
            true,
            |k, _| {
                typed_fields(k, Kind::V, |f, _| {
                    let r = proca_residuals(f);
                    r.first.max(r.second)
                })
            },
        ),
    ]
}

fn pairs(f: impl Fn(usize, usize) -> f64) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 1..=3 {
        for j in 1..=3 {
            worst = worst.max(f(i, j));
        }
    }
    worst
}

/// `Σ_k ε^{ijk} g(k)` on 1-based indices.
fn levi_sum(i: usize, j: usize, g: impl Fn(usize) -> ComplexMatrix) -> ComplexMatrix {
    let n = g(1).rows();
    (1..=3).fold(ComplexMatrix::zeros(n, n), |acc, k| {
        &acc + &(&g(k) * levi_civita(i - 1, j - 1, k - 1))
    })
}

fn gram_defect(v: &[Vec<C64>], signs: &[f64], prod: impl Fn(&[C64], &[C64]) -> C64) -> f64 {
    let mut worst: f64 = 0.0;
    for (a, x) in v.iter().enumerate() {
        for (b, y) in v.iter().enumerate() {
            let expect = if a == b { signs[a] } else { 0.0 };
            worst = worst.max((prod(x, y) - expect).norm());
        }
    }
    worst
}

fn dirac_max(k: &Kinematics, kind: Kind, parity_basis: bool) -> f64 {
    let states = if parity_basis {
        spin_half::parity_states(k)
    } else {
        spin_half::helicity_states(k)
    };
    states
        .iter()
        .filter(|s| s.kind == kind)
        .map(spin_half::dirac_residual)
        .fold(0.0, f64::max)
}

fn bivector_max(op: &ComplexMatrix, k: &Kinematics, kind: Kind) -> f64 {
    spin_one::helicity_states(k)
        .iter()
        .filter(|b| b.kind == kind)
        .map(|b| spin_one::residual(op, b))
        .fold(0.0, f64::max)
}

fn typed_fields(
    k: &Kinematics,
    kind: Kind,
    f: impl Fn(&crate::field_eq::FieldSet, &spin_one::Bivector) -> f64,
) -> f64 {
    spin_one::helicity_states(k)
        .iter()
        .filter(|b| b.kind == kind)
        .map(|b| f(&fields_from_bivector(b), b))
        .fold(0.0, f64::max)
}

fn u_fields(
    k: &Kinematics,
    f: impl Fn(&crate::field_eq::FieldSet, &spin_one::Bivector) -> f64,
) -> f64 {
    typed_fields(k, Kind::U, f)
}

/// Largest deviation of one operation's rows from the expected table;
/// 1 if any state is missing or lands on the wrong partner.
fn table_deviation(
    rows: Result<Vec<TableRow>>,
    expected: Vec<phase::ExpectedRow>,
    op: Operation,
) -> f64 {
    let Ok(rows) = rows else { return 1.0 };
    let expected: Vec<_> = expected.into_iter().filter(|e| e.operation == op).collect();
    let (wrong, phase_err) = phase::compare(&rows, &expected);
    if wrong > 0 || rows.len() != expected.len() {
        return 1.0;
    }
    rows.iter()
        .map(|r| r.snap_error.max(r.residual))
        .fold(phase_err, f64::max)
}

fn table_half(k: &Kinematics, op: Operation) -> f64 {
    table_deviation(
        spin_half::symmetry_rows(k, &[op], 1e-6),
        spin_half::expected_table(),
        op,
    )
}

fn table_one(k: &Kinematics, alpha: f64, op: Operation) -> f64 {
    table_deviation(
        spin_one::symmetry_rows(k, alpha, &[op], 1e-6),
        spin_one::expected_table(alpha),
        op,
    )
}
