//! Spin-1 bivectors against the Tucker-Hammer and Weinberg operators.
//!
//!     cargo run --example spin_one_equations

use helicity::spin_half::Kind;
use helicity::spin_one::{self, Helicity};
use helicity::Kinematics;

fn main() -> helicity::Result<()> {
    let kin = Kinematics::new(0.4, 2.5, 2.0, -1.0)?;
    let th = spin_one::tucker_hammer_matrix(&kin);
    let gamma = spin_one::weinberg_matrix(&kin);
    let flipped = spin_one::mass_flipped_operator(&kin);
    let e2 = kin.energy().powi(2);

    println!(
        "|TH − (γ^{{μν}}p_μp_ν + p² − 2m²)| = {:.2e}",
        (&th - &spin_one::tucker_hammer_from_bmw(&kin)).max_abs()
    );
    println!(
        "|Γ − TH| / m²                     = {:.2e}",
        (&gamma - &th).max_abs() / kin.mass().powi(2)
    );
    println!();
    println!("state  bar norm   |TH b|/E²  |Γ b|/E²  |(γpp + m²) b|/E²");
    for b in spin_one::helicity_states(&kin) {
        println!(
            "{:<5} {:+.12} {:9.1e} {:9.1e} {:9.1e}",
            b.label(),
            b.bar_norm(),
            spin_one::residual(&th, &b) / e2,
            spin_one::residual(&gamma, &b) / e2,
            spin_one::residual(&flipped, &b) / e2
        );
    }

    let show = |v: &[helicity::Complex64]| {
        v.iter()
            .map(|z| format!("{z:.6}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let chi = spin_one::three_spinor(Helicity::Zero, &kin);
    println!("\nχ→ = ({})", show(&chi.entries));
    let u = spin_one::bivector(Kind::U, Helicity::Zero, &kin);
    println!(
        "u→ χ-block ({})\n   ψ-block ({})",
        show(&u.chi_block()),
        show(&u.psi_block())
    );
    Ok(())
}
