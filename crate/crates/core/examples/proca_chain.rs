//! From a bivector to E, B, the potentials A^μ, and the Proca equations.
//!
//!     cargo run --example proca_chain

use helicity::field_eq::{self, ConjugateBranch};
use helicity::spin_half::Kind;
use helicity::spin_one::{self, Helicity};
use helicity::Kinematics;

fn sci(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x:8.1e}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> helicity::Result<()> {
    let kin = Kinematics::new(1.0, 0.75, 1.2, 0.3)?;
    for kind in [Kind::U, Kind::V] {
        for h in Helicity::ALL {
            let b = spin_one::bivector(kind, h, &kin);
            let f = field_eq::fields_from_bivector(&b);
            let printed = field_eq::first_order_residuals(&f, &b);
            let flipped =
                field_eq::first_order_residuals_with(&f, &b, ConjugateBranch::MassFlipped);
            let proca = field_eq::proca_residuals(&f);
            println!("{}  φ = {:.6}", b.label(), f.phi_aux);
            println!("    first order, +m: {}", sci(&printed.as_array()));
            println!("    first order, −m: {}", sci(&flipped.as_array()));
            println!(
                "    Proca {:.1e} / {:.1e}, Lorenz {:.1e}",
                proca.first,
                proca.second,
                f.lorenz().norm()
            );
        }
    }

    // F^{μν} built from A^μ
    let f = field_eq::fields_from_bivector(&spin_one::bivector(Kind::U, Helicity::Up, &kin));
    let t = f.field_tensor();
    println!("\nF^{{10}} = {:.6}, E_x = {:.6}", t[1][0], f.e_field[0]);
    Ok(())
}
