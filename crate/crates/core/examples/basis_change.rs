//! Parity-basis Dirac spinors expressed in the helicity basis.
//!
//! The closed-form blocks `A`, `B` are compared with an exact linear solve.
//!
//!     cargo run --example basis_change -- 1.0 0.75

use helicity::spin_half;
use helicity::Kinematics;

fn main() -> helicity::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mass = args.first().copied().unwrap_or(1.0);
    let pmag = args.get(1).copied().unwrap_or(0.75);
    let kin = Kinematics::new(mass, pmag, 0.9, 2.2)?;

    let bc = spin_half::basis_change(&kin)?;
    for (mu, a) in bc.a.iter().enumerate() {
        println!("a^{mu} = {a:.6}");
    }
    println!(
        "a_{{++}} {:.6}  a_{{+-}} {:.6}  a_{{-+}} {:.6}  a_{{--}} {:.6}",
        bc.app, bc.apm, bc.amp, bc.amm
    );
    println!("A = {:?}", bc.a_matrix);
    println!("B = {:?}", bc.b_matrix);
    println!("|A†A + B†B − I| = {:.3e}", bc.unitarity_defect());
    println!("|A†A − B†B − I| = {:.3e}", bc.pseudo_unitarity_defect());
    println!("|A†A − I|       = {:.3e}", bc.a_unitarity_defect());

    let ex = spin_half::expansion(&kin)?;
    println!(
        "\noracle coefficients (rows u+, u−, v+, v−):\n{:?}",
        ex.coefficients
    );
    println!(
        "reconstruction residual      {:.3e}",
        ex.reconstruction_error
    );
    println!(
        "oracle unitarity defect      {:.3e}",
        ex.oracle_unitarity_defect
    );
    println!("|oracle| vs |closed form|    {:.3e}", ex.magnitude_mismatch);
    Ok(())
}
