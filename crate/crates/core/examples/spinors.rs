//! Helicity 2-spinors and Dirac 4-spinors at one momentum.
//!
//!     cargo run --example spinors

use helicity::algebra::{helicity_matrix_half, vector};
use helicity::spin_half::{self, Helicity};
use helicity::Kinematics;

fn main() -> helicity::Result<()> {
    let kin = Kinematics::new(1.0, 0.75, 1.1, 0.4)?;
    println!(
        "m = {}, |p| = {}, E = {}",
        kin.mass(),
        kin.pmag(),
        kin.energy()
    );

    let h_op = helicity_matrix_half(&kin);
    for h in Helicity::BOTH {
        let phi = spin_half::two_spinor(h, &kin).entries;
        let applied = h_op.mul_vec(&phi);
        let lambda = vector::inner(&phi, &applied).re;
        println!("φ{}: σ·p̂ eigenvalue {lambda:+.15}", h.arrow());
    }

    println!();
    for s in spin_half::helicity_states(&kin) {
        println!("{s}");
        println!(
            "    bar norm {:+.15}, Dirac residual {:.2e}",
            s.bar_norm(),
            spin_half::dirac_residual(&s)
        );
    }

    // parity-basis spinors solve the same equations
    println!();
    for s in spin_half::parity_states(&kin) {
        println!("{s}  residual {:.2e}", spin_half::dirac_residual(&s));
    }

    // φ is not reduced modulo 2π: a full turn flips the spinor sign
    let turned = Kinematics::new(1.0, 0.75, 1.1, 0.4 + std::f64::consts::TAU)?;
    let a = spin_half::four_spinor(spin_half::Kind::U, Helicity::Up, &kin);
    let b = spin_half::four_spinor(spin_half::Kind::U, Helicity::Up, &turned);
    println!(
        "\nu↑(φ + 2π) = −u↑(φ): {:.1e}",
        vector::norm(&vector::add(&a.entries, &b.entries))
    );
    Ok(())
}
