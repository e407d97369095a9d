//! P, C and their products on helicity states of spin 1/2 and spin 1.
//!
//!     cargo run --example discrete_symmetries -- 1.3

use helicity::phase::{Operation, TableRow};
use helicity::report::format_phase;
use helicity::{spin_half, spin_one, Kinematics};

fn print(rows: &[TableRow]) {
    for r in rows {
        println!(
            "  {:<2} {} → {:<3} {:>24}   snap {:.1e}",
            r.operation,
            r.in_state,
            r.out_state,
            format_phase(r.phase()),
            r.snap_error
        );
    }
}

fn main() -> helicity::Result<()> {
    let alpha: f64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(0.0);
    let kin = Kinematics::new(
        1.0,
        0.75,
        std::f64::consts::FRAC_PI_3,
        std::f64::consts::PI / 5.0,
    )?;

    println!("spin 1/2");
    print(&spin_half::symmetry_table_half(&kin)?);
    println!(
        "  max |CP s + PC s| = {:.1e}",
        spin_half::cp_pc_anticommutator(&kin)
    );

    println!("\nspin 1, α = {alpha}");
    print(&spin_one::symmetry_table_one(&kin, alpha)?);
    println!(
        "  max |CP b + PC b| = {:.1e}",
        spin_one::cp_pc_anticommutator(&kin, alpha)
    );

    // a single operation, without checking against the expected table
    let rows = spin_one::symmetry_rows(&kin, alpha, &[Operation::CP], 1e-11)?;
    println!("\n{} CP rows identified", rows.len());
    Ok(())
}
