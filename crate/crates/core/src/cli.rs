//! Command-line front end used by the `helicity` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{ComplexMatrix, C64};
use crate::error::Error;
use crate::field_eq::{
    fields_from_bivector, first_order_residuals, first_order_residuals_with, proca_residuals,
    ConjugateBranch,
};
use crate::kinematics::Kinematics;
use crate::phase::{Operation, TableRow};
use crate::report::{format_phase, run_suite, SuiteConfig};
use crate::spin_half::{self, Kind};
use crate::spin_one;

#[derive(Debug, Parser)]
#[command(
    name = "helicity",
    version,
    about = "Helicity-basis spinors, bivectors and their checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the seeded verification suite.
    Verify(VerifyArgs),
    /// Print one spinor or bivector.
    Spinor(SpinorArgs),
    /// Print a discrete-symmetry table.
    Table(TableArgs),
    /// Print the parity-to-helicity basis change.
    Expand(ExpandArgs),
    /// Print field strengths, potentials and field-equation residuals.
    Fields(FieldsArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    markdown: Option<PathBuf>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1e-11)]
    tol_linear: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol_quadratic: f64,
}

#[derive(Debug, Args)]
struct KinArgs {
    #[arg(long)]
    mass: f64,
    #[arg(long, default_value_t = 0.0)]
    pmag: f64,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
}

impl KinArgs {
    fn build(&self) -> Result<Kinematics, Error> {
        Kinematics::new(self.mass, self.pmag, self.theta, self.phi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spin {
    Half,
    One,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    U,
    V,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::U => Kind::U,
            KindArg::V => Kind::V,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Helicity,
    Parity,
}

#[derive(Debug, Args)]
struct SpinorArgs {
    #[arg(long, value_enum)]
    spin: Spin,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// `+1/2`, `-1/2` for spin 1/2; `+1`, `0`, `-1` for spin 1.
    #[arg(long, allow_hyphen_values = true)]
    helicity: String,
    #[command(flatten)]
    kin: KinArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Spin 1/2 only; in the parity basis `--helicity` selects `σ = ±1/2`.
    #[arg(long, value_enum, default_value_t = BasisArg::Helicity)]
    basis: BasisArg,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    spin: Spin,
    #[arg(long, value_parser = parse_op)]
    op: Operation,
    #[command(flatten)]
    kin: KinArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct ExpandArgs {
    #[command(flatten)]
    kin: KinArgs,
}

#[derive(Debug, Args)]
struct FieldsArgs {
    #[command(flatten)]
    kin: KinArgs,
    /// `+1`, `0` or `-1`.
    #[arg(long, allow_hyphen_values = true)]
    helicity: String,
    #[arg(long, value_enum, default_value_t = KindArg::U)]
    kind: KindArg,
}

fn parse_op(s: &str) -> Result<Operation, String> {
    s.parse()
}

fn half_helicity(s: &str) -> Option<spin_half::Helicity> {
    use spin_half::Helicity::*;
    match s.trim() {
        "+1/2" | "1/2" | "+0.5" | "0.5" | "+" | "up" | "↑" => Some(Up),
        "-1/2" | "−1/2" | "-0.5" | "-" | "down" | "↓" => Some(Down),
        _ => None,
    }
}

fn one_helicity(s: &str) -> Option<spin_one::Helicity> {
    use spin_one::Helicity::*;
    match s.trim() {
        "+1" | "1" | "+" | "up" | "↑" => Some(Up),
        "0" | "zero" | "→" => Some(Zero),
        "-1" | "−1" | "-" | "down" | "↓" => Some(Down),
        _ => None,
    }
}

/// Process exit status.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => verify(a, out, err),
        Command::Spinor(a) => spinor(a, out),
        Command::Table(a) => table(a, out),
        Command::Expand(a) => expand(a, out),
        Command::Fields(a) => fields(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
    Check(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let config = SuiteConfig {
        seed: a.seed,
        samples: a.samples,
        tol_linear: a.tol_linear,
        tol_quadratic: a.tol_quadratic,
        alpha: a.alpha,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let report = run_suite(&config).map_err(usage)?;
    let elapsed = start.elapsed();
    let json = report.to_json();
    match &a.json {
        Some(path) if path.as_os_str() != "-" => std::fs::write(path, &json)?,
        _ => out.write_all(json.as_bytes())?,
    }
    if let Some(path) = &a.markdown {
        std::fs::write(path, report.to_markdown(Some(elapsed)))?;
    }
    let s = &report.summary;
    writeln!(
        err,
        "{}/{} checks pass, {}/{} findings hold ({:.2} s)",
        s.passed,
        s.checks,
        s.findings_holding,
        report.findings.len(),
        elapsed.as_secs_f64()
    )?;
    for c in report.checks.iter().filter(|c| !c.pass) {
        writeln!(
            err,
            "FAIL {}: {:e} >= {:e}",
            c.check_id, c.max_residual, c.tolerance
        )?;
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

/// 17 significant digits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Up to 14 decimals with trailing zeros dropped.
fn short(x: f64) -> String {
    let s = format!("{x:.14}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn cshort(z: C64) -> String {
    format!(
        "{}{}{}i",
        short(z.re),
        if z.im < 0.0 { "-" } else { "+" },
        short(z.im.abs())
    )
}

fn kin_json(k: &Kinematics) -> String {
    format!(
        "{{\"mass\": {}, \"pmag\": {}, \"theta\": {}, \"phi\": {}, \"energy\": {}}}",
        num(k.mass()),
        num(k.pmag()),
        num(k.theta()),
        num(k.phi()),
        num(k.energy())
    )
}

fn spinor(a: SpinorArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kin = a.kin.build().map_err(usage)?;
    let kind: Kind = a.kind.into();
    let (spin, label, entries, bar_norm): (&str, String, Vec<C64>, f64) = match a.spin {
        Spin::Half => {
            let h = half_helicity(&a.helicity).ok_or_else(|| {
                Failure::Usage(format!(
                    "invalid spin-1/2 helicity `{}` (use +1/2 or -1/2)",
                    a.helicity
                ))
            })?;
            let s = match a.basis {
                BasisArg::Helicity => spin_half::four_spinor(kind, h, &kin),
                BasisArg::Parity => spin_half::parity_basis_spinor(kind, h, &kin),
            };
            ("1/2", s.label(), s.entries.to_vec(), s.bar_norm())
        }
        Spin::One => {
            if a.basis == BasisArg::Parity {
                return Err(Failure::Usage(
                    "--basis parity applies to --spin half only".into(),
                ));
            }
            let h = one_helicity(&a.helicity).ok_or_else(|| {
                Failure::Usage(format!(
                    "invalid spin-1 helicity `{}` (use +1, 0 or -1)",
                    a.helicity
                ))
            })?;
            let b = spin_one::bivector(kind, h, &kin);
            ("1", b.label(), b.entries.to_vec(), b.bar_norm())
        }
    };
    match a.format {
        Format::Json => {
            let comps: Vec<String> = entries
                .iter()
                .map(|z| format!("{{\"re\": {}, \"im\": {}}}", num(z.re), num(z.im)))
                .collect();
            writeln!(
                out,
                "{{\n  \"spin\": \"{spin}\",\n  \"state\": \"{label}\",\n  \"kinematics\": {},\n  \"components\": [\n    {}\n  ],\n  \"bar_norm\": {}\n}}",
                kin_json(&kin),
                comps.join(",\n    "),
                num(bar_norm)
            )?;
        }
        Format::Text => {
            writeln!(out, "{label}  (spin {spin}, E = {})", short(kin.energy()))?;
            for (i, z) in entries.iter().enumerate() {
                writeln!(out, "  [{i}] {:>24} {:>24}i", num(z.re), num(z.im))?;
            }
            writeln!(out, "bar norm = {}", short(bar_norm))?;
        }
    }
    Ok(EXIT_OK)
}

fn table(a: TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kin = a.kin.build().map_err(usage)?;
    let tol = spin_half::TABLE_TOLERANCE;
    let rows: Vec<TableRow> = match a.spin {
        Spin::Half => spin_half::symmetry_rows(&kin, &[a.op], tol),
        Spin::One => spin_one::symmetry_rows(&kin, a.alpha, &[a.op], tol),
    }
    .map_err(|e| Failure::Check(e.to_string()))?;
    match a.format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            writeln!(out, "{s}")?;
        }
        Format::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{:<3} {} -> {:<3} phase {:<10} snap {:.1e}",
                    r.operation,
                    r.in_state,
                    r.out_state,
                    format_phase(r.phase()),
                    r.snap_error
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_matrix(out: &mut dyn Write, name: &str, m: &ComplexMatrix) -> std::io::Result<()> {
    writeln!(out, "{name} =")?;
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .into_iter()
            .map(|z| format!("{:>22}", cshort(z)))
            .collect();
        writeln!(out, "  {}", row.join(" "))?;
    }
    Ok(())
}

fn expand(a: ExpandArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kin = a.kin.build().map_err(usage)?;
    let bc = spin_half::basis_change(&kin).map_err(|e| Failure::Check(e.to_string()))?;
    let ex = spin_half::expansion(&kin).map_err(|e| Failure::Check(e.to_string()))?;
    writeln!(out, "E = {}", short(kin.energy()))?;
    for (mu, c) in bc.a.iter().enumerate() {
        writeln!(out, "a^{mu} = {}", cshort(*c))?;
    }
    writeln!(out, "a_{{++}} = {}", short(bc.app))?;
    writeln!(out, "a_{{+-}} = {}", short(bc.apm))?;
    writeln!(out, "a_{{-+}} = {}", short(bc.amp))?;
    writeln!(out, "a_{{--}} = {}", short(bc.amm))?;
    write_matrix(out, "A", &bc.a_matrix)?;
    write_matrix(out, "B", &bc.b_matrix)?;
    write_matrix(out, "C (oracle)", &bc.c_matrix)?;
    write_matrix(out, "D (oracle)", &bc.d_matrix)?;
    write_matrix(out, "U", &bc.u_matrix)?;
    writeln!(out, "|A†A + B†B - I| = {:.6e}", bc.unitarity_defect())?;
    writeln!(
        out,
        "|A†A - B†B - I| = {:.6e}",
        bc.pseudo_unitarity_defect()
    )?;
    writeln!(out, "|A†A - I|       = {:.6e}", bc.a_unitarity_defect())?;
    writeln!(out, "|U†U - I|       = {:.6e}", bc.u_unitarity_defect())?;
    write_matrix(
        out,
        "oracle coefficients (rows u+, u-, v+, v-)",
        &ex.coefficients,
    )?;
    writeln!(
        out,
        "reconstruction residual = {:.6e}",
        ex.reconstruction_error
    )?;
    writeln!(
        out,
        "oracle vs closed-form magnitude mismatch = {:.6e}",
        ex.magnitude_mismatch
    )?;
    Ok(EXIT_OK)
}

fn fields(a: FieldsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kin = a.kin.build().map_err(usage)?;
    let h = one_helicity(&a.helicity).ok_or_else(|| {
        Failure::Usage(format!(
            "invalid spin-1 helicity `{}` (use +1, 0 or -1)",
            a.helicity
        ))
    })?;
    let b = spin_one::bivector(a.kind.into(), h, &kin);
    let f = fields_from_bivector(&b);
    let vec3 = |v: &[C64]| v.iter().map(|z| cshort(*z)).collect::<Vec<_>>().join(", ");
    writeln!(out, "{}  E_energy = {}", b.label(), short(kin.energy()))?;
    writeln!(out, "E   = ({})", vec3(&f.e_field))?;
    writeln!(out, "B   = ({})", vec3(&f.b_field))?;
    writeln!(out, "xi  = ({})", vec3(&f.xi))?;
    writeln!(out, "phi = {}", cshort(f.phi_aux))?;
    writeln!(out, "A^mu = ({})", vec3(&f.a_potential))?;
    let printed = first_order_residuals(&f, &b);
    let flipped = first_order_residuals_with(&f, &b, ConjugateBranch::MassFlipped);
    let names = [
        "(E-S.p)xi - p phi - m psi",
        "(E-S.p)chi ± m xi",
        "p(p.chi) ± m p phi",
        "(E+S.p)xi - p phi ± m chi",
    ];
    writeln!(
        out,
        "first-order residuals          printed (+m)   mass-flipped (-m)"
    )?;
    for (i, n) in names.iter().enumerate() {
        writeln!(
            out,
            "  {:<28} {:>14.6e} {:>14.6e}",
            n,
            printed.as_array()[i],
            flipped.as_array()[i]
        )?;
    }
    let pr = proca_residuals(&f);
    writeln!(
        out,
        "Proca residual (d_mu F^{{mu nu}} + m^2 A^nu) = {:.6e}",
        pr.first
    )?;
    writeln!(
        out,
        "Proca residual (F vs E, B)                 = {:.6e}",
        pr.second
    )?;
    writeln!(out, "Lorenz p_mu A^mu = {}", cshort(f.lorenz()))?;
    Ok(EXIT_OK)
}
