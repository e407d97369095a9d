//! Phase identification shared by the discrete-symmetry tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{vector, C64, I, ONE};
use crate::error::{Error, Result};

/// Discrete operation applied to a plane-wave state.
///
/// `P` and the products containing it act on the state built at the
/// parity-flipped momentum. `PP` acts on the state at the doubly flipped
/// momentum (azimuth wound by `2π`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operation {
    P,
    C,
    CP,
    PC,
    PP,
    CC,
}

impl Operation {
    pub const ALL: [Operation; 6] = [Self::P, Self::C, Self::CP, Self::PC, Self::PP, Self::CC];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::P => "P",
            Self::C => "C",
            Self::CP => "CP",
            Self::PC => "PC",
            Self::PP => "PP",
            Self::CC => "CC",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Operation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|op| op.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown operation `{s}` (expected one of P, C, CP, PC, PP, CC)")
            })
    }
}

/// One identified row `op · in_state = phase · out_state`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub operation: Operation,
    pub in_state: String,
    pub out_state: String,
    pub phase_re: f64,
    pub phase_im: f64,
    /// Distance from the fitted phase to the nearest allowed phase.
    pub snap_error: f64,
    /// `‖transformed − fitted·target‖ / ‖target‖`.
    pub residual: f64,
}

impl TableRow {
    pub fn phase(&self) -> C64 {
        C64::new(self.phase_re, self.phase_im)
    }
}

/// The four unit phases `{1, i, −1, −i}` times `e^{iα}`.
pub fn quarter_phases(alpha: f64) -> [C64; 4] {
    let e = C64::from_polar(1.0, alpha);
    [ONE * e, I * e, -ONE * e, -I * e]
}

/// Finds the unique candidate `t` with `transformed ≈ c·t`, `|c| = 1`, and
/// snaps `c` to the nearest entry of `allowed`.
///
/// The snapped phase is what the row records; `snap_error` keeps the
/// distance so callers can gate on it.
pub fn identify(
    operation: Operation,
    in_state: &str,
    transformed: &[C64],
    candidates: &[(String, Vec<C64>)],
    allowed: &[C64],
    tol: f64,
) -> Result<TableRow> {
    let mut hits = candidates.iter().filter_map(|(label, target)| {
        let tn = vector::norm(target);
        let c = vector::inner(target, transformed) / (tn * tn);
        let residual = vector::distance(transformed, &vector::scale(target, c)) / tn;
        (residual < tol && (c.norm() - 1.0).abs() < tol).then_some((label, c, residual))
    });
    let (label, c, residual) = hits.next().ok_or_else(|| Error::NoMatch {
        input: format!("{operation} {in_state}"),
    })?;
    if hits.next().is_some() {
        return Err(Error::AmbiguousMatch {
            input: format!("{operation} {in_state}"),
        });
    }
    let snapped = allowed
        .iter()
        .copied()
        .min_by(|a, b| (c - a).norm().total_cmp(&(c - b).norm()))
        .unwrap_or(c);
    Ok(TableRow {
        operation,
        in_state: in_state.to_owned(),
        out_state: label.clone(),
        phase_re: snapped.re,
        phase_im: snapped.im,
        snap_error: (c - snapped).norm(),
        residual,
    })
}

/// Expected entry `(in, out, phase)` of a symmetry table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedRow {
    pub operation: Operation,
    pub in_state: &'static str,
    pub out_state: &'static str,
    pub phase: C64,
}

/// Largest mismatch between identified rows and expectations, as
/// `(missing_or_wrong_state, max_phase_error)`.
pub fn compare(rows: &[TableRow], expected: &[ExpectedRow]) -> (usize, f64) {
    let mut wrong = 0;
    let mut worst: f64 = 0.0;
    for e in expected {
        match rows
            .iter()
            .find(|r| r.operation == e.operation && r.in_state == e.in_state)
        {
            Some(r) if r.out_state == e.out_state => {
                worst = worst.max((r.phase() - e.phase).norm());
            }
            _ => wrong += 1,
        }
    }
    (wrong, worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{re, ZERO};

    fn cands() -> Vec<(String, Vec<C64>)> {
        vec![("a".into(), vec![ONE, ZERO]), ("b".into(), vec![ZERO, ONE])]
    }

    #[test]
    fn identifies_phase_and_target() {
        let row = identify(
            Operation::C,
            "x",
            &[ZERO, -I],
            &cands(),
            &quarter_phases(0.0),
            1e-12,
        )
        .unwrap();
        assert_eq!(row.out_state, "b");
        assert_eq!(row.phase(), -I);
        assert!(row.snap_error < 1e-15);
    }

    #[test]
    fn non_proportional_vector_is_no_match() {
        let x = [re(0.6), re(0.8)];
        let err =
            identify(Operation::P, "x", &x, &cands(), &quarter_phases(0.0), 1e-12).unwrap_err();
        assert!(matches!(err, Error::NoMatch { .. }));
    }

    #[test]
    fn snap_error_reported_for_off_grid_phase() {
        let c = C64::from_polar(1.0, 0.1);
        let row = identify(
            Operation::P,
            "x",
            &[c, ZERO],
            &cands(),
            &quarter_phases(0.0),
            1e-12,
        )
        .unwrap();
        assert_eq!(row.phase(), ONE);
        assert!((row.snap_error - (c - ONE).norm()).abs() < 1e-15);
    }

    #[test]
    fn operation_round_trips_through_str() {
        for op in Operation::ALL {
            assert_eq!(op.as_str().parse::<Operation>().unwrap(), op);
        }
        assert_eq!("cp".parse::<Operation>().unwrap(), Operation::CP);
        assert!("T".parse::<Operation>().is_err());
    }
}
