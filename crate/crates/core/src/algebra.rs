//! Fixed matrices of the theory and small dense complex linear algebra.
//!
//! Conventions: metric `η = diag(1, −1, −1, −1)`; Dirac matrices in the
//! spinorial representation with `γ⁰ = ((0, I), (I, 0))` and
//! `γ^i = ((0, −σ^i), (σ^i, 0))`, so that `γ^μ p_μ = ((0, E + σ·p), (E − σ·p, 0))`.
//! Spin-1 generators are built in the `S₃ = diag(1, 0, −1)` weight basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kinematics::Kinematics;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Minkowski metric component `η^{μμ}`.
pub fn metric(mu: usize) -> f64 {
    if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Dense row-major complex matrix with shape fixed at construction.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from real entries given row by row.
    pub fn from_real_rows<const R: usize, const C: usize>(rows: [[f64; C]; R]) -> Self {
        Self::from_fn(R, C, |i, j| re(rows[i][j]))
    }

    pub fn from_rows<const R: usize, const C: usize>(rows: [[C64; C]; R]) -> Self {
        Self::from_fn(R, C, |i, j| rows[i][j])
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i] } else { ZERO })
    }

    /// Assembles `((a, b), (c, d))` from four equally shaped blocks.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let shape = a.shape();
        for m in [b, c, d] {
            if m.shape() != shape {
                return Err(Error::ShapeMismatch {
                    left: shape,
                    right: m.shape(),
                });
            }
        }
        let (r, k) = shape;
        Ok(Self::from_fn(2 * r, 2 * k, |i, j| {
            let blk = match (i < r, j < k) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(i % r, j % k)
        }))
    }

    /// Copies the `rows × cols` block whose top-left corner is `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<C64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Matrix whose columns are the given equally long vectors.
    pub fn from_columns(columns: &[Vec<C64>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::ShapeMismatch {
                left: (rows, 1),
                right: (bad.len(), 1),
            });
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        }))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_mul_vec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|k| self.get(i, k) * v[k]).sum())
            .collect())
    }

    /// Panics on a shape mismatch; use [`Self::try_mul_vec`] for a checked product.
    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        self.try_mul_vec(v).expect("matrix-vector shape mismatch")
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        &(self * rhs) + &(rhs * self)
    }

    /// Largest entry modulus of `self − self†`.
    pub fn hermiticity_defect(&self) -> f64 {
        (self - &self.adjoint()).max_abs()
    }

    /// Solves `self · X = rhs` by LU decomposition with partial pivoting.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if self.rows != self.cols || rhs.rows != self.rows {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let a = DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j));
        let b = DMatrix::from_fn(rhs.rows, rhs.cols, |i, j| rhs.get(i, j));
        let x = a.lu().solve(&b).ok_or(Error::Singular)?;
        Ok(Self::from_fn(rhs.rows, rhs.cols, |i, j| x[(i, j)]))
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: Self) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: Self) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.map(|z| -z)
    }
}

impl Mul<C64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, s: C64) -> ComplexMatrix {
        self.scale(s)
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, s: f64) -> ComplexMatrix {
        self.scale(re(s))
    }
}

/// Helpers on complex column vectors stored as slices.
pub mod vector {
    use super::C64;

    /// `⟨a, b⟩ = Σ a_i* b_i`.
    pub fn inner(a: &[C64], b: &[C64]) -> C64 {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
    }

    pub fn norm(a: &[C64]) -> f64 {
        a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn sub(a: &[C64], b: &[C64]) -> Vec<C64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn add(a: &[C64], b: &[C64]) -> Vec<C64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn scale(a: &[C64], s: C64) -> Vec<C64> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn conj(a: &[C64]) -> Vec<C64> {
        a.iter().map(|x| x.conj()).collect()
    }

    /// `‖a − b‖`.
    pub fn distance(a: &[C64], b: &[C64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Real 3-vector dotted into a complex 3-vector, `Σ p_i v_i`.
    pub fn real_dot(p: &[f64; 3], v: &[C64]) -> C64 {
        p.iter().zip(v).map(|(a, z)| z * a).sum()
    }
}

fn check_axis(
    what: &'static str,
    index: usize,
    range: std::ops::RangeInclusive<usize>,
) -> Result<()> {
    if range.contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index })
    }
}

/// Pauli matrix `σ^i`, `i ∈ {1, 2, 3}`.
pub fn pauli(i: usize) -> Result<ComplexMatrix> {
    check_axis("pauli", i, 1..=3)?;
    Ok(match i {
        1 => ComplexMatrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]),
        2 => ComplexMatrix::from_rows([[ZERO, -I], [I, ZERO]]),
        _ => ComplexMatrix::from_real_rows([[1.0, 0.0], [0.0, -1.0]]),
    })
}

/// Spin-1 generator `S^i` in the weight basis where `S₃ = diag(1, 0, −1)`.
pub fn spin1(i: usize) -> Result<ComplexMatrix> {
    check_axis("spin1", i, 1..=3)?;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    Ok(match i {
        1 => ComplexMatrix::from_real_rows([[0.0, r, 0.0], [r, 0.0, r], [0.0, r, 0.0]]),
        2 => {
            let a = C64::new(0.0, -r);
            ComplexMatrix::from_rows([[ZERO, a, ZERO], [-a, ZERO, a], [ZERO, -a, ZERO]])
        }
        _ => ComplexMatrix::from_real_rows([[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]]),
    })
}

/// `Σ v_i σ^i`.
pub fn sigma_dot(v: [f64; 3]) -> ComplexMatrix {
    let (x, y, z) = (v[0], v[1], v[2]);
    ComplexMatrix::from_rows([[re(z), C64::new(x, -y)], [C64::new(x, y), re(-z)]])
}

/// `Σ v_i S^i` for the spin-1 generators.
pub fn spin1_dot(v: [f64; 3]) -> ComplexMatrix {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let minus = C64::new(v[0], -v[1]) * r;
    let plus = C64::new(v[0], v[1]) * r;
    ComplexMatrix::from_rows([
        [re(v[2]), minus, ZERO],
        [plus, ZERO, minus],
        [ZERO, plus, re(-v[2])],
    ])
}

/// `σ·p̂`, eigenvalues `±1`.
pub fn helicity_matrix_half(kin: &Kinematics) -> ComplexMatrix {
    sigma_dot(kin.unit_momentum())
}

/// `S·p̂`, eigenvalues `1, 0, −1`.
pub fn helicity_matrix_one(kin: &Kinematics) -> ComplexMatrix {
    spin1_dot(kin.unit_momentum())
}

/// Dirac matrix `γ^μ` in the spinorial representation.
pub fn dirac_gamma(mu: usize) -> Result<ComplexMatrix> {
    check_axis("dirac_gamma", mu, 0..=3)?;
    let z = ComplexMatrix::zeros(2, 2);
    if mu == 0 {
        let one = ComplexMatrix::identity(2);
        return ComplexMatrix::block2x2(&z, &one, &one, &z);
    }
    let s = pauli(mu)?;
    ComplexMatrix::block2x2(&z, &(-&s), &s, &z)
}

/// `γ^μ p_μ`.
pub fn dirac_slash(kin: &Kinematics) -> ComplexMatrix {
    let p = kin.covariant_momentum();
    (0..4).fold(ComplexMatrix::zeros(4, 4), |acc, mu| {
        &acc + &(&dirac_gamma(mu).unwrap() * p[mu])
    })
}

/// Barut-Muzinich-Williams 6×6 matrix `γ^{μν}`, symmetric in `(μ, ν)`.
pub fn bmw_gamma(mu: usize, nu: usize) -> Result<ComplexMatrix> {
    check_axis("bmw_gamma", mu, 0..=3)?;
    check_axis("bmw_gamma", nu, 0..=3)?;
    let z = ComplexMatrix::zeros(3, 3);
    let (lo, hi) = (mu.min(nu), mu.max(nu));
    if hi == 0 {
        let one = ComplexMatrix::identity(3);
        return ComplexMatrix::block2x2(&z, &one, &one, &z);
    }
    if lo == 0 {
        let s = spin1(hi)?;
        return ComplexMatrix::block2x2(&z, &(-&s), &s, &z);
    }
    // Work with √2·S^{1,2} (integer entries) so each entry is rounded once.
    let blk =
        &(&spin1_integral(mu) * &spin1_integral(nu)) + &(&spin1_integral(nu) * &spin1_integral(mu));
    let mut blk = match [mu, nu].iter().filter(|&&a| a != 3).count() {
        2 => blk.scale(re(0.5)),
        1 => blk.scale(re(std::f64::consts::FRAC_1_SQRT_2)),
        _ => blk,
    };
    if mu == nu {
        blk = &blk - &ComplexMatrix::identity(3);
    }
    ComplexMatrix::block2x2(&z, &blk, &blk, &z)
}

/// `√2·S^i` for `i = 1, 2`; `S^3` itself.
fn spin1_integral(i: usize) -> ComplexMatrix {
    match i {
        1 => ComplexMatrix::from_real_rows([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]),
        2 => ComplexMatrix::from_rows([[ZERO, -I, ZERO], [I, ZERO, -I], [ZERO, I, ZERO]]),
        _ => spin1(3).expect("axis 3"),
    }
}

/// Spin-1/2 Wigner operator `Θ = ((0, −1), (1, 0))`, with `Θ φ↑* = −φ↓`.
pub fn wigner_theta_half() -> ComplexMatrix {
    ComplexMatrix::from_real_rows([[0.0, -1.0], [1.0, 0.0]])
}

/// Spin-1 Wigner operator `Θ_[1]`.
pub fn wigner_theta_one() -> ComplexMatrix {
    ComplexMatrix::from_real_rows([[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]])
}

/// Levi-Civita symbol on 0-based indices, `ε_{012} = +1`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}
