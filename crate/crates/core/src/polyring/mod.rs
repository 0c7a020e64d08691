//! Exact arithmetic: rationals, univariate polynomials in `q`, and square
//! polynomial matrices with Bareiss determinant and unimodular inverse.

mod matrix;
mod polynomial;
mod rational;

use std::fmt;

use thiserror::Error;

pub use matrix::PolyMatrix;
pub use polynomial::Polynomial;
pub use rational::{integer_row, integer_row_basis, parse_rational, rank_rational, rat, RatMatrix};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("NotUnimodular: determinant is {det}, expected 1 or -1")]
    NotUnimodular { det: Polynomial },
    #[error("DimensionMismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Determinant of a polynomial matrix.
pub fn det(m: &PolyMatrix) -> Polynomial {
    m.det()
}

/// Inverse of a matrix whose determinant is `+1` or `-1`.
pub fn inverse_unimodular(m: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
    m.inverse_unimodular()
}

/// Entry-wise evaluation at `q = at`.
pub fn specialize(m: &PolyMatrix, at: &Rational) -> RatMatrix {
    m.specialize(at)
}

/// Row vector dot column vector: `x^T y`.
pub fn dot(x: &[Polynomial], y: &[Polynomial]) -> Result<Polynomial, PolyError> {
    if x.len() != y.len() {
        return Err(PolyError::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .fold(Polynomial::zero(), |acc, (a, b)| &acc + &(a * b)))
}

/// Bilinear form `x^T M y`.
pub fn bilinear(m: &PolyMatrix, x: &[Polynomial], y: &[Polynomial]) -> Result<Polynomial, PolyError> {
    if x.len() != m.order() {
        return Err(PolyError::DimensionMismatch {
            expected: m.order(),
            found: x.len(),
        });
    }
    dot(x, &m.mul_vec(y)?)
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vec<Polynomial> {
    (0..n)
        .map(|k| if k == i { Polynomial::one() } else { Polynomial::zero() })
        .collect()
}

/// Column-aligned grid used by the plain-text renderers.
pub(crate) fn write_grid(f: &mut fmt::Formatter<'_>, cells: &[Vec<String>]) -> fmt::Result {
    let ncols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    for (i, row) in cells.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        write!(f, "[ {} ]", line.join("  "))?;
    }
    Ok(())
}
