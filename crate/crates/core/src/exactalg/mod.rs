//! Exact arithmetic kernel: rational polynomials and graded linear algebra.

mod echelon;
mod poly;
mod scalar;
mod sparse;

pub use echelon::{complement_basis, echelon_insert, GradedBasis};
pub use poly::{
    monomial_count, monomials_of_degree, poly_substitute, Monomial, MonomialBasis, SparsePoly,
};
pub use sparse::{Reduction, SparseEchelon, SparseVec};

/// Exact rational with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Square matrix over the rationals, row-major.
pub type Matrix = Vec<Vec<Rational>>;

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| rational(i64::from(i == j))).collect())
        .collect()
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(rational(0), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

pub fn trace(a: &Matrix) -> Rational {
    a.iter().enumerate().fold(rational(0), |acc, (i, row)| acc + &row[i])
}
