//! Exact cyclotomic arithmetic, Laurent polynomials and quantum integers.

mod approx;
mod field;
pub mod integers;
mod laurent;
mod quantum;

pub use approx::ApproxComplex;
pub use field::CyclotomicNumber;
pub use laurent::{cyclotomic_polynomial, LaurentPoly};
pub use quantum::{quantum_factorial_ratio, quantum_integer, FactorialRatio, QuantumEvaluator};

/// Exact rationals, the coefficient scalars.
pub type Rational = num::BigRational;

pub fn root_of_unity(order: u32, j: i64) -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(order, j)
}
