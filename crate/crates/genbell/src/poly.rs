//! Exact integer polynomials in one indeterminate, with just enough machinery
//! to build products of linear factors and re-expand them in the falling
//! factorial basis.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense polynomial over the integers; `coeffs[i]` is the coefficient of the
/// i-th power. The trailing coefficient is non-zero unless the polynomial is
/// zero (empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplies by the linear factor (x + c).
    pub fn mul_linear(&self, c: &BigInt) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += a * c;
        }
        Self::from_coeffs(out)
    }

    /// Synthetic division by (x - c): returns (quotient, remainder) with
    /// self = (x - c) * quotient + remainder, all arithmetic exact.
    pub fn div_linear(&self, c: &BigInt) -> (Self, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * c;
            if i == 0 {
                return (Self::from_coeffs(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Coefficients a_q with self = sum_q a_q * (x)_q, where (x)_q is the
    /// falling factorial x(x-1)...(x-q+1). Obtained by dividing successively
    /// by (x - 0), (x - 1), ... and reading the remainders.
    pub fn falling_factorial_coeffs(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut p = self.clone();
        let mut point = BigInt::zero();
        while !p.is_zero() {
            let (q, r) = p.div_linear(&point);
            out.push(r);
            p = q;
            point += 1;
        }
        out
    }
}
