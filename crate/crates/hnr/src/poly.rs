//! Univariate polynomials over the rationals, plus the interpolation
//! polynomials attached to a parameter set: the Lagrange family L_c with
//! L_c(u_{c'}) = [c = c'], and its Vandermonde-scaled variant F_c = delta L_c
//! with F_c(u_{c'}) = [c = c'] delta.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{ParameterSet, Scalar};

/// A dense univariate polynomial; `coeffs[d]` is the coefficient of X^d and
/// the last stored coefficient is nonzero (the zero polynomial stores none).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPolynomial {
    coeffs: Vec<Scalar>,
}

impl UniPolynomial {
    pub fn zero() -> Self {
        UniPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(value: Scalar) -> Self {
        UniPolynomial { coeffs: vec![value] }.trimmed()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// The monomial value * X^degree.
    pub fn monomial(value: Scalar, degree: usize) -> Self {
        if value.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); degree + 1];
        coeffs[degree] = value;
        UniPolynomial { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        UniPolynomial { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of X^d (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> Scalar {
        self.coeffs.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|d| &self.coeff(d) + &other.coeff(d)).collect();
        UniPolynomial { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|d| &self.coeff(d) - &other.coeff(d)).collect();
        UniPolynomial { coeffs }.trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UniPolynomial { coeffs }.trimmed()
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        UniPolynomial { coeffs }.trimmed()
    }

    /// prod (X - root) over the given roots.
    pub fn from_roots(roots: &[Scalar]) -> Self {
        let mut acc = Self::one();
        for root in roots {
            let factor = Self::from_coeffs(vec![-root, Scalar::one()]);
            acc = acc.mul(&factor);
        }
        acc
    }
}

/// The Lagrange interpolation polynomial L_c for the nodes u_1..u_r:
/// degree r-1 with L_c(u_{c'}) = [c = c']. The color c is 1-based.
pub fn lagrange_polynomial(params: &ParameterSet, c: usize) -> Result<UniPolynomial> {
    let r = params.r();
    if c == 0 || c > r {
        return Err(Error::IndexOutOfRange(format!(
            "color {c} lies outside 1..={r}"
        )));
    }
    let uc = params.u_color(c as u8);
    let mut acc = UniPolynomial::one();
    for other in 1..=r {
        if other == c {
            continue;
        }
        let uo = params.u_color(other as u8);
        let denom = &(uc - uo);
        let inv = denom.inverse().expect("u values validated distinct");
        // (X - u_other) / (u_c - u_other)
        let factor = UniPolynomial::from_coeffs(vec![&(-uo) * &inv, inv]);
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// The polynomial F_c of degree r-1 with F_c(u_{c'}) = [c = c'] delta, found
/// by solving the Vandermonde system directly. Equals delta * L_c, which the
/// tests verify against the independent Lagrange construction.
pub fn f_polynomial(params: &ParameterSet, c: usize) -> Result<UniPolynomial> {
    let r = params.r();
    if c == 0 || c > r {
        return Err(Error::IndexOutOfRange(format!(
            "color {c} lies outside 1..={r}"
        )));
    }
    let delta = params.delta();
    let matrix: Vec<Vec<Scalar>> = (1..=r)
        .map(|cp| {
            let ucp = params.u_color(cp as u8);
            (0..r).map(|d| ucp.pow(d as u32)).collect()
        })
        .collect();
    let rhs: Vec<Scalar> = (1..=r)
        .map(|cp| if cp == c { delta.clone() } else { Scalar::zero() })
        .collect();
    let coeffs = linalg::solve(&matrix, &rhs)?;
    Ok(UniPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn params(r: usize, u: &[&str]) -> ParameterSet {
        ParameterSet::new(2, r, s("2"), u.iter().map(|t| s(t)).collect()).unwrap()
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let p = UniPolynomial::from_coeffs(vec![s("1"), s("-2"), s("1")]); // (X-1)^2
        assert_eq!(p.eval(&s("1")), s("0"));
        assert_eq!(p.eval(&s("3")), s("4"));
        assert_eq!(p.degree(), Some(2));
        let q = UniPolynomial::from_coeffs(vec![s("-1"), s("1")]); // X - 1
        assert_eq!(q.mul(&q), p);
        assert_eq!(p.sub(&q.mul(&q)), UniPolynomial::zero());
        assert_eq!(p.add(&UniPolynomial::zero()), p);
        assert_eq!(p.scale(&s("3")).coeff(2), s("3"));
        assert!(UniPolynomial::constant(s("0")).is_zero());
    }

    #[test]
    fn from_roots_expands_with_elementary_symmetric_signs() {
        // Coefficient of X^d in prod (X - u_i) is (-1)^{r-d} sigma_{r-d},
        // cross-checking polynomial multiplication against the independent
        // symmetric-function recurrence.
        let p = params(3, &["1", "2", "3"]);
        let poly = UniPolynomial::from_roots(p.u());
        for d in 0..=3 {
            let mut expected = p.elementary_symmetric(3 - d).unwrap();
            if (3 - d) % 2 == 1 {
                expected = -expected;
            }
            assert_eq!(poly.coeff(d), expected);
        }
    }

    #[test]
    fn lagrange_basis_at_two_colors() {
        // r = 2, u = (1, -1): L_1 = (1 + X)/2, L_2 = (1 - X)/2.
        let p = params(2, &["1", "-1"]);
        let l1 = lagrange_polynomial(&p, 1).unwrap();
        let l2 = lagrange_polynomial(&p, 2).unwrap();
        assert_eq!(l1.coeffs(), &[s("1/2"), s("1/2")]);
        assert_eq!(l2.coeffs(), &[s("1/2"), s("-1/2")]);
        assert!(lagrange_polynomial(&p, 0).is_err());
        assert!(lagrange_polynomial(&p, 3).is_err());
    }

    #[test]
    fn lagrange_family_interpolates_and_sums_to_one() {
        for p in [
            params(2, &["1", "-1"]),
            params(3, &["1", "2", "3"]),
            params(4, &["1/2", "-3", "7", "2/5"]),
        ] {
            let mut total = UniPolynomial::zero();
            for c in 1..=p.r() {
                let lc = lagrange_polynomial(&p, c).unwrap();
                assert_eq!(lc.degree(), Some(p.r() - 1));
                for cp in 1..=p.r() {
                    let expected = if c == cp { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(lc.eval(p.u_color(cp as u8)), expected);
                }
                total = total.add(&lc);
            }
            // Partition of unity: the L_c sum to the constant 1.
            assert_eq!(total, UniPolynomial::one());
        }
    }

    #[test]
    fn f_polynomials_at_two_colors() {
        // r = 2, u = (2, 5): delta = 3, F_1 = 5 - X, F_2 = X - 2.
        let p = params(2, &["2", "5"]);
        assert_eq!(f_polynomial(&p, 1).unwrap().coeffs(), &[s("5"), s("-1")]);
        assert_eq!(f_polynomial(&p, 2).unwrap().coeffs(), &[s("-2"), s("1")]);
    }

    #[test]
    fn f_equals_delta_times_lagrange() {
        // Two independent routes: Vandermonde solve vs. Lagrange product.
        for p in [
            params(2, &["1", "-1"]),
            params(3, &["1/2", "-3", "7"]),
            params(4, &["0", "1", "-2", "1/3"]),
        ] {
            let delta = p.delta();
            for c in 1..=p.r() {
                assert_eq!(
                    f_polynomial(&p, c).unwrap(),
                    lagrange_polynomial(&p, c).unwrap().scale(&delta)
                );
            }
        }
    }
}
