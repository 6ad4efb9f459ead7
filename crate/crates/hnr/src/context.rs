//! The computation context: a validated parameter set plus data shared by
//! every element built over it (symmetric functions of u, the Lagrange
//! family, trace weights, and the basis dimension guard).

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::color::ColorVector;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{lagrange_polynomial, UniPolynomial};
use crate::scalar::{ParameterSet, Scalar};

/// Hard ceiling on the basis dimension r^n * n! a context may have. Products
/// stay exact at any size; the guard keeps accidental huge inputs from
/// consuming the machine.
pub const DIMENSION_GUARD: u64 = 1_000_000;

struct ContextInner {
    params: ParameterSet,
    q_defect: Scalar,
    sigma: Vec<Scalar>,
    lagrange: Vec<UniPolynomial>,
    gamma: Vec<Scalar>,
    dimension: u64,
    colors: OnceLock<Vec<ColorVector>>,
    perms: OnceLock<Vec<Permutation>>,
    trace_validated: OnceLock<()>,
}

/// A cheaply clonable handle to one algebra's parameters and caches. Two
/// contexts are interchangeable exactly when their parameter sets are equal.
#[derive(Clone)]
pub struct Context {
    inner: Arc<ContextInner>,
}

impl Context {
    /// Validates the size guard and precomputes the shared tables.
    pub fn new(params: ParameterSet) -> Result<Self> {
        let n = params.n();
        let r = params.r();
        if r > u8::MAX as usize || n > u8::MAX as usize {
            return Err(Error::SizeGuard(format!(
                "n = {n}, r = {r} exceed the supported index range"
            )));
        }
        let mut dimension: u128 = 1;
        for _ in 0..n {
            dimension = dimension.saturating_mul(r as u128);
        }
        for f in 1..=n {
            dimension = dimension.saturating_mul(f as u128);
        }
        if dimension > DIMENSION_GUARD as u128 {
            return Err(Error::SizeGuard(format!(
                "basis dimension r^n n! = {dimension} exceeds the guard {DIMENSION_GUARD}"
            )));
        }
        let sigma = (0..=r)
            .map(|j| params.elementary_symmetric(j))
            .collect::<Result<Vec<_>>>()?;
        let lagrange = (1..=r)
            .map(|c| lagrange_polynomial(&params, c))
            .collect::<Result<Vec<_>>>()?;
        let gamma = lagrange.iter().map(|l| l.coeff(0)).collect();
        let q_defect = params.q_defect();
        Ok(Context {
            inner: Arc::new(ContextInner {
                params,
                q_defect,
                sigma,
                lagrange,
                gamma,
                dimension: dimension as u64,
                colors: OnceLock::new(),
                perms: OnceLock::new(),
                trace_validated: OnceLock::new(),
            }),
        })
    }

    pub fn params(&self) -> &ParameterSet {
        &self.inner.params
    }

    pub fn n(&self) -> usize {
        self.inner.params.n()
    }

    pub fn r(&self) -> usize {
        self.inner.params.r()
    }

    pub fn q(&self) -> &Scalar {
        self.inner.params.q()
    }

    /// q - q^{-1}.
    pub fn q_defect(&self) -> &Scalar {
        &self.inner.q_defect
    }

    pub fn u_color(&self, c: u8) -> &Scalar {
        self.inner.params.u_color(c)
    }

    /// sigma_j(u_1..u_r) from the precomputed table, 0 <= j <= r.
    pub fn sigma(&self, j: usize) -> &Scalar {
        &self.inner.sigma[j]
    }

    /// The Lagrange polynomial L_c for a 1-based color.
    pub fn lagrange(&self, c: u8) -> &UniPolynomial {
        &self.inner.lagrange[(c as usize) - 1]
    }

    /// The trace weight of one strand color: gamma_c = L_c(0).
    pub fn gamma(&self, c: u8) -> &Scalar {
        &self.inner.gamma[(c as usize) - 1]
    }

    /// The rank of the algebra as a free module: r^n * n!.
    pub fn dimension(&self) -> u64 {
        self.inner.dimension
    }

    /// Whether elements of the two contexts may be combined.
    pub fn same_as(&self, other: &Context) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.params == other.inner.params
    }

    /// All r^n color vectors, built once per context.
    pub fn colors(&self) -> &[ColorVector] {
        self.inner
            .colors
            .get_or_init(|| ColorVector::all(self.n(), self.r()))
    }

    /// All n! permutations in lexicographic order, built once per context.
    pub fn perms(&self) -> &[Permutation] {
        self.inner
            .perms
            .get_or_init(|| Permutation::all(self.n()))
    }

    pub(crate) fn trace_validated_cell(&self) -> &OnceLock<()> {
        &self.inner.trace_validated
    }
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Context {}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("params", &self.inner.params)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn ctx(n: usize, r: usize, q: &str, u: &[&str]) -> Context {
        let p = ParameterSet::new(n, r, s(q), u.iter().map(|t| s(t)).collect()).unwrap();
        Context::new(p).unwrap()
    }

    #[test]
    fn precomputed_tables_match_direct_computation() {
        let c = ctx(3, 2, "3/2", &["1", "-1"]);
        assert_eq!(c.dimension(), 8 * 6);
        assert_eq!(*c.q_defect(), s("5/6"));
        assert_eq!(*c.sigma(0), s("1"));
        assert_eq!(*c.sigma(1), s("0"));
        assert_eq!(*c.sigma(2), s("-1"));
        // gamma_c = L_c(0): L_1 = (1+X)/2, L_2 = (1-X)/2 at u = (1,-1).
        assert_eq!(*c.gamma(1), s("1/2"));
        assert_eq!(*c.gamma(2), s("1/2"));
        assert_eq!(c.colors().len(), 8);
        assert_eq!(c.perms().len(), 6);
    }

    #[test]
    fn dimension_guard_rejects_huge_contexts() {
        // 5^10 * 10! is far beyond the guard.
        let u: Vec<Scalar> = (1..=5).map(|i| Scalar::from_int(i)).collect();
        let p = ParameterSet::new(10, 5, s("2"), u).unwrap();
        assert!(matches!(Context::new(p).unwrap_err(), Error::SizeGuard(_)));
        // 2^10 * 10! = 3715891200 also exceeds it.
        let p = ParameterSet::new(10, 2, s("2"), vec![s("1"), s("-1")]).unwrap();
        assert!(matches!(Context::new(p).unwrap_err(), Error::SizeGuard(_)));
        // A skinny context passes: 2^1 * 1! = 2.
        let p = ParameterSet::new(1, 2, s("2"), vec![s("1"), s("-1")]).unwrap();
        assert!(Context::new(p).is_ok());
    }

    #[test]
    fn context_equality_is_parameter_equality() {
        let a = ctx(2, 2, "2", &["1", "-1"]);
        let b = ctx(2, 2, "2", &["1", "-1"]);
        let c = ctx(2, 2, "3", &["1", "-1"]);
        assert!(a.same_as(&b));
        assert!(!a.same_as(&c));
        assert_eq!(a.clone(), a);
    }
}
