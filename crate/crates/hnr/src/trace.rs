//! The canonical trace and the symmetrizing-form machinery built on it.
//!
//! The trace picks out the coefficient of t^0 g_id: on the idempotent basis
//! it reads tau(b_k g_w) = [w = id] * prod_i L_{k_i}(0). Whenever
//! sigma_r = u_1 ... u_r is nonzero the trace is symmetrizing: the basis
//! {t^c g_w} has explicit duals, and the Gram pairing of duals against the
//! basis is exactly the identity matrix. When some u_c = 0 the dual
//! construction divides by sigma_r and is refused.

use serde::Serialize;

use crate::context::Context;
use crate::convert::{to_coordinates, BasisTag, CoordLabel};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::exec;
use crate::perm::Permutation;
use crate::poly::UniPolynomial;
use crate::sample::{sample_colors, sample_element, seeded_rng};
use crate::scalar::{ParameterSet, Scalar};

/// How many idempotents the one-time trace self-check expands in full; past
/// this, a fixed-seed sample is used instead.
const VALIDATION_FULL_LIMIT: usize = 4096;

fn gamma_weight(ctx: &Context, colors: &[u8]) -> Scalar {
    let mut weight = Scalar::one();
    for &c in colors {
        weight = &weight * ctx.gamma(c);
    }
    weight
}

/// First-use self-check: the coefficient formula must agree with expanding
/// idempotents into spectral monomials and reading the constant term.
fn validate_trace_tables(ctx: &Context) {
    ctx.trace_validated_cell().get_or_init(|| {
        let zero_label = CoordLabel {
            head: vec![0u8; ctx.n()].into(),
            perm: Permutation::identity(ctx.n()),
        };
        let total = (ctx.r() as u64).saturating_pow(ctx.n() as u32);
        let sample: Vec<crate::color::ColorVector> = if total <= VALIDATION_FULL_LIMIT as u64 {
            ctx.colors().to_vec()
        } else {
            let mut rng = seeded_rng(0x7ace);
            (0..64).map(|_| sample_colors(ctx.n(), ctx.r(), &mut rng)).collect()
        };
        for k in &sample {
            let b = AlgebraElement::idempotent(ctx, k).expect("colors fit the context");
            let coords = to_coordinates(&b, BasisTag::Tg);
            let constant = coords
                .entries
                .get(&zero_label)
                .cloned()
                .unwrap_or_else(Scalar::zero);
            assert_eq!(
                constant,
                gamma_weight(ctx, k.as_slice()),
                "trace weight table disagrees with monomial expansion at {k:?}"
            );
        }
    });
}

/// The trace functional: the coefficient of t^0 g_id, i.e. the gamma-weighted
/// sum of identity-permutation coefficients in normal form.
pub fn tau(x: &AlgebraElement) -> Scalar {
    let ctx = x.context();
    validate_trace_tables(ctx);
    let mut acc = Scalar::zero();
    for (word, c) in x.terms() {
        if !word.perm.is_identity() {
            continue;
        }
        acc += &(c * &gamma_weight(ctx, word.colors.as_slice()));
    }
    acc
}

/// Trace of the out-of-range power t_i^{r+s} (0 <= s < r), paired with its
/// closed form (-1)^{r+1} sigma_r h_s. Returns (traced, closed) so callers
/// can compare the two routes.
pub fn tau_power_check(ctx: &Context, i: usize, s: usize) -> Result<(Scalar, Scalar)> {
    if i == 0 || i > ctx.n() {
        return Err(Error::IndexOutOfRange(format!(
            "strand {i} outside 1..={}",
            ctx.n()
        )));
    }
    if s >= ctx.r() {
        return Err(Error::OutOfRange(format!(
            "offset {s} must stay below r = {}",
            ctx.r()
        )));
    }
    let traced = tau(&AlgebraElement::t_gen(ctx, i)?.pow((ctx.r() + s) as u32));
    let closed = &(&parity_sign(ctx.r() + 1) * ctx.sigma(ctx.r()))
        * &ctx.params().complete_homogeneous(s);
    Ok((traced, closed))
}

fn parity_sign(k: usize) -> Scalar {
    Scalar::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// The degree-d selector: S_d(X) = sum_{j=0}^{r-d-1} (-1)^j sigma_j X^{r-d-j}.
/// Tracing t_i^c S_d(t_i) yields (-1)^{r+1} sigma_r exactly when c = d.
pub fn selector_polynomial(ctx: &Context, d: usize) -> Result<UniPolynomial> {
    if d >= ctx.r() {
        return Err(Error::OutOfRange(format!(
            "selector degree {d} must stay below r = {}",
            ctx.r()
        )));
    }
    let mut coeffs = vec![Scalar::zero(); ctx.r() - d + 1];
    for j in 0..=(ctx.r() - d - 1) {
        coeffs[ctx.r() - d - j] = &parity_sign(j) * ctx.sigma(j);
    }
    Ok(UniPolynomial::from_coeffs(coeffs))
}

/// The dual of the basis element t^c g_w under the trace pairing:
/// g_{w^{-1}} times, for every strand with c_i != 0, the normalized selector
/// ((-1)^{r+1} / sigma_r) S_{c_i}(t_i). Requires sigma_r != 0.
pub fn dual_basis_element(
    ctx: &Context,
    exps: &[u8],
    w: &Permutation,
) -> Result<AlgebraElement> {
    if !ctx.params().is_symmetrizing() {
        return Err(Error::NotSymmetrizing);
    }
    if exps.len() != ctx.n() || w.n() != ctx.n() {
        return Err(Error::BadLabel(format!(
            "label sized for {} strands in a context with n = {}",
            exps.len(),
            ctx.n()
        )));
    }
    if let Some(&bad) = exps.iter().find(|&&e| e as usize >= ctx.r()) {
        return Err(Error::BadLabel(format!(
            "exponent {bad} must stay below r = {}",
            ctx.r()
        )));
    }
    let scale = &parity_sign(ctx.r() + 1) / ctx.sigma(ctx.r());
    let mut acc = AlgebraElement::g_word(ctx, &w.inverse())?;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let poly = selector_polynomial(ctx, e as usize)?.scale(&scale);
        acc = acc.try_mul(&AlgebraElement::univariate_at(ctx, &poly, i + 1)?)?;
    }
    Ok(acc)
}

/// One off-diagonal (or wrong-diagonal) entry found by [`gram_check`].
#[derive(Clone, Debug, Serialize)]
pub struct GramFailure {
    pub row: CoordLabel,
    pub col: CoordLabel,
    pub value: Scalar,
}

/// Outcome of pairing every dual against every basis element.
#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub params: ParameterSet,
    pub dimension: u64,
    pub checked: u64,
    pub is_identity: bool,
    pub failures: Vec<GramFailure>,
}

/// Maximum number of failing Gram entries retained in a report.
const GRAM_FAILURE_CAP: usize = 20;

/// Maximum basis size [`gram_check`] is willing to pair in full.
const GRAM_DIMENSION_LIMIT: u64 = 1000;

/// Pairs the full dual family against the full basis {t^c g_w} and checks
/// the resulting matrix is the identity. Refused above 1000 basis elements
/// or when the trace is not symmetrizing.
pub fn gram_check(ctx: &Context) -> Result<GramReport> {
    if !ctx.params().is_symmetrizing() {
        return Err(Error::NotSymmetrizing);
    }
    let dimension = ctx.dimension();
    if dimension > GRAM_DIMENSION_LIMIT {
        return Err(Error::SizeGuard(format!(
            "gram check on {dimension} basis elements exceeds the limit of {GRAM_DIMENSION_LIMIT}"
        )));
    }
    let mut labels = Vec::with_capacity(dimension as usize);
    for k in ctx.colors() {
        let exps: Vec<u8> = k.as_slice().iter().map(|&c| c - 1).collect();
        for w in ctx.perms() {
            labels.push(CoordLabel {
                head: exps.clone().into(),
                perm: w.clone(),
            });
        }
    }
    let basis: Vec<AlgebraElement> = labels
        .iter()
        .map(|l| {
            let exps: Vec<u32> = l.head.iter().map(|&e| e as u32).collect();
            Ok(AlgebraElement::t_monomial(ctx, &exps)?
                .try_mul(&AlgebraElement::g_word(ctx, &l.perm)?)?)
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<GramFailure>> = exec::map_collect(
        (0..labels.len()).collect(),
        |i| {
            let dual = dual_basis_element(ctx, &labels[i].head, &labels[i].perm)
                .expect("labels come from the context");
            let mut bad = Vec::new();
            for (j, b) in basis.iter().enumerate() {
                let value = tau(&dual.try_mul(b).expect("same context"));
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                if value != expected {
                    bad.push(GramFailure {
                        row: labels[i].clone(),
                        col: labels[j].clone(),
                        value,
                    });
                }
            }
            bad
        },
    );
    let mut failures: Vec<GramFailure> = rows.into_iter().flatten().collect();
    let is_identity = failures.is_empty();
    failures.truncate(GRAM_FAILURE_CAP);
    Ok(GramReport {
        params: ctx.params().clone(),
        dimension,
        checked: dimension * dimension,
        is_identity,
        failures,
    })
}

/// Samples `trials` element pairs and checks the trace property
/// tau(xy) = tau(yx) on each. Deterministic per seed.
pub fn trace_property_check(ctx: &Context, trials: usize, seed: u64) -> Result<bool> {
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be positive".into()));
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..trials {
        let x = sample_element(ctx, 6, &mut rng);
        let y = sample_element(ctx, 6, &mut rng);
        if tau(&(&x * &y)) != tau(&(&y * &x)) {
            return Ok(false);
        }
    }
    Ok(true)
}
