//! Relation and identity verification suites.
//!
//! Four suites machine-check the algebra at a given parameter set: the
//! defining presentation over T_i/t_i (including the closed form of the
//! cross-relation sum), the braid-spectral presentation over g_i/t_i, the
//! idempotent presentation over g_i/b_k, and a battery of derived
//! identities — straightening, triangularity, trace orthogonality, duals,
//! orbit idempotents. Every check compares canonical normal forms; a
//! failing check carries the offending element's serialization as its
//! witness. Checks inside a suite run independently (in parallel when the
//! `parallel` feature is on) and are reported in a fixed order.

use std::sync::Arc;

use serde::Serialize;

use crate::color::ColorVector;
use crate::context::Context;
use crate::convert::{to_coordinates, BasisTag};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::exec;
use crate::fixed::{conjugated_idempotent, orbit_idempotent};
use crate::perm::Permutation;
use crate::poly::{f_polynomial, UniPolynomial};
use crate::sample::{
    sample_colors, sample_element, sample_parameters, sample_permutation, sample_scalar,
    seeded_rng,
};
use crate::scalar::{ParameterSet, Scalar};
use crate::trace::{dual_basis_element, selector_polynomial, tau, tau_power_check};

use rand::Rng;

/// One relation family, checked over all of its instances.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub id: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<ParameterSet>,
    pub checks: Vec<RelationCheck>,
    pub pass: bool,
}

type CheckFn = Box<dyn Fn() -> Option<String> + Send + Sync>;

fn run_suite(
    suite: &str,
    context: Option<ParameterSet>,
    checks: Vec<(String, CheckFn)>,
) -> VerificationReport {
    let checks: Vec<RelationCheck> = exec::map_collect(checks, |(id, run)| {
        let witness = run();
        RelationCheck {
            id,
            ok: witness.is_none(),
            witness,
        }
    });
    let pass = checks.iter().all(|c| c.ok);
    VerificationReport {
        suite: suite.to_string(),
        context,
        checks,
        pass,
    }
}

fn witness_element(detail: String, offending: &AlgebraElement) -> String {
    format!(
        "{detail}; offending element: {}",
        serde_json::to_string(offending).unwrap_or_else(|_| "<unserializable>".into())
    )
}

fn expect_zero(x: &AlgebraElement, detail: impl FnOnce() -> String) -> Option<String> {
    if x.is_zero() {
        None
    } else {
        Some(witness_element(detail(), x))
    }
}

fn expect_eq(
    lhs: &AlgebraElement,
    rhs: &AlgebraElement,
    detail: impl FnOnce() -> String,
) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(witness_element(detail(), &(lhs - rhs)))
    }
}

fn expect_scalar(lhs: &Scalar, rhs: &Scalar, detail: impl FnOnce() -> String) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(format!("{}; got {lhs}, expected {rhs}", detail()))
    }
}

/// Evaluates a univariate polynomial at an arbitrary element by Horner's
/// rule.
fn eval_at_element(f: &UniPolynomial, x: &AlgebraElement) -> AlgebraElement {
    let one = AlgebraElement::one(x.context());
    let mut acc = AlgebraElement::zero(x.context());
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * x) + &one.scale(c);
    }
    acc
}

/// The cross-relation sum of the defining presentation:
/// delta^{-2} sum_{c1<c2} (u_{c2} - u_{c1})(q - q^{-1}) F_{c1}(lo) F_{c2}(hi),
/// with u, q, delta, F all taken from `rel`.
fn cross_sum(
    rel: &ParameterSet,
    lo: &AlgebraElement,
    hi: &AlgebraElement,
) -> Result<AlgebraElement> {
    let ctx = lo.context();
    let delta = rel.delta();
    let dd_inv = (&delta * &delta)
        .inverse()
        .expect("distinct u values make delta nonzero");
    let defect = rel.q_defect();
    let mut f_lo = Vec::with_capacity(rel.r());
    let mut f_hi = Vec::with_capacity(rel.r());
    for c in 1..=rel.r() {
        let f = f_polynomial(rel, c)?;
        f_lo.push(eval_at_element(&f, lo));
        f_hi.push(eval_at_element(&f, hi));
    }
    let mut acc = AlgebraElement::zero(ctx);
    for c1 in 0..rel.r() {
        for c2 in (c1 + 1)..rel.r() {
            let coeff = &(&(&rel.u()[c2] - &rel.u()[c1]) * &defect) * &dd_inv;
            acc = &acc + &(&f_lo[c1] * &f_hi[c2]).scale(&coeff);
        }
    }
    Ok(acc)
}

/// The eight relation families of the defining presentation, phrased over
/// arbitrary images of the generators. `rel` supplies the u-tuple and q the
/// relations refer to.
fn definition_checks(
    ctx: &Context,
    t: Arc<Vec<AlgebraElement>>,
    big_t: Arc<Vec<AlgebraElement>>,
    rel: ParameterSet,
) -> Vec<(String, CheckFn)> {
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    let n = rel.n();

    {
        let big_t = big_t.clone();
        let ctx = ctx.clone();
        let rel = rel.clone();
        checks.push((
            "braid-quadratic".into(),
            Box::new(move || {
                let one = AlgebraElement::one(&ctx);
                let q = rel.q().clone();
                let q_inv = q.inverse().expect("q is validated nonzero");
                for (idx, x) in big_t.iter().enumerate() {
                    let lhs = &(x - &one.scale(&q)) * &(x + &one.scale(&q_inv));
                    let bad = expect_zero(&lhs, || format!("(T_{0} - q)(T_{0} + 1/q)", idx + 1));
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let t = t.clone();
        let rel = rel.clone();
        checks.push((
            "spectral-annihilator".into(),
            Box::new(move || {
                let char_poly = UniPolynomial::from_roots(rel.u());
                for (idx, x) in t.iter().enumerate() {
                    let bad = expect_zero(&eval_at_element(&char_poly, x), || {
                        format!("prod_c (t_{} - u_c)", idx + 1)
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let big_t = big_t.clone();
        checks.push((
            "braid-relation".into(),
            Box::new(move || {
                for i in 0..big_t.len().saturating_sub(1) {
                    let (a, b) = (&big_t[i], &big_t[i + 1]);
                    let bad = expect_eq(&(&(a * b) * a), &(&(b * a) * b), || {
                        format!("T_{0} T_{1} T_{0} = T_{1} T_{0} T_{1}", i + 1, i + 2)
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let big_t = big_t.clone();
        checks.push((
            "distant-commutation".into(),
            Box::new(move || {
                for i in 0..big_t.len() {
                    for j in (i + 2)..big_t.len() {
                        let (a, b) = (&big_t[i], &big_t[j]);
                        let bad = expect_eq(&(a * b), &(b * a), || {
                            format!("T_{} T_{} commute", i + 1, j + 1)
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let t = t.clone();
        checks.push((
            "spectral-commutation".into(),
            Box::new(move || {
                for i in 0..t.len() {
                    for j in (i + 1)..t.len() {
                        let (a, b) = (&t[i], &t[j]);
                        let bad = expect_eq(&(a * b), &(b * a), || {
                            format!("t_{} t_{} commute", i + 1, j + 1)
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let t = t.clone();
        let big_t = big_t.clone();
        checks.push((
            "mixed-commutation".into(),
            Box::new(move || {
                for j in 0..big_t.len() {
                    for k in 0..t.len() {
                        if k == j || k == j + 1 {
                            continue;
                        }
                        let bad = expect_eq(&(&big_t[j] * &t[k]), &(&t[k] * &big_t[j]), || {
                            format!("T_{} t_{} commute", j + 1, k + 1)
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let t = t.clone();
        let big_t = big_t.clone();
        let rel = rel.clone();
        checks.push((
            "cross-upper".into(),
            Box::new(move || {
                for j in 0..n.saturating_sub(1) {
                    let sum = cross_sum(&rel, &t[j], &t[j + 1]).expect("valid relation parameters");
                    let lhs = &big_t[j] * &t[j + 1];
                    let rhs = &(&t[j] * &big_t[j]) + &sum;
                    let bad = expect_eq(&lhs, &rhs, || {
                        format!("T_{0} t_{1} = t_{0} T_{0} + cross sum", j + 1, j + 2)
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let t = t.clone();
        let big_t = big_t.clone();
        let rel = rel.clone();
        checks.push((
            "cross-lower".into(),
            Box::new(move || {
                for j in 0..n.saturating_sub(1) {
                    let sum = cross_sum(&rel, &t[j], &t[j + 1]).expect("valid relation parameters");
                    let lhs = &big_t[j] * &t[j];
                    let rhs = &(&t[j + 1] * &big_t[j]) - &sum;
                    let bad = expect_eq(&lhs, &rhs, || {
                        format!("T_{0} t_{0} = t_{1} T_{0} - cross sum", j + 1, j + 2)
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    checks
}

/// Checks the eight relation families of the defining presentation on
/// caller-supplied generator images living in a common algebra. Used for
/// isomorphism checks where the relations refer to a different u-tuple
/// than the ambient algebra's.
pub fn verify_definition_images(
    t_images: &[AlgebraElement],
    hecke_images: &[AlgebraElement],
    relation_params: &ParameterSet,
) -> Result<VerificationReport> {
    let n = relation_params.n();
    if t_images.len() != n || hecke_images.len() != n - 1 {
        return Err(Error::BadShape(format!(
            "expected {} spectral and {} braid images, got {} and {}",
            n,
            n - 1,
            t_images.len(),
            hecke_images.len()
        )));
    }
    let ctx = t_images[0].context().clone();
    if t_images
        .iter()
        .chain(hecke_images)
        .any(|x| !x.context().same_as(&ctx))
    {
        return Err(Error::ContextMismatch);
    }
    let checks = definition_checks(
        &ctx,
        Arc::new(t_images.to_vec()),
        Arc::new(hecke_images.to_vec()),
        relation_params.clone(),
    );
    Ok(run_suite(
        "definition-images",
        Some(relation_params.clone()),
        checks,
    ))
}

/// Verifies the defining presentation on the standard generators, plus the
/// closed form of the cross-relation sum: the F-polynomial double sum
/// equals -(q - q^{-1}) sum_{k_i < k_{i+1}} (u_{k_i} - u_{k_{i+1}}) b_k.
pub fn verify_definition_presentation(ctx: &Context) -> Result<VerificationReport> {
    let t: Vec<AlgebraElement> = (1..=ctx.n())
        .map(|i| AlgebraElement::t_gen(ctx, i))
        .collect::<Result<_>>()?;
    let big_t: Vec<AlgebraElement> = (1..ctx.n())
        .map(|i| AlgebraElement::hecke_gen(ctx, i))
        .collect::<Result<_>>()?;
    let mut checks = definition_checks(ctx, Arc::new(t), Arc::new(big_t), ctx.params().clone());
    {
        let ctx = ctx.clone();
        checks.push((
            "cross-sum-closed-form".into(),
            Box::new(move || {
                for i in 1..ctx.n() {
                    let lo = AlgebraElement::t_gen(&ctx, i).expect("index in range");
                    let hi = AlgebraElement::t_gen(&ctx, i + 1).expect("index in range");
                    let sum = cross_sum(ctx.params(), &lo, &hi).expect("valid parameters");
                    let closed = -&AlgebraElement::b_defect(&ctx, i).expect("index in range");
                    let bad = expect_eq(&sum, &closed, || {
                        format!("cross sum at strand {i} equals its closed form")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    Ok(run_suite(
        "definition",
        Some(ctx.params().clone()),
        checks,
    ))
}

/// Verifies the braid-spectral presentation: braid and commutation
/// relations for g_i, the spectral annihilator and commutation for t_i,
/// the quadratic relation g_i^2 = 1 + (q - q^{-1}) e_i g_i, and the strand
/// permutation rule g_j t_i = t_{s_j(i)} g_j.
pub fn verify_yokonuma_presentation(ctx: &Context) -> Result<VerificationReport> {
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    {
        let ctx = ctx.clone();
        checks.push((
            "spectral-annihilator".into(),
            Box::new(move || {
                let char_poly = UniPolynomial::from_roots(ctx.params().u());
                for i in 1..=ctx.n() {
                    let value = AlgebraElement::univariate_at(&ctx, &char_poly, i)
                        .expect("index in range");
                    let bad = expect_zero(&value, || format!("prod_c (t_{i} - u_c)"));
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "spectral-commutation".into(),
            Box::new(move || {
                for i in 1..=ctx.n() {
                    for j in (i + 1)..=ctx.n() {
                        let a = AlgebraElement::t_gen(&ctx, i).expect("index in range");
                        let b = AlgebraElement::t_gen(&ctx, j).expect("index in range");
                        let bad =
                            expect_eq(&(&a * &b), &(&b * &a), || format!("t_{i} t_{j} commute"));
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "strand-permutation".into(),
            Box::new(move || {
                for j in 1..ctx.n() {
                    let g = AlgebraElement::braid_gen(&ctx, j).expect("index in range");
                    for i in 1..=ctx.n() {
                        let target = if i == j {
                            j + 1
                        } else if i == j + 1 {
                            j
                        } else {
                            i
                        };
                        let lhs = &g * &AlgebraElement::t_gen(&ctx, i).expect("index in range");
                        let rhs =
                            &AlgebraElement::t_gen(&ctx, target).expect("index in range") * &g;
                        let bad =
                            expect_eq(&lhs, &rhs, || format!("g_{j} t_{i} = t_{target} g_{j}"));
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    checks.extend(braid_generator_checks(ctx));
    Ok(run_suite(
        "yokonuma",
        Some(ctx.params().clone()),
        checks,
    ))
}

/// The three relation families shared by the braid-spectral and the
/// idempotent presentations: distant commutation, the braid relation, and
/// the quadratic relation for g_i.
fn braid_generator_checks(ctx: &Context) -> Vec<(String, CheckFn)> {
    let mut checks: Vec<(String, CheckFn)> = Vec::new();
    {
        let ctx = ctx.clone();
        checks.push((
            "distant-commutation".into(),
            Box::new(move || {
                for i in 1..ctx.n() {
                    for j in (i + 2)..ctx.n() {
                        let a = AlgebraElement::braid_gen(&ctx, i).expect("index in range");
                        let b = AlgebraElement::braid_gen(&ctx, j).expect("index in range");
                        let bad =
                            expect_eq(&(&a * &b), &(&b * &a), || format!("g_{i} g_{j} commute"));
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "braid-relation".into(),
            Box::new(move || {
                for i in 1..ctx.n().saturating_sub(1) {
                    let a = AlgebraElement::braid_gen(&ctx, i).expect("index in range");
                    let b = AlgebraElement::braid_gen(&ctx, i + 1).expect("index in range");
                    let bad = expect_eq(&(&(&a * &b) * &a), &(&(&b * &a) * &b), || {
                        format!("g_{0} g_{1} g_{0} = g_{1} g_{0} g_{1}", i, i + 1)
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "braid-quadratic".into(),
            Box::new(move || {
                let one = AlgebraElement::one(&ctx);
                let defect = ctx.q_defect().clone();
                for i in 1..ctx.n() {
                    let g = AlgebraElement::braid_gen(&ctx, i).expect("index in range");
                    let e = AlgebraElement::match_idempotent(&ctx, i).expect("index in range");
                    let rhs = &one + &(&e * &g).scale(&defect);
                    let bad = expect_eq(&(&g * &g), &rhs, || {
                        format!("g_{i}^2 = 1 + (q - 1/q) e_{i} g_{i}")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    checks
}

/// Verifies the idempotent presentation: the shared g_i relations plus
/// orthogonality of the b_k, the place-permutation rule, and the unit sum.
pub fn verify_b_presentation(ctx: &Context) -> Result<VerificationReport> {
    let mut checks = braid_generator_checks(ctx);
    {
        let ctx = ctx.clone();
        checks.push((
            "idempotent-orthogonality".into(),
            Box::new(move || {
                for k in ctx.colors() {
                    let bk = AlgebraElement::idempotent(&ctx, k).expect("colors fit");
                    for m in ctx.colors() {
                        let bm = AlgebraElement::idempotent(&ctx, m).expect("colors fit");
                        let expected = if k == m {
                            bk.clone()
                        } else {
                            AlgebraElement::zero(&ctx)
                        };
                        let bad = expect_eq(&(&bk * &bm), &expected, || {
                            format!("b_{:?} b_{:?}", k.as_slice(), m.as_slice())
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "place-permutation".into(),
            Box::new(move || {
                for i in 1..ctx.n() {
                    let g = AlgebraElement::braid_gen(&ctx, i).expect("index in range");
                    let s_i = Permutation::simple(ctx.n(), i).expect("index in range");
                    for k in ctx.colors() {
                        let moved = k.place_act(&s_i).expect("sizes match");
                        let lhs = &g * &AlgebraElement::idempotent(&ctx, k).expect("colors fit");
                        let rhs =
                            &AlgebraElement::idempotent(&ctx, &moved).expect("colors fit") * &g;
                        let bad = expect_eq(&lhs, &rhs, || {
                            format!("g_{i} b_{:?} = b_{:?} g_{i}", k.as_slice(), moved.as_slice())
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "unit-sum".into(),
            Box::new(move || {
                let mut sum = AlgebraElement::zero(&ctx);
                for k in ctx.colors() {
                    sum = &sum + &AlgebraElement::idempotent(&ctx, k).expect("colors fit");
                }
                let bad = expect_eq(&sum, &AlgebraElement::one(&ctx), || {
                    "sum of all b_k equals the unit".to_string()
                });
                if bad.is_some() {
                    return bad;
                }
                let mut probes = Vec::new();
                for i in 1..=ctx.n() {
                    probes.push(AlgebraElement::t_gen(&ctx, i).expect("index in range"));
                }
                for i in 1..ctx.n() {
                    probes.push(AlgebraElement::braid_gen(&ctx, i).expect("index in range"));
                }
                for (idx, x) in probes.iter().enumerate() {
                    let bad = expect_eq(&(&sum * x), x, || format!("left unit on probe {idx}"))
                        .or_else(|| {
                            expect_eq(&(x * &sum), x, || format!("right unit on probe {idx}"))
                        });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    Ok(run_suite(
        "b-presentation",
        Some(ctx.params().clone()),
        checks,
    ))
}

/// A deterministic diagonal element (a polynomial in the t_i) drawn from
/// the given generator.
fn sample_diagonal(ctx: &Context, rng: &mut impl Rng) -> AlgebraElement {
    let mut acc = AlgebraElement::zero(ctx);
    for _ in 0..4 {
        let k = sample_colors(ctx.n(), ctx.r(), rng);
        let b = AlgebraElement::idempotent(ctx, &k).expect("sampled colors fit");
        acc = &acc + &b.scale(&sample_scalar(rng));
    }
    acc
}

/// Verifies the derived identities: straightening, eigenvalue action,
/// symmetric-polynomial commutation, conjugation of ordered sums, word
/// products with descent corrections, unitriangularity, generator
/// inverses, the trace laws, selectors, duals, and the orbit-idempotent
/// formulas.
pub fn verify_lemma_suite(ctx: &Context) -> Result<VerificationReport> {
    let mut checks: Vec<(String, CheckFn)> = Vec::new();

    {
        let ctx = ctx.clone();
        checks.push((
            "power-reduction".into(),
            Box::new(move || {
                // t_i^r = sum_{k=0}^{r-1} (-1)^{r-k+1} sigma_{r-k} t_i^k.
                for i in 1..=ctx.n() {
                    let t = AlgebraElement::t_gen(&ctx, i).expect("index in range");
                    let mut rhs = AlgebraElement::zero(&ctx);
                    for k in 0..ctx.r() {
                        let sign = if (ctx.r() - k + 1) % 2 == 0 { 1 } else { -1 };
                        let coeff = &Scalar::from_int(sign) * ctx.sigma(ctx.r() - k);
                        rhs = &rhs + &t.pow(k as u32).scale(&coeff);
                    }
                    let bad = expect_eq(&t.pow(ctx.r() as u32), &rhs, || {
                        format!("power reduction at strand {i}")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "symmetric-polynomial-commutation".into(),
            Box::new(move || {
                // A polynomial symmetric in t_p, t_{p+1} commutes with T_p.
                let mut rng = seeded_rng(0x51);
                for p in 1..ctx.n() {
                    let big_t = AlgebraElement::hecke_gen(&ctx, p).expect("index in range");
                    let tp = AlgebraElement::t_gen(&ctx, p).expect("index in range");
                    let tq = AlgebraElement::t_gen(&ctx, p + 1).expect("index in range");
                    let mut random = AlgebraElement::zero(&ctx);
                    for d1 in 0..ctx.r() as u32 {
                        for d2 in d1..ctx.r() as u32 {
                            let c = sample_scalar(&mut rng);
                            let sym = &(&tp.pow(d1) * &tq.pow(d2)) + &(&tp.pow(d2) * &tq.pow(d1));
                            random = &random + &sym.scale(&c);
                        }
                    }
                    for (name, a) in [
                        ("sum", &(&tp + &tq)),
                        ("product", &(&tp * &tq)),
                        ("random-symmetric", &random),
                    ] {
                        let bad = expect_eq(&(&big_t * a), &(a * &big_t), || {
                            format!("T_{p} commutes with the {name} polynomial")
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "word-straightening".into(),
            Box::new(move || {
                // T_p b_k - b_{s_p.k} T_p = (q - q^{-1})([k_p < k_{p+1}] b_k
                //   - [k_p > k_{p+1}] b_{s_p.k}).
                let defect = ctx.q_defect().clone();
                for p in 1..ctx.n() {
                    let big_t = AlgebraElement::hecke_gen(&ctx, p).expect("index in range");
                    let s_p = Permutation::simple(ctx.n(), p).expect("index in range");
                    for k in ctx.colors() {
                        let moved = k.place_act(&s_p).expect("sizes match");
                        let bk = AlgebraElement::idempotent(&ctx, k).expect("colors fit");
                        let bm = AlgebraElement::idempotent(&ctx, &moved).expect("colors fit");
                        let lhs = &(&big_t * &bk) - &(&bm * &big_t);
                        let mut rhs = AlgebraElement::zero(&ctx);
                        if k.color(p) < k.color(p + 1) {
                            rhs = &rhs + &bk.scale(&defect);
                        }
                        if k.color(p) > k.color(p + 1) {
                            rhs = &rhs - &bm.scale(&defect);
                        }
                        let bad = expect_eq(&lhs, &rhs, || {
                            format!("straightening T_{p} past b_{:?}", k.as_slice())
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "eigenvalue-action".into(),
            Box::new(move || {
                // t^e b_k = (prod_i u_{k_i}^{e_i}) b_k.
                let mut rng = seeded_rng(0x0e);
                let mut exponents: Vec<Vec<u32>> = vec![vec![1; ctx.n()]];
                for _ in 0..3 {
                    exponents
                        .push((0..ctx.n()).map(|_| rng.random_range(0..2 * ctx.r() as u32)).collect());
                }
                for k in ctx.colors() {
                    let bk = AlgebraElement::idempotent(&ctx, k).expect("colors fit");
                    for e in &exponents {
                        let monomial =
                            AlgebraElement::t_monomial(&ctx, e).expect("exponents fit");
                        let mut eigen = Scalar::one();
                        for (i, &exp) in e.iter().enumerate() {
                            eigen = &eigen * &ctx.u_color(k.color(i + 1)).pow(exp);
                        }
                        let bad = expect_eq(&(&monomial * &bk), &bk.scale(&eigen), || {
                            format!("eigenvalue action of t^{e:?} on b_{:?}", k.as_slice())
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "ordered-sum-conjugation".into(),
            Box::new(move || {
                // g_k B'_{i,j} = B'_{s_k(i), s_k(j)} g_k, and the T_k version
                // with its correction term.
                for k in 1..ctx.n() {
                    let g = AlgebraElement::braid_gen(&ctx, k).expect("index in range");
                    let big_t = AlgebraElement::hecke_gen(&ctx, k).expect("index in range");
                    let bk_prime =
                        AlgebraElement::b_prime(&ctx, k, k + 1).expect("indices in range");
                    let swap = |v: usize| {
                        if v == k {
                            k + 1
                        } else if v == k + 1 {
                            k
                        } else {
                            v
                        }
                    };
                    for i in 1..=ctx.n() {
                        for j in 1..=ctx.n() {
                            if i == j {
                                continue;
                            }
                            let before =
                                AlgebraElement::b_prime(&ctx, i, j).expect("indices in range");
                            let after = AlgebraElement::b_prime(&ctx, swap(i), swap(j))
                                .expect("indices in range");
                            let bad = expect_eq(&(&g * &before), &(&after * &g), || {
                                format!("g_{k} moves B'_{i},{j}")
                            })
                            .or_else(|| {
                                let rhs = &(&after * &big_t)
                                    + &(&(&after - &before) * &bk_prime);
                                expect_eq(&(&big_t * &before), &rhs, || {
                                    format!("T_{k} moves B'_{i},{j} with correction")
                                })
                            });
                            if bad.is_some() {
                                return bad;
                            }
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "word-product-descent".into(),
            Box::new(move || {
                // g_w g_i = g_{w s_i} on ascent, plus (q - q^{-1}) g_w e_i on
                // descent; mirrored on the left with e_i g_w.
                let defect = ctx.q_defect().clone();
                for w in ctx.perms() {
                    let gw = AlgebraElement::g_word(&ctx, w).expect("sizes match");
                    for i in 1..ctx.n() {
                        let gi = AlgebraElement::braid_gen(&ctx, i).expect("index in range");
                        let e = AlgebraElement::match_idempotent(&ctx, i).expect("index in range");
                        let right = w.times_simple(i);
                        let g_right = AlgebraElement::g_word(&ctx, &right).expect("sizes match");
                        let rhs = if right.length() > w.length() {
                            g_right
                        } else {
                            &g_right + &(&gw * &e).scale(&defect)
                        };
                        let bad = expect_eq(&(&gw * &gi), &rhs, || {
                            format!("g_w g_{i} at w = {w:?}")
                        });
                        if bad.is_some() {
                            return bad;
                        }
                        let left = w.simple_times(i);
                        let g_left = AlgebraElement::g_word(&ctx, &left).expect("sizes match");
                        let rhs = if left.length() > w.length() {
                            g_left
                        } else {
                            &g_left + &(&e * &gw).scale(&defect)
                        };
                        let bad = expect_eq(&(&gi * &gw), &rhs, || {
                            format!("g_{i} g_w at w = {w:?}")
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "hecke-unitriangularity".into(),
            Box::new(move || {
                // g_w = T_w + (polynomial coefficients on strictly
                // Bruhat-smaller Hecke words).
                let zero_head: Box<[u8]> = vec![0u8; ctx.n()].into();
                for w in ctx.perms() {
                    let gw = AlgebraElement::g_word(&ctx, w).expect("sizes match");
                    let coords = to_coordinates(&gw, BasisTag::Tt);
                    for (label, value) in &coords.entries {
                        if label.perm == *w {
                            if label.head != zero_head || !value.is_one() {
                                return Some(format!(
                                    "leading coefficient of g_w at w = {w:?} is not T_w: \
                                     head {:?}, value {value}",
                                    label.head
                                ));
                            }
                        } else if !label.perm.bruhat_leq(w).expect("sizes match") {
                            return Some(format!(
                                "support of g_w at w = {w:?} escapes the interval at {:?}",
                                label.perm
                            ));
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "generator-inverses".into(),
            Box::new(move || {
                let one = AlgebraElement::one(&ctx);
                let defect = ctx.q_defect().clone();
                for i in 1..ctx.n() {
                    let g = AlgebraElement::braid_gen(&ctx, i).expect("index in range");
                    let g_inv = AlgebraElement::braid_gen_inverse(&ctx, i).expect("index in range");
                    let big_t = AlgebraElement::hecke_gen(&ctx, i).expect("index in range");
                    let t_inv = &big_t - &one.scale(&defect);
                    let bad = expect_eq(&(&g * &g_inv), &one, || format!("g_{i} right inverse"))
                        .or_else(|| expect_eq(&(&g_inv * &g), &one, || format!("g_{i} left inverse")))
                        .or_else(|| {
                            expect_eq(&(&big_t * &t_inv), &one, || format!("T_{i} right inverse"))
                        })
                        .or_else(|| {
                            expect_eq(&(&t_inv * &big_t), &one, || format!("T_{i} left inverse"))
                        });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "trace-braid-orthogonality".into(),
            Box::new(move || {
                // tau(g_w g_v) = [v = w^{-1}].
                for w in ctx.perms() {
                    let gw = AlgebraElement::g_word(&ctx, w).expect("sizes match");
                    for v in ctx.perms() {
                        let gv = AlgebraElement::g_word(&ctx, v).expect("sizes match");
                        let expected = if *v == w.inverse() {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        };
                        let bad = expect_scalar(&tau(&(&gw * &gv)), &expected, || {
                            format!("tau(g_w g_v) at w = {w:?}, v = {v:?}")
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "trace-diagonal-extension".into(),
            Box::new(move || {
                // tau(A g_w g_v) = [v = w^{-1}] tau(A) for diagonal A.
                let mut rng = seeded_rng(0xd1a);
                let pairs: Vec<(Permutation, Permutation)> = if ctx.n() <= 3 {
                    let perms = ctx.perms();
                    perms
                        .iter()
                        .flat_map(|w| perms.iter().map(move |v| (w.clone(), v.clone())))
                        .collect()
                } else {
                    let mut pairs = Vec::new();
                    for _ in 0..10 {
                        let w = sample_permutation(ctx.n(), &mut rng);
                        pairs.push((w.clone(), w.inverse()));
                        pairs.push((w, sample_permutation(ctx.n(), &mut rng)));
                    }
                    pairs
                };
                for _ in 0..3 {
                    let a = sample_diagonal(&ctx, &mut rng);
                    let traced = tau(&a);
                    for (w, v) in &pairs {
                        let gw = AlgebraElement::g_word(&ctx, w).expect("sizes match");
                        let gv = AlgebraElement::g_word(&ctx, v).expect("sizes match");
                        let expected = if *v == w.inverse() {
                            traced.clone()
                        } else {
                            Scalar::zero()
                        };
                        let bad =
                            expect_scalar(&tau(&(&(&a * &gw) * &gv)), &expected, || {
                                format!("tau(A g_w g_v) at w = {w:?}, v = {v:?}")
                            });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "trace-strand-multiplicativity".into(),
            Box::new(move || {
                // tau(prod_i f_i(t_i)) = prod_i tau(f_i(t_i)).
                let mut rng = seeded_rng(0x3417);
                for round in 0..5 {
                    let mut product = AlgebraElement::one(&ctx);
                    let mut expected = Scalar::one();
                    for i in 1..=ctx.n() {
                        let coeffs: Vec<Scalar> =
                            (0..ctx.r()).map(|_| sample_scalar(&mut rng)).collect();
                        let f = UniPolynomial::from_coeffs(coeffs);
                        let value =
                            AlgebraElement::univariate_at(&ctx, &f, i).expect("index in range");
                        expected = &expected * &tau(&value);
                        product = &product * &value;
                    }
                    let bad = expect_scalar(&tau(&product), &expected, || {
                        format!("strand multiplicativity, round {round}")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "trace-commutativity".into(),
            Box::new(move || {
                let mut rng = seeded_rng(0x7c);
                for round in 0..20 {
                    let x = sample_element(&ctx, 6, &mut rng);
                    let y = sample_element(&ctx, 6, &mut rng);
                    let bad = expect_scalar(&tau(&(&x * &y)), &tau(&(&y * &x)), || {
                        format!("tau(xy) = tau(yx), round {round}")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "trace-power-closed-form".into(),
            Box::new(move || {
                // tau(t_i^{r+s}) = (-1)^{r+1} sigma_r h_s.
                for i in 1..=ctx.n() {
                    for s in 0..ctx.r() {
                        let (traced, closed) =
                            tau_power_check(&ctx, i, s).expect("arguments in range");
                        let bad = expect_scalar(&traced, &closed, || {
                            format!("tau(t_{i}^(r+{s})) closed form")
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "trace-selector".into(),
            Box::new(move || {
                // tau(t^c S_d(t)) = [c = d] (-1)^{r+1} sigma_r.
                let sign = Scalar::from_int(if (ctx.r() + 1) % 2 == 0 { 1 } else { -1 });
                let unit = &sign * ctx.sigma(ctx.r());
                let t = AlgebraElement::t_gen(&ctx, 1).expect("n >= 1");
                for d in 0..ctx.r() {
                    let selector = selector_polynomial(&ctx, d).expect("degree in range");
                    let s_el =
                        AlgebraElement::univariate_at(&ctx, &selector, 1).expect("n >= 1");
                    for c in 0..ctx.r() {
                        let expected = if c == d { unit.clone() } else { Scalar::zero() };
                        let bad = expect_scalar(
                            &tau(&(&t.pow(c as u32) * &s_el)),
                            &expected,
                            || format!("selector at c = {c}, d = {d}"),
                        );
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    // The flat specialization: when the spectral polynomial is X^r - 1 the
    // match idempotent averages the mixed powers.
    if UniPolynomial::from_roots(ctx.params().u())
        == UniPolynomial::monomial(Scalar::one(), ctx.r()).sub(&UniPolynomial::one())
    {
        let ctx = ctx.clone();
        checks.push((
            "uniform-match-average".into(),
            Box::new(move || {
                let r_inv = Scalar::from_int(ctx.r() as i64)
                    .inverse()
                    .expect("r is positive");
                for i in 1..ctx.n() {
                    let ti = AlgebraElement::t_gen(&ctx, i).expect("index in range");
                    let tj = AlgebraElement::t_gen(&ctx, i + 1).expect("index in range");
                    let mut sum = AlgebraElement::zero(&ctx);
                    for s in 0..ctx.r() as u32 {
                        sum = &sum + &(&ti.pow(s) * &tj.pow(ctx.r() as u32 - s));
                    }
                    let e = AlgebraElement::match_idempotent(&ctx, i).expect("index in range");
                    let bad = expect_eq(&e, &sum.scale(&r_inv), || {
                        format!("match idempotent e_{i} as a power average")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "pair-idempotent-conjugation".into(),
            Box::new(move || {
                for i in 1..=ctx.n() {
                    for j in (i + 1)..=ctx.n() {
                        let lhs = conjugated_idempotent(&ctx, i, j).expect("indices in range");
                        let rhs = AlgebraElement::pair_match_idempotent(&ctx, i, j)
                            .expect("indices in range");
                        let bad =
                            expect_eq(&lhs, &rhs, || format!("conjugated e_({i},{j})"));
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "orbit-idempotent-product".into(),
            Box::new(move || {
                for rep in ColorVector::orbit_representatives(ctx.n(), ctx.r()) {
                    match orbit_idempotent(&ctx, &rep) {
                        Err(e) => return Some(e.to_string()),
                        Ok(x) => {
                            let bad = expect_eq(&(&x * &x), &x, || {
                                format!("orbit idempotent at {:?} squares to itself", rep.as_slice())
                            });
                            if bad.is_some() {
                                return bad;
                            }
                        }
                    }
                }
                None
            }),
        ));
    }
    {
        let ctx = ctx.clone();
        checks.push((
            "relabeling-automorphism".into(),
            Box::new(move || {
                if ctx.r() == 1 {
                    return None;
                }
                let mut swap: Vec<u8> = (1..=ctx.r() as u8).collect();
                swap.swap(0, 1);
                let mut cycle: Vec<u8> = (2..=ctx.r() as u8).collect();
                cycle.push(1);
                let mut rng = seeded_rng(0x5e1a);
                for line in [swap, cycle] {
                    let sigma = Permutation::from_one_line(&line).expect("valid one-line form");
                    for w in ctx.perms() {
                        let gw = AlgebraElement::g_word(&ctx, w).expect("sizes match");
                        let bad = expect_eq(
                            &gw.relabel_colors(&sigma).expect("sigma fits"),
                            &gw,
                            || format!("relabeling fixes g_w at w = {w:?}"),
                        );
                        if bad.is_some() {
                            return bad;
                        }
                    }
                    for round in 0..5 {
                        let x = sample_element(&ctx, 5, &mut rng);
                        let y = sample_element(&ctx, 5, &mut rng);
                        let lhs = (&x * &y).relabel_colors(&sigma).expect("sigma fits");
                        let rhs = &x.relabel_colors(&sigma).expect("sigma fits")
                            * &y.relabel_colors(&sigma).expect("sigma fits");
                        let bad = expect_eq(&lhs, &rhs, || {
                            format!("relabeling is multiplicative, round {round}")
                        });
                        if bad.is_some() {
                            return bad;
                        }
                    }
                }
                None
            }),
        ));
    }
    if ctx.params().is_symmetrizing() {
        let ctx = ctx.clone();
        checks.push((
            "dual-pairing".into(),
            Box::new(move || {
                let mut rng = seeded_rng(0xd0a1);
                for round in 0..15 {
                    let row_head: Vec<u8> =
                        (0..ctx.n()).map(|_| rng.random_range(0..ctx.r() as u8)).collect();
                    let col_head: Vec<u8> =
                        (0..ctx.n()).map(|_| rng.random_range(0..ctx.r() as u8)).collect();
                    let w = sample_permutation(ctx.n(), &mut rng);
                    let v = if rng.random_range(0..2) == 0 {
                        w.clone()
                    } else {
                        sample_permutation(ctx.n(), &mut rng)
                    };
                    let dual = dual_basis_element(&ctx, &row_head, &w).expect("labels fit");
                    let exps: Vec<u32> = col_head.iter().map(|&e| e as u32).collect();
                    let basis = AlgebraElement::t_monomial(&ctx, &exps)
                        .expect("exponents fit")
                        .try_mul(&AlgebraElement::g_word(&ctx, &v).expect("sizes match"))
                        .expect("same context");
                    let expected = if row_head == col_head && w == v {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    let bad = expect_scalar(&tau(&(&dual * &basis)), &expected, || {
                        format!("dual pairing, round {round}")
                    });
                    if bad.is_some() {
                        return bad;
                    }
                }
                None
            }),
        ));
    } else {
        let ctx = ctx.clone();
        checks.push((
            "dual-refusal".into(),
            Box::new(move || {
                let head = vec![0u8; ctx.n()];
                match dual_basis_element(&ctx, &head, &Permutation::identity(ctx.n())) {
                    Err(Error::NotSymmetrizing) => None,
                    Err(other) => Some(format!("expected a symmetrizing refusal, got {other}")),
                    Ok(_) => Some(
                        "dual construction succeeded although sigma_r = 0".to_string(),
                    ),
                }
            }),
        ));
    }
    Ok(run_suite(
        "derived-identities",
        Some(ctx.params().clone()),
        checks,
    ))
}

/// Runs all four suites on one context.
pub fn verify_all(ctx: &Context) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        verify_definition_presentation(ctx)?,
        verify_yokonuma_presentation(ctx)?,
        verify_b_presentation(ctx)?,
        verify_lemma_suite(ctx)?,
    ])
}

/// Reruns all four suites on `trials` independently sampled parameter sets
/// (distinct nonzero u values, nonzero q), deterministically per seed. Each
/// trial aggregates to one check whose witness lists the failing suite
/// members.
pub fn multi_parameter_fuzz(
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be positive".into()));
    }
    let mut rng = seeded_rng(seed);
    let mut checks = Vec::with_capacity(trials);
    for trial in 0..trials {
        let params = sample_parameters(n, r, &mut rng)?;
        let summary = format!(
            "q = {}, u = ({})",
            params.q(),
            params
                .u()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
        let ctx = Context::new(params)?;
        let mut failing = Vec::new();
        for report in verify_all(&ctx)? {
            for check in &report.checks {
                if !check.ok {
                    failing.push(format!("{}/{}", report.suite, check.id));
                }
            }
        }
        checks.push(RelationCheck {
            id: format!("trial-{trial}"),
            ok: failing.is_empty(),
            witness: if failing.is_empty() {
                None
            } else {
                Some(format!("{summary}; failing: {}", failing.join(", ")))
            },
        });
    }
    let pass = checks.iter().all(|c| c.ok);
    Ok(VerificationReport {
        suite: "multi-parameter-fuzz".to_string(),
        context: None,
        checks,
        pass,
    })
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

    fn assert_clean(report: &VerificationReport) {
        assert!(
            report.pass,
            "suite {} failed: {:?}",
            report.suite,
            report
                .checks
                .iter()
                .filter(|c| !c.ok)
                .collect::<Vec<_>>()
        );
        assert!(!report.checks.is_empty());
    }

    #[test]
    fn all_suites_pass_on_reference_contexts() {
        for c in [
            ctx(3, 2, "3/2", &["1", "-1"]),
            ctx(2, 3, "2", &["1", "2", "4"]),
        ] {
            let reports = verify_all(&c).unwrap();
            assert_eq!(reports.len(), 4);
            let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
            assert_eq!(
                names,
                ["definition", "yokonuma", "b-presentation", "derived-identities"]
            );
            for report in &reports {
                assert_clean(report);
                assert_eq!(report.context.as_ref(), Some(c.params()));
            }
        }
    }

    #[test]
    fn degenerate_color_count_collapses_cleanly() {
        // r = 1: a single color, no cross terms; the classical one-parameter
        // deformation remains.
        let c = ctx(2, 1, "2", &["1"]);
        for report in verify_all(&c).unwrap() {
            assert_clean(&report);
        }
    }

    #[test]
    fn single_strand_contexts_verify() {
        let c = ctx(1, 2, "3/2", &["1", "-1"]);
        for report in verify_all(&c).unwrap() {
            assert_clean(&report);
        }
    }

    #[test]
    fn zero_spectral_value_switches_dual_check_to_refusal() {
        let with_zero = ctx(2, 2, "2", &["0", "1"]);
        let report = verify_lemma_suite(&with_zero).unwrap();
        assert_clean(&report);
        assert!(report.checks.iter().any(|c| c.id == "dual-refusal"));
        assert!(report.checks.iter().all(|c| c.id != "dual-pairing"));

        let plain = ctx(2, 2, "2", &["1", "-1"]);
        let report = verify_lemma_suite(&plain).unwrap();
        assert!(report.checks.iter().any(|c| c.id == "dual-pairing"));
    }

    #[test]
    fn flat_specialization_check_is_conditional() {
        let flat = ctx(3, 2, "3/2", &["1", "-1"]);
        let report = verify_lemma_suite(&flat).unwrap();
        assert!(report
            .checks
            .iter()
            .any(|c| c.id == "uniform-match-average" && c.ok));

        let generic = ctx(3, 2, "3/2", &["2", "5"]);
        let report = verify_lemma_suite(&generic).unwrap();
        assert!(report.checks.iter().all(|c| c.id != "uniform-match-average"));
    }

    #[test]
    fn wrong_images_produce_failing_reports_with_witnesses() {
        // Feeding g_i where T_i belongs breaks the quadratic relation (and
        // the witness carries the offending element).
        let c = ctx(2, 2, "3/2", &["1", "-1"]);
        let t = vec![
            AlgebraElement::t_gen(&c, 1).unwrap(),
            AlgebraElement::t_gen(&c, 2).unwrap(),
        ];
        let wrong = vec![AlgebraElement::braid_gen(&c, 1).unwrap()];
        let report = verify_definition_images(&t, &wrong, c.params()).unwrap();
        assert!(!report.pass);
        let quad = report
            .checks
            .iter()
            .find(|check| check.id == "braid-quadratic")
            .unwrap();
        assert!(!quad.ok);
        assert!(quad.witness.as_ref().unwrap().contains("offending element"));
    }

    #[test]
    fn image_shape_is_validated() {
        let c = ctx(2, 2, "3/2", &["1", "-1"]);
        let t = vec![AlgebraElement::t_gen(&c, 1).unwrap()];
        let big_t = vec![AlgebraElement::hecke_gen(&c, 1).unwrap()];
        assert!(matches!(
            verify_definition_images(&t, &big_t, c.params()).unwrap_err(),
            Error::BadShape(_)
        ));
        let other = ctx(2, 2, "2", &["1", "-1"]);
        let mixed = vec![
            AlgebraElement::t_gen(&c, 1).unwrap(),
            AlgebraElement::t_gen(&other, 2).unwrap(),
        ];
        assert_eq!(
            verify_definition_images(&mixed, &big_t, c.params()).unwrap_err(),
            Error::ContextMismatch
        );
    }

    #[test]
    fn fuzzing_passes_and_is_deterministic() {
        let first = multi_parameter_fuzz(2, 2, 3, 7).unwrap();
        assert!(first.pass);
        assert_eq!(first.checks.len(), 3);
        assert!(first.context.is_none());
        let second = multi_parameter_fuzz(2, 2, 3, 7).unwrap();
        assert_eq!(
            serde_json::to_string(&first).unwrap(),
            serde_json::to_string(&second).unwrap()
        );
        assert!(multi_parameter_fuzz(3, 3, 1, 11).unwrap().pass);
        assert!(matches!(
            multi_parameter_fuzz(2, 2, 0, 7).unwrap_err(),
            Error::OutOfRange(_)
        ));
    }
}
