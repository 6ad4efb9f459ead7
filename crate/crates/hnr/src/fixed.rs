//! The subalgebra fixed by color relabeling.
//!
//! Permutations of the color set {1..r} act on the algebra by relabeling
//! idempotent subscripts and fixing the braid generators. This module
//! builds the standard basis of the fixed subalgebra — orbit-sum
//! idempotents times braid words — plus the conjugation and product
//! formulas that express the same elements through g_i and e_i alone,
//! and a closure check that the pair {g_i, e_i} really generates.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::color::ColorVector;
use crate::context::Context;
use crate::element::{AlgebraElement, BasisWord};
use crate::error::{Error, Result};
use crate::linalg::SpanBasis;
use crate::perm::Permutation;
use crate::scalar::Scalar;

/// Maximum ambient dimension for the exact rank computations here.
const FIXED_DIMENSION_LIMIT: u64 = 10_000;

/// The pair idempotent e_{i,j} built by conjugation instead of summation:
/// g_{j-1} ... g_{i+1} e_i g_{i+1}^{-1} ... g_{j-1}^{-1}, for i < j.
pub fn conjugated_idempotent(ctx: &Context, i: usize, j: usize) -> Result<AlgebraElement> {
    if i == 0 || j <= i || j > ctx.n() {
        return Err(Error::IndexOutOfRange(format!(
            "pair ({i}, {j}) must satisfy 1 <= i < j <= {}",
            ctx.n()
        )));
    }
    let mut acc = AlgebraElement::match_idempotent(ctx, i)?;
    for m in (i + 1)..j {
        let g = AlgebraElement::braid_gen(ctx, m)?;
        let g_inv = AlgebraElement::braid_gen_inverse(ctx, m)?;
        acc = g.try_mul(&acc)?.try_mul(&g_inv)?;
    }
    Ok(acc)
}

/// The orbit idempotent b_[k]: the sum of b_m over the relabeling orbit of
/// k. Computed twice — as the plain orbit sum and as the product
/// prod_{i<j, k_i=k_j} e_{i,j} * prod_{i<j, k_i!=k_j} (1 - e_{i,j}) —
/// and the call fails if the two routes disagree.
pub fn orbit_idempotent(ctx: &Context, k: &ColorVector) -> Result<AlgebraElement> {
    let mut by_sum = AlgebraElement::zero(ctx);
    for m in k.orbit(ctx.r())? {
        by_sum = by_sum.try_add(&AlgebraElement::idempotent(ctx, &m)?)?;
    }
    let one = AlgebraElement::one(ctx);
    let mut by_product = one.clone();
    for i in 1..=ctx.n() {
        for j in (i + 1)..=ctx.n() {
            let pair = AlgebraElement::pair_match_idempotent(ctx, i, j)?;
            let factor = if k.color(i) == k.color(j) {
                pair
            } else {
                one.try_sub(&pair)?
            };
            by_product = by_product.try_mul(&factor)?;
        }
    }
    if by_sum != by_product {
        return Err(Error::AssertFailed(format!(
            "orbit sum and pair-idempotent product disagree at {:?}",
            k.as_slice()
        )));
    }
    Ok(by_sum)
}

/// One member of the fixed-subalgebra basis: b_[k] g_w with k an orbit
/// representative.
#[derive(Clone, Debug)]
pub struct FixedBasisElement {
    pub orbit_rep: ColorVector,
    pub perm: Permutation,
    pub element: AlgebraElement,
}

fn word_index(ctx: &Context) -> BTreeMap<BasisWord, usize> {
    let mut index = BTreeMap::new();
    let mut next = 0usize;
    for k in ctx.colors() {
        for w in ctx.perms() {
            let word = BasisWord::new(k.clone(), w.clone()).expect("enumeration is consistent");
            index.insert(word, next);
            next += 1;
        }
    }
    index
}

fn dense_coordinates(x: &AlgebraElement, index: &BTreeMap<BasisWord, usize>) -> Vec<Scalar> {
    let mut row = vec![Scalar::zero(); index.len()];
    for (word, c) in x.terms() {
        row[index[word]] = c.clone();
    }
    row
}

fn guard_dimension(ctx: &Context) -> Result<()> {
    if ctx.dimension() > FIXED_DIMENSION_LIMIT {
        return Err(Error::SizeGuard(format!(
            "fixed-subalgebra computation over {} basis elements exceeds the limit of {}",
            ctx.dimension(),
            FIXED_DIMENSION_LIMIT
        )));
    }
    Ok(())
}

/// The full basis {b_[k] g_w} of the fixed subalgebra, with k running over
/// canonical orbit representatives. Linear independence is verified by
/// exact rank before returning.
pub fn fixed_basis(ctx: &Context) -> Result<Vec<FixedBasisElement>> {
    guard_dimension(ctx)?;
    let index = word_index(ctx);
    let mut span = SpanBasis::new(index.len());
    let mut out = Vec::new();
    for rep in ColorVector::orbit_representatives(ctx.n(), ctx.r()) {
        let head = orbit_idempotent(ctx, &rep)?;
        for w in ctx.perms() {
            let element = head.try_mul(&AlgebraElement::g_word(ctx, w)?)?;
            if !span.insert(&dense_coordinates(&element, &index))? {
                return Err(Error::AssertFailed(format!(
                    "fixed basis is linearly dependent at orbit {:?}, w {:?}",
                    rep.as_slice(),
                    w
                )));
            }
            out.push(FixedBasisElement {
                orbit_rep: rep.clone(),
                perm: w.clone(),
                element,
            });
        }
    }
    Ok(out)
}

/// Whether an element is invariant under every relabeling of colors.
/// Checked on the two standard generators of the symmetric group on colors.
pub fn is_fixed(x: &AlgebraElement) -> bool {
    let r = x.context().r();
    if r == 1 {
        return true;
    }
    let mut swap: Vec<u8> = (1..=r as u8).collect();
    swap.swap(0, 1);
    let mut cycle: Vec<u8> = (2..=r as u8).collect();
    cycle.push(1);
    for line in [swap, cycle] {
        let sigma = Permutation::from_one_line(&line).expect("valid one-line form");
        let image = x.relabel_colors(&sigma).expect("sigma permutes the colors");
        if image != *x {
            return false;
        }
    }
    true
}

/// Outcome of closing {g_i, e_i} under multiplication inside the algebra.
#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    /// Rank of the closure of the generating set.
    pub rank: usize,
    /// Size of the fixed-subalgebra basis.
    pub target: usize,
    /// Whether the closure fills the whole fixed subalgebra.
    pub generated: bool,
}

/// Closes the unital subalgebra generated by g_1..g_{n-1} and e_1..e_{n-1}
/// under two-sided multiplication, and compares its exact rank against the
/// fixed-basis size.
pub fn generation_check(ctx: &Context) -> Result<GenerationReport> {
    let target = fixed_basis(ctx)?.len();
    let index = word_index(ctx);
    let mut span = SpanBasis::new(index.len());
    let mut generators = Vec::new();
    for i in 1..ctx.n() {
        generators.push(AlgebraElement::braid_gen(ctx, i)?);
        generators.push(AlgebraElement::match_idempotent(ctx, i)?);
    }
    let mut queue = VecDeque::from([AlgebraElement::one(ctx)]);
    while let Some(x) = queue.pop_front() {
        if !span.insert(&dense_coordinates(&x, &index))? {
            continue;
        }
        for g in &generators {
            queue.push_back(x.try_mul(g)?);
            queue.push_back(g.try_mul(&x)?);
        }
    }
    Ok(GenerationReport {
        rank: span.rank(),
        target,
        generated: span.rank() == target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParameterSet;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn ctx(n: usize, r: usize, q: &str, u: &[&str]) -> Context {
        let p = ParameterSet::new(n, r, s(q), u.iter().map(|t| s(t)).collect()).unwrap();
        Context::new(p).unwrap()
    }

    #[test]
    fn conjugation_reproduces_pair_idempotents() {
        for c in [
            ctx(3, 2, "3/2", &["1", "-1"]),
            ctx(3, 3, "2", &["1", "2", "3"]),
            ctx(4, 2, "2", &["2", "5"]),
        ] {
            for i in 1..=c.n() {
                for j in (i + 1)..=c.n() {
                    assert_eq!(
                        conjugated_idempotent(&c, i, j).unwrap(),
                        AlgebraElement::pair_match_idempotent(&c, i, j).unwrap(),
                        "conjugation route split at ({i}, {j})"
                    );
                }
            }
        }
        let c = ctx(3, 2, "3/2", &["1", "-1"]);
        assert!(conjugated_idempotent(&c, 2, 2).is_err());
        assert!(conjugated_idempotent(&c, 0, 1).is_err());
        assert!(conjugated_idempotent(&c, 1, 4).is_err());
    }

    #[test]
    fn orbit_idempotents_match_explicit_orbit_sums() {
        let c = ctx(3, 2, "3/2", &["1", "-1"]);
        for rep in ColorVector::orbit_representatives(3, 2) {
            let direct = rep
                .orbit(2)
                .unwrap()
                .into_iter()
                .fold(AlgebraElement::zero(&c), |acc, m| {
                    acc.try_add(&AlgebraElement::idempotent(&c, &m).unwrap()).unwrap()
                });
            assert_eq!(orbit_idempotent(&c, &rep).unwrap(), direct);
        }
    }

    #[test]
    fn orbit_idempotents_are_orthogonal_and_complete() {
        for c in [ctx(3, 2, "3/2", &["1", "-1"]), ctx(2, 3, "2", &["1", "2", "3"])] {
            let reps = ColorVector::orbit_representatives(c.n(), c.r());
            let heads: Vec<AlgebraElement> = reps
                .iter()
                .map(|rep| orbit_idempotent(&c, rep).unwrap())
                .collect();
            let mut total = AlgebraElement::zero(&c);
            for (a, x) in heads.iter().enumerate() {
                total = total.try_add(x).unwrap();
                for (b, y) in heads.iter().enumerate() {
                    let expected = if a == b { x.clone() } else { AlgebraElement::zero(&c) };
                    assert_eq!(&(x * y), &expected, "orthogonality failed at ({a}, {b})");
                }
            }
            assert_eq!(total, AlgebraElement::one(&c));
        }
    }

    #[test]
    fn fixed_basis_sizes_follow_orbit_counts() {
        // Orbit representatives number sum_d S(n, d) over d <= min(n, r);
        // each contributes n! braid words.
        assert_eq!(fixed_basis(&ctx(2, 2, "2", &["1", "-1"])).unwrap().len(), 4);
        assert_eq!(fixed_basis(&ctx(3, 2, "3/2", &["1", "-1"])).unwrap().len(), 24);
        assert_eq!(
            fixed_basis(&ctx(3, 3, "2", &["1", "2", "3"])).unwrap().len(),
            30
        );
        assert_eq!(fixed_basis(&ctx(1, 3, "2", &["1", "2", "3"])).unwrap().len(), 1);
    }

    #[test]
    fn fixed_basis_members_are_invariant() {
        let c = ctx(3, 2, "3/2", &["1", "-1"]);
        for member in fixed_basis(&c).unwrap() {
            assert!(
                is_fixed(&member.element),
                "not invariant at orbit {:?}, w {:?}",
                member.orbit_rep.as_slice(),
                member.perm
            );
        }
    }

    #[test]
    fn invariance_detector_separates_generators_from_spectra() {
        let c = ctx(2, 2, "3/2", &["1", "-1"]);
        assert!(is_fixed(&AlgebraElement::one(&c)));
        assert!(is_fixed(&AlgebraElement::braid_gen(&c, 1).unwrap()));
        assert!(is_fixed(&AlgebraElement::match_idempotent(&c, 1).unwrap()));
        assert!(!is_fixed(&AlgebraElement::t_gen(&c, 1).unwrap()));
        // The Hecke generator mixes color-ordered idempotents, so relabeling
        // moves it.
        assert!(!is_fixed(&AlgebraElement::hecke_gen(&c, 1).unwrap()));
        assert!(!is_fixed(
            &AlgebraElement::idempotent(&c, &ColorVector::new(&[1, 2], 2).unwrap()).unwrap()
        ));
        // r = 1 leaves nothing to relabel.
        let trivial = ctx(2, 1, "2", &["1"]);
        assert!(is_fixed(&AlgebraElement::t_gen(&trivial, 1).unwrap()));
    }

    #[test]
    fn products_of_fixed_elements_stay_fixed() {
        let c = ctx(3, 2, "3/2", &["1", "-1"]);
        let members = fixed_basis(&c).unwrap();
        for step in [1usize, 7, 11] {
            for (a, x) in members.iter().enumerate().step_by(5) {
                let y = &members[(a * step + 3) % members.len()];
                assert!(is_fixed(&(&x.element * &y.element)));
            }
        }
    }

    #[test]
    fn braid_and_match_generators_fill_the_fixed_subalgebra() {
        for c in [
            ctx(1, 3, "2", &["1", "2", "3"]),
            ctx(2, 2, "3/2", &["1", "-1"]),
            ctx(3, 2, "3/2", &["1", "-1"]),
            ctx(3, 3, "2", &["1", "2", "3"]),
        ] {
            let report = generation_check(&c).unwrap();
            assert!(
                report.generated,
                "closure rank {} missed target {}",
                report.rank, report.target
            );
            assert_eq!(report.rank, report.target);
        }
    }

    #[test]
    fn oversized_contexts_are_refused() {
        let c = ctx(5, 3, "2", &["1", "2", "3"]);
        assert!(matches!(fixed_basis(&c).unwrap_err(), Error::SizeGuard(_)));
        assert!(matches!(generation_check(&c).unwrap_err(), Error::SizeGuard(_)));
    }
}
