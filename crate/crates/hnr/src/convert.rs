//! Coordinates of elements over the three module bases, and the conversions
//! between them:
//!
//! * `bg` — the normal-form basis {b_k g_w} (labels: color vector, permutation),
//! * `tg` — {t^c g_w} with exponent vectors c in {0..r-1}^n,
//! * `tT` — {t^c T_w} with the Hecke word T_w = T_{i_1} ... T_{i_l} taken
//!   along any reduced word of w.
//!
//! The bg -> tg direction expands each idempotent through its Lagrange
//! factorization b_k = prod_i L_{k_i}(t_i); the inverse evaluates monomials
//! on color eigenvalues. The bg -> tT direction peels permutations by
//! decreasing length, using that T_w has unitriangular normal form
//! (leading slice sum_k b_k g_w plus strictly shorter words).
//!
//! The same machinery provides the parameter-change map: the unique change
//! of spectral generators t~_i = sum_j a_j t_i^j matching a second u-tuple.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::context::Context;
use crate::element::{AlgebraElement, BasisWord};
use crate::error::{Error, Result};
use crate::linalg;
use crate::perm::Permutation;
use crate::scalar::{ParameterSet, Scalar};

/// Which of the three bases a coordinate vector refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisTag {
    /// Idempotent basis {b_k g_w}.
    Bg,
    /// Spectral-monomial basis {t^c g_w}.
    Tg,
    /// Spectral-monomial Hecke basis {t^c T_w}.
    Tt,
}

impl BasisTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisTag::Bg => "bg",
            BasisTag::Tg => "tg",
            BasisTag::Tt => "tT",
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasisTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bg" => Ok(BasisTag::Bg),
            "tg" => Ok(BasisTag::Tg),
            "tT" => Ok(BasisTag::Tt),
            other => Err(Error::BadLabel(format!(
                "unknown basis {other:?}; expected bg, tg, or tT"
            ))),
        }
    }
}

impl Serialize for BasisTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// One basis label: `head` holds colors 1..=r for `bg` and exponents
/// 0..=r-1 for `tg`/`tT`; `perm` is the permutation part.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CoordLabel {
    pub head: Box<[u8]>,
    pub perm: Permutation,
}

impl Serialize for CoordLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CoordLabel", 2)?;
        st.serialize_field("head", &self.head[..])?;
        st.serialize_field("w", &self.perm)?;
        st.end()
    }
}

/// Coordinates of one element over one basis. Entries never hold zeros and
/// iterate in lexicographic label order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoordinateVector {
    pub basis: BasisTag,
    pub params: ParameterSet,
    pub entries: BTreeMap<CoordLabel, Scalar>,
}

impl Serialize for CoordinateVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct EntryRepr<'a> {
            head: &'a [u8],
            w: &'a Permutation,
            value: &'a Scalar,
        }
        let entries: Vec<EntryRepr> = self
            .entries
            .iter()
            .map(|(label, value)| EntryRepr {
                head: &label.head,
                w: &label.perm,
                value,
            })
            .collect();
        let mut st = serializer.serialize_struct("CoordinateVector", 3)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("context", &self.params)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

fn add_entry(map: &mut BTreeMap<CoordLabel, Scalar>, label: CoordLabel, value: Scalar) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(label) {
        Entry::Vacant(slot) => {
            slot.insert(value);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += &value;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Expands a diagonal slice sum_k d_k b_k into t-monomial coordinates via
/// b_k = prod_i L_{k_i}(t_i). Returns exponent vector -> coefficient.
fn diagonal_to_monomials(
    ctx: &Context,
    slice: &BTreeMap<&[u8], Scalar>,
) -> BTreeMap<Box<[u8]>, Scalar> {
    let mut out: BTreeMap<Box<[u8]>, Scalar> = BTreeMap::new();
    for (colors, coeff) in slice {
        // Outer product of the n Lagrange coefficient lists.
        let mut partial: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), coeff.clone())];
        for &color in colors.iter() {
            let lagrange = ctx.lagrange(color);
            let mut next = Vec::with_capacity(partial.len() * ctx.r());
            for (exps, c) in &partial {
                for (d, l_coeff) in lagrange.coeffs().iter().enumerate() {
                    if l_coeff.is_zero() {
                        continue;
                    }
                    let mut e = exps.clone();
                    e.push(d as u8);
                    next.push((e, c * l_coeff));
                }
            }
            partial = next;
        }
        for (exps, c) in partial {
            let mut padded = exps;
            // Degree-zero tails: L-polynomials can have low degree, so pad
            // exponent vectors to length n.
            while padded.len() < ctx.n() {
                padded.push(0);
            }
            if c.is_zero() {
                continue;
            }
            use std::collections::btree_map::Entry;
            match out.entry(padded.into()) {
                Entry::Vacant(slot) => {
                    slot.insert(c);
                }
                Entry::Occupied(mut slot) => {
                    *slot.get_mut() += &c;
                    if slot.get().is_zero() {
                        slot.remove();
                    }
                }
            }
        }
    }
    out
}

/// Groups an element's normal-form terms by permutation, keeping each
/// slice's diagonal color coefficients.
fn slices_by_perm(x: &AlgebraElement) -> BTreeMap<&Permutation, BTreeMap<&[u8], Scalar>> {
    let mut out: BTreeMap<&Permutation, BTreeMap<&[u8], Scalar>> = BTreeMap::new();
    for (word, c) in x.terms() {
        out.entry(&word.perm)
            .or_default()
            .insert(word.colors.as_slice(), c.clone());
    }
    out
}

/// The Hecke word T_w = T_{i_1} ... T_{i_l} along the canonical reduced
/// word, with memoization over prefixes.
fn hecke_word(
    ctx: &Context,
    w: &Permutation,
    memo: &mut HashMap<Permutation, AlgebraElement>,
) -> Result<AlgebraElement> {
    if let Some(hit) = memo.get(w) {
        return Ok(hit.clone());
    }
    let value = match w.reduced_word().split_last() {
        None => AlgebraElement::one(ctx),
        Some((&last, prefix)) => {
            let mut prefix_perm = Permutation::identity(ctx.n());
            for &i in prefix {
                prefix_perm = prefix_perm.times_simple(i);
            }
            let head = hecke_word(ctx, &prefix_perm, memo)?;
            head.try_mul(&AlgebraElement::hecke_gen(ctx, last)?)?
        }
    };
    memo.insert(w.clone(), value.clone());
    Ok(value)
}

/// Reads off an element's coordinates over the requested basis.
pub fn to_coordinates(x: &AlgebraElement, basis: BasisTag) -> CoordinateVector {
    let ctx = x.context();
    let mut entries = BTreeMap::new();
    match basis {
        BasisTag::Bg => {
            for (word, c) in x.terms() {
                entries.insert(
                    CoordLabel {
                        head: word.colors.as_slice().into(),
                        perm: word.perm.clone(),
                    },
                    c.clone(),
                );
            }
        }
        BasisTag::Tg => {
            for (perm, slice) in slices_by_perm(x) {
                for (exps, c) in diagonal_to_monomials(ctx, &slice) {
                    add_entry(
                        &mut entries,
                        CoordLabel {
                            head: exps,
                            perm: perm.clone(),
                        },
                        c,
                    );
                }
            }
        }
        BasisTag::Tt => {
            // Peel permutations by decreasing (length, lex) order. The
            // leading slice of T_w is exactly sum_k b_k g_w, so subtracting
            // (diagonal slice) * T_w clears the w-slice and only produces
            // strictly shorter words.
            let mut memo: HashMap<Permutation, AlgebraElement> = HashMap::new();
            let mut residual = x.clone();
            while !residual.is_zero() {
                let w = residual
                    .terms()
                    .map(|(word, _)| word.perm.clone())
                    .max_by_key(|p| (p.length(), p.clone()))
                    .expect("nonzero residual has terms");
                let slice: BTreeMap<&[u8], Scalar> = residual
                    .terms()
                    .filter(|(word, _)| word.perm == w)
                    .map(|(word, c)| (word.colors.as_slice(), c.clone()))
                    .collect();
                for (exps, c) in diagonal_to_monomials(ctx, &slice) {
                    add_entry(
                        &mut entries,
                        CoordLabel {
                            head: exps,
                            perm: w.clone(),
                        },
                        c,
                    );
                }
                let diagonal = AlgebraElement::from_terms(
                    ctx,
                    slice.iter().map(|(colors, c)| {
                        let word = BasisWord::new(
                            crate::color::ColorVector::new(colors, ctx.r()).expect("valid colors"),
                            Permutation::identity(ctx.n()),
                        )
                        .expect("matching sizes");
                        (word, c.clone())
                    }),
                )
                .expect("labels from a valid element");
                let hecke = hecke_word(ctx, &w, &mut memo).expect("index in range");
                residual = residual
                    .try_sub(&diagonal.try_mul(&hecke).expect("same context"))
                    .expect("same context");
            }
        }
    }
    CoordinateVector {
        basis,
        params: x.context().params().clone(),
        entries,
    }
}

fn check_label(ctx: &Context, basis: BasisTag, label: &CoordLabel) -> Result<()> {
    if label.head.len() != ctx.n() || label.perm.n() != ctx.n() {
        return Err(Error::BadLabel(format!(
            "label sized for {} strands in a context with n = {}",
            label.head.len(),
            ctx.n()
        )));
    }
    for &v in label.head.iter() {
        let ok = match basis {
            BasisTag::Bg => v >= 1 && v as usize <= ctx.r(),
            BasisTag::Tg | BasisTag::Tt => (v as usize) < ctx.r(),
        };
        if !ok {
            return Err(Error::BadLabel(format!(
                "entry {v} invalid for basis {basis} with r = {}",
                ctx.r()
            )));
        }
    }
    Ok(())
}

/// Rebuilds the element a coordinate vector describes. The vector's
/// parameters must match the context exactly.
pub fn from_coordinates(ctx: &Context, coords: &CoordinateVector) -> Result<AlgebraElement> {
    if coords.params != *ctx.params() {
        return Err(Error::ContextMismatch);
    }
    let mut acc = AlgebraElement::zero(ctx);
    let mut memo: HashMap<Permutation, AlgebraElement> = HashMap::new();
    for (label, value) in &coords.entries {
        check_label(ctx, coords.basis, label)?;
        let term = match coords.basis {
            BasisTag::Bg => {
                let colors = crate::color::ColorVector::new(&label.head, ctx.r())?;
                AlgebraElement::idempotent(ctx, &colors)?
                    .try_mul(&AlgebraElement::g_word(ctx, &label.perm)?)?
            }
            BasisTag::Tg => {
                let exps: Vec<u32> = label.head.iter().map(|&e| e as u32).collect();
                AlgebraElement::t_monomial(ctx, &exps)?
                    .try_mul(&AlgebraElement::g_word(ctx, &label.perm)?)?
            }
            BasisTag::Tt => {
                let exps: Vec<u32> = label.head.iter().map(|&e| e as u32).collect();
                AlgebraElement::t_monomial(ctx, &exps)?
                    .try_mul(&hecke_word(ctx, &label.perm, &mut memo)?)?
            }
        };
        acc = acc.try_add(&term.scale(value))?;
    }
    Ok(acc)
}

/// The change of spectral parameters: given a target tuple u~ (same n, r,
/// and q), returns the coefficients a_0..a_{r-1} with
/// sum_j a_j u_c^j = u~_c for every color c, together with the images
/// t~_i = sum_j a_j t_i^j computed by that polynomial route.
#[derive(Clone, Debug)]
pub struct ParameterChange {
    pub coefficients: Vec<Scalar>,
    pub images: Vec<AlgebraElement>,
}

pub fn parameter_change_map(ctx: &Context, target: &ParameterSet) -> Result<ParameterChange> {
    if target.n() != ctx.n() || target.r() != ctx.r() || target.q() != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    let r = ctx.r();
    // Vandermonde rows (1, u_c, u_c^2, ...) against the target values.
    let matrix: Vec<Vec<Scalar>> = (1..=r as u8)
        .map(|c| (0..r).map(|j| ctx.u_color(c).pow(j as u32)).collect())
        .collect();
    let rhs: Vec<Scalar> = (1..=r as u8).map(|c| target.u_color(c).clone()).collect();
    let coefficients = linalg::solve(&matrix, &rhs)?;
    let images = (1..=ctx.n())
        .map(|i| {
            let t = AlgebraElement::t_gen(ctx, i)?;
            let mut acc = AlgebraElement::zero(ctx);
            for (j, a) in coefficients.iter().enumerate() {
                acc = acc.try_add(&t.pow(j as u32).scale(a))?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ParameterChange {
        coefficients,
        images,
    })
}
