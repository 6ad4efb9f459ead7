//! Algebra elements in the normal form sum_{k,w} c_{k,w} b_k g_w, where b_k
//! is the color idempotent of the vector k and g_w the braid-like element of
//! the permutation w. Multiplication rewrites products back into this form
//! with two rules:
//!
//!   (b_k g_w) b_m   = [k = w.m] b_k g_w
//!   (b_k g_w) g_i   = b_k g_{w s_i}                       if length grows,
//!                     b_k g_{w s_i} + (q - q^{-1}) [k_{w(i)} = k_{w(i+1)}] b_k g_w
//!                                                          if length drops,
//!
//! the first because g_w b_m = b_{w.m} g_w, the second because
//! g_w g_i = g_{w s_i} + (q - q^{-1}) g_w e_i on a descent and
//! g_w e_i = e_{w(i), w(i+1)} g_w.

use std::collections::BTreeMap;

use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::color::ColorVector;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::UniPolynomial;
use crate::scalar::{ParameterSet, Scalar};

/// One normal-form basis label: the pair (k, w) of b_k g_w.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisWord {
    pub colors: ColorVector,
    pub perm: Permutation,
}

impl BasisWord {
    pub fn new(colors: ColorVector, perm: Permutation) -> Result<Self> {
        if colors.n() != perm.n() {
            return Err(Error::SizeMismatch(format!(
                "color vector of length {} does not match permutation rank {}",
                colors.n(),
                perm.n()
            )));
        }
        Ok(BasisWord { colors, perm })
    }
}

/// An element of the algebra attached to one [`Context`], stored as its
/// normal-form coordinates over the b_k g_w basis. The map never holds zero
/// coefficients, so structural equality is element equality.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    ctx: Context,
    terms: BTreeMap<BasisWord, Scalar>,
}

fn add_term(terms: &mut BTreeMap<BasisWord, Scalar>, word: BasisWord, value: Scalar) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(word) {
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

impl AlgebraElement {
    fn word_fits(ctx: &Context, word: &BasisWord) -> Result<()> {
        if word.colors.n() != ctx.n() || word.perm.n() != ctx.n() {
            return Err(Error::SizeMismatch(format!(
                "basis word on {} strands does not fit a context with n = {}",
                word.colors.n(),
                ctx.n()
            )));
        }
        for i in 1..=ctx.n() {
            if word.colors.color(i) as usize > ctx.r() {
                return Err(Error::IndexOutOfRange(format!(
                    "color {} exceeds r = {}",
                    word.colors.color(i),
                    ctx.r()
                )));
            }
        }
        Ok(())
    }

    pub fn zero(ctx: &Context) -> Self {
        AlgebraElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds an element from raw terms, validating every label against the
    /// context, summing duplicates, and dropping zeros.
    pub fn from_terms(
        ctx: &Context,
        terms: impl IntoIterator<Item = (BasisWord, Scalar)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (word, value) in terms {
            Self::word_fits(ctx, &word)?;
            add_term(&mut map, word, value);
        }
        Ok(AlgebraElement {
            ctx: ctx.clone(),
            terms: map,
        })
    }

    /// A diagonal element sum_k f(k) b_k; zero values are dropped.
    fn diagonal(ctx: &Context, f: impl Fn(&ColorVector) -> Scalar) -> Self {
        let id = Permutation::identity(ctx.n());
        let mut terms = BTreeMap::new();
        for k in ctx.colors() {
            let value = f(k);
            if !value.is_zero() {
                terms.insert(
                    BasisWord {
                        colors: k.clone(),
                        perm: id.clone(),
                    },
                    value,
                );
            }
        }
        AlgebraElement {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The unit 1 = sum_k b_k.
    pub fn one(ctx: &Context) -> Self {
        Self::diagonal(ctx, |_| Scalar::one())
    }

    /// The color idempotent b_k.
    pub fn idempotent(ctx: &Context, k: &ColorVector) -> Result<Self> {
        let word = BasisWord::new(k.clone(), Permutation::identity(k.n()))?;
        Self::word_fits(ctx, &word)?;
        Ok(AlgebraElement {
            ctx: ctx.clone(),
            terms: BTreeMap::from([(word, Scalar::one())]),
        })
    }

    /// The spectral generator t_i = sum_k u_{k_i} b_k, 1 <= i <= n.
    pub fn t_gen(ctx: &Context, i: usize) -> Result<Self> {
        if i == 0 || i > ctx.n() {
            return Err(Error::IndexOutOfRange(format!(
                "t index {i} lies outside 1..={}",
                ctx.n()
            )));
        }
        Ok(Self::diagonal(ctx, |k| ctx.u_color(k.color(i)).clone()))
    }

    /// The monomial t_1^{e_1} ... t_n^{e_n} = sum_k (prod_i u_{k_i}^{e_i}) b_k.
    pub fn t_monomial(ctx: &Context, exponents: &[u32]) -> Result<Self> {
        if exponents.len() != ctx.n() {
            return Err(Error::BadShape(format!(
                "expected {} exponents, got {}",
                ctx.n(),
                exponents.len()
            )));
        }
        // Table of u_c^{e_i} per strand and color.
        let table: Vec<Vec<Scalar>> = exponents
            .iter()
            .map(|&e| (1..=ctx.r() as u8).map(|c| ctx.u_color(c).pow(e)).collect())
            .collect();
        Ok(Self::diagonal(ctx, |k| {
            let mut acc = Scalar::one();
            for i in 1..=ctx.n() {
                acc *= &table[i - 1][(k.color(i) - 1) as usize];
            }
            acc
        }))
    }

    /// f(t_i) = sum_k f(u_{k_i}) b_k for a univariate polynomial f.
    pub fn univariate_at(ctx: &Context, f: &UniPolynomial, i: usize) -> Result<Self> {
        if i == 0 || i > ctx.n() {
            return Err(Error::IndexOutOfRange(format!(
                "strand {i} lies outside 1..={}",
                ctx.n()
            )));
        }
        let values: Vec<Scalar> = (1..=ctx.r() as u8).map(|c| f.eval(ctx.u_color(c))).collect();
        Ok(Self::diagonal(ctx, |k| {
            values[(k.color(i) - 1) as usize].clone()
        }))
    }

    fn check_adjacent_index(ctx: &Context, i: usize) -> Result<()> {
        if i == 0 || i + 1 > ctx.n() {
            return Err(Error::IndexOutOfRange(format!(
                "adjacent-pair index {i} lies outside 1..={}",
                ctx.n().saturating_sub(1)
            )));
        }
        Ok(())
    }

    /// The adjacent matching idempotent e_i = sum_{k_i = k_{i+1}} b_k.
    pub fn match_idempotent(ctx: &Context, i: usize) -> Result<Self> {
        Self::check_adjacent_index(ctx, i)?;
        Ok(Self::diagonal(ctx, |k| {
            if k.color(i) == k.color(i + 1) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }))
    }

    /// The general matching idempotent e_{i,j} = sum_{k_i = k_j} b_k.
    /// For i = j every color vector matches, so the result is 1.
    pub fn pair_match_idempotent(ctx: &Context, i: usize, j: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx == 0 || idx > ctx.n() {
                return Err(Error::IndexOutOfRange(format!(
                    "strand {idx} lies outside 1..={}",
                    ctx.n()
                )));
            }
        }
        Ok(Self::diagonal(ctx, |k| {
            if k.color(i) == k.color(j) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }))
    }

    /// B'_{i,j} = -(q - q^{-1}) sum_{k_i < k_j} b_k, the correction summand
    /// that turns the Hecke generator into the braid-like one. Zero when
    /// i = j (empty sum).
    pub fn b_prime(ctx: &Context, i: usize, j: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx == 0 || idx > ctx.n() {
                return Err(Error::IndexOutOfRange(format!(
                    "strand {idx} lies outside 1..={}",
                    ctx.n()
                )));
            }
        }
        let minus_defect = -ctx.q_defect();
        Ok(Self::diagonal(ctx, |k| {
            if k.color(i) < k.color(j) {
                minus_defect.clone()
            } else {
                Scalar::zero()
            }
        }))
    }

    /// B_i = (q - q^{-1}) sum_{k_i < k_{i+1}} (u_{k_i} - u_{k_{i+1}}) b_k,
    /// the defect in the commutation of T_i past t_i and t_{i+1}.
    pub fn b_defect(ctx: &Context, i: usize) -> Result<Self> {
        Self::check_adjacent_index(ctx, i)?;
        let defect = ctx.q_defect().clone();
        Ok(Self::diagonal(ctx, |k| {
            if k.color(i) < k.color(i + 1) {
                &defect * &(ctx.u_color(k.color(i)) - ctx.u_color(k.color(i + 1)))
            } else {
                Scalar::zero()
            }
        }))
    }

    /// The braid-like generator g_i = sum_k b_k g_{s_i}.
    pub fn braid_gen(ctx: &Context, i: usize) -> Result<Self> {
        Self::check_adjacent_index(ctx, i)?;
        Self::g_word(ctx, &Permutation::simple(ctx.n(), i)?)
    }

    /// g_i^{-1} = g_i - (q - q^{-1}) e_i.
    pub fn braid_gen_inverse(ctx: &Context, i: usize) -> Result<Self> {
        let g = Self::braid_gen(ctx, i)?;
        let e = Self::match_idempotent(ctx, i)?;
        Ok(&g - &e.scale(ctx.q_defect()))
    }

    /// The Hecke generator T_i = g_i - B'_{i,i+1}.
    pub fn hecke_gen(ctx: &Context, i: usize) -> Result<Self> {
        let g = Self::braid_gen(ctx, i)?;
        let bp = Self::b_prime(ctx, i, i + 1)?;
        Ok(&g - &bp)
    }

    /// g_w = sum_k b_k g_w, equal to the product of braid generators along
    /// any reduced word of w (every step of a reduced word is an ascent, so
    /// the fold never spawns correction terms).
    pub fn g_word(ctx: &Context, w: &Permutation) -> Result<Self> {
        if w.n() != ctx.n() {
            return Err(Error::SizeMismatch(format!(
                "permutation rank {} does not match n = {}",
                w.n(),
                ctx.n()
            )));
        }
        let mut terms = BTreeMap::new();
        for k in ctx.colors() {
            terms.insert(
                BasisWord {
                    colors: k.clone(),
                    perm: w.clone(),
                },
                Scalar::one(),
            );
        }
        Ok(AlgebraElement {
            ctx: ctx.clone(),
            terms,
        })
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &Scalar)> {
        self.terms.iter()
    }

    /// The coefficient of b_k g_w (zero when absent).
    pub fn coefficient(&self, word: &BasisWord) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.ctx);
        }
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(word, c)| (word.clone(), c * factor))
                .collect(),
        }
    }

    fn check_same_context(&self, other: &Self) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_context(other)?;
        let mut terms = self.terms.clone();
        for (word, value) in &other.terms {
            add_term(&mut terms, word.clone(), value.clone());
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_context(other)?;
        let mut terms = self.terms.clone();
        for (word, value) in &other.terms {
            add_term(&mut terms, word.clone(), -value);
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// The normal-form product, one pair of terms at a time: the color gate
    /// decides survival, then the reduced word of the right permutation is
    /// folded through the left one.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_context(other)?;
        let defect = self.ctx.q_defect();
        let mut out: BTreeMap<BasisWord, Scalar> = BTreeMap::new();
        for (wy, cy) in &other.terms {
            let word_v = wy.perm.reduced_word();
            for (wx, cx) in &self.terms {
                // (b_k g_w) b_m = [k = w.m] b_k g_w.
                let moved = wy.colors.place_act(&wx.perm).expect("validated sizes");
                if moved != wx.colors {
                    continue;
                }
                // Fold g_w g_v letter by letter over a perm -> coeff map.
                let mut acc: BTreeMap<Permutation, Scalar> =
                    BTreeMap::from([(wx.perm.clone(), cx * cy)]);
                for &i in &word_v {
                    let mut next: BTreeMap<Permutation, Scalar> = BTreeMap::new();
                    let mut push = |w: Permutation, c: Scalar| {
                        if c.is_zero() {
                            return;
                        }
                        use std::collections::btree_map::Entry;
                        match next.entry(w) {
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
                    };
                    for (wp, c) in acc {
                        let descent = wp.has_right_descent(i);
                        if descent
                            && wx.colors.color(wp.apply(i)) == wx.colors.color(wp.apply(i + 1))
                        {
                            push(wp.times_simple(i), c.clone());
                            push(wp, &c * defect);
                        } else {
                            push(wp.times_simple(i), c);
                        }
                    }
                    acc = next;
                }
                for (wfin, c) in acc {
                    add_term(
                        &mut out,
                        BasisWord {
                            colors: wx.colors.clone(),
                            perm: wfin,
                        },
                        c,
                    );
                }
            }
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms: out,
        })
    }

    /// Nonnegative power by repeated squaring; pow(0) is the unit.
    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same context");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same context");
            }
        }
        acc
    }

    /// The color-relabeling action of sigma in Sym(r):
    /// b_k g_w -> b_{sigma(k_1)..sigma(k_n)} g_w.
    pub fn relabel_colors(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != self.ctx.r() {
            return Err(Error::SizeMismatch(format!(
                "relabeling rank {} does not match r = {}",
                sigma.n(),
                self.ctx.r()
            )));
        }
        let mut terms = BTreeMap::new();
        for (word, value) in &self.terms {
            let relabeled = BasisWord {
                colors: word.colors.relabel(sigma)?,
                perm: word.perm.clone(),
            };
            terms.insert(relabeled, value.clone());
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

macro_rules! element_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$checked(rhs).expect("elements from one context")
            }
        }
    };
}

element_binop!(Add, add, try_add);
element_binop!(Sub, sub, try_sub);
element_binop!(Mul, mul, try_mul);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(word, c)| (word.clone(), -c))
                .collect(),
        }
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermRepr<'a> {
            k: &'a ColorVector,
            w: &'a Permutation,
            c: &'a Scalar,
        }
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(word, c)| TermRepr {
                k: &word.colors,
                w: &word.perm,
                c,
            })
            .collect();
        let mut st = serializer.serialize_struct("AlgebraElement", 2)?;
        st.serialize_field("context", self.ctx.params())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct RawTerm {
            k: Vec<u8>,
            w: Vec<u8>,
            c: Scalar,
        }
        #[derive(Deserialize)]
        struct Raw {
            context: ParameterSet,
            terms: Vec<RawTerm>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let ctx = Context::new(raw.context).map_err(|e| D::Error::custom(format!("{e}")))?;
        let r = ctx.r();
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let colors = ColorVector::new(&t.k, r)?;
                let perm = Permutation::from_one_line(&t.w)?;
                Ok((BasisWord::new(colors, perm)?, t.c))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(format!("{e}")))?;
        AlgebraElement::from_terms(&ctx, terms).map_err(|e| D::Error::custom(format!("{e}")))
    }
}
