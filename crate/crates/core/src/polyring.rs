//! Sparse multivariate polynomials in `x1..xn` with arbitrary-precision
//! integer coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order (highest
//! total degree first, ties broken by the exponent of `x1`, then `x2`, ...)
//! and zero coefficients are never stored, so two equal polynomials always
//! have identical term sequences.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x1^a1 * ... * xn^an`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

/// Graded-lex: total degree first, then lexicographic on exponents.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    // descending grlex, no zero coefficients
    terms: Vec<(Monomial, BigInt)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    /// The variable `x_{index+1}`.
    pub fn variable(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::InvalidArgument(format!(
                "variable index {index} out of range for {nvars} variables"
            )));
        }
        let mut e = vec![0; nvars];
        e[index] = 1;
        Ok(MultiPoly {
            nvars,
            terms: vec![(Monomial(e), BigInt::one())],
        })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: exps.len(),
                });
            }
            *acc.entry(exps).or_default() += c.into();
        }
        Ok(Self::from_map(nvars, acc))
    }

    fn from_map(nvars: usize, acc: HashMap<Vec<u32>, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.degree() == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        let probe = Monomial(exponents.to_vec());
        self.terms
            .binary_search_by(|(m, _)| probe.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Sum of all coefficients, i.e. the value at `(1, ..., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.merge(other, true))
    }

    // Merge of two sorted term lists.
    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        MultiPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        if let Some(p) = self.mul_packed(other) {
            return Ok(p);
        }
        let n = self.nvars;
        let mut acc: HashMap<Vec<u32>, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        let mut buf = vec![0u32; n];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = ma.0[k] + mb.0[k];
                }
                let prod = ca * cb;
                match acc.get_mut(buf.as_slice()) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(buf.clone(), prod);
                    }
                }
            }
        }
        Ok(Self::from_map(n, acc))
    }

    fn mul_packed(&self, other: &Self) -> Option<Self> {
        dot_packed(self.nvars, &[(self, other)])
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: perm.len(),
            });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; self.nvars];
            for (i, &p) in perm.iter().enumerate() {
                e[p] = m.0[i];
            }
            (e, c.clone())
        });
        Self::from_terms(self.nvars, terms)
    }

    /// Invariant under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute_variables(&perm).as_ref() == Ok(self)
        })
    }

    /// Evaluates the polynomial at a complex point in double precision.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.nvars {
            return Err(Error::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(bigint_to_f64(c), 0.0);
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    term *= x.powu(e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_terms()).expect("terms serialize")
    }

    pub fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m.0.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[JsonTerm]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| {
                t.coeff
                    .parse::<BigInt>()
                    .map(|c| (t.exps.clone(), c))
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", t.coeff)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(nvars, parsed)
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Serialized term: `{"coeff": "<decimal>", "exps": [a1, ..., an]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// `Σ a_i * b_i`, accumulated in one pass.
pub fn dot(nvars: usize, pairs: &[(&MultiPoly, &MultiPoly)]) -> MultiPoly {
    let pairs: Vec<(&MultiPoly, &MultiPoly)> = pairs
        .iter()
        .copied()
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .collect();
    for (a, b) in &pairs {
        assert!(
            a.nvars == nvars && b.nvars == nvars,
            "variable count mismatch"
        );
    }
    if let Some(p) = dot_packed(nvars, &pairs) {
        return p;
    }
    pairs
        .iter()
        .fold(MultiPoly::zero(nvars), |acc, (a, b)| &acc + &(*a * *b))
}

const PACK_BITS: u32 = 16;

fn pack(m: &Monomial) -> u128 {
    m.0.iter().fold(0u128, |k, &e| (k << PACK_BITS) | e as u128)
}

/// Exponents packed 16 bits per variable into a `u128` (monomial products
/// become key sums) with `i128` accumulation. `None` when a coefficient
/// exceeds `i64`, an exponent could overflow its field, or a partial sum
/// could overflow.
fn dot_packed(nvars: usize, pairs: &[(&MultiPoly, &MultiPoly)]) -> Option<MultiPoly> {
    if nvars > (128 / PACK_BITS) as usize {
        return None;
    }
    let small = |p: &MultiPoly| -> Option<(Vec<(u128, i64)>, f64, u32)> {
        let mut l1 = 0.0;
        let mut top = 0;
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let c = c.to_i64()?;
                l1 += (c as f64).abs();
                top = top.max(m.0.iter().copied().max().unwrap_or(0));
                Some((pack(m), c))
            })
            .collect::<Option<Vec<_>>>()?;
        Some((terms, l1, top))
    };
    let mut packed = Vec::with_capacity(pairs.len());
    let mut bound = 0.0;
    let mut size = 0;
    for (a, b) in pairs {
        let (ta, la, ea) = small(a)?;
        let (tb, lb, eb) = small(b)?;
        if ea + eb >= 1 << PACK_BITS {
            return None;
        }
        bound += la * lb;
        size += ta.len() * tb.len();
        packed.push((ta, tb));
    }
    if bound >= 1e37 {
        return None;
    }
    let mut acc: FxHashMap<u128, i128> = FxHashMap::default();
    acc.reserve(size / 2 + 1);
    for (ta, tb) in &packed {
        for &(ka, ca) in ta {
            for &(kb, cb) in tb {
                *acc.entry(ka + kb).or_insert(0) += ca as i128 * cb as i128;
            }
        }
    }
    let mask = (1u128 << PACK_BITS) - 1;
    let mut terms: Vec<(Monomial, BigInt)> = acc
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(key, c)| {
            let exps = (0..nvars)
                .map(|k| ((key >> (PACK_BITS * (nvars - 1 - k) as u32)) & mask) as u32)
                .collect();
            (Monomial(exps), BigInt::from(c))
        })
        .collect();
    terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    Some(MultiPoly { nvars, terms })
}

/// `e_i(x1..xn)`; the constant 1 for `i = 0` and zero for `i > n`.
pub fn elementary_symmetric(i: usize, n: usize) -> MultiPoly {
    if i > n {
        return MultiPoly::zero(n);
    }
    let mut terms = Vec::new();
    let mut subset: Vec<usize> = (0..i).collect();
    loop {
        let mut e = vec![0u32; n];
        for &s in &subset {
            e[s] = 1;
        }
        terms.push((e, 1));
        // next i-subset in lexicographic order
        let mut pos = i;
        loop {
            if pos == 0 {
                return MultiPoly::from_terms(n, terms).expect("exponent length is n");
            }
            pos -= 1;
            if subset[pos] < n - i + pos {
                subset[pos] += 1;
                for q in pos + 1..i {
                    subset[q] = subset[q - 1] + 1;
                }
                break;
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, e)
                        }
                    })
                    .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    /// Panics on a variable-count mismatch; use [`MultiPoly::checked_add`] otherwise.
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("operands share nvars")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("operands share nvars")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("operands share nvars")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}
