//! The linear recurrence satisfied by `det D^k_{α,β}` in `k`.
//!
//! With `d = c - r` and `b = C(n, d)`, the characteristic polynomial is
//! `prod_{|σ| = d} (t - x_σ1 ... x_σd) = sum_k Q_{b-k} t^k`, and for `j`
//! at or above the shape threshold `sum_k Q_{b-k} det D^{k+j} = 0`.
//! For `d = 0` the single factor has an empty root product and reads `t - 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{JsonTerm, MultiPoly};
use crate::shapes::MinorSpec;
use crate::toeplitz::build_minor_symbolic;

/// `(Q_0, ..., Q_b)` with `Q_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCoeffs {
    n: usize,
    d: usize,
    q: Vec<MultiPoly>,
}

impl CharCoeffs {
    pub fn b(&self) -> usize {
        self.q.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> &[MultiPoly] {
        &self.q
    }
}

pub(crate) fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// The product over `d`-subsets of `(t - x_σ)` expanded by powers of `t`.
pub fn char_coeffs(n: usize, d: usize) -> Result<CharCoeffs> {
    if d > n || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "need 0 ≤ d ≤ n and n ≥ 1, got d = {d}, n = {n}"
        )));
    }
    // descending powers of t
    let mut q = vec![MultiPoly::one(n)];
    for sigma in subsets(n, d) {
        let mut e = vec![0u32; n];
        for &i in &sigma {
            e[i] = 1;
        }
        let root = MultiPoly::from_terms(n, [(e, 1)]).expect("length n");
        let mut next = q.clone();
        next.push(MultiPoly::zero(n));
        for i in 1..next.len() {
            next[i] = &next[i] - &(&root * &q[i - 1]);
        }
        q = next;
    }
    Ok(CharCoeffs { n, d, q })
}

fn residual_from_dets(cc: &CharCoeffs, dets: &[MultiPoly], j: usize) -> MultiPoly {
    let b = cc.b();
    (0..=b).fold(MultiPoly::zero(cc.n), |acc, k| {
        &acc + &(&cc.q[b - k] * &dets[k + j])
    })
}

/// `sum_{k=0}^{b} Q_{b-k} det D^{k+j}_{α,β}`, computed exactly.
pub fn recurrence_residual(spec: &MinorSpec, j: usize) -> MultiPoly {
    let cc = char_coeffs(spec.n(), spec.c() - spec.r()).expect("valid spec has c - r ≤ n");
    let dets = build_minor_symbolic(spec, j + cc.b()).leading_minors();
    residual_from_dets(&cc, &dets, j)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualEntry {
    pub j: usize,
    pub zero: bool,
    pub checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<JsonTerm>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecurrenceReport {
    pub spec: MinorSpec,
    pub b: usize,
    pub j_range: (usize, usize),
    pub all_zero: bool,
    pub first_failure: Option<usize>,
    /// Every `j` in `0..=j_max`; only those with `checked` count toward `all_zero`.
    pub residuals: Vec<ResidualEntry>,
}

/// Checks the recurrence for `j` in `min_k..=j_max`, also recording residuals below the threshold.
pub fn verify_recurrence(spec: &MinorSpec, j_max: usize) -> RecurrenceReport {
    let cc = char_coeffs(spec.n(), spec.c() - spec.r()).expect("valid spec has c - r ≤ n");
    let dets = build_minor_symbolic(spec, j_max + cc.b()).leading_minors();
    let min_k = spec.min_k();
    let mut residuals = Vec::new();
    let mut first_failure = None;
    for j in 0..=j_max {
        let res = residual_from_dets(&cc, &dets, j);
        let checked = j >= min_k;
        if checked && !res.is_zero() && first_failure.is_none() {
            first_failure = Some(j);
        }
        residuals.push(ResidualEntry {
            j,
            zero: res.is_zero(),
            checked,
            residual: (!res.is_zero()).then(|| res.json_terms()),
        });
    }
    RecurrenceReport {
        spec: spec.clone(),
        b: cc.b(),
        j_range: (min_k, j_max),
        all_zero: first_failure.is_none(),
        first_failure,
        residuals,
    }
}
