//! Closed forms for `det D_c^k` in terms of the roots of the band polynomial.
//!
//! Two root conventions are in play. `ψ(t) = Σ s_i t^i` has roots `t_i`;
//! `χ(t) = Π (t - x_i)` has roots `x_i` with `s_i = e_i(x)`. They are
//! related by `t_i = -1/x_i`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::recurrence::subsets;
use crate::shapes::Partition;
use crate::toeplitz::BandedSymbol;

const DISTINCT_REL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    /// zeros `t_i` of `ψ(t) = Σ s_i t^i`
    Psi,
    /// zeros `x_i` of `χ(t) = Π (t - x_i)`
    Chi,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootData {
    roots: Vec<Complex64>,
    kind: RootKind,
}

fn check_distinct(roots: &[Complex64]) -> Result<()> {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let scale = roots[i].norm().max(roots[j].norm());
            if (roots[i] - roots[j]).norm() <= DISTINCT_REL_TOL * scale {
                return Err(Error::RootsNotDistinct { i, j });
            }
        }
    }
    Ok(())
}

impl RootData {
    pub fn new(roots: Vec<Complex64>, kind: RootKind) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidArgument("need at least one root".into()));
        }
        if let Some(i) = roots.iter().position(|z| z.norm() == 0.0) {
            return Err(Error::ZeroRoot(i));
        }
        check_distinct(&roots)?;
        Ok(RootData { roots, kind })
    }

    pub fn chi(roots: Vec<Complex64>) -> Result<Self> {
        Self::new(roots, RootKind::Chi)
    }

    pub fn psi(roots: Vec<Complex64>) -> Result<Self> {
        Self::new(roots, RootKind::Psi)
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    /// Same polynomial, other convention (`t = -1/x` both ways).
    pub fn converted(&self) -> RootData {
        let kind = match self.kind {
            RootKind::Psi => RootKind::Chi,
            RootKind::Chi => RootKind::Psi,
        };
        RootData {
            roots: self.roots.iter().map(|z| -z.inv()).collect(),
            kind,
        }
    }

    fn chi_roots(&self) -> Vec<Complex64> {
        match self.kind {
            RootKind::Chi => self.roots.clone(),
            RootKind::Psi => self.converted().roots,
        }
    }

    /// The band `(1, e_1(x), ..., e_n(x))`.
    pub fn symbol(&self) -> BandedSymbol {
        BandedSymbol::from_roots(&self.chi_roots()).expect("s_0 = 1 by construction")
    }

    /// `s_n = x_1 ... x_n`.
    pub fn s_n(&self) -> Complex64 {
        self.chi_roots().iter().product()
    }
}

fn check_c(c: usize, n: usize) -> Result<()> {
    if c > n {
        return Err(Error::InvalidArgument(format!(
            "need 0 ≤ c ≤ n, got c = {c}, n = {n}"
        )));
    }
    Ok(())
}

/// `det D_c^k = Σ_σ C_σ w_σ^k` over `σ ⊆ [n]` with `|σ| = n - c`, where
/// `w_σ = (-1)^{n-c} s_n Π_{i∈σ} t_i` and
/// `C_σ = Π_{i∈σ} t_i^c Π_{j∈σ, i∉σ} (t_j - t_i)^{-1}`.
pub fn widom_original(rd: &RootData, s_n: Complex64, c: usize, k: u32) -> Result<Complex64> {
    if rd.kind != RootKind::Psi {
        return Err(Error::WrongRootKind { expected: "psi" });
    }
    let n = rd.n();
    check_c(c, n)?;
    let t = &rd.roots;
    let sign = if (n - c) % 2 == 0 { 1.0 } else { -1.0 };
    let mut total = Complex64::new(0.0, 0.0);
    for sigma in subsets(n, n - c) {
        let mut inside = vec![false; n];
        for &i in &sigma {
            inside[i] = true;
        }
        let w = sign * s_n * sigma.iter().map(|&i| t[i]).product::<Complex64>();
        let mut coeff = Complex64::new(1.0, 0.0);
        for &j in &sigma {
            coeff *= t[j].powu(c as u32);
            for i in (0..n).filter(|&i| !inside[i]) {
                coeff /= t[j] - t[i];
            }
        }
        total += coeff * w.powu(k);
    }
    Ok(total)
}

/// `det D_c^k = Σ_τ Π_{i∈τ} x_i^k Π_{i∈τ, j∉τ} x_i / (x_i - x_j)` over `|τ| = c`.
pub fn widom_modified(rd: &RootData, c: usize, k: u32) -> Result<Complex64> {
    if rd.kind != RootKind::Chi {
        return Err(Error::WrongRootKind { expected: "chi" });
    }
    let n = rd.n();
    check_c(c, n)?;
    let x = &rd.roots;
    let mut total = Complex64::new(0.0, 0.0);
    for tau in subsets(n, c) {
        let mut inside = vec![false; n];
        for &i in &tau {
            inside[i] = true;
        }
        let mut term = Complex64::new(1.0, 0.0);
        for &i in &tau {
            term *= x[i].powu(k);
            for j in (0..n).filter(|&j| !inside[j]) {
                term *= x[i] / (x[i] - x[j]);
            }
        }
        total += term;
    }
    Ok(total)
}

/// `S_λ(x) = Σ_w w( x^λ Π_{λ_i > λ_j} x_i / (x_i - x_j) )`, summed over the
/// distinct rearrangements of `λ` (padded to `n`) among the variables.
pub fn hall_schur_eval(lam: &Partition, x: &[Complex64]) -> Result<Complex64> {
    let n = x.len();
    if lam.length() > n {
        return Err(Error::InvalidArgument(format!(
            "{lam} has more than {n} parts"
        )));
    }
    check_distinct(x)?;
    // ascending order so next_permutation visits every arrangement once
    let mut exps: Vec<u32> = lam.padded(n).parts().to_vec();
    exps.sort_unstable();
    let mut total = Complex64::new(0.0, 0.0);
    loop {
        let mut term = Complex64::new(1.0, 0.0);
        for u in 0..n {
            term *= x[u].powu(exps[u]);
            for v in 0..n {
                if exps[u] > exps[v] {
                    term *= x[u] / (x[u] - x[v]);
                }
            }
        }
        total += term;
        if !next_permutation(&mut exps) {
            return Ok(total);
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
