//! Root moduli of `Q(v, z) = Σ s_i z^i - v z^c`, scans for the curve where
//! the `c`-th and `(c+1)`-th smallest moduli meet, and finite-section
//! eigenvalues to compare against.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::MinorSpec;
use crate::toeplitz::{
    build_minor_numeric, diagonal_offsets, format_real, BandedSymbol, NumMatrix,
};

const ABERTH_MAX_ITER: usize = 200;
const ABERTH_SEED: u64 = 0x0ddb_a11;
const QR_MAX_ITER: usize = 30_000;
const RESIDUAL_TOL: f64 = 1e-10;

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// `p(z)`, `p'(z)` and `Σ |a_i| |z|^i`, all by Horner.
fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = czero();
    let mut dp = czero();
    let mut scale = 0.0;
    let r = z.norm();
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
        scale = scale * r + a.norm();
    }
    (p, dp, scale)
}

/// All roots of `Σ coeffs[i] z^i`, sorted by modulus then argument.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    aberth(coeffs, ABERTH_MAX_ITER)
}

fn aberth(coeffs: &[Complex64], max_iter: usize) -> Result<Vec<Complex64>> {
    if coeffs.iter().any(|a| !a.is_finite()) {
        return Err(Error::InvalidArgument(
            "non-finite polynomial coefficient".into(),
        ));
    }
    match coeffs.last() {
        None => return Err(Error::InvalidArgument("empty coefficient list".into())),
        Some(a) if a.norm() == 0.0 => return Err(Error::DegreeDrop),
        _ => {}
    }
    let zeros = coeffs.iter().take_while(|a| a.norm() == 0.0).count();
    let p = &coeffs[zeros..];
    let d = p.len() - 1;
    let mut roots = vec![czero(); zeros];
    if d == 0 {
        return Ok(roots);
    }

    let radius = 1.1 * (p[0] / p[d]).norm().powf(1.0 / d as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(ABERTH_SEED);
    let mut z: Vec<Complex64> = (0..d)
        .map(|_| Complex64::from_polar(radius, rng.gen_range(0.0..std::f64::consts::TAU)))
        .collect();

    let eps = f64::EPSILON;
    let mut done = vec![false; d];
    let mut iterations = 0;
    while iterations < max_iter && !done.iter().all(|&x| x) {
        iterations += 1;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (pv, dpv, scale) = horner(p, z[i]);
            if pv.norm() <= 4.0 * eps * scale {
                done[i] = true;
                continue;
            }
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let denom = dpv / pv - repulsion;
            let w = if denom.norm() == 0.0 || !denom.is_finite() {
                // stalled on a critical point; nudge off it
                Complex64::new(radius * 1e-3, radius * 1e-3)
            } else {
                denom.inv()
            };
            z[i] -= w;
            if w.norm() <= 4.0 * eps * z[i].norm() {
                done[i] = true;
            }
        }
    }

    let ok = z.iter().all(|&zi| {
        let (pv, _, scale) = horner(p, zi);
        zi.is_finite() && pv.norm() <= RESIDUAL_TOL * scale
    });
    if !ok {
        sort_roots(&mut z);
        return Err(Error::RootNotConverged {
            iterations,
            best: z,
        });
    }
    roots.extend(z);
    sort_roots(&mut roots);
    Ok(roots)
}

fn sort_roots(z: &mut [Complex64]) {
    z.sort_by(|a, b| {
        a.norm()
            .total_cmp(&b.norm())
            .then(a.arg().total_cmp(&b.arg()))
    });
}

fn check_offset(sym: &BandedSymbol, c: usize) -> Result<()> {
    if c == 0 || c >= sym.n() {
        return Err(Error::InvalidArgument(format!(
            "need 0 < c < n, got c = {c}, n = {}",
            sym.n()
        )));
    }
    Ok(())
}

/// Coefficients of `Q(v, z)` in ascending powers of `z`.
pub fn q_coeffs(sym: &BandedSymbol, c: usize, v: Complex64) -> Vec<Complex64> {
    let mut a = sym.coeffs().to_vec();
    a[c] -= v;
    a
}

/// Sorted moduli `ρ_1 ≤ ... ≤ ρ_n` of the zeros of `Q(v, ·)`.
pub fn rho_profile(sym: &BandedSymbol, c: usize, v: Complex64) -> Result<Vec<f64>> {
    check_offset(sym, c)?;
    if sym.coeffs()[sym.n()].norm() == 0.0 {
        return Err(Error::DegreeDrop);
    }
    let mut rho: Vec<f64> = poly_roots(&q_coeffs(sym, c, v))?
        .iter()
        .map(|z| z.norm())
        .collect();
    rho.sort_by(f64::total_cmp);
    Ok(rho)
}

/// `(ρ_{c+1} - ρ_c) / ρ_{c+1}`.
pub fn relative_gap(rho: &[f64], c: usize) -> f64 {
    (rho[c] - rho[c - 1]) / rho[c]
}

/// Rectangle `[re_min, re_max] × [im_min, im_max]` sampled at `nx × ny` points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub nx: usize,
    pub ny: usize,
}

fn axis(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    if n == 1 {
        0.5 * (lo + hi)
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

impl GridSpec {
    pub fn new(
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
        nx: usize,
        ny: usize,
    ) -> Result<Self> {
        let finite = [re_min, re_max, im_min, im_max]
            .iter()
            .all(|x| x.is_finite());
        if !finite || re_min >= re_max || im_min >= im_max {
            return Err(Error::InvalidGrid(format!(
                "need re_min < re_max and im_min < im_max, got [{re_min}, {re_max}] × [{im_min}, {im_max}]"
            )));
        }
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidGrid("nx and ny must be positive".into()));
        }
        Ok(GridSpec {
            re_min,
            re_max,
            im_min,
            im_max,
            nx,
            ny,
        })
    }

    /// `re_min,re_max,im_min,im_max,nx,ny`.
    pub fn parse(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split(',').map(str::trim).collect();
        if toks.len() != 6 {
            return Err(Error::InvalidGrid(format!(
                "expected re_min,re_max,im_min,im_max,nx,ny; got {s:?}"
            )));
        }
        let f = |t: &str| {
            t.parse::<f64>()
                .map_err(|_| Error::InvalidGrid(format!("bad number {t:?}")))
        };
        let u = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidGrid(format!("bad count {t:?}")))
        };
        Self::new(
            f(toks[0])?,
            f(toks[1])?,
            f(toks[2])?,
            f(toks[3])?,
            u(toks[4])?,
            u(toks[5])?,
        )
    }

    pub fn point(&self, ix: usize, iy: usize) -> Complex64 {
        Complex64::new(
            axis(self.re_min, self.re_max, self.nx, ix),
            axis(self.im_min, self.im_max, self.ny, iy),
        )
    }

    pub fn dx(&self) -> f64 {
        (self.re_max - self.re_min) / (self.nx.max(2) - 1) as f64
    }

    pub fn dy(&self) -> f64 {
        (self.im_max - self.im_min) / (self.ny.max(2) - 1) as f64
    }

    /// Larger of the two spacings.
    pub fn pitch(&self) -> f64 {
        self.dx().max(self.dy())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hit {
    pub re: f64,
    pub im: f64,
    pub gap: f64,
    pub rho: Vec<f64>,
}

impl Hit {
    pub fn v(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanFailure {
    pub re: f64,
    pub im: f64,
    pub error: String,
}

fn symbol_str<S: Serializer>(sym: &BandedSymbol, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(sym)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitSetReport {
    #[serde(serialize_with = "symbol_str")]
    pub symbol: BandedSymbol,
    pub c: usize,
    pub grid: GridSpec,
    pub tol: f64,
    pub refine: usize,
    pub notes: Vec<String>,
    /// Grid points with gap ≤ tol, row-major (imaginary part outer).
    pub hits: Vec<Hit>,
    /// Sub-grid points around each hit, grouped by parent in hit order.
    pub refined_hits: Vec<Hit>,
    pub failures: Vec<ScanFailure>,
}

impl LimitSetReport {
    /// Coarse hits first, then refined ones.
    pub fn all_hits(&self) -> impl Iterator<Item = &Hit> {
        self.hits.iter().chain(&self.refined_hits)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("re_v,im_v,gap\n");
        for h in self.all_hits() {
            writeln!(
                out,
                "{},{},{}",
                format_real(h.re),
                format_real(h.im),
                format_real(h.gap)
            )
            .expect("write to String");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn scan_point(
    sym: &BandedSymbol,
    c: usize,
    v: Complex64,
    tol: f64,
) -> std::result::Result<Option<Hit>, ScanFailure> {
    match rho_profile(sym, c, v) {
        Ok(rho) => {
            let gap = relative_gap(&rho, c);
            Ok((gap <= tol).then(|| Hit {
                re: v.re,
                im: v.im,
                gap,
                rho,
            }))
        }
        Err(e) => Err(ScanFailure {
            re: v.re,
            im: v.im,
            error: e.to_string(),
        }),
    }
}

fn scan_points(
    sym: &BandedSymbol,
    c: usize,
    points: &[Complex64],
    tol: f64,
) -> (Vec<Hit>, Vec<ScanFailure>) {
    let results: Vec<_> = points
        .par_iter()
        .map(|&v| scan_point(sym, c, v, tol))
        .collect();
    let mut hits = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(Some(h)) => hits.push(h),
            Ok(None) => {}
            Err(f) => failures.push(f),
        }
    }
    (hits, failures)
}

pub fn limit_set_scan(
    sym: &BandedSymbol,
    c: usize,
    grid: &GridSpec,
    tol: f64,
) -> Result<LimitSetReport> {
    limit_set_scan_refined(sym, c, grid, tol, 0)
}

/// As [`limit_set_scan`], then rescans a `refine × refine` sub-grid in the
/// cell around every hit when `refine ≥ 2`.
pub fn limit_set_scan_refined(
    sym: &BandedSymbol,
    c: usize,
    grid: &GridSpec,
    tol: f64,
    refine: usize,
) -> Result<LimitSetReport> {
    check_offset(sym, c)?;
    if !(0.0..1.0).contains(&tol) {
        return Err(Error::InvalidArgument(format!(
            "tol must lie in [0, 1), got {tol}"
        )));
    }
    if sym.coeffs()[sym.n()].norm() == 0.0 {
        return Err(Error::DegreeDrop);
    }
    let points: Vec<Complex64> = (0..grid.ny)
        .flat_map(|iy| (0..grid.nx).map(move |ix| grid.point(ix, iy)))
        .collect();
    let (hits, mut failures) = scan_points(sym, c, &points, tol);

    let mut refined_hits = Vec::new();
    if refine >= 2 {
        let (hx, hy) = (0.5 * grid.dx(), 0.5 * grid.dy());
        let sub: Vec<Complex64> = hits
            .iter()
            .flat_map(|h| {
                (0..refine).flat_map(move |iy| {
                    (0..refine).filter_map(move |ix| {
                        let p = Complex64::new(
                            axis(h.re - hx, h.re + hx, refine, ix),
                            axis(h.im - hy, h.im + hy, refine, iy),
                        );
                        // the parent point itself is already reported
                        (p != h.v()).then_some(p)
                    })
                })
            })
            .collect();
        let (more, fails) = scan_points(sym, c, &sub, tol);
        refined_hits = more;
        failures.extend(fails);
    }

    Ok(LimitSetReport {
        symbol: sym.clone(),
        c,
        grid: *grid,
        tol,
        refine,
        notes: vec![
            "hits approximate the curve where the c-th and (c+1)-th root moduli coincide; \
             isolated exceptional limit points are not detected"
                .into(),
            "non-degeneracy of the symbol is not verified".into(),
        ],
        hits,
        refined_hits,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumResult {
    #[serde(serialize_with = "symbol_str")]
    pub symbol: BandedSymbol,
    pub spec: MinorSpec,
    pub k: usize,
    /// Sorted by real part, then imaginary part.
    #[serde(serialize_with = "eig_list")]
    pub eigenvalues: Vec<Complex64>,
}

fn eig_list<S: Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|z| Eigenvalue { re: z.re, im: z.im }))
}

impl SpectrumResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im\n");
        for z in &self.eigenvalues {
            writeln!(out, "{},{}", format_real(z.re), format_real(z.im)).expect("write to String");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serializes")
    }
}

/// Eigenvalues of `D^k_{α,β}` for a spec whose main diagonal is constantly `s_c`.
pub fn finite_section_spectrum(
    sym: &BandedSymbol,
    spec: &MinorSpec,
    k: usize,
) -> Result<SpectrumResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let Some(c) = spec.family_offset() else {
        return Err(Error::InvalidMinorSpec(format!(
            "{spec} does not have the form alpha = (g..), beta = (1..c, g..)"
        )));
    };
    if let Some(bad) = diagonal_offsets(spec, k)
        .iter()
        .position(|&d| d != c as i64)
    {
        return Err(Error::InvalidMinorSpec(format!(
            "diagonal entry {} is not s_{c}",
            bad + 1
        )));
    }
    let m = build_minor_numeric(sym, spec, k)?;
    let mut eigenvalues = eigenvalues(&m)?;
    eigenvalues.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(SpectrumResult {
        symbol: sym.clone(),
        spec: spec.clone(),
        k,
        eigenvalues,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub k: usize,
    pub hits: usize,
    pub pitch: f64,
    pub median: f64,
    pub max: f64,
    /// Distance from each eigenvalue (in spectrum order) to the nearest hit.
    pub distances: Vec<f64>,
}

/// Distances from the eigenvalues of `D_c^k` to the scanned limit set.
pub fn spectrum_vs_limitset(
    sym: &BandedSymbol,
    c: usize,
    k: usize,
    grid: &GridSpec,
    tol: f64,
) -> Result<Comparison> {
    check_offset(sym, c)?;
    let report = limit_set_scan(sym, c, grid, tol)?;
    if report.hits.is_empty() {
        return Err(Error::EmptyLimitSet);
    }
    let spectrum = finite_section_spectrum(sym, &MinorSpec::leading(c, sym.n())?, k)?;
    let distances: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .map(|&z| {
            report
                .hits
                .iter()
                .map(|h| (h.v() - z).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let mut sorted = distances.clone();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    };
    Ok(Comparison {
        k,
        hits: report.hits.len(),
        pitch: grid.pitch(),
        median,
        max: sorted[sorted.len() - 1],
        distances,
    })
}

/// All eigenvalues of a dense complex matrix: balancing, Householder
/// reduction to Hessenberg form, then single-shift QR with deflation.
pub fn eigenvalues(m: &NumMatrix) -> Result<Vec<Complex64>> {
    let n = m.size();
    let mut a = m.clone().into_data();
    balance(&mut a, n);
    hessenberg(&mut a, n);
    hessenberg_qr(&mut a, n)
}

fn balance(a: &mut [Complex64], n: usize) {
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let (mut col, mut row) = (0.0, 0.0);
            for j in (0..n).filter(|&j| j != i) {
                col += a[j * n + i].norm();
                row += a[i * n + j].norm();
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let total = col + row;
            let mut f = 1.0;
            while col < row / 2.0 {
                col *= 2.0;
                row /= 2.0;
                f *= 2.0;
            }
            while col >= row * 2.0 {
                col /= 2.0;
                row *= 2.0;
                f /= 2.0;
            }
            if col + row < 0.95 * total {
                converged = false;
                for j in 0..n {
                    a[i * n + j] /= f;
                    a[j * n + i] *= f;
                }
            }
        }
    }
}

fn hessenberg(a: &mut [Complex64], n: usize) {
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n)
            .map(|i| a[i * n + k].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| a[i * n + k]).collect();
        v[0] -= alpha;
        let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vn == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= vn);
        // A <- (I - 2vv*) A (I - 2vv*)
        for j in 0..n {
            let dot: Complex64 = (0..v.len())
                .map(|t| v[t].conj() * a[(k + 1 + t) * n + j])
                .sum();
            for t in 0..v.len() {
                a[(k + 1 + t) * n + j] -= 2.0 * v[t] * dot;
            }
        }
        for i in 0..n {
            let dot: Complex64 = (0..v.len()).map(|t| a[i * n + k + 1 + t] * v[t]).sum();
            for t in 0..v.len() {
                a[i * n + k + 1 + t] -= 2.0 * dot * v[t].conj();
            }
        }
        for i in k + 2..n {
            a[i * n + k] = czero();
        }
    }
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = 0.5 * (a - d);
    let disc = (half * half + b * c).sqrt();
    let (m1, m2) = (0.5 * (a + d) + disc, 0.5 * (a + d) - disc);
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

fn hessenberg_qr(h: &mut [Complex64], n: usize) -> Result<Vec<Complex64>> {
    let at = |i: usize, j: usize| i * n + j;
    let mut eig = vec![czero(); n];
    if n == 0 {
        return Ok(eig);
    }
    let fro = h.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let eps = f64::EPSILON;
    let mut hi = n - 1;
    let mut total = 0usize;
    let mut its = 0usize;
    loop {
        if hi == 0 {
            eig[0] = h[at(0, 0)];
            return Ok(eig);
        }
        let mut l = hi;
        while l > 0 {
            let mut s = h[at(l - 1, l - 1)].norm() + h[at(l, l)].norm();
            if s == 0.0 {
                s = fro;
            }
            if h[at(l, l - 1)].norm() <= eps * s {
                h[at(l, l - 1)] = czero();
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig[hi] = h[at(hi, hi)];
            hi -= 1;
            its = 0;
            continue;
        }
        total += 1;
        its += 1;
        if total > QR_MAX_ITER {
            return Err(Error::QrNotConverged { iterations: total });
        }
        let shift = if its % 10 == 0 {
            h[at(hi, hi)] + 0.75 * h[at(hi, hi - 1)].norm()
        } else {
            wilkinson_shift(
                h[at(hi - 1, hi - 1)],
                h[at(hi - 1, hi)],
                h[at(hi, hi - 1)],
                h[at(hi, hi)],
            )
        };
        for i in l..=hi {
            h[at(i, i)] -= shift;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (x, y) = (h[at(k, k)], h[at(k + 1, k)]);
            let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
            let (c, s) = if y.norm() == 0.0 {
                (1.0, czero())
            } else if x.norm() == 0.0 {
                (0.0, y.conj() / y.norm())
            } else {
                (x.norm() / r, (x / x.norm()) * y.conj() / r)
            };
            for j in k..=hi {
                let (p, q) = (h[at(k, j)], h[at(k + 1, j)]);
                h[at(k, j)] = c * p + s * q;
                h[at(k + 1, j)] = -s.conj() * p + c * q;
            }
            rots.push((c, s));
        }
        for (t, &(c, s)) in rots.iter().enumerate() {
            let k = l + t;
            for i in l..=(k + 1).min(hi) {
                let (p, q) = (h[at(i, k)], h[at(i, k + 1)]);
                h[at(i, k)] = p * c + q * s.conj();
                h[at(i, k + 1)] = -p * s + q * c;
            }
        }
        for i in l..=hi {
            h[at(i, i)] += shift;
        }
    }
}
