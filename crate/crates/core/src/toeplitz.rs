//! The infinite banded Toeplitz matrix `A = (s_{j-i})`, its minors
//! `D^k_{α,β}`, and their determinants.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{elementary_symmetric, MultiPoly};
use crate::schur::{schur_jacobi_trudi, PolyMatrix};
use crate::shapes::MinorSpec;

/// Band coefficients `(s_0, s_1, ..., s_n)` with `s_0 = 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BandedSymbol {
    coeffs: Vec<Complex64>,
}

impl BandedSymbol {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidSymbol(
                "need at least s_0 and s_1 (band width n ≥ 1)".into(),
            ));
        }
        if coeffs[0] != Complex64::new(1.0, 0.0) {
            return Err(Error::InvalidSymbol(format!(
                "s_0 must be 1, got {}; rescale the band by 1/s_0",
                coeffs[0]
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidSymbol("coefficients must be finite".into()));
        }
        Ok(BandedSymbol { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `s_i = e_i(x_1, ..., x_n)` evaluated at the given point.
    pub fn from_roots(x: &[Complex64]) -> Result<Self> {
        // coefficients of prod (1 + x_i t)
        let mut s = vec![Complex64::new(1.0, 0.0)];
        for &xi in x {
            s.push(Complex64::new(0.0, 0.0));
            for j in (1..s.len()).rev() {
                let prev = s[j - 1];
                s[j] += xi * prev;
            }
        }
        Self::new(s)
    }

    /// Parses `s_0,...,s_n` as comma-separated complex numbers.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(parse_complex)
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `s_i`, zero outside `0..=n`.
    pub fn get(&self, i: i64) -> Complex64 {
        if i < 0 || i as usize > self.n() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[i as usize]
        }
    }
}

impl fmt::Display for BandedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format_complex(*c)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`), whitespace ignored.
pub fn parse_complex(tok: &str) -> Result<Complex64> {
    let s: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad complex number {:?}", tok.trim()));
    if s.is_empty() {
        return Err(bad());
    }
    let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(num(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (num(&body[..p])?, &body[p..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => num(t)?,
    };
    Ok(Complex64::new(re, im))
}

/// Shortest round-trip rendering; scientific notation outside `[1e-4, 1e16)`.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// `a+bi` or `a-bi` from [`format_real`]; purely real values print as `a`.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format_real(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", format_real(z.re), format_real(-z.im))
    } else {
        format!("{}+{}i", format_real(z.re), format_real(z.im))
    }
}

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct NumMatrix {
    size: usize,
    data: Vec<Complex64>,
}

impl NumMatrix {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(f(i, j));
            }
        }
        NumMatrix { size, data }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(Self::from_fn(size, |i, j| rows[i][j]))
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    pub fn anti_transpose(&self) -> Self {
        let k = self.size;
        Self::from_fn(k, |i, j| self.get(k - 1 - j, k - 1 - i))
    }

    pub(crate) fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    /// LU with partial pivoting; the empty matrix has determinant 1.
    pub fn det(&self) -> Complex64 {
        let k = self.size;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..k {
            let pivot = (col..k)
                .max_by(|&x, &y| a[x * k + col].norm().total_cmp(&a[y * k + col].norm()))
                .expect("non-empty range");
            if a[pivot * k + col].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != col {
                for j in 0..k {
                    a.swap(pivot * k + j, col * k + j);
                }
                det = -det;
            }
            let p = a[col * k + col];
            det *= p;
            for row in col + 1..k {
                let factor = a[row * k + col] / p;
                if factor.norm() == 0.0 {
                    continue;
                }
                for j in col + 1..k {
                    let v = a[col * k + j];
                    a[row * k + j] -= factor * v;
                }
            }
        }
        det
    }
}

pub fn det_numeric(m: &NumMatrix) -> Complex64 {
    m.det()
}

/// First `k` positive integers not in `deleted` (1-based).
pub fn surviving_indices(deleted: &[usize], k: usize) -> Vec<usize> {
    (1..).filter(|i| !deleted.contains(i)).take(k).collect()
}

/// `s`-index on the main diagonal of the minor, by counting deletions:
/// `#{j : β_j - j + 1 ≤ i} - #{j : α_j - j + 1 ≤ i}` for `i = 1..=k`.
pub fn diagonal_offsets(spec: &MinorSpec, k: usize) -> Vec<i64> {
    let count =
        |v: &[usize], i: usize| v.iter().enumerate().filter(|(j, &x)| x - j <= i).count() as i64;
    (1..=k)
        .map(|i| count(spec.beta(), i) - count(spec.alpha(), i))
        .collect()
}

fn minor_offsets(spec: &MinorSpec, k: usize) -> (Vec<usize>, Vec<usize>) {
    (
        surviving_indices(spec.alpha(), k),
        surviving_indices(spec.beta(), k),
    )
}

/// Numeric `D^k_{α,β}`: entry `(i, j)` is `s_{col_j - row_i}` over surviving rows and columns.
pub fn build_minor_numeric(sym: &BandedSymbol, spec: &MinorSpec, k: usize) -> Result<NumMatrix> {
    if sym.n() != spec.n() {
        return Err(Error::InvalidArgument(format!(
            "symbol band width {} differs from spec n = {}",
            sym.n(),
            spec.n()
        )));
    }
    let (rows, cols) = minor_offsets(spec, k);
    Ok(NumMatrix::from_fn(k, |i, j| {
        sym.get(cols[j] as i64 - rows[i] as i64)
    }))
}

/// Symbolic `D^k_{α,β}` with `s_i = e_i(x_1..x_n)`.
pub fn build_minor_symbolic(spec: &MinorSpec, k: usize) -> PolyMatrix {
    let n = spec.n();
    let es: Vec<MultiPoly> = (0..=n).map(|i| elementary_symmetric(i, n)).collect();
    let (rows, cols) = minor_offsets(spec, k);
    PolyMatrix::from_fn(k, n, |i, j| {
        let d = cols[j] as i64 - rows[i] as i64;
        if (0..=n as i64).contains(&d) {
            es[d as usize].clone()
        } else {
            MultiPoly::zero(n)
        }
    })
    .expect("entries have n variables")
}

/// Outcome of comparing `det D^k_{α,β}` against the Jacobi–Trudi skew Schur polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct MinorCheck {
    pub holds: bool,
    pub det: MultiPoly,
    pub schur: MultiPoly,
    pub residual: MultiPoly,
}

pub fn verify_minor_schur(spec: &MinorSpec, k: usize) -> Result<MinorCheck> {
    let shape = spec.shape(k)?;
    let det = build_minor_symbolic(spec, k).det();
    let schur = schur_jacobi_trudi(&shape, spec.n());
    let residual = &det - &schur;
    Ok(MinorCheck {
        holds: residual.is_zero(),
        det,
        schur,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(n, i).unwrap()
    }

    #[test]
    fn complex_grammar() {
        let cases = [
            ("1", c(1.0)),
            ("-2.5", c(-2.5)),
            ("3i", Complex64::new(0.0, 3.0)),
            ("i", Complex64::new(0.0, 1.0)),
            ("-i", Complex64::new(0.0, -1.0)),
            ("1+2i", Complex64::new(1.0, 2.0)),
            (" 1 - 2i ", Complex64::new(1.0, -2.0)),
            ("1e-3+2e+1i", Complex64::new(1e-3, 20.0)),
            ("-1-i", Complex64::new(-1.0, -1.0)),
        ];
        for (s, want) in cases {
            assert_eq!(parse_complex(s).unwrap(), want, "{s}");
        }
        for bad in ["", "x", "1+", "1+2j", "i2"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
        for z in [
            c(1.0),
            Complex64::new(0.5, -0.25),
            Complex64::new(-3.0, 2.0),
        ] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }

    #[test]
    fn symbol_validation() {
        assert!(BandedSymbol::parse("1,0,1").is_ok());
        assert!(BandedSymbol::parse("2,0,1").is_err());
        assert!(BandedSymbol::parse("1").is_err());
        assert!(BandedSymbol::parse("1,a").is_err());
        let sym = BandedSymbol::from_roots(&[c(2.0), c(3.0)]).unwrap();
        assert_eq!(sym.coeffs(), &[c(1.0), c(5.0), c(6.0)]);
    }

    #[test]
    fn leading_family_first_entry() {
        let sym = BandedSymbol::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        for cc in 0..=3 {
            let spec = MinorSpec::leading(cc, 3).unwrap();
            let m = build_minor_numeric(&sym, &spec, 1).unwrap();
            assert_eq!(m.get(0, 0), sym.get(cc as i64));
        }
    }

    #[test]
    fn tridiagonal_section() {
        let (s1, s2) = (c(0.7), c(-1.3));
        let sym = BandedSymbol::new(vec![c(1.0), s1, s2]).unwrap();
        let spec = MinorSpec::leading(1, 2).unwrap();
        let m = build_minor_numeric(&sym, &spec, 3).unwrap();
        let z = c(0.0);
        let want =
            NumMatrix::from_rows(&[vec![s1, s2, z], vec![c(1.0), s1, s2], vec![z, c(1.0), s1]])
                .unwrap();
        assert_eq!(m, want);
    }

    #[test]
    fn boundary_family_matrices() {
        // beta = (2), n = 2: surviving columns 1, 3, 4, ...
        let spec = MinorSpec::new(vec![], vec![2], 2).unwrap();
        let n = 2;
        let (one, zero) = (MultiPoly::one(n), MultiPoly::zero(n));
        let e1 = &x(n, 0) + &x(n, 1);
        let e2 = &x(n, 0) * &x(n, 1);
        let d2 = PolyMatrix::from_rows(
            n,
            vec![
                vec![one.clone(), e2.clone()],
                vec![zero.clone(), e1.clone()],
            ],
        )
        .unwrap();
        assert_eq!(build_minor_symbolic(&spec, 2), d2);
        let d3 = PolyMatrix::from_rows(
            n,
            vec![
                vec![one.clone(), e2.clone(), zero.clone()],
                vec![zero.clone(), e1.clone(), e2.clone()],
                vec![zero, one, e1.clone()],
            ],
        )
        .unwrap();
        assert_eq!(build_minor_symbolic(&spec, 3), d3);
        assert_eq!(d3.det(), &e1.pow(2) - &e2);
    }

    #[test]
    fn symbolic_first_entry() {
        let spec = MinorSpec::leading(2, 3).unwrap();
        let m = build_minor_symbolic(&spec, 1);
        assert_eq!(m.get(0, 0), &elementary_symmetric(2, 3));
    }

    #[test]
    fn det_examples() {
        assert_eq!(NumMatrix::identity(3).det(), c(1.0));
        assert_eq!(NumMatrix::identity(0).det(), c(1.0));
        let m = NumMatrix::from_rows(&[vec![c(1.0), c(2.0)], vec![c(3.0), c(4.0)]]).unwrap();
        assert!((m.det() - c(-2.0)).norm() < 1e-14);
        let sym = BandedSymbol::from_roots(&[c(2.0), c(3.0)]).unwrap();
        let d = build_minor_numeric(&sym, &MinorSpec::leading(1, 2).unwrap(), 2).unwrap();
        assert!((d.det() - c(19.0)).norm() < 1e-12);
    }

    #[test]
    fn geometric_closed_form_for_d1() {
        // det D_1^k at x = (2, 3) is h_k(2, 3) = (3^{k+1} - 2^{k+1}) / (3 - 2)
        let sym = BandedSymbol::from_roots(&[c(2.0), c(3.0)]).unwrap();
        let spec = MinorSpec::leading(1, 2).unwrap();
        for k in 1..=12u32 {
            let want = 3f64.powi(k as i32 + 1) - 2f64.powi(k as i32 + 1);
            let got = build_minor_numeric(&sym, &spec, k as usize).unwrap().det();
            assert!((got - c(want)).norm() <= 1e-12 * want, "k={k}");
        }
    }

    #[test]
    fn counting_function_gives_diagonal() {
        for n in 1..=4 {
            for spec in MinorSpec::all_valid(n, 2, 3, 6) {
                for k in 0..8 {
                    let (rows, cols) = minor_offsets(&spec, k);
                    let direct: Vec<i64> =
                        (0..k).map(|i| cols[i] as i64 - rows[i] as i64).collect();
                    assert_eq!(diagonal_offsets(&spec, k), direct, "{spec} k={k}");
                }
            }
        }
    }

    #[test]
    fn minor_schur_examples() {
        let check = |a: Vec<usize>, b: Vec<usize>, n, k| {
            verify_minor_schur(&MinorSpec::new(a, b, n).unwrap(), k).unwrap()
        };
        let r = check(vec![], vec![1, 2], 3, 2);
        assert!(r.holds);
        assert!(r.residual.is_zero());
        let r = check(vec![], vec![2], 2, 3);
        assert!(r.holds);
        let e1 = &x(2, 0) + &x(2, 1);
        assert_eq!(r.det, &e1.pow(2) - &(&x(2, 0) * &x(2, 1)));
        for n in 1..=3 {
            let r = check(vec![1], vec![1], n, 2);
            assert!(r.holds);
            assert!(r.det.is_one());
        }
        assert!(check(vec![2], vec![1, 3], 3, 3).holds);
    }

    #[test]
    fn below_threshold_is_rejected() {
        let spec = MinorSpec::new(vec![3], vec![1, 3], 3).unwrap();
        assert_eq!(
            verify_minor_schur(&spec, 1).unwrap_err(),
            Error::BelowThreshold { k: 1, min_k: 2 }
        );
    }

    #[test]
    fn anti_transpose_keeps_minor_determinant() {
        for spec in MinorSpec::all_valid(3, 1, 2, 4) {
            let m = build_minor_symbolic(&spec, 4);
            assert_eq!(m.anti_transpose().det(), m.det(), "{spec}");
        }
    }

    fn arb_point(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
        prop::collection::vec(
            (0.0f64..2.0, 0.0f64..std::f64::consts::TAU)
                .prop_map(|(r, t)| Complex64::from_polar(r, t)),
            n,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn numeric_det_matches_symbolic(
            idx in 0usize..1000,
            k in 1usize..6,
            pt in arb_point(3),
        ) {
            let specs = MinorSpec::all_valid(3, 2, 3, 4);
            let spec = &specs[idx % specs.len()];
            let sym = BandedSymbol::from_roots(&pt).unwrap();
            let num = build_minor_numeric(&sym, spec, k).unwrap().det();
            let poly = build_minor_symbolic(spec, k).det();
            let exact = poly.evaluate(&pt).unwrap();
            // scale by the polynomial's magnitude at |x|
            let abs_pt: Vec<Complex64> = pt.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect();
            let abs_poly = crate::polyring::MultiPoly::from_terms(3, poly.terms().map(|(m, c)| {
                (m.exponents().to_vec(), num_traits::Signed::abs(c))
            })).unwrap();
            let scale = abs_poly.evaluate(&abs_pt).unwrap().re.max(1.0);
            prop_assert!((num - exact).norm() <= 1e-10 * scale, "{} vs {}", num, exact);
            let anti = build_minor_numeric(&sym, spec, k).unwrap().anti_transpose().det();
            prop_assert!((anti - num).norm() <= 1e-10 * scale);
        }
    }
}
