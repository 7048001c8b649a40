//! Skew Schur polynomials via the dual Jacobi–Trudi determinant, evaluated
//! with Berkowitz's division-free algorithm.

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{dot, elementary_symmetric, MultiPoly};
use crate::shapes::SkewShape;

/// Square matrix over the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_fn(
        size: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> MultiPoly,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let e = f(i, j);
                if e.nvars() != nvars {
                    return Err(Error::VarCountMismatch {
                        left: nvars,
                        right: e.nvars(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            size,
            nvars,
            entries,
        })
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Self::from_fn(size, nvars, |i, j| rows[i][j].clone())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.size + j]
    }

    /// Leading `k × k` block.
    pub fn leading(&self, k: usize) -> PolyMatrix {
        let k = k.min(self.size);
        PolyMatrix::from_fn(k, self.nvars, |i, j| self.get(i, j).clone()).expect("same nvars")
    }

    /// Transpose across the anti-diagonal: `(i, j) -> (k-1-j, k-1-i)`.
    pub fn anti_transpose(&self) -> PolyMatrix {
        let k = self.size;
        PolyMatrix::from_fn(k, self.nvars, |i, j| self.get(k - 1 - j, k - 1 - i).clone())
            .expect("same nvars")
    }

    /// Determinants of all leading principal blocks, sizes `0..=size`.
    ///
    /// Berkowitz: with `A_m = [[A_{m-1}, S], [R, a]]`, the characteristic
    /// coefficients obey `p_m = T_m p_{m-1}`, where `T_m` is lower-triangular
    /// Toeplitz with first column `(1, -a, -RS, -RAS, ..., -RA^{m-2}S)`.
    /// `det A_m = (-1)^m p_m[m]`.
    pub fn leading_minors(&self) -> Vec<MultiPoly> {
        let nv = self.nvars;
        let mut dets = vec![MultiPoly::one(nv)];
        let mut p: Vec<MultiPoly> = vec![MultiPoly::one(nv)];
        for m in 1..=self.size {
            let last = m - 1;
            let a = self.get(last, last);
            // column of T_m: c[0] = 1, c[1] = -a, c[2 + q] = -R A^q S
            let mut col = Vec::with_capacity(m + 1);
            col.push(MultiPoly::one(nv));
            col.push(-a);
            let mut v: Vec<MultiPoly> = (0..last).map(|i| self.get(i, last).clone()).collect();
            for q in 0..last {
                let row: Vec<_> = (0..last).map(|j| (self.get(last, j), &v[j])).collect();
                col.push(-dot(nv, &row));
                if q + 1 < last {
                    v = (0..last)
                        .map(|i| {
                            let row: Vec<_> = (0..last).map(|j| (self.get(i, j), &v[j])).collect();
                            dot(nv, &row)
                        })
                        .collect();
                }
            }
            let next: Vec<MultiPoly> = (0..=m)
                .map(|row| {
                    let terms: Vec<_> = (0..m.min(row + 1))
                        .map(|j| (&col[row - j], &p[j]))
                        .collect();
                    dot(nv, &terms)
                })
                .collect();
            p = next;
            let d = if m % 2 == 0 { p[m].clone() } else { -&p[m] };
            dets.push(d);
        }
        dets
    }

    /// Exact determinant; the empty matrix has determinant 1.
    pub fn det(&self) -> MultiPoly {
        self.leading_minors()
            .pop()
            .expect("at least the empty minor")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn symbolic_det(m: &PolyMatrix) -> MultiPoly {
    m.det()
}

/// Entry `(i, j)` is `e_{λ'_i - μ'_j - i + j}` with `e_j = 0` for `j < 0`;
/// the size is the number of columns of the outer partition. On the
/// diagonal this is `e_{λ'_i - μ'_i}`.
pub fn jacobi_trudi_matrix(shape: &SkewShape, n: usize) -> PolyMatrix {
    let outer = shape.outer().conjugate();
    let inner = shape.inner().conjugate();
    let k = outer.length();
    let es: Vec<MultiPoly> = (0..=n).map(|i| elementary_symmetric(i, n)).collect();
    PolyMatrix::from_fn(k, n, |i, j| {
        let idx = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
        if idx < 0 || idx as usize > n {
            MultiPoly::zero(n)
        } else {
            es[idx as usize].clone()
        }
    })
    .expect("entries built with n variables")
}

pub fn schur_jacobi_trudi(shape: &SkewShape, n: usize) -> MultiPoly {
    jacobi_trudi_matrix(shape, n).det()
}
