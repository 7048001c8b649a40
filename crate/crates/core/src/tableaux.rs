//! Semi-standard Young tableaux of skew shape, the combinatorial definition
//! of skew Schur polynomials, and sequence insertion.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::MultiPoly;
use crate::shapes::{Partition, SkewShape};

/// A filling of the non-skew cells of a skew shape.
///
/// `rows[i]` lists the entries of row `i` from left to right, starting at
/// column `inner_i`. Rows weakly increase and columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct TableauJson<'a> {
    outer: &'a [u32],
    inner: &'a [u32],
    rows: &'a [Vec<u32>],
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let nrows = shape.rows();
        if rows.len() != nrows {
            return Err(Error::InvalidTableau(format!(
                "{} rows given for shape {shape} with {nrows} rows",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = (shape.outer().part(i) - shape.inner().part(i)) as usize;
            if row.len() != want {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, shape needs {want}",
                    i + 1,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not weakly increasing",
                    i + 1
                )));
            }
        }
        let t = Tableau { shape, rows };
        for i in 1..nrows {
            let lo = t.shape.inner().part(i - 1) as usize;
            let hi = t.shape.outer().part(i) as usize;
            for col in lo.max(t.shape.inner().part(i) as usize)..hi {
                if t.at(i - 1, col) >= t.at(i, col) {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly increasing between rows {} and {}",
                        col + 1,
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(t)
    }

    /// The tableau of the empty shape.
    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    // entry at absolute (row, column); caller guarantees the cell is non-skew
    fn at(&self, row: usize, col: usize) -> u32 {
        self.rows[row][col - self.shape.inner().part(row) as usize]
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `h_j` = number of cells containing `j`, for `j = 1..=n`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut h = vec![0; n];
        for &v in self.rows.iter().flatten() {
            h[v as usize - 1] += 1;
        }
        h
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            outer: self.shape.outer().trimmed(),
            inner: self.shape.inner().trimmed(),
            rows: &self.rows,
        })
        .expect("tableau serializes")
    }
}

struct Cells {
    // (row, absolute column, cells strictly below in the same column)
    cells: Vec<(usize, usize, u32)>,
    inner: Vec<usize>,
    outer: Vec<usize>,
}

impl Cells {
    fn new(shape: &SkewShape) -> Self {
        let nrows = shape.rows();
        let outer: Vec<usize> = (0..nrows).map(|i| shape.outer().part(i) as usize).collect();
        let inner: Vec<usize> = (0..nrows).map(|i| shape.inner().part(i) as usize).collect();
        let mut cells = Vec::new();
        for i in 0..nrows {
            for col in inner[i]..outer[i] {
                let below = outer[i + 1..].iter().take_while(|&&o| o > col).count() as u32;
                cells.push((i, col, below));
            }
        }
        Cells {
            cells,
            inner,
            outer,
        }
    }
}

/// Calls `visit` with the rows of every SSYT of `shape` with entries in `1..=n`,
/// in row-major lexicographic order.
pub fn for_each_ssyt<F: FnMut(&[Vec<u32>])>(shape: &SkewShape, n: usize, mut visit: F) {
    let layout = Cells::new(shape);
    let mut rows: Vec<Vec<u32>> = (0..layout.outer.len())
        .map(|i| vec![0; layout.outer[i] - layout.inner[i]])
        .collect();

    fn rec<F: FnMut(&[Vec<u32>])>(
        idx: usize,
        n: u32,
        layout: &Cells,
        rows: &mut Vec<Vec<u32>>,
        visit: &mut F,
    ) {
        let Some(&(i, col, below)) = layout.cells.get(idx) else {
            visit(rows);
            return;
        };
        let pos = col - layout.inner[i];
        let mut lo = 1;
        if pos > 0 {
            lo = rows[i][pos - 1];
        }
        if i > 0 && col >= layout.inner[i - 1] {
            lo = lo.max(rows[i - 1][col - layout.inner[i - 1]] + 1);
        }
        let hi = n.saturating_sub(below);
        for v in lo..=hi {
            rows[i][pos] = v;
            rec(idx + 1, n, layout, rows, visit);
        }
    }

    rec(0, n as u32, &layout, &mut rows, &mut visit);
}

pub fn enumerate_ssyt(shape: &SkewShape, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |rows| {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// `S_{λ/μ}(x1..xn)` as the sum of `x^content(T)` over all tableaux `T`.
pub fn schur_by_tableaux(shape: &SkewShape, n: usize) -> MultiPoly {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut h = vec![0u32; n];
    for_each_ssyt(shape, n, |rows| {
        h.iter_mut().for_each(|x| *x = 0);
        for &v in rows.iter().flatten() {
            h[v as usize - 1] += 1;
        }
        *counts.entry(h.clone()).or_default() += 1;
    });
    MultiPoly::from_terms(n, counts).expect("content vectors have length n")
}

/// Strictly increasing values, one per row, to be placed by sequence insertion.
/// Negative values extend the skew part of their row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionSequence {
    values: Vec<i64>,
}

impl InsertionSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::InvalidSequence("0 is not a valid entry".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "{values:?} is not strictly increasing"
            )));
        }
        Ok(InsertionSequence { values })
    }

    /// `(-r, ..., -1, t_1, ..., t_m)`.
    pub fn with_skew_prefix(r: usize, tail: &[u32]) -> Result<Self> {
        let mut values: Vec<i64> = (1..=r as i64).rev().map(|v| -v).collect();
        values.extend(tail.iter().map(|&t| t as i64));
        Self::new(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Inserts `seq[i]` into row `i` of `t`, keeping rows weakly increasing.
///
/// The skew part is first filled with the constant `i - R - 1` in row `i`
/// (1-based, `R` = number of rows with skew cells), which keeps columns
/// strictly increasing; after insertion all negative cells become the new
/// skew part. Missing rows are created as single boxes.
pub fn insert_sequence(t: &Tableau, seq: &InsertionSequence) -> Result<Tableau> {
    let skew_rows = t.shape.inner().length() as i64;
    let nrows = t.rows.len().max(seq.values.len());
    let mut full: Vec<Vec<i64>> = (0..nrows)
        .map(|i| {
            if i >= t.rows.len() {
                return Vec::new();
            }
            let sentinel = i as i64 + 1 - skew_rows - 1;
            let mut row = vec![sentinel; t.shape.inner().part(i) as usize];
            row.extend(t.rows[i].iter().map(|&v| v as i64));
            row
        })
        .collect();
    for (row, &v) in full.iter_mut().zip(&seq.values) {
        let pos = row.partition_point(|&x| x <= v);
        row.insert(pos, v);
    }
    let inner: Vec<u32> = full
        .iter()
        .map(|r| r.iter().filter(|&&v| v < 0).count() as u32)
        .collect();
    let outer: Vec<u32> = full.iter().map(|r| r.len() as u32).collect();
    let rows: Vec<Vec<u32>> = full
        .iter()
        .map(|r| r.iter().filter(|&&v| v > 0).map(|&v| v as u32).collect())
        .collect();
    let outer = Partition::new(outer)
        .map_err(|e| Error::InvalidTableau(format!("insertion broke the outer shape: {e}")))?;
    let inner = Partition::new(inner)
        .map_err(|e| Error::InvalidTableau(format!("insertion broke the skew part: {e}")))?;
    let shape = SkewShape::new(outer, inner)?;
    let rows = rows.into_iter().take(shape.rows()).collect();
    Tableau::new(shape, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::elementary_symmetric;
    use std::collections::HashSet;

    fn shape(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    // Independent oracle: all fillings with values in 1..=n, filtered by the SSYT rules.
    fn brute_force_count(shape: &SkewShape, n: usize) -> usize {
        let nrows = shape.rows();
        let lens: Vec<usize> = (0..nrows)
            .map(|i| (shape.outer().part(i) - shape.inner().part(i)) as usize)
            .collect();
        let total: usize = lens.iter().sum();
        let mut count = 0;
        let mut vals = vec![1u32; total];
        loop {
            let mut rows = Vec::new();
            let mut off = 0;
            for &l in &lens {
                rows.push(vals[off..off + l].to_vec());
                off += l;
            }
            if Tableau::new(shape.clone(), rows).is_ok() {
                count += 1;
            }
            let mut idx = 0;
            loop {
                if idx == total {
                    return count;
                }
                if vals[idx] < n as u32 {
                    vals[idx] += 1;
                    break;
                }
                vals[idx] = 1;
                idx += 1;
            }
        }
    }

    #[test]
    fn single_box() {
        let ts = enumerate_ssyt(&shape(&[1], &[]), 2);
        let rows: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1]], vec![vec![2]]]);
    }

    #[test]
    fn column_of_two_in_two_letters() {
        let ts = enumerate_ssyt(&shape(&[1, 1], &[]), 2);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn empty_shape_has_one_tableau() {
        let ts = enumerate_ssyt(&shape(&[], &[]), 3);
        assert_eq!(ts, vec![Tableau::empty()]);
        assert_eq!(
            schur_by_tableaux(&shape(&[2, 1], &[2, 1]), 3),
            MultiPoly::one(3)
        );
    }

    #[test]
    fn skew_example_count_matches_brute_force() {
        let s = shape(&[4, 2, 1], &[2, 2]);
        assert_eq!(enumerate_ssyt(&s, 3).len(), 18);
        assert_eq!(brute_force_count(&s, 3), 18);
    }

    #[test]
    fn enumeration_agrees_with_brute_force_on_small_shapes() {
        for s in SkewShape::all_in_box(3, 3) {
            if s.boxes() > 6 {
                continue;
            }
            for n in 1..=3 {
                let ts = enumerate_ssyt(&s, n);
                assert_eq!(ts.len(), brute_force_count(&s, n), "{s} n={n}");
                let distinct: HashSet<_> = ts.iter().collect();
                assert_eq!(distinct.len(), ts.len());
                assert!(ts.windows(2).all(|w| w[0].rows() < w[1].rows()));
            }
        }
    }

    #[test]
    fn skew_example_polynomial() {
        let got = schur_by_tableaux(&shape(&[4, 2, 1], &[2, 2]), 3);
        let mut terms = vec![
            (vec![3, 0, 0], 1),
            (vec![0, 3, 0], 1),
            (vec![0, 0, 3], 1),
            (vec![1, 1, 1], 3),
        ];
        for (a, b) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
            let mut e = vec![0, 0, 0];
            e[a] = 2;
            e[b] = 1;
            terms.push((e, 2));
        }
        assert_eq!(got, MultiPoly::from_terms(3, terms).unwrap());
    }

    #[test]
    fn row_of_two() {
        let got = schur_by_tableaux(&shape(&[2], &[]), 2);
        let want =
            MultiPoly::from_terms(2, [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn too_tall_column_vanishes() {
        assert!(schur_by_tableaux(&shape(&[1, 1, 1], &[]), 2).is_zero());
        assert_eq!(
            schur_by_tableaux(&shape(&[1, 1, 1], &[]), 3),
            elementary_symmetric(3, 3)
        );
    }

    #[test]
    fn schur_by_tableaux_is_symmetric() {
        for s in SkewShape::all_in_box(3, 3) {
            assert!(schur_by_tableaux(&s, 3).is_symmetric(), "{s}");
        }
    }

    #[test]
    fn tableau_validation() {
        let s = shape(&[2, 2], &[1]);
        assert!(Tableau::new(s.clone(), vec![vec![1], vec![1, 2]]).is_ok());
        assert!(Tableau::new(s.clone(), vec![vec![2], vec![1, 2]]).is_err()); // column
        assert!(Tableau::new(s.clone(), vec![vec![1], vec![2, 1]]).is_err()); // row
        assert!(Tableau::new(s, vec![vec![1], vec![2]]).is_err()); // length
    }

    #[test]
    fn json_layout() {
        let t = Tableau::new(shape(&[2, 1], &[1]), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(
            t.to_json(),
            serde_json::json!({"outer": [2, 1], "inner": [1], "rows": [[1], [2]]})
        );
    }

    #[test]
    fn insertion_example_with_skew_prefix() {
        let before = Tableau::new(
            shape(&[4, 3, 3, 2], &[2, 1, 1]),
            vec![vec![1, 1], vec![1, 2], vec![3, 4], vec![1, 4]],
        )
        .unwrap();
        let seq = InsertionSequence::new(vec![-1, 2, 3]).unwrap();
        let after = insert_sequence(&before, &seq).unwrap();
        let want = Tableau::new(
            shape(&[5, 4, 4, 2], &[3, 1, 1]),
            vec![vec![1, 1], vec![1, 2, 2], vec![3, 3, 4], vec![1, 4]],
        )
        .unwrap();
        assert_eq!(after, want);
    }

    #[test]
    fn insertion_into_empty_creates_rows() {
        let seq = InsertionSequence::new(vec![1]).unwrap();
        let t = insert_sequence(&Tableau::empty(), &seq).unwrap();
        assert_eq!(t.shape(), &shape(&[1], &[]));
        assert_eq!(t.rows(), &[vec![1]]);

        let seq = InsertionSequence::new(vec![-1, 2]).unwrap();
        let t = insert_sequence(&Tableau::empty(), &seq).unwrap();
        assert_eq!(t.shape(), &shape(&[1, 1], &[1]));
        assert_eq!(t.rows(), &[vec![], vec![2]]);
    }

    #[test]
    fn sequence_validation() {
        assert!(InsertionSequence::new(vec![1, 1]).is_err());
        assert!(InsertionSequence::new(vec![-1, 0, 2]).is_err());
        assert_eq!(
            InsertionSequence::with_skew_prefix(2, &[1, 3])
                .unwrap()
                .values(),
            &[-2, -1, 1, 3]
        );
    }

    #[test]
    fn insertions_commute_on_fixture() {
        let t = Tableau::new(shape(&[3, 1], &[]), vec![vec![1, 2, 4], vec![3]]).unwrap();
        let s = InsertionSequence::new(vec![1, 3]).unwrap();
        let u = InsertionSequence::new(vec![2, 4]).unwrap();
        let a = insert_sequence(&insert_sequence(&t, &s).unwrap(), &u).unwrap();
        let b = insert_sequence(&insert_sequence(&t, &u).unwrap(), &s).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows(), &[vec![1, 1, 2, 2, 4], vec![3, 3, 4]]);
    }

    // Each of the three relative placements of t_i and t_{i+1}.
    #[test]
    fn insertion_case_analysis_fixtures() {
        let t = Tableau::new(shape(&[3, 3], &[]), vec![vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        for seq in [vec![2, 3], vec![3, 4], vec![1, 5], vec![1, 2]] {
            let seq = InsertionSequence::new(seq).unwrap();
            let out = insert_sequence(&t, &seq).unwrap();
            assert_eq!(out.shape().outer().trimmed(), &[4, 4]);
        }
    }

    fn all_seqs(len: usize, n: u32) -> Vec<Vec<u32>> {
        fn rec(start: u32, n: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for v in start..=n {
                cur.push(v);
                rec(v + 1, n, len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, len, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn all_insertions_are_tableaux_and_commute() {
        let n = 3;
        for s in SkewShape::all_in_box(3, 2) {
            let r = s.inner().length();
            for t in enumerate_ssyt(&s, n) {
                for m in 0..=2 {
                    let seqs = all_seqs(m, n as u32);
                    for a in &seqs {
                        let sa = InsertionSequence::with_skew_prefix(r, a).unwrap();
                        let ta = insert_sequence(&t, &sa).unwrap();
                        for b in &seqs {
                            let sb = InsertionSequence::with_skew_prefix(0, b).unwrap();
                            let ab = insert_sequence(&ta, &sb).unwrap();
                            let ba =
                                insert_sequence(&insert_sequence(&t, &sb).unwrap(), &sa).unwrap();
                            assert_eq!(ab, ba, "{s} {a:?} {b:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn insertion_counts_match_monomial_coefficients() {
        let n = 3;
        for s in SkewShape::all_in_box(3, 3) {
            if s.boxes() > 6 {
                continue;
            }
            let r = s.inner().length();
            let schur = schur_by_tableaux(&s, n);
            let tabs = enumerate_ssyt(&s, n);
            for m in 0..=n {
                for tail in all_seqs(m, n as u32) {
                    let seq = InsertionSequence::with_skew_prefix(r, &tail).unwrap();
                    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
                    let mut produced = HashSet::new();
                    for t in &tabs {
                        let out = insert_sequence(t, &seq).unwrap();
                        assert!(out.max_entry() as usize <= n);
                        *counts.entry(out.content(n)).or_default() += 1;
                        produced.insert(out);
                    }
                    assert_eq!(produced.len(), tabs.len(), "insertion is injective");
                    let mut monomial = MultiPoly::one(n);
                    for &v in &tail {
                        monomial = &monomial * &MultiPoly::variable(n, v as usize - 1).unwrap();
                    }
                    let want = &monomial * &schur;
                    let got = MultiPoly::from_terms(n, counts).unwrap();
                    assert_eq!(got, want, "{s} tail {tail:?}");
                }
            }
        }
    }
}
