//! Partitions, skew shapes, and the skew shape attached to a banded Toeplitz minor.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
///
/// Trailing zeros are kept (they fix the declared length, which matters
/// when shapes are padded), but ignored by `==` and `Hash`.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing ({} < {})",
                w[0], w[1]
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `rows` parts all equal to `cols`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Parses `4,2,1`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Parts as declared, trailing zeros included.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts without trailing zeros.
    pub fn trimmed(&self) -> &[u32] {
        let len = self.length();
        &self.parts[..len]
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn declared_len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn padded(&self, len: usize) -> Self {
        let mut parts = self.trimmed().to_vec();
        if parts.len() < len {
            parts.resize(len, 0);
        }
        Partition { parts }
    }

    /// Partition of the transposed diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `self ⊇ other` componentwise.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.length()).all(|i| self.part(i) >= other.part(i))
    }

    /// Every partition fitting in a `rows × cols` box.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.trimmed().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the diagram (nonzero outer parts).
    pub fn rows(&self) -> usize {
        self.outer.length()
    }

    /// Number of cells in the skew diagram.
    pub fn boxes(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn conjugate(&self) -> Self {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Every skew shape whose outer partition fits in a `rows × cols` box.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<SkewShape> {
        let all = Partition::all_in_box(rows, cols);
        let mut out = Vec::new();
        for outer in &all {
            for inner in &all {
                if outer.contains(inner) {
                    out.push(SkewShape {
                        outer: outer.clone(),
                        inner: inner.clone(),
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Rows `alpha` and columns `beta` deleted from the banded Toeplitz matrix
/// of band width `n` (1-based, strictly increasing, `r ≤ c ≤ n`, `alpha_i ≥ beta_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinorSpec {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    n: usize,
}

fn check_increasing(name: &str, v: &[usize]) -> Result<()> {
    if v.first() == Some(&0) {
        return Err(Error::InvalidMinorSpec(format!(
            "{name} entries must be positive"
        )));
    }
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidMinorSpec(format!(
            "{name} = {v:?} is not strictly increasing"
        )));
    }
    Ok(())
}

impl MinorSpec {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMinorSpec("band width n must be ≥ 1".into()));
        }
        check_increasing("alpha", &alpha)?;
        check_increasing("beta", &beta)?;
        let (r, c) = (alpha.len(), beta.len());
        if r > c || c > n {
            return Err(Error::InvalidMinorSpec(format!(
                "need r ≤ c ≤ n, got r = {r}, c = {c}, n = {n}"
            )));
        }
        if let Some(i) = (0..r).find(|&i| alpha[i] < beta[i]) {
            return Err(Error::InvalidMinorSpec(format!(
                "alpha_{0} = {1} < beta_{0} = {2}",
                i + 1,
                alpha[i],
                beta[i]
            )));
        }
        Ok(MinorSpec { alpha, beta, n })
    }

    /// `alpha = ()`, `beta = (1, ..., c)`: the plain family `D_c^k`.
    pub fn leading(c: usize, n: usize) -> Result<Self> {
        Self::new(Vec::new(), (1..=c).collect(), n)
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.alpha.len()
    }

    pub fn c(&self) -> usize {
        self.beta.len()
    }

    /// Smallest `k` for which the skew shape is defined:
    /// `max(alpha_r - r, beta_c - c, 0)`.
    pub fn min_k(&self) -> usize {
        let tail = |v: &[usize]| v.last().map_or(0, |&last| last - v.len());
        tail(&self.alpha).max(tail(&self.beta))
    }

    /// Outer `(k + i - beta_i)_{i ≤ c}`, inner `(k + i - alpha_i)_{i ≤ r}` padded to `c`.
    pub fn shape(&self, k: usize) -> Result<SkewShape> {
        let min_k = self.min_k();
        if k < min_k {
            return Err(Error::BelowThreshold { k, min_k });
        }
        let row = |v: &[usize]| -> Vec<u32> {
            v.iter()
                .enumerate()
                .map(|(i, &x)| (k + i + 1 - x) as u32)
                .collect()
        };
        let outer = Partition::new(row(&self.beta))?;
        let mut inner = row(&self.alpha);
        inner.resize(self.c(), 0);
        SkewShape::new(outer, Partition::new(inner)?)
    }

    /// Every valid spec with the given band width and entries bounded by `max_entry`.
    pub fn all_valid(n: usize, max_r: usize, max_c: usize, max_entry: usize) -> Vec<MinorSpec> {
        let subsets = increasing_tuples(max_entry, max_c.min(n));
        let mut out = Vec::new();
        for beta in &subsets {
            for alpha in subsets.iter().filter(|a| a.len() <= max_r) {
                if let Ok(spec) = MinorSpec::new(alpha.clone(), beta.clone(), n) {
                    out.push(spec);
                }
            }
        }
        out
    }

    /// `alpha = (g_1..g_d)`, `beta = (1..c, g_1 + c..g_d + c)` with `c < g_1`.
    /// Surviving columns are the surviving rows shifted by `c`, so every
    /// finite section has constant diagonal `s_c` and no other entry is `s_c`.
    pub fn shifted_family(c: usize, gammas: Vec<usize>, n: usize) -> Result<Self> {
        if gammas.first().is_some_and(|&g| g <= c) {
            return Err(Error::InvalidMinorSpec(format!(
                "gammas {gammas:?} must exceed c = {c}"
            )));
        }
        let beta = (1..=c).chain(gammas.iter().map(|&g| g + c)).collect();
        Self::new(gammas, beta, n)
    }

    /// Recovers `c` when the spec has the shape produced by [`Self::shifted_family`].
    pub fn family_offset(&self) -> Option<usize> {
        let c = self.c() - self.r();
        let shifted = self.beta[c..]
            .iter()
            .zip(&self.alpha)
            .all(|(&b, &a)| b == a + c);
        let prefix_ok = self.beta[..c].iter().enumerate().all(|(i, &b)| b == i + 1);
        let above = self.alpha.first().is_none_or(|&g| g > c);
        (shifted && prefix_ok && above).then_some(c)
    }
}

fn increasing_tuples(max_entry: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn rec(
        start: usize,
        max_entry: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        if cur.len() == max_len {
            return;
        }
        for x in start..=max_entry {
            cur.push(x);
            rec(x + 1, max_entry, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max_entry, max_len, &mut Vec::new(), &mut out);
    out
}

/// Parses a comma list of positive integers; the empty string is the empty tuple.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index {:?}", tok.trim())))
        })
        .collect()
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "alpha=({}) beta=({}) n={}",
            join(&self.alpha),
            join(&self.beta),
            self.n
        )
    }
}
