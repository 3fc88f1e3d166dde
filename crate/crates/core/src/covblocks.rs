//! Partitioned covariance matrices of the sample mean and the sample
//! second- and third-order moments, expressed through central moments.
//!
//! For the second-order family the blocks are
//!
//! ```text
//! Cov(mean_i, mean_j) = m_ij / n
//! Cov(mean_i, S_jk)   = m_ijk / n
//! Cov(S_ij, S_kl)     = (m_ijkl - m_ij m_kl) / n + (m_ik m_jl + m_il m_jk) / (n (n-1))
//! ```
//!
//! and for the third-order family
//!
//! ```text
//! Cov(mean_i, S_rst)  = k_irst / n
//! Cov(S_ijk, S_rst)   = l_ijkrst / n
//!                     + ( [9] m_ir k_jkst + [9] m_ijr m_kst ) / (n-1)
//!                     + n / ((n-1)(n-2)) [6] m_ir m_js m_kt
//! ```
//!
//! where `k` is the fourth cumulant, `l` the sixth-order term computed by
//! [`lambda6`], and `[c]` marks a sum over `c` index assignments listed by
//! [`permutation_scheme`].

use crate::error::{Error, Result};
use crate::matalg::Matrix;
use crate::moments::{multiset_count, sorted_indices, MomentTable};

/// Which sample moments the blocks pair with the sample mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockFamily {
    /// Sample covariances `(S_11, S_12, .., S_pp)`.
    Second,
    /// Third-order sample moments `(S_111, S_112, .., S_ppp)`.
    Third,
}

/// The blocks `b11 = Cov(mean)`, `b12 = Cov(mean, moments)` and
/// `b22 = Cov(moments)`; `b21` is the transpose of `b12`.
///
/// `n` is `None` for the large-sample limit, in which case every block is
/// scaled by `n` and only the leading terms are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct CovBlocks {
    pub family: BlockFamily,
    pub b11: Matrix,
    pub b12: Matrix,
    pub b22: Matrix,
    pub n: Option<usize>,
    pub p: usize,
    pub q: usize,
}

/// Smallest `n` for which the second-order blocks are defined.
pub fn lambda_min_n(p: usize) -> usize {
    (2 * p + p * (p - 1) / 2).max(2)
}

/// Smallest `n` for which the third-order blocks are defined.
pub fn psi_min_n(p: usize) -> usize {
    (2 * p + p * (p - 1) + p * (p.saturating_sub(1)) * (p.saturating_sub(2)) / 6).max(3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeLabel {
    /// `m_ir (..)` over one index from each triple; the other four go to the bracket.
    Sum9Pair,
    /// Two-triple splits of the six indices other than `{i,j,k | r,s,t}`.
    Sum9Triple,
    /// Splits of four indices into two pairs.
    Sum3PairPair,
    /// Pairings of each of `i, j, k` with a distinct one of `r, s, t`.
    Sum6Matching,
    /// All pairs out of six indices; the other four go to the bracket.
    Sum15Pair,
    /// All two-triple splits of six indices.
    Sum10Triple,
    /// All perfect matchings of six indices.
    Sum15TripleMatch,
}

impl SchemeLabel {
    pub const ALL: [SchemeLabel; 7] = [
        SchemeLabel::Sum9Pair,
        SchemeLabel::Sum9Triple,
        SchemeLabel::Sum3PairPair,
        SchemeLabel::Sum6Matching,
        SchemeLabel::Sum15Pair,
        SchemeLabel::Sum10Triple,
        SchemeLabel::Sum15TripleMatch,
    ];

    pub fn cardinality(self) -> usize {
        match self {
            SchemeLabel::Sum9Pair | SchemeLabel::Sum9Triple => 9,
            SchemeLabel::Sum3PairPair => 3,
            SchemeLabel::Sum6Matching => 6,
            SchemeLabel::Sum15Pair | SchemeLabel::Sum15TripleMatch => 15,
            SchemeLabel::Sum10Triple => 10,
        }
    }

    /// Number of index slots the scheme distributes.
    pub fn slots(self) -> usize {
        match self {
            SchemeLabel::Sum3PairPair => 4,
            _ => 6,
        }
    }
}

/// One term of a permutation sum: a set partition of the index slots.
///
/// Slots `0..6` stand for `i, j, k, r, s, t` (or `0..4` for the four-index
/// scheme). Each block is sorted and the first block holds the pair (or the
/// triple containing slot 0) that multiplies the rest.
pub type Term = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationScheme {
    pub label: SchemeLabel,
    pub terms: Vec<Term>,
}

fn complement(slots: usize, used: &[usize]) -> Vec<usize> {
    (0..slots).filter(|s| !used.contains(s)).collect()
}

fn matchings(slots: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if slots.is_empty() {
        return vec![vec![]];
    }
    let first = slots[0];
    let mut out = Vec::new();
    for k in 1..slots.len() {
        let rest: Vec<usize> = slots[1..].iter().copied().filter(|&s| s != slots[k]).collect();
        for mut m in matchings(&rest) {
            m.insert(0, vec![first, slots[k]]);
            out.push(m);
        }
    }
    out
}

pub fn permutation_scheme(label: SchemeLabel) -> PermutationScheme {
    let mut terms: Vec<Term> = Vec::new();
    match label {
        SchemeLabel::Sum9Pair => {
            for a in 0..3 {
                for b in 3..6 {
                    terms.push(vec![vec![a, b], complement(6, &[a, b])]);
                }
            }
        }
        SchemeLabel::Sum3PairPair => terms = matchings(&[0, 1, 2, 3]),
        SchemeLabel::Sum9Triple | SchemeLabel::Sum10Triple => {
            for x in 1..6 {
                for y in (x + 1)..6 {
                    if label == SchemeLabel::Sum9Triple && (x, y) == (1, 2) {
                        continue;
                    }
                    terms.push(vec![vec![0, x, y], complement(6, &[0, x, y])]);
                }
            }
        }
        SchemeLabel::Sum6Matching => {
            for a in 3..6 {
                for b in 3..6 {
                    for c in 3..6 {
                        if a != b && b != c && a != c {
                            terms.push(vec![vec![0, a], vec![1, b], vec![2, c]]);
                        }
                    }
                }
            }
        }
        SchemeLabel::Sum15Pair => {
            for a in 0..6 {
                for b in (a + 1)..6 {
                    terms.push(vec![vec![a, b], complement(6, &[a, b])]);
                }
            }
        }
        SchemeLabel::Sum15TripleMatch => terms = matchings(&[0, 1, 2, 3, 4, 5]),
    }
    PermutationScheme { label, terms }
}

type PairRest = ([usize; 2], [usize; 4]);
type TripleSplit = ([usize; 3], [usize; 3]);
type Matching = [[usize; 2]; 3];

fn pair_rest_terms(label: SchemeLabel) -> Vec<PairRest> {
    permutation_scheme(label)
        .terms
        .iter()
        .map(|t| ([t[0][0], t[0][1]], [t[1][0], t[1][1], t[1][2], t[1][3]]))
        .collect()
}

fn triple_terms(label: SchemeLabel) -> Vec<TripleSplit> {
    permutation_scheme(label)
        .terms
        .iter()
        .map(|t| ([t[0][0], t[0][1], t[0][2]], [t[1][0], t[1][1], t[1][2]]))
        .collect()
}

fn matching_terms(label: SchemeLabel) -> Vec<Matching> {
    permutation_scheme(label)
        .terms
        .iter()
        .map(|t| [[t[0][0], t[0][1]], [t[1][0], t[1][1]], [t[2][0], t[2][1]]])
        .collect()
}

/// Dense copies of the low-order moments and fourth cumulants, indexed
/// without sorting.
struct Dense<'a> {
    p: usize,
    m2: Vec<f64>,
    m3: Vec<f64>,
    k4: Vec<f64>,
    table: &'a MomentTable,
}

impl<'a> Dense<'a> {
    fn new(table: &'a MomentTable) -> Self {
        let p = table.p();
        let mut m2 = vec![0.0; p * p];
        for a in 0..p {
            for b in 0..p {
                m2[a * p + b] = table.get(&[a, b]);
            }
        }
        let mut m3 = Vec::new();
        if table.max_order() >= 3 {
            m3 = vec![0.0; p * p * p];
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        m3[(a * p + b) * p + c] = table.get(&[a, b, c]);
                    }
                }
            }
        }
        let mut k4 = Vec::new();
        if table.max_order() >= 4 {
            k4 = vec![0.0; p * p * p * p];
            let mm = |x: usize, y: usize| m2[x * p + y];
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        for d in 0..p {
                            k4[((a * p + b) * p + c) * p + d] = table.get(&[a, b, c, d])
                                - mm(a, b) * mm(c, d)
                                - mm(a, c) * mm(b, d)
                                - mm(a, d) * mm(b, c);
                        }
                    }
                }
            }
        }
        Self {
            p,
            m2,
            m3,
            k4,
            table,
        }
    }

    #[inline]
    fn m2(&self, a: usize, b: usize) -> f64 {
        self.m2[a * self.p + b]
    }

    #[inline]
    fn m3(&self, a: usize, b: usize, c: usize) -> f64 {
        self.m3[(a * self.p + b) * self.p + c]
    }

    #[inline]
    fn k4(&self, a: usize, b: usize, c: usize, d: usize) -> f64 {
        self.k4[((a * self.p + b) * self.p + c) * self.p + d]
    }
}

/// Precompiled permutation sums used for the third-order covariance block.
struct PsiSchemes {
    pair9: Vec<PairRest>,
    triple9: Vec<TripleSplit>,
    match6: Vec<Matching>,
    pair15: Vec<PairRest>,
    triple10: Vec<TripleSplit>,
    match15: Vec<Matching>,
}

impl PsiSchemes {
    fn new() -> Self {
        Self {
            pair9: pair_rest_terms(SchemeLabel::Sum9Pair),
            triple9: triple_terms(SchemeLabel::Sum9Triple),
            match6: matching_terms(SchemeLabel::Sum6Matching),
            pair15: pair_rest_terms(SchemeLabel::Sum15Pair),
            triple10: triple_terms(SchemeLabel::Sum10Triple),
            match15: matching_terms(SchemeLabel::Sum15TripleMatch),
        }
    }

    fn sum_pair_rest(d: &Dense, terms: &[PairRest], x: &[usize; 6]) -> f64 {
        terms
            .iter()
            .map(|([a, b], [c, e, f, g])| d.m2(x[*a], x[*b]) * d.k4(x[*c], x[*e], x[*f], x[*g]))
            .sum()
    }

    fn sum_triples(d: &Dense, terms: &[TripleSplit], x: &[usize; 6]) -> f64 {
        terms
            .iter()
            .map(|([a, b, c], [e, f, g])| d.m3(x[*a], x[*b], x[*c]) * d.m3(x[*e], x[*f], x[*g]))
            .sum()
    }

    fn sum_matchings(d: &Dense, terms: &[Matching], x: &[usize; 6]) -> f64 {
        terms
            .iter()
            .map(|[[a, b], [c, e], [f, g]]| d.m2(x[*a], x[*b]) * d.m2(x[*c], x[*e]) * d.m2(x[*f], x[*g]))
            .sum()
    }

    fn lambda6(&self, d: &Dense, x: &[usize; 6]) -> f64 {
        d.table.get(x)
            - Self::sum_pair_rest(d, &self.pair15, x)
            - Self::sum_triples(d, &self.triple10, x)
            - Self::sum_matchings(d, &self.match15, x)
    }
}

/// The sixth-order term `l_ijkrst`: the sixth moment with all lower-order
/// products removed. It is the joint sixth cumulant and vanishes for
/// Gaussian moments.
pub fn lambda6(m: &MomentTable, idx: [usize; 6]) -> Result<f64> {
    m.require_order(6)?;
    let d = Dense::new(m);
    Ok(PsiSchemes::new().lambda6(&d, &idx))
}

fn check_n(n: usize, required: usize, what: &'static str) -> Result<()> {
    if n < required {
        return Err(Error::SampleTooSmall { n, required, what });
    }
    Ok(())
}

/// Covariance blocks of the sample mean and the sample covariances.
pub fn lambda_blocks(m: &MomentTable, n: usize) -> Result<CovBlocks> {
    check_n(n, lambda_min_n(m.p()), "the second-order covariance blocks")?;
    build_lambda(m, Some(n))
}

/// Large-sample limit of `n` times [`lambda_blocks`].
pub fn lambda_blocks_limit(m: &MomentTable) -> Result<CovBlocks> {
    build_lambda(m, None)
}

fn build_lambda(m: &MomentTable, n: Option<usize>) -> Result<CovBlocks> {
    m.require_order(4)?;
    let p = m.p();
    let q = multiset_count(p, 2);
    let d = Dense::new(m);
    let pairs = sorted_indices(p, 2);
    let scale = n.map_or(1.0, |n| 1.0 / n as f64);
    let second = n.map_or(0.0, |n| 1.0 / (n as f64 * (n as f64 - 1.0)));

    let b11 = Matrix::from_fn(p, p, |i, j| d.m2(i, j) * scale);
    let b12 = Matrix::from_fn(p, q, |i, c| d.m3(i, pairs[c][0], pairs[c][1]) * scale);
    let b22 = Matrix::from_fn(q, q, |r, c| {
        let (i, j) = (pairs[r][0], pairs[r][1]);
        let (k, l) = (pairs[c][0], pairs[c][1]);
        (m.get(&[i, j, k, l]) - d.m2(i, j) * d.m2(k, l)) * scale
            + (d.m2(i, k) * d.m2(j, l) + d.m2(i, l) * d.m2(j, k)) * second
    });
    Ok(CovBlocks {
        family: BlockFamily::Second,
        b11,
        b12,
        b22,
        n,
        p,
        q,
    })
}

/// Covariance blocks of the sample mean and the third-order sample moments.
pub fn psi_blocks(m: &MomentTable, n: usize) -> Result<CovBlocks> {
    m.require_order(6)?;
    check_n(n, psi_min_n(m.p()), "the third-order covariance blocks")?;
    build_psi(m, Some(n))
}

/// Large-sample limit of `n` times [`psi_blocks`].
pub fn psi_blocks_limit(m: &MomentTable) -> Result<CovBlocks> {
    build_psi(m, None)
}

fn build_psi(m: &MomentTable, n: Option<usize>) -> Result<CovBlocks> {
    m.require_order(6)?;
    let p = m.p();
    let q = multiset_count(p, 3);
    let d = Dense::new(m);
    let schemes = PsiSchemes::new();
    let triples = sorted_indices(p, 3);

    let (c_lambda, c_mid, c_last) = match n {
        Some(n) => {
            let n = n as f64;
            (1.0 / n, 1.0 / (n - 1.0), n / ((n - 1.0) * (n - 2.0)))
        }
        None => (1.0, 1.0, 1.0),
    };
    let c11 = n.map_or(1.0, |n| 1.0 / n as f64);

    let b11 = Matrix::from_fn(p, p, |i, j| d.m2(i, j) * c11);
    let b12 = Matrix::from_fn(p, q, |i, c| {
        let t = &triples[c];
        d.k4(i, t[0], t[1], t[2]) * c11
    });
    let b22 = Matrix::from_fn(q, q, |r, c| {
        let x = [
            triples[r][0],
            triples[r][1],
            triples[r][2],
            triples[c][0],
            triples[c][1],
            triples[c][2],
        ];
        let lam = schemes.lambda6(&d, &x);
        let mid = PsiSchemes::sum_pair_rest(&d, &schemes.pair9, &x)
            + PsiSchemes::sum_triples(&d, &schemes.triple9, &x);
        let last = PsiSchemes::sum_matchings(&d, &schemes.match6, &x);
        lam * c_lambda + mid * c_mid + last * c_last
    });
    Ok(CovBlocks {
        family: BlockFamily::Third,
        b11,
        b12,
        b22,
        n,
        p,
        q,
    })
}
