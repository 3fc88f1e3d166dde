//! Samples, sample means and covariances, and tables of central moments.
//!
//! Moments are indexed by nondecreasing multi-indices `i1 <= i2 <= .. <= is`.
//! Within one order the entries are kept in lexicographic order, which is
//! also the stacking order of the covariance and third-moment vectors.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::matalg::{Matrix, Vector};

pub const MAX_ORDER: usize = 6;

/// `n` observations of a `p`-variate random vector, one observation per row.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    data: DMatrix<f64>,
}

impl Sample {
    pub fn new(data: DMatrix<f64>) -> Result<Self> {
        let (n, p) = data.shape();
        if p == 0 {
            return Err(Error::InvalidInput("sample has no columns".into()));
        }
        if n < 2 {
            return Err(Error::SampleTooSmall {
                n,
                required: 2,
                what: "a sample",
            });
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "non-finite value at row {}, column {}",
                pos % n,
                pos / n
            )));
        }
        Ok(Self { data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let p = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != p) {
            return Err(Error::InvalidInput(format!(
                "row {bad} has {} values, expected {p}",
                rows[bad].len()
            )));
        }
        Self::new(DMatrix::from_fn(rows.len(), p, |i, j| rows[i][j]))
    }

    /// Univariate sample.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        Self::new(DMatrix::from_column_slice(values.len(), 1, values))
    }

    pub fn n(&self) -> usize {
        self.data.nrows()
    }

    pub fn p(&self) -> usize {
        self.data.ncols()
    }

    pub fn data(&self) -> &DMatrix<f64> {
        &self.data
    }

    pub fn into_data(self) -> DMatrix<f64> {
        self.data
    }

    /// The same observations with rows in lexicographic order. Statistics
    /// computed from it do not depend on the order rows were supplied in,
    /// down to the last bit of floating-point rounding.
    pub fn canonical_order(&self) -> Sample {
        let (n, p) = self.data.shape();
        let mut rows: Vec<usize> = (0..n).collect();
        rows.sort_by(|&a, &b| {
            (0..p)
                .map(|j| self.data[(a, j)].total_cmp(&self.data[(b, j)]))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        Sample {
            data: DMatrix::from_fn(n, p, |i, j| self.data[(rows[i], j)]),
        }
    }
}

/// Number of nondecreasing index tuples of length `order` over `0..p`.
pub fn multiset_count(p: usize, order: usize) -> usize {
    binomial(p + order - 1, order)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All nondecreasing index tuples of length `order` over `0..p`, lexicographically.
pub fn sorted_indices(p: usize, order: usize) -> Vec<Vec<usize>> {
    fn rec(p: usize, order: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == order {
            out.push(cur.clone());
            return;
        }
        for v in start..p {
            cur.push(v);
            rec(p, order, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(multiset_count(p, order));
    rec(p, order, 0, &mut Vec::with_capacity(order), &mut out);
    out
}

/// A fully symmetric table of (central or raw) moments of orders `0..=max_order`.
///
/// Lookups accept any permutation of a multi-index.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable {
    p: usize,
    max_order: usize,
    orders: Vec<Vec<f64>>,
    // cum[r][v] = number of nondecreasing tuples of length r whose first value is < v
    cum: Vec<Vec<usize>>,
}

impl MomentTable {
    fn empty(p: usize, max_order: usize) -> Self {
        let orders = (0..=max_order)
            .map(|s| vec![0.0; multiset_count(p, s)])
            .collect();
        let cum = (0..=max_order)
            .map(|r| {
                let mut row = vec![0; p + 1];
                for v in 0..p {
                    // tuples of length r+1 starting at v: the tail has values in v..p
                    row[v + 1] = row[v] + binomial(p - v + r - 1, r);
                }
                row
            })
            .collect();
        Self {
            p,
            max_order,
            orders,
            cum,
        }
    }

    /// Builds a table by evaluating `f` on every sorted multi-index.
    pub fn from_fn(p: usize, max_order: usize, mut f: impl FnMut(&[usize]) -> f64) -> Result<Self> {
        if p == 0 || max_order > MAX_ORDER {
            return Err(Error::InvalidInput(format!(
                "moment table needs p >= 1 and order <= {MAX_ORDER}"
            )));
        }
        let mut table = Self::empty(p, max_order);
        for s in 0..=max_order {
            for (k, idx) in sorted_indices(p, s).iter().enumerate() {
                table.orders[s][k] = f(idx);
            }
        }
        Ok(table)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Position of a sorted multi-index inside its order.
    fn rank(&self, sorted: &[usize]) -> usize {
        let s = sorted.len();
        let mut rank = 0;
        let mut prev = 0;
        for (k, &v) in sorted.iter().enumerate() {
            let row = &self.cum[s - k - 1];
            rank += row[v] - row[prev];
            prev = v;
        }
        rank
    }

    /// Moment for the multi-index `idx`, in any order.
    pub fn get(&self, idx: &[usize]) -> f64 {
        let s = idx.len();
        assert!(s <= self.max_order, "order {s} exceeds table order {}", self.max_order);
        let mut buf = [0usize; MAX_ORDER];
        let buf = &mut buf[..s];
        buf.copy_from_slice(idx);
        buf.sort_unstable();
        assert!(s == 0 || buf[s - 1] < self.p, "index out of range");
        self.orders[s][self.rank(buf)]
    }

    /// Entries of one order in lexicographic multi-index order.
    pub fn order(&self, s: usize) -> &[f64] {
        &self.orders[s]
    }

    pub fn require_order(&self, need: usize) -> Result<()> {
        if self.max_order < need {
            return Err(Error::MomentOrder {
                have: self.max_order,
                need,
            });
        }
        Ok(())
    }

    /// Moments of `A X` given the moments of `X`.
    pub fn transform(&self, a: &Matrix) -> Result<Self> {
        if a.ncols() != self.p {
            return Err(Error::InvalidInput(format!(
                "transform has {} columns, table has p = {}",
                a.ncols(),
                self.p
            )));
        }
        let q = a.nrows();
        let source = self;
        MomentTable::from_fn(q, self.max_order, |idx| {
            let s = idx.len();
            let mut total = 0.0;
            let mut js = vec![0usize; s];
            let count = source.p.pow(s as u32);
            for flat in 0..count {
                let mut rem = flat;
                let mut coef = 1.0;
                for k in 0..s {
                    js[k] = rem % source.p;
                    rem /= source.p;
                    coef *= a[(idx[k], js[k])];
                }
                if coef != 0.0 {
                    total += coef * source.get(&js);
                }
            }
            total
        })
    }
}

/// Distinct third-order sample moments `S_ijk` (`i <= j <= k`), in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct ThirdMomentVector {
    pub p: usize,
    pub values: Vec<f64>,
}

pub fn sample_mean(x: &Sample) -> Vector {
    let n = x.n() as f64;
    Vector::from_fn(x.p(), |j, _| x.data().column(j).iter().sum::<f64>() / n)
}

fn centered(x: &Sample) -> DMatrix<f64> {
    let mean = sample_mean(x);
    let mut c = x.data().clone();
    for (j, mut col) in c.column_iter_mut().enumerate() {
        col.add_scalar_mut(-mean[j]);
    }
    c
}

/// Sample covariance matrix with divisor `n - 1`.
pub fn sample_cov(x: &Sample) -> Result<Matrix> {
    let n = x.n();
    if n < 2 {
        return Err(Error::SampleTooSmall {
            n,
            required: 2,
            what: "the sample covariance",
        });
    }
    let c = centered(x);
    Ok(c.transpose() * &c / (n - 1) as f64)
}

/// Third-order sample moments `S_ijk = n / ((n-1)(n-2)) * sum_r d_ri d_rj d_rk`.
pub fn sample_third(x: &Sample) -> Result<ThirdMomentVector> {
    let n = x.n();
    if n < 3 {
        return Err(Error::SampleTooSmall {
            n,
            required: 3,
            what: "third-order sample moments",
        });
    }
    let m = central_moments(x, 3)?;
    let nf = n as f64;
    // m is the n-divisor moment, so the factor becomes n^2 / ((n-1)(n-2))
    let factor = nf * nf / ((nf - 1.0) * (nf - 2.0));
    Ok(ThirdMomentVector {
        p: x.p(),
        values: m.order(3).iter().map(|v| v * factor).collect(),
    })
}

struct Node {
    parent: Option<usize>,
    var: usize,
    order: usize,
    rank: usize,
}

// Preorder walk of the multi-index prefix tree. For each order the nodes
// come out in lexicographic order, so `rank` is a running count.
fn prefix_tree(p: usize, max_order: usize) -> Vec<Node> {
    fn rec(
        p: usize,
        max_order: usize,
        parent: Option<usize>,
        start: usize,
        depth: usize,
        next_rank: &mut [usize],
        nodes: &mut Vec<Node>,
    ) {
        for v in start..p {
            let id = nodes.len();
            nodes.push(Node {
                parent,
                var: v,
                order: depth,
                rank: next_rank[depth],
            });
            next_rank[depth] += 1;
            if depth < max_order {
                rec(p, max_order, Some(id), v, depth + 1, next_rank, nodes);
            }
        }
    }
    let mut nodes = Vec::new();
    let mut next_rank = vec![0; max_order + 1];
    rec(p, max_order, None, 0, 1, &mut next_rank, &mut nodes);
    nodes
}

/// Central sample moments `m_{i1..is} = n^-1 sum_k prod (x_{k,i} - mean_i)` up to `max_order`.
///
/// The mean is removed in a first pass; products of the centered values are
/// accumulated in a single sweep over a prefix tree of multi-indices.
pub fn central_moments(x: &Sample, max_order: usize) -> Result<MomentTable> {
    if !(2..=MAX_ORDER).contains(&max_order) {
        return Err(Error::InvalidInput(format!(
            "moment order must lie in 2..={MAX_ORDER}, got {max_order}"
        )));
    }
    let p = x.p();
    let n = x.n();
    let c = centered(x);
    let nodes = prefix_tree(p, max_order);
    let mut table = MomentTable::empty(p, max_order);
    let mut prod = vec![0.0; nodes.len()];
    let mut row = vec![0.0; p];
    for k in 0..n {
        for (j, r) in row.iter_mut().enumerate() {
            *r = c[(k, j)];
        }
        for (id, node) in nodes.iter().enumerate() {
            let base = node.parent.map_or(1.0, |pa| prod[pa]);
            let v = base * row[node.var];
            prod[id] = v;
            table.orders[node.order][node.rank] += v;
        }
    }
    let nf = n as f64;
    table.orders[0][0] = 1.0;
    for s in 1..=max_order {
        for v in &mut table.orders[s] {
            *v /= nf;
        }
    }
    // first central moments are zero up to rounding; make them exact
    table.orders[1].iter_mut().for_each(|v| *v = 0.0);
    Ok(table)
}
