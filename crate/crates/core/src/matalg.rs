//! Kronecker products, `vec`/`vech`, and the commutation, duplication and
//! elimination matrices.
//!
//! `vech` uses the row-by-row upper-triangle order
//! `(a11, a12, .., a1p, a22, .., app)`, the same order in which the sample
//! covariances are stacked when building the covariance blocks.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub type Matrix = DMatrix<f64>;
pub type Vector = DVector<f64>;

const SYMMETRY_TOL: f64 = 1e-10;

/// Kronecker product: block `(i, j)` of the result is `a[(i, j)] * b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Stacks the columns of `a` on top of each other.
pub fn vec(a: &Matrix) -> Vector {
    let (rows, cols) = a.shape();
    Vector::from_fn(rows * cols, |k, _| a[(k % rows, k / rows)])
}

/// Position of `(i, j)` (any order) inside `vech` of a `p x p` matrix.
pub fn vech_index(i: usize, j: usize, p: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // rows 0..i contribute p + (p-1) + .. + (p-i+1) entries
    i * p - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Half-vectorization of a symmetric matrix.
pub fn vech(a: &Matrix) -> Result<Vector> {
    let (rows, cols) = a.shape();
    if rows != cols {
        return Err(Error::InvalidInput(format!(
            "vech needs a square matrix, got {rows}x{cols}"
        )));
    }
    let scale = a.amax().max(f64::MIN_POSITIVE);
    let mut asymmetry: f64 = 0.0;
    for i in 0..rows {
        for j in (i + 1)..rows {
            asymmetry = asymmetry.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    if asymmetry > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric { asymmetry });
    }
    let p = rows;
    let mut out = Vector::zeros(p * (p + 1) / 2);
    let mut k = 0;
    for i in 0..p {
        for j in i..p {
            out[k] = a[(i, j)];
            k += 1;
        }
    }
    Ok(out)
}

/// Inverse of [`vech`]: rebuilds the symmetric matrix.
pub fn unvech(v: &Vector) -> Result<Matrix> {
    let len = v.len();
    let p = ((((8 * len + 1) as f64).sqrt() - 1.0) / 2.0).round() as usize;
    if p * (p + 1) / 2 != len || len == 0 {
        return Err(Error::InvalidInput(format!(
            "length {len} is not a triangular number"
        )));
    }
    let mut out = Matrix::zeros(p, p);
    for i in 0..p {
        for j in i..p {
            let x = v[vech_index(i, j, p)];
            out[(i, j)] = x;
            out[(j, i)] = x;
        }
    }
    Ok(out)
}

/// The `p^2 x p^2` commutation matrix `K_pp` with `K vec(A) = vec(A')`.
pub fn commutation(p: usize) -> Matrix {
    let mut k = Matrix::zeros(p * p, p * p);
    // block (i, j) holds a single 1 at its (j, i) element
    for i in 0..p {
        for j in 0..p {
            k[(i * p + j, j * p + i)] = 1.0;
        }
    }
    k
}

/// Duplication matrix `G` (`vec(A) = G vech(A)`) and elimination matrix `H`
/// (`vech(A) = H vec(A)`) for symmetric `p x p` matrices.
pub fn duplication_elimination(p: usize) -> (Matrix, Matrix) {
    let q = p * (p + 1) / 2;
    let mut g = Matrix::zeros(p * p, q);
    let mut h = Matrix::zeros(q, p * p);
    for col in 0..p {
        for row in 0..p {
            let v = col * p + row;
            let u = vech_index(row, col, p);
            g[(v, u)] = 1.0;
            if row <= col {
                h[(u, v)] = 1.0;
            }
        }
    }
    (g, h)
}
