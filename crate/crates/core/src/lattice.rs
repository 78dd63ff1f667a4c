//! Small exact linear-algebra helpers over Q and Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Inverse of a square rational matrix, or `None` if singular.
pub(crate) fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] = &a[r][j] - t;
                    let t = &f * &inv[col][j];
                    inv[r][j] = &inv[r][j] - t;
                }
            }
        }
    }
    Some(inv)
}

pub(crate) fn int_matrix_to_rat(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect()
}

/// Least common multiple of all denominators in a rational matrix.
pub(crate) fn common_denominator(m: &[Vec<BigRational>]) -> BigInt {
    m.iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integer row reduction with a unimodular transform: returns `(h, u)` with
/// `h = u * m` in row echelon form. Rows of `u` matching zero rows of `h`
/// form a Z-basis of the integer left kernel of `m`.
pub(crate) fn row_echelon(m: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        loop {
            // smallest non-zero |entry| at or below pivot_row
            let best = (pivot_row..rows)
                .filter(|&r| !h[r][col].is_zero())
                .min_by(|&a, &b| h[a][col].abs().cmp(&h[b][col].abs()));
            let Some(best) = best else { break };
            h.swap(pivot_row, best);
            u.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                for j in 0..cols {
                    let t = &q * &h[pivot_row][j];
                    h[r][j] -= t;
                }
                for j in 0..rows {
                    let t = &q * &u[pivot_row][j];
                    u[r][j] -= t;
                }
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !h[pivot_row][col].is_zero() {
            pivot_row += 1;
        }
    }
    (h, u)
}

/// Z-basis (as rows) of the lattice spanned by the given integer vectors.
pub(crate) fn lattice_basis(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (h, _) = row_echelon(&m);
    h.into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| r.iter().map(|x| i64::try_from(x).expect("lattice entry fits i64")).collect())
        .collect()
}

/// Solve `x * basis = v` over Q for a row vector `x` (basis rows independent,
/// square). Returns `None` when `basis` is singular.
pub(crate) fn coordinates(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<BigRational>> {
    let n = basis.len();
    // x * B = v  <=>  B^T x^T = v^T
    let bt: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| rat(basis[j][i])).collect()).collect();
    let inv = invert(&bt)?;
    Some(
        (0..n)
            .map(|i| (0..n).fold(BigRational::zero(), |acc, j| acc + &inv[i][j] * rat(v[j])))
            .collect(),
    )
}
