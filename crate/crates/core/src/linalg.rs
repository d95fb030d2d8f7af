//! Exact linear algebra over the rationals.
//!
//! Elimination runs on integer rows (each rational row is scaled by its
//! common denominator) and keeps entries small by dividing every row by the
//! gcd of its entries after each step. Rationals appear only at the end,
//! when pivots are normalized to 1.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, Rational};

fn to_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let d = common_denominator(row);
    row.iter().map(|q| (q * &d).to_integer()).collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Integer echelon form with every pivot column cleared in all other rows.
/// Returns the rows and their pivot columns.
fn integer_reduced_echelon(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        // smallest nonzero entry as pivot keeps growth down
        let Some(p) = (top..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(top, p);
        let pivot_row = rows[top].clone();
        let pv = &pivot_row[col];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let mul_self = pv / &g;
            let mul_pivot = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &mul_self - y * &mul_pivot;
            }
            make_primitive(row);
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

/// Canonical reduced row echelon form; zero rows are dropped.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    rref_with_pivots(rows, ncols).0
}

pub fn rref_with_pivots(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            let mut r = to_integer_row(r);
            make_primitive(&mut r);
            r
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let (echelon, pivots) = integer_reduced_echelon(int_rows, ncols);
    let out = echelon
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let pv = row[p].clone();
            row.into_iter().map(|x| Rational::new(x, pv.clone())).collect()
        })
        .collect();
    (out, pivots)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| to_integer_row(r)).collect();
    integer_reduced_echelon(int_rows, ncols).1.len()
}

/// Basis of `{v : rows * v = 0}`, one vector per free column, in canonical
/// form (each vector has a 1 in its free column and 0 in the other free
/// columns).
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref_with_pivots(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// Determinant of a square matrix.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &pv;
            #[allow(clippy::needless_range_loop)]
            for j in col..n {
                let t = &a[col][j] * &f;
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Solves a square system with a unique solution.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let rows: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (r, pivots) = rref_with_pivots(&rows, n + 1);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(r.into_iter().map(|row| row[n].clone()).collect())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn row(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = [row(&[2, 4, 6]), row(&[1, 1, 1])];
        let b = [row(&[1, 1, 1]), row(&[0, 2, 4]), row(&[3, 5, 7])];
        assert_eq!(rref(&a, 3), rref(&b, 3));
        assert_eq!(rref(&a, 3), [row(&[1, 0, -1]), row(&[0, 1, 2])]);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(&[row(&[1, 2, 3])], 3);
        assert_eq!(k, [row(&[-2, 1, 0]), row(&[-3, 0, 1])]);
        for v in &k {
            assert!(dot(&row(&[1, 2, 3]), v).is_zero());
        }
    }

    #[test]
    fn determinant_and_solve() {
        let m = [row(&[2, 1]), row(&[1, 3])];
        assert_eq!(determinant(&m), int(5));
        let x = solve(&m, &[int(1), int(0)]).unwrap();
        assert_eq!(x, [frac(3, 5), frac(-1, 5)]);
        assert_eq!(solve(&[row(&[1, 1]), row(&[2, 2])], &[int(0), int(1)]), None);
    }

    #[test]
    fn rank_with_fractions() {
        let rows = [vec![frac(1, 2), frac(1, 3)], vec![frac(3, 2), int(1)]];
        assert_eq!(rank(&rows, 2), 1);
    }
}
