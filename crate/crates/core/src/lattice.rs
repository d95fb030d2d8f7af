//! Integer lattices: kernels and Hermite normal forms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row echelon form by unimodular row operations, returning the echelon
/// rows and the transform `U` with `U · rows = echelon`.
fn echelon_with_transform(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let m = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut top = 0;
    for col in 0..ncols {
        if top == m {
            break;
        }
        // gcd-combine every row below into the pivot row
        for i in top + 1..m {
            if a[i][col].is_zero() {
                continue;
            }
            if a[top][col].is_zero() {
                a.swap(top, i);
                u.swap(top, i);
                continue;
            }
            let (p, q) = (a[top][col].clone(), a[i][col].clone());
            let e = p.extended_gcd(&q);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let (pg, qg) = (&p / &g, &q / &g);
            // [x y; -q/g p/g] has determinant 1
            for mat in [&mut a, &mut u] {
                let width = mat[top].len();
                #[allow(clippy::needless_range_loop)]
                for c in 0..width {
                    let t = &mat[top][c];
                    let s = &mat[i][c];
                    let new_top = &x * t + &y * s;
                    let new_i = &pg * s - &qg * t;
                    mat[top][c] = new_top;
                    mat[i][c] = new_i;
                }
            }
        }
        if !a[top][col].is_zero() {
            top += 1;
        }
    }
    (a, u)
}

/// Basis of the saturated lattice `{v ∈ Z^n : M v = 0}`.
pub fn integer_kernel(m: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // rows of M^T are indexed by the n coordinates
    let transposed: Vec<Vec<BigInt>> = (0..n).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect();
    let (ech, u) = echelon_with_transform(&transposed, m.len());
    let rows = ech
        .iter()
        .zip(u)
        .filter(|(e, _)| e.iter().all(|x| x.is_zero()))
        .map(|(_, t)| t)
        .collect::<Vec<_>>();
    hermite_normal_form(&rows, n)
}

/// Row Hermite normal form of the lattice spanned by `rows`: zero rows are
/// dropped, pivots are positive, entries above a pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let (mut a, _) = echelon_with_transform(rows, n);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    for row in a.iter_mut() {
        let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        if row[p].is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        pivots.push(p);
    }
    for i in 0..a.len() {
        let p = pivots[i];
        let pv = a[i][p].clone();
        for k in 0..i {
            let q = a[k][p].div_floor(&pv);
            if !q.is_zero() {
                let sub: Vec<BigInt> = a[i].iter().map(|x| x * &q).collect();
                for (x, s) in a[k].iter_mut().zip(sub) {
                    *x -= s;
                }
            }
        }
    }
    a
}

/// Greatest common divisor of the entries.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_a_line_direction() {
        // direction (2, -5) of the line 10x + 4y = c
        let k = integer_kernel(&[v(&[2, -5])], 2);
        assert_eq!(k, [v(&[5, 2])]);
    }

    #[test]
    fn kernel_is_saturated() {
        // x - y = 0 and x + y = 0 in Z^3: kernel is spanned by e_3
        let k = integer_kernel(&[v(&[1, -1, 0]), v(&[1, 1, 0])], 3);
        assert_eq!(k, [v(&[0, 0, 1])]);
        let k = integer_kernel(&[v(&[2, 4, 6])], 3);
        assert_eq!(k.len(), 2);
        for b in &k {
            let s: BigInt = 2 * &b[0] + 4 * &b[1] + 6 * &b[2];
            assert!(s.is_zero());
        }
    }

    #[test]
    fn empty_system_gives_identity() {
        assert_eq!(integer_kernel(&[], 2), [v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = hermite_normal_form(&[v(&[5, 2]), v(&[2, 5])], 2);
        let b = hermite_normal_form(&[v(&[7, 7]), v(&[-2, -5])], 2);
        assert_eq!(a, b);
        assert_eq!(a, [v(&[1, 13]), v(&[0, 21])]);
    }
}
