//! Exact dense linear algebra over a cyclotomic field.

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<CyclotomicNumber>>;

fn common_order(m: &Matrix) -> u32 {
    m.iter().flatten().map(|x| x.order()).fold(1, crate::cyclotomic::integers::lcm)
}

fn promoted(m: &Matrix) -> Matrix {
    let n = common_order(m);
    m.iter().map(|row| row.iter().map(|x| x.promote(n).expect("order divides lcm")).collect()).collect()
}

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = promoted(m);
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let order = common_order(&a);
    let mut prev = CyclotomicNumber::one(order);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = v.checked_div(&prev).expect("Bareiss divisions are exact");
            }
            a[i][c] = CyclotomicNumber::zero(order);
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve(m: &Matrix, b: &[CyclotomicNumber]) -> Result<Vec<CyclotomicNumber>> {
    let n = m.len();
    if b.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::ArityMismatch(format!("{n}×? system with {} right-hand entries", b.len())));
    }
    let mut aug: Matrix = m.iter().zip(b).map(|(row, x)| {
        let mut r = row.clone();
        r.push(x.clone());
        r
    }).collect();
    aug = promoted(&aug);
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero()).ok_or(Error::Singular)?;
        aug.swap(c, p);
        let inv = aug[c][c].inverse()?;
        for j in c..=n {
            aug[c][j] = &aug[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=n {
                    let v = &aug[i][j] - &(&f * &aug[c][j]);
                    aug[i][j] = v;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, j: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, j)
    }

    #[test]
    fn rank_and_solve() {
        let one = CyclotomicNumber::one(8);
        let m = vec![vec![one.clone(), z(8, 1)], vec![z(8, 1), z(8, 2)]];
        assert_eq!(rank(&m), 1);
        let m = vec![vec![one.clone(), z(8, 1)], vec![z(8, 3), one.clone()]];
        assert_eq!(rank(&m), 2);
        let b = vec![z(8, 2), one.clone()];
        let x = solve(&m, &b).unwrap();
        assert_eq!(&m[0][0] * &x[0] + &m[0][1] * &x[1], b[0]);
        assert_eq!(&m[1][0] * &x[0] + &m[1][1] * &x[1], b[1]);
        let singular = vec![vec![one.clone(), one.clone()], vec![one.clone(), one]];
        assert_eq!(solve(&singular, &b), Err(Error::Singular));
    }
}
