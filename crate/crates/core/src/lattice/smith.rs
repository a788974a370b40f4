//! Integer matrix routines: row basis (echelon form), Bareiss determinant,
//! and Smith normal form invariants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

/// A basis of the Z-span of `rows`, in row echelon form.
pub fn row_basis(mut rows: Matrix) -> Matrix {
    let Some(ncols) = rows.first().map(|r| r.len()) else {
        return rows;
    };
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below pivot_row
            let best = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].abs());
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = rows[r][col].div_floor(&rows[pivot_row][col]);
                let pivot = rows[pivot_row].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
    }
    rows.truncate(pivot_row);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

/// Determinant by fraction-free Gaussian elimination.
pub fn determinant(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for t in 0..n {
        if a[t][t].is_zero() {
            let Some(r) = (t + 1..n).find(|&r| !a[r][t].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(t, r);
            sign = -sign;
        }
        for i in t + 1..n {
            for j in t + 1..n {
                let v = &a[i][j] * &a[t][t] - &a[i][t] * &a[t][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[t][t].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Nonzero Smith invariants `d_1 | d_2 | …`, all positive.
pub fn smith_invariants(m: &Matrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return finish(out);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let f = a[i][t].div_floor(&a[t][t]);
                if !f.is_zero() {
                    let pr = a[t].clone();
                    for (x, p) in a[i].iter_mut().zip(&pr) {
                        *x -= &f * p;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let f = a[t][j].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for row in a.iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &f * p;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let ri = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&ri) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    finish(out)
}

fn finish(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.retain(|x| !x.is_zero());
    d
}

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&from_i64(&[vec![2, 1], vec![1, 2]])), BigInt::from(3));
        assert_eq!(determinant(&from_i64(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&from_i64(&[vec![1, 2], vec![2, 4]])), BigInt::from(0));
    }

    #[test]
    fn smith_of_a3_cartan() {
        let cartan = from_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(smith_invariants(&cartan), big(&[1, 1, 4]));
        let doubled: Matrix = cartan.iter().map(|r| r.iter().map(|x| x * 2).collect()).collect();
        assert_eq!(smith_invariants(&doubled), big(&[2, 2, 8]));
    }

    #[test]
    fn smith_needs_divisibility_fix() {
        // diag(2, 3) ≅ Z_6
        assert_eq!(smith_invariants(&from_i64(&[vec![2, 0], vec![0, 3]])), big(&[1, 6]));
    }

    #[test]
    fn row_basis_drops_dependent_rows() {
        let rows = from_i64(&[vec![2, 0], vec![0, 2], vec![1, 1], vec![3, 3]]);
        let basis = row_basis(rows);
        assert_eq!(basis.len(), 2);
        assert_eq!(determinant(&basis).abs(), BigInt::from(2));
    }
}
