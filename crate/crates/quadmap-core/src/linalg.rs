//! Tiny exact linear algebra: ranks and small determinants over a field.

use alloc::vec::Vec;

use crate::scalar::Scalar;

/// Rank by Gaussian elimination; exact over any field scalar.
pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for i in r + 1..nrows {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].mul(&inv);
            for j in c..ncols {
                let t = rows[i][j].sub(&factor.mul(&rows[r][j]));
                rows[i][j] = t;
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

pub fn det2<S: Scalar>(m: &[[S; 2]; 2]) -> S {
    m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
}

pub fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    let a = m[0][0].mul(&det2(&[
        [m[1][1].clone(), m[1][2].clone()],
        [m[2][1].clone(), m[2][2].clone()],
    ]));
    let b = m[0][1].mul(&det2(&[
        [m[1][0].clone(), m[1][2].clone()],
        [m[2][0].clone(), m[2][2].clone()],
    ]));
    let c = m[0][2].mul(&det2(&[
        [m[1][0].clone(), m[1][1].clone()],
        [m[2][0].clone(), m[2][1].clone()],
    ]));
    a.sub(&b).add(&c)
}
