//! Dense linear algebra over `F_p`, used by the verification oracles.

use crate::algebra::{Coeff, FieldSpec};

/// Row-reduces in place and returns the rank.
pub fn rank(rows: &mut [Vec<Coeff>], field: FieldSpec) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Whether `v` lies in the row span of `rows`.
pub fn in_span(rows: &[Vec<Coeff>], v: &[Coeff], field: FieldSpec) -> bool {
    let mut a = rows.to_vec();
    let r0 = rank(&mut a, field);
    a.push(v.to_vec());
    rank(&mut a, field) == r0
}

/// Basis of the null space `{x : x A = 0}` of the rows of `A` (left kernel).
pub fn left_kernel_dim(rows: &[Vec<Coeff>], field: FieldSpec) -> usize {
    let mut a = rows.to_vec();
    rows.len() - rank(&mut a, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let f = FieldSpec::new(7).unwrap();
        let mut a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&mut a, f), 2);
        assert!(in_span(&[vec![1, 0], vec![0, 1]], &[3, 4], f));
        assert!(!in_span(&[vec![1, 1]], &[1, 2], f));
        assert_eq!(left_kernel_dim(&[vec![1, 1], vec![2, 2]], f), 1);
    }
}
