//! Row reduction over the rationals, shared by subspaces and Jacobian ranks.

use super::Rational;

/// Reduces `rows` in place to reduced row-echelon form and returns the rank.
/// Zero rows are removed.
pub(crate) fn rref(rows: &mut Vec<Vec<Rational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col].recip().expect("pivot is nonzero");
        for entry in rows[pivot_row].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows.len()
}

pub(crate) fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work)
}

/// Basis of the right kernel {v : M v = 0} of the matrix given by `rows`,
/// one basis vector per free column, in ascending free-column order.
pub(crate) fn kernel_basis(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut reduced = rows.to_vec();
    rref(&mut reduced);
    let mut pivot_of_col = vec![None; cols];
    for (r, row) in reduced.iter().enumerate() {
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            pivot_of_col[c] = Some(r);
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for c in 0..cols {
            if let Some(r) = pivot_of_col[c] {
                v[c] = -&reduced[r][free];
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rref_identifies_rank() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![vec![q(1), q(1), q(0), q(0)], vec![q(0), q(0), q(1), q(1)]];
        let kernel = kernel_basis(&rows, 4);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                assert!(dot.is_zero());
            }
        }
    }
}
