//! Exact Gaussian elimination over any [`Field`].

use super::Field;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(a: &mut [Vec<F>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = f.mul(&a[r][j]);
                    a[i][j] = a[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{ v : A v = 0 }` for an `rows × cols` matrix; one vector per free column.
///
/// `template` supplies the field context for the identity elements.
pub fn kernel<F: Field>(matrix: &[Vec<F>], cols: usize, template: &F) -> Vec<Vec<F>> {
    let mut a = matrix.to_vec();
    let pivots = rref(&mut a);
    let zero = template.zero_like();
    let one = template.one_like();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = a[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

pub fn rank<F: Field>(matrix: &[Vec<F>]) -> usize {
    let mut a = matrix.to_vec();
    rref(&mut a).len()
}

/// Solves `Σ x_j · columns[j] = rhs` when the columns are independent.
/// Returns `None` if the system is inconsistent.
pub fn solve_columns<F: Field>(columns: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = columns.len();
    let mut a: Vec<Vec<F>> = rhs
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut row: Vec<F> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.contains(&n) {
        return None;
    }
    let zero = rhs.first()?.zero_like();
    let mut x = vec![zero; n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = a[row][n].clone();
    }
    Some(x)
}
