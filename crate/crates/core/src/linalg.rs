//! Small dense linear algebra over any [`Scalar`].

use crate::scalar::Scalar;

/// Pivot threshold for the floating-point instantiations.
const FLOAT_PIVOT_TOL: f64 = 1e-12;

fn pick_pivot<T: Scalar>(m: &[Vec<T>], col: usize, from: usize) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (r, row) in m.iter().enumerate().skip(from) {
        if row[col].is_negligible(FLOAT_PIVOT_TOL) {
            continue;
        }
        // Exact fields take the first nonzero entry; floats take the largest.
        if T::EXACT {
            return Some(r);
        }
        let mag = row[col].magnitude();
        if best.is_none_or(|(_, b)| mag > b) {
            best = Some((r, mag));
        }
    }
    best.map(|(r, _)| r)
}

/// Row-reduces a copy of `m` and returns its rank.
pub fn rank<T: Scalar>(m: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pick_pivot(&a, c, r) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in (r + 1)..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone() / pivot.clone();
            for j in c..cols {
                let delta = factor.clone() * a[r][j].clone();
                a[i][j] = a[i][j].clone() - delta;
            }
        }
        r += 1;
    }
    r
}

/// Solves `a x = b` for square nonsingular `a`; `None` when singular.
pub fn solve<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = pick_pivot(&m, c, c)?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = m[c][j].clone() / pivot.clone();
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..=n {
                let delta = factor.clone() * m[c][j].clone();
                m[i][j] = m[i][j].clone() - delta;
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(T::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(x I - m)`, coefficients from the constant
/// term up, computed by the Faddeev–LeVerrier recurrence.
pub fn char_poly<T: Scalar>(m: &[Vec<T>]) -> Vec<T> {
    let n = m.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    // work = A * M_k, with M_0 = 0
    let mut mk: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        let c_prev = coeffs[n + 1 - k].clone();
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] = row[i].clone() + c_prev.clone();
        }
        let am = mat_mul(m, &mk);
        let trace = (0..n).fold(T::zero(), |acc, i| acc + am[i][i].clone());
        coeffs[n - k] = -(trace / T::from_int(k as i64));
        mk = am;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&m), 1);
        let m = vec![vec![1.0, 2.0], vec![3.0, 4.0]];
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn solve_small_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&a, &[q(3), q(5)]).unwrap();
        assert_eq!(x, vec![BigRational::new(4.into(), 5.into()), BigRational::new(7.into(), 5.into())]);
        assert!(solve(&[vec![q(1), q(1)], vec![q(1), q(1)]], &[q(1), q(2)]).is_none());
    }

    #[test]
    fn char_poly_of_companion() {
        // companion matrix of x^2 - x - 1
        let m = vec![vec![q(0), q(1)], vec![q(1), q(1)]];
        assert_eq!(char_poly(&m), vec![q(-1), q(-1), q(1)]);
    }
}
