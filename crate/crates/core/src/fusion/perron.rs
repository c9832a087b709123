use super::FusionError;

const REL_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 100_000;

/// Frobenius–Perron dimensions from a flat fusion tensor.
///
/// Power iteration runs on A = Σ_i N_i, whose entries are all positive for a
/// fusion ring, so the iteration converges to the common Perron vector d of
/// the N_i. Returned as d / d_0.
pub fn fpdim_numeric_from_tensor(rank: usize, tensor: &[u32]) -> Result<Vec<f64>, FusionError> {
    let mut a = vec![0.0f64; rank * rank];
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                a[j * rank + k] += f64::from(tensor[(i * rank + j) * rank + k]);
            }
        }
    }
    let mut v = vec![1.0f64; rank];
    for _ in 0..MAX_ITERATIONS {
        let mut w: Vec<f64> = (0..rank).map(|j| (0..rank).map(|k| a[j * rank + k] * v[k]).sum()).collect();
        let norm = w.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if norm == 0.0 || !norm.is_finite() {
            return Err(FusionError::ConvergenceFailure);
        }
        w.iter_mut().for_each(|x| *x /= norm);
        let change = w.iter().zip(&v).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
        v = w;
        if change <= REL_TOL {
            let v0 = v[0];
            if v0 <= 0.0 || v.iter().any(|x| *x <= 0.0) {
                return Err(FusionError::ConvergenceFailure);
            }
            return Ok(v.iter().map(|x| x / v0).collect());
        }
    }
    Err(FusionError::ConvergenceFailure)
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;

    #[test]
    fn ising_and_fibonacci() {
        let d = ising().fpdim_numeric().unwrap();
        assert!((d[0] - 1.0).abs() < 1e-12 && (d[1] - 1.0).abs() < 1e-12);
        assert!((d[2] - 2f64.sqrt()).abs() < 1e-10);
        let d = fib().fpdim_numeric().unwrap();
        assert!((d[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn pointed_rings_have_unit_dims() {
        assert!(svec().fpdim_numeric().unwrap().iter().all(|d| (d - 1.0).abs() < 1e-12));
    }

    #[test]
    fn hom_property() {
        let ring = rep_s3();
        let d = ring.fpdim_numeric().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let rhs: f64 = (0..3).map(|k| f64::from(ring.n(i, j, k)) * d[k]).sum();
                assert!((d[i] * d[j] - rhs).abs() < 1e-8);
            }
        }
    }
}
