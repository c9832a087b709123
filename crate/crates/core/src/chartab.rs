//! Characters of K(C) ⊗ C: the table α_ij = μ_j(χ_i), formal codegrees,
//! class dimensions, the idempotents λ_D and their supports J_D.

use num::complex::Complex64;
use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactnum::CycNum;
use crate::fusion::{CharacterDefect, FusionError, FusionRing, KElement, Subcategory};
use crate::linalg;
use crate::params;
use crate::report::{Check, Value};

/// Separation required between eigenvalues of the random fusion combination.
pub const SPECTRUM_GAP: f64 = 1e-6;
const NUMERIC_RETRIES: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CharTabError {
    #[error("character table must be {0}x{0}")]
    Shape(usize),
    #[error("column {column} is not an algebra map (witness {witness:?})")]
    NotAlgebraMap { column: usize, witness: Vec<usize> },
    #[error("character table is singular")]
    SingularTable,
    #[error("no column equals the Frobenius-Perron dimensions")]
    NoFpColumn,
    #[error("column {0} has zero codegree")]
    ZeroCodegree(usize),
    #[error("class dimensions do not sum to the global dimension")]
    ClassDimSum,
    #[error("μ_{column}(λ_D) = {value} is neither 0 nor 1")]
    NotIdempotent { column: usize, value: String },
    #[error("no well-separated spectrum after {0} random combinations")]
    DegenerateSpectrum(usize),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

/// A validated exact character table.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    alpha: Vec<Vec<CycNum>>,
    fp_column: usize,
    codegrees: Vec<CycNum>,
    class_dims: Vec<CycNum>,
}

pub fn validate_character_table(ring: &FusionRing, alpha: Vec<Vec<CycNum>>) -> Result<CharacterTable, CharTabError> {
    let r = ring.rank();
    let dims = ring.exact_dims()?;
    if alpha.len() != r || alpha.iter().any(|row| row.len() != r) {
        return Err(CharTabError::Shape(r));
    }
    for j in 0..r {
        let column: Vec<CycNum> = (0..r).map(|i| alpha[i][j].clone()).collect();
        if let Some(defect) = ring.character_defect(&column, 0.0) {
            let witness = match defect {
                CharacterDefect::Unit => vec![0],
                CharacterDefect::Product(i, k) => vec![i, k],
            };
            return Err(CharTabError::NotAlgebraMap { column: j, witness });
        }
    }
    if linalg::rank(&alpha) < r {
        return Err(CharTabError::SingularTable);
    }
    let fp_column = (0..r).find(|&j| (0..r).all(|i| alpha[i][j] == dims[i])).ok_or(CharTabError::NoFpColumn)?;
    let global = ring.global_fpdim()?;
    let mut codegrees = Vec::with_capacity(r);
    let mut class_dims = Vec::with_capacity(r);
    for j in 0..r {
        let f: CycNum = (0..r).map(|i| &alpha[i][j] * &alpha[ring.dual(i)][j]).sum();
        if f.is_zero() {
            return Err(CharTabError::ZeroCodegree(j));
        }
        class_dims.push(&global / &f);
        codegrees.push(f);
    }
    if class_dims.iter().sum::<CycNum>() != global {
        return Err(CharTabError::ClassDimSum);
    }
    Ok(CharacterTable { alpha, fp_column, codegrees, class_dims })
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// μ_j(χ_i).
    pub fn alpha(&self, i: usize, j: usize) -> &CycNum {
        &self.alpha[i][j]
    }

    pub fn matrix(&self) -> &[Vec<CycNum>] {
        &self.alpha
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        self.alpha.iter().map(|row| row[j].clone()).collect()
    }

    pub fn fp_column(&self) -> usize {
        self.fp_column
    }

    pub fn codegrees(&self) -> &[CycNum] {
        &self.codegrees
    }

    /// dim(C^j) = FPdim(C) / codegree_j.
    pub fn class_dims(&self) -> &[CycNum] {
        &self.class_dims
    }

    /// Column j applied to an element of K(C).
    pub fn evaluate(&self, j: usize, chi_coords: &[CycNum]) -> CycNum {
        chi_coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| c * &self.alpha[i][j]).sum()
    }

    /// The column whose entries equal `values`, if any.
    pub fn find_column(&self, values: &[CycNum]) -> Option<usize> {
        (0..self.rank()).find(|&j| (0..self.rank()).all(|i| self.alpha[i][j] == values[i]))
    }
}

/// An element of CF(C), kept in both the χ basis and the idempotent basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    chi_coords: Vec<CycNum>,
    f_coords: Vec<CycNum>,
}

impl ClassFunction {
    pub fn from_chi(table: &CharacterTable, chi_coords: Vec<CycNum>) -> Self {
        let f_coords = (0..table.rank()).map(|j| table.evaluate(j, &chi_coords)).collect();
        ClassFunction { chi_coords, f_coords }
    }

    pub fn chi_coords(&self) -> &[CycNum] {
        &self.chi_coords
    }

    pub fn f_coords(&self) -> &[CycNum] {
        &self.f_coords
    }

    pub fn product(&self, ring: &FusionRing, table: &CharacterTable, other: &ClassFunction) -> ClassFunction {
        let p = ring.product(&KElement::new(self.chi_coords.clone()), &KElement::new(other.chi_coords.clone()));
        ClassFunction::from_chi(table, p.into_coeffs())
    }
}

/// λ_D = (1/FPdim(D)) Σ_{i∈D} d_i χ_i.
pub fn lambda_subcategory(ring: &FusionRing, table: &CharacterTable, d: &Subcategory) -> Result<ClassFunction, CharTabError> {
    let dims = ring.exact_dims()?;
    let inv = ring.subcategory_dim(d)?.inverse().expect("subcategory dimension is positive");
    let chi = (0..ring.rank())
        .map(|i| if d.contains(i) { &dims[i] * &inv } else { CycNum::zero() })
        .collect();
    Ok(ClassFunction::from_chi(table, chi))
}

/// J_D = { j : μ_j(λ_D) = 1 }.
pub fn support_jd(ring: &FusionRing, table: &CharacterTable, d: &Subcategory) -> Result<Vec<usize>, CharTabError> {
    let lambda = lambda_subcategory(ring, table, d)?;
    let mut out = Vec::new();
    for (j, v) in lambda.f_coords().iter().enumerate() {
        if v.is_one() {
            out.push(j);
        } else if !v.is_zero() {
            return Err(CharTabError::NotIdempotent { column: j, value: v.to_string() });
        }
    }
    Ok(out)
}

/// Σ_i μ_l(χ_i) μ_k(χ_{i*}) against δ_lk FPdim(C)/dim(C^k), for every pair.
pub fn check_second_orthogonality(ring: &FusionRing, table: &CharacterTable) -> Result<Vec<Check>, CharTabError> {
    let r = ring.rank();
    let global = ring.global_fpdim()?;
    let mut checks = Vec::with_capacity(r * r);
    for l in 0..r {
        for k in 0..r {
            let lhs: CycNum = (0..r).map(|i| table.alpha(i, l) * table.alpha(ring.dual(i), k)).sum();
            let rhs = if l == k { &global / &table.class_dims()[k] } else { CycNum::zero() };
            checks.push(Check::equal("eq-2.4", params! {"l" => l, "k" => k}, lhs, rhs));
        }
    }
    Ok(checks)
}

/// Σ_{j∈J_D} dim(C^j) against FPdim(C)/FPdim(D).
pub fn check_class_dims_over_jd(ring: &FusionRing, table: &CharacterTable, d: &Subcategory) -> Result<Check, CharTabError> {
    let jd = support_jd(ring, table, d)?;
    let dims: Vec<CycNum> = jd.iter().map(|&j| table.class_dims()[j].clone()).collect();
    let lhs: CycNum = dims.iter().sum();
    let rhs = &ring.global_fpdim()? / &ring.subcategory_dim(d)?;
    Ok(Check::equal("eq-2.7", params! {"D" => d.members(), "J_D" => jd, "class_dims" => dims}, lhs, rhs))
}

/// Approximate character table from a simultaneous eigenbasis of the N_i.
///
/// Column j holds (μ_j(χ_i))_i. Columns come out in eigenvalue order of the
/// random combination, so callers match them against exact tables.
pub fn characters_numeric(ring: &FusionRing, seed: u64) -> Result<Vec<Vec<Complex64>>, CharTabError> {
    let r = ring.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..NUMERIC_RETRIES {
        let c: Vec<f64> = (0..r).map(|_| rng.random::<f64>()).collect();
        let a = nalgebra::DMatrix::from_fn(r, r, |j, k| {
            (0..r).map(|i| c[i] * f64::from(ring.n(i, j, k))).sum::<f64>()
        });
        let eig: Vec<Complex64> = a.complex_eigenvalues().iter().copied().collect();
        let separated = (0..r).all(|x| (x + 1..r).all(|y| (eig[x] - eig[y]).norm() > SPECTRUM_GAP));
        if !separated {
            continue;
        }
        let dense: Vec<Vec<Complex64>> =
            (0..r).map(|j| (0..r).map(|k| Complex64::new(a[(j, k)], 0.0)).collect()).collect();
        let mut columns = Vec::with_capacity(r);
        for &lambda in &eig {
            let v = eigenvector(&dense, lambda).ok_or(CharTabError::DegenerateSpectrum(NUMERIC_RETRIES))?;
            let v0 = v[0];
            columns.push(v.iter().map(|x| x / v0).collect::<Vec<_>>());
        }
        let table: Vec<Vec<Complex64>> = (0..r).map(|i| (0..r).map(|j| columns[j][i]).collect()).collect();
        return Ok(table);
    }
    Err(CharTabError::DegenerateSpectrum(NUMERIC_RETRIES))
}

/// Inverse iteration with a slightly shifted eigenvalue.
fn eigenvector(a: &[Vec<Complex64>], lambda: Complex64) -> Option<Vec<Complex64>> {
    let r = a.len();
    let shift = lambda + Complex64::new(1e-10, 1e-10);
    let m: Vec<Vec<Complex64>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { a[i][j] - shift } else { a[i][j] }).collect())
        .collect();
    let mut v = vec![Complex64::new(1.0, 0.0); r];
    for _ in 0..3 {
        let w = linalg::solve(&m, &v)?;
        let norm = w.iter().map(|x| x.norm()).fold(0.0, f64::max);
        if norm == 0.0 || !norm.is_finite() {
            return None;
        }
        v = w.into_iter().map(|x| x / norm).collect();
    }
    if v[0].norm() < 1e-12 {
        return None;
    }
    Some(v)
}

/// Largest entrywise deviation between a numeric table and an exact one
/// after pairing each exact column with its closest numeric column.
/// Returns `None` when the pairing is not a bijection.
pub fn numeric_deviation(numeric: &[Vec<Complex64>], exact: &CharacterTable) -> Option<f64> {
    let r = exact.rank();
    let embedded: Vec<Vec<Complex64>> =
        (0..r).map(|i| (0..r).map(|j| exact.alpha(i, j).embed_complex()).collect()).collect();
    let distance = |je: usize, jn: usize| (0..r).map(|i| (embedded[i][je] - numeric[i][jn]).norm()).fold(0.0, f64::max);
    let mut used = vec![false; r];
    let mut worst: f64 = 0.0;
    for je in 0..r {
        let (jn, d) = (0..r)
            .map(|jn| (jn, distance(je, jn)))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        if used[jn] {
            return None;
        }
        used[jn] = true;
        worst = worst.max(d);
    }
    Some(worst)
}

/// Character table read off from S-matrix rows: column i is s_{i·}/d_i,
/// keeping only the first occurrence of each distinct column.
pub fn table_from_smatrix_rows(dims: &[CycNum], s: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    let r = dims.len();
    let mut columns: Vec<Vec<CycNum>> = Vec::new();
    for i in 0..r {
        let col: Vec<CycNum> = (0..r).map(|k| &s[i][k] / &dims[i]).collect();
        if !columns.contains(&col) {
            columns.push(col);
        }
    }
    let width = columns.len();
    (0..r).map(|k| (0..width).map(|j| columns[j][k].clone()).collect()).collect()
}

impl From<&CharacterTable> for Value {
    fn from(t: &CharacterTable) -> Self {
        Value::Matrix(t.alpha.iter().map(|row| row.iter().cloned().map(crate::report::Exact).collect()).collect())
    }
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;
    use crate::fusion::testing::*;

    #[test]
    fn rep_s3_class_dims_are_class_sizes() {
        let t = rep_s3_table();
        assert_eq!(t.class_dims(), &[int(1), int(3), int(2)]);
        assert_eq!(t.codegrees(), &[int(6), int(2), int(3)]);
        assert_eq!(t.fp_column(), 0);
    }

    #[test]
    fn ising_class_dims() {
        let t = ising_table();
        assert_eq!(t.class_dims(), &[int(1), int(1), int(2)]);
        assert_eq!(t.codegrees(), &[int(4), int(4), int(2)]);
    }

    #[test]
    fn bad_tables_are_rejected() {
        let t = vec![vec![int(1), int(1), int(1)], vec![int(1), int(1), int(-1)], vec![int(2), int(2), int(0)]];
        assert!(matches!(validate_character_table(&rep_s3(), t), Err(CharTabError::SingularTable)));
        let t = vec![vec![int(1), int(1), int(1)], vec![int(1), int(-1), int(1)], vec![int(2), int(1), int(-1)]];
        assert!(matches!(
            validate_character_table(&rep_s3(), t),
            Err(CharTabError::NotAlgebraMap { column: 1, .. })
        ));
        let t = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert!(matches!(validate_character_table(&rep_s3(), t), Err(CharTabError::Shape(3))));
    }

    #[test]
    fn lambda_and_support() {
        let ring = ising();
        let t = ising_table();
        let d = Subcategory::new(&ring, [0, 1]).unwrap();
        let l = lambda_subcategory(&ring, &t, &d).unwrap();
        assert_eq!(l.chi_coords(), &[CycNum::from_ratio(1, 2), CycNum::from_ratio(1, 2), int(0)]);
        assert_eq!(l.product(&ring, &t, &l), l);
        assert_eq!(support_jd(&ring, &t, &d).unwrap(), vec![0, 1]);
        assert_eq!(support_jd(&ring, &t, &Subcategory::unit()).unwrap(), vec![0, 1, 2]);
        assert_eq!(support_jd(&ring, &t, &Subcategory::whole(&ring)).unwrap(), vec![0]);
        let unit = lambda_subcategory(&ring, &t, &Subcategory::unit()).unwrap();
        assert_eq!(unit.chi_coords(), &[int(1), int(0), int(0)]);

        let s3 = rep_s3();
        let d = Subcategory::new(&s3, [0, 1]).unwrap();
        assert_eq!(support_jd(&s3, &rep_s3_table(), &d).unwrap(), vec![0, 2]);
    }

    #[test]
    fn fibonacci_lambda_of_whole() {
        let ring = fib();
        let l = lambda_subcategory(&ring, &fib_table(), &Subcategory::whole(&ring)).unwrap();
        // 2/(5+√5) and 2φ/(5+√5), with √5 = 2φ - 1
        let sqrt5 = golden().scale_int(2) - int(1);
        let c = int(2) / (int(5) + sqrt5);
        assert_eq!(l.chi_coords(), &[c.clone(), c * golden()]);
    }

    #[test]
    fn orthogonality_and_class_dim_sums() {
        for (ring, t) in [(ising(), ising_table()), (rep_s3(), rep_s3_table()), (fib(), fib_table())] {
            assert!(check_second_orthogonality(&ring, &t).unwrap().iter().all(|c| c.pass));
            for d in ring.enumerate_subcategories().unwrap() {
                assert!(check_class_dims_over_jd(&ring, &t, &d).unwrap().pass);
            }
        }
        let ring = ising();
        let d = Subcategory::new(&ring, [0, 1]).unwrap();
        let c = check_class_dims_over_jd(&ring, &ising_table(), &d).unwrap();
        assert_eq!(c.lhs, Some(int(2).into()));
    }

    #[test]
    fn numeric_tables() {
        let n = characters_numeric(&ising(), 0).unwrap();
        assert!(numeric_deviation(&n, &ising_table()).unwrap() < 1e-9);
        let n = characters_numeric(&fib(), 0).unwrap();
        let mut seconds: Vec<f64> = (0..2).map(|j| n[1][j].re).collect();
        seconds.sort_by(f64::total_cmp);
        assert!((seconds[0] + 0.618_033_988_7).abs() < 1e-9 && (seconds[1] - 1.618_033_988_7).abs() < 1e-9);
        let n = characters_numeric(&svec(), 0).unwrap();
        assert!(numeric_deviation(&n, &svec_table()).unwrap() < 1e-12);
        assert!(numeric_deviation(&characters_numeric(&rep_s3(), 7).unwrap(), &rep_s3_table()).unwrap() < 1e-9);
    }

    #[test]
    fn smatrix_rows_give_the_table() {
        let s = sqrt2();
        let smat = vec![
            vec![int(1), int(1), s.clone()],
            vec![int(1), int(1), -s.clone()],
            vec![s.clone(), -s.clone(), int(0)],
        ];
        let t = table_from_smatrix_rows(ising().fpdims().unwrap(), &smat);
        assert_eq!(&t[..], ising_table().matrix());
    }
}
