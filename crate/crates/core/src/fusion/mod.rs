//! Fusion rings: validated fusion tensors, Frobenius–Perron dimensions,
//! fusion subcategories and Deligne products.

mod perron;
mod subcat;

use std::fmt;

use num::integer::lcm;
use thiserror::Error;

use crate::exactnum::CycNum;
use crate::scalar::Scalar;

pub use perron::fpdim_numeric_from_tensor;
pub use subcat::{Subcategory, DEFAULT_ENUMERATION_BOUND};

/// Tolerance for comparing float dimensions with their exact counterparts.
pub const DIM_TOL: f64 = 1e-9;

/// The ring axiom a candidate fusion tensor failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    DistinctNames,
    DualInvolution,
    Unit,
    Duality,
    Commutativity,
    FrobeniusReciprocity,
    Associativity,
    DimensionCharacter,
    DimensionPositivity,
    DimensionDuality,
    DimensionPerron,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::DistinctNames => "distinct-names",
            Axiom::DualInvolution => "dual-involution",
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::Commutativity => "commutativity",
            Axiom::FrobeniusReciprocity => "frobenius-reciprocity",
            Axiom::Associativity => "associativity",
            Axiom::DimensionCharacter => "dimension-character",
            Axiom::DimensionPositivity => "dimension-positivity",
            Axiom::DimensionDuality => "dimension-duality",
            Axiom::DimensionPerron => "dimension-perron",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error("malformed fusion data: {0}")]
    Shape(String),
    #[error("{axiom} axiom violated at indices {indices:?}")]
    Validation { axiom: Axiom, indices: Vec<usize> },
    #[error("power iteration did not converge")]
    ConvergenceFailure,
    #[error("exact Frobenius-Perron dimensions are required")]
    ExactDataMissing,
    #[error("rank {rank} exceeds the enumeration bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("{members:?} is not a fusion subcategory: {reason}")]
    NotSubcategory { members: Vec<usize>, reason: String },
}

fn violated(axiom: Axiom, indices: &[usize]) -> FusionError {
    FusionError::Validation { axiom, indices: indices.to_vec() }
}

/// Unvalidated fusion data, as read from a file or built by hand.
#[derive(Debug, Clone, PartialEq)]
pub struct RawFusionRing {
    pub names: Vec<String>,
    /// `tensor[i][j][k]` = N_{ij}^k.
    pub tensor: Vec<Vec<Vec<u32>>>,
    pub dual: Vec<usize>,
    pub fpdims: Option<Vec<CycNum>>,
}

/// An element of K(C) ⊗ F in the basis of simple classes.
#[derive(Debug, Clone, PartialEq)]
pub struct KElement<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> KElement<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        KElement { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        KElement { coeffs: vec![T::zero(); rank] }
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut e = Self::zero(rank);
        e.coeffs[i] = T::one();
        e
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn scale(&self, c: &T) -> Self {
        KElement { coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        KElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }
}

/// Why a vector of values fails to be a ring character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterDefect {
    /// The unit is not sent to 1.
    Unit,
    /// μ(χ_i) μ(χ_k) ≠ Σ_l N_{ik}^l μ(χ_l).
    Product(usize, usize),
}

/// A validated commutative fusion ring with unit at index 0.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionRing {
    names: Vec<String>,
    rank: usize,
    tensor: Vec<u32>,
    dual: Vec<usize>,
    fpdims: Option<Vec<CycNum>>,
    fpdims_float: Vec<f64>,
}

pub fn validate_fusion_ring(raw: RawFusionRing) -> Result<FusionRing, FusionError> {
    let rank = raw.names.len();
    if rank == 0 {
        return Err(FusionError::Shape("rank must be positive".into()));
    }
    if raw.tensor.len() != rank
        || raw.tensor.iter().any(|m| m.len() != rank || m.iter().any(|row| row.len() != rank))
    {
        return Err(FusionError::Shape(format!("tensor must be {rank}x{rank}x{rank}")));
    }
    if raw.dual.len() != rank {
        return Err(FusionError::Shape(format!("dual must have {rank} entries")));
    }
    if let Some(&bad) = raw.dual.iter().find(|&&d| d >= rank) {
        return Err(FusionError::Shape(format!("dual entry {bad} out of range")));
    }
    if raw.fpdims.as_ref().is_some_and(|d| d.len() != rank) {
        return Err(FusionError::Shape(format!("fpdims must have {rank} entries")));
    }

    for i in 0..rank {
        for j in (i + 1)..rank {
            if raw.names[i] == raw.names[j] {
                return Err(violated(Axiom::DistinctNames, &[i, j]));
            }
        }
    }

    let tensor: Vec<u32> = raw.tensor.iter().flatten().flatten().copied().collect();
    let n = |i: usize, j: usize, k: usize| tensor[(i * rank + j) * rank + k];
    let dual = &raw.dual;

    if dual[0] != 0 {
        return Err(violated(Axiom::DualInvolution, &[0]));
    }
    for i in 0..rank {
        if dual[dual[i]] != i {
            return Err(violated(Axiom::DualInvolution, &[i]));
        }
    }
    for j in 0..rank {
        for k in 0..rank {
            let delta = u32::from(j == k);
            if n(0, j, k) != delta || n(j, 0, k) != delta {
                return Err(violated(Axiom::Unit, &[j, k]));
            }
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            if n(i, j, 0) != u32::from(j == dual[i]) {
                return Err(violated(Axiom::Duality, &[i, j]));
            }
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                if n(i, j, k) != n(j, i, k) {
                    return Err(violated(Axiom::Commutativity, &[i, j, k]));
                }
            }
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                if n(i, j, k) != n(dual[i], k, j) {
                    return Err(violated(Axiom::FrobeniusReciprocity, &[i, j, k]));
                }
            }
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                for l in 0..rank {
                    let left: u64 = (0..rank).map(|m| u64::from(n(i, j, m)) * u64::from(n(m, k, l))).sum();
                    let right: u64 = (0..rank).map(|m| u64::from(n(j, k, m)) * u64::from(n(i, m, l))).sum();
                    if left != right {
                        return Err(violated(Axiom::Associativity, &[i, j, k, l]));
                    }
                }
            }
        }
    }

    let fpdims_float = fpdim_numeric_from_tensor(rank, &tensor)?;

    if let Some(dims) = &raw.fpdims {
        for i in 0..rank {
            for j in 0..rank {
                let rhs: CycNum = (0..rank)
                    .filter(|&k| n(i, j, k) != 0)
                    .map(|k| dims[k].scale_int(i64::from(n(i, j, k))))
                    .sum();
                if &dims[i] * &dims[j] != rhs {
                    return Err(violated(Axiom::DimensionCharacter, &[i, j]));
                }
            }
        }
        for (i, d) in dims.iter().enumerate() {
            let z = d.embed_complex();
            if z.im.abs() > DIM_TOL || z.re <= 0.0 {
                return Err(violated(Axiom::DimensionPositivity, &[i]));
            }
            if (z.re - fpdims_float[i]).abs() > DIM_TOL {
                return Err(violated(Axiom::DimensionPerron, &[i]));
            }
            if dims[dual[i]] != *d {
                return Err(violated(Axiom::DimensionDuality, &[i]));
            }
        }
    }

    Ok(FusionRing { names: raw.names, rank, tensor, dual: raw.dual, fpdims: raw.fpdims, fpdims_float })
}

impl FusionRing {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// N_{ij}^k.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.tensor[(i * self.rank + j) * self.rank + k]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn fpdims(&self) -> Option<&[CycNum]> {
        self.fpdims.as_deref()
    }

    pub fn exact_dims(&self) -> Result<&[CycNum], FusionError> {
        self.fpdims().ok_or(FusionError::ExactDataMissing)
    }

    pub fn fpdims_float(&self) -> &[f64] {
        &self.fpdims_float
    }

    /// Recomputes the Perron–Frobenius dimensions by power iteration.
    pub fn fpdim_numeric(&self) -> Result<Vec<f64>, FusionError> {
        fpdim_numeric_from_tensor(self.rank, &self.tensor)
    }

    /// Least common conductor of the exact dimensions (1 without them).
    pub fn conductor(&self) -> u32 {
        self.fpdims().map_or(1, |d| d.iter().fold(1, |acc, x| lcm(acc, x.conductor())))
    }

    pub fn tensor_nested(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| (0..self.rank).map(|k| self.n(i, j, k)).collect()).collect())
            .collect()
    }

    /// Left multiplication matrix (N_i)_{jk} = N_{ij}^k.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|j| (0..self.rank).map(|k| self.n(i, j, k)).collect()).collect()
    }

    pub fn is_simple_product_zero(&self, i: usize, j: usize) -> bool {
        (0..self.rank).all(|k| self.n(i, j, k) == 0)
    }

    /// Product in K(C) ⊗ F.
    pub fn product<T: Scalar>(&self, a: &KElement<T>, b: &KElement<T>) -> KElement<T> {
        let r = self.rank;
        let mut out = vec![T::zero(); r];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.clone() * y.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let m = self.n(i, j, k);
                    if m != 0 {
                        *o = o.clone() + T::from_int(i64::from(m)) * xy.clone();
                    }
                }
            }
        }
        KElement { coeffs: out }
    }

    /// Checks that `values[i] = μ(χ_i)` defines a ring character.
    pub fn character_defect<T: Scalar>(&self, values: &[T], tol: f64) -> Option<CharacterDefect> {
        assert_eq!(values.len(), self.rank);
        if !values[0].near(&T::one(), tol) {
            return Some(CharacterDefect::Unit);
        }
        for i in 0..self.rank {
            for k in i..self.rank {
                let rhs = (0..self.rank)
                    .filter(|&l| self.n(i, k, l) != 0)
                    .fold(T::zero(), |acc, l| acc + T::from_int(i64::from(self.n(i, k, l))) * values[l].clone());
                if !(values[i].clone() * values[k].clone()).near(&rhs, tol) {
                    return Some(CharacterDefect::Product(i, k));
                }
            }
        }
        None
    }

    pub fn global_fpdim(&self) -> Result<CycNum, FusionError> {
        Ok(self.exact_dims()?.iter().map(|d| d * d).sum())
    }

    /// FPdim(D) = Σ_{i∈D} d_i².
    pub fn subcategory_dim(&self, sub: &Subcategory) -> Result<CycNum, FusionError> {
        let dims = self.exact_dims()?;
        Ok(sub.members().iter().map(|&i| &dims[i] * &dims[i]).sum())
    }

    /// Σ_{i∈set} d_i [X_i].
    pub fn regular_element(&self, set: &[usize]) -> Result<KElement<CycNum>, FusionError> {
        let dims = self.exact_dims()?;
        let mut e = KElement::zero(self.rank);
        for &i in set {
            e.coeffs[i] = dims[i].clone();
        }
        Ok(e)
    }

    /// The fusion ring of a subcategory, with simples renumbered in the
    /// order of `sub.members()`.
    pub fn restrict(&self, sub: &Subcategory) -> FusionRing {
        let members = sub.members();
        let pos = |i: usize| members.iter().position(|&m| m == i).expect("subcategory is dual-closed");
        let r = members.len();
        let mut tensor = Vec::with_capacity(r * r * r);
        for &i in members {
            for &j in members {
                for &k in members {
                    tensor.push(self.n(i, j, k));
                }
            }
        }
        FusionRing {
            names: members.iter().map(|&i| self.names[i].clone()).collect(),
            rank: r,
            tensor,
            dual: members.iter().map(|&i| pos(self.dual[i])).collect(),
            fpdims: self.fpdims.as_ref().map(|d| members.iter().map(|&i| d[i].clone()).collect()),
            fpdims_float: members.iter().map(|&i| self.fpdims_float[i]).collect(),
        }
    }

    pub fn to_raw(&self) -> RawFusionRing {
        RawFusionRing {
            names: self.names.clone(),
            tensor: self.tensor_nested(),
            dual: self.dual.clone(),
            fpdims: self.fpdims.clone(),
        }
    }
}

/// Deligne product: simples are pairs (i, i') indexed as `i * b.rank() + i'`.
pub fn deligne_product(a: &FusionRing, b: &FusionRing) -> Result<FusionRing, FusionError> {
    let (ra, rb) = (a.rank, b.rank);
    let pair = |i: usize, j: usize| i * rb + j;
    let mut names = Vec::with_capacity(ra * rb);
    let mut dual = Vec::with_capacity(ra * rb);
    for i in 0..ra {
        for j in 0..rb {
            names.push(format!("({},{})", a.names[i], b.names[j]));
            dual.push(pair(a.dual[i], b.dual[j]));
        }
    }
    let r = ra * rb;
    let mut tensor = vec![vec![vec![0u32; r]; r]; r];
    for (i, ip, j, jp, k, kp) in index_sextuples(ra, rb) {
        tensor[pair(i, ip)][pair(j, jp)][pair(k, kp)] = a.n(i, j, k) * b.n(ip, jp, kp);
    }
    let fpdims = match (&a.fpdims, &b.fpdims) {
        (Some(da), Some(db)) => {
            let mut out = Vec::with_capacity(r);
            for x in da {
                for y in db {
                    out.push(x * y);
                }
            }
            Some(out)
        }
        _ => None,
    };
    validate_fusion_ring(RawFusionRing { names, tensor, dual, fpdims })
}

fn index_sextuples(ra: usize, rb: usize) -> impl Iterator<Item = (usize, usize, usize, usize, usize, usize)> {
    (0..ra).flat_map(move |i| {
        (0..rb).flat_map(move |ip| {
            (0..ra).flat_map(move |j| {
                (0..rb).flat_map(move |jp| (0..ra).flat_map(move |k| (0..rb).map(move |kp| (i, ip, j, jp, k, kp))))
            })
        })
    })
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} ring [{}]", self.rank, self.names.join(", "))
    }
}

/// Hand-built rings shared by the unit tests across modules.
#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn sqrt2() -> CycNum {
        CycNum::zeta_power(8, 1) - CycNum::zeta_power(8, 3)
    }

    pub fn golden() -> CycNum {
        CycNum::from_int(1) + CycNum::zeta_power(5, 1) + CycNum::zeta_power(5, 4)
    }

    pub fn tensor_from_rules(rank: usize, rules: &[(usize, usize, &[usize])]) -> Vec<Vec<Vec<u32>>> {
        let mut t = vec![vec![vec![0u32; rank]; rank]; rank];
        for j in 0..rank {
            t[0][j][j] = 1;
            t[j][0][j] = 1;
        }
        for &(i, j, out) in rules {
            for &k in out {
                t[i][j][k] += 1;
                if i != j {
                    t[j][i][k] += 1;
                }
            }
        }
        t
    }

    pub fn ising_raw() -> RawFusionRing {
        RawFusionRing {
            names: vec!["1".into(), "ε".into(), "σ".into()],
            tensor: tensor_from_rules(3, &[(1, 1, &[0]), (1, 2, &[2]), (2, 2, &[0, 1])]),
            dual: vec![0, 1, 2],
            fpdims: Some(vec![CycNum::from_int(1), CycNum::from_int(1), sqrt2()]),
        }
    }

    pub fn ising() -> FusionRing {
        validate_fusion_ring(ising_raw()).unwrap()
    }

    pub fn fib() -> FusionRing {
        validate_fusion_ring(RawFusionRing {
            names: vec!["1".into(), "τ".into()],
            tensor: tensor_from_rules(2, &[(1, 1, &[0, 1])]),
            dual: vec![0, 1],
            fpdims: Some(vec![CycNum::from_int(1), golden()]),
        })
        .unwrap()
    }

    pub fn svec() -> FusionRing {
        validate_fusion_ring(RawFusionRing {
            names: vec!["1".into(), "f".into()],
            tensor: tensor_from_rules(2, &[(1, 1, &[0])]),
            dual: vec![0, 1],
            fpdims: Some(vec![CycNum::from_int(1), CycNum::from_int(1)]),
        })
        .unwrap()
    }

    pub fn rep_s3() -> FusionRing {
        validate_fusion_ring(RawFusionRing {
            names: vec!["1".into(), "sgn".into(), "V".into()],
            tensor: tensor_from_rules(3, &[(1, 1, &[0]), (1, 2, &[2]), (2, 2, &[0, 1, 2])]),
            dual: vec![0, 1, 2],
            fpdims: Some(vec![CycNum::from_int(1), CycNum::from_int(1), CycNum::from_int(2)]),
        })
        .unwrap()
    }

    pub fn trivial() -> FusionRing {
        validate_fusion_ring(RawFusionRing {
            names: vec!["1".into()],
            tensor: vec![vec![vec![1]]],
            dual: vec![0],
            fpdims: Some(vec![CycNum::from_int(1)]),
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    /// Brute-force associativity scan used as an independent oracle.
    fn first_associativity_failure(t: &[Vec<Vec<u32>>]) -> Option<[usize; 4]> {
        let r = t.len();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u32 = (0..r).map(|m| t[i][j][m] * t[m][k][l]).sum();
                        let rhs: u32 = (0..r).map(|m| t[j][k][m] * t[i][m][l]).sum();
                        if lhs != rhs {
                            return Some([i, j, k, l]);
                        }
                    }
                }
            }
        }
        None
    }

    #[test]
    fn ising_validates() {
        let ring = ising();
        assert_eq!(ring.rank(), 3);
        assert_eq!(first_associativity_failure(&ring.tensor_nested()), None);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(ring.n(i, j, k), ring.n(ring.dual(i), k, j));
                }
            }
        }
    }

    #[test]
    fn broken_associativity_is_reported() {
        // ε⊗ε = 1 + ε keeps unit, duality, commutativity and reciprocity intact
        let mut raw = ising_raw();
        raw.fpdims = None;
        raw.tensor[1][1][1] = 1;
        let oracle = first_associativity_failure(&raw.tensor).unwrap();
        let err = validate_fusion_ring(raw).unwrap_err();
        assert_eq!(err, FusionError::Validation { axiom: Axiom::Associativity, indices: oracle.to_vec() });
        assert_eq!(oracle, [1, 1, 2, 2]);
    }

    #[test]
    fn sigma_cubed_tamper_is_caught_by_dimensions() {
        // σ⊗σ = 1 + ε + σ is still an associative ring (that of Rep(S_3)),
        // so only the exact √2 dimension exposes it.
        let mut raw = ising_raw();
        raw.tensor[2][2][2] = 1;
        assert_eq!(first_associativity_failure(&raw.tensor), None);
        let err = validate_fusion_ring(raw.clone()).unwrap_err();
        assert_eq!(err, FusionError::Validation { axiom: Axiom::DimensionCharacter, indices: vec![2, 2] });
        raw.fpdims = None;
        assert!(validate_fusion_ring(raw).is_ok());
    }

    #[test]
    fn trivial_ring_validates() {
        assert_eq!(trivial().rank(), 1);
        assert_eq!(trivial().global_fpdim().unwrap(), CycNum::from_int(1));
    }

    #[test]
    fn other_axiom_failures() {
        let mut raw = ising_raw();
        raw.tensor[1][2][2] = 0;
        assert!(matches!(
            validate_fusion_ring(raw).unwrap_err(),
            FusionError::Validation { axiom: Axiom::Commutativity, .. }
        ));
        let mut raw = ising_raw();
        raw.dual = vec![0, 2, 1];
        assert!(matches!(
            validate_fusion_ring(raw).unwrap_err(),
            FusionError::Validation { axiom: Axiom::Duality, .. }
        ));
        let mut raw = ising_raw();
        raw.names[2] = "1".into();
        assert!(matches!(
            validate_fusion_ring(raw).unwrap_err(),
            FusionError::Validation { axiom: Axiom::DistinctNames, .. }
        ));
        let mut raw = ising_raw();
        raw.tensor.pop();
        assert!(matches!(validate_fusion_ring(raw).unwrap_err(), FusionError::Shape(_)));
        let mut raw = ising_raw();
        raw.fpdims.as_mut().unwrap()[2] = -sqrt2();
        assert!(validate_fusion_ring(raw).is_err());
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(ising().global_fpdim().unwrap(), CycNum::from_int(4));
        // 1 + φ² = (5 + √5)/2 with √5 = 2φ - 1
        let sqrt5 = golden().scale_int(2) - CycNum::from_int(1);
        let expected = (CycNum::from_int(5) + sqrt5) * CycNum::from_ratio(1, 2);
        assert_eq!(fib().global_fpdim().unwrap(), expected);
        assert_eq!(svec().global_fpdim().unwrap(), CycNum::from_int(2));
        let mut raw = ising_raw();
        raw.fpdims = None;
        assert_eq!(validate_fusion_ring(raw).unwrap().global_fpdim(), Err(FusionError::ExactDataMissing));
    }

    #[test]
    fn deligne_products() {
        let p = deligne_product(&ising(), &svec()).unwrap();
        assert_eq!(p.rank(), 6);
        assert_eq!(p.global_fpdim().unwrap(), CycNum::from_int(8));
        let q = deligne_product(&fib(), &trivial()).unwrap();
        assert_eq!(q.tensor_nested(), fib().tensor_nested());
        assert_eq!(q.fpdims(), fib().fpdims());
        assert_eq!(q.name(1), "(τ,1)");
    }

    #[test]
    fn product_matches_in_float_and_exact() {
        let ring = ising();
        let a = KElement::new(vec![CycNum::from_int(1), CycNum::from_ratio(1, 3), sqrt2()]);
        let b = KElement::new(vec![CycNum::from_int(0), sqrt2(), CycNum::from_int(2)]);
        let exact = ring.product(&a, &b);
        let af = KElement::new(a.coeffs().iter().map(|x| x.embed_complex()).collect::<Vec<_>>());
        let bf = KElement::new(b.coeffs().iter().map(|x| x.embed_complex()).collect::<Vec<_>>());
        let float = ring.product(&af, &bf);
        for (e, f) in exact.coeffs().iter().zip(float.coeffs()) {
            assert!((e.embed_complex() - f).norm() < 1e-12);
        }
    }

    #[test]
    fn restriction_keeps_structure() {
        let ring = rep_s3();
        let sub = Subcategory::new(&ring, [0, 1]).unwrap();
        let r = ring.restrict(&sub);
        assert_eq!(r.rank(), 2);
        assert_eq!(r.n(1, 1, 0), 1);
        assert_eq!(r.global_fpdim().unwrap(), CycNum::from_int(2));
    }
}
