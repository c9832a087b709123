//! Right cosets of the simples with respect to a fusion subcategory, the
//! coset Hecke algebra, coset orthogonality and coset integrality.

use num::traits::{One, Zero};
use thiserror::Error;

use crate::chartab::{support_jd, CharTabError, CharacterTable};
use crate::exactnum::CycNum;
use crate::fusion::{FusionError, FusionRing, KElement, Subcategory};
use crate::params;
use crate::report::{Check, Value};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CosetError {
    #[error("coefficients inside coset {block} are not proportional to dimensions")]
    InconsistentCoset { block: usize },
    #[error("column {0} is not in J_D")]
    IndexNotInJD(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    CharTab(#[from] CharTabError),
}

/// The right cosets of Irr(C) with respect to a subcategory D.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetDecomposition {
    subcategory: Subcategory,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    reps: Vec<usize>,
    reg_dims: Vec<CycNum>,
    dual_block: Vec<usize>,
}

impl CosetDecomposition {
    pub fn subcategory(&self) -> &Subcategory {
        &self.subcategory
    }

    /// Blocks in order of their smallest member; block 0 is Irr(D).
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Representative X_t.
    pub fn rep(&self, t: usize) -> usize {
        self.reps[t]
    }

    /// FPdim(R_t) = Σ_{Z∈t} d_Z².
    pub fn reg_dim(&self, t: usize) -> &CycNum {
        &self.reg_dims[t]
    }

    /// t* = {dual(i) : i ∈ t}.
    pub fn dual_block(&self, t: usize) -> usize {
        self.dual_block[t]
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Partition of the simples into classes of X ~ Y ⟺ X ⊂ Y ⊗ S for some S ∈ D.
pub fn coset_partition(ring: &FusionRing, d: &Subcategory) -> Result<CosetDecomposition, CosetError> {
    let dims = ring.exact_dims()?;
    let r = ring.rank();

    let mut block_of = vec![usize::MAX; r];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..r {
        if block_of[start] != usize::MAX {
            continue;
        }
        let t = blocks.len();
        let mut block = vec![start];
        block_of[start] = t;
        let mut cursor = 0;
        while cursor < block.len() {
            let x = block[cursor];
            cursor += 1;
            for &s in d.members() {
                for k in 0..r {
                    if ring.n(x, s, k) > 0 && block_of[k] == usize::MAX {
                        block_of[k] = t;
                        block.push(k);
                    }
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }

    // The relation is symmetric and transitive, so the one-step union-find
    // classes must coincide with the breadth-first closure.
    let mut uf = UnionFind::new(r);
    for x in 0..r {
        for &s in d.members() {
            for k in 0..r {
                if ring.n(x, s, k) > 0 {
                    uf.union(x, k);
                }
            }
        }
    }
    for x in 0..r {
        for y in 0..r {
            assert_eq!(
                block_of[x] == block_of[y],
                uf.find(x) == uf.find(y),
                "coset relation is not an equivalence at ({x}, {y})"
            );
        }
    }

    let dual_block: Vec<usize> = blocks.iter().map(|b| block_of[ring.dual(b[0])]).collect();
    let mut reps = vec![usize::MAX; blocks.len()];
    for t in 0..blocks.len() {
        if reps[t] != usize::MAX {
            continue;
        }
        let partner = dual_block[t];
        if partner == t {
            // prefer a self-dual member so the representative is its own dual
            let b = &blocks[t];
            reps[t] = b.iter().copied().find(|&i| ring.dual(i) == i).unwrap_or(b[0]);
        } else {
            reps[t] = blocks[t][0];
            reps[partner] = ring.dual(blocks[t][0]);
        }
    }
    let reg_dims = blocks.iter().map(|b| b.iter().map(|&z| &dims[z] * &dims[z]).sum()).collect();

    Ok(CosetDecomposition { subcategory: d.clone(), blocks, block_of, reps, reg_dims, dual_block })
}

/// R_t = Σ_{Z∈t} d_Z [Z].
pub fn regular_element_of_block(ring: &FusionRing, dec: &CosetDecomposition, t: usize) -> Result<KElement<CycNum>, CosetError> {
    Ok(ring.regular_element(&dec.blocks[t])?)
}

/// [X] R_D / d_X.
fn normalized_translate(ring: &FusionRing, d: &Subcategory, x: usize) -> Result<KElement<CycNum>, CosetError> {
    let dims = ring.exact_dims()?;
    let rd = ring.regular_element(d.members())?;
    let inv = dims[x].inverse().expect("dimensions are nonzero");
    Ok(ring.product(&KElement::basis(ring.rank(), x), &rd).scale(&inv))
}

/// [X]R_D/d_X agrees for X, Y exactly when they share a coset, and equals
/// FPdim(D) R_t / FPdim(R_t).
pub fn check_regular_proportionality(ring: &FusionRing, dec: &CosetDecomposition) -> Result<Vec<Check>, CosetError> {
    let r = ring.rank();
    let d = dec.subcategory();
    let translates: Vec<KElement<CycNum>> = (0..r).map(|x| normalized_translate(ring, d, x)).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    for x in 0..r {
        for y in (x + 1)..r {
            let same = dec.block_of(x) == dec.block_of(y);
            let equal = translates[x] == translates[y];
            checks.push(Check::with(
                "eq-3.1",
                params! {"D" => d.members(), "X" => x, "Y" => y, "same_coset" => same},
                Some(Value::nums(translates[x].coeffs())),
                Some(Value::nums(translates[y].coeffs())),
                equal == same,
            ));
        }
    }
    let dim_d = ring.subcategory_dim(d)?;
    for x in 0..r {
        let t = dec.block_of(x);
        let scale = &dim_d / dec.reg_dim(t);
        let rhs = regular_element_of_block(ring, dec, t)?.scale(&scale);
        checks.push(Check::same(
            "eq-3.2",
            params! {"D" => d.members(), "X" => x, "t" => t},
            Value::nums(translates[x].coeffs()),
            Value::nums(rhs.coeffs()),
        ));
    }
    Ok(checks)
}

/// Structure constants of e_m = R_m/FPdim(R_m): e_m e_n = Σ_p H_mn^p e_p.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeAlgebra {
    h: Vec<Vec<Vec<CycNum>>>,
}

impl HeckeAlgebra {
    pub fn dim(&self) -> usize {
        self.h.len()
    }

    /// H_{mn}^p.
    pub fn constant(&self, m: usize, n: usize, p: usize) -> &CycNum {
        &self.h[m][n][p]
    }
}

fn normalized_block_element(ring: &FusionRing, dec: &CosetDecomposition, t: usize) -> Result<KElement<CycNum>, CosetError> {
    let inv = dec.reg_dim(t).inverse().expect("coset dimensions are positive");
    Ok(regular_element_of_block(ring, dec, t)?.scale(&inv))
}

pub fn hecke_constants(ring: &FusionRing, dec: &CosetDecomposition) -> Result<HeckeAlgebra, CosetError> {
    let b = dec.len();
    let e: Vec<KElement<CycNum>> = (0..b).map(|t| normalized_block_element(ring, dec, t)).collect::<Result<_, _>>()?;
    let mut h = vec![vec![vec![CycNum::zero(); b]; b]; b];
    for m in 0..b {
        for n in 0..b {
            let prod = ring.product(&e[m], &e[n]);
            for p in 0..b {
                let block = &dec.blocks()[p];
                let lead = block[0];
                let c = &prod.coeffs()[lead] / &e[p].coeffs()[lead];
                for &z in &block[1..] {
                    if prod.coeffs()[z] != &c * &e[p].coeffs()[z] {
                        return Err(CosetError::InconsistentCoset { block: p });
                    }
                }
                h[m][n][p] = c;
            }
        }
    }
    Ok(HeckeAlgebra { h })
}

/// H_mn^p = Σ_{Z∈p} d_Z N_XY^Z / (d_X d_Y).
pub fn hecke_closed_form(ring: &FusionRing, dec: &CosetDecomposition, x: usize, y: usize, p: usize) -> Result<CycNum, CosetError> {
    let dims = ring.exact_dims()?;
    let num: CycNum = dec.blocks()[p]
        .iter()
        .filter(|&&z| ring.n(x, y, z) > 0)
        .map(|&z| dims[z].scale_int(i64::from(ring.n(x, y, z))))
        .sum();
    Ok(&num / &(&dims[x] * &dims[y]))
}

/// Row sums, representative independence, commutativity, associativity and
/// duality of the Hecke constants.
pub fn check_hecke(ring: &FusionRing, dec: &CosetDecomposition, hecke: &HeckeAlgebra) -> Result<Vec<Check>, CosetError> {
    let b = dec.len();
    let dm = dec.subcategory().members();
    let mut checks = Vec::new();
    for m in 0..b {
        for n in 0..b {
            let sum: CycNum = (0..b).map(|p| hecke.constant(m, n, p)).sum();
            checks.push(Check::equal("eq-3.3", params! {"D" => dm, "property" => "row-sum", "m" => m, "n" => n}, sum, CycNum::one()));

            let row: Vec<CycNum> = (0..b).map(|p| hecke.constant(m, n, p).clone()).collect();
            let mut mismatch = None;
            'reps: for &x in &dec.blocks()[m] {
                for &y in &dec.blocks()[n] {
                    let closed: Vec<CycNum> = (0..b).map(|p| hecke_closed_form(ring, dec, x, y, p)).collect::<Result<_, _>>()?;
                    if closed != row {
                        mismatch = Some((x, y, closed));
                        break 'reps;
                    }
                }
            }
            let params = params! {"D" => dm, "property" => "representatives", "m" => m, "n" => n};
            checks.push(match mismatch {
                None => Check::same("eq-3.3", params, Value::nums(&row), Value::nums(&row)),
                Some((x, y, closed)) => Check::same("eq-3.3", params, Value::nums(&row), Value::nums(&closed))
                    .note(format!("closed form differs for X={x}, Y={y}")),
            });

            let swapped: Vec<CycNum> = (0..b).map(|p| hecke.constant(n, m, p).clone()).collect();
            checks.push(Check::same(
                "eq-3.3",
                params! {"D" => dm, "property" => "commutative", "m" => m, "n" => n},
                Value::nums(&row),
                Value::nums(&swapped),
            ));
        }
    }

    let mut assoc_failure = None;
    'assoc: for m in 0..b {
        for n in 0..b {
            for p in 0..b {
                for s in 0..b {
                    let lhs: CycNum = (0..b).map(|q| hecke.constant(m, n, q) * hecke.constant(q, p, s)).sum();
                    let rhs: CycNum = (0..b).map(|q| hecke.constant(n, p, q) * hecke.constant(m, q, s)).sum();
                    if lhs != rhs {
                        assoc_failure = Some(([m, n, p, s], lhs, rhs));
                        break 'assoc;
                    }
                }
            }
        }
    }
    let params = params! {"D" => dm, "property" => "associative"};
    checks.push(match assoc_failure {
        None => Check::claim("eq-3.3", params, Value::Int((b * b * b * b) as i64), true).note("quadruples checked"),
        Some((idx, lhs, rhs)) => Check::equal("eq-3.3", params, lhs, rhs).note(format!("fails at (m,n,p,s) = {idx:?}")),
    });

    let mut dual_failure = None;
    'dual: for m in 0..b {
        for n in 0..b {
            for p in 0..b {
                let lhs = hecke.constant(m, n, p);
                let rhs = hecke.constant(dec.dual_block(n), dec.dual_block(m), dec.dual_block(p));
                if lhs != rhs {
                    dual_failure = Some(([m, n, p], lhs.clone(), rhs.clone()));
                    break 'dual;
                }
            }
        }
    }
    let params = params! {"D" => dm, "property" => "dual"};
    checks.push(match dual_failure {
        None => Check::claim("eq-3.3", params, Value::Int((b * b * b) as i64), true).note("triples checked"),
        Some((idx, lhs, rhs)) => Check::equal("eq-3.3", params, lhs, rhs).note(format!("fails at (m,n,p) = {idx:?}")),
    });
    Ok(checks)
}

/// Number of cosets against |J_D|.
pub fn check_hecke_dimension(ring: &FusionRing, table: &CharacterTable, dec: &CosetDecomposition) -> Result<Check, CosetError> {
    let jd = support_jd(ring, table, dec.subcategory())?;
    Ok(Check::same(
        "prop-3.4",
        params! {"D" => dec.subcategory().members(), "J_D" => jd},
        Value::from(dec.len()),
        Value::from(jd.len()),
    ))
}

/// Σ_t FPdim(R_t)/d_{X_t}² μ_k(χ_{X_t}) μ_l(χ_{X_t*}) against δ_lk FPdim(C)/dim(C^k).
pub fn orthogonality_first(
    ring: &FusionRing,
    table: &CharacterTable,
    dec: &CosetDecomposition,
    k: usize,
    l: usize,
) -> Result<Check, CosetError> {
    let jd = support_jd(ring, table, dec.subcategory())?;
    for idx in [k, l] {
        if !jd.contains(&idx) {
            return Err(CosetError::IndexNotInJD(idx));
        }
    }
    let dims = ring.exact_dims()?;
    let lhs: CycNum = (0..dec.len())
        .map(|t| {
            let x = dec.rep(t);
            let weight = dec.reg_dim(t) / &(&dims[x] * &dims[x]);
            weight * table.alpha(x, k) * table.alpha(ring.dual(x), l)
        })
        .sum();
    let rhs = if k == l { &ring.global_fpdim()? / &table.class_dims()[k] } else { CycNum::zero() };
    Ok(Check::equal("eq-3.6", params! {"D" => dec.subcategory().members(), "k" => k, "l" => l}, lhs, rhs))
}

/// Σ_{k∈J_D} dim(C^k) μ_k(χ_{X_t}) μ_k(χ_{X_s*}) against δ_st d_{X_t} d_{X_s} FPdim(C)/FPdim(R_t).
pub fn orthogonality_second(
    ring: &FusionRing,
    table: &CharacterTable,
    dec: &CosetDecomposition,
    t: usize,
    s: usize,
) -> Result<Check, CosetError> {
    let jd = support_jd(ring, table, dec.subcategory())?;
    let dims = ring.exact_dims()?;
    let (xt, xs) = (dec.rep(t), dec.rep(s));
    let lhs: CycNum = jd
        .iter()
        .map(|&k| &table.class_dims()[k] * table.alpha(xt, k) * table.alpha(ring.dual(xs), k))
        .sum();
    let rhs = if s == t {
        &dims[xt] * &dims[xs] * ring.global_fpdim()? / dec.reg_dim(t).clone()
    } else {
        CycNum::zero()
    };
    Ok(Check::equal("eq-3.7", params! {"D" => dec.subcategory().members(), "t" => t, "s" => s}, lhs, rhs))
}

/// Both orthogonality relations for every admissible index pair.
pub fn check_orthogonality(ring: &FusionRing, table: &CharacterTable, dec: &CosetDecomposition) -> Result<Vec<Check>, CosetError> {
    let jd = support_jd(ring, table, dec.subcategory())?;
    let mut checks = Vec::new();
    for &k in &jd {
        for &l in &jd {
            checks.push(orthogonality_first(ring, table, dec, k, l)?);
        }
    }
    for t in 0..dec.len() {
        for s in 0..dec.len() {
            checks.push(orthogonality_second(ring, table, dec, t, s)?);
        }
    }
    Ok(checks)
}

/// d_X² FPdim(C)/FPdim(R_t) for every coset t and every X ∈ t.
pub fn integrality_claim_one(ring: &FusionRing, dec: &CosetDecomposition) -> Result<Vec<Check>, CosetError> {
    let dims = ring.exact_dims()?;
    let global = ring.global_fpdim()?;
    let mut checks = Vec::new();
    for t in 0..dec.len() {
        for &x in &dec.blocks()[t] {
            let value = &dims[x] * &dims[x] * global.clone() / dec.reg_dim(t).clone();
            checks.push(Check::integral(
                "cor-3.9",
                params! {"D" => dec.subcategory().members(), "claim" => 1, "t" => t, "X" => x},
                value,
            ));
        }
    }
    Ok(checks)
}

/// Whether D is pointed and no non-unit g ∈ D fixes a simple.
pub fn acts_freely(ring: &FusionRing, d: &Subcategory) -> Result<(), CosetError> {
    let pointed = ring.pointed_part();
    if !d.is_subset_of(&pointed) {
        return Err(CosetError::PreconditionFailed("subcategory is not pointed".into()));
    }
    for &g in d.members().iter().filter(|&&g| g != 0) {
        if let Some(i) = (0..ring.rank()).find(|&i| ring.n(g, i, i) > 0) {
            return Err(CosetError::PreconditionFailed(format!("free-action: {g} fixes {i}")));
        }
    }
    Ok(())
}

/// FPdim(C)/(FPdim(D) dim(C^j)) for j ∈ J_D, under a free pointed action.
pub fn integrality_claim_two(ring: &FusionRing, table: &CharacterTable, d: &Subcategory) -> Result<Vec<Check>, CosetError> {
    acts_freely(ring, d)?;
    let jd = support_jd(ring, table, d)?;
    let denom = ring.subcategory_dim(d)?;
    let global = ring.global_fpdim()?;
    Ok(jd
        .iter()
        .map(|&j| {
            let value = &global / &(&denom * &table.class_dims()[j]);
            Check::integral("cor-3.9", params! {"D" => d.members(), "claim" => 2, "j" => j}, value)
        })
        .collect())
}

/// Maps a partition of a restricted ring back to the ambient indices.
fn lift_partition(members: &[usize], blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().map(|&i| members[i]).collect()).collect();
    for b in &mut out {
        b.sort_unstable();
    }
    out.sort();
    out
}

/// The nonempty A ∩ m, for cosets m of D, against the cosets of A with respect to A ∩ D.
pub fn check_partition_compatibility(ring: &FusionRing, d: &Subcategory, a: &Subcategory) -> Result<Check, CosetError> {
    let dec = coset_partition(ring, d)?;
    let mut intersections: Vec<Vec<usize>> = dec
        .blocks()
        .iter()
        .map(|b| b.iter().copied().filter(|&i| a.contains(i)).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    intersections.sort();

    let restricted = ring.restrict(a);
    let inner = a.intersection(d);
    let local: Vec<usize> = inner.members().iter().map(|&i| a.members().iter().position(|&m| m == i).expect("A ∩ D ⊆ A")).collect();
    let inner_local = Subcategory::new(&restricted, local)?;
    let local_dec = coset_partition(&restricted, &inner_local)?;
    let expected = lift_partition(a.members(), local_dec.blocks());

    Ok(Check::same(
        "lemma-3.12",
        params! {"D" => d.members(), "A" => a.members()},
        Value::partition(&intersections),
        Value::partition(&expected),
    ))
}

/// Whether every block of `fine` lies inside a block of `coarse`.
pub fn refines(fine: &CosetDecomposition, coarse: &CosetDecomposition) -> bool {
    fine.blocks().iter().all(|b| b.iter().all(|&i| coarse.block_of(i) == coarse.block_of(b[0])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::testing::*;
    use crate::fusion::testing::*;

    fn ising_d() -> (FusionRing, Subcategory) {
        let ring = ising();
        let d = Subcategory::new(&ring, [0, 1]).unwrap();
        (ring, d)
    }

    #[test]
    fn ising_cosets() {
        let (ring, d) = ising_d();
        let dec = coset_partition(&ring, &d).unwrap();
        assert_eq!(dec.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(dec.reg_dim(0), &int(2));
        assert_eq!(dec.reg_dim(1), &int(2));
        let vec_dec = coset_partition(&ring, &Subcategory::unit()).unwrap();
        assert_eq!(vec_dec.blocks(), &[vec![0], vec![1], vec![2]]);
        assert!(refines(&vec_dec, &dec));
        assert!(!refines(&dec, &vec_dec));
    }

    #[test]
    fn proportionality() {
        let (ring, d) = ising_d();
        let dec = coset_partition(&ring, &d).unwrap();
        let checks = check_regular_proportionality(&ring, &dec).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
        // [σ]R_D/√2 = √2[σ]
        let t = normalized_translate(&ring, &d, 2).unwrap();
        assert_eq!(t.coeffs(), &[int(0), int(0), sqrt2()]);
    }

    #[test]
    fn ising_hecke() {
        let (ring, d) = ising_d();
        let dec = coset_partition(&ring, &d).unwrap();
        let h = hecke_constants(&ring, &dec).unwrap();
        assert_eq!(h.constant(1, 1, 0), &int(1));
        assert_eq!(h.constant(1, 1, 1), &int(0));
        assert_eq!(h.constant(0, 1, 1), &int(1));
        for n in 0..2 {
            for p in 0..2 {
                assert_eq!(h.constant(0, n, p), &int(i64::from(n == p)));
            }
        }
        assert!(check_hecke(&ring, &dec, &h).unwrap().iter().all(|c| c.pass));
        let whole = coset_partition(&ring, &Subcategory::whole(&ring)).unwrap();
        let hw = hecke_constants(&ring, &whole).unwrap();
        assert_eq!(hw.dim(), 1);
        assert_eq!(hw.constant(0, 0, 0), &int(1));
    }

    #[test]
    fn hecke_dimension_is_jd() {
        let (ring, d) = ising_d();
        let dec = coset_partition(&ring, &d).unwrap();
        assert!(check_hecke_dimension(&ring, &ising_table(), &dec).unwrap().pass);
        let s3 = rep_s3();
        let d = Subcategory::new(&s3, [0, 1]).unwrap();
        let dec = coset_partition(&s3, &d).unwrap();
        assert_eq!(dec.blocks(), &[vec![0, 1], vec![2]]);
        assert!(check_hecke_dimension(&s3, &rep_s3_table(), &dec).unwrap().pass);
    }

    #[test]
    fn orthogonality_examples() {
        let (ring, d) = ising_d();
        let t = ising_table();
        let dec = coset_partition(&ring, &d).unwrap();
        let c = orthogonality_first(&ring, &t, &dec, 0, 0).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, Some(int(4).into()));
        let c = orthogonality_first(&ring, &t, &dec, 0, 1).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, Some(int(0).into()));
        assert_eq!(orthogonality_first(&ring, &t, &dec, 0, 2), Err(CosetError::IndexNotInJD(2)));
        let c = orthogonality_second(&ring, &t, &dec, 1, 1).unwrap();
        assert_eq!((c.lhs.clone(), c.pass), (Some(int(4).into()), true));
        assert!(orthogonality_second(&ring, &t, &dec, 0, 1).unwrap().pass);
        for (ring, table) in [(ising(), ising_table()), (rep_s3(), rep_s3_table()), (fib(), fib_table())] {
            for d in ring.enumerate_subcategories().unwrap() {
                let dec = coset_partition(&ring, &d).unwrap();
                assert!(check_orthogonality(&ring, &table, &dec).unwrap().iter().all(|c| c.pass));
            }
        }
    }

    #[test]
    fn integrality() {
        let (ring, d) = ising_d();
        let dec = coset_partition(&ring, &d).unwrap();
        let claims = integrality_claim_one(&ring, &dec).unwrap();
        assert!(claims.iter().all(|c| c.pass));
        let sigma = claims.iter().find(|c| c.params["X"] == 2).unwrap();
        assert_eq!(sigma.lhs, Some(int(4).into()));
        assert!(matches!(
            integrality_claim_two(&ring, &ising_table(), &d),
            Err(CosetError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn lemma_on_ising() {
        let (ring, d) = ising_d();
        assert!(check_partition_compatibility(&ring, &d, &d).unwrap().pass);
        assert!(check_partition_compatibility(&ring, &d, &Subcategory::unit()).unwrap().pass);
        for d in ring.enumerate_subcategories().unwrap() {
            for a in ring.enumerate_subcategories().unwrap() {
                assert!(check_partition_compatibility(&ring, &d, &a).unwrap().pass);
            }
        }
    }
}
