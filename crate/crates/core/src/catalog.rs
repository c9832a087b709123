//! Built-in categories with exact dimensions, character tables and S-matrices.

use std::f64::consts::PI;

use thiserror::Error;

use crate::chartab::{table_from_smatrix_rows, validate_character_table, CharTabError, CharacterTable};
use crate::exactnum::CycNum;
use crate::fusion::{deligne_product, validate_fusion_ring, FusionError, FusionRing, RawFusionRing, Subcategory};
use crate::premod::{muger_center, validate_smatrix, PremodError, SMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown catalog key {0:?}")]
    UnknownKey(String),
    #[error("closed form for {key} disagrees with its float formula at {at:?}")]
    FloatMismatch { key: String, at: Vec<usize> },
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    CharTab(#[from] CharTabError),
    #[error(transparent)]
    Premod(#[from] PremodError),
}

/// A validated category: fusion ring, character table and optional S-matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub key: String,
    pub ring: FusionRing,
    pub table: CharacterTable,
    pub smatrix: Option<SMatrix>,
    pub provenance: String,
}

impl CatalogEntry {
    /// Validates table and S-matrix against the ring.
    pub fn assemble(
        key: impl Into<String>,
        ring: FusionRing,
        table: Vec<Vec<CycNum>>,
        smatrix: Option<Vec<Vec<CycNum>>>,
        provenance: impl Into<String>,
    ) -> Result<Self, CatalogError> {
        let table = validate_character_table(&ring, table)?;
        let smatrix = smatrix.map(|s| validate_smatrix(&ring, &table, s)).transpose()?;
        Ok(CatalogEntry { key: key.into(), ring, table, smatrix, provenance: provenance.into() })
    }

    /// "modular", "symmetric" or "degenerate", from the Müger center.
    pub fn classification(&self) -> &'static str {
        match self.center() {
            None => "no S-matrix",
            Some(c) if c.is_trivial() => "modular",
            Some(c) if c.len() == self.ring.rank() => "symmetric",
            Some(_) => "degenerate",
        }
    }

    pub fn center(&self) -> Option<Subcategory> {
        self.smatrix.as_ref().map(|s| muger_center(&self.ring, s).expect("validated S-matrix"))
    }
}

/// Keys swept by the test suite and listed by the CLI.
pub fn builtin_keys() -> Vec<&'static str> {
    vec![
        "trivial",
        "svec",
        "pointed-z2-q1",
        "pointed-z3-q1",
        "pointed-z4-q2",
        "ising",
        "fib",
        "su2k-2",
        "su2k-3",
        "su2k-4",
        "su2k-4-even",
        "rep-s3",
        "ising*svec",
        "svec*svec",
        "fib*fib",
        "fib*trivial",
    ]
}

/// Looks up a key; `a*b` keys build Deligne products.
pub fn builtin(key: &str) -> Result<CatalogEntry, CatalogError> {
    let parts: Vec<&str> = key.split('*').collect();
    if parts.len() > 1 {
        let mut acc = single(parts[0])?;
        for p in &parts[1..] {
            acc = product(&acc, &single(p)?)?;
        }
        acc.key = key.to_string();
        return Ok(acc);
    }
    single(key)
}

fn unknown(key: &str) -> CatalogError {
    CatalogError::UnknownKey(key.to_string())
}

fn single(key: &str) -> Result<CatalogEntry, CatalogError> {
    match key {
        "trivial" => pointed(1, 0, "trivial"),
        "svec" => svec(),
        "ising" => ising(),
        "fib" => fibonacci(),
        "rep-s3" => rep_s3(),
        _ => {
            if let Some(rest) = key.strip_prefix("pointed-z") {
                let (n, c) = rest.split_once("-q").ok_or_else(|| unknown(key))?;
                let n: u32 = n.parse().map_err(|_| unknown(key))?;
                let c: u32 = c.parse().map_err(|_| unknown(key))?;
                if n == 0 || n > 16 {
                    return Err(unknown(key));
                }
                return pointed(n, c, key);
            }
            if let Some(rest) = key.strip_prefix("su2k-") {
                let (k, even) = match rest.strip_suffix("-even") {
                    Some(k) => (k, true),
                    None => (rest, false),
                };
                let k: u32 = k.parse().map_err(|_| unknown(key))?;
                if k == 0 || k > 14 {
                    return Err(unknown(key));
                }
                return if even { su2k_even(k, key) } else { su2k(k, key) };
            }
            Err(unknown(key))
        }
    }
}

fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}

fn ring_from(names: &[&str], tensor: Vec<Vec<Vec<u32>>>, dual: Vec<usize>, dims: Vec<CycNum>) -> Result<FusionRing, CatalogError> {
    Ok(validate_fusion_ring(RawFusionRing {
        names: names.iter().map(|s| s.to_string()).collect(),
        tensor,
        dual,
        fpdims: Some(dims),
    })?)
}

/// C(Z_n, q) with q(a) = ζ_{2n}^{c a²} and s_ab = q(a+b)/(q(a) q(b)) = ζ_{2n}^{2cab}.
fn pointed(n: u32, c: u32, key: &str) -> Result<CatalogEntry, CatalogError> {
    let r = n as usize;
    let names: Vec<String> = (0..r).map(|a| if a == 0 { "1".to_string() } else { format!("g{a}") }).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut tensor = vec![vec![vec![0u32; r]; r]; r];
    for a in 0..r {
        for b in 0..r {
            tensor[a][b][(a + b) % r] = 1;
        }
    }
    let dual = (0..r).map(|a| (r - a) % r).collect();
    let ring = ring_from(&names, tensor, dual, vec![int(1); r])?;
    let table = (0..r)
        .map(|a| (0..r).map(|j| CycNum::zeta_power(n, (a * j) as i64)).collect())
        .collect();
    let s = (0..r)
        .map(|a| (0..r).map(|b| CycNum::zeta_power(2 * n, 2 * i64::from(c) * (a * b) as i64)).collect())
        .collect();
    CatalogEntry::assemble(key, ring, table, Some(s), format!("pointed Z_{n}, q(a) = ζ_{}^({c}a²)", 2 * n))
}

fn svec() -> Result<CatalogEntry, CatalogError> {
    let tensor = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
    let ring = ring_from(&["1", "f"], tensor, vec![0, 1], vec![int(1), int(1)])?;
    let table = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
    CatalogEntry::assemble("svec", ring, table, Some(vec![vec![int(1); 2]; 2]), "super vector spaces, S all ones")
}

fn sqrt2() -> CycNum {
    CycNum::zeta_power(8, 1) - CycNum::zeta_power(8, 3)
}

fn golden() -> CycNum {
    int(1) + CycNum::zeta_power(5, 1) + CycNum::zeta_power(5, 4)
}

fn ising() -> Result<CatalogEntry, CatalogError> {
    let mut t = vec![vec![vec![0u32; 3]; 3]; 3];
    for j in 0..3 {
        t[0][j][j] = 1;
        t[j][0][j] = 1;
    }
    t[1][1][0] = 1;
    t[1][2][2] = 1;
    t[2][1][2] = 1;
    t[2][2][0] = 1;
    t[2][2][1] = 1;
    let s2 = sqrt2();
    let ring = ring_from(&["1", "ε", "σ"], t, vec![0, 1, 2], vec![int(1), int(1), s2.clone()])?;
    let s = vec![
        vec![int(1), int(1), s2.clone()],
        vec![int(1), int(1), -s2.clone()],
        vec![s2.clone(), -s2, int(0)],
    ];
    let table = table_from_smatrix_rows(ring.exact_dims()?, &s);
    CatalogEntry::assemble("ising", ring, table, Some(s), "Ising, d_σ = ζ_8 - ζ_8³")
}

fn fibonacci() -> Result<CatalogEntry, CatalogError> {
    let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]];
    let phi = golden();
    let ring = ring_from(&["1", "τ"], t, vec![0, 1], vec![int(1), phi.clone()])?;
    let s = vec![vec![int(1), phi.clone()], vec![phi, int(-1)]];
    let table = table_from_smatrix_rows(ring.exact_dims()?, &s);
    CatalogEntry::assemble("fib", ring, table, Some(s), "Fibonacci, φ = 1 + ζ_5 + ζ_5⁴")
}

fn rep_s3() -> Result<CatalogEntry, CatalogError> {
    let mut t = vec![vec![vec![0u32; 3]; 3]; 3];
    for j in 0..3 {
        t[0][j][j] = 1;
        t[j][0][j] = 1;
    }
    t[1][1][0] = 1;
    t[1][2][2] = 1;
    t[2][1][2] = 1;
    t[2][2] = vec![1, 1, 1];
    let dims = vec![int(1), int(1), int(2)];
    let ring = ring_from(&["1", "sgn", "V"], t, vec![0, 1, 2], dims.clone())?;
    let table = vec![vec![int(1), int(1), int(1)], vec![int(1), int(-1), int(1)], vec![int(2), int(0), int(-1)]];
    let s = dims.iter().map(|a| dims.iter().map(|b| a * b).collect()).collect();
    CatalogEntry::assemble("rep-s3", ring, table, Some(s), "Rep(S_3), symmetric, s = d dᵀ")
}

/// Truncated Clebsch–Gordan rule for SU(2)_k.
pub fn su2k_fusion(k: usize) -> Vec<Vec<Vec<u32>>> {
    let r = k + 1;
    let mut t = vec![vec![vec![0u32; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let lo = i.abs_diff(j);
            let hi = (i + j).min(2 * k - i - j);
            for l in (lo..=hi).step_by(2) {
                t[i][j][l] = 1;
            }
        }
    }
    t
}

/// (ζ^m - ζ^{-m}) / (ζ - ζ^{-1}) with ζ = ζ_{4(k+2)}², i.e. sin(mπ/(k+2))/sin(π/(k+2)).
fn quantum_integer(k: u32, m: i64) -> CycNum {
    let n = 4 * (k + 2);
    let num = CycNum::zeta_power(n, 2 * m) - CycNum::zeta_power(n, -2 * m);
    let den = CycNum::zeta_power(n, 2) - CycNum::zeta_power(n, -2);
    &num / &den
}

fn su2k_data(k: u32, key: &str) -> Result<(Vec<CycNum>, Vec<Vec<CycNum>>), CatalogError> {
    let r = k as usize + 1;
    let dims: Vec<CycNum> = (0..r).map(|i| quantum_integer(k, i as i64 + 1)).collect();
    let s: Vec<Vec<CycNum>> = (0..r)
        .map(|i| (0..r).map(|j| quantum_integer(k, ((i + 1) * (j + 1)) as i64)).collect())
        .collect();
    let angle = PI / f64::from(k + 2);
    for i in 0..r {
        for j in 0..r {
            let expected = (((i + 1) * (j + 1)) as f64 * angle).sin() / angle.sin();
            let z = s[i][j].embed_complex();
            if (z.re - expected).abs() > 1e-9 || z.im.abs() > 1e-9 {
                return Err(CatalogError::FloatMismatch { key: key.to_string(), at: vec![i, j] });
            }
        }
    }
    Ok((dims, s))
}

fn su2k(k: u32, key: &str) -> Result<CatalogEntry, CatalogError> {
    let (dims, s) = su2k_data(k, key)?;
    let r = dims.len();
    let names: Vec<String> = (0..r).map(|i| format!("X{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = ring_from(&names, su2k_fusion(k as usize), (0..r).collect(), dims)?;
    let table = table_from_smatrix_rows(ring.exact_dims()?, &s);
    CatalogEntry::assemble(key, ring, table, Some(s), format!("SU(2)_{k}, entries in Q(ζ_{})", 4 * (k + 2)))
}

/// The subcategory of even labels of SU(2)_k with the restricted S-matrix.
fn su2k_even(k: u32, key: &str) -> Result<CatalogEntry, CatalogError> {
    let (dims, s) = su2k_data(k, key)?;
    let r = dims.len();
    let names: Vec<String> = (0..r).map(|i| format!("X{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let full = ring_from(&names, su2k_fusion(k as usize), (0..r).collect(), dims)?;
    let even: Vec<usize> = (0..r).step_by(2).collect();
    let sub = Subcategory::new(&full, even.iter().copied())?;
    let ring = full.restrict(&sub);
    // μ_j restricted to even labels; μ_j and μ_{k-j} coincide there.
    let table = even
        .iter()
        .map(|&i| (0..=(k as usize) / 2).map(|j| &s[i][j] / &s[0][j]).collect())
        .collect();
    let s_even = even.iter().map(|&i| even.iter().map(|&j| s[i][j].clone()).collect()).collect();
    CatalogEntry::assemble(key, ring, table, Some(s_even), format!("even part of SU(2)_{k}"))
}

fn kronecker(a: &[Vec<CycNum>], b: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a[0].len(), b[0].len());
    (0..ra * rb)
        .map(|row| (0..ca * cb).map(|col| &a[row / rb][col / cb] * &b[row % rb][col % cb]).collect())
        .collect()
}

/// Deligne product of two entries; tables and S-matrices multiply on pairs.
pub fn product(a: &CatalogEntry, b: &CatalogEntry) -> Result<CatalogEntry, CatalogError> {
    let ring = deligne_product(&a.ring, &b.ring)?;
    let table = kronecker(a.table.matrix(), b.table.matrix());
    let s = match (&a.smatrix, &b.smatrix) {
        (Some(x), Some(y)) => Some(kronecker(x.matrix(), y.matrix())),
        _ => None,
    };
    CatalogEntry::assemble(format!("{}*{}", a.key, b.key), ring, table, s, format!("{} ⊠ {}", a.provenance, b.provenance))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Verlinde formula in floating point with the unitary S-matrix.
    fn verlinde(k: usize) -> Vec<Vec<Vec<u32>>> {
        let r = k + 1;
        let norm = (2.0 / (k as f64 + 2.0)).sqrt();
        let s = |i: usize, j: usize| norm * (((i + 1) * (j + 1)) as f64 * PI / (k as f64 + 2.0)).sin();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        (0..r)
                            .map(|l| {
                                let v: f64 = (0..r).map(|m| s(i, m) * s(j, m) * s(l, m) / s(0, m)).sum();
                                let n = v.round();
                                assert!((v - n).abs() < 1e-9);
                                n as u32
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn su2k_rule_matches_verlinde() {
        for k in 1..=8 {
            assert_eq!(su2k_fusion(k), verlinde(k), "k = {k}");
        }
    }

    #[test]
    fn every_key_loads() {
        for key in builtin_keys() {
            let e = builtin(key).unwrap_or_else(|err| panic!("{key}: {err}"));
            assert_eq!(e.key, key);
        }
        assert_eq!(builtin("nope"), Err(CatalogError::UnknownKey("nope".into())));
        assert!(builtin("su2k-0").is_err());
    }

    #[test]
    fn su2k_4_dimensions() {
        let e = builtin("su2k-4").unwrap();
        let d: Vec<f64> = e.ring.fpdims().unwrap().iter().map(|x| x.embed_complex().re).collect();
        let s3 = 3f64.sqrt();
        for (x, y) in d.iter().zip([1.0, s3, 2.0, s3, 1.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert_eq!(e.ring.global_fpdim().unwrap(), int(12));
        assert_eq!(e.ring.conductor(), 24);
        assert_eq!(e.classification(), "modular");
    }

    #[test]
    fn even_part_of_su2k_4() {
        let e = builtin("su2k-4-even").unwrap();
        assert_eq!(e.ring.rank(), 3);
        assert_eq!(e.center().unwrap().members(), &[0, 2]);
        assert_eq!(e.ring.global_fpdim().unwrap(), int(6));
    }

    #[test]
    fn centers_and_classes() {
        assert_eq!(builtin("svec").unwrap().classification(), "symmetric");
        assert_eq!(builtin("ising").unwrap().classification(), "modular");
        assert_eq!(builtin("rep-s3").unwrap().classification(), "symmetric");
        let p = builtin("ising*svec").unwrap();
        assert_eq!(p.ring.rank(), 6);
        assert_eq!(p.center().unwrap().members(), &[0, 1]);
        let ss = builtin("svec*svec").unwrap();
        assert_eq!(ss.center().unwrap().len(), 4);
        let ft = builtin("fib*trivial").unwrap();
        assert_eq!(ft.ring.tensor_nested(), builtin("fib").unwrap().ring.tensor_nested());
        assert_eq!(builtin("pointed-z4-q2").unwrap().center().unwrap().members(), &[0, 2]);
        assert_eq!(builtin("pointed-z3-q1").unwrap().classification(), "modular");
    }

    #[test]
    fn pointed_bilinearity() {
        for key in ["pointed-z2-q1", "pointed-z3-q1", "pointed-z4-q2", "pointed-z5-q3"] {
            let e = builtin(key).unwrap();
            let s = e.smatrix.as_ref().unwrap();
            let r = e.ring.rank();
            for a in 0..r {
                for b in 0..r {
                    for c in 0..r {
                        assert_eq!(*s.entry((a + b) % r, c), s.entry(a, c) * s.entry(b, c), "{key}");
                    }
                }
            }
        }
    }
}
