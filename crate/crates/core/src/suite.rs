//! The full verification suite over a target and a set of subcategories.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::chartab::{
    characters_numeric, check_class_dims_over_jd, check_second_orthogonality, numeric_deviation, CharacterTable,
};
use crate::cosets::{
    check_hecke, check_hecke_dimension, check_orthogonality, check_regular_proportionality, coset_partition,
    hecke_constants, integrality_claim_one, integrality_claim_two, check_partition_compatibility, CosetError,
};
use crate::fusion::{FusionRing, Subcategory};
use crate::params;
use crate::premod::{
    check_squarefree_forces_pointed, check_f_q_multiplicative, check_fiber_dims, check_m_map, coset_dim_formulas, m_map, divisibility_off_center,
    divisibility_pointed_center, check_fibers_are_center_cosets, check_central_class_sums, PremodError, SMatrix,
};
use crate::report::{Check, VerificationReport};
use crate::schema::Target;

/// Which subcategories the D-dependent checks run over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubcategorySelection {
    /// Vec and C.
    Default,
    All,
    Given(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub subcategories: SubcategorySelection,
    /// Id prefixes to keep; `None` keeps everything.
    pub checks: Option<Vec<String>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { subcategories: SubcategorySelection::Default, checks: None }
    }
}

impl SuiteOptions {
    fn wants(&self, ids: &[&str]) -> bool {
        match &self.checks {
            None => true,
            Some(prefixes) => ids.iter().any(|id| prefixes.iter().any(|p| id.starts_with(p.as_str()))),
        }
    }

    fn keeps(&self, id: &str) -> bool {
        self.wants(&[id])
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error(transparent)]
    Fusion(#[from] crate::fusion::FusionError),
}

/// Resolves the subcategory selection against the ring.
pub fn select_subcategories(ring: &FusionRing, sel: &SubcategorySelection) -> Result<Vec<Subcategory>, SuiteError> {
    let mut out = match sel {
        SubcategorySelection::Default => vec![Subcategory::unit(), Subcategory::whole(ring)],
        SubcategorySelection::All => ring.enumerate_subcategories()?,
        SubcategorySelection::Given(list) => {
            list.iter().map(|m| Subcategory::new(ring, m.iter().copied())).collect::<Result<_, _>>()?
        }
    };
    out.dedup();
    Ok(out)
}

/// Turns an error from a check routine into a failing check.
fn or_fail<E: std::fmt::Display>(id: &str, params: serde_json::Map<String, serde_json::Value>, r: Result<Vec<Check>, E>) -> Vec<Check> {
    r.unwrap_or_else(|e| vec![Check::with(id, params, None, None, false).note(e.to_string())])
}

fn skip_all(ids: &[&str], params: &serde_json::Map<String, serde_json::Value>, reason: &str) -> Vec<Check> {
    ids.iter().map(|id| Check::skipped(id, params.clone(), reason)).collect()
}

const TABLE_IDS: &[&str] = &["eq-2.4"];
const GLOBAL_S_IDS: &[&str] = &["eq-4.1", "eq-4.3", "thm-4.6", "thm-4.10", "eq-4.20"];
const POINTED_CENTER_IDS: &[&str] = &["thm-1.3", "eq-4.23", "eq-4.24", "rem-4.25", "thm-1.3-item2"];
const SUB_TABLE_IDS: &[&str] = &["eq-2.7", "prop-3.4", "eq-3.6", "eq-3.7", "cor-3.9"];
const SUB_RING_IDS: &[&str] = &["eq-3.1", "eq-3.2", "eq-3.3"];
const SUB_S_IDS: &[&str] = &["prop-4.12", "eq-4.15", "cor-4.16", "eq-4.22", "prop-4.21", "cor-4.18", "thm-1.1"];

fn global_checks(target: &Target, opts: &SuiteOptions) -> Vec<Check> {
    let ring = &target.ring;
    let mut out = Vec::new();
    let none = params! {};
    let Some(table) = &target.table else {
        let mut ids = TABLE_IDS.to_vec();
        ids.extend_from_slice(GLOBAL_S_IDS);
        ids.extend_from_slice(POINTED_CENTER_IDS);
        return skip_all(&ids, &none, "no exact character table");
    };
    if opts.wants(TABLE_IDS) {
        out.extend(or_fail("eq-2.4", none.clone(), check_second_orthogonality(ring, table)));
    }
    let Some(s) = &target.smatrix else {
        let mut ids = GLOBAL_S_IDS.to_vec();
        ids.extend_from_slice(POINTED_CENTER_IDS);
        out.extend(skip_all(&ids, &none, "no S-matrix"));
        return out;
    };
    if opts.wants(&["eq-4.1"]) {
        out.extend(or_fail("eq-4.1", none.clone(), check_f_q_multiplicative(ring, s)));
    }
    if opts.wants(&["eq-4.3"]) {
        out.extend(or_fail("eq-4.3", none.clone(), check_m_map(ring, table, s)));
    }
    if opts.wants(&["thm-4.6"]) {
        out.extend(or_fail("thm-4.6", none.clone(), check_central_class_sums(ring, table, s)));
    }
    if opts.wants(&["thm-4.10"]) {
        out.extend(or_fail("thm-4.10", none.clone(), check_fibers_are_center_cosets(ring, table, s)));
    }
    if opts.wants(&["eq-4.20"]) {
        out.extend(or_fail("eq-4.20", none.clone(), check_fiber_dims(ring, table, s)));
    }
    if opts.wants(POINTED_CENTER_IDS) {
        match divisibility_pointed_center(ring, table, s) {
            Ok(checks) => out.extend(checks),
            Err(PremodError::PreconditionFailed(reason)) => out.extend(skip_all(POINTED_CENTER_IDS, &none, &reason)),
            Err(e) => out.push(Check::with("thm-1.3", none.clone(), None, None, false).note(e.to_string())),
        }
    }
    out
}

fn subcategory_checks(target: &Target, d: &Subcategory, all: &[Subcategory], opts: &SuiteOptions) -> Vec<Check> {
    let ring = &target.ring;
    let dp = params! {"D" => d.members()};
    let mut out = Vec::new();

    if opts.wants(SUB_RING_IDS) || opts.wants(SUB_TABLE_IDS) {
        match coset_partition(ring, d) {
            Err(e) => out.push(Check::with("eq-3.1", dp.clone(), None, None, false).note(e.to_string())),
            Ok(dec) => {
                if opts.wants(&["eq-3.1", "eq-3.2"]) {
                    out.extend(or_fail("eq-3.1", dp.clone(), check_regular_proportionality(ring, &dec)));
                }
                if opts.wants(&["eq-3.3"]) {
                    let h = hecke_constants(ring, &dec).and_then(|h| check_hecke(ring, &dec, &h));
                    out.extend(or_fail("eq-3.3", dp.clone(), h));
                }
                if opts.wants(&["cor-3.9"]) {
                    out.extend(or_fail("cor-3.9", dp.clone(), integrality_claim_one(ring, &dec)));
                }
                match &target.table {
                    None => out.extend(skip_all(SUB_TABLE_IDS, &dp, "no exact character table")),
                    Some(table) => out.extend(table_checks(ring, table, d, &dec, opts)),
                }
            }
        }
    }

    if opts.wants(&["lemma-3.12"]) {
        for a in all {
            let c = check_partition_compatibility(ring, d, a).map(|c| vec![c]);
            out.extend(or_fail("lemma-3.12", params! {"D" => d.members(), "A" => a.members()}, c));
        }
    }

    if opts.wants(SUB_S_IDS) {
        match (&target.table, &target.smatrix) {
            (Some(table), Some(s)) => out.extend(s_checks(ring, table, s, d)),
            _ => out.extend(skip_all(SUB_S_IDS, &dp, "no S-matrix")),
        }
    }
    out
}

fn table_checks(
    ring: &FusionRing,
    table: &CharacterTable,
    d: &Subcategory,
    dec: &crate::cosets::CosetDecomposition,
    opts: &SuiteOptions,
) -> Vec<Check> {
    let dp = params! {"D" => d.members()};
    let mut out = Vec::new();
    if opts.wants(&["eq-2.7"]) {
        out.extend(or_fail("eq-2.7", dp.clone(), check_class_dims_over_jd(ring, table, d).map(|c| vec![c])));
    }
    if opts.wants(&["prop-3.4"]) {
        out.extend(or_fail("prop-3.4", dp.clone(), check_hecke_dimension(ring, table, dec).map(|c| vec![c])));
    }
    if opts.wants(&["eq-3.6", "eq-3.7"]) {
        out.extend(or_fail("eq-3.6", dp.clone(), check_orthogonality(ring, table, dec)));
    }
    if opts.wants(&["cor-3.9"]) {
        let p = params! {"D" => d.members(), "claim" => 2};
        match integrality_claim_two(ring, table, d) {
            Ok(checks) => out.extend(checks),
            Err(CosetError::PreconditionFailed(reason)) => out.push(Check::skipped("cor-3.9", p, reason)),
            Err(e) => out.push(Check::with("cor-3.9", p, None, None, false).note(e.to_string())),
        }
    }
    out
}

fn s_checks(ring: &FusionRing, table: &CharacterTable, s: &SMatrix, d: &Subcategory) -> Vec<Check> {
    let dp = params! {"D" => d.members()};
    let mut out = or_fail("prop-4.12", dp.clone(), coset_dim_formulas(ring, table, s, d));
    out.extend(or_fail("cor-4.18", dp.clone(), check_squarefree_forces_pointed(ring, s, d).map(|c| vec![c])));
    match divisibility_off_center(ring, table, s, d) {
        Ok(checks) => out.extend(checks),
        Err(PremodError::PreconditionFailed(reason)) => out.push(Check::skipped("thm-1.1", dp, reason)),
        Err(e) => out.push(Check::with("thm-1.1", dp, None, None, false).note(e.to_string())),
    }
    out
}

/// Runs the suite; per-subcategory work is parallel, output order is fixed.
pub fn run_suite(target: &Target, opts: &SuiteOptions) -> Result<VerificationReport, SuiteError> {
    let mut checks = Vec::new();
    if target.ring.fpdims().is_none() {
        let reason = "no exact Frobenius-Perron dimensions";
        let ids = crate::report::CHECK_IDS.iter().copied().filter(|id| opts.keeps(id)).collect::<Vec<_>>();
        checks.extend(skip_all(&ids, &params! {}, reason));
        return Ok(VerificationReport::new(target.name.clone(), checks));
    }
    let subs = select_subcategories(&target.ring, &opts.subcategories)?;
    checks.extend(global_checks(target, opts));
    let per_sub: Vec<Vec<Check>> = subs.par_iter().map(|d| subcategory_checks(target, d, &subs, opts)).collect();
    checks.extend(per_sub.into_iter().flatten());
    checks.retain(|c| opts.keeps(&c.id));
    Ok(VerificationReport::new(target.name.clone(), checks))
}

fn block_letter(t: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if t < letters.len() {
        (letters[t] as char).to_string()
    } else {
        format!("b{t}")
    }
}

fn sets(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Markdown summary of cosets, Hecke constants, M-fibers, class dimensions
/// and integrality values.
pub fn render_report(target: &Target, subs: &[Subcategory], seed: u64) -> String {
    let ring = &target.ring;
    let mut out = String::new();
    let _ = writeln!(out, "# {}\n", target.name);
    let _ = writeln!(out, "rank {}, simples: {}", ring.rank(), ring.names().join(", "));
    if let Some(dims) = ring.fpdims() {
        let rendered: Vec<String> = dims.iter().map(|d| format!("{d} ≈ {}", d.approx_string())).collect();
        let _ = writeln!(out, "FP dimensions: {}", rendered.join("; "));
        if let Ok(g) = ring.global_fpdim() {
            let _ = writeln!(out, "FPdim(C) = {g} ≈ {}", g.approx_string());
        }
    } else {
        let rendered: Vec<String> = ring.fpdims_float().iter().map(|d| format!("{d:.6}")).collect();
        let _ = writeln!(out, "FP dimensions (numeric only): {}", rendered.join("; "));
        return out;
    }
    if let Some(twists) = &target.twists {
        let _ = writeln!(out, "twists supplied ({}), not used by any check", twists.len());
    }

    if let Some(table) = &target.table {
        let _ = writeln!(out, "\n## Characters\n");
        let _ = writeln!(out, "| column | codegree | class dim |\n|---|---|---|");
        for j in 0..table.rank() {
            let fp = if j == table.fp_column() { " (FP)" } else { "" };
            let _ = writeln!(out, "| {j}{fp} | {} | {} |", table.codegrees()[j], table.class_dims()[j]);
        }
        match characters_numeric(ring, seed).map(|n| numeric_deviation(&n, table)) {
            Ok(Some(dev)) => {
                let _ = writeln!(out, "\nnumeric characters (seed {seed}) agree within {dev:.1e}");
            }
            Ok(None) => {
                let _ = writeln!(out, "\nnumeric characters (seed {seed}) do not match the exact table");
            }
            Err(e) => {
                let _ = writeln!(out, "\nnumeric characters (seed {seed}) unavailable: {e}");
            }
        }
    }

    if let Some(s) = &target.smatrix {
        if let Ok(a) = m_map(ring, s) {
            let _ = writeln!(out, "\n## Müger center and M-map\n");
            let _ = writeln!(out, "center: {}", a.center);
            let _ = writeln!(out, "M: {:?}", a.m);
            let _ = writeln!(out, "fibers: {}", sets(&a.fibers));
            if let Ok(dec) = coset_partition(ring, &a.center) {
                let _ = writeln!(out, "cosets wrt center: {}", sets(dec.blocks()));
            }
            let stabs: Vec<String> = a.stabilizers.iter().enumerate().map(|(y, g)| format!("G_{y} = {g:?}")).collect();
            let _ = writeln!(out, "stabilizers: {}", stabs.join(", "));
        }
    }

    for d in subs {
        let Ok(dec) = coset_partition(ring, d) else { continue };
        let _ = writeln!(out, "\n## D = {d}\n");
        let labelled: Vec<String> = (0..dec.len()).map(|t| format!("{} = {}", block_letter(t), sets(&dec.blocks()[t..=t]))).collect();
        let _ = writeln!(out, "cosets: {}", labelled.join(", "));
        let reg: Vec<String> = (0..dec.len()).map(|t| format!("FPdim(R_{}) = {}", block_letter(t), dec.reg_dim(t))).collect();
        let _ = writeln!(out, "{}", reg.join(", "));
        if let Ok(h) = hecke_constants(ring, &dec) {
            let _ = writeln!(out, "Hecke constants (nonzero):");
            for m in 0..h.dim() {
                for n in 0..h.dim() {
                    for p in 0..h.dim() {
                        let c = h.constant(m, n, p);
                        if !num::Zero::is_zero(c) {
                            let integral = if c.is_algebraic_integer() { "" } else { " (not integral)" };
                            let _ = writeln!(
                                out,
                                "- H_{{{}{}}}^{} = {c}{integral}",
                                block_letter(m),
                                block_letter(n),
                                block_letter(p)
                            );
                        }
                    }
                }
            }
        }
        if let Ok(claims) = integrality_claim_one(ring, &dec) {
            let vals: Vec<String> = claims
                .iter()
                .filter_map(|c| c.lhs.as_ref().map(|v| format!("X{} → {} ({})", c.params["X"], v.render(), if c.pass { "integral" } else { "NOT integral" })))
                .collect();
            let _ = writeln!(out, "d_X² FPdim(C)/FPdim(R_t): {}", vals.join("; "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn ising_full_suite_passes() {
        let target = Target::from(builtin("ising").unwrap());
        let opts = SuiteOptions { subcategories: SubcategorySelection::All, checks: None };
        let report = run_suite(&target, &opts).unwrap();
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(report.checks_with_id("thm-1.3").all(|c| !c.is_skipped()));
    }

    #[test]
    fn rep_s3_skips_pointed_center_checks() {
        let target = Target::from(builtin("rep-s3").unwrap());
        let report = run_suite(&target, &SuiteOptions::default()).unwrap();
        assert!(report.all_passed());
        assert!(report.checks_with_id("thm-1.3").all(|c| c.is_skipped()));
    }

    #[test]
    fn filter_by_prefix() {
        let target = Target::from(builtin("ising*svec").unwrap());
        let opts = SuiteOptions { subcategories: SubcategorySelection::Default, checks: Some(vec!["thm-1.3".into()]) };
        let report = run_suite(&target, &opts).unwrap();
        assert!(report.checks.iter().all(|c| c.id.starts_with("thm-1.3")));
        assert!(report.checks_with_id("thm-1.3-item2").any(|c| c.pass && !c.is_skipped()));
    }

    #[test]
    fn report_lines() {
        let target = Target::from(builtin("ising").unwrap());
        let subs = select_subcategories(&target.ring, &SubcategorySelection::All).unwrap();
        let text = render_report(&target, &subs, 0);
        assert!(text.contains("numeric characters (seed 0) agree"), "{text}");
        assert!(text.contains("H_{bb}^a = 1"), "{text}");
        assert!(text.contains("cosets wrt center: {0} {1} {2}"));
    }
}
