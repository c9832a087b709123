//! Check records and verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value as Json};

use crate::exactnum::CycNum;

/// An exact number serialized together with a decimal rendering.
///
/// The decimal is advisory and ignored when reading back.
#[derive(Debug, Clone, PartialEq)]
pub struct Exact(pub CycNum);

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            #[serde(flatten)]
            num: &'a CycNum,
            approx: String,
        }
        Wire { num: &self.0, approx: self.0.approx_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CycNum::deserialize(d).map(Exact)
    }
}

/// A value appearing on either side of a check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Num(Exact),
    Indices(Vec<usize>),
    Nums(Vec<Exact>),
    Partition(Vec<Vec<usize>>),
    Matrix(Vec<Vec<Exact>>),
    Text(String),
}

impl From<CycNum> for Value {
    fn from(c: CycNum) -> Self {
        Value::Num(Exact(c))
    }
}

impl From<&CycNum> for Value {
    fn from(c: &CycNum) -> Self {
        Value::Num(Exact(c.clone()))
    }
}

impl From<Vec<CycNum>> for Value {
    fn from(v: Vec<CycNum>) -> Self {
        Value::Nums(v.into_iter().map(Exact).collect())
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl Value {
    pub fn nums(v: &[CycNum]) -> Self {
        Value::Nums(v.iter().cloned().map(Exact).collect())
    }

    pub fn partition(blocks: &[Vec<usize>]) -> Self {
        Value::Partition(blocks.to_vec())
    }

    /// One-line human rendering.
    pub fn render(&self) -> String {
        let sets = |v: &[Vec<usize>]| {
            v.iter()
                .map(|b| format!("{{{}}}", b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(n) => n.to_string(),
            Value::Num(Exact(c)) => format!("{c} ≈ {}", c.approx_string()),
            Value::Indices(v) => format!("{v:?}"),
            Value::Nums(v) => format!("[{}]", v.iter().map(|e| e.0.to_string()).collect::<Vec<_>>().join(", ")),
            Value::Partition(p) => sets(p),
            Value::Matrix(m) => format!("{}x{} matrix", m.len(), m.first().map_or(0, Vec::len)),
            Value::Text(t) => t.clone(),
        }
    }
}

/// The outcome of one identity or claim, evaluated on concrete data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    #[serde(default)]
    pub params: Map<String, Json>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Builds a parameter map from `key => value` pairs.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = serde_json::Map::new();
        $( m.insert(String::from($k), serde_json::json!($v)); )*
        m
    }};
}

impl Check {
    /// Exact equality of two numbers.
    pub fn equal(id: &str, params: Map<String, Json>, lhs: CycNum, rhs: CycNum) -> Self {
        let pass = lhs == rhs;
        Check::with(id, params, Some(lhs.into()), Some(rhs.into()), pass)
    }

    /// Equality of two arbitrary values.
    pub fn same(id: &str, params: Map<String, Json>, lhs: Value, rhs: Value) -> Self {
        let pass = lhs == rhs;
        Check::with(id, params, Some(lhs), Some(rhs), pass)
    }

    /// A claim about a single value, such as membership in the algebraic integers.
    pub fn claim(id: &str, params: Map<String, Json>, value: Value, pass: bool) -> Self {
        Check::with(id, params, Some(value), None, pass)
    }

    /// A number claimed to be an algebraic integer.
    pub fn integral(id: &str, params: Map<String, Json>, value: CycNum) -> Self {
        let pass = value.is_algebraic_integer();
        Check::claim(id, params, value.into(), pass)
    }

    pub fn skipped(id: &str, params: Map<String, Json>, reason: impl Into<String>) -> Self {
        Check {
            id: id.to_string(),
            params,
            lhs: None,
            rhs: None,
            pass: true,
            skipped_reason: Some(reason.into()),
            note: None,
        }
    }

    pub fn with(id: &str, params: Map<String, Json>, lhs: Option<Value>, rhs: Option<Value>, pass: bool) -> Self {
        Check { id: id.to_string(), params, lhs, rhs, pass, skipped_reason: None, note: None }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped_reason.is_some()
    }

    pub fn failed(&self) -> bool {
        !self.pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub legend: BTreeMap<String, String>,
}

impl VerificationReport {
    /// Sorts checks by id (stable, so parameter order within an id is kept)
    /// and fills in the summary and legend.
    pub fn new(target: impl Into<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            if c.is_skipped() {
                summary.skipped += 1;
            } else if c.pass {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
        }
        let legend = checks
            .iter()
            .map(|c| (c.id.clone(), describe(&c.id).to_string()))
            .collect();
        VerificationReport { target: target.into(), checks, summary, legend }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn checks_with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id == id)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# Verification of `{}`\n\n", self.target);
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} skipped\n\n",
            self.summary.total, self.summary.passed, self.summary.failed, self.summary.skipped
        ));
        out.push_str("| check | params | lhs | rhs | verdict |\n|---|---|---|---|---|\n");
        for c in &self.checks {
            let verdict = match (&c.skipped_reason, c.pass) {
                (Some(r), _) => format!("skipped: {r}"),
                (None, true) => "pass".into(),
                (None, false) => "FAIL".into(),
            };
            let cell = |v: &Option<Value>| v.as_ref().map_or_else(String::new, Value::render);
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                c.id,
                Json::Object(c.params.clone()),
                cell(&c.lhs),
                cell(&c.rhs),
                verdict
            ));
        }
        out.push_str("\n## Legend\n\n");
        for (id, text) in &self.legend {
            out.push_str(&format!("- `{id}`: {text}\n"));
        }
        out
    }
}

/// Every check id the suite can emit.
pub const CHECK_IDS: &[&str] = &[
    "eq-2.4",
    "eq-2.7",
    "eq-3.1",
    "eq-3.2",
    "eq-3.3",
    "prop-3.4",
    "eq-3.6",
    "eq-3.7",
    "cor-3.9",
    "lemma-3.12",
    "eq-4.1",
    "eq-4.3",
    "thm-4.6",
    "thm-4.10",
    "prop-4.12",
    "eq-4.15",
    "cor-4.16",
    "cor-4.18",
    "eq-4.20",
    "prop-4.21",
    "eq-4.22",
    "eq-4.23",
    "eq-4.24",
    "thm-1.1",
    "thm-1.3",
    "thm-1.3-item2",
    "rem-4.25",
];

/// What each check id verifies.
pub fn describe(id: &str) -> &'static str {
    match id {
        "eq-2.4" => "second orthogonality of characters: Σ_i μ_l(χ_i) μ_k(χ_i*) = δ_lk FPdim(C)/dim(C^k)",
        "eq-2.7" => "Σ_{j∈J_D} dim(C^j) = FPdim(C)/FPdim(D)",
        "eq-3.1" => "[X]R_D/d_X = [Y]R_D/d_Y exactly when X and Y lie in the same right coset",
        "eq-3.2" => "[X]R_D/d_X = FPdim(D) R_t/FPdim(R_t) for X in coset t",
        "eq-3.3" => "Hecke structure constants: well defined, rows sum to 1, commutative, associative, dual-compatible",
        "prop-3.4" => "number of right cosets equals |J_D|",
        "eq-3.6" => "first coset orthogonality over cosets for k, l in J_D",
        "eq-3.7" => "second coset orthogonality over k in J_D",
        "cor-3.9" => "FPdim(X_t)² FPdim(C)/FPdim(R_t) and, for free pointed actions, FPdim(C)/(FPdim(D) dim(C^j)) are algebraic integers",
        "lemma-3.12" => "nonempty intersections of A with cosets of D are the cosets of A with respect to A ∩ D",
        "eq-4.1" => "f_Q is multiplicative on products of basis characters",
        "eq-4.3" => "α_{i,M(i')}/d_i = s_{ii'}/(d_i d_i') and f_Q(χ_i) = Σ α_{i,M(i')} E_i'",
        "thm-4.6" => "f_Q(χ_i) = d_i/dim(C^{M(i)}) C_{M(i)}",
        "thm-4.10" => "cosets with respect to the Müger center are the fibers of M, and their number is |J_2| = |J_Z2|",
        "prop-4.12" => "J_D' = M(Irr(D)) and dim R(D)_j = dim(D ∩ C') dim(C^j)",
        "eq-4.15" => "dim(D) dim(D') = dim(C) dim(D ∩ C')",
        "cor-4.16" => "dim(C) dim(C' ∩ D)/dim(R(D)_j) is an algebraic integer",
        "cor-4.18" => "integral, squarefree dimension and D ∩ Z_2(C) = Vec imply D pointed",
        "eq-4.20" => "dim(R_j) = dim(C') dim(C^j) on the fibers of M",
        "prop-4.21" => "nonempty R(D)_j are the cosets of D with respect to D ∩ C'",
        "eq-4.22" => "Σ_{j∈J_D'} dim(C^j) = FPdim(C)/FPdim(D'), and Σ dim R(D)_j = FPdim(D)",
        "eq-4.23" => "dim(C^{M(Y)}) = FPdim(Y)²/|G_Y| for a pointed Müger center",
        "eq-4.24" => "FPdim(C)|G_Y|/FPdim(Y)² is an algebraic integer",
        "thm-1.1" => "D ∩ Z_2(C) = Vec implies FPdim(C)/FPdim(Y)² is an algebraic integer for Y in D",
        "thm-1.3" => "FPdim(C) FPdim(Z_2(C))/FPdim(Y)² is an algebraic integer when Z_2(C) is pointed",
        "thm-1.3-item2" => "FPdim(C)/(FPdim(Z_2(C)) FPdim(Y)²) is an algebraic integer when Z_2(C) acts freely",
        "rem-4.25" => "FPdim(X_i)² FPdim(C)/(FPdim(C') dim(C^{M(i)})) is an algebraic integer",
        _ => "unregistered check",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values_carry_a_decimal() {
        let v = Value::from(CycNum::from_ratio(1, 2));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json, serde_json::json!({"conductor": 1, "coeffs": [[1, 2]], "approx": "0.500000"}));
        let back: Value = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn report_round_trips() {
        let checks = vec![
            Check::equal("eq-2.7", params! {"D" => [0, 1]}, CycNum::from_int(2), CycNum::from_int(2)),
            Check::same("thm-4.10", params! {}, Value::partition(&[vec![0], vec![1, 2]]), Value::partition(&[vec![0], vec![1, 2]])),
            Check::skipped("thm-1.3", params! {}, "center not pointed"),
            Check::claim("cor-3.9", params! {"t" => 1}, Value::nums(&[CycNum::zeta(8)]), false),
        ];
        let report = VerificationReport::new("x", checks);
        assert_eq!(report.checks[0].id, "cor-3.9");
        assert_eq!(report.summary, Summary { total: 4, passed: 2, failed: 1, skipped: 1 });
        let text = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(report.to_markdown().contains("| eq-2.7 |"));
    }

    #[test]
    fn every_id_is_described() {
        for id in CHECK_IDS {
            assert_ne!(describe(id), "unregistered check", "{id}");
        }
    }
}
