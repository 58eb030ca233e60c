//! The bundled incomparable pairs for the exceptional Grassmannians.
//!
//! Each record gives `u`, `v` and `w = w₀ v w_P` as digit strings together
//! with `L = ℓ(u) + ℓ(v)`. They are treated as claims: every check below is
//! recomputed from the root system.

use serde::{Deserialize, Serialize};

use super::{ed_closed_form, VarietySpec};
use crate::bruhat::leq;
use crate::coset::{dual_rep, is_minimal_rep};
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, LieFamily};
use crate::weyl::{parse_word, WeylElement};

const TABLE3_JSON: &str = include_str!("../../data/table3.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub family: LieFamily,
    pub rank: usize,
    pub node: usize,
    pub u: String,
    pub v: String,
    pub w: Option<String>,
    #[serde(rename = "L")]
    pub l: usize,
}

impl Table3Row {
    pub fn spec(&self) -> Result<VarietySpec> {
        VarietySpec::grassmannian(self.family, self.rank, self.node)
    }
}

pub fn load_table3() -> Result<Vec<Table3Row>> {
    serde_json::from_str(TABLE3_JSON).map_err(|e| Error::TableData(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table3Check {
    pub spec: String,
    pub items: Vec<CheckItem>,
}

impl Table3Check {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.items.push(CheckItem { name: name.into(), passed, detail });
    }
}

pub fn verify_table3_row(row: &Table3Row) -> Result<Table3Check> {
    let spec = row.spec()?;
    let rs = build_root_system(row.family, row.rank)?;
    let p = spec.parabolic();
    let mut check = Table3Check { spec: spec.to_string(), items: Vec::new() };

    let mut parse = |name: &str, s: &str| -> Result<WeylElement> {
        let word = parse_word(s)?;
        let x = rs.from_word(&word)?;
        check.push(
            &format!("{name} reduced"),
            x.length() == word.len(),
            format!("word length {}, element length {}", word.len(), x.length()),
        );
        check.push(&format!("{name} in W^P"), is_minimal_rep(&x, &p), String::new());
        Ok(x)
    };
    let u = parse("u", &row.u)?;
    let v = parse("v", &row.v)?;
    let w_given = row.w.as_deref().map(|s| parse("w", s)).transpose()?;

    let w = if is_minimal_rep(&v, &p) { Some(dual_rep(&rs, &v, &p)?) } else { None };
    match (&w_given, &w) {
        (Some(given), Some(computed)) => check.push(
            "w = w0 v w_P",
            given == computed,
            format!("computed length {}, given length {}", computed.length(), given.length()),
        ),
        (_, None) => check.push("w = w0 v w_P", false, "v is not a minimal representative".into()),
        (None, Some(_)) => {}
    }
    if let Some(w) = w {
        check.push("u not <= w", !leq(&rs, &u, &w)?, format!("l(u) = {}, l(w) = {}", u.length(), w.length()));
    }
    let total = u.length() + v.length();
    check.push("l(u) + l(v) = L", total == row.l, format!("{} + {} vs {}", u.length(), v.length(), row.l));
    let ed = ed_closed_form(&spec)?;
    check.push("L = ed + 1", row.l == ed + 1, format!("L = {}, ed = {ed}", row.l));
    Ok(check)
}

/// Checks the record for an exceptional Grassmannian.
pub fn verify_table3(spec: &VarietySpec) -> Result<Table3Check> {
    let rows = load_table3()?;
    let row = rows
        .iter()
        .find(|r| r.family == spec.family && r.rank == spec.rank && [r.node] == spec.excluded[..])
        .ok_or_else(|| Error::TableData(format!("no record for {spec}")))?;
    verify_table3_row(row)
}
