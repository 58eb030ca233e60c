//! Effective good divisibility: closed forms, the flag reduction and
//! brute-force threshold scans over `W^P`.
//!
//! `[X_u] ∪ [X_v] ≠ 0` iff `u ≤ w₀ v w_P`. A scan at total degree `L` tests
//! every `u` of length `i ≤ L/2` against every `w` of length
//! `dim − (L − i)`; the first `L` with an incomparable pair is `e.d. + 1`.

pub mod classical;
pub mod morphism;
pub mod table3;

use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bruhat::{leq, leq_idx};
use crate::coset::cache::load_or_enumerate;
use crate::coset::{EnumOptions, WpEnumeration};
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, LieFamily, ParabolicSubset, RootSystem};
use crate::weyl::format_word;

pub use classical::{verify_classical_construction, ClassicalReport};
pub use morphism::{morphism_obstruction, morphism_obstruction_cor14, Verdict};
pub use table3::{load_table3, verify_table3, verify_table3_row, Table3Check, Table3Row};

/// `G/P` given by a type and the excluded nodes `Δ ∖ Δ_P`. The rank is the
/// plain rank of the root system, so `D_{n+1}` has rank `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarietySpec {
    pub family: LieFamily,
    pub rank: usize,
    pub excluded: Vec<usize>,
}

impl VarietySpec {
    pub fn new(family: LieFamily, rank: usize, excluded: &[usize]) -> Result<Self> {
        if !family.valid_rank(rank) {
            return Err(Error::InvalidRank { family, rank });
        }
        let p = ParabolicSubset::new(rank, excluded)?;
        Ok(VarietySpec { family, rank, excluded: p.excluded() })
    }

    /// The Grassmannian `𝒟(m)`.
    pub fn grassmannian(family: LieFamily, rank: usize, node: usize) -> Result<Self> {
        Self::new(family, rank, &[node])
    }

    /// The complete flag variety `G/B`.
    pub fn flag(family: LieFamily, rank: usize) -> Result<Self> {
        let all: Vec<usize> = (1..=rank).collect();
        Self::new(family, rank, &all)
    }

    pub fn parabolic(&self) -> ParabolicSubset {
        ParabolicSubset::new(self.rank, &self.excluded).expect("validated at construction")
    }

    pub fn is_grassmannian(&self) -> bool {
        self.excluded.len() == 1
    }

    /// Root system used for the Weyl-side computation. Type C runs on the
    /// type-B data, which has the same Weyl group and Bruhat order.
    pub fn weyl_root_system(&self) -> RootSystem {
        let family = if self.family == LieFamily::C { LieFamily::B } else { self.family };
        build_root_system(family, self.rank).expect("validated at construction")
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.excluded.iter().map(|n| n.to_string()).collect();
        match self.family.fixed_rank() {
            Some(_) => write!(f, "{}({})", self.family, nodes.join(",")),
            None => write!(f, "{}{}({})", self.family, self.rank, nodes.join(",")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    BruteForce,
    Reduction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::BruteForce => "brute_force",
            Method::Reduction => "reduction",
        })
    }
}

/// An incomparable pair `u ≰ w`, with `v` the dual of `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub u: String,
    pub w: String,
    pub v: String,
    pub u_length: usize,
    pub w_length: usize,
    pub v_length: usize,
    /// `ℓ(u) + ℓ(v)`, which is `e.d. + 1` for a minimal witness.
    pub total_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdReport {
    pub spec: VarietySpec,
    /// `None` when a scan ran out of budget before finding a witness.
    pub ed: Option<usize>,
    pub method: Method,
    pub witness: Option<Witness>,
    /// Every pair of total degree at most this value was checked (brute
    /// force) or is covered by the formula.
    pub certified_up_to: usize,
    pub dimension: usize,
    pub truncated: bool,
    pub pairs_tested: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Limits for brute-force scans; `None` means unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub pairs: Option<u64>,
    pub seconds: Option<f64>,
    /// Cap on `|W^P|` during enumeration.
    pub max_elements: Option<usize>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }
}

fn check_node(spec: &VarietySpec) -> Result<usize> {
    match spec.excluded.as_slice() {
        [m] => Ok(*m),
        _ => Err(Error::InvalidContext(format!("{spec} is not a Grassmannian"))),
    }
}

/// `e.d.(𝒟(m))` from the closed forms for every simple type.
pub fn ed_closed_form(spec: &VarietySpec) -> Result<usize> {
    let m = check_node(spec)?;
    let r = spec.rank;
    Ok(match spec.family {
        LieFamily::A => r,
        LieFamily::B | LieFamily::C => 2 * r - 1,
        // D_{n+1} with n = r − 1: 2n − 1 on the three end nodes, 2n otherwise
        LieFamily::D => {
            if m == 1 || m == r - 1 || m == r {
                2 * r - 3
            } else {
                2 * r - 2
            }
        }
        LieFamily::G2 => 5,
        LieFamily::F4 => [12, 14, 14, 12][m - 1],
        LieFamily::E6 => [12, 14, 14, 15, 14, 12][m - 1],
        LieFamily::E7 => [22, 23, 24, 25, 25, 23, 19][m - 1],
        LieFamily::E8 => [46, 50, 50, 51, 50, 48, 45, 40][m - 1],
    })
}

/// Minimum of the Grassmannian values over the excluded nodes.
pub fn ed_flag(spec: &VarietySpec) -> Result<usize> {
    let values = spec
        .excluded
        .iter()
        .map(|&m| ed_closed_form(&VarietySpec::grassmannian(spec.family, spec.rank, m)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.into_iter().min().expect("spec has at least one excluded node"))
}

/// Report for the closed form (single node) or the flag reduction.
pub fn ed_report_closed(spec: &VarietySpec) -> Result<EdReport> {
    let (ed, method) = if spec.is_grassmannian() {
        (ed_closed_form(spec)?, Method::ClosedForm)
    } else {
        (ed_flag(spec)?, Method::Reduction)
    };
    let rs = spec.weyl_root_system();
    Ok(EdReport {
        spec: spec.clone(),
        ed: Some(ed),
        method,
        witness: None,
        certified_up_to: ed,
        dimension: crate::coset::dimension(&rs, &spec.parabolic()),
        truncated: false,
        pairs_tested: 0,
        notes: Vec::new(),
    })
}

pub fn coxeter_number(family: LieFamily, rank: usize) -> Result<usize> {
    Ok(build_root_system(family, rank)?.coxeter_number())
}

enum Cell {
    Fail(usize, usize),
    Abort,
}

/// Brute-force scan over an existing enumeration.
pub fn ed_bruteforce_on(spec: &VarietySpec, e: &WpEnumeration, budget: Budget) -> Result<EdReport> {
    let dim = e.dimension();
    let mut report = EdReport {
        spec: spec.clone(),
        ed: None,
        method: Method::BruteForce,
        witness: None,
        certified_up_to: 0,
        dimension: dim,
        truncated: false,
        pairs_tested: 0,
        notes: Vec::new(),
    };
    if spec.family == LieFamily::C {
        report.notes.push("computed on the type-B Weyl group, which has the same Bruhat order".into());
    }
    if e.is_truncated() {
        report.truncated = true;
        report.notes.push(format!("enumeration of W^P stopped after {} elements", e.total_count()));
        return Ok(report);
    }
    let deadline = budget.seconds.filter(|&s| s > 0.0).map(|s| Instant::now() + Duration::from_secs_f64(s));
    let expired = || deadline.is_some_and(|d| Instant::now() >= d);
    let mut tested: u64 = 0;
    for total in 1..=2 * dim {
        for i in 1..=total / 2 {
            let j = total - i;
            if j > dim {
                continue;
            }
            let us = e.stratum_range(i);
            let ws = e.stratum_range(dim - j);
            let cell = (us.len() * ws.len()) as u64;
            if budget.pairs.is_some_and(|b| tested + cell > b) || expired() {
                report.truncated = true;
                report.certified_up_to = total - 1;
                report.pairs_tested = tested;
                report.notes.push(format!("budget exhausted at total degree {total}, cell i = {i}"));
                return Ok(report);
            }
            let diagonal = i == j;
            let found = us.clone().into_par_iter().find_map_first(|u| {
                if expired() {
                    return Some(Cell::Abort);
                }
                ws.clone()
                    // on the diagonal (u, v) and (v, u) are the same test
                    .filter(|&w| !diagonal || u <= e.dual_index(w).expect("complete enumeration"))
                    .find(|&w| !leq_idx(e, u, w))
                    .map(|w| Cell::Fail(u, w))
            });
            match found {
                None => tested += cell,
                Some(Cell::Abort) => {
                    report.truncated = true;
                    report.certified_up_to = total - 1;
                    report.pairs_tested = tested;
                    report.notes.push(format!("time budget exhausted at total degree {total}, cell i = {i}"));
                    return Ok(report);
                }
                Some(Cell::Fail(u, w)) => {
                    tested += ((u - us.start) * ws.len() + (w - ws.start) + 1) as u64;
                    report.pairs_tested = tested;
                    report.ed = Some(total - 1);
                    report.certified_up_to = total - 1;
                    report.witness = Some(make_witness(e, u, w)?);
                    return Ok(report);
                }
            }
        }
        report.certified_up_to = total;
    }
    Err(Error::InvalidContext(format!("{spec}: no incomparable pair found up to total degree {}", 2 * dim)))
}

/// Builds the witness record and re-checks it with the matrix oracle.
fn make_witness(e: &WpEnumeration, u: usize, w: usize) -> Result<Witness> {
    let rs = e.root_system();
    let (ue, we) = (e.element(u), e.element(w));
    if leq(rs, ue, we)? {
        return Err(Error::InvalidContext("witness failed re-verification".into()));
    }
    let v = e.dual_index(w).expect("complete enumeration");
    let ve = e.element(v);
    Ok(Witness {
        u: format_word(&rs.reduced_word(ue)),
        w: format_word(&rs.reduced_word(we)),
        v: format_word(&rs.reduced_word(ve)),
        u_length: ue.length(),
        w_length: we.length(),
        v_length: ve.length(),
        total_degree: ue.length() + ve.length(),
    })
}

/// Enumerates `W^P` (through the cache when given) and scans.
pub fn ed_bruteforce(spec: &VarietySpec, budget: Budget, cache_dir: Option<&Path>) -> Result<EdReport> {
    let rs = spec.weyl_root_system();
    let opts = EnumOptions { max_length: None, max_elements: budget.max_elements };
    let e = load_or_enumerate(cache_dir, &rs, &spec.parabolic(), opts)?;
    ed_bruteforce_on(spec, &e, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: LieFamily, r: usize, m: usize) -> VarietySpec {
        VarietySpec::grassmannian(f, r, m).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(ed_closed_form(&spec(LieFamily::B, 4, 2)).unwrap(), 7);
        assert_eq!(ed_closed_form(&spec(LieFamily::E8, 8, 4)).unwrap(), 51);
        assert_eq!(ed_closed_form(&spec(LieFamily::D, 5, 2)).unwrap(), 8);
        assert_eq!(ed_closed_form(&spec(LieFamily::D, 5, 4)).unwrap(), 7);
        assert!(ed_closed_form(&VarietySpec::flag(LieFamily::A, 3).unwrap()).is_err());
    }

    #[test]
    fn flag_examples() {
        assert_eq!(ed_flag(&VarietySpec::flag(LieFamily::E8, 8).unwrap()).unwrap(), 40);
        assert_eq!(ed_flag(&VarietySpec::new(LieFamily::E7, 7, &[2, 6]).unwrap()).unwrap(), 23);
        assert_eq!(ed_flag(&VarietySpec::flag(LieFamily::B, 5).unwrap()).unwrap(), 9);
        let s = spec(LieFamily::F4, 4, 2);
        assert_eq!(ed_flag(&s).unwrap(), ed_closed_form(&s).unwrap());
    }

    #[test]
    fn small_bruteforce() {
        for (f, r, m, ed) in [
            (LieFamily::A, 2, 1, 2),
            (LieFamily::B, 2, 1, 3),
            (LieFamily::G2, 2, 1, 5),
            (LieFamily::C, 3, 2, 5),
        ] {
            let s = spec(f, r, m);
            let rep = ed_bruteforce(&s, Budget::unlimited(), None).unwrap();
            assert_eq!(rep.ed, Some(ed), "{s}");
            let w = rep.witness.unwrap();
            assert_eq!(w.total_degree, ed + 1);
            assert_eq!(w.u_length + rep.dimension - w.w_length, ed + 1);
        }
    }

    #[test]
    fn budget_truncates() {
        let s = spec(LieFamily::E6, 6, 4);
        let rep = ed_bruteforce(&s, Budget { pairs: Some(50), ..Budget::default() }, None).unwrap();
        assert!(rep.truncated);
        assert_eq!(rep.ed, None);
        assert!(rep.certified_up_to < 15);
        let rep = ed_bruteforce(&s, Budget { max_elements: Some(20), ..Budget::default() }, None).unwrap();
        assert!(rep.truncated);
    }

    #[test]
    fn spec_display() {
        assert_eq!(spec(LieFamily::E7, 7, 3).to_string(), "E7(3)");
        assert_eq!(VarietySpec::flag(LieFamily::B, 3).unwrap().to_string(), "B3(1,2,3)");
    }
}
