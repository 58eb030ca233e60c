//! Numeric obstruction to non-constant morphisms: a morphism from `M` to a
//! classical `G/P` is constant as soon as `e.d.(M) > e.d.(G/P)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ed_flag, VarietySpec};
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Component, LieFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "constant-forced")]
    ConstantForced,
    #[serde(rename = "no-conclusion")]
    NoConclusion,
    #[serde(rename = "theorem does not apply")]
    TheoremDoesNotApply,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ConstantForced => "constant-forced",
            Verdict::NoConclusion => "no-conclusion",
            Verdict::TheoremDoesNotApply => "theorem does not apply",
        })
    }
}

/// Verdict for a morphism from a variety with the given e.d. to `target`.
pub fn morphism_obstruction(source_ed: usize, target: &VarietySpec) -> Result<Verdict> {
    if !target.family.is_classical() {
        return Ok(Verdict::TheoremDoesNotApply);
    }
    Ok(if source_ed > ed_flag(target)? { Verdict::ConstantForced } else { Verdict::NoConclusion })
}

/// One Dynkin component of `Δ_Q` together with the nodes of `P̄` removed from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetFactor {
    pub family: LieFamily,
    pub rank: usize,
    pub nodes: Vec<usize>,
    pub excluded: Vec<usize>,
    /// `None` for a point factor (nothing excluded) or an exceptional one.
    pub ed: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub source: VarietySpec,
    pub source_ed: usize,
    pub hypothesis_holds: bool,
    pub factors: Vec<TargetFactor>,
    pub verdict: Verdict,
}

/// The E7/E8 restriction on `Q`, stated on its excluded nodes.
pub fn product_hypothesis(family: LieFamily, q_excluded: &[usize]) -> bool {
    let q: BTreeSet<usize> = q_excluded.iter().copied().collect();
    match family {
        LieFamily::E7 => q != BTreeSet::from([7]),
        LieFamily::E8 => !q.is_subset(&BTreeSet::from([7, 8])),
        _ => true,
    }
}

fn factor_ed(c: &Component, excluded: &[usize]) -> Option<usize> {
    if excluded.is_empty() {
        return None;
    }
    let k = c.rank;
    match c.family {
        LieFamily::A => Some(k),
        LieFamily::B | LieFamily::C => Some(2 * k - 1),
        LieFamily::D => Some(if excluded.iter().any(|n| c.leaves.contains(n)) { 2 * k - 3 } else { 2 * k - 2 }),
        _ => None,
    }
}

/// Morphisms `G/P → Q/P̄` for `P̄ ⊂ Q` in the same group. `Q/P̄` splits as a
/// product over the components of `Δ_Q`; `pbar_excluded = None` takes `P̄ = B`.
pub fn morphism_obstruction_cor14(
    source: &VarietySpec,
    q_excluded: &[usize],
    pbar_excluded: Option<&[usize]>,
) -> Result<ProductReport> {
    let rank = source.rank;
    let q = VarietySpec::new(source.family, rank, q_excluded)?;
    let pbar: BTreeSet<usize> = match pbar_excluded {
        Some(x) => VarietySpec::new(source.family, rank, x)?.excluded.into_iter().collect(),
        None => (1..=rank).collect(),
    };
    if !q.excluded.iter().all(|n| pbar.contains(n)) {
        return Err(Error::InvalidContext("the parabolic of the target must lie in Q".into()));
    }
    let source_ed = ed_flag(source)?;
    let hypothesis_holds = product_hypothesis(source.family, &q.excluded);
    let rs = build_root_system(source.family, rank)?;
    let retained: Vec<usize> = q.parabolic().retained();
    let factors: Vec<TargetFactor> = rs
        .components(&retained)
        .into_iter()
        .map(|c| {
            let excluded: Vec<usize> = c.nodes.iter().copied().filter(|n| pbar.contains(n)).collect();
            TargetFactor {
                family: c.family,
                rank: c.rank,
                nodes: c.nodes.iter().copied().collect(),
                ed: factor_ed(&c, &excluded),
                excluded,
            }
        })
        .collect();
    let exceptional = factors.iter().any(|f| !f.family.is_classical() && !f.excluded.is_empty());
    let verdict = if !hypothesis_holds || exceptional {
        Verdict::TheoremDoesNotApply
    } else if factors.iter().all(|f| f.ed.is_none_or(|ed| source_ed > ed)) {
        Verdict::ConstantForced
    } else {
        Verdict::NoConclusion
    };
    Ok(ProductReport { source: source.clone(), source_ed, hypothesis_holds, factors, verdict })
}

/// Same classical type, smaller rank on the source: always constant-forced.
pub fn same_type_rank_obstruction(source: &VarietySpec, target: &VarietySpec) -> Result<Verdict> {
    if source.family != target.family || !source.family.is_classical() || source.rank <= target.rank {
        return Ok(Verdict::TheoremDoesNotApply);
    }
    morphism_obstruction(ed_flag(source)?, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ed_engine::ed_closed_form;

    fn g(f: LieFamily, r: usize, m: usize) -> VarietySpec {
        VarietySpec::grassmannian(f, r, m).unwrap()
    }

    #[test]
    fn e6_into_b7() {
        let src = ed_closed_form(&g(LieFamily::E6, 6, 4)).unwrap();
        assert_eq!(src, 15);
        let v = morphism_obstruction(src, &g(LieFamily::B, 7, 3)).unwrap();
        assert_eq!(v, Verdict::ConstantForced);
        let v = morphism_obstruction(src, &g(LieFamily::B, 8, 3)).unwrap();
        assert_eq!(v, Verdict::NoConclusion);
    }

    #[test]
    fn projective_spaces() {
        for r in 2..6 {
            for n in 1..6 {
                let v = morphism_obstruction(r, &g(LieFamily::A, n, 1)).unwrap();
                assert_eq!(v == Verdict::ConstantForced, r > n);
            }
        }
    }

    #[test]
    fn exceptional_target() {
        let v = morphism_obstruction(100, &g(LieFamily::F4, 4, 1)).unwrap();
        assert_eq!(v, Verdict::TheoremDoesNotApply);
    }

    #[test]
    fn e7_q7_does_not_apply() {
        let src = g(LieFamily::E7, 7, 1);
        let rep = morphism_obstruction_cor14(&src, &[7], None).unwrap();
        assert!(!rep.hypothesis_holds);
        assert_eq!(rep.verdict, Verdict::TheoremDoesNotApply);
        assert_eq!(rep.factors[0].family, LieFamily::E6);
        let rep = morphism_obstruction_cor14(&src, &[1], None).unwrap();
        assert_eq!(rep.verdict, Verdict::ConstantForced);
        assert_eq!((rep.factors[0].family, rep.factors[0].rank), (LieFamily::D, 6));
    }

    #[test]
    fn hypothesis_matches_component_types() {
        for f in LieFamily::ALL {
            let r = f.fixed_rank().unwrap_or(5);
            let rs = build_root_system(f, r).unwrap();
            for mask in 1u32..(1 << r) - 1 {
                let q: Vec<usize> = (1..=r).filter(|n| mask >> (n - 1) & 1 == 1).collect();
                let retained: Vec<usize> = (1..=r).filter(|n| mask >> (n - 1) & 1 == 0).collect();
                let classical = rs.components(&retained).iter().all(|c| c.family.is_classical());
                assert_eq!(product_hypothesis(f, &q), classical, "{f} {q:?}");
            }
        }
    }

    #[test]
    fn product_targets_are_always_obstructed() {
        // the flag variety has the smallest e.d., so it is the hardest source
        for f in LieFamily::ALL {
            let r = f.fixed_rank().unwrap_or(6);
            let src = VarietySpec::flag(f, r).unwrap();
            for mask in 1u32..(1 << r) - 1 {
                let q: Vec<usize> = (1..=r).filter(|n| mask >> (n - 1) & 1 == 1).collect();
                let rep = morphism_obstruction_cor14(&src, &q, None).unwrap();
                let expect =
                    if rep.hypothesis_holds { Verdict::ConstantForced } else { Verdict::TheoremDoesNotApply };
                assert_eq!(rep.verdict, expect, "{f} {q:?}");
            }
        }
    }

    #[test]
    fn rejects_pbar_outside_q() {
        let src = g(LieFamily::A, 4, 2);
        assert!(morphism_obstruction_cor14(&src, &[1, 2], Some(&[1])).is_err());
        let rep = morphism_obstruction_cor14(&src, &[1], Some(&[1])).unwrap();
        assert!(rep.factors.iter().all(|f| f.ed.is_none()));
        assert_eq!(rep.verdict, Verdict::ConstantForced);
    }

    #[test]
    fn same_type_smaller_rank() {
        let v = same_type_rank_obstruction(&g(LieFamily::B, 5, 2), &g(LieFamily::B, 4, 1)).unwrap();
        assert_eq!(v, Verdict::ConstantForced);
        let v = same_type_rank_obstruction(&g(LieFamily::D, 6, 3), &g(LieFamily::D, 5, 3)).unwrap();
        assert_eq!(v, Verdict::ConstantForced);
    }
}
