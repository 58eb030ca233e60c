//! Minimal-length coset representatives `W^P`.
//!
//! An enumeration stores the elements of `W^P` grouped by length, each
//! group sorted by canonical matrix. Elements are addressed by their flat
//! position in that order. Alongside the elements it keeps, per element,
//! the index of `s_i u` for every left descent `s_i` (this always lies in
//! `W^P` again), which lets order queries run on integers.

pub mod cache;

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rootsys::{ParabolicSubset, RootSystem, MAX_RANK};
use crate::weyl::WeylElement;

/// Marks "no such element" in the index tables.
pub const NONE: u32 = u32::MAX;

/// `u ∈ W^P` iff `u(α_i) > 0` for every retained node `i`.
pub fn is_minimal_rep(u: &WeylElement, p: &ParabolicSubset) -> bool {
    u.right_descent_mask() & p.retained_mask() == 0
}

/// Factors `w = w1 · w2` with `w1 ∈ W^P` and `w2 ∈ W_P` by stripping right
/// descents that lie in `Δ_P`.
pub fn project_to_wp(rs: &RootSystem, w: &WeylElement, p: &ParabolicSubset) -> (WeylElement, WeylElement) {
    let retained = p.retained_mask();
    let mut w1 = *w;
    let mut w2 = rs.identity();
    loop {
        let strip = w1.right_descent_mask() & retained;
        if strip == 0 {
            return (w1, w2);
        }
        let i = strip.trailing_zeros() as usize;
        w1 = rs.right_mul_simple(&w1, i);
        w2 = rs.left_mul_simple(i, &w2);
    }
}

/// Minimal representative of `w₀ u w_P`.
pub fn dual_rep(rs: &RootSystem, u: &WeylElement, p: &ParabolicSubset) -> Result<WeylElement> {
    rs.check_context(u)?;
    if !is_minimal_rep(u, p) {
        return Err(Error::NotMinimalRepresentative);
    }
    let w0 = rs.longest_element();
    let wp = rs.longest_element_mask(p.retained_mask());
    let x = rs.multiply(&rs.multiply(&w0, u), &wp);
    Ok(project_to_wp(rs, &x, p).0)
}

/// `ℓ(w₀) − ℓ(w_P)`, the dimension of `G/P`.
pub fn dimension(rs: &RootSystem, p: &ParabolicSubset) -> usize {
    rs.longest_element().length() - rs.longest_element_mask(p.retained_mask()).length()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    /// Stop after the stratum of this length.
    pub max_length: Option<usize>,
    /// Stop once this many elements are stored.
    pub max_elements: Option<usize>,
}

impl EnumOptions {
    pub fn full() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone)]
pub struct WpEnumeration {
    rs: RootSystem,
    parabolic: ParabolicSubset,
    elements: Vec<WeylElement>,
    offsets: Vec<usize>,
    down: Vec<[u32; MAX_RANK]>,
    left_descents: Vec<u16>,
    supports: Vec<u16>,
    dual: Option<Vec<u32>>,
    w0: WeylElement,
    wp: WeylElement,
    dimension: usize,
    truncated: bool,
}

/// Breadth-first enumeration of `W^P` by length.
pub fn enumerate_wp(rs: &RootSystem, p: &ParabolicSubset, opts: EnumOptions) -> Result<WpEnumeration> {
    if p.rank() != rs.rank() {
        return Err(Error::ContextMismatch);
    }
    let retained = p.retained_mask();
    let dim = dimension(rs, p);
    let mut strata: Vec<Vec<WeylElement>> = vec![vec![rs.identity()]];
    let mut stored = 1usize;
    let mut truncated = false;
    loop {
        let len = strata.len() - 1;
        if len == dim {
            break;
        }
        if opts.max_length.is_some_and(|m| len >= m) || opts.max_elements.is_some_and(|m| stored >= m) {
            truncated = true;
            break;
        }
        let prev = strata.last().expect("non-empty");
        let mut next: Vec<WeylElement> = prev
            .par_iter()
            .flat_map_iter(|u| {
                let ascents = !rs.left_descent_mask(u) & ((1u32 << rs.rank()) - 1) as u16;
                (0..rs.rank())
                    .filter(move |i| ascents & (1 << i) != 0)
                    .map(move |i| rs.left_mul_simple_known(i, u, false))
                    .filter(move |v| v.right_descent_mask() & retained == 0)
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        if let Some(max) = opts.max_elements {
            if stored + next.len() > max {
                truncated = true;
                break;
            }
        }
        stored += next.len();
        strata.push(next);
    }
    WpEnumeration::from_strata(rs, p, strata, truncated)
}

impl WpEnumeration {
    /// Builds the index tables from sorted strata.
    pub(crate) fn from_strata(
        rs: &RootSystem,
        p: &ParabolicSubset,
        strata: Vec<Vec<WeylElement>>,
        truncated: bool,
    ) -> Result<Self> {
        let w0 = rs.longest_element();
        let wp = rs.longest_element_mask(p.retained_mask());
        let dimension = w0.length() - wp.length();
        let mut offsets = Vec::with_capacity(strata.len() + 1);
        offsets.push(0);
        for s in &strata {
            offsets.push(offsets.last().unwrap() + s.len());
        }
        let elements: Vec<WeylElement> = strata.into_iter().flatten().collect();
        let mut e = WpEnumeration {
            rs: rs.clone(),
            parabolic: *p,
            elements,
            offsets,
            down: Vec::new(),
            left_descents: Vec::new(),
            supports: Vec::new(),
            dual: None,
            w0,
            wp,
            dimension,
            truncated,
        };
        let tables: Vec<([u32; MAX_RANK], u16, u16)> = e
            .elements
            .par_iter()
            .map(|v| {
                let mask = e.rs.left_descent_mask(v);
                let mut row = [NONE; MAX_RANK];
                for (i, slot) in row.iter_mut().enumerate().take(e.rs.rank()) {
                    if mask & (1 << i) != 0 {
                        let u = e.rs.left_mul_simple_known(i, v, true);
                        *slot = e.index_of(&u).map_or(NONE, |x| x as u32);
                    }
                }
                (row, mask, v.support_mask())
            })
            .collect();
        for (row, mask, support) in tables {
            if row.iter().zip(0..e.rs.rank()).any(|(&x, i)| mask & (1 << i) != 0 && x == NONE) {
                return Err(Error::Cache("left-descent neighbour missing from enumeration".into()));
            }
            e.down.push(row);
            e.left_descents.push(mask);
            e.supports.push(support);
        }
        if !truncated {
            let dual: Vec<u32> = e
                .elements
                .par_iter()
                .map(|u| {
                    let x = e.rs.multiply_with_length(&e.rs.multiply_with_length(&e.w0, u, 0), &e.wp, 0);
                    let x = WeylElement::from_raw(x.family(), x.rank(), dimension - u.length(), *x.raw_images());
                    e.index_of(&x).map_or(NONE, |i| i as u32)
                })
                .collect();
            if dual.contains(&NONE) {
                return Err(Error::Cache("dual map leaves the enumeration".into()));
            }
            e.dual = Some(dual);
        }
        Ok(e)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn total_count(&self) -> usize {
        self.elements.len()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Number of stored strata (lengths `0..num_strata()`).
    pub fn num_strata(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn strata_counts(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Flat index range of the elements of length `len`; empty if not stored.
    pub fn stratum_range(&self, len: usize) -> Range<usize> {
        if len + 1 >= self.offsets.len() {
            let end = *self.offsets.last().unwrap();
            return end..end;
        }
        self.offsets[len]..self.offsets[len + 1]
    }

    pub fn stratum(&self, len: usize) -> &[WeylElement] {
        &self.elements[self.stratum_range(len)]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    #[inline]
    pub fn length_of(&self, idx: usize) -> usize {
        self.elements[idx].length()
    }

    /// Flat index of `w`, if it is stored.
    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        let range = self.stratum_range(w.length());
        let start = range.start;
        self.elements[range].binary_search(w).ok().map(|i| start + i)
    }

    /// Index of `s_i u` for a left descent `i` (0-based) of element `idx`.
    #[inline]
    pub fn down(&self, idx: usize, i: usize) -> Option<usize> {
        let x = self.down[idx][i];
        (x != NONE).then_some(x as usize)
    }

    #[inline]
    pub(crate) fn down_raw(&self, idx: usize) -> &[u32; MAX_RANK] {
        &self.down[idx]
    }

    #[inline]
    pub fn left_descent_mask(&self, idx: usize) -> u16 {
        self.left_descents[idx]
    }

    #[inline]
    pub fn support_mask(&self, idx: usize) -> u16 {
        self.supports[idx]
    }

    /// Index of the minimal representative of `w₀ u w_P`; unavailable on a
    /// truncated enumeration.
    pub fn dual_index(&self, idx: usize) -> Option<usize> {
        self.dual.as_ref().map(|d| d[idx] as usize)
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    pub fn wp(&self) -> &WeylElement {
        &self.wp
    }

    /// Expected `|W^P|` from the group orders.
    pub fn expected_total(&self) -> u64 {
        let retained = self.parabolic.retained();
        self.rs.weyl_group_order() / self.rs.parabolic_order(&retained)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = self.strata_counts();
        c.iter().eq(c.iter().rev())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, LieFamily};
    use crate::weyl::parse_word;

    fn wp(f: LieFamily, n: usize, excl: &[usize]) -> WpEnumeration {
        let rs = build_root_system(f, n).unwrap();
        let p = ParabolicSubset::new(n, excl).unwrap();
        enumerate_wp(&rs, &p, EnumOptions::full()).unwrap()
    }

    #[test]
    fn small_strata() {
        assert_eq!(wp(LieFamily::A, 2, &[1]).strata_counts(), vec![1, 1, 1]);
        let q3 = wp(LieFamily::B, 2, &[1]);
        assert_eq!(q3.strata_counts(), vec![1, 1, 1, 1]);
        assert_eq!(q3.dimension(), 3);
        let e7 = wp(LieFamily::E7, 7, &[7]);
        assert_eq!((e7.total_count(), e7.dimension()), (56, 27));
        assert_eq!(wp(LieFamily::E8, 8, &[8]).total_count(), 240);
    }

    #[test]
    fn membership_examples() {
        let rs = build_root_system(LieFamily::D, 5).unwrap();
        let p = ParabolicSubset::new(5, &[2]).unwrap();
        assert!(is_minimal_rep(&rs.identity(), &p));
        assert!(is_minimal_rep(&rs.from_word(&[2]).unwrap(), &p));
        assert!(!is_minimal_rep(&rs.from_word(&[3]).unwrap(), &p));
    }

    #[test]
    fn factorization() {
        let rs = build_root_system(LieFamily::E7, 7).unwrap();
        let p = ParabolicSubset::maximal(7, 7).unwrap();
        let w = rs.from_word(&parse_word("6245341324567541324561324532413").unwrap()).unwrap();
        let (w1, w2) = project_to_wp(&rs, &w, &p);
        assert!(is_minimal_rep(&w1, &p));
        assert_eq!(w1.length() + w2.length(), w.length());
        assert_eq!(rs.multiply(&w1, &w2), w);
        assert_eq!(w2.support_mask() & (1 << 6), 0);

        let u = rs.from_word(&parse_word("7654324567").unwrap()).unwrap();
        assert_eq!(project_to_wp(&rs, &u, &p), (u, rs.identity()));
        let x = rs.from_word(&parse_word("123456").unwrap()).unwrap();
        assert_eq!(project_to_wp(&rs, &x, &p), (rs.identity(), x));
    }

    #[test]
    fn dual_examples() {
        let rs = build_root_system(LieFamily::E7, 7).unwrap();
        let p = ParabolicSubset::maximal(7, 7).unwrap();
        let v = rs.from_word(&parse_word("7654324567").unwrap()).unwrap();
        assert_eq!(dual_rep(&rs, &v, &p).unwrap().length(), 17);
        let top = dual_rep(&rs, &rs.identity(), &p).unwrap();
        assert_eq!(top.length(), 27);
        assert!(dual_rep(&rs, &rs.from_word(&[1]).unwrap(), &p).is_err());
    }

    #[test]
    fn truncation() {
        let rs = build_root_system(LieFamily::E6, 6).unwrap();
        let p = ParabolicSubset::maximal(6, 4).unwrap();
        let e = enumerate_wp(&rs, &p, EnumOptions { max_length: Some(3), max_elements: None }).unwrap();
        assert!(e.is_truncated());
        assert_eq!(e.num_strata(), 4);
        assert!(e.dual_index(0).is_none());
        let e = enumerate_wp(&rs, &p, EnumOptions { max_length: None, max_elements: Some(10) }).unwrap();
        assert!(e.is_truncated());
        assert!(e.total_count() <= 10);
    }
}
