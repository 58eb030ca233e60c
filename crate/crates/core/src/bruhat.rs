//! Bruhat order on `W` and on `W^P`.
//!
//! Both versions use the lifting recursion: for the smallest left descent
//! `s` of `w`, `u ≤ w` iff `su ≤ sw` when `s` is also a left descent of `u`,
//! and iff `u ≤ sw` otherwise. The recursion never branches, so a query is a
//! chain of at most `ℓ(w)` steps and every pair on the chain has the same
//! answer.

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::coset::{is_minimal_rep, project_to_wp, WpEnumeration, NONE};
use crate::error::{Error, Result};
use crate::rootsys::{ParabolicSubset, RootSystem};
use crate::weyl::WeylElement;

type Key = (WeylElement, WeylElement);

struct Memo {
    table: HashMap<Key, bool>,
    order: VecDeque<Key>,
}

/// Bounded memo of Bruhat comparisons, evicting in insertion order.
pub struct BruhatCache {
    capacity: usize,
    memo: Mutex<Memo>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl BruhatCache {
    pub fn new(capacity: usize) -> Self {
        BruhatCache {
            capacity,
            memo: Mutex::new(Memo { table: HashMap::new(), order: VecDeque::new() }),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &Key) -> Option<bool> {
        let hit = self.memo.lock().unwrap().table.get(key).copied();
        match hit {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        hit
    }

    fn insert_all(&self, keys: Vec<Key>, value: bool) {
        if self.capacity == 0 {
            return;
        }
        let mut memo = self.memo.lock().unwrap();
        for key in keys {
            if memo.table.insert(key, value).is_none() {
                memo.order.push_back(key);
            }
            while memo.table.len() > self.capacity {
                let Some(old) = memo.order.pop_front() else { break };
                memo.table.remove(&old);
            }
        }
    }

    /// Recomputes every stored entry without the memo and reports whether
    /// all agree.
    pub fn is_consistent(&self, rs: &RootSystem) -> bool {
        let entries: Vec<(Key, bool)> =
            self.memo.lock().unwrap().table.iter().map(|(k, &v)| (*k, v)).collect();
        entries.into_iter().all(|((u, w), v)| leq_uncached(rs, &u, &w) == v)
    }
}

impl Default for BruhatCache {
    fn default() -> Self {
        BruhatCache::new(1 << 20)
    }
}

/// Outcome of the cheap filters, if they decide the pair.
#[inline]
fn prefilter(u: &WeylElement, w: &WeylElement) -> Option<bool> {
    if u.length() > w.length() {
        return Some(false);
    }
    if u.is_identity() {
        return Some(true);
    }
    if u.length() == w.length() {
        return Some(u == w);
    }
    if u.support_mask() & !w.support_mask() != 0 {
        return Some(false);
    }
    None
}

fn step(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> (WeylElement, WeylElement) {
    let wd = rs.left_descent_mask(w);
    let s = wd.trailing_zeros() as usize;
    let sw = rs.left_mul_simple_known(s, w, true);
    if rs.left_descent_mask(u) & (1 << s) != 0 {
        (rs.left_mul_simple_known(s, u, true), sw)
    } else {
        (*u, sw)
    }
}

fn leq_uncached(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    let (mut u, mut w) = (*u, *w);
    loop {
        if let Some(r) = prefilter(&u, &w) {
            return r;
        }
        (u, w) = step(rs, &u, &w);
    }
}

/// `u ≤ w` in the Bruhat order of `W`.
pub fn leq(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> Result<bool> {
    rs.check_context(u)?;
    rs.check_context(w)?;
    Ok(leq_uncached(rs, u, w))
}

/// `leq` with a shared memo. Results are identical to [`leq`].
pub fn leq_cached(rs: &RootSystem, cache: &BruhatCache, u: &WeylElement, w: &WeylElement) -> Result<bool> {
    rs.check_context(u)?;
    rs.check_context(w)?;
    let (mut u, mut w) = (*u, *w);
    let mut chain = Vec::new();
    let result = loop {
        if let Some(r) = prefilter(&u, &w) {
            break r;
        }
        let key = (u, w);
        if let Some(r) = cache.get(&key) {
            break r;
        }
        chain.push(key);
        (u, w) = step(rs, &u, &w);
    };
    cache.insert_all(chain, result);
    Ok(result)
}

/// Bruhat order on flat indices of a `W^P` enumeration. The recursion stays
/// inside `W^P` because left descents of minimal representatives are again
/// minimal representatives.
#[inline]
pub fn leq_idx(e: &WpEnumeration, mut u: usize, mut w: usize) -> bool {
    loop {
        let (lu, lw) = (e.length_of(u), e.length_of(w));
        if lu > lw {
            return false;
        }
        if lu == 0 {
            return true;
        }
        if lu == lw {
            return u == w;
        }
        if e.support_mask(u) & !e.support_mask(w) != 0 {
            return false;
        }
        let s = e.left_descent_mask(w).trailing_zeros() as usize;
        let su = e.down_raw(u)[s];
        if su != NONE {
            u = su as usize;
        }
        w = e.down_raw(w)[s] as usize;
    }
}

/// Conjunction over excluded nodes `j` of `u_j ≤ w_j`, where `x_j` is the
/// projection of `x` to `W^{P_j}`.
pub fn projection_leq(rs: &RootSystem, u: &WeylElement, w: &WeylElement, p: &ParabolicSubset) -> Result<bool> {
    rs.check_context(u)?;
    rs.check_context(w)?;
    if !is_minimal_rep(u, p) || !is_minimal_rep(w, p) {
        return Err(Error::NotMinimalRepresentative);
    }
    for j in p.excluded() {
        let pj = ParabolicSubset::maximal(rs.rank(), j)?;
        let uj = project_to_wp(rs, u, &pj).0;
        let wj = project_to_wp(rs, w, &pj).0;
        if !leq_uncached(rs, &uj, &wj) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Iterator over pairs `(u, w)` of flat indices with `ℓ(u) = i`, `ℓ(w) = j`
/// and `u ≰ w`, in `u`-major order.
pub struct IncomparablePairs<'a> {
    e: &'a WpEnumeration,
    us: std::ops::Range<usize>,
    ws: std::ops::Range<usize>,
    u: usize,
    w: usize,
    budget: Option<u64>,
    tested: u64,
    truncated: bool,
}

impl IncomparablePairs<'_> {
    /// True once the pair budget stopped the scan early.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn tested(&self) -> u64 {
        self.tested
    }
}

impl Iterator for IncomparablePairs<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        while self.u < self.us.end {
            while self.w < self.ws.end {
                if self.budget.is_some_and(|b| self.tested >= b) {
                    self.truncated = true;
                    self.u = self.us.end;
                    return None;
                }
                let (u, w) = (self.u, self.w);
                self.w += 1;
                self.tested += 1;
                if !leq_idx(self.e, u, w) {
                    return Some((u, w));
                }
            }
            self.u += 1;
            self.w = self.ws.start;
        }
        None
    }
}

pub fn incomparable_pairs_at(e: &WpEnumeration, i: usize, j: usize, budget: Option<u64>) -> IncomparablePairs<'_> {
    let us = e.stratum_range(i);
    let ws = e.stratum_range(j);
    IncomparablePairs { e, u: us.start, w: ws.start, us, ws, budget, tested: 0, truncated: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{enumerate_wp, EnumOptions};
    use crate::rootsys::{build_root_system, LieFamily};
    use crate::weyl::parse_word;

    #[test]
    fn basic_examples() {
        let a2 = build_root_system(LieFamily::A, 2).unwrap();
        let s1 = a2.from_word(&[1]).unwrap();
        let s2 = a2.from_word(&[2]).unwrap();
        assert!(!leq(&a2, &s1, &s2).unwrap());
        assert!(leq(&a2, &a2.identity(), &s2).unwrap());
        assert!(leq(&a2, &s1, &s1).unwrap());
        assert!(leq(&a2, &s1, &a2.longest_element()).unwrap());
        let b2 = build_root_system(LieFamily::B, 2).unwrap();
        assert!(matches!(leq(&a2, &s1, &b2.identity()), Err(Error::ContextMismatch)));
    }

    #[test]
    fn e7_reduction_example() {
        let rs = build_root_system(LieFamily::E7, 7).unwrap();
        let w = |s: &str| rs.from_word(&parse_word(s).unwrap()).unwrap();
        assert!(!leq(&rs, &w("432413"), &w("413")).unwrap());
        let u = w("765432413");
        let big = w("6245341324567541324561324532413");
        assert!(!leq(&rs, &u, &big).unwrap());
        let cache = BruhatCache::new(64);
        assert!(!leq_cached(&rs, &cache, &u, &big).unwrap());
        assert!(!leq_cached(&rs, &cache, &u, &big).unwrap());
        assert!(cache.hits() >= 1);
        assert!(cache.is_consistent(&rs));
    }

    #[test]
    fn eviction_keeps_answers() {
        let rs = build_root_system(LieFamily::D, 5).unwrap();
        let p = ParabolicSubset::borel(5);
        let e = enumerate_wp(&rs, &p, EnumOptions::full()).unwrap();
        let cache = BruhatCache::new(8);
        for a in (0..e.total_count()).step_by(37) {
            for b in (0..e.total_count()).step_by(53) {
                let (u, w) = (e.element(a), e.element(b));
                assert_eq!(leq_cached(&rs, &cache, u, w).unwrap(), leq(&rs, u, w).unwrap());
            }
        }
        assert!(cache.len() <= 8);
    }

    #[test]
    fn index_version_matches() {
        let rs = build_root_system(LieFamily::B, 3).unwrap();
        let p = ParabolicSubset::maximal(3, 2).unwrap();
        let e = enumerate_wp(&rs, &p, EnumOptions::full()).unwrap();
        for a in 0..e.total_count() {
            for b in 0..e.total_count() {
                assert_eq!(leq_idx(&e, a, b), leq(&rs, e.element(a), e.element(b)).unwrap());
            }
        }
    }

    #[test]
    fn pair_stream() {
        let rs = build_root_system(LieFamily::B, 2).unwrap();
        let p = ParabolicSubset::maximal(2, 1).unwrap();
        let e = enumerate_wp(&rs, &p, EnumOptions::full()).unwrap();
        assert_eq!(incomparable_pairs_at(&e, 0, 2, None).count(), 0);
        // a chain: nothing is incomparable
        for i in 0..=3 {
            for j in 0..=3 {
                assert_eq!(incomparable_pairs_at(&e, i, j, None).filter(|_| i <= j).count(), 0);
            }
        }
        let rs = build_root_system(LieFamily::A, 3).unwrap();
        let p = ParabolicSubset::maximal(3, 2).unwrap();
        let e = enumerate_wp(&rs, &p, EnumOptions::full()).unwrap();
        let mut it = incomparable_pairs_at(&e, 2, 2, Some(1));
        assert_eq!(it.next(), None);
        assert!(it.truncated());
        assert_eq!(incomparable_pairs_at(&e, 2, 2, None).count(), 2);
    }
}
