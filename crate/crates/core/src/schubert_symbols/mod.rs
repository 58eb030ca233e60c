//! k-strict partitions and index sets for the orthogonal Grassmannians
//! `OG(m, 2n+1)` (type B) and `OG(m, 2n+2)` (type D).

pub mod dictionary;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coset;
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, LieFamily, ParabolicSubset, RootSystem};

pub use dictionary::Dictionary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassContext {
    family: LieFamily,
    n: usize,
    m: usize,
    k: usize,
    big_n: usize,
}

impl GrassContext {
    /// `OG(m, 2n+1)`, the Grassmannian `B_n(m)`.
    pub fn b(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 1 || m > n {
            return Err(Error::InvalidContext(format!("type B needs n ≥ 2 and 1 ≤ m ≤ n, got n={n}, m={m}")));
        }
        Ok(GrassContext { family: LieFamily::B, n, m, k: n - m, big_n: 2 * n + 1 })
    }

    /// `OG(m, 2n+2)`, the Grassmannian `D_{n+1}(m)`.
    pub fn d(n: usize, m: usize) -> Result<Self> {
        if m < 2 || m >= n {
            return Err(Error::InvalidContext(format!("type D needs 2 ≤ m < n, got n={n}, m={m}")));
        }
        Ok(GrassContext { family: LieFamily::D, n, m, k: n + 1 - m, big_n: 2 * n + 2 })
    }

    pub fn new(family: LieFamily, n: usize, m: usize) -> Result<Self> {
        match family {
            LieFamily::B => Self::b(n, m),
            LieFamily::D => Self::d(n, m),
            other => Err(Error::InvalidContext(format!("no index-set calculus for type {other}"))),
        }
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// Dimension `N` of the ambient orthogonal space.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Rank of the root system: `n` in type B, `n + 1` in type D.
    pub fn rank(&self) -> usize {
        match self.family {
            LieFamily::B => self.n,
            _ => self.n + 1,
        }
    }

    pub fn root_system(&self) -> RootSystem {
        build_root_system(self.family, self.rank()).expect("context ranks are valid")
    }

    pub fn parabolic(&self) -> ParabolicSubset {
        ParabolicSubset::maximal(self.rank(), self.m).expect("node within rank")
    }

    pub fn dimension(&self) -> usize {
        coset::dimension(&self.root_system(), &self.parabolic())
    }

    /// `N − 2m − 1`, the constant in the small-pair threshold.
    fn threshold_base(&self) -> i64 {
        self.big_n as i64 - 2 * self.m as i64 - 1
    }
}

impl fmt::Display for GrassContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OG({}, {}) [{}{}({})]", self.m, self.big_n, self.family, self.rank(), self.m)
    }
}

/// A k-strict partition with exactly `m` parts (zeros allowed). The tag `t`
/// is used in type D only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KStrictPartition {
    pub parts: Vec<usize>,
    #[serde(default)]
    pub t: u8,
}

impl KStrictPartition {
    /// Pads `parts` with zeros to length `m` and validates it for `ctx`.
    pub fn new(parts: &[usize], t: u8, ctx: &GrassContext) -> Result<Self> {
        if parts.len() > ctx.m {
            return Err(Error::InvalidPartition(format!("{parts:?} has more than {} parts", ctx.m)));
        }
        let mut padded = parts.to_vec();
        padded.resize(ctx.m, 0);
        let lam = KStrictPartition { parts: padded, t };
        lam.validate(ctx)?;
        Ok(lam)
    }

    pub fn validate(&self, ctx: &GrassContext) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        let p = &self.parts;
        if p.len() != ctx.m {
            return bad(format!("{p:?} must have {} entries", ctx.m));
        }
        if p.windows(2).any(|w| w[0] < w[1]) {
            return bad(format!("{p:?} is not weakly decreasing"));
        }
        if p[0] > ctx.n + ctx.k {
            return bad(format!("{p:?} does not fit in the {}×{} rectangle", ctx.m, ctx.n + ctx.k));
        }
        if p.windows(2).any(|w| w[0] > ctx.k && w[0] == w[1]) {
            return bad(format!("{p:?} repeats a part larger than k = {}", ctx.k));
        }
        let has_k = p.contains(&ctx.k);
        match (ctx.family, has_k, self.t) {
            (LieFamily::B, _, 0) => Ok(()),
            (LieFamily::B, _, t) => bad(format!("type B partitions carry no tag, got t = {t}")),
            (_, false, 0) | (_, true, 1) | (_, true, 2) => Ok(()),
            (_, false, t) => bad(format!("{p:?} has no part equal to k, so t must be 0 (got {t})")),
            (_, true, t) => bad(format!("{p:?} has a part equal to k, so t must be 1 or 2 (got {t})")),
        }
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_j` for `1 ≤ j ≤ m`, with `λ_0 = n + k + 1`.
    fn part(&self, j: usize, ctx: &GrassContext) -> i64 {
        if j == 0 {
            (ctx.n + ctx.k + 1) as i64
        } else {
            self.parts[j - 1] as i64
        }
    }
}

impl fmt::Display for KStrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))?;
        if self.t != 0 {
            write!(f, " t={}", self.t)?;
        }
        Ok(())
    }
}

/// Increasing entries `p_1 < … < p_m` in `[1, N]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(pub Vec<usize>);

impl IndexSet {
    pub fn new(entries: Vec<usize>, ctx: &GrassContext) -> Result<Self> {
        let p = IndexSet(entries);
        p.validate(ctx)?;
        Ok(p)
    }

    pub fn validate(&self, ctx: &GrassContext) -> Result<()> {
        let p = &self.0;
        let bad = |msg: String| Err(Error::InvalidIndexSet(msg));
        if p.len() != ctx.m {
            return bad(format!("{p:?} must have {} entries", ctx.m));
        }
        if p.windows(2).any(|w| w[0] >= w[1]) {
            return bad(format!("{p:?} is not strictly increasing"));
        }
        if p[0] < 1 || p[ctx.m - 1] > ctx.big_n {
            return bad(format!("{p:?} leaves [1, {}]", ctx.big_n));
        }
        for (a, &x) in p.iter().enumerate() {
            for &y in &p[a + 1..] {
                if x + y == ctx.big_n + 1 {
                    return bad(format!("{p:?} pairs {x} with {y}"));
                }
            }
        }
        if ctx.family == LieFamily::B && p.contains(&(ctx.n + 1)) {
            return bad(format!("{p:?} contains the middle index {}", ctx.n + 1));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Every element of the index set of Schubert classes, each exactly once.
/// Partitions are listed lexicographically; in type D a partition with a
/// part equal to `k` appears as `t = 1` then `t = 2`.
pub fn enumerate_kstrict(ctx: &GrassContext) -> Vec<KStrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(ctx.m);
    fill(ctx, ctx.n + ctx.k, &mut cur, &mut out);
    out
}

fn fill(ctx: &GrassContext, max: usize, cur: &mut Vec<usize>, out: &mut Vec<KStrictPartition>) {
    if cur.len() == ctx.m {
        let has_k = cur.contains(&ctx.k);
        if ctx.family == LieFamily::D && has_k {
            out.push(KStrictPartition { parts: cur.clone(), t: 1 });
            out.push(KStrictPartition { parts: cur.clone(), t: 2 });
        } else {
            out.push(KStrictPartition { parts: cur.clone(), t: 0 });
        }
        return;
    }
    for part in 0..=max {
        cur.push(part);
        // a part above k forces the next one to be strictly smaller
        let next_max = if part > ctx.k { part - 1 } else { part };
        fill(ctx, next_max, cur, out);
        cur.pop();
    }
}

/// Whether `(i, j)` is a big pair: `λ_i + λ_j > N − 2m − 1 + j − i`, with
/// `(0, j)` always big.
pub fn is_big_pair(lam: &KStrictPartition, i: usize, j: usize, ctx: &GrassContext) -> Result<bool> {
    if i >= j || j > ctx.m {
        return Err(Error::InvalidContext(format!("pair ({i}, {j}) outside 0 ≤ i < j ≤ {}", ctx.m)));
    }
    if i == 0 {
        return Ok(true);
    }
    Ok(!small(lam, i, j, ctx))
}

#[inline]
fn small(lam: &KStrictPartition, i: usize, j: usize, ctx: &GrassContext) -> bool {
    lam.part(i, ctx) + lam.part(j, ctx) <= ctx.threshold_base() + j as i64 - i as i64
}

fn small_count(lam: &KStrictPartition, j: usize, ctx: &GrassContext) -> usize {
    (1..j).filter(|&i| small(lam, i, j, ctx)).count()
}

/// `f(λ, j)`: the number of big pairs `(i, j)` with `1 ≤ i < j`.
pub fn f_big_count(lam: &KStrictPartition, j: usize, ctx: &GrassContext) -> usize {
    j - 1 - small_count(lam, j, ctx)
}

/// `g(λ, t, j) ∈ {1, 2}` of type D.
pub fn g_value(lam: &KStrictPartition, j: usize, ctx: &GrassContext) -> usize {
    let lj = lam.part(j, ctx);
    let k = ctx.k as i64;
    if lj > k || (lj == k && lj < lam.part(j - 1, ctx) && (ctx.n + j + lam.t as usize).is_multiple_of(2)) {
        1
    } else {
        2
    }
}

/// `Φ(λ)` for `OG(m, 2n+1)`.
pub fn phi_index_set(lam: &KStrictPartition, ctx: &GrassContext) -> Result<IndexSet> {
    if ctx.family != LieFamily::B {
        return Err(Error::InvalidContext("Φ is defined in type B".into()));
    }
    lam.validate(ctx)?;
    let base = (ctx.n + ctx.k + 1) as i64;
    let entries = (1..=ctx.m)
        .map(|j| {
            let lj = lam.part(j, ctx);
            (base - lj + small_count(lam, j, ctx) as i64 + i64::from(lj <= ctx.k as i64)) as usize
        })
        .collect();
    Ok(IndexSet(entries))
}

/// `Ψ(λ, t)` for `OG(m, 2n+2)`.
pub fn psi_index_set(lam: &KStrictPartition, ctx: &GrassContext) -> Result<IndexSet> {
    if ctx.family != LieFamily::D {
        return Err(Error::InvalidContext("Ψ is defined in type D".into()));
    }
    lam.validate(ctx)?;
    let base = (ctx.n + ctx.k) as i64;
    let entries = (1..=ctx.m)
        .map(|j| {
            (base - lam.part(j, ctx) + small_count(lam, j, ctx) as i64 + g_value(lam, j, ctx) as i64) as usize
        })
        .collect();
    Ok(IndexSet(entries))
}

/// `Φ` or `Ψ` according to the family of `ctx`.
pub fn index_set(lam: &KStrictPartition, ctx: &GrassContext) -> Result<IndexSet> {
    match ctx.family {
        LieFamily::B => phi_index_set(lam, ctx),
        _ => psi_index_set(lam, ctx),
    }
}

/// Index set of the Poincaré dual class.
pub fn dual_index_set(p: &IndexSet, ctx: &GrassContext) -> Result<IndexSet> {
    p.validate(ctx)?;
    let m = ctx.m;
    let n = ctx.n;
    let entries = (1..=m)
        .map(|j| {
            let q = p.0[m - j];
            match ctx.family {
                LieFamily::B => 2 * n + 2 - q,
                _ if n.is_multiple_of(2) && (q == n + 1 || q == n + 2) => q,
                _ => 2 * n + 3 - q,
            }
        })
        .collect();
    Ok(IndexSet(entries))
}

/// Containment order of Schubert varieties: `X_P ⊆ X_Q`.
///
/// Type B is componentwise. Type D also compares Lagrangian families: at
/// every level `a` where both `P` and `Q` meet `(a, N − a]` in `n + 1 − a`
/// entries and agree on how many entries lie in `[1, a]`, the counts in
/// `(a, n + 1]` must have equal parity.
pub fn symbol_leq(p: &IndexSet, q: &IndexSet, ctx: &GrassContext) -> bool {
    let componentwise = p.0.iter().zip(&q.0).all(|(a, b)| a <= b);
    if ctx.family == LieFamily::B || !componentwise {
        return componentwise;
    }
    let (n, big_n) = (ctx.n, ctx.big_n);
    let count = |s: &[usize], lo: usize, hi: usize| s.iter().filter(|&&x| x > lo && x <= hi).count();
    (0..=n).all(|a| {
        let lagrangian = |s: &[usize]| count(s, a, big_n - a) == n + 1 - a;
        if lagrangian(&p.0) && lagrangian(&q.0) && count(&p.0, 0, a) == count(&q.0, 0, a) {
            count(&p.0, a, n + 1) % 2 == count(&q.0, a, n + 1) % 2
        } else {
            true
        }
    })
}

/// Componentwise order plus `q_i = n + 2 ⇒ p_i ≠ n + 1`. In type D this is
/// the `a = n` case of [`symbol_leq`] only, and it accepts some pairs that
/// are not contained, e.g. `{4,5}` and `{5,7}` for `D_5(2)`.
pub fn symbol_leq_two_condition(p: &IndexSet, q: &IndexSet, ctx: &GrassContext) -> bool {
    let componentwise = p.0.iter().zip(&q.0).all(|(a, b)| a <= b);
    match ctx.family {
        LieFamily::B => componentwise,
        _ => componentwise && p.0.iter().zip(&q.0).all(|(&a, &b)| !(b == ctx.n + 2 && a == ctx.n + 1)),
    }
}

fn f_inequality(lam: &KStrictPartition, mu: &KStrictPartition, ctx: &GrassContext) -> bool {
    let m = ctx.m;
    (1..=m).all(|j| {
        let lhs = (f_big_count(lam, m + 1 - j, ctx) + f_big_count(mu, j, ctx)) as i64;
        lhs <= (ctx.n + ctx.k) as i64 - lam.part(m + 1 - j, ctx) - mu.part(j, ctx)
    })
}

/// `f(λ, m+1−j) + f(μ, j) ≤ n + k − λ_{m+1−j} − μ_j` for every `j`.
pub fn threshold_inequality_b(lam: &KStrictPartition, mu: &KStrictPartition, ctx: &GrassContext) -> bool {
    f_inequality(lam, mu, ctx)
}

/// The type-D pair of conditions: `g(λ, t₁, m+1−j) + g(μ, t₂, j) ≥ 3` and the
/// `f` inequality, for every `j`.
pub fn threshold_inequality_d(lam: &KStrictPartition, mu: &KStrictPartition, ctx: &GrassContext) -> bool {
    let m = ctx.m;
    (1..=m).all(|j| g_value(lam, m + 1 - j, ctx) + g_value(mu, j, ctx) >= 3) && f_inequality(lam, mu, ctx)
}

/// The pair `λ = (1, …, 1)`, `μ = (n + k, 0, …, 0)` whose classes multiply to
/// zero.
pub fn vanishing_witness(ctx: &GrassContext) -> (KStrictPartition, KStrictPartition) {
    let ones = vec![1; ctx.m];
    // k ≥ 2 in type D, so neither partition has a part equal to k there
    let lam = KStrictPartition::new(&ones, 0, ctx).expect("(1^m) is k-strict");
    let mu = KStrictPartition::new(&[ctx.n + ctx.k], 0, ctx).expect("(n+k) is k-strict");
    (lam, mu)
}

/// All partitions with their index sets, and the inverse lookup.
#[derive(Debug, Clone)]
pub struct SymbolTable {
    ctx: GrassContext,
    partitions: Vec<KStrictPartition>,
    sets: Vec<IndexSet>,
    lookup: HashMap<IndexSet, usize>,
}

impl SymbolTable {
    pub fn new(ctx: &GrassContext) -> Result<Self> {
        let partitions = enumerate_kstrict(ctx);
        let sets: Vec<IndexSet> = partitions.iter().map(|l| index_set(l, ctx)).collect::<Result<_>>()?;
        let mut lookup = HashMap::with_capacity(sets.len());
        for (i, s) in sets.iter().enumerate() {
            if lookup.insert(s.clone(), i).is_some() {
                return Err(Error::InvalidContext(format!("index set {s} is hit twice in {ctx}")));
            }
        }
        Ok(SymbolTable { ctx: *ctx, partitions, sets, lookup })
    }

    pub fn context(&self) -> &GrassContext {
        &self.ctx
    }
    pub fn partitions(&self) -> &[KStrictPartition] {
        &self.partitions
    }
    pub fn index_sets(&self) -> &[IndexSet] {
        &self.sets
    }
    pub fn len(&self) -> usize {
        self.partitions.len()
    }
    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// Inverse of `Φ`/`Ψ`.
    pub fn partition_of(&self, p: &IndexSet) -> Result<&KStrictPartition> {
        p.validate(&self.ctx)?;
        self.lookup
            .get(p)
            .map(|&i| &self.partitions[i])
            .ok_or_else(|| Error::InvalidIndexSet(format!("{p} is not the symbol of any partition")))
    }

    fn position(&self, p: &IndexSet) -> Option<usize> {
        self.lookup.get(p).copied()
    }
}

/// Outcome of the symbol-side scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicEd {
    pub ed: usize,
    pub witness: Option<(KStrictPartition, KStrictPartition)>,
}

/// Smallest total weight `|λ| + |μ|` at which `P∨(λ) ⪯ P(μ)` fails, minus
/// one. The witness is the first failing pair in (weight, table) order.
pub fn ed_symbolic(ctx: &GrassContext) -> Result<SymbolicEd> {
    let table = SymbolTable::new(ctx)?;
    let duals: Vec<IndexSet> = table.sets.iter().map(|p| dual_index_set(p, ctx)).collect::<Result<_>>()?;
    let mut best: Option<(usize, usize, usize)> = None;
    for (a, lam) in table.partitions.iter().enumerate() {
        for (b, mu) in table.partitions.iter().enumerate() {
            let weight = lam.weight() + mu.weight();
            if best.is_some_and(|(w, _, _)| weight >= w) {
                continue;
            }
            if !symbol_leq(&duals[a], &table.sets[b], ctx) {
                best = Some((weight, a, b));
            }
        }
    }
    let dim = ctx.dimension();
    Ok(match best {
        Some((weight, a, b)) => SymbolicEd {
            ed: weight - 1,
            witness: Some((table.partitions[a].clone(), table.partitions[b].clone())),
        },
        // every product is nonzero up to the top degree
        None => SymbolicEd { ed: 2 * dim, witness: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[usize], t: u8, ctx: &GrassContext) -> KStrictPartition {
        KStrictPartition::new(parts, t, ctx).unwrap()
    }

    #[test]
    fn b_small_examples() {
        let ctx = GrassContext::b(2, 1).unwrap();
        let all = enumerate_kstrict(&ctx);
        assert_eq!(all.len(), 4);
        let sets: Vec<Vec<usize>> = all.iter().map(|l| phi_index_set(l, &ctx).unwrap().0).collect();
        assert_eq!(sets, vec![vec![5], vec![4], vec![2], vec![1]]);
        let four = IndexSet::new(vec![4], &ctx).unwrap();
        assert_eq!(dual_index_set(&four, &ctx).unwrap().0, vec![2]);

        let ctx = GrassContext::b(3, 2).unwrap();
        assert_eq!(phi_index_set(&lam(&[3, 1], 0, &ctx), &ctx).unwrap().0, vec![2, 5]);
        let p = IndexSet::new(vec![2, 5], &ctx).unwrap();
        assert_eq!(dual_index_set(&p, &ctx).unwrap().0, vec![3, 6]);
        let l42 = lam(&[4, 2], 0, &ctx);
        assert!(is_big_pair(&l42, 1, 2, &ctx).unwrap());
        assert_eq!(f_big_count(&l42, 2, &ctx), 1);
        assert!(is_big_pair(&l42, 0, 2, &ctx).unwrap());
        assert!(!is_big_pair(&lam(&[], 0, &ctx), 1, 2, &ctx).unwrap());
        assert!(is_big_pair(&l42, 2, 2, &ctx).is_err());
    }

    #[test]
    fn zero_partition_gives_largest_set() {
        for ctx in [GrassContext::b(4, 2).unwrap(), GrassContext::d(5, 3).unwrap()] {
            let table = SymbolTable::new(&ctx).unwrap();
            let zero = index_set(&lam(&[], 0, &ctx), &ctx).unwrap();
            assert_eq!(table.index_sets().iter().max().unwrap(), &zero);
        }
    }

    #[test]
    fn d_g_function() {
        let ctx = GrassContext::d(4, 2).unwrap();
        assert_eq!(ctx.k(), 3);
        assert_eq!(g_value(&lam(&[3, 3], 1, &ctx), 1, &ctx), 1);
        assert_eq!(g_value(&lam(&[3, 3], 2, &ctx), 1, &ctx), 2);
    }

    #[test]
    fn partition_validation() {
        let ctx = GrassContext::d(4, 2).unwrap();
        assert!(KStrictPartition::new(&[3], 0, &ctx).is_err());
        assert!(KStrictPartition::new(&[4], 1, &ctx).is_err());
        assert!(KStrictPartition::new(&[5, 5], 0, &ctx).is_err());
        assert!(KStrictPartition::new(&[8], 0, &ctx).is_err());
        assert!(KStrictPartition::new(&[1, 2], 0, &ctx).is_err());
        assert!(KStrictPartition::new(&[2, 2], 0, &ctx).is_ok());
        let b = GrassContext::b(3, 2).unwrap();
        assert!(KStrictPartition::new(&[1, 1], 1, &b).is_err());
        assert!(IndexSet::new(vec![4, 5], &b).is_err());
        assert!(IndexSet::new(vec![2, 6], &b).is_err());
        assert!(IndexSet::new(vec![5, 2], &b).is_err());
        assert!(GrassContext::d(4, 4).is_err());
        assert!(GrassContext::b(3, 0).is_err());
    }

    #[test]
    fn d_condition_two_matters() {
        let ctx = GrassContext::d(4, 2).unwrap();
        let p = IndexSet(vec![2, 5]);
        let q = IndexSet(vec![3, 7]);
        assert!(symbol_leq(&p, &q, &ctx));
        let p = IndexSet(vec![2, 5]);
        let q = IndexSet(vec![2, 6]);
        assert!(!symbol_leq(&p, &q, &ctx));
        assert!(symbol_leq(&p, &p, &ctx));
    }

    #[test]
    fn d_family_parity_matters() {
        let ctx = GrassContext::d(4, 2).unwrap();
        let p = IndexSet(vec![4, 5]);
        let q = IndexSet(vec![5, 7]);
        assert!(symbol_leq_two_condition(&p, &q, &ctx));
        assert!(!symbol_leq(&p, &q, &ctx));
        let p = IndexSet(vec![4, 6]);
        let q = IndexSet(vec![6, 7]);
        assert!(!symbol_leq(&p, &q, &ctx));
        assert!(symbol_leq(&IndexSet(vec![3, 5]), &q, &ctx));
    }

    #[test]
    fn witness_fails_in_b32() {
        let ctx = GrassContext::b(3, 2).unwrap();
        let (l, m) = vanishing_witness(&ctx);
        let dual = dual_index_set(&phi_index_set(&l, &ctx).unwrap(), &ctx).unwrap();
        let q = phi_index_set(&m, &ctx).unwrap();
        assert_eq!(dual.0, vec![2, 3]);
        assert_eq!(q.0, vec![1, 6]);
        assert!(!symbol_leq(&dual, &q, &ctx));
        assert!(!threshold_inequality_b(&l, &m, &ctx));
    }
}
