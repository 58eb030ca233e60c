//! Translation between minimal coset representatives and index sets.
//!
//! `W(B_n)` and `W(D_{n+1})` act on the basis `e_1, …, e_N` of the orthogonal
//! space as signed permutations, with `e_i` and `e_{N+1−i}` carrying opposite
//! signs. The torus-fixed point of the Schubert cell of codimension `ℓ(u)`
//! is `w₀u · ⟨e_1, …, e_m⟩`, and its index set is read off directly.

use std::collections::HashMap;

use super::{GrassContext, IndexSet, KStrictPartition, SymbolTable};
use crate::coset::{enumerate_wp, is_minimal_rep, EnumOptions, WpEnumeration};
use crate::error::{Error, Result};
use crate::rootsys::{LieFamily, RootSystem};
use crate::weyl::WeylElement;

/// Action of the simple reflection `s_a` on a signed letter `±v`.
fn reflect_letter(ctx: &GrassContext, a: usize, x: i32) -> i32 {
    let rank = ctx.rank() as i32;
    let a = a as i32;
    let (s, v) = (x.signum(), x.abs());
    if a < rank {
        return if v == a {
            s * (a + 1)
        } else if v == a + 1 {
            s * a
        } else {
            x
        };
    }
    match ctx.family() {
        LieFamily::B if v == rank => -x,
        LieFamily::D if v == rank - 1 => -s * rank,
        LieFamily::D if v == rank => -s * (rank - 1),
        _ => x,
    }
}

fn letter_to_index(ctx: &GrassContext, x: i32) -> usize {
    let big_n = ctx.big_n() as i32;
    match x {
        0 => ctx.n() + 1,
        x if x > 0 => x as usize,
        x => (big_n + 1 + x) as usize,
    }
}

/// Index set of `u ∈ W^{P_m}`, computed from the signed-permutation action.
pub fn symbol_of_weyl(rs: &RootSystem, u: &WeylElement, ctx: &GrassContext) -> Result<IndexSet> {
    check_context(rs, ctx)?;
    rs.check_context(u)?;
    if !is_minimal_rep(u, &ctx.parabolic()) {
        return Err(Error::NotMinimalRepresentative);
    }
    let mut word = rs.reduced_word(&rs.longest_element());
    word.extend(rs.reduced_word(u));
    let mut entries: Vec<usize> = (1..=ctx.m() as i32)
        .map(|start| {
            let x = word.iter().rev().fold(start, |x, &a| reflect_letter(ctx, a as usize, x));
            letter_to_index(ctx, x)
        })
        .collect();
    entries.sort_unstable();
    IndexSet::new(entries, ctx)
}

fn check_context(rs: &RootSystem, ctx: &GrassContext) -> Result<()> {
    if rs.family() != ctx.family() || rs.rank() != ctx.rank() {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// Both sides of the correspondence, enumerated and matched.
#[derive(Debug, Clone)]
pub struct Dictionary {
    ctx: GrassContext,
    table: SymbolTable,
    wp: WpEnumeration,
    symbols: Vec<IndexSet>,
    by_symbol: HashMap<IndexSet, usize>,
}

impl Dictionary {
    /// Fails if the Weyl-side index sets are not exactly the images of the
    /// partitions under `Φ`/`Ψ`.
    pub fn new(ctx: &GrassContext) -> Result<Self> {
        let rs = ctx.root_system();
        let wp = enumerate_wp(&rs, &ctx.parabolic(), EnumOptions::full())?;
        let table = SymbolTable::new(ctx)?;
        let symbols: Vec<IndexSet> =
            wp.elements().iter().map(|u| symbol_of_weyl(&rs, u, ctx)).collect::<Result<_>>()?;
        let mut by_symbol = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if by_symbol.insert(s.clone(), i).is_some() {
                return Err(Error::InvalidContext(format!("two coset representatives share the symbol {s}")));
            }
            if table.position(s).is_none() {
                return Err(Error::InvalidContext(format!("{s} is not in the image of the partition map")));
            }
        }
        if symbols.len() != table.len() {
            return Err(Error::InvalidContext(format!(
                "|W^P| = {} but there are {} partitions",
                symbols.len(),
                table.len()
            )));
        }
        Ok(Dictionary { ctx: *ctx, table, wp, symbols, by_symbol })
    }

    pub fn context(&self) -> &GrassContext {
        &self.ctx
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn enumeration(&self) -> &WpEnumeration {
        &self.wp
    }

    /// Index set of the element at flat position `idx` of the enumeration.
    pub fn symbol_at(&self, idx: usize) -> &IndexSet {
        &self.symbols[idx]
    }

    pub fn symbol_of_weyl(&self, u: &WeylElement) -> Result<IndexSet> {
        if !is_minimal_rep(u, &self.ctx.parabolic()) {
            return Err(Error::NotMinimalRepresentative);
        }
        let idx = self.wp.index_of(u).ok_or(Error::ContextMismatch)?;
        Ok(self.symbols[idx].clone())
    }

    pub fn weyl_of_symbol(&self, p: &IndexSet) -> Result<WeylElement> {
        p.validate(&self.ctx)?;
        self.by_symbol
            .get(p)
            .map(|&i| *self.wp.element(i))
            .ok_or_else(|| Error::InvalidIndexSet(format!("{p} is not a Schubert symbol")))
    }

    pub fn partition_of_weyl(&self, u: &WeylElement) -> Result<KStrictPartition> {
        let p = self.symbol_of_weyl(u)?;
        self.table.partition_of(&p).cloned()
    }
}

/// Inverse of [`symbol_of_weyl`], through a freshly built dictionary.
pub fn weyl_of_symbol(p: &IndexSet, ctx: &GrassContext) -> Result<WeylElement> {
    Dictionary::new(ctx)?.weyl_of_symbol(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_zero_partition() {
        for ctx in [GrassContext::b(3, 2).unwrap(), GrassContext::d(4, 2).unwrap()] {
            let dict = Dictionary::new(&ctx).unwrap();
            let rs = ctx.root_system();
            let lam = dict.partition_of_weyl(&rs.identity()).unwrap();
            assert_eq!(lam.weight(), 0);
        }
    }

    #[test]
    fn weights_match_lengths() {
        let ctx = GrassContext::b(3, 2).unwrap();
        let dict = Dictionary::new(&ctx).unwrap();
        for u in dict.enumeration().elements() {
            let lam = dict.partition_of_weyl(u).unwrap();
            assert_eq!(lam.weight(), u.length());
            let p = dict.symbol_of_weyl(u).unwrap();
            assert_eq!(&dict.weyl_of_symbol(&p).unwrap(), u);
        }
    }

    #[test]
    fn rejects_non_representatives() {
        let ctx = GrassContext::b(3, 2).unwrap();
        let rs = ctx.root_system();
        let s1 = rs.from_word(&[1]).unwrap();
        assert!(symbol_of_weyl(&rs, &s1, &ctx).is_err());
        let dict = Dictionary::new(&ctx).unwrap();
        assert!(dict.symbol_of_weyl(&s1).is_err());
    }
}
