use std::collections::HashSet;

use schubert_ed::bruhat::leq;
use schubert_ed::coset::{dimension, enumerate_wp, EnumOptions};
use schubert_ed::schubert_symbols::{
    dual_index_set, enumerate_kstrict, f_big_count, index_set, is_big_pair, symbol_leq, Dictionary, GrassContext,
    KStrictPartition, SymbolTable,
};
use schubert_ed::LieFamily;

fn contexts() -> Vec<GrassContext> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for m in 1..=n {
            out.push(GrassContext::b(n, m).unwrap());
        }
    }
    for n in 3..=5 {
        for m in 2..n {
            out.push(GrassContext::d(n, m).unwrap());
        }
    }
    out
}

fn big(lam: &KStrictPartition, i: usize, j: usize, ctx: &GrassContext) -> bool {
    is_big_pair(lam, i, j, ctx).unwrap()
}

#[test]
fn big_pairs_are_closed_downward() {
    for ctx in contexts() {
        let m = ctx.m();
        for lam in enumerate_kstrict(&ctx) {
            for j in 2..=m {
                for i in 1..j {
                    if big(&lam, i, j, &ctx) {
                        assert!(big(&lam, i - 1, j, &ctx), "{ctx} {lam}");
                        if i < j - 1 {
                            assert!(big(&lam, i, j - 1, &ctx), "{ctx} {lam}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn big_pairs_with_first_index_form_a_prefix() {
    for ctx in contexts() {
        let m = ctx.m();
        for lam in enumerate_kstrict(&ctx) {
            let firsts: Vec<bool> = (2..=m).map(|j| big(&lam, 1, j, &ctx)).collect();
            if let Some(last) = firsts.iter().rposition(|&b| b) {
                assert!(firsts[..=last].iter().all(|&b| b), "{ctx} {lam}");
            }
        }
    }
}

#[test]
fn f_counts_the_big_prefix() {
    for ctx in contexts() {
        for lam in enumerate_kstrict(&ctx) {
            for j in 1..=ctx.m() {
                let a = f_big_count(&lam, j, &ctx);
                assert!(a < j);
                for i in 0..j {
                    assert_eq!(big(&lam, i, j, &ctx), i <= a, "{ctx} {lam} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn index_maps_are_injective_and_count_the_cosets() {
    for ctx in contexts() {
        let parts = enumerate_kstrict(&ctx);
        let sets: HashSet<_> = parts.iter().map(|l| index_set(l, &ctx).unwrap()).collect();
        assert_eq!(sets.len(), parts.len(), "{ctx}");
        let rs = ctx.root_system();
        let e = enumerate_wp(&rs, &ctx.parabolic(), EnumOptions::full()).unwrap();
        assert_eq!(parts.len(), e.total_count(), "{ctx}");
        assert_eq!(ctx.dimension(), dimension(&rs, &ctx.parabolic()));
        for s in &sets {
            s.validate(&ctx).unwrap();
        }
    }
}

#[test]
fn type_d_tags_come_in_pairs() {
    for ctx in contexts().into_iter().filter(|c| c.family() == LieFamily::D) {
        let parts = enumerate_kstrict(&ctx);
        let ones = parts.iter().filter(|l| l.t == 1).count();
        let twos = parts.iter().filter(|l| l.t == 2).count();
        assert_eq!(ones, twos, "{ctx}");
        assert!(ones > 0);
    }
}

#[test]
fn type_d_entries_track_the_parts() {
    for ctx in contexts().into_iter().filter(|c| c.family() == LieFamily::D) {
        let (n, k) = (ctx.n(), ctx.k());
        for lam in enumerate_kstrict(&ctx) {
            let p = index_set(&lam, &ctx).unwrap();
            for j in 1..=ctx.m() {
                let (lj, pj) = (lam.parts[j - 1], p.entries()[j - 1]);
                let prev = if j == 1 { n + k + 1 } else { lam.parts[j - 2] };
                assert_eq!(lj <= k, pj > n, "{ctx} {lam}");
                assert_eq!(lj == k && k < prev, pj == n + 1 || pj == n + 2, "{ctx} {lam}");
            }
        }
    }
}

#[test]
fn dual_index_set_is_an_involution_and_complements_weight() {
    for ctx in contexts() {
        let table = SymbolTable::new(&ctx).unwrap();
        for (lam, p) in table.partitions().iter().zip(table.index_sets()) {
            let d = dual_index_set(p, &ctx).unwrap();
            assert_eq!(&dual_index_set(&d, &ctx).unwrap(), p);
            let dual_lam = table.partition_of(&d).unwrap();
            assert_eq!(lam.weight() + dual_lam.weight(), ctx.dimension(), "{ctx} {lam}");
        }
    }
}

#[test]
fn dictionary_order_matches_bruhat_order() {
    let mut ctxs = vec![GrassContext::b(3, 1).unwrap(), GrassContext::b(3, 2).unwrap(), GrassContext::d(4, 2).unwrap()];
    ctxs.extend([GrassContext::b(4, 4).unwrap(), GrassContext::d(4, 3).unwrap(), GrassContext::d(5, 3).unwrap()]);
    for ctx in ctxs {
        let dict = Dictionary::new(&ctx).unwrap();
        let e = dict.enumeration();
        let rs = e.root_system();
        for a in 0..e.total_count() {
            assert_eq!(dict.partition_of_weyl(e.element(a)).unwrap().weight(), e.length_of(a));
            for b in 0..e.total_count() {
                let by_symbol = symbol_leq(dict.symbol_at(a), dict.symbol_at(b), &ctx);
                assert_eq!(by_symbol, leq(rs, e.element(b), e.element(a)).unwrap(), "{ctx}");
            }
        }
    }
}

#[test]
fn dictionary_commutes_with_duality() {
    for ctx in [GrassContext::b(4, 2).unwrap(), GrassContext::d(4, 2).unwrap(), GrassContext::d(5, 2).unwrap()] {
        let dict = Dictionary::new(&ctx).unwrap();
        let e = dict.enumeration();
        for i in 0..e.total_count() {
            let j = e.dual_index(i).unwrap();
            assert_eq!(&dual_index_set(dict.symbol_at(i), &ctx).unwrap(), dict.symbol_at(j), "{ctx}");
        }
    }
}

#[test]
fn zero_partition_is_the_largest_index_set() {
    for ctx in contexts() {
        let zero = KStrictPartition::new(&[], 0, &ctx).unwrap();
        let p = index_set(&zero, &ctx).unwrap();
        let table = SymbolTable::new(&ctx).unwrap();
        assert!(table.index_sets().iter().all(|q| symbol_leq(q, &p, &ctx)), "{ctx}");
    }
}
