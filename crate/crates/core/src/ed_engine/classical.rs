//! The symbol-side argument for `B_n(m)` and `D_{n+1}(m)`: positivity below
//! the threshold and the vanishing pair at it.

use rayon::prelude::*;
use serde::Serialize;

use super::{ed_closed_form, VarietySpec};
use crate::error::Result;
use crate::rootsys::LieFamily;
use crate::schubert_symbols::{
    dual_index_set, ed_symbolic, index_set, symbol_leq, threshold_inequality_b, threshold_inequality_d,
    vanishing_witness, GrassContext, SymbolTable,
};

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalReport {
    pub context: String,
    /// `2n` in type B, `2n + 1` in type D.
    pub threshold: usize,
    pub pairs_below_threshold: usize,
    pub inequality_failures: usize,
    pub order_failures: usize,
    pub witness_weight: usize,
    pub witness_vanishes: bool,
    pub symbolic_ed: usize,
    pub closed_form: usize,
}

impl ClassicalReport {
    pub fn passed(&self) -> bool {
        self.inequality_failures == 0
            && self.order_failures == 0
            && self.witness_vanishes
            && self.witness_weight == self.threshold
            && self.symbolic_ed == self.closed_form
            && self.closed_form + 1 == self.threshold
    }
}

pub fn verify_classical_construction(ctx: &GrassContext) -> Result<ClassicalReport> {
    let table = SymbolTable::new(ctx)?;
    let threshold = match ctx.family() {
        LieFamily::B => 2 * ctx.n(),
        _ => 2 * ctx.n() + 1,
    };
    let parts = table.partitions();
    let sets = table.index_sets();
    let duals: Vec<_> = sets.iter().map(|p| dual_index_set(p, ctx)).collect::<Result<_>>()?;
    let (pairs, ineq_fail, order_fail) = (0..parts.len())
        .into_par_iter()
        .map(|a| {
            let mut acc = (0usize, 0usize, 0usize);
            for b in 0..parts.len() {
                if parts[a].weight() + parts[b].weight() >= threshold {
                    continue;
                }
                acc.0 += 1;
                let ok = match ctx.family() {
                    LieFamily::B => threshold_inequality_b(&parts[a], &parts[b], ctx),
                    _ => threshold_inequality_d(&parts[a], &parts[b], ctx),
                };
                acc.1 += usize::from(!ok);
                acc.2 += usize::from(!symbol_leq(&duals[a], &sets[b], ctx));
            }
            acc
        })
        .reduce(|| (0, 0, 0), |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2));

    let (lam, mu) = vanishing_witness(ctx);
    let dual = dual_index_set(&index_set(&lam, ctx)?, ctx)?;
    let witness_vanishes = !symbol_leq(&dual, &index_set(&mu, ctx)?, ctx);
    let rank = ctx.rank();
    let closed_form = ed_closed_form(&VarietySpec::grassmannian(ctx.family(), rank, ctx.m())?)?;
    Ok(ClassicalReport {
        context: ctx.to_string(),
        threshold,
        pairs_below_threshold: pairs,
        inequality_failures: ineq_fail,
        order_failures: order_fail,
        witness_weight: lam.weight() + mu.weight(),
        witness_vanishes,
        symbolic_ed: ed_symbolic(ctx)?.ed,
        closed_form,
    })
}
