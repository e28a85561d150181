use super::{Ctx, Law};
use crate::relcore::Carrier;

/// Greedily removes carrier elements, then pairs, while the law keeps failing
/// and every variable stays in its kind. Returns a local minimum.
pub fn shrink(law: &Law, mut ctx: Ctx) -> Ctx {
    loop {
        if let Some(smaller) = drop_element(law, &ctx).or_else(|| drop_pair(law, &ctx)) {
            ctx = smaller;
        } else {
            return ctx;
        }
    }
}

fn accept(law: &Law, ctx: &Ctx) -> bool {
    law.in_signature(ctx) && law.fails(ctx)
}

fn drop_element(law: &Law, ctx: &Ctx) -> Option<Ctx> {
    for slot in 0..ctx.carriers.len() {
        let c = &ctx.carriers[slot];
        if c.size() <= 1 {
            continue;
        }
        for e in 0..c.size() {
            let smaller = Carrier::indexed(c.name(), c.size() - 1);
            let mut carriers = ctx.carriers.clone();
            carriers[slot] = smaller;
            let maps: Vec<Vec<usize>> = ctx
                .carriers
                .iter()
                .enumerate()
                .map(|(k, c)| (0..c.size()).filter(|&x| k != slot || x != e).collect())
                .collect();
            let vars = law
                .vars
                .iter()
                .zip(&ctx.vars)
                .map(|(v, r)| r.project(&carriers[v.src], &maps[v.src], &carriers[v.dst], &maps[v.dst]))
                .collect();
            let cand = Ctx { carriers, vars };
            if accept(law, &cand) {
                return Some(cand);
            }
        }
    }
    None
}

fn drop_pair(law: &Law, ctx: &Ctx) -> Option<Ctx> {
    for (i, r) in ctx.vars.iter().enumerate() {
        for (a, b) in r.pairs() {
            let mut cand = ctx.clone();
            cand.vars[i].remove(a, b);
            if accept(law, &cand) {
                return Some(cand);
            }
        }
    }
    None
}
