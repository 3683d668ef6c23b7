//! Checks that only use the Moufang set engine.

use super::context::{agrees, SuiteContext};
use super::{Outcome, Witness};
use crate::moufang_set::MoufangSet;

fn w(m: &MoufangSet, desc: &str, pts: &[(&str, usize)]) -> Witness {
    pts.iter().fold(Witness::new(desc), |acc, &(name, p)| acc.point(m, name, p))
}

fn ensure(ok: bool, cases: u64, witness: impl FnOnce() -> Witness) -> Result<u64, Witness> {
    if ok {
        Ok(cases)
    } else {
        Err(witness())
    }
}

/// Partial maps whose value might leave U. A step that lands on ∞ or needs a
/// nonzero argument it does not get is reported as a failure.
struct Ev<'a> {
    m: &'a MoufangSet,
}

impl Ev<'_> {
    fn in_u(&self, y: usize, what: &str) -> Result<usize, String> {
        if y == self.m.inf() {
            Err(format!("{what} is inf"))
        } else {
            Ok(y)
        }
    }

    fn nonzero(&self, x: usize, what: &str) -> Result<usize, String> {
        if x == 0 {
            Err(format!("{what} needs a nonzero argument"))
        } else {
            Ok(x)
        }
    }

    fn tau(&self, x: usize) -> Result<usize, String> {
        self.in_u(self.m.tau().apply(x), "x tau")
    }

    fn tau_inv(&self, x: usize) -> Result<usize, String> {
        self.in_u(self.m.tau_inv().apply(x), "x tau^-1")
    }

    fn mu(&self, a: usize, x: usize) -> Result<usize, String> {
        let a = self.nonzero(a, "mu")?;
        self.in_u(self.m.mu_at(a).apply(x), "x mu_a")
    }

    fn sim(&self, x: usize) -> Result<usize, String> {
        Ok(self.m.sim_at(self.nonzero(x, "~")?))
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.m.add(x, y)
    }

    fn neg(&self, x: usize) -> usize {
        self.m.neg(x)
    }

    fn sub(&self, x: usize, y: usize) -> usize {
        self.m.sub(x, y)
    }
}

// ---- L3.1 ----

pub(super) fn l31a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        ensure(m.mu_at(a).is_inverse_of(m.mu_at(m.neg(a))), 1, || {
            w(m, "mu_a^-1 != mu_{-a}", &[("a", a)]).perm("mu_a", m.mu_at(a)).perm("mu_-a", m.mu_at(m.neg(a)))
        })
    })
}

pub(super) fn l31b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    if !ctx.tau_inv_same_set() {
        return Outcome::inapplicable("M(U,tau) != M(U,tau^-1)");
    }
    ctx.sweep_nonzero(|a| {
        let at = m.tau().apply(a);
        let lhs = m.mu_at(at);
        let rhs = m.mu_at(m.neg(a)).conjugate_by(m.tau());
        ensure(*lhs == rhs, 1, || w(m, "mu_{a tau} != (mu_{-a})^tau", &[("a", a), ("a tau", at)]).perm("lhs", lhs).perm("rhs", &rhs))
    })
    .with_note("M(U,tau) = M(U,tau^-1) holds")
}

pub(super) fn l31c(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let n = ctx.n();
    ctx.sweep_nonzero(|a| {
        let mna = m.mu_at(m.neg(a));
        for b in 1..n {
            let mb = m.mu_at(b);
            let mbi = ctx.mu_inv(b);
            let c = mb.apply(a);
            let ok = c != 0 && c < n && agrees(m.mu_at(c), |x| mb.apply(mna.apply(mbi.apply(x))));
            if !ok {
                return Err(w(m, "mu_{a mu_b} != (mu_{-a})^{mu_b}", &[("a", a), ("b", b), ("a mu_b", c)]));
            }
        }
        Ok((n - 1) as u64)
    })
}

pub(super) fn l31d(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let hua = match ctx.hua() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    let chain = ctx.little_projective_chain();
    for h in hua.elements() {
        if h.apply(0) != 0 || h.apply(m.inf()) != m.inf() || !chain.contains(h) {
            return Outcome::fail(1, Witness::new("element of H outside the two-point stabilizer").perm("h", h));
        }
    }
    let stab = chain.stabilizer_order(2);
    if stab != hua.order() as u128 {
        return Outcome::fail(
            hua.order() as u64 + 1,
            Witness::new("|H| differs from the two-point stabilizer order").value("|H|", hua.order()).value("|G_0,inf|", stab),
        );
    }
    Outcome::pass(hua.order() as u64 + 1).with_note(format!("|H| = {stab}"))
}

pub(super) fn l31e(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let rhs = m.neg(m.mu_at(a).apply(m.neg(a)));
        ensure(m.sim_at(a) == rhs, 1, || w(m, "~a != -((-a) mu_a)", &[("a", a), ("~a", m.sim_at(a)), ("rhs", rhs)]))
    })
}

pub(super) fn l31f(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let na = m.neg(a);
        let mu = m.mu_at(na);
        let first = m.neg(m.sim_at(a));
        let last = m.sim_at(na);
        let ok = agrees(mu, |x| {
            let y = mu.apply(m.shift(x, first));
            m.shift(mu.apply(m.shift(y, a)), last)
        });
        ensure(ok, 1, || w(m, "mu_{-a} != alpha_{-~a} mu_{-a} alpha_a mu_{-a} alpha_{~-a}", &[("a", a)]))
    })
}

pub(super) fn l31g(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let (hua, hinv) = match ctx.hua().and_then(|h| Ok((h, ctx.hua_inv()?))) {
        Ok(x) => x,
        Err(e) => return Outcome::fail(0, e),
    };
    ctx.sweep_nonzero(|a| {
        let mu = m.mu_at(a);
        for (h, hi) in hua.elements().iter().zip(hinv) {
            let ah = h.apply(a);
            if !agrees(m.mu_at(ah), |x| h.apply(mu.apply(hi.apply(x)))) {
                return Err(w(m, "mu_{ah} != (mu_a)^h", &[("a", a), ("ah", ah)]).perm("h", h));
            }
        }
        Ok(hua.order() as u64)
    })
}

pub(super) fn l31h(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let hua = match ctx.hua() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    ctx.sweep_nonzero(|a| {
        for h in hua.elements() {
            if m.sim_at(h.apply(a)) != h.apply(m.sim_at(a)) {
                return Err(w(m, "~(ah) != (~a)h", &[("a", a), ("ah", h.apply(a))]).perm("h", h));
            }
        }
        Ok(hua.order() as u64)
    })
}

pub(super) fn l31i(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let na = m.neg(a);
        let sa = m.sim_at(a);
        let ok = m.mu_at(sa) == m.mu_at(na)
            && m.mu_at(a) == m.mu_at(m.neg(sa))
            && m.mu_at(a) == m.mu_at(m.sim_at(na));
        ensure(ok, 1, || w(m, "mu_{~a} = mu_{-a} = mu_a^-1 pattern broken", &[("a", a), ("~a", sa)]))
    })
}

pub(super) fn l31j(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let ok1 = m.sim_at(m.tau().apply(a)) == m.tau().apply(m.neg(a));
        let ok2 = m.neg(m.tau_inv().apply(a)) == m.tau_inv().apply(m.sim_at(a));
        ensure(ok1 && ok2, 1, || {
            w(m, if ok1 { "-(a tau^-1) != (~a) tau^-1" } else { "~(a tau) != (-a) tau" }, &[("a", a)])
        })
    })
}

pub(super) fn l31k(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let sim_neg_sim = m.sim_at(m.neg(m.sim_at(a)));
        let neg_sim_neg = m.neg(m.sim_at(m.neg(a)));
        let ok1 = m.mu_at(a).apply(a) == sim_neg_sim;
        let ok2 = m.mu_at(m.neg(a)).apply(a) == neg_sim_neg;
        let invol = m.mu_at(a).is_inverse_of(m.mu_at(a));
        let ok3 = !invol || neg_sim_neg == sim_neg_sim;
        ensure(ok1 && ok2 && ok3, 1, || {
            let what = if !ok1 {
                "a mu_a != ~-~a"
            } else if !ok2 {
                "a mu_{-a} != -~-a"
            } else {
                "mu_a is an involution but -~-a != ~-~a"
            };
            w(m, what, &[("a", a)])
        })
    })
}

pub(super) fn l31l(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let mut cases = 0;
        let mai = ctx.mu_inv(a);
        for &b in ctx.v(a) {
            if b == a {
                continue;
            }
            cases += 1;
            let x = m.sub(mai.apply(a), mai.apply(b));
            let amb = m.sub(a, b);
            let ok1 = x != 0 && m.mu_at(x) == m.mu_at(amb);
            let y = m.add(m.neg(a), b);
            let z = m.add(m.neg(m.sim_at(a)), m.sim_at(b));
            let ok2 = y != 0 && z != 0 && m.mu_at(y) == m.mu_at(z);
            if !(ok1 && ok2) {
                return Err(w(m, "fiber identity broken", &[("a", a), ("b", b)]));
            }
        }
        Ok(cases)
    })
}

// ---- identities for c = (a tau^-1 - b tau^-1) tau ----

pub(super) fn e3a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let n = ctx.n();
    // Second model of the same set: rho = mu_x for the first nonzero x.
    let rho = m.mu_at(1);
    let rho_inv = ctx.mu_inv(1);
    ctx.sweep_nonzero(|a| {
        for b in (1..n).filter(|&b| b != a) {
            let c = m.tau().apply(m.sub(m.tau_inv().apply(a), m.tau_inv().apply(b)));
            let c_rho = rho.apply(m.sub(rho_inv.apply(a), rho_inv.apply(b)));
            let rhs = m.add(m.mu_at(b).apply(m.sub(a, b)), m.sim_at(b));
            if c != rhs || c_rho != rhs {
                return Err(w(m, "(a tau^-1 - b tau^-1) tau != (a-b) mu_b + ~b", &[("a", a), ("b", b), ("c", c), ("c via mu", c_rho), ("rhs", rhs)]));
            }
        }
        Ok((n - 2) as u64)
    })
}

pub(super) fn e3b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let n = ctx.n();
    ctx.sweep_nonzero(|a| {
        let mua = m.mu_at(a);
        for b in (1..n).filter(|&b| b != a) {
            let c = m.add(m.mu_at(b).apply(m.sub(a, b)), m.sim_at(b));
            let m1 = m.mu_at(m.neg(b));
            let m2 = m.mu_at(m.sub(b, a));
            if c == 0 || c >= n || !agrees(m.mu_at(c), |x| mua.apply(m2.apply(m1.apply(x)))) {
                return Err(w(m, "mu_c != mu_{-b} mu_{b-a} mu_a", &[("a", a), ("b", b), ("c", c)]));
            }
        }
        Ok((n - 2) as u64)
    })
}

pub(super) fn hua_mu(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let h = m.hua_at(a);
        let mu = m.mu_at(a);
        ensure(agrees(&h, |x| mu.apply(m.tau().apply(x))), 1, || w(m, "h_a != tau mu_a", &[("a", a)]).perm("h_a", &h))
    })
}

pub(super) fn va(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let va = ctx.v(a);
        let vna = ctx.v(m.neg(a));
        let mut neg: Vec<usize> = va.iter().map(|&b| m.neg(b)).collect();
        neg.sort_unstable();
        let ok1 = neg == vna;
        let ok2 = ctx.fiber(m.neg(m.sim_at(a))) == ctx.fiber(a);
        let ok3 = ctx.fiber(m.sim_at(m.neg(a))) == ctx.fiber(a);
        ensure(ok1 && ok2 && ok3, 1, || {
            let what = if !ok1 { "-V_a != V_{-a}" } else if !ok2 { "-~a not in V_a" } else { "~-a not in V_a" };
            w(m, what, &[("a", a)])
        })
    })
}

// ---- involutions ----

pub(super) fn l32a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_over(ctx.involutions(), |a| {
        let mu = m.mu_at(a);
        let mui = ctx.mu_inv(a);
        let sa = m.sim_at(a);
        let nsa = m.neg(sa);
        let ok1 = (0..m.points()).all(|x| m.shift(mu.apply(m.shift(x, sa)), nsa) == mu.apply(m.shift(mui.apply(x), a)));
        let ok2 = mu.is_inverse_of(mu);
        ensure(ok1 && ok2, 1, || {
            w(m, if ok1 { "mu_a is not an involution" } else { "(mu_a)^{alpha_{-~a}} != (alpha_a)^{mu_a}" }, &[("a", a)])
        })
    })
}

pub(super) fn l32b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_over(ctx.involutions(), |a| {
        let fixed = m.mu_at(a).fixed_points();
        ensure(fixed == [m.sim_at(a)], 1, || {
            w(m, "~a is not the unique fixed point of mu_a", &[("a", a), ("~a", m.sim_at(a))])
                .value("fixed points", fixed.len())
        })
    })
}

pub(super) fn l32c(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_over(ctx.involutions(), |a| {
        let x = m.sim_at(m.neg(m.sim_at(a)));
        let y = m.mu_at(a).apply(a);
        let z = m.neg(m.sim_at(a));
        ensure(x == y && y == z, 1, || w(m, "~-~a = a mu_a = -~a fails", &[("a", a), ("~-~a", x), ("a mu_a", y), ("-~a", z)]))
    })
}

pub(super) fn l33(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let inv = ctx.involutions();
    ctx.sweep_over(inv, |a| {
        for &b in inv.iter().filter(|&&b| b != a) {
            if m.mu_at(a) == m.mu_at(b) {
                return Err(w(m, "distinct involutions share mu", &[("a", a), ("b", b)]));
            }
        }
        Ok((inv.len() - 1) as u64)
    })
}

pub(super) fn l34(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let inv = ctx.involutions();
    ctx.sweep_over(inv, |a| {
        for &b in inv {
            let p = m.mu_at(a).then(m.mu_at(b));
            let o = p.order();
            if o.is_multiple_of(2) {
                return Err(w(m, "mu_a mu_b has even order", &[("a", a), ("b", b)]).value("order", o));
            }
        }
        Ok(inv.len() as u64)
    })
}

// ---- special elements ----

pub(super) fn l37(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let family = match ctx.rho_family() {
        Ok(f) => f,
        Err(e) => return Outcome::fail(0, e),
    };
    ctx.sweep_nonzero(|a| {
        let na = m.neg(a);
        let ti = m.tau_inv();
        let rho_ok = |r: &super::context::Rho| r.rho_inv.apply(na) == m.neg(r.rho_inv.apply(a));
        let crit = [
            ti.apply(na) == m.neg(ti.apply(a)),
            m.sim_at(a) == na,
            m.mu_at(a).apply(na) == a,
            m.mu_at(na).apply(a) == na,
            family.iter().all(rho_ok),
            family.iter().any(rho_ok),
            m.mu_at(a).apply(na) == m.neg(m.mu_at(a).apply(a)),
        ];
        ensure(crit.iter().all(|&c| c == crit[0]), 1, || {
            let flags: String = crit.iter().map(|&c| if c { '1' } else { '0' }).collect();
            w(m, "characterizations of special disagree", &[("a", a)]).value("criteria a..g", flags)
        })
    })
    .with_note(format!("{} maps rho checked", family.len()))
}

macro_rules! special_or_fail {
    ($ctx:expr) => {
        match $ctx.special() {
            Ok(s) => s,
            Err(e) => return Outcome::fail(0, e),
        }
    };
}

pub(super) fn l39a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    ctx.sweep_nonzero(|a| ensure(sp[a] == sp[m.neg(a)], 1, || w(m, "a special but -a not (or conversely)", &[("a", a)])))
}

pub(super) fn l39b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    ctx.sweep_over(ctx.involutions(), |a| {
        let ati = m.tau_inv().apply(a);
        ensure(sp[a] == m.is_involution(ati), 1, || w(m, "special iff a tau^-1 involution fails", &[("a", a), ("a tau^-1", ati)]))
    })
}

pub(super) fn l39c(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    let family = match ctx.rho_family() {
        Ok(f) => f,
        Err(e) => return Outcome::fail(0, e),
    };
    let domain: Vec<usize> = ctx.center().iter().copied().filter(|&a| a != 0 && sp[a]).collect();
    ctx.sweep_over(&domain, |a| {
        for r in family {
            let x = r.rho_inv.apply(a);
            if !ctx.is_central(x) {
                return Err(w(m, "a rho^-1 not central", &[("a", a), ("a rho^-1", x)]).value("rho", &r.label));
            }
        }
        Ok(family.len() as u64)
    })
}

pub(super) fn l310a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    let domain: Vec<usize> = (1..ctx.n()).filter(|&a| sp[a]).collect();
    ctx.sweep_over(&domain, |a| {
        let na = m.neg(a);
        ensure(m.mu_at(a).apply(a) == na && m.mu_at(na).apply(a) == na, 1, || w(m, "a mu_a = -a = a mu_{-a} fails", &[("a", a)]))
    })
}

pub(super) fn l310b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    let domain: Vec<usize> = (1..ctx.n()).filter(|&a| m.element_order(a) == 4).collect();
    ctx.sweep_over(&domain, |a| ensure(!sp[a], 1, || w(m, "element of order 4 is special", &[("a", a)])))
}

pub(super) fn l311(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    let hua = match ctx.hua() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    let domain: Vec<usize> = (1..ctx.n()).filter(|&a| sp[a]).collect();
    ctx.sweep_over(&domain, |a| {
        for h in hua.elements() {
            if !sp[h.apply(a)] {
                return Err(w(m, "ah not special", &[("a", a), ("ah", h.apply(a))]).perm("h", h));
            }
        }
        Ok(hua.order() as u64)
    })
}

pub(super) fn l312(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let n = ctx.n();
    let sp = special_or_fail!(ctx);
    ctx.sweep_nonzero(|a| {
        let mu = m.mu_at(a);
        let expected = m.alpha_at(a).conjugate_by(mu);
        let mut found = Vec::new();
        for x in 0..n {
            let b = ctx.u0(x);
            if agrees(mu, |p| b.apply(m.shift(b.apply(p), a))) {
                found.push(x);
            }
        }
        let exists = !found.is_empty();
        let ok = exists == sp[a] && (!exists || (ctx.in_u0(&expected) && found.iter().all(|&x| *ctx.u0(x) == expected)));
        ensure(ok, 1, || {
            w(m, "mu_a = b alpha_a b characterization fails", &[("a", a)])
                .value("special", sp[a])
                .value("solutions b in U_0", found.len())
        })
    })
}

// ---- consequences of a special central element a with b in V_a \ {a,-a} ----

/// Special central `a` with `μ_a = μ_{-a} = μ_a^-1`, when `M(U,τ) = M(U,τ^-1)`.
fn central_special(ctx: &SuiteContext) -> Result<Vec<usize>, Witness> {
    let m = ctx.m;
    if !ctx.tau_inv_same_set() {
        return Ok(Vec::new());
    }
    let sp = ctx.special()?;
    Ok(ctx
        .center()
        .iter()
        .copied()
        .filter(|&a| a != 0 && sp[a] && m.mu_at(a) == m.mu_at(m.neg(a)) && m.mu_at(a).is_inverse_of(m.mu_at(a)))
        .collect())
}

/// Pairs `(a, b)` with `a` as above and `b ∈ V_a \ {a, -a}`.
fn l313_pairs(ctx: &SuiteContext) -> Result<Vec<(usize, usize)>, Witness> {
    let m = ctx.m;
    let mut out = Vec::new();
    for a in central_special(ctx)? {
        for &b in ctx.v(a) {
            if b != a && b != m.neg(a) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

fn over_l313_pairs(ctx: &SuiteContext, what: &str, f: impl Fn(&Ev, usize, usize) -> Result<bool, String> + Sync + Send) -> Outcome {
    let m = ctx.m;
    let pairs = match l313_pairs(ctx) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(0, e),
    };
    let ev = Ev { m };
    let outcome = ctx.sweep(pairs.len(), |i| {
        let (a, b) = pairs[i];
        match f(&ev, a, b) {
            Ok(true) => Ok(1),
            Ok(false) => Err(w(m, what, &[("a", a), ("b", b)])),
            Err(e) => Err(w(m, &format!("{what}: {e}"), &[("a", a), ("b", b)])),
        }
    });
    if pairs.is_empty() {
        outcome.with_note("no special central a with V_a larger than {a,-a}")
    } else {
        outcome
    }
}

pub(super) fn l313a(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "-(b-a) mu_a + (a-b) mu_a != ~-b + a - ~b", |e, a, b| {
        let lhs = e.add(e.neg(e.mu(a, e.sub(b, a))?), e.mu(a, e.sub(a, b))?);
        let rhs = e.sub(e.add(e.sim(e.neg(b))?, a), e.sim(b)?);
        Ok(lhs == rhs)
    })
}

pub(super) fn l313b(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "-(a-b) mu_a + (b-a) mu_a != b + a*2", |e, a, b| {
        let lhs = e.add(e.neg(e.mu(a, e.sub(a, b))?), e.mu(a, e.sub(b, a))?);
        Ok(lhs == e.add(b, e.add(a, a)))
    })
}

pub(super) fn l313c(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "-a*3 identities fail", |e, a, b| {
        let a3 = e.neg(e.add(a, e.add(a, a)));
        let snb = e.sim(e.neg(b))?;
        let sb = e.sim(b)?;
        let x = e.add(e.sub(snb, sb), b);
        let y = e.add(e.add(e.neg(sb), b), snb);
        let z = e.sub(e.add(b, snb), sb);
        Ok(a3 == x && x == y && y == z)
    })
}

pub(super) fn l313d(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "sum of the two c-values is not a", |e, a, b| {
        let c1 = e.tau(e.sub(e.tau_inv(e.neg(a))?, e.tau_inv(e.neg(b))?))?;
        let c2 = e.tau(e.sub(e.tau_inv(a)?, e.tau_inv(b)?))?;
        Ok(e.add(e.neg(c1), c2) == a && e.sub(c2, c1) == a)
    })
}

pub(super) fn l313e(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "(a-b) tau - (-a-~b) tau != a tau", |e, a, b| {
        let x = e.tau(e.sub(a, b))?;
        let y = e.tau(e.sub(e.neg(a), e.sim(b)?))?;
        Ok(e.sub(x, y) == e.tau(a)?)
    })
}

pub(super) fn l313f(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "tau^-1 sum identity fails", |e, a, b| {
        let bti = e.tau_inv(b)?;
        let ati = e.tau_inv(a)?;
        let x = e.tau(e.sub(e.neg(bti), ati))?;
        let y = e.tau(e.sub(e.tau_inv(e.neg(b))?, ati))?;
        Ok(e.add(e.neg(x), y) == e.sub(e.neg(e.sim(b)?), a))
    })
}

pub(super) fn l313g(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "-(-a-b) tau + (~b-a) tau != -~(b tau) - a tau", |e, a, b| {
        let x = e.tau(e.sub(e.neg(a), b))?;
        let y = e.tau(e.sub(e.sim(b)?, a))?;
        let rhs = e.sub(e.neg(e.sim(e.tau(b)?)?), e.tau(a)?);
        Ok(e.add(e.neg(x), y) == rhs)
    })
}

pub(super) fn l313h(ctx: &SuiteContext) -> Outcome {
    over_l313_pairs(ctx, "-(-a-b) mu_a + (~b-a) mu_a != ~b + a", |e, a, b| {
        let x = e.mu(a, e.sub(e.neg(a), b))?;
        let y = e.mu(a, e.sub(e.sim(b)?, a))?;
        Ok(e.add(e.neg(x), y) == e.add(e.sim(b)?, a))
    })
}

pub(super) fn l313i(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let domain = match central_special(ctx) {
        Ok(d) => d,
        Err(e) => return Outcome::fail(0, e),
    };
    let sp = special_or_fail!(ctx);
    ctx.sweep_over(&domain, |a| {
        let extra = ctx.v(a).iter().copied().find(|&b| sp[b] && b != a && b != m.neg(a));
        match extra {
            None => Ok(1),
            Some(b) => Err(w(m, "V_a has a special element other than a, -a", &[("a", a), ("b", b)])),
        }
    })
}

pub(super) fn p314(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    over_l313_pairs(ctx, "mu_a = mu_{a-b} mu_{a*5+b} mu_{a-b} fails", |_, a, b| {
        let amb = m.sub(a, b);
        let a5b = m.add(m.times(a, 5), b);
        if a5b == 0 {
            return Err("a*5+b = 0".into());
        }
        let (x, y) = (m.mu_at(amb), m.mu_at(a5b));
        let ok1 = agrees(m.mu_at(a), |p| x.apply(y.apply(x.apply(p))));
        let apb = m.add(a, b);
        let ok2 = !m.is_involution(a) || (apb != 0 && m.mu_at(a) == m.mu_at(apb));
        Ok(ok1 && ok2)
    })
}

pub(super) fn l315(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let sp = special_or_fail!(ctx);
    let heads: Vec<usize> = ctx.center().iter().copied().filter(|&a| m.is_involution(a) && sp[a]).collect();
    let mut pairs = Vec::new();
    for &a in &heads {
        for x in 1..ctx.n() {
            let xa = m.add(x, a);
            if xa != 0 && m.mu_at(xa) == m.mu_at(x) && m.mu_at(x) == m.mu_at(m.neg(x)) {
                pairs.push((a, x));
            }
        }
    }
    ctx.sweep(pairs.len(), |i| {
        let (a, x) = pairs[i];
        ensure(m.mu_at(x) == m.mu_at(a), 1, || w(m, "mu_x != mu_a", &[("a", a), ("x", x)]))
    })
}

pub(super) fn p317(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let n = ctx.n();
    let sp = special_or_fail!(ctx);
    let proper = ctx.hua().map(|h| h.order() > 1).unwrap_or(false);
    // Nilpotent: U is a finite 2-group.
    let nilpotent = n.is_power_of_two();
    let hypothesis = (1..n).all(|b| ctx.v(b).iter().any(|&a| sp[a] && m.is_involution(a) && ctx.is_central(a)));
    if !(proper && nilpotent && hypothesis) {
        return Outcome::vacuous("hypothesis fails: some V_b has no special central involution");
    }
    ctx.sweep_nonzero(|x| {
        let ok = m.is_involution(x) && sp[x] && (1..n).all(|y| m.add(x, y) == m.add(y, x));
        ensure(ok, 1, || w(m, "U is not elementary abelian with every element special", &[("x", x)]))
    })
}

// ---- Zassenhaus conditions ----

pub(super) fn z4(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let hua = match ctx.hua() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    if hua.order() == 1 {
        return Outcome::fail(1, Witness::new("H is trivial"));
    }
    let nontrivial: Vec<_> = hua.nontrivial().collect();
    ctx.sweep_nonzero(|u| {
        for h in &nontrivial {
            if h.apply(u) == u {
                return Err(w(m, "nontrivial h in H fixes u", &[("u", u)]).perm("h", h));
            }
        }
        Ok(nontrivial.len() as u64)
    })
}

pub(super) fn l44(ctx: &SuiteContext) -> Outcome {
    let hua = match ctx.hua() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    if hua.order() % 2 == 0 {
        return Outcome::vacuous("|H| is even");
    }
    let elements = match ctx.little_projective_elements() {
        Ok(e) => e,
        Err(e) => return Outcome::inapplicable(format!("little projective group too large to enumerate ({e})")),
    };
    let exec = ctx.m.exec();
    let is_inv: Vec<bool> = crate::sweep::map(exec, elements.len(), |i| {
        let g = &elements[i];
        !g.is_identity() && g.is_inverse_of(g)
    });
    let involutions: Vec<&crate::perm::Permutation> = elements.iter().zip(&is_inv).filter(|(_, &b)| b).map(|(g, _)| g).collect();
    let Some(first) = involutions.first() else {
        return Outcome::vacuous("no involutions");
    };
    let class: std::collections::HashSet<crate::perm::Permutation> =
        crate::sweep::map(exec, elements.len(), |i| first.conjugate_by(&elements[i])).into_iter().collect();
    match involutions.iter().find(|g| !class.contains(**g)) {
        None => Outcome::pass(involutions.len() as u64).with_note(format!("{} involutions in one class", involutions.len())),
        Some(g) => Outcome::fail(involutions.len() as u64, Witness::new("involution outside the class of the first").perm("first", first).perm("other", g)),
    }
}

pub(super) fn l45a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let hua = match ctx.hua() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    let inv = ctx.involutions();
    let Some(&first) = inv.first() else {
        return Outcome::vacuous("no involutions");
    };
    let mut orbit: Vec<usize> = hua.elements().iter().map(|h| h.apply(first)).collect();
    orbit.sort_unstable();
    orbit.dedup();
    ctx.sweep_over(inv, |a| {
        ensure(orbit.binary_search(&a).is_ok() && ctx.is_central(a), 1, || {
            w(m, if ctx.is_central(a) { "involution outside the H-orbit" } else { "involution not central" }, &[("a", a), ("first", first)])
        })
    })
}

pub(super) fn l45b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        let count = ctx.v(a).iter().filter(|&&b| m.is_involution(b)).count();
        let mu = m.mu_at(a);
        ensure(count == 1 && mu.is_inverse_of(mu), 1, || {
            w(m, "V_a does not have exactly one involution, or mu_a is not an involution", &[("a", a)]).value("involutions in V_a", count)
        })
    })
}

pub(super) fn l45c(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let (hua, hinv) = match ctx.hua().and_then(|h| Ok((h, ctx.hua_inv()?))) {
        Ok(x) => x,
        Err(e) => return Outcome::fail(0, e),
    };
    if !hua.is_cyclic() {
        return Outcome::fail(1, Witness::new("H is not cyclic").value("|H|", hua.order()));
    }
    let mu = m.mu_at(1);
    let k = hua.order();
    ctx.sweep(k, |i| {
        let nn = hua.elements()[i].then(mu);
        for (h, hi) in hua.elements().iter().zip(hinv) {
            if h.conjugate_by(&nn) != *hi {
                return Err(Witness::new("element of N \\ H does not invert h").perm("n", &nn).perm("h", h));
            }
        }
        Ok(k as u64)
    })
    .with_note(format!("N \\ H = H mu_{}", m.describe(1)))
}
