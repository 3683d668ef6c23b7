//! Checks in Suzuki coordinates: U = A(n,θ) over GF(q), points (a,b).

use std::collections::HashSet;

use super::context::SuiteContext;
use super::{Outcome, Witness};
use crate::constructions::{norm, norm0, partition_classify, recompose, PartitionTag};
use crate::field::{FieldElement, FieldSpec};
use crate::moufang_set::MoufangSet;

/// Coordinate access for the index encoding `a·q + b`.
struct Coords<'a> {
    m: &'a MoufangSet,
    f: &'a FieldSpec,
    q: usize,
}

impl<'a> Coords<'a> {
    fn new(m: &'a MoufangSet) -> Self {
        let f = m.group().spec();
        Coords { m, f, q: f.order() as usize }
    }

    fn ix(&self, a: FieldElement, b: FieldElement) -> usize {
        a.bits() as usize * self.q + b.bits() as usize
    }

    fn of(&self, x: usize) -> (FieldElement, FieldElement) {
        (FieldElement::from_raw((x / self.q) as u32), FieldElement::from_raw((x % self.q) as u32))
    }

    fn inv(&self, a: FieldElement) -> FieldElement {
        self.f.inv(a).expect("nonzero")
    }

    fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.f.div(a, b).expect("nonzero")
    }

    fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.f.nonzero_elements()
    }

    /// Additive commutator `-x - y + x + y`.
    fn commutator(&self, x: usize, y: usize) -> usize {
        let m = self.m;
        m.add(m.add(m.neg(x), m.neg(y)), m.add(x, y))
    }

    /// Mixed elements: a, b nonzero and b != a^(1+θ).
    fn mixed(&self) -> Vec<(FieldElement, FieldElement)> {
        let f = self.f;
        let mut out = Vec::new();
        for a in self.units() {
            for b in self.units() {
                if b != f.one_plus_theta(a) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

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

macro_rules! hua_or_fail {
    ($ctx:expr) => {
        match $ctx.hua() {
            Ok(h) => h,
            Err(e) => return Outcome::fail(0, e),
        }
    };
}

/// Central involutions, i.e. `Z(U)^#` computed generically.
fn z_sharp(ctx: &SuiteContext) -> Vec<usize> {
    ctx.center().iter().copied().filter(|&z| z != 0).collect()
}

// ---- the root group ----

pub(super) fn center(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let brute = ctx.center();
    let closed: Vec<usize> = c.f.elements().map(|b| c.ix(FieldElement::ZERO, b)).collect();
    if brute != closed.as_slice() {
        return Outcome::fail(1, Witness::new("center differs from {(0,b)}").value("|Z| brute force", brute.len()));
    }
    Outcome::pass(m.size() as u64)
}

pub(super) fn involutions(ctx: &SuiteContext) -> Outcome {
    let z = z_sharp(ctx);
    if ctx.involutions() != z.as_slice() {
        return Outcome::fail(1, Witness::new("involutions differ from Z(U)^#").value("involutions", ctx.involutions().len()));
    }
    Outcome::pass(ctx.n() as u64 - 1)
}

pub(super) fn exponent(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let out = ctx.sweep_nonzero(|x| ensure(m.times(x, 4) == 0, 1, || w(m, "x*4 != 0", &[("x", x)])));
    out.and(|| {
        if (1..ctx.n()).any(|x| m.times(x, 2) != 0) {
            Outcome::pass(1)
        } else {
            Outcome::fail(1, Witness::new("exponent divides 2"))
        }
    })
}

pub(super) fn doubling(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let z = ctx.center();
    let out = ctx.sweep(ctx.n(), |x| {
        let d = m.add(x, x);
        for &zz in z {
            if m.times(m.add(x, zz), 2) != d || !ctx.is_central(d) {
                return Err(w(m, "doubling not constant on cosets of Z(U) or not central", &[("x", x), ("z", zz)]));
            }
        }
        Ok(z.len() as u64)
    });
    out.and(|| {
        let images: HashSet<usize> = (0..ctx.n()).map(|x| m.add(x, x)).collect();
        if images.len() == z.len() {
            Outcome::pass(1)
        } else {
            Outcome::fail(1, Witness::new("doubling is not onto Z(U)").value("image size", images.len()))
        }
    })
}

pub(super) fn lambda_regular(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let g = m.group();
    let units: Vec<FieldElement> = c.units().collect();
    let maps: Vec<Vec<usize>> = units
        .iter()
        .map(|&l| (0..ctx.n()).map(|x| m.index_of(&g.h_lambda(l, &m.elem(x)).expect("element of U")).expect("in U")).collect())
        .collect();
    let n = ctx.n();
    let auto = ctx.sweep(units.len(), |i| {
        let h = &maps[i];
        for x in 0..n {
            for y in 0..n {
                if h[m.add(x, y)] != m.add(h[x], h[y]) {
                    return Err(w(m, "h_lambda is not additive", &[("x", x), ("y", y)]).value("lambda", units[i]));
                }
            }
        }
        let mut seen = h.clone();
        seen.sort_unstable();
        seen.dedup();
        ensure(seen.len() == n, (n * n) as u64, || Witness::new("h_lambda is not bijective").value("lambda", units[i]))
    });
    auto.and(|| {
        ctx.sweep(units.len(), |i| {
            for j in 0..units.len() {
                let prod = c.f.mul(units[i], units[j]);
                let k = units.iter().position(|&u| u == prod).expect("unit");
                if (0..n).any(|x| maps[k][x] != maps[j][maps[i][x]]) {
                    return Err(Witness::new("h_{lambda mu} != h_lambda h_mu").value("lambda", units[i]).value("mu", units[j]));
                }
            }
            let identity = (0..n).all(|x| maps[i][x] == x);
            ensure(identity == (units[i] == FieldElement::ONE), units.len() as u64, || {
                Witness::new("lambda -> h_lambda is not injective").value("lambda", units[i])
            })
        })
    })
    .and(|| {
        let inv = ctx.involutions();
        let Some(&first) = inv.first() else { return Outcome::fail(1, Witness::new("no involutions")) };
        let mut orbit: Vec<usize> = maps.iter().map(|h| h[first]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit == inv && orbit.len() == units.len() {
            Outcome::pass(inv.len() as u64)
        } else {
            Outcome::fail(1, Witness::new("Lambda is not regular on involutions").value("orbit size", orbit.len()))
        }
    })
}

pub(super) fn commutator(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let units: Vec<FieldElement> = c.units().collect();
    ctx.sweep(units.len(), |i| {
        let a = units[i];
        let x = c.ix(c.inv(a), FieldElement::ZERO);
        let y = c.ix(c.f.theta(a), FieldElement::ZERO);
        let expected = c.ix(FieldElement::ZERO, c.f.add(a, FieldElement::ONE));
        let got = c.commutator(x, y);
        ensure(got == expected, 1, || w(m, "[(a^-1,0),(a^theta,0)] != (0,a+1)", &[("x", x), ("y", y), ("commutator", got)]))
    })
}

// ---- tau, N and mu ----

pub(super) fn tau_squared(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep(m.points(), |p| {
        ensure(m.tau().apply(m.tau().apply(p)) == p, 1, || w(m, "tau^2 moves a point", &[("p", p)]))
    })
}

pub(super) fn norm_identities(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let f = c.f;
    ctx.sweep(ctx.n(), |x| {
        let (a, b) = c.of(x);
        let n = norm(f, a, b);
        let anisotropic = n.is_zero() == (x == 0);
        let factored = a.is_zero() || {
            let r = c.div(b, a);
            f.add(f.one_plus_theta(r), f.one_plus_theta(f.add(f.theta(a), r))) == n
        };
        let theta_n0 = f.theta(norm0(f, a, b)) == n;
        ensure(anisotropic && factored && theta_n0, 1, || {
            w(m, "norm identity fails", &[("x", x)]).value("N", n).value("anisotropic", anisotropic).value("factored", factored)
        })
    })
}

pub(super) fn mu_fiber(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let n = ctx.n();
    let norms: Vec<FieldElement> = (0..n).map(|x| c.of(x)).map(|(a, b)| norm(c.f, a, b)).collect();
    ctx.sweep_nonzero(|x| {
        for y in 1..n {
            if (ctx.fiber(x) == ctx.fiber(y)) != (norms[x] == norms[y]) {
                return Err(w(m, "mu_x = mu_y iff N(x) = N(y) fails", &[("x", x), ("y", y)]));
            }
        }
        Ok((n - 1) as u64)
    })
}

pub(super) fn hua(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let f = c.f;
    let g = m.group();
    ctx.sweep_nonzero(|x| {
        let (a, b) = c.of(x);
        let n = norm(f, a, b);
        let lambda = c.div(f.square(n), f.theta(n));
        let mu = m.mu_at(x);
        let ok = (0..m.size()).all(|p| {
            let expected = m.index_of(&g.h_lambda(lambda, &m.elem(p)).expect("in U")).expect("in U");
            mu.apply(m.tau().apply(p)) == expected
        });
        let ok_center = f.elements().all(|y| {
            mu.apply(m.tau().apply(c.ix(FieldElement::ZERO, y))) == c.ix(FieldElement::ZERO, f.mul(f.theta(n), y))
        });
        ensure(ok && ok_center, m.size() as u64, || w(m, "tau mu_x is not h_{N^(2-theta)}", &[("x", x)]).value("N", n))
    })
}

// ---- involutions and H ----

pub(super) fn sim_double(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_over(ctx.involutions(), |a| {
        let s = m.sim_at(a);
        ensure(m.add(s, s) == a, 1, || w(m, "(~a)*2 != a", &[("a", a), ("~a", s)]))
    })
}

pub(super) fn no_order_three(ctx: &SuiteContext) -> Outcome {
    let hua = hua_or_fail!(ctx);
    ctx.sweep(hua.order(), |i| {
        let h = &hua.elements()[i];
        ensure(h.order() != 3, 1, || Witness::new("element of order 3 in H").perm("h", h))
    })
}

pub(super) fn odd_degree(ctx: &SuiteContext) -> Outcome {
    let z = ctx.center().len();
    let ok = z.is_power_of_two() && z.trailing_zeros() % 2 == 1 && z * z == ctx.n();
    if ok {
        Outcome::pass(1)
    } else {
        Outcome::fail(1, Witness::new("|Z(U)| is not an odd power of 2 with |U| = |Z(U)|^2").value("|Z|", z).value("|U|", ctx.n()))
    }
}

pub(super) fn order_five(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_over(ctx.involutions(), |a| {
        let p = m.mu_at(a).then(&m.alpha_at(a));
        let o = p.order();
        ensure(o == 5, 1, || w(m, "mu_a alpha_a does not have order 5", &[("a", a)]).value("order", o))
    })
}

pub(super) fn transversal(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let z = ctx.center();
    let coset = |x: usize| z.iter().map(|&zz| m.add(x, zz)).min().expect("0 in Z");
    let reps: Vec<usize> = std::iter::once(0).chain(z_sharp(ctx).into_iter().map(|a| m.sim_at(a))).collect();
    let mut ids: Vec<usize> = reps.iter().map(|&r| coset(r)).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() == reps.len() && reps.len() * z.len() == ctx.n() {
        Outcome::pass(reps.len() as u64)
    } else {
        Outcome::fail(reps.len() as u64, Witness::new("not a transversal of U/Z(U)").value("distinct cosets", ids.len()))
    }
}

pub(super) fn orbits2(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let zs = z_sharp(ctx);
    ctx.sweep_over(&zs, |a| {
        for &b in zs.iter().filter(|&&b| b != a) {
            let x = m.add(a, b);
            let y = m.add(m.neg(m.sim_at(a)), m.sim_at(b));
            if x == 0 || y == 0 || m.mu_at(x) != m.mu_at(y) {
                return Err(w(m, "mu_{a+b} != mu_{-~a+~b}", &[("a", a), ("b", b)]));
            }
        }
        Ok((zs.len() - 1) as u64)
    })
}

/// `-∼x + ∼y` with zero arguments reported.
fn diff_sim(m: &MoufangSet, x: usize, y: usize) -> Result<usize, String> {
    if x == 0 || y == 0 {
        return Err("~ of 0".into());
    }
    Ok(m.add(m.neg(m.sim_at(x)), m.sim_at(y)))
}

fn sim_checked(m: &MoufangSet, x: usize) -> Result<usize, String> {
    if x == 0 {
        Err("~ of 0".into())
    } else {
        Ok(m.sim_at(x))
    }
}

pub(super) fn sim_a(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let zs = z_sharp(ctx);
    ctx.sweep_over(&zs, |a| {
        for &b in zs.iter().filter(|&&b| b != a) {
            let eval = || -> Result<bool, String> {
                let k = m.mu_at(b).apply(m.mu_at(a).apply(a));
                let kb = m.add(k, b);
                if kb == 0 {
                    return Err("k+b = 0".into());
                }
                let lhs = sim_checked(m, diff_sim(m, a, b)?)?;
                let inner = m.mu_at(kb).apply(m.mu_at(b).apply(a));
                let mid = diff_sim(m, inner, kb)?;
                let rhs = diff_sim(m, m.add(a, k), m.add(b, k))?;
                Ok(lhs == mid && mid == rhs)
            };
            match eval() {
                Ok(true) => {}
                Ok(false) => return Err(w(m, "~(-~a+~b) identities fail", &[("a", a), ("b", b)])),
                Err(e) => return Err(w(m, &format!("~(-~a+~b) identities: {e}"), &[("a", a), ("b", b)])),
            }
        }
        Ok((zs.len() - 1) as u64)
    })
}

pub(super) fn sim_b(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let hua = hua_or_fail!(ctx);
    let hinv = match ctx.hua_inv() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    let zs = z_sharp(ctx);
    let k = hua.order();
    ctx.sweep_over(&zs, |e| {
        for gi in 0..k {
            for hi in (0..k).filter(|&hi| hi != gi) {
                let (g, h) = (&hua.elements()[gi], &hua.elements()[hi]);
                let eg = g.apply(e);
                let eh = h.apply(e);
                let ehhg = hinv[gi].apply(h.apply(h.apply(e)));
                let eval = || -> Result<bool, String> {
                    let lhs = sim_checked(m, diff_sim(m, eg, eh)?)?;
                    let rhs = m.add(m.neg(sim_checked(m, m.add(ehhg, eg))?), sim_checked(m, m.add(ehhg, eh))?);
                    Ok(lhs == rhs)
                };
                match eval() {
                    Ok(true) => {}
                    Ok(false) => return Err(w(m, "~(-~eg+~eh) identity fails", &[("e", e), ("eg", eg), ("eh", eh)])),
                    Err(er) => return Err(w(m, &format!("~(-~eg+~eh) identity: {er}"), &[("e", e), ("eg", eg), ("eh", eh)])),
                }
            }
        }
        Ok((k * (k - 1)) as u64)
    })
}

pub(super) fn sim_ab(ctx: &SuiteContext) -> Outcome {
    sim_a(ctx).and(|| sim_b(ctx))
}

pub(super) fn fixed_field(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let fixed = c.f.elements().filter(|&x| c.f.theta(x) == x).count();
    if fixed != 2 {
        return Outcome::fail(1, Witness::new("theta fixes more than GF(2)").value("fixed", fixed));
    }
    let hua = hua_or_fail!(ctx);
    let zs = z_sharp(ctx);
    let nontrivial: Vec<_> = hua.nontrivial().collect();
    ctx.sweep_over(&zs, |e| {
        let se = m.sim_at(e);
        for h in &nontrivial {
            let seh = m.sim_at(h.apply(e));
            if c.commutator(se, seh) == 0 {
                return Err(w(m, "~e and ~eh commute", &[("e", e), ("eh", h.apply(e))]));
            }
        }
        Ok(nontrivial.len() as u64)
    })
    .and(|| Outcome::pass(c.q as u64))
}

pub(super) fn not_in_orbits(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let zs = z_sharp(ctx);
    ctx.sweep_over(&zs, |a| {
        for &b in zs.iter().filter(|&&b| b != a) {
            let d = m.add(m.neg(m.sim_at(a)), m.sim_at(b));
            for &cc in &zs {
                let sc = m.sim_at(cc);
                if d == cc || d == sc || d == m.neg(sc) {
                    return Err(w(m, "-~a+~b lies in {c, ~c, -~c}", &[("a", a), ("b", b), ("c", cc)]));
                }
            }
        }
        Ok(((zs.len() - 1) * zs.len()) as u64)
    })
}

pub(super) fn sim_formula(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let f = c.f;
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    let e = c.ix(zero, one);
    if m.neg(m.sim_at(e)) != c.ix(one, zero) {
        return Outcome::fail(1, w(m, "-~(0,1) != (1,0)", &[("-~e", m.neg(m.sim_at(e)))]));
    }
    let units: Vec<FieldElement> = c.units().collect();
    let rest = ctx.sweep(units.len(), |i| {
        let a = units[i];
        let x = c.ix(zero, f.one_plus_theta(a));
        let s = m.sim_at(x);
        let ok = m.neg(s) == c.ix(a, zero) && s == c.ix(a, f.one_plus_theta(a));
        ensure(ok, 1, || w(m, "~(0,a^(1+theta)) formula fails", &[("x", x), ("~x", s)]))
    });
    Outcome::pass(1).and(|| rest)
}

pub(super) fn decomposition(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let mixed = c.mixed();
    let first = ctx.sweep(mixed.len(), |i| {
        let (a, b) = mixed[i];
        let x = c.ix(a, b);
        let class = partition_classify(m, &m.elem(x)).map_err(|e| Witness::new(e.to_string()))?;
        let Some((s, t)) = class.decomposition else {
            return Err(w(m, "mixed element has no decomposition", &[("x", x)]));
        };
        let back = recompose(m, s, t).map_err(|e| Witness::new(e.to_string()))?;
        ensure(back == m.elem(x) && !s.is_zero() && !t.is_zero() && s != t, 1, || {
            w(m, "-~(0,s^(1+theta)) + ~(0,t^(1+theta)) != (a,b)", &[("x", x)]).value("s", s).value("t", t)
        })
    });
    first.and(|| {
        let units: Vec<FieldElement> = c.units().collect();
        let mut seen = HashSet::new();
        let mut cases = 0;
        for &s in &units {
            for &t in units.iter().filter(|&&t| t != s) {
                cases += 1;
                let y = recompose(m, s, t).expect("nonzero arguments");
                let tag = partition_classify(m, &y).map(|cl| cl.tag);
                if tag != Ok(PartitionTag::Mixed) || !seen.insert(y) {
                    return Outcome::fail(cases, Witness::new("decomposition is not unique").value("s", s).value("t", t).value("image", y));
                }
            }
        }
        Outcome::pass(cases)
    })
}

pub(super) fn partition(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let zs = z_sharp(ctx);
    let sim_z: HashSet<usize> = zs.iter().map(|&z| m.sim_at(z)).collect();
    let neg_sim_z: HashSet<usize> = sim_z.iter().map(|&s| m.neg(s)).collect();
    ctx.sweep(ctx.n(), |x| {
        let tag = partition_classify(m, &m.elem(x)).map_err(|e| Witness::new(e.to_string()))?.tag;
        let generic = if x == 0 {
            PartitionTag::Zero
        } else if ctx.is_central(x) {
            PartitionTag::Center
        } else if sim_z.contains(&x) {
            PartitionTag::SimZ
        } else if neg_sim_z.contains(&x) {
            PartitionTag::NegSimZ
        } else {
            PartitionTag::Mixed
        };
        let overlap = [ctx.is_central(x), sim_z.contains(&x), neg_sim_z.contains(&x)].iter().filter(|&&b| b).count() > 1;
        ensure(tag == generic && !overlap, 1, || {
            w(m, "coordinate class differs from generic class", &[("x", x)]).value("coordinates", format!("{tag:?}")).value("generic", format!("{generic:?}"))
        })
    })
}

pub(super) fn norm0_mu(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    ctx.sweep_nonzero(|x| {
        let (a, b) = c.of(x);
        let y = c.ix(FieldElement::ZERO, norm0(c.f, a, b));
        ensure(y != 0 && m.mu_at(y) == m.mu_at(x), 1, || w(m, "mu_(0,N_0) != mu_(a,b)", &[("x", x), ("(0,N_0)", y)]))
    })
}

pub(super) fn formula2(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let hua = hua_or_fail!(ctx);
    let hinv = match ctx.hua_inv() {
        Ok(h) => h,
        Err(e) => return Outcome::fail(0, e),
    };
    let e = c.ix(FieldElement::ZERO, FieldElement::ONE);
    let k = hua.order();
    ctx.sweep(k, |gi| {
        for hi in (0..k).filter(|&hi| hi != gi) {
            let (g, h) = (&hua.elements()[gi], &hua.elements()[hi]);
            let target = m.add(hinv[gi].apply(e), hinv[hi].apply(e));
            let Some(ji) = (0..k).find(|&j| hua.elements()[j].apply(e) == target) else {
                return Err(w(m, "eg^-1 + eh^-1 is not in eH", &[("target", target)]));
            };
            let ejhh = hinv[hi].apply(hinv[hi].apply(hinv[ji].apply(e)));
            let eval = || -> Result<bool, String> {
                let d = diff_sim(m, g.apply(e), h.apply(e))?;
                let lhs = m.tau().apply(d);
                let rhs = diff_sim(m, ejhh, hinv[hi].apply(e))?;
                Ok(lhs == rhs)
            };
            match eval() {
                Ok(true) => {}
                Ok(false) => return Err(w(m, "(-~eg+~eh) tau formula fails", &[("eg", g.apply(e)), ("eh", h.apply(e))])),
                Err(er) => return Err(w(m, &format!("(-~eg+~eh) tau formula: {er}"), &[("eg", g.apply(e)), ("eh", h.apply(e))])),
            }
        }
        Ok((k - 1) as u64)
    })
}

fn tau_closed_form(ctx: &SuiteContext, what: &str, f: impl Fn(&Coords, FieldElement) -> (usize, usize) + Sync + Send) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let units: Vec<FieldElement> = c.units().collect();
    ctx.sweep(units.len(), |i| {
        let (x, expected) = f(&c, units[i]);
        let got = m.tau().apply(x);
        ensure(got == expected, 1, || w(m, what, &[("x", x), ("x tau", got), ("expected", expected)]))
    })
}

pub(super) fn tau_a(ctx: &SuiteContext) -> Outcome {
    tau_closed_form(ctx, "(0,a^(1+theta)) tau != (a^-1,0)", |c, a| {
        (c.ix(FieldElement::ZERO, c.f.one_plus_theta(a)), c.ix(c.inv(a), FieldElement::ZERO))
    })
}

pub(super) fn tau_b(ctx: &SuiteContext) -> Outcome {
    tau_closed_form(ctx, "(a,0) tau != (0,a^(-1-theta))", |c, a| {
        (c.ix(a, FieldElement::ZERO), c.ix(FieldElement::ZERO, c.inv(c.f.one_plus_theta(a))))
    })
}

pub(super) fn tau_c(ctx: &SuiteContext) -> Outcome {
    tau_closed_form(ctx, "(a,a^(1+theta)) tau != (a^-1,a^(-1-theta))", |c, a| {
        let n = c.f.one_plus_theta(a);
        (c.ix(a, n), c.ix(c.inv(a), c.inv(n)))
    })
}

pub(super) fn tau_d(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let f = c.f;
    let mixed = c.mixed();
    ctx.sweep(mixed.len(), |i| {
        let (a, b) = mixed[i];
        let x = c.ix(a, b);
        let (s, t) = partition_classify(m, &m.elem(x))
            .ok()
            .and_then(|cl| cl.decomposition)
            .ok_or_else(|| w(m, "mixed element without decomposition", &[("x", x)]))?;
        let n0 = norm0(f, a, b);
        // x -> x^(1+θ) is inverted by x -> x^(θ-1).
        let n = c.div(f.theta(n0), n0);
        if f.one_plus_theta(n) != n0 {
            return Err(w(m, "N^(1+theta) != N_0", &[("x", x)]).value("N", n));
        }
        let u = f.add(c.div(s, f.mul(n, t)), c.inv(t));
        let expected = c.ix(u, c.div(u, f.theta(t)));
        let got = m.tau().apply(x);
        ensure(got == expected, 1, || w(m, "(a,b) tau closed form fails", &[("x", x), ("x tau", got), ("expected", expected)]))
    })
}

pub(super) fn tits(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let c = Coords::new(m);
    let f = c.f;
    if let Some(x) = f.elements().find(|&x| f.theta(f.theta(x)) != f.square(x)) {
        return Outcome::fail(1, Witness::new("theta^2 is not the Frobenius map").value("x", x));
    }
    let one = FieldElement::ONE;
    let e = c.ix(FieldElement::ZERO, one);
    let candidates: Vec<FieldElement> = c.units().filter(|&a| a != one).collect();
    ctx.sweep(candidates.len(), |i| {
        let a = candidates[i];
        let ai = c.inv(a);
        let lhs = m.tau().apply(c.ix(f.add(a, one), f.mul(a, f.add(f.theta(a), one))));
        let r = m.tau().apply(c.ix(f.add(ai, one), f.mul(ai, f.add(c.inv(f.theta(a)), one))));
        let ok = lhs < m.size() && r < m.size() && lhs == m.add(r, e);
        ensure(ok, 1, || w(m, "tau relation for theta fails", &[("lhs", lhs), ("rhs tau", r)]).value("a", a))
    })
    .with_note(format!("plus theta^2 = Frobenius on {} elements", c.q))
}

// ---- the finite Suzuki conditions ----

pub(super) fn t61c(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let zs = z_sharp(ctx);
    let mut count = vec![0u32; ctx.n()];
    for &z in ctx.center() {
        count[z] += 1;
    }
    for &z in &zs {
        count[m.sim_at(z)] += 1;
        count[m.neg(m.sim_at(z))] += 1;
    }
    for &a in &zs {
        for &b in zs.iter().filter(|&&b| b != a) {
            count[m.add(m.neg(m.sim_at(a)), m.sim_at(b))] += 1;
        }
    }
    let cases = (ctx.center().len() + 2 * zs.len() + zs.len() * (zs.len() - 1)) as u64;
    match count.iter().position(|&k| k != 1) {
        None => Outcome::pass(cases),
        Some(x) => Outcome::fail(cases, w(m, "element covered other than exactly once", &[("x", x)]).value("times", count[x])),
    }
}

pub(super) fn t61d(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    let hua = hua_or_fail!(ctx);
    let zs = z_sharp(ctx);
    let Some(&first) = zs.first() else { return Outcome::fail(1, Witness::new("Z(U) is trivial")) };
    let orbit: HashSet<usize> = hua.elements().iter().map(|h| h.apply(first)).collect();
    ctx.sweep_over(&zs, |z| ensure(orbit.contains(&z), 1, || w(m, "H is not transitive on Z(U)^#", &[("first", first), ("missed", z)])))
}

pub(super) fn t61e(ctx: &SuiteContext) -> Outcome {
    let m = ctx.m;
    ctx.sweep_nonzero(|a| {
        ensure(ctx.v(a).iter().any(|&b| ctx.is_central(b)), 1, || w(m, "V_a has no central element", &[("a", a)]))
    })
}

pub(super) fn t61cde(ctx: &SuiteContext) -> Outcome {
    t61c(ctx).and(|| t61d(ctx)).and(|| t61e(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_suzuki;

    #[test]
    fn index_encoding_matches_group() {
        let m = build_suzuki(8).unwrap();
        let c = Coords::new(&m);
        for x in 0..m.size() {
            let (a, b) = c.of(x);
            assert_eq!(m.index_of(&m.group().pair(a.bits(), b.bits()).unwrap()).unwrap(), x);
            assert_eq!(c.ix(a, b), x);
        }
    }
}
