use std::collections::HashMap;
use std::sync::OnceLock;

use super::{Outcome, Witness};
use crate::moufang_set::{HuaSubgroup, MoufangError, MoufangSet};
use crate::perm::Permutation;
use crate::perm_group::{self, StabilizerChain, NAIVE_CLOSURE_CAP};
use crate::sweep;

/// A set under test plus lazily computed data shared between checks.
pub struct SuiteContext<'a> {
    pub m: &'a MoufangSet,
    hua: OnceLock<Result<HuaSubgroup, MoufangError>>,
    hua_inv: OnceLock<Vec<Permutation>>,
    center: OnceLock<Vec<usize>>,
    involutions: OnceLock<Vec<usize>>,
    fibers: OnceLock<Vec<usize>>,
    fiber_members: OnceLock<Vec<Vec<usize>>>,
    mu_inv: OnceLock<Vec<Permutation>>,
    u0: OnceLock<Vec<Permutation>>,
    special: OnceLock<Result<Vec<bool>, Witness>>,
    rho: OnceLock<Result<Vec<Rho>, Witness>>,
    tau_inv_same_set: OnceLock<bool>,
    chain: OnceLock<StabilizerChain>,
    gdagger: OnceLock<Result<Vec<Permutation>, MoufangError>>,
}

/// A map `ρ` with `M(U,ρ) = M(U,τ)`.
pub struct Rho {
    pub label: String,
    pub rho: Permutation,
    pub rho_inv: Permutation,
}

impl<'a> SuiteContext<'a> {
    pub fn new(m: &'a MoufangSet) -> Self {
        SuiteContext {
            m,
            hua: OnceLock::new(),
            hua_inv: OnceLock::new(),
            center: OnceLock::new(),
            involutions: OnceLock::new(),
            fibers: OnceLock::new(),
            fiber_members: OnceLock::new(),
            mu_inv: OnceLock::new(),
            u0: OnceLock::new(),
            special: OnceLock::new(),
            rho: OnceLock::new(),
            tau_inv_same_set: OnceLock::new(),
            chain: OnceLock::new(),
            gdagger: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.m.size()
    }

    pub fn hua(&self) -> Result<&HuaSubgroup, Witness> {
        self.hua
            .get_or_init(|| self.m.hua_subgroup())
            .as_ref()
            .map_err(|e| Witness::new(format!("could not enumerate H: {e}")))
    }

    /// Inverses of the elements of H, in the same order.
    pub fn hua_inv(&self) -> Result<&[Permutation], Witness> {
        let h = self.hua()?;
        Ok(self.hua_inv.get_or_init(|| h.elements().iter().map(Permutation::inverse).collect()))
    }

    /// `Z(U)` computed from the addition table; index 0 first.
    pub fn center(&self) -> &[usize] {
        self.center.get_or_init(|| {
            let n = self.n();
            (0..n).filter(|&z| (0..n).all(|x| self.m.add(x, z) == self.m.add(z, x))).collect()
        })
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.center().binary_search(&x).is_ok()
    }

    pub fn involutions(&self) -> &[usize] {
        self.involutions.get_or_init(|| (1..self.n()).filter(|&x| self.m.is_involution(x)).collect())
    }

    /// `fiber(a)` is the smallest `b` with `μ_b = μ_a`; `fiber(0) = 0`.
    pub fn fiber(&self, a: usize) -> usize {
        self.fibers.get_or_init(|| {
            let mut first: HashMap<&Permutation, usize> = HashMap::new();
            let mut out = vec![0; self.n()];
            for (a, slot) in out.iter_mut().enumerate().skip(1) {
                *slot = *first.entry(self.m.mu_at(a)).or_insert(a);
            }
            out
        })[a]
    }

    /// `V_a = {b : μ_b = μ_a}` in increasing order.
    pub fn v(&self, a: usize) -> &[usize] {
        let members = self.fiber_members.get_or_init(|| {
            let mut members = vec![Vec::new(); self.n()];
            for b in 1..self.n() {
                members[self.fiber(b)].push(b);
            }
            members
        });
        &members[self.fiber(a)]
    }

    pub fn mu_inv(&self, a: usize) -> &Permutation {
        &self.mu_inv.get_or_init(|| {
            std::iter::once(Permutation::identity(self.m.points()))
                .chain((1..self.n()).map(|a| self.m.mu_at(a).inverse()))
                .collect()
        })[a]
    }

    /// `U_0 = {α_x^τ}` indexed by x.
    pub fn u0(&self, x: usize) -> &Permutation {
        &self.u0.get_or_init(|| {
            let tau = self.m.tau();
            sweep::map(self.m.exec(), self.n(), |x| self.m.alpha_at(x).conjugate_by(tau))
        })[x]
    }

    /// Membership in `U_0`, decided by the image of ∞.
    pub fn in_u0(&self, g: &Permutation) -> bool {
        let y = g.apply(self.m.inf());
        if y == self.m.inf() {
            return g.is_identity();
        }
        let x = self.m.tau_inv().apply(y);
        x < self.n() && self.u0(x) == g
    }

    /// Whether `{α_x^ρ} = U_0`, i.e. `M(U,ρ) = M(U,τ)`. `ρ` must swap 0 and ∞.
    pub fn same_set(&self, rho: &Permutation, rho_inv: &Permutation) -> Option<usize> {
        let m = self.m;
        let inf = m.inf();
        if rho.apply(0) != inf || rho.apply(inf) != 0 {
            return Some(0);
        }
        sweep::find_first(m.exec(), self.n() - 1, |i| {
            let x = i + 1;
            let y = m.tau_inv().apply(rho.apply(x));
            if y >= self.n() {
                return Some(x);
            }
            let target = self.u0(y);
            let ok = (0..=self.n()).all(|p| rho.apply(m.shift(rho_inv.apply(p), x)) == target.apply(p));
            (!ok).then_some(x)
        })
    }

    pub fn tau_inv_same_set(&self) -> bool {
        *self.tau_inv_same_set.get_or_init(|| self.same_set(self.m.tau_inv(), self.m.tau()).is_none())
    }

    /// `τ` followed by `μ_b` for every `b ∈ U^#`, each verified to define the same set.
    pub fn rho_family(&self) -> Result<&[Rho], Witness> {
        self.rho
            .get_or_init(|| {
                let m = self.m;
                let mut family = vec![Rho { label: "tau".into(), rho: m.tau().clone(), rho_inv: m.tau_inv().clone() }];
                for b in 1..self.n() {
                    family.push(Rho {
                        label: format!("mu_{}", m.describe(b)),
                        rho: m.mu_at(b).clone(),
                        rho_inv: self.mu_inv(b).clone(),
                    });
                }
                for r in &family {
                    if let Some(x) = self.same_set(&r.rho, &r.rho_inv) {
                        return Err(Witness::new(format!("M(U,{}) differs from M(U,tau)", r.label))
                            .point(m, "x", x)
                            .perm("rho", &r.rho));
                    }
                }
                Ok(family)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Special flags per index (index 0 is `false`).
    pub fn special(&self) -> Result<&[bool], Witness> {
        self.special
            .get_or_init(|| {
                let mut out = vec![false; self.n()];
                for (a, slot) in out.iter_mut().enumerate().skip(1) {
                    *slot = self
                        .m
                        .is_special_at(a)
                        .map_err(|e| Witness::new(format!("special criteria disagree: {e}")).point(self.m, "a", a))?;
                }
                Ok(out)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Stabilizer chain of `G†` with base prefix (∞, 0).
    pub fn little_projective_chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| perm_group::moufang_chain(self.m, &self.m.little_projective_generators()))
    }

    /// All elements of `G†`, or the cap error when it is too large to list.
    pub fn little_projective_elements(&self) -> Result<&[Permutation], &MoufangError> {
        self.gdagger
            .get_or_init(|| {
                let order = self.little_projective_chain().order();
                if order > NAIVE_CLOSURE_CAP as u128 {
                    return Err(MoufangError::ClosureCap(NAIVE_CLOSURE_CAP));
                }
                perm_group::closure(&self.m.little_projective_generators(), self.m.points(), NAIVE_CLOSURE_CAP)
            })
            .as_ref()
            .map(Vec::as_slice)
    }

    /// Run `f` over `0..items`; `f` returns the number of cases it covered
    /// or a witness. The reported failure is the one with the smallest index.
    pub(crate) fn sweep<F>(&self, items: usize, f: F) -> Outcome
    where
        F: Fn(usize) -> Result<u64, Witness> + Sync + Send,
    {
        let results = sweep::map(self.m.exec(), items, f);
        let mut cases = 0;
        for r in results {
            match r {
                Ok(c) => cases += c,
                Err(w) => return Outcome::fail(cases + 1, w),
            }
        }
        Outcome::pass(cases)
    }

    /// [`Self::sweep`] over `U^#`, one case per element unless `f` says otherwise.
    pub(crate) fn sweep_nonzero<F>(&self, f: F) -> Outcome
    where
        F: Fn(usize) -> Result<u64, Witness> + Sync + Send,
    {
        self.sweep(self.n() - 1, |i| f(i + 1))
    }

    /// [`Self::sweep`] over a list of indices.
    pub(crate) fn sweep_over<F>(&self, items: &[usize], f: F) -> Outcome
    where
        F: Fn(usize) -> Result<u64, Witness> + Sync + Send,
    {
        self.sweep(items.len(), |i| f(items[i]))
    }
}

/// Whether `p` agrees pointwise with `f` on all of X.
pub(crate) fn agrees(p: &Permutation, f: impl Fn(usize) -> usize) -> bool {
    (0..p.degree()).all(|x| p.apply(x) == f(x))
}
