//! The Moufang set engine `M(U, τ)` on `X = U ∪ {∞}`.
//!
//! Points are dense indices: `0..|U|` are root group elements (in the
//! encoding of [`RootGroup::index_of`], so index 0 is the neutral element)
//! and `|U|` is `∞`. Every map acts on the right and products compose left to
//! right, so `α_a τ` means "first `α_a`, then `τ`" and `g^h = h⁻¹gh`.
//!
//! All derived maps are computed from `U` and `τ` alone:
//!
//! * `α_a`: `∞ ↦ ∞`, `b ↦ b + a`
//! * `μ_a = α^τ_{(-a)τ⁻¹} · α_a · α^τ_{-(aτ⁻¹)}`
//! * `h_a = τ · α_a · α^τ_{-(aτ⁻¹)} · α_{-∼a}` (the Hua map)
//! * `∼a = (-(aτ⁻¹))τ`
//!
//! `μ_a` is asserted to swap `0` and `∞` at construction.

use std::collections::HashSet;

use thiserror::Error;

use crate::perm::{ExportHeader, Permutation, PointEncoding};
use crate::perm_group;
use crate::root_group::{RootGroup, RootGroupElement, RootGroupError, RootGroupKind};
use crate::sweep::{self, Exec};

/// Largest root group the engine will tabulate.
pub const MAX_ROOT_GROUP_SIZE: usize = 4096;

/// Default cap on the Hua subgroup closure.
pub const HUA_CLOSURE_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoufangError {
    #[error("root group of order {0} exceeds the supported maximum {MAX_ROOT_GROUP_SIZE}")]
    TooLarge(usize),
    #[error("tau has degree {got}, expected {expected}")]
    TauDegree { expected: usize, got: usize },
    #[error("tau does not interchange 0 and infinity")]
    TauNotSwapping,
    #[error("{0} is only defined for nonzero elements")]
    ZeroElement(&'static str),
    #[error("mu_{0} does not interchange 0 and infinity")]
    MuNotSwapping(String),
    #[error("special-element criteria disagree at {0}")]
    SpecialCriteriaDisagree(String),
    #[error("point {0} is not a root group element")]
    NotAnElement(usize),
    #[error("closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error(transparent)]
    RootGroup(#[from] RootGroupError),
}

/// A point of `X = U ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Elem(RootGroupElement),
}

/// Which of the two families a root group belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum SetKind {
    ProjectiveLine,
    Suzuki,
}

pub struct MoufangSet {
    group: RootGroup,
    size: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    tau: Permutation,
    tau_inv: Permutation,
    // Index 0 holds the identity as a placeholder; μ_0 is undefined.
    mu: Vec<Permutation>,
    sim: Vec<u16>,
    exec: Exec,
}

impl std::fmt::Debug for MoufangSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MoufangSet")
            .field("kind", &self.group.kind())
            .field("spec", self.group.spec())
            .field("points", &self.points())
            .finish()
    }
}

/// Outcome of [`MoufangSet::verify_moufang`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoufangReport {
    pub hua_maps_checked: usize,
    pub pairs_checked: u64,
    pub counterexample: Option<HuaFailure>,
}

impl MoufangReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HuaFailure {
    MovesZeroOrInfinity { a: usize },
    NotBijective { a: usize, x: usize },
    NotAdditive { a: usize, x: usize, y: usize },
}

/// `H = ⟨μ_a μ_b⟩` as an explicit list of permutations.
#[derive(Debug, Clone)]
pub struct HuaSubgroup {
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl HuaSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in closure order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|h| !h.is_identity())
    }

    /// An element whose order equals `|H|`, if any.
    pub fn cyclic_generator(&self) -> Option<&Permutation> {
        let n = self.order() as u64;
        self.elements.iter().find(|h| h.order() == n)
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_generator().is_some()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }
}

impl MoufangSet {
    /// Tabulate `M(U, τ)`. `tau` must be a permutation of `0..=|U|`
    /// interchanging `0` and `∞ = |U|`; nothing else is assumed.
    pub fn new(group: RootGroup, tau: Permutation) -> Result<Self, MoufangError> {
        let size = group.size();
        if size > MAX_ROOT_GROUP_SIZE {
            return Err(MoufangError::TooLarge(size));
        }
        if tau.degree() != size + 1 {
            return Err(MoufangError::TauDegree { expected: size + 1, got: tau.degree() });
        }
        let inf = size;
        if tau.apply(0) != inf || tau.apply(inf) != 0 {
            return Err(MoufangError::TauNotSwapping);
        }
        let elems: Vec<RootGroupElement> = group.elements().collect();
        let index = |x: &RootGroupElement| group.index_of(x).expect("closed under the group law") as u16;
        let mut add = vec![0u16; size * size];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i * size + j] = index(&group.add_unchecked(x, y));
            }
        }
        let neg = elems.iter().map(|x| index(&group.neg_unchecked(x))).collect();
        let tau_inv = tau.inverse();
        let mut m = MoufangSet {
            group,
            size,
            add,
            neg,
            tau,
            tau_inv,
            mu: Vec::new(),
            sim: Vec::new(),
            exec: Exec::default(),
        };
        let mut mu = Vec::with_capacity(size);
        mu.push(Permutation::identity(size + 1));
        for a in 1..size {
            let p = m.compute_mu(a);
            if p.apply(inf) != 0 || p.apply(0) != inf {
                return Err(MoufangError::MuNotSwapping(m.describe(a)));
            }
            mu.push(p);
        }
        m.mu = mu;
        m.sim = (0..size)
            .map(|a| if a == 0 { 0 } else { m.tau.apply(m.neg(m.tau_inv.apply(a))) as u16 })
            .collect();
        Ok(m)
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn group(&self) -> &RootGroup {
        &self.group
    }

    pub fn kind(&self) -> SetKind {
        match self.group.kind() {
            RootGroupKind::Abelian => SetKind::ProjectiveLine,
            RootGroupKind::SuzukiTwoGroup => SetKind::Suzuki,
        }
    }

    /// `|U|`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `|X| = |U| + 1`.
    pub fn points(&self) -> usize {
        self.size + 1
    }

    /// Index of `∞`.
    #[inline]
    pub fn inf(&self) -> usize {
        self.size
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn tau_inv(&self) -> &Permutation {
        &self.tau_inv
    }

    // ---- root group arithmetic on indices ----

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.size && y < self.size);
        self.add[x * self.size + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    /// `x - y = x + (-y)`.
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `x·k = x + … + x` (`k` summands).
    pub fn times(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_involution(&self, x: usize) -> bool {
        x != 0 && x < self.size && self.add(x, x) == 0
    }

    /// Apply `α_a` to a point.
    #[inline]
    pub fn shift(&self, p: usize, a: usize) -> usize {
        if p == self.size {
            p
        } else {
            self.add(p, a)
        }
    }

    pub fn elem(&self, x: usize) -> RootGroupElement {
        self.group.element(x)
    }

    pub fn point(&self, p: usize) -> Point {
        if p == self.size {
            Point::Infinity
        } else {
            Point::Elem(self.group.element(p))
        }
    }

    pub fn point_index(&self, p: &Point) -> Result<usize, MoufangError> {
        match p {
            Point::Infinity => Ok(self.size),
            Point::Elem(x) => Ok(self.group.index_of(x)?),
        }
    }

    pub fn index_of(&self, x: &RootGroupElement) -> Result<usize, MoufangError> {
        Ok(self.group.index_of(x)?)
    }

    /// Human-readable point: `(a,b)`, `a`, or `inf`.
    pub fn describe(&self, p: usize) -> String {
        if p == self.size {
            "inf".to_string()
        } else {
            self.group.element(p).to_string()
        }
    }

    // ---- α, μ, h, ∼ ----

    pub fn alpha_at(&self, a: usize) -> Permutation {
        Permutation::from_images_unchecked((0..=self.size).map(|p| self.shift(p, a) as u32).collect())
    }

    pub fn alpha(&self, a: &RootGroupElement) -> Result<Permutation, MoufangError> {
        Ok(self.alpha_at(self.index_of(a)?))
    }

    fn compute_mu(&self, a: usize) -> Permutation {
        let (t, ti) = (&self.tau, &self.tau_inv);
        let first = ti.apply(self.neg(a)); // (-a)τ⁻¹
        let last = self.neg(ti.apply(a)); // -(aτ⁻¹)
        let images = (0..=self.size)
            .map(|x| {
                let y = t.apply(self.shift(ti.apply(x), first));
                let y = self.shift(y, a);
                t.apply(self.shift(ti.apply(y), last)) as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Cached `μ_a`. Panics on `a = 0`; see [`MoufangSet::mu`] for the checked form.
    #[inline]
    pub fn mu_at(&self, a: usize) -> &Permutation {
        assert!(a != 0 && a < self.size, "mu_a needs a nonzero element, got index {a}");
        &self.mu[a]
    }

    pub fn mu(&self, a: &RootGroupElement) -> Result<&Permutation, MoufangError> {
        let a = self.index_of(a)?;
        if a == 0 {
            return Err(MoufangError::ZeroElement("mu"));
        }
        Ok(&self.mu[a])
    }

    /// `∼a`. Panics on `a = 0`.
    #[inline]
    pub fn sim_at(&self, a: usize) -> usize {
        assert!(a != 0 && a < self.size, "sim needs a nonzero element, got index {a}");
        self.sim[a] as usize
    }

    pub fn sim(&self, a: &RootGroupElement) -> Result<RootGroupElement, MoufangError> {
        let a = self.index_of(a)?;
        if a == 0 {
            return Err(MoufangError::ZeroElement("sim"));
        }
        Ok(self.elem(self.sim[a] as usize))
    }

    /// Image of `p` under the Hua map `h_a`.
    #[inline]
    fn hua_image(&self, a: usize, mid: usize, last: usize, p: usize) -> usize {
        let y = self.shift(self.tau.apply(p), a);
        let y = self.tau.apply(self.shift(self.tau_inv.apply(y), mid));
        self.shift(y, last)
    }

    fn hua_shifts(&self, a: usize) -> (usize, usize) {
        let mid = self.neg(self.tau_inv.apply(a)); // -(aτ⁻¹)
        let last = self.neg(self.sim[a] as usize); // -∼a
        (mid, last)
    }

    pub fn hua_at(&self, a: usize) -> Permutation {
        assert!(a != 0 && a < self.size, "hua needs a nonzero element, got index {a}");
        let (mid, last) = self.hua_shifts(a);
        Permutation::from_images_unchecked(
            (0..=self.size).map(|p| self.hua_image(a, mid, last, p) as u32).collect(),
        )
    }

    pub fn hua(&self, a: &RootGroupElement) -> Result<Permutation, MoufangError> {
        let a = self.index_of(a)?;
        if a == 0 {
            return Err(MoufangError::ZeroElement("hua"));
        }
        Ok(self.hua_at(a))
    }

    /// Check that every Hua map restricts to an automorphism of U,
    /// exhaustively over all pairs.
    pub fn verify_moufang(&self) -> MoufangReport {
        let n = self.size;
        let failure = sweep::find_first(self.exec, n.saturating_sub(1), |i| {
            let a = i + 1;
            let (mid, last) = self.hua_shifts(a);
            let h: Vec<usize> = (0..=n).map(|p| self.hua_image(a, mid, last, p)).collect();
            if h[0] != 0 || h[n] != n {
                return Some(HuaFailure::MovesZeroOrInfinity { a });
            }
            let mut seen = vec![false; n];
            for x in 0..n {
                if h[x] >= n || seen[h[x]] {
                    return Some(HuaFailure::NotBijective { a, x });
                }
                seen[h[x]] = true;
            }
            for x in 0..n {
                let row = &self.add[x * n..(x + 1) * n];
                let hrow = &self.add[h[x] * n..(h[x] + 1) * n];
                for y in 0..n {
                    if h[row[y] as usize] != hrow[h[y]] as usize {
                        return Some(HuaFailure::NotAdditive { a, x, y });
                    }
                }
            }
            None
        });
        let checked = match &failure {
            None => n.saturating_sub(1),
            Some(HuaFailure::MovesZeroOrInfinity { a })
            | Some(HuaFailure::NotBijective { a, .. })
            | Some(HuaFailure::NotAdditive { a, .. }) => *a,
        };
        MoufangReport {
            hua_maps_checked: checked,
            pairs_checked: if failure.is_none() { (checked as u64) * (n as u64) * (n as u64) } else { 0 },
            counterexample: failure,
        }
    }

    /// Closure of the products `μ_a μ_b`.
    ///
    /// `μ_a μ_b = (μ_c μ_{-a})⁻¹ (μ_c μ_b)` for any fixed `c`, so the products
    /// `μ_c μ_b` with `c` the first nonzero element already generate.
    pub fn hua_subgroup(&self) -> Result<HuaSubgroup, MoufangError> {
        self.hua_subgroup_with_cap(HUA_CLOSURE_CAP)
    }

    pub fn hua_subgroup_with_cap(&self, cap: usize) -> Result<HuaSubgroup, MoufangError> {
        let mut seen = HashSet::new();
        let mut generators = Vec::new();
        if self.size > 1 {
            let base = &self.mu[1];
            for b in 1..self.size {
                let g = base.then(&self.mu[b]);
                if !g.is_identity() && seen.insert(g.clone()) {
                    generators.push(g);
                }
            }
        }
        let elements = perm_group::closure(&generators, self.points(), cap)?;
        Ok(HuaSubgroup { elements, generators })
    }

    /// Closure of all `|U^#|²` products, without the generator reduction.
    pub fn hua_subgroup_all_products(&self, cap: usize) -> Result<HuaSubgroup, MoufangError> {
        let mut seen = HashSet::new();
        let mut generators = Vec::new();
        for a in 1..self.size {
            for b in 1..self.size {
                let g = self.mu[a].then(&self.mu[b]);
                if !g.is_identity() && seen.insert(g.clone()) {
                    generators.push(g);
                }
            }
        }
        let elements = perm_group::closure(&generators, self.points(), cap)?;
        Ok(HuaSubgroup { elements, generators })
    }

    /// `(-a)τ⁻¹ = -(aτ⁻¹)`, cross-checked against `(-a)μ_a = a`.
    pub fn is_special_at(&self, a: usize) -> Result<bool, MoufangError> {
        if a == 0 {
            return Err(MoufangError::ZeroElement("is_special"));
        }
        let by_definition = self.tau_inv.apply(self.neg(a)) == self.neg(self.tau_inv.apply(a));
        let by_mu = self.mu[a].apply(self.neg(a)) == a;
        if by_definition != by_mu {
            return Err(MoufangError::SpecialCriteriaDisagree(self.describe(a)));
        }
        Ok(by_definition)
    }

    pub fn is_special(&self, a: &RootGroupElement) -> Result<bool, MoufangError> {
        self.is_special_at(self.index_of(a)?)
    }

    /// Proper (`H ≠ 1`) and no nontrivial `h ∈ H` fixes a point of `U^#`.
    pub fn is_zassenhaus(&self, hua: &HuaSubgroup) -> bool {
        hua.order() > 1
            && hua
                .nontrivial()
                .all(|h| sweep::find_first(self.exec, self.size.saturating_sub(1), |i| (h.apply(i + 1) == i + 1).then_some(())).is_none())
    }

    // ---- generators ----

    /// A generating set of U, chosen greedily in index order.
    pub fn root_group_generators(&self) -> Vec<usize> {
        let mut member = vec![false; self.size];
        member[0] = true;
        let mut span = vec![0usize];
        let mut gens = Vec::new();
        for g in 1..self.size {
            if member[g] {
                continue;
            }
            gens.push(g);
            // Close span ∪ {gens} under addition by right multiplication with generators.
            let mut frontier = span.clone();
            while let Some(x) = frontier.pop() {
                for &s in &gens {
                    let y = self.add(x, s);
                    if !member[y] {
                        member[y] = true;
                        span.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }

    /// Generators of `⟨U_∞, τ⟩`: `α_g` for a generating set of U, then `τ`.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = self.root_group_generators().into_iter().map(|g| self.alpha_at(g)).collect();
        gens.push(self.tau.clone());
        gens
    }

    /// Generators of `G† = ⟨U_∞, U_0⟩`: `α_g` and `α_g^τ`.
    pub fn little_projective_generators(&self) -> Vec<Permutation> {
        let alphas: Vec<Permutation> = self.root_group_generators().into_iter().map(|g| self.alpha_at(g)).collect();
        let conj: Vec<Permutation> = alphas.iter().map(|a| a.conjugate_by(&self.tau)).collect();
        alphas.into_iter().chain(conj).collect()
    }

    pub fn export_header(&self) -> ExportHeader {
        ExportHeader {
            points: self.points(),
            encoding: match self.group.kind() {
                RootGroupKind::Abelian => PointEncoding::Scalar,
                RootGroupKind::SuzukiTwoGroup => PointEncoding::Pair,
            },
            degree: self.group.spec().degree(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_projective_line, build_suzuki, suzuki_tau_permutation};

    #[test]
    fn mu_swaps_and_alpha_fixes_infinity() {
        let m = build_suzuki(8).unwrap();
        let inf = m.inf();
        for a in 1..m.size() {
            assert_eq!(m.mu_at(a).apply(inf), 0);
            assert_eq!(m.mu_at(a).apply(0), inf);
            assert_eq!(m.alpha_at(a).apply(inf), inf);
        }
        assert!(m.alpha_at(0).is_identity());
    }

    #[test]
    fn suzuki_mu_examples() {
        let m = build_suzuki(8).unwrap();
        let g = *m.group();
        let e = g.pair(0, 1).unwrap();
        assert_eq!(m.mu(&e).unwrap(), m.tau());
        let x = m.index_of(&g.pair(2, 0).unwrap()).unwrap();
        assert_eq!(m.elem(m.mu(&e).unwrap().apply(x)), g.pair(0, 4).unwrap());
        let fixed: Vec<_> = m.mu(&e).unwrap().fixed_points().into_iter().map(|p| m.describe(p)).collect();
        assert_eq!(fixed, vec!["(1,1)"]);
        assert_eq!(m.sim(&e).unwrap(), g.pair(1, 1).unwrap());
        assert_eq!(g.neg(&m.sim(&e).unwrap()).unwrap(), g.pair(1, 0).unwrap());
        let shifted = m.alpha(&g.pair(2, 3).unwrap()).unwrap();
        assert_eq!(m.elem(shifted.apply(m.index_of(&g.pair(4, 5).unwrap()).unwrap())), g.pair(6, 3).unwrap());
    }

    #[test]
    fn zero_rejected() {
        let m = build_projective_line(4).unwrap();
        let zero = m.group().zero();
        assert_eq!(m.mu(&zero).unwrap_err(), MoufangError::ZeroElement("mu"));
        assert_eq!(m.sim(&zero).unwrap_err(), MoufangError::ZeroElement("sim"));
        assert_eq!(m.hua(&zero).unwrap_err(), MoufangError::ZeroElement("hua"));
        assert!(m.is_special_at(0).is_err());
    }

    #[test]
    fn sim_is_an_involution_and_trivial_on_projective_line() {
        for m in [build_projective_line(8).unwrap(), build_suzuki(8).unwrap()] {
            for a in 1..m.size() {
                assert_eq!(m.sim_at(m.sim_at(a)), a);
            }
        }
        let m = build_projective_line(8).unwrap();
        assert!((1..8).all(|a| m.sim_at(a) == a));
    }

    #[test]
    fn hua_fixes_zero_infinity_and_equals_tau_mu() {
        for m in [build_projective_line(8).unwrap(), build_suzuki(8).unwrap()] {
            for a in 1..m.size() {
                let h = m.hua_at(a);
                assert_eq!(h.apply(0), 0);
                assert_eq!(h.apply(m.inf()), m.inf());
                assert_eq!(h, m.tau().then(m.mu_at(a)));
            }
        }
    }

    #[test]
    fn moufang_axiom_small_sets() {
        assert!(build_projective_line(4).unwrap().verify_moufang().passed());
        let r = build_suzuki(8).unwrap().verify_moufang();
        assert!(r.passed());
        assert_eq!(r.hua_maps_checked, 63);
        assert_eq!(r.pairs_checked, 63 * 64 * 64);
    }

    #[test]
    fn corrupted_tau_fails_the_axiom() {
        let m = build_suzuki(8).unwrap();
        let mut images = suzuki_tau_permutation(m.group()).images().to_vec();
        images.swap(3, 17);
        let bad = MoufangSet::new(*m.group(), Permutation::from_images(images).unwrap()).unwrap();
        assert!(!bad.verify_moufang().passed());
    }

    #[test]
    fn tau_must_swap() {
        let m = build_projective_line(4).unwrap();
        assert_eq!(
            MoufangSet::new(*m.group(), Permutation::identity(5)).unwrap_err(),
            MoufangError::TauNotSwapping
        );
        assert!(matches!(
            MoufangSet::new(*m.group(), Permutation::identity(4)),
            Err(MoufangError::TauDegree { .. })
        ));
    }

    #[test]
    fn hua_subgroups() {
        let m = build_suzuki(8).unwrap();
        let h = m.hua_subgroup().unwrap();
        assert_eq!(h.order(), 7);
        assert!(h.is_cyclic());
        assert!(h.elements().iter().all(|p| p.apply(0) == 0 && p.apply(m.inf()) == m.inf()));
        assert!(m.is_zassenhaus(&h));
        let all = m.hua_subgroup_all_products(1000).unwrap();
        let mut a: Vec<_> = h.elements().to_vec();
        let mut b: Vec<_> = all.elements().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);

        let p4 = build_projective_line(4).unwrap();
        let h4 = p4.hua_subgroup().unwrap();
        assert_eq!(h4.order(), 3);
        assert!(p4.is_zassenhaus(&h4));
        assert!(matches!(m.hua_subgroup_with_cap(3), Err(MoufangError::ClosureCap(3))));
    }

    #[test]
    fn special_elements() {
        let p = build_projective_line(8).unwrap();
        assert!((1..8).all(|a| p.is_special_at(a).unwrap()));
        let s = build_suzuki(8).unwrap();
        assert!((1..64).all(|a| !s.is_special_at(a).unwrap()));
    }

    #[test]
    fn generators_span_u() {
        let s = build_suzuki(8).unwrap();
        let gens = s.root_group_generators();
        assert!(gens.len() <= 6);
        let p = build_projective_line(8).unwrap();
        assert_eq!(p.root_group_generators(), vec![1, 2, 4]);
    }
}
