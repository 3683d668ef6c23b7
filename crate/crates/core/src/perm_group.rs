//! Orders of permutation groups: breadth-first closure for small groups and
//! Schreier–Sims for the rest.

use std::collections::{HashSet, VecDeque};

use crate::moufang_set::{MoufangError, MoufangSet};
use crate::perm::Permutation;

/// Cap on [`Strategy::NaiveClosure`].
pub const NAIVE_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    NaiveClosure,
    SchreierSims,
}

/// All elements of `⟨gens⟩`, identity first, in breadth-first order.
pub fn closure(gens: &[Permutation], degree: usize, cap: usize) -> Result<Vec<Permutation>, MoufangError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if !seen.contains(&h) {
                if elements.len() >= cap {
                    return Err(MoufangError::ClosureCap(cap));
                }
                seen.insert(h.clone());
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(elements)
}

/// One level of a stabilizer chain: the orbit of `base` under the level's
/// group with transversal elements `u_x` (`base·u_x = x`) and their inverses.
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    // Generators of this level's group; includes those of all deeper levels.
    gens: Vec<Permutation>,
    // Indexed by point; `None` outside the orbit.
    trans: Vec<Option<(Permutation, Permutation)>>,
    orbit: Vec<usize>,
    // `scanned[i]`: orbit prefix whose Schreier generators with `gens[i]` sifted.
    scanned: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut trans = vec![None; degree];
        trans[base] = Some((Permutation::identity(degree), Permutation::identity(degree)));
        Level { base, gens: Vec::new(), trans, orbit: vec![base], scanned: Vec::new() }
    }

    fn push_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        self.scanned.push(0);
        // Existing transversal elements stay valid; new points are appended.
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g.apply(x);
                if self.trans[y].is_none() {
                    let (u, _) = self.trans[x].as_ref().expect("orbit point has a transversal");
                    let uy = u.then(g);
                    let uy_inv = uy.inverse();
                    self.trans[y] = Some((uy, uy_inv));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }

    fn schreier_generator(&self, x: usize, i: usize) -> Permutation {
        let s = &self.gens[i];
        let (u, _) = self.trans[x].as_ref().expect("orbit point");
        let (_, uy_inv) = self.trans[s.apply(x)].as_ref().expect("orbit is closed");
        u.then(s).then(uy_inv)
    }
}

/// A base and strong generating set, built incrementally.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Build the chain for `⟨gens⟩`, preferring `base_prefix` as the first base points.
    pub fn new(gens: &[Permutation], degree: usize, base_prefix: &[usize]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree");
            let (residue, stop) = chain.sift(0, g);
            if !residue.is_identity() {
                chain.add_strong(0, stop, residue);
            }
        }
        while chain.levels.last().is_some_and(|l| l.gens.is_empty()) {
            chain.levels.pop();
        }
        chain
    }

    /// Strip `g` through levels starting at `from`. Returns the residue and
    /// the level where sifting stopped (`levels.len()` if it went through).
    fn sift(&self, from: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = h.apply(level.base);
            match &level.trans[x] {
                Some((_, u_inv)) => h = h.then(u_inv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Add `g` (which fixes the base points before `from`) as a strong
    /// generator on levels `from..=to`, then restore the chain property.
    fn add_strong(&mut self, from: usize, to: usize, g: Permutation) {
        if to == self.levels.len() {
            let b = g.first_moved_point().expect("nontrivial residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=to {
            self.levels[l].push_generator(g.clone());
        }
        for l in (from..=to).rev() {
            self.close_level(l);
        }
    }

    /// Sift every Schreier generator of level `l` into the levels below.
    fn close_level(&mut self, l: usize) {
        let mut i = 0;
        while i < self.levels[l].gens.len() {
            while self.levels[l].scanned[i] < self.levels[l].orbit.len() {
                let x = self.levels[l].orbit[self.levels[l].scanned[i]];
                let schreier = self.levels[l].schreier_generator(x, i);
                self.levels[l].scanned[i] += 1;
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stop) = self.sift(l + 1, &schreier);
                if !residue.is_identity() {
                    self.add_strong(l + 1, stop, residue);
                }
            }
            i += 1;
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Order of the pointwise stabilizer of the first `k` base points.
    pub fn stabilizer_order(&self, k: usize) -> u128 {
        self.levels.iter().skip(k).map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g).0.is_identity()
    }
}

/// Order of `⟨gens⟩` on `degree` points.
pub fn order_of(gens: &[Permutation], degree: usize, strategy: Strategy) -> Result<u128, MoufangError> {
    match strategy {
        Strategy::NaiveClosure => Ok(closure(gens, degree, NAIVE_CLOSURE_CAP)?.len() as u128),
        Strategy::SchreierSims => Ok(StabilizerChain::new(gens, degree, &[]).order()),
    }
}

/// Order of `⟨U_∞, τ⟩` acting on X.
pub fn group_order(m: &MoufangSet, strategy: Strategy) -> Result<u128, MoufangError> {
    match strategy {
        Strategy::NaiveClosure => order_of(&m.generators(), m.points(), strategy),
        Strategy::SchreierSims => Ok(moufang_chain(m, &m.generators()).order()),
    }
}

/// Stabilizer chain with base prefix `(∞, 0)`, so
/// [`StabilizerChain::stabilizer_order`]`(2)` is the two-point stabilizer.
pub fn moufang_chain(m: &MoufangSet, gens: &[Permutation]) -> StabilizerChain {
    StabilizerChain::new(gens, m.points(), &[m.inf(), 0])
}

/// `|G†|` and `|G†_{0,∞}|` for `G† = ⟨U_∞, U_0⟩`.
pub fn little_projective_orders(m: &MoufangSet) -> (u128, u128) {
    let chain = moufang_chain(m, &m.little_projective_generators());
    (chain.order(), chain.stabilizer_order(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, c: &[usize]) -> Permutation {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for w in 0..c.len() {
            images[c[w]] = c[(w + 1) % c.len()] as u32;
        }
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn symmetric_and_alternating_groups() {
        for n in 3..=7 {
            let sym = [cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())];
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(order_of(&sym, n, Strategy::SchreierSims).unwrap(), fact);
            assert_eq!(order_of(&sym, n, Strategy::NaiveClosure).unwrap(), fact);
            let alt: Vec<_> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
            assert_eq!(order_of(&alt, n, Strategy::SchreierSims).unwrap(), fact / 2);
        }
    }

    #[test]
    fn trivial_and_cyclic() {
        assert_eq!(order_of(&[], 4, Strategy::SchreierSims).unwrap(), 1);
        assert_eq!(order_of(&[Permutation::identity(4)], 4, Strategy::NaiveClosure).unwrap(), 1);
        let c = cycle(9, &[0, 1, 2, 3, 4]).then(&cycle(9, &[5, 6, 7]));
        assert_eq!(order_of(std::slice::from_ref(&c), 9, Strategy::SchreierSims).unwrap(), 15);
        let chain = StabilizerChain::new(std::slice::from_ref(&c), 9, &[]);
        assert!(chain.contains(&c.pow(7)));
        assert!(!chain.contains(&cycle(9, &[0, 1])));
    }

    #[test]
    fn closure_cap() {
        let sym = [cycle(6, &[0, 1]), cycle(6, &[0, 1, 2, 3, 4, 5])];
        assert_eq!(closure(&sym, 6, 100).unwrap_err(), MoufangError::ClosureCap(100));
    }
}
