//! Independent oracles: schoolbook GF(2)[x] arithmetic, the group laws and
//! τ written out from their formulas, and μ-maps assembled from raw image
//! tables. Nothing here calls into the library's arithmetic.

use std::collections::{HashSet, VecDeque};

use moufang::constructions::{partition_classify, PartitionTag};
use moufang::root_group::RootGroupElement;
use moufang::*;

// ---- GF(2)[x] by hand ----

fn deg(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_mod(mut a: u64, m: u64) -> u64 {
    while a != 0 && deg(a) >= deg(m) {
        a ^= m << (deg(a) - deg(m));
    }
    a
}

fn clmul(a: u64, b: u64) -> u64 {
    (0..32).filter(|i| b >> i & 1 == 1).fold(0, |acc, i| acc ^ (a << i))
}

fn reducible(p: u64) -> bool {
    (2..(1u64 << (deg(p) / 2 + 1))).any(|d| deg(d) >= 1 && deg(d) <= deg(p) / 2 && poly_mod(p, d) == 0)
}

fn smallest_irreducible(n: u32) -> u64 {
    ((1u64 << n)..(1u64 << (n + 1))).find(|&p| !reducible(p)).unwrap()
}

struct Gf {
    m: u64,
    n: u32,
}

impl Gf {
    fn new(n: u32) -> Self {
        Gf { m: smallest_irreducible(n), n }
    }
    fn q(&self) -> u64 {
        1 << self.n
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        poly_mod(clmul(a, b), self.m)
    }
    fn pow(&self, a: u64, e: u64) -> u64 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }
    fn inv(&self, a: u64) -> u64 {
        (1..self.q()).find(|&b| self.mul(a, b) == 1).unwrap()
    }
    fn theta(&self, a: u64) -> u64 {
        // a^(2^((n+1)/2)) by repeated squaring.
        (0..self.n.div_ceil(2)).fold(a, |x, _| self.mul(x, x))
    }
    fn theta_inv(&self, a: u64) -> u64 {
        (0..self.q()).find(|&b| self.theta(b) == a).unwrap()
    }
}

#[test]
fn irreducible_moduli() {
    assert_eq!(smallest_irreducible(2), 0b111);
    assert_eq!(smallest_irreducible(3), 0b1011);
    assert_eq!(smallest_irreducible(5), 0b100101);
    assert!(reducible(0b100011));
    for n in 2..=6 {
        assert_eq!(FieldSpec::new(n).unwrap().modulus() as u64, smallest_irreducible(n), "n = {n}");
    }
}

#[test]
fn field_values_gf8() {
    let o = Gf::new(3);
    let f = FieldSpec::tits(3).unwrap();
    let e = |v| f.element(v).unwrap();
    assert_eq!(o.mul(2, 2), 4);
    assert_eq!(o.mul(2, 5), 1);
    assert_eq!(o.inv(2), 5);
    assert_eq!(o.inv(6), 3);
    assert_eq!(o.theta(2), 6);
    assert_eq!(f.add(e(3), e(5)), e(6));
    assert_eq!(f.add(e(7), e(2)), e(5));
    for a in 0..8u32 {
        assert_eq!(f.add(e(a), e(a)), e(0));
        assert_eq!(f.theta(e(a)).bits() as u64, o.theta(a as u64));
        for b in 0..8u32 {
            assert_eq!(f.mul(e(a), e(b)).bits() as u64, o.mul(a as u64, b as u64));
        }
        if a != 0 {
            assert_eq!(f.inv(e(a)).unwrap().bits() as u64, o.inv(a as u64));
        }
    }
}

#[test]
fn field_tables_agree_up_to_degree_7() {
    for n in 1..=7 {
        let o = Gf::new(n);
        let f = FieldSpec::new(n).unwrap();
        for a in 0..o.q() {
            let fa = f.element(a as u32).unwrap();
            for b in 0..o.q() {
                assert_eq!(f.mul(fa, f.element(b as u32).unwrap()).bits() as u64, o.mul(a, b));
            }
            assert_eq!(f.pow(fa, 5).bits() as u64, o.pow(a, 5));
        }
    }
}

// ---- A(n,θ) by hand ----

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct P(u64, u64);

struct Suz {
    f: Gf,
}

impl Suz {
    fn add(&self, x: P, y: P) -> P {
        P(x.0 ^ y.0, x.1 ^ y.1 ^ self.f.mul(x.0, self.f.theta(y.0)))
    }
    fn neg(&self, x: P) -> P {
        P(x.0, x.1 ^ self.f.mul(x.0, self.f.theta(x.0)))
    }
    fn norm(&self, x: P) -> u64 {
        let f = &self.f;
        f.mul(f.mul(x.0, x.0), f.theta(x.0)) ^ f.mul(x.0, x.1) ^ f.theta(x.1)
    }
    /// τ on U ∪ {∞}, with ∞ as `None`.
    fn tau(&self, x: Option<P>) -> Option<P> {
        match x {
            None => Some(P(0, 0)),
            Some(P(0, 0)) => None,
            Some(p) => {
                let ni = self.f.inv(self.norm(p));
                Some(P(self.f.mul(p.1, ni), self.f.mul(p.0, ni)))
            }
        }
    }
    fn elements(&self) -> Vec<P> {
        let q = self.f.q();
        (0..q).flat_map(|a| (0..q).map(move |b| P(a, b))).collect()
    }
}

fn suz8() -> Suz {
    Suz { f: Gf::new(3) }
}

fn lib_pair(x: RootGroupElement) -> P {
    match x {
        RootGroupElement::Pair(a, b) => P(a.bits() as u64, b.bits() as u64),
        other => panic!("expected a pair, got {other}"),
    }
}

#[test]
fn suzuki_group_law_values() {
    let s = suz8();
    assert_eq!(s.add(P(2, 3), P(4, 5)), P(6, 2));
    assert_eq!(s.add(P(4, 5), P(2, 3)), P(6, 3));
    assert_eq!(s.neg(P(1, 0)), P(1, 1));
    assert_eq!(s.neg(P(2, 3)), P(2, 4));
    assert_eq!(s.add(P(2, 3), P(2, 3)), P(0, 7));
    assert_eq!(s.add(P(1, 0), P(1, 0)), P(0, 1));
    let g = RootGroup::suzuki(FieldSpec::tits(3).unwrap()).unwrap();
    for x in s.elements() {
        let lx = g.pair(x.0 as u32, x.1 as u32).unwrap();
        assert_eq!(lib_pair(g.neg(&lx).unwrap()), s.neg(x));
        for y in s.elements() {
            let ly = g.pair(y.0 as u32, y.1 as u32).unwrap();
            assert_eq!(lib_pair(g.add(&lx, &ly).unwrap()), s.add(x, y));
        }
    }
}

#[test]
fn suzuki_group_axioms_exhaustive() {
    let s = suz8();
    let all = s.elements();
    for &x in &all {
        assert_eq!(s.add(x, s.neg(x)), P(0, 0));
        for &y in &all {
            for &z in &all {
                assert_eq!(s.add(s.add(x, y), z), s.add(x, s.add(y, z)));
            }
        }
    }
}

#[test]
fn h_lambda_values() {
    let g = RootGroup::suzuki(FieldSpec::tits(3).unwrap()).unwrap();
    let f = g.spec();
    let two = f.element(2).unwrap();
    assert_eq!(lib_pair(g.h_lambda(two, &g.pair(3, 1).unwrap()).unwrap()), P(6, 7));
    assert_eq!(lib_pair(g.h_lambda(two, &g.pair(0, 1).unwrap()).unwrap()), P(0, 7));
    for x in g.elements() {
        assert_eq!(g.h_lambda(f.one(), &x).unwrap(), x);
    }
}

#[test]
fn tau_values_and_table() {
    let s = suz8();
    assert_eq!(s.tau(Some(P(0, 2))), Some(P(6, 0)));
    assert_eq!(s.tau(Some(P(2, 0))), Some(P(0, 4)));
    assert_eq!(s.tau(Some(P(1, 1))), Some(P(1, 1)));
    let m = build_suzuki(8).unwrap();
    for p in 0..m.points() {
        let ours = match m.point(p) {
            Point::Infinity => s.tau(None),
            Point::Elem(x) => s.tau(Some(lib_pair(x))),
        };
        let theirs = match m.point(m.tau().apply(p)) {
            Point::Infinity => None,
            Point::Elem(x) => Some(lib_pair(x)),
        };
        assert_eq!(ours, theirs);
    }
}

// ---- μ-maps from image tables ----

/// Image tables on points `0..n` of U (in `elems` order) plus `n` for ∞.
struct Tables {
    n: usize,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    tau: Vec<usize>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

impl Tables {
    fn alpha(&self, a: usize) -> Vec<usize> {
        (0..=self.n).map(|x| if x == self.n { x } else { self.add[x][a] }).collect()
    }
    fn alpha_tau(&self, a: usize) -> Vec<usize> {
        let t = &self.tau;
        compose(&compose(&invert(t), &self.alpha(a)), t)
    }
    /// `μ_a = α^τ_{(-a)τ⁻¹} α_a α^τ_{-(aτ⁻¹)}`.
    fn mu(&self, a: usize) -> Vec<usize> {
        let ti = invert(&self.tau);
        let first = ti[self.neg[a]];
        let last = self.neg[ti[a]];
        compose(&compose(&self.alpha_tau(first), &self.alpha(a)), &self.alpha_tau(last))
    }
}

fn suzuki_tables(s: &Suz) -> (Vec<P>, Tables) {
    let elems = s.elements();
    let n = elems.len();
    let pos = |p: P| elems.iter().position(|&e| e == p).unwrap();
    let add = elems.iter().map(|&x| elems.iter().map(|&y| pos(s.add(x, y))).collect()).collect();
    let neg = elems.iter().map(|&x| pos(s.neg(x))).collect();
    let tau = (0..=n)
        .map(|i| {
            let x = if i == n { None } else { Some(elems[i]) };
            s.tau(x).map_or(n, pos)
        })
        .collect();
    (elems, Tables { n, add, neg, tau })
}

/// The library's permutation re-expressed on the oracle's point order.
fn relabel(m: &MoufangSet, lib: &Permutation, elems: &[P]) -> Vec<usize> {
    let n = elems.len();
    let to_oracle = |p: usize| match m.point(p) {
        Point::Infinity => n,
        Point::Elem(x) => elems.iter().position(|&e| e == lib_pair(x)).unwrap(),
    };
    let from_oracle = |i: usize| {
        if i == n {
            m.inf()
        } else {
            m.index_of(&m.group().pair(elems[i].0 as u32, elems[i].1 as u32).unwrap()).unwrap()
        }
    };
    (0..=n).map(|i| to_oracle(lib.apply(from_oracle(i)))).collect()
}

#[test]
fn suzuki_mu_maps_match_definition() {
    let s = suz8();
    let (elems, t) = suzuki_tables(&s);
    let m = build_suzuki(8).unwrap();
    for i in 1..t.n {
        let a = m.index_of(&m.group().pair(elems[i].0 as u32, elems[i].1 as u32).unwrap()).unwrap();
        let ours = t.mu(i);
        assert_eq!(relabel(&m, m.mu_at(a), &elems), ours, "a = {:?}", elems[i]);
        // μ_a swaps 0 and ∞.
        assert_eq!(ours[0], t.n);
        assert_eq!(ours[t.n], 0);
    }
}

#[test]
fn suzuki_sim_and_special_match_definition() {
    let s = suz8();
    let (elems, t) = suzuki_tables(&s);
    let m = build_suzuki(8).unwrap();
    let ti = invert(&t.tau);
    for i in 1..t.n {
        let a = m.index_of(&m.group().pair(elems[i].0 as u32, elems[i].1 as u32).unwrap()).unwrap();
        // ∼a = (-(aτ⁻¹))τ
        let sim = t.tau[t.neg[ti[i]]];
        assert_eq!(lib_pair(m.elem(m.sim_at(a))), elems[sim]);
        let special = ti[t.neg[i]] == t.neg[ti[i]];
        assert!(!special);
        assert_eq!(m.is_special_at(a).unwrap(), special);
    }
}

#[test]
fn projective_line_mu_maps_match_definition() {
    for n in 2..=4 {
        let o = Gf::new(n);
        let q = o.q() as usize;
        // U = GF(q) under XOR; τ = x ↦ x⁻¹ with 0 ↔ ∞.
        let t = Tables {
            n: q,
            add: (0..q).map(|x| (0..q).map(|y| x ^ y).collect()).collect(),
            neg: (0..q).collect(),
            tau: (0..=q).map(|x| if x == 0 { q } else if x == q { 0 } else { o.inv(x as u64) as usize }).collect(),
        };
        let m = build_projective_line(q as u64).unwrap();
        for a in 1..q {
            let lib = m.mu_at(a);
            let ours = t.mu(a);
            assert_eq!(lib.images().iter().map(|&v| v as usize).collect::<Vec<_>>(), ours, "q = {q}, a = {a}");
            // In M(F_q), μ_a: x ↦ a²/x.
            for x in 1..q {
                assert_eq!(ours[x] as u64, o.mul(o.mul(a as u64, a as u64), o.inv(x as u64)));
            }
            assert!(m.is_special_at(a).unwrap());
        }
    }
}

// ---- group orders by plain closure ----

fn closure_order(gens: &[Vec<usize>]) -> usize {
    let id: Vec<usize> = (0..gens[0].len()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

fn projective_tables(q: usize) -> Tables {
    let o = Gf::new(q.trailing_zeros());
    Tables {
        n: q,
        add: (0..q).map(|x| (0..q).map(|y| x ^ y).collect()).collect(),
        neg: (0..q).collect(),
        tau: (0..=q).map(|x| if x == 0 { q } else if x == q { 0 } else { o.inv(x as u64) as usize }).collect(),
    }
}

#[test]
fn orders_by_closure() {
    for (q, expected) in [(4usize, 60u128), (8, 504)] {
        let t = projective_tables(q);
        let gens: Vec<Vec<usize>> = (1..q).map(|a| t.alpha(a)).chain([t.tau.clone()]).collect();
        assert_eq!(closure_order(&gens) as u128, expected);
        let m = build_projective_line(q as u64).unwrap();
        assert_eq!(group_order(&m, Strategy::NaiveClosure).unwrap(), expected);
        assert_eq!(group_order(&m, Strategy::SchreierSims).unwrap(), expected);
    }
    let s = suz8();
    let (_, t) = suzuki_tables(&s);
    let gens = vec![t.alpha(1), t.alpha(8), t.alpha(16), t.alpha(32), t.tau.clone()];
    let q = 8u128;
    assert_eq!(closure_order(&gens) as u128, (q * q + 1) * q * q * (q - 1));
}

#[test]
fn hua_subgroup_orders_by_closure() {
    let t = projective_tables(4);
    let gens: Vec<Vec<usize>> = (1..4).flat_map(|a| (1..4).map(move |b| (a, b))).map(|(a, b)| compose(&t.mu(a), &t.mu(b))).collect();
    assert_eq!(closure_order(&gens), 3);
    let m = build_projective_line(4).unwrap();
    assert_eq!(m.hua_subgroup().unwrap().order(), 3);
    assert!(m.is_zassenhaus(&m.hua_subgroup().unwrap()));
}

#[test]
fn projective_line_over_gf2_is_not_zassenhaus() {
    let spec = FieldSpec::new(1).unwrap();
    let tau = Permutation::from_images(vec![2, 1, 0]).unwrap();
    let m = MoufangSet::new(RootGroup::abelian(spec), tau).unwrap();
    let h = m.hua_subgroup().unwrap();
    assert_eq!(h.order(), 1);
    assert!(!m.is_zassenhaus(&h));
}

// ---- partition by hand ----

#[test]
fn partition_examples() {
    let s = suz8();
    let m = build_suzuki(8).unwrap();
    let g = m.group();
    let class = |a, b| partition_classify(&m, &g.pair(a, b).unwrap()).unwrap();
    assert_eq!(class(0, 5).tag, PartitionTag::Center);
    assert_eq!(class(1, 1).tag, PartitionTag::SimZ);
    assert_eq!(class(1, 0).tag, PartitionTag::NegSimZ);
    let c = class(6, 2);
    assert_eq!(c.tag, PartitionTag::Mixed);
    let (sv, tv) = c.decomposition.unwrap();
    assert_eq!((sv.bits(), tv.bits()), (4, 2));
    // t = (b/a)^(θ⁻¹), s = a + t, by the oracle field.
    let f = &s.f;
    let t_or = f.theta_inv(f.mul(2, f.inv(6)));
    assert_eq!((6 ^ t_or, t_or), (4, 2));
    // (4,0) + (2,7) = (6,2), with (2,7) = ∼(0,2^(1+θ)).
    assert_eq!(s.add(P(4, 0), P(2, 7)), P(6, 2));
    let u = f.mul(2, f.theta(2));
    assert_eq!(u, 7);
}
