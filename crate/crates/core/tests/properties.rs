use std::sync::OnceLock;

use moufang::{build_projective_line, build_suzuki, FieldSpec, MoufangSet, Permutation, RootGroup, RootGroupElement};
use proptest::prelude::*;

fn gf(n: u32) -> FieldSpec {
    FieldSpec::new(n).unwrap()
}

fn a5() -> &'static RootGroup {
    static G: OnceLock<RootGroup> = OnceLock::new();
    G.get_or_init(|| RootGroup::suzuki(FieldSpec::tits(5).unwrap()).unwrap())
}

fn sets() -> &'static [MoufangSet] {
    static S: OnceLock<Vec<MoufangSet>> = OnceLock::new();
    S.get_or_init(|| vec![build_projective_line(16).unwrap(), build_suzuki(8).unwrap()])
}

fn pair() -> impl Strategy<Value = RootGroupElement> {
    (0u32..32, 0u32..32).prop_map(|(a, b)| a5().pair(a, b).unwrap())
}

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn field_axioms(n in 1u32..=12, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = gf(n);
        let mask = f.order() - 1;
        let (a, b, c) = (f.element(a & mask).unwrap(), f.element(b & mask).unwrap(), f.element(c & mask).unwrap());
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.square(f.add(a, b)), f.add(f.square(a), f.square(b)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn theta_squared_is_frobenius(n in prop::sample::select(vec![3u32, 5, 7, 9, 11]), a in any::<u32>()) {
        let f = FieldSpec::tits(n).unwrap();
        let a = f.element(a & (f.order() - 1)).unwrap();
        prop_assert_eq!(f.theta(f.theta(a)), f.square(a));
        prop_assert_eq!(f.theta_inv(f.theta(a)), a);
    }

    #[test]
    fn suzuki_group_axioms(x in pair(), y in pair(), z in pair()) {
        let g = a5();
        let add = |p: &RootGroupElement, q: &RootGroupElement| g.add(p, q).unwrap();
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(add(&x, &g.zero()), x);
        prop_assert_eq!(add(&x, &g.neg(&x).unwrap()), g.zero());
        prop_assert!(g.element_order(&x) <= 4);
        let d = g.double(&x).unwrap();
        prop_assert_eq!(add(&d, &y), add(&y, &d));
    }

    #[test]
    fn h_lambda_is_an_automorphism(l in 1u32..32, x in pair(), y in pair()) {
        let g = a5();
        let l = g.spec().element(l).unwrap();
        let h = |p: &RootGroupElement| g.h_lambda(l, p).unwrap();
        prop_assert_eq!(h(&g.add(&x, &y).unwrap()), g.add(&h(&x), &h(&y)).unwrap());
    }

    #[test]
    fn permutation_laws(p in perm(12), q in perm(12), r in perm(12)) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
        prop_assert_eq!(p.conjugate_by(&q), q.inverse().then(&p).then(&q));
        prop_assert!(p.pow(p.order()).is_identity());
        for x in 0..12 {
            prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn mu_identities(which in 0usize..2, a in 1usize..64, b in 1usize..64) {
        let m = &sets()[which];
        let (a, b) = (a % m.size(), b % m.size());
        prop_assume!(a != 0 && b != 0);
        let mu_a = m.mu_at(a);
        prop_assert!(mu_a.is_inverse_of(m.mu_at(m.neg(a))));
        prop_assert_eq!(mu_a.apply(0), m.inf());
        prop_assert_eq!(mu_a.apply(m.inf()), 0);
        // μ_{aμ_b} = (μ_{-a})^{μ_b}
        let amb = m.mu_at(b).apply(a);
        prop_assert_eq!(m.mu_at(amb), &m.mu_at(m.neg(a)).conjugate_by(m.mu_at(b)));
        // μ_{∼a} = μ_{-a}
        prop_assert_eq!(m.mu_at(m.sim_at(a)), m.mu_at(m.neg(a)));
        // h_a fixes 0 and ∞
        let h = m.hua_at(a);
        prop_assert_eq!((h.apply(0), h.apply(m.inf())), (0, m.inf()));
    }
}
