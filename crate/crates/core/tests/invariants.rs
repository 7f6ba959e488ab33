use jspec::maps::make_induced;
use jspec::polyalg::{divides, gcd, MultiPoly};
use jspec::spectrum::pencil_poly;
use jspec::verify::gen::{random_invertible, random_projection_in, trial_rng};
use jspec::verify::default_pool;
use jspec::{Automorphism, FieldContext, FieldElem, Projection};
use proptest::prelude::*;

const NVARS: usize = 3;

fn ctx() -> FieldContext {
    FieldContext::default()
}

fn coeff() -> impl Strategy<Value = FieldElem> {
    (-3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(a, b, c)| {
        let k = ctx();
        &(&k.int(a) + &(&k.int(b) * &k.r())) + &(&k.int(c) * &k.i())
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, NVARS), coeff()), 0..4)
        .prop_map(|terms| MultiPoly::from_terms(ctx(), NVARS, terms).unwrap())
}

fn nonconstant() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonconstant", |p| !p.is_constant())
}

fn projection(n: usize, seed: u64) -> Projection {
    let mut rng = trial_rng(seed, 0);
    let r = (seed as usize) % (n + 1);
    random_projection_in(ctx(), &default_pool(ctx()), n, r, &mut rng).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), s in poly()) {
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&(&p + &q) - &q) == p);
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), q in nonconstant()) {
        let quotient = divides(&q, &(&p * &q)).unwrap();
        prop_assert_eq!(quotient, Some(p));
    }

    #[test]
    fn gcd_divides_both_and_keeps_common_factor(a in poly(), b in poly(), g in nonconstant()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (x, y) = (&a * &g, &b * &g);
        let h = gcd(&x, &y).unwrap();
        if !x.is_zero() {
            prop_assert!(divides(&h, &x).unwrap().is_some());
        }
        if !y.is_zero() {
            prop_assert!(divides(&h, &y).unwrap().is_some());
        }
        prop_assert!(divides(&g, &h).unwrap().is_some());
    }

    #[test]
    fn squarefree_part_is_idempotent_and_ignores_powers(p in nonconstant()) {
        let s = p.squarefree_part().unwrap();
        prop_assert_eq!(&s.squarefree_part().unwrap(), &s);
        prop_assert_eq!(&p.pow(3).squarefree_part().unwrap(), &s);
        prop_assert!(divides(&s, &p.pow(2)).unwrap().is_some());
    }

    #[test]
    fn parse_inverts_display(p in poly()) {
        prop_assert_eq!(MultiPoly::parse(&p.to_string(), ctx(), NVARS).unwrap(), p);
    }

    #[test]
    fn lattice_bounds(n in 2usize..=4, a in any::<u64>(), b in any::<u64>()) {
        let (p, q) = (projection(n, a), projection(n, b));
        let (meet, join) = (p.meet(&q).unwrap(), p.join(&q).unwrap());
        prop_assert!(meet.leq(&p).unwrap() && p.leq(&join).unwrap());
        prop_assert_eq!(meet.rank() + join.rank(), p.rank() + q.rank());
        prop_assert!(p.orthogonal(&p.complement()).unwrap());
        prop_assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn pencil_is_homogeneous_of_degree_n(n in 2usize..=4, seeds in prop::collection::vec(any::<u64>(), 1..=3)) {
        let tuple: Vec<_> = seeds.iter().map(|&s| projection(n, s)).collect();
        let s = pencil_poly(&tuple).unwrap();
        if !s.pencil().is_zero() {
            prop_assert!(s.pencil().is_homogeneous());
            prop_assert_eq!(s.pencil().total_degree(), Some(n as u32));
        }
    }

    #[test]
    fn induced_maps_are_rank_preserving_bijections(
        n in 2usize..=3,
        f in prop::sample::select(Automorphism::ALL.to_vec()),
        seed in any::<u64>(),
        a in any::<u64>(),
    ) {
        let b = random_invertible(&default_pool(ctx()), n, &mut trial_rng(seed, 1));
        let m = make_induced(f, b).unwrap();
        let p = projection(n, a);
        let image = m.apply(&p).unwrap();
        prop_assert_eq!(image.rank(), p.rank());
        prop_assert_eq!(m.inverse().unwrap().apply(&image).unwrap(), p);
    }
}
