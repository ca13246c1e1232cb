//! Randomized invariants over exact arithmetic.

use genschur::characters::{character, character_via_expansion, Group, TorusPoint};
use genschur::kernel::{det, exp_nilpotent, frac, int, inverse, invert_unitriangular, Matrix, Rational};
use genschur::partitions::{Frobenius, Partition};
use genschur::polybasis::PolyBasis;
use genschur::schurgen::{all_routes, EvalPoint};
use genschur::symfun::{monomial_sums, schur_t};
use genschur::walks::{chapman_kolmogorov_check, RateSpec};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn strictly_lower(n: usize) -> impl Strategy<Value = Matrix> {
    square(n).prop_map(move |m| Matrix::from_fn(n, n, |i, j| if j < i { m[(i, j)].clone() } else { int(0) }))
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn distinct_point(n: usize) -> impl Strategy<Value = EvalPoint> {
    prop::collection::vec(rational(), n).prop_filter_map("distinct coordinates", |v| EvalPoint::new(v).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn det_is_multiplicative(a in square(4), b in square(4)) {
        prop_assert_eq!(det(&a.mul(&b).unwrap()).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn inverse_both_sides(a in square(4)) {
        prop_assume!(det(&a).unwrap() != int(0));
        let inv = inverse(&a).unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(4));
        prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(4));
    }

    #[test]
    fn unitriangular_inverse(l in strictly_lower(5)) {
        let a = l.add(&Matrix::identity(5)).unwrap();
        let inv = invert_unitriangular(&a).unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(5));
        prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(5));
    }

    #[test]
    fn exp_group_law(g in strictly_lower(5), s in rational(), t in rational()) {
        let lhs = exp_nilpotent(&g, &(&s + &t)).unwrap();
        let rhs = exp_nilpotent(&g, &s).unwrap().mul(&exp_nilpotent(&g, &t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(det(&exp_nilpotent(&g, &t).unwrap()).unwrap(), int(1));
    }

    #[test]
    fn conjugation_and_frobenius(p in partition(5, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
        let f = p.frobenius();
        prop_assert_eq!(Partition::from_frobenius(&f).unwrap(), p.clone());
        let fc = p.conjugate().frobenius();
        prop_assert_eq!(fc, Frobenius::new(f.legs.clone(), f.arms.clone()).unwrap());
        let l = p.particle_coords(5, 5).unwrap();
        prop_assert!(l.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn four_routes_at_random_points(x in distinct_point(2), p in partition(2, 4), k in 0usize..4) {
        let phi = match k {
            0 => PolyBasis::monomial(10),
            1 => PolyBasis::sp(10),
            2 => PolyBasis::so_even(10),
            _ => PolyBasis::so_odd(10),
        };
        let r = all_routes(&phi, &p, &x).unwrap();
        prop_assert!(r.agree(), "{:?}", r);
    }

    #[test]
    fn schur_of_power_sums_is_classical(x in distinct_point(3), p in partition(3, 3)) {
        let t = monomial_sums(x.values(), p.weight().max(1));
        let classical = all_routes(&PolyBasis::monomial(10), &p, &x).unwrap().bialternant;
        prop_assert_eq!(schur_t(&p, &t), classical);
    }

    #[test]
    fn characters_two_ways(a in 1i64..=6, b in 1i64..=6, p in partition(2, 3)) {
        let pt = TorusPoint::new(vec![int(a), frac(1, b + 1)]).unwrap();
        for g in Group::ALL {
            prop_assert_eq!(character(g, &p, &pt).unwrap(), character_via_expansion(g, &p, &pt).unwrap());
        }
    }

    #[test]
    fn chapman_kolmogorov(rates in prop::collection::vec(1i64..=4, 4), lam in partition(2, 2), s in rational(), t in rational()) {
        let r = RateSpec::new(rates.into_iter().map(int).collect()).unwrap();
        prop_assert!(chapman_kolmogorov_check(&r, &lam, &Partition::zero(), 2, &s, &t).unwrap());
    }
}
