use freepal::endo::{apply_r, l_of, matrix_of, r_of, Endomorphism, IntMatrix2};
use freepal::freegroup::{are_conjugate, FreeWord, IntVector2, Letter};
use freepal::pal::{exchange, in_kernel, pal, pal_hat, pal_recursive, SemiDirectElement};
use freepal::quotient::{act_point, FiniteHom, Permutation, Point};
use freepal::{beta, iota, sl2};
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(0usize..4, 0..=max_len)
        .prop_map(|idx| FreeWord::reduce(idx.into_iter().map(|i| Letter::ALL[i])))
}

fn letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0usize..4, 0..=max_len)
        .prop_map(|idx| idx.into_iter().map(|i| Letter::ALL[i]).collect())
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn w(s: &str) -> FreeWord {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_is_idempotent(raw in letters(16)) {
        let once = FreeWord::reduce(raw);
        prop_assert_eq!(FreeWord::reduce(once.letters().to_vec()), once);
    }

    #[test]
    fn inverses_cancel(u in word(12)) {
        prop_assert!(u.concat(&u.invert()).is_identity());
        prop_assert!(u.invert().concat(&u).is_identity());
        prop_assert_eq!(u.invert().invert(), u);
    }

    #[test]
    fn concat_is_associative(u in word(8), v in word(8), x in word(8)) {
        prop_assert_eq!(u.concat(&v).concat(&x), u.concat(&v.concat(&x)));
    }

    #[test]
    fn mirror_is_anti_automorphism(u in word(10), v in word(10)) {
        prop_assert_eq!(u.concat(&v).mirror(), v.mirror().concat(&u.mirror()));
        prop_assert_eq!(u.mirror().mirror(), u.clone());
        prop_assert_eq!(u.mirror().abelianize(), u.abelianize());
    }

    #[test]
    fn abelianize_is_additive(u in word(10), v in word(10)) {
        prop_assert_eq!(u.concat(&v).abelianize(), u.abelianize() + v.abelianize());
    }

    #[test]
    fn cyclic_reduce_decomposes(u in word(12)) {
        let (core, conj) = u.cyclic_reduce();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(conj.concat(&core).concat(&conj.invert()), u.clone());
    }

    #[test]
    fn conjugates_are_conjugate(u in word(10), c in word(6)) {
        prop_assert!(are_conjugate(&u, &c.concat(&u).concat(&c.invert())));
    }

    #[test]
    fn r_fixes_commutator(x in word(12)) {
        prop_assert_eq!(r_of(&x).apply(&w("abAB")), w("abAB"));
    }

    #[test]
    fn compose_matches_sequential_application(x in word(6), y in word(6), u in word(8)) {
        let (ex, ey) = (r_of(&x), r_of(&y));
        prop_assert_eq!(ex.compose(&ey).apply(&u), ex.apply(&ey.apply(&u)));
        prop_assert_eq!(r_of(&x.concat(&y)), ex.compose(&ey));
        prop_assert_eq!(l_of(&x.concat(&y)), l_of(&x).compose(&l_of(&y)));
    }

    #[test]
    fn exchange_intertwines_r(x in word(10)) {
        let e = Endomorphism::exchange();
        prop_assert_eq!(e.compose(&r_of(&x)), r_of(&exchange(&x)).compose(&e));
    }

    #[test]
    fn l_is_conjugated_r(u in word(10)) {
        let a = w("a");
        let b = w("b");
        prop_assert_eq!(l_of(&a).apply(&u), a.concat(&r_of(&a).apply(&u)).concat(&a.invert()));
        prop_assert_eq!(l_of(&b).apply(&u), b.concat(&r_of(&b).apply(&u)).concat(&b.invert()));
        for x in [&a, &b] {
            prop_assert_eq!(r_of(x).apply(&u), l_of(x).apply(&u.mirror()).mirror());
        }
    }

    #[test]
    fn center_formula(u in word(10)) {
        let tau = Endomorphism::tau();
        let b = w("b");
        prop_assert_eq!(r_of(&w("aBa")).apply(&u), b.concat(&tau.apply(&u)).concat(&b.invert()));
        let ba = w("ba");
        let tau2 = tau.compose(&tau);
        prop_assert_eq!(r_of(&w("aBaaBa")).apply(&u), ba.concat(&tau2.apply(&u)).concat(&ba.invert()));
    }

    #[test]
    fn matrix_abelianizes_r(x in word(12), u in word(8)) {
        let m = matrix_of(&x).unwrap();
        prop_assert_eq!(r_of(&x).apply(&u).abelianize(), m.apply(u.abelianize()).unwrap());
        prop_assert_eq!(m.det().unwrap(), 1);
        prop_assert_eq!(m, r_of(&x).abelianization());
    }

    #[test]
    fn matrix_is_multiplicative(x in word(8), y in word(8)) {
        let lhs = matrix_of(&x.concat(&y)).unwrap();
        let rhs = matrix_of(&x).unwrap().checked_mul(&matrix_of(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pal_is_palindrome_and_recursive(x in word(14)) {
        let p = pal(&x);
        prop_assert!(p.is_palindrome());
        prop_assert_eq!(pal_recursive(&x), p.clone());
        prop_assert_eq!(w("AB").concat(&apply_r(&x, &w("ba"))), p.clone());
        prop_assert_eq!(exchange(&p), pal(&exchange(&x)));
    }

    #[test]
    fn justin_equations(u in word(10), v in word(10)) {
        let uv = u.concat(&v);
        prop_assert_eq!(pal(&uv), pal(&u).concat(&apply_r(&u, &pal(&v))));
        prop_assert_eq!(pal(&uv), l_of(&u).apply(&pal(&v)).concat(&pal(&u)));
        prop_assert_eq!(pal_hat(&uv), pal_hat(&u).mul(&pal_hat(&v)));
    }

    #[test]
    fn pal_abelianization(x in word(14)) {
        let m = matrix_of(&x).unwrap().checked_sub(&IntMatrix2::IDENTITY).unwrap();
        prop_assert_eq!(pal(&x).abelianize(), m.apply(IntVector2::new(1, 1)).unwrap());
    }

    #[test]
    fn semidirect_is_a_group(x1 in word(5), u in word(5), x2 in word(5), v in word(5), x3 in word(5), t in word(5)) {
        let p = SemiDirectElement::new(x1, u);
        let q = SemiDirectElement::new(x2, v);
        let r = SemiDirectElement::new(x3, t);
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&SemiDirectElement::identity()), p.clone());
        prop_assert_eq!(p.mul(&p.inverse()), SemiDirectElement::identity());
    }

    #[test]
    fn kernel_is_a_subgroup(c1 in word(4), c2 in word(4), e1 in -2i64..=2, e2 in -2i64..=2) {
        let gen = w("abA");
        let rel = w("aBabAb");
        let k1 = gen.pow(e1).concat(&c1.concat(&rel).concat(&c1.invert()));
        let k2 = c2.concat(&rel.pow(e2)).concat(&c2.invert()).concat(&gen);
        prop_assert!(in_kernel(&k1));
        prop_assert!(in_kernel(&k2));
        prop_assert!(in_kernel(&k1.concat(&k2)));
        prop_assert!(in_kernel(&k1.invert()));
    }

    #[test]
    fn iota_beta_is_r(x in word(10)) {
        prop_assert_eq!(iota(&beta(&x)), r_of(&x));
        prop_assert_eq!(sl2(&beta(&x)).unwrap(), matrix_of(&x).unwrap());
    }

    #[test]
    fn action_is_a_right_action(g in perm(4), h in perm(4), u in word(8), v in word(8)) {
        let p = Point::new(g, h).unwrap();
        prop_assert_eq!(act_point(&p, &u.concat(&v)), act_point(&act_point(&p, &u), &v));
    }

    #[test]
    fn action_matches_automorphism_engine(g in perm(4), h in perm(4), x in word(10)) {
        let phi = FiniteHom::new(g, h).unwrap();
        let r = r_of(&x);
        let expected = Point::new(phi.eval(&r.image_a), phi.eval(&r.image_b)).unwrap();
        prop_assert_eq!(act_point(&phi.point(), &x), expected);
        if in_kernel(&x) {
            prop_assert_eq!(phi.eval(&r.apply(&w("ab"))), phi.eval(&w("ab")));
        }
    }
}

#[test]
fn tau_squared_inverts_generators() {
    let tau = Endomorphism::tau();
    let t2 = tau.compose(&tau);
    assert_eq!(t2.apply(&w("a")), w("A"));
    assert_eq!(t2.apply(&w("b")), w("B"));
    assert!(t2.compose(&t2).is_identity());
}
