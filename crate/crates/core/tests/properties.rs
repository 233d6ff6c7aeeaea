use num_bigint::BigInt;
use proptest::prelude::*;

use braid_conway::braidword::{comb, parse_braid, BraidWord, Generator, Letter};
use braid_conway::chisymbol::{chi_braid, chi_braid_full, chi_braid_literal};
use braid_conway::chord3::{DiagramPoly, Reducer};
use braid_conway::mzvassoc::{shuffle, shuffle_regularize, ABWord, AB, DEFAULT_EPS};
use braid_conway::ncseries::{geom_power, magnus3, Chord, Series, Word};
use braid_conway::poly::EvenPoly;
use braid_conway::twobridge::{
    alexander_from_conway, alexander_plumbing, alexander_staircase, conway_from_alexander, conway_of_braid,
    conway_of_fraction, trace_braid, Fraction,
};

fn letter() -> impl Strategy<Value = Letter> {
    (prop_oneof![Just(Generator::X12), Just(Generator::X13), Just(Generator::X23)], 1i64..=3, any::<bool>())
        .prop_map(|(g, e, neg)| Letter::new(g, if neg { -e } else { e }))
}

fn braid(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(BraidWord::from_letters)
}

fn chord_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![Just(Chord::A), Just(Chord::B), Just(Chord::C)], 0..=max_len)
        .prop_map(|v| Word::from_letters(&v).unwrap())
}

fn ab_word(max_len: usize) -> impl Strategy<Value = ABWord> {
    prop::collection::vec(prop_oneof![Just(AB::A), Just(AB::B)], 0..=max_len).prop_map(ABWord)
}

fn coprime_odd() -> impl Strategy<Value = (i64, i64)> {
    (1i64..600, 1i64..5000).prop_filter_map("p odd, gcd 1", |(h, q)| {
        let p = 2 * h + 1;
        (num_integer::Integer::gcd(&p, &q) == 1).then_some((p, q % p + 1)).filter(|&(p, q)| num_integer::Integer::gcd(&p, &q) == 1)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn combing_preserves_abelianization(w in braid(12)) {
        let cf = comb(&w);
        prop_assert_eq!(cf.e12, w.exponent_sum(Generator::X12));
        for g in [Generator::X13, Generator::X23] {
            prop_assert_eq!(cf.tail.exponent_sum(g), w.exponent_sum(g));
        }
    }

    #[test]
    fn word_times_inverse_combs_to_identity(w in braid(12)) {
        prop_assert!(comb(&w.multiply(&w.inverse())).is_identity());
        prop_assert!(comb(&w.inverse().multiply(&w)).is_identity());
    }

    #[test]
    fn combing_is_idempotent_and_compatible_with_products(u in braid(8), v in braid(8)) {
        let cu = comb(&u);
        prop_assert_eq!(comb(&cu.to_braid()), cu.clone());
        let cv = comb(&v);
        prop_assert_eq!(comb(&u.multiply(&v)), comb(&cu.to_braid().multiply(&cv.to_braid())));
    }

    #[test]
    fn combing_respects_the_center(w in braid(12)) {
        // under the x12 x23 = x13 x23 x13^-1 x12 convention this is the central element
        let c = parse_braid("x12^-1 x13 x23").unwrap();
        prop_assert_eq!(comb(&c.multiply(&w)), comb(&w.multiply(&c)));
    }

    #[test]
    fn magnus_truncation_is_consistent(w in braid(6), m in 0usize..=5) {
        let cf = comb(&w);
        let big: Series<BigInt> = magnus3(&cf, 6);
        let small: Series<BigInt> = magnus3(&cf, m);
        prop_assert_eq!(big.truncate(m), small);
    }

    #[test]
    fn geometric_powers_multiply(a in -4i64..=4, b in -4i64..=4) {
        prop_assume!(a != 0 && b != 0);
        let n = 7;
        let fa: Series<BigInt> = geom_power(Chord::C, a, n).unwrap();
        let fb: Series<BigInt> = geom_power(Chord::C, b, n).unwrap();
        let prod = fa.mul(&fb).unwrap();
        if a + b == 0 {
            prop_assert_eq!(prod, Series::one(n));
        } else {
            prop_assert_eq!(prod, geom_power(Chord::C, a + b, n).unwrap());
        }
    }

    #[test]
    fn reduction_is_multiplicative(u in chord_word(4), v in chord_word(4)) {
        let mut r = Reducer::new();
        let whole: DiagramPoly<BigInt> = r.reduce(u.concat(v));
        let (ru, rv): (DiagramPoly<BigInt>, DiagramPoly<BigInt>) = (r.reduce(u), r.reduce(v));
        prop_assert_eq!(ru.mul(&rv, &mut r), whole.clone());
        prop_assert!(whole.terms().all(|(d, _)| d.degree() == u.len() + v.len()));
    }

    #[test]
    fn streaming_symbol_matches_literal_route(w in braid(5)) {
        prop_assert_eq!(chi_braid(&w, 6), chi_braid_literal(&w, 6));
    }

    #[test]
    fn symbol_stabilizes(w in braid(10), n in 0usize..12) {
        let full = chi_braid_full(&w);
        prop_assert_eq!(chi_braid(&w, n), full.truncate_t(n));
        prop_assert_eq!(chi_braid(&w, n + 2).truncate_t(n), chi_braid(&w, n));
    }

    #[test]
    fn symbol_equals_oracle(w in braid(14)) {
        prop_assert_eq!(chi_braid_full(&w), conway_of_braid(&w).unwrap());
    }

    #[test]
    fn conway_is_mirror_insensitive(w in braid(10)) {
        let trace = trace_braid(&w).unwrap();
        let mirrored = Fraction::new(-trace.fraction.numerator().clone(), trace.fraction.denominator().clone()).unwrap();
        prop_assert_eq!(conway_of_fraction(&mirrored).unwrap(), trace.conway);
    }

    #[test]
    fn fraction_symmetries((p, q) in coprime_odd()) {
        let f = |a: i64, b: i64| conway_of_fraction(&Fraction::new(a, b).unwrap()).unwrap();
        let base = f(p, q);
        prop_assert_eq!(f(p, q + 2 * p), base.clone());
        prop_assert_eq!(f(p, -q), base.clone());
        // q q' = 1 mod p gives the same knot
        let inv = (1..p).find(|&x| (x * q).rem_euclid(p) == 1).unwrap();
        prop_assert_eq!(f(p, inv), base.clone());
        prop_assert_eq!(base.coeff(0), BigInt::from(1));
    }

    #[test]
    fn alexander_routes_agree((p, q) in coprime_odd()) {
        let f = Fraction::new(p, q).unwrap();
        let st = alexander_staircase(&f).unwrap();
        prop_assert_eq!(&st, &alexander_plumbing(&f).unwrap());
        let nabla = conway_from_alexander(&st).unwrap();
        prop_assert_eq!(alexander_from_conway(&nabla), st);
    }

    #[test]
    fn regularization_is_a_shuffle_homomorphism(u in ab_word(3), v in ab_word(3)) {
        let val = |w: &ABWord| shuffle_regularize(w).eval(DEFAULT_EPS).unwrap();
        let lhs = val(&u) * val(&v);
        let rhs: f64 = shuffle(&u, &v).iter().map(|(w, &k)| k as f64 * val(w)).sum();
        prop_assert!((lhs - rhs).abs() < 1e-7, "{} {} {} {}", u, v, lhs, rhs);
    }

    #[test]
    fn even_poly_json_round_trips(c in prop::collection::vec(-1000i64..1000, 0..8)) {
        let p = EvenPoly::new(c);
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<EvenPoly>(&s).unwrap(), p);
    }

    #[test]
    fn braid_json_round_trips(w in braid(10)) {
        let s = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&s).unwrap(), w.clone());
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }
}

#[test]
fn negating_exponents_is_not_mirroring() {
    let w = parse_braid("x13").unwrap();
    assert_eq!(conway_of_braid(&w).unwrap(), EvenPoly::new([1, 1]));
    assert_eq!(conway_of_braid(&w.mirror()).unwrap(), EvenPoly::one());
    assert_eq!(chi_braid_full(&w.mirror()), EvenPoly::one());
}
