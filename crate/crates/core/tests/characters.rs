use std::sync::Arc;

use hopf_forests::characters::*;
use hopf_forests::hopf::{ck_coproduct, ConnesKreimer, HopfAlgebra, Shuffle};
use hopf_forests::morphisms::{t_sigma_decorated, TSigma};
use hopf_forests::trees::{enumerate_plain, heap_order_lifts};
use hopf_forests::{MultiPoly, Permutation, PlainForest, Rational, Var, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Polynomial from `(coefficient, [t, u, s] exponents)` terms.
fn poly(terms: &[(Rational, [u32; 3])]) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for (c, e) in terms {
        p.add_term(*e, c.clone());
    }
    p
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn pf(s: &str) -> PlainForest {
    s.parse().unwrap()
}

fn standard_path() -> Arc<PolyPath> {
    Arc::new("1: 1\n2: 2*x".parse().unwrap())
}

fn random_word_values(d: u32, seed: u64) -> Character<Shuffle, Rational> {
    Character::from_fn(Arc::new(Shuffle::new(d)), move |word: &Word| {
        if word.len() == 0 {
            return Rational::one();
        }
        let h = word.letters().iter().fold(seed, |h, &a| h.wrapping_mul(31).wrapping_add(a as u64));
        let mut rng = ChaCha8Rng::seed_from_u64(h);
        q(rng.gen_range(-9..=9), rng.gen_range(1..=4))
    })
}

#[test]
fn word_convolution_is_deconcatenation() {
    let phi = random_word_values(2, 1);
    let psi = random_word_values(2, 2);
    let conv = phi.convolve(&psi).unwrap();
    for word in Shuffle::new(2).basis_up_to(4) {
        let mut expected = Rational::zero();
        for i in 0..=word.len() {
            let a = phi.value(&word.slice(0, i)).unwrap();
            let b = psi.value(&word.slice(i, word.len())).unwrap();
            expected = &expected + &(&a * &b);
        }
        assert_eq!(conv.value(&word).unwrap(), expected, "{}", word);
    }
    let unit = Character::unit(phi.hopf().clone());
    let right = phi.convolve(&unit).unwrap();
    assert!(compare_characters("phi * e", &phi, &right, 4).unwrap().passed());
}

#[test]
fn convolution_rejects_mixed_structures() {
    let a = random_word_values(2, 1);
    let b = random_word_values(3, 1);
    assert!(a.convolve(&b).is_err());
}

#[test]
fn ck_convolution_by_cuts() {
    let h = Arc::new(ConnesKreimer::new(2));
    let val = |seed: i64| move |t: &hopf_forests::trees::PlainTree| q(seed + t.size() as i64 + 3 * t.dec() as i64, 2);
    let phi = multiplicative_ck(h.clone(), val(1));
    let psi = multiplicative_ck(h.clone(), val(5));
    let conv = phi.convolve(&psi).unwrap();
    let v = |c: &Character<ConnesKreimer, Rational>, s: &str| c.value(&pf(s)).unwrap();
    // ladder 1[2]: cuts above nothing, above the leaf, above the root
    let expected = &(&v(&phi, "1[2]") + &(&v(&phi, "1") * &v(&psi, "2"))) + &v(&psi, "1[2]");
    assert_eq!(v(&conv, "1[2]"), expected);
    let expected = &(&(&v(&phi, "1|2") + &v(&psi, "1|2")) + &(&v(&phi, "1") * &v(&psi, "2"))) + &(&v(&phi, "2") * &v(&psi, "1"));
    assert_eq!(v(&conv, "1|2"), expected);
    assert_eq!(ck_coproduct(&pf("1[2]")).len(), 3);
}

#[test]
fn inverses() {
    let phi = random_word_values(2, 7);
    let inv = phi.inverse();
    assert_eq!(inv.value(&w("12")).unwrap(), phi.value(&w("21")).unwrap());
    assert_eq!(inv.value(&w("122")).unwrap(), -&phi.value(&w("221")).unwrap());
    let unit: Character<Shuffle, Rational> = Character::unit(Arc::new(Shuffle::new(2)));
    assert!(compare_characters("e^-1 = e", &unit.inverse(), &unit, 4).unwrap().passed());

    let h = Arc::new(ConnesKreimer::new(2));
    let chi = multiplicative_ck(h.clone(), |t| q(t.size() as i64 * 2 - t.dec() as i64, 3));
    let prod = chi.convolve(&chi.inverse()).unwrap();
    let check = compare_characters("phi * phi^-1", &prod, &Character::unit(h.clone()), 3).unwrap();
    assert!(check.passed(), "{}", check);
    let left = chi.inverse().convolve(&chi).unwrap();
    assert!(compare_characters("phi^-1 * phi", &left, &Character::unit(h), 3).unwrap().passed());
}

#[test]
fn group_law_is_associative() {
    let a = random_word_values(2, 11);
    let b = random_word_values(2, 12);
    let c = random_word_values(2, 13);
    let left = a.convolve(&b).unwrap().convolve(&c).unwrap();
    let right = a.convolve(&b.convolve(&c).unwrap()).unwrap();
    assert!(compare_characters("assoc Sh", &left, &right, 4).unwrap().passed());

    let h = Arc::new(ConnesKreimer::new(2));
    let mk = |k: i64| multiplicative_ck(h.clone(), move |t| q(k * t.size() as i64 - t.dec() as i64, 1 + k));
    let (a, b, c) = (mk(1), mk(2), mk(3));
    let left = a.convolve(&b).unwrap().convolve(&c).unwrap();
    let right = a.convolve(&b.convolve(&c).unwrap()).unwrap();
    assert!(compare_characters("assoc H", &left, &right, 4).unwrap().passed());
}

#[test]
fn validation() {
    let sig = standard_path().signature(Var::T, Var::S);
    let check = validate_character(&sig, 4).unwrap();
    assert!(check.passed(), "{}", check);

    let h = Arc::new(ConnesKreimer::new(2));
    let free = multiplicative_ck(h.clone(), |t| q(t.size() as i64 + 2, t.dec() as i64));
    assert!(validate_character(&free, 4).unwrap().passed());

    let corrupted = Character::from_fn(sig.hopf().clone(), {
        let sig = sig.clone();
        move |word: &Word| {
            let v = sig.value(word).unwrap();
            if *word == "12".parse::<Word>().unwrap() {
                &v + &MultiPoly::constant(Rational::one())
            } else {
                v
            }
        }
    });
    let bad = validate_character(&corrupted, 3).unwrap();
    assert!(!bad.passed());
    assert!(bad.counterexample.is_some());
}

#[test]
fn iterated_integral_examples() {
    let one: PolyPath = "1: 1".parse().unwrap();
    // (t - s)^2 / 2
    let expected = poly(&[(q(1, 2), [2, 0, 0]), (q(-1, 1), [1, 0, 1]), (q(1, 2), [0, 0, 2])]);
    assert_eq!(iter_int_word(&one, &w("11")).unwrap(), expected);
    assert_eq!(iter_int_word(&one, &Word::empty()).unwrap(), MultiPoly::constant(Rational::one()));
    let p = standard_path();
    let expected = poly(&[(q(1, 3), [3, 0, 0]), (q(-1, 1), [1, 0, 2]), (q(2, 3), [0, 0, 3])]);
    assert_eq!(iter_int_word(&p, &w("12")).unwrap(), expected);
}

#[test]
fn tree_integrals() {
    let ones: PolyPath = "1: 1\n2: 1\n3: 1".parse().unwrap();
    // (t - s)^3 / 3
    let cube = poly(&[
        (q(1, 3), [3, 0, 0]),
        (q(-1, 1), [2, 0, 1]),
        (q(1, 1), [1, 0, 2]),
        (q(-1, 3), [0, 0, 3]),
    ]);
    assert_eq!(iter_int_tree(&ones, &pf("1[2,3]")).unwrap(), cube);
    let p = standard_path();
    for word in Shuffle::new(2).basis_up_to(4) {
        assert_eq!(iter_int_tree(&p, &PlainForest::trunk(&word)).unwrap(), iter_int_word(&p, &word).unwrap());
    }
    let (f, g) = (pf("1[2]"), pf("2[1,2]"));
    assert_eq!(
        iter_int_tree(&p, &f.union(&g)).unwrap(),
        &iter_int_tree(&p, &f).unwrap() * &iter_int_tree(&p, &g).unwrap()
    );
    let cherry = pf("1[2,1]");
    let sum = &iter_int_word(&p, &w("121")).unwrap() + &iter_int_word(&p, &w("112")).unwrap();
    assert_eq!(iter_int_tree(&p, &cherry).unwrap(), sum);
}

#[test]
fn extension_matches_tree_integral() {
    let path = standard_path();
    let h = Arc::new(ConnesKreimer::new(2));
    let bar = extend_shuffle_char(&path.signature(Var::T, Var::S), h.clone());
    let direct = path.tree_character(Var::T, Var::S);
    let check = compare_characters("extension", &bar, &direct, 4).unwrap();
    assert!(check.passed(), "{}", check);
    assert!(validate_character(&bar, 4).unwrap().passed());
    assert_eq!(bar.value(&pf("2")).unwrap(), path.word_integral(&w("2"), Var::T, Var::S).unwrap());

    let tables = TSigma::default();
    let sig = path.signature(Var::T, Var::S);
    for n in 1..=3 {
        for ell in Word::all(n, 2) {
            for sigma in Permutation::all(n) {
                let t = t_sigma_decorated(&tables, &sigma, ell.letters()).unwrap();
                let word = Word(sigma.inverse().permute(ell.letters()));
                assert_eq!(bar.value_lin(&t).unwrap(), sig.value(&word).unwrap(), "{} {}", sigma, ell);
            }
        }
    }
}

#[test]
fn invariant_under_lifts() {
    let path = standard_path();
    for n in 0..=4 {
        for f in enumerate_plain(n, 2) {
            let plain = path.tree_integral(&f, Var::T, Var::S).unwrap();
            for lift in heap_order_lifts(&f) {
                assert_eq!(path.ordered_integral(&lift, Var::T, Var::S).unwrap(), plain, "{}", f);
            }
        }
    }
}

#[test]
fn chen_and_shuffle() {
    let path = standard_path();
    let ts = path.signature(Var::T, Var::S);
    let tu = path.signature(Var::T, Var::U);
    let us = path.signature(Var::U, Var::S);
    let chen = compare_characters("Chen", &ts, &tu.convolve(&us).unwrap(), 4).unwrap();
    assert!(chen.passed(), "{}", chen);
    let shuffle = validate_character(&ts, 5).unwrap();
    assert!(shuffle.passed(), "{}", shuffle);
}

#[test]
fn fubini_examples() {
    let abc = [1, 2, 3];
    let expected: hopf_forests::LinComb<PlainForest> =
        [(pf("a[b]|c"), Rational::one()), (pf("a[b,c]"), -Rational::one())].into_iter().collect();
    assert_eq!(fubini_tsigma(&"231".parse().unwrap(), &abc), expected);
    assert_eq!(
        fubini_tsigma(&Permutation::identity(3), &abc),
        hopf_forests::LinComb::basis(PlainForest::trunk(&w("abc")))
    );
    let tables = TSigma::default();
    for n in 0..=4 {
        for ell in Word::all(n, 2).into_iter().chain([Word((1..=n as u32).collect())]) {
            for sigma in Permutation::all(n) {
                assert_eq!(
                    fubini_tsigma(&sigma, ell.letters()),
                    t_sigma_decorated(&tables, &sigma, ell.letters()).unwrap(),
                    "{} {}",
                    sigma,
                    ell
                );
            }
        }
    }
}
