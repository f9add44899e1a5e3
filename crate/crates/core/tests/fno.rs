use std::sync::Arc;
use std::time::Instant;

use hopf_forests::characters::validate_character;
use hopf_forests::fno::*;
use hopf_forests::hopf::ck_antipode;
use hopf_forests::trees::enumerate_heap_ordered;
use hopf_forests::{FnoError, FreqExpValue, GaussianRational, LinComb, OrderedForest, Permutation, Rational, Ring, Var, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(r(re), r(im))
}

fn atom(freq: &[i64]) -> FourierAtom {
    FourierAtom::new(freq.iter().map(|&x| r(x)).collect(), GaussianRational::one())
}

fn dirac(freq: &[i64]) -> AtomMeasure {
    AtomMeasure::dirac(atom(freq)).unwrap()
}

fn trunk(n: usize) -> OrderedForest {
    OrderedForest::from_parents((0..n).collect()).unwrap()
}

fn of(s: &str) -> OrderedForest {
    s.parse().unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn exp_t(xi: Rational, c: GaussianRational) -> FreqExpValue {
    FreqExpValue::exp(Var::T, xi, c)
}

fn standard() -> Arc<Fno> {
    Arc::new(Fno::new(TrigPath::single_atoms(&[1, 2]).unwrap(), TiePolicy::Symmetric))
}

#[test]
fn skeleton_examples() {
    let dot = trunk(1);
    assert_eq!(skeleton_tree(&dot, &dirac(&[1]), Var::T).unwrap(), exp_t(r(1), g(0, -1)));
    // inner ∫^x e^{2iy} dy = e^{2ix}/(2i), then ∫^t e^{3ix}/(2i) dx
    assert_eq!(skeleton_tree(&trunk(2), &dirac(&[1, 2]), Var::T).unwrap(), exp_t(r(3), GaussianRational::real(Rational::new(-1, 6))));
    // cherry 1[2,3] on (1,2,4): denominators 7, 2, 4 against the trunk's 7, 6, 4
    let freq = [1, 2, 4];
    let cherry = skeleton_tree(&of("1[2,3]"), &dirac(&freq), Var::T).unwrap();
    let ladder = skeleton_tree(&trunk(3), &dirac(&freq), Var::T).unwrap();
    let i3 = GaussianRational::i_pow(-3);
    assert_eq!(cherry, exp_t(r(7), &i3 * &GaussianRational::real(Rational::new(1, 56))));
    assert_eq!(ladder, exp_t(r(7), &i3 * &GaussianRational::real(Rational::new(1, 168))));
    assert_eq!(cherry, skeleton_closed_form(&of("1[2,3]"), &dirac(&freq), Var::T).unwrap().scale(&i3));
}

#[test]
fn closed_form_constant_per_degree() {
    for freq in [&[3][..], &[1, 2], &[1, 2, 4], &[1, -3, 7, 20]] {
        let (check, ratio) = check_closed_form_constant(&freq.iter().map(|&x| r(x)).collect::<Vec<_>>()).unwrap();
        assert!(check.passed(), "{}", check);
        assert_eq!(ratio, GaussianRational::i_pow(-(freq.len() as i64)));
    }
}

#[test]
fn skeleton_errors() {
    let err = skeleton_tree(&trunk(2), &dirac(&[1, -1]), Var::T).unwrap_err();
    assert!(matches!(err, FnoError::Singular { vertex: 1, .. }));
    assert!(matches!(skeleton_tree(&trunk(2), &dirac(&[1]), Var::T), Err(FnoError::ArityMismatch { .. })));
    assert!(matches!(split_measure(&dirac(&[2, -2])), Err(FnoError::MagnitudeTie(_))));
    assert!(AtomMeasure::dirac(atom(&[0, 1])).is_err());
}

#[test]
fn split_relabelling_example() {
    let mu = &dirac(&[3, -1, 2]) + &AtomMeasure::dirac(FourierAtom::new(vec![r(-5), r(4), r(1)], g(1, 2))).unwrap();
    assert!(check_sector_relabelling(&mu, TiePolicy::Strict).unwrap().passed());
    assert!(check_reassembly(&mu, TiePolicy::Strict).unwrap().passed());
}

fn random_measure(rng: &mut ChaCha8Rng, n: usize, ties: bool, pool: &[i64]) -> AtomMeasure {
    let mut mu = AtomMeasure::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let freq: Vec<Rational> = if ties {
            (0..n).map(|_| r(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 })).collect()
        } else {
            let mut mags: Vec<i64> = pool.to_vec();
            for i in (1..mags.len()).rev() {
                mags.swap(i, rng.gen_range(0..=i));
            }
            mags[..n].iter().map(|&m| r(m * if rng.gen_bool(0.5) { 1 } else { -1 })).collect()
        };
        let amp = g(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if !amp.is_zero() {
            mu.add_atom(FourierAtom::new(freq, amp)).unwrap();
        }
    }
    mu
}

#[test]
fn measure_splitting_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let start = Instant::now();
    let mut cases = 0;
    for round in 0..120 {
        let ties = round % 3 == 0;
        let policy = if ties { TiePolicy::Symmetric } else { TiePolicy::Strict };
        let n = rng.gen_range(1..=4);
        let mu = random_measure(&mut rng, n, ties, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        for c in [check_reassembly(&mu, policy).unwrap(), check_sector_relabelling(&mu, policy).unwrap()] {
            assert!(c.passed(), "{}", c);
        }
        let k = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=4 - k);
        let (m1, m2) = (random_measure(&mut rng, k, ties, &[1, 3, 5, 7, 9]), random_measure(&mut rng, l, ties, &[2, 4, 6, 8]));
        let c = check_product_splitting(&m1, &m2, policy).unwrap();
        assert!(c.passed(), "{}", c);
        cases += 1;
    }
    assert!(cases >= 100);
    eprintln!("splitting identities: {} cases in {:?}", cases, start.elapsed());
}

#[test]
fn chi_small_cases() {
    let fno = standard();
    let path = fno.path().clone();
    // a single letter: Σ c e^{iξt}/(iξ)
    assert_eq!(fno.chi(&w("2"), Var::T).unwrap(), exp_t(r(2), GaussianRational::imaginary(Rational::new(-1, 2))));
    // only the identity sector survives for frequencies (1, 2)
    let mu = path.tensor_measure(&w("12")).unwrap();
    assert_eq!(fno.chi(&w("12"), Var::T).unwrap(), skeleton_tree(&trunk(2), &mu, Var::T).unwrap());
    // in the other order the (21) sector is used with T^(21) = 1|2 - 1[2]
    let mu = path.tensor_measure(&w("21")).unwrap();
    assert_eq!(fno.chi(&w("21"), Var::T).unwrap(), skeleton_tree(&trunk(2), &mu, Var::T).unwrap());
}

#[test]
fn chi_is_the_trunk_skeleton() {
    let fno = standard();
    for n in 0..=4 {
        for word in Word::all(n, 2) {
            let mu = fno.path().tensor_measure(&word).unwrap();
            assert_eq!(fno.chi(&word, Var::T).unwrap(), skeleton_tree(&trunk(n), &mu, Var::T).unwrap(), "{}", word);
        }
    }
}

#[test]
fn chi_is_a_shuffle_character() {
    let start = Instant::now();
    let chi = standard().chi_character(Var::T);
    let check = validate_character(&chi, 4).unwrap();
    assert!(check.passed(), "{}", check);
    eprintln!("{} in {:?}", check, start.elapsed());

    let rich = Arc::new(Fno::new("1: 1@1, 2-i@-7\n2: 1/2@2".parse().unwrap(), TiePolicy::Symmetric));
    let check = validate_character(&rich.chi_character(Var::T), 3).unwrap();
    assert!(check.passed(), "{}", check);
}

#[test]
fn rough_path_two_ways() {
    let fno = standard();
    for a in 1..=2 {
        let one = fno.rough_path(&Word(vec![a]), Var::T, Var::S).unwrap();
        assert!(one.agree());
        assert_eq!(one.j, fno.path().increment(a, Var::T, Var::S).unwrap());
    }
    let start = Instant::now();
    let check = check_j_equals_j_prime(&fno, 3).unwrap();
    assert!(check.passed(), "{}", check);
    let chen = check_chen(&fno, 3).unwrap();
    assert!(chen.passed(), "{}", chen);
    let shuffle = validate_character(&fno.j_character(Var::T, Var::S), 3).unwrap();
    assert!(shuffle.passed(), "{}", shuffle);
    eprintln!("J checks in {:?}", start.elapsed());
}

#[test]
fn multiplicativity_and_invariance() {
    let c = phi_multiplicativity_check(&trunk(1), &trunk(1), &dirac(&[2]), &dirac(&[-5])).unwrap();
    assert!(c.passed());
    let mu1 = &dirac(&[1, 3]) + &AtomMeasure::dirac(FourierAtom::new(vec![r(2), r(-7)], g(0, 1))).unwrap();
    let c = phi_multiplicativity_check(&trunk(2), &trunk(1), &mu1, &dirac(&[5])).unwrap();
    assert!(c.passed());
    let expected = &skeleton_tree(&trunk(2), &mu1, Var::T).unwrap() * &skeleton_tree(&trunk(1), &dirac(&[5]), Var::T).unwrap();
    assert_eq!(skeleton_tree(&of("1[2]|3"), &mu1.tensor(&dirac(&[5])), Var::T).unwrap(), expected);
    for n in 1..=3 {
        let freq: Vec<i64> = [1, 3, 9][..n].to_vec();
        for f in enumerate_heap_ordered(n) {
            let c = check_symmetry_invariance(&f, &dirac(&freq)).unwrap();
            assert!(c.passed(), "{}", c);
        }
    }
}

#[test]
fn labelled_antipode_matches_ck() {
    for n in 0..=4 {
        for f in enumerate_heap_ordered(n) {
            let labelled: LinComb<_> = labelled_antipode(&f)
                .into_iter()
                .map(|(neg, g)| (g.to_plain(), if neg { -Rational::one() } else { Rational::one() }))
                .collect();
            assert_eq!(labelled, ck_antipode(&f.to_plain()), "{}", f);
        }
    }
}

#[test]
fn converse_construction() {
    let fno = Fno::new(TrigPath::single_atoms(&[1, 2]).unwrap(), TiePolicy::Symmetric);
    for (a, b) in [("1", "2"), ("2", "1"), ("12", "1"), ("21", "2")] {
        let c = check_converse(&fno, &w(a), &w(b)).unwrap();
        assert!(c.passed(), "{}", c);
    }
    let generic = Fno::new(TrigPath::single_atoms(&[1, -3, 5]).unwrap(), TiePolicy::Strict);
    let c = check_converse(&generic, &w("31"), &w("2")).unwrap();
    assert!(c.passed(), "{}", c);
}

#[test]
fn trig_path_format() {
    let p: TrigPath = "1: 1@1, 1/2-3*i@-2\n2: i@3".parse().unwrap();
    assert_eq!(p.to_string(), "1: 1+0*i@1, 1/2-3*i@-2\n2: 0+1*i@3\n");
    assert_eq!(p.to_string().parse::<TrigPath>().unwrap(), p);
    assert!("1: 1@0".parse::<TrigPath>().is_err());
    assert!("1: 1@1, 2@1".parse::<TrigPath>().is_err());
    assert!(matches!(p.tensor_measure(&w("13")), Err(FnoError::MissingComponent { letter: 3, d: 2 })));
    let _ = Permutation::identity(1);
}
