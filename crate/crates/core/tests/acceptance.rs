//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//! Every identity is compared exactly; the only tolerances are wall-clock limits.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopf_forests::characters::{compare_characters, extend_shuffle_char, fubini_tsigma, validate_character, PolyPath};
use hopf_forests::fno::{
    check_chen, check_sector_relabelling, check_j_equals_j_prime, check_product_splitting, check_reassembly, AtomMeasure, Fno,
    FourierAtom, TiePolicy, TrigPath,
};
use hopf_forests::hopf::{check_heap_closure, check_hopf_axioms, ConnesKreimer, Fqsym, HopfAlgebra, OrderedForests, Shuffle};
use hopf_forests::morphisms::*;
use hopf_forests::report::Check;
use hopf_forests::trees::enumerate_heap_ordered;
use hopf_forests::{GaussianRational, LinComb, OrderedForest, Permutation, PlainForest, Rational, Ring, Var, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const AC1_LIMIT: Duration = Duration::from_secs(5);
const AC3_LIMIT: Duration = Duration::from_secs(60);
const AC7_LIMIT: Duration = Duration::from_secs(120);
const AC7_MIN_RANDOM_CASES: usize = 100;
const AC7_SEED: u64 = 20240601;

type Outcome = Result<String, String>;

fn require(checks: impl IntoIterator<Item = Check>) -> Result<usize, String> {
    let mut cases = 0;
    for c in checks {
        if !c.passed() {
            return Err(c.to_string());
        }
        if c.cases == 0 {
            return Err(format!("{}: no cases", c.name));
        }
        cases += c.cases;
    }
    Ok(cases)
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("took {:?}, limit {:?}", took, limit))
    } else {
        Ok(took)
    }
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut fact = 1usize;
    for n in 0..=6 {
        if n > 0 {
            fact *= n;
        }
        let count = enumerate_heap_ordered(n).len();
        if count != fact {
            return Err(format!("|F_ho({})| = {}, expected {}", n, count, fact));
        }
    }
    let took = within(start, AC1_LIMIT)?;
    Ok(format!("|F_ho(n)| = n! for n = 0..6 in {:?}", took))
}

fn ac2() -> Outcome {
    let one = Rational::one;
    let perms = |l: &[&str]| -> LinComb<Permutation> { l.iter().map(|s| (perm(s), one())).collect() };
    let words = |l: &[&str]| -> LinComb<Word> { l.iter().map(|s| (s.parse::<Word>().unwrap(), one())).collect() };
    let ordered = |t: &[(i64, &str)]| {
        LinComb::normalize(t.iter().map(|&(c, s)| (s.parse::<OrderedForest>().unwrap(), Rational::from(c))))
    };
    let plain = |t: &[(i64, &str)]| {
        LinComb::normalize(t.iter().map(|&(c, s)| (s.parse::<PlainForest>().unwrap(), Rational::from(c))))
    };
    let mut count = 0;

    let theta_rows: &[(&str, &[&str])] = &[
        ("1", &["1"]),
        ("1|2", &["12", "21"]),
        ("1[2]", &["12"]),
        ("1|2|3", &["123", "132", "213", "231", "312", "321"]),
        ("1|2[3]", &["123", "213", "231"]),
        ("2|1[3]", &["213", "123", "132"]),
        ("3|1[2]", &["312", "132", "123"]),
        ("1[2,3]", &["123", "132"]),
        ("1[2[3]]", &["123"]),
    ];
    for (f, expected) in theta_rows {
        let got = theta(&f.parse().unwrap());
        if got != perms(expected) {
            return Err(format!("Θ({}) = {}", f, got));
        }
        count += 1;
    }

    let tables = TSigma::default();
    let t_rows: &[(&str, &[(i64, &str)])] = &[
        ("1", &[(1, "1")]),
        ("12", &[(1, "1[2]")]),
        ("21", &[(1, "1|2"), (-1, "1[2]")]),
        ("123", &[(1, "1[2[3]]")]),
        ("132", &[(1, "1[2,3]"), (-1, "1[2[3]]")]),
        ("213", &[(1, "2|1[3]"), (-1, "1[2,3]")]),
        ("231", &[(1, "3|1[2]"), (-1, "1[2,3]")]),
        ("312", &[(1, "1|2[3]"), (-1, "1[2[3]]"), (-1, "2|1[3]"), (1, "1[2,3]")]),
        ("321", &[(1, "1|2|3"), (-1, "3|1[2]"), (-1, "1|2[3]"), (1, "1[2[3]]")]),
    ];
    for (s, expected) in t_rows {
        let got = tables.t_sigma(&perm(s)).map_err(|e| e.to_string())?;
        if got != ordered(expected) {
            return Err(format!("T^({}) = {}", s, got));
        }
        count += 1;
    }

    let small_rows: &[(&str, &[&str])] = &[
        ("a", &["a"]),
        ("a[b]", &["ab"]),
        ("a|b", &["ab", "ba"]),
        ("a[b,c]", &["abc", "acb"]),
        ("a[b[c]]", &["abc"]),
        ("a[b]|c", &["abc", "acb", "cab"]),
        ("a|b|c", &["abc", "acb", "bac", "bca", "cab", "cba"]),
    ];
    for (f, expected) in small_rows {
        let got = theta_small(&f.parse().unwrap());
        if got != words(expected) {
            return Err(format!("θ({}) = {}", f, got));
        }
        count += 1;
    }

    let dec_rows: &[(&str, &[(i64, &str)])] = &[
        ("123", &[(1, "a[b[c]]")]),
        ("132", &[(1, "a[b,c]"), (-1, "a[b[c]]")]),
        ("213", &[(1, "b|a[c]"), (-1, "a[b,c]")]),
        ("231", &[(1, "c|a[b]"), (-1, "a[b,c]")]),
        ("312", &[(1, "a|b[c]"), (-1, "a[b[c]]"), (-1, "b|a[c]"), (1, "a[b,c]")]),
        ("321", &[(1, "a|b|c"), (-1, "c|a[b]"), (-1, "a|b[c]"), (1, "a[b[c]]")]),
    ];
    for (s, expected) in dec_rows {
        let got = t_sigma_decorated(&tables, &perm(s), &[1, 2, 3]).map_err(|e| e.to_string())?;
        if got != plain(expected) {
            return Err(format!("decorated T^({}) = {}", s, got));
        }
        count += 1;
    }
    Ok(format!("{} table values reproduced (Θ 9, T^σ 9, θ^d 7, decorated T^σ 6)", count))
}

fn sweep<H: HopfAlgebra>(h: &H, degree: usize) -> Result<usize, String> {
    require(check_hopf_axioms(h, degree))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for (d, degree) in [(1, 5), (2, 4)] {
        cases += sweep(&Shuffle::new(d), degree)?;
        cases += sweep(&ConnesKreimer::new(d), degree)?;
        cases += sweep(&OrderedForests::ordered(d), degree)?;
        cases += sweep(&OrderedForests::heap_ordered(d), degree)?;
        cases += sweep(&Fqsym::new(d), degree)?;
        cases += require([check_heap_closure(degree, d)])?;
    }
    let took = within(start, AC3_LIMIT)?;
    Ok(format!("Sh, H, H_o, H_ho, FQSym at degree 5 (d=1) and 4 (d=2): {} cases in {:?}", cases, took))
}

fn ac4() -> Outcome {
    let tables = TSigma::default();
    let e = |x: hopf_forests::BoundError| x.to_string();
    let mut checks = vec![check_theta_algebra(5), check_theta_coalgebra(4)];
    for n in 0..=6 {
        checks.push(check_theta_inverse(&tables, n).map_err(e)?);
        checks.push(check_invertibility_witness(n));
    }
    checks.push(check_t_sigma_product(&tables, 4).map_err(e)?);
    checks.push(check_t_sigma_coproduct(&tables, 4).map_err(e)?);
    checks.push(check_shuffle_action(&tables, 4).map_err(|x| x.to_string())?);
    let cases = require(checks)?;
    Ok(format!("Θ morphism, inverse n ≤ 6, T^σ product/coproduct and shuffle action k+l ≤ 4: {} cases", cases))
}

fn ac5() -> Outcome {
    let cases = require([verify_square(4, 2)])?;
    Ok(format!("π_Σ∘Θ^d = θ^d∘π_ho, degree ≤ 4, d = 2: {} cases", cases))
}

fn ac6() -> Outcome {
    let path: Arc<PolyPath> = Arc::new("1: 1\n2: 2*x".parse().map_err(|e: hopf_forests::ParseError| e.to_string())?);
    let err = |x: hopf_forests::Error| x.to_string();
    let ts = path.signature(Var::T, Var::S);
    let tu = path.signature(Var::T, Var::U);
    let us = path.signature(Var::U, Var::S);
    let mut checks = vec![validate_character(&ts, 5).map_err(err)?];
    checks.push(compare_characters("Chen", &ts, &tu.convolve(&us).map_err(err)?, 4).map_err(err)?);
    let bar = extend_shuffle_char(&ts, Arc::new(ConnesKreimer::new(2)));
    checks.push(compare_characters("extension", &bar, &path.tree_character(Var::T, Var::S), 4).map_err(err)?);

    let tables = TSigma::default();
    let abc = [1, 2, 3];
    let mut fubini = Check::new("fubini vs T^σ");
    for sigma in Permutation::all(3) {
        let direct = t_sigma_decorated(&tables, &sigma, &abc).map_err(err)?;
        fubini.record(&sigma, &fubini_tsigma(&sigma, &abc), &direct);
    }
    let worked: LinComb<PlainForest> = LinComb::normalize([
        ("a[b]|c".parse::<PlainForest>().unwrap(), Rational::one()),
        ("a[b,c]".parse::<PlainForest>().unwrap(), -Rational::one()),
    ]);
    fubini.record("(231)", &fubini_tsigma(&perm("231"), &abc), &worked);
    checks.push(fubini);
    let cases = require(checks)?;
    Ok(format!("Γ' = (1, 2x): shuffle ≤ 5, Chen ≤ 4, extension ≤ 4 vertices, Fubini on Σ_3: {} cases", cases))
}

fn random_measure(rng: &mut ChaCha8Rng, n: usize, ties: bool, pool: &[i64]) -> AtomMeasure {
    let mut mu = AtomMeasure::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let sign = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { 1 } else { -1 };
        let freq: Vec<Rational> = if ties {
            (0..n).map(|_| Rational::from(rng.gen_range(1..=3) * sign(rng))).collect()
        } else {
            let mut mags = pool.to_vec();
            for i in (1..mags.len()).rev() {
                mags.swap(i, rng.gen_range(0..=i));
            }
            mags[..n].iter().map(|&m| Rational::from(m * sign(rng))).collect()
        };
        let amp = GaussianRational::new(Rational::from(rng.gen_range(-3..=3)), Rational::from(rng.gen_range(-3..=3)));
        if !amp.is_zero() {
            mu.add_atom(FourierAtom::new(freq, amp)).unwrap();
        }
    }
    mu
}

fn ac7() -> Outcome {
    let start = Instant::now();
    let err = |x: hopf_forests::Error| x.to_string();
    let path = TrigPath::single_atoms(&[1, 2]).map_err(|x| x.to_string())?;
    let fno = Arc::new(Fno::new(path, TiePolicy::Symmetric));
    let mut checks = vec![
        validate_character(&fno.chi_character(Var::T), 4).map_err(err)?,
        check_j_equals_j_prime(&fno, 3).map_err(err)?,
        check_chen(&fno, 3).map_err(err)?,
    ];

    let mut rng = ChaCha8Rng::seed_from_u64(AC7_SEED);
    let mut random_cases = 0;
    for round in 0..120 {
        let ties = round % 3 == 0;
        let policy = if ties { TiePolicy::Symmetric } else { TiePolicy::Strict };
        let fe = |x: hopf_forests::FnoError| x.to_string();
        let n = rng.gen_range(1..=4);
        let mu = random_measure(&mut rng, n, ties, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        checks.push(check_reassembly(&mu, policy).map_err(fe)?);
        checks.push(check_sector_relabelling(&mu, policy).map_err(fe)?);
        let k = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=4 - k);
        let m1 = random_measure(&mut rng, k, ties, &[1, 3, 5, 7, 9]);
        let m2 = random_measure(&mut rng, l, ties, &[2, 4, 6, 8]);
        checks.push(check_product_splitting(&m1, &m2, policy).map_err(fe)?);
        random_cases += 1;
    }
    if random_cases < AC7_MIN_RANDOM_CASES {
        return Err(format!("only {} random cases", random_cases));
    }
    let cases = require(checks)?;
    let took = within(start, AC7_LIMIT)?;
    Ok(format!(
        "χ character ≤ 4, J = J' ≤ 3, Chen ≤ 3, {} random splitting cases (seed {}): {} cases in {:?}",
        random_cases, AC7_SEED, cases, took
    ))
}

fn ac8() -> Outcome {
    let readme = concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md");
    let text = std::fs::read_to_string(readme).map_err(|e| format!("README: {}", e))?;
    if !text.contains("Hölder") {
        return Err("README does not document the Hölder axiom as unverified".into());
    }
    Ok("Hölder continuity is not verified (analytic); documented in README".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] =
        [("AC1", ac1), ("AC2", ac2), ("AC3", ac3), ("AC4", ac4), ("AC5", ac5), ("AC6", ac6), ("AC7", ac7), ("AC8", ac8)];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(msg) => println!("{} PASS {}", name, msg),
            Err(msg) => {
                failed += 1;
                println!("{} FAIL {}", name, msg);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
