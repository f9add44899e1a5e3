use hopf_forests::hopf::{
    check_heap_closure, check_hopf_axioms, ConnesKreimer, Fqsym, HopfAlgebra, OrderedForests, Shuffle,
};
use hopf_forests::report::Check;

fn assert_all(checks: Vec<Check>) {
    for c in checks {
        assert!(c.passed(), "{}", c);
        assert!(c.cases > 0, "{} checked nothing", c.name);
    }
}

fn sweep<H: HopfAlgebra>(h: &H, degree: usize) {
    assert_all(check_hopf_axioms(h, degree));
}

#[test]
fn shuffle_degree_5_and_decorated_4() {
    sweep(&Shuffle::new(1), 5);
    sweep(&Shuffle::new(2), 4);
}

#[test]
fn connes_kreimer_degree_5_and_decorated_4() {
    sweep(&ConnesKreimer::new(1), 5);
    sweep(&ConnesKreimer::new(2), 4);
}

#[test]
fn ordered_forests_degree_5_and_decorated_4() {
    sweep(&OrderedForests::ordered(1), 5);
    sweep(&OrderedForests::ordered(2), 4);
}

#[test]
fn heap_ordered_forests_degree_5_and_decorated_4() {
    sweep(&OrderedForests::heap_ordered(1), 5);
    sweep(&OrderedForests::heap_ordered(2), 4);
    assert_all(vec![check_heap_closure(4, 1), check_heap_closure(4, 2)]);
}

#[test]
fn fqsym_degree_5_and_decorated_4() {
    sweep(&Fqsym::new(1), 5);
    sweep(&Fqsym::new(2), 4);
}
