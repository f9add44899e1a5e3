use std::collections::{BTreeSet, HashMap};

use super::ordered::{HeapOrderedForest, OrderedForest};
use super::plain::PlainForest;
use crate::perm::Permutation;
use crate::words::Letter;

/// `S_F`: permutations whose word lists every vertex after all of its
/// ancestors, i.e. `i ↠ j ⇒ σ⁻¹(i) > σ⁻¹(j)`. Returned in lexicographic order.
pub fn linear_extensions(f: &OrderedForest) -> Vec<Permutation> {
    let n = f.len();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut placed = vec![false; n + 1];
    placed[0] = true;
    fn rec(f: &OrderedForest, word: &mut Vec<usize>, placed: &mut [bool], out: &mut Vec<Permutation>) {
        let n = f.len();
        if word.len() == n {
            out.push(Permutation::from_vec_unchecked(word.clone()));
            return;
        }
        for v in 1..=n {
            if !placed[v] && placed[f.parent(v)] {
                placed[v] = true;
                word.push(v);
                rec(f, word, placed, out);
                word.pop();
                placed[v] = false;
            }
        }
    }
    rec(f, &mut word, &mut placed, &mut out);
    out
}

/// Number of linear extensions, by memoized search over placed-vertex sets.
pub fn count_linear_extensions(f: &OrderedForest) -> u64 {
    let n = f.len();
    let parent_bit: Vec<u64> = (1..=n).map(|v| if f.parent(v) == 0 { 0 } else { 1 << (f.parent(v) - 1) }).collect();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    fn go(placed: u64, full: u64, parent_bit: &[u64], memo: &mut HashMap<u64, u64>) -> u64 {
        if placed == full {
            return 1;
        }
        if let Some(&c) = memo.get(&placed) {
            return c;
        }
        let mut total = 0;
        for (i, &pb) in parent_bit.iter().enumerate() {
            let bit = 1 << i;
            if placed & bit == 0 && placed & pb == pb {
                total += go(placed | bit, full, parent_bit, memo);
            }
        }
        memo.insert(placed, total);
        total
    }
    go(0, full, &parent_bit, &mut HashMap::new())
}

/// Heap orders of a plain forest: one per linear extension of a labelled
/// representative (symmetric vertices are not identified).
pub fn heap_order_lifts(f: &PlainForest) -> Vec<HeapOrderedForest> {
    let base = OrderedForest::from_plain(f);
    linear_extensions(&base)
        .into_iter()
        .map(|sigma| {
            let lifted = base.act(&sigma.inverse()).expect("sizes agree");
            HeapOrderedForest::new(lifted).expect("linear extensions give heap orders")
        })
        .collect()
}

/// `F_ho(n)` with all decorations 1: vertex `i` picks its parent among `0..i`.
/// This gives `n!` forests, in lexicographic order of parent vectors.
pub fn enumerate_heap_ordered(n: usize) -> Vec<HeapOrderedForest> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::with_capacity(out.len() * (i + 1));
        for p in &out {
            for choice in 0..=i {
                let mut q: Vec<usize> = p.clone();
                q.push(choice);
                next.push(q);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|p| HeapOrderedForest::new(OrderedForest::from_parts_unchecked(p, vec![1; n])).expect("heap ordered"))
        .collect()
}

/// Decoration words of length `n` over `{1..d}`.
fn decoration_words(n: usize, d: Letter) -> Vec<Vec<Letter>> {
    crate::words::Word::all(n, d).into_iter().map(|w| w.0).collect()
}

/// `F_ho^d(n)`: every heap-ordered forest with every decoration, `n!·dⁿ` elements.
pub fn enumerate_heap_ordered_decorated(n: usize, d: Letter) -> Vec<HeapOrderedForest> {
    let words = decoration_words(n, d);
    let mut out = Vec::new();
    for f in enumerate_heap_ordered(n) {
        for w in &words {
            out.push(HeapOrderedForest::new(OrderedForest::from_parts_unchecked(f.parents().to_vec(), w.clone())).expect("heap ordered"));
        }
    }
    out
}

/// `F_o^d(n)`: all decorated ordered forests on `n` vertices.
pub fn enumerate_ordered(n: usize, d: Letter) -> Vec<OrderedForest> {
    let perms = Permutation::all(n);
    let mut set = BTreeSet::new();
    for f in enumerate_heap_ordered_decorated(n, d) {
        for s in &perms {
            set.insert(f.act(s).expect("sizes agree"));
        }
    }
    set.into_iter().collect()
}

/// Isomorphism classes of `d`-decorated forests on `n` vertices.
pub fn enumerate_plain(n: usize, d: Letter) -> Vec<PlainForest> {
    let set: BTreeSet<PlainForest> = enumerate_heap_ordered_decorated(n, d).iter().map(|f| f.to_plain()).collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn of(s: &str) -> OrderedForest {
        s.parse().unwrap()
    }

    fn words(v: &[Permutation]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn cherry_and_ladder_extensions() {
        assert_eq!(words(&linear_extensions(&of("1[2,3]"))), ["(123)", "(132)"]);
        assert_eq!(words(&linear_extensions(&of("1[2[3]]"))), ["(123)"]);
        assert_eq!(linear_extensions(&of("1|2|3")).len(), 6);
    }

    #[test]
    fn small_counts() {
        let two: Vec<String> = enumerate_heap_ordered(2).iter().map(|f| f.to_string()).collect();
        assert_eq!(two, ["1:1|2:1", "1:1[2:1]"]);
        assert_eq!(enumerate_heap_ordered(3).len(), 6);
        assert_eq!(enumerate_heap_ordered(5).len(), 120);
        assert_eq!(enumerate_heap_ordered(0).len(), 1);
    }

    #[test]
    fn lifts() {
        assert_eq!(heap_order_lifts(&"1".parse().unwrap()).len(), 1);
        assert_eq!(heap_order_lifts(&"1[2,2]".parse().unwrap()).len(), 2);
        assert_eq!(heap_order_lifts(&"1[1[1]]".parse().unwrap()).len(), 1);
    }

    #[test]
    fn plain_counts() {
        // rooted forests on n unlabelled vertices: 1, 1, 2, 4, 9, 20
        let counts: Vec<usize> = (0..6).map(|n| enumerate_plain(n, 1).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20]);
        assert_eq!(enumerate_ordered(3, 1).len(), 16);
    }
}
