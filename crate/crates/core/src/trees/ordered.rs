use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use super::parse::{parse_ordered, RawOrdered};
use super::plain::{PlainForest, PlainTree};
use crate::error::{ParseError, TreeError};
use crate::perm::Permutation;
use crate::words::Letter;

/// Decorated forest whose vertices are `1..=n`, the index being the total
/// order. `parent[i-1]` is the parent of vertex `i`, or 0 for a root.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct OrderedForest {
    parent: Vec<usize>,
    dec: Vec<Letter>,
}

impl OrderedForest {
    pub fn new(parent: Vec<usize>, dec: Vec<Letter>) -> Result<Self, TreeError> {
        let n = parent.len();
        if dec.len() != n {
            return Err(TreeError::SizeMismatch { expected: n, found: dec.len() });
        }
        for (i, &p) in parent.iter().enumerate() {
            if p > n || p == i + 1 {
                return Err(TreeError::BadParent { vertex: i + 1, parent: p });
            }
        }
        if let Some(&dec) = dec.iter().find(|&&a| a == 0) {
            return Err(TreeError::DecorationOutOfRange { dec, d: 0 });
        }
        for start in 1..=n {
            let mut v = start;
            for _ in 0..=n {
                v = parent[v - 1];
                if v == 0 {
                    break;
                }
            }
            if v != 0 {
                return Err(TreeError::Cycle(start));
            }
        }
        Ok(OrderedForest { parent, dec })
    }

    /// Undecorated (all decorations 1).
    pub fn from_parents(parent: Vec<usize>) -> Result<Self, TreeError> {
        let n = parent.len();
        OrderedForest::new(parent, vec![1; n])
    }

    pub(crate) fn from_parts_unchecked(parent: Vec<usize>, dec: Vec<Letter>) -> Self {
        OrderedForest { parent, dec }
    }

    pub fn empty() -> Self {
        OrderedForest::default()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Parent of vertex `i` (0 for a root).
    pub fn parent(&self, i: usize) -> usize {
        self.parent[i - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn decorations(&self) -> &[Letter] {
        &self.dec
    }

    pub fn with_decorations(&self, dec: Vec<Letter>) -> Result<Self, TreeError> {
        OrderedForest::new(self.parent.clone(), dec)
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        (1..=self.len()).filter(|&j| self.parent[j - 1] == i).collect()
    }

    pub fn roots(&self) -> Vec<usize> {
        self.children(0)
    }

    /// Whether `i ↠ j`: `i` lies strictly above `j`.
    pub fn descends(&self, i: usize, j: usize) -> bool {
        let mut v = self.parent[i - 1];
        while v != 0 {
            if v == j {
                return true;
            }
            v = self.parent[v - 1];
        }
        false
    }

    /// Bitmask of the strict ancestors of every vertex (bit `j-1` for vertex `j`).
    pub fn ancestor_masks(&self) -> Vec<u64> {
        assert!(self.len() < 64, "forest too large for bitmask enumeration");
        let mut masks = vec![0u64; self.len()];
        for i in 1..=self.len() {
            let mut v = self.parent[i - 1];
            while v != 0 {
                masks[i - 1] |= 1 << (v - 1);
                v = self.parent[v - 1];
            }
        }
        masks
    }

    pub fn is_heap_ordered(&self) -> bool {
        self.parent.iter().enumerate().all(|(i, &p)| p < i + 1)
    }

    /// Subforest on the vertices of `mask`, standardized to `1..=k`. A vertex
    /// whose parent is outside the subset becomes a root.
    pub fn restrict(&self, mask: u64) -> OrderedForest {
        let mut rank = vec![0usize; self.len() + 1];
        let mut k = 0;
        for i in 1..=self.len() {
            if mask >> (i - 1) & 1 == 1 {
                k += 1;
                rank[i] = k;
            }
        }
        let mut parent = Vec::with_capacity(k);
        let mut dec = Vec::with_capacity(k);
        for i in 1..=self.len() {
            if rank[i] > 0 {
                let p = self.parent[i - 1];
                parent.push(if p != 0 { rank[p] } else { 0 });
                dec.push(self.dec[i - 1]);
            }
        }
        OrderedForest { parent, dec }
    }

    /// Product of ordered forests: every vertex of `self` precedes every vertex of `other`.
    pub fn concat(&self, other: &OrderedForest) -> OrderedForest {
        let n = self.len();
        let mut parent = self.parent.clone();
        parent.extend(other.parent.iter().map(|&p| if p == 0 { 0 } else { p + n }));
        let mut dec = self.dec.clone();
        dec.extend_from_slice(&other.dec);
        OrderedForest { parent, dec }
    }

    /// `σ.F`: the vertex ordered `i` becomes ordered `σ(i)`; decorations follow their vertices.
    pub fn act(&self, sigma: &Permutation) -> Result<OrderedForest, TreeError> {
        if sigma.len() != self.len() {
            return Err(TreeError::SizeMismatch { expected: self.len(), found: sigma.len() });
        }
        let n = self.len();
        let mut parent = vec![0; n];
        let mut dec = vec![0; n];
        for i in 1..=n {
            let p = self.parent[i - 1];
            parent[sigma.apply(i) - 1] = if p == 0 { 0 } else { sigma.apply(p) };
            dec[sigma.apply(i) - 1] = self.dec[i - 1];
        }
        Ok(OrderedForest { parent, dec })
    }

    /// Forgets the order.
    pub fn to_plain(&self) -> PlainForest {
        let kids: Vec<Vec<usize>> = (0..=self.len()).map(|i| self.children(i)).collect();
        fn build(v: usize, f: &OrderedForest, kids: &[Vec<usize>]) -> PlainTree {
            PlainTree::new(f.dec[v - 1], kids[v].iter().map(|&c| build(c, f, kids)).collect())
        }
        PlainForest::from_trees(kids[0].iter().map(|&r| build(r, self, &kids)).collect())
    }

    /// A labelled copy of a plain forest (preorder labelling; heap-ordered).
    pub fn from_plain(f: &PlainForest) -> OrderedForest {
        let (parent, dec) = f.flatten();
        OrderedForest { parent, dec }
    }

    pub fn max_dec(&self) -> Letter {
        self.dec.iter().copied().max().unwrap_or(0)
    }

    fn fmt_vertex(&self, f: &mut fmt::Formatter<'_>, v: usize, kids: &[Vec<usize>]) -> fmt::Result {
        write!(f, "{}:{}", v, self.dec[v - 1])?;
        if !kids[v].is_empty() {
            f.write_str("[")?;
            for (i, &c) in kids[v].iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                self.fmt_vertex(f, c, kids)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl Ord for OrderedForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.parent.cmp(&other.parent))
            .then_with(|| self.dec.cmp(&other.dec))
    }
}

impl PartialOrd for OrderedForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedForest {
    /// Roots and children listed by increasing order index, e.g. `1:1|2:1[3:1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let kids: Vec<Vec<usize>> = (0..=self.len()).map(|i| self.children(i)).collect();
        for (i, &r) in kids[0].iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            self.fmt_vertex(f, r, &kids)?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for OrderedForest {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let raw = parse_ordered(s)?;
        let mut flat: Vec<(usize, usize, u32, usize)> = Vec::new();
        fn walk(node: &RawOrdered, parent: usize, flat: &mut Vec<(usize, usize, u32, usize)>) {
            flat.push((node.ord, parent, node.dec, node.pos));
            for c in &node.children {
                walk(c, node.ord, flat);
            }
        }
        for r in &raw {
            walk(r, 0, &mut flat);
        }
        let n = flat.len();
        let mut parent = vec![usize::MAX; n];
        let mut dec = vec![0; n];
        for &(ord, p, d, pos) in &flat {
            if ord == 0 || ord > n {
                return Err(ParseError::new(pos, format!("order {} outside 1..{}", ord, n)));
            }
            if parent[ord - 1] != usize::MAX {
                return Err(ParseError::new(pos, format!("order {} used twice", ord)));
            }
            parent[ord - 1] = p;
            dec[ord - 1] = d;
        }
        Ok(OrderedForest { parent, dec })
    }
}

/// An ordered forest in which every vertex is ordered after its parent.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeapOrderedForest(OrderedForest);

impl HeapOrderedForest {
    pub fn new(f: OrderedForest) -> Result<Self, TreeError> {
        match (1..=f.len()).find(|&i| f.parent(i) >= i) {
            Some(i) => Err(TreeError::NotHeapOrdered(i)),
            None => Ok(HeapOrderedForest(f)),
        }
    }

    pub fn into_inner(self) -> OrderedForest {
        self.0
    }

    pub fn as_ordered(&self) -> &OrderedForest {
        &self.0
    }
}

impl Deref for HeapOrderedForest {
    type Target = OrderedForest;
    fn deref(&self) -> &OrderedForest {
        &self.0
    }
}

impl TryFrom<OrderedForest> for HeapOrderedForest {
    type Error = TreeError;
    fn try_from(f: OrderedForest) -> Result<Self, TreeError> {
        HeapOrderedForest::new(f)
    }
}

impl fmt::Display for HeapOrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for HeapOrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn of(s: &str) -> OrderedForest {
        s.parse().unwrap()
    }

    #[test]
    fn parse_render_round_trip() {
        let f = of("2:1[4:1[1:1],3:1]");
        assert_eq!(f.parents(), &[4, 0, 2, 2]);
        assert_eq!(f.to_string(), "2:1[3:1,4:1[1:1]]");
        assert_eq!(of(&f.to_string()), f);
        assert_eq!(of("1:5[3:2,2:7]").decorations(), &[5, 7, 2]);
    }

    #[test]
    fn product_shifts_second_factor() {
        let dot = of("1");
        let ladder = of("1[2]");
        assert_eq!(dot.concat(&ladder).to_string(), "1:1|2:1[3:1]");
        assert_eq!(ladder.concat(&dot).to_string(), "1:1[2:1]|3:1");
        assert_eq!(ladder.concat(&OrderedForest::empty()), ladder);
    }

    #[test]
    fn action_relabels() {
        let ladder = of("1[2]");
        let swap: Permutation = "21".parse().unwrap();
        assert_eq!(ladder.act(&swap).unwrap(), of("2[1]"));
        assert_eq!(ladder.act(&Permutation::identity(2)).unwrap(), ladder);
        assert!(ladder.act(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn validation() {
        assert!(OrderedForest::from_parents(vec![2, 1]).is_err());
        assert!(OrderedForest::from_parents(vec![3]).is_err());
        assert!(HeapOrderedForest::new(of("2[1]")).is_err());
        assert!("1|1".parse::<OrderedForest>().is_err());
    }

    #[test]
    fn forgetting_the_order() {
        assert_eq!(of("2:1[1:2]").to_plain(), "1[2]".parse().unwrap());
    }
}
