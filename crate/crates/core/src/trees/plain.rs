use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, TreeError};
use crate::words::{Letter, Word};

/// Tree-shaped input before canonicalization; child order is arbitrary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTree {
    pub dec: Letter,
    pub children: Vec<RawTree>,
}

impl RawTree {
    pub fn leaf(dec: Letter) -> Self {
        RawTree { dec, children: Vec::new() }
    }

    pub fn node(dec: Letter, children: Vec<RawTree>) -> Self {
        RawTree { dec, children }
    }
}

/// Decorated rooted tree with children kept sorted, so isomorphic trees
/// are equal as values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlainTree {
    dec: Letter,
    children: Vec<PlainTree>,
}

impl PlainTree {
    pub fn new(dec: Letter, mut children: Vec<PlainTree>) -> Self {
        children.sort();
        PlainTree { dec, children }
    }

    pub fn leaf(dec: Letter) -> Self {
        PlainTree { dec, children: Vec::new() }
    }

    pub fn dec(&self) -> Letter {
        self.dec
    }

    pub fn children(&self) -> &[PlainTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlainTree::size).sum::<usize>()
    }

    fn max_dec(&self) -> Letter {
        self.children.iter().map(PlainTree::max_dec).fold(self.dec, Letter::max)
    }

    /// Preorder labelling into parent / decoration arrays (parent 0 = root).
    pub(crate) fn flatten_into(&self, parent: usize, parents: &mut Vec<usize>, decs: &mut Vec<Letter>) {
        parents.push(parent);
        decs.push(self.dec);
        let me = parents.len();
        for c in &self.children {
            c.flatten_into(me, parents, decs);
        }
    }
}

impl fmt::Display for PlainTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dec)?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", c)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlainTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multiset of decorated rooted trees in canonical (sorted) form. The empty
/// forest is the unit and renders as `∅`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PlainForest {
    trees: Vec<PlainTree>,
    size: usize,
}

impl PlainForest {
    pub fn empty() -> Self {
        PlainForest::default()
    }

    pub fn from_trees(mut trees: Vec<PlainTree>) -> Self {
        trees.sort();
        let size = trees.iter().map(PlainTree::size).sum();
        PlainForest { trees, size }
    }

    pub fn tree(t: PlainTree) -> Self {
        PlainForest::from_trees(vec![t])
    }

    pub fn dot(dec: Letter) -> Self {
        PlainForest::tree(PlainTree::leaf(dec))
    }

    /// The trunk (ladder) tree read root to leaf from the word.
    pub fn trunk(w: &Word) -> Self {
        let mut cur: Option<PlainTree> = None;
        for &a in w.letters().iter().rev() {
            cur = Some(PlainTree::new(a, cur.into_iter().collect()));
        }
        PlainForest::from_trees(cur.into_iter().collect())
    }

    pub fn trees(&self) -> &[PlainTree] {
        &self.trees
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn max_dec(&self) -> Letter {
        self.trees.iter().map(PlainTree::max_dec).max().unwrap_or(0)
    }

    /// Disjoint union.
    pub fn union(&self, other: &PlainForest) -> PlainForest {
        let mut t = self.trees.clone();
        t.extend(other.trees.iter().cloned());
        PlainForest::from_trees(t)
    }

    /// Grafts the forest onto a new root: `B⁺_a`.
    pub fn graft(&self, dec: Letter) -> PlainForest {
        PlainForest::tree(PlainTree::new(dec, self.trees.clone()))
    }

    /// Preorder-labelled parent and decoration arrays of a representative.
    pub fn flatten(&self) -> (Vec<usize>, Vec<Letter>) {
        let mut parents = Vec::with_capacity(self.size);
        let mut decs = Vec::with_capacity(self.size);
        for t in &self.trees {
            t.flatten_into(0, &mut parents, &mut decs);
        }
        (parents, decs)
    }

    pub fn check_decorations(&self, d: Letter) -> Result<(), TreeError> {
        let (_, decs) = self.flatten();
        match decs.into_iter().find(|&a| a == 0 || a > d) {
            Some(dec) => Err(TreeError::DecorationOutOfRange { dec, d }),
            None => Ok(()),
        }
    }
}

impl Ord for PlainForest {
    /// Degree first, then the sorted tree lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| self.trees.cmp(&other.trees))
    }
}

impl PartialOrd for PlainForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical representative of a tree-shaped input, checking decorations lie in `1..=d`.
pub fn canonicalize(raw: &[RawTree], d: Letter) -> Result<PlainForest, TreeError> {
    fn conv(r: &RawTree, d: Letter) -> Result<PlainTree, TreeError> {
        if r.dec == 0 || r.dec > d {
            return Err(TreeError::DecorationOutOfRange { dec: r.dec, d });
        }
        let children = r.children.iter().map(|c| conv(c, d)).collect::<Result<Vec<_>, _>>()?;
        Ok(PlainTree::new(r.dec, children))
    }
    Ok(PlainForest::from_trees(raw.iter().map(|r| conv(r, d)).collect::<Result<_, _>>()?))
}

impl fmt::Display for PlainForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("∅");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlainForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlainForest {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let raw = super::parse::parse_plain(s)?;
        canonicalize(&raw, Letter::MAX).map_err(|e| ParseError::new(0, e.to_string()))
    }
}

/// Parses a forest and checks its decorations against the alphabet size `d`.
pub fn parse_plain_forest(s: &str, d: Letter) -> Result<PlainForest, crate::error::Error> {
    let raw = super::parse::parse_plain(s)?;
    Ok(canonicalize(&raw, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn child_order_is_quotiented() {
        let a = canonicalize(&[RawTree::node(1, vec![RawTree::leaf(2), RawTree::leaf(3)])], 3).unwrap();
        let b = canonicalize(&[RawTree::node(1, vec![RawTree::leaf(3), RawTree::leaf(2)])], 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_vertex_is_itself() {
        let a = canonicalize(&[RawTree::leaf(1)], 1).unwrap();
        assert_eq!(a, PlainForest::dot(1));
        assert_eq!(a.to_string(), "1");
    }

    #[test]
    fn tree_order_is_quotiented() {
        let ladder = RawTree::node(1, vec![RawTree::leaf(2)]);
        let dot = RawTree::leaf(3);
        let a = canonicalize(&[ladder.clone(), dot.clone()], 3).unwrap();
        let b = canonicalize(&[dot, ladder], 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn decoration_range_checked() {
        let err = canonicalize(&[RawTree::leaf(3)], 2).unwrap_err();
        assert_eq!(err, TreeError::DecorationOutOfRange { dec: 3, d: 2 });
    }

    #[test]
    fn trunk_of_word() {
        let t = PlainForest::trunk(&Word::new([1, 2, 1]));
        assert_eq!(t.to_string(), "1[2[1]]");
    }
}
