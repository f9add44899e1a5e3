//! Rooted forests: plain (up to isomorphism), ordered and heap-ordered.

mod cuts;
mod enumerate;
mod ordered;
pub(crate) mod parse;
mod plain;

pub(crate) use cuts::antichain_masks;
pub use cuts::{admissible_cuts, plain_cuts, Cut};
pub use enumerate::{
    count_linear_extensions, enumerate_heap_ordered, enumerate_heap_ordered_decorated, enumerate_ordered,
    enumerate_plain, heap_order_lifts, linear_extensions,
};
pub use ordered::{HeapOrderedForest, OrderedForest};
pub use plain::{canonicalize, parse_plain_forest, PlainForest, PlainTree, RawTree};
