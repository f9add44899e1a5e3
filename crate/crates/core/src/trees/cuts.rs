use super::ordered::OrderedForest;
use super::plain::PlainForest;

/// An admissible cut: an antichain of vertices together with the two parts
/// it induces. `lea` holds the vertices weakly above the antichain, `roo` the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut<F> {
    pub antichain: Vec<usize>,
    pub roo: F,
    pub lea: F,
}

/// Antichain masks of an ordered forest, with the matching leaves mask.
pub(crate) fn antichain_masks(f: &OrderedForest) -> Vec<(u64, u64)> {
    let n = f.len();
    let anc = f.ancestor_masks();
    let mut out = Vec::new();
    // Depth-first over vertices; a vertex may join if it is incomparable to
    // everything chosen so far.
    fn rec(v: usize, n: usize, anc: &[u64], chosen: u64, out: &mut Vec<u64>) {
        if v > n {
            out.push(chosen);
            return;
        }
        rec(v + 1, n, anc, chosen, out);
        let bit = 1u64 << (v - 1);
        let below = anc[v - 1];
        let conflicts = chosen & below != 0 || (1..v).any(|u| chosen >> (u - 1) & 1 == 1 && anc[u - 1] & bit != 0);
        if !conflicts {
            rec(v + 1, n, anc, chosen | bit, out);
        }
    }
    let mut masks = Vec::new();
    rec(1, n, &anc, 0, &mut masks);
    for a in masks {
        let mut lea = 0u64;
        for v in 1..=n {
            if (anc[v - 1] | 1 << (v - 1)) & a != 0 {
                lea |= 1 << (v - 1);
            }
        }
        out.push((a, lea));
    }
    out
}

fn mask_vertices(mask: u64, n: usize) -> Vec<usize> {
    (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect()
}

/// Every admissible cut exactly once, including the empty antichain
/// (`roo = F`) and the set of roots (`lea = F`). Both parts are standardized.
pub fn admissible_cuts(f: &OrderedForest) -> Vec<Cut<OrderedForest>> {
    let n = f.len();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    antichain_masks(f)
        .into_iter()
        .map(|(a, lea)| Cut { antichain: mask_vertices(a, n), roo: f.restrict(full & !lea), lea: f.restrict(lea) })
        .collect()
}

/// Cuts of a plain forest, computed on its preorder-labelled representative.
/// Antichain indices refer to that labelling.
pub fn plain_cuts(f: &PlainForest) -> Vec<Cut<PlainForest>> {
    admissible_cuts(&OrderedForest::from_plain(f))
        .into_iter()
        .map(|c| Cut { antichain: c.antichain, roo: c.roo.to_plain(), lea: c.lea.to_plain() })
        .collect()
}
