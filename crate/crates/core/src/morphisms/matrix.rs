use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::theta;
use crate::algebra::{LinComb, Rational};
use crate::error::BoundError;
use crate::perm::Permutation;
use crate::trees::{enumerate_heap_ordered, OrderedForest};

/// Largest degree for which inverse tables are built unless overridden.
pub const DEFAULT_BOUND: usize = 6;

type SparseVec = BTreeMap<usize, Rational>;

/// The matrix of `Θ` restricted to `H_ho(n)`: rows are `Σ_n` in lexicographic
/// order, columns are heap-ordered forests sorted by their text encoding, and
/// entry `(τ, F)` is 1 exactly when `τ ∈ S_F`. Carries its exact inverse.
#[derive(Clone, Debug)]
pub struct ThetaMatrix {
    n: usize,
    rows: Vec<Permutation>,
    columns: Vec<OrderedForest>,
    support: Vec<Vec<usize>>,
    inverse: Vec<LinComb<OrderedForest>>,
    row_index: HashMap<Permutation, usize>,
}

impl ThetaMatrix {
    pub fn build(n: usize, bound: usize) -> Result<ThetaMatrix, BoundError> {
        if n > bound {
            return Err(BoundError { requested: n, bound });
        }
        let rows = Permutation::all(n);
        let row_index: HashMap<Permutation, usize> = rows.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut columns: Vec<OrderedForest> = enumerate_heap_ordered(n).into_iter().map(|f| f.into_inner()).collect();
        columns.sort_by_cached_key(|f| f.to_string());
        let support: Vec<Vec<usize>> = columns
            .iter()
            .map(|f| {
                let mut s: Vec<usize> = theta(f).basis_elements().map(|p| row_index[p]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let pre = invert(rows.len(), &support).expect("Θ restricted to heap-ordered forests is invertible");
        let inverse = pre
            .into_iter()
            .map(|v| LinComb::normalize(v.into_iter().map(|(j, c)| (columns[j].clone(), c))))
            .collect();
        Ok(ThetaMatrix { n, rows, columns, support, inverse, row_index })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Permutation] {
        &self.rows
    }

    pub fn columns(&self) -> &[OrderedForest] {
        &self.columns
    }

    /// Row indices of the nonzero entries of column `j`, i.e. of `S_F`.
    pub fn column_support(&self, j: usize) -> &[usize] {
        &self.support[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.support[col].binary_search(&row).is_ok()
    }

    /// `Θ⁻¹(τ)` as a combination of heap-ordered forests.
    pub fn theta_inverse(&self, tau: &Permutation) -> &LinComb<OrderedForest> {
        &self.inverse[self.row_index[tau]]
    }

    /// `T^σ = Θ⁻¹(σ⁻¹)`.
    pub fn t_sigma(&self, sigma: &Permutation) -> &LinComb<OrderedForest> {
        self.theta_inverse(&sigma.inverse())
    }
}

/// Exact sparse Gauss–Jordan elimination. Column `j` of the matrix has unit
/// entries at the rows in `cols[j]`. Returns, for every row `r`, the
/// combination of columns mapping to the basis vector `e_r`, or `None` when
/// the matrix is singular.
fn invert(n_rows: usize, cols: &[Vec<usize>]) -> Option<Vec<SparseVec>> {
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&j| (cols[j].len(), j));
    // Forward phase: each stored vector vanishes on the pivots created before it.
    let mut pivots: Vec<(usize, SparseVec, SparseVec)> = Vec::with_capacity(cols.len());
    let mut pivot_of_row: HashMap<usize, usize> = HashMap::new();
    for &j in &order {
        let mut image: SparseVec = cols[j].iter().map(|&r| (r, Rational::one())).collect();
        let mut pre: SparseVec = BTreeMap::from([(j, Rational::one())]);
        for (p, v, w) in &pivots {
            if let Some(c) = image.get(p).cloned() {
                let f = &c / &v[p];
                axpy(&mut image, v, &f);
                axpy(&mut pre, w, &f);
            }
        }
        let pick = image
            .iter()
            .filter(|(_, c)| c.abs().is_one())
            .map(|(r, _)| *r)
            .next_back()
            .or_else(|| image.keys().next_back().copied())?;
        pivot_of_row.insert(pick, pivots.len());
        pivots.push((pick, image, pre));
    }
    if pivots.len() != n_rows {
        return None;
    }
    // Backward phase.
    for k in (0..pivots.len()).rev() {
        let (head, tail) = pivots.split_at_mut(k + 1);
        let (p, v, w) = &mut head[k];
        let others: Vec<(usize, Rational)> = v.iter().filter(|(r, _)| *r != p).map(|(r, c)| (*r, c.clone())).collect();
        for (r, c) in others {
            let idx = pivot_of_row[&r];
            debug_assert!(idx > k);
            let (_, vj, wj) = &tail[idx - k - 1];
            axpy(v, vj, &c);
            axpy(w, wj, &c);
        }
        let scale = v[p].recip()?;
        for c in w.values_mut() {
            *c = &*c * &scale;
        }
        for c in v.values_mut() {
            *c = &*c * &scale;
        }
    }
    let mut out = vec![SparseVec::new(); n_rows];
    for (p, _, w) in pivots {
        out[p] = w;
    }
    Some(out)
}

/// `x -= f·y` on sparse vectors.
fn axpy(x: &mut SparseVec, y: &SparseVec, f: &Rational) {
    for (k, c) in y {
        let delta = c * f;
        let slot = x.entry(*k).or_default();
        *slot = &*slot - &delta;
        if slot.is_zero() {
            x.remove(k);
        }
    }
}

/// Lazily built inverse tables for every degree up to a bound, shareable
/// across threads.
pub struct TSigma {
    bound: usize,
    tables: Mutex<BTreeMap<usize, Arc<ThetaMatrix>>>,
}

impl Default for TSigma {
    fn default() -> Self {
        TSigma::new(DEFAULT_BOUND)
    }
}

impl TSigma {
    pub fn new(bound: usize) -> Self {
        TSigma { bound, tables: Mutex::new(BTreeMap::new()) }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn table(&self, n: usize) -> Result<Arc<ThetaMatrix>, BoundError> {
        if let Some(t) = self.tables.lock().expect("table cache poisoned").get(&n) {
            return Ok(t.clone());
        }
        let t = Arc::new(ThetaMatrix::build(n, self.bound)?);
        self.tables.lock().expect("table cache poisoned").insert(n, t.clone());
        Ok(t)
    }

    pub fn t_sigma(&self, sigma: &Permutation) -> Result<LinComb<OrderedForest>, BoundError> {
        Ok(self.table(sigma.len())?.t_sigma(sigma).clone())
    }

    pub fn theta_inverse(&self, tau: &Permutation) -> Result<LinComb<OrderedForest>, BoundError> {
        Ok(self.table(tau.len())?.theta_inverse(tau).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_matrix_detected() {
        assert!(invert(2, &[vec![0, 1], vec![0, 1]]).is_none());
    }

    #[test]
    fn small_inverse() {
        // columns e0+e1, e1
        let inv = invert(2, &[vec![0, 1], vec![1]]).unwrap();
        assert_eq!(inv[0], BTreeMap::from([(0, Rational::one()), (1, Rational::from(-1))]));
        assert_eq!(inv[1], BTreeMap::from([(1, Rational::one())]));
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(ThetaMatrix::build(4, 3).unwrap_err(), BoundError { requested: 4, bound: 3 });
    }
}
