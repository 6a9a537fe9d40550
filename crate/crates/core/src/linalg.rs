//! Sparse exact linear algebra over ℚ.
//!
//! Vectors are sorted `(column, value)` lists without stored zeros. The
//! nullspace solver splits a system into the connected components of its
//! row/column incidence graph and runs Gauss–Jordan on each component,
//! choosing the sparsest column as pivot.

use std::collections::{BTreeMap, HashMap};

use crate::exactnum::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

/// `a + k·b` for sorted sparse vectors.
pub fn add_scaled(a: &[(usize, Rational)], k: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    if k.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, k * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(k * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &[(usize, Rational)], k: &Rational) -> SparseVec {
    if k.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(c, x)| (*c, x * k)).collect()
}

/// Builds a sorted sparse vector from unordered entries, summing duplicates.
pub fn collect_sparse(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        *acc.entry(c).or_default() += &v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn lookup(v: &[(usize, Rational)], col: usize) -> Option<&Rational> {
    v.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &v[i].1)
}

fn normalize_leading(v: &[(usize, Rational)]) -> SparseVec {
    match v.first() {
        None => Vec::new(),
        Some((_, lead)) => scale(v, &lead.recip().expect("stored entries are nonzero")),
    }
}

/// An incrementally built reduced row echelon basis.
///
/// Every row has leading entry 1 in its pivot column, and pivot columns are
/// zero in all other rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows.into_values().collect()
    }

    /// The remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut r = v.to_vec();
        for (c, x) in v {
            if let Some(row) = self.rows.get(c) {
                r = add_scaled(&r, &-x, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        let r = normalize_leading(&self.reduce(v));
        let Some(&(pivot, _)) = r.first() else {
            return false;
        };
        for row in self.rows.values_mut() {
            if let Some(x) = lookup(row, pivot).cloned() {
                *row = add_scaled(row, &-x, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }
}

/// Coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    width: usize,
    count: usize,
    echelon: Echelon,
}

impl SpanSolver {
    /// `None` when the vectors are linearly dependent. `width` bounds the
    /// column indices used by the vectors.
    pub fn new(vectors: &[SparseVec], width: usize) -> Option<Self> {
        // Each vector is tagged with a unit column past `width`; reducing a
        // target then leaves minus its coordinates in the tag columns.
        let mut echelon = Echelon::new();
        for (t, v) in vectors.iter().enumerate() {
            let mut tagged = v.clone();
            tagged.push((width + t, Rational::one()));
            echelon.insert(&tagged);
        }
        if echelon.pivots().any(|p| p >= width) {
            return None;
        }
        Some(SpanSolver { width, count: vectors.len(), echelon })
    }

    /// Coefficients `c` with `Σ c_t v_t = target`, or `None` outside the span.
    pub fn solve(&self, target: &[(usize, Rational)]) -> Option<Vec<Rational>> {
        let rem = self.echelon.reduce(target);
        if rem.iter().any(|(c, _)| *c < self.width) {
            return None;
        }
        let mut coords = vec![Rational::zero(); self.count];
        for (c, v) in rem {
            coords[c - self.width] = -v;
        }
        Some(coords)
    }
}

/// Rank and nullspace of a sparse system `M x = 0` with `ncols` unknowns.
#[derive(Clone, Debug)]
pub struct Nullspace {
    pub rank: usize,
    /// Reduced echelon basis of the solution space, pivots scaled to 1.
    pub basis: Vec<SparseVec>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// A column set with the rows supported on it.
pub type Block<T> = (Vec<usize>, Vec<Vec<(usize, T)>>);

pub type Components<T> = (Vec<Block<T>>, Vec<usize>);

/// Splits rows into independent blocks by shared columns. Returns the
/// blocks in order of their smallest column, each with its sorted column
/// set; columns touched by no row are returned separately.
pub fn components<T: Clone>(rows: &[Vec<(usize, T)>], ncols: usize) -> Components<T> {
    let mut uf = UnionFind::new(ncols);
    let mut used = vec![false; ncols];
    for row in rows {
        for (c, _) in row {
            used[*c] = true;
            uf.union(row[0].0, *c);
        }
    }
    let mut blocks: BTreeMap<usize, Block<T>> = BTreeMap::new();
    for c in 0..ncols {
        if used[c] {
            let root = uf.find(c);
            blocks.entry(root).or_default().0.push(c);
        }
    }
    for row in rows {
        if let Some((c, _)) = row.first() {
            let root = uf.find(*c);
            blocks.get_mut(&root).expect("row column registered").1.push(row.clone());
        }
    }
    let untouched = (0..ncols).filter(|&c| !used[c]).collect();
    (blocks.into_values().collect(), untouched)
}

/// Gauss–Jordan on one block with sparsest-column pivoting. Returns the
/// pivot rows keyed by pivot column, fully reduced against each other.
fn eliminate_block(mut active: Vec<SparseVec>) -> BTreeMap<usize, SparseVec> {
    let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
    active.retain(|r| !r.is_empty());
    while !active.is_empty() {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for row in &active {
            for (c, _) in row {
                *counts.entry(*c).or_default() += 1;
            }
        }
        let (&pivot_col, _) = counts
            .iter()
            .min_by_key(|(c, n)| (**n, **c))
            .expect("active rows are nonempty");
        let pivot_idx = active
            .iter()
            .enumerate()
            .filter(|(_, r)| lookup(r, pivot_col).is_some())
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
            .unwrap();
        let prow = active.swap_remove(pivot_idx);
        let lead = lookup(&prow, pivot_col).unwrap().recip().expect("nonzero pivot");
        let prow = scale(&prow, &lead);
        for row in active.iter_mut().chain(done.values_mut()) {
            if let Some(x) = lookup(row, pivot_col).cloned() {
                *row = add_scaled(row, &-x, &prow);
            }
        }
        active.retain(|r| !r.is_empty());
        done.insert(pivot_col, prow);
    }
    done
}

/// Exact nullspace of the sparse system given by `rows` over `ncols` unknowns.
pub fn nullspace(rows: &[SparseVec], ncols: usize) -> Nullspace {
    let mut normalized: Vec<SparseVec> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| normalize_leading(r))
        .collect();
    normalized.sort();
    normalized.dedup();

    let (blocks, untouched) = components(&normalized, ncols);
    let mut rank = 0;
    let mut kernel: Vec<SparseVec> = untouched.into_iter().map(|c| vec![(c, Rational::one())]).collect();
    for (cols, block_rows) in blocks {
        let pivots = eliminate_block(block_rows);
        rank += pivots.len();
        for &free in cols.iter().filter(|c| !pivots.contains_key(c)) {
            let mut v = vec![(free, Rational::one())];
            for (&p, row) in &pivots {
                if let Some(x) = lookup(row, free) {
                    v.push((p, -x));
                }
            }
            v.sort_by_key(|(c, _)| *c);
            kernel.push(v);
        }
    }
    let basis = Echelon::from_vectors(kernel.iter()).into_rows();
    Nullspace { rank, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        collect_sparse(entries.iter().map(|&(c, v)| (c, Rational::from(v))))
    }

    #[test]
    fn echelon_is_reduced_and_unique() {
        let a = Echelon::from_vectors([sv(&[(0, 2), (1, 4)]), sv(&[(1, 1), (2, 1)])].iter());
        let b = Echelon::from_vectors([sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (2, -2)])].iter());
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert!(a.contains(&sv(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!a.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn nullspace_of_split_system() {
        // x0 + x1 = 0, x2 - 2 x3 = 0, x4 unconstrained.
        let rows = vec![sv(&[(0, 1), (1, 1)]), sv(&[(2, 3), (3, -6)]), sv(&[(0, 2), (1, 2)])];
        let ns = nullspace(&rows, 5);
        assert_eq!(ns.rank, 2);
        assert_eq!(
            ns.basis,
            vec![
                vec![(0, q(1, 1)), (1, q(-1, 1))],
                vec![(2, q(1, 1)), (3, q(1, 2))],
                vec![(4, q(1, 1))],
            ]
        );
    }

    #[test]
    fn kernel_vectors_solve_system() {
        let rows = vec![
            sv(&[(0, 1), (1, 2), (2, 3)]),
            sv(&[(1, 1), (3, -1)]),
            sv(&[(0, 1), (2, 3), (3, 2)]),
        ];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.rank + ns.basis.len(), 4);
        for v in &ns.basis {
            for r in &rows {
                let dot: Rational = r.iter().filter_map(|(c, x)| lookup(v, *c).map(|y| x * y)).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
