//! Root-space decomposition with respect to a diagonal Cartan subalgebra,
//! checks of the basic-classical root axioms, and comparison against the
//! standard root tables.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{Family, FamilySpec};
use crate::exactnum::Rational;
use crate::linalg::{SpanSolver, SparseVec};
use crate::superalgebra::{Element, Parity, Subspace, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("basis is not a root basis: ad e{cartan} does not act diagonally on e{basis}")]
    NotRootBasis { cartan: usize, basis: usize },
    #[error("Cartan index {0} out of range")]
    CartanIndex(usize),
}

/// One root space: the basis vectors of a single parity sharing a nonzero
/// joint eigenvalue vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Eigenvalue of each Cartan basis element, in `cartan` order.
    pub functional: Vec<Rational>,
    pub parity: Parity,
    pub members: Vec<usize>,
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan: Vec<usize>,
    /// Sorted by functional, then parity.
    pub roots: Vec<Root>,
    pub zero_space: Subspace,
}

impl RootDatum {
    pub fn find<'a>(&'a self, functional: &'a [Rational]) -> impl Iterator<Item = &'a Root> + 'a {
        self.roots.iter().filter(move |r| r.functional == functional)
    }

    pub fn total_dim(&self) -> usize {
        self.zero_space.dim() + self.roots.iter().map(|r| r.space.dim()).sum::<usize>()
    }
}

/// Even basis vectors whose adjoint action is diagonal in the basis.
///
/// For the catalog bases this recovers the diagonal Cartan subalgebra; it
/// serves inputs that carry no Cartan annotation.
pub fn diagonal_cartan(a: &SuperAlgebra) -> Vec<usize> {
    (0..a.dim())
        .filter(|&h| !a.parity(h).is_odd())
        .filter(|&h| (0..a.dim()).all(|k| a.bracket_basis(h, k).support().all(|s| s == k)))
        .collect()
}

/// Groups basis vectors by their eigenvalues under `ad h` for `h` in `cartan`.
pub fn root_decompose(a: &SuperAlgebra, cartan: &[usize]) -> Result<RootDatum, RootError> {
    let n = a.dim();
    if let Some(&bad) = cartan.iter().find(|&&h| h >= n) {
        return Err(RootError::CartanIndex(bad));
    }
    let mut groups: BTreeMap<(Vec<Rational>, Parity), Vec<usize>> = BTreeMap::new();
    let mut zero = Vec::new();
    for k in 0..n {
        let mut functional = Vec::with_capacity(cartan.len());
        for &h in cartan {
            let image = a.bracket_basis(h, k);
            if image.support().any(|s| s != k) {
                return Err(RootError::NotRootBasis { cartan: h, basis: k });
            }
            functional.push(image.coeff(k));
        }
        if functional.iter().all(Rational::is_zero) {
            zero.push(k);
        } else {
            groups.entry((functional, a.parity(k))).or_default().push(k);
        }
    }
    let roots = groups
        .into_iter()
        .map(|((functional, parity), members)| Root {
            space: Subspace::span(n, members.iter().map(|&i| Element::basis(i))),
            functional,
            parity,
            members,
        })
        .collect();
    Ok(RootDatum {
        cartan: cartan.to_vec(),
        roots,
        zero_space: Subspace::span(n, zero.into_iter().map(Element::basis)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootAxiomViolation {
    /// The zero weight space is larger than the Cartan span.
    ZeroSpaceNotCartan { zero_dim: usize, cartan_dim: usize },
    /// A nonzero root has a root space of dimension other than one.
    RootSpaceDim { functional: Vec<Rational>, dim: usize },
    /// `[G_α, G_β]` is zero although `α + β` is a root (or zero).
    MissingProduct { alpha: Vec<Rational>, beta: Vec<Rational> },
    /// `[G_α, G_β]` is nonzero although `α + β` is neither a root nor zero.
    UnexpectedProduct { alpha: Vec<Rational>, beta: Vec<Rational> },
    /// `[G_α, G_β]` is not contained in `G_{α+β}`.
    NotClosed { alpha: Vec<Rational>, beta: Vec<Rational> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootAxiomReport {
    pub violations: Vec<RootAxiomViolation>,
}

impl RootAxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn add_functionals(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Checks the three root axioms of basic classical superalgebras:
/// the zero weight space is the Cartan subalgebra, nonzero root spaces are
/// one-dimensional, and `[G_α, G_β] ≠ 0` exactly when `α + β` is a root,
/// or `α + β = 0` (where the product lands in the Cartan subalgebra).
pub fn verify_root_axioms(a: &SuperAlgebra, rd: &RootDatum) -> RootAxiomReport {
    let n = a.dim();
    let mut violations = Vec::new();
    let cartan_span = Subspace::span(n, rd.cartan.iter().map(|&i| Element::basis(i)));
    if rd.zero_space != cartan_span {
        violations.push(RootAxiomViolation::ZeroSpaceNotCartan {
            zero_dim: rd.zero_space.dim(),
            cartan_dim: cartan_span.dim(),
        });
    }
    let mut by_functional: BTreeMap<&[Rational], Subspace> = BTreeMap::new();
    for r in &rd.roots {
        let entry = by_functional.entry(&r.functional).or_insert_with(|| Subspace::zero(n));
        *entry = entry.sum(&r.space);
    }
    for (f, space) in &by_functional {
        if space.dim() != 1 {
            violations.push(RootAxiomViolation::RootSpaceDim { functional: f.to_vec(), dim: space.dim() });
        }
    }
    for (alpha, ga) in &by_functional {
        for (beta, gb) in &by_functional {
            let sum = add_functionals(alpha, beta);
            let is_zero = sum.iter().all(Rational::is_zero);
            let mut product = Subspace::zero(n);
            for x in ga.basis() {
                for y in gb.basis() {
                    product.insert(&a.bracket_unchecked(&x, &y));
                }
            }
            let target = if is_zero { Some(&rd.zero_space) } else { by_functional.get(sum.as_slice()) };
            match (product.is_zero(), target) {
                (true, Some(_)) => violations.push(RootAxiomViolation::MissingProduct {
                    alpha: alpha.to_vec(),
                    beta: beta.to_vec(),
                }),
                (false, None) => violations.push(RootAxiomViolation::UnexpectedProduct {
                    alpha: alpha.to_vec(),
                    beta: beta.to_vec(),
                }),
                (false, Some(t)) if !t.contains_subspace(&product) => {
                    violations.push(RootAxiomViolation::NotClosed { alpha: alpha.to_vec(), beta: beta.to_vec() })
                }
                _ => {}
            }
        }
    }
    RootAxiomReport { violations }
}

/// A root system written in the standard `ε`/`δ` coordinates.
#[derive(Clone, Debug)]
pub struct RootTable {
    pub coordinates: Vec<String>,
    pub even: Vec<Vec<i64>>,
    pub odd: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
}

struct TableBuilder {
    coordinates: Vec<String>,
    even: Vec<Vec<i64>>,
    odd: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
}

impl TableBuilder {
    fn new(coordinates: Vec<String>) -> Self {
        TableBuilder { coordinates, even: Vec::new(), odd: Vec::new(), simple: Vec::new() }
    }

    fn vector(&self, terms: &[(i64, usize)]) -> Vec<i64> {
        let mut v = vec![0; self.coordinates.len()];
        for &(c, i) in terms {
            v[i] += c;
        }
        v
    }

    fn push(&mut self, odd: bool, terms: &[(i64, usize)]) {
        let v = self.vector(terms);
        if odd {
            self.odd.push(v);
        } else {
            self.even.push(v);
        }
    }

    /// `±x ± y` over all four sign choices.
    fn push_pm_pm(&mut self, odd: bool, x: usize, y: usize) {
        for s in [1, -1] {
            for t in [1, -1] {
                self.push(odd, &[(s, x), (t, y)]);
            }
        }
    }

    fn push_pm(&mut self, odd: bool, c: i64, x: usize) {
        self.push(odd, &[(c, x)]);
        self.push(odd, &[(-c, x)]);
    }

    fn simple(&mut self, terms: &[(i64, usize)]) {
        let v = self.vector(terms);
        self.simple.push(v);
    }

    fn build(self) -> RootTable {
        RootTable { coordinates: self.coordinates, even: self.even, odd: self.odd, simple: self.simple }
    }
}

/// The standard root table of a basic family, when its coordinates are
/// independent on the Cartan subalgebra. `A(n,n)` and the non-basic
/// families have none.
pub fn root_table(spec: &FamilySpec) -> Option<RootTable> {
    let names = |a: &str, m: usize, b: &str, n: usize| -> Vec<String> {
        (1..=m).map(|i| format!("{a}{i}")).chain((1..=n).map(|i| format!("{b}{i}"))).collect()
    };
    let (m, n) = (spec.m, spec.n);
    let table = match spec.family {
        Family::A => {
            // ε_1..ε_{m+1}, δ_1..δ_{n+1}; δ_j is coordinate m+1+j-1.
            let (p, qn) = (m + 1, n + 1);
            let mut t = TableBuilder::new(names("e", p, "d", qn));
            for i in 0..p {
                for j in 0..p {
                    if i != j {
                        t.push(false, &[(1, i), (-1, j)]);
                    }
                }
            }
            for i in 0..qn {
                for j in 0..qn {
                    if i != j {
                        t.push(false, &[(1, p + i), (-1, p + j)]);
                    }
                }
            }
            for i in 0..p {
                for j in 0..qn {
                    t.push(true, &[(1, i), (-1, p + j)]);
                    t.push(true, &[(-1, i), (1, p + j)]);
                }
            }
            for i in 0..p + qn - 1 {
                t.simple(&[(1, i), (-1, i + 1)]);
            }
            t
        }
        Family::B => {
            let mut t = TableBuilder::new(names("e", m, "d", n));
            let d = |j: usize| m + j;
            for i in 0..m {
                for j in i + 1..m {
                    t.push_pm_pm(false, i, j);
                }
                t.push_pm(false, 1, i);
            }
            for i in 0..n {
                t.push_pm(false, 2, d(i));
                for j in i + 1..n {
                    t.push_pm_pm(false, d(i), d(j));
                }
                t.push_pm(true, 1, d(i));
                for e in 0..m {
                    t.push_pm_pm(true, e, d(i));
                }
            }
            for j in 0..n - 1 {
                t.simple(&[(1, d(j)), (-1, d(j + 1))]);
            }
            if m == 0 {
                t.simple(&[(1, d(n - 1))]);
            } else {
                t.simple(&[(1, d(n - 1)), (-1, 0)]);
                for i in 0..m - 1 {
                    t.simple(&[(1, i), (-1, i + 1)]);
                }
                t.simple(&[(1, m - 1)]);
            }
            t
        }
        Family::C => {
            let k = n - 1;
            let mut coords = vec!["e".to_string()];
            coords.extend((1..=k).map(|i| format!("d{i}")));
            let mut t = TableBuilder::new(coords);
            for i in 1..=k {
                t.push_pm(false, 2, i);
                for j in i + 1..=k {
                    t.push_pm_pm(false, i, j);
                }
                t.push_pm_pm(true, 0, i);
            }
            for i in 1..k {
                t.simple(&[(1, i), (-1, i + 1)]);
            }
            t.simple(&[(1, k), (-1, 0)]);
            t.simple(&[(1, k), (1, 0)]);
            t
        }
        Family::D => {
            let mut t = TableBuilder::new(names("e", m, "d", n));
            let d = |j: usize| m + j;
            for i in 0..m {
                for j in i + 1..m {
                    t.push_pm_pm(false, i, j);
                }
                for j in 0..n {
                    t.push_pm_pm(true, i, d(j));
                }
            }
            for i in 0..n {
                t.push_pm(false, 2, d(i));
                for j in i + 1..n {
                    t.push_pm_pm(false, d(i), d(j));
                }
            }
            for i in 0..m - 1 {
                t.simple(&[(1, i), (-1, i + 1)]);
            }
            t.simple(&[(1, m - 1), (-1, d(0))]);
            for j in 0..n - 1 {
                t.simple(&[(1, d(j)), (-1, d(j + 1))]);
            }
            t.simple(&[(2, d(n - 1))]);
            t
        }
        Family::D21 => {
            let mut t = TableBuilder::new(names("e", 3, "", 0));
            for i in 0..3 {
                t.push_pm(false, 2, i);
            }
            for s in [1, -1] {
                for u in [1, -1] {
                    for v in [1, -1] {
                        t.push(true, &[(s, 0), (u, 1), (v, 2)]);
                    }
                }
            }
            t.simple(&[(1, 0), (1, 1), (1, 2)]);
            t.simple(&[(-2, 0)]);
            t.simple(&[(-2, 1)]);
            t
        }
        Family::Aqq | Family::P | Family::Q => return None,
    };
    Some(table.build())
}

/// Whether the computed roots of `rd` equal the family's standard table
/// under some linear identification of coordinates.
pub fn match_root_table(rd: &RootDatum, spec: &FamilySpec) -> bool {
    root_table(spec).is_some_and(|t| match_against(rd, &t))
}

fn to_sparse(v: &[i64]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i, Rational::from(*c)))
        .collect()
}

fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// Matches `table` against the computed roots.
///
/// Simple roots are assigned to computed roots of the same parity in
/// lexicographic order; each complete assignment fixes the linear map on
/// the span of the simple system, and is accepted when it carries the full
/// table onto the computed multiset.
pub fn match_against(rd: &RootDatum, table: &RootTable) -> bool {
    let width = table.coordinates.len();
    let simple: Vec<SparseVec> = table.simple.iter().map(|v| to_sparse(v)).collect();
    let Some(solver) = SpanSolver::new(&simple, width) else {
        return false;
    };
    let mut table_roots: Vec<(Vec<Rational>, Parity)> = Vec::new();
    for (list, parity) in [(&table.even, Parity::Even), (&table.odd, Parity::Odd)] {
        for v in list {
            match solver.solve(&to_sparse(v)) {
                Some(c) => table_roots.push((c, parity)),
                None => return false,
            }
        }
    }
    let simple_parity: Option<Vec<Parity>> = table
        .simple
        .iter()
        .map(|s| {
            if table.even.contains(s) {
                Some(Parity::Even)
            } else if table.odd.contains(s) {
                Some(Parity::Odd)
            } else {
                None
            }
        })
        .collect();
    let Some(simple_parity) = simple_parity else {
        return false;
    };

    let mut computed: Vec<(Vec<Rational>, Parity)> = Vec::new();
    for r in &rd.roots {
        for _ in 0..r.space.dim() {
            computed.push((r.functional.clone(), r.parity));
        }
    }
    computed.sort();
    if computed.len() != table_roots.len() {
        return false;
    }
    let candidates: Vec<&(Vec<Rational>, Parity)> = {
        let mut c: Vec<_> = computed.iter().collect();
        c.dedup();
        c
    };
    let cdim = rd.cartan.len();

    let mut chosen: Vec<usize> = Vec::new();
    search(&candidates, &simple_parity, cdim, &mut chosen, &mut |images| {
        let mut mapped: Vec<(Vec<Rational>, Parity)> = table_roots
            .iter()
            .map(|(coords, parity)| {
                let mut v = vec![Rational::zero(); cdim];
                for (c, img) in coords.iter().zip(images) {
                    for (slot, x) in v.iter_mut().zip(img.iter()) {
                        *slot += &(c * x);
                    }
                }
                (v, *parity)
            })
            .collect();
        mapped.sort();
        mapped == computed
    })
}

fn search(
    candidates: &[&(Vec<Rational>, Parity)],
    parities: &[Parity],
    cdim: usize,
    chosen: &mut Vec<usize>,
    accept: &mut dyn FnMut(&[&Vec<Rational>]) -> bool,
) -> bool {
    let images: Vec<&Vec<Rational>> = chosen.iter().map(|&i| &candidates[i].0).collect();
    let sparse: Vec<SparseVec> = images.iter().map(|v| dense_to_sparse(v)).collect();
    if SpanSolver::new(&sparse, cdim).is_none() {
        return false;
    }
    if chosen.len() == parities.len() {
        return accept(&images);
    }
    let want = parities[chosen.len()];
    for i in 0..candidates.len() {
        if candidates[i].1 != want || chosen.contains(&i) {
            continue;
        }
        chosen.push(i);
        let found = search(candidates, parities, cdim, chosen, accept);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{construct, sl2};
    use crate::exactnum::q;

    #[test]
    fn sl2_roots() {
        let c = sl2();
        let rd = root_decompose(&c.algebra, &c.cartan).unwrap();
        let f: Vec<Vec<Rational>> = rd.roots.iter().map(|r| r.functional.clone()).collect();
        assert_eq!(f, vec![vec![q(-2, 1)], vec![q(2, 1)]]);
        assert!(rd.roots.iter().all(|r| r.space.dim() == 1));
        assert!(verify_root_axioms(&c.algebra, &rd).is_ok());
    }

    #[test]
    fn detected_cartan_matches_construction() {
        for s in ["A:1,0", "B:1,1", "D21:3/5", "Q:2", "P:2"] {
            let c = construct(&s.parse().unwrap()).unwrap();
            assert_eq!(diagonal_cartan(&c.algebra), c.cartan, "{s}");
        }
        assert_eq!(diagonal_cartan(&sl2().algebra), vec![0]);
    }

    #[test]
    fn wrong_cartan_is_rejected() {
        let c = sl2();
        assert_eq!(
            root_decompose(&c.algebra, &[1]).unwrap_err(),
            RootError::NotRootBasis { cartan: 1, basis: 0 }
        );
    }

    #[test]
    fn basic_instances_match_tables() {
        for s in ["B:0,1", "B:1,1", "C:2", "A:1,0", "A:2,1", "D:2,1", "D21:2/3", "C:3", "B:2,1"] {
            let spec: FamilySpec = s.parse().unwrap();
            let c = construct(&spec).unwrap();
            let rd = root_decompose(&c.algebra, &c.cartan).unwrap();
            assert_eq!(rd.total_dim(), c.algebra.dim());
            assert!(verify_root_axioms(&c.algebra, &rd).is_ok(), "{s}: {:?}", verify_root_axioms(&c.algebra, &rd));
            assert!(match_root_table(&rd, &spec), "{s}");
        }
    }

    #[test]
    fn b11_odd_roots() {
        let c = construct(&FamilySpec::b(1, 1)).unwrap();
        let rd = root_decompose(&c.algebra, &c.cartan).unwrap();
        let odd: Vec<_> = rd.roots.iter().filter(|r| r.parity == Parity::Odd).collect();
        assert_eq!(odd.len(), 6);
        for r in &rd.roots {
            let neg: Vec<Rational> = r.functional.iter().map(|x| -x).collect();
            assert!(rd.find(&neg).any(|s| s.parity == r.parity));
        }
    }

    #[test]
    fn mislabeled_tables_do_not_match() {
        let c = construct(&FamilySpec::a(1, 0)).unwrap();
        let rd = root_decompose(&c.algebra, &c.cartan).unwrap();
        assert!(!match_root_table(&rd, &FamilySpec::b(1, 1)));
        // Same vectors as C(2) with the parities of one ± pair swapped.
        let mut t = root_table(&FamilySpec::c(2)).unwrap();
        assert!(match_against(&rd, &t));
        let moved = t.odd.split_off(2);
        t.even.extend(moved);
        assert!(!match_against(&rd, &t));
    }

    #[test]
    fn non_basic_families_decompose_but_may_fail_axioms() {
        let c = construct(&FamilySpec::q(2)).unwrap();
        let rd = root_decompose(&c.algebra, &c.cartan).unwrap();
        assert_eq!(rd.total_dim(), c.algebra.dim());
        assert!(!verify_root_axioms(&c.algebra, &rd).is_ok());
        assert!(root_table(&FamilySpec::q(2)).is_none());
    }
}
