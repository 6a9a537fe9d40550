//! Finite-dimensional superalgebras given by basis parities and sparse
//! structure constants, with superidentity checks and ideal machinery.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Rational;
use crate::linalg::{self, add_scaled, collect_sparse, lookup, scale, Echelon, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("structure constants must be stored for i <= j, got ({i}, {j})")]
    UnorderedPair { i: usize, j: usize },
    #[error("duplicate structure constants for pair ({i}, {j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("[e{i}, e{j}] has a component on e{k} of the wrong parity")]
    Grading { i: usize, j: usize, k: usize },
    #[error("dimension {declared} does not match {actual} parity labels")]
    DimensionMismatch { declared: usize, actual: usize },
    #[error("parity label must be 0 or 1, got {0}")]
    BadParity(u8),
    #[error("simplicity needs dimension at least 2, got {0}")]
    TooSmall(usize),
    #[error("subspace is not an ideal: bracket with e{basis} leaves it")]
    NotAnIdeal { basis: usize },
    #[error("ideal is not graded: it is not spanned by parity-homogeneous vectors")]
    NotGraded,
    #[error("subspace lives in dimension {got}, algebra has dimension {expected}")]
    AmbientMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Result<Self, AlgebraError> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            b => Err(AlgebraError::BadParity(b)),
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn sum(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^(p·q)`.
    pub fn sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// A vector in a fixed basis; no zero coordinates are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Element {
    coords: SparseVec,
}

impl Element {
    pub fn new(entries: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        Element { coords: collect_sparse(entries) }
    }

    pub(crate) fn from_sorted(coords: SparseVec) -> Self {
        debug_assert!(coords.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(coords.iter().all(|(_, v)| !v.is_zero()));
        Element { coords }
    }

    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(i: usize) -> Self {
        Element { coords: vec![(i, Rational::one())] }
    }

    pub fn coords(&self) -> &[(usize, Rational)] {
        &self.coords
    }

    pub fn coeff(&self, i: usize) -> Rational {
        lookup(&self.coords, i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords.iter().map(|(i, _)| *i)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element { coords: add_scaled(&self.coords, &Rational::one(), &other.coords) }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element { coords: add_scaled(&self.coords, &-Rational::one(), &other.coords) }
    }

    pub fn add_scaled(&self, k: &Rational, other: &Element) -> Element {
        Element { coords: add_scaled(&self.coords, k, &other.coords) }
    }

    pub fn scale(&self, k: &Rational) -> Element {
        Element { coords: scale(&self.coords, k) }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (i, x) in &self.coords {
            v[*i] = x.clone();
        }
        v
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coords.iter().map(|(i, x)| format!("{x:?}·e{i}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A subspace of `F^dim` held as its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, echelon: Echelon::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(Element::basis))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Element>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Echelon basis ordered by pivot column.
    pub fn basis(&self) -> Vec<Element> {
        self.echelon.rows().map(|r| Element::from_sorted(r.clone())).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.echelon.pivots().collect()
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.echelon.contains(&v.coords)
    }

    /// Representative of `v` modulo the subspace with all pivot coordinates cleared.
    pub fn reduce(&self, v: &Element) -> Element {
        Element::from_sorted(self.echelon.reduce(&v.coords))
    }

    pub fn insert(&mut self, v: &Element) -> bool {
        self.echelon.insert(&v.coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v);
        }
        s
    }
}

/// One failed check reported by [`check_superidentities`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `[e_i, e_j]` has a component on `e_k` of parity other than `p(i) + p(j)`.
    Grading { i: usize, j: usize, k: usize },
    /// `[e_i, e_i] != 0` for an even basis vector.
    Anticommutativity { i: usize },
    /// The super Jacobi combination on `(e_i, e_j, e_k)` is nonzero.
    Jacobi { i: usize, j: usize, k: usize, residual: Element },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub violations: Vec<Violation>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite-dimensional superalgebra over ℚ.
///
/// Only `[e_i, e_j]` with `i <= j` is stored; the opposite order follows
/// from super-anticommutativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    parity: Vec<Parity>,
    table: BTreeMap<(usize, usize), Element>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    name: String,
    dim: usize,
    parity: Vec<u8>,
    brackets: Vec<(usize, usize, Vec<(usize, Rational)>)>,
}

impl SuperAlgebra {
    /// Validates indices, pair ordering and grading; zero products are dropped.
    pub fn new(
        name: impl Into<String>,
        parity: Vec<Parity>,
        brackets: impl IntoIterator<Item = ((usize, usize), Element)>,
    ) -> Result<Self, AlgebraError> {
        let dim = parity.len();
        let mut table = BTreeMap::new();
        for ((i, j), v) in brackets {
            for index in [i, j].into_iter().chain(v.support()) {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index, dim });
                }
            }
            if i > j {
                return Err(AlgebraError::UnorderedPair { i, j });
            }
            let target = parity[i].sum(parity[j]);
            if let Some(k) = v.support().find(|&k| parity[k] != target) {
                return Err(AlgebraError::Grading { i, j, k });
            }
            if v.is_zero() {
                continue;
            }
            if table.insert((i, j), v).is_some() {
                return Err(AlgebraError::DuplicatePair { i, j });
            }
        }
        Ok(SuperAlgebra { name: name.into(), parity, table })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    /// Stored products `[e_i, e_j]`, `i <= j`, in `(i, j)` order.
    pub fn stored(&self) -> impl Iterator<Item = (&(usize, usize), &Element)> {
        self.table.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    fn check_index(&self, index: usize) -> Result<(), AlgebraError> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::IndexOutOfRange { index, dim: self.dim() })
        }
    }

    /// `[e_i, e_j]`; panics on an out-of-range index.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Element {
        if i <= j {
            self.table.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            let sign = -self.parity[i].sign(self.parity[j]);
            match self.table.get(&(j, i)) {
                Some(v) => v.scale(&Rational::from(sign)),
                None => Element::zero(),
            }
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        for i in x.support().chain(y.support()) {
            self.check_index(i)?;
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, a) in x.coords() {
            for (j, b) in y.coords() {
                let ab = a * b;
                for (k, c) in self.bracket_basis(*i, *j).coords() {
                    *acc.entry(*k).or_default() += &(&ab * c);
                }
            }
        }
        Element::from_sorted(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    /// Multiplies every structure constant by `k`.
    pub fn scaled(&self, k: &Rational) -> SuperAlgebra {
        let table = if k.is_zero() {
            BTreeMap::new()
        } else {
            self.table.iter().map(|(p, v)| (*p, v.scale(k))).collect()
        };
        SuperAlgebra { name: self.name.clone(), parity: self.parity.clone(), table }
    }

    /// Overwrites one stored product; used to build corrupted fixtures.
    pub fn with_product(&self, i: usize, j: usize, value: Element) -> Result<SuperAlgebra, AlgebraError> {
        let mut entries: BTreeMap<(usize, usize), Element> = self.table.clone();
        entries.insert((i, j), value);
        SuperAlgebra::new(self.name.clone(), self.parity.clone(), entries)
    }

    pub fn to_json(&self) -> String {
        let doc = AlgebraJson {
            name: self.name.clone(),
            dim: self.dim(),
            parity: self.parity.iter().map(|p| p.bit()).collect(),
            brackets: self
                .table
                .iter()
                .map(|(&(i, j), v)| (i, j, v.coords().to_vec()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, JsonError> {
        let doc: AlgebraJson = serde_json::from_str(text).map_err(|e| JsonError::Syntax(e.to_string()))?;
        if doc.dim != doc.parity.len() {
            return Err(AlgebraError::DimensionMismatch { declared: doc.dim, actual: doc.parity.len() }.into());
        }
        let parity = doc.parity.into_iter().map(Parity::from_bit).collect::<Result<Vec<_>, _>>()?;
        let entries = doc
            .brackets
            .into_iter()
            .map(|(i, j, coords)| ((i, j), Element::new(coords)))
            .collect::<Vec<_>>();
        Ok(SuperAlgebra::new(doc.name, parity, entries)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("malformed algebra JSON: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] AlgebraError),
}

/// Exhaustive check of grading, super-anticommutativity and the super
/// Jacobi identity on basis vectors.
///
/// The Jacobi form used is
/// `[[x,y],z] - [x,[y,z]] - (-1)^{p(y)p(z)} [[x,z],y] = 0`.
pub fn check_superidentities(a: &SuperAlgebra) -> IdentityReport {
    let n = a.dim();
    let mut violations = Vec::new();
    for (&(i, j), v) in &a.table {
        let target = a.parity[i].sum(a.parity[j]);
        for k in v.support().filter(|&k| a.parity[k] != target) {
            violations.push(Violation::Grading { i, j, k });
        }
        if i == j && !a.parity[i].is_odd() {
            violations.push(Violation::Anticommutativity { i });
        }
    }
    let products: Vec<Vec<Element>> = (0..n)
        .map(|i| (0..n).map(|j| a.bracket_basis(i, j)).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            let xy = &products[i][j];
            for k in 0..n {
                let yz = &products[j][k];
                let xz = &products[i][k];
                let s = Rational::from(a.parity[j].sign(a.parity[k]));
                let t1 = right_mul(&products, xy, k);
                let t2 = left_mul(&products, i, yz);
                let t3 = right_mul(&products, xz, j);
                let residual = t1.sub(&t2).add_scaled(&-s, &t3);
                if !residual.is_zero() {
                    violations.push(Violation::Jacobi { i, j, k, residual });
                }
            }
        }
    }
    IdentityReport { violations }
}

fn right_mul(products: &[Vec<Element>], x: &Element, k: usize) -> Element {
    let mut acc = Vec::new();
    for (m, c) in x.coords() {
        acc = add_scaled(&acc, c, products[*m][k].coords());
    }
    Element::from_sorted(acc)
}

fn left_mul(products: &[Vec<Element>], i: usize, y: &Element) -> Element {
    let mut acc = Vec::new();
    for (m, c) in y.coords() {
        acc = add_scaled(&acc, c, products[i][*m].coords());
    }
    Element::from_sorted(acc)
}

fn check_ambient(a: &SuperAlgebra, s: &Subspace) -> Result<(), AlgebraError> {
    if s.ambient_dim() == a.dim() {
        Ok(())
    } else {
        Err(AlgebraError::AmbientMismatch { expected: a.dim(), got: s.ambient_dim() })
    }
}

/// Smallest two-sided ideal containing `seed`.
pub fn ideal_closure(a: &SuperAlgebra, seed: &Subspace) -> Subspace {
    let mut ideal = seed.clone();
    let mut frontier = seed.basis();
    // Each productive round raises the dimension, so `dim` rounds suffice.
    for _ in 0..=a.dim() {
        if frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..a.dim() {
                let e = Element::basis(i);
                for w in [a.bracket_unchecked(&e, v), a.bracket_unchecked(v, &e)] {
                    if ideal.insert(&w) {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    ideal
}

/// Annihilator `{x : [x, A] = 0}`.
pub fn center(a: &SuperAlgebra) -> Subspace {
    let n = a.dim();
    // Unknown x_l; equation for (i, k): sum_l x_l [e_l, e_i]_k = 0.
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for l in 0..n {
        for i in 0..n {
            for (k, c) in a.bracket_basis(l, i).coords() {
                rows.entry((i, *k)).or_default().push((l, c.clone()));
            }
        }
    }
    let rows: Vec<SparseVec> = rows.into_values().map(collect_sparse).collect();
    let ns = linalg::nullspace(&rows, n);
    Subspace::span(n, ns.basis.into_iter().map(Element::from_sorted))
}

/// Whether `a` has no proper nonzero ideal.
///
/// Checks that the product is nonzero, the center is trivial, and the ideal
/// generated by every single basis vector is the whole algebra. With a
/// weight basis whose nonzero weight spaces are one-dimensional this is
/// exact: a nonzero ideal either contains a weight vector or is central.
pub fn is_simple(a: &SuperAlgebra) -> Result<bool, AlgebraError> {
    let n = a.dim();
    if n < 2 {
        return Err(AlgebraError::TooSmall(n));
    }
    if a.is_abelian() || !center(a).is_zero() {
        return Ok(false);
    }
    Ok((0..n).all(|i| ideal_closure(a, &Subspace::span(n, [Element::basis(i)])).dim() == n))
}

/// Span of the basis vectors of the given parity.
pub fn component(a: &SuperAlgebra, parity: Parity) -> Subspace {
    Subspace::span(
        a.dim(),
        (0..a.dim()).filter(|&i| a.parity[i] == parity).map(Element::basis),
    )
}

/// `[G_1, G_1]`.
pub fn derived_odd(a: &SuperAlgebra) -> Subspace {
    let odd: Vec<usize> = (0..a.dim()).filter(|&i| a.parity[i].is_odd()).collect();
    let mut s = Subspace::zero(a.dim());
    for (x, &i) in odd.iter().enumerate() {
        for &j in &odd[x..] {
            s.insert(&a.bracket_basis(i, j));
        }
    }
    s
}

fn parity_part(a: &SuperAlgebra, v: &Element, parity: Parity) -> Element {
    Element::from_sorted(v.coords().iter().filter(|(i, _)| a.parity[*i] == parity).cloned().collect())
}

/// Result of [`quotient`]: the quotient algebra and, for each of its basis
/// vectors, the index of the original basis vector it represents.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: SuperAlgebra,
    pub kept: Vec<usize>,
}

/// `A / I` on the complement spanned by the non-pivot basis vectors of `I`.
pub fn quotient(a: &SuperAlgebra, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
    check_ambient(a, ideal)?;
    for v in ideal.basis() {
        for i in 0..a.dim() {
            let e = Element::basis(i);
            if !ideal.contains(&a.bracket_unchecked(&e, &v)) || !ideal.contains(&a.bracket_unchecked(&v, &e)) {
                return Err(AlgebraError::NotAnIdeal { basis: i });
            }
        }
        for p in [Parity::Even, Parity::Odd] {
            if !ideal.contains(&parity_part(a, &v, p)) {
                return Err(AlgebraError::NotGraded);
            }
        }
    }
    let pivots = ideal.pivots();
    let kept: Vec<usize> = (0..a.dim()).filter(|i| !pivots.contains(i)).collect();
    let new_index: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let mut entries = Vec::new();
    for (x, &i) in kept.iter().enumerate() {
        for &j in &kept[x..] {
            let r = ideal.reduce(&a.bracket_basis(i, j));
            let mapped = Element::new(r.coords().iter().map(|(k, c)| (new_index[k], c.clone())));
            entries.push(((new_index[&i], new_index[&j]), mapped));
        }
    }
    let parity = kept.iter().map(|&i| a.parity[i]).collect();
    let algebra = SuperAlgebra::new(format!("{}/I", a.name), parity, entries)?;
    Ok(Quotient { algebra, kept })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;

    /// sl₂ with basis (h, e, f).
    fn sl2() -> SuperAlgebra {
        let e = |i: usize, c: i64| (i, Rational::from(c));
        SuperAlgebra::new(
            "sl2",
            vec![Parity::Even; 3],
            [
                ((0, 1), Element::new([e(1, 2)])),
                ((0, 2), Element::new([e(2, -2)])),
                ((1, 2), Element::new([e(0, 1)])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn derived_order_uses_anticommutativity() {
        let a = sl2();
        assert_eq!(a.bracket_basis(2, 1), Element::new([(0, q(-1, 1))]));
        assert_eq!(a.bracket_basis(1, 1), Element::zero());
        let x = Element::new([(1, q(1, 1)), (2, q(3, 1))]);
        assert!(a.bracket(&x, &Element::zero()).unwrap().is_zero());
        assert!(a.bracket(&Element::basis(3), &x).is_err());
    }

    #[test]
    fn rejects_malformed_tables() {
        let odd = vec![Parity::Even, Parity::Odd];
        assert_eq!(
            SuperAlgebra::new("x", odd.clone(), [((1, 0), Element::basis(0))]).unwrap_err(),
            AlgebraError::UnorderedPair { i: 1, j: 0 }
        );
        assert_eq!(
            SuperAlgebra::new("x", odd.clone(), [((0, 1), Element::basis(0))]).unwrap_err(),
            AlgebraError::Grading { i: 0, j: 1, k: 0 }
        );
        assert!(SuperAlgebra::new("x", odd, [((0, 0), Element::basis(5))]).is_err());
    }

    #[test]
    fn sl2_identities_and_corruption() {
        let a = sl2();
        assert!(check_superidentities(&a).is_ok());
        let bad = a.with_product(1, 2, Element::new([(0, q(1, 1)), (1, q(1, 1))])).unwrap();
        let report = check_superidentities(&bad);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Jacobi { i: 0, j: 1, k: 2, .. })));
    }

    #[test]
    fn even_self_bracket_is_flagged() {
        let a = SuperAlgebra::new("x", vec![Parity::Even, Parity::Even], [((0, 0), Element::basis(1))]).unwrap();
        assert!(check_superidentities(&a)
            .violations
            .contains(&Violation::Anticommutativity { i: 0 }));
    }

    #[test]
    fn closure_and_simplicity() {
        let a = sl2();
        assert_eq!(ideal_closure(&a, &Subspace::zero(3)).dim(), 0);
        assert_eq!(ideal_closure(&a, &Subspace::span(3, [Element::basis(1)])).dim(), 3);
        assert!(is_simple(&a).unwrap());
        let abelian = SuperAlgebra::new("ab", vec![Parity::Even], []).unwrap();
        assert_eq!(is_simple(&abelian).unwrap_err(), AlgebraError::TooSmall(1));
        assert!(derived_odd(&a).is_zero());
        assert_eq!(component(&a, Parity::Even).dim(), 3);
    }

    #[test]
    fn quotient_by_zero_and_non_ideal() {
        let a = sl2();
        let same = quotient(&a, &Subspace::zero(3)).unwrap();
        assert_eq!(same.kept, vec![0, 1, 2]);
        assert_eq!(same.algebra.to_json(), a.clone().with_name("sl2/I").to_json());
        let err = quotient(&a, &Subspace::span(3, [Element::basis(1)])).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAnIdeal { .. }));
    }

    #[test]
    fn json_round_trip_and_format() {
        let a = sl2();
        let text = a.to_json();
        assert_eq!(
            text,
            r#"{"name":"sl2","dim":3,"parity":[0,0,0],"brackets":[[0,1,[[1,"2/1"]]],[0,2,[[2,"-2/1"]]],[1,2,[[0,"1/1"]]]]}"#
        );
        let back = SuperAlgebra::from_json(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_json(), text);
        assert!(SuperAlgebra::from_json(r#"{"name":"x","dim":2,"parity":[0],"brackets":[]}"#).is_err());
        assert!(SuperAlgebra::from_json("{").is_err());
    }
}
