//! δ-derivations: linear maps `φ` with `φ([x,y]) = δ([φx,y] + [x,φy])`.
//!
//! Under the graded convention (the default) a homogeneous `φ` picks up the
//! sign `(-1)^{|φ||x|}` on the second term, so odd maps are δ-superderivations
//! and the `δ = 1` space contains every `ad e_i`. The plain convention reads
//! the identity literally for every linear map.
//!
//! The unknown `φ_{kl}` (coefficient of `e_k` in `φ(e_l)`) is column
//! `k·n + l` of the assembled system; each equation involves columns of a
//! single parity `p(k) + p(l)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::exactnum::{IntPolynomial, RatPoly, Rational, ResidueRing};
use crate::linalg::{collect_sparse, components, nullspace, Echelon, SparseVec};
use crate::superalgebra::{Element, Parity, SuperAlgebra};

/// An endomorphism in dense row-major form.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    n: usize,
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn zero(n: usize) -> Self {
        LinearMap { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n {
            m.entries[k * n + k] = Rational::one();
        }
        m
    }

    /// `ad e_i : y ↦ [e_i, y]`.
    pub fn ad(a: &SuperAlgebra, i: usize) -> Self {
        let n = a.dim();
        let mut m = Self::zero(n);
        for l in 0..n {
            for (k, c) in a.bracket_basis(i, l).coords() {
                m.entries[k * n + l] = c.clone();
            }
        }
        m
    }

    pub fn from_flat(n: usize, v: &[(usize, Rational)]) -> Self {
        let mut m = Self::zero(n);
        for (c, x) in v {
            m.entries[*c] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(LinearMap { n, entries: rows.concat() })
    }

    pub fn to_flat(&self) -> SparseVec {
        collect_sparse(self.entries.iter().cloned().enumerate())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Coefficient of `e_k` in `φ(e_l)`.
    pub fn get(&self, k: usize, l: usize) -> &Rational {
        &self.entries[k * self.n + l]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn column(&self, l: usize) -> Element {
        Element::new((0..self.n).map(|k| (k, self.get(k, l).clone())))
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (l, c) in x.coords() {
            out = out.add_scaled(c, &self.column(*l));
        }
        out
    }

    /// `Some(c)` when the map equals `c·id`.
    pub fn scalar_multiple(&self) -> Option<Rational> {
        let n = self.n;
        let c = if n == 0 { Rational::zero() } else { self.get(0, 0).clone() };
        let ok = (0..n).all(|k| (0..n).all(|l| *self.get(k, l) == if k == l { c.clone() } else { Rational::zero() }));
        ok.then_some(c)
    }

    /// The parity-preserving and parity-reversing parts.
    pub fn split_parity(&self, a: &SuperAlgebra) -> (LinearMap, LinearMap) {
        let (mut even, mut odd) = (Self::zero(self.n), Self::zero(self.n));
        for k in 0..self.n {
            for l in 0..self.n {
                let target = if a.parity(k) == a.parity(l) { &mut even } else { &mut odd };
                target.entries[k * self.n + l] = self.get(k, l).clone();
            }
        }
        (even, odd)
    }

    /// `Some(Even)` or `Some(Odd)` for nonzero homogeneous maps.
    pub fn parity(&self, a: &SuperAlgebra) -> Option<Parity> {
        let (even, odd) = self.split_parity(a);
        match (even.is_zero(), odd.is_zero()) {
            (false, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Whether `φ` maps each homogeneous component of `a` into itself.
    pub fn preserves_grading(&self, a: &SuperAlgebra) -> bool {
        let n = self.n;
        (0..n).all(|k| (0..n).all(|l| a.parity(k) == a.parity(l) || self.get(k, l).is_zero()))
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Rational]> = self.entries.chunks(self.n.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl Serialize for LinearMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for x in &self.entries {
            seq.serialize_element(x)?;
        }
        seq.end()
    }
}

/// The entry `constant + slope·δ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaLinear {
    pub constant: Rational,
    pub slope: Rational,
}

impl DeltaLinear {
    pub fn at(&self, delta: &Rational) -> Rational {
        &self.constant + &(&self.slope * delta)
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.slope.is_zero()
    }
}

pub type SymbolicRow = Vec<(usize, DeltaLinear)>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    #[default]
    Graded,
    Plain,
}

impl Convention {
    /// Equations from pairs `i ≤ j` suffice: the `(j, i)` equation is a
    /// multiple of the `(i, j)` one. This fails for odd maps read plainly.
    fn half_pairs(self) -> bool {
        self == Convention::Graded
    }
}

/// The `n` rows contributed by the pair `(i, j)`, indexed by output
/// coordinate; rows may be empty.
fn pair_rows(a: &SuperAlgebra, table: &[Vec<Element>], i: usize, j: usize, conv: Convention) -> Vec<SymbolicRow> {
    let n = table.len();
    let flip = |m: usize| conv == Convention::Graded && a.parity(i).is_odd() && a.parity(m) != a.parity(j);
    let mut acc: Vec<BTreeMap<usize, DeltaLinear>> = vec![BTreeMap::new(); n];
    for (m, c) in table[i][j].coords() {
        for (k, row) in acc.iter_mut().enumerate() {
            row.entry(k * n + m).or_default().constant += c;
        }
    }
    for m in 0..n {
        for (k, c) in table[m][j].coords() {
            acc[*k].entry(m * n + i).or_default().slope -= c;
        }
        for (k, c) in table[i][m].coords() {
            let slope = &mut acc[*k].entry(m * n + j).or_default().slope;
            if flip(m) {
                *slope += c;
            } else {
                *slope -= c;
            }
        }
    }
    acc.into_iter().map(|row| row.into_iter().filter(|(_, e)| !e.is_zero()).collect()).collect()
}

fn bracket_table(a: &SuperAlgebra) -> Vec<Vec<Element>> {
    let n = a.dim();
    (0..n).map(|i| (0..n).map(|j| a.bracket_basis(i, j)).collect()).collect()
}

/// The system over ℚ[δ], with entries of degree at most one.
pub fn assemble_symbolic(a: &SuperAlgebra, conv: Convention) -> Vec<SymbolicRow> {
    let table = bracket_table(a);
    let n = a.dim();
    let half = conv.half_pairs();
    (0..n)
        .flat_map(|i| (if half { i } else { 0 }..n).map(move |j| (i, j)))
        .flat_map(|(i, j)| pair_rows(a, &table, i, j, conv))
        .filter(|r| !r.is_empty())
        .collect()
}

/// The system at a fixed rational `δ`.
pub fn assemble_system(a: &SuperAlgebra, delta: &Rational, conv: Convention) -> Vec<SparseVec> {
    specialize(&assemble_symbolic(a, conv), delta)
}

fn specialize(rows: &[SymbolicRow], delta: &Rational) -> Vec<SparseVec> {
    rows.iter()
        .map(|r| r.iter().map(|(c, e)| (*c, e.at(delta))).filter(|(_, x)| !x.is_zero()).collect::<SparseVec>())
        .filter(|r| !r.is_empty())
        .collect()
}

/// Whether `φ` satisfies the δ-derivation identity on every ordered pair
/// of basis vectors. Under the graded convention the even and odd parts of
/// `φ` are checked separately.
pub fn is_delta_derivation(a: &SuperAlgebra, phi: &LinearMap, delta: &Rational, conv: Convention) -> bool {
    let n = a.dim();
    if phi.dim() != n {
        return false;
    }
    match conv {
        Convention::Plain => satisfies(a, phi, delta, false),
        Convention::Graded => {
            let (even, odd) = phi.split_parity(a);
            satisfies(a, &even, delta, false) && satisfies(a, &odd, delta, true)
        }
    }
}

/// `signed` applies `(-1)^{|x|}` to the `[x, φy]` term.
fn satisfies(a: &SuperAlgebra, phi: &LinearMap, delta: &Rational, signed: bool) -> bool {
    let n = a.dim();
    let images: Vec<Element> = (0..n).map(|l| phi.column(l)).collect();
    (0..n).all(|i| {
        let sign = if signed && a.parity(i).is_odd() { -Rational::one() } else { Rational::one() };
        (0..n).all(|j| {
            let lhs = phi.apply(&a.bracket_basis(i, j));
            let rhs = a
                .bracket_unchecked(&images[i], &Element::basis(j))
                .add_scaled(&sign, &a.bracket_unchecked(&Element::basis(i), &images[j]))
                .scale(delta);
            lhs == rhs
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivationSpace {
    pub delta: Rational,
    pub convention: Convention,
    pub algebra_name: String,
    /// Reduced echelon basis over the row-major flattening.
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, phi: &LinearMap) -> bool {
        let flat: Vec<SparseVec> = self.basis.iter().map(LinearMap::to_flat).collect();
        Echelon::from_vectors(flat.iter()).contains(&phi.to_flat())
    }
}

/// All graded δ-derivations of `a` for a fixed `δ`.
pub fn derivation_space(a: &SuperAlgebra, delta: &Rational) -> DerivationSpace {
    derivation_space_with(a, delta, Convention::Graded)
}

/// Panics if a solver output fails the independent identity check, which
/// would indicate an internal error.
pub fn derivation_space_with(a: &SuperAlgebra, delta: &Rational, conv: Convention) -> DerivationSpace {
    let n = a.dim();
    let ns = nullspace(&assemble_system(a, delta, conv), n * n);
    let basis: Vec<LinearMap> = ns.basis.iter().map(|v| LinearMap::from_flat(n, v)).collect();
    for phi in &basis {
        assert!(is_delta_derivation(a, phi, delta, conv), "solver returned a map failing the identity: {phi:?}");
    }
    DerivationSpace { delta: delta.clone(), convention: conv, algebra_name: a.name().to_string(), basis }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalDelta {
    pub delta: Rational,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalReport {
    pub generic_rank: usize,
    pub generic_nullity: usize,
    /// Sorted by δ; each nullity exceeds `generic_nullity`.
    pub critical: Vec<CriticalDelta>,
    /// Squarefree factors without rational roots at whose (irrational)
    /// roots the rank drops below `generic_rank`.
    pub unresolved_factors: Vec<IntPolynomial>,
    pub degenerate: bool,
}

type PolyRow = Vec<(usize, IntPolynomial)>;

fn to_poly_row(row: &SymbolicRow) -> PolyRow {
    let coeffs: Vec<Rational> = row.iter().flat_map(|(_, e)| [e.constant.clone(), e.slope.clone()]).collect();
    let lcm = coeffs.iter().fold(num_bigint::BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let l = Rational::from_integer(lcm);
    row.iter()
        .map(|(c, e)| {
            let a = &e.constant * &l;
            let b = &e.slope * &l;
            (*c, IntPolynomial::new(vec![a.numer().clone(), b.numer().clone()]))
        })
        .collect()
}

/// `ka·a − kb·b` on sorted rows.
fn combine(a: &PolyRow, ka: &IntPolynomial, b: &PolyRow, kb: &IntPolynomial) -> PolyRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (col, v) = if take_a {
            i += 1;
            (a[i - 1].0, ka.mul(&a[i - 1].1))
        } else if take_b {
            j += 1;
            (b[j - 1].0, kb.mul(&b[j - 1].1).neg())
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, ka.mul(&a[i - 1].1).sub(&kb.mul(&b[j - 1].1)))
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

/// Divides a row by the gcd of its entries, recording nonconstant gcds.
fn strip(row: &mut PolyRow, factors: &mut Vec<IntPolynomial>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, p) in &row[1..] {
        if g.is_constant() {
            break;
        }
        g = g.gcd(p);
    }
    if !g.is_constant() {
        let g = g.primitive();
        for (_, p) in row.iter_mut() {
            *p = p.div_exact(&g).expect("gcd divides every entry");
        }
        factors.push(g);
    }
    let content = row.iter().fold(num_bigint::BigInt::from(0), |acc, (_, p)| num_integer::Integer::gcd(&acc, &p.content()));
    if content > num_bigint::BigInt::from(1) {
        let c = IntPolynomial::constant(content);
        for (_, p) in row.iter_mut() {
            *p = p.div_exact(&c).expect("content divides every entry");
        }
    }
}

/// Fraction-free elimination over ℤ[δ]. Returns the generic rank and every
/// polynomial whose roots may lower the rank under specialization.
fn symbolic_rank(rows: &[SymbolicRow], ncols: usize) -> (usize, Vec<IntPolynomial>) {
    let mut factors = Vec::new();
    let mut poly_rows: Vec<PolyRow> = rows.iter().map(to_poly_row).filter(|r| !r.is_empty()).collect();
    for r in &mut poly_rows {
        strip(r, &mut factors);
    }
    let (blocks, _) = components(&poly_rows, ncols);
    let mut rank = 0;
    for (_, mut active) in blocks {
        while !active.is_empty() {
            let mut counts: HashMap<usize, usize> = HashMap::new();
            for row in &active {
                for (c, _) in row {
                    *counts.entry(*c).or_default() += 1;
                }
            }
            let (ri, ci) = active
                .iter()
                .enumerate()
                .flat_map(|(ri, row)| row.iter().enumerate().map(move |(ci, e)| (ri, ci, e)))
                .min_by_key(|(ri, ci, (c, p))| (p.degree(), counts[c], active[*ri].len(), *c, *ri, *ci))
                .map(|(ri, ci, _)| (ri, ci))
                .expect("active rows are nonempty");
            let prow = active.swap_remove(ri);
            let (pcol, pivot) = prow[ci].clone();
            if !pivot.is_constant() {
                factors.push(pivot.primitive());
            }
            for row in active.iter_mut() {
                if let Ok(k) = row.binary_search_by_key(&pcol, |(c, _)| *c) {
                    let rc = row[k].1.clone();
                    *row = combine(row, &pivot, &prow, &rc);
                    strip(row, &mut factors);
                }
            }
            active.retain(|r| !r.is_empty());
            rank += 1;
        }
    }
    (rank, factors)
}

/// Rank of the system with `δ` a root of the squarefree `f`, or a proper
/// factor of `f` found on hitting a zero divisor.
fn rank_modulo(rows: &[SymbolicRow], ncols: usize, f: &IntPolynomial) -> Result<usize, IntPolynomial> {
    let ring = ResidueRing::new(f);
    let reduced: Vec<Vec<(usize, RatPoly)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|(c, e)| (*c, ring.reduce(&[e.constant.clone(), e.slope.clone()])))
                .filter(|(_, x)| !x.is_empty())
                .collect::<Vec<_>>()
        })
        .filter(|r| !r.is_empty())
        .collect();
    let (blocks, _) = components(&reduced, ncols);
    let mut rank = 0;
    for (_, mut active) in blocks {
        while !active.is_empty() {
            let ri = (0..active.len()).min_by_key(|&i| (active[i].len(), i)).unwrap();
            let prow = active.swap_remove(ri);
            let (pcol, pivot) = &prow[0];
            let inv = ring.inverse(pivot)?;
            let prow: Vec<(usize, RatPoly)> = prow.iter().map(|(c, x)| (*c, ring.mul(x, &inv))).collect();
            for row in active.iter_mut() {
                if let Ok(k) = row.binary_search_by_key(pcol, |(c, _)| *c) {
                    let x = row[k].1.clone();
                    let mut merged: BTreeMap<usize, RatPoly> = row.drain(..).collect();
                    for (c, y) in &prow {
                        let cur = merged.remove(c).unwrap_or_default();
                        let v = ring.sub(&cur, &ring.mul(&x, y));
                        if !v.is_empty() {
                            merged.insert(*c, v);
                        }
                    }
                    *row = merged.into_iter().collect();
                }
            }
            active.retain(|r| !r.is_empty());
            rank += 1;
        }
    }
    Ok(rank)
}

/// Distinct squarefree primitive factors, sorted for reproducibility.
fn squarefree_set(factors: &[IntPolynomial]) -> Vec<IntPolynomial> {
    let set: BTreeSet<Vec<String>> = factors
        .iter()
        .filter(|f| !f.is_constant())
        .map(|f| f.squarefree_part().coeffs().iter().map(|c| c.to_string()).collect())
        .collect();
    set.into_iter()
        .map(|cs| IntPolynomial::new(cs.iter().map(|c| c.parse().expect("decimal")).collect()))
        .collect()
}

/// Generic rank, rational candidates and certified irrational factors of
/// a symbolic system.
fn scan_rows(rows: &[SymbolicRow], ncols: usize) -> (usize, BTreeSet<Rational>, Vec<IntPolynomial>) {
    let (generic_rank, factors) = symbolic_rank(rows, ncols);
    let mut candidates: BTreeSet<Rational> = BTreeSet::new();
    let mut leftovers = Vec::new();
    for f in squarefree_set(&factors) {
        let (roots, rest) = f.strip_rational_roots().expect("factors are nonzero");
        candidates.extend(roots);
        if !rest.is_constant() {
            leftovers.push(rest);
        }
    }
    let mut unresolved = Vec::new();
    while let Some(f) = leftovers.pop() {
        match rank_modulo(rows, ncols, &f) {
            Ok(r) if r < generic_rank => unresolved.push(f),
            Ok(_) => {}
            Err(g) => {
                let h = f.div_exact(&g).expect("factor over ℚ divides over ℤ");
                leftovers.push(g);
                leftovers.push(h.primitive());
            }
        }
    }
    (generic_rank, candidates, squarefree_set(&unresolved))
}

/// Scans all `δ` at once: the generic rank over ℚ(δ), every rational `δ`
/// where the nullity jumps, and the irrational critical values as factors.
pub fn critical_deltas(a: &SuperAlgebra) -> CriticalReport {
    critical_deltas_with(a, Convention::Graded)
}

pub fn critical_deltas_with(a: &SuperAlgebra, conv: Convention) -> CriticalReport {
    let ncols = a.dim() * a.dim();
    let (generic_rank, candidates, unresolved_factors) = scan_rows(&assemble_symbolic(a, conv), ncols);
    let generic_nullity = ncols - generic_rank;
    let critical = candidates
        .into_iter()
        .filter_map(|delta| {
            let nullity = derivation_space_with(a, &delta, conv).nullity();
            (nullity > generic_nullity).then_some(CriticalDelta { delta, nullity })
        })
        .collect();
    CriticalReport { generic_rank, generic_nullity, critical, unresolved_factors, degenerate: generic_rank == 0 }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapAnalysis {
    pub grading_preserving: bool,
    /// `None` for maps mixing parities.
    pub parity: Option<Parity>,
    pub scalar: Option<Rational>,
    /// In the span of the maps `ad e_i`; only computed at `δ = 1`.
    pub inner: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceAnalysis {
    pub nullity: usize,
    pub grading_preserving: bool,
    /// The space is exactly `{c·id}`.
    pub scalar_line: bool,
    /// `dim(S ∩ span{ad e_i})` at `δ = 1`.
    pub inner_dim: Option<usize>,
    pub outer_dim: Option<usize>,
    pub maps: Vec<MapAnalysis>,
}

pub fn analyze_space(a: &SuperAlgebra, s: &DerivationSpace) -> SpaceAnalysis {
    let inner_span = s.delta.is_one().then(|| {
        let ads: Vec<SparseVec> = (0..a.dim()).map(|i| LinearMap::ad(a, i).to_flat()).collect();
        Echelon::from_vectors(ads.iter())
    });
    let maps: Vec<MapAnalysis> = s
        .basis
        .iter()
        .map(|phi| MapAnalysis {
            grading_preserving: phi.preserves_grading(a),
            parity: phi.parity(a),
            scalar: phi.scalar_multiple(),
            inner: inner_span.as_ref().map(|e| e.contains(&phi.to_flat())),
        })
        .collect();
    let (inner_dim, outer_dim) = match &inner_span {
        Some(ads) => {
            let mut sum = ads.clone();
            for phi in &s.basis {
                sum.insert(&phi.to_flat());
            }
            let inner = s.nullity() + ads.rank() - sum.rank();
            (Some(inner), Some(s.nullity() - inner))
        }
        None => (None, None),
    };
    SpaceAnalysis {
        nullity: s.nullity(),
        grading_preserving: maps.iter().all(|m| m.grading_preserving),
        scalar_line: maps.len() == 1 && maps[0].scalar.as_ref().is_some_and(|c| !c.is_zero()),
        inner_dim,
        outer_dim,
        maps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian_line, construct, corrupted_sl2, sl2, FamilySpec};
    use crate::exactnum::q;
    use proptest::prelude::*;

    #[test]
    fn sl2_nullities() {
        let a = sl2().algebra;
        for (d, expected) in [(q(1, 1), 3), (q(-1, 1), 5), (q(1, 2), 1), (q(0, 1), 0), (q(2, 1), 0)] {
            assert_eq!(derivation_space(&a, &d).nullity(), expected, "δ = {d}");
        }
    }

    #[test]
    fn sl2_derivations_are_inner() {
        let a = sl2().algebra;
        let s = derivation_space(&a, &Rational::one());
        for i in 0..3 {
            assert!(s.contains(&LinearMap::ad(&a, i)));
        }
        let an = analyze_space(&a, &s);
        assert_eq!((an.inner_dim, an.outer_dim), (Some(3), Some(0)));
    }

    #[test]
    fn system_shape() {
        let a = sl2().algebra;
        let rows = assemble_symbolic(&a, Convention::Graded);
        assert!(rows.len() <= 3 * 6);
        assert!(rows.iter().all(|r| r.iter().all(|(c, _)| *c < 9)));
    }

    #[test]
    fn zero_bracket_rows_have_no_constant_part() {
        let a = construct(&FamilySpec::b(0, 1)).unwrap().algebra;
        let table = bracket_table(&a);
        let n = a.dim();
        let mut seen = 0;
        for (i, j) in (0..n).flat_map(|i| (i..n).map(move |j| (i, j))) {
            if table[i][j].is_zero() {
                seen += 1;
                for row in pair_rows(&a, &table, i, j, Convention::Graded) {
                    assert!(row.iter().all(|(_, e)| e.constant.is_zero()));
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn identity_is_half_derivation() {
        let c = construct(&FamilySpec::b(1, 1)).unwrap();
        let s = derivation_space(&c.algebra, &q(1, 2));
        assert_eq!(s.nullity(), 1);
        let an = analyze_space(&c.algebra, &s);
        assert!(an.scalar_line && an.grading_preserving);
    }

    #[test]
    fn conventions_differ_only_on_odd_maps() {
        let a = construct(&FamilySpec::b(0, 1)).unwrap().algebra;
        let graded = derivation_space(&a, &Rational::one());
        let plain = derivation_space_with(&a, &Rational::one(), Convention::Plain);
        assert_eq!((graded.nullity(), plain.nullity()), (5, 3));
        for i in 0..a.dim() {
            let ad = LinearMap::ad(&a, i);
            assert!(graded.contains(&ad));
            assert_eq!(plain.contains(&ad), !a.parity(i).is_odd());
        }
        let an = analyze_space(&a, &graded);
        assert_eq!(an.inner_dim, Some(5));
        assert!(!an.grading_preserving);
        assert!(an.maps.iter().all(|m| m.parity.is_some()));
        let sl = sl2().algebra;
        for d in [q(-1, 1), q(1, 2), q(1, 1)] {
            assert_eq!(
                derivation_space(&sl, &d).basis,
                derivation_space_with(&sl, &d, Convention::Plain).basis
            );
        }
    }

    #[test]
    fn sl2_scan() {
        let r = critical_deltas(&sl2().algebra);
        let found: Vec<(Rational, usize)> = r.critical.iter().map(|c| (c.delta.clone(), c.nullity)).collect();
        for want in [(q(-1, 1), 5), (q(1, 2), 1), (q(1, 1), 3)] {
            assert!(found.contains(&want), "{found:?}");
        }
        assert_eq!(r.generic_nullity, 0);
        assert!(r.unresolved_factors.is_empty());
    }

    #[test]
    fn abelian_scan_is_degenerate() {
        let r = critical_deltas(&abelian_line().algebra);
        assert!(r.degenerate);
        assert_eq!((r.generic_rank, r.generic_nullity), (0, 1));
        assert!(r.critical.is_empty());
        assert_eq!(derivation_space(&abelian_line().algebra, &q(3, 7)).nullity(), 1);
    }

    #[test]
    fn corrupted_fixture_still_solves_soundly() {
        let a = corrupted_sl2().algebra;
        for d in [q(-1, 1), q(1, 2), q(1, 1)] {
            derivation_space(&a, &d);
        }
    }

    fn lin(c: i64, s: i64) -> DeltaLinear {
        DeltaLinear { constant: q(c, 1), slope: q(s, 1) }
    }

    #[test]
    fn irrational_critical_values_are_certified() {
        // det [[δ, 2], [1, δ]] = δ² − 2; the third unknown is pinned by 1 − δ.
        let rows = vec![
            vec![(0, lin(0, 1)), (1, lin(2, 0))],
            vec![(0, lin(1, 0)), (1, lin(0, 1))],
            vec![(2, lin(1, -1))],
        ];
        let (rank, candidates, unresolved) = scan_rows(&rows, 3);
        assert_eq!(rank, 3);
        assert_eq!(candidates.into_iter().collect::<Vec<_>>(), vec![q(1, 1)]);
        assert_eq!(unresolved, vec![IntPolynomial::from_i64s(&[-2, 0, 1])]);
    }

    #[test]
    fn spurious_pivot_factors_are_dropped() {
        // Rank 2 for every δ although the first pivot can be δ² + 1.
        let rows = vec![
            vec![(0, lin(0, 1)), (1, lin(1, 0))],
            vec![(0, lin(-1, 0)), (1, lin(0, 1))],
            vec![(0, lin(1, 0))],
        ];
        let (rank, candidates, unresolved) = scan_rows(&rows, 2);
        assert_eq!(rank, 2);
        assert!(candidates.is_empty() || candidates.iter().all(|d| nullspace(&specialize(&rows, d), 2).rank == 2));
        assert!(unresolved.is_empty());
    }

    fn small_delta() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=5).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn returned_maps_satisfy_identity(d in small_delta()) {
            let a = construct(&FamilySpec::b(0, 1)).unwrap().algebra;
            let s = derivation_space(&a, &d);
            for phi in &s.basis {
                prop_assert!(is_delta_derivation(&a, phi, &d, Convention::Graded));
            }
        }

        #[test]
        fn nullity_is_scale_invariant(d in small_delta(), k in small_delta()) {
            prop_assume!(!k.is_zero());
            let a = sl2().algebra;
            prop_assert_eq!(
                derivation_space(&a, &d).nullity(),
                derivation_space(&a.scaled(&k), &d).nullity()
            );
        }

        #[test]
        fn pointwise_matches_generic(n in -40i64..40, d in 1i64..13) {
            let a = construct(&FamilySpec::b(0, 1)).unwrap().algebra;
            let r = critical_deltas(&a);
            let delta = q(n, d);
            let expected = r
                .critical
                .iter()
                .find(|c| c.delta == delta)
                .map_or(r.generic_nullity, |c| c.nullity);
            prop_assert_eq!(derivation_space(&a, &delta).nullity(), expected);
        }
    }
}
