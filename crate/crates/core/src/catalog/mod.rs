//! Constructors for the classical Lie superalgebra families from their
//! matrix realizations, plus small fixtures used as controls.
//!
//! Matrix families are built by choosing a basis of the realization,
//! bracketing every pair of basis matrices, and reading off coordinates.
//! A product that falls outside the span is reported as an error, so a
//! wrong realization cannot silently produce an algebra.

mod d21;
mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactnum::{q, Rational};
use crate::linalg;
use crate::superalgebra::{self, AlgebraError, Element, Parity, SuperAlgebra, Subspace};

pub use d21::d21_with_coefficients;
pub use matrix::{express_in_basis, matrix_superbracket, MatrixBasis, MatrixElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid family: {0}")]
    InvalidSpec(String),
    #[error("cannot parse family spec {0:?}; expected e.g. A:1,0  Aqq:1  B:1,1  C:2  D:2,1  P:2  Q:2  D21:2/3")]
    Parse(String),
    #[error("bracket left the subalgebra")]
    LeftSubalgebra,
    #[error("matrix sizes do not match")]
    SizeMismatch,
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    Aqq,
    B,
    C,
    D,
    P,
    Q,
    D21,
}

/// A member of one of the classical families.
///
/// `m` and `n` are the family's rank parameters (unused ones are zero) and
/// `alpha` is only meaningful for `D21`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub alpha: Rational,
}

impl FamilySpec {
    pub fn a(m: usize, n: usize) -> Self {
        Self::with(Family::A, m, n)
    }
    pub fn aqq(n: usize) -> Self {
        Self::with(Family::Aqq, 0, n)
    }
    pub fn b(m: usize, n: usize) -> Self {
        Self::with(Family::B, m, n)
    }
    pub fn c(n: usize) -> Self {
        Self::with(Family::C, 0, n)
    }
    pub fn d(m: usize, n: usize) -> Self {
        Self::with(Family::D, m, n)
    }
    pub fn p(n: usize) -> Self {
        Self::with(Family::P, 0, n)
    }
    pub fn q(n: usize) -> Self {
        Self::with(Family::Q, 0, n)
    }
    pub fn d21(alpha: Rational) -> Self {
        FamilySpec { family: Family::D21, m: 0, n: 0, alpha }
    }

    fn with(family: Family, m: usize, n: usize) -> Self {
        FamilySpec { family, m, n, alpha: Rational::zero() }
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let bad = |msg: String| Err(CatalogError::InvalidSpec(msg));
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::A if m == 0 && n == 0 => {
                bad("A(0,0) = sl(1,1) is three-dimensional and nilpotent, not simple".into())
            }
            Family::A if m == n => bad(format!("A({m},{m}) needs the scalar quotient; use Aqq:{m}")),
            Family::Aqq if n == 0 => {
                bad("Aqq needs n > 0: sl(1,1) is three-dimensional and nilpotent".into())
            }
            Family::B if n == 0 => bad(format!("B({m},0) is an ordinary Lie algebra; need n >= 1")),
            Family::C if n < 2 => bad(format!("C({n}) needs n >= 2")),
            Family::D if m < 2 || n == 0 => bad(format!("D({m},{n}) needs m >= 2 and n >= 1")),
            Family::P if n < 2 => bad(format!("P({n}) needs n >= 2")),
            Family::Q if n < 2 => bad(format!("Q({n}) needs n >= 2")),
            Family::D21 if self.alpha.is_zero() || self.alpha == q(-1, 1) => {
                bad(format!("D(2,1;{:?}) needs alpha outside {{0, -1}}", self.alpha))
            }
            _ => Ok(()),
        }
    }

    /// Basic classical in Kac's sense: everything except P, Q and A(1,1).
    pub fn is_basic(&self) -> bool {
        match self.family {
            Family::P | Family::Q => false,
            Family::Aqq => self.n != 1,
            _ => true,
        }
    }

    /// Conventional name such as `A(1,0)` or `D(2,1;2/3)`.
    pub fn display_name(&self) -> String {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::A => format!("A({m},{n})"),
            Family::Aqq => format!("A({n},{n})"),
            Family::B => format!("B({m},{n})"),
            Family::C => format!("C({n})"),
            Family::D => format!("D({m},{n})"),
            Family::P => format!("P({n})"),
            Family::Q => format!("Q({n})"),
            Family::D21 => format!("D(2,1;{:?})", self.alpha),
        }
    }
}

impl fmt::Display for FamilySpec {
    /// The CLI spec string, e.g. `A:1,0` or `D21:2/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::A => write!(f, "A:{m},{n}"),
            Family::Aqq => write!(f, "Aqq:{n}"),
            Family::B => write!(f, "B:{m},{n}"),
            Family::C => write!(f, "C:{n}"),
            Family::D => write!(f, "D:{m},{n}"),
            Family::P => write!(f, "P:{n}"),
            Family::Q => write!(f, "Q:{n}"),
            Family::D21 => write!(f, "D21:{:?}", self.alpha),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CatalogError::Parse(s.to_string());
        let (head, args) = s.trim().split_once(':').ok_or_else(err)?;
        let nums = || -> Result<Vec<usize>, CatalogError> {
            args.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| err())).collect()
        };
        let one = || -> Result<usize, CatalogError> {
            match nums()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(err()),
            }
        };
        let two = || -> Result<(usize, usize), CatalogError> {
            match nums()?.as_slice() {
                [m, n] => Ok((*m, *n)),
                _ => Err(err()),
            }
        };
        Ok(match head.trim() {
            "A" => two().map(|(m, n)| FamilySpec::a(m, n))?,
            "Aqq" => FamilySpec::aqq(one()?),
            "B" => two().map(|(m, n)| FamilySpec::b(m, n))?,
            "C" => FamilySpec::c(one()?),
            "D" => two().map(|(m, n)| FamilySpec::d(m, n))?,
            "P" => FamilySpec::p(one()?),
            "Q" => FamilySpec::q(one()?),
            "D21" => FamilySpec::d21(args.trim().parse::<Rational>().map_err(|_| err())?),
            _ => return Err(err()),
        })
    }
}

/// A constructed algebra with its basis labels and Cartan basis indices.
#[derive(Clone, Debug)]
pub struct Construction {
    pub algebra: SuperAlgebra,
    /// Label of each basis vector, by index.
    pub labels: Vec<String>,
    /// Indices of the basis vectors realized by diagonal matrices.
    pub cartan: Vec<usize>,
}

impl Construction {
    pub fn label_map(&self) -> BTreeMap<String, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sidecar document `{ "labels": { label: index, ... } }`.
    pub fn labels_json(&self) -> String {
        serde_json::json!({ "labels": self.label_map() }).to_string()
    }
}

/// Builds the algebra described by `spec`.
pub fn construct(spec: &FamilySpec) -> Result<Construction, CatalogError> {
    spec.validate()?;
    let built = match spec.family {
        Family::A => special_linear(spec.m + 1, spec.n + 1)?,
        Family::Aqq => projective_special_linear(spec.n + 1)?,
        Family::B => {
            let names = coordinate_names("e", spec.m, "d", spec.n);
            orthosymplectic(2 * spec.m + 1, spec.n, names)?
        }
        Family::C => {
            let mut names = vec!["e".to_string()];
            names.extend((1..spec.n).map(|i| format!("d{i}")));
            orthosymplectic(2, spec.n - 1, names)?
        }
        Family::D => {
            let names = coordinate_names("e", spec.m, "d", spec.n);
            orthosymplectic(2 * spec.m, spec.n, names)?
        }
        Family::P => periplectic(spec.n)?,
        Family::Q => queer(spec.n)?,
        Family::D21 => d21::construct(&spec.alpha)?,
    };
    Ok(Construction { algebra: built.algebra.with_name(spec.display_name()), ..built })
}

fn coordinate_names(a: &str, m: usize, b: &str, n: usize) -> Vec<String> {
    (1..=m).map(|i| format!("{a}{i}")).chain((1..=n).map(|i| format!("{b}{i}"))).collect()
}

/// Formats an integer weight vector as e.g. `e1-d2` or `2d1`.
fn weight_label(names: &[String], w: &[i64]) -> String {
    let mut s = String::new();
    for (name, &c) in names.iter().zip(w) {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        s.push_str(&format!("{sign}{mag}{name}"));
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

struct Realization {
    size: usize,
    /// `true` for the indices of the odd block.
    odd_index: Vec<bool>,
    basis: Vec<(String, MatrixElement)>,
}

impl Realization {
    fn parity_of(&self, m: &MatrixElement) -> Parity {
        let (&(r, c), _) = m.entries().next().expect("basis matrices are nonzero");
        if self.odd_index[r] == self.odd_index[c] {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Structure constants of the span of `real.basis` under the matrix superbracket.
fn realize(name: &str, real: Realization) -> Result<Construction, CatalogError> {
    let parity: Vec<Parity> = real.basis.iter().map(|(_, m)| real.parity_of(m)).collect();
    let matrices: Vec<MatrixElement> = real.basis.iter().map(|(_, m)| m.clone()).collect();
    debug_assert!(matrices.iter().all(|m| m.rows() == real.size));
    let solver = MatrixBasis::new(matrices.clone())?;
    let mut entries = Vec::new();
    for i in 0..matrices.len() {
        for j in i..matrices.len() {
            let prod = matrix_superbracket(&matrices[i], &matrices[j], parity[i], parity[j])?;
            entries.push(((i, j), solver.express(&prod)?));
        }
    }
    let algebra = SuperAlgebra::new(name, parity.clone(), entries)?;
    let cartan = (0..matrices.len())
        .filter(|&i| parity[i] == Parity::Even && matrices[i].is_diagonal())
        .collect();
    let labels = real.basis.into_iter().map(|(l, _)| l).collect();
    Ok(Construction { algebra, labels, cartan })
}

fn sl_realization(p: usize, qn: usize) -> Realization {
    let size = p + qn;
    let names = coordinate_names("e", p, "d", qn);
    let weight = |a: usize| -> Vec<i64> { (0..size).map(|k| i64::from(k == a)).collect() };
    let mut basis = Vec::new();
    for i in 0..size - 1 {
        // e_ii - e_{i+1,i+1} within a block, e_ii + e_{i+1,i+1} across the boundary.
        let c = if i + 1 == p { q(1, 1) } else { q(-1, 1) };
        let h = MatrixElement::square(size, [(i, i, q(1, 1)), (i + 1, i + 1, c)]);
        basis.push((format!("h_{}", i + 1), h));
    }
    for a in 0..size {
        for b in 0..size {
            if a != b {
                let w: Vec<i64> = weight(a).iter().zip(weight(b)).map(|(x, y)| x - y).collect();
                basis.push((format!("g_{{{}}}", weight_label(&names, &w)), MatrixElement::unit(size, a, b)));
            }
        }
    }
    Realization { size, odd_index: (0..size).map(|k| k >= p).collect(), basis }
}

/// `sl(p,q)`: supertraceless `(p+q)×(p+q)` supermatrices, with no quotient
/// taken when `p = q`.
pub fn special_linear(p: usize, qn: usize) -> Result<Construction, CatalogError> {
    if p == 0 || qn == 0 || p + qn < 2 {
        return Err(CatalogError::InvalidSpec(format!("sl({p},{qn}) needs p, q >= 1")));
    }
    realize(&format!("sl({p},{qn})"), sl_realization(p, qn))
}

/// The span of the identity matrix inside a realization whose basis spans it.
fn scalar_ideal(c: &Construction, real_basis: &[MatrixElement]) -> Result<Subspace, CatalogError> {
    let size = real_basis[0].rows();
    let identity = MatrixElement::square(size, (0..size).map(|i| (i, i, q(1, 1))));
    let coords = MatrixBasis::new(real_basis.to_vec())?.express(&identity)?;
    Ok(Subspace::span(c.algebra.dim(), [coords]))
}

fn quotient_construction(full: Construction, ideal: &Subspace) -> Result<Construction, CatalogError> {
    let quot = superalgebra::quotient(&full.algebra, ideal)?;
    let new_of: BTreeMap<usize, usize> = quot.kept.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    Ok(Construction {
        labels: quot.kept.iter().map(|&o| full.labels[o].clone()).collect(),
        cartan: full.cartan.iter().filter_map(|o| new_of.get(o).copied()).collect(),
        algebra: quot.algebra,
    })
}

/// `A(n-1,n-1) = sl(n,n) / <E_{2n}>`.
fn projective_special_linear(size: usize) -> Result<Construction, CatalogError> {
    let real = sl_realization(size, size);
    let matrices: Vec<MatrixElement> = real.basis.iter().map(|(_, m)| m.clone()).collect();
    let full = realize(&format!("sl({size},{size})"), real)?;
    let ideal = scalar_ideal(&full, &matrices)?;
    quotient_construction(full, &ideal)
}

/// `osp(orth | 2·half_sp)` for the split even form on the orthogonal block
/// and `[[0, I], [-I, 0]]` on the symplectic block. Weight coordinates are
/// `names` (orthogonal ones first).
fn orthosymplectic(orth: usize, half_sp: usize, names: Vec<String>) -> Result<Construction, CatalogError> {
    let m = orth / 2;
    let k = half_sp;
    let size = orth + 2 * k;
    let odd_index: Vec<bool> = (0..size).map(|a| a >= orth).collect();
    let mut weight: Vec<Vec<i64>> = vec![vec![0; m + k]; size];
    let mut partner: Vec<(usize, i64)> = vec![(0, 0); size];
    let shift = orth % 2;
    if shift == 1 {
        partner[0] = (0, 1);
    }
    for i in 0..m {
        let (a, b) = (shift + i, shift + m + i);
        weight[a][i] = 1;
        weight[b][i] = -1;
        partner[a] = (b, 1);
        partner[b] = (a, 1);
    }
    for i in 0..k {
        let (a, b) = (orth + i, orth + k + i);
        weight[a][m + i] = 1;
        weight[b][m + i] = -1;
        // Form value J(a, b) = 1, J(b, a) = -1.
        partner[a] = (b, 1);
        partner[b] = (a, -1);
    }
    // J(x, y) is nonzero only for y = partner(x).
    let form = |x: usize, y: usize| -> i64 {
        let (p, v) = partner[x];
        if p == y {
            v
        } else {
            0
        }
    };

    let mut basis: Vec<(String, MatrixElement)> = Vec::new();
    for px in [Parity::Even, Parity::Odd] {
        let vars: Vec<(usize, usize)> = (0..size)
            .flat_map(|r| (0..size).map(move |c| (r, c)))
            .filter(|&(r, c)| (odd_index[r] != odd_index[c]) == px.is_odd())
            .collect();
        let col_of: BTreeMap<(usize, usize), usize> = vars.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();
        // B(X e_a, e_b) + (-1)^{p(X) p(a)} B(e_a, X e_b) = 0 for all a, b.
        let mut rows = Vec::new();
        for a in 0..size {
            let pa = if odd_index[a] { Parity::Odd } else { Parity::Even };
            let s = px.sign(pa);
            for b in 0..size {
                let mut row = Vec::new();
                for c in 0..size {
                    let j_cb = form(c, b);
                    if j_cb != 0 {
                        if let Some(&col) = col_of.get(&(c, a)) {
                            row.push((col, Rational::from(j_cb)));
                        }
                    }
                    let j_ac = form(a, c);
                    if j_ac != 0 {
                        if let Some(&col) = col_of.get(&(c, b)) {
                            row.push((col, Rational::from(s * j_ac)));
                        }
                    }
                }
                rows.push(linalg::collect_sparse(row));
            }
        }
        let kernel = linalg::nullspace(&rows, vars.len()).basis;
        let mats: Vec<MatrixElement> = kernel
            .iter()
            .map(|v| MatrixElement::square(size, v.iter().map(|(c, x)| (vars[*c].0, vars[*c].1, x.clone()))))
            .collect();
        let (diag, rest): (Vec<_>, Vec<_>) = mats.into_iter().partition(|mat| mat.is_diagonal());
        for (i, h) in diag.into_iter().enumerate() {
            basis.push((format!("h_{}", i + 1), h));
        }
        for mat in rest {
            let (&(r, c), _) = mat.entries().next().unwrap();
            let w: Vec<i64> = weight[r].iter().zip(&weight[c]).map(|(x, y)| x - y).collect();
            basis.push((format!("g_{{{}}}", weight_label(&names, &w)), mat));
        }
    }
    realize(&format!("osp({orth},{})", 2 * k), Realization { size, odd_index, basis })
}

/// `P(n)` inside `sl(n+1, n+1)` on the explicit basis
/// `a_{i,j} = e_{i,j} - e_{n+1+j,n+1+i}`, `b_{i,j} = e_{i,n+1+j} + e_{j,n+1+i}`,
/// `c_{i,j} = e_{n+1+i,j} - e_{n+1+j,i}`, with Cartan part
/// `a^{i,i+1} = e_{i,i} - e_{i+1,i+1} + e_{n+2+i,n+2+i} - e_{n+1+i,n+1+i}`.
fn periplectic(n: usize) -> Result<Construction, CatalogError> {
    let k = n + 1;
    let size = 2 * k;
    let one = || q(1, 1);
    let neg = || q(-1, 1);
    let mut basis = Vec::new();
    for i in 0..n {
        let h = MatrixElement::square(
            size,
            [(i, i, one()), (i + 1, i + 1, neg()), (k + i + 1, k + i + 1, one()), (k + i, k + i, neg())],
        );
        basis.push((format!("a^{{{},{}}}", i + 1, i + 2), h));
    }
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let a = MatrixElement::square(size, [(i, j, one()), (k + j, k + i, neg())]);
                basis.push((format!("a_{{{},{}}}", i + 1, j + 1), a));
            }
        }
    }
    for i in 0..k {
        for j in i..k {
            let b = MatrixElement::square(size, [(i, k + j, one()), (j, k + i, one())]);
            basis.push((format!("b_{{{},{}}}", i + 1, j + 1), b));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let c = MatrixElement::square(size, [(k + i, j, one()), (k + j, i, neg())]);
            basis.push((format!("c_{{{},{}}}", i + 1, j + 1), c));
        }
    }
    let real = Realization { size, odd_index: (0..size).map(|a| a >= k).collect(), basis };
    realize(&format!("P({n})"), real)
}

/// `Q(n)`: `{[[A, B], [B, A]] : tr B = 0}` modulo scalars, on the cosets
/// `a_{i,j} = e_{i,j} + e_{n+1+i,n+1+j}`, `b_{i,j} = e_{i,n+1+j} + e_{n+1+i,j}`
/// (`i != j`) and the traceless diagonal odd elements `c_{i,i+1}`.
fn queer(n: usize) -> Result<Construction, CatalogError> {
    let k = n + 1;
    let size = 2 * k;
    let one = || q(1, 1);
    let mut basis = Vec::new();
    for i in 0..k {
        basis.push((format!("a_{{{},{}}}", i + 1, i + 1), MatrixElement::square(size, [(i, i, one()), (k + i, k + i, one())])));
    }
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let a = MatrixElement::square(size, [(i, j, one()), (k + i, k + j, one())]);
                basis.push((format!("a_{{{},{}}}", i + 1, j + 1), a));
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let b = MatrixElement::square(size, [(i, k + j, one()), (k + i, j, one())]);
                basis.push((format!("b_{{{},{}}}", i + 1, j + 1), b));
            }
        }
    }
    for i in 0..n {
        let c = MatrixElement::square(
            size,
            [(i, k + i, one()), (k + i, i, one()), (i + 1, k + i + 1, q(-1, 1)), (k + i + 1, i + 1, q(-1, 1))],
        );
        basis.push((format!("c_{{{},{}}}", i + 1, i + 2), c));
    }
    let matrices: Vec<MatrixElement> = basis.iter().map(|(_, m)| m.clone()).collect();
    let real = Realization { size, odd_index: (0..size).map(|a| a >= k).collect(), basis };
    let full = realize(&format!("sq({k})"), real)?;
    let ideal = scalar_ideal(&full, &matrices)?;
    quotient_construction(full, &ideal)
}

/// The plain Lie algebra sl₂ on the basis `(h, e, f)`.
pub fn sl2() -> Construction {
    let c = |i: usize, v: i64| Element::new([(i, Rational::from(v))]);
    let algebra = SuperAlgebra::new(
        "sl2",
        vec![Parity::Even; 3],
        [((0, 1), c(1, 2)), ((0, 2), c(2, -2)), ((1, 2), c(0, 1))],
    )
    .expect("valid table");
    Construction { algebra, labels: vec!["h".into(), "e".into(), "f".into()], cartan: vec![0] }
}

/// sl₂ with `[e, f] = h + e`, which breaks the Jacobi identity.
pub fn corrupted_sl2() -> Construction {
    let base = sl2();
    let bad = Element::new([(0, q(1, 1)), (1, q(1, 1))]);
    let algebra = base.algebra.with_product(1, 2, bad).expect("valid table").with_name("sl2-corrupted");
    Construction { algebra, ..base }
}

/// The one-dimensional abelian Lie algebra.
pub fn abelian_line() -> Construction {
    let algebra = SuperAlgebra::new("abelian1", vec![Parity::Even], []).expect("valid table");
    Construction { algebra, labels: vec!["x".into()], cartan: vec![0] }
}
