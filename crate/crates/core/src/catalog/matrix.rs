use std::collections::BTreeMap;

use crate::exactnum::Rational;
use crate::linalg::{SparseVec, SpanSolver};
use crate::superalgebra::{Element, Parity};

use super::CatalogError;

/// A sparse rectangular matrix over ℚ with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixElement {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl MatrixElement {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatrixElement { rows, cols, entries: BTreeMap::new() }
    }

    /// Square matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn square(size: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut m = Self::zero(size, size);
        for (r, c, v) in entries {
            m.add_entry(r, c, &v);
        }
        m
    }

    /// The elementary matrix `e_{r,c}`.
    pub fn unit(size: usize, r: usize, c: usize) -> Self {
        Self::square(size, [(r, c, Rational::one())])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(r, c)| r == c)
    }

    fn add_entry(&mut self, r: usize, c: usize, v: &Rational) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        let slot = self.entries.entry((r, c)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn add_scaled(&self, k: &Rational, other: &MatrixElement) -> MatrixElement {
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_entry(r, c, &(k * v));
        }
        out
    }

    pub fn mul(&self, other: &MatrixElement) -> Result<MatrixElement, CatalogError> {
        if self.cols != other.rows {
            return Err(CatalogError::SizeMismatch);
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = MatrixElement::zero(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            for (c, b) in by_row.get(&k).into_iter().flatten() {
                out.add_entry(r, *c, &(a * *b));
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Rational {
        self.entries.iter().filter(|((r, c), _)| r == c).map(|(_, v)| v).sum()
    }

    /// Row-major flattening.
    fn flatten(&self) -> SparseVec {
        self.entries.iter().map(|(&(r, c), v)| (r * self.cols + c, v.clone())).collect()
    }
}

/// `ab - (-1)^{p(a)p(b)} ba`.
pub fn matrix_superbracket(
    x: &MatrixElement,
    y: &MatrixElement,
    px: Parity,
    py: Parity,
) -> Result<MatrixElement, CatalogError> {
    if x.rows != x.cols || y.rows != y.cols || x.rows != y.rows {
        return Err(CatalogError::SizeMismatch);
    }
    let sign = Rational::from(-px.sign(py));
    Ok(x.mul(y)?.add_scaled(&sign, &y.mul(x)?))
}

/// A fixed list of independent matrices with a precomputed solver for
/// coordinates in their span.
#[derive(Clone, Debug)]
pub struct MatrixBasis {
    matrices: Vec<MatrixElement>,
    solver: SpanSolver,
}

impl MatrixBasis {
    pub fn new(matrices: Vec<MatrixElement>) -> Result<Self, CatalogError> {
        let (rows, cols) = matrices.first().map_or((0, 0), |m| (m.rows, m.cols));
        if matrices.iter().any(|m| m.rows != rows || m.cols != cols) {
            return Err(CatalogError::SizeMismatch);
        }
        let flat: Vec<SparseVec> = matrices.iter().map(MatrixElement::flatten).collect();
        let solver = SpanSolver::new(&flat, rows * cols).ok_or(CatalogError::DependentBasis)?;
        Ok(MatrixBasis { matrices, solver })
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[MatrixElement] {
        &self.matrices
    }

    pub fn express(&self, x: &MatrixElement) -> Result<Element, CatalogError> {
        if let Some(first) = self.matrices.first() {
            if x.rows != first.rows || x.cols != first.cols {
                return Err(CatalogError::SizeMismatch);
            }
        }
        let coords = self.solver.solve(&x.flatten()).ok_or(CatalogError::LeftSubalgebra)?;
        Ok(Element::new(coords.into_iter().enumerate()))
    }
}

/// Coordinates of `x` in `basis`.
pub fn express_in_basis(x: &MatrixElement, basis: &[MatrixElement]) -> Result<Element, CatalogError> {
    MatrixBasis::new(basis.to_vec())?.express(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;

    #[test]
    fn commutator_of_units() {
        let x = MatrixElement::unit(2, 0, 1);
        let y = MatrixElement::unit(2, 1, 0);
        let b = matrix_superbracket(&x, &y, Parity::Even, Parity::Even).unwrap();
        assert_eq!(b, MatrixElement::square(2, [(0, 0, q(1, 1)), (1, 1, q(-1, 1))]));
        assert!(matrix_superbracket(&x, &x, Parity::Even, Parity::Even).unwrap().is_zero());
    }

    #[test]
    fn odd_pair_gives_anticommutator() {
        let x = MatrixElement::square(3, [(0, 2, q(1, 1)), (2, 0, q(1, 1))]);
        let b = matrix_superbracket(&x, &x, Parity::Odd, Parity::Odd).unwrap();
        // 2 x^2 = 2 (e00 + e22)
        assert_eq!(b, MatrixElement::square(3, [(0, 0, q(2, 1)), (2, 2, q(2, 1))]));
        assert!(matrix_superbracket(&x, &MatrixElement::unit(2, 0, 0), Parity::Odd, Parity::Even).is_err());
    }

    #[test]
    fn coordinates_in_basis() {
        let basis = vec![
            MatrixElement::unit(2, 0, 1),
            MatrixElement::square(2, [(0, 0, q(1, 1)), (1, 1, q(-1, 1))]),
            MatrixElement::unit(2, 1, 0),
        ];
        assert_eq!(express_in_basis(&basis[1], &basis).unwrap(), Element::basis(1));
        assert!(express_in_basis(&MatrixElement::zero(2, 2), &basis).unwrap().is_zero());
        let sum = basis[0].add_scaled(&q(1, 1), &basis[2]);
        assert_eq!(
            express_in_basis(&sum, &basis).unwrap(),
            Element::new([(0, q(1, 1)), (2, q(1, 1))])
        );
        let err = express_in_basis(&MatrixElement::unit(2, 0, 0), &basis).unwrap_err();
        assert_eq!(err.to_string(), "bracket left the subalgebra");
    }

    #[test]
    fn dependent_basis_rejected() {
        let e = MatrixElement::unit(2, 0, 1);
        assert!(MatrixBasis::new(vec![e.clone(), e]).is_err());
    }
}
