//! Dense exact linear maps between tensor products of based spaces.
//!
//! Columns are indexed by the domain basis, rows by the codomain basis, and
//! tensor products use the row-major flat index of [`crate::space::encode`].

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::space::{basis_label, same_legs, signature, total_dim, Space};

type SparseColumns = Vec<Vec<(usize, Scalar)>>;

struct Inner {
    field: Field,
    domain: Vec<Space>,
    codomain: Vec<Space>,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    columns: OnceLock<SparseColumns>,
}

/// An exact linear map. Cloning is cheap; values are immutable.
#[derive(Clone)]
pub struct LinMap(Arc<Inner>);

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {} -> {}", signature(self.domain()), signature(self.codomain()))?;
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|c| self.entry(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl LinMap {
    fn build(field: Field, domain: Vec<Space>, codomain: Vec<Space>, data: Vec<Scalar>) -> LinMap {
        let rows = total_dim(&codomain);
        let cols = total_dim(&domain);
        assert_eq!(data.len(), rows * cols, "matrix shape does not match signature");
        LinMap(Arc::new(Inner {
            field,
            domain,
            codomain,
            rows,
            cols,
            data,
            columns: OnceLock::new(),
        }))
    }

    pub fn from_fn(
        field: Field,
        domain: Vec<Space>,
        codomain: Vec<Space>,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> LinMap {
        let rows = total_dim(&codomain);
        let cols = total_dim(&domain);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        LinMap::build(field, domain, codomain, data)
    }

    /// Builds a map from sparse columns `(row, value)`; repeated rows add up.
    pub fn from_columns(field: Field, domain: Vec<Space>, codomain: Vec<Space>, columns: &[Vec<(usize, Scalar)>]) -> LinMap {
        let rows = total_dim(&codomain);
        let cols = total_dim(&domain);
        assert_eq!(columns.len(), cols);
        let mut data = vec![field.zero(); rows * cols];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                data[r * cols + c].add_assign_ref(v);
            }
        }
        LinMap::build(field, domain, codomain, data)
    }

    pub fn from_rows(field: Field, domain: Vec<Space>, codomain: Vec<Space>, rows: Vec<Vec<Scalar>>) -> Result<LinMap> {
        let r = total_dim(&codomain);
        let c = total_dim(&domain);
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::SignatureMismatch {
                left: format!("{r}x{c} matrix for {} -> {}", signature(&domain), signature(&codomain)),
                right: format!(
                    "{}x{} supplied",
                    rows.len(),
                    rows.first().map(|x| x.len()).unwrap_or(0)
                ),
            });
        }
        Ok(LinMap::build(field, domain, codomain, rows.into_iter().flatten().collect()))
    }

    pub fn identity(field: Field, legs: Vec<Space>) -> LinMap {
        LinMap::scaled_identity(field, legs, field.one())
    }

    pub fn scaled_identity(field: Field, legs: Vec<Space>, s: Scalar) -> LinMap {
        LinMap::from_fn(field, legs.clone(), legs, |r, c| if r == c { s.clone() } else { field.zero() })
    }

    pub fn zero(field: Field, domain: Vec<Space>, codomain: Vec<Space>) -> LinMap {
        LinMap::from_fn(field, domain, codomain, |_, _| field.zero())
    }

    /// Permutes tensor legs: output leg `j` is input leg `perm[j]`.
    pub fn permutation(field: Field, legs: &[Space], perm: &[usize]) -> LinMap {
        let out: Vec<Space> = perm.iter().map(|&p| legs[p].clone()).collect();
        let cols = total_dim(legs);
        let columns: Vec<Vec<(usize, Scalar)>> = (0..cols)
            .map(|c| vec![(permute_index(c, legs, perm), field.one())])
            .collect();
        LinMap::from_columns(field, legs.to_vec(), out, &columns)
    }

    /// The flip `V ⊗ W -> W ⊗ V` for leg groups `v` and `w`.
    pub fn swap(field: Field, v: &[Space], w: &[Space]) -> LinMap {
        let legs: Vec<Space> = v.iter().chain(w).cloned().collect();
        let perm: Vec<usize> = (v.len()..legs.len()).chain(0..v.len()).collect();
        LinMap::permutation(field, &legs, &perm)
    }

    pub fn field(&self) -> Field {
        self.0.field
    }
    pub fn domain(&self) -> &[Space] {
        &self.0.domain
    }
    pub fn codomain(&self) -> &[Space] {
        &self.0.codomain
    }
    pub fn rows(&self) -> usize {
        self.0.rows
    }
    pub fn cols(&self) -> usize {
        self.0.cols
    }
    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.0.data[r * self.0.cols + c]
    }

    /// Nonzero entries of every column, computed once.
    pub fn sparse_columns(&self) -> &SparseColumns {
        self.0.columns.get_or_init(|| {
            (0..self.cols())
                .map(|c| {
                    (0..self.rows())
                        .filter_map(|r| {
                            let v = self.entry(r, c);
                            (!v.is_zero()).then(|| (r, v.clone()))
                        })
                        .collect()
                })
                .collect()
        })
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.sparse_columns()[c]
    }

    /// Same matrix, new legs of the same total dimension.
    pub fn relabel(&self, domain: Vec<Space>, codomain: Vec<Space>) -> Result<LinMap> {
        if total_dim(&domain) != self.cols() || total_dim(&codomain) != self.rows() {
            return Err(Error::SignatureMismatch {
                left: format!("{} -> {}", signature(self.domain()), signature(self.codomain())),
                right: format!("{} -> {}", signature(&domain), signature(&codomain)),
            });
        }
        Ok(LinMap::build(self.field(), domain, codomain, self.0.data.clone()))
    }

    /// `self` after `g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if !same_legs(self.domain(), g.codomain()) {
            return Err(Error::SignatureMismatch {
                left: format!("{} -> {}", signature(self.domain()), signature(self.codomain())),
                right: format!("{} -> {}", signature(g.domain()), signature(g.codomain())),
            });
        }
        let field = self.field();
        let columns: Vec<Vec<(usize, Scalar)>> = g
            .sparse_columns()
            .iter()
            .map(|gcol| {
                let mut acc = vec![field.zero(); self.rows()];
                for (k, gv) in gcol {
                    for (r, fv) in self.column(*k) {
                        acc[*r].add_assign_ref(&(fv * gv));
                    }
                }
                acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(LinMap::from_columns(field, g.domain().to_vec(), self.codomain().to_vec(), &columns))
    }

    /// Kronecker product: `(f ⊗ g)(v ⊗ w) = f(v) ⊗ g(w)`.
    pub fn tensor(&self, g: &LinMap) -> LinMap {
        let domain: Vec<Space> = self.domain().iter().chain(g.domain()).cloned().collect();
        let codomain: Vec<Space> = self.codomain().iter().chain(g.codomain()).cloned().collect();
        let (gr, gc) = (g.rows(), g.cols());
        let columns: Vec<Vec<(usize, Scalar)>> = (0..self.cols() * gc)
            .map(|c| {
                let (fc, gcc) = (c / gc, c % gc);
                let mut out = Vec::new();
                for (fr, fv) in self.column(fc) {
                    for (grr, gv) in g.column(gcc) {
                        out.push((fr * gr + grr, fv * gv));
                    }
                }
                out
            })
            .collect();
        LinMap::from_columns(self.field(), domain, codomain, &columns)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.check_same_signature(other)?;
        Ok(LinMap::build(
            self.field(),
            self.domain().to_vec(),
            self.codomain().to_vec(),
            self.0.data.iter().zip(&other.0.data).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap::build(
            self.field(),
            self.domain().to_vec(),
            self.codomain().to_vec(),
            self.0.data.iter().map(|a| a * s).collect(),
        )
    }

    fn check_same_signature(&self, other: &LinMap) -> Result<()> {
        if same_legs(self.domain(), other.domain()) && same_legs(self.codomain(), other.codomain()) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: format!("{} -> {}", signature(self.domain()), signature(self.codomain())),
                right: format!("{} -> {}", signature(other.domain()), signature(other.codomain())),
            })
        }
    }

    /// Exact entrywise equality; signatures must match.
    pub fn equal(&self, other: &LinMap) -> Result<bool> {
        self.check_same_signature(other)?;
        Ok(self.0.data == other.0.data)
    }

    /// First `(row, col)` where the two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Result<Option<(usize, usize)>> {
        self.check_same_signature(other)?;
        for c in 0..self.cols() {
            for r in 0..self.rows() {
                if self.entry(r, c) != other.entry(r, c) {
                    return Ok(Some((r, c)));
                }
            }
        }
        Ok(None)
    }

    /// Plain matrix transpose with domain and codomain exchanged.
    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field(), self.codomain().to_vec(), self.domain().to_vec(), |r, c| {
            self.entry(c, r).clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.data.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols());
        let field = self.field();
        let mut out = vec![field.zero(); self.rows()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, m) in self.column(c) {
                out[*r].add_assign_ref(&(m * x));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut m = self.dense_rows();
        row_reduce(&mut m, self.cols()).len()
    }

    /// Exact two-sided inverse.
    pub fn inverse(&self) -> Result<LinMap> {
        let n = self.rows();
        if n != self.cols() {
            return Err(Error::NotInvertible(format!("non-square {}x{}", n, self.cols())));
        }
        let field = self.field();
        let mut m: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row: Vec<Scalar> = (0..n).map(|c| self.entry(r, c).clone()).collect();
                row.extend((0..n).map(|c| if c == r { field.one() } else { field.zero() }));
                row
            })
            .collect();
        let pivots = row_reduce(&mut m, n);
        if pivots.len() < n {
            return Err(Error::NotInvertible(format!("rank {} < {}", pivots.len(), n)));
        }
        Ok(LinMap::from_fn(field, self.codomain().to_vec(), self.domain().to_vec(), |r, c| {
            m[r][n + c].clone()
        }))
    }

    /// Solves `self ∘ g = target` for `g`.
    ///
    /// `self` must be injective; any target column outside the image of
    /// `self` yields [`Error::NoSolution`].
    pub fn solve_preimage(&self, target: &LinMap) -> Result<LinMap> {
        if !same_legs(self.codomain(), target.codomain()) {
            return Err(Error::SignatureMismatch {
                left: signature(self.codomain()),
                right: signature(target.codomain()),
            });
        }
        let (n, k) = (self.cols(), target.cols());
        let mut m: Vec<Vec<Scalar>> = (0..self.rows())
            .map(|r| {
                (0..n)
                    .map(|c| self.entry(r, c).clone())
                    .chain((0..k).map(|c| target.entry(r, c).clone()))
                    .collect()
            })
            .collect();
        let pivots = row_reduce(&mut m, n + k);
        if let Some(&p) = pivots.iter().find(|&&p| p >= n) {
            return Err(Error::NoSolution { column: p - n });
        }
        if pivots.len() < n {
            return Err(Error::Ambiguous { kernel_dim: n - pivots.len() });
        }
        // pivots are exactly 0..n, reduced row i holds the solution for unknown i
        let field = self.field();
        Ok(LinMap::from_fn(field, target.domain().to_vec(), self.domain().to_vec(), |r, c| {
            m[r][n + c].clone()
        }))
    }

    fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows())
            .map(|r| (0..self.cols()).map(|c| self.entry(r, c).clone()).collect())
            .collect()
    }

    /// Row-major nested rows, scalars in canonical text form.
    pub fn to_nested(&self) -> Vec<Vec<String>> {
        (0..self.rows())
            .map(|r| (0..self.cols()).map(|c| self.entry(r, c).to_string()).collect())
            .collect()
    }

    pub fn from_nested(field: Field, domain: Vec<Space>, codomain: Vec<Space>, rows: &[Vec<String>]) -> Result<LinMap> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinMap::from_rows(field, domain, codomain, parsed)
    }

    /// Human readable description of a column as a combination of basis vectors.
    pub fn describe_column(&self, c: usize) -> String {
        describe_terms(self.column(c).iter().map(|(r, v)| (*r, v.clone())), self.codomain())
    }
}

pub fn describe_terms(terms: impl Iterator<Item = (usize, Scalar)>, legs: &[Space]) -> String {
    let parts: Vec<String> = terms
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| {
            let label = basis_label(i, legs);
            if v.is_one() {
                label
            } else {
                format!("({v})·{label}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn permute_index(flat: usize, legs: &[Space], perm: &[usize]) -> usize {
    let idx = crate::space::decode(flat, legs);
    perm.iter().fold(0, |acc, &p| acc * legs[p].dim + idx[p])
}

/// Gauss-Jordan elimination on the first `ncols` columns; returns pivot columns.
fn row_reduce(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}
