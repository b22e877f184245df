//! Based vector spaces used as tensor legs.

use std::fmt;
use std::sync::Arc;

/// A finite-dimensional space with a distinguished basis.
///
/// `degrees` records the grading of each basis vector (all zero for
/// ungraded spaces). `probe` is the extra degree a basis vector contributes
/// when an identity is checked on truncated data: endomorphism spaces use
/// it for the degree of the argument an endomorphism is evaluated at.
#[derive(Debug)]
pub struct BasedSpace {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub probe: Vec<usize>,
}

pub type Space = Arc<BasedSpace>;

impl BasedSpace {
    pub fn new(name: impl Into<String>, dim: usize) -> Space {
        let name = name.into();
        let labels = (0..dim).map(|i| format!("{name}[{i}]")).collect();
        Arc::new(BasedSpace {
            name,
            dim,
            labels,
            degrees: vec![0; dim],
            probe: vec![0; dim],
        })
    }

    pub fn labelled(name: impl Into<String>, labels: Vec<String>) -> Space {
        let dim = labels.len();
        Arc::new(BasedSpace {
            name: name.into(),
            dim,
            labels,
            degrees: vec![0; dim],
            probe: vec![0; dim],
        })
    }

    pub fn graded(name: impl Into<String>, labels: Vec<String>, degrees: Vec<usize>) -> Space {
        assert_eq!(labels.len(), degrees.len());
        let dim = labels.len();
        Arc::new(BasedSpace {
            name: name.into(),
            dim,
            labels,
            degrees,
            probe: vec![0; dim],
        })
    }

    pub fn with_probe(name: impl Into<String>, labels: Vec<String>, degrees: Vec<usize>, probe: Vec<usize>) -> Space {
        let dim = labels.len();
        assert_eq!(degrees.len(), dim);
        assert_eq!(probe.len(), dim);
        Arc::new(BasedSpace {
            name: name.into(),
            dim,
            labels,
            degrees,
            probe,
        })
    }

    /// Same basis data under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Space {
        Arc::new(BasedSpace {
            name: name.into(),
            dim: self.dim,
            labels: self.labels.clone(),
            degrees: self.degrees.clone(),
            probe: self.probe.clone(),
        })
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.iter().any(|&d| d > 0)
    }
}

impl PartialEq for BasedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.dim == other.dim
    }
}

impl Eq for BasedSpace {}

impl fmt::Display for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.dim)
    }
}

/// Renders a list of legs as `A(2) ⊗ B(3)`; the empty list is the ground field.
pub fn signature(legs: &[Space]) -> String {
    if legs.is_empty() {
        return "k".to_string();
    }
    legs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ⊗ ")
}

pub fn total_dim(legs: &[Space]) -> usize {
    legs.iter().map(|s| s.dim).product()
}

pub fn same_legs(a: &[Space], b: &[Space]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| **x == **y)
}

/// Splits a row-major flat index into per-leg indices.
pub fn decode(mut flat: usize, legs: &[Space]) -> Vec<usize> {
    let mut out = vec![0; legs.len()];
    for (slot, leg) in out.iter_mut().zip(legs).rev() {
        *slot = flat % leg.dim;
        flat /= leg.dim;
    }
    out
}

/// Row-major flat index: `e_i ⊗ e_j` of `V ⊗ W` is `i * dim(W) + j`.
pub fn encode(idx: &[usize], legs: &[Space]) -> usize {
    idx.iter().zip(legs).fold(0, |acc, (&i, leg)| acc * leg.dim + i)
}

pub fn basis_label(flat: usize, legs: &[Space]) -> String {
    if legs.is_empty() {
        return "1".to_string();
    }
    decode(flat, legs)
        .iter()
        .zip(legs)
        .map(|(&i, leg)| leg.labels[i].clone())
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

pub fn basis_degree(flat: usize, legs: &[Space]) -> usize {
    decode(flat, legs).iter().zip(legs).map(|(&i, leg)| leg.degrees[i]).sum()
}

pub fn basis_probe(flat: usize, legs: &[Space]) -> usize {
    decode(flat, legs).iter().zip(legs).map(|(&i, leg)| leg.probe[i]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_convention() {
        let v = BasedSpace::new("V", 2);
        let w = BasedSpace::new("W", 3);
        let legs = vec![v, w];
        assert_eq!(encode(&[1, 2], &legs), 5);
        assert_eq!(decode(4, &legs), vec![1, 1]);
        for flat in 0..6 {
            assert_eq!(encode(&decode(flat, &legs), &legs), flat);
        }
    }
}
