//! Graded spaces truncated at a degree bound, and lazily resolved graded maps.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::scalar::{Field, Scalar};
use crate::space::{BasedSpace, Space};

/// A graded space `⊕_{d ≤ N} V_d` with finite components.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    pub name: String,
    pub components: Vec<usize>,
    /// Labels per component, in basis order.
    pub labels: Vec<Vec<String>>,
}

impl GradedSpace {
    pub fn new(name: impl Into<String>, labels: Vec<Vec<String>>) -> GradedSpace {
        GradedSpace {
            name: name.into(),
            components: labels.iter().map(Vec::len).collect(),
            labels,
        }
    }

    pub fn bound(&self) -> usize {
        self.components.len() - 1
    }

    pub fn connected(&self) -> bool {
        self.components.first() == Some(&1)
    }

    pub fn offset(&self, degree: usize) -> usize {
        self.components[..degree].iter().sum()
    }

    pub fn component(&self, degree: usize) -> Space {
        BasedSpace::graded(
            format!("{}_{degree}", self.name),
            self.labels[degree].clone(),
            vec![degree; self.components[degree]],
        )
    }

    /// The truncated space as a single based space carrying degrees.
    pub fn flatten(&self) -> Space {
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        for (d, ls) in self.labels.iter().enumerate() {
            labels.extend(ls.iter().cloned());
            degrees.extend(std::iter::repeat_n(d, ls.len()));
        }
        BasedSpace::graded(self.name.clone(), labels, degrees)
    }
}

/// Computes the block from input multi-degree `inp` to output multi-degree
/// `out` as rows of scalars.
pub type BlockFn = dyn Fn(&[usize], &[usize]) -> Vec<Vec<Scalar>> + Send + Sync;

/// A map between tensor products of graded spaces, resolved block by block.
///
/// Blocks are memoized; resolution is deterministic, so concurrent callers
/// that race on the same block compute identical values.
pub struct GradedMap {
    field: Field,
    domain: Vec<GradedSpace>,
    codomain: Vec<GradedSpace>,
    resolver: Arc<BlockFn>,
    cache: Mutex<HashMap<(Vec<usize>, Vec<usize>), LinMap>>,
}

impl GradedMap {
    pub fn new(field: Field, domain: Vec<GradedSpace>, codomain: Vec<GradedSpace>, resolver: Arc<BlockFn>) -> GradedMap {
        GradedMap {
            field,
            domain,
            codomain,
            resolver,
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn check_bound(spaces: &[GradedSpace], degree: &[usize]) -> Result<()> {
        if degree.len() != spaces.len() {
            return Err(Error::SignatureMismatch {
                left: format!("{} graded legs", spaces.len()),
                right: format!("multi-degree {degree:?}"),
            });
        }
        for (s, &d) in spaces.iter().zip(degree) {
            if d > s.bound() {
                return Err(Error::OutOfBound {
                    degree: degree.to_vec(),
                    bound: s.bound(),
                });
            }
        }
        Ok(())
    }

    /// The block from input component `inp` into output component `out`.
    pub fn block(&self, out: &[usize], inp: &[usize]) -> Result<LinMap> {
        GradedMap::check_bound(&self.codomain, out)?;
        GradedMap::check_bound(&self.domain, inp)?;
        let key = (out.to_vec(), inp.to_vec());
        if let Some(b) = self.cache.lock().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let rows = (self.resolver)(out, inp);
        let dom: Vec<Space> = self.domain.iter().zip(inp).map(|(s, &d)| s.component(d)).collect();
        let cod: Vec<Space> = self.codomain.iter().zip(out).map(|(s, &d)| s.component(d)).collect();
        let block = LinMap::from_rows(self.field, dom, cod, rows)?;
        self.cache.lock().unwrap().entry(key).or_insert(block.clone());
        Ok(block)
    }

    /// Every block landing in output component `out`, stacked over all input
    /// multi-degrees in row-major order of the flattened domain.
    pub fn resolve_block(&self, out: &[usize]) -> Result<LinMap> {
        GradedMap::check_bound(&self.codomain, out)?;
        let dom: Vec<Space> = self.domain.iter().map(GradedSpace::flatten).collect();
        let cod: Vec<Space> = self.codomain.iter().zip(out).map(|(s, &d)| s.component(d)).collect();
        let full = self.to_linmap()?;
        // restrict rows of the full map to the requested component
        let offsets = out_offsets(&self.codomain, out);
        Ok(LinMap::from_fn(self.field, dom, cod, |r, c| full.entry(offsets[r], c).clone()))
    }

    /// The whole truncated map as a dense matrix on the flattened spaces.
    pub fn to_linmap(&self) -> Result<LinMap> {
        let dom: Vec<Space> = self.domain.iter().map(GradedSpace::flatten).collect();
        let cod: Vec<Space> = self.codomain.iter().map(GradedSpace::flatten).collect();
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); crate::space::total_dim(&dom)];
        for inp in multi_degrees(&self.domain) {
            for out in multi_degrees(&self.codomain) {
                let b = self.block(&out, &inp)?;
                if b.is_zero() {
                    continue;
                }
                let in_idx = out_offsets(&self.domain, &inp);
                let out_idx = out_offsets(&self.codomain, &out);
                for (bc, &c) in in_idx.iter().enumerate() {
                    for (br, v) in b.column(bc) {
                        columns[c].push((out_idx[*br], v.clone()));
                    }
                }
            }
        }
        Ok(LinMap::from_columns(self.field, dom, cod, &columns))
    }

    pub fn cached_blocks(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

/// All multi-degrees of a list of graded spaces, in row-major order.
pub fn multi_degrees(spaces: &[GradedSpace]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for s in spaces {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=s.bound()).map(move |d| {
                    let mut p = prefix.clone();
                    p.push(d);
                    p
                })
            })
            .collect();
    }
    out
}

/// Flat indices (in the flattened tensor product) of the basis of one
/// multi-degree component, in the component's own row-major order.
fn out_offsets(spaces: &[GradedSpace], degree: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize];
    for (s, &d) in spaces.iter().zip(degree) {
        let total: usize = s.components.iter().sum();
        let off = s.offset(d);
        out = out
            .into_iter()
            .flat_map(|acc| (0..s.components[d]).map(move |i| acc * total + off + i))
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(name: &str, n: usize) -> GradedSpace {
        GradedSpace::new(name, (0..=n).map(|d| vec![format!("x^{d}")]).collect())
    }

    #[test]
    fn identity_blocks() {
        let q = Field::Rational;
        let v = line("V", 3);
        let id = GradedMap::new(
            q,
            vec![v.clone()],
            vec![v.clone()],
            Arc::new(move |out: &[usize], inp: &[usize]| vec![vec![q.int((out == inp) as i64)]]),
        );
        let b = id.block(&[2], &[2]).unwrap();
        assert!(b.entry(0, 0).is_one());
        assert!(id.block(&[4], &[2]).is_err());
        let r = id.resolve_block(&[2]).unwrap();
        assert_eq!(r.cols(), 4);
        assert!(r.entry(0, 2).is_one());
        let again = id.block(&[2], &[2]).unwrap();
        assert!(again.equal(&b).unwrap());
        assert!(id.to_linmap().unwrap().equal(&LinMap::identity(q, vec![v.flatten()])).unwrap());
    }
}
