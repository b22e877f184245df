//! Sparse tensors and typed composites of leg-wise maps.
//!
//! A [`Chain`] is a categorical composite written as a list of steps, each
//! acting on a contiguous run of legs. Chains are type-checked leg by leg
//! (names and dimensions) when built, and are evaluated on sparse vectors so
//! that intermediate spaces never need a dense matrix.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linmap::{describe_terms, LinMap};
use crate::scalar::{Field, Scalar};
use crate::space::{basis_degree, basis_label, basis_probe, decode, same_legs, signature, total_dim, Space};

/// A vector in a tensor product of based spaces, stored by flat index.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVec {
    pub legs: Vec<Space>,
    pub terms: BTreeMap<usize, Scalar>,
}

impl TensorVec {
    pub fn basis(legs: Vec<Space>, index: usize, field: Field) -> TensorVec {
        let mut terms = BTreeMap::new();
        terms.insert(index, field.one());
        TensorVec { legs, terms }
    }

    pub fn zero(legs: Vec<Space>) -> TensorVec {
        TensorVec { legs, terms: BTreeMap::new() }
    }

    pub fn describe(&self) -> String {
        describe_terms(self.terms.iter().map(|(i, v)| (*i, v.clone())), &self.legs)
    }

    fn prune(&mut self) {
        self.terms.retain(|_, v| !v.is_zero());
    }
}

#[derive(Clone)]
enum Step {
    Map { at: usize, map: LinMap },
    Permute { perm: Vec<usize> },
    Sub { at: usize, chain: Arc<Chain> },
}

/// A composite of maps applied to runs of tensor legs, right to left in
/// the usual notation and first to last in `steps`.
#[derive(Clone)]
pub struct Chain {
    field: Field,
    domain: Vec<Space>,
    legs: Vec<Space>,
    steps: Vec<Step>,
    memo: Option<Arc<Memo>>,
}

type Memo = RwLock<HashMap<usize, Arc<BTreeMap<usize, Scalar>>>>;

impl Chain {
    pub fn new(field: Field, domain: Vec<Space>) -> Chain {
        let legs = domain.clone();
        assert_dims_fit(&legs);
        Chain {
            field,
            domain,
            legs,
            steps: Vec::new(),
            memo: None,
        }
    }

    pub fn from_map(map: &LinMap) -> Chain {
        Chain::new(map.field(), map.domain().to_vec())
            .then(map)
            .expect("a map always chains onto its own domain")
    }

    pub fn domain(&self) -> &[Space] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Space] {
        &self.legs
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn mismatch(&self, expected: &[Space], found: &[Space]) -> Error {
        Error::Transcription {
            step: self.steps.len() + 1,
            expected: signature(expected),
            found: signature(found),
        }
    }

    /// Applies `map` to the legs starting at position `at`.
    pub fn at(mut self, at: usize, map: &LinMap) -> Result<Chain> {
        let k = map.domain().len();
        if at + k > self.legs.len() || !same_legs(&self.legs[at..at + k], map.domain()) {
            let end = (at + k).min(self.legs.len());
            let found = self.legs[at.min(end)..end].to_vec();
            return Err(self.mismatch(map.domain(), &found));
        }
        self.legs.splice(at..at + k, map.codomain().iter().cloned());
        assert_dims_fit(&self.legs);
        self.memo = None;
        self.steps.push(Step::Map { at, map: map.clone() });
        Ok(self)
    }

    /// Applies `map` to all legs.
    pub fn then(self, map: &LinMap) -> Result<Chain> {
        if !same_legs(&self.legs, map.domain()) {
            return Err(self.mismatch(map.domain(), &self.legs));
        }
        self.at(0, map)
    }

    /// Applies a whole sub-composite to the legs starting at `at`.
    pub fn at_chain(mut self, at: usize, chain: &Chain) -> Result<Chain> {
        let k = chain.domain.len();
        if at + k > self.legs.len() || !same_legs(&self.legs[at..at + k], &chain.domain) {
            let end = (at + k).min(self.legs.len());
            let found = self.legs[at.min(end)..end].to_vec();
            return Err(self.mismatch(&chain.domain, &found));
        }
        self.legs.splice(at..at + k, chain.legs.iter().cloned());
        assert_dims_fit(&self.legs);
        self.memo = None;
        self.steps.push(Step::Sub {
            at,
            chain: Arc::new(chain.clone()),
        });
        Ok(self)
    }

    pub fn then_chain(self, chain: &Chain) -> Result<Chain> {
        if !same_legs(&self.legs, &chain.domain) {
            return Err(self.mismatch(&chain.domain, &self.legs));
        }
        self.at_chain(0, chain)
    }

    /// Reorders legs: new leg `j` is old leg `perm[j]`.
    pub fn permute(mut self, perm: &[usize]) -> Chain {
        assert_eq!(perm.len(), self.legs.len());
        self.legs = perm.iter().map(|&p| self.legs[p].clone()).collect();
        self.memo = None;
        self.steps.push(Step::Permute { perm: perm.to_vec() });
        self
    }

    /// Exchanges two adjacent groups of legs: `[at, at+a)` and `[at+a, at+a+b)`.
    pub fn flip(self, at: usize, a: usize, b: usize) -> Chain {
        let n = self.legs.len();
        let mut perm: Vec<usize> = (0..at).collect();
        perm.extend(at + a..at + a + b);
        perm.extend(at..at + a);
        perm.extend(at + a + b..n);
        self.permute(&perm)
    }

    pub fn eval(&self, mut v: TensorVec) -> TensorVec {
        debug_assert!(same_legs(&v.legs, &self.domain));
        for step in &self.steps {
            v = match step {
                Step::Map { at, map } => apply_map(&v, *at, map, self.field),
                Step::Permute { perm } => apply_perm(&v, perm, self.field),
                Step::Sub { at, chain } => apply_sub(&v, *at, chain, self.field),
            };
        }
        v
    }

    pub fn eval_basis(&self, index: usize) -> TensorVec {
        let Some(memo) = &self.memo else {
            return self.eval(TensorVec::basis(self.domain.clone(), index, self.field));
        };
        let hit = memo.read().expect("memo lock").get(&index).cloned();
        let terms = match hit {
            Some(t) => t,
            None => {
                let t = Arc::new(self.eval(TensorVec::basis(self.domain.clone(), index, self.field)).terms);
                memo.write().expect("memo lock").insert(index, t.clone());
                t
            }
        };
        TensorVec {
            legs: self.legs.clone(),
            terms: (*terms).clone(),
        }
    }

    /// The same composite, remembering its value on each basis input.
    ///
    /// Extending a memoized chain drops the cache.
    pub fn memoized(mut self) -> Chain {
        self.memo = Some(Arc::new(RwLock::new(HashMap::new())));
        self
    }

    /// Dense matrix of the composite.
    pub fn materialize(&self) -> LinMap {
        let cols = total_dim(&self.domain);
        let columns: Vec<Vec<(usize, Scalar)>> = (0..cols)
            .into_par_iter()
            .map(|j| self.eval_basis(j).terms.into_iter().collect())
            .collect();
        LinMap::from_columns(self.field, self.domain.clone(), self.legs.clone(), &columns)
    }
}

fn assert_dims_fit(legs: &[Space]) {
    let mut acc: u128 = 1;
    for l in legs {
        acc *= l.dim as u128;
    }
    assert!(acc < (usize::MAX as u128), "tensor product too large to index");
}

fn apply_map(v: &TensorVec, at: usize, map: &LinMap, field: Field) -> TensorVec {
    let k = map.domain().len();
    let mid = total_dim(&v.legs[at..at + k]);
    let suf = total_dim(&v.legs[at + k..]);
    let new_mid = map.rows();
    let mut legs = v.legs.clone();
    legs.splice(at..at + k, map.codomain().iter().cloned());
    let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (&idx, c) in &v.terms {
        let pre_i = idx / (mid * suf);
        let mid_i = (idx / suf) % mid;
        let suf_i = idx % suf;
        for (r, m) in map.column(mid_i) {
            let ni = (pre_i * new_mid + r) * suf + suf_i;
            out.entry(ni).or_insert_with(|| field.zero()).add_assign_ref(&(c * m));
        }
    }
    let mut t = TensorVec { legs, terms: out };
    t.prune();
    t
}

fn apply_perm(v: &TensorVec, perm: &[usize], _field: Field) -> TensorVec {
    let legs: Vec<Space> = perm.iter().map(|&p| v.legs[p].clone()).collect();
    let terms = v
        .terms
        .iter()
        .map(|(&idx, c)| {
            let d = decode(idx, &v.legs);
            let ni = perm.iter().fold(0, |acc, &p| acc * v.legs[p].dim + d[p]);
            (ni, c.clone())
        })
        .collect();
    TensorVec { legs, terms }
}

fn apply_sub(v: &TensorVec, at: usize, chain: &Chain, field: Field) -> TensorVec {
    let k = chain.domain.len();
    let mid = total_dim(&v.legs[at..at + k]);
    let suf = total_dim(&v.legs[at + k..]);
    let new_mid = total_dim(&chain.legs);
    let mut legs = v.legs.clone();
    legs.splice(at..at + k, chain.legs.iter().cloned());
    // group by the middle index so each sub-evaluation happens once
    let mut by_mid: BTreeMap<usize, Vec<(usize, usize, &Scalar)>> = BTreeMap::new();
    for (&idx, c) in &v.terms {
        by_mid
            .entry((idx / suf) % mid)
            .or_default()
            .push((idx / (mid * suf), idx % suf, c));
    }
    let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (mid_i, entries) in by_mid {
        let image = chain.eval_basis(mid_i);
        for (pre_i, suf_i, c) in entries {
            for (r, m) in &image.terms {
                let ni = (pre_i * new_mid + r) * suf + suf_i;
                out.entry(ni).or_insert_with(|| field.zero()).add_assign_ref(&(c * m));
            }
        }
    }
    let mut t = TensorVec { legs, terms: out };
    t.prune();
    t
}

/// Where two composites disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Flat index of the failing basis input.
    pub index: usize,
    pub input: String,
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "input {} (degree {}): lhs = {}, rhs = {}", self.input, self.degree, self.lhs, self.rhs)
    }
}

/// Restricts which coordinates are compared when data is truncated.
///
/// With a bound `N`, only inputs of total degree `≤ N` are used, and of each
/// output only the coordinates whose probe degree keeps the total within `N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegreeBound(pub Option<usize>);

impl DegreeBound {
    pub fn admits_input(&self, index: usize, legs: &[Space]) -> bool {
        match self.0 {
            None => true,
            Some(n) => basis_degree(index, legs) <= n,
        }
    }
}

/// Compares two composites with the same signature on every admitted basis
/// input; returns the first disagreement in basis order.
pub fn check_equal(lhs: &Chain, rhs: &Chain, bound: DegreeBound) -> Result<Option<Witness>> {
    if !same_legs(lhs.domain(), rhs.domain()) || !same_legs(lhs.codomain(), rhs.codomain()) {
        return Err(Error::SignatureMismatch {
            left: format!("{} -> {}", signature(lhs.domain()), signature(lhs.codomain())),
            right: format!("{} -> {}", signature(rhs.domain()), signature(rhs.codomain())),
        });
    }
    let domain = lhs.domain().to_vec();
    let codomain = lhs.codomain().to_vec();
    let n = total_dim(&domain);
    let witness = (0..n).into_par_iter().find_map_first(|j| {
        if !bound.admits_input(j, &domain) {
            return None;
        }
        let deg = basis_degree(j, &domain);
        let mut l = lhs.eval_basis(j);
        let mut r = rhs.eval_basis(j);
        if let Some(nb) = bound.0 {
            let keep = |i: &usize| deg + basis_probe(*i, &codomain) <= nb;
            l.terms.retain(|i, _| keep(i));
            r.terms.retain(|i, _| keep(i));
        }
        (l.terms != r.terms).then(|| Witness {
            index: j,
            input: basis_label(j, &domain),
            degree: deg,
            lhs: l.describe(),
            rhs: r.describe(),
        })
    });
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::BasedSpace;

    const Q: Field = Field::Rational;

    #[test]
    fn chain_matches_dense_composition() {
        let v = BasedSpace::new("V", 2);
        let w = BasedSpace::new("W", 3);
        let f = LinMap::from_fn(Q, vec![v.clone()], vec![w.clone()], |r, c| Q.int((r + 2 * c) as i64 - 1));
        let g = LinMap::from_fn(Q, vec![w.clone()], vec![v.clone()], |r, c| Q.int((3 * r + c) as i64 % 4));
        let id_w = LinMap::identity(Q, vec![w.clone()]);
        // (g ⊗ W)(f ⊗ W) then flip
        let chain = Chain::new(Q, vec![v.clone(), w.clone()])
            .at(0, &f)
            .unwrap()
            .at(0, &g)
            .unwrap()
            .flip(0, 1, 1);
        let dense = LinMap::swap(Q, std::slice::from_ref(&v), std::slice::from_ref(&w))
            .compose(&g.compose(&f).unwrap().tensor(&id_w))
            .unwrap();
        assert!(chain.materialize().equal(&dense).unwrap());
    }

    #[test]
    fn chain_rejects_wrong_legs() {
        let v = BasedSpace::new("V", 2);
        let w = BasedSpace::new("W", 2);
        let f = LinMap::identity(Q, vec![w]);
        let err = Chain::new(Q, vec![v]).at(0, &f).err().unwrap();
        assert!(matches!(err, Error::Transcription { step: 1, .. }));
    }

    #[test]
    fn sub_chain_equals_inline_steps() {
        let v = BasedSpace::new("V", 2);
        let f = LinMap::from_fn(Q, vec![v.clone()], vec![v.clone()], |r, c| Q.int((r * 2 + c) as i64 + 1));
        let inner = Chain::new(Q, vec![v.clone(), v.clone()]).at(1, &f).unwrap().flip(0, 1, 1);
        let outer = Chain::new(Q, vec![v.clone(), v.clone(), v.clone()]).at_chain(1, &inner).unwrap();
        let inline = Chain::new(Q, vec![v.clone(), v.clone(), v.clone()])
            .at(2, &f)
            .unwrap()
            .flip(1, 1, 1);
        assert!(outer.materialize().equal(&inline.materialize()).unwrap());
        assert_eq!(check_equal(&outer, &inline, DegreeBound(None)).unwrap(), None);
    }
}
