//! Braided Hopf algebras inside the Yetter-Drinfeld category over `B`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::axioms::{hopf_items, HopfMaps};
use crate::base_hopf::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::graded::{GradedMap, GradedSpace};
use crate::linmap::LinMap;
use crate::report::ReportItem;
use crate::scalar::{Field, Scalar};
use crate::space::{BasedSpace, Space};
use crate::tensor::{check_equal, Chain, DegreeBound, TensorVec};
use crate::yd::{
    braiding, dual_module, evaluation, is_symmetric_pair, symmetric_pair_witness, tensor_module, trivial_module,
    yd_morphism_witness, YDModule,
};

/// A braided Hopf algebra on a single-leg YD module.
///
/// Graded instances carry degrees on the carrier and a truncation bound;
/// products landing above the bound are dropped.
#[derive(Clone, Debug)]
pub struct BraidedHopfAlgebra {
    pub name: String,
    pub module: YDModule,
    pub mult: LinMap,
    pub unit: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    pub antipode_inv: Option<LinMap>,
    pub truncation: Option<usize>,
}

impl BraidedHopfAlgebra {
    pub fn carrier(&self) -> &Space {
        &self.module.legs[0]
    }

    pub fn legs(&self) -> Vec<Space> {
        self.module.legs.clone()
    }

    pub fn dim(&self) -> usize {
        self.carrier().dim
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn bound(&self) -> DegreeBound {
        DegreeBound(self.truncation)
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::from_maps(self.name.clone(), self.module.clone(), &self.mult, self.unit.clone())
    }

    pub fn antipode_inverse(&self) -> Result<&LinMap> {
        self.antipode_inv
            .as_ref()
            .ok_or_else(|| Error::MissingAntipodeInverse(self.name.clone()))
    }

    fn maps(&self) -> HopfMaps<'_> {
        HopfMaps {
            field: self.field(),
            legs: &self.module.legs,
            mult: &self.mult,
            unit: &self.unit,
            comult: &self.comult,
            counit: &self.counit,
            antipode: &self.antipode,
            antipode_inv: self.antipode_inv.as_ref(),
        }
    }

    /// Fills in `S⁻¹` by exact inversion.
    pub fn with_antipode_inverse(mut self) -> Result<BraidedHopfAlgebra> {
        let inv = self
            .antipode
            .inverse()
            .map_err(|e| Error::NotInvertible(format!("antipode of {}: {e}", self.name)))?;
        self.antipode_inv = Some(inv);
        Ok(self)
    }
}

/// YD axioms of the carrier, Hopf axioms with the braided bialgebra law,
/// and the YD-morphism property of every structure map.
pub fn check_braided_hopf(b: &HopfAlgebraData, h: &BraidedHopfAlgebra) -> Vec<ReportItem> {
    let bound = h.bound();
    let p = format!("braided-hopf-{}", h.name);
    let mut items = crate::yd::check_yd(b, &h.module, bound);
    match braiding(&h.module, &h.module) {
        Ok(c) => items.extend(hopf_items(&p, &h.maps(), &c, bound)),
        Err(e) => items.push(ReportItem::error(format!("{p}-braiding"), "braiding on H ⊗ H", e.to_string())),
    }
    items.extend(structure_maps_are_morphisms(b, h, &p, bound));
    items
}

fn structure_maps_are_morphisms(b: &HopfAlgebraData, h: &BraidedHopfAlgebra, p: &str, bound: DegreeBound) -> Vec<ReportItem> {
    let k = trivial_module(b);
    let hh = match tensor_module(b, &h.module, &h.module) {
        Ok(m) => m,
        Err(e) => return vec![ReportItem::error(format!("{p}-yd-morphisms"), "H ⊗ H as a YD module", e.to_string())],
    };
    let hm = &h.module;
    let mut maps: Vec<(&str, &LinMap, &YDModule, &YDModule)> = vec![
        ("mult", &h.mult, &hh, hm),
        ("unit", &h.unit, &k, hm),
        ("comult", &h.comult, hm, &hh),
        ("counit", &h.counit, hm, &k),
        ("antipode", &h.antipode, hm, hm),
    ];
    if let Some(inv) = &h.antipode_inv {
        maps.push(("antipode-inverse", inv, hm, hm));
    }
    maps.into_iter()
        .map(|(name, f, v, w)| {
            ReportItem::from_check(
                &format!("{p}-{name}-yd-morphism"),
                &format!("{name} of {} is a YD morphism", h.name),
                yd_morphism_witness(b, &Chain::from_map(f), v, w, bound),
            )
        })
        .collect()
}

pub fn is_symmetric(h: &BraidedHopfAlgebra) -> Result<bool> {
    is_symmetric_pair(&h.module, &h.module)
}

/// `Δ = C ∘ Δ`.
pub fn is_quantum_cocommutative(h: &BraidedHopfAlgebra) -> Result<bool> {
    let lhs = Chain::from_map(&h.comult);
    let rhs = Chain::from_map(&h.comult).then_chain(&braiding(&h.module, &h.module)?)?;
    Ok(check_equal(&lhs, &rhs, h.bound())?.is_none())
}

/// The dual on `H*`, with structure transported through the braided
/// pairing `P₂ = (ev ⊗ ev)(H* ⊗ C_{H*,H} ⊗ H)`:
/// `⟨fg, x⟩ = P₂(f ⊗ g ⊗ Δx)`, `P₂(Δf ⊗ x ⊗ y) = ⟨f, xy⟩`, and unit,
/// counit and antipodes are plain transposes.
pub fn dual_braided_hopf(b: &HopfAlgebraData, h: &BraidedHopfAlgebra, name: &str) -> Result<BraidedHopfAlgebra> {
    if let Some(w) = symmetric_pair_witness(&h.module, &h.module, h.bound())? {
        return Err(Error::NonSymmetric(format!("{} (C_{{H,H}}² ≠ id at {})", h.name, w.input)));
    }
    let f = h.field();
    let module = dual_module(b, &h.module, name)?;
    let hs = module.legs[0].clone();
    let hc = h.carrier().clone();
    let d = h.dim();
    let ev = evaluation(f, &hs, std::slice::from_ref(&hc));
    let p2 = Chain::new(f, vec![hs.clone(), hs.clone(), hc.clone(), hc.clone()])
        .at_chain(1, &braiding(&module, &h.module)?)?
        .at(0, &ev)?
        .then(&ev)?;
    let p2m = p2.materialize();
    let one = vec![hs.clone()];
    let two = vec![hs.clone(), hs.clone()];
    let mult = {
        let full = Chain::new(f, vec![hs.clone(), hs.clone(), hc.clone()])
            .at(2, &h.comult)?
            .then_chain(&p2)?
            .materialize();
        LinMap::from_fn(f, two.clone(), one.clone(), |x, fg| full.entry(0, fg * d + x).clone())
    };
    let pair_space = BasedSpace::new(format!("({name}⊗{name})'"), d * d);
    let l = LinMap::from_fn(f, two.clone(), vec![pair_space.clone()], |xy, fg| p2m.entry(0, fg * d * d + xy).clone());
    let target = LinMap::from_fn(f, one.clone(), vec![pair_space], |xy, fi| h.mult.entry(fi, xy).clone());
    let comult = l.solve_preimage(&target)?;
    let tr = |m: &LinMap, dom: &[Space], cod: &[Space]| m.transpose().relabel(dom.to_vec(), cod.to_vec());
    let dual = BraidedHopfAlgebra {
        name: name.to_string(),
        mult,
        unit: tr(&h.counit, &[], &one)?,
        comult,
        counit: tr(&h.unit, &one, &[])?,
        antipode: tr(&h.antipode, &one, &one)?,
        antipode_inv: match &h.antipode_inv {
            Some(s) => Some(tr(s, &one, &one)?),
            None => None,
        },
        truncation: h.truncation,
        module,
    };
    Ok(dual)
}

/// How a basis element factors through the generators:
/// `e = scalar · gen · rest`.
#[derive(Clone, Debug)]
pub enum Factor {
    Unit,
    Generator,
    Product { gen: usize, rest: usize, scalar: Scalar },
}

/// Extends `Δ`, `ε` and `S` from their values on generators: `Δ` is
/// multiplicative into the braided tensor algebra `H ⊗ H`, and
/// `S(ab) = S(a₋₁·b) S(a₀)`.
///
/// `factor` must be well-founded: every `rest` (and every element reached by
/// acting on it) must already be resolvable.
pub struct GeneratorExtension<'a> {
    pub module: &'a YDModule,
    pub mult: &'a LinMap,
    pub unit_index: usize,
    pub factor: &'a dyn Fn(usize) -> Factor,
    pub gen_comult: &'a HashMap<usize, Vec<(usize, Scalar)>>,
    pub gen_counit: &'a HashMap<usize, Scalar>,
    pub gen_antipode: &'a HashMap<usize, Vec<(usize, Scalar)>>,
}

impl GeneratorExtension<'_> {
    fn field(&self) -> Field {
        self.mult.field()
    }

    fn legs2(&self) -> Vec<Space> {
        vec![self.module.legs[0].clone(), self.module.legs[0].clone()]
    }

    pub fn comult(&self) -> Result<LinMap> {
        let f = self.field();
        let h = self.module.legs[0].clone();
        let d = h.dim;
        let legs4 = vec![h.clone(), h.clone(), h.clone(), h.clone()];
        let bt = Chain::new(f, legs4)
            .at_chain(1, &braiding(self.module, self.module)?)?
            .at(0, self.mult)?
            .at(1, self.mult)?;
        let mut memo: HashMap<usize, TensorVec> = HashMap::new();
        fn go(
            ext: &GeneratorExtension<'_>,
            bt: &Chain,
            memo: &mut HashMap<usize, TensorVec>,
            e: usize,
            d: usize,
        ) -> TensorVec {
            if let Some(v) = memo.get(&e) {
                return v.clone();
            }
            let f = ext.field();
            let legs2 = ext.legs2();
            let out = match (ext.factor)(e) {
                Factor::Unit => TensorVec::basis(legs2, ext.unit_index * d + ext.unit_index, f),
                Factor::Generator => TensorVec {
                    legs: legs2,
                    terms: ext.gen_comult[&e].iter().cloned().collect(),
                },
                Factor::Product { gen, rest, scalar } => {
                    let a = go(ext, bt, memo, gen, d);
                    let b = go(ext, bt, memo, rest, d);
                    let mut terms = std::collections::BTreeMap::new();
                    for (i, x) in &a.terms {
                        for (j, y) in &b.terms {
                            terms.insert(i * d * d + j, &(x * y) * &scalar);
                        }
                    }
                    let mut legs = legs2.clone();
                    legs.extend(legs2);
                    bt.eval(TensorVec { legs, terms })
                }
            };
            memo.insert(e, out.clone());
            out
        }
        let columns: Vec<Vec<(usize, Scalar)>> = (0..d)
            .map(|e| go(self, &bt, &mut memo, e, d).terms.into_iter().collect())
            .collect();
        Ok(LinMap::from_columns(f, vec![h], self.legs2(), &columns))
    }

    pub fn counit(&self) -> LinMap {
        let f = self.field();
        let h = self.module.legs[0].clone();
        fn go(ext: &GeneratorExtension<'_>, e: usize) -> Scalar {
            match (ext.factor)(e) {
                Factor::Unit => ext.field().one(),
                Factor::Generator => ext.gen_counit[&e].clone(),
                Factor::Product { gen, rest, scalar } => &(&go(ext, gen) * &go(ext, rest)) * &scalar,
            }
        }
        LinMap::from_fn(f, vec![h], vec![], |_, c| go(self, c))
    }

    pub fn antipode(&self) -> Result<LinMap> {
        let f = self.field();
        let h = self.module.legs[0].clone();
        let d = h.dim;
        let c = braiding(self.module, self.module)?;
        let mut memo: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
        fn go(
            ext: &GeneratorExtension<'_>,
            c: &Chain,
            memo: &mut HashMap<usize, Vec<(usize, Scalar)>>,
            visiting: &mut Vec<usize>,
            e: usize,
            d: usize,
        ) -> Vec<(usize, Scalar)> {
            if let Some(v) = memo.get(&e) {
                return v.clone();
            }
            assert!(!visiting.contains(&e), "generator factorization is not well-founded at basis {e}");
            visiting.push(e);
            let f = ext.field();
            let out = match (ext.factor)(e) {
                Factor::Unit => vec![(ext.unit_index, f.one())],
                Factor::Generator => ext.gen_antipode[&e].clone(),
                Factor::Product { gen, rest, scalar } => {
                    // S(a b) = S(a₋₁·b) S(a₀)
                    let braided = c.eval_basis(gen * d + rest);
                    let mut acc = vec![f.zero(); d];
                    for (idx, coef) in &braided.terms {
                        let (l, r) = (idx / d, idx % d);
                        let sl = go(ext, c, memo, visiting, l, d);
                        let sr = go(ext, c, memo, visiting, r, d);
                        for (i, x) in &sl {
                            for (j, y) in &sr {
                                for (k, m) in ext.mult.column(i * d + j) {
                                    acc[*k].add_assign_ref(&(&(&(x * y) * m) * coef));
                                }
                            }
                        }
                    }
                    acc.into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| (i, &v * &scalar))
                        .collect()
                }
            };
            visiting.pop();
            memo.insert(e, out.clone());
            out
        }
        let mut visiting = Vec::new();
        let columns: Vec<Vec<(usize, Scalar)>> = (0..d).map(|e| go(self, &c, &mut memo, &mut visiting, e, d)).collect();
        Ok(LinMap::from_columns(f, vec![h.clone()], vec![h], &columns))
    }
}

/// `χ^{*k}(b) = χ(b₁)⋯χ(b_k)` for every basis element `b`.
fn convolution_power(b: &HopfAlgebraData, character: &[Scalar], k: usize) -> Vec<Scalar> {
    let d = b.dim();
    let mut cur: Vec<Scalar> = (0..d).map(|i| b.counit.entry(0, i).clone()).collect();
    for _ in 0..k {
        cur = (0..d)
            .map(|e| {
                let mut acc = b.field.zero();
                for (pq, c) in b.comult.column(e) {
                    acc.add_assign_ref(&(&(c * &cur[pq / d]) * &character[pq % d]));
                }
                acc
            })
            .collect();
    }
    cur
}

/// Index of `g^k` for a group-like basis element `g`.
fn grouplike_power(b: &HopfAlgebraData, g: usize, k: usize) -> usize {
    let d = b.dim();
    let mut cur = b.unit.column(0)[0].0;
    for _ in 0..k {
        let col = b.mult.column(cur * d + g);
        assert!(col.len() == 1 && col[0].1.is_one(), "coaction element must be group-like");
        cur = col[0].0;
    }
    cur
}

/// `Λ(x₁, …, x_n)` with odd primitive generators: `b·x = χ(b)x`, `δ(x) = g ⊗ x`.
///
/// Basis: subsets of generators by bitmask, ordered as integers.
pub fn build_exterior_algebra(b: &HopfAlgebraData, n: usize, character: &[Scalar], grouplike: usize, name: &str) -> Result<BraidedHopfAlgebra> {
    assert!(n >= 1);
    let f = b.field;
    let d = 1usize << n;
    let labels: Vec<String> = (0..d)
        .map(|s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..n).filter(|i| s >> i & 1 == 1).map(|i| if n == 1 { "x".to_string() } else { format!("x{}", i + 1) }).collect()
            }
        })
        .collect();
    let h = BasedSpace::labelled(name, labels);
    let legs = vec![h.clone()];
    let bh: Vec<Space> = vec![b.carrier.clone(), h.clone()];
    let powers: Vec<Vec<Scalar>> = (0..=n).map(|k| convolution_power(b, character, k)).collect();
    let pop = |s: usize| s.count_ones() as usize;
    let action = LinMap::from_fn(f, bh.clone(), legs.clone(), |r, c| {
        let (bk, s) = (c / d, c % d);
        if r == s {
            powers[pop(s)][bk].clone()
        } else {
            f.zero()
        }
    });
    let coaction = LinMap::from_columns(
        f,
        legs.clone(),
        bh,
        &(0..d).map(|s| vec![(grouplike_power(b, grouplike, pop(s)) * d + s, f.one())]).collect::<Vec<_>>(),
    );
    let module = YDModule::new(name, b, legs.clone(), action, coaction)?;
    let mult_cols: Vec<Vec<(usize, Scalar)>> = (0..d * d)
        .map(|c| {
            let (s, t) = (c / d, c % d);
            if s & t != 0 {
                return vec![];
            }
            let inversions: u32 = (0..n).filter(|i| s >> i & 1 == 1).map(|i| (t & ((1 << i) - 1)).count_ones()).sum();
            vec![(s | t, f.int(if inversions.is_multiple_of(2) { 1 } else { -1 }))]
        })
        .collect();
    let mult = LinMap::from_columns(f, vec![h.clone(), h.clone()], legs.clone(), &mult_cols);
    let unit = LinMap::from_columns(f, vec![], legs.clone(), &[vec![(0, f.one())]]);
    let factor = |s: usize| -> Factor {
        match s.count_ones() {
            0 => Factor::Unit,
            1 => Factor::Generator,
            _ => {
                let low = s & s.wrapping_neg();
                Factor::Product {
                    gen: low,
                    rest: s ^ low,
                    scalar: f.one(),
                }
            }
        }
    };
    let gens: Vec<usize> = (0..n).map(|i| 1 << i).collect();
    let gen_comult: HashMap<usize, Vec<(usize, Scalar)>> = gens
        .iter()
        .map(|&x| (x, vec![(x * d, f.one()), (x, f.one())]))
        .collect();
    let gen_counit: HashMap<usize, Scalar> = gens.iter().map(|&x| (x, f.zero())).collect();
    let gen_antipode: HashMap<usize, Vec<(usize, Scalar)>> = gens.iter().map(|&x| (x, vec![(x, f.int(-1))])).collect();
    let ext = GeneratorExtension {
        module: &module,
        mult: &mult,
        unit_index: 0,
        factor: &factor,
        gen_comult: &gen_comult,
        gen_counit: &gen_counit,
        gen_antipode: &gen_antipode,
    };
    BraidedHopfAlgebra {
        name: name.to_string(),
        comult: ext.comult()?,
        counit: ext.counit(),
        antipode: ext.antipode()?,
        antipode_inv: None,
        mult,
        unit,
        module,
        truncation: None,
    }
    .with_antipode_inverse()
}

/// The odd exterior algebra over `kZ₂`: `g` acts by `-1`, `δ(xᵢ) = g ⊗ xᵢ`.
pub fn super_exterior(b: &HopfAlgebraData, n: usize, name: &str) -> Result<BraidedHopfAlgebra> {
    let f = b.field;
    build_exterior_algebra(b, n, &[f.one(), f.int(-1)], 1, name)
}

/// Graded line `k·t^0 ⊕ … ⊕ k·t^N` with labels `t^n`.
pub fn graded_line(name: &str, var: &str, n: usize) -> GradedSpace {
    GradedSpace::new(
        name,
        (0..=n)
            .map(|d| {
                vec![match d {
                    0 => "1".to_string(),
                    1 => var.to_string(),
                    _ => format!("{var}^{d}"),
                }]
            })
            .collect(),
    )
}

/// `k[x]` with `x` primitive over the trivial base, truncated at degree `n`.
///
/// `Δ(xⁿ) = Σ C(n,k) xᵏ ⊗ xⁿ⁻ᵏ`, `S(xⁿ) = (-1)ⁿ xⁿ`.
pub fn build_polynomial_hopf(b: &HopfAlgebraData, n: usize, name: &str, var: &str) -> Result<BraidedHopfAlgebra> {
    let f = b.field;
    let p = f.characteristic();
    if p != 0 && (p as usize) <= n {
        return Err(Error::Characteristic { characteristic: p, bound: n });
    }
    let g = graded_line(name, var, n);
    let h = g.flatten();
    let legs = vec![h.clone()];
    let bh = vec![b.carrier.clone(), h.clone()];
    let d = n + 1;
    let action = LinMap::from_fn(f, bh.clone(), legs.clone(), |r, c| {
        let (bk, x) = (c / d, c % d);
        if r == x {
            b.counit.entry(0, bk).clone()
        } else {
            f.zero()
        }
    });
    let unit_b = b.unit.column(0)[0].0;
    let coaction = LinMap::from_columns(f, legs.clone(), bh, &(0..d).map(|x| vec![(unit_b * d + x, f.one())]).collect::<Vec<_>>());
    let module = YDModule::new(name, b, legs.clone(), action, coaction)?;
    let one = f.one();
    let zero = f.zero();
    let mult_blocks = GradedMap::new(
        f,
        vec![g.clone(), g.clone()],
        vec![g.clone()],
        Arc::new(move |out: &[usize], inp: &[usize]| vec![vec![if out[0] == inp[0] + inp[1] { one.clone() } else { zero.clone() }]]),
    );
    let comult_blocks = GradedMap::new(
        f,
        vec![g.clone()],
        vec![g.clone(), g.clone()],
        Arc::new(move |out: &[usize], inp: &[usize]| {
            let v = if out[0] + out[1] == inp[0] { binomial(f, inp[0], out[0]) } else { f.zero() };
            vec![vec![v]]
        }),
    );
    let relabel2 = |m: LinMap, dom: Vec<Space>, cod: Vec<Space>| m.relabel(dom, cod);
    let mult = relabel2(mult_blocks.to_linmap()?, vec![h.clone(), h.clone()], legs.clone())?;
    let comult = relabel2(comult_blocks.to_linmap()?, legs.clone(), vec![h.clone(), h.clone()])?;
    let unit = LinMap::from_columns(f, vec![], legs.clone(), &[vec![(0, f.one())]]);
    let counit = LinMap::from_columns(f, legs.clone(), vec![], &(0..d).map(|x| if x == 0 { vec![(0, f.one())] } else { vec![] }).collect::<Vec<_>>());
    let antipode = LinMap::from_fn(f, legs.clone(), legs.clone(), |r, c| {
        if r != c {
            f.zero()
        } else if c % 2 == 0 {
            f.one()
        } else {
            f.int(-1)
        }
    });
    Ok(BraidedHopfAlgebra {
        name: name.to_string(),
        module,
        mult,
        unit,
        comult,
        counit,
        antipode_inv: Some(antipode.clone()),
        antipode,
        truncation: Some(n),
    })
}

pub fn binomial(f: Field, n: usize, k: usize) -> Scalar {
    if k > n {
        return f.zero();
    }
    let mut acc = f.one();
    for i in 0..k {
        acc = &acc * &f.int((n - i) as i64);
        acc = &acc * &f.int((i + 1) as i64).inv().expect("i+1 is invertible below the characteristic");
    }
    acc
}

/// `k[x]/(x^{n})` over `kZ_m` with `g·x = q x`, `δ(x) = g ⊗ x` and
/// `x` primitive; `x^{n} = 0` must be compatible with `Δ`, which holds
/// when `q` is a primitive root of unity of order `n`.
pub fn build_quantum_line(b: &HopfAlgebraData, n: usize, q: Scalar, name: &str) -> Result<BraidedHopfAlgebra> {
    let f = b.field;
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let h = BasedSpace::labelled(name, labels);
    let legs = vec![h.clone()];
    let bh = vec![b.carrier.clone(), h.clone()];
    // g = basis 1 of the cyclic group algebra
    let mut character = vec![f.zero(); b.dim()];
    let mut power = f.one();
    for slot in character.iter_mut() {
        *slot = power.clone();
        power = &power * &q;
    }
    let powers: Vec<Vec<Scalar>> = (0..n).map(|k| convolution_power(b, &character, k)).collect();
    let action = LinMap::from_fn(f, bh.clone(), legs.clone(), |r, c| {
        let (bk, x) = (c / n, c % n);
        if r == x {
            powers[x][bk].clone()
        } else {
            f.zero()
        }
    });
    let coaction = LinMap::from_columns(
        f,
        legs.clone(),
        bh,
        &(0..n).map(|x| vec![(grouplike_power(b, 1, x) * n + x, f.one())]).collect::<Vec<_>>(),
    );
    let module = YDModule::new(name, b, legs.clone(), action, coaction)?;
    let mult = LinMap::from_columns(
        f,
        vec![h.clone(), h.clone()],
        legs.clone(),
        &(0..n * n)
            .map(|c| if c / n + c % n < n { vec![(c / n + c % n, f.one())] } else { vec![] })
            .collect::<Vec<_>>(),
    );
    let unit = LinMap::from_columns(f, vec![], legs.clone(), &[vec![(0, f.one())]]);
    let factor = |k: usize| -> Factor {
        match k {
            0 => Factor::Unit,
            1 => Factor::Generator,
            _ => Factor::Product {
                gen: 1,
                rest: k - 1,
                scalar: f.one(),
            },
        }
    };
    let gen_comult = HashMap::from([(1, vec![(n, f.one()), (1, f.one())])]);
    let gen_counit = HashMap::from([(1, f.zero())]);
    let gen_antipode = HashMap::from([(1, vec![(1, f.int(-1))])]);
    let ext = GeneratorExtension {
        module: &module,
        mult: &mult,
        unit_index: 0,
        factor: &factor,
        gen_comult: &gen_comult,
        gen_counit: &gen_counit,
        gen_antipode: &gen_antipode,
    };
    BraidedHopfAlgebra {
        name: name.to_string(),
        comult: ext.comult()?,
        counit: ext.counit(),
        antipode: ext.antipode()?,
        antipode_inv: None,
        mult,
        unit,
        module,
        truncation: None,
    }
    .with_antipode_inverse()
}

/// The trivial braided Hopf algebra `k`.
pub fn trivial_braided(b: &HopfAlgebraData, name: &str) -> BraidedHopfAlgebra {
    let f = b.field;
    let h = BasedSpace::labelled(name, vec!["1".into()]);
    let legs = vec![h.clone()];
    let bh = vec![b.carrier.clone(), h.clone()];
    let action = LinMap::from_fn(f, bh.clone(), legs.clone(), |_, c| b.counit.entry(0, c).clone());
    let unit_b = b.unit.column(0)[0].0;
    let coaction = LinMap::from_columns(f, legs.clone(), bh, &[vec![(unit_b, f.one())]]);
    let module = YDModule::new(name, b, legs.clone(), action, coaction).expect("shapes agree");
    let id = LinMap::identity(f, legs.clone());
    BraidedHopfAlgebra {
        name: name.to_string(),
        module,
        mult: LinMap::from_fn(f, vec![h.clone(), h.clone()], legs.clone(), |_, _| f.one()),
        unit: LinMap::from_fn(f, vec![], legs.clone(), |_, _| f.one()),
        comult: LinMap::from_fn(f, legs.clone(), vec![h.clone(), h.clone()], |_, _| f.one()),
        counit: LinMap::from_fn(f, legs.clone(), vec![], |_, _| f.one()),
        antipode: id.clone(),
        antipode_inv: Some(id),
        truncation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_hopf::{cyclic_group_algebra, trivial_hopf};
    use crate::report::Status;

    const Q: Field = Field::Rational;

    fn ok(items: &[ReportItem]) -> bool {
        for i in items.iter().filter(|i| i.status != Status::Pass) {
            eprintln!("{}: {:?} {:?}", i.id, i.status, i.witness);
        }
        items.iter().all(ReportItem::passed)
    }

    #[test]
    fn super_line_passes_and_is_symmetric() {
        let b = cyclic_group_algebra(Q, 2);
        let h = super_exterior(&b, 1, "H").unwrap();
        assert!(ok(&check_braided_hopf(&b, &h)));
        assert!(is_symmetric(&h).unwrap());
        assert!(is_quantum_cocommutative(&h).unwrap());
        // S(x) = -x, Δ(x) = x ⊗ 1 + 1 ⊗ x
        assert_eq!(h.antipode.entry(1, 1), &Q.int(-1));
        assert!(h.comult.entry(2, 1).is_one() && h.comult.entry(1, 1).is_one());
    }

    /// `Δ(x)Δ(x) = x² ⊗ 1 + (1 + q) x ⊗ x + 1 ⊗ x²` in the braided tensor
    /// algebra; it vanishes only for `q = -1`.
    #[test]
    fn trivially_braided_exterior_fails_bialgebra_law() {
        let b = cyclic_group_algebra(Q, 2);
        let h = super_exterior(&b, 1, "H").unwrap();
        let trivial = crate::yd::YDModule::new(
            "H",
            &b,
            h.module.legs.clone(),
            h.module.action.clone(),
            LinMap::from_columns(
                Q,
                h.module.legs.clone(),
                vec![b.carrier.clone(), h.carrier().clone()],
                &[vec![(0, Q.one())], vec![(1, Q.one())]],
            ),
        )
        .unwrap();
        let broken = BraidedHopfAlgebra { module: trivial, ..h };
        let items = check_braided_hopf(&b, &broken);
        let law = items.iter().find(|i| i.id.ends_with("-bialgebra")).unwrap();
        assert_eq!(law.status, Status::Fail);
        assert!(law.witness.as_ref().unwrap().contains("x ⊗ x"));
    }

    #[test]
    fn super_plane_structure() {
        let b = cyclic_group_algebra(Q, 2);
        let h = super_exterior(&b, 2, "H").unwrap();
        assert_eq!(h.dim(), 4);
        assert!(ok(&check_braided_hopf(&b, &h)));
        // x2 x1 = -x1x2
        assert_eq!(h.mult.entry(3, 2 * 4 + 1), &Q.int(-1));
        assert!(h.mult.entry(3, 4 + 2).is_one());
        // ε(xᵢ) = 0
        assert!(h.counit.entry(0, 1).is_zero() && h.counit.entry(0, 2).is_zero());
        assert!(is_quantum_cocommutative(&h).unwrap());
        let s2 = h.antipode.compose(&h.antipode).unwrap();
        assert!(s2.equal(&LinMap::identity(Q, h.legs())).unwrap());
    }

    #[test]
    fn polynomial_binomials() {
        let k = trivial_hopf(Q);
        let h = build_polynomial_hopf(&k, 4, "H", "x").unwrap();
        // Δ(x²) = x² ⊗ 1 + 2 x ⊗ x + 1 ⊗ x²
        let d = 5;
        assert!(h.comult.entry(2 * d, 2).is_one());
        assert_eq!(h.comult.entry(d + 1, 2), &Q.int(2));
        assert!(h.comult.entry(2, 2).is_one());
        assert_eq!(h.antipode.entry(1, 1), &Q.int(-1));
        assert!(ok(&check_braided_hopf(&k, &h)));
        assert!(is_quantum_cocommutative(&h).unwrap());
        // independent Pascal recursion for every binomial
        let mut row = vec![1i64];
        for n in 0..=4 {
            for (j, c) in row.iter().enumerate() {
                assert_eq!(h.comult.entry(j * d + (n - j), n), &Q.int(*c));
            }
            let mut next = vec![1i64; n + 2];
            for j in 1..=n {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
    }

    #[test]
    fn polynomial_rejects_small_characteristic() {
        let k = trivial_hopf(Field::Prime(5));
        assert!(matches!(build_polynomial_hopf(&k, 5, "H", "x"), Err(Error::Characteristic { .. })));
        assert!(build_polynomial_hopf(&k, 4, "H", "x").is_ok());
    }

    #[test]
    fn quantum_line_is_not_symmetric() {
        let f = Field::Prime(5);
        let b = cyclic_group_algebra(f, 4);
        let h = build_quantum_line(&b, 4, f.int(2), "H").unwrap();
        assert!(ok(&check_braided_hopf(&b, &h)));
        assert!(!is_symmetric(&h).unwrap());
        assert!(matches!(dual_braided_hopf(&b, &h, "H*"), Err(Error::NonSymmetric(_))));
    }

    #[test]
    fn duals_of_exterior_algebras() {
        let b = cyclic_group_algebra(Q, 2);
        for n in 1..=2 {
            let h = super_exterior(&b, n, "H").unwrap();
            let d = dual_braided_hopf(&b, &h, "H*").unwrap();
            assert!(ok(&check_braided_hopf(&b, &d)));
            let dd = dual_braided_hopf(&b, &d, "H**").unwrap();
            assert_eq!(dd.mult.to_nested(), h.mult.to_nested());
            assert_eq!(dd.comult.to_nested(), h.comult.to_nested());
            assert_eq!(dd.antipode.to_nested(), h.antipode.to_nested());
        }
    }

    #[test]
    fn graded_dual_is_divided_powers() {
        let k = trivial_hopf(Q);
        let h = build_polynomial_hopf(&k, 4, "H", "x").unwrap();
        let d = dual_braided_hopf(&k, &h, "H*").unwrap();
        assert!(ok(&check_braided_hopf(&k, &d)));
        // (x*)(x*) = 2 (x²)*
        assert_eq!(d.mult.entry(2, 5 + 1), &Q.int(2));
        assert_eq!(d.carrier().degrees, h.carrier().degrees);
    }

    #[test]
    fn trivial_braided_passes() {
        let k = trivial_hopf(Q);
        let h = trivial_braided(&k, "H");
        assert!(ok(&check_braided_hopf(&k, &h)));
        let d = dual_braided_hopf(&k, &h, "H*").unwrap();
        assert_eq!(d.dim(), 1);
    }
}
