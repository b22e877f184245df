//! Left-left Yetter-Drinfeld modules over a base Hopf algebra `B`.
//!
//! Conventions: `C(v ⊗ w) = v₋₁·w ⊗ v₀`, the tensor product carries the
//! diagonal action and the coaction `v₋₁w₋₁ ⊗ v₀ ⊗ w₀`, and
//! `δ(b·v) = b₁v₋₁S(b₃) ⊗ b₂·v₀`.

use crate::base_hopf::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::ReportItem;
use crate::scalar::{Field, Scalar};
use crate::space::{total_dim, BasedSpace, Space};
use crate::tensor::{check_equal, Chain, DegreeBound, Witness};

/// A Yetter-Drinfeld module whose carrier may span several legs.
#[derive(Clone, Debug)]
pub struct YDModule {
    pub name: String,
    pub base: Space,
    pub legs: Vec<Space>,
    /// `B ⊗ legs -> legs`
    pub action: LinMap,
    /// `legs -> B ⊗ legs`
    pub coaction: LinMap,
}

impl YDModule {
    pub fn new(name: impl Into<String>, base: &HopfAlgebraData, legs: Vec<Space>, action: LinMap, coaction: LinMap) -> Result<YDModule> {
        let with_b: Vec<Space> = std::iter::once(base.carrier.clone()).chain(legs.iter().cloned()).collect();
        let expect = |m: &LinMap, dom: &[Space], cod: &[Space]| -> Result<()> {
            if crate::space::same_legs(m.domain(), dom) && crate::space::same_legs(m.codomain(), cod) {
                Ok(())
            } else {
                Err(Error::SignatureMismatch {
                    left: format!("{} -> {}", crate::space::signature(dom), crate::space::signature(cod)),
                    right: format!(
                        "{} -> {}",
                        crate::space::signature(m.domain()),
                        crate::space::signature(m.codomain())
                    ),
                })
            }
        };
        expect(&action, &with_b, &legs)?;
        expect(&coaction, &legs, &with_b)?;
        Ok(YDModule {
            name: name.into(),
            base: base.carrier.clone(),
            legs,
            action,
            coaction,
        })
    }

    pub fn field(&self) -> Field {
        self.action.field()
    }

    pub fn dim(&self) -> usize {
        total_dim(&self.legs)
    }

    pub fn arity(&self) -> usize {
        self.legs.len()
    }

    /// The same module on new legs of equal total dimension.
    pub fn relabel(&self, name: impl Into<String>, legs: Vec<Space>) -> Result<YDModule> {
        let with_b: Vec<Space> = std::iter::once(self.base.clone()).chain(legs.iter().cloned()).collect();
        Ok(YDModule {
            name: name.into(),
            base: self.base.clone(),
            action: self.action.relabel(with_b.clone(), legs.clone())?,
            coaction: self.coaction.relabel(legs.clone(), with_b)?,
            legs,
        })
    }
}

/// The unit object `k`: `b·1 = ε(b)`, `δ(1) = 1 ⊗ 1`.
pub fn trivial_module(b: &HopfAlgebraData) -> YDModule {
    YDModule::new("k", b, vec![], b.counit.clone(), b.unit.clone()).expect("counit and unit have the right shape")
}

fn legs_of(m: &YDModule) -> Vec<Space> {
    m.legs.clone()
}

fn with_base(b: &HopfAlgebraData, legs: &[Space]) -> Vec<Space> {
    std::iter::once(b.carrier.clone()).chain(legs.iter().cloned()).collect()
}

/// Module, comodule and compatibility axioms.
pub fn check_yd(b: &HopfAlgebraData, v: &YDModule, bound: DegreeBound) -> Vec<ReportItem> {
    let p = format!("yd-{}", v.name);
    vec![
        ReportItem::from_check(&format!("{p}-action-associative"), "a·(b·v) = (ab)·v", action_associative(b, v, bound)),
        ReportItem::from_check(&format!("{p}-action-unital"), "1·v = v", action_unital(b, v, bound)),
        ReportItem::from_check(
            &format!("{p}-coaction-coassociative"),
            "(Δ ⊗ id)δ = (id ⊗ δ)δ",
            coaction_coassociative(b, v, bound),
        ),
        ReportItem::from_check(&format!("{p}-coaction-counital"), "(ε ⊗ id)δ = id", coaction_counital(b, v, bound)),
        ReportItem::from_check(
            &format!("{p}-compatibility"),
            "δ(b·v) = b₁v₋₁S(b₃) ⊗ b₂·v₀",
            yd_compatibility(b, v, bound),
        ),
    ]
}

pub fn action_associative(b: &HopfAlgebraData, v: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let f = b.field;
    let dom: Vec<Space> = [b.carrier.clone(), b.carrier.clone()].into_iter().chain(legs_of(v)).collect();
    let lhs = Chain::new(f, dom.clone()).at(1, &v.action)?.then(&v.action)?;
    let rhs = Chain::new(f, dom).at(0, &b.mult)?.then(&v.action)?;
    check_equal(&lhs, &rhs, bound)
}

pub fn action_unital(b: &HopfAlgebraData, v: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let f = b.field;
    let lhs = Chain::new(f, legs_of(v)).at(0, &b.unit)?.then(&v.action)?;
    check_equal(&lhs, &Chain::new(f, legs_of(v)), bound)
}

pub fn coaction_coassociative(b: &HopfAlgebraData, v: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let f = b.field;
    let lhs = Chain::new(f, legs_of(v)).then(&v.coaction)?.at(0, &b.comult)?;
    let rhs = Chain::new(f, legs_of(v)).then(&v.coaction)?.at(1, &v.coaction)?;
    check_equal(&lhs, &rhs, bound)
}

pub fn coaction_counital(b: &HopfAlgebraData, v: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let f = b.field;
    let lhs = Chain::new(f, legs_of(v)).then(&v.coaction)?.at(0, &b.counit)?;
    check_equal(&lhs, &Chain::new(f, legs_of(v)), bound)
}

pub fn yd_compatibility(b: &HopfAlgebraData, v: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let f = b.field;
    let n = v.arity();
    let dom = with_base(b, &v.legs);
    let lhs = Chain::new(f, dom.clone()).then(&v.action)?.then(&v.coaction)?;
    // b1 b2 b3 v-1 v0 -> b1 v-1 S(b3) b2 v0
    let mut perm = vec![0, 3, 2, 1];
    perm.extend(4..4 + n);
    let rhs = Chain::new(f, dom)
        .at(0, &b.comult)?
        .at(0, &b.comult)?
        .at(3, &v.coaction)?
        .at(2, &b.antipode)?
        .permute(&perm)
        .at(0, &b.mult)?
        .at(0, &b.mult)?
        .at(1, &v.action)?;
    check_equal(&lhs, &rhs, bound)
}

/// `C_{V,W}(v ⊗ w) = v₋₁·w ⊗ v₀`.
pub fn braiding(v: &YDModule, w: &YDModule) -> Result<Chain> {
    let (nv, nw) = (v.arity(), w.arity());
    let dom: Vec<Space> = v.legs.iter().chain(&w.legs).cloned().collect();
    Chain::new(v.field(), dom)
        .at(0, &v.coaction)?
        .flip(1, nv, nw)
        .at(0, &w.action)
}

/// `C⁻¹_{V,W}(w ⊗ v) = v₀ ⊗ S⁻¹(v₋₁)·w`.
pub fn braiding_inverse(b: &HopfAlgebraData, v: &YDModule, w: &YDModule) -> Result<Chain> {
    let (nv, nw) = (v.arity(), w.arity());
    let dom: Vec<Space> = w.legs.iter().chain(&v.legs).cloned().collect();
    Ok(Chain::new(v.field(), dom)
        .at(nw, &v.coaction)?
        .at(nw, b.antipode_inverse()?)?
        .flip(0, nw, 1)
        .at(0, &w.action)?
        .flip(0, nw, nv))
}

pub fn braiding_matrix(v: &YDModule, w: &YDModule) -> Result<LinMap> {
    Ok(braiding(v, w)?.materialize())
}

/// `C_{W,V} C_{V,W} = id` on `V ⊗ W`.
pub fn symmetric_pair_witness(v: &YDModule, w: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let c = braiding(v, w)?.then_chain(&braiding(w, v)?)?;
    check_equal(&c, &Chain::new(v.field(), c.domain().to_vec()), bound)
}

pub fn is_symmetric_pair(v: &YDModule, w: &YDModule) -> Result<bool> {
    Ok(symmetric_pair_witness(v, w, DegreeBound(None))?.is_none())
}

/// `V ⊗ W` with legs concatenated.
pub fn tensor_module(b: &HopfAlgebraData, v: &YDModule, w: &YDModule) -> Result<YDModule> {
    let f = b.field;
    let (nv, _) = (v.arity(), w.arity());
    let legs: Vec<Space> = v.legs.iter().chain(&w.legs).cloned().collect();
    let action = Chain::new(f, with_base(b, &legs))
        .at(0, &b.comult)?
        .flip(1, 1, nv)
        .at(0, &v.action)?
        .at(nv, &w.action)?
        .materialize();
    let coaction = Chain::new(f, legs.clone())
        .at(0, &v.coaction)?
        .at(1 + nv, &w.coaction)?
        .flip(1, nv, 1)
        .at(0, &b.mult)?
        .materialize();
    YDModule::new(format!("{}⊗{}", v.name, w.name), b, legs, action, coaction)
}

/// `Hom(V, W) ≅ W ⊗ V*` on a single leg; basis `E_{w,x}` (sending `e_x` to
/// `e_w`) sits at index `w·dim V + x`.
///
/// `(b·f)(x) = b₂·f(S(b₁)x)` and `f₋₁ f₀(x) = f(x₀)₋₁ S⁻¹(x₋₁) ⊗ f(x₀)₀`.
/// On graded carriers `E_{w,x}` has degree `deg w` and probe `deg x`.
pub fn hom_module(b: &HopfAlgebraData, v: &YDModule, w: &YDModule, name: &str) -> Result<YDModule> {
    let f = b.field;
    let s_inv = b.antipode_inverse()?;
    let (dv, dw, db) = (v.dim(), w.dim(), b.dim());
    let mut labels = Vec::with_capacity(dv * dw);
    let mut degrees = Vec::with_capacity(dv * dw);
    let mut probe = Vec::with_capacity(dv * dw);
    for wi in 0..dw {
        for xi in 0..dv {
            let wl = crate::space::basis_label(wi, &w.legs);
            let xl = crate::space::basis_label(xi, &v.legs);
            labels.push(if w.legs.is_empty() { format!("{xl}*") } else { format!("{wl}⊗{xl}*") });
            degrees.push(crate::space::basis_degree(wi, &w.legs));
            probe.push(crate::space::basis_degree(xi, &v.legs));
        }
    }
    let carrier = BasedSpace::with_probe(name, labels, degrees, probe);
    // action matrices of single basis elements
    let act_v = |bk: usize| -> Vec<Vec<Scalar>> {
        (0..dv)
            .map(|r| (0..dv).map(|c| v.action.entry(r, bk * dv + c).clone()).collect())
            .collect()
    };
    let act_w = |bk: usize| -> Vec<Vec<Scalar>> {
        (0..dw)
            .map(|r| (0..dw).map(|c| w.action.entry(r, bk * dw + c).clone()).collect())
            .collect()
    };
    // S(b_p) as a combination, then its action on V
    let s_act_v: Vec<Vec<Vec<Scalar>>> = (0..db)
        .map(|p| {
            let mut m = vec![vec![f.zero(); dv]; dv];
            for (k, s) in b.antipode.column(p) {
                let a = act_v(*k);
                for r in 0..dv {
                    for c in 0..dv {
                        m[r][c].add_assign_ref(&(s * &a[r][c]));
                    }
                }
            }
            m
        })
        .collect();
    let aw: Vec<Vec<Vec<Scalar>>> = (0..db).map(act_w).collect();
    let hom_dim = dv * dw;
    let mut action_cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); db * hom_dim];
    for bk in 0..db {
        for (pq, c) in b.comult.column(bk) {
            let (p, q) = (pq / db, pq % db);
            for wi in 0..dw {
                for xp in 0..dv {
                    // A_W(b_q) E_{wi,xp} A_V(S b_p)
                    let col = &mut action_cols[bk * hom_dim + wi * dv + xp];
                    for w2 in 0..dw {
                        let a = &aw[q][w2][wi];
                        if a.is_zero() {
                            continue;
                        }
                        for x in 0..dv {
                            let s = &s_act_v[p][xp][x];
                            if !s.is_zero() {
                                col.push((w2 * dv + x, &(c * a) * s));
                            }
                        }
                    }
                }
            }
        }
    }
    let legs = vec![carrier.clone()];
    let action = LinMap::from_columns(f, with_base(b, &legs), legs.clone(), &action_cols);

    // products b_p S⁻¹(b_k)
    let prod_sinv: Vec<Vec<Vec<(usize, Scalar)>>> = (0..db)
        .map(|p| {
            (0..db)
                .map(|k| {
                    let mut acc = vec![f.zero(); db];
                    for (kk, s) in s_inv.column(k) {
                        for (r, m) in b.mult.column(p * db + kk) {
                            acc[*r].add_assign_ref(&(s * m));
                        }
                    }
                    acc.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
                })
                .collect()
        })
        .collect();
    let mut coaction_cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); hom_dim];
    for wi in 0..dw {
        for xp in 0..dv {
            let col = &mut coaction_cols[wi * dv + xp];
            for x in 0..dv {
                // δ_V(e_x) terms landing on e_xp
                for (kl, dvx) in v.coaction.column(x) {
                    let (k, l) = (kl / dv, kl % dv);
                    if l != xp {
                        continue;
                    }
                    for (pq, dww) in w.coaction.column(wi) {
                        let (p, q) = (pq / dw, pq % dw);
                        let coef = dvx * dww;
                        for (r, m) in &prod_sinv[p][k] {
                            col.push((r * hom_dim + q * dv + x, &coef * m));
                        }
                    }
                }
            }
        }
    }
    let coaction = LinMap::from_columns(f, legs.clone(), with_base(b, &legs), &coaction_cols);
    YDModule::new(name, b, legs, action, coaction)
}

/// `V* = Hom(V, k)`, graded degreewise: `x*` has the degree of `x`.
pub fn dual_module(b: &HopfAlgebraData, v: &YDModule, name: &str) -> Result<YDModule> {
    let hom = hom_module(b, v, &trivial_module(b), name)?;
    let h = &hom.legs[0];
    let space = BasedSpace::graded(name, h.labels.clone(), h.probe.clone());
    hom.relabel(name, vec![space])
}

/// Evaluation `V* ⊗ V -> k`, `x* ⊗ y ↦ δ_{xy}`.
pub fn evaluation(field: Field, dual: &Space, v: &[Space]) -> LinMap {
    let d = total_dim(v);
    let dom: Vec<Space> = std::iter::once(dual.clone()).chain(v.iter().cloned()).collect();
    LinMap::from_fn(field, dom, vec![], |_, c| {
        if c / d == c % d {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Coevaluation `k -> V ⊗ V*`, `1 ↦ Σ e_x ⊗ x*`.
pub fn coevaluation(field: Field, v: &[Space], dual: &Space) -> LinMap {
    let d = total_dim(v);
    let cod: Vec<Space> = v.iter().cloned().chain(std::iter::once(dual.clone())).collect();
    LinMap::from_fn(field, vec![], cod, |r, _| {
        if r / d == r % d {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Whether `f: V -> W` commutes with actions and coactions.
pub fn yd_morphism_witness(b: &HopfAlgebraData, f: &Chain, v: &YDModule, w: &YDModule, bound: DegreeBound) -> Result<Option<Witness>> {
    let fld = b.field;
    let lhs = Chain::new(fld, with_base(b, &v.legs)).then(&v.action)?.then_chain(f)?;
    let rhs = Chain::new(fld, with_base(b, &v.legs)).at_chain(1, f)?.then(&w.action)?;
    if let Some(wit) = check_equal(&lhs, &rhs, bound)? {
        return Ok(Some(wit));
    }
    let lhs = Chain::new(fld, v.legs.clone()).then(&v.coaction)?.at_chain(1, f)?;
    let rhs = Chain::new(fld, v.legs.clone()).then_chain(f)?.then(&w.coaction)?;
    check_equal(&lhs, &rhs, bound)
}

pub fn is_yd_morphism(b: &HopfAlgebraData, f: &LinMap, v: &YDModule, w: &YDModule) -> Result<bool> {
    Ok(yd_morphism_witness(b, &Chain::from_map(f), v, w, DegreeBound(None))?.is_none())
}

/// Product in `B^{⊗n}` of two elements given as dense vectors.
fn tensor_power_product(b: &HopfAlgebraData, n: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = b.dim();
    let field = b.field;
    let total = d.pow(n as u32);
    let mut out = vec![field.zero(); total];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            // componentwise product, built leg by leg
            let mut acc: Vec<(usize, Scalar)> = vec![(0, xi * yj)];
            for leg in 0..n {
                let shift = d.pow((n - 1 - leg) as u32);
                let (a, c) = ((i / shift) % d, (j / shift) % d);
                let mut next = Vec::new();
                for (idx, v) in &acc {
                    for (r, m) in b.mult.column(a * d + c) {
                        next.push((idx * d + r, v * m));
                    }
                }
                acc = next;
            }
            for (idx, v) in acc {
                out[idx].add_assign_ref(&v);
            }
        }
    }
    out
}

/// Validates an R-matrix: invertibility, `(Δ ⊗ id)R = R₁₃R₂₃`,
/// `(id ⊗ Δ)R = R₁₃R₁₂` and `Δᵒᵖ(b)R = RΔ(b)`.
pub fn check_quasitriangular(b: &HopfAlgebraData, r: &[Scalar]) -> Result<()> {
    let d = b.dim();
    let f = b.field;
    let bb = vec![b.carrier.clone(), b.carrier.clone()];
    if r.len() != d * d {
        return Err(Error::InvalidQuasitriangular(format!("R has {} entries, expected {}", r.len(), d * d)));
    }
    let bad = |what: &str| Err(Error::InvalidQuasitriangular(what.to_string()));
    let left_mult = LinMap::from_fn(f, bb.clone(), bb.clone(), |row, col| {
        let mut e = vec![f.zero(); d * d];
        e[col] = f.one();
        tensor_power_product(b, 2, r, &e)[row].clone()
    });
    if left_mult.rank() < d * d {
        return bad("R is not invertible");
    }
    let one = b.unit.column(0).to_vec();
    let embed = |pos: [usize; 2]| -> Vec<Scalar> {
        // R placed on legs pos[0], pos[1] of B^{⊗3}, unit on the other
        let other = 3 - pos[0] - pos[1];
        let mut out = vec![f.zero(); d * d * d];
        for (idx, v) in r.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (u, uv) in &one {
                let mut legs = [0; 3];
                legs[pos[0]] = idx / d;
                legs[pos[1]] = idx % d;
                legs[other] = *u;
                out[(legs[0] * d + legs[1]) * d + legs[2]].add_assign_ref(&(v * uv));
            }
        }
        out
    };
    let r12 = embed([0, 1]);
    let r13 = embed([0, 2]);
    let r23 = embed([1, 2]);
    let delta_left = b.comult.tensor(&LinMap::identity(f, vec![b.carrier.clone()])).apply(r);
    if delta_left != tensor_power_product(b, 3, &r13, &r23) {
        return bad("(Δ ⊗ id)R ≠ R13 R23");
    }
    let delta_right = LinMap::identity(f, vec![b.carrier.clone()]).tensor(&b.comult).apply(r);
    if delta_right != tensor_power_product(b, 3, &r13, &r12) {
        return bad("(id ⊗ Δ)R ≠ R13 R12");
    }
    let flip = LinMap::swap(f, std::slice::from_ref(&b.carrier), std::slice::from_ref(&b.carrier));
    for k in 0..d {
        let mut e = vec![f.zero(); d];
        e[k] = f.one();
        let delta = b.comult.apply(&e);
        let delta_op = flip.apply(&delta);
        if tensor_power_product(b, 2, &delta_op, r) != tensor_power_product(b, 2, r, &delta) {
            return bad(&format!("Δᵒᵖ(b)R ≠ RΔ(b) at b = {}", b.carrier.labels[k]));
        }
    }
    Ok(())
}

/// Turns a module over a quasitriangular `B` into a YD module with
/// `δ(v) = R⁽²⁾ ⊗ R⁽¹⁾·v`.
pub fn from_quasitriangular(b: &HopfAlgebraData, r: &[Scalar], name: &str, legs: Vec<Space>, action: LinMap) -> Result<YDModule> {
    check_quasitriangular(b, r)?;
    let d = b.dim();
    let f = b.field;
    let dv = total_dim(&legs);
    let cols: Vec<Vec<(usize, Scalar)>> = (0..dv)
        .map(|x| {
            let mut col = Vec::new();
            for (idx, rv) in r.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let (r1, r2) = (idx / d, idx % d);
                for (y, a) in action.column(r1 * dv + x) {
                    col.push((r2 * dv + y, rv * a));
                }
            }
            col
        })
        .collect();
    let coaction = LinMap::from_columns(f, legs.clone(), with_base(b, &legs), &cols);
    YDModule::new(name, b, legs, action, coaction)
}

/// A module concentrated in one group-like degree: `b·v = χ(b)v` and
/// `δ(v) = g ⊗ v`, given a character `χ` on basis elements.
pub fn one_dimensional(b: &HopfAlgebraData, name: &str, label: &str, character: &[Scalar], grouplike: usize) -> Result<YDModule> {
    let f = b.field;
    let v = BasedSpace::labelled(name, vec![label.to_string()]);
    let legs = vec![v];
    let action = LinMap::from_fn(f, with_base(b, &legs), legs.clone(), |_, c| character[c].clone());
    let coaction = LinMap::from_columns(f, legs.clone(), with_base(b, &legs), &[vec![(grouplike, f.one())]]);
    YDModule::new(name, b, legs, action, coaction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_hopf::{cyclic_group_algebra, sweedler_h4};
    use crate::report::Status;

    const Q: Field = Field::Rational;

    fn ok(items: &[ReportItem]) -> bool {
        for i in items.iter().filter(|i| i.status != Status::Pass) {
            eprintln!("{}: {:?}", i.id, i.witness);
        }
        items.iter().all(ReportItem::passed)
    }

    fn sign(b: &HopfAlgebraData, name: &str) -> YDModule {
        one_dimensional(b, name, name, &[Q.one(), Q.int(-1)], 1).unwrap()
    }

    /// kZ₂-module of dimension 2 with g acting diagonally as (1, -1) and
    /// graded accordingly.
    fn two_dim(b: &HopfAlgebraData) -> YDModule {
        let v = BasedSpace::labelled("V", vec!["v0".into(), "v1".into()]);
        let legs = vec![v];
        let action = LinMap::from_fn(Q, with_base(b, &legs), legs.clone(), |r, c| {
            let (g, x) = (c / 2, c % 2);
            if r != x {
                Q.zero()
            } else if g == 1 && x == 1 {
                Q.int(-1)
            } else {
                Q.one()
            }
        });
        let coaction = LinMap::from_columns(Q, legs.clone(), with_base(b, &legs), &[vec![(0, Q.one())], vec![(3, Q.one())]]);
        YDModule::new("V", b, legs, action, coaction).unwrap()
    }

    #[test]
    fn sign_module_braids_by_minus_one() {
        let b = cyclic_group_algebra(Q, 2);
        let x = sign(&b, "X");
        let y = sign(&b, "Y");
        assert!(ok(&check_yd(&b, &x, DegreeBound(None))));
        let c = braiding_matrix(&x, &y).unwrap();
        assert_eq!(c.entry(0, 0), &Q.int(-1));
        assert!(is_symmetric_pair(&x, &y).unwrap());
    }

    #[test]
    fn broken_compatibility_is_reported() {
        let b = sweedler_h4(Q);
        // trivial action with coaction by g violates the YD condition for x
        let v = one_dimensional(&b, "V", "v", &[Q.one(), Q.one(), Q.zero(), Q.zero()], 0).unwrap();
        assert!(ok(&check_yd(&b, &v, DegreeBound(None))));
        let bad = one_dimensional(&b, "W", "w", &[Q.one(), Q.int(-1), Q.zero(), Q.zero()], 0).unwrap();
        let items = check_yd(&b, &bad, DegreeBound(None));
        let compat = items.iter().find(|i| i.id.ends_with("compatibility")).unwrap();
        assert_eq!(compat.status, Status::Fail);
    }

    #[test]
    fn braiding_inverse_and_hexagons() {
        let b = cyclic_group_algebra(Q, 2);
        let u = two_dim(&b);
        let v = sign(&b, "X");
        let w = two_dim(&b).relabel("W", vec![BasedSpace::labelled("W", vec!["w0".into(), "w1".into()])]).unwrap();
        for m in [&u, &v, &w] {
            assert!(ok(&check_yd(&b, m, DegreeBound(None))));
        }
        let c = braiding(&u, &w).unwrap();
        let ci = braiding_inverse(&b, &u, &w).unwrap();
        let round = c.clone().then_chain(&ci).unwrap();
        assert!(check_equal(&round, &Chain::new(Q, round.domain().to_vec()), DegreeBound(None)).unwrap().is_none());

        // C_{U, V⊗W} = (V ⊗ C_{U,W})(C_{U,V} ⊗ W)
        let vw = tensor_module(&b, &v, &w).unwrap();
        let lhs = braiding(&u, &vw).unwrap();
        let rhs = braiding(&u, &v).unwrap();
        let rhs = Chain::new(Q, lhs.domain().to_vec())
            .at_chain(0, &rhs)
            .unwrap()
            .at_chain(v.arity(), &braiding(&u, &w).unwrap())
            .unwrap();
        assert!(check_equal(&lhs, &rhs, DegreeBound(None)).unwrap().is_none());

        // C_{U⊗V, W} = (C_{U,W} ⊗ V)(U ⊗ C_{V,W})
        let uv = tensor_module(&b, &u, &v).unwrap();
        let lhs = braiding(&uv, &w).unwrap();
        let rhs = Chain::new(Q, lhs.domain().to_vec())
            .at_chain(u.arity(), &braiding(&v, &w).unwrap())
            .unwrap()
            .at_chain(0, &braiding(&u, &w).unwrap())
            .unwrap();
        assert!(check_equal(&lhs, &rhs, DegreeBound(None)).unwrap().is_none());
        assert!(ok(&check_yd(&b, &uv, DegreeBound(None))));
    }

    #[test]
    fn braiding_is_natural_for_morphisms() {
        let b = cyclic_group_algebra(Q, 2);
        let v = two_dim(&b);
        let x = sign(&b, "X");
        // projection onto the odd part is a YD morphism V -> X
        let p = LinMap::from_fn(Q, v.legs.clone(), x.legs.clone(), |_, c| Q.int(c as i64));
        assert!(is_yd_morphism(&b, &p, &v, &x).unwrap());
        let q = LinMap::from_fn(Q, v.legs.clone(), x.legs.clone(), |_, _| Q.one());
        assert!(!is_yd_morphism(&b, &q, &v, &x).unwrap());
        // (id ⊗ p) C_{V,V} = C_{V,X} (p ⊗ id)
        let lhs = braiding(&v, &v).unwrap().at(1, &p).unwrap();
        let rhs = Chain::new(Q, vec![v.legs[0].clone(), v.legs[0].clone()])
            .at(0, &p)
            .unwrap()
            .then_chain(&braiding(&x, &v).unwrap())
            .unwrap();
        assert!(check_equal(&lhs, &rhs, DegreeBound(None)).unwrap().is_none());
    }

    #[test]
    fn dual_module_over_sweedler_has_yd_evaluation() {
        let b = sweedler_h4(Q);
        // k{v, w}: g v = v, x v = w, g w = -w
        let v = BasedSpace::labelled("V", vec!["v".into(), "w".into()]);
        let legs = vec![v.clone()];
        let action = LinMap::from_columns(
            Q,
            with_base(&b, &legs),
            legs.clone(),
            &[
                vec![(0, Q.one())],
                vec![(1, Q.one())],
                vec![(0, Q.one())],
                vec![(1, Q.int(-1))],
                vec![(1, Q.one())],
                vec![],
                vec![(1, Q.int(-1))],
                vec![],
            ],
        );
        // δ(v) = 1 ⊗ v, δ(w) = g ⊗ w
        let coaction = LinMap::from_columns(Q, legs.clone(), with_base(&b, &legs), &[vec![(0, Q.one())], vec![(3, Q.one())]]);
        let m = YDModule::new("V", &b, legs.clone(), action, coaction).unwrap();
        assert!(ok(&check_yd(&b, &m, DegreeBound(None))));
        let d = dual_module(&b, &m, "V*").unwrap();
        assert!(ok(&check_yd(&b, &d, DegreeBound(None))));
        let k = trivial_module(&b);
        let vd_v = tensor_module(&b, &d, &m).unwrap();
        let ev = evaluation(Q, &d.legs[0], &m.legs);
        assert!(is_yd_morphism(&b, &ev, &vd_v, &k).unwrap());
        let v_vd = tensor_module(&b, &m, &d).unwrap();
        let coev = coevaluation(Q, &m.legs, &d.legs[0]);
        assert!(is_yd_morphism(&b, &coev, &k, &v_vd).unwrap());

        let e = hom_module(&b, &m, &m, "End").unwrap();
        assert!(ok(&check_yd(&b, &e, DegreeBound(None))));
    }

    #[test]
    fn dual_of_odd_line() {
        let b = cyclic_group_algebra(Q, 2);
        let x = sign(&b, "X");
        let d = dual_module(&b, &x, "X*").unwrap();
        assert_eq!(d.action.entry(0, 1), &Q.int(-1));
        assert!(d.coaction.entry(1, 0).is_one() && d.coaction.entry(0, 0).is_zero());
        assert!(is_symmetric_pair(&x, &d).unwrap());
        let k = trivial_module(&b);
        let dk = dual_module(&b, &k, "k*").unwrap();
        assert_eq!(dk.action.to_nested(), k.action.to_nested());
    }

    #[test]
    fn transpose_of_morphism_is_morphism_of_duals() {
        let b = cyclic_group_algebra(Q, 2);
        let v = two_dim(&b);
        let x = sign(&b, "X");
        let p = LinMap::from_fn(Q, v.legs.clone(), x.legs.clone(), |_, c| Q.int(c as i64));
        let vd = dual_module(&b, &v, "V*").unwrap();
        let xd = dual_module(&b, &x, "X*").unwrap();
        let pt = p.transpose().relabel(xd.legs.clone(), vd.legs.clone()).unwrap();
        assert!(is_yd_morphism(&b, &pt, &xd, &vd).unwrap());
        let c = braiding_matrix(&v, &x).unwrap();
        let vx = tensor_module(&b, &v, &x).unwrap();
        let xv = tensor_module(&b, &x, &v).unwrap();
        assert!(is_yd_morphism(&b, &c, &vx, &xv).unwrap());
    }

    #[test]
    fn inverse_braiding_matches_matrix_inverse() {
        let b = sweedler_h4(Q);
        let v = one_dimensional(&b, "V", "v", &[Q.one(), Q.int(-1), Q.zero(), Q.zero()], 1).unwrap();
        let w = one_dimensional(&b, "W", "w", &[Q.one(), Q.int(-1), Q.zero(), Q.zero()], 1).unwrap();
        let c = braiding_matrix(&v, &w).unwrap();
        let ci = braiding_inverse(&b, &v, &w).unwrap().materialize();
        assert!(c.inverse().unwrap().equal(&ci).unwrap());
    }

    #[test]
    fn quasitriangular_z2_gives_sign_grading() {
        let b = cyclic_group_algebra(Q, 2);
        let h = Q.ratio(1, 2).unwrap();
        let r = vec![h.clone(), h.clone(), h.clone(), -&h];
        let v = BasedSpace::labelled("X", vec!["x".into()]);
        let legs = vec![v];
        let action = LinMap::from_fn(Q, with_base(&b, &legs), legs.clone(), |_, c| if c == 0 { Q.one() } else { Q.int(-1) });
        let m = from_quasitriangular(&b, &r, "X", legs, action).unwrap();
        assert_eq!(m.coaction.entry(1, 0), &Q.one());
        assert!(m.coaction.entry(0, 0).is_zero());
        assert!(ok(&check_yd(&b, &m, DegreeBound(None))));
        // the trivial R-matrix is valid and gives a trivial coaction
        let triv = vec![Q.one(), Q.zero(), Q.zero(), Q.zero()];
        assert!(check_quasitriangular(&b, &triv).is_ok());
        let bad = vec![Q.one(), Q.one(), Q.zero(), Q.zero()];
        assert!(matches!(check_quasitriangular(&b, &bad), Err(Error::InvalidQuasitriangular(_))));
    }
}
