//! Quasi-dual pairings, the induced module-algebra actions, comodule
//! algebras and smash products.

use crate::algebra::Algebra;
use crate::base_hopf::HopfAlgebraData;
use crate::braided::BraidedHopfAlgebra;
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::ReportItem;
use crate::scalar::{Field, Scalar};
use crate::space::{decode, same_legs, Space};
use crate::tensor::{check_equal, Chain, DegreeBound, Witness};
use crate::yd::{braiding, tensor_module, trivial_module, yd_morphism_witness, YDModule};

/// A pairing `⟨,⟩: H^d ⊗ H -> k`.
#[derive(Clone, Debug)]
pub struct QuasiDualPairing {
    pub hd: BraidedHopfAlgebra,
    pub h: BraidedHopfAlgebra,
    pub form: LinMap,
}

impl QuasiDualPairing {
    /// `matrix[i][j] = ⟨f_i, e_j⟩`.
    pub fn new(hd: BraidedHopfAlgebra, h: BraidedHopfAlgebra, matrix: Vec<Vec<Scalar>>) -> Result<QuasiDualPairing> {
        let f = h.field();
        let (m, n) = (hd.dim(), h.dim());
        if matrix.len() != m || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::SignatureMismatch {
                left: format!("{m}x{n} pairing matrix"),
                right: format!("{}x{}", matrix.len(), matrix.first().map_or(0, Vec::len)),
            });
        }
        let form = LinMap::from_fn(f, vec![hd.carrier().clone(), h.carrier().clone()], vec![], |_, c| matrix[c / n][c % n].clone());
        Ok(QuasiDualPairing { hd, h, form })
    }

    /// `⟨x_i*, x_j⟩ = δ_ij` against the dual basis.
    pub fn evaluation(hd: BraidedHopfAlgebra, h: BraidedHopfAlgebra) -> Result<QuasiDualPairing> {
        let f = h.field();
        let n = h.dim();
        let matrix = (0..hd.dim())
            .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        QuasiDualPairing::new(hd, h, matrix)
    }

    /// `⟨v, u⟩ = ev(C_{V,U}(v ⊗ u)) = ⟨v₋₁·u, v₀⟩` where `U` carries the
    /// dual basis of `V`; here `hd` plays `V` and `h` plays `U`.
    pub fn evaluation_through_braiding(hd: BraidedHopfAlgebra, h: BraidedHopfAlgebra) -> Result<QuasiDualPairing> {
        let f = h.field();
        let ev = crate::yd::evaluation(f, h.carrier(), &hd.legs());
        let form = braiding(&hd.module, &h.module)?.then(&ev)?.materialize();
        Ok(QuasiDualPairing { hd, h, form })
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        self.form.entry(0, i * self.h.dim() + j)
    }

    pub fn bound(&self) -> DegreeBound {
        DegreeBound(self.h.truncation.or(self.hd.truncation))
    }

    pub fn matrix(&self) -> Vec<Vec<Scalar>> {
        (0..self.hd.dim())
            .map(|i| (0..self.h.dim()).map(|j| self.value(i, j).clone()).collect())
            .collect()
    }
}

fn bidegree(w: &Witness, legs: &[Space], hd_name: &str) -> (usize, usize) {
    let idx = decode(w.index, legs);
    let (mut a, mut b) = (0, 0);
    for (i, leg) in idx.iter().zip(legs) {
        if leg.name == hd_name {
            a += leg.degrees[*i];
        } else {
            b += leg.degrees[*i];
        }
    }
    (a, b)
}

fn pairing_item(p: &QuasiDualPairing, id: &str, description: &str, outcome: Result<Option<Witness>>, legs: &[Space]) -> ReportItem {
    match outcome {
        Ok(Some(w)) => {
            let (a, b) = bidegree(&w, legs, &p.hd.carrier().name);
            ReportItem::fail(id, description, format!("{w} [bidegree ({a}, {b})]"))
        }
        other => ReportItem::from_check(id, description, other),
    }
}

/// The pairing axioms with the two compatibilities with `B`.
pub fn check_quasi_dual(b: &HopfAlgebraData, p: &QuasiDualPairing) -> Vec<ReportItem> {
    let hd = p.hd.carrier().clone();
    let h = p.h.carrier().clone();
    let bound = p.bound();
    let run = |id: &str, desc: &str, legs: Vec<Space>, f: &dyn Fn(Vec<Space>) -> Result<Option<Witness>>| {
        pairing_item(p, id, desc, f(legs.clone()), &legs)
    };
    let f = p.field();
    vec![
        run(
            "pairing-mult-h",
            "⟨f, xy⟩ = Σ ⟨f₁, f₂₋₁·x⟩⟨f₂₀, y⟩",
            vec![hd.clone(), h.clone(), h.clone()],
            &|legs| {
                let lhs = Chain::new(f, legs.clone()).at(1, &p.h.mult)?.then(&p.form)?;
                let rhs = Chain::new(f, legs)
                    .at(0, &p.hd.comult)?
                    .at_chain(1, &braiding(&p.hd.module, &p.h.module)?)?
                    .at(0, &p.form)?
                    .then(&p.form)?;
                check_equal(&lhs, &rhs, bound)
            },
        ),
        run("pairing-unit-h", "⟨f, 1⟩ = ε(f)", vec![hd.clone()], &|legs| {
            let lhs = Chain::new(f, legs.clone()).at(1, &p.h.unit)?.then(&p.form)?;
            check_equal(&lhs, &Chain::from_map(&p.hd.counit), bound)
        }),
        run(
            "pairing-mult-hd",
            "⟨fg, x⟩ = Σ ⟨f, g₋₁·x₁⟩⟨g₀, x₂⟩",
            vec![hd.clone(), hd.clone(), h.clone()],
            &|legs| {
                let lhs = Chain::new(f, legs.clone()).at(0, &p.hd.mult)?.then(&p.form)?;
                let rhs = Chain::new(f, legs)
                    .at(2, &p.h.comult)?
                    .at_chain(1, &braiding(&p.hd.module, &p.h.module)?)?
                    .at(0, &p.form)?
                    .then(&p.form)?;
                check_equal(&lhs, &rhs, bound)
            },
        ),
        run("pairing-unit-hd", "⟨1, x⟩ = ε(x)", vec![h.clone()], &|legs| {
            let lhs = Chain::new(f, legs.clone()).at(0, &p.hd.unit)?.then(&p.form)?;
            check_equal(&lhs, &Chain::from_map(&p.h.counit), bound)
        }),
        run("pairing-antipode", "⟨S f, x⟩ = ⟨f, S x⟩", vec![hd.clone(), h.clone()], &|legs| {
            let lhs = Chain::new(f, legs.clone()).at(0, &p.hd.antipode)?.then(&p.form)?;
            let rhs = Chain::new(f, legs).at(1, &p.h.antipode)?.then(&p.form)?;
            check_equal(&lhs, &rhs, bound)
        }),
        run(
            "pairing-b-action",
            "⟨b·f, x⟩ = ⟨f, S(b)·x⟩",
            vec![b.carrier.clone(), hd.clone(), h.clone()],
            &|legs| {
                let lhs = Chain::new(f, legs.clone()).at(0, &p.hd.module.action)?.then(&p.form)?;
                let rhs = Chain::new(f, legs)
                    .at(0, &b.antipode)?
                    .flip(0, 1, 1)
                    .at(1, &p.h.module.action)?
                    .then(&p.form)?;
                check_equal(&lhs, &rhs, bound)
            },
        ),
        run(
            "pairing-b-coaction",
            "Σ ⟨f₀, x⟩ f₋₁ = Σ ⟨f, x₀⟩ S⁻¹(x₋₁)",
            vec![hd.clone(), h.clone()],
            &|legs| {
                let lhs = Chain::new(f, legs.clone()).at(0, &p.hd.module.coaction)?.at(1, &p.form)?;
                let rhs = Chain::new(f, legs)
                    .at(1, &p.h.module.coaction)?
                    .at(1, b.antipode_inverse()?)?
                    .flip(0, 1, 1)
                    .at(1, &p.form)?;
                check_equal(&lhs, &rhs, bound)
            },
        ),
    ]
}

/// Full rank of `H^d -> H*`, `f ↦ ⟨f, -⟩`.
pub fn is_left_faithful(p: &QuasiDualPairing) -> bool {
    let f = p.field();
    let hd = p.hd.carrier().clone();
    let h = p.h.carrier().clone();
    let m = LinMap::from_fn(f, vec![hd], vec![h], |j, i| p.value(i, j).clone());
    m.rank() == p.hd.dim()
}

/// An action of a braided Hopf algebra on an algebra.
#[derive(Clone)]
pub struct ModuleAlgebraAction {
    pub acting: BraidedHopfAlgebra,
    pub algebra: Algebra,
    /// `acting ⊗ algebra -> algebra`
    pub action: Chain,
}

impl ModuleAlgebraAction {
    pub fn materialize(&self) -> LinMap {
        self.action.materialize()
    }

    /// Module axioms, the braided module-algebra law, `h ⊳ 1 = ε(h)1`, and
    /// the YD-morphism property of the action.
    pub fn check(&self, b: &HopfAlgebraData, prefix: &str, bound: DegreeBound) -> Vec<ReportItem> {
        let run = |id: &str, desc: &str, r: Result<Option<Witness>>| ReportItem::from_check(&format!("{prefix}-{id}"), desc, r);
        vec![
            run("associative", "g ⊳ (h ⊳ a) = (gh) ⊳ a", self.associative(bound)),
            run("unital", "1 ⊳ a = a", self.unital(bound)),
            run("module-algebra", "h ⊳ (ab) = Σ (h₁ ⊳ (h₂₋₁·a))(h₂₀ ⊳ b)", self.module_algebra_law(bound)),
            run("unit", "h ⊳ 1 = ε(h) 1", self.preserves_unit(bound)),
            run("yd-morphism", "the action is a YD morphism", self.yd_morphism(b, bound)),
        ]
    }

    fn h(&self) -> Space {
        self.acting.carrier().clone()
    }

    fn a_legs(&self) -> Vec<Space> {
        self.algebra.legs().to_vec()
    }

    fn with_h(&self, n: usize) -> Vec<Space> {
        let mut legs = vec![self.h(); n];
        legs.extend(self.a_legs());
        legs
    }

    pub fn associative(&self, bound: DegreeBound) -> Result<Option<Witness>> {
        let f = self.algebra.field();
        let legs = self.with_h(2);
        let lhs = Chain::new(f, legs.clone()).at_chain(1, &self.action)?.then_chain(&self.action)?;
        let rhs = Chain::new(f, legs).at(0, &self.acting.mult)?.then_chain(&self.action)?;
        check_equal(&lhs, &rhs, bound)
    }

    pub fn unital(&self, bound: DegreeBound) -> Result<Option<Witness>> {
        let f = self.algebra.field();
        let lhs = Chain::new(f, self.a_legs()).at(0, &self.acting.unit)?.then_chain(&self.action)?;
        check_equal(&lhs, &Chain::new(f, self.a_legs()), bound)
    }

    pub fn module_algebra_law(&self, bound: DegreeBound) -> Result<Option<Witness>> {
        let f = self.algebra.field();
        let na = self.algebra.arity();
        let mut legs = self.with_h(1);
        legs.extend(self.a_legs());
        let lhs = Chain::new(f, legs.clone()).at_chain(1, &self.algebra.mult)?.then_chain(&self.action)?;
        // h1 h2 a b -> h1 (h2 ⇀' a ...) : braid h2 past a, act twice, multiply
        let rhs = Chain::new(f, legs)
            .at(0, &self.acting.comult)?
            .at_chain(1, &braiding(&self.acting.module, &self.algebra.module)?)?
            .at_chain(0, &self.action)?
            .at_chain(na, &self.action)?
            .then_chain(&self.algebra.mult)?;
        check_equal(&lhs, &rhs, bound)
    }

    pub fn preserves_unit(&self, bound: DegreeBound) -> Result<Option<Witness>> {
        let f = self.algebra.field();
        let lhs = Chain::new(f, vec![self.h()]).at(1, &self.algebra.unit)?.then_chain(&self.action)?;
        let rhs = Chain::new(f, vec![self.h()]).then(&self.acting.counit)?.then(&self.algebra.unit)?;
        check_equal(&lhs, &rhs, bound)
    }

    pub fn yd_morphism(&self, b: &HopfAlgebraData, bound: DegreeBound) -> Result<Option<Witness>> {
        let dom = tensor_module(b, &self.acting.module, &self.algebra.module)?;
        yd_morphism_witness(b, &self.action, &dom, &self.algebra.module, bound)
    }
}

/// `h ⇀ f = (H^d ⊗ ⟨,⟩)(H^d ⊗ C)(C ⊗ H^d)(H ⊗ Δ)`, an action of `H` on `H^d`.
pub fn action_of_h_on_hd(p: &QuasiDualPairing) -> Result<ModuleAlgebraAction> {
    let f = p.field();
    let c = braiding(&p.h.module, &p.hd.module)?;
    let action = Chain::new(f, vec![p.h.carrier().clone(), p.hd.carrier().clone()])
        .at(1, &p.hd.comult)?
        .at_chain(0, &c)?
        .at_chain(1, &c)?
        .at(1, &p.form)?;
    Ok(ModuleAlgebraAction {
        acting: p.h.clone(),
        algebra: p.hd.algebra(),
        action,
    })
}

/// `f ⇀ x = (H ⊗ ⟨,⟩)(C ⊗ H)(H^d ⊗ Δ)`, an action of `H^d` on `H`.
pub fn action_of_hd_on_h(p: &QuasiDualPairing) -> Result<ModuleAlgebraAction> {
    let f = p.field();
    let action = Chain::new(f, vec![p.hd.carrier().clone(), p.h.carrier().clone()])
        .at(1, &p.h.comult)?
        .at_chain(0, &braiding(&p.hd.module, &p.h.module)?)?
        .at(1, &p.form)?;
    Ok(ModuleAlgebraAction {
        acting: p.hd.clone(),
        algebra: p.h.algebra(),
        action,
    })
}

/// An algebra `R` with a coaction `ψ: R -> R ⊗ H^d`.
#[derive(Clone)]
pub struct ComoduleAlgebra {
    pub algebra: Algebra,
    pub psi: LinMap,
}

impl ComoduleAlgebra {
    pub fn arity(&self) -> usize {
        self.algebra.arity()
    }

    /// `R = H^d` with `ψ = Δ`, on a renamed carrier.
    pub fn hd_with_comult(hd: &BraidedHopfAlgebra, name: &str) -> Result<ComoduleAlgebra> {
        let src = hd.carrier();
        let r = crate::space::BasedSpace::graded(name, src.labels.clone(), src.degrees.clone());
        ComoduleAlgebra::from_hopf(hd, r, &hd.comult)
    }

    /// Builds `R` as a relabelled copy of the algebra of `src` with the
    /// coaction `psi: src -> src ⊗ H^d` given on the source legs.
    pub fn from_hopf(src: &BraidedHopfAlgebra, r: Space, psi: &LinMap) -> Result<ComoduleAlgebra> {
        let legs = vec![r.clone()];
        let module = src.module.relabel(r.name.clone(), legs.clone())?;
        let mult = src.mult.relabel(vec![r.clone(), r.clone()], legs.clone())?;
        let unit = src.unit.relabel(vec![], legs.clone())?;
        let hd_leg = psi.codomain()[1].clone();
        let psi = psi.relabel(legs.clone(), vec![r.clone(), hd_leg])?;
        Ok(ComoduleAlgebra {
            algebra: Algebra::from_maps(r.name.clone(), module, &mult, unit),
            psi,
        })
    }

    /// `ψ(r) = r ⊗ 1`.
    pub fn trivial(algebra: Algebra, hd: &BraidedHopfAlgebra) -> ComoduleAlgebra {
        let psi = LinMap::identity(algebra.field(), algebra.legs().to_vec()).tensor(&hd.unit);
        ComoduleAlgebra { algebra, psi }
    }

    /// Coassociativity, counitality, multiplicativity into `R ⊗ H^d`, and
    /// the YD-morphism property of `ψ`.
    pub fn check(&self, b: &HopfAlgebraData, hd: &BraidedHopfAlgebra, prefix: &str, bound: DegreeBound) -> Vec<ReportItem> {
        let f = self.algebra.field();
        let n = self.arity();
        let legs = self.algebra.legs().to_vec();
        let run = |id: &str, desc: &str, r: Result<Option<Witness>>| ReportItem::from_check(&format!("{prefix}-{id}"), desc, r);
        let coassoc = || -> Result<Option<Witness>> {
            let lhs = Chain::new(f, legs.clone()).then(&self.psi)?.at(0, &self.psi)?;
            let rhs = Chain::new(f, legs.clone()).then(&self.psi)?.at(n, &hd.comult)?;
            check_equal(&lhs, &rhs, bound)
        };
        let counit = || -> Result<Option<Witness>> {
            let lhs = Chain::new(f, legs.clone()).then(&self.psi)?.at(n, &hd.counit)?;
            check_equal(&lhs, &Chain::new(f, legs.clone()), bound)
        };
        let target = || -> Result<Algebra> { crate::algebra::braided_tensor_algebra(b, &self.algebra, &hd.algebra()) };
        let mult = || -> Result<Option<Witness>> {
            let t = target()?;
            let dom: Vec<Space> = [legs.clone(), legs.clone()].concat();
            let lhs = Chain::new(f, dom.clone()).then_chain(&self.algebra.mult)?.then(&self.psi)?;
            let rhs = Chain::new(f, dom).at(n, &self.psi)?.at(0, &self.psi)?.then_chain(&t.mult)?;
            check_equal(&lhs, &rhs, bound)
        };
        let unit = || -> Result<Option<Witness>> {
            let t = target()?;
            let lhs = Chain::new(f, vec![]).then(&self.algebra.unit)?.then(&self.psi)?;
            check_equal(&lhs, &Chain::from_map(&t.unit), bound)
        };
        let yd = || -> Result<Option<Witness>> {
            let cod = tensor_module(b, &self.algebra.module, &hd.module)?;
            yd_morphism_witness(b, &Chain::from_map(&self.psi), &self.algebra.module, &cod, bound)
        };
        vec![
            run("coassociative", "(ψ ⊗ id)ψ = (id ⊗ Δ)ψ", coassoc()),
            run("counital", "(id ⊗ ε)ψ = id", counit()),
            run("multiplicative", "ψ(rs) = ψ(r)ψ(s) in R ⊗ H^d", mult()),
            run("unit", "ψ(1) = 1 ⊗ 1", unit()),
            run("yd-morphism", "ψ is a YD morphism", yd()),
        ]
    }
}

/// `α = (R ⊗ ⟨,⟩)(R ⊗ C_{H,H^d})(C_{H,R} ⊗ H^d)(H ⊗ ψ)`.
pub fn comodule_to_module(r: &ComoduleAlgebra, p: &QuasiDualPairing) -> Result<ModuleAlgebraAction> {
    let f = p.field();
    let n = r.arity();
    let mut legs = vec![p.h.carrier().clone()];
    legs.extend(r.algebra.legs().iter().cloned());
    let action = Chain::new(f, legs)
        .at(1, &r.psi)?
        .at_chain(0, &braiding(&p.h.module, &r.algebra.module)?)?
        .at_chain(n, &braiding(&p.h.module, &p.hd.module)?)?
        .at(n, &p.form)?;
    Ok(ModuleAlgebraAction {
        acting: p.h.clone(),
        algebra: r.algebra.clone(),
        action,
    })
}

/// `A # H` on `A ⊗ H` with
/// `(a # h)(a' # h') = a (h₁ ⊳ (h₂₋₁·a')) # h₂₀ h'`.
pub fn smash_product(b: &HopfAlgebraData, act: &ModuleAlgebraAction) -> Result<Algebra> {
    let a = &act.algebra;
    let h = &act.acting;
    let f = a.field();
    let na = a.arity();
    let module = tensor_module(b, &a.module, &h.module)?;
    let hc = h.carrier().clone();
    let dom: Vec<Space> = [a.legs(), std::slice::from_ref(&hc), a.legs(), std::slice::from_ref(&hc)].concat();
    let mult = Chain::new(f, dom)
        .at(na, &h.comult)?
        .at_chain(na + 1, &braiding(&h.module, &a.module)?)?
        .at_chain(na, &act.action)?
        .at_chain(0, &a.mult)?
        .at(na, &h.mult)?
        .memoized();
    Ok(Algebra {
        name: format!("{}#{}", a.name, h.name),
        module,
        mult,
        unit: a.unit.tensor(&h.unit),
    })
}

/// `⇀' = (R ⊗ ⇀)(C_{H^d,R} ⊗ H)`: `H^d` acts on `R # H` through `H` only.
pub fn lifted_action_on_smash(rh: &Algebra, r: &YDModule, act: &ModuleAlgebraAction) -> Result<ModuleAlgebraAction> {
    let f = rh.field();
    let nr = r.arity();
    if !same_legs(&rh.legs()[..nr], &r.legs) {
        return Err(Error::SignatureMismatch {
            left: crate::space::signature(rh.legs()),
            right: crate::space::signature(&r.legs),
        });
    }
    let mut legs = vec![act.acting.carrier().clone()];
    legs.extend(rh.legs().iter().cloned());
    let action = Chain::new(f, legs)
        .at_chain(0, &braiding(&act.acting.module, r)?)?
        .at_chain(nr, &act.action)?;
    Ok(ModuleAlgebraAction {
        acting: act.acting.clone(),
        algebra: rh.clone(),
        action,
    })
}

/// The unit object as an algebra, with trivial coaction.
pub fn ground_algebra(b: &HopfAlgebraData, hd: &BraidedHopfAlgebra, name: &str) -> ComoduleAlgebra {
    let f = b.field;
    let r = crate::space::BasedSpace::labelled(name, vec!["1".into()]);
    let legs = vec![r.clone()];
    let k = trivial_module(b);
    let module = YDModule::new(
        name,
        b,
        legs.clone(),
        k.action.relabel(vec![b.carrier.clone(), r.clone()], legs.clone()).unwrap(),
        k.coaction.relabel(legs.clone(), vec![b.carrier.clone(), r.clone()]).unwrap(),
    )
    .expect("one-dimensional shapes agree");
    let mult = LinMap::from_fn(f, vec![r.clone(), r.clone()], legs.clone(), |_, _| f.one());
    let unit = LinMap::from_fn(f, vec![], legs, |_, _| f.one());
    ComoduleAlgebra::trivial(Algebra::from_maps(name, module, &mult, unit), hd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_hopf::{cyclic_group_algebra, trivial_hopf};
    use crate::braided::{build_polynomial_hopf, dual_braided_hopf, super_exterior};
    use crate::report::Status;
    use crate::tensor::TensorVec;

    const Q: Field = Field::Rational;

    fn ok(items: &[ReportItem]) -> bool {
        for i in items.iter().filter(|i| i.status != Status::Pass) {
            eprintln!("{}: {:?} {:?}", i.id, i.status, i.witness);
        }
        items.iter().all(ReportItem::passed)
    }

    fn factorial(n: usize) -> i64 {
        (1..=n as i64).product()
    }

    fn poly_pairing(n: usize, with_factorial: bool) -> (HopfAlgebraData, QuasiDualPairing) {
        let k = trivial_hopf(Q);
        let h = build_polynomial_hopf(&k, n, "H", "x").unwrap();
        let hd = build_polynomial_hopf(&k, n, "Hd", "y").unwrap();
        let m = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i != j {
                            Q.zero()
                        } else if with_factorial {
                            Q.int(factorial(i))
                        } else {
                            Q.one()
                        }
                    })
                    .collect()
            })
            .collect();
        let p = QuasiDualPairing::new(hd, h, m).unwrap();
        (k, p)
    }

    fn super_pairing(n: usize) -> (HopfAlgebraData, QuasiDualPairing) {
        let b = cyclic_group_algebra(Q, 2);
        let h = super_exterior(&b, n, "H").unwrap();
        let hd = dual_braided_hopf(&b, &h, "Hd").unwrap();
        let p = QuasiDualPairing::evaluation(hd, h).unwrap();
        (b, p)
    }

    #[test]
    fn evaluation_pairings_are_quasi_dual() {
        for n in 1..=2 {
            let (b, p) = super_pairing(n);
            assert!(ok(&check_quasi_dual(&b, &p)));
            assert!(is_left_faithful(&p));
        }
    }

    #[test]
    fn factorial_pairing_passes_and_plain_one_fails_at_2_2() {
        let (k, p) = poly_pairing(6, true);
        assert!(ok(&check_quasi_dual(&k, &p)));
        assert!(is_left_faithful(&p));
        let (k, bad) = poly_pairing(6, false);
        let items = check_quasi_dual(&k, &bad);
        let failing: Vec<_> = items.iter().filter(|i| i.status == Status::Fail).collect();
        assert!(!failing.is_empty());
        for it in failing {
            assert!(it.witness.as_ref().unwrap().contains("bidegree (2, 2)"), "{:?}", it.witness);
        }
    }

    #[test]
    fn zeroed_row_is_not_left_faithful() {
        let (_, p) = super_pairing(1);
        let mut m = p.matrix();
        m[1] = vec![Q.zero(), Q.zero()];
        let z = QuasiDualPairing::new(p.hd.clone(), p.h.clone(), m).unwrap();
        assert!(!is_left_faithful(&z));
    }

    #[test]
    fn lemma_actions_are_module_algebras() {
        for n in 1..=2 {
            let (b, p) = super_pairing(n);
            let a = action_of_h_on_hd(&p).unwrap();
            assert!(ok(&a.check(&b, "h-on-hd", DegreeBound(None))));
            let c = action_of_hd_on_h(&p).unwrap();
            assert!(ok(&c.check(&b, "hd-on-h", DegreeBound(None))));
        }
        let (k, p) = poly_pairing(5, true);
        let bound = p.bound();
        assert!(ok(&action_of_h_on_hd(&p).unwrap().check(&k, "h-on-hd", bound)));
        assert!(ok(&action_of_hd_on_h(&p).unwrap().check(&k, "hd-on-h", bound)));
    }

    #[test]
    fn y_acts_as_derivative() {
        let (_, p) = poly_pairing(5, true);
        let m = action_of_hd_on_h(&p).unwrap().materialize();
        // y ⇀ xⁿ = n xⁿ⁻¹
        for n in 1..=5usize {
            assert_eq!(m.entry(n - 1, 6 + n), &Q.int(n as i64));
        }
        // the dual-basis pairing on Λ(x): x* ⇀ x = 1
        let (_, p) = super_pairing(1);
        let m = action_of_hd_on_h(&p).unwrap().materialize();
        assert!(m.entry(0, 2 + 1).is_one());
    }

    #[test]
    fn comodule_algebra_and_smash_products() {
        let (b, p) = super_pairing(1);
        let r = ComoduleAlgebra::hd_with_comult(&p.hd, "R").unwrap();
        assert!(ok(&r.check(&b, &p.hd, "R", DegreeBound(None))));
        let alpha = comodule_to_module(&r, &p).unwrap();
        assert!(ok(&alpha.check(&b, "alpha", DegreeBound(None))));
        let rh = smash_product(&b, &alpha).unwrap();
        assert!(ok(&rh.check("R#H", DegreeBound(None))));
        let hd_on_h = action_of_hd_on_h(&p).unwrap();
        let lifted = lifted_action_on_smash(&rh, &r.algebra.module, &hd_on_h).unwrap();
        assert!(ok(&lifted.check(&b, "lifted", DegreeBound(None))));
        let rhhd = smash_product(&b, &lifted).unwrap();
        assert!(ok(&rhhd.check("(R#H)#Hd", DegreeBound(None))));
        // (a#1)(1#h) = a#h on every basis pair
        let (dr, dh) = (r.algebra.dim(), p.h.dim());
        for a in 0..dr {
            for h in 0..dh {
                let left = TensorVec::basis(rh.legs().to_vec(), a * dh, Q);
                let right = TensorVec::basis(rh.legs().to_vec(), h, Q);
                let prod = rh.product(&left, &right);
                assert_eq!(prod.terms.len(), 1);
                assert!(prod.terms[&(a * dh + h)].is_one());
            }
        }
    }

    #[test]
    fn trivial_coaction_gives_counit_action() {
        let (b, p) = super_pairing(1);
        let r = ground_algebra(&b, &p.hd, "R");
        assert!(ok(&r.check(&b, &p.hd, "R", DegreeBound(None))));
        let alpha = comodule_to_module(&r, &p).unwrap().materialize();
        assert!(alpha.entry(0, 0).is_one());
        assert!(alpha.entry(0, 1).is_zero());
    }

    #[test]
    fn smash_of_h_and_hd_over_poly() {
        let (k, p) = poly_pairing(4, true);
        let hd_h = smash_product(&k, &action_of_h_on_hd(&p).unwrap()).unwrap();
        assert_eq!(hd_h.legs()[0].name, "Hd");
        assert!(ok(&hd_h.check("Hd#H", p.bound())));
        let h_hd = smash_product(&k, &action_of_hd_on_h(&p).unwrap()).unwrap();
        assert!(ok(&h_hd.check("H#Hd", p.bound())));
    }

    #[test]
    fn braided_tensor_algebra_is_associative() {
        let (b, p) = super_pairing(1);
        let t = crate::algebra::braided_tensor_algebra(&b, &p.h.algebra(), &p.hd.algebra()).unwrap();
        assert!(ok(&t.check("H⊗Hd", DegreeBound(None))));
        // (1 ⊗ v)(a ⊗ 1) = C(v ⊗ a): (1 ⊗ x*)(x ⊗ 1) = -x ⊗ x*
        let one_v = TensorVec::basis(t.legs().to_vec(), 1, Q);
        let a_one = TensorVec::basis(t.legs().to_vec(), 2, Q);
        let prod = t.product(&one_v, &a_one);
        assert_eq!(prod.terms.len(), 1);
        assert_eq!(prod.terms[&3], Q.int(-1));
    }
}
