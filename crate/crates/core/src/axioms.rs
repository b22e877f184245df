//! Axiom checks shared by ordinary and braided (co)algebras.
//!
//! Carriers may span several tensor legs (smash products live on `A ⊗ H`),
//! so every check takes the carrier as a list of legs.

use crate::error::Result;
use crate::linmap::LinMap;
use crate::report::ReportItem;
use crate::scalar::Field;
use crate::space::Space;
use crate::tensor::{check_equal, Chain, DegreeBound, Witness};

fn doubled(legs: &[Space], times: usize) -> Vec<Space> {
    (0..times).flat_map(|_| legs.iter().cloned()).collect()
}

pub fn check_associative(field: Field, legs: &[Space], mult: &Chain, bound: DegreeBound) -> Result<Option<Witness>> {
    let n = legs.len();
    let dom = doubled(legs, 3);
    let lhs = Chain::new(field, dom.clone()).at_chain(0, mult)?.then_chain(mult)?;
    let rhs = Chain::new(field, dom).at_chain(n, mult)?.then_chain(mult)?;
    check_equal(&lhs, &rhs, bound)
}

pub fn check_unital(field: Field, legs: &[Space], mult: &Chain, unit: &LinMap, bound: DegreeBound) -> Result<Option<Witness>> {
    let n = legs.len();
    let id = Chain::new(field, legs.to_vec());
    let left = Chain::new(field, legs.to_vec()).at(0, unit)?.then_chain(mult)?;
    if let Some(w) = check_equal(&left, &id, bound)? {
        return Ok(Some(w));
    }
    let right = Chain::new(field, legs.to_vec()).at(n, unit)?.then_chain(mult)?;
    check_equal(&right, &id, bound)
}

pub fn check_coassociative(field: Field, legs: &[Space], comult: &LinMap, bound: DegreeBound) -> Result<Option<Witness>> {
    let n = legs.len();
    let lhs = Chain::new(field, legs.to_vec()).then(comult)?.at(0, comult)?;
    let rhs = Chain::new(field, legs.to_vec()).then(comult)?.at(n, comult)?;
    check_equal(&lhs, &rhs, bound)
}

pub fn check_counital(field: Field, legs: &[Space], comult: &LinMap, counit: &LinMap, bound: DegreeBound) -> Result<Option<Witness>> {
    let n = legs.len();
    let id = Chain::new(field, legs.to_vec());
    let left = Chain::new(field, legs.to_vec()).then(comult)?.at(0, counit)?;
    if let Some(w) = check_equal(&left, &id, bound)? {
        return Ok(Some(w));
    }
    let right = Chain::new(field, legs.to_vec()).then(comult)?.at(n, counit)?;
    check_equal(&right, &id, bound)
}

/// `Δ ∘ m = (m ⊗ m)(A ⊗ C ⊗ A)(Δ ⊗ Δ)`, with `braid` the braiding `C_{A,A}`.
pub fn check_bialgebra_law(
    field: Field,
    legs: &[Space],
    mult: &LinMap,
    comult: &LinMap,
    braid: &Chain,
    bound: DegreeBound,
) -> Result<Option<Witness>> {
    let n = legs.len();
    let dom = doubled(legs, 2);
    let lhs = Chain::new(field, dom.clone()).then(mult)?.then(comult)?;
    let rhs = Chain::new(field, dom)
        .at(n, comult)?
        .at(0, comult)?
        .at_chain(n, braid)?
        .at(0, mult)?
        .at(n, mult)?;
    check_equal(&lhs, &rhs, bound)
}

/// `Δ(1) = 1 ⊗ 1`, `ε ∘ m = ε ⊗ ε` and `ε(1) = 1`.
pub fn check_unit_counit_compatible(
    field: Field,
    legs: &[Space],
    mult: &LinMap,
    unit: &LinMap,
    comult: &LinMap,
    counit: &LinMap,
    bound: DegreeBound,
) -> Result<Option<Witness>> {
    let n = legs.len();
    let lhs = Chain::new(field, vec![]).then(unit)?.then(comult)?;
    let rhs = Chain::new(field, vec![]).at(0, unit)?.at(n, unit)?;
    if let Some(w) = check_equal(&lhs, &rhs, bound)? {
        return Ok(Some(w));
    }
    let dom = doubled(legs, 2);
    let lhs = Chain::new(field, dom.clone()).then(mult)?.then(counit)?;
    let rhs = Chain::new(field, dom).at(n, counit)?.then(counit)?;
    if let Some(w) = check_equal(&lhs, &rhs, bound)? {
        return Ok(Some(w));
    }
    let lhs = Chain::new(field, vec![]).then(unit)?.then(counit)?;
    check_equal(&lhs, &Chain::new(field, vec![]), bound)
}

/// `m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ`.
pub fn check_antipode(
    field: Field,
    legs: &[Space],
    mult: &LinMap,
    unit: &LinMap,
    comult: &LinMap,
    counit: &LinMap,
    antipode: &LinMap,
    bound: DegreeBound,
) -> Result<Option<Witness>> {
    let n = legs.len();
    let eta_eps = Chain::new(field, legs.to_vec()).then(counit)?.then(unit)?;
    let left = Chain::new(field, legs.to_vec()).then(comult)?.at(0, antipode)?.then(mult)?;
    if let Some(w) = check_equal(&left, &eta_eps, bound)? {
        return Ok(Some(w));
    }
    let right = Chain::new(field, legs.to_vec()).then(comult)?.at(n, antipode)?.then(mult)?;
    check_equal(&right, &eta_eps, bound)
}

/// `S ∘ S⁻¹ = S⁻¹ ∘ S = id`.
pub fn check_inverse_pair(field: Field, legs: &[Space], f: &LinMap, g: &LinMap, bound: DegreeBound) -> Result<Option<Witness>> {
    let id = Chain::new(field, legs.to_vec());
    let a = Chain::new(field, legs.to_vec()).then(f)?.then(g)?;
    if let Some(w) = check_equal(&a, &id, bound)? {
        return Ok(Some(w));
    }
    let b = Chain::new(field, legs.to_vec()).then(g)?.then(f)?;
    check_equal(&b, &id, bound)
}

/// The structure maps of a (braided) Hopf algebra, borrowed for checking.
pub struct HopfMaps<'a> {
    pub field: Field,
    pub legs: &'a [Space],
    pub mult: &'a LinMap,
    pub unit: &'a LinMap,
    pub comult: &'a LinMap,
    pub counit: &'a LinMap,
    pub antipode: &'a LinMap,
    pub antipode_inv: Option<&'a LinMap>,
}

/// Runs every Hopf axiom; `braid` is the flip for ordinary Hopf algebras.
pub fn hopf_items(prefix: &str, maps: &HopfMaps<'_>, braid: &Chain, bound: DegreeBound) -> Vec<ReportItem> {
    let f = maps.field;
    let legs = maps.legs;
    let mult = Chain::from_map(maps.mult);
    let mut items = vec![
        ReportItem::from_check(
            &format!("{prefix}-associativity"),
            "m(m ⊗ id) = m(id ⊗ m)",
            check_associative(f, legs, &mult, bound),
        ),
        ReportItem::from_check(
            &format!("{prefix}-unitality"),
            "m(η ⊗ id) = id = m(id ⊗ η)",
            check_unital(f, legs, &mult, maps.unit, bound),
        ),
        ReportItem::from_check(
            &format!("{prefix}-coassociativity"),
            "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ",
            check_coassociative(f, legs, maps.comult, bound),
        ),
        ReportItem::from_check(
            &format!("{prefix}-counitality"),
            "(ε ⊗ id)Δ = id = (id ⊗ ε)Δ",
            check_counital(f, legs, maps.comult, maps.counit, bound),
        ),
        ReportItem::from_check(
            &format!("{prefix}-bialgebra"),
            "Δm = (m ⊗ m)(id ⊗ C ⊗ id)(Δ ⊗ Δ)",
            check_bialgebra_law(f, legs, maps.mult, maps.comult, braid, bound),
        ),
        ReportItem::from_check(
            &format!("{prefix}-unit-counit"),
            "Δη = η ⊗ η, εm = ε ⊗ ε, εη = 1",
            check_unit_counit_compatible(f, legs, maps.mult, maps.unit, maps.comult, maps.counit, bound),
        ),
        ReportItem::from_check(
            &format!("{prefix}-antipode"),
            "m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ",
            check_antipode(f, legs, maps.mult, maps.unit, maps.comult, maps.counit, maps.antipode, bound),
        ),
    ];
    if let Some(inv) = maps.antipode_inv {
        items.push(ReportItem::from_check(
            &format!("{prefix}-antipode-inverse"),
            "S S⁻¹ = id = S⁻¹ S",
            check_inverse_pair(f, legs, maps.antipode, inv, bound),
        ));
    }
    items
}

/// A flip chain `A ⊗ A -> A ⊗ A` for a carrier of `n` legs.
pub fn flip_chain(field: Field, legs: &[Space]) -> Chain {
    let n = legs.len();
    Chain::new(field, doubled(legs, 2)).flip(0, n, n)
}
