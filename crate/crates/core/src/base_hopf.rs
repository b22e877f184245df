//! The finite-dimensional base Hopf algebra `B`.

use crate::axioms::{flip_chain, hopf_items, HopfMaps};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::ReportItem;
use crate::scalar::{Field, Scalar};
use crate::space::{BasedSpace, Space};
use crate::tensor::{check_equal, Chain, DegreeBound};

/// A Hopf algebra given by structure constants.
///
/// Nothing is validated on construction; use [`check_hopf`].
#[derive(Clone, Debug)]
pub struct HopfAlgebraData {
    pub field: Field,
    pub carrier: Space,
    pub mult: LinMap,
    pub unit: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    pub antipode_inv: Option<LinMap>,
}

/// An R-matrix `Σ R⁽¹⁾ ⊗ R⁽²⁾` as a vector of `B ⊗ B`.
#[derive(Clone, Debug)]
pub struct QuasitriangularData {
    pub rmatrix: Vec<Scalar>,
}

impl HopfAlgebraData {
    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn legs(&self) -> Vec<Space> {
        vec![self.carrier.clone()]
    }

    pub fn maps(&self) -> HopfMaps<'_> {
        HopfMaps {
            field: self.field,
            legs: std::slice::from_ref(&self.carrier),
            mult: &self.mult,
            unit: &self.unit,
            comult: &self.comult,
            counit: &self.counit,
            antipode: &self.antipode,
            antipode_inv: self.antipode_inv.as_ref(),
        }
    }

    /// `S⁻¹`, failing when none was computed.
    pub fn antipode_inverse(&self) -> Result<&LinMap> {
        self.antipode_inv
            .as_ref()
            .ok_or_else(|| Error::MissingAntipodeInverse(self.carrier.name.clone()))
    }

    /// Returns a copy with `antipode_inv` filled in.
    pub fn with_antipode_inverse(mut self) -> Result<HopfAlgebraData> {
        self.antipode_inv = Some(invert_antipode(&self)?);
        Ok(self)
    }

    /// Product of two basis elements as a dense vector.
    pub fn product(&self, a: usize, b: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|r| self.mult.entry(r, a * self.dim() + b).clone()).collect()
    }
}

/// Every Hopf axiom with a witness on failure.
pub fn check_hopf(b: &HopfAlgebraData) -> Vec<ReportItem> {
    let braid = flip_chain(b.field, &b.legs());
    hopf_items("hopf-B", &b.maps(), &braid, DegreeBound(None))
}

pub fn invert_antipode(b: &HopfAlgebraData) -> Result<LinMap> {
    b.antipode.inverse().map_err(|e| match e {
        Error::NotInvertible(m) => Error::NotInvertible(format!("antipode of {}: {m}", b.carrier.name)),
        other => other,
    })
}

pub fn is_commutative(b: &HopfAlgebraData) -> bool {
    let legs = vec![b.carrier.clone(), b.carrier.clone()];
    let lhs = Chain::from_map(&b.mult);
    let rhs = Chain::new(b.field, legs).flip(0, 1, 1).then(&b.mult).unwrap();
    check_equal(&lhs, &rhs, DegreeBound(None)).unwrap().is_none()
}

pub fn is_cocommutative(b: &HopfAlgebraData) -> bool {
    let lhs = Chain::from_map(&b.comult);
    let rhs = Chain::from_map(&b.comult).flip(0, 1, 1);
    check_equal(&lhs, &rhs, DegreeBound(None)).unwrap().is_none()
}

/// The group algebra of a finite group given by its Cayley table
/// (`table[a][b]` is the index of `ab`).
pub fn build_group_algebra(field: Field, table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<HopfAlgebraData> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not an n×n table over 0..n (closure)".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails on ({a}, {b}, {c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let inverse: Vec<usize> = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
        })
        .collect::<Result<_>>()?;
    let labels = labels.unwrap_or_else(|| {
        (0..n)
            .map(|i| if i == e { "1".to_string() } else { format!("g{i}") })
            .collect()
    });
    let b = BasedSpace::labelled("B", labels);
    let one = field.one();
    let mult = LinMap::from_columns(
        field,
        vec![b.clone(), b.clone()],
        vec![b.clone()],
        &(0..n * n).map(|c| vec![(table[c / n][c % n], one.clone())]).collect::<Vec<_>>(),
    );
    let unit = LinMap::from_columns(field, vec![], vec![b.clone()], &[vec![(e, one.clone())]]);
    let comult = LinMap::from_columns(
        field,
        vec![b.clone()],
        vec![b.clone(), b.clone()],
        &(0..n).map(|g| vec![(g * n + g, one.clone())]).collect::<Vec<_>>(),
    );
    let counit = LinMap::from_fn(field, vec![b.clone()], vec![], |_, _| one.clone());
    let antipode = LinMap::from_columns(
        field,
        vec![b.clone()],
        vec![b.clone()],
        &(0..n).map(|g| vec![(inverse[g], one.clone())]).collect::<Vec<_>>(),
    );
    Ok(HopfAlgebraData {
        field,
        carrier: b,
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inv: None,
    })
}

/// Cayley table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// `k Z_n` with basis `1, g, g^2, ...`.
pub fn cyclic_group_algebra(field: Field, n: usize) -> HopfAlgebraData {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    build_group_algebra(field, &cyclic_table(n), Some(labels))
        .expect("cyclic tables are groups")
        .with_antipode_inverse()
        .expect("group antipodes are invertible")
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf(field: Field) -> HopfAlgebraData {
    build_group_algebra(field, &[vec![0]], Some(vec!["1".into()]))
        .expect("trivial group")
        .with_antipode_inverse()
        .expect("identity antipode")
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`.
pub fn sweedler_h4(field: Field) -> HopfAlgebraData {
    // basis index = 2*b + a for g^a x^b
    let b = BasedSpace::labelled("B", vec!["1".into(), "g".into(), "x".into(), "gx".into()]);
    let idx = |a: usize, x: usize| 2 * x + a;
    let mut mult_cols = Vec::new();
    for l in 0..4 {
        for r in 0..4 {
            let (a, bx) = (l % 2, l / 2);
            let (c, d) = (r % 2, r / 2);
            // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
            if bx + d >= 2 {
                mult_cols.push(vec![]);
                continue;
            }
            let sign = if bx * c % 2 == 1 { -1 } else { 1 };
            mult_cols.push(vec![(idx((a + c) % 2, bx + d), field.int(sign))]);
        }
    }
    let legs = vec![b.clone()];
    let mult = LinMap::from_columns(field, vec![b.clone(), b.clone()], legs.clone(), &mult_cols);
    let unit = LinMap::from_columns(field, vec![], legs.clone(), &[vec![(0, field.one())]]);
    let t = |i: usize, j: usize| i * 4 + j;
    let comult = LinMap::from_columns(
        field,
        legs.clone(),
        vec![b.clone(), b.clone()],
        &[
            vec![(t(0, 0), field.one())],
            vec![(t(1, 1), field.one())],
            vec![(t(2, 0), field.one()), (t(1, 2), field.one())],
            vec![(t(3, 1), field.one()), (t(0, 3), field.one())],
        ],
    );
    let counit = LinMap::from_columns(
        field,
        legs.clone(),
        vec![],
        &[vec![(0, field.one())], vec![(0, field.one())], vec![], vec![]],
    );
    let antipode = LinMap::from_columns(
        field,
        legs.clone(),
        legs,
        &[
            vec![(0, field.one())],
            vec![(1, field.one())],
            vec![(3, field.int(-1))],
            vec![(2, field.one())],
        ],
    );
    HopfAlgebraData {
        field,
        carrier: b,
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inv: None,
    }
    .with_antipode_inverse()
    .expect("Sweedler antipode has order 4")
}

/// The dual Hopf algebra `B*` on the dual basis: every structure tensor is
/// transposed.
pub fn dual_hopf(b: &HopfAlgebraData) -> HopfAlgebraData {
    let labels = b.carrier.labels.iter().map(|l| format!("{l}*")).collect();
    let d = BasedSpace::labelled(format!("{}*", b.carrier.name), labels);
    let one = vec![d.clone()];
    let two = vec![d.clone(), d.clone()];
    let re = |m: &LinMap, dom: &[Space], cod: &[Space]| m.transpose().relabel(dom.to_vec(), cod.to_vec()).unwrap();
    HopfAlgebraData {
        field: b.field,
        carrier: d.clone(),
        mult: re(&b.comult, &two, &one),
        unit: re(&b.counit, &[], &one),
        comult: re(&b.mult, &one, &two),
        counit: re(&b.unit, &one, &[]),
        antipode: re(&b.antipode, &one, &one),
        antipode_inv: b.antipode_inv.as_ref().map(|s| re(s, &one, &one)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    const Q: Field = Field::Rational;

    fn all_pass(items: &[ReportItem]) -> bool {
        for i in items.iter().filter(|i| i.status != Status::Pass) {
            eprintln!("{}: {:?} {:?}", i.id, i.status, i.witness);
        }
        items.iter().all(|i| i.status == Status::Pass)
    }

    #[test]
    fn group_algebra_z2_passes() {
        let b = cyclic_group_algebra(Q, 2);
        assert!(all_pass(&check_hopf(&b)));
        assert!(b.antipode.equal(&LinMap::identity(Q, b.legs())).unwrap());
        assert!(b.antipode_inverse().unwrap().equal(&LinMap::identity(Q, b.legs())).unwrap());
        assert!(is_commutative(&b) && is_cocommutative(&b));
    }

    #[test]
    fn zero_antipode_fails_with_witness() {
        let mut b = cyclic_group_algebra(Q, 2);
        b.antipode = LinMap::zero(Q, b.legs(), b.legs());
        b.antipode_inv = None;
        let items = check_hopf(&b);
        let anti = items.iter().find(|i| i.id == "hopf-B-antipode").unwrap();
        assert_eq!(anti.status, Status::Fail);
        // the unit is the first basis input, and it already fails
        assert!(anti.witness.as_ref().unwrap().contains("input 1"));
        assert!(matches!(invert_antipode(&b), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn z4_antipode_sends_generator_to_cube() {
        let b = cyclic_group_algebra(Q, 4);
        assert_eq!(b.dim(), 4);
        assert!(b.antipode.entry(3, 1).is_one());
        assert!(all_pass(&check_hopf(&b)));
    }

    #[test]
    fn non_group_tables_are_rejected() {
        let no_identity = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(build_group_algebra(Q, &no_identity, None), Err(Error::NotAGroup(_))));
        let not_assoc = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(build_group_algebra(Q, &not_assoc, None).is_err());
    }

    #[test]
    fn non_abelian_group_detected() {
        // S3 as permutations of {0,1,2}
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| find([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let b = build_group_algebra(Q, &table, None).unwrap().with_antipode_inverse().unwrap();
        assert!(all_pass(&check_hopf(&b)));
        assert!(!is_commutative(&b));
        assert!(is_cocommutative(&b));
    }

    /// Independent presentation of H4: words g^a x^b multiplied by hand.
    #[test]
    fn sweedler_matches_presentation() {
        let h = sweedler_h4(Q);
        assert!(all_pass(&check_hopf(&h)));
        // x g = -g x
        let xg = h.product(2, 1);
        assert_eq!(xg, vec![Q.zero(), Q.zero(), Q.zero(), Q.int(-1)]);
        // x x = 0
        assert!(h.product(2, 2).iter().all(Scalar::is_zero));
        // g g = 1
        assert_eq!(h.product(1, 1), vec![Q.one(), Q.zero(), Q.zero(), Q.zero()]);
        assert!(!is_commutative(&h));
        assert!(!is_cocommutative(&h));
        // S^2 ≠ id, S^4 = id, S⁻¹ = S³
        let s = &h.antipode;
        let s2 = s.compose(s).unwrap();
        let s4 = s2.compose(&s2).unwrap();
        let id = LinMap::identity(Q, h.legs());
        assert!(!s2.equal(&id).unwrap());
        assert!(s4.equal(&id).unwrap());
        let s3 = s2.compose(s).unwrap();
        assert!(h.antipode_inverse().unwrap().equal(&s3).unwrap());
    }

    #[test]
    fn trivial_hopf_is_commutative_and_cocommutative() {
        let k = trivial_hopf(Q);
        assert!(is_commutative(&k) && is_cocommutative(&k));
        assert!(all_pass(&check_hopf(&k)));
        let kd = dual_hopf(&k);
        assert_eq!(kd.dim(), 1);
        assert!(all_pass(&check_hopf(&kd)));
    }

    #[test]
    fn dual_of_group_algebra_is_pointwise() {
        let b = cyclic_group_algebra(Q, 2);
        let d = dual_hopf(&b);
        assert!(all_pass(&check_hopf(&d)));
        // indicator functions: δ_i δ_j = [i = j] δ_i
        for i in 0..2 {
            for j in 0..2 {
                let p = d.product(i, j);
                for (k, v) in p.iter().enumerate() {
                    assert_eq!(v.is_one(), i == j && k == i);
                }
            }
        }
        let dd = dual_hopf(&d);
        assert_eq!(dd.mult.to_nested(), b.mult.to_nested());
        assert_eq!(dd.comult.to_nested(), b.comult.to_nested());
        assert_eq!(dd.antipode.to_nested(), b.antipode.to_nested());
    }

    #[test]
    fn dual_of_sweedler_passes() {
        let d = dual_hopf(&sweedler_h4(Q));
        assert!(all_pass(&check_hopf(&d)));
    }
}
