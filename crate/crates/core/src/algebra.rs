//! Algebras in the Yetter-Drinfeld category with lazily evaluated
//! multiplication, and their braided tensor products.

use crate::axioms::{check_associative, check_unital};
use crate::base_hopf::HopfAlgebraData;
use crate::error::Result;
use crate::linmap::LinMap;
use crate::report::ReportItem;
use crate::scalar::{Field, Scalar};
use crate::space::{total_dim, Space};
use crate::tensor::{Chain, DegreeBound, TensorVec};
use crate::yd::{braiding, tensor_module, yd_morphism_witness, YDModule};

/// An algebra whose carrier is a YD module; `mult` is a composite that is
/// never materialized unless asked for.
#[derive(Clone)]
pub struct Algebra {
    pub name: String,
    pub module: YDModule,
    pub mult: Chain,
    /// `k -> legs`
    pub unit: LinMap,
}

impl Algebra {
    pub fn from_maps(name: impl Into<String>, module: YDModule, mult: &LinMap, unit: LinMap) -> Algebra {
        Algebra {
            name: name.into(),
            module,
            mult: Chain::from_map(mult),
            unit,
        }
    }

    pub fn legs(&self) -> &[Space] {
        &self.module.legs
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn dim(&self) -> usize {
        total_dim(self.legs())
    }

    pub fn arity(&self) -> usize {
        self.module.arity()
    }

    /// Product of two elements given as sparse vectors.
    pub fn product(&self, u: &TensorVec, v: &TensorVec) -> TensorVec {
        let mut legs = u.legs.clone();
        legs.extend(v.legs.iter().cloned());
        let mut terms = std::collections::BTreeMap::new();
        let d = total_dim(&v.legs);
        for (i, a) in &u.terms {
            for (j, b) in &v.terms {
                terms.insert(i * d + j, a * b);
            }
        }
        self.mult.eval(TensorVec { legs, terms })
    }

    pub fn one(&self) -> TensorVec {
        let t = Chain::from_map(&self.unit).eval(TensorVec::basis(vec![], 0, self.field()));
        TensorVec {
            legs: self.legs().to_vec(),
            terms: t.terms,
        }
    }

    pub fn basis(&self, index: usize) -> TensorVec {
        TensorVec::basis(self.legs().to_vec(), index, self.field())
    }

    /// Associativity and unitality.
    pub fn check(&self, prefix: &str, bound: DegreeBound) -> Vec<ReportItem> {
        let f = self.field();
        vec![
            ReportItem::from_check(
                &format!("{prefix}-associativity"),
                &format!("{} is associative", self.name),
                check_associative(f, self.legs(), &self.mult, bound),
            ),
            ReportItem::from_check(
                &format!("{prefix}-unitality"),
                &format!("{} is unital", self.name),
                check_unital(f, self.legs(), &self.mult, &self.unit, bound),
            ),
        ]
    }

    /// Multiplication and unit are YD morphisms.
    pub fn check_in_category(&self, b: &HopfAlgebraData, prefix: &str, bound: DegreeBound) -> Result<Vec<ReportItem>> {
        let aa = tensor_module(b, &self.module, &self.module)?;
        let k = crate::yd::trivial_module(b);
        Ok(vec![
            ReportItem::from_check(
                &format!("{prefix}-mult-yd-morphism"),
                &format!("multiplication of {} is a YD morphism", self.name),
                yd_morphism_witness(b, &self.mult, &aa, &self.module, bound),
            ),
            ReportItem::from_check(
                &format!("{prefix}-unit-yd-morphism"),
                &format!("unit of {} is a YD morphism", self.name),
                yd_morphism_witness(b, &Chain::from_map(&self.unit), &k, &self.module, bound),
            ),
        ])
    }
}

/// `A ⊗ D` with `(a ⊗ d)(a' ⊗ d') = a (d₋₁·a') ⊗ d₀ d'`.
pub fn braided_tensor_algebra(b: &HopfAlgebraData, a: &Algebra, d: &Algebra) -> Result<Algebra> {
    let module = tensor_module(b, &a.module, &d.module)?;
    let na = a.arity();
    let dom: Vec<Space> = [a.legs(), d.legs(), a.legs(), d.legs()].concat();
    let mult = Chain::new(b.field, dom)
        .at_chain(na, &braiding(&d.module, &a.module)?)?
        .at_chain(0, &a.mult)?
        .at_chain(na, &d.mult)?
        .memoized();
    Ok(Algebra {
        name: format!("{}⊗{}", a.name, d.name),
        module,
        mult,
        unit: a.unit.tensor(&d.unit),
    })
}

/// Dense vector of a sparse tensor.
pub fn dense(v: &TensorVec, field: Field) -> Vec<Scalar> {
    let mut out = vec![field.zero(); total_dim(&v.legs)];
    for (i, x) in &v.terms {
        out[*i] = x.clone();
    }
    out
}
