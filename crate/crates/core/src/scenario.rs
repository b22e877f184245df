//! Scenario files: a JSON description of a duality scenario, its parser,
//! its canonical serializer and the run entry point.
//!
//! Scalars are strings (`"3"`, `"-1/2"`); JSON numbers are rejected. A
//! matrix is a list of rows: row `r`, column `c` holds the coefficient of
//! output basis vector `r` in the image of input basis vector `c`, with
//! tensor indices flattened row-major.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::base_hopf::HopfAlgebraData;
use crate::braided::{dual_braided_hopf, BraidedHopfAlgebra};
use crate::duality::{verify_suites, DualityScenario, Suite, ENGINE_ITEM};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::pairing::{ground_algebra, ComoduleAlgebra, QuasiDualPairing};
use crate::report::{Report, Status};
use crate::scalar::Field;
use crate::space::{BasedSpace, Space};
use crate::yd::YDModule;

pub type Matrix = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub name: String,
    /// `"Q"` or `"GF:p"`.
    pub field: String,
    /// Highest total degree checked on graded instances.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    /// Suites run when the caller does not choose; empty means all.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<String>,
    pub base: BaseSpec,
    pub modules: BTreeMap<String, ModuleSpec>,
    pub h: HopfRef,
    pub hd: HopfRef,
    pub pairing: PairingRef,
    pub r: ComoduleRef,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    pub basis: Vec<String>,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<Matrix>,
}

/// A Yetter-Drinfeld module on one leg: `action: B ⊗ V -> V`,
/// `coaction: V -> B ⊗ V`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
    pub action: Matrix,
    pub coaction: Matrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub module: String,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<Matrix>,
}

/// Inline structure, or `"dual-of:H"` / `"dual-of:Hd"` (also spelled
/// `"graded-dual-of:…"`; duals are taken degreewise either way).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Named(String),
    Inline(HopfSpec),
}

/// `"evaluation"`, `"evaluation-composed-with-braiding"` or an explicit
/// matrix with `matrix[i][j] = ⟨f_i, e_j⟩`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PairingRef {
    Named(String),
    Inline { matrix: Matrix },
}

/// `"hd-with-comult"`, `"ground"` or an inline comodule algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComoduleRef {
    Named(String),
    Inline(ComoduleSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub module: String,
    pub mult: Matrix,
    pub unit: Matrix,
    /// `ψ: R -> R ⊗ H^d` as a matrix, or `"comult"` for `ψ = Δ_{H^d}`.
    pub psi: PsiRef,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PsiRef {
    Named(String),
    Matrix(Matrix),
}

fn semantic(field: &str, message: impl ToString) -> Error {
    Error::Semantic {
        field: field.to_string(),
        message: message.to_string(),
    }
}

fn matrix(f: Field, field: &str, dom: &[Space], cod: &[Space], rows: &Matrix) -> Result<LinMap> {
    let rows_expected: usize = cod.iter().map(|s| s.dim).product();
    let cols_expected: usize = dom.iter().map(|s| s.dim).product();
    if rows.len() != rows_expected || rows.iter().any(|r| r.len() != cols_expected) {
        return Err(semantic(
            field,
            format!(
                "expected a {rows_expected}x{cols_expected} matrix, found {}x{}",
                rows.len(),
                rows.first().map_or(0, Vec::len)
            ),
        ));
    }
    LinMap::from_nested(f, dom.to_vec(), cod.to_vec(), rows).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{field}: {m}")),
        other => semantic(field, other),
    })
}

impl ScenarioFile {
    pub fn from_json(text: &str) -> Result<ScenarioFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty JSON with each matrix row and label list on one line.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("scenario serializes");
        let mut out = String::new();
        write_value(&mut out, &value, 0);
        out.push('\n');
        out
    }

    /// Suites named in the file, defaulting to all.
    pub fn suites(&self) -> Result<Vec<Suite>> {
        if self.suites.is_empty() {
            return Ok(vec![Suite::All]);
        }
        self.suites.iter().map(|s| Suite::parse(s).map_err(|e| semantic("suites", e))).collect()
    }

    pub fn build(&self) -> Result<DualityScenario> {
        let f = Field::parse(&self.field).map_err(|e| semantic("field", e))?;
        let base = self.build_base(f)?;
        let (h, hd) = self.build_pair(&base)?;
        let pairing = match &self.pairing {
            PairingRef::Named(n) if n == "evaluation" => QuasiDualPairing::evaluation(hd, h),
            PairingRef::Named(n) if n == "evaluation-composed-with-braiding" => QuasiDualPairing::evaluation_through_braiding(hd, h),
            PairingRef::Named(n) => return Err(semantic("pairing", format!("unknown pairing {n:?}"))),
            PairingRef::Inline { matrix } => {
                let rows = matrix
                    .iter()
                    .map(|row| row.iter().map(|s| f.parse_scalar(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::Parse(format!("pairing.matrix: {e}")))?;
                QuasiDualPairing::new(hd, h, rows)
            }
        }
        .map_err(|e| semantic("pairing", e))?;
        let r = self.build_r(&base, &pairing.hd)?;
        Ok(DualityScenario {
            name: self.name.clone(),
            base,
            pairing,
            r,
        })
    }

    fn build_base(&self, f: Field) -> Result<HopfAlgebraData> {
        let s = &self.base;
        if s.basis.is_empty() {
            return Err(semantic("base.basis", "the base algebra needs a basis"));
        }
        let b = BasedSpace::labelled("B", s.basis.clone());
        let one = [b.clone()];
        let two = [b.clone(), b.clone()];
        let data = HopfAlgebraData {
            field: f,
            carrier: b.clone(),
            mult: matrix(f, "base.mult", &two, &one, &s.mult)?,
            unit: matrix(f, "base.unit", &[], &one, &s.unit)?,
            comult: matrix(f, "base.comult", &one, &two, &s.comult)?,
            counit: matrix(f, "base.counit", &one, &[], &s.counit)?,
            antipode: matrix(f, "base.antipode", &one, &one, &s.antipode)?,
            antipode_inv: match &s.antipode_inv {
                Some(m) => Some(matrix(f, "base.antipode_inv", &one, &one, m)?),
                None => None,
            },
        };
        match data.antipode_inv {
            Some(_) => Ok(data),
            None => data.with_antipode_inverse().map_err(|e| semantic("base.antipode", e)),
        }
    }

    /// Builds the module `key` on a carrier named `role`.
    fn build_module(&self, b: &HopfAlgebraData, field: &str, key: &str, role: &str) -> Result<YDModule> {
        let s = self
            .modules
            .get(key)
            .ok_or_else(|| semantic(field, format!("undefined module {key:?}")))?;
        let space = match &s.degrees {
            Some(d) if d.len() != s.basis.len() => {
                return Err(semantic(&format!("modules.{key}.degrees"), "one degree per basis vector is required"))
            }
            Some(d) => BasedSpace::graded(role, s.basis.clone(), d.clone()),
            None => BasedSpace::labelled(role, s.basis.clone()),
        };
        let legs = vec![space.clone()];
        let bv = [b.carrier.clone(), space];
        let action = matrix(b.field, &format!("modules.{key}.action"), &bv, &legs, &s.action)?;
        let coaction = matrix(b.field, &format!("modules.{key}.coaction"), &legs, &bv, &s.coaction)?;
        YDModule::new(role, b, legs, action, coaction).map_err(|e| semantic(&format!("modules.{key}"), e))
    }

    fn graded_default(&self) -> Option<usize> {
        self.truncation.or_else(|| {
            self.modules
                .values()
                .filter_map(|m| m.degrees.as_ref().and_then(|d| d.iter().copied().max()))
                .filter(|&d| d > 0)
                .max()
        })
    }

    fn build_hopf(&self, b: &HopfAlgebraData, field: &str, s: &HopfSpec, role: &str) -> Result<BraidedHopfAlgebra> {
        let module = self.build_module(b, &format!("{field}.module"), &s.module, role)?;
        let f = b.field;
        let one = module.legs.clone();
        let two = [one.clone(), one.clone()].concat();
        let h = BraidedHopfAlgebra {
            name: role.to_string(),
            mult: matrix(f, &format!("{field}.mult"), &two, &one, &s.mult)?,
            unit: matrix(f, &format!("{field}.unit"), &[], &one, &s.unit)?,
            comult: matrix(f, &format!("{field}.comult"), &one, &two, &s.comult)?,
            counit: matrix(f, &format!("{field}.counit"), &one, &[], &s.counit)?,
            antipode: matrix(f, &format!("{field}.antipode"), &one, &one, &s.antipode)?,
            antipode_inv: match &s.antipode_inv {
                Some(m) => Some(matrix(f, &format!("{field}.antipode_inv"), &one, &one, m)?),
                None => None,
            },
            truncation: self.graded_default(),
            module,
        };
        match h.antipode_inv {
            Some(_) => Ok(h),
            None => h.with_antipode_inverse().map_err(|e| semantic(&format!("{field}.antipode"), e)),
        }
    }

    fn build_pair(&self, b: &HopfAlgebraData) -> Result<(BraidedHopfAlgebra, BraidedHopfAlgebra)> {
        let dual_source = |r: &HopfRef, field: &str| -> Result<Option<String>> {
            match r {
                HopfRef::Inline(_) => Ok(None),
                HopfRef::Named(n) => {
                    let src = n
                        .strip_prefix("dual-of:")
                        .or_else(|| n.strip_prefix("graded-dual-of:"))
                        .ok_or_else(|| semantic(field, format!("expected inline structure or \"dual-of:<H|Hd>\", found {n:?}")))?;
                    match src {
                        "H" | "Hd" => Ok(Some(src.to_string())),
                        other => Err(semantic(field, format!("undefined Hopf algebra {other:?}"))),
                    }
                }
            }
        };
        let h_src = dual_source(&self.h, "h")?;
        let hd_src = dual_source(&self.hd, "hd")?;
        match (&self.h, &self.hd) {
            (HopfRef::Inline(hs), HopfRef::Inline(ds)) => Ok((self.build_hopf(b, "h", hs, "H")?, self.build_hopf(b, "hd", ds, "Hd")?)),
            (HopfRef::Inline(hs), HopfRef::Named(_)) => {
                if hd_src.as_deref() != Some("H") {
                    return Err(semantic("hd", "H^d can only be the dual of H"));
                }
                let h = self.build_hopf(b, "h", hs, "H")?;
                let hd = dual_braided_hopf(b, &h, "Hd")?;
                Ok((h, hd))
            }
            (HopfRef::Named(_), HopfRef::Inline(ds)) => {
                if h_src.as_deref() != Some("Hd") {
                    return Err(semantic("h", "H can only be the dual of Hd"));
                }
                let hd = self.build_hopf(b, "hd", ds, "Hd")?;
                let h = dual_braided_hopf(b, &hd, "H")?;
                Ok((h, hd))
            }
            (HopfRef::Named(_), HopfRef::Named(_)) => Err(semantic("h", "H and H^d cannot both be given as duals")),
        }
    }

    fn build_r(&self, b: &HopfAlgebraData, hd: &BraidedHopfAlgebra) -> Result<ComoduleAlgebra> {
        match &self.r {
            ComoduleRef::Named(n) if n == "hd-with-comult" => ComoduleAlgebra::hd_with_comult(hd, "R"),
            ComoduleRef::Named(n) if n == "ground" => Ok(ground_algebra(b, hd, "R")),
            ComoduleRef::Named(n) => Err(semantic("r", format!("unknown comodule algebra {n:?}"))),
            ComoduleRef::Inline(s) => {
                let module = self.build_module(b, "r.module", &s.module, "R")?;
                let f = b.field;
                let one = module.legs.clone();
                let two = [one.clone(), one.clone()].concat();
                let mult = matrix(f, "r.mult", &two, &one, &s.mult)?;
                let unit = matrix(f, "r.unit", &[], &one, &s.unit)?;
                let coacted = [one.clone(), hd.legs()].concat();
                let psi = match &s.psi {
                    PsiRef::Matrix(m) => matrix(f, "r.psi", &one, &coacted, m)?,
                    PsiRef::Named(n) if n == "comult" => {
                        if module.dim() != hd.dim() {
                            return Err(semantic("r.psi", "\"comult\" needs R to have the dimension of H^d"));
                        }
                        hd.comult.relabel(one.clone(), coacted).map_err(|e| semantic("r.psi", e))?
                    }
                    PsiRef::Named(n) => return Err(semantic("r.psi", format!("unknown coaction {n:?}"))),
                };
                Ok(ComoduleAlgebra {
                    algebra: Algebra::from_maps("R", module, &mult, unit),
                    psi,
                })
            }
        }
    }
}

fn write_value(out: &mut String, v: &serde_json::Value, indent: usize) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(|i| serde_json::to_string(i).expect("scalars serialize")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("keys serialize"));
                out.push_str(": ");
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalars serialize")),
    }
}

fn nested(m: &LinMap) -> Matrix {
    m.to_nested()
}

pub fn base_spec(b: &HopfAlgebraData) -> BaseSpec {
    BaseSpec {
        basis: b.carrier.labels.clone(),
        mult: nested(&b.mult),
        unit: nested(&b.unit),
        comult: nested(&b.comult),
        counit: nested(&b.counit),
        antipode: nested(&b.antipode),
        antipode_inv: b.antipode_inv.as_ref().map(nested),
    }
}

pub fn module_spec(m: &YDModule) -> ModuleSpec {
    let s = &m.legs[0];
    ModuleSpec {
        basis: s.labels.clone(),
        degrees: s.is_graded().then(|| s.degrees.clone()),
        action: nested(&m.action),
        coaction: nested(&m.coaction),
    }
}

pub fn hopf_spec(h: &BraidedHopfAlgebra, module: &str) -> HopfSpec {
    HopfSpec {
        module: module.to_string(),
        mult: nested(&h.mult),
        unit: nested(&h.unit),
        comult: nested(&h.comult),
        counit: nested(&h.counit),
        antipode: nested(&h.antipode),
        antipode_inv: h.antipode_inv.as_ref().map(nested),
    }
}

/// The canonical, fully inline file of a scenario.
pub fn serialize(sc: &DualityScenario) -> ScenarioFile {
    let p = &sc.pairing;
    let modules = BTreeMap::from([
        ("H".to_string(), module_spec(&p.h.module)),
        ("Hd".to_string(), module_spec(&p.hd.module)),
        ("R".to_string(), module_spec(&sc.r.algebra.module)),
    ]);
    ScenarioFile {
        name: sc.name.clone(),
        field: sc.field().spec(),
        truncation: p.h.truncation.or(p.hd.truncation),
        suites: Vec::new(),
        base: base_spec(&sc.base),
        modules,
        h: HopfRef::Inline(hopf_spec(&p.h, "H")),
        hd: HopfRef::Inline(hopf_spec(&p.hd, "Hd")),
        pairing: PairingRef::Inline {
            matrix: p.matrix().iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        },
        r: ComoduleRef::Inline(ComoduleSpec {
            module: "R".into(),
            mult: nested(&sc.r.algebra.mult.materialize()),
            unit: nested(&sc.r.algebra.unit),
            psi: PsiRef::Matrix(nested(&sc.r.psi)),
        }),
    }
}

pub fn read_scenario_file(path: &Path) -> Result<ScenarioFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    ScenarioFile::from_json(&text)
}

pub fn parse_scenario(path: &Path) -> Result<DualityScenario> {
    read_scenario_file(path)?.build()
}

/// Process exit code for a finished report: 0 when every item passes or
/// is not asserted, 2 when the engine refused the scenario, 1 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.items.iter().any(|i| i.id == ENGINE_ITEM && i.status == Status::Error) {
        2
    } else if report.all_ok() {
        0
    } else {
        1
    }
}

/// Exit code for a scenario that could not be constructed.
pub const CONSTRUCTION_ERROR: i32 = 2;

pub fn run(sc: &DualityScenario, suites: &[Suite]) -> (Report, i32) {
    let report = verify_suites(sc, suites);
    let code = exit_code(&report);
    (report, code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_example;

    #[test]
    fn serialize_parse_serialize_is_stable() {
        for name in ["trivial", "super_line", "super_line_second", "sweedler_base_negative"] {
            let first = serialize(&build_example(name, None).unwrap());
            let text = first.to_json();
            let again = ScenarioFile::from_json(&text).unwrap();
            assert_eq!(again, first);
            let rebuilt = serialize(&again.build().unwrap());
            assert_eq!(rebuilt.to_json(), text, "{name}");
        }
    }

    #[test]
    fn graded_truncation_survives_round_trip() {
        let sc = build_example("poly_line_N6", Some(3)).unwrap();
        let file = serialize(&sc);
        assert_eq!(file.truncation, Some(3));
        let back = file.build().unwrap();
        assert_eq!(back.pairing.h.truncation, Some(3));
        assert_eq!(back.pairing.h.carrier().degrees, vec![0, 1, 2, 3]);
    }

    #[test]
    fn zero_denominator_is_a_parse_error() {
        let mut file = serialize(&build_example("super_line", None).unwrap());
        file.base.mult[0][0] = "1/0".into();
        let err = file.build().err().expect("build must fail");
        assert!(matches!(err, Error::Parse(ref m) if m.contains("base.mult")), "{err}");
    }

    #[test]
    fn undefined_module_is_a_semantic_error() {
        let mut file = serialize(&build_example("super_line", None).unwrap());
        if let HopfRef::Inline(h) = &mut file.h {
            h.module = "Nope".into();
        }
        let err = file.build().err().expect("build must fail");
        assert!(matches!(err, Error::Semantic { ref field, .. } if field == "h.module"), "{err}");
    }

    #[test]
    fn floats_are_rejected_with_a_position() {
        let text = serialize(&build_example("trivial", None).unwrap()).to_json().replacen("\"1\"", "1.0", 1);
        let err = ScenarioFile::from_json(&text).unwrap_err().to_string();
        assert!(err.contains("line") && err.contains("column"), "{err}");
    }

    #[test]
    fn short_forms_rebuild_the_catalog_scenario() {
        let sc = build_example("super_line", None).unwrap();
        let mut file = serialize(&sc);
        file.hd = HopfRef::Named("dual-of:H".into());
        file.pairing = PairingRef::Named("evaluation".into());
        file.r = ComoduleRef::Named("hd-with-comult".into());
        file.modules.retain(|k, _| k == "H");
        assert_eq!(serialize(&file.build().unwrap()), serialize(&sc));
    }

    #[test]
    fn wrong_matrix_shape_names_the_field() {
        let mut file = serialize(&build_example("super_line", None).unwrap());
        file.base.unit.pop();
        let err = file.build().err().expect("build must fail");
        assert!(matches!(err, Error::Semantic { ref field, .. } if field == "base.unit"), "{err}");
    }

    #[test]
    fn exit_codes_follow_outcomes() {
        let ok = build_example("super_line", None).unwrap();
        assert_eq!(run(&ok, &[Suite::Axioms]).1, 0);
        let bad = build_example("super_line_zeroed_row", None).unwrap();
        assert_eq!(run(&bad, &[Suite::Axioms]).1, 1);
    }
}
