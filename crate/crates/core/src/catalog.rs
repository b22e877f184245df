//! Built-in example scenarios.

use crate::base_hopf::{cyclic_group_algebra, sweedler_h4, trivial_hopf, HopfAlgebraData};
use crate::braided::{build_exterior_algebra, build_polynomial_hopf, build_quantum_line, dual_braided_hopf, super_exterior, trivial_braided, BraidedHopfAlgebra};
use crate::duality::DualityScenario;
use crate::error::{Error, Result};
use crate::pairing::{ComoduleAlgebra, QuasiDualPairing};
use crate::scalar::{Field, Scalar};

const Q: Field = Field::Rational;

/// What a fresh run of an entry must produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// Every item passes or is not asserted.
    AllPass,
    /// At least one item fails; every listed id is among the failures.
    Fails(&'static [&'static str]),
    /// Construction is refused.
    Refused,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub expected: Expected,
    /// Default truncation for graded entries.
    pub default_degree: Option<usize>,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "trivial",
        summary: "B = k, H = H^d = R = k",
        expected: Expected::AllPass,
        default_degree: None,
    },
    CatalogEntry {
        name: "super_line",
        summary: "B = kZ2, H = Λ(x), H^d its dual, R = H^d with ψ = Δ",
        expected: Expected::AllPass,
        default_degree: None,
    },
    CatalogEntry {
        name: "super_plane",
        summary: "B = kZ2, H = Λ(x1, x2), H^d its dual, R = H^d with ψ = Δ",
        expected: Expected::AllPass,
        default_degree: None,
    },
    CatalogEntry {
        name: "poly_line_N6",
        summary: "B = k, H = k[x], H^d = k[y], ⟨y^m, x^n⟩ = δ_mn n!, R = k[y] with ψ = Δ, truncated at degree 6",
        expected: Expected::AllPass,
        default_degree: Some(6),
    },
    CatalogEntry {
        name: "super_line_second",
        summary: "roles swapped: H* acts, H is its quasi-dual under ev∘C, R = H with ψ = Δ",
        expected: Expected::AllPass,
        default_degree: None,
    },
    CatalogEntry {
        name: "qi_line_negative",
        summary: "B = kZ4 over GF(5), quantum line with braiding scalar i = 2; refused as non-symmetric",
        expected: Expected::Refused,
        default_degree: None,
    },
    CatalogEntry {
        name: "sweedler_base_negative",
        summary: "B = Sweedler H4, H = Λ(x) with g acting by -1 and x by 0; YD-morphism items not asserted",
        expected: Expected::AllPass,
        default_degree: None,
    },
    CatalogEntry {
        name: "poly_line_no_factorial",
        summary: "poly_line with ⟨y^m, x^n⟩ = δ_mn, which is not a quasi-dual pairing",
        expected: Expected::Fails(&["pairing-mult-h", "pairing-mult-hd"]),
        default_degree: Some(6),
    },
    CatalogEntry {
        name: "super_line_zeroed_row",
        summary: "super_line with the pairing row of x* set to zero",
        expected: Expected::Fails(&["pairing-left-faithful"]),
        default_degree: None,
    },
];

pub fn list_examples() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownExample {
        name: name.to_string(),
        available: CATALOG.iter().map(|e| e.name).collect::<Vec<_>>().join(", "),
    })
}

/// Builds an entry; `max_degree` overrides the truncation of graded entries.
pub fn build_example(name: &str, max_degree: Option<usize>) -> Result<DualityScenario> {
    let e = entry(name)?;
    let n = max_degree.or(e.default_degree);
    let mut sc = match name {
        "trivial" => trivial_scenario(),
        "super_line" => super_scenario(1, name),
        "super_plane" => super_scenario(2, name),
        "poly_line_N6" => poly_scenario(n.unwrap_or(6), true, name),
        "super_line_second" => second_duality_scenario(name),
        "qi_line_negative" => qi_line_scenario(name),
        "sweedler_base_negative" => sweedler_scenario(name),
        "poly_line_no_factorial" => poly_scenario(n.unwrap_or(6), false, name),
        "super_line_zeroed_row" => zeroed_row_scenario(name),
        _ => unreachable!("entry lookup succeeded"),
    }?;
    if let (Some(n), None) = (max_degree, e.default_degree) {
        sc = sc.with_max_degree(n);
    }
    Ok(sc)
}

/// `R = H^d` with `ψ = Δ` and the evaluation pairing against the dual.
fn dual_pair_scenario(name: &str, b: HopfAlgebraData, h: BraidedHopfAlgebra) -> Result<DualityScenario> {
    let hd = dual_braided_hopf(&b, &h, "Hd")?;
    let pairing = QuasiDualPairing::evaluation(hd, h)?;
    let r = ComoduleAlgebra::hd_with_comult(&pairing.hd, "R")?;
    Ok(DualityScenario {
        name: name.to_string(),
        base: b,
        pairing,
        r,
    })
}

pub fn trivial_scenario() -> Result<DualityScenario> {
    let b = trivial_hopf(Q);
    let h = trivial_braided(&b, "H");
    let hd = trivial_braided(&b, "Hd");
    let pairing = QuasiDualPairing::evaluation(hd, h)?;
    let r = crate::pairing::ground_algebra(&b, &pairing.hd, "R");
    Ok(DualityScenario {
        name: "trivial".into(),
        base: b,
        pairing,
        r,
    })
}

pub fn super_scenario(n: usize, name: &str) -> Result<DualityScenario> {
    let b = cyclic_group_algebra(Q, 2);
    let h = super_exterior(&b, n, "H")?;
    dual_pair_scenario(name, b, h)
}

fn factorial(f: Field, n: usize) -> Scalar {
    (1..=n as i64).fold(f.one(), |acc, k| &acc * &f.int(k))
}

/// `⟨y^m, x^n⟩ = δ_mn n!`, or `δ_mn` when `factorial` is false.
pub fn poly_scenario(n: usize, factorial_pairing: bool, name: &str) -> Result<DualityScenario> {
    let b = trivial_hopf(Q);
    let h = build_polynomial_hopf(&b, n, "H", "x")?;
    let hd = build_polynomial_hopf(&b, n, "Hd", "y")?;
    let matrix = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| match (i == j, factorial_pairing) {
                    (false, _) => Q.zero(),
                    (true, true) => factorial(Q, i),
                    (true, false) => Q.one(),
                })
                .collect()
        })
        .collect();
    let pairing = QuasiDualPairing::new(hd, h, matrix)?;
    let r = ComoduleAlgebra::hd_with_comult(&pairing.hd, "R")?;
    Ok(DualityScenario {
        name: name.to_string(),
        base: b,
        pairing,
        r,
    })
}

/// `H* = dual of Λ(x)` acts and `Λ(x)` is its quasi-dual under
/// `⟨v, u⟩ = ev(C(v ⊗ u))`; `R = H*` with `ψ = Δ`.
pub fn second_duality_scenario(name: &str) -> Result<DualityScenario> {
    let b = cyclic_group_algebra(Q, 2);
    let v = super_exterior(&b, 1, "Hd")?;
    let u = dual_braided_hopf(&b, &v, "H")?;
    let pairing = QuasiDualPairing::evaluation_through_braiding(v, u)?;
    let r = ComoduleAlgebra::hd_with_comult(&pairing.hd, "R")?;
    Ok(DualityScenario {
        name: name.to_string(),
        base: b,
        pairing,
        r,
    })
}

/// `k[x]/(x⁴)` over `kZ₄` with `g·x = i x`; dualizing refuses.
pub fn qi_line_scenario(name: &str) -> Result<DualityScenario> {
    let f = Field::Prime(5);
    let b = cyclic_group_algebra(f, 4);
    let h = build_quantum_line(&b, 4, f.int(2), "H")?;
    dual_pair_scenario(name, b, h)
}

/// `Λ(x)` over Sweedler's algebra, `g·x = -x`, `x·x = 0`, `δ(x) = g ⊗ x`.
pub fn sweedler_scenario(name: &str) -> Result<DualityScenario> {
    let b = sweedler_h4(Q);
    let h = build_exterior_algebra(&b, 1, &[Q.one(), Q.int(-1), Q.zero(), Q.zero()], 1, "H")?;
    dual_pair_scenario(name, b, h)
}

pub fn zeroed_row_scenario(name: &str) -> Result<DualityScenario> {
    let mut sc = super_scenario(1, name)?;
    let p = &sc.pairing;
    let mut m = p.matrix();
    m[1] = vec![Q.zero(); p.h.dim()];
    sc.pairing = QuasiDualPairing::new(p.hd.clone(), p.h.clone(), m)?;
    Ok(sc)
}

/// Runs an entry fresh and compares the outcome with its expectation.
pub fn self_test(e: &CatalogEntry) -> std::result::Result<(), String> {
    let sc = match build_example(e.name, None) {
        Ok(sc) => sc,
        Err(_) if e.expected == Expected::Refused => return Ok(()),
        Err(err) => return Err(format!("{}: construction failed: {err}", e.name)),
    };
    let (report, code) = crate::scenario::run(&sc, &[crate::duality::Suite::All]);
    match e.expected {
        Expected::Refused if code == crate::scenario::CONSTRUCTION_ERROR => Ok(()),
        Expected::Refused => Err(format!("{}: expected a refusal, got exit {code}", e.name)),
        Expected::AllPass if code == 0 => Ok(()),
        Expected::AllPass => Err(format!("{}: expected all items to pass, got exit {code}", e.name)),
        Expected::Fails(ids) => {
            let missing: Vec<&str> = ids
                .iter()
                .copied()
                .filter(|id| report.item(id).is_none_or(|i| i.status != crate::report::Status::Fail))
                .collect();
            if code == 1 && missing.is_empty() {
                Ok(())
            } else {
                Err(format!("{}: exit {code}, expected failures missing: {missing:?}", e.name))
            }
        }
    }
}
