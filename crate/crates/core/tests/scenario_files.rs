//! The JSON files under `scenarios/` are the canonical serializations of
//! the catalog plus two hand-shaped files using the short forms.
//! Set `UPDATE_SCENARIOS=1` to regenerate them.

use std::collections::BTreeMap;
use std::path::PathBuf;

use braided_duality::base_hopf::cyclic_group_algebra;
use braided_duality::braided::build_quantum_line;
use braided_duality::catalog::{build_example, list_examples, Expected};
use braided_duality::duality::{verify_duality, Suite};
use braided_duality::scenario::{base_spec, hopf_spec, module_spec, parse_scenario, run, serialize, ComoduleRef, HopfRef, PairingRef, ScenarioFile};
use braided_duality::Field;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

fn qi_line_file() -> ScenarioFile {
    let f = Field::Prime(5);
    let b = cyclic_group_algebra(f, 4);
    let h = build_quantum_line(&b, 4, f.int(2), "H").unwrap();
    ScenarioFile {
        name: "qi_line_negative".into(),
        field: f.spec(),
        truncation: None,
        suites: Vec::new(),
        base: base_spec(&b),
        modules: BTreeMap::from([("H".to_string(), module_spec(&h.module))]),
        h: HopfRef::Inline(hopf_spec(&h, "H")),
        hd: HopfRef::Named("dual-of:H".into()),
        pairing: PairingRef::Named("evaluation".into()),
        r: ComoduleRef::Named("hd-with-comult".into()),
    }
}

fn short_form_file() -> ScenarioFile {
    let mut file = serialize(&build_example("super_line", None).unwrap());
    file.name = "super_line_short".into();
    file.hd = HopfRef::Named("dual-of:H".into());
    file.pairing = PairingRef::Named("evaluation".into());
    file.r = ComoduleRef::Named("hd-with-comult".into());
    file.modules.retain(|k, _| k == "H");
    file
}

fn expected_files() -> Vec<(String, ScenarioFile)> {
    let mut out: Vec<(String, ScenarioFile)> = list_examples()
        .iter()
        .filter(|e| e.expected != Expected::Refused)
        .map(|e| (e.name.to_string(), serialize(&build_example(e.name, None).unwrap())))
        .collect();
    out.push(("qi_line_negative".into(), qi_line_file()));
    out.push(("super_line_short".into(), short_form_file()));
    out
}

#[test]
fn scenario_files_match_the_catalog() {
    let update = std::env::var_os("UPDATE_SCENARIOS").is_some();
    for (name, file) in expected_files() {
        let path = dir().join(format!("{name}.json"));
        let text = file.to_json();
        if update {
            std::fs::create_dir_all(dir()).unwrap();
            std::fs::write(&path, &text).unwrap();
        } else {
            let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(on_disk, text, "{name}.json is stale; rerun with UPDATE_SCENARIOS=1");
        }
    }
}

#[test]
fn super_line_file_reproduces_the_catalog_report() {
    let from_file = parse_scenario(&dir().join("super_line.json")).unwrap();
    let from_catalog = build_example("super_line", None).unwrap();
    assert_eq!(verify_duality(&from_file, Suite::All), verify_duality(&from_catalog, Suite::All));
    let short = parse_scenario(&dir().join("super_line_short.json")).unwrap();
    let mut a = verify_duality(&short, Suite::All);
    a.scenario = from_catalog.name.clone();
    assert_eq!(a, verify_duality(&from_catalog, Suite::All));
}

#[test]
fn qi_line_file_is_refused() {
    let err = parse_scenario(&dir().join("qi_line_negative.json")).err().expect("refused");
    assert!(err.to_string().contains("not symmetric"), "{err}");
}

#[test]
fn broken_pairing_file_fails_its_axiom() {
    let sc = parse_scenario(&dir().join("poly_line_no_factorial.json")).unwrap();
    let (report, code) = run(&sc, &[Suite::Axioms]);
    assert_eq!(code, 1);
    let item = report.item("pairing-mult-h").unwrap();
    assert!(item.witness.as_deref().unwrap().contains("bidegree (2, 2)"));
}

#[test]
fn scenario_files_conform_to_the_schema() {
    let schema_path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/scenario.schema.json");
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(files.len() >= 10);
    for path in files {
        let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", path.display());
    }
    let float = serde_json::json!({"name": "x", "field": "Q", "base": {"basis": ["1"], "mult": [[1.0]], "unit": [["1"]], "comult": [["1"]], "counit": [["1"]], "antipode": [["1"]]}, "modules": {}, "h": "dual-of:Hd", "hd": "dual-of:H", "pairing": "evaluation", "r": "ground"});
    assert!(!validator.is_valid(&float));
}
