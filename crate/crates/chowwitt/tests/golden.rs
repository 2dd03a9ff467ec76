use chowwitt::report::{golden_catalog, golden_dir, regress, write_goldens, GoldenCase, Report};
use std::collections::BTreeSet;

#[test]
fn stored_tables_are_reproduced() {
    let r = regress(&golden_dir()).unwrap();
    let failing: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
    assert!(failing.is_empty(), "{failing:?}");
    assert_eq!(r.checks.len(), golden_catalog().len());
}

#[test]
fn every_catalog_case_has_a_file() {
    let present: BTreeSet<String> = std::fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    for c in golden_catalog() {
        assert!(present.contains(&c.file_name()), "missing {}", c.file_name());
    }
}

#[test]
fn headers_identify_the_case() {
    for c in golden_catalog().into_iter().step_by(7) {
        let text = std::fs::read_to_string(golden_dir().join(c.file_name())).unwrap();
        assert_eq!(GoldenCase::from_table(&text).unwrap(), c);
    }
}

#[test]
fn rendering_is_deterministic() {
    let c = &golden_catalog()[20];
    assert_eq!(c.render().unwrap(), c.render().unwrap());
}

#[test]
fn tampered_table_is_reported() {
    let dir = std::env::temp_dir().join(format!("chowwitt-golden-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    write_goldens(&dir).unwrap();
    let victim = dir.join(golden_catalog()[30].file_name());
    let text = std::fs::read_to_string(&victim).unwrap().replacen("Z/3", "Z/9", 1);
    std::fs::write(&victim, text).unwrap();
    let r = regress(&dir).unwrap();
    assert!(!r.success());
    let bad: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].detail.starts_with("line "), "{}", bad[0].detail);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn empty_directory_fails() {
    let dir = std::env::temp_dir().join(format!("chowwitt-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    assert!(!regress(&dir).unwrap().success());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_schema_round_trips() {
    let c = &golden_catalog()[14];
    let r = chowwitt::report::compute(&c.expr, &c.field, 3, c.theory, None).unwrap();
    let json = r.to_json();
    // field order is part of the schema, so check the serialized text itself
    let order = |keys: &[&str]| keys.iter().map(|k| json.find(&format!("\"{k}\":")).unwrap()).collect::<Vec<_>>();
    let top = order(&["space", "field", "bound", "bidegrees", "checks"]);
    assert!(top.windows(2).all(|w| w[0] < w[1]));
    let row = order(&["degree", "twist", "invariant_factors", "free_rank", "rho_image_index", "generators"]);
    assert!(row.windows(2).all(|w| w[0] < w[1]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["bidegrees"][0].as_object().unwrap().len(), 6);
    assert_eq!(Report::from_json(&json).unwrap(), r);
}
