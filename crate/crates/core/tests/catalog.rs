use std::path::PathBuf;

use qx_core::catalog::{parse_catalog, render_catalog};
use qx_core::hardware::builtin_scenarios;
use qx_core::{
    asymptotic_compare, classify_catalog, load_catalog, parse, save_catalog, Asymptotic,
    TrafficLight,
};

fn shipped() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog.json")
}

#[test]
fn shipped_catalog_round_trips_byte_for_byte() {
    let text = std::fs::read_to_string(shipped()).unwrap();
    let entries = load_catalog(&shipped()).unwrap();
    assert!(entries.len() >= 100);

    let dir = std::env::temp_dir().join(format!("qx-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("catalog.json");
    save_catalog(&out, &entries).unwrap();
    assert_eq!(std::fs::read_to_string(&out).unwrap(), text);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn labels_are_asymptotically_equal() {
    for e in load_catalog(&shipped()).unwrap() {
        let label = parse(&e.runtime_class_label).unwrap();
        assert_eq!(
            asymptotic_compare(&label, &e.classical_runtime).unwrap(),
            Asymptotic::Equal,
            "{}",
            e.id
        );
    }
}

#[test]
fn classification_ignores_entry_order() {
    let entries = load_catalog(&shipped()).unwrap();
    let base = &builtin_scenarios()[0];
    let mut forward = classify_catalog(&entries, base, true).unwrap();
    let mut reversed_entries = entries.clone();
    reversed_entries.reverse();
    let mut backward = classify_catalog(&reversed_entries, base, true).unwrap();
    let key = |c: &qx_core::ClassifiedEntry| (c.id.clone(), c.quantum_runtime.render());
    forward.sort_by_key(key);
    backward.sort_by_key(key);
    assert_eq!(forward, backward);
    assert_eq!(classify_catalog(&entries, base, true).unwrap().len(), forward.len());
}

#[test]
fn base_classification() {
    let entries = load_catalog(&shipped()).unwrap();
    let base = &builtin_scenarios()[0];
    let all = classify_catalog(&entries, base, true).unwrap();
    let class_of = |id: &str, quantum: &str| {
        all.iter()
            .find(|c| c.id == id && c.quantum_runtime.render() == quantum)
            .unwrap_or_else(|| panic!("{id} vs {quantum}"))
            .class
    };
    assert_eq!(class_of("grover", "n^(1/2)"), TrafficLight::Yellow);
    for q in ["n^3", "n^2", "n log(n)", "n", "log(n)"] {
        assert_eq!(class_of("subset-sum", q), TrafficLight::Green);
    }
    assert_eq!(class_of("subset-sum", "exp(n)"), TrafficLight::Red);
}

#[test]
fn hhl_optimistic_is_yellow_from_the_computed_root() {
    let entries = load_catalog(&shipped()).unwrap();
    let optimistic = builtin_scenarios().into_iter().find(|s| s.name == "optimistic").unwrap();
    let hhl = classify_catalog(&entries, &optimistic, false)
        .unwrap()
        .into_iter()
        .find(|c| c.id == "hhl")
        .unwrap();
    let n = hhl.threshold.unwrap().n_star().unwrap().exact().unwrap();
    assert!((116_000..117_500).contains(&n), "{n}");
    assert_eq!(hhl.class, TrafficLight::Yellow);
}

#[test]
fn edited_catalog_survives_a_round_trip() {
    let mut entries = parse_catalog(&std::fs::read_to_string(shipped()).unwrap()).unwrap();
    entries.truncate(3);
    entries[0].classical_runtime = parse("exp(n) + n^2").unwrap();
    let text = render_catalog(&entries);
    assert_eq!(render_catalog(&parse_catalog(&text).unwrap()), text);
}
