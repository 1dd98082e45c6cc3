use std::fs;

use nqf::cache;
use nqf::config::EngineConfig;
use nqf::suite::{run_suite, Engine};
use nqf_core::CartanType;

fn cfg(dir: &std::path::Path, max_degree: Option<usize>) -> EngineConfig {
    EngineConfig::new(CartanType::B, 2).with_max_degree(max_degree).with_cache(Some(dir.to_path_buf()))
}

#[test]
fn round_trip_reuses_every_degree() {
    let dir = tempfile::tempdir().unwrap();
    let cold = Engine::new(cfg(dir.path(), None)).unwrap();
    assert_eq!(cold.cache.loaded_degrees, 0);
    assert_eq!(cold.cache.written_degrees, 9);
    let warm = Engine::new(cfg(dir.path(), None)).unwrap();
    assert_eq!(warm.cache.loaded_degrees, 9);
    assert_eq!(warm.cache.written_degrees, 0);
    assert_eq!(warm.nb.hilbert_series(), cold.nb.hilbert_series());
    for k in 0..=cold.nb.top_degree() {
        assert_eq!(warm.nb.basis_words(k), cold.nb.basis_words(k));
    }
    let checks = ["coxeter", "prop3"];
    let a: Vec<String> = run_suite(&cold, &checks, false).iter().map(|r| r.to_json_line()).collect();
    let b: Vec<String> = run_suite(&warm, &checks, false).iter().map(|r| r.to_json_line()).collect();
    assert_eq!(a, b);
}

#[test]
fn truncated_cache_extends() {
    let dir = tempfile::tempdir().unwrap();
    Engine::new(cfg(dir.path(), Some(3))).unwrap();
    let more = Engine::new(cfg(dir.path(), Some(5))).unwrap();
    assert_eq!(more.cache.loaded_degrees, 3);
    assert_eq!(more.cache.written_degrees, 2);
    assert_eq!(more.nb.hilbert_series(), [1, 4, 8, 12, 14, 12]);
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    Engine::new(cfg(dir.path(), None)).unwrap();
    let inst = cache::instance_dir(dir.path(), cfg(dir.path(), None).instance());
    fs::write(inst.join("degree-03.json"), "{ not json").unwrap();
    let eng = Engine::new(cfg(dir.path(), None)).unwrap();
    assert_eq!(eng.cache.warnings.len(), 1);
    assert_eq!(eng.nb.total_dim(), 64);
    let text = fs::read_to_string(inst.join("degree-03.json")).unwrap();
    assert!(text.contains("\"format\": \"nqf-basis\""));
}

#[test]
fn mismatched_header_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    Engine::new(cfg(dir.path(), Some(2))).unwrap();
    let inst = cache::instance_dir(dir.path(), cfg(dir.path(), None).instance());
    let path = inst.join("degree-02.json");
    let text = fs::read_to_string(&path).unwrap().replace("\"rank\": 2", "\"rank\": 5");
    fs::write(&path, text).unwrap();
    let eng = Engine::new(cfg(dir.path(), Some(2))).unwrap();
    assert_eq!(eng.cache.warnings.len(), 1);
    assert_eq!(eng.nb.hilbert_series(), [1, 4, 8]);
}
