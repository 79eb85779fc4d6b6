#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use qtilt::config::Config;
use qtilt::corpus::algebra_text;
use qtilt::parts::Analysis;
use qtilt::presentation::algebra_from_text;

/// Algebras of the built-in corpus, companions included.
pub const CORPUS: &[&str] = &[
    "EX1", "EX2(1,1)", "EX3", "EX4", "EX5B", "EX5A", "EX6B(1)", "EX6A(1)", "EX6B(2)", "EX6A(2)", "EX7(1,1)",
    "EX7(1,2)",
];

/// Small enough for quadratic checks over all pairs.
pub const SMALL: &[&str] = &["EX1", "EX2(1,1)", "EX5B", "EX5A", "EX6B(1)", "EX6A(1)", "EX7(1,1)", "EX7(1,2)"];

pub fn analysis(id: &str) -> Arc<Analysis> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Analysis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(id) {
        return a.clone();
    }
    let text = algebra_text(id).unwrap_or_else(|| panic!("unknown corpus id {id}"));
    let alg = algebra_from_text(&text).unwrap();
    let an = Arc::new(Analysis::new(&alg, &Config::default()).unwrap());
    cache.lock().unwrap().insert(id.to_string(), an.clone());
    an
}

pub mod suites;
