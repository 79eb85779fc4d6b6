mod common;

use common::analysis;
use qtilt::config::Config;
use qtilt::homology::{proj_dim, HomDim};
use qtilt::module::{Module, Morphism};
use qtilt::opext::{check_pd_lemma, one_point_extension, OnePoint, TripleModule};
use qtilt::parts::Analysis;

fn extend(base: &str, module: &str) -> (OnePoint, Analysis) {
    let b = analysis(base);
    let m = qtilt::corpus::resolve_module(&b, module).unwrap();
    let ext = one_point_extension(&m, None, &format!("{base}[{module}]")).unwrap();
    let a = Analysis::new(&ext.alg, &Config::default()).unwrap();
    (ext, a)
}

#[test]
fn pd_lemma_needs_small_base_dimension() {
    let b = analysis("EX4");
    let m = Module::simple(b.alg(), 0);
    let ext = one_point_extension(&m, None, "X").unwrap();
    let a = Analysis::new(&ext.alg, &Config::default()).unwrap();
    assert!(check_pd_lemma(&ext, &a, &b, 1, &Config::default()).is_err());
}

#[test]
fn simple_triple_in_ex6() {
    let cfg = Config::default();
    let b = analysis("EX6B(2)");
    let (ext, a) = extend("EX6B(2)", "S5");
    let v = ext.base.vertex_index("4").unwrap();
    let s4 = Module::simple(&ext.base, v);
    let t = TripleModule { y: 0, x: s4.clone(), f: Morphism::zero(&Module::zero(&ext.base), &s4) };
    let z = ext.triple_to_module(&t).unwrap();
    assert_eq!(proj_dim(&z, &cfg).unwrap(), HomDim::Finite(3));
    let report = check_pd_lemma(&ext, &a, &b, 2, &cfg).unwrap();
    let i = a.inds.index_of(&z).unwrap();
    let row = &report.rows[i];
    assert!(row.kernel_condition);
    assert!(!row.theta_onto);
    assert!(row.agrees);
}

#[test]
fn triples_round_trip() {
    let (ext, a) = extend("EX5B", "S5");
    for x in &a.inds.items {
        let t = ext.module_to_triple(&x.module);
        let back = ext.triple_to_module(&t).unwrap();
        assert_eq!(back.dims(), x.module.dims());
        assert!(qtilt::decompose::indecomposables_isomorphic(&back, &x.module), "{}", x.name);
    }
    let p = ext.triple_to_module(&ext.projective_omega_triple()).unwrap();
    assert!(qtilt::decompose::indecomposables_isomorphic(&p, &Module::projective(&ext.alg, ext.omega)));
}
