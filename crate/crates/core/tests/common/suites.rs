//! The property suites over the corpus. Each returns a short summary on
//! success and the first counterexample otherwise.

use std::collections::VecDeque;

use qtilt::ar::{injective_envelope, nakayama_model, tau};
use qtilt::config::Config;
use qtilt::corpus::resolve_module;
use qtilt::decompose::decompose_summands;
use qtilt::homology::{ext_group, extension_from_cocycle, proj_dim, HomDim, Resolution};
use qtilt::linalg::Mat;
use qtilt::module::{hom_basis, hom_dim, Module};
use qtilt::opext::{check_extension, check_pd_lemma, one_point_extension};
use qtilt::parts::{audit_analysis, Analysis, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{analysis, CORPUS, SMALL};

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const PARAMS: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)];

fn hom(an: &Analysis, i: usize, j: usize) -> usize {
    hom_dim(&an.inds.items[i].module, &an.inds.items[j].module)
}

/// Indecomposables with a path of nonzero maps into `x`, computed from Hom
/// spaces directly rather than from the cached digraph.
fn predecessors(an: &Analysis, x: usize) -> Vec<bool> {
    let n = an.len();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([x]);
    seen[x] = true;
    while let Some(t) = queue.pop_front() {
        for s in 0..n {
            if !seen[s] && hom(an, s, t) > 0 {
                seen[s] = true;
                queue.push_back(s);
            }
        }
    }
    seen
}

pub fn q2_bounds_global_dimension() -> Outcome {
    let mut instances = 0;
    for id in CORPUS {
        let an = analysis(id);
        for (m, n) in PARAMS {
            if an.q2_violations(m, n).is_empty() {
                instances += 1;
                let worst = an.inds.items.iter().map(|x| x.pd).max().unwrap();
                ensure!(worst == an.gldim, "{id}: gl.dim {} but max pd {worst}", an.gldim);
                ensure!(worst.at_most(m + n + 1), "{id} ({m},{n}): gl.dim {worst}");
            }
        }
    }
    ensure!(instances >= 10, "only {instances} instances");
    Ok(format!("{instances} instances"))
}

pub fn hom_vanishing_and_predecessors() -> Outcome {
    let mut instances = 0;
    for id in SMALL.iter().chain(&["EX3"]) {
        let an = analysis(id);
        for (m, n) in PARAMS {
            if !(an.gldim.at_most(m + 1) && an.q2_violations(m, n).is_empty()) {
                continue;
            }
            instances += 1;
            for u in (0..an.len()).filter(|&u| !an.pd(u).at_most(m)) {
                for v in (0..an.len()).filter(|&v| !an.id(v).at_most(n)) {
                    ensure!(hom(&an, u, v) == 0, "{id} ({m},{n}): Hom({}, {}) != 0", an.name(u), an.name(v));
                }
            }
            for x in (0..an.len()).filter(|&x| !an.id(x).at_most(n)) {
                let pred = predecessors(&an, x);
                for y in (0..an.len()).filter(|&y| pred[y]) {
                    ensure!(an.pd(y).at_most(m), "{id} ({m},{n}): {} precedes {}", an.name(y), an.name(x));
                }
            }
        }
    }
    ensure!(instances >= 5, "only {instances} instances");
    Ok(format!("{instances} instances"))
}

pub fn trisection_has_no_backward_maps() -> Outcome {
    let mut pairs = 0;
    for id in CORPUS {
        let an = analysis(id);
        for (m, n) in PARAMS {
            let (l, r) = (an.part_l(m), an.part_r(n));
            for x in (0..an.len()).filter(|&x| r[x] && !l[x]) {
                for y in (0..an.len()).filter(|&y| l[y] && !r[y]) {
                    ensure!(hom(&an, x, y) == 0, "{id} ({m},{n}): Hom({}, {}) != 0", an.name(x), an.name(y));
                    pairs += 1;
                }
            }
            let report = audit_analysis(&an, m, n);
            let bad: Vec<&str> =
                report.violations().iter().map(|c| c.name.as_str()).filter(|&c| c != "q1" && c != "q2").collect();
            ensure!(bad.is_empty(), "{id} ({m},{n}): audit checks failed: {bad:?}");
        }
    }
    Ok(format!("{pairs} pairs"))
}

pub fn injective_dimension_is_dual_projective_dimension() -> Outcome {
    let cfg = Config::default();
    let mut count = 0;
    for id in CORPUS {
        let an = analysis(id);
        for x in &an.inds.items {
            let d = x.module.dual();
            ensure!(std::sync::Arc::ptr_eq(d.alg(), &an.alg().opposite()), "{id}: dual not over A^op");
            let pd = proj_dim(&d, &cfg).map_err(|e| e.to_string())?;
            ensure!(pd == x.id, "{id} {}: id {} but pd D = {pd}", x.name, x.id);
            count += 1;
        }
    }
    Ok(format!("{count} modules"))
}

/// `dim Hom(N, Y)` modulo maps factoring through an injective.
fn stable_hom_dim(n: &Module, y: &Module) -> usize {
    let basis = hom_basis(n, y);
    if basis.is_empty() {
        return 0;
    }
    let (i, iota) = injective_envelope(n);
    let through: Vec<Vec<u32>> = hom_basis(&i, y).iter().map(|g| g.compose(&iota).matrix().data().to_vec()).collect();
    basis.len() - Mat::from_columns(n.field(), n.dim() * y.dim(), &through).rank()
}

pub fn auslander_reiten_formula() -> Outcome {
    let mut pairs = 0;
    for id in ["EX7(1,1)", "EX1"] {
        let an = analysis(id);
        for m in &an.inds.items {
            let tm = tau(&m.module);
            let res = Resolution::with_length(&m.module, 2);
            for n in &an.inds.items {
                let ext = ext_group(&res, 1, &n.module).dim();
                let st = stable_hom_dim(&n.module, &tm);
                ensure!(ext == st, "{id}: Ext^1({}, {}) = {ext}, stable Hom = {st}", m.name, n.name);
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

pub fn nakayama_oracle_agrees() -> Outcome {
    for id in ["EX2(1,1)", "EX3", "EX4", "EX7(1,1)", "EX7(1,2)"] {
        let an = analysis(id);
        let nk = nakayama_model(an.alg()).ok_or(format!("{id}: no interval model"))?;
        let intervals = nk.intervals();
        ensure!(an.len() == intervals.len(), "{id}: {} indecomposables, model has {}", an.len(), intervals.len());
        ensure!(an.gldim == HomDim::Finite(nk.global_dimension()), "{id}: gl.dim");
        let at = |d: &[usize]| intervals.iter().copied().find(|&iv| nk.dimvec(iv) == d);
        for x in &an.inds.items {
            let iv = at(x.module.dims()).ok_or(format!("{id}: {} is not an interval", x.name))?;
            ensure!(x.pd == HomDim::Finite(nk.proj_dim(iv)), "{id} {}: pd", x.name);
            ensure!(x.id == HomDim::Finite(nk.inj_dim(iv)), "{id} {}: id", x.name);
            let t = x.tau.and_then(|t| at(an.inds.items[t].module.dims()));
            ensure!(t == nk.tau(iv), "{id} {}: tau", x.name);
            for y in &an.inds.items {
                let h = hom_dim(&x.module, &y.module);
                ensure!(at(y.module.dims()).map(|j| nk.hom_dim(iv, j)) == Some(h), "{id}: Hom({}, {})", x.name, y.name);
            }
        }
        let mut sizes = an.inds.orbit_sizes();
        sizes.sort_unstable();
        ensure!(sizes == nk.orbit_sizes(), "{id}: orbit sizes {sizes:?}");
    }
    Ok("5 algebras".into())
}

pub fn coordinate_morphisms_of_nonsplit_extensions() -> Outcome {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut count = 0;
    for id in ["EX1", "EX2(1,1)", "EX5B", "EX6A(1)", "EX7(1,2)"] {
        let an = analysis(id);
        let p = an.alg().field().p();
        for y in &an.inds.items {
            let res = Resolution::with_length(&y.module, 2);
            for x in &an.inds.items {
                let d = ext_group(&res, 1, &x.module).dim();
                if d == 0 {
                    continue;
                }
                for _ in 0..4 {
                    let mut coeffs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..p)).collect();
                    if coeffs.iter().all(|&c| c == 0) {
                        coeffs[rng.gen_range(0..d)] = 1;
                    }
                    let seq = extension_from_cocycle(&res, &x.module, &coeffs);
                    ensure!(seq.is_exact(), "{id}: sequence not exact");
                    ensure!(seq.class(&res).iter().any(|&c| c != 0), "{id}: sequence splits");
                    let parts = decompose_summands(seq.middle(), &cfg.decompose()).map_err(|e| e.to_string())?;
                    for s in &parts {
                        ensure!(!seq.epi.compose(&s.inclusion).is_zero(), "{id}: {} -> E -> {}: g vanishes", x.name, y.name);
                        ensure!(!s.projection.compose(&seq.mono).is_zero(), "{id}: {} -> E -> {}: f vanishes", x.name, y.name);
                    }
                    count += 1;
                }
            }
        }
    }
    ensure!(count >= 100, "only {count} extensions");
    Ok(format!("{count} extensions"))
}

fn extend(base: &str, module: &str) -> Result<(qtilt::opext::OnePoint, Analysis), String> {
    let b = analysis(base);
    let m = resolve_module(&b, module).map_err(|e| e.to_string())?;
    let ext = one_point_extension(&m, None, &format!("{base}[{module}]")).map_err(|e| e.to_string())?;
    let a = Analysis::new(&ext.alg, &Config::default()).map_err(|e| e.to_string())?;
    Ok((ext, a))
}

pub fn pd_lemma_equivalence() -> Outcome {
    let cfg = Config::default();
    let mut rows = 0;
    for (base, module) in [("EX5B", "S5"), ("EX6B(1)", "S4"), ("EX6B(2)", "S5")] {
        let b = analysis(base);
        let (ext, a) = extend(base, module)?;
        for m in (1..=3).filter(|&m| b.gldim.at_most(m + 1)) {
            let report = check_pd_lemma(&ext, &a, &b, m, &cfg).map_err(|e| e.to_string())?;
            for row in &report.rows {
                ensure!(row.agrees, "{base}[{module}] m = {m}: {} (pd {})", row.id, row.pd);
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} rows"))
}

pub fn global_dimension_formula() -> Outcome {
    let cfg = Config::default();
    let mut count = 0;
    for id in ["EX1", "EX2(1,1)", "EX5B", "EX6B(1)", "EX6B(2)", "EX7(1,1)", "EX7(1,2)"] {
        let b = analysis(id);
        let alg = b.alg();
        let mut mods = vec![Module::zero(alg)];
        mods.extend((0..alg.num_vertices()).map(|v| Module::projective(alg, v)));
        mods.extend((0..alg.num_vertices()).map(|v| Module::simple(alg, v)));
        for m in mods {
            let what = format!("{id}[{}]", m.dimvec_string());
            let ext = one_point_extension(&m, None, "E").map_err(|e| e.to_string())?;
            let a = Analysis::new(&ext.alg, &cfg).map_err(|e| e.to_string())?;
            let pd = proj_dim(&m, &cfg).map_err(|e| e.to_string())?;
            let expected = if m.is_zero() {
                b.gldim
            } else {
                HomDim::Finite(b.gldim.finite().unwrap().max(pd.finite().unwrap() + 1))
            };
            ensure!(a.gldim == expected, "{what}: gl.dim {} expected {expected}", a.gldim);
            let report = check_extension(&ext, &a, &b, 1, &cfg).map_err(|e| e.to_string())?;
            let bad: Vec<&str> = report.violations().iter().map(|c| c.name.as_str()).collect();
            ensure!(bad.is_empty(), "{what}: {bad:?}");
            count += 1;
        }
    }
    Ok(format!("{count} extensions"))
}

pub fn hom_vanishing_instance() -> Outcome {
    let b = analysis("EX7(1,1)");
    let (ext, a) = extend("EX7(1,1)", "S1")?;
    ensure!(audit_analysis(&a, 1, 1).is_almost_hereditary(), "EX7(1,1)[S1] is not (1,1)-almost hereditary");
    let report = check_extension(&ext, &a, &b, 1, &Config::default()).map_err(|e| e.to_string())?;
    let c = report.check("hom-vanishing-condition").ok_or("missing check")?;
    ensure!(c.verdict == Verdict::Pass, "hom-vanishing-condition: {:?}", c.verdict);
    Ok(format!("dim {}, gl.dim {}", ext.alg.dim(), a.gldim))
}

/// Every suite with its label.
pub fn all() -> Vec<(&'static str, fn() -> Outcome)> {
    vec![
        ("a", q2_bounds_global_dimension as fn() -> Outcome),
        ("b", hom_vanishing_and_predecessors),
        ("c", trisection_has_no_backward_maps),
        ("d", injective_dimension_is_dual_projective_dimension),
        ("e", coordinate_morphisms_of_nonsplit_extensions),
        ("f", auslander_reiten_formula),
        ("g", nakayama_oracle_agrees),
        ("h", pd_lemma_equivalence),
        ("i", global_dimension_formula),
        ("j", hom_vanishing_instance),
    ]
}
