//! One-point extensions `B[M]`, modules over them as triples `(Y, X, f)`,
//! and checks of the projective dimension lemma and the extension theorems
//! for `(m,1)`-almost hereditary algebras.
//!
//! The basis of `B[M]` is `basis(B) ∪ basis(M) ∪ {e_ω}`. An element of `M`
//! at vertex `v` is an arrow-like element from `ω` to `v`; `B` acts on it
//! through the module structure, `e_ω` is a right identity for it and all
//! other products involving it vanish. So `P(ω) = k e_ω ⊕ M`.

use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use crate::algebra::{Algebra, AlgebraData, Elem};
use crate::config::Config;
use crate::dsl::{Arrow, QuiverSpec, Relation};
use crate::error::{Error, Result};
use crate::homology::{inj_dim, proj_dim, HomDim, Resolution, ShortExact};
use crate::linalg::Mat;
use crate::module::{hom_dim, kernel_cokernel, Module, Morphism};
use crate::parts::{audit_analysis, members, Analysis, Check, Verdict};
use crate::presentation::build_algebra;

/// `A = B[M]` together with the data needed to move modules between `A`
/// and triples over `B`.
#[derive(Clone, Debug)]
pub struct OnePoint {
    pub alg: Arc<Algebra>,
    pub base: Arc<Algebra>,
    pub m: Module,
    /// Index of the new vertex; the old vertices keep their indices.
    pub omega: usize,
    // basis index in A of the k-th basis vector of M at vertex v
    m_basis: Vec<Vec<usize>>,
}

/// A `B[M]`-module `(k^y, X, f)` with `f: M ⊗ k^y = M^y -> X`.
#[derive(Clone, Debug)]
pub struct TripleModule {
    pub y: usize,
    pub x: Module,
    pub f: Morphism,
}

fn default_label(base: &Algebra) -> String {
    let nums: Option<Vec<u64>> = base.vertices().iter().map(|v| v.parse().ok()).collect();
    match nums {
        Some(ns) => (ns.into_iter().max().unwrap_or(0) + 1).to_string(),
        None => {
            let mut s = String::from("w");
            while base.vertex_index(&s).is_some() {
                s.push('\'');
            }
            s
        }
    }
}

/// Build `B[M]` where `B` is the algebra of `m`. The new vertex gets
/// `label`, or one more than the largest numeric label of `B` (`w` when the
/// labels are not numeric).
pub fn one_point_extension(m: &Module, label: Option<&str>, id: &str) -> Result<OnePoint> {
    let base = m.alg().clone();
    let f = base.field();
    let r = base.num_vertices();
    let db = base.dim();
    let label = label.map(str::to_string).unwrap_or_else(|| default_label(&base));
    if base.vertex_index(&label).is_some() {
        return Err(Error::input(format!("vertex {label} already exists")));
    }
    let data = base.to_data();
    let mut labels = data.labels;
    let mut source = data.source;
    let mut target = data.target;
    let mut m_basis = vec![Vec::new(); r];
    for v in 0..r {
        for k in 0..m.dims()[v] {
            m_basis[v].push(labels.len());
            labels.push(format!("m{}_{k}", base.vertices()[v]));
            source.push(r);
            target.push(v);
        }
    }
    let e_omega = labels.len();
    labels.push(format!("e{label}"));
    source.push(r);
    target.push(r);
    let d = labels.len();
    let mut table: Vec<Elem> = vec![Vec::new(); d * d];
    for i in 0..db {
        for j in 0..db {
            table[i * d + j] = base.mul_basis(i, j).to_vec();
        }
        // b · m for m at the source of b
        let (s, t) = (base.source(i), base.target(i));
        let act = m.action(i);
        for (k, &j) in m_basis[s].iter().enumerate() {
            table[i * d + j] =
                (0..act.rows()).filter(|&q| act.get(q, k) != 0).map(|q| (m_basis[t][q], act.get(q, k))).collect();
        }
    }
    for &j in m_basis.iter().flatten() {
        table[j * d + e_omega] = vec![(j, 1)];
    }
    table[e_omega * d + e_omega] = vec![(e_omega, 1)];
    let mut vertices = data.vertices;
    vertices.push(label);
    let mut idempotents = data.idempotents;
    idempotents.push(e_omega);
    let alg = Algebra::new(
        AlgebraData { id: id.to_string(), field: f, vertices, labels, source, target, idempotents, table },
        None,
    )?;
    Ok(OnePoint { alg: Arc::new(alg), base, m: m.clone(), omega: r, m_basis })
}

impl OnePoint {
    /// `(0, X, 0)`: a `B`-module viewed over `B[M]`.
    pub fn inflate(&self, x: &Module) -> Module {
        let f = self.alg.field();
        let mut dims = x.dims().to_vec();
        dims.push(0);
        let action = (0..self.alg.dim())
            .map(|b| {
                if b < self.base.dim() {
                    x.action(b).clone()
                } else {
                    Mat::zeros(f, dims[self.alg.target(b)], dims[self.alg.source(b)])
                }
            })
            .collect();
        Module::new(&self.alg, dims, action).expect("inflation is a module")
    }

    /// The `B`-module part `X` of an `A`-module.
    pub fn restrict(&self, z: &Module) -> Module {
        let dims = z.dims()[..self.omega].to_vec();
        let action = (0..self.base.dim()).map(|b| z.action(b).clone()).collect();
        Module::new(&self.base, dims, action).expect("restriction is a module")
    }

    /// `M^y` with its canonical injections and projections.
    fn m_power(&self, y: usize) -> (Module, Vec<Morphism>, Vec<Morphism>) {
        Module::direct_sum(&self.base, &vec![self.m.clone(); y])
    }

    pub fn triple_to_module(&self, t: &TripleModule) -> Result<Module> {
        let (mt, inj, _) = self.m_power(t.y);
        if t.f.source().dims() != mt.dims() || t.f.target().dims() != t.x.dims() || !t.f.is_homomorphism() {
            return Err(Error::input("f is not a B-linear map M^y -> X"));
        }
        let field = self.alg.field();
        let mut dims = t.x.dims().to_vec();
        dims.push(t.y);
        let parts: Vec<Morphism> = inj.iter().map(|i| t.f.compose(i)).collect();
        let action = (0..self.alg.dim())
            .map(|b| {
                if b < self.base.dim() {
                    return t.x.action(b).clone();
                }
                if self.alg.is_idempotent(b) {
                    return Mat::identity(field, t.y);
                }
                let v = self.alg.target(b);
                let k = self.m_basis[v].iter().position(|&c| c == b).unwrap();
                let cols: Vec<Vec<u32>> = parts.iter().map(|g| g.block(v).col(k)).collect();
                Mat::from_columns(field, dims[v], &cols)
            })
            .collect();
        Module::new(&self.alg, dims, action)
    }

    pub fn module_to_triple(&self, z: &Module) -> TripleModule {
        let y = z.dims()[self.omega];
        let x = self.restrict(z);
        let (mt, _, proj) = self.m_power(y);
        let field = self.alg.field();
        let mut f = Morphism::zero(&mt, &x);
        for (j, p) in proj.iter().enumerate() {
            let blocks: Vec<Mat> = (0..self.omega)
                .map(|v| {
                    let cols: Vec<Vec<u32>> = self.m_basis[v].iter().map(|&b| z.action(b).col(j)).collect();
                    Mat::from_columns(field, x.dims()[v], &cols)
                })
                .collect();
            let g = Morphism::new(&self.m, &x, blocks).expect("m ↦ m·y is B-linear");
            f = f.add(&g.compose(p));
        }
        TripleModule { y, x, f }
    }

    /// `(k, M, 1)`, which is `P(ω)`.
    pub fn projective_omega_triple(&self) -> TripleModule {
        let (mt, _, _) = self.m_power(1);
        TripleModule { y: 1, x: mt.clone(), f: Morphism::identity(&mt) }
    }
}

/// One row of the projective dimension lemma check.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaRow {
    pub id: String,
    pub pd: HomDim,
    /// `pd_B ker f <= m-1`
    pub kernel_condition: bool,
    /// `θ: Ext^{m-1}(ker f, -) -> Ext^{m+1}(coker f, -)` onto
    pub theta_onto: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub m: usize,
    pub rows: Vec<LemmaRow>,
    pub check: Check,
}

/// `θ_N = δ₂ ∘ δ₁` where `δ₁` comes from `0 -> ker f -> M^y -> im f -> 0`
/// and `δ₂` from `0 -> im f -> X -> coker f -> 0`; onto for every
/// indecomposable `N`.
fn theta_onto(f: &Morphism, m: usize, ind_b: &[Module]) -> bool {
    let kc = kernel_cokernel(f);
    let len = m + 3;
    let res_k = Resolution::with_length(&kc.kernel, len);
    let res_i = Resolution::with_length(&kc.image, len);
    let res_c = Resolution::with_length(&kc.cokernel, len);
    let s1 = ShortExact::new(kc.kernel_inclusion.clone(), kc.coimage_map.clone());
    let s2 = ShortExact::new(kc.image_inclusion.clone(), kc.cokernel_projection.clone());
    ind_b.iter().all(|n| {
        let d1 = s1.connecting_map(&res_k, &res_i, m - 1, n);
        let d2 = s2.connecting_map(&res_i, &res_c, m, n);
        d2.mul(&d1).rank() == d2.rows()
    })
}

/// For every indecomposable `A`-module compare `pd_A <= m` with the two
/// conditions on its triple. Needs `gl.dim B <= m + 1` and `m >= 1`.
pub fn check_pd_lemma(ext: &OnePoint, a: &Analysis, b: &Analysis, m: usize, cfg: &Config) -> Result<LemmaReport> {
    if m == 0 || !b.gldim.at_most(m + 1) {
        return Err(Error::input(format!("the lemma needs m >= 1 and gl.dim B <= m+1, got m = {m}, gl.dim B = {}", b.gldim)));
    }
    let ind_b: Vec<Module> = b.inds.items.iter().map(|x| x.module.clone()).collect();
    let mut rows = Vec::new();
    for (i, z) in a.inds.items.iter().enumerate() {
        let t = ext.module_to_triple(&z.module);
        let (kernel, _) = t.f.kernel();
        let kernel_condition = proj_dim(&kernel, cfg)?.at_most(m - 1);
        let theta = theta_onto(&t.f, m, &ind_b);
        let lhs = a.pd(i).at_most(m);
        rows.push(LemmaRow {
            id: a.name(i),
            pd: a.pd(i),
            kernel_condition,
            theta_onto: theta,
            agrees: lhs == (kernel_condition && theta),
        });
    }
    let w: Vec<String> = rows.iter().filter(|r| !r.agrees).map(|r| r.id.clone()).collect();
    let check = Check::expect_none("pd-lemma", w, format!("{} indecomposables", rows.len()));
    Ok(LemmaReport { m, rows, check })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    pub m: usize,
    pub gldim_base: HomDim,
    pub gldim_ext: HomDim,
    pub pd_m: HomDim,
    pub base_almost_hereditary: bool,
    pub ext_almost_hereditary: bool,
    pub checks: Vec<Check>,
}

impl ExtensionReport {
    pub fn violations(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.failed()).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn implication(name: &str, hyp: std::result::Result<(), String>, holds: bool, what: &str) -> Check {
    match hyp {
        Err(why) => Check::skipped(name, format!("hypothesis not met: {why}")),
        Ok(()) if holds => Check::pass(name, what.to_string()),
        Ok(()) => Check::new(name, Verdict::Fail, vec![what.to_string()], "conclusion fails"),
    }
}

/// Structure checks (`P(v)` of `B` inflates to `P(v)` of `A`,
/// `rad P(ω) ≅ M`), the global dimension formula, and the three results
/// giving or needing `(m,1)`-almost heredity of `B[M]`.
pub fn check_extension(ext: &OnePoint, a: &Analysis, b: &Analysis, m: usize, cfg: &Config) -> Result<ExtensionReport> {
    let mut checks = Vec::new();
    let mut w = Vec::new();
    for v in 0..ext.omega {
        let lifted = ext.inflate(&Module::projective(&ext.base, v));
        if a.inds.index_of(&lifted) != Some(a.inds.projective(v)) {
            w.push(format!("P({})", ext.base.vertices()[v]));
        }
    }
    let (rad, _) = Module::projective(&ext.alg, ext.omega).radical();
    let same = match (ext.m.is_zero(), rad.is_zero()) {
        (true, z) => z,
        (false, true) => false,
        (false, false) => {
            let opts = cfg.decompose();
            crate::decompose::is_isomorphic(&rad, &ext.inflate(&ext.m), &opts)?
        }
    };
    if !same {
        w.push("rad P(ω)".to_string());
    }
    checks.push(Check::expect_none("structure", w, "old projectives and rad P(ω) ≅ M"));

    let pd_m = if ext.m.is_zero() { HomDim::Finite(0) } else { proj_dim(&ext.m, cfg)? };
    let expected = match (ext.m.is_zero(), pd_m) {
        (true, _) => b.gldim,
        (false, HomDim::Finite(p)) => b.gldim.max(HomDim::Finite(p + 1)),
        (false, HomDim::Infinite) => HomDim::Infinite,
    };
    let w = if expected == a.gldim { vec![] } else { vec![format!("{} vs {}", a.gldim, expected)] };
    checks.push(Check::expect_none("gldim-formula", w, format!("gl.dim A = {}", a.gldim)));

    let b_ah = b.is_almost_hereditary(m, 1);
    let a_ah = a.is_almost_hereditary(m, 1);
    let hyp = if b.gldim != HomDim::Finite(m + 1) {
        Err(format!("gl.dim B = {}", b.gldim))
    } else if !a_ah {
        Err("A is not almost hereditary".to_string())
    } else {
        Ok(())
    };
    checks.push(implication("necessary-condition", hyp, b_ah, "B is (m,1)-almost hereditary"));

    let projective = pd_m == HomDim::Finite(0);
    // every indecomposable (k^t, X, f): pd_B X <= m or else id_B X <= 1
    let mut per_triple = Vec::new();
    for (i, z) in a.inds.items.iter().enumerate() {
        let x = ext.restrict(&z.module);
        if x.is_zero() {
            continue;
        }
        if !proj_dim(&x, cfg)?.at_most(m) && !inj_dim(&x, cfg)?.at_most(1) {
            per_triple.push(a.name(i));
        }
    }
    let hyp = if !projective {
        Err("M is not projective".to_string())
    } else if !b_ah {
        Err("B is not almost hereditary".to_string())
    } else if !per_triple.is_empty() {
        Err(format!("pd_B X > m and id_B X > 1 for {}", per_triple.join(", ")))
    } else {
        Ok(())
    };
    checks.push(implication("sufficient-condition", hyp, a_ah, "A is (m,1)-almost hereditary"));

    let l = b.part_l(m);
    let r = b.part_r(1);
    let mut hits = Vec::new();
    if !ext.m.is_zero() {
        for i in members(&r) {
            if !l[i] && hom_dim(&ext.m, &b.inds.items[i].module) > 0 {
                hits.push(b.name(i));
            }
        }
    }
    let hyp = if !projective {
        Err("M is not projective".to_string())
    } else if !b_ah {
        Err("B is not almost hereditary".to_string())
    } else if !hits.is_empty() {
        Err(format!("Hom(M, -) nonzero on {}", hits.join(", ")))
    } else {
        Ok(())
    };
    checks.push(implication("hom-vanishing-condition", hyp, a_ah, "A is (m,1)-almost hereditary"));

    // M in add L^m_B with B almost hereditary
    let summands = crate::decompose::decompose(&ext.m, &cfg.decompose())?;
    let in_add_l = summands.iter().all(|(s, _)| b.inds.index_of(s).is_some_and(|i| l[i]));
    let hyp = if !b_ah {
        Err("B is not almost hereditary".to_string())
    } else if !in_add_l {
        Err("M is not in add L^m".to_string())
    } else {
        Ok(())
    };
    let mut holds = a.gldim == HomDim::Finite(m + 1);
    for i in 0..b.len() {
        let z = ext.inflate(&b.inds.items[i].module);
        let j = a.inds.index_of(&z).expect("inflated indecomposables are enumerated");
        holds &= a.pd(j).at_most(m) || a.id(j).at_most(1);
    }
    checks.push(implication("add-l-extension", hyp, holds, "gl.dim A = m+1 and (0,X,0) satisfy the dichotomy"));

    Ok(ExtensionReport {
        m,
        gldim_base: b.gldim,
        gldim_ext: a.gldim,
        pd_m,
        base_almost_hereditary: b_ah,
        ext_almost_hereditary: audit_analysis(a, m, 1).is_almost_hereditary(),
        checks,
    })
}

/// Serialized form of an extension.
#[derive(Clone, Debug)]
pub enum Emission {
    Dsl(String),
    Json(serde_json::Value),
}

/// A vector of `M_v` outside the radical when `M` has simple top at `v`.
fn simple_top(m: &Module) -> Option<(usize, Vec<u32>)> {
    let top = m.top_dims();
    if top.iter().sum::<usize>() != 1 {
        return None;
    }
    let v = top.iter().position(|&d| d == 1)?;
    let rad = &m.radical_bases()[v];
    let field = m.field();
    (0..m.dims()[v]).find_map(|k| {
        let mut g = vec![0; m.dims()[v]];
        g[k] = 1;
        let cols: Vec<Vec<u32>> = rad.columns().into_iter().chain([g.clone()]).collect();
        (Mat::from_columns(field, m.dims()[v], &cols).rank() > rad.rank()).then(|| (v, g))
    })
}

/// The quiver with relations of `B[M]` when `B` has monomial relations and
/// `M = P(v)/I` for an ideal spanned by paths.
fn monomial_presentation(ext: &OnePoint) -> Option<QuiverSpec> {
    let q = ext.base.quiver()?;
    if !q.spec.relations.iter().all(Relation::is_monomial) {
        return None;
    }
    let mut spec = q.spec.clone();
    spec.name = ext.alg.id().to_string();
    let label = ext.alg.vertices()[ext.omega].clone();
    spec.vertices.push(label.clone());
    if ext.m.is_zero() {
        return Some(spec);
    }
    let (v, g) = simple_top(&ext.m)?;
    let field = ext.m.field();
    let mut killed = vec![false; ext.base.dim()];
    let mut rank = 0;
    for t in 0..ext.omega {
        let paths = ext.base.between(t, v);
        let images: Vec<Vec<u32>> = paths.iter().map(|&b| ext.m.action(b).mul_vec(&g)).collect();
        for (&b, img) in paths.iter().zip(&images) {
            killed[b] = img.iter().all(|&c| c == 0);
        }
        rank += Mat::from_columns(field, ext.m.dims()[t], &images).rank();
    }
    let n_killed = killed.iter().filter(|&&k| k).count();
    let cover_dim: usize = (0..ext.omega).map(|t| ext.base.between(t, v).len()).sum();
    if cover_dim - rank != n_killed {
        return None;
    }
    let mut name = format!("x{label}");
    while spec.arrow_index(&name).is_some() {
        name.push('\'');
    }
    let new_arrow = spec.arrows.len();
    spec.arrows.push(Arrow { name, source: ext.omega, target: v });
    for b in (0..ext.base.dim()).filter(|&b| killed[b]) {
        let p = &q.paths[b];
        let prefix_killed = match p.split_last() {
            Some((_, [])) => false,
            Some((_, pre)) => (0..ext.base.dim()).any(|c| killed[c] && q.paths[c] == pre),
            None => false,
        };
        if !prefix_killed {
            let mut word = vec![new_arrow];
            word.extend_from_slice(p);
            spec.relations.push(Relation { terms: vec![(1, word)] });
        }
    }
    Some(spec)
}

/// DSL text when a monomial presentation exists and reproduces the
/// dimension; structure constants as JSON otherwise.
pub fn emit(ext: &OnePoint) -> Emission {
    if let Some(spec) = monomial_presentation(ext) {
        if build_algebra(&spec).is_ok_and(|a| a.dim() == ext.alg.dim() && a.cartan() == ext.alg.cartan()) {
            return Emission::Dsl(spec.to_dsl());
        }
    }
    let data = ext.alg.to_data();
    let table: Vec<serde_json::Value> = (0..data.labels.len())
        .flat_map(|i| (0..data.labels.len()).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let e = &data.table[i * data.labels.len() + j];
            (!e.is_empty()).then(|| json!({"left": i, "right": j, "terms": e}))
        })
        .collect();
    Emission::Json(json!({
        "id": data.id,
        "field": data.field.p(),
        "vertices": data.vertices,
        "basis": data.labels.iter().enumerate().map(|(i, l)| json!({
            "label": l,
            "source": data.vertices[data.source[i]],
            "target": data.vertices[data.target[i]],
        })).collect::<Vec<_>>(),
        "idempotents": data.idempotents,
        "products": table,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::algebra_from_text;

    fn a2() -> Arc<Algebra> {
        algebra_from_text("algebra A2 field 7\nvertices 1,2\narrow a : 1 -> 2\n").unwrap()
    }

    #[test]
    fn extension_by_simple_gives_a3() {
        let b = a2();
        let s2 = Module::simple(&b, 1);
        let ext = one_point_extension(&s2, None, "A3").unwrap();
        assert_eq!(ext.alg.dim(), b.dim() + 2);
        assert_eq!(ext.alg.vertices()[2], "3");
        ext.alg.check_associativity().unwrap();
        ext.alg.check_radical_nilpotent().unwrap();
        // P(3) = (0,1,1)
        assert_eq!(Module::projective(&ext.alg, 2).dims(), &[0, 1, 1]);
        let Emission::Dsl(text) = emit(&ext) else { panic!("monomial") };
        assert!(text.contains("arrow x3 : 3 -> 2"));
    }

    #[test]
    fn zero_extension_is_product() {
        let b = a2();
        let ext = one_point_extension(&Module::zero(&b), Some("w"), "B").unwrap();
        assert_eq!(ext.alg.dim(), b.dim() + 1);
        assert_eq!(Module::projective(&ext.alg, 2).dim(), 1);
    }

    #[test]
    fn triples_round_trip() {
        let b = a2();
        let p1 = Module::projective(&b, 0);
        let ext = one_point_extension(&p1, None, "E").unwrap();
        let pw = Module::projective(&ext.alg, ext.omega);
        let t = ext.module_to_triple(&pw);
        assert_eq!(t.y, 1);
        assert!(t.f.is_iso());
        assert!(ext.triple_to_module(&t).unwrap().same(&pw));
        let back = ext.triple_to_module(&ext.projective_omega_triple()).unwrap();
        assert!(crate::decompose::indecomposables_isomorphic(&back, &pw));
        let zero = TripleModule { y: 0, x: p1.clone(), f: Morphism::zero(&Module::zero(&b), &p1) };
        assert!(ext.triple_to_module(&zero).unwrap().same(&ext.inflate(&p1)));
        // f must be B-linear
        let bad = Morphism::from_matrix(&p1, &p1, &Mat::from_rows(b.field(), 2, &[vec![1, 0], vec![0, 0]]));
        let t = TripleModule { y: 1, x: p1.clone(), f: bad };
        assert!(ext.triple_to_module(&t).is_err());
    }
}
