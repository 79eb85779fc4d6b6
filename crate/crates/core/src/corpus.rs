//! Built-in example algebras, their expected facts and the runner that
//! checks them.

use std::cell::OnceCell;
use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::homology::{inj_dim, proj_dim, HomDim};
use crate::module::Module;
use crate::opext::{check_extension, check_pd_lemma, one_point_extension, OnePoint};
use crate::parts::{audit_analysis, Analysis};
use crate::presentation::algebra_from_text;
use crate::tilting::{check_tilting, endomorphism_algebra, parse_summands, reverse_step, verify_chain, TiltKind};

fn linear(name: &str, n: usize, descending: bool) -> String {
    let mut s = format!("algebra {name} field 101\nvertices 1..{n}\n");
    for i in 1..n {
        let (a, b) = if descending { (i + 1, i) } else { (i, i + 1) };
        let _ = writeln!(s, "arrow a{a} : {a} -> {b}");
    }
    s
}

/// Relations of length `len` along a linear quiver, starting at each of
/// `starts` (arrow names as in [`linear`]).
fn push_relations(s: &mut String, len: usize, starts: impl Iterator<Item = usize>, descending: bool) {
    for i in starts {
        let word: Vec<String> = if descending {
            (0..len).map(|k| format!("a{}", i - k)).collect()
        } else {
            (0..len).map(|k| format!("a{}", i + k)).collect()
        };
        let _ = writeln!(s, "rel {}", word.join("*"));
    }
}

pub fn ex1() -> String {
    "algebra EX1 field 101\nvertices 1,2,3\narrow gamma : 1 -> 2\narrow alpha : 1 -> 3\narrow beta : 3 -> 2\nrel alpha*beta\n"
        .to_string()
}

/// Radical square zero on `1 -> ... -> m+n+2`.
pub fn ex2(m: usize, n: usize) -> String {
    let k = m + n + 2;
    let mut s = linear(&format!("EX2_{m}_{n}"), k, false);
    push_relations(&mut s, 2, 1..k - 1, false);
    s
}

/// `1 -> ... -> 8` with the paths of length five from 1, 2, 3 zero.
pub fn ex3() -> String {
    let mut s = linear("EX3", 8, false);
    push_relations(&mut s, 5, 1..=3, false);
    s
}

/// `1 -> ... -> 12` with the paths of length seven from 1..5 zero.
pub fn ex4() -> String {
    let mut s = linear("EX4", 12, false);
    push_relations(&mut s, 7, 1..=5, false);
    s
}

/// `5 -> 4 -> 3 -> 2 -> 1` with `5 -> 4 -> 3` and `3 -> 2 -> 1` zero.
pub fn ex5b() -> String {
    let mut s = linear("EX5B", 5, true);
    push_relations(&mut s, 2, [5, 3].into_iter(), true);
    s
}

/// [`ex5b`] with `6 -> 5` added and `6 -> 5 -> 4` zero.
pub fn ex5a() -> String {
    let mut s = linear("EX5A", 6, true);
    push_relations(&mut s, 2, [6, 5, 3].into_iter(), true);
    s
}

/// `m+3 -> ... -> 1` with the paths of length two starting at `3..=m+2`
/// zero.
pub fn ex6b(m: usize) -> String {
    let mut s = linear(&format!("EX6B_{m}"), m + 3, true);
    push_relations(&mut s, 2, 3..=m + 2, true);
    s
}

/// [`ex6b`] with `m+4 -> m+3` added and `m+4 -> m+3 -> m+2` zero.
pub fn ex6a(m: usize) -> String {
    let mut s = linear(&format!("EX6A_{m}"), m + 4, true);
    push_relations(&mut s, 2, (3..=m + 2).chain([m + 4]), true);
    s
}

/// Radical square zero on `m+n+1 -> ... -> 1`.
pub fn ex7(m: usize, n: usize) -> String {
    let k = m + n + 1;
    let mut s = linear(&format!("EX7_{m}_{n}"), k, true);
    push_relations(&mut s, 2, 3..=k, true);
    s
}

fn params(s: &str, prefix: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|p| p.trim().parse().ok()).collect()
}

/// DSL text of a corpus algebra by id, e.g. `EX1`, `EX2(1,2)`, `EX6A(2)`.
pub fn algebra_text(id: &str) -> Option<String> {
    match id {
        "EX1" => return Some(ex1()),
        "EX2" => return Some(ex2(1, 1)),
        "EX3" => return Some(ex3()),
        "EX4" => return Some(ex4()),
        "EX7" => return Some(ex7(1, 1)),
        "EX5B" => return Some(ex5b()),
        "EX5A" => return Some(ex5a()),
        _ => {}
    }
    let ok = |m: usize| m >= 1;
    if let Some(p) = params(id, "EX2") {
        return (p.len() == 2 && p.iter().all(|&x| ok(x))).then(|| ex2(p[0], p[1]));
    }
    if let Some(p) = params(id, "EX6B") {
        return (p.len() == 1 && ok(p[0])).then(|| ex6b(p[0]));
    }
    if let Some(p) = params(id, "EX6A") {
        return (p.len() == 1 && ok(p[0])).then(|| ex6a(p[0]));
    }
    if let Some(p) = params(id, "EX7") {
        return (p.len() == 2 && p.iter().all(|&x| ok(x))).then(|| ex7(p[0], p[1]));
    }
    None
}

/// Where an expected value comes from: stated in the literature the
/// examples are taken from, or computed independently (interval model,
/// direct computation).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Stated,
    Computed,
}

/// A machine-checkable question about an algebra. Module arguments are
/// enumeration names (`P3`, `(0,1,1)`), `S<v>`/`P<v>`/`I<v>` by vertex,
/// `0`, or `+`-joined sums of these.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Query {
    Dimension,
    GlobalDimension,
    IndecCount,
    /// Sizes of the τ-orbits, sorted.
    OrbitSizes,
    /// Number of indecomposables of each Loewy length, sorted.
    RowSizes,
    AlmostHereditary { m: usize, n: usize },
    Q2Witnesses { m: usize, n: usize },
    ProjDim { module: String },
    InjDim { module: String },
    InLeft { m: usize, module: String },
    InRight { n: usize, module: String },
    /// `ind A = L^m ∪ R^n`
    Covered { m: usize, n: usize },
    Tilting { module: String },
    EndGlobalDimension { module: String },
    /// The chain from `End_A(T)` back to `A^op` by one tilting step,
    /// verified as an `(m,n)` chain.
    ReverseChain { module: String, m: usize, n: usize },
    /// Evaluate on `B[M]`.
    Extension { module: String, query: Box<Query> },
    /// `B[M]` and the companion algebra agree on dimension, global
    /// dimension and the projective and injective dimensions of the
    /// simples, projectives and injectives at each vertex label.
    MatchesCompanion { module: String },
    PdLemma { module: String, m: usize },
    /// Verdict of a named check of `check_extension`.
    ExtensionCheck { module: String, m: usize, check: String },
    Companion { query: Box<Query> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fact {
    pub id: String,
    pub origin: Origin,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub query: Query,
    pub expected: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub companion: Option<String>,
    pub facts: Vec<Fact>,
}

fn stated(id: &str, cite: &str, query: Query, expected: Value) -> Fact {
    Fact { id: id.to_string(), origin: Origin::Stated, citation: Some(cite.to_string()), query, expected }
}

fn computed(id: &str, query: Query, expected: Value) -> Fact {
    Fact { id: id.to_string(), origin: Origin::Computed, citation: None, query, expected }
}

fn ext(module: &str, query: Query) -> Query {
    Query::Extension { module: module.to_string(), query: Box::new(query) }
}

fn named(module: &str) -> String {
    module.to_string()
}

/// The EX3 tilting module `P4 ⊕ T2 ⊕ T3 ⊕ T4 ⊕ S4 ⊕ P3 ⊕ P2 ⊕ P1`.
pub const EX3_TILTING: &str = "P4+(0,0,0,1,1,1,1,0)+(0,0,0,1,1,1,0,0)+(0,0,0,1,1,0,0,0)+S4+P3+P2+P1";
/// The interval module `[3..6]` of EX3.
pub const EX3_M: &str = "(0,0,1,1,1,1,0,0)";

fn ex6_entry(m: usize) -> CorpusEntry {
    let top = format!("S{}", m + 3);
    let mid = format!("S{}", m + 2);
    let cite = "one-point extension of the length-two-relations example by the simple at the source";
    CorpusEntry {
        id: format!("EX6({m})"),
        source: ex6b(m),
        companion: Some(ex6a(m)),
        facts: vec![
            stated("B-almost-hereditary", "B is (m,1)-almost hereditary", Query::AlmostHereditary { m, n: 1 }, json!(true)),
            computed("B-gldim", Query::GlobalDimension, json!(m + 1)),
            stated("A-gldim", "gl.dim A = gl.dim B", ext(&top, Query::GlobalDimension), json!(m + 1)),
            stated("A-pd", cite, ext(&top, Query::ProjDim { module: mid.clone() }), json!(m + 1)),
            stated("A-id", cite, ext(&top, Query::InjDim { module: mid.clone() }), json!(2)),
            stated("A-not-almost-hereditary", cite, ext(&top, Query::AlmostHereditary { m, n: 1 }), json!(false)),
            computed("A-matches", Query::MatchesCompanion { module: top.clone() }, json!(true)),
            computed("pd-lemma", Query::PdLemma { module: top.clone(), m }, json!(true)),
            computed("gldim-formula", Query::ExtensionCheck { module: top.clone(), m, check: named("gldim-formula") }, json!("pass")),
            computed(
                "sufficient-condition",
                Query::ExtensionCheck { module: top, m, check: named("sufficient-condition") },
                json!("skipped"),
            ),
        ],
    }
}

/// The shipped corpus, in report order.
pub fn corpus() -> Vec<CorpusEntry> {
    let w110 = "(1,1,0)";
    vec![
        CorpusEntry {
            id: "EX1".into(),
            source: ex1(),
            companion: None,
            facts: vec![
                stated("gldim", "triangle example: global dimension two", Query::GlobalDimension, json!(2)),
                stated("pd", "triangle example: the uniserial module 1 over 2", Query::ProjDim { module: named(w110) }, json!(2)),
                stated("id", "triangle example: the uniserial module 1 over 2", Query::InjDim { module: named(w110) }, json!(2)),
                stated("q2-witness", "(Q2) does not follow from (Q1)", Query::Q2Witnesses { m: 1, n: 1 }, json!([w110])),
                stated("not-almost-hereditary", "(Q2) does not follow from (Q1)", Query::AlmostHereditary { m: 1, n: 1 }, json!(false)),
                computed("count", Query::IndecCount, json!(9)),
            ],
        },
        CorpusEntry {
            id: "EX2(1,1)".into(),
            source: ex2(1, 1),
            companion: None,
            facts: vec![
                stated("gldim", "radical square zero example: gl.dim = m+n+1", Query::GlobalDimension, json!(3)),
                stated("dichotomy", "pd at most m or id at most n", Query::Q2Witnesses { m: 1, n: 1 }, json!([])),
                stated("almost-hereditary-1-2", "(a,b)-almost hereditary when a+b = m+n+1", Query::AlmostHereditary { m: 1, n: 2 }, json!(true)),
                stated("almost-hereditary-2-1", "(a,b)-almost hereditary when a+b = m+n+1", Query::AlmostHereditary { m: 2, n: 1 }, json!(true)),
                computed("count", Query::IndecCount, json!(7)),
            ],
        },
        CorpusEntry {
            id: "EX3".into(),
            source: ex3(),
            companion: None,
            facts: vec![
                stated("count", "AR quiver figure", Query::IndecCount, json!(30)),
                stated("rows", "AR quiver figure", Query::RowSizes, json!([4, 5, 6, 7, 8])),
                computed("orbits", Query::OrbitSizes, json!([1, 1, 1, 1, 5, 6, 7, 8])),
                computed("gldim", Query::GlobalDimension, json!(3)),
                stated("almost-hereditary", "(1,2)-almost hereditary, as a consequence of the chain", Query::AlmostHereditary { m: 1, n: 2 }, json!(true)),
                computed("almost-hereditary-2-1", Query::AlmostHereditary { m: 2, n: 1 }, json!(true)),
                stated("pd-M", "M has projective and injective dimension two", Query::ProjDim { module: named(EX3_M) }, json!(2)),
                stated("id-M", "M has projective and injective dimension two", Query::InjDim { module: named(EX3_M) }, json!(2)),
                stated("covered", "ind A = L^m ∪ R^n for (m,n)-almost hereditary A", Query::Covered { m: 1, n: 2 }, json!(true)),
                stated("M-not-left", "L ∪ R is a proper part of ind A", Query::InLeft { m: 1, module: named(EX3_M) }, json!(false)),
                stated("M-not-right", "L ∪ R is a proper part of ind A", Query::InRight { n: 1, module: named(EX3_M) }, json!(false)),
                stated("tilting", "the eight-summand tilting module T", Query::Tilting { module: named(EX3_TILTING) }, json!(true)),
                computed("end-gldim", Query::EndGlobalDimension { module: named(EX3_TILTING) }, json!(2)),
                stated(
                    "quasitilted",
                    "(1,2)-quasitilted: A is recovered as the endomorphism algebra of a B-module",
                    Query::ReverseChain { module: named(EX3_TILTING), m: 1, n: 2 },
                    json!(true),
                ),
            ],
        },
        CorpusEntry {
            id: "EX4".into(),
            source: ex4(),
            companion: None,
            facts: vec![
                computed("count", Query::IndecCount, json!(63)),
                computed("gldim", Query::GlobalDimension, json!(3)),
                stated("almost-hereditary-1-2", "almost hereditary for both (1,2) and (2,1)", Query::AlmostHereditary { m: 1, n: 2 }, json!(true)),
                stated("almost-hereditary-2-1", "almost hereditary for both (1,2) and (2,1)", Query::AlmostHereditary { m: 2, n: 1 }, json!(true)),
            ],
        },
        CorpusEntry {
            id: "EX5".into(),
            source: ex5b(),
            companion: Some(ex5a()),
            facts: vec![
                stated("B-gldim", "B has gl.dim two", Query::GlobalDimension, json!(2)),
                stated("B-not-almost-hereditary", "B is not (1,1)-almost hereditary", Query::AlmostHereditary { m: 1, n: 1 }, json!(false)),
                stated("A-almost-hereditary", "B[S5] is (2,1)-almost hereditary", ext("S5", Query::AlmostHereditary { m: 2, n: 1 }), json!(true)),
                computed("A-dim", ext("S5", Query::Dimension), json!(12)),
                computed("A-matches", Query::MatchesCompanion { module: named("S5") }, json!(true)),
                stated("companion", "B[S5] is (2,1)-almost hereditary", Query::Companion { query: Box::new(Query::AlmostHereditary { m: 2, n: 1 }) }, json!(true)),
                computed("pd-lemma-1", Query::PdLemma { module: named("S5"), m: 1 }, json!(true)),
                computed("pd-lemma-2", Query::PdLemma { module: named("S5"), m: 2 }, json!(true)),
                computed("gldim-formula", Query::ExtensionCheck { module: named("S5"), m: 2, check: named("gldim-formula") }, json!("pass")),
                computed(
                    "necessary-condition",
                    Query::ExtensionCheck { module: named("S5"), m: 2, check: named("necessary-condition") },
                    json!("skipped"),
                ),
            ],
        },
        ex6_entry(1),
        ex6_entry(2),
        CorpusEntry {
            id: "EX7(1,1)".into(),
            source: ex7(1, 1),
            companion: None,
            facts: vec![
                stated("almost-hereditary", "A is (m,n)-almost hereditary", Query::AlmostHereditary { m: 1, n: 1 }, json!(true)),
                computed("extension-almost-hereditary", ext("P1", Query::AlmostHereditary { m: 1, n: 1 }), json!(true)),
                computed(
                    "hom-vanishing-condition",
                    Query::ExtensionCheck { module: named("P1"), m: 1, check: named("hom-vanishing-condition") },
                    json!("pass"),
                ),
                computed("gldim-formula-zero", Query::ExtensionCheck { module: named("0"), m: 1, check: named("gldim-formula") }, json!("pass")),
                computed("gldim-formula-P3", Query::ExtensionCheck { module: named("P3"), m: 1, check: named("gldim-formula") }, json!("pass")),
            ],
        },
        CorpusEntry {
            id: "EX7(1,2)".into(),
            source: ex7(1, 2),
            companion: None,
            facts: vec![
                stated("almost-hereditary", "A is (m,n)-almost hereditary", Query::AlmostHereditary { m: 1, n: 2 }, json!(true)),
                stated("P4-not-left", "P_{m+n+1} is not in L^m", Query::InLeft { m: 1, module: named("P4") }, json!(false)),
            ],
        },
    ]
}

/// Resolve a module argument (see [`Query`]).
pub fn resolve_module(an: &Analysis, text: &str) -> Result<Module> {
    let alg = an.alg();
    let mut parts = Vec::new();
    for s in text.split('+').map(str::trim).filter(|s| !s.is_empty()) {
        if s == "0" {
            continue;
        }
        if let Some(i) = an.inds.by_name(s) {
            parts.push(an.inds.items[i].module.clone());
            continue;
        }
        let by_vertex = s.get(1..).and_then(|v| alg.vertex_index(v)).and_then(|v| match &s[..1] {
            "S" => Some(Module::simple(alg, v)),
            "P" => Some(Module::projective(alg, v)),
            "I" => Some(Module::injective(alg, v)),
            _ => None,
        });
        match by_vertex {
            Some(m) => parts.push(m),
            None => parts.extend(parse_summands(an, s)?),
        }
    }
    Ok(Module::sum(alg, &parts))
}

fn index_of(an: &Analysis, text: &str) -> Result<usize> {
    let m = resolve_module(an, text)?;
    an.inds.index_of(&m).ok_or_else(|| Error::input(format!("{text} is not an indecomposable")))
}

fn homdim(d: HomDim) -> Value {
    match d {
        HomDim::Finite(k) => json!(k),
        HomDim::Infinite => json!("inf"),
    }
}

/// Evaluation state for one entry: analyses are computed once.
struct Ctx<'a> {
    entry: &'a CorpusEntry,
    cfg: &'a Config,
    base: OnceCell<Result<Analysis>>,
    companion: OnceCell<Result<Analysis>>,
    exts: std::cell::RefCell<HashMap<String, Arc<(OnePoint, Analysis)>>>,
}

fn share(r: &Result<Analysis>) -> Result<&Analysis> {
    r.as_ref().map_err(Clone::clone)
}

impl<'a> Ctx<'a> {
    fn base(&self) -> Result<&Analysis> {
        share(self.base.get_or_init(|| Analysis::new(&algebra_from_text(&self.entry.source)?, self.cfg)))
    }

    fn companion(&self) -> Result<&Analysis> {
        share(self.companion.get_or_init(|| {
            let text = self.entry.companion.as_ref().ok_or_else(|| Error::input("entry has no companion"))?;
            Analysis::new(&algebra_from_text(text)?, self.cfg)
        }))
    }

    fn extension(&self, module: &str) -> Result<Arc<(OnePoint, Analysis)>> {
        if let Some(e) = self.exts.borrow().get(module) {
            return Ok(e.clone());
        }
        let b = self.base()?;
        let m = resolve_module(b, module)?;
        let ext = one_point_extension(&m, None, &format!("{}[{module}]", b.alg().id()))?;
        let an = Analysis::new(&ext.alg, self.cfg)?;
        let e = Arc::new((ext, an));
        self.exts.borrow_mut().insert(module.to_string(), e.clone());
        Ok(e)
    }

    fn eval(&self, an: &Analysis, q: &Query) -> Result<Value> {
        let cfg = self.cfg;
        Ok(match q {
            Query::Dimension => json!(an.alg().dim()),
            Query::GlobalDimension => homdim(an.gldim),
            Query::IndecCount => json!(an.len()),
            Query::OrbitSizes => json!(an.inds.orbit_sizes()),
            Query::RowSizes => {
                let mut rows: HashMap<usize, usize> = HashMap::new();
                for x in &an.inds.items {
                    *rows.entry(x.module.loewy_length()).or_default() += 1;
                }
                let mut sizes: Vec<usize> = rows.into_values().collect();
                sizes.sort_unstable();
                json!(sizes)
            }
            Query::AlmostHereditary { m, n } => json!(audit_analysis(an, *m, *n).is_almost_hereditary()),
            Query::Q2Witnesses { m, n } => {
                let w: Vec<String> = an.q2_violations(*m, *n).into_iter().map(|i| an.name(i)).collect();
                json!(w)
            }
            Query::ProjDim { module } => homdim(proj_dim(&resolve_module(an, module)?, cfg)?),
            Query::InjDim { module } => homdim(inj_dim(&resolve_module(an, module)?, cfg)?),
            Query::InLeft { m, module } => json!(an.part_l(*m)[index_of(an, module)?]),
            Query::InRight { n, module } => json!(an.part_r(*n)[index_of(an, module)?]),
            Query::Covered { m, n } => {
                let (l, r) = (an.part_l(*m), an.part_r(*n));
                json!((0..an.len()).all(|i| l[i] || r[i]))
            }
            Query::Tilting { module } => {
                json!(check_tilting(&parse_summands(an, module)?, TiltKind::Tilt, cfg)?.pass)
            }
            Query::EndGlobalDimension { module } => {
                let end = endomorphism_algebra(&parse_summands(an, module)?, "End")?;
                homdim(Analysis::new(&end.alg, cfg)?.gldim)
            }
            Query::ReverseChain { module, m, n } => {
                let (base, step) = reverse_step(an, &parse_summands(an, module)?, cfg)?;
                let report = verify_chain(&base, &[step], *m, *n, cfg)?;
                json!(report.certified() && !report.conclusion.failed())
            }
            Query::Extension { module, query } => {
                let e = self.extension(module)?;
                self.eval(&e.1, query)?
            }
            Query::MatchesCompanion { module } => {
                let e = self.extension(module)?;
                json!(same_invariants(&e.1, self.companion()?, cfg)?)
            }
            Query::PdLemma { module, m } => {
                let e = self.extension(module)?;
                json!(!check_pd_lemma(&e.0, &e.1, self.base()?, *m, cfg)?.check.failed())
            }
            Query::ExtensionCheck { module, m, check } => {
                let e = self.extension(module)?;
                let report = check_extension(&e.0, &e.1, self.base()?, *m, cfg)?;
                let c = report.check(check).ok_or_else(|| Error::input(format!("no check named {check}")))?;
                serde_json::to_value(c.verdict).expect("verdicts serialize")
            }
            Query::Companion { query } => self.eval(self.companion()?, query)?,
        })
    }
}

fn same_invariants(a: &Analysis, b: &Analysis, cfg: &Config) -> Result<bool> {
    let (x, y) = (a.alg(), b.alg());
    if x.dim() != y.dim() || x.num_vertices() != y.num_vertices() || a.gldim != b.gldim || a.len() != b.len() {
        return Ok(false);
    }
    let profile = |alg: &Arc<Algebra>, v: usize| -> Result<Vec<HomDim>> {
        let mut out = Vec::new();
        for m in [Module::simple(alg, v), Module::projective(alg, v), Module::injective(alg, v)] {
            out.push(proj_dim(&m, cfg)?);
            out.push(inj_dim(&m, cfg)?);
        }
        Ok(out)
    };
    for v in 0..x.num_vertices() {
        let Some(w) = y.vertex_index(&x.vertices()[v]) else {
            return Ok(false);
        };
        if profile(x, v)? != profile(y, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactOutcome {
    pub entry: String,
    pub fact: String,
    pub origin: Origin,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub outcomes: Vec<FactOutcome>,
}

impl CorpusReport {
    pub fn failures(&self) -> Vec<&FactOutcome> {
        self.outcomes.iter().filter(|o| !o.pass).collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// One line per fact.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let mark = if o.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{mark} {}/{} expected {} observed {}", o.entry, o.fact, o.expected, o.observed);
        }
        let _ = writeln!(out, "{} facts, {} failed", self.outcomes.len(), self.failures().len());
        out
    }
}

fn run_entry(entry: &CorpusEntry, cfg: &Config) -> Vec<FactOutcome> {
    let ctx = Ctx {
        entry,
        cfg,
        base: OnceCell::new(),
        companion: OnceCell::new(),
        exts: Default::default(),
    };
    entry
        .facts
        .iter()
        .map(|fact| {
            let observed = match ctx.base().and_then(|b| ctx.eval(b, &fact.query)) {
                Ok(v) => v,
                Err(e) => json!({ "error": e.to_string() }),
            };
            FactOutcome {
                entry: entry.id.clone(),
                fact: fact.id.clone(),
                origin: fact.origin,
                citation: fact.citation.clone(),
                pass: observed == fact.expected,
                expected: fact.expected.clone(),
                observed,
            }
        })
        .collect()
}

/// Check every fact of the given entries; entries run on separate threads
/// and the report keeps their order.
pub fn run_entries(entries: &[CorpusEntry], cfg: &Config) -> CorpusReport {
    let outcomes = std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(move || run_entry(e, cfg))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("corpus entry panicked")).collect()
    });
    CorpusReport { outcomes }
}

/// Run the shipped corpus, keeping entries whose id contains `filter`.
pub fn run_corpus(filter: Option<&str>, cfg: &Config) -> CorpusReport {
    let entries: Vec<CorpusEntry> =
        corpus().into_iter().filter(|e| filter.is_none_or(|f| e.id.contains(f))).collect();
    run_entries(&entries, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parts::members;

    #[test]
    fn ids_resolve() {
        for id in ["EX1", "EX2(1,2)", "EX3", "EX4", "EX5A", "EX5B", "EX6A(2)", "EX6B(1)", "EX7(1,2)"] {
            algebra_from_text(&algebra_text(id).unwrap()).unwrap();
        }
        assert!(algebra_text("EX2(0,1)").is_none());
        assert!(algebra_text("EX8").is_none());
    }

    #[test]
    fn filter_selects_parameterizations() {
        let ids: Vec<String> = corpus().into_iter().filter(|e| e.id.contains("EX6")).map(|e| e.id).collect();
        assert_eq!(ids, ["EX6(1)", "EX6(2)"]);
    }

    #[test]
    fn module_arguments() {
        let a = algebra_from_text(&ex7(1, 1)).unwrap();
        let an = Analysis::new(&a, &Config::default()).unwrap();
        assert_eq!(resolve_module(&an, "S1").unwrap().dims(), &[1, 0, 0]);
        assert_eq!(resolve_module(&an, "P3+S2").unwrap().dims(), &[0, 2, 1]);
        assert!(resolve_module(&an, "0").unwrap().is_zero());
        assert!(resolve_module(&an, "Q7").is_err());
        assert!(members(&an.part_l(1)).len() <= an.len());
    }
}
