//! Predecessor closures over `ind A`, the parts `L^m`, `R^n`, `L_C`, and the
//! almost-hereditary audit.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::ar::{enumerate_indecomposables, IndecSet};
use crate::config::Config;
use crate::error::Result;
use crate::homology::HomDim;

/// Nonzero-Hom digraph on the enumerated indecomposables. `dims[i][j]` is
/// `dim Hom(X_i, X_j)`; the edge relation ignores the diagonal.
#[derive(Clone, Debug)]
pub struct HomDigraph {
    pub dims: Vec<Vec<usize>>,
}

impl HomDigraph {
    pub fn new(inds: &IndecSet) -> HomDigraph {
        HomDigraph { dims: inds.hom_matrix() }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.dims[i][j] > 0
    }

    fn reach(&self, seeds: impl IntoIterator<Item = usize>, forward: bool) -> Vec<bool> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                let edge = if forward { self.has_edge(x, y) } else { self.has_edge(y, x) };
                if edge && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Predecessors of `x`, including `x` itself.
    pub fn predecessors(&self, x: usize) -> Vec<usize> {
        members(&self.reach([x], false))
    }

    /// Successors of `x`, including `x` itself.
    pub fn successors(&self, x: usize) -> Vec<usize> {
        members(&self.reach([x], true))
    }
}

pub fn members(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// `L_C`: members all of whose predecessors satisfy `in_c`.
pub fn part_l_by(graph: &HomDigraph, in_c: impl Fn(usize) -> bool) -> Vec<bool> {
    let bad = (0..graph.len()).filter(|&i| !in_c(i));
    graph.reach(bad, true).into_iter().map(|b| !b).collect()
}

/// `R_D`: members all of whose successors satisfy `in_d`.
pub fn part_r_by(graph: &HomDigraph, in_d: impl Fn(usize) -> bool) -> Vec<bool> {
    let bad = (0..graph.len()).filter(|&i| !in_d(i));
    graph.reach(bad, false).into_iter().map(|b| !b).collect()
}

/// `L^m`: every predecessor has projective dimension at most `m`.
pub fn part_l(inds: &IndecSet, graph: &HomDigraph, m: usize) -> Vec<bool> {
    part_l_by(graph, |i| inds.items[i].pd.at_most(m))
}

/// `R^n`: every successor has injective dimension at most `n`.
pub fn part_r(inds: &IndecSet, graph: &HomDigraph, n: usize) -> Vec<bool> {
    part_r_by(graph, |i| inds.items[i].id.at_most(n))
}

#[derive(Clone, Debug)]
pub struct Trisection {
    pub left_only: Vec<usize>,
    pub both: Vec<usize>,
    pub right_only: Vec<usize>,
    /// Members in neither part.
    pub outside: Vec<usize>,
    /// Nonzero maps from `R∖L` to `L∖R`; always empty for genuine parts.
    pub cross_homs: Vec<(usize, usize)>,
}

impl Trisection {
    pub fn covers(&self) -> bool {
        self.outside.is_empty()
    }
}

pub fn trisection(graph: &HomDigraph, l: &[bool], r: &[bool]) -> Trisection {
    let n = graph.len();
    let pick = |f: &dyn Fn(usize) -> bool| (0..n).filter(|&i| f(i)).collect::<Vec<_>>();
    let left_only = pick(&|i| l[i] && !r[i]);
    let both = pick(&|i| l[i] && r[i]);
    let right_only = pick(&|i| !l[i] && r[i]);
    let outside = pick(&|i| !l[i] && !r[i]);
    let mut cross_homs = Vec::new();
    for &x in &right_only {
        for &y in &left_only {
            if graph.dims[x][y] > 0 {
                cross_homs.push((x, y));
            }
        }
    }
    Trisection { left_only, both, right_only, outside, cross_homs }
}

/// Everything the checks need about one algebra: the complete enumeration,
/// its Hom digraph and the global dimension.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub inds: IndecSet,
    pub graph: HomDigraph,
    pub gldim: HomDim,
}

impl Analysis {
    pub fn new(alg: &Arc<Algebra>, cfg: &Config) -> Result<Analysis> {
        Analysis::from_indecs(enumerate_indecomposables(alg, cfg)?)
    }

    pub fn from_indecs(inds: IndecSet) -> Result<Analysis> {
        inds.require_complete()?;
        let graph = HomDigraph::new(&inds);
        let mut gldim = HomDim::Finite(0);
        for v in 0..inds.alg.num_vertices() {
            let s = inds.simple(v).expect("complete enumeration contains the simples");
            gldim = gldim.max(inds.items[s].pd);
        }
        Ok(Analysis { inds, graph, gldim })
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        &self.inds.alg
    }

    pub fn len(&self) -> usize {
        self.inds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inds.is_empty()
    }

    pub fn name(&self, i: usize) -> String {
        self.inds.items[i].name.clone()
    }

    pub fn pd(&self, i: usize) -> HomDim {
        self.inds.items[i].pd
    }

    pub fn id(&self, i: usize) -> HomDim {
        self.inds.items[i].id
    }

    pub fn part_l(&self, m: usize) -> Vec<bool> {
        part_l(&self.inds, &self.graph, m)
    }

    pub fn part_r(&self, n: usize) -> Vec<bool> {
        part_r(&self.inds, &self.graph, n)
    }

    /// Members violating "pd ≤ m or else id ≤ n".
    pub fn q2_violations(&self, m: usize, n: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.pd(i).at_most(m) && !self.id(i).at_most(n)).collect()
    }

    /// The simple of largest projective dimension.
    fn deepest_simple(&self) -> usize {
        (0..self.inds.alg.num_vertices())
            .filter_map(|v| self.inds.simple(v))
            .max_by_key(|&s| self.pd(s))
            .expect("algebra has a vertex")
    }

    pub fn is_almost_hereditary(&self, m: usize, n: usize) -> bool {
        self.gldim == HomDim::Finite(m + n) && self.q2_violations(m, n).is_empty()
    }

    /// Projectives outside `L^m`; empty iff `A ∈ add L^m`.
    pub fn projectives_outside_l(&self, m: usize) -> Vec<usize> {
        let l = self.part_l(m);
        (0..self.inds.alg.num_vertices()).map(|v| self.inds.projective(v)).filter(|&p| !l[p]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The statement's hypothesis does not hold on this input.
    Skipped,
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, verdict: Verdict, witnesses: Vec<String>, detail: impl Into<String>) -> Check {
        Check { name: name.to_string(), verdict, witnesses, detail: detail.into() }
    }

    pub fn pass(name: &str, detail: impl Into<String>) -> Check {
        Check::new(name, Verdict::Pass, Vec::new(), detail)
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Check {
        Check::new(name, Verdict::Skipped, Vec::new(), detail)
    }

    /// Pass when `witnesses` is empty, fail otherwise.
    pub fn expect_none(name: &str, witnesses: Vec<String>, detail: impl Into<String>) -> Check {
        let verdict = if witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail };
        Check::new(name, verdict, witnesses, detail)
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub id: String,
    pub dim: usize,
    pub gldim: HomDim,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Params {
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndecRow {
    pub id: String,
    pub dimvec: Vec<usize>,
    pub pd: HomDim,
    pub injdim: HomDim,
    #[serde(rename = "inL")]
    pub in_l: bool,
    #[serde(rename = "inR")]
    pub in_r: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub algebra: AlgebraSummary,
    pub params: Params,
    pub indecomposables: Vec<IndecRow>,
    pub checks: Vec<Check>,
}

/// Names of the two defining conditions; every other check is a consequence
/// that must never fail.
pub const DEFINING_CHECKS: [&str; 2] = ["q1", "q2"];

impl AuditReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn is_almost_hereditary(&self) -> bool {
        DEFINING_CHECKS.iter().all(|n| self.check(n).is_some_and(|c| c.verdict == Verdict::Pass))
    }

    /// Failed consequence checks.
    pub fn violations(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.failed() && !DEFINING_CHECKS.contains(&c.name.as_str())).collect()
    }
}

pub fn audit(alg: &Arc<Algebra>, m: usize, n: usize, cfg: &Config) -> Result<AuditReport> {
    Ok(audit_analysis(&Analysis::new(alg, cfg)?, m, n))
}

pub fn audit_analysis(an: &Analysis, m: usize, n: usize) -> AuditReport {
    let l = an.part_l(m);
    let r = an.part_r(n);
    let names = |v: &[usize]| v.iter().map(|&i| an.name(i)).collect::<Vec<_>>();
    let mut checks = Vec::new();

    let q1 = an.gldim == HomDim::Finite(m + n);
    checks.push(if q1 {
        Check::pass("q1", format!("gl.dim = {}", an.gldim))
    } else {
        Check::new(
            "q1",
            Verdict::Fail,
            vec![an.name(an.deepest_simple())],
            format!("gl.dim = {}, expected {}", an.gldim, m + n),
        )
    });

    let bad = an.q2_violations(m, n);
    let q2 = bad.is_empty();
    checks.push(Check::expect_none("q2", names(&bad), format!("pd <= {m} or else id <= {n}")));

    checks.push(if q2 {
        let ok = an.gldim.at_most(m + n + 1);
        let w = if ok { vec![] } else { vec![an.name(an.deepest_simple())] };
        Check::expect_none("gldim-bound", w, format!("gl.dim = {} <= {}", an.gldim, m + n + 1))
    } else {
        Check::skipped("gldim-bound", "dichotomy fails")
    });

    // C = {pd <= m} is torsion-free once gl.dim <= m+1
    if an.gldim.at_most(m + 1) && q2 {
        let mut w = Vec::new();
        for u in (0..an.len()).filter(|&u| !an.pd(u).at_most(m)) {
            for v in (0..an.len()).filter(|&v| !an.id(v).at_most(n)) {
                if an.graph.dims[u][v] > 0 {
                    w.push(format!("{}->{}", an.name(u), an.name(v)));
                }
            }
        }
        checks.push(Check::expect_none("hom-vanishing", w, "Hom(U,V) = 0 for pd U > m, id V > n"));
        let mut w = Vec::new();
        for x in (0..an.len()).filter(|&x| !an.id(x).at_most(n)) {
            for y in an.graph.predecessors(x) {
                if !an.pd(y).at_most(m) {
                    w.push(format!("{}->{}", an.name(y), an.name(x)));
                }
            }
        }
        checks.push(Check::expect_none("predecessors-in-class", w, "predecessors of id > n have pd <= m"));
        let outside: Vec<usize> = (0..an.len()).filter(|&i| !l[i] && !r[i]).collect();
        checks.push(Check::expect_none("class-decomposition", names(&outside), "ind = L_C u R^n"));
    } else {
        let why = "needs gl.dim <= m+1 and the dichotomy";
        checks.push(Check::skipped("hom-vanishing", why));
        checks.push(Check::skipped("predecessors-in-class", why));
        checks.push(Check::skipped("class-decomposition", why));
    }

    let tri = trisection(&an.graph, &l, &r);
    let thm = q2 && an.gldim == HomDim::Finite(m.max(n) + 1);
    checks.push(if thm {
        Check::expect_none("decomposition", names(&tri.outside), "ind = L^m u R^n")
    } else {
        Check::skipped("decomposition", "needs gl.dim = max(m,n)+1 and the dichotomy")
    });
    checks.push(if n == 1 && q1 && q2 {
        Check::expect_none("decomposition-m1", names(&tri.outside), "ind = L^m u R")
    } else {
        Check::skipped("decomposition-m1", "needs (m,1)-almost hereditary")
    });

    let cross: Vec<String> = tri.cross_homs.iter().map(|&(x, y)| format!("{}->{}", an.name(x), an.name(y))).collect();
    checks.push(Check::expect_none(
        "trisection",
        cross,
        format!(
            "sizes {}/{}/{}, {} outside",
            tri.left_only.len(),
            tri.both.len(),
            tri.right_only.len(),
            tri.outside.len()
        ),
    ));

    let indecomposables = an
        .inds
        .items
        .iter()
        .enumerate()
        .map(|(i, x)| IndecRow {
            id: x.name.clone(),
            dimvec: x.module.dims().to_vec(),
            pd: x.pd,
            injdim: x.id,
            in_l: l[i],
            in_r: r[i],
        })
        .collect();

    AuditReport {
        algebra: AlgebraSummary { id: an.alg().id().to_string(), dim: an.alg().dim(), gldim: an.gldim },
        params: Params { m, n },
        indecomposables,
        checks,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AddLmReport {
    pub m: usize,
    /// `A ∈ add L^m`.
    pub holds: bool,
    pub checks: Vec<Check>,
}

/// Consequences of `A ∈ add L^m`: gl.dim ≤ m+1 and the dichotomy
/// "pd ≤ m or else id ≤ 1"; plus, when gl.dim = m+1, (m,1)-almost
/// hereditary.
pub fn check_add_lm(an: &Analysis, m: usize) -> AddLmReport {
    let outside = an.projectives_outside_l(m);
    let names = |v: &[usize]| v.iter().map(|&i| an.name(i)).collect::<Vec<_>>();
    let holds = outside.is_empty();
    let mut checks = vec![Check::new(
        "projectives-in-L",
        if holds { Verdict::Pass } else { Verdict::Info },
        names(&outside),
        "",
    )];
    if holds {
        let w = if an.gldim.at_most(m + 1) { vec![] } else { vec![an.name(an.deepest_simple())] };
        checks.push(Check::expect_none("gldim-at-most-m+1", w, format!("gl.dim = {}", an.gldim)));
        checks.push(Check::expect_none("dichotomy", names(&an.q2_violations(m, 1)), "pd <= m or else id <= 1"));
        if an.gldim == HomDim::Finite(m + 1) {
            let ok = an.is_almost_hereditary(m, 1);
            let w = if ok { vec![] } else { names(&an.q2_violations(m, 1)) };
            checks.push(Check::expect_none("almost-hereditary", w, format!("({m},1)")));
        }
    }
    AddLmReport { m, holds, checks }
}

impl AddLmReport {
    pub fn violations(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.failed()).collect()
    }
}

/// For an (m,1)-almost hereditary algebra, whether `A ∈ add L^m`;
/// `None` when the algebra is not (m,1)-almost hereditary.
pub fn conjecture_probe(an: &Analysis, m: usize) -> Option<bool> {
    an.is_almost_hereditary(m, 1).then(|| an.projectives_outside_l(m).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::algebra_from_text;

    fn analysis(text: &str) -> Analysis {
        Analysis::new(&algebra_from_text(text).unwrap(), &Config::default()).unwrap()
    }

    #[test]
    fn a2_parts() {
        let an = analysis("algebra A2 field 7\nvertices 1,2\narrow a : 1 -> 2\n");
        assert_eq!(an.len(), 3);
        // P(1) = [1,2] has top S1 and socle S2
        let s1 = an.inds.simple(0).unwrap();
        let s2 = an.inds.simple(1).unwrap();
        let p1 = an.inds.projective(0);
        let mut pred = an.graph.predecessors(p1);
        pred.sort();
        let mut expect = vec![s2, p1];
        expect.sort();
        assert_eq!(pred, expect);
        assert_eq!(an.graph.predecessors(s2), vec![s2]);
        assert_eq!(an.graph.predecessors(s1).len(), 3);
        assert!(an.part_l(1).iter().all(|&b| b));
        let tri = trisection(&an.graph, &an.part_l(1), &an.part_r(1));
        assert!(tri.left_only.is_empty() && tri.right_only.is_empty());
        assert_eq!(tri.both.len(), 3);
    }

    #[test]
    fn a2_add_l() {
        let an = analysis("algebra A2 field 7\nvertices 1,2\narrow a : 1 -> 2\n");
        let rep = check_add_lm(&an, 1);
        assert!(rep.holds);
        assert!(rep.violations().is_empty());
    }

    #[test]
    fn triangle_audit_fails_q2() {
        let an = analysis(
            "algebra EX1 field 101\nvertices 1,2,3\narrow gamma : 1 -> 2\narrow alpha : 1 -> 3\narrow beta : 3 -> 2\nrel alpha*beta\n",
        );
        let rep = audit_analysis(&an, 1, 1);
        assert_eq!(rep.check("q1").unwrap().verdict, Verdict::Pass);
        let q2 = rep.check("q2").unwrap();
        assert_eq!(q2.verdict, Verdict::Fail);
        assert_eq!(q2.witnesses, vec!["(1,1,0)".to_string()]);
        assert!(rep.violations().is_empty());
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["algebra"]["gldim"], 2);
        assert!(json["indecomposables"][0].get("inL").is_some());
    }
}
