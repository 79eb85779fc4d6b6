//! Auslander–Reiten translates and enumeration of indecomposables.
//!
//! `Tr M` is the cokernel of `Hom_A(P_0, A) -> Hom_A(P_1, A)` for a minimal
//! presentation `P_1 -> P_0 -> M`, a module over the opposite algebra.
//! `τ = D Tr` and `τ⁻¹ = Tr D`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::config::Config;
use crate::decompose::{decompose_summands, indecomposables_isomorphic, is_indecomposable};
use crate::error::{Error, Result};
use crate::homology::{
    ext_group, extension_from_cocycle, induced_ext_map, inj_dim, proj_dim, projective_cover, Free, HomDim, Resolution,
    ShortExact,
};
use crate::linalg::Mat;
use crate::module::{hom_basis, Morphism, Module};
use crate::oracle::Nakayama;

/// The transpose, a module over the opposite algebra.
pub fn transpose(m: &Module) -> Module {
    let alg = m.alg();
    let op = alg.opposite();
    let res = Resolution::with_length(m, 1);
    let Some(p1) = res.term(1).cloned() else {
        return Module::zero(&op);
    };
    let p0 = res.term(0).unwrap();
    let d1 = res.differential(1);
    let f0 = Free::new(&op, p0.verts().to_vec());
    let f1 = Free::new(&op, p1.verts().to_vec());
    // generator g of f0 goes to Σ_j Σ_b a_{j,g,b} b·gen_j where
    // d1(gen_j) = Σ_{g,b} a_{j,g,b} b·gen_g
    let mut images: Vec<Vec<u32>> =
        p0.verts().iter().map(|&v| vec![0u32; f1.module().dims()[v]]).collect();
    let mut index = BTreeMap::new();
    for t in 0..alg.num_vertices() {
        for (k, &(j, b)) in f1.entries_at(t).iter().enumerate() {
            index.insert((j, b), k);
        }
    }
    for (j, &w) in p1.verts().iter().enumerate() {
        let y = p1.generator_image(d1, j);
        for (idx, &c) in y.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (g, b) = p0.entries_at(w)[idx];
            images[g][index[&(j, b)]] = c;
        }
    }
    let map = f0.map_to(f1.module(), &images);
    map.cokernel().0
}

/// `τ M = D Tr M`.
pub fn tau(m: &Module) -> Module {
    transpose(m).dual()
}

/// `τ⁻¹ M = Tr D M`.
pub fn tau_inv(m: &Module) -> Module {
    transpose(&m.dual())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Tau,
    TauInverse,
}

pub fn ar_translate(m: &Module, dir: Direction) -> Module {
    match dir {
        Direction::Tau => tau(m),
        Direction::TauInverse => tau_inv(m),
    }
}

/// Injective envelope `N -> I(N)`.
pub fn injective_envelope(n: &Module) -> (Module, Morphism) {
    let (p, eps) = projective_cover(&n.dual());
    let inj = p.module().dual();
    let iota = eps.dual_between(n, &inj);
    (inj, iota)
}

/// One enumerated indecomposable with cached invariants.
#[derive(Clone, Debug)]
pub struct Indec {
    pub name: String,
    pub module: Module,
    pub pd: HomDim,
    pub id: HomDim,
    /// Vertex `v` when the module is `P(v)`, `I(v)` or `S(v)`.
    pub projective: Option<usize>,
    pub injective: Option<usize>,
    pub simple: Option<usize>,
    pub tau: Option<usize>,
    pub tau_inv: Option<usize>,
}

/// The indecomposables of an algebra, pairwise non-isomorphic.
#[derive(Clone, Debug)]
pub struct IndecSet {
    pub alg: Arc<Algebra>,
    pub items: Vec<Indec>,
    pub complete: bool,
    pub notes: Vec<String>,
}

fn find_iso(items: &[Indec], m: &Module) -> Option<usize> {
    items.iter().position(|x| x.module.dims() == m.dims() && indecomposables_isomorphic(&x.module, m))
}

fn dimvec_label(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The almost split sequence `0 -> τM -> E -> M -> 0` ending at a
/// non-projective indecomposable `M`; `None` for projectives.
///
/// Its class spans the socle of `Ext^1(M, τM)` as an `End(M)`-module, found
/// as the common kernel of the maps induced by radical endomorphisms.
pub fn almost_split_sequence(m: &Module) -> Option<ShortExact> {
    let t = tau(m);
    if t.is_zero() {
        return None;
    }
    let f = m.field();
    let res = Resolution::with_length(m, 2);
    let ext = ext_group(&res, 1, &t);
    let d = ext.dim();
    let blocks: Vec<Mat> =
        radical_maps(m, m).iter().map(|g| induced_ext_map(g, &res, &res, 1, &t)).collect();
    let refs: Vec<&Mat> = blocks.iter().collect();
    let soc = Mat::vstack(f, d, &refs).kernel_basis();
    assert!(soc.cols() > 0, "Ext^1(M, τM) has a nonzero socle");
    Some(extension_from_cocycle(&res, &t, &soc.col(0)))
}

/// Enumerate the indecomposables by closing the projectives under `τ`,
/// `τ⁻¹` and neighbours in the Auslander–Reiten quiver (summands of middle
/// terms of almost split sequences, of `rad P` and of `I / soc I`). This
/// yields the components containing the projectives, which is all of
/// `ind A` for a representation-finite algebra. Exceeding a cap is an
/// error.
pub fn enumerate_indecomposables(alg: &Arc<Algebra>, cfg: &Config) -> Result<IndecSet> {
    let opts = cfg.decompose();
    let r = alg.num_vertices();
    let mut items: Vec<Indec> = Vec::new();
    let blank = |m: Module| Indec {
        name: String::new(),
        module: m,
        pd: HomDim::Finite(0),
        id: HomDim::Finite(0),
        projective: None,
        injective: None,
        simple: None,
        tau: None,
        tau_inv: None,
    };
    for v in 0..r {
        let mut x = blank(Module::projective(alg, v));
        x.projective = Some(v);
        items.push(x);
    }
    let insert = |items: &mut Vec<Indec>, m: Module| -> Result<usize> {
        if let Some(j) = find_iso(items, &m) {
            return Ok(j);
        }
        if m.dim() > cfg.max_dim {
            return Err(Error::Cap(format!(
                "module of dimension {} exceeds max dim {}; possibly representation-infinite",
                m.dim(),
                cfg.max_dim
            )));
        }
        if items.len() >= cfg.max_modules {
            return Err(Error::Cap(format!(
                "more than {} indecomposables; possibly representation-infinite",
                cfg.max_modules
            )));
        }
        items.push(blank(m));
        Ok(items.len() - 1)
    };
    // record τ⁻¹ X_a = X_b
    let link = |items: &mut Vec<Indec>, a: usize, b: usize| -> Result<()> {
        if items[a].tau_inv.is_some_and(|x| x != b) || items[b].tau.is_some_and(|x| x != a) {
            return Err(Error::Inconclusive("translates disagree".into()));
        }
        items[a].tau_inv = Some(b);
        items[b].tau = Some(a);
        Ok(())
    };
    let summands = |m: &Module| -> Result<Vec<Module>> {
        Ok(decompose_summands(m, &opts)?.into_iter().map(|s| s.module).collect())
    };
    let mut k = 0;
    while k < items.len() {
        let m = items[k].module.clone();
        let mut found = Vec::new();
        let up = tau_inv(&m);
        if up.is_zero() {
            let (q, _, _) = m.quotient(&m.socle_bases());
            found.extend(summands(&q)?);
        } else {
            if !is_indecomposable(&up, &opts)? {
                return Err(Error::Inconclusive("translate of an indecomposable decomposed".into()));
            }
            let j = insert(&mut items, up)?;
            link(&mut items, k, j)?;
        }
        if items[k].projective.is_some() {
            found.extend(summands(&m.radical().0)?);
        } else {
            let seq = almost_split_sequence(&m).expect("non-projective");
            let j = insert(&mut items, seq.left().clone())?;
            link(&mut items, j, k)?;
            found.extend(summands(seq.middle())?);
        }
        for x in found {
            insert(&mut items, x)?;
        }
        k += 1;
    }

    let mut notes = vec!["assumes the algebra is representation-finite".to_string()];
    let mut complete = true;
    for v in 0..r {
        let inj = Module::injective(alg, v);
        match find_iso(&items, &inj) {
            Some(j) => items[j].injective = Some(v),
            None => {
                complete = false;
                notes.push(format!("injective I({}) not reached", alg.vertices()[v]));
            }
        }
        let s = Module::simple(alg, v);
        match find_iso(&items, &s) {
            Some(j) => items[j].simple = Some(v),
            None => {
                complete = false;
                notes.push(format!("simple S({}) not reached", alg.vertices()[v]));
            }
        }
    }
    // τ-closure: the translate of every non-projective is in the set
    for k in 0..items.len() {
        if items[k].projective.is_some() {
            continue;
        }
        let t = tau(&items[k].module);
        let ok = match items[k].tau {
            Some(j) => !t.is_zero() && indecomposables_isomorphic(&items[j].module, &t),
            None => false,
        };
        if !ok {
            complete = false;
            notes.push(format!("translate of module {k} not in the set"));
        }
    }
    if let Some(naka) = alg.quiver().and_then(|q| Nakayama::from_spec(&q.spec)) {
        let mut want: Vec<Vec<usize>> = naka.intervals().into_iter().map(|i| naka.dimvec(i)).collect();
        let mut got: Vec<Vec<usize>> = items.iter().map(|x| x.module.dims().to_vec()).collect();
        want.sort();
        got.sort();
        if want == got {
            notes.push("agrees with the interval model".to_string());
        } else {
            complete = false;
            notes.push("disagrees with the interval model".to_string());
        }
    }

    for x in items.iter_mut() {
        x.pd = proj_dim(&x.module, cfg)?;
        x.id = inj_dim(&x.module, cfg)?;
    }
    // names: P/I/S tags first, then dimension vectors made unique
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for x in items.iter_mut() {
        let base = if let Some(v) = x.projective {
            format!("P{}", alg.vertices()[v])
        } else if let Some(v) = x.injective {
            format!("I{}", alg.vertices()[v])
        } else if let Some(v) = x.simple {
            format!("S{}", alg.vertices()[v])
        } else {
            dimvec_label(x.module.dims())
        };
        let c = seen.entry(base.clone()).or_insert(0);
        *c += 1;
        x.name = if *c == 1 { base } else { format!("{base}#{c}") };
    }
    Ok(IndecSet { alg: alg.clone(), items, complete, notes })
}

impl IndecSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::Partial(self.notes.join("; ")))
        }
    }

    /// Index of the member isomorphic to an indecomposable module.
    pub fn index_of(&self, m: &Module) -> Option<usize> {
        find_iso(&self.items, m)
    }

    pub fn by_name(&self, name: &str) -> Option<usize> {
        self.items.iter().position(|x| x.name == name)
    }

    pub fn projective(&self, v: usize) -> usize {
        self.items.iter().position(|x| x.projective == Some(v)).expect("projectives are enumerated")
    }

    pub fn injective(&self, v: usize) -> Option<usize> {
        self.items.iter().position(|x| x.injective == Some(v))
    }

    pub fn simple(&self, v: usize) -> Option<usize> {
        self.items.iter().position(|x| x.simple == Some(v))
    }

    /// τ-orbits, each listed from its projective outward.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (k, x) in self.items.iter().enumerate() {
            if x.tau.is_none() {
                let mut orbit = vec![k];
                let mut cur = k;
                while let Some(n) = self.items[cur].tau_inv {
                    orbit.push(n);
                    cur = n;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits().iter().map(|o| o.len()).collect();
        s.sort_unstable();
        s
    }

    /// `dim Hom(X_i, X_j)` for all pairs.
    pub fn hom_matrix(&self) -> Vec<Vec<usize>> {
        self.items
            .iter()
            .map(|x| self.items.iter().map(|y| crate::module::hom_dim(&x.module, &y.module)).collect())
            .collect()
    }

    /// Multiplicities of the irreducible maps `dim rad(X,Y)/rad²(X,Y)`.
    pub fn irreducible_multiplicities(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let homs: Vec<Vec<Vec<Morphism>>> = self
            .items
            .iter()
            .map(|x| self.items.iter().map(|y| radical_maps(&x.module, &y.module)).collect())
            .collect();
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let rad = &homs[i][j];
                if rad.is_empty() {
                    continue;
                }
                let m = &self.items[i].module;
                let t = &self.items[j].module;
                let len = m.dim() * t.dim();
                let flat = |f: &Morphism| f.matrix().data().to_vec();
                let mut cols: Vec<Vec<u32>> = Vec::new();
                for z in 0..n {
                    for g in &homs[i][z] {
                        for h in &homs[z][j] {
                            let c = h.compose(g);
                            if !c.is_zero() {
                                cols.push(flat(&c));
                            }
                        }
                    }
                }
                let f = m.field();
                let rad2 = Mat::from_columns(f, len, &cols).rank();
                out[i][j] = rad.len() - rad2;
            }
        }
        out
    }

    /// Graphviz rendering of the Auslander–Reiten quiver.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", self.alg.id());
        let _ = writeln!(s, "  rankdir=LR;");
        for (k, x) in self.items.iter().enumerate() {
            let mut tags = Vec::new();
            if let Some(v) = x.projective {
                tags.push(format!("P{}", self.alg.vertices()[v]));
            }
            if let Some(v) = x.injective {
                tags.push(format!("I{}", self.alg.vertices()[v]));
            }
            if let Some(v) = x.simple {
                tags.push(format!("S{}", self.alg.vertices()[v]));
            }
            let label = if tags.is_empty() {
                dimvec_label(x.module.dims())
            } else {
                format!("{} {}", dimvec_label(x.module.dims()), tags.join(" "))
            };
            let _ = writeln!(s, "  n{k} [label=\"{label}\"];");
        }
        let irr = self.irreducible_multiplicities();
        for (i, row) in irr.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    let _ = writeln!(s, "  n{i} -> n{j};");
                }
            }
        }
        for (k, x) in self.items.iter().enumerate() {
            if let Some(t) = x.tau {
                let _ = writeln!(s, "  n{k} -> n{t} [style=dashed, constraint=false];");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// A basis of the radical morphisms `X -> Y` between indecomposables: all of
/// `Hom(X, Y)` unless the modules are isomorphic, otherwise the non-invertible
/// endomorphisms.
fn radical_maps(x: &Module, y: &Module) -> Vec<Morphism> {
    let basis = hom_basis(x, y);
    if x.dims() != y.dims() || !basis.iter().any(|f| f.is_iso()) {
        return basis;
    }
    // local ring: the radical is spanned by each basis element shifted by
    // its unique eigenvalue
    let f = x.field();
    let phi = crate::decompose::iso_between_indecomposables(x, y).expect("isomorphic");
    let psi = phi.inverse().expect("isomorphism");
    let mut out: Vec<Morphism> = Vec::new();
    for b in &basis {
        let e = psi.compose(b);
        let blk = e.blocks().iter().find(|m| m.rows() > 0).expect("nonzero module");
        let lambda = crate::linalg::poly::roots(f, &blk.charpoly())[0].0;
        out.push(phi.compose(&e.sub(&Morphism::identity(x).scale(lambda))));
    }
    // keep an independent spanning set
    let len = x.dim() * y.dim();
    let cols: Vec<Vec<u32>> = out.iter().map(|m| m.matrix().data().to_vec()).collect();
    let keep = Mat::from_columns(f, len, &cols).independent_columns();
    keep.into_iter().map(|j| out[j].clone()).collect()
}

/// Convenience: the translate-orbit sizes and members of the interval model
/// for a Nakayama algebra, for comparison in reports.
pub fn nakayama_model(alg: &Algebra) -> Option<Nakayama> {
    alg.quiver().and_then(|q| Nakayama::from_spec(&q.spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::algebra_from_text;

    #[test]
    fn a2_quiver() {
        let a = algebra_from_text("algebra A2 field 101\nvertices 1,2\narrow a : 1 -> 2\n").unwrap();
        let inds = enumerate_indecomposables(&a, &Config::default()).unwrap();
        assert!(inds.complete);
        assert_eq!(inds.len(), 3);
        let irr = inds.irreducible_multiplicities();
        let edges: usize = irr.iter().flatten().sum();
        assert_eq!(edges, 2);
        assert_eq!(tau(&Module::projective(&a, 0)).dim(), 0);
        assert!(inds.to_dot().contains("digraph"));
    }

    #[test]
    fn single_vertex() {
        let a = algebra_from_text("algebra K field 101\nvertices 1\n").unwrap();
        let inds = enumerate_indecomposables(&a, &Config::default()).unwrap();
        assert_eq!(inds.len(), 1);
        assert_eq!(inds.irreducible_multiplicities(), vec![vec![0]]);
    }

    #[test]
    fn transpose_twice() {
        let a = algebra_from_text("algebra R field 101\nvertices 1,2,3\narrow a : 1 -> 2\narrow b : 2 -> 3\n").unwrap();
        let s1 = Module::simple(&a, 0);
        let tt = transpose(&transpose(&s1));
        assert!(Arc::ptr_eq(tt.alg(), &a));
        assert!(indecomposables_isomorphic(&tt, &s1));
        let t = tau(&s1);
        assert_eq!(t.dims(), &[0, 1, 0]);
        assert!(indecomposables_isomorphic(&tau_inv(&t), &s1));
    }

    #[test]
    fn envelope_is_injective_hull() {
        let a = algebra_from_text("algebra R field 101\nvertices 1,2,3\narrow a : 1 -> 2\narrow b : 2 -> 3\n").unwrap();
        let s2 = Module::simple(&a, 1);
        let (i, iota) = injective_envelope(&s2);
        assert_eq!(i.dims(), &[1, 1, 0]);
        assert!(iota.is_homomorphism() && iota.is_injective());
    }
}
