//! Finite-dimensional left modules and their morphisms.
//!
//! A module stores, for every basis element `b` of its algebra running from
//! vertex `s` to vertex `t`, the block `M_t x M_s` matrix by which `b` acts.
//! Vectors of the whole module are laid out vertex by vertex.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{compatible, Algebra};
use crate::dsl::ModuleSpec;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

struct ModuleData {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    action: Vec<Mat>,
}

/// A left module. Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct Module {
    inner: Arc<ModuleData>,
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &d in dims {
        acc += d;
        out.push(acc);
    }
    out
}

impl Module {
    /// Build from one block per basis element, checking every module axiom.
    pub fn new(alg: &Arc<Algebra>, dims: Vec<usize>, action: Vec<Mat>) -> Result<Module> {
        let m = Module::new_unchecked(alg, dims, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: &Arc<Algebra>, dims: Vec<usize>, action: Vec<Mat>) -> Module {
        debug_assert_eq!(dims.len(), alg.num_vertices());
        debug_assert_eq!(action.len(), alg.dim());
        let offsets = offsets(&dims);
        Module { inner: Arc::new(ModuleData { alg: alg.clone(), dims, offsets, action }) }
    }

    /// Build from the action of the algebra generators alone; the remaining
    /// basis elements must be products of generators along their quiver path.
    pub fn from_arrows(alg: &Arc<Algebra>, dims: Vec<usize>, arrow_maps: &[Mat]) -> Result<Module> {
        let q = alg
            .quiver()
            .ok_or_else(|| Error::input(format!("algebra {} has no quiver presentation", alg.id())))?;
        if arrow_maps.len() != q.spec.arrows.len() {
            return Err(Error::input("one matrix per arrow required"));
        }
        let f = alg.field();
        for (a, arrow) in q.spec.arrows.iter().enumerate() {
            let m = &arrow_maps[a];
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::input(format!(
                    "map {} must be {}x{}",
                    arrow.name, dims[arrow.target], dims[arrow.source]
                )));
            }
        }
        let mut action = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let (s, t) = (alg.source(b), alg.target(b));
            let mut m = Mat::identity(f, dims[s]);
            for &a in &q.paths[b] {
                m = arrow_maps[a].mul(&m);
            }
            debug_assert_eq!((m.rows(), m.cols()), (dims[t], dims[s]));
            action.push(m);
        }
        Module::new(alg, dims, action)
    }

    /// Resolve a module literal against a quiver algebra.
    pub fn from_spec(alg: &Arc<Algebra>, spec: &ModuleSpec) -> Result<Module> {
        let q = alg
            .quiver()
            .ok_or_else(|| Error::input(format!("algebra {} has no quiver presentation", alg.id())))?;
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        for (v, d) in &spec.dims {
            let i = alg
                .vertex_index(v)
                .ok_or_else(|| Error::input(format!("module {}: unknown vertex `{v}`", spec.name)))?;
            dims[i] = *d;
        }
        let mut maps: Vec<Mat> =
            q.spec.arrows.iter().map(|a| Mat::zeros(f, dims[a.target], dims[a.source])).collect();
        for (name, rows) in &spec.maps {
            let a = q
                .spec
                .arrow_index(name)
                .ok_or_else(|| Error::input(format!("module {}: unknown arrow `{name}`", spec.name)))?;
            let arrow = &q.spec.arrows[a];
            let (r, c) = (dims[arrow.target], dims[arrow.source]);
            let nonempty: Vec<Vec<i64>> = rows.iter().filter(|row| !row.is_empty()).cloned().collect();
            if r * c == 0 {
                if !nonempty.is_empty() {
                    return Err(Error::input(format!("module {}: map {name} must be empty", spec.name)));
                }
                continue;
            }
            if nonempty.len() != r || nonempty.iter().any(|row| row.len() != c) {
                return Err(Error::input(format!("module {}: map {name} must be {r}x{c}", spec.name)));
            }
            maps[a] = Mat::from_rows(f, c, &nonempty);
        }
        Module::from_arrows(alg, dims, &maps)
            .map_err(|e| Error::input(format!("module {} (line {}): {e}", spec.name, spec.line)))
    }

    /// Render as a `module` block of the text format.
    pub fn to_dsl(&self, name: &str) -> Result<String> {
        let alg = self.alg();
        let q = alg
            .quiver()
            .ok_or_else(|| Error::input(format!("algebra {} has no quiver presentation", alg.id())))?;
        let mut out = format!("module {name}\n");
        for (v, &d) in self.dims().iter().enumerate() {
            if d > 0 {
                out.push_str(&format!("dim {} = {d}\n", alg.vertices()[v]));
            }
        }
        for (a, arrow) in q.spec.arrows.iter().enumerate() {
            let m = self.action(q.arrow_basis[a]);
            if m.rows() == 0 || m.cols() == 0 || m.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..m.rows())
                .map(|i| {
                    let r: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
                    format!("[{}]", r.join(","))
                })
                .collect();
            out.push_str(&format!("map {} = [{}]\n", arrow.name, rows.join(",")));
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        let alg = self.alg();
        let f = alg.field();
        let d = alg.dim();
        for b in 0..d {
            let m = self.action(b);
            let (s, t) = (alg.source(b), alg.target(b));
            if m.rows() != self.dims()[t] || m.cols() != self.dims()[s] {
                return Err(Error::input(format!("action of {} has the wrong shape", alg.labels()[b])));
            }
            if alg.is_idempotent(b) && !m.is_identity() {
                return Err(Error::input(format!("{} must act as the identity", alg.labels()[b])));
            }
        }
        for i in alg.radical().iter().copied() {
            for j in 0..d {
                if alg.source(i) != alg.target(j) {
                    continue;
                }
                let lhs = self.action(i).mul(self.action(j));
                let mut rhs = Mat::zeros(f, lhs.rows(), lhs.cols());
                for &(k, c) in alg.mul_basis(i, j) {
                    rhs.add_scaled(c, self.action(k));
                }
                if lhs != rhs {
                    return Err(Error::input(format!(
                        "action does not respect {} * {}",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let f = alg.field();
        let action = (0..alg.dim()).map(|_| Mat::zeros(f, 0, 0)).collect();
        Module::new_unchecked(alg, vec![0; alg.num_vertices()], action)
    }

    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Module {
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let action = (0..alg.dim())
            .map(|b| {
                let (s, t) = (alg.source(b), alg.target(b));
                if alg.is_idempotent(b) && s == v {
                    Mat::identity(f, 1)
                } else {
                    Mat::zeros(f, dims[t], dims[s])
                }
            })
            .collect();
        Module::new_unchecked(alg, dims, action)
    }

    /// The indecomposable projective `A e_v`, with basis the basis elements
    /// whose source is `v` (grouped by target).
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Module {
        let f = alg.field();
        let r = alg.num_vertices();
        let mut pos = vec![usize::MAX; alg.dim()];
        let mut dims = vec![0; r];
        for t in 0..r {
            for (k, &b) in alg.between(t, v).iter().enumerate() {
                pos[b] = k;
            }
            dims[t] = alg.between(t, v).len();
        }
        let action = (0..alg.dim())
            .map(|a| {
                let (s, t) = (alg.source(a), alg.target(a));
                let mut m = Mat::zeros(f, dims[t], dims[s]);
                for (col, &b) in alg.between(s, v).iter().enumerate() {
                    for &(k, c) in alg.mul_basis(a, b) {
                        m.set(pos[k], col, c);
                    }
                }
                m
            })
            .collect();
        Module::new_unchecked(alg, dims, action)
    }

    /// The indecomposable injective at `v`: the dual of the right ideal `e_v A`.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Module {
        let op = alg.opposite();
        Module::projective(&op, v).dual().rebase(alg)
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        &self.inner.alg
    }

    pub fn field(&self) -> Field {
        self.inner.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }

    pub fn dim(&self) -> usize {
        *self.inner.offsets.last().unwrap()
    }

    /// Composition length. Every simple module of a split basic algebra is
    /// one-dimensional, so this equals the dimension.
    pub fn length(&self) -> usize {
        self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn offset(&self, v: usize) -> usize {
        self.inner.offsets[v]
    }

    pub fn action(&self, b: usize) -> &Mat {
        &self.inner.action[b]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.inner.action
    }

    /// Action of a basis element on the whole module.
    pub fn full_action(&self, b: usize) -> Mat {
        let alg = self.alg();
        let mut m = Mat::zeros(self.field(), self.dim(), self.dim());
        m.set_block(self.offset(alg.target(b)), self.offset(alg.source(b)), self.action(b));
        m
    }

    /// Structural equality (same algebra, dimensions and action matrices).
    pub fn same(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (compatible(self.alg(), other.alg())
                && self.dims() == other.dims()
                && self.inner.action == other.inner.action)
    }

    /// Reinterpret as a module over a structurally identical algebra handle.
    pub fn rebase(&self, alg: &Arc<Algebra>) -> Module {
        if Arc::ptr_eq(self.alg(), alg) {
            return self.clone();
        }
        assert!(self.alg().same_structure(alg), "rebase onto a different algebra");
        Module::new_unchecked(alg, self.dims().to_vec(), self.inner.action.clone())
    }

    /// The dual `Hom_k(M, k)`, a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.alg().opposite();
        let action = self.inner.action.iter().map(|m| m.transpose()).collect();
        Module::new_unchecked(&op, self.dims().to_vec(), action)
    }

    /// Components of a whole-module vector at vertex `v`.
    pub fn component<'a>(&self, x: &'a [u32], v: usize) -> &'a [u32] {
        &x[self.offset(v)..self.offset(v + 1)]
    }

    /// Submodule whose component at each vertex is spanned by the given
    /// independent columns. The subspace must be stable.
    pub fn graded_submodule(&self, bases: Vec<Mat>) -> (Module, Morphism) {
        let alg = self.alg().clone();
        let dims: Vec<usize> = bases.iter().map(|m| m.cols()).collect();
        let lefts: Vec<Mat> = bases.iter().map(|m| m.left_inverse()).collect();
        let action = (0..alg.dim())
            .map(|b| {
                let (s, t) = (alg.source(b), alg.target(b));
                let x = lefts[t].mul(&self.action(b).mul(&bases[s]));
                debug_assert_eq!(bases[t].mul(&x), self.action(b).mul(&bases[s]), "subspace not stable");
                x
            })
            .collect();
        let sub = Module::new_unchecked(&alg, dims, action);
        let inc = Morphism::new_unchecked(&sub, self, bases);
        (sub, inc)
    }

    /// Per-vertex bases of the submodule generated by the given vectors.
    pub fn generated(&self, gens: &[Vec<u32>]) -> Vec<Mat> {
        let alg = self.alg();
        let f = self.field();
        let r = alg.num_vertices();
        let mut cols: Vec<Vec<Vec<u32>>> = vec![Vec::new(); r];
        for x in gens {
            for b in 0..alg.dim() {
                let (s, t) = (alg.source(b), alg.target(b));
                if self.dims()[t] == 0 {
                    continue;
                }
                let y = self.action(b).mul_vec(self.component(x, s));
                if y.iter().any(|&c| c != 0) {
                    cols[t].push(y);
                }
            }
        }
        (0..r).map(|v| Mat::from_columns(f, self.dims()[v], &cols[v]).column_space()).collect()
    }

    /// Submodule generated by a set of vectors.
    pub fn submodule_generated(&self, gens: &[Vec<u32>]) -> (Module, Morphism) {
        self.graded_submodule(self.generated(gens))
    }

    /// Quotient by a stable graded subspace, with the projection and a
    /// linear (not necessarily module) section given per vertex.
    pub fn quotient(&self, bases: &[Mat]) -> (Module, Morphism, Vec<Mat>) {
        let alg = self.alg().clone();
        let f = self.field();
        let r = alg.num_vertices();
        let mut proj = Vec::with_capacity(r);
        let mut sect = Vec::with_capacity(r);
        for v in 0..r {
            let u = &bases[v];
            let c = u.complement_columns();
            let q = Mat::hstack(f, self.dims()[v], &[u, &c]);
            let inv = q.inverse().expect("basis plus complement is invertible");
            proj.push(inv.block(u.cols(), 0, c.cols(), self.dims()[v]));
            sect.push(c);
        }
        let dims: Vec<usize> = sect.iter().map(|c| c.cols()).collect();
        let action = (0..alg.dim())
            .map(|b| {
                let (s, t) = (alg.source(b), alg.target(b));
                proj[t].mul(&self.action(b).mul(&sect[s]))
            })
            .collect();
        let q = Module::new_unchecked(&alg, dims, action);
        let pi = Morphism::new_unchecked(self, &q, proj);
        (q, pi, sect)
    }

    /// Per-vertex bases of the radical `rad A * M`.
    pub fn radical_bases(&self) -> Vec<Mat> {
        let alg = self.alg();
        let f = self.field();
        let r = alg.num_vertices();
        (0..r)
            .map(|t| {
                let mut parts: Vec<&Mat> = Vec::new();
                for &g in alg.generators() {
                    if alg.target(g) == t {
                        parts.push(self.action(g));
                    }
                }
                if parts.is_empty() {
                    return Mat::zeros(f, self.dims()[t], 0);
                }
                Mat::hstack(f, self.dims()[t], &parts).column_space()
            })
            .collect()
    }

    pub fn radical(&self) -> (Module, Morphism) {
        self.graded_submodule(self.radical_bases())
    }

    /// `M / rad M` with its projection and a section.
    pub fn top(&self) -> (Module, Morphism, Vec<Mat>) {
        self.quotient(&self.radical_bases())
    }

    /// Per-vertex bases of the socle: vectors killed by every generator.
    pub fn socle_bases(&self) -> Vec<Mat> {
        let alg = self.alg();
        let f = self.field();
        (0..alg.num_vertices())
            .map(|s| {
                let parts: Vec<&Mat> =
                    alg.generators().iter().filter(|&&g| alg.source(g) == s).map(|&g| self.action(g)).collect();
                if parts.is_empty() {
                    return Mat::identity(f, self.dims()[s]);
                }
                Mat::vstack(f, self.dims()[s], &parts).kernel_basis()
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_bases().iter().zip(self.dims()).map(|(b, d)| d - b.cols()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_bases().iter().map(|b| b.cols()).collect()
    }

    /// Number of steps in the radical series.
    pub fn loewy_length(&self) -> usize {
        let mut m = self.clone();
        let mut n = 0;
        while !m.is_zero() {
            m = m.radical().0;
            n += 1;
        }
        n
    }

    pub fn is_projective_shape(&self) -> bool {
        // dimension count of the projective cover
        let top = self.top_dims();
        let cover: usize = top
            .iter()
            .enumerate()
            .map(|(v, &k)| k * (0..self.alg().num_vertices()).map(|t| self.alg().between(t, v).len()).sum::<usize>())
            .sum();
        cover == self.dim()
    }

    /// Direct sum with the canonical injections and projections.
    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Module]) -> (Module, Vec<Morphism>, Vec<Morphism>) {
        let f = alg.field();
        let r = alg.num_vertices();
        let dims: Vec<usize> = (0..r).map(|v| parts.iter().map(|m| m.dims()[v]).sum()).collect();
        let action = (0..alg.dim())
            .map(|b| {
                let blocks: Vec<&Mat> = parts.iter().map(|m| m.action(b)).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        let sum = Module::new_unchecked(alg, dims.clone(), action);
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut acc = vec![0usize; r];
        for m in parts {
            let mut ib = Vec::with_capacity(r);
            let mut pb = Vec::with_capacity(r);
            for v in 0..r {
                let mut i = Mat::zeros(f, dims[v], m.dims()[v]);
                let mut p = Mat::zeros(f, m.dims()[v], dims[v]);
                for k in 0..m.dims()[v] {
                    i.set(acc[v] + k, k, 1);
                    p.set(k, acc[v] + k, 1);
                }
                ib.push(i);
                pb.push(p);
                acc[v] += m.dims()[v];
            }
            inj.push(Morphism::new_unchecked(m, &sum, ib));
            proj.push(Morphism::new_unchecked(&sum, m, pb));
        }
        (sum, inj, proj)
    }

    pub fn sum(alg: &Arc<Algebra>, parts: &[Module]) -> Module {
        Module::direct_sum(alg, parts).0
    }

    /// Conjugate by per-vertex invertible matrices: the result is isomorphic
    /// to `self` via the blocks `g_v`.
    pub fn transport(&self, g: &[Mat]) -> Module {
        let alg = self.alg();
        let inv: Vec<Mat> = g.iter().map(|m| m.inverse().expect("invertible change of basis")).collect();
        let action = (0..alg.dim())
            .map(|b| g[alg.target(b)].mul(&self.action(b).mul(&inv[alg.source(b)])))
            .collect();
        Module::new_unchecked(alg, self.dims().to_vec(), action)
    }

    pub fn dimvec_string(&self) -> String {
        let parts: Vec<String> = self.dims().iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module[{}]{}", self.alg().id(), self.dimvec_string())
    }
}

/// A module homomorphism, one block per vertex.
#[derive(Clone)]
pub struct Morphism {
    source: Module,
    target: Module,
    blocks: Vec<Mat>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism {:?} -> {:?} {:?}", self.source, self.target, self.blocks)
    }
}

impl Morphism {
    pub fn new(source: &Module, target: &Module, blocks: Vec<Mat>) -> Result<Morphism> {
        let m = Morphism::new_unchecked(source, target, blocks);
        if !m.is_homomorphism() {
            return Err(Error::input("linear map does not commute with the action"));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: &Module, target: &Module, blocks: Vec<Mat>) -> Morphism {
        debug_assert!(blocks
            .iter()
            .enumerate()
            .all(|(v, b)| b.rows() == target.dims()[v] && b.cols() == source.dims()[v]));
        Morphism { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn zero(source: &Module, target: &Module) -> Morphism {
        let f = source.field();
        let blocks = (0..source.dims().len()).map(|v| Mat::zeros(f, target.dims()[v], source.dims()[v])).collect();
        Morphism::new_unchecked(source, target, blocks)
    }

    pub fn identity(m: &Module) -> Morphism {
        let f = m.field();
        let blocks = m.dims().iter().map(|&d| Mat::identity(f, d)).collect();
        Morphism::new_unchecked(m, m, blocks)
    }

    /// Split a whole-module matrix into vertex blocks.
    pub fn from_matrix(source: &Module, target: &Module, m: &Mat) -> Morphism {
        let blocks = (0..source.dims().len())
            .map(|v| m.block(target.offset(v), source.offset(v), target.dims()[v], source.dims()[v]))
            .collect();
        Morphism::new_unchecked(source, target, blocks)
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn block(&self, v: usize) -> &Mat {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn matrix(&self) -> Mat {
        let f = self.source.field();
        let mut m = Mat::zeros(f, self.target.dim(), self.source.dim());
        for (v, b) in self.blocks.iter().enumerate() {
            m.set_block(self.target.offset(v), self.source.offset(v), b);
        }
        m
    }

    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        self.matrix().mul_vec(x)
    }

    pub fn is_homomorphism(&self) -> bool {
        let alg = self.source.alg();
        alg.generators().iter().all(|&g| {
            let (s, t) = (alg.source(g), alg.target(g));
            self.blocks[t].mul(self.source.action(g)) == self.target.action(g).mul(&self.blocks[s])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let blocks: Option<Vec<Mat>> = self.blocks.iter().map(|b| b.inverse()).collect();
        blocks.map(|b| Morphism::new_unchecked(&self.target, &self.source, b))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        debug_assert_eq!(other.target.dims(), self.source.dims());
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        Morphism::new_unchecked(&other.source, &self.target, blocks)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morphism::new_unchecked(&self.source, &self.target, blocks)
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        Morphism::new_unchecked(&self.source, &self.target, blocks)
    }

    pub fn scale(&self, c: u32) -> Morphism {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        Morphism::new_unchecked(&self.source, &self.target, blocks)
    }

    /// Linear combination of parallel morphisms.
    pub fn combination(source: &Module, target: &Module, maps: &[Morphism], coeffs: &[u32]) -> Morphism {
        let mut out = Morphism::zero(source, target);
        for (m, &c) in maps.iter().zip(coeffs) {
            if c != 0 {
                for (o, b) in out.blocks.iter_mut().zip(&m.blocks) {
                    o.add_scaled(c, b);
                }
            }
        }
        out
    }

    /// Same linear map viewed between other (structurally equal) modules.
    pub fn retarget(&self, source: &Module, target: &Module) -> Morphism {
        debug_assert_eq!(source.dims(), self.source.dims());
        debug_assert_eq!(target.dims(), self.target.dims());
        Morphism::new_unchecked(source, target, self.blocks.clone())
    }

    /// Transpose: a morphism `D N -> D M` of modules over the opposite algebra.
    pub fn dual(&self) -> Morphism {
        let blocks = self.blocks.iter().map(|b| b.transpose()).collect();
        Morphism::new_unchecked(&self.target.dual(), &self.source.dual(), blocks)
    }

    pub fn dual_between(&self, dsource: &Module, dtarget: &Module) -> Morphism {
        let blocks = self.blocks.iter().map(|b| b.transpose()).collect();
        Morphism::new_unchecked(dsource, dtarget, blocks)
    }

    pub fn kernel(&self) -> (Module, Morphism) {
        let bases = self.blocks.iter().map(|b| b.kernel_basis()).collect();
        self.source.graded_submodule(bases)
    }

    pub fn image_bases(&self) -> Vec<Mat> {
        self.blocks.iter().map(|b| b.column_space()).collect()
    }

    /// Image as a submodule of the target, with the corestriction
    /// `source -> image` and the inclusion `image -> target`.
    pub fn image(&self) -> (Module, Morphism, Morphism) {
        let bases = self.image_bases();
        let (im, inc) = self.target.graded_submodule(bases.clone());
        let lefts: Vec<Mat> = bases.iter().map(|b| b.left_inverse()).collect();
        let blocks = self.blocks.iter().zip(&lefts).map(|(b, l)| l.mul(b)).collect();
        let co = Morphism::new_unchecked(&self.source, &im, blocks);
        (im, co, inc)
    }

    pub fn cokernel(&self) -> (Module, Morphism) {
        let (q, pi, _) = self.target.quotient(&self.image_bases());
        (q, pi)
    }
}

/// Kernel, image and cokernel of a morphism together with the canonical maps.
pub struct KerCoker {
    pub kernel: Module,
    pub kernel_inclusion: Morphism,
    pub image: Module,
    pub coimage_map: Morphism,
    pub image_inclusion: Morphism,
    pub cokernel: Module,
    pub cokernel_projection: Morphism,
}

pub fn kernel_cokernel(f: &Morphism) -> KerCoker {
    let (kernel, kernel_inclusion) = f.kernel();
    let (image, coimage_map, image_inclusion) = f.image();
    let (cokernel, cokernel_projection) = f.cokernel();
    KerCoker { kernel, kernel_inclusion, image, coimage_map, image_inclusion, cokernel, cokernel_projection }
}

/// The linear system whose solutions are the homomorphisms `M -> N`, with
/// unknowns ordered vertex by vertex, each block row-major.
fn hom_equations(m: &Module, n: &Module) -> (Mat, Vec<usize>) {
    let alg = m.alg();
    let f = m.field();
    let r = alg.num_vertices();
    let mut base = vec![0usize; r + 1];
    for v in 0..r {
        base[v + 1] = base[v] + n.dims()[v] * m.dims()[v];
    }
    let unknowns = base[r];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &g in alg.generators() {
        let (s, t) = (alg.source(g), alg.target(g));
        let (mg, ng) = (m.action(g), n.action(g));
        let (dms, dmt, dns, dnt) = (m.dims()[s], m.dims()[t], n.dims()[s], n.dims()[t]);
        // (f_t M_g - N_g f_s)[i][j] = 0
        for i in 0..dnt {
            for j in 0..dms {
                let mut row = vec![0u32; unknowns];
                for k in 0..dmt {
                    let c = mg.get(k, j);
                    if c != 0 {
                        let idx = base[t] + i * dmt + k;
                        row[idx] = f.add(row[idx], c);
                    }
                }
                for k in 0..dns {
                    let c = ng.get(i, k);
                    if c != 0 {
                        let idx = base[s] + k * dms + j;
                        row[idx] = f.sub(row[idx], c);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    (Mat::from_fn(f, rows.len(), unknowns, |i, j| rows[i][j]), base)
}

fn unpack(m: &Module, n: &Module, base: &[usize], x: &[u32]) -> Morphism {
    let f = m.field();
    let blocks = (0..m.dims().len())
        .map(|v| {
            let (rows, cols) = (n.dims()[v], m.dims()[v]);
            Mat::from_fn(f, rows, cols, |i, j| x[base[v] + i * cols + j])
        })
        .collect();
    Morphism::new_unchecked(m, n, blocks)
}

/// A basis of `Hom_A(M, N)`.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<Morphism> {
    assert!(compatible(m.alg(), n.alg()), "modules over different algebras");
    if m.is_zero() || n.is_zero() {
        return Vec::new();
    }
    let (eqs, base) = hom_equations(m, n);
    let k = eqs.kernel_basis();
    (0..k.cols()).map(|j| unpack(m, n, &base, &k.col(j))).collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let (eqs, _) = hom_equations(m, n);
    eqs.cols() - eqs.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::algebra_from_text;

    const EX1: &str = "algebra EX1 field 101\nvertices 1,2,3\narrow gamma : 1 -> 2\narrow alpha : 1 -> 3\narrow beta : 3 -> 2\nrel alpha*beta\n";

    #[test]
    fn projectives_and_injectives() {
        let a = algebra_from_text(EX1).unwrap();
        let p1 = Module::projective(&a, 0);
        assert_eq!(p1.dims(), &[1, 1, 1]);
        p1.validate().unwrap();
        let i2 = Module::injective(&a, 1);
        assert_eq!(i2.dims(), &[1, 1, 1]);
        i2.validate().unwrap();
        assert!(Arc::ptr_eq(i2.alg(), &a));
        for v in 0..3 {
            let s = Module::simple(&a, v);
            s.validate().unwrap();
            for w in 0..3 {
                assert_eq!(hom_dim(&Module::simple(&a, w), &s), usize::from(v == w));
            }
        }
    }

    #[test]
    fn hom_from_projective_is_evaluation() {
        let a = algebra_from_text(EX1).unwrap();
        let mods: Vec<Module> = (0..3)
            .flat_map(|v| [Module::projective(&a, v), Module::injective(&a, v), Module::simple(&a, v)])
            .collect();
        for v in 0..3 {
            let p = Module::projective(&a, v);
            for m in &mods {
                assert_eq!(hom_dim(&p, m), m.dims()[v]);
            }
        }
    }

    #[test]
    fn radical_of_p1_splits() {
        let a = algebra_from_text(EX1).unwrap();
        let p1 = Module::projective(&a, 0);
        let (rad, inc) = p1.radical();
        assert_eq!(rad.dims(), &[0, 1, 1]);
        assert!(inc.is_homomorphism() && inc.is_injective());
        // semisimple: the radical of rad P(1) vanishes
        assert!(rad.radical().0.is_zero());
        let (top, pi, _) = p1.top();
        assert_eq!(top.dims(), &[1, 0, 0]);
        assert!(pi.is_homomorphism());
    }

    #[test]
    fn kernel_of_cover() {
        let a = algebra_from_text("algebra B field 101\nvertices 1,2,3\narrow a : 3 -> 2\narrow b : 2 -> 1\n").unwrap();
        let p3 = Module::projective(&a, 2);
        let s3 = Module::simple(&a, 2);
        let hom = hom_basis(&p3, &s3);
        assert_eq!(hom.len(), 1);
        let kc = kernel_cokernel(&hom[0]);
        assert_eq!(kc.kernel.dims(), &[1, 1, 0]);
        assert!(kc.cokernel.is_zero());
        assert_eq!(kc.image.dims(), s3.dims());
    }

    #[test]
    fn dual_round_trip() {
        let a = algebra_from_text(EX1).unwrap();
        let m = Module::projective(&a, 0);
        let dd = m.dual().dual();
        assert!(Arc::ptr_eq(dd.alg(), &a));
        assert!(dd.same(&m));
    }

    #[test]
    fn module_literal() {
        let doc = crate::dsl::parse_document(&format!("{EX1}module M\ndim 1 = 1\ndim 2 = 1\nmap gamma = [[1]]\n")).unwrap();
        let a = crate::presentation::build_algebra(doc.algebra.as_ref().unwrap()).unwrap();
        let m = Module::from_spec(&a, &doc.modules[0]).unwrap();
        assert_eq!(m.dims(), &[1, 1, 0]);
        let text = m.to_dsl("M").unwrap();
        assert!(text.contains("map gamma = [[1]]"));
        let bad = crate::dsl::parse_document(&format!(
            "{EX1}module N\ndim 1 = 1\ndim 2 = 1\ndim 3 = 1\nmap alpha = [[1]]\nmap beta = [[1]]\n"
        ))
        .unwrap();
        assert!(Module::from_spec(&a, &bad.modules[0]).is_err());
    }

    #[test]
    fn direct_sum_maps() {
        let a = algebra_from_text(EX1).unwrap();
        let parts = [Module::simple(&a, 1), Module::projective(&a, 2)];
        let (sum, inj, proj) = Module::direct_sum(&a, &parts);
        sum.validate().unwrap();
        for (i, p) in inj.iter().zip(&proj) {
            assert!(i.is_homomorphism() && p.is_homomorphism());
            assert!(p.compose(i).matrix().is_identity());
        }
        assert_eq!(hom_dim(&sum, &sum), 3);
    }
}
