//! Minimal projective resolutions, homological dimensions and Ext.
//!
//! `Ext^i(M, N)` is the cohomology of `Hom(P_•, N)` for a minimal projective
//! resolution `P_•` of `M`. A homomorphism from a free module
//! `⊕_j P(u_j)` is determined by the images of its generators, so
//! `Hom(P_i, N) = ⊕_j N_{u_j}` and every cochain map is assembled from the
//! action matrices of `N`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::config::Config;
use crate::decompose::is_isomorphic;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{Morphism, Module};

/// A direct sum of indecomposable projectives `⊕_j P(u_j)`.
#[derive(Clone, Debug)]
pub struct Free {
    verts: Vec<usize>,
    module: Module,
    // pos[j][b]: index inside the target vertex space of `b * gen_j`
    pos: Vec<Vec<usize>>,
    // per vertex, the (summand, basis element) at each index
    entries: Vec<Vec<(usize, usize)>>,
}

impl Free {
    pub fn new(alg: &Arc<Algebra>, verts: Vec<usize>) -> Free {
        let r = alg.num_vertices();
        let parts: Vec<Module> = verts.iter().map(|&u| Module::projective(alg, u)).collect();
        let module = Module::sum(alg, &parts);
        let mut pos = vec![vec![usize::MAX; alg.dim()]; verts.len()];
        let mut entries = vec![Vec::new(); r];
        for t in 0..r {
            for (j, &u) in verts.iter().enumerate() {
                for &b in alg.between(t, u) {
                    pos[j][b] = entries[t].len();
                    entries[t].push((j, b));
                }
            }
        }
        Free { verts, module, pos, entries }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.verts.len()
    }

    pub fn is_zero(&self) -> bool {
        self.verts.is_empty()
    }

    /// Number of summands `P(v)`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.verts.iter().filter(|&&u| u == v).count()
    }

    /// `(summand, basis element)` for each coordinate of the vertex space at `t`.
    pub fn entries_at(&self, t: usize) -> &[(usize, usize)] {
        &self.entries[t]
    }

    /// Index of generator `j` inside its vertex space.
    pub fn generator_index(&self, j: usize) -> usize {
        let alg = self.module.alg();
        self.pos[j][alg.idempotent(self.verts[j])]
    }

    /// The unique homomorphism sending generator `j` to `images[j]`, a
    /// vector of `target` at vertex `u_j`.
    pub fn map_to(&self, target: &Module, images: &[Vec<u32>]) -> Morphism {
        let alg = self.module.alg();
        let f = alg.field();
        let r = alg.num_vertices();
        let blocks = (0..r)
            .map(|t| {
                let mut m = Mat::zeros(f, target.dims()[t], self.module.dims()[t]);
                for (col, &(j, b)) in self.entries[t].iter().enumerate() {
                    let y = target.action(b).mul_vec(&images[j]);
                    for (i, &c) in y.iter().enumerate() {
                        m.set(i, col, c);
                    }
                }
                m
            })
            .collect();
        Morphism::new_unchecked(&self.module, target, blocks)
    }

    /// Image of generator `j` under a morphism out of this free module.
    pub fn generator_image(&self, h: &Morphism, j: usize) -> Vec<u32> {
        h.block(self.verts[j]).col(self.generator_index(j))
    }

    /// Matrix of `Hom(self, n) -> Hom(a, n)`, `φ ↦ φ ∘ h`, for a morphism
    /// `h: a -> self` between free modules, in generator coordinates.
    pub fn pullback(&self, a: &Free, h: &Morphism, n: &Module) -> Mat {
        let f = n.field();
        let row_off = coordinate_offsets(a, n);
        let col_off = coordinate_offsets(self, n);
        let mut out = Mat::zeros(f, *row_off.last().unwrap(), *col_off.last().unwrap());
        for (jp, &up) in a.verts.iter().enumerate() {
            let y = a.generator_image(h, jp);
            for (idx, &c) in y.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (j, b) = self.entries[up][idx];
                let nb = n.action(b).scale(c);
                let mut block = out.block(row_off[jp], col_off[j], nb.rows(), nb.cols());
                block = block.add(&nb);
                out.set_block(row_off[jp], col_off[j], &block);
            }
        }
        out
    }

    /// Homomorphism `self -> n` with the given generator coordinates.
    pub fn map_from_coords(&self, n: &Module, x: &[u32]) -> Morphism {
        let off = coordinate_offsets(self, n);
        let images: Vec<Vec<u32>> = (0..self.rank()).map(|j| x[off[j]..off[j + 1]].to_vec()).collect();
        self.map_to(n, &images)
    }

    /// Generator coordinates of a homomorphism `self -> n`.
    pub fn coords_of(&self, h: &Morphism) -> Vec<u32> {
        (0..self.rank()).flat_map(|j| self.generator_image(h, j)).collect()
    }

    /// Lift `h: self -> X` through `q: Q -> X`, assuming the image of `h`
    /// lies in the image of `q`.
    pub fn lift(&self, h: &Morphism, q: &Morphism) -> Option<Morphism> {
        let mut images = Vec::with_capacity(self.rank());
        for (j, &u) in self.verts.iter().enumerate() {
            let y = self.generator_image(h, j);
            let x = q.block(u).solve_vec(&y)?;
            images.push(x);
        }
        Some(self.map_to(q.source(), &images))
    }
}

fn coordinate_offsets(free: &Free, n: &Module) -> Vec<usize> {
    let mut off = vec![0];
    for &u in &free.verts {
        off.push(off.last().unwrap() + n.dims()[u]);
    }
    off
}

/// Projective cover `P -> M`, generators chosen along a complement of the
/// radical.
pub fn projective_cover(m: &Module) -> (Free, Morphism) {
    let alg = m.alg();
    let (_, _, sect) = m.top();
    let mut verts = Vec::new();
    let mut images = Vec::new();
    for (v, s) in sect.iter().enumerate() {
        for j in 0..s.cols() {
            verts.push(v);
            images.push(s.col(j));
        }
    }
    let free = Free::new(alg, verts);
    let eps = free.map_to(m, &images);
    (free, eps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Status {
    /// The resolution stops: `P_n` is the last nonzero term.
    Finite(usize),
    /// Syzygy `Ω^to` is isomorphic to the earlier `Ω^from`.
    Periodic { from: usize, to: usize },
    /// Computed terms exhausted the cap without a conclusion.
    Truncated(usize),
}

/// Projective or injective dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomDim {
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn at_most(self, k: usize) -> bool {
        matches!(self, HomDim::Finite(d) if d <= k)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(d) => Some(d),
            HomDim::Infinite => None,
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(d) => write!(f, "{d}"),
            HomDim::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for HomDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(d) => s.serialize_u64(*d as u64),
            HomDim::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A minimal projective resolution
/// `... -> P_2 -> P_1 -> P_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: Module,
    terms: Vec<Free>,
    // maps[0] = augmentation P_0 -> M, maps[i] = d_i : P_i -> P_{i-1}
    maps: Vec<Morphism>,
    // syzygies[i] = Ω^{i+1} M with its inclusion into P_i
    syzygies: Vec<(Module, Morphism)>,
    status: Status,
}

impl Resolution {
    fn start(m: &Module) -> Resolution {
        Resolution { module: m.clone(), terms: Vec::new(), maps: Vec::new(), syzygies: Vec::new(), status: Status::Finite(0) }
    }

    fn done(&self) -> bool {
        self.module.is_zero() || self.syzygies.last().is_some_and(|s| s.0.is_zero())
    }

    fn step(&mut self) {
        let (k, inc) = match self.syzygies.last() {
            None => (self.module.clone(), Morphism::identity(&self.module)),
            Some((k, inc)) => (k.clone(), inc.clone()),
        };
        let (free, pi) = projective_cover(&k);
        let (ker, ker_inc) = pi.kernel();
        self.maps.push(inc.compose(&pi));
        self.terms.push(free);
        self.syzygies.push((ker, ker_inc));
    }

    /// Full minimal resolution, stopping at a zero syzygy, at a syzygy
    /// isomorphic to an earlier one, or at the step cap.
    pub fn compute(m: &Module, cfg: &Config) -> Result<Resolution> {
        let mut res = Resolution::start(m);
        let opts = cfg.decompose();
        while !res.done() {
            if res.terms.len() >= cfg.resolution_cap {
                res.status = Status::Truncated(res.terms.len());
                return Ok(res);
            }
            res.step();
            let n = res.syzygies.len();
            let new = &res.syzygies[n - 1].0;
            if new.is_zero() {
                break;
            }
            for j in 0..n - 1 {
                let old = &res.syzygies[j].0;
                if old.dims() == new.dims() && is_isomorphic(old, new, &opts)? {
                    res.status = Status::Periodic { from: j + 1, to: n };
                    return Ok(res);
                }
            }
        }
        res.status = Status::Finite(res.terms.len().saturating_sub(1));
        Ok(res)
    }

    /// Resolution with at least the terms `P_0, ..., P_len` (fewer only
    /// when it ends earlier).
    pub fn with_length(m: &Module, len: usize) -> Resolution {
        let mut res = Resolution::start(m);
        res.extend_to(len);
        res
    }

    /// Compute further terms until `P_len` exists or the resolution ends.
    pub fn extend_to(&mut self, len: usize) {
        while !self.done() && self.terms.len() <= len {
            self.step();
        }
        self.status = if self.done() {
            Status::Finite(self.terms.len().saturating_sub(1))
        } else {
            match self.status {
                Status::Periodic { .. } => self.status,
                _ => Status::Truncated(self.terms.len()),
            }
        };
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `P_i`, or `None` beyond the computed range.
    pub fn term(&self, i: usize) -> Option<&Free> {
        self.terms.get(i)
    }

    pub fn terms(&self) -> &[Free] {
        &self.terms
    }

    pub fn augmentation(&self) -> &Morphism {
        &self.maps[0]
    }

    /// `d_i : P_i -> P_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> &Morphism {
        &self.maps[i]
    }

    /// `Ω^i M` with its inclusion into `P_{i-1}`, for `i >= 1`.
    pub fn syzygy(&self, i: usize) -> &(Module, Morphism) {
        &self.syzygies[i - 1]
    }

    /// True when all terms up to `P_i` are known (possibly zero past the end).
    pub fn covers(&self, i: usize) -> bool {
        self.done() || self.terms.len() > i
    }

    /// `P_i` as a free module, zero past the end of a finite resolution.
    fn term_or_zero(&self, i: usize) -> Free {
        match self.terms.get(i) {
            Some(t) => t.clone(),
            None => {
                assert!(self.done(), "resolution term {i} not computed");
                Free::new(self.module.alg(), Vec::new())
            }
        }
    }

    pub fn proj_dim(&self) -> Result<HomDim> {
        match self.status {
            Status::Finite(n) => Ok(HomDim::Finite(n)),
            Status::Periodic { .. } => Ok(HomDim::Infinite),
            Status::Truncated(n) => Err(Error::Cap(format!("resolution not finished after {n} steps"))),
        }
    }

    /// Every differential maps into the radical of its target.
    pub fn is_minimal(&self) -> bool {
        (1..self.maps.len()).all(|i| {
            let rad = self.terms[i - 1].module().radical_bases();
            let d = &self.maps[i];
            (0..rad.len()).all(|v| {
                let f = rad[v].field();
                let both = Mat::hstack(f, rad[v].rows(), &[&rad[v], d.block(v)]);
                both.rank() == rad[v].cols()
            })
        }) && self.maps.first().is_none_or(|e| {
            // the augmentation induces an isomorphism on tops
            self.terms[0].rank() == self.module.top_dims().iter().sum::<usize>() && e.is_surjective()
        })
    }

    /// Exactness at every computed term.
    pub fn is_exact(&self) -> bool {
        if self.maps.is_empty() {
            return self.module.is_zero();
        }
        if !self.maps[0].is_surjective() {
            return false;
        }
        for i in 1..self.maps.len() {
            let comp = self.maps[i - 1].compose(&self.maps[i]);
            if !comp.is_zero() {
                return false;
            }
            let ker = self.terms[i - 1].module().dim() - self.maps[i - 1].rank();
            if self.maps[i].rank() != ker {
                return false;
            }
        }
        if let Status::Finite(n) = self.status {
            if !self.module.is_zero() && !self.maps[n].is_injective() {
                return false;
            }
        }
        true
    }
}

pub fn proj_dim(m: &Module, cfg: &Config) -> Result<HomDim> {
    Resolution::compute(m, cfg)?.proj_dim()
}

/// Injective dimension, computed as the projective dimension of the dual
/// over the opposite algebra.
pub fn inj_dim(m: &Module, cfg: &Config) -> Result<HomDim> {
    proj_dim(&m.dual(), cfg)
}

/// Global dimension: the largest projective dimension of a simple module.
pub fn global_dimension(alg: &Arc<Algebra>, cfg: &Config) -> Result<HomDim> {
    let mut best = HomDim::Finite(0);
    for v in 0..alg.num_vertices() {
        let d = proj_dim(&Module::simple(alg, v), cfg)?;
        best = best.max(d);
    }
    Ok(best)
}

/// Cohomology of a cochain complex at one degree, with chosen
/// representatives of a basis.
#[derive(Clone, Debug)]
pub struct Cohomology {
    cochains: usize,
    boundaries: Mat,
    reps: Mat,
    // [boundaries | reps] for coordinate extraction
    basis: Mat,
}

impl Cohomology {
    /// `ker out / im inc` where `inc: C^{i-1} -> C^i` and `out: C^i -> C^{i+1}`.
    pub fn new(inc: &Mat, out: &Mat) -> Cohomology {
        let f = out.field();
        let n = out.cols();
        let cycles = out.kernel_basis();
        let boundaries = inc.column_space();
        let both = Mat::hstack(f, n, &[&boundaries, &cycles]);
        let piv = both.independent_columns();
        let reps_idx: Vec<usize> =
            piv.iter().filter(|&&c| c >= boundaries.cols()).map(|&c| c - boundaries.cols()).collect();
        let reps = cycles.select_cols(&reps_idx);
        let basis = Mat::hstack(f, n, &[&boundaries, &reps]);
        Cohomology { cochains: n, boundaries, reps, basis }
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    pub fn cochain_dim(&self) -> usize {
        self.cochains
    }

    /// Representative cocycle of the `k`-th basis class.
    pub fn rep(&self, k: usize) -> Vec<u32> {
        self.reps.col(k)
    }

    pub fn reps(&self) -> &Mat {
        &self.reps
    }

    /// Coordinates of a cocycle's class.
    pub fn coords(&self, z: &[u32]) -> Vec<u32> {
        let x = self.basis.solve_vec(z).expect("vector is not a cocycle");
        x[self.boundaries.cols()..].to_vec()
    }

    /// Cocycle for the given class coordinates.
    pub fn cocycle(&self, coeffs: &[u32]) -> Vec<u32> {
        self.reps.mul_vec(coeffs)
    }
}

/// `Ext^i(M, N)` computed from a resolution of `M`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub target: Module,
    pub cohomology: Cohomology,
}

impl ExtGroup {
    pub fn dim(&self) -> usize {
        self.cohomology.dim()
    }
}

/// Coboundary `Hom(P_i, N) -> Hom(P_{i+1}, N)`.
fn coboundary(res: &Resolution, i: usize, n: &Module) -> Mat {
    let pi = res.term_or_zero(i);
    let pnext = res.term_or_zero(i + 1);
    if pnext.is_zero() || pi.is_zero() {
        let rows = coordinate_offsets(&pnext, n).last().copied().unwrap();
        let cols = coordinate_offsets(&pi, n).last().copied().unwrap();
        return Mat::zeros(n.field(), rows, cols);
    }
    pi.pullback(&pnext, res.differential(i + 1), n)
}

/// `Ext^i(M, N)` where `res` resolves `M` and covers degree `i + 1`.
pub fn ext_group(res: &Resolution, i: usize, n: &Module) -> ExtGroup {
    assert!(res.covers(i + 1), "resolution too short for Ext^{i}");
    let out = coboundary(res, i, n);
    let inc = if i == 0 {
        Mat::zeros(n.field(), out.cols(), 0)
    } else {
        coboundary(res, i - 1, n)
    };
    ExtGroup { degree: i, target: n.clone(), cohomology: Cohomology::new(&inc, &out) }
}

pub fn ext_dim_with(res: &Resolution, i: usize, n: &Module) -> usize {
    ext_group(res, i, n).dim()
}

pub fn ext_dim(i: usize, m: &Module, n: &Module) -> usize {
    let res = Resolution::with_length(m, i + 1);
    ext_dim_with(&res, i, n)
}

/// Lift of a morphism `g: M' -> M` to maps `g_i: P'_i -> P_i` between
/// resolutions, for `i = 0..=len` (as far as both resolutions reach).
pub fn lift_chain_map(g: &Morphism, src: &Resolution, dst: &Resolution, len: usize) -> Vec<Morphism> {
    let mut out: Vec<Morphism> = Vec::new();
    for i in 0..=len {
        let (Some(p), true) = (src.term(i), dst.term(i).is_some()) else {
            break;
        };
        let (h, through) = if i == 0 {
            (g.compose(src.augmentation()), dst.augmentation())
        } else {
            (out[i - 1].compose(src.differential(i)), dst.differential(i))
        };
        out.push(p.lift(&h, through).expect("lift through a resolution exists"));
    }
    out
}

fn zero_between(src: &Resolution, dst: &Resolution, i: usize) -> Morphism {
    Morphism::zero(src.term_or_zero(i).module(), dst.term_or_zero(i).module())
}

/// Matrix of `Ext^i(M, N) -> Ext^i(M', N)` induced by `g: M' -> M`, with
/// respect to the chosen class bases. `src` resolves `M'` and `dst` resolves
/// `M`; both must cover degree `i + 1`.
pub fn induced_ext_map(g: &Morphism, src: &Resolution, dst: &Resolution, i: usize, n: &Module) -> Mat {
    let lifts = lift_chain_map(g, src, dst, i);
    let gi = lifts.get(i).cloned().unwrap_or_else(|| zero_between(src, dst, i));
    let from = ext_group(dst, i, n);
    let to = ext_group(src, i, n);
    let f = n.field();
    let p_src = src.term_or_zero(i);
    let p_dst = dst.term_or_zero(i);
    let pull = if p_src.is_zero() || p_dst.is_zero() {
        Mat::zeros(f, coordinate_offsets(&p_src, n).last().copied().unwrap(), from.cohomology.cochain_dim())
    } else {
        p_dst.pullback(&p_src, &gi, n)
    };
    let cols: Vec<Vec<u32>> = (0..from.dim())
        .map(|k| to.cohomology.coords(&pull.mul_vec(&from.cohomology.rep(k))))
        .collect();
    Mat::from_columns(f, to.dim(), &cols)
}

/// A short exact sequence `0 -> A -> B -> C -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub mono: Morphism,
    pub epi: Morphism,
}

impl ShortExact {
    pub fn new(mono: Morphism, epi: Morphism) -> ShortExact {
        ShortExact { mono, epi }
    }

    pub fn left(&self) -> &Module {
        self.mono.source()
    }

    pub fn middle(&self) -> &Module {
        self.mono.target()
    }

    pub fn right(&self) -> &Module {
        self.epi.target()
    }

    pub fn is_exact(&self) -> bool {
        self.mono.is_injective()
            && self.epi.is_surjective()
            && self.epi.compose(&self.mono).is_zero()
            && self.mono.rank() + self.epi.rank() == self.middle().dim()
    }

    /// The map `χ: P_1 -> A` obtained by lifting the augmentation of `C`
    /// through `B`; its class in `Ext^1(C, A)` classifies the sequence.
    pub fn characteristic_map(&self, res_c: &Resolution) -> Morphism {
        let p0 = res_c.term(0).expect("C is nonzero");
        let h0 = p0.lift(res_c.augmentation(), &self.epi).expect("epimorphism lifts");
        let Some(p1) = res_c.term(1) else {
            return Morphism::zero(&Module::zero(self.left().alg()), self.left());
        };
        let into_b = h0.compose(res_c.differential(1));
        p1.lift(&into_b, &self.mono).expect("lands in the kernel")
    }

    /// Class of the sequence in `Ext^1(C, A)`, in the class basis chosen by
    /// `ext_group(res_c, 1, A)`.
    pub fn class(&self, res_c: &Resolution) -> Vec<u32> {
        let ext = ext_group(res_c, 1, self.left());
        if ext.dim() == 0 {
            return Vec::new();
        }
        let chi = self.characteristic_map(res_c);
        let coords = res_c.term(1).unwrap().coords_of(&chi);
        ext.cohomology.coords(&coords)
    }

    /// Connecting map `Ext^i(A, N) -> Ext^{i+1}(C, N)` in the class bases of
    /// `ext_group(res_a, i, N)` and `ext_group(res_c, i + 1, N)`.
    pub fn connecting_map(&self, res_a: &Resolution, res_c: &Resolution, i: usize, n: &Module) -> Mat {
        let f = n.field();
        let from = ext_group(res_a, i, n);
        let to = ext_group(res_c, i + 1, n);
        if from.dim() == 0 || to.dim() == 0 {
            return Mat::zeros(f, to.dim(), from.dim());
        }
        // lift χ: P_1(C) -> A to maps P_{k+1}(C) -> Q_k(A)
        let chi = self.characteristic_map(res_c);
        let mut maps: Vec<Morphism> = Vec::new();
        for k in 0..=i {
            let Some(p) = res_c.term(k + 1) else { break };
            if res_a.term(k).is_none() {
                break;
            }
            let (h, through) = if k == 0 {
                (chi.clone(), res_a.augmentation())
            } else {
                (maps[k - 1].compose(res_c.differential(k + 1)), res_a.differential(k))
            };
            maps.push(p.lift(&h, through).expect("lift along the resolution"));
        }
        let Some(chi_i) = maps.get(i) else {
            return Mat::zeros(f, to.dim(), from.dim());
        };
        let q = res_a.term(i).unwrap();
        let p = res_c.term(i + 1).unwrap();
        let pull = q.pullback(p, chi_i, n);
        let cols: Vec<Vec<u32>> =
            (0..from.dim()).map(|k| to.cohomology.coords(&pull.mul_vec(&from.cohomology.rep(k)))).collect();
        Mat::from_columns(f, to.dim(), &cols)
    }
}

/// The extension `0 -> M -> E -> N -> 0` whose class in `Ext^1(N, M)` has
/// the given coordinates (in the basis of `ext_group(res_n, 1, M)`).
pub fn extension_from_cocycle(res_n: &Resolution, m: &Module, coeffs: &[u32]) -> ShortExact {
    let alg = m.alg().clone();
    let n = res_n.module();
    let ext = ext_group(res_n, 1, m);
    assert_eq!(coeffs.len(), ext.dim(), "one coefficient per Ext basis element");
    let p0 = res_n.term(0).expect("N is nonzero");
    if ext.dim() == 0 || coeffs.iter().all(|&c| c == 0) {
        let (_, inj, proj) = Module::direct_sum(&alg, &[m.clone(), n.clone()]);
        return ShortExact::new(inj[0].clone(), proj[1].clone());
    }
    let p1 = res_n.term(1).unwrap();
    let phi = p1.map_from_coords(m, &ext.cohomology.cocycle(coeffs));
    // E = coker(P_1 -> M ⊕ P_0, x ↦ (φ x, -d_1 x))
    let (_, inj, proj) = Module::direct_sum(&alg, &[m.clone(), p0.module().clone()]);
    let minus_d = res_n.differential(1).scale(alg.field().neg(1));
    let into = inj[0].compose(&phi).add(&inj[1].compose(&minus_d));
    let (e, pi) = into.cokernel();
    let mono = pi.compose(&inj[0]);
    // E -> N induced by (0, ε) on M ⊕ P_0
    let eps = res_n.augmentation().compose(&proj[1]);
    let epi_blocks: Vec<Mat> = (0..alg.num_vertices())
        .map(|v| {
            let l = pi.block(v).transpose().left_inverse().transpose();
            eps.block(v).mul(&l)
        })
        .collect();
    let epi = Morphism::new_unchecked(&e, n, epi_blocks);
    ShortExact::new(mono, epi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::algebra_from_text;

    const EX1: &str = "algebra EX1 field 101\nvertices 1,2,3\narrow gamma : 1 -> 2\narrow alpha : 1 -> 3\narrow beta : 3 -> 2\nrel alpha*beta\n";
    const A3: &str = "algebra R field 101\nvertices 1,2,3\narrow a : 3 -> 2\narrow b : 2 -> 1\n";

    #[test]
    fn triangle_dimensions() {
        let a = algebra_from_text(EX1).unwrap();
        let cfg = Config::default();
        assert_eq!(global_dimension(&a, &cfg).unwrap(), HomDim::Finite(2));
        let s1 = Module::simple(&a, 0);
        let res = Resolution::compute(&s1, &cfg).unwrap();
        assert!(res.is_exact() && res.is_minimal());
        assert_eq!(res.term(1).unwrap().verts(), &[1, 2]);
        assert_eq!(res.term(2).unwrap().verts(), &[1]);
        // dim Ext^i(S_a, S_b) = multiplicity of P(b) in P_i
        for i in 0..3 {
            for b in 0..3 {
                let s = Module::simple(&a, b);
                assert_eq!(ext_dim_with(&res, i, &s), res.term(i).unwrap().multiplicity(b));
            }
        }
    }

    #[test]
    fn projectives_and_injectives() {
        let a = algebra_from_text(EX1).unwrap();
        let cfg = Config::default();
        for v in 0..3 {
            assert_eq!(proj_dim(&Module::projective(&a, v), &cfg).unwrap(), HomDim::Finite(0));
            assert_eq!(inj_dim(&Module::injective(&a, v), &cfg).unwrap(), HomDim::Finite(0));
        }
    }

    #[test]
    fn periodic_syzygies() {
        // one loop x with x^2 = 0: the simple is its own syzygy
        let a = algebra_from_text("algebra D field 5\nvertices 1\narrow x : 1 -> 1\nrel x*x\n").unwrap();
        let s = Module::simple(&a, 0);
        let res = Resolution::compute(&s, &Config::default()).unwrap();
        assert_eq!(res.status(), Status::Periodic { from: 1, to: 2 });
        assert_eq!(res.proj_dim().unwrap(), HomDim::Infinite);
        // Ext^i(S, S) is one-dimensional in every degree
        let res = Resolution::with_length(&s, 5);
        for i in 0..5 {
            assert_eq!(ext_dim_with(&res, i, &s), 1);
        }
    }

    #[test]
    fn ext_zero_is_hom() {
        let a = algebra_from_text(EX1).unwrap();
        let mods: Vec<Module> = (0..3).flat_map(|v| [Module::simple(&a, v), Module::injective(&a, v)]).collect();
        for m in &mods {
            for n in &mods {
                assert_eq!(ext_dim(0, m, n), crate::module::hom_dim(m, n));
            }
        }
    }

    #[test]
    fn extension_round_trip_a3() {
        let a = algebra_from_text(A3).unwrap();
        let s3 = Module::simple(&a, 2);
        let s2 = Module::simple(&a, 1);
        let res = Resolution::with_length(&s3, 2);
        let ext = ext_group(&res, 1, &s2);
        assert_eq!(ext.dim(), 1);
        let ses = extension_from_cocycle(&res, &s2, &[3]);
        assert!(ses.is_exact());
        assert!(ses.mono.is_homomorphism() && ses.epi.is_homomorphism());
        assert_eq!(ses.middle().dims(), &[0, 1, 1]);
        assert_eq!(ses.class(&res), vec![3]);
        let split = extension_from_cocycle(&res, &s2, &[0]);
        assert_eq!(split.class(&res), vec![0]);
    }

    #[test]
    fn identity_induces_identity() {
        let a = algebra_from_text(EX1).unwrap();
        let s1 = Module::simple(&a, 0);
        let res = Resolution::with_length(&s1, 3);
        let s2 = Module::simple(&a, 1);
        let m = induced_ext_map(&Morphism::identity(&s1), &res, &res, 2, &s2);
        assert!(m.is_identity());
    }

    #[test]
    fn connecting_map_of_cover() {
        // 0 -> S_2 -> P(3) -> S_3 -> 0 over 3 -> 2 -> 1: δ: Hom(S_2, S_2) -> Ext^1(S_3, S_2) is iso
        let a = algebra_from_text(A3).unwrap();
        let p3 = Module::projective(&a, 2);
        let (rad, inc) = p3.radical();
        let (s3, pi, _) = p3.top();
        let ses = ShortExact::new(inc, pi);
        assert!(ses.is_exact());
        let ra = Resolution::with_length(&rad, 3);
        let rc = Resolution::with_length(&s3, 3);
        let s2 = Module::simple(&a, 1);
        let d0 = ses.connecting_map(&ra, &rc, 0, &s2);
        assert_eq!((d0.rows(), d0.cols()), (1, 1));
        assert_eq!(d0.rank(), 1);
        // split sequence gives zero
        let (_, inj, proj) = Module::direct_sum(&a, &[s2.clone(), s3.clone()]);
        let split = ShortExact::new(inj[0].clone(), proj[1].clone());
        let rs2 = Resolution::with_length(&s2, 3);
        assert!(split.connecting_map(&rs2, &rc, 0, &s2).is_zero());
    }
}
