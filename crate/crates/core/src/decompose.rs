//! Krull–Schmidt decomposition and isomorphism tests.
//!
//! An endomorphism with two distinct eigenvalues splits a module by Fitting's
//! lemma into `ker (f - λ)^d ⊕ im (f - λ)^d`. When every basis endomorphism
//! has a single eigenvalue, the shifted basis elements `f_i - λ_i` are tested
//! for spanning a nilpotent ideal, which certifies a local endomorphism ring.
//! Failing that, seeded random endomorphisms are tried before giving up.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{poly, Mat};
use crate::module::{hom_basis, Morphism, Module};

pub const DEFAULT_SEED: u64 = 0xA1;
pub const DEFAULT_ROUNDS: usize = 64;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub rounds: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: DEFAULT_SEED, rounds: DEFAULT_ROUNDS }
    }
}

/// An indecomposable direct summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

enum Split {
    Local,
    Into(Morphism),
}

/// Eigenvalues of an endomorphism, with multiplicities, or `None` when the
/// characteristic polynomial does not split.
fn eigenvalues(f: &Morphism) -> Option<Vec<(u32, usize)>> {
    let field = f.source().field();
    let mut all: Vec<(u32, usize)> = Vec::new();
    for b in f.blocks() {
        if b.rows() == 0 {
            continue;
        }
        let roots = poly::roots(field, &b.charpoly());
        if roots.iter().map(|r| r.1).sum::<usize>() != b.rows() {
            return None;
        }
        for (r, k) in roots {
            match all.iter_mut().find(|x| x.0 == r) {
                Some(x) => x.1 += k,
                None => all.push((r, k)),
            }
        }
    }
    all.sort_unstable();
    Some(all)
}

fn flat(f: &Morphism) -> Vec<u32> {
    f.blocks().iter().flat_map(|b| b.data().iter().copied()).collect()
}

fn shifted(f: &Morphism, lambda: u32) -> Morphism {
    let field = f.source().field();
    f.sub(&Morphism::identity(f.source()).scale(lambda % field.p()))
}

/// Look for an endomorphism with at least two eigenvalues, or certify that
/// the endomorphism ring is local.
fn find_split(m: &Module, opts: &Options) -> Result<Split> {
    let field = m.field();
    let end = hom_basis(m, m);
    let mut nilpotents: Vec<Morphism> = Vec::new();
    let mut irregular = false;
    for f in &end {
        match eigenvalues(f) {
            Some(ev) if ev.len() >= 2 => return Ok(Split::Into(shifted(f, ev[0].0))),
            Some(ev) => nilpotents.push(shifted(f, ev[0].0)),
            None => irregular = true,
        }
    }
    if !irregular && spans_nilpotent_ideal(m, &nilpotents) {
        return Ok(Split::Local);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.rounds {
        let coeffs: Vec<u32> = end.iter().map(|_| rng.gen_range(0..field.p())).collect();
        let f = Morphism::combination(m, m, &end, &coeffs);
        if let Some(ev) = eigenvalues(&f) {
            if ev.len() >= 2 {
                return Ok(Split::Into(shifted(&f, ev[0].0)));
            }
        }
    }
    Err(Error::Inconclusive(format!(
        "no splitting endomorphism of a module with dimension vector {} after {} rounds",
        m.dimvec_string(),
        opts.rounds
    )))
}

/// True when the span of the given endomorphisms is closed under composition
/// and some power of it vanishes.
fn spans_nilpotent_ideal(m: &Module, gens: &[Morphism]) -> bool {
    let field = m.field();
    let len = flat(&Morphism::identity(m)).len();
    let span = |maps: &[Morphism]| -> Mat {
        let cols: Vec<Vec<u32>> = maps.iter().map(flat).collect();
        Mat::from_columns(field, len, &cols)
    };
    let base = span(gens);
    let rank = base.rank();
    let basis: Vec<Morphism> = base.independent_columns().into_iter().map(|j| gens[j].clone()).collect();
    // closure
    for x in &basis {
        for y in &basis {
            let z = x.compose(y);
            if z.is_zero() {
                continue;
            }
            let mut cols: Vec<Vec<u32>> = basis.iter().map(flat).collect();
            cols.push(flat(&z));
            if Mat::from_columns(field, len, &cols).rank() > rank {
                return false;
            }
        }
    }
    // nilpotency: powers of the span shrink to zero
    let mut power = basis.clone();
    for _ in 0..=m.dim() {
        if power.is_empty() {
            return true;
        }
        let mut next: Vec<Morphism> = Vec::new();
        for x in &power {
            for y in &basis {
                let z = x.compose(y);
                if !z.is_zero() {
                    next.push(z);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        let keep = span(&next).independent_columns();
        // the powers form a descending chain; a stable nonzero power means
        // the span is not nilpotent
        if keep.len() >= power.len() {
            return false;
        }
        power = keep.into_iter().map(|j| next[j].clone()).collect();
    }
    power.is_empty()
}

/// Cheap sufficient conditions for indecomposability: a simple top or a
/// simple socle.
fn obviously_indecomposable(m: &Module) -> bool {
    m.dim() == 1 || m.top_dims().iter().sum::<usize>() == 1 || m.socle_dims().iter().sum::<usize>() == 1
}

pub fn is_indecomposable(m: &Module, opts: &Options) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    if obviously_indecomposable(m) {
        return Ok(true);
    }
    Ok(matches!(find_split(m, opts)?, Split::Local))
}

/// Decompose into indecomposable summands with split inclusions and
/// projections.
pub fn decompose_summands(m: &Module, opts: &Options) -> Result<Vec<Summand>> {
    let mut out = Vec::new();
    let mut stack = vec![Summand {
        module: m.clone(),
        inclusion: Morphism::identity(m),
        projection: Morphism::identity(m),
    }];
    while let Some(s) = stack.pop() {
        if s.module.is_zero() {
            continue;
        }
        if obviously_indecomposable(&s.module) {
            out.push(s);
            continue;
        }
        match find_split(&s.module, opts)? {
            Split::Local => out.push(s),
            Split::Into(g) => {
                let field = s.module.field();
                let g = (1..s.module.dim()).fold(g.clone(), |acc, _| acc.compose(&g));
                let (_, ker_inc) = g.kernel();
                let (_, _, im_inc) = g.image();
                let mut pk = Vec::new();
                let mut pi = Vec::new();
                for v in 0..s.module.dims().len() {
                    let (kb, ib) = (ker_inc.block(v), im_inc.block(v));
                    let q = Mat::hstack(field, s.module.dims()[v], &[kb, ib]);
                    let inv = q.inverse().expect("Fitting decomposition is direct");
                    pk.push(inv.block(0, 0, kb.cols(), q.cols()));
                    pi.push(inv.block(kb.cols(), 0, ib.cols(), q.cols()));
                }
                let kp = Morphism::new_unchecked(&s.module, ker_inc.source(), pk);
                let ip = Morphism::new_unchecked(&s.module, im_inc.source(), pi);
                for (inc, proj) in [(ker_inc, kp), (im_inc, ip)] {
                    stack.push(Summand {
                        module: inc.source().clone(),
                        inclusion: s.inclusion.compose(&inc),
                        projection: proj.compose(&s.projection),
                    });
                }
            }
        }
    }
    // deterministic order: by dimension vector, largest first
    out.sort_by(|a, b| b.module.dim().cmp(&a.module.dim()).then_with(|| b.module.dims().cmp(a.module.dims())));
    Ok(out)
}

/// Isomorphism classes of indecomposable summands with multiplicities.
pub fn decompose(m: &Module, opts: &Options) -> Result<Vec<(Module, usize)>> {
    let mut classes: Vec<(Module, usize)> = Vec::new();
    for s in decompose_summands(m, opts)? {
        let mut found = false;
        for c in classes.iter_mut() {
            if indecomposables_isomorphic(&c.0, &s.module) {
                c.1 += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((s.module, 1));
        }
    }
    Ok(classes)
}

/// Exact isomorphism test when `m` is indecomposable: the endomorphism ring
/// is local, so some member of any basis of `Hom(m, n)` is invertible iff
/// `m` and `n` are isomorphic.
pub fn indecomposables_isomorphic(m: &Module, n: &Module) -> bool {
    iso_between_indecomposables(m, n).is_some()
}

pub fn iso_between_indecomposables(m: &Module, n: &Module) -> Option<Morphism> {
    if m.dims() != n.dims() {
        return None;
    }
    if m.same(n) {
        return Some(Morphism::identity(m));
    }
    hom_basis(m, n).into_iter().find(|f| f.is_iso())
}

pub fn is_isomorphic(m: &Module, n: &Module, opts: &Options) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() || m.same(n) {
        return Ok(true);
    }
    let field = m.field();
    let hom = hom_basis(m, n);
    if hom.is_empty() {
        return Ok(false);
    }
    if hom.iter().any(|f| f.is_iso()) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..4 {
        let coeffs: Vec<u32> = hom.iter().map(|_| rng.gen_range(0..field.p())).collect();
        if Morphism::combination(m, n, &hom, &coeffs).is_iso() {
            return Ok(true);
        }
    }
    if is_indecomposable(m, opts)? {
        return Ok(false);
    }
    let a = decompose(m, opts)?;
    let b = decompose(n, opts)?;
    Ok(same_multiset(&a, &b))
}

/// Compare two lists of indecomposable classes with multiplicities.
pub fn same_multiset(a: &[(Module, usize)], b: &[(Module, usize)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for (x, k) in a {
        for (j, (y, l)) in b.iter().enumerate() {
            if !used[j] && k == l && indecomposables_isomorphic(x, y) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
