//! Split basic finite-dimensional algebras given by structure constants.
//!
//! Every basis element `b` is homogeneous: `b = e_t b e_s` for a target vertex
//! `t` and a source vertex `s`. A basis element from `s` to `t` acts on a left
//! module as a linear map `M_s -> M_t`. The basis is the union of the
//! primitive idempotents `e_v` and a basis of the radical.

use std::sync::{Arc, OnceLock, Weak};

use crate::dsl::QuiverSpec;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Sparse vector of basis coefficients.
pub type Elem = Vec<(usize, u32)>;

/// Presentation data kept for algebras built from a bound quiver.
#[derive(Clone, Debug)]
pub struct QuiverData {
    pub spec: QuiverSpec,
    /// Arrow sequence (traversal order) representing each basis element.
    pub paths: Vec<Vec<usize>>,
    /// Basis index of each arrow.
    pub arrow_basis: Vec<usize>,
}

#[derive(Debug)]
pub struct Algebra {
    id: String,
    field: Field,
    vertices: Vec<String>,
    labels: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    idempotents: Vec<usize>,
    radical: Vec<usize>,
    table: Vec<Elem>,
    generators: Vec<usize>,
    // basis elements grouped by (target, source)
    between: Vec<Vec<usize>>,
    quiver: Option<QuiverData>,
    op_cache: OnceLock<Arc<Algebra>>,
    op_of: Option<Weak<Algebra>>,
}

/// Raw ingredients of an algebra, validated by [`Algebra::new`].
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub id: String,
    pub field: Field,
    pub vertices: Vec<String>,
    pub labels: Vec<String>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// Basis index of `e_v` for each vertex `v`.
    pub idempotents: Vec<usize>,
    /// `table[i * dim + j]` is the product `b_i * b_j`.
    pub table: Vec<Elem>,
}

impl Algebra {
    pub fn new(data: AlgebraData, quiver: Option<QuiverData>) -> Result<Algebra> {
        let AlgebraData { id, field, vertices, labels, source, target, idempotents, table } = data;
        let d = labels.len();
        let r = vertices.len();
        if source.len() != d || target.len() != d || table.len() != d * d {
            return Err(Error::input("algebra data has inconsistent lengths"));
        }
        if idempotents.len() != r {
            return Err(Error::input("one idempotent per vertex required"));
        }
        if source.iter().chain(&target).any(|&v| v >= r) {
            return Err(Error::input("basis element attached to an unknown vertex"));
        }
        let mut is_idem = vec![false; d];
        for (v, &e) in idempotents.iter().enumerate() {
            if e >= d || is_idem[e] || source[e] != v || target[e] != v {
                return Err(Error::input(format!("bad idempotent for vertex {}", vertices[v])));
            }
            is_idem[e] = true;
        }
        let radical: Vec<usize> = (0..d).filter(|&i| !is_idem[i]).collect();
        let mut between = vec![Vec::new(); r * r];
        for i in 0..d {
            between[target[i] * r + source[i]].push(i);
        }
        let mut alg = Algebra {
            id,
            field,
            vertices,
            labels,
            source,
            target,
            idempotents,
            radical,
            table,
            generators: Vec::new(),
            between,
            quiver,
            op_cache: OnceLock::new(),
            op_of: None,
        };
        alg.check_idempotents()?;
        alg.check_homogeneous()?;
        alg.generators = alg.compute_generators();
        Ok(alg)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn source(&self, b: usize) -> usize {
        self.source[b]
    }

    pub fn target(&self, b: usize) -> usize {
        self.target[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn radical(&self) -> &[usize] {
        &self.radical
    }

    pub fn is_idempotent(&self, b: usize) -> bool {
        self.idempotents[self.source[b]] == b
    }

    /// Radical basis elements whose span, together with the square of the
    /// radical, is the whole radical. For quiver algebras these are the arrows.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Basis elements in `e_t A e_s`.
    pub fn between(&self, t: usize, s: usize) -> &[usize] {
        &self.between[t * self.num_vertices() + s]
    }

    pub fn quiver(&self) -> Option<&QuiverData> {
        self.quiver.as_ref()
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.table[i * self.dim() + j]
    }

    /// Product of two dense elements.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.mul_basis(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, b: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[b] = 1;
        v
    }

    /// Total number of basis elements of `e_t A e_s`, the Cartan matrix entry.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let r = self.num_vertices();
        (0..r).map(|t| (0..r).map(|s| self.between(t, s).len()).collect()).collect()
    }

    fn check_homogeneous(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul_basis(i, j);
                if self.source[i] != self.target[j] {
                    if !prod.is_empty() {
                        return Err(Error::input("product of non-composable basis elements is nonzero"));
                    }
                    continue;
                }
                for &(k, c) in prod {
                    if c != 0 && (self.target[k] != self.target[i] || self.source[k] != self.source[j]) {
                        return Err(Error::input("structure constants are not homogeneous"));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_idempotents(&self) -> Result<()> {
        let d = self.dim();
        for (v, &e) in self.idempotents.iter().enumerate() {
            for b in 0..d {
                let left = self.mul_basis(e, b);
                let want_left = self.target[b] == v;
                let right = self.mul_basis(b, e);
                let want_right = self.source[b] == v;
                let is_b = |x: &[(usize, u32)]| x.len() == 1 && x[0] == (b, 1);
                if want_left != is_b(left) || (!want_left && !left.is_empty()) {
                    return Err(Error::input(format!("e_{} does not act as an idempotent", self.vertices[v])));
                }
                if want_right != is_b(right) || (!want_right && !right.is_empty()) {
                    return Err(Error::input(format!("e_{} does not act as an idempotent", self.vertices[v])));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive associativity check on basis triples.
    pub fn check_associativity(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.source[i] != self.target[j] {
                    continue;
                }
                let ij = self.mul(&self.unit_vector(i), &self.unit_vector(j));
                for k in 0..d {
                    if self.source[j] != self.target[k] {
                        continue;
                    }
                    let left = self.mul(&ij, &self.unit_vector(k));
                    let jk = self.mul(&self.unit_vector(j), &self.unit_vector(k));
                    let right = self.mul(&self.unit_vector(i), &jk);
                    if left != right {
                        return Err(Error::input(format!(
                            "not associative on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that the radical basis spans a nilpotent ideal: some power of
    /// it vanishes.
    pub fn check_radical_nilpotent(&self) -> Result<()> {
        let f = self.field;
        let d = self.dim();
        let mut current: Vec<Vec<u32>> = self.radical.iter().map(|&b| self.unit_vector(b)).collect();
        for _ in 0..=d {
            if current.is_empty() {
                return Ok(());
            }
            let mut next = Vec::new();
            for x in &current {
                for &r in &self.radical {
                    let y = self.mul(x, &self.unit_vector(r));
                    if y.iter().any(|&c| c != 0) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                return Ok(());
            }
            let m = Mat::from_columns(f, d, &next);
            current = m.column_space().columns();
        }
        Err(Error::input("radical basis does not span a nilpotent ideal"))
    }

    fn compute_generators(&self) -> Vec<usize> {
        let f = self.field;
        let r = self.num_vertices();
        let mut gens = Vec::new();
        for t in 0..r {
            for s in 0..r {
                let block: Vec<usize> =
                    self.between(t, s).iter().copied().filter(|&b| !self.is_idempotent(b)).collect();
                if block.is_empty() {
                    continue;
                }
                let pos = |k: usize| block.iter().position(|&b| b == k);
                // rad^2 inside e_t A e_s
                let mut cols: Vec<Vec<u32>> = Vec::new();
                for u in 0..r {
                    for &i in self.between(t, u) {
                        if self.is_idempotent(i) {
                            continue;
                        }
                        for &j in self.between(u, s) {
                            if self.is_idempotent(j) {
                                continue;
                            }
                            let mut v = vec![0u32; block.len()];
                            for &(k, c) in self.mul_basis(i, j) {
                                if let Some(pk) = pos(k) {
                                    v[pk] = f.add(v[pk], c);
                                }
                            }
                            if v.iter().any(|&c| c != 0) {
                                cols.push(v);
                            }
                        }
                    }
                }
                let mut rank = Mat::from_columns(f, block.len(), &cols).rank();
                for (idx, &b) in block.iter().enumerate() {
                    let mut v = vec![0u32; block.len()];
                    v[idx] = 1;
                    cols.push(v);
                    let nr = Mat::from_columns(f, block.len(), &cols).rank();
                    if nr > rank {
                        gens.push(b);
                        rank = nr;
                    } else {
                        cols.pop();
                    }
                }
            }
        }
        gens.sort_unstable();
        gens
    }

    /// The opposite algebra: same basis, `b_i *op b_j = b_j * b_i`. The result
    /// is cached, and the opposite of an opposite is the original algebra.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.op_of.as_ref().and_then(Weak::upgrade) {
            return orig;
        }
        self.op_cache
            .get_or_init(|| {
                let d = self.dim();
                let mut table = vec![Vec::new(); d * d];
                for i in 0..d {
                    for j in 0..d {
                        table[i * d + j] = self.table[j * d + i].clone();
                    }
                }
                let id = match self.id.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.id),
                };
                let mut op = Algebra::new(
                    AlgebraData {
                        id,
                        field: self.field,
                        vertices: self.vertices.clone(),
                        labels: self.labels.clone(),
                        source: self.target.clone(),
                        target: self.source.clone(),
                        idempotents: self.idempotents.clone(),
                        table,
                    },
                    None,
                )
                .expect("opposite of a valid algebra is valid");
                op.op_of = Some(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    /// Structural equality of bases and structure constants.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field
            && self.vertices.len() == other.vertices.len()
            && self.source == other.source
            && self.target == other.target
            && self.idempotents == other.idempotents
            && self.table == other.table
    }

    pub fn to_data(&self) -> AlgebraData {
        AlgebraData {
            id: self.id.clone(),
            field: self.field,
            vertices: self.vertices.clone(),
            labels: self.labels.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            idempotents: self.idempotents.clone(),
            table: self.table.clone(),
        }
    }
}

/// True when two algebra handles denote the same algebra.
pub fn compatible(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}
