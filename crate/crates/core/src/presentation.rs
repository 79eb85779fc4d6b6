//! Compile a bound quiver into structure constants.
//!
//! Paths are arrow sequences in traversal order. The relation ideal is
//! computed by linear closure: all products `q * r * p` of a relation with
//! paths on either side, truncated at a length cap `L`, reduced by row
//! echelon form with long paths first so that the surviving basis consists of
//! the shortest possible paths.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraData, QuiverData};
use crate::dsl::{self, QuiverSpec};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Default cap on path length when closing the relation ideal.
pub const DEFAULT_LENGTH_CAP: usize = 64;

/// Upper bound on the number of paths considered before giving up.
const PATH_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn end(&self, spec: &QuiverSpec) -> usize {
        match self.arrows.last() {
            Some(&a) => spec.arrows[a].target,
            None => self.start,
        }
    }
}

/// All paths of length at most `max_len`, grouped by length.
fn paths_up_to(spec: &QuiverSpec, max_len: usize) -> Result<Vec<Vec<Path>>> {
    let mut by_len: Vec<Vec<Path>> = vec![(0..spec.vertices.len())
        .map(|v| Path { start: v, arrows: Vec::new() })
        .collect()];
    let mut total = by_len[0].len();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in by_len.last().unwrap() {
            let end = p.end(spec);
            for (a, arrow) in spec.arrows.iter().enumerate() {
                if arrow.source == end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { start: p.start, arrows });
                }
            }
        }
        total += next.len();
        if total > PATH_LIMIT {
            return Err(Error::Cap(format!("more than {PATH_LIMIT} paths")));
        }
        let done = next.is_empty();
        by_len.push(next);
        if done {
            break;
        }
    }
    Ok(by_len)
}

struct Reduction {
    max_len: usize,
    // normal form of every path of length <= max_len, as basis coefficients
    normal: HashMap<Path, Vec<(usize, u32)>>,
    basis: Vec<Path>,
}

fn close_ideal(spec: &QuiverSpec, field: Field, cap: usize) -> Result<Reduction> {
    let min_len = spec
        .relations
        .iter()
        .flat_map(|r| r.terms.iter().map(|t| t.1.len()))
        .max()
        .unwrap_or(2)
        .max(2);
    for len in min_len..=cap {
        if let Some(red) = try_length(spec, field, len)? {
            return Ok(red);
        }
    }
    Err(Error::NotAdmissible(cap))
}

fn try_length(spec: &QuiverSpec, field: Field, len: usize) -> Result<Option<Reduction>> {
    let by_len = paths_up_to(spec, len)?;
    // columns: paths of length >= 2, longest first
    let mut cols: Vec<&Path> = Vec::new();
    for l in (2..by_len.len()).rev() {
        cols.extend(by_len[l].iter());
    }
    let index: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();

    let mut ending_at: Vec<Vec<&Path>> = vec![Vec::new(); spec.vertices.len()];
    let mut starting_at: Vec<Vec<&Path>> = vec![Vec::new(); spec.vertices.len()];
    for p in by_len.iter().flatten() {
        ending_at[p.end(spec)].push(p);
        starting_at[p.start].push(p);
    }

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in &spec.relations {
        let (_, first) = &rel.terms[0];
        let s = spec.arrows[first[0]].source;
        let t = spec.arrows[*first.last().unwrap()].target;
        let shortest = rel.terms.iter().map(|t| t.1.len()).min().unwrap();
        for q in &ending_at[s] {
            for p in &starting_at[t] {
                if q.arrows.len() + shortest + p.arrows.len() > len {
                    continue;
                }
                let mut row = vec![0u32; cols.len()];
                for (c, term) in &rel.terms {
                    let mut arrows = q.arrows.clone();
                    arrows.extend_from_slice(term);
                    arrows.extend_from_slice(&p.arrows);
                    if arrows.len() > len {
                        continue;
                    }
                    let path = Path { start: q.start, arrows };
                    let j = index[&path];
                    row[j] = field.add(row[j], field.from_i64(*c));
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let m = Mat::from_fn(field, rows.len(), cols.len(), |i, j| rows[i][j]);
    let rref = m.rref();
    let mut pivot_row = vec![None; cols.len()];
    for (r, &c) in rref.pivots.iter().enumerate() {
        pivot_row[c] = Some(r);
    }
    // every path of the top length must lie in the ideal
    let top = by_len.get(len).map(|v| v.len()).unwrap_or(0);
    if by_len.len() > len && (0..top).any(|j| pivot_row[j].is_none()) {
        return Ok(None);
    }

    // basis: trivial paths, arrows, then surviving longer paths by length
    let mut basis: Vec<Path> = Vec::new();
    basis.extend(by_len[0].iter().cloned());
    if by_len.len() > 1 {
        basis.extend(by_len[1].iter().cloned());
    }
    let mut survivors: Vec<usize> = (0..cols.len()).filter(|&j| pivot_row[j].is_none()).collect();
    survivors.sort_by(|&a, &b| cols[a].arrows.len().cmp(&cols[b].arrows.len()).then(cols[a].cmp(cols[b])));
    basis.extend(survivors.iter().map(|&j| cols[j].clone()));
    let basis_index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut normal: HashMap<Path, Vec<(usize, u32)>> = HashMap::new();
    for p in by_len.iter().flatten() {
        let nf = if let Some(&b) = basis_index.get(p) {
            vec![(b, 1)]
        } else {
            let j = index[p];
            let r = pivot_row[j].expect("non-basis path is a pivot");
            let mut v = Vec::new();
            for (k, &x) in rref.reduced.row(r).iter().enumerate() {
                if k != j && x != 0 {
                    v.push((basis_index[cols[k]], field.neg(x)));
                }
            }
            v
        };
        normal.insert(p.clone(), nf);
    }
    let basis_len = basis.len();
    let red = Reduction { max_len: len, normal, basis };
    debug_assert_eq!(red.basis.len(), basis_len);
    Ok(Some(red))
}

fn path_label(spec: &QuiverSpec, p: &Path) -> String {
    if p.arrows.is_empty() {
        format!("e{}", spec.vertices[p.start])
    } else {
        p.arrows.iter().map(|&a| spec.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// Build the algebra of a bound quiver with the default length cap.
pub fn build_algebra(spec: &QuiverSpec) -> Result<Arc<Algebra>> {
    build_algebra_with_cap(spec, DEFAULT_LENGTH_CAP)
}

pub fn build_algebra_with_cap(spec: &QuiverSpec, cap: usize) -> Result<Arc<Algebra>> {
    let field = Field::new(spec.field)?;
    let red = close_ideal(spec, field, cap)?;
    let d = red.basis.len();
    let r = spec.vertices.len();
    let mut table = vec![Vec::new(); d * d];
    for (i, bi) in red.basis.iter().enumerate() {
        for (j, bj) in red.basis.iter().enumerate() {
            // b_i * b_j: first b_j, then b_i
            if bj.end(spec) != bi.start {
                continue;
            }
            let mut arrows = bj.arrows.clone();
            arrows.extend_from_slice(&bi.arrows);
            if arrows.len() > red.max_len {
                continue;
            }
            let prod = Path { start: bj.start, arrows };
            table[i * d + j] = red.normal[&prod].clone();
        }
    }
    let data = AlgebraData {
        id: spec.name.clone(),
        field,
        vertices: spec.vertices.clone(),
        labels: red.basis.iter().map(|p| path_label(spec, p)).collect(),
        source: red.basis.iter().map(|p| p.start).collect(),
        target: red.basis.iter().map(|p| p.end(spec)).collect(),
        idempotents: (0..r).collect(),
        table,
    };
    let quiver = QuiverData {
        spec: spec.clone(),
        paths: red.basis.iter().map(|p| p.arrows.clone()).collect(),
        arrow_basis: (0..spec.arrows.len()).map(|a| r + a).collect(),
    };
    Ok(Arc::new(Algebra::new(data, Some(quiver))?))
}

/// Parse and build in one step.
pub fn algebra_from_text(text: &str) -> Result<Arc<Algebra>> {
    build_algebra(&dsl::parse_spec(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1: &str = "algebra EX1 field 101\nvertices 1,2,3\narrow gamma : 1 -> 2\narrow alpha : 1 -> 3\narrow beta : 3 -> 2\nrel alpha*beta\n";

    #[test]
    fn triangle_dimension() {
        let a = algebra_from_text(EX1).unwrap();
        assert_eq!(a.dim(), 6);
        a.check_associativity().unwrap();
        a.check_radical_nilpotent().unwrap();
        assert_eq!(a.generators().len(), 3);
    }

    #[test]
    fn commutative_square() {
        let text = "algebra Sq field 7\nvertices 1..4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrel a*b - c*d\n";
        let a = algebra_from_text(text).unwrap();
        // 4 idempotents, 4 arrows, one path class from 1 to 4
        assert_eq!(a.dim(), 9);
        a.check_associativity().unwrap();
        let p14 = a.between(3, 0);
        assert_eq!(p14.len(), 1);
    }

    #[test]
    fn loop_needs_relation() {
        let text = "algebra L field 5\nvertices 1\narrow x : 1 -> 1\n";
        let spec = dsl::parse_spec(text).unwrap();
        assert_eq!(build_algebra_with_cap(&spec, 6).unwrap_err(), Error::NotAdmissible(6));
        let text = "algebra L field 5\nvertices 1\narrow x : 1 -> 1\nrel x*x*x\n";
        let a = algebra_from_text(text).unwrap();
        assert_eq!(a.dim(), 3);
        a.check_associativity().unwrap();
    }

    #[test]
    fn non_monomial_loop() {
        // x^2 = y^2 = 0 and xy = -yx on one vertex: exterior algebra, dim 4
        let text = "algebra E field 11\nvertices 1\narrow x : 1 -> 1\narrow y : 1 -> 1\nrel x*x\nrel y*y\nrel x*y + y*x\n";
        let a = algebra_from_text(text).unwrap();
        assert_eq!(a.dim(), 4);
        a.check_associativity().unwrap();
        a.check_radical_nilpotent().unwrap();
    }

    #[test]
    fn opposite_of_a2() {
        let a = algebra_from_text("algebra A2 field 101\nvertices 1,2\narrow a : 1 -> 2\n").unwrap();
        let b = algebra_from_text("algebra B field 101\nvertices 1,2\narrow a : 2 -> 1\n").unwrap();
        let op = a.opposite();
        assert!(op.same_structure(&b));
    }
}
