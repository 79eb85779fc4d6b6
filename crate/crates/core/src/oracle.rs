//! Closed-form models used to cross-check the general machinery.
//!
//! * Path counting: for monomial relations the algebra has a basis of paths
//!   avoiding every relation as a subpath.
//! * Nakayama intervals: for a linearly oriented quiver with monomial
//!   relations the indecomposables are the uniserial interval modules, and
//!   syzygies, cosyzygies and the translate act on intervals directly.
//!
//! Neither model shares code with the linear-algebra implementation.

use crate::dsl::QuiverSpec;

/// Number of paths (including trivial ones) avoiding every relation path,
/// or `None` when some relation is not monomial or the count exceeds the
/// length bound (an oriented cycle without enough relations).
pub fn count_live_paths(spec: &QuiverSpec, max_len: usize) -> Option<usize> {
    if spec.relations.iter().any(|r| !r.is_monomial()) {
        return None;
    }
    let rels: Vec<&Vec<usize>> = spec.relations.iter().map(|r| &r.terms[0].1).collect();
    let mut count = spec.vertices.len();
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    for a in 0..spec.arrows.len() {
        frontier.push(vec![a]);
    }
    let mut len = 1;
    while !frontier.is_empty() {
        if len > max_len {
            return None;
        }
        let mut next = Vec::new();
        for p in frontier {
            if rels.iter().any(|r| p.ends_with(r)) {
                continue;
            }
            count += 1;
            let end = spec.arrows[*p.last().unwrap()].target;
            for (a, arrow) in spec.arrows.iter().enumerate() {
                if arrow.source == end {
                    let mut q = p.clone();
                    q.push(a);
                    next.push(q);
                }
            }
        }
        frontier = next;
        len += 1;
    }
    Some(count)
}

/// A linearly oriented quiver `c_0 -> c_1 -> ... -> c_{n-1}` with monomial
/// relations, described by positions along the arrows.
#[derive(Clone, Debug)]
pub struct Nakayama {
    /// Vertex index (in the quiver) at each position.
    pub order: Vec<usize>,
    /// `reach[a]`: largest `b` such that the path from `c_a` to `c_b` is live.
    pub reach: Vec<usize>,
}

/// An interval module `[a..b]` in positions along the arrows.
pub type Interval = (usize, usize);

impl Nakayama {
    pub fn from_spec(spec: &QuiverSpec) -> Option<Nakayama> {
        let n = spec.vertices.len();
        if spec.arrows.len() + 1 != n || spec.relations.iter().any(|r| !r.is_monomial()) {
            return None;
        }
        let mut out = vec![None; n];
        let mut indeg = vec![0; n];
        for (k, a) in spec.arrows.iter().enumerate() {
            if out[a.source].is_some() {
                return None;
            }
            out[a.source] = Some(k);
            indeg[a.target] += 1;
        }
        if indeg.iter().any(|&d| d > 1) {
            return None;
        }
        let start = (0..n).find(|&v| indeg[v] == 0)?;
        let mut order = vec![start];
        let mut arrows = Vec::new();
        while let Some(a) = out[*order.last().unwrap()] {
            arrows.push(a);
            order.push(spec.arrows[a].target);
            if order.len() > n {
                return None;
            }
        }
        if order.len() != n {
            return None;
        }
        // relations as position intervals [i..j] of arrows
        let pos_of_arrow = |a: usize| arrows.iter().position(|&x| x == a).unwrap();
        let rels: Vec<(usize, usize)> = spec
            .relations
            .iter()
            .map(|r| {
                let p = &r.terms[0].1;
                (pos_of_arrow(p[0]), pos_of_arrow(*p.last().unwrap()))
            })
            .collect();
        let reach = (0..n)
            .map(|a| {
                let mut b = a;
                // the path c_a -> c_{b+1} uses arrows a..=b
                while b + 1 < n && !rels.iter().any(|&(i, j)| i >= a && j <= b) {
                    b += 1;
                }
                b
            })
            .collect();
        Some(Nakayama { order, reach })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn is_live(&self, (a, b): Interval) -> bool {
        a <= b && b <= self.reach[a]
    }

    /// All indecomposables.
    pub fn intervals(&self) -> Vec<Interval> {
        (0..self.len()).flat_map(|a| (a..=self.reach[a]).map(move |b| (a, b))).collect()
    }

    /// Dimension vector indexed by quiver vertex.
    pub fn dimvec(&self, (a, b): Interval) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for p in a..=b {
            d[self.order[p]] = 1;
        }
        d
    }

    pub fn projective(&self, a: usize) -> Interval {
        (a, self.reach[a])
    }

    /// Start of the injective envelope of the simple at position `b`.
    fn injective_start(&self, b: usize) -> usize {
        (0..=b).find(|&a| self.reach[a] >= b).unwrap()
    }

    pub fn injective(&self, b: usize) -> Interval {
        (self.injective_start(b), b)
    }

    pub fn is_projective(&self, (a, b): Interval) -> bool {
        b == self.reach[a]
    }

    pub fn is_injective(&self, (a, b): Interval) -> bool {
        a == self.injective_start(b)
    }

    pub fn syzygy(&self, (a, b): Interval) -> Option<Interval> {
        (b < self.reach[a]).then(|| (b + 1, self.reach[a]))
    }

    pub fn cosyzygy(&self, (a, b): Interval) -> Option<Interval> {
        let s = self.injective_start(b);
        (a > s).then(|| (s, a - 1))
    }

    pub fn tau(&self, (a, b): Interval) -> Option<Interval> {
        (!self.is_projective((a, b))).then(|| (a + 1, b + 1))
    }

    pub fn tau_inv(&self, (a, b): Interval) -> Option<Interval> {
        (!self.is_injective((a, b))).then(|| (a - 1, b - 1))
    }

    pub fn proj_dim(&self, m: Interval) -> usize {
        let mut k = 0;
        let mut cur = m;
        while let Some(next) = self.syzygy(cur) {
            cur = next;
            k += 1;
        }
        k
    }

    pub fn inj_dim(&self, m: Interval) -> usize {
        let mut k = 0;
        let mut cur = m;
        while let Some(next) = self.cosyzygy(cur) {
            cur = next;
            k += 1;
        }
        k
    }

    pub fn global_dimension(&self) -> usize {
        (0..self.len()).map(|a| self.proj_dim((a, a))).max().unwrap_or(0)
    }

    /// `dim Hom([a..b], [c..d])` for uniserial intervals: a nonzero map
    /// sends a quotient `[a..x]` onto a submodule `[c..x]`, which needs
    /// `c <= a <= d <= b`.
    pub fn hom_dim(&self, (a, b): Interval, (c, d): Interval) -> usize {
        usize::from(c <= a && a <= d && d <= b)
    }

    /// Sizes of the τ-orbits, sorted.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self
            .intervals()
            .into_iter()
            .filter(|&m| self.is_projective(m))
            .map(|p| {
                let mut k = 1;
                let mut cur = p;
                while let Some(next) = self.tau_inv(cur) {
                    cur = next;
                    k += 1;
                }
                k
            })
            .collect();
        sizes.sort_unstable();
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_spec;

    fn a8() -> QuiverSpec {
        let mut text = String::from("algebra EX3 field 101\nvertices 1..8\n");
        for i in 1..8 {
            text.push_str(&format!("arrow a{i} : {i} -> {}\n", i + 1));
        }
        for i in 1..=3 {
            let w: Vec<String> = (i..i + 5).map(|k| format!("a{k}")).collect();
            text.push_str(&format!("rel {}\n", w.join("*")));
        }
        parse_spec(&text).unwrap()
    }

    #[test]
    fn a8_counts() {
        let spec = a8();
        assert_eq!(count_live_paths(&spec, 64), Some(30));
        let n = Nakayama::from_spec(&spec).unwrap();
        assert_eq!(n.intervals().len(), 30);
        // four projective-injectives form singleton orbits
        assert_eq!(n.orbit_sizes(), vec![1, 1, 1, 1, 5, 6, 7, 8]);
        // [3..6] in positions 2..5
        let m = (2, 5);
        assert_eq!(n.proj_dim(m), 2);
        assert_eq!(n.inj_dim(m), 2);
        assert_eq!(n.tau(m), Some((3, 6)));
        assert_eq!(n.global_dimension(), 3);
    }

    #[test]
    fn non_linear_rejected() {
        let spec = parse_spec("algebra T field 7\nvertices 1,2,3\narrow a : 1 -> 2\narrow b : 1 -> 3\n").unwrap();
        assert!(Nakayama::from_spec(&spec).is_none());
        assert_eq!(count_live_paths(&spec, 8), Some(5));
    }
}
