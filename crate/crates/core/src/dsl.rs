//! Line-oriented text format for bound quivers and their representations.
//!
//! ```text
//! # triangle with one zero relation
//! algebra EX1 field 101
//! vertices 1,2,3
//! arrow gamma : 1 -> 2
//! arrow alpha : 1 -> 3
//! arrow beta  : 3 -> 2
//! rel alpha*beta
//!
//! module M
//! dim 1 = 1
//! dim 2 = 1
//! map gamma = [[1]]
//! ```
//!
//! Relation terms list arrows in traversal order: `alpha*beta` walks `alpha`
//! first and then `beta`, which is the composite written `beta alpha` in
//! functional notation. A relation is a linear combination
//! `[c*]term (+|-) [c*]term ...` of parallel paths of length at least two.
//!
//! A `map` for an arrow `a : v -> w` is a `dim w x dim v` matrix given as a
//! list of rows. A file holding only modules starts with `algebra <name>`
//! (no `field` clause) to name the algebra it refers to.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A relation: a linear combination of parallel paths, each a sequence of
/// arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverSpec {
    pub name: String,
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverSpec {
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Render back into the text format.
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {} field {}", self.name, self.field);
        let _ = writeln!(out, "vertices {}", self.vertices.join(","));
        for a in &self.arrows {
            let _ = writeln!(out, "arrow {} : {} -> {}", a.name, self.vertices[a.source], self.vertices[a.target]);
        }
        for r in &self.relations {
            let mut line = String::from("rel");
            for (k, (c, path)) in r.terms.iter().enumerate() {
                let word: Vec<&str> = path.iter().map(|&a| self.arrows[a].name.as_str()).collect();
                let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
                if k == 0 {
                    if sign == "-" {
                        line.push_str(" -");
                    } else {
                        line.push(' ');
                    }
                } else {
                    let _ = write!(line, " {sign} ");
                }
                if mag != 1 {
                    let _ = write!(line, "{mag}*");
                }
                line.push_str(&word.join("*"));
            }
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

/// An unresolved module literal: vertex and arrow names are kept as written
/// and resolved against an algebra later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub name: String,
    pub dims: Vec<(String, usize)>,
    pub maps: Vec<(String, Vec<Vec<i64>>)>,
    pub line: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub algebra: Option<QuiverSpec>,
    /// Name from an `algebra <name>` header without a field clause.
    pub reference: Option<String>,
    pub modules: Vec<ModuleSpec>,
}

/// Parse a text holding exactly one algebra declaration.
pub fn parse_spec(text: &str) -> Result<QuiverSpec> {
    let doc = parse_document(text)?;
    doc.algebra
        .ok_or_else(|| Error::Parse { line: 1, col: 1, msg: "no `algebra <name> field <p>` declaration".into() })
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut p = Parser::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        p.line(i + 1, line)?;
    }
    p.finish()
}

#[derive(Default)]
struct Parser {
    doc: Document,
    spec: Option<QuiverSpec>,
    module: Option<ModuleSpec>,
    // pending relations are resolved once all arrows are known
    rels: Vec<(usize, usize, Vec<(i64, Vec<(String, usize)>)>)>,
}

struct Cursor<'a> {
    line: usize,
    src: &'a str,
    pos: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.col(), msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if is_ident_char(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        if start == self.pos {
            return self.err("expected identifier");
        }
        Ok((self.src[start..self.pos].to_string(), start + 1))
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut s = self.src[self.pos..].chars();
        if let Some('-') = s.clone().next() {
            self.pos += 1;
            s.next();
        }
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        let txt = &self.src[start..self.pos];
        match txt.parse::<i64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected integer")
            }
        }
    }

    fn end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

impl Parser {
    fn line(&mut self, lineno: usize, line: &str) -> Result<()> {
        let mut c = Cursor { line: lineno, src: line, pos: 0 };
        if c.at_end() {
            return Ok(());
        }
        let (kw, _) = c.ident()?;
        match kw.as_str() {
            "algebra" => self.algebra(&mut c),
            "vertices" => self.vertices(&mut c),
            "arrow" => self.arrow(&mut c),
            "rel" => self.relation(&mut c),
            "module" => self.module(&mut c),
            "dim" => self.dim(&mut c),
            "map" => self.map(&mut c),
            other => Err(Error::Parse { line: lineno, col: 1, msg: format!("unknown declaration `{other}`") }),
        }
    }

    fn spec_mut<'c>(&mut self, c: &Cursor<'c>) -> Result<&mut QuiverSpec> {
        match self.spec.as_mut() {
            Some(s) => Ok(s),
            None => c.err("declaration outside an `algebra` block"),
        }
    }

    fn algebra(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        if self.spec.is_some() || self.doc.reference.is_some() {
            return c.err("only one `algebra` declaration per file");
        }
        let (name, _) = c.ident()?;
        if c.at_end() {
            self.doc.reference = Some(name);
            return Ok(());
        }
        let (kw, _) = c.ident()?;
        if kw != "field" {
            return c.err("expected `field`");
        }
        let p = c.int()?;
        if p < 2 || p >= 1 << 16 || crate::linalg::Field::new(p as u32).is_err() {
            return c.err(format!("field size {p} is not a prime below 65536"));
        }
        c.end()?;
        self.spec = Some(QuiverSpec { name, field: p as u32, vertices: vec![], arrows: vec![], relations: vec![] });
        Ok(())
    }

    fn vertices(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        let mut new = Vec::new();
        loop {
            let (a, col) = c.ident()?;
            if c.eat("..") {
                let (b, _) = c.ident()?;
                let (Ok(lo), Ok(hi)) = (a.parse::<i64>(), b.parse::<i64>()) else {
                    return Err(Error::Parse { line: c.line, col, msg: "range bounds must be integers".into() });
                };
                if lo > hi {
                    return Err(Error::Parse { line: c.line, col, msg: "empty vertex range".into() });
                }
                new.extend((lo..=hi).map(|v| (v.to_string(), col)));
            } else {
                new.push((a, col));
            }
            if !c.eat(",") {
                break;
            }
        }
        c.end()?;
        let line = c.line;
        let spec = self.spec_mut(c)?;
        for (v, col) in new {
            if spec.vertices.contains(&v) {
                return Err(Error::Parse { line, col, msg: format!("duplicate vertex `{v}`") });
            }
            spec.vertices.push(v);
        }
        Ok(())
    }

    fn arrow(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        let (name, ncol) = c.ident()?;
        c.expect(":")?;
        let (s, scol) = c.ident()?;
        c.expect("->")?;
        let (t, tcol) = c.ident()?;
        c.end()?;
        let line = c.line;
        let spec = self.spec_mut(c)?;
        if spec.arrow_index(&name).is_some() {
            return Err(Error::Parse { line, col: ncol, msg: format!("duplicate arrow `{name}`") });
        }
        let source = spec
            .vertex_index(&s)
            .ok_or_else(|| Error::Parse { line, col: scol, msg: format!("unknown vertex `{s}`") })?;
        let target = spec
            .vertex_index(&t)
            .ok_or_else(|| Error::Parse { line, col: tcol, msg: format!("unknown vertex `{t}`") })?;
        spec.arrows.push(Arrow { name, source, target });
        Ok(())
    }

    fn term(c: &mut Cursor<'_>) -> Result<(i64, Vec<(String, usize)>)> {
        let mut coeff = 1;
        if matches!(c.peek(), Some(ch) if ch.is_ascii_digit()) {
            let save = c.pos;
            let n = c.int()?;
            if c.eat("*") {
                coeff = n;
            } else {
                c.pos = save;
            }
        }
        let mut word = vec![c.ident()?];
        while c.eat("*") {
            word.push(c.ident()?);
        }
        Ok((coeff, word))
    }

    fn relation(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        self.spec_mut(c)?;
        let col = c.col();
        let mut terms = Vec::new();
        let first_neg = c.eat("-");
        let (k, w) = Self::term(c)?;
        terms.push((if first_neg { -k } else { k }, w));
        while !c.at_end() {
            let sign = if c.eat("+") {
                1
            } else if c.eat("-") {
                -1
            } else {
                return c.err("expected `+` or `-`");
            };
            let (k, w) = Self::term(c)?;
            terms.push((sign * k, w));
        }
        self.rels.push((c.line, col, terms));
        Ok(())
    }

    fn module(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        if self.spec.is_none() && self.doc.reference.is_none() {
            return c.err("`module` before any `algebra` header");
        }
        let (name, _) = c.ident()?;
        c.end()?;
        if let Some(m) = self.module.take() {
            self.doc.modules.push(m);
        }
        if self.doc.modules.iter().any(|m| m.name == name) {
            return c.err(format!("duplicate module `{name}`"));
        }
        self.module = Some(ModuleSpec { name, dims: vec![], maps: vec![], line: c.line });
        Ok(())
    }

    fn dim(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        let (v, _) = c.ident()?;
        c.expect("=")?;
        let n = c.int()?;
        if n < 0 {
            return c.err("dimension must be a natural number");
        }
        c.end()?;
        match self.module.as_mut() {
            Some(m) => {
                m.dims.push((v, n as usize));
                Ok(())
            }
            None => c.err("`dim` outside a `module` block"),
        }
    }

    fn map(&mut self, c: &mut Cursor<'_>) -> Result<()> {
        let (a, _) = c.ident()?;
        c.expect("=")?;
        c.expect("[")?;
        let mut rows = Vec::new();
        if !c.eat("]") {
            loop {
                c.expect("[")?;
                let mut row = Vec::new();
                if !c.eat("]") {
                    loop {
                        row.push(c.int()?);
                        if c.eat("]") {
                            break;
                        }
                        c.expect(",")?;
                    }
                }
                rows.push(row);
                if c.eat("]") {
                    break;
                }
                c.expect(",")?;
            }
        }
        c.end()?;
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return c.err("ragged matrix");
        }
        match self.module.as_mut() {
            Some(m) => {
                m.maps.push((a, rows));
                Ok(())
            }
            None => c.err("`map` outside a `module` block"),
        }
    }

    fn finish(mut self) -> Result<Document> {
        if let Some(m) = self.module.take() {
            self.doc.modules.push(m);
        }
        if let Some(mut spec) = self.spec.take() {
            for (line, col, terms) in std::mem::take(&mut self.rels) {
                spec.relations.push(resolve_relation(&spec, line, col, terms)?);
            }
            self.doc.algebra = Some(spec);
        }
        Ok(self.doc)
    }
}

fn resolve_relation(
    spec: &QuiverSpec,
    line: usize,
    col: usize,
    terms: Vec<(i64, Vec<(String, usize)>)>,
) -> Result<Relation> {
    let perr = |col: usize, msg: String| Error::Parse { line, col, msg };
    let mut out = Vec::new();
    let mut ends: Option<(usize, usize)> = None;
    for (coeff, word) in terms {
        let mut path = Vec::new();
        for (name, acol) in &word {
            let a = spec.arrow_index(name).ok_or_else(|| perr(*acol, format!("unknown arrow `{name}`")))?;
            if let Some(&prev) = path.last() {
                let prev: usize = prev;
                if spec.arrows[prev].target != spec.arrows[a].source {
                    return Err(perr(*acol, format!("arrow `{name}` does not continue the path")));
                }
            }
            path.push(a);
        }
        if path.len() < 2 {
            return Err(perr(col, "relation terms must have length at least 2".into()));
        }
        let st = (spec.arrows[path[0]].source, spec.arrows[*path.last().unwrap()].target);
        match ends {
            None => ends = Some(st),
            Some(e) if e != st => return Err(perr(col, "relation paths are not parallel".into())),
            _ => {}
        }
        out.push((coeff, path));
    }
    Ok(Relation { terms: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1: &str = "algebra EX1 field 101
vertices 1,2,3
arrow gamma : 1 -> 2
arrow alpha : 1 -> 3
arrow beta : 3 -> 2
rel alpha*beta
";

    #[test]
    fn parses_triangle() {
        let s = parse_spec(EX1).unwrap();
        assert_eq!(s.vertices.len(), 3);
        assert_eq!(s.arrows.len(), 3);
        assert_eq!(s.relations.len(), 1);
        assert_eq!(s.relations[0].terms, vec![(1, vec![1, 2])]);
    }

    #[test]
    fn single_vertex() {
        let s = parse_spec("algebra k field 7\nvertices x\n").unwrap();
        assert_eq!(s.vertices, vec!["x"]);
        assert!(s.arrows.is_empty());
    }

    #[test]
    fn ranges_and_linear_relations() {
        let s = parse_spec(
            "algebra Q field 11\nvertices 1..4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrel a*b - 3*c*d\n",
        )
        .unwrap();
        assert_eq!(s.vertices, vec!["1", "2", "3", "4"]);
        assert_eq!(s.relations[0].terms, vec![(1, vec![0, 1]), (-3, vec![2, 3])]);
        let again = parse_spec(&s.to_dsl()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_spec("algebra Q field 7\nvertices 1,2\narrow a : 1 -> 3\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, col: 16, msg: "unknown vertex `3`".into() });

        let e = parse_spec("algebra Q field 7\nvertices 1,2,3\narrow a : 1 -> 2\narrow b : 1 -> 3\nrel a*b\n")
            .unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }), "{e:?}");

        let e = parse_spec("algebra Q field 7\nvertices 1,2\narrow a : 1 -> 2\nrel a\n").unwrap_err();
        assert!(e.to_string().contains("length at least 2"));

        let e = parse_spec(
            "algebra Q field 7\nvertices 1..3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 1 -> 2\nrel a*b - c\n",
        )
        .unwrap_err();
        assert!(e.to_string().contains("length at least 2"));

        let e = parse_spec("algebra Q field 8\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));

        let e = parse_spec("algebra Q field 7\nvertices 1\nfrobnicate\n").unwrap_err();
        assert!(e.to_string().contains("unknown declaration"));
    }

    #[test]
    fn non_parallel_relation() {
        let e = parse_spec(
            "algebra Q field 7\nvertices 1..4\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 4\narrow d : 1 -> 2\nrel a*b + d*c\n",
        )
        .unwrap_err();
        assert!(e.to_string().contains("not parallel"));
    }

    #[test]
    fn modules_and_reference_header() {
        let text = format!("{EX1}\nmodule M\ndim 1 = 1\ndim 2 = 1\nmap gamma = [[1]]\nmodule Z\n");
        let d = parse_document(&text).unwrap();
        assert_eq!(d.modules.len(), 2);
        assert_eq!(d.modules[0].maps, vec![("gamma".to_string(), vec![vec![1]])]);

        let d = parse_document("algebra EX1\nmodule S\ndim 3 = 1\n").unwrap();
        assert_eq!(d.reference.as_deref(), Some("EX1"));
        assert!(d.algebra.is_none());
        assert_eq!(d.modules[0].dims, vec![("3".to_string(), 1)]);
    }
}
