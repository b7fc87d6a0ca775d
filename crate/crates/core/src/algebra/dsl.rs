//! Text format for quivers with relations, plus optional named modules and complexes.
//!
//! ```text
//! # linearly oriented A3 with its length-two path killed
//! field Q
//! vertices 1 2 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! relation a*b
//! module M: dims 1 1 0; a = [[1]]
//! complex X: P1 -> P2 : [[a]]
//! ```

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Algebra, Arrow, Path, Quiver, Relation, DEFAULT_NILPOTENCY_BOUND};
use crate::error::{Error, Result};
use crate::field::{parse_rational, Field, DEFAULT_PRIME};

/// A module declared by explicit matrices (one per arrow, `dims[source] x dims[target]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<BigRational>>>,
}

/// A 2-term complex `⊕P_src -> ⊕P_tgt` declared by a matrix of path combinations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDecl {
    pub name: String,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub entries: Vec<Vec<Vec<(BigRational, Path)>>>,
}

/// A parsed source file.
#[derive(Clone, Debug)]
pub struct Document {
    pub algebra: Algebra,
    pub modules: Vec<ModuleDecl>,
    pub complexes: Vec<ComplexDecl>,
}

impl Algebra {
    /// Parses the algebra part of a source text with the default nilpotency bound.
    pub fn parse(text: &str) -> Result<Algebra> {
        Ok(parse_document(text, None, DEFAULT_NILPOTENCY_BOUND)?.algebra)
    }

    /// Canonical source text for the algebra alone.
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        match self.field() {
            Field::Rationals => out.push_str("field Q\n"),
            Field::Prime(p) => out.push_str(&format!("field Fp {p}\n")),
        }
        out.push_str(&format!("vertices {}\n", self.quiver().vertices.join(" ")));
        for a in &self.quiver().arrows {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name,
                self.label(a.source),
                self.label(a.target)
            ));
        }
        for r in self.relations() {
            out.push_str(&format!("relation {}\n", r.display(self.quiver())));
        }
        out
    }
}

impl Document {
    /// Canonical source text; parsing it back reproduces the same text.
    pub fn serialize(&self) -> String {
        let alg = &self.algebra;
        let mut out = alg.to_dsl();
        for m in &self.modules {
            let mut parts = vec![format!(
                "dims {}",
                m.dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            )];
            for (a, mat) in alg.quiver().arrows.iter().zip(&m.maps) {
                let rows: Vec<String> = mat
                    .iter()
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(rational_text).collect();
                        format!("[{}]", cells.join(", "))
                    })
                    .collect();
                parts.push(format!("{} = [{}]", a.name, rows.join(", ")));
            }
            out.push_str(&format!("module {}: {}\n", m.name, parts.join("; ")));
        }
        for c in &self.complexes {
            let obj = |vs: &[usize]| {
                if vs.is_empty() {
                    "0".to_string()
                } else {
                    vs.iter().map(|&v| format!("P{}", alg.label(v))).collect::<Vec<_>>().join(" + ")
                }
            };
            let rows: Vec<String> = c
                .entries
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|terms| Relation { terms: terms.clone() }.display(alg.quiver()))
                        .collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            out.push_str(&format!(
                "complex {}: {} -> {} : [{}]\n",
                c.name,
                obj(&c.src),
                obj(&c.tgt),
                rows.join(", ")
            ));
        }
        out
    }

    pub fn module(&self, name: &str) -> Option<&ModuleDecl> {
        self.modules.iter().find(|m| m.name == name)
    }

    pub fn complex(&self, name: &str) -> Option<&ComplexDecl> {
        self.complexes.iter().find(|m| m.name == name)
    }
}

fn rational_text(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a full source text. `field` overrides any `field` directive.
pub fn parse_document(text: &str, field: Option<Field>, bound: usize) -> Result<Document> {
    let mut declared_field = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut pending_relations: Vec<(usize, usize, String)> = Vec::new();
    let mut pending_modules: Vec<(usize, usize, String)> = Vec::new();
    let mut pending_complexes: Vec<(usize, usize, String)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = indent + keyword.len() + 1;
        match keyword {
            "field" => {
                let toks: Vec<&str> = rest.split(|c: char| c.is_whitespace() || c == ':').filter(|t| !t.is_empty()).collect();
                declared_field = Some(match toks.as_slice() {
                    ["Q"] => Field::Rationals,
                    ["Fp"] => Field::Prime(DEFAULT_PRIME),
                    ["Fp", p] => {
                        let p: u32 = p.parse().map_err(|_| syntax(line_no, rest_col, "expected a prime"))?;
                        if !is_prime(p) {
                            return Err(syntax(line_no, rest_col, format!("{p} is not prime")));
                        }
                        Field::Prime(p)
                    }
                    _ => return Err(syntax(line_no, rest_col, "expected `field Q` or `field Fp <p>`")),
                });
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(line_no, 1, "vertices declared twice"));
                }
                let vs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(syntax(line_no, rest_col, "expected at least one vertex"));
                }
                vertices = Some(vs);
            }
            "arrow" => {
                let vs = vertices
                    .as_ref()
                    .ok_or_else(|| syntax(line_no, 1, "arrow before vertices"))?;
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, rest_col, "expected `arrow name: s -> t`"))?;
                let name = name.trim();
                if name.is_empty() || !is_ident(name) || name.starts_with(|c: char| c.is_ascii_digit()) {
                    return Err(syntax(line_no, rest_col, format!("bad arrow name `{name}`")));
                }
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| syntax(line_no, rest_col + name.len() + 1, "expected `->`"))?;
                let find = |label: &str| {
                    vs.iter()
                        .position(|v| v == label.trim())
                        .ok_or_else(|| Error::UnknownVertex(label.trim().to_string()))
                };
                arrows.push(Arrow {
                    name: name.to_string(),
                    source: find(s)?,
                    target: find(t)?,
                });
            }
            "relation" => pending_relations.push((line_no, rest_col, rest.to_string())),
            "module" => pending_modules.push((line_no, rest_col, rest.to_string())),
            "complex" => pending_complexes.push((line_no, rest_col, rest.to_string())),
            other => return Err(syntax(line_no, indent + 1, format!("unknown directive `{other}`"))),
        }
    }

    let vertices = vertices.ok_or_else(|| syntax(1, 1, "missing `vertices` line"))?;
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (line, col, text) in &pending_relations {
        let terms = parse_combination(&quiver, text, *line, *col, false)?;
        let rel = Relation::new(&quiver, terms)?;
        if !rel.terms.is_empty() {
            relations.push(rel);
        }
    }
    let field = field.or(declared_field).unwrap_or(Field::Rationals);
    let algebra = Algebra::new(quiver, relations, field, bound)?;

    let mut modules = Vec::new();
    for (line, col, text) in &pending_modules {
        let m = parse_module(&algebra, text, *line, *col)?;
        if modules.iter().any(|x: &ModuleDecl| x.name == m.name) {
            return Err(syntax(*line, *col, format!("module `{}` declared twice", m.name)));
        }
        modules.push(m);
    }
    let mut complexes = Vec::new();
    for (line, col, text) in &pending_complexes {
        let c = parse_complex(&algebra, text, *line, *col)?;
        if complexes.iter().any(|x: &ComplexDecl| x.name == c.name) {
            return Err(syntax(*line, *col, format!("complex `{}` declared twice", c.name)));
        }
        complexes.push(c);
    }
    Ok(Document {
        algebra,
        modules,
        complexes,
    })
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn is_ident(s: &str) -> bool {
    s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Star,
    Plus,
    Minus,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c == '*' {
            out.push((Tok::Star, col));
            i += 1;
        } else if c == '+' {
            out.push((Tok::Plus, col));
            i += 1;
        } else if c == '-' {
            out.push((Tok::Minus, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let q = parse_rational(&s).map_err(|_| syntax(line, col, format!("bad number `{s}`")))?;
            out.push((Tok::Num(q), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Parses `c1 p1 + c2 p2 - ...`. With `allow_trivial`, `e<label>` names a trivial path
/// and a bare `0` is accepted.
fn parse_combination(
    q: &Quiver,
    text: &str,
    line: usize,
    col0: usize,
    allow_trivial: bool,
) -> Result<Vec<(BigRational, Path)>> {
    let toks = tokenize(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut terms = Vec::new();
    let mut i = 0;
    if toks.is_empty() {
        return Err(syntax(line, end_col, "empty expression"));
    }
    if allow_trivial && toks.len() == 1 {
        if let Tok::Num(n) = &toks[0].0 {
            if n.is_zero() {
                return Ok(Vec::new());
            }
        }
    }
    let mut first = true;
    while i < toks.len() {
        let mut sign = BigRational::one();
        match &toks[i].0 {
            Tok::Plus => i += 1,
            Tok::Minus => {
                sign = -sign;
                i += 1;
            }
            _ if first => {}
            _ => return Err(syntax(line, toks[i].1, "expected `+` or `-`")),
        }
        first = false;
        let mut coeff = sign;
        if let Some((Tok::Num(n), _)) = toks.get(i) {
            coeff *= n.clone();
            i += 1;
            if let Some((Tok::Star, _)) = toks.get(i) {
                i += 1;
            }
        }
        let mut arrows = Vec::new();
        let mut trivial = None;
        loop {
            let Some((Tok::Ident(name), col)) = toks.get(i) else {
                let col = toks.get(i).map(|t| t.1).unwrap_or(end_col);
                return Err(syntax(line, col, "expected an arrow name"));
            };
            if let Some(a) = q.arrow_index(name) {
                arrows.push(a);
            } else if let Some(v) = allow_trivial
                .then(|| name.strip_prefix('e').and_then(|l| q.vertex_index(l)))
                .flatten()
            {
                if trivial.is_some() || !arrows.is_empty() {
                    return Err(syntax(line, *col, "trivial paths cannot be composed"));
                }
                trivial = Some(v);
            } else {
                return Err(Error::UnknownArrow(name.clone()));
            }
            i += 1;
            if let Some((Tok::Star, _)) = toks.get(i) {
                if trivial.is_some() {
                    return Err(syntax(line, toks[i].1, "trivial paths cannot be composed"));
                }
                i += 1;
            } else {
                break;
            }
        }
        let path = match trivial {
            Some(v) => Path::trivial(v),
            None => Path::from_arrows(q, arrows.clone()).ok_or_else(|| {
                let names: Vec<&str> = arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect();
                syntax(line, col0, format!("arrows {} do not compose", names.join("*")))
            })?,
        };
        terms.push((coeff, path));
    }
    Ok(terms)
}

/// Splits `[[x, y], [z, w]]` into rows of cell strings with their columns.
fn parse_matrix_literal(text: &str, line: usize, col0: usize) -> Result<Vec<Vec<(String, usize)>>> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    let chars: Vec<char> = t.chars().collect();
    if chars.first() != Some(&'[') || chars.last() != Some(&']') {
        return Err(syntax(line, col0 + lead, "expected a bracketed matrix"));
    }
    let mut rows = Vec::new();
    let mut i = 1;
    let n = chars.len() - 1;
    loop {
        while i < n && (chars[i].is_whitespace() || chars[i] == ',') {
            i += 1;
        }
        if i >= n {
            break;
        }
        if chars[i] != '[' {
            return Err(syntax(line, col0 + lead + i, "expected `[` to open a row"));
        }
        let start = i + 1;
        let close = (start..n)
            .find(|&j| chars[j] == ']')
            .ok_or_else(|| syntax(line, col0 + lead + i, "unclosed row"))?;
        let body: String = chars[start..close].iter().collect();
        let mut cells = Vec::new();
        if !body.trim().is_empty() {
            let mut off = start;
            for cell in body.split(',') {
                cells.push((cell.to_string(), col0 + lead + off));
                off += cell.chars().count() + 1;
            }
        }
        rows.push(cells);
        i = close + 1;
    }
    Ok(rows)
}

fn parse_module(alg: &Algebra, text: &str, line: usize, col: usize) -> Result<ModuleDecl> {
    let q = alg.quiver();
    let (name, body) = text
        .split_once(':')
        .ok_or_else(|| syntax(line, col, "expected `module NAME: dims ...`"))?;
    let name = name.trim().to_string();
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || "_()[],#'".contains(c)) {
        return Err(syntax(line, col, format!("bad module name `{name}`")));
    }
    let mut parts = body.split(';');
    let dims_part = parts.next().unwrap_or("").trim();
    let dims: Vec<usize> = dims_part
        .strip_prefix("dims")
        .ok_or_else(|| syntax(line, col, "module body must start with `dims`"))?
        .split_whitespace()
        .map(|d| d.parse().map_err(|_| syntax(line, col, format!("bad dimension `{d}`"))))
        .collect::<Result<_>>()?;
    if dims.len() != q.num_vertices() {
        return Err(syntax(line, col, "one dimension per vertex expected"));
    }
    let mut maps: Vec<Option<Vec<Vec<BigRational>>>> = vec![None; q.arrows.len()];
    for part in parts {
        if part.trim().is_empty() {
            continue;
        }
        let (an, mat) = part
            .split_once('=')
            .ok_or_else(|| syntax(line, col, "expected `arrow = [[...]]`"))?;
        let a = q.arrow_index(an.trim()).ok_or_else(|| Error::UnknownArrow(an.trim().to_string()))?;
        let rows = parse_matrix_literal(mat, line, col)?;
        let (r, c) = (dims[q.arrows[a].source], dims[q.arrows[a].target]);
        let values: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(cell, ccol)| parse_rational(cell).map_err(|_| syntax(line, *ccol, format!("bad entry `{}`", cell.trim()))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let shape_ok = if r == 0 {
            values.is_empty() || values.iter().all(|row| row.is_empty())
        } else {
            values.len() == r && values.iter().all(|row| row.len() == c)
        };
        if !shape_ok {
            return Err(syntax(
                line,
                col,
                format!("matrix for `{}` must be {} x {}", q.arrows[a].name, r, c),
            ));
        }
        let values = if r == 0 { Vec::new() } else { values };
        maps[a] = Some(values);
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(a, m)| {
            m.unwrap_or_else(|| {
                let (r, c) = (dims[q.arrows[a].source], dims[q.arrows[a].target]);
                vec![vec![BigRational::zero(); c]; r]
            })
        })
        .collect();
    Ok(ModuleDecl { name, dims, maps })
}

fn parse_object(alg: &Algebra, text: &str, line: usize, col: usize) -> Result<Vec<usize>> {
    let t = text.trim();
    if t == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in t.split('+') {
        let p = part.trim();
        let label = p
            .strip_prefix('P')
            .ok_or_else(|| syntax(line, col, format!("expected a projective `P<vertex>`, got `{p}`")))?;
        out.push(alg.quiver().vertex_index(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))?);
    }
    Ok(out)
}

/// Parses the body of a `complex` directive: `NAME: SRC -> TGT : MATRIX`.
fn parse_complex(alg: &Algebra, text: &str, line: usize, col: usize) -> Result<ComplexDecl> {
    let (name, body) = text
        .split_once(':')
        .ok_or_else(|| syntax(line, col, "expected `complex NAME: SRC -> TGT : MATRIX`"))?;
    let name = name.trim().to_string();
    if name.is_empty() || !is_ident(&name) {
        return Err(syntax(line, col, format!("bad complex name `{name}`")));
    }
    let decl = parse_complex_body(alg, body, line, col + name.len() + 1)?;
    Ok(ComplexDecl { name, ..decl })
}

/// Parses `SRC -> TGT : MATRIX` (the matrix may be a bare entry when 1 x 1).
pub(crate) fn parse_complex_body(alg: &Algebra, body: &str, line: usize, col: usize) -> Result<ComplexDecl> {
    let (objs, mat) = match body.split_once(':') {
        Some((o, m)) => (o, Some(m)),
        None => (body, None),
    };
    let (s, t) = objs
        .split_once("->")
        .ok_or_else(|| syntax(line, col, "expected `->` between source and target"))?;
    let src = parse_object(alg, s, line, col)?;
    let tgt = parse_object(alg, t, line, col)?;
    let q = alg.quiver();
    let entries = match mat {
        None => {
            if !src.is_empty() && !tgt.is_empty() {
                return Err(syntax(line, col, "differential matrix missing"));
            }
            vec![Vec::new(); src.len()]
        }
        Some(m) if !m.trim_start().starts_with('[') => {
            if src.len() != 1 || tgt.len() != 1 {
                return Err(syntax(line, col, "a bare entry needs a 1 x 1 differential"));
            }
            vec![vec![parse_combination(q, m, line, col, true)?]]
        }
        Some(m) => {
            let rows = parse_matrix_literal(m, line, col)?;
            let mut out = Vec::new();
            for row in rows {
                let mut cells = Vec::new();
                for (cell, ccol) in row {
                    cells.push(parse_combination(q, &cell, line, ccol, true)?);
                }
                out.push(cells);
            }
            if src.is_empty() && out.is_empty() {
                out = Vec::new();
            } else if out.len() != src.len() || out.iter().any(|r| r.len() != tgt.len()) {
                return Err(syntax(
                    line,
                    col,
                    format!("differential must be {} x {}", src.len(), tgt.len()),
                ));
            }
            out
        }
    };
    for (r, row) in entries.iter().enumerate() {
        for (c, terms) in row.iter().enumerate() {
            for (_, p) in terms {
                if p.source != src[r] || p.target != tgt[c] {
                    return Err(syntax(
                        line,
                        col,
                        format!(
                            "entry ({r},{c}) path {} must run from {} to {}",
                            p.display(q),
                            alg.label(src[r]),
                            alg.label(tgt[c])
                        ),
                    ));
                }
            }
        }
    }
    let entries = entries
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|terms| Relation::normalized_terms(terms))
                .collect()
        })
        .collect();
    Ok(ComplexDecl {
        name: String::new(),
        src,
        tgt,
        entries,
    })
}

impl Relation {
    /// Merges like terms and drops zeros, keeping first-appearance order.
    pub(crate) fn normalized_terms(terms: Vec<(BigRational, Path)>) -> Vec<(BigRational, Path)> {
        let mut merged: Vec<(BigRational, Path)> = Vec::new();
        for (c, p) in terms {
            match merged.iter_mut().find(|(_, m)| *m == p) {
                Some(slot) => slot.0 += c,
                None => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        merged
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A3: &str = "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";

    #[test]
    fn parses_a3() {
        let a = Algebra::parse(A3).unwrap();
        assert_eq!(a.dim(), 6);
        let names: Vec<String> = (0..a.dim()).map(|i| a.path_name(i)).collect();
        assert!(names.contains(&"a*b".to_string()));
    }

    #[test]
    fn reports_line_and_column() {
        let err = Algebra::parse("vertices 1 2\narrow a: 1 -> 2\nrelation a * ! \n").unwrap_err();
        match err {
            Error::Syntax { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn rejects_bad_relations() {
        let short = Algebra::parse("vertices 1 2\narrow a: 1 -> 2\nrelation a\n").unwrap_err();
        assert!(matches!(short, Error::ShortRelation(_)));
        let unknown = Algebra::parse("vertices 1 2\narrow a: 1 -> 2\nrelation a*z\n").unwrap_err();
        assert_eq!(unknown, Error::UnknownArrow("z".into()));
        let src = "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\narrow d: 2 -> 2\nrelation a*b - c*d\n";
        assert!(matches!(Algebra::parse(src).unwrap_err(), Error::NonParallel(_)));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let src = "# square\nvertices 1 2\narrow alpha: 1 -> 2\narrow beta: 2 -> 1\nrelation alpha*beta\nrelation beta*alpha\n\
                   module N: dims 1 1; alpha = [[1]]\ncomplex X1: P1 -> P2 : alpha\n";
        let doc = parse_document(src, None, 30).unwrap();
        let text = doc.serialize();
        let again = parse_document(&text, None, 30).unwrap().serialize();
        assert_eq!(text, again);
        assert!(text.contains("complex X1: P1 -> P2 : [[alpha]]"));
        assert!(text.contains("module N: dims 1 1; alpha = [[1]]; beta = [[0]]"));
    }
}
