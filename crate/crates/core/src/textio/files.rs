//! Line-oriented group, representation and system files.
//!
//! ```text
//! field p=2
//! group product(cyclic(2) as a, cyclic(2) as b)
//! dim 2
//! act a  = [[0,1],[1,0]]
//! act b  = [[1,0],[0,1]]
//! act ab = [[0,1],[1,0]]
//! ```
//!
//! `#` starts a comment. The group section is either `group table` followed
//! by an `elements` line and one `row` per element, or a `cyclic(n) as g`
//! group, or a `product(...)` of those.

use std::collections::BTreeMap;

use super::lexer::{reduce_decimal, tokenize, Tok, Token};
use super::terms::{identifiers, parse_atom_at};
use crate::caps::Caps;
use crate::error::{Error, Result, SourceSpan};
use crate::field::{Matrix, PrimeField};
use crate::group::FiniteGroup;
use crate::rep::Representation;
use crate::term::{Atom, Ctx, EquationSystem, FreeContext};

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    /// Whitespace-separated words with their spans.
    fn words(&self) -> Vec<(&str, SourceSpan)> {
        let mut out = Vec::new();
        let mut start = None;
        let mut col = 1;
        for (byte, c) in self.text.char_indices() {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, k))) => {
                    out.push((&self.text[b..byte], SourceSpan::new(self.number, k, col - k)));
                    start = None;
                }
                _ => {}
            }
            col += 1;
        }
        if let Some((b, k)) = start {
            out.push((&self.text[b..], SourceSpan::new(self.number, k, col - k)));
        }
        out
    }

    fn keyword(&self) -> Option<&str> {
        self.words().first().map(|(w, _)| *w)
    }

    fn start(&self) -> SourceSpan {
        self.words().first().map_or(SourceSpan::new(self.number, 1, 0), |(_, s)| *s)
    }

    fn end(&self) -> SourceSpan {
        SourceSpan::new(self.number, self.text.chars().count() + 1, 0)
    }
}

/// Non-blank lines with comments removed.
fn content_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| Line { number: i + 1, text: l.split('#').next().unwrap_or("") })
        .filter(|l| !l.text.trim().is_empty())
        .collect()
}

fn parse_err(span: SourceSpan, expected: impl Into<String>) -> Error {
    Error::Parse { span, expected: expected.into() }
}

/// Cursor over line tokens that reports positions on failure.
struct Toks {
    toks: Vec<Token>,
    pos: usize,
    end: SourceSpan,
}

impl Toks {
    fn new(line: &Line<'_>) -> Result<Self> {
        Ok(Toks { toks: tokenize(line.text, line.number, 1)?, pos: 0, end: line.end() })
    }

    fn here(&self) -> SourceSpan {
        self.toks.get(self.pos).map_or(self.end, |t| t.span)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn sym(&mut self, s: &str) -> Result<()> {
        let span = self.here();
        match self.next() {
            Some(Tok::Sym(x)) if x == s => Ok(()),
            _ => Err(parse_err(span, format!("`{s}`"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, SourceSpan)> {
        let span = self.here();
        match self.next() {
            Some(Tok::Ident(name)) => Ok((name, span)),
            _ => Err(parse_err(span, what)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let span = self.here();
        match self.next() {
            Some(Tok::Ident(name)) if name == kw => Ok(()),
            _ => Err(parse_err(span, format!("`{kw}`"))),
        }
    }

    /// A decimal in `lo..=hi`.
    fn number(&mut self, lo: u64, hi: u64, what: &str) -> Result<u64> {
        let span = self.here();
        match self.next() {
            Some(Tok::Int(d)) => {
                d.parse::<u64>().ok().filter(|n| (lo..=hi).contains(n)).ok_or_else(|| parse_err(span, what))
            }
            _ => Err(parse_err(span, what)),
        }
    }

    fn peek_sym(&self, s: &str) -> bool {
        matches!(self.toks.get(self.pos), Some(Token { tok: Tok::Sym(x), .. }) if *x == s)
    }

    fn peek_ident(&self, s: &str) -> bool {
        matches!(self.toks.get(self.pos), Some(Token { tok: Tok::Ident(x), .. }) if x == s)
    }

    fn done(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(parse_err(self.here(), "end of line"));
        }
        Ok(())
    }
}

fn parse_field(lines: &[Line<'_>], idx: &mut usize) -> Result<PrimeField> {
    let Some(line) = lines.get(*idx) else {
        return Err(parse_err(SourceSpan::new(1, 1, 0), "field"));
    };
    if line.keyword() != Some("field") {
        return Err(parse_err(line.start(), "field"));
    }
    let mut t = Toks::new(line)?;
    t.keyword("field")?;
    t.keyword("p")?;
    t.sym("=")?;
    let p_span = t.here();
    let p = t.number(0, u64::from(u32::MAX), "a prime modulus")?;
    t.done()?;
    *idx += 1;
    PrimeField::new(p as u32).map_err(|e| match e {
        Error::InvalidPrime(_) => parse_err(p_span, "a prime 2 <= p <= 97"),
        e => e,
    })
}

fn parse_cyclic(t: &mut Toks, max_order: usize) -> Result<FiniteGroup> {
    t.keyword("cyclic")?;
    t.sym("(")?;
    let n = t.number(1, max_order as u64, &format!("an order between 1 and {max_order}"))?;
    t.sym(")")?;
    let gen = if t.peek_ident("as") {
        t.next();
        t.ident("a generator name")?.0
    } else {
        "g".to_string()
    };
    Ok(FiniteGroup::cyclic_named(n as usize, &gen))
}

fn parse_group_section(lines: &[Line<'_>], idx: &mut usize) -> Result<FiniteGroup> {
    let max_order = Caps::default().max_group_order;
    let Some(line) = lines.get(*idx) else {
        let end = lines.last().map_or(SourceSpan::new(1, 1, 0), |l| SourceSpan::new(l.number + 1, 1, 0));
        return Err(parse_err(end, "group"));
    };
    if line.keyword() != Some("group") {
        return Err(parse_err(line.start(), "group"));
    }
    *idx += 1;
    let mut t = Toks::new(line)?;
    t.keyword("group")?;
    if t.peek_ident("table") {
        t.next();
        t.done()?;
        return parse_table(lines, idx, line, max_order);
    }
    let group = if t.peek_ident("product") {
        t.next();
        t.sym("(")?;
        let mut g = parse_cyclic(&mut t, max_order)?;
        while t.peek_sym(",") {
            t.next();
            let span = t.here();
            let h = parse_cyclic(&mut t, max_order)?;
            if g.order() * h.order() > max_order {
                return Err(parse_err(span, format!("a product of order at most {max_order}")));
            }
            g = FiniteGroup::product(&g, &h);
        }
        t.sym(")")?;
        g
    } else if t.peek_ident("cyclic") {
        parse_cyclic(&mut t, max_order)?
    } else {
        return Err(parse_err(t.here(), "`table`, `cyclic(n)` or `product(...)`"));
    };
    t.done()?;
    Ok(group)
}

fn parse_table(lines: &[Line<'_>], idx: &mut usize, header: &Line<'_>, max_order: usize) -> Result<FiniteGroup> {
    let missing = |idx: usize, what: &str| match lines.get(idx) {
        Some(l) => parse_err(l.start(), what),
        None => parse_err(SourceSpan::new(lines.last().map_or(1, |l| l.number + 1), 1, 0), what),
    };
    let Some(el) = lines.get(*idx).filter(|l| l.keyword() == Some("elements")) else {
        return Err(missing(*idx, "elements"));
    };
    let words = el.words();
    let names: Vec<String> = words[1..].iter().map(|(w, _)| w.to_string()).collect();
    if names.is_empty() || names.len() > max_order {
        return Err(parse_err(el.end(), format!("between 1 and {max_order} element names")));
    }
    let mut index = BTreeMap::new();
    for (i, (w, span)) in words[1..].iter().enumerate() {
        if index.insert(*w, i).is_some() {
            return Err(parse_err(*span, "distinct element names"));
        }
    }
    *idx += 1;
    let n = names.len();
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let Some(row) = lines.get(*idx).filter(|l| l.keyword() == Some("row")) else {
            return Err(missing(*idx, &format!("row ({n} rows in total)")));
        };
        let words = row.words();
        let mut entries = Vec::with_capacity(n);
        for (w, span) in &words[1..] {
            match index.get(w) {
                Some(&i) if entries.len() < n => entries.push(i),
                Some(_) => return Err(parse_err(*span, format!("{n} entries"))),
                None => return Err(parse_err(*span, "an element name from the `elements` line")),
            }
        }
        if entries.len() < n {
            return Err(parse_err(row.end(), format!("{n} entries")));
        }
        table.push(entries);
        *idx += 1;
    }
    FiniteGroup::from_table(names, table).map_err(|e| e.at_line(header.number))
}

/// A group section on its own.
pub fn parse_group_file(text: &str) -> Result<FiniteGroup> {
    let lines = content_lines(text);
    let mut idx = 0;
    let g = parse_group_section(&lines, &mut idx)?;
    if let Some(l) = lines.get(idx) {
        return Err(parse_err(l.start(), "end of file"));
    }
    Ok(g)
}

fn parse_matrix(t: &mut Toks, field: PrimeField, dim: usize) -> Result<Matrix> {
    let start = t.here();
    t.sym("[")?;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    loop {
        t.sym("[")?;
        let mut row = Vec::new();
        loop {
            let negative = t.peek_sym("-");
            if negative {
                t.next();
            }
            let span = t.here();
            let v = match t.next() {
                Some(Tok::Int(d)) => reduce_decimal(&d, field.modulus()),
                _ => return Err(parse_err(span, "an integer entry")),
            };
            row.push(if negative { field.neg(v) } else { v });
            if row.len() > dim {
                return Err(parse_err(span, format!("{dim} entries per row")));
            }
            if t.peek_sym(",") {
                t.next();
            } else {
                break;
            }
        }
        t.sym("]")?;
        if row.len() != dim {
            return Err(parse_err(start, format!("a {dim}x{dim} matrix")));
        }
        rows.push(row);
        if rows.len() > dim {
            return Err(parse_err(start, format!("a {dim}x{dim} matrix")));
        }
        if t.peek_sym(",") {
            t.next();
        } else {
            break;
        }
    }
    t.sym("]")?;
    if rows.len() != dim {
        return Err(parse_err(start, format!("a {dim}x{dim} matrix")));
    }
    Matrix::new(field, dim, dim, rows.concat())
}

pub fn parse_rep_file(text: &str) -> Result<Representation> {
    let lines = content_lines(text);
    let mut idx = 0;
    let field = parse_field(&lines, &mut idx)?;
    let group = parse_group_section(&lines, &mut idx)?;

    let Some(dim_line) = lines.get(idx).filter(|l| l.keyword() == Some("dim")) else {
        return Err(match lines.get(idx) {
            Some(l) => parse_err(l.start(), "dim"),
            None => parse_err(SourceSpan::new(lines.last().map_or(1, |l| l.number + 1), 1, 0), "dim"),
        });
    };
    let max_dim = Caps::default().max_dim;
    let mut t = Toks::new(dim_line)?;
    t.keyword("dim")?;
    let dim = t.number(1, max_dim as u64, &format!("a dimension between 1 and {max_dim}"))? as usize;
    t.done()?;
    idx += 1;

    let mut acts = Vec::new();
    let mut act_lines: BTreeMap<usize, usize> = BTreeMap::new();
    for line in &lines[idx..] {
        if line.keyword() != Some("act") {
            return Err(parse_err(line.start(), "`act <element> = [[...]]`"));
        }
        let words = line.words();
        let (name, name_span) = match words.get(1) {
            Some((w, s)) => {
                let name = w.split('=').next().unwrap_or("");
                (name, SourceSpan::new(s.line, s.column, name.chars().count()))
            }
            None => return Err(parse_err(line.end(), "an element name")),
        };
        let Some(g) = group.index_of(name).filter(|_| !name.is_empty()) else {
            return Err(parse_err(name_span, "an element of the group"));
        };
        if act_lines.insert(g, line.number).is_some() {
            return Err(parse_err(name_span, "each element at most once"));
        }
        let rest_col = name_span.column + name_span.length;
        let rest: String = line.text.chars().skip(rest_col - 1).collect();
        let mut t = Toks { toks: tokenize(&rest, line.number, rest_col)?, pos: 0, end: line.end() };
        t.sym("=")?;
        let m = parse_matrix(&mut t, field, dim)?;
        t.done()?;
        acts.push((g, m));
    }

    Representation::new(field, dim, &group, acts).map_err(|e| {
        let line = match &e {
            Error::NotAnAction { g, h } => [g, h]
                .iter()
                .filter_map(|n| group.index_of(n))
                .find_map(|i| act_lines.get(&i).copied())
                .unwrap_or(dim_line.number),
            _ => dim_line.number,
        };
        e.at_line(line)
    })
}

/// The table form of a group section.
pub fn serialize_group(g: &FiniteGroup) -> String {
    let mut out = String::from("group table\n");
    out.push_str(&format!("  elements {}\n", g.names().join(" ")));
    for row in g.table_rows() {
        let names: Vec<&str> = row.iter().map(|&i| g.name(i)).collect();
        out.push_str(&format!("  row {}\n", names.join(" ")));
    }
    out
}

/// Canonical file: table form, then one `act` line per non-identity element.
pub fn serialize_rep(rep: &Representation) -> String {
    let mut out = format!("field p={}\n", rep.field().modulus());
    out.push_str(&serialize_group(rep.group()));
    out.push_str(&format!("dim {}\n", rep.dim()));
    for g in rep.group().elements().skip(1) {
        out.push_str(&format!("act {} = {}\n", rep.group().name(g), rep.matrix(g)));
    }
    out
}

/// A system file: optional `xvars` / `yvars` headers, then one atom per
/// line, tagged `module:` or `group:` (the tag may be omitted).
///
/// Without headers the variables are sorted by the inline convention
/// (names starting with `x` are x-variables). With one header only, the
/// other list collects every remaining identifier.
pub fn parse_system_file(text: &str, field: PrimeField) -> Result<(Ctx, EquationSystem)> {
    let lines = content_lines(text);
    let mut headers: [Option<Vec<String>>; 2] = [None, None];
    let mut body: Vec<(&Line<'_>, Option<&str>, usize)> = Vec::new();
    for line in &lines {
        let words = line.words();
        let kw = words[0].0;
        let slot = match kw {
            "xvars" => Some(0),
            "yvars" => Some(1),
            _ => None,
        };
        if let Some(slot) = slot {
            if !body.is_empty() || headers[slot].is_some() {
                return Err(parse_err(words[0].1, "an atom (headers come first, once each)"));
            }
            headers[slot] = Some(words[1..].iter().map(|(w, _)| w.to_string()).collect());
            continue;
        }
        let trimmed = line.text.trim_start();
        let lead = line.text.len() - trimmed.len();
        let (tag, rest_byte) = match ["module:", "group:"].iter().find(|t| trimmed.starts_with(**t)) {
            Some(t) => (Some(&t[..t.len() - 1]), lead + t.len()),
            None => (None, lead),
        };
        body.push((line, tag, rest_byte));
    }

    let mut seen = Vec::new();
    for (line, _, rest) in &body {
        let col = 1 + line.text[..*rest].chars().count();
        for (name, _) in identifiers(&line.text[*rest..], line.number, col)? {
            if !seen.contains(&name) {
                seen.push(name);
            }
        }
    }
    let [xh, yh] = headers;
    let (xs, ys) = match (xh, yh) {
        (Some(x), Some(y)) => (x, y),
        (Some(x), None) => {
            let y = seen.iter().filter(|n| !x.contains(n)).cloned().collect();
            (x, y)
        }
        (None, Some(y)) => {
            let x = seen.iter().filter(|n| !y.contains(n)).cloned().collect();
            (x, y)
        }
        (None, None) => seen.iter().cloned().partition(|n| n.starts_with('x')),
    };
    let header_line = lines.first().map_or(1, |l| l.number);
    let ctx = FreeContext::new(field, xs, ys).map_err(|e| e.at_line(header_line))?;

    let mut sys = EquationSystem::empty(&ctx);
    for (line, tag, rest) in body {
        let col = 1 + line.text[..rest].chars().count();
        let atom = parse_atom_at(&line.text[rest..], &ctx, line.number, col)?;
        let mismatched = matches!((tag, &atom), (Some("module"), Atom::Group(_)) | (Some("group"), Atom::Module(_)));
        if mismatched {
            let atom_text = line.text[rest..].trim();
            let skipped = line.text[rest..].chars().take_while(|c| c.is_whitespace()).count();
            return Err(parse_err(
                SourceSpan::new(line.number, col + skipped, atom_text.chars().count()),
                format!("a {} atom after `{}:`", tag.unwrap_or_default(), tag.unwrap_or_default()),
            ));
        }
        sys = sys.with(atom)?;
    }
    Ok((ctx, sys))
}

pub fn serialize_system(sys: &EquationSystem) -> String {
    let ctx = sys.context();
    let mut out = format!("xvars {}\nyvars {}\n", ctx.xvars().join(" "), ctx.yvars().join(" "));
    for atom in sys.atoms() {
        let tag = match atom {
            Atom::Module(_) => "module",
            Atom::Group(_) => "group",
        };
        out.push_str(&format!("{tag}: {atom}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::ModuleElement;

    const R2: &str = "\
field p=2
group table            # identity first
  elements 1 a b ab
  row 1 a b ab
  row a 1 ab b
  row b ab 1 a
  row ab b a 1
dim 2
act a  = [[0,1],[1,0]]
act b  = [[1,0],[0,1]]
act ab = [[0,1],[1,0]]  # every non-identity element once
";

    #[test]
    fn second_representation_from_its_file() {
        let r = parse_rep_file(R2).unwrap();
        assert_eq!(r.group().names(), ["1", "a", "b", "ab"]);
        assert!(r.matrix(2).is_identity());
        assert_eq!(r.matrix(1).to_string(), "[[0,1],[1,0]]");
        let product = R2.replace(
            "group table            # identity first\n  elements 1 a b ab\n  row 1 a b ab\n  row a 1 ab b\n  row b ab 1 a\n  row ab b a 1\n",
            "group product(cyclic(2) as a, cyclic(2) as b)\n",
        );
        let r2 = parse_rep_file(&product).unwrap();
        assert_eq!(r2, r);
        assert_eq!(parse_rep_file(&serialize_rep(&r)).unwrap(), r);
    }

    #[test]
    fn rep_file_errors() {
        assert_eq!(
            parse_rep_file("").unwrap_err(),
            Error::Parse { span: SourceSpan::new(1, 1, 0), expected: "field".into() }
        );
        let e = parse_rep_file("field p=3\ngroup cyclic(2) as a\ndim 2\nact a = [[1,1],[0,1]]\n").unwrap_err();
        assert!(matches!(&e, Error::AtLine { line: 4, source } if matches!(**source, Error::NotAnAction { .. })));
        let e = parse_rep_file("field p=4\n").unwrap_err();
        assert_eq!(e.span(), Some(SourceSpan::new(1, 9, 1)));
        let e = parse_rep_file("field p=2\ngroup cyclic(2) as a\ndim 2\nact c = [[1,0],[0,1]]\n").unwrap_err();
        assert_eq!(e.span(), Some(SourceSpan::new(4, 5, 1)));
        let e = parse_rep_file("field p=2\ngroup cyclic(2) as a\ndim 2\nact a = [[1,0],[0,1,1]]\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_rep_file("field p=2\ngroup cyclic(2) as a\ndim 2\n").unwrap_err();
        assert!(matches!(e, Error::AtLine { line: 3, .. }));
        let e = parse_rep_file("field p=2\ngroup table\n elements 1 a\n row 1 a\n row a a\ndim 1\n").unwrap_err();
        assert!(matches!(e, Error::AtLine { line: 2, .. }));
    }

    #[test]
    fn group_files() {
        let g = parse_group_file("group product(cyclic(2) as a, cyclic(3) as c)\n").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(parse_group_file(&serialize_group(&g)).unwrap(), g);
        assert!(parse_group_file("group cyclic(0)").is_err());
        assert!(parse_group_file("group cyclic(100000)").is_err());
    }

    #[test]
    fn system_files() {
        let f = PrimeField::new(2).unwrap();
        let (ctx, sys) = parse_system_file("xvars x\nyvars y\nmodule: x*y - x = 0\ngroup: y^2 = 1\n", f).unwrap();
        assert_eq!(sys.module_part().len(), 1);
        assert_eq!(sys.group_part().len(), 1);
        assert_eq!(parse_system_file(&serialize_system(&sys), f).unwrap(), (ctx.clone(), sys));

        let (ctx2, sys2) = parse_system_file("module: x*y - x = 0\n", f).unwrap();
        assert_eq!(ctx2, ctx);
        assert_eq!(
            sys2.module_part().iter().next().unwrap(),
            &ModuleElement::var(&ctx, 0)
                .unwrap()
                .sub(
                    &ModuleElement::var(&ctx, 0)
                        .unwrap()
                        .act_word(&crate::term::GroupWord::var(&ctx, 0).unwrap())
                        .unwrap()
                )
                .unwrap()
        );

        let e = parse_system_file("group: x = 0\n", f).unwrap_err();
        assert_eq!(e.span().map(|s| (s.line, s.column)), Some((1, 8)));
        let e = parse_system_file("module: x*z = 0\nxvars x\n", f).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }
}
