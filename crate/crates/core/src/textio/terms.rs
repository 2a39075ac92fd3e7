//! Parser and printer for words, group-ring elements, module elements,
//! atoms and quasi-identities.
//!
//! The parser evaluates as it goes, with two sorts of value: group-ring
//! elements (integers, y-variables and their products and sums) and module
//! elements (anything containing an x-variable). Products are typed the way
//! the module is: `x · r` is the right action, `c · x` needs `c` to be a
//! scalar, and `x · x'` is rejected.

use std::collections::BTreeSet;

use super::lexer::{reduce_decimal, tokenize, Tok, Token};
use crate::error::{Error, Result, SourceSpan};
use crate::field::PrimeField;
use crate::term::{Atom, Ctx, FreeContext, GroupWord, ModuleElement, QuasiIdentity, RingElement, Terms, Word};

/// Largest accepted exponent literal, and largest word length a power may produce.
const MAX_POWER: u64 = 1_000_000;
/// Largest number of term products one multiplication may perform.
const MAX_PRODUCT_WORK: usize = 1 << 20;

/// A parsed term of either sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Module(ModuleElement),
    Group(GroupWord),
}

#[derive(Debug, Clone)]
enum Val {
    Ring(RingElement),
    Module(ModuleElement),
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a Ctx,
    end: SourceSpan,
}

fn span_between(a: SourceSpan, b: SourceSpan) -> SourceSpan {
    if a.line == b.line && b.column >= a.column {
        SourceSpan::new(a.line, a.column, b.column + b.length - a.column)
    } else {
        a
    }
}

impl<'a> Parser<'a> {
    fn new(text: &str, ctx: &'a Ctx, line: usize, column: usize) -> Result<Self> {
        let toks = tokenize(text, line, column)?;
        let end = match toks.last() {
            Some(t) => SourceSpan::new(t.span.line, t.span.column + t.span.length, 0),
            None => SourceSpan::new(line, column, 0),
        };
        Ok(Parser { toks, pos: 0, ctx, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> SourceSpan {
        self.toks.get(self.pos).map_or(self.end, |t| t.span)
    }

    fn last(&self) -> SourceSpan {
        self.pos.checked_sub(1).and_then(|i| self.toks.get(i)).map_or(self.end, |t| t.span)
    }

    fn expected(&self, what: &str) -> Error {
        Error::Parse { span: self.here(), expected: what.into() }
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.expected(&format!("`{sym}`")))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(self.expected("end of input"));
        }
        Ok(())
    }

    fn field(&self) -> PrimeField {
        self.ctx.field()
    }

    fn expr(&mut self) -> Result<(Val, SourceSpan)> {
        let start = self.here();
        let negate = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        let (mut acc, _) = self.term()?;
        if negate {
            acc = neg(acc);
        }
        loop {
            let negate = if self.eat("+") {
                false
            } else if self.eat("-") {
                true
            } else {
                break;
            };
            let (rhs, span) = self.term()?;
            let rhs = if negate { neg(rhs) } else { rhs };
            acc = match (acc, rhs) {
                (Val::Ring(a), Val::Ring(b)) => Val::Ring(a.add(&b)?),
                (Val::Module(a), Val::Module(b)) => Val::Module(a.add(&b)?),
                _ => {
                    return Err(Error::Parse {
                        span,
                        expected: "a term of the same sort (every module term needs an x-variable)".into(),
                    })
                }
            };
        }
        Ok((acc, span_between(start, self.last())))
    }

    fn term(&mut self) -> Result<(Val, SourceSpan)> {
        let start = self.here();
        let (mut acc, _) = self.factor()?;
        while self.eat("*") {
            let (rhs, span) = self.factor()?;
            acc = self.mul(acc, rhs, span)?;
        }
        Ok((acc, span_between(start, self.last())))
    }

    fn mul(&self, a: Val, b: Val, span: SourceSpan) -> Result<Val> {
        let work = |x: usize, y: usize| {
            if x.saturating_mul(y) > MAX_PRODUCT_WORK {
                Err(Error::Parse { span, expected: "a product with fewer terms".into() })
            } else {
                Ok(())
            }
        };
        match (a, b) {
            (Val::Ring(a), Val::Ring(b)) => {
                work(a.terms().len(), b.terms().len())?;
                Ok(Val::Ring(a.mul(&b)?))
            }
            (Val::Module(u), Val::Ring(r)) => {
                work(u.term_count(), r.terms().len())?;
                Ok(Val::Module(u.act(&r)?))
            }
            (Val::Ring(c), Val::Module(u)) => match scalar_of(&c) {
                Some(k) => Ok(Val::Module(u.scale(i64::from(k)))),
                None => Err(Error::Parse {
                    span,
                    expected: "a scalar before the x-variable (group-ring factors go on the right)".into(),
                }),
            },
            (Val::Module(_), Val::Module(_)) => Err(Error::Parse {
                span,
                expected: "a group-ring factor (two x-variables cannot be multiplied)".into(),
            }),
        }
    }

    fn factor(&mut self) -> Result<(Val, SourceSpan)> {
        let start = self.here();
        let (base, _) = self.primary()?;
        if !self.eat("^") {
            return Ok((base, span_between(start, self.last())));
        }
        let negative = self.eat("-");
        let exp_span = self.here();
        let e = match self.peek() {
            Some(Tok::Int(d)) => d.parse::<u64>().ok().filter(|&e| e <= MAX_POWER),
            _ => return Err(self.expected("an integer exponent")),
        };
        let Some(e) = e else {
            return Err(Error::Parse { span: exp_span, expected: format!("an exponent of at most {MAX_POWER}") });
        };
        self.pos += 1;
        let e = if negative { -(e as i64) } else { e as i64 };
        let span = span_between(start, self.last());
        let Val::Ring(r) = base else {
            return Err(Error::Parse {
                span,
                expected: "a group-ring base for `^` (module elements have no powers)".into(),
            });
        };
        Ok((Val::Ring(self.ring_pow(&r, e, span)?), span))
    }

    fn ring_pow(&self, r: &RingElement, e: i64, span: SourceSpan) -> Result<RingElement> {
        let f = self.field();
        let fail = |what: &str| Error::Parse { span, expected: what.into() };
        if e == 0 {
            return Ok(RingElement::one(self.ctx));
        }
        if r.is_zero() {
            return if e > 0 { Ok(r.clone()) } else { Err(fail("an invertible base for a negative exponent")) };
        }
        if r.terms().len() == 1 {
            let (w, &c) = r.terms().iter().next().expect("one term");
            if w.len().saturating_mul(e.unsigned_abs()) > MAX_POWER {
                return Err(fail(&format!("a power of length at most {MAX_POWER}")));
            }
            let base = if e < 0 { w.inv() } else { w.clone() };
            let word = Word::reduce(std::iter::repeat_n(base.runs(), e.unsigned_abs() as usize).flatten().copied());
            let c = if e < 0 { f.inv(c) } else { c };
            let k = (e.unsigned_abs() % u64::from(f.modulus() - 1)) as usize;
            let coeff = (0..k).fold(1, |acc, _| f.mul(acc, c));
            return RingElement::from_terms(self.ctx, [(word, i64::from(coeff))]);
        }
        if e < 0 {
            return Err(fail("an invertible base (a single term) for a negative exponent"));
        }
        let mut acc = RingElement::one(self.ctx);
        for _ in 0..e {
            if acc.terms().len().saturating_mul(r.terms().len()) > MAX_PRODUCT_WORK {
                return Err(fail("a power with fewer terms"));
            }
            acc = acc.mul(r)?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<(Val, SourceSpan)> {
        let span = self.here();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ctx.xvar(&name) {
                    return Ok((Val::Module(ModuleElement::var(self.ctx, i)?), span));
                }
                if let Some(i) = self.ctx.yvar(&name) {
                    let w = GroupWord::var(self.ctx, i)?;
                    return Ok((Val::Ring(RingElement::monomial(&w, 1)), span));
                }
                Err(Error::UnknownVariable { name, span })
            }
            Some(Tok::Int(d)) => {
                self.pos += 1;
                let c = reduce_decimal(&d, self.field().modulus());
                let one = GroupWord::identity(self.ctx);
                Ok((Val::Ring(RingElement::monomial(&one, i64::from(c))), span))
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let (v, _) = self.expr()?;
                self.expect(")")?;
                Ok((v, span_between(span, self.last())))
            }
            _ => Err(self.expected("a variable, an integer or `(`")),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let (v, span) = self.expr()?;
        self.expect("=")?;
        let rhs = self.here();
        let kind = match self.peek() {
            Some(Tok::Int(d)) if d == "0" => 0,
            Some(Tok::Int(d)) if d == "1" => 1,
            _ => return Err(self.expected("`0` or `1`")),
        };
        self.pos += 1;
        match (kind, v) {
            (0, Val::Module(u)) => Ok(Atom::Module(u)),
            (0, Val::Ring(r)) if r.is_zero() => Ok(Atom::Module(ModuleElement::zero(self.ctx))),
            (1, Val::Ring(r)) if r.as_word().is_some() => Ok(Atom::Group(r.as_word().expect("checked"))),
            (0, _) => Err(Error::Parse { span, expected: "a module element before `= 0`".into() }),
            _ => Err(Error::Parse {
                span: if kind == 1 { span } else { rhs },
                expected: "a group word before `= 1`".into(),
            }),
        }
    }

    fn qid(&mut self) -> Result<QuasiIdentity> {
        let mut premises = Vec::new();
        if !self.eat("=>") {
            premises.push(self.atom()?);
            while self.eat("&") {
                premises.push(self.atom()?);
            }
            if self.peek().is_none() && premises.len() == 1 {
                return QuasiIdentity::new(Vec::new(), premises.pop().expect("one"));
            }
            self.expect("=>")?;
        }
        let conclusion = self.atom()?;
        self.finish()?;
        QuasiIdentity::new(premises, conclusion)
    }
}

fn neg(v: Val) -> Val {
    match v {
        Val::Ring(r) => Val::Ring(r.neg()),
        Val::Module(u) => Val::Module(u.neg()),
    }
}

/// The field element a constant group-ring element stands for.
fn scalar_of(r: &RingElement) -> Option<u32> {
    match r.terms().len() {
        0 => Some(0),
        1 => r.terms().get(&Word::identity()).copied(),
        _ => None,
    }
}

fn parse_value(text: &str, ctx: &Ctx) -> Result<Val> {
    let mut p = Parser::new(text, ctx, 1, 1)?;
    let (v, _) = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// A module element or a group word. `0` is the zero module element and
/// `1` the empty word.
pub fn parse_term(text: &str, ctx: &Ctx) -> Result<Term> {
    match parse_value(text, ctx)? {
        Val::Module(u) => Ok(Term::Module(u)),
        Val::Ring(r) if r.is_zero() => Ok(Term::Module(ModuleElement::zero(ctx))),
        Val::Ring(r) => match r.as_word() {
            Some(w) => Ok(Term::Group(w)),
            None => Err(Error::Parse {
                span: SourceSpan::new(1, 1, text.chars().count()),
                expected: "a module element or a group word".into(),
            }),
        },
    }
}

pub fn parse_ring(text: &str, ctx: &Ctx) -> Result<RingElement> {
    match parse_value(text, ctx)? {
        Val::Ring(r) => Ok(r),
        Val::Module(_) => Err(Error::Parse {
            span: SourceSpan::new(1, 1, text.chars().count()),
            expected: "a group-ring element (no x-variables)".into(),
        }),
    }
}

pub fn parse_module(text: &str, ctx: &Ctx) -> Result<ModuleElement> {
    match parse_term(text, ctx)? {
        Term::Module(u) => Ok(u),
        Term::Group(_) => {
            Err(Error::Parse { span: SourceSpan::new(1, 1, text.chars().count()), expected: "a module element".into() })
        }
    }
}

pub fn parse_word(text: &str, ctx: &Ctx) -> Result<GroupWord> {
    match parse_value(text, ctx)? {
        Val::Ring(r) if r.as_word().is_some() => Ok(r.as_word().expect("checked")),
        _ => Err(Error::Parse { span: SourceSpan::new(1, 1, text.chars().count()), expected: "a group word".into() }),
    }
}

pub(crate) fn parse_atom_at(text: &str, ctx: &Ctx, line: usize, column: usize) -> Result<Atom> {
    let mut p = Parser::new(text, ctx, line, column)?;
    let a = p.atom()?;
    p.finish()?;
    Ok(a)
}

/// `u = 0` or `w = 1`.
pub fn parse_atom(text: &str, ctx: &Ctx) -> Result<Atom> {
    parse_atom_at(text, ctx, 1, 1)
}

/// `a₁ & … & aₙ => a₀`. A bare atom, or `=> a₀`, has no premises.
pub fn parse_qid(text: &str, ctx: &Ctx) -> Result<QuasiIdentity> {
    Parser::new(text, ctx, 1, 1)?.qid()
}

pub(crate) fn identifiers(text: &str, line: usize, column: usize) -> Result<Vec<(String, SourceSpan)>> {
    Ok(tokenize(text, line, column)?
        .into_iter()
        .filter_map(|t| match t.tok {
            Tok::Ident(name) => Some((name, t.span)),
            _ => None,
        })
        .collect())
}

/// Context for an inline formula: identifiers starting with `x` are
/// x-variables, all others y-variables, each list in order of first
/// appearance.
pub fn infer_context(text: &str, field: PrimeField) -> Result<Ctx> {
    let mut seen = BTreeSet::new();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for (name, _) in identifiers(text, 1, 1)? {
        if seen.insert(name.clone()) {
            if name.starts_with('x') {
                xs.push(name);
            } else {
                ys.push(name);
            }
        }
    }
    FreeContext::new(field, xs, ys)
}

pub fn serialize_word(ctx: &FreeContext, word: &Word) -> String {
    if word.is_identity() {
        return "1".into();
    }
    word.runs()
        .iter()
        .map(|&(v, e)| {
            let name = &ctx.yvars()[v];
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn push_signed(out: &mut String, negative: bool, first: bool, body: &str) {
    match (first, negative) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    out.push_str(body);
}

/// Terms in descending shortlex order with signed coefficients, e.g. `y - 1`.
pub fn serialize_ring(ctx: &FreeContext, terms: &Terms) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let f = ctx.field();
    let mut out = String::new();
    for (i, (w, &c)) in terms.iter().rev().enumerate() {
        let s = f.signed(c);
        let m = s.unsigned_abs();
        let body = match (w.is_identity(), m) {
            (true, _) => m.to_string(),
            (false, 1) => serialize_word(ctx, w),
            (false, _) => format!("{m}*{}", serialize_word(ctx, w)),
        };
        push_signed(&mut out, s < 0, i == 0, &body);
    }
    out
}

/// Parts in x-order. A one-term part prints as `[c*]x[*w]`, a longer one as
/// `x*(ring element)`.
pub fn serialize_module(u: &ModuleElement) -> String {
    let ctx = u.context();
    if u.is_zero() {
        return "0".into();
    }
    let f = ctx.field();
    let mut out = String::new();
    for (i, (&x, terms)) in u.parts().iter().enumerate() {
        let name = &ctx.xvars()[x];
        if terms.len() == 1 {
            let (w, &c) = terms.iter().next().expect("one term");
            let s = f.signed(c);
            let m = s.unsigned_abs();
            let mut body = if m == 1 { name.clone() } else { format!("{m}*{name}") };
            if !w.is_identity() {
                body = format!("{body}*{}", serialize_word(ctx, w));
            }
            push_signed(&mut out, s < 0, i == 0, &body);
        } else {
            push_signed(&mut out, false, i == 0, &format!("{name}*({})", serialize_ring(ctx, terms)));
        }
    }
    out
}

pub fn serialize_atom(a: &Atom) -> String {
    a.to_string()
}

pub fn serialize_qid(q: &QuasiIdentity) -> String {
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32) -> Ctx {
        FreeContext::standard(PrimeField::new(p).unwrap(), 1, 1)
    }

    #[test]
    fn witness_formula_parses() {
        let c = ctx(2);
        let q = parse_qid("x*y - x = 0 => y = 1", &c).unwrap();
        assert_eq!(q.premises().len(), 1);
        let Atom::Module(u) = &q.premises()[0] else { panic!() };
        assert_eq!(u.part(0).terms().len(), 2);
        assert_eq!(q.conclusion(), &Atom::Group(GroupWord::var(&c, 0).unwrap()));
        assert_eq!(q.to_string(), "x*(y + 1) = 0 => y = 1");
    }

    #[test]
    fn free_reduction_in_the_parser() {
        let c = ctx(2);
        assert_eq!(parse_atom("y*y^-1 = 1", &c).unwrap(), Atom::Group(GroupWord::identity(&c)));
    }

    #[test]
    fn coefficients_collect_mod_p() {
        let c = ctx(3);
        let u = parse_module("x*(2*y + 1)", &c).unwrap();
        let y = GroupWord::var(&c, 0).unwrap();
        let expected = RingElement::monomial(&y, 2).add(&RingElement::one(&c)).unwrap();
        assert_eq!(u.part(0), expected);
        assert_eq!(u.to_string(), "x*(-y + 1)");
        assert_eq!(parse_module("x*(-y + 1)", &c).unwrap(), u);
        assert_eq!(parse_module("5*x + x", &c).unwrap(), ModuleElement::zero(&c));
    }

    #[test]
    fn printing_examples() {
        let c = ctx(5);
        let u = parse_module("x*(y - 1)", &c).unwrap();
        assert_eq!(u.to_string(), "x*(y - 1)");
        assert_eq!(parse_module("-2*x*y^-2", &c).unwrap().to_string(), "-2*x*y^-2");
        assert_eq!(parse_term("1", &c).unwrap(), Term::Group(GroupWord::identity(&c)));
        assert_eq!(parse_term("0", &c).unwrap(), Term::Module(ModuleElement::zero(&c)));
        let two = FreeContext::standard(PrimeField::new(5).unwrap(), 2, 2);
        let v = parse_module("x1*y1*y2^3 - x2 + x2*(y1*y2)^-1", &two).unwrap();
        assert_eq!(v.to_string(), "x1*y1*y2^3 + x2*(y2^-1*y1^-1 - 1)");
        assert_eq!(parse_module(&v.to_string(), &two).unwrap(), v);
    }

    #[test]
    fn sort_errors_have_spans() {
        let c = ctx(2);
        let err = parse_module("x + y", &c).unwrap_err();
        assert_eq!(err.span(), Some(SourceSpan::new(1, 5, 1)));
        let err = parse_module("y*x", &c).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_module("x*x", &c).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_atom("x*z = 0", &c).unwrap_err();
        assert_eq!(err, Error::UnknownVariable { name: "z".into(), span: SourceSpan::new(1, 3, 1) });
        assert!(parse_atom("y = 0", &c).is_err());
        assert!(parse_atom("x = 1", &c).is_err());
        assert!(parse_qid("", &c).is_err());
        assert!(parse_qid("x = 0 =>", &c).is_err());
        assert!(parse_term("y^99999999999999999999", &c).is_err());
    }

    #[test]
    fn premise_free_formulas() {
        let c = ctx(2);
        let a = parse_qid("=> 1 = 1", &c).unwrap();
        let b = parse_qid("1 = 1", &c).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "=> 1 = 1");
    }

    #[test]
    fn inferred_contexts() {
        let f = PrimeField::new(2).unwrap();
        let c = infer_context("x2*y - x1*z = 0 & z = 1 => y = 1", f).unwrap();
        assert_eq!(c.xvars(), ["x2", "x1"]);
        assert_eq!(c.yvars(), ["y", "z"]);
    }

    #[test]
    fn powers() {
        let c = ctx(3);
        assert_eq!(parse_ring("(y + 1)^2", &c).unwrap().to_string(), "y^2 - y + 1");
        assert_eq!(parse_ring("(2*y)^-1", &c).unwrap().to_string(), "-y^-1");
        assert!(parse_ring("(y + 1)^-1", &c).is_err());
        assert_eq!(parse_ring("y^0", &c).unwrap(), RingElement::one(&c));
    }
}
