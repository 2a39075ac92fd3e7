//! Canonical arithmetic in the free representation `(XKF(Y), F(Y))`.
//!
//! * [`GroupWord`]: freely reduced words of `F(Y)`, stored run-length.
//! * [`RingElement`]: finite `GF(p)`-combinations of words, the group ring `KF(Y)`.
//! * [`ModuleElement`]: the free right `KF(Y)`-module on the basis `X`.
//!
//! Zero coefficients and zero parts are erased eagerly, so equality is
//! structural. Every element carries its [`FreeContext`]; mixing contexts is
//! an error.
//!
//! A homomorphism out of the free representation is exactly a choice of
//! images for the generators, which is what an [`Assignment`] holds. The
//! `eval_*` functions compute the unique extension.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Vector};
use crate::rep::Representation;

/// The generator sets `X` (vector sort) and `Y` (group sort), plus the field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeContext {
    field: PrimeField,
    xvars: Vec<String>,
    yvars: Vec<String>,
}

pub type Ctx = Arc<FreeContext>;

impl FreeContext {
    pub fn new(field: PrimeField, xvars: Vec<String>, yvars: Vec<String>) -> Result<Ctx> {
        let mut seen = BTreeSet::new();
        for name in xvars.iter().chain(&yvars) {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not an identifier")));
            }
            if !seen.insert(name) {
                return Err(Error::InvalidContext(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Arc::new(FreeContext { field, xvars, yvars }))
    }

    /// Context with `X = {x1..xn}` and `Y = {y1..ym}`, or `x`/`y` when the count is one.
    pub fn standard(field: PrimeField, nx: usize, ny: usize) -> Ctx {
        let names = |prefix: &str, n: usize| -> Vec<String> {
            if n == 1 {
                vec![prefix.to_string()]
            } else {
                (1..=n).map(|i| format!("{prefix}{i}")).collect()
            }
        };
        FreeContext::new(field, names("x", nx), names("y", ny)).expect("distinct standard names")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn xvars(&self) -> &[String] {
        &self.xvars
    }

    pub fn yvars(&self) -> &[String] {
        &self.yvars
    }

    pub fn xvar(&self, name: &str) -> Option<usize> {
        self.xvars.iter().position(|n| n == name)
    }

    pub fn yvar(&self, name: &str) -> Option<usize> {
        self.yvars.iter().position(|n| n == name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn same_ctx(a: &Ctx, b: &Ctx) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// A freely reduced word as `(variable, exponent)` runs. Adjacent runs have
/// distinct variables and no exponent is zero; the empty word is `1`.
///
/// Ordered shortlex: by total length `Σ|e|`, then letter by letter with
/// `y < y⁻¹ < z < z⁻¹ …` in variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(var: usize, exp: i64) -> Self {
        Word::reduce([(var, exp)])
    }

    /// Free reduction of an arbitrary run list. Idempotent.
    pub fn reduce(raw: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut stack: Vec<(usize, i64)> = Vec::new();
        for (v, e) in raw {
            if e == 0 {
                continue;
            }
            match stack.last_mut() {
                Some((tv, te)) if *tv == v => {
                    *te += e;
                    if *te == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((v, e)),
            }
        }
        Word(stack)
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> u64 {
        self.0.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(&other.0).copied())
    }

    pub fn inv(&self) -> Word {
        Word(self.0.iter().rev().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().map(|&(v, _)| v).max()
    }

    fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.0.iter().flat_map(|&(v, e)| std::iter::repeat_n((v, e < 0), e.unsigned_abs() as usize))
    }

    /// Every reduced word over `vars` variables of length at most `max_len`, in shortlex order.
    pub fn all_up_to(vars: usize, max_len: u64) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        let mut level = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &level {
                for v in 0..vars {
                    for e in [1, -1] {
                        if let Some(&(lv, le)) = w.0.last() {
                            if lv == v && le.signum() != e {
                                continue;
                            }
                        }
                        next.push(w.mul(&Word::letter(v, e)));
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficients of a group-ring element, no zeros stored.
pub type Terms = BTreeMap<Word, u32>;

fn terms_add_into(field: PrimeField, acc: &mut Terms, word: &Word, coeff: u32) {
    if coeff == 0 {
        return;
    }
    let entry = acc.entry(word.clone()).or_insert(0);
    *entry = field.add(*entry, coeff);
    if *entry == 0 {
        acc.remove(word);
    }
}

fn terms_add(field: PrimeField, a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (w, &c) in b {
        terms_add_into(field, &mut out, w, c);
    }
    out
}

fn terms_scale(field: PrimeField, a: &Terms, lambda: u32) -> Terms {
    let lambda = lambda % field.modulus();
    if lambda == 0 {
        return Terms::new();
    }
    a.iter().map(|(w, &c)| (w.clone(), field.mul(c, lambda))).collect()
}

fn terms_mul(field: PrimeField, a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (u, &c) in a {
        for (v, &d) in b {
            terms_add_into(field, &mut out, &u.mul(v), field.mul(c, d));
        }
    }
    out
}

/// An element of `F(Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    ctx: Ctx,
    word: Word,
}

impl GroupWord {
    pub fn identity(ctx: &Ctx) -> Self {
        GroupWord { ctx: ctx.clone(), word: Word::identity() }
    }

    /// The generator `y_i`.
    pub fn var(ctx: &Ctx, i: usize) -> Result<Self> {
        GroupWord::from_word(ctx, Word::letter(i, 1))
    }

    /// Reduced word from raw `(variable, exponent)` runs.
    pub fn from_raw(ctx: &Ctx, raw: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        GroupWord::from_word(ctx, Word::reduce(raw))
    }

    pub fn from_word(ctx: &Ctx, word: Word) -> Result<Self> {
        if let Some(v) = word.max_var() {
            if v >= ctx.yvars.len() {
                return Err(Error::IndexOutOfRange { what: "y-variable", index: v, size: ctx.yvars.len() });
            }
        }
        Ok(GroupWord { ctx: ctx.clone(), word })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_identity()
    }

    pub fn mul(&self, other: &GroupWord) -> Result<GroupWord> {
        same_ctx(&self.ctx, &other.ctx)?;
        Ok(GroupWord { ctx: self.ctx.clone(), word: self.word.mul(&other.word) })
    }

    pub fn inv(&self) -> GroupWord {
        GroupWord { ctx: self.ctx.clone(), word: self.word.inv() }
    }

    pub fn pow(&self, e: i64) -> GroupWord {
        let base = if e < 0 { self.word.inv() } else { self.word.clone() };
        let word = (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base));
        GroupWord { ctx: self.ctx.clone(), word }
    }
}

impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word).then_with(|| self.ctx.cmp(&other.ctx))
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the group ring `KF(Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ctx: Ctx,
    terms: Terms,
}

impl RingElement {
    pub fn zero(ctx: &Ctx) -> Self {
        RingElement { ctx: ctx.clone(), terms: Terms::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        RingElement::monomial(&GroupWord::identity(ctx), 1)
    }

    pub fn monomial(word: &GroupWord, coeff: i64) -> Self {
        let field = word.ctx.field;
        let mut terms = Terms::new();
        terms_add_into(field, &mut terms, &word.word, field.reduce(coeff));
        RingElement { ctx: word.ctx.clone(), terms }
    }

    /// Builds from `(word, coefficient)` pairs, collecting like terms mod p.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Word, i64)>) -> Result<Self> {
        let mut out = Terms::new();
        for (w, c) in terms {
            GroupWord::from_word(ctx, w.clone())?;
            terms_add_into(ctx.field, &mut out, &w, ctx.field.reduce(c));
        }
        Ok(RingElement { ctx: ctx.clone(), terms: out })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        same_ctx(&self.ctx, &other.ctx)?;
        Ok(RingElement { ctx: self.ctx.clone(), terms: terms_add(self.ctx.field, &self.terms, &other.terms) })
    }

    pub fn neg(&self) -> RingElement {
        self.scale(-1)
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, lambda: i64) -> RingElement {
        let f = self.ctx.field;
        RingElement { ctx: self.ctx.clone(), terms: terms_scale(f, &self.terms, f.reduce(lambda)) }
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        same_ctx(&self.ctx, &other.ctx)?;
        Ok(RingElement { ctx: self.ctx.clone(), terms: terms_mul(self.ctx.field, &self.terms, &other.terms) })
    }

    /// The single word of a monomial with coefficient 1.
    pub fn as_word(&self) -> Option<GroupWord> {
        match self.terms.iter().next() {
            Some((w, 1)) if self.terms.len() == 1 => Some(GroupWord { ctx: self.ctx.clone(), word: w.clone() }),
            _ => None,
        }
    }
}

/// An element of `XKF(Y) = ⊕_{x ∈ X} x·KF(Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    ctx: Ctx,
    parts: BTreeMap<usize, Terms>,
}

impl ModuleElement {
    pub fn zero(ctx: &Ctx) -> Self {
        ModuleElement { ctx: ctx.clone(), parts: BTreeMap::new() }
    }

    /// The basis element `x_i`.
    pub fn var(ctx: &Ctx, i: usize) -> Result<Self> {
        ModuleElement::from_part(ctx, i, &RingElement::one(ctx))
    }

    /// `x_i · r`
    pub fn from_part(ctx: &Ctx, i: usize, r: &RingElement) -> Result<Self> {
        same_ctx(ctx, &r.ctx)?;
        if i >= ctx.xvars.len() {
            return Err(Error::IndexOutOfRange { what: "x-variable", index: i, size: ctx.xvars.len() });
        }
        let mut parts = BTreeMap::new();
        if !r.is_zero() {
            parts.insert(i, r.terms.clone());
        }
        Ok(ModuleElement { ctx: ctx.clone(), parts })
    }

    /// Builds from `(x index, word, coefficient)` triples.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (usize, Word, i64)>) -> Result<Self> {
        let mut out = ModuleElement::zero(ctx);
        for (x, w, c) in terms {
            let r = RingElement::from_terms(ctx, [(w, c)])?;
            out = out.add(&ModuleElement::from_part(ctx, x, &r)?)?;
        }
        Ok(out)
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn parts(&self) -> &BTreeMap<usize, Terms> {
        &self.parts
    }

    pub fn part(&self, i: usize) -> RingElement {
        RingElement { ctx: self.ctx.clone(), terms: self.parts.get(&i).cloned().unwrap_or_default() }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of `(x, word)` terms.
    pub fn term_count(&self) -> usize {
        self.parts.values().map(BTreeMap::len).sum()
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        same_ctx(&self.ctx, &other.ctx)?;
        let f = self.ctx.field;
        let mut parts = self.parts.clone();
        for (&x, t) in &other.parts {
            let sum = match parts.get(&x) {
                Some(s) => terms_add(f, s, t),
                None => t.clone(),
            };
            if sum.is_empty() {
                parts.remove(&x);
            } else {
                parts.insert(x, sum);
            }
        }
        Ok(ModuleElement { ctx: self.ctx.clone(), parts })
    }

    pub fn neg(&self) -> ModuleElement {
        self.scale(-1)
    }

    pub fn sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, lambda: i64) -> ModuleElement {
        let f = self.ctx.field;
        let lambda = f.reduce(lambda);
        let parts = if lambda == 0 {
            BTreeMap::new()
        } else {
            self.parts.iter().map(|(&x, t)| (x, terms_scale(f, t, lambda))).collect()
        };
        ModuleElement { ctx: self.ctx.clone(), parts }
    }

    /// Right module action `u · r`: every part is multiplied by `r` on the right.
    pub fn act(&self, r: &RingElement) -> Result<ModuleElement> {
        same_ctx(&self.ctx, &r.ctx)?;
        let f = self.ctx.field;
        let parts =
            self.parts.iter().map(|(&x, t)| (x, terms_mul(f, t, &r.terms))).filter(|(_, t)| !t.is_empty()).collect();
        Ok(ModuleElement { ctx: self.ctx.clone(), parts })
    }

    pub fn act_word(&self, w: &GroupWord) -> Result<ModuleElement> {
        self.act(&RingElement::monomial(w, 1))
    }

    /// Terms as `(x, word, coefficient)`, grouped by `x` then shortlex.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, &Word, u32)> {
        self.parts.iter().flat_map(|(&x, t)| t.iter().map(move |(w, &c)| (x, w, c)))
    }
}

impl Ord for ModuleElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.term_count()
            .cmp(&other.term_count())
            .then_with(|| self.iter_terms().cmp(other.iter_terms()))
            .then_with(|| self.ctx.cmp(&other.ctx))
    }
}

impl PartialOrd for ModuleElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `u = 0` or `w = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Module(ModuleElement),
    Group(GroupWord),
}

impl Atom {
    pub fn context(&self) -> &Ctx {
        match self {
            Atom::Module(u) => &u.ctx,
            Atom::Group(w) => &w.ctx,
        }
    }
}

/// `(w₁ ∧ … ∧ wₙ) ⇒ w₀`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiIdentity {
    premises: Vec<Atom>,
    conclusion: Atom,
}

impl QuasiIdentity {
    pub fn new(premises: Vec<Atom>, conclusion: Atom) -> Result<Self> {
        for p in &premises {
            same_ctx(p.context(), conclusion.context())?;
        }
        Ok(QuasiIdentity { premises, conclusion })
    }

    pub fn premises(&self) -> &[Atom] {
        &self.premises
    }

    pub fn conclusion(&self) -> &Atom {
        &self.conclusion
    }

    pub fn context(&self) -> &Ctx {
        self.conclusion.context()
    }
}

/// A system `(T₁, T₂)`; action-type systems have an empty group part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquationSystem {
    ctx: Ctx,
    module_part: BTreeSet<ModuleElement>,
    group_part: BTreeSet<GroupWord>,
}

impl EquationSystem {
    pub fn new(
        ctx: &Ctx,
        module_part: impl IntoIterator<Item = ModuleElement>,
        group_part: impl IntoIterator<Item = GroupWord>,
    ) -> Result<Self> {
        let module_part: BTreeSet<_> = module_part.into_iter().collect();
        let group_part: BTreeSet<_> = group_part.into_iter().collect();
        for u in &module_part {
            same_ctx(ctx, &u.ctx)?;
        }
        for w in &group_part {
            same_ctx(ctx, &w.ctx)?;
        }
        Ok(EquationSystem { ctx: ctx.clone(), module_part, group_part })
    }

    pub fn action_type(ctx: &Ctx, t: impl IntoIterator<Item = ModuleElement>) -> Result<Self> {
        EquationSystem::new(ctx, t, [])
    }

    pub fn empty(ctx: &Ctx) -> Self {
        EquationSystem { ctx: ctx.clone(), module_part: BTreeSet::new(), group_part: BTreeSet::new() }
    }

    pub fn from_atoms(ctx: &Ctx, atoms: impl IntoIterator<Item = Atom>) -> Result<Self> {
        let mut sys = EquationSystem::empty(ctx);
        for a in atoms {
            sys = sys.with(a)?;
        }
        Ok(sys)
    }

    /// `T ∪ {a}`
    pub fn with(&self, atom: Atom) -> Result<Self> {
        same_ctx(&self.ctx, atom.context())?;
        let mut out = self.clone();
        match atom {
            Atom::Module(u) => {
                out.module_part.insert(u);
            }
            Atom::Group(w) => {
                out.group_part.insert(w);
            }
        }
        Ok(out)
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn module_part(&self) -> &BTreeSet<ModuleElement> {
        &self.module_part
    }

    pub fn group_part(&self) -> &BTreeSet<GroupWord> {
        &self.group_part
    }

    pub fn is_action_type(&self) -> bool {
        self.group_part.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.module_part.iter().cloned().map(Atom::Module).chain(self.group_part.iter().cloned().map(Atom::Group))
    }
}

/// A point of `Hom((XKF(Y), F(Y)), (V, G))`: images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    pub xmap: Vec<Vector>,
    pub ymap: Vec<usize>,
}

impl Assignment {
    pub fn new(rep: &Representation, ctx: &FreeContext, xmap: Vec<Vector>, ymap: Vec<usize>) -> Result<Self> {
        if xmap.len() != ctx.xvars.len() || ymap.len() != ctx.yvars.len() {
            return Err(Error::ContextMismatch);
        }
        if rep.field() != ctx.field {
            return Err(Error::FieldMismatch { left: rep.field().modulus(), right: ctx.field.modulus() });
        }
        for v in &xmap {
            if v.dim() != rep.dim() || v.field() != rep.field() {
                return Err(Error::DimensionMismatch { expected: rep.dim(), found: v.dim() });
            }
        }
        if let Some(&g) = ymap.iter().find(|&&g| g >= rep.group().order()) {
            return Err(Error::IndexOutOfRange { what: "group element", index: g, size: rep.group().order() });
        }
        Ok(Assignment { xmap, ymap })
    }

    /// Number of points: `|V|^|X| · |G|^|Y|`, saturating.
    pub fn space_size(rep: &Representation, nx: usize, ny: usize) -> u128 {
        let v = rep.space_size();
        let g = rep.group().order() as u128;
        let pow = |b: u128, e: usize| (0..e).try_fold(1u128, |acc, _| acc.checked_mul(b)).unwrap_or(u128::MAX);
        pow(v, nx).saturating_mul(pow(g, ny))
    }

    /// The `index`-th point in canonical order: x-images lexicographic
    /// (first variable most significant), then y-images.
    pub fn from_index(rep: &Representation, nx: usize, ny: usize, index: u64) -> Self {
        let n_g = rep.group().order() as u64;
        let n_v = rep.space_size() as u64;
        let mut rest = index;
        let mut ymap = vec![0; ny];
        for y in ymap.iter_mut().rev() {
            *y = (rest % n_g) as usize;
            rest /= n_g;
        }
        let mut xmap = vec![Vector::zero(rep.field(), rep.dim()); nx];
        for x in xmap.iter_mut().rev() {
            *x = Vector::from_index(rep.field(), rep.dim(), rest % n_v);
            rest /= n_v;
        }
        Assignment { xmap, ymap }
    }

    pub fn index(&self, rep: &Representation) -> u64 {
        let n_g = rep.group().order() as u64;
        let n_v = rep.space_size() as u64;
        let x = self.xmap.iter().fold(0, |acc, v| acc * n_v + v.index());
        self.ymap.iter().fold(x, |acc, &g| acc * n_g + g as u64)
    }

    pub fn describe(&self, rep: &Representation, ctx: &FreeContext) -> String {
        let xs = self.xmap.iter().zip(&ctx.xvars).map(|(v, n)| format!("{n}↦{v}"));
        let ys = self.ymap.iter().zip(&ctx.yvars).map(|(&g, n)| format!("{n}↦{}", rep.group().name(g)));
        xs.chain(ys).collect::<Vec<_>>().join(", ")
    }
}

pub(crate) fn eval_raw_word(rep: &Representation, ymap: &[usize], word: &Word) -> usize {
    let g = rep.group();
    word.runs().iter().fold(0, |acc, &(v, e)| g.mul(acc, g.pow(ymap[v], e)))
}

pub(crate) fn eval_terms(rep: &Representation, asg: &Assignment, x: usize, terms: &Terms) -> Vector {
    let f = rep.field();
    let mut acc = Vector::zero(f, rep.dim());
    for (w, &c) in terms {
        let g = eval_raw_word(rep, &asg.ymap, w);
        acc.add_scaled(c, &rep.act_unchecked(&asg.xmap[x], g));
    }
    acc
}

/// `β(w)`: fold of the y-images through the Cayley table.
pub fn eval_word(rep: &Representation, asg: &Assignment, w: &GroupWord) -> usize {
    eval_raw_word(rep, &asg.ymap, &w.word)
}

/// `α(u) = Σ_x Σ_w λ_w · (α(x) ∘ β(w))`
pub fn eval_module(rep: &Representation, asg: &Assignment, u: &ModuleElement) -> Vector {
    let mut acc = Vector::zero(rep.field(), rep.dim());
    for (&x, t) in &u.parts {
        acc = acc.add(&eval_terms(rep, asg, x, t));
    }
    acc
}

pub fn eval_atom(rep: &Representation, asg: &Assignment, atom: &Atom) -> bool {
    match atom {
        Atom::Module(u) => eval_module(rep, asg, u).is_zero(),
        Atom::Group(w) => eval_word(rep, asg, w) == 0,
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::serialize_word(&self.ctx, &self.word))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::serialize_ring(&self.ctx, &self.terms))
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::serialize_module(self))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Module(u) => write!(f, "{u} = 0"),
            Atom::Group(w) => write!(f, "{w} = 1"),
        }
    }
}

impl fmt::Display for QuasiIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premises: Vec<String> = self.premises.iter().map(ToString::to_string).collect();
        if premises.is_empty() {
            write!(f, "=> {}", self.conclusion)
        } else {
            write!(f, "{} => {}", premises.join(" & "), self.conclusion)
        }
    }
}
