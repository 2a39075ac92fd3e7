//! Bounded refutation searches.
//!
//! Both scans run over a finite slice of the free representation: contexts
//! with at most `max_xvars` / `max_yvars` generators, module elements with at
//! most `max_terms` terms whose words have length at most `max_word_len`.
//! Module elements are normalised so that their largest term has
//! coefficient 1 (scaling by a unit does not change the kernel). Every point
//! of the affine space is evaluated once per atom and the truth sets are kept
//! as bitsets, so each system or formula costs a few word-wide operations.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use super::solve::{fulfills_qid, in_at_closure, satisfying, space_size};
use super::SearchBounds;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::rep::Representation;
use crate::term::{Assignment, Atom, Ctx, FreeContext, GroupWord, ModuleElement, QuasiIdentity, Word};

/// One of the two representations being compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

/// A system `T` and a candidate `u` lying in `T′∇` of exactly one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtWitness {
    pub system: Vec<ModuleElement>,
    pub candidate: ModuleElement,
    pub contained_in: Side,
}

/// A quasi-identity that holds on one side only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QidSeparation {
    pub qid: QuasiIdentity,
    pub holds_in: Side,
    /// A violating point in the side where the formula fails.
    pub witness: Assignment,
}

fn same_field(r: &Representation, s: &Representation) -> Result<PrimeField> {
    if r.field() != s.field() {
        return Err(Error::FieldMismatch { left: r.field().modulus(), right: s.field().modulus() });
    }
    Ok(r.field())
}

fn contexts(field: PrimeField, bounds: &SearchBounds) -> impl Iterator<Item = Ctx> {
    let (mx, my) = (bounds.max_xvars, bounds.max_yvars);
    (1..=mx).flat_map(move |nx| (1..=my).map(move |ny| FreeContext::standard(field, nx, ny)))
}

/// Monic module elements within the bounds, sorted.
fn module_candidates(ctx: &Ctx, bounds: &SearchBounds) -> Vec<ModuleElement> {
    let p = ctx.field().modulus() as i64;
    let words = Word::all_up_to(ctx.yvars().len(), bounds.max_word_len);
    let keys: Vec<(usize, Word)> = (0..ctx.xvars().len()).cartesian_product(words).collect();
    let mut out = Vec::new();
    for k in 1..=bounds.max_terms.min(keys.len()) {
        for chosen in (0..keys.len()).combinations(k) {
            let coeff_choices = (0..k - 1).map(|_| 1..p).multi_cartesian_product();
            let coeffs: Vec<Vec<i64>> = if k == 1 { vec![vec![]] } else { coeff_choices.collect() };
            for mut c in coeffs {
                c.push(1);
                let terms = chosen.iter().zip(c).map(|(&i, c)| (keys[i].0, keys[i].1.clone(), c));
                out.push(ModuleElement::from_terms(ctx, terms).expect("context-local terms"));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn group_candidates(ctx: &Ctx, bounds: &SearchBounds) -> Vec<GroupWord> {
    Word::all_up_to(ctx.yvars().len(), bounds.max_word_len)
        .into_iter()
        .filter(|w| !w.is_identity())
        .map(|w| GroupWord::from_word(ctx, w).expect("context-local word"))
        .collect()
}

fn truth_sets(rep: &Representation, ctx: &Ctx, n: u64, atoms: &[Atom]) -> Vec<FixedBitSet> {
    atoms.iter().map(|a| satisfying(rep, ctx, n, std::iter::once(a))).collect()
}

fn meet(all: usize, sets: &[FixedBitSet], picks: &[usize]) -> FixedBitSet {
    let mut acc = FixedBitSet::with_capacity(all);
    acc.insert_range(..);
    for &i in picks {
        acc.intersect_with(&sets[i]);
    }
    acc
}

/// First `(T, u)` in scan order with `u ∈ T′∇` on exactly one side.
///
/// Systems are scanned by size, then by the order of their elements; the
/// candidates for `u` come from the same list. The hit is re-checked with
/// [`in_at_closure`] before it is returned.
pub fn find_at_witness(
    r: &Representation,
    s: &Representation,
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<Option<AtWitness>> {
    let field = same_field(r, s)?;
    for ctx in contexts(field, bounds) {
        let nr = space_size(r, &ctx, caps)?;
        let ns = space_size(s, &ctx, caps)?;
        let cands = module_candidates(&ctx, bounds);
        let atoms: Vec<Atom> = cands.iter().cloned().map(Atom::Module).collect();
        let kr = truth_sets(r, &ctx, nr, &atoms);
        let ks = truth_sets(s, &ctx, ns, &atoms);
        for size in 0..=bounds.max_system.min(cands.len()) {
            for picks in (0..cands.len()).combinations(size) {
                let sol_r = meet(nr as usize, &kr, &picks);
                let sol_s = meet(ns as usize, &ks, &picks);
                for u in 0..cands.len() {
                    let in_r = sol_r.is_subset(&kr[u]);
                    let in_s = sol_s.is_subset(&ks[u]);
                    if in_r == in_s {
                        continue;
                    }
                    let system: Vec<ModuleElement> = picks.iter().map(|&i| cands[i].clone()).collect();
                    let candidate = cands[u].clone();
                    assert_eq!(in_at_closure(r, &system, &candidate, caps)?, in_r);
                    assert_eq!(in_at_closure(s, &system, &candidate, caps)?, in_s);
                    return Ok(Some(AtWitness {
                        system,
                        candidate,
                        contained_in: if in_r { Side::First } else { Side::Second },
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// The atom list scanned by [`find_separating_qid`] for one context:
/// module atoms first, then non-identity group words.
pub(crate) fn atom_space(ctx: &Ctx, bounds: &SearchBounds) -> Vec<Atom> {
    module_candidates(ctx, bounds)
        .into_iter()
        .map(Atom::Module)
        .chain(group_candidates(ctx, bounds).into_iter().map(Atom::Group))
        .collect()
}

/// First quasi-identity in scan order that holds on exactly one side.
///
/// Formulas are scanned by number of premises, then premises, then
/// conclusion, over [`atom_space`]. With `x·y − x` among the module atoms and
/// `y` among the group atoms, the formula `x·y − x = 0 ⇒ y = 1` is part of
/// every scan with default bounds. Formulas whose conclusion is one of their
/// premises are skipped. The hit is re-checked with [`fulfills_qid`].
pub fn find_separating_qid(
    r: &Representation,
    s: &Representation,
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<Option<QidSeparation>> {
    let field = same_field(r, s)?;
    for ctx in contexts(field, bounds) {
        let nr = space_size(r, &ctx, caps)?;
        let ns = space_size(s, &ctx, caps)?;
        let atoms = atom_space(&ctx, bounds);
        let formulas: u128 = (0..=bounds.max_premises)
            .map(|k| binomial(atoms.len() as u128, k as u128))
            .sum::<u128>()
            .saturating_mul(atoms.len() as u128);
        if formulas > caps.max_assignments {
            return Err(Error::SearchSpaceCapExceeded { needed: formulas, cap: caps.max_assignments });
        }
        let tr = truth_sets(r, &ctx, nr, &atoms);
        let ts = truth_sets(s, &ctx, ns, &atoms);
        for size in 0..=bounds.max_premises.min(atoms.len()) {
            for picks in (0..atoms.len()).combinations(size) {
                let pre_r = meet(nr as usize, &tr, &picks);
                let pre_s = meet(ns as usize, &ts, &picks);
                for c in (0..atoms.len()).filter(|c| !picks.contains(c)) {
                    let holds_r = pre_r.is_subset(&tr[c]);
                    let holds_s = pre_s.is_subset(&ts[c]);
                    if holds_r == holds_s {
                        continue;
                    }
                    let premises = picks.iter().map(|&i| atoms[i].clone()).collect();
                    let qid = QuasiIdentity::new(premises, atoms[c].clone())?;
                    let check_r = fulfills_qid(r, &qid, caps)?;
                    let check_s = fulfills_qid(s, &qid, caps)?;
                    assert_eq!((check_r.holds, check_s.holds), (holds_r, holds_s));
                    let (holds_in, failing) = if holds_r { (Side::First, check_s) } else { (Side::Second, check_r) };
                    return Ok(Some(QidSeparation {
                        qid,
                        holds_in,
                        witness: failing.witness.expect("failing side has a witness"),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Matrix;
    use crate::group::FiniteGroup;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn swap(p: u32) -> Matrix {
        Matrix::from_rows(f(p), &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn r1(p: u32) -> Representation {
        Representation::new(f(p), 2, &FiniteGroup::cyclic_named(2, "a"), [(1, swap(p))]).unwrap()
    }

    fn r2(p: u32) -> Representation {
        let g = FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"));
        Representation::new(f(p), 2, &g, [(1, swap(p)), (2, Matrix::identity(f(p), 2)), (3, swap(p))]).unwrap()
    }

    fn trivial(p: u32) -> Representation {
        Representation::trivial(f(p), 2, &FiniteGroup::cyclic_named(2, "a"))
    }

    #[test]
    fn candidates_are_monic_and_sorted() {
        let ctx = FreeContext::standard(f(3), 1, 1);
        let c = module_candidates(&ctx, &SearchBounds::default());
        // 5 words, so 5 single terms and 10 pairs with 2 choices of the smaller coefficient.
        assert_eq!(c.len(), 5 + 10 * 2);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(c[0].to_string(), "x");
    }

    #[test]
    fn trivial_action_is_separated_from_the_swap() {
        let w =
            find_at_witness(&r1(2), &trivial(2), &SearchBounds::default(), &Caps::default()).unwrap().expect("witness");
        assert!(w.system.is_empty());
        assert_eq!(w.candidate.to_string(), "x*(y + 1)");
        assert_eq!(w.contained_in, Side::Second);
    }

    #[test]
    fn no_action_type_witness_between_the_two_representations() {
        for p in [2, 3] {
            let found = find_at_witness(&r1(p), &r2(p), &SearchBounds::default(), &Caps::default()).unwrap();
            assert_eq!(found, None, "p = {p}");
        }
        assert_eq!(find_at_witness(&r1(2), &r1(2), &SearchBounds::default(), &Caps::default()).unwrap(), None);
    }

    #[test]
    fn no_separating_qid_between_the_two_representations() {
        let found = find_separating_qid(&r1(2), &r2(2), &SearchBounds::default(), &Caps::default()).unwrap();
        assert_eq!(found, None);
    }

    #[test]
    fn separating_qid_against_the_trivial_action() {
        let sep = find_separating_qid(&r1(2), &trivial(2), &SearchBounds::default(), &Caps::default())
            .unwrap()
            .expect("formula");
        assert_eq!(sep.holds_in, Side::Second);
        let back = fulfills_qid(&r1(2), &sep.qid, &Caps::default()).unwrap();
        assert!(!back.holds);
        assert_eq!(back.witness, Some(sep.witness));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let err = find_at_witness(&r1(2), &r1(3), &SearchBounds::default(), &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch { left: 2, right: 3 }));
    }
}
