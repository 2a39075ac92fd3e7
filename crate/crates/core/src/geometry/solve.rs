use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rep::Representation;
use crate::term::{eval_atom, Assignment, Atom, EquationSystem, FreeContext, ModuleElement, QuasiIdentity};

/// All points solving a system, in canonical order.
#[derive(Debug, Clone)]
pub struct SolutionSet {
    pub system: EquationSystem,
    pub rep: Representation,
    pub solutions: Vec<Assignment>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Size of the affine space for `ctx` in `rep`, after the cap check.
pub(crate) fn space_size(rep: &Representation, ctx: &FreeContext, caps: &Caps) -> Result<u64> {
    if rep.field() != ctx.field() {
        return Err(Error::FieldMismatch { left: rep.field().modulus(), right: ctx.field().modulus() });
    }
    let n = Assignment::space_size(rep, ctx.xvars().len(), ctx.yvars().len());
    if n > caps.max_assignments {
        return Err(Error::SearchSpaceCapExceeded { needed: n, cap: caps.max_assignments });
    }
    Ok(n as u64)
}

pub(crate) fn points<'a>(rep: &'a Representation, ctx: &FreeContext, n: u64) -> impl Iterator<Item = Assignment> + 'a {
    let (nx, ny) = (ctx.xvars().len(), ctx.yvars().len());
    (0..n).map(move |i| Assignment::from_index(rep, nx, ny, i))
}

/// Bitset of the points where every atom holds.
pub(crate) fn satisfying<'a>(
    rep: &Representation,
    ctx: &FreeContext,
    n: u64,
    atoms: impl IntoIterator<Item = &'a Atom> + Clone,
) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(n as usize);
    for (i, asg) in points(rep, ctx, n).enumerate() {
        if atoms.clone().into_iter().all(|a| eval_atom(rep, &asg, a)) {
            set.insert(i);
        }
    }
    set
}

pub fn solution_set(rep: &Representation, sys: &EquationSystem, caps: &Caps) -> Result<SolutionSet> {
    let ctx = sys.context();
    let n = space_size(rep, ctx, caps)?;
    let atoms: Vec<Atom> = sys.atoms().collect();
    let solutions = points(rep, ctx, n).filter(|asg| atoms.iter().all(|a| eval_atom(rep, asg, a))).collect();
    Ok(SolutionSet { system: sys.clone(), rep: rep.clone(), solutions })
}

/// First solution of `sys` on which `atom` fails, if any.
///
/// `None` means `atom` lies in the closure. An empty solution set gives
/// `None`: the intersection over an empty family is everything.
pub fn closure_counterexample(
    rep: &Representation,
    sys: &EquationSystem,
    atom: &Atom,
    caps: &Caps,
) -> Result<Option<Assignment>> {
    if atom.context() != sys.context() {
        return Err(Error::ContextMismatch);
    }
    let ctx = sys.context();
    let n = space_size(rep, ctx, caps)?;
    let atoms: Vec<Atom> = sys.atoms().collect();
    Ok(points(rep, ctx, n).find(|asg| atoms.iter().all(|a| eval_atom(rep, asg, a)) && !eval_atom(rep, asg, atom)))
}

/// Membership in the two-sorted closure `(T₁, T₂)''`.
pub fn in_closure(rep: &Representation, sys: &EquationSystem, atom: &Atom, caps: &Caps) -> Result<bool> {
    Ok(closure_counterexample(rep, sys, atom, caps)?.is_none())
}

/// Membership of `u` in the action-type closure of `t`: `u` vanishes under
/// every point that kills all of `t`.
pub fn in_at_closure(rep: &Representation, t: &[ModuleElement], u: &ModuleElement, caps: &Caps) -> Result<bool> {
    let sys = EquationSystem::action_type(u.context(), t.iter().cloned())?;
    in_closure(rep, &sys, &Atom::Module(u.clone()), caps)
}

/// Result of checking one quasi-identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QidCheck {
    pub holds: bool,
    /// A violating point. The first one (canonical order) whose x-images
    /// are all nonzero is preferred; otherwise the first violation overall.
    pub witness: Option<Assignment>,
}

pub fn fulfills_qid(rep: &Representation, q: &QuasiIdentity, caps: &Caps) -> Result<QidCheck> {
    let ctx = q.context();
    let n = space_size(rep, ctx, caps)?;
    let mut first = None;
    for asg in points(rep, ctx, n) {
        let violated = q.premises().iter().all(|a| eval_atom(rep, &asg, a)) && !eval_atom(rep, &asg, q.conclusion());
        if !violated {
            continue;
        }
        if asg.xmap.iter().all(|v| !v.is_zero()) {
            return Ok(QidCheck { holds: false, witness: Some(asg) });
        }
        first.get_or_insert(asg);
    }
    Ok(QidCheck { holds: first.is_none(), witness: first })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Matrix, PrimeField, Vector};
    use crate::group::FiniteGroup;
    use crate::term::{Ctx, GroupWord};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn r1() -> Representation {
        let swap = Matrix::from_rows(f2(), &[vec![0, 1], vec![1, 0]]).unwrap();
        Representation::new(f2(), 2, &FiniteGroup::cyclic_named(2, "a"), [(1, swap)]).unwrap()
    }

    fn r2() -> Representation {
        let swap = Matrix::from_rows(f2(), &[vec![0, 1], vec![1, 0]]).unwrap();
        let g = FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"));
        Representation::new(f2(), 2, &g, [(1, swap.clone()), (2, Matrix::identity(f2(), 2)), (3, swap)]).unwrap()
    }

    fn ctx() -> Ctx {
        FreeContext::standard(f2(), 1, 1)
    }

    fn y(c: &Ctx) -> GroupWord {
        GroupWord::var(c, 0).unwrap()
    }

    fn x_times(c: &Ctx, w: &GroupWord) -> ModuleElement {
        ModuleElement::var(c, 0).unwrap().act_word(w).unwrap()
    }

    /// x·w − x
    fn fixed_by(c: &Ctx, w: &GroupWord) -> ModuleElement {
        x_times(c, w).sub(&ModuleElement::var(c, 0).unwrap()).unwrap()
    }

    fn swap_formula(c: &Ctx) -> QuasiIdentity {
        QuasiIdentity::new(vec![Atom::Module(fixed_by(c, &y(c)))], Atom::Group(y(c))).unwrap()
    }

    fn pt(v: [i64; 2], g: usize) -> Assignment {
        Assignment { xmap: vec![Vector::new(f2(), v)], ymap: vec![g] }
    }

    #[test]
    fn solution_set_examples() {
        let c = ctx();
        let caps = Caps::default();
        let t = EquationSystem::action_type(&c, [fixed_by(&c, &y(&c))]).unwrap();
        let sols = solution_set(&r1(), &t, &caps).unwrap();
        assert_eq!(
            sols.solutions,
            vec![pt([0, 0], 0), pt([0, 0], 1), pt([0, 1], 0), pt([1, 0], 0), pt([1, 1], 0), pt([1, 1], 1)]
        );
        assert_eq!(solution_set(&r1(), &EquationSystem::empty(&c), &caps).unwrap().len(), 8);
        let t2 = EquationSystem::new(&c, [], [y(&c)]).unwrap();
        let sols = solution_set(&r1(), &t2, &caps).unwrap();
        assert_eq!(sols.len(), 4);
        assert!(sols.solutions.iter().all(|a| a.ymap == [0]));
    }

    #[test]
    fn closure_examples() {
        let c = ctx();
        let caps = Caps::default();
        let t = EquationSystem::action_type(&c, [fixed_by(&c, &y(&c))]).unwrap();
        let y2 = Atom::Module(fixed_by(&c, &y(&c).pow(2)));
        assert!(in_closure(&r1(), &t, &y2, &caps).unwrap());
        let x_zero = Atom::Module(ModuleElement::var(&c, 0).unwrap());
        assert_eq!(closure_counterexample(&r1(), &t, &x_zero, &caps).unwrap(), Some(pt([0, 1], 0)));
        for a in t.atoms() {
            assert!(in_closure(&r1(), &t, &a, &caps).unwrap());
        }
    }

    #[test]
    fn first_counterexample_with_x_mapped_to_e1() {
        // (1,0) with y↦1 also solves T and has α(x) ≠ 0.
        let c = ctx();
        let t = EquationSystem::action_type(&c, [fixed_by(&c, &y(&c))]).unwrap();
        let x_zero = Atom::Module(ModuleElement::var(&c, 0).unwrap());
        let sols = solution_set(&r1(), &t, &Caps::default()).unwrap();
        assert!(sols.solutions.contains(&pt([1, 0], 0)));
        assert!(!crate::term::eval_atom(&r1(), &pt([1, 0], 0), &x_zero));
    }

    #[test]
    fn zero_point_solves_every_system() {
        // x ↦ 0, y ↦ 1 kills every module element and every word, so
        // solution sets are never empty.
        let c = ctx();
        let t =
            EquationSystem::new(&c, [ModuleElement::var(&c, 0).unwrap(), fixed_by(&c, &y(&c))], [y(&c), y(&c).pow(2)])
                .unwrap();
        for rep in [r1(), r2()] {
            let sols = solution_set(&rep, &t, &Caps::default()).unwrap();
            assert_eq!(sols.solutions.first(), Some(&pt([0, 0], 0)));
        }
    }

    #[test]
    fn at_closure_examples() {
        let c = ctx();
        let caps = Caps::default();
        let t = [fixed_by(&c, &y(&c))];
        let u = fixed_by(&c, &y(&c).pow(2));
        assert!(in_at_closure(&r1(), &t, &u, &caps).unwrap());
        assert!(in_at_closure(&r2(), &t, &u, &caps).unwrap());
        assert!(!in_at_closure(&r1(), &[], &ModuleElement::var(&c, 0).unwrap(), &caps).unwrap());
    }

    #[test]
    fn witness_quasi_identity_fails_in_both() {
        let c = ctx();
        let caps = Caps::default();
        let q = swap_formula(&c);
        let on_r2 = fulfills_qid(&r2(), &q, &caps).unwrap();
        assert!(!on_r2.holds);
        assert_eq!(on_r2.witness, Some(pt([0, 1], 2)));
        let on_r1 = fulfills_qid(&r1(), &q, &caps).unwrap();
        assert!(!on_r1.holds);
        assert_eq!(on_r1.witness, Some(pt([1, 1], 1)));
    }

    #[test]
    fn tautology_holds() {
        let c = ctx();
        let q = QuasiIdentity::new(vec![], Atom::Group(GroupWord::identity(&c))).unwrap();
        let check = fulfills_qid(&r1(), &q, &Caps::default()).unwrap();
        assert!(check.holds);
        assert!(check.witness.is_none());
    }

    #[test]
    fn degenerate_witness_is_fallback() {
        // y = 1 fails only through y; with no premise the first violation has x = 0.
        let c = ctx();
        let q = QuasiIdentity::new(vec![Atom::Module(ModuleElement::var(&c, 0).unwrap())], Atom::Group(y(&c))).unwrap();
        let check = fulfills_qid(&r1(), &q, &Caps::default()).unwrap();
        assert_eq!(check.witness, Some(pt([0, 0], 1)));
    }

    #[test]
    fn caps_are_enforced() {
        let c = FreeContext::standard(f2(), 3, 3);
        let caps = Caps { max_assignments: 100, ..Caps::default() };
        assert!(matches!(
            solution_set(&r2(), &EquationSystem::empty(&c), &caps),
            Err(Error::SearchSpaceCapExceeded { .. })
        ));
    }
}
