// Solution sets and closures of systems of equations, in both sorts and
// in the action-type (vectors only) setting.

use repgeo::geometry::{closure_counterexample, in_at_closure, in_closure, solution_set};
use repgeo::textio::{parse_atom, parse_module};
use repgeo::{Caps, EquationSystem, FiniteGroup, FreeContext, Matrix, PrimeField, Representation};

pub fn run() -> repgeo::Result<()> {
    let f = PrimeField::new(2)?;
    let swap = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]])?;
    let rep = Representation::new(f, 2, &FiniteGroup::cyclic_named(2, "a"), [(1, swap)])?;
    let ctx = FreeContext::standard(f, 1, 1);
    let caps = Caps::default();

    let t = EquationSystem::from_atoms(&ctx, [parse_atom("x*y - x = 0", &ctx)?])?;
    let sols = solution_set(&rep, &t, &caps)?;
    println!("x*y - x = 0 has {} solutions:", sols.len());
    for s in &sols.solutions {
        println!("  {}", s.describe(&rep, &ctx));
    }

    for member in ["x*y^3 - x = 0", "x*y^2 - x = 0", "y^2 = 1", "y = 1", "x = 0"] {
        let atom = parse_atom(member, &ctx)?;
        match closure_counterexample(&rep, &t, &atom, &caps)? {
            None => println!("{member:>14}  in the closure"),
            Some(p) => println!("{member:>14}  not in the closure, fails at {}", p.describe(&rep, &ctx)),
        }
    }

    // Adding a closure member does not change the solutions.
    let u = parse_atom("x*y^3 - x = 0", &ctx)?;
    assert!(in_closure(&rep, &t, &u, &caps)?);
    let bigger = solution_set(&rep, &t.with(u)?, &caps)?;
    println!("with x*y^3 - x = 0 added: {} solutions", bigger.len());

    let t_at = [parse_module("x*(y + 1)", &ctx)?];
    let candidate = parse_module("x*(y^2 + y)", &ctx)?;
    println!("x*(y^2 + y) in the action-type closure of x*(y + 1): {}", in_at_closure(&rep, &t_at, &candidate, &caps)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
