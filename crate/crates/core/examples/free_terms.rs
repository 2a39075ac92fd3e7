// Arithmetic in the free representation: reduced words, the group ring and
// the free module, then evaluation at a point.

use repgeo::term::{eval_module, eval_word};
use repgeo::textio::{parse_module, parse_word};
use repgeo::{
    Assignment, FiniteGroup, FreeContext, GroupWord, Matrix, ModuleElement, PrimeField, Representation, RingElement,
};

pub fn run() -> repgeo::Result<()> {
    let f = PrimeField::new(3)?;
    let ctx = FreeContext::standard(f, 1, 2);
    let (y1, y2) = (GroupWord::var(&ctx, 0)?, GroupWord::var(&ctx, 1)?);

    let w = y1.mul(&y2)?.mul(&y2.inv())?.mul(&y1)?;
    println!("y1*y2*y2^-1*y1 reduces to {w}");
    println!("parsed: {}", parse_word("y1*y2*y2^-1*y1", &ctx)?);

    let r = RingElement::monomial(&y1, 1).sub(&RingElement::one(&ctx))?;
    println!("(y1 - 1)^2 = {}", r.mul(&r)?);
    println!("(y1 - 1)^3 = {}  (the Frobenius over GF(3))", r.mul(&r)?.mul(&r)?);

    let x = ModuleElement::var(&ctx, 0)?;
    let u = x.act(&r)?;
    println!("x*(y1 - 1) = {u}");
    let u2 = parse_module("2*x*(2*y1 + 1) + x", &ctx)?;
    println!("2*x*(2*y1 + 1) + x normalizes to {u2}");

    // Evaluate at a point of a cyclic action of order 3.
    let rot = Matrix::from_rows(f, &[vec![0, 1], vec![2, 2]])?;
    let rep = Representation::new(f, 2, &FiniteGroup::cyclic_named(3, "c"), [(1, rot.clone()), (2, rot.mul(&rot))])?;
    let point = Assignment::new(&rep, &ctx, vec![repgeo::Vector::new(f, [1, 0])], vec![1, 2])?;
    println!("at {}:", point.describe(&rep, &ctx));
    println!("  y1*y2 -> {}", rep.group().name(eval_word(&rep, &point, &y1.mul(&y2)?)));
    println!("  x*(y1 - 1) -> {}", eval_module(&rep, &point, &u));
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
