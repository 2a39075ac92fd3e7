// Two actions of finite groups on GF(2)²: kernels, faithful images and
// equivariant maps.

use repgeo::{enumerate_rep_homs, rep_isomorphic, Caps, FiniteGroup, Matrix, PrimeField, Representation, Vector};

pub fn run() -> repgeo::Result<()> {
    let f = PrimeField::new(2)?;
    let swap = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]])?;
    let z2 = FiniteGroup::cyclic_named(2, "a");
    let klein = FiniteGroup::product(&z2, &FiniteGroup::cyclic_named(2, "b"));

    let r1 = Representation::new(f, 2, &z2, [(1, swap.clone())])?;
    // a and ab swap the coordinates, b does nothing.
    let r2 = Representation::new(f, 2, &klein, [(1, swap.clone()), (2, Matrix::identity(f, 2)), (3, swap)])?;

    let v = Vector::new(f, [1, 0]);
    println!("(1,0) . a = {}", r1.act(&v, 1)?);
    println!("stabilizer of (1,1) in R1: {:?}", r1.stabilizer(&Vector::new(f, [1, 1])).member_names());

    println!("ker R1 = {:?}, faithful: {}", r1.kernel().member_names(), r1.is_faithful());
    println!("ker R2 = {:?}, faithful: {}", r2.kernel().member_names(), r2.is_faithful());

    let fi = r2.faithful_image();
    println!("faithful image of R2 acts through a group of order {}", fi.quotient.group().order());
    let caps = Caps::default();
    match rep_isomorphic(&fi.quotient, &r1, &caps)? {
        Some(iso) => println!("and is isomorphic to R1 via {}", iso.describe()),
        None => println!("and is not isomorphic to R1"),
    }

    let homs = enumerate_rep_homs(&r1, &r1, &caps)?;
    println!("{} representation homomorphisms R1 -> R1:", homs.len());
    for h in &homs {
        println!("  {}", h.describe());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
