// Finite groups as Cayley tables: products, quotients and homomorphisms.

use repgeo::{enumerate_group_homs, quotient_group, FiniteGroup, Subgroup};

pub fn run() -> repgeo::Result<()> {
    let z2 = FiniteGroup::cyclic_named(2, "a");
    let klein = FiniteGroup::product(&z2, &FiniteGroup::cyclic_named(2, "b"));
    println!("Z2 x Z2 has elements {:?}", klein.names());
    for row in klein.table_rows() {
        let names: Vec<&str> = row.iter().map(|&i| klein.name(i)).collect();
        println!("  {}", names.join(" "));
    }

    let b = klein.index_of("b").expect("b is an element");
    let n = Subgroup::new(&klein, [klein.identity(), b])?;
    let (q, sigma) = quotient_group(&n)?;
    println!("quotient by {{{}}} has order {}", n.member_names().join(", "), q.order());
    for g in klein.elements() {
        println!("  {} -> coset {}", klein.name(g), q.name(sigma[g]));
    }

    let homs = enumerate_group_homs(&klein, &z2, 1 << 20)?;
    println!("{} homomorphisms Z2 x Z2 -> Z2:", homs.len());
    for h in &homs {
        println!("  {}", h.describe());
    }
    let into_z3 = enumerate_group_homs(&z2, &FiniteGroup::cyclic(3), 1 << 20)?;
    println!("{} homomorphism Z2 -> Z3 (only the trivial one)", into_z3.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
