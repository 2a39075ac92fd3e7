// Deciding geometric equivalence by point separation, and the bounded
// semi-decision for action-type equivalence.

use repgeo::audit::counterexample_pair;
use repgeo::geometry::{
    at_equivalent, geo_equivalent_groups, geo_equivalent_reps, verify_rep_certificate, SearchBounds, Verdict,
};
use repgeo::{Caps, FiniteGroup, PrimeField, Representation};

pub fn run() -> repgeo::Result<()> {
    let caps = Caps::default();
    let bounds = SearchBounds::default();

    let z2 = FiniteGroup::cyclic_named(2, "a");
    let klein = FiniteGroup::product(&z2, &FiniteGroup::cyclic_named(2, "b"));
    for (name, other) in [("Z2 x Z2", &klein), ("Z3", &FiniteGroup::cyclic(3))] {
        match geo_equivalent_groups(&z2, other, &caps)? {
            Verdict::Equivalent(c) => {
                println!("Z2 ~ {name}: equivalent");
                for n in c.a_into_b.notes.iter().chain(&c.b_into_a.notes) {
                    println!("  {n}");
                }
            }
            Verdict::NotEquivalent(r) => println!("Z2 ~ {name}: not equivalent, {:?} stays inseparable", r.pair),
            Verdict::Unknown(_) => println!("Z2 ~ {name}: unknown"),
        }
    }

    let f = PrimeField::new(2)?;
    let (r1, r2) = counterexample_pair(f);
    if let Verdict::Equivalent(c) = geo_equivalent_reps(&r1, &r2, &caps, &bounds)? {
        println!("R1 ~ R2: equivalent");
        for h in c.a_into_b.homs.iter().chain(&c.b_into_a.homs) {
            println!("  {}", h.describe());
        }
        let rechecked = verify_rep_certificate(&r1, &r2, &c.a_into_b).is_ok()
            && verify_rep_certificate(&r2, &r1, &c.b_into_a).is_ok();
        println!("  independent re-check: {rechecked}");
    }

    let trivial = Representation::trivial(f, 2, &z2);
    if let Verdict::NotEquivalent(r) = geo_equivalent_reps(&r1, &trivial, &caps, &bounds)? {
        if let Some(s) = r.qid {
            println!("R1 vs trivial: separated by {} (holds in the {:?} one)", s.qid, s.holds_in);
        }
    }

    for (name, s) in [("R2", &r2), ("trivial", &trivial)] {
        match at_equivalent(&r1, s, &bounds, &caps)? {
            Verdict::Equivalent(c) => println!(
                "R1 ~at {name}: equivalent through faithful images (kernels {:?} and {:?})",
                c.first.kernel.member_names(),
                c.second.kernel.member_names()
            ),
            Verdict::NotEquivalent(w) => println!(
                "R1 ~at {name}: not equivalent; {} is in the closure of {:?} only in the {:?} one",
                w.candidate,
                w.system.iter().map(|u| u.to_string()).collect::<Vec<_>>(),
                w.contained_in
            ),
            Verdict::Unknown(b) => println!("R1 ~at {name}: unknown within {b:?}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
