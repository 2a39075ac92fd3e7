// Checking quasi-identities exhaustively, with a violating point as the
// witness when one fails.

use repgeo::audit::counterexample_pair;
use repgeo::geometry::fulfills_qid;
use repgeo::textio::{infer_context, parse_qid};
use repgeo::{Caps, PrimeField};

pub fn run() -> repgeo::Result<()> {
    let f = PrimeField::new(2)?;
    let (r1, r2) = counterexample_pair(f);
    let caps = Caps::default();
    let formulas = [
        "x*y - x = 0 => y = 1",
        "y^2 = 1",
        "x*y^2 - x = 0",
        "x*y - x = 0 & x*y1 - x = 0 => x*y*y1 - x = 0",
        "y*y1*y^-1*y1^-1 = 1",
        "x*y + x*y^-1 = 0 => x*y - x = 0",
    ];
    for (name, rep) in [("R1", &r1), ("R2", &r2)] {
        println!("{name}:");
        for text in formulas {
            let ctx = infer_context(text, f)?;
            let q = parse_qid(text, &ctx)?;
            let check = fulfills_qid(rep, &q, &caps)?;
            match check.witness {
                None => println!("  holds  {q}"),
                Some(w) => println!("  fails  {q}   at {}", w.describe(rep, &ctx)),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
