// Recomputing every claim about the swap pair, with the evidence behind
// each status. Pass a prime as the first argument to change the field.

use repgeo::audit::paper_demo;
use repgeo::geometry::SearchBounds;
use repgeo::Caps;

pub fn run_with(p: u32) -> repgeo::Result<()> {
    let report = paper_demo(p, &SearchBounds::default(), &Caps::default())?;
    println!("field GF({})", report.p);
    for c in &report.claims {
        println!("{} {:?}: {}", c.id, c.status, c.statement);
        for e in &c.evidence {
            println!("    {e}");
        }
    }
    for note in &report.commentary {
        println!("note: {note}");
    }
    Ok(())
}

pub fn run() -> repgeo::Result<()> {
    run_with(2)
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    run_with(p)
}
