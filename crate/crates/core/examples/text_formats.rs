// The text formats: representation, group and system files, terms and
// quasi-identities, all with canonical serializers.

use repgeo::textio::{
    parse_group_file, parse_qid, parse_rep_file, parse_system_file, parse_term, serialize_group, serialize_rep,
    serialize_system, Term,
};
use repgeo::{FreeContext, PrimeField};

const R2: &str = "\
field p=2
group product(cyclic(2) as a, cyclic(2) as b)
dim 2
act a  = [[0,1],[1,0]]
act b  = [[1,0],[0,1]]
act ab = [[0,1],[1,0]]
";

pub fn run() -> repgeo::Result<()> {
    let rep = parse_rep_file(R2)?;
    println!("canonical form:\n{}", serialize_rep(&rep));
    assert_eq!(parse_rep_file(&serialize_rep(&rep))?, rep);

    let g = parse_group_file("group cyclic(3) as c\n")?;
    print!("{}", serialize_group(&g));

    let f = PrimeField::new(3)?;
    let (ctx, sys) = parse_system_file("xvars x\nyvars y\nmodule: x*(2*y + 1) = 0\ngroup: y^3 = 1\n", f)?;
    print!("\n{}", serialize_system(&sys));

    for text in ["x*(2*y + 1) + x*y", "y*y^-1", "(y^2)^-1"] {
        match parse_term(text, &ctx)? {
            Term::Module(u) => println!("module {text:>18} -> {u}"),
            Term::Group(w) => println!("group  {text:>18} -> {w}"),
        }
    }
    let q = parse_qid("x*y - x = 0 => y = 1", &FreeContext::standard(f, 1, 1))?;
    println!("qid: {q}");

    let bad = "field p=3\ngroup cyclic(2) as a\ndim 2\nact a = [[1,1],[0,1]]\n";
    match parse_rep_file(bad) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> repgeo::Result<()> {
    run()
}
