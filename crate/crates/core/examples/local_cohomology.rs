//! Local cohomology by duality, depth, and partial regularity.

use cmreg::corpus::parse_corpus;
use cmreg::homological::{depth_and_cm_test, local_cohomology_profile, IndexSet};

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module M
relations
[x^2]
[x*y]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let m = file.module("M").expect("declared above");
    let profile = local_cohomology_profile(m)?;
    for (j, top) in profile.top_degree.iter().enumerate() {
        println!("H^{j}: top degree {top}");
    }
    println!("nonzero graded pieces in the default window:");
    for ((j, i), d) in &profile.dims {
        println!("  dim H^{j}(M)_{i} = {d}");
    }
    let n = m.ring().num_vars();
    for x in [IndexSet::new(n, [0]), IndexSet::from(n, 1), IndexSet::full(n)] {
        println!("reg^{x}(M) = {}", profile.partial_regularity(&x));
    }
    let info = depth_and_cm_test(m)?;
    println!("depth {} dim {} Cohen-Macaulay {}", info.depth, info.dim, info.cohen_macaulay);
    Ok(())
}
