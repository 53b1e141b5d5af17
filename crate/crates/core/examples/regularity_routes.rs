//! The same regularity from five routes.

use cmreg::corpus::parse_corpus;
use cmreg::homological::{local_cohomology_profile, regularity_from_betti};
use cmreg::regularity::{
    random_filter_regular_sequence, regularity_conca_recursive_with, regularity_postulation, regularity_sat_formula,
};

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module M
shifts 0,1
relations
[x*y, z]
[y^3, x*y]
[z^2, 0]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let m = file.module("M").expect("declared above");
    let dim = cmreg::hilbert::krull_dim(m)?.max(0) as usize;
    println!("Krull dimension {dim}");
    println!("betti               {}", regularity_from_betti(m)?);
    println!("local cohomology    {}", local_cohomology_profile(m)?.regularity());
    for (degrees, seed) in [(vec![1; dim], 1), (vec![2; dim], 2)] {
        let chain = random_filter_regular_sequence(m, &degrees, seed)?;
        println!("postulation {degrees:?}  {}", regularity_postulation(m, &chain)?);
        println!("saturation  {degrees:?}  {}", regularity_sat_formula(m, &chain)?);
    }
    println!("recursive (deg 2)   {}", regularity_conca_recursive_with(m, 3, 2)?);
    Ok(())
}
