//! Boundaries, cycles and homology of Koszul complexes and of `F ⊗ N`, with
//! the partial-regularity statements checked at the least admissible `m`.

use cmreg::corpus::parse_corpus;
use cmreg::harness::{verify_complex_lemma_tight, ExplicitComplex};
use cmreg::homological::IndexSet;

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module M
relations
[x^2]
[x*y]

module N
relations
[z^2]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let m = file.module("M").expect("declared above");
    let n = file.module("N").expect("declared above");
    let x = IndexSet::full(3);
    let complexes = [
        ("Koszul(x, y) ⊗ M", ExplicitComplex::koszul(m, &[0, 1])),
        ("F(M) ⊗ N", ExplicitComplex::resolution_tensor(m, n)?),
    ];
    for (name, c) in complexes {
        let ranks: Vec<usize> = c.modules.iter().map(|p| p.ambient().rank()).collect();
        let rep = verify_complex_lemma_tight(name, &c, &x)?;
        println!("{name}: ranks {ranks:?}, {:?}", rep.verdict);
        for (k, v) in &rep.quantities {
            println!("  {k} = {v}");
        }
    }
    Ok(())
}
