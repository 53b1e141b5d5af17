//! Minimal free resolutions and Betti tables.

use cmreg::corpus::parse_corpus;
use cmreg::homological::free_resolution;

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module three_quadrics
relations
[x*z - y^2]
[x*y - 3*z^2]
[y*z - x^2]

module koszul_field
relations
[x]
[y]
[z]

module rank_two
shifts 0,1
relations
[x^2, y]
[y^2, z]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    for (name, m) in &file.modules {
        let res = free_resolution(m, true)?;
        println!("{name}: ranks {:?}, reg {}", res.ranks(), res.betti_table().regularity());
        print!("{}", res.betti_table());
        println!();
    }
    Ok(())
}
