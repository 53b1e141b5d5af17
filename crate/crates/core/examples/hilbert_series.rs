//! Hilbert series, Hilbert polynomial and postulation number.

use cmreg::corpus::parse_corpus;
use cmreg::hilbert::hilbert_series;

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module M
relations
[x^2]
[x*y]
[y^3]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let m = file.module("M").expect("declared above");
    let hs = hilbert_series(m)?;
    let num: Vec<String> = hs.numerator().terms().map(|(e, c)| format!("{c}*Z^{e}")).collect();
    println!("HS(M) = ({}) / (1-Z)^{}", num.join(" + "), hs.dim());
    let poly: Vec<String> = hs.hilbert_polynomial().coefficients().iter().map(|c| c.to_string()).collect();
    println!("P_M(i) coefficients by increasing power: {poly:?}");
    println!("postulation number: {}", hs.postulation_number());
    for i in -1..=6 {
        println!("  H_M({i}) = {:>2}   P_M({i}) = {:>2}", hs.value(i), hs.polynomial_value(i));
    }
    Ok(())
}
