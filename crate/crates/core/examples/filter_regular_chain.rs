//! A seeded filter-regular chain with certificates, postulation numbers and
//! saturation indices of each restriction.

use cmreg::corpus::parse_corpus;
use cmreg::regularity::random_filter_regular_sequence;

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module M
relations
[x^2*y]
[x*z^2]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let m = file.module("M").expect("declared above");
    let chain = random_filter_regular_sequence(m, &[1, 2], 17)?;
    for (i, cert) in chain.certificates.iter().enumerate() {
        println!(
            "l_{} (degree {}, {} rejected draws): {}",
            i + 1,
            cert.degree,
            cert.retries_used,
            m.ring().format_poly(&cert.element)
        );
    }
    for (i, (a, s)) in chain.alphas.iter().zip(&chain.sat_indices).enumerate() {
        println!("M^{i}: alpha {a}, sat {s}, correction {}", chain.correction(i));
    }
    Ok(())
}
