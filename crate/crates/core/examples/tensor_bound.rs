//! Regularity of tensor products and of `IM`, with the Tor-dimension gate.

use cmreg::corpus::parse_corpus;
use cmreg::harness::{check_ideal_module_bound, check_tensor_bound};

const INPUT: &str = "\
ring p=32003 vars=x,y,z
module M
relations
[x^2]
[y*z]

module N
relations
[y^2]
[x*z]

module L
relations
[x]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let get = |n: &str| file.module(n).expect("declared above");
    for (a, b) in [("M", "N"), ("L", "L"), ("M", "L")] {
        let rep = check_tensor_bound(&format!("{a}x{b}"), get(a), get(b), 0)?;
        println!("{a} ⊗ {b}: {:?} {}", rep.verdict, serde_json::to_string(&rep.quantities).unwrap());
    }
    let ideal: Vec<_> = get("N").relations().iter().map(|c| c[0].clone()).collect();
    let rep = check_ideal_module_bound("IM", &ideal, get("M"))?;
    println!("I = (y^2, xz), M: {:?} {}", rep.verdict, serde_json::to_string(&rep.quantities).unwrap());
    Ok(())
}
