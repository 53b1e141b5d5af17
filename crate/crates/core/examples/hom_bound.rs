//! The Hom bound under the Cohen–Macaulay gate and under the depth gate.
//!
//! `M = R(-1)^2 / ((x, y))` over `K[x, y]` passes the Cohen–Macaulay gate
//! (`Ext^1(M, R) = K(2)`) yet `reg Hom(M, R) = 0 > reg R - 1`.

use cmreg::corpus::parse_corpus;
use cmreg::harness::check_hom_bound;

const INPUT: &str = "\
ring p=32003 vars=x,y
module M
shifts 1,1
relations
[x, y]

module R
shifts 0

module Q
relations
[x]
";

fn main() -> cmreg::Result<()> {
    let file = parse_corpus(INPUT)?;
    let get = |n: &str| file.module(n).expect("declared above");
    for (a, b) in [("Q", "R"), ("R", "R"), ("M", "R")] {
        let rep = check_hom_bound(&format!("Hom({a},{b})"), get(a), get(b))?;
        println!("Hom({a}, {b}): {:?}", rep.verdict);
        for h in &rep.hypotheses {
            println!("  {}: {} ({})", h.name, h.value, if h.satisfied { "ok" } else { "fails" });
        }
        println!("  {}", serde_json::to_string(&rep.quantities).unwrap());
    }
    Ok(())
}
