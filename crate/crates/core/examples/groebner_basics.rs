//! Gröbner basis, normal forms and syzygies of `(xy, x^2 + y^2)`.

use cmreg::algebra::{FreeModule, RingSpec};
use cmreg::corpus::parse_polynomial;
use cmreg::groebner::{buchberger, syzygies, TermOrder};

fn main() -> cmreg::Result<()> {
    let ring = RingSpec::standard(2);
    let p = |s: &str| parse_polynomial(&ring, s);
    let ambient = FreeModule::standard(ring.clone(), 1);
    let gens = vec![vec![p("x*y")?], vec![p("x^2 + y^2")?]];

    let gb = buchberger(&ambient, &gens, TermOrder::Top)?;
    println!("Gröbner basis:");
    for g in gb.generators() {
        println!("  {}", ring.format_poly(&g[0]));
    }
    for f in ["x^3", "y^3", "x^2*y + x*y^2 + y^3"] {
        let nf = gb.normal_form(&vec![p(f)?])?;
        println!("NF({f}) = {}", ring.format_poly(&nf[0]));
    }

    let (source, syz) = syzygies(&ambient, &gens)?;
    println!("syzygy module lives in R^{} with twists {:?}", source.rank(), source.twists());
    for s in syz {
        let entries: Vec<String> = s.iter().map(|e| ring.format_poly(e)).collect();
        println!("  [{}]", entries.join(", "));
    }
    Ok(())
}
