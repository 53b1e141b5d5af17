//! Generate an instance, write it in the corpus format, read it back.

use cmreg::corpus::{parse_corpus, render_corpus};
use cmreg::harness::{evaluate, generate_instance, plan_check, CheckKind, Recipe};

fn main() -> cmreg::Result<()> {
    let recipe: Recipe = "mixed:vars=3,gens=2,deg=1-3".parse()?;
    let inst = generate_instance(&recipe, 11);
    let file = plan_check(CheckKind::Almost, &inst)?;
    let text = render_corpus(&file);
    print!("{text}");
    let back = parse_corpus(&text)?;
    assert_eq!(render_corpus(&back), text);
    println!("{}", evaluate(&back)?.to_json_line());
    Ok(())
}
