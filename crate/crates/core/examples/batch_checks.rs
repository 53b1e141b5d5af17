//! Every checker over a small seeded batch, as `cmreg check` runs them.

use cmreg::harness::{run_checks, CheckKind, Recipe, Tally};

fn main() -> cmreg::Result<()> {
    let recipe: Recipe = "mixed:vars=2-3,gens=1-2".parse()?;
    for kind in CheckKind::ALL {
        let results = run_checks(kind, &recipe, 42, 40);
        let errors = results.iter().filter(|r| r.is_err()).count();
        let reports: Vec<_> = results.into_iter().filter_map(Result::ok).collect();
        println!("{kind:<12} {} ({errors} errors)", Tally::of(&reports));
    }
    Ok(())
}
