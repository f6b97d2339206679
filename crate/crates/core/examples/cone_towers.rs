//! Generators of growing degree over repeated cones on odd cycles.

use rees_covers::graph::cycle;
use rees_covers::sra::cone_tower_generator;
use rees_covers::Limits;

fn main() -> rees_covers::Result<()> {
    let limits = Limits::default();
    for n in [5, 7, 9] {
        for r in 0..=3 {
            let v = cone_tower_generator(&cycle(n), r, &limits)?;
            println!("C{n}, {r} cones: {}", v.monomial());
        }
    }
    Ok(())
}
