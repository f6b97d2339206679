//! Minimal generators of the symbolic powers of the edge ideal of a
//! pentagon; the third one picks up the product of all five variables.

use rees_covers::graph::cycle;
use rees_covers::sra::symbolic_power_generators;
use rees_covers::Limits;

fn monomial(a: &[u32]) -> String {
    a.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
        .collect::<Vec<_>>()
        .join("*")
}

fn main() -> rees_covers::Result<()> {
    let c5 = cycle(5).to_clutter();
    for b in 1..=3 {
        let gens = symbolic_power_generators(&c5, b, &Limits::default())?;
        println!("b = {b}: {} generators", gens.len());
        for a in gens.iter().filter(|a| a.iter().sum::<u32>() < 2 * b) {
            println!("  {}", monomial(a));
        }
    }
    Ok(())
}
