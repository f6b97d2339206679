//! Perfect-graph test through the degree-2 generators of the edge algebra,
//! with the odd holes and antiholes that witness imperfection.

use rees_covers::graph::{complete_bipartite, cycle, wheel};
use rees_covers::sra::{is_perfect, odd_antiholes, odd_holes};
use rees_covers::Limits;

fn main() -> rees_covers::Result<()> {
    let limits = Limits::default();
    let graphs = [
        ("C6", cycle(6)),
        ("K3,3", complete_bipartite(3, 3)),
        ("C7", cycle(7)),
        ("complement of C7", cycle(7).complement()),
        ("W5", wheel(5)),
    ];
    for (name, g) in graphs {
        let holes: Vec<_> = odd_holes(&g, &limits)?.into_iter().map(|r| r.vertices).collect();
        let antiholes: Vec<_> = odd_antiholes(&g, &limits)?.into_iter().map(|r| r.vertices).collect();
        println!("{name}: perfect = {}", is_perfect(&g, &limits)?);
        if !holes.is_empty() {
            println!("  odd holes {holes:?}");
        }
        if !antiholes.is_empty() {
            println!("  odd antiholes {antiholes:?}");
        }
    }
    Ok(())
}
