//! Minimal vertex covers, covering number and the irreducible covers of a
//! few small graphs, grouped by how they arise.

use rees_covers::covers::{classify_irreducible_graph_covers, CoverKind};
use rees_covers::graph::{complete, complete_bipartite, cycle};
use rees_covers::Limits;

fn main() -> rees_covers::Result<()> {
    let limits = Limits::default();
    for (name, g) in [("C5", cycle(5)), ("K4", complete(4)), ("K2,3", complete_bipartite(2, 3))] {
        let blocker = g.to_clutter().blocker(&limits)?;
        println!("{name}: alpha0 = {}, minimal covers {:?}", g.alpha0(), blocker.edge_lists());
        for entry in classify_irreducible_graph_covers(&g, &limits)?.entries {
            let kind = match entry.kind {
                CoverKind::Unit { .. } => "unit",
                CoverKind::MinimalCover { .. } => "minimal cover",
                CoverKind::AllOnes => "all ones",
                CoverKind::TypeD { .. } => "independent set and neighbors",
            };
            if entry.cover.b >= 1 {
                println!("  {:<28} {kind}", entry.cover.monomial());
            }
        }
    }
    Ok(())
}
