//! Perfect matchings of bipartite graphs read off the edge cone: a
//! connected bipartite graph has one iff the all-ones vector lies in the
//! cone spanned by its edge incidence vectors.

use num_rational::Rational64;
use rees_covers::graph::{complete_bipartite, cycle, path};
use rees_covers::sra::{bipartite_has_perfect_matching, edge_cone_member};
use rees_covers::Limits;

fn main() -> rees_covers::Result<()> {
    let limits = Limits::default();
    for (name, g) in [("P4", path(4)), ("P5", path(5)), ("C6", cycle(6)), ("K2,3", complete_bipartite(2, 3))] {
        let ones = vec![Rational64::from_integer(1); g.n()];
        println!(
            "{name}: perfect matching = {}, all-ones in edge cone = {}",
            bipartite_has_perfect_matching(&g, &limits)?,
            edge_cone_member(&g, &ones, &limits)?
        );
    }
    Ok(())
}
