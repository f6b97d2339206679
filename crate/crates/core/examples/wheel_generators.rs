//! Generators of the symbolic Rees algebra of the edge ideal of the wheel
//! W5, the cone over a pentagon, with the elements predicted by the
//! cone-lift constructions marked.

use rees_covers::graph::{cycle, VertexSet};
use rees_covers::sra::{building_lemma_lift, cone_lift_facet, sra_edge_ideal, Provenance};
use rees_covers::{CoverVector, Limits};

fn main() -> rees_covers::Result<()> {
    let limits = Limits::default();
    let c5 = cycle(5);
    let w5 = c5.cone_over()?;
    let mut gens = sra_edge_ideal(&w5.to_clutter(), &limits)?;

    let lifted = cone_lift_facet(&c5, &CoverVector::new(vec![1; 5], 3)?, &limits)?;
    let built = building_lemma_lift(&c5, &VertexSet::full(5))?;
    gens.mark_predicted(&lifted);
    gens.mark_predicted(&built);

    println!("W5: {} generators, counts by degree {:?}", gens.len(), gens.generators().by_degree());
    for v in gens.generators().iter().filter(|v| v.b >= 2) {
        let predicted = gens.provenance(v).is_some_and(|t| t.contains(&Provenance::ConeLift));
        println!("  {v}{}", if predicted { "  (cone lift)" } else { "" });
    }
    Ok(())
}
