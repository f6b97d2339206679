//! Irredundant facet description of the Rees cone of an edge ideal and
//! the generators it yields directly.

use rees_covers::graph::complete;
use rees_covers::polyhedra::{irreducible_representation, psi_image, simis_cone};
use rees_covers::Limits;

fn main() -> rees_covers::Result<()> {
    let k4 = complete(4).to_clutter();
    let rep = irreducible_representation(&k4)?;
    println!("coordinate facets {:?}", rep.coordinate);
    println!("cover facets {:?}", rep.cover_normals);
    println!("deep facets {:?}", rep.deep_normals);
    for v in psi_image(&rep)?.iter() {
        println!("  {}", v.monomial());
    }
    let simis = simis_cone(&k4, &Limits::default())?;
    println!("Simis cone: {} halfspaces", simis.normals().len());
    Ok(())
}
