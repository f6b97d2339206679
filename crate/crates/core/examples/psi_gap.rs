//! The facet-to-generator map on the nine-vertex triangle strip: every
//! facet of the Rees cone gives an irreducible cover, yet one irreducible
//! 2-cover does not come from a facet.

use rees_covers::graph::triangle_strip;
use rees_covers::polyhedra::{irreducible_representation, psi_image};
use rees_covers::sra::sra_cover_ideal;
use rees_covers::{CoverVector, Limits};

fn main() -> rees_covers::Result<()> {
    let limits = Limits::default();
    let g = triangle_strip(4);
    println!("edges: {:?}", g.edges());

    let rep = irreducible_representation(&g.to_clutter())?;
    let image = psi_image(&rep)?;
    let covers = sra_cover_ideal(&g, &limits)?;
    println!(
        "Rees cone: {} coordinate facets, {} cover facets, {} deep facets",
        rep.coordinate.len(),
        rep.cover_normals.len(),
        rep.deep_normals.len()
    );
    println!("irreducible covers: {}, facet images: {}", covers.len(), image.len());

    let missing = covers.generators().difference(&image);
    println!("irreducible covers that are not facet images:");
    for v in &missing {
        println!("  {:?} at b={}", v.a, v.b);
    }
    let a = CoverVector::new(vec![1, 1, 2, 0, 2, 1, 1, 1, 1], 2)?;
    println!(
        "(1,1,2,0,2,1,1,1,1) at b=2: generator {}, facet {}",
        covers.generators().contains(&a),
        rep.has_facet(&a.a, a.b)
    );
    Ok(())
}
