//! Minimal Hilbert basis of a rational cone given by rays, then semigroup
//! membership against it.

use rees_covers::hilbert::{hilbert_basis, in_semigroup};
use rees_covers::polyhedra::{dd_facets, RayList};
use rees_covers::Limits;

fn main() -> rees_covers::Result<()> {
    let cone = RayList::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]])?;
    println!("facets: {:?}", dd_facets(&cone)?.normals());
    let basis = hilbert_basis(&cone, &Limits::default())?;
    println!("Hilbert basis ({} elements):", basis.len());
    for h in &basis.elements {
        println!("  {h:?}");
    }
    for p in [vec![2, 2, 3], vec![1, 1, 1], vec![2, 0, 1]] {
        println!("{p:?} in semigroup: {}", in_semigroup(&basis, &p)?);
    }
    Ok(())
}
