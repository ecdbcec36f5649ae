//! Independence complexes, links, Z/2 homology and collapse search.

mod cells;
mod collapse;
mod kozlov;
mod link;
mod simplicial;

pub use cells::{z2_betti, AsCellComplex, BettiVector, CellComplex};
pub use collapse::{
    collapse_search, collapse_search_seeded, verify_certificate, CollapseCertificate, CollapseVerdict,
    NotCollapsibleReason, EXHAUSTIVE_LIMIT,
};
pub use kozlov::{kozlov_reference_betti, KozlovFamily};
pub use link::{link_of_face, matched_region_graph, Link};
pub use simplicial::{independence_complex, SimplicialComplex};

#[cfg(test)]
mod tests;
