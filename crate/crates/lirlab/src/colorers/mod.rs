//! Constructive colorers: each returns a doubling plan and checks it.

pub mod cactus;
pub mod complete;
pub mod multipartite;
pub mod paths;
pub mod powcycle;
pub mod split;
pub mod tree;

pub use cactus::color_special_cactus;
pub use complete::{color_complete, complete_doublings};
pub use multipartite::{bipartite_subset, color_complete_multipartite};
pub use paths::{color_cycle, color_path, cycle_doublings, path_doublings};
pub use powcycle::{
    assemble, build_a, build_b, build_degree_list, choose_parameters, color_power_of_cycle, distance_properties,
    DegreeList, HalfEdgeGraph, Mode, PowerCycleParams,
};
pub use split::{color_split, needs_doubling};
pub use tree::{color_tree, tree_2liec, two_aliec_shrub};

use crate::error::Result;
use crate::families::{eighth_gadget, FamilySpec};
use crate::graph::{DoublingPlan, Multigraph};

/// The constructive plan for a family, `None` for families without one
/// (the bow-tie, almost irregular graphs and triangle chains).
pub fn color_family(spec: &FamilySpec) -> Option<Result<(Multigraph, DoublingPlan)>> {
    Some(match spec {
        FamilySpec::Path(n) => color_path(*n),
        FamilySpec::Cycle(n) => color_cycle(*n),
        FamilySpec::Complete(n) => color_complete(*n),
        FamilySpec::CompleteMultipartite(sizes) => color_complete_multipartite(sizes),
        FamilySpec::PowerOfCycle { n, k } => color_power_of_cycle(*n, *k),
        FamilySpec::Split { clique, pendants } => color_split(*clique, pendants),
        FamilySpec::TauStar(script) => color_special_cactus(script),
        FamilySpec::EighthGadget(m) => eighth_gadget(*m),
        FamilySpec::Bowtie | FamilySpec::AlmostIrregular { .. } | FamilySpec::TriangleChain(_) => return None,
    })
}
