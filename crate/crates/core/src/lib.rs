//! Toolkit for r-dynamic list coloring.
//!
//! * [`graph`], [`generate`], [`io`]: graphs, hypergraphs and their text formats.
//! * [`coloring`]: proper / r-dynamic / r-strong predicates and exact solvers.
//! * [`transversal`]: small-transversal detection through a bounded candidate family.
//! * [`greedy`]: first-fit r-dynamic list coloring from lists of size `rΔ+1`.
//! * [`lll`]: random sublists repaired by resampling until no neighborhood can
//!   be covered by `r-1` colors, then an exact list coloring on the sublists.
//! * [`construction`]: incidence graphs of augmented hypergraphs and the
//!   lifting of strong colorings to dynamic ones.
//! * [`bounds`], [`experiment`]: bound calculators and seeded experiment reports.

pub mod bounds;
pub mod coloring;
pub mod construction;
pub mod experiment;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod lll;
pub mod transversal;
