//! Validators, excess accounting, lemma detectors and small deciders.

mod deciders;
mod excess;
mod lemmas;
mod validate;

pub use deciders::{decide_biplanar, decide_planar, decide_split2, max_edges, EdgeBound};
pub use excess::{excess_report, ExcessReport};
pub use lemmas::{
    lemma1_detect, lemma2_check, octahedron_partition_oracle, Lemma1Report, NeighborhoodReport, OctahedronPartitions,
};
pub use validate::{validate_drawing, ValidationReport, Violation};
