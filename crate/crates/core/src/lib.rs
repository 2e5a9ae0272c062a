//! Higher-dimensional automata: precubical sets, cube paths up to
//! homotopy, unfoldings, and hd-bisimilarity with its game.

pub mod bisim;
pub mod error;
pub mod game;
pub mod io;
pub mod labels;
pub mod oracle;
pub mod paths;
pub mod precubical;
pub mod random;
pub mod unfolding;

pub use bisim::{
    hd_bisim, homotopy_bisim_check, is_open, lift_path, witness_span, BisimResult, PairRelation, WitnessSpan,
};
pub use error::{Error, Result, Violation};
pub use game::{Game, GamePosition, Move, Role, Side, Status};
pub use io::{emit_dot, parse_hda, serialize_hda, HdaDocument, IoError};
pub use labels::{infer_labeling, lift_function, torus_face, validate_labeling, LabelWord, Labeling};
pub use oracle::exhaustive_bisim_oracle;
pub use paths::{
    adjacent, concat, homotopic, homotopy_class, is_fan_shaped, is_prefix, normalize_fan, t_measure, CubePath,
    HomotopyClass, Step,
};
pub use precubical::{
    is_precubical_subset, product, product_hda, reachable, standard_cube, validate_morphism, validate_precubical,
    CubeId, CubeSpec, Hda, Limits, Morphism, PrecubicalSet,
};
pub use unfolding::{complete_depth, is_acyclic, is_hd_tree, lift_morphism, unfold, Unfolding};
