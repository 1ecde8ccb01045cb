//! Exact computation of identifying codes on small graphs.
//!
//! An identifying code of a graph is a vertex set that meets every closed
//! neighborhood (covering) and meets no two closed neighborhoods in the same
//! way (separation); the library computes minimum identifying codes, minimum
//! separating codes, and minimum separating codes not contained in any single
//! closed neighborhood, by pruned lexicographic subset search.
//!
//! On top of those sit the twin-class decomposition of a graph and the
//! machinery for lexicographic products `G[H]`: an identifiability criterion
//! decided from the factors, a closed formula for the minimum identifying
//! code size of the product, a fiber-by-fiber construction of an optimal
//! code, and brute-force verification of all of it.
//!
//! ```
//! use idcodes::{Graph, Solver, verify_theorem};
//!
//! let solver = Solver::default();
//! let p5 = Graph::path(5)?;
//! let (size, witness) = solver.min_identifying_code(&p5)?;
//! assert_eq!(size, 3);
//! assert_eq!(witness.to_vec(), vec![0, 2, 4]);
//!
//! // predict the minimum identifying code of P3[P4] and check it by force
//! let plan = verify_theorem(&Graph::path(3)?, &Graph::path(4)?, &solver)?;
//! assert_eq!(plan.predicted, 9);
//! assert_eq!(plan.verified, Some(true));
//! # Ok::<(), idcodes::Error>(())
//! ```

pub mod bitset;
pub mod error;
pub mod graph;
pub mod parse;
pub mod product;
pub mod solver;
pub mod twins;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{lex_product, Graph, ProductVertex, MAX_VERTICES};
pub use product::{
    check_slice_conditions, construct_product_code, corollary_value, product_identifiable,
    r_identifying_impossible, theorem_min_identifying, verify_theorem, Branch, ProductPlan,
};
pub use solver::{
    closed_form, covers, is_identifiable, is_identifying_code, is_separating_code, is_undominated,
    separates, CodeKind, CodeReport, Family, Method, ParamOutcome, Solver, DEFAULT_SEARCH_CAP,
};
pub use twins::{twin_classes, ReducedPartition, TwinPartition};
