//! Generalized Möbius ladders `M_{m,n}`, their line graphs, M-polynomials and
//! degree-based topological indices, all in exact rational arithmetic.
//!
//! ```
//! use mobius_mpoly::{ladder, indices_from_edges, indices_from_mpoly, Alpha, RenderFormat};
//!
//! let g = ladder(7, 3).unwrap();
//! let m = g.m_polynomial();
//! assert_eq!(m.render(RenderFormat::Plain), "12*x^3*y^3+12*x^3*y^4+6*x^4*y^4");
//!
//! let alphas = [Alpha::from(1)];
//! let by_edges = indices_from_edges(&g, &alphas);
//! let by_poly = indices_from_mpoly(&m, &alphas).unwrap();
//! assert_eq!(by_edges, by_poly);
//! ```

pub mod cli;
pub mod closed_forms;
pub mod graph;
pub mod indices;
pub mod json;
pub mod ladder;
pub mod polynomial;
pub mod verify;

pub use closed_forms::{prop41_indices, prop42_indices, thm31_mpoly, thm32_mpoly, PaperIndexSet};
pub use graph::{EdgeDegreePartition, Graph, GraphError};
pub use indices::{indices_from_edges, indices_from_mpoly, Alpha, IndexSet, IndexValue};
pub use ladder::{build_ladder, ladder, LadderError, LadderParams};
pub use polynomial::{poly_add, MPoly, PolyError, Rational, RenderFormat};
pub use verify::{
    verify_propositions, verify_thm31, verify_thm32, CaseResult, GridRange, VerificationReport,
};
