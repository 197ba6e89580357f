//! Computations with finite quandles.
//!
//! * [`permgroup`]: permutations and brute-force permutation groups
//! * [`qcore`]: the quandle type, axiom checks, standard examples, text/JSON IO
//! * [`analysis`]: inner automorphism groups, connectivity, two-point
//!   homogeneity, cyclic type, isomorphism
//! * [`alexander`]: linear Alexander quandles and the classification of
//!   two-point homogeneous quandles of prime order
//! * [`census`]: enumeration of small quandles up to isomorphism
//! * [`cli`]: the `quandle` command-line front end
//!
//! Sweeps over independent inputs run on rayon when the `parallel` feature
//! (on by default) is enabled; see [`exec::Execution`].

pub mod alexander;
pub mod analysis;
pub mod census;
pub mod cli;
pub mod exec;
pub mod permgroup;
pub mod qcore;

pub use alexander::{classify_prime, linear_alexander, primitive_roots, ClassificationRecord};
pub use analysis::{analyze, is_isomorphic, AnalysisReport};
pub use exec::Execution;
pub use permgroup::{PermGroup, Permutation};
pub use qcore::{dihedral, tetrahedron, trivial, verify, AxiomReport, Quandle};
