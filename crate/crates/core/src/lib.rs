pub mod artin_system;
pub mod cli;
pub mod decompose;
pub mod dihedral;
pub mod error;
pub mod exponent;
pub mod kernel_omega;
pub mod subgroups;
pub mod vertex_set;
pub mod word_problem;
pub mod words;

pub use artin_system::ArtinSystem;
pub use error::{Error, Result};
pub use exponent::Exp;
pub use vertex_set::VertexSet;
pub use word_problem::WordProblem;
pub use words::{Syllable, Word};
