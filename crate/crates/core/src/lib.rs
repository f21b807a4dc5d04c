//! Free-group machinery for pretzel knots: exact word arithmetic, integer
//! normal forms, Reidemeister-Schreier rewriting, Stallings foldings,
//! Nielsen/Whitehead moves, free-factor certificates, and the verdict layer
//! that assembles them into orderability statements about knot groups.

pub mod classify;
pub mod coset;
pub mod fold;
pub mod freefactor;
pub mod intmat;
pub mod knot;
pub mod nielsen;
pub mod word;

pub use classify::{analyze, AnalyzeError, KnotReport};
pub use coset::SchreierSystem;
pub use fold::SubgroupGraph;
pub use freefactor::{Budget, FfOutcome, FfVerdict};
pub use intmat::{AbelianQuotient, IntMatrix};
pub use knot::{AlexanderPolynomial, PretzelKnot};
pub use word::{Alphabet, Letter, Word};
