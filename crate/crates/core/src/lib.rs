//! Exact computations with axial algebras.
//!
//! * [`exact`]: rationals, polynomials in λ and μ, matrices, resultants.
//! * [`fusion`]: fusion rules and the Virasoro rules 𝔙(p, q).
//! * [`algebra`]: commutative algebras given by structure constants, with
//!   axis, Miyamoto involution and Frobenius form checks.
//! * [`sakuma`]: the universal 2-generated 𝔙(4,3)-axial algebra over
//!   Q[λ, μ] and its nine Norton–Sakuma quotients.

pub mod algebra;
pub mod exact;
pub mod fusion;
pub mod sakuma;
pub mod scalar;

pub use exact::{Integer, Matrix, MultiPoly, Rational, Var, Vector};
pub use algebra::{StructureAlgebra, Subspace};
pub use fusion::{FusionRules, Grading};
pub use scalar::{Field, Ring};

pub type RationalMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<MultiPoly>;
pub type RationalAlgebra = StructureAlgebra<Rational>;
pub type PolyAlgebra = StructureAlgebra<MultiPoly>;
