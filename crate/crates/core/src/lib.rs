//! Ext over graded complete intersections: Hilbert series, Gröbner bases for
//! modules, minimal resolutions, Ext profiles, asymptotic invariants, Eisenbud
//! operators and the associated dimension and order verifiers.

pub mod corpus;
pub mod error;
pub mod ext;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod laurent;
pub mod linalg;
pub mod module;
pub mod operators;
pub mod poly;
pub mod ring;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use ext::{ExtComputer, ExtProfile, HomComplex};
pub use field::{CoefficientField, Field, PrimeField, Rationals};
pub use hilbert::{HilbertSeries, LaurentPoly};
pub use invariants::{Dim, Dimensions, HilbertPolynomials, PairAnalysis, RatPoly};
pub use laurent::{LaurentExpansion, Order};
pub use module::{PresentedModule, Resolution};
pub use operators::{EisenbudOperators, SuperficialElement, SuperficialOptions};
pub use poly::{Monomial, Poly, PolyRing};
pub use ring::{QuotientRing, Ring};
pub use vector::Vector;
pub use verify::{Assertions, TheoremId, Verdict, VerdictReport};
