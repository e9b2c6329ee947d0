//! Buchberger's algorithm, normal forms, ideal membership and monomial bases
//! of graded components of quotient rings.
//!
//! The engine is deterministic: pairs are processed by minimal weighted lcm
//! degree with FIFO tie-break, the Gebauer-Moeller product and chain criteria
//! prune useless pairs, and the returned basis is the reduced (hence unique)
//! Groebner basis of the ideal for the chosen order.
//!
//! For homogeneous ideals a degree-truncated run is available; it produces
//! every basis element of lead degree up to the bound, which is exactly what
//! graded dimension counts below that degree need.

mod basis;
mod engine;
mod order;

pub use basis::GroebnerBasis;
pub use engine::{buchberger, buchberger_bounded, extend_basis};
pub use order::{MonomialOrder, OrderKind};

/// Caps on the Buchberger engine. Exceeding a cap aborts the run with a
/// limit error instead of returning a possibly wrong or never-finishing
/// answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximal number of basis elements the engine may accumulate.
    pub max_basis: u64,
    /// Maximal bit length of any single coefficient (numerator plus
    /// denominator) of an inserted basis element.
    pub max_coeff_bits: u64,
}

impl Budget {
    /// Sized so that every rank <= 4 case this crate targets completes;
    /// rank 5 typically needs [`Budget::large`].
    pub const fn laptop() -> Self {
        Budget { max_basis: 4000, max_coeff_bits: 1 << 14 }
    }

    pub const fn large() -> Self {
        Budget { max_basis: 200_000, max_coeff_bits: 1 << 22 }
    }

    pub const fn unlimited() -> Self {
        Budget { max_basis: u64::MAX, max_coeff_bits: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::laptop()
    }
}
