//! Truncated formal power series in `q` over integer polynomials in the
//! markers `x, y, z, a, t`.

mod identities;
mod pochhammer;
mod poly;
mod series;

pub use identities::{
    gf_a_refined_rhs, gf_a_rhs, gf_l1_rhs, gf_l2_rhs, lebesgue_sides, qbinomial_sides, sylvester_sides,
};
pub use pochhammer::{inverse_q_pochhammer, pochhammer, pochhammer_capped, Length, PochhammerSpec};
pub use poly::{Caps, Marker, MarkerPoly, Monomial, MARKERS};
pub use series::{coeff, series_add, series_inverse, series_mul, Difference, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("integer overflow in series arithmetic")]
    Overflow,
    #[error("constant term {0} is not a unit")]
    NonUnit(String),
    #[error("q^{requested} is beyond the truncation order {order}")]
    BeyondOrder { requested: usize, order: usize },
    #[error("{0}")]
    InvalidSpec(String),
}
