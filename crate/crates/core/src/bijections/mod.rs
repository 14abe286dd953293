//! The four partition maps and their inverses.

mod eta;
mod indent;
mod phi;
mod psi;
mod theta;

pub use eta::{eta, eta_inverse};
pub use indent::{two_indent, IndentedPeel};
pub use phi::{phi, phi_inverse};
pub use psi::{psi, psi_inverse, psi_trace, PartitionPair, PsiTrace};
pub use theta::{theta, theta_inverse, theta_trace, ThetaTrace};
