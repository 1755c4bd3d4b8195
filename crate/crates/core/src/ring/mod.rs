//! Exact arithmetic in the integral group ring `ZG` and in matrices over it.
//!
//! Free modules `ZG^n` are left modules written as column vectors. A matrix `A`
//! with `rows × cols` entries is the module map `ZG^cols → ZG^rows` sending `v` to
//! `(A v)_i = Σ_j v_j · A_ij`; the ring element of the vector sits on the left of the
//! matrix entry so that the map commutes with left scalars. Composition is then the
//! matrix product `(A B)_ik = Σ_j B_jk · A_ij`, and [`GroupRingMatrix::integerize`]
//! uses the right regular representation so that integerization is multiplicative.

mod element;
mod matrix;

pub use element::GroupRingElement;
pub(crate) use element::same_group;
pub use matrix::GroupRingMatrix;
