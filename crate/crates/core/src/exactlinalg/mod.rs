//! Exact linear algebra: integer matrices with Smith normal form, integer
//! row lattices in Hermite form, and bit-packed matrices over GF(2).

mod gf2;
mod lattice;
mod snf;

pub use gf2::{BitVec, Gf2Basis, Gf2Matrix};
pub use lattice::Lattice;
pub use snf::{
    elementary_divisors, smith_normal_form, smith_with_transforms, IntMatrix, SmithForm,
};
