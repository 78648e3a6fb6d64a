#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

mod dd;
mod linalg;

pub mod binet;
pub mod expr;
pub mod recurrence;
pub mod roots;
pub mod unity;

pub use num_bigint::BigInt;

pub type Complex = num_complex::Complex64;
