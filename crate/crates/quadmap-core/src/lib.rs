//! Exact-arithmetic engine that classifies quadratic polynomial maps of the
//! plane into their finitely many affine-equivalence orbits, over both the
//! complex and the real field, and computes the attached geometric data:
//! critical conic, discriminant curve, topological degree, non-properness
//! set, orbit dimension, normalization witnesses and the orbit-closure poset.
//!
//! All arithmetic is exact: arbitrary-precision rationals, optionally
//! extended by adjoined square roots. No floating point anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classifier;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod map;
pub mod normalizer;
pub mod orbit;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod tower;

pub use map::{act, graded_parts, random_affine_pair, AffineMap, AffinePair, QuadraticMap, QuadraticPoly};
pub use rational::Rational;
pub use tower::{Tower, TowerScalar};
