//! Exact symbolic computation for matrix quantum groups and quantum spheres.
//!
//! Everything is computed over the field of rational functions in the
//! deformation parameter `q` with integer coefficients — no floating point,
//! no numerical approximation.  The crate provides:
//!
//! - [`scalar`]: the coefficient field Q(q) in canonical reduced form;
//! - [`tower`]: the extension field Q(q)(c) for a symbolic sphere parameter;
//! - [`linalg`]: exact dense linear algebra over any [`scalar::Field`];
//! - [`ncalg`]: free noncommutative polynomials, tensor-square/cube
//!   polynomials, monomial orders, and terminating rewrite systems with
//!   critical-pair analysis;
//! - [`hopf`]: matrix quantum groups presented by intertwiner relations,
//!   with comultiplication, counit, derived antipode, star structures, and
//!   machine-checked Hopf(-*) axioms;
//! - [`corep`]: corepresentation matrices, their tensor calculus, and
//!   intertwiner (morphism) space computation;
//! - [`hecke`]: the braid operator, Hecke relations, q-symmetrizers, and
//!   the symmetric subspaces carrying the irreducible corepresentations;
//! - [`spin`]: the spin-l corepresentations and Clebsch-Gordan decomposition
//!   checks;
//! - [`lorentz`]: the compatibility conditions for coupling a matrix quantum
//!   group with its conjugate through a mixing intertwiner;
//! - [`haar`]: the Haar functional computed exactly from orthogonality
//!   relations, with the modular automorphism and positivity certificates;
//! - [`sphere`]: the quantum 2-sphere algebras with their coactions, over a
//!   numeric or symbolic family parameter;
//! - [`parse`]: parsers and serializers for scalars, algebra elements, and
//!   presentation files;
//! - [`report`]: structured pass/fail check reports shared by the above.

pub mod corep;
pub mod haar;
pub mod hecke;
pub mod hopf;
pub mod linalg;
pub mod lorentz;
pub mod ncalg;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod sphere;
pub mod spin;
pub mod tower;
