//! Boundary integral equation solver for the 2D transmission problem of an
//! obliquely incident time-harmonic electromagnetic wave scattered by a
//! two-layer penetrable cylinder.
//!
//! The cylinder cross section consists of a core region `Omega2` bounded by a
//! closed curve `Gamma1`, an annular layer `Omega1` between `Gamma1` and an
//! outer curve `Gamma0`, and the unbounded exterior `Omega0`. The z-components
//! of the electric and magnetic fields satisfy Helmholtz equations with
//! region-dependent wavenumbers, coupled through transmission conditions that
//! mix normal and tangential derivatives (the coupling strength is set by the
//! incidence angle). Fields are represented by single and double layer
//! potentials; the resulting system of boundary integral equations is
//! discretized with a Nystrom method on equidistant nodes, with spectrally
//! accurate quadrature for the logarithmic kernel singularities.
//!
//! The crate exposes the individual building blocks (special functions,
//! quadrature rules, boundary operators) as well as a high level driver that
//! solves a scattering scenario and evaluates near fields, far fields and
//! field maps. The `verify` module reproduces reference configurations with
//! known closed-form solutions and measures convergence against them.

pub mod boundary_ops;
pub mod exec;
pub mod fields;
pub mod geometry;
pub mod linalg;
pub mod media;
pub mod quadrature;
pub mod specfun;
pub mod system;
pub mod verify;

/// Complex double, the scalar type of every field quantity in this crate.
pub type C64 = num_complex::Complex64;

pub use exec::Exec;
pub use fields::{FarFieldSamples, FieldMap, SolvedScenario};
pub use geometry::{BoundaryCurve, CollocationGrid, Region};
pub use media::{derive_params, DerivedParams, MediumConfig};
pub use system::{solve_scenario, DensitySet, Excitation, SolveReport, TransmissionProblem};
pub use verify::{convergence_study, AnalyticScenario, ConvergenceReport};
