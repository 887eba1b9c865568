//! Exact first- and second-order derivatives of small dense neural networks,
//! with the Hessian kept in Kronecker-factored form, plus eigenvalue analysis
//! of that curvature and independent finite-difference verification.
//!
//! # What this crate does
//!
//! For a feedforward network `z^(k) = f(W^(k) z^(k-1) + b^(k))` trained under
//! the squared error `E = 1/2 ||z* - z^(l)||^2`, the gradient with respect to
//! each weight matrix is a rank-one outer product, and the Hessian of each
//! layer is a Kronecker product `L^(k) ⊗ (z^(k-1) z^(k-1)ᵀ)` of a small
//! "left" curvature factor with the outer product of the layer input. This
//! crate computes those factors exactly (no Gauss-Newton truncation), both
//! for feedforward networks and for recurrent networks unrolled over time,
//! where the per-step gradient is rank-`t` and the Hessian is a sum of `t²`
//! Kronecker terms.
//!
//! Everything is verified against finite differences: the analytic gradient
//! against central differences of the loss, and the analytic Hessian against
//! central differences of the analytic gradient.
//!
//! # Module map
//!
//! - [`linalg`] — dense row-major matrices, Jacobi eigendecomposition,
//!   one-sided Jacobi SVD, Kronecker products, numerical rank.
//! - [`model`] — activation functions with first and second derivatives,
//!   feedforward and recurrent model types, JSON (de)serialization and
//!   validation, parameter updates.
//! - [`fnn`] — forward trace, backpropagation, mini-batch gradients, exact
//!   structured Hessians, and the ReLU shortcut path for feedforward nets.
//! - [`rnn`] — forward trace over time, backpropagation through time with
//!   per-step rank-`t` factors, exact structured Hessians for `W`, `U`, `b`,
//!   and the ReLU shortcut path.
//! - [`spectral`] — exact eigenvalue identities for Kronecker-structured
//!   curvature, per-term spectra, and interval bounds for the full recurrent
//!   Hessian spectrum.
//! - [`oracle`] — finite-difference gradient/Hessian oracles, comparison
//!   reports, and a deterministic fixture generator built on an explicit
//!   64-bit linear congruential generator.
//! - [`report`] — JSON/CSV report types emitted by the `nncurv` binary.
//!
//! # Conventions
//!
//! - All numerics are `f64`. Matrices are dense and row-major.
//! - Eigenvalues and singular values are reported in **ascending** order.
//! - Weight entries flatten row-major: `w_ij ↦ (i-1)·n + (j-1)` (0-based in
//!   code), which is what makes the layer Hessian literally
//!   `L ⊗ (z zᵀ)` rather than a permutation of it.
//! - Hidden state before the first step of a recurrent network is zero.
//!
//! # Quick start
//!
//! ```
//! use nncurv::model::{Activation, FnnModel, Layer, Sample};
//! use nncurv::linalg::{Matrix, Vector};
//! use nncurv::fnn;
//!
//! // 2-in, 2-out single sigmoid layer.
//! let w = Matrix::from_rows(&[&[0.3, -0.1], &[0.2, 0.4]]).unwrap();
//! let b = Vector::new(vec![0.1, -0.2]).unwrap();
//! let model = FnnModel::new(vec![Layer::new(w, b, Activation::Sigmoid).unwrap()]).unwrap();
//! let sample = Sample::fnn(vec![0.5, -0.3], vec![0.8, 0.1]).unwrap();
//!
//! let trace = fnn::forward(&model, &sample).unwrap();
//! let grads = fnn::backprop(&model, &trace).unwrap();
//! let hess = fnn::hessian(&model, &trace).unwrap();
//! // Layer-0 weight Hessian as a dense (m·n)×(m·n) matrix:
//! let dense = hess.assemble_dense_w(0).unwrap();
//! assert_eq!(dense.rows(), 4);
//! # let _ = grads;
//! ```

pub mod fnn;
pub mod linalg;
pub mod model;
pub mod oracle;
pub mod report;
pub mod rnn;
pub mod spectral;

/// Crate-wide error type.
///
/// Variants group into input/validation failures (bad dimensions, malformed
/// JSON, out-of-range selectors), numerical-precondition failures (asymmetric
/// input to the symmetric eigensolver, a ReLU pre-activation at its kink
/// where the second derivative is undefined), and iteration failures.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A matrix or vector constructor was handed a non-finite entry.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// Operand shapes are incompatible for the named operation.
    #[error("dimension mismatch in {op}: {details}")]
    DimensionMismatch { op: &'static str, details: String },

    /// The symmetric eigensolver was handed a matrix whose asymmetry exceeds
    /// the relative tolerance.
    #[error("matrix not symmetric: asymmetry {asymmetry:.3e} > tolerance {tolerance:.3e}")]
    NotSymmetric { asymmetry: f64, tolerance: f64 },

    /// An iterative kernel failed to meet its convergence criterion.
    #[error("{algorithm} did not converge within {max_sweeps} sweeps")]
    NoConvergence {
        algorithm: &'static str,
        max_sweeps: usize,
    },

    /// Model construction or deserialization violated a structural invariant.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// Sample construction or deserialization violated a structural invariant.
    #[error("invalid sample: {0}")]
    InvalidSample(String),

    /// A ReLU pre-activation fell within the kink tolerance of zero, where
    /// the second derivative does not exist; Hessian operations refuse.
    #[error(
        "relu kink: |pre-activation| < {tolerance:.1e} at layer {layer}, step {step}, \
         unit {unit}; second derivative undefined"
    )]
    ReluKink {
        layer: usize,
        step: usize,
        unit: usize,
        tolerance: f64,
    },

    /// A ReLU-only shortcut was invoked on a model containing another
    /// activation.
    #[error("layer {layer} uses {found}, but this operation requires relu throughout")]
    NotRelu { layer: usize, found: String },

    /// A layer, time-step, or term selector was out of range.
    #[error("selector out of range: {0}")]
    Selection(String),

    /// Dense assembly was refused because the result would exceed the cap.
    #[error("dense assembly refused: {side}×{side} exceeds the {cap}×{cap} cap")]
    DenseTooLarge { side: usize, cap: usize },

    /// The fixture generator exhausted its rejection-sampling budget (ReLU
    /// fixtures must keep every pre-activation away from the kink).
    #[error("no kink-free relu fixture found after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// Filesystem failure.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    ///
    /// `2` = input/validation error, `3` = violated math precondition
    /// (currently only the ReLU kink). Verification *failure* is not an
    /// error — the CLI maps a failed [`oracle::VerificationReport`] to
    /// exit code `4` itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ReluKink { .. } => 3,
            _ => 2,
        }
    }
}
