use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The CLI maps these onto exit codes: domain problems exit with 2,
/// verification failures with 3.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative deformation parameter: {name} = {value}")]
    NegativeParameter { name: &'static str, value: f64 },

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("first-order correction diverges for n={n}, l={l}, D={dim}")]
    DivergentLevel { n: u32, l: u32, dim: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("quadrature did not converge after {subdivisions} subdivisions (estimated error {abs_error:e}, target {target:e})")]
    NonConvergent {
        subdivisions: usize,
        abs_error: f64,
        target: f64,
    },

    #[error("invalid Lamb-shift data: {0}")]
    InvalidData(String),

    #[error("no sign change found for eta = {eta} on xi in [{lo:e}, {hi:e}]")]
    NoRoot { eta: f64, lo: f64, hi: f64 },

    #[error("correction is not monotone in xi near {xi:e} (eta = {eta})")]
    NonMonotone { eta: f64, xi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
