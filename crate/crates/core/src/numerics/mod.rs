//! Numeric substrate: parameter storage, reverse-mode autodiff, PRNG,
//! optimizer and gradient checking.

mod gradcheck;
mod layers;
mod optim;
mod params;
mod rng;
mod tape;

pub use gradcheck::grad_check;
pub use layers::{lstm_step, softmax, LstmSlices};
pub use optim::RmsProp;
pub use params::{Layout, LayoutBuilder, ParamVector, SliceRef};
pub use rng::Rng;
pub use tape::{GradTape, Gradients, Var};

use thiserror::Error;

/// Errors raised by the numeric substrate.
#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("empty input to {context}")]
    Empty { context: &'static str },
    #[error("invalid argument for {context}: {message}")]
    InvalidArgument {
        context: &'static str,
        message: String,
    },
    #[error("unknown parameter slice `{0}`")]
    UnknownSlice(String),
}

pub(crate) fn ensure_finite(xs: &[f64], context: &'static str) -> Result<(), NumericsError> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(NumericsError::NonFinite { context })
    }
}
