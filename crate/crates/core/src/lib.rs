//! Desk-scale laboratory for imagination-augmented agents.
//!
//! The crate is organised around a small stack:
//!
//! * [`numerics`] — flat parameter storage, a tape-based reverse-mode
//!   autodiff, a seeded PRNG, an RMSprop optimizer and a finite-difference
//!   gradient checker. Everything learned in this crate runs on it.
//! * [`sokoban`] / [`minipacman`] — the two grid environments, with
//!   procedural Sokoban generation under [`sokoban::procgen`].
//! * [`model`] — the environment-model abstraction used for imagination:
//!   simulator-backed, corrupted, copy and learned tile-transition models,
//!   all with exact call accounting.
//! * [`plan`] — planning baselines over a model: UCT-MCTS with depth-wise
//!   transposition tables, rollout-return Monte-Carlo search, nested mental
//!   retries and an exhaustive BFS oracle.
//! * [`agent`] — the imagination-augmented agent (per-action rollouts,
//!   reverse-order rollout encoder, concatenating aggregator, two-path
//!   heads) plus the model-free and copy-model baselines.
//! * [`train`] — k-step advantage actor-critic surrogate losses, policy
//!   distillation and a synchronous training loop.
//! * [`harness`] — experiment drivers: imagination-efficiency accounting,
//!   generalization sweeps and model-misspecification comparisons.

pub mod agent;
pub mod env;
pub mod harness;
pub mod minipacman;
pub mod model;
pub mod numerics;
pub mod plan;
pub mod sokoban;
pub mod train;

pub use numerics::{GradTape, Layout, ParamVector, Rng, Var};
