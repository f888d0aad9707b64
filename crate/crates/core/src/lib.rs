//! Training-dynamics laboratory for a from-scratch LSTM sentiment classifier.
//!
//! The crate trains a small LSTM with exact backpropagation through time,
//! probes the trained cell's asymptotic stability after every epoch by
//! iterating twin perturbed trajectories long past the input, classifies each
//! epoch as ordered or chaotic, detects loss descent cycles and phase
//! transitions, and reproduces the same order-chaos phenomenology on a
//! one-dimensional tanh map.

pub mod map1d;
pub mod rng;
