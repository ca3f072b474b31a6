//! Experiment runners (placeholder while the core library is built).
