//! Placeholder for cross-module word/graph tests, filled in with the
//! conversion layer.
