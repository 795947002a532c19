//! Audit engine (under construction).
