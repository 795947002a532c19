//! CLI surface (under construction).
