//! Brute-force size guard, overridable via `LENSLAB_MAX_TETS`.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_TETS: usize = 12;

pub fn max_tets() -> usize {
    std::env::var("LENSLAB_MAX_TETS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_TETS)
}

pub fn check(tets: usize) -> Result<()> {
    let limit = max_tets();
    if tets > limit {
        Err(Error::SizeGuard(tets, limit))
    } else {
        Ok(())
    }
}
