use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order the exhaustive `3^n` / `2^n` searches run on by default.
pub const DEFAULT_SIZE_CAP: usize = 16;

/// Hard ceiling imposed by the 32-bit vertex masks.
pub const MAX_SIZE_CAP: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub size_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { size_cap: DEFAULT_SIZE_CAP }
    }
}

impl Limits {
    pub fn new(size_cap: usize) -> Result<Self> {
        if size_cap > MAX_SIZE_CAP {
            return Err(Error::InvalidArgument(format!(
                "size cap {size_cap} exceeds the supported maximum {MAX_SIZE_CAP}"
            )));
        }
        Ok(Limits { size_cap })
    }

    pub fn check(&self, order: usize) -> Result<()> {
        if order > self.size_cap {
            return Err(Error::SizeLimit { order, cap: self.size_cap });
        }
        Ok(())
    }
}
