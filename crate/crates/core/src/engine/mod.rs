//! Subgroup enumeration, normal abelian subgroups and Jordan constants.

mod classes;
mod jordan;
mod normal;

pub use classes::{subgroup_classes, SubgroupClass, SubgroupClassInventory};
pub use jordan::{jordan_constant, jordan_sup, subgroup_index, JordanReport};
pub use normal::{
    max_normal_abelian_in, min_index_normal_abelian, normal_abelian_profile, normal_subgroups,
    AbelianType, NormalAbelianProfile, ProfileEntry,
};

/// Largest group order the engine accepts by default.
pub const DEFAULT_MAX_ORDER: usize = 1920;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("group of order {order} exceeds the engine cap {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// Knobs shared by the engine entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub max_order: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            threads: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl EngineOptions {
    pub(crate) fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            None => f(),
            Some(n) => match rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
            {
                Ok(pool) => pool.install(f),
                // fall back to the caller's thread rather than failing
                Err(_) => f(),
            },
        }
    }
}
