//! Resource caps and tuning knobs.
//!
//! Precedence is caller-supplied value, then `ENGEL_*` environment
//! variable, then built-in default.

/// Caps and switches threaded through group construction and the graph
/// algorithms. Immutable once a group has been built from it.
#[derive(Debug, Clone)]
pub struct Config {
    /// Largest group order for which the full element table is stored.
    pub max_order_stored: u64,
    /// Largest group order for streaming (table-free) scans.
    pub max_order_stream: u64,
    /// Largest field size p^k accepted by `field_make`.
    pub max_field: u64,
    /// Use conjugation equivariance to share neighbor computations
    /// between elements of the same class.
    pub equivariance: bool,
    /// Seed for the randomized Sylow growth search.
    pub sylow_seed: u64,
    /// Worker count hint; recorded in result records.
    pub threads: usize,
}

pub const DEFAULT_MAX_ORDER_STORED: u64 = 100_000;
pub const DEFAULT_MAX_ORDER_STREAM: u64 = 21_000_000;
pub const DEFAULT_MAX_FIELD: u64 = 65_536;
pub const DEFAULT_SYLOW_SEED: u64 = 0xe5e1_cafe;

fn env_u64(name: &str, default: u64) -> u64 {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_order_stored: env_u64("ENGEL_MAX_ORDER_STORED", DEFAULT_MAX_ORDER_STORED),
            max_order_stream: env_u64("ENGEL_MAX_ORDER_STREAM", DEFAULT_MAX_ORDER_STREAM),
            max_field: env_u64("ENGEL_MAX_FIELD", DEFAULT_MAX_FIELD),
            equivariance: true,
            sylow_seed: env_u64("ENGEL_SYLOW_SEED", DEFAULT_SYLOW_SEED),
            threads: std::env::var("ENGEL_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or_else(|| {
                    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
                }),
        }
    }
}
