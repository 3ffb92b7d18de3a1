use rayon::prelude::*;

/// `f` on every seed, in parallel, with results in seed order.
pub fn batch<T: Send>(seeds: std::ops::Range<u64>, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    seeds.into_par_iter().map(f).collect()
}
