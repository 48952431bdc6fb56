//! Order-preserving data-parallel helpers.
//!
//! With the `parallel` feature these run on the rayon pool; without it they
//! are plain iterator chains. Output order never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Name of the active backend, for logs and bench ids.
#[cfg(feature = "parallel")]
pub const BACKEND: &str = "rayon";
#[cfg(not(feature = "parallel"))]
pub const BACKEND: &str = "sequential";

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Concatenation of `f(item)` over `items`, in item order.
#[cfg(feature = "parallel")]
pub fn flat_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    items.par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> Vec<R>,
{
    items.iter().flat_map(f).collect()
}

/// Values in `0..end` accepted by `keep`, ascending.
#[cfg(feature = "parallel")]
pub fn filter_range<F>(end: u64, keep: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    (0..end).into_par_iter().filter(|&v| keep(v)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn filter_range<F>(end: u64, keep: F) -> Vec<u64>
where
    F: Fn(u64) -> bool,
{
    (0..end).filter(|&v| keep(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_stable() {
        let v: Vec<u32> = (0..1000).collect();
        assert_eq!(
            map(&v, |x| x * 2),
            v.iter().map(|x| x * 2).collect::<Vec<_>>()
        );
        let fm = flat_map(&v[..4], |&x| vec![x; x as usize]);
        assert_eq!(fm, vec![1, 2, 2, 3, 3, 3]);
        assert_eq!(filter_range(10, |x| x % 3 == 0), vec![0, 3, 6, 9]);
    }
}
