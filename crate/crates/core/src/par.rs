//! Order-preserving data parallelism.
//!
//! With the `parallel` feature the helpers run on the rayon thread pool;
//! without it they fall back to plain iterators. Results are identical either
//! way: outputs keep input order and `find_first` returns the lowest index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        seq_map(items, f)
    }
}

/// Sequential reference implementation of [`map`].
pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// The first `(index, value)` in input order for which `f` returns `Some`.
pub fn find_first<T, U, F>(items: &[T], f: F) -> Option<(usize, U)>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .enumerate()
            .find_map_first(|(i, x)| f(x).map(|u| (i, u)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        seq_find_first(items, f)
    }
}

pub fn seq_find_first<T, U, F>(items: &[T], f: F) -> Option<(usize, U)>
where
    F: Fn(&T) -> Option<U>,
{
    items
        .iter()
        .enumerate()
        .find_map(|(i, x)| f(x).map(|u| (i, u)))
}

/// Whether the crate was built with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_keeps_order() {
        let v: Vec<u32> = (0..1000).collect();
        assert_eq!(map(&v, |x| x * 2), seq_map(&v, |x| x * 2));
    }

    #[test]
    fn find_first_is_lowest_index() {
        let v: Vec<u32> = (0..1000).collect();
        let f = |x: &u32| (x % 7 == 3 && *x > 100).then_some(*x);
        assert_eq!(find_first(&v, f), Some((101, 101)));
        assert_eq!(find_first(&v, f), seq_find_first(&v, f));
        assert_eq!(find_first(&v, |_| None::<()>), None);
    }
}
