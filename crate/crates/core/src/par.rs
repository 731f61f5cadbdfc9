//! Minimal deterministic work splitting.
//!
//! The enumeration kernels are embarrassingly parallel over index ranges, so
//! plain scoped threads over contiguous chunks are enough; results are glued
//! back in chunk order, which keeps every output independent of the thread
//! count.

/// Apply `work` to every index in `0..len`, splitting the range over at most
/// `jobs` threads, and concatenate the per-index outputs in index order.
pub(crate) fn map_indices<T, F>(len: usize, jobs: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.max(1).min(len.max(1));
    if jobs == 1 {
        return (0..len).map(work).collect();
    }
    let chunk = len.div_ceil(jobs);
    let mut out: Vec<Vec<T>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..len)
            .step_by(chunk)
            .map(|start| {
                let end = (start + chunk).min(len);
                let work = &work;
                scope.spawn(move || (start..end).map(work).collect::<Vec<T>>())
            })
            .collect();
        out = handles.into_iter().map(|h| h.join().expect("worker panicked")).collect();
    });
    out.into_iter().flatten().collect()
}
