//! Deterministic enumeration driver: sequential or prefix-partitioned
//! across a worker pool. Workers receive disjoint DFS subtrees and emit
//! local histograms; the merge is a per-key sum, so the result does not
//! depend on the worker count or on scheduling.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use bstrata_core::grid::{StaircaseColoring, SymmetricGrid};
use bstrata_core::pipes::{classify_cycles, tau};
use bstrata_core::word::{enumerate_cauchon, enumerate_cauchon_from, prefix_classes, Diagram, ReducedWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionHistogram {
    pub n: usize,
    /// dimension → diagram count; empty in counts-only runs.
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl DimensionHistogram {
    fn empty(n: usize) -> Self {
        DimensionHistogram { n, counts: BTreeMap::new(), total: 0 }
    }

    fn record(&mut self, dimension: Option<usize>) {
        self.total += 1;
        if let Some(d) = dimension {
            *self.counts.entry(d).or_insert(0) += 1;
        }
    }

    fn absorb(&mut self, other: DimensionHistogram) {
        self.total += other.total;
        for (d, c) in other.counts {
            *self.counts.entry(d).or_insert(0) += c;
        }
    }
}

/// Stratum dimension of a Cauchon diagram via the pipe-dream route.
pub fn diagram_dimension(word: &ReducedWord, d: &Diagram) -> usize {
    let staircase = StaircaseColoring::from_diagram(word, d).expect("ranks match");
    let grid = SymmetricGrid::from_staircase(&staircase);
    let t = tau(&grid).expect("grid is symmetric by construction");
    classify_cycles(&t).dimension
}

/// Enumerates all Cauchon diagrams of the word, optionally computing each
/// stratum dimension, on `jobs` workers.
pub fn enumerate_histogram(word: &ReducedWord, jobs: usize, with_dimensions: bool) -> DimensionHistogram {
    let jobs = jobs.max(1);
    if jobs == 1 {
        let mut histogram = DimensionHistogram::empty(word.rank());
        enumerate_cauchon(word, |d, _| {
            histogram.record(with_dimensions.then(|| diagram_dimension(word, d)));
        });
        return histogram;
    }

    let classes = prefix_classes(word, partition_depth(word, jobs));
    let next = AtomicUsize::new(0);
    let merged = Mutex::new(DimensionHistogram::empty(word.rank()));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| {
                let mut local = DimensionHistogram::empty(word.rank());
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(class) = classes.get(i) else { break };
                    enumerate_cauchon_from(word, class, |d, _| {
                        local.record(with_dimensions.then(|| diagram_dimension(word, d)));
                    });
                }
                merged.lock().unwrap().absorb(local);
            });
        }
    });
    merged.into_inner().unwrap()
}

/// Smallest depth whose surviving prefix classes outnumber the workers
/// enough for decent balance.
fn partition_depth(word: &ReducedWord, jobs: usize) -> usize {
    let target = 4 * jobs;
    let mut depth = 0;
    while depth < word.len() && prefix_classes(word, depth).len() < target {
        depth += 1;
    }
    depth
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_small_ranks() {
        let word = ReducedWord::staircase(1).unwrap();
        let h = enumerate_histogram(&word, 1, true);
        assert_eq!(h.total, 2);
        assert_eq!(h.counts.get(&0), Some(&1));
        assert_eq!(h.counts.get(&1), Some(&1));

        let word = ReducedWord::staircase(2).unwrap();
        let h = enumerate_histogram(&word, 1, true);
        assert_eq!(h.total, 6);
        assert_eq!(h.counts.get(&0), Some(&2));
        assert_eq!(h.counts.get(&1), Some(&3));
        assert_eq!(h.counts.get(&2), Some(&1));

        let word = ReducedWord::staircase(3).unwrap();
        let h = enumerate_histogram(&word, 1, false);
        assert_eq!(h.total, 26);
        assert!(h.counts.is_empty());
    }

    #[test]
    fn worker_count_does_not_change_the_histogram() {
        let word = ReducedWord::staircase(5).unwrap();
        let sequential = enumerate_histogram(&word, 1, true);
        for jobs in [2, 3, 8] {
            assert_eq!(enumerate_histogram(&word, jobs, true), sequential);
        }
    }
}
