//! Set partitions of `0..n` as restricted growth strings.
//!
//! A restricted growth string `a` has `a[0] = 0` and `a[i] <= 1 + max(a[..i])`;
//! element `i` lives in block `a[i]`. Strings are produced in ascending
//! lexicographic order, from the one-block partition to all singletons.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct SetPartitions {
    labels: Vec<usize>,
    /// `prefix_max[i] = max(labels[..=i])`
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Advances to the next partition; `None` after the last one. For `n = 0`
    /// the single empty partition is produced once.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.labels);
        }
        let n = self.labels.len();
        let Some(i) = (1..n).rev().find(|&i| self.labels[i] <= self.prefix_max[i - 1]) else {
            self.done = true;
            return None;
        };
        self.labels[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
        for j in i + 1..n {
            self.labels[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
        Some(&self.labels)
    }

    /// Number of blocks in the current partition.
    pub fn blocks(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }
}

/// Block masks for a restricted growth string over `n <= 64` elements.
pub fn block_masks(labels: &[usize], blocks: usize, out: &mut Vec<u64>) {
    out.clear();
    out.resize(blocks, 0);
    for (v, &b) in labels.iter().enumerate() {
        out[b] |= 1 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize) -> Vec<Vec<usize>> {
        let mut it = SetPartitions::new(n);
        let mut out = Vec::new();
        while let Some(p) = it.next() {
            out.push(p.to_vec());
        }
        out
    }

    /// Bell numbers through the Bell triangle.
    fn bell(n: usize) -> usize {
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn counts_match_bell() {
        for n in 0..=8 {
            assert_eq!(collect(n).len(), bell(n), "n = {n}");
        }
        assert_eq!(bell(5), 52);
        assert_eq!(bell(12), 4_213_597);
    }

    #[test]
    fn order_is_lexicographic_and_valid() {
        let all = collect(4);
        assert_eq!(all.first().unwrap(), &[0, 0, 0, 0]);
        assert_eq!(all.last().unwrap(), &[0, 1, 2, 3]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for p in &all {
            let mut max = 0;
            for (i, &x) in p.iter().enumerate() {
                assert!(i == 0 && x == 0 || x <= max + 1);
                max = max.max(x);
            }
        }
    }

    #[test]
    fn block_counts_track_labels() {
        let mut it = SetPartitions::new(5);
        while let Some(p) = it.next() {
            let expected = p.iter().max().unwrap() + 1;
            let p = p.to_vec();
            assert_eq!(it.blocks(), expected, "{p:?}");
        }
    }
}
