//! Single-word bitmask view of a graph for the exhaustive searches.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) struct MaskGraph {
    pub n: usize,
    /// `closed[v]` = N[v] as a bitmask.
    pub closed: Vec<u64>,
    pub all: u64,
}

#[inline]
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

impl MaskGraph {
    pub fn new(g: &Graph, op: &'static str) -> Result<Self> {
        let n = g.n();
        if n > 64 {
            return Err(Error::GuardExceeded { op, n, limit: 64 });
        }
        let closed = (0..n)
            .map(|v| g.closed_neighborhood(v).to_mask().expect("n <= 64"))
            .collect();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(MaskGraph { n, closed, all })
    }

    #[inline]
    pub fn dominates(&self, s: u64) -> bool {
        let mut covered = 0;
        for v in bits(s) {
            covered |= self.closed[v];
        }
        covered == self.all
    }

    #[inline]
    pub fn connected(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut reached = s & s.wrapping_neg();
        loop {
            let mut grown = reached;
            for v in bits(reached) {
                grown |= self.closed[v] & s;
            }
            if grown == reached {
                return reached == s;
            }
            reached = grown;
        }
    }

    #[inline]
    pub fn is_cds(&self, s: u64) -> bool {
        s != 0 && self.dominates(s) && self.connected(s)
    }

    /// `table[s]` = whether `s` is a CDS, for every `s < 2^n`.
    pub fn cds_table(&self) -> Vec<bool> {
        let size = 1usize << self.n;
        let mut table = vec![false; size];
        for (s, slot) in table.iter_mut().enumerate() {
            *slot = self.is_cds(s as u64);
        }
        table
    }

    /// `s` is a CDS and no single vertex can be dropped.
    pub fn is_minimal_cds(&self, table: &[bool], s: u64) -> bool {
        table[s as usize] && bits(s).all(|v| !table[(s & !(1 << v)) as usize])
    }
}
