//! Exhaustive constrained enumeration of partitions.
//!
//! Partitions come out in lexicographically decreasing order of their part
//! lists, so two runs always agree line for line.

use crate::partition::Partition;

/// Optional restrictions on an enumeration. `None` means unconstrained.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    pub min_part: Option<u32>,
    pub max_part: Option<u32>,
    pub num_parts: Option<usize>,
    pub distinct: bool,
    pub durfee_side: Option<u32>,
}

impl ConstraintSet {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn distinct() -> Self {
        ConstraintSet {
            distinct: true,
            ..Self::default()
        }
    }

    pub fn with_max_part(mut self, m: u32) -> Self {
        self.max_part = Some(m);
        self
    }

    pub fn with_min_part(mut self, m: u32) -> Self {
        self.min_part = Some(m);
        self
    }

    pub fn with_num_parts(mut self, k: usize) -> Self {
        self.num_parts = Some(k);
        self
    }

    pub fn with_durfee_side(mut self, d: u32) -> Self {
        self.durfee_side = Some(d);
        self
    }

    pub fn accepts(&self, p: &Partition) -> bool {
        let parts = p.parts();
        self.min_part.is_none_or(|m| parts.iter().all(|&x| x >= m))
            && self.max_part.is_none_or(|m| parts.iter().all(|&x| x <= m))
            && self.num_parts.is_none_or(|k| parts.len() == k)
            && (!self.distinct || p.is_strict())
            && self.durfee_side.is_none_or(|d| p.durfee_side() == d)
    }
}

/// Depth-first stream over the partitions of `n` satisfying a
/// [`ConstraintSet`]. Parts are chosen largest first, which yields the
/// lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct PartitionStream {
    constraints: ConstraintSet,
    parts: Vec<u32>,
    remaining: u64,
    state: StreamState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum StreamState {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_partitions(n: u64, constraints: &ConstraintSet) -> PartitionStream {
    PartitionStream {
        constraints: constraints.clone(),
        parts: Vec::new(),
        remaining: n,
        state: StreamState::Fresh,
    }
}

impl PartitionStream {
    fn min_part(&self) -> u32 {
        self.constraints.min_part.unwrap_or(1).max(1)
    }

    /// Largest value the next part may take.
    fn cap(&self) -> u64 {
        let mut cap = self.remaining;
        if let Some(m) = self.constraints.max_part {
            cap = cap.min(u64::from(m));
        }
        if let Some(&last) = self.parts.last() {
            let bound = if self.constraints.distinct {
                u64::from(last).saturating_sub(1)
            } else {
                u64::from(last)
            };
            cap = cap.min(bound);
        }
        cap
    }

    /// Whether `remaining` can still be split under `cap` and the part count.
    fn completable(&self) -> bool {
        if self.remaining == 0 {
            return self.constraints.num_parts.is_none_or(|k| self.parts.len() == k);
        }
        let cap = self.cap();
        let min = u64::from(self.min_part());
        if cap < min {
            return false;
        }
        let Some(k) = self.constraints.num_parts else {
            return true;
        };
        if self.parts.len() >= k {
            return false;
        }
        let slots = (k - self.parts.len()) as u64;
        let (lo, hi) = if self.constraints.distinct {
            if cap - min + 1 < slots {
                return false;
            }
            // slots distinct values in [min, cap]
            let lo = slots * min + slots * (slots - 1) / 2;
            let hi = slots * cap - slots * (slots - 1) / 2;
            (lo, hi)
        } else {
            (slots * min, slots * cap)
        };
        (lo..=hi).contains(&self.remaining)
    }

    /// Extends greedily with the largest admissible part until the partition
    /// is complete (true) or stuck (false).
    fn descend(&mut self) -> bool {
        loop {
            if !self.completable() {
                return false;
            }
            if self.remaining == 0 {
                return true;
            }
            let v = self.cap() as u32;
            self.parts.push(v);
            self.remaining -= u64::from(v);
        }
    }

    /// Moves to the next sibling in depth-first order.
    fn advance(&mut self) -> bool {
        let min = self.min_part();
        while let Some(v) = self.parts.pop() {
            self.remaining += u64::from(v);
            if v > min {
                self.parts.push(v - 1);
                self.remaining -= u64::from(v - 1);
                return true;
            }
        }
        false
    }

    fn emit(&self) -> Option<Partition> {
        let p = Partition::new(self.parts.clone()).expect("stream keeps parts non-increasing");
        match self.constraints.durfee_side {
            Some(d) if p.durfee_side() != d => None,
            _ => Some(p),
        }
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.state == StreamState::Fresh {
            self.state = StreamState::Running;
            if self.descend() {
                if let Some(p) = self.emit() {
                    return Some(p);
                }
            }
        }
        while self.state == StreamState::Running {
            if !self.advance() {
                self.state = StreamState::Done;
                break;
            }
            if self.descend() {
                if let Some(p) = self.emit() {
                    return Some(p);
                }
            }
        }
        None
    }
}
