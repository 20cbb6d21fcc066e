//! Set partitions of {0, .., m-1}: exhaustive enumeration via restricted
//! growth strings, and the collapsed block-size profiles that turn sums over
//! all partitions into sums over integer partitions of m.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{big, CombinatoricsError};

/// Enumeration cap for [`enumerate_set_partitions`]. The number of set
/// partitions of 12 elements is 4 213 597; beyond that full enumeration
/// stops being a sensible tool.
pub const MAX_PARTITION_GROUND_SET: usize = 12;

/// A partition of the ground set {0, .., m-1} into nonempty blocks.
///
/// Canonical form: elements ascend within each block and blocks are ordered
/// by their least element, so block 0 always contains element 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from explicit blocks, validating canonical form:
    /// nonempty disjoint blocks in least-element order whose union is
    /// {0, .., m-1}.
    pub fn new(m: usize, blocks: Vec<Vec<usize>>) -> Result<Self, CombinatoricsError> {
        let mut seen = vec![false; m];
        let mut previous_min = None;
        for block in &blocks {
            let Some(&first) = block.first() else {
                return Err(CombinatoricsError::MalformedPartition {
                    reason: "empty block",
                });
            };
            if previous_min.is_some_and(|p| p >= first) {
                return Err(CombinatoricsError::MalformedPartition {
                    reason: "blocks not in least-element order",
                });
            }
            previous_min = Some(first);
            let mut prev = None;
            for &e in block {
                if e >= m {
                    return Err(CombinatoricsError::MalformedPartition {
                        reason: "element outside the ground set",
                    });
                }
                if seen[e] {
                    return Err(CombinatoricsError::MalformedPartition {
                        reason: "repeated element",
                    });
                }
                if prev.is_some_and(|p| p >= e) {
                    return Err(CombinatoricsError::MalformedPartition {
                        reason: "block elements not ascending",
                    });
                }
                seen[e] = true;
                prev = Some(e);
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(CombinatoricsError::MalformedPartition {
                reason: "union does not cover the ground set",
            });
        }
        Ok(SetPartition { m, blocks })
    }

    fn from_rgs(rgs: &[usize]) -> Self {
        let nblocks = rgs.iter().copied().max().map_or(0, |b| b + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (element, &b) in rgs.iter().enumerate() {
            blocks[b].push(element);
        }
        SetPartition {
            m: rgs.len(),
            blocks,
        }
    }

    pub fn ground_set_size(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block sizes in descending order.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Iterator over all set partitions of {0, .., m-1} in restricted growth
/// string order.
///
/// A restricted growth string defines a[i] as the block index of element i,
/// subject to a[0] = 0 and a[i] <= 1 + max(a[0..i]); stepping through the
/// strings in lexicographic order visits every partition exactly once.
pub struct SetPartitions {
    rgs: Vec<usize>,
    // bound[i] = 1 + max(rgs[0..i]), the smallest forbidden value at i
    bound: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let item = SetPartition::from_rgs(&self.rgs);
        let m = self.rgs.len();
        let mut i = m - 1;
        while i > 0 && self.rgs[i] == self.bound[i] {
            i -= 1;
        }
        if i == 0 {
            self.done = true;
        } else {
            self.rgs[i] += 1;
            let bound = self.bound[i].max(self.rgs[i] + 1);
            for j in i + 1..m {
                self.rgs[j] = 0;
                self.bound[j] = bound;
            }
        }
        Some(item)
    }
}

/// Streams every set partition of a ground set of m elements.
///
/// The count of yielded partitions is the Bell number B_m. Fails for m = 0
/// and for m above [`MAX_PARTITION_GROUND_SET`].
pub fn enumerate_set_partitions(m: usize) -> Result<SetPartitions, CombinatoricsError> {
    if m == 0 {
        return Err(CombinatoricsError::EmptyInput);
    }
    if m > MAX_PARTITION_GROUND_SET {
        return Err(CombinatoricsError::GroundSetTooLarge {
            m,
            cap: MAX_PARTITION_GROUND_SET,
        });
    }
    Ok(SetPartitions {
        rgs: vec![0; m],
        bound: vec![1; m],
        done: false,
    })
}

/// A multiset of block sizes together with the number of set partitions
/// realising it.
///
/// Any sum over set partitions whose summand depends only on block sizes
/// collapses to a sum over profiles weighted by [`BlockProfile::weight`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProfile {
    sizes: Vec<usize>,
    weight: BigInt,
}

impl BlockProfile {
    fn from_sizes(sizes: Vec<usize>) -> Self {
        // m! / (prod over distinct sizes s with multiplicity c of (s!)^c c!)
        let m: usize = sizes.iter().sum();
        let mut weight = factorial(m);
        let mut i = 0;
        while i < sizes.len() {
            let s = sizes[i];
            let mut c = 0usize;
            while i < sizes.len() && sizes[i] == s {
                c += 1;
                i += 1;
            }
            weight /= factorial(s).pow(c as u32) * factorial(c);
        }
        BlockProfile { sizes, weight }
    }

    /// Block sizes in descending order.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of set partitions of {0, .., m-1} with exactly these block
    /// sizes.
    pub fn weight(&self) -> &BigInt {
        &self.weight
    }

    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn ground_set_size(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// All block-size profiles of partitions of an m-element set, i.e. the
/// integer partitions of m with their multinomial weights.
///
/// The weights sum to the Bell number B_m. For m = 0 the single empty
/// profile is returned.
pub fn block_profiles(m: usize) -> Vec<BlockProfile> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(m, m, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<BlockProfile>) {
    if remaining == 0 {
        out.push(BlockProfile::from_sizes(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Bell number B_m via the Bell triangle.
pub fn bell_number(m: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("row is nonempty").clone());
        for x in &row {
            let sum = next.last().expect("next is nonempty") + x;
            next.push(sum);
        }
        row = next;
    }
    row[0].clone()
}

/// Stirling number of the second kind: partitions of m elements into
/// exactly l nonempty blocks.
pub fn stirling_second(m: usize, l: usize) -> BigInt {
    if l > m {
        return BigInt::zero();
    }
    if m == 0 {
        return BigInt::one();
    }
    if l == 0 {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for k in 1..=m {
        for j in (1..=k).rev() {
            row[j] = row[j - 1].clone() + big(j) * &row[j];
        }
        row[0] = BigInt::zero();
    }
    row[l].clone()
}

pub(crate) fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= big(i);
    }
    acc
}
