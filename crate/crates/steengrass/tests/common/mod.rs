#![allow(dead_code)]

use proptest::prelude::*;
use steengrass::{Partition, SkewShape};

pub fn pt(v: &[usize]) -> Partition {
    Partition::from(v)
}

/// Partitions of weight at most `max`.
pub fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max.max(1), 0..=max).prop_map(move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        v.retain(|&x| {
            total += x;
            total <= max
        });
        Partition::new(v)
    })
}

/// Pairs `λ ⊆ μ` with `|μ| ≤ max`.
pub fn nested(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (partition(max), prop::collection::vec(0usize..=3, max)).prop_map(|(mu, cuts)| {
        let mut parts = Vec::new();
        let mut prev = usize::MAX;
        for (i, &m) in mu.parts().iter().enumerate() {
            let v = m.saturating_sub(cuts[i]).min(prev);
            parts.push(v);
            prev = v;
        }
        (Partition::new(parts), mu)
    })
}

pub fn skew(max: usize) -> impl Strategy<Value = SkewShape> {
    nested(max).prop_map(|(l, m)| SkewShape::new(m, l).unwrap())
}
