use std::fmt;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `m[i]` = number of parts equal to `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order (`[n]` first, `[1^n]` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// p(n) from the recurrence p(n) = sum_k p(n, k) over largest part k.
    fn partition_count(n: usize) -> usize {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        table[0].fill(1);
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if k <= m { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn small_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
        for n in 0..=15 {
            assert_eq!(partitions_of(n).len(), partition_count(n));
        }
    }

    #[test]
    fn order_and_shape() {
        let ps = partitions_of(4);
        let parts: Vec<_> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        for p in partitions_of(9) {
            assert_eq!(p.size(), 9);
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn normalizes_input() {
        let p = Partition::new(vec![1, 0, 3, 2, 1]);
        assert_eq!(p.parts(), &[3, 2, 1, 1]);
        assert_eq!(p.multiplicities(), vec![0, 2, 1, 1]);
    }
}
