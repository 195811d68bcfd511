//! Cycle index polynomial of the symmetric group as a sum over integer
//! partitions.

/// Partition of `k` in multiplicity form: `a_j` parts of size `j`, with
/// `Σ j a_j = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    multiplicities: Vec<usize>,
}

impl Partition {
    /// `multiplicities[j - 1] = a_j`.
    pub fn new(multiplicities: Vec<usize>) -> Self { Self { multiplicities } }

    pub fn multiplicities(&self) -> &[usize] { &self.multiplicities }

    /// `a_j`, one-based; zero beyond the stored range.
    pub fn count(&self, j: usize) -> usize {
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    /// `Σ j a_j`
    pub fn size(&self) -> usize {
        self.multiplicities.iter().enumerate().map(|(i, a)| (i + 1) * a).sum()
    }
}

/// Every partition of `k`, largest parts first (`[k]` down to `[1^k]`).
pub fn partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    descend(k, k, &mut parts, &mut out, k);
    out
}

fn descend(rest: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>, k: usize) {
    if rest == 0 {
        let mut a = vec![0; k];
        for &p in parts.iter() {
            a[p - 1] += 1;
        }
        out.push(Partition::new(a));
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        parts.push(part);
        descend(rest - part, part, parts, out, k);
        parts.pop();
    }
}

/// `Z(S_k)(x_1..x_k) = Σ_{partitions} Π_j x_j^{a_j} / (j^{a_j} a_j!)`.
///
/// Terms are summed in order of decreasing magnitude.
///
/// # Panics
/// If `x` has fewer than `k` entries.
pub fn cycle_index(k: usize, x: &[f64]) -> f64 {
    assert!(x.len() >= k, "cycle index of S_{k} needs {k} variables, got {}", x.len());
    let mut terms: Vec<f64> = partitions(k).iter()
        .map(|part| {
            (1..=k).fold(1.0, |acc, j| {
                let a = part.count(j);
                if a == 0 {
                    return acc;
                }
                let mut t = acc;
                for i in 1..=a {
                    t *= x[j - 1] / (j as f64 * i as f64);
                }
                t
            })
        })
        .collect();
    terms.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    terms.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for k in 0..=10 {
            assert!(partitions(k).iter().all(|p| p.size() == k));
        }
    }

    #[test]
    fn partitions_start_with_the_single_part() {
        let ps = partitions(4);
        assert_eq!(ps[0].multiplicities(), &[0, 0, 0, 1]);
        assert_eq!(ps.last().unwrap().multiplicities(), &[4, 0, 0, 0]);
    }

    #[test]
    fn known_values() {
        assert!((cycle_index(2, &[1.0, 0.5]) - 0.75).abs() < 1e-15);
        assert!((cycle_index(3, &[1.0, 1.0, 1.0]) - 1.0).abs() < 1e-15);
        assert!((cycle_index(3, &[1.0, 0.5, 0.25]) - 0.5).abs() < 1e-15);
        assert_eq!(cycle_index(0, &[]), 1.0);
    }

    #[test]
    fn all_ones_is_one() {
        for k in 0..=12 {
            assert!((cycle_index(k, &[1.0; 12]) - 1.0).abs() < 1e-12, "k = {k}");
        }
    }
}
