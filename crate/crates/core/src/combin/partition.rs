//! Multipartitions, nodes and the dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A node `(r, c, l)`: row, column and component, all starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub r: usize,
    pub c: usize,
    pub l: usize,
}

impl Node {
    pub fn new(r: usize, c: usize, l: usize) -> Self {
        Node { r, c, l }
    }

    /// `self` is below `other`: a later component, or the same component and
    /// a later row.
    pub fn is_below(&self, other: &Node) -> bool {
        self.l > other.l || (self.l == other.l && self.r > other.r)
    }

    /// `self` is above `other`.
    pub fn is_above(&self, other: &Node) -> bool {
        other.is_below(self)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.l)
    }
}

/// Errors in parsing or validating multipartitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("invalid shape string {0:?}")]
    Parse(String),
    #[error("component {0} is not weakly decreasing")]
    NotPartition(usize),
}

/// An `l`-tuple of partitions. Components store their non-zero parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multipartition {
    comps: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(mut comps: Vec<Vec<usize>>) -> Result<Self, ShapeError> {
        for (k, c) in comps.iter_mut().enumerate() {
            c.retain(|&x| x > 0);
            if c.windows(2).any(|w| w[0] < w[1]) {
                return Err(ShapeError::NotPartition(k + 1));
            }
        }
        Ok(Multipartition { comps })
    }

    /// The empty multipartition of level `l`.
    pub fn empty(l: usize) -> Self {
        Multipartition {
            comps: vec![Vec::new(); l],
        }
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    pub fn component(&self, l: usize) -> &[usize] {
        &self.comps[l - 1]
    }

    /// Length of row `r` of component `l` (0 beyond the last row).
    pub fn row_len(&self, r: usize, l: usize) -> usize {
        self.comps[l - 1].get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, n: &Node) -> bool {
        n.l >= 1 && n.l <= self.level() && n.r >= 1 && n.c >= 1 && n.c <= self.row_len(n.r, n.l)
    }

    /// All nodes in component, row, column order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (l, comp) in self.comps.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                for c in 1..=len {
                    out.push(Node::new(r + 1, c, l + 1));
                }
            }
        }
        out
    }

    /// Addable nodes, in component then row order.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, comp) in self.comps.iter().enumerate() {
            for r in 1..=comp.len() + 1 {
                let len = comp.get(r - 1).copied().unwrap_or(0);
                let above = if r == 1 { usize::MAX } else { comp[r - 2] };
                if len < above {
                    out.push(Node::new(r, len + 1, l + 1));
                }
            }
        }
        out
    }

    /// Removable nodes, in component then row order.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, comp) in self.comps.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                let below = comp.get(r + 1).copied().unwrap_or(0);
                if len > below {
                    out.push(Node::new(r + 1, len, l + 1));
                }
            }
        }
        out
    }

    /// The multipartition with `node` added; the node must be addable.
    pub fn add_node(&self, node: &Node) -> Self {
        let mut comps = self.comps.clone();
        let comp = &mut comps[node.l - 1];
        if node.r > comp.len() {
            comp.push(1);
        } else {
            comp[node.r - 1] += 1;
        }
        Multipartition { comps }
    }

    /// The multipartition with `node` removed; the node must be removable.
    pub fn remove_node(&self, node: &Node) -> Self {
        let mut comps = self.comps.clone();
        let comp = &mut comps[node.l - 1];
        comp[node.r - 1] -= 1;
        if comp[node.r - 1] == 0 {
            comp.pop();
        }
        Multipartition { comps }
    }

    /// The conjugate: reverse the components and conjugate each.
    pub fn conjugate(&self) -> Self {
        let comps = self
            .comps
            .iter()
            .rev()
            .map(|p| {
                let first = p.first().copied().unwrap_or(0);
                (1..=first).map(|i| p.iter().filter(|&&x| x >= i).count()).collect()
            })
            .collect();
        Multipartition { comps }
    }

    /// Partial sums `sum_{t<s} |lambda^(t)| + sum_{i<=j} lambda^(s)_i`, with
    /// every component padded to `rows` rows.
    pub fn partial_sums(&self, rows: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(rows * self.level());
        let mut base = 0;
        for comp in &self.comps {
            let mut acc = base;
            for j in 0..rows {
                acc += comp.get(j).copied().unwrap_or(0);
                out.push(acc);
            }
            base += comp.iter().sum::<usize>();
        }
        out
    }

    fn padding(&self, other: &Self) -> usize {
        self.size().max(other.size()).max(1)
    }

    /// Dominance `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        let rows = self.padding(other);
        self.partial_sums(rows)
            .iter()
            .zip(other.partial_sums(rows))
            .all(|(a, b)| *a >= b)
    }

    /// The canonical total order refining dominance: larger partial-sum
    /// vectors come first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let rows = self.padding(other);
        other.partial_sums(rows).cmp(&self.partial_sums(rows))
    }

    /// `delta(lambda) = 1/2 sum (lambda_i - 1) lambda_i`.
    pub fn delta(&self) -> i64 {
        self.comps
            .iter()
            .flatten()
            .map(|&x| (x as i64 - 1) * x as i64 / 2)
            .sum()
    }

    /// The number of standard tableaux, by the hook length formula.
    pub fn hook_count(&self) -> u128 {
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut den: u128 = 1;
        for comp in &self.comps {
            let conj = Multipartition::new(vec![comp.clone()]).unwrap().conjugate();
            let cols = &conj.comps[0];
            for (r, &len) in comp.iter().enumerate() {
                for c in 0..len {
                    let arm = len - c - 1;
                    let leg = cols[c] - r - 1;
                    den *= (arm + leg + 1) as u128;
                }
            }
        }
        // Multinomial distribution of entries among components is already in n!.
        num /= den;
        num
    }
}

impl fmt::Display for Multipartition {
    /// Shape string: parts joined by `,`, components by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .comps
            .iter()
            .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let comps = s
            .split('|')
            .map(|c| {
                let c = c.trim();
                if c.is_empty() {
                    return Ok(Vec::new());
                }
                c.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| ShapeError::Parse(s.to_string())))
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Multipartition::new(comps)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All multipartitions of `n` with `l` components, in the canonical order.
pub fn multipartitions(n: usize, l: usize) -> Vec<Multipartition> {
    fn rec(n: usize, l: usize, prefix: &mut Vec<Vec<usize>>, out: &mut Vec<Multipartition>) {
        if l == 1 {
            for p in partitions(n) {
                prefix.push(p);
                out.push(Multipartition {
                    comps: prefix.clone(),
                });
                prefix.pop();
            }
            return;
        }
        for k in (0..=n).rev() {
            for p in partitions(k) {
                prefix.push(p);
                rec(n - k, l - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    if l == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(n, l, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let l1: Vec<String> = multipartitions(2, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(l1, vec!["2", "1,1"]);
        let l2: Vec<String> = multipartitions(2, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(l2, vec!["2|", "1,1|", "1|1", "|2", "|1,1"]);
        assert_eq!(multipartitions(0, 1).len(), 1);
    }

    #[test]
    fn dominance_examples() {
        assert!(mp("2|").dominates(&mp("1|1")));
        assert!(!mp("1,1").dominates(&mp("2")));
        assert!(mp("3,1").dominates(&mp("3,1")));
    }

    #[test]
    fn conjugation() {
        assert_eq!(mp("2|1").conjugate(), mp("1|1,1"));
        assert_eq!(mp("3,1").conjugate(), mp("2,1,1"));
    }

    #[test]
    fn hook_formula() {
        assert_eq!(mp("3,2").hook_count(), 5);
        assert_eq!(mp("1|1").hook_count(), 2);
    }

    #[test]
    fn addable_removable() {
        let m = mp("2,1|");
        assert_eq!(
            m.addable(),
            vec![Node::new(1, 3, 1), Node::new(2, 2, 1), Node::new(3, 1, 1), Node::new(1, 1, 2)]
        );
        assert_eq!(m.removable(), vec![Node::new(1, 2, 1), Node::new(2, 1, 1)]);
    }

    proptest! {
        #[test]
        fn canonical_order_refines_dominance(n in 0usize..7, l in 1usize..3) {
            let all = multipartitions(n, l);
            for (a, x) in all.iter().enumerate() {
                prop_assert_eq!(x.conjugate().conjugate(), x.clone());
                for (b, y) in all.iter().enumerate() {
                    if x != y && x.dominates(y) {
                        prop_assert!(a < b);
                    }
                    if x.dominates(y) && y.dominates(x) {
                        prop_assert_eq!(x, y);
                    }
                }
            }
        }
    }
}
