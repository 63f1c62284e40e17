//! Addable and removable node sets, tableau degrees, positivity, blocks and
//! graded dimensions.

use std::collections::BTreeMap;

use super::partition::{multipartitions, Multipartition, Node};
use super::quiver::{QuiverData, Residue, RootVector};
use super::tableau::{standard_tableaux, std_of_residue, StandardTableau};
use crate::scalars::Laurent;

/// The node sets attached to a tableau `t` and an entry `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSets {
    /// Addable nodes of `Shape(t restricted to k)` below `t^{-1}(k)`.
    pub addable_below: Vec<Node>,
    /// Removable nodes of `Shape(t restricted to k)` below `t^{-1}(k)`.
    pub removable_below: Vec<Node>,
    /// Addable nodes above `t^{-1}(k)`.
    pub addable_above: Vec<Node>,
    /// Removable nodes above `t^{-1}(k)`.
    pub removable_above: Vec<Node>,
    /// Addable nodes below with residue `res_t(k)`.
    pub add_lambda: Vec<Node>,
    /// Removable nodes below with residue `res_t(k)`.
    pub rem_lambda: Vec<Node>,
    /// Addable nodes above with residue `res_t(k)`.
    pub add_lambda_above: Vec<Node>,
    /// Removable nodes above with residue `res_t(k)`.
    pub rem_lambda_above: Vec<Node>,
}

/// Compute all node sets of `t` at `k`, `1 <= k <= n`.
pub fn node_sets(t: &StandardTableau, k: usize, q: &QuiverData) -> NodeSets {
    let shape = t.restricted_shape(k);
    let here = t.node_of(k);
    let res = t.residue_at(k, q);
    let of_res = |v: &[Node]| -> Vec<Node> {
        v.iter()
            .copied()
            .filter(|n| q.same(q.residue(n.r, n.c, n.l), res))
            .collect()
    };
    let addable = shape.addable();
    let removable = shape.removable();
    let addable_below: Vec<Node> = addable.iter().copied().filter(|n| n.is_below(&here)).collect();
    let removable_below: Vec<Node> =
        removable.iter().copied().filter(|n| n.is_below(&here)).collect();
    let addable_above: Vec<Node> = addable.iter().copied().filter(|n| n.is_above(&here)).collect();
    let removable_above: Vec<Node> =
        removable.iter().copied().filter(|n| n.is_above(&here)).collect();
    NodeSets {
        add_lambda: of_res(&addable_below),
        rem_lambda: of_res(&removable_below),
        add_lambda_above: of_res(&addable_above),
        rem_lambda_above: of_res(&removable_above),
        addable_below,
        removable_below,
        addable_above,
        removable_above,
    }
}

/// The degree `sum_k |Add^Lambda_t(k)| - |Rem^Lambda_t(k)|`.
pub fn degree(t: &StandardTableau, q: &QuiverData) -> i64 {
    (1..=t.size())
        .map(|k| {
            let s = node_sets(t, k, q);
            s.add_lambda.len() as i64 - s.rem_lambda.len() as i64
        })
        .sum()
}

/// The codegree, the degree of the conjugate tableau.
pub fn codegree(t: &StandardTableau, q: &QuiverData) -> i64 {
    degree(&t.conjugate(), q)
}

/// The exponents `(|Add^Lambda_t(1)|, ..., |Add^Lambda_t(n)|)`.
pub fn positive_exponents(t: &StandardTableau, q: &QuiverData) -> Vec<usize> {
    (1..=t.size()).map(|k| node_sets(t, k, q).add_lambda.len()).collect()
}

/// The exponents `(|Add^Lambda_{t'}(1)'|, ..., |Add^Lambda_{t'}(n)'|)` of
/// the conjugate tableau, read with the "above" node sets.
pub fn copositive_exponents(t: &StandardTableau, q: &QuiverData) -> Vec<usize> {
    let c = t.conjugate();
    (1..=c.size())
        .map(|k| node_sets(&c, k, q).add_lambda_above.len())
        .collect()
}

/// Positivity of a standard tableau.
///
/// Condition (a): no `Rem^Lambda_s(k)` is non-empty. Condition (b): whenever
/// `Add^Lambda_s(k)` is non-empty, every `i_k`-node below `s^{-1}(k)` that is
/// addable for some `t` in `Std(i_{k-1})` with `t >= s_{k-1}` lies in
/// `Add^Lambda_s(k)`. The quantifier over `t` is evaluated by enumeration.
pub fn is_positive(s: &StandardTableau, q: &QuiverData) -> bool {
    let n = s.size();
    let level = s.shape().level();
    let res = s.residues(q);
    let sets: Vec<NodeSets> = (1..=n).map(|k| node_sets(s, k, q)).collect();
    if sets.iter().any(|x| !x.rem_lambda.is_empty()) {
        return false;
    }
    for k in 1..=n {
        let add = &sets[k - 1].add_lambda;
        if add.is_empty() {
            continue;
        }
        let here = s.node_of(k);
        let prefix = s.restrict(k - 1);
        for t in std_of_residue(&res[..k - 1], level, q) {
            if !t.dominates(&prefix) {
                continue;
            }
            for alpha in t.shape().addable() {
                if alpha.is_below(&here)
                    && q.same(q.residue(alpha.r, alpha.c, alpha.l), res[k - 1])
                    && !add.contains(&alpha)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The root vector `beta = alpha_{i_1} + ... + alpha_{i_n}`.
pub fn block_of(i: &[Residue], q: &QuiverData) -> RootVector {
    RootVector::of_residues(q, i)
}

/// The blocks of size `n`: each `beta` with the multipartitions whose
/// initial tableau has content `beta`, in the canonical order.
pub fn blocks(n: usize, q: &QuiverData) -> Vec<(RootVector, Vec<Multipartition>)> {
    let mut map: BTreeMap<RootVector, Vec<Multipartition>> = BTreeMap::new();
    for lam in multipartitions(n, q.level()) {
        let beta = block_of(&StandardTableau::initial(&lam).residues(q), q);
        map.entry(beta).or_default().push(lam);
    }
    map.into_iter().collect()
}

/// The graded dimension `sum_s t^{deg s}` of the Specht module.
pub fn graded_dim(shape: &Multipartition, q: &QuiverData) -> Laurent {
    let mut out = Laurent::zero();
    for t in standard_tableaux(shape) {
        out.add_term(degree(&t, q), 1);
    }
    out
}

/// The graded dimension `sum_lambda sum_{s,t} t^{deg s + deg t}` of the
/// algebra of rank `n`.
pub fn graded_dim_algebra(n: usize, q: &QuiverData) -> Laurent {
    let mut out = Laurent::zero();
    for lam in multipartitions(n, q.level()) {
        let g = graded_dim(&lam, q);
        out = out + &g * &g;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn tab(rows: Vec<Vec<Vec<usize>>>) -> StandardTableau {
        StandardTableau::from_rows(rows).unwrap()
    }

    #[test]
    fn node_set_examples() {
        let q = QuiverData::new(2, vec![0]).unwrap();
        let t2 = StandardTableau::initial(&mp("2"));
        let s = node_sets(&t2, 2, &q);
        assert_eq!(s.addable_below, vec![Node::new(2, 1, 1)]);
        assert_eq!(s.add_lambda, vec![Node::new(2, 1, 1)]);
        let t11 = StandardTableau::initial(&mp("1,1"));
        let s = node_sets(&t11, 2, &q);
        assert_eq!(s.addable_below, vec![Node::new(3, 1, 1)]);
        assert!(s.add_lambda.is_empty());
        assert_eq!(degree(&t2, &q), 1);
        assert_eq!(degree(&t11, &q), 0);
    }

    #[test]
    fn example_b_degree_zero_not_positive() {
        let q = QuiverData::new(3, vec![0]).unwrap();
        let t = tab(vec![vec![vec![1, 2, 4, 5, 6, 7], vec![3]]]);
        assert_eq!(degree(&t, &q), 0);
        assert!(!is_positive(&t, &q));
    }

    #[test]
    fn positive_tableaux_of_a_residue_sequence() {
        let q = QuiverData::new(3, vec![0]).unwrap();
        let i = [0, 1, 2, 2, 0, 1, 1, 2, 0];
        let pos: Vec<String> = std_of_residue(&i, 1, &q)
            .into_iter()
            .filter(|t| is_positive(t, &q))
            .map(|t| t.to_string())
            .collect();
        let mut want = vec![
            "123/456/789",
            "123/456/78/9",
            "123568/49/7",
            "123568/4/7/9",
            "1235689/4/7",
        ];
        let mut got = pos.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn example_c_not_positive() {
        let q = QuiverData::new(2, vec![0, 1]).unwrap();
        let s = tab(vec![vec![vec![1, 4]], vec![vec![2], vec![3]]]);
        assert!(!is_positive(&s, &q));
    }

    #[test]
    fn initial_tableaux_are_positive() {
        for (e, kappa) in [(2, vec![0]), (3, vec![0]), (2, vec![0, 1]), (3, vec![2, 0])] {
            let q = QuiverData::new(e, kappa).unwrap();
            for lam in multipartitions(5, q.level()) {
                let t = StandardTableau::initial(&lam);
                assert!(is_positive(&t, &q), "{}", lam);
            }
        }
    }

    #[test]
    fn graded_dim_examples() {
        let q = QuiverData::new(2, vec![0]).unwrap();
        let g = graded_dim_algebra(2, &q);
        assert_eq!(g, Laurent::monomial(2, 1) + Laurent::one());
        assert_eq!(graded_dim_algebra(0, &q), Laurent::one());
        assert_eq!(g.at_one(), 2);
    }

    #[test]
    fn blocks_examples() {
        let q = QuiverData::new(2, vec![0]).unwrap();
        let b = blocks(2, &q);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].1, vec![mp("2"), mp("1,1")]);
        assert_eq!(q.defect(&b[0].0), 1);
        let q2 = QuiverData::new(3, vec![0, 1]).unwrap();
        assert_eq!(blocks(1, &q2).len(), 2);
    }

    #[test]
    fn degree_plus_codegree_is_defect() {
        for (e, kappa) in [(2, vec![0]), (3, vec![0]), (0, vec![0]), (2, vec![0, 1]), (3, vec![3, 0])] {
            let q = QuiverData::new(e, kappa).unwrap();
            for n in 0..=6 {
                for lam in multipartitions(n, q.level()) {
                    for t in standard_tableaux(&lam) {
                        let beta = block_of(&t.residues(&q), &q);
                        assert_eq!(degree(&t, &q) + codegree(&t, &q), q.defect(&beta));
                        if is_positive(&t, &q) {
                            assert!(degree(&t, &q) >= 0);
                        }
                    }
                }
            }
        }
    }
}
