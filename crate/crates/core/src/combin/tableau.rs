//! Standard tableaux, restriction chains and the permutations `d(t)`.

use std::cmp::Ordering;
use std::fmt;

use serde_json::Value;

use super::partition::{Multipartition, Node};
use super::perm::Perm;
use super::quiver::{QuiverData, Residue};

/// A standard tableau of multipartition shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Multipartition,
    /// `rows[l - 1][r - 1][c - 1]` is the entry in node `(r, c, l)`.
    rows: Vec<Vec<Vec<usize>>>,
    /// `pos[k - 1]` is the node containing `k`.
    pos: Vec<Node>,
}

impl StandardTableau {
    /// Build from rows of entries per component; returns `None` unless the
    /// filling is standard and uses `1..=n` exactly once.
    pub fn from_rows(rows: Vec<Vec<Vec<usize>>>) -> Option<Self> {
        let shape =
            Multipartition::new(rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect())
                .ok()?;
        if rows.iter().flatten().any(Vec::is_empty) {
            return None;
        }
        let n = shape.size();
        let mut pos = vec![None; n];
        for (l, comp) in rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (c, &k) in row.iter().enumerate() {
                    if k == 0 || k > n || pos[k - 1].is_some() {
                        return None;
                    }
                    pos[k - 1] = Some(Node::new(r + 1, c + 1, l + 1));
                    if c > 0 && row[c - 1] > k {
                        return None;
                    }
                    if r > 0 && comp[r - 1][c] > k {
                        return None;
                    }
                }
            }
        }
        let pos = pos.into_iter().collect::<Option<Vec<_>>>()?;
        Some(StandardTableau { shape, rows, pos })
    }

    fn from_positions(shape: &Multipartition, pos: Vec<Node>) -> Self {
        let mut rows: Vec<Vec<Vec<usize>>> = shape
            .components()
            .iter()
            .map(|c| c.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, node) in pos.iter().enumerate() {
            rows[node.l - 1][node.r - 1][node.c - 1] = k + 1;
        }
        StandardTableau {
            shape: shape.clone(),
            rows,
            pos,
        }
    }

    /// The tableau `t^lambda` with `1, ..., n` entered along the rows of the
    /// first component, then the second, and so on.
    pub fn initial(shape: &Multipartition) -> Self {
        Self::from_positions(shape, shape.nodes())
    }

    /// The tableau `t_lambda = (t^{lambda'})'`.
    pub fn final_tableau(shape: &Multipartition) -> Self {
        Self::initial(&shape.conjugate()).conjugate()
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.pos.len()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    /// The node `t^{-1}(k)`.
    pub fn node_of(&self, k: usize) -> Node {
        self.pos[k - 1]
    }

    /// The entry `t(node)`.
    pub fn entry(&self, node: &Node) -> usize {
        self.rows[node.l - 1][node.r - 1][node.c - 1]
    }

    /// `Shape(t restricted to 1..k)`.
    pub fn restricted_shape(&self, k: usize) -> Multipartition {
        let comps = (0..self.shape.level())
            .map(|l| {
                self.rows[l]
                    .iter()
                    .map(|row| row.iter().filter(|&&v| v <= k).count())
                    .collect()
            })
            .collect();
        Multipartition::new(comps).expect("restriction of a standard tableau")
    }

    /// The restricted tableau `t` on `1..k`.
    pub fn restrict(&self, k: usize) -> StandardTableau {
        let shape = self.restricted_shape(k);
        Self::from_positions(&shape, self.pos[..k].to_vec())
    }

    /// The conjugate tableau `t'(r, c, l) = t(c, r, l_max - l + 1)`.
    pub fn conjugate(&self) -> StandardTableau {
        let level = self.shape.level();
        let pos = self
            .pos
            .iter()
            .map(|n| Node::new(n.c, n.r, level - n.l + 1))
            .collect();
        Self::from_positions(&self.shape.conjugate(), pos)
    }

    /// The residue sequence `(res t^{-1}(1), ..., res t^{-1}(n))`.
    pub fn residues(&self, q: &QuiverData) -> Vec<Residue> {
        self.pos.iter().map(|n| q.residue(n.r, n.c, n.l)).collect()
    }

    /// The residue of the node containing `k`.
    pub fn residue_at(&self, k: usize, q: &QuiverData) -> Residue {
        let n = self.node_of(k);
        q.residue(n.r, n.c, n.l)
    }

    /// The permutation `d(t)` with `t = t^lambda d(t)`.
    pub fn d_perm(&self) -> Perm {
        let images = self
            .shape
            .nodes()
            .iter()
            .map(|n| self.entry(n) as u8)
            .collect();
        Perm::from_images(images).expect("tableau entries form a permutation")
    }

    /// The canonical reduced word of `d(t)`.
    pub fn d_word(&self) -> Vec<usize> {
        self.d_perm().reduced_word()
    }

    /// Tableau dominance `self >= other`: every restriction of `self`
    /// dominates the corresponding restriction of `other`.
    pub fn dominates(&self, other: &StandardTableau) -> bool {
        let n = self.size().min(other.size());
        (1..=n).all(|k| self.restricted_shape(k).dominates(&other.restricted_shape(k)))
    }

    /// The canonical total order: lexicographic on the chain of restricted
    /// shapes from `n - 1` down to `1`, more dominant first.
    pub fn canonical_cmp(&self, other: &StandardTableau) -> Ordering {
        let n = self.size();
        for k in (1..=n).rev() {
            let c = self
                .restricted_shape(k)
                .canonical_cmp(&other.restricted_shape(k));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }

    /// JSON form: per component, a list of rows of entries.
    pub fn to_json(&self) -> Value {
        serde_json::json!(self.rows)
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `/`, components by `|`, for example `12/3|4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() >= 10 { "," } else { "" };
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|c| {
                c.iter()
                    .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep))
                    .collect::<Vec<_>>()
                    .join("/")
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

/// Dominance on pairs: `(u, v) > (s, t)` iff the pairs differ and either the
/// shape of `u` strictly dominates that of `s`, or the shapes agree and
/// `u >= s`, `v >= t`.
pub fn pair_dominates(
    uv: (&StandardTableau, &StandardTableau),
    st: (&StandardTableau, &StandardTableau),
) -> bool {
    if uv.0 == st.0 && uv.1 == st.1 {
        return false;
    }
    let (mu, lam) = (uv.0.shape(), st.0.shape());
    if mu != lam {
        return mu.dominates(lam);
    }
    uv.0.dominates(st.0) && uv.1.dominates(st.1)
}

fn sort_canonical(mut v: Vec<StandardTableau>) -> Vec<StandardTableau> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v
}

/// All standard tableaux of the given shape, in the canonical order.
pub fn standard_tableaux(shape: &Multipartition) -> Vec<StandardTableau> {
    fn rec(shape: &Multipartition, tail: &mut Vec<Node>, out: &mut Vec<Vec<Node>>) {
        if shape.size() == 0 {
            let mut pos = tail.clone();
            pos.reverse();
            out.push(pos);
            return;
        }
        for node in shape.removable() {
            tail.push(node);
            rec(&shape.remove_node(&node), tail, out);
            tail.pop();
        }
    }
    let mut all = Vec::new();
    rec(shape, &mut Vec::new(), &mut all);
    sort_canonical(
        all.into_iter()
            .map(|pos| StandardTableau::from_positions(shape, pos))
            .collect(),
    )
}

/// All standard tableaux with `level` components whose residue sequence is
/// `i`, in the canonical order.
pub fn std_of_residue(i: &[Residue], level: usize, q: &QuiverData) -> Vec<StandardTableau> {
    fn rec(
        i: &[Residue],
        q: &QuiverData,
        shape: &Multipartition,
        pos: &mut Vec<Node>,
        out: &mut Vec<StandardTableau>,
    ) {
        if pos.len() == i.len() {
            out.push(StandardTableau::from_positions(shape, pos.clone()));
            return;
        }
        let want = i[pos.len()];
        for node in shape.addable() {
            if q.same(q.residue(node.r, node.c, node.l), want) {
                pos.push(node);
                rec(i, q, &shape.add_node(&node), pos, out);
                pos.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(i, q, &Multipartition::empty(level), &mut Vec::new(), &mut out);
    sort_canonical(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::partition::multipartitions;
    use proptest::prelude::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let t = standard_tableaux(&mp("2,1"));
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].to_string(), "12/3");
        assert_eq!(standard_tableaux(&mp("1|1")).len(), 2);
        assert_eq!(standard_tableaux(&mp("3,2")).len(), 5);
    }

    #[test]
    fn residue_examples() {
        let q3 = QuiverData::new(3, vec![0]).unwrap();
        assert_eq!(StandardTableau::initial(&mp("3")).residues(&q3), vec![0, 1, 2]);
        let q2 = QuiverData::new(2, vec![0]).unwrap();
        assert_eq!(StandardTableau::initial(&mp("1,1")).residues(&q2), vec![0, 1]);
        let q2b = QuiverData::new(2, vec![2, 0]).unwrap();
        assert_eq!(StandardTableau::initial(&mp("1|1")).residues(&q2b), vec![0, 0]);
    }

    #[test]
    fn std_of_residue_examples() {
        let q = QuiverData::new(2, vec![0]).unwrap();
        let s = std_of_residue(&[0, 1], 1, &q);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].shape(), &mp("2"));
        assert_eq!(s[1].shape(), &mp("1,1"));
        assert!(std_of_residue(&[0, 0], 1, &q).is_empty());
        assert_eq!(std_of_residue(&[0], 1, &q).len(), 1);
    }

    #[test]
    fn d_word_examples() {
        let lam = mp("2,1");
        assert!(StandardTableau::initial(&lam).d_word().is_empty());
        let t = StandardTableau::from_rows(vec![vec![vec![1, 3], vec![2]]]).unwrap();
        assert_eq!(t.d_word(), vec![2]);
        let tl = StandardTableau::final_tableau(&mp("2"));
        assert_eq!(tl, StandardTableau::initial(&mp("2")));
        assert!(tl.d_word().is_empty());
    }

    #[test]
    fn conjugate_examples() {
        let t = StandardTableau::from_rows(vec![vec![vec![1, 2]], vec![vec![3]]]).unwrap();
        let c = t.conjugate();
        assert_eq!(c.shape(), &mp("1|1,1"));
        assert_eq!(c.to_string(), "3|1/2");
        assert_eq!(c.conjugate(), t);
    }

    #[test]
    fn initial_tableau_dominates_all() {
        for lam in multipartitions(5, 2) {
            let all = standard_tableaux(&lam);
            assert_eq!(all.len() as u128, lam.hook_count());
            assert_eq!(all[0], StandardTableau::initial(&lam));
            for t in &all {
                assert!(all[0].dominates(t));
            }
        }
    }

    proptest! {
        #[test]
        fn d_word_reconstructs(n in 1usize..7, l in 1usize..3, pick in 0usize..1000) {
            let shapes = multipartitions(n, l);
            let lam = &shapes[pick % shapes.len()];
            let all = standard_tableaux(lam);
            let t = &all[pick % all.len()];
            let d = t.d_perm();
            let word = t.d_word();
            prop_assert_eq!(word.len(), d.length());
            // Acting on the entries of t^lambda by d gives t.
            let init = StandardTableau::initial(lam);
            for node in lam.nodes() {
                prop_assert_eq!(Perm::from_word(n, &word).image(init.entry(&node)), t.entry(&node));
            }
            for (a, x) in all.iter().enumerate() {
                for (b, y) in all.iter().enumerate() {
                    if x != y && x.dominates(y) {
                        prop_assert!(a < b);
                    }
                }
            }
        }
    }
}
