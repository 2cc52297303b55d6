//! Finite groups of integer matrices, held as explicit element lists.
//!
//! Elements are discovered breadth-first from the identity by right
//! multiplication with the generators, so element `0` is the identity and
//! every stored word is a shortest positive word. Everything downstream
//! (Sylow subgroup, subgroup lattice, classes, relators) is indexed by that
//! discovery order, which makes all results reproducible.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exact::Overflow;
use crate::matrix::IntMatrix;
use crate::word::{free_reduce, inverse_word, Letter, Word};

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator {0} is not an invertible square integer matrix of the group dimension")]
    BadGenerator(usize),
    #[error("group of order {0} is not a 2-group")]
    NotTwoGroup(usize),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Largest power of two dividing `order`.
pub fn two_part(order: usize) -> usize {
    if order == 0 {
        return 0;
    }
    1 << order.trailing_zeros()
}

#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    dim: usize,
    generators: Vec<IntMatrix>,
    elements: Vec<IntMatrix>,
    index: BTreeMap<IntMatrix, usize>,
    words: Vec<Word>,
    /// `right[e][g]` is the index of `elements[e] * generators[g]`.
    right: Vec<Vec<usize>>,
    /// BFS tree edge `(parent, generator)` that discovered each element.
    parent: Vec<Option<(usize, usize)>>,
    inverses: Vec<usize>,
}

impl FiniteMatrixGroup {
    /// Closes `generators` under multiplication, refusing to go past `cap`
    /// elements.
    pub fn close(dim: usize, generators: Vec<IntMatrix>, cap: usize) -> Result<Self, GroupError> {
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim || g.determinant()?.abs() != 1 {
                return Err(GroupError::BadGenerator(i));
            }
        }
        let identity = IntMatrix::identity(dim);
        let mut elements = vec![identity.clone()];
        let mut index = BTreeMap::new();
        index.insert(identity, 0);
        let mut words: Vec<Word> = vec![Vec::new()];
        let mut parent = vec![None];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for (g, gen) in generators.iter().enumerate() {
                let prod = elements[e].checked_mul(gen)?;
                let target = match index.get(&prod) {
                    Some(&t) => t,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::CapExceeded { cap });
                        }
                        let t = elements.len();
                        let mut w = words[e].clone();
                        w.push(Letter::new(g));
                        index.insert(prod.clone(), t);
                        elements.push(prod);
                        words.push(w);
                        parent.push(Some((e, g)));
                        queue.push_back(t);
                        t
                    }
                };
                row.push(target);
            }
            if right.len() <= e {
                right.resize(e + 1, Vec::new());
            }
            right[e] = row;
        }
        let mut group = Self { dim, generators, elements, index, words, right, parent, inverses: Vec::new() };
        group.inverses = (0..group.order())
            .map(|i| {
                let inv = group.elements[i]
                    .to_rational()
                    .inverse()?
                    .and_then(|m| m.to_integer())
                    .expect("unimodular element");
                Ok(group.index[&inv])
            })
            .collect::<Result<_, Overflow>>()?;
        Ok(group)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_two_group(&self) -> bool {
        self.order().is_power_of_two()
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    /// Shortest positive word over the generators evaluating to element `i`.
    pub fn word(&self, i: usize) -> &[Letter] {
        &self.words[i]
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        let m = self.elements[i].checked_mul(&self.elements[j]).expect("entries of a finite group stay small");
        self.index[&m]
    }

    /// `g h g^{-1}`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.product(self.product(g, h), self.inverse(g))
    }

    pub fn evaluate(&self, word: &[Letter]) -> usize {
        word.iter().fold(0, |acc, l| {
            if l.inverse {
                let gen_index = self.right[0][l.gen];
                self.product(acc, self.inverse(gen_index))
            } else {
                self.right[acc][l.gen]
            }
        })
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut acc = i;
        while acc != 0 {
            acc = self.product(acc, i);
            k += 1;
        }
        k
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let p = self.product(e, g);
                if !member[p] {
                    member[p] = true;
                    out.push(p);
                    queue.push_back(p);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn normalizes(&self, x: usize, member: &[bool], subgroup_gens: &[usize]) -> bool {
        subgroup_gens.iter().all(|&h| member[self.conjugate(x, h)])
    }

    /// A Sylow 2-subgroup, grown from a 2-element of maximal order by
    /// repeatedly adjoining a normalizing 2-element.
    pub fn sylow2(&self, cap: usize) -> Result<EmbeddedSubgroup, GroupError> {
        let target = two_part(self.order());
        let orders: Vec<usize> = (0..self.order()).map(|i| self.element_order(i)).collect();
        let mut gens: Vec<usize> = Vec::new();
        let mut current = vec![0usize];
        if target > 1 {
            let start = (0..self.order())
                .filter(|&i| orders[i].is_power_of_two())
                .max_by_key(|&i| (orders[i], core::cmp::Reverse(i)))
                .expect("identity is a 2-element");
            gens.push(start);
            current = self.generate(&gens);
        }
        while current.len() < target {
            let mut member = vec![false; self.order()];
            for &c in &current {
                member[c] = true;
            }
            let next = (0..self.order()).find_map(|x| {
                if member[x] || !orders[x].is_power_of_two() || !self.normalizes(x, &member, &gens) {
                    return None;
                }
                let mut candidate = gens.clone();
                candidate.push(x);
                let span = self.generate(&candidate);
                span.len().is_power_of_two().then_some((x, span))
            });
            let (x, span) = next.expect("a non-Sylow 2-subgroup has a proper 2-overgroup in its normalizer");
            gens.push(x);
            current = span;
        }
        self.embed(&gens, cap)
    }

    /// The subgroup generated by the given elements, as a group in its own
    /// right, remembering the ambient words of its generators.
    pub fn embed(&self, gens: &[usize], cap: usize) -> Result<EmbeddedSubgroup, GroupError> {
        let matrices = gens.iter().map(|&g| self.elements[g].clone()).collect();
        let group = FiniteMatrixGroup::close(self.dim, matrices, cap)?;
        let ambient_words = gens.iter().map(|&g| self.words[g].clone()).collect();
        Ok(EmbeddedSubgroup { group, ambient_generators: gens.to_vec(), ambient_words })
    }

    /// Every subgroup of a 2-group, smallest first, with left coset
    /// representatives.
    ///
    /// A subgroup of order `2^{k+1}` always contains a normal subgroup `H` of
    /// index 2, so it equals `H ∪ xH` for some `x` normalizing `H` with
    /// `x^2 ∈ H`; growing level by level from the trivial group therefore
    /// reaches all of them.
    pub fn subgroups_2group(&self) -> Result<Vec<Subgroup>, GroupError> {
        if !self.is_two_group() {
            return Err(GroupError::NotTwoGroup(self.order()));
        }
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(vec![0]);
        let mut all = vec![vec![0usize]];
        let mut frontier = vec![vec![0usize]];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                let mut member = vec![false; self.order()];
                for &e in h {
                    member[e] = true;
                }
                for x in 0..self.order() {
                    if member[x] || !member[self.product(x, x)] || !self.normalizes(x, &member, h) {
                        continue;
                    }
                    let mut k: Vec<usize> = h.iter().flat_map(|&e| [e, self.product(x, e)]).collect();
                    k.sort_unstable();
                    if seen.insert(k.clone()) {
                        next.push(k);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(all.into_iter().map(|elements| self.subgroup_from_elements(elements)).collect())
    }

    /// Wraps a sorted element set that is known to be a subgroup.
    pub fn subgroup_from_elements(&self, elements: Vec<usize>) -> Subgroup {
        let mut covered = vec![false; self.order()];
        let mut coset_reps = Vec::new();
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            coset_reps.push(g);
            for &h in &elements {
                covered[self.product(g, h)] = true;
            }
        }
        Subgroup { elements, coset_reps }
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup_from_elements((0..self.order()).collect())
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens: Vec<usize> = self.right[0].clone();
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if assigned[x] {
                continue;
            }
            assigned[x] = true;
            let mut class = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = self.conjugate(g, y);
                    if !assigned[z] {
                        assigned[z] = true;
                        class.push(z);
                        queue.push_back(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// One relator per non-tree edge `g --x--> gx` of the Cayley graph:
    /// `w_g x w_{gx}^{-1}`, freely reduced. Together they present the group.
    pub fn relators(&self) -> RelatorSet {
        let mut relators = Vec::new();
        for e in 0..self.order() {
            for g in 0..self.generators.len() {
                let target = self.right[e][g];
                if self.parent[target] == Some((e, g)) {
                    continue;
                }
                let mut w = self.words[e].clone();
                w.push(Letter::new(g));
                w.extend(inverse_word(&self.words[target]));
                let w = free_reduce(&w);
                if !w.is_empty() {
                    relators.push(w);
                }
            }
        }
        RelatorSet { relators }
    }

    /// All homomorphisms `H -> {±1}`, trivial character first.
    ///
    /// They factor through `H / Φ(H)` where `Φ(H)` is generated by squares and
    /// commutators; a basis of that elementary abelian quotient gives
    /// coordinates, and each character is a parity of coordinates.
    pub fn linear_characters(&self, h: &Subgroup) -> Vec<LinearCharacter> {
        let mut frattini_gens = BTreeSet::new();
        for &x in &h.elements {
            frattini_gens.insert(self.product(x, x));
            for &y in &h.elements {
                let comm = self.product(self.product(x, y), self.inverse(self.product(y, x)));
                frattini_gens.insert(comm);
            }
        }
        let mut span_gens: Vec<usize> = frattini_gens.into_iter().collect();
        let frattini = self.generate(&span_gens);
        let mut span = frattini.clone();
        let mut basis = Vec::new();
        for &x in &h.elements {
            if span.binary_search(&x).is_err() {
                basis.push(x);
                span_gens.push(x);
                span = self.generate(&span_gens);
            }
        }
        let d = basis.len();
        let mut coordinate = vec![0u32; self.order()];
        for c in 0u32..(1 << d) {
            let rep = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| c & (1 << i) != 0)
                .fold(0, |acc, (_, &b)| self.product(acc, b));
            for &f in &frattini {
                coordinate[self.product(rep, f)] = c;
            }
        }
        (0u32..(1 << d))
            .map(|v| LinearCharacter {
                values: h
                    .elements
                    .iter()
                    .map(|&x| if (v & coordinate[x]).count_ones().is_multiple_of(2) { 1 } else { -1 })
                    .collect(),
            })
            .collect()
    }
}

/// A subgroup of a [`FiniteMatrixGroup`] as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    /// Left coset representatives `t_1, ..., t_r` of `G / H`, `t_1 = 1`.
    pub coset_reps: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn position(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.position(element).is_some()
    }
}

/// A subgroup realized as its own [`FiniteMatrixGroup`], with each generator
/// also recorded as an element of (and word in) the ambient group.
#[derive(Debug, Clone)]
pub struct EmbeddedSubgroup {
    pub group: FiniteMatrixGroup,
    pub ambient_generators: Vec<usize>,
    pub ambient_words: Vec<Word>,
}

/// A homomorphism `H -> {±1}`; `values[k]` is the value on `H.elements[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    pub values: Vec<i8>,
}

impl LinearCharacter {
    pub fn value(&self, h: &Subgroup, element: usize) -> Option<i8> {
        h.position(element).map(|k| self.values[k])
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }
}

/// Words over the generators (and their inverses) that evaluate to the
/// identity and together present the group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelatorSet {
    pub relators: Vec<Word>,
}

impl RelatorSet {
    pub fn len(&self) -> usize {
        self.relators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.relators.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn perm_matrix(images: &[usize]) -> IntMatrix {
        let n = images.len();
        let mut m = IntMatrix::zeros(n, n);
        for (j, &i) in images.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    pub(crate) fn holonomy_s4() -> FiniteMatrixGroup {
        FiniteMatrixGroup::close(5, samples::min_134_1_2_2().holonomy_matrices(), DEFAULT_CAP).unwrap()
    }

    pub(crate) fn holonomy_d8() -> FiniteMatrixGroup {
        FiniteMatrixGroup::close(5, samples::min_134_1_2_2_sylow_preimage().holonomy_matrices(), DEFAULT_CAP).unwrap()
    }

    fn klein_four() -> FiniteMatrixGroup {
        let a = IntMatrix::diagonal(&[1, -1, -1]);
        let b = IntMatrix::diagonal(&[-1, 1, -1]);
        FiniteMatrixGroup::close(3, vec![a, b], DEFAULT_CAP).unwrap()
    }

    /// Brute force: all subsets of a small group closed under multiplication.
    fn brute_force_subgroup_count(g: &FiniteMatrixGroup) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..(1 << n))
            .filter(|mask| mask & 1 == 1)
            .filter(|&mask| {
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .all(|i| (0..n).filter(|j| mask & (1 << j) != 0).all(|j| mask & (1 << g.product(i, j)) != 0))
            })
            .count()
    }

    /// Brute force: classes from the full conjugation table.
    fn brute_force_class_sizes(g: &FiniteMatrixGroup) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut sizes = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let mut class = BTreeSet::new();
            for y in 0..g.order() {
                class.insert(g.conjugate(y, x));
            }
            for &c in &class {
                seen[c] = true;
            }
            sizes.push(class.len());
        }
        sizes
    }

    #[test]
    fn closure_orders() {
        assert_eq!(FiniteMatrixGroup::close(5, vec![], DEFAULT_CAP).unwrap().order(), 1);
        assert_eq!(holonomy_s4().order(), 24);
        assert_eq!(holonomy_d8().order(), 8);
    }

    #[test]
    fn cap_and_bad_generators() {
        let shear = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(FiniteMatrixGroup::close(2, vec![shear], 50).unwrap_err(), GroupError::CapExceeded { cap: 50 });
        let bad = IntMatrix::diagonal(&[2, 1]);
        assert_eq!(FiniteMatrixGroup::close(2, vec![bad], 50).unwrap_err(), GroupError::BadGenerator(0));
    }

    #[test]
    fn words_evaluate_to_their_elements() {
        for g in [holonomy_s4(), holonomy_d8(), klein_four()] {
            for i in 0..g.order() {
                assert_eq!(g.evaluate(g.word(i)), i);
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let g = holonomy_s4();
        let again = FiniteMatrixGroup::close(5, g.elements().to_vec(), DEFAULT_CAP).unwrap();
        let a: BTreeSet<_> = g.elements().iter().cloned().collect();
        let b: BTreeSet<_> = again.elements().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn sylow_subgroups() {
        let trivial = FiniteMatrixGroup::close(3, vec![], DEFAULT_CAP).unwrap();
        assert_eq!(trivial.sylow2(DEFAULT_CAP).unwrap().group.order(), 1);

        let s4 = holonomy_s4();
        let p = s4.sylow2(DEFAULT_CAP).unwrap();
        assert_eq!(p.group.order(), 8);
        for (k, w) in p.ambient_words.iter().enumerate() {
            assert_eq!(s4.element(s4.evaluate(w)), &p.group.generators()[k]);
        }

        let d8 = holonomy_d8();
        let same = d8.sylow2(DEFAULT_CAP).unwrap();
        let a: BTreeSet<_> = d8.elements().iter().cloned().collect();
        let b: BTreeSet<_> = same.group.elements().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn sylow_of_order_with_odd_part() {
        // C_6 generated by a 6-cycle permutation matrix on 6 letters
        let c6 = FiniteMatrixGroup::close(6, vec![perm_matrix(&[1, 2, 3, 4, 5, 0])], DEFAULT_CAP).unwrap();
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.sylow2(DEFAULT_CAP).unwrap().group.order(), 2);
        // C_3 has trivial Sylow 2-subgroup
        let c3 = FiniteMatrixGroup::close(3, vec![perm_matrix(&[1, 2, 0])], DEFAULT_CAP).unwrap();
        let p = c3.sylow2(DEFAULT_CAP).unwrap();
        assert_eq!(p.group.order(), 1);
        assert!(p.ambient_words.is_empty());
    }

    #[test]
    fn subgroup_lattices() {
        let c2 = FiniteMatrixGroup::close(2, vec![IntMatrix::diagonal(&[-1, -1])], DEFAULT_CAP).unwrap();
        assert_eq!(c2.subgroups_2group().unwrap().len(), 2);
        assert_eq!(klein_four().subgroups_2group().unwrap().len(), 5);
        let d8 = holonomy_d8();
        let subs = d8.subgroups_2group().unwrap();
        assert_eq!(subs.len(), brute_force_subgroup_count(&d8));
        assert_eq!(subs.len(), 10);
        for h in &subs {
            assert_eq!(d8.order() % h.order(), 0);
            assert_eq!(h.index() * h.order(), d8.order());
        }
        assert_eq!(holonomy_s4().subgroups_2group().unwrap_err(), GroupError::NotTwoGroup(24));
    }

    #[test]
    fn class_structure() {
        let k = klein_four();
        assert!(k.conjugacy_classes().iter().all(|c| c.len() == 1));
        let d8 = holonomy_d8();
        assert_eq!(d8.conjugacy_classes().len(), 5);
        assert_eq!(brute_force_class_sizes(&d8).len(), 5);
        let s4 = holonomy_s4();
        let mut sizes: Vec<usize> = s4.conjugacy_classes().iter().map(Vec::len).collect();
        let mut oracle = brute_force_class_sizes(&s4);
        sizes.sort_unstable();
        oracle.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes, oracle);
    }

    #[test]
    fn relators_evaluate_to_identity() {
        for g in [holonomy_s4(), holonomy_d8(), klein_four()] {
            let rels = g.relators();
            assert!(!rels.is_empty());
            for r in rels.iter() {
                assert_eq!(g.evaluate(r), 0);
            }
        }
    }

    #[test]
    fn relator_edge_cases() {
        let t = FiniteMatrixGroup::close(2, vec![IntMatrix::identity(2)], DEFAULT_CAP).unwrap();
        assert_eq!(t.relators().relators, vec![vec![Letter::new(0)]]);
        let c4 = FiniteMatrixGroup::close(4, vec![perm_matrix(&[1, 2, 3, 0])], DEFAULT_CAP).unwrap();
        assert_eq!(c4.relators().relators, vec![vec![Letter::new(0); 4]]);
    }

    #[test]
    fn linear_character_counts() {
        let trivial = FiniteMatrixGroup::close(2, vec![], DEFAULT_CAP).unwrap();
        assert_eq!(trivial.linear_characters(&trivial.whole()).len(), 1);
        let c2 = FiniteMatrixGroup::close(2, vec![IntMatrix::diagonal(&[-1, -1])], DEFAULT_CAP).unwrap();
        assert_eq!(c2.linear_characters(&c2.whole()).len(), 2);
        let d8 = holonomy_d8();
        let chars = d8.linear_characters(&d8.whole());
        assert_eq!(chars.len(), 4);
        assert!(chars[0].is_trivial());
        // each is a homomorphism
        let whole = d8.whole();
        for ch in &chars {
            for x in 0..8 {
                for y in 0..8 {
                    let xy = d8.product(x, y);
                    assert_eq!(ch.value(&whole, xy), Some(ch.value(&whole, x).unwrap() * ch.value(&whole, y).unwrap()));
                }
            }
        }
    }
}
