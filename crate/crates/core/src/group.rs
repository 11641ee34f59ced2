//! Fully enumerated permutation groups.
//!
//! Every group keeps its complete element list (sorted lexicographically) and
//! a hash index for constant-time membership. The instances handled here stay
//! well below a few hundred thousand elements, so no stabilizer-chain
//! machinery is involved: every check is a plain scan.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{factorial, partition, LexRange, Permutation};

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

/// Serialized form of a group: `{degree, order, generators}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

fn check_degrees(degree: usize, perms: &[Permutation]) -> Result<()> {
    match perms.iter().find(|g| g.degree() != degree) {
        Some(g) => Err(Error::DegreeMismatch(degree, g.degree())),
        None => Ok(()),
    }
}

/// Breadth-first closure of `gens` (plus the identity).
fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<HashSet<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrderCap {
                        cap,
                        reached: seen.len(),
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

impl PermGroup {
    /// The group generated by `gens`, enumerated by closure.
    pub fn generate(degree: usize, gens: &[Permutation], cap: usize) -> Result<PermGroup> {
        check_degrees(degree, gens)?;
        let set = closure(degree, gens, cap)?;
        let generators: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(PermGroup::assemble(
            degree,
            generators,
            set.into_iter().collect(),
        ))
    }

    /// Wraps a set already known to be a group.
    ///
    /// A small generating set is chosen greedily (first element in sorted
    /// order not yet generated), and closure is then confirmed exactly:
    /// `g·S ⊆ S` for every chosen generator `g` forces `⟨S⟩ ⊆ S`.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<PermGroup> {
        check_degrees(degree, &elements)?;
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        let id = Permutation::identity(degree);
        if elements.binary_search(&id).is_err() {
            return Err(Error::Internal("element set lacks the identity".into()));
        }
        let mut generators: Vec<Permutation> = Vec::new();
        let mut generated: HashSet<Permutation> = HashSet::from([id]);
        for x in &elements {
            if generated.contains(x) {
                continue;
            }
            generators.push(x.clone());
            generated = closure(degree, &generators, elements.len())
                .map_err(|_| Error::Internal("element set is not closed".into()))?;
        }
        if generated.len() != elements.len() {
            return Err(Error::Internal("element set is not closed".into()));
        }
        let group = PermGroup::assemble(degree, generators, elements);
        for g in &group.generators {
            if group
                .elements
                .iter()
                .any(|x| !group.contains(&g.compose(x)))
            {
                return Err(Error::Internal("element set is not closed".into()));
            }
        }
        Ok(group)
    }

    fn assemble(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> PermGroup {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    /// S_m, generated by a transposition and an m-cycle.
    pub fn symmetric(degree: usize, cap: usize) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]])?);
            gens.push(Permutation::from_cycles(degree, &[&cycle])?);
        }
        PermGroup::generate(degree, &gens, cap)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in lexicographic order; doubles as the canonical fingerprint.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    /// Position of an element in [`PermGroup::elements`].
    pub fn position(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            degree: self.degree,
            order: self.order(),
            generators: self.generators.clone(),
        }
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// Whether `g·H·g⁻¹ = H`.
    ///
    /// Only the generators are conjugated: conjugation by `g` is injective
    /// and `H` is finite, so `gHg⁻¹ ⊆ H` already gives equality, and the
    /// containment follows from the generators.
    pub fn normalized_by(&self, g: &Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        self.generators
            .iter()
            .all(|h| self.contains(&g.conjugate(h)))
    }

    /// Same predicate, conjugating every element.
    pub fn normalized_by_exhaustive(&self, g: &Permutation) -> bool {
        self.elements.iter().all(|h| self.contains(&g.conjugate(h)))
    }

    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|h| g.conjugate(h)).collect();
        let elements = self.elements.iter().map(|h| g.conjugate(h)).collect();
        PermGroup::assemble(self.degree, gens, elements)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut stack = vec![point];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.degree).filter(|&i| seen[i]).collect()
    }

    /// Elements fixing every point of `fixed`.
    pub fn pointwise_stabilizer(&self, fixed: &[usize]) -> Vec<&Permutation> {
        self.elements
            .iter()
            .filter(|g| fixed.iter().all(|&p| g.apply(p) == p))
            .collect()
    }

    /// Orbit of `moving` under the pointwise stabilizer of `fixed`, sorted.
    pub fn stabilizer_orbit(&self, fixed: &[usize], moving: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .pointwise_stabilizer(fixed)
            .into_iter()
            .map(|g| g.apply(moving))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Whether `g` normalizes `h`; errors on a degree mismatch.
pub fn normalizes(g: &Permutation, h: &PermGroup) -> Result<bool> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch(g.degree(), h.degree()));
    }
    Ok(h.normalized_by(g))
}

fn check_factorial(degree: usize, cap: u128) -> Result<u128> {
    let total = factorial(degree);
    if total > cap {
        return Err(Error::FactorialCap {
            candidates: total,
            cap,
        });
    }
    Ok(total)
}

/// The normalizer of `h` in the full symmetric group, by scanning all m!
/// permutations in lexicographic order.
///
/// The scan is split into `parts` contiguous rank ranges evaluated in
/// parallel and concatenated in order, so the result does not depend on
/// `parts`.
pub fn normalizer_brute(h: &PermGroup, factorial_cap: u128, parts: usize) -> Result<PermGroup> {
    let m = h.degree();
    let total = check_factorial(m, factorial_cap)?;
    let chunks: Vec<Vec<Permutation>> = partition(total, parts)
        .into_par_iter()
        .map(|(a, b)| {
            LexRange::new(m, a, b)
                .filter(|g| h.normalized_by(g))
                .collect()
        })
        .collect();
    let normalizer = PermGroup::from_elements(m, chunks.concat())?;
    if normalizer.order() % h.order() != 0 || !h.is_subgroup_of(&normalizer) {
        return Err(Error::Internal(
            "normalizer does not contain the group".into(),
        ));
    }
    Ok(normalizer)
}

/// The distinct conjugates `gHg⁻¹`, visiting `g` in the given order and
/// keeping first encounters.
pub fn conjugates_in_order<I>(h: &PermGroup, order: I) -> Vec<PermGroup>
where
    I: IntoIterator<Item = Permutation>,
{
    let mut found: Vec<PermGroup> = Vec::new();
    for g in order {
        // cheap test first: a known conjugate K equals gHg⁻¹ iff it contains
        // the conjugated generators (equal orders)
        let known = found
            .iter()
            .any(|k| h.generators.iter().all(|x| k.contains(&g.conjugate(x))));
        if !known {
            found.push(h.conjugate_by(&g));
        }
    }
    found
}

/// Conjugates of `h` in S_m, labeled by first encounter over the
/// lexicographic scan (so the first one is `h` itself).
pub fn conjugates_of(h: &PermGroup, factorial_cap: u128) -> Result<Vec<PermGroup>> {
    check_factorial(h.degree(), factorial_cap)?;
    Ok(conjugates_in_order(h, LexRange::all(h.degree())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::lex_unrank;

    fn perm(m: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    fn alternating(m: usize) -> PermGroup {
        let gens: Vec<Permutation> = (2..m).map(|i| perm(m, &[&[0, 1, i]])).collect();
        PermGroup::generate(m, &gens, 1000).unwrap()
    }

    #[test]
    fn generate_small_groups() {
        assert_eq!(
            PermGroup::generate(4, &[Permutation::identity(4)], 10)
                .unwrap()
                .order(),
            1
        );
        assert_eq!(PermGroup::symmetric(6, 1000).unwrap().order(), 720);
        assert_eq!(alternating(4).order(), 12);
        let err = PermGroup::symmetric(6, 100).unwrap_err();
        assert!(matches!(err, Error::OrderCap { cap: 100, .. }));
        assert!(matches!(
            PermGroup::generate(3, &[Permutation::identity(4)], 10),
            Err(Error::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn generate_is_idempotent() {
        let s5 = PermGroup::symmetric(5, 1000).unwrap();
        let again = PermGroup::generate(5, s5.elements(), 1000).unwrap();
        assert_eq!(again, s5);
        let rebuilt = PermGroup::from_elements(5, s5.elements().to_vec()).unwrap();
        assert_eq!(rebuilt, s5);
        assert!(rebuilt.generators().len() <= 7);
    }

    #[test]
    fn from_elements_rejects_non_groups() {
        let set = vec![Permutation::identity(3), perm(3, &[&[0, 1, 2]])];
        assert!(matches!(
            PermGroup::from_elements(3, set),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn normalizers_in_small_symmetric_groups() {
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        assert_eq!(normalizer_brute(&s4, 100, 1).unwrap(), s4);
        let a4 = alternating(4);
        assert_eq!(normalizer_brute(&a4, 100, 3).unwrap().order(), 24);
        assert_eq!(conjugates_of(&a4, 100).unwrap().len(), 1);
        // ⟨(0 1)⟩ has normalizer of order 4 and 6 conjugates
        let t = PermGroup::generate(4, &[perm(4, &[&[0, 1]])], 10).unwrap();
        let n = normalizer_brute(&t, 100, 2).unwrap();
        let conj = conjugates_of(&t, 100).unwrap();
        assert_eq!(n.order(), 4);
        assert_eq!(conj.len() * n.order(), 24);
        assert_eq!(conj[0], t);
        assert!(matches!(
            normalizer_brute(&s4, 10, 1),
            Err(Error::FactorialCap { .. })
        ));
    }

    #[test]
    fn normalizer_independent_of_partitioning() {
        let c5 = PermGroup::generate(6, &[perm(6, &[&[0, 1, 2, 3, 4]])], 10).unwrap();
        let one = normalizer_brute(&c5, 1000, 1).unwrap();
        for parts in [2, 5, 13] {
            assert_eq!(normalizer_brute(&c5, 1000, parts).unwrap(), one);
        }
        assert_eq!(one.order(), 20);
    }

    #[test]
    fn generator_test_agrees_with_full_conjugation() {
        let d = PermGroup::generate(
            5,
            &[perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 4], &[2, 3]])],
            100,
        )
        .unwrap();
        for g in LexRange::all(5) {
            assert_eq!(d.normalized_by(&g), d.normalized_by_exhaustive(&g));
        }
    }

    #[test]
    fn stabilizer_orbits() {
        let s5 = PermGroup::symmetric(5, 1000).unwrap();
        assert_eq!(s5.stabilizer_orbit(&[0, 1, 2, 3, 4], 2), vec![2]);
        assert_eq!(s5.stabilizer_orbit(&[3], 1), vec![0, 1, 2, 4]);
        assert_eq!(s5.orbit(0), vec![0, 1, 2, 3, 4]);
    }

    proptest::proptest! {
        #[test]
        fn generator_test_agrees_on_random_groups(
            m in 3usize..7,
            a in 0u128..5040,
            b in 0u128..5040,
            g in 0u128..5040,
        ) {
            let fact = factorial(m);
            let gens = [lex_unrank(m, a % fact), lex_unrank(m, b % fact)];
            if let Ok(h) = PermGroup::generate(m, &gens, 200) {
                let g = lex_unrank(m, g % fact);
                proptest::prop_assert_eq!(h.normalized_by(&g), h.normalized_by_exhaustive(&g));
            }
        }
    }
}
