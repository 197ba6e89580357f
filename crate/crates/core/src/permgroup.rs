//! Permutations of `{0, …, n-1}` and brute-force permutation groups.
//!
//! Groups are stored with every element materialized. That is only sensible
//! for groups of order up to a few thousand, which covers every inner
//! automorphism group this crate deals with; [`PermGroup::closure`] takes a
//! hard cap so that misuse on a large group fails fast instead of exhausting
//! memory.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Default cap on the number of elements [`PermGroup::closure`] will build.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a bijection of 0..{degree}: {images:?}")]
    NotBijection { degree: usize, images: Vec<usize> },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("domain is empty")]
    EmptyDomain,
    #[error("domain is not invariant: {point} is mapped to {image}")]
    NonInvariantDomain { point: usize, image: usize },
}

/// A bijection of `{0, …, n-1}` in one-line notation: position `i` holds the
/// image of `i`.
///
/// Equality and ordering are lexicographic on the one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] {
                return Err(PermError::NotBijection { degree: n, images });
            }
            seen[y] = true;
        }
        Ok(Self { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(PermError::NotBijection { degree, images });
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `self ∘ g`: apply `g` first, then `self`.
    pub fn compose(&self, g: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != g.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(self.compose_unchecked(g))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, g: &Permutation) -> Permutation {
        Permutation {
            images: g.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        result
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths; fixed points count as cycles of length 1.
    pub fn cycle_structure(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_structure()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// One-line notation, e.g. `[0,2,4,1,3]`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Cycle notation with fixed points omitted, e.g. `(1 2 4 3)`; the identity
/// prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A finite permutation group with its full element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: BTreeSet<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        Self {
            degree,
            generators: Vec::new(),
            elements: BTreeSet::from([id]),
        }
    }

    /// Smallest group containing `generators`, built by breadth-first
    /// multiplication. Fails once more than `cap` elements have been found.
    pub fn closure(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        // In a finite group every inverse is a positive power, so multiplying
        // by the generators alone reaches the whole group.
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let next = g.compose_unchecked(&e);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(PermError::CapExceeded { cap });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(Self {
            degree,
            generators,
            elements: seen.into_iter().collect(),
        })
    }

    /// Cyclic group generated by `g`.
    pub fn cyclic(g: &Permutation) -> Self {
        let mut elements = BTreeSet::new();
        let mut x = Permutation::identity(g.degree());
        loop {
            elements.insert(x.clone());
            x = g.compose_unchecked(&x);
            if x.is_identity() {
                break;
            }
        }
        Self {
            degree: g.degree(),
            generators: vec![g.clone()],
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &BTreeSet<Permutation> {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, f: &Permutation) -> bool {
        self.elements.contains(f)
    }

    fn check_point(&self, x: usize) -> Result<(), PermError> {
        if x >= self.degree {
            Err(PermError::PointOutOfRange {
                point: x,
                degree: self.degree,
            })
        } else {
            Ok(())
        }
    }

    pub fn orbit(&self, x: usize) -> Result<BTreeSet<usize>, PermError> {
        self.check_point(x)?;
        Ok(orbit_under(self.degree, &self.generators, x))
    }

    /// All orbits, each listed in increasing order, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_under(self.degree, &self.generators)
    }

    /// The isotropy subgroup of `x`, obtained by filtering the element set.
    pub fn stabilizer(&self, x: usize) -> Result<PermGroup, PermError> {
        self.check_point(x)?;
        let elements: BTreeSet<Permutation> = self
            .elements
            .iter()
            .filter(|f| f.apply(x) == x)
            .cloned()
            .collect();
        let generators = elements
            .iter()
            .filter(|f| !f.is_identity())
            .cloned()
            .collect();
        Ok(PermGroup {
            degree: self.degree,
            generators,
            elements,
        })
    }

    /// Whether the group acts transitively on `domain`, which must be
    /// nonempty and invariant under the group.
    pub fn is_transitive(&self, domain: &BTreeSet<usize>) -> Result<bool, PermError> {
        let Some(&first) = domain.iter().next() else {
            return Err(PermError::EmptyDomain);
        };
        for &x in domain {
            self.check_point(x)?;
            for g in &self.generators {
                let y = g.apply(x);
                if !domain.contains(&y) {
                    return Err(PermError::NonInvariantDomain { point: x, image: y });
                }
            }
        }
        Ok(self.orbit(first)?.len() == domain.len())
    }
}

/// Orbit of `x` under the group generated by `generators`, computed on points
/// without materializing the group.
pub fn orbit_under(degree: usize, generators: &[Permutation], x: usize) -> BTreeSet<usize> {
    let mut seen = vec![false; degree];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in generators {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    (0..degree).filter(|&i| seen[i]).collect()
}

pub fn orbits_under(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for x in 0..degree {
        if assigned[x] {
            continue;
        }
        let orbit: Vec<usize> = orbit_under(degree, generators, x).into_iter().collect();
        for &y in &orbit {
            assigned[y] = true;
        }
        out.push(orbit);
    }
    out
}
