//! Backtracking search for quandle isomorphisms.
//!
//! Points of the source are assigned in index order. Each assignment is
//! propagated through the tables: once `x` and `y` are mapped, the image of
//! `s_x(y)` is forced to `s'_{φ(x)}(φ(y))`. Candidates are restricted to
//! points with the same invariant, the pair (cycle structure of `s_x`,
//! size of the Inn-orbit of `x`).

use crate::permgroup::{orbits_under, Permutation};
use crate::qcore::Quandle;

const UNSET: usize = usize::MAX;

type Invariant = (Vec<usize>, usize);

fn invariants(q: &Quandle) -> Vec<Invariant> {
    let symmetries = q.symmetries();
    let mut orbit_size = vec![0; q.len()];
    for orbit in orbits_under(q.len(), &symmetries) {
        for &x in &orbit {
            orbit_size[x] = orbit.len();
        }
    }
    symmetries
        .iter()
        .zip(orbit_size)
        .map(|(s, size)| (s.cycle_structure(), size))
        .collect()
}

struct Search<'a> {
    src: &'a Quandle,
    dst: &'a Quandle,
    src_inv: Vec<Invariant>,
    dst_inv: Vec<Invariant>,
    phi: Vec<usize>,
    psi: Vec<usize>,
    assigned: Vec<usize>,
    find_all: bool,
    found: Vec<Permutation>,
}

impl<'a> Search<'a> {
    fn new(src: &'a Quandle, dst: &'a Quandle, find_all: bool) -> Option<Self> {
        if src.len() != dst.len() {
            return None;
        }
        let src_inv = invariants(src);
        let dst_inv = invariants(dst);
        let mut a = src_inv.clone();
        let mut b = dst_inv.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
        let n = src.len();
        Some(Self {
            src,
            dst,
            src_inv,
            dst_inv,
            phi: vec![UNSET; n],
            psi: vec![UNSET; n],
            assigned: Vec::with_capacity(n),
            find_all,
            found: Vec::new(),
        })
    }

    fn try_assign(&mut self, x: usize, v: usize) -> bool {
        if self.psi[v] != UNSET || self.src_inv[x] != self.dst_inv[v] {
            return false;
        }
        self.phi[x] = v;
        self.psi[v] = x;
        self.assigned.push(x);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let x = self.assigned.pop().expect("nonempty");
            self.psi[self.phi[x]] = UNSET;
            self.phi[x] = UNSET;
        }
    }

    /// Closes the partial map under the tables starting from the points
    /// assigned after `mark`. Returns false on a contradiction.
    fn propagate(&mut self, mark: usize) -> bool {
        let mut cursor = mark;
        while cursor < self.assigned.len() {
            let x = self.assigned[cursor];
            cursor += 1;
            let mut i = 0;
            while i < self.assigned.len() {
                let y = self.assigned[i];
                i += 1;
                for (a, b) in [(x, y), (y, x)] {
                    let z = self.src.act(a, b);
                    let target = self.dst.act(self.phi[a], self.phi[b]);
                    if self.phi[z] == UNSET {
                        if !self.try_assign(z, target) {
                            return false;
                        }
                    } else if self.phi[z] != target {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self) -> bool {
        let Some(x) = (0..self.phi.len()).find(|&x| self.phi[x] == UNSET) else {
            self.found
                .push(Permutation::from_images_unchecked(self.phi.clone()));
            return !self.find_all;
        };
        for v in 0..self.dst.len() {
            let mark = self.assigned.len();
            if self.try_assign(x, v) && self.propagate(mark) && self.run() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// A bijection `φ` with `φ(s_x(y)) = s'_{φ(x)}(φ(y))`, if one exists.
pub fn is_isomorphic(src: &Quandle, dst: &Quandle) -> Option<Permutation> {
    let mut search = Search::new(src, dst, false)?;
    search.run();
    let witness = search.found.pop();
    if let Some(phi) = &witness {
        debug_assert!(src.is_homomorphism_to(dst, phi.images()));
    }
    witness
}

/// Every automorphism of `q`, in lexicographic order.
pub fn automorphisms(q: &Quandle) -> Vec<Permutation> {
    let mut search = Search::new(q, q, true).expect("a quandle matches itself");
    search.run();
    let mut found = search.found;
    found.sort();
    found
}
