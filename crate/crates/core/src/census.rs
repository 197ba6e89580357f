//! Exhaustive enumeration of quandles of order at most 6, up to isomorphism.
//!
//! Tables are built row by row. Candidate rows are the permutations fixing
//! their own index, so S1 and S2 hold by construction. After row `x` is
//! placed, every S3 instance whose rows are all placed and involve `x` is
//! checked. When two placed rows `a, b` already have `s_a(b) = x`, row `x` is
//! forced to `s_a ∘ s_b ∘ s_a^{-1}` and only that candidate is tried.
//!
//! The search is split by the choice of row 0; branches run independently
//! and are merged through canonical forms, so the result does not depend on
//! the execution mode.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{analyze, AnalysisReport};
use crate::exec::Execution;
use crate::permgroup::{PermError, PermGroup};
use crate::qcore::{serialize_many, Quandle};

/// Largest order the census accepts. The labeled search space at order 7 is
/// out of reach for this search.
pub const MAX_CENSUS_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census order must be between {min} and {max}, got {n}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn check_order(n: usize, min: usize) -> Result<(), CensusError> {
    if n < min || n > MAX_CENSUS_ORDER {
        return Err(CensusError::OrderOutOfRange {
            n,
            min,
            max: MAX_CENSUS_ORDER,
        });
    }
    Ok(())
}

/// Lexicographically least table over all `n!` relabelings.
pub fn canonical_form(q: &Quandle) -> Quandle {
    (0..q.len())
        .permutations(q.len())
        .map(|relabel| q.relabel(&relabel))
        .min()
        .expect("at least one relabeling")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    pub quandle: Quandle,
    /// Number of labeled tables in this class.
    pub labeled: usize,
    #[serde(skip)]
    pub analysis: AnalysisReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub connected_only: bool,
    /// Labeled tables over the classes reported.
    pub total_labeled: usize,
    /// Canonical representatives in increasing table order.
    pub classes: Vec<CensusClass>,
    pub connected_count: usize,
    pub tph_count: usize,
    pub cyclic_count: usize,
}

impl CensusResult {
    pub fn iso_classes(&self) -> Vec<Quandle> {
        self.classes.iter().map(|c| c.quandle.clone()).collect()
    }

    pub fn summary(&self) -> CensusSummary {
        CensusSummary {
            n: self.n,
            connected_only: self.connected_only,
            total_labeled: self.total_labeled,
            iso_classes: self.classes.len(),
            connected: self.connected_count,
            two_point_homogeneous: self.tph_count,
            cyclic_type: self.cyclic_count,
        }
    }

    /// Summary as `#` comment lines followed by every class in the text
    /// table format, separated by `---`.
    pub fn render_text(&self) -> String {
        let s = self.summary();
        let mut out = format!(
            "# order {}{}\n# labeled tables: {}\n# isomorphism classes: {}\n# connected: {}\n# two-point homogeneous: {}\n# cyclic type: {}\n",
            s.n,
            if s.connected_only { " (connected only)" } else { "" },
            s.total_labeled,
            s.iso_classes,
            s.connected,
            s.two_point_homogeneous,
            s.cyclic_type
        );
        out.push_str(&serialize_many(&self.iso_classes()));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub n: usize,
    pub connected_only: bool,
    pub total_labeled: usize,
    pub iso_classes: usize,
    pub connected: usize,
    pub two_point_homogeneous: usize,
    pub cyclic_type: usize,
}

/// Every permutation of `0..n` fixing `x`, in lexicographic order.
fn rows_fixing(n: usize, x: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).filter(|p| p[x] == x).collect()
}

struct Builder {
    n: usize,
    candidates: Vec<Vec<Vec<usize>>>,
    table: Vec<usize>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            n,
            candidates: (0..n).map(|x| rows_fixing(n, x)).collect(),
            table: vec![0; n * n],
        }
    }

    #[inline]
    fn at(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// S3 instances newly decidable once rows `0..=x` are placed.
    fn consistent(&self, x: usize) -> bool {
        for a in 0..=x {
            for b in 0..=x {
                let c = self.at(a, b);
                if c > x || (a != x && b != x && c != x) {
                    continue;
                }
                for z in 0..self.n {
                    if self.at(a, self.at(b, z)) != self.at(c, self.at(a, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `s_a ∘ s_b ∘ s_a^{-1}` for placed rows with `s_a(b) = x`, if any.
    fn forced_row(&self, x: usize) -> Option<Vec<usize>> {
        let n = self.n;
        for a in 0..x {
            for b in 0..x {
                if self.at(a, b) == x {
                    let mut inv = vec![0; n];
                    for y in 0..n {
                        inv[self.at(a, y)] = y;
                    }
                    return Some((0..n).map(|y| self.at(a, self.at(b, inv[y]))).collect());
                }
            }
        }
        None
    }

    fn place(&mut self, x: usize, row: &[usize]) {
        self.table[x * self.n..(x + 1) * self.n].copy_from_slice(row);
    }

    fn extend(&mut self, x: usize, visit: &mut dyn FnMut(&[usize])) {
        if x == self.n {
            visit(&self.table);
            return;
        }
        if let Some(row) = self.forced_row(x) {
            self.place(x, &row);
            if self.consistent(x) {
                self.extend(x + 1, visit);
            }
            return;
        }
        for i in 0..self.candidates[x].len() {
            let row = std::mem::take(&mut self.candidates[x][i]);
            self.place(x, &row);
            self.candidates[x][i] = row;
            if self.consistent(x) {
                self.extend(x + 1, visit);
            }
        }
    }
}

/// Labeled tables found below one choice of row 0, grouped by class.
fn explore_branch(n: usize, first_row: &[usize]) -> BTreeMap<Quandle, usize> {
    let mut builder = Builder::new(n);
    builder.place(0, first_row);
    // every relabeling of every class met so far, pointing at its class
    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<(Quandle, usize)> = Vec::new();
    if builder.consistent(0) {
        builder.extend(1, &mut |table| {
            let idx = match class_of.get(table) {
                Some(&idx) => idx,
                None => {
                    let q = Quandle::from_flat_unchecked(n, table.to_vec());
                    let relabelings: Vec<Quandle> =
                        (0..n).permutations(n).map(|r| q.relabel(&r)).collect();
                    let canonical = relabelings.iter().min().expect("nonempty").clone();
                    let idx = classes.len();
                    for r in relabelings {
                        class_of.insert(r.flat().to_vec(), idx);
                    }
                    classes.push((canonical, 0));
                    idx
                }
            };
            classes[idx].1 += 1;
        });
    }
    classes.into_iter().collect()
}

/// Number of labeled quandle tables of order `n`, and their classes, from
/// the pruned search.
fn search(n: usize, exec: Execution) -> BTreeMap<Quandle, usize> {
    let first_rows = rows_fixing(n, 0);
    let branches = exec.map(first_rows, |row| explore_branch(n, &row));
    let mut merged = BTreeMap::new();
    for branch in branches {
        for (q, count) in branch {
            *merged.entry(q).or_insert(0) += count;
        }
    }
    merged
}

/// Number of labeled tables satisfying S1–S3 on `n` points.
pub fn labeled_count(n: usize) -> Result<usize, CensusError> {
    check_order(n, 1)?;
    Ok(search(n, Execution::default()).values().sum())
}

pub fn enumerate(n: usize, connected_only: bool) -> Result<CensusResult, CensusError> {
    enumerate_with(n, connected_only, Execution::default())
}

pub fn enumerate_with(
    n: usize,
    connected_only: bool,
    exec: Execution,
) -> Result<CensusResult, CensusError> {
    check_order(n, 1)?;
    let found: Vec<(Quandle, usize)> = search(n, exec).into_iter().collect();
    let analyzed = exec.map(found, |(q, labeled)| {
        analyze(&q).map(|analysis| CensusClass {
            quandle: q,
            labeled,
            analysis,
        })
    });
    let mut classes = Vec::new();
    for class in analyzed {
        let class = class?;
        if !connected_only || class.analysis.connected {
            classes.push(class);
        }
    }
    let count = |f: fn(&AnalysisReport) -> bool| classes.iter().filter(|c| f(&c.analysis)).count();
    let result = CensusResult {
        n,
        connected_only,
        total_labeled: classes.iter().map(|c| c.labeled).sum(),
        connected_count: count(|a| a.connected),
        tph_count: count(|a| a.two_point_homogeneous),
        cyclic_count: count(|a| a.cyclic_type),
        classes,
    };
    if n >= 3 {
        assert!(result.cyclic_count <= result.tph_count);
        assert!(result.tph_count <= result.connected_count);
        assert!(result.connected_count <= result.classes.len());
    }
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub quandle: Quandle,
    pub analysis: AnalysisReport,
}

/// Outcome of testing "two-point homogeneous implies cyclic type" on every
/// class of one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub classes_checked: usize,
    pub two_point_homogeneous: Vec<Quandle>,
    pub counterexamples: Vec<Counterexample>,
    /// For every two-point homogeneous class and every `x`, the orbits of
    /// `<s_x>` on the other points all have one size.
    pub equal_orbit_sizes: bool,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "order {}: {} classes checked, {} two-point homogeneous, equal <s_x>-orbit sizes: {}\n",
            self.n,
            self.classes_checked,
            self.two_point_homogeneous.len(),
            self.equal_orbit_sizes
        );
        if self.holds() {
            out.push_str("no counterexample\n");
        } else {
            for c in &self.counterexamples {
                out.push_str("counterexample:\n");
                out.push_str(&crate::qcore::serialize(&c.quandle));
                out.push_str(&c.analysis.to_string());
            }
        }
        out
    }
}

fn symmetry_orbits_equal(q: &Quandle) -> bool {
    (0..q.len()).all(|x| {
        let s = q.symmetry(x).expect("point in range");
        let group = PermGroup::cyclic(&s);
        let mut sizes = group
            .orbits()
            .into_iter()
            .filter(|o| o != &[x])
            .map(|o| o.len());
        match sizes.next() {
            Some(first) => sizes.all(|l| l == first),
            None => true,
        }
    })
}

pub fn check_conjecture(n: usize) -> Result<ConjectureReport, CensusError> {
    check_conjecture_with(n, Execution::default())
}

pub fn check_conjecture_with(n: usize, exec: Execution) -> Result<ConjectureReport, CensusError> {
    check_order(n, 3)?;
    let census = enumerate_with(n, false, exec)?;
    let mut tph = Vec::new();
    let mut counterexamples = Vec::new();
    let mut equal_orbit_sizes = true;
    for class in &census.classes {
        if !class.analysis.two_point_homogeneous {
            continue;
        }
        tph.push(class.quandle.clone());
        equal_orbit_sizes &= symmetry_orbits_equal(&class.quandle);
        if !class.analysis.cyclic_type {
            counterexamples.push(Counterexample {
                quandle: class.quandle.clone(),
                analysis: class.analysis.clone(),
            });
        }
    }
    Ok(ConjectureReport {
        n,
        classes_checked: census.classes.len(),
        two_point_homogeneous: tph,
        counterexamples,
        equal_orbit_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::linear_alexander;
    use crate::analysis::is_isomorphic;
    use crate::qcore::{dihedral, tetrahedron, trivial, verify};

    #[test]
    fn canonical_form_examples() {
        for n in 1..=5 {
            assert_eq!(canonical_form(&trivial(n)), trivial(n));
        }
        assert_eq!(
            canonical_form(&dihedral(5)),
            canonical_form(&linear_alexander(5, 4).unwrap())
        );
        assert_ne!(
            canonical_form(&linear_alexander(5, 2).unwrap()),
            canonical_form(&linear_alexander(5, 3).unwrap())
        );
    }

    #[test]
    fn small_orders() {
        let c1 = enumerate(1, false).unwrap();
        assert_eq!(c1.classes.len(), 1);
        let c2 = enumerate(2, false).unwrap();
        assert_eq!(c2.iso_classes(), vec![trivial(2)]);
        assert_eq!(c2.total_labeled, 1);
        let c3 = enumerate(3, false).unwrap();
        assert_eq!(c3.classes.len(), 3);
        assert_eq!(c3.connected_count, 1);
        let connected = enumerate(3, true).unwrap();
        assert_eq!(connected.classes.len(), 1);
        assert!(is_isomorphic(&connected.classes[0].quandle, &dihedral(3)).is_some());
    }

    #[test]
    fn order_four() {
        let c4 = enumerate(4, false).unwrap();
        assert_eq!(c4.classes.len(), 7);
        let tet = canonical_form(&tetrahedron());
        assert!(c4.iso_classes().contains(&tet));
        for class in &c4.classes {
            assert!(verify(&class.quandle.rows()).unwrap().is_quandle());
            assert_eq!(canonical_form(&class.quandle), class.quandle);
        }
    }

    #[test]
    fn order_limits() {
        assert!(enumerate(0, false).is_err());
        assert!(enumerate(7, false).is_err());
        assert!(check_conjecture(2).is_err());
        assert!(check_conjecture(7).is_err());
    }

    #[test]
    fn modes_agree() {
        let seq = enumerate_with(4, false, Execution::Sequential).unwrap();
        let par = enumerate_with(4, false, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn conjecture_at_four() {
        let report = check_conjecture(4).unwrap();
        assert!(report.holds());
        assert!(report.equal_orbit_sizes);
        assert_eq!(
            report.two_point_homogeneous,
            vec![canonical_form(&tetrahedron())]
        );
        assert!(report.render_text().contains("no counterexample"));
    }

    #[test]
    fn render_is_parseable() {
        let c = enumerate(3, false).unwrap();
        let text = c.render_text();
        assert_eq!(crate::qcore::parse_many(&text).unwrap(), c.iso_classes());
    }
}
