//! Structural predicates on finite quandles: the inner automorphism group,
//! connectivity, two-point homogeneity, cyclic type and isomorphism.
//!
//! Two-point homogeneity and cyclic type are only characterized for `n ≥ 3`.
//! Below that, two-point homogeneity is evaluated straight from its
//! definition (vacuously true for `n = 1`, false for the trivial quandle of
//! order 2) and cyclic type is reported as undefined.

mod iso;

pub use iso::{automorphisms, is_isomorphic};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::permgroup::{orbits_under, PermError, PermGroup, Permutation, DEFAULT_GROUP_CAP};
use crate::qcore::Quandle;

/// Inn(X, s): the closure of all symmetries.
pub fn inner_group(q: &Quandle) -> Result<PermGroup, PermError> {
    inner_group_with_cap(q, DEFAULT_GROUP_CAP)
}

pub fn inner_group_with_cap(q: &Quandle, cap: usize) -> Result<PermGroup, PermError> {
    PermGroup::closure(q.len(), q.symmetries(), cap)
}

/// Inn-orbits, computed from the generators alone.
pub fn inner_orbits(q: &Quandle) -> Vec<Vec<usize>> {
    orbits_under(q.len(), &q.symmetries())
}

pub fn is_connected(q: &Quandle) -> bool {
    inner_orbits(q).len() == 1
}

/// Two-point homogeneity with respect to Inn(X, s).
///
/// For `n ≥ 3` this is connectivity plus transitivity of the isotropy group
/// of `0` on the remaining points.
pub fn is_two_point_homogeneous(q: &Quandle) -> Result<bool, PermError> {
    if q.len() < 3 {
        return is_two_point_homogeneous_raw(q);
    }
    is_two_point_homogeneous_at(q, 0)
}

/// The isotropy criterion evaluated at an arbitrary base point (`n ≥ 3`).
pub fn is_two_point_homogeneous_at(q: &Quandle, base: usize) -> Result<bool, PermError> {
    if !is_connected(q) {
        return Ok(false);
    }
    let group = inner_group(q)?;
    isotropy_transitive(&group, base)
}

fn isotropy_transitive(group: &PermGroup, base: usize) -> Result<bool, PermError> {
    let rest: BTreeSet<usize> = (0..group.degree()).filter(|&y| y != base).collect();
    if rest.is_empty() {
        return Ok(true);
    }
    group.stabilizer(base)?.is_transitive(&rest)
}

/// Checks the definition directly: for every ordered pair of distinct points
/// the Inn-images cover all ordered pairs of distinct points.
pub fn is_two_point_homogeneous_raw(q: &Quandle) -> Result<bool, PermError> {
    let group = inner_group(q)?;
    Ok(pairs_transitive(q.len(), group.elements().iter()))
}

/// The variant with respect to the full automorphism group.
pub fn is_two_point_homogeneous_aut(q: &Quandle) -> bool {
    let aut = automorphisms(q);
    pairs_transitive(q.len(), aut.iter())
}

fn pairs_transitive<'a>(n: usize, elements: impl Iterator<Item = &'a Permutation> + Clone) -> bool {
    let needed = n * n.saturating_sub(1);
    for x1 in 0..n {
        for x2 in (0..n).filter(|&x2| x2 != x1) {
            let images: HashSet<(usize, usize)> = elements
                .clone()
                .map(|f| (f.apply(x1), f.apply(x2)))
                .collect();
            if images.len() != needed {
                return false;
            }
        }
    }
    true
}

/// Cyclic type, with the `n < 3` case kept distinct from a negative answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicType {
    Cyclic,
    NotCyclic,
    /// Not defined for fewer than three points.
    Undefined,
}

impl CyclicType {
    pub fn holds(self) -> bool {
        self == CyclicType::Cyclic
    }
}

pub fn cyclic_type(q: &Quandle) -> CyclicType {
    let n = q.len();
    if n < 3 {
        return CyclicType::Undefined;
    }
    let expected = vec![1, n - 1];
    let every_point = q
        .symmetries()
        .iter()
        .all(|s| s.cycle_structure() == expected);
    debug_assert_eq!(
        every_point,
        is_connected(q) && q.symmetry(0).expect("n ≥ 3").cycle_structure() == expected,
        "cyclic type disagrees with the connected-plus-one-point criterion"
    );
    if every_point {
        CyclicType::Cyclic
    } else {
        CyclicType::NotCyclic
    }
}

/// True iff the quandle has at least three points and is of cyclic type.
pub fn is_cyclic_type(q: &Quandle) -> bool {
    cyclic_type(q).holds()
}

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    /// Also evaluate two-point homogeneity with respect to Aut(X, s).
    pub aut_variant: bool,
}

/// Everything [`analyze`] computes about one quandle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub axioms_ok: bool,
    pub connected: bool,
    pub two_point_homogeneous: bool,
    pub cyclic_type: bool,
    pub cyclic_type_defined: bool,
    pub inner_order: usize,
    pub orbits: Vec<Vec<usize>>,
    pub cycle_structures: Vec<Vec<usize>>,
    pub self_dual: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_point_homogeneous_aut: Option<bool>,
}

impl AnalysisReport {
    fn check_invariants(&self) {
        assert!(
            !self.cyclic_type || self.two_point_homogeneous,
            "cyclic type without two-point homogeneity"
        );
        assert!(
            self.n < 3 || !self.two_point_homogeneous || self.connected,
            "two-point homogeneous but not connected"
        );
        assert!(
            !self.connected || self.cycle_structures.windows(2).all(|w| w[0] == w[1]),
            "connected but symmetries are not conjugate"
        );
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "axioms_ok: {}", self.axioms_ok)?;
        writeln!(f, "connected: {}", self.connected)?;
        writeln!(f, "two_point_homogeneous: {}", self.two_point_homogeneous)?;
        if let Some(aut) = self.two_point_homogeneous_aut {
            writeln!(f, "two_point_homogeneous_aut: {aut}")?;
        }
        if self.cyclic_type_defined {
            writeln!(f, "cyclic_type: {}", self.cyclic_type)?;
        } else {
            writeln!(f, "cyclic_type: {} (not defined (n < 3))", self.cyclic_type)?;
        }
        writeln!(f, "inner_order: {}", self.inner_order)?;
        let orbits: Vec<String> = self
            .orbits
            .iter()
            .map(|o| format!("{{{}}}", join(o, ",")))
            .collect();
        writeln!(f, "orbits: {}", orbits.join(" "))?;
        writeln!(f, "cycle_structures:")?;
        for (x, cs) in self.cycle_structures.iter().enumerate() {
            writeln!(f, "  s_{x}: [{}]", join(cs, ","))?;
        }
        writeln!(f, "self_dual: {}", self.self_dual)
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

pub fn analyze(q: &Quandle) -> Result<AnalysisReport, PermError> {
    analyze_with(q, &AnalysisOptions::default())
}

pub fn analyze_with(q: &Quandle, options: &AnalysisOptions) -> Result<AnalysisReport, PermError> {
    let group = inner_group(q)?;
    let orbits = group.orbits();
    let connected = orbits.len() == 1;
    let two_point_homogeneous = if q.len() < 3 {
        pairs_transitive(q.len(), group.elements().iter())
    } else {
        connected && isotropy_transitive(&group, 0)?
    };
    let cyclic = cyclic_type(q);
    let report = AnalysisReport {
        n: q.len(),
        axioms_ok: true,
        connected,
        two_point_homogeneous,
        cyclic_type: cyclic.holds(),
        cyclic_type_defined: cyclic != CyclicType::Undefined,
        inner_order: group.order(),
        orbits,
        cycle_structures: q
            .symmetries()
            .iter()
            .map(Permutation::cycle_structure)
            .collect(),
        self_dual: is_isomorphic(q, &q.dual()).is_some(),
        two_point_homogeneous_aut: options.aut_variant.then(|| is_two_point_homogeneous_aut(q)),
    };
    report.check_invariants();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::linear_alexander;
    use crate::qcore::{dihedral, tetrahedron, trivial};

    #[test]
    fn inner_group_orders() {
        assert_eq!(inner_group(&trivial(3)).unwrap().order(), 1);
        assert_eq!(inner_group(&dihedral(3)).unwrap().order(), 6);
        assert_eq!(
            inner_group(&linear_alexander(5, 2).unwrap())
                .unwrap()
                .order(),
            20
        );
        assert_eq!(inner_group(&tetrahedron()).unwrap().order(), 12);
    }

    #[test]
    fn connectivity() {
        assert!(!is_connected(&trivial(2)));
        assert!(!is_connected(&dihedral(4)));
        assert!(is_connected(&dihedral(5)));
        assert!(is_connected(&tetrahedron()));
        assert!(is_connected(&trivial(1)));
    }

    #[test]
    fn two_point_homogeneity() {
        assert!(is_two_point_homogeneous(&dihedral(3)).unwrap());
        assert!(!is_two_point_homogeneous(&dihedral(6)).unwrap());
        assert!(!is_two_point_homogeneous(&linear_alexander(7, 2).unwrap()).unwrap());
        assert!(is_two_point_homogeneous(&linear_alexander(7, 3).unwrap()).unwrap());
        assert!(is_two_point_homogeneous(&trivial(1)).unwrap());
        assert!(!is_two_point_homogeneous(&trivial(2)).unwrap());
    }

    #[test]
    fn aut_variant_differs_on_trivial_quandles() {
        assert!(is_two_point_homogeneous_aut(&trivial(4)));
        assert!(!is_two_point_homogeneous(&trivial(4)).unwrap());
        assert!(!is_two_point_homogeneous_aut(&dihedral(6)));
    }

    #[test]
    fn cyclic_type_examples() {
        assert!(is_cyclic_type(&tetrahedron()));
        assert!(is_cyclic_type(&dihedral(3)));
        assert!(!is_cyclic_type(&dihedral(5)));
        assert_eq!(cyclic_type(&trivial(1)), CyclicType::Undefined);
        assert_eq!(cyclic_type(&trivial(2)), CyclicType::Undefined);
        assert_eq!(cyclic_type(&trivial(3)), CyclicType::NotCyclic);
    }

    #[test]
    fn analyze_examples() {
        let r = analyze(&tetrahedron()).unwrap();
        assert!(r.connected && r.two_point_homogeneous && r.cyclic_type);
        assert!(r.self_dual);

        let r = analyze(&trivial(4)).unwrap();
        assert!(!r.connected && !r.two_point_homogeneous);
        assert_eq!(r.orbits.len(), 4);

        let r = analyze(&dihedral(9)).unwrap();
        assert!(r.connected && !r.two_point_homogeneous);

        let r = analyze(&trivial(1)).unwrap();
        assert!(!r.cyclic_type_defined);
        assert!(r.to_string().contains("not defined (n < 3)"));
    }

    #[test]
    fn report_json_field_names() {
        let json = serde_json::to_value(analyze(&dihedral(3)).unwrap()).unwrap();
        for key in [
            "n",
            "connected",
            "two_point_homogeneous",
            "cyclic_type",
            "inner_order",
            "orbits",
            "cycle_structures",
            "self_dual",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert!(json.get("two_point_homogeneous_aut").is_none());
    }

    #[test]
    fn self_duality() {
        assert!(!analyze(&linear_alexander(5, 2).unwrap()).unwrap().self_dual);
        assert!(analyze(&linear_alexander(5, 4).unwrap()).unwrap().self_dual);
    }
}
