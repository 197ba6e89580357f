//! The finite quandle type and its axioms.
//!
//! A quandle on `{0, …, n-1}` is stored as its table of symmetries:
//! `table[x][y] = s_x(y)`. Rows are indexed by the acting point. In the
//! binary-operator notation this is `y ∗ x = s_x(y)`, so the operator's
//! arguments are swapped relative to the row index.
//!
//! The symmetry form of the axioms is what [`verify`] checks:
//!
//! * S1: `s_x(x) = x`
//! * S2: every `s_x` is a bijection
//! * S3: `s_x ∘ s_y = s_{s_x(y)} ∘ s_x`
//!
//! They are equivalent to the operator form Q1 (`x ∗ x = x`), Q2 (unique
//! right division) and Q3 (right self-distributivity), and an
//! [`AxiomReport`] can describe a failure in either vocabulary.

mod format;

pub use format::{
    parse, parse_many, parse_raw, serialize, serialize_json, serialize_many, ParseError,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permgroup::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is out of range 0..{n}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("not a quandle: {0}")]
    Axioms(Box<AxiomReport>),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// The first counterexample found for a failed axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `s_x(x) = image ≠ x`.
    FixedPoint { x: usize, image: usize },
    /// `s_x(y1) = s_x(y2) = image` with `y1 ≠ y2`.
    NotBijective {
        x: usize,
        y1: usize,
        y2: usize,
        image: usize,
    },
    /// `s_x(s_y(z)) = lhs` but `s_{s_x(y)}(s_x(z)) = rhs`.
    SelfDistributive {
        x: usize,
        y: usize,
        z: usize,
        lhs: usize,
        rhs: usize,
    },
}

impl Violation {
    /// Re-evaluates the witness against `rows`; true if it still fails.
    pub fn replays(&self, rows: &[Vec<usize>]) -> bool {
        match *self {
            Violation::FixedPoint { x, .. } => rows[x][x] != x,
            Violation::NotBijective { x, y1, y2, .. } => y1 != y2 && rows[x][y1] == rows[x][y2],
            Violation::SelfDistributive { x, y, z, .. } => {
                rows[x][rows[y][z]] != rows[rows[x][y]][rows[x][z]]
            }
        }
    }

    /// The same counterexample phrased with `y ∗ x = s_x(y)`.
    pub fn operator_form(&self) -> String {
        match *self {
            Violation::FixedPoint { x, image } => {
                format!("Q1 fails: {x} ∗ {x} = {image}")
            }
            Violation::NotBijective { x, y1, y2, image } => format!(
                "Q2 fails: {y1} ∗ {x} = {y2} ∗ {x} = {image}, so solutions of z ∗ {x} = w are not unique"
            ),
            Violation::SelfDistributive { x, y, z, lhs, rhs } => format!(
                "Q3 fails: ({z} ∗ {y}) ∗ {x} = {lhs} but ({z} ∗ {x}) ∗ ({y} ∗ {x}) = {rhs}"
            ),
        }
    }

    /// The counterexample phrased with the symmetries `s_x`.
    pub fn symmetry_form(&self) -> String {
        match *self {
            Violation::FixedPoint { x, image } => format!("S1 fails: s_{x}({x}) = {image}"),
            Violation::NotBijective { x, y1, y2, image } => {
                format!("S2 fails: s_{x}({y1}) = s_{x}({y2}) = {image}")
            }
            Violation::SelfDistributive { x, y, z, lhs, rhs } => format!(
                "S3 fails: s_{x}(s_{y}({z})) = {lhs} but s_(s_{x}({y}))(s_{x}({z})) = {rhs}"
            ),
        }
    }
}

/// Outcome of checking S1–S3 on a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub n: usize,
    pub s1: Option<Violation>,
    pub s2: Option<Violation>,
    pub s3: Option<Violation>,
}

impl AxiomReport {
    pub fn is_quandle(&self) -> bool {
        self.s1.is_none() && self.s2.is_none() && self.s3.is_none()
    }

    pub fn q1_ok(&self) -> bool {
        self.s1.is_none()
    }

    pub fn q2_ok(&self) -> bool {
        self.s2.is_none()
    }

    pub fn q3_ok(&self) -> bool {
        self.s3.is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        [&self.s1, &self.s2, &self.s3].into_iter().flatten()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "ok" } else { "FAILED" };
        write!(
            f,
            "n = {}; S1/Q1 {}, S2/Q2 {}, S3/Q3 {}",
            self.n,
            status(self.q1_ok()),
            status(self.q2_ok()),
            status(self.q3_ok())
        )?;
        for v in self.violations() {
            write!(f, "; {} [{}]", v.symmetry_form(), v.operator_form())?;
        }
        Ok(())
    }
}

fn check_shape(rows: &[Vec<usize>]) -> Result<usize, FormatError> {
    let n = rows.len();
    if n == 0 {
        return Err(FormatError::Empty);
    }
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(FormatError::NotSquare {
                row: x,
                len: row.len(),
                n,
            });
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(FormatError::OutOfRange {
                row: x,
                col: y,
                value: v,
                n,
            });
        }
    }
    Ok(n)
}

/// Checks S1, S2 and S3 exhaustively on a square table with entries in
/// `0..n`. Shape problems are reported as errors before any axiom is checked.
pub fn verify(rows: &[Vec<usize>]) -> Result<AxiomReport, FormatError> {
    let n = check_shape(rows)?;

    let s1 = (0..n)
        .find(|&x| rows[x][x] != x)
        .map(|x| Violation::FixedPoint {
            x,
            image: rows[x][x],
        });

    let mut s2 = None;
    'rows: for (x, row) in rows.iter().enumerate() {
        let mut preimage = vec![usize::MAX; n];
        for (y, &v) in row.iter().enumerate() {
            if preimage[v] != usize::MAX {
                s2 = Some(Violation::NotBijective {
                    x,
                    y1: preimage[v],
                    y2: y,
                    image: v,
                });
                break 'rows;
            }
            preimage[v] = y;
        }
    }

    let mut s3 = None;
    'outer: for x in 0..n {
        let sx = &rows[x];
        for y in 0..n {
            let sy = &rows[y];
            let conj = &rows[sx[y]];
            for z in 0..n {
                let lhs = sx[sy[z]];
                let rhs = conj[sx[z]];
                if lhs != rhs {
                    s3 = Some(Violation::SelfDistributive { x, y, z, lhs, rhs });
                    break 'outer;
                }
            }
        }
    }

    Ok(AxiomReport { n, s1, s2, s3 })
}

/// A finite quandle on `{0, …, n-1}`, stored row-major as `s_x(y)`.
///
/// Values of this type always satisfy S1–S3. Ordering compares `n` first and
/// then the table lexicographically in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
}

impl Quandle {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let report = verify(&rows)?;
        if !report.is_quandle() {
            return Err(QuandleError::Axioms(Box::new(report)));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let n = rows.len();
        Self {
            n,
            table: rows.into_iter().flatten().collect(),
        }
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        Self { n, table }
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self { n, table }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `s_x(y)`, which is `y ∗ x` in operator notation.
    #[inline]
    pub fn act(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    #[inline]
    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat(&self) -> &[usize] {
        &self.table
    }

    /// The symmetry `s_x` as a permutation.
    pub fn symmetry(&self, x: usize) -> Result<Permutation, QuandleError> {
        if x >= self.n {
            return Err(PermError::PointOutOfRange {
                point: x,
                degree: self.n,
            }
            .into());
        }
        Ok(Permutation::from_images_unchecked(self.row(x).to_vec()))
    }

    /// All symmetries `s_0, …, s_{n-1}`.
    pub fn symmetries(&self) -> Vec<Permutation> {
        (0..self.n)
            .map(|x| Permutation::from_images_unchecked(self.row(x).to_vec()))
            .collect()
    }

    /// The dual quandle, whose symmetries are the inverses `s_x^{-1}`.
    pub fn dual(&self) -> Quandle {
        let n = self.n;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for (y, &v) in self.row(x).iter().enumerate() {
                table[x * n + v] = y;
            }
        }
        Quandle { n, table }
    }

    /// The table obtained by renaming every point `i` to `relabel[i]`.
    pub fn relabel(&self, relabel: &[usize]) -> Quandle {
        let n = self.n;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[relabel[x] * n + relabel[y]] = relabel[self.act(x, y)];
            }
        }
        Quandle { n, table }
    }

    /// Whether `phi` (given as images) is a homomorphism onto `other`:
    /// `phi(s_x(y)) = s'_{phi(x)}(phi(y))` for all `x, y`.
    pub fn is_homomorphism_to(&self, other: &Quandle, phi: &[usize]) -> bool {
        phi.len() == self.n
            && phi.iter().all(|&v| v < other.n)
            && (0..self.n)
                .all(|x| (0..self.n).all(|y| phi[self.act(x, y)] == other.act(phi[x], phi[y])))
    }
}

/// Every symmetry is the identity.
pub fn trivial(n: usize) -> Quandle {
    assert!(n >= 1, "a quandle needs at least one point");
    Quandle::from_fn(n, |_, y| y)
}

/// `s_i(j) = 2i − j (mod n)`.
pub fn dihedral(n: usize) -> Quandle {
    assert!(n >= 1, "a quandle needs at least one point");
    Quandle::from_fn(n, |i, j| (2 * i + n - j) % n)
}

/// The four-point quandle of the vertices of a regular tetrahedron, with
/// points relabeled `1..=4 → 0..=3`: `s_0 = (1 2 3)`, `s_1 = (0 3 2)`,
/// `s_2 = (0 1 3)`, `s_3 = (0 2 1)`.
pub fn tetrahedron() -> Quandle {
    let cycles: [&[usize]; 4] = [&[1, 2, 3], &[0, 3, 2], &[0, 1, 3], &[0, 2, 1]];
    let rows = cycles
        .iter()
        .map(|c| {
            Permutation::from_cycles(4, &[c])
                .expect("valid cycle")
                .images()
                .to_vec()
        })
        .collect();
    Quandle::from_rows_unchecked(rows)
}

impl Serialize for Quandle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            table: Vec<&'a [usize]>,
        }
        Repr {
            n: self.n,
            table: self.table.chunks(self.n).collect(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_three_passes() {
        let report = verify(&dihedral(3).rows()).unwrap();
        assert!(report.is_quandle());
        assert_eq!(dihedral(3).symmetry(0).unwrap().to_string(), "(1 2)");
    }

    #[test]
    fn fixed_point_violation() {
        let rows = vec![vec![1, 0, 2], vec![0, 1, 2], vec![0, 1, 2]];
        let report = verify(&rows).unwrap();
        assert!(!report.q1_ok());
        assert_eq!(report.s1, Some(Violation::FixedPoint { x: 0, image: 1 }));
        assert!(report.s1.as_ref().unwrap().replays(&rows));
    }

    #[test]
    fn bijection_violation() {
        let rows = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 1, 2]];
        let report = verify(&rows).unwrap();
        assert!(report.q1_ok());
        assert!(!report.q2_ok());
        let v = report.s2.clone().unwrap();
        assert!(matches!(v, Violation::NotBijective { x: 0, .. }));
        assert!(v.replays(&rows));
        assert!(report.to_string().contains("S2/Q2 FAILED"));
    }

    #[test]
    fn self_distributivity_violation_replays() {
        // rows are bijections fixing their index but S3 fails
        let rows = vec![vec![0, 2, 1], vec![2, 1, 0], vec![0, 1, 2]];
        let report = verify(&rows).unwrap();
        assert!(report.q1_ok() && report.q2_ok());
        let v = report.s3.clone().unwrap();
        assert!(v.replays(&rows));
        assert!(v.operator_form().starts_with("Q3"));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(verify(&[]), Err(FormatError::Empty));
        assert!(matches!(
            verify(&[vec![0, 1], vec![0]]),
            Err(FormatError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            verify(&[vec![0, 2], vec![0, 1]]),
            Err(FormatError::OutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn constructors() {
        assert_eq!(trivial(1).rows(), vec![vec![0]]);
        assert!(trivial(3).symmetries().iter().all(Permutation::is_identity));
        assert!(verify(&trivial(5).rows()).unwrap().is_quandle());
        assert_eq!(dihedral(1), trivial(1));
        assert_eq!(dihedral(5).act(2, 1), 3);
        let t = tetrahedron();
        assert_eq!(t.symmetry(0).unwrap().to_string(), "(1 2 3)");
        assert_eq!(t.act(0, 0), 0);
        assert!(verify(&t.rows()).unwrap().is_quandle());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(trivial(4).dual(), trivial(4));
        for n in 1..12 {
            assert_eq!(dihedral(n).dual(), dihedral(n));
        }
        let t = tetrahedron();
        assert_eq!(
            t.dual().symmetry(0).unwrap(),
            t.symmetry(0).unwrap().inverse()
        );
        assert_eq!(t.dual().dual(), t);
    }

    #[test]
    fn symmetry_out_of_range() {
        assert!(trivial(4).symmetry(4).is_err());
        assert!(trivial(4).symmetry(2).unwrap().is_identity());
    }

    #[test]
    fn symmetries_are_automorphisms() {
        for q in [tetrahedron(), dihedral(6), dihedral(7)] {
            for x in 0..q.len() {
                let s = q.symmetry(x).unwrap();
                assert!(q.is_homomorphism_to(&q, s.images()));
            }
        }
    }

    #[test]
    fn dihedral_symmetries_are_involutions() {
        for n in 1..=20 {
            for s in dihedral(n).symmetries() {
                assert!(s.cycle_structure().iter().all(|&l| l <= 2));
            }
        }
    }

    #[test]
    fn from_rows_rejects_with_report() {
        let err = Quandle::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        match err {
            QuandleError::Axioms(r) => assert!(!r.q1_ok()),
            other => panic!("unexpected {other:?}"),
        }
    }
}
