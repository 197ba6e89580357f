//! Linear Alexander quandles `Λ_n/(t−a)`: the residues mod `n` with
//! `s_x(y) = a·y + (1−a)·x`.
//!
//! For a prime `p` and `2 ≤ a ≤ p−1` the inner automorphism group has an
//! explicit description, every power `s_x^k` together with every translation
//! `y ↦ y + m`, and `Λ_p/(t−a)` is two-point homogeneous exactly when `a`
//! is a primitive root modulo `p`. This module builds those groups and the
//! resulting classification table.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::permgroup::Permutation;
use crate::qcore::Quandle;

/// Largest modulus accepted by the prime-only operations.
pub const PRIME_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("gcd({a}, {n}) ≠ 1, so s_x is not a bijection")]
    NotCoprime { a: u64, n: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{p} exceeds the supported bound {bound}")]
    TooLarge { p: u64, bound: u64 },
    #[error("multiplier must satisfy 2 ≤ a ≤ {max}, got {a}")]
    MultiplierOutOfRange { a: u64, max: u64 },
    #[error("{name} = {value} must be below {p}")]
    ResidueOutOfRange {
        name: &'static str,
        value: u64,
        p: u64,
    },
}

/// Validated parameters of `Λ_n/(t−a)`; `a` is stored reduced mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearAlexanderParams {
    n: u64,
    a: u64,
}

impl LinearAlexanderParams {
    pub fn new(n: u64, a: u64) -> Result<Self, AlexanderError> {
        if n == 0 {
            return Err(AlexanderError::ZeroModulus);
        }
        let a = a % n;
        if gcd(a, n) != 1 {
            return Err(AlexanderError::NotCoprime { a, n });
        }
        Ok(Self { n, a })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn multiplier(&self) -> u64 {
        self.a
    }

    pub fn quandle(&self) -> Quandle {
        let n = self.n;
        let a = self.a;
        let b = (1 + n - a) % n;
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| ((a * y + b * x) % n) as usize))
            .collect();
        Quandle::from_flat_unchecked(n as usize, table)
    }
}

/// The table of `Λ_n/(t−a)`, `s_x(y) = (a·y + (1−a)·x) mod n`.
pub fn linear_alexander(n: u64, a: u64) -> Result<Quandle, AlexanderError> {
    Ok(LinearAlexanderParams::new(n, a)?.quandle())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn mod_pow(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result: u128 = 1;
    let mut b = base as u128 % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result as u64
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn require_odd_prime(p: u64) -> Result<(), AlexanderError> {
    if p > PRIME_BOUND {
        return Err(AlexanderError::TooLarge {
            p,
            bound: PRIME_BOUND,
        });
    }
    if !is_prime(p) {
        return Err(AlexanderError::NotPrime(p));
    }
    if p < 3 {
        return Err(AlexanderError::NotOddPrime(p));
    }
    Ok(())
}

/// Least `k ≥ 1` with `a^k ≡ 1 (mod n)`.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64, AlexanderError> {
    let params = LinearAlexanderParams::new(n, a)?;
    if n == 1 {
        return Ok(1);
    }
    let a = params.multiplier();
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % n;
        k += 1;
    }
    Ok(k)
}

/// All `a` in `2..p` generating the multiplicative group mod `p`, found by
/// checking `a^((p−1)/q) ≢ 1` for each prime `q | p−1`.
pub fn primitive_roots(p: u64) -> Result<Vec<u64>, AlexanderError> {
    require_odd_prime(p)?;
    let factors = prime_factors(p - 1);
    Ok((2..p)
        .filter(|&a| factors.iter().all(|&q| mod_pow(a, (p - 1) / q, p) != 1))
        .collect())
}

fn check_residue(name: &'static str, value: u64, p: u64) -> Result<(), AlexanderError> {
    if value >= p {
        Err(AlexanderError::ResidueOutOfRange { name, value, p })
    } else {
        Ok(())
    }
}

/// `s_x^k` in closed form: `y ↦ a^k·y + (1−a^k)·x (mod p)`.
pub fn symmetry_power(p: u64, a: u64, x: u64, k: u64) -> Result<Permutation, AlexanderError> {
    let params = LinearAlexanderParams::new(p, a)?;
    check_residue("x", x, p)?;
    let ak = mod_pow(params.multiplier(), k, p);
    let shift = (1 + p - ak) % p * x % p;
    Ok(affine(p, ak, shift))
}

/// `y ↦ y + m (mod p)`.
pub fn translation(p: u64, m: u64) -> Result<Permutation, AlexanderError> {
    if p == 0 {
        return Err(AlexanderError::ZeroModulus);
    }
    check_residue("m", m, p)?;
    Ok(affine(p, 1, m))
}

fn affine(p: u64, mul: u64, add: u64) -> Permutation {
    Permutation::from_images_unchecked((0..p).map(|y| ((mul * y + add) % p) as usize).collect())
}

/// The inner automorphism group of `Λ_p/(t−a)` from its closed form: every
/// `s_x^k` for `x < p`, `0 ≤ k < ord_p(a)`, and every translation.
pub fn inner_group_closed_form(p: u64, a: u64) -> Result<BTreeSet<Permutation>, AlexanderError> {
    require_odd_prime(p)?;
    if !(2..p).contains(&a) {
        return Err(AlexanderError::MultiplierOutOfRange { a, max: p - 1 });
    }
    let order = multiplicative_order(a, p)?;
    let mut elements = BTreeSet::new();
    for x in 0..p {
        for k in 0..order {
            elements.insert(symmetry_power(p, a, x, k)?);
        }
    }
    for m in 0..p {
        elements.insert(translation(p, m)?);
    }
    Ok(elements)
}

/// `a ↔ b` with `ab ≡ 1 (mod p)`; `a == b` marks a self-dual entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DualPair {
    pub a: u64,
    pub b: u64,
    pub self_dual: bool,
}

impl DualPair {
    pub fn new(a: u64, b: u64) -> Self {
        Self {
            a: a.min(b),
            b: a.max(b),
            self_dual: a == b,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual
    }
}

/// The two-point homogeneous quandles of prime order `p`, up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub p: u64,
    pub count: usize,
    pub roots: Vec<u64>,
    pub dual_pairs: Vec<DualPair>,
}

impl ClassificationRecord {
    /// Pairs as `2↔6, 7↔8`; a self-dual root prints alone.
    pub fn pairs_compact(&self) -> String {
        self.pairs_with("↔")
    }

    /// Pairs as `2 ↔ 6, 7 ↔ 8`.
    pub fn pairs_spaced(&self) -> String {
        self.pairs_with(" ↔ ")
    }

    fn pairs_with(&self, arrow: &str) -> String {
        self.dual_pairs
            .iter()
            .map(|d| {
                if d.is_self_dual() {
                    d.a.to_string()
                } else {
                    format!("{}{arrow}{}", d.a, d.b)
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// One line of the `p | # | a` table layout.
    pub fn strict_row(&self) -> String {
        format!("{} | {} | {}", self.p, self.count, self.pairs_spaced())
    }
}

impl fmt::Display for ClassificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p = {}, count {}: {}",
            self.p,
            self.count,
            self.pairs_compact()
        )
    }
}

pub fn classify_prime(p: u64) -> Result<ClassificationRecord, AlexanderError> {
    let roots = primitive_roots(p)?;
    let mut dual_pairs = Vec::new();
    for &a in &roots {
        let b = mod_inverse(a, p).expect("p is prime");
        if a <= b {
            dual_pairs.push(DualPair::new(a, b));
        }
    }
    Ok(ClassificationRecord {
        p,
        count: roots.len(),
        roots,
        dual_pairs,
    })
}

/// One record per prime `3 ≤ p ≤ p_max`, in increasing order.
pub fn table_rows(p_max: u64) -> Result<Vec<ClassificationRecord>, AlexanderError> {
    table_rows_with(p_max, Execution::default())
}

pub fn table_rows_with(
    p_max: u64,
    exec: Execution,
) -> Result<Vec<ClassificationRecord>, AlexanderError> {
    if p_max > PRIME_BOUND {
        return Err(AlexanderError::TooLarge {
            p: p_max,
            bound: PRIME_BOUND,
        });
    }
    let primes: Vec<u64> = (3..=p_max).filter(|&p| is_prime(p)).collect();
    exec.map(primes, classify_prime).into_iter().collect()
}

pub const TABLE_HEADER: &str = "p | # | a";

/// The whole table in the `p | # | a` layout, one row per prime.
pub fn render_strict(rows: &[ClassificationRecord]) -> String {
    let mut out = format!("{TABLE_HEADER}\n");
    for r in rows {
        out.push_str(&r.strict_row());
        out.push('\n');
    }
    out
}

/// Aligned plain-text table.
pub fn render_table(rows: &[ClassificationRecord]) -> String {
    let mut out = format!("{:>4}  {:>3}  {}\n", "p", "#", "a (a↔b: ab ≡ 1 mod p)");
    for r in rows {
        out.push_str(&format!(
            "{:>4}  {:>3}  {}\n",
            r.p,
            r.count,
            r.pairs_compact()
        ));
    }
    out
}
