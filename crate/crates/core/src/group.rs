//! Finite groups as validated multiplication tables.
//!
//! Every cochain complex in this crate is built on one of these. A group is
//! stored as its full `order × order` multiplication table over element
//! indices, with the identity pinned at index 0. Pinning the identity lets
//! "normalized cochain" mean "vanishes when any argument index is 0", which
//! removes a degree of freedom from all downstream formulas.
//!
//! Presets are generated programmatically with a fixed, documented element
//! ordering so that cochain files are bit-exact across runs and machines:
//!
//! * `zN` (N ≤ 64): elements are residues `0..N`, `a·b = (a+b) mod N`.
//! * `z2xz2`: pairs in lexicographic order `(0,0),(0,1),(1,0),(1,1)`,
//!   componentwise addition.
//! * `s3`, `s4`: permutations of `{0,..,n-1}` listed in lexicographic order
//!   (so the identity permutation is index 0), composed as `(στ)(x) = σ(τ(x))`.
//! * `d8`: `r^x s^y` with index `4y + x`, relations `r⁴ = s² = e`, `sr = r³s`.
//! * `q8`: `1, -1, i, -i, j, -j, k, -k` in that order.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// A finite group presented by its multiplication table.
///
/// Invariants (checked by [`FiniteGroup::from_table`]):
/// * the table is a Latin square,
/// * index 0 is a two-sided identity,
/// * multiplication is associative,
/// * every element has an inverse.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub name: String,
    pub order: usize,
    /// `table[a][b]` is the index of the product `a·b`.
    pub table: Vec<Vec<usize>>,
}

/// Errors from group construction and element queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown group preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Build a group from a raw table, validating every invariant.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let group = FiniteGroup {
            name: name.into(),
            order: table.len(),
            table,
        };
        group.validate()?;
        Ok(group)
    }

    /// Re-check all invariants. Each failure mode is reported distinctly,
    /// with the offending row/column named.
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        if n == 0 {
            return Err(GroupError::InvalidTable("table is empty".into()));
        }
        if self.table.len() != n {
            return Err(GroupError::InvalidTable(format!(
                "expected {n} rows, found {}",
                self.table.len()
            )));
        }
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} contains out-of-range index {bad}"
                )));
            }
        }
        // Latin square: each row and column is a permutation of 0..n.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.fill(false);
            for j in 0..n {
                if seen[self.table[i][j]] {
                    return Err(GroupError::InvalidTable(format!(
                        "row {i} is not a permutation (index {} repeats)",
                        self.table[i][j]
                    )));
                }
                seen[self.table[i][j]] = true;
            }
            seen.fill(false);
            for j in 0..n {
                if seen[self.table[j][i]] {
                    return Err(GroupError::InvalidTable(format!(
                        "column {i} is not a permutation (index {} repeats)",
                        self.table[j][i]
                    )));
                }
                seen[self.table[j][i]] = true;
            }
        }
        // Identity at index 0.
        for i in 0..n {
            if self.table[0][i] != i || self.table[i][0] != i {
                return Err(GroupError::InvalidTable(format!(
                    "index 0 is not a two-sided identity (fails at element {i})"
                )));
            }
        }
        // Associativity.
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a][b];
                for c in 0..n {
                    if self.table[ab][c] != self.table[a][self.table[b][c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // Inverses. Implied by the Latin-square and identity axioms above,
        // but the contract names it, so check it directly.
        for a in 0..n {
            if !(0..n).any(|b| self.table[a][b] == 0 && self.table[b][a] == 0) {
                return Err(GroupError::InvalidTable(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.table[a][b] == 0)
            .expect("validated group element has an inverse")
    }

    /// Smallest k ≥ 1 with aᵏ = identity.
    pub fn element_order(&self, a: usize) -> Result<usize, GroupError> {
        if a >= self.order {
            return Err(GroupError::IndexOutOfRange {
                index: a,
                order: self.order,
            });
        }
        let mut power = a;
        let mut k = 1;
        while power != 0 {
            power = self.table[power][a];
            k += 1;
        }
        Ok(k)
    }

    /// Direct product with elements ordered lexicographically:
    /// the pair `(a, b)` gets index `a·|H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let mut table = vec![vec![0usize; n]; n];
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        let i = a1 * other.order + b1;
                        let j = a2 * other.order + b2;
                        table[i][j] = self.table[a1][a2] * other.order + other.table[b1][b2];
                    }
                }
            }
        }
        FiniteGroup {
            name: format!("{}x{}", self.name, other.name),
            order: n,
            table,
        }
    }

    /// A short stable fingerprint of the multiplication table, used to tag
    /// cochain files when the group has no preset name.
    pub fn fingerprint(&self) -> String {
        // FNV-1a over the flattened table.
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u64| {
            h ^= v;
            h = h.wrapping_mul(0x100000001b3);
        };
        eat(self.order as u64);
        for row in &self.table {
            for &v in row {
                eat(v as u64);
            }
        }
        format!("{h:016x}")
    }
}

/// Resolve a preset name to a group.
///
/// Known presets: `z2`, `z4`, `z8`, `zN` for N ≤ 64, `z2xz2`, `s3`, `s4`,
/// `d8`, `q8`.
pub fn build_group(spec: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    let g = match spec {
        "z2xz2" => {
            let z2 = cyclic(2);
            let mut g = z2.direct_product(&z2);
            g.name = "z2xz2".into();
            g
        }
        "s3" => symmetric(3),
        "s4" => symmetric(4),
        "d8" => dihedral8(),
        "q8" => quaternion8(),
        _ => {
            let n: usize = spec
                .strip_prefix('z')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GroupError::UnknownPreset(spec.to_string()))?;
            if n == 0 || n > 64 {
                return Err(GroupError::UnknownPreset(spec.to_string()));
            }
            cyclic(n)
        }
    };
    debug_assert!(g.validate().is_ok());
    Ok(Arc::new(g))
}

fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteGroup {
        name: format!("z{n}"),
        order: n,
        table,
    }
}

/// Permutations of {0,..,n-1} in lexicographic order; index 0 is the identity.
fn symmetric(n: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let order = perms.len();
    let mut table = vec![vec![0usize; order]; order];
    for (i, sigma) in perms.iter().enumerate() {
        for (j, tau) in perms.iter().enumerate() {
            // (στ)(x) = σ(τ(x))
            let composed: Vec<usize> = (0..n).map(|x| sigma[tau[x]]).collect();
            table[i][j] = index_of(&composed);
        }
    }
    FiniteGroup {
        name: format!("s{n}"),
        order,
        table,
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Dihedral group of order 8: element r^x s^y at index 4y + x.
fn dihedral8() -> FiniteGroup {
    let idx = |x: usize, y: usize| 4 * y + (x % 4);
    let mut table = vec![vec![0usize; 8]; 8];
    for x1 in 0..4 {
        for y1 in 0..2 {
            for x2 in 0..4 {
                for y2 in 0..2 {
                    // (r^x1 s^y1)(r^x2 s^y2) = r^{x1 + x2·(-1)^{y1}} s^{y1+y2}
                    let x = if y1 == 0 { x1 + x2 } else { x1 + 4 - (x2 % 4) };
                    table[idx(x1, y1)][idx(x2, y2)] = idx(x % 4, (y1 + y2) % 2);
                }
            }
        }
    }
    FiniteGroup {
        name: "d8".into(),
        order: 8,
        table,
    }
}

/// Quaternion group: 1, -1, i, -i, j, -j, k, -k.
fn quaternion8() -> FiniteGroup {
    // Represent q = (sign, axis) with axis 0 ↦ 1, 1 ↦ i, 2 ↦ j, 3 ↦ k.
    let idx = |sign: usize, axis: usize| match axis {
        0 => sign,
        a => 2 * a + sign,
    };
    let unit_mul = |a: usize, b: usize| -> (usize, usize) {
        // returns (sign, axis) of the product of the two basis units
        match (a, b) {
            (0, x) => (0, x),
            (x, 0) => (0, x),
            (1, 1) | (2, 2) | (3, 3) => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0usize; 8]; 8];
    for s1 in 0..2 {
        for a1 in 0..4 {
            for s2 in 0..2 {
                for a2 in 0..4 {
                    let (s, a) = unit_mul(a1, a2);
                    table[idx(s1, a1)][idx(s2, a2)] = idx((s1 + s2 + s) % 2, a);
                }
            }
        }
    }
    FiniteGroup {
        name: "q8".into(),
        order: 8,
        table,
    }
}
