//! Closed-form spectra and degeneracies of the full, relative, angular and
//! relative-angular Calogero–Moser models.
//!
//! Energies are exact rationals: in units of `ω` for the full and relative
//! models, dimensionless for the angular ones (where `ω` never enters).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::coeff::{format_rational, int, ExactRational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelVariant {
    Full,
    Relative,
    Angular,
    RelativeAngular,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 4] =
        [ModelVariant::Full, ModelVariant::Relative, ModelVariant::Angular, ModelVariant::RelativeAngular];

    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::Full => "full",
            ModelVariant::Relative => "relative",
            ModelVariant::Angular => "angular",
            ModelVariant::RelativeAngular => "relative-angular",
        }
    }

    /// Whether `k_1` (centre of mass) is frozen to zero.
    pub fn excludes_k1(self) -> bool {
        matches!(self, ModelVariant::Relative | ModelVariant::RelativeAngular)
    }

    /// Whether `k_2` (radial excitation) is frozen to zero.
    pub fn excludes_k2(self) -> bool {
        matches!(self, ModelVariant::Angular | ModelVariant::RelativeAngular)
    }

    /// Angular variants have dimensionless energies independent of `ω`.
    pub fn is_angular(self) -> bool {
        self.excludes_k2()
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModelVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown model variant `{s}`")))
    }
}

/// Quantum numbers `k = (k_1, …, k_n)`; `k_i` counts excitations by the
/// degree-`i` Newton sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// Index with a single nonzero entry `k_pos = value` (one-based `pos`).
    pub fn unit(n: usize, pos: usize, value: u32) -> Self {
        let mut k = vec![0; n];
        k[pos - 1] = value;
        MultiIndex(k)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// One-based access, zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Level `m = Σ i·k_i`.
    pub fn level(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &k)| (i as u64 + 1) * k as u64).sum()
    }

    /// Checks the variant's frozen quantum numbers.
    pub fn validate(&self, variant: ModelVariant) -> Result<()> {
        let violation = |reason: &str| {
            Err(Error::ConstraintViolation { variant: variant.name().into(), reason: reason.into() })
        };
        if variant.excludes_k1() && self.get(1) != 0 {
            return violation("k1 must vanish");
        }
        if variant.excludes_k2() && self.get(2) != 0 {
            return violation("k2 must vanish");
        }
        Ok(())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for MultiIndex {
    type Err = Error;
    /// Accepts `1,0,2` or `(1,0,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        body.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("invalid multi-index `{s}`"))))
            .collect::<Result<Vec<_>>>()
            .map(MultiIndex)
    }
}

/// Memoized bounded-part partition counts `p_n(m)`.
///
/// One growable table per `n`; safe to share between threads.
#[derive(Default)]
pub struct PartitionTable {
    rows: RwLock<HashMap<usize, Vec<u128>>>,
}

impl PartitionTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table.
    pub fn global() -> &'static PartitionTable {
        static TABLE: OnceLock<PartitionTable> = OnceLock::new();
        TABLE.get_or_init(PartitionTable::new)
    }

    /// Number of partitions of `m` into parts no larger than `n`; zero for `m < 0`.
    pub fn count(&self, n: usize, m: i64) -> u128 {
        if m < 0 {
            return 0;
        }
        let m = m as usize;
        if let Some(row) = self.rows.read().expect("poisoned").get(&n) {
            if let Some(&v) = row.get(m) {
                return v;
            }
        }
        let len = (m + 1).max(32).next_power_of_two();
        let row = bounded_partition_row(n, len);
        let v = row[m];
        let mut w = self.rows.write().expect("poisoned");
        let slot = w.entry(n).or_default();
        if slot.len() < row.len() {
            *slot = row;
        }
        v
    }
}

/// `p_n(0..len)` by the coin recurrence: add parts 1, 2, …, n one size at a time.
fn bounded_partition_row(n: usize, len: usize) -> Vec<u128> {
    let mut ways = vec![0u128; len];
    ways[0] = 1;
    for part in 1..=n {
        for m in part..len {
            ways[m] = ways[m].checked_add(ways[m - part]).expect("partition count overflow");
        }
    }
    ways
}

/// `p_n(m)`, zero for negative `m`.
pub fn partitions_count(n: usize, m: i64) -> u128 {
    PartitionTable::global().count(n, m)
}

/// All `k` of level `m` respecting the variant, in lexicographic order.
pub fn enumerate_levels(variant: ModelVariant, n: usize, m: u64) -> Vec<MultiIndex> {
    fn rec(variant: ModelVariant, n: usize, pos: usize, rem: u64, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if pos > n {
            if rem == 0 {
                out.push(MultiIndex(cur.clone()));
            }
            return;
        }
        let frozen = (pos == 1 && variant.excludes_k1()) || (pos == 2 && variant.excludes_k2());
        let max = if frozen { 0 } else { rem / pos as u64 };
        for k in 0..=max {
            cur.push(k as u32);
            rec(variant, n, pos + 1, rem - k * pos as u64, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(variant, n, 1, m, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// Degeneracy at level `m` from partition counts.
pub fn degeneracy(variant: ModelVariant, n: usize, m: u64) -> u128 {
    let p = |d: i64| partitions_count(n, m as i64 - d) as i128;
    let v = match variant {
        ModelVariant::Full => p(0),
        ModelVariant::Relative => p(0) - p(1),
        ModelVariant::Angular => p(0) - p(2),
        ModelVariant::RelativeAngular => p(0) - p(1) - p(2) + p(3),
    };
    u128::try_from(v).expect("degeneracy formulas are nonnegative")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub variant: ModelVariant,
    pub k: MultiIndex,
    pub m: u64,
    /// `E/ω` for full and relative models, `ε` for angular ones.
    #[serde(serialize_with = "ser_rational")]
    pub energy: ExactRational,
    /// `q` (or `q̃` for the relative models).
    #[serde(serialize_with = "ser_rational")]
    pub q: ExactRational,
    pub degeneracy: u128,
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn big(n: u64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `½ g n(n−1)`
pub fn ground_coupling(n: usize, g: &ExactRational) -> ExactRational {
    g * big((n * (n - 1) / 2) as u64)
}

/// Angular momentum `q`: `½gn(n−1) + k_1 + Σ_{i≥3} i k_i`, or `q̃` (no `k_1`) for relative variants.
pub fn effective_q(variant: ModelVariant, n: usize, g: &ExactRational, k: &MultiIndex) -> ExactRational {
    let mut extra: u64 = (3..=n).map(|i| i as u64 * k.get(i) as u64).sum();
    if !variant.excludes_k1() {
        extra += k.get(1) as u64;
    }
    ground_coupling(n, g) + big(extra)
}

/// `ε(q) = ½ q (q + d − 2)` for a sphere `S^(d−1)`.
pub fn sphere_eigenvalue(q: &ExactRational, d: usize) -> ExactRational {
    let half = BigRational::new(1.into(), 2.into());
    half * q * (q + int(d as i64) - int(2))
}

/// Spectrum entry for `k` in the given variant.
pub fn energy(variant: ModelVariant, n: usize, g: &ExactRational, k: &MultiIndex) -> Result<SpectrumEntry> {
    if k.n() != n {
        return Err(Error::InvalidArgument(format!("multi-index {k} has length {} ≠ n = {n}", k.n())));
    }
    if g.is_negative() {
        return Err(Error::InvalidArgument("coupling must be nonnegative".into()));
    }
    k.validate(variant)?;
    let m = k.level();
    let q = effective_q(variant, n, g, k);
    let half = BigRational::new(1.into(), 2.into());
    let energy = match variant {
        ModelVariant::Full => ground_coupling(n, g) + big(n as u64) * &half + big(m),
        ModelVariant::Relative => ground_coupling(n, g) + big(n as u64 - 1) * &half + big(m),
        // ½ q (q + n − 2)
        ModelVariant::Angular => sphere_eigenvalue(&q, n),
        // ½ q̃ (q̃ + n − 3)
        ModelVariant::RelativeAngular => sphere_eigenvalue(&q, n - 1),
    };
    Ok(SpectrumEntry { variant, k: k.clone(), m, energy, q, degeneracy: degeneracy(variant, n, m) })
}

/// One row per populated level: all `k` at level `m` share one energy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumLevel {
    pub m: u64,
    #[serde(serialize_with = "ser_rational")]
    pub energy: ExactRational,
    #[serde(serialize_with = "ser_rational")]
    pub q: ExactRational,
    pub degeneracy: u128,
    pub states: Vec<MultiIndex>,
}

/// Levels `0..=max_level` that carry at least one state.
pub fn spectrum(variant: ModelVariant, n: usize, g: &ExactRational, max_level: u64) -> Result<Vec<SpectrumLevel>> {
    let mut out = Vec::new();
    for m in 0..=max_level {
        let states = enumerate_levels(variant, n, m);
        let Some(first) = states.first() else { continue };
        let e = energy(variant, n, g, first)?;
        out.push(SpectrumLevel { m, energy: e.energy, q: e.q, degeneracy: e.degeneracy, states });
    }
    Ok(out)
}

/// Lowest `½n(n−1)` levels, the ones that drop out when `g → g + 1`.
pub fn isospectral_shift(n: usize) -> u64 {
    (n * (n - 1) / 2) as u64
}

pub fn is_nonnegative_integer(r: &ExactRational) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    /// Brute-force partition enumeration, independent of the recurrence.
    fn brute_partitions(n: usize, m: i64) -> u128 {
        fn rec(rem: i64, max: i64) -> u128 {
            if rem == 0 {
                return 1;
            }
            (1..=max.min(rem)).map(|p| rec(rem - p, p)).sum()
        }
        if m < 0 {
            0
        } else {
            rec(m, n as i64)
        }
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions_count(5, 0), 1);
        assert_eq!(partitions_count(3, 3), 3);
        assert_eq!(partitions_count(4, 4), 5);
        assert_eq!(partitions_count(4, -1), 0);
        for n in 1..=7 {
            for m in 0..=20 {
                assert_eq!(partitions_count(n, m), brute_partitions(n, m), "p_{n}({m})");
            }
        }
    }

    #[test]
    fn partition_table_is_shareable() {
        let t = PartitionTable::new();
        std::thread::scope(|s| {
            for n in 1..6 {
                let t = &t;
                s.spawn(move || {
                    for m in (0..200).rev() {
                        assert_eq!(t.count(n, m), bounded_partition_row(n, 201)[m as usize]);
                    }
                });
            }
        });
    }

    #[test]
    fn level_enumeration_examples() {
        let ang = enumerate_levels(ModelVariant::Angular, 3, 3);
        assert_eq!(ang, vec![MultiIndex(vec![0, 0, 1]), MultiIndex(vec![3, 0, 0])]);
        for v in ModelVariant::ALL {
            assert_eq!(enumerate_levels(v, 4, 0), vec![MultiIndex::zero(4)]);
        }
        assert_eq!(enumerate_levels(ModelVariant::RelativeAngular, 3, 3), vec![MultiIndex(vec![0, 0, 1])]);
    }

    #[test]
    fn counts_match_degeneracy_formulas() {
        for v in ModelVariant::ALL {
            for n in 2..=6 {
                for m in 0..=12 {
                    assert_eq!(enumerate_levels(v, n, m).len() as u128, degeneracy(v, n, m), "{v} n={n} m={m}");
                }
            }
        }
        assert_eq!(degeneracy(ModelVariant::Angular, 3, 3), 2);
        assert_eq!(degeneracy(ModelVariant::Angular, 4, 4), 3);
        assert_eq!(degeneracy(ModelVariant::Angular, 7, 0), 1);
    }

    #[test]
    fn energy_examples() {
        let e = energy(ModelVariant::Angular, 3, &int(1), &MultiIndex(vec![0, 0, 1])).unwrap();
        assert_eq!(e.q, int(6));
        assert_eq!(e.energy, int(21));
        // n = 2 special case: ε = ½ q², q = g + k1; ε̃ = ½ q̃ (q̃ − 1), q̃ = g
        let g = rat(3, 4);
        let a = energy(ModelVariant::Angular, 2, &g, &MultiIndex(vec![2, 0])).unwrap();
        let q = &g + int(2);
        assert_eq!(a.energy, rat(1, 2) * &q * &q);
        let r = energy(ModelVariant::RelativeAngular, 2, &g, &MultiIndex(vec![0, 0])).unwrap();
        assert_eq!(r.energy, rat(1, 2) * &g * (&g - int(1)));
        // n = 3: ε̃ = 9/2 (g + k3)²
        let t = energy(ModelVariant::RelativeAngular, 3, &g, &MultiIndex(vec![0, 0, 2])).unwrap();
        assert_eq!(t.energy, rat(9, 2) * (&g + int(2)) * (&g + int(2)));
    }

    #[test]
    fn full_and_relative_energies() {
        let g = rat(1, 2);
        let k = MultiIndex(vec![1, 1, 1]);
        let e = energy(ModelVariant::Full, 3, &g, &k).unwrap();
        assert_eq!(e.energy, rat(3, 2) + rat(3, 2) + int(6));
        let k0 = MultiIndex(vec![0, 1, 1]);
        let r = energy(ModelVariant::Relative, 3, &g, &k0).unwrap();
        assert_eq!(r.energy, rat(3, 2) + int(1) + int(5));
    }

    #[test]
    fn constraint_violations() {
        let k = MultiIndex(vec![0, 1, 0]);
        assert!(matches!(energy(ModelVariant::Angular, 3, &int(1), &k), Err(Error::ConstraintViolation { .. })));
        let k1 = MultiIndex(vec![1, 0, 0]);
        assert!(energy(ModelVariant::Relative, 3, &int(1), &k1).is_err());
        assert!(energy(ModelVariant::Full, 4, &int(1), &k1).is_err());
    }

    #[test]
    fn angular_energy_ignores_k2_and_omega_free() {
        // relative-angular ignores k1 as well: compare q̃ against Full's q minus k1
        let g = rat(2, 3);
        let a = energy(ModelVariant::Full, 4, &g, &MultiIndex(vec![1, 3, 1, 0])).unwrap();
        let b = energy(ModelVariant::Full, 4, &g, &MultiIndex(vec![1, 0, 1, 0])).unwrap();
        assert_eq!(a.q, b.q);
        let c = effective_q(ModelVariant::RelativeAngular, 4, &g, &MultiIndex(vec![5, 2, 1, 0]));
        assert_eq!(c, effective_q(ModelVariant::RelativeAngular, 4, &g, &MultiIndex(vec![0, 0, 1, 0])));
    }

    #[test]
    fn free_limit_is_sphere_spectrum() {
        for n in 2..=5 {
            for m in 0..8u64 {
                for k in enumerate_levels(ModelVariant::Angular, n, m) {
                    let e = energy(ModelVariant::Angular, n, &int(0), &k).unwrap();
                    assert_eq!(e.q, big(m));
                    assert_eq!(e.energy, sphere_eigenvalue(&big(m), n));
                }
            }
        }
    }

    #[test]
    fn spectrum_rows_skip_empty_levels() {
        let rows = spectrum(ModelVariant::RelativeAngular, 3, &int(0), 6).unwrap();
        let ms: Vec<u64> = rows.iter().map(|r| r.m).collect();
        assert_eq!(ms, vec![0, 3, 6]);
        let e: Vec<ExactRational> = rows.iter().map(|r| r.energy.clone()).collect();
        assert_eq!(e, vec![int(0), rat(9, 2), int(18)]);
    }

    #[test]
    fn text_forms() {
        assert_eq!("relative-angular".parse::<ModelVariant>().unwrap(), ModelVariant::RelativeAngular);
        assert_eq!("(1,0,2)".parse::<MultiIndex>().unwrap(), MultiIndex(vec![1, 0, 2]));
        assert_eq!(MultiIndex(vec![1, 0, 2]).to_string(), "(1,0,2)");
    }
}
