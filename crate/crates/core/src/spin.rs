//! SU(s) content of the bosonic spin–Calogero model by Young-diagram calculus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectra::{enumerate_levels, ModelVariant, MultiIndex};

/// Row lengths, weakly decreasing and positive. The empty diagram is the singlet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram(Vec<u32>);

impl YoungDiagram {
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("rows {rows:?} are not weakly decreasing")));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(YoungDiagram(rows))
    }

    pub fn singlet() -> Self {
        YoungDiagram(Vec::new())
    }

    /// `[ℓ]`
    pub fn row(l: u32) -> Self {
        if l == 0 {
            Self::singlet()
        } else {
            YoungDiagram(vec![l])
        }
    }

    /// `{ℓ}`
    pub fn column(l: u32) -> Self {
        YoungDiagram(vec![1; l as usize])
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    pub fn boxes(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `None` when the diagram has more than `s` rows (no SU(s) irrep);
    /// otherwise the diagram with its height-`s` columns removed.
    pub fn canonical(&self, s: u32) -> Option<YoungDiagram> {
        let s = s as usize;
        if self.0.len() > s {
            return None;
        }
        let strip = if self.0.len() == s { self.0[s - 1] } else { 0 };
        let rows = self.0.iter().map(|r| r - strip).filter(|&r| r > 0).collect();
        Some(YoungDiagram(rows))
    }

    /// Pieri rule: every diagram obtained by adding a horizontal strip of `l` boxes.
    pub fn add_horizontal_strip(&self, l: u32) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut rows = self.0.clone();
        rows.push(0);
        let mut current = vec![0; rows.len()];
        strip(&rows, 0, l, &mut current, &mut out);
        out
    }
}

fn strip(rows: &[u32], i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
    if i == rows.len() {
        if left == 0 {
            out.push(YoungDiagram::new(current.clone()).expect("strip keeps rows ordered"));
        }
        return;
    }
    // Row i may grow up to the old length of row i−1.
    let cap = if i == 0 { left } else { (rows[i - 1] - rows[i]).min(left) };
    for add in 0..=cap {
        current[i] = rows[i] + add;
        strip(rows, i + 1, left - add, current, out);
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[0]");
        }
        let rows: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("diagram must look like [3,1]: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Self::singlet());
        }
        let rows = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("row {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// Weyl dimension `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)` of an SU(s) irrep.
pub fn irrep_dimension(s: u32, d: &YoungDiagram) -> u128 {
    let s = s as usize;
    if d.0.len() > s {
        return 0;
    }
    let mut lam: Vec<i64> = d.0.iter().map(|&r| r as i64).collect();
    lam.resize(s, 0);
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for i in 0..s {
        for j in i + 1..s {
            num *= lam[i] - lam[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// Integer combination of canonical SU(s) diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter {
    s: u32,
    terms: BTreeMap<YoungDiagram, i64>,
}

impl VirtualCharacter {
    pub fn zero(s: u32) -> Self {
        assert!(s >= 1, "SU(s) needs s ≥ 1");
        VirtualCharacter { s, terms: BTreeMap::new() }
    }

    /// A single irrep; diagrams with more than `s` rows give zero.
    pub fn irrep(s: u32, d: &YoungDiagram) -> Self {
        let mut out = Self::zero(s);
        out.add(d, 1);
        out
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, d: &YoungDiagram) -> i64 {
        d.canonical(self.s).and_then(|c| self.terms.get(&c).copied()).unwrap_or(0)
    }

    /// Terms with the largest diagrams first.
    pub fn terms(&self) -> impl Iterator<Item = (&YoungDiagram, i64)> {
        self.terms.iter().rev().map(|(d, &c)| (d, c))
    }

    pub fn add(&mut self, d: &YoungDiagram, mult: i64) {
        let Some(c) = d.canonical(self.s) else { return };
        let slot = self.terms.entry(c.clone()).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.terms.remove(&c);
        }
    }

    pub fn add_assign(&mut self, o: &VirtualCharacter, factor: i64) {
        assert_eq!(self.s, o.s, "characters of different SU(s)");
        for (d, &c) in &o.terms {
            self.add(d, c * factor);
        }
    }

    pub fn dimension(&self) -> i128 {
        self.terms.iter().map(|(d, &c)| c as i128 * irrep_dimension(self.s, d) as i128).sum()
    }

    /// Fails on the first negative multiplicity.
    pub fn check_nonnegative(&self) -> Result<()> {
        match self.terms.iter().find(|(_, &c)| c < 0) {
            Some((d, &c)) => Err(Error::NegativeMultiplicity { diagram: d.to_string(), mult: c }),
            None => Ok(()),
        }
    }

    pub fn parse(s: u32, text: &str) -> Result<Self> {
        let mut out = Self::zero(s);
        let text = text.trim();
        if text == "0" {
            return Ok(out);
        }
        let mut sign = 1;
        let mut rest = text;
        loop {
            rest = rest.trim_start();
            let end = rest.find(']').ok_or_else(|| Error::Parse(format!("unterminated diagram in {text:?}")))?;
            let (term, tail) = rest.split_at(end + 1);
            let (mult, diagram) = match term.split_once('*') {
                Some((m, d)) => (m.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{m:?}: {e}")))?, d),
                None => (1, term),
            };
            out.add(&diagram.parse()?, sign * mult);
            let tail = tail.trim_start();
            if tail.is_empty() {
                return Ok(out);
            }
            sign = match tail.as_bytes()[0] {
                b'+' => 1,
                b'-' => -1,
                _ => return Err(Error::Parse(format!("expected + or - in {text:?}"))),
            };
            rest = &tail[1..];
        }
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, false) => write!(f, "{c}*{d}")?,
                (0, true) => write!(f, "-{}*{d}", -c)?,
                (_, false) => write!(f, " + {c}*{d}")?,
                (_, true) => write!(f, " - {}*{d}", -c)?,
            }
        }
        Ok(())
    }
}

/// `c × [ℓ]`, decomposed.
pub fn pieri_product(c: &VirtualCharacter, l: u32) -> VirtualCharacter {
    let mut out = VirtualCharacter::zero(c.s);
    for (d, &mult) in &c.terms {
        for e in d.add_horizontal_strip(l) {
            out.add(&e, mult);
        }
    }
    out
}

/// `[c_1] × [c_2 − c_1] × ⋯ × [n − c_r]` for the positions `c_i` of the nonzero `k_i`.
pub fn level_content(s: u32, k: &MultiIndex) -> VirtualCharacter {
    let n = k.n() as u32;
    let mut out = VirtualCharacter::irrep(s, &YoungDiagram::singlet());
    let mut prev = 0;
    for (i, &ki) in k.0.iter().enumerate() {
        if ki > 0 {
            let c = i as u32 + 1;
            out = pieri_product(&out, c - prev);
            prev = c;
        }
    }
    pieri_product(&out, n - prev)
}

/// `S(m)`: content of the full model at level `m`; zero for `m < 0`.
pub fn full_content(s: u32, n: usize, m: i64) -> VirtualCharacter {
    let mut out = VirtualCharacter::zero(s);
    if m < 0 {
        return out;
    }
    for k in enumerate_levels(ModelVariant::Full, n, m as u64) {
        out.add_assign(&level_content(s, &k), 1);
    }
    out
}

/// Content per variant, as alternating sums of `S`:
/// full `S(m)`, relative `S(m) − S(m−1)`, angular `S(m) − S(m−2)`,
/// relative-angular `S(m) − S(m−1) − S(m−2) + S(m−3)`.
pub fn spin_content(variant: ModelVariant, s: u32, n: usize, m: u64) -> Result<VirtualCharacter> {
    let m = m as i64;
    let shifts: &[(i64, i64)] = match variant {
        ModelVariant::Full => &[(0, 1)],
        ModelVariant::Relative => &[(0, 1), (1, -1)],
        ModelVariant::Angular => &[(0, 1), (2, -1)],
        ModelVariant::RelativeAngular => &[(0, 1), (1, -1), (2, -1), (3, 1)],
    };
    let mut out = VirtualCharacter::zero(s);
    for &(shift, sign) in shifts {
        out.add_assign(&full_content(s, n, m - shift), sign);
    }
    out.check_nonnegative()?;
    Ok(out)
}

/// `{n mod s}`: the fermionic vacuum.
pub fn fermionic_vacuum(s: u32, n: usize) -> YoungDiagram {
    YoungDiagram::column(n as u32 % s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::degeneracy;

    fn d(text: &str) -> YoungDiagram {
        text.parse().unwrap()
    }

    fn ch(s: u32, text: &str) -> VirtualCharacter {
        VirtualCharacter::parse(s, text).unwrap()
    }

    #[test]
    fn pieri_examples() {
        let one = VirtualCharacter::irrep(5, &d("[1]"));
        assert_eq!(pieri_product(&one, 1), ch(5, "[2] + [1,1]"));
        let two = VirtualCharacter::irrep(5, &d("[2]"));
        assert_eq!(pieri_product(&two, 2), ch(5, "[4] + [3,1] + [2,2]"));
        let col = VirtualCharacter::irrep(2, &d("[1,1]"));
        assert_eq!(pieri_product(&col, 1), ch(2, "[1]"));
    }

    #[test]
    fn dimensions() {
        for l in 0..6 {
            assert_eq!(irrep_dimension(2, &YoungDiagram::row(l)), l as u128 + 1);
        }
        for s in 1..6 {
            assert_eq!(irrep_dimension(s, &d("[1]")), s as u128);
        }
        assert_eq!(irrep_dimension(3, &d("[1,1]")), 3);
        assert_eq!(irrep_dimension(3, &d("[2,1]")), 8);
        assert_eq!(irrep_dimension(2, &d("[1,1,1]")), 0);
    }

    #[test]
    fn level_content_examples() {
        let n = 5;
        let s = 4;
        let k = MultiIndex(vec![1, 0, 2, 0, 0]);
        let mut expected = VirtualCharacter::irrep(s, &d("[1]"));
        expected = pieri_product(&pieri_product(&expected, 2), 2);
        assert_eq!(level_content(s, &k), expected);
        assert_eq!(level_content(s, &MultiIndex::zero(n)), VirtualCharacter::irrep(s, &YoungDiagram::row(5)));
        assert_eq!(level_content(s, &MultiIndex(vec![2, 0, 0, 0, 0])), level_content(s, &MultiIndex::unit(n, 1, 1)));
    }

    #[test]
    fn angular_content_drops_the_singlet_at_level_two() {
        for n in 2..=5 {
            let s = 3;
            let c = spin_content(ModelVariant::Angular, s, n, 2).unwrap();
            // [1]×[n−1] loses exactly its [n] component.
            let mut expected = level_content(s, &MultiIndex::unit(n, 1, 1));
            expected.add(&YoungDiagram::row(n as u32), -1);
            expected.add_assign(&level_content(s, &MultiIndex::unit(n, 2, 1)), 1);
            assert_eq!(c, expected);
        }
    }

    #[test]
    fn single_flavour_reduces_to_counting() {
        for v in ModelVariant::ALL {
            for n in 2..=5 {
                for m in 0..=8 {
                    let c = spin_content(v, 1, n, m).unwrap();
                    assert_eq!(c.dimension(), degeneracy(v, n, m) as i128);
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let c = ch(4, "2*[3,1] + 1*[2,2] - 1*[0]");
        assert_eq!(c.to_string(), "2*[3,1] + 1*[2,2] - 1*[0]");
        assert_eq!(ch(4, &c.to_string()), c);
        assert_eq!(VirtualCharacter::zero(2).to_string(), "0");
        assert_eq!(fermionic_vacuum(3, 5), d("[1,1]"));
        assert!("[1,2]".parse::<YoungDiagram>().is_err());
        assert_eq!(d("[2,2,2]").canonical(3), Some(YoungDiagram::singlet()));
    }
}
