//! Flat and sharp bias measures over families of `(C, E, F)` cases.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::approx::RclStructure;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::granular::{LatticeMode, SetRcl};

/// Something that can evaluate the two aggregations and count principal filters.
pub trait BiasHost {
    type Element: Clone;

    fn resolve(&self, name: &str) -> Result<Self::Element>;
    fn render(&self, x: &Self::Element) -> String;
    fn cca(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn oa(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    /// `|{y : x ≤ y}|`
    fn filter_size(&self, x: &Self::Element) -> BigUint;
}

/// Enumerates the principal filter in the explicit lattice.
impl BiasHost for RclStructure {
    type Element = usize;

    fn resolve(&self, name: &str) -> Result<usize> {
        self.lattice().index_of(name)
    }

    fn render(&self, x: &usize) -> String {
        self.lattice().name(*x).to_string()
    }

    fn cca(&self, a: &usize, b: &usize) -> usize {
        self.lattice().meet(self.lower(*a), self.lower(*b))
    }

    fn oa(&self, a: &usize, b: &usize) -> usize {
        self.lattice().join(self.upper(*a), self.upper(*b))
    }

    fn filter_size(&self, x: &usize) -> BigUint {
        BigUint::from(self.lattice().principal_filter(*x).count())
    }
}

/// Powerset carrier only: filters are counted as `2^(|U|-|X|)`.
/// Definable-mode structures should be materialized first.
impl BiasHost for SetRcl {
    type Element = BitSet;

    fn resolve(&self, name: &str) -> Result<BitSet> {
        self.universe()
            .parse_literal(name)
            .map_err(|_| Error::UnknownElement(name.to_string()))
    }

    fn render(&self, x: &BitSet) -> String {
        self.literal(x)
    }

    fn cca(&self, a: &BitSet, b: &BitSet) -> BitSet {
        SetRcl::cca(self, a, b)
    }

    fn oa(&self, a: &BitSet, b: &BitSet) -> BitSet {
        SetRcl::oa(self, a, b)
    }

    fn filter_size(&self, x: &BitSet) -> BigUint {
        debug_assert_eq!(self.mode(), LatticeMode::Powerset);
        BigUint::one() << (self.universe().len() - x.count())
    }
}

/// One case named by element names or subset literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasCase {
    #[serde(alias = "C")]
    pub c: String,
    #[serde(alias = "E")]
    pub e: String,
    #[serde(alias = "F")]
    pub f: String,
}

impl BiasCase {
    pub fn new(c: &str, e: &str, f: &str) -> Self {
        BiasCase {
            c: c.into(),
            e: e.into(),
            f: f.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasConfig {
    pub cases: Vec<BiasCase>,
    #[serde(default)]
    pub skip_degenerate: bool,
}

impl BiasConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Exact rational with string fields so large values survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactRational {
    pub numerator: String,
    pub denominator: String,
}

impl ExactRational {
    pub fn to_rational(&self) -> Result<BigRational> {
        let n: BigInt = self
            .numerator
            .parse()
            .map_err(|_| Error::Parse(self.numerator.clone()))?;
        let d: BigInt = self
            .denominator
            .parse()
            .map_err(|_| Error::Parse(self.denominator.clone()))?;
        Ok(BigRational::new(n, d))
    }
}

impl From<&BigRational> for ExactRational {
    fn from(r: &BigRational) -> Self {
        ExactRational {
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
        }
    }
}

impl std::fmt::Display for ExactRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == "1" {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Aggregations and filter cardinalities for one case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    /// 1-based case number.
    pub index: usize,
    pub c: String,
    pub e: String,
    pub f: String,
    pub c_cca_f: String,
    pub c_oa_f: String,
    pub e_cca_f: String,
    pub e_oa_f: String,
    pub card_c_cca_f: String,
    pub card_c_oa_f: String,
    pub card_e_cca_f: String,
    pub card_e_oa_f: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasReport {
    pub reading: String,
    pub cases: Vec<CaseRecord>,
    pub flat: ExactRational,
    /// `None` when some case is degenerate and skipping was not requested.
    pub sharp: Option<ExactRational>,
    /// Cases whose sharp denominator vanishes.
    pub degenerate: Vec<usize>,
    /// Set when `sharp` was averaged over the non-degenerate cases only.
    pub skipped_degenerate: bool,
}

pub const CASE_READING: &str =
    "C, E and F are single carrier elements; in set-based structures each is a subset of the universe";

/// Filter cardinalities `(|F(C·F)|, |F(C⊗F)|, |F(E·F)|, |F(E⊗F)|)` for one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCounts {
    pub c_cca: BigUint,
    pub c_oa: BigUint,
    pub e_cca: BigUint,
    pub e_oa: BigUint,
}

fn ratio(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

/// `1 − (1/k) Σ |F(C·F)| / |F(E·F)|`
pub fn bias_flat(counts: &[CaseCounts]) -> Result<BigRational> {
    if counts.is_empty() {
        return Err(Error::EmptyCaseList);
    }
    let mut sum = BigRational::zero();
    for (i, c) in counts.iter().enumerate() {
        if c.e_cca.is_zero() {
            return Err(Error::DegenerateDenominator(i + 1));
        }
        sum += ratio(&c.c_cca, &c.e_cca);
    }
    Ok(BigRational::one() - sum / BigRational::from_integer(BigInt::from(counts.len())))
}

fn signed_diff(a: &BigUint, b: &BigUint) -> BigInt {
    BigInt::from(a.clone()) - BigInt::from(b.clone())
}

/// `1 − (1/k) Σ (|F(C⊗F)| − |F(C·F)|) / (|F(E⊗F)| − |F(E·F)|)`.
/// With `skip_degenerate`, cases with a zero denominator are left out of
/// the average; otherwise the first one is an error.
pub fn bias_sharp(counts: &[CaseCounts], skip_degenerate: bool) -> Result<BigRational> {
    if counts.is_empty() {
        return Err(Error::EmptyCaseList);
    }
    let mut sum = BigRational::zero();
    let mut used = 0usize;
    let mut first_degenerate = None;
    for (i, c) in counts.iter().enumerate() {
        let den = signed_diff(&c.e_oa, &c.e_cca);
        if den.is_zero() {
            if !skip_degenerate {
                return Err(Error::DegenerateDenominator(i + 1));
            }
            first_degenerate.get_or_insert(i + 1);
            continue;
        }
        sum += BigRational::new(signed_diff(&c.c_oa, &c.c_cca), den);
        used += 1;
    }
    if used == 0 {
        return Err(Error::DegenerateDenominator(first_degenerate.unwrap_or(1)));
    }
    Ok(BigRational::one() - sum / BigRational::from_integer(BigInt::from(used)))
}

/// Resolves every case, computes the aggregations and filter sizes in case
/// order, then both measures.
pub fn audit<H: BiasHost>(host: &H, cases: &[BiasCase], skip_degenerate: bool) -> Result<BiasReport> {
    if cases.is_empty() {
        return Err(Error::EmptyCaseList);
    }
    let mut records = Vec::with_capacity(cases.len());
    let mut counts = Vec::with_capacity(cases.len());
    for (i, case) in cases.iter().enumerate() {
        let c = host.resolve(&case.c)?;
        let e = host.resolve(&case.e)?;
        let f = host.resolve(&case.f)?;
        let (cc, co) = (host.cca(&c, &f), host.oa(&c, &f));
        let (ec, eo) = (host.cca(&e, &f), host.oa(&e, &f));
        let k = CaseCounts {
            c_cca: host.filter_size(&cc),
            c_oa: host.filter_size(&co),
            e_cca: host.filter_size(&ec),
            e_oa: host.filter_size(&eo),
        };
        records.push(CaseRecord {
            index: i + 1,
            c: host.render(&c),
            e: host.render(&e),
            f: host.render(&f),
            c_cca_f: host.render(&cc),
            c_oa_f: host.render(&co),
            e_cca_f: host.render(&ec),
            e_oa_f: host.render(&eo),
            card_c_cca_f: k.c_cca.to_string(),
            card_c_oa_f: k.c_oa.to_string(),
            card_e_cca_f: k.e_cca.to_string(),
            card_e_oa_f: k.e_oa.to_string(),
        });
        counts.push(k);
    }
    let flat = bias_flat(&counts)?;
    let degenerate: Vec<usize> = counts
        .iter()
        .enumerate()
        .filter(|(_, c)| c.e_oa == c.e_cca)
        .map(|(i, _)| i + 1)
        .collect();
    let sharp = if degenerate.is_empty() || skip_degenerate {
        bias_sharp(&counts, true).ok()
    } else {
        None
    };
    Ok(BiasReport {
        reading: CASE_READING.to_string(),
        cases: records,
        flat: (&flat).into(),
        sharp: sharp.as_ref().map(Into::into),
        skipped_degenerate: skip_degenerate && !degenerate.is_empty(),
        degenerate,
    })
}

/// Audits a set-based structure, counting filters arithmetically on the
/// powerset carrier and enumerating them on the definable carrier.
pub fn audit_set(s: &SetRcl, cases: &[BiasCase], skip_degenerate: bool) -> Result<BiasReport> {
    match s.mode() {
        LatticeMode::Powerset => audit(s, cases, skip_degenerate),
        LatticeMode::Definable => audit(&s.materialize()?.structure, cases, skip_degenerate),
    }
}
