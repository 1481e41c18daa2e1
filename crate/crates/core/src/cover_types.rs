//! Ramification types of the induced covers `φ: P¹ → P¹` of degree `n`.
//!
//! A branch point is written as the partition of its ramified points; parts
//! equal to 1 (unramified points) are never stored.

use std::fmt;

use crate::error::{Error, Result};

/// Ramification indices (parts ≥ 2, descending) over each branch point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RamificationType {
    pub degree: u32,
    pub branch_points: Vec<Vec<u32>>,
}

impl RamificationType {
    /// Builds a type, dropping parts equal to 1 and empty fibers.
    pub fn new(degree: u32, branch_points: Vec<Vec<u32>>) -> Result<Self> {
        let mut out = Vec::new();
        for bp in branch_points {
            if bp.contains(&0) {
                return Err(Error::Precondition("ramification index 0".into()));
            }
            let mut parts: Vec<u32> = bp.into_iter().filter(|&e| e >= 2).collect();
            if parts.iter().sum::<u32>() > degree {
                return Err(Error::Precondition(format!(
                    "fiber {parts:?} exceeds degree {degree}"
                )));
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            if !parts.is_empty() {
                out.push(parts);
            }
        }
        Ok(RamificationType {
            degree,
            branch_points: out,
        })
    }

    /// `Σ (e − 1)` over all ramified points.
    pub fn rh_sum(&self) -> u32 {
        self.branch_points.iter().flatten().map(|e| e - 1).sum()
    }

    /// Odd ramification indices in fiber `k`, counting the unramified points.
    pub fn odd_points(&self, k: usize) -> u32 {
        let bp = &self.branch_points[k];
        let unramified = self.degree - bp.iter().sum::<u32>();
        unramified + bp.iter().filter(|&&e| e % 2 == 1).count() as u32
    }
}

fn fmt_partition(p: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("[")?;
    let mut i = 0;
    let mut first = true;
    while i < p.len() {
        let run = p[i..].iter().take_while(|&&e| e == p[i]).count();
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if run == 1 {
            write!(f, "{}", p[i])?;
        } else {
            write!(f, "{}^{}", p[i], run)?;
        }
        i += run;
    }
    f.write_str("]")
}

impl fmt::Display for RamificationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, bp) in self.branch_points.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            fmt_partition(bp, f)?;
        }
        Ok(())
    }
}

/// Case label of a ramification template.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverCase {
    /// Odd degree: `I`, `II.i`–`II.iii`, `III.i`, `III.ii`.
    Odd(OddCase),
    /// Even degree: family `I`–`III` (1–3) with degeneration index, `None` for generic.
    Even {
        family: u8,
        degeneration: Option<u8>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OddCase {
    I,
    IIi,
    IIii,
    IIiii,
    IIIi,
    IIIii,
}

const ROMAN: [&str; 4] = ["", "I", "II", "III"];

impl CoverCase {
    pub fn label(&self) -> String {
        match self {
            CoverCase::Odd(c) => match c {
                OddCase::I => "I",
                OddCase::IIi => "II.i",
                OddCase::IIii => "II.ii",
                OddCase::IIiii => "II.iii",
                OddCase::IIIi => "III.i",
                OddCase::IIIii => "III.ii",
            }
            .to_string(),
            CoverCase::Even {
                family,
                degeneration: None,
            } => ROMAN[*family as usize].to_string(),
            CoverCase::Even {
                family,
                degeneration: Some(d),
            } => format!("{}.{d}", ROMAN[*family as usize]),
        }
    }

    /// Whether the case is a degeneration (two branch points collapsed).
    pub fn is_degenerate(&self) -> bool {
        match self {
            CoverCase::Odd(c) => *c != OddCase::I,
            CoverCase::Even { degeneration, .. } => degeneration.is_some(),
        }
    }

    /// Parses a label such as `II.iii` (odd) or `I.3` (even).
    pub fn parse(label: &str, parity: Parity) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown case label {label:?}"));
        match parity {
            Parity::Odd => {
                let c = match label {
                    "I" => OddCase::I,
                    "II.i" => OddCase::IIi,
                    "II.ii" => OddCase::IIii,
                    "II.iii" => OddCase::IIiii,
                    "III.i" => OddCase::IIIi,
                    "III.ii" => OddCase::IIIii,
                    _ => return Err(bad()),
                };
                Ok(CoverCase::Odd(c))
            }
            Parity::Even => {
                let (fam, deg) = match label.split_once('.') {
                    Some((f, d)) => (f, Some(d.parse::<u8>().map_err(|_| bad())?)),
                    None => (label, None),
                };
                let family = ROMAN[1..].iter().position(|r| *r == fam).ok_or_else(bad)? as u8 + 1;
                Ok(CoverCase::Even {
                    family,
                    degeneration: deg,
                })
            }
        }
    }
}

impl fmt::Display for CoverCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// A fiber template: an optional leading index (`(4)` or `(3)`) followed by
/// `(2)^{(n + offset)/2}`.
#[derive(Clone, Copy)]
struct Slot {
    lead: Option<u32>,
    offset: i64,
}

const fn s(offset: i64) -> Slot {
    Slot { lead: None, offset }
}

const fn l(lead: u32, offset: i64) -> Slot {
    Slot {
        lead: Some(lead),
        offset,
    }
}

/// A single `(2)`, independent of `n`.
const ONE: Slot = Slot {
    lead: Some(2),
    offset: i64::MIN,
};

const ODD_TEMPLATES: [(OddCase, &[Slot]); 6] = [
    (OddCase::I, &[s(-1), s(-1), s(-1), s(-3), ONE]),
    (OddCase::IIi, &[s(-1), s(-1), s(-1), l(4, -7)]),
    (OddCase::IIii, &[s(-1), s(-1), s(-1), s(-1)]),
    (OddCase::IIiii, &[s(-1), s(-1), l(4, -5), s(-3)]),
    (OddCase::IIIi, &[s(-1), s(-1), s(-1), l(3, -5)]),
    (OddCase::IIIii, &[s(-1), s(-1), l(3, -3), s(-3)]),
];

type EvenTemplate = (u8, Option<u8>, &'static [Slot]);

const EVEN_TEMPLATES: [EvenTemplate; 18] = [
    (1, None, &[s(-2), s(-2), s(-2), s(0), ONE]),
    (2, None, &[s(-4), s(-2), s(0), s(0), ONE]),
    (3, None, &[s(-6), s(0), s(0), s(0), ONE]),
    (1, Some(1), &[s(0), s(-2), s(-2), s(0)]),
    (1, Some(2), &[s(-2), s(-2), l(4, -6), s(0)]),
    (1, Some(3), &[s(-2), s(-2), s(-2), l(4, -4)]),
    (1, Some(4), &[l(3, -4), s(-2), s(-2), s(0)]),
    (2, Some(1), &[s(-2), s(-2), s(0), s(0)]),
    (2, Some(2), &[s(-4), s(0), s(0), s(0)]),
    (2, Some(3), &[l(4, -8), s(-2), s(0), s(0)]),
    (2, Some(4), &[s(-4), l(4, -6), s(0), s(0)]),
    (2, Some(5), &[s(-4), s(-2), s(-4), s(0)]),
    (2, Some(6), &[l(3, -6), s(-2), l(4, 0), s(0)]),
    (2, Some(7), &[s(-4), l(3, -4), s(0), s(0)]),
    (3, Some(1), &[s(-4), s(0), s(0), l(4, 0)]),
    (3, Some(2), &[s(-6), l(4, -4), s(0), s(0)]),
    (3, Some(3), &[s(0), s(0), s(0), l(4, -10)]),
    (3, Some(4), &[l(3, -8), s(0), s(0), s(0)]),
];

/// Why a template does not yield a type in a given degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmissionReason {
    /// Some exponent `(n + offset)/2` is negative.
    NegativeExponent { offset: i64 },
    /// The instantiated fibers do not fit in degree `n`.
    FiberTooLarge,
    /// `Σ(e − 1) ≠ 2n − 2`.
    RiemannHurwitz { sum: u32, expected: u32 },
}

/// A template that was instantiated but not emitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omission {
    pub case: CoverCase,
    pub reason: OmissionReason,
    /// The raw instantiation, when the exponents are nonnegative.
    pub raw: Option<Vec<Vec<u32>>>,
}

/// Emitted types together with the omitted templates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamReport {
    pub degree: u32,
    pub types: Vec<(CoverCase, RamificationType)>,
    pub omitted: Vec<Omission>,
}

fn instantiate(n: u32, slots: &[Slot]) -> std::result::Result<Vec<Vec<u32>>, i64> {
    slots
        .iter()
        .map(|slot| {
            if slot.offset == i64::MIN {
                return Ok(slot.lead.into_iter().collect());
            }
            let twice = n as i64 + slot.offset;
            if twice < 0 {
                return Err(slot.offset);
            }
            let mut parts: Vec<u32> = slot.lead.into_iter().collect();
            parts.extend(std::iter::repeat_n(2, (twice / 2) as usize));
            Ok(parts)
        })
        .collect()
}

fn build(n: u32, templates: impl Iterator<Item = (CoverCase, &'static [Slot])>) -> RamReport {
    let mut types = Vec::new();
    let mut omitted = Vec::new();
    for (case, slots) in templates {
        let raw = match instantiate(n, slots) {
            Ok(raw) => raw,
            Err(offset) => {
                omitted.push(Omission {
                    case,
                    reason: OmissionReason::NegativeExponent { offset },
                    raw: None,
                });
                continue;
            }
        };
        let Ok(t) = RamificationType::new(n, raw.clone()) else {
            omitted.push(Omission {
                case,
                reason: OmissionReason::FiberTooLarge,
                raw: Some(raw),
            });
            continue;
        };
        if !rh_check(&t) {
            let reason = OmissionReason::RiemannHurwitz {
                sum: t.rh_sum(),
                expected: 2 * n - 2,
            };
            omitted.push(Omission {
                case,
                reason,
                raw: Some(raw),
            });
            continue;
        }
        types.push((case, t));
    }
    types.sort_by(|(a, s), (b, t)| (a.label(), s).cmp(&(b.label(), t)));
    RamReport {
        degree: n,
        types,
        omitted,
    }
}

/// Instantiated templates for odd `n ≥ 3`, with omissions.
pub fn ram_report_odd(n: u32) -> Result<RamReport> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::Precondition(format!(
            "odd degree ≥ 3 expected, got {n}"
        )));
    }
    Ok(build(
        n,
        ODD_TEMPLATES.iter().map(|(c, s)| (CoverCase::Odd(*c), *s)),
    ))
}

/// Instantiated templates for even `n ≥ 4`, with omissions.
pub fn ram_report_even(n: u32) -> Result<RamReport> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::Precondition(format!(
            "even degree ≥ 4 expected, got {n}"
        )));
    }
    let templates = EVEN_TEMPLATES.iter().map(|(family, degeneration, s)| {
        (
            CoverCase::Even {
                family: *family,
                degeneration: *degeneration,
            },
            *s,
        )
    });
    Ok(build(n, templates))
}

/// Report for either parity.
pub fn ram_report(n: u32) -> Result<RamReport> {
    match Parity::of(n) {
        Parity::Odd => ram_report_odd(n),
        Parity::Even => ram_report_even(n),
    }
}

/// Admissible types for odd `n ≥ 3`, sorted by case label then fibers.
pub fn ram_types_odd(n: u32) -> Result<Vec<(CoverCase, RamificationType)>> {
    ram_report_odd(n).map(|r| r.types)
}

/// Admissible types for even `n ≥ 4`, sorted by case label then fibers.
pub fn ram_types_even(n: u32) -> Result<Vec<(CoverCase, RamificationType)>> {
    ram_report_even(n).map(|r| r.types)
}

/// Riemann–Hurwitz for `P¹ → P¹`: `Σ(e − 1) = 2n − 2`.
pub fn rh_check(t: &RamificationType) -> bool {
    t.rh_sum() + 2 == 2 * t.degree
}

/// Whether four fibers can be chosen as the images of the 2-torsion points
/// with a consistent Weierstrass distribution.
///
/// The number of odd ramification indices in a fiber (unramified points
/// included) bounds the Weierstrass points over it and shares their parity:
/// odd for odd `n`, even for even `n`. Fibers not listed are unramified and
/// contribute `n` odd points. The check succeeds when some choice of four
/// fibers has the required parities and at most 6 odd points in total, with
/// the remainder even (Weierstrass points of even index come in pairs).
pub fn weierstrass_parity_check(t: &RamificationType, parity: Parity) -> bool {
    let want = match parity {
        Parity::Odd => 1,
        Parity::Even => 0,
    };
    let mut counts: Vec<u32> = (0..t.branch_points.len())
        .map(|k| t.odd_points(k))
        .collect();
    counts.extend(std::iter::repeat_n(t.degree, 4));
    let m = counts.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let pick = [counts[a], counts[b], counts[c], counts[d]];
                    let total: u32 = pick.iter().sum();
                    if pick.iter().all(|x| x % 2 == want) && total <= 6 && total.is_multiple_of(2) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
