//! Type 1 / Type 2 classification of simple Lie groups of noncompact type,
//! the product rule, and the Euler-number bounds for flat bundles over
//! products of hyperbolic surfaces.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupType {
    Type1,
    Type2,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::Type1 => "Type1",
            GroupType::Type2 => "Type2",
        })
    }
}

/// A simple group named in the notation of the classification table. The
/// parameters are stored as written: `SP(2n,R)`, `SO*(2n)`, `SU*(2n)` and
/// `SP(2n,C)` keep `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleGroupDescriptor {
    SuPq(u32, u32),
    SpReal(u32),
    SoPq(u32, u32),
    SpPq(u32, u32),
    SoStar(u32),
    G2Split,
    F4Split,
    F4Minus20,
    E6Split,
    E6Two,
    E6Minus14,
    E7Split,
    E7Minus5,
    E7Minus25,
    E8Split,
    SlReal(u32),
    SuStar(u32),
    E6Minus26,
    SlComplex(u32),
    SoComplex(u32),
    SpComplex(u32),
    G2Complex,
    F4Complex,
    E6Complex,
    E7Complex,
    E8Complex,
}

use SimpleGroupDescriptor as G;

impl fmt::Display for SimpleGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            G::SuPq(p, q) => write!(f, "SU({p},{q})"),
            G::SpReal(m) => write!(f, "SP({m},R)"),
            G::SoPq(p, q) => write!(f, "SO({p},{q})"),
            G::SpPq(p, q) => write!(f, "SP({p},{q})"),
            G::SoStar(m) => write!(f, "SO*({m})"),
            G::G2Split => f.write_str("G2(2)"),
            G::F4Split => f.write_str("F4(4)"),
            G::F4Minus20 => f.write_str("F4(-20)"),
            G::E6Split => f.write_str("E6(6)"),
            G::E6Two => f.write_str("E6(2)"),
            G::E6Minus14 => f.write_str("E6(-14)"),
            G::E7Split => f.write_str("E7(7)"),
            G::E7Minus5 => f.write_str("E7(-5)"),
            G::E7Minus25 => f.write_str("E7(-25)"),
            G::E8Split => f.write_str("E8(8)"),
            G::SlReal(n) => write!(f, "SL({n},R)"),
            G::SuStar(m) => write!(f, "SU*({m})"),
            G::E6Minus26 => f.write_str("E6(-26)"),
            G::SlComplex(n) => write!(f, "SL({n},C)"),
            G::SoComplex(n) => write!(f, "SO({n},C)"),
            G::SpComplex(m) => write!(f, "SP({m},C)"),
            G::G2Complex => f.write_str("G2(C)"),
            G::F4Complex => f.write_str("F4(C)"),
            G::E6Complex => f.write_str("E6(C)"),
            G::E7Complex => f.write_str("E7(C)"),
            G::E8Complex => f.write_str("E8(C)"),
        }
    }
}

impl FromStr for SimpleGroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized group name {s:?}"));
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_' && *c != '{' && *c != '}')
            .map(|c| match c {
                'ℝ' => 'R',
                'ℂ' => 'C',
                '−' => '-',
                _ => c.to_ascii_uppercase(),
            })
            .collect();
        let (head, args) = match compact.find('(') {
            Some(i) if compact.ends_with(')') => (&compact[..i], &compact[i + 1..compact.len() - 1]),
            _ => return Err(bad()),
        };
        let parts: Vec<&str> = args.split(',').collect();
        let int = |x: &str| x.parse::<u32>().map_err(|_| bad());
        let one = || if parts.len() == 1 { int(parts[0]) } else { Err(bad()) };
        let pair = || {
            if parts.len() == 2 {
                Ok((int(parts[0])?, int(parts[1])?))
            } else {
                Err(bad())
            }
        };
        let field = if parts.len() == 2 { Some(parts[1]) } else { None };
        let d = match (head, field) {
            ("SU", _) => G::SuPq(pair()?.0, pair()?.1),
            ("SL", Some("R")) => G::SlReal(int(parts[0])?),
            ("SL", Some("C")) => G::SlComplex(int(parts[0])?),
            ("SO", Some("C")) => G::SoComplex(int(parts[0])?),
            ("SP", Some("R")) => G::SpReal(int(parts[0])?),
            ("SP", Some("C")) => G::SpComplex(int(parts[0])?),
            ("SO", _) => G::SoPq(pair()?.0, pair()?.1),
            ("SP", _) => G::SpPq(pair()?.0, pair()?.1),
            ("SO*", _) => G::SoStar(one()?),
            ("SU*", _) => G::SuStar(one()?),
            ("G2", _) => match args {
                "2" => G::G2Split,
                "C" => G::G2Complex,
                _ => return Err(bad()),
            },
            ("F4", _) => match args {
                "4" => G::F4Split,
                "-20" => G::F4Minus20,
                "C" => G::F4Complex,
                _ => return Err(bad()),
            },
            ("E6", _) => match args {
                "6" => G::E6Split,
                "2" => G::E6Two,
                "-14" => G::E6Minus14,
                "-26" => G::E6Minus26,
                "C" => G::E6Complex,
                _ => return Err(bad()),
            },
            ("E7", _) => match args {
                "7" => G::E7Split,
                "-5" => G::E7Minus5,
                "-25" => G::E7Minus25,
                "C" => G::E7Complex,
                _ => return Err(bad()),
            },
            ("E8", _) => match args {
                "8" => G::E8Split,
                "C" => G::E8Complex,
                _ => return Err(bad()),
            },
            _ => return Err(bad()),
        };
        Ok(d)
    }
}

impl Serialize for SimpleGroupDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleGroupDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn even_half(m: u32) -> Option<u32> {
    m.is_multiple_of(2).then_some(m / 2)
}

fn out_of_table(g: &SimpleGroupDescriptor, why: &str) -> Error {
    Error::OutOfTable(format!("{g}: {why}"))
}

/// Table row for `g`, or `OutOfTable` when the parameters fall outside the
/// row constraints.
pub fn lookup_type(g: &SimpleGroupDescriptor) -> Result<GroupType> {
    let need = |ok: bool, why: &str| if ok { Ok(()) } else { Err(out_of_table(g, why)) };
    let t = match *g {
        G::SuPq(p, q) => {
            need(p >= 1 && q >= 1 && p + q >= 2, "SU(p,q) needs p,q >= 1 and p+q >= 2")?;
            GroupType::Type1
        }
        G::SpReal(m) => {
            need(even_half(m).is_some_and(|n| n >= 2), "SP(2n,R) needs n >= 2")?;
            GroupType::Type1
        }
        G::SoPq(p, 1) => {
            need(p >= 2, "SO(n,1) needs n >= 2")?;
            GroupType::Type2
        }
        G::SoPq(p, q) => {
            need(
                p >= 2 && q >= 2 && (p, q) != (2, 2) && (p, q) != (3, 3),
                "SO(p,q) needs p,q >= 2 and (p,q) not (2,2) or (3,3)",
            )?;
            GroupType::Type1
        }
        G::SpPq(p, q) => {
            need(p >= 1 && q >= 1, "SP(p,q) needs p,q >= 1")?;
            GroupType::Type1
        }
        G::SoStar(m) => {
            need(even_half(m).is_some_and(|n| n >= 3), "SO*(2n) needs n >= 3")?;
            GroupType::Type1
        }
        G::G2Split
        | G::F4Split
        | G::F4Minus20
        | G::E6Split
        | G::E6Two
        | G::E6Minus14
        | G::E7Split
        | G::E7Minus5
        | G::E7Minus25
        | G::E8Split => GroupType::Type1,
        G::SlReal(n) => {
            need(n >= 2, "SL(n,R) needs n >= 2")?;
            GroupType::Type2
        }
        G::SuStar(m) => {
            need(even_half(m).is_some_and(|n| n >= 2), "SU*(2n) needs n >= 2")?;
            GroupType::Type2
        }
        G::SlComplex(n) | G::SoComplex(n) => {
            need(n >= 2, "needs n >= 2")?;
            GroupType::Type2
        }
        G::SpComplex(m) => {
            need(even_half(m).is_some_and(|n| n >= 2), "SP(2n,C) needs n >= 2")?;
            GroupType::Type2
        }
        G::E6Minus26 | G::G2Complex | G::F4Complex | G::E6Complex | G::E7Complex | G::E8Complex => {
            GroupType::Type2
        }
    };
    Ok(t)
}

/// Remarks attached to a lookup, such as the `SU(1,1) = SL(2,R)` alias.
pub fn lookup_notes(g: &SimpleGroupDescriptor) -> Vec<String> {
    match *g {
        G::SuPq(1, 1) => vec![
            "SU(1,1) is isomorphic to SL(2,R), which the table lists as Type 2; \
             the SU(p,q) row is applied literally"
                .into(),
        ],
        _ => Vec::new(),
    }
}

/// Type 1 iff some factor is Type 1.
pub fn product_type(factors: &[SimpleGroupDescriptor]) -> Result<GroupType> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let mut t = GroupType::Type2;
    for g in factors {
        if lookup_type(g)? == GroupType::Type1 {
            t = GroupType::Type1;
        }
    }
    Ok(t)
}

/// One row of the table with its constraint text and sample members.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub row: &'static str,
    pub constraint: &'static str,
    #[serde(rename = "type")]
    pub group_type: GroupType,
    pub samples: Vec<SimpleGroupDescriptor>,
}

/// Every row of the table, three parameter samples per parameterized row.
pub fn table_rows() -> Vec<TableRow> {
    let row = |row, constraint, group_type, samples: &[G]| TableRow {
        row,
        constraint,
        group_type,
        samples: samples.to_vec(),
    };
    use GroupType::{Type1, Type2};
    vec![
        row("SU(p,q)", "p,q >= 1 and p+q >= 2", Type1, &[G::SuPq(2, 1), G::SuPq(3, 2), G::SuPq(4, 4)]),
        row("SP(2n,R)", "n >= 2", Type1, &[G::SpReal(4), G::SpReal(6), G::SpReal(10)]),
        row("SO(p,q)", "p,q >= 2 and (p,q) not (2,2) or (3,3)", Type1, &[G::SoPq(2, 3), G::SoPq(3, 4), G::SoPq(5, 5)]),
        row("SP(p,q)", "p,q >= 1", Type1, &[G::SpPq(1, 1), G::SpPq(2, 1), G::SpPq(3, 2)]),
        row("SO*(2n)", "n >= 3", Type1, &[G::SoStar(6), G::SoStar(8), G::SoStar(12)]),
        row("G2(2)", "", Type1, &[G::G2Split]),
        row("F4(4)", "", Type1, &[G::F4Split]),
        row("F4(-20)", "", Type1, &[G::F4Minus20]),
        row("E6(6)", "", Type1, &[G::E6Split]),
        row("E6(2)", "", Type1, &[G::E6Two]),
        row("E6(-14)", "", Type1, &[G::E6Minus14]),
        row("E7(7)", "", Type1, &[G::E7Split]),
        row("E7(-5)", "", Type1, &[G::E7Minus5]),
        row("E7(-25)", "", Type1, &[G::E7Minus25]),
        row("E8(8)", "", Type1, &[G::E8Split]),
        row("SL(n,R)", "n >= 2", Type2, &[G::SlReal(2), G::SlReal(4), G::SlReal(7)]),
        row("SO(n,1)", "n >= 2", Type2, &[G::SoPq(2, 1), G::SoPq(3, 1), G::SoPq(8, 1)]),
        row("SU*(2n)", "n >= 2", Type2, &[G::SuStar(4), G::SuStar(6), G::SuStar(10)]),
        row("E6(-26)", "", Type2, &[G::E6Minus26]),
        row("SL(n,C)", "n >= 2", Type2, &[G::SlComplex(2), G::SlComplex(3), G::SlComplex(6)]),
        row("SO(n,C)", "n >= 2", Type2, &[G::SoComplex(2), G::SoComplex(5), G::SoComplex(8)]),
        row("SP(2n,C)", "n >= 2", Type2, &[G::SpComplex(4), G::SpComplex(6), G::SpComplex(10)]),
        row("G2(C)", "", Type2, &[G::G2Complex]),
        row("F4(C)", "", Type2, &[G::F4Complex]),
        row("E6(C)", "", Type2, &[G::E6Complex]),
        row("E7(C)", "", Type2, &[G::E7Complex]),
        row("E8(C)", "", Type2, &[G::E8Complex]),
    ]
}

/// A flat oriented bundle over a closed quotient of `k` copies of the
/// hyperbolic plane, with `euler_tm` the Euler number of the tangent bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorWoodQuery {
    k: u32,
    euler_tm: i64,
}

impl MilnorWoodQuery {
    pub fn new(k: u32, euler_tm: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::IllegalParameter("k must be at least 1".into()));
        }
        Ok(Self { k, euler_tm })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn euler_tm(&self) -> i64 {
        self.euler_tm
    }
}

/// `|eu(TM)| / 2^k`.
pub fn milnor_wood_bound(query: &MilnorWoodQuery) -> Q {
    let two_k = BigInt::one() << query.k as usize;
    Q::new(BigInt::from(query.euler_tm).abs(), two_k)
}

/// `true` iff a bundle with Euler number `euler_e` violates the bound and
/// so admits no flat structure.
pub fn obstructs_flat(query: &MilnorWoodQuery, euler_e: i64) -> bool {
    Q::from_integer(BigInt::from(euler_e).abs()) > milnor_wood_bound(query)
}

/// `(2k-1)!! = 1 * 3 * ... * (2k-1)`.
pub fn double_factorial_odd(k: u32) -> f64 {
    (1..=k).map(|i| f64::from(2 * i - 1)).product()
}

/// `pi^k / (2^k (2k-1)!! v_2k)` where `v_2k` is the volume of the regular
/// ideal `2k`-simplex. For `k = 1` the area `pi` of the ideal triangle is used
/// when `v_2k` is not given.
pub fn smillie_ratio(k: u32, v_2k: Option<f64>) -> Result<f64> {
    if k == 0 {
        return Err(Error::IllegalParameter("k must be at least 1".into()));
    }
    let v = match v_2k {
        Some(v) => v,
        None if k == 1 => std::f64::consts::PI,
        None => return Err(Error::MissingVolume(k)),
    };
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::NonPositiveVolume(v.to_string()));
    }
    let k_i = i32::try_from(k).map_err(|_| Error::IllegalParameter("k too large".into()))?;
    Ok(std::f64::consts::PI.powi(k_i) / (2f64.powi(k_i) * double_factorial_odd(k) * v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{q, q_frac};

    fn g(s: &str) -> SimpleGroupDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["SU(3,2)", "SL(5,R)", "E6(-26)", "SL(2,C)", "SP(4,R)", "SO*(6)", "SU*(4)", "SP(2,1)", "G2(C)"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("sl(5, ℝ)"), G::SlReal(5));
        assert_eq!(g("E_{6(-26)}"), G::E6Minus26);
        assert!("SX(3)".parse::<SimpleGroupDescriptor>().is_err());
        assert!("E6(3)".parse::<SimpleGroupDescriptor>().is_err());
        assert!("SU(3)".parse::<SimpleGroupDescriptor>().is_err());
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(lookup_type(&g("SU(2,1)")).unwrap(), GroupType::Type1);
        assert_eq!(lookup_type(&g("SL(4,R)")).unwrap(), GroupType::Type2);
        assert_eq!(lookup_type(&g("E8(C)")).unwrap(), GroupType::Type2);
        assert_eq!(lookup_type(&g("SO(4,1)")).unwrap(), GroupType::Type2);
        assert_eq!(lookup_type(&g("SU(1,1)")).unwrap(), GroupType::Type1);
        assert_eq!(lookup_notes(&g("SU(1,1)")).len(), 1);
    }

    #[test]
    fn excluded_parameters() {
        for s in ["SO(2,2)", "SO(3,3)", "SO(1,4)", "SP(2,R)", "SP(5,R)", "SO*(4)", "SL(1,R)", "SU(0,2)"] {
            assert!(matches!(lookup_type(&g(s)), Err(Error::OutOfTable(_))), "{s}");
        }
    }

    #[test]
    fn products() {
        assert_eq!(product_type(&[g("SL(3,R)"), g("SU(2,1)")]).unwrap(), GroupType::Type1);
        assert_eq!(product_type(&[g("SL(3,R)"), g("SL(2,C)")]).unwrap(), GroupType::Type2);
        assert!(matches!(product_type(&[]), Err(Error::EmptyProduct)));
        assert!(product_type(&[g("SL(3,R)"), g("SO(2,2)")]).is_err());
    }

    #[test]
    fn table_samples_land_in_their_rows() {
        let rows = table_rows();
        assert_eq!(rows.len(), 27);
        for row in rows {
            for s in &row.samples {
                assert_eq!(lookup_type(s).unwrap(), row.group_type, "{s}");
            }
        }
    }

    #[test]
    fn milnor_wood_examples() {
        let genus_two = MilnorWoodQuery::new(1, -2).unwrap();
        assert_eq!(milnor_wood_bound(&genus_two), q(1));
        assert!(obstructs_flat(&genus_two, -2));
        assert!(!obstructs_flat(&genus_two, 1));
        assert_eq!(milnor_wood_bound(&MilnorWoodQuery::new(2, 4).unwrap()), q(1));
        assert_eq!(milnor_wood_bound(&MilnorWoodQuery::new(1, 0).unwrap()), q(0));
        assert_eq!(milnor_wood_bound(&MilnorWoodQuery::new(3, 6).unwrap()), q_frac(3, 4));
        assert!(MilnorWoodQuery::new(0, 2).is_err());
    }

    #[test]
    fn smillie_examples() {
        assert!((smillie_ratio(1, None).unwrap() - 0.5).abs() < 1e-12);
        let two_pi = 2.0 * std::f64::consts::PI;
        assert!((smillie_ratio(1, Some(two_pi)).unwrap() - 0.25).abs() < 1e-12);
        assert!(smillie_ratio(2, Some(0.268_935)).unwrap() > 1.0);
        assert!(matches!(smillie_ratio(2, None), Err(Error::MissingVolume(2))));
        assert!(matches!(smillie_ratio(1, Some(0.0)), Err(Error::NonPositiveVolume(_))));
        assert_eq!(double_factorial_odd(3), 15.0);
    }
}
