//! The classification tables as data, with computed counterparts where they exist.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::fusion::{qdim, CategoryParams};
use crate::modular::{twist, BraidingParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum A2Name {
    RepZ2,
    SVec,
    Sem,
    SemBar,
}

impl A2Name {
    pub const ALL: [A2Name; 4] = [A2Name::RepZ2, A2Name::SVec, A2Name::Sem, A2Name::SemBar];

    /// The two `ℓ` at `k = 1` giving this category.
    pub fn ells(self) -> [u32; 2] {
        match self {
            A2Name::RepZ2 => [7, 11],
            A2Name::SVec => [1, 5],
            A2Name::Sem => [4, 8],
            A2Name::SemBar => [2, 10],
        }
    }

    pub fn params(self) -> BraidingParams {
        BraidingParams::plus(1, self.ells()[0] as i64).expect("valid at k = 1")
    }

    /// `θ_X · dim X` for the nontrivial simple; independent of the pivotal structure.
    pub fn twist_invariant(self) -> CyclotomicNumber {
        pointed_invariant(&self.params(), 1)
    }
}

impl fmt::Display for A2Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            A2Name::RepZ2 => "Rep(Z/2Z)",
            A2Name::SVec => "sVec",
            A2Name::Sem => "Sem",
            A2Name::SemBar => "SemBar",
        })
    }
}

impl Serialize for A2Name {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn pointed_invariant(bp: &BraidingParams, x: u32) -> CyclotomicNumber {
    twist(bp, x) * qdim(&bp.monoidal(), x).expect("x ≤ k")
}

/// The invertible-objects table, rows `ℓ mod 4`, columns `k mod 4`.
pub fn invertible_subcategory_by_table(k: u32, ell: u32) -> Result<A2Name> {
    use A2Name::*;
    let cell = match (ell % 4, k % 4) {
        (0, 1) | (0, 3) => Some(Sem),
        (2, 1) | (2, 3) => Some(SemBar),
        (1, 0) | (1, 3) | (3, 0) | (3, 1) => Some(RepZ2),
        (1, 1) | (1, 2) | (3, 2) | (3, 3) => Some(SVec),
        _ => None,
    };
    cell.ok_or_else(|| Error::UnreachableCell(format!("k ≡ {} and ℓ ≡ {} (mod 4)", k % 4, ell % 4)))
}

/// Matches `θ_{X_k} · dim X_k` against the four `A_2` categories.
pub fn invertible_subcategory_by_twist(bp: &BraidingParams) -> Result<A2Name> {
    let v = pointed_invariant(bp, bp.k());
    A2Name::ALL
        .into_iter()
        .find(|a| a.twist_invariant() == v)
        .ok_or_else(|| Error::InvalidParameters(format!("no A_2 category has twist invariant {v}")))
}

/// Both identifications; disagreement is an error.
pub fn invertible_subcategory(bp: &BraidingParams) -> Result<A2Name> {
    let table = invertible_subcategory_by_table(bp.k(), bp.ell())?;
    let computed = invertible_subcategory_by_twist(bp)?;
    if table != computed {
        return Err(Error::InvalidParameters(format!("{bp}: table gives {table}, twist gives {computed}")));
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Trivial,
    Z2,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Trivial => "{e}",
            Group::Z2 => "Z/2Z",
        })
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(Aut_⊗(C_{k,m}), Aut^br_⊗(C^br_{k,ℓ}))`, independent of `m` and `ℓ`.
pub fn autoequivalence_groups(k: u32) -> (Group, Group) {
    if k <= 2 {
        return (Group::Trivial, Group::Trivial);
    }
    match k % 4 {
        0 => (Group::Z2, Group::Trivial),
        2 => (Group::Z2, Group::Z2),
        _ => (Group::Trivial, Group::Trivial),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Commutativity {
    Yes,
    No,
    /// Depends on the braiding: commutative iff `kℓ ≡ 3 (mod 4)`.
    IfKEllIs3Mod4,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraObject {
    /// `A = ⊕ f^{(i)}`, listed by `i` (`0` is the unit).
    pub summands: Vec<u32>,
    pub module_category: String,
    pub commutative: Commutativity,
}

impl AlgebraObject {
    /// Commutativity in `C^br_{k,ℓ}`.
    pub fn commutative_in(&self, k: u32, ell: u32) -> bool {
        match self.commutative {
            Commutativity::Yes => true,
            Commutativity::No => false,
            Commutativity::IfKEllIs3Mod4 => (k * ell) % 4 == 3,
        }
    }
}

/// The rows of the algebra-objects table that apply to `C_{k,m}`.
pub fn algebra_objects(p: &CategoryParams) -> Vec<AlgebraObject> {
    let (k, m) = (p.k(), p.m());
    let mut out = Vec::new();
    if k % 2 == 0 {
        out.push(AlgebraObject {
            summands: vec![0, k],
            module_category: format!("D_{}", k / 2 + 2),
            commutative: if k % 4 == 0 { Commutativity::Yes } else { Commutativity::No },
        });
    }
    if k % 2 == 1 && m % 2 == 1 {
        out.push(AlgebraObject {
            summands: vec![0, k],
            module_category: format!("T_{}", (k + 1) / 2),
            commutative: Commutativity::IfKEllIs3Mod4,
        });
    }
    let exceptional = match k {
        10 => Some((vec![0, 6], "E_6", Commutativity::Yes)),
        16 => Some((vec![0, 8, 16], "E_7", Commutativity::No)),
        28 => Some((vec![0, 10, 18, 28], "E_8", Commutativity::Yes)),
        _ => None,
    };
    if let Some((summands, name, commutative)) = exceptional {
        out.push(AlgebraObject { summands, module_category: name.into(), commutative });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "atom", rename_all = "snake_case")]
pub enum CentreAtom {
    Braided { k: u32, m: u32 },
    BraidedReverse { k: u32, m: u32 },
    Adjoint { k: u32, m: u32 },
    AdjointReverse { k: u32, m: u32 },
    CentreOfVecZ2,
}

impl fmt::Display for CentreAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentreAtom::Braided { k, m } => write!(f, "C^br_{{{k},{m}}}"),
            CentreAtom::BraidedReverse { k, m } => write!(f, "C^br op_{{{k},{m}}}"),
            CentreAtom::Adjoint { k, m } => write!(f, "Ad(C^br_{{{k},{m}}})"),
            CentreAtom::AdjointReverse { k, m } => write!(f, "Ad(C^br op_{{{k},{m}}})"),
            CentreAtom::CentreOfVecZ2 => f.write_str("Z(Vec(Z/2Z))"),
        }
    }
}

/// A Deligne product of atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentreExpr {
    pub factors: Vec<CentreAtom>,
}

impl fmt::Display for CentreExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(" ⊠ "))
    }
}

/// `Z(C_{k,m})`.
pub fn drinfeld_centre(p: &CategoryParams) -> CentreExpr {
    let (k, m) = (p.k(), p.m());
    let factors = if k % 2 == 0 || m % 2 == 0 {
        vec![CentreAtom::Braided { k, m }, CentreAtom::BraidedReverse { k, m }]
    } else {
        vec![CentreAtom::Adjoint { k, m }, CentreAtom::AdjointReverse { k, m }, CentreAtom::CentreOfVecZ2]
    };
    CentreExpr { factors }
}

#[derive(Debug, Clone, Serialize)]
pub struct DaggerDescriptor {
    pub base: &'static str,
    pub family: &'static str,
    pub parameter: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Descriptors {
    pub pivotal_structures: usize,
    pub pivotal_signs: [&'static str; 2],
    pub spherical: bool,
    pub dagger: DaggerDescriptor,
    /// Depth of the equivariantisation fusion graph, for even `k ≥ 4`.
    pub equivariantisation_depth: Option<u32>,
}

pub fn descriptors(p: &CategoryParams) -> Descriptors {
    let k = p.k();
    Descriptors {
        pivotal_structures: 2,
        pivotal_signs: ["+", "-"],
        spherical: true,
        dagger: DaggerDescriptor {
            base: "conjugate-linear extension of reflection in a horizontal line",
            family: "phi -> lambda^((n-m)/2) phi^dagger for phi in Hom(X^n -> X^m)",
            parameter: "lambda in R^x",
        },
        equivariantisation_depth: (k % 2 == 0 && k >= 4).then_some(k / 2 + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_invariants_are_distinct() {
        let o = 4;
        let i = CyclotomicNumber::root_of_unity(o, 1);
        let expected = [
            CyclotomicNumber::one(o),
            CyclotomicNumber::from_integer(o, -1),
            -i.clone(),
            i,
        ];
        for (a, e) in A2Name::ALL.iter().zip(expected) {
            assert_eq!(a.twist_invariant(), e, "{a}");
        }
    }

    #[test]
    fn invertible_examples() {
        let bp = |k, l| BraidingParams::plus(k, l).unwrap();
        assert_eq!(invertible_subcategory(&bp(2, 1)).unwrap(), A2Name::SVec);
        assert_eq!(invertible_subcategory(&bp(3, 4)).unwrap(), A2Name::Sem);
        assert_eq!(invertible_subcategory(&bp(4, 1)).unwrap(), A2Name::RepZ2);
        assert!(matches!(invertible_subcategory_by_table(4, 2), Err(Error::UnreachableCell(_))));
    }

    #[test]
    fn tables() {
        assert_eq!(autoequivalence_groups(4), (Group::Z2, Group::Trivial));
        assert_eq!(autoequivalence_groups(6), (Group::Z2, Group::Z2));
        assert_eq!(autoequivalence_groups(2), (Group::Trivial, Group::Trivial));
        let e6 = algebra_objects(&CategoryParams::plus(10, 1).unwrap());
        assert!(e6.iter().any(|a| a.module_category == "E_6" && a.summands == [0, 6]));
        let d4 = algebra_objects(&CategoryParams::plus(4, 1).unwrap());
        assert_eq!(d4[0].module_category, "D_4");
        assert_eq!(d4[0].commutative, Commutativity::Yes);
        let c = |k, m| drinfeld_centre(&CategoryParams::plus(k, m).unwrap()).factors.len();
        assert_eq!((c(2, 1), c(3, 1), c(3, 2)), (2, 3, 2));
        assert_eq!(descriptors(&CategoryParams::plus(6, 1).unwrap()).equivariantisation_depth, Some(4));
    }
}
