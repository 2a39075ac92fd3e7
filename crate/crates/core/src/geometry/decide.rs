//! Equivalence deciders.
//!
//! Geometric equivalence of finite structures is exact: `A` and `B` are
//! equivalent iff each embeds into a Cartesian power of the other, and that
//! is a point-separation question about two finite hom lists.
//!
//! Action-type equivalence is only semi-decided. A representation is
//! action-type equivalent to its faithful image, and geometric equivalence
//! implies action-type equivalence, so geometric equivalence of the two
//! faithful images is a sufficient condition. A bounded witness search is the
//! only way to refute.

use super::search::{find_at_witness, find_separating_qid, AtWitness, QidSeparation, Side};
use super::separation::{separate_group_points, separate_rep_points, Inseparable, Separation, SeparationCertificate};
use super::{SearchBounds, Verdict};
use crate::caps::Caps;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupHom};
use crate::rep::{FaithfulImage, RepHom, Representation};

/// Hom families realising both embeddings into Cartesian powers.
#[derive(Debug, Clone)]
pub struct GroupGeoCertificate {
    pub a_into_b: SeparationCertificate<GroupHom>,
    pub b_into_a: SeparationCertificate<GroupHom>,
}

#[derive(Debug, Clone)]
pub struct GeoCertificate {
    pub a_into_b: SeparationCertificate<RepHom>,
    pub b_into_a: SeparationCertificate<RepHom>,
}

/// Why one side does not embed into a power of the other.
#[derive(Debug, Clone)]
pub struct GeoRefutation {
    /// The side whose points are not separated.
    pub source: Side,
    pub pair: Inseparable,
    /// A quasi-identity telling the two apart, when the bounded scan finds one.
    pub qid: Option<QidSeparation>,
}

/// `R ∼at R̃`, `S ∼at S̃` and a geometric equivalence `R̃ ∼ S̃`.
#[derive(Debug, Clone)]
pub struct AtCertificate {
    pub first: FaithfulImage,
    pub second: FaithfulImage,
    pub quotients: GeoCertificate,
}

pub fn geo_equivalent_groups(
    a: &FiniteGroup,
    b: &FiniteGroup,
    caps: &Caps,
) -> Result<Verdict<GroupGeoCertificate, GeoRefutation>> {
    let refute = |source, pair| Verdict::NotEquivalent(GeoRefutation { source, pair, qid: None });
    let a_into_b = match separate_group_points(a, b, caps)? {
        Separation::Separated(c) => c,
        Separation::Inseparable(pair) => return Ok(refute(Side::First, pair)),
    };
    let b_into_a = match separate_group_points(b, a, caps)? {
        Separation::Separated(c) => c,
        Separation::Inseparable(pair) => return Ok(refute(Side::Second, pair)),
    };
    Ok(Verdict::Equivalent(GroupGeoCertificate { a_into_b, b_into_a }))
}

/// Geometric equivalence of two representations over the same field.
///
/// On refutation the bounded quasi-identity scan is run as well; its result
/// is informational, so a cap error there only drops the formula.
pub fn geo_equivalent_reps(
    a: &Representation,
    b: &Representation,
    caps: &Caps,
    bounds: &SearchBounds,
) -> Result<Verdict<GeoCertificate, GeoRefutation>> {
    let directions = [(a, b, Side::First), (b, a, Side::Second)];
    let mut certs = Vec::with_capacity(2);
    for (src, tgt, side) in directions {
        match separate_rep_points(src, tgt, caps)? {
            Separation::Separated(c) => certs.push(c),
            Separation::Inseparable(pair) => {
                let qid = find_separating_qid(a, b, bounds, caps).ok().flatten();
                return Ok(Verdict::NotEquivalent(GeoRefutation { source: side, pair, qid }));
            }
        }
    }
    let b_into_a = certs.pop().expect("two directions");
    let a_into_b = certs.pop().expect("two directions");
    Ok(Verdict::Equivalent(GeoCertificate { a_into_b, b_into_a }))
}

pub fn at_equivalent(
    r: &Representation,
    s: &Representation,
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<Verdict<AtCertificate, AtWitness>> {
    let first = r.faithful_image();
    let second = s.faithful_image();
    if first.quotient.field() == second.quotient.field() {
        if let Verdict::Equivalent(quotients) = geo_equivalent_reps(&first.quotient, &second.quotient, caps, bounds)? {
            return Ok(Verdict::Equivalent(AtCertificate { first, second, quotients }));
        }
    }
    match find_at_witness(r, s, bounds, caps)? {
        Some(w) => Ok(Verdict::NotEquivalent(w)),
        None => Ok(Verdict::Unknown(*bounds)),
    }
}
