//! Point separation by homomorphism families.
//!
//! A finite structure `A` embeds into a Cartesian power of `B` exactly when
//! the homomorphisms `A → B` separate the points of `A`; the embedding is
//! `a ↦ (φ(a))_φ`. Both structures are finite, so the full hom list is a
//! finite family and the check is exact. The certificate keeps a small
//! subfamily chosen greedily.

use std::collections::BTreeSet;

use crate::caps::Caps;
use crate::error::Result;
use crate::field::{Matrix, Vector};
use crate::group::{enumerate_group_homs, FiniteGroup, GroupHom};
use crate::rep::{enumerate_rep_homs, RepHom, Representation};

/// A hom family that is jointly injective on every sort of the source.
#[derive(Debug, Clone)]
pub struct SeparationCertificate<H> {
    pub homs: Vec<H>,
    /// One line per hom: what it separated when it was picked.
    pub notes: Vec<String>,
}

/// Points that no homomorphism tells apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inseparable {
    /// Two group elements, by index.
    Group(usize, usize),
    /// A nonzero vector killed by every `α`; by linearity it cannot be told apart from `0`.
    Vector(Vector),
}

#[derive(Debug, Clone)]
pub enum Separation<H> {
    Separated(SeparationCertificate<H>),
    Inseparable(Inseparable),
}

impl<H> Separation<H> {
    pub fn certificate(&self) -> Option<&SeparationCertificate<H>> {
        match self {
            Separation::Separated(c) => Some(c),
            Separation::Inseparable(_) => None,
        }
    }
}

fn group_pairs(n: usize) -> BTreeSet<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn separated_by(beta: &[usize], pairs: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    pairs.iter().copied().filter(|&(i, j)| beta[i] != beta[j]).collect()
}

/// Basis of `{v ∈ span(basis) : v · a = 0}`.
fn restrict_kernel(basis: &[Vector], a: &Matrix) -> Vec<Vector> {
    if basis.is_empty() {
        return Vec::new();
    }
    let field = a.field();
    let dim = basis[0].dim();
    let rows: Vec<u32> = basis.iter().flat_map(|v| v.coords().to_vec()).collect();
    let b = Matrix::new(field, basis.len(), dim, rows).expect("sized");
    b.mul(a).left_kernel().iter().map(|c| c.mul_matrix(&b)).collect()
}

fn full_basis(rep: &Representation) -> Vec<Vector> {
    (0..rep.dim()).map(|i| Vector::basis(rep.field(), rep.dim(), i)).collect()
}

/// Index of the hom with the best positive score. Ties go to the earliest
/// group hom and, within it, to the latest (largest) matrix.
fn best_pick<H>(homs: &[H], score: impl Fn(&H) -> usize, same_group_part: impl Fn(&H, &H) -> bool) -> usize {
    let mut best: Option<(usize, usize)> = None;
    for (i, h) in homs.iter().enumerate() {
        let s = score(h);
        if s == 0 {
            continue;
        }
        best = match best {
            Some((bs, bi)) if s < bs || (s == bs && !same_group_part(h, &homs[bi])) => Some((bs, bi)),
            _ => Some((s, i)),
        };
    }
    best.expect("the full family separates").1
}

/// Whether `G → H` homomorphisms separate the points of `G`.
pub fn separate_group_points(source: &FiniteGroup, target: &FiniteGroup, caps: &Caps) -> Result<Separation<GroupHom>> {
    let homs = enumerate_group_homs(source, target, caps.max_hom_candidates)?;
    let mut pending = group_pairs(source.order());
    for h in &homs {
        pending = &pending - &separated_by(h.image(), &pending);
    }
    if let Some(&(i, j)) = pending.iter().next() {
        return Ok(Separation::Inseparable(Inseparable::Group(i, j)));
    }

    let mut pending = group_pairs(source.order());
    let mut cert = SeparationCertificate { homs: Vec::new(), notes: Vec::new() };
    while !pending.is_empty() {
        let i = best_pick(&homs, |h| separated_by(h.image(), &pending).len(), |a, b| a.image() == b.image());
        let newly = separated_by(homs[i].image(), &pending);
        pending = &pending - &newly;
        cert.notes.push(format!("{} separates {}", homs[i].describe(), describe_pairs(source, &newly)));
        cert.homs.push(homs[i].clone());
    }
    Ok(Separation::Separated(cert))
}

/// Whether `R → S` homomorphisms separate the points of `R` on both sorts.
pub fn separate_rep_points(
    source: &Representation,
    target: &Representation,
    caps: &Caps,
) -> Result<Separation<RepHom>> {
    let homs = enumerate_rep_homs(source, target, caps)?;
    let mut pending = group_pairs(source.group().order());
    let mut kernel = full_basis(source);
    for h in &homs {
        pending = &pending - &separated_by(h.grouphom().image(), &pending);
        kernel = restrict_kernel(&kernel, h.matrix());
    }
    if let Some(&(i, j)) = pending.iter().next() {
        return Ok(Separation::Inseparable(Inseparable::Group(i, j)));
    }
    if let Some(v) = kernel.into_iter().next() {
        return Ok(Separation::Inseparable(Inseparable::Vector(v)));
    }

    let mut pending = group_pairs(source.group().order());
    let mut kernel = full_basis(source);
    let mut cert = SeparationCertificate { homs: Vec::new(), notes: Vec::new() };
    while !pending.is_empty() || !kernel.is_empty() {
        let i = best_pick(
            &homs,
            |h| {
                separated_by(h.grouphom().image(), &pending).len() + kernel.len()
                    - restrict_kernel(&kernel, h.matrix()).len()
            },
            |a, b| a.grouphom() == b.grouphom(),
        );
        let h = &homs[i];
        let newly = separated_by(h.grouphom().image(), &pending);
        pending = &pending - &newly;
        let before = kernel.len();
        kernel = restrict_kernel(&kernel, h.matrix());
        cert.notes.push(format!(
            "{} separates {}; common vector kernel dim {} -> {}",
            h.describe(),
            describe_pairs(source.group(), &newly),
            before,
            kernel.len()
        ));
        cert.homs.push(h.clone());
    }
    Ok(Separation::Separated(cert))
}

fn describe_pairs(g: &FiniteGroup, pairs: &BTreeSet<(usize, usize)>) -> String {
    if pairs.is_empty() {
        return "no new group pairs".into();
    }
    pairs.iter().map(|&(i, j)| format!("({},{})", g.name(i), g.name(j))).collect::<Vec<_>>().join(" ")
}

/// Independent re-check of a group certificate: every map is a
/// homomorphism (own table sweep) and every pair of distinct elements is
/// split by some map.
pub fn verify_group_certificate(
    source: &FiniteGroup,
    target: &FiniteGroup,
    cert: &SeparationCertificate<GroupHom>,
) -> std::result::Result<(), String> {
    for (k, h) in cert.homs.iter().enumerate() {
        if h.domain() != source || h.codomain() != target {
            return Err(format!("map {k} has the wrong domain or codomain"));
        }
        let img = h.image();
        for a in source.elements() {
            for b in source.elements() {
                if img[source.mul(a, b)] != target.mul(img[a], img[b]) {
                    return Err(format!("map {k} breaks the product {}·{}", source.name(a), source.name(b)));
                }
            }
        }
    }
    for a in source.elements() {
        for b in a + 1..source.order() {
            if cert.homs.iter().all(|h| h.image()[a] == h.image()[b]) {
                return Err(format!("{} and {} are not separated", source.name(a), source.name(b)));
            }
        }
    }
    Ok(())
}

/// Independent re-check of a representation certificate.
///
/// Equivariance is checked pointwise, `α(v ∘ g) = α(v) ∘ β(g)` on every
/// vector (or on a basis when the space is large), instead of through the
/// matrix identity used by the enumerator. Injectivity on vectors is checked
/// by brute force over all nonzero vectors when `|V| ≤ 4096`, and by the
/// rank of the stacked matrices otherwise.
pub fn verify_rep_certificate(
    source: &Representation,
    target: &Representation,
    cert: &SeparationCertificate<RepHom>,
) -> std::result::Result<(), String> {
    const BRUTE_FORCE_LIMIT: u128 = 4096;
    let small = source.space_size() <= BRUTE_FORCE_LIMIT;
    let probe: Vec<Vector> = if small { source.vectors().collect() } else { full_basis(source) };
    let group_homs: Vec<GroupHom> = cert.homs.iter().map(|h| h.grouphom().clone()).collect();
    let group_cert = SeparationCertificate { homs: group_homs, notes: Vec::new() };
    for (k, h) in cert.homs.iter().enumerate() {
        if h.source() != source || h.target() != target {
            return Err(format!("hom {k} has the wrong source or target"));
        }
        let beta = h.grouphom();
        for g in source.group().elements() {
            for v in &probe {
                let lhs = v.mul_matrix(source.matrix(g)).mul_matrix(h.matrix());
                let rhs = v.mul_matrix(h.matrix()).mul_matrix(target.matrix(beta.apply(g)));
                if lhs != rhs {
                    return Err(format!("hom {k} is not equivariant at v={v}, g={}", source.group().name(g)));
                }
            }
        }
    }
    match verify_group_certificate(source.group(), target.group(), &group_cert) {
        Ok(()) => {}
        Err(e) if cert.homs.is_empty() && source.group().order() == 1 => drop(e),
        Err(e) => return Err(e),
    }
    if small {
        for v in source.vectors().filter(|v| !v.is_zero()) {
            if cert.homs.iter().all(|h| v.mul_matrix(h.matrix()).is_zero()) {
                return Err(format!("vector {v} is killed by every hom"));
            }
        }
    } else {
        let field = source.field();
        let cols: usize = cert.homs.iter().map(|h| h.matrix().cols()).sum();
        let mut stacked = Matrix::zeros(field, source.dim(), cols);
        let mut offset = 0;
        for h in &cert.homs {
            for i in 0..source.dim() {
                for j in 0..h.matrix().cols() {
                    stacked.set(i, offset + j, h.matrix().get(i, j));
                }
            }
            offset += h.matrix().cols();
        }
        if stacked.rank() != source.dim() {
            return Err("the homs have a common nonzero kernel vector".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn klein() -> FiniteGroup {
        FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"))
    }

    fn swap() -> Matrix {
        Matrix::from_rows(f2(), &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn r1() -> Representation {
        Representation::new(f2(), 2, &FiniteGroup::cyclic_named(2, "a"), [(1, swap())]).unwrap()
    }

    fn r2() -> Representation {
        Representation::new(f2(), 2, &klein(), [(1, swap()), (2, Matrix::identity(f2(), 2)), (3, swap())]).unwrap()
    }

    #[test]
    fn klein_into_powers_of_z2() {
        let k = klein();
        let z2 = FiniteGroup::cyclic_named(2, "a");
        let Separation::Separated(cert) = separate_group_points(&k, &z2, &Caps::default()).unwrap() else {
            panic!("should separate");
        };
        let images: BTreeSet<Vec<usize>> = cert.homs.iter().map(|h| h.image().to_vec()).collect();
        assert_eq!(images, BTreeSet::from([vec![0, 0, 1, 1], vec![0, 1, 0, 1]]));
        assert!(verify_group_certificate(&k, &z2, &cert).is_ok());
    }

    #[test]
    fn z3_does_not_separate_into_z2() {
        let sep = separate_group_points(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(2), &Caps::default()).unwrap();
        assert!(matches!(sep, Separation::Inseparable(Inseparable::Group(0, 1))));
    }

    #[test]
    fn r1_into_itself_uses_identity() {
        let Separation::Separated(cert) = separate_rep_points(&r1(), &r1(), &Caps::default()).unwrap() else {
            panic!("should separate");
        };
        assert_eq!(cert.homs, vec![RepHom::identity(&r1())]);
        assert!(verify_rep_certificate(&r1(), &r1(), &cert).is_ok());
    }

    #[test]
    fn mutual_embeddings_of_the_two_representations() {
        let caps = Caps::default();
        let Separation::Separated(fwd) = separate_rep_points(&r1(), &r2(), &caps).unwrap() else {
            panic!("R1 should embed in a power of R2");
        };
        assert_eq!(fwd.homs.len(), 1);
        assert!(fwd.homs[0].matrix().is_identity());
        assert_eq!(fwd.homs[0].grouphom().image(), &[0, 1]);
        assert!(verify_rep_certificate(&r1(), &r2(), &fwd).is_ok());

        let Separation::Separated(back) = separate_rep_points(&r2(), &r1(), &caps).unwrap() else {
            panic!("R2 should embed in a power of R1");
        };
        let ones = Matrix::from_rows(f2(), &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(back.homs.len(), 2);
        assert!(back.homs[0].matrix().is_identity());
        assert_eq!(back.homs[0].grouphom().image(), &[0, 1, 0, 1]);
        assert_eq!(back.homs[1].matrix(), &ones);
        assert_eq!(back.homs[1].grouphom().image(), &[0, 0, 1, 1]);
        assert!(verify_rep_certificate(&r2(), &r1(), &back).is_ok());
    }

    #[test]
    fn verifier_rejects_bad_certificates() {
        let caps = Caps::default();
        let Separation::Separated(mut back) = separate_rep_points(&r2(), &r1(), &caps).unwrap() else { panic!() };
        back.homs.pop();
        assert!(verify_rep_certificate(&r2(), &r1(), &back).is_err());

        // A non-equivariant pair smuggled in through the public constructor is impossible,
        // so check the group verifier directly against a non-homomorphism.
        let k = klein();
        let z2 = FiniteGroup::cyclic(2);
        let bad = SeparationCertificate {
            homs: enumerate_group_homs(&k, &z2, u128::MAX).unwrap()[..2].to_vec(),
            notes: vec![],
        };
        assert!(verify_group_certificate(&k, &z2, &bad).is_err());
    }

    #[test]
    fn trivial_target_cannot_see_vectors() {
        let t = Representation::trivial(f2(), 2, &FiniteGroup::cyclic(1));
        let sep = separate_rep_points(&r1(), &t, &Caps::default()).unwrap();
        assert!(matches!(sep, Separation::Inseparable(Inseparable::Group(0, 1))));
        let t2 = Representation::trivial(f2(), 2, &FiniteGroup::cyclic_named(2, "a"));
        let sep = separate_rep_points(&r1(), &t2, &Caps::default()).unwrap();
        assert!(matches!(sep, Separation::Inseparable(Inseparable::Vector(_))));
    }
}
