//! Representations `(V, G)`: a finite group acting on `GF(p)^n` from the right.
//!
//! The action is stored as one matrix per group element and applied to row
//! vectors, `v ∘ g = v · act[g]`, so the action law reads
//! `act[g·h] = act[g] · act[h]`.

use std::collections::HashMap;
use std::fmt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::{span_elements, Matrix, PrimeField, Vector};
use crate::group::{enumerate_group_homs, quotient_group, FiniteGroup, GroupHom, Subgroup};

#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    field: PrimeField,
    dim: usize,
    group: FiniteGroup,
    act: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("group", &self.group)
            .field("act", &self.act.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}

impl Representation {
    /// Builds and validates a representation from `(element, matrix)` pairs.
    ///
    /// Every non-identity element needs exactly one matrix; the identity may
    /// be omitted (it defaults to `I`). Input that only covers generators is
    /// rejected instead of being extended.
    pub fn new(
        field: PrimeField,
        dim: usize,
        group: &FiniteGroup,
        act: impl IntoIterator<Item = (usize, Matrix)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Matrix>> = vec![None; group.order()];
        for (g, m) in act {
            if g >= group.order() {
                return Err(Error::IndexOutOfRange { what: "group element", index: g, size: group.order() });
            }
            if slots[g].is_some() {
                return Err(Error::MalformedRepresentation(format!("element {} given twice", group.name(g))));
            }
            slots[g] = Some(m);
        }
        let mut matrices = Vec::with_capacity(group.order());
        for (g, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(m) => matrices.push(m),
                None if g == 0 => matrices.push(Matrix::identity(field, dim)),
                None => return Err(Error::MalformedRepresentation(format!("no matrix for element {}", group.name(g)))),
            }
        }
        Self::from_matrices(field, dim, group, matrices)
    }

    /// Builds and validates from one matrix per element, index-aligned with the group.
    pub fn from_matrices(field: PrimeField, dim: usize, group: &FiniteGroup, act: Vec<Matrix>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedRepresentation("dimension must be at least 1".into()));
        }
        if act.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: act.len() });
        }
        for m in &act {
            if m.field() != field {
                return Err(Error::FieldMismatch { left: field.modulus(), right: m.field().modulus() });
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
        }
        let rep = Representation { field, dim, group: group.clone(), act };
        rep.check_action()?;
        Ok(rep)
    }

    /// Full `|G|²` sweep of the action law.
    pub fn check_action(&self) -> Result<()> {
        let g = &self.group;
        if !self.act[0].is_identity() {
            return Err(Error::NotAnAction { g: "1".into(), h: "1".into() });
        }
        for x in g.elements() {
            for y in g.elements() {
                if self.act[x].mul(&self.act[y]) != self.act[g.mul(x, y)] {
                    return Err(Error::NotAnAction { g: g.name(x).into(), h: g.name(y).into() });
                }
            }
        }
        Ok(())
    }

    /// Every element acting as the identity.
    pub fn trivial(field: PrimeField, dim: usize, group: &FiniteGroup) -> Self {
        Representation { field, dim, group: group.clone(), act: vec![Matrix::identity(field, dim); group.order()] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.act[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.act
    }

    /// `|V| = p^dim`
    pub fn space_size(&self) -> u128 {
        (self.field.modulus() as u128).pow(self.dim as u32)
    }

    pub fn vectors(&self) -> impl Iterator<Item = Vector> {
        Vector::all(self.field, self.dim)
    }

    /// `v ∘ g`
    pub fn act(&self, v: &Vector, g: usize) -> Result<Vector> {
        if g >= self.group.order() {
            return Err(Error::IndexOutOfRange { what: "group element", index: g, size: self.group.order() });
        }
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        Ok(v.mul_matrix(&self.act[g]))
    }

    pub(crate) fn act_unchecked(&self, v: &Vector, g: usize) -> Vector {
        v.mul_matrix(&self.act[g])
    }

    pub fn stabilizer(&self, v: &Vector) -> Subgroup {
        let members = self.group.elements().filter(|&g| self.act_unchecked(v, g) == *v).collect();
        Subgroup::from_sorted_unchecked(&self.group, members)
    }

    /// `ker(V, G)`: the elements acting as the identity matrix.
    pub fn kernel(&self) -> Subgroup {
        let members = self.group.elements().filter(|&g| self.act[g].is_identity()).collect();
        Subgroup::from_sorted_unchecked(&self.group, members)
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn faithful_image(&self) -> FaithfulImage {
        let kernel = self.kernel();
        let (quotient_group, sigma) = quotient_group(&kernel).expect("kernel of an action is normal");
        let mut act: Vec<Option<Matrix>> = vec![None; quotient_group.order()];
        for g in self.group.elements() {
            match &act[sigma[g]] {
                None => act[sigma[g]] = Some(self.act[g].clone()),
                Some(m) => assert_eq!(m, &self.act[g], "coset members act differently"),
            }
        }
        let quotient = Representation {
            field: self.field,
            dim: self.dim,
            group: quotient_group.clone(),
            act: act.into_iter().map(|m| m.expect("sigma is onto")).collect(),
        };
        debug_assert!(quotient.check_action().is_ok());
        FaithfulImage {
            original: self.clone(),
            sigma: GroupHom::new(&self.group, &quotient_group, sigma).expect("natural map"),
            quotient,
            kernel,
        }
    }
}

/// The representation of `G / ker(V, G)` on the same space, with `σ`.
#[derive(Debug, Clone)]
pub struct FaithfulImage {
    pub original: Representation,
    pub quotient: Representation,
    pub sigma: GroupHom,
    pub kernel: Subgroup,
}

/// A homomorphism of representations: `α(v) = v · matrix` and `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepHom {
    source: Representation,
    target: Representation,
    matrix: Matrix,
    grouphom: GroupHom,
}

impl RepHom {
    pub fn new(source: &Representation, target: &Representation, matrix: Matrix, grouphom: GroupHom) -> Result<Self> {
        if matrix.rows() != source.dim || matrix.cols() != target.dim {
            return Err(Error::DimensionMismatch { expected: source.dim, found: matrix.rows() });
        }
        if grouphom.domain() != source.group() || grouphom.codomain() != target.group() {
            return Err(Error::MalformedRepresentation("group hom does not match the groups".into()));
        }
        let hom = RepHom { source: source.clone(), target: target.clone(), matrix, grouphom };
        if !hom.is_equivariant() {
            return Err(Error::MalformedRepresentation("map is not equivariant".into()));
        }
        Ok(hom)
    }

    pub fn identity(rep: &Representation) -> Self {
        RepHom {
            source: rep.clone(),
            target: rep.clone(),
            matrix: Matrix::identity(rep.field, rep.dim),
            grouphom: GroupHom::identity(&rep.group),
        }
    }

    /// `act_src[g] · A = A · act_tgt[β(g)]` for every `g`.
    pub fn is_equivariant(&self) -> bool {
        self.source
            .group
            .elements()
            .all(|g| self.source.act[g].mul(&self.matrix) == self.matrix.mul(&self.target.act[self.grouphom.apply(g)]))
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn grouphom(&self) -> &GroupHom {
        &self.grouphom
    }

    pub fn apply_vector(&self, v: &Vector) -> Vector {
        v.mul_matrix(&self.matrix)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &RepHom) -> RepHom {
        RepHom {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
            grouphom: self.grouphom.then(&other.grouphom),
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.matrix.is_invertible() && self.grouphom.is_injective() && self.grouphom.is_surjective()
    }

    pub fn describe(&self) -> String {
        format!("A={} β: {}", self.matrix, self.grouphom.describe())
    }
}

fn check_caps(r: &Representation, caps: &Caps) -> Result<()> {
    if r.group.order() > caps.max_group_order {
        return Err(Error::EnumerationCapExceeded {
            what: "group order",
            needed: r.group.order() as u128,
            cap: caps.max_group_order as u128,
        });
    }
    if r.dim > caps.max_dim {
        return Err(Error::EnumerationCapExceeded {
            what: "dimension",
            needed: r.dim as u128,
            cap: caps.max_dim as u128,
        });
    }
    Ok(())
}

/// Equivariant matrices for a fixed `β`, sorted by entries.
///
/// The conditions `act_R[g]·A − A·act_S[β(g)] = 0` are linear in the entries
/// of `A`; the solutions are the nullspace of that system.
pub fn equivariant_matrices(r: &Representation, s: &Representation, beta: &GroupHom, cap: u128) -> Result<Vec<Matrix>> {
    let (m, n) = (r.dim, s.dim);
    let f = r.field;
    let unknowns = m * n;
    let var = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<u32> = Vec::new();
    let mut count = 0;
    for g in r.group.elements() {
        let left = &r.act[g];
        let right = &s.act[beta.apply(g)];
        if left.is_identity() && right.is_identity() {
            continue;
        }
        for i in 0..m {
            for j in 0..n {
                let mut row = vec![0u32; unknowns];
                // (left · A)[i][j] = Σ_k left[i][k] A[k][j]
                for k in 0..m {
                    let idx = var(k, j);
                    row[idx] = f.add(row[idx], left.get(i, k));
                }
                // (A · right)[i][j] = Σ_l A[i][l] right[l][j]
                for l in 0..n {
                    let idx = var(i, l);
                    row[idx] = f.sub(row[idx], right.get(l, j));
                }
                rows.extend(row);
                count += 1;
            }
        }
    }
    let basis = if count == 0 {
        (0..unknowns).map(|i| Vector::basis(f, unknowns, i)).collect()
    } else {
        Matrix::new(f, count, unknowns, rows)?.nullspace()
    };
    let needed = (f.modulus() as u128).checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::EnumerationCapExceeded { what: "equivariant matrices per group hom", needed, cap });
    }
    let mut out: Vec<Matrix> = span_elements(f, unknowns, &basis)
        .into_iter()
        .map(|z| Matrix::new(f, m, n, z.coords().to_vec()).expect("sized"))
        .collect();
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(out)
}

/// Every homomorphism `R → S`, ordered by `β` image table, then by matrix entries.
pub fn enumerate_rep_homs(r: &Representation, s: &Representation, caps: &Caps) -> Result<Vec<RepHom>> {
    if r.field != s.field {
        return Err(Error::FieldMismatch { left: r.field.modulus(), right: s.field.modulus() });
    }
    check_caps(r, caps)?;
    check_caps(s, caps)?;
    let mut out = Vec::new();
    for beta in enumerate_group_homs(&r.group, &s.group, caps.max_hom_candidates)? {
        for a in equivariant_matrices(r, s, &beta, caps.max_matrices_per_hom)? {
            out.push(RepHom { source: r.clone(), target: s.clone(), matrix: a, grouphom: beta.clone() });
        }
    }
    Ok(out)
}

/// An isomorphism `R → S` if one exists.
pub fn rep_isomorphic(r: &Representation, s: &Representation, caps: &Caps) -> Result<Option<RepHom>> {
    if r.field != s.field {
        return Err(Error::FieldMismatch { left: r.field.modulus(), right: s.field.modulus() });
    }
    if r.dim != s.dim || r.group.order() != s.group.order() {
        return Ok(None);
    }
    check_caps(r, caps)?;
    check_caps(s, caps)?;
    for beta in enumerate_group_homs(&r.group, &s.group, caps.max_hom_candidates)? {
        if !beta.is_injective() {
            continue;
        }
        let found =
            equivariant_matrices(r, s, &beta, caps.max_matrices_per_hom)?.into_iter().find(Matrix::is_invertible);
        if let Some(a) = found {
            return Ok(Some(RepHom { source: r.clone(), target: s.clone(), matrix: a, grouphom: beta }));
        }
    }
    Ok(None)
}

/// `GL(n, p)` as a Cayley-table group together with its matrices.
/// Elements are the invertible matrices, identity first, then by entries.
pub fn general_linear_group(field: PrimeField, dim: usize, cap: u128) -> Result<(FiniteGroup, Vec<Matrix>)> {
    let total = (field.modulus() as u128).pow((dim * dim) as u32);
    if total > cap {
        return Err(Error::EnumerationCapExceeded { what: "matrices scanned for GL(n, p)", needed: total, cap });
    }
    let id = Matrix::identity(field, dim);
    let mut mats = vec![id.clone()];
    mats.extend(
        Vector::all(field, dim * dim)
            .map(|v| Matrix::new(field, dim, dim, v.coords().to_vec()).expect("sized"))
            .filter(|m| *m != id && m.is_invertible()),
    );
    let position: HashMap<&[u32], usize> = mats.iter().enumerate().map(|(i, m)| (m.entries(), i)).collect();
    let names = (0..mats.len()).map(|i| if i == 0 { "1".to_string() } else { format!("m{i}") }).collect();
    let table = mats.iter().map(|a| mats.iter().map(|b| position[a.mul(b).entries()]).collect()).collect();
    let group = FiniteGroup::from_table(names, table)?;
    Ok((group, mats))
}

/// Representation of `group` obtained by composing `beta: group → GL(n,p)`
/// with the matrices of [`general_linear_group`].
pub fn representation_from_gl(
    field: PrimeField,
    dim: usize,
    beta: &GroupHom,
    gl_matrices: &[Matrix],
) -> Result<Representation> {
    let act = beta.image().iter().map(|&i| gl_matrices[i].clone()).collect();
    Representation::from_matrices(field, dim, beta.domain(), act)
}
