//! Audit of the two-representation counterexample.
//!
//! `V = K²` with basis `e₁, e₂`. The first representation is `Z₂ = ⟨a⟩`
//! acting by swapping the basis vectors; the second is `Z₂ × Z₂ = ⟨a⟩×⟨b⟩`
//! where `a` swaps and `b` acts trivially. Six claims are made about this
//! pair. Each one is recomputed by the deciders, the evidence is re-checked
//! through an independent path, and the result is compared with the truth
//! value the claim asserts.

use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::field::{Matrix, PrimeField};
use crate::geometry::{
    at_equivalent, find_at_witness, fulfills_qid, geo_equivalent_groups, geo_equivalent_reps, verify_group_certificate,
    verify_rep_certificate, SearchBounds, SeparationCertificate, Verdict,
};
use crate::group::FiniteGroup;
use crate::rep::{rep_isomorphic, RepHom, Representation};
use crate::term::{eval_atom, Assignment, FreeContext, QuasiIdentity};
use crate::textio::parse_qid;

/// The formula `x·y − x = 0 ⇒ y = 1` the audit evaluates.
pub const WITNESS_FORMULA: &str = "x*y - x = 0 => y = 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Confirmed,
    Contradicted,
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: &'static str,
    /// Which step of the counterexample argument the claim comes from.
    pub location: &'static str,
    pub statement: &'static str,
    /// Truth value the argument asserts for `statement`.
    pub asserted: bool,
    /// Truth value computed here.
    pub computed: bool,
    pub status: Status,
    /// Certificates and witnesses, one line each.
    pub evidence: Vec<String>,
    /// Whether the evidence passed the independent re-check.
    pub evidence_rechecked: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub p: u32,
    pub bounds: SearchBounds,
    pub claims: Vec<Claim>,
    pub commentary: Vec<String>,
}

impl AuditReport {
    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

/// `(V, Z₂)` and `(V, Z₂ × Z₂)` over `GF(p)`.
pub fn counterexample_pair(field: PrimeField) -> (Representation, Representation) {
    let swap = Matrix::from_rows(field, &[vec![0, 1], vec![1, 0]]).expect("2x2");
    let id = Matrix::identity(field, 2);
    let g1 = FiniteGroup::cyclic_named(2, "a");
    let g2 = FiniteGroup::product(&g1, &FiniteGroup::cyclic_named(2, "b"));
    let r1 = Representation::new(field, 2, &g1, [(1, swap.clone())]).expect("swap is an involution");
    let r2 = Representation::new(field, 2, &g2, [(1, swap.clone()), (2, id), (3, swap)]).expect("b acts trivially");
    (r1, r2)
}

fn claim(
    id: &'static str,
    location: &'static str,
    statement: &'static str,
    asserted: bool,
    computed: bool,
    evidence: Vec<String>,
    evidence_rechecked: bool,
) -> Claim {
    Claim {
        id,
        location,
        statement,
        asserted,
        computed,
        status: if asserted == computed { Status::Confirmed } else { Status::Contradicted },
        evidence,
        evidence_rechecked,
    }
}

fn rep_cert_lines(label: &str, cert: &SeparationCertificate<RepHom>) -> Vec<String> {
    cert.notes.iter().map(|n| format!("{label}: {n}")).collect()
}

/// A violating point must satisfy every premise and break the conclusion,
/// checked atom by atom.
fn witness_violates(rep: &Representation, q: &QuasiIdentity, w: &Assignment) -> bool {
    q.premises().iter().all(|a| eval_atom(rep, w, a)) && !eval_atom(rep, w, q.conclusion())
}

pub fn paper_demo(p: u32, bounds: &SearchBounds, caps: &Caps) -> Result<AuditReport> {
    let field = PrimeField::new(p)?;
    let (r1, r2) = counterexample_pair(field);
    let mut claims = Vec::new();

    // C1: kernel and faithful image.
    let fi = r2.faithful_image();
    let kernel = fi.kernel.member_names();
    let iso = rep_isomorphic(&fi.quotient, &r1, caps)?;
    let kernel_ok = kernel == ["1", "b"];
    let mut evidence = vec![format!("ker = {{{}}}", kernel.join(", "))];
    let mut rechecked =
        fi.kernel.check_normal().is_ok() && fi.kernel.members().iter().all(|&g| r2.matrix(g).is_identity());
    if let Some(iso) = &iso {
        evidence.push(format!("isomorphism onto the first representation: {}", iso.describe()));
        let single = SeparationCertificate { homs: vec![iso.clone()], notes: Vec::new() };
        rechecked &= iso.is_isomorphism() && verify_rep_certificate(&fi.quotient, &r1, &single).is_ok();
    }
    claims.push(claim(
        "C1",
        "construction: kernel of the second action and its faithful image",
        "ker(V,G2) = <b> and the faithful image of (V,G2) is isomorphic to (V,G1)",
        true,
        kernel_ok && iso.is_some(),
        evidence,
        rechecked,
    ));

    // C2: the groups.
    let verdict = geo_equivalent_groups(r1.group(), r2.group(), caps)?;
    let (computed, evidence, rechecked) = match &verdict {
        Verdict::Equivalent(c) => {
            let ok = verify_group_certificate(r1.group(), r2.group(), &c.a_into_b).is_ok()
                && verify_group_certificate(r2.group(), r1.group(), &c.b_into_a).is_ok();
            let lines = c
                .a_into_b
                .notes
                .iter()
                .map(|n| format!("G1 -> G2: {n}"))
                .chain(c.b_into_a.notes.iter().map(|n| format!("G2 -> G1: {n}")))
                .collect();
            (true, lines, ok)
        }
        Verdict::NotEquivalent(r) => (false, vec![format!("inseparable: {:?}", r.pair)], true),
        Verdict::Unknown(_) => (false, vec!["unknown".into()], false),
    };
    claims.push(claim(
        "C2",
        "construction: embeddings of the acting groups",
        "G1 ~ G2",
        true,
        computed,
        evidence,
        rechecked,
    ));

    // C3: action-type equivalence through faithful images.
    let verdict = at_equivalent(&r1, &r2, bounds, caps)?;
    let (computed, mut evidence, mut rechecked) = match &verdict {
        Verdict::Equivalent(c) => {
            let ok = verify_rep_certificate(&c.first.quotient, &c.second.quotient, &c.quotients.a_into_b).is_ok()
                && verify_rep_certificate(&c.second.quotient, &c.first.quotient, &c.quotients.b_into_a).is_ok()
                && c.first.quotient.is_faithful()
                && c.second.quotient.is_faithful();
            let mut lines = vec![
                format!("ker(V,G1) = {{{}}}", c.first.kernel.member_names().join(", ")),
                format!("ker(V,G2) = {{{}}}", c.second.kernel.member_names().join(", ")),
            ];
            lines.extend(rep_cert_lines("faithful G1 -> faithful G2", &c.quotients.a_into_b));
            lines.extend(rep_cert_lines("faithful G2 -> faithful G1", &c.quotients.b_into_a));
            (true, lines, ok)
        }
        Verdict::NotEquivalent(w) => (false, vec![format!("witness candidate {}", w.candidate)], true),
        Verdict::Unknown(_) => (false, vec!["unknown within bounds".into()], false),
    };
    let scan = find_at_witness(&r1, &r2, bounds, caps)?;
    evidence.push(match &scan {
        None => "bounded action-type witness scan: none found".into(),
        Some(w) => format!("bounded action-type witness scan found {}", w.candidate),
    });
    rechecked &= scan.is_none() || !computed;
    claims.push(claim(
        "C3",
        "construction: action-type equivalence via the faithful image",
        "(V,G1) ~at (V,G2)",
        true,
        computed,
        evidence,
        rechecked,
    ));

    // C4, C5: the witness formula.
    let ctx = FreeContext::standard(field, 1, 1);
    let q = parse_qid(WITNESS_FORMULA, &ctx)?;
    for (id, rep, label, asserted, location, statement) in [
        ("C4", &r1, "G1", true, "formula step: the faithful side", "(V,G1) satisfies (x*y - x = 0 => y = 1)"),
        ("C5", &r2, "G2", false, "formula step: the side with a kernel", "(V,G2) satisfies (x*y - x = 0 => y = 1)"),
    ] {
        let check = fulfills_qid(rep, &q, caps)?;
        let (evidence, rechecked) = match &check.witness {
            Some(w) => {
                (vec![format!("violated in (V,{label}) at {}", w.describe(rep, &ctx))], witness_violates(rep, &q, w))
            }
            None => (vec![format!("holds at all {} points", Assignment::space_size(rep, 1, 1))], true),
        };
        claims.push(claim(id, location, statement, asserted, check.holds, evidence, rechecked));
    }

    // C6: the conclusion.
    let verdict = geo_equivalent_reps(&r1, &r2, caps, bounds)?;
    let (computed, evidence, rechecked) = match &verdict {
        Verdict::Equivalent(c) => {
            let ok = verify_rep_certificate(&r1, &r2, &c.a_into_b).is_ok()
                && verify_rep_certificate(&r2, &r1, &c.b_into_a).is_ok();
            let mut lines = rep_cert_lines("(V,G1) -> (V,G2)", &c.a_into_b);
            lines.extend(rep_cert_lines("(V,G2) -> (V,G1)", &c.b_into_a));
            (true, lines, ok)
        }
        Verdict::NotEquivalent(r) => {
            let mut lines = vec![format!("inseparable on side {:?}: {:?}", r.source, r.pair)];
            if let Some(s) = &r.qid {
                lines.push(format!("separating formula: {}", s.qid));
            }
            (false, lines, true)
        }
        Verdict::Unknown(_) => (false, vec!["unknown".into()], false),
    };
    claims.push(claim(
        "C6",
        "conclusion: the two representations are not equivalent",
        "(V,G1) ~ (V,G2)",
        false,
        computed,
        evidence,
        rechecked,
    ));

    let commentary = vec![
        "C4 and C6 are consistent with each other: the formula fails in both \
         representations, as it must for equivalent ones."
            .to_string(),
        "The vector (1,1) is fixed by the swap, so the premise x*y - x = 0 holds \
         at x -> (1,1), y -> a while y = 1 fails; a trivial kernel does not prevent this."
            .to_string(),
        "Under a different reading, with the premise required for every x in V \
         (so that y must lie in the kernel of the action), the formula would hold in \
         (V,G1) and fail in (V,G2). That reading is not implemented."
            .to_string(),
    ];
    Ok(AuditReport { p, bounds: *bounds, claims, commentary })
}
