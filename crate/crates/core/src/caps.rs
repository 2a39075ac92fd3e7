/// Guardrails for exhaustive enumeration. Exceeding any of them is an
/// error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    pub max_group_order: usize,
    pub max_dim: usize,
    /// Equivariant matrices enumerated per group homomorphism.
    pub max_matrices_per_hom: u128,
    /// Generator-image combinations tried by group hom enumeration.
    pub max_hom_candidates: u128,
    /// Points of the affine space scanned by solution-set computations.
    pub max_assignments: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_group_order: 256,
            max_dim: 8,
            max_matrices_per_hom: 1 << 20,
            max_hom_candidates: 1 << 24,
            max_assignments: 1 << 24,
        }
    }
}
