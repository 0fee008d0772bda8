//! Resource bounds for desk-scale exact computation.

/// Limits that operations check before starting anything expensive.
///
/// Exceeding a bound is reported via [`crate::Error::ResourceExceeded`]
/// rather than silently grinding away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum Weyl group order for full enumeration (Hasse diagrams,
    /// resolutions, orbit searches).
    pub weyl_max: usize,
    /// Maximum dimension of an explicitly constructed irreducible module.
    pub dim_max: usize,
    /// Maximum total basis size of a Chevalley-Eilenberg complex
    /// `Λ*(p₊)* ⊗ V`.
    pub ce_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            weyl_max: 100_000,
            dim_max: 2_000,
            ce_max: 200_000,
        }
    }
}

impl Bounds {
    pub fn check(&self, what: &'static str, needed: usize, bound: usize) -> crate::Result<()> {
        if needed > bound {
            Err(crate::Error::ResourceExceeded { what, needed, bound })
        } else {
            Ok(())
        }
    }
}
