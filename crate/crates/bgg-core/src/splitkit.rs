//! Exact splittings of finite exact complexes and the equivariant-splitting
//! rank verdict.
//!
//! The splitting construction mirrors the inductive symbol argument at the
//! finite-dimensional level: a left inverse of the first differential,
//! then at each step a left inverse of the stacked map `(d_j; b_{j-1})`,
//! corrected by the range projection so that the three invariants
//!
//! * `b_j d_j + d_{j-1} b_{j-1} = 1`,
//! * `b_{j-1} b_j = 0`,
//! * `d_j b_j` idempotent,
//!
//! hold exactly at every stage. Left inverses are chosen canonically via
//! the normal equations `(AᵀA)⁻¹Aᵀ`, which exist because exactness makes
//! the relevant maps injective.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::QMat;
use crate::rootcore::{ParabolicSubset, RootSystem};
use crate::{Error, Result};

/// A finite complex `0 → V_0 → V_1 → ... → V_N → 0` of rational spaces;
/// `d[j]` maps `V_j → V_{j+1}` and consecutive composites vanish.
#[derive(Debug, Clone)]
pub struct FiniteComplex {
    dims: Vec<usize>,
    diffs: Vec<QMat>,
}

impl FiniteComplex {
    pub fn new(dims: Vec<usize>, diffs: Vec<QMat>) -> Result<FiniteComplex> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::InvalidInput(String::from(
                "need one differential between consecutive spaces",
            )));
        }
        for (j, d) in diffs.iter().enumerate() {
            if d.rows() != dims[j + 1] || d.cols() != dims[j] {
                return Err(Error::InvalidInput(format!(
                    "differential {j} has shape {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[j + 1],
                    dims[j]
                )));
            }
        }
        for j in 0..diffs.len().saturating_sub(1) {
            if !diffs[j + 1].mul(&diffs[j]).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "composite of differentials {j} and {} is nonzero",
                    j + 1
                )));
            }
        }
        Ok(FiniteComplex { dims, diffs })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn diff(&self, j: usize) -> &QMat {
        &self.diffs[j]
    }

    /// Index of the first space where exactness fails, if any. Exactness
    /// includes injectivity at the start and surjectivity at the end.
    pub fn first_inexact_degree(&self) -> Option<usize> {
        let n = self.dims.len();
        for j in 0..n {
            let rank_in = if j == 0 { 0 } else { self.diffs[j - 1].rank() };
            let rank_out = if j + 1 == n { 0 } else { self.diffs[j].rank() };
            // exact at V_j: ker(out) = im(in), i.e. dim - rank_out = rank_in
            if self.dims[j] != rank_in + rank_out {
                return Some(j);
            }
        }
        None
    }
}

/// Reverse-direction maps `b_j : V_j → V_{j-1}` splitting an exact complex.
#[derive(Debug, Clone)]
pub struct Splitting {
    /// `maps[j]` is `b_{j+1} : V_{j+1} → V_j`.
    maps: Vec<QMat>,
}

impl Splitting {
    /// `b_j` for `j` in `1..=N`.
    pub fn b(&self, j: usize) -> &QMat {
        &self.maps[j - 1]
    }

    pub fn maps(&self) -> &[QMat] {
        &self.maps
    }

    /// Exact verification of the three splitting identities.
    pub fn verify(&self, c: &FiniteComplex) -> Result<()> {
        let n = c.len();
        for j in 0..n {
            let mut acc = QMat::zero(c.dims()[j], c.dims()[j]);
            if j + 1 < n {
                acc = acc.add(&self.b(j + 1).mul(c.diff(j)));
            }
            if j > 0 {
                acc = acc.add(&c.diff(j - 1).mul(self.b(j)));
            }
            if acc != QMat::identity(c.dims()[j]) {
                return Err(Error::Inconsistency(format!(
                    "bd + db is not the identity on space {j}"
                )));
            }
        }
        for j in 2..n {
            if !self.b(j - 1).mul(self.b(j)).is_zero() {
                return Err(Error::Inconsistency(format!(
                    "b_{} b_{} is nonzero",
                    j - 1,
                    j
                )));
            }
        }
        for j in 1..n {
            let p = c.diff(j - 1).mul(self.b(j));
            if p.mul(&p) != p {
                return Err(Error::Inconsistency(format!("d_{j} b_{j} is not idempotent")));
            }
        }
        Ok(())
    }
}

/// Canonical left inverse `(AᵀA)⁻¹Aᵀ` of an injective matrix.
fn normal_left_inverse(a: &QMat) -> Option<QMat> {
    let at = a.transpose();
    let gram = at.mul(a);
    gram.inverse().map(|g| g.mul(&at))
}

/// Split an exact finite complex by the inductive construction.
///
/// The precondition (exactness everywhere, the finite-dimensional stand-in
/// for the symbol-regularity hypothesis) is verified up front; the returned
/// splitting satisfies the three identities exactly, which is re-verified
/// before returning.
pub fn split_exact_complex(c: &FiniteComplex) -> Result<Splitting> {
    if let Some(j) = c.first_inexact_degree() {
        return Err(Error::InvalidInput(format!(
            "complex is not exact at degree {j}"
        )));
    }
    let n = c.len();
    let mut maps: Vec<QMat> = Vec::new();
    for j in 1..n {
        let d_j = c.diff(j - 1); // V_{j-1} → V_j
        let b_j = if j == 1 {
            normal_left_inverse(d_j).ok_or_else(|| {
                Error::Inconsistency("first differential is not injective despite exactness".into())
            })?
        } else {
            let b_prev = &maps[j - 2]; // b_{j-1} : V_{j-1} → V_{j-2}
            let stacked = d_j.vstack(b_prev);
            let inv = normal_left_inverse(&stacked).ok_or_else(|| {
                Error::Inconsistency("stacked map is not injective despite exactness".into())
            })?;
            // keep the V_j block of the left inverse
            let raw = QMat::from_fn(c.dims()[j - 1], c.dims()[j], |r, cc| inv.at(r, cc).clone());
            // correct by the complementary range projection so that the
            // vanishing and idempotence invariants carry over
            let proj = {
                let db = c.diff(j - 2).mul(b_prev);
                QMat::identity(c.dims()[j - 1]).sub(&db)
            };
            proj.mul(&raw)
        };
        maps.push(b_j);
    }
    let splitting = Splitting { maps };
    splitting.verify(c)?;
    Ok(splitting)
}

/// Tiny deterministic generator (splitmix64) so that randomized splitting
/// checks are reproducible byte-for-byte across runs and platforms.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

/// Build a pseudorandom exact complex by conjugating a direct-sum skeleton
/// with unimodular changes of basis. `max_rank` bounds each segment rank,
/// so space dimensions stay at most `2·max_rank`.
pub fn random_exact_complex(rng: &mut SplitMix64, max_len: usize, max_rank: usize) -> FiniteComplex {
    let segments = rng.range(1, max_len as i64) as usize;
    let ranks: Vec<usize> = (0..segments).map(|_| rng.range(1, max_rank as i64) as usize).collect();
    // dims[j] = ranks[j-1] + ranks[j] with virtual zero ranks at the ends
    let n = segments + 1;
    let dims: Vec<usize> = (0..n)
        .map(|j| {
            let a = if j == 0 { 0 } else { ranks[j - 1] };
            let b = if j < segments { ranks[j] } else { 0 };
            a + b
        })
        .collect();
    let mut diffs = Vec::new();
    for j in 0..segments {
        // skeleton: project onto the trailing summand, include as leading
        let mut d = QMat::zero(dims[j + 1], dims[j]);
        let src_offset = if j == 0 { 0 } else { ranks[j - 1] };
        for t in 0..ranks[j] {
            *d.at_mut(t, src_offset + t) = crate::rat_int(1);
        }
        diffs.push(d);
    }
    let mut changes: Vec<QMat> = Vec::new();
    for &dim in &dims {
        let mut m = QMat::identity(dim);
        // a bounded number of ±1 shears keeps entries small enough for
        // fast exact arithmetic while still scrambling the skeleton
        for _ in 0..dim.min(12) {
            if dim < 2 {
                break;
            }
            let a = rng.range(0, dim as i64 - 1) as usize;
            let b = rng.range(0, dim as i64 - 1) as usize;
            if a != b {
                let f = crate::rat_int(if rng.range(0, 1) == 0 { -1 } else { 1 });
                for col in 0..dim {
                    let v = m.at(b, col) * &f + m.at(a, col);
                    *m.at_mut(a, col) = v;
                }
            }
        }
        changes.push(m);
    }
    let diffs: Vec<QMat> = diffs
        .into_iter()
        .enumerate()
        .map(|(j, d)| {
            let inv = changes[j].inverse().expect("unimodular");
            changes[j + 1].mul(&d).mul(&inv)
        })
        .collect();
    FiniteComplex::new(dims, diffs).expect("skeleton is a complex")
}

/// Existence verdict for an equivariant graded splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictValue {
    Exists,
    NotExists,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub value: VerdictValue,
    pub rank_g: usize,
    pub rank_ap: usize,
    pub rationale: String,
}

/// The rank dichotomy: equivariant graded splittings exist in rank one,
/// are obstructed when the parabolic has rank above one, and remain open
/// in the gap where the parabolic has rank one inside a bigger group.
pub fn splitting_verdict(rs: &RootSystem, p: &ParabolicSubset) -> Verdict {
    let rank_g = rs.rank();
    let rank_ap = p.num_crossed();
    if rank_g <= 1 {
        return Verdict {
            value: VerdictValue::Exists,
            rank_g,
            rank_ap,
            rationale: String::from("group has rank one: equivariant splitting exists"),
        };
    }
    if rank_ap > 1 {
        return Verdict {
            value: VerdictValue::NotExists,
            rank_g,
            rank_ap,
            rationale: String::from(
                "parabolic rank exceeds one: equivariant symbols are differential, obstructing a splitting",
            ),
        };
    }
    if rank_ap == 1 {
        return Verdict {
            value: VerdictValue::Unknown,
            rank_g,
            rank_ap,
            rationale: String::from(
                "parabolic rank one inside a higher-rank group: existence is open",
            ),
        };
    }
    Verdict {
        value: VerdictValue::Exists,
        rank_g,
        rank_ap,
        rationale: String::from("no crossed roots: the flag manifold is a point"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;
    use crate::rootcore::TypeLabel;
    use crate::Rat;
    use alloc::vec;
    use num_traits::Zero;

    fn mat(rows: &[&[i64]]) -> QMat {
        QMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect())
    }

    #[test]
    fn identity_complex_splits_with_identity() {
        let c = FiniteComplex::new(vec![2, 2], vec![QMat::identity(2)]).unwrap();
        let s = split_exact_complex(&c).unwrap();
        assert_eq!(s.b(1), &QMat::identity(2));
    }

    #[test]
    fn three_term_complex_halves() {
        // 0 → Q → Q² → Q → 0 with d₁ = (1,1)ᵀ and d₂ = (1,-1)
        let c = FiniteComplex::new(
            vec![1, 2, 1],
            vec![mat(&[&[1], &[1]]), mat(&[&[1, -1]])],
        )
        .unwrap();
        let s = split_exact_complex(&c).unwrap();
        let half = rat_int(1) / rat_int(2);
        assert_eq!(s.b(1), &QMat::from_fn(1, 2, |_, c| if c == 0 { half.clone() } else { half.clone() }));
        assert_eq!(
            s.b(2),
            &QMat::from_fn(2, 1, |r, _| if r == 0 { half.clone() } else { -half.clone() })
        );
        // d₂ b₂ = 1 on the final space
        assert_eq!(c.diff(1).mul(s.b(2)), QMat::identity(1));
    }

    #[test]
    fn non_exact_complex_names_first_failing_degree() {
        // 0 → Q → Q → 0 with the zero map: fails already at degree 0
        let c = FiniteComplex::new(vec![1, 1], vec![QMat::zero(1, 1)]).unwrap();
        match split_exact_complex(&c) {
            Err(Error::InvalidInput(msg)) => assert!(msg.contains("degree 0"), "{msg}"),
            other => panic!("expected precondition error, got {other:?}"),
        }
        // exact at 0 and 1 but not at 2: 0 → 0 → Q → Q² → 0 via (1,0)ᵀ
        let c2 = FiniteComplex::new(vec![0, 1, 2], vec![QMat::zero(1, 0), mat(&[&[1], &[0]])])
            .unwrap();
        match split_exact_complex(&c2) {
            Err(Error::InvalidInput(msg)) => assert!(msg.contains("degree 2"), "{msg}"),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn random_exact_complexes_split() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..60 {
            let c = random_exact_complex(&mut rng, 6, 6);
            assert!(c.first_inexact_degree().is_none());
            let s = split_exact_complex(&c).unwrap();
            s.verify(&c).unwrap();
        }
    }

    #[test]
    fn splitting_invariants_reported_exactly() {
        let mut rng = SplitMix64::new(7);
        let c = random_exact_complex(&mut rng, 5, 8);
        let s = split_exact_complex(&c).unwrap();
        // rechecking by hand once: bd + db = 1 exactly on a middle space
        if c.len() >= 3 {
            let j = 1;
            let sum = s.b(j + 1).mul(c.diff(j)).add(&c.diff(j - 1).mul(s.b(j)));
            assert_eq!(sum, QMat::identity(c.dims()[j]));
        }
        let _ = Rat::zero();
    }

    #[test]
    fn verdict_table() {
        let a1 = RootSystem::new(TypeLabel::A, 1).unwrap();
        let a2 = RootSystem::new(TypeLabel::A, 2).unwrap();
        let a3 = RootSystem::new(TypeLabel::A, 3).unwrap();
        let v = splitting_verdict(&a1, &ParabolicSubset::borel(1));
        assert_eq!(v.value, VerdictValue::Exists);
        let v = splitting_verdict(&a2, &ParabolicSubset::borel(2));
        assert_eq!(v.value, VerdictValue::NotExists);
        assert_eq!(v.rank_ap, 2);
        let p1 = ParabolicSubset::from_crossed(2, [0]).unwrap();
        let v = splitting_verdict(&a2, &p1);
        assert_eq!(v.value, VerdictValue::Unknown);
        let v = splitting_verdict(&a3, &ParabolicSubset::borel(3));
        assert_eq!(v.value, VerdictValue::NotExists);
    }

    #[test]
    fn verdict_invariant_under_diagram_relabeling() {
        // A3 has the diagram flip i ↔ rank-1-i; verdicts agree across it
        let a3 = RootSystem::new(TypeLabel::A, 3).unwrap();
        for mask in 0..(1u32 << 3) {
            let crossed: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            let flipped: Vec<usize> = crossed.iter().map(|&i| 2 - i).collect();
            let p = ParabolicSubset::from_crossed(3, crossed).unwrap();
            let q = ParabolicSubset::from_crossed(3, flipped).unwrap();
            assert_eq!(
                splitting_verdict(&a3, &p).value,
                splitting_verdict(&a3, &q).value
            );
        }
    }
}
