//! The Chevalley-Eilenberg complex `Λ*(p₊)* ⊗ V` with differential,
//! codifferential and Laplacian, brute-force Lie algebra cohomology against
//! the highest-weight prediction, flat operator diagrams, and the Euler
//! index integer.
//!
//! Everything is organized by weight: `d`, `∂` and `□` preserve weights, so
//! the complex splits into small exact-rational blocks and every rank or
//! kernel is computed per block. The cohomology `H^k(p₊, V)` is read off
//! two independent ways — `ker d / im d` with Levi highest-weight vectors
//! extracted from harmonic representatives, and the multiset
//! `{w(λ+ρ)-ρ : w ∈ W^p, ℓ(w) = k}` — and the verification suites insist
//! the two agree with every multiplicity exactly 1.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::chevalley::{Chevalley, Uea};
use crate::linalg::QMat;
use crate::repkit::{self, BlockOp, Irrep};
use crate::rootcore::{ParabolicSubset, RootSystem, Weight, WeylWord};
use crate::verma;
use crate::{rat_int, Bounds, Error, Rat, Result};

/// Basis element of `Λ^k (p₊)* ⊗ V`: a subset of the nilradical roots
/// (as a bitmask over the ordered root list) and a vector of the module.
type CeElem = (u64, usize, usize); // (mask, weight index in V, index within weight space)

/// The Chevalley-Eilenberg complex of a parabolic with coefficients in an
/// irreducible module, split into weight blocks with exact matrices.
#[derive(Debug)]
pub struct CeComplex {
    pub lambda: Weight,
    pub parabolic: ParabolicSubset,
    /// Positive-root indices of `Δ(p₊)`, ordered by (grading height, base order).
    pub pplus: Vec<usize>,
    pub irrep: Irrep,
    /// Per degree, per weight: ordered basis elements.
    blocks: Vec<BTreeMap<Weight, Vec<CeElem>>>,
    /// `d_k` per weight: `block(k, ν) → block(k+1, ν)`.
    d_mats: Vec<BTreeMap<Weight, QMat>>,
    /// `∂_k` per weight: `block(k, ν) → block(k-1, ν)`.
    del_mats: Vec<BTreeMap<Weight, QMat>>,
}

/// Sort a wedge word into canonical order; `None` when a factor repeats.
fn sort_sign(word: &mut Vec<usize>) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..word.len() {
        let mut j = i;
        while j > 0 && word[j - 1] > word[j] {
            word.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && word[j - 1] == word[j] {
            return None;
        }
    }
    Some(sign)
}

fn mask_to_bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&b| mask & (1u64 << b) != 0).collect()
}

impl CeComplex {
    pub fn new(
        rs: &RootSystem,
        chev: &Chevalley,
        p: &ParabolicSubset,
        lambda: &Weight,
        bounds: &Bounds,
    ) -> Result<CeComplex> {
        let irrep = Irrep::new(rs, lambda, bounds)?;
        CeComplex::with_irrep(rs, chev, p, irrep, bounds)
    }

    /// Build the complex around an already-constructed module (the module
    /// only depends on `λ`, so grids over parabolics can share it).
    pub fn with_irrep(
        rs: &RootSystem,
        chev: &Chevalley,
        p: &ParabolicSubset,
        irrep: Irrep,
        bounds: &Bounds,
    ) -> Result<CeComplex> {
        let lambda = irrep.lambda.clone();
        let grading = rs.parabolic_grading(p);
        let mut pplus: Vec<usize> = (0..rs.num_positive_roots())
            .filter(|&i| grading.heights[i] > 0)
            .collect();
        pplus.sort_by_key(|&i| (grading.heights[i], i));
        let m = pplus.len();
        if m >= 60 {
            return Err(Error::ResourceExceeded {
                what: "nilradical dimension for exterior algebra",
                needed: m,
                bound: 60,
            });
        }
        let total = (1u128 << m) * irrep.dim as u128;
        if total > bounds.ce_max as u128 {
            return Err(Error::ResourceExceeded {
                what: "Chevalley-Eilenberg basis size",
                needed: usize::try_from(total).unwrap_or(usize::MAX),
                bound: bounds.ce_max,
            });
        }

        // raising and lowering actions of every nilradical root on V
        let e_ops: Vec<BlockOp> =
            pplus.iter().map(|&r| irrep.root_op(rs, chev, r, true)).collect();
        let f_ops: Vec<BlockOp> =
            pplus.iter().map(|&r| irrep.root_op(rs, chev, r, false)).collect();

        // bracket data within p₊, in bit positions
        let pos_of_root: BTreeMap<usize, usize> =
            pplus.iter().enumerate().map(|(b, &r)| (r, b)).collect();
        let mut pair_sum: BTreeMap<(usize, usize), (usize, i64)> = BTreeMap::new();
        for a in 0..m {
            for b in (a + 1)..m {
                let sum: Vec<i64> = rs.positive_roots()[pplus[a]]
                    .iter()
                    .zip(&rs.positive_roots()[pplus[b]])
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(rc) = rs.positive_root_index(&sum) {
                    if let (Some(&cbit), Some(n)) =
                        (pos_of_root.get(&rc), chev.n(pplus[a], pplus[b]))
                    {
                        pair_sum.insert((a, b), (cbit, n));
                    }
                }
            }
        }

        // enumerate the basis, bucketed by (degree, weight)
        let mut blocks: Vec<BTreeMap<Weight, Vec<CeElem>>> = vec![BTreeMap::new(); m + 1];
        for mask in 0u64..(1u64 << m) {
            let k = mask.count_ones() as usize;
            let mut wedge_wt = vec![0i64; rs.rank()];
            for b in mask_to_bits(mask) {
                for (w, &c) in wedge_wt.iter_mut().zip(&rs.positive_roots()[pplus[b]]) {
                    *w -= c;
                }
            }
            let wedge = Weight::from_root(&wedge_wt);
            for (wi, mu) in irrep.weights.iter().enumerate() {
                let nu = mu.add(&wedge);
                let entry = blocks[k].entry(nu).or_default();
                for j in 0..irrep.dims[wi] {
                    entry.push((mask, wi, j));
                }
            }
        }

        let index_of = |blocks: &Vec<BTreeMap<Weight, Vec<CeElem>>>,
                        k: usize,
                        nu: &Weight|
         -> BTreeMap<CeElem, usize> {
            blocks[k]
                .get(nu)
                .map(|v| v.iter().enumerate().map(|(i, &e)| (e, i)).collect())
                .unwrap_or_default()
        };

        // d: Chevalley-Eilenberg cohomology differential of the p₊-module V
        let mut d_mats: Vec<BTreeMap<Weight, QMat>> = vec![BTreeMap::new(); m + 1];
        // ∂: homology differential of the opposite nilpotent transported
        // through the Killing identification (the codifferential)
        let mut del_mats: Vec<BTreeMap<Weight, QMat>> = vec![BTreeMap::new(); m + 1];

        for k in 0..=m {
            for (nu, elems) in &blocks[k] {
                // --- d into degree k+1
                if k < m {
                    let target_index = index_of(&blocks, k + 1, nu);
                    let rows = blocks[k + 1].get(nu).map_or(0, Vec::len);
                    let mut dmat = QMat::zero(rows, elems.len());
                    for (col, &(mask, wi, j)) in elems.iter().enumerate() {
                        let bits = mask_to_bits(mask);
                        // first sum: ξ_a ∧ ξ_S ⊗ e_a v
                        for a in 0..m {
                            if mask & (1u64 << a) != 0 {
                                continue;
                            }
                            let Some(block) = e_ops[a].blocks.get(&wi) else { continue };
                            // ξ_a ∧ ξ_S: the new factor enters at the front
                            let mut word = Vec::with_capacity(bits.len() + 1);
                            word.push(a);
                            word.extend(&bits);
                            let Some(sign) = sort_sign(&mut word) else { continue };
                            let new_mask = mask | (1u64 << a);
                            let twi = irrep
                                .weight_index(
                                    &irrep.weights[wi]
                                        .add(&Weight::from_root(&shift_of(&e_ops[a]))),
                                )
                                .expect("raising target weight exists");
                            for r in 0..block.rows() {
                                let c = block.at(r, j);
                                if c.is_zero() {
                                    continue;
                                }
                                let row = target_index[&(new_mask, twi, r)];
                                *dmat.at_mut(row, col) += &rat_int(sign) * c;
                            }
                        }
                        // second sum: substitute dξ_β = -Σ N_{γδ} ξ_γ∧ξ_δ
                        for (pos, &beta_bit) in bits.iter().enumerate() {
                            for (&(ga, de), &(cbit, n)) in &pair_sum {
                                if cbit != beta_bit {
                                    continue;
                                }
                                if mask & (1u64 << ga) != 0 || mask & (1u64 << de) != 0 {
                                    continue;
                                }
                                let mut word: Vec<usize> = Vec::with_capacity(bits.len() + 1);
                                word.extend(bits.iter().take(pos));
                                word.push(ga);
                                word.push(de);
                                word.extend(bits.iter().skip(pos + 1));
                                let Some(sort) = sort_sign(&mut word) else { continue };
                                // derivation sign (-1)^pos and the -N factor
                                let total = if pos % 2 == 0 { -n } else { n } * sort;
                                let new_mask =
                                    (mask & !(1u64 << beta_bit)) | (1u64 << ga) | (1u64 << de);
                                let row = target_index[&(new_mask, wi, j)];
                                *dmat.at_mut(row, col) += rat_int(total);
                            }
                        }
                    }
                    if !dmat.is_zero() || rows > 0 {
                        d_mats[k].insert(nu.clone(), dmat);
                    }
                }
                // --- ∂ into degree k-1
                //
                // The codifferential is the homology differential of the
                // opposite nilpotent transported through the invariant-form
                // identification n₋ ≅ (p₊)*, which scales the basis vector
                // dual to e_β by d_β = (β,β)/2. The action term therefore
                // carries d_β and the contraction term d_a·d_b/d_{a+b}.
                if k > 0 {
                    let target_index = index_of(&blocks, k - 1, nu);
                    let rows = blocks[k - 1].get(nu).map_or(0, Vec::len);
                    let mut delmat = QMat::zero(rows, elems.len());
                    for (col, &(mask, wi, j)) in elems.iter().enumerate() {
                        let bits = mask_to_bits(mask);
                        // first sum: drop ξ_β, act by f_β on v
                        for (pos, &b) in bits.iter().enumerate() {
                            let Some(block) = f_ops[b].blocks.get(&wi) else { continue };
                            let sign = if pos % 2 == 0 { -1i64 } else { 1 };
                            let coeff = rat_int(sign * half_norm(rs, pplus[b]));
                            let new_mask = mask & !(1u64 << b);
                            let twi = irrep
                                .weight_index(
                                    &irrep.weights[wi]
                                        .add(&Weight::from_root(&shift_of(&f_ops[b]))),
                                )
                                .expect("lowering target weight exists");
                            for r in 0..block.rows() {
                                let c = block.at(r, j);
                                if c.is_zero() {
                                    continue;
                                }
                                let row = target_index[&(new_mask, twi, r)];
                                *delmat.at_mut(row, col) += &coeff * c;
                            }
                        }
                        // second sum: contract a pair into its bracket
                        for (pi, &ba) in bits.iter().enumerate() {
                            for (pj, &bb) in bits.iter().enumerate().skip(pi + 1) {
                                let Some(&(cbit, n)) = pair_sum.get(&(ba, bb)) else { continue };
                                if mask & (1u64 << cbit) != 0 {
                                    continue;
                                }
                                // minus-side bracket constant is -N
                                let m_const = -n;
                                let mut word: Vec<usize> = Vec::with_capacity(bits.len() - 1);
                                word.push(cbit);
                                for (q, &other) in bits.iter().enumerate() {
                                    if q != pi && q != pj {
                                        word.push(other);
                                    }
                                }
                                let Some(sort) = sort_sign(&mut word) else { continue };
                                // 1-based (i, j) sign (-1)^{i+j} = (-1)^{pi+pj}
                                let pair_sign = if (pi + pj) % 2 == 0 { 1i64 } else { -1 };
                                let scale = rat_int(half_norm(rs, pplus[ba]))
                                    * rat_int(half_norm(rs, pplus[bb]))
                                    / rat_int(half_norm(rs, pplus[cbit]));
                                let total = rat_int(pair_sign * m_const * sort) * scale;
                                let new_mask =
                                    (mask & !(1u64 << ba) & !(1u64 << bb)) | (1u64 << cbit);
                                let row = target_index[&(new_mask, wi, j)];
                                *delmat.at_mut(row, col) += total;
                            }
                        }
                    }
                    if !delmat.is_zero() || rows > 0 {
                        del_mats[k].insert(nu.clone(), delmat);
                    }
                }
            }
        }

        let ce = CeComplex {
            lambda,
            parabolic: p.clone(),
            pplus,
            irrep,
            blocks,
            d_mats,
            del_mats,
        };
        ce.verify_complex_identities()?;
        Ok(ce)
    }

    /// Number of exterior degrees (dimension of the nilradical).
    pub fn max_degree(&self) -> usize {
        self.pplus.len()
    }

    pub fn dim_degree(&self, k: usize) -> usize {
        self.blocks[k].values().map(Vec::len).sum()
    }

    pub fn weights_of_degree(&self, k: usize) -> Vec<Weight> {
        self.blocks[k].keys().cloned().collect()
    }

    pub fn block_dim(&self, k: usize, nu: &Weight) -> usize {
        self.blocks[k].get(nu).map_or(0, Vec::len)
    }

    pub fn d_mat(&self, k: usize, nu: &Weight) -> Option<&QMat> {
        self.d_mats[k].get(nu)
    }

    pub fn del_mat(&self, k: usize, nu: &Weight) -> Option<&QMat> {
        self.del_mats[k].get(nu)
    }

    /// `□_k = d_{k-1}∂_k + ∂_{k+1}d_k` on the `(k, ν)` block.
    pub fn laplacian(&self, k: usize, nu: &Weight) -> QMat {
        let n = self.block_dim(k, nu);
        let mut acc = QMat::zero(n, n);
        if k > 0 {
            if let (Some(d_down), Some(del)) = (self.d_mats[k - 1].get(nu), self.del_mats[k].get(nu))
            {
                acc = acc.add(&d_down.mul(del));
            }
        }
        if k < self.max_degree() {
            if let (Some(d), Some(del_up)) = (self.d_mats[k].get(nu), self.del_mats[k + 1].get(nu))
            {
                acc = acc.add(&del_up.mul(d));
            }
        }
        acc
    }

    /// `d² = 0`, `∂² = 0` and the commutation of `□` with both, as exact
    /// matrix identities on every block.
    pub fn verify_complex_identities(&self) -> Result<()> {
        let m = self.max_degree();
        for k in 0..=m {
            for nu in self.blocks[k].keys() {
                if k + 1 < m {
                    if let (Some(d1), Some(d2)) =
                        (self.d_mats[k].get(nu), self.d_mats[k + 1].get(nu))
                    {
                        if !d2.mul(d1).is_zero() {
                            return Err(Error::Inconsistency(format!(
                                "d² ≠ 0 at degree {k}, weight {nu:?}"
                            )));
                        }
                    }
                }
            }
        }
        for k in 2..=m {
            for nu in self.blocks[k].keys() {
                if let (Some(del1), Some(del2)) =
                    (self.del_mats[k].get(nu), self.del_mats[k - 1].get(nu))
                {
                    if !del2.mul(del1).is_zero() {
                        return Err(Error::Inconsistency(format!(
                            "∂² ≠ 0 at degree {k}, weight {nu:?}"
                        )));
                    }
                }
            }
        }
        // [□, d] = 0 and [□, ∂] = 0 blockwise
        for k in 0..m {
            for nu in self.blocks[k].keys() {
                let Some(d) = self.d_mats[k].get(nu) else { continue };
                let top = self.laplacian(k + 1, nu);
                let bot = self.laplacian(k, nu);
                if top.mul(d) != d.mul(&bot) {
                    return Err(Error::Inconsistency(format!(
                        "□ does not commute with d at degree {k}, weight {nu:?}"
                    )));
                }
            }
        }
        for k in 1..=m {
            for nu in self.blocks[k].keys() {
                let Some(del) = self.del_mats[k].get(nu) else { continue };
                let top = self.laplacian(k - 1, nu);
                let bot = self.laplacian(k, nu);
                if top.mul(del) != del.mul(&bot) {
                    return Err(Error::Inconsistency(format!(
                        "□ does not commute with ∂ at degree {k}, weight {nu:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn shift_of(op: &BlockOp) -> Vec<i64> {
    op.shift.clone()
}

/// `(β, β)/2` for a positive root index (1 for short roots).
fn half_norm(rs: &RootSystem, root_idx: usize) -> i64 {
    let r = &rs.positive_roots()[root_idx];
    rs.bilinear_int(r, r) / 2
}

/// An isotypical decomposition as a Levi module: pairs of (highest weight,
/// multiplicity), sorted by weight.
pub type LeviDecomposition = Vec<(Weight, usize)>;

/// Brute-force cohomology `H^k = ker d_k / im d_{k-1}` with the Levi
/// isotypical decomposition extracted from harmonic representatives.
pub fn cohomology(
    rs: &RootSystem,
    chev: &Chevalley,
    ce: &CeComplex,
    k: usize,
) -> Result<LeviDecomposition> {
    cohomology_with_ranks(rs, chev, ce, k, &mut BTreeMap::new())
}

/// Ranks of every `d` block, shared across degrees of one complex.
pub type RankCache = BTreeMap<(usize, Weight), usize>;

fn d_rank(ce: &CeComplex, cache: &mut RankCache, k: usize, nu: &Weight) -> usize {
    if let Some(&r) = cache.get(&(k, nu.clone())) {
        return r;
    }
    let r = ce.d_mat(k, nu).map_or(0, QMat::rank);
    cache.insert((k, nu.clone()), r);
    r
}

/// All degrees at once, sharing the block-rank computations.
pub fn cohomology_all(
    rs: &RootSystem,
    chev: &Chevalley,
    ce: &CeComplex,
) -> Result<Vec<LeviDecomposition>> {
    let mut cache = RankCache::new();
    (0..=ce.max_degree())
        .map(|k| cohomology_with_ranks(rs, chev, ce, k, &mut cache))
        .collect()
}

fn cohomology_with_ranks(
    rs: &RootSystem,
    chev: &Chevalley,
    ce: &CeComplex,
    k: usize,
    cache: &mut RankCache,
) -> Result<LeviDecomposition> {
    let levi_simples = ce.parabolic.levi();
    let grading = rs.parabolic_grading(&ce.parabolic);
    let mut decomp: BTreeMap<Weight, usize> = BTreeMap::new();
    let mut total_h = 0usize;
    for nu in ce.weights_of_degree(k) {
        let n = ce.block_dim(k, &nu);
        let ker = if k < ce.max_degree() { n - d_rank(ce, cache, k, &nu) } else { n };
        let im = if k > 0 { d_rank(ce, cache, k - 1, &nu) } else { 0 };
        let h_dim = ker - im;
        total_h += h_dim;
        if h_dim == 0 {
            // the kernel of □ on zero-cohomology blocks is checked by the
            // decomposition pass; skipping it here keeps the brute force fast
            continue;
        }
        // harmonic representatives
        let lap = ce.laplacian(k, &nu);
        let harm = lap.nullspace();
        if harm.len() != h_dim {
            return Err(Error::Inconsistency(format!(
                "harmonic space dimension {} differs from cohomology {} at degree {k}, weight {nu:?}",
                harm.len(),
                h_dim
            )));
        }
        let harm_mat = QMat::from_fn(n, h_dim, |r, c| harm[c][r].clone());
        // highest-weight vectors: kernel of every Levi raising operator
        let mut stacked: Option<QMat> = None;
        for &gamma in &levi_simples {
            let r = levi_raising_matrix(rs, chev, ce, k, &nu, gamma);
            // harmonicity must be preserved by the Levi action
            let target = nu.add(&Weight::from_root(&unit(rs.rank(), gamma)));
            let lap_t = ce.laplacian(k, &target);
            let moved = r.mul(&harm_mat);
            if !lap_t.mul(&moved).is_zero() {
                return Err(Error::Inconsistency(
                    "Levi raising does not preserve harmonic spaces".into(),
                ));
            }
            stacked = Some(match stacked {
                None => moved,
                Some(s) => s.vstack(&moved),
            });
        }
        let mult = match stacked {
            None => h_dim, // Borel case: no raising conditions
            Some(s) => s.nullspace().len(),
        };
        if mult > 0 {
            *decomp.entry(nu.clone()).or_insert(0) += mult;
        }
    }
    // the isotypical pieces must account for the whole cohomology
    let mut accounted = BigInt::zero();
    for (nu, mult) in &decomp {
        let dim = repkit::weyl_dimension_levi(rs, &grading.levi_roots, &levi_simples, nu)?;
        accounted += dim * BigInt::from(*mult);
    }
    if accounted != BigInt::from(total_h) {
        return Err(Error::Inconsistency(format!(
            "Levi pieces account for {accounted} of {total_h} cohomology dimensions at degree {k}"
        )));
    }
    Ok(decomp.into_iter().collect())
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i] = 1;
    v
}

/// Matrix of the Levi simple raising operator `e_γ` on the `(k, ν)` block,
/// mapping into the `(k, ν + α_γ)` block.
fn levi_raising_matrix(
    rs: &RootSystem,
    chev: &Chevalley,
    ce: &CeComplex,
    k: usize,
    nu: &Weight,
    gamma: usize,
) -> QMat {
    let target_nu = nu.add(&Weight::from_root(&unit(rs.rank(), gamma)));
    let source = ce.blocks[k].get(nu).cloned().unwrap_or_default();
    let target = ce.blocks[k].get(&target_nu).cloned().unwrap_or_default();
    let target_index: BTreeMap<CeElem, usize> =
        target.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut mat = QMat::zero(target.len(), source.len());
    let e_op = ce.irrep.simple_op(rs, gamma, true);
    for (col, &(mask, wi, j)) in source.iter().enumerate() {
        // action on the module factor
        if let Some(block) = e_op.blocks.get(&wi) {
            let twi = ce
                .irrep
                .weight_index(&ce.irrep.weights[wi].add(&Weight::from_root(&unit(rs.rank(), gamma))))
                .expect("raising target exists");
            for r in 0..block.rows() {
                let c = block.at(r, j);
                if !c.is_zero() {
                    let row = target_index[&(mask, twi, r)];
                    *mat.at_mut(row, col) += c;
                }
            }
        }
        // coadjoint action on the wedge factor: e_γ·ξ_β = -N_{γ,β-γ} ξ_{β-γ}
        let bits = mask_to_bits(mask);
        for (pos, &b) in bits.iter().enumerate() {
            let beta = &rs.positive_roots()[ce.pplus[b]];
            let shifted: Vec<i64> = beta
                .iter()
                .zip(&unit(rs.rank(), gamma))
                .map(|(x, y)| x - y)
                .collect();
            let Some(ridx) = rs.positive_root_index(&shifted) else { continue };
            let Some(newbit) = ce.pplus.iter().position(|&r| r == ridx) else { continue };
            if mask & (1u64 << newbit) != 0 {
                continue;
            }
            let Some(n) = chev.n(gamma, ridx) else { continue };
            let mut word = bits.clone();
            word[pos] = newbit;
            let Some(sort) = sort_sign(&mut word) else { continue };
            let coeff = -n * sort;
            let new_mask = (mask & !(1u64 << b)) | (1u64 << newbit);
            let row = target_index[&(new_mask, wi, j)];
            *mat.at_mut(row, col) += rat_int(coeff);
        }
    }
    mat
}

/// The highest-weight prediction: at degree `k`, the multiset
/// `{w(λ+ρ)-ρ : w ∈ W^p, ℓ(w) = k}`, every multiplicity 1.
pub fn kostant_prediction(
    rs: &RootSystem,
    p: &ParabolicSubset,
    lambda: &Weight,
    bounds: &Bounds,
) -> Result<Vec<LeviDecomposition>> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::InvalidInput(
            "prediction requires a dominant integral weight".into(),
        ));
    }
    let hasse = rs.hasse_diagram(p, bounds)?;
    let levi = p.levi();
    let max_len = hasse.nodes.iter().map(|n| n.length).max().unwrap_or(0);
    let mut out: Vec<BTreeMap<Weight, usize>> = vec![BTreeMap::new(); max_len + 1];
    for node in &hasse.nodes {
        let nu = rs.dot_action(&node.word, lambda);
        for &i in &levi {
            let pr = rs.pairing(&nu, i);
            if !pr.is_integer() || pr < Rat::zero() {
                return Err(Error::Inconsistency(format!(
                    "dot-action weight {nu:?} is not Levi-dominant for {:?}",
                    node.word
                )));
            }
        }
        *out[node.length].entry(nu).or_insert(0) += 1;
    }
    Ok(out.into_iter().map(|m| m.into_iter().collect()).collect())
}

/// Dimensions and harmonic projection of the Hodge-style decomposition
/// `Λ^k ⊗ V = ker □ ⊕ im d ⊕ im ∂` at one degree.
#[derive(Debug)]
pub struct HodgeReport {
    pub degree: usize,
    pub dim_total: usize,
    pub dim_harmonic: usize,
    pub dim_im_d: usize,
    pub dim_im_del: usize,
    /// Per weight: basis of `ker □` and the projection onto it along the
    /// two image summands.
    pub blocks: BTreeMap<Weight, HodgeBlock>,
}

#[derive(Debug)]
pub struct HodgeBlock {
    pub harmonic_basis: QMat,
    pub projection: QMat,
}

/// Verify the direct-sum decomposition at degree `k` exactly and return
/// the harmonic projection per weight block.
pub fn hodge_decomposition(ce: &CeComplex, k: usize) -> Result<HodgeReport> {
    let mut report = HodgeReport {
        degree: k,
        dim_total: 0,
        dim_harmonic: 0,
        dim_im_d: 0,
        dim_im_del: 0,
        blocks: BTreeMap::new(),
    };
    for nu in ce.weights_of_degree(k) {
        let n = ce.block_dim(k, &nu);
        report.dim_total += n;
        let lap = ce.laplacian(k, &nu);
        let harm = lap.nullspace();
        let h = harm.len();
        let harm_mat = QMat::from_fn(n, h, |r, c| harm[c][r].clone());

        let d_cols = if k > 0 {
            ce.d_mat(k - 1, &nu).map(column_basis).unwrap_or_else(|| QMat::zero(n, 0))
        } else {
            QMat::zero(n, 0)
        };
        let del_cols = if k < ce.max_degree() {
            ce.del_mat(k + 1, &nu).map(column_basis).unwrap_or_else(|| QMat::zero(n, 0))
        } else {
            QMat::zero(n, 0)
        };
        let total = h + d_cols.cols() + del_cols.cols();
        if total != n {
            return Err(Error::Inconsistency(format!(
                "decomposition dimensions {h} + {} + {} ≠ {n} at degree {k}, weight {nu:?}",
                d_cols.cols(),
                del_cols.cols()
            )));
        }
        let concat = harm_mat.hstack(&d_cols).hstack(&del_cols);
        let inv = concat.inverse().ok_or_else(|| {
            Error::Inconsistency(format!(
                "ker □, im d, im ∂ fail to be independent at degree {k}, weight {nu:?}"
            ))
        })?;
        // projection = H · (first h rows of the inverse)
        let top = QMat::from_fn(h, n, |r, c| inv.at(r, c).clone());
        let projection = harm_mat.mul(&top);
        report.dim_harmonic += h;
        report.dim_im_d += d_cols.cols();
        report.dim_im_del += del_cols.cols();
        report.blocks.insert(nu, HodgeBlock { harmonic_basis: harm_mat, projection });
    }
    Ok(report)
}

fn column_basis(m: &QMat) -> QMat {
    let piv = m.column_pivots();
    QMat::from_fn(m.rows(), piv.len(), |r, c| m.at(r, piv[c]).clone())
}

/// A node of the flat operator diagram: the bundle label `-w·λ`, the module
/// highest weight `w·λ`, and the fiber rank.
#[derive(Debug, Clone)]
pub struct DiagramNode {
    pub word: WeylWord,
    pub length: usize,
    /// Weight of the induced line/vector bundle (the dual label `-w·λ`).
    pub bundle_weight: Weight,
    /// Levi highest weight of the cohomology piece (`w·λ`).
    pub levi_weight: Weight,
    pub rank: BigInt,
}

/// An arrow of the diagram, carried by the enveloping-algebra symbol of the
/// corresponding Verma morphism; `order` is its height-graded degree.
#[derive(Debug, Clone)]
pub struct DiagramArrow {
    pub src: usize,
    pub dst: usize,
    pub symbol: Uea,
    pub order: i64,
}

/// The flat operator diagram dual to the BGG resolution.
#[derive(Debug)]
pub struct BggDiagram {
    pub lambda: Weight,
    pub nodes: Vec<DiagramNode>,
    pub arrows: Vec<DiagramArrow>,
    nil: crate::chevalley::Nilpotent,
}

impl BggDiagram {
    pub fn nil(&self) -> &crate::chevalley::Nilpotent {
        &self.nil
    }

    pub fn orders_by_column(&self) -> Vec<Vec<i64>> {
        let max = self.nodes.iter().map(|n| n.length).max().unwrap_or(0);
        let mut out = vec![Vec::new(); max];
        for a in &self.arrows {
            let col = self.nodes[a.dst].length;
            out[col - 1].push(a.order);
        }
        for v in &mut out {
            v.sort();
        }
        out
    }
}

/// Build the operator diagram for the Borel parabolic by dualizing the
/// resolution: nodes from the degree-by-degree prediction, arrows carrying
/// the singular-vector symbols with their resolution signs.
pub fn bgg_diagram(
    rs: &RootSystem,
    chev: &Chevalley,
    lambda: &Weight,
    bounds: &Bounds,
) -> Result<BggDiagram> {
    let res = verma::build_bgg_resolution(rs, chev, lambda, bounds)?;
    let nodes: Vec<DiagramNode> = res
        .nodes
        .iter()
        .map(|n| DiagramNode {
            word: n.word.clone(),
            length: n.length,
            bundle_weight: n.weight.neg(),
            levi_weight: n.weight.clone(),
            rank: BigInt::from(1),
        })
        .collect();
    let mut arrows = Vec::new();
    for a in &res.arrows {
        let symbol = a.element.scale(&rat_int(a.sign));
        let order = symbol
            .graded_degree(res.nil())
            .ok_or_else(|| Error::Inconsistency("arrow symbol not graded-homogeneous".into()))?;
        if order <= 0 {
            return Err(Error::Inconsistency("arrow with nonpositive graded order".into()));
        }
        arrows.push(DiagramArrow { src: a.to, dst: a.from, symbol, order });
    }
    Ok(BggDiagram { lambda: lambda.clone(), nodes, arrows, nil: res.nil().clone() })
}

/// The index data of the complex-flag Euler characteristic argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerIndex {
    /// Euler characteristic of the flag manifold: the Schubert cell count.
    pub chi: BigInt,
    pub dim_v: BigInt,
    /// `χ · dim V`.
    pub index: BigInt,
    /// Alternating sum of the fiber ranks of the cohomology bundles.
    pub alt_rank_sum: BigInt,
}

pub fn euler_index(
    rs: &RootSystem,
    p: &ParabolicSubset,
    lambda: &Weight,
    bounds: &Bounds,
) -> Result<EulerIndex> {
    let hasse = rs.hasse_diagram(p, bounds)?;
    let grading = rs.parabolic_grading(p);
    let levi = p.levi();
    let chi = BigInt::from(hasse.nodes.len());
    let dim_v = repkit::weyl_dimension(rs, lambda)?;
    let mut alt = BigInt::zero();
    for node in &hasse.nodes {
        let nu = rs.dot_action(&node.word, lambda);
        let d = repkit::weyl_dimension_levi(rs, &grading.levi_roots, &levi, &nu)?;
        if node.length % 2 == 0 {
            alt += d;
        } else {
            alt -= d;
        }
    }
    Ok(EulerIndex { chi: chi.clone(), dim_v: dim_v.clone(), index: chi * dim_v, alt_rank_sum: alt })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootcore::TypeLabel;

    fn setup(l: TypeLabel, n: usize) -> (RootSystem, Chevalley) {
        let rs = RootSystem::new(l, n).unwrap();
        let chev = Chevalley::new(&rs).unwrap();
        (rs, chev)
    }

    fn ce(
        rs: &RootSystem,
        chev: &Chevalley,
        crossed: &[usize],
        fund: &[i64],
    ) -> CeComplex {
        let p = ParabolicSubset::from_crossed(rs.rank(), crossed.iter().copied()).unwrap();
        let lam = rs.weight_from_fundamental_ints(fund);
        CeComplex::new(rs, chev, &p, &lam, &Bounds::default()).unwrap()
    }

    #[test]
    fn a1_trivial_complex_has_zero_maps() {
        let (rs, chev) = setup(TypeLabel::A, 1);
        let c = ce(&rs, &chev, &[0], &[0]);
        assert_eq!(c.dim_degree(0), 1);
        assert_eq!(c.dim_degree(1), 1);
        for nu in c.weights_of_degree(0) {
            assert!(c.d_mat(0, &nu).map_or(true, QMat::is_zero));
        }
        for nu in c.weights_of_degree(1) {
            assert!(c.del_mat(1, &nu).map_or(true, QMat::is_zero));
        }
    }

    #[test]
    fn a2_borel_trivial_dims_and_rank() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let c = ce(&rs, &chev, &[0, 1], &[0, 0]);
        assert_eq!(
            (0..=3).map(|k| c.dim_degree(k)).collect::<Vec<_>>(),
            vec![1, 3, 3, 1]
        );
        // d₁ has rank 1: the dual of the single bracket relation
        let rank_d1: usize = c
            .weights_of_degree(1)
            .iter()
            .filter_map(|nu| c.d_mat(1, nu))
            .map(QMat::rank)
            .sum();
        assert_eq!(rank_d1, 1);
    }

    #[test]
    fn a2_one_crossed_abelian_with_module() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let c = ce(&rs, &chev, &[0], &[1, 0]);
        // p₊ is 2-dimensional and abelian; V is the 3-dimensional module
        assert_eq!(c.max_degree(), 2);
        assert_eq!(c.dim_degree(0), 3);
        assert_eq!(c.dim_degree(1), 6);
        assert_eq!(c.dim_degree(2), 3);
        // identities verified at construction; nothing more to assert here
    }

    #[test]
    fn cohomology_a2_borel_trivial() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let c = ce(&rs, &chev, &[0, 1], &[0, 0]);
        let h0 = cohomology(&rs, &chev, &c, 0).unwrap();
        assert_eq!(h0, vec![(Weight::zero(2), 1)]);
        let h1 = cohomology(&rs, &chev, &c, 1).unwrap();
        assert_eq!(
            h1,
            vec![
                (Weight::from_root(&[-1, 0]), 1),
                (Weight::from_root(&[0, -1]), 1)
            ]
        );
        let h3 = cohomology(&rs, &chev, &c, 3).unwrap();
        assert_eq!(h3, vec![(Weight::from_root(&[-2, -2]), 1)]);
    }

    #[test]
    fn prediction_matches_brute_force_small_grid() {
        let cases = [
            (TypeLabel::A, 1, vec![vec![0i64], vec![2]]),
            (TypeLabel::A, 2, vec![vec![0, 0], vec![1, 0], vec![1, 1]]),
            (TypeLabel::B, 2, vec![vec![0, 0], vec![0, 1]]),
        ];
        for (l, n, lambdas) in cases {
            let (rs, chev) = setup(l, n);
            for mask in 0..(1u32 << n) {
                let crossed: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let p = ParabolicSubset::from_crossed(n, crossed.iter().copied()).unwrap();
                for fund in &lambdas {
                    let lam = rs.weight_from_fundamental_ints(fund);
                    let c = CeComplex::new(&rs, &chev, &p, &lam, &Bounds::default()).unwrap();
                    let predicted = kostant_prediction(&rs, &p, &lam, &Bounds::default()).unwrap();
                    for k in 0..=c.max_degree() {
                        let brute = cohomology(&rs, &chev, &c, k).unwrap();
                        let want = predicted.get(k).cloned().unwrap_or_default();
                        assert_eq!(brute, want, "{l:?}{n} crossed={crossed:?} λ={fund:?} k={k}");
                        assert!(want.iter().all(|(_, m)| *m == 1));
                    }
                }
            }
        }
    }

    #[test]
    fn differentials_commute_with_levi_raising() {
        // [e_γ, d] = 0 and [e_γ, ∂] = 0 for Levi simple roots, blockwise;
        // exercised on a doubly-laced case where the form weights matter
        let (rs, chev) = setup(TypeLabel::B, 2);
        for crossed in [vec![0usize], vec![1usize]] {
            let p = ParabolicSubset::from_crossed(2, crossed.iter().copied()).unwrap();
            let lam = rs.weight_from_fundamental_ints(&[1, 0]);
            let c = CeComplex::new(&rs, &chev, &p, &lam, &Bounds::default()).unwrap();
            let gamma = p.levi()[0];
            for k in 0..=c.max_degree() {
                for nu in c.weights_of_degree(k) {
                    let r_here = levi_raising_matrix(&rs, &chev, &c, k, &nu, gamma);
                    let target = nu.add(&Weight::from_root(&unit(2, gamma)));
                    if k < c.max_degree() {
                        let d_here = c.d_mat(k, &nu).cloned().unwrap_or_else(|| {
                            QMat::zero(c.block_dim(k + 1, &nu), c.block_dim(k, &nu))
                        });
                        let d_there = c.d_mat(k, &target).cloned().unwrap_or_else(|| {
                            QMat::zero(c.block_dim(k + 1, &target), c.block_dim(k, &target))
                        });
                        let r_up = levi_raising_matrix(&rs, &chev, &c, k + 1, &nu, gamma);
                        assert_eq!(d_there.mul(&r_here), r_up.mul(&d_here), "d at k={k} nu={nu:?}");
                    }
                    if k > 0 {
                        let del_here = c.del_mat(k, &nu).cloned().unwrap_or_else(|| {
                            QMat::zero(c.block_dim(k - 1, &nu), c.block_dim(k, &nu))
                        });
                        let del_there = c.del_mat(k, &target).cloned().unwrap_or_else(|| {
                            QMat::zero(c.block_dim(k - 1, &target), c.block_dim(k, &target))
                        });
                        let r_down = levi_raising_matrix(&rs, &chev, &c, k - 1, &nu, gamma);
                        assert_eq!(
                            del_there.mul(&r_here),
                            r_down.mul(&del_here),
                            "∂ at k={k} nu={nu:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hodge_abelian_everything_harmonic() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let c = ce(&rs, &chev, &[0], &[0, 0]);
        for k in 0..=c.max_degree() {
            let rep = hodge_decomposition(&c, k).unwrap();
            assert_eq!(rep.dim_harmonic, rep.dim_total);
            assert_eq!(rep.dim_im_d, 0);
            assert_eq!(rep.dim_im_del, 0);
        }
    }

    #[test]
    fn hodge_a2_borel_trivial_degree_one() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let c = ce(&rs, &chev, &[0, 1], &[0, 0]);
        let rep = hodge_decomposition(&c, 1).unwrap();
        assert_eq!(rep.dim_total, 3);
        assert_eq!(rep.dim_harmonic, 2);
        // projections are idempotent and kill the image summands
        for (nu, block) in &rep.blocks {
            let p = &block.projection;
            assert_eq!(p.mul(p), *p, "at {nu:?}");
        }
    }

    #[test]
    fn hodge_matches_cohomology_dims() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let c = ce(&rs, &chev, &[0, 1], &[1, 0]);
        for k in 0..=c.max_degree() {
            let rep = hodge_decomposition(&c, k).unwrap();
            let h: usize = cohomology(&rs, &chev, &c, k)
                .unwrap()
                .iter()
                .map(|(nu, m)| {
                    let d = repkit::weyl_dimension_levi(
                        &rs,
                        &rs.parabolic_grading(&c.parabolic).levi_roots,
                        &c.parabolic.levi(),
                        nu,
                    )
                    .unwrap();
                    usize::try_from(d).unwrap() * m
                })
                .sum();
            assert_eq!(rep.dim_harmonic, h, "degree {k}");
        }
    }

    #[test]
    fn diagram_a1_single_arrow() {
        let (rs, chev) = setup(TypeLabel::A, 1);
        let d = bgg_diagram(&rs, &chev, &Weight::zero(1), &Bounds::default()).unwrap();
        assert_eq!(d.nodes.len(), 2);
        assert_eq!(d.arrows.len(), 1);
        assert_eq!(d.arrows[0].order, 1);
        // single generator symbol
        assert_eq!(d.arrows[0].symbol.terms.len(), 1);
    }

    #[test]
    fn diagram_a2_trivial_diamond() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let d = bgg_diagram(&rs, &chev, &Weight::zero(2), &Bounds::default()).unwrap();
        assert_eq!(d.nodes.len(), 6);
        assert_eq!(d.arrows.len(), 8);
        assert_eq!(
            d.orders_by_column(),
            vec![vec![1, 1], vec![2, 2, 2, 2], vec![1, 1]]
        );
        // bundle weights are the positive duals of the dot-action weights
        let mut bundle: Vec<Vec<i64>> = d
            .nodes
            .iter()
            .map(|n| n.bundle_weight.as_root_coords().unwrap())
            .collect();
        bundle.sort();
        assert_eq!(
            bundle,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 2],
                vec![2, 1],
                vec![2, 2]
            ]
        );
    }

    #[test]
    fn diagram_orders_recomputed_for_nontrivial_weight() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let lam = rs.weight_from_fundamental_ints(&[1, 0]);
        let d = bgg_diagram(&rs, &chev, &lam, &Bounds::default()).unwrap();
        for a in &d.arrows {
            // the order is the height difference of the two dot weights
            let diff = d.nodes[a.src]
                .levi_weight
                .sub(&d.nodes[a.dst].levi_weight)
                .as_root_coords()
                .unwrap();
            assert_eq!(a.order, diff.iter().sum::<i64>());
            assert!(a.order >= 1);
        }
    }

    #[test]
    fn euler_index_examples() {
        let (rs, _) = setup(TypeLabel::A, 2);
        let borel = ParabolicSubset::borel(2);
        let e = euler_index(&rs, &borel, &Weight::zero(2), &Bounds::default()).unwrap();
        assert_eq!(e.chi, BigInt::from(6));
        assert_eq!(e.index, BigInt::from(6));
        assert_eq!(e.alt_rank_sum, BigInt::zero());

        let (rs1, _) = setup(TypeLabel::A, 1);
        let e1 = euler_index(&rs1, &ParabolicSubset::borel(1), &Weight::zero(1), &Bounds::default())
            .unwrap();
        assert_eq!(e1.chi, BigInt::from(2));
        assert_eq!(e1.index, BigInt::from(2));

        let p = ParabolicSubset::from_crossed(2, [0]).unwrap();
        let lam = rs.weight_from_fundamental_ints(&[1, 0]);
        let e2 = euler_index(&rs, &p, &lam, &Bounds::default()).unwrap();
        assert_eq!(e2.chi, BigInt::from(3));
        assert_eq!(e2.index, BigInt::from(9));
    }

    #[test]
    fn ce_resource_bound() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let p = ParabolicSubset::borel(2);
        let bounds = Bounds { ce_max: 4, ..Bounds::default() };
        let r = CeComplex::new(&rs, &chev, &p, &Weight::zero(2), &bounds);
        assert!(matches!(r, Err(Error::ResourceExceeded { .. })));
    }
}
