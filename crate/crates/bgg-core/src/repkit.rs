//! Finite-dimensional irreducible modules, characters, and dimension
//! oracles.
//!
//! Two independent routes to the same data keep each other honest: the Weyl
//! dimension formula is a closed-form product, the Freudenthal recursion
//! builds weight multiplicities from scratch, and [`Irrep::new`] constructs
//! the module itself — the quotient of the Verma module by the radical of
//! the contravariant form — weight space by weight space, characterizing
//! the radical at each step as the joint kernel of the raising operators
//! into the already-built spaces. Agreement of all three is asserted by the
//! verification suites.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chevalley::{Chevalley, RootBracket};
use crate::linalg::QMat;
use crate::rootcore::{RootSystem, Weight};
use crate::{rat_int, Bounds, Error, Rat, Result};

/// Exact dimension of the irreducible module with highest weight `λ` by the
/// Weyl product formula `Π ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    ensure_dominant_integral(rs, lambda)?;
    let rho = rs.rho();
    let lam_rho = lambda.add(rho);
    let mut acc = Rat::one();
    for alpha in rs.positive_roots() {
        let a = Weight::from_root(alpha);
        acc *= rs.bilinear(&lam_rho, &a) / rs.bilinear(rho, &a);
    }
    if !acc.is_integer() {
        return Err(Error::Inconsistency(format!(
            "Weyl dimension product is not an integer: {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// Dimension of the irreducible Levi module with highest weight `ν`, via the
/// Weyl formula over the Levi positive roots.
pub fn weyl_dimension_levi(
    rs: &RootSystem,
    levi_roots: &[usize],
    levi_simples: &[usize],
    nu: &Weight,
) -> Result<BigInt> {
    for &i in levi_simples {
        let p = rs.pairing(nu, i);
        if !p.is_integer() || p.is_negative() {
            return Err(Error::InvalidInput(format!(
                "weight is not Levi-dominant-integral at simple root {i}"
            )));
        }
    }
    // ρ_L = half-sum of the Levi positive roots
    let mut rho_l = Weight::zero(rs.rank());
    for &r in levi_roots {
        rho_l = rho_l.add(&Weight::from_root(&rs.positive_roots()[r]));
    }
    rho_l = Weight { coords: rho_l.coords.iter().map(|c| c / rat_int(2)).collect() };
    let shifted = nu.add(&rho_l);
    let mut acc = Rat::one();
    for &r in levi_roots {
        let a = Weight::from_root(&rs.positive_roots()[r]);
        acc *= rs.bilinear(&shifted, &a) / rs.bilinear(&rho_l, &a);
    }
    if !acc.is_integer() {
        return Err(Error::Inconsistency("Levi dimension product not an integer".into()));
    }
    Ok(acc.to_integer())
}

fn ensure_dominant_integral(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    for i in 0..rs.rank() {
        let p = rs.pairing(lambda, i);
        if !p.is_integer() {
            return Err(Error::InvalidInput(format!(
                "weight is not integral at simple root {i}"
            )));
        }
        if p.is_negative() {
            return Err(Error::InvalidInput(format!(
                "weight is not dominant at simple root {i}"
            )));
        }
    }
    Ok(())
}

/// Weight multiplicities of a finite-dimensional module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub multiplicities: BTreeMap<Weight, usize>,
    pub total_dim: usize,
}

impl Character {
    pub fn multiplicity(&self, mu: &Weight) -> usize {
        self.multiplicities.get(mu).copied().unwrap_or(0)
    }
}

/// The lowest weight `w₀λ`, computed by reflecting into the antidominant
/// chamber (no group enumeration needed).
pub fn lowest_weight(rs: &RootSystem, lambda: &Weight) -> Weight {
    let mut v = lambda.clone();
    loop {
        let Some(i) = (0..rs.rank()).find(|&i| rs.pairing(&v, i).is_positive()) else {
            return v;
        };
        v = rs.reflect(i, &v);
    }
}

fn dominant_representative(rs: &RootSystem, mu: &Weight) -> Weight {
    let mut v = mu.clone();
    loop {
        let Some(i) = (0..rs.rank()).find(|&i| rs.pairing(&v, i).is_negative()) else {
            return v;
        };
        v = rs.reflect(i, &v);
    }
}

/// Exact weight multiplicities by the Freudenthal recursion.
///
/// Dominant multiplicities are generated top-down; the full character is
/// filled in by Weyl-orbit invariance. The total dimension is checked
/// against the Weyl formula before returning.
pub fn freudenthal_character(rs: &RootSystem, lambda: &Weight, bounds: &Bounds) -> Result<Character> {
    let dim = weyl_dimension(rs, lambda)?;
    if dim > BigInt::from(bounds.dim_max) {
        return Err(Error::ResourceExceeded {
            what: "irreducible module dimension",
            needed: usize::try_from(dim.clone()).unwrap_or(usize::MAX),
            bound: bounds.dim_max,
        });
    }

    let cmax = box_extent(rs, lambda)?;
    let rank = rs.rank();
    let rho = rs.rho();
    let lam_rho = lambda.add(rho);
    let lam_norm = rs.bilinear(&lam_rho, &lam_rho);

    // Dominant box points, by ascending height of λ - μ.
    let mut points: Vec<Vec<i64>> = Vec::new();
    enumerate_box(&cmax, &mut vec![], &mut points);
    points.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));

    let mut dominant_mult: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for c in &points {
        let mu = lambda.sub(&Weight::from_root(c));
        if (0..rank).any(|i| rs.pairing(&mu, i).is_negative()) {
            continue;
        }
        if c.iter().all(|&x| x == 0) {
            dominant_mult.insert(mu, BigInt::one());
            continue;
        }
        let mu_rho = mu.add(rho);
        let denom = lam_norm.clone() - rs.bilinear(&mu_rho, &mu_rho);
        if denom.is_zero() {
            // a dominant weight with ‖μ+ρ‖ = ‖λ+ρ‖ would have to be λ itself
            return Err(Error::Inconsistency("degenerate Freudenthal denominator".into()));
        }
        let mut numer = Rat::zero();
        for alpha in rs.positive_roots() {
            let aw = Weight::from_root(alpha);
            let mut k = 1i64;
            loop {
                let shift: Vec<i64> = c.iter().zip(alpha).map(|(ci, ai)| ci - k * ai).collect();
                if shift.iter().any(|&x| x < 0) {
                    break;
                }
                let nu = lambda.sub(&Weight::from_root(&shift));
                let m = orbit_multiplicity(rs, &dominant_mult, &nu);
                if !m.is_zero() {
                    let inner = rs.bilinear(&nu, &aw);
                    numer += inner * Rat::from_integer(m);
                }
                k += 1;
            }
        }
        let m = numer * rat_int(2) / denom;
        if !m.is_integer() {
            return Err(Error::Inconsistency("non-integral Freudenthal multiplicity".into()));
        }
        let m = m.to_integer();
        if m.is_negative() {
            return Err(Error::Inconsistency("negative Freudenthal multiplicity".into()));
        }
        if !m.is_zero() {
            dominant_mult.insert(mu, m);
        }
    }

    // Spread over Weyl orbits.
    let mut multiplicities: BTreeMap<Weight, usize> = BTreeMap::new();
    let mut total = 0usize;
    for (mu, m) in &dominant_mult {
        let m = usize::try_from(m.clone())
            .map_err(|_| Error::Inconsistency("multiplicity overflow".into()))?;
        for w in weyl_orbit(rs, mu) {
            multiplicities.insert(w, m);
            total += m;
        }
    }
    if BigInt::from(total) != dim {
        return Err(Error::Inconsistency(format!(
            "Freudenthal total {total} disagrees with Weyl dimension {dim}"
        )));
    }
    Ok(Character { multiplicities, total_dim: total })
}

fn box_extent(rs: &RootSystem, lambda: &Weight) -> Result<Vec<i64>> {
    let low = lowest_weight(rs, lambda);
    lambda
        .sub(&low)
        .as_root_coords()
        .ok_or_else(|| Error::Inconsistency("λ - w₀λ is not in the root lattice".into()))
}

fn enumerate_box(cmax: &[i64], prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() == cmax.len() {
        out.push(prefix.clone());
        return;
    }
    for v in 0..=cmax[prefix.len()] {
        prefix.push(v);
        enumerate_box(cmax, prefix, out);
        prefix.pop();
    }
}

fn orbit_multiplicity(rs: &RootSystem, dominant: &BTreeMap<Weight, BigInt>, nu: &Weight) -> BigInt {
    let d = dominant_representative(rs, nu);
    dominant.get(&d).cloned().unwrap_or_else(BigInt::zero)
}

/// Full Weyl orbit of a weight by closing under simple reflections.
pub fn weyl_orbit(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
    let mut stack = vec![mu.clone()];
    seen.insert(mu.clone(), ());
    while let Some(v) = stack.pop() {
        for i in 0..rs.rank() {
            let r = rs.reflect(i, &v);
            if !seen.contains_key(&r) {
                seen.insert(r.clone(), ());
                stack.push(r);
            }
        }
    }
    seen.into_keys().collect()
}

/// A block-diagonal operator between weight spaces of an [`Irrep`]: it
/// shifts every weight by a fixed amount and carries one exact matrix per
/// source weight.
#[derive(Debug, Clone)]
pub struct BlockOp {
    /// Weight shift in simple-root coordinates.
    pub shift: Vec<i64>,
    /// Source weight index → matrix into the target weight space.
    pub blocks: BTreeMap<usize, QMat>,
}

/// Explicit irreducible module with highest weight `λ`: weight-space bases
/// plus exact matrices of the simple generator actions.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub lambda: Weight,
    /// Weight list, sorted by (height of λ-μ, coordinates).
    pub weights: Vec<Weight>,
    /// Integer depth coordinates `λ - μ` per weight, in the same order.
    pub depths: Vec<Vec<i64>>,
    pub dims: Vec<usize>,
    pub dim: usize,
    index: BTreeMap<Vec<i64>, usize>,
    /// `(i, source weight index)` → matrix of `e_i`.
    e_blocks: BTreeMap<(usize, usize), QMat>,
    /// `(i, source weight index)` → matrix of `f_i`.
    f_blocks: BTreeMap<(usize, usize), QMat>,
}

impl Irrep {
    pub fn new(rs: &RootSystem, lambda: &Weight, bounds: &Bounds) -> Result<Irrep> {
        let dim_big = weyl_dimension(rs, lambda)?;
        if dim_big > BigInt::from(bounds.dim_max) {
            return Err(Error::ResourceExceeded {
                what: "irreducible module dimension",
                needed: usize::try_from(dim_big).unwrap_or(usize::MAX),
                bound: bounds.dim_max,
            });
        }
        let expected_dim = usize::try_from(dim_big).expect("bounded above");

        let rank = rs.rank();
        let cmax = box_extent(rs, lambda)?;
        let mut points: Vec<Vec<i64>> = Vec::new();
        enumerate_box(&cmax, &mut vec![], &mut points);
        points.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));

        // keyed by the integer depth vector c = λ - μ during construction
        let mut dims: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut e_by_depth: BTreeMap<(usize, Vec<i64>), QMat> = BTreeMap::new();
        let mut f_by_depth: BTreeMap<(usize, Vec<i64>), QMat> = BTreeMap::new();
        let mut order: Vec<Vec<i64>> = Vec::new();

        let depth_up = |c: &[i64], i: usize| -> Option<Vec<i64>> {
            if c[i] == 0 {
                return None;
            }
            let mut v = c.to_vec();
            v[i] -= 1;
            Some(v)
        };
        for c in &points {
            if c.iter().all(|&x| x == 0) {
                dims.insert(c.clone(), 1);
                order.push(c.clone());
                continue;
            }
            // candidate generators f_i(b) for b running over the space one
            // step up in the i direction
            let mut symbols: Vec<(usize, usize)> = Vec::new();
            let mut up_dims: Vec<usize> = vec![0; rank];
            for i in 0..rank {
                let d = depth_up(c, i)
                    .and_then(|up| dims.get(&up).copied())
                    .unwrap_or(0);
                up_dims[i] = d;
                for b in 0..d {
                    symbols.push((i, b));
                }
            }
            if symbols.is_empty() {
                continue;
            }
            // raising matrix on symbols: a combination is zero in the module
            // iff every e_j kills it (no singular vectors below the top)
            let mut row_offsets: Vec<usize> = vec![0; rank + 1];
            for j in 0..rank {
                row_offsets[j + 1] = row_offsets[j] + up_dims[j];
            }
            let total_rows = row_offsets[rank];
            let mut r = QMat::zero(total_rows, symbols.len());
            for (col, &(i, b)) in symbols.iter().enumerate() {
                let c_up = depth_up(c, i).expect("symbol direction is populated");
                for j in 0..rank {
                    let target_dim = row_offsets[j + 1] - row_offsets[j];
                    if target_dim == 0 {
                        continue;
                    }
                    // e_j(f_i b) = f_i(e_j b) + δ_ij ⟨ν, α_i^∨⟩ b
                    let mut col_vec = vec![Rat::zero(); target_dim];
                    if let Some(e_blk) = e_by_depth.get(&(j, c_up.clone())) {
                        let mut eb = vec![Rat::zero(); e_blk.rows()];
                        for rr in 0..e_blk.rows() {
                            eb[rr] = e_blk.at(rr, b).clone();
                        }
                        let above = depth_up(&c_up, j);
                        let f_blk = above.and_then(|a| f_by_depth.get(&(i, a)));
                        if let Some(f_blk) = f_blk {
                            let fv = f_blk.mul_vec(&eb);
                            for (cv, x) in col_vec.iter_mut().zip(fv) {
                                *cv += x;
                            }
                        } else if eb.iter().any(|x| !x.is_zero()) {
                            return Err(Error::Inconsistency(
                                "missing lowering block during module construction".into(),
                            ));
                        }
                    }
                    if i == j {
                        let nu = lambda.sub(&Weight::from_root(&c_up));
                        let scal = rs.pairing(&nu, i);
                        col_vec[b] += scal;
                    }
                    for (rr, x) in col_vec.into_iter().enumerate() {
                        if !x.is_zero() {
                            *r.at_mut(row_offsets[j] + rr, col) = x;
                        }
                    }
                }
            }
            let rref = r.rref();
            let pivots = rref.pivots.clone();
            let dim_mu = pivots.len();
            if dim_mu == 0 {
                continue;
            }
            // lowering blocks into μ: express every symbol over the pivot classes
            for i in 0..rank {
                if up_dims[i] == 0 {
                    continue;
                }
                let mut f_mat = QMat::zero(dim_mu, up_dims[i]);
                for b in 0..up_dims[i] {
                    let col = symbols.iter().position(|&s| s == (i, b)).expect("symbol exists");
                    if let Ok(p) = pivots.binary_search(&col) {
                        *f_mat.at_mut(p, b) = Rat::one();
                    } else {
                        for (prow, coeff) in rref.combo_over_pivots(col).into_iter().enumerate() {
                            *f_mat.at_mut(prow, b) = coeff;
                        }
                    }
                }
                let up = depth_up(c, i).expect("populated direction");
                f_by_depth.insert((i, up), f_mat);
            }
            // raising blocks out of μ: the R rows at the pivot columns
            for j in 0..rank {
                let target_dim = row_offsets[j + 1] - row_offsets[j];
                if target_dim == 0 {
                    continue;
                }
                let mut e_mat = QMat::zero(target_dim, dim_mu);
                for (p, &col) in pivots.iter().enumerate() {
                    for rr in 0..target_dim {
                        *e_mat.at_mut(rr, p) = r.at(row_offsets[j] + rr, col).clone();
                    }
                }
                e_by_depth.insert((j, c.clone()), e_mat);
            }
            dims.insert(c.clone(), dim_mu);
            order.push(c.clone());
        }

        let index: BTreeMap<Vec<i64>, usize> =
            order.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let dims_vec: Vec<usize> = order.iter().map(|w| dims[w]).collect();
        let dim: usize = dims_vec.iter().sum();
        if dim != expected_dim {
            return Err(Error::Inconsistency(format!(
                "constructed module dimension {dim} disagrees with Weyl dimension {expected_dim}"
            )));
        }
        let e_blocks = e_by_depth
            .into_iter()
            .map(|((i, w), m)| ((i, index[&w]), m))
            .collect();
        let f_blocks = f_by_depth
            .into_iter()
            .filter_map(|((i, w), m)| index.get(&w).map(|&wi| ((i, wi), m)))
            .collect();
        let weights: Vec<Weight> = order
            .iter()
            .map(|c| lambda.sub(&Weight::from_root(c)))
            .collect();
        Ok(Irrep {
            lambda: lambda.clone(),
            weights,
            depths: order,
            dims: dims_vec,
            dim,
            index,
            e_blocks,
            f_blocks,
        })
    }

    pub fn weight_index(&self, mu: &Weight) -> Option<usize> {
        let depth = self.lambda.sub(mu).as_root_coords()?;
        self.index.get(&depth).copied()
    }

    /// Index lookup by the integer depth vector `λ - μ`.
    pub fn index_of_depth(&self, depth: &[i64]) -> Option<usize> {
        self.index.get(depth).copied()
    }

    pub fn dim_of_weight(&self, mu: &Weight) -> usize {
        self.weight_index(mu).map_or(0, |i| self.dims[i])
    }

    /// Matrix of `e_i` out of the given weight space (`V_μ → V_{μ+α_i}`).
    pub fn e_block(&self, i: usize, wi: usize) -> Option<&QMat> {
        self.e_blocks.get(&(i, wi))
    }

    /// Matrix of `f_i` out of the given weight space (`V_μ → V_{μ-α_i}`).
    pub fn f_block(&self, i: usize, wi: usize) -> Option<&QMat> {
        self.f_blocks.get(&(i, wi))
    }

    pub fn character(&self) -> Character {
        Character {
            multiplicities: self
                .weights
                .iter()
                .zip(&self.dims)
                .map(|(w, &d)| (w.clone(), d))
                .collect(),
            total_dim: self.dim,
        }
    }

    /// The simple generator action as a [`BlockOp`].
    pub fn simple_op(&self, rs: &RootSystem, i: usize, raising: bool) -> BlockOp {
        let mut shift = vec![0i64; rs.rank()];
        shift[i] = if raising { 1 } else { -1 };
        let blocks = (0..self.weights.len())
            .filter_map(|wi| {
                let m = if raising { self.e_block(i, wi) } else { self.f_block(i, wi) };
                m.map(|m| (wi, m.clone()))
            })
            .collect();
        BlockOp { shift, blocks }
    }

    /// Action of the root vector `e_{±γ}` as a [`BlockOp`], built from the
    /// simple actions by nested commutators normalized with the Chevalley
    /// constants.
    pub fn root_op(
        &self,
        rs: &RootSystem,
        chev: &Chevalley,
        root_idx: usize,
        positive: bool,
    ) -> BlockOp {
        if root_idx < rs.rank() {
            return self.simple_op(rs, root_idx, positive);
        }
        let gamma = &rs.positive_roots()[root_idx];
        let (i_star, rest) = (0..rs.rank())
            .find_map(|i| {
                let mut v = gamma.clone();
                v[i] -= 1;
                rs.positive_root_index(&v).map(|r| (i, r))
            })
            .expect("non-simple root has a simple summand");
        let coeff = match chev.bracket_roots(rs, (i_star, positive), (rest, positive)) {
            RootBracket::Root { idx, positive: p, coeff } => {
                debug_assert_eq!((idx, p), (root_idx, positive));
                coeff
            }
            other => panic!("expected root bracket, got {other:?}"),
        };
        let a = self.root_op(rs, chev, i_star, positive);
        let b = self.root_op(rs, chev, rest, positive);
        self.commutator(rs, &a, &b).scaled(&(Rat::one() / rat_int(coeff)))
    }

    /// Compose `a ∘ b` (apply `b` first) as block operators.
    pub fn compose(&self, _rs: &RootSystem, a: &BlockOp, b: &BlockOp) -> BlockOp {
        let shift: Vec<i64> = a.shift.iter().zip(&b.shift).map(|(x, y)| x + y).collect();
        let mut blocks = BTreeMap::new();
        for (&wi, bm) in &b.blocks {
            let mid = self.shifted_index(wi, &b.shift);
            let Some(mid) = mid else { continue };
            let Some(am) = a.blocks.get(&mid) else { continue };
            let prod = am.mul(bm);
            if !prod.is_zero() {
                blocks.insert(wi, prod);
            }
        }
        BlockOp { shift, blocks }
    }

    pub fn op_add(&self, a: &BlockOp, b: &BlockOp, sign: i64) -> BlockOp {
        assert_eq!(a.shift, b.shift);
        let mut blocks = a.blocks.clone();
        for (&wi, bm) in &b.blocks {
            let scaled = bm.scale(&rat_int(sign));
            match blocks.get_mut(&wi) {
                Some(e) => *e = e.add(&scaled),
                None => {
                    blocks.insert(wi, scaled);
                }
            }
        }
        blocks.retain(|_, m| !m.is_zero());
        BlockOp { shift: a.shift.clone(), blocks }
    }

    pub fn commutator(&self, rs: &RootSystem, a: &BlockOp, b: &BlockOp) -> BlockOp {
        let ab = self.compose(rs, a, b);
        let ba = self.compose(rs, b, a);
        self.op_add(&ab, &ba, -1)
    }

    fn shifted_index(&self, wi: usize, shift: &[i64]) -> Option<usize> {
        let w = &self.weights[wi];
        let target = w.add(&Weight::from_root(shift));
        self.weight_index(&target)
    }

    /// Exhaustive check of `[e_i, f_j] = δ_ij h_i`, `h` acting by the
    /// weight pairing, and the matrix Serre relations.
    pub fn verify_relations(&self, rs: &RootSystem) -> Result<()> {
        let rank = rs.rank();
        for i in 0..rank {
            for j in 0..rank {
                let e = self.simple_op(rs, i, true);
                let f = self.simple_op(rs, j, false);
                let c = self.commutator(rs, &e, &f);
                for (wi, mu) in self.weights.iter().enumerate() {
                    let d = self.dims[wi];
                    let expect = if i == j {
                        let scal = rs.pairing(mu, i);
                        QMat::identity(d).scale(&scal)
                    } else {
                        QMat::zero(d, d)
                    };
                    let got = c.blocks.get(&wi).cloned().unwrap_or_else(|| QMat::zero(d, d));
                    if got != expect {
                        return Err(Error::Inconsistency(format!(
                            "[e_{i}, f_{j}] wrong on weight {mu:?}"
                        )));
                    }
                }
            }
        }
        // Serre: ad(e_i)^{1-a_ij}(e_j) = 0 and likewise for f
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let steps = (1 - rs.cartan()[i][j]) as usize;
                for raising in [true, false] {
                    let ei = self.simple_op(rs, i, raising);
                    let mut acc = self.simple_op(rs, j, raising);
                    for _ in 0..steps {
                        acc = self.commutator(rs, &ei, &acc);
                    }
                    if !acc.blocks.is_empty() {
                        return Err(Error::Inconsistency(format!(
                            "Serre relation ad(e_{i})^{steps}(e_{j}) != 0 (raising={raising})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl BlockOp {
    pub fn scaled(&self, s: &Rat) -> BlockOp {
        BlockOp {
            shift: self.shift.clone(),
            blocks: self.blocks.iter().map(|(&k, m)| (k, m.scale(s))).collect(),
        }
    }
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootcore::TypeLabel;

    fn rsys(l: TypeLabel, n: usize) -> RootSystem {
        RootSystem::new(l, n).unwrap()
    }

    #[test]
    fn weyl_dimension_examples() {
        let b = Bounds::default();
        let _ = b;
        let a1 = rsys(TypeLabel::A, 1);
        assert_eq!(weyl_dimension(&a1, &Weight::zero(1)).unwrap(), BigInt::from(1));
        let two_omega = a1.weight_from_fundamental_ints(&[2]);
        assert_eq!(weyl_dimension(&a1, &two_omega).unwrap(), BigInt::from(3));
        let a2 = rsys(TypeLabel::A, 2);
        let adj = a2.weight_from_fundamental_ints(&[1, 1]);
        assert_eq!(weyl_dimension(&a2, &adj).unwrap(), BigInt::from(8));
        // G2 adjoint has dimension 14
        let g2 = rsys(TypeLabel::G, 2);
        let g2adj = g2.weight_from_fundamental_ints(&[0, 1]);
        assert_eq!(weyl_dimension(&g2, &g2adj).unwrap(), BigInt::from(14));
    }

    #[test]
    fn weyl_dimension_rejects_bad_weights() {
        let a2 = rsys(TypeLabel::A, 2);
        let neg = a2.weight_from_fundamental_ints(&[-1, 0]);
        assert!(matches!(weyl_dimension(&a2, &neg), Err(Error::InvalidInput(_))));
        let frac = Weight { coords: alloc::vec![rat_int(1) / rat_int(3), Rat::zero()] };
        assert!(matches!(weyl_dimension(&a2, &frac), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn freudenthal_trivial() {
        let a2 = rsys(TypeLabel::A, 2);
        let ch = freudenthal_character(&a2, &Weight::zero(2), &Bounds::default()).unwrap();
        assert_eq!(ch.total_dim, 1);
        assert_eq!(ch.multiplicity(&Weight::zero(2)), 1);
    }

    #[test]
    fn freudenthal_a2_adjoint_zero_weight() {
        let a2 = rsys(TypeLabel::A, 2);
        let adj = a2.weight_from_fundamental_ints(&[1, 1]);
        let ch = freudenthal_character(&a2, &adj, &Bounds::default()).unwrap();
        assert_eq!(ch.total_dim, 8);
        assert_eq!(ch.multiplicity(&Weight::zero(2)), 2);
        // the six roots have multiplicity one
        for r in a2.positive_roots() {
            assert_eq!(ch.multiplicity(&Weight::from_root(r)), 1);
            let neg: Vec<i64> = r.iter().map(|&c| -c).collect();
            assert_eq!(ch.multiplicity(&Weight::from_root(&neg)), 1);
        }
    }

    #[test]
    fn freudenthal_a1_string() {
        let a1 = rsys(TypeLabel::A, 1);
        let lam = a1.weight_from_fundamental_ints(&[2]);
        let ch = freudenthal_character(&a1, &lam, &Bounds::default()).unwrap();
        assert_eq!(ch.total_dim, 3);
        // weights 2ω, 0, -2ω each once (2ω = α)
        assert_eq!(ch.multiplicity(&Weight::from_root(&[1])), 1);
        assert_eq!(ch.multiplicity(&Weight::zero(1)), 1);
        assert_eq!(ch.multiplicity(&Weight::from_root(&[-1])), 1);
    }

    #[test]
    fn character_is_weyl_invariant() {
        let b2 = rsys(TypeLabel::B, 2);
        let lam = b2.weight_from_fundamental_ints(&[1, 2]);
        let ch = freudenthal_character(&b2, &lam, &Bounds::default()).unwrap();
        for (mu, &m) in &ch.multiplicities {
            for i in 0..2 {
                assert_eq!(ch.multiplicity(&b2.reflect(i, mu)), m);
            }
        }
    }

    #[test]
    fn irrep_trivial_and_fundamental() {
        let a1 = rsys(TypeLabel::A, 1);
        let triv = Irrep::new(&a1, &Weight::zero(1), &Bounds::default()).unwrap();
        assert_eq!(triv.dim, 1);
        assert!(triv.e_blocks.is_empty());

        let fund = a1.weight_from_fundamental_ints(&[1]);
        let v2 = Irrep::new(&a1, &fund, &Bounds::default()).unwrap();
        assert_eq!(v2.dim, 2);
        assert_eq!(v2.dims, alloc::vec![1, 1]);
        // e maps the lower weight space isomorphically onto the higher one
        let lower = v2.weight_index(&a1.reflect(0, &fund)).unwrap();
        let e = v2.e_block(0, lower).unwrap();
        assert_eq!(e.rows(), 1);
        assert_eq!(e.cols(), 1);
        assert!(!e.at(0, 0).is_zero());
        v2.verify_relations(&a1).unwrap();
    }

    #[test]
    fn irrep_a2_fundamental_matches_freudenthal() {
        let a2 = rsys(TypeLabel::A, 2);
        let lam = a2.weight_from_fundamental_ints(&[1, 0]);
        let v = Irrep::new(&a2, &lam, &Bounds::default()).unwrap();
        assert_eq!(v.dim, 3);
        let ch = freudenthal_character(&a2, &lam, &Bounds::default()).unwrap();
        assert_eq!(v.character(), ch);
        v.verify_relations(&a2).unwrap();
    }

    #[test]
    fn irrep_grid_characters_and_relations() {
        let cases = [
            (TypeLabel::A, 1, alloc::vec![2]),
            (TypeLabel::A, 2, alloc::vec![1, 1]),
            (TypeLabel::A, 2, alloc::vec![2, 1]),
            (TypeLabel::A, 3, alloc::vec![0, 1, 0]),
            (TypeLabel::B, 2, alloc::vec![1, 1]),
            (TypeLabel::B, 2, alloc::vec![2, 2]),
            (TypeLabel::G, 2, alloc::vec![1, 0]),
            (TypeLabel::G, 2, alloc::vec![0, 1]),
        ];
        for (l, n, fund) in cases {
            let r = rsys(l, n);
            let lam = r.weight_from_fundamental_ints(&fund);
            let v = Irrep::new(&r, &lam, &Bounds::default()).unwrap();
            let ch = freudenthal_character(&r, &lam, &Bounds::default()).unwrap();
            assert_eq!(v.character(), ch, "{l:?}{n} {fund:?}");
            v.verify_relations(&r).unwrap();
        }
    }

    #[test]
    fn irrep_dimension_bound() {
        let a2 = rsys(TypeLabel::A, 2);
        let lam = a2.weight_from_fundamental_ints(&[3, 3]);
        let bounds = Bounds { dim_max: 10, ..Bounds::default() };
        assert!(matches!(
            Irrep::new(&a2, &lam, &bounds),
            Err(Error::ResourceExceeded { .. })
        ));
    }

    #[test]
    fn root_op_is_zero_beyond_adjoint_string() {
        // In the adjoint module of A2, e_z = [e_x, e_y]/N acts and its
        // square must vanish (2-step nilpotency of a long root vector).
        let a2 = rsys(TypeLabel::A, 2);
        let chev = Chevalley::new(&a2).unwrap();
        let adj = a2.weight_from_fundamental_ints(&[1, 1]);
        let v = Irrep::new(&a2, &adj, &Bounds::default()).unwrap();
        let z = a2.positive_root_index(&[1, 1]).unwrap();
        let ez = v.root_op(&a2, &chev, z, true);
        assert!(!ez.blocks.is_empty());
        let ezez = v.compose(&a2, &ez, &ez);
        let ez3 = v.compose(&a2, &ezez, &ez);
        assert!(ez3.blocks.is_empty());
    }
}
