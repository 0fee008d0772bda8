//! Chevalley structure constants, graded nilpotent algebras, and exact PBW
//! arithmetic in their universal enveloping algebras.
//!
//! Signs are gauged by the extraspecial-pair rule: for each non-simple
//! positive root `γ` the least decomposition `γ = α_i + β` with `α_i`
//! simple gets `N_{α_i,β} = +(p+1)`; every other constant is propagated
//! from those through the Jacobi identity and the triple rule
//! `N_{α,β}/(γ,γ) = N_{β,γ}/(α,α)` for `α+β+γ = 0`. The result is verified
//! wholesale: [`Chevalley::verify_jacobi`] checks the Jacobi identity on
//! every basis triple, and construction refuses to return an algebra that
//! fails it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::rootcore::{ParabolicSubset, RootSystem};
use crate::{Error, Rat, Result};

/// Which half of the root space a nilpotent algebra lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Minus,
    Plus,
}

/// A signed root: the positive-root index plus a sign.
pub type SignedRoot = (usize, bool); // (index, is_positive)

/// Result of bracketing two root vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootBracket {
    Zero,
    /// `[e_μ, e_ν] = coeff · e_ξ` with `ξ` the signed root `(idx, positive)`.
    Root { idx: usize, positive: bool, coeff: i64 },
    /// `[e_α, e_{-α}] = ± h_α`; coefficients of `h_α` over the simple coroots.
    Cartan { coroot: Vec<i64> },
}

/// Structure constants of the Chevalley basis
/// `{h_i} ∪ {e_α, e_{-α} : α ∈ Δ⁺}`.
#[derive(Debug, Clone)]
pub struct Chevalley {
    rank: usize,
    /// `N_{α,β}` for ordered pairs of positive roots with `α + β ∈ Δ⁺`.
    n_pos: BTreeMap<(usize, usize), i64>,
    /// Coefficients of each positive coroot over the simple coroots.
    coroots: Vec<Vec<i64>>,
    /// Cached pairing table `⟨α_j, α_i^∨⟩`: `pairings[j][i]`.
    pairings: Vec<Vec<i64>>,
}

impl Chevalley {
    pub fn new(rs: &RootSystem) -> Result<Chevalley> {
        let chev = Chevalley::build(rs)?;
        chev.verify_jacobi(rs)?;
        Ok(chev)
    }

    fn build(rs: &RootSystem) -> Result<Chevalley> {
        let m = rs.num_positive_roots();
        let rank = rs.rank();
        // The base order puts the simple roots first, in index order.
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            debug_assert_eq!(rs.positive_root_index(&e), Some(i));
        }

        let mut chev = Chevalley {
            rank,
            n_pos: BTreeMap::new(),
            coroots: Vec::with_capacity(m),
            pairings: Vec::with_capacity(m),
        };
        for idx in 0..m {
            let alpha = &rs.positive_roots()[idx];
            let d_alpha = rs.bilinear_int(alpha, alpha) / 2;
            let coroot: Vec<i64> = (0..rank)
                .map(|i| {
                    let num = alpha[i] * rs.sym(i);
                    debug_assert_eq!(num % d_alpha, 0);
                    num / d_alpha
                })
                .collect();
            chev.coroots.push(coroot);
            chev.pairings.push((0..rank).map(|i| rs.pairing_int(alpha, i)).collect());
        }

        // Positive-pair constants by increasing height of the sum.
        let mut by_height: Vec<usize> = (rank..m).collect();
        by_height.sort_by_key(|&g| (rs.root_height(g), g));
        for gamma in by_height {
            let gcoords = rs.positive_roots()[gamma].clone();
            // extraspecial pair: least simple root with γ - α_i ∈ Δ⁺
            let (i_star, rest) = (0..rank)
                .find_map(|i| {
                    let mut v = gcoords.clone();
                    v[i] -= 1;
                    rs.positive_root_index(&v).map(|r| (i, r))
                })
                .ok_or_else(|| Error::Inconsistency("root without simple summand".into()))?;
            let p = root_string_p(rs, i_star, rest);
            chev.n_pos.insert((i_star, rest), p + 1);
            chev.n_pos.insert((rest, i_star), -(p + 1));

            // remaining decompositions via the Jacobi identity against the
            // extraspecial pair
            for a in 0..m {
                let acoords = &rs.positive_roots()[a];
                let bcoords: Vec<i64> = gcoords.iter().zip(acoords).map(|(g, x)| g - x).collect();
                if bcoords.iter().any(|&c| c < 0) {
                    continue;
                }
                let Some(b) = rs.positive_root_index(&bcoords) else { continue };
                if a >= b || a == i_star {
                    continue;
                }
                // N_{a,b}·N_{γ,-α*} = -(N_{-α*,a}·N_{a-α*,b} + N_{b,-α*}·N_{b-α*,a})
                let n_gamma_mstar = chev
                    .mixed_constant(rs, gamma, i_star)
                    .expect("γ - α* is a root, so the constant is nonzero");
                let mut rhs = 0i64;
                if let Some(n1) = chev.mixed_constant(rs, a, i_star) {
                    // [e_{-α*}, e_a] = -N_{a,-α*} · e_{a-α*}
                    if let Some(a_minus) = sub_root(rs, a, i_star) {
                        if let Some(&n2) = chev.n_pos.get(&(a_minus, b)) {
                            rhs += -n1 * n2;
                        }
                    }
                }
                if let Some(n1) = chev.mixed_constant(rs, b, i_star) {
                    if let Some(b_minus) = sub_root(rs, b, i_star) {
                        if let Some(&n2) = chev.n_pos.get(&(b_minus, a)) {
                            rhs += n1 * n2;
                        }
                    }
                }
                let val = -rhs;
                debug_assert_eq!(val % n_gamma_mstar, 0);
                let n_ab = val / n_gamma_mstar;
                chev.n_pos.insert((a, b), n_ab);
                chev.n_pos.insert((b, a), -n_ab);
            }
        }
        Ok(chev)
    }

    /// `N_{μ,-η}` for positive roots `μ ≠ η` with `μ - η ∈ Δ`, reduced to
    /// positive-pair constants through the triple rule.
    fn mixed_constant(&self, rs: &RootSystem, mu: usize, eta: usize) -> Option<i64> {
        let diff: Vec<i64> = rs.positive_roots()[mu]
            .iter()
            .zip(&rs.positive_roots()[eta])
            .map(|(a, b)| a - b)
            .collect();
        if diff.iter().all(|&c| c == 0) {
            return None;
        }
        if diff.iter().all(|&c| c >= 0) {
            let sigma = rs.positive_root_index(&diff)?;
            // (μ, -η, -σ) sums to zero: N_{μ,-η} = -(σ,σ)/(μ,μ) · N_{η,σ}
            let n = *self.n_pos.get(&(eta, sigma))?;
            let sref = &rs.positive_roots()[sigma];
            let mref = &rs.positive_roots()[mu];
            let num = -rs.bilinear_int(sref, sref) * n;
            let den = rs.bilinear_int(mref, mref);
            debug_assert_eq!(num % den, 0);
            Some(num / den)
        } else if diff.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = diff.iter().map(|&c| -c).collect();
            let tau = rs.positive_root_index(&neg)?;
            // (μ, -η, τ) sums to zero: N_{μ,-η} = (τ,τ)/(η,η) · N_{τ,μ}
            let n = *self.n_pos.get(&(tau, mu))?;
            let tref = &rs.positive_roots()[tau];
            let eref = &rs.positive_roots()[eta];
            let num = rs.bilinear_int(tref, tref) * n;
            let den = rs.bilinear_int(eref, eref);
            debug_assert_eq!(num % den, 0);
            Some(num / den)
        } else {
            None
        }
    }

    /// `N_{α,β}` with both roots positive (`α + β ∈ Δ⁺`).
    pub fn n(&self, a: usize, b: usize) -> Option<i64> {
        self.n_pos.get(&(a, b)).copied()
    }

    /// Coefficients of the coroot `α^∨` over the simple coroots.
    pub fn coroot(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    /// Bracket `[e_μ, e_ν]` of two signed root vectors.
    pub fn bracket_roots(&self, rs: &RootSystem, a: SignedRoot, b: SignedRoot) -> RootBracket {
        let (ai, ap) = a;
        let (bi, bp) = b;
        if ai == bi {
            if ap == bp {
                return RootBracket::Zero;
            }
            let coroot = self.coroots[ai].clone();
            return if ap {
                RootBracket::Cartan { coroot }
            } else {
                RootBracket::Cartan { coroot: coroot.into_iter().map(|c| -c).collect() }
            };
        }
        let sum: Vec<i64> = rs.positive_roots()[ai]
            .iter()
            .zip(&rs.positive_roots()[bi])
            .map(|(x, y)| {
                let sx = if ap { *x } else { -x };
                let sy = if bp { *y } else { -y };
                sx + sy
            })
            .collect();
        let target = if sum.iter().all(|&c| c >= 0) {
            rs.positive_root_index(&sum).map(|k| (k, true))
        } else if sum.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = sum.iter().map(|&c| -c).collect();
            rs.positive_root_index(&neg).map(|k| (k, false))
        } else {
            None
        };
        let Some((k, kp)) = target else { return RootBracket::Zero };
        let coeff = match (ap, bp) {
            (true, true) => self.n_pos.get(&(ai, bi)).copied(),
            (false, false) => self.n_pos.get(&(ai, bi)).map(|n| -n),
            (true, false) => self.mixed_constant(rs, ai, bi),
            (false, true) => self.mixed_constant(rs, bi, ai).map(|n| -n),
        };
        match coeff {
            Some(c) if c != 0 => RootBracket::Root { idx: k, positive: kp, coeff: c },
            _ => RootBracket::Zero,
        }
    }

    /// Check the Jacobi identity on every basis triple.
    pub fn verify_jacobi(&self, rs: &RootSystem) -> Result<()> {
        let basis = self.basis(rs);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate().skip(i) {
                for z in basis.iter().skip(j) {
                    let mut acc = LieVec::zero(self.rank);
                    acc.add(&self.bracket(rs, x, &self.bracket(rs, y, z)));
                    acc.add(&self.bracket(rs, y, &self.bracket(rs, z, x)));
                    acc.add(&self.bracket(rs, z, &self.bracket(rs, x, y)));
                    if !acc.is_zero() {
                        return Err(Error::Inconsistency(format!(
                            "Jacobi identity fails on basis triple ({x:?}, {y:?}, {z:?})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn basis(&self, rs: &RootSystem) -> Vec<LieVec> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            let mut h = vec![0i64; self.rank];
            h[i] = 1;
            out.push(LieVec { h, e: BTreeMap::new() });
        }
        for idx in 0..rs.num_positive_roots() {
            for positive in [true, false] {
                let mut e = BTreeMap::new();
                e.insert((idx, positive), 1i64);
                out.push(LieVec { h: vec![0; self.rank], e });
            }
        }
        out
    }

    /// Full bilinear bracket on integral Lie algebra elements.
    pub fn bracket(&self, rs: &RootSystem, x: &LieVec, y: &LieVec) -> LieVec {
        let mut out = LieVec::zero(self.rank);
        // [h, e] and [e, h] terms
        for ((idx, pos), &c) in &y.e {
            let scal: i64 = x.h.iter().enumerate().map(|(i, &hi)| hi * self.pairings[*idx][i]).sum();
            let signed = if *pos { scal } else { -scal };
            if signed != 0 {
                *out.e.entry((*idx, *pos)).or_insert(0) += signed * c;
            }
        }
        for ((idx, pos), &c) in &x.e {
            let scal: i64 = y.h.iter().enumerate().map(|(i, &hi)| hi * self.pairings[*idx][i]).sum();
            let signed = if *pos { scal } else { -scal };
            if signed != 0 {
                *out.e.entry((*idx, *pos)).or_insert(0) -= signed * c;
            }
        }
        // [e, e] terms
        for (&a, &ca) in &x.e {
            for (&b, &cb) in &y.e {
                match self.bracket_roots(rs, a, b) {
                    RootBracket::Zero => {}
                    RootBracket::Root { idx, positive, coeff } => {
                        *out.e.entry((idx, positive)).or_insert(0) += ca * cb * coeff;
                    }
                    RootBracket::Cartan { coroot } => {
                        for (i, &hc) in coroot.iter().enumerate() {
                            out.h[i] += ca * cb * hc;
                        }
                    }
                }
            }
        }
        out.e.retain(|_, v| *v != 0);
        out
    }

    /// Overwrite one positive-pair constant. The result will generally fail
    /// [`Chevalley::verify_jacobi`]; this exists for negative controls.
    pub fn override_constant(&mut self, a: usize, b: usize, value: i64) {
        self.n_pos.insert((a, b), value);
    }

    /// Build the graded nilpotent algebra of a parabolic (the nilradical or
    /// its opposite), with basis ordered by (grading height, base order).
    pub fn nilpotent(&self, rs: &RootSystem, p: &ParabolicSubset, side: Side) -> Nilpotent {
        let grading = rs.parabolic_grading(p);
        let mut basis_roots: Vec<usize> = (0..rs.num_positive_roots())
            .filter(|&i| grading.heights[i] > 0)
            .collect();
        basis_roots.sort_by_key(|&i| (grading.heights[i], i));
        let degrees: Vec<i64> = basis_roots.iter().map(|&i| grading.heights[i]).collect();
        let weights: Vec<Vec<i64>> = basis_roots
            .iter()
            .map(|&i| {
                let r = &rs.positive_roots()[i];
                match side {
                    Side::Minus => r.iter().map(|&c| -c).collect(),
                    Side::Plus => r.clone(),
                }
            })
            .collect();
        let pos_of_root: BTreeMap<usize, usize> =
            basis_roots.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let mut brackets = BTreeMap::new();
        for a in 0..basis_roots.len() {
            for b in (a + 1)..basis_roots.len() {
                let (ra, rb) = (basis_roots[a], basis_roots[b]);
                let sum: Vec<i64> = rs.positive_roots()[ra]
                    .iter()
                    .zip(&rs.positive_roots()[rb])
                    .map(|(x, y)| x + y)
                    .collect();
                let Some(rc) = rs.positive_root_index(&sum) else { continue };
                let Some(&c_pos) = pos_of_root.get(&rc) else { continue };
                let Some(n) = self.n(ra, rb) else { continue };
                let coeff = match side {
                    Side::Plus => n,
                    Side::Minus => -n,
                };
                brackets.insert((a, b), (c_pos, coeff));
            }
        }
        Nilpotent {
            side,
            basis_roots,
            degrees,
            weights,
            brackets,
            depth: grading.depth,
            rank: rs.rank(),
        }
    }
}

/// An integral element of the Lie algebra in the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieVec {
    /// Coefficients over the simple coroots `h_i`.
    pub h: Vec<i64>,
    /// Coefficients over signed root vectors.
    pub e: BTreeMap<SignedRoot, i64>,
}

impl LieVec {
    pub fn zero(rank: usize) -> LieVec {
        LieVec { h: vec![0; rank], e: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|&c| c == 0) && self.e.values().all(|&c| c == 0)
    }

    pub fn add(&mut self, other: &LieVec) {
        for (a, b) in self.h.iter_mut().zip(&other.h) {
            *a += b;
        }
        for (k, &c) in &other.e {
            *self.e.entry(*k).or_insert(0) += c;
        }
        self.e.retain(|_, v| *v != 0);
    }
}

/// Largest `p ≥ 0` with `β - pα` a root.
fn root_string_p(rs: &RootSystem, alpha: usize, beta: usize) -> i64 {
    let a = &rs.positive_roots()[alpha];
    let b = &rs.positive_roots()[beta];
    let mut p = 0i64;
    loop {
        let v: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - (p + 1) * y).collect();
        if rs.is_root(&v) {
            p += 1;
        } else {
            return p;
        }
    }
}

fn sub_root(rs: &RootSystem, a: usize, b: usize) -> Option<usize> {
    let v: Vec<i64> = rs.positive_roots()[a]
        .iter()
        .zip(&rs.positive_roots()[b])
        .map(|(x, y)| x - y)
        .collect();
    if v.iter().any(|&c| c < 0) {
        return None;
    }
    rs.positive_root_index(&v)
}

// ----- graded nilpotent and its enveloping algebra -----

/// A graded nilpotent Lie algebra spanned by the root vectors of nonzero
/// parabolic height, with the bracket restricted from the Chevalley
/// constants.
#[derive(Debug, Clone)]
pub struct Nilpotent {
    side: Side,
    /// Positive-root indices, ordered by (grading height asc, base order).
    basis_roots: Vec<usize>,
    degrees: Vec<i64>,
    /// Weight of each basis vector in simple-root coordinates.
    weights: Vec<Vec<i64>>,
    /// `[x_a, x_b] = coeff · x_c` for `a < b`; absent entries are zero.
    brackets: BTreeMap<(usize, usize), (usize, i64)>,
    depth: i64,
    rank: usize,
}

/// A PBW monomial: exponents over the nilpotent basis.
pub type Mono = Vec<u32>;

impl Nilpotent {
    pub fn dim(&self) -> usize {
        self.basis_roots.len()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn depth(&self) -> i64 {
        self.depth
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis_roots(&self) -> &[usize] {
        &self.basis_roots
    }

    pub fn degree_of(&self, basis_idx: usize) -> i64 {
        self.degrees[basis_idx]
    }

    pub fn weight_of(&self, basis_idx: usize) -> &[i64] {
        &self.weights[basis_idx]
    }

    /// Basis position of a given positive-root index, if present.
    pub fn position_of_root(&self, root_idx: usize) -> Option<usize> {
        self.basis_roots.iter().position(|&r| r == root_idx)
    }

    /// `[x_a, x_b]` as `(basis index, coefficient)`, or `None` when zero.
    pub fn bracket(&self, a: usize, b: usize) -> Option<(usize, i64)> {
        match a.cmp(&b) {
            core::cmp::Ordering::Equal => None,
            core::cmp::Ordering::Less => self.brackets.get(&(a, b)).copied(),
            core::cmp::Ordering::Greater => self.brackets.get(&(b, a)).map(|&(c, n)| (c, -n)),
        }
    }

    pub fn mono_weight(&self, m: &Mono) -> Vec<i64> {
        let mut w = vec![0i64; self.rank];
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                for (wc, &rc) in w.iter_mut().zip(&self.weights[i]) {
                    *wc += i64::from(e) * rc;
                }
            }
        }
        w
    }

    /// Height-graded total degree of a monomial.
    pub fn mono_degree(&self, m: &Mono) -> i64 {
        m.iter().enumerate().map(|(i, &e)| i64::from(e) * self.degrees[i]).sum()
    }

    /// Straighten a word of basis generators into PBW normal form,
    /// accumulating into `acc`.
    fn straighten_into(&self, word: Vec<usize>, coeff: Rat, acc: &mut BTreeMap<Mono, Rat>) {
        let mut stack = vec![(word, coeff)];
        while let Some((w, c)) = stack.pop() {
            match (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]) {
                None => {
                    let mut mono = vec![0u32; self.dim()];
                    for &l in &w {
                        mono[l] += 1;
                    }
                    let entry = acc.entry(mono.clone()).or_insert_with(Rat::zero);
                    *entry += c;
                    if entry.is_zero() {
                        acc.remove(&mono);
                    }
                }
                Some(p) => {
                    let mut swapped = w.clone();
                    swapped.swap(p, p + 1);
                    if let Some((z, n)) = self.bracket(w[p], w[p + 1]) {
                        let mut contracted = Vec::with_capacity(w.len() - 1);
                        contracted.extend_from_slice(&w[..p]);
                        contracted.push(z);
                        contracted.extend_from_slice(&w[p + 2..]);
                        stack.push((contracted, c.clone() * crate::rat_int(n)));
                    }
                    stack.push((swapped, c));
                }
            }
        }
    }
}

/// An element of the universal enveloping algebra in PBW normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uea {
    pub terms: BTreeMap<Mono, Rat>,
}

impl Uea {
    pub fn zero() -> Uea {
        Uea { terms: BTreeMap::new() }
    }

    pub fn one(nil: &Nilpotent) -> Uea {
        Uea::from_mono(vec![0u32; nil.dim()], crate::rat_int(1))
    }

    pub fn generator(nil: &Nilpotent, i: usize) -> Uea {
        let mut mono = vec![0u32; nil.dim()];
        mono[i] = 1;
        Uea::from_mono(mono, crate::rat_int(1))
    }

    pub fn from_mono(m: Mono, coeff: Rat) -> Uea {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Uea { terms }
    }

    /// Normal form of an arbitrary word of basis generators.
    pub fn from_word(nil: &Nilpotent, word: &[usize]) -> Uea {
        let mut acc = BTreeMap::new();
        nil.straighten_into(word.to_vec(), crate::rat_int(1), &mut acc);
        acc.retain(|_, v| !v.is_zero());
        Uea { terms: acc }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Uea) -> Uea {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *e += c;
        }
        terms.retain(|_, v| !v.is_zero());
        Uea { terms }
    }

    pub fn scale(&self, s: &Rat) -> Uea {
        if s.is_zero() {
            return Uea::zero();
        }
        Uea { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn sub(&self, other: &Uea) -> Uea {
        self.add(&other.scale(&-crate::rat_int(1)))
    }

    /// Product in the enveloping algebra, straightened to normal form.
    pub fn mul(&self, other: &Uea, nil: &Nilpotent) -> Uea {
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut word = Vec::new();
                for (i, &e) in ma.iter().enumerate() {
                    for _ in 0..e {
                        word.push(i);
                    }
                }
                for (i, &e) in mb.iter().enumerate() {
                    for _ in 0..e {
                        word.push(i);
                    }
                }
                nil.straighten_into(word, ca * cb, &mut acc);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Uea { terms: acc }
    }

    /// Common weight of all monomials, if the element is homogeneous.
    pub fn weight(&self, nil: &Nilpotent) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = nil.mono_weight(it.next()?);
        for m in it {
            if nil.mono_weight(m) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Common height-graded degree, if homogeneous in that grading.
    pub fn graded_degree(&self, nil: &Nilpotent) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = nil.mono_degree(it.next()?);
        for m in it {
            if nil.mono_degree(m) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Leading monomial: maximal in the graded order (total exponent degree
    /// first, ties by reverse-lexicographic exponent comparison).
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().max_by(|(a, _), (b, _)| cmp_mono(a, b))
    }

    /// Rescale so the leading coefficient is 1.
    pub fn normalized(&self) -> Uea {
        match self.leading() {
            None => Uea::zero(),
            Some((_, c)) => {
                let inv = crate::rat_int(1) / c.clone();
                self.scale(&inv)
            }
        }
    }
}

/// Graded reverse-lexicographic comparison of exponent vectors: lower total
/// degree sorts first; at equal degree the vector with more mass on the
/// last differing generator sorts lower.
pub fn cmp_mono(a: &Mono, b: &Mono) -> core::cmp::Ordering {
    let ta: u64 = a.iter().map(|&x| u64::from(x)).sum();
    let tb: u64 = b.iter().map(|&x| u64::from(x)).sum();
    ta.cmp(&tb).then_with(|| {
        for i in (0..a.len().max(b.len())).rev() {
            let xa = a.get(i).copied().unwrap_or(0);
            let xb = b.get(i).copied().unwrap_or(0);
            if xa != xb {
                return xb.cmp(&xa);
            }
        }
        core::cmp::Ordering::Equal
    })
}
