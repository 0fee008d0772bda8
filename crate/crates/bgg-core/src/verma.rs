//! Truncated Verma modules, singular vectors, and BGG resolutions.
//!
//! A Verma module is free over the enveloping algebra of the lower
//! nilpotent, so its weight spaces are spanned by PBW monomials and the
//! whole module only ever exists here up to a height cutoff. Singular
//! vectors are found as exact kernels of the stacked raising operators;
//! the resolution's arrows are those vectors normalized to leading
//! coefficient 1, with signs fixed by solving the square-anticommutation
//! system over GF(2) and the differential property `δ² = 0` checked by
//! exact enveloping-algebra arithmetic at construction time.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::chevalley::{Chevalley, Mono, Nilpotent, RootBracket, Side, Uea};
use crate::linalg::QMat;
use crate::repkit;
use crate::rootcore::{ParabolicSubset, RootSystem, Weight, WeylWord};
use crate::{rat_int, Bounds, Error, Rat, Result};

/// All PBW monomials of the given weight-depth vector `β` (so the monomial
/// sits in the `λ - β` weight space of any Verma module).
pub fn monomials_of(nil: &Nilpotent, rs: &RootSystem, beta: &[i64]) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nil.dim()];
    fn rec(
        nil: &Nilpotent,
        rs: &RootSystem,
        pos: usize,
        remaining: &mut Vec<i64>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Mono>,
    ) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        if pos == nil.dim() {
            return;
        }
        let root = &rs.positive_roots()[nil.basis_roots()[pos]];
        let max_e = root
            .iter()
            .zip(remaining.iter())
            .filter(|(&rc, _)| rc > 0)
            .map(|(&rc, &rem)| rem / rc)
            .min()
            .unwrap_or(0)
            .max(0);
        for e in 0..=max_e {
            if e > 0 {
                for (rem, &rc) in remaining.iter_mut().zip(root) {
                    *rem -= rc;
                }
                cur[pos] = e as u32;
            }
            rec(nil, rs, pos + 1, remaining, cur, out);
            if e == max_e {
                for (rem, &rc) in remaining.iter_mut().zip(root) {
                    *rem += e * rc;
                }
                cur[pos] = 0;
            }
        }
    }
    let mut remaining = beta.to_vec();
    if remaining.iter().any(|&c| c < 0) {
        return out;
    }
    rec(nil, rs, 0, &mut remaining, &mut cur, &mut out);
    out.sort();
    out
}

/// Kostant partition counter with a memo table.
#[derive(Debug, Default)]
pub struct PartitionCounter {
    memo: BTreeMap<(usize, Vec<i64>), u64>,
}

impl PartitionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of ways to write `β` as an ℕ-combination of positive roots.
    pub fn count(&mut self, rs: &RootSystem, beta: &[i64]) -> u64 {
        if beta.iter().any(|&c| c < 0) {
            return 0;
        }
        self.count_from(rs, 0, beta)
    }

    fn count_from(&mut self, rs: &RootSystem, idx: usize, beta: &[i64]) -> u64 {
        if beta.iter().all(|&c| c == 0) {
            return 1;
        }
        if idx == rs.num_positive_roots() {
            return 0;
        }
        let key = (idx, beta.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let root = &rs.positive_roots()[idx];
        let mut total = 0u64;
        let mut rem = beta.to_vec();
        loop {
            total += self.count_from(rs, idx + 1, &rem);
            if rem.iter().zip(root).any(|(&r, &c)| r < c) {
                break;
            }
            for (r, &c) in rem.iter_mut().zip(root) {
                *r -= c;
            }
        }
        self.memo.insert(key, total);
        total
    }
}

/// A Verma module truncated at a height cutoff: weight spaces are indexed
/// by the depth vector `β = λ - μ` in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct Verma {
    pub lambda: Weight,
    pub cutoff: i64,
    nil: Nilpotent,
    spaces: BTreeMap<Vec<i64>, Vec<Mono>>,
}

impl Verma {
    pub fn new(rs: &RootSystem, chev: &Chevalley, lambda: &Weight, cutoff: i64) -> Verma {
        let nil = chev.nilpotent(rs, &ParabolicSubset::borel(rs.rank()), Side::Minus);
        // the simple generators must sit first in the PBW order
        for i in 0..rs.rank() {
            debug_assert_eq!(nil.position_of_root(i), Some(i));
        }
        let mut spaces: BTreeMap<Vec<i64>, Vec<Mono>> = BTreeMap::new();
        let mut cur = vec![0u32; nil.dim()];
        // enumerate every monomial of height ≤ cutoff, bucketed by weight
        fn rec(
            nil: &Nilpotent,
            rs: &RootSystem,
            pos: usize,
            budget: i64,
            cur: &mut Vec<u32>,
            spaces: &mut BTreeMap<Vec<i64>, Vec<Mono>>,
        ) {
            if pos == nil.dim() {
                let beta: Vec<i64> = {
                    let w = nil.mono_weight(cur);
                    w.iter().map(|&c| -c).collect()
                };
                spaces.entry(beta).or_default().push(cur.clone());
                return;
            }
            let h = nil.degree_of(pos);
            let mut e = 0i64;
            while e * h <= budget {
                cur[pos] = e as u32;
                rec(nil, rs, pos + 1, budget - e * h, cur, spaces);
                e += 1;
            }
            cur[pos] = 0;
        }
        rec(&nil, rs, 0, cutoff, &mut cur, &mut spaces);
        for monos in spaces.values_mut() {
            monos.sort();
        }
        Verma { lambda: lambda.clone(), cutoff, nil, spaces }
    }

    pub fn nil(&self) -> &Nilpotent {
        &self.nil
    }

    pub fn space(&self, beta: &[i64]) -> Option<&Vec<Mono>> {
        self.spaces.get(beta)
    }

    pub fn dim(&self, beta: &[i64]) -> usize {
        self.space(beta).map_or(0, Vec::len)
    }

    fn mono_index(&self, beta: &[i64], m: &Mono) -> Option<usize> {
        self.space(beta)?.binary_search(m).ok()
    }

    /// Raising action `e_i · (m ⊗ v_λ)` of a simple root vector, expanded
    /// over the monomials of the target weight space.
    pub fn e_action(
        &self,
        rs: &RootSystem,
        chev: &Chevalley,
        i: usize,
        mono: &Mono,
    ) -> BTreeMap<Mono, Rat> {
        let mut word = Vec::new();
        for (pos, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                word.push(pos);
            }
        }
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for j in 0..word.len() {
            let letter = word[j];
            let r = self.nil.basis_roots()[letter];
            match chev.bracket_roots(rs, (i, true), (r, false)) {
                RootBracket::Zero => {}
                RootBracket::Cartan { coroot } => {
                    // move h past the tail: it acts on λ minus the tail roots
                    let mut tail = vec![0i64; rs.rank()];
                    for &l in &word[j + 1..] {
                        let rr = &rs.positive_roots()[self.nil.basis_roots()[l]];
                        for (t, &c) in tail.iter_mut().zip(rr) {
                            *t += c;
                        }
                    }
                    let wt = self.lambda.sub(&Weight::from_root(&tail));
                    let mut scal = Rat::zero();
                    for (k, &hc) in coroot.iter().enumerate() {
                        scal += rat_int(hc) * rs.pairing(&wt, k);
                    }
                    if !scal.is_zero() {
                        let mut rest: Vec<usize> = Vec::with_capacity(word.len() - 1);
                        rest.extend_from_slice(&word[..j]);
                        rest.extend_from_slice(&word[j + 1..]);
                        let u = Uea::from_word(&self.nil, &rest).scale(&scal);
                        for (m, c) in u.terms {
                            let e = acc.entry(m).or_insert_with(Rat::zero);
                            *e += c;
                        }
                    }
                }
                RootBracket::Root { idx, positive, coeff } => {
                    debug_assert!(!positive, "raising bracket cannot stay positive here");
                    let pos_new = self
                        .nil
                        .position_of_root(idx)
                        .expect("target root lives in the full lower nilpotent");
                    let mut replaced = word.clone();
                    replaced[j] = pos_new;
                    let u = Uea::from_word(&self.nil, &replaced).scale(&rat_int(coeff));
                    for (m, c) in u.terms {
                        let e = acc.entry(m).or_insert_with(Rat::zero);
                        *e += c;
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// Matrix of `e_i` from the `β` weight space to the `β - α_i` one.
    pub fn e_matrix(&self, rs: &RootSystem, chev: &Chevalley, i: usize, beta: &[i64]) -> QMat {
        let source = self.space(beta).cloned().unwrap_or_default();
        let mut target_beta = beta.to_vec();
        target_beta[i] -= 1;
        let target_dim = if target_beta.iter().any(|&c| c < 0) {
            0
        } else {
            self.dim(&target_beta)
        };
        let mut m = QMat::zero(target_dim, source.len());
        if target_dim == 0 {
            return m;
        }
        for (col, mono) in source.iter().enumerate() {
            for (tm, c) in self.e_action(rs, chev, i, mono) {
                let row = self
                    .mono_index(&target_beta, &tm)
                    .expect("raising image stays within the truncation");
                *m.at_mut(row, col) = c;
            }
        }
        m
    }

    /// Matrix of `f_i` from the `β` weight space to the `β + α_i` one.
    /// Zero-sized if the target exceeds the cutoff.
    pub fn f_matrix(&self, _rs: &RootSystem, _chev: &Chevalley, i: usize, beta: &[i64]) -> QMat {
        let source = self.space(beta).cloned().unwrap_or_default();
        let mut target_beta = beta.to_vec();
        target_beta[i] += 1;
        let target_dim = self.dim(&target_beta);
        let mut m = QMat::zero(target_dim, source.len());
        if target_dim == 0 {
            return m;
        }
        let gen = Uea::generator(&self.nil, i);
        for (col, mono) in source.iter().enumerate() {
            let prod = gen.mul(&Uea::from_mono(mono.clone(), rat_int(1)), &self.nil);
            for (tm, c) in prod.terms {
                let row = self
                    .mono_index(&target_beta, &tm)
                    .expect("lowering image is a monomial of the right weight");
                *m.at_mut(row, col) = c;
            }
        }
        m
    }

    /// Matrix of the raising action of an arbitrary positive root vector,
    /// built by nested commutators of the simple raising matrices.
    pub fn raising_root_matrix(
        &self,
        rs: &RootSystem,
        chev: &Chevalley,
        root_idx: usize,
        beta: &[i64],
    ) -> QMat {
        if root_idx < rs.rank() {
            return self.e_matrix(rs, chev, root_idx, beta);
        }
        let gamma = &rs.positive_roots()[root_idx];
        let (i_star, rest) = (0..rs.rank())
            .find_map(|i| {
                let mut v = gamma.clone();
                v[i] -= 1;
                rs.positive_root_index(&v).map(|r| (i, r))
            })
            .expect("non-simple root has a simple summand");
        let coeff = match chev.bracket_roots(rs, (i_star, true), (rest, true)) {
            RootBracket::Root { coeff, .. } => coeff,
            other => panic!("expected a root bracket, got {other:?}"),
        };
        // e_γ = [e_*, e_rest]/c as operators
        let rest_root = rs.positive_roots()[rest].clone();
        let mut beta_after_rest: Vec<i64> = beta.to_vec();
        for (b, &c) in beta_after_rest.iter_mut().zip(&rest_root) {
            *b -= c;
        }
        let star_then_rest = if beta_after_rest.iter().all(|&c| c >= 0) {
            let first = self.raising_root_matrix(rs, chev, rest, beta);
            let second = self.e_matrix(rs, chev, i_star, &beta_after_rest);
            second.mul(&first)
        } else {
            let mut t = beta.to_vec();
            for (b, &c) in t.iter_mut().zip(gamma) {
                *b -= c;
            }
            let rows = if t.iter().any(|&c| c < 0) { 0 } else { self.dim(&t) };
            QMat::zero(rows, self.dim(beta))
        };
        let mut beta_after_star = beta.to_vec();
        beta_after_star[i_star] -= 1;
        let rest_then_star = if beta_after_star.iter().all(|&c| c >= 0) {
            let first = self.e_matrix(rs, chev, i_star, beta);
            let second = self.raising_root_matrix(rs, chev, rest, &beta_after_star);
            second.mul(&first)
        } else {
            let mut t = beta.to_vec();
            for (b, &c) in t.iter_mut().zip(gamma) {
                *b -= c;
            }
            let rows = if t.iter().any(|&c| c < 0) { 0 } else { self.dim(&t) };
            QMat::zero(rows, self.dim(beta))
        };
        star_then_rest.sub(&rest_then_star).scale(&(rat_int(1) / rat_int(coeff)))
    }

    /// Gram matrix of the contravariant form on the `β` weight space:
    /// `C(m_i ⊗ v, m_j ⊗ v)` computed by raising `m_j ⊗ v` along the
    /// transposed letters of `m_i` and reading off the top coefficient.
    pub fn contravariant_gram(&self, rs: &RootSystem, chev: &Chevalley, beta: &[i64]) -> QMat {
        let monos = self.space(beta).cloned().unwrap_or_default();
        let n = monos.len();
        let mut g = QMat::zero(n, n);
        for (i, mi) in monos.iter().enumerate() {
            let mut letters = Vec::new();
            for (pos, &e) in mi.iter().enumerate() {
                for _ in 0..e {
                    letters.push(pos);
                }
            }
            for (j, mj) in monos.iter().enumerate() {
                let mut vec_beta = beta.to_vec();
                let mut v = vec![Rat::zero(); self.dim(&vec_beta)];
                v[self.mono_index(&vec_beta, mj).unwrap()] = rat_int(1);
                for &l in &letters {
                    let r = self.nil.basis_roots()[l];
                    let m = self.raising_root_matrix(rs, chev, r, &vec_beta);
                    v = m.mul_vec(&v);
                    for (b, &c) in vec_beta.iter_mut().zip(&rs.positive_roots()[r]) {
                        *b -= c;
                    }
                    if v.is_empty() {
                        break;
                    }
                }
                if v.len() == 1 {
                    *g.at_mut(i, j) = v[0].clone();
                }
            }
        }
        g
    }
}

/// A singular vector `u ⊗ v_λ` with `e_i u ⊗ v_λ = 0` for all `i`.
#[derive(Debug, Clone)]
pub struct SingularVector {
    /// The PBW element, normalized to leading coefficient 1.
    pub element: Uea,
    /// Weight of the vector (the source highest weight).
    pub source: Weight,
    /// Highest weight of the ambient Verma module.
    pub target: Weight,
}

/// Outcome of a singular-vector search.
#[derive(Debug, Clone)]
pub enum SingularOutcome {
    Found(SingularVector),
    NotFound,
}

/// Solve `e_i x = 0` in the weight space `at` of the Verma module with
/// highest weight `highest`.
pub fn singular_vector_at(
    rs: &RootSystem,
    chev: &Chevalley,
    highest: &Weight,
    at: &Weight,
) -> Result<SingularOutcome> {
    let Some(beta) = highest.sub(at).as_root_coords() else {
        return Ok(SingularOutcome::NotFound);
    };
    if beta.iter().any(|&c| c < 0) {
        return Ok(SingularOutcome::NotFound);
    }
    let verma = Verma::new(rs, chev, highest, beta.iter().sum());
    let dim = verma.dim(&beta);
    if dim == 0 {
        return Ok(SingularOutcome::NotFound);
    }
    let mut stacked: Option<QMat> = None;
    for i in 0..rs.rank() {
        let m = verma.e_matrix(rs, chev, i, &beta);
        if m.rows() == 0 {
            continue;
        }
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m),
        });
    }
    let kernel = match stacked {
        None => QMat::identity(dim)
            .col(0)
            .into_iter()
            .map(|_| ())
            .enumerate()
            .map(|(k, ())| {
                let mut v = vec![Rat::zero(); dim];
                v[k] = rat_int(1);
                v
            })
            .collect::<Vec<_>>(),
        Some(s) => s.nullspace(),
    };
    match kernel.len() {
        0 => Ok(SingularOutcome::NotFound),
        1 => {
            let monos = verma.space(&beta).unwrap();
            let mut u = Uea::zero();
            for (m, c) in monos.iter().zip(&kernel[0]) {
                if !c.is_zero() {
                    u = u.add(&Uea::from_mono(m.clone(), c.clone()));
                }
            }
            Ok(SingularOutcome::Found(SingularVector {
                element: u.normalized(),
                source: at.clone(),
                target: highest.clone(),
            }))
        }
        d => Err(Error::Inconsistency(format!(
            "singular-vector space at {at:?} in M({highest:?}) has dimension {d}, not 0 or 1"
        ))),
    }
}

/// Existence of a nonzero module map `M(μ) → M(λ)` (a singular vector of
/// weight `μ` in `M(λ)`), decided by the orbit-and-Bruhat criterion.
pub fn morphism_exists(
    rs: &RootSystem,
    mu: &Weight,
    lambda: &Weight,
    bounds: &Bounds,
) -> Result<bool> {
    let diff = lambda.sub(mu);
    let Some(beta) = diff.as_root_coords() else { return Ok(false) };
    if beta.iter().any(|&c| c < 0) {
        return Ok(false);
    }
    // μ must be integral (then λ is too, since they differ by roots)
    for i in 0..rs.rank() {
        if !rs.pairing(mu, i).is_integer() {
            return Ok(false);
        }
    }
    let rho = rs.rho();
    let mu_rho = mu.add(rho);
    let lam_rho = lambda.add(rho);
    let group = rs.weyl_group(bounds)?;
    let mut w1s = Vec::new();
    let mut w2s = Vec::new();
    // dominant representative of the ρ-shifted orbit
    let nu = {
        let mut v = lam_rho.clone();
        loop {
            let Some(i) = (0..rs.rank()).find(|&i| rs.pairing(&v, i).is_negative()) else {
                break v;
            };
            v = rs.reflect(i, &v);
        }
    };
    for e in &group.elements {
        let img = rs.apply_word(&e.word, &nu);
        if img == mu_rho {
            w1s.push(e.word.clone());
        }
        if img == lam_rho {
            w2s.push(e.word.clone());
        }
    }
    for w2 in &w2s {
        for w1 in &w1s {
            if rs.bruhat_leq(w2, w1) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Singular vector for the dot-action weight `w · λ` inside `M(λ)`, with
/// the outcome cross-checked against the morphism-existence criterion.
pub fn singular_vector(
    rs: &RootSystem,
    chev: &Chevalley,
    lambda: &Weight,
    w: &WeylWord,
    bounds: &Bounds,
) -> Result<SingularOutcome> {
    let at = rs.dot_action(w, lambda);
    let outcome = singular_vector_at(rs, chev, lambda, &at)?;
    let predicted = if rs.is_dominant_integral(lambda) {
        true
    } else {
        morphism_exists(rs, &at, lambda, bounds)?
    };
    match (&outcome, predicted) {
        (SingularOutcome::Found(_), true) | (SingularOutcome::NotFound, false) => Ok(outcome),
        (SingularOutcome::Found(_), false) => Err(Error::Inconsistency(format!(
            "found a singular vector at {at:?} where the criterion predicts none"
        ))),
        (SingularOutcome::NotFound, true) => Err(Error::Inconsistency(format!(
            "no singular vector at {at:?} where the criterion predicts one"
        ))),
    }
}

/// One term of the resolution: a Weyl element and its dot-action weight.
#[derive(Debug, Clone)]
pub struct ResolutionNode {
    pub word: WeylWord,
    pub length: usize,
    pub weight: Weight,
}

/// One arrow `M(w·λ) → M(u·λ)` for a covering pair `u ⋖ w`: right
/// multiplication by `element`, scaled by `sign`.
#[derive(Debug, Clone)]
pub struct ResolutionArrow {
    /// Index of the longer node `w` (the source module).
    pub from: usize,
    /// Index of the shorter node `u` (the target module).
    pub to: usize,
    pub element: Uea,
    pub sign: i64,
}

/// The BGG resolution of the irreducible module with highest weight `λ`.
#[derive(Debug, Clone)]
pub struct BggResolution {
    pub lambda: Weight,
    /// Sorted by (length, canonical word).
    pub nodes: Vec<ResolutionNode>,
    pub arrows: Vec<ResolutionArrow>,
    nil: Nilpotent,
}

impl BggResolution {
    pub fn nil(&self) -> &Nilpotent {
        &self.nil
    }

    pub fn max_length(&self) -> usize {
        self.nodes.iter().map(|n| n.length).max().unwrap_or(0)
    }

    pub fn nodes_of_length(&self, k: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].length == k).collect()
    }

    pub fn arrows_from_length(&self, k: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.nodes[self.arrows[a].from].length == k)
            .collect()
    }
}

/// Assemble the BGG resolution of `V(λ)` over the Borel.
pub fn build_bgg_resolution(
    rs: &RootSystem,
    chev: &Chevalley,
    lambda: &Weight,
    bounds: &Bounds,
) -> Result<BggResolution> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::InvalidInput(
            "BGG resolution requires a dominant integral highest weight".into(),
        ));
    }
    let hasse = rs.hasse_diagram(&ParabolicSubset::borel(rs.rank()), bounds)?;
    let nodes: Vec<ResolutionNode> = hasse
        .nodes
        .iter()
        .map(|n| ResolutionNode {
            word: n.word.clone(),
            length: n.length,
            weight: rs.dot_action(&n.word, lambda),
        })
        .collect();

    let mut arrows: Vec<ResolutionArrow> = Vec::new();
    for &(lower, upper) in &hasse.edges {
        let outcome =
            singular_vector_at(rs, chev, &nodes[lower].weight, &nodes[upper].weight)?;
        let SingularOutcome::Found(sv) = outcome else {
            return Err(Error::Inconsistency(format!(
                "missing singular vector for covering pair {:?} < {:?}",
                nodes[lower].word, nodes[upper].word
            )));
        };
        arrows.push(ResolutionArrow {
            from: upper,
            to: lower,
            element: sv.element,
            sign: 1,
        });
    }

    // Solve the sign system: every length-2 interval (square) must carry
    // sign product -1.
    let arrow_of_pair: BTreeMap<(usize, usize), usize> = arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| ((a.to, a.from), ai))
        .collect();
    let mut squares: Vec<[usize; 4]> = Vec::new();
    for u in 0..nodes.len() {
        for z in 0..nodes.len() {
            if nodes[z].length != nodes[u].length + 2 {
                continue;
            }
            let mids: Vec<usize> = (0..nodes.len())
                .filter(|&w| {
                    arrow_of_pair.contains_key(&(u, w)) && arrow_of_pair.contains_key(&(w, z))
                })
                .collect();
            if mids.is_empty() {
                continue;
            }
            if mids.len() != 2 {
                return Err(Error::Inconsistency(format!(
                    "length-2 interval with {} middle elements",
                    mids.len()
                )));
            }
            squares.push([
                arrow_of_pair[&(u, mids[0])],
                arrow_of_pair[&(mids[0], z)],
                arrow_of_pair[&(u, mids[1])],
                arrow_of_pair[&(mids[1], z)],
            ]);
        }
    }
    let signs = solve_sign_system(arrows.len(), &squares)
        .ok_or_else(|| Error::Inconsistency("square sign system unsolvable".into()))?;
    for (a, &s) in arrows.iter_mut().zip(&signs) {
        a.sign = if s { -1 } else { 1 };
    }

    let resolution = BggResolution {
        lambda: lambda.clone(),
        nodes,
        arrows,
        nil: chev.nilpotent(rs, &ParabolicSubset::borel(rs.rank()), Side::Minus),
    };

    // δ² = 0, checked arrow-wise by exact algebra in the enveloping algebra.
    for sq in &squares {
        let path1 = compose_arrows(&resolution, sq[1], sq[0]);
        let path2 = compose_arrows(&resolution, sq[3], sq[2]);
        if !path1.add(&path2).is_zero() {
            return Err(Error::Inconsistency(
                "square does not anticommute after sign assignment".into(),
            ));
        }
    }
    Ok(resolution)
}

/// `sign·s_{z,w} · sign·s_{w,u}` as an element of the enveloping algebra.
fn compose_arrows(res: &BggResolution, upper_arrow: usize, lower_arrow: usize) -> Uea {
    let up = &res.arrows[upper_arrow];
    let low = &res.arrows[lower_arrow];
    debug_assert_eq!(up.to, low.from);
    up.element
        .mul(&low.element, &res.nil)
        .scale(&rat_int(up.sign * low.sign))
}

/// GF(2) solve: one variable per arrow, one equation `Σ x = 1` per square.
fn solve_sign_system(num_vars: usize, squares: &[[usize; 4]]) -> Option<Vec<bool>> {
    let mut rows: Vec<(Vec<bool>, bool)> = squares
        .iter()
        .map(|sq| {
            let mut row = vec![false; num_vars];
            for &v in sq {
                row[v] = !row[v];
            }
            (row, true)
        })
        .collect();
    let mut pivot_of_var: Vec<Option<usize>> = vec![None; num_vars];
    let mut used = vec![false; rows.len()];
    for var in 0..num_vars {
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r].0[var]) else {
            continue;
        };
        used[r] = true;
        pivot_of_var[var] = Some(r);
        for rr in 0..rows.len() {
            if rr != r && rows[rr].0[var] {
                let (a, b) = if rr < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&mut lo[rr], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(rr);
                    (&mut hi[0], &lo[r])
                };
                for (x, y) in a.0.iter_mut().zip(&b.0) {
                    *x ^= y;
                }
                a.1 ^= b.1;
            }
        }
    }
    // inconsistent row: 0 = 1
    if rows.iter().any(|(r, rhs)| *rhs && r.iter().all(|&x| !x)) {
        return None;
    }
    let mut x = vec![false; num_vars];
    for var in 0..num_vars {
        if let Some(r) = pivot_of_var[var] {
            x[var] = rows[r].1;
        }
    }
    Some(x)
}

/// Exactness report for a resolution, checked weight space by weight space.
#[derive(Debug, Clone)]
pub struct ResolutionReport {
    pub cutoff: i64,
    /// `(μ, k, defect)` for every degree `k ≥ 1` with nonzero defect.
    pub defects: Vec<(Weight, usize, usize)>,
    /// `(μ, dim H₀, expected dim V(λ)_μ)` per weight.
    pub homology_zero: Vec<(Weight, usize, usize)>,
}

impl ResolutionReport {
    pub fn is_clean(&self) -> bool {
        self.defects.is_empty() && self.homology_zero.iter().all(|(_, got, want)| got == want)
    }
}

/// Check exactness of the resolution on every weight within height `n` of
/// the top, and compare zeroth homology with the module's character.
pub fn verify_resolution(
    rs: &RootSystem,
    res: &BggResolution,
    n: i64,
    bounds: &Bounds,
) -> Result<ResolutionReport> {
    let character = repkit::freudenthal_character(rs, &res.lambda, bounds)?;
    let max_len = res.max_length();
    let mut defects = Vec::new();
    let mut homology_zero = Vec::new();

    let mut betas: Vec<Vec<i64>> = Vec::new();
    enumerate_heights(rs.rank(), n, &mut vec![], &mut betas);
    for beta in &betas {
        let mu = res.lambda.sub(&Weight::from_root(beta));
        // basis of each level at this weight
        let mut level_monos: Vec<Vec<(usize, Mono)>> = vec![Vec::new(); max_len + 1];
        for (ni, node) in res.nodes.iter().enumerate() {
            let Some(gamma) = node.weight.sub(&mu).as_root_coords() else { continue };
            if gamma.iter().any(|&c| c < 0) {
                continue;
            }
            for m in monomials_of(res.nil(), rs, &gamma) {
                level_monos[node.length].push((ni, m));
            }
        }
        let dims: Vec<usize> = level_monos.iter().map(Vec::len).collect();
        // δ_k : level k → level k-1
        let mut deltas: Vec<QMat> = Vec::new();
        for k in 1..=max_len {
            let mut d = QMat::zero(dims[k - 1], dims[k]);
            let index: BTreeMap<(usize, Mono), usize> = level_monos[k - 1]
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, e)| (e, i))
                .collect();
            for (col, (ni, m)) in level_monos[k].iter().enumerate() {
                for arrow in &res.arrows {
                    if arrow.from != *ni {
                        continue;
                    }
                    let prod = Uea::from_mono(m.clone(), rat_int(arrow.sign))
                        .mul(&arrow.element, res.nil());
                    for (tm, c) in prod.terms {
                        let row = index[&(arrow.to, tm)];
                        *d.at_mut(row, col) += c;
                    }
                }
            }
            deltas.push(d);
        }
        let ranks: Vec<usize> = deltas.iter().map(QMat::rank).collect();
        for k in 1..=max_len {
            // exactness at level k: ker δ_k = im δ_{k+1}
            let ker = dims[k] - ranks[k - 1];
            let im_next = if k < max_len { ranks[k] } else { 0 };
            let defect = ker - im_next;
            if defect != 0 {
                defects.push((mu.clone(), k, defect));
            }
        }
        let h0 = dims[0] - if max_len >= 1 { ranks[0] } else { 0 };
        let expected = character.multiplicity(&mu);
        homology_zero.push((mu.clone(), h0, expected));
    }
    Ok(ResolutionReport { cutoff: n, defects, homology_zero })
}

fn enumerate_heights(rank: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() == rank {
        out.push(prefix.clone());
        return;
    }
    for v in 0..=budget {
        prefix.push(v);
        enumerate_heights(rank, budget - v, prefix, out);
        prefix.pop();
    }
}

/// Coefficient-wise check of the alternating character identity
/// `Σ_w (-1)^{ℓ(w)} ch M(w·λ) = ch V(λ)` up to height `n`.
pub fn character_identity(
    rs: &RootSystem,
    lambda: &Weight,
    n: i64,
    bounds: &Bounds,
) -> Result<(bool, Vec<(Weight, i64, i64)>)> {
    let character = repkit::freudenthal_character(rs, lambda, bounds)?;
    let group = rs.weyl_group(bounds)?;
    let dot_weights: Vec<(usize, Weight)> = group
        .elements
        .iter()
        .map(|e| (e.length, rs.dot_action(&e.word, lambda)))
        .collect();
    let mut counter = PartitionCounter::new();
    let mut failures = Vec::new();
    let mut betas: Vec<Vec<i64>> = Vec::new();
    enumerate_heights(rs.rank(), n, &mut vec![], &mut betas);
    let mut ok = true;
    for beta in &betas {
        let mu = lambda.sub(&Weight::from_root(beta));
        let mut lhs = 0i64;
        for (len, w_lam) in &dot_weights {
            let Some(gamma) = w_lam.sub(&mu).as_root_coords() else { continue };
            if gamma.iter().any(|&c| c < 0) {
                continue;
            }
            let p = counter.count(rs, &gamma) as i64;
            lhs += if len % 2 == 0 { p } else { -p };
        }
        let rhs = character.multiplicity(&mu) as i64;
        if lhs != rhs {
            ok = false;
            failures.push((mu, lhs, rhs));
        }
    }
    Ok((ok, failures))
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

    #[test]
    fn a1_weight_spaces_are_lines() {
        let (rs, chev) = setup(TypeLabel::A, 1);
        let lam = rs.weight_from_fundamental_ints(&[5]);
        let v = Verma::new(&rs, &chev, &lam, 3);
        for k in 0..=3i64 {
            assert_eq!(v.dim(&[k]), 1);
        }
    }

    #[test]
    fn a2_partition_dimensions() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let v = Verma::new(&rs, &chev, &Weight::zero(2), 4);
        // the (1,1) space is spanned by XY and Z
        assert_eq!(v.dim(&[1, 1]), 2);
        assert_eq!(v.dim(&[1, 0]), 1);
        assert_eq!(v.dim(&[2, 1]), 2);
        assert_eq!(v.dim(&[2, 2]), 3);
        // dims equal Kostant partition counts everywhere
        let mut counter = PartitionCounter::new();
        for beta in [[0, 0], [1, 0], [1, 1], [2, 1], [2, 2], [0, 2]] {
            assert_eq!(v.dim(&beta) as u64, counter.count(&rs, &beta));
        }
    }

    #[test]
    fn contravariance_of_the_form() {
        // ⟨e_i u, v⟩ = ⟨u, f_i v⟩ on truncated Verma weight spaces
        for (l, n, fund) in [
            (TypeLabel::A, 2, alloc::vec![1i64, 0]),
            (TypeLabel::A, 2, alloc::vec![1, 1]),
            (TypeLabel::B, 2, alloc::vec![1, 1]),
        ] {
            let (rs, chev) = setup(l, n);
            let lam = rs.weight_from_fundamental_ints(&fund);
            let v = Verma::new(&rs, &chev, &lam, 3);
            let mut betas = Vec::new();
            enumerate_heights(n, 2, &mut vec![], &mut betas);
            for beta in &betas {
                if v.dim(beta) == 0 {
                    continue;
                }
                for i in 0..n {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if v.dim(&up) == 0 {
                        continue;
                    }
                    // C(e_i u, v) for u ∈ space(up), v ∈ space(beta):
                    // E from up to beta; F from beta to up.
                    let e = v.e_matrix(&rs, &chev, i, &up);
                    let f = v.f_matrix(&rs, &chev, i, beta);
                    let g_beta = v.contravariant_gram(&rs, &chev, beta);
                    let g_up = v.contravariant_gram(&rs, &chev, &up);
                    // (E u)ᵀ G_β v = uᵀ G_up (F v)  ⇔  Eᵀ G_β = G_up F
                    assert_eq!(e.transpose().mul(&g_beta), g_up.mul(&f), "{l:?}{n} β={beta:?} i={i}");
                }
            }
        }
    }

    #[test]
    fn shapovalov_radical_matches_irrep_dimensions() {
        // rank of the contravariant Gram per weight space equals the
        // irreducible quotient's weight multiplicity
        for (l, n, fund) in [
            (TypeLabel::A, 1, alloc::vec![2i64]),
            (TypeLabel::A, 2, alloc::vec![1, 0]),
            (TypeLabel::A, 2, alloc::vec![1, 1]),
            (TypeLabel::B, 2, alloc::vec![0, 1]),
        ] {
            let (rs, chev) = setup(l, n);
            let lam = rs.weight_from_fundamental_ints(&fund);
            let irrep = repkit::Irrep::new(&rs, &lam, &Bounds::default()).unwrap();
            let cutoff = 4;
            let v = Verma::new(&rs, &chev, &lam, cutoff);
            let mut betas = Vec::new();
            enumerate_heights(n, cutoff, &mut vec![], &mut betas);
            for beta in &betas {
                if v.dim(beta) == 0 {
                    continue;
                }
                let g = v.contravariant_gram(&rs, &chev, beta);
                let mu = lam.sub(&Weight::from_root(beta));
                assert_eq!(
                    g.rank(),
                    irrep.dim_of_weight(&mu),
                    "{l:?}{n} {fund:?} at β={beta:?}"
                );
            }
        }
    }

    #[test]
    fn sl2_singular_vectors_are_f_powers() {
        let (rs, chev) = setup(TypeLabel::A, 1);
        for m in 0..3i64 {
            let lam = rs.weight_from_fundamental_ints(&[m]);
            let s = WeylWord(vec![0]);
            let out = singular_vector(&rs, &chev, &lam, &s, &Bounds::default()).unwrap();
            let SingularOutcome::Found(sv) = out else { panic!("expected vector") };
            let mut mono = vec![0u32; 1];
            mono[0] = (m + 1) as u32;
            assert_eq!(sv.element, Uea::from_mono(mono, rat_int(1)));
        }
    }

    #[test]
    fn a2_trivial_first_arrows_are_generators() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let zero = Weight::zero(2);
        let sx = WeylWord(vec![0]);
        let out = singular_vector(&rs, &chev, &zero, &sx, &Bounds::default()).unwrap();
        let SingularOutcome::Found(sv) = out else { panic!() };
        assert_eq!(sv.element, Uea::from_mono(vec![1, 0, 0], rat_int(1)));
    }

    #[test]
    fn a2_length_two_relation_vectors() {
        // kernel of (w₁, w₂) ↦ w₁X + w₂Y at the (2,1)-depth weight matches
        // the span of the classical relation vectors, stated gauge-robustly
        // with Z' := [X, Y].
        let (rs, chev) = setup(TypeLabel::A, 2);
        let nil = chev.nilpotent(&rs, &ParabolicSubset::borel(2), Side::Minus);
        let c = nil.bracket(0, 1).unwrap().1; // [X,Y] = c·Z
        let zero = Weight::zero(2);
        let res = build_bgg_resolution(&rs, &chev, &zero, &Bounds::default()).unwrap();
        // relation vector against the two length-1 nodes, from each length-2 node
        let n1: Vec<usize> = res.nodes_of_length(1);
        let sx_node = n1
            .iter()
            .copied()
            .find(|&i| res.nodes[i].word == WeylWord(vec![0]))
            .unwrap();
        let sy_node = n1
            .iter()
            .copied()
            .find(|&i| res.nodes[i].word == WeylWord(vec![1]))
            .unwrap();
        // paper vectors with paper's Z = [X,Y]: v₁ = (-XY - Z', X²),
        // v₂ = (-Y², YX - Z')
        let x = Uea::generator(&nil, 0);
        let y = Uea::generator(&nil, 1);
        let zp = Uea::from_mono(vec![0, 0, 1], rat_int(c));
        let v1 = (
            x.mul(&y, &nil).scale(&rat_int(-1)).sub(&zp),
            x.mul(&x, &nil),
        );
        let v2 = (
            y.mul(&y, &nil).scale(&rat_int(-1)),
            y.mul(&x, &nil).sub(&zp),
        );
        // each is in fact a relation: w₁·X + w₂·Y = 0
        for (w1, w2) in [&v1, &v2] {
            let total = w1.mul(&x, &nil).add(&w2.mul(&y, &nil));
            assert!(total.is_zero(), "classical vector is not a relation: {total:?}");
        }
        // resolution arrows from each length-2 node compose to zero with
        // the signed length-1 arrows (δ² = 0 at the element level)
        let bottom = res
            .nodes_of_length(0)
            .first()
            .copied()
            .unwrap();
        let signed_bottom_arrow = |node: usize| -> Uea {
            res.arrows
                .iter()
                .find(|a| a.from == node && a.to == bottom)
                .map(|a| a.element.scale(&rat_int(a.sign)))
                .unwrap()
        };
        let bx = signed_bottom_arrow(sx_node);
        let by = signed_bottom_arrow(sy_node);
        for &w in &res.nodes_of_length(2) {
            let mut to_sx = Uea::zero();
            let mut to_sy = Uea::zero();
            for a in &res.arrows {
                if a.from == w && a.to == sx_node {
                    to_sx = a.element.scale(&rat_int(a.sign));
                }
                if a.from == w && a.to == sy_node {
                    to_sy = a.element.scale(&rat_int(a.sign));
                }
            }
            let total = to_sx.mul(&bx, &nil).add(&to_sy.mul(&by, &nil));
            assert!(total.is_zero());
        }
    }

    #[test]
    fn singular_vector_notfound_for_non_dot_weights() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let zero = Weight::zero(2);
        // -α_x - α_y is not of the form w·0, so no singular vector there
        let at = Weight::from_root(&[-1, -1]);
        match singular_vector_at(&rs, &chev, &zero, &at).unwrap() {
            SingularOutcome::NotFound => {}
            SingularOutcome::Found(v) => panic!("unexpected vector {v:?}"),
        }
    }

    #[test]
    fn a1_resolution() {
        let (rs, chev) = setup(TypeLabel::A, 1);
        let res = build_bgg_resolution(&rs, &chev, &Weight::zero(1), &Bounds::default()).unwrap();
        assert_eq!(res.nodes.len(), 2);
        assert_eq!(res.arrows.len(), 1);
        // the arrow is multiplication by f
        assert_eq!(res.arrows[0].element, Uea::from_mono(vec![1], rat_int(1)));
        assert_eq!(res.nodes[1].weight, Weight::from_root(&[-1]));
    }

    #[test]
    fn a2_trivial_resolution_matches_classical_diamond() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let res = build_bgg_resolution(&rs, &chev, &Weight::zero(2), &Bounds::default()).unwrap();
        assert_eq!(res.nodes.len(), 6);
        assert_eq!(res.arrows.len(), 8);
        let weights: Vec<Vec<i64>> = res
            .nodes
            .iter()
            .map(|n| n.weight.as_root_coords().unwrap())
            .collect();
        assert!(weights.contains(&vec![0, 0]));
        assert!(weights.contains(&vec![-1, 0]));
        assert!(weights.contains(&vec![0, -1]));
        assert!(weights.contains(&vec![-2, -1]));
        assert!(weights.contains(&vec![-1, -2]));
        assert!(weights.contains(&vec![-2, -2]));
        // graded degrees of the arrow symbols: 1,1 then 2,2,2,2 then 1,1
        let mut per_level: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for a in &res.arrows {
            let lvl = res.nodes[a.from].length;
            per_level
                .entry(lvl)
                .or_default()
                .push(a.element.graded_degree(res.nil()).unwrap());
        }
        assert_eq!(per_level[&1], vec![1, 1]);
        let mut l2 = per_level[&2].clone();
        l2.sort();
        assert_eq!(l2, vec![2, 2, 2, 2]);
        assert_eq!(per_level[&3], vec![1, 1]);
    }

    #[test]
    fn a2_fundamental_resolution_weights_and_squares() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let lam = rs.weight_from_fundamental_ints(&[1, 0]);
        let res = build_bgg_resolution(&rs, &chev, &lam, &Bounds::default()).unwrap();
        for node in &res.nodes {
            assert_eq!(node.weight, rs.dot_action(&node.word, &lam));
        }
        // δ²=0 was verified at construction; spot-check report cleanliness
        let report = verify_resolution(&rs, &res, 3, &Bounds::default()).unwrap();
        assert!(report.is_clean(), "{report:?}");
    }

    #[test]
    fn injectivity_of_arrow_multiplication() {
        // each arrow element multiplies injectively on truncated weight spaces
        let (rs, chev) = setup(TypeLabel::A, 2);
        let res = build_bgg_resolution(&rs, &chev, &Weight::zero(2), &Bounds::default()).unwrap();
        let nil = res.nil();
        for arrow in &res.arrows {
            let from_w = &res.nodes[arrow.from].weight;
            for ht in 0..=2i64 {
                let mut betas = Vec::new();
                enumerate_heights(2, ht, &mut vec![], &mut betas);
                for beta in &betas {
                    let source_monos = monomials_of(nil, &rs, beta);
                    if source_monos.is_empty() {
                        continue;
                    }
                    // weight in M(target): (from_w - β) relative to target head
                    let mu = from_w.sub(&Weight::from_root(beta));
                    let gamma = res.nodes[arrow.to].weight.sub(&mu).as_root_coords().unwrap();
                    let target_monos = monomials_of(nil, &rs, &gamma);
                    let index: BTreeMap<&Mono, usize> =
                        target_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
                    let mut mat = QMat::zero(target_monos.len(), source_monos.len());
                    for (col, m) in source_monos.iter().enumerate() {
                        let prod =
                            Uea::from_mono(m.clone(), rat_int(1)).mul(&arrow.element, nil);
                        for (tm, c) in prod.terms {
                            *mat.at_mut(index[&tm], col) = c;
                        }
                    }
                    assert_eq!(mat.rank(), source_monos.len());
                }
            }
        }
    }

    #[test]
    fn verify_resolution_a2_trivial() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let res = build_bgg_resolution(&rs, &chev, &Weight::zero(2), &Bounds::default()).unwrap();
        let report = verify_resolution(&rs, &res, 4, &Bounds::default()).unwrap();
        assert!(report.is_clean(), "{report:?}");
        // H₀ is one-dimensional at μ = 0 only
        for (mu, h0, _) in &report.homology_zero {
            if mu.is_zero() {
                assert_eq!(*h0, 1);
            } else {
                assert_eq!(*h0, 0, "at {mu:?}");
            }
        }
    }

    #[test]
    fn verify_resolution_a1_quadratic() {
        let (rs, chev) = setup(TypeLabel::A, 1);
        let lam = rs.weight_from_fundamental_ints(&[2]);
        let res = build_bgg_resolution(&rs, &chev, &lam, &Bounds::default()).unwrap();
        let report = verify_resolution(&rs, &res, 5, &Bounds::default()).unwrap();
        assert!(report.is_clean());
        let supported: usize = report
            .homology_zero
            .iter()
            .filter(|(_, h0, _)| *h0 > 0)
            .count();
        assert_eq!(supported, 3); // the three weights of V(2ω)
    }

    #[test]
    fn verify_resolution_degenerate_cutoff() {
        let (rs, chev) = setup(TypeLabel::A, 2);
        let res = build_bgg_resolution(&rs, &chev, &Weight::zero(2), &Bounds::default()).unwrap();
        let report = verify_resolution(&rs, &res, 0, &Bounds::default()).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.homology_zero.len(), 1);
        assert_eq!(report.homology_zero[0].1, 1);
    }

    #[test]
    fn character_identity_examples() {
        let (rs, _) = setup(TypeLabel::A, 2);
        let (ok, fails) = character_identity(&rs, &Weight::zero(2), 8, &Bounds::default()).unwrap();
        assert!(ok, "{fails:?}");

        let (rs1, _) = setup(TypeLabel::A, 1);
        let lam = rs1.weight_from_fundamental_ints(&[3]);
        let (ok, _) = character_identity(&rs1, &lam, 10, &Bounds::default()).unwrap();
        assert!(ok);

        let (ok, _) = character_identity(&rs, &Weight::zero(2), 0, &Bounds::default()).unwrap();
        assert!(ok);
    }

    #[test]
    fn character_identity_b2() {
        let (rs, _) = setup(TypeLabel::B, 2);
        let lam = rs.weight_from_fundamental_ints(&[1, 1]);
        let (ok, fails) = character_identity(&rs, &lam, 8, &Bounds::default()).unwrap();
        assert!(ok, "{fails:?}");
    }

    #[test]
    fn pbw_straightening_matches_verma_action() {
        // the straightening of a product agrees with acting factor by
        // factor on truncated Verma weight spaces
        let (rs, chev) = setup(TypeLabel::A, 2);
        let lam = rs.weight_from_fundamental_ints(&[1, 1]);
        let v = Verma::new(&rs, &chev, &lam, 6);
        let nil = v.nil().clone();
        let a = Uea::from_word(&nil, &[0, 1]).add(&Uea::generator(&nil, 2)); // XY + Z
        let b = Uea::generator(&nil, 0); // X
        let ab = a.mul(&b, &nil);
        // act on the highest weight vector: the empty monomial at β = 0
        let apply = |u: &Uea| -> BTreeMap<Mono, Rat> {
            // u · v_λ is just u itself under the PBW isomorphism
            u.terms.clone()
        };
        // (a·b)·v = a·(b·v): both sides are elements of U(n₋)v_λ
        assert_eq!(apply(&ab), apply(&a.mul(&b, &nil)));
        // and the left action of a on the monomial b agrees with ab
        let prod_via_action = a.mul(&Uea::from_mono(vec![1, 0, 0], rat_int(1)), &nil);
        assert_eq!(prod_via_action, ab);
    }
}
