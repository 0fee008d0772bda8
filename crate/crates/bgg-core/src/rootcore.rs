//! Root systems, Weyl group combinatorics, parabolic subsets and gradings.
//!
//! Weights live in simple-root coordinates over exact rationals; all root
//! data (Cartan matrices, positive roots, pairings) is integral. Positive
//! roots are generated from the simple roots by closing under root strings,
//! not read from per-type tables, so the standard counts act as an
//! independent check in the tests.
//!
//! Weyl group elements are plain words in the simple reflections. Length,
//! canonical form and the Bruhat order are computed from the action on
//! `2ρ`, which determines the element; full enumeration (needed for Hasse
//! diagrams and resolutions) is bounded by [`Bounds::weyl_max`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::linalg::QMat;
use crate::{rat_int, Bounds, Error, Rat, Result};

/// Simple Lie type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub fn from_char(c: char) -> Option<TypeLabel> {
        match c.to_ascii_uppercase() {
            'A' => Some(TypeLabel::A),
            'B' => Some(TypeLabel::B),
            'C' => Some(TypeLabel::C),
            'D' => Some(TypeLabel::D),
            'E' => Some(TypeLabel::E),
            'F' => Some(TypeLabel::F),
            'G' => Some(TypeLabel::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        }
    }
}

/// A weight in simple-root coordinates (exact rationals).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight { coords: vec![Rat::zero(); rank] }
    }

    pub fn from_root(coords: &[i64]) -> Weight {
        Weight { coords: coords.iter().map(|&c| rat_int(c)).collect() }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|a| -a.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// Integer simple-root coordinates, if the weight has them.
    pub fn as_root_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

/// A word in the simple reflections (indices `0..rank`). Not assumed reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> WeylWord {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Crossed simple roots `Π \ Π'`; the complement is the Levi part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSubset {
    rank: usize,
    crossed: BTreeSet<usize>,
}

impl ParabolicSubset {
    /// All simple roots crossed: the Borel subalgebra.
    pub fn borel(rank: usize) -> ParabolicSubset {
        ParabolicSubset { rank, crossed: (0..rank).collect() }
    }

    pub fn from_crossed(rank: usize, crossed: impl IntoIterator<Item = usize>) -> Result<ParabolicSubset> {
        let crossed: BTreeSet<usize> = crossed.into_iter().collect();
        if let Some(&bad) = crossed.iter().find(|&&i| i >= rank) {
            return Err(Error::InvalidInput(format!(
                "crossed root index {bad} out of range for rank {rank}"
            )));
        }
        Ok(ParabolicSubset { rank, crossed })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn crossed(&self) -> impl Iterator<Item = usize> + '_ {
        self.crossed.iter().copied()
    }

    pub fn is_crossed(&self, i: usize) -> bool {
        self.crossed.contains(&i)
    }

    pub fn num_crossed(&self) -> usize {
        self.crossed.len()
    }

    /// Simple roots of the Levi part `Π'`.
    pub fn levi(&self) -> Vec<usize> {
        (0..self.rank).filter(|i| !self.crossed.contains(i)).collect()
    }

    pub fn is_borel(&self) -> bool {
        self.crossed.len() == self.rank
    }
}

/// The `|k|`-grading induced by a parabolic subset via the height function.
#[derive(Debug, Clone)]
pub struct Grading {
    /// `ht_P` of each positive root, indexed like `RootSystem::positive_roots`.
    pub heights: Vec<i64>,
    /// Largest height value on the roots.
    pub depth: i64,
    /// Number of crossed simple roots.
    pub rank_ap: usize,
    /// Positive-root indices per positive degree.
    pub plus_components: BTreeMap<i64, Vec<usize>>,
    /// Positive-root indices of height zero (Levi roots; negatives mirror).
    pub levi_roots: Vec<usize>,
}

impl Grading {
    /// Dimension of the graded piece `g_j`, Cartan included at `j = 0`.
    pub fn dim_g(&self, j: i64, rank: usize) -> usize {
        if j == 0 {
            rank + 2 * self.levi_roots.len()
        } else {
            self.plus_components.get(&j.abs()).map_or(0, Vec::len)
        }
    }
}

/// A simple root system with positive roots, `ρ`, and the invariant form
/// normalized so short roots have squared length 2.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: QMat,
    /// Symmetrizers `d_i = (α_i, α_i)/2`, normalized to minimum 1.
    sym: Vec<i64>,
    /// Positive roots in simple-root coordinates, sorted by (height, then
    /// coordinates in descending lexicographic order).
    positive_roots: Vec<Vec<i64>>,
    heights: Vec<i64>,
    root_index: BTreeMap<Vec<i64>, usize>,
    rho: Weight,
    two_rho: Vec<i64>,
}

impl RootSystem {
    pub fn new(label: TypeLabel, rank: usize) -> Result<RootSystem> {
        let cartan = cartan_matrix(label, rank)?;
        let sym = symmetrizers(&cartan)?;
        let positive_roots = close_positive_roots(&cartan);
        let mut heights: Vec<i64> = positive_roots.iter().map(|r| r.iter().sum()).collect();

        // Sort by (height, coords descending lex) so that e.g. in A2 the
        // root α_1 precedes α_2; this order seeds the PBW basis order.
        let mut order: Vec<usize> = (0..positive_roots.len()).collect();
        order.sort_by(|&a, &b| {
            heights[a]
                .cmp(&heights[b])
                .then_with(|| positive_roots[b].cmp(&positive_roots[a]))
        });
        let positive_roots: Vec<Vec<i64>> = order.iter().map(|&i| positive_roots[i].clone()).collect();
        heights = positive_roots.iter().map(|r| r.iter().sum()).collect();

        let root_index: BTreeMap<Vec<i64>, usize> =
            positive_roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let mut two_rho = vec![0i64; rank];
        for r in &positive_roots {
            for (t, c) in two_rho.iter_mut().zip(r) {
                *t += c;
            }
        }
        let rho = Weight {
            coords: two_rho.iter().map(|&c| rat_int(c) / rat_int(2)).collect(),
        };

        let cmat = QMat::from_fn(rank, rank, |i, j| rat_int(cartan[i][j]));
        let cartan_inv = cmat
            .inverse()
            .ok_or_else(|| Error::Inconsistency("Cartan matrix not invertible".into()))?;

        let rs = RootSystem {
            label,
            rank,
            cartan,
            cartan_inv,
            sym,
            positive_roots,
            heights,
            root_index,
            rho,
            two_rho,
        };
        // ⟨ρ, α_i^∨⟩ = 1 must hold; anything else means the closure above
        // produced garbage.
        for i in 0..rank {
            if rs.pairing(&rs.rho, i) != Rat::one() {
                return Err(Error::Inconsistency(format!(
                    "rho pairing with coroot {i} is not 1"
                )));
            }
        }
        Ok(rs)
    }

    pub fn parse(spec: &str) -> Result<RootSystem> {
        let spec = spec.trim();
        let mut chars = spec.chars();
        let letter = chars
            .next()
            .and_then(TypeLabel::from_char)
            .ok_or_else(|| Error::InvalidInput(format!("cannot parse type label `{spec}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("cannot parse rank in `{spec}`")))?;
        RootSystem::new(letter, rank)
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root_height(&self, idx: usize) -> i64 {
        self.heights[idx]
    }

    pub fn positive_root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Membership test over all of `Δ` (positive and negative).
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.iter().all(|&c| c >= 0) {
            self.root_index.contains_key(coords)
        } else if coords.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = coords.iter().map(|&c| -c).collect();
            self.root_index.contains_key(&neg)
        } else {
            false
        }
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// `(α_i, α_i)/2` symmetrizer.
    pub fn sym(&self, i: usize) -> i64 {
        self.sym[i]
    }

    /// Invariant bilinear form on root coordinates: `(x, y) = xᵀ G y` with
    /// `G_ij = d_i a_ij`.
    pub fn bilinear_int(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += self.sym[i] * self.cartan[i][j] * x[i] * y[j];
            }
        }
        acc
    }

    pub fn bilinear(&self, x: &Weight, y: &Weight) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let g = rat_int(self.sym[i] * self.cartan[i][j]);
                acc += g * &x.coords[i] * &y.coords[j];
            }
        }
        acc
    }

    /// `⟨λ, α_i^∨⟩` for a weight in simple-root coordinates.
    pub fn pairing(&self, w: &Weight, i: usize) -> Rat {
        let mut acc = Rat::zero();
        for j in 0..self.rank {
            acc += rat_int(self.cartan[i][j]) * &w.coords[j];
        }
        acc
    }

    pub fn pairing_int(&self, x: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * x[j]).sum()
    }

    /// `⟨x, α^∨⟩` against the coroot of an arbitrary root `α` (integer output).
    pub fn pairing_coroot_int(&self, x: &[i64], alpha: &[i64]) -> i64 {
        let num = 2 * self.bilinear_int(x, alpha);
        let den = self.bilinear_int(alpha, alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Fundamental-weight coordinates `⟨λ, α_i^∨⟩` of a weight.
    pub fn to_fundamental(&self, w: &Weight) -> Vec<Rat> {
        (0..self.rank).map(|i| self.pairing(w, i)).collect()
    }

    /// Weight with the given fundamental coordinates.
    pub fn weight_from_fundamental(&self, fund: &[Rat]) -> Weight {
        Weight { coords: self.cartan_inv.mul_vec(fund) }
    }

    pub fn weight_from_fundamental_ints(&self, fund: &[i64]) -> Weight {
        let f: Vec<Rat> = fund.iter().map(|&x| rat_int(x)).collect();
        self.weight_from_fundamental(&f)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut f = vec![Rat::zero(); self.rank];
        f[i] = Rat::one();
        self.weight_from_fundamental(&f)
    }

    pub fn is_dominant_integral(&self, w: &Weight) -> bool {
        (0..self.rank).all(|i| {
            let p = self.pairing(w, i);
            p.is_integer() && !p.is_negative()
        })
    }

    // ----- simple reflections and Weyl words -----

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let p = self.pairing(w, i);
        let mut coords = w.coords.clone();
        coords[i] -= p;
        Weight { coords }
    }

    pub fn reflect_int(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let p = self.pairing_int(x, i);
        let mut out = x.to_vec();
        out[i] -= p;
        out
    }

    /// Apply a word (composition: last letter acts first).
    pub fn apply_word(&self, word: &WeylWord, w: &Weight) -> Weight {
        let mut cur = w.clone();
        for &i in word.0.iter().rev() {
            cur = self.reflect(i, &cur);
        }
        cur
    }

    pub fn apply_word_int(&self, word: &WeylWord, x: &[i64]) -> Vec<i64> {
        let mut cur = x.to_vec();
        for &i in word.0.iter().rev() {
            cur = self.reflect_int(i, &cur);
        }
        cur
    }

    /// The dot action `w · λ = w(λ + ρ) − ρ`.
    pub fn dot_action(&self, word: &WeylWord, lambda: &Weight) -> Weight {
        self.apply_word(word, &lambda.add(&self.rho)).sub(&self.rho)
    }

    /// Canonical reduced word: repeatedly strip the least left descent,
    /// read off the element's image of `2ρ`.
    pub fn canonical_word(&self, word: &WeylWord) -> WeylWord {
        self.canonical_from_image(self.apply_word_int(word, &self.two_rho))
    }

    fn canonical_from_image(&self, mut img: Vec<i64>) -> WeylWord {
        let mut letters = Vec::new();
        loop {
            let Some(i) = (0..self.rank).find(|&i| self.pairing_int(&img, i) < 0) else {
                break;
            };
            img = self.reflect_int(i, &img);
            letters.push(i);
        }
        debug_assert_eq!(img, self.two_rho);
        WeylWord(letters)
    }

    /// Coxeter length (length of the canonical reduced word).
    pub fn word_length(&self, word: &WeylWord) -> usize {
        self.canonical_word(word).len()
    }

    /// Number of positive roots sent to negative roots; equals the length.
    pub fn inversion_count(&self, word: &WeylWord) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| self.apply_word_int(word, r).iter().all(|&c| c <= 0))
            .count()
    }

    pub fn words_equal(&self, u: &WeylWord, w: &WeylWord) -> bool {
        self.apply_word_int(u, &self.two_rho) == self.apply_word_int(w, &self.two_rho)
    }

    /// Bruhat order test `u ≤ w` by the subword descent walk along a fixed
    /// reduced word of `w`.
    pub fn bruhat_leq(&self, u: &WeylWord, w: &WeylWord) -> bool {
        let wword = self.canonical_word(w);
        let mut img = self.apply_word_int(u, &self.two_rho);
        let mut len_u = self.canonical_from_image(img.clone()).len();
        for (pos, &s) in wword.0.iter().enumerate() {
            if len_u == 0 {
                return true;
            }
            if len_u > wword.len() - pos {
                return false;
            }
            if self.pairing_int(&img, s) < 0 {
                img = self.reflect_int(s, &img);
                len_u -= 1;
            }
        }
        len_u == 0
    }

    /// `ht_P` of a root-lattice vector: the sum of its crossed coordinates.
    pub fn height_p(&self, p: &ParabolicSubset, x: &[i64]) -> i64 {
        p.crossed().map(|i| x[i]).sum()
    }

    /// The `|k|`-grading induced by a parabolic subset.
    pub fn parabolic_grading(&self, p: &ParabolicSubset) -> Grading {
        let heights: Vec<i64> = self.positive_roots.iter().map(|r| self.height_p(p, r)).collect();
        let depth = heights.iter().copied().max().unwrap_or(0);
        let mut plus_components: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let mut levi_roots = Vec::new();
        for (idx, &h) in heights.iter().enumerate() {
            if h == 0 {
                levi_roots.push(idx);
            } else {
                plus_components.entry(h).or_default().push(idx);
            }
        }
        Grading {
            heights,
            depth,
            rank_ap: p.num_crossed(),
            plus_components,
            levi_roots,
        }
    }

    // ----- full enumeration -----

    /// Enumerate the Weyl group (BFS over right multiplication), failing if
    /// the order exceeds `bounds.weyl_max`.
    pub fn weyl_group(&self, bounds: &Bounds) -> Result<WeylGroup> {
        self.enumerate_group(&(0..self.rank).collect::<Vec<_>>(), bounds)
    }

    /// Enumerate the subgroup generated by the given simple reflections.
    pub fn enumerate_group(&self, generators: &[usize], bounds: &Bounds) -> Result<WeylGroup> {
        let n = self.rank;
        let id = int_identity(n);
        let gens: Vec<Vec<Vec<i64>>> = generators.iter().map(|&i| self.simple_matrix(i)).collect();
        let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut elements: Vec<WeylElement> = Vec::new();
        index.insert(flatten(&id), 0);
        elements.push(WeylElement {
            word: WeylWord::identity(),
            length: 0,
            matrix: id.clone(),
            inverse: id,
        });
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &ei in &frontier {
                let (mat, inv, len) = {
                    let e = &elements[ei];
                    (e.matrix.clone(), e.inverse.clone(), e.length)
                };
                for (gi, g) in gens.iter().enumerate() {
                    let m2 = mat_mul(&mat, g);
                    let key = flatten(&m2);
                    if index.contains_key(&key) {
                        continue;
                    }
                    if elements.len() >= bounds.weyl_max {
                        return Err(Error::ResourceExceeded {
                            what: "Weyl group enumeration",
                            needed: elements.len() + 1,
                            bound: bounds.weyl_max,
                        });
                    }
                    // right multiplication: inverse gets the generator on the left
                    let inv2 = mat_mul(g, &inv);
                    index.insert(key, elements.len());
                    next.push(elements.len());
                    elements.push(WeylElement {
                        word: WeylWord(Vec::new()), // canonicalized below
                        length: len + 1,
                        matrix: m2,
                        inverse: inv2,
                    });
                    let _ = gi;
                }
            }
            frontier = next;
        }
        for e in elements.iter_mut() {
            let img = mat_apply(&e.matrix, &self.two_rho);
            e.word = self.canonical_from_image(img);
            debug_assert_eq!(e.word.len(), e.length);
        }
        // Deterministic order: by (length, canonical word).
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| {
            elements[a]
                .length
                .cmp(&elements[b].length)
                .then_with(|| elements[a].word.cmp(&elements[b].word))
        });
        let elements: Vec<WeylElement> = order.into_iter().map(|i| elements[i].clone()).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (flatten(&e.matrix), i))
            .collect();
        Ok(WeylGroup { elements, index })
    }

    /// Matrix of the simple reflection `s_i` on root coordinates
    /// (column `j` holds the coordinates of `s_i(α_j)`).
    pub fn simple_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = int_identity(n);
        for j in 0..n {
            m[i][j] -= self.cartan[i][j];
        }
        m
    }

    /// Matrix of the reflection in an arbitrary root.
    pub fn reflection_matrix(&self, alpha: &[i64]) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = int_identity(n);
        for j in 0..n {
            let mut e = vec![0i64; n];
            e[j] = 1;
            let p = self.pairing_coroot_int(&e, alpha);
            for r in 0..n {
                m[r][j] -= p * alpha[r];
            }
        }
        m
    }

    /// Minimal-length coset representatives of `W / W_{Π'}` with lengths and
    /// the covering edges of the induced Bruhat order.
    pub fn hasse_diagram(&self, p: &ParabolicSubset, bounds: &Bounds) -> Result<HasseDiagram> {
        let w = self.weyl_group(bounds)?;
        let levi = p.levi();
        let mut nodes = Vec::new();
        let mut node_of_element: BTreeMap<usize, usize> = BTreeMap::new();
        for (ei, e) in w.elements.iter().enumerate() {
            // w ∈ W^p iff w^{-1}(α_j) > 0 for every Levi simple root α_j,
            // i.e. every Levi column of the inverse matrix is nonnegative.
            let minimal = levi
                .iter()
                .all(|&j| (0..self.rank).all(|r| e.inverse[r][j] >= 0));
            if minimal {
                node_of_element.insert(ei, nodes.len());
                nodes.push(HasseNode { word: e.word.clone(), length: e.length });
            }
        }
        let mut edges = BTreeSet::new();
        for (ei, e) in w.elements.iter().enumerate() {
            let Some(&upper) = node_of_element.get(&ei) else { continue };
            if e.length == 0 {
                continue;
            }
            for alpha in &self.positive_roots {
                let refl = self.reflection_matrix(alpha);
                let lower_mat = mat_mul(&refl, &e.matrix);
                let Some(&li) = w.index.get(&flatten(&lower_mat)) else {
                    continue;
                };
                if w.elements[li].length + 1 != e.length {
                    continue;
                }
                if let Some(&lower) = node_of_element.get(&li) {
                    edges.insert((lower, upper));
                }
            }
        }
        Ok(HasseDiagram { nodes, edges: edges.into_iter().collect() })
    }
}

/// One enumerated Weyl group element.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub word: WeylWord,
    pub length: usize,
    /// Action on simple-root coordinates; column `j` is the image of `α_j`.
    pub matrix: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn find_matrix(&self, matrix: &[Vec<i64>]) -> Option<usize> {
        self.index.get(&flatten(matrix)).copied()
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.iter().max_by_key(|e| e.length).expect("nonempty group")
    }
}

#[derive(Debug, Clone)]
pub struct HasseNode {
    pub word: WeylWord,
    pub length: usize,
}

#[derive(Debug, Clone)]
pub struct HasseDiagram {
    /// Sorted by (length, canonical word).
    pub nodes: Vec<HasseNode>,
    /// Covering pairs `(lower, upper)` as indices into `nodes`.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Node counts per length, from 0 to the maximal length.
    pub fn length_profile(&self) -> Vec<usize> {
        let max = self.nodes.iter().map(|n| n.length).max().unwrap_or(0);
        let mut profile = vec![0usize; max + 1];
        for n in &self.nodes {
            profile[n.length] += 1;
        }
        profile
    }
}

// ----- integer matrix helpers -----

fn int_identity(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

fn mat_apply(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    (0..a.len()).map(|i| (0..x.len()).map(|j| a[i][j] * x[j]).sum()).collect()
}

fn flatten(m: &[Vec<i64>]) -> Vec<i64> {
    m.iter().flatten().copied().collect()
}

// ----- Cartan data tables -----

fn cartan_matrix(label: TypeLabel, rank: usize) -> Result<Vec<Vec<i64>>> {
    let bad = |msg: String| Err(Error::InvalidInput(msg));
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    match label {
        TypeLabel::A => {
            if rank < 1 {
                return bad(format!("type A requires rank >= 1, got {rank}"));
            }
            Ok(chain(rank))
        }
        TypeLabel::B => {
            if rank < 2 {
                return bad(format!("type B requires rank >= 2, got {rank}"));
            }
            let mut m = chain(rank);
            // last simple root short: ⟨α_{n-2}, α_{n-1}^∨⟩ = -2
            m[rank - 1][rank - 2] = -2;
            Ok(m)
        }
        TypeLabel::C => {
            if rank < 2 {
                return bad(format!("type C requires rank >= 2, got {rank}"));
            }
            let mut m = chain(rank);
            // last simple root long
            m[rank - 2][rank - 1] = -2;
            Ok(m)
        }
        TypeLabel::D => {
            if rank < 4 {
                return bad(format!("type D requires rank >= 4, got {rank}"));
            }
            let mut m = chain(rank - 1);
            for row in m.iter_mut() {
                row.push(0);
            }
            m.push(vec![0i64; rank]);
            m[rank - 1][rank - 1] = 2;
            // fork: the extra node attaches to node rank-3
            m[rank - 1][rank - 3] = -1;
            m[rank - 3][rank - 1] = -1;
            Ok(m)
        }
        TypeLabel::E => {
            if !(6..=8).contains(&rank) {
                return bad(format!("type E requires rank in 6..=8, got {rank}"));
            }
            // Bourbaki numbering: chain 1-3-4-5-6[-7[-8]] with 2 attached to 4.
            let mut m = vec![vec![0i64; rank]; rank];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            let link = |a: usize, b: usize, m: &mut Vec<Vec<i64>>| {
                m[a][b] = -1;
                m[b][a] = -1;
            };
            link(0, 2, &mut m);
            link(2, 3, &mut m);
            link(1, 3, &mut m);
            link(3, 4, &mut m);
            link(4, 5, &mut m);
            if rank >= 7 {
                link(5, 6, &mut m);
            }
            if rank == 8 {
                link(6, 7, &mut m);
            }
            Ok(m)
        }
        TypeLabel::F => {
            if rank != 4 {
                return bad(format!("type F requires rank 4, got {rank}"));
            }
            let mut m = chain(4);
            // α_1, α_2 long; α_3, α_4 short
            m[2][1] = -2;
            Ok(m)
        }
        TypeLabel::G => {
            if rank != 2 {
                return bad(format!("type G requires rank 2, got {rank}"));
            }
            // α_1 short, α_2 long (highest root 3α_1 + 2α_2)
            Ok(vec![vec![2, -3], vec![-1, 2]])
        }
    }
}

/// Solve `d_i a_ij = d_j a_ji` over the Dynkin graph, normalized to min 1.
fn symmetrizers(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rat::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let dj = d[i].clone().unwrap() * rat_int(cartan[i][j]) / rat_int(cartan[j][i]);
                    d[j] = Some(dj);
                    stack.push(j);
                }
            }
        }
    }
    let vals: Vec<Rat> = d.into_iter().map(Option::unwrap).collect();
    let min = vals.iter().min().cloned().unwrap_or_else(Rat::one);
    let scaled: Vec<Rat> = vals.into_iter().map(|v| v / min.clone()).collect();
    scaled
        .into_iter()
        .map(|v| {
            if v.is_integer() {
                i64::try_from(v.to_integer())
                    .map_err(|_| Error::Inconsistency("symmetrizer overflow".into()))
            } else {
                Err(Error::Inconsistency(String::from("non-integral symmetrizer")))
            }
        })
        .collect()
}

/// Generate all positive roots from the simple ones by root strings.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        roots.insert(e);
    }
    let is_root = |set: &BTreeSet<Vec<i64>>, v: &[i64]| -> bool {
        if v.iter().all(|&c| c == 0) {
            return false;
        }
        if v.iter().all(|&c| c >= 0) {
            set.contains(v)
        } else if v.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = v.iter().map(|&c| -c).collect();
            set.contains(&neg)
        } else {
            false
        }
    };
    let mut height = 1i64;
    loop {
        let layer: Vec<Vec<i64>> = roots
            .iter()
            .filter(|r| r.iter().sum::<i64>() == height)
            .cloned()
            .collect();
        if layer.is_empty() {
            break;
        }
        let mut added = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // string: β - pα_i .. β + qα_i with p - q = ⟨β, α_i^∨⟩
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0i64;
                loop {
                    let mut v = beta.clone();
                    v[i] -= p + 1;
                    if is_root(&roots, &v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing >= 1 {
                    let mut v = beta.clone();
                    v[i] += 1;
                    added.push(v);
                }
            }
        }
        for v in added {
            roots.insert(v);
        }
        height += 1;
    }
    roots.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: TypeLabel, rank: usize) -> RootSystem {
        RootSystem::new(label, rank).unwrap()
    }

    #[test]
    fn a1_roots_and_rho() {
        let r = rs(TypeLabel::A, 1);
        assert_eq!(r.positive_roots(), &[vec![1]]);
        assert_eq!(r.rho().coords, vec![rat_int(1) / rat_int(2)]);
    }

    #[test]
    fn a2_roots_and_rho() {
        let r = rs(TypeLabel::A, 2);
        assert_eq!(
            r.positive_roots(),
            &[vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        // half-sum of the three positive roots
        assert_eq!(r.rho().coords, vec![Rat::one(), Rat::one()]);
    }

    #[test]
    fn positive_root_counts() {
        let expect = [
            (TypeLabel::A, 3, 6),
            (TypeLabel::B, 2, 4),
            (TypeLabel::B, 3, 9),
            (TypeLabel::C, 3, 9),
            (TypeLabel::D, 4, 12),
            (TypeLabel::G, 2, 6),
            (TypeLabel::F, 4, 24),
            (TypeLabel::E, 6, 36),
        ];
        for (l, n, count) in expect {
            assert_eq!(rs(l, n).num_positive_roots(), count, "{l:?}{n}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::new(TypeLabel::A, 0).is_err());
        assert!(RootSystem::new(TypeLabel::D, 3).is_err());
        assert!(RootSystem::new(TypeLabel::F, 5).is_err());
        assert!(RootSystem::new(TypeLabel::G, 3).is_err());
        assert!(RootSystem::parse("H4").is_err());
        assert!(RootSystem::parse("A2").is_ok());
    }

    #[test]
    fn bilinear_form_reflection_invariant() {
        for (l, n) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2), (TypeLabel::C, 3)] {
            let r = rs(l, n);
            for i in 0..n {
                for x in r.positive_roots() {
                    for y in r.positive_roots() {
                        let sx = r.reflect_int(i, x);
                        let sy = r.reflect_int(i, y);
                        assert_eq!(r.bilinear_int(x, y), r.bilinear_int(&sx, &sy));
                    }
                }
            }
        }
    }

    #[test]
    fn short_roots_have_squared_length_two() {
        for (l, n) in [(TypeLabel::A, 2), (TypeLabel::B, 3), (TypeLabel::C, 3), (TypeLabel::G, 2), (TypeLabel::F, 4)] {
            let r = rs(l, n);
            let min = r
                .positive_roots()
                .iter()
                .map(|x| r.bilinear_int(x, x))
                .min()
                .unwrap();
            assert_eq!(min, 2, "{l:?}{n}");
        }
    }

    #[test]
    fn fundamental_roundtrip() {
        let r = rs(TypeLabel::B, 3);
        let lam = r.weight_from_fundamental_ints(&[2, 0, 1]);
        let back = r.to_fundamental(&lam);
        assert_eq!(back, vec![rat_int(2), rat_int(0), rat_int(1)]);
    }

    #[test]
    fn dot_action_examples() {
        let r = rs(TypeLabel::A, 2);
        let zero = Weight::zero(2);
        assert_eq!(r.dot_action(&WeylWord::identity(), &zero), zero);
        // s_x · 0 = -α_x
        let sx = WeylWord(vec![0]);
        assert_eq!(r.dot_action(&sx, &zero), Weight::from_root(&[-1, 0]));
        // w_0 · 0 = -2α_x - 2α_y
        let w0 = WeylWord(vec![0, 1, 0]);
        assert_eq!(r.dot_action(&w0, &zero), Weight::from_root(&[-2, -2]));
    }

    #[test]
    fn dot_action_is_twisted_action() {
        let r = rs(TypeLabel::B, 2);
        let words = [
            WeylWord(vec![]),
            WeylWord(vec![0]),
            WeylWord(vec![1]),
            WeylWord(vec![0, 1]),
            WeylWord(vec![1, 0, 1]),
            WeylWord(vec![0, 1, 0, 1]),
        ];
        let lam = r.weight_from_fundamental_ints(&[1, 2]);
        for u in &words {
            for v in &words {
                let uv = WeylWord(u.0.iter().chain(&v.0).copied().collect());
                let lhs = r.dot_action(u, &r.dot_action(v, &lam));
                let rhs = r.dot_action(&uv, &lam);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn length_equals_inversions_exhaustive() {
        let bounds = Bounds::default();
        for (l, n) in [
            (TypeLabel::A, 1),
            (TypeLabel::A, 2),
            (TypeLabel::A, 3),
            (TypeLabel::B, 2),
            (TypeLabel::B, 3),
            (TypeLabel::G, 2),
        ] {
            let r = rs(l, n);
            let w = r.weyl_group(&bounds).unwrap();
            for e in &w.elements {
                assert_eq!(e.length, r.inversion_count(&e.word), "{l:?}{n} {:?}", e.word);
                assert_eq!(e.length, r.word_length(&e.word));
            }
        }
    }

    #[test]
    fn canonical_word_independent_of_representative() {
        let r = rs(TypeLabel::A, 2);
        // s_x s_y s_x = s_y s_x s_y (braid relation)
        let a = WeylWord(vec![0, 1, 0]);
        let b = WeylWord(vec![1, 0, 1]);
        assert_eq!(r.canonical_word(&a), r.canonical_word(&b));
        // non-reduced input gets shortened
        let c = WeylWord(vec![0, 1, 1, 0, 0]);
        assert_eq!(r.word_length(&c), 1);
        assert_eq!(r.canonical_word(&c), WeylWord(vec![0]));
    }

    #[test]
    fn weyl_orders() {
        let bounds = Bounds::default();
        assert_eq!(rs(TypeLabel::A, 2).weyl_group(&bounds).unwrap().order(), 6);
        assert_eq!(rs(TypeLabel::B, 2).weyl_group(&bounds).unwrap().order(), 8);
        assert_eq!(rs(TypeLabel::G, 2).weyl_group(&bounds).unwrap().order(), 12);
        assert_eq!(rs(TypeLabel::A, 3).weyl_group(&bounds).unwrap().order(), 24);
        assert_eq!(rs(TypeLabel::F, 4).weyl_group(&bounds).unwrap().order(), 1152);
    }

    #[test]
    fn weyl_enumeration_bound_fails_loudly() {
        let r = rs(TypeLabel::A, 3);
        let bounds = Bounds { weyl_max: 10, ..Bounds::default() };
        match r.weyl_group(&bounds) {
            Err(Error::ResourceExceeded { .. }) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn bruhat_examples() {
        let r = rs(TypeLabel::A, 2);
        let e = WeylWord::identity();
        let sx = WeylWord(vec![0]);
        let sy = WeylWord(vec![1]);
        let sxy = WeylWord(vec![0, 1]);
        let w0 = WeylWord(vec![0, 1, 0]);
        assert!(r.bruhat_leq(&e, &w0));
        assert!(r.bruhat_leq(&e, &sx));
        assert!(r.bruhat_leq(&sx, &sxy));
        assert!(!r.bruhat_leq(&sx, &sy));
        assert!(!r.bruhat_leq(&sxy, &sx));
        assert!(r.bruhat_leq(&sy, &w0));
    }

    /// Brute-force Bruhat order: reachability through length-increasing
    /// reflection multiplications.
    fn bruhat_oracle(r: &RootSystem, w: &WeylGroup) -> Vec<Vec<bool>> {
        let n = w.order();
        let mut leq = vec![vec![false; n]; n];
        for (i, _) in w.elements.iter().enumerate() {
            leq[i][i] = true;
        }
        // edges: u -> t·u when length increases by exactly 1
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (i, e) in w.elements.iter().enumerate() {
            for alpha in r.positive_roots() {
                let refl = r.reflection_matrix(alpha);
                let m2 = super::mat_mul(&refl, &e.matrix);
                if let Some(j) = w.find_matrix(&m2) {
                    if w.elements[j].length == e.length + 1 {
                        edges.push((i, j));
                    }
                }
            }
        }
        // transitive closure by length induction
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| w.elements[i].length);
        for &j in order.iter() {
            for &(a, b) in &edges {
                if b == j {
                    for i in 0..n {
                        if leq[i][a] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        leq
    }

    #[test]
    fn bruhat_matches_reflection_oracle() {
        let bounds = Bounds::default();
        for (l, n) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::A, 3)] {
            let r = rs(l, n);
            let w = r.weyl_group(&bounds).unwrap();
            let oracle = bruhat_oracle(&r, &w);
            for (i, u) in w.elements.iter().enumerate() {
                for (j, v) in w.elements.iter().enumerate() {
                    assert_eq!(
                        r.bruhat_leq(&u.word, &v.word),
                        oracle[i][j],
                        "{l:?}{n}: {:?} vs {:?}",
                        u.word,
                        v.word
                    );
                }
            }
        }
    }

    #[test]
    fn hasse_a2_borel() {
        let r = rs(TypeLabel::A, 2);
        let h = r.hasse_diagram(&ParabolicSubset::borel(2), &Bounds::default()).unwrap();
        assert_eq!(h.nodes.len(), 6);
        assert_eq!(h.length_profile(), vec![1, 2, 2, 1]);
        assert_eq!(h.edges.len(), 8);
    }

    #[test]
    fn hasse_a2_one_crossed() {
        let r = rs(TypeLabel::A, 2);
        let p = ParabolicSubset::from_crossed(2, [0]).unwrap();
        let h = r.hasse_diagram(&p, &Bounds::default()).unwrap();
        assert_eq!(h.nodes.len(), 3);
        assert_eq!(h.length_profile(), vec![1, 1, 1]);
    }

    #[test]
    fn hasse_a1() {
        let r = rs(TypeLabel::A, 1);
        let h = r.hasse_diagram(&ParabolicSubset::borel(1), &Bounds::default()).unwrap();
        assert_eq!(h.nodes.len(), 2);
        assert_eq!(h.length_profile(), vec![1, 1]);
    }

    #[test]
    fn coset_counting() {
        let bounds = Bounds::default();
        for (l, n) in [(TypeLabel::A, 3), (TypeLabel::B, 3), (TypeLabel::G, 2)] {
            let r = rs(l, n);
            let w = r.weyl_group(&bounds).unwrap();
            // all parabolic subsets
            for mask in 0..(1u32 << n) {
                let crossed: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let p = ParabolicSubset::from_crossed(n, crossed).unwrap();
                let h = r.hasse_diagram(&p, &bounds).unwrap();
                let levi_group = r.enumerate_group(&p.levi(), &bounds).unwrap();
                assert_eq!(h.nodes.len() * levi_group.order(), w.order(), "{l:?}{n} mask {mask}");
            }
        }
    }

    #[test]
    fn grading_a2_borel() {
        let r = rs(TypeLabel::A, 2);
        let g = r.parabolic_grading(&ParabolicSubset::borel(2));
        assert_eq!(g.depth, 2);
        assert_eq!(g.rank_ap, 2);
        assert_eq!(g.plus_components[&1].len(), 2);
        assert_eq!(g.plus_components[&2].len(), 1);
        assert!(g.levi_roots.is_empty());
    }

    #[test]
    fn grading_a2_one_crossed_is_abelian_depth_one() {
        let r = rs(TypeLabel::A, 2);
        let p = ParabolicSubset::from_crossed(2, [0]).unwrap();
        let g = r.parabolic_grading(&p);
        assert_eq!(g.depth, 1);
        // ht(α_y) = 0
        let ay = r.positive_root_index(&[0, 1]).unwrap();
        assert_eq!(g.heights[ay], 0);
        assert_eq!(g.plus_components[&1].len(), 2);
    }

    #[test]
    fn grading_degenerate_full_levi() {
        let r = rs(TypeLabel::B, 2);
        let p = ParabolicSubset::from_crossed(2, []).unwrap();
        let g = r.parabolic_grading(&p);
        assert_eq!(g.depth, 0);
        assert_eq!(g.rank_ap, 0);
        assert!(g.plus_components.is_empty());
        assert_eq!(g.levi_roots.len(), 4);
    }

    #[test]
    fn grading_partition_of_roots() {
        for (l, n) in [(TypeLabel::A, 3), (TypeLabel::B, 3), (TypeLabel::G, 2)] {
            let r = rs(l, n);
            for mask in 0..(1u32 << n) {
                let crossed: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let p = ParabolicSubset::from_crossed(n, crossed).unwrap();
                let g = r.parabolic_grading(&p);
                let sum_nonzero: usize = g.plus_components.values().map(Vec::len).sum::<usize>() * 2;
                assert_eq!(
                    sum_nonzero + 2 * g.levi_roots.len(),
                    2 * r.num_positive_roots()
                );
                // bracket additivity of heights where sums are roots
                for (i, a) in r.positive_roots().iter().enumerate() {
                    for (j, b) in r.positive_roots().iter().enumerate() {
                        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if let Some(k) = r.positive_root_index(&s) {
                            assert_eq!(g.heights[i] + g.heights[j], g.heights[k]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn g_j_components_mirror() {
        let r = rs(TypeLabel::G, 2);
        let g = r.parabolic_grading(&ParabolicSubset::borel(2));
        for (&j, comp) in &g.plus_components {
            assert_eq!(g.dim_g(j, 2), comp.len());
            assert_eq!(g.dim_g(-j, 2), comp.len());
        }
    }
}
