//! Weyl group elements as signed permutations of the positive roots.
//!
//! An element stores `w(β)` (as a root code) for every positive root `β`.
//! Its canonical key is the tuple of images of the simple roots, which
//! determines the element. Words are sequences of 1-based simple indices;
//! `[2, 3, 1]` means `s₂s₃s₁`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rootsys::{Root, RootSystem, Weight};

#[derive(Clone)]
pub struct WeylElement {
    rs: Arc<RootSystem>,
    images: Vec<u32>,
    length: usize,
    word: OnceLock<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let images = (0..rs.num_positive() as u32).collect();
        Self::from_images(rs.clone(), images)
    }

    fn from_images(rs: Arc<RootSystem>, images: Vec<u32>) -> Self {
        let length = images.iter().filter(|&&c| rs.is_negative_code(c)).count();
        WeylElement {
            rs,
            images,
            length,
            word: OnceLock::new(),
        }
    }

    /// Product `s_{i₁} ⋯ s_{i_k}`; the word need not be reduced.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        for &i in word {
            rs.check_index(i)?;
        }
        let mut w = Self::identity(rs);
        for &i in word {
            w = w.rmul_simple(i - 1);
        }
        Ok(w)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Signed images of the simple roots.
    pub fn canonical_key(&self) -> Vec<Root> {
        self.key_codes()
            .iter()
            .map(|&c| self.rs.root_of_code(c))
            .collect()
    }

    pub(crate) fn key_codes(&self) -> &[u32] {
        &self.images[..self.rs.rank()]
    }

    pub(crate) fn images(&self) -> &[u32] {
        &self.images
    }

    /// Lexicographically least reduced word (greedy smallest left descent).
    pub fn reduced_word(&self) -> &[usize] {
        self.word.get_or_init(|| {
            let n = self.rs.num_positive() as u32;
            let r = self.rs.rank() as u32;
            let mut word = Vec::with_capacity(self.length);
            let mut cur = self.clone();
            while cur.length > 0 {
                // s_i is a left descent iff −α_i is an image.
                let i = cur
                    .images
                    .iter()
                    .filter(|&&c| c >= n && c < n + r)
                    .map(|&c| c - n)
                    .min()
                    .expect("nonidentity element has a left descent");
                word.push(i as usize + 1);
                cur = cur.lmul_simple(i as usize);
            }
            word
        })
    }

    /// Image of a root code.
    #[inline]
    pub(crate) fn act_code(&self, code: u32) -> u32 {
        let n = self.images.len() as u32;
        if code < n {
            self.images[code as usize]
        } else {
            self.rs.negate_code(self.images[(code - n) as usize])
        }
    }

    pub fn act_on_root(&self, r: &Root) -> Result<Root> {
        let code = self
            .rs
            .code_of(r)
            .ok_or_else(|| Error::NotARoot(r.0.clone()))?;
        Ok(self.rs.root_of_code(self.act_code(code)))
    }

    /// `w(ν)` for an integral weight.
    pub fn act_on_weight(&self, w: &Weight) -> Weight {
        let mut out = w.clone();
        for &i in self.reduced_word().iter().rev() {
            out = self.rs.reflect_weight(i, &out);
        }
        out
    }

    /// Positive roots (by index) sent to negative roots.
    pub fn inversion_set(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &c)| self.rs.is_negative_code(c))
            .map(|(k, _)| k)
            .collect()
    }

    /// `w · s_i`, `i` 0-based.
    pub(crate) fn rmul_simple(&self, i: usize) -> Self {
        let images = (0..self.images.len() as u32)
            .map(|k| self.act_code(self.rs.reflect_code(i, k)))
            .collect();
        let delta_down = self.rs.is_negative_code(self.images[i]);
        WeylElement {
            rs: self.rs.clone(),
            images,
            length: if delta_down {
                self.length - 1
            } else {
                self.length + 1
            },
            word: OnceLock::new(),
        }
    }

    /// `s_i · w`, `i` 0-based.
    pub(crate) fn lmul_simple(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&c| self.rs.reflect_code(i, c))
            .collect();
        Self::from_images(self.rs.clone(), images)
    }

    /// `ℓ(w s_i) < ℓ(w)`, 1-based `i`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.rs.is_negative_code(self.images[i - 1])
    }

    /// `ℓ(s_i w) < ℓ(w)`, 1-based `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let target = self.rs.negate_code(i as u32 - 1);
        self.images.contains(&target)
    }

    pub fn mul_simple_right(&self, i: usize) -> Result<Self> {
        self.rs.check_index(i)?;
        Ok(self.rmul_simple(i - 1))
    }

    pub fn mul_simple_left(&self, i: usize) -> Result<Self> {
        self.rs.check_index(i)?;
        Ok(self.lmul_simple(i - 1))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.rs, &other.rs) || self.rs.datum() == other.rs.datum() {
            Ok(())
        } else {
            Err(Error::MismatchedSystems(self.rs.label(), other.rs.label()))
        }
    }

    /// Group product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let images = other.images.iter().map(|&c| self.act_code(c)).collect();
        Ok(Self::from_images(self.rs.clone(), images))
    }

    pub fn inverse(&self) -> Self {
        let n = self.images.len() as u32;
        let mut images = vec![0u32; n as usize];
        for (k, &c) in self.images.iter().enumerate() {
            let k = k as u32;
            if c < n {
                images[c as usize] = k;
            } else {
                images[(c - n) as usize] = k + n;
            }
        }
        Self::from_images(self.rs.clone(), images)
    }

    /// Bruhat order `self ≤ w`.
    ///
    /// Scans a reduced word of `w` from the right. With `s` the current last
    /// letter (a right descent of the remaining prefix `w'`), `u ≤ w'` reduces
    /// to `us ≤ w's` when `us < u` and to `u ≤ w's` otherwise.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool> {
        self.check_same(w)?;
        if self.length > w.length {
            return Ok(false);
        }
        let mut u = self.clone();
        for &i in w.reduced_word().iter().rev() {
            if u.length == 0 {
                break;
            }
            if u.rs.is_negative_code(u.images[i - 1]) {
                u = u.rmul_simple(i - 1);
            }
        }
        Ok(u.length == 0)
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.key_codes() == other.key_codes()
            && (Arc::ptr_eq(&self.rs, &other.rs) || self.rs.datum() == other.rs.datum())
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key_codes().hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({} {})", self.rs.label(), self)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(self.reduced_word(), self.rs.rank()))
    }
}

/// `[23121]` style; comma separated when indices can exceed 9.
pub fn format_word(word: &[usize], rank: usize) -> String {
    let sep = if rank >= 10 { "," } else { "" };
    let body = word
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(sep);
    format!("[{body}]")
}

/// Parses `"2,3,1"`, `"231"`, or `"[231]"`. The empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if t.is_empty() {
        return Ok(vec![]);
    }
    if t.contains(',') {
        t.split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
            })
            .collect()
    } else {
        t.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad word letter {c:?}")))
            })
            .collect()
    }
}

/// The reflection `s_α` for a positive root `α`.
pub fn reflection(rs: &Arc<RootSystem>, alpha: &Root) -> Result<WeylElement> {
    let k = rs
        .index_of(alpha)
        .ok_or_else(|| Error::NotPositiveRoot(alpha.0.clone()))?;
    Ok(reflection_by_index(rs, k))
}

/// `s_β` for positive root number `k`: walk `β` down to a simple root by
/// height-lowering simple reflections, then conjugate.
pub(crate) fn reflection_by_index(rs: &Arc<RootSystem>, k: usize) -> WeylElement {
    let mut code = k as u32;
    let mut path = Vec::new();
    while code as usize >= rs.rank() {
        let beta = rs.root_of_code(code);
        let i = (0..rs.rank())
            .find(|&i| rs.pairing_positive(&rs.root_to_weight(&beta), i) > 0)
            .expect("non-simple positive root has a positive simple pairing");
        path.push(i + 1);
        code = rs.reflect_code(i, code);
    }
    let mut word = path.clone();
    word.push(code as usize + 1);
    word.extend(path.iter().rev());
    WeylElement::from_word(rs, &word).expect("indices in range")
}

/// The unique element of length `|Φ⁺|`.
pub fn longest_element(rs: &Arc<RootSystem>) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(i) = (0..rs.rank()).find(|&i| !rs.is_negative_code(w.images[i])) {
        w = w.rmul_simple(i);
    }
    w
}

/// All elements of `W`, sorted by length and then by reduced word.
#[derive(Clone)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u32>, usize>,
    /// `offsets[ℓ]..offsets[ℓ+1]` are the elements of length ℓ.
    offsets: Vec<usize>,
}

impl WeylGroup {
    /// Breadth-first closure under right multiplication by simple reflections.
    pub fn new(rs: &Arc<RootSystem>) -> Self {
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        let id = WeylElement::identity(rs);
        seen.insert(id.key_codes().to_vec(), ());
        let mut layer = vec![id];
        let mut all = Vec::new();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..rs.rank() {
                    if !rs.is_negative_code(w.images[i]) {
                        let v = w.rmul_simple(i);
                        if seen.insert(v.key_codes().to_vec(), ()).is_none() {
                            next.push(v);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        Self::from_elements(rs.clone(), all)
    }

    /// Rebuilds from a list of words (used by the disk cache).
    pub fn from_words(rs: &Arc<RootSystem>, words: &[Vec<usize>]) -> Result<Self> {
        let elements = words
            .iter()
            .map(|w| WeylElement::from_word(rs, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_elements(rs.clone(), elements))
    }

    fn from_elements(rs: Arc<RootSystem>, mut elements: Vec<WeylElement>) -> Self {
        elements.sort_by(|a, b| {
            a.length
                .cmp(&b.length)
                .then_with(|| a.reduced_word().cmp(b.reduced_word()))
        });
        elements.dedup();
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.key_codes().to_vec(), k))
            .collect();
        let max_len = elements.last().map_or(0, |w| w.length);
        let mut offsets = vec![0usize; max_len + 2];
        for w in &elements {
            offsets[w.length + 1] += 1;
        }
        for l in 1..offsets.len() {
            offsets[l] += offsets[l - 1];
        }
        WeylGroup {
            rs,
            elements,
            index,
            offsets,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    /// Position in the canonical order.
    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w.key_codes()).copied()
    }

    pub fn by_length(&self, ell: usize) -> &[WeylElement] {
        if ell + 1 >= self.offsets.len() {
            return &[];
        }
        &self.elements[self.offsets[ell]..self.offsets[ell + 1]]
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("nonempty group")
    }

    /// `Σ_{w ∈ W} q^{ℓ(w)}`.
    pub fn length_generating_function(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for w in &self.elements {
            p.add_term(w.length as i64, 1);
        }
        p
    }

    /// Lower Bruhat interval `[e, w]` in canonical order.
    pub fn lower_interval(&self, w: &WeylElement) -> Vec<WeylElement> {
        let mut out = lower_interval(w);
        out.sort_by_key(|v| self.index_of(v));
        out
    }
}

/// Lower Bruhat interval `[e, w]` (unordered), by descending along
/// reflections `u → u·t` with `ℓ(ut) < ℓ(u)`.
pub fn lower_interval(w: &WeylElement) -> Vec<WeylElement> {
    let rs = w.root_system();
    let refl: Vec<WeylElement> = (0..rs.num_positive())
        .map(|k| reflection_by_index(rs, k))
        .collect();
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    seen.insert(w.key_codes().to_vec(), ());
    let mut stack = vec![w.clone()];
    let mut out = vec![];
    while let Some(u) = stack.pop() {
        for t in &refl {
            let v = u.multiply(t).expect("same system");
            if v.length < u.length && seen.insert(v.key_codes().to_vec(), ()).is_none() {
                stack.push(v);
            }
        }
        out.push(u);
    }
    out
}

/// Elements of length exactly `ell`, ordered by reduced word.
pub fn enumerate_by_length(rs: &Arc<RootSystem>, ell: usize) -> Vec<WeylElement> {
    WeylGroup::new(rs).by_length(ell).to_vec()
}

/// `Σ_{w ∈ W} q^{ℓ(w)}`.
pub fn length_generating_function(rs: &Arc<RootSystem>) -> LaurentPoly {
    WeylGroup::new(rs).length_generating_function()
}

/// `Π_i [d_i]_q` over the fundamental degrees.
pub fn degree_product(rs: &RootSystem) -> LaurentPoly {
    rs.datum()
        .degrees()
        .into_iter()
        .fold(LaurentPoly::one(), |acc, d| &acc * &LaurentPoly::q_integer(d))
}
