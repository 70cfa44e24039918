//! Root ideals, the map `w ↦ M_w`, smoothness tests, and the type-A
//! dictionary between Hessenberg functions and codominant permutations.
//!
//! A root set `M ⊆ Φ⁺` stands for the subspace `𝔟 ⊕ ⊕_{α∈M} 𝔤_{−α}`; it is
//! B-stable exactly when `α ∈ M` and `α − α_i ∈ Φ⁺` force `α − α_i ∈ M`.
//!
//! Permutations are in one-line notation with values in `1..=n`, and the
//! simple reflection `s_i` of `A_{n−1}` is the transposition `(i, i+1)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};
use crate::weyl::{lower_interval, reflection_by_index, WeylElement};
use crate::poly::LaurentPoly;

/// A subset of `Φ⁺`, as a bitset over the canonical root order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIdeal {
    words: Vec<u64>,
    universe: usize,
}

impl RootIdeal {
    pub fn empty(universe: usize) -> Self {
        RootIdeal {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut m = Self::empty(universe);
        for k in 0..universe {
            m.insert(k);
        }
        m
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(universe);
        for k in indices {
            m.insert(k);
        }
        m
    }

    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<Self> {
        let mut m = Self::empty(rs.num_positive());
        for r in roots {
            let k = rs
                .index_of(r)
                .ok_or_else(|| Error::NotPositiveRoot(r.0.clone()))?;
            m.insert(k);
        }
        Ok(m)
    }

    /// Parses `"1,0,0;0,1,0"`; the empty string is the empty set.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let roots = s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                let c = crate::rootsys::parse_int_vec(t)?;
                if c.len() != rs.rank() {
                    return Err(Error::DimensionMismatch {
                        expected: rs.rank(),
                        got: c.len(),
                    });
                }
                Ok(Root(c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_roots(rs, &roots)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, k: usize) {
        assert!(k < self.universe, "root index {k} out of range");
        self.words[k / 64] |= 1 << (k % 64);
    }

    pub fn remove(&mut self, k: usize) {
        self.words[k / 64] &= !(1 << (k % 64));
    }

    #[inline]
    pub fn contains(&self, k: usize) -> bool {
        k < self.universe && self.words[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(|&k| self.contains(k))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        RootIdeal {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
            universe: self.universe,
        }
    }

    /// `Φ⁺ − M`.
    pub fn complement(&self) -> Self {
        let mut m = Self::full(self.universe);
        for k in self.iter() {
            m.remove(k);
        }
        m
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.iter().map(|k| rs.root(k).clone()).collect()
    }

    /// Inverse of [`RootIdeal::parse`].
    pub fn format(&self, rs: &RootSystem) -> String {
        self.iter()
            .map(|k| rs.root(k).to_string())
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// `M_w = {α ∈ Φ⁺ : s_α ≤ w}`, one Bruhat query per positive root.
pub fn m_w(w: &WeylElement) -> RootIdeal {
    let rs = w.root_system();
    RootIdeal::from_indices(
        rs.num_positive(),
        (0..rs.num_positive()).filter(|&k| {
            reflection_by_index(rs, k)
                .bruhat_leq(w)
                .expect("same root system")
        }),
    )
}

/// B-stability: `α ∈ M`, `α − α_i ∈ Φ⁺` ⟹ `α − α_i ∈ M`.
pub fn is_valid_ideal(rs: &RootSystem, m: &RootIdeal) -> bool {
    m.iter().all(|k| {
        let alpha = rs.root(k);
        (0..rs.rank()).all(|i| {
            let mut c = alpha.0.clone();
            c[i] -= 1;
            match rs.index_of(&Root(c)) {
                Some(j) => m.contains(j),
                None => true,
            }
        })
    })
}

/// `Σ_{v ≤ w} q^{ℓ(v)}`.
pub fn interval_poincare(w: &WeylElement) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for v in lower_interval(w) {
        p.add_term(v.length() as i64, 1);
    }
    p
}

/// Palindromicity of the lower-interval rank generating function.
pub fn rationally_smooth(w: &WeylElement) -> bool {
    interval_poincare(w).is_palindromic_of_degree(w.length() as i64)
}

/// Smoothness of the Schubert variety `X_w`.
///
/// Type A uses pattern avoidance. In types D and E rational smoothness
/// already implies smoothness. In the non-simply-laced types a rationally
/// smooth `X_w` can still be singular; there `X_w` is smooth at `e` (hence
/// everywhere, the singular locus being closed and B-stable) exactly when
/// its equivariant multiplicity at `e` is `1 / Π_{β∈M_w} (−β)`.
pub fn is_smooth(w: &WeylElement) -> bool {
    match w.root_system().family() {
        Family::A => smooth_type_a(&Permutation::from_weyl(w).expect("type A")),
        Family::D | Family::E => rationally_smooth(w),
        _ => rationally_smooth(w) && unit_multiplicity(w),
    }
}

/// Polynomials in the simple-root variables, exponent vector → coefficient.
type RootPoly = std::collections::HashMap<Vec<u32>, i128>;

fn mul_linear(p: &RootPoly, form: &[i64]) -> RootPoly {
    let mut out = RootPoly::new();
    for (e, &c) in p {
        for (i, &a) in form.iter().enumerate() {
            if a != 0 {
                let mut f = e.clone();
                f[i] += 1;
                *out.entry(f).or_insert(0) += c * a as i128;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Equivariant multiplicity of `X_w` at `e` through the Bott-Samelson
/// resolution of `w`'s reduced word: a sum over subwords `ε` with product
/// `e` of `Π_k 1/γ_k`, `γ_k = −u_k(α_{i_k})`, `u_k` the partial product.
/// Compared with `1/Π_{β∈M_w}(−β)` after clearing a common denominator.
fn unit_multiplicity(w: &WeylElement) -> bool {
    let rs = w.root_system();
    let npos = rs.num_positive();
    let word: Vec<usize> = w.reduced_word().iter().map(|i| i - 1).collect();
    // (sign, per-root exponents of the denominator) → multiplicity
    let mut terms: std::collections::HashMap<Vec<u32>, i128> = Default::default();

    fn walk(
        word: &[usize],
        k: usize,
        u: &WeylElement,
        sign: i128,
        counts: &mut Vec<u32>,
        terms: &mut std::collections::HashMap<Vec<u32>, i128>,
    ) {
        if u.length() > word.len() - k {
            return;
        }
        if k == word.len() {
            *terms.entry(counts.clone()).or_insert(0) += sign;
            return;
        }
        let rs = u.root_system();
        let npos = rs.num_positive() as u32;
        let i = word[k];
        for flip in [false, true] {
            let next = if flip { u.rmul_simple(i) } else { u.clone() };
            let gamma = rs.negate_code(next.act_code(i as u32));
            let (beta, s) = if gamma < npos { (gamma, 1) } else { (gamma - npos, -1) };
            counts[beta as usize] += 1;
            walk(word, k + 1, &next, sign * s, counts, terms);
            counts[beta as usize] -= 1;
        }
    }
    walk(
        &word,
        0,
        &WeylElement::identity(rs),
        1,
        &mut vec![0; npos],
        &mut terms,
    );

    let m = m_w(w);
    let target: Vec<u32> = (0..npos).map(|k| m.contains(k) as u32).collect();
    let target_sign: i128 = if m.len() % 2 == 0 { 1 } else { -1 };
    let mut top = target.clone();
    for counts in terms.keys() {
        for (t, &c) in top.iter_mut().zip(counts) {
            *t = (*t).max(c);
        }
    }
    let numerator = |counts: &[u32]| -> RootPoly {
        let mut p = RootPoly::from([(vec![0; rs.rank()], 1)]);
        for (k, (&t, &c)) in top.iter().zip(counts).enumerate() {
            for _ in c..t {
                p = mul_linear(&p, &rs.root(k).0);
            }
        }
        p
    };
    let mut diff = RootPoly::new();
    for (counts, &coeff) in &terms {
        if coeff != 0 {
            for (e, c) in numerator(counts) {
                *diff.entry(e).or_insert(0) += coeff * c;
            }
        }
    }
    for (e, c) in numerator(&target) {
        *diff.entry(e).or_insert(0) -= target_sign * c;
    }
    diff.values().all(|&c| c == 0)
}

/// `h : [n] → [n]` with `h(i) ≥ i` and `h` nondecreasing (values 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction(Vec<usize>);

impl HessenbergFunction {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        let ok = n >= 1
            && h.iter().enumerate().all(|(i, &x)| x >= i + 1 && x <= n)
            && h.windows(2).all(|p| p[0] <= p[1]);
        if ok {
            Ok(HessenbergFunction(h))
        } else {
            Err(Error::InvalidHessenbergFunction(h))
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `Σ_i (h(i) − i)`.
    pub fn excess(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &x)| x - (i + 1)).sum()
    }

    /// All Hessenberg functions on `[n]`, lexicographically.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            let i = prefix.len();
            if i == n {
                out.push(HessenbergFunction(prefix.clone()));
                return;
            }
            let lo = prefix.last().copied().unwrap_or(1).max(i + 1);
            for x in lo..=n {
                prefix.push(x);
                go(n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        go(n, &mut vec![], &mut out);
        out
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<_> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Parses `"2,3,1"` or `"231"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let v: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(v)
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `s_{i₁} ⋯ s_{i_k}` as a composition of functions.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p: Vec<usize> = (1..=n).collect();
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: n.saturating_sub(1),
                });
            }
            p.swap(i - 1, i);
        }
        Ok(Permutation(p))
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// A reduced word, found by bubble-sorting descents away.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut letters = vec![];
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        letters
    }

    pub fn to_weyl(&self, rs: &Arc<RootSystem>) -> Result<WeylElement> {
        if rs.family() != Family::A || rs.rank() + 1 != self.n() {
            return Err(Error::MismatchedSystems(
                format!("S{}", self.n()),
                rs.label(),
            ));
        }
        WeylElement::from_word(rs, &self.reduced_word())
    }

    pub fn from_weyl(w: &WeylElement) -> Result<Self> {
        let rs = w.root_system();
        if rs.family() != Family::A {
            return Err(Error::MismatchedSystems("A".into(), rs.label()));
        }
        Self::from_word(rs.rank() + 1, w.reduced_word())
    }

    /// Whether some subsequence is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        fn extend(p: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
            let k = chosen.len();
            if k == pat.len() {
                return true;
            }
            // Not enough positions left.
            if p.len() - start < pat.len() - k {
                return false;
            }
            for pos in start..p.len() {
                let x = p[pos];
                let consistent = chosen
                    .iter()
                    .enumerate()
                    .all(|(a, &y)| (pat[a] < pat[k]) == (y < x));
                if consistent {
                    chosen.push(x);
                    if extend(p, pat, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        extend(&self.0, pattern, 0, &mut Vec::with_capacity(pattern.len()))
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = vec![];
        let mut p: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(p.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "," } else { "" };
        let s: Vec<_> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// Smooth Schubert variety in type A: avoids 4231 and 3412.
pub fn smooth_type_a(p: &Permutation) -> bool {
    !p.contains_pattern(&[4, 2, 3, 1]) && !p.contains_pattern(&[3, 4, 1, 2])
}

pub fn is_codominant(p: &Permutation) -> bool {
    !p.contains_pattern(&[3, 1, 2])
}

/// Index of `α_{i,j} = α_i + ⋯ + α_{j−1}` in `A_{n−1}`, `1 ≤ i < j ≤ n`.
pub fn type_a_root(rs: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let n = rs.rank() + 1;
    if i == 0 || i >= j || j > n {
        return None;
    }
    let c: Vec<i64> = (1..n).map(|k| i64::from(k >= i && k < j)).collect();
    rs.index_of(&Root(c))
}

fn check_type_a(rs: &RootSystem, n: usize) -> Result<()> {
    if rs.family() != Family::A || rs.rank() + 1 != n {
        return Err(Error::MismatchedSystems(format!("A{}", n.saturating_sub(1)), rs.label()));
    }
    Ok(())
}

/// `M_h = {α_{i,j} : j ≤ h(i)}` in `A_{n−1}`.
pub fn ideal_from_hessenberg_function(rs: &RootSystem, h: &HessenbergFunction) -> Result<RootIdeal> {
    let n = h.n();
    check_type_a(rs, n)?;
    let mut m = RootIdeal::empty(rs.num_positive());
    for i in 1..=n {
        for j in i + 1..=h.0[i - 1] {
            m.insert(type_a_root(rs, i, j).expect("α_{i,j} is a root"));
        }
    }
    Ok(m)
}

/// The word `(s_{h(1)−1} ⋯ s₁)(s_{h(2)−1} ⋯ s₂) ⋯ (s_{n−1})`.
pub fn codominant_word(h: &HessenbergFunction) -> Vec<usize> {
    let mut word = vec![];
    for (i0, &hi) in h.0.iter().enumerate() {
        let i = i0 + 1;
        word.extend((i..hi).rev());
    }
    word
}

/// `w_h`, the maximal permutation with `w(i) ≤ h(i)`.
pub fn codominant_from_hessenberg_function(h: &HessenbergFunction) -> Permutation {
    Permutation::from_word(h.n(), &codominant_word(h)).expect("letters below n")
}

/// Recovers `h` from a codominant `w`: `h(i) = max(w(1), …, w(i))`.
pub fn hessenberg_function_from_codominant(p: &Permutation) -> Result<HessenbergFunction> {
    if !is_codominant(p) {
        return Err(Error::NotCodominant(p.0.clone()));
    }
    let mut h = Vec::with_capacity(p.n());
    let mut running = 0;
    for &x in &p.0 {
        running = running.max(x);
        h.push(running);
    }
    let h = HessenbergFunction::new(h)?;
    debug_assert_eq!(&codominant_from_hessenberg_function(&h), p);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{longest_element, WeylGroup};

    fn sys(f: Family, r: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(f, r).unwrap())
    }

    fn ideal(rs: &RootSystem, roots: &[&[i64]]) -> RootIdeal {
        let rr: Vec<Root> = roots.iter().map(|c| Root(c.to_vec())).collect();
        RootIdeal::from_roots(rs, &rr).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn m_w_extremes() {
        let c3 = sys(Family::C, 3);
        assert!(m_w(&WeylElement::identity(&c3)).is_empty());
        assert_eq!(m_w(&longest_element(&c3)), RootIdeal::full(9));
        let w = WeylElement::from_word(&c3, &[1, 3, 2, 3, 1]).unwrap();
        assert!(m_w(&w).contains(c3.index_of(&Root(vec![1, 1, 1])).unwrap()));
    }

    #[test]
    fn validity() {
        let c3 = sys(Family::C, 3);
        assert!(is_valid_ideal(&c3, &RootIdeal::full(9)));
        assert!(is_valid_ideal(&c3, &RootIdeal::empty(9)));
        let m1 = ideal(&c3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1]]);
        assert!(is_valid_ideal(&c3, &m1));
        let a2 = sys(Family::A, 2);
        assert!(!is_valid_ideal(&a2, &ideal(&a2, &[&[1, 1]])));
        // 2α₂+α₃ requires α₂+α₃.
        assert!(!is_valid_ideal(&c3, &ideal(&c3, &[&[0, 1, 0], &[0, 0, 1], &[0, 2, 1]])));
    }

    #[test]
    fn ideal_text_roundtrip() {
        let c3 = sys(Family::C, 3);
        let m = RootIdeal::parse(&c3, "1,0,0;0,1,0;0,0,1;1,1,0;0,1,1").unwrap();
        assert_eq!(m.len(), 5);
        assert_eq!(RootIdeal::parse(&c3, &m.format(&c3)).unwrap(), m);
        assert!(RootIdeal::parse(&c3, "").unwrap().is_empty());
        assert!(RootIdeal::parse(&c3, "1,0,1").is_err());
        assert!(RootIdeal::parse(&c3, "1,0").is_err());
    }

    #[test]
    fn pattern_avoidance() {
        assert!(smooth_type_a(&Permutation::identity(5)));
        assert!(!smooth_type_a(&perm("4231")));
        assert!(!smooth_type_a(&perm("3412")));
        assert!(!smooth_type_a(&perm("45231")));
        assert!(smooth_type_a(&perm("35421")));
        assert!(smooth_type_a(&perm("43521")));
        assert!(smooth_type_a(&perm("34521")));
    }

    #[test]
    fn codominance() {
        assert!(is_codominant(&perm("231")));
        assert!(!is_codominant(&perm("312")));
        assert!(!is_codominant(&perm("45231")));
        assert!(is_codominant(&Permutation::identity(4)));
    }

    /// Pattern scan against brute force over all index subsets.
    #[test]
    fn pattern_scan_matches_subsets() {
        use itertools::Itertools;
        let pats: [&[usize]; 3] = [&[3, 1, 2], &[4, 2, 3, 1], &[3, 4, 1, 2]];
        for p in Permutation::all(6) {
            for pat in pats {
                let brute = (0..6).combinations(pat.len()).any(|idx| {
                    let sub: Vec<usize> = idx.iter().map(|&i| p.0[i]).collect();
                    (0..sub.len()).all(|a| {
                        (0..sub.len()).all(|b| (sub[a] < sub[b]) == (pat[a] < pat[b]))
                    })
                });
                assert_eq!(p.contains_pattern(pat), brute, "{p} {pat:?}");
            }
        }
    }

    #[test]
    fn rational_smoothness() {
        let a3 = sys(Family::A, 3);
        let w4231 = perm("4231").to_weyl(&a3).unwrap();
        assert_eq!(w4231.length(), 5);
        assert!(!rationally_smooth(&w4231));
        assert!(rationally_smooth(&longest_element(&a3)));
        for f in [Family::C, Family::G, Family::B] {
            let rs = sys(f, if f == Family::G { 2 } else { 3 });
            let g = WeylGroup::new(&rs);
            for x in g.elements().iter().filter(|x| x.length() <= 2) {
                assert!(rationally_smooth(x));
            }
            assert!(rationally_smooth(g.longest()));
        }
    }

    #[test]
    fn smooth_equals_rationally_smooth_in_type_a() {
        for n in 2..=5 {
            let rs = sys(Family::A, n - 1);
            for p in Permutation::all(n) {
                let w = p.to_weyl(&rs).unwrap();
                assert_eq!(smooth_type_a(&p), rationally_smooth(&w), "{p}");
            }
        }
    }

    #[test]
    fn multiplicity_test_in_simply_laced_types() {
        // Rational smoothness implies smoothness here, so the equivariant
        // multiplicity must be the unit one for every rationally smooth w.
        for (f, r) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 4)] {
            let rs = sys(f, r);
            let g = WeylGroup::new(&rs);
            for w in g.elements().iter().filter(|w| rationally_smooth(w)) {
                assert!(unit_multiplicity(w), "{f}{r} {w}");
            }
        }
    }

    #[test]
    fn non_simply_laced_smoothness() {
        // B2 has a single singular Schubert variety, indexed by
        // short·long·short.
        let b2 = sys(Family::B, 2);
        let g = WeylGroup::new(&b2);
        let singular: Vec<String> = g
            .elements()
            .iter()
            .filter(|w| !is_smooth(w))
            .map(|w| w.to_string())
            .collect();
        assert_eq!(singular, vec!["[212]"]);
        // A smooth X_w has a B-stable tangent space at e of dimension ℓ(w).
        for (f, r) in [(Family::B, 3), (Family::C, 3), (Family::G, 2)] {
            let rs = sys(f, r);
            let g = WeylGroup::new(&rs);
            let mut singular = 0;
            for w in g.elements() {
                if is_smooth(w) {
                    let m = m_w(w);
                    assert!(is_valid_ideal(&rs, &m), "{f}{r} {w}");
                    assert_eq!(m.len(), w.length());
                } else if rationally_smooth(w) {
                    singular += 1;
                }
            }
            assert!(singular > 0, "{f}{r}");
        }
    }

    #[test]
    fn permutation_weyl_roundtrip() {
        let rs = sys(Family::A, 3);
        for p in Permutation::all(4) {
            let w = p.to_weyl(&rs).unwrap();
            assert_eq!(w.length(), p.inversions());
            assert_eq!(Permutation::from_weyl(&w).unwrap(), p);
        }
        assert_eq!(
            Permutation::from_word(3, &[1, 2]).unwrap(),
            perm("231")
        );
        // α_{i,j} ↦ ±α_{p(i),p(j)}
        let p = perm("3142");
        let w = p.to_weyl(&rs).unwrap();
        for i in 1..=4 {
            for j in i + 1..=4 {
                let k = type_a_root(&rs, i, j).unwrap();
                let img = w.act_on_root(rs.root(k)).unwrap();
                let (a, b) = (p.0[i - 1], p.0[j - 1]);
                let expected = if a < b {
                    rs.root(type_a_root(&rs, a, b).unwrap()).clone()
                } else {
                    -rs.root(type_a_root(&rs, b, a).unwrap()).clone()
                };
                assert_eq!(img, expected);
            }
        }
    }

    #[test]
    fn hessenberg_validation() {
        assert!(HessenbergFunction::new(vec![2, 3, 3]).is_ok());
        assert!(HessenbergFunction::new(vec![1, 1, 3]).is_err());
        assert!(HessenbergFunction::new(vec![3, 2, 3]).is_err());
        assert!(HessenbergFunction::new(vec![2, 4, 3]).is_err());
        assert!(HessenbergFunction::new(vec![]).is_err());
        let counts: Vec<usize> = (1..=7).map(|n| HessenbergFunction::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn ideals_from_hessenberg_functions() {
        let a2 = sys(Family::A, 2);
        let h = |v: Vec<usize>| HessenbergFunction::new(v).unwrap();
        assert!(ideal_from_hessenberg_function(&a2, &h(vec![1, 2, 3])).unwrap().is_empty());
        assert_eq!(
            ideal_from_hessenberg_function(&a2, &h(vec![3, 3, 3])).unwrap(),
            RootIdeal::full(3)
        );
        assert_eq!(
            ideal_from_hessenberg_function(&a2, &h(vec![2, 3, 3])).unwrap(),
            ideal(&a2, &[&[1, 0], &[0, 1]])
        );
        assert!(ideal_from_hessenberg_function(&a2, &h(vec![2, 2])).is_err());
        for n in 2..=6 {
            let rs = sys(Family::A, n - 1);
            for h in HessenbergFunction::all(n) {
                let m = ideal_from_hessenberg_function(&rs, &h).unwrap();
                assert!(is_valid_ideal(&rs, &m));
                assert_eq!(m.len(), h.excess());
            }
        }
    }

    #[test]
    fn codominant_examples() {
        let h = |v: Vec<usize>| HessenbergFunction::new(v).unwrap();
        assert_eq!(codominant_from_hessenberg_function(&h(vec![1, 2, 3])), Permutation::identity(3));
        assert_eq!(codominant_word(&h(vec![2, 3, 3])), vec![1, 2]);
        assert_eq!(codominant_from_hessenberg_function(&h(vec![2, 3, 3])), perm("231"));
        assert_eq!(codominant_word(&h(vec![3, 3, 3])), vec![2, 1, 2]);
        assert_eq!(codominant_from_hessenberg_function(&h(vec![3, 3, 3])), perm("321"));
        assert_eq!(hessenberg_function_from_codominant(&perm("231")).unwrap(), h(vec![2, 3, 3]));
        assert_eq!(hessenberg_function_from_codominant(&perm("321")).unwrap(), h(vec![3, 3, 3]));
        assert_eq!(
            hessenberg_function_from_codominant(&Permutation::identity(4)).unwrap(),
            h(vec![1, 2, 3, 4])
        );
        assert!(matches!(
            hessenberg_function_from_codominant(&perm("312")),
            Err(Error::NotCodominant(_))
        ));
    }

    /// `w_h` is the lexicographically largest permutation with `w(i) ≤ h(i)`.
    #[test]
    fn codominant_is_lex_max_by_brute_force() {
        for n in 1..=6 {
            let perms = Permutation::all(n);
            for h in HessenbergFunction::all(n) {
                let best = perms
                    .iter()
                    .filter(|p| p.0.iter().zip(&h.0).all(|(a, b)| a <= b))
                    .max()
                    .unwrap();
                let wh = codominant_from_hessenberg_function(&h);
                assert_eq!(&wh, best);
                assert!(is_codominant(&wh));
                assert_eq!(wh.inversions(), h.excess());
                assert_eq!(codominant_word(&h).len(), h.excess());
            }
        }
    }

    #[test]
    fn codominant_ideal_matches_m_w() {
        for n in 2..=6 {
            let rs = sys(Family::A, n - 1);
            for h in HessenbergFunction::all(n) {
                let w = codominant_from_hessenberg_function(&h).to_weyl(&rs).unwrap();
                assert_eq!(m_w(&w), ideal_from_hessenberg_function(&rs, &h).unwrap(), "{h}");
            }
        }
    }

    #[test]
    fn smooth_type_a_ideals() {
        for n in 2..=5 {
            let rs = sys(Family::A, n - 1);
            for p in Permutation::all(n).into_iter().filter(smooth_type_a) {
                let w = p.to_weyl(&rs).unwrap();
                let m = m_w(&w);
                assert_eq!(m.len(), p.inversions(), "{p}");
                assert!(is_valid_ideal(&rs, &m), "{p}");
            }
        }
    }

    #[test]
    fn m_w_monotone() {
        let rs = sys(Family::B, 3);
        let g = WeylGroup::new(&rs);
        let ms: Vec<_> = g.elements().iter().map(m_w).collect();
        for (a, v) in g.elements().iter().enumerate() {
            for (b, x) in g.elements().iter().enumerate() {
                if v.bruhat_leq(x).unwrap() {
                    assert!(ms[a].is_subset(&ms[b]));
                }
            }
        }
    }

    #[test]
    fn c3_example_has_no_smooth_preimage() {
        let c3 = sys(Family::C, 3);
        let m1 = ideal(&c3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1]]);
        let mut m2 = m1.clone();
        m2.insert(c3.index_of(&Root(vec![1, 1, 1])).unwrap());
        assert!(is_valid_ideal(&c3, &m2));
        let g = WeylGroup::new(&c3);
        for w in g.elements() {
            if rationally_smooth(w) {
                let m = m_w(w);
                assert_ne!(m, m1, "{w}");
                assert_ne!(m, m2, "{w}");
            }
        }
        for w in g.by_length(5) {
            assert_ne!(m_w(w), m1);
        }
        for w in g.by_length(6) {
            assert_ne!(m_w(w), m2);
        }
    }

    use proptest::prelude::*;

    /// Pads raw values into a Hessenberg function: nondecreasing, h(i) ≥ i.
    fn hessenberg(raw: &[usize]) -> HessenbergFunction {
        let n = raw.len();
        let mut h = Vec::with_capacity(n);
        let mut prev = 0;
        for (i, &x) in raw.iter().enumerate() {
            prev = prev.max(i + 1).max(x.min(n));
            h.push(prev);
        }
        HessenbergFunction::new(h).unwrap()
    }

    proptest! {
        #[test]
        fn hessenberg_ideals_are_valid(raw in proptest::collection::vec(1usize..=7, 2..=7)) {
            let h = hessenberg(&raw);
            let rs = sys(Family::A, h.n() - 1);
            let m = ideal_from_hessenberg_function(&rs, &h).unwrap();
            prop_assert!(is_valid_ideal(&rs, &m));
            prop_assert_eq!(m.len(), h.excess());
            let p = codominant_from_hessenberg_function(&h);
            prop_assert_eq!(hessenberg_function_from_codominant(&p).unwrap(), h);
        }

        #[test]
        fn m_w_is_monotone(a in proptest::collection::vec(1usize..=3, 0..10),
                           b in proptest::collection::vec(1usize..=3, 0..10)) {
            let rs = sys(Family::B, 3);
            let v = WeylElement::from_word(&rs, &a).unwrap();
            let w = WeylElement::from_word(&rs, &b).unwrap();
            if v.bruhat_leq(&w).unwrap() {
                prop_assert!(m_w(&v).is_subset(&m_w(&w)));
            }
        }
    }
}
