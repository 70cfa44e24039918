//! Exact torus characters.
//!
//! Irreducible characters come from Freudenthal's recursion, run in
//! integers through the symmetrized form `(ν, β) = Σ ν_i d_i c_i`. Euler
//! characteristics of line bundles on the flag variety come from
//! Borel-Weil-Bott, with a fixed-point (localization) evaluation kept as an
//! independent route. `V_w(λ)` is the alternating sum over subsets of
//! `Φ⁺ − M_w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hess::{m_w, rationally_smooth};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// Finitely supported `Weight → ℤ`, never storing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Character {
    mult: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(weight: Weight, mult: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(weight, mult);
        c
    }

    pub fn add_term(&mut self, weight: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.mult.entry(weight.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.mult.remove(&weight);
        }
    }

    pub fn add_scaled(&mut self, other: &Character, k: i64) {
        for (w, &m) in &other.mult {
            self.add_term(w.clone(), k * m);
        }
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut out = Character::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.mult.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mult.values().all(|&m| m > 0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.mult.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mult.iter().map(|(w, &m)| (w, m))
    }

    /// Sorted `(weight, multiplicity)` pairs.
    pub fn to_sorted(&self) -> Vec<(Vec<i64>, i64)> {
        self.mult.iter().map(|(w, &m)| (w.0.clone(), m)).collect()
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scale(-1)
    }
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_sorted().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(Vec<i64>, i64)> = Vec::deserialize(d)?;
        let mut c = Character::zero();
        for (w, m) in pairs {
            c.add_term(Weight(w), m);
        }
        Ok(c)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .mult
            .iter()
            .map(|(w, m)| format!("{m}·e^{w}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn check_rank(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.0.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: w.0.len(),
        });
    }
    Ok(())
}

/// Irreducible character of highest weight `λ` by Freudenthal's formula
///
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)`,
/// visiting `μ = λ − Σ c_j α_j` in order of increasing depth `Σ c_j`.
pub fn weyl_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    check_rank(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let r = rs.rank();
    let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|a| a.0.clone()).collect();
    let rho2 = rs.rho().scale(2);
    let weight_of = |c: &[i64]| -> Weight { lambda - &rs.root_coords_to_weight(c) };

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let zero = vec![0i64; r];
    mult.insert(zero.clone(), 1);
    let mut layer = vec![zero];
    while !layer.is_empty() {
        let mut candidates: Vec<Vec<i64>> = layer
            .iter()
            .flat_map(|c| {
                (0..r).map(move |j| {
                    let mut d = c.clone();
                    d[j] += 1;
                    d
                })
            })
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut next = vec![];
        for c in candidates {
            let mu = weight_of(&c);
            // (λ−μ, λ+μ+2ρ)
            let sum = &(lambda + &mu) + &rho2;
            let lhs = rs.form_weight_root(&sum, &c);
            let mut rhs = 0i64;
            for alpha in &roots {
                let mut shifted = c.clone();
                loop {
                    for (s, a) in shifted.iter_mut().zip(alpha) {
                        *s -= a;
                    }
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&shifted) {
                        rhs += m * rs.form_weight_root(&weight_of(&shifted), alpha);
                    }
                }
            }
            rhs *= 2;
            if lhs == 0 {
                assert_eq!(rhs, 0, "Freudenthal: zero norm gap with nonzero sum");
                continue;
            }
            assert_eq!(rhs % lhs, 0, "Freudenthal: inexact division");
            let m = rhs / lhs;
            if m != 0 {
                mult.insert(c.clone(), m);
                next.push(c);
            }
        }
        layer = next;
    }
    let mut out = Character::zero();
    for (c, m) in mult {
        out.add_term(weight_of(&c), m);
    }
    Ok(out)
}

/// `Π_{α>0} ⟨λ+ρ, α∨⟩ / Π_{α>0} ⟨ρ, α∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    check_rank(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let shifted = lambda + rs.rho();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 0..rs.num_positive() {
        let a = rs.pairing_positive(&shifted, k) as u128;
        let b = rs.pairing_positive(rs.rho(), k) as u128;
        num = num
            .checked_mul(a)
            .ok_or_else(|| Error::Parse("Weyl dimension overflows u128".into()))?;
        den *= b;
    }
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// Moves `ν` into the dominant chamber by simple reflections; returns the
/// image and the word applied (first letter applied first).
fn dominate(rs: &RootSystem, nu: &Weight) -> (Weight, Vec<usize>) {
    let mut cur = nu.clone();
    let mut applied = vec![];
    while let Some(i) = cur.0.iter().position(|&x| x < 0) {
        cur = rs.reflect_weight(i + 1, &cur);
        applied.push(i + 1);
    }
    (cur, applied)
}

/// Caches irreducible characters; all methods take `&self`.
pub struct CharacterEngine {
    rs: Arc<RootSystem>,
    cache: Mutex<HashMap<Weight, Arc<Character>>>,
}

impl CharacterEngine {
    pub fn new(rs: &Arc<RootSystem>) -> Self {
        CharacterEngine {
            rs: rs.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn weyl_character(&self, lambda: &Weight) -> Result<Arc<Character>> {
        if let Some(c) = self.cache.lock().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(weyl_character(&self.rs, lambda)?);
        self.cache
            .lock()
            .unwrap()
            .insert(lambda.clone(), c.clone());
        Ok(c)
    }

    /// `(sign, dominant weight)` with `χ(𝓑, L_μ) = sign · ch V(weight)`, or
    /// `None` when `μ + ρ` is singular.
    pub fn bott_data(&self, mu: &Weight) -> Result<Option<(i64, Weight)>> {
        check_rank(&self.rs, mu)?;
        let nu = mu + self.rs.rho();
        if self.rs.is_singular(&nu) {
            return Ok(None);
        }
        let (dom, applied) = dominate(&self.rs, &nu);
        // u = s_{i_k} ⋯ s_{i_1}; the sign is read off its inversion count.
        let word: Vec<usize> = applied.into_iter().rev().collect();
        let u = WeylElement::from_word(&self.rs, &word)?;
        let sign = if u.length() % 2 == 0 { 1 } else { -1 };
        Ok(Some((sign, &dom - self.rs.rho())))
    }

    /// `χ(𝓑, L_μ)` as a virtual character.
    pub fn bott_euler(&self, mu: &Weight) -> Result<Character> {
        Ok(match self.bott_data(mu)? {
            None => Character::zero(),
            Some((sign, lambda)) => self.weyl_character(&lambda)?.scale(sign),
        })
    }

    pub fn euler_dimension(&self, mu: &Weight) -> Result<i64> {
        Ok(match self.bott_data(mu)? {
            None => 0,
            Some((sign, lambda)) => sign * weyl_dimension(&self.rs, &lambda)? as i64,
        })
    }

    /// `V_w(λ) = Σ_{I ⊆ Φ⁺ − M_w} (−1)^{|I|} χ(𝓑, L_{λ − ⟨I⟩})`.
    ///
    /// Accepted for rationally smooth `w`; it computes `H⁰(Y_w(s), L_λ)`
    /// when `X_w` is actually smooth.
    pub fn v_w_character(&self, w: &WeylElement, lambda: &Weight) -> Result<Character> {
        let terms = self.v_w_terms(w, lambda)?;
        let mut out = Character::zero();
        for (mu, coeff) in terms {
            out.add_scaled(&self.bott_euler(&mu)?, coeff);
        }
        Ok(out)
    }

    /// `dim V_w(λ)` through Weyl dimensions only.
    pub fn v_w_dimension(&self, w: &WeylElement, lambda: &Weight) -> Result<i64> {
        let terms = self.v_w_terms(w, lambda)?;
        let mut total = 0;
        for (mu, coeff) in terms {
            total += coeff * self.euler_dimension(&mu)?;
        }
        Ok(total)
    }

    /// Expands `Π_{α ∈ Φ⁺ − M_w} (1 − e^{−α})` by a product DP and shifts by
    /// `λ`; returns `(λ − ⟨I⟩, Σ (−1)^{|I|})` grouped by `⟨I⟩`.
    pub fn v_w_terms(&self, w: &WeylElement, lambda: &Weight) -> Result<Vec<(Weight, i64)>> {
        check_rank(&self.rs, lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        if !rationally_smooth(w) {
            return Err(Error::NotSmooth(w.to_string()));
        }
        let complement = m_w(w).complement();
        let r = self.rs.rank();
        let mut poly: HashMap<Vec<i64>, i64> = HashMap::from([(vec![0; r], 1)]);
        for k in complement.iter() {
            let alpha = &self.rs.root(k).0;
            let mut next = poly.clone();
            for (s, c) in &poly {
                let shifted: Vec<i64> = s.iter().zip(alpha).map(|(x, a)| x + a).collect();
                *next.entry(shifted).or_insert(0) -= c;
            }
            next.retain(|_, c| *c != 0);
            poly = next;
        }
        let mut terms: Vec<(Weight, i64)> = poly
            .into_iter()
            .map(|(s, c)| (lambda - &self.rs.root_coords_to_weight(&s), c))
            .collect();
        terms.sort();
        Ok(terms)
    }
}

pub fn bott_euler(rs: &Arc<RootSystem>, mu: &Weight) -> Result<Character> {
    CharacterEngine::new(rs).bott_euler(mu)
}

pub fn v_w_character(w: &WeylElement, lambda: &Weight) -> Result<Character> {
    CharacterEngine::new(w.root_system()).v_w_character(w, lambda)
}

/// `mult(ν) = mult(s_i ν)` for every `ν` in the support and every simple `i`.
pub fn check_weight_symmetry(rs: &RootSystem, c: &Character) -> bool {
    c.iter().all(|(nu, m)| {
        (1..=rs.rank()).all(|i| c.mult(&rs.reflect_weight(i, nu)) == m)
    })
}

/// Laurent polynomial in `rank` variables, exponents in weight coordinates.
type MultiPoly = HashMap<Vec<i64>, i64>;

fn poly_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out: MultiPoly = HashMap::with_capacity(a.len() * b.len());
    for (x, c) in a {
        for (y, d) in b {
            let m: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(m).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `1 − e^{γ}`.
fn one_minus(gamma: &[i64]) -> MultiPoly {
    HashMap::from([(vec![0; gamma.len()], 1), (gamma.to_vec(), -1)])
}

/// Exact quotient `p / (1 − e^{γ})`; `None` if the division leaves a
/// remainder. Along each line `m + tγ` the quotient is the running sum of
/// `p`, which must vanish past the last term.
fn divide_one_minus(p: &MultiPoly, gamma: &[i64]) -> Option<MultiPoly> {
    let j = gamma.iter().position(|&g| g != 0)?;
    let mut lines: HashMap<Vec<i64>, BTreeMap<i64, i64>> = HashMap::new();
    for (m, &c) in p {
        let t = m[j].div_euclid(gamma[j]);
        let base: Vec<i64> = m.iter().zip(gamma).map(|(x, g)| x - t * g).collect();
        *lines.entry(base).or_default().entry(t).or_insert(0) += c;
    }
    let mut q: MultiPoly = HashMap::new();
    for (base, terms) in lines {
        let (&t0, _) = terms.iter().next().unwrap();
        let (&t1, _) = terms.iter().next_back().unwrap();
        let mut running = 0i64;
        for t in t0..t1 {
            running += terms.get(&t).copied().unwrap_or(0);
            if running != 0 {
                let m: Vec<i64> = base.iter().zip(gamma).map(|(b, g)| b + t * g).collect();
                q.insert(m, running);
            }
        }
        running += terms[&t1];
        if running != 0 {
            return None;
        }
    }
    Some(q)
}

/// `χ(𝓑, L_μ)` by the fixed-point sum
/// `Σ_{w∈W} e^{wμ} / Π_{α>0} (1 − e^{−wα})`, evaluated by clearing the
/// common denominator `Π_{β>0} (1 − e^{−β})(1 − e^{β})` and dividing out one
/// binomial at a time.
pub fn localization_euler(group: &WeylGroup, mu: &Weight) -> Result<Character> {
    let rs = group.root_system();
    check_rank(rs, mu)?;
    let beta_w: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|b| rs.root_to_weight(b).0)
        .collect();
    let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| -x).collect() };

    let mut numerator: MultiPoly = HashMap::new();
    for w in group.elements() {
        let wmu = w.act_on_weight(mu);
        let mut term: MultiPoly = HashMap::from([(wmu.0, 1)]);
        for k in 0..rs.num_positive() {
            // w(α_k) = ±β; its denominator factor is 1 − e^{∓β}, the
            // complementary factor of the common product is 1 − e^{±β}.
            let code = w.images()[k];
            let n = rs.num_positive() as u32;
            let (b, positive) = if code < n {
                (code as usize, true)
            } else {
                ((code - n) as usize, false)
            };
            let factor = if positive {
                one_minus(&beta_w[b])
            } else {
                one_minus(&neg(&beta_w[b]))
            };
            term = poly_mul(&term, &factor);
        }
        for (m, c) in term {
            *numerator.entry(m).or_insert(0) += c;
        }
    }
    numerator.retain(|_, c| *c != 0);

    let mut q = numerator;
    for b in &beta_w {
        q = divide_one_minus(&q, b)
            .ok_or_else(|| Error::Parse("localization sum is not a polynomial".into()))?;
        q = divide_one_minus(&q, &neg(b))
            .ok_or_else(|| Error::Parse("localization sum is not a polynomial".into()))?;
    }
    let mut out = Character::zero();
    for (m, c) in q {
        out.add_term(Weight(m), c);
    }
    Ok(out)
}
