//! Finite crystallographic root systems built from Bourbaki Cartan matrices.
//!
//! Roots are integer vectors in the simple-root basis, weights are integer
//! vectors in the fundamental-weight basis. Simple indices in the public API
//! are 1-based (`α₁ … α_r`), matching the usual notation for reduced words.
//!
//! Internally every root of `Φ = Φ⁺ ∪ Φ⁻` has a *root code*: positive root
//! number `k` has code `k`, its negative has code `k + |Φ⁺|`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Cartan type plus its Cartan matrix, `cartan[i][j] = ⟨α_j, α_i∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType {
                family: family.to_string(),
                rank,
            });
        }

        let mut a = vec![vec![0i64; rank]; rank];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        // (short, long, multiplicity): A[short][long] = -m, A[long][short] = -1.
        let mut bond = |i: usize, j: usize, short_first: Option<i64>| match short_first {
            None => {
                a[i][j] = -1;
                a[j][i] = -1;
            }
            Some(m) => {
                a[i][j] = -m;
                a[j][i] = -1;
            }
        };
        match family {
            Family::A => {
                for k in 0..rank - 1 {
                    bond(k, k + 1, None);
                }
            }
            Family::B => {
                for k in 0..rank - 2 {
                    bond(k, k + 1, None);
                }
                // α_r short
                bond(rank - 1, rank - 2, Some(2));
            }
            Family::C => {
                for k in 0..rank - 2 {
                    bond(k, k + 1, None);
                }
                // α_r long
                bond(rank - 2, rank - 1, Some(2));
            }
            Family::D => {
                for k in 0..rank - 2 {
                    bond(k, k + 1, None);
                }
                bond(rank - 3, rank - 1, None);
            }
            Family::E => {
                bond(0, 2, None);
                bond(1, 3, None);
                for k in 2..rank - 1 {
                    bond(k, k + 1, None);
                }
            }
            Family::F => {
                bond(0, 1, None);
                bond(2, 1, Some(2));
                bond(2, 3, None);
            }
            Family::G => {
                bond(0, 1, Some(3));
            }
        }
        let datum = CartanDatum {
            family,
            rank,
            cartan: a,
        };
        datum.check_matrix()?;
        Ok(datum)
    }

    fn check_matrix(&self) -> Result<()> {
        let bad = || Error::InvalidType {
            family: self.family.to_string(),
            rank: self.rank,
        };
        for i in 0..self.rank {
            if self.cartan[i][i] != 2 {
                return Err(bad());
            }
            for j in 0..self.rank {
                if i == j {
                    continue;
                }
                let x = self.cartan[i][j];
                if !(-3..=0).contains(&x) || (x == 0) != (self.cartan[j][i] == 0) {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Fundamental degrees `d_i` of the Weyl group.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|k| 2 * k).collect(),
            Family::D => {
                let mut d: Vec<usize> = (1..n).map(|k| 2 * k).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_coords(&self.0))
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_coords(&self.0))
    }
}

fn join_coords(c: &[i64]) -> String {
    c.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a comma-separated integer vector such as `"1,0,-2"`.
pub fn parse_int_vec(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// `reflect[i][code]` is the code of `s_i(root)`, over all `2|Φ⁺|` codes.
    reflect: Vec<Vec<u32>>,
    /// Coroot of each positive root in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
    /// Symmetrizer: `d_i = (α_i, α_i)/2`, scaled so the short roots have 1.
    symmetrizer: Vec<i64>,
    rho: Weight,
    fundamental: Vec<Weight>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Self::build(CartanDatum::new(family, rank)?)
    }

    /// Closes the simple roots under all simple reflections.
    pub fn build(datum: CartanDatum) -> Result<Self> {
        datum.check_matrix()?;
        let r = datum.rank;
        let a = &datum.cartan;

        let mut found: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = found.iter().cloned().collect();
        let mut head = 0;
        while head < found.len() {
            let beta = found[head].clone();
            head += 1;
            for i in 0..r {
                let p: i64 = (0..r).map(|j| a[i][j] * beta[j]).sum();
                let mut img = beta.clone();
                img[i] -= p;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone())
                {
                    found.push(img);
                }
            }
        }
        // Height, then descending lex so that α₁, …, α_r occupy codes 0..r.
        found.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });

        let n = found.len();
        let index: HashMap<Vec<i64>, usize> =
            found.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect();

        let mut reflect = vec![vec![0u32; 2 * n]; r];
        for (i, table) in reflect.iter_mut().enumerate() {
            for (k, beta) in found.iter().enumerate() {
                let p: i64 = (0..r).map(|j| a[i][j] * beta[j]).sum();
                let mut img = beta.clone();
                img[i] -= p;
                let code = if let Some(&idx) = index.get(&img) {
                    idx
                } else {
                    let negated: Vec<i64> = img.iter().map(|c| -c).collect();
                    n + *index
                        .get(&negated)
                        .ok_or_else(|| Error::NotARoot(img.clone()))?
                };
                table[k] = code as u32;
                table[k + n] = ((code + n) % (2 * n)) as u32;
            }
        }

        let symmetrizer = symmetrizer(a);
        let coroots = found
            .iter()
            .map(|beta| {
                let half_norm = half_norm(a, &symmetrizer, beta);
                beta.iter()
                    .zip(&symmetrizer)
                    .map(|(c, d)| {
                        let num = c * d;
                        debug_assert_eq!(num % half_norm, 0);
                        num / half_norm
                    })
                    .collect()
            })
            .collect();

        let fundamental = (0..r)
            .map(|i| Weight((0..r).map(|j| i64::from(i == j)).collect()))
            .collect();

        Ok(RootSystem {
            datum,
            positive: found.into_iter().map(Root).collect(),
            index,
            reflect,
            coroots,
            symmetrizer,
            rho: Weight(vec![1; r]),
            fundamental,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn family(&self) -> Family {
        self.datum.family
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn label(&self) -> String {
        self.datum.label()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive root number `k` (0-based, in the canonical order).
    pub fn root(&self, k: usize) -> &Root {
        &self.positive[k]
    }

    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        self.check_index(i)?;
        Ok(&self.positive[i - 1])
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn coroot(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    /// Index of a positive root, if `r` is one.
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    /// Code of any root in `Φ`, positive or negative.
    pub fn code_of(&self, r: &Root) -> Option<u32> {
        if let Some(&k) = self.index.get(&r.0) {
            return Some(k as u32);
        }
        let neg: Vec<i64> = r.0.iter().map(|c| -c).collect();
        self.index
            .get(&neg)
            .map(|&k| (k + self.positive.len()) as u32)
    }

    /// The root with the given code.
    pub fn root_of_code(&self, code: u32) -> Root {
        let n = self.positive.len();
        let code = code as usize;
        if code < n {
            self.positive[code].clone()
        } else {
            -self.positive[code - n].clone()
        }
    }

    #[inline]
    pub fn negate_code(&self, code: u32) -> u32 {
        let n = self.positive.len() as u32;
        if code < n {
            code + n
        } else {
            code - n
        }
    }

    #[inline]
    pub fn is_negative_code(&self, code: u32) -> bool {
        code as usize >= self.positive.len()
    }

    /// `s_i` applied to a root code; `i` is 0-based here.
    #[inline]
    pub(crate) fn reflect_code(&self, i: usize, code: u32) -> u32 {
        self.reflect[i][code as usize]
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: len,
            })
        } else {
            Ok(())
        }
    }

    /// `s_i(r) = r − ⟨r, α_i∨⟩ α_i` for a root `r ∈ Φ`.
    pub fn reflect_root(&self, i: usize, r: &Root) -> Result<Root> {
        self.check_index(i)?;
        self.check_len(r.0.len())?;
        let code = self
            .code_of(r)
            .ok_or_else(|| Error::NotARoot(r.0.clone()))?;
        Ok(self.root_of_code(self.reflect_code(i - 1, code)))
    }

    /// `s_i(ν) = ν − ⟨ν, α_i∨⟩ α_i` for a weight.
    pub fn reflect_weight(&self, i: usize, w: &Weight) -> Weight {
        let c = w.0[i - 1];
        let a = &self.datum.cartan;
        Weight(
            (0..self.rank())
                .map(|k| w.0[k] - c * a[k][i - 1])
                .collect(),
        )
    }

    /// Converts a vector in the simple-root basis to fundamental-weight
    /// coordinates: `ν_i = Σ_j A[i][j] c_j`.
    pub fn root_coords_to_weight(&self, c: &[i64]) -> Weight {
        let a = &self.datum.cartan;
        Weight(
            (0..self.rank())
                .map(|i| (0..self.rank()).map(|j| a[i][j] * c[j]).sum())
                .collect(),
        )
    }

    pub fn root_to_weight(&self, r: &Root) -> Weight {
        self.root_coords_to_weight(&r.0)
    }

    /// `⟨w, α∨⟩` for a root `α ∈ Φ`.
    pub fn pairing(&self, w: &Weight, alpha: &Root) -> Result<i64> {
        self.check_len(w.0.len())?;
        self.check_len(alpha.0.len())?;
        let code = self
            .code_of(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        Ok(self.pairing_code(w, code))
    }

    pub(crate) fn pairing_code(&self, w: &Weight, code: u32) -> i64 {
        let n = self.positive.len();
        let (k, sign) = if (code as usize) < n {
            (code as usize, 1)
        } else {
            (code as usize - n, -1)
        };
        sign * self.pairing_positive(w, k)
    }

    #[inline]
    pub(crate) fn pairing_positive(&self, w: &Weight, k: usize) -> i64 {
        self.coroots[k].iter().zip(&w.0).map(|(c, x)| c * x).sum()
    }

    /// Invariant form `(ν, β)` of a weight and a root-lattice vector, in the
    /// normalisation where short simple roots have `(α, α) = 2`.
    pub fn form_weight_root(&self, w: &Weight, c: &[i64]) -> i64 {
        w.0.iter()
            .zip(c)
            .zip(&self.symmetrizer)
            .map(|((x, y), d)| x * y * d)
            .sum()
    }

    /// `⟨I⟩ = Σ_{α ∈ I} α` in weight coordinates.
    pub fn root_sum(&self, roots: &[Root]) -> Result<Weight> {
        let mut acc = vec![0i64; self.rank()];
        for r in roots {
            if self.index_of(r).is_none() {
                return Err(Error::NotPositiveRoot(r.0.clone()));
            }
            for (a, b) in acc.iter_mut().zip(&r.0) {
                *a += b;
            }
        }
        Ok(self.root_coords_to_weight(&acc))
    }

    /// Whether `ν` lies on a wall: `⟨ν, α∨⟩ = 0` for some positive root.
    pub fn is_singular(&self, w: &Weight) -> bool {
        (0..self.positive.len()).any(|k| self.pairing_positive(w, k) == 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family().to_string(),
            "rank": self.rank(),
            "positive_roots": self.positive.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
            "cartan": self.datum.cartan,
        })
    }
}

/// `(β, β)/2` for a root-lattice vector.
fn half_norm(a: &[Vec<i64>], d: &[i64], beta: &[i64]) -> i64 {
    let r = beta.len();
    let mut total = 0;
    for i in 0..r {
        for j in 0..r {
            total += beta[i] * d[i] * a[i][j] * beta[j];
        }
    }
    total / 2
}

/// Positive integers with `d_i A[i][j] = d_j A[j][i]`, smallest entry 1.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; r];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].unwrap();
        for j in 0..r {
            if j != i && a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * Ratio::new(a[i][j], a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / g).collect()
}
