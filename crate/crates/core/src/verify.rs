//! Verification suites: the C3 worked example, the codominant dictionary,
//! GKM comparisons, character identities and the flag calibration. Each
//! returns a [`Report`] of named checks; nothing here panics on a failed
//! check.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cache::GroupProvider;
use crate::charlib::{check_weight_symmetry, localization_euler, weyl_dimension, CharacterEngine};
use crate::error::{Error, Result};
use crate::gkm::{gkm_flag, gkm_hessenberg, gkm_lusztig, Coweight, GkmGraph};
use crate::hess::{
    codominant_from_hessenberg_function, hessenberg_function_from_codominant,
    ideal_from_hessenberg_function, is_smooth, is_valid_ideal, m_w, rationally_smooth,
    HessenbergFunction, RootIdeal,
};
use crate::poly::LaurentPoly;
use crate::rootsys::{Family, Root, Weight};
use crate::weyl::{degree_product, format_word, parse_word, reflection, WeylElement, WeylGroup};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    /// Informational lines (tables, counts); not pass/fail.
    pub notes: Vec<String>,
}

impl Report {
    fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: vec![],
            notes: vec![],
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail,
        });
    }

    /// Records a check that holds when `failures` is empty, quoting the first.
    fn check_all(&mut self, name: impl Into<String>, failures: &[String]) {
        let detail = failures.first().map(|f| {
            if failures.len() > 1 {
                format!("{f} (and {} more)", failures.len() - 1)
            } else {
                f.clone()
            }
        });
        self.check(name, failures.is_empty(), detail);
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for n in &self.notes {
            writeln!(f, "  {n}")?;
        }
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) if !c.pass => writeln!(f, "{}: {verdict} ({d})", c.name)?,
                _ => writeln!(f, "{}: {verdict}", c.name)?,
            }
        }
        Ok(())
    }
}

fn words_to_set(rs: &Arc<crate::rootsys::RootSystem>, words: &[&str]) -> Result<BTreeSet<Vec<usize>>> {
    words
        .iter()
        .map(|s| Ok(WeylElement::from_word(rs, &parse_word(s)?)?.reduced_word().to_vec()))
        .collect()
}

fn describe_diff(rank: usize, got: &BTreeSet<Vec<usize>>, want: &BTreeSet<Vec<usize>>) -> Option<String> {
    if got == want {
        return None;
    }
    let show = |s: Vec<&Vec<usize>>| s.iter().map(|w| format_word(w, rank)).join(" ");
    Some(format!(
        "missing {{{}}}, unexpected {{{}}}",
        show(want.difference(got).collect()),
        show(got.difference(want).collect())
    ))
}

pub const C3_LENGTH_FIVE: [&str; 8] = [
    "23121", "12321", "32321", "13231", "12312", "32312", "13232", "21323",
];
pub const C3_LENGTH_SIX: [&str; 7] = [
    "123121", "132321", "213231", "132312", "232312", "121323", "321323",
];
pub const C3_M1: &str = "1,0,0;0,1,0;0,0,1;1,1,0;0,1,1";
pub const C3_M2: &str = "1,0,0;0,1,0;0,0,1;1,1,0;0,1,1;1,1,1";

/// The type C3 example: two root ideals that are not of the form `M_w` for
/// any rationally smooth `w`.
pub fn verify_c3(groups: &GroupProvider) -> Result<Report> {
    let g = groups.group(Family::C, 3)?;
    let rs = g.root_system();
    let mut rep = Report::new("verify c3");

    for (ell, words) in [(5usize, &C3_LENGTH_FIVE[..]), (6, &C3_LENGTH_SIX[..])] {
        let got: BTreeSet<Vec<usize>> =
            g.by_length(ell).iter().map(|w| w.reduced_word().to_vec()).collect();
        let want = words_to_set(rs, words)?;
        rep.check(
            format!("{} elements of length {ell}", want.len()),
            got.len() == words.len(),
            Some(format!("found {}", got.len())),
        );
        rep.check(
            format!("length-{ell} elements equal the listed words"),
            got == want,
            describe_diff(3, &got, &want),
        );
    }

    let m1 = RootIdeal::parse(rs, C3_M1)?;
    let m2 = RootIdeal::parse(rs, C3_M2)?;
    rep.check("M₁ is a root ideal", is_valid_ideal(rs, &m1), None);
    rep.check("M₂ is a root ideal", is_valid_ideal(rs, &m2), None);

    let s232 = WeylElement::from_word(rs, &[2, 3, 2])?;
    let s13231 = WeylElement::from_word(rs, &[1, 3, 2, 3, 1])?;
    rep.check(
        "s₂s₃s₂ = s_{2α₂+α₃}",
        s232 == reflection(rs, &Root(vec![0, 2, 1]))?,
        None,
    );
    rep.check(
        "s₁s₃s₂s₃s₁ = s_{α₁+α₂+α₃}",
        s13231 == reflection(rs, &Root(vec![1, 1, 1]))?,
        None,
    );
    for (name, v, w) in [
        ("s_{2α₂+α₃} ≤ [21323]", &s232, "21323"),
        ("s_{2α₂+α₃} ≤ [32312]", &s232, "32312"),
        ("s_{α₁+α₂+α₃} ≤ [13231]", &s13231, "13231"),
    ] {
        let w = WeylElement::from_word(rs, &parse_word(w)?)?;
        rep.check(name, v.bruhat_leq(&w)?, None);
    }

    let smooth: Vec<&WeylElement> = g.elements().iter().filter(|w| rationally_smooth(w)).collect();
    rep.note(format!(
        "{} of {} elements are rationally smooth",
        smooth.len(),
        g.len()
    ));
    for (label, m) in [("M₁", &m1), ("M₂", &m2)] {
        let hits: Vec<String> = smooth
            .iter()
            .filter(|w| m_w(w) == *m)
            .map(|w| w.to_string())
            .collect();
        rep.check_all(format!("no smooth w with M_w = {label}"), &hits);
    }
    Ok(rep)
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// `h ↦ w_h` against its defining properties for every Hessenberg function on `[n]`.
pub fn verify_codominant(groups: &GroupProvider, n: usize) -> Result<Report> {
    if !(2..=7).contains(&n) {
        return Err(Error::Parse(format!("codominant check needs 2 ≤ n ≤ 7, got {n}")));
    }
    let g = groups.group(Family::A, n - 1)?;
    let rs = g.root_system();
    let all = HessenbergFunction::all(n);
    let mut rep = Report::new(format!("verify codominant n={n}"));
    rep.check(
        format!("{} functions checked", all.len()),
        all.len() == catalan(n),
        Some(format!("Catalan({n}) = {}", catalan(n))),
    );
    let (mut avoid, mut len, mut ideal, mut round) = (vec![], vec![], vec![], vec![]);
    for h in &all {
        let p = codominant_from_hessenberg_function(h);
        if p.contains_pattern(&[3, 1, 2]) {
            avoid.push(format!("h={h}: w_h={p}"));
        }
        if p.inversions() != h.excess() {
            len.push(format!("h={h}: ℓ={} vs {}", p.inversions(), h.excess()));
        }
        if m_w(&p.to_weyl(rs)?) != ideal_from_hessenberg_function(rs, h)? {
            ideal.push(format!("h={h}"));
        }
        match hessenberg_function_from_codominant(&p) {
            Ok(back) if back == *h => {}
            other => round.push(format!("h={h}: got {other:?}")),
        }
    }
    rep.check_all("w_h avoids 312", &avoid);
    rep.check_all("ℓ(w_h) = Σ(h(i)−i)", &len);
    rep.check_all("M_{w_h} = M_h", &ideal);
    rep.check_all("h ↦ w_h ↦ h is the identity", &round);
    Ok(rep)
}

/// `Σ_{σ∈S_n} q^{#{(i,j) : i < j ≤ h(i), σ(i) > σ(j)}}`.
pub fn permutation_statistic_poincare(h: &HessenbergFunction) -> LaurentPoly {
    let hv = h.values();
    let n = h.n();
    let mut p = LaurentPoly::zero();
    for sigma in (0..n).permutations(n) {
        let count = (0..n)
            .flat_map(|i| (i + 1..hv[i]).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma[i] > sigma[j])
            .count();
        p.add_term(count as i64, 1);
    }
    p
}

/// Dominant on even draws, arbitrary sign on odd ones.
fn random_coweight(rng: &mut ChaCha8Rng, rank: usize, draw: usize) -> Coweight {
    let lo = if draw % 2 == 0 { 1 } else { -50 };
    Coweight((0..rank).map(|_| rng.gen_range(lo..=50)).collect())
}

/// Poincaré polynomial with the default coweight (made generic if needed).
pub fn default_poincare(graph: &GkmGraph) -> Result<LaurentPoly> {
    let rank = graph.root_system().rank();
    let xi = graph.generic_coweight(&Coweight::default_for(rank))?;
    graph.poincare_polynomial(&xi)
}

fn check_gkm_rank(family: Family, rank: usize) -> Result<()> {
    let limit = if family == Family::A { 4 } else { 3 };
    if rank > limit {
        return Err(Error::Parse(format!(
            "GKM suite is limited to rank ≤ {limit} in type {family}"
        )));
    }
    Ok(())
}

/// Lusztig graph (Bruhat criterion) against Hessenberg graph of `M_w` for
/// every smooth `w`, plus the structural properties of the latter.
pub fn verify_gkm(
    groups: &GroupProvider,
    family: Family,
    rank: usize,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    check_gkm_rank(family, rank)?;
    let g = groups.group(family, rank)?;
    let rs = g.root_system();
    let order = g.len() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new(format!("verify gkm {}", rs.label()));
    let (mut equal, mut regular, mut palin, mut count, mut indep) =
        (vec![], vec![], vec![], vec![], vec![]);
    let mut checked = 0;
    let mut skipped = vec![];
    for w in g.elements() {
        if !rationally_smooth(w) {
            skipped.push(w.to_string());
            continue;
        }
        checked += 1;
        let m = m_w(w);
        let lusztig = gkm_lusztig(&g, w)?;
        let hess = gkm_hessenberg(&g, &m);
        if !lusztig.graphs_equal(&hess)? {
            equal.push(w.to_string());
        }
        if (0..hess.num_vertices()).any(|x| hess.degree(x) != m.len()) {
            regular.push(w.to_string());
        }
        let p = default_poincare(&hess)?;
        if !p.is_palindromic_of_degree(m.len() as i64) || p.max_degree() != Some(m.len() as i64) {
            palin.push(format!("{w}: {p}"));
        }
        if p.eval_one() != order {
            count.push(format!("{w}: P(1) = {}", p.eval_one()));
        }
        for draw in 0..samples {
            let xi = hess.generic_coweight(&random_coweight(&mut rng, rs.rank(), draw))?;
            let q = hess.poincare_polynomial(&xi)?;
            if q != p {
                indep.push(format!("{w} at ξ={:?}: {q} vs {p}", xi.0));
                break;
            }
        }
        rep.note(format!("{w}: |M_w| = {}, P = {p}", m.len()));
    }
    rep.note(format!(
        "{checked} smooth elements checked, {} singular skipped",
        skipped.len()
    ));
    if family == Family::A && !skipped.is_empty() {
        rep.note(format!("singular: {}", skipped.join(" ")));
    }
    rep.check(format!("{checked} smooth elements found"), checked > 0, None);
    rep.check_all("Lusztig graph = Hessenberg graph of M_w", &equal);
    rep.check_all("graphs are |M_w|-regular", &regular);
    rep.check_all("Poincaré polynomial palindromic of degree |M_w|", &palin);
    rep.check_all("P(1) = |W|", &count);
    rep.check_all(format!("independent of {samples} random generic coweights"), &indep);

    if family == Family::A {
        rep.merge(verify_permutation_statistic(&g)?);
    }
    Ok(rep)
}

/// Type A: GKM cell counts against the permutation statistic, for every
/// Hessenberg function on `[rank + 1]`.
pub fn verify_permutation_statistic(g: &Arc<WeylGroup>) -> Result<Report> {
    let rs = g.root_system();
    let n = rs.rank() + 1;
    let mut rep = Report::new(format!("permutation statistic n={n}"));
    let mut bad = vec![];
    let all = HessenbergFunction::all(n);
    for h in &all {
        let m = ideal_from_hessenberg_function(rs, h)?;
        let p = default_poincare(&gkm_hessenberg(g, &m))?;
        let q = permutation_statistic_poincare(h);
        if p != q {
            bad.push(format!("h={h}: {p} vs {q}"));
        }
    }
    rep.check_all(
        format!("GKM Poincaré = permutation statistic for {} functions", all.len()),
        &bad,
    );
    Ok(rep)
}

/// Flag variety calibration: cell dimensions are lengths and the Poincaré
/// polynomial factors through the degrees.
pub fn verify_flag(groups: &GroupProvider, systems: &[(Family, usize)]) -> Result<Report> {
    let mut rep = Report::new("verify flag");
    for &(family, rank) in systems {
        let g = groups.group(family, rank)?;
        let label = g.root_system().label();
        let graph = gkm_flag(&g);
        let xi = graph.generic_coweight(&Coweight::default_for(rank))?;
        let dims = graph.cell_dimensions(&xi)?;
        let lengths_ok = dims
            .iter()
            .zip(g.elements())
            .all(|(&d, w)| d == w.length());
        let p = graph.poincare_polynomial(&xi)?;
        rep.note(format!("{label}: P = {p}"));
        rep.check(format!("{label}: cell dimension = length"), lengths_ok, None);
        rep.check(
            format!("{label}: P = Σ q^ℓ(w)"),
            p == g.length_generating_function(),
            Some(format!("{p}")),
        );
        rep.check(
            format!("{label}: P = Π [d_i]_q"),
            p == degree_product(g.root_system()),
            Some(format!("{p}")),
        );
    }
    Ok(rep)
}

pub const FLAG_SYSTEMS: [(Family, usize); 6] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::C, 3),
    (Family::G, 2),
];

/// Borel-Weil-Bott against the fixed-point formula on random weights with
/// coordinates in `[−4, 4]`.
pub fn verify_euler_oracle(
    groups: &GroupProvider,
    family: Family,
    rank: usize,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let g = groups.group(family, rank)?;
    let rs = g.root_system();
    let engine = CharacterEngine::new(rs);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = vec![];
    for _ in 0..samples {
        let mu = Weight((0..rank).map(|_| rng.gen_range(-4..=4)).collect());
        if localization_euler(&g, &mu)? != engine.bott_euler(&mu)? {
            bad.push(format!("μ = {mu}"));
        }
    }
    let mut rep = Report::new(format!("euler oracle {}", rs.label()));
    rep.check_all(
        format!("{}: Borel-Weil-Bott = localization on {samples} random weights", rs.label()),
        &bad,
    );
    Ok(rep)
}

/// Identities of `V_w(λ)` for every smooth `w` and every dominant `λ` with
/// coordinates at most `bound`.
pub fn verify_characters(
    groups: &GroupProvider,
    family: Family,
    rank: usize,
    bound: i64,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    if rank > 3 {
        return Err(Error::Parse("character suite is limited to rank ≤ 3".into()));
    }
    let g = groups.group(family, rank)?;
    let rs = g.root_system().clone();
    let engine = CharacterEngine::new(&rs);
    let label = rs.label();
    let mut rep = Report::new(format!("verify characters {label}, λ ≤ {bound}"));

    // The Koszul formula is evaluated on every rationally smooth w; the
    // restriction argument behind monotonicity needs X_v, X_w smooth.
    let smooth: Vec<&WeylElement> = g.elements().iter().filter(|w| rationally_smooth(w)).collect();
    let lambdas: Vec<Weight> = (0..rank)
        .map(|_| 0..=bound)
        .multi_cartesian_product()
        .map(Weight)
        .collect();
    let order = g.len() as i64;
    let w0 = g.longest();

    let (mut positive, mut symmetric, mut top, mut bottom, mut mono) =
        (vec![], vec![], vec![], vec![], vec![]);
    let mut singular_drops = vec![];
    // dims[w][λ]
    let mut dims: HashMap<&WeylElement, Vec<i64>> = HashMap::new();
    for &w in &smooth {
        let mut row = vec![];
        for lam in &lambdas {
            let c = engine.v_w_character(w, lam)?;
            if !c.is_nonnegative() {
                positive.push(format!("w={w}, λ={lam}"));
            }
            if !check_weight_symmetry(&rs, &c) {
                symmetric.push(format!("w={w}, λ={lam}"));
            }
            if w.is_identity() && c.dim() != order {
                bottom.push(format!("λ={lam}: {}", c.dim()));
            }
            if w == w0 && c.dim() as u128 != weyl_dimension(&rs, lam)? {
                top.push(format!("λ={lam}: {}", c.dim()));
            }
            row.push(c.dim());
        }
        dims.insert(w, row);
    }
    for (li, lam) in lambdas.iter().enumerate() {
        if !lam.is_regular_dominant() {
            continue;
        }
        for (&v, &w) in smooth.iter().tuple_combinations() {
            // canonical order is by length, so only v ≤ w can hold
            if v.bruhat_leq(w)? && dims[v][li] > dims[w][li] {
                let msg = format!("{v} ≤ {w} at λ={lam}: {} > {}", dims[v][li], dims[w][li]);
                if is_smooth(v) && is_smooth(w) {
                    mono.push(msg);
                } else {
                    singular_drops.push(msg);
                }
            }
        }
    }
    let singular: Vec<String> = smooth
        .iter()
        .filter(|w| !is_smooth(w))
        .map(|w| w.to_string())
        .collect();
    rep.note(format!(
        "{} rationally smooth elements × {} weights; singular among them: {}",
        smooth.len(),
        lambdas.len(),
        if singular.is_empty() { "none".to_string() } else { singular.join(" ") }
    ));
    if !singular_drops.is_empty() {
        rep.note(format!(
            "dimension drops along {} pairs involving a singular X_w, e.g. {}",
            singular_drops.len(),
            singular_drops[0]
        ));
    }
    rep.note(format!(
        "dim V_w(λ) for λ in {}",
        lambdas.iter().map(|l| l.to_string()).join(" ")
    ));
    for &w in &smooth {
        rep.note(format!("{w}: {}", dims[w].iter().join(" ")));
    }
    rep.check_all("multiplicities ≥ 0", &positive);
    rep.check_all("Weyl group symmetry of weights", &symmetric);
    rep.check_all("dim V_{w₀}(λ) = Weyl dimension", &top);
    rep.check_all("dim V_e(λ) = |W|", &bottom);
    rep.check_all("dim monotone along smooth v ≤ w (regular λ)", &mono);
    if samples > 0 {
        rep.merge(verify_euler_oracle(groups, family, rank, samples, seed)?);
    }
    Ok(rep)
}
