//! GKM graphs of the flag variety and of regular semisimple Hessenberg and
//! Lusztig varieties.
//!
//! Vertices are all of `W` in canonical order. The curve joining `u` and
//! `u·s_β` is stored once, at the endpoint with `u(β) ∈ Φ⁻`; its tangent
//! weight there is `−u(β) ∈ Φ⁺` and at the other endpoint the negative.
//! The Hessenberg graph of `M` keeps the curve exactly when `β ∈ M`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hess::{rationally_smooth, RootIdeal};
use crate::poly::LaurentPoly;
use crate::rootsys::{Family, Root, RootSystem};
use crate::weyl::{reflection, reflection_by_index, WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GkmEdge {
    /// Representative endpoint (`u(β) ∈ Φ⁻`), index into the vertex list.
    pub u: usize,
    /// `u·s_β`.
    pub v: usize,
    /// Index of `β ∈ Φ⁺`.
    pub beta: usize,
}

#[derive(Clone)]
pub struct GkmGraph {
    group: Arc<WeylGroup>,
    edges: Vec<GkmEdge>,
    /// Edge indices incident to each vertex.
    incident: Vec<Vec<usize>>,
}

/// A cocharacter in fundamental-coweight coordinates; pairs with a root
/// `Σ c_i α_i` as `Σ c_i ξ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    /// `(1, r+1, (r+1)², …)`.
    pub fn default_for(rank: usize) -> Self {
        let base = rank as i64 + 1;
        Coweight((0..rank as u32).map(|k| base.pow(k)).collect())
    }

    pub fn pair(&self, root: &Root) -> i64 {
        root.0.iter().zip(&self.0).map(|(c, x)| c * x).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }
}

impl GkmGraph {
    fn from_edges(group: Arc<WeylGroup>, mut edges: Vec<GkmEdge>) -> Self {
        edges.sort();
        let mut incident = vec![vec![]; group.len()];
        for (k, e) in edges.iter().enumerate() {
            incident[e.u].push(k);
            incident[e.v].push(k);
        }
        GkmGraph {
            group,
            edges,
            incident,
        }
    }

    /// All curves `{u, u·s_β}` passing `keep(u, β)`.
    fn build(group: &Arc<WeylGroup>, mut keep: impl FnMut(&WeylElement, usize) -> bool) -> Self {
        let rs = group.root_system();
        let refl: Vec<WeylElement> = (0..rs.num_positive())
            .map(|k| reflection_by_index(rs, k))
            .collect();
        let mut edges = vec![];
        for (ui, u) in group.elements().iter().enumerate() {
            for (beta, t) in refl.iter().enumerate() {
                if !rs.is_negative_code(u.images()[beta]) || !keep(u, beta) {
                    continue;
                }
                let v = u.multiply(t).expect("same system");
                let vi = group.index_of(&v).expect("closed group");
                edges.push(GkmEdge { u: ui, v: vi, beta });
            }
        }
        Self::from_edges(group.clone(), edges)
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.group.root_system()
    }

    pub fn num_vertices(&self) -> usize {
        self.group.len()
    }

    pub fn vertex(&self, k: usize) -> &WeylElement {
        self.group.element(k)
    }

    pub fn edges(&self) -> &[GkmEdge] {
        &self.edges
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.incident[vertex].len()
    }

    /// `−u(β)` at the representative endpoint.
    pub fn weight_at_u(&self, e: &GkmEdge) -> Root {
        let u = self.group.element(e.u);
        let rs = self.root_system();
        rs.root_of_code(rs.negate_code(u.images()[e.beta]))
    }

    /// Tangent weight of edge `e` at one of its endpoints.
    pub fn weight_at(&self, e: &GkmEdge, vertex: usize) -> Root {
        let w = self.weight_at_u(e);
        if vertex == e.u {
            w
        } else {
            -w
        }
    }

    /// Whether `ξ` pairs nonzero with every edge weight.
    pub fn is_generic(&self, xi: &Coweight) -> bool {
        xi.0.len() == self.root_system().rank()
            && self.edges.iter().all(|e| xi.pair(&self.weight_at_u(e)) != 0)
    }

    /// Retries `ξ + e_k` for `k = 0, 1, …` until `ξ` is generic.
    pub fn generic_coweight(&self, xi: &Coweight) -> Result<Coweight> {
        let r = self.root_system().rank();
        if xi.0.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: xi.0.len(),
            });
        }
        let mut cur = xi.clone();
        for k in 0..64 {
            if self.is_generic(&cur) {
                return Ok(cur);
            }
            cur.0[k % r] += 1;
        }
        Err(Error::NonGenericCoweight(xi.0.clone()))
    }

    /// Białynicki-Birula cell dimension at every vertex: the number of
    /// incident edges whose tangent weight pairs positively with `ξ`, which
    /// for dominant `ξ` equals `#{β ∈ M : u(β) ∈ Φ⁻}`.
    pub fn cell_dimensions(&self, xi: &Coweight) -> Result<Vec<usize>> {
        if !self.is_generic(xi) {
            return Err(Error::NonGenericCoweight(xi.0.clone()));
        }
        let signs: Vec<bool> = self
            .edges
            .iter()
            .map(|e| xi.pair(&self.weight_at_u(e)) > 0)
            .collect();
        Ok((0..self.num_vertices())
            .map(|x| {
                self.incident[x]
                    .iter()
                    .filter(|&&k| {
                        let at_u = self.edges[k].u == x;
                        signs[k] == at_u
                    })
                    .count()
            })
            .collect())
    }

    /// `Σ_u q^{celldim(u)}`.
    pub fn poincare_polynomial(&self, xi: &Coweight) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for d in self.cell_dimensions(xi)? {
            p.add_term(d as i64, 1);
        }
        Ok(p)
    }

    fn edge_set(&self) -> BTreeSet<(Vec<u32>, usize)> {
        self.edges
            .iter()
            .map(|e| (self.group.element(e.u).key_codes().to_vec(), e.beta))
            .collect()
    }

    /// Labeled edge-set equality on the common vertex set `W`.
    pub fn graphs_equal(&self, other: &GkmGraph) -> Result<bool> {
        let (a, b) = (self.root_system(), other.root_system());
        if a.datum() != b.datum() {
            return Err(Error::MismatchedSystems(a.label(), b.label()));
        }
        Ok(self.edge_set() == other.edge_set())
    }

    /// Edge set inclusion.
    pub fn is_subgraph_of(&self, other: &GkmGraph) -> bool {
        self.edge_set().is_subset(&other.edge_set())
    }

    pub fn to_dot(&self) -> String {
        let rank = self.root_system().rank();
        let mut out = String::from("graph gkm {\n");
        for (k, w) in self.group.elements().iter().enumerate() {
            out.push_str(&format!(
                "  w{k} [label=\"{}\"];\n",
                crate::weyl::format_word(w.reduced_word(), rank)
            ));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  w{} -- w{} [label=\"{}\"];\n",
                e.u,
                e.v,
                self.root_system().root(e.beta)
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rs = self.root_system();
        let doc = GraphJson {
            family: rs.family().to_string(),
            rank: rs.rank(),
            vertices: self
                .group
                .elements()
                .iter()
                .map(|w| w.reduced_word().to_vec())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    u: e.u,
                    v: e.v,
                    beta: rs.root(e.beta).0.clone(),
                    weight_at_u: self.weight_at_u(e).0,
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    /// Rebuilds a graph from [`GkmGraph::to_json`] output, checking every
    /// edge record against the group action.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: GraphJson = serde_json::from_value(value.clone())?;
        let family: Family = doc.family.parse()?;
        let rs = Arc::new(RootSystem::new(family, doc.rank)?);
        let group = Arc::new(WeylGroup::from_words(&rs, &doc.vertices)?);
        if group.len() != doc.vertices.len() {
            return Err(Error::Parse("vertex list is not a Weyl group".into()));
        }
        for (k, word) in doc.vertices.iter().enumerate() {
            if group.element(k).reduced_word() != word.as_slice() {
                return Err(Error::Parse(format!("vertex {k} out of canonical order")));
            }
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            let beta = rs
                .index_of(&Root(e.beta.clone()))
                .ok_or_else(|| Error::NotPositiveRoot(e.beta.clone()))?;
            if e.u >= group.len() || e.v >= group.len() {
                return Err(Error::Parse(format!("edge endpoint out of range: {e:?}")));
            }
            let u = group.element(e.u);
            let v = u.multiply(&reflection_by_index(&rs, beta))?;
            let edge = GkmEdge { u: e.u, v: e.v, beta };
            if group.index_of(&v) != Some(e.v) || !rs.is_negative_code(u.images()[beta]) {
                return Err(Error::Parse(format!("inconsistent edge {e:?}")));
            }
            edges.push(edge);
        }
        let g = Self::from_edges(group, edges);
        for rec in &doc.edges {
            let e = GkmEdge {
                u: rec.u,
                v: rec.v,
                beta: rs.index_of(&Root(rec.beta.clone())).expect("checked"),
            };
            if g.weight_at_u(&e).0 != rec.weight_at_u {
                return Err(Error::Parse(format!("wrong weight on edge {rec:?}")));
            }
        }
        Ok(g)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    family: String,
    rank: usize,
    vertices: Vec<Vec<usize>>,
    edges: Vec<EdgeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeJson {
    u: usize,
    v: usize,
    beta: Vec<i64>,
    weight_at_u: Vec<i64>,
}

/// GKM graph of the flag variety: every curve `{u, u·s_β}`.
pub fn gkm_flag(group: &Arc<WeylGroup>) -> GkmGraph {
    GkmGraph::build(group, |_, _| true)
}

/// GKM graph of `X_H(s)` for `H = 𝔟 ⊕ ⊕_{α∈M} 𝔤_{−α}`: keep `β ∈ M`.
pub fn gkm_hessenberg(group: &Arc<WeylGroup>, m: &RootIdeal) -> GkmGraph {
    GkmGraph::build(group, |_, beta| m.contains(beta))
}

/// GKM graph of `Y_w(s)`, computed from the left: at each vertex `v` and
/// each `α ∈ Φ⁺` with `v⁻¹(α) ∈ Φ⁻`, the curve `{v, s_α·v}` lies in
/// `Y_w(s)` exactly when its translate `{e, s_γ}`, `γ = −v⁻¹(α)`, lies in
/// the Schubert variety `X_w`, i.e. `s_γ ≤ w`. Requires `w`
/// rationally smooth (equivalently smooth in type A).
pub fn gkm_lusztig(group: &Arc<WeylGroup>, w: &WeylElement) -> Result<GkmGraph> {
    if !rationally_smooth(w) {
        return Err(Error::NotSmooth(w.to_string()));
    }
    let rs = group.root_system();
    let left: Vec<WeylElement> = rs
        .positive_roots()
        .iter()
        .map(|a| reflection(rs, a))
        .collect::<Result<_>>()?;
    let mut edges = vec![];
    for (vi, v) in group.elements().iter().enumerate() {
        let v_inv = v.inverse();
        for (alpha, s_alpha) in rs.positive_roots().iter().zip(&left) {
            let pulled = v_inv.act_on_root(alpha)?;
            if pulled.is_positive() {
                continue;
            }
            let gamma = -pulled;
            if !reflection(rs, &gamma)?.bruhat_leq(w)? {
                continue;
            }
            let other = s_alpha.multiply(v)?;
            let oi = group.index_of(&other).expect("closed group");
            let beta = rs.index_of(&gamma).expect("positive root");
            // v·s_γ = s_α·v with v(γ) = −α ∈ Φ⁻: v is the representative.
            edges.push(GkmEdge { u: vi, v: oi, beta });
        }
    }
    Ok(GkmGraph::from_edges(group.clone(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hess::{m_w, Permutation};
    use crate::weyl::longest_element;

    fn group(f: Family, r: usize) -> Arc<WeylGroup> {
        Arc::new(WeylGroup::new(&Arc::new(RootSystem::new(f, r).unwrap())))
    }

    fn hexagon_ideal(g: &WeylGroup) -> RootIdeal {
        RootIdeal::parse(g.root_system(), "1,0;0,1").unwrap()
    }

    #[test]
    fn flag_sizes() {
        for (f, r, v, e) in [
            (Family::A, 1, 2, 1),
            (Family::A, 2, 6, 9),
            (Family::C, 3, 48, 216),
        ] {
            let g = gkm_flag(&group(f, r));
            assert_eq!(g.num_vertices(), v);
            assert_eq!(g.edges().len(), e);
            let n = g.root_system().num_positive();
            assert!((0..v).all(|x| g.degree(x) == n));
        }
    }

    #[test]
    fn edge_invariants() {
        let g = gkm_flag(&group(Family::G, 2));
        let rs = g.root_system().clone();
        for e in g.edges() {
            let u = g.vertex(e.u);
            let v = g.vertex(e.v);
            assert_eq!(&u.multiply(&reflection_by_index(&rs, e.beta)).unwrap(), v);
            let wu = g.weight_at_u(e);
            assert!(wu.is_positive());
            assert_eq!(wu, -u.act_on_root(rs.root(e.beta)).unwrap());
            // weight at v is −v(β) = u(β)
            assert_eq!(g.weight_at(e, e.v), -v.act_on_root(rs.root(e.beta)).unwrap());
            assert_eq!(g.weight_at(e, e.v), -wu);
        }
    }

    #[test]
    fn hessenberg_extremes() {
        let grp = group(Family::A, 2);
        let n = grp.root_system().num_positive();
        let full = gkm_hessenberg(&grp, &RootIdeal::full(n));
        assert!(full.graphs_equal(&gkm_flag(&grp)).unwrap());
        let discrete = gkm_hessenberg(&grp, &RootIdeal::empty(n));
        assert_eq!(discrete.num_vertices(), 6);
        assert!(discrete.edges().is_empty());
    }

    #[test]
    fn hexagon() {
        let grp = group(Family::A, 2);
        let g = gkm_hessenberg(&grp, &hexagon_ideal(&grp));
        assert_eq!(g.edges().len(), 6);
        assert!((0..6).all(|x| g.degree(x) == 2));
        // connected single cycle
        let mut seen = vec![false; 6];
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            for e in g.edges() {
                if e.u == x {
                    stack.push(e.v);
                }
                if e.v == x {
                    stack.push(e.u);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
        let xi = Coweight::default_for(2);
        let dims = g.cell_dimensions(&xi).unwrap();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 1, 1, 1, 2]);
        assert_eq!(g.poincare_polynomial(&xi).unwrap().dense(), vec![1, 4, 1]);
    }

    #[test]
    fn flag_cell_dimension_is_length() {
        for (f, r) in [(Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::G, 2)] {
            let g = group(f, r);
            let graph = gkm_flag(&g);
            let dims = graph.cell_dimensions(&Coweight::default_for(r)).unwrap();
            for (k, d) in dims.iter().enumerate() {
                assert_eq!(*d, graph.vertex(k).length(), "{f}{r} {}", graph.vertex(k));
            }
        }
    }

    #[test]
    fn lusztig_graphs() {
        let grp = group(Family::A, 2);
        let rs = grp.root_system().clone();
        let e = WeylElement::identity(&rs);
        assert!(gkm_lusztig(&grp, &e).unwrap().edges().is_empty());
        let w0 = longest_element(&rs);
        assert!(gkm_lusztig(&grp, &w0).unwrap().graphs_equal(&gkm_flag(&grp)).unwrap());
        let w231 = Permutation::parse("231").unwrap().to_weyl(&rs).unwrap();
        let lg = gkm_lusztig(&grp, &w231).unwrap();
        assert!(lg.graphs_equal(&gkm_hessenberg(&grp, &hexagon_ideal(&grp))).unwrap());

        let a3 = group(Family::A, 3);
        let bad = Permutation::parse("4231").unwrap().to_weyl(a3.root_system()).unwrap();
        assert!(matches!(gkm_lusztig(&a3, &bad), Err(Error::NotSmooth(_))));
    }

    #[test]
    fn lusztig_matches_hessenberg_in_s4() {
        let grp = group(Family::A, 3);
        for w in grp.elements() {
            if !rationally_smooth(w) {
                continue;
            }
            let a = gkm_lusztig(&grp, w).unwrap();
            let b = gkm_hessenberg(&grp, &m_w(w));
            assert!(a.graphs_equal(&b).unwrap(), "{w}");
        }
    }

    #[test]
    fn c3_m1_m2_graphs_differ() {
        let grp = group(Family::C, 3);
        let rs = grp.root_system();
        let m1 = RootIdeal::parse(rs, "1,0,0;0,1,0;0,0,1;1,1,0;0,1,1").unwrap();
        let m2 = RootIdeal::parse(rs, "1,0,0;0,1,0;0,0,1;1,1,0;0,1,1;1,1,1").unwrap();
        let g1 = gkm_hessenberg(&grp, &m1);
        let g2 = gkm_hessenberg(&grp, &m2);
        assert!(!g1.graphs_equal(&g2).unwrap());
        assert_eq!(g2.edges().len() - g1.edges().len(), grp.len() / 2);
        assert!(g1.is_subgraph_of(&g2));
    }

    #[test]
    fn cell_dims_on_flag_are_lengths() {
        let grp = group(Family::A, 2);
        let g = gkm_flag(&grp);
        let dims = g.cell_dimensions(&Coweight(vec![1, 2])).unwrap();
        for (k, d) in dims.iter().enumerate() {
            assert_eq!(*d, g.vertex(k).length());
        }
        assert_eq!(g.poincare_polynomial(&Coweight(vec![1, 2])).unwrap().dense(), vec![1, 2, 2, 1]);
        let discrete = gkm_hessenberg(&grp, &RootIdeal::empty(3));
        assert!(discrete.cell_dimensions(&Coweight(vec![1, 1])).unwrap().iter().all(|&d| d == 0));
        assert_eq!(discrete.poincare_polynomial(&Coweight(vec![1, 1])).unwrap().dense(), vec![6]);
    }

    #[test]
    fn non_generic_coweight() {
        let grp = group(Family::A, 2);
        let g = gkm_flag(&grp);
        // (1,−1) pairs to zero with α₁+α₂.
        let xi = Coweight(vec![1, -1]);
        assert!(matches!(g.cell_dimensions(&xi), Err(Error::NonGenericCoweight(_))));
        let fixed = g.generic_coweight(&xi).unwrap();
        assert!(g.is_generic(&fixed));
        assert_eq!(Coweight::default_for(3), Coweight(vec![1, 4, 16]));
    }

    #[test]
    fn regularity_and_monotonicity() {
        let grp = group(Family::B, 3);
        let ms: Vec<RootIdeal> = grp.elements().iter().step_by(3).map(m_w).collect();
        let gs: Vec<GkmGraph> = ms.iter().map(|m| gkm_hessenberg(&grp, m)).collect();
        for (m, g) in ms.iter().zip(&gs) {
            assert!((0..g.num_vertices()).all(|x| g.degree(x) == m.len()));
            assert_eq!(g.edges().len(), grp.len() * m.len() / 2);
        }
        for (a, ga) in ms.iter().zip(&gs) {
            for (b, gb) in ms.iter().zip(&gs) {
                if a.is_subset(b) {
                    assert!(ga.is_subgraph_of(gb));
                }
            }
        }
    }

    #[test]
    fn dot_export() {
        let grp = group(Family::A, 1);
        let d = gkm_hessenberg(&grp, &RootIdeal::empty(1)).to_dot();
        assert_eq!(d.matches("[label=").count(), 2);
        assert!(!d.contains("--"));
        let grp = group(Family::A, 2);
        let hex = gkm_hessenberg(&grp, &hexagon_ideal(&grp)).to_dot();
        assert_eq!(hex.matches(" -- ").count(), 6);
        assert!(hex.starts_with("graph gkm {\n  w0 [label=\"[]\"];"));
        assert_eq!(hex, gkm_hessenberg(&grp, &hexagon_ideal(&grp)).to_dot());
    }

    #[test]
    fn json_roundtrip() {
        let grp = group(Family::C, 3);
        let m = RootIdeal::parse(grp.root_system(), "1,0,0;0,1,0;0,0,1;1,1,0;0,1,1").unwrap();
        let g = gkm_hessenberg(&grp, &m);
        let j = g.to_json();
        assert_eq!(j["family"], "C");
        assert_eq!(j["vertices"].as_array().unwrap().len(), 48);
        let back = GkmGraph::from_json(&j).unwrap();
        assert!(back.graphs_equal(&g).unwrap());
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.to_json(), j);

        let mut broken = j.clone();
        let u0 = broken["edges"][0]["u"].clone();
        broken["edges"][0]["v"] = u0;
        assert!(GkmGraph::from_json(&broken).is_err());
    }

    use proptest::prelude::*;
    use crate::hess::is_valid_ideal;
    use std::sync::OnceLock;

    fn b3() -> &'static Arc<WeylGroup> {
        static G: OnceLock<Arc<WeylGroup>> = OnceLock::new();
        G.get_or_init(|| group(Family::B, 3))
    }

    /// All positive roots lying below one of the seeds.
    fn downset(rs: &RootSystem, seeds: &[usize]) -> RootIdeal {
        let below = |a: &Root, b: &Root| a.0.iter().zip(&b.0).all(|(x, y)| x <= y);
        RootIdeal::from_indices(
            rs.num_positive(),
            (0..rs.num_positive())
                .filter(|&k| seeds.iter().any(|&s| below(rs.root(k), rs.root(s)))),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn hessenberg_graphs_are_regular_and_palindromic(
            seeds in proptest::collection::vec(0usize..9, 0..4),
            extra in proptest::collection::vec(0usize..9, 0..3),
            xi in proptest::collection::vec(1i64..40, 3),
        ) {
            let g = b3();
            let rs = g.root_system();
            let m = downset(rs, &seeds);
            prop_assert!(is_valid_ideal(rs, &m));
            let graph = gkm_hessenberg(g, &m);
            for k in 0..graph.num_vertices() {
                prop_assert_eq!(graph.degree(k), m.len());
            }
            let p = graph.poincare_polynomial(&Coweight::default_for(3)).unwrap();
            prop_assert!(p.is_palindromic_of_degree(m.len() as i64));
            // The constant term counts components; it is 1 once M holds every simple root.
            if (0..rs.rank()).all(|i| m.contains(i)) {
                prop_assert_eq!(p.coeff(0), 1);
            }
            prop_assert_eq!(p.eval_one(), g.len() as i64);
            let xi = graph.generic_coweight(&Coweight(xi)).unwrap();
            prop_assert_eq!(graph.poincare_polynomial(&xi).unwrap(), p);

            let seeds2: Vec<usize> = seeds.iter().chain(&extra).copied().collect();
            let bigger = gkm_hessenberg(g, &downset(rs, &seeds2));
            prop_assert!(graph.is_subgraph_of(&bigger));
        }
    }
}
