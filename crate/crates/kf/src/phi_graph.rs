//! The phi operators on signed terms, the graph they induce, and the
//! sign-reversing involution psi whose fixed points give the positive
//! formula.
//!
//! For a term (w, a) and a simple index i, let k_i = <w(lambda+rho),
//! alpha_i^vee> (never zero for dominant lambda). Then
//!
//! ```text
//! phi_i(w, a) = (s_i w, f_i^{-k_i}(a))   if k_i < 0
//!             = (s_i w, e_i^{k_i}(a))    if k_i > 0 and the chain survives
//!             = 0                        otherwise.
//! ```
//!
//! Edges are stored in the f-direction (tail has k_i < 0); the e-direction
//! is its reversal. Every connected component has a unique source with
//! w = id, and the arrow labels at the source control the whole component.
//!
//! psi acts on each component by a single phi_i, where i is chosen from the
//! smallest block of consecutive source labels using the broken-hexagon
//! test; singleton components are fixed. Fixed points are exactly the terms
//! (id, a) killed by every phi_i, and are characterized by an admissibility
//! scan on the concatenated sign words.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::crystal_ops::{build_word, e_power, epsilon, f_power, reduce_word};
use crate::error::{Error, Falsification, Result};
use crate::kostant::{
    build_s, kf_alternating, render_tableau_notation, KostantPartition, LaurentFreePoly, SignedTerm,
};
use crate::root_system::{rho, Permutation, PositiveRoot, WeightVector};

/// Human-readable instance tag; mu is shown by the representative whose
/// coordinate sum matches lambda's, which is the partition view whenever
/// lambda - mu lies in the root lattice.
pub fn instance_label(lambda: &WeightVector, mu: &WeightVector) -> String {
    let target: i64 = lambda.coords().iter().sum();
    match mu.rep_with_sum(target) {
        Some(rep) => {
            let body: Vec<String> = rep.iter().map(|c| c.to_string()).collect();
            format!("lambda={} mu=({})", lambda, body.join(","))
        }
        None => format!("lambda={} mu={}", lambda, mu),
    }
}

/// k_i = <w(lambda+rho), alpha_i^vee> for each simple index, as a vector
/// indexed by i-1. Zero entries are impossible for dominant lambda and are
/// treated as an internal invariant violation.
pub fn k_values(w: &Permutation, lambda: &WeightVector) -> Vec<i64> {
    let n = lambda.rank();
    let moved = w.act(&lambda.add(&rho(n).expect("rank checked upstream")));
    (1..n)
        .map(|i| {
            let k = moved.coroot_pairing(i);
            assert!(k != 0, "k_{i} = 0 at w={w}: non-dominant lambda or a bug");
            k
        })
        .collect()
}

/// Applies phi_i to a signed term: an f-chain when k_i < 0, an e-chain when
/// k_i > 0; `None` when the chain dies (including pseudo-zero steps).
pub fn phi(term: &SignedTerm, i: usize, lambda: &WeightVector) -> Option<SignedTerm> {
    let k = k_values(&term.w, lambda)[i - 1];
    let part = if k < 0 {
        f_power(&term.part, i, (-k) as u32)?
    } else {
        e_power(&term.part, i, k as u32)?
    };
    Some(SignedTerm {
        w: term.w.left_mul_simple(i),
        part,
    })
}

/// A labeled edge in the f-direction: `from` has k_label < 0 and its
/// f-chain lands on `to`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Edge {
    pub from: usize,
    pub label: usize,
    pub to: usize,
}

/// The graph induced by the phi operators on S_{lambda,mu}.
#[derive(Clone, Debug)]
pub struct PhiGraph {
    pub n: usize,
    pub lambda: WeightVector,
    pub mu: WeightVector,
    pub vertices: Vec<SignedTerm>,
    pub edges: Vec<Edge>,
    index: HashMap<SignedTerm, usize>,
    adjacency: Vec<Vec<(usize, usize)>>, // vertex -> (label, neighbor)
}

impl PhiGraph {
    pub fn vertex_index(&self, term: &SignedTerm) -> Option<usize> {
        self.index.get(term).copied()
    }

    pub fn instance_string(&self) -> String {
        format!("{} n={}", instance_label(&self.lambda, &self.mu), self.n)
    }

    /// Labels of edges incident to a vertex, sorted and deduplicated.
    pub fn labels_at(&self, v: usize) -> Vec<usize> {
        let mut labels: Vec<usize> = self.adjacency[v].iter().map(|&(l, _)| l).collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }
}

/// Builds the graph: vertices are S_{lambda,mu} in deterministic order, and
/// for every vertex with k_i > 0 whose e-chain survives, the f-direction
/// edge from the partner is recorded.
pub fn build_graph(lambda: &WeightVector, mu: &WeightVector, n: usize) -> Result<PhiGraph> {
    if !mu.is_dominant() {
        return Err(Error::NonDominant(mu.to_string()));
    }
    let vertices = build_s(lambda, mu, n)?;
    let index: HashMap<SignedTerm, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.clone(), k))
        .collect();
    let mut edges = Vec::new();
    for (v_idx, v) in vertices.iter().enumerate() {
        let kvals = k_values(&v.w, lambda);
        for i in 1..n {
            if kvals[i - 1] <= 0 {
                continue;
            }
            if let Some(target) = phi(v, i, lambda) {
                let t_idx = *index
                    .get(&target)
                    .expect("phi image must stay inside S_{lambda,mu}");
                edges.push(Edge {
                    from: t_idx,
                    label: i,
                    to: v_idx,
                });
            }
        }
    }
    edges.sort_unstable_by_key(|e| (e.from, e.label, e.to));
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for e in &edges {
        adjacency[e.from].push((e.label, e.to));
        adjacency[e.to].push((e.label, e.from));
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
    }
    Ok(PhiGraph {
        n,
        lambda: lambda.clone(),
        mu: mu.clone(),
        vertices,
        edges,
        index,
        adjacency,
    })
}

/// A weakly connected component with its unique identity-source and the
/// blocks of consecutive arrow labels present at the source.
#[derive(Clone, Debug)]
pub struct Component {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Index of the unique vertex with w = id.
    pub source: usize,
    /// Sorted labels of edges at the source.
    pub source_labels: Vec<usize>,
    /// Maximal runs of consecutive source labels as (first label, run length).
    pub blocks: Vec<(usize, usize)>,
}

/// Splits the graph into components, checking that each contains exactly
/// one vertex with w = id.
pub fn components(g: &PhiGraph) -> Result<Vec<Component>> {
    let mut seen = vec![false; g.vertices.len()];
    let mut out = Vec::new();
    for start in 0..g.vertices.len() {
        if seen[start] {
            continue;
        }
        let mut verts = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            verts.push(v);
            for &(_, u) in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        verts.sort_unstable();
        let sources: Vec<usize> = verts
            .iter()
            .copied()
            .filter(|&v| g.vertices[v].w.is_identity())
            .collect();
        if sources.len() != 1 {
            return Err(Error::Falsified(Falsification {
                instance: g.instance_string(),
                kind: "component-source-count".into(),
                witness: format!(
                    "component {:?} has {} identity vertices",
                    verts,
                    sources.len()
                ),
            }));
        }
        let source = sources[0];
        let source_labels = g.labels_at(source);
        let blocks = consecutive_blocks(&source_labels);
        out.push(Component {
            vertices: verts,
            source,
            source_labels,
            blocks,
        });
    }
    out.sort_by_key(|c| c.vertices[0]);
    Ok(out)
}

fn consecutive_blocks(labels: &[usize]) -> Vec<(usize, usize)> {
    let mut blocks = Vec::new();
    let mut iter = labels.iter().copied();
    if let Some(first) = iter.next() {
        let mut start = first;
        let mut len = 1;
        let mut prev = first;
        for l in iter {
            if l == prev + 1 {
                len += 1;
            } else {
                blocks.push((start, len));
                start = l;
                len = 1;
            }
            prev = l;
        }
        blocks.push((start, len));
    }
    blocks
}

/// "a is broken by phi_i after phi_j": with k_i, k_j > 0 and both chains
/// alive, the e_i-string at e_j^{k_j}(a) is too short for the hexagon,
/// i.e. epsilon_i(e_j^{k_j} a) < k_i + k_j. False whenever the
/// preconditions fail.
pub fn is_broken_by_after(alpha: &KostantPartition, i: usize, j: usize, kvals: &[i64]) -> bool {
    if i.abs_diff(j) != 1 || i == 0 || j == 0 || i > kvals.len() || j > kvals.len() {
        return false;
    }
    let (ki, kj) = (kvals[i - 1], kvals[j - 1]);
    if ki <= 0 || kj <= 0 {
        return false;
    }
    if e_power(alpha, i, ki as u32).is_none() {
        return false;
    }
    let Some(beta) = e_power(alpha, j, kj as u32) else {
        return false;
    };
    (epsilon(&beta, i) as i64) < ki + kj
}

/// The involution data for a graph: the image of every vertex under psi and
/// the label chosen for each non-singleton component.
#[derive(Clone, Debug)]
pub struct PsiMap {
    pub image: Vec<usize>,
    /// Chosen phi label per component, `None` for singletons.
    pub component_choice: Vec<Option<usize>>,
    pub components: Vec<Component>,
}

impl PsiMap {
    pub fn fixed_indices(&self) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&v| self.image[v] == v)
            .collect()
    }
}

/// Computes psi on every vertex, checking that it is a sign-reversing,
/// size-preserving involution; any failure is reported as a falsification
/// together with the offending component.
pub fn psi_map(g: &PhiGraph) -> Result<PsiMap> {
    let comps = components(g)?;
    let mut image: Vec<usize> = (0..g.vertices.len()).collect();
    let mut choices = Vec::with_capacity(comps.len());
    for comp in &comps {
        if comp.vertices.len() == 1 {
            choices.push(None);
            continue;
        }
        let i = choose_psi_label(g, comp);
        choices.push(Some(i));
        for &v in &comp.vertices {
            let term = &g.vertices[v];
            let img = phi(term, i, &g.lambda).ok_or_else(|| {
                Error::Falsified(Falsification {
                    instance: g.instance_string(),
                    kind: "psi-undefined".into(),
                    witness: format!(
                        "phi_{i} is zero at (w={}, a={}) in a non-singleton component",
                        term.w, term.part
                    ),
                })
            })?;
            image[v] = *g
                .index
                .get(&img)
                .expect("phi image must stay inside S_{lambda,mu}");
        }
    }
    // involution, sign reversal, size preservation
    for v in 0..g.vertices.len() {
        let u = image[v];
        if image[u] != v {
            return Err(Error::Falsified(Falsification {
                instance: g.instance_string(),
                kind: "psi-not-involution".into(),
                witness: format!(
                    "psi^2 moves (w={}, a={})",
                    g.vertices[v].w, g.vertices[v].part
                ),
            }));
        }
        if u != v {
            let sv = g.vertices[v].w.sign();
            let su = g.vertices[u].w.sign();
            if sv == su || g.vertices[v].part.size() != g.vertices[u].part.size() {
                return Err(Error::Falsified(Falsification {
                    instance: g.instance_string(),
                    kind: "psi-not-sign-reversing".into(),
                    witness: format!(
                        "pair (w={}, a={}) <-> (w={}, a={})",
                        g.vertices[v].w, g.vertices[v].part, g.vertices[u].w, g.vertices[u].part
                    ),
                }));
            }
        }
    }
    Ok(PsiMap {
        image,
        component_choice: choices,
        components: comps,
    })
}

/// The label rule: take the smallest block of consecutive source labels
/// (ties to the leftmost), relabel it 1..m, then pick 1 unless the source
/// is broken by phi_1 after phi_2, in which case pick the largest j whose
/// whole prefix chain phi_{l-1}-after-phi_l is broken.
fn choose_psi_label(g: &PhiGraph, comp: &Component) -> usize {
    let (start, len) = comp
        .blocks
        .iter()
        .copied()
        .min_by_key(|&(s, l)| (l, s))
        .expect("non-singleton component has source labels");
    let alpha = &g.vertices[comp.source].part;
    let kvals = k_values(&g.vertices[comp.source].w, &g.lambda);
    let broken = |l: usize| is_broken_by_after(alpha, start + l - 2, start + l - 1, &kvals);
    if len == 1 || !broken(2) {
        return start;
    }
    let mut best = 2;
    while best < len && broken(best + 1) {
        best += 1;
    }
    start + best - 1
}

/// psi applied to one vertex of the graph.
pub fn psi(term: &SignedTerm, g: &PhiGraph) -> Result<SignedTerm> {
    let map = psi_map(g)?;
    let v = g
        .vertex_index(term)
        .expect("term must be a vertex of the graph");
    Ok(g.vertices[map.image[v]].clone())
}

/// All fixed points of psi. Checks that they all sit at w = id and coincide
/// with the terms killed by every phi_i.
pub fn fixed_points(g: &PhiGraph) -> Result<Vec<SignedTerm>> {
    let map = psi_map(g)?;
    let fixed = map.fixed_indices();
    for &v in &fixed {
        if !g.vertices[v].w.is_identity() {
            return Err(Error::Falsified(Falsification {
                instance: g.instance_string(),
                kind: "fixed-point-not-id".into(),
                witness: format!("(w={}, a={})", g.vertices[v].w, g.vertices[v].part),
            }));
        }
    }
    let mut by_kill: Vec<usize> = Vec::new();
    for (v_idx, v) in g.vertices.iter().enumerate() {
        if !v.w.is_identity() {
            continue;
        }
        if (1..g.n).all(|i| phi(v, i, &g.lambda).is_none()) {
            by_kill.push(v_idx);
        }
    }
    if by_kill != fixed {
        return Err(Error::Falsified(Falsification {
            instance: g.instance_string(),
            kind: "fixed-point-mismatch".into(),
            witness: format!("psi-fixed {fixed:?} vs phi-killed {by_kill:?}"),
        }));
    }
    Ok(fixed.into_iter().map(|v| g.vertices[v].clone()).collect())
}

/// The positive formula: the size generating function over the fixed points
/// of psi. Cross-checked against the alternating sum; disagreement is a
/// falsification, not a silent wrong answer.
pub fn kf_positive(lambda: &WeightVector, mu: &WeightVector, n: usize) -> Result<LaurentFreePoly> {
    let g = build_graph(lambda, mu, n)?;
    let mut poly = LaurentFreePoly::zero();
    for term in fixed_points(&g)? {
        poly.add_term(term.part.size() as usize, 1);
    }
    let alternating = kf_alternating(lambda, mu, n)?;
    if poly != alternating {
        return Err(Error::Falsified(Falsification {
            instance: g.instance_string(),
            kind: "positive-vs-alternating".into(),
            witness: format!("fixed-point sum {poly} vs alternating sum {alternating}"),
        }));
    }
    Ok(poly)
}

/// Admissibility scan: for each i, reduce the concatenation W_i* W_i. The
/// unmatched minuses are exactly the excess a right-to-left scan
/// accumulates, so either there are fewer than k_i of them, or one of the
/// k_i leftmost unmatched minuses sits under the simple root (i,i+1).
/// Matched minuses do not count: they are never reached by a raising chain.
pub fn is_admissible(alpha: &KostantPartition, kvals: &[i64], n: usize) -> bool {
    for i in 1..n {
        let k = kvals[i - 1];
        debug_assert!(k > 0, "admissibility is an identity-vertex notion");
        let mut word = build_word(alpha, i, true);
        word.append(&build_word(alpha, i, false));
        let reduced = reduce_word(&word);
        let minuses = reduced.unmatched_minus_roots();
        if (minuses.len() as i64) < k {
            continue;
        }
        let simple = PositiveRoot::simple(i);
        if !minuses.iter().take(k as usize).any(|&r| r == simple) {
            return false;
        }
    }
    true
}

/// The admissibility route to the same polynomial: sum t^|a| over the
/// admissible partitions of lambda - mu. Cross-checked against the
/// alternating sum.
pub fn kf_admissible(
    lambda: &WeightVector,
    mu: &WeightVector,
    n: usize,
) -> Result<LaurentFreePoly> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.to_string()));
    }
    if !mu.is_dominant() {
        return Err(Error::NonDominant(mu.to_string()));
    }
    let kvals = k_values(&Permutation::identity(n), lambda);
    let gamma = lambda.sub(mu);
    let mut poly = LaurentFreePoly::zero();
    for part in crate::kostant::enumerate_partitions(&gamma, n) {
        if is_admissible(&part, &kvals, n) {
            poly.add_term(part.size() as usize, 1);
        }
    }
    let alternating = kf_alternating(lambda, mu, n)?;
    if poly != alternating {
        return Err(Error::Falsified(Falsification {
            instance: format!("{} n={n}", instance_label(lambda, mu)),
            kind: "admissible-vs-alternating".into(),
            witness: format!("admissible sum {poly} vs alternating sum {alternating}"),
        }));
    }
    Ok(poly)
}

/// DOT export with deterministic vertex order; psi partners are attached as
/// a vertex attribute.
pub fn to_dot(g: &PhiGraph) -> Result<String> {
    let map = psi_map(g)?;
    let mut out = String::from("digraph phi_graph {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (v, term) in g.vertices.iter().enumerate() {
        let tableau = render_tableau_notation(&term.part).replace('\n', "\\n");
        let body = if tableau.is_empty() {
            format!("w={}\\nsize={}", term.w, term.part.size())
        } else {
            format!("w={}\\n{}\\nsize={}", term.w, tableau, term.part.size())
        };
        out.push_str(&format!(
            "  v{v} [label=\"{body}\", psi=\"v{}\"];\n",
            map.image[v]
        ));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  v{} -> v{} [label=\"{}\"];\n",
            e.from, e.to, e.label
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    w: String,
    partition: Vec<(usize, usize, u32)>,
    size: u32,
    psi: usize,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    lambda: Vec<i64>,
    mu: Vec<i64>,
    vertices: Vec<JsonVertex>,
    edges: &'a [Edge],
}

/// JSON export mirroring the DOT content.
pub fn to_json(g: &PhiGraph) -> Result<String> {
    let map = psi_map(g)?;
    let vertices = g
        .vertices
        .iter()
        .enumerate()
        .map(|(id, term)| JsonVertex {
            id,
            w: term.w.one_line(),
            partition: term.part.parts().map(|(r, m)| (r.i, r.j, m)).collect(),
            size: term.part.size(),
            psi: map.image[id],
        })
        .collect();
    let lambda = g.lambda.coords().to_vec();
    let mu = g
        .mu
        .rep_with_sum(lambda.iter().sum())
        .unwrap_or_else(|| g.mu.coords().to_vec());
    let graph = JsonGraph {
        n: g.n,
        lambda,
        mu,
        vertices,
        edges: &g.edges,
    };
    Ok(serde_json::to_string_pretty(&graph).expect("graph serialization cannot fail"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::KostantPartition as KP;

    fn wv(coords: &[i64]) -> WeightVector {
        WeightVector::new(coords.to_vec())
    }

    fn figure_instance() -> PhiGraph {
        build_graph(&wv(&[2, 2, 0, 0]), &wv(&[1, 1, 1, 1]), 4).unwrap()
    }

    fn term(w: &Permutation, roots: &[(usize, usize)]) -> SignedTerm {
        SignedTerm {
            w: w.clone(),
            part: KP::from_roots(roots),
        }
    }

    #[test]
    fn k_values_examples() {
        let lambda = wv(&[2, 2, 0, 0]);
        assert_eq!(k_values(&Permutation::identity(4), &lambda), vec![1, 3, 1]);
        assert_eq!(
            k_values(&Permutation::simple(4, 1), &lambda),
            vec![-1, 4, 1]
        );
        assert_eq!(
            k_values(&Permutation::identity(4), &WeightVector::zero(4)),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn phi_examples() {
        let lambda = wv(&[2, 2, 0, 0]);
        let s1 = Permutation::simple(4, 1);
        let id = Permutation::identity(4);
        assert_eq!(
            phi(&term(&s1, &[(2, 3), (2, 4)]), 1, &lambda),
            Some(term(&id, &[(2, 3), (1, 4)]))
        );
        assert_eq!(
            phi(&term(&id, &[(1, 4), (2, 3)]), 1, &lambda),
            Some(term(&s1, &[(2, 3), (2, 4)]))
        );
        assert_eq!(phi(&term(&id, &[(1, 3), (2, 4)]), 2, &lambda), None);
    }

    #[test]
    fn figure_graph_shape() {
        let g = figure_instance();
        assert_eq!(g.vertices.len(), 10);
        assert_eq!(g.edges.len(), 6);
        let comps = components(&g).unwrap();
        assert_eq!(comps.len(), 5);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.vertices.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 4]);
        // every component has its identity source and labels occur there
        for c in &comps {
            assert!(g.vertices[c.source].w.is_identity());
        }
    }

    #[test]
    fn trivial_graph() {
        let lam = wv(&[2, 1, 0]);
        let g = build_graph(&lam, &lam, 3).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
        let comps = components(&g).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].blocks.is_empty());
    }

    #[test]
    fn edges_are_mutually_inverse_phi_chains() {
        let g = figure_instance();
        for e in &g.edges {
            let from = &g.vertices[e.from];
            let to = &g.vertices[e.to];
            assert_eq!(phi(from, e.label, &g.lambda).as_ref(), Some(to));
            assert_eq!(phi(to, e.label, &g.lambda).as_ref(), Some(from));
            assert!(k_values(&from.w, &g.lambda)[e.label - 1] < 0);
        }
    }

    #[test]
    fn psi_pairing_on_figure_instance() {
        let g = figure_instance();
        let id = Permutation::identity(4);
        let s1 = Permutation::simple(4, 1);
        let s3 = Permutation::simple(4, 3);
        let s3s1 = s3.compose(&s1);
        let pairs = [
            (term(&id, &[(1, 4), (2, 3)]), term(&s1, &[(2, 3), (2, 4)])),
            (term(&s3, &[(1, 3), (2, 3)]), term(&s3s1, &[(2, 3), (2, 3)])),
            (
                term(&id, &[(1, 3), (2, 3), (3, 4)]),
                term(&s1, &[(2, 3), (2, 3), (3, 4)]),
            ),
            (
                term(&id, &[(1, 2), (2, 3), (2, 4)]),
                term(&s3, &[(1, 2), (2, 3), (2, 3)]),
            ),
        ];
        for (a, b) in pairs {
            assert_eq!(psi(&a, &g).unwrap(), b);
            assert_eq!(psi(&b, &g).unwrap(), a);
        }
        let fixed1 = term(&id, &[(1, 3), (2, 4)]);
        let fixed2 = term(&id, &[(1, 2), (2, 3), (2, 3), (3, 4)]);
        assert_eq!(psi(&fixed1, &g).unwrap(), fixed1);
        assert_eq!(psi(&fixed2, &g).unwrap(), fixed2);
    }

    #[test]
    fn fixed_points_of_figure_instance() {
        let g = figure_instance();
        let fixed = fixed_points(&g).unwrap();
        let mut sizes: Vec<u32> = fixed.iter().map(|t| t.part.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        assert!(fixed.contains(&term(&Permutation::identity(4), &[(1, 3), (2, 4)])));
        assert!(fixed.contains(&term(
            &Permutation::identity(4),
            &[(1, 2), (2, 3), (2, 3), (3, 4)]
        )));
    }

    #[test]
    fn fixed_points_for_rank_three_instance() {
        let g = build_graph(&wv(&[2, 1, 0]), &wv(&[1, 1, 1]), 3).unwrap();
        let fixed = fixed_points(&g).unwrap();
        let mut sizes: Vec<u32> = fixed.iter().map(|t| t.part.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn singleton_components_match_fixed_points() {
        let g = figure_instance();
        let comps = components(&g).unwrap();
        let singletons = comps.iter().filter(|c| c.vertices.len() == 1).count();
        assert_eq!(singletons, fixed_points(&g).unwrap().len());
    }

    #[test]
    fn kf_positive_examples() {
        assert_eq!(
            kf_positive(&wv(&[2, 2, 0, 0]), &wv(&[1, 1, 1, 1]), 4).unwrap(),
            LaurentFreePoly::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        let lam = wv(&[3, 1, 0]);
        assert_eq!(kf_positive(&lam, &lam, 3).unwrap(), LaurentFreePoly::one());
        assert_eq!(
            kf_positive(&wv(&[2, 1, 0]), &wv(&[1, 1, 1]), 3).unwrap(),
            LaurentFreePoly::from_coeffs(vec![0, 1, 1])
        );
    }

    #[test]
    fn broken_hexagon_witness() {
        // at lambda = (4,0,0,0), mu = 0: k = (5,1,1) at the identity, and
        // (1,2)+(1,3)+(1,4) is broken by phi_3 after phi_2 but not the
        // other way around
        let lambda = wv(&[4, 0, 0, 0]);
        let kvals = k_values(&Permutation::identity(4), &lambda);
        assert_eq!(kvals, vec![5, 1, 1]);
        let alpha = KP::from_roots(&[(1, 2), (1, 3), (1, 4)]);
        assert!(is_broken_by_after(&alpha, 3, 2, &kvals));
        assert!(!is_broken_by_after(&alpha, 2, 3, &kvals));
        // the stated consequence: phi_3 after phi_2 dies, phi_2 after phi_3
        // survives, and both triple products die
        let v = SignedTerm {
            w: Permutation::identity(4),
            part: alpha,
        };
        let after_2 = phi(&v, 2, &lambda).unwrap();
        assert_eq!(phi(&after_2, 3, &lambda), None);
        let after_3 = phi(&v, 3, &lambda).unwrap();
        let both = phi(&after_3, 2, &lambda).unwrap();
        assert_eq!(phi(&both, 3, &lambda), None);
        assert_eq!(
            phi(&after_2, 3, &lambda).and_then(|t| phi(&t, 2, &lambda)),
            None
        );
    }

    #[test]
    fn broken_by_after_gates_on_preconditions() {
        // phi_2 dead at this vertex, so nothing is broken involving it
        let kvals = vec![1, 3, 1];
        let a = KP::from_roots(&[(1, 3), (2, 4)]);
        assert!(!is_broken_by_after(&a, 2, 1, &kvals));
        assert!(!is_broken_by_after(&a, 1, 2, &kvals));
        // negative k gates too
        assert!(!is_broken_by_after(&a, 1, 2, &[-1, 4, 1]));
    }

    #[test]
    fn admissible_examples() {
        let kvals = vec![1, 3, 1];
        assert!(is_admissible(&KP::from_roots(&[(1, 3), (2, 4)]), &kvals, 4));
        assert!(is_admissible(&KP::empty(), &kvals, 4));
        assert!(is_admissible(
            &KP::from_roots(&[(1, 2), (2, 3), (2, 3), (3, 4)]),
            &kvals,
            4
        ));
        // the other identity-vertices of the worked example are rejected
        assert!(!is_admissible(
            &KP::from_roots(&[(1, 4), (2, 3)]),
            &kvals,
            4
        ));
        assert!(!is_admissible(
            &KP::from_roots(&[(1, 2), (2, 3), (2, 4)]),
            &kvals,
            4
        ));
        assert!(!is_admissible(
            &KP::from_roots(&[(1, 3), (2, 3), (3, 4)]),
            &kvals,
            4
        ));
    }

    #[test]
    fn kf_admissible_examples() {
        assert_eq!(
            kf_admissible(&wv(&[2, 2, 0, 0]), &wv(&[1, 1, 1, 1]), 4).unwrap(),
            LaurentFreePoly::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        let lam = wv(&[2, 2, 0]);
        assert_eq!(
            kf_admissible(&lam, &lam, 3).unwrap(),
            LaurentFreePoly::one()
        );
        assert_eq!(
            kf_admissible(&wv(&[2, 1, 0]), &wv(&[1, 1, 1]), 3).unwrap(),
            LaurentFreePoly::from_coeffs(vec![0, 1, 1])
        );
    }

    #[test]
    fn dot_export_is_deterministic_and_complete() {
        let g = figure_instance();
        let dot = to_dot(&g).unwrap();
        assert_eq!(dot, to_dot(&g).unwrap());
        assert_eq!(dot.matches("label=\"w=").count(), 10);
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert!(dot.contains("psi="));
    }

    #[test]
    fn json_export_contains_instance() {
        let g = figure_instance();
        let json = to_json(&g).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["n"], 4);
        assert_eq!(value["vertices"].as_array().unwrap().len(), 10);
        assert_eq!(value["edges"].as_array().unwrap().len(), 6);
    }
}
