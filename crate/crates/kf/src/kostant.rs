//! Kostant partitions and the t-analogue partition function.
//!
//! A Kostant partition is a finite multiset of positive roots. Writing
//! `eval(a)` for the sum of its parts and `|a|` for the number of parts,
//! the t-analogue of the Kostant partition function is
//!
//! ```text
//! P_t(gamma) = sum over { a : eval(a) = gamma } of t^|a|
//! ```
//!
//! and Lusztig's t-analogue of weight multiplicity is the alternating sum
//!
//! ```text
//! K_{lambda,mu}(t) = sum over w in W of sgn(w) * P_t(w(lambda+rho) - (mu+rho)).
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::root_system::{
    enumerate_weyl, positive_roots, rho, Permutation, PositiveRoot, WeightVector,
};

/// A multiset of positive roots with nonnegative multiplicities.
///
/// Zero multiplicities are never stored, so derived equality is multiset
/// equality and the map order is the fixed total order on roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct KostantPartition {
    mult: BTreeMap<PositiveRoot, u32>,
}

impl KostantPartition {
    pub fn empty() -> Self {
        KostantPartition::default()
    }

    /// Convenience constructor from `(i, j)` pairs, one part each.
    pub fn from_roots(roots: &[(usize, usize)]) -> Self {
        let mut p = KostantPartition::empty();
        for &(i, j) in roots {
            p.add(PositiveRoot::new(i, j), 1);
        }
        p
    }

    pub fn add(&mut self, root: PositiveRoot, count: u32) {
        if count > 0 {
            *self.mult.entry(root).or_insert(0) += count;
        }
    }

    /// Removes one copy of `root`; panics if absent.
    pub fn remove_one(&mut self, root: PositiveRoot) {
        match self.mult.get_mut(&root) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                self.mult.remove(&root);
            }
            None => panic!("root {root} not present in partition"),
        }
    }

    /// Returns a copy with one part `from` replaced by `to`.
    pub fn with_replaced(&self, from: PositiveRoot, to: PositiveRoot) -> Self {
        let mut out = self.clone();
        out.remove_one(from);
        out.add(to, 1);
        out
    }

    /// Returns a copy with one extra part `root`.
    pub fn with_added(&self, root: PositiveRoot) -> Self {
        let mut out = self.clone();
        out.add(root, 1);
        out
    }

    /// Returns a copy with one part `root` removed.
    pub fn with_removed(&self, root: PositiveRoot) -> Self {
        let mut out = self.clone();
        out.remove_one(root);
        out
    }

    pub fn multiplicity(&self, root: PositiveRoot) -> u32 {
        self.mult.get(&root).copied().unwrap_or(0)
    }

    /// Parts with multiplicity, in the fixed root order.
    pub fn parts(&self) -> impl Iterator<Item = (PositiveRoot, u32)> + '_ {
        self.mult.iter().map(|(&r, &m)| (r, m))
    }

    /// Number of parts, counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.mult.values().sum()
    }

    /// The sum of the parts as an element of the root lattice in rank `n`.
    pub fn evaluate(&self, n: usize) -> WeightVector {
        let mut coords = vec![0i64; n];
        for (root, m) in self.parts() {
            assert!(root.j <= n, "root {root} exceeds rank {n}");
            coords[root.i - 1] += m as i64;
            coords[root.j - 1] -= m as i64;
        }
        WeightVector::new(coords)
    }
}

impl std::fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (k, (root, m)) in self.parts().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            if m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{root}")?;
        }
        Ok(())
    }
}

/// Tableau-style rendering: each part (i,j) becomes an entry j in row i.
/// Rows are listed only when nonempty; entries are weakly increasing.
pub fn render_tableau_notation(a: &KostantPartition) -> String {
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (root, m) in a.parts() {
        let row = rows.entry(root.i).or_default();
        for _ in 0..m {
            row.push(root.j);
        }
    }
    rows.iter()
        .map(|(i, entries)| {
            let line: Vec<String> = entries.iter().map(|j| j.to_string()).collect();
            format!("{i}: {}", line.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// A polynomial in t with integer coefficients, stored as ascending
/// coefficients with trailing zeros trimmed; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentFreePoly {
    coeffs: Vec<i64>,
}

impl LaurentFreePoly {
    pub fn zero() -> Self {
        LaurentFreePoly::default()
    }

    pub fn one() -> Self {
        LaurentFreePoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = LaurentFreePoly { coeffs };
        p.trim();
        p
    }

    /// t^degree.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = 1;
        LaurentFreePoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, degree: usize, coeff: i64) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += coeff;
        self.trim();
    }

    pub fn add_scaled(&mut self, other: &LaurentFreePoly, scale: i64) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k] += scale * c;
        }
        self.trim();
    }

    /// Evaluation at t = 1, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl std::fmt::Display for LaurentFreePoly {
    /// Descending powers, e.g. `t^4 + t^2`; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A term (w, a) of the signed sum S_{lambda,mu}, with eval(a) equal to
/// w(lambda+rho) - (mu+rho).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedTerm {
    pub w: Permutation,
    pub part: KostantPartition,
}

/// All Kostant partitions with evaluation `gamma`, in lexicographic order of
/// multiplicity sequences under the fixed root order. Empty when `gamma` is
/// not a nonnegative sum of positive roots.
pub fn enumerate_partitions(gamma: &WeightVector, n: usize) -> Vec<KostantPartition> {
    let roots = match positive_roots(n) {
        Ok(r) => r,
        Err(_) => return Vec::new(),
    };
    assert_eq!(gamma.rank(), n, "weight rank must equal n");
    let Some(coords) = gamma.root_coords() else {
        return Vec::new();
    };
    // prefix sums c_1..c_{n-1}; gamma = sum c_k alpha_k needs all c_k >= 0
    let mut prefix: Vec<i64> = Vec::with_capacity(n - 1);
    let mut acc = 0;
    for c in &coords[..n - 1] {
        acc += c;
        prefix.push(acc);
    }
    let mut out = Vec::new();
    let mut current = KostantPartition::empty();
    descend(&roots, 0, &mut prefix, &mut current, &mut out);
    out
}

/// Recursive descent over the fixed root order. A root (i,j) contributes 1
/// to each prefix sum c_i..c_{j-1}, so its multiplicity is bounded by the
/// minimum remaining budget on that window; coordinates to the left of the
/// current root can no longer be covered and must already be exhausted.
fn descend(
    roots: &[PositiveRoot],
    idx: usize,
    prefix: &mut [i64],
    current: &mut KostantPartition,
    out: &mut Vec<KostantPartition>,
) {
    if prefix.iter().any(|&c| c < 0) {
        return;
    }
    if idx == roots.len() {
        if prefix.iter().all(|&c| c == 0) {
            out.push(current.clone());
        }
        return;
    }
    let root = roots[idx];
    if prefix[..root.i - 1].iter().any(|&c| c != 0) {
        return;
    }
    let window = (root.i - 1)..(root.j - 1);
    let bound = prefix[window.clone()].iter().min().copied().unwrap_or(0);
    if bound < 0 {
        return;
    }
    for m in 0..=bound {
        if m > 0 {
            for k in window.clone() {
                prefix[k] -= 1;
            }
            current.add(root, 1);
        }
        descend(roots, idx + 1, prefix, current, out);
    }
    if bound > 0 {
        for k in window.clone() {
            prefix[k] += bound;
        }
        for _ in 0..bound {
            current.remove_one(root);
        }
    }
}

/// Every Kostant partition over rank `n` with at most `max_parts` parts,
/// in lexicographic order of multiplicity sequences.
pub fn enumerate_bounded(n: usize, max_parts: u32) -> Vec<KostantPartition> {
    let roots = match positive_roots(n) {
        Ok(r) => r,
        Err(_) => return Vec::new(),
    };
    fn rec(
        roots: &[PositiveRoot],
        idx: usize,
        budget: u32,
        cur: &mut KostantPartition,
        out: &mut Vec<KostantPartition>,
    ) {
        if idx == roots.len() {
            out.push(cur.clone());
            return;
        }
        rec(roots, idx + 1, budget, cur, out);
        for m in 1..=budget {
            cur.add(roots[idx], 1);
            rec(roots, idx + 1, budget - m, cur, out);
        }
        for _ in 0..cur.multiplicity(roots[idx]) {
            cur.remove_one(roots[idx]);
        }
    }
    let mut out = Vec::new();
    let mut cur = KostantPartition::empty();
    rec(&roots, 0, max_parts, &mut cur, &mut out);
    out
}

/// P_t(gamma): the coefficient of t^l counts partitions of `gamma` into l
/// positive roots. Zero polynomial outside the nonnegative root cone.
pub fn p_t(gamma: &WeightVector, n: usize) -> LaurentFreePoly {
    let mut poly = LaurentFreePoly::zero();
    for part in enumerate_partitions(gamma, n) {
        poly.add_term(part.size() as usize, 1);
    }
    poly
}

/// The alternating sum over the Weyl group defining K_{lambda,mu}(t).
pub fn kf_alternating(
    lambda: &WeightVector,
    mu: &WeightVector,
    n: usize,
) -> Result<LaurentFreePoly> {
    check_instance(lambda, mu, n)?;
    let rho = rho(n)?;
    let lr = lambda.add(&rho);
    let mr = mu.add(&rho);
    let mut poly = LaurentFreePoly::zero();
    for w in enumerate_weyl(n) {
        let gamma = w.act(&lr).sub(&mr);
        let term = p_t(&gamma, n);
        poly.add_scaled(&term, w.sign());
    }
    Ok(poly)
}

/// S_{lambda,mu}: every pair (w, a) with eval(a) = w(lambda+rho) - (mu+rho),
/// grouped by w in the fixed Weyl enumeration order.
pub fn build_s(lambda: &WeightVector, mu: &WeightVector, n: usize) -> Result<Vec<SignedTerm>> {
    check_instance(lambda, mu, n)?;
    let rho = rho(n)?;
    let lr = lambda.add(&rho);
    let mr = mu.add(&rho);
    let mut out = Vec::new();
    for w in enumerate_weyl(n) {
        let gamma = w.act(&lr).sub(&mr);
        for part in enumerate_partitions(&gamma, n) {
            out.push(SignedTerm { w: w.clone(), part });
        }
    }
    Ok(out)
}

fn check_instance(lambda: &WeightVector, mu: &WeightVector, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if lambda.rank() != n || mu.rank() != n {
        return Err(Error::LengthMismatch(format!(
            "lambda rank {} and mu rank {} must equal n={n}",
            lambda.rank(),
            mu.rank()
        )));
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(coords: &[i64]) -> WeightVector {
        WeightVector::new(coords.to_vec())
    }

    #[test]
    fn evaluate_examples() {
        let a = KostantPartition::from_roots(&[(1, 3), (2, 4)]);
        assert_eq!(a.evaluate(4), wv(&[1, 1, -1, -1]));
        assert_eq!(KostantPartition::empty().evaluate(4), WeightVector::zero(4));
        let mut two_alpha2 = KostantPartition::empty();
        two_alpha2.add(PositiveRoot::new(2, 3), 2);
        assert_eq!(two_alpha2.evaluate(4), wv(&[0, 2, -2, 0]));
    }

    #[test]
    fn size_examples() {
        assert_eq!(KostantPartition::from_roots(&[(1, 3), (2, 4)]).size(), 2);
        assert_eq!(KostantPartition::empty().size(), 0);
        let a = KostantPartition::from_roots(&[(1, 2), (2, 3), (2, 3), (3, 4)]);
        assert_eq!(a.size(), 4);
    }

    #[test]
    fn enumerate_partitions_examples() {
        // alpha_1 + alpha_2 in rank 3
        let gamma = wv(&[1, 0, -1]);
        let parts = enumerate_partitions(&gamma, 3);
        assert_eq!(
            parts,
            vec![
                KostantPartition::from_roots(&[(1, 3)]),
                KostantPartition::from_roots(&[(1, 2), (2, 3)]),
            ]
        );
        assert_eq!(
            enumerate_partitions(&WeightVector::zero(3), 3),
            vec![KostantPartition::empty()]
        );
        let gamma = wv(&[2, 2, 0, 0]).sub(&wv(&[1, 1, 1, 1]));
        assert_eq!(enumerate_partitions(&gamma, 4).len(), 5);
    }

    #[test]
    fn enumerate_partitions_rejects_non_cone_weights() {
        // not in the root lattice
        assert!(enumerate_partitions(&wv(&[1, 0, 0]), 3).is_empty());
        // in the root lattice but a prefix sum is negative
        assert!(enumerate_partitions(&wv(&[-1, 1, 0]), 3).is_empty());
    }

    #[test]
    fn every_enumerated_partition_evaluates_back() {
        for coords in [[1i64, 1, -1, -1], [2, 0, -1, -1], [3, 1, -2, -2]] {
            let gamma = wv(&coords);
            for part in enumerate_partitions(&gamma, 4) {
                assert_eq!(part.evaluate(4), gamma);
            }
        }
    }

    #[test]
    fn p_t_examples() {
        assert_eq!(
            p_t(&wv(&[1, 0, -1]), 3),
            LaurentFreePoly::from_coeffs(vec![0, 1, 1])
        );
        assert_eq!(p_t(&WeightVector::zero(3), 3), LaurentFreePoly::one());
        assert_eq!(
            p_t(&wv(&[1, -1, 0]), 3),
            LaurentFreePoly::from_coeffs(vec![0, 1])
        );
    }

    #[test]
    fn p_t_at_one_counts_partitions() {
        for coords in [[1i64, 1, -1, -1], [2, 1, -1, -2], [0, 2, -2, 0]] {
            let gamma = wv(&coords);
            assert_eq!(
                p_t(&gamma, 4).eval_at_one(),
                enumerate_partitions(&gamma, 4).len() as i64
            );
        }
    }

    #[test]
    fn kf_alternating_worked_example() {
        let poly = kf_alternating(&wv(&[2, 2, 0, 0]), &wv(&[1, 1, 1, 1]), 4).unwrap();
        assert_eq!(poly, LaurentFreePoly::from_coeffs(vec![0, 0, 1, 0, 1]));
        assert_eq!(poly.to_string(), "t^4 + t^2");
    }

    #[test]
    fn kf_alternating_lambda_equals_mu() {
        let lam = wv(&[3, 1, 0]);
        assert_eq!(
            kf_alternating(&lam, &lam, 3).unwrap(),
            LaurentFreePoly::one()
        );
    }

    #[test]
    fn kf_alternating_rank_three() {
        let poly = kf_alternating(&wv(&[2, 1, 0]), &wv(&[1, 1, 1]), 3).unwrap();
        assert_eq!(poly, LaurentFreePoly::from_coeffs(vec![0, 1, 1]));
    }

    #[test]
    fn kf_alternating_rejects_non_dominant_lambda() {
        assert!(matches!(
            kf_alternating(&wv(&[1, 2, 0]), &wv(&[1, 1, 1]), 3),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn build_s_worked_example_multiset() {
        let s = build_s(&wv(&[2, 2, 0, 0]), &wv(&[1, 1, 1, 1]), 4).unwrap();
        assert_eq!(s.len(), 10);
        let id = Permutation::identity(4);
        let s1 = Permutation::simple(4, 1);
        let s3 = Permutation::simple(4, 3);
        let s3s1 = s3.compose(&s1);
        let count = |w: &Permutation| s.iter().filter(|t| &t.w == w).count();
        assert_eq!(count(&id), 5);
        assert_eq!(count(&s1), 2);
        assert_eq!(count(&s3), 2);
        assert_eq!(count(&s3s1), 1);
        assert!(s.contains(&SignedTerm {
            w: id.clone(),
            part: KostantPartition::from_roots(&[(1, 4), (2, 3)]),
        }));
    }

    #[test]
    fn build_s_lambda_equals_mu() {
        let lam = wv(&[2, 1, 0]);
        let s = build_s(&lam, &lam, 3).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].w.is_identity());
        assert_eq!(s[0].part, KostantPartition::empty());
    }

    #[test]
    fn build_s_signed_sum_matches_alternating() {
        let lambda = wv(&[2, 1, 0]);
        let mu = wv(&[1, 1, 1]);
        let s = build_s(&lambda, &mu, 3).unwrap();
        let mut poly = LaurentFreePoly::zero();
        for term in &s {
            poly.add_term(term.part.size() as usize, term.w.sign());
        }
        assert_eq!(poly, kf_alternating(&lambda, &mu, 3).unwrap());
    }

    #[test]
    fn tableau_notation_examples() {
        let a = KostantPartition::from_roots(&[(1, 3), (2, 4)]);
        assert_eq!(render_tableau_notation(&a), "1: 3\n2: 4");
        assert_eq!(render_tableau_notation(&KostantPartition::empty()), "");
        let b = KostantPartition::from_roots(&[(1, 2), (2, 3), (2, 3), (3, 4)]);
        assert_eq!(render_tableau_notation(&b), "1: 2\n2: 3 3\n3: 4");
    }

    #[test]
    fn poly_display() {
        assert_eq!(LaurentFreePoly::zero().to_string(), "0");
        assert_eq!(LaurentFreePoly::one().to_string(), "1");
        assert_eq!(LaurentFreePoly::from_coeffs(vec![0, 1]).to_string(), "t");
        assert_eq!(
            LaurentFreePoly::from_coeffs(vec![2, 0, 3]).to_string(),
            "3t^2 + 2"
        );
        assert_eq!(
            LaurentFreePoly::from_coeffs(vec![0, -1, 1]).to_string(),
            "t^2 - t"
        );
    }
}
