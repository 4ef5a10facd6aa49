//! Type A_{n-1} root-system primitives.
//!
//! Weights live in the quotient lattice Z^n / Z(1,...,1); the positive roots
//! are e_i - e_j for i < j, written as pairs (i,j); the Weyl group is the
//! symmetric group S_n acting by permuting coordinates.

use crate::error::{Error, Result};

/// A positive root e_i - e_j, stored as the pair (i, j) with 1 <= i < j.
///
/// The derived ordering (lexicographic in (i, j)) is the fixed total order
/// on the positive roots used everywhere enumeration order matters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "invalid positive root ({i},{j})");
        PositiveRoot { i, j }
    }

    /// The simple root alpha_i = (i, i+1).
    pub fn simple(i: usize) -> Self {
        PositiveRoot::new(i, i + 1)
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }
}

impl std::fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// All positive roots of A_{n-1} in the fixed total order, n(n-1)/2 of them.
pub fn positive_roots(n: usize) -> Result<Vec<PositiveRoot>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let mut roots = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            roots.push(PositiveRoot::new(i, j));
        }
    }
    Ok(roots)
}

/// An element of the weight lattice Z^n / Z(1,...,1).
///
/// Coordinates are kept in the canonical form with last coordinate 0, so the
/// derived equality and hashing respect the quotient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeightVector {
    coords: Vec<i64>,
}

impl WeightVector {
    /// Canonicalizes by subtracting the last coordinate from every entry.
    pub fn new(mut coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "weight vector must be nonempty");
        let last = *coords.last().unwrap();
        if last != 0 {
            for c in &mut coords {
                *c -= last;
            }
        }
        WeightVector { coords }
    }

    pub fn zero(n: usize) -> Self {
        WeightVector { coords: vec![0; n] }
    }

    /// Parses comma-separated integers, e.g. `"2,2,0,0"`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|p| p.trim().parse::<i64>()).collect();
        match coords {
            Ok(c) if !c.is_empty() => Ok(WeightVector::new(c)),
            _ => Err(Error::ParseWeight(s.to_string())),
        }
    }

    /// Canonical coordinates (last entry 0).
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `<v, alpha_i^vee> = v_i - v_{i+1}` for a simple index `1 <= i <= n-1`.
    /// Well defined on the quotient since constant shifts cancel.
    pub fn coroot_pairing(&self, i: usize) -> i64 {
        assert!(
            1 <= i && i < self.coords.len(),
            "simple index {i} out of range for rank {}",
            self.coords.len()
        );
        self.coords[i - 1] - self.coords[i]
    }

    /// Weakly decreasing coordinates; shift-invariant.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in weight sum");
        WeightVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(
            self.rank(),
            other.rank(),
            "rank mismatch in weight difference"
        );
        WeightVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// The representative with coordinate sum 0, if the class has one
    /// (i.e. the class lies in the root lattice).
    pub fn root_coords(&self) -> Option<Vec<i64>> {
        self.rep_with_sum(0)
    }

    /// The representative of this class with the given coordinate sum, when
    /// one exists.
    pub fn rep_with_sum(&self, target: i64) -> Option<Vec<i64>> {
        let n = self.coords.len() as i64;
        let diff = target - self.coords.iter().sum::<i64>();
        if diff.rem_euclid(n) != 0 {
            return None;
        }
        let shift = diff / n;
        Some(self.coords.iter().map(|c| c + shift).collect())
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// rho = (n-1, n-2, ..., 1, 0).
pub fn rho(n: usize) -> Result<WeightVector> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    Ok(WeightVector::new(
        (0..n).map(|k| (n - 1 - k) as i64).collect(),
    ))
}

/// A permutation of {1,...,n}, stored 0-based: `images[p] = w(p)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The simple reflection s_i (1-based i), exchanging i and i+1.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n, "simple index {i} out of range for S_{n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Builds from 1-based one-line notation.
    pub fn from_one_line(line: &[usize]) -> Self {
        let n = line.len();
        let mut seen = vec![false; n];
        for &v in line {
            assert!(
                1 <= v && v <= n && !seen[v - 1],
                "not a permutation: {line:?}"
            );
            seen[v - 1] = true;
        }
        Permutation {
            images: line.iter().map(|v| v - 1).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// Composition `self * other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// Left multiplication by the simple reflection: s_i * w.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        assert!(1 <= i && i < self.degree());
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i - 1 {
                    i
                } else if v == i {
                    i - 1
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for p in 0..n {
            for q in (p + 1)..n {
                if self.images[p] > self.images[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// (-1)^(inversion count).
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Simple indices i with l(s_i w) < l(w), i.e. the value i occurs to the
    /// right of the value i+1 in one-line notation.
    pub fn left_descents(&self) -> Vec<usize> {
        let n = self.degree();
        let mut position = vec![0usize; n];
        for (p, &v) in self.images.iter().enumerate() {
            position[v] = p;
        }
        (1..n).filter(|&i| position[i - 1] > position[i]).collect()
    }

    /// Coordinate permutation: `result[w(p)] = v[p]`, so s_i swaps
    /// coordinates i and i+1.
    pub fn act(&self, v: &WeightVector) -> WeightVector {
        assert_eq!(
            self.degree(),
            v.rank(),
            "permutation degree must match weight rank"
        );
        let mut out = vec![0i64; v.rank()];
        for (p, &w_p) in self.images.iter().enumerate() {
            out[w_p] = v.coords()[p];
        }
        WeightVector::new(out)
    }

    /// One-line notation as a compact string, e.g. "2134".
    pub fn one_line(&self) -> String {
        if self.degree() <= 9 {
            self.images.iter().map(|v| (v + 1).to_string()).collect()
        } else {
            self.images
                .iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

/// `weyl_act` with an explicit length check, for callers with unvalidated input.
pub fn weyl_act(w: &Permutation, v: &WeightVector) -> Result<WeightVector> {
    if w.degree() != v.rank() {
        return Err(Error::LengthMismatch(format!(
            "permutation degree {} vs weight rank {}",
            w.degree(),
            v.rank()
        )));
    }
    Ok(w.act(v))
}

/// All n! permutations in lexicographic one-line order, identity first.
pub fn enumerate_weyl(n: usize) -> Vec<Permutation> {
    let mut line: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation {
            images: line.clone(),
        });
        if !next_permutation(&mut line) {
            break;
        }
    }
    out
}

fn next_permutation(line: &mut [usize]) -> bool {
    let n = line.len();
    if n < 2 {
        return false;
    }
    let mut k = n - 1;
    while k > 0 && line[k - 1] >= line[k] {
        k -= 1;
    }
    if k == 0 {
        return false;
    }
    let pivot = k - 1;
    let mut swap = n - 1;
    while line[swap] <= line[pivot] {
        swap -= 1;
    }
    line.swap(pivot, swap);
    line[k..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_roots_small_ranks() {
        let r3 = positive_roots(3).unwrap();
        assert_eq!(
            r3,
            vec![
                PositiveRoot::new(1, 2),
                PositiveRoot::new(1, 3),
                PositiveRoot::new(2, 3)
            ]
        );
        let r4 = positive_roots(4).unwrap();
        assert_eq!(r4.len(), 6);
        assert_eq!(r4[2], PositiveRoot::new(1, 4));
        assert_eq!(positive_roots(2).unwrap(), vec![PositiveRoot::new(1, 2)]);
        assert!(matches!(positive_roots(1), Err(Error::InvalidRank(1))));
    }

    #[test]
    fn positive_roots_are_strictly_increasing() {
        for n in 2..=5 {
            let roots = positive_roots(n).unwrap();
            assert_eq!(roots.len(), n * (n - 1) / 2);
            assert!(roots.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(4).unwrap(), WeightVector::new(vec![3, 2, 1, 0]));
        assert_eq!(rho(2).unwrap(), WeightVector::new(vec![1, 0]));
        assert_eq!(rho(3).unwrap(), WeightVector::new(vec![2, 1, 0]));
    }

    #[test]
    fn coroot_pairing_examples() {
        let v = WeightVector::new(vec![5, 4, 1, 0]);
        assert_eq!(v.coroot_pairing(2), 3);
        let c = WeightVector::new(vec![1, 1, 1, 1]);
        for i in 1..=3 {
            assert_eq!(c.coroot_pairing(i), 0);
        }
        assert_eq!(rho(4).unwrap().coroot_pairing(1), 1);
    }

    #[test]
    #[should_panic]
    fn coroot_pairing_rejects_out_of_range() {
        WeightVector::new(vec![1, 0]).coroot_pairing(2);
    }

    #[test]
    fn weight_equality_is_mod_shift() {
        assert_eq!(
            WeightVector::new(vec![1, 1, -1, -1]),
            WeightVector::new(vec![2, 2, 0, 0])
        );
        assert_ne!(
            WeightVector::new(vec![1, 0, 0, 0]),
            WeightVector::new(vec![0, 1, 0, 0])
        );
    }

    #[test]
    fn weyl_act_examples() {
        let v = WeightVector::new(vec![5, 4, 1, 0]);
        let s1 = Permutation::simple(4, 1);
        assert_eq!(s1.act(&v), WeightVector::new(vec![4, 5, 1, 0]));
        let id = Permutation::identity(4);
        assert_eq!(id.act(&v), v);
        let s3 = Permutation::simple(4, 3);
        let s3s1 = s3.compose(&s1);
        assert_eq!(s3s1.act(&v), WeightVector::new(vec![4, 5, 0, 1]));
        // the moved weight differs from 1 + rho by exactly 2*alpha_2
        let diff = s3s1
            .act(&v)
            .sub(&WeightVector::new(vec![1, 1, 1, 1]))
            .sub(&rho(4).unwrap());
        assert_eq!(diff, WeightVector::new(vec![0, 2, -2, 0]));
    }

    #[test]
    fn weyl_act_checks_lengths() {
        let v = WeightVector::new(vec![1, 0]);
        let w = Permutation::identity(3);
        assert!(matches!(weyl_act(&w, &v), Err(Error::LengthMismatch(_))));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::simple(4, 1).sign(), -1);
        let s3s1 = Permutation::simple(4, 3).compose(&Permutation::simple(4, 1));
        assert_eq!(s3s1.sign(), 1);
    }

    #[test]
    fn enumerate_weyl_counts_and_order() {
        assert_eq!(enumerate_weyl(2).len(), 2);
        assert_eq!(enumerate_weyl(3).len(), 6);
        let w4 = enumerate_weyl(4);
        assert_eq!(w4.len(), 24);
        assert!(w4[0].is_identity());
        // lexicographic one-line order, all distinct
        for pair in w4.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn action_respects_composition_and_sign_is_multiplicative() {
        for n in 2..=4 {
            let v = WeightVector::new((0..n).map(|k| (2 * (n - k)) as i64).collect());
            let all = enumerate_weyl(n);
            for u in &all {
                for w in &all {
                    let uw = u.compose(w);
                    assert_eq!(uw.act(&v), u.act(&w.act(&v)));
                    assert_eq!(uw.sign(), u.sign() * w.sign());
                }
            }
        }
    }

    #[test]
    fn simple_reflection_negates_pairing() {
        for n in 2..=4 {
            let v = WeightVector::new((0..n).map(|k| ((n - k) * (n - k)) as i64).collect());
            for i in 1..n {
                let si = Permutation::simple(n, i);
                assert_eq!(si.act(&v).coroot_pairing(i), -v.coroot_pairing(i));
            }
        }
    }

    #[test]
    fn parse_weights() {
        assert_eq!(
            WeightVector::parse("2,2,0,0").unwrap(),
            WeightVector::new(vec![2, 2, 0, 0])
        );
        assert_eq!(
            WeightVector::parse(" 1, 1 ,1,1").unwrap(),
            WeightVector::zero(4)
        );
        assert!(WeightVector::parse("1,a,0").is_err());
        assert!(WeightVector::parse("").is_err());
    }
}
