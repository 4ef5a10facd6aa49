//! Independent ground truth: semistandard Young tableaux and the charge
//! statistic, giving the classical positive formula
//!
//! ```text
//! K_{lambda,mu}(t) = sum over SSYT T of shape lambda, content mu of t^charge(T).
//! ```
//!
//! Charge is computed on the reading word (rows bottom to top, each left to
//! right): repeatedly extract a standard subword by scanning leftward
//! cyclically for 1, 2, 3, ...; within a subword the letter 1 has index 0
//! and the index grows by one exactly when the next letter sits to the
//! right of the previous one. Charge is the total of all indices.

use crate::error::{Error, Result};
use crate::kostant::LaurentFreePoly;

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase; `rows[0]` is the longest (top) row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Content vector: entry k-1 counts the letters k.
    pub fn content(&self) -> Vec<usize> {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; max];
        for row in &self.rows {
            for &v in row {
                counts[v - 1] += 1;
            }
        }
        counts
    }

    /// Rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .rev()
            .flat_map(|r| r.iter().copied())
            .collect()
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn is_partition(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// All SSYT of shape `lambda` (a partition) and content `mu`, in the order
/// produced by filling cells row-major with ascending values.
pub fn enumerate_ssyt(lambda: &[usize], mu: &[usize]) -> Result<Vec<Tableau>> {
    let lambda: Vec<usize> = lambda.iter().copied().take_while(|&p| p > 0).collect();
    let total: usize = lambda.iter().sum();
    let content_total: usize = mu.iter().sum();
    if total != content_total {
        return Err(Error::SizeMismatch(total as i64, content_total as i64));
    }
    if !is_partition(&lambda) {
        return Err(Error::NonPartitionContent(format!("{lambda:?} as a shape")));
    }
    let mut remaining: Vec<usize> = mu.to_vec();
    let mut rows: Vec<Vec<usize>> = lambda.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    fill(&lambda, mu.len(), &mut remaining, &mut rows, 0, 0, &mut out);
    Ok(out)
}

fn fill(
    shape: &[usize],
    num_values: usize,
    remaining: &mut [usize],
    rows: &mut Vec<Vec<usize>>,
    r: usize,
    c: usize,
    out: &mut Vec<Tableau>,
) {
    if r == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (next_r, next_c) = if c + 1 == shape[r] {
        (r + 1, 0)
    } else {
        (r, c + 1)
    };
    let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    let lo = min_left.max(min_above).max(r + 1);
    for v in lo..=num_values {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r].push(v);
        fill(shape, num_values, remaining, rows, next_r, next_c, out);
        rows[r].pop();
        remaining[v - 1] += 1;
    }
}

/// Charge of a word with partition content.
///
/// Internally the statistic is computed twice, from the wrap count of the
/// cyclic extraction scan and from the letter positions of the extracted
/// subword, and the two are asserted equal.
pub fn charge_word(word: &[usize]) -> u64 {
    let len = word.len();
    let mut removed = vec![false; len];
    let mut remaining = len;
    let mut total: u64 = 0;
    while remaining > 0 {
        // rightmost remaining 1 starts a standard subword
        let start = (0..len)
            .rev()
            .find(|&p| !removed[p] && word[p] == 1)
            .expect("partition content guarantees a letter 1");
        let mut positions = vec![start];
        let mut cur = start;
        let mut val = 2;
        let mut index: u64 = 0;
        let mut scan_charge: u64 = 0;
        loop {
            // scan leftward from cur, wrapping to the right end
            let mut found = None;
            for p in (0..cur).rev() {
                if !removed[p] && word[p] == val {
                    found = Some((p, false));
                    break;
                }
            }
            if found.is_none() {
                for p in ((cur + 1)..len).rev() {
                    if !removed[p] && word[p] == val {
                        found = Some((p, true));
                        break;
                    }
                }
            }
            let Some((p, wrapped)) = found else {
                break;
            };
            if wrapped {
                index += 1;
            }
            scan_charge += index;
            positions.push(p);
            cur = p;
            val += 1;
        }
        // positional route: the index grows when letter r+1 is right of letter r
        let mut pos_charge: u64 = 0;
        let mut idx: u64 = 0;
        for pair in positions.windows(2) {
            if pair[1] > pair[0] {
                idx += 1;
            }
            pos_charge += idx;
        }
        assert_eq!(scan_charge, pos_charge, "charge bookkeeping mismatch");
        total += pos_charge;
        for p in positions {
            removed[p] = true;
            remaining -= 1;
        }
    }
    total
}

/// Charge of a tableau; the content must be a partition.
pub fn charge(t: &Tableau) -> Result<u64> {
    let content = t.content();
    if !is_partition(&content) {
        return Err(Error::NonPartitionContent(format!("{content:?}")));
    }
    Ok(charge_word(&t.reading_word()))
}

/// The charge generating function over SSYT(lambda, mu).
pub fn kf_charge(lambda: &[usize], mu: &[usize]) -> Result<LaurentFreePoly> {
    let trimmed: Vec<usize> = mu.iter().copied().take_while(|&p| p > 0).collect();
    if !is_partition(&trimmed) || mu[trimmed.len()..].iter().any(|&p| p > 0) {
        return Err(Error::NonPartitionContent(format!("{mu:?}")));
    }
    let mut poly = LaurentFreePoly::zero();
    for t in enumerate_ssyt(lambda, mu)? {
        poly.add_term(charge(&t)? as usize, 1);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&[2, 1], &[1, 1, 1]).unwrap().len(), 2);
        assert_eq!(enumerate_ssyt(&[3], &[3]).unwrap().len(), 1);
        assert_eq!(enumerate_ssyt(&[2, 2], &[1, 1, 1, 1]).unwrap().len(), 2);
    }

    #[test]
    fn ssyt_rejects_size_mismatch() {
        assert!(matches!(
            enumerate_ssyt(&[2, 1], &[1, 1]),
            Err(Error::SizeMismatch(3, 2))
        ));
    }

    #[test]
    fn ssyt_are_semistandard() {
        for t in enumerate_ssyt(&[3, 2, 1], &[2, 2, 1, 1]).unwrap() {
            for row in t.rows() {
                assert!(row.windows(2).all(|w| w[0] <= w[1]));
            }
            for r in 1..t.rows().len() {
                for c in 0..t.rows()[r].len() {
                    assert!(t.rows()[r][c] > t.rows()[r - 1][c]);
                }
            }
            assert_eq!(t.content(), vec![2, 2, 1, 1]);
        }
    }

    #[test]
    fn charge_single_row_is_zero() {
        let t = &enumerate_ssyt(&[4], &[4]).unwrap()[0];
        assert_eq!(charge(t).unwrap(), 0);
    }

    #[test]
    fn charge_standard_examples() {
        // shape (2,1), content (1,1,1): charges {1, 2}
        let mut charges: Vec<u64> = enumerate_ssyt(&[2, 1], &[1, 1, 1])
            .unwrap()
            .iter()
            .map(|t| charge(t).unwrap())
            .collect();
        charges.sort_unstable();
        assert_eq!(charges, vec![1, 2]);
        // shape (2,2), content (1,1,1,1): charges {2, 4}
        let mut charges: Vec<u64> = enumerate_ssyt(&[2, 2], &[1, 1, 1, 1])
            .unwrap()
            .iter()
            .map(|t| charge(t).unwrap())
            .collect();
        charges.sort_unstable();
        assert_eq!(charges, vec![2, 4]);
    }

    #[test]
    fn charge_with_repeated_content() {
        // the unique tableau of shape = content has charge 0
        let t = &enumerate_ssyt(&[2, 1], &[2, 1]).unwrap()[0];
        assert_eq!(charge(t).unwrap(), 0);
        // shape (3,1), content (2,1,1): charges {1, 2}
        let mut charges: Vec<u64> = enumerate_ssyt(&[3, 1], &[2, 1, 1])
            .unwrap()
            .iter()
            .map(|t| charge(t).unwrap())
            .collect();
        charges.sort_unstable();
        assert_eq!(charges, vec![1, 2]);
    }

    #[test]
    fn kf_charge_examples() {
        assert_eq!(
            kf_charge(&[2, 2], &[1, 1, 1, 1]).unwrap(),
            LaurentFreePoly::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        assert_eq!(kf_charge(&[3, 1], &[3, 1]).unwrap(), LaurentFreePoly::one());
        assert_eq!(
            kf_charge(&[2, 1], &[1, 1, 1]).unwrap(),
            LaurentFreePoly::from_coeffs(vec![0, 1, 1])
        );
    }

    #[test]
    fn kf_charge_counts_tableaux_at_one() {
        for (lambda, mu) in [
            (vec![2usize, 1], vec![1usize, 1, 1]),
            (vec![3, 2], vec![2, 1, 1, 1]),
            (vec![2, 2, 1], vec![1, 1, 1, 1, 1]),
        ] {
            assert_eq!(
                kf_charge(&lambda, &mu).unwrap().eval_at_one(),
                enumerate_ssyt(&lambda, &mu).unwrap().len() as i64
            );
        }
    }

    #[test]
    fn charge_invariant_under_content_padding() {
        let a = kf_charge(&[2, 1], &[1, 1, 1]).unwrap();
        let b = kf_charge(&[2, 1], &[1, 1, 1, 0]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn charge_rejects_non_partition_content() {
        let t = Tableau {
            rows: vec![vec![1, 2], vec![2]],
        };
        assert!(matches!(charge(&t), Err(Error::NonPartitionContent(_))));
        assert!(kf_charge(&[2, 1], &[1, 0, 2]).is_err());
    }

    #[test]
    fn charge_matches_alternating_sum_small() {
        use crate::kostant::kf_alternating;
        use crate::root_system::WeightVector;
        // shape (2,1), content (2,1) padded to rank 3
        let lambda = WeightVector::new(vec![2, 1, 0]);
        let mu = WeightVector::new(vec![2, 1, 0]);
        assert_eq!(
            kf_alternating(&lambda, &mu, 3).unwrap(),
            kf_charge(&[2, 1], &[2, 1]).unwrap()
        );
        let lambda = WeightVector::new(vec![3, 1, 0]);
        let mu = WeightVector::new(vec![2, 1, 1]);
        assert_eq!(
            kf_alternating(&lambda, &mu, 3).unwrap(),
            kf_charge(&[3, 1], &[2, 1, 1]).unwrap()
        );
    }
}
