//! Crystal operators on Kostant partitions.
//!
//! Two sign words are attached to a partition `a` and a simple index `i`:
//!
//! - unstarred `W_i`: order the parts (a,b) by a decreasing, then b
//!   increasing; write `+` under each (h,i) and `-` under each (h,i+1).
//! - starred `W_i*`: order the parts by b increasing, then a decreasing;
//!   write `+` under each (i+1,j) and `-` under each (i,j).
//!
//! Reduction repeatedly cancels a `-` appearing directly left of a `+`
//! (through previously cancelled symbols); what survives always reads
//! `(+)^a (-)^b`. The operators f~, e~ act on the extremal unmatched
//! symbols of the unstarred word, and f~*, e~* on those of the starred one.
//!
//! The size-preserving hybrids choose between the two families by comparing
//! b* with a (the shape of the reduced concatenation `W* W`):
//!
//! ```text
//! f_i = f~ if b* < a;   f~* if b* >= a and a* > 0;   0 otherwise
//! e_i = e~ if b* <= a and b > 0;   e~* if b* > a;    0 otherwise,
//!       except that acting on the simple root (i,i+1) is forbidden
//! ê_i = e_i without the simple-root guard (it may remove (i,i+1))
//! ```
//!
//! A forbidden simple-root action is reported as [`EResult::ZeroSimple`];
//! this "pseudo-zero" outcome is what the Stembridge-exception bookkeeping
//! is built on.

use crate::kostant::KostantPartition;
use crate::root_system::PositiveRoot;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// A sign word: symbols attached to roots, with matching marks from reduction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignWord {
    entries: Vec<(Sign, PositiveRoot)>,
    matched: Vec<bool>,
}

impl SignWord {
    pub fn entries(&self) -> &[(Sign, PositiveRoot)] {
        &self.entries
    }

    pub fn is_matched(&self, idx: usize) -> bool {
        self.matched[idx]
    }

    /// Count of unmatched plus symbols.
    pub fn unmatched_plus(&self) -> u32 {
        self.count_unmatched(Sign::Plus)
    }

    /// Count of unmatched minus symbols.
    pub fn unmatched_minus(&self) -> u32 {
        self.count_unmatched(Sign::Minus)
    }

    fn count_unmatched(&self, sign: Sign) -> u32 {
        self.entries
            .iter()
            .zip(&self.matched)
            .filter(|((s, _), &m)| !m && *s == sign)
            .count() as u32
    }

    pub fn rightmost_unmatched_plus(&self) -> Option<PositiveRoot> {
        self.entries
            .iter()
            .zip(&self.matched)
            .rev()
            .find(|((s, _), &m)| !m && *s == Sign::Plus)
            .map(|((_, r), _)| *r)
    }

    pub fn leftmost_unmatched_minus(&self) -> Option<PositiveRoot> {
        self.entries
            .iter()
            .zip(&self.matched)
            .find(|((s, _), &m)| !m && *s == Sign::Minus)
            .map(|((_, r), _)| *r)
    }

    /// Roots under the unmatched minuses, left to right.
    pub fn unmatched_minus_roots(&self) -> Vec<PositiveRoot> {
        self.entries
            .iter()
            .zip(&self.matched)
            .filter(|((s, _), &m)| !m && *s == Sign::Minus)
            .map(|((_, r), _)| *r)
            .collect()
    }

    /// Appends another word's symbols (both unreduced), e.g. to form W* W.
    pub fn append(&mut self, other: &SignWord) {
        self.entries.extend_from_slice(&other.entries);
        self.matched.extend_from_slice(&other.matched);
    }

    /// Diagnostic dump: `±(i,j)` tokens, matched symbols in brackets.
    pub fn dump(&self) -> String {
        self.entries
            .iter()
            .zip(&self.matched)
            .map(|((s, r), &m)| {
                let sign = match s {
                    Sign::Plus => '+',
                    Sign::Minus => '-',
                };
                if m {
                    format!("[{sign}{r}]")
                } else {
                    format!("{sign}{r}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Builds the unreduced word of Definition-style ordering rules above.
/// A part of multiplicity m contributes m adjacent symbols.
pub fn build_word(a: &KostantPartition, i: usize, starred: bool) -> SignWord {
    assert!(i >= 1, "simple index must be at least 1");
    let mut parts: Vec<(PositiveRoot, u32)> = a.parts().collect();
    if starred {
        parts.sort_by_key(|(r, _)| (r.j, std::cmp::Reverse(r.i)));
    } else {
        parts.sort_by_key(|(r, _)| (std::cmp::Reverse(r.i), r.j));
    }
    let mut entries = Vec::new();
    for (root, m) in parts {
        let sign = if starred {
            if root.i == i + 1 {
                Some(Sign::Plus)
            } else if root.i == i {
                Some(Sign::Minus)
            } else {
                None
            }
        } else if root.j == i {
            Some(Sign::Plus)
        } else if root.j == i + 1 {
            Some(Sign::Minus)
        } else {
            None
        };
        if let Some(s) = sign {
            for _ in 0..m {
                entries.push((s, root));
            }
        }
    }
    let matched = vec![false; entries.len()];
    SignWord { entries, matched }
}

/// Cancels `-+` pairs (nearest unmatched `-` to the left of each `+`).
/// Idempotent; the unmatched subsequence always has shape `(+)^a (-)^b`.
pub fn reduce_word(word: &SignWord) -> SignWord {
    let mut out = word.clone();
    let mut stack: Vec<usize> = Vec::new();
    for idx in 0..out.entries.len() {
        if out.matched[idx] {
            continue;
        }
        match out.entries[idx].0 {
            Sign::Minus => stack.push(idx),
            Sign::Plus => {
                if let Some(m) = stack.pop() {
                    out.matched[m] = true;
                    out.matched[idx] = true;
                }
            }
        }
    }
    out
}

/// The string statistics of a partition at index i: unmatched counts of the
/// two reduced words, and (u, v) for the reduced concatenation `W* W`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StringData {
    pub a: u32,
    pub b: u32,
    pub a_star: u32,
    pub b_star: u32,
    pub u: u32,
    pub v: u32,
}

/// (u, v) comes from cancelling the middle of `(+)^a* (-)^b* (+)^a (-)^b`:
/// if b* < a then u = a* + a - b*, v = b; otherwise u = a*, v = b* - a + b.
pub fn string_data(a: &KostantPartition, i: usize) -> StringData {
    let plain = reduce_word(&build_word(a, i, false));
    let starred = reduce_word(&build_word(a, i, true));
    string_data_from(&plain, &starred)
}

fn string_data_from(plain: &SignWord, starred: &SignWord) -> StringData {
    let a = plain.unmatched_plus();
    let b = plain.unmatched_minus();
    let a_star = starred.unmatched_plus();
    let b_star = starred.unmatched_minus();
    let (u, v) = if b_star < a {
        (a_star + a - b_star, b)
    } else {
        (a_star, b_star - a + b)
    };
    StringData {
        a,
        b,
        a_star,
        b_star,
        u,
        v,
    }
}

/// The four basic operators acting on a single word family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TildeOp {
    F,
    E,
    FStar,
    EStar,
}

/// The raw operators: f-variants always act (adding the simple root when no
/// unmatched `+` is available); e-variants return `None` when no unmatched
/// `-` exists, and remove the simple root when the leftmost `-` sits under it.
pub fn apply_tilde(a: &KostantPartition, i: usize, op: TildeOp) -> Option<KostantPartition> {
    let simple = PositiveRoot::simple(i);
    match op {
        TildeOp::F => {
            let word = reduce_word(&build_word(a, i, false));
            match word.rightmost_unmatched_plus() {
                Some(root) => Some(a.with_replaced(root, PositiveRoot::new(root.i, i + 1))),
                None => Some(a.with_added(simple)),
            }
        }
        TildeOp::E => {
            let word = reduce_word(&build_word(a, i, false));
            word.leftmost_unmatched_minus().map(|root| {
                if root == simple {
                    a.with_removed(simple)
                } else {
                    a.with_replaced(root, PositiveRoot::new(root.i, i))
                }
            })
        }
        TildeOp::FStar => {
            let word = reduce_word(&build_word(a, i, true));
            match word.rightmost_unmatched_plus() {
                Some(root) => Some(a.with_replaced(root, PositiveRoot::new(i, root.j))),
                None => Some(a.with_added(simple)),
            }
        }
        TildeOp::EStar => {
            let word = reduce_word(&build_word(a, i, true));
            word.leftmost_unmatched_minus().map(|root| {
                if root == simple {
                    a.with_removed(simple)
                } else {
                    a.with_replaced(root, PositiveRoot::new(i + 1, root.j))
                }
            })
        }
    }
}

/// Outcome of the guarded raising operator e_i.
///
/// `ZeroSimple` marks the pseudo-zero case: e_i would have to act on the
/// simple root (i,i+1), so e_i is zero while ê_i is not.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EResult {
    NewPartition(KostantPartition),
    ZeroSimple,
    Zero,
}

impl EResult {
    pub fn into_option(self) -> Option<KostantPartition> {
        match self {
            EResult::NewPartition(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_new(&self) -> Option<&KostantPartition> {
        match self {
            EResult::NewPartition(p) => Some(p),
            _ => None,
        }
    }
}

/// The size-preserving lowering operator f_i.
pub fn f_op(a: &KostantPartition, i: usize) -> Option<KostantPartition> {
    let sd = string_data(a, i);
    if sd.b_star < sd.a {
        apply_tilde(a, i, TildeOp::F)
    } else if sd.a_star > 0 {
        apply_tilde(a, i, TildeOp::FStar)
    } else {
        None
    }
}

/// The size-preserving raising operator e_i, with the simple-root guard
/// made explicit in the return type.
pub fn e_op(a: &KostantPartition, i: usize) -> EResult {
    let plain = reduce_word(&build_word(a, i, false));
    let starred = reduce_word(&build_word(a, i, true));
    let sd = string_data_from(&plain, &starred);
    let simple = PositiveRoot::simple(i);
    if sd.b_star <= sd.a && sd.b > 0 {
        let root = plain
            .leftmost_unmatched_minus()
            .expect("b > 0 guarantees an unmatched minus");
        if root == simple {
            EResult::ZeroSimple
        } else {
            EResult::NewPartition(a.with_replaced(root, PositiveRoot::new(root.i, i)))
        }
    } else if sd.b_star > sd.a {
        let root = starred
            .leftmost_unmatched_minus()
            .expect("b* > a >= 0 guarantees an unmatched minus");
        if root == simple {
            EResult::ZeroSimple
        } else {
            EResult::NewPartition(a.with_replaced(root, PositiveRoot::new(i + 1, root.j)))
        }
    } else {
        EResult::Zero
    }
}

/// ê_i: agrees with e_i except that it removes the simple root in the
/// guarded case, shrinking the partition by one part.
pub fn e_hat(a: &KostantPartition, i: usize) -> Option<KostantPartition> {
    match e_op(a, i) {
        EResult::NewPartition(p) => Some(p),
        EResult::ZeroSimple => Some(a.with_removed(PositiveRoot::simple(i))),
        EResult::Zero => None,
    }
}

/// (varphi_i, epsilon_i, epsilon-hat_i): maximal iteration counts of f_i,
/// e_i (counting only genuine new partitions) and ê_i.
pub fn string_lengths(a: &KostantPartition, i: usize) -> (u32, u32, u32) {
    let mut varphi = 0;
    let mut cur = a.clone();
    while let Some(next) = f_op(&cur, i) {
        varphi += 1;
        cur = next;
    }
    let mut epsilon = 0;
    let mut cur = a.clone();
    while let EResult::NewPartition(next) = e_op(&cur, i) {
        epsilon += 1;
        cur = next;
    }
    let mut epsilon_hat = 0;
    let mut cur = a.clone();
    while let Some(next) = e_hat(&cur, i) {
        epsilon_hat += 1;
        cur = next;
    }
    (varphi, epsilon, epsilon_hat)
}

pub fn varphi(a: &KostantPartition, i: usize) -> u32 {
    string_lengths(a, i).0
}

pub fn epsilon(a: &KostantPartition, i: usize) -> u32 {
    string_lengths(a, i).1
}

pub fn epsilon_hat(a: &KostantPartition, i: usize) -> u32 {
    string_lengths(a, i).2
}

/// wt_i = u_i - v_i = <wt(a), alpha_i^vee> where wt(a) = -eval(a).
pub fn wt_i(a: &KostantPartition, i: usize) -> i64 {
    let sd = string_data(a, i);
    sd.u as i64 - sd.v as i64
}

/// e_i^k with every step a genuine new partition; `None` as soon as a step
/// returns zero or pseudo-zero.
pub fn e_power(a: &KostantPartition, i: usize, k: u32) -> Option<KostantPartition> {
    let mut cur = a.clone();
    for _ in 0..k {
        match e_op(&cur, i) {
            EResult::NewPartition(next) => cur = next,
            _ => return None,
        }
    }
    Some(cur)
}

/// f_i^k, `None` as soon as a step is zero.
pub fn f_power(a: &KostantPartition, i: usize, k: u32) -> Option<KostantPartition> {
    let mut cur = a.clone();
    for _ in 0..k {
        cur = f_op(&cur, i)?;
    }
    Some(cur)
}
