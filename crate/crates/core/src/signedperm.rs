//! Signed permutations: the hyperoctahedral group `B_n`, which contains
//! `S_n` (type `A_{n-1}`) as the unsigned elements and `D_n` as the
//! elements with an even number of sign changes.
//!
//! Elements are stored in window form: entry `i - 1` of the window is
//! `w(i)`, a signed letter in `±1..=±n`. Composition acts on the left, so
//! `(g * h)(i) = g(h(i))` with `g(-j) = -g(j)`.
//!
//! In cycle notation the sign written over a letter applies to the image of
//! that letter: `(-1,+3,+8)` sends `1 -> -3`, `3 -> 8` and `8 -> 1`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Box<[i8]>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&n), "rank {n} out of range");
        SignedPermutation {
            window: (1..=n as i8).collect(),
        }
    }

    /// Builds an element from its window `[w(1), ..., w(n)]`.
    pub fn from_window(window: &[i32]) -> Result<Self> {
        let n = window.len();
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::RankOutOfRange(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::NotAPermutation(format!(
                    "letter {v} out of range for rank {n}"
                )));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::NotAPermutation(format!("letter {a} repeated")));
            }
        }
        Ok(SignedPermutation {
            window: window.iter().map(|&v| v as i8).collect(),
        })
    }

    /// The single sign change `(-i)`.
    pub fn sign_change(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut w = Self::identity(n);
        w.window[i - 1] = -(i as i8);
        w
    }

    /// The transposition `(+i +j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && i <= n && j >= 1 && j <= n && i != j);
        let mut w = Self::identity(n);
        w.window.swap(i - 1, j - 1);
        w
    }

    /// The element negating every letter (the longest element of `B_n`).
    pub fn all_negative(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i8).map(|v| -v).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i8] {
        &self.window
    }

    /// `w(i)` for a signed letter `i`.
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self * other`, i.e. `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        let window = other
            .window
            .iter()
            .map(|&v| {
                let x = self.window[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -x
                } else {
                    x
                }
            })
            .collect();
        SignedPermutation { window }
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0i8; self.rank()].into_boxed_slice();
        for (i, &v) in self.window.iter().enumerate() {
            let letter = (i + 1) as i8;
            window[v.unsigned_abs() as usize - 1] = if v < 0 { -letter } else { letter };
        }
        SignedPermutation { window }
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        &(g * self) * &g.inverse()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v as usize == i + 1 && v > 0)
    }

    /// True for the identity as well as genuine involutions.
    pub fn squares_to_identity(&self) -> bool {
        (1..=self.rank() as i32).all(|i| self.apply(self.apply(i)) == i)
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Number of negative window entries mod 2; zero iff the element lies in `D_n`.
    pub fn parity_negative_entries(&self) -> u8 {
        (self.negative_count() % 2) as u8
    }

    pub fn in_type_d(&self) -> bool {
        self.parity_negative_entries() == 0
    }

    /// The underlying unsigned permutation `w̄`.
    pub fn underlying(&self) -> Self {
        SignedPermutation {
            window: self.window.iter().map(|v| v.abs()).collect(),
        }
    }

    pub fn order(&self) -> usize {
        let id = Self::identity(self.rank());
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = self * &x;
            k += 1;
        }
        k
    }

    /// Disjoint signed cycles, each starting at its smallest letter, ordered by
    /// that letter. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<SignedCycle> {
        let n = self.rank();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut entries = Vec::new();
            let mut a = start;
            loop {
                seen[a] = true;
                let img = self.window[a - 1];
                let letter = a as i8;
                entries.push(if img < 0 { -letter } else { letter });
                a = img.unsigned_abs() as usize;
                if a == start {
                    break;
                }
            }
            out.push(SignedCycle { entries });
        }
        out
    }

    pub fn from_cycles(n: usize, cycles: &[SignedCycle]) -> Result<Self> {
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::RankOutOfRange(n));
        }
        let mut window: Vec<i8> = (1..=n as i8).collect();
        let mut seen = vec![false; n + 1];
        for c in cycles {
            let k = c.entries.len();
            for (idx, &e) in c.entries.iter().enumerate() {
                let a = e.unsigned_abs() as usize;
                if a > n {
                    return Err(Error::NotAPermutation(format!(
                        "letter {a} out of range for rank {n}"
                    )));
                }
                if std::mem::replace(&mut seen[a], true) {
                    return Err(Error::NotAPermutation(format!("letter {a} repeated")));
                }
                let next = c.entries[(idx + 1) % k].abs();
                window[a - 1] = if e < 0 { -next } else { next };
            }
        }
        Ok(SignedPermutation {
            window: window.into_boxed_slice(),
        })
    }

    pub fn cycle_type(&self) -> SignedCycleType {
        let mut neg = Vec::new();
        let mut pos = Vec::new();
        for c in self.cycles() {
            if c.is_negative() {
                neg.push(c.len());
            } else {
                pos.push(c.len());
            }
        }
        SignedCycleType::new(neg, pos)
    }

    /// Unsigned cycle type as a partition in weakly decreasing order.
    pub fn unsigned_cycle_type(&self) -> Vec<usize> {
        let mut parts = self.cycles().iter().map(SignedCycle::len).collect_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Parses either window form `[s1,...,sn]` or cycle form `(a,b,..)(c,..)`.
    ///
    /// Cycle form needs the rank when letters are omitted as fixed points; with
    /// `rank == None` the largest letter mentioned is used.
    pub fn parse(text: &str, rank: Option<usize>) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let inner = t
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::parse(text, "unterminated window"))?;
            let vals = split_letters(inner)
                .map(|tok| parse_letter(text, tok))
                .collect::<Result<Vec<i32>>>()?;
            if let Some(n) = rank {
                if n != vals.len() {
                    return Err(Error::RankMismatch {
                        left: vals.len(),
                        right: n,
                    });
                }
            }
            return Self::from_window(&vals).map_err(|e| Error::parse(text, e.to_string()));
        }
        let cycles = parse_cycles(text)?;
        let max_letter = cycles
            .iter()
            .flat_map(|c| c.entries.iter())
            .map(|e| e.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let n = match rank {
            Some(n) => n,
            None if max_letter == 0 => return Err(Error::parse(text, "rank required for identity")),
            None => max_letter,
        };
        if max_letter > n {
            return Err(Error::parse(
                text,
                format!("letter {max_letter} exceeds rank {n}"),
            ));
        }
        Self::from_cycles(n, &cycles).map_err(|e| Error::parse(text, e.to_string()))
    }

    pub fn to_window_string(&self) -> String {
        format!("[{}]", self.window.iter().join(","))
    }

    /// Every element of `B_n`, permutations in lexicographic order, each with
    /// all `2^n` sign patterns.
    pub fn all(n: usize) -> impl Iterator<Item = SignedPermutation> {
        assert!((1..=12).contains(&n), "exhaustive enumeration of B_{n} refused");
        (1..=n as i8).permutations(n).flat_map(move |perm| {
            (0u32..1 << n).map(move |mask| {
                let window = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                SignedPermutation { window }
            })
        })
    }

    /// Every element of `S_n` as unsigned signed permutations.
    pub fn all_unsigned(n: usize) -> impl Iterator<Item = SignedPermutation> {
        assert!((1..=12).contains(&n), "exhaustive enumeration of S_{n} refused");
        (1..=n as i8).permutations(n).map(|perm| SignedPermutation {
            window: perm.into_boxed_slice(),
        })
    }
}

impl Mul for &SignedPermutation {
    type Output = SignedPermutation;

    /// Panics on a rank mismatch; use [`SignedPermutation::compose`] for the
    /// fallible form.
    fn mul(self, rhs: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for SignedPermutation {
    /// Signed-cycle style, omitting positive fixed points; the identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() == 1 && !c.is_negative() {
                continue;
            }
            any = true;
            write!(f, "{c}")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.to_window_string(), self)
    }
}

/// A signed cycle `(s_1 a_1, ..., s_k a_k)` meaning `w(a_i) = s_i * a_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedCycle {
    entries: Vec<i8>,
}

impl SignedCycle {
    pub fn new(entries: &[i32]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotAPermutation("empty cycle".into()));
        }
        let abs = entries.iter().map(|e| e.unsigned_abs()).collect_vec();
        if abs.iter().any(|&a| a == 0 || a as usize > MAX_RANK) {
            return Err(Error::NotAPermutation("letter out of range".into()));
        }
        if !abs.iter().all_unique() {
            return Err(Error::NotAPermutation("letter repeated within a cycle".into()));
        }
        Ok(SignedCycle {
            entries: entries.iter().map(|&e| e as i8).collect(),
        })
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.unsigned_abs() as usize)
    }

    /// A cycle is negative when it carries an odd number of minus signs.
    pub fn is_negative(&self) -> bool {
        self.entries.iter().filter(|&&e| e < 0).count() % 2 == 1
    }
}

impl fmt::Display for SignedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e:+}")?;
        }
        f.write_str(")")
    }
}

/// Conjugacy-class label of `B_n`: lengths of the negative and of the positive
/// cycles, each weakly increasing. Fixed points count as positive 1-cycles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedCycleType {
    neg: Vec<usize>,
    pos: Vec<usize>,
}

impl SignedCycleType {
    /// Sorts both part lists; zero parts are dropped.
    pub fn new(mut neg: Vec<usize>, mut pos: Vec<usize>) -> Self {
        neg.retain(|&p| p > 0);
        pos.retain(|&p| p > 0);
        neg.sort_unstable();
        pos.sort_unstable();
        SignedCycleType { neg, pos }
    }

    pub fn negative_parts(&self) -> &[usize] {
        &self.neg
    }

    pub fn positive_parts(&self) -> &[usize] {
        &self.pos
    }

    pub fn rank(&self) -> usize {
        self.neg.iter().sum::<usize>() + self.pos.iter().sum::<usize>()
    }

    /// Number of negative cycles.
    pub fn num_negative(&self) -> usize {
        self.neg.len()
    }

    /// Total number of cycles.
    pub fn num_cycles(&self) -> usize {
        self.neg.len() + self.pos.len()
    }

    /// The class lies in `D_n` iff it has an even number of negative cycles.
    pub fn in_type_d(&self) -> bool {
        self.neg.len() % 2 == 0
    }

    /// Classes of `B_n` that split into two `D_n` classes: only positive cycles,
    /// all of even length.
    pub fn splits_in_type_d(&self) -> bool {
        self.neg.is_empty() && self.pos.iter().all(|p| p % 2 == 0)
    }

    /// The compact form `2,4;3`.
    pub fn compact(&self) -> String {
        format!("{};{}", self.neg.iter().join(","), self.pos.iter().join(","))
    }

    /// Every signed cycle type of rank `n`, in a fixed deterministic order.
    pub fn all(n: usize) -> Vec<SignedCycleType> {
        let mut out = Vec::new();
        for k in 0..=n {
            for neg in integer_partitions(k) {
                for pos in integer_partitions(n - k) {
                    out.push(SignedCycleType::new(neg.clone(), pos));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl FromStr for SignedCycleType {
    type Err = Error;

    /// Accepts `neg:2,4|pos:3`, `2,4;3` and `(2,4;3)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        let (neg, pos) = if t.contains('|') || t.starts_with("neg:") || t.starts_with("pos:") {
            let mut neg = "";
            let mut pos = "";
            for field in t.split('|') {
                let field = field.trim();
                if let Some(v) = field.strip_prefix("neg:") {
                    neg = v;
                } else if let Some(v) = field.strip_prefix("pos:") {
                    pos = v;
                } else if !field.is_empty() {
                    return Err(Error::parse(s, format!("unexpected field {field:?}")));
                }
            }
            (neg, pos)
        } else {
            t.split_once(';')
                .ok_or_else(|| Error::parse(s, "expected `neg;pos`"))?
        };
        let parts = |list: &str| -> Result<Vec<usize>> {
            list.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| match p.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(Error::parse(s, format!("bad part {p:?}"))),
                })
                .collect()
        };
        let ct = SignedCycleType::new(parts(neg)?, parts(pos)?);
        if ct.rank() == 0 || ct.rank() > MAX_RANK {
            return Err(Error::parse(s, "rank out of range"));
        }
        Ok(ct)
    }
}

/// An ordered composition of `n` into positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::NotAPermutation(format!(
                "composition {parts:?} must have positive parts"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `offsets[i] = parts[0] + ... + parts[i-1]`; the first letter of block
    /// `i` is `offsets[i] + 1`.
    pub fn prefix_offsets(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                let start = *acc;
                *acc += p;
                Some(start)
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// All partitions of `n` as weakly decreasing part lists (reverse lexicographic).
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn split_letters(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

fn parse_letter(input: &str, tok: &str) -> Result<i32> {
    let (neg, digits) = if let Some(d) = tok.strip_prefix('-') {
        (true, d)
    } else if let Some(d) = tok.strip_prefix('\u{2212}') {
        (true, d)
    } else if let Some(d) = tok.strip_prefix('+') {
        (false, d)
    } else {
        (false, tok)
    };
    let v: i32 = digits
        .parse()
        .map_err(|_| Error::parse(input, format!("bad letter {tok:?}")))?;
    if v <= 0 || v as usize > MAX_RANK {
        return Err(Error::parse(input, format!("letter {tok:?} out of range")));
    }
    Ok(if neg { -v } else { v })
}

fn parse_cycles(text: &str) -> Result<Vec<SignedCycle>> {
    let mut rest = text.trim();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(text, "expected `(`"))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::parse(text, "unterminated cycle"))?;
        let entries = split_letters(&body[..close])
            .map(|tok| parse_letter(text, tok))
            .collect::<Result<Vec<i32>>>()?;
        if !entries.is_empty() {
            cycles.push(SignedCycle::new(&entries).map_err(|e| Error::parse(text, e.to_string()))?);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(text, Some(n)).unwrap()
    }

    #[test]
    fn cycle_sign_convention() {
        let w = sp("(-1,+3,+8)", 8);
        assert_eq!(w.apply(1), -3);
        assert_eq!(w.apply(3), 8);
        assert_eq!(w.apply(8), 1);
        assert!(w.cycles()[0].is_negative());
    }

    #[test]
    fn compose_reproduces_factorisation() {
        let lhs = &sp("(1,3,8)", 8) * &SignedPermutation::sign_change(8, 1);
        assert_eq!(lhs, sp("(-1,+3,+8)", 8));
        assert_eq!(lhs.underlying(), sp("(1,3,8)", 8));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let w = sp("(-1,+3,+8)", 8);
        let id = SignedPermutation::identity(8);
        assert_eq!(id.compose(&w).unwrap(), w);
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(
            id.compose(&SignedPermutation::identity(3)),
            Err(Error::RankMismatch { left: 8, right: 3 })
        );
    }

    #[test]
    fn cycles_of_identity_and_window() {
        let id = SignedPermutation::identity(3);
        let cs = id.cycles();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.len() == 1 && !c.is_negative()));

        let w = SignedPermutation::from_window(&[-2, -3, 1]).unwrap();
        let cs = w.cycles();
        assert_eq!(cs, vec![SignedCycle::new(&[-1, -2, 3]).unwrap()]);
        assert_eq!(SignedPermutation::from_cycles(3, &cs).unwrap(), w);
        assert_eq!(w.to_string(), "(-1,-2,+3)");
    }

    #[test]
    fn cycle_type_examples() {
        let w = sp("(+1 +2)(+3 -4 +5)(-6 +7 +8)(+9)", 9);
        assert_eq!(w.cycle_type(), SignedCycleType::new(vec![3, 3], vec![1, 2]));
        assert_eq!(
            SignedPermutation::identity(4).cycle_type(),
            SignedCycleType::new(vec![], vec![1, 1, 1, 1])
        );
        let w = sp("(-1,+7,-2,-9)(-3,+4,-6)(+5,-8)", 9);
        assert_eq!(w.cycle_type().compact(), "2,4;3");
    }

    #[test]
    fn parity() {
        assert_eq!(SignedPermutation::identity(5).parity_negative_entries(), 0);
        assert_eq!(SignedPermutation::sign_change(5, 5).parity_negative_entries(), 1);
    }

    #[test]
    fn parse_print_round_trip() {
        let text = "(-1,+7,-2,-9)(-3,+4,-6)(+5,-8)";
        let w = sp(text, 9);
        assert_eq!(w.to_string(), text);
        assert_eq!(sp("(-1,+7,-2,-9)(-3,4,-6)(5,-8)", 9), w);

        let w = SignedPermutation::parse("[\u{2212}2,\u{2212}3,1]", None).unwrap();
        assert_eq!(w.window(), &[-2, -3, 1]);
        assert_eq!(SignedPermutation::parse("()", Some(4)).unwrap(), SignedPermutation::identity(4));
        assert_eq!(SignedPermutation::identity(4).to_string(), "()");
        assert_eq!(sp("(-6)", 6).window(), &[1, 2, 3, 4, 5, -6]);
    }

    #[test]
    fn parse_errors() {
        assert!(SignedPermutation::parse("(1,2", Some(3)).is_err());
        assert!(SignedPermutation::parse("(1,2)(2,3)", Some(3)).is_err());
        assert!(SignedPermutation::parse("(1,4)", Some(3)).is_err());
        assert!(SignedPermutation::parse("(1,x)", Some(3)).is_err());
        assert!(SignedPermutation::parse("[1,1,2]", None).is_err());
        assert!(SignedPermutation::parse("[1,2,4]", None).is_err());
        assert!(SignedPermutation::parse("[1,2]", Some(3)).is_err());
        assert!(SignedPermutation::parse("()", None).is_err());
    }

    #[test]
    fn print_parse_exhaustive_b3() {
        for w in SignedPermutation::all(3) {
            assert_eq!(SignedPermutation::parse(&w.to_string(), Some(3)).unwrap(), w);
            assert_eq!(SignedPermutation::parse(&w.to_window_string(), None).unwrap(), w);
        }
    }

    #[test]
    fn cycle_type_parsing() {
        let ct: SignedCycleType = "neg:2,4|pos:3".parse().unwrap();
        assert_eq!(ct, "2,4;3".parse().unwrap());
        assert_eq!(ct, "(4,2;3)".parse().unwrap());
        assert_eq!(ct.rank(), 9);
        assert_eq!(ct.to_string(), "(2,4;3)");
        let id: SignedCycleType = ";1,1".parse().unwrap();
        assert_eq!(id.num_negative(), 0);
        assert!("2,x;3".parse::<SignedCycleType>().is_err());
        assert!("23".parse::<SignedCycleType>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(SignedPermutation::all(3).count(), 48);
        assert_eq!(SignedPermutation::all_unsigned(4).count(), 24);
        assert_eq!(integer_partitions(5).len(), 7);
        // number of bipartitions of 4
        assert_eq!(SignedCycleType::all(4).len(), 20);
    }

    #[test]
    fn recompose_and_cycle_type_exhaustive() {
        for n in 1..=4 {
            for w in SignedPermutation::all(n) {
                assert_eq!(SignedPermutation::from_cycles(n, &w.cycles()).unwrap(), w);
                assert_eq!(w.inverse().inverse(), w);
            }
        }
    }

    #[test]
    fn cycle_type_is_a_class_invariant_b4() {
        let all: Vec<_> = SignedPermutation::all(4).collect();
        for h in &all {
            let ct = h.cycle_type();
            for g in &all {
                assert_eq!(h.conjugate_by(g).cycle_type(), ct);
            }
        }
    }

    #[test]
    fn parity_is_a_homomorphism_b3() {
        let all: Vec<_> = SignedPermutation::all(3).collect();
        for g in &all {
            for h in &all {
                assert_eq!(
                    (g * h).parity_negative_entries(),
                    g.parity_negative_entries() ^ h.parity_negative_entries()
                );
            }
        }
    }
}
