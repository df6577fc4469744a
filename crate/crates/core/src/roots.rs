//! Root systems of types `A_{n-1}`, `B_n` and `D_n` in the coordinates
//! `e_1, ..., e_n`, inversion sets, and the length functions built on them.
//!
//! Positive roots are indexed densely over the `B_n` system: the short roots
//! `e_1..e_n` first, then `e_i - e_j` for `i < j` in lexicographic order, then
//! `e_i + e_j` likewise. Type `A_{n-1}` uses only the `e_i - e_j` block and
//! type `D_n` the two long blocks, so every inversion set is a bit set over the
//! same `n^2` positions.

use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::signedperm::SignedPermutation;

/// Ambient classical type. Rank conventions follow the signed-permutation
/// engine: `A` with `n` letters is `S_n`, i.e. `A_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalType {
    A,
    B,
    D,
}

impl ClassicalType {
    pub fn letter(self) -> char {
        match self {
            ClassicalType::A => 'A',
            ClassicalType::B => 'B',
            ClassicalType::D => 'D',
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A root `±e_i` (short) or `±e_i ± e_j` (long, `i < j`), with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Short { i: u8, sign: i8 },
    Long { i: u8, j: u8, sign_i: i8, sign_j: i8 },
}

impl Root {
    pub fn short(i: usize) -> Root {
        Root::Short { i: i as u8, sign: 1 }
    }

    /// `e_i - e_j` for `i < j`.
    pub fn difference(i: usize, j: usize) -> Root {
        assert!(i < j);
        Root::Long {
            i: i as u8,
            j: j as u8,
            sign_i: 1,
            sign_j: -1,
        }
    }

    /// `e_i + e_j` for `i < j`.
    pub fn sum(i: usize, j: usize) -> Root {
        assert!(i < j);
        Root::Long {
            i: i as u8,
            j: j as u8,
            sign_i: 1,
            sign_j: 1,
        }
    }

    fn long_from_terms(a: (u8, i8), b: (u8, i8)) -> Root {
        let ((i, sign_i), (j, sign_j)) = if a.0 < b.0 { (a, b) } else { (b, a) };
        Root::Long {
            i,
            j,
            sign_i,
            sign_j,
        }
    }

    /// A root is positive when its coefficient on the smallest index present is `+1`.
    pub fn is_positive(self) -> bool {
        match self {
            Root::Short { sign, .. } => sign > 0,
            Root::Long { sign_i, .. } => sign_i > 0,
        }
    }

    /// `(i, j)` for a long root, `(i, i)` for a short one.
    pub fn letters(self) -> (usize, usize) {
        match self {
            Root::Short { i, .. } => (i as usize, i as usize),
            Root::Long { i, j, .. } => (i as usize, j as usize),
        }
    }

    pub fn is_long(self) -> bool {
        matches!(self, Root::Long { .. })
    }

    pub fn neg(self) -> Root {
        match self {
            Root::Short { i, sign } => Root::Short { i, sign: -sign },
            Root::Long {
                i,
                j,
                sign_i,
                sign_j,
            } => Root::Long {
                i,
                j,
                sign_i: -sign_i,
                sign_j: -sign_j,
            },
        }
    }

    /// The positive root among `±self`.
    pub fn abs(self) -> Root {
        if self.is_positive() {
            self
        } else {
            self.neg()
        }
    }

    /// Linear action `w(e_i) = sign(w(i)) e_{|w(i)|}`.
    pub fn act(self, w: &SignedPermutation) -> Root {
        let image = |i: u8, s: i8| -> (u8, i8) {
            let v = w.apply(i as i32);
            (v.unsigned_abs() as u8, if v < 0 { -s } else { s })
        };
        match self {
            Root::Short { i, sign } => {
                let (i, sign) = image(i, sign);
                Root::Short { i, sign }
            }
            Root::Long {
                i,
                j,
                sign_i,
                sign_j,
            } => Root::long_from_terms(image(i, sign_i), image(j, sign_j)),
        }
    }

    /// Largest index mentioned.
    fn max_index(self) -> usize {
        match self {
            Root::Short { i, .. } => i as usize,
            Root::Long { j, .. } => j as usize,
        }
    }

    /// Dense index of a positive root in rank `n`.
    fn index(self, n: usize) -> usize {
        debug_assert!(self.is_positive());
        match self {
            Root::Short { i, .. } => i as usize - 1,
            Root::Long { i, j, sign_j, .. } => {
                let block = if sign_j < 0 { n } else { n + n * (n - 1) / 2 };
                block + pair_index(n, i as usize, j as usize)
            }
        }
    }

    fn from_index(n: usize, idx: usize) -> Root {
        if idx < n {
            return Root::short(idx + 1);
        }
        let pairs = n * (n - 1) / 2;
        let (k, plus) = if idx < n + pairs {
            (idx - n, false)
        } else {
            (idx - n - pairs, true)
        };
        let (i, j) = pair_from_index(n, k);
        if plus {
            Root::sum(i, j)
        } else {
            Root::difference(i, j)
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Short { i, sign } => write!(f, "{}e{i}", if sign < 0 { "-" } else { "" }),
            Root::Long {
                i,
                j,
                sign_i,
                sign_j,
            } => write!(
                f,
                "{}e{i}{}e{j}",
                if sign_i < 0 { "-" } else { "" },
                if sign_j < 0 { "-" } else { "+" }
            ),
        }
    }
}

/// `(i, j)` with `1 <= i < j <= n` in lexicographic position.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

fn pair_from_index(n: usize, mut k: usize) -> (usize, usize) {
    for i in 1..n {
        let row = n - i;
        if k < row {
            return (i, i + 1 + k);
        }
        k -= row;
    }
    unreachable!("pair index out of range")
}

/// The positive system of one classical type in a given rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootSystemView {
    pub ty: ClassicalType,
    pub n: usize,
}

impl RootSystemView {
    pub fn new(ty: ClassicalType, n: usize) -> Self {
        let view = RootSystemView { ty, n };
        debug_assert_eq!(view.positive_roots().count(), view.positive_count());
        view
    }

    pub fn positive_count(&self) -> usize {
        let n = self.n;
        match self.ty {
            ClassicalType::A => n * (n - 1) / 2,
            ClassicalType::B => n * n,
            ClassicalType::D => n * n - n,
        }
    }

    pub fn contains(&self, r: Root) -> bool {
        if r.max_index() > self.n {
            return false;
        }
        match (self.ty, r) {
            (ClassicalType::B, _) => true,
            (ClassicalType::D, r) => r.is_long(),
            (ClassicalType::A, Root::Long { sign_i, sign_j, .. }) => sign_i != sign_j,
            (ClassicalType::A, Root::Short { .. }) => false,
        }
    }

    /// Positive roots in dense-index order.
    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        (0..n * n)
            .map(move |idx| Root::from_index(n, idx))
            .filter(move |r| self.contains(*r))
    }

    fn mask(&self) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.n * self.n);
        for r in self.positive_roots() {
            bits.insert(r.index(self.n));
        }
        bits
    }
}

/// A set of positive roots of rank `n`, stored as a bit set over the dense index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InversionSet {
    n: usize,
    bits: FixedBitSet,
}

impl InversionSet {
    pub fn empty(n: usize) -> Self {
        InversionSet {
            n,
            bits: FixedBitSet::with_capacity(n * n),
        }
    }

    /// Fails if a root is negative or out of range.
    pub fn from_roots(n: usize, roots: impl IntoIterator<Item = Root>) -> Option<Self> {
        let mut set = Self::empty(n);
        for r in roots {
            if !r.is_positive() || r.max_index() > n {
                return None;
            }
            set.bits.insert(r.index(n));
        }
        Some(set)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, r: Root) -> bool {
        r.is_positive() && r.max_index() <= self.n && self.bits.contains(r.index(self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        self.bits.ones().map(|idx| Root::from_index(self.n, idx))
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        InversionSet { n: self.n, bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        InversionSet { n: self.n, bits }
    }

    fn restrict(mut self, view: &RootSystemView) -> Self {
        self.bits.intersect_with(&view.mask());
        self
    }

    /// `w(S)` as a root list; members may come out negative.
    pub fn image(&self, w: &SignedPermutation) -> Vec<Root> {
        self.iter().map(|r| r.act(w)).collect()
    }

    /// `w(S)` when it consists of positive roots only.
    pub fn image_set(&self, w: &SignedPermutation) -> Option<Self> {
        Self::from_roots(self.n, self.image(w))
    }
}

impl fmt::Display for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut roots = self.iter().collect_vec();
        roots.sort_by_key(|r| match *r {
            Root::Short { i, .. } => (i, 0, 0),
            Root::Long { i, j, sign_j, .. } => (i, j, if sign_j < 0 { 1 } else { 2 }),
        });
        write!(f, "{}", roots.iter().join(", "))
    }
}

impl fmt::Debug for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Whether `e_i - e_j` (i < j) is sent negative, given `a = w(i)`, `b = w(j)`.
#[inline]
fn difference_inverted(a: i32, b: i32) -> bool {
    if a.abs() < b.abs() {
        a < 0
    } else {
        b > 0
    }
}

/// Whether `e_i + e_j` (i < j) is sent negative.
#[inline]
fn sum_inverted(a: i32, b: i32) -> bool {
    if a.abs() < b.abs() {
        a < 0
    } else {
        b < 0
    }
}

/// Full `B_n` inversion set `N(w)`.
pub fn inversion_set_b(w: &SignedPermutation) -> InversionSet {
    let n = w.rank();
    let mut set = InversionSet::empty(n);
    let win = w.window();
    for i in 1..=n {
        if win[i - 1] < 0 {
            set.bits.insert(i - 1);
        }
    }
    let pairs = n * (n - 1) / 2;
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (win[i - 1] as i32, win[j - 1] as i32);
            let k = pair_index(n, i, j);
            if difference_inverted(a, b) {
                set.bits.insert(n + k);
            }
            if sum_inverted(a, b) {
                set.bits.insert(n + pairs + k);
            }
        }
    }
    set
}

/// `Λ(w)`: positive long roots sent negative.
pub fn lambda_set(w: &SignedPermutation) -> InversionSet {
    inversion_set_b(w).restrict(&RootSystemView::new(ClassicalType::D, w.rank()))
}

/// `Σ(w)`: positive short roots sent negative, i.e. `{e_i : w(i) < 0}`.
pub fn sigma_set(w: &SignedPermutation) -> InversionSet {
    let n = w.rank();
    let mut set = InversionSet::empty(n);
    for (i, &v) in w.window().iter().enumerate() {
        if v < 0 {
            set.bits.insert(i);
        }
    }
    set
}

/// Type-A inversion set `{e_i - e_j : i < j, w(i) > w(j)}`; signed input is rejected.
pub fn inversion_set_a(w: &SignedPermutation) -> Result<InversionSet> {
    if !w.is_unsigned() {
        return Err(Error::SignedInput);
    }
    Ok(inversion_set_b(w))
}

/// Inversion set in the root system of the given type. Type A requires an
/// unsigned element; type D returns `Λ(w)` for any element.
pub fn inversion_set(w: &SignedPermutation, ty: ClassicalType) -> Result<InversionSet> {
    match ty {
        ClassicalType::A => inversion_set_a(w),
        ClassicalType::B => Ok(inversion_set_b(w)),
        ClassicalType::D => Ok(lambda_set(w)),
    }
}

/// `|Λ(w)|`.
pub fn lambda_count(w: &SignedPermutation) -> usize {
    let win = w.window();
    let mut count = 0;
    for i in 0..win.len() {
        for j in i + 1..win.len() {
            let (a, b) = (win[i] as i32, win[j] as i32);
            count += difference_inverted(a, b) as usize + sum_inverted(a, b) as usize;
        }
    }
    count
}

/// `|Σ(w)|`.
pub fn sigma_count(w: &SignedPermutation) -> usize {
    w.negative_count()
}

/// `ℓ_B(w) = |Λ(w)| + |Σ(w)|`.
pub fn length_b(w: &SignedPermutation) -> usize {
    lambda_count(w) + sigma_count(w)
}

/// `ℓ_D(w) = |Λ(w)|`; a Coxeter length only for elements of `D_n`.
pub fn length_d(w: &SignedPermutation) -> usize {
    lambda_count(w)
}

/// Number of inversions of an unsigned element.
pub fn length_a(w: &SignedPermutation) -> Result<usize> {
    if !w.is_unsigned() {
        return Err(Error::SignedInput);
    }
    let win = w.window();
    Ok((0..win.len())
        .tuple_combinations()
        .filter(|&(i, j)| win[i] > win[j])
        .count())
}

pub fn length(w: &SignedPermutation, ty: ClassicalType) -> Result<usize> {
    match ty {
        ClassicalType::A => length_a(w),
        ClassicalType::B => Ok(length_b(w)),
        ClassicalType::D => Ok(length_d(w)),
    }
}

/// The three terms of `ℓ(gh) = ℓ(g) + ℓ(h) - 2|N(g) ∩ N(h^-1)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthIdentity {
    pub length_product: usize,
    pub length_g: usize,
    pub length_h: usize,
    pub overlap: usize,
}

impl LengthIdentity {
    pub fn holds(&self) -> bool {
        self.length_product + 2 * self.overlap == self.length_g + self.length_h
    }
}

pub fn verify_length_identity(
    g: &SignedPermutation,
    h: &SignedPermutation,
    ty: ClassicalType,
) -> Result<LengthIdentity> {
    let gh = g.compose(h)?;
    let ng = inversion_set(g, ty)?;
    let nh = inversion_set(h, ty)?;
    let nh_inv = inversion_set(&h.inverse(), ty)?;
    Ok(LengthIdentity {
        length_product: inversion_set(&gh, ty)?.len(),
        length_g: ng.len(),
        length_h: nh.len(),
        overlap: ng.intersection_count(&nh_inv),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaCheck {
    HypothesisNotMet,
    Holds,
    Fails,
}

/// If `N(g) ∩ N(h^-1) = ∅`, checks `N(gh) = N(h) ⊔ h^-1(N(g))`.
pub fn check_product_decomposition(
    g: &SignedPermutation,
    h: &SignedPermutation,
    ty: ClassicalType,
) -> Result<LemmaCheck> {
    let ng = inversion_set(g, ty)?;
    let h_inv = h.inverse();
    if !ng.is_disjoint(&inversion_set(&h_inv, ty)?) {
        return Ok(LemmaCheck::HypothesisNotMet);
    }
    let nh = inversion_set(h, ty)?;
    let ngh = inversion_set(&g.compose(h)?, ty)?;
    let ok = match ng.image_set(&h_inv) {
        Some(moved) => moved.is_disjoint(&nh) && moved.union(&nh) == ngh,
        None => false,
    };
    Ok(if ok { LemmaCheck::Holds } else { LemmaCheck::Fails })
}

/// For involutions with `t_i(N(t_j)) = N(t_j)` whenever `i != j`, checks that
/// `N(t_1 ... t_m)` is the disjoint union of the `N(t_i)`.
pub fn check_disjoint_union(ts: &[SignedPermutation], ty: ClassicalType) -> Result<LemmaCheck> {
    let Some(first) = ts.first() else {
        return Ok(LemmaCheck::HypothesisNotMet);
    };
    let n = first.rank();
    if ts.iter().any(|t| t.rank() != n) {
        return Err(Error::RankMismatch {
            left: n,
            right: ts.iter().find(|t| t.rank() != n).unwrap().rank(),
        });
    }
    if !ts.iter().all(SignedPermutation::squares_to_identity) {
        return Ok(LemmaCheck::HypothesisNotMet);
    }
    let sets = ts
        .iter()
        .map(|t| inversion_set(t, ty))
        .collect::<Result<Vec<_>>>()?;
    for (i, t) in ts.iter().enumerate() {
        for (j, set) in sets.iter().enumerate() {
            if i != j && set.image_set(t).as_ref() != Some(set) {
                return Ok(LemmaCheck::HypothesisNotMet);
            }
        }
    }
    let product = ts[1..].iter().fold(first.clone(), |acc, t| &acc * t);
    let whole = inversion_set(&product, ty)?;
    let mut total = 0;
    let mut union = InversionSet::empty(n);
    for s in &sets {
        total += s.len();
        union = union.union(s);
    }
    let ok = union.len() == total && union == whole;
    Ok(if ok { LemmaCheck::Holds } else { LemmaCheck::Fails })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(text, Some(n)).unwrap()
    }

    #[test]
    fn positive_counts() {
        for n in 1..=7 {
            assert_eq!(RootSystemView::new(ClassicalType::A, n).positive_roots().count(), n * (n - 1) / 2);
            assert_eq!(RootSystemView::new(ClassicalType::B, n).positive_roots().count(), n * n);
            assert_eq!(RootSystemView::new(ClassicalType::D, n).positive_roots().count(), n * n - n);
        }
    }

    #[test]
    fn index_round_trip() {
        for n in 1..=6 {
            for idx in 0..n * n {
                assert_eq!(Root::from_index(n, idx).index(n), idx);
            }
        }
    }

    #[test]
    fn action_example() {
        let w = sp("(-1,+3,+8)", 8);
        assert_eq!(Root::short(1).act(&w), Root::Short { i: 3, sign: -1 });
        let id = SignedPermutation::identity(8);
        assert_eq!(Root::sum(2, 5).act(&id), Root::sum(2, 5));
    }

    #[test]
    fn action_is_linear_b3() {
        let roots = RootSystemView::new(ClassicalType::B, 3).positive_roots().collect_vec();
        for w in SignedPermutation::all(3) {
            for r in &roots {
                assert_eq!(r.neg().act(&w), r.act(&w).neg());
            }
        }
    }

    #[test]
    fn fast_inversion_set_matches_root_action() {
        for n in 1..=4 {
            let view = RootSystemView::new(ClassicalType::B, n);
            for w in SignedPermutation::all(n) {
                let slow = InversionSet::from_roots(n, view.positive_roots().filter(|r| !r.act(&w).is_positive())).unwrap();
                assert_eq!(inversion_set_b(&w), slow);
                assert_eq!(lambda_set(&w).len(), lambda_count(&w));
            }
        }
    }

    #[test]
    fn small_sets() {
        let w = sp("(-1,+3,+8)", 8);
        assert_eq!(sigma_set(&w).iter().collect_vec(), vec![Root::short(1)]);
        let id = SignedPermutation::identity(5);
        assert!(lambda_set(&id).is_empty() && sigma_set(&id).is_empty());

        let w = SignedPermutation::from_window(&[-2, -3, 1]).unwrap();
        assert_eq!(lambda_set(&w).len(), 4);
        assert_eq!(sigma_set(&w).len(), 2);
        assert_eq!(length_b(&w), 6);
    }

    #[test]
    fn type_a_sets() {
        let id = SignedPermutation::identity(6);
        assert!(inversion_set_a(&id).unwrap().is_empty());
        let rev = SignedPermutation::from_window(&[6, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(inversion_set_a(&rev).unwrap().len(), 15);
        assert_eq!(inversion_set_a(&SignedPermutation::sign_change(3, 1)), Err(Error::SignedInput));

        let w = sp("(1,9,2,8)(3,7,4,6,5)", 9);
        let win = w.window();
        let brute = (0..9).tuple_combinations().filter(|&(i, j)| win[i] > win[j]).count();
        assert_eq!(inversion_set_a(&w).unwrap().len(), brute);
        assert_eq!(length_a(&w).unwrap(), brute);
    }

    #[test]
    fn longest_lengths() {
        for n in 1..=6 {
            let w0 = SignedPermutation::all_negative(n);
            assert_eq!(length_b(&w0), n * n);
            assert_eq!(length_d(&w0), n * n - n);
        }
    }

    #[test]
    fn display_sorted() {
        let w = sp("(-1,+3,+8)", 8);
        let text = inversion_set_b(&w).to_string();
        assert!(text.starts_with("e1,"), "{text}");
        assert_eq!(Root::difference(1, 3).to_string(), "e1-e3");
        assert_eq!(Root::sum(2, 5).to_string(), "e2+e5");
    }

    #[test]
    fn length_identity_trivial_cases() {
        let id = SignedPermutation::identity(4);
        let r = verify_length_identity(&id, &id, ClassicalType::B).unwrap();
        assert_eq!((r.length_product, r.length_g, r.length_h, r.overlap), (0, 0, 0, 0));
        let g = sp("(-1,+3)(2,4)", 4);
        let r = verify_length_identity(&g, &g.inverse(), ClassicalType::B).unwrap();
        assert_eq!(r.length_product, 0);
        assert_eq!(r.overlap, r.length_g);
        assert!(r.holds());
    }

    #[test]
    fn length_identity_and_inverse_lengths_exhaustive() {
        let all = SignedPermutation::all(3).collect_vec();
        for g in &all {
            assert_eq!(length_b(g), length_b(&g.inverse()));
            assert_eq!(length_d(g), length_d(&g.inverse()));
            for h in &all {
                assert!(verify_length_identity(g, h, ClassicalType::B).unwrap().holds());
                assert!(verify_length_identity(g, h, ClassicalType::D).unwrap().holds());
            }
        }
    }

    #[test]
    fn longest_element_complements() {
        for n in 1..=4 {
            let w0 = SignedPermutation::all_negative(n);
            for w in SignedPermutation::all(n) {
                let x = &w * &w0;
                assert_eq!(lambda_count(&x), n * n - n - lambda_count(&w));
                assert_eq!(sigma_count(&x), n - sigma_count(&w));
            }
        }
    }

    #[test]
    fn lemma_checks_trivial() {
        let t = sp("(1,3)", 4);
        assert_eq!(check_disjoint_union(std::slice::from_ref(&t), ClassicalType::A).unwrap(), LemmaCheck::Holds);
        let g = sp("(1,2)", 3);
        assert_eq!(check_product_decomposition(&g, &g, ClassicalType::A).unwrap(), LemmaCheck::HypothesisNotMet);
        let h = sp("(2,3)", 3);
        assert_eq!(check_product_decomposition(&g, &h, ClassicalType::A).unwrap(), LemmaCheck::Holds);
        assert_eq!(
            check_disjoint_union(&[sp("(1,2)", 3), sp("(2,3)", 3)], ClassicalType::A).unwrap(),
            LemmaCheck::HypothesisNotMet
        );
    }
}
