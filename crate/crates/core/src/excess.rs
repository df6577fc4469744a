//! Involutions, excess, conjugacy classes and maximal-length censuses of the
//! classical groups.
//!
//! `A` groups are indexed by degree here: `(ClassicalType::A, n)` is `S_n`.
//! Lengths are always taken in the root system of the group's own type, so
//! `D` uses `ℓ_D` and only factors in `D_n`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::reps::{u_c, u_c_t};
use crate::roots::{length, ClassicalType};
use crate::signedperm::{integer_partitions, SignedCycleType, SignedPermutation};

/// Resource ceilings for exhaustive work. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_group_order: u64,
    pub max_class_size: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_group_order: 1_000_000,
            max_class_size: 1_000_000,
        }
    }
}

impl Budget {
    fn check(limit: u64, what: &'static str, needed: u64) -> Result<()> {
        if needed > limit {
            return Err(Error::Budget { what, needed, limit });
        }
        Ok(())
    }
}

fn check_rank(ty: ClassicalType, n: usize) -> Result<()> {
    let min = if ty == ClassicalType::D { 2 } else { 1 };
    if n < min || n > 12 {
        return Err(Error::UnsupportedRank { ty: ty.letter(), n });
    }
    Ok(())
}

/// `|S_n|`, `|B_n|` or `|D_n|`, saturating.
pub fn group_order(ty: ClassicalType, n: usize) -> u64 {
    let fact = (1..=n as u64).fold(1u64, |a, b| a.saturating_mul(b));
    match ty {
        ClassicalType::A => fact,
        ClassicalType::B => fact.saturating_mul(1u64 << n.min(63)),
        ClassicalType::D => fact.saturating_mul(1u64 << n.saturating_sub(1).min(63)),
    }
}

fn member(ty: ClassicalType, w: &SignedPermutation) -> bool {
    match ty {
        ClassicalType::A => w.is_unsigned(),
        ClassicalType::B => true,
        ClassicalType::D => w.in_type_d(),
    }
}

fn check_member(ty: ClassicalType, n: usize, w: &SignedPermutation) -> Result<()> {
    if w.rank() != n {
        return Err(Error::RankMismatch { left: w.rank(), right: n });
    }
    match ty {
        ClassicalType::A if !w.is_unsigned() => Err(Error::SignedInput),
        ClassicalType::D if !w.in_type_d() => Err(Error::NotInTypeD(w.to_string())),
        _ => Ok(()),
    }
}

fn len_of(ty: ClassicalType, w: &SignedPermutation) -> usize {
    length(w, ty).expect("membership checked by caller")
}

/// Every involution of the group (identity included), built from fixed points,
/// sign changes and signed transpositions `i ↦ ±j, j ↦ ±i`.
pub fn involutions(ty: ClassicalType, n: usize) -> Vec<SignedPermutation> {
    fn go(ty: ClassicalType, window: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
        let Some(i) = window.iter().position(|&x| x == 0) else {
            let w = SignedPermutation::from_window(window).expect("involution window");
            if member(ty, &w) {
                out.push(w);
            }
            return;
        };
        let signs: &[i32] = if ty == ClassicalType::A { &[1] } else { &[1, -1] };
        let a = i as i32 + 1;
        for &s in signs {
            window[i] = s * a;
            go(ty, window, out);
        }
        for j in i + 1..window.len() {
            if window[j] != 0 {
                continue;
            }
            let b = j as i32 + 1;
            for &s in signs {
                window[i] = s * b;
                window[j] = s * a;
                go(ty, window, out);
                window[j] = 0;
            }
        }
        window[i] = 0;
    }
    let mut out = Vec::new();
    go(ty, &mut vec![0; n], &mut out);
    out
}

/// Number of involutions of `B_n` (identity included).
pub fn involution_count_b(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 2u64);
    if n == 0 {
        return 1;
    }
    for k in 2..=n as u64 {
        let next = 2 * cur + 2 * (k - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    pub element: SignedPermutation,
    pub length: usize,
}

/// The involutions of one group sorted by length, then window.
#[derive(Clone, Debug)]
pub struct InvolutionTable {
    ty: ClassicalType,
    n: usize,
    items: Vec<Involution>,
}

impl InvolutionTable {
    pub fn new(ty: ClassicalType, n: usize, budget: &Budget) -> Result<Self> {
        check_rank(ty, n)?;
        Budget::check(budget.max_group_order, "involutions", involution_count_b(n))?;
        let mut items: Vec<Involution> = involutions(ty, n)
            .into_iter()
            .map(|w| Involution {
                length: len_of(ty, &w),
                element: w,
            })
            .collect();
        items.sort_by(|a, b| (a.length, &a.element).cmp(&(b.length, &b.element)));
        Ok(InvolutionTable { ty, n, items })
    }

    pub fn classical_type(&self) -> ClassicalType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[Involution] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The involutions `σ` with `σ w σ = w⁻¹`, in table order.
    pub fn reversing(&self, w: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
        check_member(self.ty, self.n, w)?;
        Ok(self
            .items
            .iter()
            .filter(|s| (&s.element * w).squares_to_identity())
            .map(|s| s.element.clone())
            .collect())
    }

    /// Exact excess of `w`. With `early_exit` the scan stops at the first
    /// additive pair.
    pub fn excess_with(&self, w: &SignedPermutation, early_exit: bool) -> Result<ExcessReport> {
        check_member(self.ty, self.n, w)?;
        let lw = len_of(self.ty, w);
        let mut best: Option<(usize, &Involution, SignedPermutation)> = None;
        let mut examined = 0;
        for s in &self.items {
            let tau = &s.element * w;
            if !tau.squares_to_identity() {
                continue;
            }
            examined += 1;
            let e = s.length + len_of(self.ty, &tau) - lw;
            if best.as_ref().is_none_or(|(b, _, _)| e < *b) {
                best = Some((e, s, tau));
                if e == 0 && early_exit {
                    break;
                }
            }
        }
        let (excess, sigma, tau) = best.expect("the identity factorisation of an involution pair always exists");
        Ok(ExcessReport {
            element: w.clone(),
            flavor: self.ty,
            excess,
            length: lw,
            sigma: sigma.element.clone(),
            sigma_length: sigma.length,
            tau_length: len_of(self.ty, &tau),
            tau,
            examined,
        })
    }

    pub fn excess(&self, w: &SignedPermutation) -> Result<ExcessReport> {
        self.excess_with(w, true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcessReport {
    pub element: SignedPermutation,
    pub flavor: ClassicalType,
    pub excess: usize,
    pub length: usize,
    pub sigma: SignedPermutation,
    pub tau: SignedPermutation,
    pub sigma_length: usize,
    pub tau_length: usize,
    /// Reversing involutions looked at before the scan ended.
    pub examined: usize,
}

impl ExcessReport {
    /// Re-checks the witness from scratch.
    pub fn is_consistent(&self) -> bool {
        let ty = self.flavor;
        self.sigma.squares_to_identity()
            && self.tau.squares_to_identity()
            && &self.sigma * &self.tau == self.element
            && member(ty, &self.sigma)
            && member(ty, &self.tau)
            && self.sigma_length == len_of(ty, &self.sigma)
            && self.tau_length == len_of(ty, &self.tau)
            && self.length == len_of(ty, &self.element)
            && self.sigma_length + self.tau_length == self.length + self.excess
    }
}

/// `e(w)` in the group of type `flavor` and rank `w.rank()`.
pub fn excess(w: &SignedPermutation, flavor: ClassicalType, budget: &Budget) -> Result<ExcessReport> {
    InvolutionTable::new(flavor, w.rank(), budget)?.excess(w)
}

pub fn reversing_involutions(
    w: &SignedPermutation,
    flavor: ClassicalType,
    budget: &Budget,
) -> Result<Vec<SignedPermutation>> {
    InvolutionTable::new(flavor, w.rank(), budget)?.reversing(w)
}

/// Coxeter generators: `(i, i+1)`, then `(-n)` for B or the reflection in
/// `e_{n-1} + e_n` for D.
pub fn generators(ty: ClassicalType, n: usize) -> Vec<SignedPermutation> {
    let mut gens: Vec<SignedPermutation> = (1..n).map(|i| SignedPermutation::transposition(n, i, i + 1)).collect();
    match ty {
        ClassicalType::A => {}
        ClassicalType::B => gens.push(SignedPermutation::sign_change(n, n)),
        ClassicalType::D if n >= 2 => {
            let mut window: Vec<i32> = (1..=n as i32).collect();
            window[n - 2] = -(n as i32);
            window[n - 1] = -(n as i32 - 1);
            gens.push(SignedPermutation::from_window(&window).expect("valid generator"));
        }
        ClassicalType::D => {}
    }
    gens
}

/// Which `D_n` class of a split signed cycle type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitTag {
    /// The class of `u_C`.
    Plus,
    /// The class of `u_C^t`.
    Minus,
    Nonsplit,
}

impl fmt::Display for SplitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitTag::Plus => "plus",
            SplitTag::Minus => "minus",
            SplitTag::Nonsplit => "nonsplit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Cycle type of a permutation, parts descending.
    Partition(Vec<usize>),
    Signed(SignedCycleType, SplitTag),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassDescriptor {
    pub ty: ClassicalType,
    pub n: usize,
    pub label: ClassLabel,
}

impl ClassDescriptor {
    pub fn signed_type(&self) -> Option<&SignedCycleType> {
        match &self.label {
            ClassLabel::Signed(ct, _) => Some(ct),
            ClassLabel::Partition(_) => None,
        }
    }

    pub fn split_tag(&self) -> Option<SplitTag> {
        match &self.label {
            ClassLabel::Signed(_, tag) if self.ty == ClassicalType::D => Some(*tag),
            _ => None,
        }
    }

    /// A representative of minimal length: `u_C`, `u_C^t`, or for type A the
    /// permutation with consecutive cycles.
    pub fn minimal_representative(&self) -> SignedPermutation {
        match &self.label {
            ClassLabel::Signed(ct, SplitTag::Minus) => u_c_t(ct),
            ClassLabel::Signed(ct, _) => u_c(ct),
            ClassLabel::Partition(parts) => u_c(&SignedCycleType::new(vec![], parts.clone())),
        }
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            ClassLabel::Partition(parts) => {
                let text: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", text.join(","))
            }
            ClassLabel::Signed(ct, tag) => match (self.ty, tag) {
                (ClassicalType::D, SplitTag::Plus | SplitTag::Minus) => write!(f, "{ct}{tag}"),
                _ => write!(f, "{ct}"),
            },
        }
    }
}

/// All classes of the group, in a fixed order.
pub fn class_descriptors(ty: ClassicalType, n: usize) -> Result<Vec<ClassDescriptor>> {
    check_rank(ty, n)?;
    let desc = |label| ClassDescriptor { ty, n, label };
    Ok(match ty {
        ClassicalType::A => integer_partitions(n).into_iter().map(|p| desc(ClassLabel::Partition(p))).collect(),
        ClassicalType::B => SignedCycleType::all(n)
            .into_iter()
            .map(|ct| desc(ClassLabel::Signed(ct, SplitTag::Nonsplit)))
            .collect(),
        ClassicalType::D => {
            let mut out = Vec::new();
            for ct in SignedCycleType::all(n).into_iter().filter(|c| c.in_type_d()) {
                if ct.splits_in_type_d() {
                    out.push(desc(ClassLabel::Signed(ct.clone(), SplitTag::Plus)));
                    out.push(desc(ClassLabel::Signed(ct, SplitTag::Minus)));
                } else {
                    out.push(desc(ClassLabel::Signed(ct, SplitTag::Nonsplit)));
                }
            }
            out
        }
    })
}

/// Conjugation orbit of `start` under the given generating involutions,
/// sorted.
pub fn conjugation_orbit(
    start: &SignedPermutation,
    gens: &[SignedPermutation],
    limit: u64,
) -> Result<Vec<SignedPermutation>> {
    let mut seen: HashSet<SignedPermutation> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.conjugate_by(g);
            if seen.insert(y.clone()) {
                Budget::check(limit, "class size", seen.len() as u64)?;
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// All elements of the group, in enumeration order.
pub fn elements(ty: ClassicalType, n: usize, budget: &Budget) -> Result<Vec<SignedPermutation>> {
    check_rank(ty, n)?;
    Budget::check(budget.max_group_order, "group order", group_order(ty, n))?;
    Ok(match ty {
        ClassicalType::A => SignedPermutation::all_unsigned(n).collect(),
        ClassicalType::B => SignedPermutation::all(n).collect(),
        ClassicalType::D => SignedPermutation::all(n).filter(|w| w.in_type_d()).collect(),
    })
}

fn label_matches(desc: &ClassDescriptor, w: &SignedPermutation) -> bool {
    match &desc.label {
        ClassLabel::Partition(p) => w.is_unsigned() && &w.unsigned_cycle_type() == p,
        ClassLabel::Signed(ct, _) => member(desc.ty, w) && &w.cycle_type() == ct,
    }
}

/// Materializes one class, sorted. Split `D` classes come from an orbit BFS.
pub fn conjugacy_class(desc: &ClassDescriptor, budget: &Budget) -> Result<Vec<SignedPermutation>> {
    check_rank(desc.ty, desc.n)?;
    if let ClassLabel::Signed(ct, tag @ (SplitTag::Plus | SplitTag::Minus)) = &desc.label {
        let start = if *tag == SplitTag::Plus { u_c(ct) } else { u_c_t(ct) };
        return conjugation_orbit(&start, &generators(ClassicalType::D, desc.n), budget.max_class_size);
    }
    let mut out: Vec<_> = elements(desc.ty, desc.n, budget)?
        .into_iter()
        .filter(|w| label_matches(desc, w))
        .collect();
    Budget::check(budget.max_class_size, "class size", out.len() as u64)?;
    out.sort();
    Ok(out)
}

/// For an element of a split type, the `D_n` class it lies in. `None` for
/// every other type.
///
/// Builds `g` with `g u_C g^-1 = w` by sending each cycle of `u_C` along a
/// cycle of `w` of the same length. The `B_n`-centralizer of `u_C` lies in
/// `D_n`, so `w` is in the class of `u_C` exactly when `g` is even.
pub fn split_tag_of(w: &SignedPermutation) -> Option<SplitTag> {
    let ct = w.cycle_type();
    if !ct.splits_in_type_d() {
        return None;
    }
    let u = u_c(&ct);
    let mut targets: HashMap<usize, Vec<usize>> = HashMap::new();
    for c in w.cycles() {
        targets.entry(c.len()).or_default().push(c.letters().next().expect("cycles are non-empty"));
    }
    let mut g = vec![0i32; w.rank()];
    for c in u.cycles() {
        let start = targets.get_mut(&c.len()).and_then(Vec::pop).expect("same cycle type");
        let mut a = c.letters().next().expect("cycles are non-empty") as i32;
        let mut x = start as i32;
        for _ in 0..c.len() {
            g[a as usize - 1] = x;
            a = u.apply(a);
            x = w.apply(x);
        }
    }
    let g = SignedPermutation::from_window(&g).expect("cycles partition the letters");
    Some(if g.in_type_d() { SplitTag::Plus } else { SplitTag::Minus })
}

/// Length statistics and excess histogram of one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCensus {
    pub descriptor: ClassDescriptor,
    pub size: usize,
    pub min_length: usize,
    pub max_length: usize,
    pub min_count: usize,
    pub max_count: usize,
    /// Excess value -> number of maximal-length elements with it.
    pub histogram: BTreeMap<usize, usize>,
    /// A maximal-length element of excess zero, if any.
    pub witness: Option<SignedPermutation>,
}

impl ClassCensus {
    /// Some maximal-length element has excess zero.
    pub fn theorem_holds(&self) -> bool {
        self.histogram.get(&0).is_some_and(|&c| c > 0)
    }

    /// Every maximal-length element has excess zero.
    pub fn all_max_zero(&self) -> bool {
        self.histogram.keys().all(|&e| e == 0)
    }
}

fn census_of(
    descriptor: ClassDescriptor,
    class: &[SignedPermutation],
    table: &InvolutionTable,
    exec: Exec,
) -> ClassCensus {
    let ty = descriptor.ty;
    let lengths: Vec<usize> = class.iter().map(|w| len_of(ty, w)).collect();
    let min_length = *lengths.iter().min().expect("classes are non-empty");
    let max_length = *lengths.iter().max().expect("classes are non-empty");
    let maxima: Vec<&SignedPermutation> = class
        .iter()
        .zip(&lengths)
        .filter(|(_, &l)| l == max_length)
        .map(|(w, _)| w)
        .collect();
    let values = par::map(exec, &maxima, |w| table.excess(w).expect("member of the group").excess);
    let mut histogram = BTreeMap::new();
    for &e in &values {
        *histogram.entry(e).or_insert(0) += 1;
    }
    let witness = values.iter().position(|&e| e == 0).map(|i| maxima[i].clone());
    ClassCensus {
        descriptor,
        size: class.len(),
        min_length,
        max_length,
        min_count: lengths.iter().filter(|&&l| l == min_length).count(),
        max_count: maxima.len(),
        histogram,
        witness,
    }
}

pub fn class_census(desc: &ClassDescriptor, budget: &Budget, exec: Exec) -> Result<ClassCensus> {
    let class = conjugacy_class(desc, budget)?;
    let table = InvolutionTable::new(desc.ty, desc.n, budget)?;
    Ok(census_of(desc.clone(), &class, &table, exec))
}

/// Splits the whole group into its classes, in [`class_descriptors`] order.
pub fn partition_into_classes(
    ty: ClassicalType,
    n: usize,
    budget: &Budget,
) -> Result<Vec<(ClassDescriptor, Vec<SignedPermutation>)>> {
    let descriptors = class_descriptors(ty, n)?;
    let mut by_type: HashMap<ClassLabel, Vec<SignedPermutation>> = HashMap::new();
    for w in elements(ty, n, budget)? {
        let key = match ty {
            ClassicalType::A => ClassLabel::Partition(w.unsigned_cycle_type()),
            _ => ClassLabel::Signed(w.cycle_type(), SplitTag::Nonsplit),
        };
        by_type.entry(key).or_default().push(w);
    }
    let mut out = Vec::with_capacity(descriptors.len());
    for desc in descriptors {
        let class = match &desc.label {
            ClassLabel::Signed(ct, SplitTag::Plus) => {
                conjugation_orbit(&u_c(ct), &generators(ty, n), budget.max_class_size)?
            }
            ClassLabel::Signed(ct, SplitTag::Minus) => {
                let whole = &by_type[&ClassLabel::Signed(ct.clone(), SplitTag::Nonsplit)];
                let plus: HashSet<_> = conjugation_orbit(&u_c(ct), &generators(ty, n), budget.max_class_size)?
                    .into_iter()
                    .collect();
                let mut rest: Vec<_> = whole.iter().filter(|w| !plus.contains(*w)).cloned().collect();
                rest.sort();
                rest
            }
            label => {
                let mut c = by_type.get(label).cloned().unwrap_or_default();
                c.sort();
                c
            }
        };
        Budget::check(budget.max_class_size, "class size", class.len() as u64)?;
        out.push((desc, class));
    }
    Ok(out)
}

/// Census of every class of the group.
pub fn group_census(ty: ClassicalType, n: usize, budget: &Budget, exec: Exec) -> Result<Vec<ClassCensus>> {
    let classes = partition_into_classes(ty, n, budget)?;
    let table = InvolutionTable::new(ty, n, budget)?;
    Ok(par::map(exec, &classes, |(desc, class)| {
        census_of(desc.clone(), class, &table, exec)
    }))
}

/// Involution pairs `(x, y)` with `x y = (-1 +2)` in `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma51Census {
    pub n: usize,
    pub pair_count: usize,
    pub additive_pairs: Vec<(SignedPermutation, SignedPermutation)>,
}

impl Lemma51Census {
    pub fn additive_count(&self) -> usize {
        self.additive_pairs.len()
    }

    /// At least `2^n` pairs and exactly one additive pair.
    pub fn holds(&self) -> bool {
        self.pair_count >= 1 << self.n && self.additive_count() == 1
    }
}

/// The element `(-1 +2)`, i.e. window `[2, -1, 3, ..., n]`.
pub fn lemma51_element(n: usize) -> Result<SignedPermutation> {
    if n < 2 {
        return Err(Error::UnsupportedRank { ty: 'B', n });
    }
    SignedPermutation::parse("(-1,+2)", Some(n))
}

pub fn lemma51_census(n: usize, budget: &Budget) -> Result<Lemma51Census> {
    let w = lemma51_element(n)?;
    let table = InvolutionTable::new(ClassicalType::B, n, budget)?;
    let lw = len_of(ClassicalType::B, &w);
    let mut pair_count = 0;
    let mut additive_pairs = Vec::new();
    for x in table.items() {
        let y = &x.element * &w;
        if y.squares_to_identity() {
            pair_count += 1;
            if x.length + len_of(ClassicalType::B, &y) == lw {
                additive_pairs.push((x.element.clone(), y));
            }
        }
    }
    Ok(Lemma51Census {
        n,
        pair_count,
        additive_pairs,
    })
}

/// Length and excess additivity on `S_a × B_b`, realised as the standard
/// parabolic subgroup of `B_{a+b}` (`S_a` on letters `1..=a`, `B_b` on the
/// rest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub elements_checked: usize,
    /// `ℓ_B` of the embedded element equals `ℓ_A(x) + ℓ_B(y)`.
    pub length_additive: bool,
    /// Excess computed inside the parabolic equals `e_A(x) + e_B(y)`.
    pub excess_additive: bool,
    /// Maximal length in a product class iff maximal in each factor class.
    pub max_iff_componentwise: bool,
}

impl ProductReport {
    pub fn holds(&self) -> bool {
        self.length_additive && self.excess_additive && self.max_iff_componentwise
    }
}

/// Places `y` on the letters after those of `x`.
pub fn embed_pair(x: &SignedPermutation, y: &SignedPermutation) -> SignedPermutation {
    let shift = x.rank() as i32;
    let window: Vec<i32> = x
        .window()
        .iter()
        .map(|&v| v as i32)
        .chain(y.window().iter().map(|&v| {
            let v = v as i32;
            v.signum() * (v.abs() + shift)
        }))
        .collect();
    SignedPermutation::from_window(&window).expect("disjoint supports")
}

pub fn direct_product_reduction_check(a: usize, b: usize, budget: &Budget) -> Result<ProductReport> {
    let (ta, tb) = (ClassicalType::A, ClassicalType::B);
    let ia = InvolutionTable::new(ta, a, budget)?;
    let ib = InvolutionTable::new(tb, b, budget)?;
    let embedded_involutions: Vec<(SignedPermutation, usize)> = ia
        .items()
        .iter()
        .flat_map(|x| ib.items().iter().map(move |y| embed_pair(&x.element, &y.element)))
        .map(|w| {
            let l = len_of(tb, &w);
            (w, l)
        })
        .collect();
    let product_excess = |w: &SignedPermutation| -> usize {
        let l = len_of(tb, w);
        embedded_involutions
            .iter()
            .filter_map(|(s, ls)| {
                let t = s * w;
                t.squares_to_identity().then(|| ls + len_of(tb, &t) - l)
            })
            .min()
            .expect("identity is an involution")
    };

    let ca = partition_into_classes(ta, a, budget)?;
    let cb = partition_into_classes(tb, b, budget)?;
    let mut report = ProductReport {
        elements_checked: 0,
        length_additive: true,
        excess_additive: true,
        max_iff_componentwise: true,
    };
    for (_, ka) in &ca {
        for (_, kb) in &cb {
            let ma = ka.iter().map(|x| len_of(ta, x)).max().unwrap_or(0);
            let mb = kb.iter().map(|y| len_of(tb, y)).max().unwrap_or(0);
            let mut rows = Vec::new();
            for x in ka {
                for y in kb {
                    let w = embed_pair(x, y);
                    let lw = len_of(tb, &w);
                    report.elements_checked += 1;
                    if lw != len_of(ta, x) + len_of(tb, y) {
                        report.length_additive = false;
                    }
                    if product_excess(&w) != ia.excess(x)?.excess + ib.excess(y)?.excess {
                        report.excess_additive = false;
                    }
                    rows.push((lw, len_of(ta, x) == ma && len_of(tb, y) == mb));
                }
            }
            let m = rows.iter().map(|r| r.0).max().unwrap_or(0);
            if rows.iter().any(|&(l, comp)| (l == m) != comp) {
                report.max_iff_componentwise = false;
            }
        }
    }
    Ok(report)
}
