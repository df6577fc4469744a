//! Explicit class representatives and closed-form length extrema.
//!
//! * type A: Kim's stair sequence, the corresponding element `w_λ` of a
//!   maximal partition, and its reversal-involution factorisation;
//! * types B/D: the minimal-length elements `u_C`, `u_C^t`, the maximal-length
//!   signed elements `w_{λ,ρ}`, the interval reversals `g_{[a,k]}`,
//!   `h_{[a,k]}`, the cycle gadgets `w^±_{[a,k]}`, and the length formulas.
//!
//! Two offset conventions appear. Blocks of a composition are addressed with
//! *prefix offsets* (`Σ_{j<i} λ_j`); the `u_C` construction uses *suffix
//! offsets* (`n - Σ_{j<=i} λ_j`).

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::roots::{inversion_set, ClassicalType, InversionSet, Root};
use crate::signedperm::{Partition, SignedCycle, SignedCycleType, SignedPermutation};

/// Kim's stair sequence `1, n, 2, n-1, 3, ...`.
pub fn kim_sequence(n: usize) -> Vec<usize> {
    (1..=n)
        .map(|k| if k % 2 == 1 { (k + 1) / 2 } else { n + 1 - k / 2 })
        .collect()
}

/// A composition whose even parts (any order) precede its odd parts, the odd
/// parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaximalPartition(Partition);

impl MaximalPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let p = Partition::new(parts.clone()).map_err(|_| Error::NotMaximalPartition(parts.clone()))?;
        let first_odd = parts.iter().position(|x| x % 2 == 1).unwrap_or(parts.len());
        let tail = &parts[first_odd..];
        let ok = tail.iter().all(|x| x % 2 == 1) && tail.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::NotMaximalPartition(parts));
        }
        Ok(MaximalPartition(p))
    }

    /// Reorders an arbitrary multiset of parts: even parts descending, then odd
    /// parts descending.
    pub fn normalize(parts: &[usize]) -> Result<Self> {
        let mut even: Vec<usize> = parts.iter().copied().filter(|x| x % 2 == 0).collect();
        let mut odd: Vec<usize> = parts.iter().copied().filter(|x| x % 2 == 1).collect();
        even.sort_unstable_by(|a, b| b.cmp(a));
        odd.sort_unstable_by(|a, b| b.cmp(a));
        even.extend(odd);
        Self::new(even)
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// The cycles `w_1, ..., w_m` of `w_λ` as letter lists.
    pub fn kim_cycles(&self) -> Vec<Vec<usize>> {
        let seq = kim_sequence(self.n());
        self.0
            .prefix_offsets()
            .iter()
            .zip(self.parts())
            .map(|(&start, &len)| seq[start..start + len].to_vec())
            .collect()
    }
}

impl fmt::Display for MaximalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn unsigned_cycle(letters: &[usize]) -> SignedCycle {
    let entries: Vec<i32> = letters.iter().map(|&a| a as i32).collect();
    SignedCycle::new(&entries).expect("letters are distinct")
}

/// The corresponding element `w_λ` of a maximal partition.
pub fn corresponding_element_a(lambda: &MaximalPartition) -> SignedPermutation {
    let cycles: Vec<SignedCycle> = lambda.kim_cycles().iter().map(|c| unsigned_cycle(c)).collect();
    SignedPermutation::from_cycles(lambda.n(), &cycles).expect("Kim cycles partition 1..n")
}

/// `g_{b_1,...,b_k}`: reverses the sequence, fixes everything else.
pub fn reversal(n: usize, seq: &[usize]) -> SignedPermutation {
    let mut window: Vec<i32> = (1..=n as i32).collect();
    for (i, &b) in seq.iter().enumerate() {
        window[b - 1] = seq[seq.len() - 1 - i] as i32;
    }
    SignedPermutation::from_window(&window).expect("reversal of distinct letters")
}

/// Involutions `(σ, τ)` with `στ = (b_1, ..., b_k)`.
pub fn sigma_tau_cycle_a(n: usize, cycle: &[usize]) -> (SignedPermutation, SignedPermutation) {
    let k = cycle.len();
    if k <= 1 {
        let id = SignedPermutation::identity(n);
        return (id.clone(), id);
    }
    if k % 2 == 0 {
        (reversal(n, cycle), reversal(n, &cycle[..k - 1]))
    } else {
        (reversal(n, &cycle[1..]), reversal(n, cycle))
    }
}

/// A pair of involutions with `σ τ = w`, claimed to have disjoint inversion
/// sets in the root system of `flavor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCertificate {
    pub w: SignedPermutation,
    pub sigma: SignedPermutation,
    pub tau: SignedPermutation,
    pub flavor: ClassicalType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub involutions: bool,
    /// Factors lie in the group of the flavor (unsigned for A, even for D).
    pub membership: bool,
    pub product: bool,
    pub disjoint: bool,
    pub additive: bool,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.involutions && self.membership && self.product && self.disjoint && self.additive
    }
}

impl FactorizationCertificate {
    pub fn check(&self) -> CertificateCheck {
        let member = |x: &SignedPermutation| match self.flavor {
            ClassicalType::A => x.is_unsigned(),
            ClassicalType::B => true,
            ClassicalType::D => x.in_type_d(),
        };
        let membership = member(&self.w) && member(&self.sigma) && member(&self.tau);
        let product = self.sigma.compose(&self.tau).as_ref() == Ok(&self.w);
        let involutions = self.sigma.squares_to_identity() && self.tau.squares_to_identity();
        let (disjoint, additive) = if membership {
            let set = |x: &SignedPermutation| inversion_set(x, self.flavor).expect("membership checked");
            let (ns, nt, nw) = (set(&self.sigma), set(&self.tau), set(&self.w));
            (ns.is_disjoint(&nt), ns.len() + nt.len() == nw.len())
        } else {
            (false, false)
        };
        CertificateCheck {
            involutions,
            membership,
            product,
            disjoint,
            additive,
        }
    }
}

/// `σ = Πσ(w_i)`, `τ = Πτ(w_i)` over the Kim cycles of `w_λ`.
pub fn certificate_a(lambda: &MaximalPartition) -> FactorizationCertificate {
    let n = lambda.n();
    let mut sigma = SignedPermutation::identity(n);
    let mut tau = SignedPermutation::identity(n);
    for cycle in lambda.kim_cycles() {
        let (s, t) = sigma_tau_cycle_a(n, &cycle);
        sigma = &sigma * &s;
        tau = &tau * &t;
    }
    FactorizationCertificate {
        w: corresponding_element_a(lambda),
        sigma,
        tau,
        flavor: ClassicalType::A,
    }
}

fn check_interval(n: usize, a: usize, k: usize) -> Result<()> {
    if a + k > n {
        return Err(Error::IntervalOutOfRange { a, k, n });
    }
    Ok(())
}

/// `g_{[a,k]}`: reverses `a+1, ..., a+k` with plus signs.
pub fn g_interval(n: usize, a: usize, k: usize) -> Result<SignedPermutation> {
    check_interval(n, a, k)?;
    let mut window: Vec<i32> = (1..=n as i32).collect();
    for i in 1..=k {
        window[a + i - 1] = (a + k + 1 - i) as i32;
    }
    SignedPermutation::from_window(&window)
}

/// `h_{[a,k]}`: as `g_{[a,k]}` but with every moved letter negated.
pub fn h_interval(n: usize, a: usize, k: usize) -> Result<SignedPermutation> {
    check_interval(n, a, k)?;
    let mut window: Vec<i32> = (1..=n as i32).collect();
    for i in 1..=k {
        window[a + i - 1] = -((a + k + 1 - i) as i32);
    }
    SignedPermutation::from_window(&window)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetSign {
    /// `w^-_{[a,k]} = (-(a+1), ..., -(a+k))`
    Minus,
    /// `w^+_{[a,k]} = (-(a+1), ..., -(a+k-1), +(a+k))`
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleGadget {
    pub w: SignedPermutation,
    pub sigma: SignedPermutation,
    pub tau: SignedPermutation,
}

pub fn cycle_gadget(n: usize, a: usize, k: usize, sign: GadgetSign) -> Result<CycleGadget> {
    check_interval(n, a, k)?;
    if k == 0 {
        return Err(Error::IntervalOutOfRange { a, k, n });
    }
    let mut entries: Vec<i32> = (a + 1..=a + k).map(|x| -(x as i32)).collect();
    if sign == GadgetSign::Plus {
        *entries.last_mut().unwrap() *= -1;
    }
    let w = SignedPermutation::from_cycles(n, &[SignedCycle::new(&entries)?])?;
    let (sigma, tau) = match sign {
        GadgetSign::Minus => (h_interval(n, a, k)?, g_interval(n, a, k - 1)?),
        GadgetSign::Plus => (h_interval(n, a + 1, k - 1)?, g_interval(n, a, k)?),
    };
    Ok(CycleGadget { w, sigma, tau })
}

/// Part lengths in the order `λ_1..λ_ν` (negative, increasing) then
/// `λ_{ν+1}..λ_z` (positive, increasing).
fn ordered_parts(ct: &SignedCycleType) -> Vec<usize> {
    ct.negative_parts()
        .iter()
        .chain(ct.positive_parts())
        .copied()
        .collect()
}

/// `μ_i = n - Σ_{j<=i} λ_j` for `i = 0..=z` (so `μ_0 = n`, `μ_z = 0`).
pub fn suffix_offsets(ct: &SignedCycleType) -> Vec<usize> {
    let n = ct.rank();
    let mut out = vec![n];
    let mut acc = n;
    for p in ordered_parts(ct) {
        acc -= p;
        out.push(acc);
    }
    out
}

/// The minimal-length representative `u_C` of the `B_n` class with signed cycle type `ct`.
///
/// Part `i` occupies the letters `μ_i + 1 ..= μ_{i-1}` in increasing order;
/// negative parts carry a single minus sign, on their largest letter.
pub fn u_c(ct: &SignedCycleType) -> SignedPermutation {
    let n = ct.rank();
    let mu = suffix_offsets(ct);
    let nu = ct.num_negative();
    let cycles: Vec<SignedCycle> = (1..mu.len())
        .map(|i| {
            let mut entries: Vec<i32> = (mu[i] + 1..=mu[i - 1]).map(|x| x as i32).collect();
            if i <= nu {
                *entries.last_mut().unwrap() *= -1;
            }
            SignedCycle::new(&entries).expect("distinct letters")
        })
        .collect();
    SignedPermutation::from_cycles(n, &cycles).expect("blocks partition 1..n")
}

/// `u_C` conjugated by the sign change `(-n)`.
pub fn u_c_t(ct: &SignedCycleType) -> SignedPermutation {
    let n = ct.rank();
    u_c(ct).conjugate_by(&SignedPermutation::sign_change(n, n))
}

/// A composition with `λ_1 >= ... >= λ_ρ` and `λ_{ρ+1} >= ... >= λ_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaximalSplitPartition {
    parts: Partition,
    rho: usize,
}

impl MaximalSplitPartition {
    pub fn new(parts: Vec<usize>, rho: usize) -> Result<Self> {
        let bad = || Error::NotMaximalSplitPartition {
            parts: parts.clone(),
            rho,
        };
        let p = Partition::new(parts.clone()).map_err(|_| bad())?;
        if rho > parts.len() {
            return Err(bad());
        }
        let decreasing = |s: &[usize]| s.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&parts[..rho]) || !decreasing(&parts[rho..]) {
            return Err(bad());
        }
        Ok(MaximalSplitPartition { parts: p, rho })
    }

    /// The maximal split partition whose `w_{λ,ρ}` has signed cycle type `ct`.
    ///
    /// An all-minus block of length `k` is negative iff `k` is odd; a block with a
    /// final plus sign is negative iff `k` is even. So the all-minus blocks are
    /// the odd negative and even positive parts, the rest go after `ρ`.
    pub fn from_cycle_type(ct: &SignedCycleType) -> Self {
        let mut minus: Vec<usize> = ct
            .negative_parts()
            .iter()
            .copied()
            .filter(|k| k % 2 == 1)
            .chain(ct.positive_parts().iter().copied().filter(|k| k % 2 == 0))
            .collect();
        let mut plus: Vec<usize> = ct
            .negative_parts()
            .iter()
            .copied()
            .filter(|k| k % 2 == 0)
            .chain(ct.positive_parts().iter().copied().filter(|k| k % 2 == 1))
            .collect();
        minus.sort_unstable_by(|a, b| b.cmp(a));
        plus.sort_unstable_by(|a, b| b.cmp(a));
        let rho = minus.len();
        minus.extend(plus);
        let msp = Self::new(minus, rho).expect("both blocks sorted");
        debug_assert_eq!(w_lambda_rho(&msp).cycle_type(), *ct);
        msp
    }

    pub fn parts(&self) -> &[usize] {
        self.parts.parts()
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn n(&self) -> usize {
        self.parts.n()
    }

    /// `(a, k, sign)` for each block: letters `a+1..=a+k`.
    pub fn blocks(&self) -> Vec<(usize, usize, GadgetSign)> {
        self.parts
            .prefix_offsets()
            .into_iter()
            .zip(self.parts())
            .enumerate()
            .map(|(i, (a, &k))| {
                let sign = if i < self.rho {
                    GadgetSign::Minus
                } else {
                    GadgetSign::Plus
                };
                (a, k, sign)
            })
            .collect()
    }
}

impl fmt::Display for MaximalSplitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rho={}", self.parts, self.rho)
    }
}

/// The corresponding signed element `w_{λ,ρ}`.
pub fn w_lambda_rho(lambda: &MaximalSplitPartition) -> SignedPermutation {
    let n = lambda.n();
    let mut w = SignedPermutation::identity(n);
    for (a, k, sign) in lambda.blocks() {
        w = &w * &cycle_gadget(n, a, k, sign).expect("blocks fit").w;
    }
    w
}

/// Involution factorisation of `w_{λ,ρ}` assembled from the cycle gadgets.
///
/// For `flavor == D` the element must lie in `D_n`.
pub fn certificate_bd(lambda: &MaximalSplitPartition, flavor: ClassicalType) -> Result<FactorizationCertificate> {
    let n = lambda.n();
    let mut w = SignedPermutation::identity(n);
    let mut sigma = w.clone();
    let mut tau = w.clone();
    for (a, k, sign) in lambda.blocks() {
        let g = cycle_gadget(n, a, k, sign)?;
        w = &w * &g.w;
        sigma = &sigma * &g.sigma;
        tau = &tau * &g.tau;
    }
    match flavor {
        ClassicalType::A => return Err(Error::SignedInput),
        ClassicalType::D if !w.in_type_d() => return Err(Error::NotInTypeD(w.to_string())),
        _ => {}
    }
    Ok(FactorizationCertificate {
        w,
        sigma,
        tau,
        flavor,
    })
}

/// The longest element: full reversal (A), all sign changes (B), and for D the
/// sign changes on `1..n` (`n` even) or `1..n-1` (`n` odd).
pub fn longest_element(ty: ClassicalType, n: usize) -> Result<SignedPermutation> {
    match ty {
        ClassicalType::A => {
            let window: Vec<i32> = (1..=n as i32).rev().collect();
            SignedPermutation::from_window(&window)
        }
        ClassicalType::B => Ok(SignedPermutation::all_negative(n)),
        ClassicalType::D => {
            if n < 2 {
                return Err(Error::UnsupportedRank { ty: 'D', n });
            }
            let mut w = SignedPermutation::all_negative(n);
            if n % 2 == 1 {
                w = &w * &SignedPermutation::sign_change(n, n);
            }
            Ok(w)
        }
    }
}

/// Signed cycle type of `w w_0` from that of `w`: odd parts change sign.
pub fn dual_cycle_type(ct: &SignedCycleType) -> SignedCycleType {
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for &k in ct.negative_parts() {
        if k % 2 == 0 { neg.push(k) } else { pos.push(k) }
    }
    for &k in ct.positive_parts() {
        if k % 2 == 0 { pos.push(k) } else { neg.push(k) }
    }
    SignedCycleType::new(neg, pos)
}

/// `n - z + 2 Σ_{i=1}^{ν-1} (ν - i) λ_i`: the least `|Λ|` over the class.
pub fn min_lambda(ct: &SignedCycleType) -> usize {
    let neg = ct.negative_parts();
    let nu = neg.len();
    let weighted: usize = neg
        .iter()
        .take(nu.saturating_sub(1))
        .enumerate()
        .map(|(i, &l)| (nu - 1 - i) * l)
        .sum();
    ct.rank() - ct.num_cycles() + 2 * weighted
}

/// Length extrema of a `B_n` class. The D values are meaningful when the class
/// lies in `D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthFormulas {
    pub min_b: usize,
    pub min_d: usize,
    pub max_b: usize,
    pub max_d: usize,
    /// `n^2 + z_0 - 2 Σ (ν_0 - i) λ^0_i` for the dual class; the maximal D-length
    /// is this minus `2n`.
    pub max_d_printed: usize,
}

pub fn length_formulas(ct: &SignedCycleType) -> LengthFormulas {
    let n = ct.rank();
    let dual = dual_cycle_type(ct);
    let base = min_lambda(ct);
    let dual_base = min_lambda(&dual);
    // dual_base = n - z0 + 2S, so n^2 + z0 - 2S = n^2 + n - dual_base
    LengthFormulas {
        min_b: base + ct.num_negative(),
        min_d: base,
        max_b: n * n - dual_base - dual.num_negative(),
        max_d: n * n - n - dual_base,
        max_d_printed: n * n + n - dual_base,
    }
}

/// Every maximal partition of `n`: each ordering of a multiset of even
/// parts, followed by the odd parts in decreasing order.
pub fn all_maximal_partitions(n: usize) -> Vec<MaximalPartition> {
    let mut out = Vec::new();
    for parts in crate::signedperm::integer_partitions(n) {
        let even: Vec<usize> = parts.iter().copied().filter(|p| p % 2 == 0).collect();
        let odd: Vec<usize> = parts.iter().copied().filter(|p| p % 2 == 1).collect();
        let mut orders: Vec<Vec<usize>> = even.iter().copied().permutations(even.len()).collect();
        orders.sort();
        orders.dedup();
        for mut order in orders {
            order.extend(&odd);
            out.push(MaximalPartition::new(order).expect("maximal by construction"));
        }
    }
    out
}

/// Every maximal split partition of `n`.
pub fn all_maximal_split_partitions(n: usize) -> Vec<MaximalSplitPartition> {
    use crate::signedperm::integer_partitions;
    let mut out = Vec::new();
    for k in 0..=n {
        let firsts = if k == 0 { vec![vec![]] } else { integer_partitions(k) };
        let seconds = if k == n { vec![vec![]] } else { integer_partitions(n - k) };
        for first in &firsts {
            for second in &seconds {
                let mut parts = first.clone();
                parts.extend(second);
                out.push(MaximalSplitPartition::new(parts, first.len()).expect("both blocks decreasing"));
            }
        }
    }
    out
}

/// `X_k` and `Y_k` for each Kim cycle: its support below and above `⌈n/2⌉`,
/// as inclusive letter ranges (`None` when empty).
pub fn kim_halves(lambda: &MaximalPartition) -> Vec<(Option<(usize, usize)>, Option<(usize, usize)>)> {
    let half = lambda.n().div_ceil(2);
    let range = |v: Vec<usize>| Some((*v.iter().min()?, *v.iter().max()?));
    lambda
        .kim_cycles()
        .into_iter()
        .map(|c| {
            let (lo, hi): (Vec<usize>, Vec<usize>) = c.iter().partition(|&&x| x <= half);
            (range(lo), range(hi))
        })
        .collect()
}

fn within(r: Option<(usize, usize)>, x: usize) -> bool {
    r.is_some_and(|(a, b)| a <= x && x <= b)
}

/// Checks the per-cycle inversion sets behind the type A factorisation.
///
/// * `N(τ_k)` only contains `e_i - e_j` with `i, j` both in `X_k` or both in
///   `Y_k`, with equality for odd `λ_k`;
/// * `N(σ_k)` is exactly: the top `μ = ⌊λ_k/2⌋` letters of `X_k` against the
///   letters strictly between the halves, those letters against the bottom `μ`
///   letters of `Y_k`, and the full block of pairs between the two (the last
///   family is not listed in the printed description).
///
/// Returns one message per violation.
pub fn prop24_containments(lambda: &MaximalPartition) -> Vec<String> {
    let n = lambda.n();
    let mut bad = Vec::new();
    let cycles = lambda.kim_cycles();
    for (k, (cycle, (xs, ys))) in cycles.iter().zip(kim_halves(lambda)).enumerate() {
        let (sigma, tau) = sigma_tau_cycle_a(n, cycle);
        let nt = inversion_set(&tau, ClassicalType::A).expect("unsigned");
        let ns = inversion_set(&sigma, ClassicalType::A).expect("unsigned");
        let same_half = |i: usize, j: usize| (within(xs, i) && within(xs, j)) || (within(ys, i) && within(ys, j));
        for r in nt.iter() {
            let (i, j) = r.letters();
            if !same_half(i, j) {
                bad.push(format!("cycle {k}: {r} in N(tau) crosses halves"));
            }
        }
        if cycle.len() % 2 == 1 {
            let expected = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).filter(|&(i, j)| same_half(i, j)).count();
            if expected != nt.len() {
                bad.push(format!("cycle {k}: |N(tau)| = {} but halves give {expected}", nt.len()));
            }
        }
        let mu = cycle.len() / 2;
        let (Some((_, xbar)), Some((ylow, _))) = (xs, ys) else {
            if !ns.is_empty() {
                bad.push(format!("cycle {k}: sigma should be trivial"));
            }
            continue;
        };
        let top_x = |i: usize| i + mu > xbar && i <= xbar;
        let bottom_y = |j: usize| j >= ylow && j < ylow + mu;
        let expected: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let between = |x: usize| xbar < x && x < ylow;
                (top_x(i) && between(j)) || (between(i) && bottom_y(j)) || (top_x(i) && bottom_y(j))
            })
            .collect();
        let found: Vec<(usize, usize)> = ns.iter().map(|r| r.letters()).collect();
        if found != expected {
            bad.push(format!("cycle {k}: N(sigma) = {ns} differs from the predicted set"));
        }
    }
    bad
}

/// `Λ(h_{[a,b]}) = {e_i + e_j : a < i < j <= a+b} ∪ {e_i ± e_j : a < i <= a+b < j <= n}`.
///
/// The printed display bounds the second family by `i < a+b`; `i = a+b` is
/// needed since `h_{[a,b]}(e_{a+b}) = -e_{a+1}`.
pub fn h_interval_lambda(n: usize, a: usize, b: usize) -> InversionSet {
    let mut roots = Vec::new();
    for i in a + 1..=a + b {
        for j in i + 1..=a + b {
            roots.push(Root::sum(i, j));
        }
        for j in a + b + 1..=n {
            roots.push(Root::sum(i, j));
            roots.push(Root::difference(i, j));
        }
    }
    InversionSet::from_roots(n, roots).expect("positive roots of rank n")
}

/// Checks the per-block inversion sets behind the B/D factorisation, with
/// `μ_k` the prefix offset of block `k`:
///
/// * `N(τ_k) ⊆ {e_i - e_j : μ_k < i < j <= μ_{k+1}}`;
/// * `σ_k = h_{[a,b]}` with `a >= μ_k`, `a + b = μ_{k+1}`, and
///   `Σ(σ_k) = {e_{a+1}, ..., e_{a+b}}`;
/// * `Λ(σ_k)` equals [`h_interval_lambda`] and lies in
///   `{e_i + e_j : μ_k < i < j <= μ_{k+1}} ∪ {e_i ± e_j : μ_k < i <= μ_{k+1} < j}`.
pub fn prop42_containments(lambda: &MaximalSplitPartition) -> Vec<String> {
    let n = lambda.n();
    let mut bad = Vec::new();
    for (k, (mu, len, sign)) in lambda.blocks().into_iter().enumerate() {
        let next = mu + len;
        let g = cycle_gadget(n, mu, len, sign).expect("blocks fit");
        let nt = crate::roots::inversion_set_b(&g.tau);
        for r in nt.iter() {
            let ok = match r {
                Root::Long { i, j, sign_j, .. } => sign_j < 0 && mu < i as usize && (j as usize) <= next,
                Root::Short { .. } => false,
            };
            if !ok {
                bad.push(format!("block {k}: {r} in N(tau) outside the block"));
            }
        }
        let (a, b) = match sign {
            GadgetSign::Minus => (mu, len),
            GadgetSign::Plus => (mu + 1, len - 1),
        };
        if h_interval(n, a, b).as_ref() != Ok(&g.sigma) {
            bad.push(format!("block {k}: sigma is not h_[{a},{b}]"));
        }
        let sigma_short: Vec<usize> = crate::roots::sigma_set(&g.sigma).iter().map(|r| r.letters().0).collect();
        if sigma_short != (a + 1..=a + b).collect::<Vec<_>>() {
            bad.push(format!("block {k}: Σ(sigma) = {sigma_short:?}"));
        }
        let lam = crate::roots::lambda_set(&g.sigma);
        if lam != h_interval_lambda(n, a, b) {
            bad.push(format!("block {k}: Λ(sigma) = {lam} differs from the interval formula"));
        }
        for r in lam.iter() {
            let (i, j) = r.letters();
            let inside = mu < i && j <= next && matches!(r, Root::Long { sign_j: 1, .. });
            let outside = mu < i && i <= next && next < j;
            if !(inside || outside) {
                bad.push(format!("block {k}: {r} in Λ(sigma) outside the predicted region"));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{length_a, length_b, length_d};

    fn sp(text: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(text, Some(n)).unwrap()
    }

    fn ct(text: &str) -> SignedCycleType {
        text.parse().unwrap()
    }

    #[test]
    fn kim_sequences() {
        assert_eq!(kim_sequence(9), vec![1, 9, 2, 8, 3, 7, 4, 6, 5]);
        assert_eq!(kim_sequence(1), vec![1]);
        assert_eq!(kim_sequence(13), vec![1, 13, 2, 12, 3, 11, 4, 10, 5, 9, 6, 8, 7]);
    }

    #[test]
    fn corresponding_elements() {
        let w = corresponding_element_a(&MaximalPartition::new(vec![4, 5]).unwrap());
        assert_eq!(w, sp("(1,9,2,8)(3,7,4,6,5)", 9));
        let w = corresponding_element_a(&MaximalPartition::new(vec![8, 5]).unwrap());
        assert_eq!(w, sp("(1,13,2,12,3,11,4,10)(5,9,6,8,7)", 13));
        let w = corresponding_element_a(&MaximalPartition::new(vec![1; 5]).unwrap());
        assert!(w.is_identity());
    }

    #[test]
    fn maximal_partition_validation() {
        assert!(MaximalPartition::new(vec![2, 4, 5, 3, 3, 1]).is_ok());
        assert!(MaximalPartition::new(vec![3, 2]).is_err());
        assert!(MaximalPartition::new(vec![3, 5]).is_err());
        assert!(MaximalPartition::new(vec![0, 3]).is_err());
        assert_eq!(MaximalPartition::normalize(&[1, 2, 3, 4]).unwrap().parts(), &[4, 2, 3, 1]);
    }

    #[test]
    fn sigma_tau_examples() {
        let (s, t) = sigma_tau_cycle_a(13, &[1, 13, 2, 12, 3, 11, 4, 10]);
        assert_eq!(s, sp("(1,10)(2,11)(3,12)(4,13)", 13));
        assert_eq!(t, sp("(1,4)(2,3)(11,13)", 13));
        let (s, t) = sigma_tau_cycle_a(13, &[5, 9, 6, 8, 7]);
        assert_eq!(s, sp("(6,8)(7,9)", 13));
        assert_eq!(t, sp("(5,7)(8,9)", 13));
        let (s, t) = sigma_tau_cycle_a(4, &[3]);
        assert!(s.is_identity() && t.is_identity());
    }

    #[test]
    fn certificate_a_small() {
        let cert = certificate_a(&MaximalPartition::new(vec![4, 5]).unwrap());
        assert!(cert.check().is_valid());
        assert_eq!(
            length_a(&cert.w).unwrap(),
            length_a(&cert.sigma).unwrap() + length_a(&cert.tau).unwrap()
        );
        let cert = certificate_a(&MaximalPartition::new(vec![1, 1, 1]).unwrap());
        assert!(cert.w.is_identity() && cert.sigma.is_identity() && cert.tau.is_identity());
    }

    #[test]
    fn interval_reversals() {
        assert_eq!(g_interval(7, 1, 6).unwrap(), sp("(+2 +7)(+3 +6)(+4 +5)", 7));
        assert_eq!(h_interval(8, 3, 5).unwrap(), sp("(-4 -8)(-5 -7)(-6)", 8));
        assert!(g_interval(5, 2, 1).unwrap().is_identity());
        assert!(g_interval(5, 3, 3).is_err());
        assert!(h_interval(5, 0, 6).is_err());
    }

    #[test]
    fn gadgets() {
        let g = cycle_gadget(1, 0, 1, GadgetSign::Minus).unwrap();
        assert_eq!(g.w, sp("(-1)", 1));
        assert_eq!(g.sigma, sp("(-1)", 1));
        assert!(g.tau.is_identity());

        let g = cycle_gadget(2, 0, 2, GadgetSign::Plus).unwrap();
        assert_eq!(g.w, sp("(-1,+2)", 2));
        assert_eq!(g.sigma, sp("(-2)", 2));
        assert_eq!(g.tau, sp("(+1 +2)", 2));

        for n in 1..=6 {
            for a in 0..n {
                for k in 1..=n - a {
                    for sign in [GadgetSign::Minus, GadgetSign::Plus] {
                        let g = cycle_gadget(n, a, k, sign).unwrap();
                        assert_eq!(&g.sigma * &g.tau, g.w);
                        assert!(g.sigma.squares_to_identity() && g.tau.squares_to_identity());
                    }
                }
            }
        }
    }

    #[test]
    fn u_c_examples() {
        let c = ct("2,4;3");
        let u = u_c(&c);
        assert_eq!(u, sp("(+1 +2 +3)(+4 +5 +6 -7)(+8 -9)", 9));
        assert_eq!(u.cycle_type(), c);
        assert_eq!(length_b(&u), 12);
        assert_eq!(length_formulas(&c).min_b, 12);
        assert!(u_c(&ct(";1,1,1,1")).is_identity());
    }

    #[test]
    fn u_c_t_examples() {
        let c = ct(";2,2");
        let (u, ut) = (u_c(&c), u_c_t(&c));
        assert_ne!(u, ut);
        assert_eq!(length_d(&u), length_d(&ut));
        assert_eq!(length_b(&ut), length_b(&u) + 2);
        let t = SignedPermutation::sign_change(4, 4);
        assert_eq!(ut.conjugate_by(&t), u);
    }

    #[test]
    fn w_lambda_rho_examples() {
        let msp = MaximalSplitPartition::new(vec![5, 2, 4, 3], 2).unwrap();
        assert_eq!(
            w_lambda_rho(&msp),
            sp("(-1 -2 -3 -4 -5)(-6 -7)(-8 -9 -10 +11)(-12 -13 +14)", 14)
        );
        let msp = MaximalSplitPartition::new(vec![1], 1).unwrap();
        assert_eq!(w_lambda_rho(&msp), SignedPermutation::all_negative(1));
        let msp = MaximalSplitPartition::new(vec![3], 0).unwrap();
        let w = w_lambda_rho(&msp);
        assert_eq!(w, sp("(-1 -2 +3)", 3));
        assert_eq!(length_b(&w), 6);
        assert!(MaximalSplitPartition::new(vec![2, 3], 2).is_err());
        assert!(MaximalSplitPartition::new(vec![2, 3], 1).is_ok());
        assert!(MaximalSplitPartition::new(vec![2, 3], 3).is_err());
    }

    #[test]
    fn normalizer_hits_every_class() {
        for n in 1..=8 {
            for c in SignedCycleType::all(n) {
                let msp = MaximalSplitPartition::from_cycle_type(&c);
                assert_eq!(w_lambda_rho(&msp).cycle_type(), c);
            }
        }
    }

    #[test]
    fn certificate_bd_examples() {
        let msp = MaximalSplitPartition::new(vec![5, 2, 4, 3], 2).unwrap();
        let cert = certificate_bd(&msp, ClassicalType::B).unwrap();
        assert!(cert.check().is_valid());
        assert_eq!(length_b(&cert.w), length_b(&cert.sigma) + length_b(&cert.tau));
        let msp = MaximalSplitPartition::new(vec![1, 1, 1], 0).unwrap();
        let cert = certificate_bd(&msp, ClassicalType::D).unwrap();
        assert!(cert.w.is_identity() && cert.sigma.is_identity() && cert.tau.is_identity());
        let msp = MaximalSplitPartition::new(vec![1], 1).unwrap();
        assert!(matches!(certificate_bd(&msp, ClassicalType::D), Err(Error::NotInTypeD(_))));
    }

    #[test]
    fn longest_elements() {
        for n in 1..=6 {
            assert_eq!(length_b(&longest_element(ClassicalType::B, n).unwrap()), n * n);
        }
        for n in 2..=6 {
            let w0 = longest_element(ClassicalType::D, n).unwrap();
            assert!(w0.in_type_d());
            assert_eq!(length_d(&w0), n * n - n);
        }
        let w0 = longest_element(ClassicalType::A, 4).unwrap();
        assert_eq!(w0.window(), &[4, 3, 2, 1]);
        assert_eq!(length_a(&w0).unwrap(), 6);
        assert!(longest_element(ClassicalType::D, 1).is_err());
    }

    #[test]
    fn dual_types() {
        assert_eq!(dual_cycle_type(&ct("2,4;3")), ct("2,3,4;"));
        assert_eq!(dual_cycle_type(&ct(";1,1,1")), ct("1,1,1;"));
    }

    #[test]
    fn enumerators() {
        // 4 = 4 | 2+2 | 3+1 | 2+1+1 | 1+1+1+1
        assert_eq!(all_maximal_partitions(4).len(), 5);
        let five: Vec<Vec<usize>> = all_maximal_partitions(5).iter().map(|p| p.parts().to_vec()).collect();
        assert!(five.contains(&vec![2, 3]) && five.contains(&vec![4, 1]) && !five.contains(&vec![3, 2]));
        assert_eq!(all_maximal_partitions(6).iter().filter(|p| p.parts() == [2, 4]).count(), 1);
        // pairs of partitions (p of k, q of n-k): sum over k of p(k) p(n-k)
        assert_eq!(all_maximal_split_partitions(3).len(), 10);
        for n in 1..=7 {
            let classes: std::collections::HashSet<_> = all_maximal_split_partitions(n)
                .iter()
                .map(|l| w_lambda_rho(l).cycle_type())
                .collect();
            assert_eq!(classes.len(), SignedCycleType::all(n).len());
        }
    }

    #[test]
    fn type_a_containments() {
        for n in 1..=8 {
            for lambda in all_maximal_partitions(n) {
                assert_eq!(prop24_containments(&lambda), Vec::<String>::new(), "{lambda}");
            }
        }
    }

    #[test]
    fn printed_sigma_set_misses_the_cross_block() {
        // λ = (8,5): σ(w_1) = (1,10)(2,11)(3,12)(4,13), μ = 4, X_1 = [1,4], Y_1 = [10,13].
        // The printed description lists 4·5 + 5·4 = 40 roots; the 4·4 pairs
        // between the swapped letters are inverted as well.
        let lambda = MaximalPartition::new(vec![8, 5]).unwrap();
        assert_eq!(kim_halves(&lambda)[0], (Some((1, 4)), Some((10, 13))));
        let (s, _) = sigma_tau_cycle_a(13, &lambda.kim_cycles()[0]);
        assert_eq!(length_a(&s).unwrap(), 56);
        assert!(prop24_containments(&lambda).is_empty());
    }

    #[test]
    fn type_bd_containments() {
        for n in 1..=6 {
            for lambda in all_maximal_split_partitions(n) {
                assert_eq!(prop42_containments(&lambda), Vec::<String>::new(), "{lambda}");
            }
        }
    }

    #[test]
    fn h_interval_lambda_needs_the_endpoint() {
        for n in 1..=7 {
            for a in 0..n {
                for b in 1..=n - a {
                    let h = h_interval(n, a, b).unwrap();
                    let lam = crate::roots::lambda_set(&h);
                    assert_eq!(lam, h_interval_lambda(n, a, b));
                    // With the bound `i < a+b` the roots e_{a+b} ± e_j (j > a+b) drop out.
                    let missed = lam.iter().filter(|r| r.letters().0 == a + b).count();
                    assert_eq!(missed, 2 * (n - a - b));
                }
            }
        }
    }

    #[test]
    fn formulas_on_small_classes() {
        let id = length_formulas(&ct(";1,1,1,1"));
        assert_eq!((id.min_b, id.max_b, id.min_d, id.max_d), (0, 0, 0, 0));
        assert_eq!(id.max_d_printed, 8);
        assert_eq!(length_formulas(&ct(";3")).max_b, 6);
    }
}
