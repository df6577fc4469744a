//! Brute-force reference implementations used by the integration tests.
//! Elements are plain windows `w[i-1] = w(i)`; roots are coefficient vectors.
//! Nothing here calls into the library except the two conversion helpers.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use coxcess::roots::ClassicalType;
use coxcess::SignedPermutation;

pub type W = Vec<i32>;

pub fn to_sp(w: &[i32]) -> SignedPermutation {
    SignedPermutation::from_window(w).unwrap()
}

pub fn from_sp(w: &SignedPermutation) -> W {
    w.window().iter().map(|&x| x as i32).collect()
}

pub fn identity(n: usize) -> W {
    (1..=n as i32).collect()
}

/// `(gh)(i) = g(h(i))`.
pub fn compose(g: &[i32], h: &[i32]) -> W {
    h.iter()
        .map(|&v| v.signum() * g[v.unsigned_abs() as usize - 1])
        .collect()
}

pub fn inverse(w: &[i32]) -> W {
    let mut out = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        out[v.unsigned_abs() as usize - 1] = v.signum() * (i as i32 + 1);
    }
    out
}

pub fn is_involution(w: &[i32]) -> bool {
    compose(w, w) == identity(w.len())
}

pub fn negatives(w: &[i32]) -> usize {
    w.iter().filter(|&&v| v < 0).count()
}

fn permutations(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as i32);
            out.push(q);
        }
    }
    out
}

pub fn all_elements(ty: ClassicalType, n: usize) -> Vec<W> {
    let perms = permutations(n);
    if ty == ClassicalType::A {
        return perms;
    }
    let mut out = Vec::new();
    for p in &perms {
        for mask in 0u32..(1 << n) {
            let w: W = p
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            if ty == ClassicalType::B || negatives(&w) % 2 == 0 {
                out.push(w);
            }
        }
    }
    out
}

pub fn generators(ty: ClassicalType, n: usize) -> Vec<W> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut s = identity(n);
        s.swap(i, i + 1);
        gens.push(s);
    }
    match ty {
        ClassicalType::A => {}
        ClassicalType::B => {
            let mut s = identity(n);
            s[n - 1] = -s[n - 1];
            gens.push(s);
        }
        ClassicalType::D if n >= 2 => {
            let mut s = identity(n);
            s[n - 2] = -(n as i32);
            s[n - 1] = -(n as i32 - 1);
            gens.push(s);
        }
        ClassicalType::D => {}
    }
    gens
}

/// Positive roots as coefficient vectors: those whose first nonzero
/// coordinate is positive.
pub fn positive_roots(ty: ClassicalType, n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 0..n {
        if ty == ClassicalType::B {
            let mut v = vec![0; n];
            v[i] = 1;
            out.push(v);
        }
        for j in i + 1..n {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            out.push(v.clone());
            if ty != ClassicalType::A {
                v[j] = 1;
                out.push(v);
            }
        }
    }
    out
}

pub fn act(w: &[i32], v: &[i32]) -> Vec<i32> {
    let mut out = vec![0; v.len()];
    for (i, &c) in v.iter().enumerate() {
        let t = w[i];
        out[t.unsigned_abs() as usize - 1] += t.signum() * c;
    }
    out
}

pub fn is_positive(v: &[i32]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

pub struct Oracle {
    pub ty: ClassicalType,
    pub n: usize,
    pub roots: Vec<Vec<i32>>,
}

impl Oracle {
    pub fn new(ty: ClassicalType, n: usize) -> Self {
        Oracle { ty, n, roots: positive_roots(ty, n) }
    }

    /// Indices of the positive roots sent negative.
    pub fn inversions(&self, w: &[i32]) -> HashSet<usize> {
        (0..self.roots.len())
            .filter(|&k| !is_positive(&act(w, &self.roots[k])))
            .collect()
    }

    pub fn length(&self, w: &[i32]) -> usize {
        self.roots.iter().filter(|r| !is_positive(&act(w, r))).count()
    }

    pub fn index(&self, v: &[i32]) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }

    /// `w(set)`, or `None` if some image is a negative root.
    pub fn image_set(&self, w: &[i32], set: &HashSet<usize>) -> Option<HashSet<usize>> {
        set.iter().map(|&k| self.index(&act(w, &self.roots[k]))).collect()
    }
}

/// Conjugacy classes as orbits of `w ↦ s w s` over the generators.
pub fn classes(ty: ClassicalType, n: usize) -> Vec<Vec<W>> {
    let gens = generators(ty, n);
    let mut seen: HashSet<W> = HashSet::new();
    let mut out = Vec::new();
    for w in all_elements(ty, n) {
        if seen.contains(&w) {
            continue;
        }
        seen.insert(w.clone());
        let mut class = vec![w.clone()];
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = compose(&compose(s, &x), s);
                if seen.insert(y.clone()) {
                    class.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out.push(class);
    }
    out
}

/// Involutions of the group with their lengths.
pub fn involutions(oracle: &Oracle) -> Vec<(W, usize)> {
    all_elements(oracle.ty, oracle.n)
        .into_iter()
        .filter(|w| is_involution(w))
        .map(|w| {
            let l = oracle.length(&w);
            (w, l)
        })
        .collect()
}

/// `min ℓ(σ) + ℓ(τ) - ℓ(w)` over involution pairs with `στ = w`.
pub fn excess(oracle: &Oracle, invs: &[(W, usize)], w: &[i32]) -> usize {
    let lw = oracle.length(w);
    invs.iter()
        .filter_map(|(s, ls)| {
            let t = compose(s, w);
            is_involution(&t).then(|| ls + oracle.length(&t) - lw)
        })
        .min()
        .expect("some factorization exists")
}

/// Per-class statistics: (size, min length, max length, max count, excess
/// histogram over the max-length elements).
pub type Profile = (usize, usize, usize, usize, Vec<(usize, usize)>);

pub fn profile(oracle: &Oracle, invs: &[(W, usize)], class: &[W]) -> Profile {
    let lengths: Vec<usize> = class.iter().map(|w| oracle.length(w)).collect();
    let min = *lengths.iter().min().unwrap();
    let max = *lengths.iter().max().unwrap();
    let mut hist: HashMap<usize, usize> = HashMap::new();
    for (w, &l) in class.iter().zip(&lengths) {
        if l == max {
            *hist.entry(excess(oracle, invs, w)).or_default() += 1;
        }
    }
    let mut hist: Vec<_> = hist.into_iter().collect();
    hist.sort();
    let count = lengths.iter().filter(|&&l| l == max).count();
    (class.len(), min, max, count, hist)
}

/// Simple roots matching the order of [`generators`].
pub fn simple_roots(ty: ClassicalType, n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut v = vec![0; n];
        v[i] = 1;
        v[i + 1] = -1;
        out.push(v);
    }
    match ty {
        ClassicalType::A => {}
        ClassicalType::B => {
            let mut v = vec![0; n];
            v[n - 1] = 1;
            out.push(v);
        }
        ClassicalType::D => {
            if n >= 2 {
                let mut v = vec![0; n];
                v[n - 2] = 1;
                v[n - 1] = 1;
                out.push(v);
            }
        }
    }
    out
}

/// A reduced word (1-based generator labels) found by stripping right
/// descents: `w s_i` is shorter exactly when `w(α_i)` is negative.
pub fn reduced_word(ty: ClassicalType, w: &[i32]) -> Vec<usize> {
    let n = w.len();
    let gens = generators(ty, n);
    let simple = simple_roots(ty, n);
    let mut x = w.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..gens.len()).find(|&i| !is_positive(&act(&x, &simple[i]))) {
        word.push(i + 1);
        x = compose(&x, &gens[i]);
    }
    word.reverse();
    word
}
