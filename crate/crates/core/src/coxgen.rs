//! A small finite Coxeter group engine driven by a Coxeter matrix.
//!
//! Roots live in the span of the simple roots with coefficients in `ℤ[φ]`
//! (`φ² = φ + 1`), which covers every finite type except the dihedral groups
//! `I_2(m)`, `m ∉ {2,3,4,5,6}`; those use [`Dihedral`]. An element is stored as
//! the signed permutation it induces on the positive roots, one byte per root:
//! code `k < N` is `+β_k`, code `k + N` is `-β_k`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::excess::Budget;
use crate::par::{self, Exec};

/// `a + bφ` with `φ = (1 + √5)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPhi {
    pub a: i64,
    pub b: i64,
}

impl ZPhi {
    pub const ZERO: ZPhi = ZPhi { a: 0, b: 0 };
    pub const ONE: ZPhi = ZPhi { a: 1, b: 0 };
    pub const PHI: ZPhi = ZPhi { a: 0, b: 1 };

    pub fn int(a: i64) -> Self {
        ZPhi { a, b: 0 }
    }

    /// Exact sign of the real number `a + bφ`.
    pub fn signum(self) -> i8 {
        // 2(a + bφ) = p + q√5
        let (p, q) = (2 * self.a + self.b, self.b);
        let sp = p.signum();
        let sq = q.signum();
        if sp >= 0 && sq >= 0 {
            return (sp + sq).signum() as i8;
        }
        if sp <= 0 && sq <= 0 {
            return -1;
        }
        let (p2, q2) = ((p as i128) * (p as i128), 5 * (q as i128) * (q as i128));
        if sp > 0 {
            if p2 > q2 { 1 } else { -1 }
        } else if q2 > p2 {
            1
        } else {
            -1
        }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

impl Add for ZPhi {
    type Output = ZPhi;
    fn add(self, o: ZPhi) -> ZPhi {
        ZPhi { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for ZPhi {
    type Output = ZPhi;
    fn sub(self, o: ZPhi) -> ZPhi {
        ZPhi { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi { a: -self.a, b: -self.b }
    }
}

impl Mul for ZPhi {
    type Output = ZPhi;
    fn mul(self, o: ZPhi) -> ZPhi {
        let bd = self.b * o.b;
        ZPhi {
            a: self.a * o.a + bd,
            b: self.a * o.b + self.b * o.a + bd,
        }
    }
}

impl fmt::Display for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}φ"),
            (a, b) => write!(f, "{a}{b:+}φ"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let r = m.len();
        if r == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {r}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 1 {
                    return Err(Error::InvalidMatrix(format!("m[{0}][{0}] must be 1", i + 1)));
                }
                if i != j && v < 2 {
                    return Err(Error::InvalidMatrix(format!("m[{}][{}] = {v} must be at least 2", i + 1, j + 1)));
                }
                if m[j][i] != v {
                    return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// Rank on the first line, then `r` rows of `r` integers. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut numbers = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
            .map(|t| t.parse::<u32>().map_err(|_| Error::parse(t, "expected a non-negative integer")));
        let r = numbers
            .next()
            .ok_or_else(|| Error::InvalidMatrix("missing rank".into()))?? as usize;
        if r == 0 || r > 8 {
            return Err(Error::InvalidMatrix(format!("rank {r} outside 1..=8")));
        }
        let flat: Vec<u32> = numbers.collect::<Result<_>>()?;
        if flat.len() != r * r {
            return Err(Error::InvalidMatrix(format!("expected {} entries, found {}", r * r, flat.len())));
        }
        Self::new(flat.chunks(r).map(<[u32]>::to_vec).collect())
    }

    fn from_edges(r: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut m = vec![vec![2; r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, v) in edges {
            m[i - 1][j - 1] = v;
            m[j - 1][i - 1] = v;
        }
        CoxeterMatrix { m }
    }

    /// `A<n> B<n> D<n> E6 E7 E8 F4 H3 H4 I2(<m>)`, Bourbaki numbering.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.trim();
        let unknown = || Error::UnknownGroup(name.to_string());
        if let Some(m) = name
            .strip_prefix("I2(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| name.strip_prefix("I2_"))
        {
            let m: u32 = m.parse().map_err(|_| unknown())?;
            if m < 2 {
                return Err(unknown());
            }
            return Ok(Self::from_edges(2, &[(1, 2, m)]));
        }
        let (letter, rank) = name.split_at(1.min(name.len()));
        let n: usize = rank.parse().map_err(|_| unknown())?;
        let chain = |n: usize| -> Vec<(usize, usize, u32)> { (1..n).map(|i| (i, i + 1, 3)).collect() };
        let exceptional_e = |n: usize| {
            let mut e = vec![(1, 3, 3), (2, 4, 3)];
            e.extend((3..n).map(|i| (i, i + 1, 3)));
            Self::from_edges(n, &e)
        };
        match (letter, n) {
            ("A", 1..=8) => Ok(Self::from_edges(n, &chain(n))),
            ("B" | "C", 2..=8) => {
                let mut e = chain(n - 1);
                e.push((n - 1, n, 4));
                Ok(Self::from_edges(n, &e))
            }
            ("D", 2..=8) => {
                let mut e = chain(n - 1);
                if n >= 3 {
                    e.push((n - 2, n, 3));
                }
                Ok(Self::from_edges(n, &e))
            }
            ("E", 6..=8) => Ok(exceptional_e(n)),
            ("F", 4) => Ok(Self::from_edges(4, &[(1, 2, 3), (2, 3, 4), (3, 4, 3)])),
            ("G", 2) => Ok(Self::from_edges(2, &[(1, 2, 6)])),
            ("H", 3) => Ok(Self::from_edges(3, &[(1, 2, 5), (2, 3, 3)])),
            ("H", 4) => Ok(Self::from_edges(4, &[(1, 2, 5), (2, 3, 3), (3, 4, 3)])),
            _ => Err(unknown()),
        }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.rank());
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    /// `c_ij` with `s_i(α_j) = α_j + c_ij α_i`.
    fn cartan(&self, i: usize, j: usize) -> Result<ZPhi> {
        if i == j {
            return Ok(ZPhi::int(-2));
        }
        Ok(match (self.m[i][j], i < j) {
            (2, _) => ZPhi::ZERO,
            (3, _) => ZPhi::ONE,
            (4, true) | (6, true) => ZPhi::ONE,
            (4, false) => ZPhi::int(2),
            (6, false) => ZPhi::int(3),
            (5, _) => ZPhi::PHI,
            (m, _) => {
                return Err(Error::InvalidMatrix(format!(
                    "m = {m} needs 2cos(π/{m}); only 2..=6 are supported here, use I2({m}) for dihedral groups"
                )))
            }
        })
    }
}

/// Largest positive root count representable by the one-byte root codes.
pub const MAX_POSITIVE_ROOTS: usize = 127;

/// Positive roots and the action of the simple reflections on them.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    roots: Vec<Vec<ZPhi>>,
    /// `reflect[i][k]` is the code of `s_i(β_k)`.
    reflect: Vec<Vec<u8>>,
}

impl RootSystem {
    /// Closes the simple roots under the simple reflections. Roots `0..rank` are
    /// the simple roots.
    pub fn build(matrix: &CoxeterMatrix, ceiling: usize) -> Result<Self> {
        let r = matrix.rank();
        let ceiling = ceiling.min(MAX_POSITIVE_ROOTS);
        let mut c = vec![vec![ZPhi::ZERO; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = matrix.cartan(i, j)?;
            }
        }
        let apply = |i: usize, beta: &[ZPhi]| -> Vec<ZPhi> {
            let mut out = beta.to_vec();
            let mut bi = -beta[i];
            for j in 0..r {
                if j != i {
                    bi = bi + c[i][j] * beta[j];
                }
            }
            out[i] = bi;
            out
        };
        let mut roots: Vec<Vec<ZPhi>> = (0..r)
            .map(|i| (0..r).map(|j| if i == j { ZPhi::ONE } else { ZPhi::ZERO }).collect())
            .collect();
        let mut index: HashMap<Vec<ZPhi>, usize> = roots.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..r {
                if k == i {
                    continue;
                }
                let image = apply(i, &roots[k]);
                if image.iter().any(|x| x.signum() < 0) {
                    return Err(Error::InvalidMatrix("reflection produced a mixed-sign root".into()));
                }
                if !index.contains_key(&image) {
                    if roots.len() >= ceiling {
                        return Err(Error::NonFinite { ceiling });
                    }
                    index.insert(image.clone(), roots.len());
                    roots.push(image);
                }
            }
            k += 1;
        }
        let n = roots.len();
        let reflect = (0..r)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        if k == i {
                            (i + n) as u8
                        } else {
                            index[&apply(i, &roots[k])] as u8
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(RootSystem { rank: r, roots, reflect })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_count(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<ZPhi>] {
        &self.roots
    }

    /// `s_i` as a root permutation.
    pub fn generator(&self, i: usize) -> Result<ReflectionElement> {
        let codes = self
            .reflect
            .get(i)
            .ok_or(Error::BadGenerator { index: i, rank: self.rank })?;
        Ok(ReflectionElement {
            codes: codes.clone().into_boxed_slice(),
        })
    }

    pub fn identity(&self) -> ReflectionElement {
        ReflectionElement {
            codes: (0..self.roots.len() as u8).collect(),
        }
    }

    /// Left-to-right product of simple reflections (0-based indices).
    pub fn element_from_word(&self, word: &[usize]) -> Result<ReflectionElement> {
        let mut w = self.identity();
        for &i in word {
            w = w.compose(&self.generator(i)?);
        }
        Ok(w)
    }
}

/// An element as its signed permutation of the positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReflectionElement {
    codes: Box<[u8]>,
}

impl ReflectionElement {
    fn n(&self) -> usize {
        self.codes.len()
    }

    /// Image of `β_k` as `(index, is_positive)`.
    pub fn image(&self, k: usize) -> (usize, bool) {
        let n = self.n();
        let c = self.codes[k] as usize;
        if c < n { (c, true) } else { (c - n, false) }
    }

    fn apply_code(&self, c: u8) -> u8 {
        let n = self.n() as u8;
        if c < n {
            self.codes[c as usize]
        } else {
            let d = self.codes[(c - n) as usize];
            if d < n { d + n } else { d - n }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        ReflectionElement {
            codes: other.codes.iter().map(|&c| self.apply_code(c)).collect(),
        }
    }

    /// Number of positive roots sent negative.
    pub fn length(&self) -> usize {
        let n = self.n() as u8;
        self.codes.iter().filter(|&&c| c >= n).count()
    }

    pub fn is_identity(&self) -> bool {
        self.codes.iter().enumerate().all(|(k, &c)| c as usize == k)
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut codes = vec![0u8; n];
        for k in 0..n {
            let (j, pos) = self.image(k);
            codes[j] = if pos { k as u8 } else { (k + n) as u8 };
        }
        ReflectionElement {
            codes: codes.into_boxed_slice(),
        }
    }

    pub fn order(&self) -> usize {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }

    fn key(&self, rank: usize) -> u64 {
        self.codes[..rank].iter().fold(0u64, |acc, &c| acc << 8 | c as u64)
    }
}

/// The operations a census needs. Elements are indices `0..order()`, with
/// the identity at 0.
pub trait FiniteCoxeterGroup: Sync {
    fn name(&self) -> String;
    fn rank(&self) -> usize;
    fn order(&self) -> usize;
    fn length(&self, x: usize) -> usize;
    fn mul(&self, x: usize, y: usize) -> usize;
    fn inverse(&self, x: usize) -> usize;
    /// `s_i x s_i`.
    fn conjugate_by_generator(&self, x: usize, i: usize) -> usize;
    fn generator(&self, i: usize) -> usize;

    fn identity(&self) -> usize {
        0
    }

    fn is_involution(&self, x: usize) -> bool {
        self.inverse(x) == x
    }

    fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity() {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Left-to-right product of 0-based generator indices.
    fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut x = self.identity();
        for &i in word {
            if i >= self.rank() {
                return Err(Error::BadGenerator { index: i, rank: self.rank() });
            }
            x = self.mul(x, self.generator(i));
        }
        Ok(x)
    }
}

/// A finite Coxeter group enumerated through its root permutations.
pub struct CoxeterGroup {
    name: String,
    matrix: CoxeterMatrix,
    roots: RootSystem,
    codes: Vec<u8>,
    index: HashMap<u64, u32>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    length: Vec<u16>,
}

impl CoxeterGroup {
    pub fn build(name: impl Into<String>, matrix: &CoxeterMatrix, budget: &Budget) -> Result<Self> {
        let roots = RootSystem::build(matrix, MAX_POSITIVE_ROOTS)?;
        let r = roots.rank();
        let n = roots.positive_count();
        let gens: Vec<ReflectionElement> = (0..r).map(|i| roots.generator(i)).collect::<Result<_>>()?;

        let id = roots.identity();
        let mut codes: Vec<u8> = id.codes.to_vec();
        let mut index = HashMap::from([(id.key(r), 0u32)]);
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); r];
        let mut parent: Vec<(u32, u8)> = vec![(0, 0)];
        let mut length: Vec<u16> = vec![0];
        let mut x = 0usize;
        while x * n < codes.len() {
            let elem = ReflectionElement {
                codes: codes[x * n..(x + 1) * n].into(),
            };
            for (g, gen) in gens.iter().enumerate() {
                let key = (0..r).fold(0u64, |acc, i| acc << 8 | elem.apply_code(gen.codes[i]) as u64);
                let y = match index.get(&key) {
                    Some(&y) => y,
                    None => {
                        let y = length.len() as u32;
                        if y as u64 >= budget.max_group_order {
                            return Err(Error::Budget {
                                what: "group order",
                                needed: y as u64 + 1,
                                limit: budget.max_group_order,
                            });
                        }
                        let prod = elem.compose(gen);
                        length.push(prod.length() as u16);
                        codes.extend_from_slice(&prod.codes);
                        index.insert(key, y);
                        parent.push((x as u32, g as u8));
                        y
                    }
                };
                right[g].push(y);
            }
            x += 1;
        }
        let order = length.len();
        let mut group = CoxeterGroup {
            name: name.into(),
            matrix: matrix.clone(),
            roots,
            codes,
            index,
            right,
            left: Vec::new(),
            inverse: Vec::new(),
            length,
        };
        group.left = (0..r)
            .map(|g| {
                (0..order)
                    .map(|x| {
                        let e = group.element(x);
                        let key = (0..r).fold(0u64, |acc, i| acc << 8 | gens[g].apply_code(e.codes[i]) as u64);
                        group.index[&key]
                    })
                    .collect()
            })
            .collect();
        // x = p s_g, so x⁻¹ = s_g p⁻¹; BFS order puts p before x.
        let mut inverse = vec![0u32; order];
        for x in 1..order {
            let (p, g) = parent[x];
            inverse[x] = group.left[g as usize][inverse[p as usize] as usize];
        }
        group.inverse = inverse;
        Ok(group)
    }

    pub fn from_preset(name: &str, budget: &Budget) -> Result<Self> {
        Self::build(name, &CoxeterMatrix::preset(name)?, budget)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn element(&self, x: usize) -> ReflectionElement {
        let n = self.roots.positive_count();
        ReflectionElement {
            codes: self.codes[x * n..(x + 1) * n].into(),
        }
    }

    /// Index of a root permutation, if it belongs to the group.
    pub fn index_of(&self, e: &ReflectionElement) -> Option<usize> {
        let x = *self.index.get(&e.key(self.roots.rank()))? as usize;
        (self.element(x) == *e).then_some(x)
    }
}

impl FiniteCoxeterGroup for CoxeterGroup {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn rank(&self) -> usize {
        self.roots.rank()
    }

    fn order(&self) -> usize {
        self.length.len()
    }

    fn length(&self, x: usize) -> usize {
        self.length[x] as usize
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let n = self.roots.positive_count();
        let ex = ReflectionElement {
            codes: self.codes[x * n..(x + 1) * n].into(),
        };
        let key = (0..self.rank()).fold(0u64, |acc, i| acc << 8 | ex.apply_code(self.codes[y * n + i]) as u64);
        self.index[&key] as usize
    }

    fn inverse(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    fn conjugate_by_generator(&self, x: usize, i: usize) -> usize {
        self.left[i][self.right[i][x] as usize] as usize
    }

    fn generator(&self, i: usize) -> usize {
        self.right[i][0] as usize
    }
}

/// `I_2(m)` as `r^k s^f` with `r = s_1 s_2`, index `k + m f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dihedral {
    m: usize,
}

impl Dihedral {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidMatrix(format!("I2({m}) needs m >= 2")));
        }
        Ok(Dihedral { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn split(&self, x: usize) -> (usize, bool) {
        (x % self.m, x >= self.m)
    }

    fn join(&self, k: usize, flip: bool) -> usize {
        k % self.m + if flip { self.m } else { 0 }
    }
}

impl FiniteCoxeterGroup for Dihedral {
    fn name(&self) -> String {
        format!("I2({})", self.m)
    }

    fn rank(&self) -> usize {
        2
    }

    fn order(&self) -> usize {
        2 * self.m
    }

    fn length(&self, x: usize) -> usize {
        let (k, flip) = self.split(x);
        if flip {
            (2 * k + 1).min(2 * (self.m - k) - 1)
        } else {
            (2 * k).min(2 * (self.m - k))
        }
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let m = self.m;
        let (a, fa) = self.split(x);
        let (b, fb) = self.split(y);
        if fa {
            self.join(a + m - b, !fb)
        } else {
            self.join(a + b, fb)
        }
    }

    fn inverse(&self, x: usize) -> usize {
        let (k, flip) = self.split(x);
        if flip { x } else { self.join(self.m - k, false) }
    }

    fn conjugate_by_generator(&self, x: usize, i: usize) -> usize {
        let s = self.generator(i);
        self.mul(self.mul(s, x), s)
    }

    fn generator(&self, i: usize) -> usize {
        // s_1 = s, s_2 = s_1 r = r^{-1} s
        if i == 0 { self.join(0, true) } else { self.join(self.m - 1, true) }
    }
}

/// Either engine behind one census interface.
pub enum AnyGroup {
    Roots(CoxeterGroup),
    Dihedral(Dihedral),
}

impl AnyGroup {
    /// `I2(m)` presets use the dihedral model; everything else the root engine.
    pub fn from_preset(name: &str, budget: &Budget) -> Result<Self> {
        let matrix = CoxeterMatrix::preset(name)?;
        if name.trim().starts_with("I2") {
            return Ok(AnyGroup::Dihedral(Dihedral::new(matrix.entry(0, 1) as usize)?));
        }
        Ok(AnyGroup::Roots(CoxeterGroup::build(name.trim(), &matrix, budget)?))
    }

    pub fn from_matrix(name: &str, matrix: &CoxeterMatrix, budget: &Budget) -> Result<Self> {
        if matrix.rank() == 2 && matrix.entry(0, 1) > 6 {
            return Ok(AnyGroup::Dihedral(Dihedral::new(matrix.entry(0, 1) as usize)?));
        }
        Ok(AnyGroup::Roots(CoxeterGroup::build(name, matrix, budget)?))
    }

    fn inner(&self) -> &dyn FiniteCoxeterGroup {
        match self {
            AnyGroup::Roots(g) => g,
            AnyGroup::Dihedral(g) => g,
        }
    }
}

impl FiniteCoxeterGroup for AnyGroup {
    fn name(&self) -> String {
        self.inner().name()
    }
    fn rank(&self) -> usize {
        self.inner().rank()
    }
    fn order(&self) -> usize {
        self.inner().order()
    }
    fn length(&self, x: usize) -> usize {
        self.inner().length(x)
    }
    fn mul(&self, x: usize, y: usize) -> usize {
        self.inner().mul(x, y)
    }
    fn inverse(&self, x: usize) -> usize {
        self.inner().inverse(x)
    }
    fn conjugate_by_generator(&self, x: usize, i: usize) -> usize {
        self.inner().conjugate_by_generator(x, i)
    }
    fn generator(&self, i: usize) -> usize {
        self.inner().generator(i)
    }
}

/// Parses whitespace- or comma-separated 1-based generator indices into
/// 0-based ones.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let t = t.trim_start_matches(['s', 'w']);
            match t.parse::<usize>() {
                Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
                Ok(i) => Err(Error::BadGenerator { index: i, rank }),
                Err(_) => Err(Error::parse(text, format!("bad generator {t:?}"))),
            }
        })
        .collect()
}

/// Involutions of a group sorted by length, then index.
pub fn involutions_of<G: FiniteCoxeterGroup + ?Sized>(g: &G) -> Vec<usize> {
    let mut inv: Vec<usize> = (0..g.order()).filter(|&x| g.is_involution(x)).collect();
    inv.sort_by_key(|&x| (g.length(x), x));
    inv
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericExcess {
    pub excess: usize,
    pub sigma: usize,
    pub tau: usize,
}

/// Exact excess by scanning the involution list; stops at the first additive
/// pair.
pub fn excess_generic<G: FiniteCoxeterGroup + ?Sized>(g: &G, involutions: &[usize], w: usize) -> GenericExcess {
    let lw = g.length(w);
    let mut best: Option<GenericExcess> = None;
    for &s in involutions {
        let t = g.mul(s, w);
        if !g.is_involution(t) {
            continue;
        }
        let e = g.length(s) + g.length(t) - lw;
        if best.is_none_or(|b| e < b.excess) {
            best = Some(GenericExcess { excess: e, sigma: s, tau: t });
            if e == 0 {
                break;
            }
        }
    }
    best.expect("(identity, w) exists whenever w is an involution product")
}

/// Conjugacy class of `x` as a sorted index list.
pub fn conjugacy_orbit<G: FiniteCoxeterGroup + ?Sized>(g: &G, x: usize, budget: &Budget) -> Result<Vec<usize>> {
    let mut seen = std::collections::HashSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for i in 0..g.rank() {
            let z = g.conjugate_by_generator(y, i);
            if seen.insert(z) {
                if seen.len() as u64 > budget.max_class_size {
                    return Err(Error::Budget {
                        what: "class size",
                        needed: seen.len() as u64,
                        limit: budget.max_class_size,
                    });
                }
                queue.push_back(z);
            }
        }
    }
    let mut out: Vec<usize> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Length statistics and maximal-length excess histogram of one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupClassCensus {
    /// Smallest element index in the class.
    pub representative: usize,
    pub size: usize,
    pub element_order: usize,
    pub min_length: usize,
    pub max_length: usize,
    pub max_count: usize,
    pub histogram: BTreeMap<usize, usize>,
}

impl GroupClassCensus {
    pub fn theorem_holds(&self) -> bool {
        self.histogram.get(&0).is_some_and(|&c| c > 0)
    }

    pub fn all_max_zero(&self) -> bool {
        self.histogram.keys().all(|&e| e == 0)
    }
}

fn census_of_class<G: FiniteCoxeterGroup + ?Sized>(
    g: &G,
    class: &[usize],
    involutions: &[usize],
    exec: Exec,
) -> GroupClassCensus {
    let lengths: Vec<usize> = class.iter().map(|&x| g.length(x)).collect();
    let max_length = *lengths.iter().max().expect("non-empty class");
    let maxima: Vec<usize> = class
        .iter()
        .zip(&lengths)
        .filter(|(_, &l)| l == max_length)
        .map(|(&x, _)| x)
        .collect();
    let mut histogram = BTreeMap::new();
    for e in par::map(exec, &maxima, |&w| excess_generic(g, involutions, w).excess) {
        *histogram.entry(e).or_insert(0) += 1;
    }
    GroupClassCensus {
        representative: class[0],
        size: class.len(),
        element_order: g.element_order(class[0]),
        min_length: *lengths.iter().min().expect("non-empty class"),
        max_length,
        max_count: maxima.len(),
        histogram,
    }
}

/// Census of the class containing `x`.
pub fn class_census_generic<G: FiniteCoxeterGroup + ?Sized>(
    g: &G,
    x: usize,
    budget: &Budget,
    exec: Exec,
) -> Result<GroupClassCensus> {
    let class = conjugacy_orbit(g, x, budget)?;
    let involutions = involutions_of(g);
    Ok(census_of_class(g, &class, &involutions, exec))
}

/// Every class, ordered by smallest element index.
pub fn conjugacy_classes<G: FiniteCoxeterGroup + ?Sized>(g: &G, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let orbit = conjugacy_orbit(g, x, budget)?;
        for &y in &orbit {
            class_of[y] = classes.len();
        }
        classes.push(orbit);
    }
    Ok(classes)
}

pub fn full_group_sweep<G: FiniteCoxeterGroup + ?Sized>(
    g: &G,
    budget: &Budget,
    exec: Exec,
) -> Result<Vec<GroupClassCensus>> {
    let classes = conjugacy_classes(g, budget)?;
    let involutions = involutions_of(g);
    Ok(par::map(exec, &classes, |class| census_of_class(g, class, &involutions, exec)))
}

/// How a word's generator numbers map onto Bourbaki's.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labeling {
    Bourbaki,
    /// Generators `1..n-1` along the long arm, `n` on the branch node's leg:
    /// label `k` is Bourbaki `1, 3, 4, ..., n, 2`.
    Linear,
}

impl Labeling {
    pub const ALL: [Labeling; 2] = [Labeling::Bourbaki, Labeling::Linear];

    /// 0-based Bourbaki index of a 0-based label in a rank `n` E-type group.
    pub fn to_bourbaki(self, label: usize, n: usize) -> usize {
        match self {
            Labeling::Bourbaki => label,
            Labeling::Linear if label == 0 => 0,
            Labeling::Linear if label == n - 1 => 1,
            Labeling::Linear => label + 1,
        }
    }

    pub fn relabel(self, word: &[usize], n: usize) -> Vec<usize> {
        word.iter().map(|&i| self.to_bourbaki(i, n)).collect()
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Labeling::Bourbaki => "bourbaki",
            Labeling::Linear => "linear",
        })
    }
}

/// A quoted word with the class profile it should land in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotedClass {
    /// 1-based generator labels as printed.
    pub word: Vec<usize>,
    pub order: usize,
    pub max_length: usize,
    pub max_count: usize,
    pub histogram: BTreeMap<usize, usize>,
}

/// The two exceptional `E6` classes.
pub fn e6_quoted() -> Vec<QuotedClass> {
    vec![
        QuotedClass {
            word: vec![2, 3, 1, 4, 2, 3, 5, 4, 2, 3, 6, 5, 4, 3],
            order: 3,
            max_length: 22,
            max_count: 146,
            histogram: BTreeMap::from([(0, 134), (2, 12)]),
        },
        QuotedClass {
            word: vec![5, 4, 2, 3, 1, 4, 3, 5, 6, 5, 4, 2, 3, 1],
            order: 6,
            max_length: 20,
            max_count: 180,
            histogram: BTreeMap::from([(0, 136), (2, 44)]),
        },
    ]
}

/// The exceptional `E7` class; only the zero-excess count is quoted.
pub fn e7_quoted() -> QuotedClass {
    QuotedClass {
        word: vec![
            1, 3, 1, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5,
        ],
        order: 3,
        max_length: 54,
        max_count: 708,
        histogram: BTreeMap::from([(0, 658)]),
    }
}

/// The first labeling under which every quoted word has the quoted order and
/// class maximal length.
pub fn resolve_labeling<G: FiniteCoxeterGroup + ?Sized>(
    g: &G,
    quoted: &[QuotedClass],
    budget: &Budget,
) -> Result<Option<Labeling>> {
    let n = g.rank();
    for labeling in Labeling::ALL {
        let mut ok = true;
        for q in quoted {
            let word: Vec<usize> = q.word.iter().map(|&i| i - 1).collect();
            let x = g.from_word(&labeling.relabel(&word, n))?;
            let orbit = conjugacy_orbit(g, x, budget)?;
            let max = orbit.iter().map(|&y| g.length(y)).max().unwrap_or(0);
            if g.element_order(x) != q.order || max != q.max_length {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(labeling));
        }
    }
    Ok(None)
}

/// Outcome of the exceptional-group census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalCensus {
    pub group: String,
    pub order: usize,
    pub classes: Vec<GroupClassCensus>,
    pub labeling: Option<Labeling>,
    /// For each quoted word, the position of its class in `classes`.
    pub quoted_classes: Vec<Option<usize>>,
}

impl ExceptionalCensus {
    pub fn failing_all_max_zero(&self) -> Vec<&GroupClassCensus> {
        self.classes.iter().filter(|c| !c.all_max_zero()).collect()
    }
}

pub fn exceptional_census(
    group: &CoxeterGroup,
    quoted: &[QuotedClass],
    budget: &Budget,
    exec: Exec,
) -> Result<ExceptionalCensus> {
    let classes = conjugacy_classes(group, budget)?;
    let involutions = involutions_of(group);
    let census: Vec<GroupClassCensus> = par::map(exec, &classes, |c| census_of_class(group, c, &involutions, exec));
    let labeling = resolve_labeling(group, quoted, budget)?;
    let mut quoted_classes = Vec::new();
    for q in quoted {
        let pos = match labeling {
            Some(l) => {
                let word: Vec<usize> = q.word.iter().map(|&i| i - 1).collect();
                let x = group.from_word(&l.relabel(&word, group.rank()))?;
                classes.iter().position(|c| c.binary_search(&x).is_ok())
            }
            None => None,
        };
        quoted_classes.push(pos);
    }
    Ok(ExceptionalCensus {
        group: group.name(),
        order: group.order(),
        classes: census,
        labeling,
        quoted_classes,
    })
}
