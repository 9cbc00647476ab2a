//! Root-system combinatorics for flag varieties `G/P`: Weyl group Poincaré
//! polynomials, Levi subdiagrams, Betti numbers and Picard ranks, and the
//! Künneth assembly of a product of flag varieties.
//!
//! Simple roots are labelled as in Bourbaki. A parabolic is given by the set
//! `I` of simple roots kept in its Levi factor, so `I = {}` is the Borel and
//! `I = all` is the whole group.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::IntPolynomial;

/// Largest total rank accepted by [`weyl_bfs_order`].
pub const BFS_RANK_LIMIT: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("simple root index {index} out of range for component {component} of rank {rank}")]
    IndexOutOfRange {
        component: usize,
        index: usize,
        rank: u32,
    },
    #[error("parabolic has {found} components, type has {expected}")]
    ComponentCount { expected: usize, found: usize },
    #[error("total rank {0} exceeds the breadth-first search limit")]
    RankGuard(u32),
    #[error("empty parabolic list")]
    EmptyParabolics,
    #[error("pic_rank_qg must be positive")]
    ZeroPicRank,
    #[error("unrecognised Dynkin subdiagram")]
    UnknownSubdiagram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn valid_rank(self, n: u32) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

/// A simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    pub fn new(family: Family, rank: u32) -> Result<Self, FlagError> {
        if !family.valid_rank(rank) {
            return Err(FlagError::InvalidType(format!("{}{rank}", family.letter())));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Degrees of the basic invariants.
    pub fn fundamental_degrees(&self) -> Vec<u32> {
        let n = self.rank;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => (1..n).map(|i| 2 * i).chain([n]).collect(),
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }

    /// Symmetric bilinear form on simple roots, scaled to integers.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank as usize;
        let mut b = vec![vec![0i64; n]; n];
        let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            b[i][j] = v;
            b[j][i] = v;
        };
        match self.family {
            Family::A | Family::D | Family::E => {
                (0..n).for_each(|i| b[i][i] = 2);
                match self.family {
                    Family::A => (1..n).for_each(|i| link(&mut b, i - 1, i, -1)),
                    Family::D => {
                        (1..n - 1).for_each(|i| link(&mut b, i - 1, i, -1));
                        link(&mut b, n - 3, n - 1, -1);
                    }
                    _ => {
                        link(&mut b, 0, 2, -1);
                        link(&mut b, 1, 3, -1);
                        (3..n).for_each(|i| link(&mut b, i - 1, i, -1));
                    }
                }
            }
            Family::B => {
                (0..n).for_each(|i| b[i][i] = 4);
                b[n - 1][n - 1] = 2;
                (1..n).for_each(|i| link(&mut b, i - 1, i, -2));
            }
            Family::C => {
                (0..n).for_each(|i| b[i][i] = 2);
                b[n - 1][n - 1] = 4;
                (1..n - 1).for_each(|i| link(&mut b, i - 1, i, -1));
                link(&mut b, n - 2, n - 1, -2);
            }
            Family::F => {
                b[0][0] = 4;
                b[1][1] = 4;
                b[2][2] = 2;
                b[3][3] = 2;
                link(&mut b, 0, 1, -2);
                link(&mut b, 1, 2, -2);
                link(&mut b, 2, 3, -1);
            }
            Family::G => {
                b[0][0] = 2;
                b[1][1] = 6;
                link(&mut b, 0, 1, -3);
            }
        }
        b
    }

    /// Cartan matrix `A[i][j] = 2 (a_i, a_j) / (a_j, a_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let b = self.gram();
        let n = b.len();
        (0..n)
            .map(|i| (0..n).map(|j| 2 * b[i][j] / b[j][j]).collect())
            .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = FlagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FlagError::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: u32 = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(family, rank).map_err(|_| bad())
    }
}

/// Product of simple types, kept sorted by family then rank. Written
/// `A1xB2`; the trivial type is the empty string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CartanType {
    components: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(mut components: Vec<SimpleType>) -> Self {
        components.sort();
        CartanType { components }
    }

    pub fn simple(family: Family, rank: u32) -> Result<Self, FlagError> {
        Ok(CartanType::new(vec![SimpleType::new(family, rank)?]))
    }

    pub fn trivial() -> Self {
        CartanType::default()
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn rank(&self) -> u32 {
        self.components.iter().map(SimpleType::rank).sum()
    }

    /// Block-diagonal Cartan matrix over the concatenated simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank() as usize;
        let mut a = vec![vec![0i64; n]; n];
        let mut off = 0;
        for c in &self.components {
            let block = c.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    a[off + i][off + j] = v;
                }
            }
            off += block.len();
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = FlagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(CartanType::trivial());
        }
        s.split(['x', '×', '*'])
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(CartanType::new)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Levi roots `I`, one set of 1-based indices per component of the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    per_component: Vec<BTreeSet<usize>>,
}

impl ParabolicSubset {
    pub fn new(t: &CartanType, per_component: Vec<BTreeSet<usize>>) -> Result<Self, FlagError> {
        if per_component.len() != t.components.len() {
            return Err(FlagError::ComponentCount {
                expected: t.components.len(),
                found: per_component.len(),
            });
        }
        for (c, (set, st)) in per_component.iter().zip(&t.components).enumerate() {
            if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > st.rank as usize) {
                return Err(FlagError::IndexOutOfRange {
                    component: c + 1,
                    index: bad,
                    rank: st.rank,
                });
            }
        }
        Ok(ParabolicSubset { per_component })
    }

    /// From 1-based indices into the concatenated simple roots.
    pub fn from_global(t: &CartanType, indices: &[usize]) -> Result<Self, FlagError> {
        let mut per = vec![BTreeSet::new(); t.components.len()];
        for &g in indices {
            let mut off = 0usize;
            let mut placed = false;
            for (c, st) in t.components.iter().enumerate() {
                if g > off && g <= off + st.rank as usize {
                    per[c].insert(g - off);
                    placed = true;
                    break;
                }
                off += st.rank as usize;
            }
            if !placed {
                return Err(FlagError::IndexOutOfRange {
                    component: 0,
                    index: g,
                    rank: t.rank(),
                });
            }
        }
        ParabolicSubset::new(t, per)
    }

    pub fn borel(t: &CartanType) -> Self {
        ParabolicSubset {
            per_component: vec![BTreeSet::new(); t.components.len()],
        }
    }

    pub fn full(t: &CartanType) -> Self {
        ParabolicSubset {
            per_component: t
                .components
                .iter()
                .map(|c| (1..=c.rank as usize).collect())
                .collect(),
        }
    }

    pub fn per_component(&self) -> &[BTreeSet<usize>] {
        &self.per_component
    }

    /// Sorted 1-based indices into the concatenated simple roots.
    pub fn global(&self, t: &CartanType) -> Vec<usize> {
        let mut out = Vec::new();
        let mut off = 0;
        for (set, st) in self.per_component.iter().zip(&t.components) {
            out.extend(set.iter().map(|i| i + off));
            off += st.rank as usize;
        }
        out
    }

    pub fn size(&self) -> usize {
        self.per_component.iter().map(BTreeSet::len).sum()
    }

    fn check(&self, t: &CartanType) -> Result<(), FlagError> {
        ParabolicSubset::new(t, self.per_component.clone()).map(|_| ())
    }
}

/// `prod_i [d_i]_q` over the fundamental degrees of every component.
pub fn weyl_poincare(t: &CartanType) -> IntPolynomial {
    let mut out = IntPolynomial::one();
    for c in &t.components {
        for d in c.fundamental_degrees() {
            let numer = IntPolynomial::new(
                std::iter::once(-1)
                    .chain(std::iter::repeat_n(0, d as usize - 1))
                    .chain([1])
                    .collect(),
            );
            let factor = numer
                .exact_div(&IntPolynomial::new(vec![-1, 1]))
                .expect("q - 1 divides q^d - 1");
            out = out.mul(&factor);
        }
    }
    out
}

/// Order of the Weyl group as the size of the orbit of `rho` under simple
/// reflections, computed in fundamental-weight coordinates.
pub fn weyl_bfs_order(t: &CartanType) -> Result<u64, FlagError> {
    if t.rank() > BFS_RANK_LIMIT {
        return Err(FlagError::RankGuard(t.rank()));
    }
    let a = t.cartan_matrix();
    let n = a.len();
    let rho = vec![1i64; n];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([rho.clone()]);
    let mut queue = VecDeque::from([rho]);
    while let Some(lam) = queue.pop_front() {
        for i in 0..n {
            let c = lam[i];
            let next: Vec<i64> = (0..n).map(|j| lam[j] - c * a[i][j]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Type of the Dynkin subdiagram on `I`. A lone double bond is reported as
/// `B2` (isomorphic to `C2`).
pub fn levi_components(t: &CartanType, i: &ParabolicSubset) -> Result<CartanType, FlagError> {
    i.check(t)?;
    let mut out = Vec::new();
    for (st, set) in t.components.iter().zip(&i.per_component) {
        let gram = st.gram();
        let nodes: Vec<usize> = set.iter().map(|k| k - 1).collect();
        for comp in connected_components(&gram, &nodes) {
            out.push(classify(&gram, &comp)?);
        }
    }
    Ok(CartanType::new(out))
}

fn connected_components(gram: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            let nbrs: Vec<usize> = left.iter().copied().filter(|&u| gram[v][u] != 0).collect();
            for u in nbrs {
                left.remove(&u);
                comp.push(u);
            }
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Classifies a connected subdiagram by degrees, arm lengths and bond
/// multiplicities.
fn classify(gram: &[Vec<i64>], nodes: &[usize]) -> Result<SimpleType, FlagError> {
    let k = nodes.len() as u32;
    let nbrs = |v: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&u| u != v && gram[v][u] != 0)
            .collect()
    };
    // bond multiplicity = A_ij * A_ji
    let bond = |u: usize, v: usize| (4 * gram[u][v] * gram[u][v]) / (gram[u][u] * gram[v][v]);
    let mut multi = None;
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a + 1..] {
            if gram[u][v] != 0 && bond(u, v) > 1 {
                multi = Some((u, v, bond(u, v)));
            }
        }
    }
    let make = |f: Family| SimpleType::new(f, k).map_err(|_| FlagError::UnknownSubdiagram);
    match multi {
        Some((_, _, 3)) => make(Family::G),
        Some((u, v, _)) => {
            if k == 2 {
                return make(Family::B);
            }
            let (du, dv) = (nbrs(u).len(), nbrs(v).len());
            if du == 2 && dv == 2 {
                return make(Family::F);
            }
            let leaf = if du == 1 { u } else { v };
            let other = if leaf == u { v } else { u };
            if gram[leaf][leaf] < gram[other][other] {
                make(Family::B)
            } else {
                make(Family::C)
            }
        }
        None => {
            let Some(branch) = nodes.iter().copied().find(|&v| nbrs(v).len() > 2) else {
                return make(Family::A);
            };
            let mut arms: Vec<usize> = nbrs(branch)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next: Vec<usize> =
                            nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => make(Family::D),
                [1, 2, 2..=4] => make(Family::E),
                _ => Err(FlagError::UnknownSubdiagram),
            }
        }
    }
}

/// `W(q) / W_I(q)`, the Poincaré polynomial of `G/P` in `q = t^2`.
pub fn flag_poincare(t: &CartanType, i: &ParabolicSubset) -> Result<IntPolynomial, FlagError> {
    let levi = levi_components(t, i)?;
    Ok(weyl_poincare(t)
        .exact_div(&weyl_poincare(&levi))
        .expect("Levi Weyl polynomial divides the full one"))
}

/// Number of simple roots outside the Levi.
pub fn pic_rank_flag(t: &CartanType, i: &ParabolicSubset) -> Result<u32, FlagError> {
    i.check(t)?;
    Ok(t.rank() - i.size() as u32)
}

/// Betti numbers and Picard ranks of a product of flag varieties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    /// Poincaré polynomial of the product, coefficients of `q^0, q^1, ...`.
    pub poincare: IntPolynomial,
    /// `b_0, b_1, ..., b_top` in real degrees.
    pub betti: Vec<i64>,
    pub b1: i64,
    pub b2: i64,
    pub b3: i64,
    pub pic_ranks: Vec<u32>,
    pub pic_rank_qg: u32,
    pub t: u64,
    pub b2_mg: u32,
    pub assembled_b2: u64,
}

/// Assembles `F = prod G/P_i` and the resulting rank counts: `t` is
/// `pic_rank_qg + sum pic ranks` and the assembled second Betti number is
/// `b2_mg + b2(F)`.
pub fn kunneth_report(
    t: &CartanType,
    parabolics: &[ParabolicSubset],
    pic_rank_qg: u32,
    b2_mg: u32,
) -> Result<KunnethReport, FlagError> {
    if parabolics.is_empty() {
        return Err(FlagError::EmptyParabolics);
    }
    if pic_rank_qg == 0 {
        return Err(FlagError::ZeroPicRank);
    }
    let mut poincare = IntPolynomial::one();
    let mut pic_ranks = Vec::with_capacity(parabolics.len());
    for p in parabolics {
        poincare = poincare.mul(&flag_poincare(t, p)?);
        pic_ranks.push(pic_rank_flag(t, p)?);
    }
    let top = poincare.degree().unwrap_or(0);
    let mut betti = vec![0i64; 2 * top + 1];
    for (k, &c) in poincare.coeffs().iter().enumerate() {
        betti[2 * k] = c;
    }
    let at = |k: usize| betti.get(k).copied().unwrap_or(0);
    let sum: u64 = pic_ranks.iter().map(|&p| p as u64).sum();
    Ok(KunnethReport {
        b1: at(1),
        b2: at(2),
        b3: at(3),
        betti,
        poincare,
        pic_ranks,
        pic_rank_qg,
        t: pic_rank_qg as u64 + sum,
        b2_mg,
        assembled_b2: b2_mg as u64 + sum,
    })
}

/// Every simple type of total rank at most `max_rank`.
pub fn simple_types_up_to(max_rank: u32) -> Vec<SimpleType> {
    let families = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
    families
        .iter()
        .flat_map(|&f| (1..=max_rank).filter_map(move |n| SimpleType::new(f, n).ok()))
        .collect()
}

/// All `2^rank` parabolic subsets of `t`, by bitmask over global indices.
pub fn all_parabolics(t: &CartanType) -> Vec<ParabolicSubset> {
    let n = t.rank() as usize;
    (0u64..1 << n)
        .map(|mask| {
            let idx: Vec<usize> = (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect();
            ParabolicSubset::from_global(t, &idx).expect("indices in range")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn sub(t: &CartanType, idx: &[usize]) -> ParabolicSubset {
        ParabolicSubset::from_global(t, idx).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn weyl_poincare_examples() {
        assert_eq!(weyl_poincare(&ty("A1")), poly(&[1, 1]));
        assert_eq!(
            weyl_poincare(&ty("A2")),
            poly(&[1, 1]).mul(&poly(&[1, 1, 1]))
        );
        assert_eq!(weyl_poincare(&ty("A2")), poly(&[1, 2, 2, 1]));
        assert_eq!(weyl_poincare(&ty("B2")), poly(&[1, 2, 2, 2, 1]));
        assert_eq!(weyl_poincare(&CartanType::trivial()), IntPolynomial::one());
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(weyl_bfs_order(&ty("A2")), Ok(6));
        assert_eq!(weyl_bfs_order(&ty("B2")), Ok(8));
        assert_eq!(weyl_bfs_order(&ty("G2")), Ok(12));
        assert_eq!(weyl_bfs_order(&ty("D4")), Ok(192));
        assert_eq!(weyl_bfs_order(&ty("F4")), Ok(1152));
        assert_eq!(weyl_bfs_order(&ty("A1xA1")), Ok(4));
        assert_eq!(weyl_bfs_order(&ty("E7")), Err(FlagError::RankGuard(7)));
    }

    #[test]
    fn e6_order() {
        assert_eq!(weyl_bfs_order(&ty("E6")), Ok(51840));
        assert_eq!(weyl_poincare(&ty("E6")).eval(1), 51840);
    }

    #[test]
    fn large_e_orders() {
        // standard orders for the types beyond the search limit
        assert_eq!(weyl_poincare(&ty("E7")).eval(1), 2_903_040);
        assert_eq!(weyl_poincare(&ty("E8")).eval(1), 696_729_600);
    }

    #[test]
    fn type_validation() {
        for bad in ["B1", "C1", "D3", "E5", "E9", "F3", "G3", "A0", "H3", "A"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
        assert_eq!(ty("B2xA1").to_string(), "A1xB2");
    }

    #[test]
    fn levi_examples() {
        let a3 = ty("A3");
        assert_eq!(levi_components(&a3, &sub(&a3, &[1, 3])), Ok(ty("A1xA1")));
        assert_eq!(levi_components(&a3, &sub(&a3, &[1, 2])), Ok(ty("A2")));
        assert_eq!(
            levi_components(&a3, &sub(&a3, &[])),
            Ok(CartanType::trivial())
        );
        assert!(ParabolicSubset::from_global(&a3, &[4]).is_err());
    }

    #[test]
    fn levi_of_full_set_is_the_type() {
        for st in simple_types_up_to(8) {
            let t = CartanType::new(vec![st]);
            let expect = if t.to_string() == "C2" {
                ty("B2")
            } else {
                t.clone()
            };
            assert_eq!(
                levi_components(&t, &ParabolicSubset::full(&t)),
                Ok(expect),
                "{t}"
            );
        }
    }

    #[test]
    fn levi_orientation() {
        let b4 = ty("B4");
        assert_eq!(levi_components(&b4, &sub(&b4, &[2, 3, 4])), Ok(ty("B3")));
        assert_eq!(levi_components(&b4, &sub(&b4, &[1, 2, 3])), Ok(ty("A3")));
        let c4 = ty("C4");
        assert_eq!(levi_components(&c4, &sub(&c4, &[2, 3, 4])), Ok(ty("C3")));
        let f4 = ty("F4");
        assert_eq!(levi_components(&f4, &sub(&f4, &[1, 2, 3])), Ok(ty("B3")));
        assert_eq!(levi_components(&f4, &sub(&f4, &[2, 3, 4])), Ok(ty("C3")));
        let e8 = ty("E8");
        assert_eq!(
            levi_components(&e8, &sub(&e8, &[2, 3, 4, 5, 6, 7, 8])),
            Ok(ty("D7"))
        );
        assert_eq!(
            levi_components(&e8, &sub(&e8, &[1, 2, 3, 4, 5, 6, 7])),
            Ok(ty("E7"))
        );
        let d5 = ty("D5");
        assert_eq!(levi_components(&d5, &sub(&d5, &[1, 2, 3, 4])), Ok(ty("A4")));
        assert_eq!(levi_components(&d5, &sub(&d5, &[2, 3, 4, 5])), Ok(ty("D4")));
    }

    #[test]
    fn flag_poincare_examples() {
        for n in 1..=6usize {
            let t = CartanType::simple(Family::A, n as u32).unwrap();
            let i: Vec<usize> = (2..=n).collect();
            assert_eq!(
                flag_poincare(&t, &sub(&t, &i)),
                Ok(IntPolynomial::q_integer(n + 1))
            );
        }
        let a1 = ty("A1");
        assert_eq!(flag_poincare(&a1, &sub(&a1, &[])), Ok(poly(&[1, 1])));
        let a3 = ty("A3");
        let full = flag_poincare(&a3, &sub(&a3, &[])).unwrap();
        assert_eq!(
            full,
            poly(&[1, 1])
                .mul(&poly(&[1, 1, 1]))
                .mul(&poly(&[1, 1, 1, 1]))
        );
        assert_eq!(full.eval(1), weyl_bfs_order(&a3).unwrap() as i128);
    }

    #[test]
    fn pic_rank_examples() {
        let a2 = ty("A2");
        assert_eq!(pic_rank_flag(&a2, &sub(&a2, &[2])), Ok(1));
        assert_eq!(flag_poincare(&a2, &sub(&a2, &[2])).unwrap().coeff(1), 1);
        assert_eq!(pic_rank_flag(&a2, &ParabolicSubset::full(&a2)), Ok(0));
        let a3 = ty("A3");
        assert_eq!(pic_rank_flag(&a3, &sub(&a3, &[])), Ok(3));
    }

    #[test]
    fn kunneth_examples() {
        let a1 = ty("A1");
        let r = kunneth_report(&a1, &[sub(&a1, &[])], 1, 1).unwrap();
        assert_eq!((r.b2, r.t, r.assembled_b2), (1, 2, 2));
        assert_eq!((r.b1, r.b3), (0, 0));

        let a2 = ty("A2");
        let r = kunneth_report(&a2, &[sub(&a2, &[1]), sub(&a2, &[2])], 1, 1).unwrap();
        assert_eq!((r.b2, r.t), (2, 3));

        let r = kunneth_report(&a2, &vec![ParabolicSubset::full(&a2); 3], 4, 0).unwrap();
        assert_eq!((r.b2, r.t), (0, 4));
        assert_eq!(r.poincare, IntPolynomial::one());

        assert_eq!(
            kunneth_report(&a2, &[], 1, 1),
            Err(FlagError::EmptyParabolics)
        );
        assert_eq!(
            kunneth_report(&a2, &[sub(&a2, &[])], 0, 1),
            Err(FlagError::ZeroPicRank)
        );
    }
}
