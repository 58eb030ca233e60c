//! Root systems of the simple Lie types, numbered as in Humphreys' tables.
//!
//! Roots are integer vectors in the basis of simple roots. Node `i` of the
//! Dynkin diagram is simple root `α_i`; public APIs use 1-based node labels,
//! arrays are indexed from 0.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank handled (E8).
pub const MAX_RANK: usize = 8;

/// Coordinates of a root (or any lattice vector) in the simple-root basis.
pub type RootVec = [i32; MAX_RANK];

pub type Matrix = [[i32; MAX_RANK]; MAX_RANK];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl LieFamily {
    pub const ALL: [LieFamily; 9] = [
        LieFamily::A,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::E6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::F4,
        LieFamily::G2,
    ];

    /// Rank of the exceptional families; `None` for the four classical series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            LieFamily::E6 => Some(6),
            LieFamily::E7 => Some(7),
            LieFamily::E8 => Some(8),
            LieFamily::F4 => Some(4),
            LieFamily::G2 => Some(2),
            _ => None,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, LieFamily::A | LieFamily::B | LieFamily::C | LieFamily::D)
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        if rank > MAX_RANK {
            return false;
        }
        match self {
            LieFamily::A => rank >= 1,
            LieFamily::B | LieFamily::C => rank >= 2,
            LieFamily::D => rank >= 4,
            _ => self.fixed_rank() == Some(rank),
        }
    }

    /// Parses a family name together with an optional rank, accepting both
    /// `E7` and `E` + rank 7 spellings.
    pub fn resolve(name: &str, rank: Option<usize>) -> Result<(LieFamily, usize)> {
        let family = match name.trim().to_ascii_uppercase().as_str() {
            "E" => match rank {
                Some(6) => LieFamily::E6,
                Some(7) => LieFamily::E7,
                Some(8) => LieFamily::E8,
                _ => return Err(Error::UnknownFamily(name.to_string())),
            },
            "F" => LieFamily::F4,
            "G" => LieFamily::G2,
            other => other.parse()?,
        };
        let rank = match (family.fixed_rank(), rank) {
            (Some(fixed), None) => fixed,
            (_, Some(r)) => r,
            (None, None) => {
                return Err(Error::InvalidContext(format!("family {family} needs a rank")))
            }
        };
        if !family.valid_rank(rank) {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok((family, rank))
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::E6 => "E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::F4 => "F4",
            LieFamily::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieFamily::A),
            "B" => Ok(LieFamily::B),
            "C" => Ok(LieFamily::C),
            "D" => Ok(LieFamily::D),
            "E6" => Ok(LieFamily::E6),
            "E7" => Ok(LieFamily::E7),
            "E8" => Ok(LieFamily::E8),
            "F4" => Ok(LieFamily::F4),
            "G2" => Ok(LieFamily::G2),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// The node set `Δ_P` of a standard parabolic subgroup, stored through its
/// complement (the excluded nodes `Δ ∖ Δ_P`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    rank: usize,
    excluded: u16,
}

impl ParabolicSubset {
    /// `excluded` holds 1-based node labels.
    pub fn new(rank: usize, excluded: &[usize]) -> Result<Self> {
        let mut mask = 0u16;
        for &node in excluded {
            if node == 0 || node > rank {
                return Err(Error::NodeOutOfRange { node, rank });
            }
            mask |= 1 << (node - 1);
        }
        if mask == 0 {
            return Err(Error::EmptyExcludedSet);
        }
        Ok(ParabolicSubset { rank, excluded: mask })
    }

    /// The maximal parabolic `P_m` (only node `m` excluded).
    pub fn maximal(rank: usize, node: usize) -> Result<Self> {
        Self::new(rank, &[node])
    }

    /// The Borel subgroup: every node excluded.
    pub fn borel(rank: usize) -> Self {
        ParabolicSubset { rank, excluded: ((1u32 << rank) - 1) as u16 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Excluded nodes, 1-based, ascending.
    pub fn excluded(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&i| self.is_excluded(i)).collect()
    }

    /// Retained nodes `Δ_P`, 1-based, ascending.
    pub fn retained(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&i| !self.is_excluded(i)).collect()
    }

    pub fn is_excluded(&self, node: usize) -> bool {
        node >= 1 && node <= self.rank && self.excluded & (1 << (node - 1)) != 0
    }

    /// Bitmask of retained nodes, bit `i-1` for node `i`.
    pub fn retained_mask(&self) -> u16 {
        !self.excluded & (((1u32 << self.rank) - 1) as u16)
    }

    pub fn excluded_mask(&self) -> u16 {
        self.excluded
    }

    pub fn is_maximal(&self) -> bool {
        self.excluded.count_ones() == 1
    }
}

/// A connected piece of a Dynkin subdiagram together with its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub family: LieFamily,
    pub rank: usize,
    /// 1-based labels in the ambient diagram.
    pub nodes: BTreeSet<usize>,
    /// Nodes of degree at most one inside the component.
    pub leaves: BTreeSet<usize>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: LieFamily,
    rank: usize,
    /// `cartan[i][j] = <α_i, α_j^∨>`, so `s_j(α_i) = α_i - cartan[i][j] α_j`.
    cartan: Matrix,
    /// Twice the invariant form: `form[i][j] = cartan[i][j] * d_j` where `d_j`
    /// is the squared length of `α_j` with short roots normalised to 1.
    form: Matrix,
    root_lengths: [i32; MAX_RANK],
    positive_roots: Vec<RootVec>,
    simple_reflections: Vec<Matrix>,
    two_rho: RootVec,
}

/// Edges `(i, j, mult)` with 0-based endpoints; for a multiple bond `i` is
/// the long root.
fn edges(family: LieFamily, rank: usize) -> Vec<(usize, usize, i32)> {
    let path = |n: usize| (0..n - 1).map(|i| (i, i + 1, 1)).collect::<Vec<_>>();
    match family {
        LieFamily::A => path(rank),
        LieFamily::B => {
            let mut e = path(rank - 1);
            e.push((rank - 2, rank - 1, 2));
            e
        }
        LieFamily::C => {
            let mut e = path(rank - 1);
            e.push((rank - 1, rank - 2, 2));
            e
        }
        LieFamily::D => {
            let mut e = path(rank - 1);
            e.push((rank - 3, rank - 1, 1));
            e
        }
        LieFamily::E6 | LieFamily::E7 | LieFamily::E8 => {
            // 1-3-4-5-...-n with 2 attached to 4
            let mut e = vec![(0, 2, 1), (1, 3, 1)];
            e.extend((2..rank - 1).map(|i| (i, i + 1, 1)));
            e
        }
        LieFamily::F4 => vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
        LieFamily::G2 => vec![(1, 0, 3)],
    }
}

fn root_lengths(family: LieFamily, rank: usize) -> [i32; MAX_RANK] {
    let mut d = [1; MAX_RANK];
    match family {
        LieFamily::B => d[..rank - 1].iter_mut().for_each(|x| *x = 2),
        LieFamily::C => d[rank - 1] = 2,
        LieFamily::F4 => {
            d[0] = 2;
            d[1] = 2;
        }
        LieFamily::G2 => d[1] = 3,
        _ => {}
    }
    d
}

pub(crate) fn height(v: &RootVec) -> i32 {
    v.iter().sum()
}

impl RootSystem {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self> {
        if !family.valid_rank(rank) {
            return Err(Error::InvalidRank { family, rank });
        }
        let lengths = root_lengths(family, rank);
        let mut cartan = [[0; MAX_RANK]; MAX_RANK];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for (long, short, mult) in edges(family, rank) {
            cartan[long][short] = -mult;
            cartan[short][long] = -1;
        }
        let mut form = [[0; MAX_RANK]; MAX_RANK];
        for i in 0..rank {
            for j in 0..rank {
                form[i][j] = cartan[i][j] * lengths[j];
            }
        }
        debug_assert!((0..rank).all(|i| (0..rank).all(|j| form[i][j] == form[j][i])));

        let mut simple_reflections = Vec::with_capacity(rank);
        for j in 0..rank {
            // column i holds s_j(α_i)
            let mut m = [[0; MAX_RANK]; MAX_RANK];
            for i in 0..rank {
                m[i][i] = 1;
                m[i][j] -= cartan[i][j];
            }
            simple_reflections.push(m);
        }

        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            form,
            root_lengths: lengths,
            positive_roots: Vec::new(),
            simple_reflections,
            two_rho: [0; MAX_RANK],
        };
        rs.positive_roots = rs.close_positive_roots();
        for root in &rs.positive_roots {
            for k in 0..rank {
                rs.two_rho[k] += root[k];
            }
        }
        Ok(rs)
    }

    /// Breadth-first closure of the simple roots under simple reflections,
    /// keeping only positive roots. Output is sorted by height, then
    /// lexicographically.
    fn close_positive_roots(&self) -> Vec<RootVec> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..self.rank {
            let mut e = [0; MAX_RANK];
            e[i] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        while let Some(root) = queue.pop_front() {
            for j in 0..self.rank {
                let image = self.reflect(j, &root);
                if image.iter().all(|&c| c >= 0) && seen.insert(image) {
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<RootVec> = seen.into_iter().collect();
        roots.sort_by_key(|r| (height(r), *r));
        roots
    }

    /// `s_j(v)`, `j` 0-based.
    pub(crate) fn reflect(&self, j: usize, v: &RootVec) -> RootVec {
        let mut out = *v;
        out[j] -= self.pairing(v, j);
        out
    }

    /// `<v, α_j^∨>`, `j` 0-based.
    #[inline]
    pub(crate) fn pairing(&self, v: &RootVec, j: usize) -> i32 {
        (0..self.rank).map(|k| v[k] * self.cartan[k][j]).sum()
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> Vec<Vec<i32>> {
        (0..self.rank).map(|i| self.cartan[i][..self.rank].to_vec()).collect()
    }

    pub(crate) fn cartan_raw(&self) -> &Matrix {
        &self.cartan
    }

    pub(crate) fn form_raw(&self) -> &Matrix {
        &self.form
    }

    pub(crate) fn two_rho(&self) -> &RootVec {
        &self.two_rho
    }

    /// Squared lengths of the simple roots, short roots normalised to 1.
    pub fn root_lengths(&self) -> &[i32] {
        &self.root_lengths[..self.rank]
    }

    /// Positive roots as simple-root coordinate vectors of length `rank`.
    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        self.positive_roots.iter().map(|r| r[..self.rank].to_vec()).collect()
    }

    pub(crate) fn positive_roots_raw(&self) -> &[RootVec] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Integer matrix of `s_i` on the simple-root basis (column `j` is
    /// `s_i(α_j)`), `i` 1-based.
    pub fn simple_reflection_action(&self, i: usize) -> Vec<Vec<i32>> {
        let m = &self.simple_reflections[i - 1];
        (0..self.rank).map(|r| (0..self.rank).map(|c| m[c][r]).collect()).collect()
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.positive_roots.len() / self.rank
    }

    /// Bond multiplicity between 0-based nodes (0 when not adjacent).
    pub(crate) fn bond(&self, i: usize, j: usize) -> i32 {
        if i == j {
            0
        } else {
            self.cartan[i][j] * self.cartan[j][i]
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> u64 {
        weyl_order(self.family, self.rank)
    }

    /// Connected components of the subdiagram on `nodes` (1-based), each
    /// classified by type.
    pub fn components(&self, nodes: &[usize]) -> Vec<Component> {
        let set: BTreeSet<usize> = nodes.iter().copied().filter(|&n| n >= 1 && n <= self.rank).collect();
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if !remaining.remove(&v) {
                    continue;
                }
                comp.insert(v);
                for &w in &set {
                    if remaining.contains(&w) && self.bond(v - 1, w - 1) > 0 {
                        stack.push(w);
                    }
                }
            }
            out.push(self.classify(comp));
        }
        out
    }

    fn classify(&self, nodes: BTreeSet<usize>) -> Component {
        let rank = nodes.len();
        let degree = |v: usize| nodes.iter().filter(|&&w| self.bond(v - 1, w - 1) > 0).count();
        let leaves: BTreeSet<usize> = nodes.iter().copied().filter(|&v| degree(v) <= 1).collect();
        let mut max_bond = 0;
        let mut multi = None;
        for &a in &nodes {
            for &b in &nodes {
                let m = self.bond(a - 1, b - 1);
                if m > max_bond {
                    max_bond = m;
                    multi = Some((a, b));
                }
            }
        }
        let family = match max_bond {
            0 | 1 => {
                if let Some(&branch) = nodes.iter().find(|&&v| degree(v) == 3) {
                    let mut arms: Vec<usize> = nodes
                        .iter()
                        .filter(|&&w| self.bond(branch - 1, w - 1) > 0)
                        .map(|&w| self.arm_length(&nodes, branch, w))
                        .collect();
                    arms.sort_unstable();
                    match (arms[0], arms[1], arms[2]) {
                        (1, 1, _) => LieFamily::D,
                        (1, 2, 2) => LieFamily::E6,
                        (1, 2, 3) => LieFamily::E7,
                        _ => LieFamily::E8,
                    }
                } else {
                    LieFamily::A
                }
            }
            3 => LieFamily::G2,
            _ => {
                let (a, b) = multi.expect("double bond present");
                if rank == 2 {
                    LieFamily::B
                } else if degree(a) == 2 && degree(b) == 2 {
                    LieFamily::F4
                } else {
                    let end = if degree(a) == 1 { a } else { b };
                    let other = if end == a { b } else { a };
                    if self.root_lengths[end - 1] < self.root_lengths[other - 1] {
                        LieFamily::B
                    } else {
                        LieFamily::C
                    }
                }
            }
        };
        Component { family, rank, nodes, leaves }
    }

    fn arm_length(&self, nodes: &BTreeSet<usize>, from: usize, first: usize) -> usize {
        let mut prev = from;
        let mut cur = first;
        let mut len = 1;
        loop {
            let next = nodes
                .iter()
                .copied()
                .find(|&w| w != prev && w != cur && self.bond(cur - 1, w - 1) > 0);
            match next {
                Some(n) => {
                    prev = cur;
                    cur = n;
                    len += 1;
                }
                None => return len,
            }
        }
    }

    /// Order of the standard parabolic subgroup generated by `nodes`.
    pub fn parabolic_order(&self, nodes: &[usize]) -> u64 {
        self.components(nodes).iter().map(|c| weyl_order(c.family, c.rank)).product()
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Classical order formulas for `|W|`.
pub fn weyl_order(family: LieFamily, rank: usize) -> u64 {
    match family {
        LieFamily::A => factorial(rank + 1),
        LieFamily::B | LieFamily::C => (1u64 << rank) * factorial(rank),
        LieFamily::D => (1u64 << (rank - 1)) * factorial(rank),
        LieFamily::E6 => 51_840,
        LieFamily::E7 => 2_903_040,
        LieFamily::E8 => 696_729_600,
        LieFamily::F4 => 1_152,
        LieFamily::G2 => 12,
    }
}

/// Builds the root system of the given family; rank must be valid for it.
pub fn build_root_system(family: LieFamily, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}
