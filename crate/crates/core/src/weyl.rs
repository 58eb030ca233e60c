//! Weyl group elements stored as their action on the simple roots.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootsys::{height, LieFamily, RootSystem, RootVec, MAX_RANK};

/// A word in the simple reflections, letters 1-based.
pub type Word = Vec<u8>;

/// Parses a digit string (`"765432413"`) or a JSON array (`"[7,6,5]"`).
/// Whitespace is ignored; the empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let t = s.trim();
    if t.starts_with('[') {
        let letters: Vec<i64> =
            serde_json::from_str(t).map_err(|e| Error::MalformedWord(format!("{t}: {e}")))?;
        return letters
            .into_iter()
            .map(|x| {
                u8::try_from(x)
                    .ok()
                    .filter(|&c| (1..=9).contains(&c))
                    .ok_or_else(|| Error::MalformedWord(format!("letter {x} out of range")))
            })
            .collect();
    }
    t.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_digit(10) {
            Some(d) if d >= 1 => Ok(d as u8),
            _ => Err(Error::MalformedWord(format!("unexpected character {c:?} in {t:?}"))),
        })
        .collect()
}

/// Digit-string rendering of a word.
pub fn format_word(word: &[u8]) -> String {
    word.iter().map(|&c| char::from(b'0' + c)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element `w` of the Weyl group. Column `j` of the canonical matrix is
/// `w(α_j)` in simple-root coordinates.
#[derive(Debug, Clone, Copy)]
pub struct WeylElement {
    family: LieFamily,
    rank: u8,
    length: u16,
    images: [[i8; MAX_RANK]; MAX_RANK],
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.images.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the canonical matrix.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank, &self.images).cmp(&(other.rank, &other.images))
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Rows are simple-root coordinates, columns are `w(α_1), …, w(α_r)`.
    pub fn canonical(&self) -> Vec<Vec<i32>> {
        let r = self.rank();
        (0..r).map(|k| (0..r).map(|j| self.images[j][k] as i32).collect()).collect()
    }

    /// `w(α_j)`, `j` 0-based.
    #[inline]
    pub(crate) fn image(&self, j: usize) -> RootVec {
        let mut v = [0; MAX_RANK];
        for (k, x) in v.iter_mut().enumerate().take(self.rank as usize) {
            *x = self.images[j][k] as i32;
        }
        v
    }

    pub(crate) fn raw_images(&self) -> &[[i8; MAX_RANK]; MAX_RANK] {
        &self.images
    }

    pub(crate) fn from_raw(
        family: LieFamily,
        rank: usize,
        length: usize,
        images: [[i8; MAX_RANK]; MAX_RANK],
    ) -> Self {
        WeylElement { family, rank: rank as u8, length: length as u16, images }
    }

    /// Bitmask (bit `i` for 0-based node `i`) of right descents: `w(α_i) < 0`.
    #[inline]
    pub fn right_descent_mask(&self) -> u16 {
        let mut mask = 0;
        for i in 0..self.rank as usize {
            let h: i32 = self.images[i].iter().map(|&c| c as i32).sum();
            if h < 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Nodes whose simple reflection appears in some (equivalently every)
    /// reduced word, as a bitmask. Node `k` is in the support iff row `k` of
    /// the canonical matrix differs from the identity, since that row vanishes
    /// exactly when `w` fixes the `k`-th fundamental coweight.
    pub fn support_mask(&self) -> u16 {
        let r = self.rank as usize;
        let mut mask = 0;
        for j in 0..r {
            for k in 0..r {
                let expected = i8::from(j == k);
                if self.images[j][k] != expected {
                    mask |= 1 << k;
                }
            }
        }
        mask
    }
}

fn mask_to_nodes(mask: u16) -> Vec<usize> {
    (0..16).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        let mut images = [[0i8; MAX_RANK]; MAX_RANK];
        for (j, col) in images.iter_mut().enumerate().take(self.rank()) {
            col[j] = 1;
        }
        WeylElement { family: self.family(), rank: self.rank() as u8, length: 0, images }
    }

    pub(crate) fn check_context(&self, w: &WeylElement) -> Result<()> {
        if w.rank() != self.rank() || w.family != self.family() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// Bitmask of nodes `i` with `ℓ(s_i w) < ℓ(w)`, i.e. `(α_i, w(ρ)) < 0`.
    #[inline]
    pub fn left_descent_mask(&self, w: &WeylElement) -> u16 {
        let r = self.rank();
        let two_rho = self.two_rho();
        let mut y = [0i32; MAX_RANK];
        for j in 0..r {
            let c = two_rho[j];
            for (k, yk) in y.iter_mut().enumerate().take(r) {
                *yk += c * w.images[j][k] as i32;
            }
        }
        let form = self.form_raw();
        let mut mask = 0;
        for i in 0..r {
            let z: i32 = (0..r).map(|k| form[i][k] * y[k]).sum();
            if z < 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn descents(&self, w: &WeylElement, side: Side) -> Vec<usize> {
        match side {
            Side::Left => mask_to_nodes(self.left_descent_mask(w)),
            Side::Right => mask_to_nodes(w.right_descent_mask()),
        }
    }

    /// `s_i · w`, `i` 0-based.
    pub(crate) fn left_mul_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        let descent = self.left_descent_mask(w) & (1 << i) != 0;
        self.left_mul_simple_known(i, w, descent)
    }

    /// `s_i · w` when the caller already knows whether `i` is a left descent.
    #[inline]
    pub(crate) fn left_mul_simple_known(&self, i: usize, w: &WeylElement, descent: bool) -> WeylElement {
        let r = self.rank();
        let cartan = self.cartan_raw();
        let mut out = *w;
        for col in out.images.iter_mut().take(r) {
            let c: i32 = (0..r).map(|k| col[k] as i32 * cartan[k][i]).sum();
            col[i] = (col[i] as i32 - c) as i8;
        }
        out.length = if descent { w.length - 1 } else { w.length + 1 };
        out
    }

    /// `w · s_i`, `i` 0-based.
    #[inline]
    pub(crate) fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let r = self.rank();
        let cartan = self.cartan_raw();
        let mut out = *w;
        let col_i = w.images[i];
        for j in 0..r {
            let a = cartan[j][i];
            if a != 0 {
                for k in 0..r {
                    out.images[j][k] = (w.images[j][k] as i32 - a * col_i[k] as i32) as i8;
                }
            }
        }
        let h: i32 = col_i.iter().map(|&c| c as i32).sum();
        out.length = if h < 0 { w.length - 1 } else { w.length + 1 };
        out
    }

    /// Product of the letters, left to right. The word need not be reduced.
    pub fn from_word(&self, word: &[u8]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &c in word {
            let c = c as usize;
            if c == 0 || c > self.rank() {
                return Err(Error::NodeOutOfRange { node: c, rank: self.rank() });
            }
            w = self.right_mul_simple(&w, c - 1);
        }
        Ok(w)
    }

    /// `ℓ(w)` recomputed as the number of positive roots sent negative.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        let r = self.rank();
        let heights: Vec<i32> = (0..r).map(|j| height(&w.image(j))).collect();
        self.positive_roots_raw()
            .iter()
            .filter(|beta| (0..r).map(|j| beta[j] * heights[j]).sum::<i32>() < 0)
            .count()
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut images = [[0i8; MAX_RANK]; MAX_RANK];
        for j in 0..r {
            let mut acc = [0i32; MAX_RANK];
            for k in 0..r {
                let c = v.images[j][k] as i32;
                if c != 0 {
                    for (l, a) in acc.iter_mut().enumerate().take(r) {
                        *a += c * u.images[k][l] as i32;
                    }
                }
            }
            for l in 0..r {
                images[j][l] = acc[l] as i8;
            }
        }
        let mut out = WeylElement { family: self.family(), rank: r as u8, length: 0, images };
        out.length = self.inversion_count(&out) as u16;
        out
    }

    /// `u · v` when the length of the product is known in advance.
    pub(crate) fn multiply_with_length(&self, u: &WeylElement, v: &WeylElement, length: usize) -> WeylElement {
        let r = self.rank();
        let mut images = [[0i8; MAX_RANK]; MAX_RANK];
        for j in 0..r {
            for l in 0..r {
                let mut acc = 0i32;
                for k in 0..r {
                    acc += v.images[j][k] as i32 * u.images[k][l] as i32;
                }
                images[j][l] = acc as i8;
            }
        }
        WeylElement { family: self.family(), rank: r as u8, length: length as u16, images }
    }

    /// Reduced word built by repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = *w;
        while cur.length > 0 {
            let mask = self.left_descent_mask(&cur);
            let i = mask.trailing_zeros() as usize;
            word.push(i as u8 + 1);
            cur = self.left_mul_simple_known(i, &cur, true);
        }
        word
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word).expect("letters come from a reduced word")
    }

    /// Longest element of the parabolic subgroup generated by `nodes`
    /// (1-based), by greedy right ascents.
    pub fn longest_element_of(&self, nodes: &[usize]) -> WeylElement {
        let mask: u16 = nodes.iter().filter(|&&n| n >= 1 && n <= self.rank()).fold(0, |m, &n| m | 1 << (n - 1));
        self.longest_element_mask(mask)
    }

    pub(crate) fn longest_element_mask(&self, mask: u16) -> WeylElement {
        let mut w = self.identity();
        loop {
            let ascents = mask & !w.right_descent_mask();
            if ascents == 0 {
                return w;
            }
            w = self.right_mul_simple(&w, ascents.trailing_zeros() as usize);
        }
    }

    /// `w₀`.
    pub fn longest_element(&self) -> WeylElement {
        self.longest_element_mask(((1u32 << self.rank()) - 1) as u16)
    }
}
