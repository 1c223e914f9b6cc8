//! The Looking-glass Zoo: each child's list of eight names is a permutation
//! of the true arrangement, and the keeper's observations constrain the
//! lists to a family of mutually compatible permutations.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{FtrError, Result};

/// Permutation of the labels 1..=8, stored 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm8([u8; 8]);

pub const IDENTITY: Perm8 = Perm8([0, 1, 2, 3, 4, 5, 6, 7]);
/// Swaps every animal with its mate.
pub const T: Perm8 = Perm8([1, 0, 3, 2, 5, 4, 7, 6]);

fn mate(i: u8) -> u8 {
    i ^ 1
}

impl Perm8 {
    /// From the 1-based images of 1..=8.
    pub fn from_images(images: [u8; 8]) -> Result<Self> {
        let mut seen = [false; 8];
        let mut m = [0u8; 8];
        for (i, &v) in images.iter().enumerate() {
            if !(1..=8).contains(&v) || seen[(v - 1) as usize] {
                return Err(FtrError::Domain(format!("not a permutation: {images:?}")));
            }
            seen[(v - 1) as usize] = true;
            m[i] = v - 1;
        }
        Ok(Perm8(m))
    }

    /// 1-based image of 1-based label `i`.
    pub fn apply(&self, i: u8) -> u8 {
        self.0[(i - 1) as usize] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm8) -> Perm8 {
        let mut m = [0u8; 8];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        Perm8(m)
    }

    pub fn inverse(&self) -> Perm8 {
        let mut m = [0u8; 8];
        for (i, &v) in self.0.iter().enumerate() {
            m[v as usize] = i as u8;
        }
        Perm8(m)
    }

    pub fn is_mate_respecting(&self) -> bool {
        (0..8u8).all(|i| self.0[mate(i) as usize] == mate(self.0[i as usize]))
    }

    /// P∘Q∘P⁻¹∘Q⁻¹ = T
    pub fn commutator_is_t(&self, other: &Perm8) -> bool {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
            == T
    }

    pub fn classify(&self) -> Result<Gender> {
        if !self.is_mate_respecting() {
            return Err(FtrError::NotMateRespecting);
        }
        let sq = self.compose(self);
        Ok(if sq == IDENTITY {
            Gender::Boy
        } else if sq == T {
            Gender::Girl
        } else {
            Gender::Neither
        })
    }

    /// Names right, taking the true arrangement as the identity.
    pub fn score(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i as u8 == v)
            .count() as u32
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 8];
        let mut out = Vec::new();
        for start in 0..8u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i as usize] {
                seen[i as usize] = true;
                cycle.push(i + 1);
                i = self.0[i as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// All 8! permutations in lexicographic order of their images.
    pub fn all() -> Vec<Perm8> {
        (0..8u8)
            .into_par_iter()
            .flat_map_iter(Self::all_starting_with)
            .collect()
    }

    /// The 7! permutations sending label 1 to `first + 1`.
    fn all_starting_with(first: u8) -> Vec<Perm8> {
        let rest: Vec<u8> = (0..8).filter(|&v| v != first).collect();
        let mut out = Vec::with_capacity(5040);
        let mut buf = [0u8; 8];
        buf[0] = first;
        fn rec(
            rest: &[u8],
            used: &mut [bool; 7],
            depth: usize,
            buf: &mut [u8; 8],
            out: &mut Vec<Perm8>,
        ) {
            if depth == 8 {
                out.push(Perm8(*buf));
                return;
            }
            for k in 0..rest.len() {
                if !used[k] {
                    used[k] = true;
                    buf[depth] = rest[k];
                    rec(rest, used, depth + 1, buf, out);
                    used[k] = false;
                }
            }
        }
        rec(&rest, &mut [false; 7], 1, &mut buf, &mut out);
        out
    }
}

impl fmt::Display for Perm8 {
    /// Cycle notation with singletons, e.g. `(1)(2)(3 4)(5 6)(7)(8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let body: Vec<String> = c.iter().map(u8::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Perm8 {
    type Err = FtrError;

    /// Parses cycle notation; omitted labels are fixed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || FtrError::Domain(format!("bad cycle notation `{s}`"));
        let mut images = [0u8; 8];
        for (i, v) in images.iter_mut().enumerate() {
            *v = i as u8 + 1;
        }
        let mut seen = [false; 8];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let labels = body[..end]
                .split_whitespace()
                .map(|t| t.parse::<u8>().ok().filter(|v| (1..=8).contains(v)))
                .collect::<Option<Vec<u8>>>()
                .ok_or_else(bad)?;
            for (k, &l) in labels.iter().enumerate() {
                if std::mem::replace(&mut seen[(l - 1) as usize], true) {
                    return Err(bad());
                }
                images[(l - 1) as usize] = labels[(k + 1) % labels.len()];
            }
            rest = body[end + 1..].trim_start();
        }
        Perm8::from_images(images)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Boy,
    Girl,
    Neither,
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gender::Boy => "boy",
            Gender::Girl => "girl",
            Gender::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub members: Vec<(Perm8, Gender)>,
}

impl Family {
    pub fn boys(&self) -> usize {
        self.members
            .iter()
            .filter(|(_, g)| *g == Gender::Boy)
            .count()
    }

    pub fn girls(&self) -> usize {
        self.members
            .iter()
            .filter(|(_, g)| *g == Gender::Girl)
            .count()
    }

    pub fn is_compatible(&self) -> bool {
        self.members.iter().enumerate().all(|(i, (p, _))| {
            self.members[i + 1..]
                .iter()
                .all(|(q, _)| p.commutator_is_t(q))
        })
    }

    pub fn best_score(&self) -> u32 {
        self.members
            .iter()
            .map(|(p, _)| p.score())
            .max()
            .unwrap_or(0)
    }

    /// Members holding the best score.
    pub fn winners(&self) -> Vec<(Perm8, Gender)> {
        let best = self.best_score();
        self.members
            .iter()
            .filter(|(p, _)| p.score() == best)
            .copied()
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooSolution {
    pub size: usize,
    pub families: Vec<Family>,
}

/// Mate-respecting boys and girls among all 8! permutations.
pub fn children() -> Vec<(Perm8, Gender)> {
    (0..8u8)
        .into_par_iter()
        .flat_map_iter(|first| {
            Perm8::all_starting_with(first)
                .into_iter()
                .filter_map(|p| match p.classify() {
                    Ok(g @ (Gender::Boy | Gender::Girl)) => Some((p, g)),
                    _ => None,
                })
        })
        .collect()
}

/// Largest mutually compatible families, optionally requiring at least one
/// boy and one girl. Families are listed in a fixed order.
pub fn max_family(require_mixed: bool) -> ZooSolution {
    let kids = children();
    let n = kids.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| i != j && kids[i].0.commutator_is_t(&kids[j].0))
                .collect()
        })
        .collect();

    // cliques grown in increasing index order, one branch per starting vertex
    let per_start: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut found = Vec::new();
            let cand: Vec<usize> = (s + 1..n).filter(|&j| adj[s][j]).collect();
            grow(&adj, &mut vec![s], &cand, &mut found);
            found
        })
        .collect();

    let ok = |c: &Vec<usize>| {
        !require_mixed
            || (c.iter().any(|&i| kids[i].1 == Gender::Boy)
                && c.iter().any(|&i| kids[i].1 == Gender::Girl))
    };
    let maximal: Vec<Vec<usize>> = per_start.into_iter().flatten().filter(ok).collect();
    let size = maximal.iter().map(Vec::len).max().unwrap_or(0);
    let families = maximal
        .into_iter()
        .filter(|c| c.len() == size)
        .map(|c| Family {
            members: c.into_iter().map(|i| kids[i]).collect(),
        })
        .collect();
    ZooSolution { size, families }
}

/// Records every clique that cannot be extended by a later vertex.
fn grow(adj: &[Vec<bool>], clique: &mut Vec<usize>, cand: &[usize], found: &mut Vec<Vec<usize>>) {
    if cand.is_empty() {
        found.push(clique.clone());
        return;
    }
    for (k, &v) in cand.iter().enumerate() {
        let next: Vec<usize> = cand[k + 1..]
            .iter()
            .copied()
            .filter(|&w| adj[v][w])
            .collect();
        clique.push(v);
        grow(adj, clique, &next, found);
        clique.pop();
    }
}

/// One optimal family with the children's names.
pub fn named_witness() -> Vec<(&'static str, Perm8)> {
    [
        ("Mary", "(1 3 2 4)(5 7 6 8)"),
        ("Sue", "(1 5 2 6)(3 8 4 7)"),
        ("John", "(1)(2)(3 4)(5 6)(7)(8)"),
        ("Bob", "(1 3)(2 4)(5 7)(6 8)"),
        ("Jim", "(1 5)(2 6)(3 8)(4 7)"),
    ]
    .into_iter()
    .map(|(name, s)| (name, s.parse().expect("valid cycle notation")))
    .collect()
}
