//! Basis labels and labeled free modules.

use std::collections::HashMap;
use std::fmt;

use multilinear::{IndexSet, Side};

/// A basis element `x_left ⊗ y_right` of the summand `F_r(family)^(t)`, where
/// `t = |left|`. Families 1 and 4 are `⋀F*⊗⋀F*`; families 2 and 3 are `⋀F⊗⋀F*`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisLabel {
    pub family: u8,
    pub left: IndexSet,
    pub right: IndexSet,
}

impl BasisLabel {
    pub fn new(family: u8, left: IndexSet, right: IndexSet) -> Self {
        assert!((1..=4).contains(&family), "family {family} out of range");
        BasisLabel { family, left, right }
    }

    /// Stratum index `t`.
    pub fn t(&self) -> usize {
        self.left.len()
    }

    /// Side of the left tensor factor.
    pub fn left_side(&self) -> Side {
        left_side(self.family)
    }

    /// Homological degree of the summand containing this label.
    pub fn degree(&self) -> i64 {
        let k = (self.left.len() + self.right.len()) as i64;
        match self.family {
            1 => k - 1,
            2 | 3 => k,
            _ => k + 1,
        }
    }

    /// Internal degree (twist) under `deg x = 1`, `deg v = d_v`.
    pub fn twist(&self, n: usize, d_v: i64) -> i64 {
        let (n, t, r) = (n as i64, self.t() as i64, self.degree());
        match self.family {
            1 => t * n - t + d_v * (r + 1 - 2 * t),
            2 => t * n + d_v * (r - 2 * t),
            3 => (r - t) * n + (d_v + 1) * (2 * t - r),
            _ => (t + 1) * n - t + d_v * (r - 1 - 2 * t),
        }
    }
}

/// Side of the left factor for a family; the right factor is always dual.
pub fn left_side(family: u8) -> Side {
    match family {
        2 | 3 => Side::Primal,
        _ => Side::Dual,
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match self.left_side() {
            Side::Primal => "e",
            Side::Dual => "ε",
        };
        write!(f, "F({})^{}[{l}{}⊗ε{}]", self.family, self.t(), self.left, self.right)
    }
}

/// Which part of a split stratum a submodule basis vector belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Part {
    Whole,
    Prime,
    DoublePrime,
}

/// A basis element of some free module in the constructions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    /// A basis monomial of `F_r`.
    F(BasisLabel),
    /// A basis monomial of summand `summand ∈ 0..4` of `G_r = F'_r ⊕ F'_{r−1} ⊕ F'_{r−1} ⊕ F'_{r−2}`.
    G { summand: u8, inner: BasisLabel },
    /// Basis vector `index` of a submodule of the stratum `F(family)^(t)`.
    Sub { space: char, family: u8, t: u8, part: Part, index: usize },
    /// A wedge product of basis vectors (1-based) of a fixed module.
    Wedge(Vec<usize>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::F(b) => write!(f, "{b}"),
            Label::G { summand, inner } => write!(f, "{}:{inner}", ["A", "B", "C", "D"][*summand as usize]),
            Label::Sub { space, family, t, part, index } => {
                let p = match part {
                    Part::Whole => "",
                    Part::Prime => "'",
                    Part::DoublePrime => "''",
                };
                write!(f, "{space}[F({family})^{t}]{p}#{index}")
            }
            Label::Wedge(w) => {
                write!(f, "w")?;
                for i in w {
                    write!(f, "{i}")?;
                }
                Ok(())
            }
        }
    }
}

/// A free module with labeled basis and a twist per basis element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledModule {
    labels: Vec<Label>,
    twists: Vec<i64>,
    index: HashMap<Label, usize>,
}

impl LabeledModule {
    pub fn new(labels: Vec<Label>, twists: Vec<i64>) -> Self {
        assert_eq!(labels.len(), twists.len(), "one twist per label");
        let index: HashMap<Label, usize> = labels.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        assert_eq!(index.len(), labels.len(), "labels must be unique");
        LabeledModule { labels, twists, index }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn label(&self, k: usize) -> &Label {
        &self.labels[k]
    }

    pub fn twist(&self, k: usize) -> i64 {
        self.twists[k]
    }

    pub fn position(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    /// Position of an `F` label; panics if absent.
    pub fn pos_f(&self, b: &BasisLabel) -> usize {
        self.position(&Label::F(*b)).unwrap_or_else(|| panic!("label {b} not in module"))
    }

    /// Multiset of twists as sorted `(twist, count)` pairs.
    pub fn twist_counts(&self) -> Vec<(i64, usize)> {
        let mut m = std::collections::BTreeMap::new();
        for &t in &self.twists {
            *m.entry(t).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }
}

/// All basis labels of `F_r` for rank `n`, ordered by family, stratum, left, right.
pub fn f_labels(n: usize, r: i64) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for family in 1..=4u8 {
        let k = match family {
            1 => r + 1,
            2 | 3 => r,
            _ => r - 1,
        };
        for t in 0..=n as i64 {
            let s = k - t;
            if s < 0 || s > n as i64 {
                continue;
            }
            for l in IndexSet::subsets(n, t as usize) {
                for rr in IndexSet::subsets(n, s as usize) {
                    out.push(BasisLabel::new(family, l, rr));
                }
            }
        }
    }
    out
}
