use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LatticeVector;
use crate::coeffring::{params, MonomialMap, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupType {
    E8,
    E7,
    E6,
    D5,
}

impl GroupType {
    pub const ALL: [GroupType; 4] = [GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5];

    pub fn name(self) -> &'static str {
        match self {
            GroupType::E8 => "e8",
            GroupType::E7 => "e7",
            GroupType::E6 => "e6",
            GroupType::D5 => "d5",
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e8" => Ok(GroupType::E8),
            "e7" => Ok(GroupType::E7),
            "e6" => Ok(GroupType::E6),
            "d5" => Ok(GroupType::D5),
            _ => Err(Error::Parse(format!("unknown group type `{s}`"))),
        }
    }
}

/// The three generator templates. Indices are 1-based point labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `e_a ↔ e_b`, `τ_a ↔ τ_b`.
    Swap(usize, usize),
    /// `x → x (1 + y h2/e_a)(1 + y e_b)^{-1}` and companions.
    X(usize, usize),
    /// `y → (1 + x e_b/h1)(1 + x/e_a)^{-1} y` and companions.
    Y(usize, usize),
}

impl Generator {
    pub fn indices(self) -> (usize, usize) {
        match self {
            Generator::Swap(a, b) | Generator::X(a, b) | Generator::Y(a, b) => (a, b),
        }
    }

    /// The induced linear action on lattice vectors.
    pub fn star(self, l: &LatticeVector) -> LatticeVector {
        let mut o = l.clone();
        match self {
            Generator::Swap(a, b) => {
                o.m.swap(a - 1, b - 1);
            }
            Generator::X(a, b) => {
                let (ma, mb) = (l.mk(a), l.mk(b));
                o.d2 = l.d1 + l.d2 - ma - mb;
                o.set_mk(a, l.d1 - mb);
                o.set_mk(b, l.d1 - ma);
            }
            Generator::Y(a, b) => {
                let (ma, mb) = (l.mk(a), l.mk(b));
                o.d1 = l.d1 + l.d2 - ma - mb;
                o.set_mk(a, l.d2 - mb);
                o.set_mk(b, l.d2 - ma);
            }
        }
        o
    }

    /// The action on parameters as a monomial map.
    pub fn param_map(self) -> MonomialMap {
        use Symbol::{E, H};
        let (a, b) = self.indices();
        let (ea, eb) = (E(a as u8), E(b as u8));
        match self {
            Generator::Swap(..) => MonomialMap::identity().with(ea, params(&[(eb, 1)])).with(eb, params(&[(ea, 1)])),
            Generator::X(..) => MonomialMap::identity()
                .with(ea, params(&[(H(2), 1), (eb, -1)]))
                .with(eb, params(&[(H(2), 1), (ea, -1)]))
                .with(H(1), params(&[(H(1), 1), (H(2), 1), (ea, -1), (eb, -1)])),
            Generator::Y(..) => MonomialMap::identity()
                .with(ea, params(&[(H(1), 1), (eb, -1)]))
                .with(eb, params(&[(H(1), 1), (ea, -1)]))
                .with(H(2), params(&[(H(1), 1), (H(2), 1), (ea, -1), (eb, -1)])),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Swap(a, b) => write!(f, "s_{{{a},{b}}}"),
            Generator::X(a, b) => write!(f, "s^x_{{{a},{b}}}"),
            Generator::Y(a, b) => write!(f, "s^y_{{{a},{b}}}"),
        }
    }
}

/// Index sets `(I, J)` of a boundary condition template.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Template {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: GroupType,
    pub n: usize,
    pub gens: Vec<Generator>,
    /// Dynkin edges between generator indices.
    pub edges: Vec<(usize, usize)>,
    pub x_template: Template,
    pub y_template: Template,
}

fn template(i: &[usize], j: &[usize]) -> Template {
    Template { i: i.to_vec(), j: j.to_vec() }
}

impl GroupSpec {
    pub fn new(kind: GroupType) -> GroupSpec {
        use Generator::*;
        match kind {
            GroupType::E8 => GroupSpec {
                kind,
                n: 11,
                gens: vec![
                    X(10, 11),
                    Swap(8, 9),
                    Swap(7, 8),
                    Y(1, 7),
                    Swap(1, 2),
                    Swap(2, 3),
                    Swap(3, 4),
                    Swap(4, 5),
                    Swap(5, 6),
                ],
                edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (0, 3)],
                x_template: template(&[10], &[11]),
                y_template: template(&[1, 2, 3, 4, 5, 6], &[7, 8, 9]),
            },
            GroupType::E7 => GroupSpec {
                kind,
                n: 10,
                gens: vec![X(9, 10), Swap(7, 8), Swap(6, 7), Swap(5, 6), Y(1, 5), Swap(1, 2), Swap(2, 3), Swap(3, 4)],
                edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 4)],
                x_template: template(&[9], &[10]),
                y_template: template(&[1, 2, 3, 4], &[5, 6, 7, 8]),
            },
            GroupType::E6 => GroupSpec {
                kind,
                n: 9,
                gens: vec![Swap(8, 9), Swap(5, 6), Swap(4, 5), Y(1, 4), Swap(1, 2), Swap(2, 3), X(7, 8)],
                edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 0)],
                x_template: template(&[7], &[8, 9]),
                y_template: template(&[1, 2, 3], &[4, 5, 6]),
            },
            GroupType::D5 => GroupSpec {
                kind,
                n: 8,
                gens: vec![Swap(7, 8), Swap(3, 4), Y(7, 3), X(1, 5), Swap(1, 2), Swap(5, 6)],
                edges: vec![(1, 2), (2, 3), (3, 5), (0, 2), (3, 4)],
                x_template: template(&[1, 2], &[5, 6]),
                y_template: template(&[7, 8], &[3, 4]),
            },
        }
    }

    /// D5 with `s2` exactly as printed, `s^y_{3,7}`; kept to test against.
    pub fn d5_as_printed() -> GroupSpec {
        let mut s = GroupSpec::new(GroupType::D5);
        s.gens[2] = Generator::Y(3, 7);
        s
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    /// Coxeter exponent of the pair `(s_i s_j)`.
    pub fn order(&self, i: usize, j: usize) -> u32 {
        if i == j {
            1
        } else if self.adjacent(i, j) {
            3
        } else {
            2
        }
    }

    pub fn star_action(&self, i: usize, l: &LatticeVector) -> LatticeVector {
        self.gens[i].star(l)
    }

    /// `w(λ)` for a word written left to right; the rightmost letter acts first.
    pub fn star_word(&self, word: &[usize], l: &LatticeVector) -> LatticeVector {
        word.iter().rev().fold(l.clone(), |acc, &g| self.star_action(g, &acc))
    }

    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&g| g >= self.rank()) {
            Some(g) => {
                Err(Error::Invalid(format!("generator {g} out of range for {} (rank {})", self.kind, self.rank())))
            }
            None => Ok(()),
        }
    }

    pub fn delta_red(&self) -> LatticeVector {
        LatticeVector::delta_red(self.n)
    }

    pub fn basis(&self) -> Vec<LatticeVector> {
        let mut v = vec![LatticeVector::h1(self.n), LatticeVector::h2(self.n)];
        v.extend((1..=self.n).map(|k| LatticeVector::e(self.n, k)));
        v
    }
}

/// Parse a word such as `"3 2 1 0"` or `"3,2,1,0"`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split([',', ' '])
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad generator `{p}`"))))
        .collect()
}
