//! Fundamental group presentations read off the 2-skeleton, and a small
//! Tietze-move simplifier.

use std::fmt;

use super::cells::{build_cell_complex, cell_of_face, CellId, CellKind};
use super::face::SimplexFace;
use crate::error::Result;

/// A generator index with exponent `+1` (`inverse == false`) or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

pub type Word = Vec<Letter>;

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Cancels adjacent `g g^-1` pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&p) if p == l.inv() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Free reduction followed by cancelling the ends against each other.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let k = generators.len();
        if let Some(l) = relators.iter().flatten().find(|l| l.generator >= k) {
            return Err(crate::error::Error::Invalid(format!(
                "relator uses generator {} of {k}",
                l.generator
            )));
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let exp = (j - i) as i64 * if w[i].inverse { -1 } else { 1 };
            let name = &self.generators[w[i].generator];
            parts.push(if exp == 1 {
                name.clone()
            } else {
                format!("{name}^{exp}")
            });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        if rels.is_empty() {
            write!(f, "< {} | >", self.generators.join(", "))
        } else {
            write!(
                f,
                "< {} | {} >",
                self.generators.join(", "),
                rels.join(", ")
            )
        }
    }
}

/// Edge-path presentation of `pi_1(C_n(S^1))`.
///
/// There is one vertex, so every 1-cell is a generator (`alpha` for
/// non-extremal edges, `beta` for extremal ones). Each 2-cell
/// `<b_i, b_j, b_k>` contributes the word `e(i,j) e(j,k) e(i,k)^-1`, freely
/// reduced.
pub fn pi1_presentation(n: usize) -> Result<GroupPresentation> {
    let cc = build_cell_complex(n)?;
    let edges = cc.cells(1).to_vec();
    let generators = edges
        .iter()
        .map(|c| match c.kind {
            CellKind::NonExtremal => "alpha".to_string(),
            _ => "beta".to_string(),
        })
        .collect();
    let edge = |i: usize, j: usize| -> Letter {
        let face = SimplexFace::new(n, vec![i, j]).expect("valid edge");
        let id = cell_of_face(&face);
        Letter::new(
            edges
                .iter()
                .position(|c| *c == id)
                .expect("edge is a 1-cell"),
        )
    };
    let relators = if n >= 2 {
        cc.cells(2)
            .iter()
            .map(|c: &CellId| {
                let v = c.representative(n).vertices().to_vec();
                free_reduce(&[edge(v[0], v[1]), edge(v[1], v[2]), edge(v[0], v[2]).inv()])
            })
            .collect()
    } else {
        Vec::new()
    };
    GroupPresentation::new(generators, relators)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplified {
    Trivial,
    FreeOfRank(usize),
    Inconclusive(GroupPresentation),
}

impl fmt::Display for Simplified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplified::Trivial => write!(f, "trivial"),
            Simplified::FreeOfRank(r) => write!(f, "free of rank {r}"),
            Simplified::Inconclusive(p) => write!(f, "inconclusive: {p}"),
        }
    }
}

/// Removes generator `g` by rewriting it as `replacement` everywhere.
fn eliminate(p: &GroupPresentation, g: usize, replacement: &[Letter]) -> GroupPresentation {
    let shift = |l: Letter| Letter {
        generator: if l.generator > g {
            l.generator - 1
        } else {
            l.generator
        },
        ..l
    };
    let replacement: Word = replacement.iter().copied().map(shift).collect();
    let relators = p
        .relators
        .iter()
        .map(|r| {
            let mut out = Vec::new();
            for &l in r {
                if l.generator == g {
                    if l.inverse {
                        out.extend(invert(&replacement));
                    } else {
                        out.extend(replacement.iter().copied());
                    }
                } else {
                    out.push(shift(l));
                }
            }
            out
        })
        .collect();
    let mut generators = p.generators.clone();
    generators.remove(g);
    GroupPresentation {
        generators,
        relators,
    }
}

/// Repeats free/cyclic reduction and generator elimination until nothing
/// changes, then reports trivial or free presentations.
///
/// A generator `g` is eliminated when some relator contains it exactly once:
/// rotating that relator to `w g^e` gives `g = w^-1` (or `w` if `e = -1`).
/// A length-one relator is the special case `w = 1`.
pub fn simplify_presentation(p: &GroupPresentation) -> Simplified {
    let mut p = p.clone();
    loop {
        p.relators = p
            .relators
            .iter()
            .map(|r| cyclic_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        p.relators.dedup();

        let found = p.relators.iter().enumerate().find_map(|(ri, r)| {
            (0..p.generators.len())
                .find(|&g| r.iter().filter(|l| l.generator == g).count() == 1)
                .map(|g| (ri, g))
        });
        let Some((ri, g)) = found else { break };
        let r = p.relators.remove(ri);
        let pos = r.iter().position(|l| l.generator == g).expect("present");
        let letter = r[pos];
        // r rotated so the letter is last: w = r[pos+1..] r[..pos]
        let w: Word = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let replacement = if letter.inverse { w } else { invert(&w) };
        p = eliminate(&p, g, &replacement);
    }
    match (p.relators.is_empty(), p.generators.len()) {
        (true, 0) => Simplified::Trivial,
        (true, r) => Simplified::FreeOfRank(r),
        (false, _) => Simplified::Inconclusive(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Letter {
        Letter::new(0)
    }
    fn b() -> Letter {
        Letter::new(1)
    }
    fn pres(gens: &[&str], rels: Vec<Word>) -> GroupPresentation {
        GroupPresentation::new(gens.iter().map(|s| s.to_string()).collect(), rels).unwrap()
    }

    #[test]
    fn presentations_by_n() {
        assert_eq!(pi1_presentation(1).unwrap(), pres(&["beta"], vec![]));
        assert_eq!(
            pi1_presentation(2).unwrap(),
            pres(&["alpha", "beta"], vec![vec![a(), a(), b().inv()]])
        );
        for n in 3..=8 {
            let p = pi1_presentation(n).unwrap();
            assert_eq!(
                p,
                pres(
                    &["alpha", "beta"],
                    vec![vec![a()], vec![a(), a(), b().inv()]]
                )
            );
            assert_eq!(p.to_string(), "< alpha, beta | alpha, alpha^2 beta^-1 >");
        }
    }

    #[test]
    fn simplifier_verdicts() {
        for n in 3..=8 {
            assert_eq!(
                simplify_presentation(&pi1_presentation(n).unwrap()),
                Simplified::Trivial
            );
        }
        for n in 1..=2 {
            assert_eq!(
                simplify_presentation(&pi1_presentation(n).unwrap()),
                Simplified::FreeOfRank(1)
            );
        }
        assert_eq!(
            simplify_presentation(&pres(&["a"], vec![])),
            Simplified::FreeOfRank(1)
        );
    }

    #[test]
    fn stuck_presentations_are_inconclusive() {
        // Z/2 and the abelian group on two generators need more than these moves.
        let z2 = pres(&["a"], vec![vec![a(), a()]]);
        assert!(matches!(
            simplify_presentation(&z2),
            Simplified::Inconclusive(_)
        ));
        let comm = pres(&["a", "b"], vec![vec![a(), b(), a().inv(), b().inv()]]);
        assert!(matches!(
            simplify_presentation(&comm),
            Simplified::Inconclusive(_)
        ));
    }

    #[test]
    fn elimination_substitutes() {
        // <a, b | a b a^-1, b^3>: b = a^-1 a ... reduces to b = 1 then a free.
        let p = pres(
            &["a", "b"],
            vec![vec![a(), b(), a().inv()], vec![b(), b(), b()]],
        );
        assert_eq!(simplify_presentation(&p), Simplified::FreeOfRank(1));
        // <a, b | a b>: one generator left, free.
        let p = pres(&["a", "b"], vec![vec![a(), b()]]);
        assert_eq!(simplify_presentation(&p), Simplified::FreeOfRank(1));
    }

    #[test]
    fn reductions() {
        assert!(free_reduce(&[a(), b(), b().inv(), a().inv()]).is_empty());
        assert_eq!(cyclic_reduce(&[b(), a(), a(), b().inv()]), vec![a(), a()]);
        assert!(GroupPresentation::new(vec!["a".into()], vec![vec![b()]]).is_err());
    }
}
