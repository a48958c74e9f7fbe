use std::collections::BTreeMap;

use serde::Serialize;

use super::{Arc, PLMultimap};

/// Outcome of the one-sided test for being a union of equicardinal maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum UnionCheck {
    /// Every component has the same fiber size over the whole domain.
    Sufficient,
    /// Some component (the first such is named) has non-constant fiber size.
    /// This does not prove the map is outside the class.
    Inconclusive { component: usize },
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

impl PLMultimap {
    /// Arc indices of each connected component, ordered by smallest arc.
    pub fn component_arcs(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.arcs.len()).collect();
        for inc in self.incidences().values() {
            let mut all = inc.left.iter().chain(&inc.right);
            if let Some(&first) = all.next() {
                for &other in all {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.arcs.len() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    /// Connected components of the graph, glued at shared points and, on
    /// circle domains, across the seam. Each keeps the bound `n`.
    pub fn components(&self) -> Vec<PLMultimap> {
        self.component_arcs()
            .into_iter()
            .map(|arcs| self.sub_multimap(&arcs))
            .collect()
    }

    pub(crate) fn sub_multimap(&self, arc_ids: &[usize]) -> PLMultimap {
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut arcs = Vec::new();
        for &i in arc_ids {
            let a = &self.arcs[i];
            let mut idx = |v: usize| {
                *remap.entry(v).or_insert_with(|| {
                    vertices.push(self.vertices[v].clone());
                    vertices.len() - 1
                })
            };
            let (from, to) = (idx(a.from), idx(a.to));
            arcs.push(Arc {
                from,
                to,
                weight: a.weight,
                lift: a.lift,
            });
        }
        PLMultimap::new(self.n, self.domain, vertices, arcs)
            .expect("a subgraph of a well-formed map is well-formed")
    }

    pub fn union_check(&self) -> UnionCheck {
        for (i, c) in self.components().iter().enumerate() {
            let p = c.cardinality_profile();
            if !p.is_constant() || p.pieces()[0].count == 0 {
                return UnionCheck::Inconclusive { component: i };
            }
        }
        UnionCheck::Sufficient
    }
}
