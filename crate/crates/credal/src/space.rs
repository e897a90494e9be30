//! Product domains: ordered lists of named finite-domain variables with a
//! row-major cell layout (last variable fastest).

use crate::error::{CredalError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    vars: Vec<(String, usize)>,
}

impl Space {
    pub fn new<S: Into<String>>(vars: Vec<(S, usize)>) -> Result<Self> {
        let vars: Vec<(String, usize)> = vars.into_iter().map(|(n, c)| (n.into(), c)).collect();
        if vars.is_empty() {
            return Err(CredalError::EmptyInput("space needs a variable".into()));
        }
        for (i, (name, card)) in vars.iter().enumerate() {
            if *card == 0 {
                return Err(CredalError::InvalidValue(format!(
                    "variable `{name}` has cardinality 0"
                )));
            }
            if vars[..i].iter().any(|(n, _)| n == name) {
                return Err(CredalError::DuplicateVariable { name: name.clone() });
            }
        }
        Ok(Space { vars })
    }

    pub fn vars(&self) -> &[(String, usize)] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.vars.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Number of cells, i.e. the product of all cardinalities.
    pub fn cell_count(&self) -> usize {
        self.vars.iter().map(|(_, c)| c).product()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|(n, _)| n == name)
    }

    pub fn cardinality(&self, name: &str) -> Option<usize> {
        self.vars
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| *c)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.position(name).is_some()
    }

    /// Row-major cell index of a full assignment, last variable fastest.
    pub fn index_of(&self, assignment: &[usize]) -> usize {
        debug_assert_eq!(assignment.len(), self.vars.len());
        let mut idx = 0;
        for ((_, card), &a) in self.vars.iter().zip(assignment) {
            debug_assert!(a < *card);
            idx = idx * card + a;
        }
        idx
    }

    pub fn assignment_of(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.vars.len()];
        for (slot, (_, card)) in out.iter_mut().zip(&self.vars).rev() {
            *slot = index % card;
            index /= card;
        }
        out
    }

    /// Subspace over `names`, keeping this space's relative variable order.
    /// `names` is treated as a set; order of the request does not matter.
    pub fn subspace(&self, names: &[&str]) -> Result<Space> {
        if names.is_empty() {
            return Err(CredalError::EmptyInput("empty variable subset".into()));
        }
        for n in names {
            if !self.contains(n) {
                return Err(CredalError::UnknownVariable {
                    name: (*n).to_string(),
                });
            }
        }
        let vars: Vec<(String, usize)> = self
            .vars
            .iter()
            .filter(|(n, _)| names.contains(&n.as_str()))
            .cloned()
            .collect();
        Space::new(vars)
    }

    /// Union space ordered by first appearance in `(self, other)`. Shared
    /// names must agree on cardinality.
    pub fn union(&self, other: &Space) -> Result<Space> {
        let mut vars = self.vars.clone();
        for (name, card) in &other.vars {
            match self.cardinality(name) {
                Some(c) if c != *card => {
                    return Err(CredalError::CardinalityClash {
                        name: name.clone(),
                        left: c,
                        right: *card,
                    })
                }
                Some(_) => {}
                None => vars.push((name.clone(), *card)),
            }
        }
        Space::new(vars)
    }

    pub fn same_var_set(&self, other: &Space) -> bool {
        self.arity() == other.arity()
            && self
                .vars
                .iter()
                .all(|(n, c)| other.cardinality(n) == Some(*c))
    }

    /// For each cell of `self`, the index of its projection in `sub`.
    /// Every variable of `sub` must occur in `self` with equal cardinality.
    pub fn projection_map(&self, sub: &Space) -> Result<Vec<usize>> {
        let mut positions = Vec::with_capacity(sub.arity());
        for (name, card) in &sub.vars {
            match self.position(name) {
                Some(p) => {
                    if self.vars[p].1 != *card {
                        return Err(CredalError::CardinalityClash {
                            name: name.clone(),
                            left: self.vars[p].1,
                            right: *card,
                        });
                    }
                    positions.push(p);
                }
                None => {
                    return Err(CredalError::UnknownVariable { name: name.clone() });
                }
            }
        }
        let mut map = Vec::with_capacity(self.cell_count());
        let mut sub_assignment = vec![0usize; sub.arity()];
        for cell in 0..self.cell_count() {
            let assignment = self.assignment_of(cell);
            for (slot, &p) in sub_assignment.iter_mut().zip(&positions) {
                *slot = assignment[p];
            }
            map.push(sub.index_of(&sub_assignment));
        }
        Ok(map)
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (name, card) in &self.vars {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{name}:{card}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uv() -> Space {
        Space::new(vec![("U", 2), ("V", 3)]).unwrap()
    }

    #[test]
    fn row_major_last_fastest() {
        let s = uv();
        assert_eq!(s.cell_count(), 6);
        assert_eq!(s.index_of(&[0, 0]), 0);
        assert_eq!(s.index_of(&[0, 2]), 2);
        assert_eq!(s.index_of(&[1, 0]), 3);
        assert_eq!(s.assignment_of(4), vec![1, 1]);
        for i in 0..6 {
            assert_eq!(s.index_of(&s.assignment_of(i)), i);
        }
    }

    #[test]
    fn union_orders_by_first_appearance() {
        let a = Space::new(vec![("U", 2), ("V", 3)]).unwrap();
        let b = Space::new(vec![("V", 3), ("W", 2)]).unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(u.names(), vec!["U", "V", "W"]);
        let clash = Space::new(vec![("V", 4)]).unwrap();
        assert!(a.union(&clash).is_err());
    }

    #[test]
    fn subspace_keeps_original_order() {
        let s = Space::new(vec![("X", 2), ("Y", 2), ("Z", 2)]).unwrap();
        let sub = s.subspace(&["Z", "X"]).unwrap();
        assert_eq!(sub.names(), vec!["X", "Z"]);
        assert!(s.subspace(&["Q"]).is_err());
    }

    #[test]
    fn projection_map_projects_assignments() {
        let s = uv();
        let sub = s.subspace(&["V"]).unwrap();
        let map = s.projection_map(&sub).unwrap();
        assert_eq!(map, vec![0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(Space::new(vec![("U", 2), ("U", 2)]).is_err());
        assert!(Space::new(vec![("U", 0)]).is_err());
    }
}
