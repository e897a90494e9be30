//! Dense nonnegative rational-valued functions over a product domain.

use num_traits::Zero;

use crate::error::{CredalError, Result};
use crate::rational::Rational;
use crate::space::Space;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Func {
    space: Space,
    values: Vec<Rational>,
}

impl Func {
    pub fn new(space: Space, values: Vec<Rational>) -> Result<Self> {
        if values.len() != space.cell_count() {
            return Err(CredalError::DimensionMismatch {
                expected: space.cell_count(),
                got: values.len(),
            });
        }
        if let Some(pos) = values.iter().position(|v| v < &Rational::zero()) {
            return Err(CredalError::InvalidValue(format!(
                "negative value at cell {pos}"
            )));
        }
        Ok(Func { space, values })
    }

    pub fn constant(space: Space, value: Rational) -> Result<Self> {
        let n = space.cell_count();
        Func::new(space, vec![value; n])
    }

    /// The null function `h0`.
    pub fn zero(space: Space) -> Self {
        let n = space.cell_count();
        Func {
            space,
            values: vec![Rational::zero(); n],
        }
    }

    /// The unit function, identity element of combination.
    pub fn unit(space: Space) -> Self {
        let n = space.cell_count();
        Func {
            space,
            values: vec![Rational::from_integer(1.into()); n],
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, cell: usize) -> &Rational {
        &self.values[cell]
    }

    pub fn mass(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn is_null(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Pointwise product on the union space; shared variables are matched by
    /// name, so `h(u,v) * g(v,w)` lives on `U x V x W`.
    pub fn product(&self, other: &Func) -> Result<Func> {
        let space = self.space.union(other.space())?;
        let to_left = space.projection_map(&self.space)?;
        let to_right = space.projection_map(other.space())?;
        let values = (0..space.cell_count())
            .map(|cell| &self.values[to_left[cell]] * &other.values[to_right[cell]])
            .collect();
        Ok(Func { space, values })
    }

    /// Sums out every variable not in `onto`; the kept variables retain
    /// this space's relative order.
    pub fn marginalize(&self, onto: &[&str]) -> Result<Func> {
        let sub = self.space.subspace(onto)?;
        if sub.same_var_set(&self.space) {
            return Ok(self.clone());
        }
        let map = self.space.projection_map(&sub)?;
        let mut values = vec![Rational::zero(); sub.cell_count()];
        for (cell, value) in self.values.iter().enumerate() {
            values[map[cell]] += value;
        }
        Ok(Func { space: sub, values })
    }

    pub fn scale(&self, alpha: &Rational) -> Func {
        Func {
            space: self.space.clone(),
            values: self.values.iter().map(|v| v * alpha).collect(),
        }
    }

    /// Permutes cells onto a target ordering of the same variable set.
    pub fn reorder(&self, target: &Space) -> Result<Func> {
        if !self.space.same_var_set(target) {
            return Err(CredalError::NotAPartition(format!(
                "cannot reorder `{}` as `{}`",
                self.space, target
            )));
        }
        if &self.space == target {
            return Ok(self.clone());
        }
        let map = target.projection_map(&self.space)?;
        let values = (0..target.cell_count())
            .map(|cell| self.values[map[cell]].clone())
            .collect();
        Ok(Func {
            space: target.clone(),
            values,
        })
    }
}
