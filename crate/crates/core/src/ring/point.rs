use std::collections::BTreeMap;
use std::fmt;

use super::{Scalar, Var, VarSet};
use crate::error::{Error, Result};

/// A finite assignment of rational values to variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point(BTreeMap<Var, Scalar>);

impl Point {
    pub fn new() -> Self {
        Point(BTreeMap::new())
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, Scalar)>>(pairs: I) -> Self {
        Point(pairs.into_iter().collect())
    }

    pub fn get(&self, v: &Var) -> Option<&Scalar> {
        self.0.get(v)
    }

    pub fn insert(&mut self, v: Var, value: Scalar) {
        self.0.insert(v, value);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Scalar)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> VarSet {
        self.0.keys().cloned().collect()
    }

    /// Errors with the first variable of `vars` left unassigned.
    pub fn check_total(&self, vars: &VarSet) -> Result<()> {
        match vars.iter().find(|v| !self.0.contains_key(*v)) {
            Some(v) => Err(Error::PartialPoint(v.name().to_string())),
            None => Ok(()),
        }
    }

    /// Coordinates on `vars` only.
    pub fn restrict(&self, vars: &VarSet) -> Point {
        Point(
            self.0
                .iter()
                .filter(|(v, _)| vars.contains(v))
                .map(|(v, x)| (v.clone(), x.clone()))
                .collect(),
        )
    }
}

/// `x=1,y=2/3`, variables in canonical order.
impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, x)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}={x}")?;
        }
        Ok(())
    }
}
