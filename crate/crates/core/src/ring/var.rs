use std::fmt;
use std::sync::Arc;

/// A named indeterminate. Variables compare by name, which is the canonical
/// global order shared by every ring in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Names starting with `_` are reserved for internally generated variables.
    pub fn is_reserved(&self) -> bool {
        self.0.starts_with('_')
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// Accepts `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A duplicate-free set of variables, kept sorted in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VarSet(Arc<[Var]>);

impl VarSet {
    pub fn new<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        let mut v: Vec<Var> = vars.into_iter().collect();
        v.sort();
        v.dedup();
        VarSet(v.into())
    }

    pub fn from_names(names: &[&str]) -> Self {
        Self::new(names.iter().map(|n| Var::new(n)))
    }

    pub fn empty() -> Self {
        VarSet(Arc::from(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Var> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Var] {
        &self.0
    }

    pub fn contains(&self, v: &Var) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        if other.is_subset(self) {
            return self.clone();
        }
        VarSet::new(self.iter().chain(other.iter()).cloned())
    }

    pub fn difference(&self, other: &VarSet) -> VarSet {
        VarSet::new(self.iter().filter(|v| !other.contains(v)).cloned())
    }

    pub fn with(&self, v: Var) -> VarSet {
        VarSet::new(self.iter().cloned().chain(std::iter::once(v)))
    }

    /// A reserved name `_w<n>` that does not occur in this set.
    pub fn fresh(&self) -> Var {
        (0..)
            .map(|n| Var::new(&format!("_w{n}")))
            .find(|v| !self.contains(v))
            .expect("unbounded counter")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VarSet {
    type Item = &'a Var;
    type IntoIter = std::slice::Iter<'a, Var>;
    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl FromIterator<Var> for VarSet {
    fn from_iter<I: IntoIterator<Item = Var>>(iter: I) -> Self {
        VarSet::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_dedup() {
        let s = VarSet::from_names(&["z", "x", "y", "x"]);
        let names: Vec<_> = s.iter().map(Var::name).collect();
        assert_eq!(names, ["x", "y", "z"]);
    }

    #[test]
    fn fresh_avoids_existing() {
        let s = VarSet::from_names(&["_w0", "x"]);
        assert_eq!(s.fresh().name(), "_w1");
        assert!(s.fresh().is_reserved());
    }

    #[test]
    fn identifiers() {
        assert!(is_valid_identifier("x1_a"));
        assert!(!is_valid_identifier("_w0"));
        assert!(!is_valid_identifier("1x"));
        assert!(!is_valid_identifier(""));
    }
}
