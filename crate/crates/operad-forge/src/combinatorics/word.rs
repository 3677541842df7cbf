//! Words, commutative monomials and surjections.

use std::fmt;

use super::Label;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word(pub Vec<Label>);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<Label>);

/// A surjection `{1..n} -> {1..r}` written as its sequence of values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Surjection(pub Vec<u32>);

impl Monomial {
    pub fn new(mut letters: Vec<Label>) -> Self {
        letters.sort();
        Monomial(letters)
    }

    pub fn letters(&self) -> &[Label] {
        &self.0
    }
}

impl Surjection {
    /// Accepts a sequence whose image is exactly `{1..r}`.
    pub fn new(values: Vec<u32>) -> Option<Self> {
        let r = values.iter().copied().max().unwrap_or(0);
        if values.is_empty() || (1..=r).any(|v| !values.contains(&v)) {
            return None;
        }
        Some(Surjection(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

fn write_seq<T: fmt::Display>(f: &mut fmt::Formatter<'_>, open: &str, items: &[T], close: &str) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "{close}")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, "[", &self.0, "]")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, "{", &self.0, "}")
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, "(", &self.0, ")")
    }
}

/// All surjections of length `n`, every rank.
pub fn all_surjections(n: usize) -> Vec<Surjection> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; n];
    if n == 0 {
        return out;
    }
    loop {
        if let Some(s) = Surjection::new(cur.clone()) {
            out.push(s);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) < n {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}
