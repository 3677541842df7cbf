//! Pointed multisets, the basis of Perm and PAN.

use std::fmt;

use super::Label;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PointedSet {
    pub point: Label,
    pub rest: Vec<Label>,
}

impl PointedSet {
    pub fn new(point: Label, mut rest: Vec<Label>) -> Self {
        rest.sort();
        PointedSet { point, rest }
    }

    pub fn size(&self) -> usize {
        1 + self.rest.len()
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut out = vec![self.point];
        out.extend(self.rest.iter().copied());
        out
    }

    pub fn map_seq(&self, f: &mut dyn FnMut(Label) -> Label) -> Self {
        let point = f(self.point);
        PointedSet::new(point, self.rest.iter().map(|&l| f(l)).collect())
    }

    /// Union of two pointed sets, keeping the point of `self`.
    pub fn union(&self, other: &PointedSet) -> Self {
        let mut rest = self.rest.clone();
        rest.extend(other.labels());
        PointedSet::new(self.point, rest)
    }
}

impl fmt::Display for PointedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = self.rest.partition_point(|&l| l < self.point);
        write!(f, "{{")?;
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            Ok(())
        };
        for l in &self.rest[..at] {
            sep(f)?;
            write!(f, "{l}")?;
        }
        sep(f)?;
        write!(f, "*{}", self.point)?;
        for l in &self.rest[at..] {
            sep(f)?;
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_marks_point_in_sorted_position() {
        let p = PointedSet::new(Label::Num(3), vec![Label::Num(2)]);
        assert_eq!(p.to_string(), "{2,*3}");
        let q = PointedSet::new(Label::Num(1), vec![Label::Num(3), Label::Num(2)]);
        assert_eq!(q.to_string(), "{*1,2,3}");
    }
}
