/// A word `g_{i_1}^{e_1} g_{i_2}^{e_2} ...` in the polycyclic generators, not
/// necessarily in normal form. Generator indices are 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord {
    letters: Vec<(usize, i64)>,
}

impl GroupWord {
    pub fn new(letters: Vec<(usize, i64)>) -> Self {
        GroupWord { letters }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn push(&mut self, generator: usize, exponent: i64) {
        self.letters.push((generator, exponent));
    }

    /// The formal inverse: reversed order, negated exponents.
    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }
}
