use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// Index of the special edge. The rewriting rule for `sum ei ei' = v` is
/// oriented so that `e1 e1'` is the leading word.
pub const SPECIAL_EDGE: u32 = 1;

/// Parameters of W(l): the number of loops at the single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraConfig {
    loops: u32,
}

impl AlgebraConfig {
    pub fn new(loops: u32) -> Result<Self> {
        if loops == 0 {
            return Err(Error::NoLoops);
        }
        Ok(Self { loops })
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn special_index(&self) -> u32 {
        SPECIAL_EDGE
    }

    pub fn edges(&self) -> RangeInclusive<u32> {
        1..=self.loops
    }

    /// The 2l non-vertex generators, edges first: `e1..el, e1'..el'`.
    pub fn generators(&self) -> Vec<Generator> {
        self.edges()
            .map(Generator::Edge)
            .chain(self.edges().map(Generator::DualEdge))
            .collect()
    }

    pub fn check_edge(&self, index: u32) -> Result<()> {
        if index == 0 || index > self.loops {
            Err(Error::IndexOutOfRange {
                index,
                loops: self.loops,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_generator(&self, g: Generator) -> Result<()> {
        match g {
            Generator::Vertex => Ok(()),
            Generator::Edge(i) | Generator::DualEdge(i) => self.check_edge(i),
        }
    }
}

/// A letter of the free monoid on `v, e_i, e_i'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Vertex,
    Edge(u32),
    DualEdge(u32),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Vertex => write!(f, "v"),
            Generator::Edge(i) => write!(f, "e{i}"),
            Generator::DualEdge(i) => write!(f, "e{i}'"),
        }
    }
}

/// An unreduced word. The empty word stands for the unit `v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn check(&self, cfg: &AlgebraConfig) -> Result<()> {
        self.0.iter().try_for_each(|&g| cfg.check_generator(g))
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }
}

impl From<Vec<Generator>> for Word {
    fn from(letters: Vec<Generator>) -> Self {
        Self(letters)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "v");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
