//! Enumerated finite groups of block-diagonal rational matrices.

use std::collections::{HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::InvariantsError;

/// Default bound on enumerated group order.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// One graded piece `V_d` of the generator space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedBlock {
    pub degree: u32,
    pub dimension: usize,
}

/// A block-diagonal matrix, one square block per [`GradedBlock`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    blocks: Vec<RationalMatrix>,
}

impl GroupElement {
    pub fn new(blocks: Vec<RationalMatrix>) -> Self {
        Self { blocks }
    }

    pub fn identity(shape: &[GradedBlock]) -> Self {
        Self::new(
            shape
                .iter()
                .map(|b| RationalMatrix::identity(b.dimension))
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[RationalMatrix] {
        &self.blocks
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self::new(
            self.blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(RationalMatrix::is_identity)
    }

    /// Determinant on the whole of `⊕ V_d`.
    pub fn determinant(&self) -> BigRational {
        self.blocks
            .iter()
            .map(RationalMatrix::determinant)
            .fold(BigRational::one(), |acc, d| acc * d)
    }

    pub fn trace(&self) -> BigRational {
        self.blocks.iter().map(RationalMatrix::trace).sum()
    }

    /// `rank(g − 1)` on `⊕ V_d`.
    pub fn moved_rank(&self) -> usize {
        self.blocks.iter().map(|b| b.sub_identity().rank()).sum()
    }

    /// The element as one full matrix on `⊕ V_d`.
    pub fn full_matrix(&self) -> RationalMatrix {
        let n: usize = self.blocks.iter().map(RationalMatrix::size).sum();
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        let mut offset = 0;
        for b in &self.blocks {
            for (i, row) in b.rows().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    rows[offset + i][offset + j] = c.clone();
                }
            }
            offset += b.size();
        }
        RationalMatrix::from_rows(rows).expect("block-diagonal assembly is square")
    }
}

/// A finite group acting on the graded generator space, with every element
/// enumerated.
#[derive(Debug, Clone)]
pub struct GradedGroupRep {
    name: String,
    blocks: Vec<GradedBlock>,
    generator_names: Vec<String>,
    generators: Vec<usize>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    inverses: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl GradedGroupRep {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn blocks(&self) -> &[GradedBlock] {
        &self.blocks
    }

    /// Degree of each generator of the polynomial ring, block by block.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.degree, b.dimension))
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.dimension).sum()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    /// Index of the identity (always 0).
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// Element indices of the generators, in input order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        let g = self.elements[i].multiply(&self.elements[j]);
        self.index[&g]
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut power = i;
        let mut k = 1;
        while power != 0 {
            power = self.product(power, i);
            k += 1;
        }
        k
    }

    /// Conjugacy classes, ordered by smallest element index; the first is `{identity}`.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&i))
            .expect("every element lies in a class")
    }

    /// Evaluates a word such as `s*t*s` in the generator names; `1` or `e` is the identity.
    pub fn evaluate_word(&self, word: &str) -> Option<usize> {
        let word = word.trim();
        if word == "1" || word == "e" || word.is_empty() {
            return Some(0);
        }
        word.split('*').try_fold(0, |acc, letter| {
            let letter = letter.trim();
            let pos = self.generator_names.iter().position(|n| n == letter)?;
            Some(self.product(acc, self.generators[pos]))
        })
    }
}

/// Breadth-first closure of `generators` under multiplication.
pub fn generate_group(
    name: impl Into<String>,
    blocks: Vec<GradedBlock>,
    generators: Vec<(String, GroupElement)>,
    cap: usize,
) -> Result<GradedGroupRep, InvariantsError> {
    if cap == 0 {
        return Err(InvariantsError::InvalidGroup(
            "order cap must be at least 1".into(),
        ));
    }
    if blocks.iter().any(|b| b.degree == 0 || b.dimension == 0) {
        return Err(InvariantsError::InvalidGroup(
            "blocks need positive degree and dimension".into(),
        ));
    }
    for (gname, g) in &generators {
        let shape_ok = g.blocks.len() == blocks.len()
            && g.blocks
                .iter()
                .zip(&blocks)
                .all(|(m, b)| m.size() == b.dimension);
        if !shape_ok {
            return Err(InvariantsError::InvalidGroup(format!(
                "generator {gname} does not match the block shape"
            )));
        }
        if g.determinant().is_zero() {
            return Err(InvariantsError::InvalidGroup(format!(
                "generator {gname} is not invertible"
            )));
        }
    }

    let identity = GroupElement::identity(&blocks);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (_, g) in &generators {
            let h = elements[i].multiply(g);
            if index.contains_key(&h) {
                continue;
            }
            if elements.len() == cap {
                return Err(InvariantsError::OrderCapExceeded(cap));
            }
            index.insert(h.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(h);
        }
    }

    let generator_indices: Vec<usize> = generators.iter().map(|(_, g)| index[g]).collect();
    let mut rep = GradedGroupRep {
        name: name.into(),
        blocks,
        generator_names: generators.into_iter().map(|(n, _)| n).collect(),
        generators: generator_indices,
        elements,
        index,
        inverses: Vec::new(),
        classes: Vec::new(),
    };
    rep.inverses = (0..rep.order())
        .map(|i| {
            // In a finite group g^{-1} = g^{ord(g) - 1}.
            let mut inv = 0;
            for _ in 1..rep.element_order(i) {
                inv = rep.product(inv, i);
            }
            inv
        })
        .collect();
    rep.classes = compute_classes(&rep);
    Ok(rep)
}

/// Orbits of conjugation by the generators.
fn compute_classes(g: &GradedGroupRep) -> Vec<Vec<usize>> {
    let mut class_id = vec![usize::MAX; g.order()];
    let mut classes = Vec::new();
    for start in 0..g.order() {
        if class_id[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_id[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &s in &g.generators {
                let y = g.product(g.product(s, x), g.inverse(s));
                if class_id[y] == usize::MAX {
                    class_id[y] = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

pub fn conjugacy_classes(g: &GradedGroupRep) -> Vec<Vec<usize>> {
    g.classes().to_vec()
}
