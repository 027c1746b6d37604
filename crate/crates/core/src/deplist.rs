//! `DepList`: a list over an indexed family whose index vector is kept as data.

use crate::error::ListError;
use crate::family::IndexedFamily;

/// An immutable list of family elements together with their index vector.
///
/// `indices()[k] == elements()[k].index_of()` holds for every value that can
/// be constructed through this API, and every operation transforms the
/// index vector by the same plain-list operation it applies to the elements.
#[derive(Debug, Clone)]
pub struct DepList<E: IndexedFamily> {
    elements: Vec<E>,
    indices: Vec<E::Index>,
}

impl<E: IndexedFamily> DepList<E> {
    pub fn nil() -> Self {
        DepList {
            elements: Vec::new(),
            indices: Vec::new(),
        }
    }

    /// Prepends `elem`.
    pub fn cons(elem: E, rest: Self) -> Self {
        let mut elements = Vec::with_capacity(rest.len() + 1);
        let mut indices = Vec::with_capacity(rest.len() + 1);
        indices.push(elem.index_of());
        elements.push(elem);
        elements.extend(rest.elements);
        indices.extend(rest.indices);
        DepList { elements, indices }
    }

    /// Builds a list from elements in order, computing their indices.
    pub fn from_elements(elements: Vec<E>) -> Self {
        let indices = elements.iter().map(IndexedFamily::index_of).collect();
        DepList { elements, indices }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// The index vector, one entry per element.
    pub fn indices(&self) -> &[E::Index] {
        &self.indices
    }

    pub fn iter(&self) -> std::slice::Iter<'_, E> {
        self.elements.iter()
    }

    pub fn head(&self) -> Result<&E, ListError<E::Index>> {
        self.elements.first().ok_or(ListError::EmptyList)
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }

    /// Recomputes every index and compares it with the stored vector.
    pub fn is_coherent(&self) -> bool {
        self.elements.len() == self.indices.len()
            && self
                .elements
                .iter()
                .zip(&self.indices)
                .all(|(e, i)| e.index_of() == *i)
    }

    /// Pairs each element with its index, the dependent-pair encoding.
    pub fn to_pairs(&self) -> Vec<(E::Index, E)>
    where
        E: Clone,
    {
        self.indices
            .iter()
            .copied()
            .zip(self.elements.iter().cloned())
            .collect()
    }

    /// Inverse of [`DepList::to_pairs`]. Every stated index must agree with
    /// the element it is paired with.
    pub fn from_pairs(pairs: Vec<(E::Index, E)>) -> Result<Self, ListError<E::Index>> {
        let mut elements = Vec::with_capacity(pairs.len());
        let mut indices = Vec::with_capacity(pairs.len());
        for (position, (index, elem)) in pairs.into_iter().enumerate() {
            if elem.index_of() != index {
                return Err(ListError::IndexMismatch { position });
            }
            indices.push(index);
            elements.push(elem);
        }
        Ok(DepList { elements, indices })
    }
}

impl<E: IndexedFamily + Clone> DepList<E> {
    pub fn tail(&self) -> Result<Self, ListError<E::Index>> {
        if self.is_empty() {
            return Err(ListError::EmptyList);
        }
        Ok(self.slice(1, self.len()))
    }

    /// The first `min(n, len)` elements.
    pub fn take(&self, n: usize) -> Self {
        self.slice(0, n.min(self.len()))
    }

    /// Everything after the first `min(n, len)` elements.
    pub fn drop(&self, n: usize) -> Self {
        self.slice(n.min(self.len()), self.len())
    }

    pub fn append(&self, other: &Self) -> Self {
        let mut elements = self.elements.clone();
        elements.extend_from_slice(&other.elements);
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        DepList { elements, indices }
    }

    fn slice(&self, from: usize, to: usize) -> Self {
        DepList {
            elements: self.elements[from..to].to_vec(),
            indices: self.indices[from..to].to_vec(),
        }
    }
}

impl<E: IndexedFamily> Default for DepList<E> {
    fn default() -> Self {
        Self::nil()
    }
}

// Index equality follows from element equality under coherence.
impl<E: IndexedFamily + PartialEq> PartialEq for DepList<E> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl<E: IndexedFamily + Eq> Eq for DepList<E> {}

impl<E: IndexedFamily> FromIterator<E> for DepList<E> {
    fn from_iter<T: IntoIterator<Item = E>>(iter: T) -> Self {
        Self::from_elements(iter.into_iter().collect())
    }
}

impl<'a, E: IndexedFamily> IntoIterator for &'a DepList<E> {
    type Item = &'a E;
    type IntoIter = std::slice::Iter<'a, E>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
