//! Decidable predicates over indices, and `PredList`, a [`DepList`] whose
//! every element carries a witness that its index satisfies the predicate.

use std::fmt::Debug;

use crate::deplist::DepList;
use crate::error::ListError;
use crate::family::{Index, IndexedFamily, Status};

/// A decidable property of indices. Values of the implementing type are the
/// witnesses: a value `w` proves the property for index `i` when
/// `w.holds(i)`.
///
/// `decide` is the runtime stand-in for proof search. Implementations must
/// be pure and must satisfy:
///
/// * soundness: `decide(i) == Some(w)` implies `w.holds(i)`;
/// * completeness: `decide(i) == None` implies no witness holds for `i`.
pub trait Predicate: Clone + Debug {
    type Index: Index;

    fn decide(index: Self::Index) -> Option<Self>;

    fn holds(&self, index: Self::Index) -> bool;
}

/// A predicate whose witnesses can be enumerated, so its contract can be
/// checked exhaustively.
pub trait FiniteWitnesses: Predicate + 'static {
    const WITNESSES: &'static [Self];
}

/// A breach of the `decide`/`holds` contract found by [`verify_contract`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContractViolation<I> {
    /// `decide` returned a witness that does not hold.
    Unsound(I),
    /// `decide` returned nothing although some witness holds.
    Incomplete(I),
}

/// Checks soundness and completeness over the whole index domain.
pub fn verify_contract<P: FiniteWitnesses>() -> Vec<ContractViolation<P::Index>> {
    let mut violations = Vec::new();
    for &index in P::Index::ALL {
        match P::decide(index) {
            Some(w) if !w.holds(index) => violations.push(ContractViolation::Unsound(index)),
            Some(_) => {}
            None => {
                if P::WITNESSES.iter().any(|w| w.holds(index)) {
                    violations.push(ContractViolation::Incomplete(index));
                }
            }
        }
    }
    violations
}

/// Proof that a to-do item is finished. The only witness is `IsDone`, valid
/// for [`Status::Done`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsComplete {
    IsDone,
}

impl Predicate for IsComplete {
    type Index = Status;

    fn decide(index: Status) -> Option<Self> {
        match index {
            Status::Done => Some(IsComplete::IsDone),
            Status::Todo | Status::Started => None,
        }
    }

    fn holds(&self, index: Status) -> bool {
        matches!((self, index), (IsComplete::IsDone, Status::Done))
    }
}

impl FiniteWitnesses for IsComplete {
    const WITNESSES: &'static [Self] = &[IsComplete::IsDone];
}

/// A [`DepList`] plus a parallel vector of witnesses, one per element.
///
/// Elements, indices and witnesses always have the same length, and
/// `witnesses()[k].holds(indices()[k])` for every `k`.
#[derive(Debug, Clone)]
pub struct PredList<E, P>
where
    E: IndexedFamily,
    P: Predicate<Index = E::Index>,
{
    list: DepList<E>,
    witnesses: Vec<P>,
}

impl<E, P> PredList<E, P>
where
    E: IndexedFamily,
    P: Predicate<Index = E::Index>,
{
    pub fn nil() -> Self {
        PredList {
            list: DepList::nil(),
            witnesses: Vec::new(),
        }
    }

    /// Prepends `elem`, obtaining its witness from [`Predicate::decide`].
    pub fn add(elem: E, rest: Self) -> Result<Self, ListError<E::Index>> {
        let index = elem.index_of();
        match P::decide(index) {
            Some(w) => Ok(Self::prepend(elem, w, rest)),
            None => Err(ListError::PredicateViolation { position: 0, index }),
        }
    }

    /// Prepends `elem` with a caller-supplied witness, which must hold for
    /// the element's index.
    pub fn cons_with_witness(elem: E, witness: P, rest: Self) -> Result<Self, ListError<E::Index>> {
        let index = elem.index_of();
        if !witness.holds(index) {
            return Err(ListError::InvalidWitness { index });
        }
        Ok(Self::prepend(elem, witness, rest))
    }

    /// Runs proof search over every element of `list`. Fails at the first
    /// element whose index has no witness.
    pub fn from_deplist(list: DepList<E>) -> Result<Self, ListError<E::Index>> {
        let witnesses = list
            .indices()
            .iter()
            .enumerate()
            .map(|(position, &index)| {
                P::decide(index).ok_or(ListError::PredicateViolation { position, index })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PredList { list, witnesses })
    }

    /// Builds from elements in order; see [`PredList::from_deplist`].
    pub fn from_elements(elements: Vec<E>) -> Result<Self, ListError<E::Index>> {
        Self::from_deplist(DepList::from_elements(elements))
    }

    fn prepend(elem: E, witness: P, rest: Self) -> Self {
        let mut witnesses = Vec::with_capacity(rest.witnesses.len() + 1);
        witnesses.push(witness);
        witnesses.extend(rest.witnesses);
        PredList {
            list: DepList::cons(elem, rest.list),
            witnesses,
        }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        self.list.elements()
    }

    pub fn indices(&self) -> &[E::Index] {
        self.list.indices()
    }

    pub fn witnesses(&self) -> &[P] {
        &self.witnesses
    }

    pub fn iter(&self) -> std::slice::Iter<'_, E> {
        self.list.iter()
    }

    pub fn head(&self) -> Result<&E, ListError<E::Index>> {
        self.list.head()
    }

    /// Discards the witnesses.
    pub fn forget(self) -> DepList<E> {
        self.list
    }

    pub fn as_deplist(&self) -> &DepList<E> {
        &self.list
    }

    /// Checks list coherence and that every stored witness holds.
    pub fn is_coherent(&self) -> bool {
        self.list.is_coherent()
            && self.witnesses.len() == self.list.len()
            && self
                .witnesses
                .iter()
                .zip(self.list.indices())
                .all(|(w, &i)| w.holds(i))
    }
}

impl<E, P> PredList<E, P>
where
    E: IndexedFamily + Clone,
    P: Predicate<Index = E::Index>,
{
    /// Drops the first element and its witness.
    pub fn tail(&self) -> Result<Self, ListError<E::Index>> {
        Ok(PredList {
            list: self.list.tail()?,
            witnesses: self.witnesses[1..].to_vec(),
        })
    }

    pub fn take(&self, n: usize) -> Self {
        let n = n.min(self.len());
        PredList {
            list: self.list.take(n),
            witnesses: self.witnesses[..n].to_vec(),
        }
    }

    pub fn drop(&self, n: usize) -> Self {
        let n = n.min(self.len());
        PredList {
            list: self.list.drop(n),
            witnesses: self.witnesses[n..].to_vec(),
        }
    }

    pub fn append(&self, other: &Self) -> Self {
        let mut witnesses = self.witnesses.clone();
        witnesses.extend_from_slice(&other.witnesses);
        PredList {
            list: self.list.append(&other.list),
            witnesses,
        }
    }

    pub fn to_deplist(&self) -> DepList<E> {
        self.list.clone()
    }
}

impl<E, P> Default for PredList<E, P>
where
    E: IndexedFamily,
    P: Predicate<Index = E::Index>,
{
    fn default() -> Self {
        Self::nil()
    }
}

// Witnesses are proof-irrelevant: two lists are equal when their elements
// are, provided each side's witnesses hold at the shared indices.
impl<E, P> PartialEq for PredList<E, P>
where
    E: IndexedFamily + PartialEq,
    P: Predicate<Index = E::Index>,
{
    fn eq(&self, other: &Self) -> bool {
        self.list == other.list
            && self.witnesses.len() == other.witnesses.len()
            && self
                .witnesses
                .iter()
                .zip(&other.witnesses)
                .zip(self.list.indices())
                .all(|((a, b), &i)| a.holds(i) && b.holds(i))
    }
}

impl<'a, E, P> IntoIterator for &'a PredList<E, P>
where
    E: IndexedFamily,
    P: Predicate<Index = E::Index>,
{
    type Item = &'a E;
    type IntoIter = std::slice::Iter<'a, E>;

    fn into_iter(self) -> Self::IntoIter {
        self.list.iter()
    }
}

/// Evidence that a list has at least one element. Only obtainable through
/// `non_empty()` on a non-empty list, so the accessors on it cannot fail.
#[derive(Debug, Clone, Copy)]
pub struct NonEmpty<'a, L> {
    list: &'a L,
}

impl<'a, L> NonEmpty<'a, L> {
    pub fn list(&self) -> &'a L {
        self.list
    }
}

impl<E: IndexedFamily> DepList<E> {
    pub fn non_empty(&self) -> Option<NonEmpty<'_, Self>> {
        (!self.is_empty()).then_some(NonEmpty { list: self })
    }
}

impl<E, P> PredList<E, P>
where
    E: IndexedFamily,
    P: Predicate<Index = E::Index>,
{
    pub fn non_empty(&self) -> Option<NonEmpty<'_, Self>> {
        (!self.is_empty()).then_some(NonEmpty { list: self })
    }
}

impl<'a, E: IndexedFamily + Clone> NonEmpty<'a, DepList<E>> {
    pub fn head(&self) -> &'a E {
        &self.list.elements()[0]
    }

    pub fn tail(&self) -> DepList<E> {
        self.list.drop(1)
    }
}

impl<'a, E, P> NonEmpty<'a, PredList<E, P>>
where
    E: IndexedFamily + Clone,
    P: Predicate<Index = E::Index>,
{
    pub fn head(&self) -> &'a E {
        &self.list.elements()[0]
    }

    pub fn head_witness(&self) -> &'a P {
        &self.list.witnesses()[0]
    }

    pub fn tail(&self) -> PredList<E, P> {
        self.list.drop(1)
    }
}
