//! Indexed families: element types that each determine exactly one index value.

use std::fmt::Debug;
use std::hash::Hash;

/// A finite index domain with decidable equality.
///
/// `ALL` enumerates every value of the domain, which is what lets predicate
/// contracts and list laws be checked exhaustively.
pub trait Index: Copy + Eq + Hash + Debug + Send + Sync + 'static {
    const ALL: &'static [Self];
}

/// An element of an indexed family.
///
/// `index_of` must be total and deterministic: the same element always
/// yields the same index.
pub trait IndexedFamily {
    type Index: Index;

    fn index_of(&self) -> Self::Index;
}

/// Progress of a to-do item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Todo,
    Started,
    Done,
}

impl Index for Status {
    const ALL: &'static [Self] = &[Status::Todo, Status::Started, Status::Done];
}

/// A to-do item indexed by its [`Status`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Item {
    state: Status,
    title: String,
}

impl Item {
    pub fn new(state: Status, title: impl Into<String>) -> Self {
        Item {
            state,
            title: title.into(),
        }
    }

    pub fn state(&self) -> Status {
        self.state
    }

    pub fn title(&self) -> &str {
        &self.title
    }
}

impl IndexedFamily for Item {
    type Index = Status;

    fn index_of(&self) -> Status {
        self.state
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn item_index_is_its_state() {
        for &s in Status::ALL {
            for title in ["", "Write Paper", "ünï"] {
                assert_eq!(Item::new(s, title).index_of(), s);
            }
        }
    }

    #[test]
    fn status_domain_has_three_distinct_values() {
        let all = Status::ALL;
        assert_eq!(all.len(), 3);
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(i == j, a == b);
            }
        }
    }
}
