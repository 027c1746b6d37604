//! Index-witnessed lists and a JSON document model built on them.
//!
//! [`DepList`] keeps the index of every element as data and mirrors each
//! list operation on that index vector. [`PredList`] additionally stores a
//! witness per element proving that its index satisfies a [`Predicate`].
//! The [`json`] module uses `PredList` to build a document tree in which the
//! document node only ever appears at the root, and [`jsontext`] reads and
//! writes that tree as JSON text.
//!
//! ```
//! use witnessed::{DepList, IsComplete, Item, PredList, Status};
//!
//! let items = DepList::cons(
//!     Item::new(Status::Started, "Write Paper"),
//!     DepList::cons(Item::new(Status::Todo, "Write Introduction"), DepList::nil()),
//! );
//! assert_eq!(items.indices(), &[Status::Started, Status::Todo]);
//!
//! type Done = PredList<Item, IsComplete>;
//! let done = Done::add(Item::new(Status::Done, "Proof Read"), Done::nil()).unwrap();
//! assert!(Done::add(Item::new(Status::Todo, "Write Paper"), done).is_err());
//! ```

pub mod cli;
pub mod deplist;
pub mod error;
pub mod family;
pub mod json;
pub mod jsontext;
pub mod predicate;

pub use deplist::DepList;
pub use error::ListError;
pub use family::{Index, IndexedFamily, Item, Status};
pub use json::{jarray, jdoc, jmap, JPred, JTy, JsonDoc, JsonError, MapEntry};
pub use jsontext::{parse, parse_bytes, serialize, ParseError, ParseErrorKind, SerializeError};
pub use predicate::{IsComplete, NonEmpty, PredList, Predicate};
