#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use witnessed::{jarray, jdoc, jmap, DepList, Item, JTy, JsonDoc, Status};

pub const STATUSES: [Status; 3] = [Status::Todo, Status::Started, Status::Done];

/// Every status sequence of length `0..=max_len`, shortest first.
pub fn status_sequences(max_len: usize) -> Vec<Vec<Status>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|seq: &Vec<Status>| {
                STATUSES.iter().map(move |&s| {
                    let mut next = seq.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Items with distinct titles so element equality is positional.
pub fn items_for(seq: &[Status]) -> Vec<Item> {
    seq.iter()
        .enumerate()
        .map(|(k, &s)| Item::new(s, format!("item {k}")))
        .collect()
}

/// Builds a list by folding `cons` from the right.
pub fn build(seq: &[Status]) -> DepList<Item> {
    items_for(seq)
        .into_iter()
        .rev()
        .fold(DepList::nil(), |rest, item| DepList::cons(item, rest))
}

pub fn list_take<T: Clone>(n: usize, xs: &[T]) -> Vec<T> {
    xs.iter().take(n).cloned().collect()
}

pub fn list_drop<T: Clone>(n: usize, xs: &[T]) -> Vec<T> {
    xs.iter().skip(n).cloned().collect()
}

// Independent recursive oracles over the JSON tree, written against the
// public variants rather than the library's traversal helpers.

pub fn naive_count(d: &JsonDoc) -> usize {
    match d {
        JsonDoc::Str(_) | JsonDoc::Num(_) | JsonDoc::Bool(_) | JsonDoc::Null => 1,
        JsonDoc::Array(items) => 1 + items.elements().iter().map(naive_count).sum::<usize>(),
        JsonDoc::Map(entries) => {
            1 + entries
                .elements()
                .iter()
                .map(|e| naive_count(&e.value))
                .sum::<usize>()
        }
        JsonDoc::Doc(doc) => 1 + naive_count(doc.body()),
    }
}

pub fn naive_depth(d: &JsonDoc) -> usize {
    match d {
        JsonDoc::Str(_) | JsonDoc::Num(_) | JsonDoc::Bool(_) | JsonDoc::Null => 1,
        JsonDoc::Array(items) => 1 + items.elements().iter().map(naive_depth).max().unwrap_or(0),
        JsonDoc::Map(entries) => {
            1 + entries
                .elements()
                .iter()
                .map(|e| naive_depth(&e.value))
                .max()
                .unwrap_or(0)
        }
        JsonDoc::Doc(doc) => 1 + naive_depth(doc.body()),
    }
}

pub fn kind_table(d: &JsonDoc) -> JTy {
    match d {
        JsonDoc::Str(_) => JTy::Value,
        JsonDoc::Num(_) => JTy::Value,
        JsonDoc::Bool(_) => JTy::Value,
        JsonDoc::Null => JTy::Value,
        JsonDoc::Array(_) => JTy::Array,
        JsonDoc::Map(_) => JTy::Map,
        JsonDoc::Doc(_) => JTy::Doc,
    }
}

/// Number of DOC nodes strictly below the root, plus a flag for any DOC
/// node whose body is not a map.
pub fn doc_violations(d: &JsonDoc) -> usize {
    fn below(d: &JsonDoc) -> usize {
        match d {
            JsonDoc::Doc(doc) => 1 + below(doc.body()),
            JsonDoc::Array(items) => items.elements().iter().map(below).sum(),
            JsonDoc::Map(entries) => entries.elements().iter().map(|e| below(&e.value)).sum(),
            _ => 0,
        }
    }
    match d {
        JsonDoc::Doc(doc) => {
            let bad_root = usize::from(!matches!(doc.body(), JsonDoc::Map(_)));
            bad_root + below(doc.body())
        }
        other => below(other),
    }
}

/// Witness/index coherence of every composite in the tree.
pub fn tree_coherent(d: &JsonDoc) -> bool {
    match d {
        JsonDoc::Array(items) => {
            items.is_coherent()
                && items
                    .indices()
                    .iter()
                    .zip(items.elements())
                    .all(|(&i, c)| i == kind_table(c))
                && items.elements().iter().all(tree_coherent)
        }
        JsonDoc::Map(entries) => {
            entries.is_coherent()
                && entries
                    .indices()
                    .iter()
                    .zip(entries.elements())
                    .all(|(&i, e)| i == kind_table(&e.value))
                && entries.elements().iter().all(|e| tree_coherent(&e.value))
        }
        JsonDoc::Doc(doc) => tree_coherent(doc.body()),
        _ => true,
    }
}

const KEY_ALPHABET: &[&str] = &[
    "a", "b", "key", "é", "\"", "\\", "\n", "\u{1}", "😀", " ", "/", "\t",
];

fn random_string(rng: &mut StdRng) -> String {
    let len = rng.gen_range(0..4);
    (0..len)
        .map(|_| KEY_ALPHABET[rng.gen_range(0..KEY_ALPHABET.len())])
        .collect()
}

fn random_number(rng: &mut StdRng) -> f64 {
    match rng.gen_range(0..4) {
        0 => rng.gen_range(-1000i64..1000) as f64,
        1 => rng.gen_range(-1.0e6..1.0e6),
        2 => rng.gen::<f64>() * 10f64.powi(rng.gen_range(-300..300)),
        _ => loop {
            let n = f64::from_bits(rng.gen());
            if n.is_finite() {
                break n;
            }
        },
    }
}

fn random_leaf(rng: &mut StdRng) -> JsonDoc {
    match rng.gen_range(0..4) {
        0 => JsonDoc::Str(random_string(rng)),
        1 => JsonDoc::Num(random_number(rng)),
        2 => JsonDoc::Bool(rng.gen()),
        _ => JsonDoc::Null,
    }
}

/// A random node of depth at most `depth` with fanout at most 4.
pub fn random_node(rng: &mut StdRng, depth: usize) -> JsonDoc {
    if depth <= 1 {
        return random_leaf(rng);
    }
    match rng.gen_range(0..3) {
        0 => random_leaf(rng),
        1 => {
            let n = rng.gen_range(0..=4);
            jarray((0..n).map(|_| random_node(rng, depth - 1)).collect()).unwrap()
        }
        _ => random_map(rng, depth),
    }
}

fn random_map(rng: &mut StdRng, depth: usize) -> JsonDoc {
    let n = rng.gen_range(0..=4);
    let entries = (0..n)
        .map(|_| {
            // Keys drawn from a tiny pool so duplicates occur.
            let key = if rng.gen_bool(0.3) {
                "dup".to_owned()
            } else {
                random_string(rng)
            };
            (key, random_node(rng, depth - 1))
        })
        .collect();
    jmap(entries).unwrap()
}

/// A random document of depth at most 5, the document node included.
pub fn random_document(rng: &mut StdRng) -> JsonDoc {
    jdoc(random_map(rng, 4)).unwrap()
}

pub fn random_documents(seed: u64, count: usize) -> Vec<JsonDoc> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_document(&mut rng)).collect()
}

/// Hand-written accepted inputs covering escapes, nesting and every value form.
pub const CORPUS: [&str; 50] = [
    r#"{}"#,
    r#"{"a":null}"#,
    r#"{"a":true}"#,
    r#"{"a":false}"#,
    r#"{"a":0}"#,
    r#"{"a":-0}"#,
    r#"{"a":1}"#,
    r#"{"a":-1}"#,
    r#"{"a":1.5}"#,
    r#"{"a":-2.25e-3}"#,
    r#"{"a":1E10}"#,
    r#"{"a":1e+2}"#,
    r#"{"a":123456789012345678901234567890}"#,
    r#"{"a":0.1}"#,
    r#"{"a":1.7976931348623157e308}"#,
    r#"{"a":5e-324}"#,
    r#"{"a":1e-400}"#,
    r#"{"a":""}"#,
    r#"{"a":"plain text"}"#,
    r#"{"a":"quote \" backslash \\ slash \/"}"#,
    r#"{"a":"\b\f\n\r\t"}"#,
    r#"{"a":"\u0000\u001f\u007f"}"#,
    r#"{"a":"\u00e9\u4e2d\ud83d\ude00"}"#,
    r#"{"a":"é中😀"}"#,
    r#"{"":""}"#,
    r#"{"\n":"\u0041"}"#,
    r#"{"a":[]}"#,
    r#"{"a":{}}"#,
    r#"{"a":[[]]}"#,
    r#"{"a":[{}]}"#,
    r#"{"a":{"b":{}}}"#,
    r#"{"a":[1,2,3]}"#,
    r#"{"a":[1,"two",true,false,null,{},[]]}"#,
    r#"{"k":[1.5,null,{"x":false}]}"#,
    r#"{"a":1,"a":2}"#,
    r#"{"b":1,"a":2,"b":3}"#,
    r#"{"a":{"a":{"a":{"a":{"a":[]}}}}}"#,
    r#"{"a":[[[[[[[[[[1]]]]]]]]]]}"#,
    r#"  { "a" : 1 , "b" : [ 2 , 3 ] }  "#,
    "{\n  \"a\": 1,\n  \"b\": [\n    true\n  ]\n}",
    "\t{\r\n\"x\"\t:\r\n[ ]\r\n}\n",
    r#"{"menu":{"id":"file","value":"File","popup":{"menuitem":[{"value":"New","onclick":"CreateNewDoc()"},{"value":"Open","onclick":"OpenDoc()"}]}}}"#,
    r#"{"a":[{"b":[{"c":[null]}]}]}"#,
    r#"{"nums":[0,-0,0.0,1e0,1.0e-0,-1.25E+3]}"#,
    r#"{"mixed":{"s":"x","n":2,"t":true,"f":false,"z":null,"arr":[],"obj":{}}}"#,
    r#"{"tab\tkey":"tab\tvalue"}"#,
    r#"{"a":"\ud834\udd1e"}"#,
    r#"{"long":"Lorem ipsum dolor sit amet, consectetur adipiscing elit"}"#,
    r#"{"x":[{"y":1},{"y":2},{"y":3},{"y":4}]}"#,
    r#"{"deep":[[],[[]],[[],[[]]]]}"#,
];
