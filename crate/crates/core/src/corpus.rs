//! Bundled example inputs.
//!
//! `L1` and `L2` are the two worked examples (a meet-distributive
//! meet-semilattice with level dual, and one with non-level dual);
//! `B3-minus-13` is the boolean lattice on `{1,2,3}` with the single element
//! `{1,3}` removed; `N5` is the pentagon. `Bn(k)` and `JP(seed)` are
//! generated.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gen;
use crate::io::{family_file, InputFile, PosetFile};
use crate::semilattice::{MeetSemilattice, SetFamily};
use crate::subset::Subset;

pub const NAMES: &[&str] = &["L1", "L2", "B3-minus-13", "N5", "Bn(k)", "JP(seed)"];

/// Largest rank accepted by `Bn(k)`; `2^k` elements must fit a [`Subset`].
pub const MAX_BOOLEAN_RANK: usize = 6;

fn covers_file(elements: &[&str], covers: &[(&str, &str)]) -> InputFile {
    let s = |x: &str| Value::String(x.to_string());
    InputFile::Poset(PosetFile {
        elements: elements.iter().map(|&e| s(e)).collect(),
        covers: Some(covers.iter().map(|&(a, b)| (s(a), s(b))).collect()),
        leq: None,
    })
}

fn l1_file() -> InputFile {
    covers_file(
        &["0", "1", "2", "3", "12", "23", "123", "234", "235", "2345"],
        &[
            ("0", "1"),
            ("0", "2"),
            ("0", "3"),
            ("1", "12"),
            ("2", "12"),
            ("2", "23"),
            ("3", "23"),
            ("12", "123"),
            ("23", "123"),
            ("23", "234"),
            ("23", "235"),
            ("234", "2345"),
            ("235", "2345"),
        ],
    )
}

fn l2_file() -> InputFile {
    covers_file(
        &[
            "0", "1", "2", "3", "4", "13", "14", "23", "24", "34", "134", "234", "1234",
        ],
        &[
            ("0", "1"),
            ("0", "2"),
            ("0", "3"),
            ("0", "4"),
            ("1", "13"),
            ("3", "13"),
            ("1", "14"),
            ("4", "14"),
            ("2", "23"),
            ("3", "23"),
            ("2", "24"),
            ("4", "24"),
            ("3", "34"),
            ("4", "34"),
            ("13", "134"),
            ("14", "134"),
            ("34", "134"),
            ("23", "234"),
            ("24", "234"),
            ("34", "234"),
            ("134", "1234"),
            ("234", "1234"),
        ],
    )
}

fn b3_minus_13_file() -> InputFile {
    covers_file(
        &["0", "1", "2", "3", "12", "23", "123"],
        &[
            ("0", "1"),
            ("0", "2"),
            ("0", "3"),
            ("1", "12"),
            ("2", "12"),
            ("2", "23"),
            ("3", "23"),
            ("12", "123"),
            ("23", "123"),
        ],
    )
}

fn n5_file() -> InputFile {
    covers_file(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
}

/// Boolean lattice of rank `k` as a covers file.
fn boolean_file(k: usize) -> Result<InputFile> {
    if k > MAX_BOOLEAN_RANK {
        return Err(Error::TooLarge {
            what: "boolean lattice rank",
            size: k,
            limit: MAX_BOOLEAN_RANK,
        });
    }
    let family = SetFamily {
        ground: (1..=k).map(|i| i.to_string()).collect(),
        sets: Subset::full(k).subsets().collect(),
    };
    let l = MeetSemilattice::from_set_family(&family)?;
    Ok(InputFile::Poset(crate::io::poset_file(l.order())))
}

/// `J(P)` for a seeded random poset on 3 to 6 elements, as a sets file.
fn jp_file(seed: u64) -> InputFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = gen::random_poset(&mut rng, 3..=6, 0.35);
    InputFile::Family(family_file(&SetFamily {
        ground: p.ids().to_vec(),
        sets: p.poset_ideals().collect(),
    }))
}

fn parse_arg<'a>(name: &'a str, prefix: &str) -> Option<&'a str> {
    name.strip_prefix(prefix)?.strip_suffix(')')
}

/// Canonical input file for a corpus entry.
pub fn emit(name: &str) -> Result<InputFile> {
    let unknown = || Error::UnknownName(name.to_string());
    match name {
        "L1" => Ok(l1_file()),
        "L2" => Ok(l2_file()),
        "B3-minus-13" => Ok(b3_minus_13_file()),
        "N5" => Ok(n5_file()),
        _ => {
            if let Some(k) = parse_arg(name, "Bn(") {
                boolean_file(k.trim().parse().map_err(|_| unknown())?)
            } else if let Some(seed) = parse_arg(name, "JP(") {
                Ok(jp_file(seed.trim().parse().map_err(|_| unknown())?))
            } else {
                Err(unknown())
            }
        }
    }
}

pub fn load(name: &str) -> Result<MeetSemilattice> {
    emit(name)?.build(Subset::CAPACITY)
}

pub fn l1() -> MeetSemilattice {
    load("L1").expect("bundled L1")
}

/// `L1` entered as the set family of its element labels.
pub fn l1_family() -> MeetSemilattice {
    let ground: Vec<String> = ["1", "2", "3", "4", "5"].map(String::from).to_vec();
    let sets: Vec<Vec<&str>> = vec![
        vec![],
        vec!["1"],
        vec!["2"],
        vec!["3"],
        vec!["1", "2"],
        vec!["2", "3"],
        vec!["1", "2", "3"],
        vec!["2", "3", "4"],
        vec!["2", "3", "5"],
        vec!["2", "3", "4", "5"],
    ];
    MeetSemilattice::from_set_family(&SetFamily::from_ids(ground, &sets).unwrap())
        .expect("bundled L1 family")
}

pub fn l2() -> MeetSemilattice {
    load("L2").expect("bundled L2")
}

pub fn b3_minus_13() -> MeetSemilattice {
    load("B3-minus-13").expect("bundled B3-minus-13")
}

pub fn n5() -> MeetSemilattice {
    load("N5").expect("bundled N5")
}

pub fn boolean(k: usize) -> MeetSemilattice {
    boolean_file(k)
        .and_then(|f| f.build(Subset::CAPACITY))
        .expect("boolean lattice")
}
