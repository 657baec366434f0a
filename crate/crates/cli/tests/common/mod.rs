//! Shared by the golden and acceptance tests.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use srep::{Code, FinitePoset, Point, Space};
use srep_cli::syntax::{code_to_string, parse_code, parse_point, point_to_string, Cursor};
use srep_cli::{parse_spec, result_codes, transcript, RunOptions};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn spec_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "srep"))
        .collect();
    files.sort();
    files
}

/// Compares every transcript with its recording; returns the mismatching
/// file names.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for path in spec_files() {
        let text = fs::read_to_string(&path).unwrap();
        let got = transcript(&text, &RunOptions::default());
        let out = path.with_extension("out");
        if update {
            fs::write(&out, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&out).unwrap_or_default();
        if got != want {
            bad.push(path.file_name().unwrap().to_string_lossy().into_owned());
        }
    }
    bad
}

/// Reparses every code printed by a golden query; returns the failures.
pub fn printed_roundtrip_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for path in spec_files() {
        let Ok(spec) = parse_spec(&fs::read_to_string(&path).unwrap()) else {
            continue;
        };
        for q in &spec.queries {
            let Ok(codes) = result_codes(q) else { continue };
            for c in codes {
                if let Err(e) = code_roundtrip(&q.space, &c) {
                    bad.push(format!("{}: {e}", q.text));
                }
            }
        }
    }
    bad
}


/// Prints a code and parses it back.
pub fn code_roundtrip(s: &Space, c: &Code) -> Result<(), String> {
    let printed = code_to_string(s, c);
    let mut cur = Cursor::new(&printed, 1);
    let back = parse_code(s, &mut cur, false).and_then(|b| cur.expect_end().map(|_| b));
    match back {
        Ok(b) if &b == c => Ok(()),
        other => Err(format!("{}: `{printed}` reparsed as {other:?}", s.describe())),
    }
}

/// Prints a point and parses it back.
pub fn point_roundtrip(s: &Space, p: &Point) -> Result<(), String> {
    let printed = point_to_string(s, p);
    let mut cur = Cursor::new(&printed, 1);
    let back = parse_point(s, &mut cur, false).and_then(|b| cur.expect_end().map(|_| b));
    match back {
        Ok(b) if &b == p => Ok(()),
        other => Err(format!("{}: `{printed}` reparsed as {other:?}", s.describe())),
    }
}

/// A spread of spaces exercising every constructor and nesting.
pub fn roundtrip_spaces() -> Vec<Space> {
    let a2 = Space::base(FinitePoset::antichain(&["a", "b"]));
    let c2 = Space::base(FinitePoset::chain(&["a", "b"]));
    let long = Space::base(FinitePoset::from_names(&["lo", "hi", "h"], &[("lo", "hi")]).unwrap());
    vec![
        a2.clone(),
        Space::product(a2.clone(), c2.clone()),
        Space::sum(a2.clone(), long.clone()),
        Space::words(a2.clone()),
        Space::words(long.clone()),
        Space::pow(c2.clone()),
        Space::fin_inf_words(c2.clone()),
        Space::inf_words(long.clone()),
        Space::words(Space::product(a2.clone(), c2.clone())),
        Space::words(Space::words(a2.clone())),
        Space::pow(Space::words(c2.clone())),
        Space::pow(Space::pow(a2.clone())),
        Space::inf_words(Space::sum(a2.clone(), c2.clone())),
        Space::words(Space::inf_words(c2.clone())),
        Space::fin_inf_words(Space::words(a2.clone())),
        Space::sum(Space::words(a2.clone()), Space::pow(c2.clone())),
        Space::product(Space::fin_inf_words(a2.clone()), Space::words(long)),
        Space::fin_inf_words(Space::pow(c2)),
    ]
}
