//! Generator counts against independently computed censuses.

use std::time::Instant;

use subcubic::canon::canonical_form;
use subcubic::generator::{enumerate_connected, enumerate_connected_with, GenOptions};

fn timed<T>(label: &str, f: impl FnOnce() -> T) -> T {
    let t = Instant::now();
    let out = f();
    eprintln!("{label}: {:.2?}", t.elapsed());
    out
}

#[test]
fn connected_subcubic_counts_to_ten() {
    let counts: Vec<usize> = (1..=10)
        .map(|n| timed(&format!("subcubic n={n}"), || enumerate_connected(n, false).unwrap().len()))
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 10, 29, 64, 194, 531, 1733]);
}

#[test]
fn connected_cubic_counts_to_twelve() {
    let counts: Vec<usize> = [4, 6, 8, 10, 12]
        .iter()
        .map(|&n| timed(&format!("cubic n={n}"), || enumerate_connected(n, true).unwrap().len()))
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 19, 85]);
}

#[test]
fn triangle_free_counts_to_twelve() {
    let opts = GenOptions { triangle_free: true, max_general: 12, ..GenOptions::default() };
    let counts: Vec<usize> = (1..=12)
        .map(|n| timed(&format!("triangle-free n={n}"), || enumerate_connected_with(n, &opts).unwrap().len()))
        .collect();
    assert_eq!(counts, vec![1, 1, 1, 3, 5, 14, 29, 87, 219, 705, 2141, 7409]);
}

#[test]
fn classes_are_pairwise_distinct() {
    for n in 1..=8 {
        let s = enumerate_connected(n, false).unwrap();
        let mut forms: Vec<Vec<u8>> = s.graphs.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), s.len());
    }
}

#[test]
#[ignore = "extended run"]
fn cubic_fourteen() {
    assert_eq!(enumerate_connected(14, true).unwrap().len(), 509);
}
