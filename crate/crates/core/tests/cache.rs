mod common;

use std::fs;

use common::{dihedral, group};
use kljw::hecke::cache;
use kljw::{Family, KlTable};

#[test]
fn persisted_tables_reload_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    for g in [group(Family::B, 3), group(Family::H3, 3), dihedral(8)] {
        let t = KlTable::new(g.clone());
        t.compute_all();
        let path = cache::cache_path(dir.path(), g.presentation());
        cache::persist(&path, &t).unwrap();

        let fresh = KlTable::new(g.clone());
        assert_eq!(cache::load(&path, &fresh).unwrap(), g.size());
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(fresh.h(y, x), t.h(y, x));
            }
        }
        let again = dir.path().join("again.txt");
        cache::persist(&again, &fresh).unwrap();
        assert_eq!(fs::read(&path).unwrap(), fs::read(&again).unwrap());
    }
    assert!(dir.path().join("kl_I2-8_2.txt").exists());
}

#[test]
fn partial_tables_extend_after_loading() {
    let dir = tempfile::tempdir().unwrap();
    let g = group(Family::A, 3);
    let t = KlTable::new(g.clone());
    let x = g.from_word(&[1, 0, 2, 1]).unwrap();
    t.column(x);
    let partial = t.computed_count();
    assert!(partial < g.size());
    let path = cache::cache_path(dir.path(), g.presentation());
    cache::persist(&path, &t).unwrap();

    let fresh = KlTable::new(g.clone());
    assert_eq!(cache::load(&path, &fresh).unwrap(), partial);
    fresh.compute_all();
    let full = KlTable::new(g.clone());
    full.compute_all();
    for x in g.elements() {
        assert!(fresh.column(x).entries().eq(full.column(x).entries()));
    }
}

#[test]
fn mismatched_or_damaged_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = group(Family::B, 3);
    let t = KlTable::new(b3.clone());
    t.compute_all();
    let path = dir.path().join("b3.txt");
    cache::persist(&path, &t).unwrap();
    let text = fs::read_to_string(&path).unwrap();

    let other = KlTable::new(group(Family::A, 3));
    assert!(cache::load(&path, &other).is_err());

    let damaged = [
        text.replace("kltable 1", "kltable 9"),
        text.lines().filter(|l| !l.starts_with("end")).collect::<Vec<_>>().join("\n"),
        text.replacen("end ", "end 1", 1),
        text.replacen(" 0:1\n", " 0:1 2:1\n", 1),
        text.replacen("\n1 0 ", "\n1 4000 ", 1),
    ];
    for bad in damaged {
        assert_ne!(bad, text);
        fs::write(&path, bad).unwrap();
        let fresh = KlTable::new(b3.clone());
        assert!(cache::load(&path, &fresh).is_err());
        assert_eq!(fresh.computed_count(), 0);
    }
    let missing = KlTable::new(b3);
    assert_eq!(cache::load(&dir.path().join("none.txt"), &missing).unwrap(), 0);
}
