#![allow(dead_code)]

use std::sync::Arc;

use kljw::coxeter::build_group;
use kljw::{BuildOptions, CoxeterPresentation, Family, GroupTable, KlTable};

pub fn group(family: Family, rank: usize) -> Arc<GroupTable> {
    let p = CoxeterPresentation::new(family, rank).unwrap();
    Arc::new(build_group(&p, BuildOptions::default()).unwrap())
}

pub fn dihedral(m: u32) -> Arc<GroupTable> {
    let p = CoxeterPresentation::dihedral(m).unwrap();
    Arc::new(build_group(&p, BuildOptions::default()).unwrap())
}

pub fn table(g: &Arc<GroupTable>) -> KlTable {
    let t = KlTable::new(g.clone());
    t.compute_all();
    t
}

/// Small groups of every supported family.
pub fn small_groups() -> Vec<Arc<GroupTable>> {
    vec![
        group(Family::A, 2),
        group(Family::A, 3),
        group(Family::B, 2),
        group(Family::B, 3),
        group(Family::H3, 3),
        dihedral(5),
        dihedral(6),
    ]
}
