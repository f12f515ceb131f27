#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};

use centaut::catalog::CatalogEntry;
use centaut::group::{center, realize, FiniteGroup, RealizedGroup};
use centaut::pcp::{parse_presentation, PcPresentation};
use centaut::profile::GroupProfile;

pub fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

pub fn fixture_dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn catalog_presentation(name: &str) -> PcPresentation {
    let path = catalog_dir().join(format!("{name}.pc"));
    CatalogEntry::read(&path).unwrap().presentation
}

/// Realized once per test binary and shared.
pub fn catalog_group(name: &str) -> &'static RealizedGroup {
    static CACHE: OnceLock<Mutex<HashMap<String, &'static RealizedGroup>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(name) {
        return g;
    }
    let g: &'static RealizedGroup =
        Box::leak(Box::new(realize(&catalog_presentation(name)).unwrap()));
    cache.lock().unwrap().insert(name.to_string(), g);
    g
}

pub fn catalog_profile(name: &str) -> GroupProfile {
    GroupProfile::new(catalog_group(name).clone()).unwrap()
}

pub fn group(text: &str) -> RealizedGroup {
    realize(&parse_presentation(text).unwrap()).unwrap()
}

pub const HEISENBERG: &str = "name heisenberg\nprime 3\ngens 3\ncomm 2 1 = 3:1\n";

/// Every shipped `p = 3` entry.
pub const P3_CATALOG: [&str; 14] = [
    "c27",
    "c3",
    "c3_wr_c3",
    "c3_x_heisenberg",
    "c3xc3",
    "c81_by_c9",
    "c9_by_c9",
    "c9sq_by_c9",
    "c9xc3",
    "extraspecial_m27",
    "heisenberg_p3",
    "phi7_member_p3",
    "phi8_32_p3",
    "ut4_p3",
];

/// `|Aut_z(G)|` via homomorphisms `f: G -> Z(G)`: `x -> x f(x)` is a central
/// endomorphism, and an automorphism exactly when it is bijective. `f` is
/// fixed by its values on all pc generators and evaluated on normal forms.
pub fn autz_order_by_homomorphisms(g: &RealizedGroup) -> usize {
    let z = center(g).elements().to_vec();
    let n = g.generator_count();
    let mut count = 0;
    let mut choice = vec![0usize; n];
    loop {
        // powers[i][e] = f(g_i)^e
        let powers: Vec<Vec<usize>> = choice
            .iter()
            .map(|&c| (0..g.prime() as u64).map(|e| g.pow(z[c], e)).collect())
            .collect();
        let f = |x: usize| {
            g.element(x)
                .exponents()
                .iter()
                .zip(&powers)
                .fold(0, |acc, (&e, pw)| g.mul(acc, pw[e as usize]))
        };
        let values: Vec<usize> = (0..g.order()).map(f).collect();
        let hom = (0..g.order()).all(|x| {
            (1..=n).all(|i| {
                let s = g.generator(i);
                values[g.mul(x, s)] == g.mul(values[x], values[s])
            })
        });
        if hom {
            let mut seen = vec![false; g.order()];
            for x in 0..g.order() {
                seen[g.mul(x, values[x])] = true;
            }
            if seen.iter().all(|&b| b) {
                count += 1;
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            choice[k] += 1;
            if choice[k] < z.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
