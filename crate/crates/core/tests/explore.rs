use orthomod::geometry::{standard_space, Family};
use orthomod::gfmat::PrimeField;
use orthomod::permmod::{build_module, quadratic_roots};
use orthomod::repanalysis::{
    centralizer_summands, composition_series, socle_series, GModule, Registry,
};
use orthomod::repanalysis::meataxe::factor_multiset;
use std::time::Instant;

fn run(family: Family, m: usize, kappa: u8, ell: u64) {
    let t0 = Instant::now();
    let sp = standard_space(family, m).unwrap();
    let f = PrimeField::new(ell).unwrap();
    let pm = build_module(&sp, kappa, f).unwrap();
    let gm = GModule::from_permutations(f, &pm.action().gens);
    let roots = quadratic_roots(pm.params(), f).unwrap();
    println!(
        "== {:?} m={} kappa={} ell={} | N={} params={:?} roots=({},{}) build {:?}",
        family, m, kappa, ell, pm.npoints(), pm.params(), roots.c1, roots.c2, t0.elapsed()
    );
    let t = Instant::now();
    let parts = centralizer_summands(&pm, &gm).unwrap();
    println!("  summands dims {:?} in {:?}", parts.iter().map(|s| s.dim()).collect::<Vec<_>>(), t.elapsed());
    let t = Instant::now();
    let mut reg = Registry::new();
    let factors = composition_series(&gm, &mut reg, 17).unwrap();
    let ms = factor_multiset(&factors);
    println!(
        "  factors {:?} in {:?}",
        ms.iter().map(|(id, c)| (reg.dim(*id), *c)).collect::<Vec<_>>(),
        t.elapsed()
    );
    let t = Instant::now();
    let pool: Vec<_> = ms.iter().map(|(id, _)| *id).collect();
    let series = socle_series(&gm, &reg, &pool).unwrap();
    println!(
        "  socle layers {:?} in {:?}",
        series
            .layers
            .iter()
            .map(|l| l.iter().map(|(id, c)| (reg.dim(*id), *c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        t.elapsed()
    );
}

#[test]
fn explore_plus6() {
    run(Family::Plus, 6, 1, 2);
    run(Family::Plus, 6, 1, 5);
    run(Family::Plus, 6, 1, 13);
}

#[test]
fn explore_odd7() {
    run(Family::Odd, 7, 1, 2);
    run(Family::Odd, 7, 2, 2);
}

#[test]
fn explore_odd_ell_large() {
    run(Family::Odd, 7, 1, 13);
    run(Family::Odd, 7, 2, 13);
    run(Family::Minus, 6, 1, 7);
    run(Family::Odd, 7, 2, 5);
}
