//! Embedded expected structures, one record per table row, fully evaluated
//! at the requested (family, m, ell).
//!
//! Factor labels are bound at run time: "F" is the trivial class, "X" and
//! "Y" are the classes of the graph submodules of the plus- and minus-point
//! orbits, "Z"/"W"/"X1"/"Y1"/"Z1" the remaining constituents (see the
//! runner's binding step). Socle series are listed from the socle upward.

use super::{classify_ell, EllClass};
use crate::error::{Error, Result};
use crate::geometry::Family;

pub type Layer = Vec<(&'static str, usize)>;

/// Expected data for one orbit `F P^kappa`.
#[derive(Clone, Debug)]
pub struct ExpectedOrbit {
    pub npoints: u64,
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub s: i64,
    /// (dim U'_{c1}, dim U'_{c2}) over the rationals.
    pub rational_dims: (u64, u64),
    /// dim U'_c over GF(ell), per root (one entry when the roots collide).
    pub uprime_mod_dims: Vec<(i64, u64)>,
    /// Composition factors: (label, dim, multiplicity).
    pub factors: Vec<(&'static str, u64, usize)>,
    /// Dimensions of the centralizer-idempotent summands, ascending.
    pub summands: Vec<u64>,
    /// Socle content of F P^kappa.
    pub socle: Layer,
    /// Full socle series of F P^kappa, when asserted.
    pub fp_socle_series: Option<Vec<Layer>>,
    /// Socle series of S(F P^kappa), when asserted (split cases only).
    pub s_socle_series: Option<Vec<Layer>>,
    /// The uniserial summand of the divisor classes: (dim, layers bottom-up).
    pub uniserial_summand: Option<(u64, [&'static str; 3])>,
    /// Structure of U'^perp / U' as a direct sum of uniserial chains
    /// (bottom-up; singleton chains are simple summands).
    pub perp_chains: Option<Vec<Vec<&'static str>>>,
    /// Expected dims of the submodule chain of S (exhaustive lattice check).
    pub s_lattice_chain: Option<Vec<u64>>,
    /// Expected size of the full submodule lattice of F P^kappa, if pinned.
    pub fp_lattice_size: Option<u64>,
}

/// Expected data for a full configuration.
#[derive(Clone, Debug)]
pub struct ExpectedConfig {
    pub class: EllClass,
    pub roots: (i64, i64),
    pub equal_mod: bool,
    /// Indexed by orbit: [kappa = +1, kappa = -1].
    pub orbits: [ExpectedOrbit; 2],
    /// Labels expected isomorphic across orbits (checked once).
    pub iso_pairs: Vec<(&'static str, &'static str)>,
    /// Labels expected pairwise non-isomorphic.
    pub noniso_pairs: Vec<(&'static str, &'static str)>,
    /// Run the "no X-over-Y submodule" socle-attachment checks
    /// (minus family, ell = 2).
    pub no_cross_attachment: bool,
    pub citation: &'static str,
}

fn p3(e: u32) -> u64 {
    3u64.pow(e)
}

pub fn expected_config(family: Family, m: usize, ell: u64) -> Result<ExpectedConfig> {
    let n = m / 2;
    let class = classify_ell(family, n, ell);
    match family {
        Family::Plus => plus_config(n as u32, ell, class),
        Family::Minus => minus_config(n as u32, ell, class),
        Family::Odd => odd_config(n as u32, ell, class),
    }
}

fn plus_config(n: u32, ell: u64, class: EllClass) -> Result<ExpectedConfig> {
    let npoints = p3(n - 1) * (p3(n) - 1) / 2;
    let a = (p3(n - 1) * (p3(n - 1) - 1) / 2) as i64;
    let b = (p3(2 * n - 2) - 1) as i64;
    let r = (p3(n - 2) * (p3(n - 1) + 1) / 2) as i64;
    let s = (p3(n - 1) * (p3(n - 2) - 1) / 2) as i64;
    let roots = (p3(n - 2) as i64, -(p3(n - 1) as i64));
    let d1 = (p3(n) - 1) * (p3(n - 1) - 1) / 8;
    let d2 = (p3(2 * n) - 9) / 8;
    let dim_x = d1;
    let dim_z = d2 - if (p3(n) - 1) % ell == 0 { 1 } else { 0 };
    let dim_w = (p3(n) - 1) * (p3(n - 1) + 3) / 8 - 1 - if n % 2 == 0 { 1 } else { 0 };

    let orbit = |own: &'static str, other: &'static str| -> ExpectedOrbit {
        let mut o = ExpectedOrbit {
            npoints,
            a,
            b,
            r,
            s,
            rational_dims: (d1, d2),
            uprime_mod_dims: vec![(roots.0, d1), (roots.1, d2)],
            factors: vec![],
            summands: vec![],
            socle: vec![],
            fp_socle_series: None,
            s_socle_series: None,
            uniserial_summand: None,
            perp_chains: None,
            s_lattice_chain: None,
            fp_lattice_size: None,
        };
        match class {
            EllClass::Generic => {
                o.factors = vec![("F", 1, 1), (own, dim_x, 1), ("Z", dim_z, 1)];
                o.summands = vec![1, dim_x, dim_z];
                o.socle = vec![("F", 1), (own, 1), ("Z", 1)];
                o.fp_socle_series =
                    Some(vec![vec![("F", 1), (own, 1), ("Z", 1)]]);
            }
            EllClass::DividesQMinusOne => {
                o.factors = vec![("F", 1, 2), (own, dim_x, 1), ("Z", dim_z, 1)];
                o.summands = vec![dim_x, npoints - dim_x];
                o.socle = vec![("F", 1), (own, 1)];
                o.fp_socle_series = Some(vec![
                    vec![("F", 1), (own, 1)],
                    vec![("Z", 1)],
                    vec![("F", 1)],
                ]);
                o.uniserial_summand = Some((npoints - dim_x, ["F", "Z", "F"]));
            }
            EllClass::DividesQPlusOne => unreachable!("not a plus-family class"),
            EllClass::TwoOdd => {
                o.uprime_mod_dims = vec![(1, dim_x)];
                o.factors = vec![("F", 1, 1), (own, dim_x, 2), (other, dim_x, 1), ("W", dim_w, 1)];
                o.summands = vec![1, npoints - 1];
                o.socle = vec![("F", 1), (own, 1)];
                o.fp_socle_series = Some(vec![
                    vec![("F", 1), (own, 1)],
                    vec![(other, 1), ("W", 1)],
                    vec![(own, 1)],
                ]);
                o.s_socle_series = Some(vec![
                    vec![(own, 1)],
                    vec![(other, 1), ("W", 1)],
                    vec![(own, 1)],
                ]);
                o.fp_lattice_size = Some(12);
            }
            EllClass::TwoEven => {
                o.uprime_mod_dims = vec![(1, dim_x)];
                o.factors = vec![("F", 1, 2), (own, dim_x, 2), (other, dim_x, 1), ("W", dim_w, 1)];
                o.summands = vec![npoints];
                o.socle = vec![("F", 1), (own, 1)];
            }
        }
        o
    };

    let (iso_pairs, noniso_pairs) = match class {
        EllClass::Generic | EllClass::DividesQMinusOne => (vec![("Z", "Z")], vec![]),
        _ => (vec![("W", "W")], vec![("X", "Y")]),
    };
    Ok(ExpectedConfig {
        class,
        roots,
        equal_mod: ell == 2,
        orbits: [orbit("X", "Y"), orbit("Y", "X")],
        iso_pairs,
        noniso_pairs,
        no_cross_attachment: false,
        citation: "table:plus",
    })
}

fn minus_config(n: u32, ell: u64, class: EllClass) -> Result<ExpectedConfig> {
    let npoints = p3(n - 1) * (p3(n) + 1) / 2;
    let a = (p3(n - 1) * (p3(n - 1) + 1) / 2) as i64;
    let b = (p3(2 * n - 2) - 1) as i64;
    let r = (p3(n - 2) * (p3(n - 1) - 1) / 2) as i64;
    let s = (p3(n - 1) * (p3(n - 2) + 1) / 2) as i64;
    let roots = (-(p3(n - 2) as i64), p3(n - 1) as i64);
    let d1 = (p3(n) + 1) * (p3(n - 1) + 1) / 8;
    let d2 = (p3(2 * n) - 9) / 8;
    let dim_x = d1 - if ell == 2 { 1 } else { 0 };
    let dim_z = d2 - if (p3(n) + 1) % ell == 0 { 1 } else { 0 };
    // the W formula degenerates to 0 at n = 2
    let dim_w = if n == 2 {
        0
    } else {
        (p3(n) + 1) * (p3(n - 1) - 3) / 8 - 1 + if n % 2 == 0 { 1 } else { 0 }
    };

    let orbit = |own: &'static str, other: &'static str| -> ExpectedOrbit {
        let mut o = ExpectedOrbit {
            npoints,
            a,
            b,
            r,
            s,
            rational_dims: (d1, d2),
            uprime_mod_dims: vec![(roots.0, d1), (roots.1, d2)],
            factors: vec![],
            summands: vec![],
            socle: vec![],
            fp_socle_series: None,
            s_socle_series: None,
            uniserial_summand: None,
            perp_chains: None,
            s_lattice_chain: None,
            fp_lattice_size: None,
        };
        match class {
            EllClass::Generic => {
                o.factors = vec![("F", 1, 1), (own, dim_x, 1), ("Z", dim_z, 1)];
                o.summands = vec![1, dim_x, dim_z];
                o.socle = vec![("F", 1), (own, 1), ("Z", 1)];
                o.fp_socle_series = Some(vec![vec![("F", 1), (own, 1), ("Z", 1)]]);
            }
            EllClass::DividesQPlusOne => {
                o.factors = vec![("F", 1, 2), (own, dim_x, 1), ("Z", dim_z, 1)];
                o.summands = vec![dim_x, npoints - dim_x];
                o.socle = vec![("F", 1), (own, 1)];
                o.fp_socle_series = Some(vec![
                    vec![("F", 1), (own, 1)],
                    vec![("Z", 1)],
                    vec![("F", 1)],
                ]);
                o.uniserial_summand = Some((npoints - dim_x, ["F", "Z", "F"]));
            }
            EllClass::DividesQMinusOne => unreachable!("not a minus-family class"),
            EllClass::TwoOdd => {
                // n odd: |P| even, the module is a single block
                o.uprime_mod_dims = vec![(1, dim_x)];
                o.factors = vec![
                    ("F", 1, 4),
                    (own, dim_x, 2),
                    (other, dim_x, 1),
                    ("W", dim_w, 1),
                ];
                o.summands = vec![npoints];
                o.socle = vec![("F", 1), (own, 1)];
                o.perp_chains = Some(vec![
                    vec!["F", other, "F"],
                    vec!["F", "W", "F"],
                ]);
            }
            EllClass::TwoEven => {
                // n even: |P| odd, F P = T ⊕ S
                o.uprime_mod_dims = vec![(1, dim_x)];
                let mut factors = vec![("F", 1, 3), (own, dim_x, 2), (other, dim_x, 1)];
                if dim_w > 0 {
                    factors.push(("W", dim_w, 1));
                }
                o.factors = factors;
                o.summands = vec![1, npoints - 1];
                o.socle = vec![("F", 1), (own, 1)];
                let mut chains = vec![vec!["F"]];
                if dim_w > 0 {
                    chains.push(vec!["W"]);
                }
                chains.push(vec!["F", other, "F"]);
                o.perp_chains = Some(chains);
                if dim_w == 0 {
                    // m = 4: the full uniserial picture is pinned
                    o.fp_socle_series = Some(vec![
                        vec![("F", 1), (own, 1)],
                        vec![("F", 1)],
                        vec![(other, 1)],
                        vec![("F", 1)],
                        vec![(own, 1)],
                    ]);
                    o.s_socle_series = Some(vec![
                        vec![(own, 1)],
                        vec![("F", 1)],
                        vec![(other, 1)],
                        vec![("F", 1)],
                        vec![(own, 1)],
                    ]);
                    o.s_lattice_chain = Some(vec![
                        0,
                        dim_x,
                        dim_x + 1,
                        dim_x + 1 + dim_x,
                        dim_x + 2 + dim_x,
                        npoints - 1,
                    ]);
                    o.fp_lattice_size = Some(14);
                }
            }
        }
        o
    };

    let (iso_pairs, noniso_pairs) = match class {
        EllClass::Generic | EllClass::DividesQPlusOne => (vec![("Z", "Z")], vec![]),
        _ => {
            let iso = if dim_w > 0 { vec![("W", "W")] } else { vec![] };
            (iso, vec![("X", "Y")])
        }
    };
    Ok(ExpectedConfig {
        class,
        roots,
        equal_mod: ell == 2,
        orbits: [orbit("X", "Y"), orbit("Y", "X")],
        iso_pairs,
        noniso_pairs,
        no_cross_attachment: ell == 2,
        citation: "table:minus",
    })
}

fn odd_config(n: u32, ell: u64, class: EllClass) -> Result<ExpectedConfig> {
    if class == EllClass::TwoEven {
        return Err(Error::UnsupportedConfig(
            "odd family with ell = 2 needs n odd in the supported range".into(),
        ));
    }
    let np_plus = p3(n) * (p3(n) - 1) / 2;
    let np_minus = p3(n) * (p3(n) + 1) / 2;
    let roots = (-(p3(n - 1) as i64), p3(n - 1) as i64);
    // kappa = +1 parameters
    let params_plus = (
        (p3(n - 1) * (p3(n) + 1) / 2) as i64,
        ((p3(n) + 1) * (p3(n - 1) - 1)) as i64,
        (p3(n - 1) * (p3(n - 1) + 1) / 2) as i64,
    );
    // kappa = -1 parameters
    let params_minus = (
        (p3(n - 1) * (p3(n) - 1) / 2) as i64,
        ((p3(n) - 1) * (p3(n - 1) + 1)) as i64,
        (p3(n - 1) * (p3(n - 1) - 1) / 2) as i64,
    );
    let dim_z = (p3(2 * n) - 1) / 4;
    let dim_x = (p3(n) + 1) * (p3(n) - 3) / 4 - if (p3(n) - 1) % ell == 0 { 1 } else { 0 };
    let dim_y = (p3(n) - 1) * (p3(n) + 3) / 4 - if (p3(n) + 1) % ell == 0 { 1 } else { 0 };
    let dim_x1 = (p3(n) - 1) * (p3(n) - 3) / 8;
    let dim_y1 = (p3(n) + 1) * (p3(n) + 3) / 8 - 1;
    let dim_z1 = (p3(2 * n) - 9) / 8 - if n % 2 == 0 { 1 } else { 0 };

    // rational dims: kappa = +1 has (Z-root, X-root) = (182, 168) at n = 3
    let rat_plus = (dim_z, (p3(n) + 1) * (p3(n) - 3) / 4);
    let rat_minus = ((p3(n) - 1) * (p3(n) + 3) / 4, dim_z);

    let mut plus = ExpectedOrbit {
        npoints: np_plus,
        a: params_plus.0,
        b: params_plus.1,
        r: params_plus.2,
        s: params_plus.2,
        rational_dims: rat_plus,
        uprime_mod_dims: vec![(roots.0, rat_plus.0), (roots.1, rat_plus.1)],
        factors: vec![],
        summands: vec![],
        socle: vec![],
        fp_socle_series: None,
        s_socle_series: None,
        uniserial_summand: None,
        perp_chains: None,
        s_lattice_chain: None,
        fp_lattice_size: None,
    };
    let mut minus = ExpectedOrbit {
        npoints: np_minus,
        a: params_minus.0,
        b: params_minus.1,
        r: params_minus.2,
        s: params_minus.2,
        rational_dims: rat_minus,
        uprime_mod_dims: vec![(roots.0, rat_minus.0), (roots.1, rat_minus.1)],
        factors: vec![],
        summands: vec![],
        socle: vec![],
        fp_socle_series: None,
        s_socle_series: None,
        uniserial_summand: None,
        perp_chains: None,
        s_lattice_chain: None,
        fp_lattice_size: None,
    };

    let mut iso_pairs = Vec::new();
    let mut noniso_pairs: Vec<(&'static str, &'static str)> = Vec::new();
    match class {
        EllClass::Generic => {
            plus.factors = vec![("F", 1, 1), ("X", dim_x, 1), ("Z", dim_z, 1)];
            plus.summands = vec![1, dim_x.min(dim_z), dim_x.max(dim_z)];
            plus.socle = vec![("F", 1), ("X", 1), ("Z", 1)];
            plus.fp_socle_series = Some(vec![vec![("F", 1), ("X", 1), ("Z", 1)]]);
            minus.factors = vec![("F", 1, 1), ("Y", dim_y, 1), ("Z", dim_z, 1)];
            minus.summands = vec![1, dim_y.min(dim_z), dim_y.max(dim_z)];
            minus.socle = vec![("F", 1), ("Y", 1), ("Z", 1)];
            minus.fp_socle_series = Some(vec![vec![("F", 1), ("Y", 1), ("Z", 1)]]);
            iso_pairs.push(("Z", "Z"));
        }
        EllClass::DividesQMinusOne => {
            // ell | |P^{+1}|: the uniserial piece sits on the plus side
            plus.factors = vec![("F", 1, 2), ("X", dim_x, 1), ("Z", dim_z, 1)];
            plus.summands = {
                let mut v = vec![dim_z, np_plus - dim_z];
                v.sort_unstable();
                v
            };
            plus.socle = vec![("F", 1), ("Z", 1)];
            plus.fp_socle_series = Some(vec![
                vec![("F", 1), ("Z", 1)],
                vec![("X", 1)],
                vec![("F", 1)],
            ]);
            plus.uniserial_summand = Some((np_plus - dim_z, ["F", "X", "F"]));
            minus.factors = vec![("F", 1, 1), ("Y", dim_y, 1), ("Z", dim_z, 1)];
            minus.summands = vec![1, dim_z.min(dim_y), dim_z.max(dim_y)];
            minus.socle = vec![("F", 1), ("Y", 1), ("Z", 1)];
            minus.fp_socle_series = Some(vec![vec![("F", 1), ("Y", 1), ("Z", 1)]]);
            iso_pairs.push(("Z", "Z"));
        }
        EllClass::DividesQPlusOne => {
            plus.factors = vec![("F", 1, 1), ("X", dim_x, 1), ("Z", dim_z, 1)];
            plus.summands = vec![1, dim_x.min(dim_z), dim_x.max(dim_z)];
            plus.socle = vec![("F", 1), ("X", 1), ("Z", 1)];
            plus.fp_socle_series = Some(vec![vec![("F", 1), ("X", 1), ("Z", 1)]]);
            minus.factors = vec![("F", 1, 2), ("Y", dim_y, 1), ("Z", dim_z, 1)];
            minus.summands = {
                let mut v = vec![dim_z, np_minus - dim_z];
                v.sort_unstable();
                v
            };
            minus.socle = vec![("F", 1), ("Z", 1)];
            minus.fp_socle_series = Some(vec![
                vec![("F", 1), ("Z", 1)],
                vec![("Y", 1)],
                vec![("F", 1)],
            ]);
            minus.uniserial_summand = Some((np_minus - dim_z, ["F", "Y", "F"]));
            iso_pairs.push(("Z", "Z"));
        }
        EllClass::TwoOdd => {
            plus.uprime_mod_dims = vec![(1, dim_x1)];
            plus.factors = vec![
                ("F", 1, 1),
                ("X1", dim_x1, 2),
                ("Y1", dim_y1, 1),
                ("Z1", dim_z1, 1),
            ];
            plus.summands = vec![1, np_plus - 1];
            plus.socle = vec![("F", 1), ("X1", 1)];
            plus.fp_socle_series = Some(vec![
                vec![("F", 1), ("X1", 1)],
                vec![("Y1", 1), ("Z1", 1)],
                vec![("X1", 1)],
            ]);
            plus.s_socle_series = Some(vec![
                vec![("X1", 1)],
                vec![("Y1", 1), ("Z1", 1)],
                vec![("X1", 1)],
            ]);
            plus.perp_chains = Some(vec![vec!["F"], vec!["Y1"], vec!["Z1"]]);
            minus.uprime_mod_dims = vec![(1, dim_y1)];
            minus.factors = vec![
                ("F", 1, 2),
                ("Y1", dim_y1, 2),
                ("Z1", dim_z1, 1),
                ("X1", dim_x1, 1),
            ];
            minus.summands = vec![np_minus];
            minus.socle = vec![("F", 1), ("Y1", 1)];
            minus.fp_socle_series = Some(vec![
                vec![("F", 1), ("Y1", 1)],
                vec![("F", 1), ("Z1", 1), ("X1", 1)],
                vec![("Y1", 1)],
            ]);
            minus.perp_chains = Some(vec![vec!["F"], vec!["F"], vec!["Z1"], vec!["X1"]]);
            noniso_pairs.push(("X1", "Y1"));
        }
        EllClass::TwoEven => unreachable!(),
    }
    Ok(ExpectedConfig {
        class,
        roots,
        equal_mod: ell == 2,
        orbits: [plus, minus],
        iso_pairs,
        noniso_pairs,
        no_cross_attachment: false,
        citation: "table:odd",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus6_values() {
        let e = expected_config(Family::Plus, 6, 2).unwrap();
        assert_eq!(e.roots, (3, -9));
        let o = &e.orbits[0];
        assert_eq!(o.npoints, 117);
        assert_eq!((o.a, o.b, o.r, o.s), (36, 80, 15, 9));
        assert_eq!(o.rational_dims, (26, 90));
        assert_eq!(o.factors, vec![("F", 1, 1), ("X", 26, 2), ("Y", 26, 1), ("W", 38, 1)]);
        assert_eq!(o.summands, vec![1, 116]);

        let e5 = expected_config(Family::Plus, 6, 5).unwrap();
        assert_eq!(e5.orbits[0].summands, vec![1, 26, 90]);
        let e13 = expected_config(Family::Plus, 6, 13).unwrap();
        assert_eq!(e13.orbits[0].summands, vec![26, 91]);
        assert_eq!(e13.orbits[0].factors[2], ("Z", 89, 1));
    }

    #[test]
    fn minus_values() {
        let e = expected_config(Family::Minus, 6, 2).unwrap();
        let o = &e.orbits[0];
        assert_eq!(o.npoints, 126);
        assert_eq!((o.a, o.b, o.r, o.s), (45, 80, 12, 18));
        assert_eq!(o.factors, vec![("F", 1, 4), ("X", 34, 2), ("Y", 34, 1), ("W", 20, 1)]);
        assert_eq!(
            o.perp_chains,
            Some(vec![vec!["F", "Y", "F"], vec!["F", "W", "F"]])
        );
        let e7 = expected_config(Family::Minus, 6, 7).unwrap();
        assert_eq!(e7.orbits[0].summands, vec![35, 91]);
        assert_eq!(e7.orbits[0].factors[2], ("Z", 89, 1));

        let e4 = expected_config(Family::Minus, 4, 2).unwrap();
        let o4 = &e4.orbits[0];
        assert_eq!(o4.npoints, 15);
        assert_eq!(o4.factors, vec![("F", 1, 3), ("X", 4, 2), ("Y", 4, 1)]);
        assert_eq!(o4.s_lattice_chain, Some(vec![0, 4, 5, 9, 10, 14]));
        assert_eq!(o4.perp_chains, Some(vec![vec!["F"], vec!["F", "Y", "F"]]));
    }

    #[test]
    fn odd7_values() {
        let e = expected_config(Family::Odd, 7, 2).unwrap();
        assert_eq!(e.roots, (-9, 9));
        let p = &e.orbits[0];
        assert_eq!(p.npoints, 351);
        assert_eq!((p.a, p.b, p.r, p.s), (126, 224, 45, 45));
        assert_eq!(p.rational_dims, (182, 168));
        assert_eq!(
            p.factors,
            vec![("F", 1, 1), ("X1", 78, 2), ("Y1", 104, 1), ("Z1", 90, 1)]
        );
        let m = &e.orbits[1];
        assert_eq!(m.npoints, 378);
        assert_eq!((m.a, m.b, m.r, m.s), (117, 260, 36, 36));
        assert_eq!(m.rational_dims, (195, 182));
        assert_eq!(
            m.factors,
            vec![("F", 1, 2), ("Y1", 104, 2), ("Z1", 90, 1), ("X1", 78, 1)]
        );

        let e13 = expected_config(Family::Odd, 7, 13).unwrap();
        assert_eq!(e13.orbits[0].summands, vec![169, 182]);
        assert_eq!(e13.orbits[0].factors[1], ("X", 167, 1));
        assert_eq!(e13.orbits[1].summands, vec![1, 182, 195]);
        let e7 = expected_config(Family::Odd, 7, 7).unwrap();
        assert_eq!(e7.orbits[1].summands, vec![182, 196]);
        assert_eq!(e7.orbits[1].factors[1], ("Y", 194, 1));
        assert_eq!(e7.orbits[0].summands, vec![1, 168, 182]);
    }

    #[test]
    fn plus8_stretch_values() {
        let e = expected_config(Family::Plus, 8, 2).unwrap();
        assert_eq!(e.class, EllClass::TwoEven);
        let o = &e.orbits[0];
        assert_eq!(o.npoints, 1080);
        assert_eq!(
            o.factors,
            vec![("F", 1, 2), ("X", 260, 2), ("Y", 260, 1), ("W", 298, 1)]
        );
    }

    #[test]
    fn factor_dims_sum_to_npoints() {
        for (family, m) in [
            (Family::Minus, 4),
            (Family::Plus, 6),
            (Family::Minus, 6),
            (Family::Odd, 7),
            (Family::Plus, 8),
            (Family::Minus, 8),
        ] {
            for ell in [2u64, 5, 7, 13] {
                let e = expected_config(family, m, ell).unwrap();
                for o in &e.orbits {
                    let total: u64 = o.factors.iter().map(|(_, d, c)| d * *c as u64).sum();
                    assert_eq!(total, o.npoints, "{family:?} m={m} ell={ell}");
                    let sums: u64 = o.summands.iter().sum();
                    assert_eq!(sums, o.npoints);
                    if let Some(series) = &o.fp_socle_series {
                        let mut layer_total = 0u64;
                        for layer in series {
                            for (lbl, c) in layer {
                                let dim = o
                                    .factors
                                    .iter()
                                    .find(|(l, _, _)| l == lbl)
                                    .map(|(_, d, _)| *d)
                                    .unwrap();
                                layer_total += dim * *c as u64;
                            }
                        }
                        assert_eq!(layer_total, o.npoints);
                    }
                }
            }
        }
    }
}
