//! Acceptance suite: one criterion per test, each printing a single
//! pass/fail line (visible with `--nocapture`).

use std::collections::BTreeSet;

use num_integer::Integer;

use bgsat::alexander::{alexander_of_closure, satellite_alexander, torus_alexander};
use bgsat::cli::{run, Command};
use bgsat::hf::{
    is_lspace_surgery, min_twist, proof_identity_report, rank_surgery, KnotDescriptor,
};
use bgsat::jsj::{build_plan, layer_counts, verify_plan};
use bgsat::pattern::BergeGabaiPattern;
use bgsat::surgery::{
    filling_homology, kernel_generator_annihilated, satellite_surgery_correspondence,
    snf_homology_oracle, Slope,
};

fn criterion(n: u32, name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("criterion {n} ({name}): pass"),
        Err(e) => {
            println!("criterion {n} ({name}): FAIL — {e}");
            panic!("criterion {n} ({name}) failed: {e}");
        }
    }
}

/// All valid patterns in the standard grid `w <= 8, 0 <= b <= w-2,
/// 1 <= t <= 12`.
fn pattern_grid() -> Vec<BergeGabaiPattern> {
    let mut out = Vec::new();
    for w in 2..=8 {
        for b in 0..=w - 2 {
            for t in 1..=12 {
                if let Ok(p) = BergeGabaiPattern::new(w, b, t) {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[test]
fn criterion_1_genus_double_derivation() {
    criterion(1, "genus double-derivation", || {
        let grid = pattern_grid();
        if grid.len() < 100 {
            return Err(format!("grid unexpectedly small: {} cases", grid.len()));
        }
        for p in &grid {
            let formula = ((p.twist_number() - 1) * (p.winding() - 1) + p.bridge()) / 2;
            let seifert = p
                .braid_word()
                .seifert_genus()
                .map_err(|e| format!("{p}: {e}"))?;
            if formula != seifert || p.genus() != seifert {
                return Err(format!("{p}: formula {formula}, Seifert {seifert}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_2_burau_vs_closed_form() {
    criterion(2, "Burau vs. torus closed form", || {
        for p in 2..=5i64 {
            for q in 2..=7i64 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let word = BergeGabaiPattern::cable(p, q)
                    .map_err(|e| e.to_string())?
                    .braid_word();
                let burau = alexander_of_closure(&word).map_err(|e| e.to_string())?;
                let closed = torus_alexander(p, q).map_err(|e| e.to_string())?;
                if burau != closed {
                    return Err(format!("T({p},{q}): {burau} vs {closed}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_homology_vs_snf_oracle() {
    criterion(3, "filling homology vs. SNF oracle", || {
        for w in 1..=10i64 {
            for p1 in -30..=30i64 {
                for p2 in 1..=10i64 {
                    if p1.gcd(&p2) != 1 {
                        continue;
                    }
                    let slope = Slope::new(p1, p2).map_err(|e| e.to_string())?;
                    let direct = filling_homology(w, slope);
                    let oracle = snf_homology_oracle(w, slope);
                    if direct != oracle {
                        return Err(format!("w={w} slope={slope}: {direct:?} vs {oracle:?}"));
                    }
                    if !kernel_generator_annihilated(w, slope).map_err(|e| e.to_string())? {
                        return Err(format!("w={w} slope={slope}: kernel generator survives"));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_rank_formula() {
    criterion(4, "surgery rank formula", || {
        let trefoil = KnotDescriptor::torus(2, 3).unwrap().hf_data().unwrap();
        let spot = [
            (Slope::new(7, 1).unwrap(), 7),
            (Slope::new(1, 2).unwrap(), 3),
            (Slope::new(1, 1).unwrap(), 1),
        ];
        for (slope, expected) in spot {
            let rank = rank_surgery(&trefoil, slope).map_err(|e| e.to_string())?;
            if rank != expected {
                return Err(format!("trefoil {slope}: rank {rank}, expected {expected}"));
            }
        }
        let descriptors = [
            KnotDescriptor::Unknot,
            KnotDescriptor::torus(2, 3).unwrap(),
            KnotDescriptor::torus(2, 5).unwrap(),
            KnotDescriptor::torus(3, 4).unwrap(),
            KnotDescriptor::pretzel_m2_3_7(),
            KnotDescriptor::satellite(
                BergeGabaiPattern::new(5, 2, 8).unwrap(),
                KnotDescriptor::torus(2, 3).unwrap(),
            ),
        ];
        for d in descriptors {
            let data = d.hf_data().map_err(|e| e.to_string())?;
            let g = data.genus;
            for m in (2 * g - 1).max(1)..=2 * g + 20 {
                let slope = Slope::new(m, 1).unwrap();
                let rank = rank_surgery(&data, slope).map_err(|e| e.to_string())?;
                if rank != m {
                    return Err(format!("{d} at {m}: rank {rank}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_main_theorem_threshold() {
    criterion(5, "satellite twisting threshold", || {
        let base = BergeGabaiPattern::new(5, 2, 3).unwrap();
        let trefoil = KnotDescriptor::torus(2, 3).unwrap();
        let at_q0 = KnotDescriptor::satellite(base, trefoil.clone()).is_lspace_knot();
        let at_q1 = KnotDescriptor::satellite(base.twist(1), trefoil).is_lspace_knot();
        if at_q0 || !at_q1 {
            return Err(format!("q=0 gives {at_q0}, q=1 gives {at_q1}"));
        }
        for gk in 1..=4i64 {
            for q in 0..=10i64 {
                let p = base.twist(q);
                let k = min_twist(&p, gk).map_err(|e| e.to_string())?;
                let expected = (2 * gk - 1 - q).max(0);
                if k != expected {
                    return Err(format!("{p} gk={gk}: min_twist {k}, expected {expected}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_cable_specialization() {
    criterion(6, "cable specialization", || {
        let companions = [
            KnotDescriptor::torus(2, 3).unwrap(),
            KnotDescriptor::torus(2, 5).unwrap(),
            KnotDescriptor::torus(3, 4).unwrap(),
        ];
        for m in 2..=6i64 {
            for n in 1..=30i64 {
                if m.gcd(&n) != 1 {
                    continue;
                }
                let cable = BergeGabaiPattern::cable(m, n).map_err(|e| e.to_string())?;
                for k in &companions {
                    let sat = KnotDescriptor::satellite(cable, k.clone());
                    let expected = n >= m * (2 * k.genus() - 1);
                    if sat.is_lspace_knot() != expected {
                        return Err(format!("C({m},{n})[{k}]: expected {expected}"));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_proof_identities() {
    criterion(7, "surgery-proof identities", || {
        for p in pattern_grid() {
            for gk in 1..=4 {
                let report = proof_identity_report(&p, gk).map_err(|e| e.to_string())?;
                for e in &report.entries {
                    if e.t_satellite_rank != e.t_satellite_params {
                        return Err(format!(
                            "{p} gk={gk} d={}: rank form {} vs parameter form {}",
                            e.d, e.t_satellite_rank, e.t_satellite_params
                        ));
                    }
                    if e.sides_equal != (e.t_satellite_rank == 0 && e.companion_side == 0) {
                        return Err(format!(
                            "{p} gk={gk} d={}: sides agree without both vanishing",
                            e.d
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_satellite_alexander_degree() {
    criterion(8, "satellite Alexander degree", || {
        let companions = [
            KnotDescriptor::torus(2, 3).unwrap(),
            KnotDescriptor::torus(2, 5).unwrap(),
        ];
        for p in pattern_grid() {
            if p.winding() > 6 || p.twist_number() > 8 {
                continue;
            }
            let dp = alexander_of_closure(&p.braid_word()).map_err(|e| e.to_string())?;
            for k in &companions {
                let dk = k.alexander().map_err(|e| e.to_string())?;
                let sat = satellite_alexander(&dp, &dk, p.winding());
                let degree = sat.top_degree().map_err(|e| e.to_string())?;
                let expected = p.genus() + p.winding() * k.genus();
                if degree != expected {
                    return Err(format!("{p}[{k}]: degree {degree}, expected {expected}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_jsj_plans() {
    criterion(9, "JSJ plan construction", || {
        let plan = build_plan(1, 1).map_err(|e| e.to_string())?;
        if plan.descriptor.to_string() != "BG(5,2,8)[T(2,3)]"
            || plan.genus != 20
            || plan.lspace_slope_threshold != 39
            || plan.certified_slope_set() != BTreeSet::from([42, 43])
        {
            return Err(format!(
                "(1,1) plan: {} genus {} threshold {} slopes {:?}",
                plan.descriptor,
                plan.genus,
                plan.lspace_slope_threshold,
                plan.certified_slope_set()
            ));
        }
        for s in 0..=4 {
            for r in 0..=4 {
                if s + r == 0 {
                    continue;
                }
                let plan = build_plan(s, r).map_err(|e| e.to_string())?;
                if !plan.descriptor.is_lspace_knot() {
                    return Err(format!("({s},{r}): not an L-space knot"));
                }
                if layer_counts(&plan.descriptor) != (s, r) {
                    return Err(format!("({s},{r}): wrong layer counts"));
                }
                let report = verify_plan(&plan);
                if !report.pass() {
                    return Err(format!("({s},{r}): verification failed {:?}", report.failures()));
                }
            }
        }
        // Negative control: one full twist less than the threshold.
        let plan = build_plan(1, 1).unwrap();
        let KnotDescriptor::BgSat { pattern, companion } = &plan.descriptor else {
            return Err("(1,1) top layer is not a satellite".to_string());
        };
        let weakened = KnotDescriptor::satellite(pattern.twist(-1), (**companion).clone());
        if weakened.is_lspace_knot() {
            return Err("q - 1 control is still an L-space knot".to_string());
        }
        Ok(())
    });
}

#[test]
fn criterion_10_cli_golden_files() {
    criterion(10, "CLI golden files", || {
        let cases: [(&str, Command); 3] = [
            (
                "check_bg_5_2_8_t_2_3.json",
                Command::Check { descriptor: "BG(5,2,8)[T(2,3)]".into() },
            ),
            (
                "rank_t_2_3_1_2.json",
                Command::Rank { descriptor: "T(2,3)".into(), slope: "1/2".into() },
            ),
            ("jsj_1_1.json", Command::Jsj { seifert: 1, hyperbolic: 1 }),
        ];
        for (file, cmd) in cases {
            let out = run(&cmd).map_err(|e| format!("{file}: {}", e.message()))?;
            let rendered = format!(
                "{}\n",
                serde_json::to_string_pretty(&out.json).map_err(|e| e.to_string())?
            );
            let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
            let golden = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            if rendered != golden {
                return Err(format!("{file}: output differs from golden"));
            }
        }
        Ok(())
    });
}

/// Beyond the numbered criteria: certified slopes of L-space satellites
/// correspond to L-space surgeries on the companion.
#[test]
fn certified_slopes_correspond_to_lspace_surgeries() {
    let pattern = BergeGabaiPattern::new(5, 2, 8).unwrap();
    let companion = KnotDescriptor::torus(2, 3).unwrap();
    let data = companion.hf_data().unwrap();
    for p in pattern.exceptional_slope_candidates() {
        let slope = satellite_surgery_correspondence(&pattern, p).unwrap();
        assert_eq!(is_lspace_surgery(&data, slope), Ok(true));
    }
}
