//! Temporary diagnostic probe (not part of the suite).

use bures_hall::biorth;
use bures_hall::exact::HalfInteger;
use bures_hall::kernels::base_integral_j;
use bures_hall::quad::tanh_sinh_unit;
use bures_hall::EnsembleParams;

#[test]
fn probe_j_accuracy_and_cancellation() {
    let rule = tanh_sinh_unit(520);
    let jref = |sf: f64, x: f64| {
        rule.integrate(|u, ubar| {
            let v = u / ubar;
            (sf * v.ln() - v).exp() / ((x + v) * ubar * ubar)
        })
    };

    // Failing case A: structure Q at m=2, n=3 (α = 1/2), k = 3, x = 21.855.
    let params = EnsembleParams::new(2, 3).unwrap();
    let a = 0.5_f64;
    let x = 21.855_f64;
    println!("--- per-J accuracy at x = {x} ---");
    for j in 0..=6i64 {
        let s = HalfInteger::from_twice((2 * j + 1).into()); // j + 1/2
        let sf = s.to_f64();
        let chain = base_integral_j(&s, x).unwrap();
        let r = jref(sf, x);
        println!("J({sf:4}, {x}): chain {chain:.16e} ref {r:.16e} rel {:.3e}", (chain - r).abs() / r.abs());
    }

    println!("--- cancellation in the transform sums ---");
    for k in 0..=3usize {
        // H_k = Q_k(−x) = −Σ_j c_j J(α + j + 1, x) up to the module's sign
        let q = biorth::poly_q(k, &params);
        let cs: Vec<f64> = q
            .rational_part()
            .coeffs()
            .iter()
            .map(bures_hall::exact::to_f64)
            .collect();
        let class = q.prefactor_class().to_f64();
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        for (j, c) in cs.iter().enumerate() {
            let s = HalfInteger::from_twice((2 * j as i64 + 2 * 1 + 2 * a as i64).into());
            // α + j + 1 as half-integer: 2(α+j+1) = 2α + 2j + 2 = 2j + 3 for α=1/2
            let _ = s;
            let shalf = HalfInteger::from_twice((2 * j as i64 + 3).into());
            let jv = jref(shalf.to_f64(), x);
            sum += class * c * jv;
            abs_sum += (class * c * jv).abs();
        }
        println!("k={k}: |Σ| = {:.6e}, Σ|·| = {:.6e}, condition {:.3e}", sum.abs(), abs_sum, abs_sum / sum.abs());
    }

    // Worst-case cancellation: m = 6 ladders at several x.
    for (m, n) in [(6u32, 9u32), (6, 6)] {
        let params_c = EnsembleParams::new(m, n).unwrap();
        let ta = params_c.twice_alpha();
        for x in [2.0_f64, 10.0, 22.0, 30.0] {
            for k in [6usize, 7] {
                let q = biorth::poly_q(k, &params_c);
                let cs: Vec<f64> = q
                    .rational_part()
                    .coeffs()
                    .iter()
                    .map(bures_hall::exact::to_f64)
                    .collect();
                let class = q.prefactor_class().to_f64();
                let mut sum = 0.0;
                let mut abs_sum = 0.0;
                for (j, c) in cs.iter().enumerate() {
                    let shalf = HalfInteger::from_twice((2 * j as i64 + ta + 2).into());
                    let jv = jref(shalf.to_f64(), x);
                    sum += class * c * jv;
                    abs_sum += (class * c * jv).abs();
                }
                println!(
                    "m={m} n={n} k={k} x={x:5}: |Σ| = {:.3e}, Σ|·| = {:.3e}, condition {:.3e}",
                    sum.abs(),
                    abs_sum,
                    abs_sum / sum.abs()
                );
            }
        }
    }

    // Failing case B: K01 derivative at m=3, n=5 (α = 3/2), x = 10.702.
    let params_b = EnsembleParams::new(3, 5).unwrap();
    let xb = 10.702_f64;
    println!("--- per-J accuracy at x = {xb} (α = 3/2 ladder) ---");
    for j in 0..=7i64 {
        let s = HalfInteger::from_twice((2 * j + 3).into()); // j + 3/2
        let sf = s.to_f64();
        let chain = base_integral_j(&s, xb).unwrap();
        let r = jref(sf, xb);
        println!("J({sf:4}, {xb}): rel {:.3e}", (chain - r).abs() / r.abs());
    }
    for k in 0..=4usize {
        let q = biorth::poly_q(k, &params_b);
        let cs: Vec<f64> = q
            .rational_part()
            .coeffs()
            .iter()
            .map(bures_hall::exact::to_f64)
            .collect();
        let class = q.prefactor_class().to_f64();
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        for (j, c) in cs.iter().enumerate() {
            let shalf = HalfInteger::from_twice((2 * j as i64 + 5).into()); // α + j + 1 = j + 5/2
            let jv = jref(shalf.to_f64(), xb);
            sum += class * c * jv;
            abs_sum += (class * c * jv).abs();
        }
        println!("k={k}: condition {:.3e}", abs_sum / sum.abs());
    }
}
