//! Acceptance gate: twelve criteria, one test each, every equality exact.
//!
//! Each criterion prints a single `PASS [k/12] ...` line on success (visible
//! with `--nocapture`); a failure panics with the offending values.  Where a
//! computed quantity has an independent route, the oracle lives in this file
//! and shares no code with the library (Akiyama-Tanigawa for Bernoulli
//! numbers, first-row cofactor expansion for determinants).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use genera_core::genera::{
    ahat_poly, ahat_top_coeff, d_coeff, evaluate, genus_ph_ahat, l_poly, pontrjagin_character,
    PontrjaginNumbers,
};
use genera_core::numbers::{
    bernoulli, denominator_of, is_squarefree, numerator_of, rational, vsc_denominator, Rational,
};
use genera_core::obstruction::{
    o0_formula, o0_stable_formula, o2_vanishes, o_connected_sum, o_reverse, o_sphere, realize_o0,
    ObstructionClass,
};
use genera_core::plumbing::{
    bounds_homotopy_sphere, determinant, e8_graph, signature, IntMatrix, PlumbingGraph,
    PlumbingVertex,
};
use genera_core::surgery::{
    bp_order, bp_order_alt, build_m0, build_w0, lemma1_pm, min_euler_char,
    quaternionic_projective_plane, reverse_orientation, ChernData, VirtualManifold,
};
use genera_core::symmetric::{GradedPoly, Partition};
use genera_core::verify;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

// ---------------------------------------------------------------------------
// independent oracles

/// Akiyama-Tanigawa transform: returns the modern Bernoulli number `B_n`
/// in the `B_1 = +1/2` convention.  Nothing here is shared with the library
/// (which uses the binomial recurrence).
fn akiyama_tanigawa(n: u32) -> Rational {
    let n = n as usize;
    let mut a: Vec<Rational> = vec![Rational::zero(); n + 1];
    let mut b = Rational::zero();
    for m in 0..=n {
        a[m] = rational(1, (m + 1) as i64);
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = rational(j as i64, 1) * diff;
        }
        b = a[0].clone();
    }
    b
}

/// Determinant by first-row cofactor expansion.
fn cofactor_det(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = BigInt::zero();
    for col in 0..n {
        if m.get(0, col).is_zero() {
            continue;
        }
        let mut minor = IntMatrix::zero(n - 1);
        for i in 1..n {
            let mut c = 0;
            for j in 0..n {
                if j != col {
                    minor.set(i - 1, c, m.get(i, j).clone());
                    c += 1;
                }
            }
        }
        let term = m.get(0, col) * cofactor_det(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[test]
fn akiyama_tanigawa_oracle_reproduces_the_textbook_values() {
    // sanity-check the oracle itself before leaning on it
    assert_eq!(akiyama_tanigawa(0), rational(1, 1));
    assert_eq!(akiyama_tanigawa(1), rational(1, 2));
    assert_eq!(akiyama_tanigawa(2), rational(1, 6));
    assert_eq!(akiyama_tanigawa(3), rational(0, 1));
    assert_eq!(akiyama_tanigawa(4), rational(-1, 30));
    assert_eq!(akiyama_tanigawa(10), rational(5, 66));
    assert_eq!(akiyama_tanigawa(12), rational(-691, 2730));
}

// ---------------------------------------------------------------------------
// criteria

#[test]
fn criterion_01_bernoulli_numbers() {
    let frozen = [
        (1u32, rational(1, 6)),
        (2, rational(1, 30)),
        (3, rational(1, 42)),
        (4, rational(1, 30)),
        (5, rational(5, 66)),
        (6, rational(691, 2730)),
        (7, rational(7, 6)),
        (8, rational(3617, 510)),
    ];
    for (m, want) in frozen {
        assert_eq!(bernoulli(m).unwrap(), want, "B_{m}");
    }
    for m in 1..=30u32 {
        let b = bernoulli(m).unwrap();
        assert_eq!(
            b,
            akiyama_tanigawa(2 * m).abs(),
            "B_{m} disagrees with the Akiyama-Tanigawa oracle"
        );
        let den = denominator_of(&b);
        assert_eq!(den, vsc_denominator(m).unwrap(), "von Staudt-Clausen at m = {m}");
        assert!(is_squarefree(&den), "denominator of B_{m} not squarefree");
        assert!((&den % 6u32).is_zero(), "6 does not divide denominator of B_{m}");
        let quarter = &b * rational(1, 4 * i64::from(m));
        assert!(
            (numerator_of(&quarter) % 2u32).is_one(),
            "numerator of B_{m}/4m is even"
        );
    }
    assert!(bernoulli(0).is_err());
    println!("PASS [ 1/12] Bernoulli numbers: frozen table, Akiyama-Tanigawa, von Staudt-Clausen");
}

#[test]
fn criterion_02_genus_polynomials() {
    assert_eq!(l_poly(1).to_string(), "1/3*p1");
    assert_eq!(l_poly(2).to_string(), "7/45*p2 - 1/45*p1^2");
    assert_eq!(l_poly(3).to_string(), "62/945*p3 - 13/945*p2*p1 + 2/945*p1^3");
    assert_eq!(ahat_poly(1).to_string(), "-1/24*p1");
    assert_eq!(ahat_poly(2).to_string(), "-1/1440*p2 + 7/5760*p1^2");
    assert_eq!(
        ahat_poly(3).to_string(),
        "-1/60480*p3 + 11/241920*p2*p1 - 31/967680*p1^3"
    );
    let a4 = ahat_poly(4);
    assert_eq!(a4.coeff(&p(&[2, 2])), rational(416, 928972800));
    assert_eq!(a4.coeff(&p(&[4])), rational(-384, 928972800));
    println!("PASS [ 2/12] L- and Ahat-polynomials match the classical tables");
}

#[test]
fn criterion_03_top_coefficients() {
    for m in 1..=6u32 {
        assert_eq!(
            l_poly(m).coeff(&p(&[m])),
            d_coeff(m),
            "d_{m} closed form vs expansion"
        );
        assert_eq!(
            ahat_poly(m).coeff(&p(&[m])),
            ahat_top_coeff(m),
            "Ahat top coefficient closed form vs expansion at m = {m}"
        );
    }
    assert_eq!(d_coeff(1), rational(1, 3));
    assert_eq!(d_coeff(2), rational(7, 45));
    assert_eq!(d_coeff(3), rational(62, 945));
    assert_eq!(d_coeff(4), rational(127, 4725));
    assert_eq!(ahat_top_coeff(2), rational(-1, 1440));
    assert_eq!(ahat_top_coeff(4), rational(-1, 2419200));
    let bound = rational(32, 81);
    for m in 2..=50u32 {
        let d = d_coeff(m);
        assert!(d.is_positive(), "d_{m} not positive");
        assert!(d <= bound, "d_{m} exceeds 32/81");
    }
    println!("PASS [ 3/12] top coefficients: two routes agree, 0 < d_m <= 32/81");
}

#[test]
fn criterion_04_e8_form() {
    let g = e8_graph(2).unwrap();
    let m = g.intersection_matrix();
    let want = IntMatrix::from_i64_rows(&[
        &[2, 1, 0, 0, 0, 0, 0, 0],
        &[1, 2, 1, 0, 0, 0, 0, 0],
        &[0, 1, 2, 1, 0, 0, 0, 0],
        &[0, 0, 1, 2, 1, 0, 0, 0],
        &[0, 0, 0, 1, 2, 1, 0, 1],
        &[0, 0, 0, 0, 1, 2, 1, 0],
        &[0, 0, 0, 0, 0, 1, 2, 0],
        &[0, 0, 0, 0, 1, 0, 0, 2],
    ])
    .unwrap();
    assert_eq!(m, want, "E8 intersection matrix");
    assert_eq!(determinant(&m), BigInt::one());
    assert_eq!(cofactor_det(&m), BigInt::one(), "cofactor oracle");
    assert_eq!(signature(&m).unwrap(), 8);
    assert_eq!(bounds_homotopy_sphere(&g).code(), "bounds-homotopy-sphere");

    // non-examples exercise the other verdicts
    let lone = PlumbingGraph::new(2, vec![PlumbingVertex { id: 1, euler: 2 }], vec![]).unwrap();
    assert_eq!(bounds_homotopy_sphere(&lone).code(), "determinant-not-unimodular");
    let split = PlumbingGraph::new(
        2,
        vec![
            PlumbingVertex { id: 1, euler: 2 },
            PlumbingVertex { id: 2, euler: 2 },
        ],
        vec![],
    )
    .unwrap();
    assert_eq!(bounds_homotopy_sphere(&split).code(), "criterion-not-applicable");
    println!("PASS [ 4/12] E8 form: matrix, determinant 1 (two routes), signature 8, verdicts");
}

#[test]
fn criterion_05_bp_orders() {
    assert_eq!(bp_order(2).unwrap(), big(28));
    assert_eq!(bp_order(3).unwrap(), big(992));
    assert_eq!(bp_order(4).unwrap(), big(8128));
    assert_eq!(bp_order(5).unwrap(), big(261632));
    for m in 2..=40u32 {
        assert_eq!(
            bp_order(m).unwrap(),
            bp_order_alt(m).unwrap(),
            "the two closed forms for |bP| disagree at m = {m}"
        );
    }
    let w = build_w0(2).unwrap();
    assert_eq!(w.sigma, big(8) * bp_order(2).unwrap());
    assert_eq!(w.chi, &w.sigma + 2u32);
    assert!(bp_order(1).is_err(), "|bP_4| lies outside the stable range");
    println!("PASS [ 5/12] bP orders: 28, 992, 8128, 261632; both closed forms agree");
}

#[test]
fn criterion_06_lemma1() {
    for m in 2..=6u32 {
        let w = build_w0(m).unwrap();
        assert_eq!(
            w.pontrjagin_number(&p(&[m])),
            lemma1_pm(m).unwrap(),
            "p_{m}[W0] construction route vs closed form"
        );
    }
    assert_eq!(lemma1_pm(2).unwrap(), big(1440));
    assert_eq!(lemma1_pm(3).unwrap(), big(120960));
    assert_eq!(lemma1_pm(4).unwrap(), big(2419200));
    println!("PASS [ 6/12] p_m[W0^4m] by construction equals the closed form");
}

#[test]
fn criterion_07_m0_construction() {
    let table: [(u32, i64, i64); 4] = [
        (2, -247, 720),
        (3, 34209, -60480),
        (4, -572287, 1209600),
        (5, 48946689, -95800320),
    ];
    for (m, q, chi) in table {
        let rep = build_m0(m).unwrap();
        assert_eq!(rep.q, big(q), "q at m = {m}");
        assert_eq!(rep.result.chi, big(chi), "chi(M0) at m = {m}");
        assert_eq!(
            rep.result.chi,
            big(2) + &rep.result.sigma - big(2) * &rep.q,
            "chi = 2 + sigma - 2q at m = {m}"
        );
        assert_eq!(
            rep.result.chi.abs(),
            min_euler_char(m).unwrap(),
            "|chi(M0)| is the minimal Euler characteristic at m = {m}"
        );
        assert_eq!(
            o0_formula(&rep.result).unwrap(),
            BigInt::zero(),
            "o0(M0) vanishes at m = {m}"
        );
        assert!(rep.result.spin && rep.result.almost_parallelisable);
    }
    println!("PASS [ 7/12] M0 construction: q, chi, minimality, o0 = 0");
}

#[test]
fn criterion_08_obstruction_assembly() {
    assert_eq!(o0_formula(&build_w0(2).unwrap()).unwrap(), big(-247));
    assert_eq!(o0_formula(&build_w0(3).unwrap()).unwrap(), big(34209));
    assert_eq!(o0_formula(&build_w0(4).unwrap()).unwrap(), big(-572287));

    // a record with nontrivial decomposable Chern numbers on which the
    // unstable and stable formulas must agree
    let probe = {
        let mut chern = ChernData::new(4);
        chern.set_decomposable(1, 3, big(6)).unwrap();
        chern.set_decomposable(2, 2, big(4)).unwrap();
        chern.set_top_stable(Some(big(6)));
        let mut pn = PontrjaginNumbers::new(8).unwrap();
        pn.set(p(&[2]), big(4)).unwrap();
        VirtualManifold::new(8, big(8), big(0), Some(pn), Some(chern), false, false, "probe")
            .unwrap()
    };
    assert_eq!(o0_formula(&probe).unwrap(), BigInt::one());
    assert_eq!(o0_stable_formula(&probe).unwrap(), BigInt::one());

    // sphere neutrality and the connected-sum law
    let s = o_sphere(2).unwrap();
    assert_eq!(s.o0(), &BigInt::one());
    let x = ObstructionClass::from_parts(2, big(-41), Some(1)).unwrap();
    assert_eq!(o_connected_sum(&x, &s).unwrap(), x);
    let y = ObstructionClass::from_parts(2, big(5), Some(1)).unwrap();
    let xy = o_connected_sum(&x, &y).unwrap();
    assert_eq!(xy.o0(), &big(-37));
    assert_eq!(xy.o2(), Some(0));

    // reversal law against recomputation on the reversed record
    let w = build_w0(2).unwrap();
    let o = ObstructionClass::from_parts(2, o0_formula(&w).unwrap(), Some(0)).unwrap();
    assert_eq!(o_reverse(&w, &o).unwrap().o0(), &big(473));
    assert_eq!(o0_formula(&reverse_orientation(&w)).unwrap(), big(473));
    println!("PASS [ 8/12] obstruction assembly: W0 values, both formulas, sum and reversal laws");
}

#[test]
fn criterion_09_hp2_parity() {
    let hp2 = quaternionic_projective_plane();
    assert_eq!(
        evaluate(&l_poly(2), hp2.pontrjagin.as_ref().unwrap()).unwrap(),
        Rational::one(),
        "<L_2, [HP2]> = sigma"
    );
    assert_eq!(genus_ph_ahat(&hp2).unwrap(), rational(-1, 1));
    let parity = o2_vanishes(&hp2, true).unwrap();
    assert_eq!(parity.genus, big(-1));
    assert!(!parity.even, "the HP2 pairing must be odd");

    let m0 = build_m0(2).unwrap().result;
    assert_eq!(genus_ph_ahat(&m0).unwrap(), rational(-248, 1));
    assert!(o2_vanishes(&m0, true).unwrap().even);
    println!("PASS [ 9/12] parity: <ph.Ahat> is -1 on HP2 (odd) and -248 on M0^8 (even)");
}

#[test]
fn criterion_10_identity_496() {
    // weight-4 part of ph(rank 16) . Ahat with p1 = p3 = 0
    let mut ph = GradedPoly::zero();
    for c in pontrjagin_character(16, 4) {
        ph = &ph + &c;
    }
    let mut ahat = GradedPoly::one();
    for v in 1..=4u32 {
        ahat = &ahat + &ahat_poly(v);
    }
    let top = (&ph * &ahat).weight_component(4).kill_parts(&[1, 3]);
    assert_eq!(top.coeff(&p(&[4])), rational(-31, 151200));
    assert_eq!(top.coeff(&p(&[2, 2])), rational(403, 1814400));

    let m0 = build_m0(4).unwrap().result;
    assert_eq!(genus_ph_ahat(&m0).unwrap(), rational(-496, 1));
    assert!(o2_vanishes(&m0, true).unwrap().even);
    println!("PASS [10/12] weight-4 identity: -31/151200 p4 + 403/1814400 p2^2; pairing -496");
}

#[test]
fn criterion_11_realization() {
    let chi = big(720);
    let probes = [
        (1i64, (0i64, 0i64)),
        (0, (1, 0)),
        (5, (715, 1)),
        (720, (0, 1)),
        (-3, (4, 0)),
    ];
    for (t, (a, b)) in probes {
        assert_eq!(
            realize_o0(&chi, &big(t)).unwrap(),
            (big(a), big(b)),
            "realization of target {t}"
        );
    }
    let step = &chi - 1u32;
    for t in -100i64..=100 {
        let t = big(t);
        let (a, b) = realize_o0(&chi, &t).unwrap();
        assert!(!a.is_negative() && !b.is_negative());
        assert_eq!(&b * &step - (&a - 1u32), t, "the realization law fails");
        if b.is_positive() {
            // b is minimal: one fewer copy of the reversal cannot reach t
            let b1 = &b - 1u32;
            assert!(&b1 * &step + BigInt::one() < t);
        }
    }
    assert!(realize_o0(&BigInt::one(), &big(0)).is_err());
    println!("PASS [11/12] realization: frozen probes and the (a, b) law on [-100, 100]");
}

#[test]
fn criterion_12_property_suites() {
    let reports = verify::run_all();
    assert_eq!(reports.len(), 15);
    for report in &reports {
        assert!(
            report.passed(),
            "verify check `{}` failed: {:?}",
            report.id,
            report.lines.iter().filter(|l| !l.pass).collect::<Vec<_>>()
        );
    }
    println!("PASS [12/12] all {} named verification suites green", reports.len());
}
