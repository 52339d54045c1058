use okamoto_algebra::{Matrix, RuleSet, RF};
use okamoto_painleve::harnad::{self, theta_map};
use okamoto_painleve::{stokes, w2, ChartRing, ChartState, Corner, HarnadParameters, MonodromyChart};

fn setup() -> (ChartRing, MonodromyChart) {
    let cr = ChartRing::new();
    let chart = MonodromyChart::build(&cr);
    (cr, chart)
}

#[test]
fn local_traces() {
    let (cr, chart) = setup();
    for (k, i) in cr.iota().iter().enumerate() {
        assert_eq!(chart.m[k].trace(), i + &i.recip().unwrap());
    }
}

#[test]
fn rescaled_triple_has_unit_eigenvalue() {
    let (cr, chart) = setup();
    let none = RuleSet::empty();
    for (m, q) in chart.hat(&cr).iter().zip(cr.q()) {
        assert!(m.charpoly(&none).has_spectrum(&[RF::one(), q], &none));
    }
}

#[test]
fn transformed_entries() {
    let (cr, chart) = setup();
    let rep = w2::realize(&cr, &chart, &Corner::standard(&cr)).unwrap();
    assert_eq!(
        rep.triple[0][(0, 1)],
        cr.e("i1^2*(1 + Z_G2 + Z_O2*Z_G2)/(Z_O2*Z_G2*(1 + Z_O2 + Z_O2*Z_B2))")
    );
    let none = RuleSet::empty();
    let nu_q2 = cr.e("i2^2/(Z_O2*Z_B2*Z_G2)");
    assert!(rep.triple[1].charpoly(&none).has_spectrum(&[RF::one(), nu_q2], &none));
    assert_eq!(rep.result.quotient_dim, 4);
}

#[test]
fn perturbed_corner_is_caught() {
    let (cr, chart) = setup();
    let mut corner = Corner::standard(&cr);
    corner.a = &corner.a + &RF::one();
    let rep = w2::realize(&cr, &chart, &corner).unwrap();
    let c = rep.checks.iter().find(|c| c.id == "tildeN-entrywise").unwrap();
    assert!(!c.pass);
    assert!(c.witness.as_deref().unwrap().contains("entry"));
    // the printed corner with Z_G2^{-1} in b fails too
    let mut printed = Corner::standard(&cr);
    printed.b = cr.e("-i1*i2*Z_G2^2*(1 + 1/Z_G2 + 1/(Z_O2*Z_G2))");
    let rep = w2::realize(&cr, &chart, &printed).unwrap();
    assert!(rep.checks.iter().any(|c| !c.pass));
}

#[test]
fn chord_change_and_involution() {
    let cr = ChartRing::new();
    let z = w2::zchange(&cr);
    assert_eq!(z[0], cr.e("(1 + Z_O2 + Z_O2*Z_B2)/(Z_B2*(1 + Z_G2 + Z_O2*Z_G2))"));
    let s = ChartState::reference(&cr);
    assert_eq!(s.w2().w2(), s);
    let prod = &(&z[0] * &z[1]) * &z[2];
    assert_eq!(prod, cr.cycle().recip().unwrap());
}

#[test]
fn chart_map_is_not_the_identity_on_the_rescaled_triple() {
    let (cr, chart) = setup();
    let hat = chart.hat(&cr);
    let mapped = hat[0].map(|x| w2::chart_map(&cr, x));
    assert_ne!(mapped, hat[0]);
}

#[test]
fn stokes_entry() {
    let (cr, chart) = setup();
    let rep = stokes::from_monodromy(&cr, &chart).unwrap();
    assert_eq!(rep.data.s2[(1, 0)], cr.e("i2^2*(1 + Z_O2) + Z_O2*Z_B2"));
}

#[test]
fn killing_factor_round_trip() {
    let cr = ChartRing::new();
    let none = RuleSet::empty();
    let (s1, s2) = stokes::expected(&cr);
    let p = s1.mul(&s2);
    let (u, l) = stokes::killing_factor(&p, &none).unwrap();
    assert_eq!((u, l), (s1, s2));
}

#[test]
fn v_entries() {
    let hp = HarnadParameters::new();
    let rep = harnad::dual_v(&hp).unwrap();
    let rules = &hp.conds;
    assert!(rules.equal(&rep.v[(0, 0)], &hp.e("-t1")));
    let v12 = hp.e("-(a2*b1 - a1*b2 + t1*a2/a1 + t2*a1/a2)/2");
    assert!(rules.equal(&rep.v[(0, 1)], &v12));
    let printed = hp.e("-(a3*b1 - a1*b3 - t1*a3/a1 + t3*a1/a3)/2");
    assert!(!rules.equal(&rep.v[(0, 2)], &printed));
}

#[test]
fn additive_output_is_two_dimensional() {
    let hp = HarnadParameters::new();
    let (out, _) = harnad::additive_w2(&hp).unwrap();
    assert_eq!((out.size(), out.len()), (2, 3));
}

#[test]
fn theta_map_is_involutive() {
    let hp = HarnadParameters::new();
    let th = [hp.e("t1"), hp.e("t2"), hp.e("t3"), hp.e("tinf")];
    assert_eq!(theta_map(&theta_map(&th)), th);
    assert_eq!(theta_map(&th)[0], hp.e("(t1 - t2 - t3 - tinf)/2"));
}

#[test]
fn parameter_map_is_involutive() {
    let cr = ChartRing::new();
    let nu = cr.var("tau0");
    let (q1, nu1) = w2::param_map(&cr.q(), &nu);
    let (q2, nu2) = w2::param_map(&q1, &nu1);
    assert_eq!((q2, nu2), (cr.q(), nu));
}

#[test]
fn stokes_shift_at_unit_tau_is_identity() {
    let (cr, chart) = setup();
    let rep = stokes::from_monodromy(&cr, &chart).unwrap();
    assert_eq!(rep.data.scaled(&RF::one()), rep.data);
    let prod = rep.data.scaled(&RF::int(3)).product();
    assert!(prod.equal_mod(&Matrix::identity(3), &cr.casimir()));
}
