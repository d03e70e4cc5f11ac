use acis::groebner::{syzygies, GroebnerBasis, Ideal, MonoOrder};
use acis::polyarith::{gradient, parse, Polynomial, Ring, VarSet};

fn ring(names: &[&str]) -> Ring {
    VarSet::unit(names).unwrap()
}

fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse(s, r).unwrap()).collect()
}

#[test]
fn buchberger_examples() {
    let r = ring(&["x", "y"]);
    let gb = GroebnerBasis::new(&r, &polys(&r, &["x*y", "x^2"]), MonoOrder::Grevlex).unwrap();
    assert_eq!(gb.polys(), polys(&r, &["x*y", "x^2"]));
    let gb = GroebnerBasis::new(&r, &polys(&r, &["x^2-y^2", "x*y"]), MonoOrder::Grevlex).unwrap();
    assert_eq!(gb.polys(), polys(&r, &["x*y", "x^2-y^2", "y^3"]));
    assert_eq!(
        gb.normal_form(&parse("x^2+x*y+y^2", &r).unwrap()),
        parse("2*y^2", &r).unwrap()
    );
}

#[test]
fn colon_and_saturation() {
    let r = ring(&["x", "y"]);
    let j = Ideal::new(&r, polys(&r, &["x*y", "x^2"]));
    let x = parse("x", &r).unwrap();
    assert_eq!(j.colon(&x), Ideal::new(&r, polys(&r, &["x", "y"])));
    assert_eq!(
        j.colon_ideal(&Ideal::maximal(&r)),
        Ideal::new(&r, vec![x.clone()])
    );
    assert_eq!(j.colon(&Polynomial::one(&r)), j);
    let (i, steps) = j.saturate_irrelevant();
    assert_eq!(i, Ideal::new(&r, vec![x]));
    assert_eq!(steps, 1);
    assert_eq!(j.krull_dimension(), 1);
}

#[test]
fn syzygy_examples() {
    let r = ring(&["x", "y"]);
    let s = syzygies(&r, &[0], &[polys(&r, &["x*y"]), polys(&r, &["x^2"])]).unwrap();
    assert_eq!(s.generators.len(), 1);
    let g = &s.generators[0];
    let x = parse("x", &r).unwrap();
    let y = parse("y", &r).unwrap();
    assert!(g == &vec![x.clone(), -&y] || g == &vec![-&x, y.clone()]);
    let s = syzygies(&r, &[0], &[polys(&r, &["x"])]).unwrap();
    assert!(s.generators.is_empty());
}

#[test]
fn sextic_saturation() {
    let r = ring(&["x", "y", "z"]);
    let f = parse("(x^2+y^2)^3-4*x^2*y^2*z^2", &r).unwrap();
    let j = Ideal::new(&r, gradient(&f));
    assert_eq!(j.krull_dimension(), 1);
    let t = std::time::Instant::now();
    let (i, steps) = j.saturate_irrelevant();
    eprintln!("saturation {:?} steps {steps}", t.elapsed());
    let h = i.quotient_hilbert(&j, 0, 14).unwrap();
    assert_eq!(h.to_string(), "2t^5+3t^6+2t^7");
}

#[test]
fn oracle_agrees_on_quartic() {
    use acis::groebner::{default_bound, degreewise_oracle, OracleOptions};
    let r = ring(&["x", "y", "z"]);
    let f = parse("(x^2+y^2)^2+(3*x^2*y-y^3)*z", &r).unwrap();
    let g = gradient(&f);
    let j = Ideal::new(&r, g.clone());
    let d = default_bound(&r, &g);
    assert_eq!(d, 8);
    let o = degreewise_oracle(&r, &g, d, OracleOptions::default()).unwrap();
    assert!(o.quotient.agrees_with(&j.hilbert(0, d).unwrap()));
    let (i, _) = j.saturate_irrelevant();
    let m = i.quotient_hilbert(&j, 0, d).unwrap();
    o.require_stable(0, 6).unwrap();
    eprintln!(
        "oracle module {} gb module {} stable {:?}",
        o.module, m, o.stable
    );
    for k in 2..=3 {
        assert_eq!(o.koszul[k].total(), 0);
    }
    assert!(o.module.window(0, 6).agrees_with(&m.window(0, 6)));
}
