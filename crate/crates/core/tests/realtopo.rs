use acis::gorenstein::SignatureOptions;
use acis::polyarith::{parse, rat, ratio, substitute_linear, Polynomial, Rational, VarSet};
use acis::realtopo::*;
use proptest::prelude::*;

fn poly(vars: &[&str], s: &str) -> Polynomial {
    parse(s, &VarSet::unit(vars).unwrap()).unwrap()
}

fn plane(s: &str) -> Polynomial {
    poly(&["x", "y"], s)
}

fn form(s: &str) -> Polynomial {
    poly(&["x", "y", "z"], s)
}

const QUARTIC_A: &str = "(x^2+y^2)^2+(3*x^2*y-y^3)*z";
const QUARTIC_B: &str = "2*(x^2+y^2)^2+10*y*(3*x^2-y^2)*z+11*(x^2+y^2)*z^2-3*z^4";

#[test]
fn sturm_counts() {
    let p = UPoly::from_ints(&[-2, 0, 1]);
    assert_eq!(sturm_count(&p, &Bound::At(rat(0)), &Bound::At(rat(2))), 1);
    let q = UPoly::from_ints(&[1, -3, 0, 1]);
    assert_eq!(sturm_count(&q, &Bound::NegInf, &Bound::PosInf), 3);
    assert!(isolate_roots(&UPoly::from_ints(&[1, 0, 1])).is_empty());
}

#[test]
fn isolation_is_disjoint_and_exact_roots_are_found() {
    // (x - 1/2)(x^2 - 2)(x + 3)^2
    let p = &(&UPoly::linear_root(&ratio(1, 2)) * &UPoly::from_ints(&[-2, 0, 1]))
        * &UPoly::from_ints(&[9, 6, 1]);
    let roots = isolate_roots(&p);
    assert_eq!(roots.len(), 4);
    assert_eq!(roots[0].as_rational(), Some(&rat(-3)));
    assert!(roots.windows(2).all(|w| w[0].hi <= w[1].lo));
    let mut r = roots[3].clone();
    r.refine_to(&ratio(1, 1000));
    assert!((r.to_f64() - 2f64.sqrt()).abs() < 1e-3);
}

#[test]
fn circle_cad() {
    let cad = cad_plane(&plane("x^2+y^2-1")).unwrap();
    assert_eq!(cad.cells.len(), 13);
    assert_eq!(cad.euler_total(), 1);
    assert_eq!(cad.euler_c(-1), 1);
    assert_eq!(cad.euler_c(0), 0);
}

#[test]
fn axes_cad() {
    let cad = cad_plane(&plane("x*y")).unwrap();
    assert_eq!(cad.euler_c(1), 2);
    assert_eq!(cad.euler_c(-1), 2);
    assert_eq!(cad.euler_total(), 1);
}

#[test]
fn constant_cad() {
    let cad = cad_plane(&plane("1")).unwrap();
    assert_eq!(cad.cells.len(), 1);
    assert_eq!((cad.cells[0].dim, cad.cells[0].sign), (2, 1));
}

#[test]
fn vertical_lines_and_multiple_components() {
    // A vertical line through an algebraic point and a doubled circle.
    let cad = cad_plane(&plane("(x^2-2)*(x^2+y^2-9)^2")).unwrap();
    assert_eq!(cad.euler_total(), 1);
    // Two lines (-1 each) and a circle (0), glued at four points.
    assert_eq!(cad.euler_c(0), -6);
}

#[test]
fn euler_of_the_quartics() {
    let a = euler_rp2(&form(QUARTIC_A)).unwrap();
    assert_eq!((a.chi_plus, a.chi_minus), (0, 3));
    let b = euler_rp2(&form(QUARTIC_B)).unwrap();
    assert_eq!((b.chi_plus, b.chi_minus), (0, 4));
}

#[test]
fn euler_trivial_cases() {
    let r = euler_rp2(&form("x^2+y^2+z^2")).unwrap();
    assert_eq!((r.chi_plus, r.chi_minus, r.chi_curve), (1, 0, 0));
    let r = euler_rp2(&form("x^2+y^2-z^2")).unwrap();
    assert_eq!((r.chi_plus, r.chi_minus, r.chi_curve), (0, 1, 0));
    let r = euler_rp2(&form("(x^2-z^2)*(y^2-z^2)")).unwrap();
    assert_eq!((r.chi_plus, r.chi_minus), (3, 4));
    let r = euler_rp2(&form("z^2*(x^2+y^2-z^2)")).unwrap();
    assert!(r.line_at_infinity_on_curve);
    assert!(matches!(
        euler_rp2(&form("x^3")),
        Err(acis::error::Error::OddDegree(3))
    ));
    assert!(euler_rp2(&form("0")).is_err());
}

#[test]
fn euler_is_invariant_under_unimodular_maps() {
    let f = form(QUARTIC_B);
    let maps: [[[i64; 3]; 3]; 3] = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[1, 0, 1], [0, 1, -1], [0, 0, 1]],
    ];
    let base = euler_rp2(&f).unwrap();
    for m in maps {
        let a: Vec<Vec<Rational>> = m
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        let g = substitute_linear(&f, &a).unwrap();
        let r = euler_rp2(&g).unwrap();
        assert_eq!((r.chi_plus, r.chi_minus), (base.chi_plus, base.chi_minus));
    }
}

#[test]
fn verify_on_the_quartics() {
    for s in [QUARTIC_A, QUARTIC_B] {
        let r = verify_signature_theorem(&form(s), SignatureOptions::default()).unwrap();
        assert!(r.holds, "{s}: {r:?}");
    }
}

#[test]
fn verify_on_smooth_and_nodal_curves() {
    let r = verify_signature_theorem(&form("x^2+y^2-z^2"), SignatureOptions::default()).unwrap();
    assert_eq!(r.curve, CurveType::Smooth);
    assert!(r.holds);
    let r = verify_signature_theorem(&form("(x^2-z^2)*(y^2-z^2)"), SignatureOptions::default())
        .unwrap();
    assert_eq!(r.curve, CurveType::Nodal);
    assert!(r.warnings.is_empty());
    assert_eq!(r.sigma, -1);
    assert!(r.holds);
}

#[test]
fn degenerate_input_takes_the_warning_path() {
    let f = form("(x^2+y^2-z^2)*x*(x-z)");
    assert_eq!(curve_type(&f), CurveType::Singular);
    assert_eq!(curve_type(&form("(x^2+y^2-z^2)^2")), CurveType::NonReduced);
    let r = verify_signature_theorem(&f, SignatureOptions::default()).unwrap();
    assert!(!r.warnings.is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cells_partition_the_plane(c in proptest::collection::vec(-3i64..=3, 6)) {
        let f = plane(&format!(
            "{}*x^2+{}*x*y+{}*y^2+{}*x+{}*y+{}",
            c[0], c[1], c[2], c[3], c[4], c[5]
        ));
        prop_assume!(!f.is_zero());
        let cad = cad_plane(&f).unwrap();
        prop_assert_eq!(cad.euler_total(), 1);
    }

    #[test]
    fn samples_have_the_recorded_sign(c in proptest::collection::vec(-2i64..=2, 6)) {
        let f = plane(&format!(
            "{}*x^2*y+{}*y^3+{}*x^2+{}*y^2+{}*x+{}",
            c[0], c[1], c[2], c[3], c[4], c[5]
        ));
        prop_assume!(!f.is_zero());
        let cad = cad_plane(&f).unwrap();
        for cell in &cad.cells {
            if let (Some(x), Some(y)) = (cell.x.as_rational(), cell.y.as_rational()) {
                let v = f.eval(&[x.clone(), y.clone()]);
                let s = if v > rat(0) { 1 } else if v < rat(0) { -1 } else { 0 };
                prop_assert_eq!(s, cell.sign);
            }
        }
    }

    #[test]
    fn quartic_strata_add_up(c in proptest::collection::vec(-2i64..=2, 4)) {
        let f = form(&format!(
            "(x^2+y^2-z^2)*({}*x^2+{}*y^2+{}*x*z+{}*z^2)",
            c[0], c[1], c[2], c[3]
        ));
        prop_assume!(!f.is_zero());
        let r = euler_rp2(&f).unwrap();
        prop_assert_eq!(r.chi_plus + r.chi_minus + r.chi_curve, 1);
    }
}

#[test]
fn line_cubic_positions() {
    let mut seen = Vec::new();
    for t in [rat(-2), ratio(-1, 2), rat(0), ratio(1, 2), rat(2)] {
        let m = line_cubic(&t);
        let r = verify_signature_theorem(&m.form, SignatureOptions::default()).unwrap();
        assert!(r.holds, "{}: {r:?}", m.label);
        assert_eq!(r.curve, CurveType::Nodal);
        seen.push(r.sigma);
    }
    assert_eq!(seen, vec![-2, 0, 0, 0, 2]);
}

#[test]
fn two_circle_positions() {
    let sigmas: Vec<i64> = two_conics()
        .iter()
        .map(|m| {
            let r = verify_signature_theorem(&m.form, SignatureOptions::default()).unwrap();
            assert!(r.holds, "{}: {r:?}", m.label);
            r.sigma
        })
        .collect();
    assert_eq!(sigmas, vec![1, 0, -1, -2, -3]);
}

#[test]
fn pictures_are_deterministic() {
    let f = plane("(x^2+y^2-1)*(x-1/2)");
    let w = Window::square(2);
    let a = curve_picture(&f, &w, 40).unwrap();
    assert_eq!(a.verticals.len(), 1);
    assert!(a.arcs.len() >= 4);
    let svg = a.to_svg(&w, 200);
    assert_eq!(svg, curve_picture(&f, &w, 40).unwrap().to_svg(&w, 200));
    assert!(svg.starts_with("<svg"));
}
