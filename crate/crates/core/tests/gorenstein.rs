use acis::gorenstein::*;
use acis::groebner::Ideal;
use acis::polyarith::{
    gradient, parse, permutation_matrix, substitute_linear, Polynomial, Rational, Ring, VarSet,
};
use num_traits::Zero;

fn ring(names: &[&str]) -> Ring {
    VarSet::unit(names).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    parse(s, r).unwrap()
}

fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| p(r, s)).collect()
}

fn sigma(f: &Polynomial, mode: Mode) -> i64 {
    signature_of(
        f,
        SignatureOptions {
            mode,
            ..Default::default()
        },
    )
    .unwrap()
    .signature()
}

const QUARTIC: &str = "(x^2+y^2)^2+(3*x^2*y-y^3)*z";
const QUARTIC2: &str = "2*(x^2+y^2)^2+10*y*(3*x^2-y^2)*z+11*(x^2+y^2)*z^2-3*z^4";
const SEXTIC: &str = "(x^2+y^2)^3-4*x^2*y^2*z^2";
const QUINTIC: &str = "(x+y)*(x*u)^2+(u+v)*(x*v)^2+(x+u+v)*(y*u)^2+(y+u)*(y*v)^2";

#[test]
fn module_of_xy_x2() {
    let r = ring(&["x", "y"]);
    let m = jacobian_module(&r, &polys(&r, &["x*y", "x^2"]), ModuleOptions::default()).unwrap();
    assert_eq!(m.i.gb().polys(), polys(&r, &["x"]));
    assert_eq!(m.dim(), 1);
    assert_eq!(m.socle_degree, 2);
    assert_eq!(m.basis[0].rep, p(&r, "x"));
    assert!(m.oracle_checked);
    assert!(m.i.contains_ideal(&m.j));
}

#[test]
fn module_of_x2y_equals_xy_x2() {
    let r = ring(&["x", "y"]);
    let m = jacobian_module_of(&p(&r, "x^2*y"), ModuleOptions::default()).unwrap();
    assert_eq!(
        m.j.gb().polys(),
        Ideal::new(&r, polys(&r, &["x*y", "x^2"])).gb().polys()
    );
    assert_eq!(m.dim(), 1);
}

#[test]
fn sextic_module() {
    let r = ring(&["x", "y", "z"]);
    let m = jacobian_module_of(&p(&r, SEXTIC), ModuleOptions::default()).unwrap();
    assert_eq!(m.hilbert.to_string(), "2t^5+3t^6+2t^7");
    assert_eq!(m.dim(), 7);
    assert_eq!(m.socle_degree, 12);
    assert!(m.hilbert.is_symmetric_about(12));
}

#[test]
fn wrong_dimension_hints() {
    let r = ring(&["x", "y"]);
    match jacobian_module(&r, &polys(&r, &["x", "y"]), ModuleOptions::default()) {
        Err(acis::Error::WrongDimension { found: 0, hint, .. }) => {
            assert!(hint.contains("ev_levine"))
        }
        other => panic!("{other:?}"),
    }
    let r3 = ring(&["x", "y", "z"]);
    let e = jacobian_module_of(&p(&r3, "x^2*y*z"), ModuleOptions::default()).unwrap_err();
    assert!(e.to_string().contains("h0m_general"));
    assert!(jacobian_module(&r, &polys(&r, &["x*y+1", "x"]), ModuleOptions::default()).is_err());
}

#[test]
fn h0m_examples() {
    let r = ring(&["x", "y", "u", "v"]);
    let j = Ideal::new(&r, gradient(&p(&r, QUINTIC)));
    let h = h0m_general(&j, 10).unwrap();
    assert_eq!(h.hilbert.to_string(), "6t^4+13t^5+15t^6+9t^7");
    assert!(!h.symmetric);
    let r2 = ring(&["x", "y"]);
    let h = h0m_general(&Ideal::new(&r2, polys(&r2, &["x*y", "x^2"])), 6).unwrap();
    assert_eq!(h.hilbert.to_string(), "t");
    let h = h0m_general(&Ideal::new(&r2, polys(&r2, &["x", "y"])), 4).unwrap();
    assert_eq!(h.hilbert.to_string(), "1");
    assert!(h0m_general(&Ideal::new(&r2, polys(&r2, &["x^5", "y^5"])), 3).is_err());
}

#[test]
fn pairing_on_xy_x2() {
    let r = ring(&["x", "y"]);
    let m = jacobian_module(&r, &polys(&r, &["x*y", "x^2"]), ModuleOptions::default()).unwrap();
    let hom = pairing_homological(&m, 7).unwrap();
    let hes = pairing_hessian(&m).unwrap();
    // Residue convention: ψ(jac t) = dim P/(t) > 0; hessian: ℓ(h) = 1 with h = -2x^2.
    assert_eq!(hom.entries, vec![vec![Rational::from_integer((-1).into())]]);
    assert_eq!(
        hes.entries,
        vec![vec![Rational::new((-1).into(), 2.into())]]
    );
}

#[test]
fn sextic_needs_homological_mode() {
    let r = ring(&["x", "y", "z"]);
    let m = jacobian_module_of(&p(&r, SEXTIC), ModuleOptions::default()).unwrap();
    let c = conjecture_check(&m, None).unwrap();
    assert_eq!(c.hilbert_i2_ij.to_string(), "2t^10+2t^11");
    assert_eq!(c.hessian_degree, Some(12));
    assert!(!c.part3);
    match pairing_hessian(&m) {
        Err(acis::Error::SocleCheckFailed(e)) => {
            assert!(e.contains("2t^10+2t^11") && e.contains("degree 12"))
        }
        other => panic!("{other:?}"),
    }
    let rep = signature_of(&p(&r, SEXTIC), SignatureOptions::default()).unwrap();
    assert_eq!(rep.mode(), PairingMode::Homological);
    assert!(rep.fallback.is_some());
    assert_eq!(rep.rank(), 7);
    assert_eq!(rep.signature().abs(), 3);
    assert!(rep.gram.is_symmetric() && rep.gram.is_graded_antidiagonal(&rep.module));
}

#[test]
fn quartic_signatures_in_both_modes() {
    let r = ring(&["x", "y", "z"]);
    for (src, expected) in [(QUARTIC, -3), (QUARTIC2, -4)] {
        let f = p(&r, src);
        let opts = SignatureOptions {
            cross_check: true,
            ..Default::default()
        };
        let rep = signature_of(&f, opts).unwrap();
        assert_eq!(rep.mode(), PairingMode::Hessian);
        assert_eq!(rep.signature(), expected, "{src}");
        assert_eq!(rep.modes_agree(), Some(true));
        assert!(rep.charpoly_agrees);
        assert_eq!(rep.rank(), rep.module.dim());
        assert!(rep.gram.is_graded_antidiagonal(&rep.module));
    }
}

#[test]
fn modes_are_proportional() {
    let r = ring(&["x", "y", "z"]);
    for src in [QUARTIC, "(x^2-z^2)*(y^2-z^2)"] {
        let m = jacobian_module_of(&p(&r, src), ModuleOptions::default()).unwrap();
        let a = pairing_homological(&m, 3).unwrap();
        let b = pairing_hessian(&m).unwrap();
        let mut ratio: Option<Rational> = None;
        for (ra, rb) in a.entries.iter().zip(&b.entries) {
            for (x, y) in ra.iter().zip(rb) {
                assert_eq!(x.is_zero(), y.is_zero());
                if !x.is_zero() {
                    let q = y / x;
                    assert!(q > Rational::zero());
                    assert!(ratio.get_or_insert(q.clone()) == &q);
                }
            }
        }
        let c = conjecture_check(&m, Some(&a.entries)).unwrap();
        assert_eq!(c.factors, Some(true));
        assert!(c.holds());
    }
}

#[test]
fn sigma_properties() {
    let r2 = ring(&["x", "y"]);
    let rw = VarSet::weighted(&["x", "y", "z"], &[1, 2, 2]).unwrap();
    let x2y = sigma(&p(&r2, "x^2*y"), Mode::Auto);
    assert_eq!(x2y.abs(), 1);
    assert_eq!(sigma(&p(&r2, "-x^2*y"), Mode::Auto), x2y);
    // Thom-Sebastiani with σ(±z^2) = ±1.
    for mode in [Mode::Hessian, Mode::Homological] {
        assert_eq!(sigma(&p(&rw, "x^2*y+z^2"), mode), x2y);
        assert_eq!(sigma(&p(&rw, "x^2*y-z^2"), mode), -x2y);
        assert_eq!(sigma(&p(&rw, "-x^2*y-z^2"), mode), -x2y);
    }
}

#[test]
fn permutation_invariance() {
    let r = ring(&["x", "y", "z"]);
    let f = p(&r, QUARTIC);
    let base = sigma(&f, Mode::Auto);
    for perm in [[1, 0, 2], [2, 0, 1], [1, 2, 0]] {
        let g = substitute_linear(&f, &permutation_matrix(&perm)).unwrap();
        assert_eq!(sigma(&g, Mode::Auto), base);
        assert_eq!(sigma(&g, Mode::Homological), base);
    }
}

#[test]
fn ev_levine_examples() {
    let r = ring(&["x", "y"]);
    for (fs, expected, dim) in [
        (["2*x", "2*y"], 1, 1),
        (["2*x", "-2*y"], -1, 1),
        (["x^2", "y"], 0, 2),
    ] {
        let fs = polys(&r, &fs);
        let form = ev_levine(&fs).unwrap();
        assert_eq!(form.signature(), expected);
        assert_eq!(form.dim(), dim);
        assert_eq!(form.inertia.zero, 0);
        // The Jacobian determinant spans the socle.
        let j = Ideal::new(&r, fs.clone());
        assert!(!j.contains(&form.h));
        for i in 0..2 {
            assert!(j.contains(&(&form.h * &Polynomial::var(&r, i))));
        }
    }
    let fs = polys(&r, &["x^2", "y"]);
    let form = ev_levine(&fs).unwrap();
    let half = Rational::new(1.into(), 2.into());
    assert_eq!(
        form.gram,
        vec![
            vec![Rational::zero(), half.clone()],
            vec![half, Rational::zero()]
        ]
    );
    assert!(matches!(
        ev_levine(&polys(&r, &["x*y", "x^2"])),
        Err(acis::Error::NotZeroDimensional(_))
    ));
    assert!(matches!(
        ev_levine(&polys(&r, &["x-1", "y"])),
        Err(acis::Error::NotZeroDimensional(_))
    ));
}

#[test]
fn ev_levine_local_degree_of_linear_maps() {
    let r = ring(&["x", "y", "z"]);
    let cases = [
        (["x", "y", "z"], 1),
        (["y", "x", "z"], -1),
        (["x+y", "x-y", "z"], -1),
        (["x^3", "y", "z"], 1),
    ];
    for (fs, deg) in cases {
        assert_eq!(
            ev_levine(&polys(&r, &fs)).unwrap().signature(),
            deg,
            "{fs:?}"
        );
    }
}

#[test]
fn branch_counts() {
    let r = ring(&["x", "y"]);
    assert_eq!(real_branches(&polys(&r, &["x^2-y^2"])).unwrap(), 4);
    assert_eq!(real_branches(&polys(&r, &["x*y"])).unwrap(), 4);
    assert_eq!(real_branches(&polys(&r, &["x"])).unwrap(), 2);
    assert!(real_branches(&polys(&r, &["x^2+y^2"])).is_err());
    let r3 = ring(&["x", "y", "z"]);
    assert_eq!(real_branches(&polys(&r3, &["x", "y"])).unwrap(), 2);
}

#[test]
fn primitive_ideals() {
    let r = ring(&["x", "y"]);
    let i = Ideal::new(&r, polys(&r, &["x", "y"]));
    let prim = primitive_ideal_truncated(&i, 3).unwrap();
    let sq = i.power(2);
    for d in 0..=3 {
        let h = sq.hilbert(d, d).unwrap().value(d);
        let total = acis::polyarith::monomials_of_degree(r.weights(), d).len();
        assert_eq!(prim.piece(d).len(), total - h);
        assert!(prim.piece(d).iter().all(|f| sq.contains(f)));
    }
    let r3 = ring(&["x", "y", "z"]);
    let i = Ideal::new(&r3, polys(&r3, &["x*y", "y*z", "z*x"]));
    let prim = primitive_ideal_truncated(&i, 4).unwrap();
    let sq = i.power(2);
    assert_eq!(prim.piece(3).len(), 1);
    assert!(!sq.contains(&prim.piece(3)[0]));
    assert_eq!(prim.piece(3)[0].monic(), p(&r3, "x*y*z"));
    let i = Ideal::new(&r, polys(&r, &["x"]));
    let prim = primitive_ideal_truncated(&i, 2).unwrap();
    assert_eq!(prim.piece(2), &[p(&r, "x^2")]);
}

#[test]
fn extended_codimension() {
    let r = ring(&["x", "y", "z"]);
    let i = Ideal::new(&r, polys(&r, &["x", "y"]));
    // (∫I)_2 = (x^2, xy, y^2) meets (J_f)_2 in x^2 + y^2.
    let c = c_e(&p(&r, "x^2*z+y^2*z"), &i, 5).unwrap();
    assert_eq!(&c.per_degree[..3], &[0, 0, 2]);
    let c = c_e(&p(&r, "x^2+y^2"), &i, 4).unwrap();
    assert_eq!(c.value, 0);
    assert!(c.stable);
}

#[test]
fn pencil_of_equal_functions_is_constant() {
    let r = ring(&["x", "y", "z"]);
    let f = p(&r, QUARTIC);
    let ts: Vec<Rational> = [0, 1, 2, -3]
        .iter()
        .map(|&t| Rational::from_integer(t.into()))
        .collect();
    let out = pencil_signature(&f, &f, &ts, SignatureOptions::default()).unwrap();
    assert!(out.iter().all(|s| s.signature == Some(-3) && s.admissible));
    assert_eq!(constant_signature(&out), Some(-3));
}

#[test]
fn pencil_flags_a_jump_of_the_singular_locus() {
    let r = ring(&["x", "y", "z"]);
    let f = p(&r, "z^2*(x^2-y^2)+x^4+y^4");
    let g = p(&r, "z^2*(x^2-y^2)+x^4-x^2*y^2+2*y^4");
    let ts: Vec<Rational> = [0, 1, 2]
        .iter()
        .map(|&t| Rational::from_integer(t.into()))
        .collect();
    let out = pencil_signature(&f, &g, &ts, SignatureOptions::default()).unwrap();
    // At t = 2 the quartic part is x^2 (x^2 + y^2): a second singular line.
    assert_eq!(
        out.iter().map(|s| s.singular_degree).collect::<Vec<_>>(),
        vec![Some(1), Some(1), Some(2)]
    );
    assert!(!out[2].admissible);
    assert_eq!(constant_signature(&out), Some(-2));
}

#[test]
fn regular_sequences_are_reproducible() {
    let r = ring(&["x", "y", "z"]);
    let m = jacobian_module_of(&p(&r, QUARTIC), ModuleOptions::default()).unwrap();
    let k = m.j.colon_ideal(&m.i);
    let a = regular_sequence(&k, 11, 32).unwrap();
    let b = regular_sequence(&k, 11, 32).unwrap();
    assert_eq!(a, b);
    for i in 1..=3 {
        assert_eq!(
            Ideal::new(&r, a[..i].to_vec()).krull_dimension(),
            3 - i as i64
        );
    }
    let g1 = pairing_homological(&m, 11).unwrap();
    let g2 = pairing_homological(&m, 12).unwrap();
    assert_eq!(
        acis::quadform::signature_exact(&g1.entries).unwrap(),
        acis::quadform::signature_exact(&g2.entries).unwrap()
    );
}
