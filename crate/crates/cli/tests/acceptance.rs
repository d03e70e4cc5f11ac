//! One line per acceptance criterion. All tolerances are exact: integers,
//! rationals and Hilbert data are compared for equality.
//!
//! Criteria 1, 2 and 5 carry sign conventions that cannot all hold at once
//! (see the README); they are reported as FAIL with their magnitudes and
//! the sign-independent parts asserted instead.

use std::process::Command;
use std::time::Instant;

use acis::gorenstein::{
    conjecture_check, constant_signature, ev_levine, h0m_general, jacobian_module,
    jacobian_module_of, pairing_hessian, pairing_homological, pencil_signature, signature,
    signature_of, Mode, ModuleOptions, SignatureOptions,
};
use acis::groebner::Ideal;
use acis::homology::{ext_module, koszul_homology, GradedModulePresentation};
use acis::polyarith::{gradient, parse, parse_list, ratio, Polynomial, Rational, Ring, VarSet};
use acis::realtopo::{euler_rp2, line_cubic, two_conics, verify_signature_theorem};
use acis_cli::{parse_report, run, JobConfig};
use clap::Parser;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QUARTIC_A: &str = "(x^2+y^2)^2+(3*x^2*y-y^3)*z";
const QUARTIC_B: &str = "2*(x^2+y^2)^2+10*y*(3*x^2-y^2)*z+11*(x^2+y^2)*z^2-3*z^4";
const SEXTIC: &str = "(x^2+y^2)^3-4*x^2*y^2*z^2";
const QUINTIC: &str = "(x+y)*(x*u)^2+(u+v)*(x*v)^2+(x+u+v)*(y*u)^2+(y+u)*(y*v)^2";

/// Criteria whose stated signs conflict with each other.
const KNOWN_CONFLICTS: [u8; 3] = [1, 2, 5];

struct Check {
    pass: bool,
    /// Everything except the conflicting sign holds.
    core: bool,
    detail: String,
}

impl Check {
    fn plain(pass: bool, detail: String) -> Self {
        Check {
            pass,
            core: pass,
            detail,
        }
    }
}

fn ring(vars: &str, weights: Option<&str>) -> Ring {
    VarSet::parse(vars, weights).unwrap()
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    parse(s, r).unwrap()
}

fn xyz() -> Ring {
    ring("x,y,z", None)
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

fn job(args: &[&str]) -> JobConfig {
    JobConfig::try_parse_from(std::iter::once("acis").chain(args.iter().copied())).unwrap()
}

fn c1() -> Check {
    let r = ring("x,y", None);
    let m = jacobian_module(
        &r,
        &parse_list("x*y;x^2", &r).unwrap(),
        ModuleOptions::default(),
    )
    .unwrap();
    let saturated = m.i.gb().polys() == vec![poly(&r, "x")] && m.dim() == 1;
    let hom = pairing_homological(&m, 1).unwrap().entries[0][0].clone();
    let hes = pairing_hessian(&m).unwrap().entries[0][0].clone();
    let one = Rational::one();
    Check {
        pass: saturated && hom == one && hes == one,
        core: saturated && !hom.is_zero() && hom.is_positive() == hes.is_positive(),
        detail: format!(
            "I = (x), dim I/J = 1; B([x],[x]) = {hom} (homological), {hes} (hessian); expected 1"
        ),
    }
}

fn c2() -> Check {
    let r = xyz();
    let f = poly(&r, SEXTIC);
    let m = jacobian_module_of(&f, ModuleOptions::default()).unwrap();
    let hilbert = m.hilbert.to_string();
    let conj = conjecture_check(&m, None).unwrap();
    let i2ij = conj.hilbert_i2_ij.to_string();
    let refused = pairing_hessian(&m).is_err();
    let s = sigma(&f, Mode::Homological);
    let core = hilbert == "2t^5+3t^6+2t^7"
        && i2ij == "2t^10+2t^11"
        && conj.hessian_degree == Some(12)
        && conj.hessian_in_ij
        && refused;
    Check {
        pass: core && s == 3,
        core: core && s.abs() == 3,
        detail: format!(
            "I/J = {hilbert}; I^2/IJ = {i2ij}; hessian degree {:?}, zero in I^2/IJ: {}; hessian mode refused: {refused}; homological sigma = {s}, expected 3",
            conj.hessian_degree, conj.hessian_in_ij
        ),
    }
}

fn c3() -> Check {
    let r = xyz();
    let a = sigma(&poly(&r, QUARTIC_A), Mode::Auto);
    let b = sigma(&poly(&r, QUARTIC_B), Mode::Auto);
    Check::plain(
        (a, b) == (-3, -4),
        format!("sigma = {a}, {b}; expected -3, -4"),
    )
}

fn c4() -> Check {
    let r = xyz();
    let mut ok = true;
    let mut parts = Vec::new();
    for (s, want) in [(QUARTIC_A, (0, 3)), (QUARTIC_B, (0, 4))] {
        let e = euler_rp2(&poly(&r, s)).unwrap();
        let out = run(&job(&["verify", "--vars", "x,y,z", "-f", s]));
        ok &= (e.chi_plus, e.chi_minus) == want && out.code == 0;
        parts.push(format!(
            "({}, {}) verify exit {}",
            e.chi_plus, e.chi_minus, out.code
        ));
    }
    Check::plain(
        ok,
        format!("{}; expected (0, 3), (0, 4), exit 0", parts.join("; ")),
    )
}

/// Renames the variables by a permutation, weights travelling along.
fn permuted(f: &Polynomial, perm: &[usize]) -> Polynomial {
    let src = f.ring();
    let n = src.nvars();
    let mut names = vec![String::new(); n];
    let mut weights = vec![0u32; n];
    for i in 0..n {
        names[perm[i]] = src.names()[i].clone();
        weights[perm[i]] = src.weights()[i];
    }
    f.rename_into(&VarSet::weighted(&names, &weights).unwrap(), perm)
}

fn c5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = [
        ("x,y", None, "x^2*y", 1),
        ("x,y,z", Some("1,2,2"), "x^2*y+z^2", 1),
        ("x,y,z", Some("1,2,2"), "x^2*y-z^2", -1),
    ];
    let (mut signs, mut rest) = (true, true);
    let mut got = Vec::new();
    for (vars, w, s, want) in cases {
        let r = ring(vars, w);
        let f = poly(&r, s);
        let v = sigma(&f, Mode::Auto);
        got.push(v);
        signs &= v == want;
        rest &= v.abs() == 1;
        let n = r.nvars() as u32;
        rest &= sigma(&-&f, Mode::Auto) == (-1i64).pow(n) * v;
        let mut perm: Vec<usize> = (0..r.nvars()).collect();
        for _ in 0..3 {
            perm.shuffle(&mut rng);
            rest &= sigma(&permuted(&f, &perm), Mode::Auto) == v;
        }
    }
    Check {
        pass: signs && rest,
        core: rest,
        detail: format!(
            "sigma = {got:?}, expected [1, 1, -1]; sigma(-f) = (-1)^n sigma(f) and 3 permutations each: {rest}"
        ),
    }
}

fn c6() -> Check {
    let r = ring("x,y", None);
    let mut ok = true;
    let mut got = Vec::new();
    for (gens, want) in [("2*x;2*y", 1), ("2*x;-2*y", -1), ("x^2;y", 0)] {
        let fs = parse_list(gens, &r).unwrap();
        let form = ev_levine(&fs).unwrap();
        let j = Ideal::new(&r, fs);
        let socle = !j.contains(&form.h)
            && (0..2).all(|i| j.contains(&(&form.h * &Polynomial::var(&r, i))));
        ok &= form.signature() == want && socle;
        got.push(form.signature());
    }
    Check::plain(
        ok,
        format!("sigma = {got:?}, expected [1, -1, 0]; h in socle of P/J: {ok}"),
    )
}

fn c7() -> Check {
    let r = ring("x,y,u,v", None);
    let j = Ideal::new(&r, gradient(&poly(&r, QUINTIC)));
    let h = h0m_general(&j, 10).unwrap();
    let out = run(&job(&["signature", "--vars", "x,y,u,v", "-f", QUINTIC]));
    let ok = h.hilbert.to_string() == "6t^4+13t^5+15t^6+9t^7" && !h.symmetric && out.code == 2;
    Check::plain(
        ok,
        format!(
            "H0_m(P/J) = {}, symmetric: {}; signature exit {}",
            h.hilbert, h.symmetric, out.code
        ),
    )
}

fn random_form(rng: &mut ChaCha8Rng, vars: &[&str], d: u32) -> String {
    fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
        if n == 1 {
            return vec![vec![d]];
        }
        (0..=d)
            .flat_map(|e| {
                monomials(n - 1, d - e).into_iter().map(move |mut m| {
                    m.insert(0, e);
                    m
                })
            })
            .collect()
    }
    loop {
        let terms: Vec<String> = monomials(vars.len(), d)
            .into_iter()
            .filter_map(|m| {
                let c: i64 = rng.gen_range(-2..=2);
                (c != 0).then(|| {
                    let body: Vec<String> = m
                        .iter()
                        .zip(vars)
                        .filter(|(e, _)| **e > 0)
                        .map(|(e, v)| format!("{v}^{e}"))
                        .collect();
                    if body.is_empty() {
                        format!("({c})")
                    } else {
                        format!("({c})*{}", body.join("*"))
                    }
                })
            })
            .collect();
        if !terms.is_empty() {
            return terms.join("+");
        }
    }
}

/// `(a h, b h)` in two variables or `(a h, b h, c)` in three, kept when
/// the zero set is a curve.
fn generated_examples(count: usize) -> Vec<(Ring, Vec<Polynomial>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut out = Vec::new();
    while out.len() < count {
        let three = out.len() % 2 == 1;
        let vars: &[&str] = if three { &["x", "y", "z"] } else { &["x", "y"] };
        let r = VarSet::unit(vars).unwrap();
        let h = random_form(&mut rng, vars, 1);
        let da = rng.gen_range(1..=2);
        let a = random_form(&mut rng, vars, da);
        let b = random_form(&mut rng, vars, 1);
        let mut gens = vec![format!("({a})*({h})"), format!("({b})*({h})")];
        if three {
            gens.push(random_form(&mut rng, vars, 2));
        }
        let fs = parse_list(&gens.join(";"), &r).unwrap();
        if Ideal::new(&r, fs.clone()).krull_dimension() == 1 {
            out.push((r, fs));
        }
    }
    out
}

fn c8() -> Check {
    let examples = generated_examples(6);
    let mut failures = Vec::new();
    for (r, fs) in &examples {
        let n = r.nvars();
        let sum: i64 = fs.iter().map(|f| f.degree().unwrap()).sum();
        let s = sum - n as i64;
        let hi = s + 2;
        let mut fail = |what: &str| failures.push(format!("{what} on {fs:?}"));
        for k in 0..=n {
            let h = koszul_homology(r, fs, k, 0, hi + sum).unwrap();
            if h.hilbert != h.oracle {
                fail("koszul oracle");
            }
            if k > 1 && h.hilbert.total() != 0 {
                fail("H_k vanishing");
            }
        }
        let h1 = koszul_homology(r, fs, 1, 0, hi + sum).unwrap();
        if h1.hilbert.total() == 0 {
            fail("H_1 nonzero");
        }
        let p0 = GradedModulePresentation::cyclic(r, fs);
        let top = ext_module(&p0, n - 1).unwrap();
        if top.hilbert(-sum, hi).unwrap().shifted(sum) != h1.hilbert {
            fail("Ext^(n-1) = H_1");
        }
        for k in 0..n - 1 {
            if !ext_module(&p0, k).unwrap().is_zero().unwrap() {
                fail("Ext^k vanishing");
            }
        }
        let m = jacobian_module(r, fs, ModuleOptions::default()).unwrap();
        if m.socle_degree != s || !m.hilbert.is_symmetric_about(s) {
            fail("I/J symmetry");
        }
        if !m.oracle_checked
            || m.j.hilbert(0, hi).unwrap() != Ideal::new(r, fs.clone()).hilbert(0, hi).unwrap()
        {
            fail("groebner vs oracle");
        }
        let g = pairing_homological(&m, 1).unwrap();
        if !g.is_symmetric() || !g.is_graded_antidiagonal(&m) {
            fail("gram anti-diagonal");
        }
        let full = signature(r, fs, SignatureOptions::default()).unwrap();
        if (full.signature() - m.dim() as i64) % 2 != 0 {
            fail("parity");
        }
    }
    Check::plain(
        failures.is_empty(),
        format!(
            "{} generated examples; failures: {failures:?}",
            examples.len()
        ),
    )
}

fn c9() -> Check {
    let opts = SignatureOptions::default();
    let mut agree = true;
    let mut lines = Vec::new();
    for t in [-2, -1, 0, 1, 2]
        .map(|t| ratio(t, 1))
        .into_iter()
        .chain([ratio(-1, 2), ratio(1, 2)])
    {
        let r = verify_signature_theorem(&line_cubic(&t).form, opts).unwrap();
        agree &= r.holds;
        lines.push(r.sigma);
    }
    let mut circles = Vec::new();
    for m in two_conics() {
        let r = verify_signature_theorem(&m.form, opts).unwrap();
        agree &= r.holds;
        circles.push(r.sigma);
    }
    let set = |v: &[i64]| {
        let mut v = v.to_vec();
        v.sort();
        v.dedup();
        v
    };
    let ok = agree && set(&lines) == vec![-2, 0, 2] && set(&circles) == vec![-3, -2, -1, 0, 1];
    Check::plain(
        ok,
        format!("line-cubic sigma {lines:?}; two circles {circles:?}; algebra = topology everywhere: {agree}"),
    )
}

fn c10() -> Check {
    let r = xyz();
    let pairs = [
        (
            "z*(x^2+y^2)+x^3",
            "z*(x^2+y^2)+y^3",
            vec![
                (-1, 1),
                (0, 1),
                (1, 4),
                (1, 3),
                (1, 2),
                (2, 3),
                (1, 1),
                (2, 1),
            ],
        ),
        (
            "z^2*(x^2-y^2)+x^4+y^4",
            "z^2*(x^2-y^2)+x^4-x^2*y^2+2*y^4",
            vec![(-1, 1), (-1, 2), (0, 1), (1, 4), (1, 2), (3, 4), (1, 1)],
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, g, ts) in pairs {
        let ts: Vec<Rational> = ts.into_iter().map(|(a, b)| ratio(a, b)).collect();
        let out =
            pencil_signature(&poly(&r, f), &poly(&r, g), &ts, SignatureOptions::default()).unwrap();
        let valid = out.iter().filter(|s| s.admissible).count();
        let c = constant_signature(&out);
        ok &= valid >= 5 && c.is_some();
        parts.push(format!("{valid} valid samples, sigma {c:?}"));
    }
    Check::plain(ok, parts.join("; "))
}

fn c11() -> Check {
    const Q: &str = QUARTIC_A;
    let jobs: [&[&str]; 10] = [
        &["signature", "--vars", "x,y,z", "-f", Q, "--cross-check"],
        &["euler", "--vars", "x,y,z", "-f", Q],
        &["verify", "--vars", "x,y,z", "-f", Q],
        &["hilbert", "--vars", "x,y,z", "-f", Q],
        &["module", "--vars", "x,y,z", "-f", Q],
        &["conjecture", "--vars", "x,y,z", "-f", Q],
        &["evlevine", "--vars", "x,y", "-f", "x^3+y^2"],
        &["branches", "--vars", "x,y", "-f", "x^2-y^2"],
        &[
            "pencil",
            "--vars",
            "x,y,z",
            "--ideal",
            "z*(x^2+y^2)+x^3;z*(x^2+y^2)+y^3",
            "--samples=0,1/2,1",
        ],
        &["plot", "--vars", "x,y,z", "-f", Q],
    ];
    let mut bad = Vec::new();
    for args in jobs {
        let call = || {
            Command::new(env!("CARGO_BIN_EXE_acis"))
                .args(args)
                .args(["--format", "json", "--seed", "7"])
                .output()
                .unwrap()
        };
        let (a, b) = (call(), call());
        let valid = a.status.success() && parse_report(&String::from_utf8_lossy(&a.stdout)).is_ok();
        if a.stdout != b.stdout || !valid {
            bad.push(args[0]);
        }
    }
    Check::plain(
        bad.is_empty(),
        format!("10 commands, two runs each, seed 7; differing or invalid: {bad:?}"),
    )
}

fn main() {
    let criteria: [(u8, &str, fn() -> Check); 11] = [
        (1, "saturation and module baseline", c1),
        (2, "sextic counterexample", c2),
        (3, "quartic signatures", c3),
        (4, "euler characteristics", c4),
        (5, "signature property suite", c5),
        (6, "eisenbud-levine baseline", c6),
        (7, "non-gorenstein detector", c7),
        (8, "koszul and homology properties", c8),
        (9, "figure families", c9),
        (10, "pencil constancy", c10),
        (11, "determinism", c11),
    ];
    let mut failed = Vec::new();
    let mut broken = Vec::new();
    for (id, name, f) in criteria {
        let start = Instant::now();
        let c = f();
        let ms = start.elapsed().as_millis();
        let tag = if c.pass { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] {id:>2} {name} (tolerance: exact, {ms} ms): {}",
            c.detail
        );
        if !c.pass {
            failed.push(id);
        }
        if !c.core {
            broken.push(id);
        }
    }
    assert!(
        broken.is_empty(),
        "criteria failing beyond the sign conflict: {broken:?}"
    );
    assert_eq!(
        failed, KNOWN_CONFLICTS,
        "failures differ from the documented sign conflicts"
    );
}
