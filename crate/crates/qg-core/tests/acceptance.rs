//! Acceptance suite: each test covers one top-level criterion and prints a
//! single pass/fail line (run with `--nocapture` to see them all).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use qg_core::corep::{mor_space, Corep};
use qg_core::hopf::{builtin, make_antisym_e, make_sigma_n, Builtin, Presentation, QPoly};
use qg_core::linalg::Mat;
use qg_core::report::CheckReport;
use qg_core::scalar::QScalar;
use qg_core::sphere::{c_special, check_u1_equivalence, sphere, sphere_at_q, CParam};
use qg_core::{haar, hecke, lorentz, spin};

fn verdict(name: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {name}{}", if detail.is_empty() { String::new() } else { format!(": {detail}") });
    assert!(pass, "{name}: {detail}");
}

fn report_verdict(name: &str, rep: &CheckReport) {
    let detail = rep
        .first_failure()
        .map(|it| {
            format!(
                "{}{}",
                it.name,
                it.witness
                    .as_deref()
                    .map(|w| format!(" ({w})"))
                    .unwrap_or_default()
            )
        })
        .unwrap_or_default();
    verdict(name, rep.all_pass(), &detail);
}

fn arc(b: Builtin) -> Arc<Presentation> {
    Arc::new(builtin(b).unwrap())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn criterion_01_slq2_confluence_and_dimensions() {
    let p = arc(Builtin::Slq2);
    let rep = p.check_confluence(5, Some(&[1, 5, 14, 30, 55, 91]));
    report_verdict("1. slq2 confluence + dimensions 1,5,14,30,55,91", &rep);
}

#[test]
fn criterion_02_hopf_axioms_all_algebras() {
    let mut rep = CheckReport::new("Hopf axioms");
    for b in [Builtin::Slq2, Builtin::SlT12, Builtin::SlqN(3)] {
        let p = builtin(b).unwrap();
        let sub = p.check_hopf_axioms(3);
        rep.items.extend(sub.items);
    }
    for b in [Builtin::Suq2, Builtin::Suq11, Builtin::Slq2R] {
        let p = builtin(b).unwrap();
        let sub = p.check_hopf_axioms(2);
        rep.items.extend(sub.items);
    }
    report_verdict(
        "2. Hopf axioms (slq2, sl_t1_2, slq3 to degree 3; star algebras to degree 2)",
        &rep,
    );
}

#[test]
fn criterion_03_antipode_formula() {
    let p = builtin(Builtin::Slq2).unwrap();
    let table = p.antipode_table().unwrap();
    // S(w) = ((d, -q^-1 b), (-q c, a))
    let want = [
        QPoly::gen(3),
        QPoly::gen(1).scale(&QScalar::q_pow(-1).neg()),
        QPoly::gen(2).scale(&QScalar::q().neg()),
        QPoly::gen(0),
    ];
    let mut ok = table == want;
    // S^2(w) = diag(q^-1, q) w diag(q, q^-1)
    let dpow = [
        [0i64, -2],
        [2, 0],
    ];
    for i in 0..2 {
        for j in 0..2 {
            let s2 = p.antipode(&p.antipode(&p.w(i, j)).unwrap()).unwrap();
            let want = p.w(i, j).scale(&QScalar::q_pow(dpow[i][j]));
            ok &= p.reduce(&s2) == p.reduce(&want);
        }
    }
    verdict("3. antipode formula and S^2 = diag-conjugation", ok, "");
}

#[test]
fn criterion_04_hecke_and_symmetrizer() {
    let mut rep = CheckReport::new("Hecke");
    for n in 2..=4 {
        let sub = hecke::check_hecke_relations(n);
        rep.items.extend(sub.items);
    }
    let mut ok = rep.all_pass();
    // (sigma_k - 1) S_n = 0 for n <= 4
    for n in 2..=4usize {
        let s = hecke::symmetrizer(n);
        for k in 1..n {
            let lhs = hecke::sigma_k(n, k)
                .sub(&Mat::identity(1 << n))
                .mul(&s);
            ok &= lhs.is_zero();
        }
    }
    // dim K^{n/2} = n + 1 for n <= 6 (sym_subspace asserts the count).
    for n in 1..=6usize {
        let basis = hecke::sym_subspace(n);
        ok &= basis.cols == n + 1;
    }
    verdict(
        "4. Hecke relations (n<=4), symmetrizer annihilation, dim K^{n/2} = n+1 (n<=6)",
        ok,
        "",
    );
}

#[test]
fn criterion_05_spin_tower_and_clebsch_gordan() {
    let p = arc(Builtin::Suq2);
    let mut ok = true;
    // spin_corep construction runs the corepresentation checks internally.
    for two_l in 0..=3 {
        ok &= spin::spin_corep(&p, two_l).is_ok();
    }
    // Clebsch-Gordan multiplicities for a, b <= 3/2.
    for a2 in 0..=3usize {
        for b2 in 0..=3usize {
            let table = spin::clebsch_gordan_table(&p, a2, b2).unwrap();
            for (c2, mult) in table {
                ok &= mult == spin::predicted_multiplicity(a2, b2, c2);
            }
        }
    }
    // Schur: dim Mor(v^a, v^b) = delta_ab for a, b <= 3/2.
    let coreps: Vec<Corep> = (0..=3).map(|k| spin::spin_corep(&p, k).unwrap()).collect();
    for (i, v) in coreps.iter().enumerate() {
        for (j, w) in coreps.iter().enumerate() {
            let dim = mor_space(v, w).unwrap().len();
            ok &= dim == usize::from(i == j);
        }
    }
    verdict(
        "5. spin corepresentations (2l<=3), Clebsch-Gordan table, Schur orthogonality",
        ok,
        "",
    );
}

#[test]
fn criterion_06_peter_weyl_and_modular() {
    let p = arc(Builtin::Suq2);
    let pw = haar::build_pw_basis(&p, 4).unwrap();
    let mut rep = CheckReport::new("Peter-Weyl");
    for two_a in 0..=2usize {
        for two_b in 0..=2usize {
            let sub = haar::check_pw_relations(&pw, two_a, two_b).unwrap();
            rep.items.extend(sub.items);
        }
    }
    // h(a a^*) = 1/(1+q^2)
    let x = p.reduce(&QPoly::gen(0).mul(&p.star(&QPoly::gen(0)).unwrap()));
    let h = pw.haar(&x).unwrap();
    let want = QScalar::one()
        .div(&QScalar::one().add(&QScalar::q_pow(2)))
        .unwrap();
    let mut ok = rep.all_pass() && h == want;
    let modular = haar::check_modular(&pw, 2).unwrap();
    ok &= modular.all_pass();
    verdict(
        "6. Peter-Weyl relations (alpha,beta<=1), h(a a^*)=1/(1+q^2), modular property",
        ok,
        "",
    );
}

#[test]
fn criterion_07_gram_positivity() {
    let p = arc(Builtin::Suq2);
    let pw = haar::build_pw_basis(&p, 4).unwrap();
    let mut rep = CheckReport::new("Gram positivity");
    for (n, d) in [(1, 3), (1, 2), (2, 3)] {
        let sub = haar::gram_positivity(&pw, 2, &rat(n, d)).unwrap();
        rep.items.extend(sub.items);
    }
    report_verdict(
        "7. Gram matrices positive definite at q0 in {1/3, 1/2, 2/3} (degree <= 2)",
        &rep,
    );
}

#[test]
fn criterion_08_quantum_sphere() {
    let mut rep = CheckReport::new("sphere");
    for c in [
        CParam::Symbolic,
        CParam::Infinity,
        CParam::Finite(c_special(2)),
    ] {
        let sub = sphere(&c).unwrap().check_coaction();
        rep.items.extend(sub.items);
    }
    let p = arc(Builtin::Suq2);
    let sub = check_u1_equivalence(&p).unwrap();
    rep.items.extend(sub.items);
    let mut ok = rep.all_pass();
    // Negative control: perturbing rho in the declared relations (keeping the
    // solved rewrite rules fixed) must break relation preservation.
    let mut s = match sphere(&CParam::Finite(QScalar::one())).unwrap() {
        qg_core::sphere::SphereInstance::Numeric(s) => s,
        _ => unreachable!(),
    };
    s.rho = s.rho.add(&QScalar::one());
    ok &= !s.check_coaction().all_pass();
    verdict(
        "8. sphere coaction (symbolic, c=inf, c=c(2)), u^1 equivalence, perturbed-rho control",
        ok,
        "",
    );
}

#[test]
fn criterion_09_lorentz_checker() {
    let classical = builtin(Builtin::Suq2)
        .unwrap()
        .specialize(&rat(1, 1))
        .unwrap();
    let flip = lorentz::check_lorentz_x(&classical, &lorentz::tau()).unwrap();
    let zero = lorentz::check_lorentz_x(&classical, &Mat::zeros(4, 4)).unwrap();
    let symbolic = builtin(Builtin::Suq2).unwrap();
    let ident = lorentz::check_lorentz_x(&symbolic, &Mat::identity(4)).unwrap();
    let mut ok = flip.all_pass();
    ok &= flip
        .items
        .iter()
        .any(|i| i.name.contains("(v)") && i.name.contains("c = 1"));
    let zero_iv = zero.items.iter().find(|i| i.name.contains("(iv)"));
    ok &= matches!(zero_iv, Some(it) if !it.pass);
    let id_iii = ident.items.iter().find(|i| i.name.contains("(iii)"));
    ok &= matches!(id_iii, Some(it) if !it.pass && it.witness.is_some());
    verdict(
        "9. Lorentz X checker: flip passes at q=1 with c=1, zero fails (iv), identity fails (iii)",
        ok,
        "",
    );
}

#[test]
fn criterion_10_classical_limits() {
    let one = rat(1, 1);
    let mut ok = true;
    // sigma at q=1 is the flip.
    let sigma = make_sigma_n(2);
    let flip = lorentz::tau();
    for i in 0..4 {
        for j in 0..4 {
            ok &= sigma.at(i, j).evaluate_at(&one).unwrap() == flip.at(i, j).evaluate_at(&one).unwrap();
        }
    }
    // E at q=1 is the classical antisymmetrizer (0, 1, -1, 0)^T.
    let e = make_antisym_e(2);
    let want = [0i64, 1, -1, 0];
    for i in 0..4 {
        ok &= e.at(i, 0).evaluate_at(&one).unwrap() == BigRational::from(BigInt::from(want[i]));
    }
    // slq2 at q=1 is commutative with intact Hopf structure.
    let p = builtin(Builtin::Slq2).unwrap().specialize(&one).unwrap();
    ok &= p.check_confluence(3, Some(&[1, 5, 14, 30])).all_pass();
    ok &= p.check_hopf_axioms(2).all_pass();
    for i in 0..4u8 {
        for j in 0..4u8 {
            let xy = p.reduce(&QPoly::gen(i).mul(&QPoly::gen(j)));
            let yx = p.reduce(&QPoly::gen(j).mul(&QPoly::gen(i)));
            ok &= xy == yx;
        }
    }
    // Classical star algebra and sphere.
    let su2 = builtin(Builtin::Suq2).unwrap().specialize(&one).unwrap();
    ok &= su2.check_hopf_axioms(2).all_pass();
    ok &= sphere_at_q(&CParam::Finite(QScalar::one()), &one)
        .unwrap()
        .check_coaction()
        .all_pass();
    verdict(
        "10. classical q=1 limits: sigma=flip, classical E, commutative slq2, classical sphere",
        ok,
        "",
    );
}
