//! Integral families against closed forms and independent routes.

use tornheim_numeric::families::*;
use tornheim_numeric::specfun::{hurwitz_zeta_sderiv, log_gamma, zeta_int};
use tornheim_numeric::{quad01, Ctx, Endpoints, Real};

fn close(a: &Real, b: &Real, tol: f64) -> bool {
    (a - b).abs().to_f64() < tol
}

#[test]
fn x_zero_two_and_log_gamma_clausen_three() {
    let ctx = Ctx::new(25);
    // X_{0,2} = -zeta(4)/(8 pi^2) = -pi^2/720
    let x02 = x_integral(0, 2, &ctx).unwrap();
    let expected = -(ctx.pi().powi(2) / ctx.int(720));
    assert!(close(&x02, &expected, 1e-22), "{} vs {}", x02.to_f64(), expected.to_f64());
    // the bare integral: int log Gamma Cl_3(2 pi q) dq = pi^4/360
    // (X_{0,2} = -(2/(2pi)^2) * integral)
    let integral = -(&x02 * ctx.two_pi().powi(2) / ctx.int(2));
    let expected = ctx.pi().powi(4) / ctx.int(360);
    assert!(close(&integral, &expected, 1e-21));
}

#[test]
fn x_zero_family_closed_forms() {
    let ctx = Ctx::new(20);
    // even n: X_{0,n} = p_n n!/(2pi)^n (1/4) zeta(n+2)
    for n in [2u32, 4, 6] {
        let x = x_integral(0, n, &ctx).unwrap();
        let mut fact = ctx.int(1);
        for i in 2..=n as i64 {
            fact = fact * ctx.int(i);
        }
        let mut expected = &fact * &zeta_int(n as i64 + 2, &ctx).unwrap()
            / (ctx.two_pi().powi(n as i64) * ctx.int(4));
        if n % 4 >= 2 {
            expected = -expected;
        }
        assert!(close(&x, &expected, 1e-17), "n = {n}: {} vs {}", x.to_f64(), expected.to_f64());
    }
    // odd n: X_{0,n} = p_n n!/(2pi)^n (1/(2pi)) (A zeta(n+2) - zeta'(n+1)),
    // A = log 2pi + gamma; zeta'(4) through the differentiated
    // Euler-Maclaurin route
    // expanding Cl_{n+2} termwise against the log-gamma Fourier moments
    // gives (A zeta(n+2) - zeta'(n+2)); the derivative argument matches the
    // zeta argument
    let n = 3u32;
    let x = x_integral(0, n, &ctx).unwrap();
    let zp5 = hurwitz_zeta_sderiv(&ctx.int(5), &ctx.int(1), &ctx).unwrap();
    let bracket = ctx.a_const() * zeta_int(5, &ctx).unwrap() - zp5;
    let expected = -(ctx.int(6) * &bracket / (ctx.two_pi().powi(3) * ctx.two_pi()));
    assert!(close(&x, &expected, 1e-17), "{} vs {}", x.to_f64(), expected.to_f64());
}

#[test]
fn y_star_two_two_reference() {
    let ctx = Ctx::new(22);
    // Y*(2,2) = pi^4/45 - T(2,0,2) = pi^4/45 - pi^4/120 = pi^4/72
    let y = y_star(2, 2, &ctx).unwrap();
    let expected = ctx.pi().powi(4) / ctx.int(72);
    assert!(close(&y, &expected, 1e-19), "{} vs {}", y.to_f64(), expected.to_f64());
}

#[test]
fn y_star_three_five_expression() {
    let ctx = Ctx::new(18);
    // Y*(3,5) = 32 pi^6/9 (X_{0,6} - 3X_{1,5} + 3X_{2,4} - X_{3,3})
    //           - 15 zeta(7) log 2pi
    let y = y_star(3, 5, &ctx).unwrap();
    let xs = [
        x_integral(0, 6, &ctx).unwrap(),
        x_integral(1, 5, &ctx).unwrap(),
        x_integral(2, 4, &ctx).unwrap(),
        x_integral(3, 3, &ctx).unwrap(),
    ];
    let comb = &xs[0] - ctx.int(3) * &xs[1] + ctx.int(3) * &xs[2] - &xs[3];
    let expected = ctx.int(32) * ctx.pi().powi(6) * &comb / ctx.int(9)
        - ctx.int(15) * zeta_int(7, &ctx).unwrap() * ctx.log_two_pi();
    assert!(close(&y, &expected, 1e-15));
}

#[test]
fn w_base_values_and_quadrature() {
    let ctx = Ctx::new(20);
    assert!(close(&w_closed_base(0, &ctx).unwrap(), &ctx.ln2(), 1e-20));
    assert!(w_closed_base(3, &ctx).unwrap().is_zero());
    // W_{2,0} = +zeta(3)/(2 pi^2): the direct quadrature fixes the sign
    let w20 = w_closed_base(2, &ctx).unwrap();
    let expected = zeta_int(3, &ctx).unwrap() / (ctx.int(2) * ctx.pi().powi(2));
    assert!(close(&w20, &expected, 1e-19));
    // W_{4,0} = -24 zeta(5)/(2pi)^4
    let w40 = w_closed_base(4, &ctx).unwrap();
    let expected = -(ctx.int(24) * zeta_int(5, &ctx).unwrap() / ctx.two_pi().powi(4));
    assert!(close(&w40, &expected, 1e-19));
    assert!(close(&w_integral(4, 0, &ctx).unwrap(), &w40, 1e-16));
    // quadrature agrees
    let wq = w_integral(2, 0, &ctx).unwrap();
    assert!(close(&wq, &w20, 1e-17));
    let w00 = w_integral(0, 0, &ctx).unwrap();
    assert!(close(&w00, &ctx.ln2(), 1e-17));
}

#[test]
fn w_recursion_holds_numerically() {
    let ctx = Ctx::new(20);
    use tornheim_core::rational::{bernoulli_number, ratio, BigRational};
    use tornheim_numeric::specfun::kernel_k_at_one;
    // W_{m,n} = sum_{k=1}^{n} (-1)^{k+1}/(m+1)_k B_{m+k}(1) K_{n-k+1}(1)
    //           + (-1)^n/(m+1)_n W_{m+n,0}, all pieces numeric
    for (m, n) in [(1u32, 1u32), (2, 1), (1, 2)] {
        let lhs = w_integral(m, n, &ctx).unwrap();
        let mut rhs = Real::zero(ctx.bits());
        let mut poch = BigRational::from_integer(1.into());
        for k in 1..=n {
            poch *= BigRational::from_integer((m + k).into());
            let mut b = bernoulli_number(m + k);
            if m + k == 1 {
                b = -b;
            }
            let mut c = b / poch.clone();
            if k % 2 == 0 {
                c = -c;
            }
            rhs = &rhs
                + &tornheim_numeric::real::scale_rational(
                    &kernel_k_at_one(n - k + 1, &ctx).unwrap(),
                    &c,
                );
        }
        let mut c = poch.recip();
        if n % 2 == 1 {
            c = -c;
        }
        rhs = &rhs
            + &tornheim_numeric::real::scale_rational(&w_integral(m + n, 0, &ctx).unwrap(), &c);
        assert!(close(&lhs, &rhs, 1e-16), "(m,n) = ({m},{n})");
        let _ = ratio(1, 1);
    }
}

#[test]
fn v_values_from_the_worked_example() {
    let ctx = Ctx::new(20);
    // V_{0,1,2} = (1/12) log 2, V_{1,1,1} = (1/24) log 2, V_{0,0,0} = log 2
    let v = v_closed(0, 1, 2, &ctx).unwrap();
    assert!(close(&v, &(ctx.ln2() / ctx.int(12)), 1e-19));
    let v = v_closed(1, 1, 1, &ctx).unwrap();
    assert!(close(&v, &(ctx.ln2() / ctx.int(24)), 1e-19));
    let v = v_closed(0, 0, 0, &ctx).unwrap();
    assert!(close(&v, &ctx.ln2(), 1e-19));
    // quadrature route agrees
    let vq = v_integral(0, 1, 2, &ctx).unwrap();
    assert!(close(&vq, &(ctx.ln2() / ctx.int(12)), 1e-16));
    let vq = v_integral(1, 1, 1, &ctx).unwrap();
    assert!(close(&vq, &(ctx.ln2() / ctx.int(24)), 1e-16));
}

#[test]
fn u_star_definitional_identity() {
    let ctx = Ctx::new(18);
    // U*_{k,l} - U_{k,l} + log sqrt(2pi) W_{k,l} = 0 at (1,1)
    let us = u_star_integral(1, 1, &ctx).unwrap();
    let u = u_integral(1, 1, &ctx).unwrap();
    let w = w_integral(1, 1, &ctx).unwrap();
    let resid = &us - &u + ctx.log_two_pi() * &w / ctx.int(2);
    assert!(resid.abs().to_f64() < 1e-15, "{}", resid.to_f64());
}

#[test]
fn u_star_combination_gives_t202() {
    let ctx = Ctx::new(18);
    // 4 pi^2 (U*_{2,0} - 2 U*_{1,1} + U*_{0,2}) = pi^4/45 - T(2,0,2)
    //                                           = pi^4/45 - pi^4/120
    let comb = u_star_integral(2, 0, &ctx).unwrap()
        - ctx.int(2) * u_star_integral(1, 1, &ctx).unwrap()
        + u_star_integral(0, 2, &ctx).unwrap();
    let lhs = ctx.int(4) * ctx.pi().powi(2) * &comb;
    let expected = ctx.pi().powi(4) / ctx.int(45) - ctx.pi().powi(4) / ctx.int(120);
    assert!(close(&lhs, &expected, 1e-14), "{} vs {}", lhs.to_f64(), expected.to_f64());
}

#[test]
fn u_zero_zero_against_clausen_route() {
    let ctx = Ctx::new(18);
    // U_{0,0} = int log Gamma K_0; with K_0 = log 2 + Cl_1(2 pi q) this is
    // log 2 * log sqrt(2pi) + X_{0,0}: two independent quadratures
    let u = u_integral(0, 0, &ctx).unwrap();
    let x00 = x_integral(0, 0, &ctx).unwrap();
    let rhs = ctx.ln2() * ctx.log_two_pi() / ctx.int(2) + &x00;
    assert!(close(&u, &rhs, 1e-15), "{} vs {}", u.to_f64(), rhs.to_f64());
}

#[test]
fn basic_integral_example_t202() {
    let ctx = Ctx::new(18);
    // int (A_1 B_2 + A_2 B_1) log sin(pi q) dq = -pi^2/288
    // (via pi * (I_AB(1,2) + I_AB(2,1)))
    let sum = basic_integral(BasicFamily::Iab, 1, 2, &ctx).unwrap()
        + basic_integral(BasicFamily::Iab, 2, 1, &ctx).unwrap();
    let integral = ctx.pi() * &sum;
    let expected = -(ctx.pi().powi(2) / ctx.int(288));
    assert!(close(&integral, &expected, 1e-15), "{} vs {}", integral.to_f64(), expected.to_f64());
}

#[test]
fn basic_ibb_is_negated_v() {
    let ctx = Ctx::new(18);
    // I_BB(1,2) = -V_{1,2,0}: K = log sin = -K_0
    let ib = basic_integral(BasicFamily::Ibb, 1, 2, &ctx).unwrap();
    let v = v_closed(1, 2, 0, &ctx).unwrap();
    assert!(close(&ib, &(-&v), 1e-15));
}

#[test]
fn j_family_symmetry() {
    let ctx = Ctx::new(16);
    // int A_k(q) A_l(1-q) K = int A_l(q) A_k(1-q) K by q -> 1-q
    let a = basic_integral(BasicFamily::Jaa, 1, 2, &ctx).unwrap();
    let b = basic_integral(BasicFamily::Jaa, 2, 1, &ctx).unwrap();
    assert!(close(&a, &b, 1e-13));
    assert!(basic_integral(BasicFamily::Iab, 0, 2, &ctx).is_err());
}

#[test]
fn zeta_part_and_parity_forms_agree() {
    let ctx = Ctx::new(20);
    // closed form L1(2,2) = pi^4/45
    let l = tornheim_zeta_part(2, 2, &ctx).unwrap();
    assert!(close(&l, &(ctx.pi().powi(4) / ctx.int(45)), 1e-19));
    // L1(3,3) = zeta(3)^2 - zeta(6)/2
    let l = tornheim_zeta_part(3, 3, &ctx).unwrap();
    let z3 = zeta_int(3, &ctx).unwrap();
    let expected = &z3 * &z3 - zeta_int(6, &ctx).unwrap() / ctx.int(2);
    assert!(close(&l, &expected, 1e-19));
    // the four parity-case limit formulas reproduce it
    for (m, n) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3), (4, 5), (2, 6)] {
        let a = tornheim_zeta_part(m, n, &ctx).unwrap();
        let b = zeta_part_parity_form(m, n, &ctx).unwrap();
        assert!(close(&a, &b, 1e-18), "({m},{n}): {} vs {}", a.to_f64(), b.to_f64());
    }
}

#[test]
fn basic_route_small_cases() {
    let ctx = Ctx::new(16);
    // T(2,0,2) = pi^4/120
    let t = tornheim_via_basic_integrals(2, 2, &ctx).unwrap();
    let expected = ctx.pi().powi(4) / ctx.int(120);
    assert!(close(&t, &expected, 1e-12), "{} vs {}", t.to_f64(), expected.to_f64());
    // T(3,0,3) = zeta(3)^2/2 - zeta(6)/2
    let t = tornheim_via_basic_integrals(3, 3, &ctx).unwrap();
    let z3 = zeta_int(3, &ctx).unwrap();
    let expected = (&z3 * &z3 - zeta_int(6, &ctx).unwrap()) / ctx.int(2);
    assert!(close(&t, &expected, 1e-12), "{} vs {}", t.to_f64(), expected.to_f64());
}

#[test]
fn t206_expression_in_iab() {
    let ctx = Ctx::new(16);
    // T(2,0,6) = pi^8/8100 + (8 pi^7/45) I_AB(1,6) + (8 pi^7/15) I_AB(2,5)
    let t = tornheim_via_basic_integrals(2, 6, &ctx).unwrap();
    let i16 = basic_integral(BasicFamily::Iab, 1, 6, &ctx).unwrap();
    let i25 = basic_integral(BasicFamily::Iab, 2, 5, &ctx).unwrap();
    let expected = ctx.pi().powi(8) / ctx.int(8100)
        + ctx.int(8) * ctx.pi().powi(7) * &i16 / ctx.int(45)
        + ctx.int(8) * ctx.pi().powi(7) * &i25 / ctx.int(15);
    assert!(close(&t, &expected, 1e-13), "{} vs {}", t.to_f64(), expected.to_f64());
}

#[test]
fn five_y26_plus_two_y53_note_identity() {
    let ctx = Ctx::new(16);
    // 5 Y_{2,6} + 2 Y_{5,3} = 60 log(2pi) zeta(7) - 35/4 zeta(8)
    //                          - 22 zeta(3) zeta(5),
    // the zeta part being 29/6 zeta(8) - 30 zeta(3)zeta(5) minus the
    // relation value 163/12 zeta(8) - 8 zeta(3)zeta(5) of
    // 5T(6,0,2) + 2T(5,0,3)
    let y26 = y_plain(2, 6, &ctx).unwrap();
    let y53 = y_plain(5, 3, &ctx).unwrap();
    let lhs = ctx.int(5) * &y26 + ctx.int(2) * &y53;
    let rhs = ctx.int(60) * ctx.log_two_pi() * zeta_int(7, &ctx).unwrap()
        - ctx.int(35) * zeta_int(8, &ctx).unwrap() / ctx.int(4)
        - ctx.int(22) * zeta_int(3, &ctx).unwrap() * zeta_int(5, &ctx).unwrap();
    assert!(close(&lhs, &rhs, 1e-12), "{} vs {}", lhs.to_f64(), rhs.to_f64());
    // and the Euler-pair identity with the same correction:
    // Y_{2,6} + Y_{6,2} = 12 log(2pi) zeta(7) + 5/3 zeta(8) - 6 z3 z5
    let y62 = y_plain(6, 2, &ctx).unwrap();
    let lhs = &y26 + &y62;
    let rhs = ctx.int(12) * ctx.log_two_pi() * zeta_int(7, &ctx).unwrap()
        + ctx.int(5) * zeta_int(8, &ctx).unwrap() / ctx.int(3)
        - ctx.int(6) * zeta_int(3, &ctx).unwrap() * zeta_int(5, &ctx).unwrap();
    assert!(close(&lhs, &rhs, 1e-12), "{} vs {}", lhs.to_f64(), rhs.to_f64());
}

#[test]
fn even_product_fold_matches_numerics() {
    // the canonical-form coefficient zeta(2a)zeta(2b)/zeta(2a+2b) from the
    // exact layer, checked numerically
    let ctx = Ctx::new(25);
    for (a, b) in [(1u32, 1u32), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (1, 5)] {
        let exact = ctx.from_rational(&tornheim_core::rational::even_zeta_product_ratio(a, b));
        let numeric = zeta_int(2 * a as i64, &ctx).unwrap()
            * zeta_int(2 * b as i64, &ctx).unwrap()
            / zeta_int(2 * (a + b) as i64, &ctx).unwrap();
        assert!(
            (&exact - &numeric).abs().to_f64() < 1e-24,
            "(2a,2b) = ({},{})",
            2 * a,
            2 * b
        );
    }
}

#[test]
fn quad_tolerance_scaling() {
    // halving tolerance changes results below the old tolerance
    let lo = Ctx::new(14);
    let hi = Ctx::new(28);
    let f = |ctx: &Ctx| {
        quad01(
            |q: &Real, _: &Real| log_gamma(q, ctx).unwrap() * q * q,
            ctx,
            Endpoints::left(),
        )
        .unwrap()
        .value
    };
    let a = f(&lo);
    let b = f(&hi);
    assert!((a.to_f64() - b.to_f64()).abs() < 1e-14);
}
