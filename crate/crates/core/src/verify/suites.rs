//! Identity suites. Every check compares two independently computed exact
//! values per instance and carries the verdict it is known to produce.

use std::thread;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::cases::{special_case, CaseId, CaseParams};
use crate::error::{Error, Result};
use crate::euler_changhee::{
    changhee_explicit, changhee_number, changhee_numbers, changhee_order_k_gf, changhee_order_k_sequence,
    changhee_order_k_via_euler, euler_order_k_sequence, euler_via_changhee,
};
use crate::multiparam::{
    generalized_changhee, mp_first_number, mp_first_poly, mp_second_lah_path, mp_second_number,
    mp_second_poly, poly_cauchy_first, poly_cauchy_second,
};
use crate::multipoly::MultiPoly;
use crate::oracle::{
    fermionic, fermionic_moments, integrate_multivariate, kim_sum_changhee_oracle, product_integrand,
    MomentFunctional,
};
use crate::poly::Polynomial;
use crate::rational::{self, factorial, int, ratio, Rational};
use crate::triangles::{
    comtet_first, comtet_second_composite_row, lah, stirling_first, stirling_first_row,
    stirling_first_unsigned, stirling_second, stirling_second_row, ParameterSpec,
};

use super::fixtures::{simple_specs, specs};
use super::report::{Check, CheckBuilder, IdentityReport, Verdict};

type CheckFn = fn() -> Check;

pub const SUITE_NAMES: [&str; 10] = [
    "stirling-orthogonality",
    "changhee-closed-form",
    "kim-identities",
    "theorem-2-1",
    "theorem-2-2-as-printed",
    "case-reductions-first",
    "theorem-3-1-paths",
    "corollaries-second-kind",
    "poly-cauchy-classical",
    "all",
];

fn suite_checks(name: &str) -> Option<Vec<CheckFn>> {
    let checks: Vec<CheckFn> = match name {
        "stirling-orthogonality" => vec![
            stirling_orthogonality,
            stirling_orthogonality_dual,
            stirling_first_falling_factorial,
            stirling_unsigned_rising_factorial,
            stirling_second_explicit,
            lah_closed_form,
            lah_signed_involution,
            lah_rising_to_falling,
            comtet_reduces_to_stirling,
            comtet_composite_of_falling,
            comtet_first_expansion,
        ],
        "changhee-closed-form" => vec![
            changhee_series_inversion,
            changhee_explicit_order_one,
            changhee_gf_order_one,
            changhee_falling_factorial_integral,
        ],
        "kim-identities" => vec![
            kim_gf_vs_conversion,
            kim_gf_vs_explicit,
            kim_conversion_polynomials,
            kim_euler_from_changhee,
            kim_sum_form_oracle,
            euler_reflection,
            euler_fermionic_moments,
        ],
        "theorem-2-1" => vec![
            first_oracle,
            first_nested_sum,
            first_polynomial_oracle,
            first_polynomial_degree,
            first_constant_term,
        ],
        "theorem-2-2-as-printed" => vec![
            printed_closed_form,
            printed_closed_form_fixture,
            printed_changhee_values,
            corrected_closed_form,
        ],
        "case-reductions-first" => vec![
            first_case1,
            first_case2,
            first_case3,
            first_case4,
            first_case5_order_one,
            first_case5,
            first_case5_polynomial,
            first_case6,
            first_case6_oracle,
            first_euler_expansion,
            first_case7,
            generalized_oracle,
            first_case8,
        ],
        "theorem-3-1-paths" => vec![
            second_oracle,
            second_polynomial_oracle,
            second_reflection,
            second_lah_vs_power,
            second_lah_path_oracle,
        ],
        "corollaries-second-kind" => vec![
            second_case1,
            second_case2,
            second_case3,
            second_case4,
            second_case5,
            second_case6,
            second_case7,
            second_case8,
        ],
        "poly-cauchy-classical" => vec![
            cauchy_first_classical,
            cauchy_first_spot_values,
            cauchy_second_classical,
            cauchy_second_spot_value,
            cauchy_reflection,
        ],
        "all" => SUITE_NAMES[..SUITE_NAMES.len() - 1]
            .iter()
            .flat_map(|s| suite_checks(s).expect("listed suite exists"))
            .collect(),
        _ => return None,
    };
    Some(checks)
}

/// Runs a suite; checks run on separate threads and are reported in
/// declaration order.
pub fn run_suite(name: &str) -> Result<IdentityReport> {
    let checks = suite_checks(name).ok_or_else(|| Error::UnknownSuite {
        name: name.to_string(),
        valid: SUITE_NAMES.join(", "),
    })?;
    let checks = thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|f| scope.spawn(f)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect::<Vec<_>>()
    });
    Ok(IdentityReport { suite: name.to_string(), checks })
}

fn q(v: &Rational) -> Value {
    Value::String(rational::render(v))
}

fn with_spec(spec: &ParameterSpec, extra: Value) -> Value {
    let mut map = Map::new();
    map.insert("alpha".into(), spec.to_json()["alpha"].clone());
    map.insert("r".into(), spec.to_json()["r"].clone());
    if let Value::Object(rest) = extra {
        map.extend(rest);
    }
    Value::Object(map)
}

fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn closed_changhee(n: usize) -> Rational {
    Rational::new(factorial(n), num_bigint::BigInt::from(2).pow(n as u32)) * rational::sign(n)
}

fn oracle(spec: &ParameterSpec, k: u32, scale: &Rational) -> Rational {
    let p = product_integrand(spec, k as usize, scale).expect("desk-scale integrand");
    integrate_multivariate(&p, &fermionic(k as usize)).expect("arity matches")
}

fn direct_product(spec: &ParameterSpec, x: &Rational) -> Rational {
    spec.alpha()
        .iter()
        .zip(spec.r())
        .map(|(a, &ri)| rational::pow(&(x - a), ri as usize))
        .product()
}

const EVAL_POINTS: [(i64, i64); 3] = [(1, 2), (-2, 1), (3, 1)];

fn eval_points() -> Vec<Rational> {
    EVAL_POINTS.iter().map(|&(p, d)| ratio(p, d)).collect()
}

// ---------------------------------------------------------------- triangles

fn stirling_orthogonality() -> Check {
    let mut c = CheckBuilder::new(
        "stirling.orthogonality",
        "sum_m s(n,m) S(m,k) = delta(n,k) for 0 <= n,k <= 50",
        Verdict::Pass,
    );
    let s: Vec<_> = (0..=50).map(stirling_first_row).collect();
    let big_s: Vec<_> = (0..=50).map(stirling_second_row).collect();
    for n in 0..=50 {
        for k in 0..=50 {
            let sum: Rational = (k..=n).map(|m| &s[n][m] * &big_s[m][k]).sum();
            c.compare(json!({"n": n, "k": k}), &sum, &delta(n, k));
        }
    }
    c.finish()
}

fn stirling_orthogonality_dual() -> Check {
    let mut c = CheckBuilder::new(
        "stirling.orthogonality-dual",
        "sum_m S(n,m) s(m,k) = delta(n,k) for 0 <= n,k <= 50",
        Verdict::Pass,
    );
    let s: Vec<_> = (0..=50).map(stirling_first_row).collect();
    let big_s: Vec<_> = (0..=50).map(stirling_second_row).collect();
    for n in 0..=50 {
        for k in 0..=50 {
            let sum: Rational = (k..=n).map(|m| &big_s[n][m] * &s[m][k]).sum();
            c.compare(json!({"n": n, "k": k}), &sum, &delta(n, k));
        }
    }
    c.finish()
}

fn stirling_first_falling_factorial() -> Check {
    let mut c = CheckBuilder::new(
        "stirling.first.falling-factorial",
        "(x)_n = sum_k s(n,k) x^k, coefficients of the expanded product, n <= 30",
        Verdict::Pass,
    );
    let mut p = Polynomial::one();
    for n in 0..=30 {
        for k in 0..=n {
            c.compare(json!({"n": n, "k": k}), &stirling_first(n, k), &p.coeff(k));
        }
        p = &p * &Polynomial::linear_factor(&rational::from_usize(n));
    }
    c.finish()
}

fn stirling_unsigned_rising_factorial() -> Check {
    let mut c = CheckBuilder::new(
        "stirling.first-unsigned.rising-factorial",
        "<x>_n = sum_k |s(n,k)| x^k and |s(n,k)| = (-1)^(n-k) s(n,k), n <= 30",
        Verdict::Pass,
    );
    for n in 0..=30 {
        let p = Polynomial::rising_factorial(n);
        for k in 0..=n {
            let u = stirling_first_unsigned(n, k);
            c.compare(json!({"n": n, "k": k}), &u, &p.coeff(k));
            let signed = rational::sign(n - k) * stirling_first(n, k);
            c.compare(json!({"n": n, "k": k, "signed": true}), &u, &signed);
        }
    }
    c.finish()
}

fn stirling_second_explicit() -> Check {
    let mut c = CheckBuilder::new(
        "stirling.second.explicit-sum",
        "S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n, n <= 30",
        Verdict::Pass,
    );
    for n in 0..=30 {
        for k in 0..=n {
            let sum: Rational = (0..=k)
                .map(|j| {
                    rational::sign(j)
                        * Rational::from_integer(rational::binomial(k, j))
                        * rational::pow(&rational::from_usize(k - j), n)
                })
                .sum();
            let rhs = sum / Rational::from_integer(factorial(k));
            c.compare(json!({"n": n, "k": k}), &stirling_second(n, k), &rhs);
        }
    }
    c.finish()
}

fn lah_closed_form() -> Check {
    let mut c = CheckBuilder::new(
        "lah.closed-form",
        "L(n,k) = C(n-1,k-1) n!/k! for 1 <= k <= n <= 30, L(n,0) = delta(n,0)",
        Verdict::Pass,
    );
    for n in 0..=30 {
        for k in 0..=n {
            let rhs = if k == 0 {
                delta(n, 0)
            } else {
                Rational::from_integer(rational::binomial(n - 1, k - 1) * factorial(n))
                    / Rational::from_integer(factorial(k))
            };
            c.compare(json!({"n": n, "k": k}), &lah(n, k), &rhs);
        }
    }
    c.finish()
}

fn lah_signed_involution() -> Check {
    let mut c = CheckBuilder::new(
        "lah.signed-involution",
        "sum_j (-1)^n L(n,j) (-1)^j L(j,k) = delta(n,k) for n,k <= 20",
        Verdict::Pass,
    );
    for n in 0..=20 {
        for k in 0..=20 {
            let sum: Rational = (k..=n)
                .map(|j| rational::sign(n) * lah(n, j) * rational::sign(j) * lah(j, k))
                .sum();
            c.compare(json!({"n": n, "k": k}), &sum, &delta(n, k));
        }
    }
    c.finish()
}

fn lah_rising_to_falling() -> Check {
    let mut c = CheckBuilder::new(
        "lah.rising-to-falling",
        "<x>_n = sum_k L(n,k) (x)_k as polynomials, n <= 15",
        Verdict::Pass,
    );
    for n in 0..=15 {
        let lhs = Polynomial::rising_factorial(n);
        let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
            &acc + &Polynomial::falling_factorial(k).scale(&lah(n, k))
        });
        for d in 0..=n {
            c.compare(json!({"n": n, "degree": d}), &lhs.coeff(d), &rhs.coeff(d));
        }
    }
    c.finish()
}

fn comtet_reduces_to_stirling() -> Check {
    let mut c = CheckBuilder::new(
        "comtet.first.falling-offsets",
        "s_alpha(n,m;r) = s(n,m) when alpha = (0,1,...,n-1) and r = (1,...,1), n <= 20",
        Verdict::Pass,
    );
    for n in 0..=20 {
        let row = comtet_first(&ParameterSpec::falling(n));
        for (m, v) in row.iter().enumerate() {
            c.compare(json!({"n": n, "m": m}), v, &stirling_first(n, m));
        }
    }
    c.finish()
}

fn comtet_composite_of_falling() -> Check {
    let mut c = CheckBuilder::new(
        "comtet.composite.falling-offsets",
        "S_alpha(n,i) = sum_m s_alpha(n,m) S(m,i) = delta(n,i) when alpha = (0,...,n-1), r = 1, n <= 20",
        Verdict::Pass,
    );
    for n in 0..=20 {
        let row = comtet_second_composite_row(&ParameterSpec::falling(n));
        for (i, v) in row.iter().enumerate() {
            c.compare(json!({"n": n, "i": i}), v, &delta(n, i));
        }
    }
    c.finish()
}

fn comtet_first_expansion() -> Check {
    let mut c = CheckBuilder::new(
        "comtet.first.expansion",
        "sum_m s_alpha(n,m;r) x^m = prod_i (x - alpha_i)^r_i at x in {1/2, -2, 3}, fixture specs",
        Verdict::Pass,
    );
    for spec in specs() {
        let p = Polynomial::new(comtet_first(spec));
        for x in eval_points() {
            c.compare(with_spec(spec, json!({"x": q(&x)})), &p.eval(&x), &direct_product(spec, &x));
        }
    }
    c.finish()
}

// ------------------------------------------------------------------ changhee

fn changhee_series_inversion() -> Check {
    let mut c = CheckBuilder::new(
        "changhee.series-inversion",
        "EGF coefficients of 2/(2+t) equal (-1)^n n!/2^n, n <= 40",
        Verdict::Pass,
    );
    for (n, v) in changhee_numbers(40).iter().enumerate() {
        c.compare(json!({"n": n}), v, &closed_changhee(n));
    }
    c.finish()
}

fn changhee_explicit_order_one() -> Check {
    let mut c = CheckBuilder::new(
        "changhee.explicit-order-one",
        "(-1/2)^n sum_l s(n,l) n^l equals (-1)^n n!/2^n, n <= 40",
        Verdict::Pass,
    );
    for n in 0..=40 {
        c.compare(json!({"n": n}), &changhee_explicit(n, 1), &closed_changhee(n));
    }
    c.finish()
}

fn changhee_gf_order_one() -> Check {
    let mut c = CheckBuilder::new(
        "changhee.order-k-series-at-one",
        "EGF coefficients of (2/(2+t)) (1+t)^0 equal (-1)^n n!/2^n, n <= 40",
        Verdict::Pass,
    );
    for (n, v) in changhee_order_k_sequence(40, 1, &Rational::zero()).iter().enumerate() {
        c.compare(json!({"n": n}), v, &closed_changhee(n));
    }
    c.finish()
}

fn changhee_falling_factorial_integral() -> Check {
    let mut c = CheckBuilder::new(
        "changhee.fermionic-falling-factorial",
        "fermionic integral of (x)_n, with x^m mapped to the EGF coefficients of 2/(e^t+1), equals Ch_n, n <= 20",
        Verdict::Pass,
    );
    let euler = euler_order_k_sequence(20, 1, &Rational::zero());
    for n in 0..=20 {
        let p = Polynomial::falling_factorial(n);
        let integral: Rational = p.coeffs().iter().zip(&euler).map(|(a, e)| a * e).sum();
        c.compare(json!({"n": n}), &integral, &changhee_number(n));
    }
    c.finish()
}

// ----------------------------------------------------------------------- kim

fn kim_gf_vs_conversion() -> Check {
    let mut c = CheckBuilder::new(
        "kim.series-vs-conversion",
        "Ch_n^(k) from (2/(2+t))^k equals sum_l s(n,l) E_l^(k), n <= 25, k <= 6",
        Verdict::Pass,
    );
    for k in 1..=6 {
        let gf = changhee_order_k_sequence(25, k, &Rational::zero());
        for (n, v) in gf.iter().enumerate() {
            c.compare(json!({"n": n, "k": k}), v, &changhee_order_k_via_euler(n, k, &Rational::zero()));
        }
    }
    c.finish()
}

fn kim_gf_vs_explicit() -> Check {
    let mut c = CheckBuilder::new(
        "kim.series-vs-explicit",
        "Ch_n^(k) from (2/(2+t))^k equals (-1/2)^n sum_l s(n,l) (k+n-1)^l, n <= 25, k <= 6",
        Verdict::Pass,
    );
    for k in 1..=6 {
        let gf = changhee_order_k_sequence(25, k, &Rational::zero());
        for (n, v) in gf.iter().enumerate() {
            c.compare(json!({"n": n, "k": k}), v, &changhee_explicit(n, k));
        }
    }
    c.finish()
}

fn kim_conversion_polynomials() -> Check {
    let mut c = CheckBuilder::new(
        "kim.conversion-polynomials",
        "Ch_n^(k)(x) = sum_l s(n,l) E_l^(k)(x) at x in {1/2, -2, 3}, n <= 12, k <= 3",
        Verdict::Pass,
    );
    for x in eval_points() {
        for k in 1..=3 {
            let gf = changhee_order_k_sequence(12, k, &x);
            for (n, v) in gf.iter().enumerate() {
                c.compare(json!({"n": n, "k": k, "x": q(&x)}), v, &changhee_order_k_via_euler(n, k, &x));
            }
        }
    }
    c.finish()
}

fn kim_euler_from_changhee() -> Check {
    let mut c = CheckBuilder::new(
        "kim.euler-from-changhee",
        "E_n^(k)(x) = sum_l S(n,l) Ch_l^(k)(x) at x in {0, 1/2, -2, 3}, n <= 20, k <= 4",
        Verdict::Pass,
    );
    let points = std::iter::once(Rational::zero()).chain(eval_points());
    for x in points {
        for k in 1..=4 {
            let euler = euler_order_k_sequence(20, k, &x);
            for (n, v) in euler.iter().enumerate() {
                c.compare(json!({"n": n, "k": k, "x": q(&x)}), v, &euler_via_changhee(n, k, &x));
            }
        }
    }
    c.finish()
}

fn kim_sum_form_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "kim.sum-form-oracle",
        "fermionic k-fold integral of (x_1 + ... + x_k)_n equals Ch_n^(k), n <= 8, k <= 3",
        Verdict::Pass,
    );
    for k in 1..=3u32 {
        for n in 0..=8 {
            let lhs = kim_sum_changhee_oracle(n, k as usize).expect("desk scale");
            c.compare(json!({"n": n, "k": k}), &lhs, &changhee_order_k_gf(n, k, &Rational::zero()));
        }
    }
    c.finish()
}

pub const REFLECTION_POINTS: [(i64, i64); 10] =
    [(0, 1), (1, 1), (-1, 1), (1, 2), (-1, 3), (2, 5), (7, 3), (-5, 2), (3, 7), (11, 4)];

fn euler_reflection() -> Check {
    let mut c = CheckBuilder::new(
        "euler.reflection",
        "E_n(x) + E_n(x+1) = 2 x^n for n <= 20 at ten rational x",
        Verdict::Pass,
    );
    for &(p, d) in &REFLECTION_POINTS {
        let x = ratio(p, d);
        let a = euler_order_k_sequence(20, 1, &x);
        let b = euler_order_k_sequence(20, 1, &(&x + Rational::one()));
        for n in 0..=20 {
            c.compare(json!({"n": n, "x": q(&x)}), &(&a[n] + &b[n]), &(int(2) * rational::pow(&x, n)));
        }
    }
    c.finish()
}

fn euler_fermionic_moments() -> Check {
    let mut c = CheckBuilder::new(
        "euler.fermionic-moments",
        "sum_l S(m,l) Ch_l equals the EGF coefficients of 2/(e^t+1), m <= 30",
        Verdict::Pass,
    );
    let gf = euler_order_k_sequence(30, 1, &Rational::zero());
    for (m, v) in fermionic_moments(30).iter().enumerate() {
        c.compare(json!({"m": m}), v, &gf[m]);
    }
    c.finish()
}

// --------------------------------------------------------------- first kind

fn first_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.oracle",
        "sum_m s_alpha(n,m;r) E_m^k equals the k-fold fermionic integral of prod_i (x_1...x_k - alpha_i)^r_i, fixture specs, k <= 3",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=3 {
            c.compare(with_spec(spec, json!({"k": k})), &mp_first_number(spec, k), &oracle(spec, k, &int(1)));
        }
    }
    c.finish()
}

/// `sum_m s_alpha(n,m;r) sum_{l_1..l_k <= m} prod_j S(m,l_j) ch[l_j]`,
/// enumerating the index tuples literally.
fn nested_sum(spec: &ParameterSpec, k: u32, ch: &[Rational]) -> Rational {
    let k = k as usize;
    let mut total = Rational::zero();
    for (m, cm) in comtet_first(spec).iter().enumerate() {
        if cm.is_zero() {
            continue;
        }
        let row = stirling_second_row(m);
        let mut idx = vec![0usize; k];
        let mut inner = Rational::zero();
        'tuples: loop {
            inner += idx.iter().map(|&l| &row[l] * &ch[l]).product::<Rational>();
            for slot in idx.iter_mut() {
                if *slot < m {
                    *slot += 1;
                    continue 'tuples;
                }
                *slot = 0;
            }
            break;
        }
        total += cm * inner;
    }
    total
}

fn first_nested_sum() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.nested-sum",
        "sum_m s_alpha(n,m;r) sum_{l_1..l_k} prod_{j=1..k} S(m,l_j) Ch_{l_j} equals the number, fixture specs, k <= 3",
        Verdict::Pass,
    );
    let ch = changhee_numbers(8);
    for spec in specs() {
        for k in 1..=3 {
            c.compare(with_spec(spec, json!({"k": k})), &nested_sum(spec, k, &ch), &mp_first_number(spec, k));
        }
    }
    c.finish()
}

fn first_polynomial_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.polynomial-oracle",
        "sum_m s_alpha(n,m;r) x^m E_m^k equals the fermionic integral of prod_i (x x_1...x_k - alpha_i)^r_i, x in {1/2, -2, 3}, k <= 2",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=2 {
            for x in eval_points() {
                let inputs = with_spec(spec, json!({"k": k, "x": q(&x)}));
                c.compare(inputs, &mp_first_poly(spec, k, &x), &oracle(spec, k, &x));
            }
        }
    }
    c.finish()
}

fn first_polynomial_degree() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.polynomial-degree",
        "the polynomial through x = 0..|r| reproduces the values at x = -1/2 and x = |r|+1, k <= 3",
        Verdict::Pass,
    );
    for spec in specs() {
        let d = spec.total_degree();
        for k in 1..=3 {
            let points: Vec<_> = (0..=d)
                .map(|j| {
                    let x = rational::from_usize(j);
                    let y = mp_first_poly(spec, k, &x);
                    (x, y)
                })
                .collect();
            let p = Polynomial::interpolate(&points);
            for x in [ratio(-1, 2), rational::from_usize(d + 1)] {
                let inputs = with_spec(spec, json!({"k": k, "x": q(&x)}));
                c.compare(inputs, &p.eval(&x), &mp_first_poly(spec, k, &x));
            }
        }
    }
    c.finish()
}

fn first_constant_term() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.constant-term",
        "the first-kind polynomial at x = 0 equals prod_i (-alpha_i)^r_i, k <= 3",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=3 {
            let rhs = direct_product(spec, &Rational::zero());
            c.compare(with_spec(spec, json!({"k": k})), &mp_first_poly(spec, k, &Rational::zero()), &rhs);
        }
    }
    c.finish()
}

// ------------------------------------------------------ printed closed form

fn printed_changhee(l: usize) -> Rational {
    Rational::from_integer(factorial(l)) * rational::sign(l) / rational::from_usize(l + 1)
}

fn printed_closed_form() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.printed-closed-form",
        "nested sum with Ch_l replaced by (-1)^l l!/(l+1) versus the number on the monomial basis alpha = (0), r = (d), 2 <= d <= 8, k <= 3",
        Verdict::Fail,
    );
    let printed: Vec<_> = (0..=8).map(printed_changhee).collect();
    for d in 2..=8u32 {
        let spec = ParameterSpec::new(vec![Rational::zero()], vec![d]).expect("valid spec");
        for k in 1..=3 {
            let inputs = with_spec(&spec, json!({"k": k}));
            c.compare(inputs, &mp_first_number(&spec, k), &nested_sum(&spec, k, &printed));
        }
    }
    c.finish()
}

fn printed_closed_form_fixture() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.printed-closed-form.fixture",
        "nested sum with Ch_l replaced by (-1)^l l!/(l+1) versus the number, fixture specs with |r| >= 2, k <= 3",
        Verdict::Mixed,
    );
    let printed: Vec<_> = (0..=8).map(printed_changhee).collect();
    for spec in specs().iter().filter(|s| s.total_degree() >= 2) {
        for k in 1..=3 {
            let inputs = with_spec(spec, json!({"k": k}));
            c.compare(inputs, &mp_first_number(spec, k), &nested_sum(spec, k, &printed));
        }
    }
    c.finish()
}

fn printed_changhee_values() -> Check {
    let mut c = CheckBuilder::new(
        "changhee.printed-values",
        "(-1)^l l!/(l+1) versus Ch_l = (-1)^l l!/2^l, l <= 10",
        Verdict::Mixed,
    );
    for l in 0..=10 {
        c.compare(json!({"l": l}), &changhee_number(l), &printed_changhee(l));
    }
    c.finish()
}

fn corrected_closed_form() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.first.corrected-closed-form",
        "nested sum with Ch_l = (-1)^l l!/2^l equals the number, fixture specs with |r| >= 2, k <= 3",
        Verdict::Pass,
    );
    let closed: Vec<_> = (0..=8).map(closed_changhee).collect();
    for spec in specs().iter().filter(|s| s.total_degree() >= 2) {
        for k in 1..=3 {
            let inputs = with_spec(spec, json!({"k": k}));
            c.compare(inputs, &mp_first_number(spec, k), &nested_sum(spec, k, &closed));
        }
    }
    c.finish()
}

// -------------------------------------------------------------- case checks

fn case_check(
    id: &str,
    statement: &str,
    expected: Verdict,
    instances: impl IntoIterator<Item = (CaseId, CaseParams)>,
) -> Check {
    let mut c = CheckBuilder::new(id, statement, expected);
    for (case, params) in instances {
        let res = special_case(case, &params).expect("case parameters are valid");
        let mut inputs = Map::new();
        if let Some(n) = params.n {
            inputs.insert("n".into(), json!(n));
        }
        if let Some(r) = params.r {
            inputs.insert("r".into(), json!(r));
        }
        if let Some(a) = &params.alpha {
            inputs.insert("alpha".into(), q(a));
        }
        if let Some(spec) = &params.spec {
            inputs.insert("alpha".into(), spec.to_json()["alpha"].clone());
            inputs.insert("r".into(), spec.to_json()["r"].clone());
        }
        inputs.insert("k".into(), json!(res.k));
        if let Some(x) = &res.x {
            inputs.insert("x".into(), q(x));
        }
        if let Some(b) = &params.bounds {
            inputs.insert("bounds".into(), Value::Array(b.iter().map(q).collect()));
        }
        c.compare(Value::Object(inputs), &res.value, &res.claimed);
    }
    c.finish()
}

fn xs(points: &[Option<(i64, i64)>]) -> Vec<Option<Rational>> {
    points.iter().map(|p| p.map(|(a, b)| ratio(a, b))).collect()
}

fn shifted_instances(case: CaseId) -> Vec<(CaseId, CaseParams)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for r in 1..=2 {
            for k in 1..=3 {
                for x in xs(&[None, Some((1, 2)), Some((-2, 1))]) {
                    out.push((case, CaseParams { n: Some(n), r: Some(r), k: Some(k), x, ..Default::default() }));
                }
            }
        }
    }
    out
}

fn repeated_instances(case: CaseId) -> Vec<(CaseId, CaseParams)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for r in 1..=2 {
            for alpha in [int(0), int(1), int(-1), ratio(1, 2)] {
                for k in 1..=2 {
                    for x in xs(&[None, Some((1, 2))]) {
                        let params = CaseParams {
                            n: Some(n),
                            r: Some(r),
                            alpha: Some(alpha.clone()),
                            k: Some(k),
                            x,
                            ..Default::default()
                        };
                        out.push((case, params));
                    }
                }
            }
        }
    }
    out
}

fn simple_offset_instances(case: CaseId) -> Vec<(CaseId, CaseParams)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for alpha in [int(0), int(1), int(-1), int(2), ratio(1, 2)] {
            for k in 1..=3 {
                for x in xs(&[None, Some((-3, 2))]) {
                    let params = CaseParams { n: Some(n), alpha: Some(alpha.clone()), k: Some(k), x, ..Default::default() };
                    out.push((case, params));
                }
            }
        }
    }
    out
}

fn n_k_x_instances(case: CaseId, n_max: usize, k_max: u32, points: &[Option<(i64, i64)>]) -> Vec<(CaseId, CaseParams)> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for n in 0..=n_max {
            for x in xs(points) {
                out.push((case, CaseParams { n: Some(n), k: Some(k), x, ..Default::default() }));
            }
        }
    }
    out
}

fn spec_instances(case: CaseId, simple_only: bool) -> Vec<(CaseId, CaseParams)> {
    specs()
        .iter()
        .filter(|s| !simple_only || s.is_simple())
        .map(|s| (case, CaseParams { spec: Some(s.clone()), ..Default::default() }))
        .collect()
}

fn box_instances(case: CaseId) -> Vec<(CaseId, CaseParams)> {
    let mut out = Vec::new();
    for spec in specs().iter().filter(|s| s.len() <= 2) {
        for k in 1..=2u32 {
            let wide: Vec<_> = [ratio(1, 2), int(3)].into_iter().take(k as usize).collect();
            for bounds in [None, Some(wide)] {
                let params = CaseParams { spec: Some(spec.clone()), k: Some(k), bounds, ..Default::default() };
                out.push((case, params));
            }
        }
    }
    out
}

fn first_case1() -> Check {
    case_check(
        "2.case1",
        "alpha_i = i - 1, r_i = r: the integral of prod_i (x y - i + 1)^r versus that of (x y)_{nr}",
        Verdict::Mixed,
        shifted_instances(CaseId::first(1)),
    )
}

fn first_case2() -> Check {
    case_check(
        "2.case2",
        "alpha_i = alpha, r_i = r: (x y - alpha)^{nr} expanded through S(nr,l) (x y - alpha)_l",
        Verdict::Pass,
        repeated_instances(CaseId::first(2)),
    )
}

fn first_case3() -> Check {
    case_check(
        "2.case3",
        "alpha_i = alpha, r_i = 1: (x y - alpha)^n expanded through S(n,l) (x y - alpha)_l",
        Verdict::Pass,
        simple_offset_instances(CaseId::first(3)),
    )
}

fn first_case4() -> Check {
    case_check(
        "2.case4",
        "alpha_i = 0, r_i = 1: the integral of (x y)^n versus sum_l S(n,l) Ch_l^(k)(x) of the sum-variable family",
        Verdict::Mixed,
        n_k_x_instances(CaseId::first(4), 6, 3, &[None, Some((1, 2))]),
    )
}

fn first_case5_order_one() -> Check {
    case_check(
        "2.case5.order-one",
        "alpha_i = i - 1, r_i = 1, k = 1: the number equals Ch_n, n <= 10",
        Verdict::Pass,
        n_k_x_instances(CaseId::first(5), 10, 1, &[None]),
    )
}

fn first_case5() -> Check {
    case_check(
        "2.case5",
        "alpha_i = i - 1, r_i = 1: the integral of (x_1...x_k)_n versus the sum-variable Ch_n^(k), n <= 10, k <= 2",
        Verdict::Mixed,
        n_k_x_instances(CaseId::first(5), 10, 2, &[None]),
    )
}

fn first_case5_polynomial() -> Check {
    case_check(
        "2.case5.polynomial",
        "alpha_i = i - 1, r_i = 1: the integral of (x x_1...x_k)_n versus the sum-variable Ch_n^(k)(x), n <= 6, k <= 2",
        Verdict::Mixed,
        n_k_x_instances(CaseId::first(5), 6, 2, &[Some((1, 2)), Some((2, 1))]),
    )
}

fn first_case6() -> Check {
    case_check(
        "2.case6",
        "k = 1: the number equals sum_i S_alpha(n,i;r) Ch_i with the composite S_alpha, fixture specs",
        Verdict::Pass,
        spec_instances(CaseId::first(6), false),
    )
}

fn first_case6_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "2.case6.oracle",
        "k = 1: the number equals the univariate fermionic integral of prod_i (x - alpha_i)^r_i, fixture specs",
        Verdict::Pass,
    );
    for spec in specs() {
        let rhs = MomentFunctional::Fermionic.apply(&spec.factorial_product());
        c.compare(with_spec(spec, json!({})), &mp_first_number(spec, 1), &rhs);
    }
    c.finish()
}

fn first_euler_expansion() -> Check {
    let mut c = CheckBuilder::new(
        "2.case6.euler-expansion",
        "k = 1: the number equals sum_l s_alpha(n,l;r) E_l with E_l from 2/(e^t+1), fixture specs",
        Verdict::Pass,
    );
    let euler = euler_order_k_sequence(8, 1, &Rational::zero());
    for spec in specs() {
        let rhs: Rational = comtet_first(spec).iter().zip(&euler).map(|(a, e)| a * e).sum();
        c.compare(with_spec(spec, json!({})), &mp_first_number(spec, 1), &rhs);
    }
    c.finish()
}

fn first_case7() -> Check {
    case_check(
        "2.case7",
        "r_i = 1, k = 1: the generalized number equals sum_i S_alpha(n,i) Ch_i, fixture specs",
        Verdict::Pass,
        spec_instances(CaseId::first(7), true),
    )
}

fn generalized_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "2.case7.oracle",
        "r_i = 1, k = 1: the generalized number equals the fermionic integral of prod_i (x - alpha_i), fixture specs",
        Verdict::Pass,
    );
    for spec in simple_specs() {
        let lhs = generalized_changhee(spec).expect("simple spec");
        let rhs = MomentFunctional::Fermionic.apply(&spec.factorial_product());
        c.compare(with_spec(spec, json!({})), &lhs, &rhs);
    }
    c.finish()
}

fn first_case8() -> Check {
    case_check(
        "2.case8",
        "poly-Cauchy first kind equals the box integral of the expanded integrand, specs of length <= 2, k <= 2",
        Verdict::Pass,
        box_instances(CaseId::first(8)),
    )
}

// -------------------------------------------------------------- second kind

fn second_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.second.oracle",
        "sum_m s_alpha(n,m;r) (-1)^m E_m^k equals the k-fold fermionic integral of prod_i (-x_1...x_k - alpha_i)^r_i, fixture specs, k <= 3",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=3 {
            c.compare(with_spec(spec, json!({"k": k})), &mp_second_number(spec, k), &oracle(spec, k, &int(-1)));
        }
    }
    c.finish()
}

fn second_polynomial_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.second.polynomial-oracle",
        "sum_m s_alpha(n,m;r) (-x)^m E_m^k equals the fermionic integral of prod_i (-x x_1...x_k - alpha_i)^r_i, x in {1/2, -2, 3}, k <= 2",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=2 {
            for x in eval_points() {
                let inputs = with_spec(spec, json!({"k": k, "x": q(&x)}));
                c.compare(inputs, &mp_second_poly(spec, k, &x), &oracle(spec, k, &-x.clone()));
            }
        }
    }
    c.finish()
}

fn second_reflection() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.second.reflection",
        "second-kind number at (alpha, r) equals (-1)^|r| times the first-kind number at (-alpha, r), fixture specs, k <= 3",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=3 {
            let rhs = rational::sign(spec.total_degree()) * mp_first_number(&spec.negated(), k);
            c.compare(with_spec(spec, json!({"k": k})), &mp_second_number(spec, k), &rhs);
        }
    }
    c.finish()
}

fn second_lah_vs_power() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.second.lah-vs-power",
        "falling-factorial reading sum_m s_alpha(n,m;r) (-1)^m sum_l L(m,l) ∫(y)_l versus the power reading, fixture specs, k <= 3",
        Verdict::Mixed,
    );
    for spec in specs() {
        for k in 1..=3 {
            let cmp = mp_second_lah_path(spec, k);
            c.compare(with_spec(spec, json!({"k": k})), &cmp.lah, &cmp.power);
        }
    }
    c.finish()
}

fn second_lah_path_oracle() -> Check {
    let mut c = CheckBuilder::new(
        "multiparam.second.lah-path-oracle",
        "the falling-factorial reading equals the fermionic integral of sum_m s_alpha(n,m;r) (-x_1...x_k)_m, fixture specs, k <= 3",
        Verdict::Pass,
    );
    for spec in specs() {
        let integrand = comtet_first(spec).iter().enumerate().fold(Polynomial::zero(), |acc, (m, cm)| {
            &acc + &Polynomial::falling_factorial(m).rescale(&int(-1)).scale(cm)
        });
        for k in 1..=3u32 {
            let y = MultiPoly::product_of_variables(k as usize);
            let expanded = MultiPoly::compose_into(&integrand, &y).expect("desk scale");
            let rhs = integrate_multivariate(&expanded, &fermionic(k as usize)).expect("arity matches");
            c.compare(with_spec(spec, json!({"k": k})), &mp_second_lah_path(spec, k).lah, &rhs);
        }
    }
    c.finish()
}

fn second_case1() -> Check {
    case_check(
        "3.case1",
        "alpha_i = i - 1, r_i = r: the integral of prod_i (-x y - i + 1)^r versus that of (-x y)_{nr}",
        Verdict::Mixed,
        shifted_instances(CaseId::second(1)),
    )
}

fn second_case2() -> Check {
    case_check(
        "3.case2",
        "alpha_i = alpha, r_i = r: (-x y - alpha)^{nr} expanded through S(nr,l) (-x y - alpha)_l",
        Verdict::Pass,
        repeated_instances(CaseId::second(2)),
    )
}

fn second_case3() -> Check {
    case_check(
        "3.case3",
        "alpha_i = alpha, r_i = 1: (-x y - alpha)^n expanded through S(n,l) (-x y - alpha)_l",
        Verdict::Pass,
        simple_offset_instances(CaseId::second(3)),
    )
}

fn second_case4() -> Check {
    case_check(
        "3.case4",
        "alpha_i = 0, r_i = 1: (-x y)^n expanded through S(n,l) (-x y)_l",
        Verdict::Pass,
        n_k_x_instances(CaseId::second(4), 6, 3, &[None, Some((1, 2))]),
    )
}

fn second_case5() -> Check {
    case_check(
        "3.case5",
        "alpha_i = i - 1, r_i = 1: the integral of (-x_1...x_k)_n versus that of (-(x_1 + ... + x_k))_n, n <= 6, k <= 2",
        Verdict::Mixed,
        n_k_x_instances(CaseId::second(5), 6, 2, &[None]),
    )
}

fn second_case6() -> Check {
    case_check(
        "3.case6",
        "k = 1: the second-kind number versus sum_i (-1)^i S_alpha(n,i;r) Ch_i with the composite S_alpha, fixture specs",
        Verdict::Mixed,
        spec_instances(CaseId::second(6), false),
    )
}

fn second_case7() -> Check {
    case_check(
        "3.case7",
        "r_i = 1, k = 1: the second-kind number versus sum_i (-1)^i S_alpha(n,i) Ch_i, fixture specs",
        Verdict::Mixed,
        spec_instances(CaseId::second(7), true),
    )
}

fn second_case8() -> Check {
    case_check(
        "3.case8",
        "poly-Cauchy second kind equals the box integral of the expanded integrand, specs of length <= 2, k <= 2",
        Verdict::Pass,
        box_instances(CaseId::second(8)),
    )
}

// -------------------------------------------------------------- poly-Cauchy

fn cauchy_first_classical() -> Check {
    let mut c = CheckBuilder::new(
        "poly-cauchy.first.classical",
        "alpha = (0,...,n-1), r = 1, k = 1, l = 1: the value equals the antiderivative of (x)_n over [0,1], n <= 12",
        Verdict::Pass,
    );
    for n in 0..=12 {
        let lhs = poly_cauchy_first(&ParameterSpec::falling(n), 1, &[int(1)]).expect("arity");
        let rhs = Polynomial::falling_factorial(n).definite_integral(&int(0), &int(1));
        c.compare(json!({"n": n}), &lhs, &rhs);
    }
    c.finish()
}

fn cauchy_first_spot_values() -> Check {
    let mut c = CheckBuilder::new(
        "poly-cauchy.first.spot-values",
        "classical Cauchy numbers 1, 1/2, -1/6, 1/4 for n = 0..3",
        Verdict::Pass,
    );
    let expected = [int(1), ratio(1, 2), ratio(-1, 6), ratio(1, 4)];
    for (n, e) in expected.iter().enumerate() {
        let lhs = poly_cauchy_first(&ParameterSpec::falling(n), 1, &[int(1)]).expect("arity");
        c.compare(json!({"n": n}), &lhs, e);
    }
    c.finish()
}

fn cauchy_second_classical() -> Check {
    let mut c = CheckBuilder::new(
        "poly-cauchy.second.classical",
        "alpha = (0,...,n-1), r = 1, k = 1, l = 1: the value equals the antiderivative of (-x)_n over [0,1], n <= 12",
        Verdict::Pass,
    );
    for n in 0..=12 {
        let lhs = poly_cauchy_second(&ParameterSpec::falling(n), 1, &[int(1)]).expect("arity");
        let rhs = Polynomial::falling_factorial(n).rescale(&int(-1)).definite_integral(&int(0), &int(1));
        c.compare(json!({"n": n}), &lhs, &rhs);
    }
    c.finish()
}

fn cauchy_second_spot_value() -> Check {
    let mut c = CheckBuilder::new(
        "poly-cauchy.second.spot-value",
        "alpha = (0,1), r = (1,1), k = 1, l = 1 gives 5/6",
        Verdict::Pass,
    );
    let lhs = poly_cauchy_second(&ParameterSpec::falling(2), 1, &[int(1)]).expect("arity");
    c.compare(json!({"n": 2}), &lhs, &ratio(5, 6));
    c.finish()
}

fn cauchy_reflection() -> Check {
    let mut c = CheckBuilder::new(
        "poly-cauchy.reflection",
        "second kind at (alpha, r) equals (-1)^|r| times the first kind at (-alpha, r), fixture specs, k <= 2",
        Verdict::Pass,
    );
    for spec in specs() {
        for k in 1..=2u32 {
            let wide: Vec<_> = [ratio(1, 2), int(3)].into_iter().take(k as usize).collect();
            for bounds in [vec![int(1); k as usize], wide] {
                let lhs = poly_cauchy_second(spec, k, &bounds).expect("arity");
                let rhs = rational::sign(spec.total_degree())
                    * poly_cauchy_first(&spec.negated(), k, &bounds).expect("arity");
                let inputs = with_spec(spec, json!({"k": k, "bounds": bounds.iter().map(q).collect::<Vec<_>>()}));
                c.compare(inputs, &lhs, &rhs);
            }
        }
    }
    c.finish()
}
