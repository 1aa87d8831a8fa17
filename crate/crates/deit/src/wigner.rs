//! Wigner 3j and 6j symbols for half-integer angular momenta.
//!
//! Arguments are passed as doubled integers (`two_j = 2j`) so that
//! half-integer momenta stay exact. Racah's closed forms with cached
//! factorials cover every case needed here (j of order 10 at most).

const MAX_FACT: usize = 170;

fn factorial(n: i32) -> f64 {
    debug_assert!(n >= 0 && (n as usize) < MAX_FACT);
    static TABLE: std::sync::OnceLock<Vec<f64>> = std::sync::OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut v = vec![1.0f64; MAX_FACT];
        for i in 1..MAX_FACT {
            v[i] = v[i - 1] * i as f64;
        }
        v
    });
    t[n as usize]
}

fn triangle_ok(two_a: i32, two_b: i32, two_c: i32) -> bool {
    two_c >= (two_a - two_b).abs() && two_c <= two_a + two_b && (two_a + two_b + two_c) % 2 == 0
}

/// sqrt of the triangle coefficient Delta(a, b, c).
fn triangle_coeff(two_a: i32, two_b: i32, two_c: i32) -> f64 {
    let f = |x: i32| factorial(x / 2);
    (f(two_a + two_b - two_c) * f(two_a - two_b + two_c) * f(-two_a + two_b + two_c)
        / f(two_a + two_b + two_c + 2))
    .sqrt()
}

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3), all arguments doubled.
pub fn wigner_3j(
    two_j1: i32,
    two_j2: i32,
    two_j3: i32,
    two_m1: i32,
    two_m2: i32,
    two_m3: i32,
) -> f64 {
    if two_m1 + two_m2 + two_m3 != 0
        || !triangle_ok(two_j1, two_j2, two_j3)
        || two_m1.abs() > two_j1
        || two_m2.abs() > two_j2
        || two_m3.abs() > two_j3
        || (two_j1 + two_m1) % 2 != 0
        || (two_j2 + two_m2) % 2 != 0
        || (two_j3 + two_m3) % 2 != 0
    {
        return 0.0;
    }
    let f = |x: i32| factorial(x / 2);
    let prefactor = triangle_coeff(two_j1, two_j2, two_j3)
        * (f(two_j1 + two_m1)
            * f(two_j1 - two_m1)
            * f(two_j2 + two_m2)
            * f(two_j2 - two_m2)
            * f(two_j3 + two_m3)
            * f(two_j3 - two_m3))
        .sqrt();
    let t_min = 0
        .max(two_j2 - two_j3 - two_m1)
        .max(two_j1 - two_j3 + two_m2);
    let t_max = (two_j1 + two_j2 - two_j3)
        .min(two_j1 - two_m1)
        .min(two_j2 + two_m2);
    let mut sum = 0.0;
    let mut two_t = t_min;
    while two_t <= t_max {
        let denom = f(two_t)
            * f(two_j3 - two_j2 + two_m1 + two_t)
            * f(two_j3 - two_j1 - two_m2 + two_t)
            * f(two_j1 + two_j2 - two_j3 - two_t)
            * f(two_j1 - two_m1 - two_t)
            * f(two_j2 + two_m2 - two_t);
        let sign = if (two_t / 2) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign / denom;
        two_t += 2;
    }
    let phase = if ((two_j1 - two_j2 - two_m3) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    phase * prefactor * sum
}

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, all arguments doubled.
pub fn wigner_6j(
    two_j1: i32,
    two_j2: i32,
    two_j3: i32,
    two_j4: i32,
    two_j5: i32,
    two_j6: i32,
) -> f64 {
    if !triangle_ok(two_j1, two_j2, two_j3)
        || !triangle_ok(two_j1, two_j5, two_j6)
        || !triangle_ok(two_j4, two_j2, two_j6)
        || !triangle_ok(two_j4, two_j5, two_j3)
    {
        return 0.0;
    }
    let f = |x: i32| factorial(x / 2);
    let prefactor = triangle_coeff(two_j1, two_j2, two_j3)
        * triangle_coeff(two_j1, two_j5, two_j6)
        * triangle_coeff(two_j4, two_j2, two_j6)
        * triangle_coeff(two_j4, two_j5, two_j3);
    let a1 = two_j1 + two_j2 + two_j3;
    let a2 = two_j1 + two_j5 + two_j6;
    let a3 = two_j4 + two_j2 + two_j6;
    let a4 = two_j4 + two_j5 + two_j3;
    let b1 = two_j1 + two_j2 + two_j4 + two_j5;
    let b2 = two_j2 + two_j3 + two_j5 + two_j6;
    let b3 = two_j3 + two_j1 + two_j6 + two_j4;
    let t_min = a1.max(a2).max(a3).max(a4);
    let t_max = b1.min(b2).min(b3);
    let mut sum = 0.0;
    let mut two_t = t_min;
    while two_t <= t_max {
        let num = factorial(two_t / 2 + 1);
        let denom = f(two_t - a1)
            * f(two_t - a2)
            * f(two_t - a3)
            * f(two_t - a4)
            * f(b1 - two_t)
            * f(b2 - two_t)
            * f(b3 - two_t);
        let sign = if (two_t / 2) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * num / denom;
        two_t += 2;
    }
    prefactor * sum
}

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j3 m3>, arguments doubled.
pub fn clebsch_gordan(
    two_j1: i32,
    two_m1: i32,
    two_j2: i32,
    two_m2: i32,
    two_j3: i32,
    two_m3: i32,
) -> f64 {
    let phase = if ((two_j1 - two_j2 + two_m3) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    phase
        * ((two_j3 + 1) as f64).sqrt()
        * wigner_3j(two_j1, two_j2, two_j3, two_m1, two_m2, -two_m3)
}
