/// Complete elliptic integral of the first kind `K(k)` as a function of
/// `k^2`, by the arithmetic-geometric mean: `K = pi / (2 agm(1, k'))`.
pub fn complete_elliptic_k(k2: f64) -> f64 {
    assert!((0.0..1.0).contains(&k2), "modulus squared must lie in [0, 1)");
    let mut a = 1.0f64;
    let mut b = (1.0 - k2).sqrt();
    for _ in 0..60 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    std::f64::consts::FRAC_PI_2 / a
}

/// Jacobi elliptic functions `(sn, cn, dn)(u, k)` given `k^2`, by descending
/// Landen transformation over the AGM scale.
pub fn jacobi_sncndn(u: f64, k2: f64) -> (f64, f64, f64) {
    sncndn(u, 1.0 - k2)
}

/// Classic AGM backward-recurrence evaluation; `emmc` is the complementary
/// parameter `1 - k^2`.
fn sncndn(uu: f64, emmc: f64) -> (f64, f64, f64) {
    const CA: f64 = 1.0e-8; // accuracy ~ CA^2
    let mut emc = emmc;
    let mut u = uu;
    let (mut sn, mut cn, mut dn);
    if emc != 0.0 {
        let bo = emc < 0.0;
        let mut d = 1.0;
        if bo {
            d = 1.0 - emc;
            emc /= -1.0 / d;
            d = d.sqrt();
            u *= d;
        }
        let mut a = 1.0;
        dn = 1.0;
        let mut em = [0.0f64; 16];
        let mut en = [0.0f64; 16];
        let mut l = 0;
        let mut c = 0.0;
        for i in 1..=15 {
            l = i;
            em[i] = a;
            emc = emc.sqrt();
            en[i] = emc;
            c = 0.5 * (a + emc);
            if (a - emc).abs() <= CA * a {
                break;
            }
            emc *= a;
            a = c;
        }
        u *= c;
        sn = u.sin();
        cn = u.cos();
        if sn != 0.0 {
            a = cn / sn;
            c *= a;
            for ii in (1..=l).rev() {
                let b = em[ii];
                a *= c;
                c *= dn;
                dn = (en[ii] + a) / (b + a);
                a = c / b;
            }
            a = 1.0 / (c * c + 1.0).sqrt();
            sn = if sn >= 0.0 { a } else { -a };
            cn = c * sn;
        }
        if bo {
            let t = dn;
            dn = cn;
            cn = t;
            sn /= d;
        }
    } else {
        cn = 1.0 / u.cosh();
        dn = cn;
        sn = u.tanh();
    }
    (sn, cn, dn)
}
