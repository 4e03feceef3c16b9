//! Minimal polynomial and linear complexity of periodic sequences, by the
//! gcd formula and by Berlekamp-Massey.

use crate::error::Result;
use crate::gf::PrimeField;
use crate::poly::Poly;
use crate::sequence::PeriodicSequence;

/// `S(x) = s_0 + s_1 x + ... + s_{n-1} x^{n-1}` over GF(q).
pub fn sequence_poly(s: &PeriodicSequence) -> Result<Poly> {
    let field = PrimeField::new(s.q() as u64)?;
    Ok(Poly::from_coeffs(field, s.values().to_vec()))
}

/// `gcd(x^n - 1, S(x))`; for the zero sequence this is `x^n - 1` itself.
pub fn gcd_with_xn1(s: &PeriodicSequence) -> Result<Poly> {
    let sp = sequence_poly(s)?;
    Poly::gcd(&Poly::x_n_minus_one(sp.field(), s.n()), &sp)
}

/// `(x^n - 1) / gcd(x^n - 1, S(x))`, monic. The zero sequence gives `1`.
///
/// Writing the result as `Σ c_i x^i`, it satisfies `Σ_i c_i s_{j-i} = 0`
/// for every `j` (indices mod `n`).
pub fn minimal_poly(s: &PeriodicSequence) -> Result<Poly> {
    let g = gcd_with_xn1(s)?;
    let xn1 = Poly::x_n_minus_one(g.field(), s.n());
    Ok(xn1.exact_div(&g).expect("gcd divides x^n - 1"))
}

/// `n - deg gcd(x^n - 1, S(x))`.
pub fn linear_complexity(s: &PeriodicSequence) -> Result<usize> {
    let g = gcd_with_xn1(s)?;
    Ok(s.n() - g.degree().unwrap_or(0))
}

/// Whether `Σ_i c_i s_{j-i} = 0` for all `j` in `[deg c, deg c + 2n)`.
pub fn annihilates(c: &Poly, s: &PeriodicSequence) -> bool {
    let f = c.field();
    let n = s.n();
    let deg = match c.degree() {
        Some(d) => d,
        None => return true,
    };
    (deg..deg + 2 * n).all(|j| {
        c.coeffs()
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &ci)| f.add(acc, f.mul(ci, s.at(j - i))))
            == 0
    })
}

/// Shortest LFSR generating `stream`: its length `L` and connection
/// polynomial `C(x) = 1 + c_1 x + ... ` with `Σ_i c_i s_{j-i} = 0` for `j >= L`.
pub fn berlekamp_massey(field: PrimeField, stream: &[u32]) -> (usize, Poly) {
    let mut c = vec![1u32];
    let mut b = vec![1u32];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last_disc = 1u32;
    let p = field.p() as u64;
    // For p < 2^16 every product is below 2^32, so a period's worth of
    // terms can be summed before reducing.
    let lazy = p < 1 << 16;
    for j in 0..stream.len() {
        let terms = (1..=l.min(c.len() - 1)).map(|i| c[i] as u64 * (stream[j - i] as u64 % p));
        let d = if lazy {
            ((stream[j] as u64 % p + terms.sum::<u64>()) % p) as u32
        } else {
            terms.fold(stream[j] as u64 % p, |acc, t| (acc + t % p) % p) as u32
        };
        if d == 0 {
            m += 1;
            continue;
        }
        let coef = field.mul(d, field.inv(last_disc).expect("nonzero discrepancy"));
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, 0);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + m] = field.sub(c[i + m], field.mul(coef, bi));
        }
        if 2 * l <= j {
            l = j + 1 - l;
            b = prev;
            last_disc = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    (l, Poly::from_coeffs(field, c))
}

/// Berlekamp-Massey on exactly two periods.
pub fn berlekamp_massey_periodic(s: &PeriodicSequence) -> Result<(usize, Poly)> {
    let field = PrimeField::new(s.q() as u64)?;
    let stream: Vec<u32> = (0..2 * s.n()).map(|i| s.at(i)).collect();
    Ok(berlekamp_massey(field, &stream))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::WhitemanCyclotomy;
    use crate::sequence::wgcs1;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn all_ones() {
        let s = PeriodicSequence::new(2, vec![1; 91]);
        assert_eq!(linear_complexity(&s).unwrap(), 1);
        assert_eq!(minimal_poly(&s).unwrap().to_human(), "x+1");
        assert_eq!(berlekamp_massey_periodic(&s).unwrap().0, 1);
    }

    #[test]
    fn zero_sequence_convention() {
        let s = PeriodicSequence::new(3, vec![0; 10]);
        assert_eq!(linear_complexity(&s).unwrap(), 0);
        assert_eq!(minimal_poly(&s).unwrap(), Poly::one(gf(3)));
        assert_eq!(berlekamp_massey_periodic(&s).unwrap().0, 0);
        assert!(sequence_poly(&s).unwrap().is_zero());
    }

    #[test]
    fn alternating_stream() {
        let stream: Vec<u32> = (0..20).map(|i| i % 2).collect();
        let (l, c) = berlekamp_massey(gf(2), &stream);
        assert_eq!(l, 2);
        assert_eq!(c.to_human(), "x^2+1");
    }

    #[test]
    fn wgcs1_7_13() {
        let s = wgcs1(&WhitemanCyclotomy::new(7, 13).unwrap());
        let sp = sequence_poly(&s).unwrap();
        assert_eq!(sp.weight(), 48);
        assert_eq!(sp.coeff(7), 1);
        assert_eq!(gcd_with_xn1(&s).unwrap().degree(), Some(19));
        let m = minimal_poly(&s).unwrap();
        assert_eq!(m.degree(), Some(72));
        assert!(m.divides(&Poly::x_n_minus_one(gf(2), 91)));
        assert!(annihilates(&m, &s));
        let (l, conn) = berlekamp_massey_periodic(&s).unwrap();
        assert_eq!(l, 72);
        assert_eq!(conn, m.scale(gf(2).inv(m.coeff(0)).unwrap()));
    }

    #[test]
    fn wgcs1_7_31_binary() {
        let s = wgcs1(&WhitemanCyclotomy::new(7, 31).unwrap());
        assert_eq!(linear_complexity(&s).unwrap(), 96);
        assert_eq!(berlekamp_massey_periodic(&s).unwrap().0, 96);
    }

    proptest! {
        #[test]
        fn gcd_route_matches_bm(p in prop::sample::select(vec![2u32, 3, 5, 7]), vals in prop::collection::vec(0u32..7, 1..60)) {
            let s = PeriodicSequence::new(p, vals);
            let lc = linear_complexity(&s).unwrap();
            let (l, conn) = berlekamp_massey_periodic(&s).unwrap();
            prop_assert_eq!(lc, l);
            let m = minimal_poly(&s).unwrap();
            prop_assert_eq!(m.degree().unwrap_or(0), lc);
            prop_assert!(annihilates(&m, &s));
            prop_assert!(annihilates(&conn, &s));
        }
    }
}
