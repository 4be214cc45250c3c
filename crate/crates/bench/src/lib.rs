//! Fixtures shared by the engine benchmarks.

use ciext::{Poly, PolyRing, Rationals, Result};

/// Ring `k[x0..xn]` with the 2×2 minors of the Hankel matrix `[[x0..x(n-1)], [x1..xn]]`,
/// the ideal of the rational normal curve of degree `n`.
pub fn rational_normal_curve(n: usize) -> Result<(PolyRing<Rationals>, Vec<Poly<Rationals>>)> {
    let names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let q = PolyRing::standard(Rationals, &refs)?;
    let mut minors = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = q.mul(&q.var(i), &q.var(j + 1));
            let b = q.mul(&q.var(j), &q.var(i + 1));
            minors.push(q.sub(&a, &b));
        }
    }
    Ok((q, minors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_has_three_minors() {
        let (_, m) = rational_normal_curve(3).unwrap();
        assert_eq!(m.len(), 3);
    }
}
