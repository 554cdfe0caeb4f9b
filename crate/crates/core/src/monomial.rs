use alloc::vec::Vec;
use core::fmt;

/// Exponent vector with trailing zeros trimmed, so that equal monomials
/// compare equal regardless of the number of declared variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self(exps)
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut v = alloc::vec![0; i + 1];
        v[i] = e;
        Self(v)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Exponents padded to `n` entries.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn raw(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `Σ e_i · w(i)`.
    pub fn weighted_degree(&self, weight: impl Fn(usize) -> u32) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| e * weight(i)).sum()
    }

    /// Highest variable index that occurs, plus one.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(&short.0) {
            *a += b;
        }
        Monomial(v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut v = other.0.clone();
        for (a, b) in v.iter_mut().zip(&self.0) {
            *a -= b;
        }
        Some(Monomial::from_exponents(v))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::from_exponents((0..n).map(|i| self.exponent(i).max(other.exponent(i))).collect())
    }

    /// Formats as `name_i^e * ...`; `1` for the empty monomial.
    pub fn display_with<'a, F: Fn(usize) -> alloc::string::String>(&'a self, name: F) -> impl fmt::Display + 'a
    where
        F: 'a,
    {
        DisplayMonomial { m: self, name }
    }

    /// All monomials in `nvars` variables of exact degree `d`, in descending
    /// lexicographic order (`x_0^d` first).
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![0u32; nvars];
        fill(&mut out, &mut cur, 0, d);
        out
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial::one());
        }
        return;
    }
    if i == cur.len() - 1 {
        cur[i] = left;
        out.push(Monomial::from_exponents(cur.clone()));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

struct DisplayMonomial<'a, F> {
    m: &'a Monomial,
    name: F,
}

impl<F: Fn(usize) -> alloc::string::String> fmt::Display for DisplayMonomial<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&(self.name)(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    #[test]
    fn trimming_and_arithmetic() {
        let a = Monomial::from_exponents(vec![1, 0, 0]);
        assert_eq!(a, Monomial::var(0));
        let b = Monomial::from_exponents(vec![0, 2]);
        let ab = a.mul(&b);
        assert_eq!(ab.raw(), &[1, 2]);
        assert!(a.divides(&ab) && b.divides(&ab) && !ab.divides(&a));
        assert_eq!(a.quotient_of(&ab), Some(b.clone()));
        assert_eq!(a.lcm(&b), ab);
        assert_eq!(ab.degree(), 3);
        assert_eq!(ab.weighted_degree(|i| i as u32 + 1), 5);
    }

    #[test]
    fn enumeration() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(0, 0), vec![Monomial::one()]);
        assert!(Monomial::all_of_degree(0, 1).is_empty());
        assert_eq!(Monomial::all_of_degree(2, 1), vec![Monomial::var(0), Monomial::var(1)]);
    }

    #[test]
    fn display() {
        let m = Monomial::from_exponents(vec![2, 0, 1]);
        assert_eq!(format!("{}", m.display_with(|i| format!("t{}", i + 1))), "t1^2*t3");
        assert_eq!(format!("{}", Monomial::one().display_with(|i| format!("t{i}"))), "1");
    }
}
