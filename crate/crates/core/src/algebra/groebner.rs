use alloc::collections::VecDeque;
use alloc::vec::Vec;

use num_traits::Zero;

use super::order::{divides, lcm, quotient, Exponents, MonomialOrder, Poly};
use super::AlgebraError;

/// A reduced Gröbner basis of an ideal in a polynomial ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub polys: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn compute(order: MonomialOrder, generators: &[Poly]) -> Result<Self, AlgebraError> {
        let mut g: Vec<Poly> = generators.iter().filter(|p| !p.is_zero()).map(Poly::monic).collect();
        let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
        for j in 0..g.len() {
            for i in 0..j {
                pairs.push_back((i, j));
            }
        }
        while let Some((i, j)) = pairs.pop_front() {
            let (li, lj) = (&g[i].terms[0].0, &g[j].terms[0].0);
            let l = lcm(li, lj);
            // coprime leading monomials reduce to zero
            if l.iter().zip(li).zip(lj).all(|((m, a), b)| *m == a + b) {
                continue;
            }
            let s = spoly(&order, &g[i], &g[j], &l);
            let r = reduce(&order, &s, &g);
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            if r.terms[0].0.iter().all(|&e| e == 0) {
                return Err(AlgebraError::Inconsistent);
            }
            let k = g.len();
            g.push(r);
            for i in 0..k {
                pairs.push_back((i, k));
            }
        }
        if g.iter().any(|p| p.terms[0].0.iter().all(|&e| e == 0)) {
            return Err(AlgebraError::Inconsistent);
        }
        Ok(GroebnerBasis { polys: interreduce(&order, g), order })
    }

    pub fn leads(&self) -> Vec<&Exponents> {
        self.polys.iter().map(|p| &p.terms[0].0).collect()
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        reduce(&self.order, p, &self.polys)
    }

    /// Monomials outside the leading-term ideal, sorted increasingly, or
    /// `None` if there are infinitely many.
    pub fn standard_monomials(&self, nvars: usize) -> Option<Vec<Exponents>> {
        let leads = self.leads();
        let mut bounds = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let b =
                leads.iter().filter(|l| l.iter().enumerate().all(|(k, &e)| k == v || e == 0)).map(|l| l[v]).min()?;
            bounds.push(b);
        }
        let mut out = Vec::new();
        let mut cur = alloc::vec![0u32; nvars];
        loop {
            if !leads.iter().any(|l| divides(l, &cur)) {
                out.push(cur.clone());
            }
            // odometer over the box [0, bound)
            let mut k = 0;
            loop {
                if k == nvars {
                    out.sort_by(|a, b| self.order.cmp(a, b));
                    return Some(out);
                }
                cur[k] += 1;
                if cur[k] < bounds[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

fn spoly(order: &MonomialOrder, f: &Poly, g: &Poly, l: &[u32]) -> Poly {
    let (lf, cf) = &f.terms[0];
    let (lg, cg) = &g.terms[0];
    let left = Poly::zero().sub_scaled_shifted(order, &(-(cg.clone())), &quotient(l, lf), f);
    left.sub_scaled_shifted(order, cf, &quotient(l, lg), g)
}

/// Full reduction: no term of the result is divisible by a leading
/// monomial of `basis`.
pub fn reduce(order: &MonomialOrder, p: &Poly, basis: &[Poly]) -> Poly {
    let mut work = p.clone();
    let mut rem: Vec<(Exponents, crate::scalar::Scalar)> = Vec::new();
    while let Some((e, c)) = work.terms.first().cloned() {
        match basis.iter().find(|g| divides(&g.terms[0].0, &e)) {
            Some(g) => {
                let factor = &c / &g.terms[0].1;
                work = work.sub_scaled_shifted(order, &factor, &quotient(&e, &g.terms[0].0), g);
            }
            None => {
                rem.push((e, c));
                work.terms.remove(0);
            }
        }
    }
    debug_assert!(rem.iter().all(|(_, c)| !c.is_zero()));
    Poly { terms: rem }
}

fn interreduce(order: &MonomialOrder, g: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is a multiple of another's
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let lp = &p.terms[0].0;
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let lq = &q.terms[0].0;
            j != i && divides(lq, lp) && (lq != lp || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        out.push(reduce(order, &minimal[i], &others).monic());
    }
    out.sort_by(|a, b| order.cmp(&a.terms[0].0, &b.terms[0].0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use alloc::vec;

    fn poly(order: &MonomialOrder, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_map(order, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))).collect())
    }

    #[test]
    fn square_free_quotient() {
        // f^2, h^2 - f h, k^2 - (5f - 2h)k - 8fh in variables f, h, k
        let o = MonomialOrder::new(vec![2, 2, 2]);
        let rels = vec![
            poly(&o, &[(&[2, 0, 0], 1)]),
            poly(&o, &[(&[0, 2, 0], 1), (&[1, 1, 0], -1)]),
            poly(&o, &[(&[0, 0, 2], 1), (&[1, 0, 1], -5), (&[0, 1, 1], 2), (&[1, 1, 0], -8)]),
        ];
        let gb = GroebnerBasis::compute(o, &rels).unwrap();
        let std = gb.standard_monomials(3).unwrap();
        assert_eq!(std.len(), 8);
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let o = MonomialOrder::new(vec![2]);
        let rels = vec![poly(&o, &[(&[1], 1), (&[0], -1)]), poly(&o, &[(&[2], 1)])];
        assert!(matches!(GroebnerBasis::compute(o, &rels), Err(AlgebraError::Inconsistent)));
    }

    #[test]
    fn infinite_quotient_has_no_finite_basis() {
        let o = MonomialOrder::new(vec![2, 4]);
        let gb = GroebnerBasis::compute(o, &[poly(&MonomialOrder::new(vec![2, 4]), &[(&[2, 0], 1)])]).unwrap();
        assert!(gb.standard_monomials(2).is_none());
    }
}
