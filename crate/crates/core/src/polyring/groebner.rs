//! Buchberger completion with the sugar selection strategy and the
//! Gebauer–Möller installation of the product and chain criteria.

use std::time::{Duration, Instant};

use num_traits::One;

use super::division::reduce;
use super::{Monomial, MonomialOrder, Polynomial, PolynomialRing, Rational};
use crate::error::{BudgetExhausted, BudgetKind};
use crate::{Error, Result};

/// Resource limits for a single Gröbner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pair reductions.
    pub max_steps: Option<u64>,
    pub timeout: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 2_000_000;
    pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);

    pub fn unlimited() -> Self {
        Budget { max_steps: None, timeout: None }
    }

    pub fn new(max_steps: Option<u64>, timeout: Option<Duration>) -> Self {
        Budget { max_steps, timeout }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: Some(Self::DEFAULT_STEPS), timeout: Some(Self::DEFAULT_TIMEOUT) }
    }
}

/// Running usage against a [`Budget`].
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    steps: u64,
    ticks: u32,
}

impl Meter {
    pub(crate) fn new(budget: &Budget) -> Self {
        Meter { budget: *budget, start: Instant::now(), steps: 0, ticks: 0 }
    }

    fn exhausted(&self, kind: BudgetKind) -> Error {
        Error::Budget(BudgetExhausted { kind, steps: self.steps, elapsed: self.start.elapsed() })
    }

    fn check_time(&self) -> Result<()> {
        match self.budget.timeout {
            Some(t) if self.start.elapsed() > t => Err(self.exhausted(BudgetKind::Time)),
            _ => Ok(()),
        }
    }

    /// One S-pair reduction.
    pub(crate) fn step(&mut self) -> Result<()> {
        if let Some(max) = self.budget.max_steps {
            if self.steps >= max {
                return Err(self.exhausted(BudgetKind::Steps));
            }
        }
        self.steps += 1;
        self.check_time()
    }

    /// One elementary reduction; checks the clock every 64 calls.
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(64) {
            self.check_time()
        } else {
            Ok(())
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    /// Ring with the basis order, same variables as the generators.
    ring: PolynomialRing,
    elements: Vec<Polynomial>,
    generators: Vec<Polynomial>,
    /// `elements[k] = Σ cofactors[k][i]·generators[i]`, when tracked.
    cofactors: Option<Vec<Vec<Polynomial>>>,
    steps: u64,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Ring carrying the basis' monomial order.
    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    /// Monic elements sorted by descending leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    /// S-pair reductions spent.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The unit ideal: basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements.iter().map(|e| e.leading_monomial().expect("nonzero")).collect()
    }

    /// Normal form of `p` (any ring with the same variables); result in `p`'s ring.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.ring().same_variables(&self.ring) {
            return Err(Error::contract(format!("{} is not over {}", p, self.ring)));
        }
        let pw = p.to_ring(&self.ring)?;
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        let (r, _) = reduce(&pw, &refs, false, None)?;
        r.to_ring(p.ring())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Expresses `p` in terms of the original generators when `p` lies in the
    /// ideal and cofactors were tracked. Cofactors are in `p`'s ring.
    pub fn lift(&self, p: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        let Some(cofs) = &self.cofactors else {
            return Err(Error::contract("basis was computed without cofactor tracking"));
        };
        let pw = p.to_ring(&self.ring)?;
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        let (r, q) = reduce(&pw, &refs, true, None)?;
        if !r.is_zero() {
            return Ok(None);
        }
        let mut out = vec![Polynomial::zero(&self.ring); self.generators.len()];
        for (qk, cof_k) in q.expect("requested").into_iter().zip(cofs) {
            if qk.is_empty() {
                continue;
            }
            let qk = Polynomial::from_sorted(&self.ring, qk);
            for (o, c) in out.iter_mut().zip(cof_k) {
                *o = &*o + &(&qk * c);
            }
        }
        out.into_iter().map(|c| c.to_ring(p.ring())).collect::<Result<Vec<_>>>().map(Some)
    }
}

/// `lcm/lt(f)·f − lcm/lt(g)·g` (leading coefficients normalized).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (fm, fc) = f.leading_term().ok_or_else(|| Error::contract("S-polynomial of zero"))?;
    let (gm, gc) = g.leading_term().ok_or_else(|| Error::contract("S-polynomial of zero"))?;
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.checked_div(fm).unwrap(), &fc.recip());
    let b = g.mul_term(&l.checked_div(gm).unwrap(), &gc.recip());
    a.checked_sub(&b)
}

struct Entry {
    poly: Polynomial,
    lm: Monomial,
    sugar: u32,
    /// Cofactors w.r.t. the input generators.
    cof: Option<Vec<Polynomial>>,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: PolynomialRing,
    entries: Vec<Entry>,
    /// Indices into `entries` of the current (minimal) basis.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    meter: Meter,
    track: bool,
}

impl Engine {
    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        let (a, b) = (&self.entries[i], &self.entries[j]);
        (a.sugar + d - a.lm.degree()).max(b.sugar + d - b.lm.degree())
    }

    /// Gebauer–Möller update after installing entry `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.entries[h].lm.clone();
        let candidates: Vec<(usize, Monomial)> =
            self.basis.iter().map(|&g| (g, lm_h.lcm(&self.entries[g].lm))).collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g1, l1)) in candidates.iter().enumerate() {
            let coprime = lm_h.is_coprime(&self.entries[*g1].lm);
            let dominated = candidates[k + 1..].iter().any(|(_, l2)| l2.divides(l1))
                || kept.iter().any(|(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lm_h.is_coprime(&self.entries[*g].lm))
            .map(|(g, lcm)| Pair { i: g, j: h, sugar: self.pair_sugar(g, h, &lcm), lcm })
            .collect();

        // chain criterion on the old pairs
        let entries = &self.entries;
        self.pairs.retain(|p| {
            !lm_h.divides(&p.lcm)
                || lm_h.lcm(&entries[p.i].lm) == p.lcm
                || lm_h.lcm(&entries[p.j].lm) == p.lcm
        });
        self.pairs.extend(new_pairs);

        self.basis.retain(|&g| !lm_h.divides(&entries[g].lm));
        self.basis.push(h);
    }

    fn reduce_against_basis(&mut self, p: &Polynomial, cof: Option<Vec<Polynomial>>) -> Result<(Polynomial, Option<Vec<Polynomial>>)> {
        let refs: Vec<&Polynomial> = self.basis.iter().map(|&k| &self.entries[k].poly).collect();
        let (r, q) = reduce(p, &refs, self.track, Some(&mut self.meter))?;
        let cof = match (cof, q) {
            (Some(mut c), Some(q)) => {
                for (qk, &bk) in q.into_iter().zip(&self.basis) {
                    if qk.is_empty() {
                        continue;
                    }
                    let qk = Polynomial::from_sorted(&self.ring, qk);
                    let bc = self.entries[bk].cof.as_ref().expect("tracked");
                    for (ci, bci) in c.iter_mut().zip(bc) {
                        *ci = &*ci - &(&qk * bci);
                    }
                }
                Some(c)
            }
            _ => None,
        };
        Ok((r, cof))
    }

    /// Makes `p` monic, records it and runs the pair update.
    fn install(&mut self, p: Polynomial, cof: Option<Vec<Polynomial>>, sugar: u32) -> usize {
        let lc = p.leading_coefficient().expect("nonzero").recip();
        let poly = p.scale(&lc);
        let cof = cof.map(|c| c.iter().map(|x| x.scale(&lc)).collect());
        let lm = poly.leading_monomial().unwrap().clone();
        self.entries.push(Entry { poly, lm, sugar, cof });
        let h = self.entries.len() - 1;
        self.update(h);
        h
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.compare(a.lcm.exponents(), b.lcm.exponents()))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> (Polynomial, Option<Vec<Polynomial>>) {
        let (a, b) = (&self.entries[pair.i], &self.entries[pair.j]);
        let one = Rational::one();
        let ma = pair.lcm.checked_div(&a.lm).unwrap();
        let mb = pair.lcm.checked_div(&b.lm).unwrap();
        let s = &a.poly.mul_term(&ma, &one) - &b.poly.mul_term(&mb, &one);
        let cof = match (&a.cof, &b.cof) {
            (Some(ca), Some(cb)) => Some(
                ca.iter()
                    .zip(cb)
                    .map(|(x, y)| &x.mul_term(&ma, &one) - &y.mul_term(&mb, &one))
                    .collect(),
            ),
            _ => None,
        };
        (s, cof)
    }
}

/// Reduced Gröbner basis of `⟨generators⟩` under `order`.
///
/// Zero generators are ignored; an empty or all-zero list yields the empty
/// basis of the zero ideal. Stops with [`Error::Budget`] when `budget` runs
/// out.
pub fn reduced_groebner_basis(generators: &[Polynomial], order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    compute(generators, order, budget, false)
}

/// Like [`reduced_groebner_basis`], additionally tracking for every basis
/// element its cofactors with respect to the input generators.
pub fn reduced_groebner_basis_with_cofactors(
    generators: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    compute(generators, order, budget, true)
}

fn compute(generators: &[Polynomial], order: &MonomialOrder, budget: &Budget, track: bool) -> Result<GroebnerBasis> {
    let Some(first) = generators.first() else {
        return Err(Error::contract("at least one generator (possibly zero) is required"));
    };
    let home = first.ring().clone();
    if let Some(bad) = generators.iter().find(|g| !g.ring().same_variables(&home)) {
        return Err(Error::contract(format!("generator {} is not over {}", bad, home)));
    }
    let ring = home.with_order(order.clone())?;
    let gens: Vec<Polynomial> = generators.iter().map(|g| g.to_ring(&ring)).collect::<Result<_>>()?;
    let n = gens.len();

    let mut eng = Engine {
        ring: ring.clone(),
        entries: Vec::new(),
        basis: Vec::new(),
        pairs: Vec::new(),
        meter: Meter::new(budget),
        track,
    };

    let unit_cof = |k: usize| -> Vec<Polynomial> {
        (0..n).map(|i| if i == k { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }).collect()
    };

    // install inputs in ascending order of leading monomial so later ones
    // rarely make earlier ones redundant
    let mut idx: Vec<usize> = (0..n).filter(|&k| !gens[k].is_zero()).collect();
    idx.sort_by(|&a, &b| {
        order.compare(gens[a].leading_monomial().unwrap().exponents(), gens[b].leading_monomial().unwrap().exponents())
    });
    let mut unit: Option<(Polynomial, Option<Vec<Polynomial>>)> = None;
    for k in idx {
        let cof = track.then(|| unit_cof(k));
        let (r, cof) = eng.reduce_against_basis(&gens[k], cof)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            unit = Some((r, cof));
            break;
        }
        let sugar = r.total_degree().unwrap();
        eng.install(r, cof, sugar);
    }

    while unit.is_none() {
        let Some(pair) = eng.select_pair() else { break };
        eng.meter.step()?;
        let (s, cof) = eng.spoly(&pair);
        let (r, cof) = eng.reduce_against_basis(&s, cof)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            unit = Some((r, cof));
            break;
        }
        eng.install(r, cof, pair.sugar);
    }

    let steps = eng.meter.steps;
    let (elements, cofactors) = match unit {
        Some((c, cof)) => {
            let inv = c.constant_value().unwrap().recip();
            let cof = cof.map(|v| vec![v.iter().map(|x| x.scale(&inv)).collect::<Vec<_>>()]);
            (vec![Polynomial::one(&ring)], cof)
        }
        None => interreduce(&mut eng)?,
    };
    Ok(GroebnerBasis { order: order.clone(), ring, elements, generators: gens, cofactors, steps })
}

/// Tail-reduces the minimal basis and sorts it by descending leading monomial.
#[allow(clippy::type_complexity)]
fn interreduce(eng: &mut Engine) -> Result<(Vec<Polynomial>, Option<Vec<Vec<Polynomial>>>)> {
    let order = eng.ring.order().clone();
    let mut basis = eng.basis.clone();
    basis.sort_by(|&a, &b| order.compare(eng.entries[b].lm.exponents(), eng.entries[a].lm.exponents()));
    let mut elems = Vec::with_capacity(basis.len());
    let mut cofs = eng.track.then(Vec::new);
    for &k in &basis {
        let e = &eng.entries[k];
        let head = Polynomial::monomial(&eng.ring, e.lm.clone(), e.poly.leading_coefficient().unwrap().clone());
        let tail = &e.poly - &head;
        let others: Vec<&Polynomial> = basis.iter().filter(|&&o| o != k).map(|&o| &eng.entries[o].poly).collect();
        let (r, q) = reduce(&tail, &others, eng.track, Some(&mut eng.meter))?;
        let reduced = &head + &r;
        if let Some(cofs) = cofs.as_mut() {
            let mut c = e.cof.clone().expect("tracked");
            let other_idx: Vec<usize> = basis.iter().copied().filter(|&o| o != k).collect();
            for (qk, o) in q.expect("tracked").into_iter().zip(other_idx) {
                if qk.is_empty() {
                    continue;
                }
                let qk = Polynomial::from_sorted(&eng.ring, qk);
                for (ci, oc) in c.iter_mut().zip(eng.entries[o].cof.as_ref().unwrap()) {
                    *ci = &*ci - &(&qk * oc);
                }
            }
            cofs.push(c);
        }
        debug_assert!(reduced.leading_coefficient().map(|c| c.is_one()).unwrap_or(false));
        elems.push(reduced);
    }
    debug_assert!(elems.iter().all(|e| !e.is_zero()));
    Ok((elems, cofs))
}
