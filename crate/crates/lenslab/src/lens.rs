//! Folding combinatorics and lens space identification.
//!
//! Closing a layered solid torus by identifying its two boundary faces
//! across a chosen boundary edge produces a lens space; which one is pure
//! arithmetic on the meridian triple. Gluing two layered solid tori along
//! their boundaries reduces to the same arithmetic by repeatedly undoing
//! layerings on one side while pushing the correspondence through on the
//! other.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lst::{EdgeId, LayeredPath, MaterializedLst};
use crate::slope::{big, LVertex, SlopeTriple};
use crate::tri::Triangulation;

/// A lens space L(X,Y). The displayed second parameter is the reading the
/// construction produced, normalized to min(Y, X-Y); equality and hashing
/// go through the canonical representative, the least of +/-Y^{+/-1}
/// mod X. X = 0 is the sphere bundle over the circle, X = 1 the 3-sphere.
#[derive(Debug, Clone)]
pub struct LensSpace {
    x: BigUint,
    y: BigUint,
    y_canonical: BigUint,
}

impl PartialEq for LensSpace {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y_canonical == other.y_canonical
    }
}
impl Eq for LensSpace {}

impl std::hash::Hash for LensSpace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y_canonical.hash(state);
    }
}

impl LensSpace {
    pub fn new(x: &BigUint, y: &BigUint) -> Result<LensSpace> {
        if x.is_zero() {
            if y.is_one() {
                return Ok(LensSpace {
                    x: BigUint::zero(),
                    y: BigUint::one(),
                    y_canonical: BigUint::one(),
                });
            }
            return Err(Error::InvalidFraction(y.to_string(), x.to_string()));
        }
        if x.is_one() {
            return Ok(LensSpace {
                x: BigUint::one(),
                y: BigUint::zero(),
                y_canonical: BigUint::zero(),
            });
        }
        let y0 = y % x;
        if !y0.gcd(x).is_one() {
            return Err(Error::NotCoprime(x.to_string(), y.to_string()));
        }
        let inv = mod_inverse(&y0, x).expect("unit mod x");
        let mut best = y0.clone();
        for cand in [&y0, &inv] {
            let neg = x - cand;
            if *cand < best {
                best = cand.clone();
            }
            if neg < best {
                best = neg;
            }
        }
        let display = (&y0).min(&(x - &y0)).clone();
        Ok(LensSpace { x: x.clone(), y: display, y_canonical: best })
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    /// The displayed representative, min(Y, X-Y).
    pub fn y(&self) -> &BigUint {
        &self.y
    }

    /// The least representative under negation and inversion mod X.
    pub fn y_canonical(&self) -> &BigUint {
        &self.y_canonical
    }

    pub fn is_sphere(&self) -> bool {
        self.x.is_one()
    }

    pub fn is_sphere_bundle(&self) -> bool {
        self.x.is_zero()
    }

    /// Expected order of first homology (`None` for infinite).
    pub fn h1_order(&self) -> Option<BigUint> {
        if self.x.is_zero() {
            None
        } else {
            Some(self.x.clone())
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.x, self.y)
    }
}

/// Fully canonical form: the displayed representative is the least of
/// +/-Y^{+/-1} mod X.
pub fn canonicalize(x: &BigUint, y: &BigUint) -> Result<LensSpace> {
    let l = LensSpace::new(x, y)?;
    Ok(LensSpace { x: l.x.clone(), y: l.y_canonical.clone(), y_canonical: l.y_canonical })
}

pub fn canonicalize_u64(x: u64, y: u64) -> Result<LensSpace> {
    canonicalize(&big(x), &big(y))
}

pub fn equivalent(a: &LensSpace, b: &LensSpace) -> bool {
    a == b
}

/// The relation proved by reversing a layered description alone:
/// same X and Y*Y' = +/-1 (mod X), without closing under negation.
pub fn related_by_reversal(x: &BigUint, y: &BigUint, y2: &BigUint) -> bool {
    if x.is_zero() {
        return y.is_one() && y2.is_one();
    }
    if x.is_one() {
        return true;
    }
    let prod = (y * y2) % x;
    prod.is_one() || (&prod + 1u32) % x == BigUint::zero()
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    let mut x = e.x % &m;
    if x.is_negative() {
        x += &m;
    }
    x.to_biguint()
}

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => unreachable!(),
    }
}

/// Fold the boundary of a layered solid torus across the edge in `slot`.
/// With u, v the meridian counts of the two other boundary edges, X is
/// u + v when the folded entry is not the sum, |u - v| when it is, and
/// Y is either of u, v.
pub fn fold_symbolic(lp: &LayeredPath, slot: usize) -> Result<LensSpace> {
    fold_triple(lp.meridian(), slot)
}

pub fn fold_triple(m: &SlopeTriple, slot: usize) -> Result<LensSpace> {
    if slot > 2 {
        return Err(Error::Invalid("fold slot must be 0, 1 or 2".into()));
    }
    let (i, j) = others(slot);
    let (u, v) = (m.entry(i), m.entry(j));
    let x = if slot == m.sum_index() {
        if u >= v {
            u - v
        } else {
            v - u
        }
    } else {
        u + v
    };
    let y = if x.is_zero() { BigUint::one() } else { u.clone() };
    LensSpace::new(&x, &y)
}

/// The lens space obtained by pinching the boundary along the edge in
/// `slot` (attaching the collapsed one-tetrahedron filling): X is the
/// meridian count of the pinched edge.
pub fn pinch_triple(m: &SlopeTriple, slot: usize) -> Result<LensSpace> {
    let (i, j) = others(slot);
    let x = m.entry(slot);
    let y = if x.is_zero() { BigUint::one() } else { m.entry(i).max(m.entry(j)).clone() };
    LensSpace::new(x, &y)
}

/// A simplicial identification of the boundaries of two layered solid
/// tori, given by their meridian triples and a slot pairing.
#[derive(Debug, Clone)]
pub struct GluingSpec {
    pub a: SlopeTriple,
    pub b: SlopeTriple,
    /// pairing[i] is the b-slot identified with a-slot i.
    pub pairing: [usize; 3],
}

impl GluingSpec {
    pub fn positional(a: SlopeTriple, b: SlopeTriple) -> GluingSpec {
        GluingSpec { a, b, pairing: [0, 1, 2] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Terminal {
    Base,    // {1,1,2}: a folding over the M\u{f6}bius band
    Creased, // {0,1,1}: a pinching
}

fn terminal(t: &SlopeTriple) -> Option<Terminal> {
    let mut e: Vec<&BigUint> = t.entries().iter().collect();
    e.sort();
    if e[0].is_one() && e[1].is_one() && *e[2] == big(2) {
        Some(Terminal::Base)
    } else if e[0].is_zero() && e[1].is_one() && e[2].is_one() {
        Some(Terminal::Creased)
    } else {
        None
    }
}

/// Reduce a gluing of two layered solid tori to a fold or pinch and read
/// the lens space off. One side is stripped a layer at a time (its sum
/// entry replaced by the difference) while the pairing pushes the
/// corresponding slot through on the other side. Which side is stripped
/// does not change the answer; we strip the one with the larger entry sum.
pub fn identify_gluing(spec: &GluingSpec) -> Result<LensSpace> {
    let mut sorted = spec.pairing;
    sorted.sort();
    if sorted != [0, 1, 2] {
        return Err(Error::Invalid(format!("pairing {:?} is not a permutation", spec.pairing)));
    }
    // Reject non-coprime triples: the stripping walk would stall on them.
    for t in [&spec.a, &spec.b] {
        SlopeTriple::slope(t.entries().clone())?;
    }
    let sum_a: BigUint = spec.a.entries().iter().sum();
    let sum_b: BigUint = spec.b.entries().iter().sum();
    if sum_a >= sum_b {
        identify_reducing_left(spec.a.clone(), spec.b.clone(), spec.pairing)
    } else {
        let mut inv = [0usize; 3];
        for i in 0..3 {
            inv[spec.pairing[i]] = i;
        }
        identify_reducing_left(spec.b.clone(), spec.a.clone(), inv)
    }
}

fn identify_reducing_left(
    mut a: SlopeTriple,
    mut b: SlopeTriple,
    pairing: [usize; 3],
) -> Result<LensSpace> {
    loop {
        if let Some(t) = terminal(&a) {
            return read_off(t, &a, &b, &pairing);
        }
        if let Some(t) = terminal(&b) {
            let mut inv = [0usize; 3];
            for i in 0..3 {
                inv[pairing[i]] = i;
            }
            return read_off(t, &b, &a, &inv);
        }
        let s = a.sum_index();
        a = a.push_through(s);
        b = b.push_through(pairing[s]);
    }
}

fn read_off(
    kind: Terminal,
    term: &SlopeTriple,
    other: &SlopeTriple,
    pairing: &[usize; 3],
) -> Result<LensSpace> {
    match kind {
        Terminal::Base => {
            let slot = term.position_of(&big(2), None).expect("a 2 entry");
            fold_triple(other, pairing[slot])
        }
        Terminal::Creased => {
            let slot = term.position_of(&BigUint::zero(), None).expect("a 0 entry");
            pinch_triple(other, pairing[slot])
        }
    }
}

/// The same lens space description viewed from the other side: undo this
/// side's layerings while carrying the fold through, and return the other
/// side's layered path together with its fold slot.
pub fn reverse_description(lp: &LayeredPath, slot: usize) -> Result<(LayeredPath, usize)> {
    if slot > 2 {
        return Err(Error::Invalid("fold slot must be 0, 1 or 2".into()));
    }
    // Relabel the shared slots so the M\u{f6}bius 2-entry sits at slot 2, as
    // the layered-path convention requires of its base.
    let mut rho = [0usize; 3];
    rho[slot] = 2;
    let mut next = 0;
    for k in 0..3 {
        if k != slot {
            rho[k] = next;
            next += 1;
        }
    }
    let moves: Vec<usize> = lp.moves().iter().rev().map(|&m| rho[m]).collect();
    let reversed = LayeredPath::from_moves(&moves)?;
    Ok((reversed, rho[2]))
}

/// Build a layered description of L(X,Y): the minimal layered solid torus
/// whose boundary triple contains X-2Y (or 2Y-X), folded there.
pub fn build_lens(x: &BigUint, y: &BigUint) -> Result<(LayeredPath, usize)> {
    if x.is_zero() {
        if !y.is_one() {
            return Err(Error::InvalidFraction(y.to_string(), x.to_string()));
        }
        // The two-tetrahedron extension of 1/1, folded over its rim.
        return Ok((LayeredPath::from_moves(&[0, 0])?, 2));
    }
    let y = y % x;
    if x.is_one() {
        // One-tetrahedron solid torus folded over its univalent edge.
        let lp = LayeredPath::build_minimal(&LVertex::from_u64(1, 2)?)?;
        let slot = lp.meridian().sum_index();
        return Ok((lp, slot));
    }
    if !x.gcd(&y).is_one() {
        return Err(Error::NotCoprime(x.to_string(), y.to_string()));
    }
    if *x == big(2) {
        // The two-tetrahedron extension of 0/1, folded over the 0 edge.
        return Ok((LayeredPath::from_moves(&[2, 1])?, 2));
    }
    let two_y = &y + &y;
    // Boundary triples {X-2Y, Y, X-Y} resp. {X-Y, 2Y-X, Y}; the sum entry
    // is X-Y resp. Y, so the extended class comes from the other two.
    let (fold_count, a, b) = if two_y <= *x {
        (x - &two_y, x - &two_y, y.clone())
    } else {
        (&two_y - x, &two_y - x, x - &y)
    };
    let (p, q) = if a <= b { (a, b) } else { (b, a) };
    let lp = if p == q {
        // X = 3Y or 3(X-Y): boundary {1,1,2}; the two-tetrahedron
        // extension of 1/1 stands in for the bare base.
        LayeredPath::from_moves(&[0, 0])?
    } else {
        LayeredPath::build_minimal(&LVertex::new(p, q)?)?
    };
    let avoid = lp.univalent_slot();
    let slot = lp
        .meridian()
        .position_of(&fold_count, avoid)
        .ok_or_else(|| Error::Invalid(format!("no boundary edge of count {fold_count}")))?;
    Ok((lp, slot))
}

pub fn build_lens_u64(x: u64, y: u64) -> Result<(LayeredPath, usize)> {
    build_lens(&big(x), &big(y))
}

/// Number of even-order edges in the minimal layered solid torus of p/q,
/// by the subtraction recursion grounded at e(1,1) = 1.
pub fn even_edge_count(p: u64, q: u64) -> Result<u64> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p.to_string(), q.to_string()));
    }
    let (mut a, mut b) = if p <= q { (p, q) } else { (q, p) };
    let mut acc = 0u64;
    while !(a == 1 && b == 1) {
        if a % 2 == 1 && b % 2 == 1 {
            acc += 1;
        }
        let d = b - a;
        let (na, nb) = if d <= a { (d, a) } else { (a, d) };
        a = na;
        b = nb;
    }
    Ok(acc + 1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Which nonorientable surfaces embed in L(X,Y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonorientableGenus {
    /// X odd: no embedded nonorientable surface at all.
    NoneOdd,
    /// X even, X >= 4: a unique incompressible one, of this genus.
    Incompressible(u64),
    /// X = 2: the projective plane embeds; every odd genus embeds.
    ProjectivePlane,
    /// X = 0: no incompressible one; every even genus embeds.
    EveryEvenGenus,
}

pub fn nonorientable_genus(x: u64, y: u64) -> Result<NonorientableGenus> {
    if x == 0 {
        return Ok(NonorientableGenus::EveryEvenGenus);
    }
    let y = y % x;
    if x > 1 && gcd(x, y) != 1 {
        return Err(Error::NotCoprime(x.to_string(), y.to_string()));
    }
    if x % 2 == 1 {
        return Ok(NonorientableGenus::NoneOdd);
    }
    if x == 2 {
        return Ok(NonorientableGenus::ProjectivePlane);
    }
    Ok(NonorientableGenus::Incompressible(even_edge_count(y, x)?))
}

/// A folded description materialized to a closed complex, with the edge
/// records resolved to edge classes of the closed triangulation.
#[derive(Debug, Clone)]
pub struct FoldedLens {
    pub lp: LayeredPath,
    pub fold_slot: usize,
    pub lens: LensSpace,
    pub tri: Triangulation,
    pub record_classes: Vec<usize>,
    /// The two thick edges of the closed complex: this side's center edge
    /// and the identified pair of non-folded boundary edges.
    pub thick_classes: Vec<usize>,
}

pub fn materialize_folded(lp: &LayeredPath, slot: usize) -> Result<FoldedLens> {
    let lens = fold_symbolic(lp, slot)?;
    let mat: MaterializedLst = lp.materialize()?;
    let closed = mat.tri.fold(mat.slot_classes[slot])?;
    let (record_classes, slot_classes) = mat.resolve_on(&closed);
    let (i, j) = others(slot);
    debug_assert_eq!(slot_classes[i], slot_classes[j]);
    let mut thick_classes = vec![record_classes[0], slot_classes[i]];
    thick_classes.sort();
    thick_classes.dedup();
    Ok(FoldedLens { lp: lp.clone(), fold_slot: slot, lens, tri: closed, record_classes, thick_classes })
}

#[derive(Debug, Clone)]
pub struct EfficiencyVerdict {
    pub efficient: bool,
    /// Edges violating the condition, tagged with the view they were
    /// found in (false = direct, true = reversed).
    pub witness: Option<(bool, Vec<EdgeId>)>,
}

fn exclusion_check(lens: &LensSpace) -> Result<()> {
    if lens.is_sphere() {
        return Err(Error::ManifoldExcluded("the 3-sphere".into()));
    }
    if lens.is_sphere_bundle() {
        return Err(Error::ManifoldExcluded("the 2-sphere bundle over the circle".into()));
    }
    Ok(())
}

/// 0-efficient iff no edge, in the direct or the reversed view, has the
/// meridian slope of its view. The 3-sphere and the sphere bundle are
/// refused, as the characterization excludes them.
pub fn is_zero_efficient(lp: &LayeredPath, slot: usize) -> Result<EfficiencyVerdict> {
    let lens = fold_symbolic(lp, slot)?;
    exclusion_check(&lens)?;
    let (rev, _rev_slot) = reverse_description(lp, slot)?;
    for (view, side) in [(lp, false), (&rev, true)] {
        let nm = view.is_nearly_minimal();
        if !nm.meridian_edges.is_empty() {
            return Ok(EfficiencyVerdict {
                efficient: false,
                witness: Some((side, nm.meridian_edges)),
            });
        }
    }
    Ok(EfficiencyVerdict { efficient: true, witness: None })
}

/// 1-efficient iff the description is nearly minimal in both views, with
/// the two thick edges of the closed complex set aside: each view ignores
/// its own center edge (already not thin) and the pair of non-folded
/// boundary edges, which close up into the other view's thick edge.
pub fn is_one_efficient(lp: &LayeredPath, slot: usize) -> Result<EfficiencyVerdict> {
    let zero = is_zero_efficient(lp, slot)?;
    if !zero.efficient {
        return Ok(zero);
    }
    let (rev, rev_slot) = reverse_description(lp, slot)?;
    for ((view, vslot), side) in [((lp, slot), false), ((&rev, rev_slot), true)] {
        let (i, j) = others(vslot);
        let excluded = |id: &EdgeId| {
            view.edge_table().iter().any(|r| {
                r.id == *id && !r.interior && (r.slots.contains(&i) || r.slots.contains(&j))
            })
        };
        let dups: Vec<(EdgeId, EdgeId)> = view
            .is_nearly_minimal()
            .duplicate_pairs
            .into_iter()
            .filter(|(a, b)| !excluded(a) && !excluded(b))
            .collect();
        if let Some((a, b)) = dups.first() {
            return Ok(EfficiencyVerdict { efficient: false, witness: Some((side, vec![*a, *b])) });
        }
    }
    Ok(EfficiencyVerdict { efficient: true, witness: None })
}

/// Triangulated Dehn filling: attach the minimal layered solid torus whose
/// meridian triple matches `alpha` on the torus boundary of `t`. The
/// degenerate slopes {0,1,1} and {1,1,2} become a pinching and a folding.
/// `alpha` pairs each boundary edge class of `t` with its intersection
/// count.
pub fn dehn_fill(t: &Triangulation, alpha: &[(usize, BigUint); 3]) -> Result<Triangulation> {
    let triple = SlopeTriple::slope([alpha[0].1.clone(), alpha[1].1.clone(), alpha[2].1.clone()])?;
    if let Some(kind) = terminal(&triple) {
        return match kind {
            Terminal::Base => {
                let k = triple.position_of(&big(2), None).unwrap();
                t.fold(alpha[k].0)
            }
            Terminal::Creased => {
                let k = triple.position_of(&BigUint::zero(), None).unwrap();
                t.pinch(alpha[k].0)
            }
        };
    }
    let lp = LayeredPath::build_minimal(&triple.fraction())?;
    let mat = lp.materialize()?;
    let mut corr = [(0usize, 0usize); 3];
    for (k, slot_class) in mat.slot_classes.iter().enumerate() {
        let count = lp.meridian().entry(k);
        let target = alpha.iter().find(|(_, c)| c == count).ok_or_else(|| {
            Error::SlopeMismatch([
                alpha[0].1.to_string(),
                alpha[1].1.to_string(),
                alpha[2].1.to_string(),
            ])
        })?;
        corr[k] = (target.0, *slot_class);
    }
    mat.tri.glue_boundaries(t, corr.map(|(a, b)| (b, a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri::homology_h1;

    fn lens(x: u64, y: u64) -> LensSpace {
        canonicalize_u64(x, y).unwrap()
    }

    fn triple(e: [u64; 3]) -> SlopeTriple {
        SlopeTriple::from_u64(e).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(lens(13, 9), lens(13, 4));
        assert_eq!(lens(25, 11), lens(25, 9));
        assert_eq!(lens(1, 1), lens(1, 0));
        assert_eq!(lens(42, 19), lens(42, 11));
        assert!(related_by_reversal(&big(25), &big(11), &big(9)));
        assert!(!related_by_reversal(&big(25), &big(11), &big(7)));
    }

    #[test]
    fn one_tet_folds() {
        let lp = LayeredPath::build_minimal(&LVertex::from_u64(1, 2).unwrap()).unwrap();
        let mut got: Vec<LensSpace> = (0..3).map(|s| fold_symbolic(&lp, s).unwrap()).collect();
        got.sort_by_key(|l| l.x().clone());
        assert_eq!(got, vec![lens(1, 0), lens(4, 1), lens(5, 2)]);
    }

    #[test]
    fn fold_examples_4_5_9() {
        let t = triple([4, 5, 9]);
        assert_eq!(fold_triple(&t, 1).unwrap(), lens(13, 4));
        assert_eq!(fold_triple(&t, 0).unwrap(), lens(14, 5));
        assert_eq!(fold_triple(&t, 2).unwrap(), lens(1, 0));
        assert_eq!(lens(13, 4), lens(13, 9));
    }

    #[test]
    fn identify_examples() {
        let g = GluingSpec::positional(triple([9, 7, 2]), triple([5, 3, 8]));
        assert_eq!(identify_gluing(&g).unwrap(), lens(62, 27));

        let g = GluingSpec::positional(triple([9, 7, 2]), triple([3, 7, 4]));
        assert_eq!(identify_gluing(&g).unwrap(), lens(42, 19));

        let g = GluingSpec::positional(triple([1, 1, 2]), triple([1, 1, 2]));
        assert_eq!(identify_gluing(&g).unwrap(), lens(0, 1));
    }

    #[test]
    fn identify_rejects_non_coprime_triples() {
        let g = GluingSpec::positional(
            SlopeTriple::from_u64([2, 4, 6]).unwrap(),
            SlopeTriple::from_u64([2, 4, 6]).unwrap(),
        );
        assert!(identify_gluing(&g).is_err());
    }

    #[test]
    fn identify_is_side_symmetric() {
        for (a, b) in [
            ([9u64, 7, 2], [5u64, 3, 8]),
            ([9, 7, 2], [3, 7, 4]),
            ([1, 2, 3], [1, 2, 3]),
            ([2, 3, 5], [1, 2, 1]),
        ] {
            let fwd = identify_gluing(&GluingSpec::positional(triple(a), triple(b))).unwrap();
            let bwd = identify_gluing(&GluingSpec::positional(triple(b), triple(a))).unwrap();
            assert_eq!(fwd, bwd);
        }
    }

    #[test]
    fn mobius_attachments_of_small_tori() {
        let zo = triple([0, 1, 1]);
        assert_eq!(identify_gluing(&GluingSpec::positional(zo.clone(), triple([2, 1, 1]))).unwrap(), lens(2, 1));
        assert_eq!(identify_gluing(&GluingSpec::positional(zo.clone(), triple([1, 2, 1]))).unwrap(), lens(1, 0));
        assert_eq!(identify_gluing(&GluingSpec::positional(zo, triple([1, 1, 2]))).unwrap(), lens(1, 0));
        let oo = triple([1, 1, 2]);
        assert_eq!(identify_gluing(&GluingSpec::positional(oo.clone(), triple([2, 1, 1]))).unwrap(), lens(3, 1));
        assert_eq!(identify_gluing(&GluingSpec::positional(oo.clone(), triple([1, 2, 1]))).unwrap(), lens(3, 1));
        assert_eq!(identify_gluing(&GluingSpec::positional(oo, triple([1, 1, 2]))).unwrap(), lens(0, 1));
        let ot = triple([1, 3, 4]);
        assert_eq!(identify_gluing(&GluingSpec::positional(ot.clone(), triple([2, 1, 1]))).unwrap(), lens(7, 3));
        assert_eq!(identify_gluing(&GluingSpec::positional(ot.clone(), triple([1, 2, 1]))).unwrap(), lens(5, 1));
        assert_eq!(identify_gluing(&GluingSpec::positional(ot, triple([1, 1, 2]))).unwrap(), lens(2, 1));
        let tt = triple([2, 3, 5]);
        assert_eq!(identify_gluing(&GluingSpec::positional(tt.clone(), triple([2, 1, 1]))).unwrap(), lens(8, 3));
        assert_eq!(identify_gluing(&GluingSpec::positional(tt.clone(), triple([1, 2, 1]))).unwrap(), lens(7, 2));
        assert_eq!(identify_gluing(&GluingSpec::positional(tt, triple([1, 1, 2]))).unwrap(), lens(1, 0));
    }

    #[test]
    fn reversal_examples() {
        let fwd = identify_gluing(&GluingSpec::positional(triple([1, 2, 1]), triple([14, 3, 11]))).unwrap();
        assert_eq!(fwd, lens(25, 11));
        let bwd = identify_gluing(&GluingSpec::positional(triple([7, 16, 9]), triple([2, 1, 1]))).unwrap();
        assert_eq!(bwd, lens(25, 9));
        assert_eq!(fwd, bwd);
        assert!(related_by_reversal(&big(25), &big(11), &big(9)));

        let fwd = identify_gluing(&GluingSpec::positional(triple([1, 2, 1]), triple([5, 3, 8]))).unwrap();
        let bwd = identify_gluing(&GluingSpec::positional(triple([5, 8, 3]), triple([1, 1, 2]))).unwrap();
        assert_eq!(fwd, lens(13, 8));
        assert_eq!(bwd, lens(13, 5));
        assert_eq!(fwd, bwd);
        assert!(related_by_reversal(&big(13), &big(8), &big(5)));
    }

    #[test]
    fn reverse_description_of_folds() {
        for (x, y) in [(5u64, 2u64), (7, 2), (13, 4), (3, 1), (8, 3), (12, 5)] {
            let (lp, slot) = build_lens_u64(x, y).unwrap();
            let direct = fold_symbolic(&lp, slot).unwrap();
            let (rev, rslot) = reverse_description(&lp, slot).unwrap();
            let again = fold_symbolic(&rev, rslot).unwrap();
            assert_eq!(direct, again, "L({x},{y})");
        }
    }

    #[test]
    fn build_lens_examples() {
        let (lp, slot) = build_lens_u64(13, 4).unwrap();
        assert!(lp.meridian().same_unordered(&triple([5, 4, 9])));
        assert_eq!(lp.meridian().entry(slot), &big(5));
        assert_eq!(fold_symbolic(&lp, slot).unwrap(), lens(13, 4));

        let (lp, slot) = build_lens_u64(2, 1).unwrap();
        assert!(lp.meridian().same_unordered(&triple([0, 1, 1])));
        assert_eq!(lp.meridian().entry(slot), &big(0));

        let (lp, slot) = build_lens_u64(5, 2).unwrap();
        assert_eq!(lp.tet_count(), 1);
        assert_eq!(lp.meridian().entry(slot), &big(1));
        assert_eq!(fold_symbolic(&lp, slot).unwrap(), lens(5, 2));
    }

    #[test]
    fn build_then_fold_matches_canonical_form() {
        for x in 1u64..=40 {
            for y in 0..x.max(1) {
                if x > 1 && gcd(x, y) != 1 {
                    continue;
                }
                if x == 1 && y != 0 {
                    continue;
                }
                let (lp, slot) = build_lens_u64(x, y).unwrap();
                let got = fold_symbolic(&lp, slot).unwrap();
                assert_eq!(got, lens(x, y), "L({x},{y})");
            }
        }
    }

    #[test]
    fn even_edge_count_examples() {
        assert_eq!(even_edge_count(16, 7).unwrap(), 2);
        assert_eq!(even_edge_count(2, 7).unwrap(), 1);
        for q in (3..100u64).step_by(2) {
            assert_eq!(even_edge_count(2, q).unwrap(), 1);
        }
        for k in 1..=20u64 {
            assert_eq!(even_edge_count(2 * k, 1).unwrap(), k);
        }
        assert_eq!(even_edge_count(1, 1).unwrap(), 1);
    }

    #[test]
    fn even_edges_match_edge_table() {
        for (p, q) in [(1u64, 1u64), (1, 2), (2, 7), (3, 8), (5, 7), (4, 9)] {
            let lp = LayeredPath::build_minimal(&LVertex::from_u64(p, q).unwrap()).unwrap();
            let evens = lp
                .edge_table()
                .iter()
                .filter(|r| (&r.meridian_count % 2u32).is_zero())
                .count() as u64;
            assert_eq!(evens, even_edge_count(p, q).unwrap(), "{p}/{q}");
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(nonorientable_genus(30, 7).unwrap(), NonorientableGenus::Incompressible(3));
        assert_eq!(nonorientable_genus(30, 23).unwrap(), NonorientableGenus::Incompressible(3));
        assert_eq!(nonorientable_genus(4, 1).unwrap(), NonorientableGenus::Incompressible(2));
        assert_eq!(nonorientable_genus(5, 2).unwrap(), NonorientableGenus::NoneOdd);
        assert_eq!(nonorientable_genus(2, 1).unwrap(), NonorientableGenus::ProjectivePlane);
        assert_eq!(nonorientable_genus(0, 1).unwrap(), NonorientableGenus::EveryEvenGenus);
    }

    #[test]
    fn efficiency_examples() {
        let (lp, slot) = build_lens_u64(5, 2).unwrap();
        assert!(is_zero_efficient(&lp, slot).unwrap().efficient);
        assert!(is_one_efficient(&lp, slot).unwrap().efficient);

        // Two-tetrahedron layered projective space is not 0-efficient.
        let (lp, slot) = build_lens_u64(2, 1).unwrap();
        assert!(!is_zero_efficient(&lp, slot).unwrap().efficient);

        // The bad minimal description of L(3,1) folds over the univalent
        // edge; its reversed view has an edge with the meridian slope.
        let lp = LayeredPath::from_moves(&[0, 0]).unwrap();
        let bad_slot = lp.univalent_slot().unwrap();
        let v = is_zero_efficient(&lp, bad_slot).unwrap();
        assert!(!v.efficient);
        assert!(v.witness.as_ref().unwrap().0, "found in the reversed view");
        // The good one folds over the thick edge and is 1-efficient.
        let good_slot = lp.thick_slot().unwrap();
        assert!(is_one_efficient(&lp, good_slot).unwrap().efficient);

        // 3-sphere descriptions are refused.
        let (lp, slot) = build_lens_u64(1, 0).unwrap();
        assert!(matches!(is_zero_efficient(&lp, slot), Err(Error::ManifoldExcluded(_))));
    }

    #[test]
    fn opened_at_thick_edge_is_one_efficient() {
        // From the minimal description of L(6,1): layer on the thick edge
        // and undo it along the univalent edge, giving a nearly minimal
        // but non-minimal solid torus over the same boundary class.
        let (lp, slot) = build_lens_u64(6, 1).unwrap();
        assert_eq!(lp.fraction(), LVertex::from_u64(1, 4).unwrap());
        let thick = lp.thick_slot().unwrap();
        let opened = lp.layer(thick).unwrap();
        let uni = opened.univalent_slot().unwrap();
        let opened = opened.layer(uni).unwrap();
        assert_eq!(opened.fraction(), LVertex::from_u64(1, 4).unwrap());
        assert_eq!(opened.tet_count(), lp.tet_count() + 2);
        let got = fold_symbolic(&opened, slot).unwrap();
        assert_eq!(got, lens(6, 1));
        assert!(is_one_efficient(&opened, slot).unwrap().efficient);
    }

    #[test]
    fn materialized_fold_homology_matches() {
        for (x, y) in [(2u64, 1u64), (3, 1), (4, 1), (5, 2), (7, 2), (8, 3), (62, 27)] {
            let (lp, slot) = build_lens_u64(x, y).unwrap();
            let folded = materialize_folded(&lp, slot).unwrap();
            let h = homology_h1(&folded.tri);
            assert_eq!(h.order(), Some(x as u128), "L({x},{y}) -> {h}");
        }
        let (lp, slot) = build_lens_u64(0, 1).unwrap();
        let folded = materialize_folded(&lp, slot).unwrap();
        assert_eq!(homology_h1(&folded.tri).free_rank, 1);
    }

    #[test]
    fn glue_boundaries_rejects_mismatched_correspondences() {
        let a = LayeredPath::build_minimal(&LVertex::from_u64(1, 2).unwrap()).unwrap();
        let ma = a.materialize().unwrap();
        let mb = a.materialize().unwrap();
        // pairing two left classes with the same right class is no
        // simplicial isomorphism
        let corr = [
            (ma.slot_classes[0], mb.slot_classes[0]),
            (ma.slot_classes[1], mb.slot_classes[0]),
            (ma.slot_classes[2], mb.slot_classes[2]),
        ];
        assert!(ma.tri.glue_boundaries(&mb.tri, corr).is_err());
    }

    #[test]
    fn fold_readings_are_equivalent() {
        // Reading the other non-folded entry as Y names the same space.
        for (entries, slot) in [([4u64, 5, 9], 0usize), ([4, 5, 9], 1), ([3, 8, 11], 2), ([2, 7, 9], 0)] {
            let m = triple(entries);
            let (i, j) = others(slot);
            let base = fold_triple(&m, slot).unwrap();
            let x = base.x().clone();
            let alt = LensSpace::new(&x, m.entry(j)).unwrap();
            let main = LensSpace::new(&x, m.entry(i)).unwrap();
            assert_eq!(main, alt, "{entries:?} slot {slot}");
            assert_eq!(main, base);
        }
    }

    #[test]
    fn glue_boundaries_lens_identification() {
        // {9,7,2} <-> {5,3,8} should assemble to L(62,27).
        let a = LayeredPath::build_minimal(&LVertex::from_u64(2, 7).unwrap()).unwrap();
        let b = LayeredPath::build_minimal(&LVertex::from_u64(3, 5).unwrap()).unwrap();
        let ma = a.materialize().unwrap();
        let mb = b.materialize().unwrap();
        let pos = |lp: &LayeredPath, n: u64, m: &MaterializedLst| {
            let k = lp.meridian().position_of(&big(n), None).unwrap();
            m.slot_classes[k]
        };
        let corr = [
            (pos(&a, 9, &ma), pos(&b, 5, &mb)),
            (pos(&a, 7, &ma), pos(&b, 3, &mb)),
            (pos(&a, 2, &ma), pos(&b, 8, &mb)),
        ];
        let closed = ma.tri.glue_boundaries(&mb.tri, corr).unwrap();
        let r = closed.validate();
        assert!(matches!(r.manifold, crate::tri::ManifoldVerdict::Manifold { closed: true }));
        assert_eq!(r.vertices, 1);
        assert_eq!(homology_h1(&closed).order(), Some(62));
    }

    #[test]
    fn dehn_fill_examples() {
        // Fill the one-tetrahedron solid torus along its own meridian
        // triple: two solid tori glued meridian-to-meridian, the sphere
        // bundle over the circle. The symbolic identification agrees.
        let lp = LayeredPath::build_minimal(&LVertex::from_u64(1, 2).unwrap()).unwrap();
        let mat = lp.materialize().unwrap();
        let m = lp.meridian();
        let alpha = [
            (mat.slot_classes[0], m.entry(0).clone()),
            (mat.slot_classes[1], m.entry(1).clone()),
            (mat.slot_classes[2], m.entry(2).clone()),
        ];
        let filled = dehn_fill(&mat.tri, &alpha).unwrap();
        let r = filled.validate();
        assert!(matches!(r.manifold, crate::tri::ManifoldVerdict::Manifold { closed: true }));
        assert_eq!(homology_h1(&filled).free_rank, 1);
        let g = GluingSpec::positional(m.clone(), m.clone());
        assert_eq!(identify_gluing(&g).unwrap(), lens(0, 1));

        // Filling along a boundary edge slope is a pinching.
        let alpha = [
            (mat.slot_classes[0], big(0)),
            (mat.slot_classes[1], big(1)),
            (mat.slot_classes[2], big(1)),
        ];
        let pinched = dehn_fill(&mat.tri, &alpha).unwrap();
        let r = pinched.validate();
        assert_eq!(r.boundary_faces, 0);
        assert_eq!(r.vertices, 1);

        // Filling along {1,1,2} is a folding.
        let count2 = lp.meridian().position_of(&big(2), None).unwrap();
        let mut alpha = [
            (mat.slot_classes[0], big(1)),
            (mat.slot_classes[1], big(1)),
            (mat.slot_classes[2], big(1)),
        ];
        alpha[count2].1 = big(2);
        let folded = dehn_fill(&mat.tri, &alpha).unwrap();
        assert_eq!(homology_h1(&folded).order(), Some(4));
    }

    #[test]
    fn pinch_one_tet_gives_small_lens_spaces() {
        // Attaching the collapsed cell to the one-tetrahedron solid torus
        // with its disk slope on the count-1/2/3 edge gives the 3-sphere,
        // the projective space and L(3,1) respectively.
        let lp = LayeredPath::build_minimal(&LVertex::from_u64(1, 2).unwrap()).unwrap();
        let mat = lp.materialize().unwrap();
        for (count, order) in [(1u64, 1u128), (2, 2), (3, 3)] {
            let k = lp.meridian().position_of(&big(count), None).unwrap();
            let pinched = mat.tri.pinch(mat.slot_classes[k]).unwrap();
            let r = pinched.validate();
            assert!(
                matches!(r.manifold, crate::tri::ManifoldVerdict::Manifold { closed: true }),
                "pinch at count {count}: {:?}",
                r.manifold
            );
            assert_eq!(r.vertices, 1, "pinch at count {count}");
            assert_eq!(homology_h1(&pinched).order(), Some(order), "pinch at count {count}");
        }
    }
}
