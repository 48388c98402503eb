//! Anchored expression calculus for skeletal pointed categories.
//!
//! Expressions are binary trees over group letters; a tree denotes the
//! simple object labeled by the product of its letters.  Moves rewrite the
//! tree as honest structural morphisms and accumulate the exact scalar of
//! the composite as an exponent mod the cocycle level:
//!
//! * `assoc_fwd`  `(T1 T2) T3 -> T1 (T2 T3)` : `+omega(|T1|, |T2|, |T3|)`
//! * `assoc_bwd`  `T1 (T2 T3) -> (T1 T2) T3` : `-omega`
//! * `merge`      `(l_a l_b) -> l_{ab}`      : `0` (the chosen identification)
//! * `unmerge`    inverse of `merge`         : `0`
//! * `ev`         `(l_a l_b) -> l_e` when `ab = e` : `+eps(b)`
//! * `coev`       `T -> (T (l_k l_{k^-1}))`  : `-omega(k, k^-1, k) - eps(k)`
//! * `unit_elim`  `(T l_e) -> T`, `(l_e T) -> T` : `0` (normalized cocycle)
//!
//! `eps` is the duality-normalization gauge: rescaling the evaluation for
//! the letter `k` by `zeta^{eps(k)}` forces the coevaluation to rescale by
//! `zeta^{-eps(k)}`, so every closed pairing of the two is gauge-invariant.
//! The canonical gauge is `eps = 0` (evaluation scalar 1), which makes the
//! structure tables pinned by the cell walks below deterministic.
//!
//! Scalars of composites are path-dependent exactly by the omega-holonomy;
//! each structure-table entry pins one defining composite ("cell"), so the
//! mechanical walks replace error-prone hand paths.

use crate::cocycle::Cochain;
use crate::group_core::FiniteGroup;

/// Binary tree over group letters.  `Letter(g)` denotes the simple object
/// with label `g`; `Pair(a, b)` denotes the tensor word `(a . b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Letter(usize),
    Pair(Box<Expr>, Box<Expr>),
}

/// Shorthand for a tensor pair node.
pub fn pair(a: Expr, b: Expr) -> Expr {
    Expr::Pair(Box::new(a), Box::new(b))
}

/// The label of an expression: the ordered product of its letters.
pub fn expr_label(t: &Expr, group: &FiniteGroup) -> usize {
    match t {
        Expr::Letter(g) => *g,
        Expr::Pair(a, b) => group.mul(expr_label(a, group), expr_label(b, group)),
    }
}

/// `rho_g` applied to expression `t`: the anchored word `((g . t) . g^-1)`.
pub fn rho_expr(g: usize, t: Expr, group: &FiniteGroup) -> Expr {
    pair(pair(Expr::Letter(g), t), Expr::Letter(group.inv(g)))
}

/// An expression together with the accumulated scalar exponent of the moves
/// applied so far.  Every move validates the shape it rewrites and panics on
/// a mismatch: a bad path is a construction bug, never a data condition.
pub struct Walk<'a> {
    group: &'a FiniteGroup,
    omega: &'a Cochain,
    /// Duality gauge `eps` per element; all zero in the canonical gauge.
    duality_gauge: Vec<i64>,
    pub expr: Expr,
    pub scalar: i64,
}

impl<'a> Walk<'a> {
    /// Walk in the canonical duality gauge (evaluation scalar 1).
    pub fn new(group: &'a FiniteGroup, omega: &'a Cochain, expr: Expr) -> Walk<'a> {
        Walk::with_duality_gauge(group, omega, expr, vec![0; group.order()])
    }

    /// Walk with evaluation for letter `k` rescaled by `zeta^{gauge[k]}`
    /// (and coevaluation by the inverse).
    pub fn with_duality_gauge(
        group: &'a FiniteGroup,
        omega: &'a Cochain,
        expr: Expr,
        gauge: Vec<i64>,
    ) -> Walk<'a> {
        assert_eq!(omega.degree, 3, "walks need a degree-3 cochain");
        assert_eq!(
            gauge.len(),
            group.order(),
            "duality gauge must assign an exponent to every element"
        );
        Walk { group, omega, duality_gauge: gauge, expr, scalar: 0 }
    }

    fn get(&self, path: &[usize]) -> &Expr {
        let mut t = &self.expr;
        for &p in path {
            match t {
                Expr::Pair(a, b) => t = if p == 0 { a } else { b },
                Expr::Letter(_) => panic!("path {path:?} leaves the tree at {t:?}"),
            }
        }
        t
    }

    fn set(&mut self, path: &[usize], sub: Expr) {
        fn rec(t: &Expr, path: &[usize], sub: Expr) -> Expr {
            if path.is_empty() {
                return sub;
            }
            match t {
                Expr::Pair(a, b) => {
                    if path[0] == 0 {
                        pair(rec(a, &path[1..], sub), (**b).clone())
                    } else {
                        pair((**a).clone(), rec(b, &path[1..], sub))
                    }
                }
                Expr::Letter(_) => panic!("path {path:?} leaves the tree at {t:?}"),
            }
        }
        self.expr = rec(&self.expr, path, sub);
    }

    fn label(&self, t: &Expr) -> usize {
        expr_label(t, self.group)
    }

    /// `(T1 T2) T3 -> T1 (T2 T3)` with scalar `+omega(|T1|, |T2|, |T3|)`.
    pub fn assoc_fwd(&mut self, path: &[usize]) -> &mut Self {
        let t = self.get(path).clone();
        let Expr::Pair(t12, t3) = t else { panic!("not ((..)..): {t:?}") };
        let Expr::Pair(t1, t2) = *t12 else { panic!("not ((..)..): {t12:?}") };
        self.scalar += self.omega.e3(self.label(&t1), self.label(&t2), self.label(&t3));
        self.set(path, pair(*t1, pair(*t2, *t3)));
        self
    }

    /// `T1 (T2 T3) -> (T1 T2) T3` with scalar `-omega(|T1|, |T2|, |T3|)`.
    pub fn assoc_bwd(&mut self, path: &[usize]) -> &mut Self {
        let t = self.get(path).clone();
        let Expr::Pair(t1, t23) = t else { panic!("not (..(..)): {t:?}") };
        let Expr::Pair(t2, t3) = *t23 else { panic!("not (..(..)): {t23:?}") };
        self.scalar -= self.omega.e3(self.label(&t1), self.label(&t2), self.label(&t3));
        self.set(path, pair(pair(*t1, *t2), *t3));
        self
    }

    /// `(l_a l_b) -> l_{ab}` with scalar 0 (the chosen identification).
    pub fn merge(&mut self, path: &[usize]) -> &mut Self {
        let t = self.get(path);
        let Expr::Pair(a, b) = t else { panic!("not a letter pair: {t:?}") };
        let (Expr::Letter(a), Expr::Letter(b)) = (&**a, &**b) else {
            panic!("not a letter pair: {t:?}")
        };
        let prod = self.group.mul(*a, *b);
        self.set(path, Expr::Letter(prod));
        self
    }

    /// `l_{ab} -> (l_a l_b)` with scalar 0; inverse of `merge`.
    pub fn unmerge(&mut self, path: &[usize], a: usize, b: usize) -> &mut Self {
        let t = self.get(path);
        let Expr::Letter(g) = t else { panic!("cannot split non-letter {t:?}") };
        assert_eq!(self.group.mul(a, b), *g, "cannot split {g} as {a}*{b}");
        self.set(path, pair(Expr::Letter(a), Expr::Letter(b)));
        self
    }

    /// `T -> (T (l_k l_{k^-1}))`: unit insertion on the right with scalar
    /// `-omega(k, k^-1, k) - eps(k)`.
    pub fn coev(&mut self, k: usize, path: &[usize]) -> &mut Self {
        let t = self.get(path).clone();
        let ki = self.group.inv(k);
        self.scalar -= self.omega.e3(k, ki, k) + self.duality_gauge[k];
        self.set(path, pair(t, pair(Expr::Letter(k), Expr::Letter(ki))));
        self
    }

    /// `T -> ((l_k l_{k^-1}) T)`: unit insertion on the left, same scalar.
    pub fn coev_left(&mut self, k: usize, path: &[usize]) -> &mut Self {
        let t = self.get(path).clone();
        let ki = self.group.inv(k);
        self.scalar -= self.omega.e3(k, ki, k) + self.duality_gauge[k];
        self.set(path, pair(pair(Expr::Letter(k), Expr::Letter(ki)), t));
        self
    }

    /// `(T l_e) -> T` or `(l_e T) -> T` with scalar 0 (omega normalized).
    pub fn unit_elim(&mut self, path: &[usize]) -> &mut Self {
        let t = self.get(path).clone();
        let e = self.group.identity();
        let Expr::Pair(l, r) = t else { panic!("not a pair: {t:?}") };
        match (&*l, &*r) {
            (Expr::Letter(g), _) if *g == e => self.set(path, *r),
            (_, Expr::Letter(g)) if *g == e => self.set(path, *l),
            _ => panic!("no unit letter at top of ({l:?}, {r:?})"),
        }
        self
    }

    /// `(l_a l_b) -> l_e` for `ab = e`: the evaluation pairing, with scalar
    /// `+eps(b)`; the caller then unit-eliminates.
    pub fn ev(&mut self, path: &[usize]) -> &mut Self {
        let t = self.get(path);
        let Expr::Pair(a, b) = t else { panic!("not an ev pair: {t:?}") };
        let (Expr::Letter(a), Expr::Letter(b)) = (&**a, &**b) else {
            panic!("not an ev pair: {t:?}")
        };
        let (a, b) = (*a, *b);
        assert_eq!(
            self.group.mul(a, b),
            self.group.identity(),
            "not an ev pair: product of {a} and {b} is not the identity"
        );
        self.scalar += self.duality_gauge[b];
        let e = self.group.identity();
        self.set(path, Expr::Letter(e));
        self
    }

    /// Finish the walk: optionally assert the final label, then return the
    /// accumulated exponent reduced mod the cochain level.
    pub fn done(&self, expect_label: Option<usize>) -> i64 {
        if let Some(want) = expect_label {
            let got = self.label(&self.expr);
            assert_eq!(
                got, want,
                "walk ended at {:?} with label {got}, wanted label {want}",
                self.expr
            );
        }
        self.scalar.rem_euclid(i64::from(self.omega.level))
    }
}

/// Scalar of the anchored composite `rho_g1 rho_g2 X_h -> rho_{g1 g2} X_h`:
/// the defining cell of the action-composition table.
pub fn mu_cell(group: &FiniteGroup, omega: &Cochain, g1: usize, g2: usize, h: usize) -> i64 {
    let expr = rho_expr(g1, rho_expr(g2, Expr::Letter(h), group), group);
    let mut w = Walk::new(group, omega, expr);
    // (g1 . ((g2.h) . g2-)) . g1-  ->  (((g1.g2) . h) . g2-) . g1-
    w.assoc_bwd(&[0]);
    w.assoc_bwd(&[0, 0]);
    w.merge(&[0, 0, 0]);
    // (((g1g2 . h) . g2-) . g1-)  ->  ((g1g2 . h) . (g2- . g1-))
    w.assoc_fwd(&[]);
    w.merge(&[1]);
    w.done(Some(group.conj(group.mul(g1, g2), h)))
}

/// Scalar of the anchored composite
/// `rho_g X_a (x) rho_g X_b -> rho_g (X_a (x) X_b)`:
/// the defining cell of the monoidal-structure table of `rho_g`.
pub fn j_cell(group: &FiniteGroup, omega: &Cochain, g: usize, a: usize, b: usize) -> i64 {
    let expr = pair(
        rho_expr(g, Expr::Letter(a), group),
        rho_expr(g, Expr::Letter(b), group),
    );
    let mut w = Walk::new(group, omega, expr);
    w.assoc_bwd(&[]);
    w.assoc_bwd(&[0]);
    w.assoc_fwd(&[0, 0]);
    w.ev(&[0, 0, 1]); // (g- . g) -> e
    w.unit_elim(&[0, 0]); // ((g.a) . e) -> (g.a)
    w.assoc_fwd(&[0]);
    w.merge(&[0, 1]); // (a.b) -> ab
    w.done(Some(group.conj(g, group.mul(a, b))))
}

/// Scalar of the anchored composite `X_g (x) X_h -> rho_g X_h (x) X_g` via
/// coevaluation insertion: the defining cell of the braiding table.
pub fn r_cell(group: &FiniteGroup, omega: &Cochain, g: usize, h: usize) -> i64 {
    let mut w = Walk::new(group, omega, pair(Expr::Letter(g), Expr::Letter(h)));
    w.coev(group.inv(g), &[]); // (g.h) -> ((g.h) . (g-.g))
    w.assoc_bwd(&[]); // -> (((g.h) . g-) . g)
    w.merge(&[0, 0]); // (g.h) -> gh   [anchor rho_g X_h at its label]
    w.merge(&[0]); // (gh . g-) -> ghg-
    w.done(Some(group.mul(group.conj(g, h), g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{cyclic_3cocycle, sign_pullback_s_n};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn z4_theory() -> (Arc<FiniteGroup>, Cochain) {
        let g = FiniteGroup::cyclic(4);
        let om = cyclic_3cocycle(4, 1);
        (g, om)
    }

    #[test]
    fn pentagon_route_independence() {
        // Rebracketing (((a.b).c).d) -> (a.(b.(c.d))) along the two pentagon
        // routes must give equal scalars exactly because omega is a cocycle.
        let cases: Vec<(Arc<FiniteGroup>, Cochain)> = vec![
            z4_theory(),
            {
                let s3 = FiniteGroup::symmetric(3);
                let om = sign_pullback_s_n(Arc::clone(&s3), 3, 1);
                (s3, om)
            },
        ];
        for (group, omega) in cases {
            let n = group.order();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            let start = pair(
                                pair(pair(Expr::Letter(a), Expr::Letter(b)), Expr::Letter(c)),
                                Expr::Letter(d),
                            );
                            let mut outer = Walk::new(&group, &omega, start.clone());
                            outer.assoc_fwd(&[]);
                            outer.assoc_fwd(&[]);
                            let mut inner = Walk::new(&group, &omega, start);
                            inner.assoc_fwd(&[0]);
                            inner.assoc_fwd(&[]);
                            inner.assoc_fwd(&[1]);
                            assert_eq!(outer.expr, inner.expr, "routes must converge");
                            assert_eq!(
                                outer.done(None),
                                inner.done(None),
                                "pentagon routes disagree on ({a},{b},{c},{d}) for {}",
                                omega.name
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zigzag_closes_with_scalar_one_in_every_duality_gauge() {
        // coev then ev on the same letter: the eps contributions cancel and
        // the omega holonomy -omega(k,k-,k) - omega(k-,k,k-) vanishes by the
        // cocycle condition, so the zig-zag composite is the identity scalar.
        let group = FiniteGroup::dihedral(4);
        let omega = crate::cocycle::reflection_pullback_dihedral(Arc::clone(&group), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..5 {
            let gauge: Vec<i64> = (0..group.order())
                .map(|_| rng.gen_range(0..i64::from(omega.level)))
                .collect();
            for k in 0..group.order() {
                let m = group.inv(k);
                let mut w = Walk::with_duality_gauge(
                    &group,
                    &omega,
                    Expr::Letter(m),
                    gauge.clone(),
                );
                w.coev(k, &[]); // m -> (m . (k . k-))
                w.assoc_bwd(&[]); // -> ((m . k) . k-)
                w.ev(&[0]); // (k- . k) -> e
                w.unit_elim(&[]); // (e . k-) -> k-
                assert_eq!(
                    w.done(Some(m)),
                    0,
                    "zig-zag on letter {k} not the identity in gauge trial {trial}"
                );
            }
        }
    }

    #[test]
    fn cells_anchor_at_the_stated_labels() {
        // done() inside each cell asserts the endpoint label; running every
        // cell over all tuples exercises those anchors exhaustively.
        let (z4, om4) = z4_theory();
        let s3 = FiniteGroup::symmetric(3);
        let oms3 = sign_pullback_s_n(Arc::clone(&s3), 3, 1);
        for (group, omega) in [(z4, om4), (s3, oms3)] {
            let n = group.order();
            let level = i64::from(omega.level);
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let v = mu_cell(&group, &omega, x, y, z);
                        assert!((0..level).contains(&v));
                        let v = j_cell(&group, &omega, x, y, z);
                        assert!((0..level).contains(&v));
                    }
                    let v = r_cell(&group, &omega, x, y);
                    assert!((0..level).contains(&v));
                }
            }
        }
    }

    #[test]
    fn merge_unmerge_round_trip() {
        let (group, omega) = z4_theory();
        let mut w = Walk::new(&group, &omega, Expr::Letter(3));
        w.unmerge(&[], 1, 2);
        assert_eq!(w.expr, pair(Expr::Letter(1), Expr::Letter(2)));
        w.merge(&[]);
        assert_eq!(w.expr, Expr::Letter(3));
        assert_eq!(w.done(Some(3)), 0, "merge and unmerge carry no scalar");
    }

    #[test]
    fn unit_elimination_works_on_both_sides() {
        let (group, omega) = z4_theory();
        let mut w = Walk::new(
            &group,
            &omega,
            pair(Expr::Letter(0), pair(Expr::Letter(2), Expr::Letter(0))),
        );
        w.unit_elim(&[1]); // (2 . e) -> 2
        w.unit_elim(&[]); // (e . 2) -> 2
        assert_eq!(w.expr, Expr::Letter(2));
        assert_eq!(w.done(Some(2)), 0);
    }

    #[test]
    #[should_panic(expected = "not a letter pair")]
    fn merge_rejects_non_letter_shapes() {
        let (group, omega) = z4_theory();
        let mut w = Walk::new(
            &group,
            &omega,
            pair(pair(Expr::Letter(1), Expr::Letter(1)), Expr::Letter(2)),
        );
        w.merge(&[]);
    }

    #[test]
    #[should_panic(expected = "wanted label")]
    fn done_rejects_wrong_labels() {
        let (group, omega) = z4_theory();
        let w = Walk::new(&group, &omega, Expr::Letter(1));
        w.done(Some(2));
    }
}
