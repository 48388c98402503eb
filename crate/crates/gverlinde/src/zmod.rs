//! Affine linear algebra over `Z/N`.
//!
//! [`AffineSpace`] maintains the full solution set of a growing system of
//! affine constraints `row . x = rhs (mod N)` as an explicit coset:
//! one particular solution plus a generating set of the homogeneous
//! solution lattice.  Adding a constraint is a column-Euclid reduction of
//! the generator images, so feasibility, the reachable value set of any
//! linear functional, and incremental pinning (used by canonical gauge
//! fixing) are all exact and cheap.

use thiserror::Error;

#[derive(Debug, Error)]
#[error("inconsistent congruence system: row value {got} != required {want} (mod {modulus})")]
pub struct Infeasible {
    pub got: i64,
    pub want: i64,
    pub modulus: i64,
}

/// Solution set of an affine congruence system over `Z/N`, stored as
/// `origin + <kernel generators>`.
#[derive(Clone, Debug)]
pub struct AffineSpace {
    n_vars: usize,
    modulus: i64,
    origin: Vec<i64>,
    kernel: Vec<Vec<i64>>,
}

fn modinv(a: i64, m: i64) -> i64 {
    // Extended Euclid; requires gcd(a, m) = 1.
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "modinv of non-unit {a} mod {m}");
    s0.rem_euclid(m)
}

impl AffineSpace {
    /// The unconstrained space: every assignment of `n_vars` residues.
    pub fn full(n_vars: usize, modulus: i64) -> AffineSpace {
        assert!(modulus >= 1);
        let kernel = (0..n_vars)
            .map(|j| {
                let mut e = vec![0i64; n_vars];
                e[j] = 1;
                e
            })
            .collect();
        AffineSpace { n_vars, modulus, origin: vec![0; n_vars], kernel }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    fn dot(&self, row: &[i64], v: &[i64]) -> i64 {
        debug_assert_eq!(row.len(), self.n_vars);
        let mut acc = 0i64;
        for (r, x) in row.iter().zip(v.iter()) {
            acc += (r.rem_euclid(self.modulus)) * (x.rem_euclid(self.modulus));
        }
        acc.rem_euclid(self.modulus)
    }

    /// Values reachable by `base + row . x` over the current solution set:
    /// the congruence class `offset (mod step)` where `step` divides the
    /// modulus.  `step == modulus` means exactly one value is reachable.
    pub fn reachable(&self, row: &[i64], base: i64) -> (i64, i64) {
        let r0 = (base + self.dot(row, &self.origin)).rem_euclid(self.modulus);
        let mut step = self.modulus;
        for k in &self.kernel {
            let t = self.dot(row, k);
            step = gcd(step, t);
        }
        if step == 0 {
            step = self.modulus;
        }
        (r0.rem_euclid(step), step)
    }

    /// Impose `row . x = rhs (mod N)`.  On failure the solution set is
    /// unchanged (generator updates are basis changes of the same lattice).
    pub fn constrain(&mut self, row: &[i64], rhs: i64) -> Result<(), Infeasible> {
        let m = self.modulus;
        let want = rhs.rem_euclid(m);
        let have = self.dot(row, &self.origin);
        let r = (want - have).rem_euclid(m);
        // Images of the kernel generators under the functional.
        let mut t: Vec<i64> = self.kernel.iter().map(|k| self.dot(row, k)).collect();
        // Column Euclid: combine generators until at most one nonzero image.
        loop {
            let mut pivot: Option<usize> = None;
            for (i, &ti) in t.iter().enumerate() {
                if ti != 0 && pivot.map(|p| ti < t[p]).unwrap_or(true) {
                    pivot = Some(i);
                }
            }
            let Some(p) = pivot else { break };
            let mut changed = false;
            for i in 0..t.len() {
                if i != p && t[i] != 0 {
                    let q = t[i] / t[p];
                    if q != 0 {
                        for j in 0..self.n_vars {
                            let kpj = self.kernel[p][j];
                            self.kernel[i][j] = (self.kernel[i][j] - q * kpj).rem_euclid(m);
                        }
                        t[i] -= q * t[p];
                    }
                    if t[i] != 0 {
                        changed = true; // remainder still to clear next round
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let pivot = t.iter().position(|&ti| ti != 0);
        match pivot {
            None => {
                if r == 0 {
                    Ok(())
                } else {
                    Err(Infeasible { got: have, want, modulus: m })
                }
            }
            Some(p) => {
                let d0 = t[p];
                let d = gcd(d0, m);
                if r % d != 0 {
                    return Err(Infeasible { got: have, want, modulus: m });
                }
                // Particular coefficient for the pivot generator.
                let a = ((r / d) % (m / d)) * modinv(d0 / d, m / d) % (m / d);
                for j in 0..self.n_vars {
                    self.origin[j] =
                        (self.origin[j] + a * self.kernel[p][j]).rem_euclid(m);
                }
                // The pivot generator survives only scaled into the sublattice.
                let scale = m / d;
                for j in 0..self.n_vars {
                    self.kernel[p][j] = (self.kernel[p][j] * scale).rem_euclid(m);
                }
                self.kernel.retain(|k| k.iter().any(|&x| x != 0));
                Ok(())
            }
        }
    }

    /// One solution of all constraints imposed so far.
    pub fn solution(&self) -> Vec<i64> {
        self.origin.clone()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One-shot solve of `rows . x = rhs (mod modulus)`; `None` if inconsistent.
pub fn solve_affine_mod(
    rows: &[Vec<i64>],
    rhs: &[i64],
    n_vars: usize,
    modulus: i64,
) -> Option<Vec<i64>> {
    assert_eq!(rows.len(), rhs.len());
    let mut space = AffineSpace::full(n_vars, modulus);
    for (row, &b) in rows.iter().zip(rhs.iter()) {
        space.constrain(row, b).ok()?;
    }
    Some(space.solution())
}
