//! Finite groups as validated multiplication tables.
//!
//! Elements are indices `0..n` with the identity always at index `0`.
//! Every constructor funnels through the same validator (closure,
//! identity, associativity, inverses), so a group value is a proof that
//! its table is a group.  Conjugacy classes, centralizers, and element
//! orders are precomputed; classes are listed in first-element order and
//! each class is sorted ascending, which downstream code relies on for
//! deterministic labeling.

use std::path::Path;
use std::sync::Arc;
use thiserror::Error;

/// Soft size bound: the desk-scale algorithms here are quadratic to cubic
/// in the order, so larger inputs are allowed but warned about.
pub const SOFT_ORDER_CAP: usize = 64;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("multiplication table has {got} entries, expected {want}")]
    BadTableSize { got: usize, want: usize },
    #[error("table entry {value} at ({a},{b}) is out of range 0..{n}")]
    EntryOutOfRange { a: usize, b: usize, value: usize, n: usize },
    #[error("index 0 is not an identity: 0*{g} = {left}, {g}*0 = {right}")]
    BadIdentity { g: usize, left: usize, right: usize },
    #[error("multiplication is not associative at ({a},{b},{c}): ({a}*{b})*{c} = {lhs} but {a}*({b}*{c}) = {rhs}")]
    NonAssociative { a: usize, b: usize, c: usize, lhs: usize, rhs: usize },
    #[error("element {g} has no inverse")]
    MissingInverse { g: usize },
    #[error("cannot parse group descriptor {0:?}: {1}")]
    Descriptor(String, String),
    #[error("cannot read group table file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("group table file {path}: {msg}")]
    FileFormat { path: String, msg: String },
}

/// Conjugacy structure of a finite group.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    /// Classes in order of their smallest element; each class sorted.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[g]` = index into `classes`.
    pub class_of: Vec<usize>,
    /// `centralizers[g]` = sorted list of elements commuting with `g`.
    pub centralizers: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    orders: Vec<u32>,
    exponent: u32,
    pub conjugacy: ConjugacyData,
    element_names: Vec<String>,
}

impl FiniteGroup {
    /// Validate a raw table and build the group.  `names` may be empty, in
    /// which case elements are named by their index.
    pub fn from_table(
        name: impl Into<String>,
        n: usize,
        table: Vec<usize>,
        names: Vec<String>,
    ) -> Result<FiniteGroup, GroupError> {
        let name = name.into();
        if table.len() != n * n {
            return Err(GroupError::BadTableSize { got: table.len(), want: n * n });
        }
        if n == 0 {
            return Err(GroupError::BadTableSize { got: 0, want: 1 });
        }
        if n > SOFT_ORDER_CAP {
            log::warn!(
                "group {name} has order {n} > {SOFT_ORDER_CAP}; expect quadratic-to-cubic cost growth"
            );
        }
        for a in 0..n {
            for b in 0..n {
                let v = table[a * n + b];
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { a, b, value: v, n });
                }
            }
        }
        for g in 0..n {
            let left = table[g];
            let right = table[g * n];
            if left != g || right != g {
                return Err(GroupError::BadIdentity { g, left, right });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    let lhs = table[ab * n + c];
                    let rhs = table[a * n + table[b * n + c]];
                    if lhs != rhs {
                        return Err(GroupError::NonAssociative { a, b, c, lhs, rhs });
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a * n + b] == 0 && table[b * n + a] == 0) {
                Some(b) => inv[a] = b,
                None => return Err(GroupError::MissingInverse { g: a }),
            }
        }
        let mut orders = vec![0u32; n];
        for g in 0..n {
            let mut k = 1u32;
            let mut x = g;
            while x != 0 {
                x = table[x * n + g];
                k += 1;
            }
            orders[g] = k;
        }
        let exponent = orders.iter().fold(1u32, |acc, &o| num::integer::lcm(acc, o));
        // Conjugacy classes in first-seen (= smallest-element) order.
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut members: Vec<usize> = (0..n)
                .map(|x| {
                    let xg = table[x * n + g];
                    table[xg * n + inv[x]]
                })
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = idx;
            }
            classes.push(members);
        }
        let centralizers: Vec<Vec<usize>> = (0..n)
            .map(|g| {
                (0..n)
                    .filter(|&x| table[x * n + g] == table[g * n + x])
                    .collect()
            })
            .collect();
        let element_names = if names.len() == n {
            names
        } else {
            (0..n).map(|g| g.to_string()).collect()
        };
        Ok(FiniteGroup {
            name,
            n,
            table,
            inv,
            orders,
            exponent,
            conjugacy: ConjugacyData { classes, class_of, centralizers },
            element_names,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `x g x^{-1}`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn element_order(&self, g: usize) -> u32 {
        self.orders[g]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.element_names[g]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// All ordered commuting pairs, lexicographically.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for g in 0..self.n {
            for h in 0..self.n {
                if self.commutes(g, h) {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// Two groups are interchangeable when their tables agree.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.n == other.n && self.table == other.table
    }

    /// The subgroup on a multiplicatively closed element set, as a group in
    /// its own right, together with the embedding from subgroup indices to
    /// parent elements.  The set is sorted ascending, so the parent
    /// identity keeps index 0 as required by the table validator.
    pub fn subgroup(
        &self,
        elements: &[usize],
        name: impl Into<String>,
    ) -> Result<(Arc<FiniteGroup>, Vec<usize>), GroupError> {
        let mut embed: Vec<usize> = elements.to_vec();
        embed.sort_unstable();
        embed.dedup();
        let m = embed.len();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &g) in embed.iter().enumerate() {
            if g >= self.n {
                return Err(GroupError::EntryOutOfRange { a: i, b: i, value: g, n: self.n });
            }
            pos[g] = i;
        }
        let mut table = vec![0usize; m * m];
        for i in 0..m {
            for j in 0..m {
                let p = self.mul(embed[i], embed[j]);
                if pos[p] == usize::MAX {
                    return Err(GroupError::NotClosed {
                        a: embed[i],
                        b: embed[j],
                        product: p,
                    });
                }
                table[i * m + j] = pos[p];
            }
        }
        let names = embed.iter().map(|&g| self.element_names[g].clone()).collect();
        let sub = FiniteGroup::from_table(name, m, table, names)?;
        Ok((Arc::new(sub), embed))
    }

    /// The centralizer of `h` as a group, plus its embedding into `self`.
    pub fn centralizer_group(&self, h: usize) -> (Arc<FiniteGroup>, Vec<usize>) {
        let elems = self.conjugacy.centralizers[h].clone();
        self.subgroup(&elems, format!("C_{}({})", self.name, self.element_name(h)))
            .expect("centralizers are closed under multiplication")
    }

    // ---- standard constructors ----

    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        assert!(n >= 1);
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        let names = (0..n).map(|g| g.to_string()).collect();
        Arc::new(FiniteGroup::from_table(format!("Z{n}"), n, table, names).expect("cyclic group"))
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Arc<FiniteGroup> {
        let n = a.n * b.n;
        let mut table = vec![0usize; n * n];
        let idx = |i: usize, j: usize| i * b.n + j;
        for i1 in 0..a.n {
            for j1 in 0..b.n {
                for i2 in 0..a.n {
                    for j2 in 0..b.n {
                        table[idx(i1, j1) * n + idx(i2, j2)] =
                            idx(a.mul(i1, i2), b.mul(j1, j2));
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(n);
        for i in 0..a.n {
            for j in 0..b.n {
                names.push(format!("({},{})", a.element_names[i], b.element_names[j]));
            }
        }
        let name = format!("{}x{}", a.name, b.name);
        Arc::new(FiniteGroup::from_table(name, n, table, names).expect("product group"))
    }

    /// Symmetric group on `n` letters, permutations enumerated
    /// lexicographically; composition `(a*b)(i) = a[b[i]]`.
    pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
        assert!((1..=5).contains(&n), "symmetric groups supported for n <= 5");
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let m = perms.len();
        let find = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let mut table = vec![0usize; m * m];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                let prod: Vec<usize> = (0..n).map(|t| a[b[t]]).collect();
                table[i * m + j] = find(&prod);
            }
        }
        let names = perms
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        Arc::new(FiniteGroup::from_table(format!("S{n}"), m, table, names).expect("symmetric group"))
    }

    /// Dihedral group of order `2n`: rotations `0..n` then reflections
    /// `n..2n`; `(a,x)*(b,y) = (a + b or a - b, x xor y)`.
    pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
        assert!(n >= 1);
        let m = 2 * n;
        let idx = |r: usize, s: usize| s * n + r;
        let mut table = vec![0usize; m * m];
        for s1 in 0..2 {
            for r1 in 0..n {
                for s2 in 0..2 {
                    for r2 in 0..n {
                        let r = if s1 == 0 { (r1 + r2) % n } else { (r1 + n - r2 % n) % n };
                        table[idx(r1, s1) * m + idx(r2, s2)] = idx(r, (s1 + s2) % 2);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(m);
        for s in 0..2 {
            for r in 0..n {
                names.push(if s == 0 { format!("r{r}") } else { format!("sr{r}") });
            }
        }
        Arc::new(FiniteGroup::from_table(format!("D{n}"), m, table, names).expect("dihedral group"))
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion8() -> Arc<FiniteGroup> {
        // Axis products: table over (1,i,j,k) with a sign flip flag.
        const AXIS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let idx = |s: usize, a: usize| s * 4 + a;
        let mut table = vec![0usize; 64];
        for s1 in 0..2 {
            for a1 in 0..4 {
                for s2 in 0..2 {
                    for a2 in 0..4 {
                        let (flip, axis) = AXIS[a1][a2];
                        let s = (s1 + s2 + flip) % 2;
                        table[idx(s1, a1) * 8 + idx(s2, a2)] = idx(s, axis);
                    }
                }
            }
        }
        let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Arc::new(FiniteGroup::from_table("Q8", 8, table, names).expect("quaternion group"))
    }

    /// Load an explicit multiplication table: whitespace-separated order
    /// `n` followed by `n*n` row-major entries.  Identity must be index 0.
    pub fn from_table_file(path: &Path) -> Result<Arc<FiniteGroup>, GroupError> {
        let text = std::fs::read_to_string(path).map_err(|source| GroupError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut nums = Vec::new();
        for tok in text.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| GroupError::FileFormat {
                path: path.display().to_string(),
                msg: format!("token {tok:?} is not a nonnegative integer"),
            })?;
            nums.push(v);
        }
        let Some((&n, rest)) = nums.split_first() else {
            return Err(GroupError::FileFormat {
                path: path.display().to_string(),
                msg: "empty file".to_string(),
            });
        };
        if rest.len() != n * n {
            return Err(GroupError::FileFormat {
                path: path.display().to_string(),
                msg: format!("expected {} table entries after the order, found {}", n * n, rest.len()),
            });
        }
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "table".to_string());
        Ok(Arc::new(FiniteGroup::from_table(name, n, rest.to_vec(), Vec::new())?))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Parse a group descriptor: `Z<n>`, `S<n>`, `D<n>`, `Q8`, products of
/// those joined by `x` (e.g. `Z2xZ2`), or a path to an explicit table file.
pub fn parse_group(descriptor: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    fn parse_atom(tok: &str) -> Option<Arc<FiniteGroup>> {
        if tok == "Q8" {
            return Some(FiniteGroup::quaternion8());
        }
        let (head, num) = tok.split_at(1);
        let n: usize = num.parse().ok()?;
        match head {
            "Z" if n >= 1 => Some(FiniteGroup::cyclic(n)),
            "S" if (1..=5).contains(&n) => Some(FiniteGroup::symmetric(n)),
            "D" if n >= 1 => Some(FiniteGroup::dihedral(n)),
            _ => None,
        }
    }
    let parts: Vec<&str> = descriptor.split('x').collect();
    let atoms: Option<Vec<Arc<FiniteGroup>>> =
        parts.iter().map(|t| parse_atom(t)).collect();
    if let Some(atoms) = atoms {
        if !atoms.is_empty() {
            let mut it = atoms.into_iter();
            let mut acc = it.next().unwrap();
            for next in it {
                acc = FiniteGroup::direct_product(&acc, &next);
            }
            return Ok(acc);
        }
    }
    let path = Path::new(descriptor);
    if path.exists() {
        return FiniteGroup::from_table_file(path);
    }
    Err(GroupError::Descriptor(
        descriptor.to_string(),
        "not a recognized family (Z<n>, S<n>, D<n>, Q8, products with 'x') and not an existing file".to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let g = FiniteGroup::cyclic(6);
        assert_eq!(g.order(), 6);
        assert_eq!(g.mul(4, 5), 3);
        assert_eq!(g.inv(2), 4);
        assert_eq!(g.exponent(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.conjugacy.classes.len(), 6);
    }

    #[test]
    fn symmetric_three_structure() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        let sizes: Vec<usize> = g.conjugacy.classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2], "identity, transpositions, 3-cycles");
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.commuting_pairs().len(), 18);
        // Composition convention: (a*b)(i) = a[b[i]].
        let a = 1; // permutation 021
        let b = 2; // permutation 102
        let prod = g.mul(a, b);
        assert_eq!(g.element_name(prod), "201", "apply 102 first, then 021");
    }

    #[test]
    fn dihedral_four_structure() {
        let g = FiniteGroup::dihedral(4);
        assert_eq!(g.order(), 8);
        assert_eq!(g.conjugacy.classes.len(), 5);
        assert_eq!(g.commuting_pairs().len(), 40);
        // Reflections square to the identity.
        for r in 4..8 {
            assert_eq!(g.mul(r, r), 0, "reflection {r} is an involution");
        }
        // r1 conjugated by a reflection is r3.
        assert_eq!(g.conj(4, 1), 3);
    }

    #[test]
    fn quaternion_structure() {
        let g = FiniteGroup::quaternion8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.conjugacy.classes.len(), 5);
        assert_eq!(g.exponent(), 4);
        // i * j = k, j * i = -k.
        assert_eq!(g.element_name(g.mul(1, 2)), "k");
        assert_eq!(g.element_name(g.mul(2, 1)), "-k");
        // Only one element of order 2.
        let invols = (1..8).filter(|&x| g.mul(x, x) == 0).count();
        assert_eq!(invols, 1, "-1 is the unique involution");
    }

    #[test]
    fn product_group_and_descriptor_parsing() {
        let v4 = parse_group("Z2xZ2").expect("parse product");
        assert_eq!(v4.name, "Z2xZ2");
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert_eq!(v4.exponent(), 2);
        let s3 = parse_group("S3").expect("parse S3");
        assert_eq!(s3.order(), 6);
        assert!(parse_group("Z0").is_err());
        assert!(parse_group("nonsense").is_err());
    }

    #[test]
    fn class_equation_invariants() {
        for g in [
            FiniteGroup::cyclic(4),
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4),
            FiniteGroup::quaternion8(),
            parse_group("Z2xZ2").unwrap(),
        ] {
            let n = g.order();
            // Orbit-stabilizer: each class size times its centralizer order is |G|.
            for class in &g.conjugacy.classes {
                let rep = class[0];
                assert_eq!(
                    class.len() * g.conjugacy.centralizers[rep].len(),
                    n,
                    "orbit-stabilizer in {}",
                    g.name
                );
            }
            // Burnside for the conjugation action.
            let fixed: usize = (0..n).map(|h| g.conjugacy.centralizers[h].len()).sum();
            assert_eq!(fixed, n * g.conjugacy.classes.len(), "Burnside count in {}", g.name);
            // Commuting pairs count equals the same sum.
            assert_eq!(g.commuting_pairs().len(), fixed);
        }
    }

    #[test]
    fn explicit_table_file_round_trip() {
        let dir = std::env::temp_dir();
        let path = dir.join("gverlinde_test_z3.txt");
        std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let g = FiniteGroup::from_table_file(&path).expect("valid table");
        let z3 = FiniteGroup::cyclic(3);
        assert!(g.same_table(&z3));
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn invalid_tables_are_rejected_with_specifics() {
        // Non-associative magma: tweak one entry of Z4.
        let mut table: Vec<usize> = Vec::new();
        for a in 0..4usize {
            for b in 0..4usize {
                table.push((a + b) % 4);
            }
        }
        table[15] = 1; // 3*3 := 1 instead of 2
        let err = FiniteGroup::from_table("bad", 4, table, Vec::new()).unwrap_err();
        match err {
            GroupError::NonAssociative { a, b, c, .. } => {
                // The violating triple is reported.
                assert!(a < 4 && b < 4 && c < 4);
            }
            other => panic!("expected NonAssociative, got {other}"),
        }
        // Identity not at index 0.
        let table = vec![1, 0, 0, 1];
        let err = FiniteGroup::from_table("bad", 2, table, Vec::new()).unwrap_err();
        assert!(matches!(err, GroupError::BadIdentity { .. }));
    }
}
