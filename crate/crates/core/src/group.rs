//! Finite groups given by Cayley tables.
//!
//! Elements are indices `0..n` with `0` the identity. Element order is the
//! input order, which every derived structure (quotients, products, hom
//! lists) keeps stable.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, GroupAxiom, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct GroupData {
    names: Vec<String>,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

/// A validated finite group. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("names", &self.data.names).finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table. `table[i][j]` is the index of `gᵢ·gⱼ`.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::MalformedGroup("no elements".into()));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::MalformedGroup("element names are not distinct".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedGroup(format!("table is not {n}x{n}")));
        }
        if let Some(e) = table.iter().flatten().find(|&&e| e >= n) {
            return Err(Error::MalformedGroup(format!("entry {e} out of range")));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let at = |i: usize, j: usize| flat[i * n + j];

        for j in 0..n {
            if at(0, j) != j {
                return Err(not_a_group(GroupAxiom::Identity, (0, j, at(0, j))));
            }
            if at(j, 0) != j {
                return Err(not_a_group(GroupAxiom::Identity, (j, 0, at(j, 0))));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![None; n];
            let mut col_seen = vec![None; n];
            for j in 0..n {
                if let Some(k) = row_seen[at(i, j)] {
                    return Err(not_a_group(GroupAxiom::LatinSquare, (i, k, j)));
                }
                row_seen[at(i, j)] = Some(j);
                if let Some(k) = col_seen[at(j, i)] {
                    return Err(not_a_group(GroupAxiom::LatinSquare, (k, j, i)));
                }
                col_seen[at(j, i)] = Some(j);
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let right = (0..n).find(|&j| at(i, j) == 0).expect("latin square");
            if at(right, i) != 0 {
                let left = (0..n).find(|&j| at(j, i) == 0).expect("latin square");
                return Err(not_a_group(GroupAxiom::Inverse, (i, right, left)));
            }
            inverses.push(right);
        }
        for i in 0..n {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(not_a_group(GroupAxiom::Associativity, (i, j, k)));
                    }
                }
            }
        }
        Ok(Self { data: Arc::new(GroupData { names, table: flat, inverses }) })
    }

    /// Table validated elsewhere (constructors whose output is a group by construction).
    fn from_trusted(names: Vec<String>, table: Vec<usize>) -> Self {
        let n = names.len();
        let inverses = (0..n).map(|i| (0..n).find(|&j| table[i * n + j] == 0).expect("group table")).collect();
        Self { data: Arc::new(GroupData { names, table, inverses }) }
    }

    /// Cyclic group of order `n` with generator named `g`.
    pub fn cyclic(n: usize) -> Self {
        Self::cyclic_named(n, "g")
    }

    /// Cyclic group of order `n`, elements `1, a, a^2, …` for generator name `a`.
    pub fn cyclic_named(n: usize, generator: &str) -> Self {
        assert!(n >= 1, "cyclic group needs positive order");
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}^{i}"),
            })
            .collect();
        let table = (0..n * n).map(|ij| (ij / n + ij % n) % n).collect();
        Self::from_trusted(names, table)
    }

    /// Direct product. Elements are the pairs `(g, h)` with the first factor
    /// varying fastest, so `Z₂ × Z₂` lists as `1, a, b, ab`.
    /// Names are concatenated with identity components dropped (`a`, `b`, `ab`);
    /// if that produces a clash the components are joined with `·` instead.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order(), h.order());
        let name_with = |sep: &str, i: usize, j: usize| match (i, j) {
            (0, 0) => "1".to_string(),
            (i, 0) => g.name(i).to_string(),
            (0, j) => h.name(j).to_string(),
            (i, j) => format!("{}{sep}{}", g.name(i), h.name(j)),
        };
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
        let mut names: Vec<String> = pairs.iter().map(|&(i, j)| name_with("", i, j)).collect();
        if names.iter().collect::<BTreeSet<_>>().len() != names.len() {
            names = pairs.iter().map(|&(i, j)| name_with("·", i, j)).collect();
        }
        let n = m * k;
        let mut table = vec![0; n * n];
        for (x, &(i1, j1)) in pairs.iter().enumerate() {
            for (y, &(i2, j2)) in pairs.iter().enumerate() {
                table[x * n + y] = h.mul(j1, j2) * m + g.mul(i1, i2);
            }
        }
        Self::from_trusted(names, table)
    }

    pub fn order(&self) -> usize {
        self.data.names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.data.table[i * self.order() + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.data.inverses[i]
    }

    /// `gᵢ^e` for any integer exponent.
    pub fn pow(&self, i: usize, e: i64) -> usize {
        let ord = self.element_order(i) as i64;
        let e = e.rem_euclid(ord);
        (0..e).fold(0, |acc, _| self.mul(acc, i))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn name(&self, i: usize) -> &str {
        &self.data.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.data.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    /// Closure of `gens` under multiplication, as a sorted member list.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Greedy generating set: scan elements in index order, keep each one not
    /// already generated by the earlier picks.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order()];
        reached[0] = true;
        for e in 1..self.order() {
            if !reached[e] {
                gens.push(e);
                for m in self.generated_by(&gens) {
                    reached[m] = true;
                }
            }
        }
        gens
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { parent: self.clone(), members: self.elements().collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { parent: self.clone(), members: vec![0] }
    }
}

fn not_a_group(axiom: GroupAxiom, witness: (usize, usize, usize)) -> Error {
    Error::NotAGroup { axiom, witness }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.data.names.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `members` contains the identity and is closed.
    pub fn new(parent: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&m) = members.iter().find(|&&m| m >= parent.order()) {
            return Err(Error::IndexOutOfRange { what: "group element", index: m, size: parent.order() });
        }
        let sub = Subgroup { parent: parent.clone(), members };
        sub.validate()?;
        Ok(sub)
    }

    pub(crate) fn from_sorted_unchecked(parent: &FiniteGroup, members: Vec<usize>) -> Self {
        Subgroup { parent: parent.clone(), members }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.contains(0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &self.members {
            if !self.contains(self.parent.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {} missing", self.parent.name(a))));
            }
            for &b in &self.members {
                if !self.contains(self.parent.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "{}·{} missing",
                        self.parent.name(a),
                        self.parent.name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks `g n g⁻¹ ∈ N` for all `g`, returning the first failing pair.
    pub fn check_normal(&self) -> Result<()> {
        let g = &self.parent;
        for x in g.elements() {
            for &n in &self.members {
                let conj = g.mul(g.mul(x, n), g.inv(x));
                if !self.contains(conj) {
                    return Err(Error::NotNormal { g: g.name(x).to_string(), n: g.name(n).to_string() });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        self.check_normal().is_ok()
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn member_names(&self) -> Vec<String> {
        self.members.iter().map(|&m| self.parent.name(m).to_string()).collect()
    }
}

/// Quotient `G/N` with cosets indexed by their least member, and the
/// natural map `σ` as an index list.
pub fn quotient_group(n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
    n.check_normal()?;
    let g = n.parent();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &m in n.members() {
            coset_of[g.mul(x, m)] = c;
        }
    }
    let k = reps.len();
    let names = reps.iter().map(|&r| g.name(r).to_string()).collect();
    let mut table = vec![0; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * k + j] = coset_of[g.mul(a, b)];
        }
    }
    Ok((FiniteGroup::from_trusted(names, table), coset_of))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    image: Vec<usize>,
}

impl GroupHom {
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.order() {
            return Err(Error::DimensionMismatch { expected: domain.order(), found: image.len() });
        }
        if let Some(&x) = image.iter().find(|&&x| x >= codomain.order()) {
            return Err(Error::IndexOutOfRange { what: "group element", index: x, size: codomain.order() });
        }
        let hom = GroupHom { domain: domain.clone(), codomain: codomain.clone(), image };
        if !hom.is_homomorphism() {
            return Err(Error::MalformedGroup("image table is not a homomorphism".into()));
        }
        Ok(hom)
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom { domain: g.clone(), codomain: g.clone(), image: g.elements().collect() }
    }

    /// Full `|G|²` sweep of `image[i·j] = image[i]·image[j]`.
    pub fn is_homomorphism(&self) -> bool {
        is_hom_table(&self.domain, &self.codomain, &self.image)
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn kernel(&self) -> Subgroup {
        let members = self.domain.elements().filter(|&i| self.image[i] == 0).collect();
        Subgroup::from_sorted_unchecked(&self.domain, members)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image.iter().collect::<BTreeSet<_>>().len() == self.codomain.order()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            image: self.image.iter().map(|&i| other.image[i]).collect(),
        }
    }

    /// Readable `name ↦ name` pairs for the non-identity elements.
    pub fn describe(&self) -> String {
        self.domain
            .elements()
            .skip(1)
            .map(|i| format!("{}↦{}", self.domain.name(i), self.codomain.name(self.image[i])))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub(crate) fn is_hom_table(g: &FiniteGroup, h: &FiniteGroup, image: &[usize]) -> bool {
    g.elements().all(|i| g.elements().all(|j| image[g.mul(i, j)] == h.mul(image[i], image[j])))
}

/// All homomorphisms `G → H`, sorted lexicographically by image table.
///
/// Generator images are chosen by backtracking over a greedy generating
/// set of `G`; every other image follows from a BFS word for that element,
/// and each candidate is checked against the full table.
pub fn enumerate_group_homs(g: &FiniteGroup, h: &FiniteGroup, cap: u128) -> Result<Vec<GroupHom>> {
    let gens = g.greedy_generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ox = g.element_order(x);
            h.elements().filter(|&y| ox.is_multiple_of(h.element_order(y))).collect()
        })
        .collect();
    let needed: u128 = candidates.iter().map(|c| c.len() as u128).product();
    if needed > cap {
        return Err(Error::EnumerationCapExceeded { what: "generator image combinations", needed, cap });
    }

    // BFS words: every non-identity element is parent·gens[k].
    let mut steps: Vec<(usize, usize, usize)> = Vec::with_capacity(g.order());
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (k, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if !seen[y] {
                seen[y] = true;
                steps.push((y, x, k));
                queue.push_back(y);
            }
        }
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut image = vec![0usize; g.order()];
    #[allow(clippy::too_many_arguments)]
    fn walk(
        depth: usize,
        choice: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        steps: &[(usize, usize, usize)],
        image: &mut Vec<usize>,
        g: &FiniteGroup,
        h: &FiniteGroup,
        out: &mut Vec<GroupHom>,
    ) {
        if depth == candidates.len() {
            image[0] = 0;
            for &(y, parent, k) in steps {
                image[y] = h.mul(image[parent], choice[k]);
            }
            if is_hom_table(g, h, image) {
                out.push(GroupHom { domain: g.clone(), codomain: h.clone(), image: image.clone() });
            }
            return;
        }
        for &c in &candidates[depth] {
            choice[depth] = c;
            walk(depth + 1, choice, candidates, steps, image, g, h, out);
        }
    }
    walk(0, &mut choice, &candidates, &steps, &mut image, g, h, &mut out);
    out.sort_by(|a, b| a.image.cmp(&b.image));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn z2_from_table() {
        let g = FiniteGroup::from_table(names(&["1", "a"]), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g, FiniteGroup::cyclic_named(2, "a"));
    }

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_table(names(&["1"]), vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, FiniteGroup::cyclic(1));
    }

    #[test]
    fn rejects_repeated_row_entry() {
        let err = FiniteGroup::from_table(names(&["1", "a"]), vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { axiom: GroupAxiom::LatinSquare, .. }));
    }

    #[test]
    fn rejects_missing_identity() {
        let err = FiniteGroup::from_table(names(&["1", "a"]), vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { axiom: GroupAxiom::Identity, .. }));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // Smallest loop that is not a group has order 5.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(names(&["1", "a", "b", "c", "d"]), t).unwrap_err();
        let Error::NotAGroup { axiom, witness } = err else {
            panic!("expected NotAGroup");
        };
        assert_eq!(axiom, GroupAxiom::Associativity);
        let g = |i: usize, j: usize| {
            [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]][i][j]
        };
        let (i, j, k) = witness;
        assert_ne!(g(g(i, j), k), g(i, g(j, k)));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(FiniteGroup::from_table(vec![], vec![]), Err(Error::MalformedGroup(_))));
        assert!(matches!(
            FiniteGroup::from_table(names(&["1", "1"]), vec![vec![0, 1], vec![1, 0]]),
            Err(Error::MalformedGroup(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(names(&["1", "a"]), vec![vec![0, 2], vec![1, 0]]),
            Err(Error::MalformedGroup(_))
        ));
    }

    #[test]
    fn cyclic_tables() {
        let z2 = FiniteGroup::cyclic(2);
        assert_eq!(z2.table_rows(), vec![vec![0, 1], vec![1, 0]]);
        let z4 = FiniteGroup::cyclic(4);
        let g2 = z4.index_of("g^2").unwrap();
        assert_eq!(z4.inv(g2), g2);
        assert_eq!(z4.pow(1, -1), 3);
        assert_eq!(z4.element_order(1), 4);
    }

    #[test]
    fn klein_four_product() {
        let k = FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"));
        assert_eq!(k.names(), &names(&["1", "a", "b", "ab"])[..]);
        for i in k.elements() {
            assert_eq!(k.inv(i), i);
        }
    }

    #[test]
    fn product_with_trivial_is_copy() {
        let g = FiniteGroup::cyclic(3);
        let p = FiniteGroup::product(&FiniteGroup::cyclic(1), &g);
        assert_eq!(p, g);
    }

    #[test]
    fn z2_times_z3_is_cyclic() {
        let p = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        assert!(p.elements().any(|i| p.element_order(i) == 6));
    }

    #[test]
    fn product_names_fall_back_on_clash() {
        let g = FiniteGroup::cyclic_named(3, "a");
        let h = FiniteGroup::cyclic_named(2, "^2");
        let p = FiniteGroup::product(&g, &h);
        assert_eq!(p.order(), 6);
        assert!(p.names().iter().any(|n| n.contains('·')));
    }

    #[test]
    fn quotient_examples() {
        let k = FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"));
        let a = k.index_of("a").unwrap();
        let b = k.index_of("b").unwrap();
        let n = Subgroup::new(&k, [0, b]).unwrap();
        let (q, sigma) = quotient_group(&n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!((a, b), (1, 2));
        assert_eq!(sigma, vec![0, 1, 0, 1]);
        let (q, sigma) = quotient_group(&k.trivial_subgroup()).unwrap();
        assert_eq!(q, k);
        assert_eq!(sigma, vec![0, 1, 2, 3]);
        let (q, _) = quotient_group(&k.whole()).unwrap();
        assert_eq!(q.order(), 1);
    }

    fn s3() -> FiniteGroup {
        // permutations of {0,1,2} composed left-to-right
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|p| perms.iter().map(|q| idx([q[p[0]], q[p[1]], q[p[2]]])).collect()).collect();
        FiniteGroup::from_table(names(&["1", "s", "t", "u", "r", "r2"]), table).unwrap()
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let g = s3();
        let h = Subgroup::new(&g, [0, 1]).unwrap();
        assert!(matches!(quotient_group(&h), Err(Error::NotNormal { .. })));
        let rot = Subgroup::new(&g, [0, 4, 5]).unwrap();
        let (q, _) = quotient_group(&rot).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn subgroup_validation() {
        let g = FiniteGroup::cyclic(4);
        assert!(Subgroup::new(&g, [0, 2]).is_ok());
        assert!(matches!(Subgroup::new(&g, [0, 1]), Err(Error::NotASubgroup(_))));
        assert!(matches!(Subgroup::new(&g, [1, 3]), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn hom_counts() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let k = FiniteGroup::product(&z2, &z2);
        assert_eq!(enumerate_group_homs(&k, &z2, u128::MAX).unwrap().len(), 4);
        assert_eq!(enumerate_group_homs(&z2, &k, u128::MAX).unwrap().len(), 4);
        assert_eq!(enumerate_group_homs(&z3, &z2, u128::MAX).unwrap().len(), 1);
        assert_eq!(enumerate_group_homs(&s3(), &s3(), u128::MAX).unwrap().len(), 10);
    }

    #[test]
    fn hom_cap_is_enforced() {
        let k = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(matches!(enumerate_group_homs(&k, &k, 3), Err(Error::EnumerationCapExceeded { .. })));
    }

    #[test]
    fn homs_are_sorted_and_valid() {
        let g = FiniteGroup::cyclic(4);
        let homs = enumerate_group_homs(&g, &g, u128::MAX).unwrap();
        assert_eq!(homs.len(), 4);
        assert!(homs.windows(2).all(|w| w[0].image() < w[1].image()));
        assert!(homs.iter().all(GroupHom::is_homomorphism));
    }
}
