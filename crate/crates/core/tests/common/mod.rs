//! Generators and naive reference implementations shared by the
//! integration tests. The oracles here use only Cayley tables and matrix
//! entries, never the crate's evaluators.

#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use repgeo::rep::{general_linear_group, representation_from_gl};
use repgeo::term::Word;
use repgeo::{
    enumerate_group_homs, Assignment, Atom, FiniteGroup, FreeContext, GroupWord, ModuleElement, PrimeField,
    QuasiIdentity, Representation, Vector,
};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn klein() -> FiniteGroup {
    FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"))
}

/// `S₃`, realised as `GL(2, 2)`.
pub fn s3() -> FiniteGroup {
    general_linear_group(gf(2), 2, 1 << 10).unwrap().0
}

/// Groups of order at most `max_order` from a fixed pool.
pub fn group_pool(max_order: usize) -> Vec<FiniteGroup> {
    let mut pool: Vec<FiniteGroup> = (1..=max_order.min(6)).map(|n| FiniteGroup::cyclic_named(n, "g")).collect();
    if max_order >= 4 {
        pool.push(klein());
    }
    if max_order >= 6 {
        pool.push(s3());
    }
    pool
}

/// A representation built from a uniformly chosen hom `G → GL(dim, p)`.
pub fn random_rep(rng: &mut Rng8, p: u32, max_order: usize, max_dim: usize) -> Representation {
    let field = gf(p);
    let g = group_pool(max_order).choose(rng).unwrap().clone();
    let dim = rng.random_range(1..=max_dim);
    let (gl, mats) = general_linear_group(field, dim, 1 << 20).unwrap();
    let homs = enumerate_group_homs(&g, &gl, 1 << 24).unwrap();
    let beta = homs.choose(rng).unwrap();
    representation_from_gl(field, dim, beta, &mats).unwrap()
}

pub fn random_word(rng: &mut Rng8, ny: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::reduce((0..len).map(|_| {
        let e = if rng.random_bool(0.5) { 1 } else { -1 };
        (rng.random_range(0..ny), e * rng.random_range(1..=2))
    }))
}

pub fn random_module(rng: &mut Rng8, ctx: &repgeo::term::Ctx, max_terms: usize) -> ModuleElement {
    let p = ctx.field().modulus() as i64;
    let nx = ctx.xvars().len();
    let ny = ctx.yvars().len();
    let n = rng.random_range(1..=max_terms);
    let terms: Vec<(usize, Word, i64)> =
        (0..n).map(|_| (rng.random_range(0..nx), random_word(rng, ny, 2), rng.random_range(1..p))).collect();
    ModuleElement::from_terms(ctx, terms).unwrap()
}

pub fn random_group_word(rng: &mut Rng8, ctx: &repgeo::term::Ctx) -> GroupWord {
    GroupWord::from_word(ctx, random_word(rng, ctx.yvars().len(), 3)).unwrap()
}

pub fn random_atom(rng: &mut Rng8, ctx: &repgeo::term::Ctx) -> Atom {
    if rng.random_bool(0.7) {
        Atom::Module(random_module(rng, ctx, 3))
    } else {
        Atom::Group(random_group_word(rng, ctx))
    }
}

pub fn random_qid(rng: &mut Rng8, ctx: &repgeo::term::Ctx) -> QuasiIdentity {
    let k = rng.random_range(0..=2);
    let premises = (0..k).map(|_| random_atom(rng, ctx)).collect();
    QuasiIdentity::new(premises, random_atom(rng, ctx)).unwrap()
}

pub fn random_ctx(rng: &mut Rng8, field: PrimeField) -> repgeo::term::Ctx {
    FreeContext::standard(field, rng.random_range(1..=2), rng.random_range(1..=2))
}

// Naive semantics.

fn naive_pow(g: &FiniteGroup, a: usize, e: i64) -> usize {
    let base = if e < 0 { (0..g.order()).find(|&b| g.mul(a, b) == 0).unwrap() } else { a };
    (0..e.unsigned_abs()).fold(0, |acc, _| g.mul(acc, base))
}

fn naive_word(g: &FiniteGroup, ymap: &[usize], w: &Word) -> usize {
    let mut acc = 0;
    for &(v, e) in w.runs() {
        acc = g.mul(acc, naive_pow(g, ymap[v], e));
    }
    acc
}

fn naive_act(rep: &Representation, v: &[u64], g: usize) -> Vec<u64> {
    let p = rep.field().modulus() as u64;
    let m = rep.matrix(g);
    (0..rep.dim()).map(|j| (0..rep.dim()).map(|i| v[i] * m.get(i, j) as u64).sum::<u64>() % p).collect()
}

pub fn naive_atom(rep: &Representation, xmap: &[Vec<u64>], ymap: &[usize], atom: &Atom) -> bool {
    let p = rep.field().modulus() as u64;
    match atom {
        Atom::Group(w) => naive_word(rep.group(), ymap, w.word()) == 0,
        Atom::Module(u) => {
            let mut acc = vec![0u64; rep.dim()];
            for (x, w, c) in u.iter_terms() {
                let moved = naive_act(rep, &xmap[x], naive_word(rep.group(), ymap, w));
                for (a, m) in acc.iter_mut().zip(moved) {
                    *a = (*a + c as u64 * m) % p;
                }
            }
            acc.iter().all(|&a| a == 0)
        }
    }
}

/// Every point of the affine space by plain recursion.
pub fn naive_points(rep: &Representation, nx: usize, ny: usize) -> Vec<(Vec<Vec<u64>>, Vec<usize>)> {
    let p = rep.field().modulus() as u64;
    let mut vectors: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..rep.dim() {
        vectors = vectors.into_iter().flat_map(|v| (0..p).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    let mut xs: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for _ in 0..nx {
        xs = xs.into_iter().flat_map(|t| vectors.iter().map(move |v| [t.clone(), vec![v.clone()]].concat())).collect();
    }
    let mut ys: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..ny {
        ys =
            ys.into_iter().flat_map(|t| (0..rep.group().order()).map(move |g| [t.clone(), vec![g]].concat())).collect();
    }
    xs.iter().flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

pub fn naive_qid_holds(rep: &Representation, q: &QuasiIdentity) -> bool {
    let ctx = q.context();
    naive_points(rep, ctx.xvars().len(), ctx.yvars().len())
        .iter()
        .all(|(x, y)| !q.premises().iter().all(|a| naive_atom(rep, x, y, a)) || naive_atom(rep, x, y, q.conclusion()))
}

pub fn naive_violates(rep: &Representation, q: &QuasiIdentity, asg: &Assignment) -> bool {
    let x: Vec<Vec<u64>> = asg.xmap.iter().map(|v| v.coords().iter().map(|&c| c as u64).collect()).collect();
    q.premises().iter().all(|a| naive_atom(rep, &x, &asg.ymap, a)) && !naive_atom(rep, &x, &asg.ymap, q.conclusion())
}

/// Number of homomorphisms `G → H` among all `|H|^|G|` functions.
pub fn naive_group_hom_count(g: &FiniteGroup, h: &FiniteGroup) -> usize {
    let n = g.order();
    let total = h.order().pow(n as u32);
    (0..total)
        .filter(|&code| {
            let f: Vec<usize> = (0..n).map(|i| code / h.order().pow(i as u32) % h.order()).collect();
            g.elements().all(|a| g.elements().all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b])))
        })
        .count()
}

/// Number of pairs `(A, β)` with `β` a hom and `act_R(g)·A = A·act_S(β g)`,
/// over all functions `β` and all matrices `A`.
pub fn naive_rep_hom_count(r: &Representation, s: &Representation) -> usize {
    let (g, h) = (r.group(), s.group());
    let p = r.field().modulus() as usize;
    let (m, n) = (r.dim(), s.dim());
    let funcs = h.order().pow(g.order() as u32);
    let mats = p.pow((m * n) as u32);
    let mut count = 0;
    for code in 0..funcs {
        let f: Vec<usize> = (0..g.order()).map(|i| code / h.order().pow(i as u32) % h.order()).collect();
        if !g.elements().all(|a| g.elements().all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b]))) {
            continue;
        }
        for mc in 0..mats {
            let a: Vec<usize> = (0..m * n).map(|i| mc / p.pow(i as u32) % p).collect();
            let ok = g.elements().all(|x| {
                let left = r.matrix(x);
                let right = s.matrix(f[x]);
                (0..m).all(|i| {
                    (0..n).all(|j| {
                        let l: usize = (0..m).map(|k| left.get(i, k) as usize * a[k * n + j]).sum();
                        let rr: usize = (0..n).map(|k| a[i * n + k] * right.get(k, j) as usize).sum();
                        l % p == rr % p
                    })
                })
            });
            if ok {
                count += 1;
            }
        }
    }
    count
}

pub fn vector(field: PrimeField, coords: &[i64]) -> Vector {
    Vector::new(field, coords.iter().copied())
}
