//! Random presentations for sampling-based checks and benchmarks.
//!
//! A candidate is a product of blocks of mutually orthogonal idempotents,
//! each block one of:
//!
//! * a simplicial complex with `a⊗b = a∪b` when that face exists and `0`
//!   otherwise (idempotent atoms, unit the empty face),
//! * a truncated chain `u, n1, ..., nr` with `ni⊗nj = n(i+j)` or `0`
//!   (nilpotent atoms),
//! * a cyclic group with the shift acting by a translation.
//!
//! Random triangles are then declared, and occasionally one tensor entry is
//! corrupted. Candidates are not guaranteed to be valid; [`random_valid`]
//! rejection-samples through [`validate_presentation`].

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::model::{validate_presentation, Presentation, Triangle};
use crate::object::ObjectClass;

/// Tables of one block, over local atom indices.
struct Block {
    size: usize,
    unit: usize,
    tensor: Vec<Option<usize>>,
    shift: Vec<usize>,
}

impl Block {
    fn product(&self, x: usize, y: usize) -> Option<usize> {
        self.tensor[x * self.size + y]
    }
}

fn complex_block<R: Rng>(rng: &mut R, size: usize) -> Block {
    // Faces as bitmasks over a ground set of `size` vertices, grown so the
    // family stays closed under subsets.
    let mut faces: Vec<u32> = vec![0];
    while faces.len() < size {
        let candidates: Vec<u32> = (1..1u32 << size)
            .filter(|f| !faces.contains(f))
            .filter(|f| (0..size).all(|v| f & (1 << v) == 0 || faces.contains(&(f & !(1 << v)))))
            .collect();
        faces.push(
            *candidates
                .choose(rng)
                .expect("a new vertex is always available"),
        );
    }
    let mut tensor = Vec::with_capacity(size * size);
    for &a in &faces {
        for &b in &faces {
            tensor.push(faces.iter().position(|&f| f == a | b));
        }
    }
    Block {
        size,
        unit: 0,
        tensor,
        shift: (0..size).collect(),
    }
}

fn chain_block(size: usize) -> Block {
    let mut tensor = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            tensor.push((i + j < size).then_some(i + j));
        }
    }
    Block {
        size,
        unit: 0,
        tensor,
        shift: (0..size).collect(),
    }
}

fn cyclic_block<R: Rng>(rng: &mut R, size: usize) -> Block {
    let step = rng.gen_range(0..size);
    let mut tensor = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            tensor.push(Some((i + j) % size));
        }
    }
    Block {
        size,
        unit: 0,
        tensor,
        shift: (0..size).map(|i| (i + step) % size).collect(),
    }
}

fn random_class<R: Rng>(rng: &mut R, n: usize) -> ObjectClass {
    let mut a = ObjectClass::ZERO;
    for x in 0..n {
        if rng.gen_bool(0.35) {
            a.insert(x);
        }
    }
    a
}

/// A random candidate with exactly `atoms` atoms; it may fail validation.
pub fn random_presentation<R: Rng>(rng: &mut R, atoms: usize) -> Presentation {
    assert!(atoms >= 1);
    let mut blocks = Vec::new();
    let mut left = atoms;
    while left > 0 {
        let size = rng.gen_range(1..=left.min(4));
        left -= size;
        let block = match rng.gen_range(0..3) {
            0 => complex_block(rng, size),
            1 => chain_block(size),
            _ => cyclic_block(rng, size.min(3)),
        };
        left += size - block.size;
        blocks.push(block);
    }

    // Global index of each block's atoms, in shuffled order.
    let mut order: Vec<usize> = (0..atoms).collect();
    order.shuffle(rng);
    let mut offset = 0;
    let mut global: Vec<Vec<usize>> = Vec::new();
    for b in &blocks {
        global.push(order[offset..offset + b.size].to_vec());
        offset += b.size;
    }

    let mut tensor = vec![ObjectClass::ZERO; atoms * atoms];
    let mut shift = vec![ObjectClass::ZERO; atoms];
    let mut unit = ObjectClass::ZERO;
    for (b, ids) in blocks.iter().zip(&global) {
        unit.insert(ids[b.unit]);
        for x in 0..b.size {
            shift[ids[x]] = ObjectClass::atom(ids[b.shift[x]]);
            for y in 0..b.size {
                if let Some(z) = b.product(x, y) {
                    tensor[ids[x] * atoms + ids[y]] = ObjectClass::atom(ids[z]);
                }
            }
        }
    }

    let mut triangles = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let t = if rng.gen_bool(0.5) {
            let (a, c) = (random_class(rng, atoms), random_class(rng, atoms));
            Triangle::new(a, a.union(c), c)
        } else {
            Triangle::new(
                random_class(rng, atoms),
                random_class(rng, atoms),
                random_class(rng, atoms),
            )
        };
        triangles.push(t);
    }

    if rng.gen_bool(0.1) {
        let (x, y) = (rng.gen_range(0..atoms), rng.gen_range(0..atoms));
        let value = random_class(rng, atoms);
        tensor[x * atoms + y] = value;
        tensor[y * atoms + x] = value;
    }

    let names = (0..atoms).map(|i| format!("a{i}")).collect();
    Presentation::new(names, unit, tensor, shift, triangles)
        .expect("generated tables have consistent sizes")
}

/// A valid presentation with between 1 and `max_atoms` atoms.
pub fn random_valid<R: Rng>(rng: &mut R, max_atoms: usize) -> Presentation {
    loop {
        let n = rng.gen_range(1..=max_atoms);
        let p = random_presentation(rng, n);
        if validate_presentation(&p).ok {
            return p;
        }
    }
}

/// `count` valid presentations drawn from a seeded generator.
pub fn valid_sample(seed: u64, count: usize, max_atoms: usize) -> Vec<Presentation> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_valid(&mut rng, max_atoms))
        .collect()
}
