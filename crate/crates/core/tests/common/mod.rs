#![allow(dead_code)]

use farey_shear::farey::{fan_walk, Chain, FareyEdge, Tessellation};
use farey_shear::farey::ExtendedRational;
use farey_shear::lambda::LambdaMap;
use farey_shear::shear::ShearMap;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_shear(rng: &mut ChaCha8Rng, depth: u32) -> ShearMap {
    ShearMap::from_fn(depth, |_| rng.gen_range(-1.0..=1.0))
}

/// A random simple chain of `len` edges within `depth`.
pub fn random_chain(rng: &mut ChaCha8Rng, depth: u32, len: usize) -> Chain {
    let tess = Tessellation::shared(depth);
    let starts: Vec<&FareyEdge> = tess.edges_up_to(3).collect();
    'retry: loop {
        let start = starts[rng.gen_range(0..starts.len())].clone();
        let mut moves = Vec::new();
        for _ in 1..len {
            let mv = (rng.gen_bool(0.5), if rng.gen_bool(0.5) { 1 } else { -1 });
            moves.push(mv);
            match fan_walk(&start, &moves) {
                Ok(c) if c.edges().last().unwrap().generation() <= depth => {}
                _ => continue 'retry,
            }
        }
        let c = fan_walk(&start, &moves).unwrap();
        if c.is_simple().unwrap() {
            return c;
        }
    }
}


/// Lambda lengths `e^{u}` with `u` uniform in `[-ln K, ln K]`.
pub fn random_lambda(rng: &mut ChaCha8Rng, depth: u32, k: f64) -> LambdaMap {
    let r = k.ln();
    LambdaMap::from_fn(depth, |_| rng.gen_range(-r..=r).exp()).unwrap()
}

/// The rational `p/q` with the smallest denominator within `tol` of `x`,
/// read off the continued fraction of `x`.
pub fn rationalize(x: f64, tol: f64) -> ExtendedRational {
    let (mut h0, mut h1, mut k0, mut k1) = (0i128, 1i128, 1i128, 0i128);
    let mut y = x;
    loop {
        let a = y.floor();
        let (h2, k2) = (a as i128 * h1 + h0, a as i128 * k1 + k0);
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol || k1 > 1 << 40 {
            return ExtendedRational::new(h1 as i64, k1 as i64).unwrap();
        }
        y = 1.0 / (y - a);
    }
}
