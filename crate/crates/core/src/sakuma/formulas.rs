//! Closed-form structure constants and Gram entries of the universal
//! 2-generated Frobenius 𝔙(4,3)-axial algebra on the spanning set W.

use num_traits::Zero;

use crate::exact::linalg::{vec_add, vec_scale};
use crate::exact::rational::rat;
use crate::exact::{MultiPoly, Vector};

pub const A_M2: usize = 0;
pub const A_M1: usize = 1;
pub const A0: usize = 2;
pub const A1: usize = 3;
pub const A2: usize = 4;
pub const S1: usize = 5;
pub const S2E: usize = 6;
pub const S2O: usize = 7;

/// Dimension of the spanning set W.
pub const DIM: usize = 8;

pub const LABELS: [&str; DIM] = ["a_-2", "a_-1", "a_0", "a_1", "a_2", "sigma_1", "sigma_2e", "sigma_2o"];

/// Index of a_i for i in −2..=2.
pub fn axis_index(i: i32) -> usize {
    assert!((-2..=2).contains(&i), "a_{i} is outside the window");
    (i + 2) as usize
}

/// Sum of `num/den · λ^el μ^em` over the given terms.
pub fn poly(terms: &[(i64, i64, u32, u32)]) -> MultiPoly {
    MultiPoly::from_terms(terms.iter().map(|&(n, d, el, em)| ((el, em), rat(n, d))))
}

/// Constant polynomial `num/den`.
pub fn c(num: i64, den: i64) -> MultiPoly {
    MultiPoly::constant(rat(num, den))
}

/// Σ coefficient · e_index.
pub fn combo(entries: &[(usize, MultiPoly)]) -> Vector<MultiPoly> {
    let mut v = vec![MultiPoly::zero(); DIM];
    for (i, p) in entries {
        v[*i] += p;
    }
    v
}

pub fn e(i: usize) -> Vector<MultiPoly> {
    combo(&[(i, c(1, 1))])
}

fn third(v: Vector<MultiPoly>) -> Vector<MultiPoly> {
    vec_scale(&c(1, 3), &v)
}

/// a_i a_j for |i − j| ∈ {1, 2}: σ + (a_i + a_j)/32.
pub fn neighbour_product(i: usize, j: usize, sigma: usize) -> Vector<MultiPoly> {
    combo(&[(sigma, c(1, 1)), (i, c(1, 32)), (j, c(1, 32))])
}

pub fn a0_sigma1() -> Vector<MultiPoly> {
    combo(&[
        (S1, c(7, 32)),
        (A0, poly(&[(3, 4, 1, 0), (-25, 1024, 0, 0)])),
        (A_M1, c(7, 2048)),
        (A1, c(7, 2048)),
    ])
}

pub fn a0_sigma2e() -> Vector<MultiPoly> {
    combo(&[
        (S2E, c(7, 32)),
        (A0, poly(&[(3, 4, 0, 1), (-25, 1024, 0, 0)])),
        (A_M2, c(7, 2048)),
        (A2, c(7, 2048)),
    ])
}

pub fn a0_sigma2o() -> Vector<MultiPoly> {
    let pm1 = poly(&[(-1, 2, 1, 0), (19, 1024, 0, 0)]);
    let inner = combo(&[
        (S1, poly(&[(-32, 1, 1, 0), (19, 16, 0, 0)])),
        (S2E, c(-7, 32)),
        (A0, poly(&[(32, 1, 2, 0), (-5, 1, 1, 0), (1, 8, 0, 1), (127, 1024, 0, 0)])),
        (A1, pm1.clone()),
        (A_M1, pm1),
        (A2, c(-7, 2048)),
        (A_M2, c(-7, 2048)),
    ]);
    vec_scale(&c(-1, 3), &inner)
}

pub fn sigma1_sigma1() -> Vector<MultiPoly> {
    let first = third(combo(&[
        (S1, poly(&[(-5, 4, 1, 0), (-13, 512, 0, 0)])),
        (S2E, c(-7, 512)),
        (S2O, c(21, 2048)),
    ]));
    let pm1 = poly(&[(7, 256, 1, 0), (-35, 65536, 0, 0)]);
    let second = vec_scale(
        &c(7, 3),
        &combo(&[
            (A0, poly(&[(1, 2, 2, 0), (-1, 128, 1, 0), (1, 512, 0, 1), (-1, 32768, 0, 0)])),
            (A1, pm1.clone()),
            (A_M1, pm1),
            (A2, c(7, 65536)),
            (A_M2, c(7, 65536)),
        ]),
    );
    vec_add(&first, &second)
}

pub fn sigma1_sigma2e() -> Vector<MultiPoly> {
    let pm1 = poly(&[(14, 1, 2, 0), (-203, 256, 1, 0), (665, 65536, 0, 0)]);
    let pm2 = poly(&[(7, 128, 1, 0), (-133, 65536, 0, 0)]);
    let thirds = third(combo(&[
        (
            A0,
            poly(&[
                (256, 1, 3, 0),
                (-27, 2, 2, 0),
                (1, 1, 1, 1),
                (17, 128, 1, 0),
                (-19, 512, 0, 1),
                (19, 32768, 0, 0),
            ]),
        ),
        (A1, pm1.clone()),
        (A_M1, pm1),
        (A2, pm2.clone()),
        (A_M2, pm2),
        (S1, poly(&[(-304, 1, 2, 0), (41, 2, 1, 0), (51, 16, 0, 1), (-197, 512, 0, 0)])),
        (S2E, poly(&[(-17, 8, 1, 0), (11, 256, 0, 0)])),
    ]));
    vec_add(&thirds, &combo(&[(S2O, poly(&[(-7, 8, 1, 0), (49, 2048, 0, 0)]))]))
}

pub fn sigma2e_sigma2e() -> Vector<MultiPoly> {
    let pm1 = poly(&[(3584, 1, 3, 0), (-791, 3, 2, 0), (2317, 384, 1, 0), (-8645, 196608, 0, 0)]);
    let pm2 = poly(&[(-49, 1, 2, 0), (343, 192, 1, 0), (21, 256, 0, 1), (-3563, 196608, 0, 0)]);
    combo(&[
        (
            A0,
            poly(&[
                (2621440, 1, 4, 0),
                (-820096, 3, 3, 0),
                (-10880, 1, 2, 1),
                (20303, 2, 2, 0),
                (2329, 6, 1, 1),
                (3, 2, 0, 2),
                (-61409, 384, 1, 0),
                (-5315, 1536, 0, 1),
                (89069, 98304, 0, 0),
            ]),
        ),
        (A1, pm1.clone()),
        (A_M1, pm1),
        (A2, pm2.clone()),
        (A_M2, pm2),
        (
            S1,
            poly(&[
                (-3145728, 1, 4, 0),
                (737280, 1, 3, 0),
                (-12288, 1, 2, 1),
                (-120368, 3, 2, 0),
                (448, 1, 1, 1),
                (4819, 6, 1, 0),
                (-65, 16, 0, 1),
                (-65, 12, 0, 0),
            ]),
        ),
        (
            S2E,
            poly(&[
                (-49152, 1, 3, 0),
                (-1584, 1, 2, 0),
                (-192, 1, 1, 1),
                (2837, 24, 1, 0),
                (47, 16, 0, 1),
                (-4079, 3072, 0, 0),
            ]),
        ),
        (S2O, poly(&[(-672, 1, 2, 0), (49, 2, 1, 0), (-455, 2048, 0, 0)])),
    ])
}

/// An a₃ expansion with constant term 3 and σ-coefficient 224. It is
/// inconsistent with σ₁σ₁ and is kept only so the difference can be
/// inspected; the table uses
/// [`derive_a3`](super::derive_a3).
pub fn a3_uncorrected() -> Vector<MultiPoly> {
    let k = poly(&[(32768, 7, 2, 0), (-2304, 7, 1, 0), (128, 7, 0, 1), (3, 1, 0, 0)]);
    let l = poly(&[(256, 1, 1, 0), (-6, 1, 0, 0)]);
    combo(&[
        (A_M2, c(1, 1)),
        (A_M1, l.clone()),
        (A2, -l),
        (A0, k.clone()),
        (A1, -k),
        (S2O, c(224, 1)),
        (S2E, c(-224, 1)),
    ])
}

/// ν₀, …, ν₄ with ν_k = ⟨a_i, a_{i+k}⟩.
pub fn nus() -> [MultiPoly; 5] {
    let nu3 = poly(&[
        (32768, 1, 3, 0),
        (-36864, 1, 2, 0),
        (1920, 1, 1, 1),
        (2169, 1, 1, 0),
        (33, 1, 0, 1),
        (-33, 1, 0, 0),
    ])
    .scale(&rat(-1, 7));
    let nu4 = poly(&[
        (8388608, 1, 4, 0),
        (-9601024, 1, 3, 0),
        (458752, 1, 2, 1),
        (774144, 1, 2, 0),
        (-640, 1, 1, 1),
        (-128, 1, 0, 2),
        (-19840, 1, 1, 0),
        (-21, 1, 0, 1),
        (156, 1, 0, 0),
    ])
    .scale(&rat(1, 7));
    [c(1, 1), MultiPoly::lambda(), MultiPoly::mu(), nu3, nu4]
}

/// ⟨a_k, σ₁⟩ for every k.
pub fn axis_sigma1() -> MultiPoly {
    poly(&[(31, 32, 1, 0), (-1, 32, 0, 0)])
}

/// ⟨a_k, σ₂ᵉ⟩ for k even (equivalently ⟨a_k, σ₂ᵒ⟩ for k odd).
pub fn axis_sigma2_same() -> MultiPoly {
    poly(&[(31, 32, 0, 1), (-1, 32, 0, 0)])
}

/// ⟨a_k, σ₂ᵒ⟩ for k even (equivalently ⟨a_k, σ₂ᵉ⟩ for k odd).
pub fn axis_sigma2_other() -> MultiPoly {
    poly(&[(30, 32, 1, 0), (1, 32, 0, 1), (-1, 32, 0, 0)])
}

pub fn sigma1_norm() -> MultiPoly {
    poly(&[(3, 4, 2, 0), (65, 512, 1, 0), (-3, 2048, 0, 0), (7, 2048, 0, 1)])
}

/// Projections of a₁ (k = 1) or a₂ (k = 2) onto the 0-, 1/4- and
/// 1/32-eigenspaces of a₀. For k = 2 the scalar is μ = ⟨a₀, a₂⟩.
pub fn alpha(k: usize) -> Vector<MultiPoly> {
    let (sigma, nu, p, m) = shape(k);
    combo(&[(sigma, c(-4, 1)), (A0, &nu.scale(&rat(3, 1)) - &c(1, 8)), (p, c(7, 16)), (m, c(7, 16))])
}

pub fn beta(k: usize) -> Vector<MultiPoly> {
    let (sigma, nu, p, m) = shape(k);
    combo(&[(sigma, c(4, 1)), (A0, &c(1, 8) - &nu.scale(&rat(4, 1))), (p, c(1, 16)), (m, c(1, 16))])
}

pub fn gamma1() -> Vector<MultiPoly> {
    combo(&[(A1, c(1, 2)), (A_M1, c(-1, 2))])
}

fn shape(k: usize) -> (usize, MultiPoly, usize, usize) {
    match k {
        1 => (S1, MultiPoly::lambda(), A1, A_M1),
        2 => (S2E, MultiPoly::mu(), A2, A_M2),
        _ => panic!("eigenvector shapes exist for k = 1, 2 only"),
    }
}
