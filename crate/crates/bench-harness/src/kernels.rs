use spline_core::{interp_segment_fast, interp_segment_reference, DivisionStrategy, Segment};

/// Loop ID of the no-op sweep in the execution order.
pub const NOOP_ID: u8 = 0;

/// The interpolation kernels under test. The first two are the textbook
/// basis form with its constant division kept or folded into a
/// multiplication; the remaining three are the rearranged single-division
/// form with different division placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    SplintOneDiv,
    SplintOneMul,
    NewintOrig,
    NewintNoinv,
    NewintVol,
}

/// A registered timed loop: its order-code ID, its TSV column label, and
/// whether the column is a synthetic duplicate of another kernel (only used
/// when a build cannot provide the pinned-division variant).
#[derive(Debug, Clone, Copy)]
pub struct Variant {
    pub id: u8,
    pub label: &'static str,
    pub kernel: Kernel,
    pub synthetic: bool,
}

/// The five benchmark variants in column order; the no-op loop occupies
/// ID 0 of the order code.
pub fn default_registry() -> Vec<Variant> {
    vec![
        Variant {
            id: 1,
            label: "splint_one__div",
            kernel: Kernel::SplintOneDiv,
            synthetic: false,
        },
        Variant {
            id: 2,
            label: "splint_one__mul",
            kernel: Kernel::SplintOneMul,
            synthetic: false,
        },
        Variant {
            id: 3,
            label: "newint__orig",
            kernel: Kernel::NewintOrig,
            synthetic: false,
        },
        Variant {
            id: 4,
            label: "newint__noinv",
            kernel: Kernel::NewintNoinv,
            synthetic: false,
        },
        Variant {
            id: 5,
            label: "newint__vol",
            kernel: Kernel::NewintVol,
            synthetic: false,
        },
    ]
}

#[inline(always)]
pub(crate) fn splint_one_div(x: f64, seg: &Segment) -> f64 {
    interp_segment_reference(x, seg)
}

/// Basis form with the division by six replaced by a constant multiply.
#[inline(always)]
pub(crate) fn splint_one_mul(x: f64, seg: &Segment) -> f64 {
    const SIXTH: f64 = 1.0 / 6.0;
    let h = seg.x1 - seg.x0;
    let a = (seg.x1 - x) / h;
    let b = (x - seg.x0) / h;
    let c = (a * a * a - a) * (h * h) * SIXTH;
    let d = (b * b * b - b) * (h * h) * SIXTH;
    a * seg.y0 + b * seg.y1 + c * seg.ypp0 + d * seg.ypp1
}

#[inline(always)]
pub(crate) fn newint_orig(x: f64, seg: &Segment) -> f64 {
    interp_segment_fast(x, seg, DivisionStrategy::PrecomputedInverse)
}

#[inline(always)]
pub(crate) fn newint_noinv(x: f64, seg: &Segment) -> f64 {
    interp_segment_fast(x, seg, DivisionStrategy::DeferredDivision)
}

/// Single-division form with the reciprocal pinned in place. `black_box`
/// keeps the compiler from migrating or folding the division, the same job
/// the volatile qualifier does in C.
#[inline(always)]
pub(crate) fn newint_vol(x: f64, seg: &Segment) -> f64 {
    const SIXTH: f64 = 1.0 / 6.0;
    let ba = seg.x1 - seg.x0;
    let xa = x - seg.x0;
    let inv_ba = std::hint::black_box(1.0 / ba);
    let bx = seg.x1 - x;
    let ba2 = ba * ba;

    let lower = xa * seg.y1 + bx * seg.y0;
    let c = (xa * xa - ba2) * xa * seg.ypp1;
    let d = (bx * bx - ba2) * bx * seg.ypp0;

    (lower + SIXTH * (c + d)) * inv_ba
}

impl Kernel {
    /// Dispatching form, for callers outside the timed loops.
    #[inline(always)]
    pub fn eval(self, x: f64, seg: &Segment) -> f64 {
        match self {
            Kernel::SplintOneDiv => splint_one_div(x, seg),
            Kernel::SplintOneMul => splint_one_mul(x, seg),
            Kernel::NewintOrig => newint_orig(x, seg),
            Kernel::NewintNoinv => newint_noinv(x, seg),
            Kernel::NewintVol => newint_vol(x, seg),
        }
    }
}
