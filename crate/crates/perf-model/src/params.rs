/// Number of model parameters.
pub const PARAM_COUNT: usize = 9;

/// Parameter names in canonical (TSV column) order.
pub const PARAM_NAMES: [&str; PARAM_COUNT] = [
    "m_l3",
    "m_mm",
    "b_l3",
    "t",
    "s",
    "p",
    "mo",
    "sigma0",
    "sigma_inf",
];

/// The nine-parameter execution-time model, in ns/point except where noted.
///
/// Slopes `m_l3`/`m_mm` describe the cache-resident and main-memory regimes,
/// `b_l3` is the cache-regime intercept in ns, `transition` (points) is
/// where the Weibull bridge starts, `weibull_scale` (1/points) and
/// `weibull_power` shape the bridge, `mode_offset` is the Gamma noise mode
/// above the baseline, and `sigma0` (ns) / `sigma_inf` (ns/point) are the
/// non-scaling and scaling noise magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub m_l3: f64,
    pub m_mm: f64,
    pub b_l3: f64,
    pub transition: f64,
    pub weibull_scale: f64,
    pub weibull_power: f64,
    pub mode_offset: f64,
    pub sigma0: f64,
    pub sigma_inf: f64,
}

impl ModelParams {
    pub fn to_array(&self) -> [f64; PARAM_COUNT] {
        [
            self.m_l3,
            self.m_mm,
            self.b_l3,
            self.transition,
            self.weibull_scale,
            self.weibull_power,
            self.mode_offset,
            self.sigma0,
            self.sigma_inf,
        ]
    }

    pub fn from_array(a: [f64; PARAM_COUNT]) -> Self {
        Self {
            m_l3: a[0],
            m_mm: a[1],
            b_l3: a[2],
            transition: a[3],
            weibull_scale: a[4],
            weibull_power: a[5],
            mode_offset: a[6],
            sigma0: a[7],
            sigma_inf: a[8],
        }
    }

    /// Published posterior medians for the original rearranged-formula
    /// kernel; a convenient realistic parameter point.
    pub fn newint_orig_medians() -> Self {
        Self {
            m_l3: 5.28,
            m_mm: 5.49,
            b_l3: 3.05e-3,
            transition: 2.37e5,
            weibull_scale: 5.53e-6,
            weibull_power: 0.685,
            mode_offset: 0.753,
            sigma0: 590.0,
            sigma_inf: 0.0768,
        }
    }
}
