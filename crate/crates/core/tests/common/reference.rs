// Reference values used by the acceptance and reproduction tests.
// Columns: b1p, b2p, then the five Z2 functionals and the five Z3
// functionals in the order hl, w, pb, max, min. Population cells carry
// the number of printed decimals; `None` marks cells with no value.

pub struct PopRow {
    pub alt: &'static str,
    pub p: usize,
    pub cells: [Option<(f64, u32)>; 12],
}

pub struct PowerRow {
    pub alt: &'static str,
    pub n: usize,
    pub cells: [f64; 12],
}

pub const POPULATION: [PopRow; 56] = [
    PopRow { alt: "normal", p: 2, cells: [Some((0.0, 0)), Some((8.0, 0)), Some((0.0, 0)), Some((1.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((1.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((0.0, 0))] },
    PopRow { alt: "normal", p: 3, cells: [Some((0.0, 0)), Some((15.0, 0)), Some((0.0, 0)), Some((1.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((1.0, 0)), Some((0.0, 0)), Some((0.0, 0)), Some((0.0, 0))] },
    PopRow { alt: "indep_exp", p: 2, cells: [Some((8.0, 1)), Some((20.0, 1)), Some((1.0, 2)), Some((0.25, 2)), Some((2.0, 2)), Some((0.5, 2)), Some((0.5, 2)), Some((0.33, 2)), Some((0.7, 2)), Some((0.4, 2)), Some((0.17, 2)), Some((0.17, 2))] },
    PopRow { alt: "indep_exp", p: 3, cells: [Some((12.0, 1)), Some((32.9, 1)), Some((1.5, 2)), Some((0.13, 2)), Some((3.0, 2)), Some((0.5, 2)), Some((0.5, 2)), Some((0.5, 2)), Some((0.58, 2)), Some((0.6, 2)), Some((0.17, 2)), Some((0.17, 2))] },
    PopRow { alt: "lognormal:s2=2", p: 2, cells: [Some((79.2, 1)), Some((177.0, 1)), Some((0.73, 2)), Some((0.4, 2)), Some((1.16, 2)), Some((0.37, 2)), Some((0.37, 2)), Some((0.13, 2)), Some((0.88, 2)), Some((0.14, 2)), Some((0.07, 2)), Some((0.06, 2))] },
    PopRow { alt: "lognormal:s2=2", p: 3, cells: [Some((120.0, 1)), Some((270.7, 1)), Some((1.05, 2)), Some((0.28, 2)), Some((1.61, 2)), Some((0.36, 2)), Some((0.34, 2)), Some((0.17, 2)), Some((0.84, 2)), Some((0.18, 2)), Some((0.07, 2)), Some((0.05, 2))] },
    PopRow { alt: "lognormal:s2=0.125", p: 2, cells: [Some((2.8, 1)), Some((13.6, 1)), Some((0.6, 2)), Some((0.49, 2)), Some((0.87, 2)), Some((0.32, 2)), Some((0.28, 2)), Some((0.17, 2)), Some((0.83, 2)), Some((0.19, 2)), Some((0.09, 2)), Some((0.08, 2))] },
    PopRow { alt: "lognormal:s2=0.125", p: 3, cells: [Some((4.3, 1)), Some((24.5, 1)), Some((0.91, 2)), Some((0.34, 2)), Some((1.32, 2)), Some((0.35, 2)), Some((0.28, 2)), Some((0.27, 2)), Some((0.75, 2)), Some((0.3, 2)), Some((0.1, 2)), Some((0.09, 2))] },
    PopRow { alt: "lognormal:s2=0.0078125", p: 2, cells: [Some((0.2, 1)), Some((8.3, 1)), Some((0.07, 2)), Some((0.93, 2)), Some((0.07, 2)), Some((0.04, 2)), Some((0.03, 2)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2))] },
    PopRow { alt: "lognormal:s2=0.0078125", p: 3, cells: [Some((0.2, 1)), Some((15.5, 1)), Some((0.11, 2)), Some((0.9, 2)), Some((0.11, 2)), Some((0.05, 2)), Some((0.03, 2)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.0, 2)), Some((0.0, 2))] },
    PopRow { alt: "laplace1", p: 2, cells: [Some((2.7, 1)), Some((16.0, 1)), Some((0.67, 2)), Some((0.44, 2)), Some((1.0, 2)), Some((0.33, 2)), Some((0.33, 2)), Some((0.3, 2)), Some((0.72, 2)), Some((0.36, 2)), Some((0.15, 2)), Some((0.15, 2))] },
    PopRow { alt: "laplace1", p: 3, cells: [Some((6.0, 1)), Some((28.4, 1)), Some((1.2, 2)), Some((0.22, 2)), Some((2.0, 2)), Some((0.4, 2)), Some((0.4, 2)), Some((0.47, 2)), Some((0.6, 2)), Some((0.56, 2)), Some((0.16, 2)), Some((0.16, 2))] },
    PopRow { alt: "laplace2", p: 2, cells: [Some((0.0, 1)), Some((15.0, 1)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.3, 2)), Some((0.72, 2)), Some((0.36, 2)), Some((0.15, 2)), Some((0.15, 2))] },
    PopRow { alt: "laplace2", p: 3, cells: [Some((0.0, 1)), Some((27.0, 1)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.47, 2)), Some((0.6, 2)), Some((0.56, 2)), Some((0.16, 2)), Some((0.16, 2))] },
    PopRow { alt: "beta:a=1,b=1", p: 2, cells: [Some((0.1, 1)), Some((6.0, 1)), Some((0.1, 2)), Some((0.9, 2)), Some((0.11, 2)), Some((0.07, 2)), Some((0.03, 2)), Some((1.38, 2)), Some((0.09, 2)), Some((4.71, 2)), Some((0.75, 2)), Some((0.63, 2))] },
    PopRow { alt: "beta:a=1,b=1", p: 3, cells: [Some((0.3, 1)), Some((12.4, 1)), Some((0.23, 2)), Some((0.78, 2)), Some((0.25, 2)), Some((0.09, 2)), Some((0.05, 2)), Some((2.06, 2)), Some((0.03, 2)), Some((7.16, 2)), Some((0.79, 2)), Some((0.63, 2))] },
    PopRow { alt: "beta:a=1,b=2", p: 2, cells: [Some((0.6, 1)), Some((7.1, 1)), Some((0.41, 2)), Some((0.62, 2)), Some((0.57, 2)), Some((0.32, 2)), Some((0.1, 2)), Some((0.4, 2)), Some((0.64, 2)), Some((0.51, 2)), Some((0.21, 2)), Some((0.19, 2))] },
    PopRow { alt: "beta:a=1,b=2", p: 3, cells: [Some((1.0, 1)), Some((14.1, 1)), Some((0.58, 2)), Some((0.5, 2)), Some((0.84, 2)), Some((0.38, 2)), Some((0.1, 2)), Some((0.76, 2)), Some((0.42, 2)), Some((1.02, 2)), Some((0.26, 2)), Some((0.25, 2))] },
    PopRow { alt: "beta:a=2,b=2", p: 2, cells: [Some((0.1, 1)), Some((6.5, 1)), Some((0.08, 2)), Some((0.92, 2)), Some((0.09, 2)), Some((0.05, 2)), Some((0.03, 2)), Some((0.71, 2)), Some((0.41, 2)), Some((1.12, 2)), Some((0.41, 2)), Some((0.3, 2))] },
    PopRow { alt: "beta:a=2,b=2", p: 3, cells: [Some((0.3, 1)), Some((13.1, 1)), Some((0.18, 2)), Some((0.83, 2)), Some((0.2, 2)), Some((0.07, 2)), Some((0.05, 2)), Some((1.07, 2)), Some((0.26, 2)), Some((1.74, 2)), Some((0.47, 2)), Some((0.3, 2))] },
    PopRow { alt: "chi2:df=2", p: 2, cells: [Some((7.7, 1)), Some((23.9, 1)), Some((0.97, 2)), Some((0.27, 2)), Some((1.89, 2)), Some((0.52, 2)), Some((0.44, 2)), Some((0.38, 2)), Some((0.66, 2)), Some((0.46, 2)), Some((0.2, 2)), Some((0.18, 2))] },
    PopRow { alt: "chi2:df=2", p: 3, cells: [Some((13.5, 1)), Some((41.9, 1)), Some((1.54, 2)), Some((0.12, 2)), Some((3.15, 2)), Some((0.53, 2)), Some((0.5, 2)), Some((0.61, 2)), Some((0.5, 2)), Some((0.77, 2)), Some((0.21, 2)), Some((0.2, 2))] },
    PopRow { alt: "chi2:df=8", p: 2, cells: [Some((1.9, 1)), Some((12.0, 1)), Some((0.54, 2)), Some((0.53, 2)), Some((0.76, 2)), Some((0.32, 2)), Some((0.22, 2)), Some((0.16, 2)), Some((0.85, 2)), Some((0.18, 2)), Some((0.09, 2)), Some((0.07, 2))] },
    PopRow { alt: "chi2:df=8", p: 3, cells: [Some((3.4, 1)), Some((21.7, 1)), Some((0.91, 2)), Some((0.34, 2)), Some((1.3, 2)), Some((0.34, 2)), Some((0.29, 2)), Some((0.28, 2)), Some((0.75, 2)), Some((0.31, 2)), Some((0.1, 2)), Some((0.09, 2))] },
    PopRow { alt: "t:df=2", p: 2, cells: [None, None, None, None, None, None, None, None, None, None, None, None] },
    PopRow { alt: "t:df=2", p: 3, cells: [None, None, None, None, None, None, None, None, None, None, None, None] },
    PopRow { alt: "al:m=0,r=0", p: 2, cells: [Some((0.0, 1)), Some((16.0, 1)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.33, 2)), Some((0.69, 2)), Some((0.4, 2)), Some((0.17, 2)), Some((0.17, 2))] },
    PopRow { alt: "al:m=0,r=0", p: 3, cells: [Some((0.0, 1)), Some((29.9, 1)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.56, 2)), Some((0.54, 2)), Some((0.68, 2)), Some((0.19, 2)), Some((0.18, 2))] },
    PopRow { alt: "al:m=1,r=0", p: 2, cells: [Some((5.6, 1)), Some((20.0, 1)), Some((0.76, 2)), Some((0.37, 2)), Some((1.36, 2)), Some((0.51, 2)), Some((0.25, 2)), Some((0.34, 2)), Some((0.69, 2)), Some((0.41, 2)), Some((0.19, 2)), Some((0.15, 2))] },
    PopRow { alt: "al:m=1,r=0", p: 3, cells: [Some((8.3, 1)), Some((35.7, 1)), Some((1.1, 1)), Some((0.23, 2)), Some((2.01, 2)), Some((0.56, 2)), Some((0.27, 2)), Some((0.56, 2)), Some((0.54, 2)), Some((0.69, 2)), Some((0.22, 2)), Some((0.17, 2))] },
    PopRow { alt: "al:m=3,r=0", p: 2, cells: [Some((6.8, 1)), Some((20.1, 1)), Some((0.87, 2)), Some((0.3, 2)), Some((1.71, 2)), Some((0.55, 2)), Some((0.32, 2)), Some((0.35, 2)), Some((0.68, 2)), Some((0.43, 2)), Some((0.2, 2)), Some((0.15, 2))] },
    PopRow { alt: "al:m=3,r=0", p: 3, cells: [Some((9.8, 1)), Some((36.7, 1)), Some((1.25, 2)), Some((0.18, 2)), Some((2.43, 2)), Some((0.6, 2)), Some((0.33, 2)), Some((0.57, 2)), Some((0.53, 2)), Some((0.7, 2)), Some((0.23, 2)), Some((0.17, 2))] },
    PopRow { alt: "al:m=1,r=0.5", p: 2, cells: [Some((5.1, 1)), Some((19.5, 1)), Some((0.76, 2)), Some((0.37, 2)), Some((1.37, 2)), Some((0.51, 2)), Some((0.25, 2)), Some((0.34, 2)), Some((0.68, 2)), Some((0.42, 2)), Some((0.19, 2)), Some((0.15, 2))] },
    PopRow { alt: "al:m=1,r=0.5", p: 3, cells: [Some((7.1, 1)), Some((34.8, 1)), Some((0.97, 2)), Some((0.29, 2)), Some((1.66, 2)), Some((0.51, 2)), Some((0.23, 2)), Some((0.55, 2)), Some((0.54, 2)), Some((0.68, 2)), Some((0.21, 2)), Some((0.17, 2))] },
    PopRow { alt: "al:m=1,r=0.9", p: 2, cells: [Some((4.7, 1)), Some((19.3, 1)), Some((0.66, 2)), Some((0.43, 2)), Some((1.11, 2)), Some((0.46, 2)), Some((0.2, 2)), Some((0.34, 2)), Some((0.69, 2)), Some((0.4, 2)), Some((0.18, 2)), Some((0.15, 2))] },
    PopRow { alt: "al:m=1,r=0.9", p: 3, cells: [Some((6.3, 1)), Some((34.3, 1)), Some((0.89, 2)), Some((0.33, 2)), Some((1.45, 2)), Some((0.48, 2)), Some((0.21, 2)), Some((0.55, 2)), Some((0.54, 2)), Some((0.68, 2)), Some((0.21, 2)), Some((0.17, 2))] },
    PopRow { alt: "mix:w=0.1,m=1,r=0", p: 2, cells: [Some((0.0, 1)), Some((8.1, 1)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.01, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=1,r=0", p: 3, cells: [Some((0.1, 1)), Some((15.2, 1)), Some((0.03, 2)), Some((0.97, 2)), Some((0.03, 2)), Some((0.03, 2)), Some((0.0, 0)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.01, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=2,r=0", p: 2, cells: [Some((0.5, 1)), Some((8.9, 1)), Some((0.18, 2)), Some((0.82, 2)), Some((0.22, 2)), Some((0.18, 2)), Some((0.0, 2)), Some((0.07, 2)), Some((0.93, 2)), Some((0.07, 2)), Some((0.07, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=2,r=0", p: 3, cells: [None, None, Some((0.29, 2)), Some((0.71, 2)), Some((0.42, 2)), Some((0.29, 2)), Some((0.0, 0)), Some((0.13, 2)), Some((0.87, 2)), Some((0.15, 2)), Some((0.13, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=0,r=0.5", p: 2, cells: [Some((0.0, 1)), Some((8.1, 1)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=0,r=0.5", p: 3, cells: [None, None, Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.01, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=1,r=0.5", p: 2, cells: [Some((0.1, 1)), Some((8.4, 1)), Some((0.04, 2)), Some((0.96, 2)), Some((0.04, 2)), Some((0.04, 2)), Some((0.0, 2)), Some((0.02, 2)), Some((0.98, 2)), Some((0.02, 2)), Some((0.02, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.1,m=1,r=0.5", p: 3, cells: [None, None, Some((0.1, 2)), Some((0.9, 2)), Some((0.11, 2)), Some((0.09, 2)), Some((0.01, 2)), Some((0.08, 2)), Some((0.92, 2)), Some((0.08, 2)), Some((0.06, 2)), Some((0.01, 2))] },
    PopRow { alt: "mix:w=0.1,m=2,r=0.5", p: 2, cells: [Some((0.8, 1)), Some((9.1, 1)), Some((0.23, 2)), Some((0.78, 2)), Some((0.29, 2)), Some((0.21, 2)), Some((0.01, 2)), Some((0.13, 2)), Some((0.87, 2)), Some((0.14, 2)), Some((0.11, 2)), Some((0.02, 2))] },
    PopRow { alt: "mix:w=0.1,m=2,r=0.5", p: 3, cells: [None, None, Some((0.37, 2)), Some((0.64, 2)), Some((0.55, 2)), Some((0.34, 2)), Some((0.02, 2)), Some((0.25, 2)), Some((0.76, 2)), Some((0.3, 2)), Some((0.21, 2)), Some((0.02, 2))] },
    PopRow { alt: "mix:w=0.25,m=1,r=0", p: 2, cells: [Some((0.0, 1)), Some((7.9, 1)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.01, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.25,m=1,r=0", p: 3, cells: [None, None, Some((0.03, 2)), Some((0.97, 2)), Some((0.03, 2)), Some((0.03, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.25,m=2,r=0", p: 2, cells: [Some((0.3, 1)), Some((7.8, 1)), Some((0.16, 2)), Some((0.84, 2)), Some((0.2, 2)), Some((0.16, 2)), Some((0.0, 2)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.01, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.25,m=2,r=0", p: 3, cells: [None, None, Some((0.26, 2)), Some((0.74, 2)), Some((0.36, 2)), Some((0.26, 2)), Some((0.0, 0)), Some((0.03, 2)), Some((0.97, 2)), Some((0.03, 2)), Some((0.03, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.25,m=0,r=0.5", p: 2, cells: [Some((0.0, 1)), Some((8.2, 1)), Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.01, 2)), Some((0.99, 2)), Some((0.01, 2)), Some((0.01, 2)), Some((0.0, 2))] },
    PopRow { alt: "mix:w=0.25,m=0,r=0.5", p: 3, cells: [None, None, Some((0.0, 2)), Some((1.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.0, 2)), Some((0.04, 2)), Some((0.96, 2)), Some((0.04, 2)), Some((0.02, 2)), Some((0.01, 2))] },
    PopRow { alt: "mix:w=0.25,m=1,r=0.5", p: 2, cells: [Some((0.2, 1)), Some((8.2, 1)), Some((0.08, 2)), Some((0.92, 2)), Some((0.08, 2)), Some((0.06, 2)), Some((0.02, 2)), Some((0.02, 2)), Some((0.98, 2)), Some((0.02, 2)), Some((0.01, 2)), Some((0.01, 2))] },
    PopRow { alt: "mix:w=0.25,m=1,r=0.5", p: 3, cells: [None, None, Some((0.19, 2)), Some((0.82, 2)), Some((0.22, 2)), Some((0.15, 2)), Some((0.02, 2)), Some((0.08, 2)), Some((0.92, 2)), Some((0.09, 2)), Some((0.05, 2)), Some((0.02, 2))] },
    PopRow { alt: "mix:w=0.25,m=2,r=0.5", p: 2, cells: [Some((0.6, 1)), Some((7.9, 1)), Some((0.27, 2)), Some((0.74, 2)), Some((0.34, 2)), Some((0.23, 2)), Some((0.04, 2)), Some((0.05, 2)), Some((0.95, 2)), Some((0.05, 2)), Some((0.02, 2)), Some((0.02, 2))] },
    PopRow { alt: "mix:w=0.25,m=2,r=0.5", p: 3, cells: [None, None, Some((0.46, 2)), Some((0.58, 2)), Some((0.66, 2)), Some((0.36, 2)), Some((0.05, 2)), Some((0.13, 2)), Some((0.87, 2)), Some((0.14, 2)), Some((0.07, 2)), Some((0.03, 2))] },
];

pub const POWER_P2: [PowerRow; 54] = [
    PowerRow { alt: "indep_exp", n: 20, cells: [0.79, 0.54, 0.84, 0.86, 0.86, 0.84, 0.72, 0.24, 0.23, 0.2, 0.15, 0.26] },
    PowerRow { alt: "indep_exp", n: 50, cells: [1.0, 0.88, 1.0, 1.0, 1.0, 1.0, 1.0, 0.41, 0.39, 0.37, 0.3, 0.4] },
    PowerRow { alt: "lognormal:s2=2", n: 20, cells: [0.95, 0.82, 0.97, 0.97, 0.97, 0.97, 0.89, 0.5, 0.48, 0.44, 0.36, 0.51] },
    PowerRow { alt: "lognormal:s2=2", n: 50, cells: [1.0, 0.99, 1.0, 1.0, 1.0, 1.0, 1.0, 0.85, 0.84, 0.83, 0.78, 0.82] },
    PowerRow { alt: "lognormal:s2=0.125", n: 20, cells: [0.38, 0.28, 0.29, 0.33, 0.34, 0.35, 0.22, 0.11, 0.1, 0.09, 0.07, 0.12] },
    PowerRow { alt: "lognormal:s2=0.125", n: 50, cells: [0.83, 0.56, 0.86, 0.86, 0.86, 0.84, 0.7, 0.14, 0.13, 0.11, 0.08, 0.15] },
    PowerRow { alt: "lognormal:s2=0.0078125", n: 20, cells: [0.07, 0.06, 0.06, 0.06, 0.06, 0.07, 0.06, 0.05, 0.05, 0.05, 0.05, 0.06] },
    PowerRow { alt: "lognormal:s2=0.0078125", n: 50, cells: [0.12, 0.09, 0.1, 0.1, 0.1, 0.11, 0.08, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "laplace1", n: 20, cells: [0.57, 0.51, 0.58, 0.6, 0.6, 0.59, 0.5, 0.06, 0.05, 0.04, 0.03, 0.07] },
    PowerRow { alt: "laplace1", n: 50, cells: [0.92, 0.86, 0.92, 0.92, 0.92, 0.91, 0.83, 0.09, 0.08, 0.07, 0.05, 0.12] },
    PowerRow { alt: "laplace2", n: 20, cells: [0.37, 0.48, 0.25, 0.27, 0.29, 0.3, 0.19, 0.08, 0.07, 0.05, 0.03, 0.09] },
    PowerRow { alt: "laplace2", n: 50, cells: [0.57, 0.84, 0.38, 0.39, 0.4, 0.4, 0.24, 0.1, 0.09, 0.07, 0.05, 0.14] },
    PowerRow { alt: "beta:a=1,b=1", n: 20, cells: [0.02, 0.0, 0.05, 0.06, 0.06, 0.06, 0.04, 0.41, 0.43, 0.43, 0.38, 0.34] },
    PowerRow { alt: "beta:a=1,b=1", n: 50, cells: [0.01, 0.0, 0.12, 0.12, 0.12, 0.12, 0.09, 0.98, 0.98, 0.98, 0.96, 0.93] },
    PowerRow { alt: "beta:a=1,b=2", n: 20, cells: [0.08, 0.03, 0.11, 0.13, 0.15, 0.17, 0.08, 0.18, 0.19, 0.19, 0.17, 0.16] },
    PowerRow { alt: "beta:a=1,b=2", n: 50, cells: [0.26, 0.01, 0.59, 0.6, 0.62, 0.63, 0.31, 0.4, 0.4, 0.39, 0.35, 0.34] },
    PowerRow { alt: "beta:a=2,b=2", n: 20, cells: [0.02, 0.01, 0.04, 0.04, 0.04, 0.04, 0.04, 0.14, 0.15, 0.14, 0.13, 0.13] },
    PowerRow { alt: "beta:a=2,b=2", n: 50, cells: [0.02, 0.0, 0.08, 0.08, 0.08, 0.07, 0.09, 0.53, 0.52, 0.5, 0.43, 0.46] },
    PowerRow { alt: "chi2:df=2", n: 20, cells: [0.79, 0.65, 0.78, 0.83, 0.84, 0.83, 0.61, 0.24, 0.22, 0.2, 0.15, 0.25] },
    PowerRow { alt: "chi2:df=2", n: 50, cells: [1.0, 0.95, 1.0, 1.0, 1.0, 1.0, 0.98, 0.36, 0.35, 0.33, 0.27, 0.34] },
    PowerRow { alt: "chi2:df=8", n: 20, cells: [0.33, 0.25, 0.23, 0.27, 0.28, 0.29, 0.17, 0.1, 0.09, 0.08, 0.07, 0.11] },
    PowerRow { alt: "chi2:df=8", n: 50, cells: [0.76, 0.51, 0.79, 0.8, 0.8, 0.78, 0.59, 0.11, 0.1, 0.09, 0.07, 0.12] },
    PowerRow { alt: "t:df=2", n: 20, cells: [0.72, 0.79, 0.57, 0.62, 0.63, 0.64, 0.41, 0.32, 0.31, 0.28, 0.24, 0.31] },
    PowerRow { alt: "t:df=2", n: 50, cells: [0.92, 0.99, 0.84, 0.85, 0.85, 0.85, 0.61, 0.66, 0.66, 0.65, 0.61, 0.58] },
    PowerRow { alt: "al:m=0,r=0", n: 20, cells: [0.42, 0.54, 0.27, 0.31, 0.32, 0.33, 0.21, 0.08, 0.07, 0.05, 0.03, 0.1] },
    PowerRow { alt: "al:m=0,r=0", n: 50, cells: [0.61, 0.89, 0.42, 0.43, 0.44, 0.44, 0.27, 0.1, 0.08, 0.07, 0.05, 0.12] },
    PowerRow { alt: "al:m=1,r=0", n: 20, cells: [0.67, 0.57, 0.57, 0.65, 0.68, 0.69, 0.37, 0.16, 0.15, 0.13, 0.09, 0.18] },
    PowerRow { alt: "al:m=1,r=0", n: 50, cells: [0.98, 0.9, 0.99, 0.99, 0.99, 0.99, 0.79, 0.21, 0.19, 0.18, 0.14, 0.21] },
    PowerRow { alt: "al:m=3,r=0", n: 20, cells: [0.73, 0.58, 0.68, 0.76, 0.78, 0.79, 0.46, 0.19, 0.18, 0.16, 0.12, 0.2] },
    PowerRow { alt: "al:m=3,r=0", n: 50, cells: [1.0, 0.91, 1.0, 1.0, 1.0, 1.0, 0.92, 0.24, 0.23, 0.21, 0.17, 0.24] },
    PowerRow { alt: "al:m=1,r=0.5", n: 20, cells: [0.64, 0.56, 0.52, 0.6, 0.63, 0.64, 0.34, 0.15, 0.14, 0.11, 0.08, 0.17] },
    PowerRow { alt: "al:m=1,r=0.5", n: 50, cells: [0.97, 0.9, 0.97, 0.97, 0.97, 0.97, 0.72, 0.19, 0.18, 0.17, 0.13, 0.21] },
    PowerRow { alt: "al:m=1,r=0.9", n: 20, cells: [0.61, 0.57, 0.5, 0.6, 0.59, 0.61, 0.33, 0.14, 0.13, 0.11, 0.07, 0.15] },
    PowerRow { alt: "al:m=1,r=0.9", n: 50, cells: [0.95, 0.9, 0.95, 0.95, 0.96, 0.96, 0.68, 0.19, 0.18, 0.16, 0.13, 0.21] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0", n: 20, cells: [0.06, 0.06, 0.05, 0.05, 0.05, 0.06, 0.05, 0.05, 0.05, 0.04, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0", n: 50, cells: [0.07, 0.07, 0.06, 0.06, 0.06, 0.07, 0.06, 0.05, 0.04, 0.04, 0.04, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0", n: 20, cells: [0.13, 0.12, 0.1, 0.11, 0.12, 0.13, 0.09, 0.05, 0.05, 0.04, 0.04, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0", n: 50, cells: [0.33, 0.19, 0.27, 0.29, 0.3, 0.33, 0.13, 0.05, 0.04, 0.04, 0.04, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=0,r=0.5", n: 20, cells: [0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.04, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=0,r=0.5", n: 50, cells: [0.06, 0.06, 0.05, 0.06, 0.06, 0.06, 0.05, 0.05, 0.04, 0.04, 0.04, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0.5", n: 20, cells: [0.07, 0.07, 0.06, 0.06, 0.07, 0.07, 0.06, 0.05, 0.05, 0.04, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0.5", n: 50, cells: [0.11, 0.1, 0.09, 0.1, 0.1, 0.1, 0.08, 0.05, 0.05, 0.05, 0.04, 0.06] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0.5", n: 20, cells: [0.17, 0.13, 0.13, 0.14, 0.15, 0.15, 0.11, 0.06, 0.06, 0.05, 0.05, 0.06] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0.5", n: 50, cells: [0.43, 0.23, 0.36, 0.38, 0.39, 0.4, 0.2, 0.09, 0.08, 0.07, 0.06, 0.1] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0", n: 20, cells: [0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0", n: 50, cells: [0.06, 0.05, 0.06, 0.06, 0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0", n: 20, cells: [0.07, 0.05, 0.08, 0.08, 0.09, 0.1, 0.07, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0", n: 50, cells: [0.14, 0.04, 0.21, 0.23, 0.24, 0.27, 0.12, 0.06, 0.06, 0.06, 0.06, 0.06] },
    PowerRow { alt: "mix:w=0.25,m=0,r=0.5", n: 20, cells: [0.06, 0.06, 0.05, 0.05, 0.06, 0.06, 0.05, 0.05, 0.05, 0.04, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=0,r=0.5", n: 50, cells: [0.07, 0.08, 0.06, 0.06, 0.06, 0.06, 0.06, 0.05, 0.04, 0.04, 0.04, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0.5", n: 20, cells: [0.07, 0.07, 0.07, 0.08, 0.08, 0.08, 0.07, 0.05, 0.05, 0.04, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0.5", n: 50, cells: [0.13, 0.08, 0.14, 0.14, 0.14, 0.13, 0.12, 0.05, 0.05, 0.05, 0.04, 0.06] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0.5", n: 20, cells: [0.11, 0.06, 0.14, 0.15, 0.15, 0.15, 0.14, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0.5", n: 50, cells: [0.32, 0.06, 0.44, 0.45, 0.45, 0.44, 0.31, 0.07, 0.07, 0.06, 0.06, 0.08] },
];

pub const POWER_P3: [PowerRow; 54] = [
    PowerRow { alt: "indep_exp", n: 20, cells: [0.82, 0.61, 0.84, 0.86, 0.84, 0.77, 0.68, 0.29, 0.29, 0.26, 0.19, 0.26] },
    PowerRow { alt: "indep_exp", n: 50, cells: [1.0, 0.93, 1.0, 1.0, 1.0, 1.0, 1.0, 0.59, 0.59, 0.57, 0.46, 0.49] },
    PowerRow { alt: "lognormal:s2=2", n: 20, cells: [0.97, 0.89, 0.98, 0.98, 0.98, 0.96, 0.88, 0.61, 0.63, 0.62, 0.52, 0.53] },
    PowerRow { alt: "lognormal:s2=2", n: 50, cells: [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.95, 0.95, 0.95, 0.9, 0.88] },
    PowerRow { alt: "lognormal:s2=0.125", n: 20, cells: [0.41, 0.33, 0.28, 0.3, 0.3, 0.29, 0.21, 0.13, 0.12, 0.11, 0.08, 0.13] },
    PowerRow { alt: "lognormal:s2=0.125", n: 50, cells: [0.89, 0.69, 0.87, 0.88, 0.88, 0.84, 0.63, 0.22, 0.21, 0.19, 0.14, 0.21] },
    PowerRow { alt: "lognormal:s2=0.0078125", n: 20, cells: [0.07, 0.07, 0.06, 0.06, 0.06, 0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "lognormal:s2=0.0078125", n: 50, cells: [0.11, 0.09, 0.09, 0.09, 0.09, 0.09, 0.08, 0.06, 0.06, 0.06, 0.06, 0.06] },
    PowerRow { alt: "laplace1", n: 20, cells: [0.71, 0.61, 0.75, 0.76, 0.75, 0.68, 0.59, 0.09, 0.08, 0.06, 0.04, 0.11] },
    PowerRow { alt: "laplace1", n: 50, cells: [0.99, 0.94, 0.99, 1.0, 0.99, 0.99, 0.94, 0.24, 0.23, 0.2, 0.12, 0.24] },
    PowerRow { alt: "laplace2", n: 20, cells: [0.46, 0.58, 0.33, 0.35, 0.35, 0.32, 0.23, 0.09, 0.08, 0.07, 0.05, 0.1] },
    PowerRow { alt: "laplace2", n: 50, cells: [0.72, 0.93, 0.51, 0.53, 0.54, 0.52, 0.3, 0.17, 0.16, 0.14, 0.08, 0.16] },
    PowerRow { alt: "beta:a=1,b=1", n: 20, cells: [0.02, 0.01, 0.06, 0.06, 0.06, 0.06, 0.05, 0.28, 0.31, 0.33, 0.28, 0.2] },
    PowerRow { alt: "beta:a=1,b=1", n: 50, cells: [0.02, 0.0, 0.15, 0.16, 0.16, 0.16, 0.11, 0.96, 0.97, 0.96, 0.92, 0.85] },
    PowerRow { alt: "beta:a=1,b=2", n: 20, cells: [0.08, 0.05, 0.09, 0.1, 0.1, 0.11, 0.09, 0.16, 0.16, 0.17, 0.14, 0.13] },
    PowerRow { alt: "beta:a=1,b=2", n: 50, cells: [0.21, 0.02, 0.45, 0.49, 0.52, 0.56, 0.2, 0.45, 0.46, 0.46, 0.38, 0.35] },
    PowerRow { alt: "beta:a=2,b=2", n: 20, cells: [0.02, 0.01, 0.04, 0.05, 0.05, 0.05, 0.04, 0.1, 0.1, 0.11, 0.1, 0.08] },
    PowerRow { alt: "beta:a=2,b=2", n: 50, cells: [0.02, 0.0, 0.1, 0.1, 0.09, 0.09, 0.09, 0.4, 0.4, 0.39, 0.32, 0.32] },
    PowerRow { alt: "chi2:df=2", n: 20, cells: [0.89, 0.79, 0.88, 0.9, 0.9, 0.86, 0.72, 0.35, 0.34, 0.32, 0.23, 0.31] },
    PowerRow { alt: "chi2:df=2", n: 50, cells: [1.0, 0.99, 1.0, 1.0, 1.0, 1.0, 0.99, 0.71, 0.71, 0.69, 0.56, 0.6] },
    PowerRow { alt: "chi2:df=8", n: 20, cells: [0.39, 0.31, 0.31, 0.33, 0.32, 0.29, 0.23, 0.1, 0.09, 0.08, 0.06, 0.1] },
    PowerRow { alt: "chi2:df=8", n: 50, cells: [0.87, 0.62, 0.87, 0.88, 0.87, 0.82, 0.68, 0.18, 0.18, 0.16, 0.12, 0.17] },
    PowerRow { alt: "t:df=2", n: 20, cells: [0.83, 0.89, 0.7, 0.75, 0.76, 0.74, 0.5, 0.34, 0.36, 0.36, 0.32, 0.3] },
    PowerRow { alt: "t:df=2", n: 50, cells: [0.98, 1.0, 0.95, 0.95, 0.95, 0.95, 0.72, 0.77, 0.77, 0.75, 0.69, 0.69] },
    PowerRow { alt: "al:m=0,r=0", n: 20, cells: [0.58, 0.71, 0.43, 0.46, 0.46, 0.44, 0.3, 0.1, 0.08, 0.07, 0.04, 0.11] },
    PowerRow { alt: "al:m=0,r=0", n: 50, cells: [0.8, 0.98, 0.61, 0.62, 0.63, 0.62, 0.36, 0.16, 0.14, 0.13, 0.08, 0.15] },
    PowerRow { alt: "al:m=1,r=0", n: 20, cells: [0.75, 0.71, 0.58, 0.65, 0.67, 0.66, 0.38, 0.24, 0.22, 0.21, 0.15, 0.22] },
    PowerRow { alt: "al:m=1,r=0", n: 50, cells: [0.99, 0.98, 0.99, 0.99, 0.99, 0.99, 0.73, 0.35, 0.34, 0.32, 0.23, 0.29] },
    PowerRow { alt: "al:m=3,r=0", n: 20, cells: [0.78, 0.71, 0.64, 0.72, 0.74, 0.73, 0.41, 0.28, 0.27, 0.26, 0.19, 0.26] },
    PowerRow { alt: "al:m=3,r=0", n: 50, cells: [1.0, 0.98, 1.0, 1.0, 1.0, 1.0, 0.83, 0.39, 0.39, 0.37, 0.28, 0.32] },
    PowerRow { alt: "al:m=1,r=0.5", n: 20, cells: [0.72, 0.71, 0.55, 0.61, 0.62, 0.61, 0.36, 0.2, 0.19, 0.17, 0.12, 0.2] },
    PowerRow { alt: "al:m=1,r=0.5", n: 50, cells: [0.98, 0.98, 0.97, 0.98, 0.98, 0.98, 0.65, 0.31, 0.3, 0.27, 0.19, 0.27] },
    PowerRow { alt: "al:m=1,r=0.9", n: 20, cells: [0.7, 0.71, 0.53, 0.58, 0.6, 0.58, 0.35, 0.19, 0.17, 0.16, 0.11, 0.18] },
    PowerRow { alt: "al:m=1,r=0.9", n: 50, cells: [0.98, 0.98, 0.95, 0.96, 0.96, 0.96, 0.61, 0.29, 0.28, 0.25, 0.17, 0.25] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0", n: 20, cells: [0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0", n: 50, cells: [0.07, 0.07, 0.06, 0.07, 0.07, 0.07, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0", n: 20, cells: [0.15, 0.13, 0.11, 0.12, 0.12, 0.12, 0.09, 0.06, 0.06, 0.06, 0.05, 0.06] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0", n: 50, cells: [0.39, 0.21, 0.27, 0.32, 0.36, 0.42, 0.12, 0.07, 0.07, 0.07, 0.06, 0.07] },
    PowerRow { alt: "mix:w=0.1,m=0,r=0.5", n: 20, cells: [0.05, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=0,r=0.5", n: 50, cells: [0.06, 0.07, 0.06, 0.06, 0.06, 0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0.5", n: 20, cells: [0.16, 0.11, 0.14, 0.14, 0.14, 0.14, 0.12, 0.05, 0.05, 0.05, 0.05, 0.06] },
    PowerRow { alt: "mix:w=0.1,m=1,r=0.5", n: 50, cells: [0.15, 0.12, 0.11, 0.12, 0.12, 0.12, 0.09, 0.07, 0.07, 0.06, 0.05, 0.07] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0.5", n: 20, cells: [0.74, 0.32, 0.68, 0.69, 0.7, 0.71, 0.3, 0.14, 0.13, 0.12, 0.09, 0.18] },
    PowerRow { alt: "mix:w=0.1,m=2,r=0.5", n: 50, cells: [0.54, 0.25, 0.4, 0.44, 0.48, 0.51, 0.16, 0.14, 0.14, 0.13, 0.09, 0.13] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0", n: 20, cells: [0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0", n: 50, cells: [0.05, 0.05, 0.06, 0.06, 0.06, 0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0", n: 20, cells: [0.07, 0.05, 0.09, 0.09, 0.09, 0.09, 0.08, 0.06, 0.06, 0.06, 0.06, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0", n: 50, cells: [0.12, 0.04, 0.21, 0.24, 0.27, 0.32, 0.11, 0.06, 0.06, 0.06, 0.06, 0.06] },
    PowerRow { alt: "mix:w=0.25,m=0,r=0.5", n: 20, cells: [0.06, 0.07, 0.06, 0.06, 0.06, 0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=0,r=0.5", n: 50, cells: [0.08, 0.09, 0.06, 0.07, 0.07, 0.06, 0.06, 0.05, 0.05, 0.05, 0.05, 0.06] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0.5", n: 20, cells: [0.08, 0.07, 0.09, 0.08, 0.08, 0.08, 0.08, 0.05, 0.05, 0.05, 0.05, 0.05] },
    PowerRow { alt: "mix:w=0.25,m=1,r=0.5", n: 50, cells: [0.18, 0.1, 0.19, 0.19, 0.2, 0.17, 0.14, 0.06, 0.06, 0.06, 0.05, 0.07] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0.5", n: 20, cells: [0.11, 0.07, 0.15, 0.15, 0.15, 0.13, 0.13, 0.06, 0.06, 0.06, 0.06, 0.06] },
    PowerRow { alt: "mix:w=0.25,m=2,r=0.5", n: 50, cells: [0.35, 0.06, 0.51, 0.54, 0.57, 0.56, 0.25, 0.08, 0.08, 0.08, 0.07, 0.08] },
];
