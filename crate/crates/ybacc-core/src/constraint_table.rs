// The constraint table: 109 labeled cubic equations in the 19
// parameters, stored as signed monomial data and evaluated by
// interpretation. Variable indices refer to
// [`crate::acc::PARAM_NAMES`] order.

/// One signed monomial: `coeff * prod params[idx]^pow`.
#[derive(Debug, Clone, Copy)]
pub struct Term {
    pub coeff: f64,
    pub factors: &'static [(usize, u32)],
}

/// One labeled equation: a sum of signed monomials that must vanish.
#[derive(Debug, Clone, Copy)]
pub struct Equation {
    pub label: &'static str,
    pub terms: &'static [Term],
}

pub static EQUATIONS: [Equation; 109] = [
    // A1: a12*c12*d12 = 0
    Equation { label: "A1", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (5, 1), (6, 1)] },
    ] },
    // A2: a12*b12*d12 = 0
    Equation { label: "A2", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (4, 1), (6, 1)] },
    ] },
    // A3: a23*c23*d23 = 0
    Equation { label: "A3", terms: &[
        Term { coeff: 1.0, factors: &[(11, 1), (13, 1), (14, 1)] },
    ] },
    // A4: a23*b23*d23 = 0
    Equation { label: "A4", terms: &[
        Term { coeff: 1.0, factors: &[(11, 1), (12, 1), (14, 1)] },
    ] },
    // A5: x2*x4*c12 = 0
    Equation { label: "A5", terms: &[
        Term { coeff: 1.0, factors: &[(5, 1), (16, 1), (18, 1)] },
    ] },
    // A6: x2*x4*c23 = 0
    Equation { label: "A6", terms: &[
        Term { coeff: 1.0, factors: &[(13, 1), (16, 1), (18, 1)] },
    ] },
    // A7: x1*x3*b12 = 0
    Equation { label: "A7", terms: &[
        Term { coeff: 1.0, factors: &[(4, 1), (15, 1), (17, 1)] },
    ] },
    // A8: x1*x3*b23 = 0
    Equation { label: "A8", terms: &[
        Term { coeff: 1.0, factors: &[(12, 1), (15, 1), (17, 1)] },
    ] },
    // A9: a12*d12*(a12 - d12) = 0
    Equation { label: "A9", terms: &[
        Term { coeff: 1.0, factors: &[(3, 2), (6, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (6, 2)] },
    ] },
    // A10: a23*d23*(a23 - d23) = 0
    Equation { label: "A10", terms: &[
        Term { coeff: 1.0, factors: &[(11, 2), (14, 1)] },
        Term { coeff: -1.0, factors: &[(11, 1), (14, 2)] },
    ] },
    // A11: x1*x2*(d12 - d23) = 0
    Equation { label: "A11", terms: &[
        Term { coeff: 1.0, factors: &[(6, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(14, 1), (15, 1), (16, 1)] },
    ] },
    // A12: x1*x3*(a12 - d12) = 0
    Equation { label: "A12", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (15, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (15, 1), (17, 1)] },
    ] },
    // A13: x1*x3*(a23 - d23) = 0
    Equation { label: "A13", terms: &[
        Term { coeff: 1.0, factors: &[(11, 1), (15, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(14, 1), (15, 1), (17, 1)] },
    ] },
    // A14: x2*x4*(a12 - d12) = 0
    Equation { label: "A14", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (16, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (16, 1), (18, 1)] },
    ] },
    // A15: x2*x4*(a23 - d23) = 0
    Equation { label: "A15", terms: &[
        Term { coeff: 1.0, factors: &[(11, 1), (16, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(14, 1), (16, 1), (18, 1)] },
    ] },
    // A16: x3*x4*(a12 - a23) = 0
    Equation { label: "A16", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (17, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(11, 1), (17, 1), (18, 1)] },
    ] },
    // A17: x1*x3*c12 - a12*b12*d12 = 0
    Equation { label: "A17", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (4, 1), (6, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (15, 1), (17, 1)] },
    ] },
    // A18: x1*x3*d23 + a13*b13*d13 = 0
    Equation { label: "A18", terms: &[
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (10, 1)] },
        Term { coeff: 1.0, factors: &[(14, 1), (15, 1), (17, 1)] },
    ] },
    // A19: x1*x3*a12 + a13*b13*d13 = 0
    Equation { label: "A19", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (15, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (10, 1)] },
    ] },
    // A20: x1*x3*c23 - a23*b23*d23 = 0
    Equation { label: "A20", terms: &[
        Term { coeff: -1.0, factors: &[(11, 1), (12, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(13, 1), (15, 1), (17, 1)] },
    ] },
    // A21: x1*x3*d12 + a13*b13*d13 = 0
    Equation { label: "A21", terms: &[
        Term { coeff: 1.0, factors: &[(6, 1), (15, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (10, 1)] },
    ] },
    // A22: x1*x3*a23 + a13*b13*d13 = 0
    Equation { label: "A22", terms: &[
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (10, 1)] },
        Term { coeff: 1.0, factors: &[(11, 1), (15, 1), (17, 1)] },
    ] },
    // A23: x2*x4*d12 + a13*c13*d13 = 0
    Equation { label: "A23", terms: &[
        Term { coeff: 1.0, factors: &[(6, 1), (16, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (9, 1), (10, 1)] },
    ] },
    // A24: x2*x4*a12 + a13*c13*d13 = 0
    Equation { label: "A24", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (16, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (9, 1), (10, 1)] },
    ] },
    // A25: x2*x4*b12 - a12*c12*d12 = 0
    Equation { label: "A25", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (5, 1), (6, 1)] },
        Term { coeff: 1.0, factors: &[(4, 1), (16, 1), (18, 1)] },
    ] },
    // A26: x2*x4*d23 + a13*c13*d13 = 0
    Equation { label: "A26", terms: &[
        Term { coeff: 1.0, factors: &[(7, 1), (9, 1), (10, 1)] },
        Term { coeff: 1.0, factors: &[(14, 1), (16, 1), (18, 1)] },
    ] },
    // A27: x2*x4*a23 + a13*c13*d13 = 0
    Equation { label: "A27", terms: &[
        Term { coeff: 1.0, factors: &[(7, 1), (9, 1), (10, 1)] },
        Term { coeff: 1.0, factors: &[(11, 1), (16, 1), (18, 1)] },
    ] },
    // A28: x2*x4*b23 - a23*c23*d23 = 0
    Equation { label: "A28", terms: &[
        Term { coeff: -1.0, factors: &[(11, 1), (13, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(12, 1), (16, 1), (18, 1)] },
    ] },
    // A29: a12*(a1**2 - a1*a12 - c12*b12) = 0
    Equation { label: "A29", terms: &[
        Term { coeff: 1.0, factors: &[(0, 2), (3, 1)] },
        Term { coeff: -1.0, factors: &[(0, 1), (3, 2)] },
        Term { coeff: -1.0, factors: &[(3, 1), (4, 1), (5, 1)] },
    ] },
    // A30: a23*(c23*b23 - a3**2 + a3*a23) = 0
    Equation { label: "A30", terms: &[
        Term { coeff: -1.0, factors: &[(2, 2), (11, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (11, 2)] },
        Term { coeff: 1.0, factors: &[(11, 1), (12, 1), (13, 1)] },
    ] },
    // A31: d12*(a1**2 - a1*d12 - c12*b12) = 0
    Equation { label: "A31", terms: &[
        Term { coeff: 1.0, factors: &[(0, 2), (6, 1)] },
        Term { coeff: -1.0, factors: &[(0, 1), (6, 2)] },
        Term { coeff: -1.0, factors: &[(4, 1), (5, 1), (6, 1)] },
    ] },
    // A32: d23*(c23*b23 - a3**2 + a3*d23) = 0
    Equation { label: "A32", terms: &[
        Term { coeff: -1.0, factors: &[(2, 2), (14, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (14, 2)] },
        Term { coeff: 1.0, factors: &[(12, 1), (13, 1), (14, 1)] },
    ] },
    // A33: x1*(a1*b12 - c12*b13 - a12*b12) = 0
    Equation { label: "A33", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (4, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (4, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (8, 1), (15, 1)] },
    ] },
    // A34: x1*(a1*b13 - d12*b13 - b12**2) = 0
    Equation { label: "A34", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (8, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(4, 2), (15, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (8, 1), (15, 1)] },
    ] },
    // A35: x1*(c23*b13 - a3*b23 + a23*b23) = 0
    Equation { label: "A35", terms: &[
        Term { coeff: -1.0, factors: &[(2, 1), (12, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (13, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(11, 1), (12, 1), (15, 1)] },
    ] },
    // A36: x1*(a3*b13 - d23*b13 - b23**2) = 0
    Equation { label: "A36", terms: &[
        Term { coeff: 1.0, factors: &[(2, 1), (8, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(8, 1), (14, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(12, 2), (15, 1)] },
    ] },
    // A37: x2*(a1*c12 - c12*a12 - c13*b12) = 0
    Equation { label: "A37", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (5, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (5, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (9, 1), (16, 1)] },
    ] },
    // A38: x2*(a1*c13 - c12**2 - c13*d12) = 0
    Equation { label: "A38", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (9, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(5, 2), (16, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (9, 1), (16, 1)] },
    ] },
    // A39: x2*(c13*a3 - c13*d23 - c23**2) = 0
    Equation { label: "A39", terms: &[
        Term { coeff: 1.0, factors: &[(2, 1), (9, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(9, 1), (14, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(13, 2), (16, 1)] },
    ] },
    // A40: x2*(c13*b23 - c23*a3 + c23*a23) = 0
    Equation { label: "A40", terms: &[
        Term { coeff: -1.0, factors: &[(2, 1), (13, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(9, 1), (12, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(11, 1), (13, 1), (16, 1)] },
    ] },
    // A41: x3*(a1*b12 - c12*b13 - d12*b12) = 0
    Equation { label: "A41", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (4, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (6, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (8, 1), (17, 1)] },
    ] },
    // A42: x3*(a1*b13 - a12*b13 - b12**2) = 0
    Equation { label: "A42", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (8, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (8, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(4, 2), (17, 1)] },
    ] },
    // A43: x3*(c23*b13 - a3*b23 + d23*b23) = 0
    Equation { label: "A43", terms: &[
        Term { coeff: -1.0, factors: &[(2, 1), (12, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (13, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(12, 1), (14, 1), (17, 1)] },
    ] },
    // A44: x3*(a3*b13 - a23*b13 - b23**2) = 0
    Equation { label: "A44", terms: &[
        Term { coeff: 1.0, factors: &[(2, 1), (8, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(8, 1), (11, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(12, 2), (17, 1)] },
    ] },
    // A45: x4*(a1*c12 - c12*d12 - c13*b12) = 0
    Equation { label: "A45", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (5, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (9, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (6, 1), (18, 1)] },
    ] },
    // A46: x4*(a1*c13 - c12**2 - c13*a12) = 0
    Equation { label: "A46", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (9, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (9, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(5, 2), (18, 1)] },
    ] },
    // A47: x4*(c13*a3 - c13*a23 - c23**2) = 0
    Equation { label: "A47", terms: &[
        Term { coeff: 1.0, factors: &[(2, 1), (9, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(9, 1), (11, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(13, 2), (18, 1)] },
    ] },
    // A48: x4*(c13*b23 - c23*a3 + c23*d23) = 0
    Equation { label: "A48", terms: &[
        Term { coeff: -1.0, factors: &[(2, 1), (13, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(9, 1), (12, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(13, 1), (14, 1), (18, 1)] },
    ] },
    // A49: x3*x4*(a12 - a23) + x1*x2*(-d12 + d23) = 0
    Equation { label: "A49", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (17, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(11, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(14, 1), (15, 1), (16, 1)] },
    ] },
    // A50: x3*x4*a23 - x2*x1*d23 + d13*a13*(d13 - a13) = 0
    Equation { label: "A50", terms: &[
        Term { coeff: -1.0, factors: &[(7, 2), (10, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 2)] },
        Term { coeff: 1.0, factors: &[(11, 1), (17, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(14, 1), (15, 1), (16, 1)] },
    ] },
    // A51: x3*x4*a12 - x2*x1*d12 + d13*a13*(d13 - a13) = 0
    Equation { label: "A51", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (17, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(7, 2), (10, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 2)] },
    ] },
    // A52: x1*x2*a12 + a13*(-a1**2 + a1*a13 + c13*b13) = 0
    Equation { label: "A52", terms: &[
        Term { coeff: -1.0, factors: &[(0, 2), (7, 1)] },
        Term { coeff: 1.0, factors: &[(0, 1), (7, 2)] },
        Term { coeff: 1.0, factors: &[(3, 1), (15, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (9, 1)] },
    ] },
    // A53: x1*x2*a23 + a13*(c13*b13 - a3**2 + a3*a13) = 0
    Equation { label: "A53", terms: &[
        Term { coeff: -1.0, factors: &[(2, 2), (7, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (7, 2)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (9, 1)] },
        Term { coeff: 1.0, factors: &[(11, 1), (15, 1), (16, 1)] },
    ] },
    // A54: x1*x2*b12 + b23*(-d23*a13 + a12*a13 - a12*a23) = 0
    Equation { label: "A54", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (7, 1), (12, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (11, 1), (12, 1)] },
        Term { coeff: 1.0, factors: &[(4, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (12, 1), (14, 1)] },
    ] },
    // A55: x1*x2*b23 + b12*(-d12*a13 - a12*a23 + a13*a23) = 0
    Equation { label: "A55", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (4, 1), (11, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (6, 1), (7, 1)] },
        Term { coeff: 1.0, factors: &[(4, 1), (7, 1), (11, 1)] },
        Term { coeff: 1.0, factors: &[(12, 1), (15, 1), (16, 1)] },
    ] },
    // A56: x1*x2*c12 + c23*(-d23*a13 + a12*a13 - a12*a23) = 0
    Equation { label: "A56", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (7, 1), (13, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (11, 1), (13, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (13, 1), (14, 1)] },
    ] },
    // A57: x1*x2*c23 + c12*(-d12*a13 - a12*a23 + a13*a23) = 0
    Equation { label: "A57", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (5, 1), (11, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (6, 1), (7, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (7, 1), (11, 1)] },
        Term { coeff: 1.0, factors: &[(13, 1), (15, 1), (16, 1)] },
    ] },
    // A58: x1*x3*a2 + b13*(d13*a12 - d23*a12 + d23*a13) = 0
    Equation { label: "A58", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (15, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (8, 1), (10, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (8, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (14, 1)] },
    ] },
    // A59: x1*x3*a2 + b13*(d12*a13 - d12*a23 + d13*a23) = 0
    Equation { label: "A59", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (15, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (7, 1), (8, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (8, 1), (11, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (10, 1), (11, 1)] },
    ] },
    // A60: x2*x4*a2 + c13*(d12*a13 - d12*a23 + d13*a23) = 0
    Equation { label: "A60", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (16, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (7, 1), (9, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (9, 1), (11, 1)] },
        Term { coeff: 1.0, factors: &[(9, 1), (10, 1), (11, 1)] },
    ] },
    // A61: x2*x4*a2 + c13*(d13*a12 - d23*a12 + d23*a13) = 0
    Equation { label: "A61", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (16, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (9, 1), (10, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (9, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (9, 1), (14, 1)] },
    ] },
    // A62: x3*x4*b12 + b23*(d12*d13 - d12*d23 - d13*a23) = 0
    Equation { label: "A62", terms: &[
        Term { coeff: 1.0, factors: &[(4, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (10, 1), (12, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (12, 1), (14, 1)] },
        Term { coeff: -1.0, factors: &[(10, 1), (11, 1), (12, 1)] },
    ] },
    // A63: x3*x4*b23 + b12*(-d12*d23 + d13*d23 - d13*a12) = 0
    Equation { label: "A63", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (4, 1), (10, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (6, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(4, 1), (10, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(12, 1), (17, 1), (18, 1)] },
    ] },
    // A64: x3*x4*c12 + c23*(d12*d13 - d12*d23 - d13*a23) = 0
    Equation { label: "A64", terms: &[
        Term { coeff: 1.0, factors: &[(5, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (10, 1), (13, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (13, 1), (14, 1)] },
        Term { coeff: -1.0, factors: &[(10, 1), (11, 1), (13, 1)] },
    ] },
    // A65: x3*x4*c23 + c12*(-d12*d23 + d13*d23 - d13*a12) = 0
    Equation { label: "A65", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (5, 1), (10, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (6, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (10, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(13, 1), (17, 1), (18, 1)] },
    ] },
    // A66: x3*x4*d12 + d13*(-a1**2 + a1*d13 + c13*b13) = 0
    Equation { label: "A66", terms: &[
        Term { coeff: -1.0, factors: &[(0, 2), (10, 1)] },
        Term { coeff: 1.0, factors: &[(0, 1), (10, 2)] },
        Term { coeff: 1.0, factors: &[(6, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (9, 1), (10, 1)] },
    ] },
    // A67: x3*x4*d23 + d13*(c13*b13 - a3**2 + a3*d13) = 0
    Equation { label: "A67", terms: &[
        Term { coeff: -1.0, factors: &[(2, 2), (10, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (10, 2)] },
        Term { coeff: 1.0, factors: &[(8, 1), (9, 1), (10, 1)] },
        Term { coeff: 1.0, factors: &[(14, 1), (17, 1), (18, 1)] },
    ] },
    // A68: x4*(a1*d12 - a1*d13 - a2*d12) - x1*c13*d13 = 0
    Equation { label: "A68", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (6, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(0, 1), (10, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (6, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(9, 1), (10, 1), (15, 1)] },
    ] },
    // A69: x4*(a2*d23 + a3*d13 - a3*d23) + x1*c13*d13 = 0
    Equation { label: "A69", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (14, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (10, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(2, 1), (14, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(9, 1), (10, 1), (15, 1)] },
    ] },
    // A70: x4*a13*b13 + x1*(a2*a23 + a3*a13 - a3*a23) = 0
    Equation { label: "A70", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (11, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (7, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(2, 1), (11, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (18, 1)] },
    ] },
    // A71: x4*a13*b13 + x1*(-a1*a12 + a1*a13 + a2*a12) = 0
    Equation { label: "A71", terms: &[
        Term { coeff: -1.0, factors: &[(0, 1), (3, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(0, 1), (7, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (3, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (8, 1), (18, 1)] },
    ] },
    // A72: x4*b12*(a12 - a13) + x1*c12*(-d12 + d13) = 0
    Equation { label: "A72", terms: &[
        Term { coeff: 1.0, factors: &[(3, 1), (4, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (7, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (6, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (10, 1), (15, 1)] },
    ] },
    // A73: x4*b23*(a13 - a23) + x1*c23*(-d13 + d23) = 0
    Equation { label: "A73", terms: &[
        Term { coeff: 1.0, factors: &[(7, 1), (12, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(10, 1), (13, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(11, 1), (12, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(13, 1), (14, 1), (15, 1)] },
    ] },
    // A74: x2*(a1*a12 - a1*a13 - a2*a12) - x3*c13*a13 = 0
    Equation { label: "A74", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (3, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(0, 1), (7, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (3, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (9, 1), (17, 1)] },
    ] },
    // A75: x2*(a2*a23 + a3*a13 - a3*a23) + x3*c13*a13 = 0
    Equation { label: "A75", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (11, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (7, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(2, 1), (11, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (9, 1), (17, 1)] },
    ] },
    // A76: x2*d13*b13 + x3*(-a1*d12 + a1*d13 + a2*d12) = 0
    Equation { label: "A76", terms: &[
        Term { coeff: -1.0, factors: &[(0, 1), (6, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(0, 1), (10, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (6, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (10, 1), (16, 1)] },
    ] },
    // A77: x2*d13*b13 + x3*(a2*d23 + a3*d13 - a3*d23) = 0
    Equation { label: "A77", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (14, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (10, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(2, 1), (14, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (10, 1), (16, 1)] },
    ] },
    // A78: x2*b12*(d12 - d13) + x3*c12*(-a12 + a13) = 0
    Equation { label: "A78", terms: &[
        Term { coeff: -1.0, factors: &[(3, 1), (5, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(4, 1), (6, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (10, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (7, 1), (17, 1)] },
    ] },
    // A79: x2*b23*(d13 - d23) + x3*c23*(-a13 + a23) = 0
    Equation { label: "A79", terms: &[
        Term { coeff: -1.0, factors: &[(7, 1), (13, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(10, 1), (12, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(11, 1), (13, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(12, 1), (14, 1), (16, 1)] },
    ] },
    // A80: x1*(a2*b12 - a2*b23 + a12*b23 - a23*b12) = 0
    Equation { label: "A80", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (4, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (12, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (12, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (11, 1), (15, 1)] },
    ] },
    // A81: x2*(c12*a2 - c12*a23 - a2*c23 + c23*a12) = 0
    Equation { label: "A81", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (5, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (13, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (13, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (11, 1), (16, 1)] },
    ] },
    // A82: x3*(a2*b12 - a2*b23 + d12*b23 - d23*b12) = 0
    Equation { label: "A82", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (4, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (12, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (14, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (12, 1), (17, 1)] },
    ] },
    // A83: x4*(c12*a2 - c12*d23 - a2*c23 + c23*d12) = 0
    Equation { label: "A83", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (5, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (13, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (14, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (13, 1), (18, 1)] },
    ] },
    // A84: c12*d13*b12 - c23*d13*b23 + d12**2*d23 - d12*d23**2 = 0
    Equation { label: "A84", terms: &[
        Term { coeff: 1.0, factors: &[(4, 1), (5, 1), (10, 1)] },
        Term { coeff: 1.0, factors: &[(6, 2), (14, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (14, 2)] },
        Term { coeff: -1.0, factors: &[(10, 1), (12, 1), (13, 1)] },
    ] },
    // A85: c12*a13*b12 - c23*a13*b23 + a12**2*a23 - a12*a23**2 = 0
    Equation { label: "A85", terms: &[
        Term { coeff: 1.0, factors: &[(3, 2), (11, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (11, 2)] },
        Term { coeff: 1.0, factors: &[(4, 1), (5, 1), (7, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (12, 1), (13, 1)] },
    ] },
    // A86: x1*x2*a1 + x3*x4*a13 + a12*(-a12*a2 - b12*c12 + a2**2) = 0
    Equation { label: "A86", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (15, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(1, 2), (3, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (3, 2)] },
        Term { coeff: -1.0, factors: &[(3, 1), (4, 1), (5, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (17, 1), (18, 1)] },
    ] },
    // A87: x1*x2*a3 + x3*x4*a13 + a23*(-a23*a2 - b23*c23 + a2**2) = 0
    Equation { label: "A87", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (11, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (11, 2)] },
        Term { coeff: 1.0, factors: &[(2, 1), (15, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (17, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(11, 1), (12, 1), (13, 1)] },
    ] },
    // A88: x1*x2*d13 + x3*x4*a3 + d23*(-b23*c23 + a2**2 - a2*d23) = 0
    Equation { label: "A88", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (14, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (14, 2)] },
        Term { coeff: 1.0, factors: &[(2, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(10, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(12, 1), (13, 1), (14, 1)] },
    ] },
    // A89: x1*x2*d13 + x3*x4*a1 + d12*(-b12*c12 + a2**2 - a2*d12) = 0
    Equation { label: "A89", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(1, 2), (6, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (6, 2)] },
        Term { coeff: -1.0, factors: &[(4, 1), (5, 1), (6, 1)] },
        Term { coeff: 1.0, factors: &[(10, 1), (15, 1), (16, 1)] },
    ] },
    // A90: x1*x2*a2 - c12*a23*b12 + c13*a23*b13 - d12**2*a13 + d12*a13**2 = 0
    Equation { label: "A90", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (15, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (5, 1), (11, 1)] },
        Term { coeff: -1.0, factors: &[(6, 2), (7, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (7, 2)] },
        Term { coeff: 1.0, factors: &[(8, 1), (9, 1), (11, 1)] },
    ] },
    // A91: x1*x2*a2 + c13*a12*b13 - c23*a12*b23 - d23**2*a13 + d23*a13**2 = 0
    Equation { label: "A91", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (15, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (8, 1), (9, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (12, 1), (13, 1)] },
        Term { coeff: 1.0, factors: &[(7, 2), (14, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (14, 2)] },
    ] },
    // A92: x3*x4*a2 - c12*d23*b12 + c13*d23*b13 + d13**2*a12 - d13*a12**2 = 0
    Equation { label: "A92", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (17, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(3, 2), (10, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (10, 2)] },
        Term { coeff: -1.0, factors: &[(4, 1), (5, 1), (14, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (9, 1), (14, 1)] },
    ] },
    // A93: x3*x4*a2 + c13*d12*b13 - c23*d12*b23 + d13**2*a23 - d13*a23**2 = 0
    Equation { label: "A93", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (17, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (8, 1), (9, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (12, 1), (13, 1)] },
        Term { coeff: 1.0, factors: &[(10, 2), (11, 1)] },
        Term { coeff: -1.0, factors: &[(10, 1), (11, 2)] },
    ] },
    // A94: x1*(a13*d13 + a2*d12 - d12*d13) + x4*(-b12**2 + b13*a1) = 0
    Equation { label: "A94", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (8, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (6, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(4, 2), (18, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (10, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (15, 1)] },
    ] },
    // A95: x1*(a13*d13 + a2*d23 - d13*d23) + x4*(b13*a3 - b23**2) = 0
    Equation { label: "A95", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (14, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (8, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(10, 1), (14, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(12, 2), (18, 1)] },
    ] },
    // A96: x1*(a1*c13 - c12**2) + x4*(-a12*a13 + a12*a2 + a13*d13) = 0
    Equation { label: "A96", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (9, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (3, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (7, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(5, 2), (15, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (18, 1)] },
    ] },
    // A97: x1*(c13*a3 - c23**2) + x4*(-a13*a23 + a13*d13 + a23*a2) = 0
    Equation { label: "A97", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (11, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (9, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (11, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(13, 2), (15, 1)] },
    ] },
    // A98: x1*(a13*d12 - b23*c12 + a2**2 - a2*d12) + x4*a23*b13 = 0
    Equation { label: "A98", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (15, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (6, 1), (15, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (12, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (7, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (11, 1), (18, 1)] },
    ] },
    // A99: x1*(a13*d23 - b12*c23 + a2**2 - a2*d23) + x4*a12*b13 = 0
    Equation { label: "A99", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (15, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (14, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (8, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (13, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (14, 1), (15, 1)] },
    ] },
    // A100: x1*c13*d12 + x4*(-a23*a2 + a23*d13 - b23*c12 + a2**2) = 0
    Equation { label: "A100", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (18, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (11, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (12, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (9, 1), (15, 1)] },
        Term { coeff: 1.0, factors: &[(10, 1), (11, 1), (18, 1)] },
    ] },
    // A101: x1*c13*d23 + x4*(-a12*a2 + a12*d13 - b12*c23 + a2**2) = 0
    Equation { label: "A101", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (18, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (3, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (10, 1), (18, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (13, 1), (18, 1)] },
        Term { coeff: 1.0, factors: &[(9, 1), (14, 1), (15, 1)] },
    ] },
    // A102: x2*(a1*b13 - b12**2) + x3*(a2*a12 + d13*a13 - a12*a13) = 0
    Equation { label: "A102", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (8, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (3, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (7, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(4, 2), (16, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (17, 1)] },
    ] },
    // A103: x2*(a3*b13 - b23**2) + x3*(a2*a23 + d13*a13 - a13*a23) = 0
    Equation { label: "A103", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (11, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (8, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (11, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(12, 2), (16, 1)] },
    ] },
    // A104: x2*(a2*d12 - d12*d13 + d13*a13) + x3*(a1*c13 - c12**2) = 0
    Equation { label: "A104", terms: &[
        Term { coeff: 1.0, factors: &[(0, 1), (9, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (6, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(5, 2), (17, 1)] },
        Term { coeff: -1.0, factors: &[(6, 1), (10, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (16, 1)] },
    ] },
    // A105: x2*(a2*d23 - d13*d23 + d13*a13) + x3*(c13*a3 - c23**2) = 0
    Equation { label: "A105", terms: &[
        Term { coeff: 1.0, factors: &[(1, 1), (14, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(2, 1), (9, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(7, 1), (10, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(10, 1), (14, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(13, 2), (17, 1)] },
    ] },
    // A106: x2*d12*b13 + x3*(a2**2 - a2*a23 - c23*b12 + d13*a23) = 0
    Equation { label: "A106", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (17, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (11, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (13, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (8, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(10, 1), (11, 1), (17, 1)] },
    ] },
    // A107: x2*d23*b13 + x3*(-c12*b23 + a2**2 - a2*a12 + d13*a12) = 0
    Equation { label: "A107", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (17, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (3, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(3, 1), (10, 1), (17, 1)] },
        Term { coeff: -1.0, factors: &[(5, 1), (12, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(8, 1), (14, 1), (16, 1)] },
    ] },
    // A108: x2*(c12*b23 - a2**2 + a2*d23 - d23*a13) - x3*c13*a12 = 0
    Equation { label: "A108", terms: &[
        Term { coeff: -1.0, factors: &[(1, 2), (16, 1)] },
        Term { coeff: 1.0, factors: &[(1, 1), (14, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(3, 1), (9, 1), (17, 1)] },
        Term { coeff: 1.0, factors: &[(5, 1), (12, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(7, 1), (14, 1), (16, 1)] },
    ] },
    // A109: x2*(a2**2 - a2*d12 - c23*b12 + d12*a13) + x3*c13*a23 = 0
    Equation { label: "A109", terms: &[
        Term { coeff: 1.0, factors: &[(1, 2), (16, 1)] },
        Term { coeff: -1.0, factors: &[(1, 1), (6, 1), (16, 1)] },
        Term { coeff: -1.0, factors: &[(4, 1), (13, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(6, 1), (7, 1), (16, 1)] },
        Term { coeff: 1.0, factors: &[(9, 1), (11, 1), (17, 1)] },
    ] },
];
