use crate::dyadic::Dyadic;
use crate::plmap::{FMap, TLikeMap, Vertex};

use super::GroupError;

/// `g ∘ f ∘ g^{-1}` for `f` in F and `g` eventually T-like.
///
/// Outside the window `[-m_left, m_right]` the conjugate is the translation
/// by `f_l` (resp. `f_r`), where
///
/// ```text
/// m_right = |R_g| + |R_f| + |V_R| + |f_r| + 1,   V_R = g(R_g) - R_g
/// m_left  = |L_g| + |L_f| + |V_L| + |f_l| + 1,   V_L = g(L_g) - L_g
/// ```
///
/// and `R_f`, `L_f` are the outermost breaks of `f`. Inside the window every
/// possible break is an image of a break of `g^{-1}`, `f ∘ g^{-1}` or
/// `g ∘ f ∘ g^{-1}` pulled back, so the composite is exact once evaluated at
/// those candidates.
pub fn conj_by_tlike(f: &FMap, g: &TLikeMap) -> Result<FMap, GroupError> {
    let (f_l, f_r) = f.translational_parts();
    let (l_f, r_f) = f.support_bounds();
    let (l_g, r_g) = (g.left_anchor(), g.right_anchor());
    let v_r = g.variation(r_g);
    let v_l = g.variation(l_g);
    let one = Dyadic::one();

    let hi = [r_g.abs(), r_f.abs(), v_r.abs(), Dyadic::from(f_r.abs()), one.clone()]
        .iter()
        .fold(Dyadic::zero(), |acc, t| &acc + t);
    let lo = -[l_g.abs(), l_f.abs(), v_l.abs(), Dyadic::from(f_l.abs()), one]
        .iter()
        .fold(Dyadic::zero(), |acc, t| &acc + t);

    let conj = |x: &Dyadic| g.eval(&f.eval(&g.eval_inverse(x)));
    let in_window = |x: &Dyadic| *x >= lo && *x <= hi;

    let (pre_lo, pre_hi) = (g.eval_inverse(&lo), g.eval_inverse(&hi));
    let mut xs = vec![lo.clone(), hi.clone()];
    // breaks of g^{-1}
    xs.extend(g.breaks_in(&pre_lo, &pre_hi).iter().map(|p| g.eval(p)));
    // breaks of f, pushed forward through g
    xs.extend(f.breaks().iter().map(|v| g.eval(&v.x)));
    // breaks of g reached after f ∘ g^{-1}
    let (mid_lo, mid_hi) = (f.eval(&pre_lo), f.eval(&pre_hi));
    xs.extend(g.breaks_in(&mid_lo, &mid_hi).iter().map(|q| g.eval(&f.eval_inverse(q))));
    xs.retain(in_window);
    xs.sort();
    xs.dedup();

    let vertices: Vec<Vertex> = xs
        .into_iter()
        .map(|x| {
            let y = conj(&x);
            Vertex::new(x, y)
        })
        .collect();

    let first = &vertices[0];
    let last = &vertices[vertices.len() - 1];
    if first.y != &first.x + &Dyadic::from(f_l) || last.y != &last.x + &Dyadic::from(f_r) {
        return Err(GroupError::WindowInconsistency(format!(
            "conjugate leaves the translation tails inside the window [{lo}, {hi}]"
        )));
    }
    for w in vertices.windows(2) {
        let mid = w[0].x.midpoint(&w[1].x);
        if conj(&mid) != w[0].y.midpoint(&w[1].y) {
            return Err(GroupError::WindowInconsistency(format!(
                "missed a break between {} and {}",
                w[0].x, w[1].x
            )));
        }
    }
    FMap::new(vertices, f_l, f_r).map_err(|e| GroupError::WindowInconsistency(e.to_string()))
}
