//! Clebsch-Gordan coefficients, the R-matrix and the half-twist lemma for
//! small colors. Arguments are doubled: `1` is spin 1/2.

use qspin::qarith::HalfInt;
use qspin::repcore::{cg_c, half_twist, half_twist_sides, rmat};

fn main() {
    let h = HalfInt::from_doubled;
    let (a, b, c) = (h(1), h(1), h(2));
    println!("C^(1/2,1/2,1)_(u,v,t):");
    for u in a.states() {
        for v in b.states() {
            let t = u + v;
            if t.is_state_of(c) {
                println!("  u={u:>4} v={v:>4} t={t:>4}  {}", cg_c(a, b, c, u, v, t));
            }
        }
    }
    println!("R-matrix of two spin 1/2 strands, nonzero entries:");
    for u in a.states() {
        for v in b.states() {
            for hh in b.states() {
                for k in a.states() {
                    let r = rmat(a, b, u, v, hh, k);
                    if !r.is_zero() {
                        println!("  (u,v)=({u},{v}) -> (h,k)=({hh},{k})  {r}");
                    }
                }
            }
        }
    }
    println!("half twist on spin 1: {}", half_twist(h(2), 1));
    let (l, r) = half_twist_sides(h(2), h(2), h(2));
    println!("R Y = (H^-1 x H^-1) Y H for (1,1,1): {}", l == r);
}
