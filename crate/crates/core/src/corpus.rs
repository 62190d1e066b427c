//! Named cocommutative dg coalgebras used as small inputs for the Lie model
//! pipeline and its comparisons with the cobar construction.

use crate::coalgebra::{BasisId, CoTerm, DgCoalgebra};
use crate::error::{Error, Result};
use crate::linalg::q;

fn build(names: Vec<Vec<&str>>, coproduct: Vec<Vec<Vec<CoTerm>>>) -> DgCoalgebra {
    let names: Vec<Vec<String>> = names.into_iter().map(|l| l.into_iter().map(String::from).collect()).collect();
    let top = names.len() - 1;
    DgCoalgebra::new(names, Vec::new(), coproduct, top, true).expect("corpus coalgebra is well formed")
}

fn id(degree: usize, index: usize) -> BasisId {
    BasisId { degree, index }
}

fn term(c: i64, left: BasisId, right: BasisId) -> CoTerm {
    CoTerm { coef: q(c), left, right }
}

/// One primitive generator in degree `k >= 1` (chains of the minimal `k`-sphere).
pub fn primitive(k: usize) -> DgCoalgebra {
    assert!(k >= 1);
    let mut names = vec![Vec::new(); k + 1];
    names[k] = vec!["c"];
    build(names, Vec::new())
}

/// Truncated divided powers `c_1..c_K` with `|c_i| = 2i` and
/// `Δ̄c_k = Σ_{i+j=k} c_i ⊗ c_j`: the homology coalgebra of `CP^K`.
pub fn divided_power(k: usize) -> DgCoalgebra {
    assert!(k >= 1);
    let mut names: Vec<Vec<String>> = vec![Vec::new(); 2 * k + 1];
    let mut coproduct: Vec<Vec<Vec<CoTerm>>> = vec![Vec::new(); 2 * k + 1];
    for i in 1..=k {
        names[2 * i] = vec![format!("c{i}")];
        let terms = (1..i).map(|a| term(1, id(2 * a, 0), id(2 * (i - a), 0))).collect();
        coproduct[2 * i] = vec![terms];
    }
    DgCoalgebra::new(names, Vec::new(), coproduct, 2 * k, true).expect("corpus coalgebra is well formed")
}

/// Primitives in degrees 1 and 2 (a circle wedged with a 2-sphere).
pub fn circle_wedge_sphere() -> DgCoalgebra {
    build(vec![vec![], vec!["a"], vec!["b"]], Vec::new())
}

/// Two primitives in degree 2 (a wedge of two 2-spheres).
pub fn two_spheres() -> DgCoalgebra {
    build(vec![vec![], vec![], vec!["b1", "b2"]], Vec::new())
}

/// `a, b` in degree 1 and `c` in degree 2 with `Δ̄c = a⊗b - b⊗a`
/// (the homology coalgebra of the torus).
pub fn torus() -> DgCoalgebra {
    let cop = vec![vec![], vec![vec![], vec![]], vec![vec![term(1, id(1, 0), id(1, 1)), term(-1, id(1, 1), id(1, 0))]]];
    build(vec![vec![], vec!["a", "b"], vec!["c"]], cop)
}

/// Every named corpus entry, in a fixed order.
pub fn all() -> Vec<(&'static str, DgCoalgebra)> {
    vec![
        ("point", DgCoalgebra::ground_field()),
        ("sphere2", primitive(2)),
        ("sphere3", primitive(3)),
        ("two-spheres", two_spheres()),
        ("cp2", divided_power(2)),
        ("cp3", divided_power(3)),
        ("circle", primitive(1)),
        ("circle-wedge-sphere", circle_wedge_sphere()),
        ("torus", torus()),
    ]
}

pub fn by_name(name: &str) -> Result<DgCoalgebra> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, c)| c).ok_or_else(|| {
        let known: Vec<&str> = all().iter().map(|(n, _)| *n).collect();
        Error::InvalidCoalgebra(format!("unknown corpus coalgebra {name:?}; known: {}", known.join(", ")))
    })
}
