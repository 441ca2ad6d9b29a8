//! Small hand-built triangulations, maps and systems used by the tests,
//! the examples shipped with the command line tool and the FFI tests.

use crate::cli::workspace::{
    ComplexBody, ComplexDecl, Declaration, MapDecl, PairBody, PairDecl, SubSpec, SystemDecl, WorkspaceDocument,
};
use crate::control::DiscreteSystem;
use crate::products::OrientedManifold;
use crate::simplicial::{ProductPair, SimplicialComplex, SimplicialMap, SimplicialPair};

/// Boundary of an `n`-gon, `n >= 3`.
pub fn circle(n: usize) -> SimplicialPair {
    let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    let facets: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
    SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(n, &facets))
}

pub fn point() -> SimplicialPair {
    SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(1, &[&[0]]))
}

/// A single edge with both endpoints as boundary.
pub fn interval() -> SimplicialPair {
    SimplicialPair::with_boundary(SimplicialComplex::from_facets_numbered(2, &[&[0, 1]]))
}

/// Boundary of the tetrahedron, a 2-sphere.
pub fn tetrahedron_boundary() -> SimplicialPair {
    SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(
        4,
        &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
    ))
}

/// The minimal 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialPair {
    let facets: Vec<Vec<usize>> = (0..7)
        .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
        .collect();
    let refs: Vec<&[usize]> = facets.iter().map(Vec::as_slice).collect();
    SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(7, &refs))
}

/// Staircase product of two triangles, a 9-vertex torus.
pub fn torus_product() -> ProductPair {
    ProductPair::new(circle(3), circle(3))
}

/// `n`-fold staircase product of triangles, nested to the left.
pub fn circle_power(n: usize) -> SimplicialPair {
    assert!(n >= 1, "power of at least one circle");
    let mut pair = circle(3);
    for _ in 1..n {
        pair = ProductPair::new(pair, circle(3)).pair().clone();
    }
    pair
}

/// Triangle times an edge, with the two end circles as boundary.
pub fn cylinder() -> SimplicialPair {
    ProductPair::new(circle(3), interval()).pair().clone()
}

/// 5-vertex Möbius band with its boundary circle.
pub fn mobius_band() -> SimplicialPair {
    SimplicialPair::with_boundary(SimplicialComplex::from_facets_numbered(
        5,
        &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]],
    ))
}

pub fn oriented(pair: &SimplicialPair) -> OrientedManifold {
    OrientedManifold::orient(pair, None).expect("fixture is an oriented manifold")
}

/// Vertex map `C6 -> C3` that collapses every other edge: a subdivision map.
pub fn hexagon_collapse() -> SimplicialMap {
    SimplicialMap::from_vertex_images(circle(6), circle(3), &[0, 1, 1, 2, 2, 0]).expect("simplicial")
}

/// Vertex map `C6 -> C3` wrapping twice.
pub fn hexagon_double_cover() -> SimplicialMap {
    SimplicialMap::from_vertex_images(circle(6), circle(3), &[0, 1, 2, 0, 1, 2]).expect("simplicial")
}

/// `x ↦ x + shift` on the `n`-gon.
pub fn rotation(n: usize, shift: usize) -> SimplicialMap {
    let images: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
    SimplicialMap::from_vertex_images(circle(n), circle(n), &images).expect("simplicial")
}

/// `x ↦ x + 1` and `x ↦ 2x` are automorphisms of the 7-vertex torus.
pub fn torus7_affine(multiplier: usize, shift: usize) -> SimplicialMap {
    let images: Vec<usize> = (0..7).map(|i| (multiplier * i + shift) % 7).collect();
    SimplicialMap::from_vertex_images(torus7(), torus7(), &images).expect("simplicial")
}

/// The vertex permutation `(01)(23)` of the tetrahedron boundary.
pub fn tetrahedron_swap() -> SimplicialMap {
    SimplicialMap::from_vertex_images(tetrahedron_boundary(), tetrahedron_boundary(), &[1, 0, 3, 2])
        .expect("simplicial")
}

/// `g(x, u) = x`: the state does not depend on the input.
pub fn projection_system(state: &SimplicialPair, input: SimplicialComplex) -> DiscreteSystem {
    DiscreteSystem::from_rule(oriented(state), input, |x, _| x).expect("valid system")
}

/// Robot arm with `n` revolute joints on the `n`-torus of triangles, input a
/// triangle: `g((x_1, ..., x_n), u) = (u, x_1, ..., x_{n-1})`.
pub fn robot_arm(n: usize) -> DiscreteSystem {
    let top = 3usize.pow(n as u32 - 1);
    DiscreteSystem::from_rule(oriented(&circle_power(n)), circle(3).total().clone(), move |x, u| {
        u * top + x / 3
    })
    .expect("valid system")
}

/// State the triangle read on the hexagon, one input point, slice map of degree 2.
pub fn doubling_system() -> DiscreteSystem {
    let fine = circle(6);
    let input = point().total().clone();
    let product = ProductPair::new(fine.clone(), SimplicialPair::absolute(input.clone()));
    let cover = hexagon_double_cover();
    let map = SimplicialMap::from_vertex_images(
        SimplicialPair::absolute(product.total().clone()),
        circle(3),
        &(0..6).map(|x| cover.image_vertex(x)).collect::<Vec<_>>(),
    )
    .expect("simplicial");
    DiscreteSystem::refined(oriented(&circle(3)), oriented(&fine), hexagon_collapse(), input, map)
        .expect("valid system")
}

/// Cylinder state, input an edge `{c, i}`: `c` pushes every state to the
/// bottom circle, `i` leaves the state unchanged.
pub fn cylinder_collapse_system() -> DiscreteSystem {
    let input = SimplicialComplex::from_facets(vec!["c".into(), "i".into()], vec![vec![0, 1]]).expect("edge");
    // Cylinder vertex (θ, t) has index 2θ + t; the rule keeps θ and sets t to min(t, u).
    DiscreteSystem::from_rule(oriented(&cylinder()), input, |x, u| (x / 2) * 2 + (x % 2).min(u)).expect("valid system")
}

/// `g(x, u) = x + 3` on the hexagon with a single input: every vertex lies on a 2-cycle.
pub fn half_turn_system() -> DiscreteSystem {
    DiscreteSystem::from_rule(oriented(&circle(6)), point().total().clone(), |x, _| (x + 3) % 6).expect("valid system")
}

/// The example workspaces shipped under `fixtures/`, by file name.
pub fn workspace_files() -> Vec<(&'static str, WorkspaceDocument)> {
    vec![
        ("circles.lef", circles_document()),
        ("sphere.lef", sphere_document()),
        ("torus.lef", torus_document()),
        ("cylinder.lef", cylinder_document()),
        ("mobius.lef", mobius_document()),
        ("robot_arm1.lef", robot_arm_document(1)),
        ("robot_arm2.lef", robot_arm_document(2)),
    ]
}

#[derive(Default)]
struct Doc(Vec<Declaration>);

impl Doc {
    fn complex(&mut self, name: &str, c: &SimplicialComplex) -> &mut Self {
        self.0.push(Declaration::Complex(ComplexDecl::explicit(name, c)));
        self
    }

    fn product(&mut self, name: &str, a: &str, b: &str) -> &mut Self {
        self.0.push(Declaration::Complex(ComplexDecl {
            name: name.into(),
            body: ComplexBody::Product(a.into(), b.into()),
        }));
        self
    }

    fn pair(&mut self, name: &str, total: &str, sub: SubSpec) -> &mut Self {
        self.0.push(Declaration::Pair(PairDecl {
            name: name.into(),
            body: PairBody::Of {
                total: total.into(),
                sub,
            },
            seed: None,
        }));
        self
    }

    fn map(&mut self, name: &str, source: &str, target: &str, map: &SimplicialMap) -> &mut Self {
        self.0
            .push(Declaration::Map(MapDecl::from_map(name, source, target, map)));
        self
    }

    fn system(&mut self, name: &str, state: &str, input: &str, map: &str, refine: Option<(&str, &str)>) -> &mut Self {
        self.0.push(Declaration::System(SystemDecl {
            name: name.into(),
            state: state.into(),
            input: input.into(),
            map: map.into(),
            refine: refine.map(|(a, b)| (a.into(), b.into())),
        }));
        self
    }

    fn finish(&mut self) -> WorkspaceDocument {
        WorkspaceDocument {
            declarations: std::mem::take(&mut self.0),
        }
    }
}

fn circles_document() -> WorkspaceDocument {
    let (tri, hex) = (circle(3), circle(6));
    Doc::default()
        .complex("tri", tri.total())
        .complex("hex", hex.total())
        .complex("point", point().total())
        .map("tri_id", "tri", "tri", &SimplicialMap::identity(tri.clone()))
        .map("tri_rot", "tri", "tri", &rotation(3, 1))
        .map(
            "tri_const",
            "tri",
            "tri",
            &SimplicialMap::constant(tri.clone(), tri.clone(), 0).expect("constant"),
        )
        .map("hex_collapse", "hex", "tri", &hexagon_collapse())
        .map("hex_cover", "hex", "tri", &hexagon_double_cover())
        .map("hex_half", "hex", "hex", &rotation(6, 3))
        .map("hex_id", "hex", "hex", &SimplicialMap::identity(hex))
        .product("tri_x_point", "tri", "point")
        .product("hex_x_point", "hex", "point")
        .map(
            "g_const",
            "tri_x_point",
            "tri",
            projection_system(&tri, point().total().clone()).map(),
        )
        .map("g_double", "hex_x_point", "tri", doubling_system().map())
        .map("g_half", "hex_x_point", "hex", half_turn_system().map())
        .system("constant", "tri", "point", "g_const", None)
        .system("doubling", "tri", "point", "g_double", Some(("hex", "hex_collapse")))
        .system("half_turn", "hex", "point", "g_half", None)
        .finish()
}

fn sphere_document() -> WorkspaceDocument {
    let s2 = tetrahedron_boundary();
    Doc::default()
        .complex("sphere", s2.total())
        .complex("point", point().total())
        .map("sphere_id", "sphere", "sphere", &SimplicialMap::identity(s2.clone()))
        .map("sphere_swap", "sphere", "sphere", &tetrahedron_swap())
        .map(
            "sphere_const",
            "sphere",
            "sphere",
            &SimplicialMap::constant(s2.clone(), s2.clone(), 0).expect("constant"),
        )
        .product("sphere_x_point", "sphere", "point")
        .map(
            "g_const",
            "sphere_x_point",
            "sphere",
            projection_system(&s2, point().total().clone()).map(),
        )
        .system("constant", "sphere", "point", "g_const", None)
        .finish()
}

fn torus_document() -> WorkspaceDocument {
    let t7 = torus7();
    let t9 = torus_product().pair().clone();
    Doc::default()
        .complex("torus7", t7.total())
        .complex("tri", circle(3).total())
        .product("torus9", "tri", "tri")
        .complex("point", point().total())
        .map("torus7_id", "torus7", "torus7", &SimplicialMap::identity(t7.clone()))
        .map("torus7_shift", "torus7", "torus7", &torus7_affine(1, 1))
        .map("torus7_double", "torus7", "torus7", &torus7_affine(2, 0))
        .map(
            "torus7_const",
            "torus7",
            "torus7",
            &SimplicialMap::constant(t7.clone(), t7.clone(), 0).expect("constant"),
        )
        .map("torus9_id", "torus9", "torus9", &SimplicialMap::identity(t9))
        .product("torus7_x_point", "torus7", "point")
        .map(
            "g_const",
            "torus7_x_point",
            "torus7",
            projection_system(&t7, point().total().clone()).map(),
        )
        .system("constant", "torus7", "point", "g_const", None)
        .finish()
}

fn cylinder_document() -> WorkspaceDocument {
    let cyl = cylinder();
    let collapse = cylinder_collapse_system();
    Doc::default()
        .complex("tri", circle(3).total())
        .complex("edge", interval().total())
        .product("cylinder_total", "tri", "edge")
        .pair("cylinder", "cylinder_total", SubSpec::Boundary)
        .complex("point", point().total())
        .complex("controls", collapse.input())
        .map(
            "cylinder_id",
            "cylinder",
            "cylinder",
            &SimplicialMap::identity(cyl.clone()),
        )
        .product("cylinder_x_point", "cylinder_total", "point")
        .product("cylinder_x_controls", "cylinder_total", "controls")
        .map(
            "g_const",
            "cylinder_x_point",
            "cylinder",
            projection_system(&cyl, point().total().clone()).map(),
        )
        .map("g_collapse", "cylinder_x_controls", "cylinder", collapse.map())
        .system("constant", "cylinder", "point", "g_const", None)
        .system("collapse", "cylinder", "controls", "g_collapse", None)
        .finish()
}

fn mobius_document() -> WorkspaceDocument {
    Doc::default()
        .complex("band", mobius_band().total())
        .pair("mobius", "band", SubSpec::Boundary)
        .finish()
}

fn robot_arm_document(n: usize) -> WorkspaceDocument {
    let sys = robot_arm(n);
    let mut doc = Doc::default();
    doc.complex("tri", circle(3).total());
    let state = if n == 1 {
        "tri"
    } else {
        doc.product("torus", "tri", "tri");
        "torus"
    };
    let start = SimplicialComplex::from_facets(vec![sys.state().pair().total().label(0).to_string()], vec![vec![0]])
        .expect("point");
    doc.complex("pt", &start)
        .product("state_x_joint", state, "tri")
        .map("g_arm", "state_x_joint", state, sys.map())
        .system("arm", state, "tri", "g_arm", None)
        .finish()
}
