use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::edge::FareyEdge;
use super::rational::ExtendedRational;
use super::triangle::Triangle;

/// A triangle reached by the breadth-first walk, with the edge it was
/// entered through and the index of the triangle it was entered from.
#[derive(Clone, Debug)]
pub struct TriangleRecord {
    pub triangle: Triangle,
    pub distance: u32,
    pub parent: Option<usize>,
    pub entry: Option<FareyEdge>,
}

/// The finite part of the Farey tessellation around the base triangle:
/// edges of generation at most `depth`, and all triangles flanking them.
#[derive(Clone, Debug)]
pub struct Tessellation {
    depth: u32,
    triangles: Vec<TriangleRecord>,
    edges: Vec<(FareyEdge, u32)>,
    vertices: Vec<(ExtendedRational, u32)>,
    edge_index: HashMap<FareyEdge, u32>,
}

impl Tessellation {
    /// Breadth-first expansion from the three sides of the base triangle.
    pub fn new(depth: u32) -> Self {
        let mut triangles = vec![TriangleRecord {
            triangle: Triangle::base(),
            distance: 0,
            parent: None,
            entry: None,
        }];
        let mut edges: Vec<(FareyEdge, u32)> =
            Triangle::base().edges().into_iter().map(|e| (e, 0)).collect();
        let mut vertices: Vec<(ExtendedRational, u32)> = Triangle::base()
            .vertices()
            .iter()
            .map(|v| (v.clone(), 0))
            .collect();

        let mut head = 0;
        while head < triangles.len() {
            let rec = triangles[head].clone();
            if rec.distance <= depth {
                for e in rec.triangle.edges() {
                    if Some(&e) == rec.entry.as_ref() {
                        continue;
                    }
                    let child = rec.triangle.across(&e).expect("side");
                    let distance = rec.distance + 1;
                    let newest = child.opposite(&e).expect("side").clone();
                    vertices.push((newest, distance));
                    if distance <= depth {
                        for f in child.edges() {
                            if f != e {
                                edges.push((f, distance));
                            }
                        }
                    }
                    triangles.push(TriangleRecord {
                        triangle: child,
                        distance,
                        parent: Some(head),
                        entry: Some(e),
                    });
                }
            }
            head += 1;
        }
        // Deterministic (generation, canonical key) order.
        edges.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
        vertices.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.canonical_cmp(&y.0)));
        let edge_index = edges.iter().cloned().collect();
        Tessellation { depth, triangles, edges, vertices, edge_index }
    }

    /// A process-wide shared copy for `depth`, built on first use.
    pub fn shared(depth: u32) -> Arc<Tessellation> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Tessellation>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("cache lock").get(&depth) {
            return Arc::clone(t);
        }
        let t = Arc::new(Tessellation::new(depth));
        cache.lock().expect("cache lock").entry(depth).or_insert(t).clone()
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Triangles in breadth-first order; parents precede children. Includes
    /// the outermost layer at distance `depth + 1`.
    pub fn triangles(&self) -> &[TriangleRecord] {
        &self.triangles
    }

    /// Edges with their generations, ordered by (generation, key).
    pub fn edges(&self) -> &[(FareyEdge, u32)] {
        &self.edges
    }

    /// Vertices of all listed triangles with their generations (distance of
    /// the triangle in which they first appear).
    pub fn vertices(&self) -> &[(ExtendedRational, u32)] {
        &self.vertices
    }

    pub fn generation_of(&self, e: &FareyEdge) -> Option<u32> {
        self.edge_index.get(e).copied()
    }

    pub fn edges_up_to(&self, generation: u32) -> impl Iterator<Item = &FareyEdge> {
        self.edges.iter().filter(move |(_, g)| *g <= generation).map(|(e, _)| e)
    }

    pub fn vertices_up_to(&self, generation: u32) -> impl Iterator<Item = &ExtendedRational> {
        self.vertices.iter().filter(move |(_, g)| *g <= generation).map(|(v, _)| v)
    }
}
