//! Collineations: bijections of P_n (n ≥ 2) that send lines to lines.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::space::ProjSpace;
use crate::staudt::standard_frame;

/// Line table of a projective space.
#[derive(Debug, Clone)]
pub struct Incidence {
    points: usize,
    lines: Vec<Vec<usize>>,
    line_set: HashSet<Vec<usize>>,
    // line index through a pair of distinct points
    line_of: Vec<u32>,
    // lines × points membership
    on_line: Vec<bool>,
}

impl Incidence {
    pub fn new(space: &ProjSpace) -> Incidence {
        let lines = space.lines();
        let points = space.len();
        let mut line_of = vec![u32::MAX; points * points];
        let mut on_line = vec![false; lines.len() * points];
        for (li, line) in lines.iter().enumerate() {
            for &a in line {
                on_line[li * points + a] = true;
                for &b in line {
                    if a != b {
                        line_of[a * points + b] = li as u32;
                    }
                }
            }
        }
        Incidence {
            points,
            line_set: lines.iter().cloned().collect(),
            lines,
            line_of,
            on_line,
        }
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Whether `c` lies on the line through the distinct points `a`, `b`.
    #[inline]
    pub fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        let line = self.line_of[a * self.points + b] as usize;
        self.on_line[line * self.points + c]
    }

    /// Whether the image of every line is a line.
    pub fn is_collineation(&self, phi: &Permutation) -> bool {
        self.lines
            .iter()
            .all(|line| self.line_set.contains(&phi.image_of_set(line)))
    }
}

fn require_plane(space: &ProjSpace) -> Result<()> {
    if space.dim() < 2 {
        return Err(Error::Dimension {
            needed: "n >= 2",
            actual: space.dim(),
        });
    }
    Ok(())
}

pub fn is_collineation(space: &ProjSpace, phi: &Permutation) -> Result<bool> {
    require_plane(space)?;
    if phi.degree() != space.len() {
        return Err(Error::DegreeMismatch(phi.degree(), space.len()));
    }
    Ok(Incidence::new(space).is_collineation(phi))
}

/// Every collineation of the space, sorted.
///
/// Backtracking search that assigns the standard frame first and then the
/// remaining points in id order. A partial assignment survives only while it
/// preserves collinearity and non-collinearity of every triple of assigned
/// points; over a prime field the frame images force everything else. Each
/// completed map is confirmed with [`Incidence::is_collineation`].
pub fn collineations(space: &ProjSpace) -> Result<Vec<Permutation>> {
    require_plane(space)?;
    let inc = Incidence::new(space);
    let n = space.len();
    let frame = standard_frame(space);
    let mut order = frame.clone();
    order.extend((0..n).filter(|p| !frame.contains(p)));

    struct Search<'a> {
        inc: &'a Incidence,
        order: Vec<usize>,
        image: Vec<Option<usize>>,
        used: Vec<bool>,
        found: Vec<Permutation>,
    }

    impl Search<'_> {
        fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
            for i in 0..depth {
                let a = self.order[i];
                let fa = self.image[a].unwrap();
                for j in i + 1..depth {
                    let b = self.order[j];
                    let fb = self.image[b].unwrap();
                    if self.inc.collinear(a, b, x) != self.inc.collinear(fa, fb, y) {
                        return false;
                    }
                }
            }
            true
        }

        fn run(&mut self, depth: usize) {
            if depth == self.order.len() {
                let images: Vec<usize> = self.image.iter().map(|x| x.unwrap()).collect();
                let perm = Permutation::from_images(images).expect("assignment is a bijection");
                if self.inc.is_collineation(&perm) {
                    self.found.push(perm);
                }
                return;
            }
            let x = self.order[depth];
            for y in 0..self.used.len() {
                if self.used[y] || !self.consistent(depth, x, y) {
                    continue;
                }
                self.used[y] = true;
                self.image[x] = Some(y);
                self.run(depth + 1);
                self.image[x] = None;
                self.used[y] = false;
            }
        }
    }

    let mut search = Search {
        inc: &inc,
        order,
        image: vec![None; n],
        used: vec![false; n],
        found: Vec::new(),
    };
    search.run(0);
    let mut found = search.found;
    found.sort_unstable();
    Ok(found)
}
