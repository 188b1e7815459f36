//! Dynkin quivers, dimension vectors, positive roots and the Euler form.
//!
//! Vertices are numbered `0..rank` internally with the linear spine first and
//! branch vertices last; the JSON interface is 1-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simply-laced Dynkin type with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn validate(self) -> Result<()> {
        let ok = match self {
            DynkinType::A(n) => n >= 1,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IllegalType(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Undirected edges of the diagram in canonical order: the spine
    /// `0-1-...-(rank-2)`, then the branch edge (D: fork at `rank-3`,
    /// E: branch at vertex 2).
    pub fn diagram_edges(self) -> Vec<(usize, usize)> {
        let n = self.rank();
        match self {
            DynkinType::A(_) => (0..n - 1).map(|i| (i, i + 1)).collect(),
            DynkinType::D(_) => {
                let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((n - 3, n - 1));
                edges
            }
            DynkinType::E(_) => {
                let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((2, n - 1));
                edges
            }
        }
    }

    /// Number of positive roots, from the classical count.
    pub fn root_count(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(8) => 120,
            DynkinType::E(_) => unreachable!(),
        }
    }

    /// Degrees of the Weyl group, used by the noncrossing product formula.
    pub fn degrees(self) -> Vec<usize> {
        match self {
            DynkinType::A(n) => (2..=n + 1).collect(),
            DynkinType::D(n) => {
                let mut d: Vec<_> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            DynkinType::E(6) => vec![2, 5, 6, 8, 9, 12],
            DynkinType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            DynkinType::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            DynkinType::E(_) => unreachable!(),
        }
    }

    /// Coxeter number.
    pub fn coxeter_number(self) -> usize {
        *self.degrees().last().unwrap()
    }

    /// Noncrossing partition count `prod (h + d_i) / d_i`.
    pub fn noncrossing_count(self) -> u64 {
        let h = self.coxeter_number() as u64;
        let mut num: u64 = 1;
        let mut den: u64 = 1;
        for d in self.degrees() {
            num *= h + d as u64;
            den *= d as u64;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl std::str::FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<DynkinType> {
        let (letter, rank) = s.split_at(1);
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::IllegalType(s.to_string()))?;
        let t = match letter {
            "A" | "a" => DynkinType::A(rank),
            "D" | "d" => DynkinType::D(rank),
            "E" | "e" => DynkinType::E(rank),
            _ => return Err(Error::IllegalType(s.to_string())),
        };
        t.validate()?;
        Ok(t)
    }
}

/// Vertexwise dimensions (or ranks) of a representation.
pub type DimVector = Vec<i64>;

/// An orientation of a Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub dynkin_type: DynkinType,
    /// Directed arrows `(source, target)`, 0-based, one per diagram edge.
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Build a Dynkin quiver. `orientation[k] = true` keeps the canonical
    /// edge direction (low index to high), `false` reverses it; `None` gives
    /// the all-forward (linear) orientation.
    pub fn make_dynkin(dynkin_type: DynkinType, orientation: Option<&[bool]>) -> Result<Quiver> {
        dynkin_type.validate()?;
        let edges = dynkin_type.diagram_edges();
        let arrows = match orientation {
            None => edges,
            Some(dirs) => {
                if dirs.len() != edges.len() {
                    return Err(Error::OrientationMismatch {
                        expected: edges.len(),
                        got: dirs.len(),
                    });
                }
                edges
                    .iter()
                    .zip(dirs)
                    .map(|(&(a, b), &fwd)| if fwd { (a, b) } else { (b, a) })
                    .collect()
            }
        };
        Ok(Quiver {
            dynkin_type,
            arrows,
        })
    }

    pub fn rank(&self) -> usize {
        self.dynkin_type.rank()
    }

    /// The orientation bits relative to the canonical edge list.
    pub fn orientation(&self) -> Vec<bool> {
        self.dynkin_type
            .diagram_edges()
            .iter()
            .zip(&self.arrows)
            .map(|(&(a, _), &(s, _))| a == s)
            .collect()
    }

    /// Quiver with the arrows at `v` reversed (BGP reflection of the orientation).
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) })
            .collect();
        Quiver {
            dynkin_type: self.dynkin_type,
            arrows,
        }
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter_map(|&(s, t)| {
                if s == v {
                    Some(t)
                } else if t == v {
                    Some(s)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Euler form for the hereditary path algebra:
    /// `<d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> Result<i64> {
        let n = self.rank();
        if d.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: d.len(),
            });
        }
        if e.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: e.len(),
            });
        }
        let mut val: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        for &(s, t) in &self.arrows {
            val -= d[s] * e[t];
        }
        Ok(val)
    }

    /// Tits form `q(d) = <d, d>`; independent of the orientation.
    pub fn tits_form(&self, d: &[i64]) -> Result<i64> {
        self.euler_form(d, d)
    }

    /// All positive roots, ordered by total dimension then lexicographically.
    ///
    /// Brute force over `0 <= d_i <= 6` (6 bounds the largest coordinate of
    /// the highest root of E8), keeping vectors with Tits form 1.
    pub fn positive_roots(&self) -> Vec<DimVector> {
        let n = self.rank();
        let mut roots = Vec::new();
        let mut d = vec![0i64; n];
        loop {
            // advance the odometer
            let mut i = 0;
            loop {
                if i == n {
                    roots.sort_by_key(|r: &DimVector| {
                        (r.iter().sum::<i64>(), r.clone())
                    });
                    return roots;
                }
                d[i] += 1;
                if d[i] <= 6 {
                    break;
                }
                d[i] = 0;
                i += 1;
            }
            if self.tits_form(&d).unwrap() == 1 {
                roots.push(d.clone());
            }
        }
    }
}

/// JSON form of a quiver, 1-based arrows.
#[derive(Serialize, Deserialize)]
struct QuiverJson {
    #[serde(rename = "type")]
    letter: String,
    rank: usize,
    arrows: Vec<[usize; 2]>,
}

impl Quiver {
    pub fn to_json(&self) -> String {
        let j = QuiverJson {
            letter: match self.dynkin_type {
                DynkinType::A(_) => "A",
                DynkinType::D(_) => "D",
                DynkinType::E(_) => "E",
            }
            .to_string(),
            rank: self.rank(),
            arrows: self.arrows.iter().map(|&(s, t)| [s + 1, t + 1]).collect(),
        };
        serde_json::to_string(&j).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Quiver> {
        let j: QuiverJson = serde_json::from_str(s)?;
        let dynkin_type = format!("{}{}", j.letter, j.rank).parse::<DynkinType>()?;
        let canonical: std::collections::BTreeSet<(usize, usize)> = dynkin_type
            .diagram_edges()
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut arrows = Vec::new();
        for [s, t] in &j.arrows {
            let (s, t) = (s - 1, t - 1);
            if !canonical.contains(&(s.min(t), s.max(t))) {
                return Err(Error::IllegalType(format!(
                    "arrow {:?} is not an edge of {}",
                    (s + 1, t + 1),
                    dynkin_type
                )));
            }
            arrows.push((s, t));
        }
        if arrows.len() != canonical.len() {
            return Err(Error::OrientationMismatch {
                expected: canonical.len(),
                got: arrows.len(),
            });
        }
        Ok(Quiver {
            dynkin_type,
            arrows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: count vectors with Tits form 1 without going
    /// through `positive_roots` ordering or dedup logic.
    fn tits_oracle_count(q: &Quiver) -> usize {
        let n = q.rank();
        let mut count = 0;
        let total = 7usize.pow(n as u32);
        for mut code in 0..total {
            let mut d = vec![0i64; n];
            for slot in d.iter_mut() {
                *slot = (code % 7) as i64;
                code /= 7;
            }
            if d.iter().any(|&x| x > 0) && q.tits_form(&d).unwrap() == 1 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn a2_construction() {
        let q = Quiver::make_dynkin(DynkinType::A(2), Some(&[true])).unwrap();
        assert_eq!(q.arrows, vec![(0, 1)]);
        let q3 = Quiver::make_dynkin(DynkinType::A(3), None).unwrap();
        assert_eq!(q3.arrows, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn illegal_types_rejected() {
        assert!(Quiver::make_dynkin(DynkinType::E(9), None).is_err());
        assert!(Quiver::make_dynkin(DynkinType::D(3), None).is_err());
        assert!("A0".parse::<DynkinType>().is_err());
        assert!("X4".parse::<DynkinType>().is_err());
    }

    #[test]
    fn orientation_length_checked() {
        assert!(Quiver::make_dynkin(DynkinType::A(3), Some(&[true])).is_err());
    }

    #[test]
    fn a2_roots() {
        let q = Quiver::make_dynkin(DynkinType::A(2), None).unwrap();
        let roots = q.positive_roots();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tits_oracle_count(&q), 3);
    }

    #[test]
    fn root_counts_match_oracle() {
        for t in [
            DynkinType::A(3),
            DynkinType::A(5),
            DynkinType::D(4),
            DynkinType::D(5),
            DynkinType::E(6),
        ] {
            let q = Quiver::make_dynkin(t, None).unwrap();
            let roots = q.positive_roots();
            assert_eq!(roots.len(), t.root_count(), "{t}");
            assert_eq!(tits_oracle_count(&q), t.root_count(), "{t}");
        }
    }

    #[test]
    fn roots_orientation_free() {
        let fwd = Quiver::make_dynkin(DynkinType::D(4), None).unwrap();
        let mixed = Quiver::make_dynkin(DynkinType::D(4), Some(&[false, true, false])).unwrap();
        assert_eq!(fwd.positive_roots(), mixed.positive_roots());
    }

    #[test]
    fn euler_form_values() {
        let q = Quiver::make_dynkin(DynkinType::A(2), None).unwrap();
        assert_eq!(q.euler_form(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(q.euler_form(&[1, 1], &[1, 1]).unwrap(), 1);
        assert_eq!(q.euler_form(&[2, 3], &[0, 0]).unwrap(), 0);
        assert!(q.euler_form(&[1], &[0, 1]).is_err());
    }

    #[test]
    fn roots_are_exactly_tits_one() {
        let q = Quiver::make_dynkin(DynkinType::D(4), None).unwrap();
        for r in q.positive_roots() {
            assert_eq!(q.tits_form(&r).unwrap(), 1);
            assert!(r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0));
        }
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::make_dynkin(DynkinType::A(3), Some(&[true, false])).unwrap();
        let s = q.to_json();
        assert_eq!(s, r#"{"type":"A","rank":3,"arrows":[[1,2],[3,2]]}"#);
        assert_eq!(Quiver::from_json(&s).unwrap(), q);
    }

    #[test]
    fn noncrossing_counts() {
        assert_eq!(DynkinType::A(2).noncrossing_count(), 5);
        assert_eq!(DynkinType::A(3).noncrossing_count(), 14);
        assert_eq!(DynkinType::D(4).noncrossing_count(), 50);
        assert_eq!(DynkinType::D(5).noncrossing_count(), 182);
    }
}
