//! Small permutation groups and brute-force checks of the abelian
//! transitive lemmas: such a group is regular, its elements are
//! fixed-point-free products of equal-length cycles, and on `2^k` points it
//! is cyclic once it leaves the alternating group.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::{Error, Result};

pub const MAX_DEGREE: usize = 12;
pub const MAX_GROUP_ORDER: usize = 10_000_000;

/// A permutation of `{0..len}`; displayed and parsed 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    len: u8,
    images: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree above {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE];
        for (i, v) in images.iter_mut().enumerate().take(n) {
            *v = i as u8;
        }
        Self {
            len: n as u8,
            images,
        }
    }

    /// From 0-based images; `None` unless a bijection of `{0..n}`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return None;
        }
        let mut seen = [false; MAX_DEGREE];
        let mut out = Self::identity(n);
        for (i, &v) in images.iter().enumerate() {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
            out.images[i] = v as u8;
        }
        Some(out)
    }

    /// Parses 1-based cycle notation such as `"(1 5 3 7)(2 6 4 8)"`; `"()"` is the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidArgument(format!("bad permutation {s:?}: {why}"));
        if n > MAX_DEGREE {
            return Err(bad("degree above 12"));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let points = body[..close]
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(p) if (1..=n).contains(&p) => Ok(p - 1),
                    _ => Err(bad("point out of range")),
                })
                .collect::<Result<Vec<_>>>()?;
            for (i, &p) in points.iter().enumerate() {
                if moved[p] {
                    return Err(bad("cycles are not disjoint"));
                }
                moved[p] = true;
                images[p] = points[(i + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Self::from_images(&images).expect("disjoint cycles form a bijection"))
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[i] = self.images[other.images[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[self.images[i] as usize] = i as u8;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.image(i) == i)
    }

    /// Cycle lengths, fixed points included as 1-cycles.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image(i);
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycle_lengths().into_iter().fold(1, num_integer::lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.image(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An explicitly enumerated permutation group.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted, without repeats.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Breadth-first closure of `generators` inside `S_n`.
pub fn group_closure(n: usize, generators: &[Permutation]) -> Result<PermGroup> {
    closure_with_limit(n, generators, MAX_GROUP_ORDER)
}

fn closure_with_limit(n: usize, generators: &[Permutation], limit: usize) -> Result<PermGroup> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "degree must lie in 1..={MAX_DEGREE}, got {n}"
        )));
    }
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(Error::InvalidArgument(format!(
            "generator {g} does not act on {n} points"
        )));
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y) {
                if seen.len() > limit {
                    return Err(Error::GroupTooLarge { limit });
                }
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(PermGroup {
        degree: n,
        generators: generators.to_vec(),
        elements,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub order: usize,
    pub abelian: bool,
    pub transitive: bool,
    pub order_equals_degree: bool,
    /// Every element of order `l` is a product of `n / l` disjoint `l`-cycles.
    pub cycle_structure_ok: bool,
    pub in_alternating: bool,
    pub cyclic: bool,
    /// Lemma clauses whose hypotheses hold but whose conclusion fails.
    pub violations: Vec<String>,
}

fn is_abelian(gens: &[Permutation]) -> bool {
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
}

fn is_transitive(n: usize, gens: &[Permutation]) -> bool {
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for g in gens {
            let j = g.image(i);
            if !reached[j] {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

pub fn verify_abelian_transitive_lemmas(group: &PermGroup) -> LemmaReport {
    let n = group.degree;
    let order = group.order();
    // commuting generators suffice for the whole group
    let abelian = is_abelian(&group.generators);
    let transitive = is_transitive(n, &group.generators);
    let cycle_structure_ok = group.elements.iter().all(|g| {
        let l = g.order();
        g.cycle_lengths().iter().all(|&c| c == l)
    });
    let in_alternating = group.elements.iter().all(Permutation::is_even);
    let cyclic = group.elements.iter().any(|g| g.order() == order);

    let mut violations = Vec::new();
    if abelian && transitive && order != n {
        violations.push(format!(
            "abelian transitive group of order {order} on {n} points"
        ));
    }
    if abelian && transitive && !cycle_structure_ok {
        violations.push("element whose cycles have unequal lengths".into());
    }
    if n.is_power_of_two() && abelian && transitive && !in_alternating && !cyclic {
        violations
            .push("non-cyclic abelian transitive 2-group outside the alternating group".into());
    }
    LemmaReport {
        order,
        abelian,
        transitive,
        order_equals_degree: order == n,
        cycle_structure_ok,
        in_alternating,
        cyclic,
        violations,
    }
}

/// Summary of checking every subgroup generated by a pair of elements of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub degree: usize,
    pub pairs: usize,
    pub distinct_groups: usize,
    pub abelian_transitive: usize,
    pub violations: Vec<String>,
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix).expect("bijection"));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Closes every unordered pair `{a, b}` of elements of `S_n` and checks the
/// lemmas on each distinct group. With `skip_non_commuting`, pairs that do
/// not commute are not closed: they generate non-abelian groups, where no
/// clause has its hypotheses met.
pub fn sweep_pair_generated(n: usize, skip_non_commuting: bool) -> Result<SweepReport> {
    if n == 0 || n > 7 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive sweep supports 1..=7 points, got {n}"
        )));
    }
    let all = all_permutations(n);
    let mut groups: HashSet<Vec<Permutation>> = HashSet::new();
    let mut report = SweepReport {
        degree: n,
        pairs: 0,
        distinct_groups: 0,
        abelian_transitive: 0,
        violations: Vec::new(),
    };
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            report.pairs += 1;
            if skip_non_commuting && a.compose(b) != b.compose(a) {
                continue;
            }
            let g = group_closure(n, &[*a, *b])?;
            if !groups.insert(g.elements.clone()) {
                continue;
            }
            let r = verify_abelian_transitive_lemmas(&g);
            if r.abelian && r.transitive {
                report.abelian_transitive += 1;
            }
            for v in r.violations {
                report.violations.push(format!("<{a}, {b}>: {v}"));
            }
        }
    }
    report.distinct_groups = groups.len();
    Ok(report)
}
