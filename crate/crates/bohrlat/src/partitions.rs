//! Finite partition lattices.
//!
//! Partitions of `{0..n-1}` are stored as restricted growth strings and
//! ordered by refinement: the bottom element is all singletons, the top is
//! the single block `{0..n-1}`. The poset of unital commutative
//! subalgebras of `C({0..n-1})` is anti-isomorphic to this lattice; the
//! bridge lives in [`crate::csub`].

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Upper bound on enumerable ground sets (`Bell(12) = 4_213_597`).
pub const MAX_ENUM_N: usize = 12;

/// Partition of `{0..n-1}` in canonical restricted-growth-string form:
/// `rgs[0] = 0` and `rgs[i+1] <= 1 + max(rgs[0..=i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rgs: Vec<u8>,
}

impl Partition {
    /// Builds from an arbitrary block labeling, canonicalizing labels by
    /// first occurrence.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("empty ground set".into()));
        }
        let mut relabel: HashMap<usize, u8> = HashMap::new();
        let mut next = 0u8;
        let mut rgs = Vec::with_capacity(labels.len());
        for &l in labels {
            let id = *relabel.entry(l).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            rgs.push(id);
        }
        Ok(Partition { rgs })
    }

    /// Validates an already-canonical restricted growth string.
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        if rgs.is_empty() {
            return Err(Error::InvalidPartition("empty ground set".into()));
        }
        if rgs[0] != 0 {
            return Err(Error::InvalidPartition("rgs[0] must be 0".into()));
        }
        let mut max = 0u8;
        for &x in &rgs[1..] {
            if x > max + 1 {
                return Err(Error::InvalidPartition("growth condition violated".into()));
            }
            max = max.max(x);
        }
        Ok(Partition { rgs })
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        *self.rgs.iter().max().expect("nonempty") as usize + 1
    }

    /// Blocks as sorted index sets, ordered by block label (= first occurrence).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b as usize].push(i);
        }
        blocks
    }

    /// All-singletons partition, the lattice bottom.
    pub fn bottom(n: usize) -> Self {
        Partition { rgs: (0..n).map(|i| i as u8).collect() }
    }

    /// Single-block partition `{X}`, the lattice top.
    pub fn top(n: usize) -> Self {
        Partition { rgs: vec![0; n] }
    }

    pub fn is_bottom(&self) -> bool {
        self.num_blocks() == self.n()
    }

    pub fn is_top(&self) -> bool {
        self.num_blocks() == 1
    }

    /// Compact label used in DOT output and reports, e.g. `"0|1 2"`.
    pub fn label(&self) -> String {
        self.blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("|")
    }
}

fn check_same_n(p: &Partition, q: &Partition) -> Result<()> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(p.n(), q.n()));
    }
    Ok(())
}

/// `p <= q` in refinement order: every block of `p` lies inside a block of `q`.
pub fn refines(p: &Partition, q: &Partition) -> Result<bool> {
    check_same_n(p, q)?;
    // p refines q iff the map (p-block -> q-block) is well defined.
    let mut image: Vec<Option<u8>> = vec![None; p.num_blocks()];
    for i in 0..p.n() {
        let pb = p.rgs[i] as usize;
        match image[pb] {
            None => image[pb] = Some(q.rgs[i]),
            Some(qb) if qb != q.rgs[i] => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// Least upper bound: transitive closure of the union of block relations.
pub fn join(p: &Partition, q: &Partition) -> Result<Partition> {
    check_same_n(p, q)?;
    let n = p.n();
    let mut uf = UnionFind::new(n);
    for part in [p, q] {
        let mut first_of: HashMap<u8, usize> = HashMap::new();
        for i in 0..n {
            match first_of.entry(part.rgs[i]) {
                std::collections::hash_map::Entry::Occupied(e) => uf.union(*e.get(), i),
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(i);
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
    Partition::from_labels(&labels)
}

/// Greatest lower bound: blockwise intersection.
pub fn meet(p: &Partition, q: &Partition) -> Result<Partition> {
    check_same_n(p, q)?;
    let n = p.n();
    let labels: Vec<usize> = (0..n)
        .map(|i| p.rgs[i] as usize * n + q.rgs[i] as usize)
        .collect();
    Partition::from_labels(&labels)
}

/// `q` covers `p`: immediate successor in refinement order.
///
/// In the partition lattice this is equivalent to `p <= q` with exactly one
/// block merge, i.e. a block-count difference of one.
pub fn covers(p: &Partition, q: &Partition) -> Result<bool> {
    Ok(refines(p, q)? && p.num_blocks() == q.num_blocks() + 1)
}

/// Join of a list; `None` when the list is empty.
pub fn join_all(ps: &[Partition]) -> Result<Option<Partition>> {
    let mut it = ps.iter();
    let Some(first) = it.next() else {
        return Ok(None);
    };
    let mut acc = first.clone();
    for p in it {
        acc = join(&acc, p)?;
    }
    Ok(Some(acc))
}

/// All partitions of `{0..n-1}`, canonical, in lexicographic RGS order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n < 1 || n > MAX_ENUM_N {
        return Err(Error::SizeLimit { what: "partition ground set", limit: MAX_ENUM_N, got: n });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0u8; n];
    loop {
        out.push(Partition { rgs: rgs.clone() });
        // Next restricted growth string in lexicographic order.
        let mut i = n;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for x in rgs[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// All atoms of the lattice: the pair partitions, count `n(n-1)/2`.
pub fn atoms(n: usize) -> Result<Vec<Partition>> {
    if n < 1 || n > MAX_ENUM_N {
        return Err(Error::SizeLimit { what: "partition ground set", limit: MAX_ENUM_N, got: n });
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(single_block_partition(&[i, j], n)?);
        }
    }
    Ok(out)
}

/// `pi_K`: the partition consisting of `K` and all singletons outside `K`.
pub fn single_block_partition(subset: &[usize], n: usize) -> Result<Partition> {
    if subset.is_empty() {
        return Err(Error::InvalidPartition("subset must be nonempty".into()));
    }
    let mut in_k = vec![false; n];
    for &x in subset {
        if x >= n {
            return Err(Error::InvalidPartition(format!("index {x} out of range for n = {n}")));
        }
        in_k[x] = true;
    }
    let k_label = n; // distinct from all singleton labels
    let labels: Vec<usize> = (0..n).map(|i| if in_k[i] { k_label } else { i }).collect();
    Partition::from_labels(&labels)
}

/// Direct membership test for the single-block class: exactly one block of
/// size at least two.
pub fn is_f2_direct(p: &Partition) -> bool {
    p.blocks().iter().filter(|b| b.len() >= 2).count() == 1
}

/// Decomposition `p = join { pi_K(x) : |K(x)| >= 2 }`; bottom gives `[]`.
pub fn decompose_as_join(p: &Partition) -> Vec<Partition> {
    p.blocks()
        .iter()
        .filter(|b| b.len() >= 2)
        .map(|b| single_block_partition(b, p.n()).expect("valid block"))
        .collect()
}

/// Materialized partition lattice with an element index.
#[derive(Debug, Clone)]
pub struct PartitionLattice {
    n: usize,
    elements: Vec<Partition>,
    index: HashMap<Vec<u8>, usize>,
}

impl PartitionLattice {
    pub fn new(n: usize) -> Result<Self> {
        let elements = enumerate_partitions(n)?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.rgs().to_vec(), i))
            .collect();
        Ok(PartitionLattice { n, elements, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.get(p.rgs()).copied()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.position(p).is_some()
    }

    pub fn atoms(&self) -> Vec<Partition> {
        atoms(self.n).expect("n already validated")
    }

    /// Atoms lying below `p`.
    pub fn atoms_below(&self, p: &Partition) -> Vec<Partition> {
        self.atoms()
            .into_iter()
            .filter(|a| refines(a, p).expect("same n"))
            .collect()
    }

    /// Number of atoms covered by `p` (not merely below it).
    fn atoms_covered_by(&self, p: &Partition) -> usize {
        self.atoms()
            .iter()
            .filter(|a| covers(a, p).expect("same n"))
            .count()
    }

    /// Order-theoretic membership test for the single-block class, phrased
    /// entirely in terms of atoms, covers, and joins:
    ///
    /// 1. `p` is an atom; or
    /// 2. `p` covers exactly three distinct atoms; or
    /// 3. `p` has at least two atoms below it, and for all distinct atoms
    ///    `a, b <= p` there is an atom `g <= p` such that both `a v g` and
    ///    `b v g` cover exactly three atoms.
    ///
    /// The guard in 3 is needed because the bare condition is vacuous at the
    /// bottom and at atoms. Agreement with [`is_f2_direct`] is a tested
    /// invariant.
    pub fn is_f2_order_theoretic(&self, p: &Partition) -> Result<bool> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, p.n()));
        }
        let bottom = Partition::bottom(self.n);
        if covers(&bottom, p)? {
            return Ok(true); // atom
        }
        if self.atoms_covered_by(p) == 3 {
            return Ok(true);
        }
        let below = self.atoms_below(p);
        if below.len() < 2 {
            return Ok(false);
        }
        for a in &below {
            for b in &below {
                if a == b {
                    continue;
                }
                let ok = below.iter().any(|g| {
                    let ag = join(a, g).expect("same n");
                    let bg = join(b, g).expect("same n");
                    self.atoms_covered_by(&ag) == 3 && self.atoms_covered_by(&bg) == 3
                });
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All cover pairs `(i, j)` with `elements[j]` covering `elements[i]`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, p) in self.elements.iter().enumerate() {
            for (j, q) in self.elements.iter().enumerate() {
                if i != j && covers(p, q).expect("same n") {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Bell numbers by the Bell-triangle recurrence; independent of the
/// enumerator, used as a counting oracle.
pub fn bell_number(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut row = vec![1u64];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    *row.last().unwrap()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Smaller root wins so labels follow first occurrences.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
