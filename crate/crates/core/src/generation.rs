//! Exhaustive generation of small ordered semigroups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, OrderedSemigroup, Result};

/// Largest order the generator accepts.
pub const MAX_GENERATED_ORDER: usize = 4;

/// A Cayley table, `table[a][b] = a*b`.
pub type Table = Vec<Vec<usize>>;

/// An order relation, `leq[a][b]` iff `a <= b`.
pub type Relation = Vec<Vec<bool>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationSpec {
    max_order: usize,
    up_to_iso: bool,
}

impl GenerationSpec {
    pub fn new(max_order: usize, up_to_iso: bool) -> Result<Self> {
        if max_order == 0 || max_order > MAX_GENERATED_ORDER {
            return Err(Error::SizeOutOfRange(max_order));
        }
        Ok(GenerationSpec {
            max_order,
            up_to_iso,
        })
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn up_to_iso(&self) -> bool {
        self.up_to_iso
    }
}

impl Default for GenerationSpec {
    fn default() -> Self {
        GenerationSpec {
            max_order: 3,
            up_to_iso: false,
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(Error::SizeOutOfRange(n));
    }
    Ok(())
}

const UNSET: u8 = u8::MAX;

struct TableSearch {
    n: usize,
    cells: Vec<u8>,
    out: Vec<Table>,
}

impl TableSearch {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        match self.cells[a * self.n + b] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.get(a, b) else { continue };
                for c in 0..n {
                    let Some(bc) = self.get(b, c) else { continue };
                    if let (Some(l), Some(r)) = (self.get(ab, c), self.get(a, bc)) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, pos: usize) {
        let n = self.n;
        if pos == n * n {
            let table = self
                .cells
                .chunks(n)
                .map(|r| r.iter().map(|&v| v as usize).collect())
                .collect();
            self.out.push(table);
            return;
        }
        for v in 0..n as u8 {
            self.cells[pos] = v;
            if self.consistent() {
                self.fill(pos + 1);
            }
        }
        self.cells[pos] = UNSET;
    }
}

/// Every associative table on `n` elements, in lexicographic (row-major)
/// order. Cells are filled depth-first and a branch is cut as soon as a
/// fully evaluable triple breaks associativity.
pub fn enumerate_associative_tables(n: usize) -> Result<Vec<Table>> {
    check_order(n)?;
    let mut search = TableSearch {
        n,
        cells: vec![UNSET; n * n],
        out: Vec::new(),
    };
    search.fill(0);
    Ok(search.out)
}

fn check_associative(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                row,
                found: entries.len(),
            });
        }
        if let Some(col) = entries.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row,
                col,
                value: entries[col],
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Every partial order on `n` elements, discrete order first, then in
/// increasing order of the strict-pair bitmask.
pub fn labeled_partial_orders(n: usize) -> Result<Vec<Relation>> {
    check_order(n)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let mut leq = vec![vec![false; n]; n];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask & 1 << k != 0 {
                leq[a][b] = true;
            }
        }
        let antisymmetric = pairs.iter().all(|&(a, b)| !(leq[a][b] && leq[b][a]));
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !leq[a][b] || (0..n).all(|c| !leq[b][c] || leq[a][c])));
        if antisymmetric && transitive {
            out.push(leq);
        }
    }
    Ok(out)
}

/// Every partial order compatible with `table`; the discrete order is
/// always first.
pub fn enumerate_compatible_orders(table: &[Vec<usize>]) -> Result<Vec<Relation>> {
    check_order(table.len())?;
    check_associative(table)?;
    let n = table.len();
    let compatible = |leq: &Relation| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                a == b
                    || !leq[a][b]
                    || (0..n)
                        .all(|x| leq[table[x][a]][table[x][b]] && leq[table[a][x]][table[b][x]])
            })
        })
    };
    Ok(labeled_partial_orders(n)?
        .into_iter()
        .filter(compatible)
        .collect())
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn serialize_relabeled(
    s: &OrderedSemigroup,
    inverse: &[usize],
    forward: &[usize],
    out: &mut Vec<u8>,
) {
    let n = s.size();
    out.clear();
    out.push(n as u8);
    for x in 0..n {
        for y in 0..n {
            out.push(forward[s.mul(inverse[x], inverse[y])] as u8);
        }
    }
    for x in 0..n {
        for y in 0..n {
            out.push(s.leq(inverse[x], inverse[y]) as u8);
        }
    }
}

/// Applies the relabeling `i -> perm[i]` to table and order together.
pub fn relabel(s: &OrderedSemigroup, perm: &[usize]) -> Result<OrderedSemigroup> {
    let n = s.size();
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p >= n || core::mem::replace(&mut seen[p], true))
    {
        return Err(Error::InvalidPermutation { size: n });
    }
    let mut table = vec![vec![0; n]; n];
    let mut leq = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a]][perm[b]] = perm[s.mul(a, b)];
            leq[perm[a]][perm[b]] = s.leq(a, b);
        }
    }
    OrderedSemigroup::new(s.name(), &table, &leq)
}

/// Lexicographically least serialization of `(table, order)` over all
/// `n!` relabelings. Equal exactly for isomorphic ordered semigroups.
///
/// Cost is factorial in the size; intended for the generator's range.
pub fn canonical_form(s: &OrderedSemigroup) -> Vec<u8> {
    let n = s.size();
    let mut inverse: Vec<usize> = (0..n).collect();
    let mut forward = inverse.clone();
    let mut best: Option<Vec<u8>> = None;
    let mut buf = Vec::with_capacity(1 + 2 * n * n);
    loop {
        for (i, &q) in inverse.iter().enumerate() {
            forward[q] = i;
        }
        serialize_relabeled(s, &inverse, &forward, &mut buf);
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
        if !next_permutation(&mut inverse) {
            break;
        }
    }
    best.expect("at least one permutation")
}

/// All ordered semigroups up to `spec.max_order()`, grouped by order, then
/// by table, then by order relation. With `up_to_iso`, only the first
/// member of each isomorphism class is kept.
///
/// Records are named `o<n>_t<table>_p<order>` after their labeled position.
pub fn generate_corpus(spec: &GenerationSpec) -> Result<Vec<OrderedSemigroup>> {
    let mut corpus = Vec::new();
    let mut seen = BTreeSet::new();
    for n in 1..=spec.max_order {
        for (ti, table) in enumerate_associative_tables(n)?.iter().enumerate() {
            for (pi, leq) in enumerate_compatible_orders(table)?.iter().enumerate() {
                let s = OrderedSemigroup::new(format!("o{n}_t{ti}_p{pi}"), table, leq)?;
                if spec.up_to_iso && !seen.insert(canonical_form(&s)) {
                    continue;
                }
                corpus.push(s);
            }
        }
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn small_table_counts() {
        assert_eq!(enumerate_associative_tables(1).unwrap().len(), 1);
        assert_eq!(enumerate_associative_tables(2).unwrap().len(), 8);
        assert!(enumerate_associative_tables(0).is_err());
        assert!(enumerate_associative_tables(5).is_err());
    }

    #[test]
    fn tables_are_lexicographic() {
        let t = enumerate_associative_tables(3).unwrap();
        assert!(t.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orders_of_two_element_examples() {
        let lz = enumerate_compatible_orders(&lz2().table()).unwrap();
        assert_eq!(lz.len(), 3);
        assert_eq!(lz[0], discrete(2));
        assert_eq!(
            enumerate_compatible_orders(&g2().table()).unwrap(),
            [discrete(2)]
        );
        assert_eq!(
            enumerate_compatible_orders(&[vec![1, 1], vec![0, 0]]),
            Err(Error::NotAssociative { a: 0, b: 0, c: 0 })
        );
    }

    #[test]
    fn canonical_form_examples() {
        let lz = lz2();
        assert_eq!(
            canonical_form(&lz),
            canonical_form(&relabel(&lz, &[1, 0]).unwrap())
        );
        assert_ne!(canonical_form(&lz), canonical_form(&rz2()));
        let ch = ch2();
        let reversed =
            OrderedSemigroup::new("CH2r", &ch.table(), &[vec![true, false], vec![true, true]])
                .unwrap();
        assert_ne!(canonical_form(&ch), canonical_form(&reversed));
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        assert!(relabel(&lz2(), &[0, 0]).is_err());
        assert!(relabel(&lz2(), &[0]).is_err());
    }

    #[test]
    fn corpus_of_order_one() {
        let spec = GenerationSpec::new(1, false).unwrap();
        assert_eq!(generate_corpus(&spec).unwrap().len(), 1);
        assert!(GenerationSpec::new(5, false).is_err());
    }
}
