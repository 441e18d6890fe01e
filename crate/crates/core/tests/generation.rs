mod common;

use std::collections::{BTreeMap, BTreeSet};

use osg_core::generation::{
    canonical_form, enumerate_associative_tables, enumerate_compatible_orders, generate_corpus,
    labeled_partial_orders, relabel, GenerationSpec, Relation, Table,
};
use osg_core::{zoo, Error, OrderedSemigroup};

/// Every `n x n` table with entries below `n`, in lexicographic order.
fn all_tables(n: usize) -> Vec<Table> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = vec![0; cells];
            for c in (0..cells).rev() {
                flat[c] = code % n;
                code /= n;
            }
            flat.chunks(n).map(<[usize]>::to_vec).collect()
        })
        .collect()
}

fn associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// Every `n x n` boolean matrix.
fn all_relations(n: usize) -> Vec<Relation> {
    (0u32..1 << (n * n))
        .map(|code| {
            (0..n)
                .map(|i| (0..n).map(|j| code >> (i * n + j) & 1 == 1).collect())
                .collect()
        })
        .collect()
}

fn partial_order(r: &Relation) -> bool {
    let n = r.len();
    (0..n).all(|i| r[i][i])
        && (0..n).all(|i| (0..n).all(|j| i == j || !(r[i][j] && r[j][i])))
        && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(r[i][j] && r[j][k]) || r[i][k])))
}

fn compatible(t: &Table, r: &Relation) -> bool {
    let n = t.len();
    (0..n).all(|a| {
        (0..n).all(|b| !r[a][b] || (0..n).all(|x| r[t[x][a]][t[x][b]] && r[t[a][x]][t[b][x]]))
    })
}

#[test]
fn table_counts_match_brute_force() {
    let expected = [1, 8, 113];
    for n in 1..=3 {
        let brute: Vec<Table> = all_tables(n).into_iter().filter(associative).collect();
        assert_eq!(brute.len(), expected[n - 1]);
        assert_eq!(enumerate_associative_tables(n).unwrap(), brute, "n = {n}");
    }
    assert_eq!(all_tables(2).len(), 16);
    assert_eq!(all_tables(3).len(), 19683);
}

#[test]
fn order_four_table_count() {
    let tables = enumerate_associative_tables(4).unwrap();
    assert_eq!(tables.len(), 3492);
    assert!(tables.iter().all(associative));
    assert!(tables.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn poset_counts_match_brute_force() {
    let expected = [1, 3, 19];
    for n in 1..=3 {
        let brute: BTreeSet<Relation> =
            all_relations(n).into_iter().filter(partial_order).collect();
        assert_eq!(brute.len(), expected[n - 1]);
        let ours = labeled_partial_orders(n).unwrap();
        assert_eq!(ours.len(), brute.len());
        assert_eq!(ours.iter().cloned().collect::<BTreeSet<_>>(), brute);
        assert_eq!(ours[0], zoo::discrete(n));
    }
    assert_eq!(all_relations(3).len(), 512);
    assert_eq!(labeled_partial_orders(4).unwrap().len(), 219);
}

#[test]
fn compatible_orders_examples() {
    assert_eq!(
        enumerate_compatible_orders(&zoo::g2().table()).unwrap(),
        vec![zoo::discrete(2)]
    );
    let min2 = zoo::ch2().table();
    let orders = enumerate_compatible_orders(&min2).unwrap();
    assert_eq!(orders.len(), 3);
    assert!(matches!(
        enumerate_compatible_orders(&[vec![0, 1], vec![0, 0]]),
        Err(Error::NotAssociative { .. })
    ));
}

#[test]
fn labeled_corpus_is_complete_up_to_order_three() {
    let corpus = generate_corpus(&GenerationSpec::new(3, false).unwrap()).unwrap();
    let ours: BTreeSet<(Table, Relation)> =
        corpus.iter().map(|s| (s.table(), s.relation())).collect();
    assert_eq!(ours.len(), corpus.len());
    let mut brute = BTreeSet::new();
    for n in 1..=3 {
        let rels: Vec<Relation> = all_relations(n).into_iter().filter(partial_order).collect();
        for t in all_tables(n).into_iter().filter(associative) {
            for r in rels.iter().filter(|r| compatible(&t, r)) {
                brute.insert((t.clone(), r.clone()));
            }
        }
    }
    assert_eq!(ours, brute);
    for s in &corpus {
        OrderedSemigroup::new(s.name(), &s.table(), &s.relation()).unwrap();
    }
}

#[test]
fn order_two_counts() {
    let labeled = generate_corpus(&GenerationSpec::new(2, false).unwrap()).unwrap();
    let by_tables: usize = (1..=2)
        .flat_map(|n| enumerate_associative_tables(n).unwrap())
        .map(|t| enumerate_compatible_orders(&t).unwrap().len())
        .sum();
    assert_eq!(labeled.len(), by_tables);
    let classes = generate_corpus(&GenerationSpec::new(2, true).unwrap()).unwrap();
    assert!(classes.len() < labeled.len());
    assert_eq!(
        generate_corpus(&GenerationSpec::new(1, false).unwrap())
            .unwrap()
            .len(),
        1
    );
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn iso_classes_partition_the_labeled_corpus() {
    let labeled = generate_corpus(&GenerationSpec::new(3, false).unwrap()).unwrap();
    let reps = generate_corpus(&GenerationSpec::new(3, true).unwrap()).unwrap();

    // Class of a structure: the set of every relabeling, computed directly.
    let orbit = |s: &OrderedSemigroup| -> BTreeSet<(Table, Relation)> {
        permutations(s.size())
            .iter()
            .map(|p| {
                let r = relabel(s, p).unwrap();
                (r.table(), r.relation())
            })
            .collect()
    };
    let mut owner: BTreeMap<(Table, Relation), usize> = BTreeMap::new();
    for (i, rep) in reps.iter().enumerate() {
        for key in orbit(rep) {
            assert!(
                owner.insert(key, i).is_none(),
                "two representatives share a class"
            );
        }
    }
    let mut by_form: BTreeMap<Vec<u8>, BTreeSet<usize>> = BTreeMap::new();
    for s in &labeled {
        let rep = owner[&(s.table(), s.relation())];
        by_form.entry(canonical_form(s)).or_default().insert(rep);
    }
    assert_eq!(by_form.len(), reps.len());
    assert!(by_form.values().all(|r| r.len() == 1));
    assert_eq!(owner.len(), labeled.len());
}

#[test]
fn generation_spec_bounds() {
    assert!(GenerationSpec::new(0, false).is_err());
    assert!(GenerationSpec::new(5, false).is_err());
    assert!(enumerate_associative_tables(5).is_err());
}
