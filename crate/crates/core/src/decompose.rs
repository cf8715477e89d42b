//! Vertex decompositions of balanced hypergraphs and their verifiers.
//!
//! Three tripartitions of the vertex set:
//!
//! * D/P/M — D holds the vertices missed by some V-maximum matching
//!   (equivalently: zero in every minimum V-cover), P those with `x_v ≥ 2`
//!   in every minimum V-cover, M the rest;
//! * F/Q/N — the analogue for E-maximum matchings and minimum E-covers
//!   (`x_v = 0` always / `x_v = 1` always / the rest);
//! * classic D/A/C — D as above, A its neighbors outside D, C the rest.
//!
//! Every "for all optima" quantifier is realized by full enumeration; the
//! two definitions of D (and of F) are both computed and asserted equal on
//! every balanced instance.

use crate::balance::require_balanced;
use crate::error::{Error, Result};
use crate::hypergraph::{DeleteMode, Hypergraph};
use crate::set::IdSet;
use crate::solve::{enumerate_max_matchings, enumerate_min_covers, max_matching, WeightFn};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompTag {
    Dpm,
    Fqn,
    ClassicDac,
}

/// An ordered tripartition of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub tag: DecompTag,
    pub parts: [IdSet; 3],
}

impl Decomposition {
    fn new(tag: DecompTag, parts: [IdSet; 3], vertices: IdSet) -> Self {
        debug_assert_eq!(parts[0].union(parts[1]).union(parts[2]), vertices);
        debug_assert!(parts[0].intersect(parts[1]).is_empty());
        debug_assert!(parts[0].intersect(parts[2]).is_empty());
        debug_assert!(parts[1].intersect(parts[2]).is_empty());
        Decomposition { tag, parts }
    }
}

fn missed_by_some_optimum(h: &Hypergraph, d: &WeightFn, limits: &Limits) -> Result<IdSet> {
    let optima = enumerate_max_matchings(h, d, limits)?;
    Ok(optima.iter().fold(IdSet::EMPTY, |acc, m| {
        acc.union(h.vertices().minus(m.covered(h)))
    }))
}

/// The D/P/M decomposition. Both characterizations of D are computed and
/// must coincide.
pub fn dpm(h: &Hypergraph, limits: &Limits) -> Result<Decomposition> {
    require_balanced(h, limits)?;
    dpm_unchecked(h, limits)
}

fn dpm_unchecked(h: &Hypergraph, limits: &Limits) -> Result<Decomposition> {
    let d_matching = missed_by_some_optimum(h, &WeightFn::VWeights, limits)?;
    let covers = enumerate_min_covers(h, &WeightFn::VWeights, limits)?;
    let d_cover: IdSet = h
        .vertices()
        .iter()
        .filter(|&v| covers.iter().all(|x| x.value(v) == 0))
        .collect();
    assert_eq!(
        d_matching, d_cover,
        "the two definitions of D must coincide on balanced instances"
    );
    let p: IdSet = h
        .vertices()
        .iter()
        .filter(|&v| covers.iter().all(|x| x.value(v) >= 2))
        .collect();
    let m = h.vertices().minus(d_matching.union(p));
    Ok(Decomposition::new(
        DecompTag::Dpm,
        [d_matching, p, m],
        h.vertices(),
    ))
}

/// The F/Q/N decomposition under E-weights. Both characterizations of F are
/// computed and must coincide.
pub fn fqn(h: &Hypergraph, limits: &Limits) -> Result<Decomposition> {
    require_balanced(h, limits)?;
    fqn_unchecked(h, limits)
}

fn fqn_unchecked(h: &Hypergraph, limits: &Limits) -> Result<Decomposition> {
    let f_matching = missed_by_some_optimum(h, &WeightFn::EWeights, limits)?;
    let covers = enumerate_min_covers(h, &WeightFn::EWeights, limits)?;
    let f_cover: IdSet = h
        .vertices()
        .iter()
        .filter(|&v| covers.iter().all(|x| x.value(v) == 0))
        .collect();
    assert_eq!(
        f_matching, f_cover,
        "the two definitions of F must coincide on balanced instances"
    );
    let q: IdSet = h
        .vertices()
        .iter()
        .filter(|&v| covers.iter().all(|x| x.value(v) == 1))
        .collect();
    let n = h.vertices().minus(f_matching.union(q));
    Ok(Decomposition::new(
        DecompTag::Fqn,
        [f_matching, q, n],
        h.vertices(),
    ))
}

/// The classic D/A/C partition: `u` and `v` are neighbors when some edge
/// contains both. Defined for unbalanced inputs as well (D is taken from the
/// matching characterization).
pub fn classic_dac(h: &Hypergraph, limits: &Limits) -> Result<Decomposition> {
    let d = missed_by_some_optimum(h, &WeightFn::VWeights, limits)?;
    let a: IdSet = h
        .vertices()
        .minus(d)
        .iter()
        .filter(|&v| h.edges().iter().any(|e| e.contains(v) && e.intersects(d)))
        .collect();
    let c = h.vertices().minus(d.union(a));
    Ok(Decomposition::new(
        DecompTag::ClassicDac,
        [d, a, c],
        h.vertices(),
    ))
}

/// Outcome of one numbered condition. Items whose quantifier domain is empty
/// are marked vacuous rather than silently passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemReport {
    pub pass: bool,
    pub vacuous: bool,
    pub detail: Option<String>,
}

impl ItemReport {
    fn from_checks(checked: usize, failures: Vec<String>) -> Self {
        ItemReport {
            pass: failures.is_empty(),
            vacuous: checked == 0,
            detail: if failures.is_empty() {
                None
            } else {
                Some(failures.join("; "))
            },
        }
    }
}

/// Item-by-item theorem report; seven entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub items: Vec<ItemReport>,
}

impl TheoremCheck {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|item| item.pass)
    }
}

/// γ under `d` after weak deletion of `v`; `None` when the deletion empties
/// the hypergraph.
fn gamma_after_delete(
    h: &Hypergraph,
    v: usize,
    d: &WeightFn,
    limits: &Limits,
) -> Result<Option<u64>> {
    match h.delete(DeleteMode::WeakVertex, v) {
        Ok(reduced) => Ok(Some(max_matching(&reduced, d, limits)?.weight)),
        Err(Error::ResultEmpty) => Ok(None),
        Err(err) => Err(err),
    }
}

fn decomposition_after_delete(
    h: &Hypergraph,
    v: usize,
    tag: DecompTag,
    limits: &Limits,
) -> Result<Option<Decomposition>> {
    let reduced = match h.delete(DeleteMode::WeakVertex, v) {
        Ok(reduced) => reduced,
        Err(Error::ResultEmpty) => return Ok(None),
        Err(err) => return Err(err),
    };
    // Weak deletion is an induced subhypergraph, so balancedness is
    // inherited and the unchecked constructors apply.
    let dec = match tag {
        DecompTag::Dpm => dpm_unchecked(&reduced, limits)?,
        DecompTag::Fqn => fqn_unchecked(&reduced, limits)?,
        DecompTag::ClassicDac => classic_dac(&reduced, limits)?,
    };
    Ok(Some(dec))
}

fn require_subset(label: &str, v: usize, small: IdSet, big: IdSet, failures: &mut Vec<String>) {
    if !small.is_subset(big) {
        failures.push(format!(
            "v={v}: {label}: {:?} ⊄ {:?}",
            small.minus(big),
            big
        ));
    }
}

/// Verifies the seven conditions of the D/P/M decomposition theorem.
pub fn verify_galed2(h: &Hypergraph, limits: &Limits) -> Result<TheoremCheck> {
    require_balanced(h, limits)?;
    let dec = dpm_unchecked(h, limits)?;
    let [d_set, p_set, m_set] = dec.parts;
    let gamma = max_matching(h, &WeightFn::VWeights, limits)?.weight;

    let mut items = Vec::with_capacity(7);

    // 1. γ_V(H∖v) = γ_V(H) for v ∈ D.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in d_set.iter() {
        if let Some(g) = gamma_after_delete(h, v, &WeightFn::VWeights, limits)? {
            checked += 1;
            if g != gamma {
                failures.push(format!("v={v}: γ(H∖v)={g} ≠ {gamma}"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 2. γ_V(H) ≤ γ_V(H∖v) for v ∈ P.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in p_set.iter() {
        if let Some(g) = gamma_after_delete(h, v, &WeightFn::VWeights, limits)? {
            checked += 1;
            if g < gamma {
                failures.push(format!("v={v}: γ(H∖v)={g} < {gamma}"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 3. γ_V(H∖v) = γ_V(H) − 1 for v ∈ M.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in m_set.iter() {
        if let Some(g) = gamma_after_delete(h, v, &WeightFn::VWeights, limits)? {
            checked += 1;
            if g + 1 != gamma {
                failures.push(format!("v={v}: γ(H∖v)={g} ≠ {gamma}−1"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 4. No edge inside D.
    let mut failures = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.is_subset(d_set) {
            failures.push(format!("edge {i} ⊆ D"));
        }
    }
    items.push(ItemReport::from_checks(h.edge_count(), failures));

    // 5. |m| ≥ 2|m∩P| on maximum-matching edges, strict +1 when m meets M.
    let mut checked = 0;
    let mut failures = Vec::new();
    for matching in enumerate_max_matchings(h, &WeightFn::VWeights, limits)? {
        for m in matching.edges.iter() {
            checked += 1;
            let edge = h.edge(m);
            let in_p = edge.intersect(p_set).len();
            if edge.len() < 2 * in_p {
                failures.push(format!("edge {m}: |m|={} < 2·{in_p}", edge.len()));
            }
            if edge.intersects(m_set) && edge.len() < 2 * in_p + 1 {
                failures.push(format!(
                    "edge {m}: |m|={} < 2·{in_p}+1 though m∩M ≠ ∅",
                    edge.len()
                ));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 6. Deletion stability for v ∈ D.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in d_set.iter() {
        if let Some(del) = decomposition_after_delete(h, v, DecompTag::Dpm, limits)? {
            checked += 1;
            let [dd, pd, md] = del.parts;
            let mut d_minus = d_set;
            d_minus.remove(v);
            require_subset("M ⊆ M'", v, m_set, md, &mut failures);
            require_subset(
                "M' ⊆ D∖v ∪ P ∪ M",
                v,
                md,
                d_minus.union(p_set).union(m_set),
                &mut failures,
            );
            require_subset("P ⊆ M' ∪ P'", v, p_set, md.union(pd), &mut failures);
            require_subset("P' ⊆ D∖v ∪ P", v, pd, d_minus.union(p_set), &mut failures);
            require_subset(
                "D∖v ⊆ M' ∪ P' ∪ D'",
                v,
                d_minus,
                md.union(pd).union(dd),
                &mut failures,
            );
            require_subset("D' ⊆ D∖v", v, dd, d_minus, &mut failures);
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 7. Deletion stability for v ∈ M.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in m_set.iter() {
        if let Some(del) = decomposition_after_delete(h, v, DecompTag::Dpm, limits)? {
            checked += 1;
            let [dd, pd, md] = del.parts;
            let mut m_minus = m_set;
            m_minus.remove(v);
            require_subset(
                "M∖v ⊆ M' ∪ P' ∪ D'",
                v,
                m_minus,
                md.union(pd).union(dd),
                &mut failures,
            );
            require_subset("M' ⊆ M∖v", v, md, m_minus, &mut failures);
            require_subset("P ⊆ P'", v, p_set, pd, &mut failures);
            require_subset("P' ⊆ M∖v ∪ P", v, pd, m_minus.union(p_set), &mut failures);
            require_subset("D ⊆ D'", v, d_set, dd, &mut failures);
            require_subset("D' ⊆ M∖v ∪ D", v, dd, m_minus.union(d_set), &mut failures);
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    Ok(TheoremCheck { items })
}

/// Verifies the seven conditions of the F/Q/N decomposition theorem.
pub fn verify_galed1(h: &Hypergraph, limits: &Limits) -> Result<TheoremCheck> {
    require_balanced(h, limits)?;
    let dec = fqn_unchecked(h, limits)?;
    let [f_set, q_set, n_set] = dec.parts;
    let gamma = max_matching(h, &WeightFn::EWeights, limits)?.weight;

    let mut items = Vec::with_capacity(7);

    // 1. γ_E(H∖v) = γ_E(H) for v ∈ F.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in f_set.iter() {
        if let Some(g) = gamma_after_delete(h, v, &WeightFn::EWeights, limits)? {
            checked += 1;
            if g != gamma {
                failures.push(format!("v={v}: γ_E(H∖v)={g} ≠ {gamma}"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 2. γ_E(H) < γ_E(H∖v) for v ∈ Q outside singleton edges.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in q_set.iter() {
        let in_singleton = h.edges().iter().any(|e| e.len() == 1 && e.contains(v));
        if in_singleton {
            continue;
        }
        if let Some(g) = gamma_after_delete(h, v, &WeightFn::EWeights, limits)? {
            checked += 1;
            if g <= gamma {
                failures.push(format!("v={v}: γ_E(H∖v)={g} ≤ {gamma}"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 3. γ_E(H∖v) = γ_E(H) for v ∈ N.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in n_set.iter() {
        if let Some(g) = gamma_after_delete(h, v, &WeightFn::EWeights, limits)? {
            checked += 1;
            if g != gamma {
                failures.push(format!("v={v}: γ_E(H∖v)={g} ≠ {gamma}"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 4. No edge inside F.
    let mut failures = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.is_subset(f_set) {
            failures.push(format!("edge {i} ⊆ F"));
        }
    }
    items.push(ItemReport::from_checks(h.edge_count(), failures));

    // 5. No maximum-matching edge inside N ∪ Q that meets Q. Singleton
    // edges are exempt as in item 2: cover tightness forces every other
    // vertex of such an edge into F, so any violation is a singleton in Q,
    // and those do occur (a matching may use the edge {u} with u ∈ Q).
    let mut checked = 0;
    let mut failures = Vec::new();
    for matching in enumerate_max_matchings(h, &WeightFn::EWeights, limits)? {
        for m in matching.edges.iter() {
            let edge = h.edge(m);
            if edge.len() < 2 {
                continue;
            }
            checked += 1;
            if edge.is_subset(n_set.union(q_set)) && edge.intersects(q_set) {
                failures.push(format!("edge {m} ⊆ N∪Q meets Q"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 6. Deletion equalities for v ∈ F.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in f_set.iter() {
        if let Some(del) = decomposition_after_delete(h, v, DecompTag::Fqn, limits)? {
            checked += 1;
            let [fd, qd, nd] = del.parts;
            let mut f_minus = f_set;
            f_minus.remove(v);
            if nd != n_set {
                failures.push(format!("v={v}: N' = {nd:?} ≠ N = {n_set:?}"));
            }
            if qd != q_set {
                failures.push(format!("v={v}: Q' = {qd:?} ≠ Q = {q_set:?}"));
            }
            if fd != f_minus {
                failures.push(format!("v={v}: F' = {fd:?} ≠ F∖v = {f_minus:?}"));
            }
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    // 7. Deletion stability for v ∈ N.
    let mut checked = 0;
    let mut failures = Vec::new();
    for v in n_set.iter() {
        if let Some(del) = decomposition_after_delete(h, v, DecompTag::Fqn, limits)? {
            checked += 1;
            let [fd, qd, nd] = del.parts;
            let mut n_minus = n_set;
            n_minus.remove(v);
            require_subset(
                "N∖v ⊆ N' ∪ Q' ∪ F'",
                v,
                n_minus,
                nd.union(qd).union(fd),
                &mut failures,
            );
            require_subset("N' ⊆ N∖v", v, nd, n_minus, &mut failures);
            require_subset("Q ⊆ Q'", v, q_set, qd, &mut failures);
            require_subset("Q' ⊆ N∖v ∪ Q", v, qd, n_minus.union(q_set), &mut failures);
            require_subset("F ⊆ F'", v, f_set, fd, &mut failures);
            require_subset("F' ⊆ N∖v ∪ F", v, fd, n_minus.union(f_set), &mut failures);
        }
    }
    items.push(ItemReport::from_checks(checked, failures));

    Ok(TheoremCheck { items })
}

/// `H∖v` has a perfect matching for every vertex; single-vertex hypergraphs
/// pass vacuously.
pub fn is_factor_critical(h: &Hypergraph, limits: &Limits) -> Result<bool> {
    for v in h.vertices().iter() {
        match gamma_after_delete(h, v, &WeightFn::VWeights, limits)? {
            Some(g) => {
                if g != (h.vertex_count() - 1) as u64 {
                    return Ok(false);
                }
            }
            None => continue,
        }
    }
    Ok(true)
}

/// Side-by-side comparison of the three decompositions with the equality
/// hypotheses.
#[derive(Debug, Clone)]
pub struct EqualityReport {
    pub dpm: Decomposition,
    pub fqn: Decomposition,
    pub dac: Decomposition,
    pub a_eq_p: bool,
    pub c_eq_m: bool,
    pub d_eq_f: bool,
    pub a_eq_q: bool,
    pub c_eq_n: bool,
    pub factor_critical: bool,
    pub bipartite: bool,
    pub m_empty: bool,
}

/// Bipartite instances must satisfy all five equalities; `M = ∅` forces
/// `A = P` and `C = M = ∅`.
pub fn compare_equalities(h: &Hypergraph, limits: &Limits) -> Result<EqualityReport> {
    require_balanced(h, limits)?;
    let dpm_dec = dpm_unchecked(h, limits)?;
    let fqn_dec = fqn_unchecked(h, limits)?;
    let dac_dec = classic_dac(h, limits)?;
    let factor_critical = is_factor_critical(h, limits)?;
    // A balanced graph is exactly a bipartite graph.
    let bipartite = h.is_graph();
    Ok(EqualityReport {
        a_eq_p: dac_dec.parts[1] == dpm_dec.parts[1],
        c_eq_m: dac_dec.parts[2] == dpm_dec.parts[2],
        d_eq_f: dpm_dec.parts[0] == fqn_dec.parts[0],
        a_eq_q: dac_dec.parts[1] == fqn_dec.parts[1],
        c_eq_n: dac_dec.parts[2] == fqn_dec.parts[2],
        m_empty: dpm_dec.parts[2].is_empty(),
        factor_critical,
        bipartite,
        dpm: dpm_dec,
        fqn: fqn_dec,
        dac: dac_dec,
    })
}
