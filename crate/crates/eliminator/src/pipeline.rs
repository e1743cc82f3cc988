use std::collections::{BTreeMap, BTreeSet};

use zsig_arith::{prime_index, SignedBase};

use crate::arith::{congruence_obstruction, exceeds_two_thirds, partners};
use crate::class::{class_label, ClassLabel, SCOPE_T};
use crate::csp::{Problem, Solution};
use crate::data::GroupData;
use crate::error::Result;
use crate::ktable::k_candidates;
use crate::pair::CandidatePair;
use crate::report::{ContradictionReport, Fact, NarrativeEntry, Outcome, Pattern, Rule, Stalled};

#[derive(Default)]
struct Narrative {
    entries: Vec<NarrativeEntry>,
    witnesses: BTreeMap<String, u64>,
}

impl Narrative {
    fn push(&mut self, fact: Fact, source: Rule) {
        self.entries.push(NarrativeEntry { fact, source });
    }

    fn witness(&mut self, key: &str, value: u64) {
        self.witnesses.insert(key.to_string(), value);
    }

    fn finish(self, pair: &CandidatePair, pattern: Pattern, in_scope: bool) -> Result<Outcome> {
        let mut report = ContradictionReport {
            pair: *pair,
            pattern,
            witnesses: self.witnesses,
            narrative: self.entries,
            verified: false,
            in_scope,
        };
        report.verified = report.reverify()?;
        Ok(Outcome::Eliminated(report))
    }
}

/// Runs the elimination pipeline on one pair.
pub fn eliminate(pair: &CandidatePair) -> Result<Outcome> {
    let l = GroupData::of(&pair.target)?;
    let s = GroupData::of(&pair.candidate)?;
    let (lg, sg) = (*l.group(), *s.group());
    let t = l.t();
    let in_scope = t >= SCOPE_T;
    let mut story = Narrative::default();
    story.push(Fact::CocliqueNumber { group: lg, t }, Rule::CocliqueSearch);
    story.push(
        Fact::CocliqueNumber {
            group: sg,
            t: s.t(),
        },
        Rule::CocliqueSearch,
    );
    story.push(
        Fact::Granted {
            statement: "a composition factor S of a group isospectral to L has t(S) = t(L)".into(),
        },
        Rule::Granted,
    );
    if s.t() != t {
        story.witness("tL", t as u64);
        story.witness("tS", s.t() as u64);
        return story.finish(pair, Pattern::TMismatch, in_scope);
    }

    let (cl, cs) = (class_label(&lg), class_label(&sg));
    story.push(
        Fact::Class {
            group: lg,
            label: cl,
        },
        Rule::ClassTable,
    );
    story.push(
        Fact::Class {
            group: sg,
            label: cs,
        },
        Rule::ClassTable,
    );
    if let Some(i) = cs.missing_offset() {
        if cl != cs {
            let c = t - i;
            story.push(
                Fact::TValue {
                    group: lg,
                    value: c,
                    present: true,
                },
                Rule::CocliqueSearch,
            );
            story.push(
                Fact::TValue {
                    group: sg,
                    value: c,
                    present: false,
                },
                Rule::CocliqueSearch,
            );
            story.push(Fact::AboveTwoThirds { t, offset: i }, Rule::Arithmetic);
            story.push(
                Fact::Granted {
                    statement: "every value of T(L) above (2t + 2)/3 lies in T(S)".into(),
                },
                Rule::Transfer,
            );
            story.witness("i", i as u64);
            story.witness("c", c as u64);
            return story.finish(pair, Pattern::ClassMismatch, in_scope);
        }
    }

    let level = l.char_clique;
    let pattern = if cl.is_injective() {
        Pattern::InjectiveTarget
    } else if cs == ClassLabel::X1 {
        Pattern::LinearCandidate
    } else {
        match level {
            2 => Pattern::CharCliqueTwo,
            3 => Pattern::CharCliqueThree,
            _ => Pattern::CharCliqueFour,
        }
    };
    story.push(
        Fact::CharClique {
            group: lg,
            size: level,
        },
        Rule::CocliqueSearch,
    );
    story.push(
        Fact::Granted {
            statement: "p divides |S| and t(p, S) = t(p, L)".into(),
        },
        Rule::Granted,
    );
    let ks: Vec<u64> = k_candidates(level, &sg).into_iter().collect();
    story.push(
        Fact::KCandidates {
            l: level,
            group: sg,
            ks: ks.clone(),
        },
        Rule::CharacteristicTable,
    );
    story.push(
        Fact::PrimeIndex {
            prime: lg.p(),
            base: sg.q(),
            index: prime_index(lg.p(), SignedBase::plus(sg.q())?)?,
        },
        Rule::PrimeIndex,
    );
    story.witness("l", level as u64);
    let mut open = Vec::new();
    for &k in &ks {
        let suffix = if ks.len() > 1 {
            format!("_k{k}")
        } else {
            String::new()
        };
        let mut branch = Narrative::default();
        if close_branch(&l, &s, k, &mut branch)? {
            story.entries.extend(branch.entries);
            for (key, v) in branch.witnesses {
                story.witnesses.insert(format!("{key}{suffix}"), v);
            }
        } else {
            open.push(k);
        }
    }
    if !open.is_empty() {
        return Ok(Outcome::NotEliminated(Stalled {
            pair: *pair,
            pattern,
            open_k: open,
            reason: "no value of T(L) yields a congruence or an unassignable configuration".into(),
        }));
    }
    story.finish(pair, pattern, in_scope)
}

fn close_branch(l: &GroupData, s: &GroupData, k: u64, story: &mut Narrative) -> Result<bool> {
    let (lg, sg) = (*l.group(), *s.group());
    let values: Vec<usize> = l.zeta.t_values.iter().rev().copied().collect();
    for &c in &values {
        let fibre = s.fibre(c);
        if !fibre.iter().all(|&j| congruence_obstruction(j, k, &sg)) {
            continue;
        }
        let Some(&a) = l.zeta.preimage(c).iter().next() else {
            continue;
        };
        story.push(
            Fact::TValue {
                group: lg,
                value: c,
                present: true,
            },
            Rule::CocliqueSearch,
        );
        story.push(
            Fact::Zeta {
                group: lg,
                index: a,
                value: c,
            },
            Rule::CocliqueSearch,
        );
        if let Some(&i) = partners(l, a)?.first() {
            story.push(
                Fact::Partner {
                    group: lg,
                    small: a,
                    large: i,
                },
                Rule::PartnerPrimes,
            );
            story.witness("i", i);
        }
        story.push(
            Fact::Fibre {
                group: sg,
                value: c,
                indices: fibre.iter().copied().collect(),
            },
            Rule::Transfer,
        );
        for &j in &fibre {
            story.push(
                Fact::Congruence {
                    group: sg,
                    j,
                    k,
                    holds: true,
                },
                Rule::TorusCongruence,
            );
        }
        story.witness("k", k);
        story.witness("c", c as u64);
        story.witness("a", a);
        if fibre.len() == 1 {
            story.witness("j", *fibre.iter().next().expect("one element"));
        }
        return Ok(true);
    }
    for &c in &values {
        let small: Vec<u64> = l.zeta.preimage(c).into_iter().collect();
        let mut links = Vec::new();
        let mut large = BTreeSet::new();
        for &b in &small {
            for a in partners(l, b)? {
                if large.insert(a) {
                    links.push((b, a));
                }
            }
        }
        let large: Vec<u64> = large.into_iter().collect();
        let problem = Problem::build(l, s, k, &small, &large)?;
        if let Solution::Unsatisfiable { .. } = problem.solve() {
            story.push(
                Fact::TValue {
                    group: lg,
                    value: c,
                    present: true,
                },
                Rule::CocliqueSearch,
            );
            for &b in &small {
                story.push(
                    Fact::Zeta {
                        group: lg,
                        index: b,
                        value: c,
                    },
                    Rule::CocliqueSearch,
                );
            }
            for &(b, a) in &links {
                story.push(
                    Fact::Partner {
                        group: lg,
                        small: b,
                        large: a,
                    },
                    Rule::PartnerPrimes,
                );
            }
            story.push(
                Fact::Fibre {
                    group: sg,
                    value: c,
                    indices: s.fibre(c).into_iter().collect(),
                },
                Rule::Transfer,
            );
            story.push(
                Fact::Unassignable {
                    target: lg,
                    candidate: sg,
                    k,
                    small: small.clone(),
                    large: large.clone(),
                },
                Rule::Pigeonhole,
            );
            story.witness("k", k);
            story.witness("c", c as u64);
            story.witness("a", small[0]);
            return Ok(true);
        }
    }
    Ok(false)
}

/// `t − a > (2t + 2)/3` for every `1 ≤ a ≤ 6` and `t ≥ 23`, checked up to `limit`.
pub fn two_thirds_gap_holds(limit: usize) -> bool {
    (SCOPE_T..=limit).all(|t| (1..=6).all(|a| exceeds_two_thirds(t, a)))
}
