//! Second implementation of the certificate rules over the JSON wire format;
//! words are token lists and nothing is shared with the library's checker.

use serde_json::Value;

type Word = Vec<String>;

fn word(s: &str) -> Word {
    if s == "1" { vec![] } else { s.split(' ').map(str::to_string).collect() }
}

fn inv_letter(l: &str) -> String {
    if l == l.to_lowercase() { l.to_uppercase() } else { l.to_lowercase() }
}

fn inverse(w: &[String]) -> Word { w.iter().rev().map(|l| inv_letter(l)).collect() }

fn reduce(w: &[String]) -> Word {
    let mut out: Word = vec![];
    for l in w {
        if out.last().is_some_and(|x| *x == inv_letter(l)) { out.pop(); } else { out.push(l.clone()); }
    }
    out
}

fn cyclic(w: &[String]) -> Word {
    let mut w = reduce(w);
    while w.len() > 1 && w[0] == inv_letter(&w[w.len() - 1]) { w = w[1..w.len() - 1].to_vec(); }
    w
}

fn is_rotation(a: &[String], b: &[String]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|s| a[s..].iter().chain(&a[..s]).eq(b.iter())))
}

fn cat(a: &[String], b: &[String]) -> Word { a.iter().chain(b).cloned().collect() }

fn combine(r: &str, s: &str) -> String {
    if r == ">" || s == ">" { ">".into() } else if r == "=" && s == "=" { "=".into() } else { ">=".into() }
}

type Fact = (Word, String, Word);

/// Returns the index of the first step whose rule predicate fails, if any.
pub fn check(cert: &Value, relator: &str) -> Result<(), usize> {
    let r = word(relator);
    let mut facts: Vec<Fact> = vec![];
    let steps = cert["steps"].as_array().ok_or(0usize)?;
    for (i, st) in steps.iter().enumerate() {
        let f = &st["fact"];
        let claim: Fact = (word(f["lhs"].as_str().ok_or(i)?), f["rel"].as_str().ok_or(i)?.into(), word(f["rhs"].as_str().ok_or(i)?));
        let ins: Vec<&Fact> = st["inputs"].as_array().ok_or(i)?.iter()
            .map(|x| x.as_u64().and_then(|j| facts.get(j as usize)).ok_or(i)).collect::<Result<_, _>>()?;
        let hyp: Fact = (vec!["a".into()], ">".into(), vec![]);
        let pos = st["position"].as_u64().map(|p| p as usize);
        let arity = |n: usize| if ins.len() == n { Ok(()) } else { Err(i) };
        let ok = match st["rule"].as_str().ok_or(i)? {
            "hypothesis" => { arity(0)?; claim == hyp }
            "relator_equality" => {
                arity(0)?;
                let c = cyclic(&cat(&claim.0, &inverse(&claim.2)));
                claim.1 == "=" && (is_rotation(&c, &r) || is_rotation(&c, &inverse(&r)))
            }
            "reflexive" => { arity(0)?; claim.1 == "=" && claim.0 == claim.2 }
            "delete_alpha" | "insert_alpha_inverse" => {
                arity(2)?;
                let (p, mut rhs) = (pos.ok_or(i)?, ins[0].2.clone());
                let edit_ok = if st["rule"] == "delete_alpha" {
                    p < rhs.len() && rhs.remove(p) == "a"
                } else {
                    p <= rhs.len() && { rhs.insert(p, "A".into()); true }
                };
                *ins[1] == hyp && edit_ok && claim == (ins[0].0.clone(), ">".into(), rhs)
            }
            "compose" => {
                arity(2)?;
                claim == (cat(&ins[0].0, &ins[1].0), combine(&ins[0].1, &ins[1].1), cat(&ins[0].2, &ins[1].2))
            }
            "prepend_word" => {
                arity(1)?;
                let g = word(st["word"].as_str().ok_or(i)?);
                claim == (cat(&g, &ins[0].0), ins[0].1.clone(), cat(&g, &ins[0].2))
            }
            "free_reduce" => {
                arity(1)?;
                claim.1 == ins[0].1 && reduce(&claim.0) == reduce(&ins[0].0) && reduce(&claim.2) == reduce(&ins[0].2)
            }
            "chain" => { arity(2)?; ins[0].2 == ins[1].0 && claim == (ins[0].0.clone(), combine(&ins[0].1, &ins[1].1), ins[1].2.clone()) }
            "weaken" => { arity(1)?; claim == (ins[0].0.clone(), ">=".into(), ins[0].2.clone()) }
            _ => false,
        };
        if !ok { return Err(i); }
        facts.push(claim);
    }
    let c = &cert["conclusion"];
    let concl: Fact = (word(c["lhs"].as_str().unwrap_or("")), c["rel"].as_str().unwrap_or("").into(), word(c["rhs"].as_str().unwrap_or("")));
    if facts.last() == Some(&concl) { Ok(()) } else { Err(steps.len()) }
}
