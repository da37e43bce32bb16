//! Loader for the frozen oracle files in `golden/`.

#![allow(dead_code)]

use sphere_forge::polyring::{Polynomial, PolynomialRing};

pub struct Case {
    pub seed: String,
    pub ring: PolynomialRing,
    pub gens: Vec<Polynomial>,
    pub basis: Vec<Polynomial>,
}

pub fn load(text: &str) -> Vec<Case> {
    let mut cases = Vec::new();
    #[allow(clippy::type_complexity)]
    let mut cur: Option<(String, Option<PolynomialRing>, Vec<String>, Vec<String>)> = None;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
        match head {
            "case" => cur = Some((rest.to_string(), None, Vec::new(), Vec::new())),
            "vars" => {
                let names: Vec<&str> = rest.split(',').collect();
                cur.as_mut().unwrap().1 = Some(PolynomialRing::grevlex(&names));
            }
            "gen" => cur.as_mut().unwrap().2.push(rest.to_string()),
            "basis" => cur.as_mut().unwrap().3.push(rest.to_string()),
            "end" => {
                let (seed, ring, gens, basis) = cur.take().unwrap();
                let ring = ring.unwrap();
                let parse = |v: Vec<String>| v.iter().map(|s| ring.parse(s).unwrap()).collect();
                cases.push(Case { seed, gens: parse(gens), basis: parse(basis), ring });
            }
            other => panic!("bad golden line `{other}`"),
        }
    }
    cases
}
