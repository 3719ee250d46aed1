//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use facta::factor::{
    brute_check_hf, brute_check_ohf, factorizations, hf_witness, is_hf, is_ohf, length_set,
    ohf_witness,
};
use facta::oracle::{brute_force_irreducible_fpm, decide_irreducible_in_fm, decide_irreducible_in_zm};
use facta::ring::{
    content, eisenstein_check, eisenstein_search, frobenius_root, is_primitive, EisensteinOutcome,
    FrobeniusOutcome,
};
use facta::{CoeffRing, OracleConfig, PolyExpr, PuiseuxMonoid, Rat, Verdict};
use facta_cli::{classify_algebra, parse_poly};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn members(m: &PuiseuxMonoid, bound: Rat) -> Vec<Rat> {
    let mut v = vec![Rat::zero()];
    v.extend(m.elements_up_to(&bound).unwrap());
    v
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: CoeffRing,
    m: &PuiseuxMonoid,
    exps: &[Rat],
    max_terms: usize,
    c: i64,
) -> PolyExpr {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<(Rat, BigRational)> = (0..k)
        .map(|_| {
            let e = exps.choose(rng).unwrap().clone();
            (e, BigRational::from_integer(rng.gen_range(-c..=c).into()))
        })
        .collect();
    PolyExpr::new(ring, m.clone(), terms).unwrap()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let monoids: Vec<PuiseuxMonoid> = ["grid:6", "gen:1/2,2/3"].iter().map(|s| s.parse().unwrap()).collect();
    let mut done = 0;
    while done < 1000 {
        let m = &monoids[done % 2];
        let exps = members(m, Rat::integer(4u32));
        let f = random_poly(&mut rng, CoeffRing::Int, m, &exps, 6, 50);
        let g = random_poly(&mut rng, CoeffRing::Int, m, &exps, 6, 50);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let lhs = content(&f.mul(&g).unwrap()).unwrap();
        let rhs = content(&f).unwrap() * content(&g).unwrap();
        ensure(lhs == rhs, || format!("c(fg) = {lhs} but c(f)c(g) = {rhs} for f = {f}, g = {g}"))?;
        done += 1;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{done} pairs, {:.2?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let (mut samples, mut irreducible) = (0, 0);
    while samples < 10_000 {
        let l = rng.gen_range(1..=3u64);
        let m = PuiseuxMonoid::grid(l).unwrap();
        let deg = rng.gen_range(1..=5u64);
        let terms: Vec<(Rat, BigRational)> = (0..=deg)
            .map(|k| (Rat::ratio(k, l), BigRational::from_integer(rng.gen_range(-3..=3).into())))
            .collect();
        let f = PolyExpr::new(CoeffRing::Int, m, terms).unwrap();
        if f.is_constant() {
            continue;
        }
        let zm = decide_irreducible_in_zm(&f, &cfg).map_err(|e| format!("{f}: {e}"))?;
        let fm = decide_irreducible_in_fm(&f.over_ring(CoeffRing::Rational).unwrap(), &cfg)
            .map_err(|e| format!("{f}: {e}"))?;
        let rhs = is_primitive(&f).unwrap() && fm.is_irreducible();
        ensure(zm.is_irreducible() == rhs, || format!("disagreement on {f}: {zm:?} vs {fm:?}"))?;
        irreducible += usize::from(rhs);
        samples += 1;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{samples} samples, {irreducible} irreducible, 0 disagreements, {:.2?}", start.elapsed()))
}

fn criterion_3() -> Check {
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let monoids: Vec<PuiseuxMonoid> = ["grid:1", "grid:2", "grid:3", "grid:4", "grid:6", "gen:2,3", "gen:1/2,2/3", "gen:3,4,5", "gen:1/2,3/4"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let primes = [2i64, 3, 5, 7, 11, 13];
    let mut certified = 0;
    while certified < 250 {
        let m = monoids.choose(&mut rng).unwrap();
        let l = m.denominator_lcm().unwrap();
        let l = u64::try_from(&l).unwrap();
        let exps: Vec<Rat> = members(m, Rat::ratio(6, l)).into_iter().skip(1).collect();
        let p = *primes.choose(&mut rng).unwrap();
        let top = exps.choose(&mut rng).unwrap().clone();
        let unit = |rng: &mut ChaCha8Rng| loop {
            let u = rng.gen_range(-4..=4i64);
            if u % p != 0 {
                return u;
            }
        };
        let mut terms = vec![
            (top.clone(), BigRational::from_integer(unit(&mut rng).into())),
            (Rat::zero(), BigRational::from_integer((p * unit(&mut rng)).into())),
        ];
        for e in exps.iter().filter(|e| **e < top) {
            if rng.gen_bool(0.5) {
                let c = p * rng.gen_range(-3..=3i64);
                terms.push((e.clone(), BigRational::from_integer(c.into())));
            }
        }
        let f = PolyExpr::new(CoeffRing::Int, m.clone(), terms).unwrap();
        if !is_primitive(&f).unwrap() {
            continue;
        }
        let cert = match eisenstein_check(&f, p as u64).unwrap() {
            EisensteinOutcome::Certified(c) => c,
            EisensteinOutcome::Inapplicable(why) => return Err(format!("{f} at p={p}: {why}")),
        };
        ensure(cert.holds_for(&f), || format!("certificate p={p} does not hold for {f}"))?;
        let v = decide_irreducible_in_zm(&f, &cfg).map_err(|e| format!("{f}: {e}"))?;
        ensure(v.is_irreducible(), || format!("violation: {f} certified at p={p} but oracle says {v:?}"))?;
        certified += 1;
    }
    Ok(format!("{certified} certified expressions, 0 violations"))
}

fn criterion_4() -> Check {
    let cfg = OracleConfig::default().with_degree_bound(32);
    let monoids = ["grid:6", "gen:1/2,2/3", "gen:2,3", "gen:3,5,7", "gen:1/2,3/4,5/6"];
    let mut checked = 0;
    for s in monoids {
        let m: PuiseuxMonoid = s.parse().unwrap();
        let sample: Vec<Rat> = m.elements_up_to(&Rat::integer(40u32)).unwrap().into_iter().take(20).collect();
        ensure(sample.len() == 20, || format!("{s}: only {} elements", sample.len()))?;
        for q in &sample {
            for p in [2i64, 3, 5] {
                let f = PolyExpr::from_ints(CoeffRing::Int, m.clone(), [(q.clone(), 1), (Rat::zero(), p)]).unwrap();
                match eisenstein_search(&f, 100).unwrap() {
                    EisensteinOutcome::Certified(c) if c.prime == p as u64 => {}
                    other => return Err(format!("{f} in {s}: {other:?}")),
                }
                let v = decide_irreducible_in_zm(&f, &cfg).map_err(|e| format!("{f} in {s}: {e}"))?;
                ensure(v.is_irreducible(), || format!("{f} in {s}: oracle says {v:?}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} expressions X^q + p certified and oracle-irreducible"))
}

fn criterion_5() -> Check {
    let f2 = CoeffRing::prime_field(2).unwrap();
    let ppow = PuiseuxMonoid::p_power(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut roots = 0;
    while roots < 100 {
        let k = rng.gen_range(1..=5);
        let terms: Vec<(Rat, i64)> = (0..k).map(|_| (Rat::ratio(rng.gen_range(0..48), 16), 1)).collect();
        let f = PolyExpr::from_ints(f2, ppow.clone(), terms).unwrap();
        if f.is_constant() {
            continue;
        }
        match frobenius_root(&f).unwrap() {
            FrobeniusOutcome::Root(g) => {
                ensure(g.mul(&g).unwrap() == f, || format!("root {g} squared is not {f}"))?
            }
            FrobeniusOutcome::Inapplicable(why) => return Err(format!("{f}: {why}")),
        }
        roots += 1;
    }

    let cfg = OracleConfig::default();
    let trunc: PuiseuxMonoid = "gen:1/16,1/8,1/4,1/2,1".parse().unwrap();
    let mut split = 0;
    while split < 60 {
        let k = rng.gen_range(1..=4);
        // exponents k/8 halve to k/16, still in the truncation
        let terms: Vec<(Rat, i64)> = (0..k).map(|_| (Rat::ratio(rng.gen_range(0..=12), 8), 1)).collect();
        let f = PolyExpr::from_ints(f2, trunc.clone(), terms).unwrap();
        if f.is_constant() {
            continue;
        }
        match brute_force_irreducible_fpm(&f, &cfg).map_err(|e| format!("{f}: {e}"))? {
            Verdict::Reducible { left, right } => {
                ensure(!left.is_constant() && !right.is_constant(), || format!("{f}: trivial split"))?;
                ensure(left.mul(&right).unwrap() == f, || format!("{f}: split does not multiply back"))?;
            }
            v => return Err(format!("{f} in {trunc}: brute force says {v:?}")),
        }
        split += 1;
    }
    Ok(format!("{roots} Frobenius roots verified, {split} truncation splits found"))
}

fn random_fingen(rng: &mut ChaCha8Rng) -> PuiseuxMonoid {
    loop {
        let k = rng.gen_range(1..=4);
        let gens: Vec<Rat> = (0..k)
            .map(|_| Rat::ratio(rng.gen_range(1..=9), [1, 2, 3, 4][rng.gen_range(0..4)]))
            .collect();
        if let Ok(m) = PuiseuxMonoid::generated_by(gens) {
            return m;
        }
    }
}

// Three times the largest witness element scaled by the atom count, at least
// three times the largest atom.
fn brute_bound(m: &PuiseuxMonoid) -> Rat {
    let atoms = m.atoms();
    let mut b = atoms.last().unwrap().clone();
    if atoms.len() >= 2 {
        b = b.max(hf_witness(m).unwrap().element);
    }
    if atoms.len() >= 3 {
        b = b.max(ohf_witness(m).unwrap().element);
    }
    b.scale(&BigUint::from(3u32))
}

fn fingen_corpus() -> Vec<PuiseuxMonoid> {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut corpus: Vec<PuiseuxMonoid> = (0..50).map(|_| random_fingen(&mut rng)).collect();
    corpus[0] = "gen:5".parse().unwrap();
    corpus
}

fn criterion_6() -> Check {
    let mut multi = 0;
    for m in fingen_corpus() {
        let bound = brute_bound(&m);
        let fast = is_hf(&m).unwrap();
        let brute = brute_check_hf(&m, &bound).map_err(|e| format!("{m}: {e}"))?;
        ensure(fast == brute, || format!("{m}: is_hf {fast}, brute force to {bound} {brute}"))?;
        if m.atoms().len() >= 2 {
            let w = hf_witness(&m).unwrap();
            let ok = w.z1.value() == w.element
                && w.z2.value() == w.element
                && w.z1.length() != w.z2.length();
            ensure(ok, || format!("{m}: bad HF witness {w:?}"))?;
            multi += 1;
        }
    }
    Ok(format!("50 monoids agree, {multi} multi-atom witnesses valid"))
}

fn criterion_7() -> Check {
    let mut three = 0;
    for m in fingen_corpus() {
        let bound = brute_bound(&m);
        let fast = is_ohf(&m).unwrap();
        let brute = brute_check_ohf(&m, &bound).map_err(|e| format!("{m}: {e}"))?;
        ensure(fast == brute, || format!("{m}: is_ohf {fast}, brute force to {bound} {brute}"))?;
        if m.atoms().len() >= 3 {
            let w = ohf_witness(&m).unwrap();
            ensure(w.validate(), || format!("{m}: invalid witness {w:?}"))?;
            three += 1;
        }
    }
    for (s, x) in [("gen:3,5,7", Rat::integer(10u32)), ("gen:1/2,2/3,3/4", Rat::integer(2u32))] {
        let m: PuiseuxMonoid = s.parse().unwrap();
        let w = ohf_witness(&m).unwrap();
        ensure(w.validate() && w.element == x, || format!("{s}: witness {w:?}, expected element {x}"))?;
    }
    Ok(format!("50 monoids agree, {three} witnesses valid, worked instances reproduced"))
}

fn criterion_8() -> Check {
    let mut expect: Vec<(String, bool)> = vec![("gen:1".into(), true), ("gen:2,4".into(), true)];
    expect.extend((1..=6).map(|k| (format!("grid:{k}"), true)));
    expect.push(("gen:2,3".into(), false));
    expect.push(("gen:3,5,7".into(), false));
    for (s, want) in &expect {
        for field in [CoeffRing::Rational, CoeffRing::prime_field(2).unwrap(), CoeffRing::prime_field(13).unwrap()] {
            let r = classify_algebra(&s.parse().unwrap(), field);
            let flags: Vec<bool> = r.flags().iter().map(|(_, b)| *b).collect();
            ensure(flags.iter().all(|b| b == want), || format!("{s} over {field}: {flags:?}"))?;
        }
    }
    Ok(format!("{} monoids over 3 fields classified", expect.len()))
}

// Independent count: recursion over atoms directly in ℚ, no normalization.
fn naive_factorizations(atoms: &[Rat], x: &Rat) -> Vec<u64> {
    fn go(atoms: &[Rat], x: &Rat, len: u64, out: &mut Vec<u64>) {
        if x.is_zero() {
            out.push(len);
            return;
        }
        let Some((a, rest)) = atoms.split_first() else {
            return;
        };
        let mut left = x.clone();
        let mut used = 0;
        loop {
            go(rest, &left, len + used, out);
            match left.checked_sub(a) {
                Ok(r) => {
                    left = r;
                    used += 1;
                }
                Err(_) => break,
            }
        }
    }
    let mut out = Vec::new();
    go(atoms, x, 0, &mut out);
    out
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let m: PuiseuxMonoid = "gen:2,3".parse().unwrap();
    let zs = factorizations(&m, &Rat::integer(12u32)).unwrap();
    let ls = length_set(&m, &Rat::integer(12u32)).unwrap();
    ensure(zs.len() == 3 && ls == vec![4, 5, 6], || format!("Z(12) = {zs:?}, L = {ls:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let mut pairs = 0;
    while pairs < 100 {
        let m = random_fingen(&mut rng);
        let (_, map) = m.normalize().unwrap();
        let n = rng.gen_range(1..=60u64);
        let x = map.from_semigroup(&BigUint::from(n));
        if !m.member(&x) {
            continue;
        }
        let naive = naive_factorizations(&m.atoms(), &x);
        let zs = factorizations(&m, &x).unwrap();
        let ls = length_set(&m, &x).unwrap();
        let naive_ls: Vec<u64> = naive.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        ensure(zs.len() == naive.len(), || format!("{m}, {x}: {} vs naive {}", zs.len(), naive.len()))?;
        ensure(ls == naive_ls, || format!("{m}, {x}: lengths {ls:?} vs naive {naive_ls:?}"))?;
        pairs += 1;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("Z(12) in <2,3> reproduced, {pairs} random pairs agree, {:.2?}", start.elapsed()))
}

fn facta(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_facta"))
        .args(args)
        .env_remove("FACTA_ORACLE_DEGREE_BOUND")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn criterion_10() -> Check {
    let golden: [(&[&str], &str, &str); 3] = [
        (
            &["fact-lengths", "--monoid", "gen:2,3", "--element", "12"],
            "4 5 6\n",
            "{\"command\":\"fact-lengths\",\"inputs\":{\"element\":\"12\",\"monoid\":\"gen:2,3\"},\"result\":[4,5,6]}\n",
        ),
        (
            &["ring-eisenstein", "--ring", "int", "--monoid", "grid:6", "--poly", "X^(5/6)+2", "--prime", "2"],
            "certificate: p=2 (irreducible)\n",
            "{\"certificate\":{\"kind\":\"eisenstein\",\"prime\":2},\"command\":\"ring-eisenstein\",\"inputs\":{\"monoid\":\"grid:6\",\"poly\":[\"X^(5/6)+2\"],\"prime\":2,\"ring\":\"int\"},\"result\":\"irreducible\"}\n",
        ),
        (
            &["ring-frobenius-root", "--ring", "fp:2", "--monoid", "ppow:2", "--poly", "X^(1/2)+1"],
            "X^(1/4)+1\n",
            "{\"command\":\"ring-frobenius-root\",\"inputs\":{\"monoid\":\"ppow:2\",\"poly\":[\"X^(1/2)+1\"],\"ring\":\"fp:2\"},\"result\":\"X^(1/4)+1\",\"witness\":{\"power\":2,\"root\":\"X^(1/4)+1\"}}\n",
        ),
    ];
    for (args, text, json) in golden {
        let got = facta(args);
        ensure(got == (0, text.to_string()), || format!("{args:?}: {got:?}"))?;
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let got = facta(&with_json);
        ensure(got == (0, json.to_string()), || format!("{args:?} --json: {got:?}"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let monoids: Vec<PuiseuxMonoid> = ["grid:6", "gen:1/2,2/3", "gen:2,3", "ppow:2", "ppow:3", "gen:3/4,5"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for i in 0..200 {
        let m = monoids.choose(&mut rng).unwrap();
        let ring = [CoeffRing::Int, CoeffRing::Rational, CoeffRing::prime_field(3).unwrap()][i % 3];
        let exps: Vec<Rat> = match m.denominator_lcm() {
            Some(_) => members(m, Rat::integer(5u32)),
            None => {
                let p = m.to_string()[5..].parse::<u64>().unwrap();
                (0..40).map(|k| Rat::ratio(k, p.pow(rng.gen_range(0..4)))).collect()
            }
        };
        let terms: Vec<(Rat, BigRational)> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let n = BigInt::from(rng.gen_range(-40..=40));
                let d = if ring == CoeffRing::Int { 1 } else { [1, 2, 4, 5][rng.gen_range(0..4)] };
                let c = BigRational::new(n, BigInt::from(d));
                (exps.choose(&mut rng).unwrap().clone(), c)
            })
            .collect();
        let f = PolyExpr::new(ring, m.clone(), terms).unwrap();
        let text = f.to_string();
        let back = parse_poly(&text, ring, m).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == f && back.to_string() == text, || format!("round trip of {text} gave {back}"))?;
    }
    Ok("3 golden transcripts byte-identical, 200 expressions round-trip".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("content identity", criterion_1),
        ("Gauss equivalence", criterion_2),
        ("Eisenstein soundness", criterion_3),
        ("X^q + p irreducible", criterion_4),
        ("antimatter over F_2", criterion_5),
        ("HF characterization", criterion_6),
        ("OHF characterization", criterion_7),
        ("classification", criterion_8),
        ("factorization ground truth", criterion_9),
        ("CLI golden transcripts", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
