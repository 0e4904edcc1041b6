//! Golden values and seeded property suites, run by `qdepth selftest`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::beta::{alpha_from_beta, beta_closed, beta_table};
use crate::families::{
    ci_ideal_qdepth, ci_qdepth, ci_symmetry, conjecture_scan, e_falling_factorial, e_rec_n, e_rec_q, e_value,
    qdepth_veronese, veronese::qdepth_veronese_quotient,
};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::parse::parse_ideal;
use crate::polarize::polarize;
use crate::poset::{alpha_by_inclusion_exclusion, alpha_vector, build_poset, Module};
use crate::qdepth::{check_extension_shift, check_regular_sandwich, qdepth, qdepth_module, qdepth_poset};
use crate::random;
use crate::sdepth::{sdepth, sdepth_poset};

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub rows: Vec<CheckRow>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn table(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.rows {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:width$}  {}\n", r.name, r.detail));
        }
        out
    }
}

type Check = fn(u64) -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

fn q_quot(text: &str, n: usize) -> Result<usize, String> {
    Ok(qdepth_module(&parse_ideal(text, n).map_err(s)?, Module::Quotient).map_err(s)?.value)
}

fn q_ideal(text: &str, n: usize) -> Result<usize, String> {
    Ok(qdepth_module(&parse_ideal(text, n).map_err(s)?, Module::Ideal).map_err(s)?.value)
}

fn golden_polarized_example(_: u64) -> Result<String, String> {
    let i = parse_ideal("x1^2, x1*x2^2", 2).map_err(s)?;
    let p = polarize(&i);
    let alpha = alpha_vector(&build_poset(&MonomialIdeal::unit(4).map_err(s)?, &p.polarized).map_err(s)?);
    ensure(alpha.to_string() == "(1,4,5,1,0)", || format!("alpha {alpha}"))?;
    let b2 = beta_table(&alpha, 2).to_strings();
    let b3 = beta_table(&alpha, 3).to_strings();
    ensure(b2 == ["1", "2", "2"], || format!("beta^2 {b2:?}"))?;
    ensure(b3 == ["1", "1", "0", "-1"], || format!("beta^3 {b3:?}"))?;
    let q = qdepth_module(&i, Module::Quotient).map_err(s)?.value;
    ensure(q == 0, || format!("qdepth {q}"))?;
    Ok("alpha (1,4,5,1,0), qdepth 0".into())
}

fn golden_path_and_pentagon(_: u64) -> Result<String, String> {
    let got = [
        q_quot("x1*x2,x2*x3,x3*x4,x4*x5", 6)?,
        q_quot("x1*x2*x6,x2*x3*x6,x3*x4*x6,x4*x5*x6", 6)?,
        q_ideal("x1*x2,x2*x3,x3*x4,x4*x5", 6)?,
        q_ideal("x1*x2*x6,x2*x3*x6,x3*x4*x6,x4*x5*x6", 6)?,
        q_ideal("x1*x2,x2*x3,x3*x4,x4*x5,x5*x1", 6)?,
        q_ideal("x1*x2,x2*x3,x3*x4,x4*x5,x5*x1*x6", 6)?,
    ];
    ensure(got == [3, 4, 5, 5, 5, 4], || format!("{got:?}"))?;
    Ok("3, 4, 5, 5, 5, 4".into())
}

fn cocoa_base() -> Result<MonomialIdeal, String> {
    let mut gens = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5, 6] {
                gens.push(Monomial::from_support(7, &[a, b, c]));
            }
        }
    }
    MonomialIdeal::new(7, gens).map_err(s)
}

fn golden_regular_element(_: u64) -> Result<String, String> {
    let base = cocoa_base()?;
    let top = qdepth_module(&base, Module::Quotient).map_err(s)?.value;
    let big = base.extend(9).map_err(s)?;
    let u = Monomial::from_support(9, &[7, 8]);
    let sw = check_regular_sandwich(&big, &u).map_err(s)?;
    ensure(top == 3 && sw.middle == 5 && sw.upper == 5, || format!("{top}, {sw:?}"))?;
    Ok("qdepth(S'/I') = 3, qdepth(S/(I,u)) = 5".into())
}

fn golden_ci_remark(_: u64) -> Result<String, String> {
    let q = q_ideal("x1,x2,x3,x4,x5*x6,x7*x8", 8)?;
    let closed = ci_ideal_qdepth(8, &[1, 1, 1, 1, 2, 2]).map_err(s)?;
    ensure(q == 6 && closed == 6, || format!("{q}, {closed}"))?;
    Ok("qdepth(I) = 6".into())
}

fn golden_sdepth(_: u64) -> Result<String, String> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let m = parse_ideal(&(1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().join(","), n).map_err(s)?;
        let v = sdepth(&m, &MonomialIdeal::zero(n).map_err(s)?, None).map_err(s)?.value;
        ensure(v == n.div_ceil(2), || format!("sdepth(m) for n = {n}: {v}"))?;
        out.push(v);
    }
    let gen = sdepth(&MonomialIdeal::unit(2).map_err(s)?, &parse_ideal("x1^2, x1*x2^2", 2).map_err(s)?, None)
        .map_err(s)?
        .value;
    ensure(gen == 0, || format!("sdepth of the polarized example {gen}"))?;
    Ok(format!("sdepth(m) = {out:?}"))
}

fn golden_veronese(_: u64) -> Result<String, String> {
    let mut count = 0;
    for n in 1..=12 {
        for m in 1..=n {
            qdepth_veronese_quotient(n, m).map_err(s)?;
            count += 1;
        }
    }
    for m in 1..=6 {
        for n in m..=(m * m + 4 * m + 1).max(7 * m + 5) {
            let r = qdepth_veronese(n, m).map_err(s)?;
            ensure(r.value == r.upper_bound, || format!("({n},{m}): {}", r.value))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn prop_beta_algebra(seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed);
    for _ in 0..500 {
        let n = rand::Rng::gen_range(&mut rng, 0..=10);
        let a = random::alpha(&mut rng, n, 50);
        for d in 0..=n {
            let t = beta_table(&a, d);
            for k in 0..=d {
                ensure(&beta_closed(&a, d, k) == t.get(k), || format!("closed form at {a} d={d} k={k}"))?;
            }
            let back = alpha_from_beta(&t);
            ensure(back.iter().enumerate().all(|(k, x)| *x == a.get(k)), || format!("roundtrip {a} d={d}"))?;
        }
    }
    Ok("500 vectors".into())
}

fn prop_inclusion_exclusion(seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed ^ 1);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let i = random::squarefree_ideal(&mut rng, n, 6);
        let unit = MonomialIdeal::unit(n).map_err(s)?;
        let zero = MonomialIdeal::zero(n).map_err(s)?;
        let q_enum = alpha_vector(&build_poset(&unit, &i).map_err(s)?);
        let i_enum = alpha_vector(&build_poset(&i, &zero).map_err(s)?);
        ensure(alpha_by_inclusion_exclusion(&i, Module::Quotient).map_err(s)? == q_enum, || format!("S/I for {i}"))?;
        ensure(alpha_by_inclusion_exclusion(&i, Module::Ideal).map_err(s)? == i_enum, || format!("I for {i}"))?;
    }
    Ok("200 ideals".into())
}

fn prop_extension_and_sandwich(seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed ^ 2);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=5);
        let (j, i) = random::squarefree_pair(&mut rng, n, 4);
        ensure(check_extension_shift(&j, &i).map_err(s)?, || format!("shift for {j} / {i}"))?;
    }
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=5);
        let i = random::monomial_ideal(&mut rng, n, 4, 2);
        let big = i.extend(n + 1).map_err(s)?;
        check_regular_sandwich(&big, &Monomial::var(n + 1, n)).map_err(s)?;
    }
    Ok("100 + 100 instances".into())
}

fn prop_sdepth_bound(seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed ^ 3);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let i = random::squarefree_ideal(&mut rng, n, 5);
        let unit = MonomialIdeal::unit(n).map_err(s)?;
        let p = build_poset(&unit, &i).map_err(s)?;
        let (sd, w) = sdepth_poset(&p, None).map_err(s)?;
        w.validate(&p).map_err(s)?;
        let qd = qdepth_poset(&p).map_err(s)?.value;
        ensure(sd <= qd, || format!("sdepth {sd} > qdepth {qd} for {i}"))?;
    }
    Ok("300 quotients".into())
}

fn prop_disjoint_union(seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed ^ 4);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let (a, b) = random::disjoint_posets(&mut rng, n);
        let u = a.disjoint_union(&b).map_err(s)?;
        let (qa, qb, qu) = (
            qdepth_poset(&a).map_err(s)?.value,
            qdepth_poset(&b).map_err(s)?.value,
            qdepth_poset(&u).map_err(s)?.value,
        );
        ensure(qu >= qa.min(qb), || format!("{qu} < min({qa}, {qb})"))?;
    }
    Ok("100 pairs".into())
}

fn prop_ci(seed: u64) -> Result<String, String> {
    let mut rng = random::rng(seed ^ 5);
    for _ in 0..200 {
        let (n, degs) = random::complete_intersection(&mut rng, 12);
        let q = ci_qdepth(n, &degs).map_err(s)?;
        ensure(q == n - degs.len(), || format!("qdepth {q} for {degs:?} in {n}"))?;
        let r = ci_symmetry(n, &degs, None).map_err(s)?;
        ensure(r.endpoint_check == BigInt::from(-1), || format!("endpoint for {degs:?}"))?;
    }
    Ok("200 complete intersections".into())
}

fn prop_e_forms(_: u64) -> Result<String, String> {
    let mut cells = 0;
    for m in 1..=4 {
        for q in 1..=8 {
            for t in 1..=q {
                let base = m * q + m + q;
                let ff = e_falling_factorial(m, q, t).map_err(s)?;
                ensure(ff == e_value(m, q, t, base), || format!("falling factorial at ({m},{q},{t})"))?;
                for n in [base, base + 3] {
                    let e = e_value(m, q, t, n);
                    if q > t && t >= 2 {
                        ensure(e_rec_q(m, q, t, n).map_err(s)? == e, || format!("q-rec ({m},{q},{t},{n})"))?;
                    }
                    if m >= 2 {
                        ensure(e_rec_n(m, q, t, n).map_err(s)? == e, || format!("n-rec ({m},{q},{t},{n})"))?;
                    }
                }
                cells += 1;
            }
        }
    }
    let scan = conjecture_scan(6, 12).map_err(s)?;
    let bad = scan.iter().filter(|c| !c.holds).count();
    ensure(bad == 0, || format!("{bad} cells with E < 0"))?;
    Ok(format!("{cells} grid cells, {} scanned", scan.len()))
}

fn golden_general_pairs(_: u64) -> Result<String, String> {
    let s2 = MonomialIdeal::unit(2).map_err(s)?;
    let i = parse_ideal("x1^2, x1*x2^2", 2).map_err(s)?;
    let v = qdepth(&s2, &i).map_err(s)?.value;
    ensure(v == 0, || format!("{v}"))?;
    Ok("qdepth(S/I) = 0".into())
}

const CHECKS: &[(&str, Check)] = &[
    ("golden: polarized example", golden_polarized_example),
    ("golden: general pair", golden_general_pairs),
    ("golden: path and pentagon", golden_path_and_pentagon),
    ("golden: regular element", golden_regular_element),
    ("golden: CI ideal", golden_ci_remark),
    ("golden: sdepth", golden_sdepth),
    ("golden: Veronese", golden_veronese),
    ("property: beta algebra", prop_beta_algebra),
    ("property: inclusion-exclusion", prop_inclusion_exclusion),
    ("property: extension and sandwich", prop_extension_and_sandwich),
    ("property: sdepth <= qdepth", prop_sdepth_bound),
    ("property: disjoint union", prop_disjoint_union),
    ("property: complete intersections", prop_ci),
    ("property: E forms and scan", prop_e_forms),
];

pub fn run(seed: u64) -> SelftestReport {
    let rows = CHECKS
        .iter()
        .map(|&(name, check)| {
            let (passed, detail) = match check(seed) {
                Ok(d) => (true, d),
                Err(e) => (false, e),
            };
            CheckRow { name, passed, detail }
        })
        .collect();
    SelftestReport { seed, rows }
}
