//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopf_frobenius::corpus::{builtin_corpus, group_algebra, sweedler_algebra, CayleyTable, CorpusEntry};
use hopf_frobenius::forms::{
    frobenius_certificate, lattice_basis_hnf, localizations_up_to, theorem2_replay, weak_form_check,
};
use hopf_frobenius::integrals::{find_integral, left_integral_space, nu_tensor};
use hopf_frobenius::wedderburn::{
    centrality_certificate, character_gram, decompose_center, idempotent_from_character, lemma1_equivalence,
};
use hopf_frobenius::{Error, FieldScalar, Matrix, SubringSpec};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(name: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{name}: {e:?}")
}

fn degrees_of(entry: &CorpusEntry) -> Result<Vec<u64>, String> {
    Ok(decompose_center(&entry.algebra)
        .map_err(err(&entry.name))?
        .iter()
        .map(|b| b.degree as u64)
        .collect())
}

// ---------------------------------------------------------------------------
// Oracles

/// Number of conjugacy classes, by direct orbit computation.
fn class_count(g: &CayleyTable) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for a in 0..n {
        if seen[a] {
            continue;
        }
        count += 1;
        for x in 0..n {
            seen[g.mul(g.mul(x, a), g.inverse(x))] = true;
        }
    }
    count
}

/// Order of the commutator subgroup, by closing the set of commutators.
fn commutator_subgroup_order(g: &CayleyTable) -> usize {
    let n = g.order();
    let mut sub: HashSet<usize> = HashSet::new();
    for a in 0..n {
        for b in 0..n {
            sub.insert(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
        }
    }
    loop {
        let cur: Vec<usize> = sub.iter().copied().collect();
        let before = sub.len();
        for &x in &cur {
            for &y in &cur {
                sub.insert(g.mul(x, y));
            }
        }
        if sub.len() == before {
            return before;
        }
    }
}

/// All degree multisets with `|G/G'|` ones, `classes` parts and squares summing
/// to `|G|`; a valid oracle only when exactly one candidate survives.
fn degree_oracle(g: &CayleyTable) -> Vec<Vec<u64>> {
    let n = g.order() as u64;
    let classes = class_count(g) as u64;
    let linear = n / commutator_subgroup_order(g) as u64;
    let mut out = Vec::new();
    fn rec(rest: u64, parts: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for k in (2..=max).rev() {
            if k * k <= rest {
                acc.push(k);
                rec(rest - k * k, parts - 1, k, acc, out);
                acc.pop();
            }
        }
    }
    if linear <= n && classes >= linear {
        let mut acc = Vec::new();
        rec(n - linear, classes - linear, n, &mut acc, &mut out);
    }
    for d in out.iter_mut() {
        d.extend(std::iter::repeat_n(1, linear as usize));
        d.sort_unstable();
    }
    out
}

fn det3(m: &[Vec<i64>]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// The image of the `Z`-span of `rows` in `(Z/d)^3`, by breadth-first closure.
fn span_mod(rows: &[Vec<i64>], d: i64) -> HashSet<[i64; 3]> {
    let gens: Vec<[i64; 3]> = rows
        .iter()
        .map(|r| [r[0].rem_euclid(d), r[1].rem_euclid(d), r[2].rem_euclid(d)])
        .collect();
    let mut seen: HashSet<[i64; 3]> = HashSet::from([[0, 0, 0]]);
    let mut frontier = vec![[0i64, 0, 0]];
    while let Some(v) = frontier.pop() {
        for g in &gens {
            let w = [(v[0] + g[0]) % d, (v[1] + g[1]) % d, (v[2] + g[2]) % d];
            if seen.insert(w) {
                frontier.push(w);
            }
        }
    }
    seen
}

// ---------------------------------------------------------------------------
// Criteria

fn c1_lemma1(corpus: &[CorpusEntry]) -> Check {
    let start = Instant::now();
    let mut blocks = 0;
    for e in corpus {
        let rows = lemma1_equivalence(&e.algebra).map_err(err(&e.name))?;
        for r in &rows {
            ensure(r.matches, || format!("{} block {}: rebuilt idempotent differs", e.name, r.block))?;
        }
        blocks += rows.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} algebras, {blocks} blocks, {:.2?}", corpus.len(), elapsed))
}

fn c2_orthogonality(corpus: &[CorpusEntry]) -> Check {
    for e in corpus {
        let h = &e.algebra;
        let nu = nu_tensor(h, &find_integral(h).map_err(err(&e.name))?).map_err(err(&e.name))?;
        let blocks = decompose_center(h).map_err(err(&e.name))?;
        let gram = character_gram(h, &nu, &blocks);
        ensure(gram == Matrix::identity(blocks.len()), || format!("{}: Gram matrix\n{gram}", e.name))?;
    }
    Ok("Gram matrix is the identity on every algebra".into())
}

fn c3_centrality(corpus: &[CorpusEntry]) -> Check {
    let mut count = 0;
    for e in corpus {
        let h = &e.algebra;
        let nu = nu_tensor(h, &find_integral(h).map_err(err(&e.name))?).map_err(err(&e.name))?;
        for (b, blk) in decompose_center(h).map_err(err(&e.name))?.iter().enumerate() {
            let z = idempotent_from_character(h, &nu, &blk.character);
            let rep = centrality_certificate(h, &z).map_err(err(&e.name))?;
            ensure(rep.passed(), || format!("{} block {b}: {rep:?}", e.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} rebuilt idempotents are ad-invariant and central"))
}

fn c4_structure(corpus: &[CorpusEntry]) -> Check {
    for e in corpus {
        let h = &e.algebra;
        let s = h.antipode_matrix();
        ensure(s * s == Matrix::identity(h.dim()), || format!("{}: S^2 != Id", e.name))?;
        for blk in decompose_center(h).map_err(err(&e.name))? {
            for a in 0..h.dim() {
                for b in 0..h.dim() {
                    let ab = h.multiply(&h.basis(a), &h.basis(b)).map_err(err(&e.name))?;
                    let ba = h.multiply(&h.basis(b), &h.basis(a)).map_err(err(&e.name))?;
                    ensure(blk.character.eval(&ab) == blk.character.eval(&ba), || {
                        format!("{}: chi(x_{a} x_{b}) != chi(x_{b} x_{a})", e.name)
                    })?;
                }
            }
        }
    }
    Ok("S^2 = Id and every character is a trace function".into())
}

fn c5_group_forms(corpus: &[CorpusEntry]) -> Check {
    let mut summary = Vec::new();
    for name in ["S3", "D4", "Q8", "A4"] {
        let e = corpus.iter().find(|e| e.name == name).ok_or("missing corpus entry")?;
        let h = &e.algebra;
        let lambda = find_integral(h).map_err(err(name))?;
        let form = weak_form_check(h, &lambda, &Matrix::identity(h.dim()), &SubringSpec::Integers).map_err(err(name))?;
        ensure(form.passed, || format!("{name}: group basis is not a Z-form\n{form}"))?;
        let mut degrees = degrees_of(e)?;
        let oracle = degree_oracle(&e.group);
        ensure(oracle.len() == 1, || format!("{name}: oracle is ambiguous: {oracle:?}"))?;
        degrees.sort_unstable();
        ensure(degrees == oracle[0], || format!("{name}: degrees {degrees:?}, oracle {:?}", oracle[0]))?;
        let cert = frobenius_certificate(h.dim() as u64, &degrees, &[SubringSpec::Integers]).map_err(err(name))?;
        ensure(cert.overall, || format!("{name}: certificate fails\n{cert}"))?;
        summary.push(format!("{name} {degrees:?}"));
    }
    Ok(summary.join(", "))
}

fn c6_replay(corpus: &[CorpusEntry]) -> Check {
    let s3 = group_algebra(&CayleyTable::symmetric3(), 1).map_err(err("S3"))?;
    let lambda = find_integral(&s3).map_err(err("S3"))?;
    let blocks = decompose_center(&s3).map_err(err("S3"))?;
    let two = blocks.iter().find(|b| b.degree == 2).ok_or("S3 has no 2-dimensional block")?;
    let rep = theorem2_replay(&s3, &lambda, &Matrix::identity(6), two).map_err(err("S3"))?;
    ensure(rep.identity_lhs == Matrix::identity(2).scale(&FieldScalar::from_int(3)), || {
        format!("S3: left side\n{}", rep.identity_lhs)
    })?;
    let mut replays = 1;
    for e in corpus {
        let h = &e.algebra;
        let lambda = find_integral(h).map_err(err(&e.name))?;
        let id = Matrix::identity(h.dim());
        for blk in decompose_center(h).map_err(err(&e.name))?.iter().filter(|b| b.degree == 1) {
            let rep = theorem2_replay(h, &lambda, &id, blk).map_err(err(&e.name))?;
            let n = FieldScalar::from_int(h.dim() as i64);
            ensure(rep.identity_lhs == Matrix::identity(1).scale(&n), || format!("{}: left side", e.name))?;
            replays += 1;
        }
    }
    Ok(format!("3 Id_2 reproduced for S3; {replays} replays in total"))
}

fn c7_local_global(corpus: &[CorpusEntry]) -> Check {
    let mut checked = 0;
    for e in corpus {
        let n = e.algebra.dim() as u64;
        for k in degrees_of(e)? {
            let global = frobenius_certificate(n, &[k], &[SubringSpec::Integers]).map_err(err(&e.name))?;
            let local = frobenius_certificate(n, &[k], &localizations_up_to(n)).map_err(err(&e.name))?;
            ensure(global.overall == local.overall, || format!("{}: verdicts differ for {n}/{k}", e.name))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} quotients, local conjunction equals global verdict"))
}

fn c8_negative_controls() -> Check {
    let c2 = group_algebra(&CayleyTable::cyclic(2), 1).map_err(err("C2"))?;
    let lambda = find_integral(&c2).map_err(err("C2"))?;
    let mut b = Matrix::identity(2);
    b[(1, 1)] = FieldScalar::from_ratio(1, 3);
    let verdict = |r: SubringSpec| weak_form_check(&c2, &lambda, &b, &r).map(|f| f.passed).map_err(err("C2"));
    ensure(!verdict(SubringSpec::Integers)?, || "g/3 basis passes over Z".into())?;
    ensure(!verdict(SubringSpec::LocalizedAt(3))?, || "g/3 basis passes over Z_(3)".into())?;
    ensure(verdict(SubringSpec::LocalizedAt(2))?, || "g/3 basis fails over Z_(2)".into())?;
    let cert = frobenius_certificate(12, &[5], &[SubringSpec::Integers]).map_err(err("(12,5)"))?;
    ensure(!cert.overall, || "12/5 accepted".into())?;
    Ok("g/3 rejected by Z and Z_(3), accepted by Z_(2); 12/5 rejected".into())
}

fn c9_integrals(corpus: &[CorpusEntry]) -> Check {
    for e in corpus {
        let h = &e.algebra;
        let dim = left_integral_space(h).len();
        ensure(dim == 1, || format!("{}: integral space has dimension {dim}", e.name))?;
        let lambda = find_integral(h).map_err(err(&e.name))?;
        let eps = h.counit_apply(&lambda).map_err(err(&e.name))?;
        ensure(eps == FieldScalar::from_int(h.dim() as i64), || format!("{}: eps(Lambda) = {eps}", e.name))?;
    }
    match find_integral(&sweedler_algebra()) {
        Err(Error::NotSemisimple) => Ok("unique normalized integrals; Sweedler algebra is NotSemisimple".into()),
        other => Err(format!("Sweedler algebra: {other:?}")),
    }
}

fn c10_hnf() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut full, mut deficient) = (0, 0);
    for trial in 0..100 {
        let g: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let big: Vec<Vec<BigInt>> = g.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let d = det3(&g).abs();
        let hnf = lattice_basis_hnf(big);
        if d == 0 {
            ensure(matches!(hnf, Err(Error::RankDeficient { .. })), || format!("trial {trial}: {g:?} accepted"))?;
            deficient += 1;
            continue;
        }
        let hnf = hnf.map_err(|e| format!("trial {trial}: {g:?}: {e}"))?;
        let hm: Vec<Vec<i64>> = hnf
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().expect("small")).collect())
            .collect();
        // shape: upper triangular, positive pivots, reduced entries above pivots
        for i in 0..3 {
            ensure(hm[i][i] > 0, || format!("trial {trial}: pivot {i} of {hm:?}"))?;
            for j in 0..i {
                ensure(hm[i][j] == 0, || format!("trial {trial}: {hm:?} not triangular"))?;
                ensure((0..hm[i][i]).contains(&hm[j][i]), || format!("trial {trial}: {hm:?} not reduced"))?;
            }
        }
        // both lattices contain d Z^3, so equal images mod d and equal index mean equal lattices
        ensure(det3(&hm) == d, || format!("trial {trial}: det {} vs {d}", det3(&hm)))?;
        ensure(span_mod(&g, d) == span_mod(&hm, d), || format!("trial {trial}: {g:?} vs {hm:?}"))?;
        full += 1;
    }
    Ok(format!("{full} full-rank sets match the oracle, {deficient} rank-deficient sets rejected"))
}

fn main() -> ExitCode {
    let corpus = builtin_corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("1 idempotents rebuilt from characters", Box::new(|| c1_lemma1(&corpus))),
        ("2 character orthogonality", Box::new(|| c2_orthogonality(&corpus))),
        ("3 centrality of rebuilt idempotents", Box::new(|| c3_centrality(&corpus))),
        ("4 involutive antipode and trace property", Box::new(|| c4_structure(&corpus))),
        ("5 group-basis Z-forms and degree certificates", Box::new(|| c5_group_forms(&corpus))),
        ("6 divisibility replay over Z", Box::new(|| c6_replay(&corpus))),
        ("7 local verdicts agree with Z", Box::new(|| c7_local_global(&corpus))),
        ("8 negative controls", Box::new(c8_negative_controls)),
        ("9 integrals and non-semisimple input", Box::new(|| c9_integrals(&corpus))),
        ("10 HNF against brute-force oracle", Box::new(c10_hnf)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
