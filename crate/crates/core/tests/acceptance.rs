//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Expected values are written out here
//! independently of the library's own expectation tables.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use filiform_coh::closed_form;
use filiform_coh::cochain::{d1, d1_matrix, d2, d2_matrix, pair_count, pairs, Cochain1, Cochain2};
use filiform_coh::cohomology::{d1_star_kernel_matrix, h1, h1_star, h2, h2_star};
use filiform_coh::extension::{extend_ordinary, extend_restricted, is_trivial_ordinary_extension};
use filiform_coh::iso::{all_lambdas, iso_bruteforce, proposition_formula_check, transform_lambda};
use filiform_coh::linalg::{reduced_span, Gf, Matrix};
use filiform_coh::restricted_cochain::{
    admissible_basis, d1_star, d2_star, doublestar_property_holds_with, ind1_eval, ind2_eval, star_correction,
    star_correction_naive, star_property_holds_with, RestrictedTwoCochain,
};
use filiform_coh::verify::{one_hot, random_nonzero_lambda};
use filiform_coh::{Element, LieAlgebra, RestrictedAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gf(p: u32) -> Gf {
    Gf::new(p).unwrap()
}

/// λ = 0, every one-hot vector and five seeded random nonzero vectors.
fn lambda_set(p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; p as usize]];
    out.extend((0..p as usize).map(|k| one_hot(p, k)));
    let mut rng = ChaCha8Rng::seed_from_u64(1000 + p as u64);
    out.extend((0..5).map(|_| random_nonzero_lambda(p, &mut rng)));
    out
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dimension_table() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for p in PRIMES {
        let pu = p as usize;
        let a = LieAlgebra::m0(p).unwrap();
        let h1_dim = h1(&a).dim;
        let h2_dim = h2(&a).dim;
        let want_h2 = if p == 2 { 1 } else { pu.div_ceil(2) };
        check(h1_dim == 2, || format!("p={p}: H1 = {h1_dim}"))?;
        check(h2_dim == want_h2, || format!("p={p}: H2 = {h2_dim}, want {want_h2}"))?;
        for l in lambda_set(p) {
            let r = RestrictedAlgebra::m0_lambda(p, &l).unwrap();
            let zero = l.iter().all(|&x| x == 0);
            let want = match (p, zero) {
                (2, true) => 3,
                (2, false) => 1,
                (_, true) => (3 * pu).div_ceil(2),
                (_, false) => (3 * pu - 3) / 2,
            };
            let got = h2_star(&r).dim;
            check(got == want, || format!("p={p} λ={l:?}: H2* = {got}, want {want}"))?;
            cases += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs < 5.0, || format!("took {secs:.2}s"))?;
    Ok(format!("{cases} (p, λ) cases, {secs:.2}s"))
}

fn golden_p7() -> Outcome {
    let f = gf(7);
    let a = LieAlgebra::m0(7).unwrap();
    let t = |terms: &[(usize, usize, i64)]| Cochain2::from_terms(f, 7, terms).unwrap().coords().to_vec();
    let nine = vec![
        t(&[(1, 2, 1)]),
        t(&[(1, 3, 1)]),
        t(&[(1, 4, 1)]),
        t(&[(1, 5, 1)]),
        t(&[(1, 6, 1)]),
        t(&[(1, 7, 1)]),
        t(&[(2, 3, 1)]),
        t(&[(2, 5, 1), (3, 4, -1)]),
        t(&[(2, 7, 1), (3, 6, -1), (4, 5, 1)]),
    ];
    let np = pair_count(7);
    let kernel = d2_matrix(&a).kernel_basis();
    check(kernel.len() == 9, || format!("ker d2 has dimension {}", kernel.len()))?;
    check(reduced_span(f, np, &kernel) == reduced_span(f, np, &nine), || "ker d2 differs".into())?;
    let reps = h2(&a).representative_coords;
    let four = vec![nine[5].clone(), nine[6].clone(), nine[7].clone(), nine[8].clone()];
    check(reps == four, || format!("H2 representatives {:?}", h2(&a).representatives))?;
    Ok("ker d2 = span of the 9 listed cocycles; H2 representatives identical".into())
}

fn h1_equals_h1_star() -> Outcome {
    let mut cases = 0;
    for p in [3u32, 5, 7, 11, 13] {
        let n = p as usize;
        let a = LieAlgebra::m0(p).unwrap();
        let ordinary = reduced_span(gf(p), n, &d1_matrix(&a).kernel_basis());
        for l in lambda_set(p) {
            let r = RestrictedAlgebra::m0_lambda(p, &l).unwrap();
            let restricted = reduced_span(gf(p), n, &d1_star_kernel_matrix(&r).kernel_basis());
            check(restricted == ordinary, || format!("p={p} λ={l:?}"))?;
            check(h1_star(&r).representatives == ["e^1", "e^2"], || format!("p={p} λ={l:?} labels"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (p, λ) cases"))
}

fn splitting_identity() -> Outcome {
    let mut dims = Vec::new();
    for p in PRIMES {
        let a = LieAlgebra::m0(p).unwrap();
        let r = RestrictedAlgebra::m0_lambda(p, &vec![0; p as usize]).unwrap();
        let (h2d, h2s) = (h2(&a).dim, h2_star(&r).dim);
        check(h2s == p as usize + h2d, || format!("p={p}: {h2s} ≠ {p} + {h2d}"))?;
        dims.push(format!("{h2s}={p}+{h2d}"));
    }
    Ok(dims.join(", "))
}

fn oracle_equivalences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut dp_cases = 0;
    for p in PRIMES {
        let f = gf(p);
        let n = p as usize;
        let a = LieAlgebra::m0(p).unwrap();

        let cf1: Vec<Vec<u32>> = (1..=n).map(|k| closed_form::d1_basis(f, n, k).coords().to_vec()).collect();
        check(d1_matrix(&a) == Matrix::from_columns(f, pair_count(n), &cf1), || format!("p={p}: d1"))?;
        let cf2: Vec<Vec<u32>> = pairs(n)
            .into_iter()
            .map(|(i, j)| closed_form::d2_basis(f, n, i + 1, j + 1).coords().to_vec())
            .collect();
        let t = d2_matrix(&a).rows();
        check(d2_matrix(&a) == Matrix::from_columns(f, t, &cf2), || format!("p={p}: d2"))?;

        let r = RestrictedAlgebra::m0_lambda(p, &random_nonzero_lambda(p, &mut rng)).unwrap();
        for _ in 0..100 {
            let g = Element::random(f, n, &mut rng);
            check(r.p_power_jacobson(&g) == r.p_power_closed(&g).unwrap(), || format!("p={p}: p-power"))?;
        }

        for l in lambda_set(p) {
            let r = RestrictedAlgebra::m0_lambda(p, &l).unwrap();
            for _ in 0..100 {
                let phi = Cochain2::from_coords(f, n, Element::random(f, pair_count(n), &mut rng).0).unwrap();
                let g = Element::random(f, n, &mut rng);
                let h = Element::random(f, n, &mut rng);
                let generic = ind2_eval(&r, &phi, &g, &h);
                check(generic == closed_form::ind2(f, &l, &phi, &g, &h), || format!("p={p} λ={l:?}: ind2"))?;
            }
        }

        let samples = if p >= 11 { 10 } else { 50 };
        for _ in 0..samples {
            let phi = Cochain2::from_coords(f, n, Element::random(f, pair_count(n), &mut rng).0).unwrap();
            let g = Element::random(f, n, &mut rng);
            let h = Element::random(f, n, &mut rng);
            check(
                star_correction(&a, &phi, &g, &h) == star_correction_naive(&a, &phi, &g, &h),
                || format!("p={p}: DP vs enumeration"),
            )?;
            dp_cases += 1;
        }
    }
    Ok(format!("d1/d2 matrices, p-power, ind2 and {dp_cases} DP/enumeration cases agree"))
}

fn complex_identities() -> Outcome {
    for p in PRIMES {
        let f = gf(p);
        let n = p as usize;
        let a = LieAlgebra::m0(p).unwrap();
        let w = a.weights();
        for k in 0..n {
            let psi = Cochain1::basis(f, n, k);
            check(d2(&a, &d1(&a, &psi)).is_zero(), || format!("p={p}: d2 d1 e^{}", k + 1))?;
            let out = d1(&a, &psi);
            check(out.is_zero() || out.weight(w) == Some(w[k]), || format!("p={p}: weight of d1 e^{}", k + 1))?;
        }
        for (i, j) in pairs(n) {
            let out = d2(&a, &Cochain2::basis(f, n, i, j));
            check(out.is_zero() || out.weight(w) == Some(w[i] + w[j]), || {
                format!("p={p}: weight of d2 e^{{{},{}}}", i + 1, j + 1)
            })?;
        }
        for l in lambda_set(p) {
            let r = RestrictedAlgebra::m0_lambda(p, &l).unwrap();
            for k in 0..n {
                let out = d2_star(&r, &d1_star(&r, &Cochain1::basis(f, n, k)));
                check(out.is_zero(), || format!("p={p} λ={l:?}: d2* d1* e^{}", k + 1))?;
            }
        }
    }
    Ok("d2∘d1 = 0, d2*∘d1* = (0,0), all differentials weight-preserving".into())
}

fn star_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut arbitrary_failures = 0;
    let mut arbitrary_cases = 0;
    for p in PRIMES {
        let f = gf(p);
        let n = p as usize;
        let a = LieAlgebra::m0(p).unwrap();
        let basis = admissible_basis(&a);
        let r = RestrictedAlgebra::m0_lambda(p, &random_nonzero_lambda(p, &mut rng)).unwrap();
        for _ in 0..100 {
            let psi = Cochain1::from_coeffs(f, Element::random(f, n, &mut rng).0);
            let g = Element::random(f, n, &mut rng);
            let h = Element::random(f, n, &mut rng);
            let k = Element::random(f, n, &mut rng);
            check(
                star_property_holds_with(&a, &d1(&a, &psi), |x| ind1_eval(&r, &psi, x), &g, &h),
                || format!("p={p}: ind1 ψ = {psi}"),
            )?;
            // φ ranges over cochains killing γ_(p-1) ∧ [g, g], which contain
            // every cocycle
            let phi = basis
                .iter()
                .fold(Cochain2::zero(f, n), |acc, b| acc.add(&b.scale(rng.gen_range(0..p))));
            check(
                doublestar_property_holds_with(&a, &d2(&a, &phi), |x, y| ind2_eval(&r, &phi, x, y), &g, &h, &k),
                || format!("p={p}: ind2 φ = {phi}"),
            )?;
            if p >= 5 && arbitrary_cases < 500 {
                let any = Cochain2::from_coords(f, n, Element::random(f, pair_count(n), &mut rng).0).unwrap();
                arbitrary_cases += 1;
                if !doublestar_property_holds_with(&a, &d2(&a, &any), |x, y| ind2_eval(&r, &any, x, y), &g, &h, &k) {
                    arbitrary_failures += 1;
                }
            }
        }
    }
    Ok(format!(
        "600 tuples each; with unrestricted φ the **-property fails in {arbitrary_failures}/{arbitrary_cases} cases"
    ))
}

fn lift(v: &[u32]) -> Vec<u32> {
    let mut out = v.to_vec();
    out.push(0);
    out
}

fn extensions() -> Outcome {
    let mut built = 0;
    for p in PRIMES {
        let f = gf(p);
        let n = p as usize;
        let a = LieAlgebra::m0(p).unwrap();
        for phi in h2(&a).representatives_deg2() {
            let e = extend_ordinary(&a, &phi).map_err(|e| e.to_string())?;
            check(e.algebra.jacobi_check().passed(), || format!("p={p}: Jacobi for {phi}"))?;
            built += 1;
        }
        for l in lambda_set(p) {
            let r = RestrictedAlgebra::m0_lambda(p, &l).unwrap();
            for k in 0..n {
                let bar = RestrictedTwoCochain::bar(f, n, k);
                let e = extend_restricted(&r, &bar).map_err(|e| e.to_string())?;
                let pp = e.p_powers.clone().unwrap();
                for (i, v) in pp.iter().enumerate().take(n) {
                    let mut want = vec![0; n + 1];
                    want[n - 1] = l[i];
                    want[n] = u32::from(i == k);
                    check(v.0 == want, || format!("p={p} λ={l:?} k={}: e_{}^[p]", k + 1, i + 1))?;
                }
                check(pp[n].is_zero(), || format!("p={p}: c^[p]"))?;
                check(e.algebra.jacobi_check().passed(), || format!("p={p}: Jacobi for ē^{}", k + 1))?;
                let re = e.restricted().unwrap();
                check(re.verify_restricted_map().passed(), || format!("p={p}: restricted axiom ē^{}", k + 1))?;
                check(is_trivial_ordinary_extension(&a, bar.phi()), || format!("p={p}: E_{} nontrivial", k + 1))?;
                built += 1;
            }
            for c2 in h2_star(&r).representatives_restricted() {
                let e = extend_restricted(&r, &c2).map_err(|e| e.to_string())?;
                let re = e.restricted().unwrap();
                check(
                    e.algebra.jacobi_check().passed() && re.verify_restricted_map().passed(),
                    || format!("p={p} λ={l:?}: {c2}"),
                )?;
                let x = Element::basis(n, 0).add(f, &Element::basis(n, 1));
                let mut want = lift(&r.p_power_jacobson(&x).0);
                want[n] = filiform_coh::restricted_cochain::star_eval(&a, &c2, &x);
                check(re.p_power_jacobson(&Element(lift(&x.0))).0 == want, || format!("p={p}: p-map of {c2}"))?;
                built += 1;
            }
        }
    }
    Ok(format!("{built} extensions verified"))
}

fn isomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in [3u32, 5, 7] {
        for _ in 0..100 {
            let lp: Vec<u32> = (0..p).map(|_| rng.gen_range(0..p)).collect();
            let (mu1, mu2) = (rng.gen_range(1..p), rng.gen_range(1..p));
            let l = transform_lambda(p, &lp, mu1, mu2).unwrap();
            check(iso_bruteforce(p, &l, &lp).unwrap().is_some(), || format!("p={p}: {l:?} vs {lp:?}"))?;
        }
    }

    let all = all_lambdas(3);
    let m = all.len();
    let table: Vec<Vec<bool>> = all
        .iter()
        .map(|x| all.iter().map(|y| iso_bruteforce(3, x, y).unwrap().is_some()).collect())
        .collect();
    for i in 0..m {
        check(table[i][i], || format!("not reflexive at {:?}", all[i]))?;
        for j in 0..m {
            check(table[i][j] == table[j][i], || format!("not symmetric at {:?}, {:?}", all[i], all[j]))?;
            for k in 0..m {
                check(!(table[i][j] && table[j][k]) || table[i][k], || "not transitive".into())?;
            }
        }
    }
    let zero = all.iter().position(|l| l.iter().all(|&x| x == 0)).unwrap();
    check((0..m).filter(|&j| table[zero][j]).count() == 1, || "λ = 0 class is not a singleton".into())?;
    let mut seen = vec![false; m];
    let mut classes = 0;
    for i in 0..m {
        if !seen[i] {
            classes += 1;
            for j in 0..m {
                seen[j] |= table[i][j];
            }
        }
    }

    let mut disagree3 = 0;
    for x in &all {
        for y in &all {
            if !proposition_formula_check(3, x, y).unwrap().agree {
                disagree3 += 1;
            }
        }
    }
    let mut disagree5 = 0;
    for _ in 0..200 {
        let x: Vec<u32> = (0..5).map(|_| rng.gen_range(0..5)).collect();
        let y = transform_lambda(5, &x, rng.gen_range(1..5), rng.gen_range(1..5)).unwrap();
        // half the pairs isomorphic by construction, half independent
        let y = if rng.gen_bool(0.5) { y } else { (0..5).map(|_| rng.gen_range(0..5)).collect() };
        if !proposition_formula_check(5, &x, &y).unwrap().agree {
            disagree5 += 1;
        }
    }
    Ok(format!(
        "300 transforms found; p=3: {classes} classes, equivalence relation, {{0}} singleton; \
         closed-form conditions disagree with search on {disagree3}/729 pairs at p=3 and {disagree5}/200 at p=5 (informational)"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("dimension table", dimension_table),
        ("p = 7 golden bases", golden_p7),
        ("H1 = H1* subspace equality", h1_equals_h1_star),
        ("splitting identity at λ = 0", splitting_identity),
        ("oracle equivalences", oracle_equivalences),
        ("complex identities", complex_identities),
        ("*- and **-property conformance", star_properties),
        ("central extensions", extensions),
        ("isomorphism classification", isomorphism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
