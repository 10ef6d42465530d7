//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use klr_typea::cartan::CartanA;
use klr_typea::crystal::{crystal_equivalent, in_highest_component, TensorElt};
use klr_typea::homogeneous::{
    convolution_shift, head_shift_t, hom_degree_d, strongly_commute, Factor,
};
use klr_typea::kl::{
    convolution_qchar, graded_decomposition, semistandard_by_content, simple_qchars,
    transition_entry, ColumnStrictConcat,
};
use klr_typea::qchar::{qch_sp, shuffle, shuffle_all, shuffle_with_sign, QChar, ShuffleSign};
use klr_typea::rmatrix::sigma_trace;
use klr_typea::tableaux::SsyTableau;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cd(n: usize) -> CartanA {
    CartanA::new(n).unwrap()
}

fn fac(n: usize, e: &[usize]) -> Factor {
    Factor::new(col(n, e)).unwrap()
}

fn sigma_reproduction() -> Sweep {
    type Case<'a> = (
        usize,
        &'a [usize],
        &'a [usize],
        &'a str,
        &'a str,
        &'a [usize],
        &'a [usize],
    );
    let cases: [Case; 3] = [
        (
            4,
            &[4],
            &[2, 3],
            "10⊗01⊗01⊗00",
            "10⊗01⊗10⊗00",
            &[2, 4],
            &[3],
        ),
        (
            5,
            &[3, 5],
            &[1, 3, 4, 5],
            "11⊗01⊗11⊗00⊗01",
            "11⊗10⊗11⊗00⊗10",
            &[1, 3, 4, 5],
            &[3, 5],
        ),
        (
            5,
            &[2, 4],
            &[1, 3, 4, 5],
            "01⊗11⊗01⊗10⊗01",
            "10⊗11⊗10⊗10⊗01",
            &[2, 3, 4, 5],
            &[1, 4],
        ),
    ];
    for (n, a, b, bits_in, bits_out, c, d) in cases {
        let t = sigma_trace(&col(n, a), &col(n, b), n).map_err(|e| e.to_string())?;
        ensure(
            t.bits_in.to_string() == bits_in,
            format!("bits in {} vs {bits_in}", t.bits_in),
        )?;
        ensure(
            t.bits_out.to_string() == bits_out,
            format!("bits out {} vs {bits_out}", t.bits_out),
        )?;
        ensure(
            t.first.entries() == c && t.second.entries() == d,
            format!("sigma({a:?},{b:?}) = {}|{}", t.first, t.second),
        )?;
    }
    Ok("3 instances with bit words".into())
}

fn qcharacters() -> Sweep {
    let cases: &[(usize, &[usize], &str)] = &[
        (4, &[4], "(3,2,1)"),
        (4, &[2, 3], "(1,2)"),
        (4, &[2, 4], "(1,3,2)+(3,1,2)"),
        (4, &[3], "(2,1)"),
        (5, &[1, 3, 4, 5], "(2,3,4)"),
        (
            5,
            &[3, 5],
            "(2,1,4,3,2)+(2,4,1,3,2)+(2,4,3,1,2)+(4,2,1,3,2)+(4,2,3,1,2)",
        ),
        (5, &[3, 4], "(2,1,3,2)+(2,3,1,2)"),
        (5, &[5], "(4,3,2,1)"),
        (5, &[1, 3], "(2)"),
        (5, &[2, 4], "(1,3,2)+(3,1,2)"),
    ];
    for &(n, c, want) in cases {
        let got = qch_sp(&col(n, c), &cd(n))
            .map_err(|e| e.to_string())?
            .to_string();
        ensure(
            got == want,
            format!("qch Sp^{c:?} = {got}, expected {want}"),
        )?;
    }
    Ok(format!("{} modules", cases.len()))
}

fn degree_formulas() -> Sweep {
    let d = hom_degree_d(
        &fac(4, &[4]),
        &fac(4, &[2, 3]),
        &fac(4, &[2, 4]),
        &fac(4, &[3]),
    )
    .map_err(|e| e.to_string())?;
    ensure(d == 1, format!("d = {d}"))?;
    let c = cd(5);
    for (cols, want) in [("5|3,4|1,2|1,2,3", 1), ("5|2,4|1,3|1,2,3", 2)] {
        let t = ColumnStrictConcat::parse_rtl(5, cols).unwrap();
        let conv: Vec<_> = t.columns().iter().rev().cloned().collect();
        let betas: Vec<_> = conv.iter().map(|x| x.beta()).collect();
        let lambdas: Vec<_> = conv
            .iter()
            .map(|x| c.fundamental_or_zero(x.len()))
            .collect();
        let direct = head_shift_t(&betas, &lambdas, &c).map_err(|e| e.to_string())?;
        let wrapped = convolution_shift(&conv, &c).map_err(|e| e.to_string())?;
        ensure(
            direct == want && wrapped == want,
            format!("shift for {cols}: {direct}/{wrapped}, expected {want}"),
        )?;
    }
    Ok("d = 1, shifts 1 and 2".into())
}

fn strong_commutation() -> Sweep {
    for (a, want) in [(&[3usize, 5][..], true), (&[2, 4][..], false)] {
        let got =
            strongly_commute(&fac(5, a), &fac(5, &[1, 3, 4, 5])).map_err(|e| e.to_string())?;
        ensure(
            got == want,
            format!("strongly_commute({a:?}, [1,3,4,5]) = {got}"),
        )?;
        let ab = TensorElt::new(5, vec![col(5, a), col(5, &[1, 3, 4, 5])]).unwrap();
        let ba = TensorElt::new(5, vec![col(5, &[1, 3, 4, 5]), col(5, a)]).unwrap();
        ensure(
            in_highest_component(&ab) && in_highest_component(&ba),
            "orders outside the highest components",
        )?;
        ensure(
            crystal_equivalent(&ab, &ba) == want,
            format!("crystal cross-check disagrees for {a:?}"),
        )?;
    }
    Ok("commuting and non-commuting pairs".into())
}

fn tab(n: usize, rows: &[&[usize]]) -> SsyTableau {
    SsyTableau::new(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn kl_calibration() -> Sweep {
    let c = cd(5);
    let t = ColumnStrictConcat::parse_rtl(5, "5|3,4|1,2|1,2,3").unwrap();
    let s = ColumnStrictConcat::parse_rtl(5, "5|2,4|1,3|1,2,3").unwrap();
    let ts = tab(5, &[&[1, 1, 3, 5], &[2, 2, 4], &[3]]);
    let ss = tab(5, &[&[1, 1, 2, 5], &[2, 3, 4], &[3]]);
    let all = semistandard_by_content(&t.shape(), 5, &t.content()).map_err(|e| e.to_string())?;
    for t2 in &all {
        let a_t = transition_entry(&t, t2).map_err(|e| e.to_string())?;
        let a_s = transition_entry(&s, t2).map_err(|e| e.to_string())?;
        let want_t = if *t2 == ts { "1" } else { "0" };
        let want_s = if *t2 == ts {
            "q"
        } else if *t2 == ss {
            "1"
        } else {
            "0"
        };
        ensure(a_t == lp(want_t), format!("A_(T,{t2}) = {a_t}"))?;
        ensure(a_s == lp(want_s), format!("A_(S,{t2}) = {a_s}"))?;
    }
    let dt: Vec<_> = graded_decomposition(&t, &c)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure(
        dt == vec![(ts.clone(), lp("q^-1"))],
        format!("T decomposition {dt:?}"),
    )?;
    let ds = graded_decomposition(&s, &c).map_err(|e| e.to_string())?;
    ensure(
        ds.len() == 2 && ds.get(&ts) == Some(&lp("q^-1")) && ds.get(&ss) == Some(&lp("q^-2")),
        format!("S decomposition {ds:?}"),
    )?;
    Ok(format!("{} columns of each matrix row", all.len()))
}

fn bar_invariance() -> Sweep {
    let c = cd(5);
    for (left, right) in [
        (&[3usize, 5][..], &[1usize, 3, 4, 5][..]),
        (&[5][..], &[3, 4][..]),
    ] {
        let a = qch_sp(&col(5, left), &c).unwrap();
        let b = qch_sp(&col(5, right), &c).unwrap();
        let good = shuffle(&a, &b, &c).unwrap().shift(1);
        ensure(
            good.is_bar_invariant(),
            format!("q * ({left:?} ⧢ {right:?}) is not bar-invariant"),
        )?;
        let control = shuffle_with_sign(&a, &b, &c, ShuffleSign::Reversed)
            .unwrap()
            .shift(1);
        ensure(
            !control.is_bar_invariant(),
            format!("reversed sign passes on {left:?} ⧢ {right:?}"),
        )?;
    }
    Ok("2 products bar-invariant, reversed sign rejected on both".into())
}

fn grothendieck() -> Sweep {
    let c = cd(5);
    let t = ColumnStrictConcat::parse_rtl(5, "5|3,4|1,2|1,2,3").unwrap();
    let s = ColumnStrictConcat::parse_rtl(5, "5|2,4|1,3|1,2,3").unwrap();
    let ts = tab(5, &[&[1, 1, 3, 5], &[2, 2, 4], &[3]]);
    let ss = tab(5, &[&[1, 1, 2, 5], &[2, 3, 4], &[3]]);
    let simples = simple_qchars(&t.shape(), &c, &t.content()).map_err(|e| e.to_string())?;
    let find = |x: &SsyTableau| {
        simples
            .iter()
            .find(|(k, _)| k == x)
            .map(|(_, q)| q.clone())
            .unwrap()
    };
    let (lt, ls) = (find(&ts), find(&ss));
    for l in [&lt, &ls] {
        ensure(
            l.is_bar_invariant() && l.is_nonnegative(),
            format!("simple {l}"),
        )?;
    }
    // qch Sp^{S4} ⧢ qch Sp^{S3} ⧢ qch Sp^{S2}; the trivial column contributes the empty word
    let factors: Vec<QChar> = ["5", "2,4", "1,3"]
        .iter()
        .map(|e| {
            qch_sp(
                &col(
                    5,
                    &e.split(',').map(|x| x.parse().unwrap()).collect::<Vec<_>>(),
                ),
                &c,
            )
            .unwrap()
        })
        .collect();
    let triple = shuffle_all(&factors, &c).unwrap();
    let want = lt.shift(-1).add(&ls.shift(-2)).unwrap();
    ensure(
        triple == want,
        "triple shuffle differs from q^-1 L(T) + q^-2 L(S)",
    )?;
    // with the head shift t = 2 the product becomes the transition row q L(T) + L(S)
    ensure(
        triple.shift(2) == lt.shift(1).add(&ls).unwrap(),
        "shifted product differs from the transition row",
    )?;
    ensure(
        convolution_qchar(&s, &c).unwrap() == want,
        "library convolution disagrees",
    )?;
    Ok(format!("{} words in the product", triple.len()))
}

fn property_suites() -> Sweep {
    let parts = [
        ("crystal axioms", check_crystal_axioms(10_000)?),
        ("sigma involution", check_sigma_involution(4)?),
        ("sigma commutation", check_sigma_commutation(4)?),
        ("encode/decode", check_encode_decode(5)?),
        ("hook counts", check_hook_counts(7, 4)?),
        ("KL oracle", check_kl_oracle(4, 0)?),
        ("commutation criterion", check_commutation_criterion(4)?),
    ];
    Ok(parts
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect::<Vec<_>>()
        .join("; "))
}

type Criterion = (&'static str, fn() -> Sweep);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("sigma reproduction", sigma_reproduction),
        ("q-characters", qcharacters),
        ("degree formulas", degree_formulas),
        ("strong commutation", strong_commutation),
        ("relation soundness", || check_relations(5)),
        ("KL calibration", kl_calibration),
        ("positivity", || check_positivity(6, 4)),
        ("bar-invariance oracle", bar_invariance),
        ("Grothendieck consistency", grothendieck),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
