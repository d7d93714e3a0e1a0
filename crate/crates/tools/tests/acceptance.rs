//! Acceptance criteria, one line per criterion.
//!
//! Run with `cargo test -p cyclic-tools --test acceptance`.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cyclic_core::bounds::{certify, epsilon_analysis, moore_bound, prop22_lower, Verdict};
use cyclic_core::cyccut::{
    cec_oracle, cec_oracle_smallest_side, ear_decomposition, find_separating_girth_cycle,
    is_two_edge_connected, size_cut_oracle,
};
use cyclic_core::generators::{self, random_regular};
use cyclic_core::spectral::{mixing_fuzz, spectrum};
use cyclic_core::{Error, Graph};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn cyclic(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic"))
        .args(args)
        .arg("--quiet")
        .output()
        .expect("spawn cyclic");
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn example48_cli() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = dir.path().join("example48.el");
    let labels = dir.path().join("labels.json");
    let (code, gen) = cyclic(&[
        "generate",
        "example48",
        "-o",
        path_str(&file),
        "--labels",
        path_str(&labels),
    ]);
    ensure!(code == 0, "generate exited {code}");
    ensure!(gen["n"] == 48 && gen["m"] == 120, "generate reported {gen}");

    let (code, analysis) = cyclic(&["analyze", path_str(&file)]);
    ensure!(code == 0, "analyze exited {code}");
    ensure!(
        analysis["degree_profile"]["d"] == 5 && analysis["girth"] == 4,
        "analyze reported {} / girth {}",
        analysis["degree_profile"],
        analysis["girth"]
    );
    let lambda2 = analysis["lambda2"].as_f64().ok_or("no lambda2")?;
    ensure!((lambda2 - 4.56).abs() <= 0.01, "lambda2 = {lambda2}");

    let labels: Value =
        serde_json::from_str(&std::fs::read_to_string(&labels).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    let spec: Vec<String> = labels["matching_cut"]
        .as_array()
        .ok_or("labels without matching_cut")?
        .iter()
        .map(|e| format!("{}-{}", e[0], e[1]))
        .collect();
    let (code, check) = cyclic(&["cut-check", path_str(&file), "--edges", &spec.join(",")]);
    ensure!(code == 0, "cut-check exited {code}");
    ensure!(
        check["valid"] == true && check["size"] == 8,
        "cut-check reported {check}"
    );

    let (code, cert) = cyclic(&["certify", path_str(&file)]);
    ensure!(code == 0, "certify exited {code}");
    ensure!(
        cert["condition"]["holds"] == false,
        "condition reported {}",
        cert["condition"]
    );
    Ok(format!(
        "n=48 m=120 d=5 g=4, cut {{b_i c_i}} valid size 8, lambda2={lambda2}, condition {}",
        cert["condition"]["outcome"]
    ))
}

fn k44_value() -> Outcome {
    let r = cec_oracle(&generators::complete_bipartite(4, 4).unwrap(), 20)
        .map_err(|e| e.to_string())?;
    ensure!(
        r.value == Some(4 * 4 - 2 * 4),
        "oracle returned {:?}",
        r.value
    );
    Ok("cec(K44) = 8 = 4^2 - 2*4".into())
}

fn certify_k55() -> Outcome {
    let g = generators::complete_bipartite(5, 5).unwrap();
    let rep = certify(&g).map_err(|e| e.to_string())?;
    ensure!(
        rep.verdict == Verdict::Equality(12),
        "verdict {:?}",
        rep.verdict
    );
    ensure!(rep.lambda2.abs() <= 1e-8, "lambda2 = {}", rep.lambda2);
    let cond = rep.condition.as_ref().ok_or("condition not evaluated")?;
    let n0 = moore_bound(3.0, 4).unwrap().value;
    ensure!(
        (cond.lhs - 4.8).abs() < 1e-9 && cond.rhs == 6.0 && n0 == 6.0 && cond.lhs <= cond.rhs,
        "lhs {} rhs {} n0(3,4) {n0}",
        cond.lhs,
        cond.rhs
    );
    let oracle = cec_oracle(&g, 20).map_err(|e| e.to_string())?;
    ensure!(
        oracle.value == Some(12),
        "oracle returned {:?}",
        oracle.value
    );
    Ok("certify Equality(12), lhs 4.8 <= rhs 6, oracle 12".into())
}

fn petersen() -> Outcome {
    let g = generators::petersen();
    let r = cec_oracle(&g, 20).map_err(|e| e.to_string())?;
    ensure!(r.value == Some(5), "oracle returned {:?}", r.value);
    let s = find_separating_girth_cycle(&g).map_err(|e| e.to_string())?;
    ensure!(
        s.cycle.len() == 5 && s.cut.size == 5,
        "cycle {:?} cut {}",
        s.cycle,
        s.cut.size
    );
    Ok(format!("oracle 5, cycle {:?} with cut 5", s.cycle))
}

fn moore_units() -> Outcome {
    for (d, g, want) in [
        (3.0, 4, 6.0),
        (3.0, 5, 10.0),
        (3.0, 6, 14.0),
        (5.0 - 2.0 / 1.0, 4, 6.0),
    ] {
        let v = moore_bound(d, g).map_err(|e| e.to_string())?.value;
        ensure!(
            v == want && v.fract() == 0.0,
            "n0({d}, {g}) = {v}, want {want}"
        );
    }
    Ok("n0(3,4)=6 n0(3,5)=10 n0(3,6)=14 n0(3,4)=6 via d=5-2/1".into())
}

fn epsilon_sweep() -> Outcome {
    let mut checked = 0;
    let mut zero_at_boundary = Vec::new();
    for d in 5..=12usize {
        for g in [3usize, 5, 7, 9] {
            let a = epsilon_analysis(d, g).map_err(|e| e.to_string())?;
            let r = g / 2;
            let (df, rf) = (d as f64, r as f64);
            ensure!(
                (a.f(df - 2.0) + g as f64).abs() <= 1e-9,
                "f(d-2) = {} at d={d} g={g}",
                a.f(df - 2.0)
            );
            let expected = (df - 2.0) * rf * rf - 2.0 * rf - 1.0;
            ensure!(
                a.f(0.0) == expected,
                "f(0) = {} != {expected} at d={d} g={g}",
                a.f(0.0)
            );
            if g == 3 {
                ensure!(
                    a.epsilon_star == df - 5.0,
                    "eps*({d},3) = {}",
                    a.epsilon_star
                );
                // f(0) = d - 5 here, so positivity fails only at d = 5
                if a.f(0.0) <= 0.0 {
                    zero_at_boundary.push(format!("f(0)={} at d={d} g=3", a.f(0.0)));
                }
            } else {
                ensure!(a.f(0.0) > 0.0, "f(0) = {} at d={d} g={g}", a.f(0.0));
                let lo = df - 2.0 - 2.0 / (rf - 1.0);
                ensure!(
                    lo < a.epsilon_star && a.epsilon_star < df - 2.0,
                    "eps*({d},{g}) = {} not in ({lo}, {})",
                    a.epsilon_star,
                    df - 2.0
                );
            }
            checked += 1;
        }
    }
    let note = if zero_at_boundary.is_empty() {
        String::new()
    } else {
        format!(
            "; f(0) > 0 asserted for g >= 5, g = 3 has {}",
            zero_at_boundary.join(", ")
        )
    };
    Ok(format!("{checked} (d, g) pairs{note}"))
}

fn mixing() -> Outcome {
    let graphs = [
        ("petersen", generators::petersen()),
        ("Q4", generators::hypercube(4).unwrap()),
        ("heawood", generators::heawood()),
        ("example48", generators::example48().unwrap().0),
    ];
    let mut parts = Vec::new();
    for (name, g) in &graphs {
        let r = mixing_fuzz(g, 1000, 0).map_err(|e| e.to_string())?;
        ensure!(
            r.trials == 1000 && r.failures == 0,
            "{name}: {} failures",
            r.failures
        );
        parts.push(format!("{name} min slack {:.3}", r.min_slack));
    }
    Ok(parts.join(", "))
}

fn counterexamples() -> Outcome {
    for n in 5..=10 {
        let r = find_separating_girth_cycle(&generators::wheel(n).unwrap());
        ensure!(
            matches!(r, Err(Error::GirthTooSmall { .. })),
            "wheel({n}): {r:?}"
        );
    }
    for t in 3..=6 {
        for inner in [&[(0, 1)][..], &[(0, 1), (1, 2)], &[(0, 1), (1, 2), (0, 2)]] {
            let r = find_separating_girth_cycle(&generators::k3t_plus(t, inner).unwrap());
            ensure!(
                matches!(r, Err(Error::GirthTooSmall { .. })),
                "k3t_plus({t}, {inner:?}): {r:?}"
            );
        }
        let r = find_separating_girth_cycle(&generators::complete_bipartite(3, t).unwrap());
        ensure!(matches!(r, Err(Error::ExcludedK3t)), "K3,{t}: {r:?}");
    }
    Ok("wheel(5..=10), k3t_plus(3..=6, nonempty) girth too small; K3,3..K3,6 excluded".into())
}

fn prop22_heawood() -> Outcome {
    let g = generators::heawood();
    let l2 = spectrum(&g, 1e-8)
        .map_err(|e| e.to_string())?
        .lambda2
        .unwrap();
    ensure!((l2 - 2f64.sqrt()).abs() <= 1e-8, "lambda2 = {l2}");
    let mut parts = Vec::new();
    for k in 1..=6 {
        let exact = size_cut_oracle(&g, k, 20).map_err(|e| e.to_string())?;
        let bound = prop22_lower(3, l2, 6, k).map_err(|e| e.to_string())?;
        let v = exact.value.ok_or(format!("no cut with sides >= {k}"))?;
        ensure!(v as f64 >= bound, "k={k}: cut {v} < bound {bound}");
        parts.push(format!("k={k}: {v}>={bound:.2}"));
    }
    Ok(parts.join(" "))
}

/// Smallest edge set whose removal leaves at least two components, each with
/// a cycle. Enumerates subsets by increasing size with union-find.
fn cec_by_edge_subsets(g: &Graph) -> Option<usize> {
    let edges = g.edges();
    let (n, m) = (g.n(), edges.len());
    assert!(m <= 24);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    for mask in 0u32..(1 << m) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    let mut parent = vec![0usize; n];
    let mut verts = vec![0usize; n];
    let mut inner = vec![0usize; n];
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (size, masks) in by_size.iter().enumerate() {
        for &mask in masks {
            for v in 0..n {
                parent[v] = v;
                verts[v] = 1;
                inner[v] = 0;
            }
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    inner[a] += 1;
                } else {
                    parent[b] = a;
                    verts[a] += verts[b];
                    inner[a] += inner[b] + 1;
                }
            }
            let roots: Vec<usize> = (0..n).filter(|&v| find(&mut parent, v) == v).collect();
            if roots.len() >= 2 && roots.iter().all(|&r| inner[r] >= verts[r]) {
                return Some(size);
            }
        }
    }
    None
}

fn corpus() -> Vec<(&'static str, Graph)> {
    let el = |n: usize, e: &[(usize, usize)]| Graph::from_edge_list(n, e).unwrap();
    let circulant = |n: usize, steps: &[usize]| {
        let e: Vec<_> = (0..n)
            .flat_map(|i| steps.iter().map(move |&s| (i, (i + s) % n)))
            .collect();
        Graph::from_edge_list(n, &e).unwrap()
    };
    let prism = |k: usize| {
        let mut e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        e.extend((0..k).map(|i| (k + i, k + (i + 1) % k)));
        e.extend((0..k).map(|i| (i, k + i)));
        Graph::from_edge_list(2 * k, &e).unwrap()
    };
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut two_k4: Vec<_> = k4.to_vec();
    two_k4.extend(k4.iter().map(|&(u, v)| (u + 4, v + 4)));
    two_k4.push((3, 4));
    vec![
        ("K4", generators::complete(4).unwrap()),
        ("K5", generators::complete(5).unwrap()),
        ("K6", generators::complete(6).unwrap()),
        ("K3,3", generators::complete_bipartite(3, 3).unwrap()),
        ("K3,4", generators::complete_bipartite(3, 4).unwrap()),
        ("K4,4", generators::complete_bipartite(4, 4).unwrap()),
        ("K4,5", generators::complete_bipartite(4, 5).unwrap()),
        ("petersen", generators::petersen()),
        ("Q3", generators::hypercube(3).unwrap()),
        ("wheel(6)", generators::wheel(6).unwrap()),
        ("wheel(8)", generators::wheel(8).unwrap()),
        ("C6", generators::cycle(6).unwrap()),
        (
            "two triangles and a bridge",
            el(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]),
        ),
        ("two K4 and a bridge", el(8, &two_k4)),
        ("triangular prism", prism(3)),
        ("pentagonal prism", prism(5)),
        (
            "k3t_plus(3, 0-1)",
            generators::k3t_plus(3, &[(0, 1)]).unwrap(),
        ),
        ("circulant C8(1,2)", circulant(8, &[1, 2])),
        ("Wagner graph", circulant(8, &[1, 4])),
        ("octahedron", circulant(6, &[1, 2])),
        (
            "random 3-regular n=10",
            random_regular(10, 3, 3, 1, 1000).unwrap(),
        ),
        (
            "random 3-regular n=12",
            random_regular(12, 3, 3, 2, 1000).unwrap(),
        ),
        (
            "random 4-regular n=11",
            random_regular(11, 4, 3, 3, 1000).unwrap(),
        ),
        ("star K1,3", el(4, &[(0, 1), (0, 2), (0, 3)])),
        (
            "bowtie",
            el(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]),
        ),
        (
            "two disjoint triangles",
            el(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
        ),
    ]
}

fn corpus_suites() -> Outcome {
    let graphs = corpus();
    ensure!(graphs.len() >= 20, "corpus has {} graphs", graphs.len());
    let (mut defined, mut ears, mut witnesses) = (0, 0, 0);
    for (name, g) in &graphs {
        ensure!(g.n() <= 12, "{name} has {} vertices", g.n());
        let fast = cec_oracle(g, 20).map_err(|e| format!("{name}: {e}"))?;
        let slow = cec_by_edge_subsets(g);
        ensure!(
            fast.value == slow,
            "{name}: bipartition {:?} vs edge subsets {slow:?}",
            fast.value
        );

        if is_two_edge_connected(g) {
            let e = ear_decomposition(g).map_err(|e| format!("{name}: {e}"))?;
            ensure!(
                e.verify(g) && e.ears.len() == g.m() - g.n(),
                "{name}: ear decomposition {e:?}"
            );
            ears += 1;
        }

        if fast.value.is_some() {
            defined += 1;
            let r = cec_oracle_smallest_side(g, 20).map_err(|e| e.to_string())?;
            ensure!(r.value == fast.value, "{name}: tie-break changed the value");
            let cut = r.witness.ok_or(format!("{name}: no witness"))?;
            ensure!(
                cut.x_components.len() == 1,
                "{name}: G[X] has {} components",
                cut.x_components.len()
            );
            let member: Vec<bool> = (0..g.n()).map(|v| cut.x.contains(&v)).collect();
            for &v in &cut.x {
                let inside = g.neighbors(v).iter().filter(|&&w| member[w]).count();
                ensure!(
                    inside >= 2,
                    "{name}: vertex {v} has induced degree {inside}"
                );
            }
            witnesses += 1;
        }
    }
    Ok(format!(
        "{} graphs agree ({defined} defined), {ears} ear decompositions, {witnesses} witnesses checked",
        graphs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 example48 via CLI", Duration::from_secs(5), example48_cli),
        ("2 K4,4 value", Duration::from_secs(1), k44_value),
        ("3 certify K5,5", Duration::from_secs(5), certify_k55),
        ("4 Petersen", Duration::from_secs(1), petersen),
        ("5 Moore bound units", Duration::MAX, moore_units),
        (
            "6 epsilon identities",
            Duration::from_secs(1),
            epsilon_sweep,
        ),
        ("7 mixing fuzz", Duration::from_secs(30), mixing),
        ("8 counterexample families", Duration::MAX, counterexamples),
        (
            "9 size-restricted bound on Heawood",
            Duration::from_secs(10),
            prop22_heawood,
        ),
        ("10 corpus suites", Duration::MAX, corpus_suites),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > limit => {
                Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        println!("all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
