//! Batch front-end: parses divisor/arrangement/hypertoric/presentation files,
//! dispatches the library operations and emits deterministic reports.
//!
//! Exit codes: 0 success, 1 negative mathematical verdict (for verification
//! commands), 2 input error.

mod input;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::{fmt_ideal, fmt_int_vec, fmt_rat, fmt_rat_vec, fnv64, Format, Report};
use std::path::PathBuf;
use std::process::ExitCode;
use wellpoised::arrangement::{
    bergman_cones, cm_sufficient, is_saturated, nok_cone, value_semigroup, verify_well_poised,
};
use wellpoised::exactmath::{Int, Rat};
use wellpoised::polyhedra::is_admissable;
use wellpoised::quotients::{
    git_quotient_presentation, hypertoric_total_space, segre_presentation, veronese_presentation,
};
use wellpoised::semicanonical::{
    cone_lift_check, degenerate_base, generating_set, semicanonical_presentation, ConeLiftReport,
};

#[derive(Parser)]
#[command(name = "wellpoised", version, about = "semi-canonical embeddings of T-varieties from polyhedral divisors, with well-poised certification", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// worker threads for per-cone verification
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Semi-canonical presentation of a polyhedral divisor
    Embed {
        #[arg(long)]
        input: PathBuf,
    },
    /// Degree-polyhedron module generators of the finite generating set
    Generators {
        #[arg(long)]
        input: PathBuf,
    },
    /// Lift weights through the tropical lift map
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Saturated initial ideals of the base at the given weights
    Degenerate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Full cone-lifting verdicts at the given weights
    LiftCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Certify every Bergman cone of an arrangement variety
    VerifyWellpoised {
        #[arg(long)]
        input: PathBuf,
    },
    /// Value-semigroup description for an index set
    ValueSemigroup {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        iset: String,
    },
    /// Newton-Okounkov cone for an index set
    NokCone {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        iset: String,
    },
    /// Admissability of the polyhedral coefficients (optionally a subset)
    Admissable {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        iset: Option<String>,
    },
    /// Sufficient Cohen-Macaulay test
    CmCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// d-th Veronese presentation
    Veronese {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Segre product presentation of two inputs
    Segre {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        second: PathBuf,
    },
    /// GIT-quotient presentation at a character β
    Quotient {
        #[arg(long)]
        input: PathBuf,
        /// comma-separated multidegree β
        #[arg(long)]
        beta: String,
        /// Veronese exponent cap
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
    /// Hypertoric matrices, moment ideal and total-space certification
    Hypertoric {
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.parallel > 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.parallel)
            .build_global();
    }
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    match run(cli.command, format) {
        Ok((text, verdict_negative)) => {
            print!("{text}");
            if verdict_negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<(String, String), String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let hash = fnv64(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| format!("{}: not UTF-8", path.display()))?;
    Ok((text, hash))
}

fn parse_iset(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad index '{t}' in --iset"))
        })
        .collect()
}

fn run(cmd: Command, format: Format) -> Result<(String, bool), String> {
    match cmd {
        Command::Embed { input } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_divisor_file(&text).map_err(|e| e.to_string())?;
            let pres = semicanonical_presentation(&file.spec).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "embed");
            r.kv("m", file.spec.m.to_string());
            r.kv("lattice_rank", file.spec.lattice_rank.to_string());
            emit_presentation(&mut r, &pres);
            Ok((r.finish(), false))
        }
        Command::Generators { input } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_divisor_file(&text).map_err(|e| e.to_string())?;
            let pres = semicanonical_presentation(&file.spec).map_err(|e| e.to_string())?;
            let g = file.spec.default_generating_set();
            let gens = generating_set(&file.spec, &g).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "generators");
            emit_hilbert(&mut r, &pres);
            r.kv("count", gens.len().to_string());
            for (k, mg) in gens.iter().enumerate() {
                r.kv(&format!("generator{k}.g"), mg.g.to_string());
                r.kv(&format!("generator{k}.v"), fmt_int_vec(&mg.v));
                r.kv(&format!("generator{k}.u"), fmt_int_vec(&mg.u));
            }
            Ok((r.finish(), false))
        }
        Command::Lift { input, weights } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_divisor_file(&text).map_err(|e| e.to_string())?;
            let pres = semicanonical_presentation(&file.spec).map_err(|e| e.to_string())?;
            let ws = load_weights(&file, weights.as_ref())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "lift");
            emit_hilbert(&mut r, &pres);
            for (k, w) in ws.iter().enumerate() {
                let lifted = pres.lift_weight(w).map_err(|e| e.to_string())?;
                r.kv(&format!("weight{k}"), fmt_rat_vec(w));
                r.kv(&format!("weight{k}.lifted"), fmt_rat_vec(&lifted));
            }
            Ok((r.finish(), false))
        }
        Command::Degenerate { input, weights } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_divisor_file(&text).map_err(|e| e.to_string())?;
            let ws = load_weights(&file, weights.as_ref())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "degenerate");
            for (k, w) in ws.iter().enumerate() {
                r.kv(&format!("weight{k}"), fmt_rat_vec(w));
                match degenerate_base(&file.spec, w) {
                    Ok(ideal) => r.kv(&format!("weight{k}.initial"), fmt_ideal(&ideal)),
                    Err(e) => r.kv(&format!("weight{k}.error"), e.to_string()),
                }
            }
            Ok((r.finish(), false))
        }
        Command::LiftCheck { input, weights } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_divisor_file(&text).map_err(|e| e.to_string())?;
            let pres = semicanonical_presentation(&file.spec).map_err(|e| e.to_string())?;
            let g = file.spec.default_generating_set();
            let ws = load_weights(&file, weights.as_ref())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "lift-check");
            emit_presentation(&mut r, &pres);
            for (k, w) in ws.iter().enumerate() {
                r.heading(&format!("weight {}", fmt_rat_vec(w)));
                let rep = cone_lift_check(&file.spec, &pres, &g, w).map_err(|e| e.to_string())?;
                emit_cone_report(&mut r, &format!("weight{k}"), &rep);
            }
            Ok((r.finish(), false))
        }
        Command::VerifyWellpoised { input } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_arrangement_file(&text).map_err(|e| e.to_string())?;
            let pres = wellpoised::arrangement::arrangement_presentation(&file.spec)
                .map_err(|e| e.to_string())?;
            let reports = verify_well_poised(&file.spec).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "verify-wellpoised");
            warn_repeated_forms(&mut r, &file.spec);
            emit_presentation(&mut r, &pres);
            let cones = bergman_cones(&file.spec);
            r.kv("cones", cones.len().to_string());
            let mut all = true;
            for (cone, rep) in &reports {
                let key = format!("cone[{}]", cone.label());
                emit_cone_report(&mut r, &key, rep);
                all &= rep.prime_certified;
            }
            r.kv("well_poised", if all { "true" } else { "false" });
            Ok((r.finish(), !all))
        }
        Command::ValueSemigroup { input, iset } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_arrangement_file(&text).map_err(|e| e.to_string())?;
            let iset = parse_iset(&iset)?;
            let s = value_semigroup(&file.spec, &iset).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "value-semigroup");
            warn_repeated_forms(&mut r, &file.spec);
            r.kv(
                "iset",
                s.i_set
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            r.kv(
                "complement",
                s.complement
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            for (k, piece) in s.pieces.iter().enumerate() {
                for ray in &piece.cone_rays {
                    r.kv(&format!("piece{k}.cone_ray"), fmt_int_vec(ray));
                }
                let floors: Vec<String> = piece
                    .upper_vertices
                    .iter()
                    .map(|v| format!("floor(<u,{}>)", fmt_rat_vec(v)))
                    .collect();
                r.kv(
                    &format!("piece{k}.upper"),
                    format!("sum_v <= {}", floors.join(" + ")),
                );
                for (j, v) in piece.lower_vertices.iter().enumerate() {
                    r.kv(
                        &format!("piece{k}.lower{j}"),
                        format!("v{j} >= -floor(<u,{}>)", fmt_rat_vec(v)),
                    );
                }
            }
            Ok((r.finish(), false))
        }
        Command::NokCone { input, iset } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_arrangement_file(&text).map_err(|e| e.to_string())?;
            let iset = parse_iset(&iset)?;
            let cone = nok_cone(&file.spec, &iset).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "nok-cone");
            warn_repeated_forms(&mut r, &file.spec);
            r.kv("ambient_dim", cone.ambient_dim.to_string());
            for (k, (n, b)) in cone.inequalities.iter().enumerate() {
                r.kv(
                    &format!("inequality{k}"),
                    format!("<{},x> >= {}", fmt_int_vec(n), fmt_rat(b)),
                );
            }
            Ok((r.finish(), false))
        }
        Command::Admissable { input, iset } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_arrangement_file(&text).map_err(|e| e.to_string())?;
            let (verdict, witness) = match iset {
                Some(s) => {
                    let iset = parse_iset(&s)?;
                    is_saturated(&file.spec, &iset).map_err(|e| e.to_string())?
                }
                None => is_admissable(&file.spec.coefficients).map_err(|e| e.to_string())?,
            };
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "admissable");
            r.kv("admissable", if verdict { "true" } else { "false" });
            if let Some(w) = witness {
                r.kv("witness", fmt_int_vec(&w));
            }
            Ok((r.finish(), !verdict))
        }
        Command::CmCheck { input } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_arrangement_file(&text).map_err(|e| e.to_string())?;
            let verdict = cm_sufficient(&file.spec).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "cm-check");
            r.kv("cm_sufficient", if verdict { "true" } else { "false" });
            Ok((r.finish(), !verdict))
        }
        Command::Veronese { input, degree } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_presentation_file(&text).map_err(|e| e.to_string())?;
            let v = veronese_presentation(&file.presentation, degree).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "veronese");
            r.kv("degree", degree.to_string());
            r.kv("variables", v.ideal.ring.vars.join(","));
            r.kv("kernel", fmt_ideal(&v.ideal));
            Ok((r.finish(), false))
        }
        Command::Segre { input, second } => {
            let (text, hash) = read_input(&input)?;
            let (text2, hash2) = read_input(&second)?;
            let f1 = input::parse_presentation_file(&text).map_err(|e| e.to_string())?;
            let f2 = input::parse_presentation_file(&text2).map_err(|e| e.to_string())?;
            let s = segre_presentation(&f1.presentation, &f2.presentation)
                .map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("input2", second.display().to_string());
            r.kv("hash2", hash2);
            r.kv("command", "segre");
            r.kv("variables", s.ideal.ring.vars.join(","));
            r.kv("kernel", fmt_ideal(&s.ideal));
            Ok((r.finish(), false))
        }
        Command::Quotient { input, beta, cap } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_presentation_file(&text).map_err(|e| e.to_string())?;
            let beta: Vec<Int> = beta
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Int>()
                        .map_err(|_| format!("bad entry '{t}' in --beta"))
                })
                .collect::<Result<_, _>>()?;
            let q = git_quotient_presentation(&file.presentation, &beta, cap, &[])
                .map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "quotient");
            r.kv("exponent", q.exponent.to_string());
            r.kv(
                "nontrivial_invariants",
                if q.nontrivial_invariants { "true" } else { "false" },
            );
            r.kv("generator_count", q.generators_used.len().to_string());
            r.kv("kernel", fmt_ideal(&q.presentation.ideal));
            Ok((r.finish(), false))
        }
        Command::Hypertoric { input } => {
            let (text, hash) = read_input(&input)?;
            let file = input::parse_hypertoric_file(&text).map_err(|e| e.to_string())?;
            let report = hypertoric_total_space(&file.spec).map_err(|e| e.to_string())?;
            let mut r = Report::new(format);
            header(&mut r, &input, &hash);
            r.kv("command", "hypertoric");
            r.kv("d", file.spec.d().to_string());
            warn_repeated_forms(&mut r, &report.arrangement);
            emit_hilbert(&mut r, &report.presentation);
            r.kv("sF_identity", "true");
            r.kv("AB_identity", "true");
            r.kv("detA_unit", "true");
            r.kv("moment_ideal", fmt_ideal(&report.moment_ideal));
            r.kv(
                "delta_smooth",
                if report.delta_smooth { "true" } else { "false" },
            );
            r.kv("recognized", if report.recognized { "true" } else { "false" });
            let mut all = true;
            for (cone, rep) in &report.reports {
                emit_cone_report(&mut r, &format!("cone[{}]", cone.label()), rep);
                all &= rep.prime_certified;
            }
            r.kv("well_poised", if all { "true" } else { "false" });
            Ok((r.finish(), !(all && report.recognized)))
        }
    }
}

fn warn_repeated_forms(r: &mut Report, spec: &wellpoised::arrangement::ArrangementSpec) {
    if spec.has_repeated_forms() {
        r.kv(
            "warning",
            "repeated linear forms: the pullback divisor may define a non-normal variety",
        );
    }
}

fn header(r: &mut Report, input: &PathBuf, hash: &str) {
    r.kv("input", input.display().to_string());
    r.kv("hash", hash);
}

fn load_weights(
    file: &input::DivisorFile,
    path: Option<&PathBuf>,
) -> Result<Vec<Vec<Rat>>, String> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            input::parse_weights_file(&text, file.spec.m + file.spec.lattice_rank)
                .map_err(|e| e.to_string())
        }
        None => {
            if file.weights.is_empty() {
                Err("no weights: none in the input file and no --weights given".into())
            } else {
                Ok(file.weights.clone())
            }
        }
    }
}

fn emit_hilbert(r: &mut Report, pres: &wellpoised::semicanonical::SemiCanonicalPresentation) {
    let elems: Vec<String> = pres
        .coordinates
        .elements
        .iter()
        .map(|h| fmt_int_vec(h))
        .collect();
    r.kv("hilbert_basis", elems.join(" "));
    r.kv("variables", pres.variables.join(","));
}

fn emit_presentation(r: &mut Report, pres: &wellpoised::semicanonical::SemiCanonicalPresentation) {
    emit_hilbert(r, pres);
    r.kv("presentation", fmt_ideal(&pres.presentation_ideal));
}

fn emit_cone_report(r: &mut Report, key: &str, rep: &ConeLiftReport) {
    r.kv(&format!("{key}.weight"), fmt_rat_vec(&rep.weight));
    r.kv(&format!("{key}.lifted"), fmt_rat_vec(&rep.lifted_weight));
    r.kv(
        &format!("{key}.irreducible"),
        rep.condition_irreducible.to_string(),
    );
    r.kv(
        &format!("{key}.initial_generates"),
        if rep.condition_initial_generates { "true" } else { "false" },
    );
    r.kv(
        &format!("{key}.degree_polyhedra"),
        if rep.condition_degree_polyhedra { "true" } else { "false" },
    );
    r.kv(&format!("{key}.base_initial"), fmt_ideal(&rep.base_initial));
    r.kv(&format!("{key}.in_w"), fmt_ideal(&rep.in_w_jd));
    r.kv(&format!("{key}.degenerate"), fmt_ideal(&rep.jd_w));
    r.kv(
        &format!("{key}.equal"),
        if rep.ideals_equal { "true" } else { "false" },
    );
    r.kv(
        &format!("{key}.prime"),
        if rep.prime_certified { "true" } else { "false" },
    );
}
