use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coset_core::dot::{labeled_to_dot, poset_to_dot};
use coset_core::error::ErrorClass;
use coset_core::expr::GroupExpr;
use coset_core::group::Group;
use coset_core::homology::{betti, euler_consistent, is_seq_cm, predicted_spheres_in, Field, CM_FACE_CAP};
use coset_core::labeling::{build_context, LabeledHasse, LevelConvention};
use coset_core::lattice::SubgroupLattice;
use coset_core::poset::coset_lattice_in;
use coset_core::report::{report_for_group, ReportOptions, SCHEMA_VERSION};
use coset_core::shelling::{facet_order_unverified, falling_chains, verify_coel, verify_shelling};
use coset_core::Error;
use serde_json::{json, Value};

const EXIT_REFUSED: u8 = 2;
const EXIT_FAILED: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "coset", version, about = "Coset posets, coset lattice labelings and shellability checks for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = 128)]
    max_order: usize,
}

#[derive(Args)]
struct Target {
    /// Group expression, e.g. "Z6", "Z2 x S3", "E2^3".
    group: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Levels {
    Lex,
    Prime,
}

impl From<Levels> for LevelConvention {
    fn from(l: Levels) -> Self {
        match l {
            Levels::Lex => LevelConvention::Lex,
            Levels::Prime => LevelConvention::Prime,
        }
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p: u64 = s.parse().map_err(|_| format!("expected q or a prime, got {s:?}"))?;
    Field::Prime(p).check().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Solvability, supersolvability, Sylow structure and complementation.
    Classify(Target),
    /// Sizes of the coset poset and its order complex.
    Poset {
        #[command(flatten)]
        target: Target,
        /// Write the Hasse diagram of the coset lattice as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the facets of the order complex, one per line.
        #[arg(long)]
        facets: Option<PathBuf>,
    },
    /// Build the cover labeling of the coset lattice.
    Label {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Levels::Lex)]
        levels: Levels,
        /// Write the labeled Hasse diagram as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check the labeling on every interval and the induced shelling.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Levels::Lex)]
        levels: Levels,
    },
    /// Reduced Betti numbers of the coset poset.
    Homology {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: Field,
        /// Also run the sequential Cohen-Macaulay check.
        #[arg(long)]
        cm: bool,
    },
    /// Everything above, with cross-checks.
    Report {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: Field,
        #[arg(long, value_enum, default_value_t = Levels::Lex)]
        levels: Levels,
    },
}

enum Outcome {
    Ok,
    Failed,
}

struct Output {
    json: Value,
    text: String,
    outcome: Outcome,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            outcome: Outcome::Ok,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"));
            } else {
                print!("{}", out.text);
            }
            match out.outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Failed => ExitCode::from(EXIT_FAILED),
            }
        }
        Err(e) => {
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "error": { "code": e.code(), "message": e.to_string() },
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("errors serialize"));
            }
            eprintln!("error [{}]: {e}", e.code());
            ExitCode::from(exit_code(e.class()))
        }
    }
}

fn exit_code(class: ErrorClass) -> u8 {
    match class {
        ErrorClass::Refused => EXIT_REFUSED,
        ErrorClass::Verification => EXIT_FAILED,
        ErrorClass::Input => EXIT_INPUT,
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Classify(t) => {
            let (name, g) = build(t, cli.max_order)?;
            classify(&name, &g)
        }
        Command::Poset { target, dot, facets } => {
            let (name, g) = build(target, cli.max_order)?;
            poset(&name, &g, dot.as_deref(), facets.as_deref())
        }
        Command::Label { target, levels, dot } => {
            let (name, g) = build(target, cli.max_order)?;
            label(&name, &g, (*levels).into(), dot.as_deref())
        }
        Command::Verify { target, levels } => {
            let (name, g) = build(target, cli.max_order)?;
            verify(&name, &g, (*levels).into())
        }
        Command::Homology { target, field, cm } => {
            let (name, g) = build(target, cli.max_order)?;
            homology(&name, &g, *field, *cm)
        }
        Command::Report { target, field, levels } => {
            let (name, g) = build(target, cli.max_order)?;
            let options = ReportOptions {
                field: *field,
                levels: (*levels).into(),
                max_order: cli.max_order,
                ..ReportOptions::default()
            };
            let report = report_for_group(&name, &g, &options)?;
            let a = &report.agreement;
            let agrees = a.hall && a.shelling != Some(false) && a.seq_cm != Some(false) && a.spheres != Some(false);
            let text = report_text(&report, agrees);
            Ok(Output {
                json: serde_json::to_value(&report).expect("reports serialize"),
                text,
                outcome: if agrees { Outcome::Ok } else { Outcome::Failed },
            })
        }
    }
}

fn build(t: &Target, max_order: usize) -> Result<(String, Group), Error> {
    let parsed = GroupExpr::parse(&t.group)?;
    let g = parsed.build(max_order)?;
    Ok((parsed.to_string(), g))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

fn classify(name: &str, g: &Group) -> Result<Output, Error> {
    let c = SubgroupLattice::new(g).classify();
    let text = format!(
        "group: {name}\norder: {}\nsolvable: {}\nsupersolvable: {}\nelementary abelian sylows: {}\ncomplemented: {}\n",
        g.order(),
        c.solvable,
        c.supersolvable,
        c.sylows_elementary_abelian,
        c.complemented
    );
    let json = json!({ "schema": SCHEMA_VERSION, "group": name, "order": g.order(), "classification": c });
    Ok(Output::ok(json, text))
}

fn poset(name: &str, g: &Group, dot: Option<&Path>, facets: Option<&Path>) -> Result<Output, Error> {
    let lat = SubgroupLattice::new(g);
    let lattice = coset_lattice_in(&lat)?;
    let proper = lattice.proper_part();
    if let Some(path) = dot {
        write_file(path, &poset_to_dot(&lattice))?;
    }
    let faces = proper.count_chains();
    if let Some(path) = facets {
        write_file(path, &proper.order_complex()?.to_text())?;
    }
    let chains = proper.count_maximal_chains();
    let text = format!(
        "group: {name}\nsubgroups: {}\ncosets: {}\ncovers: {}\nmaximal chains: {chains}\nfaces: {faces}\n",
        lat.len(),
        proper.len(),
        proper.covers().len()
    );
    let json = json!({
        "schema": SCHEMA_VERSION,
        "group": name,
        "subgroups": lat.len(),
        "cosets": proper.len(),
        "covers": proper.covers().len(),
        "maximal_chains": chains,
        "faces": faces,
    });
    Ok(Output::ok(json, text))
}

fn labeled(g: &Group, levels: LevelConvention) -> Result<LabeledHasse, Error> {
    build_context(g, levels)?.labeled_hasse()
}

fn label(name: &str, g: &Group, levels: LevelConvention, dot: Option<&Path>) -> Result<Output, Error> {
    let lh = labeled(g, levels)?;
    if let Some(path) = dot {
        write_file(path, &labeled_to_dot(&lh))?;
    }
    let l = lh.lattice();
    let covers: Vec<Value> = lh
        .labels()
        .iter()
        .map(|(&(a, b), &v)| json!({ "lower": l.render(a), "upper": l.render(b), "label": v }))
        .collect();
    let json = json!({ "schema": SCHEMA_VERSION, "group": name, "covers": covers });
    Ok(Output::ok(json, lh.dump()))
}

fn verify(name: &str, g: &Group, levels: LevelConvention) -> Result<Output, Error> {
    let lh = labeled(g, levels)?;
    let coel = verify_coel(&lh)?;
    let mut text = format!("group: {name}\nintervals checked: {}\n", coel.intervals_checked);
    let mut json = json!({ "schema": SCHEMA_VERSION, "group": name, "coel": coel });
    if !coel.ok {
        text.push_str(&format!("labeling: FAILED on {} intervals\n", coel.violations.len()));
        for v in coel.violations.iter().take(5) {
            text.push_str(&format!(
                "  [{}, {}]: {:?}, {} increasing chains\n",
                lh.lattice().render(v.lower),
                lh.lattice().render(v.upper),
                v.kind,
                v.increasing_chains
            ));
        }
        return Ok(Output {
            json,
            text,
            outcome: Outcome::Failed,
        });
    }
    text.push_str("labeling: ok\n");
    let k = lh.lattice().proper_part().order_complex()?;
    let order = facet_order_unverified(&lh)?;
    let verdict = verify_shelling(&k, &order)?;
    // a discrete set of points has no ridges to glue along
    let points = k.dim() == 0;
    let shelled = verdict.holds || points;
    let falling = falling_chains(&lh)?.len();
    match &verdict.violation {
        Some(v) if !points => text.push_str(&format!("shelling: FAILED at facet {}\n", v.index)),
        _ => text.push_str(&format!("shelling: ok ({} facets)\n", order.len())),
    }
    text.push_str(&format!("falling chains: {falling}\n"));
    json["shelling"] = json!(verdict);
    json["zero_dimensional"] = json!(points);
    json["falling_chains"] = json!(falling);
    Ok(Output {
        json,
        text,
        outcome: if shelled { Outcome::Ok } else { Outcome::Failed },
    })
}

fn homology(name: &str, g: &Group, field: Field, cm: bool) -> Result<Output, Error> {
    let lat = SubgroupLattice::new(g);
    let proper = coset_lattice_in(&lat)?.proper_part();
    let faces = proper.count_chains();
    if cm && faces > CM_FACE_CAP as u128 {
        return Err(Error::ComplexTooLarge {
            faces: faces as usize,
            cap: CM_FACE_CAP,
        });
    }
    let k = proper.order_complex()?;
    let b = betti(&k, field)?;
    let euler = euler_consistent(&k, &b);
    let predicted = predicted_spheres_in(&lat).ok();
    let mut text = format!("group: {name}\nfield: {field}\nreduced betti: {:?}\neuler consistent: {euler}\n", b.ranks);
    match &predicted {
        Some(s) => text.push_str(&format!("predicted spheres: {} of dimension {}\n", s.count, s.dimension)),
        None => text.push_str("predicted spheres: n/a\n"),
    }
    let mut json = json!({
        "schema": SCHEMA_VERSION,
        "group": name,
        "faces": faces,
        "betti": b,
        "euler_consistent": euler,
        "predicted_spheres": predicted,
    });
    if cm {
        let verdict = is_seq_cm(&k, field)?;
        text.push_str(&format!("sequentially cohen-macaulay: {}\n", verdict.holds));
        json["seq_cm"] = json!(verdict);
    }
    let outcome = if euler { Outcome::Ok } else { Outcome::Failed };
    Ok(Output { json, text, outcome })
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn report_text(r: &coset_core::report::Report, agrees: bool) -> String {
    let c = &r.classification;
    let mut out = format!(
        "group: {} (order {})\ncomplemented: {}  supersolvable: {}  elementary abelian sylows: {}\n",
        r.group, r.order, c.complemented, c.supersolvable, c.sylows_elementary_abelian
    );
    out.push_str(&format!(
        "coset poset: {} cosets, {} covers, {} faces, dimension {}\n",
        r.poset.cosets, r.poset.covers, r.poset.faces, r.poset.dimension
    ));
    match &r.labeling.refused {
        Some(refusal) => out.push_str(&format!("labeling: refused ({})\n", refusal.code)),
        None => out.push_str(&format!(
            "labeling: built, verified {}, shelling {}, falling chains {}\n",
            yes_no(r.labeling.coel.as_ref().map(|e| e.ok)),
            yes_no(r.labeling.shelling.as_ref().map(|s| s.convention)),
            r.labeling.falling_chains.map_or("n/a".to_string(), |n| n.to_string())
        )),
    }
    match &r.betti {
        Some(b) => out.push_str(&format!("reduced betti over {}: {:?}\n", b.field, b.ranks)),
        None => out.push_str("reduced betti: skipped\n"),
    }
    if let Some(s) = &r.predicted_spheres {
        out.push_str(&format!("predicted spheres: {} of dimension {}\n", s.count, s.dimension));
    }
    out.push_str(&format!("sequentially cohen-macaulay: {}\n", yes_no(r.seq_cm.as_ref().map(|v| v.holds))));
    out.push_str(&format!("agreement: {}\n", if agrees { "ok" } else { "MISMATCH" }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(Error::NotSupersolvable.class()), 2);
        assert_eq!(exit_code(Error::PivotStep.class()), 3);
        assert_eq!(exit_code(Error::Syntax { offset: 0, message: String::new() }.class()), 4);
    }

    #[test]
    fn fields_parse() {
        assert_eq!(parse_field("q"), Ok(Field::Rational));
        assert_eq!(parse_field("3"), Ok(Field::Prime(3)));
        assert!(parse_field("4").is_err());
        assert!(parse_field("r").is_err());
    }
}
