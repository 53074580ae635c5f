use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use contadj::continuity::{
    induced_direct, induced_inverse, is_continuous, verify_theorem, SetFunction,
};
use contadj::harness::{find_discontinuous_gallery, Campaign, CampaignReport, GalleryEntry};
use contadj::io::{self, braced, label_list, FunctionDoc, MonotoneMapDoc, PairDoc, SpaceDoc};
use contadj::{is_adjoint, Error, FiniteSpace, Mask};

/// Finite topologies, closed-set categories, and continuity as adjointness.
///
/// Exit status: 0 when the property holds, 1 when it fails, 2 on invalid input.
#[derive(Debug, Parser)]
#[command(name = "contadj", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a space file and print its canonical closed family.
    Validate { space: PathBuf },
    /// Print the closure of a set of points.
    Closure {
        space: PathBuf,
        /// Comma-separated point labels; "" is the empty set.
        #[arg(long = "set", allow_hyphen_values = true)]
        set: String,
    },
    /// Decide continuity of a function.
    Continuity { function: PathBuf },
    /// Decide whether the induced functor pair is adjoint.
    Adjoint { function: PathBuf },
    /// Print the tables of both induced functors.
    Induced { function: PathBuf },
    /// Full theorem report for one function.
    VerifyOne { function: PathBuf },
    /// Exhaustive check over all small spaces and functions.
    Campaign {
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        /// Permit --max-points 4.
        #[arg(long = "include-4")]
        include_four: bool,
        /// Also list the first K discontinuous functions.
        #[arg(long, value_name = "K")]
        gallery: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

enum Outcome {
    Holds,
    Fails,
}

/// Errors reported with exit status 2.
struct Failure {
    error: Error,
    points: Option<Vec<String>>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            error,
            points: None,
        }
    }
}

#[derive(Serialize)]
struct ErrorDoc {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<(Vec<String>, Vec<String>)>,
}

impl Failure {
    fn offending_pair(&self) -> Option<(Mask, Mask)> {
        match self.error {
            Error::NotClosedUnderUnion(a, b) | Error::NotClosedUnderIntersection(a, b) => {
                Some((a, b))
            }
            _ => None,
        }
    }

    fn labels(&self, mask: Mask) -> Vec<String> {
        (0..64)
            .filter(|p| mask & (1 << p) != 0)
            .map(|p| match &self.points {
                Some(points) if p < points.len() => points[p].clone(),
                _ => p.to_string(),
            })
            .collect()
    }

    fn message(&self) -> String {
        let set = |m| format!("{{{}}}", self.labels(m).join(","));
        match self.error {
            Error::NotClosedUnderUnion(a, b) => format!(
                "closed sets are not closed under union: {} ∪ {} = {} is missing",
                set(a),
                set(b),
                set(a | b)
            ),
            Error::NotClosedUnderIntersection(a, b) => format!(
                "closed sets are not closed under intersection: {} ∩ {} = {} is missing",
                set(a),
                set(b),
                set(a & b)
            ),
            Error::MissingEmptySet => "closed sets do not include the empty set".into(),
            Error::MissingFullSet => "closed sets do not include the full set".into(),
            ref other => other.to_string(),
        }
    }

    fn report(&self, json: bool) {
        if json {
            let doc = ErrorDoc {
                kind: self.error.kind(),
                message: self.message(),
                pair: self
                    .offending_pair()
                    .map(|(a, b)| (self.labels(a), self.labels(b))),
            };
            #[derive(Serialize)]
            struct Wrapper {
                error: ErrorDoc,
            }
            println!("{}", to_json(&Wrapper { error: doc }));
        } else {
            eprintln!("error: {}", self.message());
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())).into())
}

fn load_space(path: &Path) -> Result<FiniteSpace, Failure> {
    let text = read(path)?;
    let doc: SpaceDoc =
        serde_json::from_str(&text).map_err(|e| Failure::from(Error::Format(e.to_string())))?;
    io::space_from_doc(&doc).map_err(|error| Failure {
        error,
        points: Some(doc.points.clone()),
    })
}

fn load_function(path: &Path) -> Result<SetFunction, Failure> {
    let text = read(path)?;
    let doc: FunctionDoc =
        serde_json::from_str(&text).map_err(|e| Failure::from(Error::Format(e.to_string())))?;
    io::function_from_doc(&doc).map_err(Failure::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Holds) => ExitCode::from(0),
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(failure) => {
            failure.report(cli.json);
            ExitCode::from(2)
        }
    }
}

fn verdict(holds: bool) -> Outcome {
    if holds {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { space } => {
            let space = load_space(space)?;
            if json {
                #[derive(Serialize)]
                struct ValidDoc {
                    valid: bool,
                    space: SpaceDoc,
                }
                let doc = ValidDoc {
                    valid: true,
                    space: io::space_to_doc(&space),
                };
                println!("{}", to_json(&doc));
            } else {
                let family: Vec<String> = space
                    .closed_sets()
                    .iter()
                    .map(|&c| braced(&space, c))
                    .collect();
                println!(
                    "valid: {} points, {} closed sets",
                    space.point_count(),
                    space.closed_count()
                );
                println!("closed sets: {}", family.join(", "));
            }
            Ok(Outcome::Holds)
        }
        Command::Closure { space, set } => {
            let space = load_space(space)?;
            let s = io::parse_label_set(&space, set)?;
            let closure = space.closure(&s)?;
            if json {
                #[derive(Serialize)]
                struct ClosureDoc {
                    set: Vec<String>,
                    closure: Vec<String>,
                }
                let doc = ClosureDoc {
                    set: io::labels_of(&space, s.mask()),
                    closure: io::labels_of(&space, closure.mask()),
                };
                println!("{}", to_json(&doc));
            } else {
                println!("{}", label_list(&space, closure.mask()));
            }
            Ok(Outcome::Holds)
        }
        Command::Continuity { function } => {
            let phi = load_function(function)?;
            let v = is_continuous(&phi);
            if json {
                println!("{}", to_json(&io::continuity_to_doc(&phi, &v)));
            } else {
                print!("{}", continuity_text(&phi, v.witness.map(|w| w.mask())));
            }
            Ok(verdict(v.continuous))
        }
        Command::Adjoint { function } => {
            let phi = load_function(function)?;
            let direct = induced_direct(&phi);
            let inverse = induced_inverse(&phi);
            let v = is_adjoint(&direct, &inverse)?;
            if json {
                println!(
                    "{}",
                    to_json(&io::adjunction_to_doc(phi.domain(), phi.codomain(), &v))
                );
            } else if let Some((u, w)) = v.witness {
                let (x, y) = (phi.domain(), phi.codomain());
                let t_u = direct.apply_mask(u.mask()).expect("closed");
                let t_v = inverse.apply_mask(w.mask()).expect("closed");
                let rel = |holds: bool| if holds { "⊆" } else { "⊄" };
                println!("not adjoint");
                println!(
                    "witness U = {}, V = {}",
                    braced(x, u.mask()),
                    braced(y, w.mask())
                );
                println!(
                    "  T_phi(U) = {} {} V",
                    braced(y, t_u),
                    rel(t_u & !w.mask() == 0)
                );
                println!(
                    "  U {} T^phi(V) = {}",
                    rel(u.mask() & !t_v == 0),
                    braced(x, t_v)
                );
            } else {
                println!("adjoint");
            }
            Ok(verdict(v.adjoint))
        }
        Command::Induced { function } => {
            let phi = load_function(function)?;
            let direct = induced_direct(&phi);
            let inverse = induced_inverse(&phi);
            if json {
                #[derive(Serialize)]
                struct InducedDoc {
                    direct: MonotoneMapDoc,
                    inverse: MonotoneMapDoc,
                }
                println!(
                    "{}",
                    to_json(&InducedDoc {
                        direct: io::monotone_map_to_doc(&direct),
                        inverse: io::monotone_map_to_doc(&inverse),
                    })
                );
            } else {
                for (name, m) in [("T_phi", &direct), ("T^phi", &inverse)] {
                    println!("{name}:");
                    for (u, image) in m.entries() {
                        println!(
                            "  {} -> {}",
                            braced(m.source(), u),
                            braced(m.target(), image)
                        );
                    }
                }
            }
            Ok(Outcome::Holds)
        }
        Command::VerifyOne { function } => {
            let phi = load_function(function)?;
            let report = verify_theorem(&phi)?;
            if json {
                println!("{}", to_json(&io::theorem_to_doc(&phi, &report)));
            } else {
                let (x, y) = (phi.domain(), phi.codomain());
                let yes = |b: bool| if b { "yes" } else { "no" };
                println!("continuous: {}", yes(report.continuous));
                println!("adjoint: {}", yes(report.adjoint));
                println!("agree: {}", yes(report.agree));
                if let Some(v) = report.continuity_witness {
                    println!(
                        "continuity witness: V = {}, preimage {} is not closed",
                        braced(y, v.mask()),
                        braced(x, phi.preimage_mask(v.mask()))
                    );
                }
                if let Some((u, v)) = report.adjunction_witness {
                    println!(
                        "adjunction witness: U = {}, V = {}",
                        braced(x, u.mask()),
                        braced(y, v.mask())
                    );
                }
                if let Some((u, v)) = report.converse_witness {
                    println!(
                        "converse witness: U = cl(preimage(V)) = {}, V = {}, image of U = {}",
                        braced(x, u.mask()),
                        braced(y, v.mask()),
                        braced(y, phi.image_mask(u.mask()))
                    );
                }
            }
            Ok(verdict(report.continuous))
        }
        Command::Campaign {
            max_points,
            include_four,
            gallery,
            threads,
        } => {
            let mut campaign = Campaign::new(*max_points).include_four(*include_four);
            if let Some(t) = threads {
                campaign = campaign.threads(*t);
            }
            let report = campaign.run()?;
            let gallery = match gallery {
                Some(k) => Some(find_discontinuous_gallery((*max_points).min(3), *k)?),
                None => None,
            };
            if json {
                println!("{}", to_json(&campaign_doc(&report, gallery.as_deref())));
            } else {
                print!("{}", campaign_text(&report, gallery.as_deref()));
            }
            Ok(verdict(report.mismatches.is_empty()))
        }
    }
}

fn continuity_text(phi: &SetFunction, witness: Option<Mask>) -> String {
    match witness {
        None => "continuous\n".into(),
        Some(v) => format!(
            "not continuous\nwitness V = {}: preimage {} is not closed\n",
            braced(phi.codomain(), v),
            braced(phi.domain(), phi.preimage_mask(v))
        ),
    }
}

#[derive(Serialize)]
struct GalleryDoc {
    function: FunctionDoc,
    #[serde(rename = "V")]
    v: Vec<String>,
    converse_witness: PairDoc,
}

#[derive(Serialize)]
struct CampaignDoc<'a> {
    #[serde(flatten)]
    report: &'a CampaignReport,
    elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    gallery: Option<Vec<GalleryDoc>>,
}

fn campaign_doc<'a>(
    report: &'a CampaignReport,
    gallery: Option<&[GalleryEntry]>,
) -> CampaignDoc<'a> {
    CampaignDoc {
        report,
        elapsed_ms: report.elapsed.as_millis(),
        gallery: gallery.map(|entries| {
            entries
                .iter()
                .map(|e| {
                    let (x, y) = (e.function.domain(), e.function.codomain());
                    let (u, v) = e.converse_pair;
                    GalleryDoc {
                        function: io::function_to_doc(&e.function),
                        v: io::labels_of(y, e.continuity_witness.mask()),
                        converse_witness: PairDoc {
                            u: io::labels_of(x, u.mask()),
                            v: io::labels_of(y, v.mask()),
                        },
                    }
                })
                .collect()
        }),
    }
}

fn campaign_text(report: &CampaignReport, gallery: Option<&[GalleryEntry]>) -> String {
    let mut out = String::new();
    let counts: Vec<String> = report
        .spaces_checked
        .iter()
        .map(|c| format!("n={}: {}", c.points, c.spaces))
        .collect();
    writeln!(out, "campaign up to {} points", report.max_points).unwrap();
    writeln!(out, "spaces: {}", counts.join(", ")).unwrap();
    writeln!(
        out,
        "{:>4} {:>4} {:>12} {:>12} {:>12}",
        "|X|", "|Y|", "space pairs", "functions", "continuous"
    )
    .unwrap();
    for b in &report.blocks {
        writeln!(
            out,
            "{:>4} {:>4} {:>12} {:>12} {:>12}",
            b.domain_points, b.codomain_points, b.space_pairs, b.functions, b.continuous
        )
        .unwrap();
    }
    writeln!(
        out,
        "total: {} functions, {} continuous, {} mismatches",
        report.functions_checked,
        report.continuous_count,
        report.mismatches.len()
    )
    .unwrap();
    for m in &report.mismatches {
        writeln!(
            out,
            "mismatch: X = {:?}, Y = {:?}, map {:?}: {}",
            m.domain_closed_sets, m.codomain_closed_sets, m.mapping, m.message
        )
        .unwrap();
    }
    writeln!(out, "elapsed: {:.3}s", report.elapsed.as_secs_f64()).unwrap();
    if let Some(entries) = gallery {
        writeln!(out, "discontinuous gallery ({} entries):", entries.len()).unwrap();
        for e in entries {
            let (x, y) = (e.function.domain(), e.function.codomain());
            let map: Vec<String> = e
                .function
                .mapping()
                .iter()
                .enumerate()
                .map(|(p, &q)| format!("{}->{}", x.label(p), y.label(q)))
                .collect();
            let family = |s: &FiniteSpace| {
                s.closed_sets()
                    .iter()
                    .map(|&c| braced(s, c))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let (u, v) = e.converse_pair;
            writeln!(
                out,
                "  X = [{}], Y = [{}], map [{}]: V = {}, U = {}",
                family(x),
                family(y),
                map.join(" "),
                braced(y, v.mask()),
                braced(x, u.mask())
            )
            .unwrap();
        }
    }
    out
}
