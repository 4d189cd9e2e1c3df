mod report;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use confhom::bv::{
    default_dmax, delta_matrix, equivariant_s1, equivariant_zp, graded_basis, gravity_op_degree,
    Parity,
};
use confhom::enumeration::{d, poincare};
use confhom::sign::sign_rep_homology;
use confhom::{Error, GradedDims, Prime};

use report::{Report, Status, Table};
use verify::{Bounds, Check};

#[derive(Debug, Parser)]
#[command(
    name = "confhom",
    version,
    about = "Mod-p homology of configuration spaces of the plane"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    #[value(name = "S1")]
    S1,
    #[value(name = "Zp")]
    Zp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monomial basis of H_*(C_n(C); F_p).
    Basis {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
    },
    /// Graded dimensions of H_*(C_n(C); F_p).
    Poincare {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
    },
    /// Matrix and ranks of the BV operator.
    Delta {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
        /// Source degree; all degrees when omitted.
        #[arg(long)]
        degree: Option<u64>,
    },
    /// Equivariant homology for the rotation action.
    Equivariant {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        dmax: Option<u64>,
    },
    /// Homology of B_n/Z(B_n) with sign coefficients.
    Sign {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        dmax: Option<u64>,
    },
    /// Output degree of a gravity operation.
    GravityDegree {
        #[arg(long)]
        op_degree: u64,
        #[arg(long)]
        arity: u64,
        #[arg(long)]
        input: u64,
        #[arg(long, value_enum)]
        parity: ParityArg,
    },
    /// Run internal consistency checks.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 24)]
        max_n: u64,
        #[arg(long, default_value_t = 4)]
        max_q: u64,
    },
}

struct Output {
    report: Report,
    table: Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (out, status) = match execute(&cli.command) {
        Ok(out) => {
            let status = out.report.status;
            (Some(out), status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let status = match e {
                Error::InvariantViolation(_) => Status::Failed,
                Error::Domain(_) | Error::Unsupported(_) => Status::Unsupported,
            };
            (None, status)
        }
    };
    if let Some(out) = out {
        let text = match cli.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&out.report).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => out.table.render_text(),
            Format::Csv => out.table.render_csv(),
        };
        print!("{text}");
    }
    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    ExitCode::from(status.exit_code() as u8)
}

fn dims_table(dims: &GradedDims) -> Table {
    let mut t = Table::new(["degree", "dim"]);
    for (deg, n) in dims.iter() {
        t.push([deg, n]);
    }
    t
}

fn ok(command: &str, params: Value, result: Value, table: Table) -> Output {
    Output {
        report: Report {
            command: command.to_string(),
            params,
            result,
            status: Status::Ok,
        },
        table,
    }
}

fn execute(cmd: &Command) -> confhom::Result<Output> {
    match *cmd {
        Command::Basis { p, n } => {
            let pr = Prime::new(p)?;
            let mut rows = Vec::new();
            let mut table = Table::new(["monomial", "degree", "weight"]);
            for ms in graded_basis(n, pr).values() {
                for m in ms {
                    table.push([
                        m.to_string(),
                        m.degree().to_string(),
                        m.weight().to_string(),
                    ]);
                    rows.push(json!({
                        "monomial": m.to_string(),
                        "degree": m.degree(),
                        "weight": m.weight(),
                    }));
                }
            }
            Ok(ok("basis", json!({ "p": p, "n": n }), json!(rows), table))
        }
        Command::Poincare { p, n } => {
            let pr = Prime::new(p)?;
            let dims = poincare(n, pr);
            let result = json!({ "dims": dims, "total": d(n, pr) });
            Ok(ok(
                "poincare",
                json!({ "p": p, "n": n }),
                result,
                dims_table(&dims),
            ))
        }
        Command::Delta { p, n, degree } => {
            let pr = Prime::new(p)?;
            let basis = graded_basis(n, pr);
            let degrees: Vec<u64> = match degree {
                Some(deg) => vec![deg],
                None => basis.keys().copied().collect(),
            };
            let mut blocks = Vec::new();
            let mut table = Table::new(["degree", "rows", "cols", "rank"]);
            for deg in degrees {
                let mat = delta_matrix(n, pr, deg);
                let rank = mat.rank();
                let entries: Vec<Vec<u32>> = (0..mat.rows())
                    .map(|i| (0..mat.cols()).map(|j| mat.get(i, j)).collect())
                    .collect();
                let names = |k: u64| -> Vec<String> {
                    basis
                        .get(&k)
                        .map(|ms| ms.iter().map(|m| m.to_string()).collect())
                        .unwrap_or_default()
                };
                table.push([deg as usize, mat.rows(), mat.cols(), rank]);
                blocks.push(json!({
                    "degree": deg,
                    "source": names(deg),
                    "target": names(deg + 1),
                    "matrix": entries,
                    "rank": rank,
                }));
            }
            let params = json!({ "p": p, "n": n, "degree": degree });
            Ok(ok("delta", params, json!(blocks), table))
        }
        Command::Equivariant { group, p, n, dmax } => {
            let pr = Prime::new(p)?;
            let dmax = dmax.unwrap_or_else(|| default_dmax(n));
            let group_name = match group {
                Group::S1 => "S1",
                Group::Zp => "Zp",
            };
            let params = json!({ "group": group_name, "p": p, "n": n, "dmax": dmax });
            match group {
                Group::S1 => {
                    let ans = equivariant_s1(n, pr, dmax);
                    let basis: Vec<Value> = ans
                        .basis
                        .iter()
                        .map(|c| json!({ "monomial": c.monomial.to_string(), "y": c.y, "degree": c.degree }))
                        .collect();
                    let result = json!({ "regime": ans.regime, "dims": ans.dims, "basis": basis });
                    Ok(ok("equivariant", params, result, dims_table(&ans.dims)))
                }
                Group::Zp => {
                    let dims = equivariant_zp(n, pr, dmax)?;
                    let result = json!({ "dims": dims });
                    Ok(ok("equivariant", params, result, dims_table(&dims)))
                }
            }
        }
        Command::Sign { p, n, q, dmax } => {
            let pr = Prime::new(p)?;
            let dmax = dmax.unwrap_or_else(|| default_dmax(n));
            let dims = sign_rep_homology(n, pr, q, dmax)?;
            let dense = dims.to_dense(dmax);
            let mut table = Table::new(["degree", "dim"]);
            for (deg, v) in dense.iter().enumerate() {
                table.push([deg as u64, *v]);
            }
            let pairs: Vec<[u64; 2]> = dense
                .iter()
                .enumerate()
                .map(|(deg, &v)| [deg as u64, v])
                .collect();
            let params = json!({ "p": p, "n": n, "q": q, "dmax": dmax });
            Ok(ok("sign", params, json!({ "dims": pairs }), table))
        }
        Command::GravityDegree {
            op_degree,
            arity,
            input,
            parity,
        } => {
            let par = match parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            let degree = gravity_op_degree(op_degree, arity, input, par)?;
            let params =
                json!({ "op_degree": op_degree, "arity": arity, "input": input, "parity": par });
            let mut table = Table::new(["degree"]);
            table.push([degree]);
            Ok(ok(
                "gravity-degree",
                params,
                json!({ "degree": degree }),
                table,
            ))
        }
        Command::Verify {
            check,
            p,
            max_n,
            max_q,
        } => {
            let pr = Prime::new(p)?;
            let results = verify::run(
                check,
                Bounds {
                    p: pr,
                    max_n,
                    max_q,
                },
            );
            let passed = results.iter().all(|r| r.passed);
            let mut table = Table::new(["check", "result"]);
            for r in &results {
                table.push([r.name.as_str(), if r.passed { "pass" } else { "FAIL" }]);
            }
            let params = json!({ "check": check.name(), "p": p, "max_n": max_n, "max_q": max_q });
            let mut out = ok("verify", params, json!(results), table);
            if !passed {
                out.report.status = Status::Failed;
            }
            Ok(out)
        }
    }
}
