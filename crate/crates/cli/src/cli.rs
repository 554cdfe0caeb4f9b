//! Argument parsing and command dispatch.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use toric_cobordism::coeff::LawKind;
use toric_cobordism::equivariant::{graded_rank_pp, psi_slice_rank, EquivariantModel};
use toric_cobordism::fan::{validate_fan, Fan};
use toric_cobordism::fgl::FormalGroupLaw;
use toric_cobordism::ordinary::{
    build_presentation, reduction_system, specialize, GradedRankTable, Presentation, Specialization,
};

use crate::acceptance::{self, SuiteConfig};
use crate::error::{CliError, CliResult};
use crate::fanfile::{self, FanFile, LIBRARY_ENV};
use crate::parse::parse_polynomial;
use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LawArg {
    Additive,
    Multiplicative,
    Universal,
}

impl From<LawArg> for LawKind {
    fn from(l: LawArg) -> Self {
        match l {
            LawArg::Additive => LawKind::Additive,
            LawArg::Multiplicative => LawKind::Multiplicative,
            LawArg::Universal => LawKind::UniversalRational,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Chow,
    Ktheory,
}

/// Algebraic cobordism rings of smooth toric varieties.
#[derive(Debug, Parser)]
#[command(name = "toric-cobordism", version)]
pub struct Cli {
    /// Fan file, or the name of a fan in the library directory or the bundled set.
    #[arg(long, global = true)]
    pub fan: Option<String>,
    /// Formal group law.
    #[arg(long, global = true, value_enum, default_value_t = LawArg::Universal)]
    pub law: LawArg,
    /// Coefficients of degree below -D are truncated.
    #[arg(long = "coeff-bound", global = true, default_value_t = 3)]
    pub coeff_bound: u32,
    /// 1-based index of the maximal cone to eliminate.
    #[arg(long = "base-cone", global = true)]
    pub base_cone: Option<usize>,
    /// Plain text, or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    pub format: FormatArg,
    /// Directory searched for `<name>.json` fan files.
    #[arg(long, global = true, env = LIBRARY_ENV)]
    pub library: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check primitivity, smoothness and the fan condition.
    Validate,
    /// Stanley-Reisner ideal, u classes and the degreewise Psi check.
    Equivariant {
        /// Check degrees 0..=K.
        #[arg(long = "max-degree", default_value_t = 3)]
        max_degree: u32,
    },
    /// Relations, rewrite rules and the rank table of the ordinary ring.
    Ordinary,
    /// Normal form of a polynomial in t1..tr.
    Nf { polynomial: String },
    /// Rank table of the Chow ring or K-theory.
    Specialize {
        #[arg(value_enum)]
        target: TargetArg,
    },
    /// Run the acceptance suite.
    Selftest,
}

/// Output text and exit status.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

struct Config {
    law: LawKind,
    coeff_bound: u32,
    base_cone: Option<usize>,
    format: Format,
}

pub fn run(cli: Cli) -> CliResult<Outcome> {
    let cfg = Config {
        law: cli.law.into(),
        coeff_bound: cli.coeff_bound,
        base_cone: cli.base_cone,
        format: match cli.format {
            FormatArg::Human => Format::Human,
            FormatArg::Machine => Format::Machine,
        },
    };
    if let Command::Selftest = cli.command {
        return Ok(selftest(&cfg));
    }
    let spec = cli.fan.as_deref().ok_or_else(|| CliError::Input("--fan is required".into()))?;
    let file = fanfile::resolve(spec, cli.library.as_deref())?;
    if let Command::Validate = cli.command {
        return validate(&file, &cfg);
    }
    let fan = file.to_fan()?;
    let name = file.display_name();
    let out = match cli.command {
        Command::Equivariant { max_degree } => equivariant(&fan, &name, &cfg, max_degree)?,
        Command::Ordinary => ordinary(&fan, &name, &cfg)?,
        Command::Nf { polynomial } => normal_form(&fan, &cfg, &polynomial)?,
        Command::Specialize { target } => specialize_cmd(&fan, &name, &cfg, target)?,
        Command::Validate | Command::Selftest => unreachable!(),
    };
    Ok(Outcome::ok(out))
}

fn validate(file: &FanFile, cfg: &Config) -> CliResult<Outcome> {
    let data = file.to_data()?;
    let report = validate_fan(&data)?;
    let valid = report.is_ok();
    let fan = if valid { Some(Fan::new(data.clone())?) } else { None };
    let r = ValidateReport {
        name: file.display_name(),
        valid,
        complete: fan.as_ref().map(Fan::is_complete),
        rays: data.rays.len(),
        max_cones: data.max_cones.len(),
        violations: report.violations.iter().map(ToString::to_string).collect(),
    };
    Ok(Outcome { output: r.render(cfg.format), code: if valid { 0 } else { 1 } })
}

fn ray_name(r: usize) -> String {
    format!("t{}", r + 1)
}

fn equivariant(fan: &Fan, name: &str, cfg: &Config, max_degree: u32) -> CliResult<String> {
    let law = FormalGroupLaw::new(cfg.law, cfg.coeff_bound, max_degree.max(1));
    let model = EquivariantModel::new(fan, &law);
    let cone_labels: Vec<String> = fan.max_cones().iter().map(ToString::to_string).collect();
    let u_table = (0..fan.num_rays())
        .map(|r| {
            let u = model.u_class(r);
            let components = fan
                .max_cones()
                .iter()
                .zip(&u.components)
                .zip(&cone_labels)
                .map(|((cone, c), label)| (label.clone(), c.display_with(|j| ray_name(cone.rays()[j])).to_string()))
                .collect();
            URow { ray: r + 1, components }
        })
        .collect();
    let mut degrees = Vec::new();
    for k in 0..=max_degree {
        let (psi_rank, count, compatible) = psi_slice_rank(&model, k)?;
        degrees.push(PsiRow { degree: k, standard_monomials: count, rank_pp: graded_rank_pp(fan, k), psi_rank, compatible });
    }
    let isomorphism_holds = degrees.iter().all(|d| d.compatible && d.psi_rank == d.standard_monomials && d.rank_pp == d.standard_monomials);
    let report = EquivariantReport {
        name: name.to_string(),
        law: cfg.law.name().to_string(),
        coeff_bound: cfg.coeff_bound,
        nonfaces: fan
            .minimal_nonfaces()
            .iter()
            .map(|s| s.rays().iter().map(|&r| ray_name(r)).collect::<Vec<_>>().join("*"))
            .collect(),
        max_cones: cone_labels,
        u_table,
        degrees,
        isomorphism_holds,
    };
    if !report.isomorphism_holds {
        return Err(CliError::Internal(format!("Psi check failed:\n{}", report.human())));
    }
    Ok(report.render(cfg.format))
}

fn base_index(fan: &Fan, cfg: &Config) -> CliResult<Option<usize>> {
    match cfg.base_cone {
        None => Ok(None),
        Some(i) if i >= 1 && i <= fan.max_cones().len() => Ok(Some(i - 1)),
        Some(i) => Err(CliError::Input(format!("--base-cone {i} out of range 1..{}", fan.max_cones().len()))),
    }
}

fn presentation(fan: &Fan, cfg: &Config) -> CliResult<Presentation> {
    Ok(build_presentation(fan, cfg.law, cfg.coeff_bound)?)
}

fn relation_labels(pres: &Presentation) -> Vec<String> {
    let mut labels: Vec<String> = pres.monomial_relations().iter().map(|(c, _)| format!("non-face {c}")).collect();
    labels.extend((0..pres.num_vars()).map(|r| format!("nilpotence {}", ray_name(r))));
    labels.extend(pres.character_relations().iter().map(|(chi, _)| {
        format!("character ({})", chi.coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }));
    labels
}

fn ordinary(fan: &Fan, name: &str, cfg: &Config) -> CliResult<String> {
    let pres = presentation(fan, cfg)?;
    let sys = reduction_system(&pres, base_index(fan, cfg)?)?;
    let table = GradedRankTable::compute(&pres, Some(sys.reduced().base_cone_index()))?;
    let ranks = rank_rows(&table);
    let base = sys.reduced().base_cone();
    let report = OrdinaryReport {
        name: name.to_string(),
        law: cfg.law.name().to_string(),
        coeff_bound: cfg.coeff_bound,
        variables: pres.variable_names(),
        base_cone: format!("{} = {}", sys.reduced().base_cone_index() + 1, base),
        relations: relation_labels(&pres)
            .into_iter()
            .zip(pres.relations())
            .map(|(label, s)| LabeledPoly { label, poly: PolyRecord::from_series(s) })
            .collect(),
        substitutions: base
            .rays()
            .iter()
            .map(|&r| LabeledPoly { label: ray_name(r), poly: PolyRecord::from_series(&sys.reduced().substitution()[r]) })
            .collect(),
        basis: sys.basis().iter().map(PolyRecord::from_series).collect(),
        rules: sys
            .rules()
            .iter()
            .map(|(m, tail)| LabeledPoly { label: m.display_with(ray_name).to_string(), poly: PolyRecord::from_series(tail) })
            .collect(),
        total_rank: table.total(),
        ranks,
    };
    Ok(report.render(cfg.format))
}

fn normal_form(fan: &Fan, cfg: &Config, text: &str) -> CliResult<String> {
    let pres = presentation(fan, cfg)?;
    let sys = reduction_system(&pres, base_index(fan, cfg)?)?;
    let x = parse_polynomial(text, &pres.zero())?;
    let nf = sys.normal_form(&x)?;
    let report = NormalFormReport {
        input: text.to_string(),
        law: cfg.law.name().to_string(),
        base_cone: format!("{} = {}", sys.reduced().base_cone_index() + 1, sys.reduced().base_cone()),
        normal_form: PolyRecord::from_series(nf.series()),
    };
    Ok(report.render(cfg.format))
}

fn specialize_cmd(fan: &Fan, name: &str, cfg: &Config, target: TargetArg) -> CliResult<String> {
    let target = match target {
        TargetArg::Chow => Specialization::Chow,
        TargetArg::Ktheory => Specialization::KTheory,
    };
    let pres = specialize(&presentation(fan, cfg)?, target)?;
    let table = GradedRankTable::compute(&pres, base_index(fan, cfg)?)?;
    let report = SpecializeReport {
        name: name.to_string(),
        target: target.name().to_string(),
        law: pres.kind().name().to_string(),
        coeff_bound: pres.coeff_bound(),
        ranks: rank_rows(&table),
        total_rank: table.total(),
    };
    Ok(report.render(cfg.format))
}

fn selftest(cfg: &Config) -> Outcome {
    let suite = SuiteConfig { law: cfg.law, coeff_bound: cfg.coeff_bound, ..SuiteConfig::default() };
    let results = acceptance::run_all(&suite);
    let all = results.iter().all(|r| r.passed);
    let output = match cfg.format {
        Format::Human => acceptance::summary(&results, &suite),
        Format::Machine => {
            let doc: BTreeMap<&str, serde_json::Value> = BTreeMap::from([
                ("law", serde_json::Value::from(suite.law.name())),
                ("coeff_bound", serde_json::Value::from(suite.coeff_bound)),
                ("passed", serde_json::Value::from(all)),
                ("criteria", serde_json::to_value(&results).expect("serializable")),
            ]);
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    Outcome { output, code: if all { 0 } else { 2 } }
}
