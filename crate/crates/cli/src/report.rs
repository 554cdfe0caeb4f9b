//! Command reports. Each renders as human-readable text or as a single JSON
//! document; polynomials appear in JSON both as display strings and as
//! coefficient/exponent records that parse back exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use toric_cobordism::coeff::{Coeff, Rational};
use toric_cobordism::monomial::Monomial;
use toric_cobordism::ordinary::GradedRankTable;
use toric_cobordism::series::GradedSeries;

use crate::error::{CliError, CliResult};

/// One term `coeff · b^b · t^t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub t: Vec<u32>,
    pub b: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub text: String,
    pub terms: Vec<TermRecord>,
}

impl PolyRecord {
    pub fn from_series(s: &GradedSeries) -> Self {
        let ngen = s.ring().num_generators();
        let mut terms = Vec::new();
        for (t, c) in s.sorted_terms() {
            for (b, q) in c.terms() {
                terms.push(TermRecord { coeff: q.to_string(), t: t.exponents(s.nvars()), b: b.exponents(ngen) });
            }
        }
        PolyRecord { text: s.display().to_string(), terms }
    }

    /// Rebuild in the ring of `template`.
    pub fn to_series(&self, template: &GradedSeries) -> CliResult<GradedSeries> {
        let mut grouped: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for term in &self.terms {
            if term.t.len() > template.nvars() {
                return Err(CliError::Input(format!("term uses {} variables, ring has {}", term.t.len(), template.nvars())));
            }
            let q = Rational::from_str(&term.coeff).map_err(|_| CliError::Input(format!("bad coefficient '{}'", term.coeff)))?;
            grouped
                .entry(Monomial::from_exponents(term.t.clone()))
                .or_default()
                .add_term(Monomial::from_exponents(term.b.clone()), q);
        }
        Ok(GradedSeries::from_terms(template.ring(), template.nvars(), template.poly_bound(), grouped))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

pub trait Report: Serialize {
    fn human(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human(),
            Format::Machine => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateReport {
    pub name: String,
    pub valid: bool,
    pub complete: Option<bool>,
    pub rays: usize,
    pub max_cones: usize,
    pub violations: Vec<String>,
}

impl Report for ValidateReport {
    fn human(&self) -> String {
        if self.valid {
            format!(
                "valid, smooth, complete: {}, rays: {}, max cones: {}\n",
                yes_no(self.complete.unwrap_or(false)),
                self.rays,
                self.max_cones
            )
        } else {
            let mut s = String::from("invalid\n");
            for v in &self.violations {
                let _ = writeln!(s, "  {v}");
            }
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct URow {
    pub ray: usize,
    /// Maximal cone label → component.
    pub components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsiRow {
    pub degree: u32,
    pub standard_monomials: usize,
    pub rank_pp: usize,
    pub psi_rank: usize,
    pub compatible: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivariantReport {
    pub name: String,
    pub law: String,
    pub coeff_bound: u32,
    pub nonfaces: Vec<String>,
    pub max_cones: Vec<String>,
    pub u_table: Vec<URow>,
    pub degrees: Vec<PsiRow>,
    pub isomorphism_holds: bool,
}

impl Report for EquivariantReport {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} ({} law, D = {})", self.name, self.law, self.coeff_bound);
        let ideal = if self.nonfaces.is_empty() { "0".to_string() } else { format!("({})", self.nonfaces.join(", ")) };
        let _ = writeln!(s, "I_Delta = {ideal}");
        let _ = writeln!(s, "u classes (components on {}):", self.max_cones.join(" "));
        for row in &self.u_table {
            let comps: Vec<&str> = self.max_cones.iter().map(|c| row.components[c].as_str()).collect();
            let _ = writeln!(s, "  u{}: {}", row.ray, comps.join(" | "));
        }
        let _ = writeln!(s, "Psi check by degree (standard monomials / piecewise rank / image rank):");
        for r in &self.degrees {
            let _ = writeln!(
                s,
                "  k = {}: {} / {} / {}{}",
                r.degree,
                r.standard_monomials,
                r.rank_pp,
                r.psi_rank,
                if r.compatible { "" } else { " (incompatible image)" }
            );
        }
        let _ = writeln!(s, "Psi isomorphism in these degrees: {}", yes_no(self.isomorphism_holds));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub degree: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral_rank: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub torsion: Vec<String>,
}

pub fn rank_rows(table: &GradedRankTable) -> Vec<RankRow> {
    table
        .ranks
        .iter()
        .enumerate()
        .map(|(k, &rank)| {
            let integral = table.integral.as_ref().map(|t| &t[k]);
            RankRow {
                degree: k,
                rank,
                integral_rank: integral.map(|r| r.rank),
                torsion: integral.map(|r| r.torsion.iter().map(|f| format!("Z/{f}")).collect()).unwrap_or_default(),
            }
        })
        .collect()
}

fn write_ranks(s: &mut String, ranks: &[RankRow], total: usize) {
    for r in ranks {
        let _ = write!(s, "  degree {}: {}", r.degree, r.rank);
        if let Some(z) = r.integral_rank {
            let tor = if r.torsion.is_empty() { "none".to_string() } else { r.torsion.join(" + ") };
            let _ = write!(s, " (Z-rank {z}, torsion {tor})");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "  total: {total}");
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledPoly {
    pub label: String,
    pub poly: PolyRecord,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrdinaryReport {
    pub name: String,
    pub law: String,
    pub coeff_bound: u32,
    pub variables: Vec<String>,
    pub base_cone: String,
    pub relations: Vec<LabeledPoly>,
    pub substitutions: Vec<LabeledPoly>,
    /// Completed basis in the variables outside the base cone.
    pub basis: Vec<PolyRecord>,
    pub rules: Vec<LabeledPoly>,
    pub ranks: Vec<RankRow>,
    pub total_rank: usize,
}

impl Report for OrdinaryReport {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} ({} law, D = {})", self.name, self.law, self.coeff_bound);
        let _ = writeln!(s, "relations:");
        for r in &self.relations {
            let _ = writeln!(s, "  [{}] {}", r.label, r.poly.text);
        }
        let _ = writeln!(s, "base cone {}:", self.base_cone);
        for r in &self.substitutions {
            let _ = writeln!(s, "  {} = {}", r.label, r.poly.text);
        }
        let _ = writeln!(s, "rewrite rules:");
        for r in &self.rules {
            let _ = writeln!(s, "  {} -> {}", r.label, r.poly.text);
        }
        let _ = writeln!(s, "ranks:");
        write_ranks(&mut s, &self.ranks, self.total_rank);
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormalFormReport {
    pub input: String,
    pub law: String,
    pub base_cone: String,
    pub normal_form: PolyRecord,
}

impl Report for NormalFormReport {
    fn human(&self) -> String {
        format!("{}\n", self.normal_form.text)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecializeReport {
    pub name: String,
    pub target: String,
    pub law: String,
    pub coeff_bound: u32,
    pub ranks: Vec<RankRow>,
    pub total_rank: usize,
}

impl Report for SpecializeReport {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} ({} law, D = {})", self.name, self.target, self.law, self.coeff_bound);
        write_ranks(&mut s, &self.ranks, self.total_rank);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use toric_cobordism::coeff::{CoeffRing, LawKind};

    #[test]
    fn records_round_trip() {
        let ring = CoeffRing::new(LawKind::UniversalRational, 3);
        let t = GradedSeries::var(ring, 3, 4, 1);
        let mut c = Coeff::generator(1).scale(&Rational::new(3.into(), 7.into()));
        c.add_term(Monomial::one(), Rational::from_integer((-2).into()));
        let x = t.pow(2).scale_coeff(&c).add(&GradedSeries::var(ring, 3, 4, 0)).unwrap();
        let rec = PolyRecord::from_series(&x);
        let json = serde_json::to_string(&rec).unwrap();
        let back: PolyRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_series(&GradedSeries::zero(ring, 3, 4)).unwrap(), x);
    }
}
