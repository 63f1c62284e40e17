//! The subcommands, each producing a [`Report`].

use gradhecke::combin::{
    blocks, codegree, degree, graded_dim, graded_dim_algebra, is_positive, multipartitions, standard_tableaux,
    std_of_residue, Multipartition, QuiverData, RootVector, StandardTableau,
};
use gradhecke::graded::{Basis, Block, Graded, LaurentMatrix, PairMatrix};
use gradhecke::hecke::Element;
use gradhecke::klr::{Klr, KlrConfig};
use gradhecke::linalg::Matrix;
use gradhecke::scalars::{BaseField, Laurent, Scalar};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::{Report, Table};

/// Which subcommand to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Tableaux,
    Gdim { census: bool },
    Blocks,
    Idempotents,
    Relations,
    Basis,
    Gram,
    Decomp,
    Pairing,
    AppendixZ,
    Zlambda,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Tableaux => "tableaux",
            Command::Gdim { .. } => "gdim",
            Command::Blocks => "blocks",
            Command::Idempotents => "idempotents",
            Command::Relations => "relations",
            Command::Basis => "basis",
            Command::Gram => "gram",
            Command::Decomp => "decomp",
            Command::Pairing => "pairing",
            Command::AppendixZ => "appendix-z",
            Command::Zlambda => "zlambda",
        }
    }
}

/// Build the report for `cmd` over the field of `F`.
pub fn run<F: BaseField>(cmd: Command, cfg: &RunConfig) -> Result<Report, CliError> {
    let ctx = Ctx::<F>::new(cfg)?;
    let mut report = Report::new(cmd.name(), cfg.to_json());
    match cmd {
        Command::Tableaux => ctx.tableaux(&mut report),
        Command::Gdim { census } => ctx.gdim(&mut report, census)?,
        Command::Blocks => ctx.blocks(&mut report),
        Command::Idempotents => ctx.idempotents(&mut report)?,
        Command::Relations => ctx.relations(&mut report)?,
        Command::Basis => ctx.basis(&mut report)?,
        Command::Gram => ctx.gram(&mut report)?,
        Command::Decomp => ctx.decomp(&mut report)?,
        Command::Pairing => ctx.pairing(&mut report)?,
        Command::AppendixZ => ctx.appendix_z(&mut report)?,
        Command::Zlambda => ctx.zlambda(&mut report)?,
    }
    Ok(report)
}

struct Ctx<F> {
    cfg: RunConfig,
    quiver: QuiverData,
    q: F,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn block_label(beta: &RootVector) -> String {
    Block {
        beta: beta.clone(),
        shapes: Vec::new(),
        defect: 0,
    }
    .label()
}

/// The first few items of a list of failures, for a check detail.
fn first_failures<T: std::fmt::Display>(bad: &[T]) -> Option<String> {
    if bad.is_empty() {
        return None;
    }
    let shown: Vec<String> = bad.iter().take(3).map(T::to_string).collect();
    let more = if bad.len() > 3 { format!(" and {} more", bad.len() - 3) } else { String::new() };
    Some(format!("{}{}", shown.join("; "), more))
}

fn matrix_table<F: Scalar>(name: String, labels: &[String], cols: &[String], m: &Matrix<F>) -> Table {
    let mut t = Table::new(name, cols.to_vec());
    for (i, label) in labels.iter().enumerate() {
        t.push(label.clone(), m.row(i).iter().map(F::to_string).collect());
    }
    t
}

fn laurent_table(name: String, m: &LaurentMatrix) -> Table {
    let mut t = Table::new(name, m.cols.iter().map(Multipartition::to_string).collect());
    for (lam, row) in m.rows.iter().zip(&m.entries) {
        t.push(lam.to_string(), row.iter().map(Laurent::to_string).collect());
    }
    t
}

fn pair_table<F: Scalar>(name: String, m: &PairMatrix<F>, conjugate_cols: bool) -> Table {
    let labels: Vec<String> = m.pairs.iter().map(ToString::to_string).collect();
    let cols: Vec<String> = if conjugate_cols {
        m.pairs.iter().map(|p| p.conjugate().to_string()).collect()
    } else {
        labels.clone()
    };
    matrix_table(name, &labels, &cols, &m.matrix)
}

impl<F: BaseField> Ctx<F> {
    fn new(cfg: &RunConfig) -> Result<Self, CliError> {
        let quiver = QuiverData::new(cfg.e, cfg.multicharge.clone())?;
        let q = F::parse_in(cfg.field, &cfg.q)?;
        Ok(Ctx {
            cfg: cfg.clone(),
            quiver,
            q,
        })
    }

    fn level(&self) -> usize {
        self.quiver.level()
    }

    fn shapes(&self) -> Vec<Multipartition> {
        multipartitions(self.cfg.n, self.level())
    }

    fn algebra_dim(&self) -> u128 {
        (self.level() as u128).pow(self.cfg.n as u32) * factorial(self.cfg.n)
    }

    fn klr(&self) -> Result<Klr<F>, CliError> {
        let dim = self.algebra_dim();
        if dim > self.cfg.max_dim as u128 {
            return Err(CliError::Config(format!(
                "algebra of dimension {} exceeds the cap {}",
                dim, self.cfg.max_dim
            )));
        }
        let config = KlrConfig::new(self.cfg.n, self.q.clone(), self.quiver.clone())?;
        Ok(Klr::new(config)?)
    }

    fn graded(&self) -> Result<Graded<F>, CliError> {
        Ok(Graded::with_max_dim(self.klr()?, self.cfg.max_dim)?)
    }

    fn tableaux(&self, report: &mut Report) {
        let q = &self.quiver;
        let mut shapes = Table::new("shapes", vec!["tableaux".into(), "graded dim".into()]);
        let mut tabs = Table::new(
            "tableaux",
            ["shape", "residues", "degree", "codegree", "positive"].map(String::from).to_vec(),
        );
        let mut bad = Vec::new();
        for lam in self.shapes() {
            let std = standard_tableaux(&lam);
            shapes.push(lam.to_string(), vec![std.len().to_string(), graded_dim(&lam, q).to_string()]);
            for t in std {
                let res = t.residues(q);
                let (d, c) = (degree(&t, q), codegree(&t, q));
                if d + c != q.defect(&RootVector::of_residues(q, &res)) {
                    bad.push(t.to_string());
                }
                tabs.push(
                    t.to_string(),
                    vec![lam.to_string(), join(&res), d.to_string(), c.to_string(), is_positive(&t, q).to_string()],
                );
            }
        }
        report.tables.push(shapes);
        report.tables.push(tabs);
        report.check("deg t + deg t' = defect", bad.is_empty(), first_failures(&bad));
    }

    fn gdim(&self, report: &mut Report, census: bool) -> Result<(), CliError> {
        let q = &self.quiver;
        let mut shapes = Table::new("shapes", vec!["graded dim".into(), "dim".into()]);
        for lam in self.shapes() {
            let g = graded_dim(&lam, q);
            shapes.push(lam.to_string(), vec![g.to_string(), g.at_one().to_string()]);
        }
        let mut blk = Table::new("blocks", vec!["graded dim".into(), "dim".into()]);
        for (beta, lams) in blocks(self.cfg.n, q) {
            let g = lams.iter().fold(Laurent::zero(), |acc, lam| {
                let d = graded_dim(lam, q);
                acc + &d * &d
            });
            blk.push(block_label(&beta), vec![g.to_string(), g.at_one().to_string()]);
        }
        let total = graded_dim_algebra(self.cfg.n, q);
        let want = self.algebra_dim();
        let mut alg = Table::new("algebra", vec!["graded dim".into(), "dim".into(), "l^n n!".into()]);
        alg.push("H", vec![total.to_string(), total.at_one().to_string(), want.to_string()]);
        report.tables.extend([shapes, blk, alg]);
        report.check(
            "graded dimension at t = 1 is l^n n!",
            total.at_one() as u128 == want,
            None,
        );
        if census {
            let g = self.graded()?;
            let mut c = Laurent::zero();
            for j in 0..g.dim() {
                match g.degree_of(g.psi(j))? {
                    Some(d) => c.add_term(d, 1),
                    None => {
                        return Err(CliError::Violation(format!("psi_{} is not homogeneous", g.pair(j))));
                    }
                }
            }
            report.check(
                "graded dimension equals the psi basis census",
                c == total,
                (c != total).then(|| format!("census {}", c)),
            );
        }
        Ok(())
    }

    fn blocks(&self, report: &mut Report) {
        let q = &self.quiver;
        let mut t = Table::new("blocks", ["defect", "shapes", "graded dim"].map(String::from).to_vec());
        for (beta, lams) in blocks(self.cfg.n, q) {
            let g = lams.iter().fold(Laurent::zero(), |acc, lam| {
                let d = graded_dim(lam, q);
                acc + &d * &d
            });
            let names: Vec<String> = lams.iter().map(ToString::to_string).collect();
            t.push(block_label(&beta), vec![q.defect(&beta).to_string(), names.join(" "), g.to_string()]);
        }
        report.tables.push(t);
    }

    fn idempotents(&self, report: &mut Report) -> Result<(), CliError> {
        let k = self.klr()?;
        let h = k.hecke();
        let mut t = Table::new("idempotents", vec!["terms".into(), "tableaux".into()]);
        let mut sum = Element::zero();
        let support: Vec<Vec<i64>> = k.support().cloned().collect();
        for i in &support {
            let e = k.e_idem(i);
            sum = sum + e.clone();
            let tabs = std_of_residue(i, self.level(), &self.quiver).len();
            t.push(join(i), vec![e.len().to_string(), tabs.to_string()]);
        }
        report.tables.push(t);
        report.check("sum of e(i) is 1", sum == h.one(), None);
        let mut bad = Vec::new();
        for i in &support {
            for j in &support {
                let p = h.mul(&k.e_idem(i), &k.e_idem(j));
                let want = if i == j { k.e_idem(i) } else { Element::zero() };
                if p != want {
                    bad.push(format!("e({}) e({})", join(i), join(j)));
                }
            }
        }
        report.check("e(i) e(j) = delta_ij e(i)", bad.is_empty(), first_failures(&bad));
        if self.cfg.degenerate {
            report.check(
                "CRT idempotents equal specialized seminormal idempotents",
                true,
                Some("not available: the degenerate lift needs a p-adic valuation ring".into()),
            );
        } else {
            let bad: Vec<String> = k.crosscheck_idempotents()?.iter().map(|i| join(i)).collect();
            report.check(
                "CRT idempotents equal specialized seminormal idempotents",
                bad.is_empty(),
                first_failures(&bad),
            );
        }
        Ok(())
    }

    fn relations(&self, report: &mut Report) -> Result<(), CliError> {
        let k = self.klr()?;
        let rel = k.check_relations()?;
        let mut t = Table::new("relations", vec!["instances".into(), "pass".into()]);
        for c in &rel.checks {
            t.push(c.name.clone(), vec![c.instances.to_string(), c.passed().to_string()]);
            report.check(c.name.clone(), c.passed(), c.witness.clone());
        }
        report.tables.push(t);
        Ok(())
    }

    fn basis(&self, report: &mut Report) -> Result<(), CliError> {
        let g = self.graded()?;
        let labels: Vec<String> = g.pairs().iter().map(ToString::to_string).collect();
        let mut deg = Table::new("degrees", vec!["deg s + deg t".into(), "deg psi_st".into()]);
        let mut bad_deg = Vec::new();
        for j in 0..g.dim() {
            let want = g.pair_degree(j);
            let got = g.degree_of(g.psi(j))?;
            if got != Some(want) {
                bad_deg.push(labels[j].clone());
            }
            let shown = got.map_or_else(|| "inhomogeneous".to_string(), |d| d.to_string());
            deg.push(labels[j].clone(), vec![want.to_string(), shown]);
        }
        report.tables.push(deg);
        report.check("deg psi_st = deg s + deg t", bad_deg.is_empty(), first_failures(&bad_deg));
        for (of, against) in [(Basis::Psi, Basis::Murphy), (Basis::PsiPrime, Basis::DualMurphy)] {
            let m = g.transition(of, against)?;
            let bad: Vec<String> = g
                .triangularity_violations(&m)
                .into_iter()
                .map(|(i, j)| format!("row {} column {}", labels[i], labels[j]))
                .collect();
            report.check(
                format!("{} to {} transition is unitriangular", of.name(), against.name()),
                bad.is_empty(),
                first_failures(&bad),
            );
            let name = format!("{} in the {} basis (column j expands the j-th element)", of.name(), against.name());
            report.tables.push(matrix_table(name, &labels, &labels, &m));
        }
        Ok(())
    }

    fn gram(&self, report: &mut Report) -> Result<(), CliError> {
        let g = self.graded()?;
        let mut dims = Table::new("simple modules", vec!["dim S".into(), "dim D".into(), "graded dim D".into()]);
        for lam in self.shapes() {
            let gm = g.gram(&lam)?;
            let labels: Vec<String> = gm
                .basis
                .iter()
                .zip(&gm.degrees)
                .map(|(t, d)| format!("{} (deg {})", t, d))
                .collect();
            report.check(format!("Gram form of {} is symmetric", lam), gm.is_symmetric(), None);
            report.check(format!("Gram form of {} respects the grading", lam), gm.respects_grading(), None);
            let ch = gm.simple_character();
            dims.push(
                lam.to_string(),
                vec![gm.basis.len().to_string(), gm.rank().to_string(), ch.graded_dim().to_string()],
            );
            report.tables.push(matrix_table(format!("Gram {}", lam), &labels, &labels, &gm.matrix));
        }
        report.tables.push(dims);
        Ok(())
    }

    fn decomp(&self, report: &mut Report) -> Result<(), CliError> {
        let g = self.graded()?;
        for block in g.blocks() {
            let label = block.label();
            let dec = g.decomposition_matrix(&block)?;
            let cartan = dec.cartan();
            let oracle = g.ungraded_decomposition(&block)?;
            let agree = oracle.entries == dec.at_one();
            report.check(
                format!("Dec({}) at t = 1 matches the ungraded Gram oracle", label),
                agree,
                (!agree).then(|| format!("oracle {:?}", oracle.entries)),
            );
            report.tables.push(laurent_table(format!("Dec {}", label), &dec));
            report.tables.push(laurent_table(format!("Cartan {}", label), &cartan));
        }
        Ok(())
    }

    fn pairing(&self, report: &mut Report) -> Result<(), CliError> {
        let g = self.graded()?;
        for block in g.blocks() {
            let label = block.label();
            let m = g.pairing_matrix(&block)?;
            let mut bad: Vec<String> = m
                .triangularity_violations()
                .into_iter()
                .map(|(a, b)| format!("row {} column {}", m.pairs[a], m.pairs[b].conjugate()))
                .collect();
            bad.extend(m.zero_diagonal().into_iter().map(|a| format!("zero diagonal at {}", m.pairs[a])));
            report.check(
                format!("pairing matrix of {} is triangular with non-zero diagonal", label),
                bad.is_empty(),
                first_failures(&bad),
            );
            report.tables.push(pair_table(format!("pairing {} (columns psi'_vu for (u,v))", label), &m, true));
            let s = g.symmetric_gram(&block)?;
            report.check(
                format!("tau_beta(a b*) on {} is symmetric and non-degenerate", label),
                s.is_symmetric() && s.is_nondegenerate(),
                Some(format!("rank {} of {}", s.rank(), s.pairs.len())),
            );
            report.tables.push(pair_table(format!("symmetric form {}", label), &s, false));
        }
        for lam in self.shapes() {
            let d = g.specht_duality_check(&lam)?;
            report.check(
                format!("S^{} is dual to S_{}", lam, lam.conjugate()),
                d.passed(),
                Some(format!(
                    "rank {} of {}, homogeneous {}, triangular {}",
                    d.rank,
                    d.rows.len(),
                    d.homogeneous,
                    d.triangular
                )),
            );
        }
        Ok(())
    }

    fn appendix_z(&self, report: &mut Report) -> Result<(), CliError> {
        let g = self.graded()?;
        let k = g.klr();
        let mut t = Table::new(
            "z_n",
            ["residues", "exponents", "C", "degree", "deg z"].map(String::from).to_vec(),
        );
        for s in k.config().residues() {
            if self.quiver.lambda_pairing(s) == 0 {
                continue;
            }
            for plus in [true, false] {
                let name = format!("s={} {}", s, if plus { "+" } else { "-" });
                let chk = k.verify_zns(s, plus)?;
                let z = k.z_ns(s, plus)?;
                let dz = if z.is_zero() { None } else { g.degree_of(&z)? };
                let c = chk.constant.as_ref().map_or_else(|| "none".to_string(), F::to_string);
                let shown = dz.map_or_else(|| "inhomogeneous".to_string(), |d| d.to_string());
                t.push(
                    name.clone(),
                    vec![join(&chk.residues), join(&chk.exponents), c, chk.degree.to_string(), shown],
                );
                report.check(format!("z_n^({}) = C e(i) y with C non-zero", name), chk.passed(), None);
                report.check(
                    format!("z_n^({}) is homogeneous of degree 2 sum d_k", name),
                    dz == Some(chk.degree),
                    None,
                );
                report.check(
                    format!("z_n^({}) spans a one dimensional two-sided ideal", name),
                    k.is_one_dimensional_ideal(&z, s, plus)?,
                    None,
                );
            }
        }
        report.tables.push(t);
        Ok(())
    }

    fn zlambda(&self, report: &mut Report) -> Result<(), CliError> {
        let g = self.graded()?;
        let k = g.klr();
        let h = g.hecke();
        let q = &self.quiver;
        let mut t = Table::new("z_lambda", ["terms", "degree", "expected degree"].map(String::from).to_vec());
        for lam in self.shapes() {
            let z = k.z_lambda(&lam)?;
            let block = g.block_of_shape(&lam)?;
            let want = block.defect
                + degree(&StandardTableau::initial(&lam), q)
                + degree(&StandardTableau::initial(&lam.conjugate()), q);
            let got = if z.is_zero() { None } else { g.degree_of(&z)? };
            let shown = got.map_or_else(|| "none".to_string(), |d| d.to_string());
            t.push(lam.to_string(), vec![z.len().to_string(), shown, want.to_string()]);
            let cut = h.product([&k.e_lambda(&lam)?, &z, &k.e_prime_conjugate(&lam)?]);
            report.check(format!("z_{} = e_lambda z e'_lambda'", lam), !z.is_zero() && cut == z, None);
            report.check(
                format!("z_{} is homogeneous of degree defect + deg t^lambda + deg t^lambda'", lam),
                got == Some(want),
                None,
            );
        }
        report.tables.push(t);
        for block in g.blocks() {
            let bad = g.murphy_dual_degree_failures(&block)?;
            report.check(
                format!("m_st n_t's' is homogeneous of degree 2 defect on {}", block.label()),
                bad.is_empty(),
                first_failures(&bad),
            );
        }
        Ok(())
    }
}
