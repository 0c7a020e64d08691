//! Machine checks of the reflection and Coxeter identities on one bound quiver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    admissible_numbering, admissible_numberings, bilinear_form_graph, coxeter_matrix_graph_with, gram_matrix,
    graph_reflection, sigma_reflect_bound, CartanForms, CoxeterError,
};
use crate::algebra::{cartan_matrix, DEFAULT_DEGREE_CAP};
use crate::polyring::{rat, PolyMatrix, Polynomial};
use crate::quiverdsl::BoundQuiver;

/// Numberings compared by the independence checks.
const NUMBERING_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub degree_cap: usize,
    /// Number of random vector pairs for the form identities.
    pub random_vectors: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            degree_cap: DEFAULT_DEGREE_CAP,
            random_vectors: 8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub identity: String,
    pub status: CheckStatus,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == CheckStatus::Fail)
    }

    pub fn status_of(&self, identity: &str) -> Option<CheckStatus> {
        self.entries.iter().find(|e| e.identity == identity).map(|e| e.status)
    }

    fn push(&mut self, identity: &str, status: CheckStatus, reason: impl Into<String>) {
        self.entries.push(CheckEntry {
            identity: identity.to_string(),
            status,
            reason: reason.into(),
        });
    }

    fn skip(&mut self, identity: &str, reason: &str) {
        self.push(identity, CheckStatus::Skipped, reason);
    }

    /// Pass when every case holds; otherwise fail naming the first bad case.
    fn cases(&mut self, identity: &str, cases: impl IntoIterator<Item = (String, bool)>) {
        let mut count = 0;
        for (label, ok) in cases {
            if !ok {
                self.push(identity, CheckStatus::Fail, format!("fails for {label}"));
                return;
            }
            count += 1;
        }
        if count == 0 {
            self.skip(identity, "no applicable cases");
        } else {
            self.push(identity, CheckStatus::Pass, format!("{count} case(s)"));
        }
    }
}

pub const GRAPH_INVOLUTION: &str = "S_i^2 = E";
pub const GRAPH_COMMUTE: &str = "S_i S_j = S_j S_i for non-neighbours";
pub const GRAPH_BRAID: &str = "S_i S_j S_i - S_j S_i S_j = (q^2 a_ij a_ji - 1)(S_i - S_j) for neighbours";
pub const GRAPH_GRAM: &str = "S_k^T G S_k = G";
pub const GRAPH_FORM_RANDOM: &str = "(s_k x, s_k y)_q = (x, y)_q on random vectors";
pub const GRAPH_NUMBERING: &str = "graph Phi_q is independent of the admissible numbering";
pub const FREE_CARTAN_COXETER: &str = "C_q^T = -Phi_q C_q for I = 0";
pub const FREE_SIGMA_CARTAN: &str = "(sigma_i C)_q = S_i C_q S_i^T at every sink";
pub const FREE_SIGMA_COXETER: &str = "(sigma_i Phi)_q = S_i Phi_q S_i at every sink";
pub const FREE_BRIDGE: &str = "gamma_i = s_i and C_q^{-1} = E - qB for I = 0";
pub const UNIMODULAR: &str = "det C_q = 1 or -1";
pub const GAMMA_INVOLUTION: &str = "gamma_i^2 = E where a_ii(q) = 2";
pub const GAMMA_COMMUTE: &str = "gamma_i gamma_j = gamma_j gamma_i where a_ij(q) = 0";
pub const GAMMA_NON_NEIGHBOURS: &str = "non-commuting gamma reflections at non-neighbours (observation)";
pub const UNITRIANGULAR: &str = "C_q is lower unitriangular in the admissible numbering";
pub const GAMMA_COXETER: &str = "gamma_{a_1} ... gamma_{a_n} = -C_q^T C_q^{-1}";
pub const GAMMA_NUMBERING: &str = "gamma product is independent of the admissible numbering";
pub const PROJ_INJ: &str = "dim P(i) = -Phi_q dim I(i)";
pub const EULER_MATRIX: &str = "C_q^{-1} = -C_q^{-T} Phi_q = Phi_q^T C_q^{-1} Phi_q";
pub const EULER_RANDOM: &str = "<x, y>_q = -<Phi_q y, x>_q = <Phi_q x, Phi_q y>_q on random vectors";
pub const AT_ONE: &str = "Phi_q at q = 1 equals -C^T C^{-1} of the classical Cartan matrix";

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Polynomial> {
    (0..n)
        .map(|_| {
            let deg = rng.gen_range(0..3);
            let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
            Polynomial::from_ints(&coeffs)
        })
        .collect()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Run every identity that applies to `bq`; the rest are reported as skipped.
pub fn verify_identities(bq: &BoundQuiver, opts: &VerifyOptions) -> Result<CheckReport, CoxeterError> {
    let q = &bq.quiver;
    let n = q.n();
    let names = q.vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = CheckReport::default();
    let acyclic = q.is_acyclic();
    let free = bq.relations.is_empty();

    // reflections of the underlying graph, for acyclic quivers only
    let graph: Option<Vec<PolyMatrix>> = acyclic.then(|| {
        (0..n)
            .map(|i| graph_reflection(q, i).expect("acyclic quivers have no loops").matrix)
            .collect()
    });
    let graph_ids = [GRAPH_INVOLUTION, GRAPH_COMMUTE, GRAPH_BRAID, GRAPH_GRAM, GRAPH_FORM_RANDOM];
    match &graph {
        None => graph_ids.iter().for_each(|id| report.skip(id, "NotAcyclic")),
        Some(s) => {
            report.cases(
                GRAPH_INVOLUTION,
                (0..n).map(|i| (names[i].clone(), s[i].mul(&s[i]).is_identity())),
            );
            report.cases(
                GRAPH_COMMUTE,
                pairs(n)
                    .filter(|&(i, j)| q.edge_count(i, j) == 0)
                    .map(|(i, j)| (format!("({}, {})", names[i], names[j]), s[i].mul(&s[j]) == s[j].mul(&s[i]))),
            );
            report.cases(
                GRAPH_BRAID,
                pairs(n).filter(|&(i, j)| q.edge_count(i, j) > 0).map(|(i, j)| {
                    let lhs = s[i].mul(&s[j]).mul(&s[i]).sub(&s[j].mul(&s[i]).mul(&s[j]));
                    let m = (q.edge_count(i, j) * q.edge_count(j, i)) as i64;
                    let factor = Polynomial::from_ints(&[-1, 0, m]);
                    let rhs = s[i].sub(&s[j]).scale(&factor);
                    (format!("({}, {})", names[i], names[j]), lhs == rhs)
                }),
            );
            let g = gram_matrix(q);
            report.cases(
                GRAPH_GRAM,
                (0..n).map(|k| (names[k].clone(), s[k].transpose().mul(&g).mul(&s[k]) == g)),
            );
            if opts.random_vectors == 0 {
                report.skip(GRAPH_FORM_RANDOM, "no random vectors requested");
            } else {
                let mut cases = Vec::new();
                for t in 0..opts.random_vectors {
                    let x = random_vector(&mut rng, n);
                    let y = random_vector(&mut rng, n);
                    let base = bilinear_form_graph(q, &x, &y)?;
                    for k in 0..n {
                        let sx = s[k].mul_vec(&x)?;
                        let sy = s[k].mul_vec(&y)?;
                        let ok = bilinear_form_graph(q, &sx, &sy)? == base;
                        cases.push((format!("sample {t}, vertex {}", names[k]), ok));
                    }
                }
                report.cases(GRAPH_FORM_RANDOM, cases);
            }
        }
    }

    let numberings = if acyclic {
        admissible_numberings(q, NUMBERING_LIMIT)?
    } else {
        Vec::new()
    };
    if !acyclic {
        report.skip(GRAPH_NUMBERING, "NotAcyclic");
    } else if numberings.len() < 2 {
        report.skip(GRAPH_NUMBERING, "only one admissible numbering");
    } else {
        let base = coxeter_matrix_graph_with(q, numberings[0].order())?;
        let mut cases = Vec::new();
        for a in &numberings[1..] {
            cases.push((a.names(q).join(","), coxeter_matrix_graph_with(q, a.order())? == base));
        }
        report.cases(GRAPH_NUMBERING, cases);
    }

    let cartan = cartan_matrix(bq, opts.degree_cap)?;

    // theorems for path algebras of acyclic quivers
    let free_ids = [FREE_CARTAN_COXETER, FREE_SIGMA_CARTAN, FREE_SIGMA_COXETER, FREE_BRIDGE];
    if !acyclic {
        free_ids.iter().for_each(|id| report.skip(id, "NotAcyclic"));
    } else if !free {
        free_ids.iter().for_each(|id| report.skip(id, "relations present"));
    } else {
        let s = graph.as_ref().expect("acyclic quivers have no loops");
        let phi = coxeter_matrix_graph_with(q, numberings[0].order())?;
        report.cases(
            FREE_CARTAN_COXETER,
            [("C_q".to_string(), cartan.transpose() == phi.mul(&cartan).neg())],
        );
        let mut c_cases = Vec::new();
        let mut phi_cases = Vec::new();
        for i in q.sinks() {
            let reflected = sigma_reflect_bound(bq, i)?;
            let c2 = cartan_matrix(&reflected, opts.degree_cap)?;
            c_cases.push((names[i].clone(), c2 == s[i].mul(&cartan).mul(&s[i].transpose())));
            let a2 = admissible_numbering(&reflected.quiver)?;
            let phi2 = coxeter_matrix_graph_with(&reflected.quiver, a2.order())?;
            phi_cases.push((names[i].clone(), phi2 == s[i].mul(&phi).mul(&s[i])));
        }
        report.cases(FREE_SIGMA_CARTAN, c_cases);
        report.cases(FREE_SIGMA_COXETER, phi_cases);
        match CartanForms::new(cartan.clone()) {
            Ok(forms) => {
                let b = PolyMatrix::from_fn(n, |i, j| Polynomial::monomial(rat(q.arrow_count(i, j) as i64), 1));
                let mut cases = vec![(
                    "C_q^{-1}".to_string(),
                    *forms.inverse() == PolyMatrix::identity(n).sub(&b),
                )];
                for i in 0..n {
                    cases.push((names[i].clone(), forms.gamma(i)?.matrix == s[i]));
                }
                report.cases(FREE_BRIDGE, cases);
            }
            Err(e) => report.push(FREE_BRIDGE, CheckStatus::Fail, e.to_string()),
        }
    }

    // identities over the Cartan matrix
    let gated = [
        GAMMA_INVOLUTION,
        GAMMA_COMMUTE,
        GAMMA_NON_NEIGHBOURS,
        UNITRIANGULAR,
        GAMMA_COXETER,
        GAMMA_NUMBERING,
        PROJ_INJ,
        EULER_MATRIX,
        EULER_RANDOM,
        AT_ONE,
    ];
    let forms = match CartanForms::new(cartan) {
        Ok(f) => {
            report.push(UNIMODULAR, CheckStatus::Pass, format!("det C_q = {}", f.cartan().det()));
            f
        }
        Err(CoxeterError::NotUnimodular { det }) => {
            report.skip(UNIMODULAR, &format!("det C_q = {det}"));
            gated.iter().for_each(|id| report.skip(id, "NotUnimodular"));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let a = forms.symmetric();
    let gammas = (0..n).map(|i| forms.gamma(i).map(|r| r.matrix)).collect::<Result<Vec<_>, _>>()?;
    let two = Polynomial::from_int(2);
    report.cases(
        GAMMA_INVOLUTION,
        (0..n)
            .filter(|&i| *a.get(i, i) == two)
            .map(|i| (names[i].clone(), gammas[i].mul(&gammas[i]).is_identity())),
    );
    report.cases(
        GAMMA_COMMUTE,
        pairs(n)
            .filter(|&(i, j)| a.get(i, j).is_zero())
            .map(|(i, j)| {
                let ok = gammas[i].mul(&gammas[j]) == gammas[j].mul(&gammas[i]);
                (format!("({}, {})", names[i], names[j]), ok)
            }),
    );
    let observed: Vec<String> = pairs(n)
        .filter(|&(i, j)| q.edge_count(i, j) == 0)
        .filter(|&(i, j)| gammas[i].mul(&gammas[j]) != gammas[j].mul(&gammas[i]))
        .map(|(i, j)| format!("({}, {})", names[i], names[j]))
        .collect();
    if observed.is_empty() {
        report.push(GAMMA_NON_NEIGHBOURS, CheckStatus::Pass, "none");
    } else {
        report.push(GAMMA_NON_NEIGHBOURS, CheckStatus::Pass, observed.join(" "));
    }

    let phi = forms.coxeter();
    if acyclic {
        let order = numberings[0].order();
        report.cases(
            UNITRIANGULAR,
            [(numberings[0].names(q).join(","), forms.cartan().permuted(order).is_lower_unitriangular())],
        );
        report.cases(
            GAMMA_COXETER,
            [(numberings[0].names(q).join(","), forms.coxeter_by_reflections(order)? == phi)],
        );
        if numberings.len() < 2 {
            report.skip(GAMMA_NUMBERING, "only one admissible numbering");
        } else {
            let mut cases = Vec::new();
            for a in &numberings[1..] {
                cases.push((a.names(q).join(","), forms.coxeter_by_reflections(a.order())? == phi));
            }
            report.cases(GAMMA_NUMBERING, cases);
        }
    } else {
        for id in [UNITRIANGULAR, GAMMA_COXETER, GAMMA_NUMBERING] {
            report.skip(id, "NotAcyclic");
        }
    }

    let c = forms.cartan();
    let mut cases = Vec::new();
    for i in 0..n {
        let p = c.row(i);
        let inj = c.column(i);
        let rhs: Vec<Polynomial> = phi.mul_vec(&inj)?.into_iter().map(|v| -v).collect();
        cases.push((names[i].clone(), p == rhs));
    }
    report.cases(PROJ_INJ, cases);

    let inv = forms.inverse();
    report.cases(
        EULER_MATRIX,
        [
            ("-C^{-T} Phi".to_string(), *inv == inv.transpose().mul(&phi).neg()),
            ("Phi^T C^{-1} Phi".to_string(), *inv == phi.transpose().mul(inv).mul(&phi)),
        ],
    );
    if opts.random_vectors == 0 {
        report.skip(EULER_RANDOM, "no random vectors requested");
    } else {
        let mut cases = Vec::new();
        for t in 0..opts.random_vectors {
            let x = random_vector(&mut rng, n);
            let y = random_vector(&mut rng, n);
            let base = forms.euler(&x, &y)?;
            let px = phi.mul_vec(&x)?;
            let py = phi.mul_vec(&y)?;
            let ok = base == -forms.euler(&py, &x)? && base == forms.euler(&px, &py)?;
            cases.push((format!("sample {t}"), ok));
        }
        report.cases(EULER_RANDOM, cases);
    }

    let one = rat(1);
    let c1 = c.specialize(&one);
    match c1.inverse() {
        Some(c1_inv) => {
            let classical = c1.transpose().mul(&c1_inv).neg();
            report.cases(AT_ONE, [("q = 1".to_string(), phi.specialize(&one) == classical)]);
        }
        None => report.push(AT_ONE, CheckStatus::Fail, "C_q at q = 1 is singular"),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverdsl::parse_quiver;

    fn run(text: &str) -> CheckReport {
        verify_identities(&parse_quiver(text).unwrap(), &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn a3_passes_everything() {
        let r = run("quiver a3 { vertices: 1,2,3; arrows: a: 2->1; b: 2->3; }");
        assert!(r.all_passed(), "{r:#?}");
        for id in [GRAPH_BRAID, FREE_CARTAN_COXETER, FREE_SIGMA_CARTAN, FREE_SIGMA_COXETER, FREE_BRIDGE, AT_ONE] {
            assert_eq!(r.status_of(id), Some(CheckStatus::Pass), "{id}");
        }
    }

    #[test]
    fn first_example_gated_by_relations() {
        let r = run("quiver f { vertices: 1,2,3; arrows: a: 1->2; b: 1->2; d: 2->3; relations: a*d - b*d; }");
        assert!(r.all_passed(), "{r:#?}");
        assert_eq!(r.status_of(FREE_SIGMA_CARTAN), Some(CheckStatus::Skipped));
        assert_eq!(r.status_of(GAMMA_COXETER), Some(CheckStatus::Pass));
        let obs = r.entries.iter().find(|e| e.identity == GAMMA_NON_NEIGHBOURS).unwrap();
        assert_eq!(obs.reason, "(1, 3)");
    }

    #[test]
    fn cyclic_unimodular() {
        let r = run("quiver l { vertices: 1,2; arrows: a: 1->2; b: 1->2; d: 2->1; relations: a*d; b*d; }");
        assert!(r.all_passed(), "{r:#?}");
        assert_eq!(r.status_of(GRAPH_NUMBERING), Some(CheckStatus::Skipped));
        assert_eq!(r.status_of(GRAPH_BRAID), Some(CheckStatus::Skipped));
        assert_eq!(r.status_of(PROJ_INJ), Some(CheckStatus::Pass));
        assert_eq!(r.status_of(EULER_RANDOM), Some(CheckStatus::Pass));
    }

    #[test]
    fn example_2_2_not_unimodular() {
        let r = run("quiver e { vertices: 1,2,3; arrows: a: 1->2; d: 2->1; b: 2->3; g: 3->2;
                     relations: a*b; g*d; d*a - b*g; }");
        assert!(r.all_passed());
        assert_eq!(r.status_of(UNIMODULAR), Some(CheckStatus::Skipped));
        assert_eq!(r.status_of(PROJ_INJ), Some(CheckStatus::Skipped));
    }

    #[test]
    fn report_json() {
        let r = run("quiver a2 { vertices: 1,2; arrows: a: 1->2; }");
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.is_array());
        assert_eq!(v[0]["status"], "pass");
    }
}
