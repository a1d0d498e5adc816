//! CNF formulas, DIMACS CNF input and the structural validators used by the
//! generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A variable (0-based) with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// From a signed, 1-based DIMACS integer.
    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Literal { var: x.unsigned_abs() as usize - 1, positive: x > 0 })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive { v } else { -v }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "¬x{}", self.var + 1)
        }
    }
}

/// A first violated clause or variable, 1-based in the message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: Option<usize>,
    pub variable: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Precondition(v.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Repeated literals inside a clause are merged; clause order is kept.
    pub fn new(n: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidParameter(format!("clause {} is empty", j + 1)));
            }
            let mut merged: Vec<Literal> = Vec::with_capacity(clause.len());
            for lit in clause {
                if lit.var >= n {
                    return Err(Error::InvalidParameter(format!(
                        "clause {} uses variable {} but there are {n}",
                        j + 1,
                        lit.var + 1
                    )));
                }
                if !merged.contains(&lit) {
                    merged.push(lit);
                }
            }
            out.push(merged);
        }
        Ok(CnfFormula { n, clauses: out })
    }

    /// Builds a formula from DIMACS-style signed integers.
    pub fn from_ints(n: usize, clauses: &[&[i64]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().map(|&x| Literal::from_dimacs(x).ok_or_else(|| zero_literal())).collect())
            .collect::<Result<Vec<Vec<Literal>>>>()?;
        CnfFormula::new(n, clauses)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn clause(&self, j: usize) -> &[Literal] {
        &self.clauses[j]
    }

    pub fn max_clause_len(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Occurrences of each variable as (positive, negative).
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(0, 0); self.n];
        for lit in self.clauses.iter().flatten() {
            if lit.positive {
                occ[lit.var].0 += 1;
            } else {
                occ[lit.var].1 += 1;
            }
        }
        occ
    }

    /// No literal is negated.
    pub fn is_monotone(&self) -> std::result::Result<(), Violation> {
        for (j, clause) in self.clauses.iter().enumerate() {
            if let Some(lit) = clause.iter().find(|l| !l.positive) {
                return Err(Violation {
                    clause: Some(j),
                    variable: Some(lit.var),
                    message: format!("clause {} contains the negated literal {lit}", j + 1),
                });
            }
        }
        Ok(())
    }

    /// Every variable occurs at most three times.
    pub fn is_three_occ(&self) -> std::result::Result<(), Violation> {
        for (i, (p, q)) in self.occurrences().into_iter().enumerate() {
            if p + q > 3 {
                return Err(Violation {
                    clause: None,
                    variable: Some(i),
                    message: format!("variable x{} occurs {} times", i + 1, p + q),
                });
            }
        }
        Ok(())
    }

    /// Whether `var` occurs, and always with the same sign.
    pub fn is_pure(&self, var: usize) -> bool {
        let (p, q) = self.occurrences()[var];
        (p == 0) != (q == 0)
    }

    /// No variable occurs always as the same literal.
    pub fn no_pure_variable(&self) -> std::result::Result<(), Violation> {
        for (i, (p, q)) in self.occurrences().into_iter().enumerate() {
            if (p == 0) != (q == 0) {
                let lit = if q == 0 { Literal::pos(i) } else { Literal::neg(i) };
                return Err(Violation {
                    clause: None,
                    variable: Some(i),
                    message: format!("variable x{} only occurs as {lit}", i + 1),
                });
            }
        }
        Ok(())
    }

    /// Every clause has at most `k` literals.
    pub fn clauses_at_most(&self, k: usize) -> std::result::Result<(), Violation> {
        for (j, clause) in self.clauses.iter().enumerate() {
            if clause.len() > k {
                return Err(Violation {
                    clause: Some(j),
                    variable: None,
                    message: format!("clause {} has {} literals, more than {k}", j + 1, clause.len()),
                });
            }
        }
        Ok(())
    }

    fn check_len(&self, assignment: &[bool]) -> Result<()> {
        if assignment.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                self.n
            )));
        }
        Ok(())
    }

    /// Index of the first clause with no true literal.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Result<Option<usize>> {
        self.check_len(assignment)?;
        Ok(self.clauses.iter().position(|c| !c.iter().any(|l| l.eval(assignment))))
    }

    /// Index of the first clause whose literals are all equal in value.
    pub fn first_nae_violation(&self, assignment: &[bool]) -> Result<Option<usize>> {
        self.check_len(assignment)?;
        Ok(self.clauses.iter().position(|c| {
            let t = c.iter().filter(|l| l.eval(assignment)).count();
            t == 0 || t == c.len()
        }))
    }

    pub fn satisfies(&self, assignment: &[bool]) -> Result<bool> {
        Ok(self.first_unsatisfied(assignment)?.is_none())
    }

    pub fn nae_satisfies(&self, assignment: &[bool]) -> Result<bool> {
        Ok(self.first_nae_violation(assignment)?.is_none())
    }

    /// All assignments in increasing binary order (`x1` is the low bit).
    pub fn assignments(&self) -> Result<impl Iterator<Item = Vec<bool>>> {
        if self.n > 24 {
            return Err(Error::GuardExceeded { what: "variables to enumerate", value: self.n as u128, limit: 24 });
        }
        let n = self.n;
        Ok((0u64..1 << n).map(move |x| (0..n).map(|i| x >> i & 1 == 1).collect()))
    }

    /// First satisfying assignment by exhaustive search.
    pub fn brute_force_sat(&self) -> Result<Option<Vec<bool>>> {
        Ok(self.assignments()?.find(|a| self.satisfies(a).unwrap_or(false)))
    }

    /// First NAE-satisfying assignment by exhaustive search.
    pub fn brute_force_nae(&self) -> Result<Option<Vec<bool>>> {
        Ok(self.assignments()?.find(|a| self.nae_satisfies(a).unwrap_or(false)))
    }
}

fn zero_literal() -> Error {
    Error::InvalidParameter("0 is not a literal".into())
}

/// Parses DIMACS CNF. The `p cnf n m` header is optional; without it the
/// variable count is the largest index used. Clauses end with `0` and may
/// span lines.
pub fn read_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut max_var = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() {
                return Err(Error::Parse { line: line_no, msg: "second problem line".into() });
            }
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(Error::Parse { line: line_no, msg: "expected `p cnf <vars> <clauses>`".into() });
            }
            let n = parts[2].parse().map_err(|_| Error::Parse { line: line_no, msg: "bad variable count".into() })?;
            let m = parts[3].parse().map_err(|_| Error::Parse { line: line_no, msg: "bad clause count".into() })?;
            header = Some((n, m));
            continue;
        }
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| Error::Parse { line: line_no, msg: format!("`{tok}` is not an integer") })?;
            match Literal::from_dimacs(x) {
                None => {
                    if current.is_empty() {
                        return Err(Error::Parse { line: line_no, msg: "empty clause".into() });
                    }
                    clauses.push(std::mem::take(&mut current));
                }
                Some(lit) => {
                    if let Some((n, _)) = header {
                        if lit.var >= n {
                            return Err(Error::Parse {
                                line: line_no,
                                msg: format!("variable {} exceeds the declared {n}", lit.var + 1),
                            });
                        }
                    }
                    max_var = max_var.max(lit.var + 1);
                    current.push(lit);
                }
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let n = match header {
        Some((n, m)) => {
            if m != clauses.len() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("header declares {m} clauses but {} were read", clauses.len()),
                });
            }
            n
        }
        None => max_var,
    };
    CnfFormula::new(n, clauses)
}

pub fn write_dimacs_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.n(), f.m());
    for clause in f.clauses() {
        for lit in clause {
            out.push_str(&lit.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
