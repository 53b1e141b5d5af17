use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Column, FreeModule, Polynomial, Presentation};
use crate::degree::{ExtInt, NEG_INFINITY};
use crate::error::Result;
use crate::groebner::kernel_generators;

/// `0 → F_len → ... → F_1 → F_0`, with `d_k : F_k → F_{k-1}` stored by columns
/// (the images of the basis of `F_k`).
#[derive(Debug, Clone, PartialEq)]
pub struct FreeResolution {
    modules: Vec<FreeModule>,
    maps: Vec<Vec<Column>>,
    minimal: bool,
}

impl FreeResolution {
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// `F_k`; rank zero past the end.
    pub fn module(&self, k: usize) -> FreeModule {
        self.modules
            .get(k)
            .cloned()
            .unwrap_or_else(|| FreeModule::new(self.modules[0].ring().clone(), Vec::new()))
    }

    /// `d_k : F_k → F_{k-1}` for `k ≥ 1`; empty past the end.
    pub fn differential(&self, k: usize) -> &[Column] {
        assert!(k >= 1, "d_0 is not part of the resolution");
        self.maps.get(k - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Largest `k` with `F_k ≠ 0`; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        self.modules.iter().rposition(|f| f.rank() > 0)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModule::rank).collect()
    }

    /// `coker d_1`.
    pub fn presentation(&self) -> Presentation {
        Presentation::from_parts_unchecked(self.modules[0].clone(), self.differential(1).to_vec())
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, f) in self.modules.iter().enumerate() {
            for &j in f.twists() {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// Whether some differential has a nonzero constant entry.
    pub fn has_unit_entries(&self) -> bool {
        self.maps.iter().flatten().flatten().any(Polynomial::is_unit)
    }
}

/// Iterated syzygies of `m`; with `minimize`, constant entries are then
/// eliminated until none remain.
pub fn free_resolution(m: &Presentation, minimize: bool) -> Result<FreeResolution> {
    let mut modules = vec![m.ambient().clone()];
    let mut maps: Vec<Vec<Column>> = Vec::new();
    let mut current: Vec<Column> = m.relations().to_vec();
    let ring = m.ring().clone();
    while !current.is_empty() {
        let prev = modules.last().expect("F_0").clone();
        let degrees: Vec<i64> = current
            .iter()
            .map(|c| prev.column_degree(c).ok().flatten().expect("nonzero homogeneous column"))
            .collect();
        let source = FreeModule::new(ring.clone(), degrees);
        let next = kernel_generators(&source, &current, &Presentation::free(prev))?;
        modules.push(source);
        maps.push(std::mem::replace(&mut current, next));
    }
    let mut res = FreeResolution { modules, maps, minimal: false };
    if minimize {
        prune(&mut res);
        res.minimal = true;
    }
    Ok(res)
}

/// Removes a pair `e_c ∈ F_k`, `f_r ∈ F_{k-1}` for each constant entry
/// `d_k[r][c]`, lowest `k`, then row, then column first.
fn prune(res: &mut FreeResolution) {
    let field = res.modules[0].ring().field();
    loop {
        let pivot = (1..=res.maps.len()).find_map(|k| {
            let d = &res.maps[k - 1];
            let rows = res.modules[k - 1].rank();
            (0..rows).find_map(|r| d.iter().position(|col| col[r].is_unit()).map(|c| (k, r, c)))
        });
        let Some((k, r, c)) = pivot else { break };

        let d = &mut res.maps[k - 1];
        let pivot_col = d[c].clone();
        let inv = field.inv(pivot_col[r].constant_value().expect("unit"));
        for (j, col) in d.iter_mut().enumerate() {
            if j == c || col[r].is_zero() {
                continue;
            }
            let factor = col[r].scale(field.neg(inv), field);
            for (e, p) in col.iter_mut().zip(&pivot_col) {
                *e = e.add(&factor.mul(p, field), field);
            }
        }
        d.remove(c);
        for col in d.iter_mut() {
            col.remove(r);
        }
        // F_{k-1} loses f_r: drop that column of d_{k-1}
        if k >= 2 {
            res.maps[k - 2].remove(r);
        }
        // F_k loses e_c: drop that row of d_{k+1}
        if let Some(up) = res.maps.get_mut(k) {
            for col in up.iter_mut() {
                col.remove(c);
            }
        }
        let drop_twist = |f: &FreeModule, i: usize| {
            let mut t = f.twists().to_vec();
            t.remove(i);
            FreeModule::new(f.ring().clone(), t)
        };
        res.modules[k - 1] = drop_twist(&res.modules[k - 1], r);
        res.modules[k] = drop_twist(&res.modules[k], c);
    }
    while res.modules.len() > 1 && res.modules.last().is_some_and(|f| f.rank() == 0) {
        res.modules.pop();
        res.maps.pop();
    }
}

/// Graded Betti numbers `β_{i,j}`; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> ExtInt {
        ExtInt::max_of(self.entries.keys().map(|&(i, j)| ExtInt::Finite(j - i as i64)))
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

/// Rows are `j - i`, columns are `i`, zeros shown as `-`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.projective_dimension() else {
            return writeln!(f, "(zero)");
        };
        let rows: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
        let (lo, hi) = (*rows.iter().min().expect("nonempty"), *rows.iter().max().expect("nonempty"));
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        write!(f, "{:>5}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>5}", "total")?;
        for i in 0..=pd {
            let t: u64 = self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum();
            write!(f, " {t:>width$}")?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>5}", format!("{row}:"))?;
            for i in 0..=pd {
                let v = self.get(i, row + i as i64);
                if v == 0 {
                    write!(f, " {:>width$}", "-")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn betti_table(m: &Presentation) -> Result<BettiTable> {
    Ok(free_resolution(m, true)?.betti_table())
}

/// `max { j - i : β_{i,j}(M) ≠ 0 }`, or `-inf` for the zero module.
pub fn regularity_from_betti(m: &Presentation) -> Result<ExtInt> {
    let t = betti_table(m)?;
    Ok(if t.is_empty() { NEG_INFINITY } else { t.regularity() })
}
