//! Finite abelian grading groups and bicharacters.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Largest grading group accepted.
pub const MAX_GROUP_ORDER: usize = 64;

/// Index of a group element in the mixed-radix enumeration.
pub type Deg = usize;

/// Z_{n_1} × … × Z_{n_r}, elements enumerated with the first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<u32>,
    size: usize,
    add_table: Vec<Deg>,
    neg_table: Vec<Deg>,
}

impl GradingGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::InvalidInput("cyclic order 0".into()));
        }
        let size = orders.iter().try_fold(1usize, |acc, &n| {
            acc.checked_mul(n as usize).filter(|&s| s <= MAX_GROUP_ORDER)
        });
        let size = size.ok_or_else(|| {
            Error::TooLarge(format!("grading group larger than {MAX_GROUP_ORDER}"))
        })?;
        let mut g = GradingGroup { orders, size, add_table: vec![], neg_table: vec![] };
        let mut add = vec![0; size * size];
        let mut neg = vec![0; size];
        for a in 0..size {
            let ta = g.decode(a);
            let na: Vec<u32> = ta.iter().zip(&g.orders).map(|(x, n)| (n - x) % n).collect();
            neg[a] = g.encode_unchecked(&na);
            for b in 0..size {
                let tb = g.decode(b);
                let s: Vec<u32> =
                    ta.iter().zip(&tb).zip(&g.orders).map(|((x, y), n)| (x + y) % n).collect();
                add[a * size + b] = g.encode_unchecked(&s);
            }
        }
        g.add_table = add;
        g.neg_table = neg;
        Ok(g)
    }

    pub fn trivial() -> Self {
        GradingGroup::new(vec![]).unwrap()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Deg {
        0
    }

    pub fn add(&self, a: Deg, b: Deg) -> Deg {
        self.add_table[a * self.size + b]
    }

    pub fn neg(&self, a: Deg) -> Deg {
        self.neg_table[a]
    }

    pub fn decode(&self, mut a: Deg) -> Vec<u32> {
        let mut out = vec![0; self.orders.len()];
        for (slot, &n) in out.iter_mut().zip(&self.orders).rev() {
            *slot = (a % n as usize) as u32;
            a /= n as usize;
        }
        out
    }

    fn encode_unchecked(&self, t: &[u32]) -> Deg {
        t.iter().zip(&self.orders).fold(0, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    pub fn encode(&self, t: &[u32]) -> Result<Deg> {
        if t.len() != self.orders.len() || t.iter().zip(&self.orders).any(|(x, n)| x >= n) {
            return Err(Error::InvalidInput(format!(
                "degree {t:?} not in group {:?}",
                self.orders
            )));
        }
        Ok(self.encode_unchecked(t))
    }

    pub fn format(&self, a: Deg) -> String {
        let t = self.decode(a);
        match t.len() {
            0 => "0".into(),
            1 => t[0].to_string(),
            _ => format!("({})", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
        }
    }
}

/// A violated bicharacter law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicharViolation {
    pub law: String,
    pub elements: Vec<String>,
}

/// Full table of φ: G × G → k^×.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    size: usize,
    table: Vec<Scalar>,
    trivial: bool,
}

impl Bicharacter {
    pub fn from_table(group: &GradingGroup, field: Field, table: Vec<Scalar>) -> Result<Self> {
        let n = group.size();
        if table.len() != n * n {
            return Err(Error::Dimension(format!(
                "bicharacter table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        let table: Vec<Scalar> = table.iter().map(|s| s.in_field(field)).collect();
        let trivial = table.iter().all(|s| s.is_one());
        Ok(Bicharacter { size: n, table, trivial })
    }

    pub fn from_fn(
        group: &GradingGroup,
        field: Field,
        f: impl Fn(&[u32], &[u32]) -> Scalar,
    ) -> Self {
        let n = group.size();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(f(&group.decode(a), &group.decode(b)));
            }
        }
        Bicharacter::from_table(group, field, table).unwrap()
    }

    pub fn trivial(group: &GradingGroup, field: Field) -> Self {
        Bicharacter::from_fn(group, field, |_, _| Scalar::one())
    }

    /// φ(1,1) = −1 on Z_2.
    pub fn super_sign(group: &GradingGroup, field: Field) -> Result<Self> {
        if group.orders() != [2] {
            return Err(Error::InvalidInput("super sign needs the group Z_2".into()));
        }
        Ok(Bicharacter::from_fn(group, field, |a, b| {
            if a[0] * b[0] % 2 == 1 {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            }
        }))
    }

    pub fn eval(&self, a: Deg, b: Deg) -> &Scalar {
        &self.table[a * self.size + b]
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    /// All violations of nonvanishing, bimultiplicativity and symmetry.
    pub fn violations(&self, group: &GradingGroup) -> Vec<BicharViolation> {
        let n = self.size;
        let f = |a: Deg| group.format(a);
        let mut out = vec![];
        for a in 0..n {
            for b in 0..n {
                if self.eval(a, b).is_zero() {
                    out.push(BicharViolation { law: "nonzero".into(), elements: vec![f(a), f(b)] });
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let gh = group.add(g, h);
                    let hk = group.add(h, k);
                    if *self.eval(gh, k) != self.eval(g, k) * self.eval(h, k) {
                        out.push(BicharViolation {
                            law: "left multiplicativity".into(),
                            elements: vec![f(g), f(h), f(k)],
                        });
                    }
                    if *self.eval(g, hk) != self.eval(g, h) * self.eval(g, k) {
                        out.push(BicharViolation {
                            law: "right multiplicativity".into(),
                            elements: vec![f(g), f(h), f(k)],
                        });
                    }
                }
            }
        }
        for g in 0..n {
            for h in g..n {
                if !(self.eval(g, h) * self.eval(h, g)).is_one() {
                    out.push(BicharViolation {
                        law: "symmetry".into(),
                        elements: vec![f(g), f(h)],
                    });
                }
            }
        }
        out
    }
}

/// Field, grading group and bicharacter shared by every object in a computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorContext {
    pub field: Field,
    pub group: GradingGroup,
    pub bichar: Bicharacter,
}

pub type Ctx = Arc<ColorContext>;

impl ColorContext {
    pub fn new(field: Field, group: GradingGroup, bichar: Bicharacter) -> Result<Ctx> {
        field.validate()?;
        if bichar.size != group.size() {
            return Err(Error::Dimension("bicharacter does not match group".into()));
        }
        if let Some(v) = bichar.violations(&group).into_iter().next() {
            return Err(Error::InvalidBicharacter(format!(
                "{} fails at ({})",
                v.law,
                v.elements.join(", ")
            )));
        }
        Ok(Arc::new(ColorContext { field, group, bichar }))
    }

    /// Ungraded setting: trivial group, φ ≡ 1.
    pub fn plain(field: Field) -> Ctx {
        let g = GradingGroup::trivial();
        let b = Bicharacter::trivial(&g, field);
        ColorContext::new(field, g, b).expect("trivial context")
    }

    /// Z_2 with the super sign.
    pub fn super_context(field: Field) -> Ctx {
        let g = GradingGroup::new(vec![2]).unwrap();
        let b = Bicharacter::super_sign(&g, field).unwrap();
        ColorContext::new(field, g, b).expect("super context")
    }

    pub fn phi(&self, a: Deg, b: Deg) -> &Scalar {
        self.bichar.eval(a, b)
    }

    pub fn same(a: &Ctx, b: &Ctx) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl fmt::Display for ColorContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} graded by Z{:?}", self.field, self.group.orders())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix() {
        let g = GradingGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.decode(5), vec![1, 2]);
        assert_eq!(g.encode(&[1, 2]).unwrap(), 5);
        assert_eq!(g.add(5, 5), g.encode(&[0, 1]).unwrap());
        assert_eq!(g.neg(g.encode(&[1, 1]).unwrap()), g.encode(&[1, 2]).unwrap());
        assert!(GradingGroup::new(vec![8, 9]).is_err());
    }

    #[test]
    fn super_sign_valid() {
        let ctx = ColorContext::super_context(Field::Rational);
        assert_eq!(ctx.phi(1, 1).to_string(), "-1");
        assert!(ctx.bichar.violations(&ctx.group).is_empty());
    }

    #[test]
    fn z3_power_bichar_is_not_symmetric() {
        let f = Field::Prime(7);
        let g = GradingGroup::new(vec![3]).unwrap();
        let w = f.int(2);
        let b = Bicharacter::from_fn(&g, f, |x, y| w.pow((x[0] * y[0]) as u64));
        assert_eq!(b.eval(1, 2).to_string(), "4");
        let v = b.violations(&g);
        assert!(v.iter().all(|v| v.law == "symmetry"));
        assert!(!v.is_empty());
        assert!(ColorContext::new(f, g, b).is_err());
    }

    #[test]
    fn broken_table_reports_multiplicativity() {
        let g = GradingGroup::new(vec![2]).unwrap();
        let t = vec![Scalar::one(), Scalar::one(), Scalar::one(), Scalar::from_int(2)];
        let b = Bicharacter::from_table(&g, Field::Rational, t).unwrap();
        let v = b.violations(&g);
        assert!(v.iter().any(|v| v.law == "left multiplicativity"));
    }
}
