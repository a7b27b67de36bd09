use std::collections::HashMap;

use super::{OneTerm, TwoComputad, TwoTerm};
use crate::bicat::{Bicategory, OneCell, TwoCell, ZeroId};
use crate::error::{Error, Result};

/// Interpretation of computad names as cells of a bicategory.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    pub zero: HashMap<String, ZeroId>,
    pub one: HashMap<String, OneCell>,
    pub two: HashMap<String, TwoCell>,
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn zero(mut self, name: &str, a: ZeroId) -> Assignment {
        self.zero.insert(name.to_string(), a);
        self
    }

    pub fn one(mut self, name: &str, f: OneCell) -> Assignment {
        self.one.insert(name.to_string(), f);
        self
    }

    pub fn two(mut self, name: &str, x: TwoCell) -> Assignment {
        self.two.insert(name.to_string(), x);
        self
    }

    /// Every assigned generator lands between the images of its endpoints.
    pub fn check(&self, cd: &TwoComputad, b: &Bicategory) -> Result<()> {
        for g in cd.one_gens() {
            let Some(&f) = self.one.get(&g.name) else { continue };
            for (end, at) in [(&g.src, f.src), (&g.dst, f.dst)] {
                if let Some(&z) = self.zero.get(end) {
                    if z != at {
                        return Err(Error::Mismatch(format!(
                            "`{}` assigned to `{}` but `{end}` is assigned to `{}`",
                            g.name,
                            b.one_name(f),
                            b.zero_name(z)
                        )));
                    }
                }
            }
        }
        for g in cd.two_gens() {
            let Some(&x) = self.two.get(&g.name) else { continue };
            let s = eval_one(&g.src, b, self)?;
            let d = eval_one(&g.dst, b, self)?;
            if b.src2(x) != s || b.dst2(x) != d || x.src != s.src || x.dst != s.dst {
                return Err(Error::Mismatch(format!(
                    "`{}` assigned to `{}` with the wrong boundary",
                    g.name,
                    b.two_name(x)
                )));
            }
        }
        Ok(())
    }
}

pub fn eval_one(t: &OneTerm, b: &Bicategory, asg: &Assignment) -> Result<OneCell> {
    match t {
        OneTerm::Id(a) => asg
            .zero
            .get(a)
            .map(|&z| b.id1(z))
            .ok_or_else(|| Error::Unresolved(format!("0-cell `{a}` in assignment"))),
        OneTerm::Gen(g) => asg
            .one
            .get(g)
            .copied()
            .ok_or_else(|| Error::Unresolved(format!("1-cell generator `{g}` in assignment"))),
        OneTerm::Comp(l, r) => {
            let f = eval_one(r, b, asg)?;
            let g = eval_one(l, b, asg)?;
            b.compose1(g, f).map_err(|_| Error::Mismatch(format!("`{t}` does not compose under the assignment")))
        }
    }
}

pub fn eval_two(u: &TwoTerm, cd: &TwoComputad, b: &Bicategory, asg: &Assignment) -> Result<TwoCell> {
    u.boundary(cd)?;
    asg.check(cd, b)?;
    ev(u, b, asg)
}

fn ev(u: &TwoTerm, b: &Bicategory, asg: &Assignment) -> Result<TwoCell> {
    let one = |t: &OneTerm| eval_one(t, b, asg);
    Ok(match u {
        TwoTerm::IdTwo(t) => b.id2(one(t)?),
        TwoTerm::Gen(g) => *asg
            .two
            .get(g)
            .ok_or_else(|| Error::Unresolved(format!("2-cell generator `{g}` in assignment")))?,
        TwoTerm::Assoc(h, g, f) => b.assoc(one(h)?, one(g)?, one(f)?)?,
        TwoTerm::InvAssoc(h, g, f) => b.inverse_or_err(b.assoc(one(h)?, one(g)?, one(f)?)?)?,
        TwoTerm::LUnit(f) => b.lunit(one(f)?),
        TwoTerm::InvLUnit(f) => b.inverse_or_err(b.lunit(one(f)?))?,
        TwoTerm::RUnit(f) => b.runit(one(f)?),
        TwoTerm::InvRUnit(f) => b.inverse_or_err(b.runit(one(f)?))?,
        TwoTerm::VComp(be, al) => b.vcomp(ev(be, b, asg)?, ev(al, b, asg)?)?,
        TwoTerm::HComp(be, al) => b.hcomp(ev(be, b, asg)?, ev(al, b, asg)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cocycle_z2;
    use crate::freebicat::{unit_associativity_legs, parse_one, pentagon_legs};

    fn setup() -> (Bicategory, TwoComputad, Assignment) {
        let b = cocycle_z2();
        let t = parse_one("k * (h * (g * f))").unwrap();
        let cd = TwoComputad::infer(&[&t]).unwrap();
        let a = b.zero_cells().next().unwrap();
        let u = b.one_cell(a, a, "u").unwrap();
        let mut asg = Assignment::new();
        for z in cd.zero_cells() {
            asg = asg.zero(z, a);
        }
        for g in ["k", "h", "g", "f"] {
            asg = asg.one(g, u);
        }
        (b, cd, asg)
    }

    #[test]
    fn identity_evaluates_to_unit() {
        let (b, cd, asg) = setup();
        let z = &cd.zero_cells()[0];
        let a = b.zero_cells().next().unwrap();
        assert_eq!(eval_one(&OneTerm::id(z), &b, &asg).unwrap(), b.id1(a));
    }

    #[test]
    fn legs_agree_in_the_cocycle_fixture() {
        let (b, cd, asg) = setup();
        let (h, g, f) = (OneTerm::gen("h"), OneTerm::gen("g"), OneTerm::gen("f"));
        let (l, r) = unit_associativity_legs(&h, &g, &f, &cd).unwrap();
        let (el, er) = (eval_two(&l.term, &cd, &b, &asg).unwrap(), eval_two(&r.term, &cd, &b, &asg).unwrap());
        assert_eq!(el, er);
        // left: a(u,e,u)^-1 = +, r = +, a(u,u,u) = -; right: a(u,u,u) = -, l = +
        assert_eq!(b.two_name(el), "-u");
        let k = OneTerm::gen("k");
        let (l, r) = pentagon_legs(&k, &h, &g, &f, &cd).unwrap();
        assert_eq!(eval_two(&l.term, &cd, &b, &asg).unwrap(), eval_two(&r.term, &cd, &b, &asg).unwrap());
    }

    #[test]
    fn assignment_boundaries_are_checked() {
        let (b, cd, asg) = setup();
        let a = b.zero_cells().next().unwrap();
        let u = b.one_cell(a, a, "u").unwrap();
        let minus = b.two_cells(a, a).find(|&x| b.two_name(x) == "-u").unwrap();
        assert_eq!(b.src2(minus), u);
        let bad = asg.clone().two("gamma", minus);
        // no generator `gamma` in this computad, so the extra entry is ignored
        assert!(bad.check(&cd, &b).is_ok());
        assert!(matches!(eval_one(&OneTerm::gen("zz"), &b, &asg), Err(Error::Unresolved(_))));
    }
}
