//! Conjugacy class data: partition, representatives, inverse classes, and
//! power maps. Class 0 is always the identity class; the rest are ordered by
//! (size, smallest element index) so downstream tables are stable.

use crate::error::{Error, Result};
use crate::group::GroupRef;
use std::sync::Arc;

pub struct ClassData {
    group: GroupRef,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    inverse_class: Vec<u32>,
}

pub type ClassesRef = Arc<ClassData>;

impl ClassData {
    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[class]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class] as usize
    }

    /// Class of rep^m for every class, computed on demand.
    pub fn power_map(&self, m: u64) -> Vec<usize> {
        let g = &self.group;
        self.reps
            .iter()
            .map(|&r| self.class_of(g.pow(r, m)))
            .collect()
    }
}

/// Partitions the group into conjugacy classes.
pub fn conjugacy_classes(group: &GroupRef) -> Result<ClassesRef> {
    let g = group.clone();
    let n = g.order();
    let gens = g.small_generating_set();
    let mut class_of = vec![u32::MAX; n];
    let mut raw: Vec<Vec<u32>> = Vec::new();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let id = raw.len() as u32;
        class_of[start] = id;
        let mut orbit = vec![start as u32];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head] as usize;
            head += 1;
            for &s in &gens {
                let y = g.conjugate(s, x);
                if class_of[y] == u32::MAX {
                    class_of[y] = id;
                    orbit.push(y as u32);
                }
            }
        }
        orbit.sort_unstable();
        raw.push(orbit);
    }

    // canonical order: identity class first, then (size, smallest member)
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&c| {
        let is_identity = raw[c][0] == 0 && raw[c].len() == 1;
        (!is_identity, raw[c].len(), raw[c][0])
    });
    let mut members = Vec::with_capacity(raw.len());
    let mut reps = Vec::with_capacity(raw.len());
    let mut sizes = Vec::with_capacity(raw.len());
    for &c in &order {
        let orbit = std::mem::take(&mut raw[c]);
        reps.push(orbit[0] as usize);
        sizes.push(orbit.len());
        members.push(orbit);
    }
    for (c, orbit) in members.iter().enumerate() {
        for &x in orbit {
            class_of[x as usize] = c as u32;
        }
    }

    let inverse_class: Vec<u32> = reps
        .iter()
        .map(|&r| class_of[g.inv(r)])
        .collect();

    let data = ClassData {
        group: g,
        reps,
        sizes,
        class_of,
        members,
        inverse_class,
    };
    verify(&data)?;
    Ok(Arc::new(data))
}

fn verify(cd: &ClassData) -> Result<()> {
    let n = cd.group.order();
    let total: usize = cd.sizes.iter().sum();
    if total != n {
        return Err(Error::internal("class sizes do not sum to |G|"));
    }
    if cd.sizes.iter().any(|&s| !n.is_multiple_of(s)) {
        return Err(Error::internal("class size does not divide |G|"));
    }
    if cd.reps[0] != 0 || cd.sizes[0] != 1 {
        return Err(Error::internal("class 0 is not the identity class"));
    }
    for c in 0..cd.count() {
        if cd.inverse_class(cd.inverse_class(c)) != c {
            return Err(Error::internal("inverse_class is not an involution"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::group::{load_group, parse_spec, GroupSpec, LoadLimits};

    fn family(f: FamilySpec) -> GroupRef {
        load_group(&GroupSpec::Family(f), &LoadLimits::default()).unwrap()
    }

    #[test]
    fn s3_has_three_classes() {
        let spec =
            parse_spec(r#"{"kind":"perm","degree":3,"generators":[[[0,1]],[[0,1,2]]]}"#).unwrap();
        let g = load_group(&spec, &LoadLimits::default()).unwrap();
        let cd = conjugacy_classes(&g).unwrap();
        let mut sizes = cd.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn q8_has_five_classes() {
        let g = family(FamilySpec::GeneralizedQuaternion { order: 8 });
        let cd = conjugacy_classes(&g).unwrap();
        let mut sizes = cd.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn heisenberg_f4_has_19_classes() {
        // central classes are singletons, all others have size q
        let g = family(FamilySpec::Heisenberg { q: 4 });
        let cd = conjugacy_classes(&g).unwrap();
        assert_eq!(cd.count(), 19);
        let singletons = cd.sizes().iter().filter(|&&s| s == 1).count();
        assert_eq!(singletons, 4);
        assert!(cd.sizes().iter().all(|&s| s == 1 || s == 4));
    }

    #[test]
    fn power_map_one_is_identity_map() {
        let g = family(FamilySpec::Dihedral { n: 6 });
        let cd = conjugacy_classes(&g).unwrap();
        let pm = cd.power_map(1);
        assert_eq!(pm, (0..cd.count()).collect::<Vec<_>>());
    }

    #[test]
    fn class_order_is_canonical() {
        let g = family(FamilySpec::Symmetric { m: 4 });
        let cd = conjugacy_classes(&g).unwrap();
        assert_eq!(cd.representative(0), 0);
        for c in 2..cd.count() {
            let prev = (cd.size(c - 1), cd.representative(c - 1));
            let cur = (cd.size(c), cd.representative(c));
            assert!(prev < cur);
        }
    }
}
