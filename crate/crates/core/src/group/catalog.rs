use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{bind_presentation, FiniteGroup, Letter, MarkedGroup, Presentation, Word};
use crate::error::{Error, Result};

/// The built-in group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Trivial,
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Quaternion8,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Trivial => write!(f, "trivial"),
            GroupFamily::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupFamily::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupFamily::Quaternion8 => write!(f, "quaternion8"),
            GroupFamily::Tetrahedral => write!(f, "tetrahedral"),
            GroupFamily::Octahedral => write!(f, "octahedral"),
            GroupFamily::Icosahedral => write!(f, "icosahedral"),
        }
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let param = |name: &str| -> Result<usize> {
            match parts.get(1) {
                Some(p) if parts.len() == 2 => p
                    .parse()
                    .map_err(|_| Error::input(format!("bad parameter for {name}: {p}"))),
                _ => Err(Error::input(format!("{name} takes one integer parameter"))),
            }
        };
        let plain = |fam: GroupFamily| -> Result<GroupFamily> {
            if parts.len() == 1 {
                Ok(fam)
            } else {
                Err(Error::input(format!("{} takes no parameter", parts[0])))
            }
        };
        match parts.first().copied() {
            Some("trivial") => plain(GroupFamily::Trivial),
            Some("cyclic") => Ok(GroupFamily::Cyclic(param("cyclic")?)),
            Some("dihedral") => Ok(GroupFamily::Dihedral(param("dihedral")?)),
            Some("quaternion8") | Some("quaternion") => plain(GroupFamily::Quaternion8),
            Some("tetrahedral") => plain(GroupFamily::Tetrahedral),
            Some("octahedral") => plain(GroupFamily::Octahedral),
            Some("icosahedral") => plain(GroupFamily::Icosahedral),
            _ => Err(Error::input(format!("unknown group family: {s:?}"))),
        }
    }
}

// Catalog generators (points numbered from 0). Each pair (a, b) satisfies the
// triangle relations a^p = b^3 = (ab)^2 = 1 and generates the whole group.
const TETRA_A: [usize; 4] = [1, 2, 0, 3]; // (1 2 3)
const TETRA_B: [usize; 4] = [0, 2, 3, 1]; // (2 3 4)
const OCTA_A: [usize; 4] = [1, 2, 3, 0]; // (1 2 3 4)
const OCTA_B: [usize; 4] = [0, 3, 1, 2]; // (2 4 3)
const ICOSA_A: [usize; 5] = [1, 2, 3, 4, 0]; // (1 2 3 4 5)
const ICOSA_B: [usize; 5] = [0, 4, 1, 3, 2]; // (2 5 3)

// Left multiplication by i and j on the points 1, i, j, k, -1, -i, -j, -k.
const QUAT_I: [usize; 8] = [1, 4, 3, 6, 5, 0, 7, 2];
const QUAT_J: [usize; 8] = [2, 7, 4, 1, 6, 3, 0, 5];
const QUAT_NAMES: [&str; 8] = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"];

/// Builds the multiplication table of a catalog group.
pub fn make_group(family: GroupFamily) -> Result<FiniteGroup> {
    let group = match family {
        GroupFamily::Trivial => FiniteGroup::from_table(vec![vec![0]], Some(vec!["1".into()]))?,
        GroupFamily::Cyclic(n) => {
            if n == 0 {
                return Err(Error::input("cyclic group needs n >= 1"));
            }
            let table = (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect();
            let labels = (0..n).map(|k| power_label("x", k)).collect();
            FiniteGroup::from_table(table, Some(labels))?
        }
        GroupFamily::Dihedral(n) => {
            if n < 2 {
                return Err(Error::input("dihedral group needs n >= 2"));
            }
            // r^k s^f is stored at index k + n f.
            let split = |x: usize| (x % n, x / n);
            let table = (0..2 * n)
                .map(|x| {
                    let (k1, f1) = split(x);
                    (0..2 * n)
                        .map(|y| {
                            let (k2, f2) = split(y);
                            let k = if f1 == 0 { k1 + k2 } else { k1 + n - k2 };
                            k % n + n * (f1 ^ f2)
                        })
                        .collect()
                })
                .collect();
            let labels = (0..2 * n)
                .map(|x| {
                    let (k, f) = split(x);
                    match (k, f) {
                        (0, 1) => "s".to_string(),
                        (_, 1) => format!("{} s", power_label("r", k)),
                        _ => power_label("r", k),
                    }
                })
                .collect();
            FiniteGroup::from_table(table, Some(labels))?
        }
        GroupFamily::Quaternion8 => {
            let g = FiniteGroup::from_permutations(&[QUAT_I.to_vec(), QUAT_J.to_vec()])?;
            let perms = super::permutation_closure(&[QUAT_I.to_vec(), QUAT_J.to_vec()])?;
            let labels = perms.iter().map(|p| QUAT_NAMES[p[0]].to_string()).collect();
            FiniteGroup::from_table(g.table(), Some(labels))?
        }
        GroupFamily::Tetrahedral => {
            FiniteGroup::from_permutations(&[TETRA_A.to_vec(), TETRA_B.to_vec()])?
        }
        GroupFamily::Octahedral => {
            FiniteGroup::from_permutations(&[OCTA_A.to_vec(), OCTA_B.to_vec()])?
        }
        GroupFamily::Icosahedral => {
            FiniteGroup::from_permutations(&[ICOSA_A.to_vec(), ICOSA_B.to_vec()])?
        }
    };
    Ok(group.with_family(family))
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn letters(pairs: &[(usize, i8)]) -> Word {
    Word(pairs.iter().map(|&(g, e)| Letter::new(g, e)).collect())
}

fn triangle(p: i64) -> Presentation {
    let ab = letters(&[(0, 1), (1, 1)]);
    Presentation {
        generator_names: vec!["a".into(), "b".into()],
        relators: vec![Word::power(0, p), Word::power(1, 3), ab.concat(&ab)],
    }
}

impl GroupFamily {
    /// The built-in presentation of this family together with its generator map.
    pub fn default_presentation(&self) -> Result<(Presentation, Vec<usize>)> {
        Ok(match *self {
            GroupFamily::Trivial => (Presentation::new(vec![], vec![])?, vec![]),
            GroupFamily::Cyclic(n) => {
                let image = if n == 1 { 0 } else { 1 };
                (
                    Presentation::new(vec!["x".into()], vec![Word::power(0, n as i64)])?,
                    vec![image],
                )
            }
            GroupFamily::Dihedral(n) => {
                let ab = letters(&[(0, 1), (1, 1)]);
                (
                    Presentation::new(
                        vec!["a".into(), "b".into()],
                        vec![Word::power(0, n as i64), Word::power(1, 2), ab.concat(&ab)],
                    )?,
                    vec![1, n],
                )
            }
            GroupFamily::Quaternion8 => (
                Presentation::new(
                    vec!["x".into(), "y".into()],
                    vec![
                        letters(&[(0, 1), (0, 1), (1, -1), (1, -1)]),
                        letters(&[(0, 1), (1, 1), (0, 1), (1, -1)]),
                    ],
                )?,
                vec![1, 2],
            ),
            GroupFamily::Tetrahedral => (triangle(3), vec![1, 2]),
            GroupFamily::Octahedral => (triangle(4), vec![1, 2]),
            GroupFamily::Icosahedral => (triangle(5), vec![1, 2]),
        })
    }

    /// The catalog group bound to its built-in presentation.
    pub fn marked_group(&self) -> Result<MarkedGroup> {
        let group = Arc::new(make_group(*self)?);
        let (presentation, genmap) = self.default_presentation()?;
        bind_presentation(group, presentation, genmap)
    }

    /// Literature value of the deficiency of the group, as annotated in the catalog.
    pub fn known_deficiency(&self) -> i64 {
        match self {
            GroupFamily::Trivial | GroupFamily::Cyclic(_) | GroupFamily::Quaternion8 => 0,
            GroupFamily::Dihedral(_)
            | GroupFamily::Tetrahedral
            | GroupFamily::Octahedral
            | GroupFamily::Icosahedral => -1,
        }
    }

    /// Whether the group embeds in SO(3).
    pub fn is_rotation_group(&self) -> bool {
        !matches!(self, GroupFamily::Quaternion8)
    }

    pub fn expected_order(&self) -> usize {
        match *self {
            GroupFamily::Trivial => 1,
            GroupFamily::Cyclic(n) => n,
            GroupFamily::Dihedral(n) => 2 * n,
            GroupFamily::Quaternion8 => 8,
            GroupFamily::Tetrahedral => 12,
            GroupFamily::Octahedral => 24,
            GroupFamily::Icosahedral => 60,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: GroupFamily,
    pub marked: MarkedGroup,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.marked.group().order()
    }

    pub fn deficiency(&self) -> i64 {
        self.marked.presentation().deficiency()
    }

    /// Euler characteristic of the presentation complex, `1 - g + r`.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.deficiency()
    }
}

/// The built-in marked groups: trivial, cyclic of order at most 8, dihedral of order
/// at most 10, the quaternion group, and the three polyhedral rotation groups.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut families = vec![GroupFamily::Trivial];
    families.extend((1..=8).map(GroupFamily::Cyclic));
    families.extend((2..=5).map(GroupFamily::Dihedral));
    families.extend([
        GroupFamily::Quaternion8,
        GroupFamily::Tetrahedral,
        GroupFamily::Octahedral,
        GroupFamily::Icosahedral,
    ]);
    families
        .into_iter()
        .map(|family| CatalogEntry {
            family,
            marked: family
                .marked_group()
                .expect("catalog presentations are valid"),
        })
        .collect()
}
