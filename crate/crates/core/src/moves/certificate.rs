use super::{Move, MoveLog};
use crate::complex::{is_equivalence, ChainComplex, ChainMap, Check, Diagnostics, HomologyReport};

/// A chain map `source → target` claimed to be a homotopy equivalence, with the move
/// history that produced the complexes involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub map: ChainMap,
    pub log: MoveLog,
    /// Homology of the mapping cone, as recorded.
    pub cone: HomologyReport,
}

impl EquivalenceCertificate {
    /// Assembles a certificate, computing the cone homology.
    pub fn new(map: ChainMap, log: MoveLog) -> Self {
        let cone = is_equivalence(&map).cone;
        EquivalenceCertificate {
            source: map.source.clone(),
            target: map.target.clone(),
            map,
            log,
            cone,
        }
    }

    pub fn identity(c: &ChainComplex) -> Self {
        EquivalenceCertificate::new(ChainMap::identity(c), MoveLog::new(c.clone()))
    }

    /// Re-derives every claim from the stored data alone.
    pub fn verify(&self) -> Diagnostics {
        let mut checks = Vec::new();
        let ends = self.map.source == self.source && self.map.target == self.target;
        checks.push(Check::new(
            "map endpoints",
            ends,
            if ends { "match" } else { "map does not connect source and target" },
        ));
        for c in [&self.source, &self.target] {
            let d = c.validate();
            if let Some(bad) = d.first_failure() {
                checks.push(Check::new("complexes valid", false, bad.name.clone()));
            }
        }
        checks.extend(self.map.validate().checks);

        let recomputed = is_equivalence(&self.map);
        let cone_ok = recomputed.equivalent && recomputed.cone == self.cone;
        let detail = if cone_ok {
            "all cone homology vanishes".to_string()
        } else if recomputed.cone.groups.is_empty() {
            "map is not a chain map".to_string()
        } else if recomputed.cone != self.cone {
            "recorded cone homology does not match".to_string()
        } else {
            let bad: Vec<String> = recomputed
                .cone
                .groups
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| g.to_string())
                .collect();
            bad.join("; ")
        };
        checks.push(Check::new("cone acyclic", cone_ok, detail));

        let (replay_ok, detail) = match self.log.replay() {
            Ok(_) => (true, format!("{} moves", self.log.len())),
            Err(e) => (false, e.to_string()),
        };
        checks.push(Check::new("log replay", replay_ok, detail));
        if replay_ok {
            let (pass, detail) = self.log_endpoints();
            checks.push(Check::new("log endpoints", pass, detail));
        }
        Diagnostics { checks }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().all_pass()
    }

    /// A log of stabilizations only must end at one of the endpoints. Any other log must
    /// run from the stabilized source to the target, and the map must be its composite.
    fn log_endpoints(&self) -> (bool, String) {
        let only_stabilizations = self
            .log
            .moves()
            .all(|m| matches!(m, Move::Stabilize { .. }));
        if only_stabilizations {
            let pass = self.log.end == self.source || self.log.end == self.target;
            return (
                pass,
                if !pass {
                    "log ends elsewhere".into()
                } else if self.log.is_empty() {
                    "no moves".into()
                } else {
                    "stabilization recorded".into()
                },
            );
        }
        if self.log.end != self.target {
            return (false, "log does not end at the target".into());
        }
        let k = self.log.stabilization_prefix();
        match self.log.state_after(k) {
            Ok(s) if s != self.source => return (false, "source is not the stabilized start".into()),
            Err(e) => return (false, e.to_string()),
            Ok(_) => {}
        }
        match self.log.composite_from(k) {
            Ok(m) if m == self.map => (true, format!("{} moves after stabilization", self.log.len() - k)),
            Ok(_) => (false, "map differs from the composite of the logged moves".into()),
            Err(e) => (false, e.to_string()),
        }
    }
}
