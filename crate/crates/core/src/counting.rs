//! Interchangeable ways of computing the f-vector of `P(G)`, registered by name.

use std::collections::BTreeMap;

use crate::embedding::vertices;
use crate::error::OracleError;
use crate::facecomb::{free_sum_lattice, fvector, simplex_fvector, FVector};
use crate::frobenius::FrobeniusSystem;
use crate::oracle::{
    face_lattice_from_incidence, OracleCaps, PointConfiguration, VertexFacetIncidence,
};

pub trait FaceCounter: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn fvector(&self, sys: &FrobeniusSystem, caps: &OracleCaps) -> Result<FVector, OracleError>;
}

/// Coefficients of `x^{(n-1)h+1} + ((1+x)^n - x^n)^h`.
pub struct GeneratingFunction;

impl FaceCounter for GeneratingFunction {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn description(&self) -> &'static str {
        "generating-function coefficients"
    }

    fn fvector(&self, sys: &FrobeniusSystem, _: &OracleCaps) -> Result<FVector, OracleError> {
        Ok(fvector(sys.n(), sys.h()))
    }
}

/// Free sum of the `h` coset simplices, each of dimension `n - 1`.
pub struct FreeSumOfSimplices;

impl FaceCounter for FreeSumOfSimplices {
    fn name(&self) -> &'static str {
        "free-sum"
    }

    fn description(&self) -> &'static str {
        "product of the coset simplices' face lattices"
    }

    fn fvector(&self, sys: &FrobeniusSystem, _: &OracleCaps) -> Result<FVector, OracleError> {
        let parts = vec![simplex_fvector(sys.n() - 1); sys.h()];
        Ok(free_sum_lattice(&parts))
    }
}

/// Brute-force facets closed under intersection.
pub struct IncidenceLattice;

impl FaceCounter for IncidenceLattice {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "brute-force facet search and intersection closure"
    }

    fn fvector(&self, sys: &FrobeniusSystem, caps: &OracleCaps) -> Result<FVector, OracleError> {
        let points = vertices(sys).iter().map(|v| v.to_point()).collect();
        let config = PointConfiguration::new(points)?;
        let facets = config.brute_force_facets(caps)?;
        let inc = VertexFacetIncidence::from_facets(config.len(), &facets);
        Ok(face_lattice_from_incidence(&inc, &config, caps)?.fvector)
    }
}

pub struct CounterRegistry {
    counters: BTreeMap<&'static str, Box<dyn FaceCounter>>,
}

impl CounterRegistry {
    pub fn empty() -> Self {
        CounterRegistry {
            counters: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, counter: Box<dyn FaceCounter>) {
        self.counters.insert(counter.name(), counter);
    }

    pub fn get(&self, name: &str) -> Option<&dyn FaceCounter> {
        self.counters.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.counters.keys().copied()
    }
}

impl Default for CounterRegistry {
    fn default() -> Self {
        let mut reg = CounterRegistry::empty();
        reg.register(Box::new(GeneratingFunction));
        reg.register(Box::new(FreeSumOfSimplices));
        reg.register(Box::new(IncidenceLattice));
        reg
    }
}
