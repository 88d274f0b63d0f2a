// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact interval descriptions of the 1-parameter configuration spaces of
//! planar 1-dof linkages built by degree-2 vertex additions, plus
//! linear-time realization of sampled configurations and combinatorial
//! classification of which substrates admit low sampling complexity.

pub mod classify;
pub mod cspace;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod henneberg;
pub mod interval;
pub mod io;
pub mod linkage;
pub mod minors;
pub mod oracle;
pub mod quad;
pub mod realize;
pub mod svg;

pub use error::{Error, Result};
