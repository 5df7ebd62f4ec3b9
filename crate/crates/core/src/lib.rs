// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact spectral analysis of signed graphs whose adjacency spectrum has at
//! most two eigenvalues different from `1` and `-1`.

pub mod census;
pub mod families;
pub mod forbidden;
pub mod graph;
pub mod linalg;
pub mod partitions;
pub mod sg1;
pub mod spectra;

pub use graph::{named, GraphError, Sign, SignedGraph, StructureFlags, VertexSet};
pub use sg1::Sg1Error;
