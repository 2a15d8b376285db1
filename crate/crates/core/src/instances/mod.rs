//! Concrete dual pairs: quantum Weyl, quantum Heisenberg and lattice
//! Heisenberg algebras.

pub mod cartan;
pub mod lattice;
pub mod partition;
pub mod qheis;
pub mod registry;
pub mod sym;
pub mod weyl;

pub use cartan::{nonsingularity_check, CartanData};
pub use lattice::{build_lattice, Lattice};
pub use partition::{colored_sequences, partitions_of, ColoredSequence, MultiPartition, Partition};
pub use qheis::{build_qheis, phi_derivation, qheis_pair, ColoredGenerators, QHeis};
pub use registry::{InstanceBuilder, InstanceConfig, InstanceRegistry, LoadedInstance, MatrixSpec, ShiftConfig};
pub use sym::{ColoredForm, ColoredPowerSums, FormKind};
pub use weyl::{build_weyl, weyl_pairing, QuantumPolynomial, Weyl, WeylForm, WeylGenerators};
