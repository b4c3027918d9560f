#pragma once

#include <string>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/bits.hpp"
#include "ua/group_topology.hpp"
#include "ua/partition.hpp"

namespace ua {

// The stock algebras used by the test and acceptance suites. Groups carry
// the signature (mul/2, inv/1, e/0); rings add mul2/2 to the additive group
// (add/2, neg/1, zero/0, mul/2); lattices are (meet/2, join/2).
FiniteAlgebra make_cyclic_group(int n);
FiniteAlgebra make_zn_ring(int n);
FiniteAlgebra make_klein_four();      // Z2 x Z2 as a group
FiniteAlgebra make_sym3();            // S3 as permutations of {0,1,2}
FiniteAlgebra make_dihedral4();       // symmetries of the square
FiniteAlgebra make_lattice_chain2();  // two-element lattice
FiniteAlgebra make_lattice_2x2();     // four-element Boolean lattice
FiniteAlgebra make_empty_signature(int n);

/// Every algebra above by its catalog name (z2, z3, z4, z6, z8, z2ring,
/// z4ring, z6ring, klein4, s3, d4, lat2, lat2x2).
FiniteAlgebra make_catalog_algebra(const std::string& name);
std::vector<std::string> catalog_names();

// Group-theoretic oracles, computed generically from the multiplication
// table.
std::vector<Bitset> all_subgroups(const FiniteGroup& g);
bool is_normal_subgroup(const FiniteGroup& g, const Bitset& h);
Bitset subgroup_generate(const FiniteGroup& g, const std::vector<Elem>& gens);

/// Subgroup generated by the commutators [m,n] = m^{-1} n^{-1} m n.
Bitset commutator_subgroup(const FiniteGroup& g, const Bitset& m, const Bitset& n);

Partition congruence_from_normal(const FiniteGroup& g, const Bitset& n);
Bitset normal_from_congruence(const FiniteGroup& g, const Partition& p);

}  // namespace ua
