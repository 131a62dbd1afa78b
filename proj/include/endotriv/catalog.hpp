#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "endotriv/group.hpp"

namespace endotriv {

Group symmetric_group(std::size_t n);
Group alternating_group(std::size_t n);
/// Order 2n, acting on n points.
Group dihedral_group(std::size_t n);
Group cyclic_group(std::size_t n);
/// Heisenberg group of order p^3 on its p^3 elements, extended by the
/// automorphism (v, c) -> (Mv, det(M) c) for a 2x2 matrix M over F_p.
Group extraspecial_extension(std::uint64_t p, const std::vector<std::uint64_t>& m);

struct CatalogEntry {
  std::string name;
  std::string recipe;
  std::uint64_t expected_order = 0;
  std::function<Group()> build;
};

/// Named groups. Families Sn, An, Dn, Cn are also accepted for any n.
const std::vector<CatalogEntry>& catalog();

/// Catalog name, family name, or a JSON file
/// {"degree": n, "generators": ["(1 2 3)", ...]}. Throws InputError.
Group load_group(const std::string& name_or_file);

/// (group, prime) pairs that the exhaustive checks run over.
std::vector<std::pair<std::string, std::uint64_t>> property_catalog();

}  // namespace endotriv
