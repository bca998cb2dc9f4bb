#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gpm/cyclotomic.hpp"
#include "gpm/group.hpp"

namespace gpm {

// Exact character table: rows are irreducibles, columns are conjugacy classes
// (sorted by least element, identity class first).  Values live in Z[zeta_e].
// Validated on construction: row orthogonality and sum of dim^2 = |Gamma|.
// The trivial character is row 0.
struct CharacterTable {
  enum class Source { builtin, file };

  GroupPtr group;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;              // element index -> class index
  int zeta_order = 1;
  std::vector<std::vector<Cyclotomic>> chi;  // [irrep][class]
  std::vector<Int> dims;
  Source source = Source::builtin;

  int irrep_count() const { return (int)chi.size(); }
  const Cyclotomic& value(int irrep, int element) const {
    return chi[irrep][class_of[element]];
  }
};

// Built-in constructions: cyclic, abelian products, dihedral, S_n (n <= 4), Q8.
// zeta_order 0 means "use the group exponent"; otherwise it must be a multiple
// of every character's natural order.
CharacterTable character_table(const GroupPtr& g, int zeta_order = 0);

// "classes k zeta e" header, class-sizes line, then k rows of k cyclotomic values.
CharacterTable character_table_from_stream(const GroupPtr& g, std::istream& in,
                                           int zeta_order = 0);
CharacterTable character_table_from_file(const GroupPtr& g, const std::string& path,
                                         int zeta_order = 0);

// Orthogonality + dimension checks; throws validation_error on failure.
void validate_character_table(const CharacterTable& t);

}  // namespace gpm
