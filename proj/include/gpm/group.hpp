#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpm/errors.hpp"
#include "gpm/numeric.hpp"
#include "gpm/subset.hpp"

namespace gpm {

// A finite group given by its full multiplication table on element indices
// 0..order-1.  Immutable after construction; construction validates the
// axioms (all triples for order <= 512, sampled above).
class FiniteGroup {
 public:
  enum class Family { cyclic, abelian_product, symmetric, dihedral, quaternion, table };

  FiniteGroup(std::vector<int> mul_table, std::vector<std::string> names,
              Family family, std::vector<int> params);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[(size_t)a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int exponent() const { return exponent_; }
  const std::string& name(int g) const { return names_[g]; }
  std::optional<int> element_by_name(const std::string& s) const;
  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }

  int element_order(int g) const;
  bool is_abelian() const;
  bool same_table(const FiniteGroup& other) const;

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int identity_;
  int exponent_;
  std::vector<std::string> names_;
  Family family_;
  std::vector<int> params_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);  // n <= 6
GroupPtr dihedral_group(int n);   // order 2n, n >= 2
GroupPtr quaternion_group();      // Q8
GroupPtr abelian_product_group(const std::vector<int>& orders);
GroupPtr group_from_table_stream(std::istream& in);
GroupPtr group_from_table_file(const std::string& path);

// Parses "cyclic:6", "symmetric:3", "dihedral:4", "quaternion:8",
// "abelian:2x2", "table:<path>".
GroupPtr construct_group(const std::string& spec);

// Element tuples of a product; coordinate i holds an index into factor i.
using Tuple = std::vector<int>;

class GroupProduct {
 public:
  explicit GroupProduct(std::vector<GroupPtr> factors);

  int arity() const { return (int)factors_.size(); }
  const FiniteGroup& factor(int i) const { return *factors_[i]; }
  GroupPtr factor_ptr(int i) const { return factors_[i]; }
  const std::vector<GroupPtr>& factors() const { return factors_; }

  Tuple identity() const;
  Tuple mul(const Tuple& a, const Tuple& b) const;
  Tuple inv(const Tuple& a) const;
  bool valid_tuple(const Tuple& t) const;

  Int order() const;
  Int order_of_subset(Mask s) const;
  bool homogeneous() const;  // all factors share one multiplication table

  GroupProduct restricted(Mask s) const;

  std::string tuple_name(const Tuple& t) const;  // coordinates joined with "|"

 private:
  std::vector<GroupPtr> factors_;
};

// A subgroup of a product, stored as the sorted list of its element tuples.
class Subgroup {
 public:
  Subgroup(GroupProduct parent, std::vector<Tuple> elements,
           std::vector<Tuple> generators = {});

  // for callers whose construction already guarantees closure (enumeration)
  struct trusted_t {};
  Subgroup(trusted_t, GroupProduct parent, std::vector<Tuple> sorted_elements,
           std::vector<Tuple> generators);

  const GroupProduct& parent() const { return parent_; }
  const std::vector<Tuple>& elements() const { return elements_; }
  const std::vector<Tuple>& generators() const { return generators_; }
  size_t size() const { return elements_.size(); }
  bool contains(const Tuple& t) const;

 private:
  GroupProduct parent_;
  std::vector<Tuple> elements_;   // sorted lexicographically
  std::vector<Tuple> generators_;
};

// A plain subset of a product, no closure requirement.
struct RawSubset {
  GroupProduct parent;
  std::vector<Tuple> elements;  // distinct, nonempty
};

GroupProduct direct_product(std::vector<GroupPtr> factors);

// Breadth-first closure of the generators; empty generator list gives the
// trivial subgroup.  Throws scale_error past `cap` elements.
Subgroup subgroup_closure(const GroupProduct& parent, const std::vector<Tuple>& generators,
                          size_t cap = 1000000);

Subgroup trivial_subgroup(const GroupProduct& parent);
Subgroup full_subgroup(const GroupProduct& parent);

// Image of H under projection to the coordinates in S (S == 0 gives the
// trivial group on an empty product).
Subgroup project(const Subgroup& h, Mask s);

// pi_{E-S}(ker pi_S).  Requires S != E.
Subgroup kernel_contract(const Subgroup& h, Mask s);

// Conjugacy classes, sorted by least element index.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// All automorphisms as permutations of element indices.  |G| <= cap.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int cap = 24);

// Every subgroup of the product: cyclic subgroups, then joins to a fixpoint.
// Throws scale_error if |G| > order_cap or the count passes count_cap.
std::vector<Subgroup> enumerate_subgroups(const GroupProduct& g, long order_cap = 256,
                                          size_t count_cap = 20000);
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, long order_cap = 256,
                                          size_t count_cap = 20000);

// Generator tuples from a stream: one tuple per line, coordinates separated
// by '|', each coordinate in the factor's element syntax.
std::vector<Tuple> parse_generators(const GroupProduct& parent, std::istream& in);
Subgroup subgroup_from_file(const GroupProduct& parent, const std::string& path,
                            size_t cap = 1000000);

}  // namespace gpm
