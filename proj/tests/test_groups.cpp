#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "gpm/bundled.hpp"
#include "gpm/errors.hpp"
#include "gpm/group.hpp"
#include "support/random_subgroups.hpp"

using namespace gpm;

TEST_CASE("cyclic groups") {
  GroupPtr z6 = cyclic_group(6);
  CHECK(z6->order() == 6);
  CHECK(z6->exponent() == 6);
  CHECK(z6->is_abelian());
  CHECK(conjugacy_classes(*z6).size() == 6);

  GroupPtr z1 = cyclic_group(1);
  CHECK(z1->order() == 1);
  CHECK(z1->identity() == 0);
}

TEST_CASE("symmetric group S3") {
  GroupPtr s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  CHECK(s3->exponent() == 6);
  auto classes = conjugacy_classes(*s3);
  REQUIRE(classes.size() == 3);
  std::multiset<size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  // identity class first
  CHECK(classes[0] == std::vector<int>{s3->identity()});
}

TEST_CASE("quaternion and dihedral tables validate") {
  GroupPtr q8 = quaternion_group();
  CHECK(q8->order() == 8);
  CHECK(conjugacy_classes(*q8).size() == 5);
  CHECK(q8->exponent() == 4);

  GroupPtr d4 = dihedral_group(4);
  CHECK(d4->order() == 8);
  CHECK_FALSE(d4->is_abelian());
  CHECK(conjugacy_classes(*d4).size() == 5);
}

TEST_CASE("construct_group specs") {
  CHECK(construct_group("cyclic:6")->order() == 6);
  CHECK(construct_group("symmetric:3")->order() == 6);
  CHECK(construct_group("dihedral:4")->order() == 8);
  CHECK(construct_group("quaternion:8")->order() == 8);
  CHECK(construct_group("abelian:2x2")->order() == 4);
  CHECK_THROWS_AS(construct_group("frobnicate:3"), domain_error);
}

TEST_CASE("cayley table file round trip and validation") {
  std::stringstream good("order 3\n0 1 2\n1 2 0\n2 0 1\nnames e a b\n");
  GroupPtr g = group_from_table_stream(good);
  CHECK(g->order() == 3);
  CHECK(g->name(1) == "a");
  CHECK(*g->element_by_name("b") == 2);

  // row 1 column 1 broken: 1*1 = 1 makes the table non-associative/non-group
  std::stringstream bad("order 3\n0 1 2\n1 1 0\n2 0 1\n");
  CHECK_THROWS_AS(group_from_table_stream(bad), validation_error);
}

TEST_CASE("direct products") {
  GroupPtr s3 = symmetric_group(3);
  GroupProduct p({s3, s3});
  CHECK(p.order() == 36);
  GroupPtr z6 = cyclic_group(6);
  GroupProduct q({z6, z6, z6});
  CHECK(q.order() == 216);
  GroupProduct single({cyclic_group(2)});
  CHECK(single.order() == 2);
  CHECK(p.homogeneous());
}

TEST_CASE("subgroup closure on the bundled s3 subgroup") {
  Subgroup h = bundled::s3_mixed();
  CHECK(h.size() == 6);
  // matches the explicit six tuples
  GroupPtr s3 = symmetric_group(3);
  auto idx = [&](const char* nm) { return *s3->element_by_name(nm); };
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"123", "123"}, {"123", "231"}, {"123", "312"},
           {"213", "213"}, {"213", "321"}, {"213", "132"}}) {
    CHECK(h.contains({idx(a), idx(b)}));
  }

  Subgroup diag = bundled::s3_diagonal();
  CHECK(diag.size() == 6);

  Subgroup triv = subgroup_closure(h.parent(), {});
  CHECK(triv.size() == 1);
}

TEST_CASE("closure cap") {
  GroupPtr z6 = cyclic_group(6);
  GroupProduct g({z6, z6});
  CHECK_THROWS_AS(subgroup_closure(g, {{1, 0}, {0, 1}}, 10), scale_error);
}

TEST_CASE("projections") {
  Subgroup h = bundled::s3_mixed();
  CHECK(project(h, 0b01).size() == 2);
  CHECK(project(h, 0b10).size() == 6);
  CHECK(project(h, 0).size() == 1);

  // project(project(H,T),S) = project(H,S) for S within T
  Subgroup ht = project(h, 0b11);
  CHECK(project(ht, 0b01).elements() == project(h, 0b01).elements());
}

TEST_CASE("kernel contraction") {
  Subgroup h = bundled::s3_mixed();
  // only the identity tuple has identity second coordinate
  CHECK(kernel_contract(h, 0b10).size() == 1);
  Subgroup diag = bundled::s3_diagonal();
  CHECK(kernel_contract(diag, 0b01).size() == 1);

  GroupProduct g = h.parent();
  Subgroup full = full_subgroup(g);
  CHECK(kernel_contract(full, 0b01).size() == 6);
  CHECK_THROWS_AS(kernel_contract(h, 0b11), domain_error);

  // |kernel_contract(H,S)| * |project(H,S)| = |H|
  for (Mask s : {Mask(0b01), Mask(0b10)})
    CHECK(kernel_contract(h, s).size() * project(h, s).size() == h.size());
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(*cyclic_group(6)).size() == 2);
  CHECK(automorphisms(*symmetric_group(3)).size() == 6);
  CHECK(automorphisms(*cyclic_group(1)).size() == 1);
  CHECK(automorphisms(*quaternion_group()).size() == 24);
  CHECK(automorphisms(*abelian_product_group({2, 2})).size() == 6);
  // each result preserves the table
  GroupPtr s3 = symmetric_group(3);
  for (const auto& phi : automorphisms(*s3))
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(phi[s3->mul(a, b)] == s3->mul(phi[a], phi[b]));
  CHECK_THROWS_AS(automorphisms(*symmetric_group(4), 20), scale_error);
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(cyclic_group(6)).size() == 4);
  CHECK(enumerate_subgroups(symmetric_group(3)).size() == 6);
  CHECK(enumerate_subgroups(cyclic_group(1)).size() == 1);
  // Z/2 x Z/2 has 5 subgroups
  GroupPtr z2 = cyclic_group(2);
  CHECK(enumerate_subgroups(GroupProduct({z2, z2})).size() == 5);
  GroupPtr z30 = cyclic_group(300);
  CHECK_THROWS_AS(enumerate_subgroups(z30), scale_error);
}

TEST_CASE("generator files parse factor element syntax") {
  GroupPtr s3 = symmetric_group(3);
  GroupProduct g({s3, s3});
  std::stringstream in("# comment\n213 | 213\n123|231\n");
  auto gens = parse_generators(g, in);
  REQUIRE(gens.size() == 2);
  Subgroup h = subgroup_closure(g, gens);
  CHECK(h.elements() == bundled::s3_mixed().elements());

  std::stringstream bad("213|nope\n");
  CHECK_THROWS_AS(parse_generators(g, bad), validation_error);
}

TEST_CASE("random subgroups satisfy closure and Lagrange") {
  std::mt19937_64 rng(7);
  for (const auto& h : testsupport::random_subgroups(25, rng)) {
    Int order = h.parent().order();
    CHECK(divides(Int((long)h.size()), order));
    CHECK(h.contains(h.parent().identity()));
  }
}
