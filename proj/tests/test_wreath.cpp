#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "boxlab/wreath_iso.hpp"

using namespace boxlab;

TEST_CASE("induced map basics") {
  auto b = LampBijection::standard();
  b.validate();
  CHECK(induced_map(b, 2, {0, 0, 0}) == Elt{0, 0, 0});
  CHECK(induced_map(b, 2, {1, 0, 0}) == Elt{b.to[1], 0, 0});
  CHECK(induced_map_inverse(b, 2, induced_map(b, 2, {3, 2, 1})) ==
        Elt{3, 2, 1});
}

TEST_CASE("induced map is bijective on all 32 elements for n = 2") {
  for (const auto& b : LampBijection::all_identity_fixing()) {
    std::set<Elt> images;
    for (int f0 = 0; f0 < 4; ++f0)
      for (int f1 = 0; f1 < 4; ++f1)
        for (int s = 0; s < 2; ++s)
          images.insert(induced_map(b, 2, {f0, f1, s}));
    CHECK(images.size() == 32);
  }
}

TEST_CASE("bijection validation") {
  LampBijection bad{{0, 1, 1, 3}};
  CHECK_THROWS_AS(bad.validate(), InvalidInputError);
  CHECK(LampBijection::all_identity_fixing().size() == 6);
}

TEST_CASE("isomorphism holds for n = 2 and n = 4") {
  auto rep2 = verify_isomorphism(LampBijection::standard(), 2);
  CHECK(rep2.ok);
  CHECK(rep2.elements == 32);
  auto rep4 = verify_isomorphism(LampBijection::standard(), 4);
  CHECK(rep4.ok);
  CHECK(rep4.elements == 1024);
}

TEST_CASE("every identity-fixing bijection works for n <= 4") {
  for (const auto& b : LampBijection::all_identity_fixing())
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(n);
      CHECK(verify_isomorphism(b, n).ok);
    }
}

TEST_CASE("omp kernel equals serial reference") {
  for (int n = 2; n <= 3; ++n) {
    auto a = verify_isomorphism(LampBijection::standard(), n);
    auto s = verify_isomorphism_serial(LampBijection::standard(), n);
    CHECK(a.ok == s.ok);
    CHECK(a.edges_checked == s.edges_checked);
  }
}

TEST_CASE("negative control: moved identity lamp fails with a witness") {
  auto rep = verify_isomorphism(LampBijection::moved_identity(), 2);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure == "basepoint");
  REQUIRE(rep.witness_source.has_value());
  REQUIRE(rep.witness_image.has_value());
  // The identity is carried to a non-identity vertex, so distances from the
  // identity are not preserved even though lamp relabelings keep adjacency.
  CHECK(*rep.witness_source == Elt{0, 0, 0});
  CHECK(*rep.witness_image != Elt{0, 0, 0});
  CHECK(rep.to_json(0.0).find("\"failure\":\"basepoint\"") !=
        std::string::npos);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(verify_isomorphism(LampBijection::standard(), 9),
                  BudgetError);
}

TEST_CASE("distance spectra coincide for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto a = distance_spectrum(GroupSpec::wreath(LampType::Z4, n), 1 << 11);
    auto b = distance_spectrum(GroupSpec::wreath(LampType::Z2xZ2, n), 1 << 11);
    CHECK(a == b);
  }
}

TEST_CASE("matching orders n * 4^n") {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t expect = static_cast<std::uint64_t>(n) << (2 * n);
    CHECK(make_group(GroupSpec::wreath(LampType::Z4, n))->order() == expect);
    CHECK(make_group(GroupSpec::wreath(LampType::Z2xZ2, n))->order() ==
          expect);
  }
}
