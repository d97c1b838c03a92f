#pragma once

// Explicit bijection between the wreath quotients with Z/4 lamps and with
// Z/2 x Z/2 lamps over the same cycle, verified to be an isomorphism of
// pointed Cayley graphs.
//
// With the all-non-identity-lamp generating convention both Cayley graphs
// see only the complete graph on the four lamp states, so ANY injective lamp
// relabeling preserves adjacency. What distinguishes a genuine isomorphism
// of pointed graphs (and hence equality of distance spectra from the
// identity) is that the identity maps to the identity; verify_isomorphism
// checks that basepoint condition plus the full edge correspondence in both
// directions.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxlab/group.hpp"

namespace boxlab {

struct LampBijection {
  std::array<int, 4> to;  // Z/4 value -> Z/2 x Z/2 bitmask

  void validate() const;  // throws InvalidInputError unless bijective
  bool fixes_identity() const { return to[0] == 0; }
  int inverse_of(int w) const;

  static LampBijection standard() { return {{0, 1, 2, 3}}; }
  // All six bijections fixing the identity lamp.
  static std::vector<LampBijection> all_identity_fixing();
  // Negative control: moves the identity lamp.
  static LampBijection moved_identity() { return {{1, 0, 2, 3}}; }
};

// Apply the lamp bijection coordinate-wise; shift unchanged.
Elt induced_map(const LampBijection& b, std::int64_t n, const Elt& g);
Elt induced_map_inverse(const LampBijection& b, std::int64_t n, const Elt& g);

struct IsoReport {
  bool ok = false;
  std::uint64_t elements = 0;
  std::uint64_t edges_checked = 0;
  std::string failure;  // "basepoint" or "edge" when !ok
  std::optional<Elt> witness_source;
  std::optional<Elt> witness_image;
  std::string to_json(double elapsed_seconds) const;
};

// Streamed exhaustive verification over all n * 4^n elements (n <= 8):
// basepoint preserved, and for every element/generator pair the image edge
// exists on the other side, in both directions. OpenMP over element ranges;
// the serial variant is the reference.
IsoReport verify_isomorphism(const LampBijection& b, int n);
IsoReport verify_isomorphism_serial(const LampBijection& b, int n);

// Multiset of BFS distances from the identity, as a histogram by distance.
std::vector<std::uint64_t> distance_spectrum(const GroupSpec& spec,
                                             std::uint64_t budget);

}  // namespace boxlab
