#pragma once

// Exact element arithmetic and generating sets for the finite group families
// (cyclic, SOL congruence quotients, SL_m mod N, wreath products over cycles,
// lamplighter congruence quotients, Heisenberg mod N, quotients of Z x Z/2),
// plus exact arithmetic in the infinite parents (Z, the SOL lattice, the
// lamplighter group) needed for injectivity-radius checks.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "boxlab/errors.hpp"

namespace boxlab {

// Canonical element encoding: a fixed-width integer tuple per family.
// Equality is component-wise equality; every element is kept fully reduced.
using Elt = std::vector<std::int64_t>;

struct EltHash {
  std::size_t operator()(const Elt& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class Family {
  Cyclic,
  SolQuotient,
  SLmModN,
  WreathOverCycle,
  LamplighterCongruence,
  HeisenbergModN,
  ZxZ2Quotient,
};

enum class LampType { Z2, Z4, Z2xZ2 };

struct GroupSpec {
  Family family;
  // Parameter layout per family:
  //   Cyclic:                { n }
  //   SolQuotient:           { N }
  //   SLmModN:               { m, N }
  //   WreathOverCycle:       { lamp (LampType), n }
  //   LamplighterCongruence: { k }
  //   HeisenbergModN:        { N }
  //   ZxZ2Quotient:          { n, eps }  eps in {0,1}: quotient by <(n,eps)>,
  //                                      eps = 2: quotient by nZ x Z/2
  std::vector<std::int64_t> params;

  std::string family_name() const;
  std::string to_string() const;

  static GroupSpec cyclic(std::int64_t n) { return {Family::Cyclic, {n}}; }
  static GroupSpec sol_quotient(std::int64_t N) {
    return {Family::SolQuotient, {N}};
  }
  static GroupSpec sl(std::int64_t m, std::int64_t N) {
    return {Family::SLmModN, {m, N}};
  }
  static GroupSpec wreath(LampType lamp, std::int64_t n) {
    return {Family::WreathOverCycle, {static_cast<std::int64_t>(lamp), n}};
  }
  static GroupSpec lamplighter_congruence(std::int64_t k) {
    return {Family::LamplighterCongruence, {k}};
  }
  static GroupSpec heisenberg(std::int64_t N) {
    return {Family::HeisenbergModN, {N}};
  }
  static GroupSpec zxz2_quotient(std::int64_t n, std::int64_t eps) {
    return {Family::ZxZ2Quotient, {n, eps}};
  }
};

// Minimal group interface shared by finite quotients and infinite parents.
class Group {
 public:
  virtual ~Group() = default;
  virtual Elt identity() const = 0;
  virtual Elt multiply(const Elt& a, const Elt& b) const = 0;
  virtual Elt inverse(const Elt& a) const = 0;
  // Canonical symmetric generating multiset, in a fixed order.
  virtual std::vector<Elt> generators() const = 0;
};

class FiniteGroup : public Group {
 public:
  virtual const GroupSpec& spec() const = 0;
  // Exact cardinality via the family's closed form.
  virtual std::uint64_t order() const = 0;
};

std::unique_ptr<FiniteGroup> make_group(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Infinite parents. Each supports an exact membership test for the k-th
// filtration subgroup of its canonical congruence filtration.

class ParentGroup : public Group {
 public:
  // True iff g lies in the k-th filtration subgroup.
  virtual bool in_filtration_subgroup(const Elt& g, int k) const = 0;
};

// Z with S = {+1, -1}; filtration subgroup k is m_k Z for a caller-supplied
// modulus schedule.
class ZParent : public ParentGroup {
 public:
  explicit ZParent(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {}
  Elt identity() const override { return {0}; }
  Elt multiply(const Elt& a, const Elt& b) const override { return {a[0] + b[0]}; }
  Elt inverse(const Elt& a) const override { return {-a[0]}; }
  std::vector<Elt> generators() const override { return {{1}, {-1}}; }
  bool in_filtration_subgroup(const Elt& g, int k) const override;

 private:
  std::vector<std::int64_t> moduli_;
};

// Z^2 x| Z with Z acting by powers of A = [[1,1],[1,0]].
// Element: (x, y, n). Filtration subgroup k is Gamma(b^k) for base b.
class SolParent : public ParentGroup {
 public:
  explicit SolParent(std::int64_t base) : base_(base) {}
  Elt identity() const override { return {0, 0, 0}; }
  Elt multiply(const Elt& a, const Elt& b) const override;
  Elt inverse(const Elt& a) const override;
  std::vector<Elt> generators() const override;
  bool in_filtration_subgroup(const Elt& g, int k) const override;

 private:
  std::int64_t base_;
};

// (Z/2) wr Z realized on 2x2 upper-triangular matrices over F_2[X, X^-1].
// Element encoding: (offset, support bits relative to offset, shift); the
// zero polynomial is (0, 0, shift).
class LamplighterParent : public ParentGroup {
 public:
  Elt identity() const override { return {0, 0, 0}; }
  Elt multiply(const Elt& a, const Elt& b) const override;
  Elt inverse(const Elt& a) const override;
  std::vector<Elt> generators() const override;
  bool in_filtration_subgroup(const Elt& g, int k) const override;
};

}  // namespace boxlab
