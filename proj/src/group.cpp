#include "boxlab/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "boxlab/arith.hpp"
#include "boxlab/poly_f2.hpp"

namespace boxlab {

namespace {

std::int64_t imod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void check_params(const GroupSpec& spec, std::size_t n) {
  if (spec.params.size() != n)
    throw InvalidInputError("GroupSpec: wrong parameter count for " +
                            spec.family_name());
}

// ---------------------------------------------------------------------------

class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 1);
    n_ = spec_.params[0];
    if (n_ < 1) throw InvalidInputError("Cyclic: n must be >= 1");
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override { return n_; }
  Elt identity() const override { return {0}; }
  Elt multiply(const Elt& a, const Elt& b) const override {
    return {imod(a[0] + b[0], n_)};
  }
  Elt inverse(const Elt& a) const override { return {imod(-a[0], n_)}; }
  std::vector<Elt> generators() const override {
    return {{imod(1, n_)}, {imod(-1, n_)}};
  }

 private:
  GroupSpec spec_;
  std::int64_t n_;
};

// ---------------------------------------------------------------------------
// (Z/N)^2 x| Z/delta(N), with Z acting by powers of A = [[1,1],[1,0]].

class SolQuotientGroup final : public FiniteGroup {
 public:
  explicit SolQuotientGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 1);
    N_ = spec_.params[0];
    if (N_ < 2) throw InvalidInputError("SolQuotient: N must be >= 2");
    delta_ = static_cast<std::int64_t>(arith::pisano(arith::Int(static_cast<long>(N_))));
    fib_.resize(delta_ + 2);
    fib_[0] = 0;
    fib_[1] = 1 % N_;
    for (std::int64_t j = 2; j <= delta_ + 1; ++j)
      fib_[j] = (fib_[j - 1] + fib_[j - 2]) % N_;
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override {
    return static_cast<std::uint64_t>(N_) * N_ * delta_;
  }
  std::int64_t delta() const { return delta_; }
  Elt identity() const override { return {0, 0, 0}; }
  Elt multiply(const Elt& a, const Elt& b) const override {
    // (v1, j1)(v2, j2) = (v1 + A^{j1} v2, j1 + j2)
    auto [p, q, r] = power_entries(a[2]);  // A^{j1} = [[p,q],[q,r]]
    std::int64_t x = imod(a[0] + p * b[0] + q * b[1], N_);
    std::int64_t y = imod(a[1] + q * b[0] + r * b[1], N_);
    return {x, y, imod(a[2] + b[2], delta_)};
  }
  Elt inverse(const Elt& a) const override {
    std::int64_t j = imod(-a[2], delta_);
    auto [p, q, r] = power_entries(j);
    std::int64_t x = imod(-(p * a[0] + q * a[1]), N_);
    std::int64_t y = imod(-(q * a[0] + r * a[1]), N_);
    return {x, y, j};
  }
  std::vector<Elt> generators() const override {
    return {{1 % N_, 0, 0}, {N_ - 1, 0, 0},          {0, 1 % N_, 0},
            {0, N_ - 1, 0}, {0, 0, 1 % delta_},      {0, 0, imod(-1, delta_)}};
  }

 private:
  // Entries of A^j mod N: (F_{j+1}, F_j, F_{j-1}), j in [0, delta).
  std::tuple<std::int64_t, std::int64_t, std::int64_t> power_entries(
      std::int64_t j) const {
    std::int64_t fprev = (j == 0) ? 1 % N_ : fib_[j - 1];
    return {fib_[j + 1], fib_[j], fprev};
  }

  GroupSpec spec_;
  std::int64_t N_, delta_;
  std::vector<std::int64_t> fib_;
};

// ---------------------------------------------------------------------------

class SLGroup final : public FiniteGroup {
 public:
  explicit SLGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 2);
    m_ = spec_.params[0];
    N_ = spec_.params[1];
    if (m_ < 2 || m_ > 4) throw InvalidInputError("SLmModN: m must be in [2,4]");
    if (N_ < 2) throw InvalidInputError("SLmModN: N must be >= 2");
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override {
    arith::Int o = arith::sl_order(static_cast<int>(m_),
                                   static_cast<std::uint64_t>(N_));
    if (!o.fits_ulong_p())
      throw BudgetError("SLmModN: group order exceeds 64-bit range");
    return o.get_ui();
  }
  Elt identity() const override {
    Elt e(m_ * m_, 0);
    for (std::int64_t i = 0; i < m_; ++i) e[i * m_ + i] = 1 % N_;
    return e;
  }
  Elt multiply(const Elt& a, const Elt& b) const override {
    Elt c(m_ * m_, 0);
    for (std::int64_t i = 0; i < m_; ++i)
      for (std::int64_t k = 0; k < m_; ++k) {
        std::int64_t aik = a[i * m_ + k];
        if (!aik) continue;
        for (std::int64_t j = 0; j < m_; ++j)
          c[i * m_ + j] = (c[i * m_ + j] + aik * b[k * m_ + j]) % N_;
      }
    return c;
  }
  Elt inverse(const Elt& a) const override {
    // det = 1, so the inverse is the adjugate.
    Elt inv(m_ * m_);
    for (std::int64_t i = 0; i < m_; ++i)
      for (std::int64_t j = 0; j < m_; ++j) {
        std::int64_t c = minor_det(a, j, i);
        if ((i + j) & 1) c = -c;
        inv[i * m_ + j] = imod(c, N_);
      }
    return inv;
  }
  std::vector<Elt> generators() const override {
    // Elementary transvections e_ij(+-1), i != j.
    std::vector<Elt> gens;
    for (std::int64_t i = 0; i < m_; ++i)
      for (std::int64_t j = 0; j < m_; ++j) {
        if (i == j) continue;
        Elt e = identity();
        e[i * m_ + j] = 1 % N_;
        gens.push_back(e);
        e[i * m_ + j] = imod(-1, N_);
        gens.push_back(e);
      }
    return gens;
  }

 private:
  // Determinant of the minor with row r and column c removed, mod N.
  std::int64_t minor_det(const Elt& a, std::int64_t r, std::int64_t c) const {
    std::vector<std::int64_t> sub;
    for (std::int64_t i = 0; i < m_; ++i)
      for (std::int64_t j = 0; j < m_; ++j)
        if (i != r && j != c) sub.push_back(a[i * m_ + j]);
    return det_small(sub, m_ - 1);
  }
  std::int64_t det_small(const std::vector<std::int64_t>& a,
                         std::int64_t n) const {
    if (n == 1) return imod(a[0], N_);
    if (n == 2) return imod(a[0] * a[3] - a[1] * a[2], N_);
    std::int64_t det = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      std::vector<std::int64_t> sub;
      for (std::int64_t r = 1; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c)
          if (c != j) sub.push_back(a[r * n + c]);
      std::int64_t term = a[j] * det_small(sub, n - 1);
      det += (j & 1) ? -term : term;
    }
    return imod(det, N_);
  }

  GroupSpec spec_;
  std::int64_t m_, N_;
};

// ---------------------------------------------------------------------------

std::int64_t lamp_size(LampType t) { return t == LampType::Z2 ? 2 : 4; }

std::int64_t lamp_add(LampType t, std::int64_t a, std::int64_t b) {
  return t == LampType::Z4 ? (a + b) % 4 : (a ^ b);
}

std::int64_t lamp_neg(LampType t, std::int64_t a) {
  return t == LampType::Z4 ? (4 - a) % 4 : a;
}

class WreathGroup final : public FiniteGroup {
 public:
  explicit WreathGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 2);
    lamp_ = static_cast<LampType>(spec_.params[0]);
    n_ = spec_.params[1];
    if (n_ < 1) throw InvalidInputError("WreathOverCycle: n must be >= 1");
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override {
    std::uint64_t o = n_;
    for (std::int64_t i = 0; i < n_; ++i) o *= lamp_size(lamp_);
    return o;
  }
  Elt identity() const override { return Elt(n_ + 1, 0); }
  Elt multiply(const Elt& a, const Elt& b) const override {
    // (f, s)(g, t) = (f + s.g, s + t) with (s.g)(i) = g(i - s).
    Elt c(n_ + 1);
    std::int64_t s = a[n_];
    for (std::int64_t i = 0; i < n_; ++i)
      c[i] = lamp_add(lamp_, a[i], b[imod(i - s, n_)]);
    c[n_] = imod(s + b[n_], n_);
    return c;
  }
  Elt inverse(const Elt& a) const override {
    Elt c(n_ + 1);
    std::int64_t s = a[n_];
    for (std::int64_t i = 0; i < n_; ++i)
      c[i] = lamp_neg(lamp_, a[imod(i + s, n_)]);
    c[n_] = imod(-s, n_);
    return c;
  }
  std::vector<Elt> generators() const override {
    // Shift and its inverse, then the non-identity lamp values at position 0.
    std::vector<Elt> gens;
    Elt shift = identity();
    shift[n_] = 1 % n_;
    gens.push_back(shift);
    shift[n_] = imod(-1, n_);
    gens.push_back(shift);
    for (std::int64_t g = 1; g < lamp_size(lamp_); ++g) {
      Elt e = identity();
      e[0] = g;
      gens.push_back(e);
    }
    return gens;
  }

 private:
  GroupSpec spec_;
  LampType lamp_;
  std::int64_t n_;
};

// ---------------------------------------------------------------------------
// Quotient of (Z/2) wr Z by the congruence subgroup of level P_1...P_k.
// Elements: (residue in F_2[X]/(P_1...P_k), shift mod ell_k).

class LamplighterCongruenceGroup final : public FiniteGroup {
 public:
  explicit LamplighterCongruenceGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 1);
    k_ = spec_.params[0];
    if (k_ < 1 || k_ > 5)
      throw InvalidInputError("LamplighterCongruence: k out of range [1,5]");
    modulus_ = f2::primitive_product(static_cast<int>(k_));
    arith::Int e = arith::ell(static_cast<int>(k_));
    ell_ = e.get_ui();
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override {
    return ell_ << f2::degree(modulus_);
  }
  std::uint64_t ell_k() const { return ell_; }
  f2::Poly modulus() const { return modulus_; }
  Elt identity() const override { return {0, 0}; }
  Elt multiply(const Elt& a, const Elt& b) const override {
    // (P1, j1)(P2, j2) = (P1 + X^{j1} P2, j1 + j2)
    f2::Poly xj = f2::pow_mod(f2::Poly{2}, static_cast<std::uint64_t>(a[1]),
                              modulus_);
    f2::Poly p = static_cast<f2::Poly>(a[0]) ^
                 f2::mul_mod(xj, static_cast<f2::Poly>(b[0]), modulus_);
    return {static_cast<std::int64_t>(p),
            static_cast<std::int64_t>((a[1] + b[1]) % static_cast<std::int64_t>(ell_))};
  }
  Elt inverse(const Elt& a) const override {
    std::int64_t j = imod(-a[1], static_cast<std::int64_t>(ell_));
    f2::Poly xj = f2::pow_mod(f2::Poly{2}, static_cast<std::uint64_t>(j), modulus_);
    f2::Poly p = f2::mul_mod(xj, static_cast<f2::Poly>(a[0]), modulus_);
    return {static_cast<std::int64_t>(p), j};
  }
  std::vector<Elt> generators() const override {
    // Images of diag(X^{+-1}, 1) and [[1,1],[0,1]]; the lamp generator is
    // self-inverse in characteristic 2.
    std::int64_t e = static_cast<std::int64_t>(ell_);
    return {{0, 1 % e}, {0, imod(-1, e)}, {1, 0}};
  }

 private:
  GroupSpec spec_;
  std::int64_t k_;
  f2::Poly modulus_;
  std::uint64_t ell_;
};

// ---------------------------------------------------------------------------

class HeisenbergGroup final : public FiniteGroup {
 public:
  explicit HeisenbergGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 1);
    N_ = spec_.params[0];
    if (N_ < 2) throw InvalidInputError("HeisenbergModN: N must be >= 2");
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override {
    return static_cast<std::uint64_t>(N_) * N_ * N_;
  }
  Elt identity() const override { return {0, 0, 0}; }
  Elt multiply(const Elt& a, const Elt& b) const override {
    // Upper unitriangular: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
    return {imod(a[0] + b[0], N_), imod(a[1] + b[1], N_),
            imod(a[2] + b[2] + a[0] * b[1], N_)};
  }
  Elt inverse(const Elt& a) const override {
    return {imod(-a[0], N_), imod(-a[1], N_), imod(a[0] * a[1] - a[2], N_)};
  }
  std::vector<Elt> generators() const override {
    return {{1 % N_, 0, 0}, {N_ - 1, 0, 0}, {0, 1 % N_, 0}, {0, N_ - 1, 0}};
  }

 private:
  GroupSpec spec_;
  std::int64_t N_;
};

// ---------------------------------------------------------------------------
// Quotients of Z x Z/2 with generating set {(+-1,0), (0,1)}.
//   eps = 2: quotient by nZ x Z/2, cyclic of order n, (0,1) becomes a loop.
//   eps = 0: quotient by <(n,0)> = Z/n x Z/2, encoded (x, t).
//   eps = 1: quotient by <(n,1)>, cyclic of order 2n via z = x + t*n mod 2n.

class ZxZ2QuotientGroup final : public FiniteGroup {
 public:
  explicit ZxZ2QuotientGroup(GroupSpec spec) : spec_(std::move(spec)) {
    check_params(spec_, 2);
    n_ = spec_.params[0];
    eps_ = spec_.params[1];
    if (n_ < 1) throw InvalidInputError("ZxZ2Quotient: n must be >= 1");
    if (eps_ < 0 || eps_ > 2)
      throw InvalidInputError("ZxZ2Quotient: eps must be in {0,1,2}");
  }
  const GroupSpec& spec() const override { return spec_; }
  std::uint64_t order() const override {
    return eps_ == 2 ? n_ : 2 * n_;
  }
  Elt identity() const override {
    return eps_ == 0 ? Elt{0, 0} : Elt{0};
  }
  Elt multiply(const Elt& a, const Elt& b) const override {
    switch (eps_) {
      case 2: return {imod(a[0] + b[0], n_)};
      case 0: return {imod(a[0] + b[0], n_), (a[1] + b[1]) & 1};
      default: return {imod(a[0] + b[0], 2 * n_)};
    }
  }
  Elt inverse(const Elt& a) const override {
    switch (eps_) {
      case 2: return {imod(-a[0], n_)};
      case 0: return {imod(-a[0], n_), a[1]};
      default: return {imod(-a[0], 2 * n_)};
    }
  }
  std::vector<Elt> generators() const override {
    // Images of (1,0), (-1,0), (0,1).
    switch (eps_) {
      case 2:
        return {{1 % n_}, {imod(-1, n_)}, {0}};
      case 0:
        return {{1 % n_, 0}, {imod(-1, n_), 0}, {0, 1}};
      default:
        return {{1 % (2 * n_)}, {imod(-1, 2 * n_)}, {imod(n_, 2 * n_)}};
    }
  }

 private:
  GroupSpec spec_;
  std::int64_t n_, eps_;
};

}  // namespace

std::string GroupSpec::family_name() const {
  switch (family) {
    case Family::Cyclic: return "cyclic";
    case Family::SolQuotient: return "sol";
    case Family::SLmModN: return "sl";
    case Family::WreathOverCycle: return "wreath";
    case Family::LamplighterCongruence: return "lamplighter";
    case Family::HeisenbergModN: return "heisenberg";
    case Family::ZxZ2Quotient: return "zxz2";
  }
  return "?";
}

std::string GroupSpec::to_string() const {
  std::string s = family_name() + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

std::unique_ptr<FiniteGroup> make_group(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Cyclic: return std::make_unique<CyclicGroup>(spec);
    case Family::SolQuotient: return std::make_unique<SolQuotientGroup>(spec);
    case Family::SLmModN: return std::make_unique<SLGroup>(spec);
    case Family::WreathOverCycle: return std::make_unique<WreathGroup>(spec);
    case Family::LamplighterCongruence:
      return std::make_unique<LamplighterCongruenceGroup>(spec);
    case Family::HeisenbergModN: return std::make_unique<HeisenbergGroup>(spec);
    case Family::ZxZ2Quotient: return std::make_unique<ZxZ2QuotientGroup>(spec);
  }
  throw InvalidInputError("make_group: unknown family");
}

// ---------------------------------------------------------------------------
// Infinite parents.

bool ZParent::in_filtration_subgroup(const Elt& g, int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > moduli_.size())
    throw InvalidInputError("ZParent: filtration index out of range");
  return g[0] % moduli_[k - 1] == 0;
}

namespace {

// 2x2 integer matrix power of A = [[1,1],[1,0]]; n may be negative
// (A^{-1} = [[0,1],[1,-1]]).
std::array<std::int64_t, 4> fib_matrix_pow(std::int64_t n) {
  std::array<std::int64_t, 4> base =
      n >= 0 ? std::array<std::int64_t, 4>{1, 1, 1, 0}
             : std::array<std::int64_t, 4>{0, 1, 1, -1};
  std::uint64_t e = n >= 0 ? n : -n;
  std::array<std::int64_t, 4> r{1, 0, 0, 1};
  auto mul2 = [](const std::array<std::int64_t, 4>& a,
                 const std::array<std::int64_t, 4>& b) {
    return std::array<std::int64_t, 4>{
        a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };
  while (e) {
    if (e & 1) r = mul2(r, base);
    base = mul2(base, base);
    e >>= 1;
  }
  return r;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Elt SolParent::multiply(const Elt& a, const Elt& b) const {
  auto m = fib_matrix_pow(a[2]);
  return {a[0] + m[0] * b[0] + m[1] * b[1], a[1] + m[2] * b[0] + m[3] * b[1],
          a[2] + b[2]};
}

Elt SolParent::inverse(const Elt& a) const {
  auto m = fib_matrix_pow(-a[2]);
  return {-(m[0] * a[0] + m[1] * a[1]), -(m[2] * a[0] + m[3] * a[1]), -a[2]};
}

std::vector<Elt> SolParent::generators() const {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

bool SolParent::in_filtration_subgroup(const Elt& g, int k) const {
  if (k < 1) throw InvalidInputError("SolParent: filtration index must be >= 1");
  std::int64_t N = ipow(base_, k);
  if (g[0] % N || g[1] % N) return false;
  auto delta = arith::pisano(arith::Int(static_cast<long>(N)));
  return g[2] % static_cast<std::int64_t>(delta) == 0;
}

namespace {

// Canonicalize a Laurent-polynomial element (offset, bits, shift):
// the zero polynomial has offset 0; otherwise bit 0 of `bits` is set.
Elt laurent_canon(std::int64_t offset, std::uint64_t bits, std::int64_t shift) {
  if (bits == 0) return {0, 0, shift};
  while (!(bits & 1)) {
    bits >>= 1;
    ++offset;
  }
  return {offset, static_cast<std::int64_t>(bits), shift};
}

}  // namespace

Elt LamplighterParent::multiply(const Elt& a, const Elt& b) const {
  // (p1, s1)(p2, s2) = (p1 + X^{s1} p2, s1 + s2)
  std::int64_t o1 = a[0], o2 = b[0] + a[2];
  std::uint64_t b1 = static_cast<std::uint64_t>(a[1]);
  std::uint64_t b2 = static_cast<std::uint64_t>(b[1]);
  if (b1 == 0) return laurent_canon(o2, b2, a[2] + b[2]);
  if (b2 == 0) return laurent_canon(o1, b1, a[2] + b[2]);
  std::int64_t o = std::min(o1, o2);
  // Word-length use keeps degrees small; 64 bits of support is ample.
  std::uint64_t bits = (b1 << (o1 - o)) ^ (b2 << (o2 - o));
  return laurent_canon(o, bits, a[2] + b[2]);
}

Elt LamplighterParent::inverse(const Elt& a) const {
  return laurent_canon(a[0] - a[2], static_cast<std::uint64_t>(a[1]), -a[2]);
}

std::vector<Elt> LamplighterParent::generators() const {
  return {{0, 0, 1}, {0, 0, -1}, {0, 1, 0}};
}

bool LamplighterParent::in_filtration_subgroup(const Elt& g, int k) const {
  arith::Int ellk = arith::ell(k);
  if (!ellk.fits_slong_p())
    throw BudgetError("LamplighterParent: ell_k too large");
  if (g[2] % ellk.get_si()) return false;
  // X is a unit mod P_1...P_k, so X^offset * bits = 0 mod I_k iff the
  // polynomial part is divisible by P_1...P_k.
  f2::Poly m = f2::primitive_product(k);
  return f2::mod(static_cast<f2::Poly>(g[1]), m) == 0;
}

}  // namespace boxlab
