#ifndef OSP_RING_HPP
#define OSP_RING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace osp {

using Integer = mpz_class;

class RegistryMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonUnitConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ordered list of distinct variable names. A name's index never changes.
class VarRegistry {
 public:
  static constexpr std::size_t kMaxVars = 24;

  explicit VarRegistry(std::vector<std::string> names);

  // a, x, y, t, u, z, q, t1..t7
  static std::shared_ptr<const VarRegistry> standard();
  // The standard symbols followed by F1..F<count>.
  static std::shared_ptr<const VarRegistry> with_sequence(int count);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent

  bool operator==(const VarRegistry& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using Registry = std::shared_ptr<const VarRegistry>;

// Exponent vector with signed entries; slots past the registry size stay zero.
class Monomial {
 public:
  Monomial() = default;

  int exponent(std::size_t var) const { return exps_[var]; }
  void set_exponent(std::size_t var, int e);
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0 && exps_ == decltype(exps_){}; }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  // True when every exponent is >= the corresponding exponent of `other`.
  bool divisible_by(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  // Canonical order: total degree ascending, then lexicographically
  // descending in registry order (x^2 before x*y before y^2).
  static bool canonical_less(const Monomial& lhs, const Monomial& rhs);
  // Graded lexicographic monomial order used to pick leading terms.
  static bool grlex_less(const Monomial& lhs, const Monomial& rhs);

 private:
  std::array<std::int16_t, VarRegistry::kMaxVars> exps_{};
  int degree_ = 0;
};

struct Term {
  Monomial monomial;
  Integer coeff;
};

// Sparse multivariate Laurent polynomial over the integers.
//
// A default-constructed value is the zero polynomial without a registry; it
// combines with polynomials from any registry. Every other value carries the
// registry its exponent slots refer to, and mixing registries with different
// variable lists throws RegistryMismatch.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Registry reg) : reg_(std::move(reg)) {}

  static LaurentPoly constant(Registry reg, const Integer& c);
  static LaurentPoly variable(Registry reg, std::string_view name, int power = 1);
  static LaurentPoly monomial(Registry reg, const Monomial& m, const Integer& c = 1);
  // Parses the canonical text format, e.g. "2*q + 3*q^2 - x^-1*y".
  static LaurentPoly parse(Registry reg, std::string_view text);

  const Registry& registry() const { return reg_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // +-1 times a monomial: the units of the Laurent ring.
  bool is_unit() const;
  Integer constant_term() const;
  // min/max exponent of a variable over all terms; nullopt for zero.
  std::optional<std::pair<int, int>> exponent_range(std::string_view var) const;
  bool has_negative_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly shifted(const Monomial& m) const;

  // Negative powers are only defined for units.
  LaurentPoly pow(int e) const;

  // Simultaneous substitution var -> image. Negative exponents of a
  // substituted variable require a unit image.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& images) const;

  // Coefficients of var^0, var^1, ...; throws on negative exponents of var.
  std::vector<LaurentPoly> coefficients_in(std::string_view var) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

 private:
  friend class PolyBuilder;
  Registry reg_;
  std::vector<Term> terms_;  // canonical order, nonzero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Exact quotient p / q in the Laurent ring; throws InexactDivision when q
// does not divide p (or q is zero).
LaurentPoly divexact(const LaurentPoly& p, const LaurentPoly& q);

// Accumulates terms in any order and produces a canonical polynomial.
class PolyBuilder {
 public:
  explicit PolyBuilder(Registry reg) : reg_(std::move(reg)) {}
  void add(const Monomial& m, const Integer& c) { pending_.push_back({m, c}); }
  void add(const LaurentPoly& p);
  LaurentPoly build();

 private:
  Registry reg_;
  std::vector<Term> pending_;
};

// Polynomial in the size marker `a` with Laurent coefficients, index = power.
using PolyInA = std::vector<LaurentPoly>;

// Truncated power series sum_{n=0}^{order} c_n a^n.
class SeriesInA {
 public:
  SeriesInA() = default;
  SeriesInA(Registry reg, int order);
  explicit SeriesInA(std::vector<LaurentPoly> coeffs);

  // s with s * denom == numer (mod a^{order+1}); the constant term of denom
  // must be a unit.
  static SeriesInA from_rational(const PolyInA& numer, const PolyInA& denom, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  LaurentPoly& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }

  SeriesInA truncated(int order) const;
  SeriesInA map(const std::function<LaurentPoly(int, const LaurentPoly&)>& fn) const;

  friend SeriesInA operator+(const SeriesInA& lhs, const SeriesInA& rhs);
  friend SeriesInA operator-(const SeriesInA& lhs, const SeriesInA& rhs);
  friend SeriesInA operator*(const SeriesInA& lhs, const SeriesInA& rhs);
  friend bool operator==(const SeriesInA& lhs, const SeriesInA& rhs) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

// Free-function spellings of the ring operations.
inline LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly poly_divexact(const LaurentPoly& p, const LaurentPoly& q) { return divexact(p, q); }

// Product of polynomials in `a`, truncated to degree `max_degree` when >= 0.
PolyInA multiply_in_a(const PolyInA& lhs, const PolyInA& rhs, int max_degree = -1);

}  // namespace osp

#endif  // OSP_RING_HPP
