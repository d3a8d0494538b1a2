#include "osp/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace osp {

namespace {

const Registry& resolve(const Registry& lhs, const Registry& rhs) {
  if (!lhs) return rhs;
  if (!rhs || lhs == rhs || *lhs == *rhs) return lhs;
  throw RegistryMismatch("polynomials come from different variable registries");
}

std::int16_t checked_exponent(long e) {
  if (e < std::numeric_limits<std::int16_t>::min() || e > std::numeric_limits<std::int16_t>::max()) {
    throw std::overflow_error("exponent out of range");
  }
  return static_cast<std::int16_t>(e);
}

std::vector<std::string> standard_names() {
  std::vector<std::string> names{"a", "x", "y", "t", "u", "z", "q"};
  for (int i = 1; i <= 7; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

}  // namespace

// --- VarRegistry ------------------------------------------------------------

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) {
      throw std::invalid_argument("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

Registry VarRegistry::standard() {
  static const Registry reg = std::make_shared<const VarRegistry>(standard_names());
  return reg;
}

Registry VarRegistry::with_sequence(int count) {
  auto names = standard_names();
  for (int i = 1; i <= count; ++i) names.push_back("F" + std::to_string(i));
  return std::make_shared<const VarRegistry>(std::move(names));
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarRegistry::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

// --- Monomial ---------------------------------------------------------------

void Monomial::set_exponent(std::size_t var, int e) {
  degree_ += e - exps_.at(var);
  exps_[var] = checked_exponent(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = checked_exponent(static_cast<long>(exps_[i]) + other.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = checked_exponent(static_cast<long>(exps_[i]) * e);
  }
  r.degree_ = degree_ * e;
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::canonical_less(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree_ != rhs.degree_) return lhs.degree_ < rhs.degree_;
  for (std::size_t i = 0; i < lhs.exps_.size(); ++i) {
    if (lhs.exps_[i] != rhs.exps_[i]) return lhs.exps_[i] > rhs.exps_[i];
  }
  return false;
}

bool Monomial::grlex_less(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree_ != rhs.degree_) return lhs.degree_ < rhs.degree_;
  for (std::size_t i = 0; i < lhs.exps_.size(); ++i) {
    if (lhs.exps_[i] != rhs.exps_[i]) return lhs.exps_[i] < rhs.exps_[i];
  }
  return false;
}

// --- PolyBuilder ------------------------------------------------------------

void PolyBuilder::add(const LaurentPoly& p) {
  reg_ = resolve(reg_, p.registry());
  pending_.insert(pending_.end(), p.terms().begin(), p.terms().end());
}

LaurentPoly PolyBuilder::build() {
  std::sort(pending_.begin(), pending_.end(), [](const Term& l, const Term& r) {
    return Monomial::canonical_less(l.monomial, r.monomial);
  });
  LaurentPoly out(reg_);
  for (auto& t : pending_) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  pending_.clear();
  return out;
}

// --- LaurentPoly ------------------------------------------------------------

LaurentPoly LaurentPoly::constant(Registry reg, const Integer& c) {
  return monomial(std::move(reg), Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(Registry reg, std::string_view name, int power) {
  Monomial m;
  m.set_exponent(reg->index(name), power);
  return monomial(std::move(reg), m, 1);
}

LaurentPoly LaurentPoly::monomial(Registry reg, const Monomial& m, const Integer& c) {
  LaurentPoly p(std::move(reg));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

Integer LaurentPoly::constant_term() const {
  for (const auto& t : terms_) {
    if (t.monomial.is_one()) return t.coeff;
  }
  return 0;
}

std::optional<std::pair<int, int>> LaurentPoly::exponent_range(std::string_view var) const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t v = reg_->index(var);
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& t : terms_) {
    lo = std::min(lo, t.monomial.exponent(v));
    hi = std::max(hi, t.monomial.exponent(v));
  }
  return std::make_pair(lo, hi);
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < VarRegistry::kMaxVars; ++v) {
      if (t.monomial.exponent(v) < 0) return true;
    }
  }
  return false;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two canonical term lists; sign = -1 subtracts.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && Monomial::canonical_less(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || Monomial::canonical_less(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = sign < 0 ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  reg_ = resolve(reg_, other.reg_);
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  reg_ = resolve(reg_, other.reg_);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out(resolve(lhs.reg_, rhs.reg_));
  if (lhs.terms_.empty() || rhs.terms_.empty()) return out;
  if (rhs.terms_.size() == 1 && rhs.terms_[0].monomial.is_one()) return lhs.scaled(rhs.terms_[0].coeff);
  if (lhs.terms_.size() == 1 && lhs.terms_[0].monomial.is_one()) return rhs.scaled(lhs.terms_[0].coeff);

  struct Product {
    Monomial m;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Product> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (std::uint32_t i = 0; i < lhs.terms_.size(); ++i) {
    for (std::uint32_t j = 0; j < rhs.terms_.size(); ++j) {
      products.push_back({lhs.terms_[i].monomial * rhs.terms_[j].monomial, i, j});
    }
  }
  std::sort(products.begin(), products.end(),
            [](const Product& a, const Product& b) { return Monomial::canonical_less(a.m, b.m); });
  Integer acc;
  for (std::size_t s = 0; s < products.size();) {
    std::size_t e = s;
    acc = 0;
    while (e < products.size() && products[e].m == products[s].m) {
      mpz_addmul(acc.get_mpz_t(), lhs.terms_[products[e].i].coeff.get_mpz_t(),
                 rhs.terms_[products[e].j].coeff.get_mpz_t());
      ++e;
    }
    if (acc != 0) out.terms_.push_back({products[s].m, acc});
    s = e;
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  LaurentPoly r(reg_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;  // multiplying every term by the same monomial preserves the order
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_unit()) throw InexactDivision("negative power of a non-unit polynomial");
    return LaurentPoly::monomial(reg_, terms_[0].monomial.pow(e), (-e) % 2 == 0 ? Integer(1) : terms_[0].coeff);
  }
  LaurentPoly result = constant(reg_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& images) const {
  if (terms_.empty()) return *this;
  struct Slot {
    std::size_t var;
    const LaurentPoly* image;
    std::map<int, LaurentPoly> powers;
  };
  std::vector<Slot> slots;
  for (const auto& [name, image] : images) {
    resolve(reg_, image.registry());
    slots.push_back({reg_->index(name), &image, {}});
  }
  PolyBuilder out(reg_);
  for (const auto& t : terms_) {
    Monomial rest = t.monomial;
    LaurentPoly value = LaurentPoly::constant(reg_, t.coeff);
    for (auto& slot : slots) {
      const int e = rest.exponent(slot.var);
      if (e == 0) continue;
      rest.set_exponent(slot.var, 0);
      auto it = slot.powers.find(e);
      if (it == slot.powers.end()) it = slot.powers.emplace(e, slot.image->pow(e)).first;
      value *= it->second;
    }
    out.add(value.shifted(rest));
  }
  return out.build();
}

std::vector<LaurentPoly> LaurentPoly::coefficients_in(std::string_view var) const {
  std::vector<LaurentPoly> out;
  if (terms_.empty()) return out;
  const std::size_t v = reg_->index(var);
  std::vector<PolyBuilder> builders;
  for (const auto& t : terms_) {
    const int e = t.monomial.exponent(v);
    if (e < 0) throw std::domain_error("negative exponent of '" + std::string(var) + "'");
    while (builders.size() <= static_cast<std::size_t>(e)) builders.emplace_back(reg_);
    Monomial m = t.monomial;
    m.set_exponent(v, 0);
    builders[static_cast<std::size_t>(e)].add(m, t.coeff);
  }
  for (auto& b : builders) out.push_back(b.build());
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << Integer(abs(t.coeff)).get_str();
    for (std::size_t v = 0; v < reg_->size(); ++v) {
      const int e = t.monomial.exponent(v);
      if (e == 0) continue;
      os << '*' << reg_->name(v);
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  if (!lhs.terms_.empty()) resolve(lhs.reg_, rhs.reg_);
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (!(lhs.terms_[i].monomial == rhs.terms_[i].monomial) || lhs.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// --- parsing ----------------------------------------------------------------

LaurentPoly LaurentPoly::parse(Registry reg, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) throw fail("expected integer");
    return s.substr(start, pos - start);
  };

  PolyBuilder builder(reg);
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff = sign;
    Monomial m;
    bool need_factor = true;
    while (need_factor) {
      if (pos >= s.size()) throw fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= Integer(read_int());
      } else if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
        std::size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::string name = s.substr(start, pos - start);
        auto v = reg->find(name);
        if (!v) throw fail("unknown variable '" + name + "'");
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = std::stoi(read_int());
        }
        m.set_exponent(*v, m.exponent(*v) + e);
      } else {
        throw fail(std::string("unexpected character '") + s[pos] + "'");
      }
      need_factor = pos < s.size() && s[pos] == '*';
      if (need_factor) ++pos;
    }
    builder.add(m, coeff);
  }
  return builder.build();
}

// --- exact division ---------------------------------------------------------

namespace {

Monomial min_exponents(const LaurentPoly& p) {
  Monomial m;
  for (std::size_t v = 0; v < VarRegistry::kMaxVars; ++v) {
    int lo = std::numeric_limits<int>::max();
    for (const auto& t : p.terms()) lo = std::min(lo, t.monomial.exponent(v));
    m.set_exponent(v, lo);
  }
  return m;
}

const Term& leading_term(const std::vector<Term>& terms) {
  const Term* best = &terms.front();
  for (const auto& t : terms) {
    if (Monomial::grlex_less(best->monomial, t.monomial)) best = &t;
  }
  return *best;
}

}  // namespace

LaurentPoly divexact(const LaurentPoly& p, const LaurentPoly& q) {
  const Registry& reg = resolve(p.registry(), q.registry());
  if (q.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly(reg);
  if (q.is_monomial()) {
    const Term& d = q.terms().front();
    PolyBuilder out(reg);
    const Monomial inv = d.monomial.inverse();
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.coeff.get_mpz_t())) {
        throw InexactDivision("coefficient not divisible in " + p.to_string() + " / " + q.to_string());
      }
      out.add(t.monomial * inv, Integer(t.coeff / d.coeff));
    }
    return out.build();
  }

  // Shift both operands into Z[vars] with no variable dividing them. Then q
  // divides p in the Laurent ring iff the shifted q divides the shifted p in
  // the polynomial ring, and ordinary leading-term division decides it.
  const Monomial p_shift = min_exponents(p);
  const Monomial q_shift = min_exponents(q);
  LaurentPoly rem = p.shifted(p_shift.inverse());
  const LaurentPoly divisor = q.shifted(q_shift.inverse());
  const Term lead = leading_term(divisor.terms());

  PolyBuilder quotient(reg);
  while (!rem.is_zero()) {
    const Term& lt = leading_term(rem.terms());
    if (!lt.monomial.divisible_by(lead.monomial) ||
        !mpz_divisible_p(lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw InexactDivision("inexact division: " + q.to_string() + " does not divide " + p.to_string());
    }
    const Monomial m = lt.monomial * lead.monomial.inverse();
    const Integer c = lt.coeff / lead.coeff;
    quotient.add(m, c);
    rem -= divisor.shifted(m).scaled(c);
  }
  return quotient.build().shifted(p_shift * q_shift.inverse());
}

// --- SeriesInA ----------------------------------------------------------------

SeriesInA::SeriesInA(Registry reg, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, LaurentPoly(std::move(reg)));
}

SeriesInA::SeriesInA(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

SeriesInA SeriesInA::from_rational(const PolyInA& numer, const PolyInA& denom, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (denom.empty() || !denom[0].is_unit()) {
    throw NonUnitConstantTerm("denominator constant term is not a unit");
  }
  const LaurentPoly inv = denom[0].pow(-1);
  std::vector<LaurentPoly> s(static_cast<std::size_t>(order) + 1, LaurentPoly(denom[0].registry()));
  for (int n = 0; n <= order; ++n) {
    LaurentPoly acc = n < static_cast<int>(numer.size()) ? numer[static_cast<std::size_t>(n)]
                                                         : LaurentPoly(denom[0].registry());
    for (int j = 1; j <= n && j < static_cast<int>(denom.size()); ++j) {
      acc -= denom[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(n - j)];
    }
    s[static_cast<std::size_t>(n)] = acc * inv;
  }
  return SeriesInA(std::move(s));
}

SeriesInA SeriesInA::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return SeriesInA(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

SeriesInA SeriesInA::map(const std::function<LaurentPoly(int, const LaurentPoly&)>& fn) const {
  std::vector<LaurentPoly> out;
  out.reserve(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) out.push_back(fn(static_cast<int>(n), coeffs_[n]));
  return SeriesInA(std::move(out));
}

SeriesInA operator+(const SeriesInA& lhs, const SeriesInA& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  std::vector<LaurentPoly> out;
  for (int n = 0; n <= order; ++n) out.push_back(lhs[n] + rhs[n]);
  return SeriesInA(std::move(out));
}

SeriesInA operator-(const SeriesInA& lhs, const SeriesInA& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  std::vector<LaurentPoly> out;
  for (int n = 0; n <= order; ++n) out.push_back(lhs[n] - rhs[n]);
  return SeriesInA(std::move(out));
}

SeriesInA operator*(const SeriesInA& lhs, const SeriesInA& rhs) {
  return SeriesInA(multiply_in_a(lhs.coefficients(), rhs.coefficients(), std::min(lhs.order(), rhs.order())));
}

PolyInA multiply_in_a(const PolyInA& lhs, const PolyInA& rhs, int max_degree) {
  if (lhs.empty() || rhs.empty()) return {};
  int degree = static_cast<int>(lhs.size() + rhs.size()) - 2;
  if (max_degree >= 0) degree = std::min(degree, max_degree);
  Registry reg = lhs[0].registry() ? lhs[0].registry() : rhs[0].registry();
  PolyInA out(static_cast<std::size_t>(degree) + 1, LaurentPoly(reg));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.size() && static_cast<int>(i + j) <= degree; ++j) {
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

}  // namespace osp
