#include "twisted/group_ring.hpp"

#include "twisted/errors.hpp"

#include <sstream>

namespace twisted {

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

LaurentPoly LaurentPoly::zero(std::size_t rank) {
  LaurentPoly out;
  out.rank_ = rank;
  return out;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Integer& value) {
  LaurentPoly out = zero(rank);
  if (value != 0) out.terms_.emplace(Exponent(rank, 0), value);
  return out;
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, Exponent exponent) {
  LaurentPoly out = zero(exponent.size());
  if (coefficient != 0) out.terms_.emplace(std::move(exponent), coefficient);
  return out;
}

LaurentPoly LaurentPoly::make(std::size_t rank,
                              const std::vector<std::pair<Exponent, Integer>>& terms) {
  LaurentPoly out = zero(rank);
  for (const auto& [exponent, coefficient] : terms) {
    if (exponent.size() != rank) {
      throw RankMismatch("exponent vector of length " + std::to_string(exponent.size()) +
                         " in a rank " + std::to_string(rank) + " group ring");
    }
    out.terms_[exponent] += coefficient;
  }
  std::erase_if(out.terms_, [](const auto& entry) { return entry.second == 0; });
  return out;
}

LaurentPoly LaurentPoly::univariate(const std::vector<std::pair<std::int64_t, Integer>>& terms) {
  std::vector<std::pair<Exponent, Integer>> lifted;
  lifted.reserve(terms.size());
  for (const auto& [k, c] : terms) lifted.push_back({Exponent{k}, c});
  return make(1, lifted);
}

std::size_t LaurentPoly::common_rank(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ == b.rank_) return a.rank_;
  if (a.rank_ == 0) return b.rank_;
  if (b.rank_ == 0) return a.rank_;
  throw RankMismatch("group ring ranks differ: " + std::to_string(a.rank_) + " vs " +
                     std::to_string(b.rank_));
}

void LaurentPoly::promote(std::size_t rank) {
  if (rank_ == rank) return;
  TermMap lifted;
  for (auto& [exponent, coefficient] : terms_) lifted.emplace(Exponent(rank, 0), coefficient);
  terms_ = std::move(lifted);
  rank_ = rank;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [exponent, coefficient] : out.terms_) coefficient = -coefficient;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  const std::size_t rank = common_rank(*this, other);
  promote(rank);
  LaurentPoly rhs = other;
  rhs.promote(rank);
  for (const auto& [exponent, coefficient] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t rank = LaurentPoly::common_rank(a, b);
  LaurentPoly lhs = a;
  LaurentPoly rhs = b;
  lhs.promote(rank);
  rhs.promote(rank);
  LaurentPoly out = LaurentPoly::zero(rank);
  for (const auto& [ex, cx] : lhs.terms_) {
    for (const auto& [ey, cy] : rhs.terms_) {
      LaurentPoly::Exponent sum(rank);
      for (std::size_t i = 0; i < rank; ++i) sum[i] = ex[i] + ey[i];
      out.terms_[sum] += cx * cy;
    }
  }
  std::erase_if(out.terms_, [](const auto& entry) { return entry.second == 0; });
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t rank = LaurentPoly::common_rank(a, b);
  LaurentPoly lhs = a;
  LaurentPoly rhs = b;
  lhs.promote(rank);
  rhs.promote(rank);
  return lhs.terms_ == rhs.terms_;
}

bool is_unit(const LaurentPoly& a) {
  if (a.terms().size() != 1) return false;
  const Integer& c = a.terms().begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly unit_inverse(const LaurentPoly& a) {
  if (!is_unit(a)) throw ZeroDivision("not a unit of the group ring: " + to_string(a));
  const auto& [exponent, coefficient] = *a.terms().begin();
  LaurentPoly::Exponent negated(exponent.size());
  for (std::size_t i = 0; i < exponent.size(); ++i) negated[i] = -exponent[i];
  return LaurentPoly::monomial(coefficient, negated);
}

Integer augment(const LaurentPoly& a) {
  Integer sum = 0;
  for (const auto& [exponent, coefficient] : a.terms()) sum += coefficient;
  return sum;
}

NovikovSeries to_novikov(const LaurentPoly& a, const OmegaHom& omega) {
  if (a.rank() != 0 && a.rank() != omega.rank()) {
    throw RankMismatch("omega has rank " + std::to_string(omega.rank()) +
                       " but the group ring element has rank " + std::to_string(a.rank()));
  }
  std::vector<NovikovSeries::Term> terms;
  for (const auto& [exponent, coefficient] : a.terms()) {
    Rational power = 0;
    for (std::size_t i = 0; i < exponent.size(); ++i) power += omega.values[i] * exponent[i];
    terms.push_back({power, Rational(coefficient)});
  }
  return NovikovSeries::make(std::move(terms));
}

NovikovSeries kronecker_image(const LaurentPoly& a, std::int64_t spread) {
  OmegaHom omega;
  Rational weight = 1;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    omega.values.push_back(weight);
    weight *= spread;
  }
  return to_novikov(a, omega);
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exponent, coefficient] : a.terms()) {
    const bool negative = coefficient < 0;
    const Integer magnitude = negative ? Integer(-coefficient) : coefficient;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream monomial;
    bool any = false;
    for (std::size_t i = 0; i < exponent.size(); ++i) {
      if (exponent[i] == 0) continue;
      if (any) monomial << "*";
      any = true;
      monomial << "t";
      if (exponent.size() > 1) monomial << (i + 1);
      if (exponent[i] != 1) monomial << "^" << exponent[i];
    }
    if (!any) {
      out << magnitude.str();
    } else {
      if (magnitude != 1) out << magnitude.str() << "*";
      out << monomial.str();
    }
  }
  return out.str();
}

}  // namespace twisted
