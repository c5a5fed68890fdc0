#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "twaffine/lattice.hpp"

namespace twaffine {

using Rational = boost::multiprecision::cpp_rational;

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational \"" + s + "\"");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational \"" + s + "\"");
  }
}

/// Always "p/q" with q > 0.
inline std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Short form: "p" for integers, "p/q" otherwise.
inline std::string rational_short(const Rational& q) {
  return denominator(q) == 1 ? numerator(q).str() : rational_string(q);
}

/// A linear functional on span{eps_i, del_j, delta} with exact rational
/// coefficients.
class Functional {
 public:
  Functional() = default;
  explicit Functional(Ambient a) : eps_(static_cast<std::size_t>(a.k)), del_(static_cast<std::size_t>(a.l)) {}
  Functional(std::vector<Rational> eps, std::vector<Rational> del, Rational delta)
      : eps_(std::move(eps)), del_(std::move(del)), delta_(std::move(delta)) {}

  Ambient ambient() const { return {static_cast<int>(eps_.size()), static_cast<int>(del_.size())}; }
  const std::vector<Rational>& eps() const { return eps_; }
  const std::vector<Rational>& del() const { return del_; }
  const Rational& delta() const { return delta_; }

  Rational& eps(int i) { return eps_.at(static_cast<std::size_t>(i - 1)); }
  Rational& del(int j) { return del_.at(static_cast<std::size_t>(j - 1)); }
  Rational& delta() { return delta_; }

  bool is_zero() const {
    for (const auto& c : eps_)
      if (c != 0) return false;
    for (const auto& c : del_)
      if (c != 0) return false;
    return delta_ == 0;
  }

  Rational operator()(const RootVector& v) const {
    if (v.ambient() != ambient()) throw AmbientMismatch("functional and root live in different ambients");
    Rational s = delta_ * v.dc();
    for (std::size_t i = 0; i < eps_.size(); ++i) s += eps_[i] * v.eps()[i];
    for (std::size_t j = 0; j < del_.size(); ++j) s += del_[j] * v.del()[j];
    return s;
  }

  int sign(const RootVector& v) const {
    Rational x = (*this)(v);
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
  }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  std::vector<Rational> eps_, del_;
  Rational delta_ = 0;
};

inline std::string to_string(const Functional& z) {
  std::string s = "zeta(";
  auto a = z.ambient();
  bool first = true;
  auto item = [&](const std::string& name, const Rational& c) {
    if (!first) s += ", ";
    first = false;
    s += name + "=" + rational_short(c);
  };
  for (int i = 1; i <= a.k; ++i) item("e" + std::to_string(i), z.eps()[static_cast<std::size_t>(i - 1)]);
  for (int j = 1; j <= a.l; ++j) item("d" + std::to_string(j), z.del()[static_cast<std::size_t>(j - 1)]);
  item("delta", z.delta());
  return s + ")";
}

inline void to_json(nlohmann::json& j, const Functional& z) {
  auto arr = [](const std::vector<Rational>& xs) {
    auto out = nlohmann::json::array();
    for (const auto& x : xs) out.push_back(rational_string(x));
    return out;
  };
  j = nlohmann::json{{"eps", arr(z.eps())}, {"del", arr(z.del())}, {"delta", rational_string(z.delta())}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline void from_json(const nlohmann::json& j, Functional& z) {
  if (!j.is_object() || !j.contains("eps") || !j.contains("del"))
    throw std::invalid_argument("functional JSON needs \"eps\" and \"del\" arrays");
  std::vector<Rational> e, d;
  for (const auto& x : j.at("eps")) e.push_back(rational_from_json(x));
  for (const auto& x : j.at("del")) d.push_back(rational_from_json(x));
  Rational delta = j.contains("delta") ? rational_from_json(j.at("delta")) : Rational(0);
  z = Functional(std::move(e), std::move(d), std::move(delta));
}

}  // namespace twaffine
