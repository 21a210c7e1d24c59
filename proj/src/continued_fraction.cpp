#include "hurwitz/continued_fraction.hpp"

#include <cctype>

namespace hurwitz {

ConvergentTable::ConvergentTable(const CfSequence& cf) {
  p_.reserve(cf.tail.size() + 2);
  q_.reserve(cf.tail.size() + 2);
  p_.emplace_back(1);
  q_.emplace_back(0);
  p_.push_back(cf.head);
  q_.emplace_back(1);
  for (const auto& a : cf.tail) {
    size_t k = p_.size();
    p_.push_back(a * p_[k - 1] + p_[k - 2]);
    q_.push_back(a * q_[k - 1] + q_[k - 2]);
  }
}

GaussianInt ConvergentTable::determinant(long n) const { return q(n) * p(n - 1) - q(n - 1) * p(n); }

ConvergentTable convergents(const CfSequence& cf) { return ConvergentTable(cf); }

ConvergentStream::ConvergentStream(const GaussianInt& head)
    : p_prev_(1), q_prev_(0), p_(head), q_(1) {}

void ConvergentStream::push(const GaussianInt& a) {
  GaussianInt p = a * p_ + p_prev_;
  GaussianInt q = a * q_ + q_prev_;
  p_prev_ = std::move(p_);
  q_prev_ = std::move(q_);
  p_ = std::move(p);
  q_ = std::move(q);
  ++n_;
}

GaussianRational evaluate(const CfSequence& cf) {
  if (cf.tail.empty()) return GaussianRational(cf.head);
  // value of [a_k; ..., a_N] as num/den, walking k downward
  GaussianInt num = cf.tail.back();
  GaussianInt den(1);
  for (size_t k = cf.tail.size(); k-- > 0;) {
    if (num.is_zero()) {
      throw UndefinedContinuedFraction(
          k + 1, "undefined finite continued fraction: suffix starting at a_" + std::to_string(k + 1) +
                     " evaluates to 0");
    }
    const GaussianInt& a = k == 0 ? cf.head : cf.tail[k - 1];
    GaussianInt next = a * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  // unimodular recurrences keep num and den coprime
  return GaussianRational::from_coprime(num, den);
}

CfSequence fold(const CfSequence& cf, const GaussianInt& x) {
  if (x.is_zero()) throw std::invalid_argument("fold: x must be nonzero");
  if (cf.tail.empty()) throw std::invalid_argument("fold: empty tail");
  CfSequence out{cf.head, cf.tail};
  out.tail.reserve(2 * cf.tail.size() + 1);
  out.tail.push_back(x);
  for (size_t k = cf.tail.size(); k-- > 0;) out.tail.push_back(-cf.tail[k]);
  return out;
}

CfSequence fold_unit(const CfSequence& cf) {
  if (cf.tail.empty()) throw std::invalid_argument("fold_unit: empty tail");
  const size_t n = cf.tail.size();
  CfSequence out{cf.head, {}};
  out.tail.reserve(2 * n);
  for (size_t k = 0; k + 1 < n; ++k) out.tail.push_back(cf.tail[k]);
  out.tail.push_back(cf.tail[n - 1] + GaussianInt(1));
  out.tail.push_back(cf.tail[n - 1] - GaussianInt(1));
  for (size_t k = n - 1; k-- > 0;) out.tail.push_back(cf.tail[k]);
  return out;
}

Digits mirror(std::span<const GaussianInt> s) { return Digits(s.rbegin(), s.rend()); }

Digits mirror_negate(std::span<const GaussianInt> s) {
  Digits out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(-*it);
  return out;
}

std::string digits_to_string(std::span<const GaussianInt> digits, std::string_view sep) {
  std::string out;
  for (size_t k = 0; k < digits.size(); ++k) {
    if (k) out += sep;
    out += to_string(digits[k]);
  }
  return out;
}

std::string to_string(const CfSequence& cf) {
  return "[" + to_string(cf.head) + "; " + digits_to_string(cf.tail) + "]";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Digits split_digits(std::string_view body) {
  Digits out;
  body = trim(body);
  if (body.empty()) return out;
  while (true) {
    size_t comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.empty()) throw ParseError("empty entry in digit list");
    out.push_back(parse_gaussian_int(item));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Digits parse_digits(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unbalanced '['");
    s = s.substr(1, s.size() - 2);
  }
  return split_digits(s);
}

CfSequence parse_cf(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("continued fraction must look like [a0; a1, a2, ...]");
  s = s.substr(1, s.size() - 2);
  CfSequence cf;
  size_t semi = s.find(';');
  if (semi == std::string_view::npos) {
    cf.head = GaussianInt(0);
    cf.tail = split_digits(s);
  } else {
    cf.head = parse_gaussian_int(trim(s.substr(0, semi)));
    cf.tail = split_digits(s.substr(semi + 1));
  }
  return cf;
}

}  // namespace hurwitz
