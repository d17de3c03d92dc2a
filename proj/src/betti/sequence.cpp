#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "ggor/betti.hpp"
#include "ggor/error.hpp"

namespace ggor {

BettiSequence::BettiSequence(std::vector<std::int64_t> a_in, std::vector<std::int64_t> b_in,
                             std::int64_t s_in)
    : a(std::move(a_in)), b(std::move(b_in)), s(s_in) {
  if (a.size() != b.size()) throw DomainError("Betti sequence with unequal lengths");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end(), std::greater<>());
}

BettiSequence BettiSequence::homogeneous(std::size_t n, std::int64_t a, std::int64_t b) {
  return BettiSequence(std::vector<std::int64_t>(n, a), std::vector<std::int64_t>(n, b),
                       static_cast<std::int64_t>(n) * (b - a));
}

bool BettiSequence::consistent() const {
  return s == std::accumulate(b.begin(), b.end(), std::int64_t{0}) -
                  std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

std::vector<std::int64_t> BettiSequence::c() const {
  std::vector<std::int64_t> out;
  for (auto bj : b) out.push_back(s - bj);
  return out;
}

bool BettiSequence::is_homogeneous() const {
  return std::adjacent_find(a.begin(), a.end(), std::not_equal_to<>()) == a.end() &&
         std::adjacent_find(b.begin(), b.end(), std::not_equal_to<>()) == b.end();
}

bool BettiSequence::is_gaeta() const {
  const std::size_t n = size();
  if (!consistent()) return false;
  for (std::size_t i = 2; i <= n; ++i)
    if (b[n + 2 - i - 1] <= a[i - 1]) return false;
  return true;
}

std::string BettiSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
  out << ';';
  for (std::size_t j = 0; j < b.size(); ++j) out << (j ? "," : "") << b[j];
  out << ';' << s << ')';
  return out.str();
}

BettiSequence parse_betti(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') body.push_back(ch);
  std::vector<std::vector<std::int64_t>> parts(1);
  std::string number;
  auto flush = [&] {
    if (number.empty()) throw DomainError("malformed Betti sequence: " + text);
    try {
      parts.back().push_back(std::stoll(number));
    } catch (const std::exception&) {
      throw DomainError("malformed Betti sequence: " + text);
    }
    number.clear();
  };
  for (char ch : body) {
    if (ch == ',') {
      flush();
    } else if (ch == ';') {
      flush();
      parts.emplace_back();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      number.push_back(ch);
    } else {
      throw DomainError("malformed Betti sequence: " + text);
    }
  }
  flush();
  if (parts.size() != 3 || parts[2].size() != 1)
    throw DomainError("Betti sequence needs the shape (a;b;s): " + text);
  return BettiSequence(parts[0], parts[1], parts[2][0]);
}

std::string to_string(Essentiality e) {
  switch (e) {
    case Essentiality::Essential: return "Essential";
    case Essentiality::NotEssential: return "NotEssential";
    case Essentiality::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Minimality m) {
  switch (m) {
    case Minimality::Minimal: return "Minimal";
    case Minimality::NotMinimal: return "NotMinimal";
    case Minimality::Unknown: return "Unknown";
  }
  return "Unknown";
}

long long hilbert_from_betti(const BettiSequence& seq, std::int64_t degree,
                             std::size_t num_vars) {
  if (num_vars == 0) throw DomainError("Hilbert function needs at least one variable");
  if (degree < 0) return 0;
  const auto k = static_cast<long>(num_vars) - 1;
  auto term = [&](std::int64_t shift) {
    const long m = static_cast<long>(degree - shift) + k;
    mpz_class out = 0;
    if (m >= k) mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
                             static_cast<unsigned long>(k));
    return out;
  };
  mpz_class total = term(0);
  for (auto ai : seq.a) total -= term(ai);
  for (auto bj : seq.b) total += term(bj);
  if (!seq.a.empty() || !seq.b.empty()) total -= term(seq.s);
  if (!total.fits_slong_p()) throw DomainError("Hilbert function value overflows");
  return total.get_si();
}

BettiSequence lift(const BettiSequence& seq, const std::vector<std::int64_t>& u) {
  if (u.size() != seq.size()) throw DomainError("lift needs one exponent per generator");
  if (std::any_of(u.begin(), u.end(), [](std::int64_t v) { return v < 0; }))
    throw DomainError("lift exponents must be nonnegative");
  const std::int64_t total = std::accumulate(u.begin(), u.end(), std::int64_t{0});
  std::vector<std::int64_t> a, b;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    a.push_back(seq.a[i] + total - u[i]);
    b.push_back(seq.b[i] + total);
  }
  return BettiSequence(a, b, seq.s + total);
}

BettiSequence recover_from_degree_matrix(const DegreeMatrix& d, std::size_t r,
                                         std::int64_t c_r) {
  const std::size_t n = d.rows();
  if (n == 0 || d.cols() != n) throw DomainError("degree matrix must be square");
  if (r >= n) throw DomainError("row index out of range");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += d(i, i);
  std::vector<std::int64_t> a, b;
  for (std::size_t j = 0; j < n; ++j) b.push_back(s + d(r, j) - d(r, r) - c_r);
  for (std::size_t i = 0; i < n; ++i) a.push_back(s - d(i, r) - c_r);
  return BettiSequence(a, b, s);
}

}  // namespace ggor
