#include "quasif/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "quasif/errors.hpp"

namespace quasif {

long long binom(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= b; ++i) {
    acc = acc * static_cast<unsigned __int128>(a - b + i) /
          static_cast<unsigned __int128>(i);
  }
  return static_cast<long long>(acc);
}

void check_var_count(int n) {
  if (n < 1 || n > Monomial::kMaxVars) {
    fail(Errc::OutOfRange,
         "variable count n must lie in 1.." + std::to_string(Monomial::kMaxVars) +
             ", got " + std::to_string(n));
  }
}

std::uint64_t full_mask(int n) {
  check_var_count(n);
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

Monomial Monomial::from_indices(std::span<const int> indices, int n) {
  check_var_count(n);
  std::uint64_t mask = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > n) {
      fail(Errc::OutOfRange, "variable index " + std::to_string(idx) +
                                 " outside 1.." + std::to_string(n));
    }
    std::uint64_t bit = std::uint64_t{1} << (idx - 1);
    if (mask & bit) {
      fail(Errc::NotSquareFree, "variable x" + std::to_string(idx) + " repeated");
    }
    mask |= bit;
  }
  return Monomial(mask);
}

Monomial Monomial::single(int var) {
  int idx[1] = {var};
  return from_indices(idx, kMaxVars);
}

int Monomial::degree() const { return std::popcount(mask_); }

bool Monomial::contains(int var) const {
  if (var < 1 || var > kMaxVars) return false;
  return (mask_ >> (var - 1)) & 1U;
}

Monomial Monomial::with(int var) const {
  return Monomial(mask_ | (std::uint64_t{1} << (var - 1)));
}

Monomial Monomial::without(int var) const {
  return Monomial(mask_ & ~(std::uint64_t{1} << (var - 1)));
}

Monomial Monomial::complement(int n) const {
  return Monomial(full_mask(n) & ~mask_);
}

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  std::uint64_t m = mask_;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

std::string Monomial::str() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int v : vars()) {
    out += "x";
    out += std::to_string(v);
  }
  return out;
}

std::string Monomial::set_str() const {
  std::string out = "{";
  bool first = true;
  for (int v : vars()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // Same degree: the set owning the smallest differing index comes first,
  // which is exactly lexicographic order on ascending index sequences.
  std::uint64_t low = diff & (~diff + 1);
  return (a.mask() & low) != 0;
}

namespace {

int parse_index(std::string_view digits, int n) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    fail(Errc::ParseError, "bad variable index '" + std::string(digits) + "'");
  }
  if (value < 1 || value > n) {
    fail(Errc::OutOfRange, "variable index " + std::to_string(value) +
                               " outside 1.." + std::to_string(n));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "x<digits>" -> index; anything else is a parse error.
int parse_var_token(std::string_view token, int n) {
  token = trim(token);
  if (token.size() < 2 || token[0] != 'x') {
    fail(Errc::ParseError, "expected x<index>, got '" + std::string(token) + "'");
  }
  return parse_index(token.substr(1), n);
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
  check_var_count(n);
  text = trim(text);
  if (text.empty()) fail(Errc::ParseError, "empty monomial");

  std::vector<int> indices;
  if (text.front() == '[') {
    if (text.back() != ']') fail(Errc::ParseError, "missing ']' in index list");
    std::string_view body = trim(text.substr(1, text.size() - 2));
    if (body.empty()) fail(Errc::ParseError, "empty index list");
    while (!body.empty()) {
      std::size_t comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      indices.push_back(parse_index(trim(item), n));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (trim(body).empty()) fail(Errc::ParseError, "trailing comma in index list");
      body = trim(body);
    }
  } else if (text.find('*') != std::string_view::npos) {
    std::string_view body = text;
    while (!body.empty()) {
      std::size_t star = body.find('*');
      indices.push_back(parse_var_token(body.substr(0, star), n));
      if (star == std::string_view::npos) break;
      body.remove_prefix(star + 1);
      if (trim(body).empty()) fail(Errc::ParseError, "trailing '*' in product form");
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 'x') {
        fail(Errc::ParseError, "expected 'x' at position " + std::to_string(pos) +
                                   " of '" + std::string(text) + "'");
      }
      std::size_t start = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) {
        fail(Errc::ParseError, "missing index after 'x' in '" + std::string(text) + "'");
      }
      indices.push_back(parse_index(text.substr(start, pos - start), n));
    }
  }
  return Monomial::from_indices(indices, n);
}

std::vector<Monomial> sm_universe(int n, int d) {
  check_var_count(n);
  if (d < 0 || d > n) {
    fail(Errc::DegreeOutOfRange, "degree " + std::to_string(d) +
                                     " outside 0.." + std::to_string(n));
  }
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binom(n, d)));
  if (d == 0) {
    out.push_back(Monomial());
    return out;
  }
  // Lexicographic successor on ascending index tuples.
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(Monomial::from_indices(idx, n));
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace quasif
