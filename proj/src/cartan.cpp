#include "weylkl/cartan.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace weylkl {

namespace {

constexpr const char* kValidFamilies =
    "valid types: A(n>=1), B(n>=2), C(n>=2), D(n>=4), E6, E7, E8, F4, G2";

bool valid_pair(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<uint64_t>::max();
  return r;
}

uint64_t factorial(int n) {
  uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r = sat_mul(r, static_cast<uint64_t>(k));
  return r;
}

uint64_t pow2(int n) {
  return n >= 64 ? std::numeric_limits<uint64_t>::max() : uint64_t{1} << n;
}

}  // namespace

void validate(const CartanType& t) {
  if (!valid_pair(t.family, t.rank)) {
    throw std::invalid_argument("invalid Cartan type " + t.str() + "; " + kValidFamilies);
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument(std::string("empty Cartan type; ") + kValidFamilies);
  }
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') {
    throw std::invalid_argument("unknown family '" + std::string(1, text[0]) + "'; " +
                                kValidFamilies);
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || rank <= 0) {
    throw std::invalid_argument("bad rank in Cartan type '" + std::string(text) + "'; " +
                                kValidFamilies);
  }
  CartanType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

std::string CartanType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  validate(*this);
  int n = rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j, int cij, int cji) {  // 1-based nodes
    c[i - 1][j - 1] = cij;
    c[j - 1][i - 1] = cji;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -1, -2);
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -2, -1);
      break;
    case Family::D:
      for (int i = 1; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -1);
      bond(n - 2, n, -1, -1);
      break;
    case Family::E:  // node 2 hangs off node 4 of the chain 1-3-4-5-...-n
      bond(1, 3, -1, -1);
      bond(2, 4, -1, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(1, 2, -1, -1);
      bond(2, 3, -1, -2);
      bond(3, 4, -1, -1);
      break;
    case Family::G:
      bond(1, 2, -3, -1);
      break;
  }
  return c;
}

std::vector<std::vector<int>> CartanType::coxeter_matrix() const {
  auto c = cartan_matrix();
  int n = rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (c[i][j] * c[j][i]) {
        case 0: m[i][j] = 2; break;
        case 1: m[i][j] = 3; break;
        case 2: m[i][j] = 4; break;
        case 3: m[i][j] = 6; break;
        default: throw std::logic_error("non-crystallographic bond in Cartan matrix");
      }
    }
  }
  return m;
}

uint64_t CartanType::order() const {
  validate(*this);
  int n = rank;
  switch (family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return sat_mul(pow2(n), factorial(n));
    case Family::D: return sat_mul(pow2(n - 1), factorial(n));
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

int CartanType::positive_root_count() const {
  validate(*this);
  int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace weylkl
