#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma/errors.hpp"
#include "sigma/structure.hpp"

namespace sigma {

/// Fully tabulated finite field of order q <= 64.
///
/// An element is encoded as the integer sum c_i p^i of its coefficients in the
/// polynomial basis over F_p, so 0 and 1 are the field's zero and one and the
/// prime subfield is 0..p-1.
class FieldTable {
 public:
  static constexpr std::size_t max_size = 64;

  static FieldTable make(std::size_t q) {
    if (q < 2 || q > max_size) throw ValidationError("field size must be in 2..64");
    const auto ps = prime_factors(q);
    if (ps.size() != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
    const std::size_t p = ps.front();
    std::size_t degree = 0;
    for (std::size_t r = q; r > 1; r /= p) ++degree;
    const auto poly = modulus(p, degree);

    FieldTable f;
    f.q_ = q;
    f.p_ = p;
    f.degree_ = degree;
    f.add_.assign(q * q, 0);
    f.mul_.assign(q * q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        const auto ca = digits(a, p, degree);
        const auto cb = digits(b, p, degree);
        std::vector<std::size_t> sum(degree);
        for (std::size_t i = 0; i < degree; ++i) sum[i] = (ca[i] + cb[i]) % p;
        f.add_[a * q + b] = static_cast<std::uint8_t>(undigits(sum, p));
        // Schoolbook product, then reduce by the monic modulus.
        std::vector<std::size_t> prod(2 * degree, 0);
        for (std::size_t i = 0; i < degree; ++i)
          for (std::size_t j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        for (std::size_t k = 2 * degree - 1; k >= degree; --k) {
          const std::size_t c = prod[k];
          if (!c) continue;
          prod[k] = 0;
          for (std::size_t i = 0; i < degree; ++i)
            prod[k - degree + i] = (prod[k - degree + i] + p * p - c * poly[i] % p) % p;
        }
        prod.resize(degree);
        f.mul_[a * q + b] = static_cast<std::uint8_t>(undigits(prod, p));
      }
    f.check_axioms();
    return f;
  }

  std::size_t size() const noexcept { return q_; }
  std::size_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return degree_; }
  static constexpr std::size_t zero() noexcept { return 0; }
  static constexpr std::size_t one() noexcept { return 1; }

  std::size_t add(std::size_t a, std::size_t b) const noexcept { return add_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return mul_[a * q_ + b]; }
  std::size_t neg(std::size_t a) const noexcept { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const noexcept { return add(a, neg(b)); }
  // Multiplicative inverse; a must be non-zero.
  std::size_t inv(std::size_t a) const noexcept { return inv_[a]; }
  std::size_t frobenius(std::size_t a) const noexcept {
    std::size_t r = 1;
    for (std::size_t i = 0; i < p_; ++i) r = mul(r, a);
    return r;
  }
  std::size_t mult_order(std::size_t a) const noexcept {
    std::size_t k = 1;
    for (std::size_t x = a; x != 1; x = mul(x, a)) ++k;
    return k;
  }
  std::size_t pow(std::size_t a, std::size_t k) const noexcept {
    std::size_t r = 1;
    while (k--) r = mul(r, a);
    return r;
  }

  /// Re-checks every field axiom exhaustively.
  void check_axioms() {
    const std::size_t q = q_;
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0)
        throw ValidationError("field identity axioms fail");
      bool has_neg = false, has_inv = a == 0;
      for (std::size_t b = 0; b < q; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
          throw ValidationError("field is not commutative");
        if (add(a, b) == 0) {
          neg_[a] = b;
          has_neg = true;
        }
        if (a && mul(a, b) == 1) {
          inv_[a] = b;
          has_inv = true;
        }
        for (std::size_t c = 0; c < q; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)) ||
              mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            throw ValidationError("field associativity or distributivity fails");
        }
      }
      if (!has_neg || !has_inv) throw ValidationError("missing additive or multiplicative inverse");
    }
  }

  std::string to_string(std::size_t a) const {
    if (degree_ == 1) return std::to_string(a);
    return std::to_string(a) + "@F" + std::to_string(q_);
  }

 private:
  // Low coefficients c_0..c_{d-1} of a monic irreducible x^d + c_{d-1}x^{d-1} + ... + c_0.
  static std::vector<std::size_t> modulus(std::size_t p, std::size_t d) {
    if (d == 1) return {0};
    if (p == 2 && d == 2) return {1, 1};              // x^2 + x + 1
    if (p == 2 && d == 3) return {1, 1, 0};           // x^3 + x + 1
    if (p == 2 && d == 4) return {1, 1, 0, 0};        // x^4 + x + 1
    if (p == 2 && d == 5) return {1, 0, 1, 0, 0};     // x^5 + x^2 + 1
    if (p == 2 && d == 6) return {1, 1, 0, 0, 0, 0};  // x^6 + x + 1
    if (p == 3 && d == 2) return {1, 0};              // x^2 + 1
    if (p == 3 && d == 3) return {1, 2, 0};           // x^3 + 2x + 1
    if (p == 5 && d == 2) return {2, 0};              // x^2 + 2
    if (p == 7 && d == 2) return {1, 0};              // x^2 + 1
    throw ValidationError("no irreducible polynomial tabulated for this field");
  }
  static std::vector<std::size_t> digits(std::size_t a, std::size_t p, std::size_t d) {
    std::vector<std::size_t> out(d);
    for (std::size_t i = 0; i < d; ++i, a /= p) out[i] = a % p;
    return out;
  }
  static std::size_t undigits(const std::vector<std::size_t>& c, std::size_t p) {
    std::size_t a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
  }

  std::size_t q_ = 0, p_ = 0, degree_ = 0;
  std::vector<std::uint8_t> add_, mul_;
  std::vector<std::size_t> neg_, inv_;
};

}  // namespace sigma
