#ifndef SFX_SUPERLINALG_PARITY_HPP
#define SFX_SUPERLINALG_PARITY_HPP

namespace sfx {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr int bit(Parity p) { return static_cast<int>(p); }

constexpr Parity parity_of(int n) { return (n & 1) ? Parity::Odd : Parity::Even; }

constexpr Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }

constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr Parity flip(Parity p) { return p + Parity::Odd; }

// (-1)^n
constexpr int minus_one_pow(int n) { return (n & 1) ? -1 : 1; }

// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b) { return minus_one_pow(bit(a) * bit(b)); }

constexpr const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace sfx

#endif
