#pragma once

#include <array>
#include <cstdint>

namespace spinecensus {

// Residue in Z/3.  Every edge of an o-graph carries one of these; the value
// says how far the three strands running along the edge are rotated when
// crossing from one endpoint to the other.
class ColorZ3 {
 public:
  constexpr ColorZ3() = default;
  constexpr explicit ColorZ3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr int value() const { return v_; }

  // 0 -> 0, 1 -> 2, 2 -> 1
  constexpr ColorZ3 negated() const { return ColorZ3(3 - v_); }

  // x -> 1 - x, the colour map showing up in orientation reversal
  constexpr ColorZ3 one_minus() const { return ColorZ3(1 - v_); }

  friend constexpr bool operator==(ColorZ3 a, ColorZ3 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ColorZ3 a, ColorZ3 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(ColorZ3 a, ColorZ3 b) { return a.v_ < b.v_; }

 private:
  std::uint8_t v_ = 0;
};

// One letter of the open-chain alphabet: the colour pair (beta, gamma) of a
// double edge between consecutive chain vertices.
struct Letter {
  ColorZ3 beta;
  ColorZ3 gamma;

  constexpr Letter() = default;
  constexpr Letter(ColorZ3 b, ColorZ3 g) : beta(b), gamma(g) {}
  constexpr Letter(int b, int g) : beta(b), gamma(g) {}

  constexpr int index() const { return beta.value() * 3 + gamma.value(); }
  constexpr Letter swapped() const { return Letter(gamma, beta); }

  friend constexpr bool operator==(Letter a, Letter b) {
    return a.beta == b.beta && a.gamma == b.gamma;
  }
  friend constexpr bool operator!=(Letter a, Letter b) { return !(a == b); }
  friend constexpr bool operator<(Letter a, Letter b) { return a.index() < b.index(); }
};

inline constexpr int kAlphabetSize = 9;

constexpr Letter letter_from_index(int i) { return Letter(i / 3, i % 3); }

// The nine letters fall into four classes A_0..A_3; the single-face automaton
// reads letters only through their class.
//   A_0 = {(2,2)}
//   A_1 = {(0,0),(1,1)}
//   A_2 = {(1,0),(0,1)}
//   A_3 = {(0,2),(1,2),(2,0),(2,1)}
constexpr int letter_class(Letter l) {
  const int b = l.beta.value(), g = l.gamma.value();
  if (b == 2 && g == 2) return 0;
  if (b == g) return 1;
  if (b != 2 && g != 2) return 2;
  return 3;
}

// Affine involutions x -> a*x + b of Z/3 (a in {1,2}); the only ones are
// x, -x, 1-x, 2-x.  Chain reversal acts on letters through one of these.
struct AffineZ3 {
  std::uint8_t mul = 1;
  std::uint8_t add = 0;

  constexpr ColorZ3 apply(ColorZ3 x) const { return ColorZ3(mul * x.value() + add); }

  friend constexpr bool operator==(AffineZ3 a, AffineZ3 b) {
    return a.mul == b.mul && a.add == b.add;
  }
};

inline constexpr std::array<AffineZ3, 4> kAffineInvolutions = {
    AffineZ3{1, 0},  // identity
    AffineZ3{2, 0},  // x -> -x
    AffineZ3{2, 1},  // x -> 1-x
    AffineZ3{2, 2},  // x -> 2-x
};

}  // namespace spinecensus
