#pragma once

#include <span>
#include <string>
#include <vector>

namespace skein {

enum class Parity { odd, even };

/// The level p of the skein theory together with its color set and the
/// q-bound on vertex color sums.
///
/// Odd p:  colors {0, 2, ..., p-3}, q = 2p-4.
/// Even p: colors {0, 1, ..., (p-4)/2}, q = p-4.
///
/// Colors are plain ints; use `contains` / `require_color` at API boundaries
/// and `admissible_unchecked` in enumeration loops.
class Level {
 public:
  explicit Level(int p);

  int p() const noexcept { return p_; }
  Parity parity() const noexcept { return parity_; }
  bool is_odd() const noexcept { return parity_ == Parity::odd; }
  bool is_even() const noexcept { return parity_ == Parity::even; }
  std::span<const int> colors() const noexcept { return colors_; }
  int q_bound() const noexcept { return q_bound_; }
  int max_color() const noexcept { return colors_.back(); }

  bool contains(int color) const noexcept;
  void require_color(int color) const;

  // Triangle inequality, even sum, q-bound. Callers guarantee the colors
  // belong to the level.
  bool admissible_unchecked(int a, int b, int c) const noexcept {
    return a <= b + c && b <= a + c && c <= a + b && ((a + b + c) & 1) == 0 &&
           a + b + c <= q_bound_;
  }

  // Odd levels require closed-form lemmas at p >= 5, even levels at p >= 6.
  bool supports_lemmas() const noexcept { return is_odd() ? p_ >= 5 : p_ >= 6; }
  void require_lemma_range() const;

  friend bool operator==(const Level& a, const Level& b) noexcept { return a.p_ == b.p_; }

 private:
  int p_;
  Parity parity_;
  int q_bound_;
  std::vector<int> colors_;
};

Level make_level(int p);

/// Validating admissibility test; throws invalid-color for colors outside C_p.
bool admissible_triple(const Level& level, int a, int b, int c);

std::string to_string(Parity parity);

}  // namespace skein
