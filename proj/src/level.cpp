#include "skein/level.hpp"

#include "skein/error.hpp"

namespace skein {

Level::Level(int p) : p_(p) {
  if (p < 3) throw Error(ErrorKind::invalid_level, "level must be >= 3, got " + std::to_string(p));
  if (p % 2 == 1) {
    parity_ = Parity::odd;
    q_bound_ = 2 * p - 4;
    for (int c = 0; c <= p - 3; c += 2) colors_.push_back(c);
  } else {
    parity_ = Parity::even;
    q_bound_ = p - 4;
    for (int c = 0; c <= (p - 4) / 2; ++c) colors_.push_back(c);
  }
}

bool Level::contains(int color) const noexcept {
  if (color < 0 || color > max_color()) return false;
  return is_even() || color % 2 == 0;
}

void Level::require_color(int color) const {
  if (!contains(color)) {
    throw Error(ErrorKind::invalid_color,
                "color " + std::to_string(color) + " is not in C_" + std::to_string(p_));
  }
}

void Level::require_lemma_range() const {
  if (!supports_lemmas()) {
    throw Error(ErrorKind::invalid_level, "closed-form formulas need p >= 5 (odd) or p >= 6 (even), got " +
                                              std::to_string(p_));
  }
}

Level make_level(int p) { return Level(p); }

bool admissible_triple(const Level& level, int a, int b, int c) {
  level.require_color(a);
  level.require_color(b);
  level.require_color(c);
  return level.admissible_unchecked(a, b, c);
}

std::string to_string(Parity parity) { return parity == Parity::odd ? "odd" : "even"; }

}  // namespace skein
