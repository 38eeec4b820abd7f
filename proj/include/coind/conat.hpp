#ifndef COIND_CONAT_HPP
#define COIND_CONAT_HPP

#include <cstdint>
#include <optional>

#include "coind/lazy.hpp"

namespace coind {

/// Lazy conatural: either Cozero or Cosucc of a deferred conat.
class Conat {
 public:
  /// nullopt is Cozero.
  using Cell = std::optional<Conat>;

  explicit Conat(Thunk<Cell> cell) : cell_(std::move(cell)) {}
  Conat(const Conat&) = default;
  Conat(Conat&&) noexcept = default;
  Conat& operator=(const Conat&) = default;
  Conat& operator=(Conat&&) noexcept = default;

  ~Conat() {
    std::optional<Cell> c = cell_.release_if_unique();
    while (c && *c) {
      Thunk<Cell> next = std::move((*c)->cell_);
      c.reset();
      c = next.release_if_unique();
    }
  }

  static Conat zero() { return Conat(Thunk<Cell>::ready(std::nullopt)); }
  static Conat succ(Conat n) { return Conat(Thunk<Cell>::ready(Cell(std::move(n)))); }

  /// The infinite conat: cosucc omega, regenerated on each unfolding.
  static Conat omega() {
    return Conat(Thunk<Cell>([] { return Cell(omega()); }));
  }

  /// Injection of a natural; each cell is built on demand.
  static Conat incl(std::uint64_t k) {
    return Conat(Thunk<Cell>([k]() -> Cell {
      if (k == 0) return std::nullopt;
      return Cell(incl(k - 1));
    }));
  }

  const Cell& force() const { return cell_.force(); }

 private:
  Thunk<Cell> cell_;
};

/// min(value of n, fuel). Forces at most fuel + 1 cells.
inline std::uint64_t conat_trunc(const Conat& n, std::uint64_t fuel) {
  std::uint64_t count = 0;
  const Conat* cur = &n;
  while (count < fuel) {
    const Conat::Cell& c = cur->force();
    if (!c) break;
    ++count;
    cur = &*c;
  }
  return count;
}

}  // namespace coind

#endif  // COIND_CONAT_HPP
