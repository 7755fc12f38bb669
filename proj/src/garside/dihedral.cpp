#include <stdexcept>

#include "conjlang/garside/model.hpp"

namespace conjlang {

// Encoding: 0 = 1; k = _k(a,b) for 1 ≤ k < m; m−1+k = _k(b,a); 2m−1 = Δ.
DihedralModel::DihedralModel(int m) : m_(m) {
  if (m < 3 || m > 64) throw std::invalid_argument("dihedral model needs 3 <= m <= 64");
  const auto count = static_cast<std::size_t>(2 * m);
  const Simple delta = static_cast<Simple>(2 * m - 1);
  struct Alt {
    int length;
    int first;  // 0 = a, 1 = b
  };
  auto decode = [m, delta](Simple s) -> Alt {
    if (s == 0) return {0, 0};
    if (s == delta) return {m, 0};
    if (static_cast<int>(s) < m) return {static_cast<int>(s), 0};
    return {static_cast<int>(s) - m + 1, 1};
  };
  auto encode = [m, delta](int length, int first) -> Simple {
    if (length == 0) return 0;
    if (length == m) return delta;
    return static_cast<Simple>(first == 0 ? length : m - 1 + length);
  };

  Spec spec;
  spec.name = "dihedral:" + std::to_string(m);
  spec.count = count;
  spec.delta = delta;
  spec.atoms = {encode(1, 0), encode(1, 1)};
  spec.atom_names = {"a", "b"};
  spec.atom_inverse_names = {"A", "B"};
  for (Simple s = 0; s < count; ++s) spec.degree.push_back(decode(s).length);
  spec.product = [=](Simple x, Simple y) -> std::optional<Simple> {
    Alt ax = decode(x), ay = decode(y);
    if (ax.length == 0) return y;
    if (ay.length == 0) return x;
    if (ax.length + ay.length > m) return std::nullopt;
    // Δ is both _m(a,b) and _m(b,a); a proper alternating word ends with
    // the letter of parity length−1 from its first letter.
    int last = (ax.first + ax.length - 1) % 2;
    if (ay.first == last) return std::nullopt;
    return encode(ax.length + ay.length, ax.first);
  };
  spec.conj_bound = m - 1;
  build(std::move(spec));
}

}  // namespace conjlang
