#include "paramrls/theory.hpp"

#include <stdexcept>

namespace paramrls::theory {

Rational lazy_walk_hitting_time(int phi, int start) {
    if (phi < 1) throw std::invalid_argument("lazy_walk_hitting_time: phi must be >= 1");
    if (start < 1 || start > phi)
        throw std::invalid_argument("lazy_walk_hitting_time: start must lie in [1, phi]");
    if (start == 1) return 0;

    // h_1 = 0 and for 2 <= i <= phi:
    //   h_i = 1 + h_{i-1}/4 + h_{i+1}/4 + h_i/2      (interior)
    //   h_phi = 1 + h_{phi-1}/4 + 3 h_phi/4          (blocked up-move)
    // Solve by backward substitution: express h_i = a_i + b_i * h_{i-1}.
    // From the top equation a_phi = 4, b_phi = 1; the interior equation
    // gives h_i (2 - b_{i+1}) = 4 + a_{i+1} + h_{i-1}.
    std::vector<Rational> a(static_cast<std::size_t>(phi) + 1);
    std::vector<Rational> b(static_cast<std::size_t>(phi) + 1);
    a[static_cast<std::size_t>(phi)] = 4;
    b[static_cast<std::size_t>(phi)] = 1;
    for (int i = phi - 1; i >= 2; --i) {
        const Rational denom = Rational(2) - b[static_cast<std::size_t>(i) + 1];
        a[static_cast<std::size_t>(i)] = (Rational(4) + a[static_cast<std::size_t>(i) + 1]) / denom;
        b[static_cast<std::size_t>(i)] = Rational(1) / denom;
    }
    // forward pass from h_1 = 0
    Rational h = 0;
    for (int i = 2; i <= start; ++i) {
        h = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)] * h;
    }
    return h;
}

} // namespace paramrls::theory
