#include "arakount/number_field.hpp"

#include <cmath>
#include <cstdlib>

namespace arakount {

namespace {

bool squarefree_small(long n) {
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

} // namespace

NumberFieldData NumberFieldData::rationals() {
    NumberFieldData K;
    K.label = "Q";
    K.degree = 1;
    K.abs_disc = 1;
    K.quad_disc = 0;
    return K;
}

NumberFieldData NumberFieldData::quadratic(long generator) {
    if (generator == 0 || generator == 1)
        fail(ErrorKind::InvalidFieldData, "quadratic generator must not be 0 or 1");
    if (!squarefree_small(generator))
        fail(ErrorKind::InvalidFieldData, "quadratic generator must be squarefree");
    long mod4 = ((generator % 4) + 4) % 4;
    NumberFieldData K;
    K.degree = 2;
    K.quad_disc = (mod4 == 1) ? generator : 4 * generator;
    K.abs_disc = std::labs(K.quad_disc);
    K.label = (generator == -1) ? "Qi" : ("Qsqrt:" + std::to_string(generator));
    return K;
}

NumberFieldData NumberFieldData::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Qi") return quadratic(-1);
    const std::string prefix = "Qsqrt:";
    if (text.rfind(prefix, 0) == 0) {
        long g = std::strtol(text.c_str() + prefix.size(), nullptr, 10);
        return quadratic(g);
    }
    fail(ErrorKind::InvalidFieldData, "unknown field '" + text + "' (expected Q, Qi, Qsqrt:D)");
}

double NumberFieldData::log_disc_plus_degree() const {
    return std::log(static_cast<double>(abs_disc)) + degree;
}

int kronecker_symbol(long D, std::uint64_t p) {
    if (p == 2) {
        if (D % 2 == 0) return 0;
        long r = ((D % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    long pd = static_cast<long>(p);
    long d = ((D % pd) + pd) % pd;
    if (d == 0) return 0;
    // Euler's criterion
    std::uint64_t r = 1, b = static_cast<std::uint64_t>(d), e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

} // namespace arakount
