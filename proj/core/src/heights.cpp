#include "arakount/heights.hpp"

#include <cmath>

namespace arakount {

ProjectivePoint::ProjectivePoint(std::vector<Int> cs, std::string tag)
    : coords(std::move(cs)), field_tag(std::move(tag)) {}

ProjectivePoint::ProjectivePoint(std::initializer_list<long> cs, std::string tag)
    : field_tag(std::move(tag)) {
    for (long c : cs) coords.emplace_back(c);
}

ProjectivePoint ProjectivePoint::canonical() const {
    if (coords.empty()) fail(ErrorKind::InvalidPoint, "no coordinates");
    Int g = 0;
    for (const Int& c : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) fail(ErrorKind::InvalidPoint, "all coordinates zero");
    ProjectivePoint out;
    out.field_tag = field_tag;
    out.coords.reserve(coords.size());
    for (const Int& c : coords) out.coords.push_back(c / g);
    for (const Int& c : out.coords) {
        if (c == 0) continue;
        if (c < 0)
            for (Int& x : out.coords) x = -x;
        break;
    }
    return out;
}

bool ProjectivePoint::is_canonical() const {
    if (coords.empty()) return false;
    Int g = 0;
    for (const Int& c : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 1) return false;
    for (const Int& c : coords) {
        if (c == 0) continue;
        return c > 0;
    }
    return false;
}

int field_tag_degree(const std::string& tag) {
    if (tag == "Q") return 1;
    if (tag.rfind("Qsqrt", 0) == 0 || tag == "Qi") return 2;
    fail(ErrorKind::InvalidFieldData, "unknown field tag '" + tag + "'");
}

HeightValue weil_height(const ProjectivePoint& point) {
    ProjectivePoint p = point.canonical();
    Int mx = 0;
    for (const Int& c : p.coords) {
        Int a = abs_int(c);
        if (a > mx) mx = a;
    }
    int deg = field_tag_degree(p.field_tag);
    HeightValue hv;
    hv.h = log_int(mx);
    Rat H(mx);
    for (int i = 1; i < deg; ++i) H *= mx;
    hv.H = H;
    hv.h_arakelov = arakelov_height(point);
    return hv;
}

double arakelov_height(const ProjectivePoint& point) {
    ProjectivePoint p = point.canonical();
    Int s = 0;
    for (const Int& c : p.coords) s += c * c;
    return 0.5 * log_int(s);
}

HeightValue naive_poly_height(const HomogeneousPolynomial& f) {
    auto ts = f.primitive_integer_terms();
    Int mx = 0;
    for (const auto& [m, c] : ts) {
        Int a = abs_int(c);
        if (a > mx) mx = a;
    }
    HeightValue hv;
    hv.H = Rat(mx);
    hv.h = log_int(mx);
    hv.h_arakelov = hv.h;
    return hv;
}

std::pair<double, double> hypersurface_height_interval(const HomogeneousPolynomial& f) {
    int n = f.nvars() - 1;
    int delta = f.degree();
    if (n < 1) fail(ErrorKind::InvalidPolynomial, "need an ambient projective space");
    double h = naive_poly_height(f).h;
    double Hn = harmonic(n);
    double lo = h - delta * (std::log(2.0) + 5.0 * std::log(n + 1.0) - 0.5 * Hn);
    double hi = h + 0.5 * std::log((n + 1.0) * (delta + 1.0)) + 0.5 * delta * Hn;
    return {lo, hi};
}

} // namespace arakount
