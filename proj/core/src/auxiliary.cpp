#include "arakount/auxiliary.hpp"

#include <algorithm>

namespace arakount {

namespace {

Int eval_monomial(const ProjectivePoint& p, const Monomial& m) {
    Int t = 1;
    for (std::size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e) t *= p.coords[v];
    return t;
}

struct Elimination {
    std::vector<std::vector<Int>> M; // echelon form after forward pass
    std::vector<int> pivot_col;      // pivot column per pivot row
    int rank = 0;
};

/// Fraction-free (Bareiss) forward elimination; pivots chosen per column as
/// the max-absolute-value entry, ties broken by row order.
Elimination bareiss(const EvaluationMatrix& matrix) {
    Elimination e;
    e.M = matrix.entries;
    const int rows = static_cast<int>(e.M.size());
    const int cols = static_cast<int>(matrix.cols.size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        Int best = 0;
        for (int i = r; i < rows; ++i) {
            Int a = abs_int(e.M[i][c]);
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (piv < 0) continue;
        std::swap(e.M[r], e.M[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                e.M[i][j] = (e.M[i][j] * e.M[r][c] - e.M[i][c] * e.M[r][j]) / prev;
            e.M[i][c] = 0;
        }
        prev = e.M[r][c];
        e.pivot_col.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

EvaluationMatrix monomial_matrix(const std::vector<ProjectivePoint>& points, int nvars, int D,
                                 double budget) {
    if (D < 1) fail(ErrorKind::InvalidParams, "monomial degree must be >= 1");
    EvaluationMatrix m;
    m.nvars = nvars;
    m.D = D;
    m.cols = monomials_of_degree(nvars, D);
    double entries = static_cast<double>(m.cols.size()) * static_cast<double>(points.size());
    if (entries > budget) fail(ErrorKind::BudgetExceeded, "evaluation matrix too large");
    for (const auto& p : points) {
        if (p.nvars() != nvars) fail(ErrorKind::InvalidParams, "point dimension mismatch");
        if (!p.is_canonical()) fail(ErrorKind::InvalidPoint, "points must be canonical");
        std::vector<Int> row;
        row.reserve(m.cols.size());
        for (const auto& mono : m.cols) row.push_back(eval_monomial(p, mono));
        m.entries.push_back(std::move(row));
        m.rows.push_back(p);
    }
    return m;
}

int exact_rank(const EvaluationMatrix& matrix) { return bareiss(matrix).rank; }

std::vector<std::vector<Int>> exact_nullspace(const EvaluationMatrix& matrix) {
    const int cols = static_cast<int>(matrix.cols.size());
    Elimination e = bareiss(matrix);

    // reduced echelon over Q by back-substitution on the echelon rows
    std::vector<std::vector<Rat>> R(e.rank, std::vector<Rat>(cols));
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < cols; ++j) R[i][j] = Rat(e.M[i][j]);
    for (int i = e.rank - 1; i >= 0; --i) {
        int pc = e.pivot_col[i];
        Rat inv = R[i][pc];
        for (int j = pc; j < cols; ++j) R[i][j] /= inv;
        for (int k = 0; k < i; ++k) {
            Rat f = R[k][pc];
            if (f == 0) continue;
            for (int j = pc; j < cols; ++j) R[k][j] -= f * R[i][j];
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (int pc : e.pivot_col) is_pivot[pc] = true;

    std::vector<std::vector<Int>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (int i = 0; i < e.rank; ++i) v[e.pivot_col[i]] = -R[i][fc];
        // primitive integer scaling, free-column entry positive
        Int den = 1;
        for (const Rat& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> w(cols);
        Int content = 0;
        for (int j = 0; j < cols; ++j) {
            w[j] = v[j].get_num() * (den / v[j].get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[j].get_mpz_t());
        }
        for (auto& x : w) x /= content;
        if (w[fc] < 0)
            for (auto& x : w) x = -x;
        basis.push_back(std::move(w));
    }
    return basis;
}

long padic_det_valuation(const std::vector<ProjectivePoint>& points,
                         const std::vector<Monomial>& monomial_subset, std::uint64_t p) {
    const std::size_t r = points.size();
    if (r == 0 || monomial_subset.size() != r)
        fail(ErrorKind::InvalidParams, "square selection required");
    std::vector<std::vector<Int>> M(r, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i) {
        auto cp = points[i].canonical();
        for (std::size_t j = 0; j < r; ++j) M[i][j] = eval_monomial(cp, monomial_subset[j]);
    }
    // Bareiss determinant
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < r; ++k) {
        if (M[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < r && M[s][k] == 0) ++s;
            if (s == r) throw Error(ErrorKind::SingularMinor, "zero determinant");
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i)
            for (std::size_t j = k + 1; j < r; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    Int det = sign * M[r - 1][r - 1];
    if (det == 0) throw Error(ErrorKind::SingularMinor, "zero determinant");
    return padic_valuation(det, Int(static_cast<unsigned long>(p)));
}

HomogeneousPolynomial poly_mod(const HomogeneousPolynomial& g, const HomogeneousPolynomial& f,
                               bool* divisible) {
    if (g.nvars() != f.nvars()) fail(ErrorKind::InvalidParams, "variable count mismatch");
    // single-divisor graded-lex reduction over Q
    auto lead = f.terms().begin();
    const Monomial& lm = lead->first;
    const Rat& lc = lead->second;
    HomogeneousPolynomial::TermMap work(g.terms().begin(), g.terms().end());
    std::vector<std::pair<Monomial, Rat>> rem;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rat c = it->second;
        work.erase(it);
        bool div = true;
        for (std::size_t v = 0; v < m.size(); ++v) div = div && m[v] >= lm[v];
        if (!div) {
            rem.emplace_back(m, c);
            continue;
        }
        Rat q = c / lc;
        for (const auto& [fm, fc] : f.terms()) {
            Monomial t = m;
            for (std::size_t v = 0; v < t.size(); ++v) t[v] += fm[v] - lm[v];
            auto& cell = work[t];
            cell -= q * fc;
            if (cell == 0) work.erase(t);
        }
    }
    if (divisible) *divisible = rem.empty();
    if (rem.empty())
        return HomogeneousPolynomial(); // zero remainder sentinel (empty polynomial)
    return HomogeneousPolynomial(g.nvars(), rem);
}

AuxiliaryCurve minimal_auxiliary(const HomogeneousPolynomial& f, const PointSet& points,
                                 int degree_cap, double matrix_budget) {
    if (f.nvars() != 3) fail(ErrorKind::Unsupported, "auxiliary search is for plane curves");
    for (int D = 1; D <= degree_cap; ++D) {
        EvaluationMatrix m = monomial_matrix(points.points, f.nvars(), D, matrix_budget);
        auto basis = exact_nullspace(m);
        bool have_chosen = false;
        HomogeneousPolynomial chosen_poly, chosen_rem;
        for (const auto& v : basis) {
            std::vector<std::pair<Monomial, Rat>> ts;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) ts.emplace_back(m.cols[j], Rat(v[j]));
            HomogeneousPolynomial g(f.nvars(), ts);
            bool div = false;
            HomogeneousPolynomial rem = poly_mod(g, f, &div);
            if (div) continue;
            if (!have_chosen) {
                chosen_poly = g;
                chosen_rem = rem;
                have_chosen = true;
                continue;
            }
            // smaller leading monomial first, then smaller max |coefficient|
            const Monomial& lg = g.terms().begin()->first;
            const Monomial& lc = chosen_poly.terms().begin()->first;
            bool better = false;
            if (GradedLexGreater{}(lc, lg))
                better = true;
            else if (!GradedLexGreater{}(lg, lc)) {
                auto max_abs = [](const HomogeneousPolynomial& h) {
                    Int mx = 0;
                    for (const auto& [mm, cc] : h.primitive_integer_terms()) {
                        Int a = abs_int(cc);
                        if (a > mx) mx = a;
                    }
                    return mx;
                };
                better = max_abs(g) < max_abs(chosen_poly);
            }
            if (better) {
                chosen_poly = g;
                chosen_rem = rem;
            }
        }
        if (have_chosen) {
            AuxiliaryCurve out;
            out.g = chosen_poly;
            out.D = D;
            out.remainder = chosen_rem;
            out.remainder_zero = false;
            for (const auto& p : points.points)
                out.point_values.push_back(chosen_poly.evaluate_cleared(p.coords));
            return out;
        }
    }
    fail(ErrorKind::BudgetExceeded, "no auxiliary curve below the degree cap");
}

} // namespace arakount
