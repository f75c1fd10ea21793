#include "arakount/expr.hpp"

#include <cctype>

namespace arakount {

namespace {

constexpr std::size_t kMaxInput = 64 * 1024;

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void syntax(const std::string& what) const {
        throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            syntax("expected a number");
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return Int(s.substr(start, pos - start));
    }

    /// var index, or -1 when the next token is not a variable
    int try_variable() {
        skip_ws();
        if (pos >= s.size()) return -1;
        char c = s[pos];
        if (c == 'x') {
            if (pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                int idx = s[pos + 1] - '0';
                pos += 2;
                return idx;
            }
            ++pos;
            return 0;
        }
        if (c == 'y') {
            ++pos;
            return 1;
        }
        if (c == 'z') {
            ++pos;
            return 2;
        }
        if (c == 'w') {
            ++pos;
            return 3;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::UnknownVariable,
                        std::string("'") + c + "' at position " + std::to_string(pos));
        return -1;
    }

    /// factor := var ('^' uint)?; accumulates into the exponent map
    void parse_factor(std::map<int, int>& exps) {
        int v = try_variable();
        if (v < 0) syntax("expected a variable");
        int e = 1;
        if (accept('^')) {
            Int ei = parse_uint();
            if (ei > 64) syntax("exponent too large");
            e = static_cast<int>(ei.get_si());
        }
        exps[v] += e;
    }

    /// term := coeff ('*' factor)* | factor ('*' factor)*
    void parse_term(Rat sign, std::vector<std::pair<std::map<int, int>, Rat>>& terms) {
        Rat coeff = sign;
        std::map<int, int> exps;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Int num = parse_uint();
            if (accept('/')) {
                Int den = parse_uint();
                if (den == 0) syntax("zero denominator");
                coeff *= Rat(num, den);
            } else {
                coeff *= Rat(num);
            }
        } else {
            parse_factor(exps);
        }
        while (accept('*')) parse_factor(exps);
        Rat c = coeff;
        c.canonicalize();
        terms.emplace_back(std::move(exps), std::move(c));
    }
};

} // namespace

HomogeneousPolynomial parse_polynomial(const std::string& text, int min_nvars) {
    if (text.size() > kMaxInput) fail(ErrorKind::InvalidParams, "input exceeds 64 KiB");
    Parser p(text);
    std::vector<std::pair<std::map<int, int>, Rat>> raw;
    Rat sign = p.accept('-') ? Rat(-1) : Rat(1);
    if (sign == 1) p.accept('+');
    p.parse_term(sign, raw);
    while (!p.eof()) {
        if (p.accept('+'))
            p.parse_term(Rat(1), raw);
        else if (p.accept('-'))
            p.parse_term(Rat(-1), raw);
        else
            p.syntax("expected '+' or '-'");
    }
    int nvars = min_nvars;
    for (const auto& [exps, c] : raw)
        for (const auto& [v, e] : exps) nvars = std::max(nvars, v + 1);
    nvars = std::max(nvars, 1);
    std::vector<std::pair<Monomial, Rat>> terms;
    int degree = -1;
    for (const auto& [exps, c] : raw) {
        Monomial m(nvars, 0);
        for (const auto& [v, e] : exps) m[v] = e;
        if (c != 0) {
            int d = monomial_degree(m);
            if (degree < 0) degree = d;
            if (d != degree)
                throw Error(ErrorKind::NonHomogeneous,
                            "degrees " + std::to_string(degree) + " and " + std::to_string(d));
        }
        terms.emplace_back(std::move(m), c);
    }
    return HomogeneousPolynomial(nvars, terms);
}

std::string format_polynomial(const HomogeneousPolynomial& f) {
    static const char* kNames[] = {"x", "y", "z", "w"};
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (v < 4 && f.nvars() <= 4) ? kNames[v] : ("x" + std::to_string(v));
            if (m[v] > 1) mono += "^" + std::to_string(m[v]);
        }
        bool unit = (a == 1);
        if (mono.empty()) {
            out += a.get_str();
        } else if (unit) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

} // namespace arakount
