#include "relnodes/multipoly.hpp"

#include "relnodes/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace relnodes {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError("cannot parse rational '" + s + "'");
    }
}

std::string Var::name() const {
    switch (kind) {
        case D: return "D";
        case S: return "S";
        case A: return "a" + std::to_string(index);
        case B: return "b" + std::to_string(index);
        case K: return "k";
        case X: return "x";
    }
    return "?";
}

Var Var::parse(const std::string& s) {
    if (s == "D") return var_D();
    if (s == "S") return var_S();
    if (s == "k") return var_k();
    if (s == "x") return var_x();
    if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'b')) {
        int idx = std::stoi(s.substr(1));
        return s[0] == 'a' ? var_a(idx) : var_b(idx);
    }
    throw DomainError("unknown variable name '" + s + "'");
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

bool GradedLexDesc::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    // Merged walk in variable order; the monomial with the larger exponent at
    // the first differing variable sorts first.
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i == a.size()) return false;  // a has run out: a is lex-smaller
        if (j == b.size()) return true;
        if (a[i].first < b[j].first) return true;   // a has a positive power on an earlier var
        if (b[j].first < a[i].first) return false;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i, ++j;
    }
    return false;  // equal
}

MultiPoly::MultiPoly(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rat(c)) {}

MultiPoly MultiPoly::variable(Var v, int exp) {
    MultiPoly p;
    if (exp == 0) return MultiPoly(1);
    p.terms_[Monomial{{v, exp}}] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(const Rat& c, const Monomial& m) {
    MultiPoly p;
    if (c == 0) return p;
    Monomial key = m;
    std::sort(key.begin(), key.end());
    p.terms_[key] = c;
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.begin()->first);  // first term has the top degree
}

int MultiPoly::degree_in(Var v) const {
    int d = 0;
    for (auto& [m, c] : terms_)
        for (auto& [mv, e] : m)
            if (mv == v) d = std::max(d, e);
    return d;
}

bool MultiPoly::mentions(Var v) const {
    for (auto& [m, c] : terms_)
        for (auto& [mv, e] : m)
            if (mv == v) return true;
    return false;
}

Rat MultiPoly::coefficient(const Monomial& m) const {
    Monomial key = m;
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

MultiPoly MultiPoly::coefficient_of(Var v, int e) const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        int got = 0;
        Monomial rest;
        for (auto& [mv, me] : m) {
            if (mv == v)
                got = me;
            else
                rest.push_back({mv, me});
        }
        if (got == e) out.terms_[rest] += c;
    }
    out.prune();
    return out;
}

std::vector<Var> MultiPoly::support_vars() const {
    std::vector<Var> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

static Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.push_back({a[i].first, a[i].second + b[j].second});
            ++i, ++j;
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Monomial m = monomial_product(ma, mb);
            auto [it, fresh] = r.terms_.try_emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.prune();
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, coef] : r.terms_) coef *= c;
    return r;
}

MultiPoly MultiPoly::substituted(Var v, const MultiPoly& replacement) const {
    MultiPoly out;
    std::vector<MultiPoly> powers = {MultiPoly(1)};
    for (auto& [m, c] : terms_) {
        int e = 0;
        Monomial rest;
        for (auto& [mv, me] : m) {
            if (mv == v)
                e = me;
            else
                rest.push_back({mv, me});
        }
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * replacement);
        out += MultiPoly::monomial(c, rest) * powers[e];
    }
    return out;
}

Rat MultiPoly::evaluated(const std::map<Var, Rat>& values) const {
    Rat total = 0;
    for (auto& [m, c] : terms_) {
        Rat term = c;
        for (auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end())
                throw DomainError("evaluation is missing a value for variable " + v.name());
            for (int t = 0; t < e; ++t) term *= it->second;
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::truncated_above(int bound) const {
    MultiPoly out;
    for (auto& [m, c] : terms_)
        if (monomial_degree(m) >= bound) out.terms_[m] = c;
    return out;
}

static void render_term(std::ostream& os, bool first, const Rat& c, const std::string& body) {
    Rat a = c < 0 ? -c : c;
    if (first)
        os << (c < 0 ? "-" : "");
    else
        os << (c < 0 ? " - " : " + ");
    if (a != 1 || body.empty()) {
        os << rat_to_string(a);
        if (!body.empty()) os << " ";
    }
    os << body;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string body;
        for (auto& [v, e] : m) {
            if (!body.empty()) body += " ";
            body += v.name();
            if (e > 1) body += "^" + std::to_string(e);
        }
        render_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

std::string MultiPoly::to_pretty_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string body;
        for (auto& [v, e] : m) {
            if (!body.empty()) body += " ";
            switch (v.kind) {
                case Var::D: body += "d"; break;
                case Var::S: body += "|beta|"; break;
                case Var::A: body += "alpha_" + std::to_string(v.index); break;
                case Var::B: body += "beta_" + std::to_string(v.index); break;
                default: body += v.name(); break;
            }
            if (e > 1) body += "^" + std::to_string(e);
        }
        render_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

MultiPoly MultiPoly::parse(const std::string& text) {
    MultiPoly out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw DomainError("polynomial parse: expected '+' or '-' near position " + std::to_string(i));
        }
        first = false;
        skip_ws();
        if (i >= text.size() ||
            (!std::isdigit(static_cast<unsigned char>(text[i])) &&
             !std::isalpha(static_cast<unsigned char>(text[i]))))
            throw DomainError("polynomial parse: expected a term near position " +
                              std::to_string(i));
        Rat coeff = sign;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
            coeff = Rat(sign) * rat_from_string(text.substr(start, i - start));
        }
        Monomial m;
        skip_ws();
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string name = text.substr(start, i - start);
            Var v;
            if (name == "d" || name == "D")
                v = var_D();
            else if (name == "s" || name == "S")
                v = var_S();
            else
                v = Var::parse(name);
            int exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t estart = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                exp = std::stoi(text.substr(estart, i - estart));
            }
            bool merged = false;
            for (auto& [mv, me] : m)
                if (mv == v) {
                    me += exp;
                    merged = true;
                }
            if (!merged) m.push_back({v, exp});
            skip_ws();
        }
        out += MultiPoly::monomial(coeff, m);
        skip_ws();
    }
    return out;
}

MultiPoly discrete_sum(const MultiPoly& p, Var k, long c, Var x) {
    int deg = p.degree_in(k);
    // Finite differences of p at k = c, c+1, ..., so that
    // p(k) = sum_j diff[j] * binom(k - c, j) and
    // F(x)  = sum_j diff[j] * binom(x - c + 1, j + 1).
    std::vector<MultiPoly> table;
    for (int t = 0; t <= deg; ++t) table.push_back(p.substituted(k, MultiPoly(Rat(c + t))));
    std::vector<MultiPoly> diffs;
    for (int j = 0; j <= deg; ++j) {
        diffs.push_back(table[0]);
        for (size_t t = 0; t + 1 < table.size(); ++t) table[t] = table[t + 1] - table[t];
        table.pop_back();
    }
    MultiPoly result;
    for (int j = 0; j <= deg; ++j) {
        // binom(x - c + 1, j + 1) expanded in x.
        MultiPoly binom(1);
        for (int t = 0; t <= j; ++t)
            binom *= MultiPoly::variable(x) + MultiPoly(Rat(1 - c - t));
        binom = binom.scaled(Rat(1, factorial(j + 1)));
        result += diffs[j] * binom;
    }
    return result;
}

MultiPoly interpolate(const std::vector<std::pair<long, Rat>>& points, int degree, Var v) {
    if (static_cast<int>(points.size()) < degree + 1)
        throw DomainError("interpolation needs at least degree+1 points");
    for (size_t i = 0; i + 1 < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DomainError("interpolation abscissae must be distinct");
    MultiPoly result;
    for (int i = 0; i <= degree; ++i) {
        MultiPoly basis(points[i].second);
        for (int j = 0; j <= degree; ++j) {
            if (j == i) continue;
            basis *= (MultiPoly::variable(v) - MultiPoly(Rat(points[j].first)))
                         .scaled(make_rat(1, points[i].first - points[j].first));
        }
        result += basis;
    }
    for (size_t i = degree + 1; i < points.size(); ++i) {
        Rat got = result.evaluated({{v, Rat(points[i].first)}});
        if (got != points[i].second)
            throw DegreeOverflowError("interpolation: extra point (" + std::to_string(points[i].first) +
                                      ") off the degree-" + std::to_string(degree) + " fit");
    }
    return result;
}

MultiPoly falling_product(Var v, int c, int delta) {
    if (c < 0 || c > delta) throw DomainError("falling product needs 0 <= c <= delta");
    MultiPoly out(1);
    for (int i = c; i <= delta - 1; ++i) out *= MultiPoly::variable(v) - MultiPoly(Rat(i));
    return out;
}

Int stirling_first(int n, int m) {
    if (n < 0 || m < 0) throw DomainError("Stirling numbers need n, m >= 0");
    if (m > n) return 0;
    // s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m)
    std::vector<Int> row = {1};  // s(0, 0)
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(i + 1, 0);
        for (int j = 0; j <= i; ++j) {
            if (j > 0) next[j] += row[j - 1];
            if (j < i) next[j] -= (i - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[m];
}

}  // namespace relnodes
