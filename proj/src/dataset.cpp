#include "branchloci/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace branchloci {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

static std::string summarize(const ValidationReport& report) {
    std::string text = "invalid data set";
    for (const auto& v : report.violations) text += "; (" + v.condition + ") " + v.message;
    return text;
}

InvalidDataSet::InvalidDataSet(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

Rational operator+(Rational a, Rational b) {
    std::int64_t l = std::lcm(a.den, b.den);
    return Rational::make(a.num * (l / a.den) + b.num * (l / b.den), l);
}

Rational operator-(Rational a, Rational b) { return a + Rational{-b.num, b.den}; }

Rational operator*(Rational a, Rational b) {
    Rational x = Rational::make(a.num, b.den);
    Rational y = Rational::make(b.num, a.den);
    return Rational::make(x.num * y.num, x.den * y.den);
}

std::int64_t lcm_of(const std::vector<std::int64_t>& values) {
    std::int64_t l = 1;
    for (auto v : values) l = std::lcm(l, v);
    return l;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    DataSet parse() {
        DataSet d;
        expect('(');
        d.n = integer();
        expect(',');
        d.g0 = integer();
        skip_ws();
        if (peek() == ',') {
            ++pos_;
            d.r = integer();
        }
        expect(';');
        skip_ws();
        if (peek() != ')') {
            pair(d.pairs);
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                pair(d.pairs);
                skip_ws();
            }
        }
        expect(')');
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return d;
    }

private:
    void pair(std::vector<ConePair>& out) {
        expect('(');
        ConePair p;
        p.c = integer();
        expect(',');
        p.n_i = integer();
        expect(')');
        skip_ws();
        std::int64_t m = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool braced = peek() == '{';
            if (braced) ++pos_;
            expect('[');
            std::size_t at = pos_;
            m = integer();
            if (m < 1) throw ParseError(at, "multiplicity must be at least 1");
            expect(']');
            if (braced) expect('}');
        }
        for (std::int64_t i = 0; i < m; ++i) out.push_back(p);
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > 100000000000LL) throw ParseError(start, "integer too large");
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return negative ? -v : v;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
        throw ParseError(pos_, what + ", found " + found);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

DataSet parse_data_set(const std::string& text) { return Parser(text).parse(); }

std::string format_data_set(const DataSet& d) {
    std::ostringstream out;
    out << '(' << d.n << ',' << d.g0;
    if (d.r != 0) out << ',' << d.r;
    out << ';';
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        if (i) out << ',';
        out << '(' << d.pairs[i].c << ',' << d.pairs[i].n_i << ')';
    }
    out << ')';
    return out.str();
}

Rational riemann_hurwitz_genus(const DataSet& d) {
    if (d.n < 1) throw std::domain_error("degree must be positive");
    Rational rhs = Rational::make(2 - 2 * d.g0, 1);
    for (const auto& p : d.pairs) {
        if (p.n_i < 1) throw std::domain_error("cone order must be positive");
        rhs = rhs + Rational::make(1, p.n_i) - Rational::make(1, 1);
    }
    // (2 - 2g)/n = rhs  =>  g = 1 - n*rhs/2
    return Rational::make(1, 1) - Rational::make(d.n, 2) * rhs;
}

ValidationReport validate(const DataSet& d) {
    ValidationReport report;
    const auto l = d.pairs.size();
    if (d.n < 2) report.add("n", "degree n must be at least 2, got " + std::to_string(d.n));
    if (d.g0 < 0) report.add("g0", "quotient genus must be non-negative, got " + std::to_string(d.g0));
    if (d.r < 0 || (d.n >= 2 && d.r > d.n - 1))
        report.add("r", "rotation amount must lie in [0, n-1], got " + std::to_string(d.r));

    // (i)
    if ((d.r > 0) != (l == 0)) {
        report.add("i", d.r > 0 ? "r > 0 requires an empty cone-point list"
                                : "an empty cone-point list requires r > 0");
    } else if (d.r > 0 && d.n >= 2 && std::gcd(d.r, d.n) != 1) {
        report.add("i", "gcd(r, n) = " + std::to_string(std::gcd(d.r, d.n)) + " != 1");
    }

    // (ii), (iii)
    bool orders_ok = true;
    for (std::size_t i = 0; i < l; ++i) {
        const auto& p = d.pairs[i];
        std::string tag = "pair " + std::to_string(i + 1) + ": ";
        if (p.n_i < 2 || p.n_i > d.n || d.n < 1 || d.n % p.n_i != 0) {
            report.add("ii", tag + "cone order " + std::to_string(p.n_i) + " must divide n = " + std::to_string(d.n) +
                                 " and be at least 2");
            orders_ok = false;
        }
        if (p.n_i >= 2 && (p.c < 1 || p.c > p.n_i - 1 || std::gcd(p.c, p.n_i) != 1))
            report.add("iii", tag + "residue " + std::to_string(p.c) + " must lie in [1, n_i-1] and be coprime to " +
                                  std::to_string(p.n_i));
    }

    // (iv): the deletion clause only has content for l >= 2; the g0 = 0 clause
    // applies to every l, where the lcm of an empty list is 1.
    if (orders_ok) {
        std::vector<std::int64_t> orders;
        for (const auto& p : d.pairs) orders.push_back(p.n_i);
        const auto full = lcm_of(orders);
        if (l >= 2) {
            for (std::size_t i = 0; i < l; ++i) {
                auto rest = orders;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                if (lcm_of(rest) != full)
                    report.add("iv", "deleting pair " + std::to_string(i + 1) + " changes lcm of cone orders from " +
                                         std::to_string(full) + " to " + std::to_string(lcm_of(rest)));
            }
        }
        if (d.g0 == 0 && full != d.n)
            report.add("iv", "g0 = 0 requires lcm of cone orders = n, got " + std::to_string(full));

        // (v)
        if (d.n >= 2) {
            std::int64_t sum = 0;
            for (const auto& p : d.pairs) sum = (sum + (d.n / p.n_i) * p.c) % d.n;
            if (sum != 0)
                report.add("v", "sum of (n/n_i)*c_i is " + std::to_string(sum) + " mod " + std::to_string(d.n) +
                                    ", expected 0");
        }
    }

    if (d.n >= 1 && std::all_of(d.pairs.begin(), d.pairs.end(), [](const ConePair& p) { return p.n_i >= 1; })) {
        Rational g = riemann_hurwitz_genus(d);
        if (g.den != 1)
            report.add("rh", "Riemann-Hurwitz genus " + std::to_string(g.num) + "/" + std::to_string(g.den) +
                                 " is not an integer");
        else if (g.num < 0)
            report.add("rh", "Riemann-Hurwitz genus " + std::to_string(g.num) + " is negative");
    }
    return report;
}

std::int64_t genus(const DataSet& d) {
    auto report = validate(d);
    if (!report.valid) throw InvalidDataSet(std::move(report));
    return riemann_hurwitz_genus(d).num;
}

ActionClass classify(const DataSet& d) {
    ActionClass result;
    const auto l = d.pairs.size();
    result.irreducible = d.g0 == 0 && l == 3;

    bool rotational = d.r != 0;
    if (!rotational && l >= 2 && l % 2 == 0 &&
        std::all_of(d.pairs.begin(), d.pairs.end(), [&](const ConePair& p) { return p.n_i == d.n; })) {
        std::map<std::int64_t, std::size_t> count;
        for (const auto& p : d.pairs) ++count[p.c];
        const auto c = d.pairs.front().c;
        const auto k = l / 2;
        if (c == d.n - c)
            rotational = count.size() == 1;
        else
            rotational = count.size() == 2 && count[c] == k && count[d.n - c] == k;
    }
    if (rotational) {
        result.kind = ActionKind::Rotational;
    } else if (l == 3 && std::any_of(d.pairs.begin(), d.pairs.end(), [&](const ConePair& p) { return p.n_i == d.n; })) {
        result.kind = ActionKind::Type1;
    } else {
        result.kind = ActionKind::Type2;
    }
    return result;
}

std::string class_name(const ActionClass& c) {
    std::string name = c.kind == ActionKind::Rotational ? "Rotational" : c.kind == ActionKind::Type1 ? "Type1" : "Type2";
    if (c.irreducible) name += "-irreducible";
    return name;
}

bool check_compatibility(const DataSet& d1, std::size_t r, const DataSet& d2, std::size_t s) {
    if (r < 1 || r > d1.pairs.size()) throw std::out_of_range("pair index r out of range");
    if (s < 1 || s > d2.pairs.size()) throw std::out_of_range("pair index s out of range");
    if (d1.n != d2.n) return false;
    const auto& a = d1.pairs[r - 1];
    const auto& b = d2.pairs[s - 1];
    if (a.n_i != b.n_i) return false;
    return (a.c + b.c) % a.n_i == 0;
}

DataSet compose_compatible(const DataSet& d1, std::size_t r, const DataSet& d2, std::size_t s) {
    if (!check_compatibility(d1, r, d2, s)) throw std::invalid_argument("data sets are not compatible at the given indices");
    DataSet out;
    out.n = d1.n;
    out.g0 = d1.g0 + d2.g0;
    for (std::size_t i = 0; i < d1.pairs.size(); ++i)
        if (i + 1 != r) out.pairs.push_back(d1.pairs[i]);
    for (std::size_t i = 0; i < d2.pairs.size(); ++i)
        if (i + 1 != s) out.pairs.push_back(d2.pairs[i]);
    std::stable_sort(out.pairs.begin(), out.pairs.end(), [](const ConePair& a, const ConePair& b) {
        return std::pair(a.n_i, a.c) < std::pair(b.n_i, b.c);
    });
    return out;
}

}  // namespace branchloci
