#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchloci {

struct ConePair {
    std::int64_t c = 0;
    std::int64_t n_i = 0;
    friend bool operator==(const ConePair&, const ConePair&) = default;
};

// (n, g0, r; (c_1,n_1), ..., (c_l,n_l))
struct DataSet {
    std::int64_t n = 0;
    std::int64_t g0 = 0;
    std::int64_t r = 0;
    std::vector<ConePair> pairs;
    friend bool operator==(const DataSet&, const DataSet&) = default;
};

struct Violation {
    std::string condition;  // "n", "g0", "r", "i".."v", "rh"
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    void add(std::string condition, std::string message) {
        valid = false;
        violations.push_back({std::move(condition), std::move(message)});
    }
};

enum class ActionKind { Rotational, Type1, Type2 };

struct ActionClass {
    ActionKind kind = ActionKind::Type2;
    bool irreducible = false;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class InvalidDataSet : public std::runtime_error {
public:
    explicit InvalidDataSet(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Exact rational p/q with q > 0, reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    static Rational make(std::int64_t num, std::int64_t den);
    friend bool operator==(const Rational&, const Rational&) = default;
};
Rational operator+(Rational a, Rational b);
Rational operator-(Rational a, Rational b);
Rational operator*(Rational a, Rational b);

DataSet parse_data_set(const std::string& text);
std::string format_data_set(const DataSet& d);

ValidationReport validate(const DataSet& d);

// Genus from the Riemann-Hurwitz equation as an exact rational; no validity checks.
Rational riemann_hurwitz_genus(const DataSet& d);
// Throws InvalidDataSet unless d is valid.
std::int64_t genus(const DataSet& d);

ActionClass classify(const DataSet& d);
std::string class_name(const ActionClass& c);

// Pair indices are 1-based.
bool check_compatibility(const DataSet& d1, std::size_t r, const DataSet& d2, std::size_t s);
// Remaining pairs are listed by increasing (n_i, c).
DataSet compose_compatible(const DataSet& d1, std::size_t r, const DataSet& d2, std::size_t s);

std::int64_t lcm_of(const std::vector<std::int64_t>& values);

}  // namespace branchloci
