#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/tower.hpp"

// Points in homogeneous coordinates [z_1 : w_1 : ... : z_n : w_n], with
// D'_i = {z_i = 0} and D_i = {w_i = 0}. Only the zero/nonzero pattern feeds
// the Seshadri formula, so entries may be pure statuses; exact rational
// representatives are optional and used by canonicalization.
//
// Textual syntax (CLI): "[z1:w1:...:zn:wn]" with each entry an exact rational
// literal ("2", "-1", "2/3") or "*" for nonzero-with-unspecified-value.

namespace bott {

class CoordEntry {
public:
    static CoordEntry zero() { return CoordEntry(true, Rat(0)); }
    static CoordEntry nonzero() { return CoordEntry(false, std::nullopt); }
    static CoordEntry of(Rat value) {
        const bool z = value == 0;
        return CoordEntry(z, std::move(value));
    }

    bool is_zero() const noexcept { return zero_; }
    bool has_value() const noexcept { return value_.has_value(); }

    const Rat& value() const {
        if (!value_) throw MissingValues("coordinate has no concrete value");
        return *value_;
    }

    friend bool operator==(const CoordEntry&, const CoordEntry&) = default;

private:
    CoordEntry(bool zero, std::optional<Rat> value) : zero_(zero), value_(std::move(value)) {}

    bool zero_;
    std::optional<Rat> value_;
};

class CoxPoint {
public:
    explicit CoxPoint(std::vector<CoordEntry> entries) : entries_(std::move(entries)) {
        if (entries_.empty() || entries_.size() % 2 != 0)
            throw LengthMismatch("a point needs an even, positive number of coordinates");
    }

    int pair_count() const noexcept { return static_cast<int>(entries_.size() / 2); }

    const CoordEntry& z(int i) const { return entries_[entry_index(i, 0)]; }
    const CoordEntry& w(int i) const { return entries_[entry_index(i, 1)]; }

    const std::vector<CoordEntry>& entries() const noexcept { return entries_; }

    // The point of the fiber tower on stages i..n (drops pairs 1..i-1).
    CoxPoint tail(int i) const {
        if (i < 1 || i > pair_count()) throw IndexOutOfRange("tail at pair " + std::to_string(i));
        return CoxPoint(std::vector<CoordEntry>(entries_.begin() + 2 * (i - 1), entries_.end()));
    }

    friend bool operator==(const CoxPoint&, const CoxPoint&) = default;

private:
    std::size_t entry_index(int i, int offset) const {
        if (i < 1 || i > pair_count())
            throw IndexOutOfRange("coordinate pair " + std::to_string(i));
        return static_cast<std::size_t>(2 * (i - 1) + offset);
    }

    std::vector<CoordEntry> entries_;
};

// Confirms x has n coordinate pairs, none of them (0, 0).
inline CoxPoint validate_point(const BottTower& t, const CoxPoint& x) {
    if (x.pair_count() != t.dimension())
        throw LengthMismatch("point with " + std::to_string(x.pair_count()) +
                             " pairs on a tower of dimension " + std::to_string(t.dimension()));
    for (int i = 1; i <= x.pair_count(); ++i)
        if (x.z(i).is_zero() && x.w(i).is_zero()) throw InvalidPair(i);
    return x;
}

// The stratum of x: smallest i with z_j = 0 for all j > i. Depends only on
// the zero pattern of z_2, ..., z_n.
inline int gamma_index(const BottTower& t, const CoxPoint& x0) {
    const CoxPoint x = validate_point(t, x0);
    int idx = 1;
    for (int j = 2; j <= t.dimension(); ++j)
        if (!x.z(j).is_zero()) idx = j;
    return idx;
}

// Membership in the i-th curve of the filtration; monotone in i.
inline bool in_gamma(const BottTower& t, const CoxPoint& x, int i) {
    if (i < 1 || i > t.dimension())
        throw IndexOutOfRange("curve index " + std::to_string(i) + " with n = " +
                              std::to_string(t.dimension()));
    return gamma_index(t, x) <= i;
}

// The torus-fixed point of a maximal cone: the point lying on the prime
// divisor of every ray of the cone, so z_i = 0 where the cone selects v_i
// and w_i = 0 where it selects v_{n+i}.
inline CoxPoint fixed_point_of_cone(const BottTower& t, const MaximalCone& cone) {
    if (cone.dimension() != t.dimension())
        throw LengthMismatch("cone dimension does not match tower");
    std::vector<CoordEntry> entries;
    entries.reserve(static_cast<std::size_t>(2 * t.dimension()));
    for (int i = 1; i <= t.dimension(); ++i) {
        if (cone.upper(i)) {
            entries.push_back(CoordEntry::of(Rat(1)));
            entries.push_back(CoordEntry::of(Rat(0)));
        } else {
            entries.push_back(CoordEntry::of(Rat(0)));
            entries.push_back(CoordEntry::of(Rat(1)));
        }
    }
    return CoxPoint(std::move(entries));
}

// Normal form under the torus action. The action twists z_i by
// t_i * prod_{k<i} t_k^{-c_{k,i}} and w_i by t_i, so choosing t_1, ..., t_n
// in order scales w_i to 1 when nonzero, else z_i to 1. Idempotent, and the
// zero pattern is untouched.
inline CoxPoint canonicalize(const BottTower& t, const CoxPoint& x0) {
    const CoxPoint x = validate_point(t, x0);
    const int n = t.dimension();
    for (const CoordEntry& e : x.entries())
        if (!e.has_value())
            throw MissingValues("canonicalize needs concrete coordinate values");

    std::vector<Rat> torus(static_cast<std::size_t>(n) + 1);
    std::vector<CoordEntry> entries;
    entries.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        const Rat& zi = x.z(i).value();
        const Rat& wi = x.w(i).value();
        Rat twist = 1;
        for (int k = 1; k < i; ++k)
            twist *= rational_pow(torus[static_cast<std::size_t>(k)], -t.numbers().c(k, i));
        Rat ti = wi != 0 ? Rat(1) / wi : Rat(1) / (twist * zi);
        entries.push_back(CoordEntry::of(ti * twist * zi));
        entries.push_back(CoordEntry::of(ti * wi));
        torus[static_cast<std::size_t>(i)] = std::move(ti);
    }
    return CoxPoint(std::move(entries));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline Rat parse_rational(std::string_view token) {
    std::string_view num = token;
    std::string_view den;
    if (const auto slash = token.find('/'); slash != std::string_view::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
        digits.remove_prefix(1);
    if (!all_digits(digits) || (!den.empty() && !all_digits(den)) ||
        (den.empty() && token.find('/') != std::string_view::npos))
        throw ParseError("not a rational literal: '" + std::string(token) + "'");
    Int n{std::string(num)};
    if (den.empty()) return Rat(n);
    Int d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
    return Rat(n, d);
}

}  // namespace detail

inline CoordEntry parse_coord_entry(std::string_view token) {
    token = detail::trim(token);
    if (token == "*") return CoordEntry::nonzero();
    return CoordEntry::of(detail::parse_rational(token));
}

inline CoxPoint parse_point(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ParseError("unbalanced brackets in point '" + std::string(text) + "'");
        s.remove_prefix(1);
        s.remove_suffix(1);
    }
    std::vector<CoordEntry> entries;
    while (true) {
        const auto colon = s.find(':');
        const std::string_view token = colon == std::string_view::npos ? s : s.substr(0, colon);
        entries.push_back(parse_coord_entry(token));
        if (colon == std::string_view::npos) break;
        s.remove_prefix(colon + 1);
    }
    if (entries.size() % 2 != 0)
        throw ParseError("point must have an even number of entries, got " +
                         std::to_string(entries.size()));
    return CoxPoint(std::move(entries));
}

inline std::string format_coord_entry(const CoordEntry& e) {
    if (!e.has_value()) return e.is_zero() ? "0" : "*";
    return e.value().str();
}

inline std::string format_point(const CoxPoint& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.entries().size(); ++i) {
        if (i) out += ':';
        out += format_coord_entry(x.entries()[i]);
    }
    out += ']';
    return out;
}

}  // namespace bott
