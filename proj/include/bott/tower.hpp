#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bott/errors.hpp"
#include "bott/integers.hpp"

// Fan layer: the complete smooth fan of a Bott tower, built from its Bott
// numbers. Rays and maximal cones follow the standard presentation
//
//   v_i     = e_i                                   (1 <= i <= n)
//   v_{n+i} = -e_i + c_{i,i+1} e_{i+1} + ... + c_{i,n} e_n   (1 <= i < n)
//   v_{2n}  = -e_n
//
// with 2^n maximal cones, one per choice of v_i or v_{n+i} in each slot.
// Any integer Bott numbers are accepted here; positivity is a hypothesis of
// the Seshadri layer only.

namespace bott {

// Triangular array c_{i,j} for 1 <= i < j <= n.
class BottNumbers {
public:
    explicit BottNumbers(int n) : n_(n) {
        if (n < 1) throw MalformedBottNumbers("tower height must be >= 1");
        c_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Int(0));
    }

    // rows[k-1] holds (c_{k,k+1}, ..., c_{k,n}); an empty list means n = 1.
    static BottNumbers from_rows(const std::vector<IntVec>& rows) {
        const int n = static_cast<int>(rows.size()) + 1;
        BottNumbers out(n);
        for (int i = 1; i < n; ++i) {
            const IntVec& row = rows[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(row.size()) != n - i)
                throw MalformedBottNumbers(
                    "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                    " entries, expected " + std::to_string(n - i));
            for (int j = i + 1; j <= n; ++j)
                out.set_c(i, j, row[static_cast<std::size_t>(j - i - 1)]);
        }
        return out;
    }

    static BottNumbers constant(int n, const Int& value) {
        BottNumbers out(n);
        for (Int& c : out.c_) c = value;
        return out;
    }

    int height() const noexcept { return n_; }

    const Int& c(int i, int j) const { return c_[index(i, j)]; }
    void set_c(int i, int j, Int value) { c_[index(i, j)] = std::move(value); }

    bool all_positive() const {
        for (const Int& c : c_)
            if (c <= 0) return false;
        return true;
    }

    std::vector<IntVec> rows() const {
        std::vector<IntVec> out;
        out.reserve(static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0));
        for (int i = 1; i < n_; ++i) {
            IntVec row;
            row.reserve(static_cast<std::size_t>(n_ - i));
            for (int j = i + 1; j <= n_; ++j) row.push_back(c(i, j));
            out.push_back(std::move(row));
        }
        return out;
    }

    friend bool operator==(const BottNumbers&, const BottNumbers&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j <= i || j > n_)
            throw IndexOutOfRange("Bott number c(" + std::to_string(i) + "," +
                                  std::to_string(j) + ") with n = " + std::to_string(n_));
        const std::size_t row_start =
            static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2;
        return row_start + static_cast<std::size_t>(j - i - 1);
    }

    int n_;
    IntVec c_;
};

struct Ray {
    int index = 0;  // 1..2n
    IntVec v;       // length n

    friend bool operator==(const Ray&, const Ray&) = default;
};

// A maximal cone, encoded by its selector: slot i picks either ray v_i
// ("lower") or ray v_{n+i} ("upper"). Bit i-1 of `bits` set means upper.
// The encoding makes the both-edges exclusion structural and adjacency O(1).
class MaximalCone {
public:
    MaximalCone(int n, std::uint64_t bits) : n_(n), bits_(bits) {
        if (n < 1 || n > 62) throw IndexOutOfRange("cone dimension " + std::to_string(n));
        if (n < 64 && bits >> n)
            throw IndexOutOfRange("cone selector out of range for n = " + std::to_string(n));
    }

    int dimension() const noexcept { return n_; }
    std::uint64_t bits() const noexcept { return bits_; }

    bool upper(int i) const {
        check_slot(i);
        return (bits_ >> (i - 1)) & 1u;
    }

    int ray_index(int i) const { return upper(i) ? n_ + i : i; }

    std::vector<int> ray_indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) out.push_back(ray_index(i));
        return out;
    }

    MaximalCone flipped(int i) const {
        check_slot(i);
        return MaximalCone(n_, bits_ ^ (std::uint64_t{1} << (i - 1)));
    }

    friend bool operator==(const MaximalCone&, const MaximalCone&) = default;

private:
    void check_slot(int i) const {
        if (i < 1 || i > n_)
            throw IndexOutOfRange("cone slot " + std::to_string(i) + " with n = " +
                                  std::to_string(n_));
    }

    int n_;
    std::uint64_t bits_;
};

// An (n-1)-dimensional cone of the fan: a maximal cone with one slot
// dropped. Its two adjacent maximal cones differ exactly in that slot, so a
// wall is canonically (cone with "lower" in the dropped slot, slot index).
class Wall {
public:
    Wall(MaximalCone lower_adjacent, int position)
        : lower_(std::move(lower_adjacent)), position_(position) {
        if (position < 1 || position > lower_.dimension())
            throw IndexOutOfRange("wall position " + std::to_string(position));
        if (lower_.upper(position))
            lower_ = lower_.flipped(position);  // canonical representative
    }

    int dimension() const noexcept { return lower_.dimension() - 1; }
    int position() const noexcept { return position_; }

    // Adjacent maximal cones: lower_cone selects v_position, upper_cone
    // selects v_{n+position}; elsewhere they agree with the wall.
    const MaximalCone& lower_cone() const noexcept { return lower_; }
    MaximalCone upper_cone() const { return lower_.flipped(position_); }

    // The n-1 rays spanning the wall, ordered by slot.
    std::vector<int> ray_indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(lower_.dimension() - 1));
        for (int k = 1; k <= lower_.dimension(); ++k)
            if (k != position_) out.push_back(lower_.ray_index(k));
        return out;
    }

    friend bool operator==(const Wall&, const Wall&) = default;

private:
    MaximalCone lower_;
    int position_;
};

class BottTower {
public:
    explicit BottTower(BottNumbers numbers)
        : numbers_(std::move(numbers)), rays_(make_rays(numbers_)) {
        validate();
    }

    int dimension() const noexcept { return numbers_.height(); }
    const BottNumbers& numbers() const noexcept { return numbers_; }

    const std::vector<Ray>& rays() const noexcept { return rays_; }

    const Ray& ray(int index) const {
        if (index < 1 || index > 2 * dimension())
            throw IndexOutOfRange("ray index " + std::to_string(index));
        return rays_[static_cast<std::size_t>(index - 1)];
    }

    std::uint64_t maximal_cone_count() const { return std::uint64_t{1} << dimension(); }
    std::uint64_t wall_count() const {
        return static_cast<std::uint64_t>(dimension()) * (std::uint64_t{1} << (dimension() - 1));
    }

    MaximalCone maximal_cone(std::uint64_t bits) const { return MaximalCone(dimension(), bits); }

    std::vector<MaximalCone> maximal_cones() const {
        std::vector<MaximalCone> out;
        out.reserve(static_cast<std::size_t>(maximal_cone_count()));
        for (std::uint64_t b = 0; b < maximal_cone_count(); ++b)
            out.push_back(maximal_cone(b));
        return out;
    }

    // Rows are the cone's ray vectors, ordered by slot.
    IntMat cone_matrix(const MaximalCone& cone) const {
        if (cone.dimension() != dimension())
            throw LengthMismatch("cone of dimension " + std::to_string(cone.dimension()) +
                                 " on a tower of dimension " + std::to_string(dimension()));
        IntMat m;
        m.reserve(static_cast<std::size_t>(dimension()));
        for (int i = 1; i <= dimension(); ++i) m.push_back(ray(cone.ray_index(i)).v);
        return m;
    }

    friend bool operator==(const BottTower&, const BottTower&) = default;

private:
    static std::vector<Ray> make_rays(const BottNumbers& numbers) {
        const int n = numbers.height();
        std::vector<Ray> rays;
        rays.reserve(static_cast<std::size_t>(2 * n));
        for (int i = 1; i <= n; ++i) {
            Ray r{i, IntVec(static_cast<std::size_t>(n), Int(0))};
            r.v[static_cast<std::size_t>(i - 1)] = 1;
            rays.push_back(std::move(r));
        }
        for (int i = 1; i <= n; ++i) {
            Ray r{n + i, IntVec(static_cast<std::size_t>(n), Int(0))};
            r.v[static_cast<std::size_t>(i - 1)] = -1;
            for (int j = i + 1; j <= n; ++j)
                r.v[static_cast<std::size_t>(j - 1)] = numbers.c(i, j);
            rays.push_back(std::move(r));
        }
        return rays;
    }

    // Rays pairwise distinct and every maximal cone unimodular. Both hold for
    // arbitrary Bott data; a failure is an internal inconsistency.
    void validate() const {
        for (std::size_t i = 0; i < rays_.size(); ++i)
            for (std::size_t j = i + 1; j < rays_.size(); ++j)
                if (rays_[i].v == rays_[j].v)
                    throw NonSmoothFan("duplicate rays " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1));
        for (std::uint64_t b = 0; b < maximal_cone_count(); ++b) {
            const Int d = determinant(cone_matrix(maximal_cone(b)));
            if (d != 1 && d != -1)
                throw NonSmoothFan("maximal cone " + std::to_string(b) +
                                   " has |det| = " + d.str());
        }
    }

    BottNumbers numbers_;
    std::vector<Ray> rays_;
};

inline BottTower build_tower(BottNumbers numbers) { return BottTower(std::move(numbers)); }

// Every wall exactly once, keyed by its canonical (lower cone, slot) pair.
// Count: n * 2^(n-1).
inline std::vector<Wall> enumerate_walls(const BottTower& t) {
    std::vector<Wall> out;
    out.reserve(static_cast<std::size_t>(t.wall_count()));
    for (std::uint64_t b = 0; b < t.maximal_cone_count(); ++b)
        for (int i = 1; i <= t.dimension(); ++i)
            if (!((b >> (i - 1)) & 1u)) out.emplace_back(t.maximal_cone(b), i);
    return out;
}

// The walls of a given maximal cone (its n facets).
inline std::vector<Wall> walls_of_cone(const BottTower& t, const MaximalCone& cone) {
    if (cone.dimension() != t.dimension())
        throw LengthMismatch("cone dimension does not match tower");
    std::vector<Wall> out;
    out.reserve(static_cast<std::size_t>(t.dimension()));
    for (int i = 1; i <= t.dimension(); ++i) out.emplace_back(cone, i);
    return out;
}

// The Bott tower on stages j..i: Bott numbers {c_{k,l} : j <= k < l <= i},
// reindexed to 1..(i-j+1).
inline BottTower vertical_subtower(const BottTower& t, int j, int i) {
    const int n = t.dimension();
    if (j < 1 || i < j || i > n)
        throw IndexOutOfRange("subtower range [" + std::to_string(j) + ", " +
                              std::to_string(i) + "] with n = " + std::to_string(n));
    BottNumbers sub(i - j + 1);
    for (int k = j; k < i; ++k)
        for (int l = k + 1; l <= i; ++l) sub.set_c(k - j + 1, l - j + 1, t.numbers().c(k, l));
    return BottTower(std::move(sub));
}

}  // namespace bott
