#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rational.hpp"

namespace sw {

// A vector of exact rationals in the (eps_1..eps_m, delta_1..delta_n) basis
// of the ambient weight space. Weights of quotient spaces (sl, psl, sp) are
// kept in canonical form by SuperRootSystem::canonical(); Weight itself is
// coordinate data with exact arithmetic.
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<Rat> coords) : c_(std::move(coords)) {}
    static Weight zero(size_t dim) { return Weight(std::vector<Rat>(dim, Rat(0))); }
    static Weight unit(size_t dim, size_t i);

    size_t dim() const { return c_.size(); }
    const Rat& operator[](size_t i) const { return c_[i]; }
    Rat& operator[](size_t i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(const Rat& s) const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);

    bool operator==(const Weight& o) const { return c_ == o.c_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    // Lexicographic order on coordinates; used for canonical orderings and
    // as the key order of weight-indexed maps.
    bool operator<(const Weight& o) const;

    bool is_zero() const;
    Rat coord_sum() const;

    std::string str() const;  // plain comma-separated, no block separator

  private:
    std::vector<Rat> c_;
};

Weight operator*(const Rat& s, const Weight& w);

}  // namespace sw
