#include "weight.hpp"

#include "error.hpp"

namespace sw {

Weight Weight::unit(size_t dim, size_t i) {
    Weight w = zero(dim);
    w[i] = Rat(1);
    return w;
}

static void check_dims(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim()) fail(Code::internal, "weight dimension mismatch");
}

Weight Weight::operator+(const Weight& o) const {
    check_dims(*this, o);
    Weight r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    check_dims(*this, o);
    Weight r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Weight Weight::operator*(const Rat& s) const {
    Weight r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Weight& Weight::operator+=(const Weight& o) {
    check_dims(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    check_dims(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

bool Weight::operator<(const Weight& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = 0; i < c_.size(); ++i) {
        int cmp = mpq_cmp(c_[i].get_mpq_t(), o.c_[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

bool Weight::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Rat Weight::coord_sum() const {
    Rat s(0);
    for (const auto& x : c_) s += x;
    return s;
}

std::string Weight::str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += rat_str(c_[i]);
    }
    return s;
}

Weight operator*(const Rat& s, const Weight& w) { return w * s; }

}  // namespace sw
