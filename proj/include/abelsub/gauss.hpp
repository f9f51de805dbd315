#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace abelsub {

// Exact complex number with rational real and imaginary parts.
class GaussScalar {
public:
    GaussScalar() = default;
    GaussScalar(long v) : re_(v) {}  // NOLINT: integers convert implicitly
    GaussScalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussScalar ratio(long num, long den) { return GaussScalar(mpq_class(num, den)); }
    static GaussScalar i() { return GaussScalar(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussScalar conj() const { return GaussScalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussScalar& operator+=(const GaussScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussScalar& operator-=(const GaussScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussScalar& operator*=(const GaussScalar& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    // Throws std::domain_error on division by zero.
    GaussScalar& operator/=(const GaussScalar& o);

    friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
    friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
    friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
    friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
    GaussScalar operator-() const { return GaussScalar(-re_, -im_); }

    friend bool operator==(const GaussScalar& a, const GaussScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    // Lexicographic on (re, im); an ordering for containers, not a field order.
    friend std::strong_ordering operator<=>(const GaussScalar& a, const GaussScalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c == 0) c = cmp(a.im_, b.im_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    // Canonical text: "3/5", "-4/5 i", "1/2+1/3 i", "1/2-1/3 i", "0".
    std::string to_string() const;
    // Accepts the canonical text and minor variants ("i", "-i", "2 + 3i",
    // "0+1/2 i"). Throws ParseError.
    static GaussScalar parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace abelsub
