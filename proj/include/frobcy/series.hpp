#pragma once

#include "frobcy/polyrat.hpp"

#include <gmpxx.h>

#include <vector>

namespace frobcy {

// Truncated Laurent series over Q: sum_{k=low}^{prec-1} c[k-low] z^k + O(z^prec).
class QSeries {
public:
    QSeries() = default;
    QSeries(long low, long prec, std::vector<mpq_class> c);

    static QSeries from_power_series(const std::vector<mpq_class>& c);
    // Expansion of f at z = 0 up to O(z^prec).
    static QSeries from_rational(const RationalFunction& f, long prec);

    long low() const { return low_; }
    long prec() const { return prec_; }
    mpq_class operator[](long k) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const mpq_class& k) const;
    QSeries operator-() const { return *this * mpq_class(-1); }
    QSeries derivative() const;

    // True when every known coefficient below z^upto vanishes.
    bool vanishes_below(long upto) const;

private:
    long low_ = 0;
    long prec_ = 0;
    std::vector<mpq_class> c_;
};

}  // namespace frobcy
