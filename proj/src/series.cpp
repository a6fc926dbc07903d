#include "frobcy/series.hpp"

#include "frobcy/errors.hpp"

#include <algorithm>

namespace frobcy {

QSeries::QSeries(long low, long prec, std::vector<mpq_class> c) : low_(low), prec_(prec), c_(std::move(c))
{
    c_.resize(static_cast<std::size_t>(std::max(0L, prec_ - low_)), mpq_class(0));
}

QSeries QSeries::from_power_series(const std::vector<mpq_class>& c)
{
    return {0, static_cast<long>(c.size()), c};
}

QSeries QSeries::from_rational(const RationalFunction& f, long prec)
{
    const auto& den = f.den().coeffs();
    long shift = 0;
    while (static_cast<std::size_t>(shift) < den.size() && den[shift] == 0)
        ++shift;
    const long len = prec + shift;
    if (len <= 0)
        return {-shift, prec, {}};
    // num / (den / z^shift) as a power series, then divide by z^shift.
    std::vector<mpq_class> d(den.begin() + shift, den.end());
    const auto& num = f.num().coeffs();
    std::vector<mpq_class> out(len, mpq_class(0));
    mpq_class inv = mpq_class(1) / d[0];
    for (long k = 0; k < len; ++k) {
        mpq_class acc = static_cast<std::size_t>(k) < num.size() ? num[k] : mpq_class(0);
        for (long i = 1; i < static_cast<long>(d.size()) && i <= k; ++i)
            acc -= d[i] * out[k - i];
        out[k] = acc * inv;
    }
    return {-shift, prec, std::move(out)};
}

mpq_class QSeries::operator[](long k) const
{
    if (k < low_)
        return 0;
    if (k >= prec_)
        throw PrecisionExhausted("series coefficient beyond known precision");
    return c_[k - low_];
}

QSeries QSeries::operator+(const QSeries& o) const
{
    long low = std::min(low_, o.low_);
    long prec = std::min(prec_, o.prec_);
    std::vector<mpq_class> c(std::max(0L, prec - low), mpq_class(0));
    for (long k = low; k < prec; ++k)
        c[k - low] = (*this)[k] + o[k];
    return {low, prec, std::move(c)};
}

QSeries QSeries::operator-(const QSeries& o) const
{
    return *this + (-o);
}

QSeries QSeries::operator*(const QSeries& o) const
{
    long low = low_ + o.low_;
    long prec = std::min(low_ + o.prec_, o.low_ + prec_);
    std::vector<mpq_class> c(std::max(0L, prec - low), mpq_class(0));
    mpq_class t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            long k = low_ + static_cast<long>(i) + o.low_ + static_cast<long>(j);
            if (k >= prec)
                break;
            t = c_[i] * o.c_[j];
            c[k - low] += t;
        }
    }
    return {low, prec, std::move(c)};
}

QSeries QSeries::operator*(const mpq_class& k) const
{
    QSeries out = *this;
    for (auto& c : out.c_)
        c *= k;
    return out;
}

QSeries QSeries::derivative() const
{
    std::vector<mpq_class> c(c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i] = c_[i] * (low_ + static_cast<long>(i));
    // The z^low term becomes z^(low-1); drop the vanishing z^-1 coefficient of a constant.
    return {low_ - 1, prec_ - 1, std::move(c)};
}

bool QSeries::vanishes_below(long upto) const
{
    if (prec_ < upto)
        throw PrecisionExhausted("series known only below z^" + std::to_string(prec_));
    for (long k = low_; k < upto; ++k)
        if (c_[k - low_] != 0)
            return false;
    return true;
}

}  // namespace frobcy
