#pragma once

#include <algorithm>
#include <complex>
#include <limits>

namespace ringhelm::detail {

// Neumaier compensated sum.
template <class R>
struct CompensatedSum {
    R sum{0};
    R comp{0};

    void add(const R& x)
    {
        using std::abs;
        R t = sum + x;
        if (abs(sum) >= abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    R value() const { return sum + comp; }
};

// Compensated complex accumulator with the truncation rule shared by all
// series: stop once `window` consecutive terms (or term groups) fall below
// rel_tol * |partial sum|.
template <class R>
class SeriesAccumulator {
public:
    SeriesAccumulator(double rel_tol, int window)
        : tol_(rel_tol), window_(window) {}

    void add(const std::complex<R>& t)
    {
        using std::abs;
        re_.add(t.real());
        im_.add(t.imag());
        abs_sum_ += abs(t.real()) + abs(t.imag());
    }

    // Stopping bookkeeping for one term or group of magnitude `mag`. A term
    // counts as small only if it stays small after the geometric tail factor
    // 1/(1-q), q the latest ratio of successive magnitudes.
    void step(const R& raw)
    {
        ++count_;
        R mag = raw;
        if (prev_ > 0 && raw < prev_) mag = raw / (1 - raw / prev_);
        prev_ = raw;
        if (mag > R(tol_) * magnitude()) {
            last_significant_ = count_;
            run_ = 0;
            tail_ = R(0);
        } else {
            ++run_;
            tail_ = std::max(tail_, mag);
        }
    }

    void push(const std::complex<R>& t)
    {
        using std::abs;
        add(t);
        step(abs(t.real()) + abs(t.imag()));
    }

    bool done() const { return run_ >= window_; }
    int count() const { return count_; }
    int terms_used() const { return last_significant_; }
    std::complex<R> value() const { return {re_.value(), im_.value()}; }
    R magnitude() const
    {
        using std::abs;
        return abs(re_.value()) + abs(im_.value());
    }
    R abs_sum() const { return abs_sum_; }
    R tail() const { return tail_; }

    // Truncation tail plus an accumulated-rounding bound for unit roundoff eps;
    // recurrence-generated terms carry errors growing like sqrt(count).
    R error_estimate(const R& eps) const
    {
        using std::sqrt;
        return tail_ + eps * abs_sum_ * sqrt(R(std::max(count_, 1)));
    }

private:
    double tol_;
    int window_;
    CompensatedSum<R> re_, im_;
    R abs_sum_{0};
    R tail_{0};
    R prev_{0};
    int count_ = 0;
    int run_ = 0;
    int last_significant_ = 0;
};

}  // namespace ringhelm::detail
