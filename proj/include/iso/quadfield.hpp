#pragma once

#include <gmpxx.h>

#include <optional>

namespace iso {

bool mpq_is_square(const mpq_class& x);
// Exact square root of a nonnegative rational square, nullopt otherwise.
std::optional<mpq_class> mpq_sqrt_exact(const mpq_class& x);

// a + b*sqrt(D) in Q(sqrt(D)) for squarefree D.  D = 1 marks a plain
// rational; other values keep tagging the ambient field even when b = 0,
// so square tests know which field they run in.  Rationals (D = 1 or
// b = 0) mix freely with any quadratic field.
struct QuadFieldElem {
    mpq_class a, b;
    long long D = 1;

    QuadFieldElem() = default;
    QuadFieldElem(long v) : a(v) {}       // NOLINT(google-explicit-constructor)
    QuadFieldElem(int v) : a(v) {}        // NOLINT(google-explicit-constructor)
    QuadFieldElem(mpq_class v) : a(std::move(v)) {}  // NOLINT
    QuadFieldElem(mpq_class ra, mpq_class rb, long long d);

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
};

// The field tag is compared only where it matters, i.e. when an
// irrational part is present.
bool operator==(const QuadFieldElem& x, const QuadFieldElem& y);
inline bool operator!=(const QuadFieldElem& x, const QuadFieldElem& y) {
    return !(x == y);
}

QuadFieldElem qf_conj(const QuadFieldElem& x);
mpq_class qf_norm(const QuadFieldElem& x);
mpq_class qf_trace(const QuadFieldElem& x);

QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator-(const QuadFieldElem& x);
QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator/(const QuadFieldElem& x, const QuadFieldElem& y);

bool qf_is_square(const QuadFieldElem& x);
std::optional<QuadFieldElem> qf_sqrt(const QuadFieldElem& x);

std::string qf_str(const QuadFieldElem& x);

} // namespace iso
