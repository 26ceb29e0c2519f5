#include "iso/quadfield.hpp"

#include <stdexcept>
#include <string>

namespace iso {

bool mpq_is_square(const mpq_class& x) {
    if (x < 0) return false;
    return mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(x.get_den().get_mpz_t());
}

std::optional<mpq_class> mpq_sqrt_exact(const mpq_class& x) {
    if (!mpq_is_square(x)) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    return mpq_class(n, d);
}

QuadFieldElem::QuadFieldElem(mpq_class ra, mpq_class rb, long long d)
    : a(std::move(ra)), b(std::move(rb)), D(d) {
    if (D == 0) throw std::domain_error("QuadFieldElem: D must be nonzero");
    a.canonicalize();
    b.canonicalize();
    if (D == 1 && b != 0) {  // sqrt(1) = 1
        a += b;
        b = 0;
    }
}

bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
    return x.a == y.a && x.b == y.b && (x.b == 0 || x.D == y.D);
}

namespace {

long long common_field(const QuadFieldElem& x, const QuadFieldElem& y) {
    if (x.D == 1) return y.D;
    if (y.D == 1 || y.D == x.D) return x.D;
    throw std::domain_error("QuadFieldElem: mixing different quadratic fields");
}

} // namespace

QuadFieldElem qf_conj(const QuadFieldElem& x) {
    return QuadFieldElem(x.a, -x.b, x.D);
}

mpq_class qf_norm(const QuadFieldElem& x) {
    mpq_class n = x.a * x.a - x.b * x.b * mpq_class((long)x.D);
    n.canonicalize();
    return n;
}

mpq_class qf_trace(const QuadFieldElem& x) { return 2 * x.a; }

QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) {
    return QuadFieldElem(x.a + y.a, x.b + y.b, common_field(x, y));
}

QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) {
    return QuadFieldElem(x.a - y.a, x.b - y.b, common_field(x, y));
}

QuadFieldElem operator-(const QuadFieldElem& x) {
    return QuadFieldElem(-x.a, -x.b, x.D);
}

QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) {
    long long d = common_field(x, y);
    mpq_class dq((long)d);
    return QuadFieldElem(x.a * y.a + x.b * y.b * dq, x.a * y.b + x.b * y.a, d);
}

QuadFieldElem operator/(const QuadFieldElem& x, const QuadFieldElem& y) {
    if (y.is_zero()) throw std::domain_error("QuadFieldElem: division by zero");
    mpq_class n = qf_norm(y);
    QuadFieldElem num = x * qf_conj(y);
    return QuadFieldElem(num.a / n, num.b / n, common_field(x, y));
}

bool qf_is_square(const QuadFieldElem& x) { return qf_sqrt(x).has_value(); }

std::optional<QuadFieldElem> qf_sqrt(const QuadFieldElem& x) {
    if (x.is_zero()) return QuadFieldElem(0);
    if (x.b == 0) {
        if (auto r = mpq_sqrt_exact(x.a)) return QuadFieldElem(*r);
        if (x.D != 1) {
            // a = (q sqrt(D))^2 with q rational
            if (auto q = mpq_sqrt_exact(x.a / mpq_class((long)x.D)))
                return QuadFieldElem(0, *q, x.D);
        }
        return std::nullopt;
    }
    // (p + q sqrt(D))^2 = x forces p^2 - D q^2 = +-sqrt(norm(x)).
    auto t = mpq_sqrt_exact(qf_norm(x));
    if (!t) return std::nullopt;
    for (int sign : {1, -1}) {
        mpq_class p2 = (x.a + sign * *t) / 2;
        p2.canonicalize();
        auto p = mpq_sqrt_exact(p2);
        if (!p || *p == 0) continue;
        mpq_class q = x.b / (2 * *p);
        q.canonicalize();
        QuadFieldElem cand(*p, q, x.D);
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

std::string qf_str(const QuadFieldElem& x) {
    if (x.b == 0) return x.a.get_str();
    std::string s = x.a == 0 ? std::string() : x.a.get_str();
    if (x.b > 0 && !s.empty()) s += "+";
    if (x.b == -1)
        s += "-";
    else if (x.b != 1)
        s += x.b.get_str() + "*";
    s += "sqrt(" + std::to_string(x.D) + ")";
    return s;
}

} // namespace iso
