#include "dsrg/params.hpp"

#include <cmath>
#include <sstream>

namespace dsrg {

std::string ParameterSet::str() const {
    std::ostringstream os;
    os << '(' << n << ',' << k << ',' << t << ',' << lambda << ',' << mu << ')';
    return os.str();
}

ParameterKind parameter_kind(const ParameterSet& p) {
    if (p.k < 1 || p.k >= p.n) return ParameterKind::Degenerate;
    if (p.t == p.k) return ParameterKind::Srg;
    if (p.t == 0) return ParameterKind::Tournament;
    return ParameterKind::ProperDsrg;
}

std::optional<std::int64_t> perfect_sqrt(std::int64_t x) {
    if (x < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    for (std::int64_t c = r > 1 ? r - 2 : 0; c <= r + 2; ++c)
        if (c * c == x) return c;
    return std::nullopt;
}

namespace {

std::string i64s(std::int64_t x) { return std::to_string(x); }

}  // namespace

FeasibilityReport feasibility_check(const ParameterSet& p) {
    FeasibilityReport rep;
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.conditions.push_back({std::move(name), ok, std::move(detail)});
    };

    const std::int64_t n = p.n, k = p.k, t = p.t, l = p.lambda, m = p.mu;

    bool ranges = n >= 1 && k >= 0 && t >= 0 && l >= 0 && m >= 0;
    add("nonnegative", ranges, ranges ? "" : "negative parameter");

    // k(k+mu-lambda) = t + (n-1)mu
    std::int64_t lhs = checked_mul(k, k + m - l);
    std::int64_t rhs = checked_add(t, checked_mul(n - 1, m));
    add("k(k+mu-lambda)=t+(n-1)mu", lhs == rhs, i64s(lhs) + " vs " + i64s(rhs));

    // positive integer d with d^2 = (mu-lambda)^2 + 4(t-mu)
    std::int64_t disc = checked_add(checked_mul(m - l, m - l), 4 * (t - m));
    std::optional<std::int64_t> d = perfect_sqrt(disc);
    bool d_ok = d.has_value() && *d > 0;
    add("d^2=(mu-lambda)^2+4(t-mu), d>0", d_ok,
        d_ok ? "d=" + i64s(*d) : "discriminant " + i64s(disc));
    if (d_ok) rep.d = *d;

    std::int64_t num = checked_add(checked_mul(2, k), -checked_mul(m - l, n - 1));
    if (d_ok) {
        bool div_ok = num % *d == 0;
        add("d | 2k-(mu-lambda)(n-1)", div_ok, i64s(num) + " / " + i64s(*d));
        if (div_ok) {
            std::int64_t s = num / *d;
            rep.s = s;
            bool parity = ((n - 1) - s) % 2 == 0;
            add("n-1 = s (mod 2)", parity, "s=" + i64s(s));
            bool mag = n - 1 >= std::abs(s);
            add("n-1 >= |s|", mag, "s=" + i64s(s));
        } else {
            add("n-1 = s (mod 2)", false, "s undefined");
            add("n-1 >= |s|", false, "s undefined");
        }
    } else {
        add("d | 2k-(mu-lambda)(n-1)", false, "d undefined");
        add("n-1 = s (mod 2)", false, "d undefined");
        add("n-1 >= |s|", false, "d undefined");
    }

    // Inequality block; the t<k comparisons are suspended for SRG input
    // (t=k) since the paper joins undirected SRGs freely.
    bool srg = t == k && k >= 1;
    if (srg) {
        add("0<=lambda<k, 0<mu<=k [SRG: t=k block suspended]",
            l >= 0 && l < k && m > 0 && m <= k, "");
    } else {
        add("0<=lambda<t<k", l >= 0 && l < t && t < k, "");
        add("0<mu<=t<k", m > 0 && m <= t && t < k, "");
        bool band = m - l >= -2 * (k - t - 1) && m - l <= 2 * (k - t);
        add("-2(k-t-1)<=mu-lambda<=2(k-t)", band, "");
    }

    rep.feasible = true;
    for (const auto& c : rep.conditions) rep.feasible = rep.feasible && c.satisfied;
    return rep;
}

Spectrum spectrum(const ParameterSet& p) {
    std::int64_t disc = checked_add(checked_mul(p.mu - p.lambda, p.mu - p.lambda),
                                    4 * (p.t - p.mu));
    std::optional<std::int64_t> d = perfect_sqrt(disc);
    if (!d || *d <= 0)
        fail("spectrum: discriminant " + std::to_string(disc) +
             " is not a positive perfect square for " + p.str());
    std::int64_t diff = p.lambda - p.mu;
    if ((diff + *d) % 2 != 0) fail("spectrum: non-integer eigenvalues for " + p.str());

    Spectrum s;
    s.theta0 = p.k;
    s.theta1 = (diff + *d) / 2;
    s.theta2 = (diff - *d) / 2;

    // m1+m2 = n-1 and k + m1*theta1 + m2*theta2 = 0
    std::int64_t num = -(p.k + checked_mul(s.theta2, p.n - 1));
    std::int64_t den = s.theta1 - s.theta2;
    if (num % den != 0) fail("spectrum: non-integral multiplicity for " + p.str());
    s.m1 = num / den;
    s.m2 = p.n - 1 - s.m1;
    if (s.m1 <= 0 || s.m2 <= 0)
        fail("spectrum: non-positive multiplicity for " + p.str());
    return s;
}

ParameterSet complement_params(const ParameterSet& p) {
    ParameterSet c;
    c.n = p.n;
    c.k = p.n - p.k - 1;
    c.t = p.n - 2 * p.k + p.t - 1;
    c.lambda = p.n - 2 * p.k + p.mu - 2;
    c.mu = p.n - 2 * p.k + p.lambda;
    if (c.k < 0 || c.t < 0 || c.lambda < 0 || c.mu < 0)
        fail("complement parameters of " + p.str() + " are negative: " + c.str());
    return c;
}

ParameterSet pi_join_params(const ParameterSet& p, std::int64_t a, std::int64_t b,
                            std::int64_t j) {
    if (a < 1 || b < 1 || checked_mul(a, b) != p.n)
        fail("pi_join_params: ab != n for " + p.str() + " with a=" + std::to_string(a) +
             ", b=" + std::to_string(b));
    if (j < 1) fail("pi_join_params: j must be >= 1");
    ParameterSet out;
    out.n = checked_mul(checked_add(checked_mul(j, a), 1), p.n);
    out.k = checked_add(checked_mul(j, p.n), p.k);
    out.t = checked_add(checked_mul(j, b), p.t);
    out.lambda = checked_add(checked_mul(j, b), p.lambda);
    out.mu = checked_add(checked_mul(j, b), p.mu);
    return out;
}

}  // namespace dsrg
