#pragma once

// Truncated formal power series in q over an exact coefficient ring, plus the
// Pochhammer / pentagonal / bilateral-Lambert builders the rank generating
// functions are assembled from. Truncation order is explicit everywhere; all
// arithmetic is exact.

#include "durfee/ring.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace durfee {

/// Coefficients in Z.
struct IntegerRing {
    using Element = Integer;
    Element zero() const { return Integer(0); }
    Element one() const { return Integer(1); }
    bool operator==(const IntegerRing&) const { return true; }
    bool operator!=(const IntegerRing&) const { return false; }

    static bool is_unit(const Element& e) { return e == 1 || e == -1; }
    static Element unit_inverse(const Element& e) {
        if (!is_unit(e)) throw std::domain_error("integer unit must be +-1");
        return e;
    }
};

/// Coefficients in Z[w]/(w^t - 1).
struct GroupRing {
    int t = 1;
    using Element = GroupRingElement;
    Element zero() const { return GroupRingElement(t); }
    Element one() const { return GroupRingElement::monomial(t, 0); }
    bool operator==(const GroupRing& o) const { return t == o.t; }
    bool operator!=(const GroupRing& o) const { return t != o.t; }

    static bool is_unit(const Element& e) {
        int a;
        bool neg;
        return e.monomial_unit(a, neg);
    }
    static Element unit_inverse(const Element& e) {
        int a;
        bool neg;
        if (!e.monomial_unit(a, neg))
            throw std::domain_error("group ring unit must be +-w^a");
        return GroupRingElement::monomial(e.modulus(), -a, Integer(neg ? -1 : 1));
    }
};

/// A power series truncated at q^order: exactly order+1 coefficients are
/// kept. Binary operations require the same coefficient ring and truncate the
/// result at the smaller of the two orders.
template <class Ring>
class TruncatedSeries {
public:
    using Element = typename Ring::Element;

    TruncatedSeries(Ring ring, int order)
        : ring_(ring), coeffs_(checked_size(order), ring.zero()) {}

    static TruncatedSeries constant(Ring ring, int order, Element value) {
        TruncatedSeries s(ring, order);
        s.coeffs_[0] = std::move(value);
        return s;
    }
    static TruncatedSeries one(Ring ring, int order) {
        return constant(ring, order, ring.one());
    }

    const Ring& ring() const { return ring_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Element& coeff(int n) const {
        range_check(n);
        return coeffs_[static_cast<size_t>(n)];
    }
    void set_coeff(int n, Element v) {
        range_check(n);
        coeffs_[static_cast<size_t>(n)] = std::move(v);
    }
    Element& coeff_ref(int n) {
        range_check(n);
        return coeffs_[static_cast<size_t>(n)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!(c == ring_.zero())) return false;
        return true;
    }

    bool operator==(const TruncatedSeries& o) const {
        return ring_ == o.ring_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_ring(b);
        TruncatedSeries r(a.ring_, std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_ring(b);
        TruncatedSeries r(a.ring_, std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r(ring_, order());
        for (int n = 0; n <= order(); ++n) r.coeffs_[n] = -coeffs_[n];
        return r;
    }

    /// Cauchy product, truncated at min(order a, order b).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_ring(b);
        const int N = std::min(a.order(), b.order());
        TruncatedSeries r(a.ring_, N);
        const Element zero = a.ring_.zero();
        for (int i = 0; i <= N; ++i) {
            if (a.coeffs_[i] == zero) continue;
            for (int j = 0; j + i <= N; ++j) {
                if (b.coeffs_[j] == zero) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    TruncatedSeries scaled(const Element& k) const {
        TruncatedSeries r(ring_, order());
        for (int n = 0; n <= order(); ++n) r.coeffs_[n] = coeffs_[n] * k;
        return r;
    }

    /// Multiply by q^e (coefficients shifted up, order unchanged).
    TruncatedSeries shifted(int e) const {
        if (e < 0) throw std::invalid_argument("shift must be non-negative");
        TruncatedSeries r(ring_, order());
        for (int n = 0; n + e <= order(); ++n) r.coeffs_[n + e] = coeffs_[n];
        return r;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order())
            throw std::invalid_argument("cannot truncate to a larger order");
        TruncatedSeries r(ring_, new_order);
        for (int n = 0; n <= new_order; ++n) r.coeffs_[n] = coeffs_[n];
        return r;
    }

    /// this += scale * q^shift * src (src may have any order; excess is dropped).
    void accumulate(const TruncatedSeries& src, int shift = 0) {
        require_same_ring(src);
        const int upto = std::min(src.order(), order() - shift);
        for (int n = 0; n <= upto; ++n) coeffs_[n + shift] += src.coeffs_[n];
    }
    void accumulate_negated(const TruncatedSeries& src, int shift = 0) {
        require_same_ring(src);
        const int upto = std::min(src.order(), order() - shift);
        for (int n = 0; n <= upto; ++n) coeffs_[n + shift] -= src.coeffs_[n];
    }

    /// In-place multiplication by the binomial (1 - u q^e), e >= 1.
    void multiply_binomial(const Element& u, int e) {
        if (e < 1) throw std::invalid_argument("binomial exponent must be >= 1");
        for (int n = order(); n >= e; --n) coeffs_[n] -= u * coeffs_[n - e];
    }

    /// In-place division by (1 - u q^e): b[n] = c[n] + u*b[n-e]. Exact and
    /// O(order) coefficient operations; this is how every Pochhammer
    /// denominator in the generating functions is applied.
    void divide_binomial(const Element& u, int e) {
        if (e < 1) throw std::invalid_argument("binomial exponent must be >= 1");
        for (int n = e; n <= order(); ++n) coeffs_[n] += u * coeffs_[n - e];
    }

    /// Multiplicative inverse to the truncation order. The constant term must
    /// be a unit of the ring (+-1, resp. +-w^a).
    TruncatedSeries inverted() const {
        if (!Ring::is_unit(coeffs_[0]))
            throw std::domain_error("series not invertible: constant term is not a unit");
        const Element c0inv = Ring::unit_inverse(coeffs_[0]);
        TruncatedSeries b(ring_, order());
        b.coeffs_[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            Element s = ring_.zero();
            for (int i = 1; i <= n; ++i) {
                if (coeffs_[i] == ring_.zero()) continue;
                s += coeffs_[i] * b.coeffs_[n - i];
            }
            b.coeffs_[n] = -(s * c0inv);
        }
        return b;
    }

    /// Long division by `den` (constant term a unit). Skips zero divisor
    /// coefficients, so dividing by sparse series like (q)_inf is cheap.
    TruncatedSeries divided_by(const TruncatedSeries& den) const {
        require_same_ring(den);
        if (!Ring::is_unit(den.coeffs_[0]))
            throw std::domain_error("series division: denominator constant term is not a unit");
        const Element c0inv = Ring::unit_inverse(den.coeffs_[0]);
        const int N = std::min(order(), den.order());
        std::vector<int> nonzero;
        for (int i = 1; i <= N; ++i)
            if (!(den.coeffs_[i] == ring_.zero())) nonzero.push_back(i);
        TruncatedSeries b(ring_, N);
        for (int n = 0; n <= N; ++n) {
            Element s = coeffs_[n];
            for (int i : nonzero) {
                if (i > n) break;
                s -= den.coeffs_[i] * b.coeffs_[n - i];
            }
            b.coeffs_[n] = s * c0inv;
        }
        return b;
    }

private:
    static size_t checked_size(int order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        return static_cast<size_t>(order) + 1;
    }
    void range_check(int n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("series coefficient index out of range");
    }
    void require_same_ring(const TruncatedSeries& o) const {
        if (ring_ != o.ring_)
            throw std::invalid_argument("series coefficient ring mismatch");
    }

    Ring ring_;
    std::vector<Element> coeffs_;
};

using IntSeries = TruncatedSeries<IntegerRing>;
using GroupSeries = TruncatedSeries<GroupRing>;

inline constexpr std::optional<int> infinite_count = std::nullopt;

/// Pochhammer-type product over an arithmetic progression of exponents:
///   prod_{i=0}^{count-1} (1 - u q^{start + i*step}),
/// truncated at `order`. count = nullopt means infinite: factors are taken
/// while start + i*step <= order. count = 0 gives the empty product 1.
/// start = 0 contributes the q-free factor (1 - u).
template <class Ring>
TruncatedSeries<Ring> pochhammer(Ring ring, const typename Ring::Element& u,
                                 int start, std::optional<int> count, int step,
                                 int order) {
    if (start < 0) throw std::invalid_argument("pochhammer start must be >= 0");
    if (step < 1 && !count)
        throw std::invalid_argument("pochhammer with infinite count needs step >= 1");
    if (count && *count < 0) throw std::invalid_argument("pochhammer count must be >= 0");
    auto s = TruncatedSeries<Ring>::one(ring, order);
    long long e = start;
    for (int i = 0; !count || i < *count; ++i, e += step) {
        if (e > order) {
            if (!count) break;
            continue;  // factor is 1 + O(q^{order+1}): invisible at this order
        }
        if (e == 0) {
            // q-free factor (1 - u): scale the whole series.
            auto factor = TruncatedSeries<Ring>::constant(ring, 0, ring.one() - u);
            TruncatedSeries<Ring> scaled(ring, order);
            for (int n = 0; n <= order; ++n)
                scaled.set_coeff(n, s.coeff(n) * factor.coeff(0));
            s = std::move(scaled);
        } else {
            s.multiply_binomial(u, static_cast<int>(e));
        }
    }
    return s;
}

inline IntSeries pochhammer_int(int start, std::optional<int> count, int step, int order) {
    return pochhammer(IntegerRing{}, Integer(1), start, count, step, order);
}

/// Euler's pentagonal-number expansion of (q)_inf:
///   1 + sum_{n>=1} (-1)^n q^{n(3n-1)/2} (1 + q^n).
template <class Ring>
TruncatedSeries<Ring> pentagonal_series(Ring ring, int order) {
    auto s = TruncatedSeries<Ring>::one(ring, order);
    for (long long n = 1;; ++n) {
        const long long e1 = n * (3 * n - 1) / 2;
        const long long e2 = n * (3 * n + 1) / 2;
        if (e1 > order && e2 > order) break;
        const bool neg = (n % 2) != 0;
        auto bump = [&](long long e) {
            if (e > order) return;
            auto& c = s.coeff_ref(static_cast<int>(e));
            if (neg)
                c -= ring.one();
            else
                c += ring.one();
        };
        bump(e1);
        bump(e2);
    }
    return s;
}

inline IntSeries pentagonal_int(int order) {
    return pentagonal_series(IntegerRing{}, order);
}

/// Bilateral Lambert-type sum over n in Z:
///   sum sign(n) * q^{quad(n)} / (1 - q^{res(n)}),
/// with negative residue exponents normalized by
///   1/(1 - q^{-m}) = -q^m/(1 - q^m)   (m > 0),
/// the unique normalization under which the Theorem 5 sums are power series.
/// Terms with res(n) = 0 are poles and rejected. Iteration runs outward from
/// n = 0 and stops in each direction after 2 consecutive n with
/// quad(n) > order.
inline IntSeries bilateral_lambert(const std::function<long long(long long)>& quad,
                                   const std::function<long long(long long)>& res,
                                   const std::function<int(long long)>& sign,
                                   int order) {
    IntSeries out(IntegerRing{}, order);
    auto add_term = [&](long long n) -> bool {
        long long e = quad(n);
        if (e > order) return false;
        if (e < 0) throw std::invalid_argument("bilateral term with negative exponent");
        long long m = res(n);
        int sg = sign(n) >= 0 ? 1 : -1;
        if (m == 0)
            throw std::domain_error("bilateral Lambert term has a pole: residue exponent 0 at n=" +
                                    std::to_string(n));
        if (m < 0) {
            m = -m;
            e += m;
            sg = -sg;
        }
        for (long long k = e; k <= order; k += m) {
            auto& c = out.coeff_ref(static_cast<int>(k));
            if (sg > 0)
                c += 1;
            else
                c -= 1;
        }
        return true;
    };
    int misses = 0;
    for (long long n = 0; misses < 2; ++n) misses = add_term(n) ? 0 : misses + 1;
    misses = 0;
    for (long long n = -1; misses < 2; --n) misses = add_term(n) ? 0 : misses + 1;
    return out;
}

/// Reads component r of every coefficient: for the rank generating functions
/// this is exactly n |-> N(r,t;n) (resp. NF2(r,t;n)).
inline IntSeries component_series(const GroupSeries& s, int r) {
    const int t = s.ring().t;
    int rr = ((r % t) + t) % t;
    IntSeries out(IntegerRing{}, s.order());
    for (int n = 0; n <= s.order(); ++n) out.set_coeff(n, s.coeff(n).component(rr));
    return out;
}

/// Coefficientwise ring homomorphism w -> w^k.
inline GroupSeries substitute_power(const GroupSeries& s, long long k) {
    GroupSeries out(s.ring(), s.order());
    for (int n = 0; n <= s.order(); ++n) out.set_coeff(n, s.coeff(n).substituted_power(k));
    return out;
}

/// Evaluation at w = 1 (sum of components per coefficient).
inline IntSeries evaluate_at_one(const GroupSeries& s) {
    IntSeries out(IntegerRing{}, s.order());
    for (int n = 0; n <= s.order(); ++n) {
        Integer v = 0;
        for (const auto& c : s.coeff(n).components()) v += c;
        out.set_coeff(n, v);
    }
    return out;
}

/// Keeps exponents congruent to d mod t, reindexed n -> (n-d)/t.
inline IntSeries class_series(const IntSeries& s, int t, int d) {
    if (t < 1) throw std::invalid_argument("class_series modulus must be >= 1");
    if (d < 0 || d >= t) throw std::invalid_argument("class_series residue out of range");
    if (s.order() < d) return IntSeries(IntegerRing{}, 0);
    IntSeries out(IntegerRing{}, (s.order() - d) / t);
    for (int m = 0; m <= out.order(); ++m) out.set_coeff(m, s.coeff(t * m + d));
    return out;
}

// --- JSON serialization -----------------------------------------------------
// {"ring": "int" | {"group": t}, "order": N, "coeffs": [...]} with unbounded
// integers as decimal strings; group-ring coefficients as length-t arrays.

inline nlohmann::ordered_json series_to_json(const IntSeries& s) {
    nlohmann::ordered_json j;
    j["ring"] = "int";
    j["order"] = s.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(to_string(s.coeff(n)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline nlohmann::ordered_json series_to_json(const GroupSeries& s) {
    nlohmann::ordered_json j;
    j["ring"] = {{"group", s.ring().t}};
    j["order"] = s.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) {
        auto vec = nlohmann::ordered_json::array();
        for (const auto& c : s.coeff(n).components()) vec.push_back(to_string(c));
        coeffs.push_back(std::move(vec));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline IntSeries int_series_from_json(const nlohmann::json& j) {
    if (j.at("ring") != "int") throw std::invalid_argument("expected an integer-ring series");
    const auto& coeffs = j.at("coeffs");
    const int order = j.at("order").get<int>();
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("series JSON: coeffs length does not match order");
    IntSeries s(IntegerRing{}, order);
    for (int n = 0; n <= order; ++n)
        s.set_coeff(n, Integer(coeffs[static_cast<size_t>(n)].get<std::string>()));
    return s;
}

inline GroupSeries group_series_from_json(const nlohmann::json& j) {
    const auto& ring = j.at("ring");
    if (!ring.is_object() || !ring.contains("group"))
        throw std::invalid_argument("expected a group-ring series");
    const int t = ring.at("group").get<int>();
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("series JSON: coeffs length does not match order");
    GroupSeries s(GroupRing{t}, order);
    for (int n = 0; n <= order; ++n) {
        const auto& vec = coeffs[static_cast<size_t>(n)];
        if (static_cast<int>(vec.size()) != t)
            throw std::invalid_argument("series JSON: group coefficient has wrong length");
        GroupRingElement e(t);
        for (int a = 0; a < t; ++a) e.component(a) = Integer(vec[static_cast<size_t>(a)].get<std::string>());
        s.set_coeff(n, std::move(e));
    }
    return s;
}

}  // namespace durfee
