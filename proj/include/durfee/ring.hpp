#pragma once

// Exact coefficient arithmetic: unbounded integers and the group ring
// Z[w]/(w^t - 1). Everything downstream (series, tables, verifiers) sits on
// these two types; both are immutable value types with pure operations.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace durfee {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

/// An element of Z[w]/(w^t - 1), stored dense: component(a) is the
/// coefficient of w^a. Exponents add modulo t, so multiplication is the
/// cyclic convolution of component vectors. Evaluating a series with these
/// coefficients reads off all t-th-root-of-unity specializations at once.
class GroupRingElement {
public:
    explicit GroupRingElement(int modulus)
        : t_(checked_modulus(modulus)), comp_(static_cast<size_t>(t_)) {}

    static GroupRingElement monomial(int modulus, long long exponent,
                                     Integer coeff = Integer(1)) {
        GroupRingElement e(modulus);
        e.comp_[e.reduce(exponent)] = std::move(coeff);
        return e;
    }

    static GroupRingElement scalar(int modulus, Integer value) {
        return monomial(modulus, 0, std::move(value));
    }

    int modulus() const { return t_; }

    /// Component with the exponent reduced mod t.
    const Integer& component(long long exponent) const {
        return comp_[reduce(exponent)];
    }
    Integer& component(long long exponent) { return comp_[reduce(exponent)]; }

    const std::vector<Integer>& components() const { return comp_; }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (c != 0) return false;
        return true;
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        require_same_modulus(o);
        for (int a = 0; a < t_; ++a) comp_[a] += o.comp_[a];
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        require_same_modulus(o);
        for (int a = 0; a < t_; ++a) comp_[a] -= o.comp_[a];
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) {
        x += y;
        return x;
    }
    friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y) {
        x -= y;
        return x;
    }
    GroupRingElement operator-() const {
        GroupRingElement r(t_);
        for (int a = 0; a < t_; ++a) r.comp_[a] = -comp_[a];
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
        x.require_same_modulus(y);
        const int t = x.t_;
        // Monomial fast path; series code multiplies by w^a constantly.
        int nx = x.nonzero_count();
        int ny = y.nonzero_count();
        if (ny < nx) return y * x;
        GroupRingElement r(t);
        if (nx == 0) return r;
        for (int a = 0; a < t; ++a) {
            if (x.comp_[a] == 0) continue;
            for (int b = 0; b < t; ++b) {
                if (y.comp_[b] == 0) continue;
                int c = a + b;
                if (c >= t) c -= t;
                r.comp_[c] += x.comp_[a] * y.comp_[b];
            }
        }
        return r;
    }
    GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }

    GroupRingElement& operator*=(const Integer& k) {
        for (auto& c : comp_) c *= k;
        return *this;
    }
    friend GroupRingElement operator*(GroupRingElement x, const Integer& k) {
        x *= k;
        return x;
    }

    bool operator==(const GroupRingElement& o) const {
        return t_ == o.t_ && comp_ == o.comp_;
    }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    /// w -> w^{-1}: component a of the result is component (-a mod t).
    GroupRingElement conjugated() const {
        GroupRingElement r(t_);
        for (int a = 0; a < t_; ++a) r.comp_[reduce(-a)] = comp_[a];
        return r;
    }

    /// w -> w^k: component (k*a mod t) of the result accumulates component a.
    /// A ring homomorphism for every k; k = 2 realizes R(zeta^{2j}) from
    /// R(zeta^j) in one pass.
    GroupRingElement substituted_power(long long k) const {
        GroupRingElement r(t_);
        for (int a = 0; a < t_; ++a) {
            if (comp_[a] == 0) continue;
            r.comp_[reduce(k * a)] += comp_[a];
        }
        return r;
    }

    /// this += sign * w^shift * x, without temporaries. Hot path of every
    /// series division by (1 - w^a q^e).
    void accumulate_rotated(const GroupRingElement& x, int shift, int sign = 1) {
        require_same_modulus(x);
        int s = static_cast<int>(reduce(shift));
        for (int a = 0; a < t_; ++a) {
            int b = a + s;
            if (b >= t_) b -= t_;
            if (sign >= 0)
                comp_[b] += x.comp_[a];
            else
                comp_[b] -= x.comp_[a];
        }
    }

    /// True iff the element is +-w^a; reports a and the sign. These are
    /// exactly the units a truncated series may be inverted at.
    bool monomial_unit(int& exponent, bool& negative) const {
        int found = -1;
        for (int a = 0; a < t_; ++a) {
            if (comp_[a] == 0) continue;
            if (found >= 0) return false;
            if (comp_[a] != 1 && comp_[a] != -1) return false;
            found = a;
        }
        if (found < 0) return false;
        exponent = found;
        negative = comp_[found] < 0;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GroupRingElement& e) {
        bool first = true;
        for (int a = 0; a < e.t_; ++a) {
            const Integer& c = e.comp_[a];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Integer m = abs(c);
            if (m != 1 || a == 0) os << m.str();
            if (a > 0) {
                if (m != 1) os << "*";
                os << "w";
                if (a > 1) os << "^" << a;
            }
            first = false;
        }
        if (first) os << "0";
        return os;
    }

private:
    static int checked_modulus(int t) {
        if (t < 1) throw std::invalid_argument("group ring modulus must be >= 1");
        return t;
    }
    size_t reduce(long long a) const {
        long long m = a % t_;
        if (m < 0) m += t_;
        return static_cast<size_t>(m);
    }
    void require_same_modulus(const GroupRingElement& o) const {
        if (t_ != o.t_)
            throw std::invalid_argument("group ring modulus mismatch: " +
                                        std::to_string(t_) + " vs " +
                                        std::to_string(o.t_));
    }
    int nonzero_count() const {
        int n = 0;
        for (const auto& c : comp_)
            if (c != 0) ++n;
        return n;
    }

    int t_;
    std::vector<Integer> comp_;
};

/// The exact form of 1/(1-zeta) used by Proposition 3.1's proof, with the
/// division by t cleared:
///   (1 - w) * sum_{m=0}^{t-1} (t-1-m) w^m  ==  t*1 - sum_{m=0}^{t-1} w^m
/// in Z[w]/(w^t - 1). Both sides are returned so tests can inspect them.
struct OneMinusWInverseIdentity {
    GroupRingElement lhs;
    GroupRingElement rhs;
    bool holds() const { return lhs == rhs; }
};

inline OneMinusWInverseIdentity one_minus_w_inverse_identity(int t) {
    if (t < 2) throw std::invalid_argument("one_minus_w_inverse_identity needs t >= 2");
    GroupRingElement weights(t);
    for (int m = 0; m < t; ++m) weights.component(m) = t - 1 - m;
    GroupRingElement one_minus_w =
        GroupRingElement::monomial(t, 0) - GroupRingElement::monomial(t, 1);
    GroupRingElement rhs = GroupRingElement::scalar(t, t);
    for (int m = 0; m < t; ++m) rhs.component(m) -= 1;
    return {one_minus_w * weights, rhs};
}

}  // namespace durfee
