#pragma once

// Partitions, Dyson's rank, and the rank generating functions R(w;q) and
// G(w;q). Enumeration is the brute-force ground truth; the Durfee-square sum
// and 1 + G are the two independent generating-function routes it is checked
// against.

#include "durfee/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace durfee {

/// Weakly decreasing positive parts. The empty partition (of 0) is allowed;
/// its rank is defined to be 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        int prev = std::numeric_limits<int>::max();
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("partition parts must be positive");
            if (p > prev) throw std::invalid_argument("partition parts must be non-increasing");
            prev = p;
            size_ += p;
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Largest part minus number of parts; 0 for the empty partition.
inline int rank(const Partition& p) { return p.largest() - p.length(); }

inline int rank_of_parts(const std::vector<int>& parts) {
    return parts.empty() ? 0 : parts.front() - static_cast<int>(parts.size());
}

/// Ferrers-diagram transpose. rank(conjugate(p)) == -rank(p).
inline Partition conjugate_partition(const Partition& p) {
    std::vector<int> out;
    const auto& parts = p.parts();
    for (int row = 1; row <= p.largest(); ++row) {
        int len = 0;
        for (int q : parts) {
            if (q >= row)
                ++len;
            else
                break;
        }
        out.push_back(len);
    }
    return Partition(std::move(out));
}

/// Visits every partition of n exactly once in reverse lexicographic order:
/// (n), (n-1,1), ..., (1,...,1). The callback receives the in-place parts
/// vector; copy it if it must outlive the call.
template <class F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<int> a;
    if (n == 0) {
        visit(static_cast<const std::vector<int>&>(a));
        return;
    }
    a.push_back(n);
    for (;;) {
        visit(static_cast<const std::vector<int>&>(a));
        // Find the rightmost part > 1; everything after it is a run of 1s.
        int j = static_cast<int>(a.size()) - 1;
        while (j >= 0 && a[j] == 1) --j;
        if (j < 0) return;
        const int v = a[j] - 1;
        int rem = a[j] + (static_cast<int>(a.size()) - 1 - j);
        a.resize(static_cast<size_t>(j));
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        a.push_back(rem);
    }
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

/// p(0..N) by the pentagonal-number recurrence; the independent reference the
/// tables are checked against.
inline std::vector<Integer> partition_numbers(int N) {
    std::vector<Integer> p(static_cast<size_t>(N) + 1);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Integer s = 0;
        for (long long k = 1;; ++k) {
            const long long e1 = k * (3 * k - 1) / 2;
            const long long e2 = k * (3 * k + 1) / 2;
            if (e1 > n && e2 > n) break;
            const bool neg = (k % 2) == 0;
            Integer term = 0;
            if (e1 <= n) term += p[static_cast<size_t>(n - e1)];
            if (e2 <= n) term += p[static_cast<size_t>(n - e2)];
            s += neg ? -term : term;
        }
        p[static_cast<size_t>(n)] = s;
    }
    return p;
}

/// Exact rank counts N(m, n) for 0 <= n <= N by enumeration.
/// census[n][m + n] = number of partitions of n with rank exactly m
/// (ranks of partitions of n lie in [-(n-1), n-1]; row n has 2n+1 slots).
inline std::vector<std::vector<Integer>> rank_census(int N) {
    std::vector<std::vector<Integer>> census(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        census[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n) + 1, Integer(0));
        for_each_partition(n, [&](const std::vector<int>& parts) {
            census[static_cast<size_t>(n)][static_cast<size_t>(rank_of_parts(parts) + n)] += 1;
        });
    }
    return census;
}

/// R(w;q) built from the Durfee-square classification
///   sum_{n>=0} q^{n^2} / ((wq)_n (w^{-1}q)_n)
/// with w the group-ring generator mod t. Component r of coefficient n is
/// N(r,t;n). The bilateral closed form is deliberately not used here: its
/// n=0 term would divide by (1-w), a zero divisor in Z[w]/(w^t-1).
inline GroupSeries rank_gf(int t, int order) {
    GroupRing ring{t};
    const auto w = GroupRingElement::monomial(t, 1);
    const auto winv = GroupRingElement::monomial(t, -1);
    GroupSeries acc = GroupSeries::one(ring, order);
    GroupSeries inv = GroupSeries::one(ring, order);  // 1 / ((wq)_n (w^{-1}q)_n)
    for (long long n = 1; n * n <= order; ++n) {
        inv.divide_binomial(w, static_cast<int>(n));
        inv.divide_binomial(winv, static_cast<int>(n));
        acc.accumulate(inv, static_cast<int>(n * n));
    }
    return acc;
}

/// G(w;q) = (1/(q)_inf) sum_{n>=1} (-1)^{n-1} (1+q^n)(1-q^n)^2 q^{n(3n-1)/2}
///          / ((1-wq^n)(1-q^n/w)).
/// Satisfies R = 1 + G; the bilateral structure of the rank generating
/// function is exercised through this sum, whose index starts at n = 1.
inline GroupSeries G_gf(int t, int order) {
    GroupRing ring{t};
    const auto w = GroupRingElement::monomial(t, 1);
    const auto winv = GroupRingElement::monomial(t, -1);
    GroupSeries acc(ring, order);
    for (long long n = 1; n * (3 * n - 1) / 2 <= order; ++n) {
        const int e = static_cast<int>(n * (3 * n - 1) / 2);
        GroupSeries term(ring, order - e);
        // (1+q^n)(1-q^n)^2 = 1 - q^n - q^{2n} + q^{3n}
        const std::pair<long long, int> mono[] = {{0, 1}, {n, -1}, {2 * n, -1}, {3 * n, 1}};
        for (auto [off, sg] : mono) {
            if (off > term.order()) continue;
            term.coeff_ref(static_cast<int>(off)) =
                GroupRingElement::scalar(t, sg);
        }
        term.divide_binomial(w, static_cast<int>(n));
        term.divide_binomial(winv, static_cast<int>(n));
        if (n % 2 == 1)
            acc.accumulate(term, e);
        else
            acc.accumulate_negated(term, e);
    }
    return acc.divided_by(pentagonal_series(ring, order));
}

inline void check_residue(int t, int r, const char* what) {
    if (r < 0 || r >= t)
        throw std::invalid_argument(std::string(what) + " residue out of range [0, t)");
}

/// g_t(r;q) = sum_n N(r,t;n) q^n, read from a prebuilt R(w;q).
inline IntSeries g_series(const GroupSeries& R, int r) {
    check_residue(R.ring().t, r, "g_series");
    return component_series(R, r);
}
inline IntSeries g_series(int t, int r, int order) { return g_series(rank_gf(t, order), r); }

/// g_t(r,s;q) = g_t(r) - g_t(s).
inline IntSeries g_diff(const GroupSeries& R, int r, int s) {
    check_residue(R.ring().t, r, "g_diff");
    check_residue(R.ring().t, s, "g_diff");
    return component_series(R, r) - component_series(R, s);
}
inline IntSeries g_diff(int t, int r, int s, int order) {
    return g_diff(rank_gf(t, order), r, s);
}

/// g_{t,d}(r,s;q): the class-d part of g_t(r,s), reindexed n -> (n-d)/t.
inline IntSeries g_class(const GroupSeries& R, int r, int s, int d) {
    check_residue(R.ring().t, d, "g_class");
    return class_series(g_diff(R, r, s), R.ring().t, d);
}
inline IntSeries g_class(int t, int r, int s, int d, int order) {
    return g_class(rank_gf(t, order), r, s, d);
}

enum class RankProvenance { enumeration, genfun_durfee_sum, genfun_G };

inline const char* to_string(RankProvenance p) {
    switch (p) {
        case RankProvenance::enumeration: return "enumeration";
        case RankProvenance::genfun_durfee_sum: return "genfun-durfee-sum";
        case RankProvenance::genfun_G: return "genfun-G";
    }
    return "?";
}

/// counts[r][n] = N(r,t;n) for 0 <= r < t, 0 <= n <= max_n.
struct RankTable {
    int t = 1;
    int max_n = 0;
    RankProvenance provenance = RankProvenance::enumeration;
    std::vector<std::vector<Integer>> counts;

    const Integer& at(int r, int n) const {
        return counts[static_cast<size_t>(((r % t) + t) % t)][static_cast<size_t>(n)];
    }

    bool same_counts(const RankTable& o) const { return t == o.t && counts == o.counts; }

    static RankTable enumeration(int t, int max_n) {
        if (t < 1) throw std::invalid_argument("rank table modulus must be >= 1");
        RankTable table{t, max_n, RankProvenance::enumeration, {}};
        table.counts.assign(static_cast<size_t>(t),
                            std::vector<Integer>(static_cast<size_t>(max_n) + 1, Integer(0)));
        for (int n = 0; n <= max_n; ++n) {
            for_each_partition(n, [&](const std::vector<int>& parts) {
                int r = rank_of_parts(parts) % t;
                if (r < 0) r += t;
                table.counts[static_cast<size_t>(r)][static_cast<size_t>(n)] += 1;
            });
        }
        return table;
    }

    static RankTable from_series(const GroupSeries& R, RankProvenance prov) {
        const int t = R.ring().t;
        RankTable table{t, R.order(), prov, {}};
        table.counts.assign(static_cast<size_t>(t),
                            std::vector<Integer>(static_cast<size_t>(R.order()) + 1));
        for (int n = 0; n <= R.order(); ++n)
            for (int r = 0; r < t; ++r)
                table.counts[static_cast<size_t>(r)][static_cast<size_t>(n)] =
                    R.coeff(n).component(r);
        return table;
    }

    /// CSV: header `t,n,r,count`, one row per (n, r), counts as decimal strings.
    void write_csv(std::ostream& os) const {
        os << "t,n,r,count\n";
        for (int n = 0; n <= max_n; ++n)
            for (int r = 0; r < t; ++r)
                os << t << "," << n << "," << r << ","
                   << to_string(counts[static_cast<size_t>(r)][static_cast<size_t>(n)]) << "\n";
    }
};

}  // namespace durfee
