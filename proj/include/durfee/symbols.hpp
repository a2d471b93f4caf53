#pragma once

// Durfee symbols and 2-marked Durfee symbols as first-class objects:
// the partition bijection, validity per the three defining conditions,
// exhaustive enumeration (the oracle for every NF2 count), the full rank,
// and conjugation.

#include "durfee/partitions.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace durfee {

/// Side d plus the column lengths right of the Durfee square (top row) and
/// the row lengths below it (bottom row), all entries in [1, d]. side = 0
/// encodes the empty partition.
struct DurfeeSymbol {
    int side = 0;
    std::vector<int> top;
    std::vector<int> bottom;

    int size() const {
        int s = side * side;
        for (int a : top) s += a;
        for (int b : bottom) s += b;
        return s;
    }
    bool operator==(const DurfeeSymbol& o) const {
        return side == o.side && top == o.top && bottom == o.bottom;
    }
};

inline DurfeeSymbol partition_to_durfee(const Partition& p) {
    const auto& parts = p.parts();
    int d = 0;
    while (d < p.length() && parts[static_cast<size_t>(d)] >= d + 1) ++d;
    DurfeeSymbol s;
    s.side = d;
    for (int col = d + 1; col <= p.largest(); ++col) {
        int len = 0;
        for (int i = 0; i < d; ++i)
            if (parts[static_cast<size_t>(i)] >= col) ++len;
        s.top.push_back(len);
    }
    for (int i = d; i < p.length(); ++i) s.bottom.push_back(parts[static_cast<size_t>(i)]);
    return s;
}

inline Partition durfee_to_partition(const DurfeeSymbol& s) {
    std::vector<int> parts;
    for (int row = 1; row <= s.side; ++row) {
        int len = s.side;
        for (int a : s.top)
            if (a >= row) ++len;
        parts.push_back(len);
    }
    for (int b : s.bottom) parts.push_back(b);
    return Partition(std::move(parts));
}

/// A 2-marked Durfee symbol in canonical storage: each row is split into its
/// subscript-2 part list followed by its subscript-1 part list, each
/// non-increasing. Condition (1) (parts and subscripts non-increasing along
/// each row) then holds by construction once the interval conditions do.
struct MarkedDurfeeSymbol2 {
    int side = 0;
    std::vector<int> top2, top1;
    std::vector<int> bottom2, bottom1;

    int size() const {
        int s = side * side;
        for (int a : top2) s += a;
        for (int a : top1) s += a;
        for (int b : bottom2) s += b;
        for (int b : bottom1) s += b;
        return s;
    }

    bool operator==(const MarkedDurfeeSymbol2& o) const {
        return side == o.side && top2 == o.top2 && top1 == o.top1 &&
               bottom2 == o.bottom2 && bottom1 == o.bottom1;
    }
    bool operator<(const MarkedDurfeeSymbol2& o) const {
        auto key = [](const MarkedDurfeeSymbol2& s) {
            return std::tie(s.side, s.top2, s.top1, s.bottom2, s.bottom1);
        };
        return key(*this) < key(o);
    }

    /// Paper's 2-row matrix notation, e.g. `(3_2 1_1 / 2_1)_3`.
    std::string str() const {
        std::string out = "(";
        auto row = [&](const std::vector<int>& two, const std::vector<int>& one) {
            bool first = true;
            for (int a : two) {
                if (!first) out += " ";
                out += std::to_string(a) + "_2";
                first = false;
            }
            for (int a : one) {
                if (!first) out += " ";
                out += std::to_string(a) + "_1";
                first = false;
            }
        };
        row(top2, top1);
        out += " / ";
        row(bottom2, bottom1);
        out += ")_" + std::to_string(side);
        return out;
    }
};

struct SymbolValidation {
    bool valid = true;
    std::string violation;  // names the first violated condition when !valid
};

/// Checks the k=2 instance of the three defining conditions:
///  (1) parts and subscripts non-increasing along each row,
///  (2) subscript 1 occurs in the top row,
///  (3) with M the largest subscript-1 part of the top row: bottom-row
///      subscript-1 parts lie in [1, M]; subscript-2 parts (either row) lie
///      in [M, d]. All intervals are inclusive at both endpoints.
inline SymbolValidation validate(const MarkedDurfeeSymbol2& s) {
    auto fail = [](std::string why) { return SymbolValidation{false, std::move(why)}; };
    if (s.side < 1) return fail("side must be a positive integer");
    auto non_increasing = [](const std::vector<int>& v) {
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] > v[i - 1]) return false;
        return true;
    };
    for (const auto* row : {&s.top2, &s.top1, &s.bottom2, &s.bottom1}) {
        if (!non_increasing(*row)) return fail("condition 1: parts not non-increasing");
        for (int a : *row)
            if (a < 1 || a > s.side) return fail("part outside [1, side]");
    }
    if (s.top1.empty()) return fail("condition 2: subscript 1 missing from top row");
    const int M = s.top1.front();
    for (int a : s.top1)
        if (a > M) return fail("condition 1: parts not non-increasing");
    for (int a : s.top2)
        if (a < M) return fail("condition 1: top-row parts not non-increasing across subscripts");
    for (int b : s.bottom1)
        if (b > M) return fail("condition 3: bottom subscript-1 part above M");
    for (int b : s.bottom2)
        if (b < M) return fail("condition 3: bottom subscript-2 part below M");
    return {};
}

inline int first_rank(const MarkedDurfeeSymbol2& s) {
    return static_cast<int>(s.top1.size()) - static_cast<int>(s.bottom1.size()) - 1;
}
inline int second_rank(const MarkedDurfeeSymbol2& s) {
    return static_cast<int>(s.top2.size()) - static_cast<int>(s.bottom2.size());
}

/// rho_1 + 2 rho_2, with rho_1 = tau_1 - beta_1 - 1 and rho_2 = tau_2 - beta_2.
inline int full_rank(const MarkedDurfeeSymbol2& s) {
    auto v = validate(s);
    if (!v.valid) throw std::domain_error("full_rank of invalid symbol: " + v.violation);
    return first_rank(s) + 2 * second_rank(s);
}

/// Conjugation: subscript-2 parts swap rows wholesale; the largest
/// subscript-1 part stays in the top row while the remaining subscript-1
/// parts swap rows. Negates (rho_1, rho_2); an involution.
inline MarkedDurfeeSymbol2 conjugate(const MarkedDurfeeSymbol2& s) {
    auto v = validate(s);
    if (!v.valid) throw std::domain_error("conjugate of invalid symbol: " + v.violation);
    MarkedDurfeeSymbol2 out;
    out.side = s.side;
    out.top2 = s.bottom2;
    out.bottom2 = s.top2;
    out.top1.push_back(s.top1.front());
    for (int b : s.bottom1) out.top1.push_back(b);
    out.bottom1.assign(s.top1.begin() + 1, s.top1.end());
    return out;
}

namespace detail {

/// Non-increasing lists with parts in [lo, hi] summing to s.
inline std::vector<std::vector<int>> bounded_partition_lists(int s, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (s == 0) {
        out.emplace_back();
        return out;
    }
    if (lo > hi || s < lo) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int cap) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int first = std::min(cap, rem); first >= lo; --first) {
            if (rem - first != 0 && rem - first < lo) continue;
            cur.push_back(first);
            self(self, rem - first, first);
            cur.pop_back();
        }
    };
    rec(rec, s, hi);
    return out;
}

}  // namespace detail

/// Visits every valid 2-marked Durfee symbol of size n exactly once, in a
/// fixed deterministic order (side ascending, then M, then row contents).
/// Sizes 0 and 1 admit no symbol.
template <class F>
void for_each_marked_symbol(int n, F&& visit) {
    MarkedDurfeeSymbol2 sym;
    for (int d = 1; d * d <= n; ++d) {
        sym.side = d;
        const int rem = n - d * d;
        for (int M = 1; M <= d && M <= rem; ++M) {
            for (int s_t1 = M; s_t1 <= rem; ++s_t1) {
                // top1 = [M] + non-increasing tail with parts in [1, M]
                for (auto& t1rest : detail::bounded_partition_lists(s_t1 - M, 1, M)) {
                    sym.top1.assign(1, M);
                    sym.top1.insert(sym.top1.end(), t1rest.begin(), t1rest.end());
                    const int rem1 = rem - s_t1;
                    for (int s_t2 = 0; s_t2 <= rem1; ++s_t2) {
                        for (auto& t2 : detail::bounded_partition_lists(s_t2, M, d)) {
                            sym.top2 = t2;
                            const int rem2 = rem1 - s_t2;
                            for (int s_b1 = 0; s_b1 <= rem2; ++s_b1) {
                                for (auto& b1 : detail::bounded_partition_lists(s_b1, 1, M)) {
                                    sym.bottom1 = b1;
                                    for (auto& b2 :
                                         detail::bounded_partition_lists(rem2 - s_b1, M, d)) {
                                        sym.bottom2 = b2;
                                        visit(static_cast<const MarkedDurfeeSymbol2&>(sym));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

inline std::vector<MarkedDurfeeSymbol2> all_marked_symbols(int n) {
    std::vector<MarkedDurfeeSymbol2> out;
    for_each_marked_symbol(n, [&](const MarkedDurfeeSymbol2& s) { out.push_back(s); });
    return out;
}

/// Exact full-rank counts NF2(m; n) by enumeration.
/// census[n][m + 2n] = number of symbols of size n with full rank exactly m
/// (full ranks of size-n symbols lie within [-2n, 2n]).
inline std::vector<std::vector<Integer>> full_rank_census(int N) {
    std::vector<std::vector<Integer>> census(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        census[static_cast<size_t>(n)].assign(static_cast<size_t>(4 * n) + 1, Integer(0));
        for_each_marked_symbol(n, [&](const MarkedDurfeeSymbol2& s) {
            const int m = first_rank(s) + 2 * second_rank(s);
            census[static_cast<size_t>(n)][static_cast<size_t>(m + 2 * n)] += 1;
        });
    }
    return census;
}

/// NF2(m; n) for 0 <= n <= N at a fixed exact (un-reduced) full rank m.
inline std::vector<Integer> nf2_exact(int m, int N) {
    auto census = full_rank_census(N);
    std::vector<Integer> out(static_cast<size_t>(N) + 1, Integer(0));
    for (int n = 0; n <= N; ++n) {
        const int idx = m + 2 * n;
        if (idx >= 0 && idx < static_cast<int>(census[static_cast<size_t>(n)].size()))
            out[static_cast<size_t>(n)] = census[static_cast<size_t>(n)][static_cast<size_t>(idx)];
    }
    return out;
}

enum class FullRankProvenance { enumeration, double_sum, lambert };

inline const char* to_string(FullRankProvenance p) {
    switch (p) {
        case FullRankProvenance::enumeration: return "enumeration";
        case FullRankProvenance::double_sum: return "R2-double-sum";
        case FullRankProvenance::lambert: return "R2-lambert";
    }
    return "?";
}

/// counts[r][n] = NF2(r,t;n). NF2(r,t;0) = 0 for every r: the generating
/// function R2 has no constant term, so size 0 contributes nothing.
struct FullRankTable {
    int t = 1;
    int max_n = 0;
    FullRankProvenance provenance = FullRankProvenance::enumeration;
    std::vector<std::vector<Integer>> counts;

    const Integer& at(int r, int n) const {
        return counts[static_cast<size_t>(((r % t) + t) % t)][static_cast<size_t>(n)];
    }
    bool same_counts(const FullRankTable& o) const { return t == o.t && counts == o.counts; }

    static FullRankTable enumeration(int t, int max_n) {
        if (t < 1) throw std::invalid_argument("full rank table modulus must be >= 1");
        FullRankTable table{t, max_n, FullRankProvenance::enumeration, {}};
        table.counts.assign(static_cast<size_t>(t),
                            std::vector<Integer>(static_cast<size_t>(max_n) + 1, Integer(0)));
        for (int n = 0; n <= max_n; ++n) {
            for_each_marked_symbol(n, [&](const MarkedDurfeeSymbol2& s) {
                int r = (first_rank(s) + 2 * second_rank(s)) % t;
                if (r < 0) r += t;
                table.counts[static_cast<size_t>(r)][static_cast<size_t>(n)] += 1;
            });
        }
        return table;
    }

    static FullRankTable from_series(const GroupSeries& R2, FullRankProvenance prov) {
        const int t = R2.ring().t;
        FullRankTable table{t, R2.order(), prov, {}};
        table.counts.assign(static_cast<size_t>(t),
                            std::vector<Integer>(static_cast<size_t>(R2.order()) + 1));
        for (int n = 0; n <= R2.order(); ++n)
            for (int r = 0; r < t; ++r)
                table.counts[static_cast<size_t>(r)][static_cast<size_t>(n)] =
                    R2.coeff(n).component(r);
        return table;
    }

    void write_csv(std::ostream& os) const {
        os << "t,n,r,count\n";
        for (int n = 0; n <= max_n; ++n)
            for (int r = 0; r < t; ++r)
                os << t << "," << n << "," << r << ","
                   << to_string(counts[static_cast<size_t>(r)][static_cast<size_t>(n)]) << "\n";
    }
};

}  // namespace durfee
