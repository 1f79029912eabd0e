#pragma once

#include <optional>
#include <span>
#include <vector>

#include "autoflow/rings.hpp"

namespace autoflow {

/// A partition of n described by part multiplicities: mult[h-1] copies of
/// part h, with sum h*mult[h-1] = n. length() is the number of parts.
struct Partition {
    int n = 0;
    std::vector<int> mult; // size n
    int length() const {
        int l = 0;
        for (int j : mult)
            l += j;
        return l;
    }
};

/// All partitions of n with exactly k parts, each exactly once, ordered
/// lexicographically descending in (mult[0], ..., mult[n-1]).
std::vector<Partition> partitions(int n, int k);

/// n! / (prod_h mult_h! * prod_h (h!)^{mult_h}); always an integer.
BigInt partition_weight(const Partition &p);

// ---------------------------------------------------------------------------
// Generic Bell machinery. The recursions below are carrier-agnostic: they run
// over ring elements or over truncated series, so the same algorithm serves
// the pointwise operator, the series-mode cross-checks, and the flow tower.
// An Ops object supplies:
//     C add(const C&, const C&)
//     C mul(const C&, const C&)
//     C scale_int(const C&, const BigInt&)
// ---------------------------------------------------------------------------

/// Partial Bell polynomial B_{n,k}(b_1..b_n) by partition enumeration.
template <class C, class Ops>
C partial_bell_generic(int n, int k, std::span<const C> b, const Ops &ops) {
    if (n < 1 || k < 1 || k > n)
        throw BadRange("partial_bell: need 1 <= k <= n");
    if (static_cast<int>(b.size()) < n)
        throw BadRange("partial_bell: need n arguments");
    std::optional<C> acc;
    for (const Partition &p : partitions(n, k)) {
        std::optional<C> term;
        for (int h = 1; h <= n; ++h) {
            for (int j = 0; j < p.mult[static_cast<size_t>(h - 1)]; ++j) {
                const C &factor = b[static_cast<size_t>(h - 1)];
                term = term ? ops.mul(*term, factor) : factor;
            }
        }
        C weighted = ops.scale_int(*term, partition_weight(p));
        acc = acc ? ops.add(*acc, weighted) : weighted;
    }
    return *acc;
}

/// Same value through the recurrence
/// B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) b_i B_{n-i,k-1}, B_{0,0} = 1.
/// Kept independent of the partition route for cross-validation.
template <class C, class Ops>
C partial_bell_rec_generic(int n, int k, std::span<const C> b, const Ops &ops) {
    if (n < 1 || k < 1 || k > n)
        throw BadRange("partial_bell_rec: need 1 <= k <= n");
    if (static_cast<int>(b.size()) < n)
        throw BadRange("partial_bell_rec: need n arguments");
    // table[m][j] = B_{m,j}; absent entry means zero
    std::vector<std::vector<std::optional<C>>> table(
        static_cast<size_t>(n) + 1,
        std::vector<std::optional<C>>(static_cast<size_t>(k) + 1));
    for (int m = 1; m <= n; ++m) {
        for (int j = 1; j <= std::min(m, k); ++j) {
            std::optional<C> acc;
            for (int i = 1; i <= m - j + 1; ++i) {
                BigInt w = binomial(m - 1, i - 1);
                std::optional<C> contrib;
                if (m - i == 0 && j - 1 == 0) {
                    contrib = ops.scale_int(b[static_cast<size_t>(i - 1)], w);
                } else if (table[static_cast<size_t>(m - i)][static_cast<size_t>(j - 1)]) {
                    C prod = ops.mul(b[static_cast<size_t>(i - 1)],
                                     *table[static_cast<size_t>(m - i)][static_cast<size_t>(j - 1)]);
                    contrib = ops.scale_int(prod, w);
                }
                if (contrib)
                    acc = acc ? ops.add(*acc, *contrib) : *contrib;
            }
            table[static_cast<size_t>(m)][static_cast<size_t>(j)] = acc;
        }
    }
    auto &result = table[static_cast<size_t>(n)][static_cast<size_t>(k)];
    if (!result)
        throw Error("partial_bell_rec: empty accumulation");
    return *result;
}

/// Complete Bell polynomial Y_n(b_1..b_n; a_1..a_n) = sum_k B_{n,k}(b) a_k.
template <class C, class Ops>
C complete_bell_generic(int n, std::span<const C> b, std::span<const C> a,
                        const Ops &ops) {
    if (n < 1)
        throw BadRange("complete_bell: need n >= 1");
    if (static_cast<int>(b.size()) < n || static_cast<int>(a.size()) < n)
        throw BadRange("complete_bell: need n arguments");
    std::optional<C> acc;
    for (int k = 1; k <= n; ++k) {
        C term = ops.mul(partial_bell_generic<C>(n, k, b, ops),
                         a[static_cast<size_t>(k - 1)]);
        acc = acc ? ops.add(*acc, term) : term;
    }
    return *acc;
}

/// The autonomous recursion over any carrier:
///     A_1 = x_0,  A_{n+1} = Y_n(A_1..A_n; x_1..x_n).
/// Returns (A_1, ..., A_L) with L = x.size().
template <class C, class Ops>
std::vector<C> autonomous_terms_generic(std::span<const C> x, const Ops &ops) {
    if (x.empty())
        throw EmptyInput("autonomous operator needs a nonempty sequence");
    std::vector<C> terms;
    terms.reserve(x.size());
    terms.push_back(x[0]);
    for (size_t n = 1; n < x.size(); ++n) {
        terms.push_back(complete_bell_generic<C>(
            static_cast<int>(n), std::span<const C>(terms),
            std::span<const C>(x.subspan(1)), ops));
    }
    return terms;
}

/// Carrier ops for plain ring values.
struct ValueOps {
    Ring ring;
    Value add(const Value &x, const Value &y) const { return ring.add(x, y); }
    Value mul(const Value &x, const Value &y) const { return ring.mul(x, y); }
    Value scale_int(const Value &x, const BigInt &m) const {
        return ring.mul(x, ring.from_int(m));
    }
};

Value partial_bell(const Ring &ring, int n, int k, std::span<const Value> b);
Value partial_bell_rec(const Ring &ring, int n, int k, std::span<const Value> b);
Value complete_bell(const Ring &ring, int n, std::span<const Value> b,
                    std::span<const Value> a);

} // namespace autoflow
