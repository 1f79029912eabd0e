#include "autoflow/bell.hpp"

#include <algorithm>

namespace autoflow {

namespace {

/// Partitions of n into exactly k nonincreasing parts >= 1, enumerated with
/// an explicit worklist (no recursion depth limits).
std::vector<std::vector<int>> part_lists(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 1)
        return out;
    struct Frame {
        int remaining;
        int slots;
        int max_part;
        std::vector<int> prefix;
    };
    std::vector<Frame> work;
    work.push_back({n, k, n, {}});
    while (!work.empty()) {
        Frame f = std::move(work.back());
        work.pop_back();
        if (f.slots == 0) {
            if (f.remaining == 0)
                out.push_back(std::move(f.prefix));
            continue;
        }
        // next part v bounded so the remaining slots can still sum to n
        int hi = std::min(f.max_part, f.remaining - (f.slots - 1));
        for (int v = 1; v <= hi; ++v) {
            if (static_cast<long>(v) * f.slots < f.remaining)
                continue;
            Frame g{f.remaining - v, f.slots - 1, v, f.prefix};
            g.prefix.push_back(v);
            work.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace

std::vector<Partition> partitions(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw BadRange("partitions: need 1 <= k <= n");
    std::vector<Partition> out;
    for (const auto &parts : part_lists(n, k)) {
        Partition p;
        p.n = n;
        p.mult.assign(static_cast<size_t>(n), 0);
        for (int part : parts)
            p.mult[static_cast<size_t>(part - 1)] += 1;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Partition &x, const Partition &y) {
        return x.mult > y.mult; // descending lexicographic in (j_1, ..., j_n)
    });
    return out;
}

BigInt partition_weight(const Partition &p) {
    BigInt denom = 1;
    for (int h = 1; h <= p.n; ++h) {
        int j = p.mult[static_cast<size_t>(h - 1)];
        if (j == 0)
            continue;
        denom *= factorial(j);
        BigInt hf = factorial(h);
        for (int c = 0; c < j; ++c)
            denom *= hf;
    }
    BigInt num = factorial(p.n);
    if (num % denom != 0)
        throw Error("partition_weight: non-integer multinomial");
    return num / denom;
}

Value partial_bell(const Ring &ring, int n, int k, std::span<const Value> b) {
    return partial_bell_generic<Value>(n, k, b, ValueOps{ring});
}

Value partial_bell_rec(const Ring &ring, int n, int k, std::span<const Value> b) {
    return partial_bell_rec_generic<Value>(n, k, b, ValueOps{ring});
}

Value complete_bell(const Ring &ring, int n, std::span<const Value> b,
                    std::span<const Value> a) {
    return complete_bell_generic<Value>(n, b, a, ValueOps{ring});
}

} // namespace autoflow
