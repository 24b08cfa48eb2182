#include "facetlab/moebius.hpp"

#include <algorithm>

namespace facetlab {

namespace {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_saddll_overflow(a, b, &r))
        throw Error(Errc::Overflow, "Moebius value overflows 64-bit integer");
    return r;
}

// mu(X) = -(mu(bottom) + sum over members strictly below X). Canonical order
// is a linear extension (cardinality is strictly monotone along inclusion),
// so a single forward pass finalizes every value before it is used. Subset
// tests run on the row supports: S_i < S_j  <=>  supp_i > supp_j, one word
// for matrices with at most 64 facets.
template <bool WithChains>
MoebiusTable mu_pass(const VertexSetFamily& F, TopMode mode, int top_member,
                     long long chain_cap, long long* chains_out, bool* capped_out) {
    const size_t N = F.members.size();
    MoebiusTable t;
    t.mode = mode;
    t.bottom = 1;
    t.mu.assign(N, 0);

    if (mode == TopMode::Member) {
        if (top_member < 0 || size_t(top_member) >= N)
            throw Error(Errc::NotAMember, "top member index out of range");
        const Bits& supp_top = F.supports[size_t(top_member)];
        for (size_t i = 0; i < N; ++i)
            if (!supp_top.subset_of(F.supports[i]))
                throw Error(Errc::NotMaximum, "member is not the family maximum");
        t.top_member = top_member;
    }

    const bool one_word = N > 0 && F.supports[0].words().size() == 1;
    std::vector<uint64_t> sw;
    if (one_word) {
        sw.resize(N);
        for (size_t i = 0; i < N; ++i) sw[i] = F.supports[i].words()[0];
    }

    // members of equal cardinality are incomparable; the inner loop only has
    // to scan the strictly smaller levels
    std::vector<size_t> level_start(N, 0);
    for (size_t j = 1; j < N; ++j)
        level_start[j] = (F.members[j].count() == F.members[j - 1].count()) ? level_start[j - 1]
                                                                            : j;

    std::vector<long long> g;  // chains ending at member i (saturating)
    long long total_chains = 0;
    const long long sat = WithChains ? chain_cap + 1 : 0;
    if (WithChains) g.assign(N, 0);

    for (size_t j = 0; j < N; ++j) {
        long long acc = 1;  // the bottom element
        long long gj = 1;
        const size_t lim = level_start[j];
        // across levels distinct members have distinct supports, so a plain
        // superset test is already proper
        if (one_word) {
            const uint64_t sj = sw[j];
            for (size_t i = 0; i < lim; ++i) {
                const uint64_t si = sw[i];
                if ((si | sj) == si) {
                    acc = checked_add(acc, t.mu[i]);
                    if (WithChains) gj = std::min(sat, gj + g[i]);
                }
            }
        } else {
            for (size_t i = 0; i < lim; ++i) {
                if (F.supports[j].subset_of(F.supports[i])) {
                    acc = checked_add(acc, t.mu[i]);
                    if (WithChains) gj = std::min(sat, gj + g[i]);
                }
            }
        }
        t.mu[j] = checked_add(0, -acc);
        if (WithChains) {
            g[j] = gj;
            total_chains = std::min(sat, total_chains + gj);
        }
    }

    if (mode == TopMode::Artificial) {
        long long acc = 1;
        for (size_t j = 0; j < N; ++j) acc = checked_add(acc, t.mu[j]);
        t.top = -acc;
    } else {
        t.top = t.mu[size_t(top_member)];
    }

    if (WithChains) {
        *chains_out = total_chains;
        *capped_out = total_chains > chain_cap;
    }
    return t;
}

}  // namespace

MoebiusTable moebius_table(const VertexSetFamily& F, TopMode mode, int top_member) {
    return mu_pass<false>(F, mode, top_member, 0, nullptr, nullptr);
}

MoebiusWithChains moebius_table_with_chain_count(const VertexSetFamily& F, TopMode mode,
                                                 long long chain_cap, int top_member) {
    MoebiusWithChains r;
    r.table = mu_pass<true>(F, mode, top_member, chain_cap, &r.chains, &r.capped);
    return r;
}

long long moebius_number(const VertexSetFamily& F) {
    return moebius_table(F, TopMode::Artificial).top;
}

// Independent chain enumeration: explicit successor lists from vertex-set
// subset tests, then depth-first extension counting each chain once with
// sign (-1)^(size-1); chi = -1 + signed count (the empty chain is f_{-1}).
long long euler_oracle(const VertexSetFamily& F, long long chain_cap) {
    const size_t N = F.members.size();
    std::vector<int> cnt(N);
    for (size_t i = 0; i < N; ++i) cnt[i] = F.members[i].count();
    std::vector<std::vector<int>> succ(N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j)
            if (cnt[i] < cnt[j] && F.members[i].subset_of(F.members[j]))
                succ[i].push_back(int(j));

    long long chains = 0;
    long long signed_sum = 0;

    // iterative DFS; depth is bounded by the longest chain
    struct Frame {
        int node;
        size_t next_child;
    };
    std::vector<Frame> stack;
    for (size_t start = 0; start < N; ++start) {
        stack.clear();
        stack.push_back({int(start), 0});
        if (++chains > chain_cap)
            throw Error(Errc::ResourceLimit,
                        "chain count exceeds " + std::to_string(chain_cap));
        signed_sum += 1;  // chain of one element
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_child < succ[size_t(f.node)].size()) {
                int child = succ[size_t(f.node)][f.next_child++];
                if (++chains > chain_cap)
                    throw Error(Errc::ResourceLimit,
                                "chain count exceeds " + std::to_string(chain_cap));
                size_t k = stack.size() + 1;  // elements in the new chain
                signed_sum += (k % 2 == 1) ? 1 : -1;
                stack.push_back({child, 0});
            } else {
                stack.pop_back();
            }
        }
    }
    return -1 + signed_sum;
}

}  // namespace facetlab
