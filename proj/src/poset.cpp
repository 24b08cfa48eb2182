#include "facetlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace facetlab {

std::optional<int> VertexSetFamily::index_of(const Bits& member) const {
    auto it = std::lower_bound(members.begin(), members.end(), member, Bits::canon_less);
    if (it != members.end() && *it == member) return int(it - members.begin());
    return std::nullopt;
}

// Worklist closure: seed with the distinct rows, repeatedly intersect new
// members with every row, keep nonempty results. Pairwise intersection with
// the generators reaches every intersection of a nonempty row subset.
VertexSetFamily vertex_set_closure(const IncidenceMatrix& A, size_t member_cap) {
    std::unordered_map<Bits, int, BitsHash> seen;
    std::vector<Bits> out;
    auto push = [&](const Bits& s) {
        if (seen.find(s) != seen.end()) return;  // no copy on the common duplicate path
        if (out.size() >= member_cap)
            throw Error(Errc::ResourceLimit,
                        "closure family exceeds " + std::to_string(member_cap) + " members");
        seen.emplace(s, int(out.size()));
        out.push_back(s);
    };

    for (const Bits& row : A.rows) push(row);
    Bits scratch(A.n);
    for (size_t head = 0; head < out.size(); ++head) {
        Bits s = out[head];  // copy: out may reallocate
        for (const Bits& row : A.rows) {
            Bits::and_into(scratch, s, row);
            if (scratch.any()) push(scratch);
        }
    }

    std::sort(out.begin(), out.end(), Bits::canon_less);

    VertexSetFamily F;
    F.n = A.n;
    F.m = A.m;
    F.members = std::move(out);
    F.supports.reserve(F.members.size());
    F.origin_rows.reserve(F.members.size());
    std::unordered_map<Bits, bool, BitsHash> row_set;
    for (const Bits& row : A.rows) row_set.emplace(row, true);
    for (const Bits& s : F.members) {
        Bits supp(A.m);
        for (int f = 0; f < A.m; ++f)
            if (s.subset_of(A.rows[size_t(f)])) supp.set(f);
        F.supports.push_back(std::move(supp));
        F.origin_rows.push_back(row_set.count(s) > 0);
    }
    return F;
}

ChainWitness longest_chain(const VertexSetFamily& F) {
    const size_t N = F.members.size();
    ChainWitness w;
    if (N == 0) return w;

    // canonical order is a linear extension, so a DP over supports works:
    // S_i < S_j  <=>  supp_i > supp_j
    std::vector<int> len(N, 1), parent(N, -1);
    const bool one_word = F.supports[0].words().size() == 1;
    std::vector<uint64_t> sw;
    if (one_word) {
        sw.resize(N);
        for (size_t i = 0; i < N; ++i) sw[i] = F.supports[i].words()[0];
    }
    int best = 0;
    for (size_t j = 0; j < N; ++j) {
        for (size_t i = 0; i < j; ++i) {
            bool below = one_word ? ((sw[i] | sw[j]) == sw[i] && sw[i] != sw[j])
                                  : F.supports[j].proper_subset_of(F.supports[i]);
            if (below && len[i] + 1 > len[j]) {
                len[j] = len[i] + 1;
                parent[j] = int(i);
            }
        }
        if (len[j] > len[best]) best = int(j);
    }
    w.size = len[size_t(best)];
    for (int at = best; at >= 0; at = parent[size_t(at)]) w.chain.push_back(F.members[size_t(at)]);
    std::reverse(w.chain.begin(), w.chain.end());
    return w;
}

VertexSetFamily sub_family_below(const VertexSetFamily& F, const Bits& S) {
    auto idx = F.index_of(S);
    if (!idx) throw Error(Errc::NotAMember, "set is not a member of the family");
    VertexSetFamily G;
    G.n = F.n;
    G.m = F.m;
    const Bits& supp_s = F.supports[size_t(*idx)];
    for (size_t i = 0; i < F.members.size(); ++i) {
        // T subset of S  <=>  supp(T) superset of supp(S)
        if (supp_s.subset_of(F.supports[i])) {
            G.members.push_back(F.members[i]);
            G.supports.push_back(F.supports[i]);
            G.origin_rows.push_back(F.origin_rows[i]);
        }
    }
    return G;
}

}  // namespace facetlab
