#pragma once

#include <vector>

#include "facetlab/poset.hpp"

namespace facetlab {

// Moebius function of the lattice obtained from the family by adjoining a
// bottom element and a top element. The top is either artificial (strictly
// above all members, even when the family already has a maximum) or an
// existing member S that is the family maximum.
enum class TopMode { Artificial, Member };

struct MoebiusTable {
    TopMode mode = TopMode::Artificial;
    int top_member = -1;           // index into the family when mode == Member
    long long bottom = 1;          // mu(0-hat)
    std::vector<long long> mu;     // per member, family order
    long long top = 0;             // mu(1-hat)
};

MoebiusTable moebius_table(const VertexSetFamily& F, TopMode mode, int top_member = -1);

// mu(1-hat) over the artificial-top lattice.
long long moebius_number(const VertexSetFamily& F);

// Same relation pass as moebius_table, additionally counting the nonempty
// chains of the family (saturating at cap+1). Used to budget the euler
// oracle; the oracle itself never calls this.
struct MoebiusWithChains {
    MoebiusTable table;
    long long chains = 0;   // min(actual chain count, cap + 1)
    bool capped = false;
};
MoebiusWithChains moebius_table_with_chain_count(const VertexSetFamily& F, TopMode mode,
                                                 long long chain_cap, int top_member = -1);

// Reduced Euler characteristic of the order complex, computed by plain
// depth-first chain enumeration over vertex-set subset tests. Deliberately
// shares no traversal or arithmetic with the Moebius recursion.
long long euler_oracle(const VertexSetFamily& F, long long chain_cap = Limits{}.chain_cap);

}  // namespace facetlab
