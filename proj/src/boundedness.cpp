#include "facetlab/boundedness.hpp"

namespace facetlab {

namespace {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_saddll_overflow(a, b, &r))
        throw Error(Errc::Overflow, "Moebius value overflows 64-bit integer");
    return r;
}

}  // namespace

BoundedVerdict is_bounded(const VertexSetFamily& F) {
    long long mu = moebius_number(F);
    return {mu != 0, mu};
}

BoundedVerdict is_bounded(const IncidenceMatrix& A, size_t member_cap) {
    return is_bounded(vertex_set_closure(A, member_cap));
}

// The interval below row f is exactly the members whose support contains f;
// the Moebius recursion runs on those indices in place using the supports for
// the order tests. The row plays the role of the trivial face of F unless
// some other facet contains it; then F cap F' is a nontrivial face with
// vertex set S and an artificial top is required.
bool facet_bounded(const IncidenceMatrix& A, const VertexSetFamily& F, int f) {
    if (f < 0 || f >= A.m)
        throw Error(Errc::OutOfRange, "facet " + std::to_string(f) + " out of range");

    std::vector<int> idx;
    for (size_t i = 0; i < F.members.size(); ++i)
        if (F.supports[i].test(f)) idx.push_back(int(i));
    const size_t K = idx.size();
    // idx.back() is the row itself: rows are members and the interval maximum
    bool other_contains = F.supports[size_t(idx.back())].count() > 1;

    const bool one_word = F.supports[0].words().size() == 1;
    std::vector<long long> mu(K);
    std::vector<uint64_t> sw;
    if (one_word) {
        sw.resize(K);
        for (size_t k = 0; k < K; ++k) sw[k] = F.supports[size_t(idx[k])].words()[0];
    }
    for (size_t jj = 0; jj < K; ++jj) {
        long long acc = 1;
        if (one_word) {
            const uint64_t sj = sw[jj];
            for (size_t ii = 0; ii < jj; ++ii)
                if ((sw[ii] | sj) == sw[ii]) acc = checked_add(acc, mu[ii]);
        } else {
            for (size_t ii = 0; ii < jj; ++ii)
                if (F.supports[size_t(idx[jj])].subset_of(F.supports[size_t(idx[ii])]))
                    acc = checked_add(acc, mu[ii]);
        }
        mu[jj] = -acc;
    }

    long long top;
    if (other_contains) {
        long long acc = 1;
        for (long long v : mu) acc = checked_add(acc, v);
        top = -acc;
    } else {
        top = mu[K - 1];
    }
    return top != 0;
}

bool facet_bounded(const IncidenceMatrix& A, int f, size_t member_cap) {
    return facet_bounded(A, vertex_set_closure(A, member_cap), f);
}

std::vector<bool> facets_bounded(const IncidenceMatrix& A, const VertexSetFamily& F) {
    std::vector<bool> out(size_t(A.m));
    for (int f = 0; f < A.m; ++f) out[size_t(f)] = facet_bounded(A, F, f);
    return out;
}

Dim3 detect_dim3(const IncidenceMatrix& A, const VertexSetFamily& F) {
    if (A.n == 1) {
        // cone: three facets force d = 3, more are ambiguous
        return A.m == 3 ? Dim3::Three : Dim3::ConeAmbiguous;
    }
    for (const Bits& s : F.members) {
        int c = s.count();
        if (c > 2) break;  // canonical order: cardinality ascending
        if (c == 2) {
            int in = facets_containing(A, s).count();
            return in == 2 ? Dim3::Three : Dim3::AtLeastFour;
        }
    }
    throw Error(Errc::NoEdgeFound, "no 2-element closure member; input is not a d>=3 polyhedron");
}

Dim3 detect_dim3(const IncidenceMatrix& A, size_t member_cap) {
    return detect_dim3(A, vertex_set_closure(A, member_cap));
}

std::optional<int> dimension_from_bounded_facet(const IncidenceMatrix& A,
                                                const VertexSetFamily& F) {
    bool any = false;
    for (int f = 0; f < A.m && !any; ++f) any = facet_bounded(A, F, f);
    if (!any) return std::nullopt;
    return longest_chain(F).size;
}

std::optional<int> dimension_from_bounded_facet(const IncidenceMatrix& A, size_t member_cap) {
    return dimension_from_bounded_facet(A, vertex_set_closure(A, member_cap));
}

BoundednessReport boundedness_report(const IncidenceMatrix& A, const Limits& limits) {
    VertexSetFamily F = vertex_set_closure(A, limits.member_cap);
    BoundednessReport rep;
    BoundedVerdict v = is_bounded(F);
    rep.bounded = v.bounded;
    rep.mobius = v.mobius;
    rep.facet_bounded = facets_bounded(A, F);
    if (A.n > 2 || (A.n == 1 && A.m >= 3)) {
        try {
            rep.dim3 = detect_dim3(A, F);
        } catch (const Error& e) {
            if (e.kind != Errc::NoEdgeFound) throw;  // malformed d>=3 input: leave absent
        }
    }
    bool any = false;
    for (bool b : rep.facet_bounded) any = any || b;
    if (any) rep.dim_from_bounded_facet = longest_chain(F).size;
    return rep;
}

}  // namespace facetlab
