#include "facetlab/incidence.hpp"

#include <json.hpp>

#include <sstream>

#include "facetlab/graph.hpp"
#include "facetlab/poset.hpp"

namespace facetlab {

IncidenceMatrix IncidenceMatrix::from_rows(int n_cols, std::vector<Bits> rows) {
    if (n_cols < 1) throw Error(Errc::Parse, "vertex count must be at least 1");
    if (rows.empty()) throw Error(Errc::Parse, "facet count must be at least 1");
    for (size_t f = 0; f < rows.size(); ++f) {
        if (rows[f].universe() != n_cols)
            throw Error(Errc::Parse, "row " + std::to_string(f) + " has wrong width");
        if (rows[f].none())
            throw Error(Errc::EmptyFacet,
                        "facet " + std::to_string(f) + " contains no vertex");
    }
    IncidenceMatrix A;
    A.m = int(rows.size());
    A.n = n_cols;
    A.rows = std::move(rows);
    return A;
}

Bits IncidenceMatrix::column(int v) const {
    Bits c(m);
    for (int f = 0; f < m; ++f)
        if (rows[f].test(v)) c.set(f);
    return c;
}

namespace {

// comment = first non-space character is '#'; blank = no non-space at all
bool is_comment_or_blank(const std::string& line, bool* blank) {
    for (char c : line) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        *blank = false;
        return c == '#';
    }
    *blank = true;
    return false;
}

}  // namespace

IncidenceMatrix parse_incidence(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long lineno = 0;
    long m = -1, n = -1;
    std::vector<Bits> rows;
    long next_row = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = false;
        if (is_comment_or_blank(line, &blank)) continue;
        if (blank) {
            if (m < 0) continue;  // leading blank lines before the header
            throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": blank line inside matrix");
        }
        if (m < 0) {
            std::istringstream hs(line);
            std::string extra;
            if (!(hs >> m >> n) || (hs >> extra))
                throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": header must be 'm n'");
            if (m < 1 || n < 1)
                throw Error(Errc::Parse,
                            "line " + std::to_string(lineno) + ": m and n must be at least 1");
            rows.reserve(size_t(m));
            continue;
        }
        if (next_row >= m)
            throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": more than m rows");
        if (long(line.size()) != n)
            throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": expected " +
                                         std::to_string(n) + " characters, got " +
                                         std::to_string(line.size()));
        Bits row{int(n)};
        for (long v = 0; v < n; ++v) {
            char c = line[size_t(v)];
            if (c == '1')
                row.set(int(v));
            else if (c != '0')
                throw Error(Errc::Parse, "line " + std::to_string(lineno) +
                                             ": character '" + std::string(1, c) +
                                             "' is not 0 or 1");
        }
        if (row.none())
            throw Error(Errc::EmptyFacet,
                        "facet " + std::to_string(next_row) + " contains no vertex (line " +
                            std::to_string(lineno) + ")");
        rows.push_back(std::move(row));
        ++next_row;
    }
    if (m < 0) throw Error(Errc::Parse, "empty input");
    if (next_row != m)
        throw Error(Errc::Parse, "expected " + std::to_string(m) + " rows, got " +
                                     std::to_string(next_row));
    return IncidenceMatrix::from_rows(int(n), std::move(rows));
}

IncidenceMatrix parse_incidence_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("rows"))
        throw Error(Errc::Parse, "JSON matrix needs fields m, n, rows");
    long m = j["m"].get<long>();
    long n = j["n"].get<long>();
    if (m < 1 || n < 1) throw Error(Errc::Parse, "m and n must be at least 1");
    if (!j["rows"].is_array() || long(j["rows"].size()) != m)
        throw Error(Errc::Parse, "rows must be an array of length m");
    std::vector<Bits> rows;
    rows.reserve(size_t(m));
    for (long f = 0; f < m; ++f) {
        Bits row{int(n)};
        for (const auto& v : j["rows"][size_t(f)]) {
            long x = v.get<long>();
            if (x < 0 || x >= n)
                throw Error(Errc::Parse,
                            "row " + std::to_string(f) + ": vertex " + std::to_string(x) +
                                " out of range");
            row.set(int(x));
        }
        if (row.none())
            throw Error(Errc::EmptyFacet, "facet " + std::to_string(f) + " contains no vertex");
        rows.push_back(std::move(row));
    }
    return IncidenceMatrix::from_rows(int(n), std::move(rows));
}

IncidenceMatrix parse_incidence_any(std::string_view text) {
    for (char c : text) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_incidence_json(text);
        break;
    }
    return parse_incidence(text);
}

std::string serialize_incidence(const IncidenceMatrix& A, WireFormat format) {
    if (format == WireFormat::Vfi) {
        std::string out = std::to_string(A.m) + " " + std::to_string(A.n) + "\n";
        for (const Bits& row : A.rows) {
            for (int v = 0; v < A.n; ++v) out += row.test(v) ? '1' : '0';
            out += '\n';
        }
        out.pop_back();  // canonical form: no trailing newline
        return out;
    }
    nlohmann::json j;
    j["m"] = A.m;
    j["n"] = A.n;
    auto rows = nlohmann::json::array();
    for (const Bits& row : A.rows) rows.push_back(row.elements());
    j["rows"] = std::move(rows);
    return j.dump();
}

Bits facets_containing(const IncidenceMatrix& A, const Bits& S) {
    Bits s = S;
    if (S.universe() != A.n) {
        for (int v = S.first(); v >= 0; v = S.next(v))
            if (v >= A.n)
                throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " out of range");
        s = Bits::from(A.n, S.elements());
    }
    Bits out(A.m);
    for (int f = 0; f < A.m; ++f)
        if (s.subset_of(A.rows[f])) out.set(f);
    return out;
}

Bits facets_containing(const IncidenceMatrix& A, const std::vector<int>& S) {
    Bits s(A.n);
    for (int v : S) {
        if (v < 0 || v >= A.n)
            throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return facets_containing(A, s);
}

ValidationReport validate(const IncidenceMatrix& A, const Limits& limits) {
    return validate(A, vertex_set_closure(A, limits.member_cap));
}

ValidationReport validate(const IncidenceMatrix& A, const VertexSetFamily& F) {
    ValidationReport rep;
    auto add = [&rep](const char* id, bool pass, std::string msg) {
        rep.checks.push_back({id, pass, std::move(msg)});
    };

    // C1: no all-zero row (enforced at construction, re-checked for reports)
    int zero_row = -1;
    for (int f = 0; f < A.m; ++f)
        if (A.rows[f].none()) zero_row = f;
    add("C1", zero_row < 0,
        zero_row < 0 ? "every facet contains a vertex"
                     : "facet " + std::to_string(zero_row) + " contains no vertex");

    // C2: columns pairwise distinct
    int dup_a = -1, dup_b = -1;
    {
        std::vector<Bits> cols;
        cols.reserve(size_t(A.n));
        for (int v = 0; v < A.n; ++v) cols.push_back(A.column(v));
        for (int v = 0; v < A.n && dup_a < 0; ++v)
            for (int w = v + 1; w < A.n; ++w)
                if (cols[size_t(v)] == cols[size_t(w)]) {
                    dup_a = v;
                    dup_b = w;
                    break;
                }
    }
    add("C2", dup_a < 0,
        dup_a < 0 ? "all columns pairwise distinct"
                  : "vertices " + std::to_string(dup_a) + " and " + std::to_string(dup_b) +
                        " lie in the same facets");

    VertexGraph G = vertex_graph(F);

    // C3: vertex graph connected (vacuous for n <= 2)
    bool c3 = A.n <= 2 || is_connected(G);
    add("C3", c3, c3 ? "vertex graph connected" : "vertex graph disconnected");

    // C4: every closure member induces a connected subgraph
    int bad_member = -1;
    if (A.n > 2) {
        for (size_t i = 0; i < F.members.size(); ++i)
            if (!connected_within(G, F.members[i])) {
                bad_member = int(i);
                break;
            }
    }
    add("C4", bad_member < 0,
        bad_member < 0 ? "every face set induces a connected subgraph"
                       : "closure member #" + std::to_string(bad_member) +
                             " induces a disconnected subgraph");

    rep.overall = true;
    for (const auto& c : rep.checks) rep.overall = rep.overall && c.pass;
    return rep;
}

}  // namespace facetlab
