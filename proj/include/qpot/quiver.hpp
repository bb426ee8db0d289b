#ifndef QPOT_QUIVER_HPP
#define QPOT_QUIVER_HPP

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qpot/error.hpp"
#include "qpot/scalar.hpp"

namespace qpot {

struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
};

class Quiver {
public:
    Quiver(std::size_t vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        std::set<std::string> labels;
        for (const auto& e : edges_) {
            if (e.source >= vertex_count_ || e.target >= vertex_count_)
                throw InputError("edge '" + e.label + "' has an endpoint out of range");
            if (!labels.insert(e.label).second) throw InputError("duplicate edge label '" + e.label + "'");
        }
    }

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t edges_between(std::size_t from, std::size_t to) const {
        std::size_t c = 0;
        for (const auto& e : edges_)
            if (e.source == from && e.target == to) ++c;
        return c;
    }
    std::size_t loops_at(std::size_t v) const { return edges_between(v, v); }

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
};

using DimVector = std::vector<long>;
using StabilityParam = std::vector<mpq_class>;
using Point3 = std::array<Scalar, 3>;

/// Sum of C^{a_i} (x) O_{p_i} over pairwise distinct points p_i.
struct PolystableData {
    std::vector<Point3> points;
    std::vector<std::size_t> mults;

    std::size_t k() const { return points.size(); }
    std::size_t n() const {
        std::size_t s = 0;
        for (auto a : mults) s += a;
        return s;
    }

    void validate() const {
        if (points.empty()) throw InputError("polystable data needs at least one point");
        if (points.size() != mults.size()) throw InputError("points and multiplicities differ in length");
        for (auto a : mults)
            if (a == 0) throw InputError("multiplicities must be positive");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw InputError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
};

/// Vertex 0 is the framing vertex; loops A, B, C sit at vertex 1; r arrows 0 -> 1.
inline Quiver framed_3loop(std::size_t r) {
    if (r == 0) throw InputError("framed 3-loop quiver needs r >= 1");
    std::vector<Edge> edges{{1, 1, "A"}, {1, 1, "B"}, {1, 1, "C"}};
    for (std::size_t j = 0; j < r; ++j) edges.push_back({0, 1, "v" + std::to_string(j + 1)});
    return Quiver(2, std::move(edges));
}

/// k disjoint 3-loop quivers; loop e_{i,1..3} at vertex i-1.
inline Quiver ext_quiver(const PolystableData& data) {
    data.validate();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < data.k(); ++i)
        for (int l = 1; l <= 3; ++l)
            edges.push_back({i, i, "e_{" + std::to_string(i + 1) + "," + std::to_string(l) + "}"});
    return Quiver(data.k(), std::move(edges));
}

inline mpq_class pairing(const DimVector& d, const StabilityParam& theta) {
    if (d.size() != theta.size()) throw InputError("dimension vector and stability parameter differ in length");
    mpq_class s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        mpq_class t = theta[i];
        t.canonicalize();
        s += mpq_class(d[i]) * t;
    }
    return s;
}

/// (n, -1, ..., -1) for multiplicities a with sum n.
inline StabilityParam framed_theta(const std::vector<long>& a) {
    long n = 0;
    for (auto x : a) n += x;
    StabilityParam t{mpq_class(n)};
    for (std::size_t i = 0; i < a.size(); ++i) t.emplace_back(-1);
    return t;
}

struct SubvectorEntry {
    DimVector d;
    mpq_class pairing;
};

struct SubvectorScanReport {
    std::vector<long> mults;
    StabilityParam theta;
    std::size_t subvectors_scanned = 0;
    std::vector<SubvectorEntry> nonnegative;   ///< every subvector with d . theta >= 0
    /// subvectors (1, a_1, .., d_i, .., a_k) with d_i < a_i; pairing should equal a_i - d_i
    std::vector<SubvectorEntry> single_block_drops;
    std::size_t counterexamples = 0;
    bool full_vector_slope_zero = false;
    bool confirmed() const { return counterexamples == 0 && full_vector_slope_zero; }
};

/**
 * Exhaustive scan over sub-dimension-vectors (d_inf, d_1..d_k), 0 <= d_i <= a_i,
 * against theta = (n, -1, .., -1). A counterexample is a vector with d_inf = 1
 * and some d_i < a_i whose pairing is not strictly positive, or a single-block
 * drop whose pairing differs from a_i - d_i.
 */
inline SubvectorScanReport destabilizing_subvector_scan(const std::vector<long>& a) {
    if (a.empty()) throw InputError("scan needs at least one multiplicity");
    for (auto x : a)
        if (x < 1) throw InputError("multiplicities must be >= 1");
    SubvectorScanReport rep;
    rep.mults = a;
    rep.theta = framed_theta(a);
    const std::size_t k = a.size();

    DimVector full{1};
    full.insert(full.end(), a.begin(), a.end());
    rep.full_vector_slope_zero = pairing(full, rep.theta) == 0;

    DimVector d(k + 1, 0);
    while (true) {
        ++rep.subvectors_scanned;
        const mpq_class p = pairing(d, rep.theta);
        if (p >= 0) rep.nonnegative.push_back({d, p});
        bool some_short = false;
        std::size_t short_count = 0, short_index = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (d[i + 1] < a[i]) {
                some_short = true;
                ++short_count;
                short_index = i;
            }
        if (d[0] == 1 && some_short && p <= 0) ++rep.counterexamples;
        if (d[0] == 1 && short_count == 1) {
            rep.single_block_drops.push_back({d, p});
            if (p != mpq_class(a[short_index] - d[short_index + 1])) ++rep.counterexamples;
        }
        // odometer increment: d_inf in {0,1}, d_i in [0, a_i]
        std::size_t pos = 0;
        while (pos <= k) {
            const long cap = pos == 0 ? 1 : a[pos - 1];
            if (d[pos] < cap) {
                ++d[pos];
                break;
            }
            d[pos] = 0;
            ++pos;
        }
        if (pos > k) break;
    }
    return rep;
}

} // namespace qpot

#endif // QPOT_QUIVER_HPP
