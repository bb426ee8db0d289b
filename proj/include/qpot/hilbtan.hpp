#ifndef QPOT_HILBTAN_HPP
#define QPOT_HILBTAN_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/linalg.hpp"
#include "qpot/poly.hpp"
#include "qpot/potential.hpp"

namespace qpot {

using Exp3 = std::array<std::uint16_t, 3>;

inline std::string monomial_name(const Exp3& e) {
    static const char* vars[3] = {"x", "y", "z"};
    std::string s;
    for (std::size_t k = 0; k < 3; ++k) {
        if (e[k] == 0) continue;
        s += vars[k];
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

/**
 * A monomial ideal of colength n in C[x, y, z], stored through its staircase:
 * the monomials outside the ideal, kept sorted. They form a basis of O/I.
 */
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::vector<Exp3> staircase) : staircase_(std::move(staircase)) {
        std::sort(staircase_.begin(), staircase_.end());
        staircase_.erase(std::unique(staircase_.begin(), staircase_.end()), staircase_.end());
        if (staircase_.empty()) throw InputError("staircase must be nonempty");
        for (const auto& s : staircase_)
            for (std::size_t k = 0; k < 3; ++k)
                if (s[k] > 0) {
                    Exp3 t = s;
                    --t[k];
                    if (!contains(t)) throw InputError("staircase is not closed under division: " + monomial_name(s));
                }
    }

    std::size_t n() const { return staircase_.size(); }
    const std::vector<Exp3>& staircase() const { return staircase_; }
    bool contains(const Exp3& e) const { return std::binary_search(staircase_.begin(), staircase_.end(), e); }
    std::size_t index_of(const Exp3& e) const {
        auto it = std::lower_bound(staircase_.begin(), staircase_.end(), e);
        if (it == staircase_.end() || *it != e) throw InputError("monomial not in staircase: " + monomial_name(e));
        return static_cast<std::size_t>(it - staircase_.begin());
    }

    /// Monomials outside the staircase all of whose divisors by one variable lie inside it.
    std::vector<Exp3> minimal_generators() const {
        std::set<Exp3> gens;
        for (const auto& s : staircase_)
            for (std::size_t k = 0; k < 3; ++k) {
                Exp3 c = s;
                ++c[k];
                if (contains(c)) continue;
                bool minimal = true;
                for (std::size_t j = 0; j < 3 && minimal; ++j)
                    if (c[j] > 0) {
                        Exp3 d = c;
                        --d[j];
                        minimal = contains(d);
                    }
                if (minimal) gens.insert(c);
            }
        return {gens.begin(), gens.end()};
    }

    std::string staircase_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < staircase_.size(); ++i) s += (i ? "," : "") + monomial_name(staircase_[i]);
        return s + "}";
    }
    std::string generators_string() const {
        const auto g = minimal_generators();
        std::string s = "(";
        for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + monomial_name(g[i]);
        return s + ")";
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.staircase_ == b.staircase_; }
    friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) { return a.staircase_ < b.staircase_; }

private:
    std::vector<Exp3> staircase_;
};

/// All staircases of size n, built by adding one outer corner at a time; sorted.
inline std::vector<MonomialIdeal> enumerate_monomial_ideals(std::size_t n) {
    if (n < 1 || n > 8) throw InputError("enumerate_monomial_ideals supports 1 <= n <= 8");
    std::set<std::vector<Exp3>> level{{Exp3{0, 0, 0}}};
    for (std::size_t size = 1; size < n; ++size) {
        std::set<std::vector<Exp3>> next;
        for (const auto& st : level) {
            const MonomialIdeal ideal(st);
            for (const auto& g : ideal.minimal_generators()) {
                std::vector<Exp3> grown = st;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), g), g);
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<MonomialIdeal> out;
    for (const auto& st : level) out.emplace_back(st);
    return out;
}

/// F1 -> F0 -> I -> 0 with F0 on the minimal generators and all pairwise lcm syzygies.
struct Presentation {
    struct Syzygy {
        std::size_t i = 0, j = 0;
        Exp3 mi{}, mj{}; ///< mi * g_i - mj * g_j = 0
    };
    std::vector<Exp3> generators;
    std::vector<Syzygy> relations;

    /// Each relation annihilates the generator column as polynomials.
    bool verify() const {
        auto mono = [](const Exp3& e) { return Poly::monomial(Exponents(e.begin(), e.end())); };
        auto times = [](const Exp3& a, const Exp3& b) { return Exp3{std::uint16_t(a[0] + b[0]), std::uint16_t(a[1] + b[1]), std::uint16_t(a[2] + b[2])}; };
        for (const auto& r : relations) {
            const Poly lhs = mono(times(r.mi, generators.at(r.i))) - mono(times(r.mj, generators.at(r.j)));
            if (!lhs.is_zero()) return false;
        }
        return true;
    }
};

inline Presentation presentation(const MonomialIdeal& ideal) {
    Presentation p;
    p.generators = ideal.minimal_generators();
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        for (std::size_t j = i + 1; j < p.generators.size(); ++j) {
            Presentation::Syzygy s;
            s.i = i;
            s.j = j;
            for (std::size_t k = 0; k < 3; ++k) {
                const auto l = std::max(p.generators[i][k], p.generators[j][k]);
                s.mi[k] = static_cast<std::uint16_t>(l - p.generators[i][k]);
                s.mj[k] = static_cast<std::uint16_t>(l - p.generators[j][k]);
            }
            p.relations.push_back(s);
        }
    return p;
}

/// A, B, C act by x, y, z on the staircase basis of O/I; V is the class of 1.
inline FramedRep ideal_to_rep(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.n();
    FramedRep rho = FramedRep::zero(n, 1);
    std::array<ScalarMatrix*, 3> mats{&rho.A, &rho.B, &rho.C};
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t k = 0; k < 3; ++k) {
            Exp3 t = ideal.staircase()[s];
            ++t[k];
            if (ideal.contains(t)) (*mats[k])(ideal.index_of(t), s) = Scalar(1);
        }
    rho.V(ideal.index_of({0, 0, 0}), 0) = Scalar(1);
    return rho;
}

/**
 * dim Hom_O(I, O/I): a map is a choice of images of the generators in O/I
 * killed by every syzygy, so this is the kernel dimension of
 * (O/I)^m -> (O/I)^{#relations}.
 */
inline std::size_t hom_dim(const MonomialIdeal& ideal) {
    const Presentation p = presentation(ideal);
    const std::size_t n = ideal.n(), m = p.generators.size();
    ScalarMatrix map(p.relations.size() * n, m * n);
    auto mult = [&](const Exp3& mono, std::size_t basis) -> std::ptrdiff_t {
        const Exp3& s = ideal.staircase()[basis];
        const Exp3 t{std::uint16_t(s[0] + mono[0]), std::uint16_t(s[1] + mono[1]), std::uint16_t(s[2] + mono[2])};
        return ideal.contains(t) ? static_cast<std::ptrdiff_t>(ideal.index_of(t)) : -1;
    };
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const auto& rel = p.relations[r];
        for (std::size_t b = 0; b < n; ++b) {
            if (auto t = mult(rel.mi, b); t >= 0) map(r * n + static_cast<std::size_t>(t), rel.i * n + b) += Scalar(1);
            if (auto t = mult(rel.mj, b); t >= 0) map(r * n + static_cast<std::size_t>(t), rel.j * n + b) -= Scalar(1);
        }
    }
    return m * n - rank(map);
}

struct HessianTangent {
    std::size_t coordinates = 0;
    std::size_t hessian_rank = 0;
    std::size_t gauge_rank = 0;
    std::size_t tangent = 0;     ///< dim ker H - n^2
    std::size_t obstruction = 0; ///< (N - gauge rank) - rank H
};

/// Throws InvariantError if the gauge directions leave ker H or have rank below n^2.
inline HessianTangent hessian_tangent(const MonomialIdeal& ideal) {
    const FramedRep rho = ideal_to_rep(ideal);
    const std::size_t n = rho.n;
    const ScalarMatrix h = hessian(rho).gram();
    const ScalarMatrix g = gauge_matrix(rho);
    if (!(h * g).is_zero()) throw InvariantError("gauge directions are not in the Hessian kernel");
    HessianTangent t;
    t.coordinates = rho.coordinate_count();
    t.gauge_rank = rank(g);
    if (t.gauge_rank != n * n)
        throw InvariantError("gauge action has rank " + std::to_string(t.gauge_rank) + " < n^2 = " +
                             std::to_string(n * n));
    t.hessian_rank = rank(h);
    t.tangent = t.coordinates - t.hessian_rank - t.gauge_rank;
    t.obstruction = (t.coordinates - t.gauge_rank) - t.hessian_rank;
    return t;
}

inline std::size_t hessian_tangent_dim(const MonomialIdeal& ideal) { return hessian_tangent(ideal).tangent; }

struct TangentComparison {
    std::string staircase;
    std::string generators;
    std::size_t hom_dim = 0;
    std::size_t hess_dim = 0;
    std::size_t obstruction_dim = 0;
    bool equal() const { return hom_dim == hess_dim && hess_dim == obstruction_dim; }
};

struct TangentReport {
    std::size_t n = 0;
    std::vector<TangentComparison> ideals; ///< in enumeration order
    bool all_equal() const {
        for (const auto& c : ideals)
            if (!c.equal()) return false;
        return !ideals.empty();
    }
};

/// Both tangent counts for every monomial ideal of colength n (one task per ideal).
inline TangentReport compare_tangents(std::size_t n) {
    if (n < 1 || n > 6) throw InputError("compare_tangents supports 1 <= n <= 6");
    const auto ideals = enumerate_monomial_ideals(n);
    std::vector<std::future<TangentComparison>> jobs;
    for (const auto& ideal : ideals)
        jobs.push_back(std::async(std::launch::async, [ideal] {
            TangentComparison c;
            c.staircase = ideal.staircase_string();
            c.generators = ideal.generators_string();
            c.hom_dim = hom_dim(ideal);
            const HessianTangent t = hessian_tangent(ideal);
            c.hess_dim = t.tangent;
            c.obstruction_dim = t.obstruction;
            return c;
        }));
    TangentReport rep;
    rep.n = n;
    for (auto& j : jobs) rep.ideals.push_back(j.get());
    return rep;
}

} // namespace qpot

#endif // QPOT_HILBTAN_HPP
