#include "pdslab/cayley_graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "pdslab/parallel.hpp"

namespace pdslab {

DenseGraph::DenseGraph(std::uint32_t n)
    : n_(n), wpr_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * wpr_, 0) {}

void DenseGraph::set_edge(std::uint32_t u, std::uint32_t w) {
    if (u == w) throw std::invalid_argument("DenseGraph: no loops");
    bits_[u * wpr_ + (w >> 6)] |= std::uint64_t{1} << (w & 63);
    bits_[w * wpr_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void DenseGraph::clear_edge(std::uint32_t u, std::uint32_t w) {
    bits_[u * wpr_ + (w >> 6)] &= ~(std::uint64_t{1} << (w & 63));
    bits_[w * wpr_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

bool DenseGraph::adjacent(std::uint32_t u, std::uint32_t w) const {
    return (bits_[u * wpr_ + (w >> 6)] >> (w & 63)) & 1;
}

std::uint32_t DenseGraph::degree(std::uint32_t u) const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < wpr_; ++i) d += std::popcount(bits_[u * wpr_ + i]);
    return d;
}

std::uint64_t DenseGraph::edge_count() const {
    std::uint64_t total = 0;
    for (std::uint32_t u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

std::uint32_t DenseGraph::common_neighbors(std::uint32_t u, std::uint32_t w) const {
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rw = row(w);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < wpr_; ++i) c += std::popcount(ru[i] & rw[i]);
    return c;
}

SrgCheckOutcome srg_check(const DenseGraph& g, int threads) {
    SrgCheckOutcome out;
    const std::uint32_t n = g.order();
    if (n < 3) {
        out.witness = "graph too small";
        return out;
    }
    const std::uint32_t k = g.degree(0);
    for (std::uint32_t u = 1; u < n; ++u)
        if (g.degree(u) != k) {
            out.witness = "vertex " + std::to_string(u) + " has degree " +
                          std::to_string(g.degree(u)) + ", vertex 0 has " + std::to_string(k);
            return out;
        }

    // Reference counts from the first pair of each kind seen from vertex 0.
    std::int64_t lambda = -1, mu = -1;
    for (std::uint32_t w = 1; w < n && (lambda < 0 || mu < 0); ++w)
        (g.adjacent(0, w) ? lambda : mu) = g.common_neighbors(0, w);
    if (lambda < 0 || mu < 0) {
        out.witness = "graph is complete or empty";
        return out;
    }

    struct Violation {
        std::uint32_t u = 0, w = 0;
        std::uint32_t count = 0;
        bool found = false;
    };
    std::vector<Violation> hits(std::max<std::size_t>(
        1, std::min<std::uint64_t>(threads < 1 ? 1 : threads, n)));
    parallel_ranges(n, threads, [&](std::uint64_t ub, std::uint64_t ue, std::size_t part) {
        for (std::uint32_t u = static_cast<std::uint32_t>(ub); u < ue; ++u) {
            for (std::uint32_t w = u + 1; w < n; ++w) {
                const std::uint32_t c = g.common_neighbors(u, w);
                const std::int64_t want = g.adjacent(u, w) ? lambda : mu;
                if (c != want) {
                    hits[part] = Violation{u, w, c, true};
                    return;
                }
            }
        }
    });
    for (const Violation& hit : hits) {
        if (!hit.found) continue;
        out.witness = "pair (" + std::to_string(hit.u) + ", " + std::to_string(hit.w) +
                      ") has " + std::to_string(hit.count) + " common neighbors";
        return out;
    }

    out.ok = true;
    out.params = PdsParams{n, k, lambda, mu};
    out.pairs_checked = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return out;
}

CayleyGraph::CayleyGraph(const PdsCandidate& c) : shape_(c.shape), connection_(c.elements) {
    if (c.degenerate())
        throw std::invalid_argument("CayleyGraph: degenerate candidate has no graph");
    if (connection_.front().packed == 0)
        throw std::invalid_argument("CayleyGraph: connection set contains the identity");
    indicator_.assign((order() + 63) / 64, 0);
    for (const GroupElement g : connection_) {
        if (!c.contains(shape_.negate(g)))
            throw std::invalid_argument("CayleyGraph: connection set is not symmetric");
        indicator_[g.packed >> 6] |= std::uint64_t{1} << (g.packed & 63);
    }
    if (order() <= 4096) {
        DenseGraph dense(static_cast<std::uint32_t>(order()));
        for (std::uint64_t u = 0; u < order(); ++u) {
            for (const GroupElement d : connection_) {
                const std::uint64_t w = shape_.add(GroupElement{u}, d).packed;
                if (u < w) dense.set_edge(static_cast<std::uint32_t>(u),
                                          static_cast<std::uint32_t>(w));
            }
        }
        dense_ = std::move(dense);
    }
}

bool CayleyGraph::adjacent(std::uint64_t u, std::uint64_t w) const {
    if (u == w) return false;
    const std::uint64_t d = shape_.subtract(GroupElement{u}, GroupElement{w}).packed;
    return (indicator_[d >> 6] >> (d & 63)) & 1;
}

std::vector<std::uint64_t> CayleyGraph::neighbors(std::uint64_t u) const {
    std::vector<std::uint64_t> out;
    out.reserve(connection_.size());
    for (const GroupElement d : connection_)
        out.push_back(shape_.add(GroupElement{u}, d).packed);
    std::sort(out.begin(), out.end());
    return out;
}

SrgCheckOutcome CayleyGraph::srg_check(int threads, std::uint64_t sample_pairs) const {
    if (dense_) return pdslab::srg_check(*dense_, threads);

    // Sampled check through the group structure: the common-neighbor count of
    // (u, w) depends only on u - w, so counts are memoized per difference.
    SrgCheckOutcome out;
    const std::uint64_t v = order();
    auto count_for = [&](std::uint64_t delta) {
        std::uint32_t c = 0;
        for (const GroupElement d : connection_) {
            const std::uint64_t y = shape_.subtract(d, GroupElement{delta}).packed;
            c += (indicator_[y >> 6] >> (y & 63)) & 1;
        }
        return c;
    };
    const std::int64_t lambda = count_for(connection_.front().packed);
    std::uint64_t non_member = 1;
    while (adjacent(non_member, 0)) ++non_member;
    const std::int64_t mu = count_for(non_member);

    std::unordered_map<std::uint64_t, std::uint32_t> memo;
    std::mt19937_64 rng(UINT64_C(0x9e3779b97f4a7c15));  // fixed seed: deterministic sample
    std::uniform_int_distribution<std::uint64_t> pick(0, v - 1);
    for (std::uint64_t i = 0; i < sample_pairs; ++i) {
        const std::uint64_t u = pick(rng);
        const std::uint64_t w = pick(rng);
        if (u == w) continue;
        const std::uint64_t delta = shape_.subtract(GroupElement{u}, GroupElement{w}).packed;
        auto it = memo.find(delta);
        if (it == memo.end()) it = memo.emplace(delta, count_for(delta)).first;
        const bool member = (indicator_[delta >> 6] >> (delta & 63)) & 1;
        const std::int64_t want = member ? lambda : mu;
        if (it->second != want) {
            out.witness = "pair (" + std::to_string(u) + ", " + std::to_string(w) + ") has " +
                          std::to_string(it->second) + " common neighbors";
            return out;
        }
        ++out.pairs_checked;
    }
    out.ok = true;
    out.params = PdsParams{v, degree(), lambda, mu};
    return out;
}

SrgFingerprint fingerprint(const CayleyGraph& g, const PdsParams& params) {
    SrgFingerprint fp;
    fp.params = params;
    const auto [r, s] = srg_eigenvalues(params);
    const auto [mr, ms] = srg_multiplicities(params);
    fp.eigenvalue_r = r;
    fp.eigenvalue_s = s;
    fp.multiplicity_r = mr;
    fp.multiplicity_s = ms;

    fp.triangle_count = params.v * params.k * static_cast<std::uint64_t>(params.lambda) / 6;
    const auto& conn = g.connection_set();
    if (conn.size() * conn.size() <= 64u * 1024 * 1024) {
        // Triangles through vertex 0: ordered member pairs at difference in D.
        std::uint64_t ordered = 0;
        for (const GroupElement d1 : conn)
            for (const GroupElement d2 : conn)
                if (d1 != d2 && g.adjacent(d1.packed, d2.packed)) ++ordered;
        if (ordered != params.k * static_cast<std::uint64_t>(params.lambda))
            throw std::logic_error("fingerprint: direct triangle count disagrees with k*lambda");
    }

    // FNV-1a over the common-neighbor counts of the canonical pair sample
    // (0, u) for u = 1 .. min(v-1, 512).
    std::uint64_t h = UINT64_C(14695981039346656037);
    const std::uint64_t limit = std::min<std::uint64_t>(g.order() - 1, 512);
    for (std::uint64_t u = 1; u <= limit; ++u) {
        std::uint32_t c = 0;
        for (const GroupElement d : conn)
            c += g.adjacent(u, d.packed) ? 1 : 0;
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (c >> (8 * byte)) & 0xffu;
            h *= UINT64_C(1099511628211);
        }
    }
    fp.local_hash = h;
    return fp;
}

} // namespace pdslab
