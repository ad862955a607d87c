#include "pdslab/candidate.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "pdslab/parallel.hpp"
#include "pdslab/quadratic_form.hpp"

namespace pdslab {

bool PdsCandidate::contains(GroupElement g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

PdsParams expected_pds_params(int ell, int j) {
    const std::uint64_t ql = std::uint64_t{1} << (2 * ell);        // 4^l
    const std::uint64_t qlm1 = std::uint64_t{1} << (2 * ell - 2);  // 4^{l-1}
    PdsParams p;
    p.v = ql * ql;
    if (j % 2 == 1) {
        p.k = (ql + 1) * (qlm1 - 1);
        p.lambda = static_cast<std::int64_t>(qlm1 * qlm1) - 3 * static_cast<std::int64_t>(qlm1) - 2;
        p.mu = static_cast<std::int64_t>(qlm1 * qlm1) - static_cast<std::int64_t>(qlm1);
    } else {
        p.k = (ql - 1) * (qlm1 + 1);
        p.lambda = static_cast<std::int64_t>(qlm1 * qlm1) + 3 * static_cast<std::int64_t>(qlm1) - 2;
        p.mu = static_cast<std::int64_t>(qlm1 * qlm1) + static_cast<std::int64_t>(qlm1);
    }
    return p;
}

PdsCandidate build_candidate(int ell, int j, int k, int threads) {
    if (ell < 1) throw std::invalid_argument("build_candidate: ell must be >= 1");
    if (j < 0 || j > ell) throw std::invalid_argument("build_candidate: need 0 <= j <= ell");
    if (k < 0 || k > j)
        throw std::invalid_argument("build_candidate: need k <= j (lifted pairs must stay "
                                    "inside the elliptic block)");

    PdsCandidate c;
    c.shape = GroupShape(ell, k);
    c.j = j;
    const QuadraticForm form(ell, j);
    c.epsilon = form.epsilon();
    c.expected = expected_pds_params(ell, j);

    const std::uint64_t total = c.shape.order();
    std::vector<std::vector<GroupElement>> parts(
        std::max<std::size_t>(1, std::min<std::uint64_t>(threads < 1 ? 1 : threads, total)));
    parallel_ranges(total, threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t part) {
        auto& out = parts[part];
        FieldVector v(form.dimension());
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx == 0 || !form.evaluate_packed(idx).is_zero()) continue;
            for (int i = 0; i < form.dimension(); ++i)
                v[i] = Gf4(static_cast<std::uint8_t>((idx >> (2 * i)) & 3u));
            out.push_back(c.shape.lift(v));
        }
    });
    for (auto& part : parts)
        c.elements.insert(c.elements.end(), part.begin(), part.end());
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

PdsCandidate apply_form_equivalence(const PdsCandidate& c) {
    if (c.shape.k > c.j - 2)
        throw std::invalid_argument("apply_form_equivalence: need k <= j - 2");
    const QuadraticForm form(c.shape.ell, c.j);
    PdsCandidate out;
    out.shape = c.shape;
    out.j = c.j - 2;
    out.epsilon = c.epsilon;  // parity unchanged
    out.expected = c.expected;
    out.elements.reserve(c.elements.size());
    for (const GroupElement g : c.elements)
        out.elements.push_back(out.shape.lift(form.equivalence_map_inverse(c.shape.unlift(g))));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::string canonical_json(const PdsCandidate& c) {
    nlohmann::json doc;
    doc["ell"] = c.shape.ell;
    doc["j"] = c.j;
    doc["k"] = c.shape.k;
    doc["epsilon"] = c.epsilon;
    doc["expected_params"] = {c.expected.v, c.expected.k, c.expected.lambda, c.expected.mu};
    auto& els = doc["elements"] = nlohmann::json::array();
    for (const GroupElement g : c.elements) els.push_back(g.packed);
    return doc.dump() + "\n";  // nlohmann::json orders keys; dump() has no whitespace
}

PdsCandidate candidate_from_json_text(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    for (const char* key : {"ell", "j", "k", "epsilon", "expected_params", "elements"})
        if (!doc.contains(key)) throw ValidationError(std::string("missing field: ") + key);

    const int ell = doc.at("ell").get<int>();
    const int j = doc.at("j").get<int>();
    const int k = doc.at("k").get<int>();
    if (ell < 1 || j < 0 || j > ell || k < 0 || k > j)
        throw ValidationError("parameters out of range: need 0 <= k <= j <= ell");

    PdsCandidate c;
    c.shape = GroupShape(ell, k);
    c.j = j;
    c.epsilon = doc.at("epsilon").get<int>();
    if (c.epsilon != (j % 2 == 1 ? -1 : +1))
        throw ValidationError("epsilon does not match the parity of j");

    const auto params = doc.at("expected_params");
    if (!params.is_array() || params.size() != 4)
        throw ValidationError("expected_params must be [v, k, lambda, mu]");
    c.expected = PdsParams{params[0].get<std::uint64_t>(), params[1].get<std::uint64_t>(),
                           params[2].get<std::int64_t>(), params[3].get<std::int64_t>()};
    if (c.expected != expected_pds_params(ell, j))
        throw ValidationError("expected_params do not match the (ell, j) construction");

    const auto& els = doc.at("elements");
    if (!els.is_array()) throw ValidationError("elements must be an array");
    c.elements.reserve(els.size());
    for (const auto& e : els) {
        const GroupElement g{e.get<std::uint64_t>()};
        if (!c.shape.contains(g)) throw ValidationError("element out of group range");
        if (g.packed == 0) throw ValidationError("identity element in candidate");
        if (!c.elements.empty() && !(c.elements.back() < g))
            throw ValidationError("elements not strictly ascending");
        c.elements.push_back(g);
    }
    for (const GroupElement g : c.elements)
        if (!c.contains(c.shape.negate(g)))
            throw ValidationError("candidate is not closed under negation");
    return c;
}

void save_candidate(const PdsCandidate& c, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << canonical_json(c);
}

PdsCandidate load_candidate(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return candidate_from_json_text(text);
}

} // namespace pdslab
