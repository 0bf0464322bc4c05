#include "polychrome/verify.hpp"

#include <stdexcept>
#include <string>

namespace polychrome {

PolyCertificate is_polychromatic(const EdgeColoring& c, FamilyKind kind, const HamiltonOptions& options) {
    PolyCertificate cert;
    for (Color t = 1; t <= c.k(); ++t) {
        if (auto w = find_member(kind, AllowedGraph::avoiding(c, t), options)) {
            cert.color = t;
            cert.witness = std::move(w);
            return cert;
        }
    }
    cert.polychromatic = true;
    cert.spot_check = find_member(kind, AllowedGraph::complete(c.n()), options);
    if (cert.spot_check) {
        cert.spot_edges.resize(static_cast<std::size_t>(c.k()));
        for (const Edge& e : cert.spot_check->edges) {
            Edge& slot = cert.spot_edges[c.color(e) - 1];
            if (slot.u == 0) slot = e;
        }
    }
    return cert;
}

bool confirms_violation(const EdgeColoring& c, const SubgraphWitness& w, Color t) {
    return is_valid_member(w, c.n()) && avoids_color(w, c, t);
}

namespace {

void require_present(const InheritedColoring& ic, Color t) {
    if (t < 1 || t > ic.k() || ic.members(t).empty())
        throw std::invalid_argument("color " + std::to_string(t) + " is not a main color");
}

void split(const InheritedColoring& ic, Color t, std::vector<Vertex>& xs, std::vector<Vertex>& ys) {
    for (Vertex v : ic.ordering().order()) (ic.main(v) == t ? xs : ys).push_back(v);
}

}  // namespace

SubgraphWitness adversarial_matching(const EdgeColoring& c, const InheritedColoring& ic, Color t) {
    const int n = ic.n();
    if (n % 2 != 0) throw std::invalid_argument("1-factors need even n");
    require_present(ic, t);
    for (int j = 1; j <= n - 1; ++j)
        if (2 * ic.prefix_count(t, j) > j)
            throw std::invalid_argument("strict majority condition holds for color " + std::to_string(t) +
                                        " at j = " + std::to_string(j));
    std::vector<Vertex> xs, ys;
    split(ic, t, xs, ys);
    SubgraphWitness w{FamilyKind::OneFactor, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) w.edges.emplace_back(ys[i], xs[i]);
    for (std::size_t i = xs.size(); i + 1 < ys.size(); i += 2) w.edges.emplace_back(ys[i], ys[i + 1]);
    std::sort(w.edges.begin(), w.edges.end());
    if (!confirms_violation(c, w, t)) throw std::logic_error("adversarial matching does not avoid color " + std::to_string(t));
    return w;
}

SubgraphWitness adversarial_hamcycle(const EdgeColoring& c, const InheritedColoring& ic, Color t) {
    const int n = ic.n();
    if (n < 3) throw std::invalid_argument("Hamiltonian cycles need n >= 3");
    require_present(ic, t);
    if (ic.class_has_unitary(t)) throw std::invalid_argument("class " + std::to_string(t) + " contains a unitary vertex");
    for (int j = 1; j <= n - 1; ++j)
        if (2 * ic.prefix_count(t, j) >= j)
            throw std::invalid_argument("weak majority condition holds for color " + std::to_string(t) +
                                        " at j = " + std::to_string(j));
    std::vector<Vertex> xs, ys;
    split(ic, t, xs, ys);
    std::vector<Vertex> cycle;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cycle.push_back(ys[i]);
        cycle.push_back(xs[i]);
    }
    cycle.insert(cycle.end(), ys.begin() + static_cast<std::ptrdiff_t>(xs.size()), ys.end());
    SubgraphWitness w{FamilyKind::HamiltonianCycle, {}};
    for (std::size_t i = 0; i < cycle.size(); ++i) w.edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    std::sort(w.edges.begin(), w.edges.end());
    if (!confirms_violation(c, w, t)) throw std::logic_error("adversarial cycle does not avoid color " + std::to_string(t));
    return w;
}

int majority_upper_bound(const MajorityCertificate& cert, MajorityMode mode, int unitary_count) {
    if (cert.mode != mode) throw std::invalid_argument("certificate was computed in the other mode");
    if (!cert.complete()) throw std::invalid_argument("certificate has failing colors");
    const long long n = cert.n;
    int k = 0;
    if (mode == MajorityMode::Strict) {
        const long long slack = n % 2 == 0 ? 0 : 1;
        while ((1LL << (k + 1)) <= n + slack) ++k;
        return k;
    }
    int unitary_colors = 0;
    switch (unitary_count) {
        case 0: unitary_colors = 0; break;
        case 3: unitary_colors = 3; break;
        case 4: unitary_colors = 2; break;
        default: throw std::invalid_argument("unitary vertex count must be 0, 3 or 4");
    }
    const long long budget = n - unitary_count;
    while (budget >= 1 && (1LL << k) <= budget) ++k;  // 2^(k'-1) <= budget
    return k + unitary_colors;
}

}  // namespace polychrome
