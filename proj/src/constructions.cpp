#include "polychrome/constructions.hpp"

namespace polychrome {

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::OneFactor: return "f1";
        case FamilyKind::TwoFactor: return "f2";
        case FamilyKind::HamiltonianCycle: return "hc";
    }
    return "?";
}

FamilyKind parse_family(std::string_view name) {
    if (name == "f1") return FamilyKind::OneFactor;
    if (name == "f2") return FamilyKind::TwoFactor;
    if (name == "hc") return FamilyKind::HamiltonianCycle;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected f1, f2 or hc)");
}

void require_valid_order(FamilyKind kind, int n) {
    if (kind == FamilyKind::OneFactor) {
        if (n < 2 || n % 2 != 0) throw std::invalid_argument("1-factors need an even n >= 2");
    } else if (n < 3) {
        throw std::invalid_argument("2-factors and Hamiltonian cycles need n >= 3");
    }
}

int palette_size(FamilyKind kind, int n) {
    require_valid_order(kind, n);
    // satisfied(k) is monotone decreasing in k; find the last k that holds
    auto satisfied = [kind, n](int k) -> bool {
        const long long pow = 1LL << k;
        switch (kind) {
            case FamilyKind::OneFactor: return pow <= n;
            case FamilyKind::TwoFactor: return pow / 2 - 1 <= n;
            case FamilyKind::HamiltonianCycle: return 3 * pow <= 8LL * (n - 1);
        }
        return false;
    };
    int k = 1;
    while (satisfied(k + 1)) ++k;
    return k;
}

std::vector<int> class_sizes(FamilyKind kind, int n) {
    const int k = palette_size(kind, n);
    std::vector<int> sizes;
    if (kind == FamilyKind::OneFactor) {
        for (int t = 1; t < k; ++t) sizes.push_back(1 << (t - 1));
    } else if (k < 3) {
        sizes.push_back(1);
    } else if (k == 3) {
        sizes = {1, 1};
    } else {
        sizes = {1, 1, 1};
        for (int t = 4; t < k; ++t)
            sizes.push_back(kind == FamilyKind::TwoFactor ? (1 << (t - 2)) : 3 * (1 << (t - 4)));
    }
    int used = 0;
    for (int s : sizes) used += s;
    sizes.push_back(n - used);
    return sizes;
}

EdgeColoring build_ordered(std::span<const Color> main) {
    const int n = static_cast<int>(main.size());
    if (n < 2) throw std::invalid_argument("build_ordered needs at least two main colors");
    return EdgeColoring::from_function(n, [&](Vertex i, Vertex) { return main[i - 1]; });
}

EdgeColoring build(FamilyKind kind, int n) {
    auto sizes = class_sizes(kind, n);
    std::vector<Color> main;
    main.reserve(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < sizes.size(); ++t) main.insert(main.end(), static_cast<std::size_t>(sizes[t]), static_cast<Color>(t + 1));
    auto ordered = build_ordered(main);
    if (kind == FamilyKind::OneFactor || sizes.size() < 3) return ordered;
    return ordered.recolored(Edge(1, 3), 3);
}

EdgeColoring build_combed(UnitaryPrefix prefix, std::span<const Color> main) {
    const int n = static_cast<int>(main.size());
    const int size = prefix == UnitaryPrefix::Triple ? 3 : prefix == UnitaryPrefix::Quad ? 4 : 0;
    if (size == 0) return build_ordered(main);
    if (n < size) throw std::invalid_argument("unitary prefix longer than the vertex set");
    auto m = [&](Vertex v) { return main[v - 1]; };
    if (prefix == UnitaryPrefix::Triple) {
        if (m(1) == m(2) || m(2) == m(3) || m(1) == m(3))
            throw std::invalid_argument("unitary triple needs three distinct main colors");
    } else if (m(1) != m(2) || m(3) != m(4) || m(1) == m(3)) {
        throw std::invalid_argument("unitary quad needs main colors (a, a, b, b) with a != b");
    }
    return EdgeColoring::from_function(n, [&](Vertex i, Vertex j) -> Color {
        if (j > size) return m(i);
        if (prefix == UnitaryPrefix::Triple) {
            // v1 -> v3 -> v2 -> v1: each triangle edge carries its head's main color
            if (i == 1 && j == 2) return m(1);
            if (i == 1 && j == 3) return m(3);
            return m(2);
        }
        // color m(1) on the path v3 v1 v2 v4, color m(3) on v2 v3, v1 v4, v3 v4
        if ((i == 1 && j == 2) || (i == 1 && j == 3) || (i == 2 && j == 4)) return m(1);
        return m(3);
    });
}

}  // namespace polychrome
