#pragma once

#include <string>
#include <vector>

#include "monopath/dag.hpp"

namespace fixtures {

using monopath::Dag;
using monopath::DegreeProfile;
using monopath::Edge;

inline Dag on_path(int n, std::vector<Edge> arcs) {
    for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
    return Dag(n, std::move(arcs), DegreeProfile::ThreeRegular);
}

inline Dag truncated_tetrahedron() {
    return on_path(12, {{1, 3}, {1, 12}, {2, 8}, {4, 6}, {5, 11}, {7, 9}, {10, 12}});
}

inline Dag wedge12() { return on_path(12, {{1, 3}, {1, 12}, {2, 5}, {4, 7}, {6, 9}, {8, 11}, {10, 12}}); }

inline Dag six_vertex() {
    return Dag(6, {{1, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}, {5, 6}},
               DegreeProfile::ThreeRegular);
}

inline Dag single_edge() { return Dag(2, {{1, 2}}, DegreeProfile::BoundaryDeg2); }

inline std::vector<std::string> strs(const std::vector<monopath::BigUint>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace fixtures
