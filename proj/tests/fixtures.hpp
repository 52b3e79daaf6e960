#pragma once

#include <memory>

#include "pgraph/suites.hpp"

// Balls at default bounds, built once per test binary.
inline pgraph::Workspace& shared_workspace() {
    static pgraph::Workspace ws(2);
    return ws;
}

struct Fixture {
    const pgraph::Universe& u;
    const pgraph::PantsGraphBall& b;
};

inline Fixture fixture(int g, int r) {
    auto c = pgraph::default_config({g, r});
    auto& ws = shared_workspace();
    return {ws.universe(c.surface, c.weight_bound), ws.ball(c)};
}

inline const pgraph::CellInventory& fixture_cells(int g, int r) {
    return shared_workspace().cells(pgraph::default_config({g, r}));
}

// Ball vertex reached from v by replacing a with the first available move.
inline std::optional<int> step(const pgraph::Universe& u, const pgraph::PantsGraphBall& b, int v, pgraph::CurveId a,
                               pgraph::CurveId avoid = -1) {
    for (const auto& m : pgraph::elementary_moves(u, b.vertices[v], a).moves)
        if (m.added != avoid)
            if (auto w = b.find(m.target)) return w;
    return std::nullopt;
}
