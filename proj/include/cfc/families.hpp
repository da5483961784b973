#pragma once

#include <span>
#include <utility>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

/// S_n: center 0, leaves 1..n-1. Requires n >= 2.
Graph star(int n);

/// T(n1,n2): adjacent centers 0 and 1 of degrees n1+1 and n2+1.
/// Requires n1 >= n2 >= 1.
Graph double_star(int n1, int n2);

/// Diameter-4 tree: center 0, branch vertices 1..k where branch i has
/// p[i]-1 leaf children, plus `ell` leaves on the center.
/// Requires k >= 2, every p[i] >= 2, ell >= 0.
Graph diam4_tree(std::span<const int> p, int ell);

/// Triangle 0-1-2 with two pendant vertices on each corner (n=9, m=9).
Graph figure1_graph();

/// G_l with the two-coloring that certifies cfc(G_l) = 2.
///
/// Vertices: u1 = 0, u2 = 1, v_1..v_{l+1} = 2..l+2, each v_i adjacent to
/// both u1 and u2; v_2..v_{l+1} each carry two pendant leaves. Pendant pairs
/// get colors 1 and 2, u1 v_i -> 1 and u2 v_i -> 2 for i >= 3; the four
/// spokes at v_1, v_2 take the first of the 16 completions that passes the
/// checker. Throws cfc::Error if none does. Requires l >= 2.
std::pair<Graph, EdgeColoring> g_family(int l);

/// H_l, a diameter-4 graph whose bridge forest has l components of cfc 2.
/// For l = 2 the eight-vertex graph x1..x8 (ids 0..7): x1x2, x2x3, x3x4,
/// x3x5, x3x7, x5x7, x6x7, x7x8. For l = 3 the same graph with two pendant
/// leaves (ids 8, 9) on x5. For l >= 4: u1 = 0, u2 = 1 joined through
/// v_1..v_l, each v_i with two pendant leaves. Requires l >= 2.
Graph h_family(int l);

}  // namespace cfc
